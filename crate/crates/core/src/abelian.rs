//! Isomorphism classes of finite abelian groups, stored as a map from
//! primes to the partition type of the Sylow subgroup.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, ParseError, Result};
use crate::partitions::Partition;
use crate::smith::smith_diagonal;

pub mod oracle;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    prime_parts: BTreeMap<u64, Partition>,
}

/// Prime factorization by trial division, as (p, exponent) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(n: u64) -> Self {
        Self::canonicalize(&[n]).expect("cyclic order must be positive")
    }

    /// The class of Z/f_1 × … × Z/f_k; ones are dropped, order is irrelevant.
    pub fn canonicalize(factors: &[u64]) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::Invalid("cyclic factor orders must be positive".into()));
        }
        let mut parts: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &f in factors {
            for (p, e) in factorize(f) {
                parts.entry(p).or_default().push(e);
            }
        }
        Ok(AbelianGroup {
            prime_parts: parts
                .into_iter()
                .map(|(p, v)| (p, Partition::from_unsorted(v)))
                .collect(),
        })
    }

    /// Builds a group from per-prime types; empty types are dropped.
    pub fn from_prime_parts(parts: BTreeMap<u64, Partition>) -> Result<Self> {
        if let Some(&p) = parts.keys().find(|&&p| !is_prime(p)) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        Ok(AbelianGroup {
            prime_parts: parts.into_iter().filter(|(_, l)| !l.is_empty()).collect(),
        })
    }

    pub fn prime_parts(&self) -> &BTreeMap<u64, Partition> {
        &self.prime_parts
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.prime_parts.keys().copied()
    }

    /// Type of the p-Sylow subgroup (empty when p ∤ |G|).
    pub fn p_type(&self, p: u64) -> Partition {
        self.prime_parts.get(&p).cloned().unwrap_or_default()
    }

    pub fn p_part(&self, p: u64) -> AbelianGroup {
        let mut m = BTreeMap::new();
        if let Some(l) = self.prime_parts.get(&p) {
            m.insert(p, l.clone());
        }
        AbelianGroup { prime_parts: m }
    }

    pub fn order(&self) -> u64 {
        self.prime_parts
            .iter()
            .map(|(&p, l)| p.checked_pow(l.size()).expect("group order overflows u64"))
            .try_fold(1u64, |acc, x| acc.checked_mul(x))
            .expect("group order overflows u64")
    }

    /// Ascending invariant factors d_1 | d_2 | … | d_k.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let k = self.rank();
        let mut out = vec![1u64; k];
        for (&p, l) in &self.prime_parts {
            // Largest part goes into the last factor.
            for (i, &e) in l.parts().iter().enumerate() {
                out[k - 1 - i] *= p.pow(e);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.prime_parts.values().map(Partition::len).max().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.prime_parts.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank() <= 1
    }

    /// Largest element order.
    pub fn exponent(&self) -> u64 {
        self.invariant_factors().last().copied().unwrap_or(1)
    }

    pub fn direct_product(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut m = self.prime_parts.clone();
        for (&p, l) in &other.prime_parts {
            let merged = match m.get(&p) {
                Some(a) => a.union(l),
                None => l.clone(),
            };
            m.insert(p, merged);
        }
        AbelianGroup { prime_parts: m }
    }

    /// `self^k`.
    pub fn power(&self, k: usize) -> AbelianGroup {
        (0..k).fold(AbelianGroup::trivial(), |acc, _| acc.direct_product(self))
    }

    /// Whether `self` is isomorphic to a subgroup of `other`: per prime,
    /// the conjugate of the smaller type is dominated entrywise.
    pub fn embeds_in(&self, other: &AbelianGroup) -> bool {
        self.prime_parts.iter().all(|(&p, l)| {
            let lc = l.conjugate();
            let oc = other.p_type(p).conjugate();
            lc.len() <= oc.len() && lc.parts().iter().zip(oc.parts()).all(|(a, b)| a <= b)
        })
    }

    /// Isomorphism classes of all subgroups (equivalently, of all quotients).
    pub fn subgroup_classes(&self) -> Vec<AbelianGroup> {
        let mut acc: Vec<BTreeMap<u64, Partition>> = vec![BTreeMap::new()];
        for (&p, l) in &self.prime_parts {
            let subs = l.subdiagrams();
            acc = acc
                .into_iter()
                .flat_map(|m| {
                    subs.iter().map(move |s| {
                        let mut m = m.clone();
                        if !s.is_empty() {
                            m.insert(p, s.clone());
                        }
                        m
                    })
                })
                .collect();
        }
        let mut out: Vec<AbelianGroup> = acc
            .into_iter()
            .map(|prime_parts| AbelianGroup { prime_parts })
            .collect();
        out.sort();
        out
    }

    /// All classes of the given order, sorted.
    pub fn all_of_order(n: u64) -> Vec<AbelianGroup> {
        let mut acc: Vec<BTreeMap<u64, Partition>> = vec![BTreeMap::new()];
        for (p, e) in factorize(n) {
            let types = Partition::all_of_size(e);
            acc = acc
                .into_iter()
                .flat_map(|m| {
                    types.iter().map(move |t| {
                        let mut m = m.clone();
                        m.insert(p, t.clone());
                        m
                    })
                })
                .collect();
        }
        let mut out: Vec<AbelianGroup> = acc
            .into_iter()
            .map(|prime_parts| AbelianGroup { prime_parts })
            .collect();
        out.sort();
        out
    }

    /// All classes of order at most `n`, sorted by order then factors.
    pub fn all_up_to_order(n: u64) -> Vec<AbelianGroup> {
        (1..=n).flat_map(Self::all_of_order).collect()
    }
}

impl Ord for AbelianGroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.invariant_factors().cmp(&other.invariant_factors()))
    }
}

impl PartialOrd for AbelianGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv = self.invariant_factors();
        if inv.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = inv.iter().map(u64::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for AbelianGroup {
    type Err = ParseError;

    /// Comma-separated cyclic orders, e.g. "2,4,4,8"; any order is accepted.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let factors = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| ParseError::new(format!("bad cyclic factor {t:?} in {s:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        AbelianGroup::canonicalize(&factors).map_err(|e| ParseError::new(e.to_string()))
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AbelianGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// G / ⟨element⟩ for G = Z/n_1 × … × Z/n_k given by generator orders.
pub fn quotient_by_cyclic(orders: &[u64], element: &[u64]) -> Result<AbelianGroup> {
    if orders.len() != element.len() {
        return Err(Error::Invalid(format!(
            "element has {} coordinates, presentation has {}",
            element.len(),
            orders.len()
        )));
    }
    if orders.contains(&0) {
        return Err(Error::Invalid("generator orders must be positive".into()));
    }
    if let Some(i) = (0..orders.len()).find(|&i| element[i] >= orders[i]) {
        return Err(Error::Invalid(format!(
            "residue {} out of range for Z/{}",
            element[i], orders[i]
        )));
    }
    let k = orders.len();
    let mut rel: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| BigInt::from(if i == j { orders[i] } else { 0 }))
                .collect()
        })
        .collect();
    rel.push(element.iter().map(|&x| BigInt::from(x)).collect());
    let factors: Vec<u64> = smith_diagonal(&rel)
        .into_iter()
        .map(|d| u64::try_from(d).expect("invariant bounded by group order"))
        .collect();
    AbelianGroup::canonicalize(&factors)
}

/// Order of `element` in Z/n_1 × … × Z/n_k.
pub fn element_order(orders: &[u64], element: &[u64]) -> u64 {
    orders.iter().zip(element).fold(1u64, |acc, (&n, &x)| {
        let o = n / num_integer::gcd(n, x % n);
        num_integer::lcm(acc, o)
    })
}

/// Automorphism group of the Fermat variety of degree `d` in weighted
/// projective space with weights `a_i` repeated `r_i` times, modulo scalars:
/// (∏ (Z/(d/a_i))^{r_i}) / ⟨(1,…,1)⟩.
pub fn fermat_group(weights: &[(u64, usize)], d: u64) -> Result<AbelianGroup> {
    if d == 0 {
        return Err(Error::Invalid("degree must be positive".into()));
    }
    let mut orders = Vec::new();
    for &(a, r) in weights {
        if a == 0 || d % a != 0 {
            return Err(Error::Invalid(format!("weight {a} does not divide degree {d}")));
        }
        orders.extend(std::iter::repeat_n(d / a, r));
    }
    let element: Vec<u64> = orders.iter().map(|&n| 1 % n).collect();
    quotient_by_cyclic(&orders, &element)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> AbelianGroup {
        s.parse().unwrap()
    }

    fn pp(g: &AbelianGroup) -> Vec<(u64, String)> {
        g.prime_parts().iter().map(|(p, l)| (*p, l.to_string())).collect()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(pp(&g("4,4,4,4")), vec![(2, "[2,2,2,2]".to_string())]);
        assert_eq!(pp(&g("2,6")), vec![(2, "[1,1]".into()), (3, "[1]".into())]);
        assert_eq!(g("12,6").invariant_factors(), vec![6, 12]);
        assert_eq!(g("1,1,5").to_string(), "5");
        assert_eq!(g("1").to_string(), "1");
        assert!(AbelianGroup::canonicalize(&[2, 0]).is_err());
        assert!("2,-3".parse::<AbelianGroup>().is_err());
    }

    #[test]
    fn p_parts_and_rank() {
        let h = g("12,6");
        assert_eq!(h.p_part(2), g("4,2"));
        assert_eq!(h.p_part(3), g("3,3"));
        assert_eq!(h.p_part(5), AbelianGroup::trivial());
        assert_eq!(g("2,2,2,2,2,2").rank(), 6);
        assert_eq!(g("8,4,2").rank(), 3);
        assert_eq!(g("6,3,3").rank(), 3);
        assert_eq!(AbelianGroup::trivial().rank(), 0);
    }

    #[test]
    fn products() {
        assert_eq!(g("4").direct_product(&g("2,2")), g("4,2,2"));
        assert_eq!(AbelianGroup::trivial().direct_product(&g("6,3")), g("6,3"));
        assert_eq!(pp(&g("6").direct_product(&g("6"))), vec![(2, "[1,1]".into()), (3, "[1,1]".into())]);
        assert_eq!(g("4").power(3), g("4,4,4"));
    }

    #[test]
    fn embeddings() {
        assert!(!g("2,2").embeds_in(&g("4")));
        assert!(!g("4").embeds_in(&g("2,2")));
        assert!(g("12,6").embeds_in(&g("12,6")));
        assert!(g("4,2").embeds_in(&g("8,4,2")));
        assert!(AbelianGroup::trivial().embeds_in(&g("5")));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(AbelianGroup::all_of_order(64).len(), 11);
        assert_eq!(AbelianGroup::all_of_order(72).len(), 6);
        assert_eq!(g("8,2").subgroup_classes().len(), 7);
    }

    #[test]
    fn quotients() {
        assert_eq!(quotient_by_cyclic(&[4; 5], &[1; 5]).unwrap(), g("4,4,4,4"));
        assert_eq!(quotient_by_cyclic(&[6, 6, 6, 6, 2], &[1; 5]).unwrap(), g("6,6,6,2"));
        assert_eq!(quotient_by_cyclic(&[8, 8, 8, 4, 2], &[1; 5]).unwrap(), g("8,8,4,2"));
        assert!(quotient_by_cyclic(&[4, 4], &[1, 4]).is_err());
        assert!(quotient_by_cyclic(&[4, 4], &[1]).is_err());
    }

    #[test]
    fn fermat_examples() {
        assert_eq!(fermat_group(&[(1, 4)], 4).unwrap(), g("4,4,4"));
        assert_eq!(fermat_group(&[(1, 3), (3, 1)], 6).unwrap(), g("6,6,2"));
        assert_eq!(fermat_group(&[(1, 7)], 2).unwrap(), g("2,2,2,2,2,2"));
        assert!(fermat_group(&[(4, 1)], 6).is_err());
    }

    #[test]
    fn element_orders() {
        assert_eq!(element_order(&[4, 6], &[1, 1]), 12);
        assert_eq!(element_order(&[4, 6], &[2, 3]), 2);
        assert_eq!(element_order(&[4], &[0]), 1);
    }
}

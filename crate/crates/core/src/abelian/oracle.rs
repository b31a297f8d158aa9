//! Exhaustive subgroup enumeration on an explicit model of a small group.
//! Used to validate the combinatorial criteria elsewhere in the crate.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::AbelianGroup;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: u64 = 128;

type Bits = Box<[u64]>;

/// Z/n_1 × … × Z/n_k with elements numbered in mixed radix.
pub struct FiniteModel {
    moduli: Vec<u64>,
    n: usize,
}

impl FiniteModel {
    pub fn new(g: &AbelianGroup, max_order: u64) -> Result<Self> {
        let order = g.order();
        if order > max_order {
            return Err(Error::BoundExceeded { order, bound: max_order });
        }
        Ok(FiniteModel {
            moduli: g.invariant_factors(),
            n: order as usize,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn decode(&self, mut x: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&m| {
                let d = (x as u64) % m;
                x /= m as usize;
                d
            })
            .collect()
    }

    fn encode(&self, v: &[u64]) -> usize {
        let mut x = 0usize;
        for (&d, &m) in v.iter().zip(&self.moduli).rev() {
            x = x * m as usize + d as usize;
        }
        x
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (va, vb) = (self.decode(a), self.decode(b));
        let s: Vec<u64> = va
            .iter()
            .zip(&vb)
            .zip(&self.moduli)
            .map(|((x, y), m)| (x + y) % m)
            .collect();
        self.encode(&s)
    }

    fn mul(&self, a: usize, k: u64) -> usize {
        let v: Vec<u64> = self
            .decode(a)
            .iter()
            .zip(&self.moduli)
            .map(|(x, m)| (x * (k % m)) % m)
            .collect();
        self.encode(&v)
    }

    fn words(&self) -> usize {
        self.n.div_ceil(64)
    }

    fn empty_bits(&self) -> Bits {
        vec![0u64; self.words()].into_boxed_slice()
    }

    /// All subgroups as membership bitsets.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let table: Vec<Vec<usize>> = (0..self.n)
            .map(|a| (0..self.n).map(|b| self.add(a, b)).collect())
            .collect();
        let mut trivial = self.empty_bits();
        set(&mut trivial, 0);
        let mut seen: HashSet<Bits> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(trivial.clone());
        queue.push_back(trivial);
        while let Some(s) = queue.pop_front() {
            let members: Vec<usize> = (0..self.n).filter(|&x| get(&s, x)).collect();
            for x in 0..self.n {
                if get(&s, x) {
                    continue;
                }
                // ⟨S, x⟩ = S + ⟨x⟩
                let mut cyc = vec![0usize];
                let mut y = x;
                while y != 0 {
                    cyc.push(y);
                    y = table[y][x];
                }
                let mut t = self.empty_bits();
                for &c in &cyc {
                    for &m in &members {
                        set(&mut t, table[c][m]);
                    }
                }
                if seen.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
        let mut out: Vec<Subgroup> = seen.into_iter().map(|bits| Subgroup { bits }).collect();
        out.sort_by(|a, b| a.bits.cmp(&b.bits));
        out
    }

    /// Isomorphism class of the subgroup, read off from p^k-torsion counts.
    pub fn class_of(&self, s: &Subgroup) -> AbelianGroup {
        let members: Vec<usize> = (0..self.n).filter(|&x| get(&s.bits, x)).collect();
        self.class_from_counts(members.len() as u64, |k| {
            members.iter().filter(|&&x| self.mul(x, k) == 0).count() as u64
        })
    }

    /// Isomorphism class of G / S.
    pub fn quotient_class(&self, s: &Subgroup) -> AbelianGroup {
        let size = (0..self.n).filter(|&x| get(&s.bits, x)).count() as u64;
        self.class_from_counts(self.n as u64 / size, |k| {
            (0..self.n).filter(|&x| get(&s.bits, self.mul(x, k))).count() as u64 / size
        })
    }

    // For a p-group of type λ, |G[p^k]| = p^{λ'_1 + … + λ'_k}.
    fn class_from_counts(&self, order: u64, torsion: impl Fn(u64) -> u64) -> AbelianGroup {
        let mut prime_parts = std::collections::BTreeMap::new();
        for (p, e) in super::factorize(order) {
            let mut conj = Vec::new();
            let mut prev = 0u32;
            let mut k = 1u32;
            while prev < e {
                let c = torsion(p.pow(k));
                let lg = log_p(c, p);
                conj.push(lg - prev);
                prev = lg;
                k += 1;
            }
            let lambda_conj = crate::partitions::Partition::new(conj).expect("torsion counts give a partition");
            prime_parts.insert(p, lambda_conj.conjugate());
        }
        AbelianGroup::from_prime_parts(prime_parts).expect("primes from factorization")
    }
}

fn log_p(mut c: u64, p: u64) -> u32 {
    let mut l = 0;
    while c > 1 && c % p == 0 {
        c /= p;
        l += 1;
    }
    l
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    bits: Bits,
}

fn get(b: &[u64], i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn set(b: &mut [u64], i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

/// Every (subgroup class, quotient class) pair realized in `g`.
pub fn subgroup_quotient_pairs(g: &AbelianGroup, max_order: u64) -> Result<BTreeSet<(AbelianGroup, AbelianGroup)>> {
    let model = FiniteModel::new(g, max_order)?;
    Ok(model
        .subgroups()
        .iter()
        .map(|s| (model.class_of(s), model.quotient_class(s)))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleAnswer {
    pub exists: bool,
    pub quotients: BTreeSet<AbelianGroup>,
}

/// Does `g` have a subgroup isomorphic to `sub`, and with which quotients?
pub fn brute_force_subgroup_quotient_oracle(g: &AbelianGroup, sub: &AbelianGroup, max_order: u64) -> Result<OracleAnswer> {
    let quotients: BTreeSet<AbelianGroup> = subgroup_quotient_pairs(g, max_order)?
        .into_iter()
        .filter(|(s, _)| s == sub)
        .map(|(_, q)| q)
        .collect();
    Ok(OracleAnswer {
        exists: !quotients.is_empty(),
        quotients,
    })
}

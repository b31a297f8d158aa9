//! Young diagrams, Littlewood–Richardson coefficients and the abelian
//! p-group extension criterion built on them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abelian::AbelianGroup;
use crate::error::ParseError;

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates that `parts` is weakly decreasing with positive entries.
    pub fn new(parts: Vec<u32>) -> Result<Self, ParseError> {
        if parts.contains(&0) {
            return Err(ParseError::new("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ParseError::new("partition parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition contained in `self`, including the empty one.
    pub fn subdiagrams(&self) -> Vec<Partition> {
        fn rec(outer: &[u32], i: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if i == outer.len() {
                return;
            }
            for p in 1..=outer[i].min(max) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, u32::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| ParseError::new(format!("partition must be bracketed: {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| ParseError::new(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// c^μ_{λν}: the number of LR tableaux of shape μ/λ and content ν.
pub fn lr_coefficient(lambda: &Partition, nu: &Partition, mu: &Partition) -> u64 {
    if mu.size() != lambda.size() + nu.size() || !lambda.is_contained_in(mu) || !nu.is_contained_in(mu) {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }
    let mut filler = LrFiller {
        lambda,
        mu,
        content: nu.parts(),
        memo: HashMap::new(),
    };
    let used = vec![0u32; nu.len()];
    filler.count(0, &[], &used)
}

struct LrFiller<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    content: &'a [u32],
    memo: HashMap<(usize, Vec<u8>, Vec<u32>), u64>,
}

impl LrFiller<'_> {
    // `prev` holds the letters of row `row - 1` (columns lambda..mu of that row).
    fn count(&mut self, row: usize, prev: &[u8], used: &[u32]) -> u64 {
        if row == self.mu.len() {
            return u64::from(used == self.content);
        }
        let key = (row, prev.to_vec(), used.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let start = self.lambda.part(row) as usize;
        let end = self.mu.part(row) as usize;
        let prev_start = if row == 0 { 0 } else { self.lambda.part(row - 1) as usize };
        let mut rows = Vec::new();
        let mut cur = Vec::with_capacity(end - start);
        let mut taken = vec![0u32; self.content.len()];
        self.fill_row(start, end, prev, prev_start, used, &mut cur, &mut taken, &mut rows);
        let mut total = 0;
        for (letters, next_used) in rows {
            total += self.count(row + 1, &letters, &next_used);
        }
        self.memo.insert(key, total);
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn fill_row(
        &self,
        col: usize,
        end: usize,
        prev: &[u8],
        prev_start: usize,
        used: &[u32],
        cur: &mut Vec<u8>,
        taken: &mut [u32],
        out: &mut Vec<(Vec<u8>, Vec<u32>)>,
    ) {
        if col == end {
            // Reverse reading word: row letters are read largest first, so
            // letter j+1 of this row is compared against letter j of earlier rows only.
            let ok = (1..self.content.len()).all(|j| used[j] + taken[j] <= used[j - 1]);
            if ok {
                let next: Vec<u32> = used.iter().zip(taken.iter()).map(|(a, b)| a + b).collect();
                out.push((cur.clone(), next));
            }
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        let above = if col >= prev_start && col - prev_start < prev.len() {
            Some(prev[col - prev_start])
        } else {
            None
        };
        let lo = match above {
            Some(a) => lo.max(a + 1),
            None => lo,
        };
        for v in lo..self.content.len() as u8 {
            let vi = v as usize;
            if used[vi] + taken[vi] >= self.content[vi] {
                continue;
            }
            taken[vi] += 1;
            cur.push(v);
            self.fill_row(col + 1, end, prev, prev_start, used, cur, taken, out);
            cur.pop();
            taken[vi] -= 1;
        }
    }
}

/// Whether 0 → sub → total → quot → 0 exists, decided prime by prime.
pub fn extension_exists(sub: &AbelianGroup, quot: &AbelianGroup, total: &AbelianGroup) -> bool {
    if sub.order() * quot.order() != total.order() {
        return false;
    }
    let primes: BTreeSet<u64> = sub
        .primes()
        .chain(quot.primes())
        .chain(total.primes())
        .collect();
    primes.into_iter().all(|p| {
        lr_coefficient(&sub.p_type(p), &quot.p_type(p), &total.p_type(p)) > 0
    })
}

/// All p-types μ with c^μ_{λν} > 0.
pub fn extension_types(lambda: &Partition, nu: &Partition) -> Vec<Partition> {
    let n = lambda.size() + nu.size();
    let max_len = lambda.len() + nu.len();
    Partition::all_of_size(n)
        .into_iter()
        .filter(|mu| mu.len() <= max_len && lambda.is_contained_in(mu) && nu.is_contained_in(mu))
        .filter(|mu| lr_coefficient(lambda, nu, mu) > 0)
        .collect()
}

/// Every isomorphism class of extension of `quot` by `sub`.
pub fn enumerate_extensions(sub: &AbelianGroup, quot: &AbelianGroup) -> BTreeSet<AbelianGroup> {
    let primes: BTreeSet<u64> = sub.primes().chain(quot.primes()).collect();
    let mut acc: Vec<BTreeMap<u64, Partition>> = vec![BTreeMap::new()];
    for p in primes {
        let options = extension_types(&sub.p_type(p), &quot.p_type(p));
        acc = acc
            .into_iter()
            .flat_map(|m| {
                options.iter().map(move |mu| {
                    let mut m = m.clone();
                    m.insert(p, mu.clone());
                    m
                })
            })
            .collect();
    }
    acc.into_iter()
        .map(|m| AbelianGroup::from_prime_parts(m).expect("primes come from valid groups"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn g(s: &str) -> AbelianGroup {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_roundtrip() {
        let l = p("[4,2,2,1]");
        assert_eq!(l.conjugate(), p("[4,3,1,1]"));
        assert_eq!(l.conjugate().conjugate(), l);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(p("[2,1]").subdiagrams().len(), 5);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("[3,1,1]").to_string(), "[3,1,1]");
        assert_eq!(p("[]"), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[0]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
    }

    #[test]
    fn lr_small_cases() {
        assert_eq!(lr_coefficient(&p("[1]"), &p("[1]"), &p("[2]")), 1);
        assert_eq!(lr_coefficient(&p("[1]"), &p("[1]"), &p("[1,1]")), 1);
        assert_eq!(lr_coefficient(&p("[1]"), &p("[1]"), &p("[2,1]")), 0);
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[2,1]"), &p("[3,2,1]")), 2);
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[2,1]"), &p("[4,2]")), 1);
        assert_eq!(lr_coefficient(&p("[]"), &p("[2,1]"), &p("[2,1]")), 1);
    }

    #[test]
    fn extension_examples() {
        assert!(extension_exists(&g("2"), &g("2"), &g("4")));
        assert!(extension_exists(&g("2"), &g("2"), &g("2,2")));
        assert!(extension_exists(&g("1"), &g("6,6"), &g("6,6")));
        assert!(extension_exists(&g("4"), &g("4,4,4"), &g("2,4,4,8")));
        assert!(!extension_exists(&g("4"), &g("2"), &g("2,2,2")));
    }

    #[test]
    fn enumerate_examples() {
        let e = enumerate_extensions(&g("2"), &g("2"));
        assert_eq!(e, [g("4"), g("2,2")].into_iter().collect());
        let e = enumerate_extensions(&g("4"), &g("4,4,4"));
        assert!(e.contains(&g("4,4,4,4")) && e.contains(&g("2,4,4,8")));
        let e = enumerate_extensions(&g("2"), &g("4,2,2,2"));
        assert!(e.contains(&g("2,2,2,8")) && e.contains(&g("2,2,4,4")));
    }
}

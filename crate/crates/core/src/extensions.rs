//! Product-type and K3-type predicates, cyclic-extension filtering, and the
//! case tables for groups acting on Fano threefolds with h⁰(−K) ≥ 2.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::abelian::{divisors, AbelianGroup};
use crate::catalog::{self, cr1_members, cr2_members};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::partitions::{enumerate_extensions, extension_exists, Partition};

fn g(s: &str) -> AbelianGroup {
    s.parse().expect("static group literal")
}

/// Index (1–7) of the first product-type family containing `x`, solved in
/// closed form for the family parameters.
pub fn product_type_family(x: &AbelianGroup) -> Option<usize> {
    let n = x.order();
    let c = AbelianGroup::cyclic;
    if x.rank() <= 3 {
        return Some(1);
    }
    if n % 64 == 0 && c(2 * (n / 64)).direct_product(&g("4,4,2")) == *x {
        return Some(2);
    }
    if n % 81 == 0 && c(3 * (n / 81)).direct_product(&g("3,3,3")) == *x {
        return Some(3);
    }
    if n % 16 == 0 {
        let kl = n / 16;
        let hit = divisors(kl)
            .into_iter()
            .any(|k| c(2 * k).direct_product(&c(2 * (kl / k))).direct_product(&g("2,2")) == *x);
        if hit {
            return Some(4);
        }
    }
    if n % 32 == 0 && c(2 * (n / 32)).direct_product(&g("2,2,2,2")) == *x {
        return Some(5);
    }
    if *x == g("4,4,2,2,2") {
        return Some(6);
    }
    if *x == g("2,2,2,2,2,2") {
        return Some(7);
    }
    None
}

pub fn is_product_type(x: &AbelianGroup) -> bool {
    product_type_family(x).is_some()
}

/// Distinct sub-multisets of a partition's parts.
fn sub_multisets(p: &Partition) -> Vec<(Partition, Partition)> {
    let parts = p.parts();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << parts.len()) {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, &x) in parts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.push(x);
            } else {
                b.push(x);
            }
        }
        out.insert((Partition::from_unsorted(a), Partition::from_unsorted(b)));
    }
    out.into_iter().collect()
}

/// A splitting x ≅ G₁ × G₂ with G₁ ∈ Cr₁ and G₂ ∈ Cr₂, found by trying every
/// split of every p-type.
pub fn product_type_by_decomposition(x: &AbelianGroup) -> Option<(AbelianGroup, AbelianGroup)> {
    let primes: Vec<u64> = x.primes().collect();
    let splits: Vec<Vec<(Partition, Partition)>> = primes.iter().map(|&p| sub_multisets(&x.p_type(p))).collect();
    let mut idx = vec![0usize; primes.len()];
    loop {
        let mut left = std::collections::BTreeMap::new();
        let mut right = std::collections::BTreeMap::new();
        for (k, &p) in primes.iter().enumerate() {
            let (a, b) = &splits[k][idx[k]];
            left.insert(p, a.clone());
            right.insert(p, b.clone());
        }
        let g1 = AbelianGroup::from_prime_parts(left).expect("sub-multiset of a valid type");
        let g2 = AbelianGroup::from_prime_parts(right).expect("sub-multiset of a valid type");
        if cr1_members(&g1) && cr2_members(&g2) {
            return Some((g1, g2));
        }
        // odometer
        let mut k = 0;
        loop {
            if k == idx.len() {
                return None;
            }
            idx[k] += 1;
            if idx[k] < splits[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// A pair (m, H): x is an extension of H by Z/m with H K3-admissible.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct K3Witness {
    pub m: u64,
    pub h: AbelianGroup,
}

/// All (m, H) witnesses; empty iff x is not of K3 type.
pub fn k3_type_witnesses(x: &AbelianGroup) -> Vec<K3Witness> {
    let n = x.order();
    let mut out = Vec::new();
    for m in divisors(n) {
        let cm = AbelianGroup::cyclic(m);
        for h in catalog::k3_admissible_classes() {
            if h.order() * m == n && extension_exists(&cm, h, x) {
                out.push(K3Witness { m, h: h.clone() });
            }
        }
    }
    out.sort();
    out
}

pub fn is_k3_type(x: &AbelianGroup) -> (bool, Vec<K3Witness>) {
    let w = k3_type_witnesses(x);
    (!w.is_empty(), w)
}

pub const LEMMA_M_VALUES: [u64; 6] = [1, 2, 3, 4, 6, 8];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitsTable {
    pub h: AbelianGroup,
    pub m: u64,
    /// Non-split extensions of rank > 3.
    pub pre_filter: BTreeSet<AbelianGroup>,
    /// Those that are not of product type.
    pub post_filter: BTreeSet<AbelianGroup>,
}

/// Extensions 0 → Z/m → G → h → 0 with G ≇ Z/m × h and rank > 3.
pub fn lemma_g_splits_table(h: &AbelianGroup, m: u64) -> Result<SplitsTable> {
    if !catalog::exceptional_groups().contains(h) {
        return Err(Error::Invalid(format!("{h} is not one of the six exceptional groups")));
    }
    if !LEMMA_M_VALUES.contains(&m) {
        return Err(Error::Invalid(format!("m = {m} is not in {{1,2,3,4,6,8}}")));
    }
    let cm = AbelianGroup::cyclic(m);
    let split = cm.direct_product(h);
    let pre_filter: BTreeSet<AbelianGroup> = enumerate_extensions(&cm, h)
        .into_iter()
        .filter(|x| *x != split && x.rank() > 3)
        .collect();
    let post_filter = pre_filter.iter().filter(|x| !is_product_type(x)).cloned().collect();
    Ok(SplitsTable { h: h.clone(), m, pre_filter, post_filter })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H0Geq2Row {
    pub h: AbelianGroup,
    /// (|C′|, allowed m) for each cyclic subgroup class C′ ⊆ H.
    pub columns: Vec<(u64, Vec<u64>)>,
    pub maximal_g: AbelianGroup,
    pub product_type: bool,
}

/// For each exceptional H: cyclic C′ ⊆ H, the allowed m (divisors of |C′|),
/// and the largest group Z/m × H that can occur.
pub fn h0geq2_classification() -> Vec<H0Geq2Row> {
    catalog::exceptional_groups()
        .into_iter()
        .map(|h| {
            let columns: Vec<(u64, Vec<u64>)> = divisors(h.exponent())
                .into_iter()
                .filter(|&c| AbelianGroup::cyclic(c).embeds_in(&h))
                .map(|c| (c, divisors(c)))
                .collect();
            let m_max = columns.iter().flat_map(|(_, ms)| ms.iter().copied()).max().unwrap_or(1);
            let maximal_g = AbelianGroup::cyclic(m_max).direct_product(&h);
            let product_type = is_product_type(&maximal_g);
            H0Geq2Row { h, columns, maximal_g, product_type }
        })
        .collect()
}

/// Maximal (under embedding) non-product groups Z/m × H over all rows.
pub fn h0geq2_non_product(rows: &[H0Geq2Row]) -> BTreeSet<AbelianGroup> {
    let cands: BTreeSet<AbelianGroup> = rows
        .iter()
        .flat_map(|r| {
            r.columns
                .iter()
                .flat_map(|(_, ms)| ms.iter().copied())
                .map(move |m| AbelianGroup::cyclic(m).direct_product(&r.h))
        })
        .filter(|x| !is_product_type(x))
        .collect();
    cands
        .iter()
        .filter(|x| !cands.iter().any(|y| y != *x && x.embeds_in(y)))
        .cloned()
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    ProductType,
    K3Exceptional,
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub group: AbelianGroup,
    pub verdict: Verdict,
    pub family: Option<usize>,
    pub witnesses: Vec<K3Witness>,
}

/// The four non-product groups realised on Fano threefolds.
pub fn exceptional_four() -> Vec<AbelianGroup> {
    ["4,4,4,4", "2,4,8,8", "6,6,3,3", "2,6,6,6"].map(g).to_vec()
}

pub fn classify_group(x: &AbelianGroup) -> Classification {
    if let Some(f) = product_type_family(x) {
        return Classification { group: x.clone(), verdict: Verdict::ProductType, family: Some(f), witnesses: vec![] };
    }
    let witnesses = k3_type_witnesses(x);
    let verdict = if !witnesses.is_empty() && exceptional_four().contains(x) {
        Verdict::K3Exceptional
    } else {
        Verdict::Unresolved
    };
    Classification { group: x.clone(), verdict, family: None, witnesses }
}

/// Groups of order ≤ `max_order` where the two product-type tests disagree.
pub fn product_type_disagreements(max_order: u64, exec: Exec) -> Vec<AbelianGroup> {
    let all = AbelianGroup::all_up_to_order(max_order);
    let flags = exec.map(&all, |x| is_product_type(x) != product_type_by_decomposition(x).is_some());
    all.into_iter().zip(flags).filter(|(_, bad)| *bad).map(|(x, _)| x).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_type_examples() {
        assert!(is_product_type(&g("2,2,2,2,2,2")));
        assert_eq!(product_type_family(&g("16,4,4,2")), Some(2));
        assert!(!is_product_type(&g("4,4,4,4")));
        assert!(!is_product_type(&g("6,6,6,2")));
        assert!(is_product_type(&AbelianGroup::trivial()));
        let (a, b) = product_type_by_decomposition(&g("16,4,4,2")).unwrap();
        assert_eq!(a.direct_product(&b), g("16,4,4,2"));
        assert!(product_type_by_decomposition(&g("4,4,4,4")).is_none());
    }

    #[test]
    fn k3_witnesses() {
        let (ok, w) = is_k3_type(&g("4,4,4,4"));
        assert!(ok);
        assert!(w.contains(&K3Witness { m: 4, h: g("4,4,4") }));
        let (ok, w) = is_k3_type(&g("8,8,4,2"));
        assert!(ok && w.contains(&K3Witness { m: 8, h: g("8,4,2") }));
        for h in catalog::maximal_k3_groups() {
            assert!(k3_type_witnesses(&h).contains(&K3Witness { m: 1, h: h.clone() }));
        }
    }

    #[test]
    fn splits_table_examples() {
        let t = lemma_g_splits_table(&g("4,4,4"), 4).unwrap();
        assert_eq!(t.pre_filter, [g("8,4,4,2")].into_iter().collect());
        assert!(t.post_filter.is_empty());
        let t = lemma_g_splits_table(&g("2,2,2,2,2"), 2).unwrap();
        assert_eq!(t.pre_filter, [g("4,2,2,2,2")].into_iter().collect());
        assert!(t.post_filter.is_empty());
        for m in LEMMA_M_VALUES {
            assert!(lemma_g_splits_table(&g("2,6,6"), m).unwrap().post_filter.is_empty());
        }
        assert!(lemma_g_splits_table(&g("2,2"), 2).is_err());
        assert!(lemma_g_splits_table(&g("4,4,4"), 5).is_err());
    }

    #[test]
    fn h0geq2_rows() {
        let rows = h0geq2_classification();
        let first = &rows[0];
        assert_eq!(first.h, g("4,4,4"));
        assert_eq!(first.columns, vec![(1, vec![1]), (2, vec![1, 2]), (4, vec![1, 2, 4])]);
        assert_eq!(first.maximal_g, g("4,4,4,4"));
        let last = rows.iter().find(|r| r.h == g("2,2,2,2,2")).unwrap();
        assert_eq!(last.maximal_g, g("2,2,2,2,2,2"));
        assert!(last.product_type);
        let np = h0geq2_non_product(&rows);
        assert_eq!(np, exceptional_four().into_iter().collect());
    }

    #[test]
    fn verdicts() {
        assert_eq!(classify_group(&g("6,6,3,3")).verdict, Verdict::K3Exceptional);
        assert_eq!(classify_group(&g("6,6,2,2")).verdict, Verdict::ProductType);
        assert_eq!(classify_group(&AbelianGroup::trivial()).verdict, Verdict::ProductType);
    }

    #[test]
    fn closed_form_matches_search_small() {
        assert!(product_type_disagreements(64, Exec::Sequential).is_empty());
    }
}

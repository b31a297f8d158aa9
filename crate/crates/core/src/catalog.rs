//! Static data: Cremona-group families, Nikulin's symplectic list, the
//! maximal abelian K3 groups with their splittings and invariant lattices,
//! du Val data and symplectic fixed-point counts.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::abelian::AbelianGroup;
use crate::error::{Error, Result};
use crate::lattice::Lattice;

pub mod fixtures;

fn g(s: &str) -> AbelianGroup {
    s.parse().expect("static group literal")
}

/// Z/n or (Z/2)².
pub fn cr1_members(x: &AbelianGroup) -> bool {
    x.is_cyclic() || *x == g("2,2")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Cr2Family {
    /// Z/n × Z/m
    RankTwo,
    /// Z/2n × (Z/2)²
    TwoNTwoTwo,
    /// (Z/4)² × Z/2
    FourFourTwo,
    /// (Z/3)³
    ThreeCubed,
    /// (Z/2)⁴
    TwoFourth,
}

pub const CR2_FAMILIES: [(Cr2Family, &str); 5] = [
    (Cr2Family::RankTwo, "Z/n x Z/m"),
    (Cr2Family::TwoNTwoTwo, "Z/2n x (Z/2)^2"),
    (Cr2Family::FourFourTwo, "(Z/4)^2 x Z/2"),
    (Cr2Family::ThreeCubed, "(Z/3)^3"),
    (Cr2Family::TwoFourth, "(Z/2)^4"),
];

/// First Cr₂ family containing `x`, if any.
pub fn cr2_family(x: &AbelianGroup) -> Option<Cr2Family> {
    let odd_rank = x.primes().filter(|&p| p != 2).map(|p| x.p_type(p).len()).max().unwrap_or(0);
    let two = x.p_type(2);
    if x.rank() <= 2 {
        Some(Cr2Family::RankTwo)
    } else if two.len() == 3 && two.part(1) == 1 && odd_rank <= 1 {
        Some(Cr2Family::TwoNTwoTwo)
    } else if *x == g("4,4,2") {
        Some(Cr2Family::FourFourTwo)
    } else if *x == g("3,3,3") {
        Some(Cr2Family::ThreeCubed)
    } else if *x == g("2,2,2,2") {
        Some(Cr2Family::TwoFourth)
    } else {
        None
    }
}

pub fn cr2_members(x: &AbelianGroup) -> bool {
    cr2_family(x).is_some()
}

/// Abelian groups of symplectic automorphisms of K3 surfaces, as printed
/// (Z/n for n ≤ 8, Z/2×Z/6, (Z/3)², (Z/4)², Z/2×Z/4, (Z/2)^k for k ≤ 4),
/// deduplicated.
pub fn nikulin_symplectic() -> Vec<AbelianGroup> {
    let mut v: Vec<AbelianGroup> = (1..=8).map(AbelianGroup::cyclic).collect();
    v.extend(["2,6", "3,3", "4,4", "2,4"].map(g));
    v.extend((1..=4).map(|k| AbelianGroup::cyclic(2).power(k)));
    let set: BTreeSet<AbelianGroup> = v.into_iter().collect();
    set.into_iter().collect()
}

pub const MAXIMAL_K3: [&str; 20] = [
    "4,4,4", "2,6,6", "3,3,6", "2,4,8", "2,2,2,2,2", "2,2,2,4", "6,12", "60", "5,10", "4,12", "2,2,12", "3,18", "3,15", "42",
    "2,30", "2,28", "2,24", "2,20", "2,18", "2,16",
];

/// The 20 maximal abelian groups acting faithfully on K3 surfaces, in printed order.
pub fn maximal_k3_groups() -> Vec<AbelianGroup> {
    MAXIMAL_K3.iter().map(|s| g(s)).collect()
}

/// The six maximal groups that are not subgroups of Cr₂.
pub fn exceptional_groups() -> Vec<AbelianGroup> {
    maximal_k3_groups().into_iter().take(6).collect()
}

/// Subgroup classes of the maximal groups, computed once.
pub fn k3_admissible_classes() -> &'static BTreeSet<AbelianGroup> {
    static CACHE: OnceLock<BTreeSet<AbelianGroup>> = OnceLock::new();
    CACHE.get_or_init(|| maximal_k3_groups().iter().flat_map(AbelianGroup::subgroup_classes).collect())
}

/// Embeds in one of the 20 maximal groups.
pub fn k3_admissible(x: &AbelianGroup) -> bool {
    maximal_k3_groups().iter().any(|m| x.embeds_in(m))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub group: AbelianGroup,
    pub symplectic_part: AbelianGroup,
    pub nonsymplectic_order: u64,
    pub invariant_rank_range: (usize, usize),
    pub gram_options: Vec<Lattice>,
    pub note: Option<&'static str>,
}

impl CatalogEntry {
    /// |H| = |H_s|·m, or the relaxed H_s ⊆ H, m ∈ {1,2} for the entry
    /// transcribed with a tension.
    pub fn splitting_consistent(&self) -> bool {
        if self.note.is_some() {
            self.symplectic_part.embeds_in(&self.group) && self.nonsymplectic_order <= 2
        } else {
            self.group.order() == self.symplectic_part.order() * self.nonsymplectic_order
        }
    }
}

fn lat(rows: &[&[i64]]) -> Lattice {
    Lattice::new(rows.iter().map(|r| r.to_vec()).collect()).expect("static Gram matrix is symmetric")
}

/// Invariant-lattice Gram options for H = Z/4 × (Z/2)³.
pub fn gram_options_4_2_2_2() -> Vec<Lattice> {
    vec![
        lat(&[&[0, 4], &[4, 0]]),
        lat(&[&[0, 2], &[2, 0]]),
        lat(&[&[0, 0, 2], &[0, -8, 0], &[2, 0, 0]]),
        lat(&[&[0, 0, 0, 2], &[0, -4, 0, 0], &[0, 0, -4, 0], &[2, 0, 0, 0]]),
        lat(&[
            &[0, 0, 0, 0, 0, 2],
            &[0, -4, -2, 2, 2, 0],
            &[0, -2, -4, 2, 2, 0],
            &[0, 2, 2, -4, 0, 0],
            &[0, 2, 2, 0, -4, 0],
            &[2, 0, 0, 0, 0, 0],
        ]),
        lat(&[
            &[0, -2, -2, 2, -2, 0],
            &[-2, -4, -2, 0, -2, -2],
            &[-2, -2, -4, 0, 0, 0],
            &[2, 0, 0, 0, 0, 0],
            &[-2, -2, 0, 0, -4, 0],
            &[0, -2, 0, 0, 0, -4],
        ]),
        lat(&[
            &[0, 0, 0, 2, 0, 0],
            &[0, -4, -2, 0, -2, -2],
            &[0, -2, -4, 0, 0, 0],
            &[2, 0, 0, 0, 0, 0],
            &[0, -2, 0, 0, -4, 0],
            &[0, -2, 0, 0, 0, -4],
        ]),
        lat(&[
            &[0, 0, 2, 0, 0, 0],
            &[0, -4, 0, -2, -6, 2],
            &[2, 0, 0, 0, 0, 0],
            &[0, -2, 0, -4, -6, 2],
            &[0, -6, 0, -6, -20, 8],
            &[0, 2, 0, 2, 8, -4],
        ]),
        lat(&[
            &[0, -2, 2, -4, -4, 2],
            &[-2, -4, 0, -4, -6, 2],
            &[2, 0, 0, 0, 0, 0],
            &[-4, -4, 0, -8, -8, 4],
            &[-4, -6, 0, -8, -12, 4],
            &[2, 2, 0, 4, 4, -4],
        ]),
        lat(&[
            &[0, 0, -2, -4, -2, -6],
            &[0, -8, -2, -20, -14, -26],
            &[-2, -2, -4, -8, -4, -12],
            &[-4, -20, -8, -60, -40, -78],
            &[-2, -14, -4, -40, -28, -52],
            &[-6, -26, -12, -78, -52, -104],
        ]),
    ]
}

/// Invariant-lattice Gram options for H = (Z/2)⁵.
pub fn gram_options_2_2_2_2_2() -> Vec<Lattice> {
    vec![
        lat(&[&[8]]),
        lat(&[&[0, 2], &[2, 0]]),
        lat(&[&[0, 4], &[4, 0]]),
        lat(&[&[0, -2], &[-2, 0]]),
        lat(&[&[0, 0, 2], &[0, -8, 0], &[2, 0, 0]]),
        lat(&[&[0, 0, 0, 2], &[0, -4, 0, 0], &[0, 0, -4, 0], &[2, 0, 0, 0]]),
        lat(&[
            &[0, 0, 0, 0, 2],
            &[0, -4, -2, -2, 0],
            &[0, -2, -4, -2, 0],
            &[0, -2, -2, -4, 0],
            &[2, 0, 0, 0, 0],
        ]),
        lat(&[
            &[-4, -4, 0, -2, -2],
            &[-4, -8, 0, 0, 0],
            &[0, 0, 0, -2, 0],
            &[-2, 0, -2, -4, 0],
            &[-2, 0, 0, 0, -4],
        ]),
        lat(&[
            &[-4, 2, -4, -6, 2],
            &[2, 0, 0, 0, 0],
            &[-4, 0, -4, -2, 0],
            &[-6, 0, -2, -12, 6],
            &[2, 0, 0, 6, -4],
        ]),
        lat(&[
            &[-52, -10, -20, -38, -28],
            &[-10, -4, -4, -6, -4],
            &[-20, -4, -8, -14, -10],
            &[-38, -6, -14, -28, -20],
            &[-28, -4, -10, -20, -16],
        ]),
        lat(&[
            &[-4, 0, -2, -4, 0],
            &[0, 0, 0, 0, 2],
            &[-2, 0, -4, 0, 0],
            &[-4, 0, 0, -8, 0],
            &[0, 2, 0, 0, 0],
        ]),
        lat(&[
            &[0, 0, 2, 0, 0],
            &[0, -4, 0, -4, -2],
            &[2, 0, 0, 0, 0],
            &[0, -4, 0, -12, -6],
            &[0, -2, 0, -6, -4],
        ]),
        lat(&[
            &[0, 2, 2, -2, 0],
            &[2, 4, 4, -2, -2],
            &[2, 4, 0, 0, 0],
            &[-2, -2, 0, -4, 0],
            &[0, -2, 0, 0, -4],
        ]),
        lat(&[
            &[-4, -4, -2, -2, 0],
            &[-4, -8, 0, 0, 0],
            &[-2, 0, -4, 0, 0],
            &[-2, 0, 0, -4, 2],
            &[0, 0, 0, 2, -4],
        ]),
    ]
}

pub const SPLIT_NOTE_2_5: &str =
    "printed with H_s = (Z/2)^5 and m = 2, so |H| != |H_s|*m; kept as printed with the relaxed check H_s <= H, m in {1,2}";

/// The six non-Cr₂ maximal K3 groups with splitting and invariant-lattice data.
pub fn exceptional_six() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            group: g("4,4,4"),
            symplectic_part: g("4,4"),
            nonsymplectic_order: 4,
            invariant_rank_range: (1, 1),
            gram_options: vec![lat(&[&[4]])],
            note: None,
        },
        CatalogEntry {
            group: g("2,6,6"),
            symplectic_part: g("2,6"),
            nonsymplectic_order: 6,
            invariant_rank_range: (1, 1),
            gram_options: vec![lat(&[&[2]])],
            note: None,
        },
        CatalogEntry {
            group: g("3,3,6"),
            symplectic_part: g("3,3"),
            nonsymplectic_order: 6,
            invariant_rank_range: (2, 2),
            gram_options: vec![lat(&[&[0, 3], &[3, 0]])],
            note: None,
        },
        CatalogEntry {
            group: g("2,4,8"),
            symplectic_part: g("2,4"),
            nonsymplectic_order: 8,
            invariant_rank_range: (2, 2),
            gram_options: vec![lat(&[&[0, 2], &[2, 0]])],
            note: None,
        },
        CatalogEntry {
            group: g("2,2,2,2,2"),
            symplectic_part: g("2,2,2,2,2"),
            nonsymplectic_order: 2,
            invariant_rank_range: (1, 5),
            gram_options: gram_options_2_2_2_2_2(),
            note: Some(SPLIT_NOTE_2_5),
        },
        CatalogEntry {
            group: g("2,2,2,4"),
            symplectic_part: g("2,2,2"),
            nonsymplectic_order: 4,
            invariant_rank_range: (2, 6),
            gram_options: gram_options_4_2_2_2(),
            note: None,
        },
    ]
}

pub fn exceptional_entry(h: &AbelianGroup) -> Option<CatalogEntry> {
    exceptional_six().into_iter().find(|e| e.group == *h)
}

/// |Fix(σ)| for a symplectic automorphism of order 2..=8.
pub fn symplectic_fixed_count(order: u32) -> Result<u32> {
    match order {
        2 => Ok(8),
        3 => Ok(6),
        4 | 5 => Ok(4),
        6 | 8 => Ok(2),
        7 => Ok(3),
        _ => Err(Error::Invalid(format!("symplectic orders are 2..=8, got {order}"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DuValType {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
}

impl DuValType {
    pub fn new_a(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("A_n needs n ≥ 1".into()));
        }
        Ok(DuValType::A(n))
    }

    pub fn new_d(n: u32) -> Result<Self> {
        if n < 4 {
            return Err(Error::Invalid("D_n needs n ≥ 4".into()));
        }
        Ok(DuValType::D(n))
    }

    pub fn curve_count(&self) -> u32 {
        match *self {
            DuValType::A(n) | DuValType::D(n) => n,
            DuValType::E6 => 6,
            DuValType::E7 => 7,
            DuValType::E8 => 8,
        }
    }

    /// Abelianized local fundamental group of the punctured germ.
    pub fn pi1ab(&self) -> AbelianGroup {
        match *self {
            DuValType::A(n) => AbelianGroup::cyclic(u64::from(n) + 1),
            DuValType::D(n) if n % 2 == 0 => g("2,2"),
            DuValType::D(_) => g("2"),
            DuValType::E6 => g("3"),
            DuValType::E7 => g("2"),
            DuValType::E8 => AbelianGroup::trivial(),
        }
    }
}

impl std::fmt::Display for DuValType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DuValType::A(n) => write!(f, "A{n}"),
            DuValType::D(n) => write!(f, "D{n}"),
            DuValType::E6 => write!(f, "E6"),
            DuValType::E7 => write!(f, "E7"),
            DuValType::E8 => write!(f, "E8"),
        }
    }
}

pub fn du_val_pi1ab(t: DuValType) -> AbelianGroup {
    t.pi1ab()
}

/// The catalog as a JSON value (object keys sort canonically).
pub fn catalog_value() -> Value {
    let six: Vec<Value> = exceptional_six()
        .iter()
        .map(|e| {
            json!({
                "group": e.group,
                "symplectic_part": e.symplectic_part,
                "nonsymplectic_order": e.nonsymplectic_order,
                "invariant_rank_range": [e.invariant_rank_range.0, e.invariant_rank_range.1],
                "gram_options": e.gram_options,
                "note": e.note,
            })
        })
        .collect();
    json!({
        "cr2_families": CR2_FAMILIES.iter().enumerate().map(|(i, (_, f))| json!({"id": i + 1, "form": f})).collect::<Vec<_>>(),
        "nikulin": nikulin_symplectic(),
        "maximal_k3": maximal_k3_groups(),
        "exceptional_six": six,
        "du_val": [
            {"type": "A_n", "curve_count": "n", "pi1ab": "Z/(n+1)"},
            {"type": "D_n, n even", "curve_count": "n", "pi1ab": "(Z/2)^2"},
            {"type": "D_n, n odd", "curve_count": "n", "pi1ab": "Z/2"},
            {"type": "E_6", "curve_count": "6", "pi1ab": "Z/3"},
            {"type": "E_7", "curve_count": "7", "pi1ab": "Z/2"},
            {"type": "E_8", "curve_count": "8", "pi1ab": "1"},
        ],
        "fixed_counts": (2..=8).map(|o| (o.to_string(), json!(symplectic_fixed_count(o).unwrap()))).collect::<serde_json::Map<_, _>>(),
    })
}

/// Canonical JSON text: sorted keys, two-space indent, trailing LF.
pub fn canonical_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn catalog_json() -> String {
    canonical_json(&catalog_value())
}

pub fn sha256_hex(data: &[u8]) -> String {
    Sha256::digest(data).iter().map(|b| format!("{b:02x}")).collect()
}

/// Pinned digest of `catalog_json()`; changes only with a deliberate data edit.
pub const CATALOG_SHA256: &str = "e60951c306112fa60216879110ca7b3cc965fa31b9ec5616c7178591dd679b4a";

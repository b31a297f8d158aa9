//! Orbit-divisibility constraints for the six exceptional K3 groups, basket
//! groupings into G-orbits of singular points, and stabilizer splits.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::abelian::oracle::subgroup_quotient_pairs;
use crate::abelian::AbelianGroup;
use crate::catalog::{self, DuValType};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rr::{printed_weight, Basket};

fn g(s: &str) -> AbelianGroup {
    s.parse().expect("static group literal")
}

/// What the orbit lemmas allow for the non-Gorenstein points of X under H.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitConstraint {
    pub forbid_singular: bool,
    /// At most one orbit of non-Gorenstein points.
    pub single_class: bool,
    /// Every orbit length is a multiple of this.
    pub count_multiple_of: u64,
    /// Every orbit length divides this.
    pub count_divides: Option<u64>,
    /// H acts transitively on the singular points of the anticanonical surface.
    pub transitive: bool,
    /// Du Val types allowed on that surface; `None` means unrestricted.
    pub du_val_types: Option<Vec<DuValType>>,
}

impl OrbitConstraint {
    fn free() -> Self {
        OrbitConstraint {
            forbid_singular: false,
            single_class: false,
            count_multiple_of: 1,
            count_divides: None,
            transitive: false,
            du_val_types: None,
        }
    }

    pub fn count_ok(&self, k: u64) -> bool {
        !self.forbid_singular && k > 0 && k % self.count_multiple_of == 0 && self.count_divides.is_none_or(|d| d % k == 0)
    }

    /// Non-cyclic points (several basket points each) are ruled out when
    /// the surface may only carry A₁/A₂ points.
    pub fn allows_non_cyclic(&self) -> bool {
        self.du_val_types.is_none()
    }
}

pub fn orbit_constraints(h: &AbelianGroup) -> Result<OrbitConstraint> {
    let a12 = Some(vec![DuValType::A(1), DuValType::A(2)]);
    let c = if *h == g("4,4,4") || *h == g("2,6,6") {
        OrbitConstraint { forbid_singular: true, ..OrbitConstraint::free() }
    } else if *h == g("2,4,8") {
        OrbitConstraint {
            single_class: true,
            count_multiple_of: 2,
            count_divides: Some(64),
            transitive: true,
            du_val_types: a12,
            ..OrbitConstraint::free()
        }
    } else if *h == g("3,3,6") {
        OrbitConstraint {
            single_class: true,
            count_multiple_of: 3,
            count_divides: Some(54),
            transitive: true,
            du_val_types: a12,
            ..OrbitConstraint::free()
        }
    } else if *h == g("2,2,2,2,2") {
        OrbitConstraint { count_multiple_of: 8, ..OrbitConstraint::free() }
    } else if *h == g("2,2,2,4") {
        OrbitConstraint { count_multiple_of: 4, ..OrbitConstraint::free() }
    } else {
        return Err(Error::Invalid(format!("no orbit constraints recorded for {h}")));
    };
    Ok(c)
}

/// (point_count, basket_points_per_point) with point_count · per_point = total.
pub fn admissible_groupings(h: &AbelianGroup, _r: u32, total: u64) -> Result<Vec<(u64, u64)>> {
    let c = orbit_constraints(h)?;
    Ok(crate::abelian::divisors(total)
        .into_iter()
        .rev()
        .map(|k| (k, total / k))
        .filter(|&(k, per)| c.count_ok(k) && (per == 1 || c.allows_non_cyclic()))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointClass {
    pub du_val_hint: Option<DuValType>,
    pub r: u32,
    pub per_point: u32,
    pub count: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PointConfiguration {
    pub classes: Vec<PointClass>,
}

impl PointConfiguration {
    pub fn new(classes: Vec<PointClass>) -> Result<Self> {
        if classes.iter().any(|c| c.count == 0 || c.per_point == 0) {
            return Err(Error::Invalid("point counts and basket points per point must be ≥ 1".into()));
        }
        Ok(PointConfiguration { classes })
    }

    pub fn counts(&self) -> Vec<u32> {
        self.classes.iter().map(|c| c.count).collect()
    }
}

/// False exactly when the gcd of the orbit lengths is prime to 6 (then G is
/// of product type).
pub fn coprime_filter(config: &PointConfiguration) -> bool {
    let d = config.classes.iter().fold(0u32, |a, c| a.gcd(&c.count));
    d % 2 == 0 || d % 3 == 0
}

/// The du Val point of the anticanonical surface at a cyclic point of index r.
pub fn cyclic_du_val_type(r: u32) -> Result<DuValType> {
    if r < 2 {
        return Err(Error::Invalid(format!("index must be ≥ 2, got {r}")));
    }
    DuValType::new_a(r - 1)
}

/// Exceptional curves plus a hyperplane class must fit in ρ ≤ 20.
pub fn picard_bound_feasible(types: &[DuValType]) -> bool {
    types.iter().map(|t| t.curve_count()).sum::<u32>() < 20
}

/// (stabilizer H_x, orbit group H_Σ) for a transitive orbit of size n.
pub fn stabilizer_splits(h: &AbelianGroup, n: u64, max_order: u64) -> Result<BTreeSet<(AbelianGroup, AbelianGroup)>> {
    if n == 0 || h.order() % n != 0 {
        return Err(Error::Invalid(format!("orbit size {n} does not divide |{h}| = {}", h.order())));
    }
    Ok(subgroup_quotient_pairs(h, max_order)?
        .into_iter()
        .filter(|(_, q)| q.order() == n)
        .collect())
}

/// How the points of one orbit look locally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PointKind {
    /// A single cyclic quotient point 1/r(1,−1,b).
    Cyclic { r: u32, b: u32 },
    /// A non-cyclic point of index r whose basket is n copies of 1/r(1,−1,b), n ≥ 2.
    Repeated { r: u32, b: u32, n: u32 },
    /// Index-4 point with basket 1/4(1,3) + n × 1/2(1,1), n ≥ 1.
    Cax4 { n: u32 },
}

impl PointKind {
    pub fn is_cyclic(&self) -> bool {
        matches!(self, PointKind::Cyclic { .. })
    }

    pub fn index(&self) -> u32 {
        match *self {
            PointKind::Cyclic { r, .. } | PointKind::Repeated { r, .. } => r,
            PointKind::Cax4 { .. } => 4,
        }
    }

    pub fn basket_points(&self) -> u32 {
        match *self {
            PointKind::Cyclic { .. } => 1,
            PointKind::Repeated { n, .. } => n,
            PointKind::Cax4 { n } => n + 1,
        }
    }

    /// (r, b, multiplicity) entries of the local basket.
    fn local(&self) -> Vec<(u32, u32, u32)> {
        match *self {
            PointKind::Cyclic { r, b } => vec![(r, b, 1)],
            PointKind::Repeated { r, b, n } => vec![(r, b, n)],
            PointKind::Cax4 { n } => vec![(2, 1, n), (4, 1, 1)],
        }
    }
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PointKind::Cyclic { r, b } => {
                let a = printed_weight(r, b);
                write!(f, "1/{r}({a},{},1)", r - a)
            }
            PointKind::Repeated { r, b, n } => {
                let a = printed_weight(r, b);
                write!(f, "[{n}×1/{r}({a},{},1)]", r - a)
            }
            PointKind::Cax4 { n } => write!(f, "cAx/4[1/4(1,3,1)+{n}×1/2(1,1,1)]"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Orbit {
    pub count: u32,
    pub kind: PointKind,
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}×{}", self.count, self.kind)
    }
}

/// A partition of a basket into orbits of identical points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Grouping(pub Vec<Orbit>);

impl Grouping {
    pub fn has_non_cyclic(&self) -> bool {
        self.0.iter().any(|o| !o.kind.is_cyclic())
    }

    pub fn configuration(&self) -> PointConfiguration {
        PointConfiguration {
            classes: self
                .0
                .iter()
                .map(|o| PointClass {
                    du_val_hint: if o.kind.is_cyclic() { cyclic_du_val_type(o.kind.index()).ok() } else { None },
                    r: o.kind.index(),
                    per_point: o.kind.basket_points(),
                    count: o.count,
                })
                .collect(),
        }
    }
}

impl fmt::Display for Grouping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|o| o.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Which local point types a grouping may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Hypothesis {
    /// Any point type; orbit lengths constrained only by the orbit lemmas.
    General,
    /// Every non-Gorenstein point is a cyclic quotient.
    AllCyclic,
}

/// All groupings of `basket` into orbits compatible with `c`.
pub fn basket_groupings(c: &OrbitConstraint, basket: &Basket, hyp: Hypothesis) -> Vec<Grouping> {
    let mut rem: Vec<(u32, u32, u32)> = basket.points().iter().map(|p| (p.r, p.b, p.n)).collect();
    if rem.is_empty() {
        return vec![Grouping(vec![])];
    }
    if c.forbid_singular {
        return vec![];
    }
    let mut out = BTreeSet::new();
    let mut cur = Vec::new();
    search(c, hyp, &mut rem, &mut cur, &mut out);
    out.into_iter()
        .filter(|gr| coprime_filter(&gr.configuration()))
        .collect()
}

fn take(rem: &mut [(u32, u32, u32)], local: &[(u32, u32, u32)], k: u32) -> bool {
    for &(r, b, n) in local {
        match rem.iter().position(|e| e.0 == r && e.1 == b) {
            Some(i) if rem[i].2 >= n * k => {}
            _ => return false,
        }
    }
    for &(r, b, n) in local {
        let i = rem.iter().position(|e| e.0 == r && e.1 == b).expect("checked above");
        rem[i].2 -= n * k;
    }
    true
}

fn give(rem: &mut [(u32, u32, u32)], local: &[(u32, u32, u32)], k: u32) {
    for &(r, b, n) in local {
        let i = rem.iter().position(|e| e.0 == r && e.1 == b).expect("taken earlier");
        rem[i].2 += n * k;
    }
}

fn search(c: &OrbitConstraint, hyp: Hypothesis, rem: &mut Vec<(u32, u32, u32)>, cur: &mut Vec<Orbit>, out: &mut BTreeSet<Grouping>) {
    let Some(first) = rem.iter().position(|e| e.2 > 0) else {
        let mut v = cur.clone();
        v.sort();
        out.insert(Grouping(v));
        return;
    };
    if c.single_class && !cur.is_empty() {
        return;
    }
    let (r, b, avail) = rem[first];
    // Point kinds whose local basket contains (r, b).
    let mut kinds = vec![PointKind::Cyclic { r, b }];
    if hyp == Hypothesis::General {
        kinds.extend((2..=avail).map(|n| PointKind::Repeated { r, b, n }));
        if (r, b) == (2, 1) || (r, b) == (4, 1) {
            let halves = rem.iter().find(|e| (e.0, e.1) == (2, 1)).map_or(0, |e| e.2);
            kinds.extend((1..=halves).map(|n| PointKind::Cax4 { n }));
        }
    }
    for kind in kinds {
        let local = kind.local();
        for k in 1..=avail {
            if !c.count_ok(u64::from(k)) {
                continue;
            }
            if take(rem, &local, k) {
                cur.push(Orbit { count: k, kind });
                search(c, hyp, rem, cur, out);
                cur.pop();
                give(rem, &local, k);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilteredBasket {
    pub basket: Basket,
    pub groupings: Vec<Grouping>,
}

/// Baskets admitting at least one orbit grouping for `h`, with those groupings.
pub fn filter_basket_table(h: &AbelianGroup, baskets: &[Basket], hyp: Hypothesis, exec: Exec) -> Result<Vec<FilteredBasket>> {
    let c = orbit_constraints(h)?;
    let res = exec.map(baskets, |b| FilteredBasket { basket: b.clone(), groupings: basket_groupings(&c, b, hyp) });
    Ok(res.into_iter().filter(|f| !f.groupings.is_empty()).collect())
}

/// The groups among the four with orbit data that allow `basket`.
pub fn possible_groups(basket: &Basket, hyp: Hypothesis) -> BTreeSet<AbelianGroup> {
    catalog::exceptional_groups()
        .into_iter()
        .filter(|h| {
            let c = orbit_constraints(h).expect("all six have constraints");
            !basket_groupings(&c, basket, hyp).is_empty()
        })
        .collect()
}

/// Groups allowing `basket` through a grouping with a non-cyclic point,
/// with those groupings.
pub fn non_cyclic_readings(basket: &Basket) -> Vec<(AbelianGroup, Vec<Grouping>)> {
    catalog::exceptional_groups()
        .into_iter()
        .filter_map(|h| {
            let c = orbit_constraints(&h).expect("all six have constraints");
            let gs: Vec<Grouping> = basket_groupings(&c, basket, Hypothesis::General)
                .into_iter()
                .filter(Grouping::has_non_cyclic)
                .collect();
            (!gs.is_empty()).then_some((h, gs))
        })
        .collect()
}

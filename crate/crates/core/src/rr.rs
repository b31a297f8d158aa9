//! Orbifold Riemann–Roch for baskets of terminal cyclic quotient points
//! 1/r(1,−1,b), in exact rational arithmetic.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;

pub type Q = Ratio<i128>;

/// Upper bound (exclusive) on Σ n(r − 1/r).
pub const MIYAOKA_BOUND: i128 = 24;

/// c_Q(D) for D of local type i at a point 1/r(1,−1,b).
pub fn c_q(r: u32, b: u32, i: u32) -> Result<Q> {
    if r < 2 || i >= r {
        return Err(Error::Invalid(format!("need r ≥ 2 and 0 ≤ i < r, got r={r}, i={i}")));
    }
    let (r, b, i) = (r as i128, b as i128, i as i128);
    let mut s = Q::new(-i * (r * r - 1), 12 * r);
    for j in 1..i {
        let bj = (b * j).rem_euclid(r);
        s += Q::new(bj * (r - bj), 2 * r);
    }
    Ok(s)
}

/// The term t = b(r−b)/2r subtracted per point in h⁰(−K) = 3 + (−K)³/2 − Σ t.
pub fn genus_contribution(r: u32, b: u32) -> Q {
    let (r, b) = (r as i128, b as i128);
    Q::new(b * (r - b), 2 * r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasketPoint {
    pub r: u32,
    pub b: u32,
    pub n: u32,
}

impl BasketPoint {
    pub fn new(r: u32, b: u32, n: u32) -> Result<Self> {
        let p = BasketPoint { r, b, n };
        p.check()?;
        Ok(p)
    }

    pub fn check(&self) -> Result<()> {
        let BasketPoint { r, b, n } = *self;
        if r < 2 || b == 0 || 2 * b > r || r.gcd(&b) != 1 || n == 0 {
            return Err(Error::Invalid(format!(
                "basket point needs r ≥ 2, 0 < b ≤ r/2, gcd(b,r)=1, n ≥ 1; got r={r}, b={b}, n={n}"
            )));
        }
        Ok(())
    }

    /// r − 1/r.
    pub fn miyaoka_weight(&self) -> Q {
        let r = self.r as i128;
        Q::new(r * r - 1, r)
    }
}

/// A multiset of basket points, kept merged and sorted by (r, b).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Basket {
    points: Vec<BasketPoint>,
}

impl Basket {
    pub fn new(points: impl IntoIterator<Item = BasketPoint>) -> Result<Self> {
        let mut v: Vec<BasketPoint> = Vec::new();
        for p in points {
            p.check()?;
            match v.iter_mut().find(|q| (q.r, q.b) == (p.r, p.b)) {
                Some(q) => q.n += p.n,
                None => v.push(p),
            }
        }
        v.sort();
        Ok(Basket { points: v })
    }

    /// Points as printed, n × 1/r(a, −a, 1): (n, r, a) triples.
    pub fn from_printed(triples: &[(u32, u32, u32)]) -> Result<Self> {
        let pts = triples
            .iter()
            .map(|&(n, r, a)| Ok(BasketPoint { r, b: printed_to_b(r, a, 1)?, n }))
            .collect::<Result<Vec<_>>>()?;
        Basket::new(pts)
    }

    /// Shorthand for (n, r, b) triples in the 1/r(1, −1, b) normalization.
    pub fn from_triples(triples: &[(u32, u32, u32)]) -> Result<Self> {
        Basket::new(
            triples
                .iter()
                .map(|&(n, r, b)| BasketPoint { r, b, n }),
        )
    }

    pub fn points(&self) -> &[BasketPoint] {
        &self.points
    }

    pub fn total_point_count(&self) -> u32 {
        self.points.iter().map(|p| p.n).sum()
    }

    pub fn miyaoka_sum(&self) -> Q {
        self.points
            .iter()
            .fold(Q::zero(), |acc, p| acc + p.miyaoka_weight() * Q::from(p.n as i128))
    }

    pub fn genus_sum(&self) -> Q {
        self.points
            .iter()
            .fold(Q::zero(), |acc, p| acc + genus_contribution(p.r, p.b) * Q::from(p.n as i128))
    }

    /// (−K)³ = 2(h⁰ − 3) + 2 Σ n·t.
    pub fn anticanonical_cube(&self, h0: i64) -> Q {
        Q::from(2 * (h0 as i128 - 3)) + self.genus_sum() * Q::from(2)
    }

    pub fn miyaoka_valid(&self) -> bool {
        self.miyaoka_sum() < Q::from(MIYAOKA_BOUND)
    }

    /// Largest index present (the Gorenstein index of the basket).
    pub fn index(&self) -> u32 {
        self.points.iter().map(|p| p.r).fold(1, |a, r| a.lcm(&r))
    }

    /// Index-r sub-basket.
    pub fn class(&self, r: u32) -> Vec<BasketPoint> {
        self.points.iter().copied().filter(|p| p.r == r).collect()
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.miyaoka_sum().cmp(&other.miyaoka_sum()).then_with(|| {
            let key = |b: &Basket| b.points.iter().map(|p| (p.r, p.b, p.n)).collect::<Vec<_>>();
            key(self).cmp(&key(other))
        })
    }
}

impl fmt::Display for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points.is_empty() {
            return write!(f, "∅");
        }
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let a = printed_weight(p.r, p.b);
            write!(f, "{}×1/{}({},{},1)", p.n, p.r, a, p.r - a)?;
        }
        Ok(())
    }
}

fn inverse_mod(a: u32, r: u32) -> Option<u32> {
    (1..r).find(|&x| (u64::from(a) * u64::from(x)) % u64::from(r) == 1)
}

/// b ≤ r/2 for a point printed 1/r(a, −a, w), i.e. ±w·a⁻¹ mod r.
pub fn printed_to_b(r: u32, a: u32, w: u32) -> Result<u32> {
    let bad = || Error::Invalid(format!("1/{r}({a}, {}, {w}) is not a terminal cyclic quotient", r.wrapping_sub(a)));
    if r < 2 || a == 0 || a >= r {
        return Err(bad());
    }
    let ai = inverse_mod(a, r).ok_or_else(bad)?;
    let b = ((u64::from(w) * u64::from(ai)) % u64::from(r)) as u32;
    if b == 0 || b.gcd(&r) != 1 {
        return Err(bad());
    }
    Ok(b.min(r - b))
}

/// The printed weight a ≤ r/2 with 1/r(a, −a, 1) ≅ 1/r(1, −1, b).
pub fn printed_weight(r: u32, b: u32) -> u32 {
    let a = inverse_mod(b, r).unwrap_or(b);
    a.min(r - a)
}

/// All (r, b) with r − 1/r < 24, b ≤ r/2 coprime to r.
pub fn point_types() -> Vec<(u32, u32)> {
    let mut v = Vec::new();
    for r in 2u32.. {
        if Q::new((r * r - 1) as i128, r as i128) >= Q::from(MIYAOKA_BOUND) {
            break;
        }
        for b in 1..=r / 2 {
            if r.gcd(&b) == 1 {
                v.push((r, b));
            }
        }
    }
    v
}

/// Every basket with Σ n(r − 1/r) < 24 and (−K)³ > 0 for the given h⁰,
/// sorted by Miyaoka sum then lexicographically.
pub fn enumerate_baskets(h0: i64, fano_index: u32, exec: Exec) -> Result<Vec<Basket>> {
    if fano_index != 1 {
        return Err(Error::Unsupported(format!(
            "basket enumeration is only defined for Fano index 1 (got {fano_index}); higher indices are fixture-validated"
        )));
    }
    let types = point_types();
    let weights: Vec<Q> = types.iter().map(|&(r, _)| Q::new((r * r - 1) as i128, r as i128)).collect();
    let ts: Vec<Q> = types.iter().map(|&(r, b)| genus_contribution(r, b)).collect();
    let bound = Q::from(MIYAOKA_BOUND);
    let threshold = Q::from(3 - h0 as i128); // (−K)³ > 0 ⇔ Σt > 3 − h⁰

    struct Ctx<'a> {
        types: &'a [(u32, u32)],
        weights: &'a [Q],
        ts: &'a [Q],
        bound: Q,
        threshold: Q,
    }

    fn rec(ctx: &Ctx, start: usize, w: Q, t: Q, cur: &mut Vec<BasketPoint>, out: &mut Vec<Basket>) {
        for j in start..ctx.types.len() {
            let (r, b) = ctx.types[j];
            let mut n = 1;
            loop {
                let w2 = w + ctx.weights[j] * Q::from(n as i128);
                if w2 >= ctx.bound {
                    break;
                }
                let t2 = t + ctx.ts[j] * Q::from(n as i128);
                cur.push(BasketPoint { r, b, n });
                if t2 > ctx.threshold {
                    out.push(Basket { points: cur.clone() });
                }
                rec(ctx, j + 1, w2, t2, cur, out);
                cur.pop();
                n += 1;
            }
        }
    }

    let ctx = Ctx {
        types: &types,
        weights: &weights,
        ts: &ts,
        bound,
        threshold,
    };
    let starts: Vec<usize> = (0..types.len()).collect();
    let chunks = exec.map(&starts, |&j| {
        let mut out = Vec::new();
        let (r, b) = types[j];
        let mut n = 1;
        loop {
            let w = weights[j] * Q::from(n as i128);
            if w >= bound {
                break;
            }
            let t = ts[j] * Q::from(n as i128);
            let mut cur = vec![BasketPoint { r, b, n }];
            if t > threshold {
                out.push(Basket { points: cur.clone() });
            }
            rec(&ctx, j + 1, w, t, &mut cur, &mut out);
            n += 1;
        }
        out
    });
    let mut all: Vec<Basket> = chunks.into_iter().flatten().collect();
    if Q::zero() > threshold {
        all.push(Basket::default());
    }
    all.sort_by(Basket::canonical_cmp);
    Ok(all)
}

/// A point as printed in the higher-index tables: n × 1/r(a, r−a, w).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixturePoint {
    pub n: u32,
    pub r: u32,
    pub a: u32,
    pub c: u32,
    /// Third printed weight; carried as metadata only.
    pub w: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureReport {
    pub basket: Basket,
    pub miyaoka_sum: String,
    pub miyaoka_valid: bool,
    pub points_valid: bool,
    pub problems: Vec<String>,
    pub pass: bool,
}

/// Checks point invariants and the Miyaoka bound for a printed basket.
pub fn validate_fixture(points: &[FixturePoint]) -> FixtureReport {
    let mut problems = Vec::new();
    let mut converted = Vec::new();
    for p in points {
        if p.a + p.c != p.r {
            problems.push(format!("weights ({},{}) do not sum to r={}", p.a, p.c, p.r));
        }
        match printed_to_b(p.r, p.a, p.w).and_then(|b| BasketPoint::new(p.r, b, p.n)) {
            Ok(bp) => converted.push(bp),
            Err(e) => problems.push(e.to_string()),
        }
    }
    let points_valid = problems.is_empty();
    let basket = Basket::new(converted).unwrap_or_default();
    let sum = basket.miyaoka_sum();
    let miyaoka_valid = basket.miyaoka_valid();
    if !miyaoka_valid {
        problems.push(format!("Miyaoka sum {sum} is not below {MIYAOKA_BOUND}"));
    }
    FixtureReport {
        basket,
        miyaoka_sum: sum.to_string(),
        miyaoka_valid,
        points_valid,
        pass: points_valid && miyaoka_valid,
        problems,
    }
}

/// Largest N for which N half-points satisfy the Miyaoka bound.
pub fn max_point_count() -> u32 {
    // Each point contributes at least 3/2.
    (Q::from(MIYAOKA_BOUND) / Q::new(3, 2)).ceil().to_u32().unwrap_or(0) - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i128, b: i128) -> Q {
        Q::new(a, b)
    }

    #[test]
    fn c_q_values() {
        assert_eq!(c_q(2, 1, 1).unwrap(), q(-1, 8));
        assert_eq!(c_q(3, 1, 1).unwrap(), q(-2, 9));
        assert_eq!(c_q(5, 2, 0).unwrap(), Q::zero());
        assert!(c_q(3, 1, 3).is_err());
    }

    #[test]
    fn genus_values() {
        assert_eq!(genus_contribution(2, 1), q(1, 4));
        assert_eq!(genus_contribution(3, 1), q(1, 3));
        assert_eq!(genus_contribution(4, 1), q(3, 8));
        assert_eq!(genus_contribution(5, 2), q(3, 5));
    }

    #[test]
    fn cubes() {
        let half = |n| Basket::from_triples(&[(n, 2, 1)]).unwrap();
        assert_eq!(half(9).anticanonical_cube(1), q(1, 2));
        assert_eq!(half(12).anticanonical_cube(1), q(2, 1));
        assert_eq!(Basket::from_triples(&[(8, 3, 1)]).unwrap().anticanonical_cube(1), q(4, 3));
    }

    #[test]
    fn miyaoka() {
        let half = |n| Basket::from_triples(&[(n, 2, 1)]).unwrap();
        assert!(half(15).miyaoka_valid());
        assert_eq!(half(15).miyaoka_sum(), q(45, 2));
        assert!(!half(16).miyaoka_valid());
        assert!(Basket::default().miyaoka_valid());
        assert_eq!(max_point_count(), 15);
    }

    #[test]
    fn basket_merging_and_validation() {
        let b = Basket::from_triples(&[(2, 4, 1), (3, 2, 1), (1, 4, 1)]).unwrap();
        assert_eq!(b.points(), &[BasketPoint { r: 2, b: 1, n: 3 }, BasketPoint { r: 4, b: 1, n: 3 }]);
        assert!(Basket::from_triples(&[(1, 4, 2)]).is_err());
        assert!(Basket::from_triples(&[(1, 5, 3)]).is_err());
        assert!(Basket::from_triples(&[(0, 5, 2)]).is_err());
        assert_eq!(b.to_string(), "3×1/2(1,1,1) + 3×1/4(1,3,1)");
        let nine = Basket::from_printed(&[(2, 9, 2)]).unwrap();
        assert_eq!(nine.points()[0].b, 4);
        assert_eq!(nine.to_string(), "2×1/9(2,7,1)");
        assert_eq!(printed_to_b(11, 4, 1).unwrap(), 3);
        assert_eq!(printed_to_b(3, 1, 2).unwrap(), 1);
        assert!(printed_to_b(4, 2, 1).is_err());
    }

    #[test]
    fn enumeration_bounds() {
        let types = point_types();
        assert_eq!(types.first(), Some(&(2, 1)));
        assert_eq!(types.iter().map(|t| t.0).max(), Some(24));
        let all = enumerate_baskets(1, 1, Exec::Sequential).unwrap();
        assert!(all.iter().all(|b| b.miyaoka_valid() && b.anticanonical_cube(1) > Q::zero()));
        assert!(all.contains(&Basket::from_triples(&[(8, 3, 1)]).unwrap()));
        assert!(all.contains(&Basket::from_triples(&[(6, 2, 1), (2, 4, 1)]).unwrap()));
        assert!(!all.contains(&Basket::from_triples(&[(16, 2, 1)]).unwrap()));
        assert!(enumerate_baskets(1, 2, Exec::Sequential).is_err());
    }

    #[test]
    fn fixture_validation() {
        let ok = validate_fixture(&[FixturePoint { n: 2, r: 11, a: 4, c: 7, w: 2 }]);
        assert!(ok.pass);
        let ok = validate_fixture(&[FixturePoint { n: 3, r: 7, a: 1, c: 6, w: 4 }]);
        assert!(ok.pass);
        let bad = validate_fixture(&[FixturePoint { n: 16, r: 2, a: 1, c: 1, w: 1 }]);
        assert!(!bad.pass && bad.points_valid && !bad.miyaoka_valid);
    }
}

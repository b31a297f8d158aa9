//! Integer symmetric bilinear forms with exact arithmetic.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::abelian::AbelianGroup;
use crate::error::{Error, Result};
use crate::smith::smith_diagonal;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Lattice {
    gram: Vec<Vec<i64>>,
}

impl Lattice {
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("Gram matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Invalid(format!("Gram matrix not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(Lattice { gram })
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        Lattice {
            gram: (0..n)
                .map(|i| (0..n).map(|j| if i == j { entries[i] } else { 0 }).collect())
                .collect(),
        }
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[i][i] % 2 == 0)
    }

    fn big(&self) -> Vec<Vec<BigInt>> {
        self.gram
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn determinant(&self) -> BigInt {
        let n = self.rank();
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.big();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// A_Λ = Λ*/Λ.
    pub fn discriminant_group(&self) -> Result<AbelianGroup> {
        let diag = smith_diagonal(&self.big());
        if diag.iter().any(Zero::is_zero) {
            return Err(Error::Degenerate);
        }
        let factors: Vec<u64> = diag
            .iter()
            .map(|d| d.to_u64().ok_or_else(|| Error::Invalid("discriminant too large".into())))
            .collect::<Result<_>>()?;
        AbelianGroup::canonicalize(&factors)
    }

    /// kΛ: every entry multiplied by k².
    pub fn scale(&self, k: i64) -> Lattice {
        Lattice {
            gram: self
                .gram
                .iter()
                .map(|r| r.iter().map(|x| x * k * k).collect())
                .collect(),
        }
    }

    /// (positive, negative) inertia via rational symmetric elimination.
    pub fn signature(&self) -> Result<(usize, usize)> {
        let n = self.rank();
        let mut a: Vec<Vec<BigRational>> = self
            .gram
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let (mut pos, mut neg) = (0, 0);
        let mut active: Vec<usize> = (0..n).collect();
        while !active.is_empty() {
            let pivot = match active.iter().copied().find(|&i| !a[i][i].is_zero()) {
                Some(i) => i,
                None => {
                    // Zero diagonal: e_i ← e_i + e_j makes a_ii = 2·a_ij ≠ 0.
                    let pair = active.iter().copied().find_map(|i| {
                        active.iter().copied().find(|&j| j != i && !a[i][j].is_zero()).map(|j| (i, j))
                    });
                    let Some((i, j)) = pair else {
                        return Err(Error::Degenerate);
                    };
                    for k in 0..n {
                        let v = a[j][k].clone();
                        a[i][k] += v;
                    }
                    for k in 0..n {
                        let v = a[k][j].clone();
                        a[k][i] += v;
                    }
                    i
                }
            };
            let d = a[pivot][pivot].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            active.retain(|&i| i != pivot);
            for &i in &active {
                let f = &a[i][pivot] / &d;
                if f.is_zero() {
                    continue;
                }
                for &j in &active {
                    let v = &f * &a[pivot][j];
                    a[i][j] -= v;
                }
            }
            for &i in &active {
                a[i][pivot] = BigRational::zero();
                a[pivot][i] = BigRational::zero();
            }
        }
        Ok((pos, neg))
    }

    /// gcd of all values v·v (that is, of the diagonal and twice the off-diagonal entries).
    pub fn value_gcd(&self) -> i64 {
        let n = self.rank();
        let mut g = 0i64;
        for i in 0..n {
            g = g.gcd(&self.gram[i][i]);
            for j in i + 1..n {
                g = g.gcd(&(2 * self.gram[i][j]));
            }
        }
        g
    }
}

/// det_sub / det_sup is a positive perfect square.
pub fn finite_index_compatible(det_sub: &BigInt, det_sup: &BigInt) -> bool {
    if det_sup.is_zero() || !det_sub.is_multiple_of(det_sup) {
        return false;
    }
    let q = det_sub / det_sup;
    q.is_positive() && {
        let r = q.sqrt();
        &r * &r == q
    }
}

/// Middle lattices diag(stride·a, diag_tail…) for a = 1, 2, ….
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalFamily {
    pub stride: i64,
    pub tail: Vec<i64>,
}

impl DiagonalFamily {
    pub fn member(&self, a: i64) -> Lattice {
        let mut d = vec![self.stride * a];
        d.extend_from_slice(&self.tail);
        Lattice::diagonal(&d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SandwichCertificate {
    /// The family member with this parameter fits.
    Witness { a: i64 },
    /// Every a ≤ bound was checked; larger a give |det M| > |det inner|.
    Exhausted { bound: i64 },
}

/// Is there a family member M with inner ⊆ M ⊆ outer at the level of
/// discriminants, where inner = μ·outer?
pub fn sandwich_feasible(inner: &Lattice, outer: &Lattice, family: &DiagonalFamily) -> Result<(bool, SandwichCertificate)> {
    scale_factor(inner, outer).ok_or_else(|| Error::Invalid("inner lattice is not a scale of outer".into()))?;
    if family.stride <= 0 || family.tail.contains(&0) {
        return Err(Error::Invalid("family needs positive stride and nonzero tail".into()));
    }
    let det_in = inner.determinant();
    let det_out = outer.determinant();
    if det_in.is_zero() {
        return Err(Error::Degenerate);
    }
    let unit: BigInt = family.tail.iter().fold(BigInt::from(family.stride), |acc, &x| acc * x);
    let bound = (det_in.abs() / unit.abs()).to_i64().unwrap_or(i64::MAX);
    for a in 1..=bound {
        let det_m = &unit * a;
        if finite_index_compatible(&det_in, &det_m) && finite_index_compatible(&det_m, &det_out) {
            return Ok((true, SandwichCertificate::Witness { a }));
        }
    }
    Ok((false, SandwichCertificate::Exhausted { bound }))
}

/// μ with inner = scale(outer, μ), if any.
pub fn scale_factor(inner: &Lattice, outer: &Lattice) -> Option<i64> {
    if inner.rank() != outer.rank() {
        return None;
    }
    let (i, j) = (0..outer.rank())
        .flat_map(|i| (0..outer.rank()).map(move |j| (i, j)))
        .find(|&(i, j)| outer.gram[i][j] != 0)?;
    let ratio = inner.gram[i][j] / outer.gram[i][j];
    let mu = ratio.sqrt();
    (mu > 0 && mu * mu == ratio && outer.scale(mu) == *inner).then_some(mu)
}

/// Orbit-divisor sandwich: inner = μ·M_H, middle diag(stride·a, curve_self_int)
/// with stride the gcd of values of the outer form (the orbit class lives in
/// the outer lattice, so its square is one of those values).
pub fn orbit_class_lattice_check(mu: i64, curve_self_int: i64, invariant_gram: &Lattice) -> Result<(bool, SandwichCertificate)> {
    let inner = invariant_gram.scale(mu);
    let family = DiagonalFamily {
        stride: invariant_gram.value_gcd().abs().max(1),
        tail: vec![curve_self_int],
    };
    sandwich_feasible(&inner, invariant_gram, &family)
}

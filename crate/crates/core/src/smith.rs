//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Diagonal of the Smith normal form of `m` (rows × cols), nonnegative,
/// each entry dividing the next. Length is `min(rows, cols)`; trailing
/// zeros mark rank deficiency.
pub fn smith_diagonal(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);

    for t in 0..n {
        // Pick the smallest nonzero entry in the trailing block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() {
                    match best {
                        Some((bi, bj)) if a[bi][bj].abs() <= a[i][j].abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
        }
        let Some((pi, pj)) = best else {
            diag.extend(std::iter::repeat_n(BigInt::zero(), n - t));
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let v = &q * &a[i][t];
                    a[i][j] -= v;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                move_min_to_pivot(&mut a, t);
                continue;
            }
            // Row and column cleared; enforce divisibility on the block.
            let mut fix = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !a[i][j].is_multiple_of(&a[t][t]) {
                        fix = Some(i);
                        break 'scan;
                    }
                }
            }
            match fix {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

// After a reduction pass leaves nonzero remainders in row/column t, bring
// the smallest of them to (t, t).
fn move_min_to_pivot(a: &mut [Vec<BigInt>], t: usize) {
    let rows = a.len();
    let cols = a[0].len();
    let mut best = (t, t);
    for i in t..rows {
        let v = &a[i][t];
        if !v.is_zero() && (a[best.0][best.1].is_zero() || v.abs() < a[best.0][best.1].abs()) {
            best = (i, t);
        }
    }
    for j in t..cols {
        let v = &a[t][j];
        if !v.is_zero() && (a[best.0][best.1].is_zero() || v.abs() < a[best.0][best.1].abs()) {
            best = (t, j);
        }
    }
    let (bi, bj) = best;
    a.swap(t, bi);
    if bj != t {
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
    }
}

pub fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &[Vec<i64>]) -> Vec<i64> {
        smith_diagonal(&to_big(m))
            .into_iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn small_forms() {
        assert_eq!(diag(&[vec![0, 2], vec![2, 0]]), vec![2, 2]);
        assert_eq!(diag(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(diag(&[vec![4, 0], vec![0, 6]]), vec![2, 12]);
        assert_eq!(diag(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
    }

    #[test]
    fn rectangular() {
        // Z^2 / <(4,0),(0,4),(1,1)> ≅ Z/4
        assert_eq!(diag(&[vec![4, 0], vec![0, 4], vec![1, 1]]), vec![1, 4]);
        assert_eq!(diag(&[vec![2, 4, 4]]), vec![2]);
    }
}

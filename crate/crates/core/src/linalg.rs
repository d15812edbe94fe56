//! Exact dense linear algebra over `Q` and `Z`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type RatMatrix = Vec<Vec<BigRational>>;
pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_rational_matrix(m: &[Vec<i64>]) -> RatMatrix {
    m.iter().map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect()
}

pub fn to_big_matrix(m: &[Vec<i64>]) -> IntMatrix {
    m.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut RatMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let delta = &factor * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &RatMatrix) -> usize {
    rref(&mut m.clone()).len()
}

/// A basis of `{x : m x = 0}`.
pub fn nullspace(m: &RatMatrix) -> Vec<Vec<BigRational>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `m x = b`; returns one solution (free variables set to zero) or
/// `None` if inconsistent.
pub fn solve(m: &RatMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut aug: RatMatrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][cols].clone();
    }
    Some(x)
}

/// Determinant by fraction-free Bareiss elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rational inverse by Gauss-Jordan; `None` if singular.
pub fn inverse(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let mut aug: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Inverse of a unimodular integer matrix; `None` unless `det = ±1`.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    if !determinant(m).abs().is_one() {
        return None;
    }
    let rat: RatMatrix = m.iter().map(|row| row.iter().cloned().map(BigRational::from_integer).collect()).collect();
    inverse(&rat).map(|inv| inv.into_iter().map(|row| row.into_iter().map(|x| x.to_integer()).collect()).collect())
}

pub fn mat_vec_int(m: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&to_big_matrix(&[vec![2, 1], vec![7, 4]])), BigInt::from(1));
        assert_eq!(determinant(&to_big_matrix(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]])), BigInt::from(-1));
        assert_eq!(determinant(&to_big_matrix(&[vec![1, 2], vec![2, 4]])), BigInt::zero());
    }

    #[test]
    fn nullspace_and_solve() {
        let m = to_rational_matrix(&[vec![1, 1, 0], vec![0, 1, 1]]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        let b: Vec<BigRational> = [2, 3].iter().map(|&x| BigRational::from_integer(x.into())).collect();
        let x = solve(&m, &b).unwrap();
        assert_eq!(&x[0] + &x[1], b[0]);
        let bad = to_rational_matrix(&[vec![1, 1], vec![1, 1]]);
        assert!(solve(&bad, &[BigRational::one(), BigRational::zero()]).is_none());
    }

    #[test]
    fn unimodular_inverse_is_integral() {
        let m = to_big_matrix(&[vec![2, 1], vec![7, 4]]);
        let inv = unimodular_inverse(&m).unwrap();
        assert_eq!(inv, to_big_matrix(&[vec![4, -1], vec![-7, 2]]));
        assert!(unimodular_inverse(&to_big_matrix(&[vec![2, 0], vec![0, 1]])).is_none());
    }

    proptest! {
        #[test]
        fn bareiss_matches_rational_elimination(entries in proptest::collection::vec(-5i64..6, 16)) {
            let m: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let d = determinant(&to_big_matrix(&m));
            let r = rank(&to_rational_matrix(&m));
            prop_assert_eq!(d.is_zero(), r < 4);
            if !d.is_zero() {
                let inv = inverse(&to_rational_matrix(&m)).unwrap();
                // det(A^-1) = 1/det(A), checked via the product being the identity.
                let a = to_rational_matrix(&m);
                for i in 0..4 {
                    for j in 0..4 {
                        let s: BigRational = (0..4).map(|k| &a[i][k] * &inv[k][j]).sum();
                        prop_assert_eq!(s, if i == j { BigRational::one() } else { BigRational::zero() });
                    }
                }
            }
        }
    }
}

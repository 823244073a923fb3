//! Small exact linear algebra helpers: rational Gaussian elimination and
//! integer solution extraction. Matrices are dense and tiny (ranks at most
//! a few dozen), so no effort is spent on sparsity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type RMat = Vec<Vec<BigRational>>;

pub fn rmat_from_i64(rows: &[Vec<i64>]) -> RMat {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect()
}

/// Solve `A x = b` exactly. Returns `None` when the system is inconsistent.
/// When the solution space is positive dimensional the free variables are set
/// to zero, which is only used by callers that check the result afterwards.
pub fn solve(a: &RMat, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = a.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let n = a[0].len();
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let pivot = (row..m).find(|&r| !aug[r][col].is_zero());
        let Some(p) = pivot else { continue };
        aug.swap(row, p);
        let inv = BigRational::one() / aug[row][col].clone();
        for c in col..=n {
            let v = &aug[row][c] * &inv;
            aug[row][c] = v;
        }
        for r in 0..m {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=n {
                    let v = &aug[r][c] - &(&f * &aug[row][c]);
                    aug[r][c] = v;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m {
            break;
        }
    }
    // inconsistency: a zero row with nonzero rhs
    for r in row..m {
        if !aug[r][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &col) in pivot_cols.iter().enumerate() {
        x[col] = aug[i][n].clone();
    }
    Some(x)
}

/// Exact inverse of a square rational matrix.
pub fn invert(a: &RMat) -> Option<RMat> {
    let n = a.len();
    let mut aug = a.clone();
    let mut inv: RMat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        inv.swap(col, pivot);
        let d = aug[col][col].clone();
        for j in 0..n {
            aug[col][j] = &aug[col][j] / &d;
            inv[col][j] = &inv[col][j] / &d;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for j in 0..n {
                    let v = &aug[r][j] - &(&f * &aug[col][j]);
                    aug[r][j] = v;
                    let v = &inv[r][j] - &(&f * &inv[col][j]);
                    inv[r][j] = v;
                }
            }
        }
    }
    Some(inv)
}

/// Rank of a rational matrix.
pub fn rank(a: &RMat) -> usize {
    let m = a.len();
    if m == 0 {
        return 0;
    }
    let n = a[0].len();
    let mut mat = a.clone();
    let mut rank = 0;
    for col in 0..n {
        let pivot = (rank..m).find(|&r| !mat[r][col].is_zero());
        let Some(p) = pivot else { continue };
        mat.swap(rank, p);
        let inv = BigRational::one() / mat[rank][col].clone();
        for c in col..n {
            let v = &mat[rank][c] * &inv;
            mat[rank][c] = v;
        }
        for r in 0..m {
            if r != rank && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in col..n {
                    let v = &mat[r][c] - &(&f * &mat[rank][c]);
                    mat[r][c] = v;
                }
            }
        }
        rank += 1;
        if rank == m {
            break;
        }
    }
    rank
}

/// Express `target` as a linear combination of `gens` (columns), exactly.
/// Returns the coefficient vector when one exists and is unique on the span.
pub fn coordinates_in_span(gens: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigRational>> {
    if gens.is_empty() {
        return if target.iter().all(|&x| x == 0) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let dim = gens[0].len();
    // columns are the generators
    let a: RMat = (0..dim)
        .map(|i| {
            gens.iter()
                .map(|g| BigRational::from_integer(BigInt::from(g[i])))
                .collect()
        })
        .collect();
    let b: Vec<BigRational> = target
        .iter()
        .map(|&x| BigRational::from_integer(BigInt::from(x)))
        .collect();
    let x = solve(&a, &b)?;
    // verify (guards the free-variable convention when gens are dependent)
    for i in 0..dim {
        let mut acc = BigRational::zero();
        for (j, g) in gens.iter().enumerate() {
            acc += &x[j] * BigRational::from_integer(BigInt::from(g[i]));
        }
        if acc != b[i] {
            return None;
        }
    }
    Some(x)
}

/// Integer coordinates of `target` in the span of `gens`, or `None`.
pub fn integer_coordinates(gens: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigInt>> {
    let x = coordinates_in_span(gens, target)?;
    let mut out = Vec::with_capacity(x.len());
    for c in x {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
    }
    Some(out)
}

/// Nonnegative integer coordinates of `target` in the span of `gens`.
pub fn nonneg_integer_coordinates(gens: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigInt>> {
    let x = integer_coordinates(gens, target)?;
    if x.iter().any(|c| c.is_negative()) {
        return None;
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn solve_unique() {
        let a = rmat_from_i64(&[vec![1, 1], vec![1, -1]]);
        let x = solve(&a, &[r(3), r(1)]).unwrap();
        assert_eq!(x, vec![r(2), r(1)]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = rmat_from_i64(&[vec![1, 1], vec![2, 2]]);
        assert!(solve(&a, &[r(1), r(3)]).is_none());
    }

    #[test]
    fn integer_combination() {
        // overdetermined: target in span
        let gens = vec![vec![2, 0, 1], vec![0, 1, 1]];
        assert_eq!(
            integer_coordinates(&gens, &[2, 2, 3]).unwrap(),
            vec![BigInt::from(1), BigInt::from(2)]
        );
        assert!(integer_coordinates(&gens, &[1, 0, 0]).is_none());
        assert!(nonneg_integer_coordinates(&gens, &[-2, 0, -1]).is_none());
    }

    #[test]
    fn rank_counts_pivots() {
        let a = rmat_from_i64(&[vec![1, 2], vec![2, 4], vec![0, 1]]);
        assert_eq!(rank(&a), 2);
    }
}

//! Smith normal form over the integers and lattice map diagnostics.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

pub type IMat = Vec<Vec<BigInt>>;

pub fn imat_from_i64(rows: &[Vec<i64>]) -> IMat {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Diagonal of the Smith normal form of `m`, including zeros, with each
/// entry dividing the next.
pub fn smith_normal_form(m: &IMat) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a = m.clone();
    let k = rows.min(cols);
    let mut divisors = Vec::with_capacity(k);

    for t in 0..k {
        loop {
            // find entry of minimal nonzero absolute value in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero() {
                        match best {
                            Some((bi, bj)) if a[i][j].abs() >= a[bi][bj].abs() => {}
                            _ => best = Some((i, j)),
                        }
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            if a[t][t].is_negative() {
                for j in t..cols {
                    a[t][j] = -a[t][j].clone();
                }
            }
            // clear the pivot column
            let mut dirty = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    if !q.is_zero() {
                        for j in t..cols {
                            let v = &a[i][j] - &(&q * &a[t][j]);
                            a[i][j] = v;
                        }
                    }
                    if !a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            // clear the pivot row
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    if !q.is_zero() {
                        for i in t..rows {
                            let v = &a[i][j] - &(&q * &a[i][t]);
                            a[i][j] = v;
                        }
                    }
                    if !a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // enforce divisibility of the remaining block by the pivot
            let mut fixed = true;
            'outer: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&a[i][j] % &a[t][t]).is_zero() {
                        for jj in t..cols {
                            let v = &a[t][jj] + &a[i][jj];
                            a[t][jj] = v;
                        }
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        divisors.push(a[t][t].clone());
    }
    divisors
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Cokernel {
    Finite(BigInt),
    Infinite,
}

/// Injectivity and cokernel data of the lattice map given by an integer
/// matrix acting on column vectors.
#[derive(Debug, Clone, Serialize)]
pub struct MapDiagnostics {
    pub rows: usize,
    pub cols: usize,
    pub elementary_divisors: Vec<BigInt>,
    pub injective: bool,
    pub cokernel: Cokernel,
}

pub fn lattice_map_diagnostics(m: &IMat) -> MapDiagnostics {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let divisors = smith_normal_form(m);
    let rank = divisors.iter().filter(|d| !d.is_zero()).count();
    let injective = rank == cols;
    let cokernel = if rank == rows {
        let mut idx = BigInt::from(1);
        for d in divisors.iter().filter(|d| !d.is_zero()) {
            idx *= d;
        }
        Cokernel::Finite(idx)
    } else {
        Cokernel::Infinite
    };
    MapDiagnostics {
        rows,
        cols,
        elementary_divisors: divisors,
        injective,
        cokernel,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_map() {
        let d = lattice_map_diagnostics(&imat_from_i64(&[vec![1, 0], vec![0, 1]]));
        assert!(d.injective);
        assert_eq!(d.cokernel, Cokernel::Finite(BigInt::from(1)));
    }

    #[test]
    fn index_two_map() {
        // (a, b) -> (a + b, b - a)
        let d = lattice_map_diagnostics(&imat_from_i64(&[vec![1, 1], vec![-1, 1]]));
        assert!(d.injective);
        assert_eq!(d.cokernel, Cokernel::Finite(BigInt::from(2)));
    }

    #[test]
    fn non_injective_map() {
        // (a, b) -> (a + b, 0)
        let d = lattice_map_diagnostics(&imat_from_i64(&[vec![1, 1], vec![0, 0]]));
        assert!(!d.injective);
        assert_eq!(d.cokernel, Cokernel::Infinite);
    }

    #[test]
    fn snf_divisibility() {
        let m = imat_from_i64(&[
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        let d = smith_normal_form(&m);
        assert_eq!(
            d,
            vec![
                BigInt::from(1),
                BigInt::from(3),
                BigInt::from(21),
                BigInt::from(0)
            ]
        );
    }

    #[test]
    fn snf_rectangular() {
        let m = imat_from_i64(&[vec![2, 4, 4]]);
        assert_eq!(smith_normal_form(&m), vec![BigInt::from(2)]);
    }
}

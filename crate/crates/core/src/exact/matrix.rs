//! Dense square matrices over big integers, big rationals, and {0,1}.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, IdentityDiscrepancy, Result};

/// Dense square matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(dim: usize, data: Vec<BigInt>) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        assert_eq!(data.len(), dim * dim, "data length must be dim^2");
        IntMatrix { dim, data }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        IntMatrix::new(dim, data)
    }

    pub fn identity(dim: usize) -> Self {
        IntMatrix::from_fn(dim, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.dim + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        IntMatrix::from_fn(d, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..d {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        })
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    /// Removes row `r` and column `c`; the matrix must be at least 2x2.
    pub fn minor(&self, r: usize, c: usize) -> IntMatrix {
        assert!(self.dim >= 2);
        let d = self.dim - 1;
        IntMatrix::from_fn(d, |i, j| {
            let si = if i < r { i } else { i + 1 };
            let sj = if j < c { j } else { j + 1 };
            self.get(si, sj).clone()
        })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every intermediate division is exact, so all intermediate values are
    /// themselves minors of the input.
    pub fn det_bareiss(&self) -> BigInt {
        let d = self.dim;
        let mut a = self.data.clone();
        let idx = |i: usize, j: usize| i * d + j;
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..d {
            if a[idx(k, k)].is_zero() {
                // find a pivot row below and swap
                let Some(p) = (k + 1..d).find(|&p| !a[idx(p, k)].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..d {
                    a.swap(idx(k, j), idx(p, j));
                }
                sign = -sign;
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    let num = &a[idx(k, k)] * &a[idx(i, j)] - &a[idx(i, k)] * &a[idx(k, j)];
                    a[idx(i, j)] = num / &prev;
                }
                a[idx(i, k)] = BigInt::zero();
            }
            prev = a[idx(k, k)].clone();
        }
        let det = a[idx(d - 1, d - 1)].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }
}

/// Dense square matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        assert!(dim >= 1);
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        RationalMatrix { dim, data }
    }

    pub fn identity(dim: usize) -> Self {
        RationalMatrix::from_fn(dim, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.dim + j]
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        RationalMatrix::from_fn(d, |i, j| {
            let mut acc = BigRational::zero();
            for k in 0..d {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        })
    }

    pub fn transpose(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn row_sum(&self, i: usize) -> BigRational {
        (0..self.dim).map(|j| self.get(i, j).clone()).sum()
    }

    /// 0/1 matrix marking the strictly positive entries.
    pub fn positive_support(&self) -> BinaryMatrix {
        BinaryMatrix::from_fn(self.dim, |i, j| self.get(i, j).is_positive())
    }
}

/// Dense square 0/1 matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    dim: usize,
    data: Vec<u8>,
}

impl BinaryMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        assert!(dim >= 1);
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(u8::from(f(i, j)));
            }
        }
        BinaryMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.dim + j] == 1
    }

    pub fn transpose(&self) -> BinaryMatrix {
        BinaryMatrix::from_fn(self.dim, |i, j| self.get(j, i))
    }

    pub fn row_sum(&self, i: usize) -> usize {
        (0..self.dim).filter(|&j| self.get(i, j)).count()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.dim).map(|i| self.row_sum(i)).collect()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.dim, |i, j| BigInt::from(u8::from(self.get(i, j))))
    }

    /// trace(M^power) computed with exact integer arithmetic.
    pub fn trace_of_power(&self, power: usize) -> BigInt {
        assert!(power >= 1);
        let m = self.to_int_matrix();
        let mut acc = m.clone();
        for _ in 1..power {
            acc = acc.mul(&m);
        }
        acc.trace()
    }

    /// Row-major 0/1 text grid, one row per line.
    pub fn grid_string(&self) -> String {
        let mut s = String::with_capacity(self.dim * (self.dim + 1));
        for i in 0..self.dim {
            for j in 0..self.dim {
                s.push(if self.get(i, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    /// Compares `self` with `other + I` entrywise, collecting mismatches.
    pub fn equals_plus_identity(&self, other: &IntMatrix, name: &'static str) -> Result<()> {
        assert_eq!(self.dim, other.dim());
        let mut discrepancies = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let rhs = other.get(i, j) + BigInt::from(u8::from(i == j));
                let lhs = BigInt::from(u8::from(self.get(i, j)));
                if lhs != rhs {
                    discrepancies.push(IdentityDiscrepancy {
                        row: i,
                        col: j,
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                }
            }
        }
        if discrepancies.is_empty() {
            Ok(())
        } else {
            Err(Error::IdentityViolation { name, discrepancies })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
        let d = rows.len();
        IntMatrix::from_fn(d, |i, j| BigInt::from(rows[i][j]))
    }

    /// Cofactor-expansion determinant, independent of the Bareiss path.
    fn det_cofactor(m: &IntMatrix) -> BigInt {
        if m.dim() == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..m.dim() {
            if m.get(0, j).is_zero() {
                continue;
            }
            let term = m.get(0, j) * det_cofactor(&m.minor(0, j));
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn det_identity_is_one() {
        assert_eq!(IntMatrix::identity(3).det_bareiss(), BigInt::one());
    }

    #[test]
    fn det_swap_is_minus_one() {
        let m = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.det_bareiss(), BigInt::from(-1));
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let m = int_matrix(&[
            &[2, -1, 3, 0],
            &[4, 2, -2, 1],
            &[0, 5, 1, -3],
            &[1, 1, 1, 1],
        ]);
        assert_eq!(m.det_bareiss(), det_cofactor(&m));
    }

    #[test]
    fn det_signless_laplacian_k4() {
        // D + A of the complete graph on 4 vertices; eigenvalue product
        // (3+3)(3-1)^3 = 48, confirmed against cofactor expansion
        let m = int_matrix(&[&[3, 1, 1, 1], &[1, 3, 1, 1], &[1, 1, 3, 1], &[1, 1, 1, 3]]);
        assert_eq!(m.det_bareiss(), BigInt::from(48));
        assert_eq!(det_cofactor(&m), BigInt::from(48));
    }

    #[test]
    fn det_singular_is_zero() {
        let m = int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.det_bareiss(), BigInt::zero());
    }

    #[test]
    fn det_needs_pivot_swap() {
        let m = int_matrix(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]]);
        assert_eq!(m.det_bareiss(), det_cofactor(&m));
    }

    #[test]
    fn binary_mul_and_trace() {
        // directed 3-cycle: trace(M^3) = 3
        let m = BinaryMatrix::from_fn(3, |i, j| j == (i + 1) % 3);
        assert_eq!(m.trace_of_power(1), BigInt::zero());
        assert_eq!(m.trace_of_power(3), BigInt::from(3));
        assert_eq!(m.row_sums(), vec![1, 1, 1]);
    }

    #[test]
    fn positive_support_marks_positive_entries() {
        let m = RationalMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => BigRational::new(BigInt::one(), BigInt::from(2)),
            (0, 1) => BigRational::new(BigInt::from(-1), BigInt::from(3)),
            (1, 0) => BigRational::zero(),
            _ => BigRational::new(BigInt::one(), BigInt::from(5)),
        });
        let s = m.positive_support();
        assert!(s.get(0, 0) && !s.get(0, 1) && !s.get(1, 0) && s.get(1, 1));
    }
}

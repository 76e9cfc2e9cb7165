//! Exact determinants of matrix pencils by evaluation and interpolation.
//!
//! A determinant that is polynomial of known degree bound `d` in one variable
//! is pinned down by its exact values at the integer nodes 0..=d. Each value
//! is a Bareiss determinant over big integers; a Newton forward-difference
//! expansion then recovers the coefficients over the rationals, and every
//! coefficient is asserted to be an integer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::poly::{IntPolynomial, RatPoly};
use crate::error::Result;

/// Interpolates the polynomial `u -> det(pencil(u))` of degree <= `degree_bound`,
/// evaluating the pencil at the integer nodes 0..=degree_bound.
pub fn det_poly_of_pencil(
    degree_bound: usize,
    pencil: impl Fn(&BigInt) -> IntMatrix,
) -> Result<IntPolynomial> {
    let values: Vec<BigInt> = (0..=degree_bound)
        .map(|node| pencil(&BigInt::from(node)).det_bareiss())
        .collect();
    interpolate_integer_nodes(&values)
}

/// det(I - u*F) as an exact integer polynomial of degree <= dim(F).
pub fn det_poly_linear(f: &IntMatrix) -> Result<IntPolynomial> {
    let d = f.dim();
    det_poly_of_pencil(d, |u| {
        IntMatrix::from_fn(d, |i, j| {
            let mut e = -(u * f.get(i, j));
            if i == j {
                e += 1;
            }
            e
        })
    })
}

/// Exact monic characteristic polynomial det(uI - M).
pub fn char_poly(m: &IntMatrix) -> Result<IntPolynomial> {
    let d = m.dim();
    let p = det_poly_of_pencil(d, |u| {
        IntMatrix::from_fn(d, |i, j| {
            let mut e = -m.get(i, j).clone();
            if i == j {
                e += u;
            }
            e
        })
    })?;
    debug_assert_eq!(p.leading_coeff(), BigInt::one());
    Ok(p)
}

/// Newton forward-difference interpolation through (j, values[j]) for
/// j = 0..values.len().
fn interpolate_integer_nodes(values: &[BigInt]) -> Result<IntPolynomial> {
    // forward-difference table at node 0
    let mut diffs: Vec<BigInt> = Vec::with_capacity(values.len());
    let mut row = values.to_vec();
    diffs.push(row[0].clone());
    for j in 1..values.len() {
        for i in 0..values.len() - j {
            row[i] = &row[i + 1] - &row[i];
        }
        row.truncate(values.len() - j);
        diffs.push(row[0].clone());
    }

    // p(u) = sum_j diffs[j]/j! * u(u-1)...(u-j+1)
    let mut result = RatPoly::zero();
    let mut basis = RatPoly::from_int(&IntPolynomial::one());
    let mut factorial = BigInt::one();
    for (j, diff) in diffs.iter().enumerate() {
        if j > 0 {
            factorial *= BigInt::from(j);
            basis.mul_linear(j as i64 - 1);
        }
        if !diff.is_zero() {
            let w = BigRational::new(diff.clone(), factorial.clone());
            result.add_scaled(&basis, &w);
        }
    }
    result.into_int()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::IntPolynomial;

    #[test]
    fn zero_pencil_gives_one() {
        let f = IntMatrix::from_fn(4, |_, _| BigInt::zero());
        assert_eq!(det_poly_linear(&f).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn identity_pencil_gives_binomial() {
        // det(I - uI) over dim 2 = (1-u)^2
        let f = IntMatrix::identity(2);
        assert_eq!(
            det_poly_linear(&f).unwrap(),
            IntPolynomial::from_i64s(&[1, -2, 1])
        );
    }

    #[test]
    fn char_poly_of_zero_matrix() {
        let m = IntMatrix::from_fn(2, |_, _| BigInt::zero());
        assert_eq!(char_poly(&m).unwrap(), IntPolynomial::from_i64s(&[0, 0, 1]));
    }

    #[test]
    fn char_poly_triangle_adjacency() {
        // adjacency of the 3-cycle: u^3 - 3u - 2
        let m = IntMatrix::from_fn(3, |i, j| BigInt::from(u8::from(i != j)));
        assert_eq!(
            char_poly(&m).unwrap(),
            IntPolynomial::from_i64s(&[-2, -3, 0, 1])
        );
    }

    #[test]
    fn det_poly_agrees_with_bareiss_at_fresh_nodes() {
        let f = IntMatrix::from_fn(4, |i, j| BigInt::from(((i * 3 + j * 5) % 4) as i64 - 1));
        let p = det_poly_linear(&f).unwrap();
        for node in [7i64, -3, 11] {
            let u = BigInt::from(node);
            let direct = IntMatrix::from_fn(4, |i, j| {
                let mut e = -(&u * f.get(i, j));
                if i == j {
                    e += 1;
                }
                e
            })
            .det_bareiss();
            assert_eq!(p.eval_int(&u), direct);
        }
    }

    #[test]
    fn char_poly_constant_term_is_det_of_negation() {
        let m = IntMatrix::from_fn(3, |i, j| BigInt::from((i * i + 2 * j) as i64 % 5 - 2));
        let p = char_poly(&m).unwrap();
        let neg = IntMatrix::from_fn(3, |i, j| -m.get(i, j));
        assert_eq!(p.coeff(0), neg.det_bareiss());
    }
}

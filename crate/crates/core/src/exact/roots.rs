//! Exact square-free structure and numeric root extraction.
//!
//! Multiplicities are always computed exactly (polynomial gcd over the
//! integers); floating point only ever locates the simple roots of a
//! square-free factor.

use nalgebra::DMatrix;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::poly::{big_to_f64, IntPolynomial};
use crate::error::{Error, Result};

/// One complex root with its exact multiplicity.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ComplexRoot {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
}

impl ComplexRoot {
    pub fn value(&self) -> Complex<f64> {
        Complex::new(self.re, self.im)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.im.abs() <= tol
    }
}

/// Pseudo-remainder of `a` by `b`; only meaningful up to a constant factor,
/// which is all the primitive-PRS gcd needs.
fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("nonzero divisor");
    let lc = b.leading_coeff();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if r.is_zero() || dr < db {
            break;
        }
        let lr = r.leading_coeff();
        r = r
            .scale(&lc)
            .sub(&b.mul(&IntPolynomial::monomial(lr, dr - db)));
    }
    r
}

/// Primitive gcd with positive leading coefficient.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut a = a.primitive_part();
    let mut b = b.primitive_part();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b).primitive_part();
        a = b;
        b = r;
    }
    a
}

/// Exact division of integer polynomials that is known to be exact.
fn exact_div(num: &IntPolynomial, den: &IntPolynomial) -> IntPolynomial {
    let (q, r) = num.divide(den).expect("divisor is primitive");
    assert!(r.is_zero(), "exact_div called with a non-divisor");
    q
}

/// Yun square-free decomposition: returns (factor, multiplicity) pairs with
/// square-free, pairwise coprime factors of degree >= 1. The product of
/// factor^multiplicity equals the input up to a rational constant.
pub fn square_free_decomposition(p: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    let p = p.primitive_part();
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let dp = p.derivative(1);
    let g = poly_gcd(&p, &dp);
    if g.degree() == Some(0) {
        return vec![(p, 1)];
    }
    let mut out = Vec::new();
    let mut w = exact_div(&p, &g).primitive_part();
    let y = exact_div(&dp, &g);
    let mut z = y.sub(&w.derivative(1));
    let mut mult = 1usize;
    while w.degree().is_some_and(|d| d > 0) {
        let f = poly_gcd(&w, &z);
        if f.degree().is_some_and(|d| d > 0) {
            out.push((f.clone(), mult));
        }
        w = exact_div(&w, &f).primitive_part();
        let y = exact_div(&z, &f);
        z = y.sub(&w.derivative(1));
        mult += 1;
    }
    out
}

/// Exact multiplicity of the rational root `r` in `p`, together with `p`
/// deflated by the corresponding linear factor.
pub fn rational_root_multiplicity(
    p: &IntPolynomial,
    r: &BigRational,
) -> (usize, IntPolynomial) {
    // the primitive linear factor den*u - num
    let factor = IntPolynomial::from_coeffs(vec![-r.numer().clone(), r.denom().clone()]);
    let mut mult = 0usize;
    let mut cur = p.clone();
    while !cur.is_zero() && cur.eval_rational(r).is_zero() {
        let (q, rem) = cur.divide(&factor).expect("primitive linear divisor");
        assert!(rem.is_zero());
        cur = q;
        mult += 1;
    }
    (mult, cur)
}

/// All complex roots of `p` with exact multiplicities, sorted by (re, im).
///
/// Square-free factorization happens first, so each numeric solve only sees
/// simple roots; values are polished by Newton iteration to ~1e-9 relative.
pub fn poly_roots(p: &IntPolynomial) -> Result<Vec<ComplexRoot>> {
    match p.degree() {
        None => {
            return Err(Error::InvalidInput(
                "root finding requires a nonzero polynomial".into(),
            ))
        }
        Some(0) => {
            return Err(Error::InvalidInput(
                "root finding requires degree >= 1".into(),
            ))
        }
        Some(_) => {}
    }
    let mut out = Vec::new();
    for (factor, mult) in square_free_decomposition(p) {
        for z in roots_of_square_free(&factor) {
            out.push(ComplexRoot {
                re: z.re,
                im: z.im,
                multiplicity: mult,
            });
        }
    }
    let total: usize = out.iter().map(|r| r.multiplicity).sum();
    assert_eq!(Some(total), p.degree(), "root multiplicities must sum to the degree");
    out.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    Ok(out)
}

/// Numeric roots of a square-free integer polynomial.
fn roots_of_square_free(f: &IntPolynomial) -> Vec<Complex<f64>> {
    let deg = f.degree().expect("nonzero polynomial");
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        // exact rational root -c0/c1
        let root = BigRational::new(-f.coeff(0), f.coeff(1));
        return vec![Complex::new(root.to_f64().expect("rational fits f64"), 0.0)];
    }
    // normalize coefficients to f64 and make monic
    let coeffs: Vec<f64> = f.coeffs().iter().map(big_to_f64).collect();
    let lead = coeffs[deg];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let companion = DMatrix::<f64>::from_fn(deg, deg, |i, j| {
        if j == deg - 1 {
            -monic[i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let eigen = companion.complex_eigenvalues();
    eigen
        .iter()
        .map(|&z| {
            let mut z = newton_polish(&monic, z);
            if z.im.abs() <= 1e-9 * (1.0 + z.norm()) {
                z.im = 0.0;
                z = newton_polish(&monic, z);
                z.im = 0.0;
            }
            z
        })
        .collect()
}

fn newton_polish(monic: &[f64], mut z: Complex<f64>) -> Complex<f64> {
    for _ in 0..30 {
        let (v, dv) = horner_with_derivative(monic, z);
        if dv.norm() == 0.0 {
            break;
        }
        let step = v / dv;
        z -= step;
        if step.norm() <= 1e-14 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

fn horner_with_derivative(coeffs: &[f64], z: Complex<f64>) -> (Complex<f64>, Complex<f64>) {
    let mut v = Complex::new(0.0, 0.0);
    let mut dv = Complex::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dv = dv * z + v;
        v = v * z + c;
    }
    (v, dv)
}

//! Univariate polynomials with arbitrary-precision integer coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial in one variable `u`; `coeffs[i]` is the coefficient of `u^i`.
///
/// Canonical form: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::from_coeffs(vec![c])
    }

    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial c*u^power.
    pub fn monomial(c: BigInt, power: usize) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of u^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: usize) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal derivative of the given order.
    pub fn derivative(&self, order: usize) -> IntPolynomial {
        let mut cur = self.clone();
        for _ in 0..order {
            if cur.coeffs.len() <= 1 {
                return IntPolynomial::zero();
            }
            cur = IntPolynomial::from_coeffs(
                cur.coeffs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(i, c)| c * BigInt::from(i))
                    .collect(),
            );
        }
        cur
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation in complex floating point (coefficients cast to f64).
    pub fn eval_complex(&self, z: num_complex::Complex<f64>) -> num_complex::Complex<f64> {
        let mut acc = num_complex::Complex::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + big_to_f64(c);
        }
        acc
    }

    /// Euclidean division over the rationals: `self = den*q + r` with
    /// `deg r < deg den`. Errors if a quotient or remainder coefficient is
    /// not an integer; the callers divide by factors that are known to split
    /// off exactly, so a non-integer result signals an arithmetic bug.
    pub fn divide(&self, den: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        assert!(!den.is_zero(), "division by the zero polynomial");
        let (q, r) = rational_div_rem(&RatPoly::from_int(self), &RatPoly::from_int(den));
        let q = q.into_int()?;
        let r = r.into_int()?;
        Ok((q, r))
    }

    /// Greatest common divisor of all coefficients (positive; 0 for the zero
    /// polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Content-free copy with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Power sums of the inverse roots: the first `order` coefficients of
    /// `-u p'(u)/p(u)` as a power series, for `p(0) = 1`.
    ///
    /// When `p(u) = det(I - uM)` these are exactly `trace(M^r)`.
    pub fn power_sum_series(&self, order: usize) -> Result<Vec<BigInt>> {
        if !self.coeff(0).is_one() {
            return Err(Error::InvalidInput(
                "power-sum series requires constant term 1".into(),
            ));
        }
        // -u p'/p = sum c_r u^r; with p = 1 + sum_{i>=1} p_i u^i the series
        // inverse gives the integer recurrence c_r = -r p_r - sum p_i c_{r-i}.
        let mut out = Vec::with_capacity(order);
        for r in 1..=order {
            let mut c = -BigInt::from(r) * self.coeff(r);
            for i in 1..r {
                c -= self.coeff(i) * &out[r - i - 1];
            }
            out.push(c);
        }
        Ok(out)
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "u")?;
                    } else {
                        write!(f, "u^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("IntPolynomial", 1)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

/// Formats an exact rational as `num/den`, or just `num` for integers.
pub fn rational_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().expect("coefficient does not fit f64 range")
}

/// Internal polynomial over the rationals; only used as interpolation and
/// division scratch space.
#[derive(Debug, Clone)]
pub(crate) struct RatPoly {
    pub coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn from_int(p: &IntPolynomial) -> Self {
        RatPoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    pub fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_scaled(&mut self, other: &RatPoly, factor: &BigRational) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigRational::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] += c * factor;
        }
        self.trim();
    }

    /// Multiplies in place by the integer-root factor (u - root).
    pub fn mul_linear(&mut self, root: i64) {
        let r = BigRational::from_integer(BigInt::from(root));
        let mut out = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c * &r;
        }
        self.coeffs = out;
        self.trim();
    }

    pub fn into_int(mut self) -> Result<IntPolynomial> {
        self.trim();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.denom().is_one() {
                return Err(Error::NonIntegerCoefficient {
                    power: i,
                    value: c.to_string(),
                });
            }
            coeffs.push(c.numer().clone());
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

pub(crate) fn rational_div_rem(num: &RatPoly, den: &RatPoly) -> (RatPoly, RatPoly) {
    let dd = den.degree().expect("nonzero divisor");
    let lead = den.coeff(dd);
    let mut rem = num.clone();
    let mut quot = RatPoly::zero();
    while let Some(rd) = rem.degree() {
        if rd < dd {
            break;
        }
        let factor = rem.coeff(rd) / &lead;
        let shift = rd - dd;
        if quot.coeffs.len() < shift + 1 {
            quot.coeffs.resize(shift + 1, BigRational::zero());
        }
        quot.coeffs[shift] = factor.clone();
        for i in 0..=dd {
            let c = den.coeff(i) * &factor;
            rem.coeffs[i + shift] -= c;
        }
        rem.trim();
    }
    quot.trim();
    (quot, rem)
}

//! Adjacency spectra, the spectral lifting of the squared-walk support for
//! regular graphs, exact characteristic-polynomial factorizations, pole
//! geometry, and the radius-of-convergence checks.
//!
//! Everything about pole *orders* goes through exact polynomial arithmetic;
//! floating point only places roots that are already known to be simple.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{char_poly, det_poly_of_pencil, poly_roots, rational_root_multiplicity, IntMatrix};
use crate::graph::{classify, Graph};
use crate::walk::{grover_support, squared_support};
use crate::zeta::{ihara_reciprocal_edge, modified_reciprocal, ZetaKind, ZetaReciprocal};

/// Default tolerance for geometric predicates on poles (circle membership,
/// band membership, triviality).
pub const CIRCLE_TOL: f64 = 1e-7;
/// Eigenvalue clustering tolerance when cross-validating numeric spectra
/// against exact characteristic polynomials.
pub const CLUSTER_TOL: f64 = 1e-6;

/// Real eigenvalues with exact multiplicities, ascending.
#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<(f64, usize)>,
    pub tolerance: f64,
}

impl Spectrum {
    pub fn expanded(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.last().map(|&(v, _)| v).unwrap_or(0.0)
    }
}

/// Eigenvalues of the symmetric adjacency matrix.
///
/// Multiplicities come from the exact characteristic polynomial's square-free
/// structure; a numeric symmetric eigensolve cross-validates the values.
pub fn adjacency_spectrum(g: &Graph) -> Spectrum {
    let a = g.adjacency_matrix();
    let cp = char_poly(&a).expect("characteristic polynomial interpolation");
    let roots = poly_roots(&cp).expect("adjacency eigenvalues");
    let mut eigenvalues: Vec<(f64, usize)> = roots
        .iter()
        .map(|r| {
            assert!(r.im.abs() <= 1e-7, "symmetric matrix produced a complex eigenvalue");
            (r.re, r.multiplicity)
        })
        .collect();
    eigenvalues.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());

    let n = g.vertex_count();
    let numeric = DMatrix::<f64>::from_fn(n, n, |i, j| a.get(i, j).to_f64().unwrap())
        .symmetric_eigen()
        .eigenvalues;
    let mut numeric: Vec<f64> = numeric.iter().copied().collect();
    numeric.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let exact_expanded: Vec<f64> = eigenvalues
        .iter()
        .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
        .collect();
    assert_eq!(numeric.len(), exact_expanded.len());
    for (a, b) in numeric.iter().zip(&exact_expanded) {
        assert!(
            (a - b).abs() <= CLUSTER_TOL,
            "numeric eigenvalue {a} disagrees with exact root {b}"
        );
    }

    Spectrum { eigenvalues, tolerance: CLUSTER_TOL }
}

fn regular_degree_at_least_3(g: &Graph) -> Result<usize> {
    let c = classify(g);
    match c.regular_degree {
        Some(k) if k >= 3 && c.connected => Ok(k),
        _ => Err(Error::NotApplicable(
            "regular spectral analysis",
            "requires a connected k-regular graph with k >= 3".into(),
        )),
    }
}

/// The 2m eigenvalues of the squared-walk support of a k-regular graph:
/// for each adjacency eigenvalue x the conjugate pair
/// (x^2 - 2k + 4)/2 +- i x sqrt(k - 1 - x^2/4), plus 2(m-n) copies of 2.
pub fn lifted_spectrum(g: &Graph) -> Result<Vec<Complex<f64>>> {
    let k = regular_degree_at_least_3(g)?;
    if !g.is_simple() {
        return Err(Error::NotApplicable(
            "lifted spectrum",
            "requires a simple graph".into(),
        ));
    }
    let kf = k as f64;
    let mut out = Vec::with_capacity(g.oriented_count());
    for &(lambda, mult) in &adjacency_spectrum(g).eigenvalues {
        let centre = Complex::new((lambda * lambda - 2.0 * kf + 4.0) / 2.0, 0.0);
        // imaginary for |lambda| < 2 sqrt(k-1), real beyond (e.g. lambda = +-k)
        let s = Complex::new(kf - 1.0 - lambda * lambda / 4.0, 0.0).sqrt();
        let wing = Complex::i() * lambda * s;
        for _ in 0..mult {
            out.push(centre + wing);
            out.push(centre - wing);
        }
    }
    let extra = 2 * (g.edge_count() - g.vertex_count());
    out.extend(std::iter::repeat_n(Complex::new(2.0, 0.0), extra));
    Ok(out)
}

/// Both sides of an exact characteristic-polynomial identity.
#[derive(Debug, Clone, Serialize)]
pub struct CharpolyCheck {
    pub pass: bool,
    pub lhs: crate::exact::IntPolynomial,
    pub rhs: crate::exact::IntPolynomial,
}

/// charpoly((U^2)^+) = (x-2)^(2(m-n)) det(x^2 I - x(A^2-(2k-4)I) + (A^2+(k-2)^2 I)),
/// both sides exact, for simple connected k-regular graphs with k >= 3.
pub fn lifted_charpoly_check(g: &Graph) -> Result<CharpolyCheck> {
    let k = regular_degree_at_least_3(g)?;
    let support = squared_support(g)?;
    let lhs = char_poly(&support.to_int_matrix())?;

    let n = g.vertex_count();
    let a = g.adjacency_matrix();
    let a2 = a.mul(&a);
    let shift = BigInt::from(2 * k as i64 - 4);
    let prod = BigInt::from((k as i64 - 2) * (k as i64 - 2));
    let pencil = det_poly_of_pencil(2 * n, |x| {
        let xx = x * x;
        IntMatrix::from_fn(n, |i, j| {
            let mut e = -(x * (a2.get(i, j) - if i == j { &shift * 1 } else { BigInt::zero() }));
            e += a2.get(i, j) + if i == j { prod.clone() } else { BigInt::zero() };
            if i == j {
                e += &xx;
            }
            e
        })
    })?;
    let extra = 2 * (g.edge_count() - n);
    let rhs = crate::exact::IntPolynomial::from_i64s(&[-2, 1]).pow(extra).mul(&pencil);
    Ok(CharpolyCheck { pass: lhs == rhs, lhs, rhs })
}

/// charpoly((U)^+) = (x^2-1)^(m-n) det((x^2-1)I - xA + D), both sides exact,
/// for connected graphs with minimum degree >= 2.
pub fn uplus_charpoly_check(g: &Graph) -> Result<CharpolyCheck> {
    if !classify(g).connected || g.min_degree() < 2 {
        return Err(Error::NotApplicable(
            "walk-support charpoly factorization",
            "requires a connected graph with minimum degree >= 2".into(),
        ));
    }
    let support = grover_support(g)?;
    let lhs = char_poly(&support.to_int_matrix())?;

    let n = g.vertex_count();
    let a = g.adjacency_matrix();
    let d = g.degree_matrix();
    let pencil = det_poly_of_pencil(2 * n, |x| {
        let xx1 = x * x - BigInt::one();
        IntMatrix::from_fn(n, |i, j| {
            let mut e = -(x * a.get(i, j));
            if i == j {
                e += &xx1 + d.get(i, i);
            }
            e
        })
    })?;
    let extra = g.edge_count() - n;
    let rhs = crate::exact::IntPolynomial::from_i64s(&[-1, 0, 1]).pow(extra).mul(&pencil);
    Ok(CharpolyCheck { pass: lhs == rhs, lhs, rhs })
}

/// A reference circle on the real axis.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Circle {
    pub center: f64,
    pub radius: f64,
}

impl Circle {
    /// Designated circle for the non-real poles of a k-regular graph.
    pub fn for_kind(kind: ZetaKind, k: usize) -> Circle {
        let kf = k as f64;
        match kind {
            ZetaKind::Ihara => Circle { center: 0.0, radius: 1.0 / (kf - 1.0).sqrt() },
            ZetaKind::Modified => Circle {
                center: -1.0 / (kf * kf - 2.0 * kf),
                radius: (kf - 1.0) / (kf * kf - 2.0 * kf),
            },
        }
    }

    /// Signed residual of the defining equation at (re, im).
    pub fn residual(&self, re: f64, im: f64) -> f64 {
        (re - self.center).powi(2) + im * im - self.radius * self.radius
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct AnnotatedPole {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
    pub trivial: bool,
    pub real: bool,
    pub on_circle: bool,
}

impl AnnotatedPole {
    pub fn annotation(&self) -> &'static str {
        if self.trivial {
            "trivial"
        } else if self.on_circle && !self.real {
            "circle"
        } else if self.real {
            "real"
        } else {
            ""
        }
    }
}

/// Poles of a zeta reciprocal with exact multiplicities and, for regular
/// graphs, geometric annotations against the designated circle and the
/// trivial-pole values.
#[derive(Debug, Clone, Serialize)]
pub struct PoleSet {
    pub kind: ZetaKind,
    pub poles: Vec<AnnotatedPole>,
    pub circle: Option<Circle>,
    pub regular_degree: Option<usize>,
    pub tolerance: f64,
}

impl PoleSet {
    pub fn total_multiplicity(&self) -> usize {
        self.poles.iter().map(|p| p.multiplicity).sum()
    }

    pub fn find_real(&self, value: f64, tol: f64) -> Option<&AnnotatedPole> {
        self.poles
            .iter()
            .find(|p| p.im == 0.0 && (p.re - value).abs() <= tol)
    }

    /// `re,im,multiplicity,annotation` rows under a header line.
    pub fn csv(&self) -> String {
        let mut out = String::from("re,im,multiplicity,annotation\n");
        for p in &self.poles {
            out.push_str(&format!("{},{},{},{}\n", p.re, p.im, p.multiplicity, p.annotation()));
        }
        out
    }
}

/// Structurally forced rational poles, pulled out exactly before any
/// numeric root finding.
fn rational_pole_candidates(kind: ZetaKind, k: Option<usize>) -> Vec<BigRational> {
    let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let mut c = Vec::new();
    match kind {
        ZetaKind::Ihara => {
            c.push(r(1, 1));
            c.push(r(-1, 1));
            if let Some(k) = k {
                let k = k as i64;
                c.push(r(1, k - 1));
                c.push(r(-1, k - 1));
            }
        }
        ZetaKind::Modified => {
            c.push(r(1, 2));
            if let Some(k) = k {
                let k = k as i64;
                c.push(r(1, k * k - 2 * k + 2));
                c.push(r(-1, k - 2));
            }
        }
    }
    c
}

/// Roots of the reciprocal polynomial with exact multiplicities and
/// geometric annotations at the given tolerance.
pub fn poles_with_tol(g: &Graph, z: &ZetaReciprocal, tol: f64) -> PoleSet {
    let c = classify(g);
    let k = c.regular_degree.filter(|&k| k >= 3 && c.connected);
    let circle = k.map(|k| Circle::for_kind(z.kind, k));

    let mut found: Vec<(f64, f64, usize)> = Vec::new();
    let mut remaining = z.polynomial.clone();
    for cand in rational_pole_candidates(z.kind, k) {
        let (mult, rest) = rational_root_multiplicity(&remaining, &cand);
        if mult > 0 {
            found.push((cand.to_f64().unwrap(), 0.0, mult));
            remaining = rest;
        }
    }
    if remaining.degree().is_some_and(|d| d >= 1) {
        for root in poly_roots(&remaining).expect("pole extraction") {
            found.push((root.re, root.im, root.multiplicity));
        }
    }
    found.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.partial_cmp(&b.1).unwrap()));

    let trivial_values: Vec<f64> = match (z.kind, k) {
        (ZetaKind::Ihara, Some(k)) => vec![1.0, 1.0 / (k as f64 - 1.0)],
        (ZetaKind::Modified, Some(k)) => {
            let kf = k as f64;
            vec![0.5, 1.0 / (kf * kf - 2.0 * kf + 2.0)]
        }
        _ => Vec::new(),
    };
    let degree = z.polynomial.degree().unwrap_or(0);
    assert_eq!(
        found.iter().map(|&(_, _, m)| m).sum::<usize>(),
        degree,
        "pole multiplicities must sum to the reciprocal degree"
    );
    let poles = found
        .into_iter()
        .map(|(re, im, multiplicity)| {
            let real = im.abs() <= tol;
            let trivial = match z.kind {
                // |u| = 1 or 1/(k-1) for the edge zeta
                ZetaKind::Ihara => {
                    real_trivial(&trivial_values, (re * re + im * im).sqrt(), tol)
                }
                // u = 1/2 or 1/(k^2-2k+2) for the two-step zeta
                ZetaKind::Modified => {
                    real && real_trivial(&trivial_values, re, tol)
                }
            };
            let on_circle = circle.is_some_and(|c| c.residual(re, im).abs() <= tol);
            AnnotatedPole { re, im, multiplicity, trivial, real, on_circle }
        })
        .collect();
    PoleSet { kind: z.kind, poles, circle, regular_degree: k, tolerance: tol }
}

fn real_trivial(values: &[f64], magnitude: f64, tol: f64) -> bool {
    values.iter().any(|v| (magnitude - v).abs() <= tol)
}

pub fn poles(g: &Graph, z: &ZetaReciprocal) -> PoleSet {
    poles_with_tol(g, z, CIRCLE_TOL)
}

/// Whether all nontrivial adjacency eigenvalues fit under the 2 sqrt(k-1)
/// bound and all non-trivial poles sit on the designated circle.
#[derive(Debug, Clone, Serialize)]
pub struct RiemannReport {
    pub ramanujan: bool,
    pub rh_analogue_holds: bool,
    pub offending_poles: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PoleGeometry {
    pub report: RiemannReport,
    pub poles: PoleSet,
    pub real_band_ok: bool,
}

/// Pole geometry of a connected k-regular graph (k >= 3) for either zeta
/// kind: circle membership of every non-trivial pole, the real-pole band,
/// and the spectral-gap flag.
pub fn pole_geometry(g: &Graph, kind: ZetaKind) -> Result<PoleGeometry> {
    pole_geometry_with_tol(g, kind, CIRCLE_TOL)
}

pub fn pole_geometry_with_tol(g: &Graph, kind: ZetaKind, tol: f64) -> Result<PoleGeometry> {
    let k = regular_degree_at_least_3(g)?;
    let z = match kind {
        ZetaKind::Ihara => ihara_reciprocal_edge(g)?,
        ZetaKind::Modified => modified_reciprocal(g)?,
    };
    let poles = poles_with_tol(g, &z, tol);

    let kf = k as f64;
    let bound = 2.0 * (kf - 1.0).sqrt();
    let ramanujan = adjacency_spectrum(g)
        .eigenvalues
        .iter()
        .filter(|&&(v, _)| (v.abs() - kf).abs() > tol)
        .all(|&(v, _)| v.abs() <= bound + tol);

    let mut offending = Vec::new();
    for p in &poles.poles {
        if !p.trivial && !p.on_circle {
            offending.push((p.re, p.im));
        }
    }
    let real_band_ok = poles.poles.iter().filter(|p| p.real).all(|p| match kind {
        ZetaKind::Ihara => {
            let a = p.re.abs();
            1.0 / (kf - 1.0) - tol <= a && a <= 1.0 + tol
        }
        ZetaKind::Modified => {
            let lo = 1.0 / (kf * kf - 2.0 * kf + 2.0);
            (lo - tol <= p.re && p.re <= 0.5 + tol) || (p.re + 1.0 / (kf - 2.0)).abs() <= tol
        }
    });
    Ok(PoleGeometry {
        report: RiemannReport {
            ramanujan,
            rh_analogue_holds: offending.is_empty(),
            offending_poles: offending,
        },
        poles,
        real_band_ok,
    })
}

/// The convergence radius rho = 1/alpha, its exact pole order, and the
/// degree-derived bounds.
#[derive(Debug, Clone, Serialize)]
pub struct RadiusReport {
    pub alpha: f64,
    pub rho: f64,
    pub rho_multiplicity: usize,
    pub rho_lower: f64,
    pub rho_upper: f64,
    pub bounds_ok: bool,
    pub bipartite: bool,
    pub multiplicity_ok: bool,
    pub row_sum_bracket_ok: bool,
}

/// Locates the smallest positive real pole of the two-step reciprocal
/// (= 1/alpha for the maximal eigenvalue alpha of the squared-walk support),
/// asserts the degree bounds, the bipartite-dependent order, and the
/// row-sum bracket on alpha.
pub fn radius_of_convergence_check(g: &Graph) -> Result<RadiusReport> {
    let z = modified_reciprocal(g)?;
    let pole_set = poles(g, &z);
    let rho_pole = pole_set
        .poles
        .iter()
        .filter(|p| p.real && p.re > 0.0)
        .min_by(|a, b| a.re.partial_cmp(&b.re).unwrap())
        .expect("a positive real pole always exists");
    let rho = rho_pole.re;
    let alpha = 1.0 / rho;

    let delta = g.min_degree() as f64;
    let big_delta = g.max_degree() as f64;
    let rho_lower = 1.0 / ((big_delta - 1.0) * (big_delta - 1.0) + 1.0);
    let rho_upper = 1.0 / ((delta - 1.0) * (delta - 1.0) + 1.0);
    let eps = 1e-9;
    let bounds_ok = rho_lower - eps <= rho && rho <= rho_upper + eps;

    let bipartite = classify(g).bipartite;
    let multiplicity_ok = rho_pole.multiplicity == if bipartite { 2 } else { 1 };

    let row_sums = squared_support(g)?.row_sums();
    let min_row = *row_sums.iter().min().unwrap() as f64;
    let max_row = *row_sums.iter().max().unwrap() as f64;
    let row_sum_bracket_ok = min_row - eps <= alpha && alpha <= max_row + eps;

    Ok(RadiusReport {
        alpha,
        rho,
        rho_multiplicity: rho_pole.multiplicity,
        rho_lower,
        rho_upper,
        bounds_ok,
        bipartite,
        multiplicity_ok,
        row_sum_bracket_ok,
    })
}

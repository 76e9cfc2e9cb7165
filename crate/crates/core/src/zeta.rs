//! Reciprocals of the edge zeta function and its two-step variant, the
//! spanning-tree and odd-unicyclic-factor invariants, and the exact
//! derivative identities at the special points u = 1 and u = 1/2.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::poly::rational_string;
use crate::exact::{det_poly_of_pencil, det_poly_linear, IntMatrix, IntPolynomial};
use crate::graph::{classify, Graph};
use crate::walk::{grover_support, squared_support};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaKind {
    Ihara,
    Modified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DetForm {
    EdgeDeterminant,
    VertexFactored,
}

/// A zeta reciprocal as an exact polynomial in u, split into the forced
/// cofactor power and the remaining core polynomial.
#[derive(Debug, Clone)]
pub struct ZetaReciprocal {
    pub kind: ZetaKind,
    pub form: DetForm,
    /// The full reciprocal; constant term 1.
    pub polynomial: IntPolynomial,
    /// Exponent on the extracted factor: (1-u^2) for the edge zeta,
    /// (1-2u) squared per excess edge for the two-step zeta.
    pub cofactor_exponent: usize,
    /// The factor-free part: f_G or p_G.
    pub core: IntPolynomial,
}

impl ZetaReciprocal {
    pub fn cofactor_base(&self) -> IntPolynomial {
        match self.kind {
            ZetaKind::Ihara => IntPolynomial::from_i64s(&[1, 0, -1]),
            ZetaKind::Modified => IntPolynomial::from_i64s(&[1, -2]),
        }
    }

    pub fn cofactor_string(&self) -> String {
        let base = match self.kind {
            ZetaKind::Ihara => "(1-u^2)",
            ZetaKind::Modified => "(1-2u)",
        };
        format!("{base}^{}", self.cofactor_exponent)
    }
}

impl Serialize for ZetaReciprocal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ZetaReciprocal", 6)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("form", &self.form)?;
        st.serialize_field("polynomial", &self.polynomial)?;
        st.serialize_field("cofactor", &self.cofactor_string())?;
        st.serialize_field("core", &self.core)?;
        st.serialize_field("core_degree", &self.core.degree().unwrap_or(0))?;
        st.end()
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if classify(g).connected {
        Ok(())
    } else {
        Err(Error::Hypothesis { violations: vec![crate::error::Violation::NotConnected] })
    }
}

/// Splits `poly` as base^exponent * core when the division is exact;
/// otherwise keeps the whole polynomial as the core (exponent 0).
fn split_cofactor(poly: &IntPolynomial, base: &IntPolynomial, exponent: usize) -> (usize, IntPolynomial) {
    if exponent == 0 {
        return (0, poly.clone());
    }
    let cofactor = base.pow(exponent);
    match poly.divide(&cofactor) {
        Ok((core, rem)) if rem.is_zero() => (exponent, core),
        _ => (0, poly.clone()),
    }
}

/// det(I - u (U)^+) over the oriented-edge indices.
pub fn ihara_reciprocal_edge(g: &Graph) -> Result<ZetaReciprocal> {
    require_connected(g)?;
    let support = grover_support(g)?;
    let polynomial = det_poly_linear(&support.to_int_matrix())?;
    let (m, n) = (g.edge_count(), g.vertex_count());
    let exponent = m.saturating_sub(n);
    let base = IntPolynomial::from_i64s(&[1, 0, -1]);
    let (cofactor_exponent, core) = split_cofactor(&polynomial, &base, exponent);
    Ok(ZetaReciprocal {
        kind: ZetaKind::Ihara,
        form: DetForm::EdgeDeterminant,
        polynomial,
        cofactor_exponent,
        core,
    })
}

/// The vertex pencil det(I - uA + u^2(D - I)) of degree <= 2n.
pub fn vertex_pencil_poly(g: &Graph) -> Result<IntPolynomial> {
    let n = g.vertex_count();
    let a = g.adjacency_matrix();
    let d = g.degree_matrix();
    det_poly_of_pencil(2 * n, |u| {
        let uu = u * u;
        IntMatrix::from_fn(n, |i, j| {
            let mut e = -(u * a.get(i, j));
            if i == j {
                e += 1 + &uu * (d.get(i, i) - 1);
            }
            e
        })
    })
}

/// (1-u^2)^(m-n) * det(I - uA + u^2(D - I)).
pub fn ihara_reciprocal_bass(g: &Graph) -> Result<ZetaReciprocal> {
    require_connected(g)?;
    let core = vertex_pencil_poly(g)?;
    let (m, n) = (g.edge_count(), g.vertex_count());
    let base = IntPolynomial::from_i64s(&[1, 0, -1]);
    let (polynomial, cofactor_exponent, core) = if m >= n {
        (base.pow(m - n).mul(&core), m - n, core)
    } else {
        // trees: the pencil itself carries the (1-u^2) factor
        let (q, r) = core.divide(&base.pow(n - m))?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "vertex pencil not divisible by (1-u^2)^{}",
                n - m
            )));
        }
        (q.clone(), 0, q)
    };
    Ok(ZetaReciprocal {
        kind: ZetaKind::Ihara,
        form: DetForm::VertexFactored,
        polynomial,
        cofactor_exponent,
        core,
    })
}

const HL_SPOT_POINTS: [(f64, f64); 5] = [(0.1, 0.0), (0.3, 0.0), (0.7, 0.0), (1.0, 1.0), (-0.2, 0.0)];
const HL_SPOT_TOL: f64 = 1e-8;

/// det(I - u (U^2)^+), with the (1-2u)^(2(m-n)) factor split off exactly and
/// the core numerically spot-checked against the square-root-branch product
/// it factors into.
pub fn modified_reciprocal(g: &Graph) -> Result<ZetaReciprocal> {
    let support = squared_support(g)?;
    let polynomial = det_poly_linear(&support.to_int_matrix())?;
    let exponent = 2 * (g.edge_count() - g.vertex_count());
    let base = IntPolynomial::from_i64s(&[1, -2]);
    let (core, rem) = polynomial.divide(&base.pow(exponent))?;
    if !rem.is_zero() {
        return Err(Error::InexactDivision(format!(
            "det(I - u(U^2)^+) not divisible by (1-2u)^{exponent}; remainder {rem}"
        )));
    }
    for &(re, im) in &HL_SPOT_POINTS {
        let u = Complex::new(re, im);
        let lhs = core.eval_complex(u);
        let rhs = hl_product_at(g, u);
        let scale = lhs.norm().max(rhs.norm()).max(1.0);
        if (lhs - rhs).norm() > HL_SPOT_TOL * scale {
            return Err(Error::CheckFailed {
                name: "p = h*l spot check",
                detail: format!("at u = {u}: p = {lhs}, h*l = {rhs}"),
            });
        }
    }
    Ok(ZetaReciprocal {
        kind: ZetaKind::Modified,
        form: DetForm::EdgeDeterminant,
        polynomial,
        cofactor_exponent: exponent,
        core,
    })
}

/// h(u) * l(u) where h, l = det(I -+ sqrt(u(1-u)) A + u(D - 2I)), both
/// square roots taken on the same branch.
pub fn hl_product_at(g: &Graph, u: Complex<f64>) -> Complex<f64> {
    let n = g.vertex_count();
    let s = (u * (Complex::new(1.0, 0.0) - u)).sqrt();
    let a = g.adjacency_matrix();
    let det_with = |sign: f64| {
        let m = DMatrix::<Complex<f64>>::from_fn(n, n, |i, j| {
            let aij = a.get(i, j).to_f64().unwrap();
            let mut e = s * aij * sign;
            if i == j {
                e += Complex::new(1.0, 0.0) + u * (g.degree(i) as f64 - 2.0);
            }
            e
        });
        m.determinant()
    };
    det_with(-1.0) * det_with(1.0)
}

/// Number of spanning trees: a cofactor of the Laplacian D - A.
pub fn complexity(g: &Graph) -> Result<BigInt> {
    require_connected(g)?;
    if g.vertex_count() == 1 {
        return Ok(BigInt::one());
    }
    Ok(g.laplacian().minor(0, 0).det_bareiss())
}

/// det(D + A) for a simple connected non-bipartite graph.
pub fn iota(g: &Graph) -> Result<BigInt> {
    let c = classify(g);
    if !c.simple || !c.connected {
        return Err(Error::Hypothesis {
            violations: [
                (!c.simple).then_some(crate::error::Violation::NotSimple),
                (!c.connected).then_some(crate::error::Violation::NotConnected),
            ]
            .into_iter()
            .flatten()
            .collect(),
        });
    }
    if c.bipartite {
        return Err(Error::NotApplicable(
            "iota",
            "graph is bipartite, det(D + A) vanishes".into(),
        ));
    }
    Ok(g.signless_laplacian().det_bareiss())
}

const IOTA_EDGE_CAP: usize = 20;

/// The same invariant by definition: sum of 4^(component count) over all
/// spanning subgraphs whose components each contain exactly one cycle, of
/// odd length. Enumerates all 2^m edge subsets; capped at m <= 20.
pub fn iota_bruteforce(g: &Graph) -> Result<BigInt> {
    if !g.is_simple() {
        return Err(Error::Hypothesis { violations: vec![crate::error::Violation::NotSimple] });
    }
    let m = g.edge_count();
    if m > IOTA_EDGE_CAP {
        return Err(Error::EnumerationCap { requested: m, cap: IOTA_EDGE_CAP });
    }
    let n = g.vertex_count();
    let edges = g.unoriented_edges();
    let mut total = BigInt::zero();
    'subsets: for mask in 0u32..(1u32 << m) {
        // component structure of the spanning subgraph picked by `mask`
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (j, &(x, y)) in edges.iter().enumerate() {
            if mask >> j & 1 == 1 {
                adj[x].push(y);
                adj[y].push(x);
            }
        }
        let mut color = vec![None::<u8>; n];
        let mut components = 0usize;
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            components += 1;
            let mut vertices = 0usize;
            let mut degree_sum = 0usize;
            let mut odd_cycle = false;
            color[start] = Some(0);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                vertices += 1;
                degree_sum += adj[x].len();
                for &y in &adj[x] {
                    match color[y] {
                        None => {
                            color[y] = Some(1 - color[x].unwrap());
                            stack.push(y);
                        }
                        Some(cy) if cy == color[x].unwrap() => odd_cycle = true,
                        Some(_) => {}
                    }
                }
            }
            // unicyclic means edge count equals vertex count
            if degree_sum != 2 * vertices || !odd_cycle {
                continue 'subsets;
            }
        }
        total += BigInt::one() << (2 * components);
    }
    Ok(total)
}

/// One exact lhs = rhs comparison.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub pass: bool,
}

impl IdentityCheck {
    fn new(name: &'static str, lhs: BigRational, rhs: BigRational) -> Self {
        let pass = lhs == rhs;
        IdentityCheck { name, lhs, rhs, pass }
    }
}

impl Serialize for IdentityCheck {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("IdentityCheck", 4)?;
        st.serialize_field("name", self.name)?;
        st.serialize_field("lhs", &rational_string(&self.lhs))?;
        st.serialize_field("rhs", &rational_string(&self.rhs))?;
        st.serialize_field("pass", &self.pass)?;
        st.end()
    }
}

/// Spanning-tree count, det(D + A) with its brute-force cross check, and the
/// exact derivative identities.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub kappa: BigInt,
    pub iota: Option<BigInt>,
    pub iota_bruteforce: Option<BigInt>,
    pub identities: Vec<IdentityCheck>,
    pub pass: bool,
}

impl Serialize for InvariantReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("InvariantReport", 5)?;
        st.serialize_field("kappa", &self.kappa.to_string())?;
        st.serialize_field("iota", &self.iota.as_ref().map(|v| v.to_string()))?;
        st.serialize_field("iota_bruteforce", &self.iota_bruteforce.as_ref().map(|v| v.to_string()))?;
        st.serialize_field("identities", &self.identities)?;
        st.serialize_field("pass", &self.pass)?;
        st.end()
    }
}

impl InvariantReport {
    pub fn identity(&self, name: &str) -> Option<&IdentityCheck> {
        self.identities.iter().find(|c| c.name == name)
    }
}

fn ratio(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// Evaluates the derivative identities exactly:
/// f'(1) = 2(m-n) kappa on the edge-zeta side, and at u = 1/2 on the
/// two-step side p = 0 plus the first (non-bipartite) or second (bipartite)
/// derivative in closed form.
pub fn derivative_identities(g: &Graph) -> Result<InvariantReport> {
    require_connected(g)?;
    let c = classify(g);
    let kappa = complexity(g)?;
    let m = BigInt::from(g.edge_count());
    let n = g.vertex_count();
    let excess = &m - BigInt::from(n);

    let mut identities = Vec::new();

    let f = vertex_pencil_poly(g)?;
    let one = BigRational::one();
    let f_prime_one = f.derivative(1).eval_rational(&one);
    identities.push(IdentityCheck::new(
        "f_prime_one",
        f_prime_one,
        BigRational::from_integer(BigInt::from(2) * &excess * &kappa),
    ));

    let modified_ok = crate::graph::validate_for_modified_zeta(g).is_empty();
    let mut iota_value = None;
    let mut iota_bf = None;
    if modified_ok {
        let p = modified_reciprocal(g)?.core;
        let half = ratio(BigInt::one(), BigInt::from(2));
        identities.push(IdentityCheck::new(
            "p_half",
            p.eval_rational(&half),
            BigRational::zero(),
        ));
        let p1 = p.derivative(1).eval_rational(&half);
        if c.bipartite {
            identities.push(IdentityCheck::new("p_prime_half", p1, BigRational::zero()));
            let p2 = p.derivative(2).eval_rational(&half);
            let rhs = ratio(&excess * &excess * &kappa * &kappa, BigInt::one() << (2 * n - 5));
            identities.push(IdentityCheck::new("p_second_half", p2, rhs));
        } else {
            let iv = iota(g)?;
            let rhs = ratio(&excess * &kappa * &iv, BigInt::one() << (2 * n - 2));
            identities.push(IdentityCheck::new("p_prime_half", p1, rhs));
            if g.edge_count() <= IOTA_EDGE_CAP {
                iota_bf = Some(iota_bruteforce(g)?);
            }
            iota_value = Some(iv);
        }
    } else if !c.bipartite && c.simple {
        iota_value = iota(g).ok();
    }

    let pass = identities.iter().all(|i| i.pass)
        && match (&iota_value, &iota_bf) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        };
    Ok(InvariantReport { kappa, iota: iota_value, iota_bruteforce: iota_bf, identities, pass })
}

/// First `order` two-step cycle counts read off the log-derivative power
/// series of det(I - u (U^2)^+).
pub fn two_step_count_series(g: &Graph, order: usize) -> Result<Vec<BigInt>> {
    let support = squared_support(g)?;
    let p = det_poly_linear(&support.to_int_matrix())?;
    p.power_sum_series(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::generate;

    /// Test-local convolution, independent of IntPolynomial::mul.
    fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(coeffs)
    }

    #[test]
    fn triangle_reciprocal_is_one_minus_u_cubed_squared() {
        let g = generate("cycle:3").unwrap();
        let expected = poly(&convolve(&[1, 0, 0, -1], &[1, 0, 0, -1]));
        let edge = ihara_reciprocal_edge(&g).unwrap();
        let bass = ihara_reciprocal_bass(&g).unwrap();
        assert_eq!(edge.polynomial, expected);
        assert_eq!(bass.polynomial, expected);
        assert_eq!(edge.cofactor_exponent, 0);
    }

    #[test]
    fn k4_bass_core_matches_eigenvalue_factorization() {
        // Spec(A) = {3, -1, -1, -1}: f = (1-3u+2u^2)(1+u+2u^2)^3
        let mut expected = vec![1i64, -3, 2];
        for _ in 0..3 {
            expected = convolve(&expected, &[1, 1, 2]);
        }
        let bass = ihara_reciprocal_bass(&generate("k4").unwrap()).unwrap();
        assert_eq!(bass.core, poly(&expected));
        assert_eq!(bass.cofactor_exponent, 2);
        // full polynomial = (1-u^2)^2 * f, degree 12, constant term 1
        assert_eq!(bass.polynomial.degree(), Some(12));
        assert_eq!(bass.polynomial.coeff(0), BigInt::one());
    }

    #[test]
    fn edge_and_bass_forms_agree_on_fixtures() {
        for name in ["cycle:3", "k4", "k33", "cycle:5", "petersen"] {
            let g = generate(name).unwrap();
            let e = ihara_reciprocal_edge(&g).unwrap();
            let b = ihara_reciprocal_bass(&g).unwrap();
            assert_eq!(e.polynomial, b.polynomial, "{name}");
            assert_eq!(e.core, b.core, "{name}");
        }
    }

    #[test]
    fn k33_pencil_vanishes_at_one() {
        let f = ihara_reciprocal_bass(&generate("k33").unwrap()).unwrap().core;
        assert!(f.eval_rational(&BigRational::one()).is_zero());
    }

    #[test]
    fn petersen_edge_reciprocal_vanishes_at_one_to_order_six() {
        let z = ihara_reciprocal_edge(&generate("petersen").unwrap()).unwrap();
        let one = BigRational::one();
        let (mult, _) = crate::exact::rational_root_multiplicity(&z.polynomial, &one);
        assert_eq!(mult, 6); // m - n + 1
    }

    #[test]
    fn k4_modified_matches_spectral_product() {
        // eigenvalues of (U^2)^+: 5, 2 (x5), and three conjugate pairs with
        // 1 + u + 2u^2 as the inverse-root quadratic
        let mut expected = convolve(&[1, -5], &[1, -2]);
        for _ in 0..4 {
            expected = convolve(&expected, &[1, -2]);
        }
        for _ in 0..3 {
            expected = convolve(&expected, &[1, 1, 2]);
        }
        let z = modified_reciprocal(&generate("k4").unwrap()).unwrap();
        assert_eq!(z.polynomial, poly(&expected));
        assert_eq!(z.cofactor_exponent, 4);
        assert_eq!(z.core.degree(), Some(8));
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert!(z.core.eval_rational(&half).is_zero());
    }

    #[test]
    fn k33_modified_matches_spectral_product() {
        // (1-5u)^2 (1-2u)^8 (1+u)^8
        let mut expected = vec![1i64];
        for _ in 0..2 {
            expected = convolve(&expected, &[1, -5]);
        }
        for _ in 0..8 {
            expected = convolve(&expected, &[1, -2]);
        }
        for _ in 0..8 {
            expected = convolve(&expected, &[1, 1]);
        }
        let z = modified_reciprocal(&generate("k33").unwrap()).unwrap();
        assert_eq!(z.polynomial, poly(&expected));
        assert_eq!(z.cofactor_exponent, 6);
        // bipartite: p'(1/2) = 0 as well
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert!(z.core.eval_rational(&half).is_zero());
        assert!(z.core.derivative(1).eval_rational(&half).is_zero());
    }

    #[test]
    fn petersen_modified_matches_spectral_product() {
        // (1-5u)(1-2u)^11 (1+u+2u^2)^5 (1-2u+5u^2)^4 from the lifted
        // eigenvalues 5, 2^11, (-1/2 +- i sqrt7/2)^5, (1 -+ 2i)^4
        let mut expected = vec![1i64, -5];
        for _ in 0..11 {
            expected = convolve(&expected, &[1, -2]);
        }
        for _ in 0..5 {
            expected = convolve(&expected, &[1, 1, 2]);
        }
        for _ in 0..4 {
            expected = convolve(&expected, &[1, -2, 5]);
        }
        let z = modified_reciprocal(&generate("petersen").unwrap()).unwrap();
        assert_eq!(z.polynomial, poly(&expected));
        assert_eq!(z.cofactor_exponent, 10);
        assert_eq!(z.core.degree(), Some(20));
    }

    #[test]
    fn complexity_of_fixtures() {
        assert_eq!(complexity(&generate("cycle:3").unwrap()).unwrap(), BigInt::from(3));
        // Cayley: 4^2
        assert_eq!(complexity(&generate("k4").unwrap()).unwrap(), BigInt::from(16));
        // (1/10) * 2^5 * 5^4 from the Laplacian spectrum {0, 2^5, 5^4}
        assert_eq!(complexity(&generate("petersen").unwrap()).unwrap(), BigInt::from(2000));
    }

    #[test]
    fn iota_values() {
        // (3+3)(3-1)^3
        assert_eq!(iota(&generate("k4").unwrap()).unwrap(), BigInt::from(48));
        // (3+3) 4^5 1^4 from Spec(A) = {3, 1^5, (-2)^4}
        assert_eq!(iota(&generate("petersen").unwrap()).unwrap(), BigInt::from(6144));
        assert!(matches!(
            iota(&generate("k33").unwrap()),
            Err(Error::NotApplicable(..))
        ));
    }

    #[test]
    fn iota_bruteforce_matches_determinant() {
        for name in ["k4", "k5"] {
            let g = generate(name).unwrap();
            assert_eq!(iota_bruteforce(&g).unwrap(), iota(&g).unwrap(), "{name}");
        }
    }

    #[test]
    fn k4_derivative_identities() {
        let r = derivative_identities(&generate("k4").unwrap()).unwrap();
        assert!(r.pass);
        // f'(1) = 2 * 2 * 16
        assert_eq!(r.identity("f_prime_one").unwrap().lhs, BigRational::from_integer(64.into()));
        // p'(1/2) = (2/2^6) * 16 * 48 = 24
        assert_eq!(r.identity("p_prime_half").unwrap().lhs, BigRational::from_integer(24.into()));
        assert_eq!(r.iota, Some(BigInt::from(48)));
        assert_eq!(r.iota_bruteforce, Some(BigInt::from(48)));
    }

    #[test]
    fn k33_derivative_identities() {
        let r = derivative_identities(&generate("k33").unwrap()).unwrap();
        assert!(r.pass);
        assert!(r.identity("p_prime_half").unwrap().lhs.is_zero());
        // (9/2^7) * 81^2
        let expect = BigRational::new(BigInt::from(59049), BigInt::from(128));
        assert_eq!(r.identity("p_second_half").unwrap().lhs, expect);
        assert!(r.iota.is_none());
    }

    #[test]
    fn cycle_graph_gets_only_the_edge_side() {
        let r = derivative_identities(&generate("cycle:5").unwrap()).unwrap();
        assert!(r.identity("p_half").is_none());
        assert!(r.identity("f_prime_one").unwrap().pass);
    }

    #[test]
    fn series_counts_match_enumeration() {
        let g = generate("k4").unwrap();
        let series = two_step_count_series(&g, 3).unwrap();
        for (idx, count) in series.iter().enumerate() {
            let oracle = crate::walk::count_two_step_cycles(&g, idx + 1).unwrap();
            assert_eq!(count, &BigInt::from(oracle), "r = {}", idx + 1);
        }
    }
}

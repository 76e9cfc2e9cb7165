//! The Grover walk matrix on oriented edges, the positive supports of its
//! powers, the two-step transition relation, and brute-force cycle-counting
//! oracles.
//!
//! The oracles use only combinatorial definitions (no linear algebra) so that
//! they are independent evidence for the matrix pipeline.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{BinaryMatrix, RationalMatrix};
use crate::graph::{require_modified_hypotheses, Graph};

/// The 2m x 2m walk operator with exact rational entries, indexed by
/// oriented edges (row e, column f):
/// `2/deg o(e)` when `t(f) = o(e)` and `f != e^-1`, that minus one on the
/// inverse, zero elsewhere.
#[derive(Debug, Clone)]
pub struct GroverMatrix {
    mat: RationalMatrix,
}

impl GroverMatrix {
    pub fn matrix(&self) -> &RationalMatrix {
        &self.mat
    }

    /// Exact check that every row sums to 1.
    pub fn rows_sum_to_one(&self) -> bool {
        (0..self.mat.dim()).all(|e| self.mat.row_sum(e).is_one())
    }

    /// Exact check that U * U^T = I.
    pub fn is_orthogonal(&self) -> bool {
        self.mat.mul(&self.mat.transpose()).is_identity()
    }

    pub fn squared(&self) -> RationalMatrix {
        self.mat.mul(&self.mat)
    }

    pub fn positive_support(&self) -> BinaryMatrix {
        self.mat.positive_support()
    }
}

/// Builds the Grover matrix of a graph; errors on an isolated vertex.
pub fn grover_matrix(g: &Graph) -> Result<GroverMatrix> {
    if let Some(x) = (0..g.vertex_count()).find(|&x| g.degree(x) == 0) {
        return Err(Error::IsolatedVertex(x));
    }
    let dim = g.oriented_count();
    let mat = RationalMatrix::from_fn(dim, |e, f| {
        if g.terminus(f) != g.origin(e) {
            return BigRational::from_integer(BigInt::from(0));
        }
        let deg = BigInt::from(g.degree(g.origin(e)));
        let mut v = BigRational::new(BigInt::from(2), deg);
        if f == g.inverse(e) {
            v -= BigRational::one();
        }
        v
    });
    Ok(GroverMatrix { mat })
}

/// 0/1 matrix marking the strictly positive entries of a rational matrix.
pub fn positive_support(m: &RationalMatrix) -> BinaryMatrix {
    m.positive_support()
}

/// Positive support of the Grover matrix itself.
pub fn grover_support(g: &Graph) -> Result<BinaryMatrix> {
    Ok(grover_matrix(g)?.positive_support())
}

/// Positive support of U^exponent, computed from the exact rational power.
pub fn power_support(g: &Graph, exponent: usize) -> Result<BinaryMatrix> {
    assert!(exponent >= 1);
    let u = grover_matrix(g)?;
    let mut acc = u.matrix().clone();
    for _ in 1..exponent {
        acc = acc.mul(u.matrix());
    }
    Ok(acc.positive_support())
}

/// Positive support of U^2 for a simple connected graph with minimum degree
/// at least 3.
///
/// The identity `(U^2)^+ = (U^+)^2 + I` is asserted entrywise on every call;
/// a graph where it fails is reported as a structured counterexample instead
/// of being accepted silently.
pub fn squared_support(g: &Graph) -> Result<BinaryMatrix> {
    require_modified_hypotheses(g)?;
    let u = grover_matrix(g)?;
    let support = u.squared().positive_support();
    let uplus_sq = {
        let s = u.positive_support().to_int_matrix();
        s.mul(&s)
    };
    support.equals_plus_identity(&uplus_sq, "(U^2)^+ = (U^+)^2 + I")?;
    Ok(support)
}

/// Decides whether (e, f) is a two-step transition: either e = f, or some
/// connector g with o(g) = t(e), t(g) = o(f), g not in {e^-1, f^-1} exists.
/// Purely combinatorial; no matrix arithmetic.
pub fn two_step_related(g: &Graph, e: usize, f: usize) -> bool {
    if e == f {
        return true;
    }
    g.edges_from(g.terminus(e))
        .iter()
        .any(|&c| g.terminus(c) == g.origin(f) && c != g.inverse(e) && c != g.inverse(f))
}

const REDUCED_CYCLE_CAP: usize = 10;
const TWO_STEP_CAP: usize = 6;

/// Number of closed non-backtracking oriented-edge sequences of length `k`
/// (no step is followed, cyclically, by its inverse), counted rooted and
/// ordered, by depth-first enumeration.
pub fn count_reduced_cycles(g: &Graph, k: usize) -> Result<u64> {
    if k == 0 || k > REDUCED_CYCLE_CAP {
        return Err(Error::EnumerationCap { requested: k, cap: REDUCED_CYCLE_CAP });
    }
    let mut total = 0u64;
    let mut path = Vec::with_capacity(k);
    for start in 0..g.oriented_count() {
        path.push(start);
        count_reduced_rec(g, k, start, &mut path, &mut total);
        path.pop();
    }
    Ok(total)
}

fn count_reduced_rec(g: &Graph, k: usize, start: usize, path: &mut Vec<usize>, total: &mut u64) {
    let last = *path.last().unwrap();
    if path.len() == k {
        if g.terminus(last) == g.origin(start) && start != g.inverse(last) {
            *total += 1;
        }
        return;
    }
    for &next in g.edges_from(g.terminus(last)) {
        if next == g.inverse(last) {
            continue;
        }
        path.push(next);
        count_reduced_rec(g, k, start, path, total);
        path.pop();
    }
}

/// Number of closed length-`r` sequences whose cyclically consecutive pairs
/// are all two-step transitions, by depth-first enumeration over
/// [`two_step_related`] only.
pub fn count_two_step_cycles(g: &Graph, r: usize) -> Result<u64> {
    if r == 0 || r > TWO_STEP_CAP {
        return Err(Error::EnumerationCap { requested: r, cap: TWO_STEP_CAP });
    }
    require_modified_hypotheses(g)?;
    // adjacency lists of the two-step relation, built once
    let dim = g.oriented_count();
    let succ: Vec<Vec<usize>> = (0..dim)
        .map(|e| (0..dim).filter(|&f| two_step_related(g, e, f)).collect())
        .collect();
    let mut total = 0u64;
    let mut path = Vec::with_capacity(r);
    for start in 0..dim {
        path.push(start);
        count_two_step_rec(&succ, r, start, &mut path, &mut total);
        path.pop();
    }
    Ok(total)
}

fn count_two_step_rec(succ: &[Vec<usize>], r: usize, start: usize, path: &mut Vec<usize>, total: &mut u64) {
    let last = *path.last().unwrap();
    if path.len() == r {
        if succ[last].contains(&start) {
            *total += 1;
        }
        return;
    }
    for &next in &succ[last] {
        path.push(next);
        count_two_step_rec(succ, r, start, path, total);
        path.pop();
    }
}

//! One-shot verification of every identity the library implements, on a
//! single graph, with per-check pass/fail/not-applicable records.
//!
//! The runner never aborts early: a failing graph produces a complete
//! characterization, not just the first broken check.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{rational_root_multiplicity, square_free_decomposition};
use crate::graph::{classify, validate_for_modified_zeta, Graph};
use crate::spectra;
use crate::walk;
use crate::zeta::{self, ZetaKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// Outcome of one identity check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: &'static str,
    /// The identity being checked, written out.
    pub statement: &'static str,
    pub status: CheckStatus,
    /// Left/right values or a skip reason, when there is something to show.
    pub detail: Option<String>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckRecord>,
    pub overall_pass: bool,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

impl Outcome {
    fn from_bool(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }
}

fn outcome_of<T>(result: Result<T>, judge: impl FnOnce(T) -> Outcome) -> Outcome {
    match result {
        Ok(v) => judge(v),
        Err(e) => error_outcome(&e),
    }
}

/// Hypothesis-level errors skip a check; everything else fails it.
fn error_outcome(e: &Error) -> Outcome {
    match e {
        Error::NotApplicable(_, why) => Outcome::Skip(why.clone()),
        Error::Hypothesis { violations } => Outcome::Skip(
            violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "),
        ),
        Error::EnumerationCap { requested, cap } => {
            Outcome::Skip(format!("size {requested} over enumeration cap {cap}"))
        }
        Error::IsolatedVertex(x) => Outcome::Skip(format!("vertex {x} is isolated")),
        other => Outcome::Fail(other.to_string()),
    }
}

struct Runner {
    checks: Vec<CheckRecord>,
}

impl Runner {
    fn run(&mut self, name: &'static str, statement: &'static str, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        let (status, detail) = match outcome {
            Outcome::Pass => (CheckStatus::Pass, None),
            Outcome::Fail(d) => (CheckStatus::Fail, Some(d)),
            Outcome::Skip(d) => (CheckStatus::NotApplicable, Some(d)),
        };
        self.checks.push(CheckRecord { name, statement, status, detail, elapsed_ms });
    }
}

const NOT_MODIFIED: &str = "two-step hypotheses not met";

/// Runs every applicable identity check on the graph.
pub fn verify_graph(g: &Graph) -> VerificationReport {
    let c = classify(g);
    let modified_ok = validate_for_modified_zeta(g).is_empty();
    let mut r = Runner { checks: Vec::new() };

    r.run("grover_row_sums", "every row of U sums to 1", || {
        outcome_of(walk::grover_matrix(g), |u| {
            Outcome::from_bool(u.rows_sum_to_one(), || "a row sum differs from 1".into())
        })
    });
    r.run("grover_orthogonal", "U U^T = I exactly", || {
        outcome_of(walk::grover_matrix(g), |u| {
            Outcome::from_bool(u.is_orthogonal(), || "U U^T differs from I".into())
        })
    });
    r.run(
        "uplus_structure",
        "(U)^+ entry (e,f) = 1 iff t(f) = o(e) and f != e^-1",
        || {
            if g.min_degree() < 2 {
                return Outcome::Skip("requires minimum degree >= 2".into());
            }
            outcome_of(walk::grover_support(g), |s| {
                for e in 0..g.oriented_count() {
                    for f in 0..g.oriented_count() {
                        let expected = g.terminus(f) == g.origin(e) && f != g.inverse(e);
                        if s.get(e, f) != expected {
                            return Outcome::Fail(format!("mismatch at ({e},{f})"));
                        }
                    }
                }
                Outcome::Pass
            })
        },
    );

    let edge = (c.connected && g.min_degree() >= 1)
        .then(|| zeta::ihara_reciprocal_edge(g))
        .and_then(|r| r.ok());
    let bass = c.connected.then(|| zeta::ihara_reciprocal_bass(g)).and_then(|r| r.ok());

    r.run(
        "ihara_forms_agree",
        "det(I - u(U)^+) = (1-u^2)^(m-n) det(I - uA + u^2(D-I))",
        || {
            if !c.connected || g.min_degree() < 2 {
                return Outcome::Skip("requires a connected graph with minimum degree >= 2".into());
            }
            match (&edge, &bass) {
                (Some(e), Some(b)) => Outcome::from_bool(e.polynomial == b.polynomial, || {
                    format!("edge form {} vs vertex form {}", e.polynomial, b.polynomial)
                }),
                _ => Outcome::Skip("reciprocal not computable".into()),
            }
        },
    );
    r.run("ihara_pole_order", "u = 1 is a zero of the reciprocal of order m - n + 1", || {
        // for m = n the zero of f at u = 1 is no longer simple (f'(1) = 0),
        // so the order claim needs a strict excess of edges
        match &bass {
            Some(b) if g.edge_count() > g.vertex_count() => {
                let (mult, _) = rational_root_multiplicity(&b.polynomial, &BigRational::one());
                let expected = g.edge_count() - g.vertex_count() + 1;
                Outcome::from_bool(mult == expected, || format!("order {mult}, expected {expected}"))
            }
            _ => Outcome::Skip("requires a connected graph with m > n".into()),
        }
    });
    r.run("f_prime_one", "f'(1) = 2(m-n) kappa", || {
        if !c.connected {
            return Outcome::Skip("requires a connected graph".into());
        }
        // the identity is about the raw vertex pencil, before any cofactor split
        match (zeta::vertex_pencil_poly(g), zeta::complexity(g)) {
            (Ok(f), Ok(kappa)) => {
                let lhs = f.derivative(1).eval_rational(&BigRational::one());
                let excess = BigInt::from(g.edge_count() as i64 - g.vertex_count() as i64);
                let rhs = BigRational::from_integer(BigInt::from(2) * excess * kappa);
                Outcome::from_bool(lhs == rhs, || format!("f'(1) = {lhs}, closed form {rhs}"))
            }
            (Err(e), _) | (_, Err(e)) => error_outcome(&e),
        }
    });

    r.run("support_identity", "(U^2)^+ = (U^+)^2 + I entrywise", || {
        outcome_of(walk::squared_support(g), |_| Outcome::Pass)
    });
    r.run(
        "two_step_structure",
        "transposed (U^2)^+ marks exactly the two-step transitions",
        || {
            outcome_of(walk::squared_support(g), |s| {
                for e in 0..g.oriented_count() {
                    for f in 0..g.oriented_count() {
                        if s.get(f, e) != walk::two_step_related(g, e, f) {
                            return Outcome::Fail(format!("mismatch at ({e},{f})"));
                        }
                    }
                }
                Outcome::Pass
            })
        },
    );

    // computed once; several checks read it
    let modified_result = modified_ok.then(|| zeta::modified_reciprocal(g));
    let modified = modified_result.as_ref().and_then(|r| r.as_ref().ok());

    r.run(
        "modified_cofactor",
        "det(I - u(U^2)^+) is divisible by (1-2u)^(2(m-n))",
        || match &modified_result {
            None => Outcome::Skip(NOT_MODIFIED.into()),
            Some(Ok(_)) => Outcome::Pass,
            // the numeric spot check runs after the division succeeded
            Some(Err(Error::CheckFailed { .. })) => Outcome::Pass,
            Some(Err(e)) => error_outcome(e),
        },
    );
    r.run(
        "hl_spot_check",
        "p(u) = h(u) l(u) numerically at five sample points",
        || match &modified_result {
            None => Outcome::Skip(NOT_MODIFIED.into()),
            Some(Ok(_)) => Outcome::Pass,
            Some(Err(Error::CheckFailed { detail, .. })) => Outcome::Fail(detail.clone()),
            Some(Err(e)) => Outcome::Skip(format!("not evaluated: {e}")),
        },
    );
    r.run("p_half_zero", "p(1/2) = 0", || match modified {
        Some(z) => {
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            let v = z.core.eval_rational(&half);
            Outcome::from_bool(v.is_zero(), || format!("p(1/2) = {v}"))
        }
        None => Outcome::Skip(NOT_MODIFIED.into()),
    });
    r.run(
        "p_derivative_half",
        "p'(1/2) (or p''(1/2) when bipartite) matches its closed form",
        || {
            if !modified_ok {
                return Outcome::Skip(NOT_MODIFIED.into());
            }
            outcome_of(zeta::derivative_identities(g), |report| {
                let relevant: Vec<_> = report
                    .identities
                    .iter()
                    .filter(|i| i.name != "f_prime_one")
                    .collect();
                Outcome::from_bool(relevant.iter().all(|i| i.pass), || {
                    relevant
                        .iter()
                        .filter(|i| !i.pass)
                        .map(|i| format!("{}: {} vs {}", i.name, i.lhs, i.rhs))
                        .collect::<Vec<_>>()
                        .join("; ")
                })
            })
        },
    );
    r.run(
        "half_pole_order",
        "order of u = 1/2 is 2(m-n+1) bipartite, 2(m-n)+1 otherwise",
        || match modified {
            Some(z) => {
                let half = BigRational::new(BigInt::one(), BigInt::from(2));
                let (mult, _) = rational_root_multiplicity(&z.polynomial, &half);
                let excess = g.edge_count() - g.vertex_count();
                let expected = if c.bipartite { 2 * (excess + 1) } else { 2 * excess + 1 };
                Outcome::from_bool(mult == expected, || format!("order {mult}, expected {expected}"))
            }
            None => Outcome::Skip(NOT_MODIFIED.into()),
        },
    );

    let radius_result = modified_ok.then(|| spectra::radius_of_convergence_check(g));
    r.run(
        "radius_bounds",
        "1/((Delta-1)^2+1) <= rho <= 1/((delta-1)^2+1), with the row-sum bracket on alpha",
        || match &radius_result {
            None => Outcome::Skip(NOT_MODIFIED.into()),
            Some(Ok(rep)) => Outcome::from_bool(rep.bounds_ok && rep.row_sum_bracket_ok, || {
                format!("rho = {}, bounds [{}, {}]", rep.rho, rep.rho_lower, rep.rho_upper)
            }),
            Some(Err(e)) => error_outcome(e),
        },
    );
    r.run("radius_pole_order", "order of rho is 2 if bipartite else 1", || match &radius_result {
        None => Outcome::Skip(NOT_MODIFIED.into()),
        Some(Ok(rep)) => Outcome::from_bool(rep.multiplicity_ok, || {
            format!("order {} with bipartite = {}", rep.rho_multiplicity, rep.bipartite)
        }),
        Some(Err(e)) => error_outcome(e),
    });

    r.run("iota_cross_validation", "det(D + A) = sum over odd-unicyclic factors of 4^omega", || {
        if c.bipartite {
            return Outcome::Skip("bipartite graph: det(D+A) = 0".into());
        }
        match (zeta::iota(g), zeta::iota_bruteforce(g)) {
            (Ok(a), Ok(b)) => Outcome::from_bool(a == b, || format!("det {a} vs enumeration {b}")),
            (Err(e), _) | (_, Err(e)) => error_outcome(&e),
        }
    });

    r.run("reduced_cycle_counts", "N_k = trace((U^+)^k) for k <= 6", || {
        // degree-1 vertices put positive entries on the inverse diagonal of
        // U, so (U)^+ stops being the non-backtracking operator
        if g.min_degree() < 2 {
            return Outcome::Skip("requires minimum degree >= 2".into());
        }
        let cost = g.oriented_count() as f64 * (g.max_degree() as f64 - 1.0).powi(5);
        if cost > 5e7 {
            return Outcome::Skip("enumeration too large".into());
        }
        outcome_of(walk::grover_support(g), |s| {
            for k in 1..=6 {
                let oracle = match walk::count_reduced_cycles(g, k) {
                    Ok(v) => v,
                    Err(e) => return error_outcome(&e),
                };
                let trace = s.trace_of_power(k);
                if BigInt::from(oracle) != trace {
                    return Outcome::Fail(format!("k = {k}: enumeration {oracle}, trace {trace}"));
                }
            }
            Outcome::Pass
        })
    });

    let two_step_cost_ok = {
        let base = (g.max_degree() as f64 - 1.0).powi(2) + 1.0;
        g.oriented_count() as f64 * base.powi(3) <= 5e7
    };
    r.run("two_step_cycle_counts", "two-step N_r = trace(((U^2)^+)^r) for r <= 4", || {
        if !two_step_cost_ok {
            return Outcome::Skip("enumeration too large".into());
        }
        outcome_of(walk::squared_support(g), |s| {
            for rr in 1..=4 {
                let oracle = match walk::count_two_step_cycles(g, rr) {
                    Ok(v) => v,
                    Err(e) => return error_outcome(&e),
                };
                let trace = s.trace_of_power(rr);
                if BigInt::from(oracle) != trace {
                    return Outcome::Fail(format!("r = {rr}: enumeration {oracle}, trace {trace}"));
                }
            }
            Outcome::Pass
        })
    });
    r.run(
        "two_step_series",
        "two-step counts equal the log-derivative series of det(I - u(U^2)^+)",
        || {
            if !two_step_cost_ok {
                return Outcome::Skip("enumeration too large".into());
            }
            match modified {
                Some(z) => {
                    let series = match z.polynomial.power_sum_series(4) {
                        Ok(s) => s,
                        Err(e) => return error_outcome(&e),
                    };
                    for (idx, coeff) in series.iter().enumerate() {
                        let oracle = match walk::count_two_step_cycles(g, idx + 1) {
                            Ok(v) => v,
                            Err(e) => return error_outcome(&e),
                        };
                        if &BigInt::from(oracle) != coeff {
                            return Outcome::Fail(format!(
                                "r = {}: series {coeff}, enumeration {oracle}",
                                idx + 1
                            ));
                        }
                    }
                    Outcome::Pass
                }
                None => Outcome::Skip(NOT_MODIFIED.into()),
            }
        },
    );

    r.run(
        "lifted_charpoly",
        "charpoly((U^2)^+) = (x-2)^(2(m-n)) det(x^2 I - x(A^2-(2k-4)I) + (A^2+(k-2)^2 I))",
        || {
            outcome_of(spectra::lifted_charpoly_check(g), |chk| {
                Outcome::from_bool(chk.pass, || "sides differ".into())
            })
        },
    );
    r.run(
        "uplus_charpoly",
        "charpoly((U)^+) = (x^2-1)^(m-n) det((x^2-1)I - xA + D)",
        || {
            outcome_of(spectra::uplus_charpoly_check(g), |chk| {
                Outcome::from_bool(chk.pass, || "sides differ".into())
            })
        },
    );

    for (name, statement, kind) in [
        (
            "ihara_pole_geometry",
            "real edge-zeta poles in band; spectral gap forces all non-trivial poles onto the circle",
            ZetaKind::Ihara,
        ),
        (
            "modified_pole_geometry",
            "real two-step poles in band; spectral gap forces all non-trivial poles onto the shifted circle",
            ZetaKind::Modified,
        ),
    ] {
        r.run(name, statement, || {
            outcome_of(spectra::pole_geometry(g, kind), |geo| {
                let implication = !geo.report.ramanujan || geo.report.rh_analogue_holds;
                Outcome::from_bool(geo.real_band_ok && implication, || {
                    format!(
                        "ramanujan = {}, rh = {}, band ok = {}, offending = {:?}",
                        geo.report.ramanujan,
                        geo.report.rh_analogue_holds,
                        geo.real_band_ok,
                        geo.report.offending_poles
                    )
                })
            })
        });
    }

    r.run(
        "lifted_poles_match",
        "inverses of the lifted spectrum equal the two-step poles as multisets",
        || {
            let lifted = match spectra::lifted_spectrum(g) {
                Ok(v) => v,
                Err(e) => return error_outcome(&e),
            };
            match modified {
                Some(z) => {
                    let ps = spectra::poles(g, z);
                    let mut a: Vec<(f64, f64)> = ps
                        .poles
                        .iter()
                        .flat_map(|p| std::iter::repeat_n((p.re, p.im), p.multiplicity))
                        .collect();
                    let mut b: Vec<(f64, f64)> = lifted
                        .iter()
                        .map(|z| {
                            let inv = 1.0 / z;
                            (inv.re, inv.im)
                        })
                        .collect();
                    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
                    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
                    if a.len() != b.len() {
                        return Outcome::Fail(format!("{} poles vs {} lifted values", a.len(), b.len()));
                    }
                    for (x, y) in a.iter().zip(&b) {
                        if (x.0 - y.0).abs() > 1e-7 || (x.1 - y.1).abs() > 1e-7 {
                            return Outcome::Fail(format!("{x:?} vs {y:?}"));
                        }
                    }
                    Outcome::Pass
                }
                None => Outcome::Skip(NOT_MODIFIED.into()),
            }
        },
    );

    r.run(
        "bipartite_even_multiplicities",
        "for bipartite graphs every root of the two-step reciprocal has even multiplicity",
        || {
            if !c.bipartite {
                return Outcome::Skip("graph is not bipartite".into());
            }
            match modified {
                Some(z) => {
                    for (factor, mult) in square_free_decomposition(&z.polynomial) {
                        if mult % 2 != 0 {
                            return Outcome::Fail(format!(
                                "factor {factor} appears with odd multiplicity {mult}"
                            ));
                        }
                    }
                    Outcome::Pass
                }
                None => Outcome::Skip(NOT_MODIFIED.into()),
            }
        },
    );

    let overall_pass = r.checks.iter().all(|ch| ch.status != CheckStatus::Fail);
    VerificationReport { checks: r.checks, overall_pass }
}

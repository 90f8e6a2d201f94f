//! Command implementations. Each returns rendered output plus a process
//! exit code: `0` success, `1` a check that ran to completion and failed
//! (tail-order violation, associativity counterexample, infeasible
//! re-filtering, unbalanced Cohen–Macaulay identity), `2` any error
//! (unreadable file, parse error, unsupported input).

use crate::expr;
use crate::parse;
use crate::report::{digest, InputDigest, Report};
use qpbw_core::orders::{AdmissibleOrder, WeightVector};
use qpbw_core::pbw::AlgebraPresentation;
use qpbw_core::qspace::QuantumSpacePresentation;
use qpbw_core::refilter::{self, RefilterError};
use qpbw_core::{homology, ExponentVector, GkDim};
use serde_json::{json, Value};
use std::path::Path;

/// What a command produced: text for stdout and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub exit: i32,
}

fn error_outcome(command: &str, input: Option<InputDigest>, message: String) -> Outcome {
    let report = Report::new(command, input, "error", json!({ "error": message }));
    Outcome {
        text: report.render(),
        exit: 2,
    }
}

/// Reads and parses a presentation file, or produces an error outcome.
fn load(command: &str, path: &Path) -> Result<(AlgebraPresentation, InputDigest), Outcome> {
    let bytes = match std::fs::read(path) {
        Ok(b) => b,
        Err(e) => {
            return Err(error_outcome(
                command,
                None,
                format!("cannot read {}: {e}", path.display()),
            ));
        }
    };
    let input = InputDigest {
        path: path.display().to_string(),
        sha256: digest(&bytes),
    };
    let text = match String::from_utf8(bytes) {
        Ok(t) => t,
        Err(e) => {
            return Err(error_outcome(command, Some(input), format!("not UTF-8: {e}")));
        }
    };
    match parse::parse_presentation(&text) {
        Ok(a) => Ok((a, input)),
        Err(e) => Err(error_outcome(command, Some(input), e.to_string())),
    }
}

fn var_refs(a: &AlgebraPresentation) -> (Vec<&str>, Vec<&str>) {
    (
        a.var_names().iter().map(String::as_str).collect(),
        a.domain().var_names().iter().map(String::as_str).collect(),
    )
}

fn exponents_json(e: &ExponentVector) -> Value {
    Value::Array(e.entries().iter().map(|&k| json!(k)).collect())
}

/// `check FILE [--weights w1,..,ws]`: tail-order check under the weight
/// order (uniform weights by default) plus the associativity check with
/// all generator triples and 50 seeded random triples.
pub fn check(path: &Path, weights: Option<Vec<i64>>) -> Outcome {
    let (algebra, input) = match load("check", path) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let s = algebra.num_vars();
    let w = match weights {
        Some(entries) => {
            if entries.len() != s {
                return error_outcome(
                    "check",
                    Some(input),
                    format!("expected {s} weights, got {}", entries.len()),
                );
            }
            match WeightVector::new(entries) {
                Ok(w) => w,
                Err(e) => return error_outcome("check", Some(input), e.to_string()),
            }
        }
        None => WeightVector::uniform(s),
    };
    let weights_list = w.entries().to_vec();
    let order = AdmissibleOrder::WeightLex(w);
    let tail_report = match algebra.check_tail_order(&order) {
        Ok(r) => r,
        Err(e) => return error_outcome("check", Some(input), e.to_string()),
    };
    let assoc = match algebra.associativity_check(50) {
        Ok(r) => r,
        Err(e) => return error_outcome("check", Some(input), e.to_string()),
    };
    let (vars, coeffs) = var_refs(&algebra);
    let counterexample = assoc.counterexample.as_ref().map(|ce| {
        json!({
            "f": ce.f.format_with(&vars, &coeffs),
            "g": ce.g.format_with(&vars, &coeffs),
            "h": ce.h.format_with(&vars, &coeffs),
            "left": ce.left.format_with(&vars, &coeffs),
            "right": ce.right.format_with(&vars, &coeffs),
        })
    });
    let payload = json!({
        "algebra": algebra.name(),
        "vars": algebra.var_names(),
        "coeff_vars": algebra.domain().var_names(),
        "order": { "kind": "weightlex", "weights": weights_list },
        "zero_minimal": tail_report.zero_minimal,
        "tail_order_ok": tail_report.is_satisfied(),
        "tail_violations": tail_report
            .violations
            .iter()
            .map(|v| json!({
                "j": v.j + 1,
                "i": v.i + 1,
                "exponents": exponents_json(&v.exponent),
            }))
            .collect::<Vec<_>>(),
        "associativity": {
            "passed": assoc.passed(),
            "generator_triples": assoc.generator_triples,
            "random_trials": assoc.random_trials,
            "counterexample": counterexample,
        },
    });
    let ok = tail_report.is_satisfied() && assoc.passed();
    let report = Report::new("check", Some(input), if ok { "pass" } else { "fail" }, payload);
    Outcome {
        text: report.render(),
        exit: i32::from(!ok),
    }
}

/// `normalize FILE --expr E`: evaluate an expression into standard form.
pub fn normalize(path: &Path, expression: &str) -> Outcome {
    let (algebra, input) = match load("normalize", path) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let parsed = match expr::parse_expr(expression, 1, 1) {
        Ok(p) => p,
        Err(e) => return error_outcome("normalize", Some(input), e.to_string()),
    };
    let value = match expr::eval_polynomial(&parsed, &algebra) {
        Ok(v) => v,
        Err(e) => return error_outcome("normalize", Some(input), e.to_string()),
    };
    let (vars, coeffs) = var_refs(&algebra);
    let payload = json!({
        "algebra": algebra.name(),
        "expression": expression,
        "standard_form": value.format_with(&vars, &coeffs),
        "terms": value
            .terms()
            .map(|(e, c)| json!({
                "exponents": exponents_json(e),
                "coefficient": c.format_with(&coeffs),
            }))
            .collect::<Vec<_>>(),
    });
    Outcome {
        text: Report::new("normalize", Some(input), "pass", payload).render(),
        exit: 0,
    }
}

/// `refilter FILE`: find a weight vector pushing every tail strictly below
/// its relation's leading term, and emit the re-graded presentation; on
/// infeasibility, emit the certificate.
pub fn refilter(path: &Path) -> Outcome {
    let (algebra, input) = match load("refilter", path) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let c_set = refilter::collect_c_set(&algebra);
    let c_set_json: Vec<Value> = c_set
        .entries()
        .iter()
        .map(|entry| {
            json!({
                "vector": entry.vector,
                "origins": entry
                    .origins
                    .iter()
                    .map(|o| json!({
                        "j": o.j + 1,
                        "i": o.i + 1,
                        "exponents": exponents_json(&o.exponent),
                    }))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    match refilter::refilter_pipeline(&algebra) {
        Ok(outcome) => {
            let margins: Vec<Value> = c_set
                .entries()
                .iter()
                .zip(&outcome.certificate.margins)
                .map(|(entry, margin)| {
                    json!({
                        "vector": entry.vector,
                        "margin": margin,
                    })
                })
                .collect();
            let payload = json!({
                "algebra": algebra.name(),
                "c_set": c_set_json,
                "feasible": true,
                "weights": outcome.certificate.weights.entries(),
                "margins": margins,
                "graded": {
                    "name": outcome.graded.algebra.name(),
                    "degrees": outcome.graded.degrees,
                    "file": parse::serialize_presentation(&outcome.graded.algebra),
                },
            });
            Outcome {
                text: Report::new("refilter", Some(input), "pass", payload).render(),
                exit: 0,
            }
        }
        Err(RefilterError::Infeasible { certificate }) => {
            let payload = json!({
                "algebra": algebra.name(),
                "c_set": c_set_json,
                "feasible": false,
                "certificate": certificate.map(|cert| {
                    cert.combination
                        .iter()
                        .map(|y| y.to_string())
                        .collect::<Vec<_>>()
                }),
            });
            Outcome {
                text: Report::new("refilter", Some(input), "fail", payload).render(),
                exit: 1,
            }
        }
        Err(e) => error_outcome("refilter", Some(input), e.to_string()),
    }
}

/// Converts a tail-free presentation into a quantum space, or reports why
/// it cannot be.
fn as_space(
    command: &str,
    algebra: &AlgebraPresentation,
    input: &InputDigest,
) -> Result<QuantumSpacePresentation, Outcome> {
    QuantumSpacePresentation::from_presentation(algebra).map_err(|e| {
        error_outcome(
            command,
            Some(InputDigest {
                path: input.path.clone(),
                sha256: input.sha256.clone(),
            }),
            e.to_string(),
        )
    })
}

/// `count FILE --max-degree N`: exact counts of monomials of total degree
/// at most `n` for `n = 0..N`.
pub fn count(path: &Path, max_degree: u32) -> Outcome {
    let (algebra, input) = match load("count", path) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let space = match as_space("count", &algebra, &input) {
        Ok(s) => s,
        Err(out) => return out,
    };
    let counts: Vec<String> = (0..=max_degree)
        .map(|n| space.growth_count(n).to_string())
        .collect();
    let payload = json!({
        "algebra": algebra.name(),
        "s": space.num_vars(),
        "t": space.num_inverted(),
        "max_degree": max_degree,
        "counts": counts,
    });
    Outcome {
        text: Report::new("count", Some(input), "pass", payload).render(),
        exit: 0,
    }
}

/// `gkdim FILE [--ideal "m1,m2,.."] [--n-max N]`: growth-based dimension
/// estimate of the space, or the exact combinatorial dimension of a
/// monomial quotient.
pub fn gkdim(path: &Path, ideal: Option<&str>, n_max: u32) -> Outcome {
    let (algebra, input) = match load("gkdim", path) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let space = match as_space("gkdim", &algebra, &input) {
        Ok(s) => s,
        Err(out) => return out,
    };
    match ideal {
        None => {
            let estimate = match space.gkdim_estimate(n_max) {
                Ok(e) => e,
                Err(e) => return error_outcome("gkdim", Some(input), e.to_string()),
            };
            let payload = json!({
                "algebra": algebra.name(),
                "s": space.num_vars(),
                "t": space.num_inverted(),
                "n_max": n_max,
                "count_at_n_max": space.growth_count(n_max).to_string(),
                "estimate_raw": estimate.raw.to_string(),
                "gkdim": estimate.rounded.to_string(),
            });
            Outcome {
                text: Report::new("gkdim", Some(input), "pass", payload).render(),
                exit: 0,
            }
        }
        Some(spec) => {
            let mut generators = Vec::new();
            for part in spec.split(',') {
                let text = part.trim();
                if text.is_empty() {
                    return error_outcome(
                        "gkdim",
                        Some(input),
                        "empty generator in --ideal".to_string(),
                    );
                }
                let parsed = match expr::parse_expr(text, 1, 1) {
                    Ok(p) => p,
                    Err(e) => {
                        return error_outcome(
                            "gkdim",
                            Some(input),
                            format!("in generator `{text}`: {e}"),
                        );
                    }
                };
                let value = match expr::eval_polynomial(&parsed, &algebra) {
                    Ok(v) => v,
                    Err(e) => {
                        return error_outcome(
                            "gkdim",
                            Some(input),
                            format!("in generator `{text}`: {e}"),
                        );
                    }
                };
                let exponent = value
                    .terms()
                    .next()
                    .filter(|_| value.num_terms() == 1)
                    .map(|(e, _)| e.clone());
                match exponent {
                    Some(e) => generators.push(e),
                    None => {
                        return error_outcome(
                            "gkdim",
                            Some(input),
                            format!("generator `{text}` is not a monomial"),
                        );
                    }
                }
            }
            let dim = match space.monomial_quotient_gkdim(&generators) {
                Ok(d) => d,
                Err(e) => return error_outcome("gkdim", Some(input), e.to_string()),
            };
            let payload = json!({
                "algebra": algebra.name(),
                "s": space.num_vars(),
                "t": space.num_inverted(),
                "generators": generators.iter().map(exponents_json).collect::<Vec<_>>(),
                "gkdim": dim.to_string(),
            });
            Outcome {
                text: Report::new("gkdim", Some(input), "pass", payload).render(),
                exit: 0,
            }
        }
    }
}

/// `koszul FILE --vars i1,..,ic [--degree-bound D]`: builds and verifies
/// the resolution for the chosen variables, computes the grade from dual
/// cohomology, and checks the Cohen–Macaulay balance.
pub fn koszul(path: &Path, vars: &str, degree_bound: Option<i64>) -> Outcome {
    let (algebra, input) = match load("koszul", path) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let space = match as_space("koszul", &algebra, &input) {
        Ok(s) => s,
        Err(out) => return out,
    };
    let mut subset = Vec::new();
    for part in vars.split(',') {
        let text = part.trim();
        match text.parse::<usize>() {
            Ok(idx) if idx >= 1 => subset.push(idx - 1),
            _ => {
                return error_outcome(
                    "koszul",
                    Some(input),
                    format!("bad variable index `{text}` in --vars (1-based integers)"),
                );
            }
        }
    }
    let report = match homology::cm_check(&space, &subset, degree_bound) {
        Ok(r) => r,
        Err(e) => return error_outcome("koszul", Some(input), e.to_string()),
    };
    let table = &report.grade_result.table;
    let ext: Vec<Value> = (0..=report.subset.len())
        .map(|k| {
            json!({
                "k": k,
                "nonzero": table
                    .nonzero_in(k)
                    .iter()
                    .map(|(d, dim)| json!({ "degree": d, "dim": dim }))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    let quotient = match report.quotient_gkdim {
        GkDim::Finite(d) => d.to_string(),
        GkDim::NegInfinity => "-inf".to_string(),
    };
    let payload = json!({
        "algebra": algebra.name(),
        "s": space.num_vars(),
        "subset": report.subset.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "complex_verified": true,
        "grade": report.grade,
        "degree_window": [table.min_degree, table.max_degree],
        "ext": ext,
        "quotient_gkdim": quotient,
        "total_gkdim": report.total_gkdim,
        "balanced": report.balanced,
    });
    let outcome = if report.balanced { "pass" } else { "fail" };
    Outcome {
        text: Report::new("koszul", Some(input), outcome, payload).render(),
        exit: i32::from(!report.balanced),
    }
}

/// `catalog [NAME]`: list the stock algebras, or print one as a
/// presentation file.
pub fn catalog(name: Option<&str>) -> Outcome {
    match name {
        None => {
            let mut text = String::new();
            for entry in qpbw_core::catalog::entries() {
                text.push_str(&format!("{:10} {}\n", entry.name, entry.summary));
            }
            Outcome { text, exit: 0 }
        }
        Some(name) => match qpbw_core::catalog::find(name) {
            Some(entry) => Outcome {
                text: parse::serialize_presentation(&entry.algebra),
                exit: 0,
            },
            None => error_outcome("catalog", None, format!("no catalog entry named `{name}`")),
        },
    }
}

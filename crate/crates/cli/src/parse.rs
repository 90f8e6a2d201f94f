//! The presentation file format: parsing and canonical serialization.
//!
//! A file is a sequence of directives, one per line, with `#` starting a
//! comment and blank lines ignored:
//!
//! ```text
//! algebra weyl
//! coeffs field q                 # or: coeffs laurent q K
//! vars x1 x2
//! q[2,1] = q                     # commutation unit, j > i, default 1
//! sigma[1]: K -> q^2*K           # automorphism action, default identity
//! rel[2,1] = 1                   # lower-order tail, default 0
//! ```
//!
//! Indices are 1-based. Commutation units and tails default so that a file
//! listing only `vars` describes a commutative polynomial ring. Relation
//! right-hand sides are arbitrary expressions; they are normalized against
//! the tail-free skeleton of the declared algebra, so the stored tail is
//! always in standard form. Every diagnostic carries a line and column.

use crate::expr::{self, CoeffScope, ExprError, Pos};
use qpbw_core::pbw::{AlgebraPresentation, CoefficientDomain, StandardPolynomial};
use qpbw_core::scalars::{DiagonalAutomorphism, LaurentCoefficient, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// A positioned file-format error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub line: u32,
    pub col: u32,
}

impl ParseError {
    fn new(message: impl Into<String>, line: u32, col: u32) -> Self {
        ParseError {
            message: message.into(),
            line,
            col,
        }
    }
}

impl From<ExprError> for ParseError {
    fn from(e: ExprError) -> Self {
        ParseError::new(e.message, e.pos.line, e.pos.col)
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// One raw directive with the position of its payload.
#[derive(Debug)]
enum Directive {
    Algebra {
        name: String,
    },
    CoeffsField,
    CoeffsLaurent {
        names: Vec<String>,
    },
    Vars {
        names: Vec<String>,
    },
    QUnit {
        j: usize,
        i: usize,
        rhs: String,
        rhs_pos: Pos,
    },
    Sigma {
        k: usize,
        target: String,
        target_pos: Pos,
        rhs: String,
        rhs_pos: Pos,
    },
    Rel {
        j: usize,
        i: usize,
        rhs: String,
        rhs_pos: Pos,
    },
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `line` at the first `=`, returning the trimmed right-hand side
/// and its starting column.
fn split_assignment(line: &str, lineno: u32) -> Result<(&str, &str, Pos), ParseError> {
    let Some(eq) = line.find('=') else {
        return Err(ParseError::new("expected `=`", lineno, line.chars().count() as u32 + 1));
    };
    let head = &line[..eq];
    let tail = &line[eq + 1..];
    let trimmed = tail.trim_start();
    let pad = tail.chars().count() - trimmed.chars().count();
    let col = line[..eq].chars().count() as u32 + 1 + 1 + pad as u32;
    Ok((head.trim_end(), trimmed.trim_end(), Pos { line: lineno, col }))
}

/// Parses `name[j,i]` into the pair of 1-based indices.
fn parse_indices(head: &str, keyword: &str, lineno: u32) -> Result<(usize, usize), ParseError> {
    let inner = head
        .strip_prefix(keyword)
        .and_then(|r| r.trim().strip_prefix('['))
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| {
            ParseError::new(format!("expected `{keyword}[j,i]`"), lineno, 1)
        })?;
    let mut parts = inner.split(',');
    let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(ParseError::new(
            format!("expected two indices in `{keyword}[j,i]`"),
            lineno,
            1,
        ));
    };
    let j: usize = a.trim().parse().map_err(|_| {
        ParseError::new(format!("bad index `{}`", a.trim()), lineno, 1)
    })?;
    let i: usize = b.trim().parse().map_err(|_| {
        ParseError::new(format!("bad index `{}`", b.trim()), lineno, 1)
    })?;
    Ok((j, i))
}

fn parse_directive(raw: &str, lineno: u32) -> Result<Option<Directive>, ParseError> {
    let line = match raw.find('#') {
        Some(h) => &raw[..h],
        None => raw,
    };
    let trimmed = line.trim();
    if trimmed.is_empty() {
        return Ok(None);
    }
    let keyword = trimmed.split_whitespace().next().unwrap_or("");
    if let Some(rest) = trimmed.strip_prefix("algebra ") {
        let name = rest.trim();
        if !is_identifier(name) {
            return Err(ParseError::new(
                format!("algebra name `{name}` is not an identifier"),
                lineno,
                1,
            ));
        }
        return Ok(Some(Directive::Algebra {
            name: name.to_string(),
        }));
    }
    if let Some(rest) = trimmed.strip_prefix("coeffs ") {
        let mut words = rest.split_whitespace();
        match words.next() {
            Some("field") => {
                if words.next() != Some("q") || words.next().is_some() {
                    return Err(ParseError::new("expected `coeffs field q`", lineno, 1));
                }
                return Ok(Some(Directive::CoeffsField));
            }
            Some("laurent") => {
                if words.next() != Some("q") {
                    return Err(ParseError::new(
                        "expected `coeffs laurent q z1 ..`",
                        lineno,
                        1,
                    ));
                }
                let names: Vec<String> = words.map(str::to_string).collect();
                if names.is_empty() {
                    return Err(ParseError::new(
                        "laurent coefficients need at least one variable",
                        lineno,
                        1,
                    ));
                }
                for n in &names {
                    if !is_identifier(n) || n == "q" {
                        return Err(ParseError::new(
                            format!("bad coefficient name `{n}`"),
                            lineno,
                            1,
                        ));
                    }
                }
                return Ok(Some(Directive::CoeffsLaurent { names }));
            }
            other => {
                return Err(ParseError::new(
                    format!(
                        "expected `field` or `laurent` after `coeffs`, found `{}`",
                        other.unwrap_or("")
                    ),
                    lineno,
                    1,
                ));
            }
        }
    }
    if let Some(rest) = trimmed.strip_prefix("vars ") {
        let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        for n in &names {
            if !is_identifier(n) || n == "q" {
                return Err(ParseError::new(format!("bad variable name `{n}`"), lineno, 1));
            }
        }
        return Ok(Some(Directive::Vars { names }));
    }
    if keyword.starts_with("q[") || keyword == "q" {
        let (head, rhs, rhs_pos) = split_assignment(trimmed, lineno)?;
        let (j, i) = parse_indices(head, "q", lineno)?;
        return Ok(Some(Directive::QUnit {
            j,
            i,
            rhs: rhs.to_string(),
            rhs_pos,
        }));
    }
    if keyword.starts_with("rel[") || keyword == "rel" {
        let (head, rhs, rhs_pos) = split_assignment(trimmed, lineno)?;
        let (j, i) = parse_indices(head, "rel", lineno)?;
        return Ok(Some(Directive::Rel {
            j,
            i,
            rhs: rhs.to_string(),
            rhs_pos,
        }));
    }
    if keyword.starts_with("sigma[") || keyword == "sigma" {
        // sigma[k]: z -> expr
        let Some(colon) = trimmed.find(':') else {
            return Err(ParseError::new("expected `:` after `sigma[k]`", lineno, 1));
        };
        let head = &trimmed[..colon];
        let inner = head
            .strip_prefix("sigma")
            .and_then(|r| r.trim().strip_prefix('['))
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| ParseError::new("expected `sigma[k]`", lineno, 1))?;
        let k: usize = inner.trim().parse().map_err(|_| {
            ParseError::new(format!("bad index `{}`", inner.trim()), lineno, 1)
        })?;
        let body = &trimmed[colon + 1..];
        let Some(arrow) = body.find("->") else {
            return Err(ParseError::new("expected `->` in sigma rule", lineno, 1));
        };
        let target_raw = &body[..arrow];
        let target = target_raw.trim();
        let target_pad = target_raw.chars().count() - target_raw.trim_start().chars().count();
        let target_pos = Pos {
            line: lineno,
            col: (colon + 1 + target_pad) as u32 + 1,
        };
        if !is_identifier(target) {
            return Err(ParseError::new(
                format!("bad coefficient name `{target}`"),
                target_pos.line,
                target_pos.col,
            ));
        }
        let rhs_raw = &body[arrow + 2..];
        let rhs = rhs_raw.trim();
        let rhs_pad = rhs_raw.chars().count() - rhs_raw.trim_start().chars().count();
        let rhs_pos = Pos {
            line: lineno,
            col: (colon + 1 + arrow + 2 + rhs_pad) as u32 + 1,
        };
        return Ok(Some(Directive::Sigma {
            k,
            target: target.to_string(),
            target_pos,
            rhs: rhs.to_string(),
            rhs_pos,
        }));
    }
    Err(ParseError::new(
        format!("unknown directive `{keyword}`"),
        lineno,
        1,
    ))
}

/// Parses a presentation file into a validated algebra.
pub fn parse_presentation(text: &str) -> Result<AlgebraPresentation, ParseError> {
    let mut directives = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx as u32 + 1;
        if let Some(d) = parse_directive(raw, lineno)? {
            directives.push((d, lineno));
        }
    }

    // First pass: declarations.
    let mut name: Option<(String, u32)> = None;
    let mut coeff_names: Option<(Vec<String>, u32)> = None;
    let mut vars: Option<(Vec<String>, u32)> = None;
    for (d, lineno) in &directives {
        match d {
            Directive::Algebra { name: n } => {
                if name.is_some() {
                    return Err(ParseError::new("duplicate `algebra` line", *lineno, 1));
                }
                name = Some((n.clone(), *lineno));
            }
            Directive::CoeffsField => {
                if coeff_names.is_some() {
                    return Err(ParseError::new("duplicate `coeffs` line", *lineno, 1));
                }
                coeff_names = Some((Vec::new(), *lineno));
            }
            Directive::CoeffsLaurent { names } => {
                if coeff_names.is_some() {
                    return Err(ParseError::new("duplicate `coeffs` line", *lineno, 1));
                }
                coeff_names = Some((names.clone(), *lineno));
            }
            Directive::Vars { names } => {
                if vars.is_some() {
                    return Err(ParseError::new("duplicate `vars` line", *lineno, 1));
                }
                vars = Some((names.clone(), *lineno));
            }
            _ => {}
        }
    }
    let (name, _) = name.ok_or_else(|| ParseError::new("missing `algebra NAME` line", 1, 1))?;
    let (vars, vars_line) = vars.ok_or_else(|| ParseError::new("missing `vars` line", 1, 1))?;
    if vars.is_empty() {
        return Err(ParseError::new("at least one variable is required", vars_line, 1));
    }
    {
        let mut seen = std::collections::BTreeSet::new();
        for v in &vars {
            if !seen.insert(v.clone()) {
                return Err(ParseError::new(
                    format!("variable `{v}` declared twice"),
                    vars_line,
                    1,
                ));
            }
        }
    }
    let coeff_names = coeff_names.map(|(n, _)| n).unwrap_or_default();
    for z in &coeff_names {
        if vars.contains(z) {
            return Err(ParseError::new(
                format!("`{z}` is both a variable and a coefficient name"),
                vars_line,
                1,
            ));
        }
    }
    let s = vars.len();
    let t = coeff_names.len();
    let scope = CoeffScope::new(coeff_names.clone());
    let domain = if t == 0 {
        CoefficientDomain::field()
    } else {
        CoefficientDomain::laurent(coeff_names.clone())
    };

    // Second pass: q units and automorphisms (the tail-free skeleton).
    let mut q: BTreeMap<(usize, usize), LaurentCoefficient> = BTreeMap::new();
    let mut sigma_scales: Vec<Vec<Scalar>> = vec![vec![Scalar::one(); t]; s];
    for (d, lineno) in &directives {
        match d {
            Directive::QUnit { j, i, rhs, rhs_pos } => {
                let (j, i) = check_pair("q", *j, *i, s, *lineno)?;
                let parsed = expr::parse_expr(rhs, rhs_pos.line, rhs_pos.col)?;
                let value = expr::eval_coefficient(&parsed, &scope)?;
                if !value.is_unit() {
                    return Err(ParseError::new(
                        format!("non-unit commutation coefficient q[{},{}]", j + 1, i + 1),
                        rhs_pos.line,
                        rhs_pos.col,
                    ));
                }
                if q.insert((j, i), value).is_some() {
                    return Err(ParseError::new(
                        format!("duplicate q[{},{}]", j + 1, i + 1),
                        *lineno,
                        1,
                    ));
                }
            }
            Directive::Sigma {
                k,
                target,
                target_pos,
                rhs,
                rhs_pos,
            } => {
                if *k == 0 || *k > s {
                    return Err(ParseError::new(
                        format!("sigma index {k} is out of range (1..{s})"),
                        *lineno,
                        1,
                    ));
                }
                let Some(zi) = coeff_names.iter().position(|n| n == target) else {
                    return Err(ParseError::new(
                        format!("unknown coefficient name `{target}`"),
                        target_pos.line,
                        target_pos.col,
                    ));
                };
                let parsed = expr::parse_expr(rhs, rhs_pos.line, rhs_pos.col)?;
                let value = expr::eval_coefficient(&parsed, &scope)?;
                // The rule must be scale * target with an invertible scale.
                let scale = value
                    .single_term()
                    .filter(|(e, _)| {
                        e.iter()
                            .enumerate()
                            .all(|(idx, &p)| p == i64::from(idx == zi))
                    })
                    .map(|(_, c)| c.clone())
                    .filter(|c| !c.is_zero())
                    .ok_or_else(|| {
                        ParseError::new(
                            format!("sigma rule must send {target} to a nonzero multiple of {target}"),
                            rhs_pos.line,
                            rhs_pos.col,
                        )
                    })?;
                sigma_scales[*k - 1][zi] = scale;
            }
            _ => {}
        }
    }
    // Unspecified commutation units default to 1.
    for j in 1..s {
        for i in 0..j {
            q.entry((j, i)).or_insert_with(|| LaurentCoefficient::one(t));
        }
    }
    let sigma: Vec<DiagonalAutomorphism> = sigma_scales
        .into_iter()
        .map(|scales| {
            DiagonalAutomorphism::new(scales).expect("scales were checked nonzero")
        })
        .collect();
    let skeleton = AlgebraPresentation::new(
        name.clone(),
        vars.clone(),
        domain.clone(),
        q.clone(),
        sigma.clone(),
        BTreeMap::new(),
    )
    .map_err(|e| ParseError::new(format!("invalid presentation: {e}"), 1, 1))?;

    // Third pass: relation tails, normalized against the skeleton.
    let mut tails: BTreeMap<(usize, usize), StandardPolynomial> = BTreeMap::new();
    for (d, lineno) in &directives {
        if let Directive::Rel { j, i, rhs, rhs_pos } = d {
            let (j, i) = check_pair("rel", *j, *i, s, *lineno)?;
            let parsed = expr::parse_expr(rhs, rhs_pos.line, rhs_pos.col)?;
            let value = expr::eval_polynomial(&parsed, &skeleton)?;
            if tails.insert((j, i), value).is_some() {
                return Err(ParseError::new(
                    format!("duplicate rel[{},{}]", j + 1, i + 1),
                    *lineno,
                    1,
                ));
            }
        }
    }
    AlgebraPresentation::new(name, vars, domain, q, sigma, tails)
        .map_err(|e| ParseError::new(format!("invalid presentation: {e}"), 1, 1))
}

/// Validates a 1-based `(j, i)` pair with `j > i` and converts to 0-based.
fn check_pair(
    what: &str,
    j: usize,
    i: usize,
    s: usize,
    lineno: u32,
) -> Result<(usize, usize), ParseError> {
    if j <= i {
        return Err(ParseError::new(
            format!("{what}[{j},{i}] requires j>i"),
            lineno,
            1,
        ));
    }
    if i == 0 || j > s {
        return Err(ParseError::new(
            format!("{what}[{j},{i}] is out of range (indices are 1..{s})"),
            lineno,
            1,
        ));
    }
    Ok((j - 1, i - 1))
}

/// Renders a presentation as a file that parses back to an equal value.
pub fn serialize_presentation(a: &AlgebraPresentation) -> String {
    let mut out = String::new();
    let vars: Vec<&str> = a.var_names().iter().map(String::as_str).collect();
    let coeffs: Vec<&str> = a.domain().var_names().iter().map(String::as_str).collect();
    out.push_str(&format!("algebra {}\n", a.name()));
    if a.coeff_rank() == 0 {
        out.push_str("coeffs field q\n");
    } else {
        out.push_str(&format!("coeffs laurent q {}\n", coeffs.join(" ")));
    }
    out.push_str(&format!("vars {}\n", vars.join(" ")));
    let s = a.num_vars();
    for j in 1..s {
        for i in 0..j {
            let unit = a.q_unit(j, i);
            out.push_str(&format!(
                "q[{},{}] = {}\n",
                j + 1,
                i + 1,
                unit.format_with(&coeffs)
            ));
        }
    }
    for k in 0..s {
        let auto = a.sigma(k);
        for (zi, scale) in auto.scale().iter().enumerate() {
            if scale.is_one() {
                continue;
            }
            let scale_str = scale.to_string();
            let needs_parens = scale_str.contains(' ');
            let rendered = if needs_parens {
                format!("({scale_str})")
            } else {
                scale_str
            };
            out.push_str(&format!(
                "sigma[{}]: {} -> {}*{}\n",
                k + 1,
                coeffs[zi],
                rendered,
                coeffs[zi]
            ));
        }
    }
    for ((j, i), tail) in a.tails() {
        out.push_str(&format!(
            "rel[{},{}] = {}\n",
            j + 1,
            i + 1,
            tail.format_with(&vars, &coeffs)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use qpbw_core::catalog;

    #[test]
    fn parses_the_quantized_weyl_file() {
        let text = "algebra weyl\ncoeffs field q\nvars x1 x2\nq[2,1] = q\nrel[2,1] = 1\n";
        let parsed = parse_presentation(text).unwrap();
        let built = catalog::make_quantized_weyl(Scalar::q()).unwrap();
        assert_eq!(parsed, built);
    }

    #[test]
    fn defaults_give_a_commutative_ring() {
        let a = parse_presentation("algebra plain\nvars x y z\n").unwrap();
        assert_eq!(a.num_vars(), 3);
        assert!(!a.has_tails());
        for j in 1..3 {
            for i in 0..j {
                assert!(a.q_unit(j, i).is_one());
            }
        }
    }

    #[test]
    fn rejects_non_unit_q() {
        let text = "algebra bad\nvars x1 x2\nq[2,1] = 0\n";
        let err = parse_presentation(text).unwrap_err();
        assert!(err.message.contains("non-unit"), "{err}");
        assert_eq!(err.line, 3);
    }

    #[test]
    fn rejects_wrong_index_order() {
        let text = "algebra bad\nvars x1 x2\nrel[1,2] = 1\n";
        let err = parse_presentation(text).unwrap_err();
        assert!(err.message.contains("requires j>i"), "{err}");
    }

    #[test]
    fn positions_point_into_the_document() {
        let text = "algebra bad\nvars x1 x2\nq[2,1] = q +* 1\n";
        let err = parse_presentation(text).unwrap_err();
        assert_eq!((err.line, err.col), (3, 13));
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# header\nalgebra c\n\nvars x1 x2  # two variables\nq[2,1] = q # unit\n";
        let a = parse_presentation(text).unwrap();
        assert_eq!(a.name(), "c");
        assert_eq!(a.q_unit(1, 0).as_scalar().unwrap(), Scalar::q());
    }

    #[test]
    fn sigma_rules_must_scale_their_target() {
        let good = "algebra g\ncoeffs laurent q K\nvars F E\nsigma[1]: K -> q^2*K\n";
        let a = parse_presentation(good).unwrap();
        assert_eq!(a.sigma(0).scale()[0], Scalar::q_pow(2));
        assert_eq!(a.sigma(1).scale()[0], Scalar::one());

        let bad = "algebra g\ncoeffs laurent q K\nvars F E\nsigma[1]: K -> q^2*K + 1\n";
        let err = parse_presentation(bad).unwrap_err();
        assert!(err.message.contains("multiple"), "{err}");
    }

    #[test]
    fn catalog_entries_round_trip() {
        for entry in catalog::entries() {
            let text = serialize_presentation(&entry.algebra);
            let reparsed = parse_presentation(&text)
                .unwrap_or_else(|e| panic!("{}: {e}\n{text}", entry.name));
            assert_eq!(reparsed, entry.algebra, "{}\n{text}", entry.name);
        }
    }

    #[test]
    fn duplicate_directives_are_rejected() {
        let text = "algebra a\nvars x1 x2\nq[2,1] = q\nq[2,1] = q\n";
        let err = parse_presentation(text).unwrap_err();
        assert!(err.message.contains("duplicate"), "{err}");
    }
}


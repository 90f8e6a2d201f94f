//! Re-filtering a presentation through a single positive weight vector.
//!
//! Given a presentation whose tails are lower-order under *some* admissible
//! order, this module finds one strictly positive weight vector `w` doing
//! the same job: every tail term of `rel[j,i]` must have `w`-degree
//! strictly below `w_i + w_j`. Collecting the exponent differences
//! `γ - ε_i - ε_j` into a finite set `C`, that condition reads
//! `⟨w, α⟩ < 0` for all `α ∈ C`, which is solved exactly as a rational
//! linear program. The weight vector induces an `ℕ`-filtration by
//! `w`-degree whose associated graded algebra drops all tails, leaving an
//! iterated Ore extension presented by pure q-commutation relations.

use crate::orders::{dot, ExponentVector, OrderError, WeightVector};
use crate::pbw::{AlgebraPresentation, StandardPolynomial};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Errors raised while searching for or applying a weight vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RefilterError {
    /// No strictly positive weight vector bounds the tails. When the solver
    /// can extract one, a nonnegative combination of the constraints that
    /// sums to a contradiction is attached.
    Infeasible {
        certificate: Option<InfeasibilityCertificate>,
    },
    /// An operation that needs a nonzero polynomial received zero.
    ZeroPolynomial,
    /// A certificate failed re-verification against the presentation.
    CertificateRejected(String),
    /// The solved weights do not fit in the integer type of weight vectors.
    WeightOverflow,
    /// Vector dimensions disagree.
    Dimension(OrderError),
}

impl fmt::Display for RefilterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RefilterError::Infeasible { certificate } => {
                write!(f, "no positive weight vector bounds the tails")?;
                if certificate.is_some() {
                    write!(f, " (an infeasibility certificate is attached)")?;
                }
                Ok(())
            }
            RefilterError::ZeroPolynomial => write!(f, "the zero polynomial has no degree"),
            RefilterError::CertificateRejected(msg) => {
                write!(f, "weight certificate rejected: {msg}")
            }
            RefilterError::WeightOverflow => {
                write!(f, "solved weights exceed the integer weight range")
            }
            RefilterError::Dimension(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RefilterError {}

impl From<OrderError> for RefilterError {
    fn from(e: OrderError) -> Self {
        RefilterError::Dimension(e)
    }
}

/// Where one C-set vector came from: term `x^exponent` of `rel[j,i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailTermOrigin {
    pub j: usize,
    pub i: usize,
    pub exponent: ExponentVector,
}

/// One vector `γ - ε_i - ε_j` of the C-set together with every tail term
/// that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CSetEntry {
    pub vector: Vec<i64>,
    pub origins: Vec<TailTermOrigin>,
}

/// The finite set of exponent differences a weight vector must push below
/// zero. The zero vector is excluded by construction: a tail term with
/// `γ = ε_i + ε_j` can never drop and is caught by [`associated_graded`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CSet {
    num_vars: usize,
    entries: Vec<CSetEntry>,
}

impl CSet {
    pub fn new(num_vars: usize, entries: Vec<CSetEntry>) -> Self {
        CSet { num_vars, entries }
    }

    /// A C-set built from raw vectors, without provenance (for testing and
    /// oracle comparisons).
    pub fn from_vectors(num_vars: usize, vectors: Vec<Vec<i64>>) -> Self {
        let entries = vectors
            .into_iter()
            .map(|vector| CSetEntry {
                vector,
                origins: Vec::new(),
            })
            .collect();
        CSet { num_vars, entries }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn entries(&self) -> &[CSetEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }
}

/// Collects `C = { γ - ε_i - ε_j : γ ∈ support(rel[j,i]), j > i } ∖ {0}`,
/// each vector tagged with every tail term producing it.
pub fn collect_c_set(a: &AlgebraPresentation) -> CSet {
    let s = a.num_vars();
    let mut map: BTreeMap<Vec<i64>, Vec<TailTermOrigin>> = BTreeMap::new();
    for (&(j, i), p) in a.tails() {
        for (gamma, _) in p.terms() {
            let mut v = gamma.entries().to_vec();
            v[i] -= 1;
            v[j] -= 1;
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            map.entry(v).or_default().push(TailTermOrigin {
                j,
                i,
                exponent: gamma.clone(),
            });
        }
    }
    let entries = map
        .into_iter()
        .map(|(vector, origins)| CSetEntry { vector, origins })
        .collect();
    CSet {
        num_vars: s,
        entries,
    }
}

/// A strictly positive integer weight vector together with the values
/// `⟨w, α⟩` (all `≤ -1`) over the C-set it was solved against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightCertificate {
    pub weights: WeightVector,
    /// `⟨w, α⟩` per C-set entry, in the C-set's order.
    pub margins: Vec<i64>,
}

/// A nonnegative, nonzero combination of C-set constraints proving that no
/// positive weight vector exists: `Σ y_α · α ≥ 0` componentwise forces
/// `Σ y_α ⟨w, α⟩ ≥ 0` for every `w ≥ 0`, while feasibility would demand it
/// be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfeasibilityCertificate {
    /// One nonnegative integer multiplier per C-set entry.
    pub combination: Vec<BigInt>,
}

impl InfeasibilityCertificate {
    /// Exact re-check: multipliers nonnegative, not all zero, and the
    /// combined vector nonnegative in every coordinate.
    pub fn validates(&self, c: &CSet) -> bool {
        if self.combination.len() != c.entries.len() {
            return false;
        }
        if self.combination.iter().any(|y| y.is_negative()) {
            return false;
        }
        if self.combination.iter().all(|y| y.is_zero()) {
            return false;
        }
        let mut sum = vec![BigInt::zero(); c.num_vars];
        for (y, entry) in self.combination.iter().zip(&c.entries) {
            if entry.vector.len() != c.num_vars {
                return false;
            }
            for (acc, &a) in sum.iter_mut().zip(&entry.vector) {
                *acc += y * BigInt::from(a);
            }
        }
        sum.iter().all(|v| !v.is_negative())
    }
}

/// Solves for `w ∈ ℤ^s`, `w_i ≥ 1`, with `⟨w, α⟩ ≤ -1` for every `α ∈ C`,
/// minimizing `Σ w_i` before clearing denominators. Infeasibility comes
/// back as an error carrying a Farkas-style certificate when the one
/// extracted from the solver survives re-verification.
pub fn find_weight_vector(c: &CSet) -> Result<WeightCertificate, RefilterError> {
    let n = c.num_vars;
    if c.entries.is_empty() {
        return Ok(WeightCertificate {
            weights: WeightVector::uniform(n),
            margins: Vec::new(),
        });
    }
    // Substitute u = w - 1 ≥ 0:  ⟨α, u⟩ ≤ -1 - ⟨α, 1⟩.
    let a: Vec<Vec<BigRational>> = c
        .entries
        .iter()
        .map(|e| e.vector.iter().map(|&x| rat(x)).collect())
        .collect();
    let b: Vec<BigRational> = c
        .entries
        .iter()
        .map(|e| rat(-1 - e.vector.iter().sum::<i64>()))
        .collect();
    match simplex::solve_min_sum(&a, &b) {
        simplex::LpOutcome::Feasible(u) => {
            let w_rat: Vec<BigRational> = u.iter().map(|x| x + BigRational::one()).collect();
            let weights = clear_denominators(&w_rat).ok_or(RefilterError::WeightOverflow)?;
            let weights = WeightVector::new(weights).map_err(RefilterError::Dimension)?;
            let mut margins = Vec::with_capacity(c.entries.len());
            for entry in &c.entries {
                let m = dot(weights.entries(), &entry.vector)?;
                if m > -1 {
                    return Err(RefilterError::CertificateRejected(format!(
                        "solved weights leave margin {m} on {:?}",
                        entry.vector
                    )));
                }
                margins.push(m);
            }
            Ok(WeightCertificate { weights, margins })
        }
        simplex::LpOutcome::Infeasible(y) => {
            let certificate = integer_combination(&y).and_then(|combination| {
                let cert = InfeasibilityCertificate { combination };
                if cert.validates(c) {
                    Some(cert)
                } else {
                    None
                }
            });
            Err(RefilterError::Infeasible { certificate })
        }
    }
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Scales strictly positive rationals to the smallest proportional vector
/// of positive integers; `None` if an entry overflows `i64`.
fn clear_denominators(w: &[BigRational]) -> Option<Vec<i64>> {
    let mut lcm = BigInt::one();
    for x in w {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = w.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    ints.iter().map(|v| (v / &g).to_i64()).collect()
}

/// Scales nonnegative rationals to coprime nonnegative integers.
fn integer_combination(y: &[BigRational]) -> Option<Vec<BigInt>> {
    if y.is_empty() {
        return None;
    }
    let mut lcm = BigInt::one();
    for x in y {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = y.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if g.is_zero() {
        return Some(ints);
    }
    Some(ints.iter().map(|v| v / &g).collect())
}

/// Re-checks raw weights against a C-set with exact integer arithmetic:
/// every weight `≥ 1`, every `⟨w, α⟩ < 0`.
pub fn verify_weights(c: &CSet, weights: &[i64]) -> bool {
    if weights.len() != c.num_vars || weights.iter().any(|&w| w < 1) {
        return false;
    }
    c.entries.iter().all(|entry| {
        dot(weights, &entry.vector).map(|m| m < 0).unwrap_or(false)
    })
}

/// Re-checks a full certificate: the weights pass [`verify_weights`] and
/// the recorded margins match exact recomputation.
pub fn verify_certificate(c: &CSet, cert: &WeightCertificate) -> bool {
    if !verify_weights(c, cert.weights.entries()) {
        return false;
    }
    if cert.margins.len() != c.entries.len() {
        return false;
    }
    c.entries
        .iter()
        .zip(&cert.margins)
        .all(|(entry, &m)| dot(cert.weights.entries(), &entry.vector) == Ok(m))
}

/// `max ⟨w, α⟩` over the support of a nonzero polynomial.
pub fn filtration_degree(
    w: &WeightVector,
    f: &StandardPolynomial,
) -> Result<i64, RefilterError> {
    let mut best: Option<i64> = None;
    for (e, _) in f.terms() {
        let d = w.degree(e)?;
        best = Some(best.map_or(d, |b| b.max(d)));
    }
    best.ok_or(RefilterError::ZeroPolynomial)
}

/// The sum of the terms of `f` of maximal `w`-degree.
pub fn leading_form(
    w: &WeightVector,
    f: &StandardPolynomial,
) -> Result<StandardPolynomial, RefilterError> {
    let top = filtration_degree(w, f)?;
    let mut out = StandardPolynomial::zero(f.num_vars(), f.coeff_rank());
    for (e, c) in f.terms() {
        if w.degree(e)? == top {
            out = out.add(
                &StandardPolynomial::monomial(e.clone(), c.clone())
                    .expect("support exponents are nonnegative"),
            );
        }
    }
    Ok(out)
}

/// The associated graded algebra of the `w`-filtration: the same
/// generators (renamed `y_i`), q-units, and automorphisms, with every tail
/// dropped, plus the degree `w_i` assigned to each generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPresentation {
    pub algebra: AlgebraPresentation,
    /// `degrees[i] = w_i`, the filtration degree of `y_i`.
    pub degrees: Vec<i64>,
}

/// Drops the tails after independently re-checking, term by term, that the
/// certificate really does push every tail strictly below its relation's
/// degree `w_i + w_j`. This recheck is deliberately stronger than
/// [`verify_certificate`]: a tail term with `γ = ε_i + ε_j` never enters
/// the C-set, and is rejected here.
pub fn associated_graded(
    a: &AlgebraPresentation,
    cert: &WeightCertificate,
) -> Result<GradedPresentation, RefilterError> {
    let s = a.num_vars();
    let w = cert.weights.entries();
    if w.len() != s {
        return Err(RefilterError::Dimension(OrderError::DimensionMismatch {
            expected: s,
            found: w.len(),
        }));
    }
    for (&(j, i), p) in a.tails() {
        let bound = w[i] + w[j];
        for (gamma, _) in p.terms() {
            let d = dot(w, gamma.entries())?;
            if d >= bound {
                return Err(RefilterError::CertificateRejected(format!(
                    "term {gamma} of rel[{},{}] has weight {d}, not below {bound}",
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    let vars = (1..=s).map(|i| format!("y{i}")).collect();
    let algebra = a.drop_tails(format!("gr_{}", a.name()), vars);
    Ok(GradedPresentation {
        algebra,
        degrees: w.to_vec(),
    })
}

/// Everything the re-filtering of one presentation produces.
#[derive(Debug, Clone)]
pub struct RefilterOutcome {
    pub c_set: CSet,
    pub certificate: WeightCertificate,
    pub graded: GradedPresentation,
}

/// Composes [`collect_c_set`] → [`find_weight_vector`] →
/// [`associated_graded`].
pub fn refilter_pipeline(a: &AlgebraPresentation) -> Result<RefilterOutcome, RefilterError> {
    let c_set = collect_c_set(a);
    let certificate = find_weight_vector(&c_set)?;
    let graded = associated_graded(a, &certificate)?;
    Ok(RefilterOutcome {
        c_set,
        certificate,
        graded,
    })
}

/// Exact two-phase primal simplex over `BigRational`, Bland's rule.
mod simplex {
    use alloc::vec;
    use alloc::vec::Vec;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    pub(crate) enum LpOutcome {
        /// An optimal solution of `min Σx : Ax ≤ b, x ≥ 0`.
        Feasible(Vec<BigRational>),
        /// Farkas multipliers `y ≥ 0` with `yᵀA ≥ 0` and `yᵀb < 0`.
        Infeasible(Vec<BigRational>),
    }

    struct Tableau {
        /// Constraint rows; each holds `ncols` entries plus the RHS.
        rows: Vec<Vec<BigRational>>,
        /// Reduced costs plus, in the last slot, minus the objective value.
        obj: Vec<BigRational>,
        /// Basic column of each row.
        basis: Vec<usize>,
        ncols: usize,
        /// Columns allowed to enter the basis.
        allowed: Vec<bool>,
    }

    impl Tableau {
        fn pivot(&mut self, r: usize, c: usize) {
            let p = self.rows[r][c].clone();
            for v in &mut self.rows[r] {
                *v = &*v / &p;
            }
            let pivot_row = self.rows[r].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i == r {
                    continue;
                }
                let f = row[c].clone();
                if f.is_zero() {
                    continue;
                }
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
            let f = self.obj[c].clone();
            if !f.is_zero() {
                for (v, pv) in self.obj.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
            self.basis[r] = c;
        }

        /// Recomputes the reduced-cost row for the given column costs.
        fn set_costs(&mut self, costs: &[BigRational]) {
            let mut obj = costs.to_vec();
            obj.push(BigRational::zero());
            for (r, row) in self.rows.iter().enumerate() {
                let cb = costs[self.basis[r]].clone();
                if cb.is_zero() {
                    continue;
                }
                for (v, rv) in obj.iter_mut().zip(row) {
                    *v -= &cb * rv;
                }
            }
            self.obj = obj;
        }

        /// Runs Bland-rule simplex to optimality; the objective is assumed
        /// bounded below (both phases minimize sums of nonnegatives).
        fn optimize(&mut self) {
            loop {
                // Bland: the lowest-index column with a negative reduced cost.
                let entering = (0..self.ncols)
                    .find(|&j| self.allowed[j] && self.obj[j] < BigRational::zero());
                let Some(c) = entering else {
                    return;
                };
                // Ratio test; ties leave the lowest-index basic variable.
                let mut leave: Option<(usize, BigRational)> = None;
                for (r, row) in self.rows.iter().enumerate() {
                    if row[c] <= BigRational::zero() {
                        continue;
                    }
                    let ratio = &row[self.ncols] / &row[c];
                    leave = match leave {
                        None => Some((r, ratio)),
                        Some((br, best)) => {
                            if ratio < best
                                || (ratio == best && self.basis[r] < self.basis[br])
                            {
                                Some((r, ratio))
                            } else {
                                Some((br, best))
                            }
                        }
                    };
                }
                let (r, _) = leave.expect("sum of nonnegative variables is bounded below");
                self.pivot(r, c);
            }
        }

        fn objective(&self) -> BigRational {
            -self.obj[self.ncols].clone()
        }
    }

    /// `min Σx` subject to `Ax ≤ b`, `x ≥ 0`, in exact arithmetic.
    pub(crate) fn solve_min_sum(a: &[Vec<BigRational>], b: &[BigRational]) -> LpOutcome {
        let m = a.len();
        let n = a.first().map_or(0, Vec::len);
        // Columns: x (n), one slack per row (m), one artificial per row
        // whose RHS is negative.
        let mut art_col = vec![None; m];
        let mut ncols = n + m;
        for (r, beta) in b.iter().enumerate() {
            if *beta < BigRational::zero() {
                art_col[r] = Some(ncols);
                ncols += 1;
            }
        }
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        for r in 0..m {
            // Negative rows are negated so the RHS starts nonnegative.
            let neg = art_col[r].is_some();
            let sign = if neg { -BigRational::one() } else { BigRational::one() };
            let mut row = vec![BigRational::zero(); ncols + 1];
            for j in 0..n {
                row[j] = &sign * &a[r][j];
            }
            row[n + r] = sign.clone();
            row[ncols] = &sign * &b[r];
            if let Some(t) = art_col[r] {
                row[t] = BigRational::one();
                basis.push(t);
            } else {
                basis.push(n + r);
            }
            rows.push(row);
        }
        let mut t = Tableau {
            rows,
            obj: vec![BigRational::zero(); ncols + 1],
            basis,
            ncols,
            allowed: vec![true; ncols],
        };

        // Phase 1: minimize the sum of the artificial variables.
        let mut phase1 = vec![BigRational::zero(); ncols];
        for col in art_col.iter().flatten() {
            phase1[*col] = BigRational::one();
        }
        t.set_costs(&phase1);
        t.optimize();
        if t.objective() > BigRational::zero() {
            // Farkas multipliers are the reduced costs of the slack columns.
            let y: Vec<BigRational> = (0..m).map(|r| t.obj[n + r].clone()).collect();
            return LpOutcome::Infeasible(y);
        }

        // Drive any artificial stuck in the basis out of it (its value is
        // zero); a row with no other nonzero entry is redundant.
        let mut drop_rows = Vec::new();
        for r in 0..m {
            if art_col.iter().flatten().any(|&col| col == t.basis[r]) {
                let c = (0..n + m).find(|&j| !t.rows[r][j].is_zero());
                match c {
                    Some(c) => t.pivot(r, c),
                    None => drop_rows.push(r),
                }
            }
        }
        for &r in drop_rows.iter().rev() {
            t.rows.remove(r);
            t.basis.remove(r);
        }
        for col in art_col.iter().flatten() {
            t.allowed[*col] = false;
        }

        // Phase 2: minimize Σx over the feasible basis found above.
        let mut phase2 = vec![BigRational::zero(); ncols];
        for c in phase2.iter_mut().take(n) {
            *c = BigRational::one();
        }
        t.set_costs(&phase2);
        t.optimize();

        let mut x = vec![BigRational::zero(); n];
        for (r, &bc) in t.basis.iter().enumerate() {
            if bc < n {
                x[bc] = t.rows[r][t.ncols].clone();
            }
        }
        LpOutcome::Feasible(x)
    }
}

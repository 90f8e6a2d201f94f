//! Algebra presentations with PBW bases and normal-form arithmetic.
//!
//! A presentation consists of generators `x_1, .., x_s` over a Laurent
//! coefficient ring `Λ` (possibly the plain field, `t = 0`), q-commutation
//! units `q_ji`, diagonal automorphisms `σ_k` describing how generators move
//! past coefficients, and lower-order tails `p_ji`:
//!
//! ```text
//! x_j x_i = q_ji x_i x_j + p_ji   (j > i),      x_k a = σ_k(a) x_k   (a ∈ Λ).
//! ```
//!
//! Every element is kept in standard form: a `Λ`-combination of ordered
//! monomials `x_1^{a_1} ··· x_s^{a_s}`. Multiplication pushes generators
//! through the right factor one at a time, rewriting each inversion
//! `x_j x_i` (`j > i`) via the presentation; when every tail is smaller
//! than `x_i x_j` under an admissible order, the rewriting terminates. A
//! configurable step budget converts non-termination into an error instead
//! of a hang.

use crate::orders::{AdmissibleOrder, ExponentVector, OrderError};
use crate::scalars::{DiagonalAutomorphism, LaurentCoefficient, ScalarError};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use rand_core::RngCore;

/// Default number of rewrite steps allowed per monomial product.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// Countdown of rewrite steps for one monomial product.
struct StepCounter {
    left: u64,
    budget: u64,
}

impl StepCounter {
    fn new(budget: u64) -> Self {
        StepCounter {
            left: budget,
            budget,
        }
    }

    fn tick(&mut self) -> Result<(), PbwError> {
        if self.left == 0 {
            return Err(PbwError::StepBudgetExceeded {
                budget: self.budget,
            });
        }
        self.left -= 1;
        Ok(())
    }
}

/// Errors raised by presentation construction and normal-form arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PbwError {
    /// The rewrite step budget was exhausted; the presentation very likely
    /// fails the tail-order condition, so rewriting need not terminate.
    StepBudgetExceeded { budget: u64 },
    /// An operation that needs a nonzero polynomial received zero.
    ZeroPolynomial,
    /// A q-commutation constant is not a unit of the coefficient ring.
    NonUnitCommutation { j: usize, i: usize },
    /// A structural problem in the presentation data.
    InvalidPresentation(String),
    /// Vector or exponent dimensions disagree.
    Dimension(OrderError),
    /// Coefficient arithmetic failed.
    Scalar(ScalarError),
}

impl fmt::Display for PbwError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PbwError::StepBudgetExceeded { budget } => {
                write!(f, "rewriting exceeded the step budget of {budget}")
            }
            PbwError::ZeroPolynomial => write!(f, "the zero polynomial has no degree"),
            PbwError::NonUnitCommutation { j, i } => {
                write!(f, "q[{},{}] must be a unit of the coefficient ring", j + 1, i + 1)
            }
            PbwError::InvalidPresentation(msg) => write!(f, "invalid presentation: {msg}"),
            PbwError::Dimension(e) => write!(f, "{e}"),
            PbwError::Scalar(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for PbwError {}

impl From<OrderError> for PbwError {
    fn from(e: OrderError) -> Self {
        PbwError::Dimension(e)
    }
}

impl From<ScalarError> for PbwError {
    fn from(e: ScalarError) -> Self {
        PbwError::Scalar(e)
    }
}

/// The coefficient domain of a presentation: the field `ℚ(q)` when there
/// are no Laurent variables, otherwise `ℚ(q)[z_1^{±1}, .., z_t^{±1}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientDomain {
    laurent_vars: Vec<String>,
}

impl CoefficientDomain {
    /// The plain field `ℚ(q)`.
    pub fn field() -> Self {
        CoefficientDomain {
            laurent_vars: Vec::new(),
        }
    }

    /// A Laurent polynomial ring over `ℚ(q)` with the given variable names.
    pub fn laurent(vars: Vec<String>) -> Self {
        CoefficientDomain { laurent_vars: vars }
    }

    /// Number of Laurent variables (`0` for the field).
    pub fn rank(&self) -> usize {
        self.laurent_vars.len()
    }

    pub fn is_field(&self) -> bool {
        self.laurent_vars.is_empty()
    }

    pub fn var_names(&self) -> &[String] {
        &self.laurent_vars
    }

    pub fn zero(&self) -> LaurentCoefficient {
        LaurentCoefficient::zero(self.rank())
    }

    pub fn one(&self) -> LaurentCoefficient {
        LaurentCoefficient::one(self.rank())
    }
}

/// A `Λ`-combination of ordered monomials, stored as a map from exponent
/// vectors in `ℕ^s` to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardPolynomial {
    num_vars: usize,
    coeff_rank: usize,
    terms: BTreeMap<ExponentVector, LaurentCoefficient>,
}

impl StandardPolynomial {
    pub fn zero(num_vars: usize, coeff_rank: usize) -> Self {
        StandardPolynomial {
            num_vars,
            coeff_rank,
            terms: BTreeMap::new(),
        }
    }

    /// The single term `c · x^expo`.
    pub fn monomial(
        expo: ExponentVector,
        c: LaurentCoefficient,
    ) -> Result<Self, PbwError> {
        if !expo.is_nonnegative() {
            return Err(PbwError::InvalidPresentation(String::from(
                "monomial exponents must be nonnegative",
            )));
        }
        let mut out = StandardPolynomial::zero(expo.len(), c.nvars());
        if !c.is_zero() {
            out.terms.insert(expo, c);
        }
        Ok(out)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn coeff_rank(&self) -> usize {
        self.coeff_rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &LaurentCoefficient)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, expo: &ExponentVector) -> Option<&LaurentCoefficient> {
        self.terms.get(expo)
    }

    /// The support as a sorted list of exponent vectors.
    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.num_vars, other.num_vars, "mixed variable counts");
        assert_eq!(self.coeff_rank, other.coeff_rank, "mixed coefficient rings");
    }

    pub(crate) fn insert(&mut self, expo: ExponentVector, c: LaurentCoefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&expo) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&expo);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(expo, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        StandardPolynomial {
            num_vars: self.num_vars,
            coeff_rank: self.coeff_rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    /// Left multiplication by a coefficient (`Λ` is commutative, so this is
    /// term-wise).
    pub fn scale(&self, c: &LaurentCoefficient) -> Self {
        let mut out = StandardPolynomial::zero(self.num_vars, self.coeff_rank);
        for (e, a) in &self.terms {
            out.insert(e.clone(), a.mul(c));
        }
        out
    }

    /// Renders with the given variable names in expression syntax; terms in
    /// canonical exponent order.
    pub fn format_with(&self, var_names: &[&str], coeff_names: &[&str]) -> String {
        use alloc::format;
        use alloc::string::ToString;
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mut factors = Vec::new();
            for (i, &k) in e.entries().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = var_names.get(i).copied().unwrap_or("x?");
                if k == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{k}"));
                }
            }
            let monomial = factors.join("*");
            if monomial.is_empty() {
                let cs = c.format_with(coeff_names);
                parts.push(if c.num_terms() > 1 { format!("({cs})") } else { cs });
            } else if c.is_one() {
                parts.push(monomial);
            } else {
                let cs = c.format_with(coeff_names);
                if c.num_terms() > 1 {
                    parts.push(format!("({cs})*{monomial}"));
                } else {
                    parts.push(format!("{cs}*{monomial}"));
                }
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Display for StandardPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use alloc::format;
        let vars: Vec<String> = (1..=self.num_vars).map(|i| format!("x{i}")).collect();
        let coeffs: Vec<String> = (1..=self.coeff_rank).map(|i| format!("z{i}")).collect();
        let v: Vec<&str> = vars.iter().map(String::as_str).collect();
        let c: Vec<&str> = coeffs.iter().map(String::as_str).collect();
        f.write_str(&self.format_with(&v, &c))
    }
}

/// A PBW-type presentation of an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    name: String,
    vars: Vec<String>,
    domain: CoefficientDomain,
    /// q-commutation units, keyed by `(j, i)` with `j > i` (0-based).
    q: BTreeMap<(usize, usize), LaurentCoefficient>,
    /// Per-generator diagonal automorphisms of the coefficient ring.
    sigma: Vec<DiagonalAutomorphism>,
    /// Tails `p_ji`, keyed like `q`; missing entries are zero.
    tails: BTreeMap<(usize, usize), StandardPolynomial>,
}

impl AlgebraPresentation {
    pub fn new(
        name: String,
        vars: Vec<String>,
        domain: CoefficientDomain,
        q: BTreeMap<(usize, usize), LaurentCoefficient>,
        sigma: Vec<DiagonalAutomorphism>,
        tails: BTreeMap<(usize, usize), StandardPolynomial>,
    ) -> Result<Self, PbwError> {
        use alloc::format;
        let s = vars.len();
        let t = domain.rank();
        if s == 0 {
            return Err(PbwError::InvalidPresentation(String::from(
                "a presentation needs at least one generator",
            )));
        }
        for (k, name) in vars.iter().enumerate() {
            if vars[..k].contains(name) {
                return Err(PbwError::InvalidPresentation(format!(
                    "duplicate generator name {name}"
                )));
            }
        }
        if sigma.len() != s {
            return Err(PbwError::InvalidPresentation(format!(
                "expected {s} automorphisms, found {}",
                sigma.len()
            )));
        }
        for a in &sigma {
            if a.nvars() != t {
                return Err(PbwError::InvalidPresentation(format!(
                    "automorphism acts on {} Laurent variables, ring has {t}",
                    a.nvars()
                )));
            }
        }
        for (&(j, i), c) in &q {
            if j <= i || j >= s {
                return Err(PbwError::InvalidPresentation(format!(
                    "commutation constant q[{},{}] needs s >= j > i >= 1",
                    j + 1,
                    i + 1
                )));
            }
            if c.nvars() != t {
                return Err(PbwError::InvalidPresentation(format!(
                    "q[{},{}] lives in a coefficient ring of rank {}, expected {t}",
                    j + 1,
                    i + 1,
                    c.nvars()
                )));
            }
            if !c.is_unit() {
                return Err(PbwError::NonUnitCommutation { j, i });
            }
        }
        for j in 1..s {
            for i in 0..j {
                if !q.contains_key(&(j, i)) {
                    return Err(PbwError::InvalidPresentation(format!(
                        "missing commutation constant q[{},{}]",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        for (&(j, i), p) in &tails {
            if j <= i || j >= s {
                return Err(PbwError::InvalidPresentation(format!(
                    "tail rel[{},{}] needs s >= j > i >= 1",
                    j + 1,
                    i + 1
                )));
            }
            if p.num_vars() != s || p.coeff_rank() != t {
                return Err(PbwError::InvalidPresentation(format!(
                    "tail rel[{},{}] has mismatched dimensions",
                    j + 1,
                    i + 1
                )));
            }
        }
        let tails = tails.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        Ok(AlgebraPresentation {
            name,
            vars,
            domain,
            q,
            sigma,
            tails,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn domain(&self) -> &CoefficientDomain {
        &self.domain
    }

    pub fn coeff_rank(&self) -> usize {
        self.domain.rank()
    }

    /// The unit `q_ji` for `j > i` (0-based indices).
    pub fn q_unit(&self, j: usize, i: usize) -> &LaurentCoefficient {
        &self.q[&(j, i)]
    }

    pub fn sigma(&self, k: usize) -> &DiagonalAutomorphism {
        &self.sigma[k]
    }

    pub fn tail(&self, j: usize, i: usize) -> Option<&StandardPolynomial> {
        self.tails.get(&(j, i))
    }

    pub fn tails(&self) -> impl Iterator<Item = (&(usize, usize), &StandardPolynomial)> {
        self.tails.iter()
    }

    pub fn has_tails(&self) -> bool {
        !self.tails.is_empty()
    }

    /// A copy with all tails removed and everything else intact.
    pub fn drop_tails(&self, name: String, vars: Vec<String>) -> Self {
        AlgebraPresentation {
            name,
            vars,
            domain: self.domain.clone(),
            q: self.q.clone(),
            sigma: self.sigma.clone(),
            tails: BTreeMap::new(),
        }
    }

    pub fn zero(&self) -> StandardPolynomial {
        StandardPolynomial::zero(self.num_vars(), self.coeff_rank())
    }

    pub fn one(&self) -> StandardPolynomial {
        self.scalar_poly(self.domain.one())
    }

    pub fn scalar_poly(&self, c: LaurentCoefficient) -> StandardPolynomial {
        StandardPolynomial::monomial(ExponentVector::zero(self.num_vars()), c)
            .expect("zero exponent is valid")
    }

    /// The generator `x_i` (0-based).
    pub fn var(&self, i: usize) -> StandardPolynomial {
        StandardPolynomial::monomial(
            ExponentVector::unit(self.num_vars(), i),
            self.domain.one(),
        )
        .expect("unit exponent is valid")
    }

    pub fn monomial(
        &self,
        expo: &[i64],
        c: LaurentCoefficient,
    ) -> Result<StandardPolynomial, PbwError> {
        if expo.len() != self.num_vars() {
            return Err(PbwError::Dimension(OrderError::DimensionMismatch {
                expected: self.num_vars(),
                found: expo.len(),
            }));
        }
        StandardPolynomial::monomial(ExponentVector::new(expo.to_vec()), c)
    }

    /// Normal-form product with the default step budget.
    pub fn multiply(
        &self,
        f: &StandardPolynomial,
        g: &StandardPolynomial,
    ) -> Result<StandardPolynomial, PbwError> {
        self.multiply_with_budget(f, g, DEFAULT_STEP_BUDGET)
    }

    /// Normal-form product; `budget` bounds the rewrite steps spent on each
    /// monomial-by-monomial product.
    pub fn multiply_with_budget(
        &self,
        f: &StandardPolynomial,
        g: &StandardPolynomial,
        budget: u64,
    ) -> Result<StandardPolynomial, PbwError> {
        f.check_compatible(g);
        assert_eq!(f.num_vars(), self.num_vars(), "foreign polynomial");
        let mut out = self.zero();
        for (alpha, ca) in &f.terms {
            for (beta, cb) in &g.terms {
                let mut steps = StepCounter::new(budget);
                let mut h = StandardPolynomial::monomial(beta.clone(), cb.clone())?;
                // x^alpha is applied innermost-first: x_s, then x_{s-1}, ..
                for k in (0..self.num_vars()).rev() {
                    for _ in 0..alpha.get(k) {
                        h = self.left_mul_var(k, &h, &mut steps)?;
                    }
                }
                out = out.add(&h.scale(ca));
            }
        }
        Ok(out)
    }

    /// `x_k · h` in normal form.
    fn left_mul_var(
        &self,
        k: usize,
        h: &StandardPolynomial,
        steps: &mut StepCounter,
    ) -> Result<StandardPolynomial, PbwError> {
        let mut out = self.zero();
        for (gamma, c) in &h.terms {
            let moved = self.sigma[k].apply(c)?;
            let prod = self.var_times_monomial(k, gamma, steps)?;
            out = out.add(&prod.scale(&moved));
        }
        Ok(out)
    }

    /// `x_k · x^gamma` in normal form (coefficient-free input).
    fn var_times_monomial(
        &self,
        k: usize,
        gamma: &ExponentVector,
        steps: &mut StepCounter,
    ) -> Result<StandardPolynomial, PbwError> {
        steps.tick()?;
        // the first variable occurring in gamma
        let first = gamma.entries().iter().position(|&e| e > 0);
        match first {
            Some(i) if k > i => {
                // x_k x_i = q_ki x_i x_k + p_ki, applied to gamma = e_i + rest
                let rest = gamma.drop(i);
                let inner = self.var_times_monomial(k, &rest, steps)?;
                let main = self
                    .left_mul_var(i, &inner, steps)?
                    .scale(self.q_unit(k, i));
                let out = match self.tail(k, i) {
                    Some(p) => {
                        let rest_poly =
                            StandardPolynomial::monomial(rest, self.domain.one())?;
                        main.add(&self.mul_budgeted(p, &rest_poly, steps)?)
                    }
                    None => main,
                };
                Ok(out)
            }
            _ => {
                // x_k already stands left of every variable in gamma
                StandardPolynomial::monomial(gamma.bump(k), self.domain.one())
            }
        }
    }

    /// Product of two polynomials sharing one step counter (used while a
    /// rewrite is already in flight).
    fn mul_budgeted(
        &self,
        f: &StandardPolynomial,
        g: &StandardPolynomial,
        steps: &mut StepCounter,
    ) -> Result<StandardPolynomial, PbwError> {
        let mut out = self.zero();
        for (alpha, ca) in &f.terms {
            for (beta, cb) in &g.terms {
                let mut h = StandardPolynomial::monomial(beta.clone(), cb.clone())?;
                for k in (0..self.num_vars()).rev() {
                    for _ in 0..alpha.get(k) {
                        h = self.left_mul_var(k, &h, steps)?;
                    }
                }
                out = out.add(&h.scale(ca));
            }
        }
        Ok(out)
    }

    /// `f^e` by repeated multiplication.
    pub fn pow(&self, f: &StandardPolynomial, e: u32) -> Result<StandardPolynomial, PbwError> {
        let mut out = self.one();
        for _ in 0..e {
            out = self.multiply(&out, f)?;
        }
        Ok(out)
    }

    /// Checks that every tail is strictly smaller than its leading monomial
    /// `x_i x_j` under the given order.
    pub fn check_tail_order(
        &self,
        order: &AdmissibleOrder,
    ) -> Result<TailOrderReport, PbwError> {
        let s = self.num_vars();
        let mut violations = Vec::new();
        for (&(j, i), p) in &self.tails {
            let bound = ExponentVector::unit(s, i).add(&ExponentVector::unit(s, j))?;
            for (gamma, _) in p.terms() {
                if order.compare(gamma, &bound)? != Ordering::Less {
                    violations.push(TailViolation {
                        j,
                        i,
                        exponent: gamma.clone(),
                    });
                }
            }
        }
        Ok(TailOrderReport {
            order: order.clone(),
            zero_minimal: order.is_zero_minimal(s)?,
            violations,
        })
    }

    /// Verifies `(x_k·x_j)·x_i = x_k·(x_j·x_i)` on every generator triple
    /// `k > j > i`, then on `trials` random polynomial triples drawn from a
    /// fixed seed. Associativity of the normal-form product is equivalent to
    /// the presentation's rewriting system being confluent, so a
    /// counterexample here means the relations are inconsistent.
    pub fn associativity_check(&self, trials: usize) -> Result<AssociativityReport, PbwError> {
        use rand_chacha::rand_core::SeedableRng;
        let s = self.num_vars();
        let mut generator_triples = 0usize;
        for k in 2..s {
            for j in 1..k {
                for i in 0..j {
                    generator_triples += 1;
                    let f = self.var(k);
                    let g = self.var(j);
                    let h = self.var(i);
                    if let Some(ce) = self.assoc_discrepancy(&f, &g, &h)? {
                        return Ok(AssociativityReport {
                            generator_triples,
                            random_trials: 0,
                            counterexample: Some(ce),
                        });
                    }
                }
            }
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5EED_BA5E);
        for trial in 0..trials {
            let f = self.random_polynomial(&mut rng, 3, 2);
            let g = self.random_polynomial(&mut rng, 3, 2);
            let h = self.random_polynomial(&mut rng, 3, 2);
            if let Some(ce) = self.assoc_discrepancy(&f, &g, &h)? {
                return Ok(AssociativityReport {
                    generator_triples,
                    random_trials: trial + 1,
                    counterexample: Some(ce),
                });
            }
        }
        Ok(AssociativityReport {
            generator_triples,
            random_trials: trials,
            counterexample: None,
        })
    }

    fn assoc_discrepancy(
        &self,
        f: &StandardPolynomial,
        g: &StandardPolynomial,
        h: &StandardPolynomial,
    ) -> Result<Option<AssociativityCounterexample>, PbwError> {
        let left = self.multiply(&self.multiply(f, g)?, h)?;
        let right = self.multiply(f, &self.multiply(g, h)?)?;
        if left == right {
            Ok(None)
        } else {
            Ok(Some(AssociativityCounterexample {
                f: f.clone(),
                g: g.clone(),
                h: h.clone(),
                left,
                right,
            }))
        }
    }

    /// A small random polynomial: up to `max_terms` terms with per-variable
    /// exponents `0..=max_exp`, coefficients drawn from integers, powers of
    /// `q`, and (when the ring has them) Laurent variable monomials.
    pub fn random_polynomial(
        &self,
        rng: &mut impl RngCore,
        max_terms: usize,
        max_exp: i64,
    ) -> StandardPolynomial {
        use crate::scalars::Scalar;
        let s = self.num_vars();
        let t = self.coeff_rank();
        let n_terms = 1 + (rng.next_u32() as usize) % max_terms;
        let mut out = self.zero();
        for _ in 0..n_terms {
            let expo: Vec<i64> = (0..s)
                .map(|_| (rng.next_u32() as i64) % (max_exp + 1))
                .collect();
            let scalar = match rng.next_u32() % 5 {
                0 => Scalar::one(),
                1 => Scalar::from_i64(2),
                2 => Scalar::from_i64(-1),
                3 => Scalar::q(),
                _ => Scalar::q_pow(-1),
            };
            let mut coeff = LaurentCoefficient::from_scalar(t, scalar);
            if t > 0 {
                let zexp: Vec<i64> = (0..t).map(|_| (rng.next_u32() as i64 % 3) - 1).collect();
                coeff = coeff.mul(
                    &LaurentCoefficient::monomial(t, zexp, Scalar::one())
                        .expect("exponent length matches"),
                );
            }
            out.insert(ExponentVector::new(expo), coeff);
        }
        out
    }
}

/// Outcome of the tail-order check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailOrderReport {
    /// The order the tails were checked against.
    pub order: AdmissibleOrder,
    /// Whether the order has `0` as minimum on `ℕ^s` (a prerequisite for
    /// rewriting to terminate).
    pub zero_minimal: bool,
    /// Tail terms that are not strictly below their relation's leading
    /// monomial.
    pub violations: Vec<TailViolation>,
}

impl TailOrderReport {
    pub fn is_satisfied(&self) -> bool {
        self.zero_minimal && self.violations.is_empty()
    }
}

/// One offending tail term: relation `(j, i)` (0-based) contains `exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailViolation {
    pub j: usize,
    pub i: usize,
    pub exponent: ExponentVector,
}

/// Outcome of the associativity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociativityReport {
    pub generator_triples: usize,
    pub random_trials: usize,
    pub counterexample: Option<AssociativityCounterexample>,
}

impl AssociativityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// A triple on which `(f·g)·h` and `f·(g·h)` disagree, with both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociativityCounterexample {
    pub f: StandardPolynomial,
    pub g: StandardPolynomial,
    pub h: StandardPolynomial,
    pub left: StandardPolynomial,
    pub right: StandardPolynomial,
}

/// The multidegree of a nonzero polynomial: the image under the order's
/// degree map of the largest support exponent.
pub fn mdeg(
    order: &AdmissibleOrder,
    f: &StandardPolynomial,
) -> Result<Vec<i64>, PbwError> {
    let mut best: Option<(Vec<i64>, &ExponentVector)> = None;
    for (e, _) in f.terms() {
        let image = order.degree_image(e)?;
        best = match best {
            None => Some((image, e)),
            Some((bi, be)) => {
                // compare images lexicographically, tie-break on exponents
                let ord = {
                    let mut o = Ordering::Equal;
                    for (x, y) in image.iter().zip(&bi).rev() {
                        if x != y {
                            o = x.cmp(y);
                            break;
                        }
                    }
                    o
                };
                if ord == Ordering::Greater
                    || (ord == Ordering::Equal
                        && AdmissibleOrder::Lex.compare(e, be)? == Ordering::Greater)
                {
                    Some((image, e))
                } else {
                    Some((bi, be))
                }
            }
        };
    }
    best.map(|(image, _)| image).ok_or(PbwError::ZeroPolynomial)
}

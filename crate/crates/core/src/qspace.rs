//! Multiparameter quantum affine spaces, their monomial localizations, and
//! Gelfand–Kirillov dimension witnesses by growth counting.
//!
//! A quantum space on `x_1, .., x_s` is presented by a multiplicatively
//! anti-symmetric matrix of units: `x_j x_i = q_ji x_i x_j` with
//! `q_ij q_ji = 1` and `q_ii = 1`. Inverting the first `t` generators gives
//! the mixed torus `k_Q[x_1^{±1}, .., x_t^{±1}, x_{t+1}, .., x_s]`, whose
//! monomials multiply by a closed-form unit factor instead of step-by-step
//! rewriting. Counting monomials by total degree (each generator and each
//! inverse in degree 1) witnesses the growth rate, hence the GK dimension.

use crate::orders::{ExponentVector, OrderError};
use crate::pbw::{AlgebraPresentation, CoefficientDomain, PbwError};
use crate::scalars::{DiagonalAutomorphism, LaurentCoefficient, Scalar};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Errors raised by quantum-space construction and monomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QSpaceError {
    /// The commutation matrix is not multiplicatively anti-symmetric.
    InvalidMatrix(String),
    /// More inverted variables than variables.
    InvalidInverted { t: usize, s: usize },
    /// A non-inverted position carries a negative exponent.
    NegativeExponent { index: usize },
    /// A presentation does not describe a quantum space.
    NotQuantumSpace(String),
    /// The growth estimate needs a larger degree bound.
    DegreeTooSmall { n_max: u32 },
    /// Quotient dimensions are only computed for non-localized spaces.
    LocalizedQuotient,
    /// An exponent product overflowed.
    Overflow,
    /// Vector dimensions disagree.
    Dimension(OrderError),
}

impl fmt::Display for QSpaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSpaceError::InvalidMatrix(msg) => write!(f, "invalid commutation matrix: {msg}"),
            QSpaceError::InvalidInverted { t, s } => {
                write!(f, "cannot invert {t} of {s} variables")
            }
            QSpaceError::NegativeExponent { index } => {
                write!(f, "variable {} is not inverted", index + 1)
            }
            QSpaceError::NotQuantumSpace(msg) => write!(f, "not a quantum space: {msg}"),
            QSpaceError::DegreeTooSmall { n_max } => {
                write!(f, "growth estimation needs a degree bound of at least 4, got {n_max}")
            }
            QSpaceError::LocalizedQuotient => {
                write!(f, "monomial quotients need a non-localized space (t = 0)")
            }
            QSpaceError::Overflow => write!(f, "exponent arithmetic overflowed"),
            QSpaceError::Dimension(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for QSpaceError {}

impl From<OrderError> for QSpaceError {
    fn from(e: OrderError) -> Self {
        QSpaceError::Dimension(e)
    }
}

/// A `ℚ(q)`-combination of torus monomials `x^e`, `e ∈ ℤ^t × ℕ^{s-t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusElement {
    num_vars: usize,
    terms: BTreeMap<ExponentVector, Scalar>,
}

impl TorusElement {
    pub fn zero(num_vars: usize) -> Self {
        TorusElement {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Option<&Scalar> {
        self.terms.get(e)
    }

    fn insert(&mut self, e: ExponentVector, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars, "mixed variable counts");
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
        TorusElement {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = TorusElement::zero(self.num_vars);
        for (e, a) in &self.terms {
            out.insert(e.clone(), a.mul(c));
        }
        out
    }
}

/// A quantum affine space with its first `t` generators inverted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumSpacePresentation {
    s: usize,
    t: usize,
    /// `q[j][i]`, multiplicatively anti-symmetric.
    q: Vec<Vec<Scalar>>,
}

impl QuantumSpacePresentation {
    pub fn new(s: usize, t: usize, q: Vec<Vec<Scalar>>) -> Result<Self, QSpaceError> {
        if t > s {
            return Err(QSpaceError::InvalidInverted { t, s });
        }
        if q.len() != s || q.iter().any(|row| row.len() != s) {
            return Err(QSpaceError::InvalidMatrix(format!(
                "expected an {s} x {s} table"
            )));
        }
        for (j, row) in q.iter().enumerate() {
            if !row[j].is_one() {
                return Err(QSpaceError::InvalidMatrix(format!(
                    "q[{},{}] must be 1",
                    j + 1,
                    j + 1
                )));
            }
            for (i, entry) in row.iter().enumerate() {
                if entry.is_zero() {
                    return Err(QSpaceError::InvalidMatrix(format!(
                        "q[{},{}] must be a unit",
                        j + 1,
                        i + 1
                    )));
                }
                if i < j && !entry.mul(&q[i][j]).is_one() {
                    return Err(QSpaceError::InvalidMatrix(format!(
                        "q[{},{}] * q[{},{}] must be 1",
                        j + 1,
                        i + 1,
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(QuantumSpacePresentation { s, t, q })
    }

    /// The space with `q_ji = qval` for every `j > i`.
    pub fn uniform(s: usize, t: usize, qval: Scalar) -> Result<Self, QSpaceError> {
        if qval.is_zero() {
            return Err(QSpaceError::InvalidMatrix(String::from(
                "q must be a unit",
            )));
        }
        let inv = qval.inv().expect("nonzero scalar");
        let mut q = vec![vec![Scalar::one(); s]; s];
        for j in 0..s {
            for i in 0..j {
                q[j][i] = qval.clone();
                q[i][j] = inv.clone();
            }
        }
        QuantumSpacePresentation::new(s, t, q)
    }

    pub fn num_vars(&self) -> usize {
        self.s
    }

    pub fn num_inverted(&self) -> usize {
        self.t
    }

    pub fn q(&self, j: usize, i: usize) -> &Scalar {
        &self.q[j][i]
    }

    /// The same space with a different number of inverted variables.
    pub fn with_inverted(&self, t: usize) -> Result<Self, QSpaceError> {
        if t > self.s {
            return Err(QSpaceError::InvalidInverted { t, s: self.s });
        }
        Ok(QuantumSpacePresentation {
            s: self.s,
            t,
            q: self.q.clone(),
        })
    }

    fn check_exponent(&self, e: &ExponentVector) -> Result<(), QSpaceError> {
        if e.len() != self.s {
            return Err(QSpaceError::Dimension(OrderError::DimensionMismatch {
                expected: self.s,
                found: e.len(),
            }));
        }
        for (index, &v) in e.entries().iter().enumerate() {
            if index >= self.t && v < 0 {
                return Err(QSpaceError::NegativeExponent { index });
            }
        }
        Ok(())
    }

    /// The element `c · x^e`, validating `e ∈ ℤ^t × ℕ^{s-t}`.
    pub fn monomial(&self, e: &[i64], c: Scalar) -> Result<TorusElement, QSpaceError> {
        let e = ExponentVector::new(e.to_vec());
        self.check_exponent(&e)?;
        let mut out = TorusElement::zero(self.s);
        out.insert(e, c);
        Ok(out)
    }

    pub fn one(&self) -> TorusElement {
        self.monomial(&vec![0; self.s], Scalar::one())
            .expect("zero exponent is valid")
    }

    /// The generator `x_i` (0-based).
    pub fn var(&self, i: usize) -> TorusElement {
        let mut e = vec![0; self.s];
        e[i] = 1;
        self.monomial(&e, Scalar::one()).expect("unit exponent")
    }

    /// The inverse `x_i^{-1}`; only the first `t` generators have one.
    pub fn var_inv(&self, i: usize) -> Result<TorusElement, QSpaceError> {
        let mut e = vec![0i64; self.s];
        e[i] = -1;
        self.monomial(&e, Scalar::one())
    }

    /// The unit `λ` with `x^a · x^b = λ · x^{a+b}`, namely
    /// `λ = Π_{i<j} q_ji^{a_j b_i}`: each `x_j` of the left factor passes
    /// every `x_i` (`i < j`) of the right factor.
    pub fn qcommute_factor(
        &self,
        a: &ExponentVector,
        b: &ExponentVector,
    ) -> Result<Scalar, QSpaceError> {
        self.check_exponent(a)?;
        self.check_exponent(b)?;
        let mut out = Scalar::one();
        for j in 1..self.s {
            let aj = a.get(j);
            if aj == 0 {
                continue;
            }
            for i in 0..j {
                let bi = b.get(i);
                if bi == 0 {
                    continue;
                }
                let e = aj.checked_mul(bi).ok_or(QSpaceError::Overflow)?;
                let power = self.q[j][i].pow(e).expect("matrix entries are units");
                out = out.mul(&power);
            }
        }
        Ok(out)
    }

    /// Bilinear product of torus elements via [`Self::qcommute_factor`].
    pub fn multiply_torus(
        &self,
        f: &TorusElement,
        g: &TorusElement,
    ) -> Result<TorusElement, QSpaceError> {
        let mut out = TorusElement::zero(self.s);
        for (a, ca) in &f.terms {
            for (b, cb) in &g.terms {
                let factor = self.qcommute_factor(a, b)?;
                let e = a.add(b)?;
                self.check_exponent(&e)?;
                out.insert(e, ca.mul(cb).mul(&factor));
            }
        }
        Ok(out)
    }

    /// `f^e` by repeated multiplication (`e ≥ 0`).
    pub fn pow(&self, f: &TorusElement, e: u32) -> Result<TorusElement, QSpaceError> {
        let mut out = self.one();
        for _ in 0..e {
            out = self.multiply_torus(&out, f)?;
        }
        Ok(out)
    }

    /// Number of monomials with `Σ|e_i| ≤ n` (inverted variables count
    /// absolute exponent values).
    pub fn growth_count(&self, n: u32) -> BigUint {
        let n = n as usize;
        // f[d] = number of monomials of total degree exactly d
        let mut f = vec![BigUint::zero(); n + 1];
        f[0] = BigUint::one();
        for i in 0..self.s {
            let per_degree = if i < self.t { 2u32 } else { 1u32 };
            let mut g = vec![BigUint::zero(); n + 1];
            for d in 0..=n {
                if f[d].is_zero() {
                    continue;
                }
                g[d] += &f[d];
                for k in 1..=(n - d) {
                    g[d + k] += &f[d] * per_degree;
                }
            }
            f = g;
        }
        f.into_iter().sum()
    }

    /// Log-ratio growth estimate `log2(count(n_max) / count(n_max/2))`,
    /// computed as an exact dyadic rational and rounded to the nearest
    /// integer. For these spaces the count grows like `n^s`, so the
    /// estimate rounds to `s` once `n_max` is moderately large.
    pub fn gkdim_estimate(&self, n_max: u32) -> Result<GkEstimate, QSpaceError> {
        if n_max < 4 {
            return Err(QSpaceError::DegreeTooSmall { n_max });
        }
        let hi = self.growth_count(n_max);
        let lo = self.growth_count(n_max / 2);
        Ok(growth_exponent(&hi, &lo).expect("growth counts are positive"))
    }

    /// GK dimension of the cyclic module `R/⟨x^g : g ∈ generators⟩` for a
    /// non-localized space: the largest number of variables spanning a
    /// coordinate subspace that avoids every generator's support. The unit
    /// ideal (a generator with empty support) yields the zero module,
    /// reported as `NegInfinity`.
    pub fn monomial_quotient_gkdim(
        &self,
        generators: &[ExponentVector],
    ) -> Result<GkDim, QSpaceError> {
        if self.t != 0 {
            return Err(QSpaceError::LocalizedQuotient);
        }
        if self.s >= 64 {
            return Err(QSpaceError::Overflow);
        }
        let supports = self.generator_supports(generators)?;
        if supports.iter().any(|&m| m == 0) {
            return Ok(GkDim::NegInfinity);
        }
        let mut best = 0usize;
        for subset in 0u64..(1u64 << self.s) {
            if supports.iter().any(|&m| m & subset == m) {
                continue;
            }
            best = best.max(subset.count_ones() as usize);
        }
        Ok(GkDim::Finite(best))
    }

    /// Direct count of the standard monomials of degree `≤ n` surviving in
    /// `R/⟨x^g⟩`, i.e. divisible by no generator (the brute-force
    /// cross-check for [`Self::monomial_quotient_gkdim`]).
    pub fn count_quotient_monomials(
        &self,
        generators: &[ExponentVector],
        n: u32,
    ) -> Result<u64, QSpaceError> {
        if self.t != 0 {
            return Err(QSpaceError::LocalizedQuotient);
        }
        for g in generators {
            self.check_exponent(g)?;
        }
        let mut count = 0u64;
        let mut e = vec![0i64; self.s];
        self.count_rec(generators, &mut e, 0, n as i64, &mut count);
        Ok(count)
    }

    fn count_rec(
        &self,
        generators: &[ExponentVector],
        e: &mut Vec<i64>,
        i: usize,
        remaining: i64,
        count: &mut u64,
    ) {
        if i == self.s {
            let divisible = generators.iter().any(|g| {
                g.entries().iter().zip(e.iter()).all(|(&gv, &ev)| ev >= gv)
            });
            if !divisible {
                *count += 1;
            }
            return;
        }
        for k in 0..=remaining {
            e[i] = k;
            self.count_rec(generators, e, i + 1, remaining - k, count);
        }
        e[i] = 0;
    }

    fn generator_supports(
        &self,
        generators: &[ExponentVector],
    ) -> Result<Vec<u64>, QSpaceError> {
        let mut out = Vec::with_capacity(generators.len());
        for g in generators {
            self.check_exponent(g)?;
            let mut mask = 0u64;
            for (i, &v) in g.entries().iter().enumerate() {
                if v > 0 {
                    mask |= 1 << i;
                }
            }
            out.push(mask);
        }
        Ok(out)
    }

    /// Reads a tail-free presentation over the plain field as a quantum
    /// space (`t = 0`); commutation units must be scalars.
    pub fn from_presentation(a: &AlgebraPresentation) -> Result<Self, QSpaceError> {
        if a.has_tails() {
            return Err(QSpaceError::NotQuantumSpace(String::from(
                "the presentation has tails; re-filter first",
            )));
        }
        let t = a.coeff_rank();
        let s = a.num_vars() + t;
        let mut q = vec![vec![Scalar::one(); s]; s];
        // Variables are ordered z_1, .., z_t, x_1, .., x_s': the Laurent
        // coefficient variables commute with each other and are inverted.
        for k in 0..a.num_vars() {
            for (i, scale) in a.sigma(k).scale().iter().enumerate() {
                q[t + k][i] = scale.clone();
                q[i][t + k] = scale.inv().map_err(|_| {
                    QSpaceError::NotQuantumSpace(String::from("automorphism scale is zero"))
                })?;
            }
        }
        for j in 1..a.num_vars() {
            for i in 0..j {
                let unit = a.q_unit(j, i).as_scalar().ok_or_else(|| {
                    QSpaceError::NotQuantumSpace(format!(
                        "q[{},{}] involves coefficient variables",
                        j + 1,
                        i + 1
                    ))
                })?;
                q[t + j][t + i] = unit.clone();
                q[t + i][t + j] = unit.inv().map_err(|_| {
                    QSpaceError::NotQuantumSpace(String::from("commutation unit is zero"))
                })?;
            }
        }
        QuantumSpacePresentation::new(s, t, q)
    }

    /// The equivalent PBW presentation (non-localized spaces only).
    pub fn to_presentation(&self, name: &str) -> Result<AlgebraPresentation, PbwError> {
        assert_eq!(self.t, 0, "only affine spaces convert to presentations");
        let mut q = BTreeMap::new();
        for j in 1..self.s {
            for i in 0..j {
                q.insert((j, i), LaurentCoefficient::from_scalar(0, self.q[j][i].clone()));
            }
        }
        AlgebraPresentation::new(
            String::from(name),
            (1..=self.s).map(|i| format!("x{i}")).collect(),
            CoefficientDomain::field(),
            q,
            vec![DiagonalAutomorphism::identity(0); self.s],
            BTreeMap::new(),
        )
    }
}

/// GK dimension of a module: `-∞` for the zero module, else a natural
/// number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GkDim {
    NegInfinity,
    Finite(usize),
}

impl fmt::Display for GkDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GkDim::NegInfinity => write!(f, "-inf"),
            GkDim::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A growth-slope estimate: the exact dyadic value and its rounding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkEstimate {
    pub raw: BigRational,
    pub rounded: i64,
}

/// Bits of precision carried by [`growth_exponent`].
pub const LOG_FRAC_BITS: u32 = 12;

/// `log2(hi/lo)` to [`LOG_FRAC_BITS`] fractional bits (exact dyadic
/// arithmetic, truncated), rounded to the nearest integer; `None` when a
/// count is zero.
pub fn growth_exponent(hi: &BigUint, lo: &BigUint) -> Option<GkEstimate> {
    if hi.is_zero() || lo.is_zero() {
        return None;
    }
    let mut r = BigRational::new(
        BigInt::from(hi.clone()),
        BigInt::from(lo.clone()),
    );
    let two = BigRational::from_integer(BigInt::from(2));
    let mut int_part: i64 = 0;
    while r >= two {
        r /= &two;
        int_part += 1;
    }
    while r < BigRational::one() {
        r *= &two;
        int_part -= 1;
    }
    let mut frac = BigInt::zero();
    for _ in 0..LOG_FRAC_BITS {
        frac *= 2;
        r = &r * &r;
        if r >= two {
            r /= &two;
            frac += 1;
        }
    }
    let denom = BigInt::one() << LOG_FRAC_BITS;
    let raw = BigRational::from_integer(BigInt::from(int_part))
        + BigRational::new(frac, denom);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let rounded = (&raw + half).floor().to_integer().to_i64()?;
    Some(GkEstimate { raw, rounded })
}

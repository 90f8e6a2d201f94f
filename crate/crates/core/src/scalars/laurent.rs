//! Laurent coefficients `Λ = ℚ(q)[z_1^{±1}, .., z_t^{±1}]` and their
//! diagonal automorphisms.
//!
//! With `t = 0` the ring degenerates to the field `ℚ(q)` itself, so one type
//! serves both coefficient domains of a presentation. The units of `Λ` are
//! exactly the single-term elements, which is what coefficient inversion and
//! the q-commutation constants rely on.

use super::scalar::Scalar;
use super::ScalarError;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// An element of the Laurent coefficient ring: a finite map from integer
/// exponent vectors of length `nvars` to nonzero scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentCoefficient {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Scalar>,
}

impl LaurentCoefficient {
    pub fn zero(nvars: usize) -> Self {
        LaurentCoefficient {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        LaurentCoefficient::from_scalar(nvars, Scalar::one())
    }

    pub fn from_scalar(nvars: usize, c: Scalar) -> Self {
        let mut out = LaurentCoefficient::zero(nvars);
        if !c.is_zero() {
            out.terms.insert(vec![0; nvars], c);
        }
        out
    }

    /// The single term `c * z^expo`.
    pub fn monomial(nvars: usize, expo: Vec<i64>, c: Scalar) -> Result<Self, ScalarError> {
        if expo.len() != nvars {
            return Err(ScalarError::DimensionMismatch {
                expected: nvars,
                found: expo.len(),
            });
        }
        let mut out = LaurentCoefficient::zero(nvars);
        if !c.is_zero() {
            out.terms.insert(expo, c);
        }
        Ok(out)
    }

    /// The variable `z_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut expo = vec![0; nvars];
        expo[i] = 1;
        LaurentCoefficient::monomial(nvars, expo, Scalar::one()).expect("exponent length matches")
    }

    /// `z_i^k` for any integer `k`.
    pub fn var_pow(nvars: usize, i: usize, k: i64) -> Self {
        let mut expo = vec![0; nvars];
        expo[i] = k;
        LaurentCoefficient::monomial(nvars, expo, Scalar::one()).expect("exponent length matches")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.single_term()
            .is_some_and(|(e, c)| e.iter().all(|&k| k == 0) && c.is_one())
    }

    /// A unit of the Laurent ring is exactly one term with a nonzero scalar.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn single_term(&self) -> Option<(&Vec<i64>, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The scalar value if this element is constant (no `z` part).
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        self.single_term().and_then(|(e, c)| {
            if e.iter().all(|&k| k == 0) {
                Some(c.clone())
            } else {
                None
            }
        })
    }

    fn check_dims(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "Laurent coefficients from different rings"
        );
    }

    fn insert(&mut self, expo: Vec<i64>, c: Scalar) {
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
        self.check_dims(other);
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
        LaurentCoefficient {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_dims(other);
        let mut out = LaurentCoefficient::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let expo: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert(expo, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return LaurentCoefficient::zero(self.nvars);
        }
        LaurentCoefficient {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a.mul(c)))
                .collect(),
        }
    }

    /// Inverts a unit; multi-term elements and zero are not invertible.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        let (e, c) = self.single_term().ok_or(ScalarError::NonUnit)?;
        let expo: Vec<i64> = e.iter().map(|&k| -k).collect();
        LaurentCoefficient::monomial(self.nvars, expo, c.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = LaurentCoefficient::one(self.nvars);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Renders with the given Laurent variable names in expression syntax.
    pub fn format_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mut factors = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = names.get(i).copied().unwrap_or("z?");
                if k == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{k}"));
                }
            }
            let monomial = factors.join("*");
            if monomial.is_empty() {
                parts.push(c.to_string());
            } else if c.is_one() {
                parts.push(monomial);
            } else {
                parts.push(format!("{c}*{monomial}"));
            }
        }
        parts.join(" + ")
    }

    fn default_names(&self) -> Vec<String> {
        (1..=self.nvars).map(|i| format!("z{i}")).collect()
    }
}

impl fmt::Display for LaurentCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.default_names();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.format_with(&refs))
    }
}

/// A diagonal automorphism `σ(z_i) = λ_i z_i` of the Laurent coefficient
/// ring, given by nonzero scalars `λ_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalAutomorphism {
    scale: Vec<Scalar>,
}

impl DiagonalAutomorphism {
    pub fn new(scale: Vec<Scalar>) -> Result<Self, ScalarError> {
        if scale.iter().any(Scalar::is_zero) {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(DiagonalAutomorphism { scale })
    }

    pub fn identity(nvars: usize) -> Self {
        DiagonalAutomorphism {
            scale: vec![Scalar::one(); nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.scale.len()
    }

    pub fn scale(&self) -> &[Scalar] {
        &self.scale
    }

    pub fn is_identity(&self) -> bool {
        self.scale.iter().all(Scalar::is_one)
    }

    pub fn inverse(&self) -> Self {
        DiagonalAutomorphism {
            scale: self
                .scale
                .iter()
                .map(|l| l.inv().expect("scales are nonzero"))
                .collect(),
        }
    }

    /// Applies the automorphism: the term `c·z^γ` maps to `c·Πλ_i^{γ_i}·z^γ`.
    pub fn apply(&self, v: &LaurentCoefficient) -> Result<LaurentCoefficient, ScalarError> {
        if v.nvars() != self.nvars() {
            return Err(ScalarError::DimensionMismatch {
                expected: self.nvars(),
                found: v.nvars(),
            });
        }
        let mut out = LaurentCoefficient::zero(v.nvars());
        for (e, c) in &v.terms {
            let mut factor = Scalar::one();
            for (l, &k) in self.scale.iter().zip(e) {
                if k != 0 {
                    factor = factor.mul(&l.pow(k).expect("scales are nonzero"));
                }
            }
            out.insert(e.clone(), c.mul(&factor));
        }
        Ok(out)
    }
}

//! The fraction field `ℚ(q)` of rational functions in the quantum parameter.

use super::intpoly::IntPoly;
use super::ScalarError;
use alloc::format;
use core::fmt;
use num_bigint::BigInt;
use num_traits::Signed;

/// An element of `ℚ(q)`, stored as a reduced fraction of integer
/// polynomials. Invariants: the denominator is nonzero with positive leading
/// coefficient, and numerator and denominator share no polynomial factor and
/// no integer content.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: IntPoly,
    den: IntPoly,
}

impl Scalar {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let mut s = Scalar { num, den };
        s.normalize();
        Ok(s)
    }

    pub fn from_poly(num: IntPoly) -> Self {
        Scalar {
            num,
            den: IntPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Scalar::from_poly(IntPoly::zero())
    }

    pub fn one() -> Self {
        Scalar::from_poly(IntPoly::one())
    }

    /// The quantum parameter `q` itself.
    pub fn q() -> Self {
        Scalar::from_poly(IntPoly::q())
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            Scalar::from_poly(IntPoly::monomial(BigInt::from(1), k as usize))
        } else {
            Scalar {
                num: IntPoly::one(),
                den: IntPoly::monomial(BigInt::from(1), (-k) as usize),
            }
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Scalar::from_poly(IntPoly::from_i64(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self, ScalarError> {
        Scalar::new(IntPoly::from_i64(num), IntPoly::from_i64(den))
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = IntPoly::one();
            return;
        }
        let g = IntPoly::gcd(&self.num, &self.den);
        if !g.is_one() {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        if self.den.leading().is_some_and(Signed::is_negative) {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Scalar::new(num, den).expect("denominators are nonzero")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.num);
        let den = self.den.mul(&other.den);
        Scalar::new(num, den).expect("denominators are nonzero")
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        Scalar::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Whether the printed form is a single product token that can be
    /// embedded in a larger `*`-expression without parentheses.
    fn num_is_atomic(&self) -> bool {
        self.num.is_monomial() || self.num.is_zero()
    }
}

impl fmt::Display for Scalar {
    /// Renders in expression syntax that reparses to the same value:
    /// multi-term numerators are parenthesized, denominators are
    /// parenthesized unless they are a bare power of `q` or a positive
    /// integer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num_str = if self.num_is_atomic() {
            format!("{}", self.num)
        } else {
            format!("({})", self.num)
        };
        if self.den.is_one() {
            return f.write_str(&num_str);
        }
        let den_plain = match self.den.degree() {
            Some(0) => true,
            _ => self.den.is_monomial() && self.den.leading().is_some_and(num_traits::One::is_one),
        };
        let den_str = if den_plain {
            format!("{}", self.den)
        } else {
            format!("({})", self.den)
        };
        write!(f, "{num_str}/{den_str}")
    }
}

//! Univariate integer polynomials in the quantum parameter `q`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial in `q` with integer coefficients, stored densely by
/// ascending degree. The invariant: the last stored coefficient is nonzero
/// (the zero polynomial stores nothing).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// The monomial `q`.
    pub fn q() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            IntPoly::zero()
        } else {
            IntPoly { coeffs: vec![c] }
        }
    }

    pub fn from_i64(n: i64) -> Self {
        IntPoly::constant(BigInt::from(n))
    }

    /// `c * q^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Whether this is a single term `c * q^k`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            let b = other.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            coeffs.push(a + b);
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul_bigint(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `self * q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = IntPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The nonnegative gcd of all coefficients; `0` for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self` divided by its content; the zero polynomial stays zero.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division: `Some(f)` with `self = f * d`, or `None` if `d` does
    /// not divide `self` over the integers.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let (t, r) = rem.leading().unwrap().div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            quot[rd - dd] = t.clone();
            rem = rem.sub(&d.shift(rd - dd).mul_bigint(&t));
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Pseudo-remainder `lc(g)^(deg f - deg g + 1) * f  mod  g`.
    fn pseudo_rem(f: &Self, g: &Self) -> Self {
        let dg = g.degree().expect("pseudo_rem by zero");
        let lc = g.leading().unwrap().clone();
        let mut r = f.clone();
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let a = r.leading().unwrap().clone();
            r = r.mul_bigint(&lc).sub(&g.shift(dr - dg).mul_bigint(&a));
        }
        r
    }

    /// Greatest common divisor over `ℤ[q]` (content included), normalized to
    /// a positive leading coefficient.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        fn pos(p: IntPoly) -> IntPoly {
            match p.leading() {
                Some(l) if l.is_negative() => p.neg(),
                _ => p,
            }
        }
        if a.is_zero() {
            return pos(b.clone());
        }
        if b.is_zero() {
            return pos(a.clone());
        }
        let c = a.content().gcd(&b.content());
        let (mut f, mut g) = if a.degree() >= b.degree() {
            (a.primitive_part(), b.primitive_part())
        } else {
            (b.primitive_part(), a.primitive_part())
        };
        while !g.is_zero() {
            let r = Self::pseudo_rem(&f, &g).primitive_part();
            f = g;
            g = r;
        }
        pos(f.mul_bigint(&c))
    }
}

impl fmt::Display for IntPoly {
    /// Renders in expression syntax, descending degree: `2*q^3 - q + 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || deg == 0;
            if show_coeff {
                write!(out, "{mag}").unwrap();
            }
            if deg > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push('q');
                if deg > 1 {
                    write!(out, "^{deg}").unwrap();
                }
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 1]); // 1 + q
        let b = p(&[-1, 1]); // -1 + q
        assert_eq!(a.mul(&b), p(&[-1, 0, 1])); // q^2 - 1
        assert_eq!(a.add(&b), p(&[0, 2]));
        assert_eq!(a.sub(&a), IntPoly::zero());
        assert_eq!(p(&[2, 4]).content(), BigInt::from(2));
        assert_eq!(p(&[2, 4]).primitive_part(), p(&[1, 2]));
    }

    #[test]
    fn gcd_removes_common_factor() {
        // gcd(q - 1, q^2 - 1) = q - 1
        assert_eq!(IntPoly::gcd(&p(&[-1, 1]), &p(&[-1, 0, 1])), p(&[-1, 1]));
        // content is part of the gcd
        assert_eq!(IntPoly::gcd(&p(&[2, 2]), &p(&[4])), p(&[2]));
        // gcd is normalized to a positive leading coefficient
        assert_eq!(IntPoly::gcd(&p(&[1, -1]), &IntPoly::zero()), p(&[-1, 1]));
        // coprime inputs
        assert_eq!(IntPoly::gcd(&p(&[1, 1]), &p(&[-1, 1])), IntPoly::one());
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.exact_div(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(a.exact_div(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(a.exact_div(&p(&[2])), None);
        assert_eq!(p(&[1, 1]).exact_div(&p(&[0, 1])), None);
    }

    #[test]
    fn display_syntax() {
        use alloc::string::ToString;
        assert_eq!(p(&[5, -1, 2]).to_string(), "2*q^2 - q + 5");
        assert_eq!(p(&[0, 1]).to_string(), "q");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}

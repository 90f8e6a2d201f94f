//! A small catalog of worked example presentations.
//!
//! These algebras exercise every feature of [`AlgebraPresentation`]: plain
//! q-commutation (quantum spaces), constant tails (the quantized Weyl
//! algebra), and tails with Laurent coefficients moved by nontrivial
//! automorphisms (`U_q(sl_2)` over `ℚ(q)[K^{±1}]`). Two deliberately
//! lopsided presentations round out the set: one whose relations are
//! inconsistent, and one whose tail forces a non-uniform weight vector.

use crate::orders::{AdmissibleOrder, ExponentVector, WeightVector};
use crate::pbw::{AlgebraPresentation, CoefficientDomain, PbwError, StandardPolynomial};
use crate::qspace::{QSpaceError, QuantumSpacePresentation};
use crate::scalars::{DiagonalAutomorphism, LaurentCoefficient, Scalar};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

/// One catalog item: the algebra plus the order and weight vector that make
/// its tails admissible.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub algebra: AlgebraPresentation,
    /// An admissible order under which every tail is lower-order.
    pub order: AdmissibleOrder,
    /// A weight vector certifying the tails (all ones when there are none).
    pub expected_weights: Vec<i64>,
}

fn default_var_names(s: usize) -> Vec<String> {
    (1..=s).map(|i| format!("x{i}")).collect()
}

fn uniform_qspace(name: &str, s: usize, qval: Scalar) -> Result<AlgebraPresentation, PbwError> {
    let unit = LaurentCoefficient::from_scalar(0, qval);
    let mut q = BTreeMap::new();
    for j in 1..s {
        for i in 0..j {
            q.insert((j, i), unit.clone());
        }
    }
    AlgebraPresentation::new(
        name.to_string(),
        default_var_names(s),
        CoefficientDomain::field(),
        q,
        vec![DiagonalAutomorphism::identity(0); s],
        BTreeMap::new(),
    )
}

/// The uniform quantum space on `s` generators: `x_j x_i = q x_i x_j` for
/// every `j > i`, with the given unit in place of `q`.
pub fn quantum_space_uniform(s: usize, qval: Scalar) -> Result<AlgebraPresentation, PbwError> {
    uniform_qspace(&format!("qspace{s}"), s, qval)
}

/// The quantum plane: `x_2 x_1 = q x_1 x_2`.
pub fn quantum_plane() -> AlgebraPresentation {
    uniform_qspace("qplane", 2, Scalar::q()).expect("q is a unit")
}

/// The uniform three-variable quantum space at `q`.
pub fn quantum_plane3() -> AlgebraPresentation {
    uniform_qspace("qplane3", 3, Scalar::q()).expect("q is a unit")
}

/// The quantized Weyl algebra: `x_2 x_1 = q x_1 x_2 + 1`.
pub fn make_quantized_weyl(qval: Scalar) -> Result<AlgebraPresentation, PbwError> {
    let mut q = BTreeMap::new();
    q.insert((1usize, 0usize), LaurentCoefficient::from_scalar(0, qval));
    let one = StandardPolynomial::monomial(
        ExponentVector::zero(2),
        LaurentCoefficient::one(0),
    )?;
    let mut tails = BTreeMap::new();
    tails.insert((1usize, 0usize), one);
    AlgebraPresentation::new(
        "weyl".to_string(),
        default_var_names(2),
        CoefficientDomain::field(),
        q,
        vec![DiagonalAutomorphism::identity(0); 2],
        tails,
    )
}

/// The coefficient `(K - K^{-1}) / (q - q^{-1})` of the `U_q(sl_2)`
/// commutation relation, in the rank-one Laurent ring `ℚ(q)[K^{±1}]`.
pub fn uq_sl2_tail_coefficient() -> LaurentCoefficient {
    let denom = Scalar::q().sub(&Scalar::q_pow(-1));
    let inv = denom.inv().expect("q - q^-1 is nonzero");
    LaurentCoefficient::var(1, 0)
        .sub(&LaurentCoefficient::var_pow(1, 0, -1))
        .scale(&inv)
}

/// `U_q(sl_2)` presented on `x_1 = F`, `x_2 = E` over `Λ = ℚ(q)[K^{±1}]`:
///
/// ```text
/// E F = F E + (K - K^{-1})/(q - q^{-1}),   F K = q^2 K F,   E K = q^{-2} K E.
/// ```
pub fn make_uq_sl2() -> AlgebraPresentation {
    let mut q = BTreeMap::new();
    q.insert((1usize, 0usize), LaurentCoefficient::one(1));
    let tail = StandardPolynomial::monomial(ExponentVector::zero(2), uq_sl2_tail_coefficient())
        .expect("zero exponent is valid");
    let mut tails = BTreeMap::new();
    tails.insert((1usize, 0usize), tail);
    let sigma_f = DiagonalAutomorphism::new(vec![Scalar::q_pow(2)]).expect("unit scale");
    let sigma_e = DiagonalAutomorphism::new(vec![Scalar::q_pow(-2)]).expect("unit scale");
    AlgebraPresentation::new(
        "uqsl2".to_string(),
        vec!["F".to_string(), "E".to_string()],
        CoefficientDomain::laurent(vec!["K".to_string()]),
        q,
        vec![sigma_f, sigma_e],
        tails,
    )
    .expect("valid presentation")
}

/// A presentation whose relations are *not* consistent: with all `q = 1`,
///
/// ```text
/// x_2 x_1 = x_1 x_2 + x_3,   x_3 x_1 = x_1 x_3 + x_1,   x_3 x_2 = x_2 x_3,
/// ```
///
/// the two ways of straightening `x_3 x_2 x_1` disagree by `x_3` (the
/// would-be Lie bracket fails the Jacobi identity), so the normal-form
/// product is not associative.
pub fn inconsistent_presentation() -> AlgebraPresentation {
    let one = LaurentCoefficient::one(0);
    let mut q = BTreeMap::new();
    for j in 1..3 {
        for i in 0..j {
            q.insert((j, i), one.clone());
        }
    }
    let x3 = StandardPolynomial::monomial(ExponentVector::unit(3, 2), one.clone())
        .expect("unit exponent is valid");
    let x1 = StandardPolynomial::monomial(ExponentVector::unit(3, 0), one)
        .expect("unit exponent is valid");
    let mut tails = BTreeMap::new();
    tails.insert((1usize, 0usize), x3);
    tails.insert((2usize, 0usize), x1);
    AlgebraPresentation::new(
        "inconsistent".to_string(),
        default_var_names(3),
        CoefficientDomain::field(),
        q,
        vec![DiagonalAutomorphism::identity(0); 3],
        tails,
    )
    .expect("structurally valid (inconsistency is semantic)")
}

/// A consistent three-variable presentation whose only tail, `x_2^2` on the
/// `x_3 x_1` relation, is *not* lower-order for the uniform weights: it
/// needs `2 w_2 < w_1 + w_3`.
pub fn presentation_with_tail_x2_squared() -> AlgebraPresentation {
    let one = LaurentCoefficient::one(0);
    let mut q = BTreeMap::new();
    for j in 1..3 {
        for i in 0..j {
            q.insert((j, i), one.clone());
        }
    }
    let x2sq = StandardPolynomial::monomial(
        ExponentVector::new(vec![0, 2, 0]),
        one,
    )
    .expect("nonnegative exponent");
    let mut tails = BTreeMap::new();
    tails.insert((2usize, 0usize), x2sq);
    AlgebraPresentation::new(
        "squaretail".to_string(),
        default_var_names(3),
        CoefficientDomain::field(),
        q,
        vec![DiagonalAutomorphism::identity(0); 3],
        tails,
    )
    .expect("valid presentation")
}

/// Every stock algebra with its admissible order and certifying weights.
pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "qplane",
            summary: "quantum plane: x2 x1 = q x1 x2",
            algebra: quantum_plane(),
            order: AdmissibleOrder::WeightLex(WeightVector::uniform(2)),
            expected_weights: vec![1, 1],
        },
        CatalogEntry {
            name: "qplane3",
            summary: "uniform quantum 3-space: xj xi = q xi xj",
            algebra: quantum_plane3(),
            order: AdmissibleOrder::WeightLex(WeightVector::uniform(3)),
            expected_weights: vec![1, 1, 1],
        },
        CatalogEntry {
            name: "weyl",
            summary: "quantized Weyl algebra: x2 x1 = q x1 x2 + 1",
            algebra: make_quantized_weyl(Scalar::q()).expect("q is a unit"),
            order: AdmissibleOrder::WeightLex(WeightVector::uniform(2)),
            expected_weights: vec![1, 1],
        },
        CatalogEntry {
            name: "uqsl2",
            summary: "U_q(sl2) on F, E over Q(q)[K^±1]: EF = FE + (K - K^-1)/(q - q^-1)",
            algebra: make_uq_sl2(),
            order: AdmissibleOrder::WeightLex(WeightVector::uniform(2)),
            expected_weights: vec![1, 1],
        },
    ]
}

/// Looks up a stock algebra by name.
pub fn find(name: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name)
}

/// Builds a quantum space (with the first `t` variables inverted) directly
/// from its multiplicatively anti-symmetric unit matrix.
pub fn make_quantum_space(
    q: Vec<Vec<Scalar>>,
    t: usize,
) -> Result<QuantumSpacePresentation, QSpaceError> {
    let s = q.len();
    QuantumSpacePresentation::new(s, t, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_presentations_are_well_formed() {
        for entry in entries() {
            assert_eq!(entry.algebra.name(), entry.name);
            assert_eq!(entry.algebra.num_vars(), entry.expected_weights.len());
            let report = entry.algebra.check_tail_order(&entry.order).unwrap();
            assert!(report.is_satisfied(), "{} fails its own order", entry.name);
        }
    }

    #[test]
    fn find_by_name() {
        assert!(find("weyl").is_some());
        assert!(find("nope").is_none());
    }

    #[test]
    fn uq_sl2_tail_matches_hand_expansion() {
        // (K - K^-1)/(q - q^-1) = q/(q^2-1) K - q/(q^2-1) K^-1
        let c = uq_sl2_tail_coefficient();
        assert_eq!(c.num_terms(), 2);
        let q = Scalar::q();
        let expect = q.div(&Scalar::q_pow(2).sub(&Scalar::one())).unwrap();
        let at = |k: i64| {
            c.terms()
                .find(|(e, _)| e.as_slice() == [k])
                .map(|(_, s)| s.clone())
                .unwrap()
        };
        assert_eq!(at(1), expect);
        assert_eq!(at(-1), expect.neg());
    }

    #[test]
    fn quantum_spaces_from_matrices() {
        // Quantum plane as a matrix: q21 = q.
        let q = Scalar::q();
        let plane = make_quantum_space(
            vec![
                vec![Scalar::one(), q.inv().unwrap()],
                vec![q.clone(), Scalar::one()],
            ],
            0,
        )
        .unwrap();
        assert_eq!(plane.num_vars(), 2);
        assert_eq!(plane.num_inverted(), 0);
        assert_eq!(plane.q(1, 0), &q);

        // Uniform three variables with the first inverted.
        let mut uniform = vec![vec![Scalar::one(); 3]; 3];
        for j in 0..3 {
            for i in 0..j {
                uniform[j][i] = q.clone();
                uniform[i][j] = q.inv().unwrap();
            }
        }
        let mixed = make_quantum_space(uniform, 1).unwrap();
        assert_eq!(mixed.num_inverted(), 1);
        assert!(mixed.var_inv(0).is_ok());
        assert!(mixed.var_inv(1).is_err());

        // One inverted variable: the Laurent polynomial ring.
        let laurent = make_quantum_space(vec![vec![Scalar::one()]], 1).unwrap();
        assert_eq!(laurent.num_vars(), 1);
        assert!(laurent.monomial(&[-5], Scalar::one()).is_ok());

        // Matrices that are not multiplicatively anti-symmetric are refused.
        assert!(make_quantum_space(
            vec![vec![Scalar::one(), q.clone()], vec![q.clone(), Scalar::one()]],
            0,
        )
        .is_err());
    }
}

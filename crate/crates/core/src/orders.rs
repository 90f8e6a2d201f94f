//! Admissible orders on exponent vectors.
//!
//! Exponent vectors live in `ℤ^n`; the orders below are total, compatible
//! with addition, and (for the shipped variants on `ℕ^n`) have `0` as the
//! minimum, which is what makes them usable as termination orders for
//! normal-form rewriting.
//!
//! The lexicographic convention throughout: `a < b` exactly when the *last*
//! nonzero entry of `b - a` is positive, so the first basis vector is the
//! smallest one and later variables dominate earlier ones.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Errors raised by order and vector arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderError {
    /// Two objects of incompatible dimension met.
    DimensionMismatch { expected: usize, found: usize },
    /// A weight vector entry was not strictly positive.
    NonPositiveWeight { index: usize, value: i64 },
    /// Integer arithmetic left the representable range.
    Overflow,
}

impl fmt::Display for OrderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            OrderError::NonPositiveWeight { index, value } => {
                write!(f, "weight entry {index} is {value}; weights must be >= 1")
            }
            OrderError::Overflow => write!(f, "integer overflow in order arithmetic"),
        }
    }
}

impl core::error::Error for OrderError {}

/// A vector of integer exponents.
///
/// Entries may be negative: the same type carries monomial exponents in
/// `ℕ^s`, difference vectors in `ℤ^s`, and Laurent exponents. The derived
/// `Ord` is the container order used for canonical storage in term maps; the
/// algebraic comparisons go through [`AdmissibleOrder::compare`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    /// The zero vector of length `n`.
    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The `i`-th unit vector of length `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Sum of entries (the total degree for a monomial exponent).
    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self, OrderError> {
        self.check_len(other.len())?;
        Ok(ExponentVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, OrderError> {
        self.check_len(other.len())?;
        Ok(ExponentVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// `self` with entry `i` incremented.
    pub fn bump(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v[i] += 1;
        ExponentVector(v)
    }

    /// `self` with entry `i` decremented.
    pub fn drop(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v[i] -= 1;
        ExponentVector(v)
    }

    fn check_len(&self, found: usize) -> Result<(), OrderError> {
        if self.len() != found {
            return Err(OrderError::DimensionMismatch {
                expected: self.len(),
                found,
            });
        }
        Ok(())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Exact dot product of two integer vectors of equal length.
pub fn dot(a: &[i64], b: &[i64]) -> Result<i64, OrderError> {
    if a.len() != b.len() {
        return Err(OrderError::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    let acc: i128 = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| (x as i128) * (y as i128))
        .sum();
    i64::try_from(acc).map_err(|_| OrderError::Overflow)
}

/// A strictly positive integer weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(entries: Vec<i64>) -> Result<Self, OrderError> {
        for (index, &value) in entries.iter().enumerate() {
            if value < 1 {
                return Err(OrderError::NonPositiveWeight { index, value });
            }
        }
        Ok(WeightVector(entries))
    }

    /// The all-ones weight vector of length `n`.
    pub fn uniform(n: usize) -> Self {
        WeightVector(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Weighted degree `<w, a>` of an exponent vector.
    pub fn degree(&self, a: &ExponentVector) -> Result<i64, OrderError> {
        dot(&self.0, a.entries())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A dense integer matrix, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self, OrderError> {
        if data.len() != rows * cols {
            return Err(OrderError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, OrderError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(OrderError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    /// The image `v·M` of a row vector of length `rows`.
    pub fn row_image(&self, v: &[i64]) -> Result<Vec<i64>, OrderError> {
        if v.len() != self.rows {
            return Err(OrderError::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = vec![0i128; self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for c in 0..self.cols {
                out[c] += (vi as i128) * (self.entry(i, c) as i128);
            }
        }
        out.into_iter()
            .map(|x| i64::try_from(x).map_err(|_| OrderError::Overflow))
            .collect()
    }
}

/// Lexicographic comparison with the last-dominant convention:
/// `a < b` iff the last nonzero entry of `b - a` is positive.
fn lex_cmp(a: &[i64], b: &[i64]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// A total order on exponent vectors compatible with addition.
///
/// * `Lex` — pure lexicographic order, first variable smallest.
/// * `WeightLex(w)` — compare weighted degrees `<w, ·>` first, break ties
///   with `Lex`. Always admissible on `ℕ^n` because the weights are
///   strictly positive.
/// * `MatrixLex(M)` — compare images `a·M` lexicographically, break ties
///   with `Lex` on the arguments. Admissibility (zero minimal on `ℕ^n`) is
///   not assumed; callers that rely on it check [`Self::is_zero_minimal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdmissibleOrder {
    Lex,
    WeightLex(WeightVector),
    MatrixLex(IntMatrix),
}

impl AdmissibleOrder {
    /// Compare two exponent vectors of equal length.
    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Result<Ordering, OrderError> {
        if a.len() != b.len() {
            return Err(OrderError::DimensionMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        match self {
            AdmissibleOrder::Lex => Ok(lex_cmp(a.entries(), b.entries())),
            AdmissibleOrder::WeightLex(w) => {
                let da = w.degree(a)?;
                let db = w.degree(b)?;
                Ok(da
                    .cmp(&db)
                    .then_with(|| lex_cmp(a.entries(), b.entries())))
            }
            AdmissibleOrder::MatrixLex(m) => {
                let ia = m.row_image(a.entries())?;
                let ib = m.row_image(b.entries())?;
                Ok(lex_cmp(&ia, &ib).then_with(|| lex_cmp(a.entries(), b.entries())))
            }
        }
    }

    /// The degree map refined by this order: the argument itself for `Lex`,
    /// the weighted degree for `WeightLex`, the matrix image for `MatrixLex`.
    pub fn degree_image(&self, a: &ExponentVector) -> Result<Vec<i64>, OrderError> {
        match self {
            AdmissibleOrder::Lex => Ok(a.entries().to_vec()),
            AdmissibleOrder::WeightLex(w) => Ok(vec![w.degree(a)?]),
            AdmissibleOrder::MatrixLex(m) => m.row_image(a.entries()),
        }
    }

    /// Whether `0` is the minimum on `ℕ^n`. By compatibility with addition
    /// it suffices to check the basis vectors.
    pub fn is_zero_minimal(&self, n: usize) -> Result<bool, OrderError> {
        let zero = ExponentVector::zero(n);
        for i in 0..n {
            if self.compare(&zero, &ExponentVector::unit(n, i))? != Ordering::Less {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for AdmissibleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdmissibleOrder::Lex => write!(f, "lex"),
            AdmissibleOrder::WeightLex(w) => write!(f, "weightlex{w}"),
            AdmissibleOrder::MatrixLex(m) => {
                write!(f, "matrixlex[")?;
                for r in 0..m.rows() {
                    if r > 0 {
                        write!(f, "; ")?;
                    }
                    for c in 0..m.cols() {
                        if c > 0 {
                            write!(f, " ")?;
                        }
                        write!(f, "{}", m.entry(r, c))?;
                    }
                }
                write!(f, "]")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(entries: &[i64]) -> ExponentVector {
        ExponentVector::new(entries.to_vec())
    }

    #[test]
    fn lex_basics() {
        let o = AdmissibleOrder::Lex;
        assert_eq!(o.compare(&ev(&[0, 0]), &ev(&[3, 1])).unwrap(), Ordering::Less);
        assert_eq!(o.compare(&ev(&[1, 0]), &ev(&[0, 1])).unwrap(), Ordering::Less);
        assert_eq!(o.compare(&ev(&[2, 1]), &ev(&[2, 1])).unwrap(), Ordering::Equal);
        assert_eq!(
            o.compare(&ev(&[0, 2]), &ev(&[5, 1])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn weightlex_ties_break_by_lex() {
        let w = WeightVector::new(vec![1, 2]).unwrap();
        let o = AdmissibleOrder::WeightLex(w);
        // equal weighted degrees 2 = 2; the first variable is smaller
        assert_eq!(o.compare(&ev(&[2, 0]), &ev(&[0, 1])).unwrap(), Ordering::Less);
        assert_eq!(
            o.compare(&ev(&[0, 1]), &ev(&[1, 0])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn matrixlex_follows_image_then_argument() {
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![1, 2]]).unwrap();
        let o = AdmissibleOrder::MatrixLex(m);
        // images (1,1) vs (1,2)
        assert_eq!(o.compare(&ev(&[1, 0]), &ev(&[0, 1])).unwrap(), Ordering::Less);
        // identity matrix reduces to lex
        let id = AdmissibleOrder::MatrixLex(IntMatrix::identity(2));
        assert_eq!(
            id.compare(&ev(&[1, 0]), &ev(&[0, 1])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn degree_images() {
        let w = WeightVector::new(vec![2, 3]).unwrap();
        assert_eq!(
            AdmissibleOrder::WeightLex(w).degree_image(&ev(&[2, 1])).unwrap(),
            vec![7]
        );
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![1, 2]]).unwrap();
        assert_eq!(
            AdmissibleOrder::MatrixLex(m).degree_image(&ev(&[2, 0])).unwrap(),
            vec![2, 2]
        );
    }

    #[test]
    fn weight_vector_rejects_nonpositive() {
        assert_eq!(
            WeightVector::new(vec![1, 0]),
            Err(OrderError::NonPositiveWeight { index: 1, value: 0 })
        );
        assert!(WeightVector::new(vec![3, 1, 2]).is_ok());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let o = AdmissibleOrder::Lex;
        assert_eq!(
            o.compare(&ev(&[1]), &ev(&[1, 2])),
            Err(OrderError::DimensionMismatch {
                expected: 1,
                found: 2
            })
        );
        assert!(dot(&[1, 2], &[1]).is_err());
    }

    #[test]
    fn zero_minimality() {
        assert!(AdmissibleOrder::Lex.is_zero_minimal(3).unwrap());
        let w = WeightVector::new(vec![2, 1]).unwrap();
        assert!(AdmissibleOrder::WeightLex(w).is_zero_minimal(2).unwrap());
        // a matrix with a negative column is not zero-minimal
        let m = IntMatrix::from_rows(&[vec![-1], vec![1]]).unwrap();
        assert!(!AdmissibleOrder::MatrixLex(m).is_zero_minimal(2).unwrap());
    }

    fn vec_strategy(n: usize) -> impl Strategy<Value = ExponentVector> {
        proptest::collection::vec(0i64..6, n).prop_map(ExponentVector::new)
    }

    fn order_strategy(n: usize) -> impl Strategy<Value = AdmissibleOrder> {
        prop_oneof![
            Just(AdmissibleOrder::Lex),
            proptest::collection::vec(1i64..5, n)
                .prop_map(|w| AdmissibleOrder::WeightLex(WeightVector::new(w).unwrap())),
            proptest::collection::vec(-3i64..4, n * 2).prop_map(move |d| {
                AdmissibleOrder::MatrixLex(IntMatrix::new(n, 2, d).unwrap())
            }),
        ]
    }

    proptest! {
        #[test]
        fn total_and_reflexive((a, b, o) in (3usize..=4).prop_flat_map(|n| {
            (vec_strategy(n), vec_strategy(n), order_strategy(n))
        })) {
            let ab = o.compare(&a, &b).unwrap();
            let ba = o.compare(&b, &a).unwrap();
            prop_assert_eq!(ab, ba.reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
        }

        #[test]
        fn compatible_with_addition((a, b, c, o) in (3usize..=4).prop_flat_map(|n| {
            (vec_strategy(n), vec_strategy(n), vec_strategy(n), order_strategy(n))
        })) {
            let before = o.compare(&a, &b).unwrap();
            let after = o.compare(&a.add(&c).unwrap(), &b.add(&c).unwrap()).unwrap();
            prop_assert_eq!(before, after);
        }

        #[test]
        fn transitive((a, b, c, o) in (3usize..=4).prop_flat_map(|n| {
            (vec_strategy(n), vec_strategy(n), vec_strategy(n), order_strategy(n))
        })) {
            let mut v = [a, b, c];
            // insertion sort via the order; then adjacent comparisons must agree
            v.sort_by(|x, y| o.compare(x, y).unwrap());
            prop_assert_ne!(o.compare(&v[0], &v[1]).unwrap(), Ordering::Greater);
            prop_assert_ne!(o.compare(&v[1], &v[2]).unwrap(), Ordering::Greater);
            prop_assert_ne!(o.compare(&v[0], &v[2]).unwrap(), Ordering::Greater);
        }

        #[test]
        fn zero_minimal_for_positive_orders((a, o) in (3usize..=4).prop_flat_map(|n| {
            (vec_strategy(n), prop_oneof![
                Just(AdmissibleOrder::Lex),
                proptest::collection::vec(1i64..5, n)
                    .prop_map(|w| AdmissibleOrder::WeightLex(WeightVector::new(w).unwrap())),
            ])
        })) {
            let zero = ExponentVector::zero(a.len());
            prop_assert_ne!(o.compare(&zero, &a).unwrap(), Ordering::Greater);
        }
    }
}

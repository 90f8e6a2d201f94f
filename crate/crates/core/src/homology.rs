//! q-Koszul complexes for variable-generated ideals of quantum affine
//! space, grade computation through dual cohomology, and Cohen–Macaulay
//! balance checks.
//!
//! For a subset `S = {i_1 < .. < i_c}` of the variables of a non-localized
//! quantum space `R`, the module `R/⟨x_i : i ∈ S⟩` has a free resolution
//! with bases indexed by subsets `T ⊆ S`:
//!
//! ```text
//! d(e_T) = Σ_{a ∈ T} (-1)^{pos(a,T)} (Π_{x ∈ T, x > a} q_xa) · x_a · e_{T∖a}.
//! ```
//!
//! The unit twists make consecutive differentials compose to zero, which
//! [`verify_complex`] checks exactly rather than assuming. Dualizing into
//! the ring turns every matrix around into a left-multiplication on
//! columns; each internal degree cuts out a finite-dimensional piece whose
//! exact rank yields the cohomology dimensions, the least nonvanishing of
//! which is the grade `j` of the module. Cohen–Macaulayness at a subset is
//! the balance `j + GKdim(R/⟨x_i⟩) = GKdim(R)`.

use crate::orders::ExponentVector;
use crate::qspace::{GkDim, QSpaceError, QuantumSpacePresentation, TorusElement};
use crate::scalars::Scalar;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_integer::binomial;

/// Errors raised while building complexes or computing grades.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomologyError {
    /// The variable subset is empty.
    EmptySubset,
    /// A subset index is not a variable of the space.
    IndexOutOfRange { index: usize, num_vars: usize },
    /// A subset index occurs twice.
    DuplicateIndex { index: usize },
    /// The space is localized; resolutions are built for `t = 0` only.
    Localized,
    /// Two consecutive differentials do not compose to zero.
    ComplexBroken { degree: usize },
    /// The scan window must reach past the resolution length.
    BoundTooSmall { degree_bound: i64, minimum: i64 },
    /// Every scanned cohomology dimension vanished; the window is too
    /// small to determine the grade.
    Inconclusive { degree_bound: i64 },
    /// Monomial arithmetic failed.
    QSpace(QSpaceError),
}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::EmptySubset => write!(f, "the variable subset is empty"),
            HomologyError::IndexOutOfRange { index, num_vars } => {
                write!(f, "index {} exceeds the {num_vars} variables", index + 1)
            }
            HomologyError::DuplicateIndex { index } => {
                write!(f, "index {} occurs twice", index + 1)
            }
            HomologyError::Localized => {
                write!(f, "resolutions need a non-localized space (t = 0)")
            }
            HomologyError::ComplexBroken { degree } => {
                write!(f, "differentials {degree} and {} do not compose to zero", degree - 1)
            }
            HomologyError::BoundTooSmall {
                degree_bound,
                minimum,
            } => write!(
                f,
                "degree bound {degree_bound} is below the minimum {minimum}"
            ),
            HomologyError::Inconclusive { degree_bound } => write!(
                f,
                "no cohomology found up to internal degree {degree_bound}; raise the bound"
            ),
            HomologyError::QSpace(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for HomologyError {}

impl From<QSpaceError> for HomologyError {
    fn from(e: QSpaceError) -> Self {
        HomologyError::QSpace(e)
    }
}

/// A matrix over the quantum space, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<TorusElement>,
}

impl TorusMatrix {
    fn zero(space: &QuantumSpacePresentation, rows: usize, cols: usize) -> Self {
        TorusMatrix {
            rows,
            cols,
            entries: vec![TorusElement::zero(space.num_vars()); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &TorusElement {
        &self.entries[r * self.cols + c]
    }

    fn entry_mut(&mut self, r: usize, c: usize) -> &mut TorusElement {
        &mut self.entries[r * self.cols + c]
    }

    /// Matrix product in the ring's multiplication order: the composite of
    /// `self: F → G` after `other: G → H` on row vectors is
    /// `(fg)_{r,c} = Σ_k self_{r,k} · other_{k,c}`.
    pub fn compose(
        &self,
        space: &QuantumSpacePresentation,
        other: &TorusMatrix,
    ) -> Result<TorusMatrix, QSpaceError> {
        assert_eq!(self.cols, other.rows, "matrix dimensions disagree");
        let mut out = TorusMatrix::zero(space, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = TorusElement::zero(space.num_vars());
                for k in 0..self.cols {
                    let prod = space.multiply_torus(self.entry(r, k), other.entry(k, c))?;
                    acc = acc.add(&prod);
                }
                *out.entry_mut(r, c) = acc;
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(TorusElement::is_zero)
    }
}

/// The resolution of `R/⟨x_i : i ∈ S⟩` by free left modules with bases
/// indexed by the subsets of `S`.
#[derive(Debug, Clone)]
pub struct QKoszulComplex {
    space: QuantumSpacePresentation,
    subset: Vec<usize>,
    /// `differentials[k]` is the matrix of `d_{k+1}: F_{k+1} → F_k`, with
    /// rows indexed by the `(k+1)`-subsets and columns by the `k`-subsets,
    /// both in lexicographic order.
    differentials: Vec<TorusMatrix>,
}

impl QKoszulComplex {
    pub fn space(&self) -> &QuantumSpacePresentation {
        &self.space
    }

    /// The sorted generating subset (0-based indices).
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// Length of the resolution.
    pub fn length(&self) -> usize {
        self.subset.len()
    }

    /// The matrix of `d_k: F_k → F_{k-1}` for `1 ≤ k ≤ length`.
    pub fn differential(&self, k: usize) -> &TorusMatrix {
        &self.differentials[k - 1]
    }

    /// Rank of the free module `F_k`.
    pub fn rank(&self, k: usize) -> usize {
        binomial(self.subset.len() as u64, k as u64) as usize
    }
}

/// All `k`-element subsets of `set`, lexicographically.
fn k_subsets(set: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k > set.len() {
        return Vec::new();
    }
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (pos, &first) in set.iter().enumerate() {
        for mut rest in k_subsets(&set[pos + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Builds the resolution for the ideal generated by `{x_i : i ∈ subset}`.
pub fn build_qkoszul(
    space: &QuantumSpacePresentation,
    subset: &[usize],
) -> Result<QKoszulComplex, HomologyError> {
    if space.num_inverted() != 0 {
        return Err(HomologyError::Localized);
    }
    if subset.is_empty() {
        return Err(HomologyError::EmptySubset);
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(HomologyError::DuplicateIndex { index: pair[0] });
        }
    }
    if let Some(&big) = sorted.last() {
        if big >= space.num_vars() {
            return Err(HomologyError::IndexOutOfRange {
                index: big,
                num_vars: space.num_vars(),
            });
        }
    }
    let c = sorted.len();
    let mut differentials = Vec::with_capacity(c);
    for k in 1..=c {
        let sources = k_subsets(&sorted, k);
        let targets = k_subsets(&sorted, k - 1);
        let target_index: BTreeMap<&[usize], usize> = targets
            .iter()
            .enumerate()
            .map(|(idx, t)| (t.as_slice(), idx))
            .collect();
        let mut m = TorusMatrix::zero(space, sources.len(), targets.len());
        for (row, t) in sources.iter().enumerate() {
            for (pos, &a) in t.iter().enumerate() {
                let mut twist = Scalar::one();
                for &x in &t[pos + 1..] {
                    twist = twist.mul(space.q(x, a));
                }
                if pos % 2 == 1 {
                    twist = twist.neg();
                }
                let rest: Vec<usize> = t
                    .iter()
                    .copied()
                    .filter(|&x| x != a)
                    .collect();
                let col = target_index[rest.as_slice()];
                let mut e = vec![0i64; space.num_vars()];
                e[a] = 1;
                let term = space.monomial(&e, twist)?;
                *m.entry_mut(row, col) = m.entry(row, col).add(&term);
            }
        }
        differentials.push(m);
    }
    Ok(QKoszulComplex {
        space: space.clone(),
        subset: sorted,
        differentials,
    })
}

/// Exact check that all consecutive differentials compose to zero.
pub fn verify_complex(complex: &QKoszulComplex) -> Result<bool, HomologyError> {
    for k in 2..=complex.length() {
        let composite = complex
            .differential(k)
            .compose(&complex.space, complex.differential(k - 1))?;
        if !composite.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim_k R_n` for the polynomial part of the space: monomials of total
/// degree `n` in `s` variables.
fn dim_degree(s: usize, n: i64) -> usize {
    if n < 0 {
        return 0;
    }
    if s == 0 {
        return if n == 0 { 1 } else { 0 };
    }
    binomial(n as u64 + s as u64 - 1, s as u64 - 1) as usize
}

/// The monomials of total degree `n`, lexicographically.
fn monomials_of_degree(s: usize, n: i64) -> Vec<ExponentVector> {
    fn rec(s: usize, n: i64, prefix: &mut Vec<i64>, out: &mut Vec<ExponentVector>) {
        if prefix.len() + 1 == s {
            prefix.push(n);
            out.push(ExponentVector::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for v in 0..=n {
            prefix.push(v);
            rec(s, n - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n < 0 || s == 0 {
        return out;
    }
    rec(s, n, &mut Vec::new(), &mut out);
    out
}

/// Rank of a sparse matrix over the scalar field, columns given as maps
/// from row index to nonzero entry.
fn sparse_rank(columns: Vec<BTreeMap<usize, Scalar>>) -> usize {
    // Pivot columns are normalized to 1 at their pivot row, which is the
    // smallest row they touch; reducing against them strictly raises the
    // smallest row of the working column, so elimination terminates.
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Scalar>> = BTreeMap::new();
    let mut rank = 0;
    for mut col in columns {
        loop {
            let Some((&r, head)) = col.iter().next() else {
                break;
            };
            match pivots.get(&r) {
                Some(p) => {
                    let factor = head.clone();
                    for (&row, val) in p {
                        let delta = factor.mul(val);
                        let updated = match col.get(&row) {
                            Some(existing) => existing.sub(&delta),
                            None => delta.neg(),
                        };
                        if updated.is_zero() {
                            col.remove(&row);
                        } else {
                            col.insert(row, updated);
                        }
                    }
                }
                None => {
                    let inv = head.inv().expect("leading entry is nonzero");
                    let normalized = col.iter().map(|(&k, v)| (k, v.mul(&inv))).collect();
                    pivots.insert(r, normalized);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// The dual map `δ^k` at internal degree `d` as a scalar matrix in column
/// form. Dual generators `(e_T)^*` sit in degree `-|T|`, so a degree-`d`
/// element of the dual of `F_k` stores a ring element of degree `d + k`
/// per `k`-subset; `δ^k` left-multiplies the column by the matrix of
/// `d_{k+1}`.
fn graded_dual_map(
    complex: &QKoszulComplex,
    k: usize,
    d: i64,
) -> Result<Vec<BTreeMap<usize, Scalar>>, HomologyError> {
    let space = &complex.space;
    let s = space.num_vars();
    let c = complex.length();
    if k >= c {
        return Ok(Vec::new());
    }
    let m = complex.differential(k + 1);
    let source_monomials = monomials_of_degree(s, d + k as i64);
    let target_monomials = monomials_of_degree(s, d + k as i64 + 1);
    let target_index: BTreeMap<&ExponentVector, usize> = target_monomials
        .iter()
        .enumerate()
        .map(|(idx, e)| (e, idx))
        .collect();
    let mut columns = Vec::with_capacity(m.cols() * source_monomials.len());
    for u in 0..m.cols() {
        for gamma in &source_monomials {
            let phi = space.monomial(gamma.entries(), Scalar::one())?;
            let mut column = BTreeMap::new();
            for t in 0..m.rows() {
                let entry = m.entry(t, u);
                if entry.is_zero() {
                    continue;
                }
                let image = space.multiply_torus(entry, &phi)?;
                for (e, coeff) in image.terms() {
                    let mono = target_index[e];
                    column.insert(t * target_monomials.len() + mono, coeff.clone());
                }
            }
            columns.push(column);
        }
    }
    Ok(columns)
}

/// Cohomology dimensions of the dualized complex over a window of
/// internal degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtTable {
    /// First internal degree of the window (always `-length`).
    pub min_degree: i64,
    /// Last internal degree of the window.
    pub max_degree: i64,
    /// `dims[k][idx]` is `dim Ext^k` at internal degree `min_degree + idx`.
    pub dims: Vec<Vec<usize>>,
}

impl ExtTable {
    pub fn dim(&self, k: usize, d: i64) -> usize {
        if d < self.min_degree || d > self.max_degree {
            return 0;
        }
        self.dims[k][(d - self.min_degree) as usize]
    }

    /// The nonzero entries of row `k` as `(internal degree, dimension)`.
    pub fn nonzero_in(&self, k: usize) -> Vec<(i64, usize)> {
        self.dims[k]
            .iter()
            .enumerate()
            .filter(|(_, &dim)| dim > 0)
            .map(|(idx, &dim)| (self.min_degree + idx as i64, dim))
            .collect()
    }
}

/// The grade together with the scanned dimension table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradeResult {
    /// The least homological degree with nonvanishing dual cohomology.
    pub grade: usize,
    pub table: ExtTable,
}

/// Computes the grade of `R/⟨x_i : i ∈ subset⟩`: the complex is built and
/// verified, dualized into the ring, and the cohomology dimensions of
/// every internal degree in `[-c, degree_bound]` are found by exact rank
/// computation. `None` falls back to the bound `c + s + 2`.
pub fn grade_via_ext(
    space: &QuantumSpacePresentation,
    subset: &[usize],
    degree_bound: Option<i64>,
) -> Result<GradeResult, HomologyError> {
    let complex = build_qkoszul(space, subset)?;
    let c = complex.length();
    let s = space.num_vars();
    let d_max = degree_bound.unwrap_or((c + s + 2) as i64);
    let minimum = c as i64 + 1;
    if d_max < minimum {
        return Err(HomologyError::BoundTooSmall {
            degree_bound: d_max,
            minimum,
        });
    }
    if !verify_complex(&complex)? {
        let degree = (2..=c)
            .find(|&k| {
                complex
                    .differential(k)
                    .compose(space, complex.differential(k - 1))
                    .map(|m| !m.is_zero())
                    .unwrap_or(true)
            })
            .unwrap_or(2);
        return Err(HomologyError::ComplexBroken { degree });
    }
    let min_degree = -(c as i64);
    let width = (d_max - min_degree + 1) as usize;
    // ranks[k][idx] = rank of δ^k at internal degree min_degree + idx
    let mut ranks = vec![vec![0usize; width]; c + 1];
    for k in 0..c {
        for idx in 0..width {
            let d = min_degree + idx as i64;
            let columns = graded_dual_map(&complex, k, d)?;
            ranks[k][idx] = sparse_rank(columns);
        }
    }
    let mut dims = vec![vec![0usize; width]; c + 1];
    for k in 0..=c {
        for idx in 0..width {
            let d = min_degree + idx as i64;
            let total = complex.rank(k) * dim_degree(s, d + k as i64);
            let out_rank = if k < c { ranks[k][idx] } else { 0 };
            let in_rank = if k > 0 { ranks[k - 1][idx] } else { 0 };
            dims[k][idx] = total - out_rank - in_rank;
        }
    }
    let table = ExtTable {
        min_degree,
        max_degree: d_max,
        dims,
    };
    let grade = (0..=c).find(|&k| table.dims[k].iter().any(|&dim| dim > 0));
    match grade {
        Some(grade) => Ok(GradeResult { grade, table }),
        None => Err(HomologyError::Inconclusive {
            degree_bound: d_max,
        }),
    }
}

/// Outcome of the Cohen–Macaulay balance check at one subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmReport {
    pub subset: Vec<usize>,
    pub grade: usize,
    pub quotient_gkdim: GkDim,
    /// GK dimension of the whole space (its variable count).
    pub total_gkdim: usize,
    /// Whether `grade + quotient = total` held.
    pub balanced: bool,
    pub grade_result: GradeResult,
}

/// Checks `j + GKdim(R/⟨x_i : i ∈ subset⟩) = GKdim(R)`, combining the
/// homological grade with the combinatorial quotient dimension.
pub fn cm_check(
    space: &QuantumSpacePresentation,
    subset: &[usize],
    degree_bound: Option<i64>,
) -> Result<CmReport, HomologyError> {
    let grade_result = grade_via_ext(space, subset, degree_bound)?;
    let s = space.num_vars();
    let generators: Vec<ExponentVector> = subset
        .iter()
        .map(|&i| ExponentVector::unit(s, i))
        .collect();
    let quotient_gkdim = space.monomial_quotient_gkdim(&generators)?;
    let balanced = match quotient_gkdim {
        GkDim::Finite(d) => grade_result.grade + d == s,
        GkDim::NegInfinity => false,
    };
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    Ok(CmReport {
        subset: sorted,
        grade: grade_result.grade,
        quotient_gkdim,
        total_gkdim: s,
        balanced,
        grade_result,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform(s: usize) -> QuantumSpacePresentation {
        QuantumSpacePresentation::uniform(s, 0, Scalar::q()).unwrap()
    }

    fn classical(s: usize) -> QuantumSpacePresentation {
        QuantumSpacePresentation::uniform(s, 0, Scalar::one()).unwrap()
    }

    /// A space where distinct generator pairs get multiplicatively
    /// independent units.
    fn two_parameter() -> QuantumSpacePresentation {
        let units = [Scalar::q(), Scalar::one().add(&Scalar::q()), Scalar::q_pow(2)];
        let mut q = vec![vec![Scalar::one(); 3]; 3];
        let mut next = 0;
        for j in 0..3 {
            for i in 0..j {
                q[j][i] = units[next].clone();
                q[i][j] = units[next].inv().unwrap();
                next += 1;
            }
        }
        QuantumSpacePresentation::new(3, 0, q).unwrap()
    }

    #[test]
    fn subset_enumeration_is_lexicographic() {
        let subs = k_subsets(&[0, 1, 2], 2);
        assert_eq!(subs, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(k_subsets(&[0, 1], 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn single_variable_complex() {
        let a = uniform(2);
        let complex = build_qkoszul(&a, &[0]).unwrap();
        assert_eq!(complex.length(), 1);
        assert_eq!(complex.differential(1).rows(), 1);
        assert_eq!(complex.differential(1).cols(), 1);
        assert_eq!(complex.differential(1).entry(0, 0), &a.var(0));
        assert!(verify_complex(&complex).unwrap());
    }

    #[test]
    fn quantum_plane_complex_needs_the_twist() {
        let a = uniform(2);
        let complex = build_qkoszul(&a, &[0, 1]).unwrap();
        assert_eq!(complex.rank(0), 1);
        assert_eq!(complex.rank(1), 2);
        assert_eq!(complex.rank(2), 1);
        assert!(verify_complex(&complex).unwrap());
        // d(e_{01}) = q21 x1 e_{1} - x2 e_{0}: the q21 twist is what makes
        // the composite vanish, so removing it must break the complex.
        let d2 = complex.differential(2);
        let twisted = d2.entry(0, 1);
        assert_eq!(twisted, &a.monomial(&[1, 0], Scalar::q()).unwrap());
        let mut broken = complex.clone();
        *broken.differentials[1].entry_mut(0, 1) =
            a.monomial(&[1, 0], Scalar::one()).unwrap();
        assert!(!verify_complex(&broken).unwrap());
    }

    #[test]
    fn full_three_variable_complex_verifies() {
        for space in [uniform(3), classical(3), two_parameter()] {
            let complex = build_qkoszul(&space, &[0, 1, 2]).unwrap();
            assert_eq!(
                (1..=3).map(|k| complex.rank(k)).collect::<Vec<_>>(),
                vec![3, 3, 1]
            );
            assert!(verify_complex(&complex).unwrap());
        }
    }

    #[test]
    fn build_rejects_bad_subsets() {
        let a = uniform(2);
        assert!(matches!(
            build_qkoszul(&a, &[]),
            Err(HomologyError::EmptySubset)
        ));
        assert!(matches!(
            build_qkoszul(&a, &[0, 0]),
            Err(HomologyError::DuplicateIndex { index: 0 })
        ));
        assert!(matches!(
            build_qkoszul(&a, &[2]),
            Err(HomologyError::IndexOutOfRange { index: 2, .. })
        ));
        let localized = QuantumSpacePresentation::uniform(2, 1, Scalar::q()).unwrap();
        assert!(matches!(
            build_qkoszul(&localized, &[0]),
            Err(HomologyError::Localized)
        ));
    }

    #[test]
    fn grade_of_one_variable_in_the_plane() {
        let a = uniform(2);
        let result = grade_via_ext(&a, &[0], None).unwrap();
        assert_eq!(result.grade, 1);
        // Ext^0 vanishes everywhere; Ext^1 is one-dimensional in every
        // internal degree from -1 on (the shifted quotient by x1).
        assert!(result.table.nonzero_in(0).is_empty());
        let expected: Vec<(i64, usize)> = (-1..=result.table.max_degree)
            .map(|d| (d, 1))
            .collect();
        assert_eq!(result.table.nonzero_in(1), expected);
    }

    #[test]
    fn grade_matches_subset_size() {
        for s in 1..=3usize {
            let spaces = [uniform(s), classical(s)];
            for space in spaces {
                for mask in 1u32..(1 << s) {
                    let subset: Vec<usize> =
                        (0..s).filter(|&i| mask & (1 << i) != 0).collect();
                    let result = grade_via_ext(&space, &subset, None).unwrap();
                    assert_eq!(
                        result.grade,
                        subset.len(),
                        "s={s} subset={subset:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn ext_dimensions_match_classical_koszul_answers() {
        // For c chosen variables out of s, the only cohomology is Ext^c,
        // of dimension equal to the count of degree-(d+c) monomials in the
        // remaining s-c variables — classically, and for generic q alike.
        let s = 3;
        for subset in [vec![0], vec![0, 1], vec![0, 1, 2], vec![1, 2]] {
            let c = subset.len();
            let quantum = grade_via_ext(&uniform(s), &subset, None).unwrap();
            let commutative = grade_via_ext(&classical(s), &subset, None).unwrap();
            assert_eq!(quantum.table, commutative.table, "subset {subset:?}");
            for k in 0..c {
                assert!(quantum.table.nonzero_in(k).is_empty());
            }
            for (d, dim) in quantum.table.nonzero_in(c) {
                assert_eq!(dim, dim_degree(s - c, d + c as i64), "subset {subset:?}");
            }
        }
    }

    #[test]
    fn top_cohomology_is_one_dimensional_at_minus_s() {
        for s in 1..=3usize {
            let space = uniform(s);
            let subset: Vec<usize> = (0..s).collect();
            let result = grade_via_ext(&space, &subset, None).unwrap();
            assert_eq!(result.grade, s);
            assert_eq!(result.table.nonzero_in(s), vec![(-(s as i64), 1)]);
        }
    }

    #[test]
    fn euler_characteristic_is_rank_free() {
        // Alternating sums of cohomology dimensions must equal the
        // alternating sums of the cochain dimensions, whatever the ranks.
        let space = two_parameter();
        let subset = vec![0, 1, 2];
        let result = grade_via_ext(&space, &subset, None).unwrap();
        let c = subset.len();
        let s = space.num_vars();
        for d in result.table.min_degree..=result.table.max_degree {
            let mut euler = 0i64;
            let mut expected = 0i64;
            for k in 0..=c {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                euler += sign * result.table.dim(k, d) as i64;
                expected += sign
                    * (binomial(c as u64, k as u64) as i64)
                    * dim_degree(s, d + k as i64) as i64;
            }
            assert_eq!(euler, expected, "degree {d}");
        }
    }

    #[test]
    fn degree_bound_validation() {
        let a = uniform(2);
        assert!(matches!(
            grade_via_ext(&a, &[0, 1], Some(2)),
            Err(HomologyError::BoundTooSmall {
                degree_bound: 2,
                minimum: 3
            })
        ));
    }

    #[test]
    fn cm_balance_holds_for_small_cases() {
        // (s, subset) → grade + (s - |subset|) = s
        let cases: [(usize, Vec<usize>); 3] =
            [(3, vec![0, 1]), (2, vec![0]), (1, vec![0])];
        for (s, subset) in cases {
            let report = cm_check(&uniform(s), &subset, None).unwrap();
            assert!(report.balanced, "s={s} subset={subset:?}");
            assert_eq!(report.grade, subset.len());
            assert_eq!(report.quotient_gkdim, GkDim::Finite(s - subset.len()));
            assert_eq!(report.total_gkdim, s);
        }
    }

    #[test]
    fn cm_balance_with_independent_parameters() {
        let space = two_parameter();
        for mask in 1u32..8 {
            let subset: Vec<usize> = (0..3).filter(|&i| mask & (1 << i) != 0).collect();
            let report = cm_check(&space, &subset, None).unwrap();
            assert!(report.balanced, "subset {subset:?}");
        }
    }
}

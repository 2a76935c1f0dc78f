//! Integral homology of finitely generated differential graded algebras.
//!
//! The chain complex in each degree is the free abelian group on the words of
//! that degree (products of generators; the empty word spans degree zero).
//! This module enumerates those word bases, assembles the integer boundary
//! matrices, reduces them to Smith normal form with exact `BigInt`
//! arithmetic, and answers two questions:
//!
//! * [`homology`] — the free rank and torsion coefficients of the homology
//!   group in each degree up to a requested cut-off, and
//! * [`class_is_zero`] — whether a given cycle is a boundary, together with
//!   an explicit preimage (a witness `w` with `d w = z`) when it is.
//!
//! For algebras whose generators are all indexed by vertex sets (simplices or
//! multisets) and whose differential preserves the vertex content of words,
//! [`class_is_zero`] restricts the linear algebra to the words with the same
//! content as the input cycle. That block decomposition is verified, not
//! assumed: the content-preservation property is checked generator by
//! generator at call time, and the solver falls back to the full degree basis
//! whenever it fails to hold.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Coeff, GradedElement, Word};
use crate::cobar::DgAlgebra;
use crate::complex::Multiset;
use crate::error::{Error, Result};

/// A dense matrix of arbitrary-precision integers, stored row-major.
///
/// Sizes stay modest here (bases of graded pieces), and Smith reduction
/// causes fill-in anyway, so a dense layout is the simplest honest choice.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Coeff>,
}

impl IntMatrix {
    /// The zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Coeff::zero(); rows * cols],
        }
    }

    /// The identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set_entry(i, i, Coeff::one());
        }
        m
    }

    /// Build a matrix from a row-major table of `i64` entries (test helper
    /// friendly; all rows must have equal length).
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set_entry(i, j, Coeff::from(*v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Coeff {
        &self.data[i * self.cols + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, value: Coeff) {
        self.data[i * self.cols + j] = value;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[target] += factor * row[source]`.
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &Coeff) {
        for j in 0..self.cols {
            let delta = factor * self.entry(source, j);
            if !delta.is_zero() {
                let v = self.entry(target, j) + delta;
                self.set_entry(target, j, v);
            }
        }
    }

    /// `col[target] += factor * col[source]`.
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &Coeff) {
        for i in 0..self.rows {
            let delta = factor * self.entry(i, source);
            if !delta.is_zero() {
                let v = self.entry(i, target) + delta;
                self.set_entry(i, target, v);
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.entry(i, j);
            self.set_entry(i, j, v);
        }
    }

    /// Matrix product `self * other`.
    pub fn matmul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.entry(i, j) + a * other.entry(k, j);
                    out.set_entry(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix–vector product `self * v`.
    pub fn apply(&self, v: &[Coeff]) -> Vec<Coeff> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.entry(i, j) * &v[j])
                    .fold(Coeff::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    /// Number of entries that are not zero.
    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// The result of reducing an integer matrix to Smith normal form.
///
/// `left * M * right` is the diagonal matrix whose leading diagonal entries
/// are `invariant_factors` (positive, each dividing the next) followed by
/// zeros. The transforms are products of elementary row/column operations,
/// so both are unimodular. They are only stored when requested.
pub struct SmithNormalForm {
    rows: usize,
    cols: usize,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
    /// The nonzero diagonal, positive and in divisibility order.
    pub invariant_factors: Vec<Coeff>,
    /// Row transform `U`, when requested.
    pub left: Option<IntMatrix>,
    /// Column transform `V`, when requested.
    pub right: Option<IntMatrix>,
}

impl SmithNormalForm {
    /// The full diagonal matrix `D` with the shape of the input.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.rows, self.cols);
        for (i, f) in self.invariant_factors.iter().enumerate() {
            d.set_entry(i, i, f.clone());
        }
        d
    }
}

/// Reduce `matrix` to Smith normal form over the integers.
///
/// Pivots are chosen as the entry of smallest absolute value in the
/// remaining submatrix, which keeps coefficient growth in check. Row and
/// column clearing uses truncated division, so every remainder is strictly
/// smaller in absolute value than the pivot and the reduction terminates.
/// After each pivot is isolated, a divisibility sweep folds any entry the
/// pivot does not divide back into the pivot row, which guarantees the
/// divisibility chain of the invariant factors.
pub fn smith_normal_form(matrix: &IntMatrix, with_transforms: bool) -> SmithNormalForm {
    let mut m = matrix.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut left = with_transforms.then(|| IntMatrix::identity(rows));
    let mut right = with_transforms.then(|| IntMatrix::identity(cols));

    let mut t = 0;
    'pivot: while t < rows.min(cols) {
        // Smallest nonzero entry of the trailing submatrix becomes the pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m.entry(i, j).is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => m.entry(i, j).abs() < m.entry(pi, pj).abs(),
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        if let Some(u) = left.as_mut() {
            u.swap_rows(t, pi);
        }
        if let Some(v) = right.as_mut() {
            v.swap_cols(t, pj);
        }

        // Clear the pivot column. A nonzero remainder is strictly smaller
        // than the pivot, so restarting re-selects a smaller pivot.
        for i in t + 1..rows {
            if m.entry(i, t).is_zero() {
                continue;
            }
            let q = m.entry(i, t) / m.entry(t, t);
            if !q.is_zero() {
                let neg_q = -&q;
                m.add_row_multiple(i, t, &neg_q);
                if let Some(u) = left.as_mut() {
                    u.add_row_multiple(i, t, &neg_q);
                }
            }
            if !m.entry(i, t).is_zero() {
                continue 'pivot;
            }
        }

        // Clear the pivot row.
        for j in t + 1..cols {
            if m.entry(t, j).is_zero() {
                continue;
            }
            let q = m.entry(t, j) / m.entry(t, t);
            if !q.is_zero() {
                let neg_q = -&q;
                m.add_col_multiple(j, t, &neg_q);
                if let Some(v) = right.as_mut() {
                    v.add_col_multiple(j, t, &neg_q);
                }
            }
            if !m.entry(t, j).is_zero() {
                continue 'pivot;
            }
        }

        // Divisibility sweep: fold a non-divisible entry into the pivot row
        // and restart; the next clearing pass shrinks the pivot.
        for i in t + 1..rows {
            for j in t + 1..cols {
                if !(m.entry(i, j) % m.entry(t, t)).is_zero() {
                    m.add_row_multiple(t, i, &Coeff::one());
                    if let Some(u) = left.as_mut() {
                        u.add_row_multiple(t, i, &Coeff::one());
                    }
                    continue 'pivot;
                }
            }
        }

        t += 1;
    }

    let rank = t;
    let mut invariant_factors = Vec::with_capacity(rank);
    for k in 0..rank {
        if m.entry(k, k).is_negative() {
            m.negate_row(k);
            if let Some(u) = left.as_mut() {
                u.negate_row(k);
            }
        }
        invariant_factors.push(m.entry(k, k).clone());
    }
    debug_assert!(invariant_factors
        .windows(2)
        .all(|w| (&w[1] % &w[0]).is_zero()));

    SmithNormalForm {
        rows,
        cols,
        rank,
        invariant_factors,
        left,
        right,
    }
}

/// Solve `M x = rhs` over the integers.
///
/// Returns `Ok(Some(x))` for one integral solution, `Ok(None)` when `rhs`
/// is not in the integral column span of `M`.
pub fn solve_in_image(matrix: &IntMatrix, rhs: &[Coeff]) -> Result<Option<Vec<Coeff>>> {
    if rhs.len() != matrix.rows() {
        return Err(Error::Internal(format!(
            "right-hand side has length {} but the matrix has {} rows",
            rhs.len(),
            matrix.rows()
        )));
    }
    if matrix.cols() == 0 {
        return Ok(rhs.iter().all(Zero::is_zero).then(Vec::new));
    }
    let snf = smith_normal_form(matrix, true);
    let u = snf.left.as_ref().expect("requested transforms");
    let v = snf.right.as_ref().expect("requested transforms");
    // U M V = D, so M x = rhs becomes D y = U rhs with x = V y.
    let target = u.apply(rhs);
    let mut y = vec![Coeff::zero(); matrix.cols()];
    for (i, value) in target.iter().enumerate() {
        if i < snf.rank {
            let d = &snf.invariant_factors[i];
            if (value % d).is_zero() {
                y[i] = value / d;
            } else {
                return Ok(None);
            }
        } else if !value.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(v.apply(&y)))
}

fn check_degree_within_bound(alg: &DgAlgebra, degree: u32) -> Result<()> {
    if let Some(bound) = alg.degree_bound() {
        if degree > bound {
            return Err(Error::AboveBound {
                requested: degree,
                bound,
            });
        }
    }
    Ok(())
}

/// All words of the given total degree, sorted. Degree zero yields the unit
/// word alone. Fails with [`Error::AboveBound`] when the algebra was built
/// with a degree bound smaller than `degree`, because the generator list
/// (and hence the basis) is incomplete there.
pub fn basis_in_degree(alg: &DgAlgebra, degree: u32) -> Result<Vec<Word>> {
    check_degree_within_bound(alg, degree)?;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend_words(alg, degree, &mut stack, &mut out);
    out.sort();
    Ok(out)
}

fn extend_words(
    alg: &DgAlgebra,
    remaining: u32,
    current: &mut Vec<crate::algebra::Generator>,
    out: &mut Vec<Word>,
) {
    if remaining == 0 {
        out.push(Word::from_factors(current.clone()));
        return;
    }
    // Generators are sorted with degree as the leading key, so the scan can
    // stop at the first generator that no longer fits.
    for g in alg.generators() {
        if g.degree() > remaining {
            break;
        }
        current.push(g.clone());
        extend_words(alg, remaining - g.degree(), current, out);
        current.pop();
    }
}

/// All words of the given total degree whose vertex content is exactly
/// `content`, sorted. Requires every generator of the algebra to carry
/// vertex content (be indexed by a simplex or a multiset).
pub fn basis_in_degree_with_content(
    alg: &DgAlgebra,
    degree: u32,
    content: &Multiset,
) -> Result<Vec<Word>> {
    check_degree_within_bound(alg, degree)?;
    let with_content: Vec<(crate::algebra::Generator, Multiset)> = alg
        .generators()
        .iter()
        .map(|g| match g.token().content() {
            Some(c) => Ok((g.clone(), c)),
            None => Err(Error::Unsupported(format!(
                "generator {} carries no vertex content; content-filtered bases need \
                 simplex- or multiset-indexed generators",
                g.token()
            ))),
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend_words_with_content(&with_content, degree, content, &mut stack, &mut out);
    out.sort();
    Ok(out)
}

fn extend_words_with_content(
    generators: &[(crate::algebra::Generator, Multiset)],
    remaining_degree: u32,
    remaining_content: &Multiset,
    current: &mut Vec<crate::algebra::Generator>,
    out: &mut Vec<Word>,
) {
    if remaining_degree == 0 {
        if remaining_content.is_empty() {
            out.push(Word::from_factors(current.clone()));
        }
        return;
    }
    for (g, c) in generators {
        if g.degree() > remaining_degree {
            break;
        }
        let Some(rest) = remaining_content.checked_sub(c) else {
            continue;
        };
        current.push(g.clone());
        extend_words_with_content(generators, remaining_degree - g.degree(), &rest, current, out);
        current.pop();
    }
}

/// Whether the differential of every generator preserves vertex content:
/// all generators are simplex- or multiset-indexed and each word of `d g`
/// has the same content as `g`. When this holds, the chain complex splits
/// as a direct sum over content, and cycle/boundary questions can be solved
/// block by block.
pub fn differential_preserves_content(alg: &DgAlgebra) -> bool {
    alg.generators().iter().all(|g| {
        let Some(gc) = g.token().content() else {
            return false;
        };
        let Ok(dg) = alg.diff_of(g) else {
            return false;
        };
        dg.terms().all(|(w, _)| w.content() == Some(gc.clone()))
    })
}

/// The matrix of the differential from the span of `domain` to the span of
/// `codomain` (both sorted word lists; columns follow `domain`). Fails if
/// some image word falls outside `codomain` — callers must supply a basis
/// that is closed under the differential's image.
pub fn boundary_matrix(alg: &DgAlgebra, domain: &[Word], codomain: &[Word]) -> Result<IntMatrix> {
    debug_assert!(domain.windows(2).all(|w| w[0] < w[1]));
    debug_assert!(codomain.windows(2).all(|w| w[0] < w[1]));
    let mut m = IntMatrix::zeros(codomain.len(), domain.len());
    for (j, word) in domain.iter().enumerate() {
        let image = alg.apply_diff(&GradedElement::from_word(word.clone()))?;
        for (w, coeff) in image.terms() {
            let i = codomain.binary_search(w).map_err(|_| {
                Error::Internal(format!(
                    "differential image word {w} is missing from the codomain basis"
                ))
            })?;
            m.set_entry(i, j, coeff.clone());
        }
    }
    Ok(m)
}

/// Homology of one degree: `H ≅ ℤ^free_rank ⊕ ℤ/t₁ ⊕ … ⊕ ℤ/tₖ` with the
/// torsion coefficients in divisibility order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRow {
    pub degree: u32,
    /// Rank of the chain group (number of words) in this degree.
    pub chain_rank: usize,
    /// Rank of the free part of the homology group.
    pub free_rank: usize,
    /// Torsion coefficients `t₁ | t₂ | …`, each `> 1`.
    pub torsion: Vec<Coeff>,
}

/// Homology of the algebra's underlying chain complex in degrees
/// `0 ..= up_to`.
///
/// Requires basis data one degree above the cut-off (the incoming boundary
/// map), so a degree-bounded algebra must satisfy `up_to + 1 <= bound`.
/// Degrees are processed in parallel; the output is ordered by degree and
/// fully deterministic.
pub fn homology(alg: &DgAlgebra, up_to: u32) -> Result<Vec<HomologyRow>> {
    let top = up_to + 1;
    check_degree_within_bound(alg, top)?;
    let bases: Vec<Vec<Word>> = (0..=top)
        .into_par_iter()
        .map(|d| basis_in_degree(alg, d))
        .collect::<Result<_>>()?;
    // boundary_data[d - 1] describes the boundary map out of degree d.
    let boundary_data: Vec<(usize, Vec<Coeff>)> = (1..=top as usize)
        .into_par_iter()
        .map(|d| {
            let m = boundary_matrix(alg, &bases[d], &bases[d - 1])?;
            let snf = smith_normal_form(&m, false);
            Ok((snf.rank, snf.invariant_factors))
        })
        .collect::<Result<_>>()?;
    let rank_out_of = |d: usize| if d == 0 { 0 } else { boundary_data[d - 1].0 };

    let mut rows = Vec::with_capacity(up_to as usize + 1);
    for d in 0..=up_to as usize {
        let chain_rank = bases[d].len();
        let cycles = chain_rank.checked_sub(rank_out_of(d)).ok_or_else(|| {
            Error::Internal("boundary rank exceeds chain rank".to_string())
        })?;
        let free_rank = cycles.checked_sub(rank_out_of(d + 1)).ok_or_else(|| {
            Error::Internal(
                "incoming boundary rank exceeds cycle rank; the differential does not \
                 square to zero"
                    .to_string(),
            )
        })?;
        let torsion: Vec<Coeff> = boundary_data[d]
            .1
            .iter()
            .filter(|f| **f > Coeff::one())
            .cloned()
            .collect();
        rows.push(HomologyRow {
            degree: d as u32,
            chain_rank,
            free_rank,
            torsion,
        });
    }
    Ok(rows)
}

/// The answer to "is this cycle a boundary?".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassVerdict {
    /// The cycle bounds: `d witness = cycle` (verified before returning).
    Zero { witness: GradedElement },
    /// The cycle is not in the image of the differential.
    Nonzero,
}

impl ClassVerdict {
    pub fn is_zero(&self) -> bool {
        matches!(self, ClassVerdict::Zero { .. })
    }

    pub fn witness(&self) -> Option<&GradedElement> {
        match self {
            ClassVerdict::Zero { witness } => Some(witness),
            ClassVerdict::Nonzero => None,
        }
    }
}

/// Decide whether a homogeneous cycle represents zero in homology, returning
/// an explicit bounding element when it does.
///
/// Errors with [`Error::NotACycle`] when `d class != 0`, and with
/// [`Error::AboveBound`] when the algebra's degree bound is too small to
/// hold the candidate preimages (degree of the class plus one).
///
/// When the differential provably preserves vertex content (see
/// [`differential_preserves_content`]), the solve is restricted to the
/// content blocks of the class; otherwise the full degree basis is used.
pub fn class_is_zero(alg: &DgAlgebra, class: &GradedElement) -> Result<ClassVerdict> {
    if class.is_zero() {
        return Ok(ClassVerdict::Zero {
            witness: GradedElement::zero(),
        });
    }
    let degree = class
        .homogeneous_degree()?
        .expect("nonzero element has a degree");
    if !alg.apply_diff(class)?.is_zero() {
        return Err(Error::NotACycle);
    }
    check_degree_within_bound(alg, degree + 1)?;

    let blocked = differential_preserves_content(alg)
        && class.terms().all(|(w, _)| w.content().is_some());

    let witness = if blocked {
        // Split the class by word content and solve each block separately:
        // a content-preserving differential cannot mix blocks.
        let mut parts: BTreeMap<Multiset, GradedElement> = BTreeMap::new();
        for (w, c) in class.terms() {
            parts
                .entry(w.content().expect("checked above"))
                .or_insert_with(GradedElement::zero)
                .add_term(w.clone(), c.clone());
        }
        let mut witness = GradedElement::zero();
        for (content, part) in &parts {
            let candidates = basis_in_degree_with_content(alg, degree + 1, content)?;
            let targets = basis_in_degree_with_content(alg, degree, content)?;
            match solve_boundary_part(alg, &candidates, &targets, part)? {
                Some(w) => witness = witness.add(&w),
                None => return Ok(ClassVerdict::Nonzero),
            }
        }
        witness
    } else {
        let candidates = basis_in_degree(alg, degree + 1)?;
        let targets = basis_in_degree(alg, degree)?;
        match solve_boundary_part(alg, &candidates, &targets, class)? {
            Some(w) => w,
            None => return Ok(ClassVerdict::Nonzero),
        }
    };

    let boundary = alg.apply_diff(&witness)?;
    if &boundary != class {
        return Err(Error::Internal(
            "witness check failed: the solved preimage does not bound the class".to_string(),
        ));
    }
    Ok(ClassVerdict::Zero { witness })
}

fn solve_boundary_part(
    alg: &DgAlgebra,
    candidates: &[Word],
    targets: &[Word],
    part: &GradedElement,
) -> Result<Option<GradedElement>> {
    if candidates.is_empty() {
        return Ok(part.is_zero().then(GradedElement::zero));
    }
    let matrix = boundary_matrix(alg, candidates, targets)?;
    let mut rhs = vec![Coeff::zero(); targets.len()];
    for (w, c) in part.terms() {
        let i = targets.binary_search(w).map_err(|_| {
            Error::Internal(format!("cycle word {w} is missing from the target basis"))
        })?;
        rhs[i] = c.clone();
    }
    Ok(solve_in_image(&matrix, &rhs)?.map(|x| {
        let mut witness = GradedElement::zero();
        for (j, coeff) in x.into_iter().enumerate() {
            if !coeff.is_zero() {
                witness.add_term(candidates[j].clone(), coeff);
            }
        }
        witness
    }))
}

//! Differential graded algebras of loop spaces, presented as free graded
//! tensor algebras over ℤ with a differential given on generators and
//! extended by the Leibniz rule
//!
//! ```text
//! d(x·y) = d(x)·y + (−1)^{|x|} x·d(y).
//! ```
//!
//! Three families are constructed directly:
//!
//! * [`cobar_spheres`] — the loop-space model of a polyhedral product of
//!   spheres `S^{n_i}` over a complex `K`: one generator `b_J` of degree
//!   `(Σ_{j∈J} n_j) − 1` per nonempty simplex `J ∈ K`, with
//!
//!   ```text
//!   d b_J = Σ ε(I,L) (−1)^{|b_I|+1} b_I · b_L
//!   ```
//!
//!   over ordered pairs `(I, L)` of nonempty simplices with `I ⊔ L = J`,
//!   where `ε(I,L)` is the Koszul sign of the unshuffle acting on the
//!   *suspended* degrees `n_i`. Singleton generators are cycles.
//!
//! * [`cobar_dj`] — the loop-space model of the polyhedral product of
//!   infinite projective spaces over `K`, truncated at a degree bound: one
//!   generator `χ_σ` of degree `2|σ| − 1` per nonempty vertex multiset `σ`
//!   whose support is a simplex of `K`, with
//!
//!   ```text
//!   d χ_σ = Σ χ_τ · χ_τ'
//!   ```
//!
//!   over ordered pairs of nonempty submultisets with `τ ⊔ τ' = σ` — every
//!   coefficient is `+1`. In particular `d χ_{ii} = χ_i·χ_i` and
//!   `d χ_{ij} = χ_i·χ_j + χ_j·χ_i`.
//!
//! * [`ah_cpn`] — the loop-space model of a single projective space:
//!   generators `a_1, …, a_n` with `|a_i| = 2i − 1`, `d a_1 = 0` and
//!   `d a_i = a_1·a_{i−1} + a_2·a_{i−2} + … + a_{i−1}·a_1`. The infinite
//!   case needs a degree bound to stay finite.
//!
//! The same algebras also arise through the cobar construction applied to a
//! finite coalgebra presentation ([`cobar_of_coalgebra`]): for a coalgebra
//! `C` with `C_0 = ℤ`, `C_1 = 0`, internal differential `d_C`, and reduced
//! coproduct `Δ̄c = Σ x_i ⊗ y_i`, the cobar differential on the desuspended
//! generators is
//!
//! ```text
//! d(s⁻¹c) = −s⁻¹(d_C c) + Σ (−1)^{|x_i|} (s⁻¹x_i)·(s⁻¹y_i).
//! ```
//!
//! [`homology_coalgebra`] produces the homology coalgebra of a polyhedral
//! product of spheres (basis `α_J`, `J ∈ K`), and feeding it through the
//! cobar construction reproduces [`cobar_spheres`] table for table — a
//! cross-check the test suite exercises on every fixture.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{koszul_sign, Coeff, GenToken, GradedElement, Generator, Word};
use crate::complex::{Multiset, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Sphere dimension assignments
// ---------------------------------------------------------------------------

/// An assignment of a sphere dimension `n_i ≥ 2` to each vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SphereDims {
    dims: BTreeMap<VertexId, u32>,
}

impl SphereDims {
    /// Builds from explicit `(vertex, dimension)` pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VertexId, u32)>) -> Result<Self> {
        let mut dims = BTreeMap::new();
        for (v, n) in pairs {
            if n < 2 {
                return Err(Error::Unsupported(format!(
                    "sphere dimension {n} for vertex {v}: dimensions must be >= 2"
                )));
            }
            if dims.insert(v, n).is_some() {
                return Err(Error::Malformed(format!("vertex {v} assigned twice")));
            }
        }
        Ok(SphereDims { dims })
    }

    /// The same dimension for every vertex of a complex.
    pub fn uniform(k: &SimplicialComplex, n: u32) -> Result<Self> {
        SphereDims::from_pairs(k.vertices().iter().map(|v| (*v, n)))
    }

    /// Parses the command-line syntax: either keyed, `"1=5,2=2"`, or bare
    /// dimensions in vertex order, `"5,2"` (one per vertex).
    pub fn parse(text: &str, vertices: &[VertexId]) -> Result<Self> {
        let entries: Vec<&str> = text.split(',').map(str::trim).collect();
        let keyed = entries.iter().any(|e| e.contains('='));
        if keyed {
            let pairs = entries
                .iter()
                .map(|e| {
                    let (v, n) = e.split_once('=').ok_or_else(|| {
                        Error::Malformed(format!("dims entry '{e}': expected vertex=dim"))
                    })?;
                    let v: VertexId = v
                        .trim()
                        .parse()
                        .map_err(|_| Error::Malformed(format!("bad vertex id '{v}'")))?;
                    let n: u32 = n
                        .trim()
                        .parse()
                        .map_err(|_| Error::Malformed(format!("bad dimension '{n}'")))?;
                    Ok((v, n))
                })
                .collect::<Result<Vec<_>>>()?;
            SphereDims::from_pairs(pairs)
        } else {
            if entries.len() != vertices.len() {
                return Err(Error::Malformed(format!(
                    "{} dimensions for {} vertices",
                    entries.len(),
                    vertices.len()
                )));
            }
            let pairs = vertices
                .iter()
                .zip(&entries)
                .map(|(v, e)| {
                    let n: u32 = e
                        .parse()
                        .map_err(|_| Error::Malformed(format!("bad dimension '{e}'")))?;
                    Ok((*v, n))
                })
                .collect::<Result<Vec<_>>>()?;
            SphereDims::from_pairs(pairs)
        }
    }

    pub fn get(&self, v: VertexId) -> Result<u32> {
        self.dims.get(&v).copied().ok_or_else(|| {
            Error::Malformed(format!("no sphere dimension assigned to vertex {v}"))
        })
    }

    /// Checks the assignment covers every vertex of `k`.
    pub fn check_covers(&self, k: &SimplicialComplex) -> Result<()> {
        for v in k.vertices() {
            self.get(*v)?;
        }
        Ok(())
    }

    /// True when every assigned dimension is exactly 2.
    pub fn is_all_two(&self) -> bool {
        self.dims.values().all(|n| *n == 2)
    }

    /// Sum of the dimensions over a simplex.
    pub fn sum_over(&self, j: &Simplex) -> Result<u32> {
        j.vertices().iter().map(|v| self.get(*v)).sum()
    }
}

// ---------------------------------------------------------------------------
// DgAlgebra
// ---------------------------------------------------------------------------

/// A free graded tensor algebra over ℤ with a degree-lowering differential
/// given on its (finitely many) generators.
///
/// When `degree_bound` is set, the generator list is complete only up to
/// that degree (the algebra is a truncation of an infinitely generated one),
/// and degree bases above the bound are refused.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DgAlgebra {
    generators: Vec<Generator>,
    diff: BTreeMap<GenToken, GradedElement>,
    degree_bound: Option<u32>,
}

impl DgAlgebra {
    /// Assembles and validates an algebra. Checks: tokens are unique,
    /// generators respect the bound, every differential is either zero or
    /// homogeneous of degree exactly one less than its generator, and every
    /// word in every differential uses only generators of this algebra.
    pub fn new(
        mut generators: Vec<Generator>,
        mut diff: BTreeMap<GenToken, GradedElement>,
        degree_bound: Option<u32>,
    ) -> Result<Self> {
        generators.sort();
        for pair in generators.windows(2) {
            if pair[0].token() == pair[1].token() {
                return Err(Error::Malformed(format!(
                    "duplicate generator token {}",
                    pair[0].token()
                )));
            }
        }
        let by_token: BTreeMap<&GenToken, &Generator> =
            generators.iter().map(|g| (g.token(), g)).collect();
        if let Some(bound) = degree_bound {
            if let Some(g) = generators.iter().find(|g| g.degree() > bound) {
                return Err(Error::Malformed(format!(
                    "generator {} of degree {} exceeds the truncation bound {bound}",
                    g.token(),
                    g.degree()
                )));
            }
        }
        for token in diff.keys() {
            if !by_token.contains_key(token) {
                return Err(Error::Malformed(format!(
                    "differential given for unknown generator {token}"
                )));
            }
        }
        for g in &generators {
            let value = diff.entry(g.token().clone()).or_default();
            match value.homogeneous_degree()? {
                None => {}
                Some(d) if d + 1 == g.degree() => {}
                Some(d) => {
                    return Err(Error::Malformed(format!(
                        "differential of {} has degree {d}, expected {}",
                        g.token(),
                        g.degree() - 1
                    )));
                }
            }
            for (word, _) in value.terms() {
                for factor in word.factors() {
                    match by_token.get(factor.token()) {
                        Some(own) if own.degree() == factor.degree() => {}
                        _ => {
                            return Err(Error::Malformed(format!(
                                "differential of {} uses foreign generator {}",
                                g.token(),
                                factor.token()
                            )));
                        }
                    }
                }
            }
        }
        Ok(DgAlgebra { generators, diff, degree_bound })
    }

    /// Generators in (degree, token) order.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn degree_bound(&self) -> Option<u32> {
        self.degree_bound
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators.iter().map(Generator::degree).max().unwrap_or(0)
    }

    pub fn generator_by_token(&self, token: &GenToken) -> Option<&Generator> {
        self.generators.iter().find(|g| g.token() == token)
    }

    /// True when `g` (token *and* degree) is a generator of this algebra.
    pub fn owns(&self, g: &Generator) -> bool {
        self.generator_by_token(g.token())
            .is_some_and(|own| own.degree() == g.degree())
    }

    /// The differential of a generator; foreign generators are an error.
    pub fn diff_of(&self, g: &Generator) -> Result<&GradedElement> {
        if !self.owns(g) {
            return Err(Error::ForeignGenerator(g.token().to_string()));
        }
        Ok(self
            .diff
            .get(g.token())
            .expect("validated algebras store a differential for every generator"))
    }

    /// Extends the differential to an arbitrary element by linearity and the
    /// Leibniz rule `d(xy) = d(x)y + (−1)^{|x|} x d(y)`.
    pub fn apply_diff(&self, x: &GradedElement) -> Result<GradedElement> {
        let mut out = GradedElement::zero();
        for (word, coeff) in x.terms() {
            let factors = word.factors();
            let mut prefix_odd = false;
            for (t, g) in factors.iter().enumerate() {
                let dg = self.diff_of(g)?;
                if !dg.is_zero() {
                    let prefix =
                        GradedElement::from_word(Word::from_factors(factors[..t].to_vec()));
                    let suffix = GradedElement::from_word(Word::from_factors(
                        factors[t + 1..].to_vec(),
                    ));
                    let piece = prefix.mul(dg).mul(&suffix);
                    let signed = if prefix_odd { -coeff } else { coeff.clone() };
                    for (w, c) in piece.terms() {
                        out.add_term(w.clone(), c * &signed);
                    }
                }
                prefix_odd ^= g.degree() & 1 == 1;
            }
        }
        Ok(out)
    }

    /// Computes `d(d(g))` for every generator and reports the failures.
    /// A validated construction always passes; this is the cheap way to
    /// certify a hand-built table.
    pub fn check_d_squared(&self) -> DSquaredReport {
        let mut failures: Vec<(Generator, GradedElement)> = self
            .generators
            .par_iter()
            .filter_map(|g| {
                let dd = self
                    .diff_of(g)
                    .and_then(|dg| self.apply_diff(dg))
                    .expect("generator differentials only use own generators");
                if dd.is_zero() {
                    None
                } else {
                    Some((g.clone(), dd))
                }
            })
            .collect();
        failures.sort_by(|a, b| a.0.cmp(&b.0));
        DSquaredReport { checked: self.generators.len(), failures }
    }
}

/// Outcome of a `d² = 0` sweep over all generators.
#[derive(Clone, Debug)]
pub struct DSquaredReport {
    /// Number of generators checked.
    pub checked: usize,
    /// Generators whose differential fails `d² = 0`, with the offending
    /// value of `d(d(g))`.
    pub failures: Vec<(Generator, GradedElement)>,
}

impl DSquaredReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for DSquaredReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "d^2 = 0 on all {} generators", self.checked)
        } else {
            writeln!(f, "d^2 != 0 on {} generators:", self.failures.len())?;
            for (g, dd) in &self.failures {
                writeln!(f, "  d^2({g}) = {dd}")?;
            }
            Ok(())
        }
    }
}

/// Decides whether `x`, an element of `big`, lies in the subalgebra spanned
/// by the generators of `small`. `small`'s generators must all belong to
/// `big` with identical differentials (i.e. be a genuine dg-subalgebra), and
/// `x` must be an element of `big`.
pub fn subalgebra_membership(
    big: &DgAlgebra,
    small: &DgAlgebra,
    x: &GradedElement,
) -> Result<bool> {
    for g in small.generators() {
        if !big.owns(g) {
            return Err(Error::Unsupported(format!(
                "generator {} of the candidate subalgebra is not in the ambient algebra",
                g.token()
            )));
        }
        if small.diff_of(g)? != big.diff_of(g)? {
            return Err(Error::Unsupported(format!(
                "generator {} changes differential between the two algebras",
                g.token()
            )));
        }
    }
    let mut inside = true;
    for (word, _) in x.terms() {
        for factor in word.factors() {
            if !big.owns(factor) {
                return Err(Error::ForeignGenerator(factor.token().to_string()));
            }
            inside &= small.owns(factor);
        }
    }
    Ok(inside)
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

fn simplex_generator(j: &Simplex, dims: &SphereDims) -> Result<Generator> {
    Generator::new(GenToken::Simplex(j.clone()), dims.sum_over(j)? - 1)
}

fn multiset_generator(sigma: &Multiset) -> Result<Generator> {
    Generator::new(GenToken::Multiset(sigma.clone()), 2 * sigma.size() - 1)
}

/// The Koszul sign of unshuffling the suspended degrees `n_j` of the sorted
/// simplex `j` into (vertices of `i`, remaining vertices).
fn unshuffle_sign(j: &Simplex, i: &Simplex, dims: &SphereDims) -> Result<i8> {
    let degrees = j
        .vertices()
        .iter()
        .map(|v| dims.get(*v))
        .collect::<Result<Vec<u32>>>()?;
    let mut perm: Vec<usize> = Vec::with_capacity(j.len());
    for side in [true, false] {
        for (t, v) in j.vertices().iter().enumerate() {
            if i.contains_vertex(*v) == side {
                perm.push(t);
            }
        }
    }
    koszul_sign(&degrees, &perm)
}

/// Ordered pairs `(I, L)` of nonempty simplices with `I ⊔ L = J`.
fn ordered_simplex_splits(j: &Simplex) -> Vec<(Simplex, Simplex)> {
    let s = j.len();
    let mut out = Vec::new();
    for mask in 1u32..((1 << s) - 1) {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (t, v) in j.vertices().iter().enumerate() {
            if mask >> t & 1 == 1 {
                left.push(*v);
            } else {
                right.push(*v);
            }
        }
        out.push((
            Simplex::new(left).expect("split of a valid simplex"),
            Simplex::new(right).expect("split of a valid simplex"),
        ));
    }
    out
}

/// The loop-space algebra of the polyhedral product of spheres `S^{n_i}`
/// over `k`. See the module docs for the differential.
pub fn cobar_spheres(k: &SimplicialComplex, dims: &SphereDims) -> Result<DgAlgebra> {
    dims.check_covers(k)?;
    let mut generators = Vec::new();
    let mut diff = BTreeMap::new();
    for j in k.nonempty_simplices() {
        let gen = simplex_generator(j, dims)?;
        let mut value = GradedElement::zero();
        for (i, l) in ordered_simplex_splits(j) {
            let eps = unshuffle_sign(j, &i, dims)?;
            // ε(I,L) · (−1)^{|b_I| + 1}, and |b_I| + 1 = Σ_{i∈I} n_i.
            let sign = if dims.sum_over(&i)? & 1 == 1 { -eps } else { eps };
            let word = Word::from_factors(vec![
                simplex_generator(&i, dims)?,
                simplex_generator(&l, dims)?,
            ]);
            value.add_term(word, Coeff::from(sign));
        }
        diff.insert(gen.token().clone(), value);
        generators.push(gen);
    }
    DgAlgebra::new(generators, diff, None)
}

/// All multisets of total size `size` supported on exactly the vertices of
/// `j` (every vertex with multiplicity ≥ 1).
fn multisets_on(j: &Simplex, size: u32) -> Vec<Multiset> {
    fn rec(
        vertices: &[VertexId],
        remaining: u32,
        acc: &mut Vec<(VertexId, u32)>,
        out: &mut Vec<Multiset>,
    ) {
        match vertices {
            [] => {
                if remaining == 0 {
                    out.push(
                        Multiset::from_counts(acc.iter().copied())
                            .expect("positive counts on distinct vertices"),
                    );
                }
            }
            [v, rest @ ..] => {
                // Leave at least one unit for each later vertex.
                let reserve = rest.len() as u32;
                for c in 1..=remaining.saturating_sub(reserve) {
                    acc.push((*v, c));
                    rec(rest, remaining - c, acc, out);
                    acc.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    if size >= j.len() as u32 && !j.is_empty() {
        rec(j.vertices(), size, &mut Vec::new(), &mut out);
    }
    out
}

/// The loop-space algebra of the polyhedral product of infinite projective
/// spaces over `k`, truncated so that only generators of degree ≤
/// `degree_bound` appear. See the module docs for the differential.
pub fn cobar_dj(k: &SimplicialComplex, degree_bound: u32) -> Result<DgAlgebra> {
    if degree_bound == 0 {
        return Err(Error::Unsupported(
            "degree bound 0 leaves no generators; use a bound >= 1".into(),
        ));
    }
    let max_size = degree_bound.div_ceil(2); // degree 2s−1 ≤ bound
    let mut generators = Vec::new();
    let mut diff = BTreeMap::new();
    for j in k.nonempty_simplices() {
        for size in j.len() as u32..=max_size {
            for sigma in multisets_on(j, size) {
                let gen = multiset_generator(&sigma)?;
                let mut value = GradedElement::zero();
                for (tau, rest) in sigma.proper_splits() {
                    let word = Word::from_factors(vec![
                        multiset_generator(&tau)?,
                        multiset_generator(&rest)?,
                    ]);
                    value.add_term(word, Coeff::one());
                }
                diff.insert(gen.token().clone(), value);
                generators.push(gen);
            }
        }
    }
    DgAlgebra::new(generators, diff, Some(degree_bound))
}

/// Dimension parameter for [`ah_cpn`]: a finite projective space or the
/// infinite one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CpDim {
    Finite(u32),
    Infinite,
}

/// The loop-space algebra of a complex projective space: `T(a_1, …, a_n)`
/// with `|a_i| = 2i − 1` and `d a_i = Σ_{j=1}^{i−1} a_j·a_{i−j}`. The
/// infinite case requires `degree_bound`; a finite case is truncated only
/// when the bound actually cuts the generator list.
pub fn ah_cpn(dim: CpDim, degree_bound: Option<u32>) -> Result<DgAlgebra> {
    let top = match (dim, degree_bound) {
        (CpDim::Finite(0), _) => {
            return Err(Error::Unsupported("projective space of dimension 0".into()))
        }
        (CpDim::Finite(n), None) => n,
        (CpDim::Finite(n), Some(bound)) => n.min(bound.div_ceil(2)),
        (CpDim::Infinite, Some(bound)) => bound.div_ceil(2),
        (CpDim::Infinite, None) => {
            return Err(Error::Unsupported(
                "the infinite projective space needs a degree bound".into(),
            ))
        }
    };
    if top == 0 {
        return Err(Error::Unsupported(
            "degree bound below 1 leaves no generators".into(),
        ));
    }
    let gen = |i: u32| -> Result<Generator> {
        Generator::new(GenToken::Named(format!("a{i}")), 2 * i - 1)
    };
    let mut generators = Vec::new();
    let mut diff = BTreeMap::new();
    for i in 1..=top {
        let g = gen(i)?;
        let mut value = GradedElement::zero();
        for j in 1..i {
            value.add_term(
                Word::from_factors(vec![gen(j)?, gen(i - j)?]),
                Coeff::one(),
            );
        }
        diff.insert(g.token().clone(), value);
        generators.push(g);
    }
    // Record the bound only when it actually truncates.
    let truncated = match dim {
        CpDim::Finite(n) => top < n,
        CpDim::Infinite => true,
    };
    DgAlgebra::new(generators, diff, if truncated { degree_bound } else { None })
}

// ---------------------------------------------------------------------------
// Coalgebra presentations and the cobar construction
// ---------------------------------------------------------------------------

/// A finite presentation of a graded coalgebra `C` with `C_0 = ℤ` and
/// `C_1 = 0`: a basis of the reduced part (all degrees ≥ 2), the reduced
/// coproduct on that basis, and an internal differential.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoalgebraPresentation {
    basis: Vec<(GenToken, u32)>,
    /// Reduced coproduct: `Δ̄c = Σ coeff · x ⊗ y`.
    coproduct: BTreeMap<GenToken, Vec<(Coeff, GenToken, GenToken)>>,
    /// Internal differential: `d_C c = Σ coeff · x`.
    internal_diff: BTreeMap<GenToken, Vec<(Coeff, GenToken)>>,
    /// When set, the basis is complete only up to this degree.
    degree_bound: Option<u32>,
}

impl CoalgebraPresentation {
    pub fn new(
        basis: Vec<(GenToken, u32)>,
        coproduct: BTreeMap<GenToken, Vec<(Coeff, GenToken, GenToken)>>,
        internal_diff: BTreeMap<GenToken, Vec<(Coeff, GenToken)>>,
        degree_bound: Option<u32>,
    ) -> Result<Self> {
        let mut degrees: BTreeMap<&GenToken, u32> = BTreeMap::new();
        for (token, degree) in &basis {
            if *degree <= 1 {
                return Err(Error::Unsupported(format!(
                    "basis element {token} has degree {degree}; a loop-space \
                     coalgebra is trivial in degrees 0 and 1"
                )));
            }
            if let Some(bound) = degree_bound {
                if *degree > bound {
                    return Err(Error::Malformed(format!(
                        "basis element {token} of degree {degree} exceeds the bound {bound}"
                    )));
                }
            }
            if degrees.insert(token, *degree).is_some() {
                return Err(Error::Malformed(format!("duplicate basis token {token}")));
            }
        }
        let deg = |t: &GenToken| -> Result<u32> {
            degrees
                .get(t)
                .copied()
                .ok_or_else(|| Error::Malformed(format!("unknown basis token {t}")))
        };
        for (c, terms) in &coproduct {
            let dc = deg(c)?;
            for (_, x, y) in terms {
                if deg(x)? + deg(y)? != dc {
                    return Err(Error::Malformed(format!(
                        "coproduct of {c} has a term of degree {} + {}",
                        deg(x)?,
                        deg(y)?
                    )));
                }
            }
        }
        for (c, terms) in &internal_diff {
            let dc = deg(c)?;
            for (_, x) in terms {
                if deg(x)? + 1 != dc {
                    return Err(Error::Malformed(format!(
                        "internal differential of {c} does not lower degree by 1"
                    )));
                }
            }
        }
        Ok(CoalgebraPresentation { basis, coproduct, internal_diff, degree_bound })
    }

    pub fn basis(&self) -> &[(GenToken, u32)] {
        &self.basis
    }

    pub fn degree_bound(&self) -> Option<u32> {
        self.degree_bound
    }

    fn coproduct_of(&self, t: &GenToken) -> &[(Coeff, GenToken, GenToken)] {
        self.coproduct.get(t).map_or(&[], Vec::as_slice)
    }

    fn internal_diff_of(&self, t: &GenToken) -> &[(Coeff, GenToken)] {
        self.internal_diff.get(t).map_or(&[], Vec::as_slice)
    }

    /// Verifies coassociativity of the reduced coproduct on the whole basis:
    /// `(Δ̄ ⊗ 1)Δ̄ = (1 ⊗ Δ̄)Δ̄` as sums of basis triples. The coproduct has
    /// degree 0, so no Koszul signs appear in either composite.
    pub fn check_coassociativity(&self) -> Result<()> {
        for (c, _) in &self.basis {
            let mut acc: BTreeMap<(GenToken, GenToken, GenToken), Coeff> = BTreeMap::new();
            for (c1, x, y) in self.coproduct_of(c) {
                for (c2, x1, x2) in self.coproduct_of(x) {
                    let key = (x1.clone(), x2.clone(), y.clone());
                    let e = acc.entry(key.clone()).or_default();
                    *e += c1 * c2;
                    if e.is_zero() {
                        acc.remove(&key);
                    }
                }
                for (c2, y1, y2) in self.coproduct_of(y) {
                    let key = (x.clone(), y1.clone(), y2.clone());
                    let e = acc.entry(key.clone()).or_default();
                    *e -= c1 * c2;
                    if e.is_zero() {
                        acc.remove(&key);
                    }
                }
            }
            if !acc.is_empty() {
                return Err(Error::Internal(format!(
                    "reduced coproduct of {c} is not coassociative"
                )));
            }
        }
        Ok(())
    }
}

/// The cobar construction on a finite coalgebra presentation; see the module
/// docs for the differential. Generators are the desuspended basis elements
/// (same token, degree one less).
pub fn cobar_of_coalgebra(c: &CoalgebraPresentation) -> Result<DgAlgebra> {
    let mut generators = Vec::new();
    let mut diff = BTreeMap::new();
    for (token, degree) in c.basis() {
        let gen = Generator::new(token.clone(), degree - 1)?;
        let mut value = GradedElement::zero();
        for (coeff, x) in c.internal_diff_of(token) {
            let x_deg = c
                .basis()
                .iter()
                .find(|(t, _)| t == x)
                .expect("presentation validated")
                .1;
            value.add_term(
                Word::single(Generator::new(x.clone(), x_deg - 1)?),
                -coeff,
            );
        }
        for (coeff, x, y) in c.coproduct_of(token) {
            let find = |t: &GenToken| -> u32 {
                c.basis()
                    .iter()
                    .find(|(bt, _)| bt == t)
                    .expect("presentation validated")
                    .1
            };
            let (dx, dy) = (find(x), find(y));
            let sign = if dx & 1 == 1 { -Coeff::one() } else { Coeff::one() };
            value.add_term(
                Word::from_factors(vec![
                    Generator::new(x.clone(), dx - 1)?,
                    Generator::new(y.clone(), dy - 1)?,
                ]),
                coeff * sign,
            );
        }
        diff.insert(gen.token().clone(), value);
        generators.push(gen);
    }
    DgAlgebra::new(generators, diff, c.degree_bound().map(|b| b - 1))
}

/// The homology coalgebra of a polyhedral product of spheres over `k`:
/// basis `α_J` of degree `Σ_{j∈J} n_j` for nonempty `J ∈ k`, reduced
/// coproduct `Δ̄ α_J = Σ ε(I,L) α_I ⊗ α_L` over ordered pairs of nonempty
/// simplices with `I ⊔ L = J`, zero internal differential.
pub fn homology_coalgebra(
    k: &SimplicialComplex,
    dims: &SphereDims,
) -> Result<CoalgebraPresentation> {
    dims.check_covers(k)?;
    let mut basis = Vec::new();
    let mut coproduct = BTreeMap::new();
    for j in k.nonempty_simplices() {
        let token = GenToken::Simplex(j.clone());
        basis.push((token.clone(), dims.sum_over(j)?));
        let mut terms = Vec::new();
        for (i, l) in ordered_simplex_splits(j) {
            let eps = unshuffle_sign(j, &i, dims)?;
            terms.push((
                Coeff::from(eps),
                GenToken::Simplex(i),
                GenToken::Simplex(l),
            ));
        }
        coproduct.insert(token, terms);
    }
    CoalgebraPresentation::new(basis, coproduct, BTreeMap::new(), None)
}

/// The face coalgebra of `k` truncated at `degree_bound`: basis `c_σ` of
/// degree `2|σ|` per nonempty multiset `σ` supported on a simplex of `k`,
/// reduced coproduct `Δ̄ c_σ = Σ c_τ ⊗ c_τ'` over ordered submultiset pairs,
/// zero internal differential. Its cobar construction is [`cobar_dj`].
pub fn face_coalgebra(k: &SimplicialComplex, degree_bound: u32) -> Result<CoalgebraPresentation> {
    if degree_bound < 2 {
        return Err(Error::Unsupported(
            "degree bound below 2 leaves no basis elements".into(),
        ));
    }
    let max_size = degree_bound / 2;
    let mut basis = Vec::new();
    let mut coproduct = BTreeMap::new();
    for j in k.nonempty_simplices() {
        for size in j.len() as u32..=max_size {
            for sigma in multisets_on(j, size) {
                let token = GenToken::Multiset(sigma.clone());
                basis.push((token.clone(), 2 * size));
                let terms = sigma
                    .proper_splits()
                    .into_iter()
                    .map(|(tau, rest)| {
                        (
                            Coeff::one(),
                            GenToken::Multiset(tau),
                            GenToken::Multiset(rest),
                        )
                    })
                    .collect();
                coproduct.insert(token, terms);
            }
        }
    }
    CoalgebraPresentation::new(basis, coproduct, BTreeMap::new(), Some(degree_bound))
}

// ---------------------------------------------------------------------------
// Algebra morphisms
// ---------------------------------------------------------------------------

/// An algebra map determined by generator images, applied by extending
/// multiplicatively and linearly.
#[derive(Clone, Debug)]
pub struct DgaMap {
    images: BTreeMap<GenToken, GradedElement>,
}

impl DgaMap {
    pub fn new(images: BTreeMap<GenToken, GradedElement>) -> Self {
        DgaMap { images }
    }

    pub fn image_of(&self, token: &GenToken) -> Result<&GradedElement> {
        self.images
            .get(token)
            .ok_or_else(|| Error::ForeignGenerator(token.to_string()))
    }

    pub fn apply(&self, x: &GradedElement) -> Result<GradedElement> {
        x.substitute(&mut |g| self.image_of(g.token()).cloned())
    }

    /// Returns the domain generators on which the map fails to commute with
    /// the differentials (`map(d v) ≠ d(map v)`) or fails to preserve
    /// degree. Empty means the map is a dg-algebra map.
    pub fn chain_map_failures(
        &self,
        domain: &DgAlgebra,
        codomain: &DgAlgebra,
    ) -> Result<Vec<Generator>> {
        let mut failures = Vec::new();
        for g in domain.generators() {
            let image = self.image_of(g.token())?;
            let degree_ok = match image.homogeneous_degree() {
                Ok(None) => true,
                Ok(Some(d)) => d == g.degree(),
                Err(_) => false,
            };
            let lhs = self.apply(domain.diff_of(g)?)?;
            let rhs = codomain.apply_diff(image)?;
            if !degree_ok || lhs != rhs {
                failures.push(g.clone());
            }
        }
        Ok(failures)
    }
}

/// The canonical embedding of a sphere-product algebra (all dimensions 2)
/// into the projective-space algebra over the same complex: `b_J ↦ χ_J`,
/// reading the simplex `J` as a square-free multiset. Errors if some image
/// generator is missing from `dj` (bound too small or simplex not in its
/// complex); whether the result is a dg-map is checked by
/// [`DgaMap::chain_map_failures`].
pub fn canonical_embedding(spheres: &DgAlgebra, dj: &DgAlgebra) -> Result<DgaMap> {
    let mut images = BTreeMap::new();
    for g in spheres.generators() {
        let j = match g.token() {
            GenToken::Simplex(j) => j,
            other => {
                return Err(Error::Unsupported(format!(
                    "embedding needs simplex-indexed generators, found {other}"
                )))
            }
        };
        let sigma = Multiset::from_elements(j.vertices())?;
        let token = GenToken::Multiset(sigma);
        let target = dj
            .generator_by_token(&token)
            .ok_or_else(|| Error::ForeignGenerator(token.to_string()))?;
        images.insert(
            g.token().clone(),
            GradedElement::from_generator(target.clone()),
        );
    }
    Ok(DgaMap::new(images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::shuffles;

    fn simplex(v: &[VertexId]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn edge_complex(a: VertexId, b: VertexId) -> SimplicialComplex {
        SimplicialComplex::full_simplex(&[a, b]).unwrap()
    }

    fn worked_complex() -> SimplicialComplex {
        // Boundary of a triangle, substituted by (boundary triangle, point,
        // point): seven facets on five vertices.
        let outer = SimplicialComplex::boundary_simplex(&[1, 2, 3]).unwrap();
        outer
            .substitution(&[
                SimplicialComplex::boundary_simplex(&[1, 2, 3]).unwrap(),
                SimplicialComplex::full_simplex(&[4]).unwrap(),
                SimplicialComplex::full_simplex(&[5]).unwrap(),
            ])
            .unwrap()
    }

    fn b(alg: &DgAlgebra, v: &[VertexId]) -> GradedElement {
        let g = alg
            .generator_by_token(&GenToken::Simplex(simplex(v)))
            .unwrap_or_else(|| panic!("missing generator b{:?}", v));
        GradedElement::from_generator(g.clone())
    }

    fn x(alg: &DgAlgebra, v: &[VertexId]) -> GradedElement {
        let sigma = Multiset::from_elements(v).unwrap();
        let g = alg
            .generator_by_token(&GenToken::Multiset(sigma))
            .unwrap_or_else(|| panic!("missing generator x{:?}", v));
        GradedElement::from_generator(g.clone())
    }

    fn diff_str(alg: &DgAlgebra, token: &GenToken) -> String {
        let g = alg.generator_by_token(token).unwrap().clone();
        alg.diff_of(&g).unwrap().to_string()
    }

    #[test]
    fn sphere_dims_parse_both_syntaxes() {
        let keyed = SphereDims::parse("1=5, 2=2", &[1, 2]).unwrap();
        assert_eq!(keyed.get(1).unwrap(), 5);
        assert_eq!(keyed.get(2).unwrap(), 2);
        let bare = SphereDims::parse("5,2", &[1, 2]).unwrap();
        assert_eq!(bare, keyed);
        assert!(SphereDims::parse("5", &[1, 2]).is_err());
        assert!(SphereDims::parse("1=1", &[1]).is_err()); // dimension < 2
        assert!(SphereDims::parse("1=5,1=2", &[1]).is_err());
        assert!(SphereDims::parse("x=2", &[1]).is_err());
        assert!(keyed.get(9).is_err());
        assert!(!keyed.is_all_two());
        assert!(SphereDims::parse("2,2", &[1, 2]).unwrap().is_all_two());
    }

    #[test]
    fn sphere_generator_degrees_are_suspensions() {
        let k = worked_complex();
        let dims = SphereDims::uniform(&k, 2).unwrap();
        let alg = cobar_spheres(&k, &dims).unwrap();
        // 5 vertices + 10 edges + 6 triangles.
        assert_eq!(alg.generator_count(), 21);
        for g in alg.generators() {
            let GenToken::Simplex(j) = g.token() else { panic!() };
            assert_eq!(g.degree(), 2 * j.len() as u32 - 1);
        }
        assert_eq!(alg.degree_bound(), None);
    }

    #[test]
    fn mixed_dimension_edge_differential_is_minus_bracket() {
        // Dimensions (5, 2): d b_{12} = −b_1 b_2 + b_2 b_1 = −[b_1, b_2].
        let k = edge_complex(1, 2);
        let dims = SphereDims::parse("1=5,2=2", &[1, 2]).unwrap();
        let alg = cobar_spheres(&k, &dims).unwrap();
        assert_eq!(
            diff_str(&alg, &GenToken::Simplex(simplex(&[1, 2]))),
            "-b{1}*b{2} + b{2}*b{1}"
        );
        let expected = b(&alg, &[1]).bracket(&b(&alg, &[2])).unwrap().neg();
        let top = alg
            .generator_by_token(&GenToken::Simplex(simplex(&[1, 2])))
            .unwrap()
            .clone();
        assert_eq!(alg.diff_of(&top).unwrap(), &expected);
    }

    #[test]
    fn even_edge_differential_is_plus_bracket() {
        // Dimensions (2, 2) on vertices {2, 3}: d b_{23} = [b_2, b_3].
        let k = edge_complex(2, 3);
        let dims = SphereDims::uniform(&k, 2).unwrap();
        let alg = cobar_spheres(&k, &dims).unwrap();
        assert_eq!(
            diff_str(&alg, &GenToken::Simplex(simplex(&[2, 3]))),
            "b{2}*b{3} + b{3}*b{2}"
        );
        let expected = b(&alg, &[2]).bracket(&b(&alg, &[3])).unwrap();
        let top = alg
            .generator_by_token(&GenToken::Simplex(simplex(&[2, 3])))
            .unwrap()
            .clone();
        assert_eq!(alg.diff_of(&top).unwrap(), &expected);
    }

    #[test]
    fn triangle_differential_with_dims_5_2_2() {
        // d b_{123} = −[b_1, b_23] − [b_12, b_3] − [b_13, b_2].
        let k = SimplicialComplex::full_simplex(&[1, 2, 3]).unwrap();
        let dims = SphereDims::parse("1=5,2=2,3=2", &[1, 2, 3]).unwrap();
        let alg = cobar_spheres(&k, &dims).unwrap();
        let expected = b(&alg, &[1])
            .bracket(&b(&alg, &[2, 3]))
            .unwrap()
            .add(&b(&alg, &[1, 2]).bracket(&b(&alg, &[3])).unwrap())
            .add(&b(&alg, &[1, 3]).bracket(&b(&alg, &[2])).unwrap())
            .neg();
        let top = alg
            .generator_by_token(&GenToken::Simplex(simplex(&[1, 2, 3])))
            .unwrap()
            .clone();
        assert_eq!(alg.diff_of(&top).unwrap(), &expected);
        assert!(alg.check_d_squared().passed());
    }

    #[test]
    fn pair_form_and_anchored_bracket_form_agree() {
        // The differential as a sum over ordered pairs equals the sum of
        // graded brackets over anchored shuffles.
        let complexes = [
            SimplicialComplex::full_simplex(&[1, 2, 3, 4]).unwrap(),
            worked_complex(),
        ];
        type DimsChoice = Box<dyn Fn(&SimplicialComplex) -> SphereDims>;
        let dims_choices: Vec<DimsChoice> = vec![
            Box::new(|k| SphereDims::uniform(k, 2).unwrap()),
            Box::new(|k| {
                SphereDims::from_pairs(
                    k.vertices()
                        .iter()
                        .enumerate()
                        .map(|(i, v)| (*v, 2 + (i as u32 % 3))),
                )
                .unwrap()
            }),
        ];
        for k in &complexes {
            for make_dims in &dims_choices {
                let dims = make_dims(k);
                let alg = cobar_spheres(k, &dims).unwrap();
                for g in alg.generators() {
                    let GenToken::Simplex(j) = g.token() else { panic!() };
                    let s = j.len();
                    if s < 2 {
                        continue;
                    }
                    let degrees: Vec<u32> = j
                        .vertices()
                        .iter()
                        .map(|v| dims.get(*v).unwrap())
                        .collect();
                    let mut via_brackets = GradedElement::zero();
                    for p in 1..s {
                        for theta in shuffles(p, s - p, true) {
                            let eps = koszul_sign(&degrees, &theta).unwrap();
                            let pick = |ts: &[usize]| -> Simplex {
                                simplex(
                                    &ts.iter()
                                        .map(|t| j.vertices()[*t])
                                        .collect::<Vec<_>>(),
                                )
                            };
                            let (i, l) = (pick(&theta[..p]), pick(&theta[p..]));
                            let sign =
                                if dims.sum_over(&i).unwrap() & 1 == 1 { -eps } else { eps };
                            let term = b(&alg, i.vertices())
                                .bracket(&b(&alg, l.vertices()))
                                .unwrap()
                                .scale(&Coeff::from(sign));
                            via_brackets = via_brackets.add(&term);
                        }
                    }
                    assert_eq!(
                        alg.diff_of(g).unwrap(),
                        &via_brackets,
                        "bracket form disagrees for {}",
                        g.token()
                    );
                }
            }
        }
    }

    #[test]
    fn dj_differentials_match_worked_formulas() {
        let point = SimplicialComplex::full_simplex(&[1]).unwrap();
        let alg = cobar_dj(&point, 5).unwrap();
        // d χ_{11} = χ_1 χ_1 — a single ordered split.
        assert_eq!(diff_str(&alg, &GenToken::Multiset(Multiset::from_elements(&[1, 1]).unwrap())), "x{1}*x{1}");

        let edge = edge_complex(1, 2);
        let alg = cobar_dj(&edge, 5).unwrap();
        assert_eq!(
            diff_str(&alg, &GenToken::Multiset(Multiset::from_elements(&[1, 2]).unwrap())),
            "x{1}*x{2} + x{2}*x{1}"
        );
        assert_eq!(
            diff_str(&alg, &GenToken::Multiset(Multiset::from_elements(&[1, 1, 2]).unwrap())),
            "x{1}*x{1,2} + x{1,1}*x{2} + x{1,2}*x{1} + x{2}*x{1,1}"
        );
        assert!(alg.check_d_squared().passed());
    }

    #[test]
    fn dj_generator_counts_follow_compositions() {
        fn binom(n: u32, k: u32) -> usize {
            if k > n {
                return 0;
            }
            let (mut r, mut i) = (1usize, 0u32);
            while i < k {
                r = r * (n - i) as usize / (i + 1) as usize;
                i += 1;
            }
            r
        }
        let k = worked_complex();
        let bound = 11;
        let alg = cobar_dj(&k, bound).unwrap();
        let max_size = bound.div_ceil(2);
        let expected: usize = k
            .nonempty_simplices()
            .map(|j| {
                (j.len() as u32..=max_size)
                    .map(|s| binom(s - 1, j.len() as u32 - 1))
                    .sum::<usize>()
            })
            .sum();
        assert_eq!(alg.generator_count(), expected);
        // Every generator degree is odd and within the bound.
        for g in alg.generators() {
            assert!(g.degree() % 2 == 1 && g.degree() <= bound);
        }
        assert_eq!(alg.degree_bound(), Some(bound));
    }

    #[test]
    fn dj_needs_a_positive_bound() {
        let point = SimplicialComplex::full_simplex(&[1]).unwrap();
        assert!(cobar_dj(&point, 0).is_err());
        let alg = cobar_dj(&point, 1).unwrap();
        assert_eq!(alg.generator_count(), 1);
    }

    #[test]
    fn cpn_differentials_match_the_convolution_formula() {
        let alg = ah_cpn(CpDim::Finite(3), None).unwrap();
        assert_eq!(alg.generator_count(), 3);
        assert_eq!(diff_str(&alg, &GenToken::Named("a1".into())), "0");
        assert_eq!(diff_str(&alg, &GenToken::Named("a2".into())), "a1*a1");
        assert_eq!(diff_str(&alg, &GenToken::Named("a3".into())), "a1*a2 + a2*a1");
        assert!(alg.check_d_squared().passed());
        assert_eq!(alg.degree_bound(), None);
    }

    #[test]
    fn cpn_truncation_rules() {
        assert!(ah_cpn(CpDim::Infinite, None).is_err());
        assert!(ah_cpn(CpDim::Finite(0), None).is_err());
        let alg = ah_cpn(CpDim::Infinite, Some(7)).unwrap();
        assert_eq!(alg.generator_count(), 4); // degrees 1, 3, 5, 7
        assert_eq!(alg.degree_bound(), Some(7));
        // A bound that does not cut the finite list is not recorded.
        let alg = ah_cpn(CpDim::Finite(2), Some(9)).unwrap();
        assert_eq!(alg.degree_bound(), None);
        let alg = ah_cpn(CpDim::Finite(5), Some(4)).unwrap();
        assert_eq!(alg.generator_count(), 2);
        assert_eq!(alg.degree_bound(), Some(4));
    }

    #[test]
    fn leibniz_rule_on_products() {
        let k = worked_complex();
        let dims = SphereDims::parse("1=2,2=3,3=2,4=4,5=2", k.vertices()).unwrap();
        let alg = cobar_spheres(&k, &dims).unwrap();
        let x = b(&alg, &[1, 2]);
        let y = b(&alg, &[4, 5]).add(&b(&alg, &[3, 4]));
        let dx = alg.apply_diff(&x).unwrap();
        let dy = alg.apply_diff(&y).unwrap();
        let product = x.mul(&y);
        let lhs = alg.apply_diff(&product).unwrap();
        // |x| = 2 + 3 − 1 = 4, even: no sign on the second term.
        let rhs = dx.mul(&y).add(&x.mul(&dy));
        assert_eq!(lhs, rhs);

        // Odd first factor flips the sign: |b_4| = 3.
        let x = b(&alg, &[4]);
        let y = b(&alg, &[1, 2]);
        let lhs = alg.apply_diff(&x.mul(&y)).unwrap();
        let rhs = x.mul(&alg.apply_diff(&y).unwrap()).neg();
        assert_eq!(lhs, rhs); // d(b_4) = 0, so only the signed term remains
    }

    #[test]
    fn apply_diff_rejects_foreign_generators() {
        let k = edge_complex(1, 2);
        let dims = SphereDims::uniform(&k, 2).unwrap();
        let alg = cobar_spheres(&k, &dims).unwrap();
        let foreign = GradedElement::from_generator(
            Generator::new(GenToken::Named("z".into()), 3).unwrap(),
        );
        assert!(matches!(
            alg.apply_diff(&foreign),
            Err(Error::ForeignGenerator(_))
        ));
        // Same token, wrong degree: also foreign.
        let wrong_degree = GradedElement::from_generator(
            Generator::new(GenToken::Simplex(simplex(&[1])), 7).unwrap(),
        );
        assert!(alg.apply_diff(&wrong_degree).is_err());
        // The unit is everyone's cycle.
        assert!(alg.apply_diff(&GradedElement::unit()).unwrap().is_zero());
    }

    #[test]
    fn d_squared_detects_a_broken_table() {
        let a = Generator::new(GenToken::Named("a".into()), 1).unwrap();
        let b = Generator::new(GenToken::Named("b".into()), 3).unwrap();
        let c = Generator::new(GenToken::Named("c".into()), 5).unwrap();
        let mut diff = BTreeMap::new();
        diff.insert(
            b.token().clone(),
            GradedElement::from_word(Word::from_factors(vec![a.clone(), a.clone()])),
        );
        // d c = a·b is NOT a cycle: d(a·b) = −a·(a·a) ≠ 0.
        diff.insert(
            c.token().clone(),
            GradedElement::from_word(Word::from_factors(vec![a.clone(), b.clone()])),
        );
        let alg = DgAlgebra::new(vec![a, b, c.clone()], diff, None).unwrap();
        let report = alg.check_d_squared();
        assert!(!report.passed());
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].0, c);
        assert_eq!(report.failures[0].1.to_string(), "-a*a*a");
    }

    #[test]
    fn algebra_validation_rejects_bad_tables() {
        let a = Generator::new(GenToken::Named("a".into()), 1).unwrap();
        let b = Generator::new(GenToken::Named("b".into()), 2).unwrap();
        // Differential of the wrong degree.
        let mut diff = BTreeMap::new();
        diff.insert(b.token().clone(), GradedElement::from_generator(b.clone()));
        assert!(DgAlgebra::new(vec![a.clone(), b.clone()], diff, None).is_err());
        // Differential using a foreign generator.
        let mut diff = BTreeMap::new();
        diff.insert(
            b.token().clone(),
            GradedElement::from_generator(Generator::new(GenToken::Named("z".into()), 1).unwrap()),
        );
        assert!(DgAlgebra::new(vec![a.clone(), b.clone()], diff, None).is_err());
        // Duplicate tokens.
        let a2 = Generator::new(GenToken::Named("a".into()), 3).unwrap();
        assert!(DgAlgebra::new(vec![a.clone(), a2], BTreeMap::new(), None).is_err());
        // Generator above the bound.
        assert!(DgAlgebra::new(vec![b.clone()], BTreeMap::new(), Some(1)).is_err());
    }

    #[test]
    fn cobar_of_homology_coalgebra_reproduces_the_sphere_algebra() {
        let fixtures: Vec<(SimplicialComplex, Vec<u32>)> = vec![
            (SimplicialComplex::full_simplex(&[1, 2, 3, 4]).unwrap(), vec![2, 3, 4, 5]),
            (worked_complex(), vec![2, 2, 2, 2, 2]),
            (worked_complex(), vec![5, 2, 2, 3, 4]),
        ];
        for (k, ds) in fixtures {
            let dims = SphereDims::from_pairs(
                k.vertices().iter().copied().zip(ds.iter().copied()),
            )
            .unwrap();
            let coalgebra = homology_coalgebra(&k, &dims).unwrap();
            coalgebra.check_coassociativity().unwrap();
            let via_cobar = cobar_of_coalgebra(&coalgebra).unwrap();
            let direct = cobar_spheres(&k, &dims).unwrap();
            assert_eq!(via_cobar, direct);
        }
    }

    #[test]
    fn cobar_of_face_coalgebra_reproduces_the_dj_algebra() {
        for bound in [1u32, 4, 9] {
            let k = worked_complex();
            let coalgebra = face_coalgebra(&k, bound + 1).unwrap();
            coalgebra.check_coassociativity().unwrap();
            let via_cobar = cobar_of_coalgebra(&coalgebra).unwrap();
            let direct = cobar_dj(&k, bound).unwrap();
            assert_eq!(via_cobar, direct);
        }
    }

    #[test]
    fn coalgebra_presentation_rejects_low_degrees() {
        let err = CoalgebraPresentation::new(
            vec![(GenToken::Named("c".into()), 1)],
            BTreeMap::new(),
            BTreeMap::new(),
            None,
        );
        assert!(matches!(err, Err(Error::Unsupported(_))));
    }

    #[test]
    fn subalgebra_membership_separates_inside_from_outside() {
        let full = SimplicialComplex::full_simplex(&[1, 2, 3, 4, 5]).unwrap();
        let k = worked_complex();
        let big = cobar_dj(&full, 8).unwrap();
        let small = cobar_dj(&k, 8).unwrap();
        let inside = x(&big, &[1, 2, 4]).mul(&x(&big, &[3, 5]));
        assert!(subalgebra_membership(&big, &small, &inside).unwrap());
        // χ_{123} exists in the full algebra but {1,2,3} is not in k.
        let outside = x(&big, &[1, 2, 3]);
        assert!(!subalgebra_membership(&big, &small, &outside).unwrap());
        // Elements must at least live in the ambient algebra.
        let foreign = GradedElement::from_generator(
            Generator::new(GenToken::Named("q".into()), 2).unwrap(),
        );
        assert!(subalgebra_membership(&big, &small, &foreign).is_err());
        // And the small algebra must embed in the big one.
        assert!(subalgebra_membership(&small, &big, &inside).is_err());
    }

    #[test]
    fn canonical_embedding_is_a_chain_map_for_dimension_two() {
        let k = worked_complex();
        let dims = SphereDims::uniform(&k, 2).unwrap();
        let spheres = cobar_spheres(&k, &dims).unwrap();
        let dj = cobar_dj(&k, spheres.max_generator_degree()).unwrap();
        let map = canonical_embedding(&spheres, &dj).unwrap();
        assert!(map.chain_map_failures(&spheres, &dj).unwrap().is_empty());
    }

    #[test]
    fn canonical_embedding_fails_chain_check_for_other_dimensions() {
        let k = edge_complex(1, 2);
        let dims = SphereDims::parse("1=4,2=2", &[1, 2]).unwrap();
        let spheres = cobar_spheres(&k, &dims).unwrap();
        let dj = cobar_dj(&k, 8).unwrap();
        let map = canonical_embedding(&spheres, &dj).unwrap();
        // b_{12} has degree 5 but χ_{12} has degree 3: not degree-preserving.
        assert!(!map.chain_map_failures(&spheres, &dj).unwrap().is_empty());
    }

    #[test]
    fn embedding_needs_the_target_generators() {
        let k = worked_complex();
        let dims = SphereDims::uniform(&k, 2).unwrap();
        let spheres = cobar_spheres(&k, &dims).unwrap();
        // Bound 3 lacks χ_J for the triangles (degree 5).
        let dj = cobar_dj(&k, 3).unwrap();
        assert!(canonical_embedding(&spheres, &dj).is_err());
    }
}

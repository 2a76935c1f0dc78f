//! The free graded tensor algebra over ℤ on a finite set of generators, with
//! exact `BigInt` coefficients.
//!
//! Elements are finite ℤ-linear combinations of *words* (ordered sequences of
//! generators); multiplication concatenates words and is ℤ-bilinear. Nothing
//! here knows about differentials — that lives one layer up — but the graded
//! sign conventions do live here:
//!
//! * the graded commutator `[a, b] = a·b − (−1)^{|a||b|} b·a`, defined for
//!   homogeneous `a`, `b`;
//! * the Koszul sign of a permutation of graded symbols: each transposition
//!   of adjacent symbols of degrees `d_i`, `d_j` contributes `(−1)^{d_i d_j}`;
//! * `(p, q)`-shuffles, used to index unshuffle-style sums.
//!
//! Words are ordered by (total degree, length, factor-by-factor token order);
//! element terms are kept in that order, which fixes a canonical rendering:
//! `b{1,2}` for a simplex-indexed generator, `x{1,1,2}` for a multiset-indexed
//! one, a plain name like `a3` otherwise, factors joined by `*`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::complex::{Multiset, Simplex};
use crate::error::{Error, Result};

/// Exact integer coefficients.
pub type Coeff = BigInt;

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// The identity of a generator. Two generators are the same exactly when
/// their tokens are equal; the token also fixes the rendering.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenToken {
    /// A generator indexed by a simplex, rendered `b{1,2,4}`.
    Simplex(Simplex),
    /// A generator indexed by a vertex multiset, rendered `x{1,1,2}`.
    Multiset(Multiset),
    /// A free-form name, rendered verbatim, e.g. `a3`.
    Named(String),
}

impl GenToken {
    /// The vertex content of the token, when it has one: simplex tokens count
    /// each vertex once, multiset tokens count multiplicities, named tokens
    /// have no content. Differentials of the complex-indexed algebras
    /// preserve total content, which lets degree bases split into blocks.
    pub fn content(&self) -> Option<Multiset> {
        match self {
            GenToken::Simplex(s) => {
                Some(Multiset::from_elements(s.vertices()).expect("simplex vertices are valid"))
            }
            GenToken::Multiset(m) => Some(m.clone()),
            GenToken::Named(_) => None,
        }
    }
}

impl fmt::Display for GenToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenToken::Simplex(s) => write!(f, "b{s}"),
            GenToken::Multiset(m) => write!(f, "x{m}"),
            GenToken::Named(name) => write!(f, "{name}"),
        }
    }
}

/// A generator: a token plus its (positive) homological degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Generator {
    token: GenToken,
    degree: u32,
}

impl Generator {
    pub fn new(token: GenToken, degree: u32) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Unsupported(format!(
                "generator {token} would have degree 0; generators live in degree >= 1"
            )));
        }
        Ok(Generator { token, degree })
    }

    pub fn token(&self) -> &GenToken {
        &self.token
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Generators list by (degree, token), so tables print low degrees first.
impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree, &self.token).cmp(&(other.degree, &other.token))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token)
    }
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

/// A word in the free algebra: an ordered sequence of generators. The empty
/// word is the algebra unit.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    factors: Vec<Generator>,
}

impl Word {
    pub fn unit() -> Self {
        Word { factors: Vec::new() }
    }

    pub fn from_factors(factors: Vec<Generator>) -> Self {
        Word { factors }
    }

    pub fn single(g: Generator) -> Self {
        Word { factors: vec![g] }
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(Generator::degree).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        Word { factors }
    }

    /// Total vertex content of the word (see [`GenToken::content`]); `None`
    /// as soon as one factor has none.
    pub fn content(&self) -> Option<Multiset> {
        let mut acc = Multiset::empty();
        for g in &self.factors {
            acc = acc.union(&g.token.content()?);
        }
        Some(acc)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Words sort by (degree, length, then factor-by-factor token order); the
/// degrees of equal-token factors break any remaining tie so the order stays
/// total even across algebras that grade a token differently.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.factors.len().cmp(&other.factors.len()))
            .then_with(|| {
                let mine = self.factors.iter().map(|g| (&g.token, g.degree));
                let theirs = other.factors.iter().map(|g| (&g.token, g.degree));
                mine.cmp(theirs)
            })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Graded elements
// ---------------------------------------------------------------------------

/// A finite ℤ-linear combination of words. The zero element stores no terms;
/// stored coefficients are never zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedElement {
    terms: BTreeMap<Word, Coeff>,
}

impl GradedElement {
    pub fn zero() -> Self {
        GradedElement { terms: BTreeMap::new() }
    }

    /// The algebra unit, `1`.
    pub fn unit() -> Self {
        GradedElement::from_word(Word::unit())
    }

    pub fn from_word(word: Word) -> Self {
        GradedElement::from_term(word, Coeff::one())
    }

    pub fn from_generator(g: Generator) -> Self {
        GradedElement::from_word(Word::single(g))
    }

    pub fn from_term(word: Word, coeff: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        GradedElement { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Coeff)>) -> Self {
        let mut out = GradedElement::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &Word) -> Coeff {
        self.terms.get(word).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Adds `coeff · word` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, word: Word, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &GradedElement) -> GradedElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> GradedElement {
        GradedElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &GradedElement) -> GradedElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, k: &Coeff) -> GradedElement {
        if k.is_zero() {
            return GradedElement::zero();
        }
        GradedElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Free-algebra product: bilinear extension of word concatenation.
    pub fn mul(&self, other: &GradedElement) -> GradedElement {
        let mut out = GradedElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// The common degree of all terms: `Ok(None)` for the zero element,
    /// `Ok(Some(d))` when homogeneous of degree `d`, an error otherwise.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut degree = None;
        for w in self.terms.keys() {
            match degree {
                None => degree = Some(w.degree()),
                Some(d) if d != w.degree() => {
                    return Err(Error::MixedDegree(d, w.degree()));
                }
                Some(_) => {}
            }
        }
        Ok(degree)
    }

    /// Graded commutator `[a, b] = a·b − (−1)^{|a||b|} b·a`. Both inputs must
    /// be homogeneous; zero is homogeneous of any degree.
    pub fn bracket(&self, other: &GradedElement) -> Result<GradedElement> {
        let da = self.homogeneous_degree()?;
        let db = other.homogeneous_degree()?;
        let (da, db) = match (da, db) {
            (Some(a), Some(b)) => (a, b),
            // A bracket with zero is zero regardless of degrees.
            _ => return Ok(GradedElement::zero()),
        };
        let ab = self.mul(other);
        let ba = other.mul(self);
        if (da & 1) & (db & 1) == 1 {
            Ok(ab.add(&ba))
        } else {
            Ok(ab.sub(&ba))
        }
    }

    /// Extends a generator-wise map multiplicatively and linearly:
    /// each word maps to the ordered product of its factors' images.
    pub fn substitute(
        &self,
        image: &mut impl FnMut(&Generator) -> Result<GradedElement>,
    ) -> Result<GradedElement> {
        let mut out = GradedElement::zero();
        for (word, coeff) in &self.terms {
            let mut acc = GradedElement::unit();
            for g in word.factors() {
                acc = acc.mul(&image(g)?);
            }
            for (w, c) in acc.terms {
                out.add_term(w, coeff.clone() * c);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (word, coeff)) in self.terms.iter().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() {
                write!(f, "{word}")?;
            } else if word.is_empty() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{word}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &GradedElement {
    type Output = GradedElement;
    fn add(self, rhs: &GradedElement) -> GradedElement {
        GradedElement::add(self, rhs)
    }
}

impl std::ops::Sub for &GradedElement {
    type Output = GradedElement;
    fn sub(self, rhs: &GradedElement) -> GradedElement {
        GradedElement::sub(self, rhs)
    }
}

impl std::ops::Mul for &GradedElement {
    type Output = GradedElement;
    fn mul(self, rhs: &GradedElement) -> GradedElement {
        GradedElement::mul(self, rhs)
    }
}

impl std::ops::Neg for &GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        GradedElement::neg(self)
    }
}

// ---------------------------------------------------------------------------
// Koszul signs and shuffles
// ---------------------------------------------------------------------------

/// The Koszul sign of rearranging graded symbols of the given degrees into
/// the order `perm`: `perm[t]` is the original (0-based) position of the
/// symbol now at position `t`. Every inverted pair — original positions
/// `i < j` with `j` placed before `i` — contributes `(−1)^{d_i · d_j}`.
pub fn koszul_sign(degrees: &[u32], perm: &[usize]) -> Result<i8> {
    if perm.len() != degrees.len() {
        return Err(Error::Malformed(format!(
            "permutation length {} does not match {} degrees",
            perm.len(),
            degrees.len()
        )));
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(Error::Malformed("not a permutation".into()));
        }
        seen[p] = true;
    }
    let mut negative = false;
    for t in 0..perm.len() {
        for u in (t + 1)..perm.len() {
            if perm[t] > perm[u] && degrees[perm[t]] & 1 == 1 && degrees[perm[u]] & 1 == 1 {
                negative = !negative;
            }
        }
    }
    Ok(if negative { -1 } else { 1 })
}

/// All `(p, q)`-shuffles of `0..p+q`, each as the list
/// `[positions of the first block (increasing), positions of the second
/// block (increasing)]`. With `anchor_first`, only shuffles whose first
/// block starts with position `0` are produced.
///
/// There are `C(p+q, p)` shuffles, `C(p+q−1, p−1)` anchored ones, and the
/// anchored `(p, q)`- and `(q, p)`-shuffles (blocks read in the other order)
/// together partition the full set according to where position `0` lands.
pub fn shuffles(p: usize, q: usize, anchor_first: bool) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    let n = p + q;
    let mut out = Vec::new();
    for first_block in (0..n).combinations(p) {
        if anchor_first && first_block.first() != Some(&0) {
            continue;
        }
        let mut perm = first_block.clone();
        perm.extend((0..n).filter(|i| !first_block.contains(i)));
        out.push(perm);
    }
    out
}

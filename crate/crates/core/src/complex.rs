//! Finite simplicial complexes on positive-integer vertex labels, plus the
//! two combinatorial gadgets the loop-space algebras are indexed by:
//! [`Simplex`] (a finite subset of the vertices) and [`Multiset`] (a finite
//! multiset of vertices).
//!
//! A complex is stored as its *complete* downward-closed family of simplices,
//! always containing the empty simplex and every singleton of the vertex set.
//! Construction from a facet list computes the closure; every constructor
//! validates closure, so any `SimplicialComplex` value is a genuine complex.
//!
//! The JSON wire format is
//!
//! ```json
//! {"vertices": [1, 2, 3, 4, 5], "facets": [[1, 2, 4], [4, 5]]}
//! ```
//!
//! and [`SimplicialComplex`] (de)serializes to exactly that shape; loading
//! recomputes the closure and re-validates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex labels are positive integers; `0` is rejected at construction.
pub type VertexId = u32;

/// Full simplices are enumerated by bitmask over their vertices, so cap the
/// vertex count at one that keeps `2^n` enumeration sane.
const MAX_FULL_SIMPLEX_VERTICES: usize = 20;

// ---------------------------------------------------------------------------
// Simplex
// ---------------------------------------------------------------------------

/// A simplex: a strictly increasing sequence of vertex ids. The empty
/// simplex is allowed (every complex contains it).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    /// Builds a simplex from vertex ids in any order. Rejects duplicates and
    /// the label `0`.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.first() == Some(&0) {
            return Err(Error::Malformed("vertex ids must be positive".into()));
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Malformed(format!(
                "duplicate vertex id in simplex {:?}",
                vertices
            )));
        }
        Ok(Simplex { vertices })
    }

    /// The empty simplex.
    pub fn empty() -> Self {
        Simplex { vertices: Vec::new() }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        self.vertices.iter().all(|v| other.contains_vertex(*v))
    }

    /// Union of two simplices with *disjoint* vertex sets; overlap is an
    /// input error (the substitution construction requires disjoint parts).
    pub fn disjoint_union(&self, other: &Simplex) -> Result<Simplex> {
        if let Some(v) = self.vertices.iter().find(|v| other.contains_vertex(**v)) {
            return Err(Error::Malformed(format!(
                "vertex {v} occurs on both sides of a disjoint union"
            )));
        }
        let mut vertices: Vec<VertexId> =
            self.vertices.iter().chain(&other.vertices).copied().collect();
        vertices.sort_unstable();
        Ok(Simplex { vertices })
    }

    /// All subsets, the empty simplex and `self` included.
    pub fn subsets(&self) -> Vec<Simplex> {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u32..(1 << n) {
            let vertices = self
                .vertices
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, v)| *v)
                .collect();
            out.push(Simplex { vertices });
        }
        out
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl TryFrom<Vec<VertexId>> for Simplex {
    type Error = Error;
    fn try_from(v: Vec<VertexId>) -> Result<Self> {
        Simplex::new(v)
    }
}

impl From<Simplex> for Vec<VertexId> {
    fn from(s: Simplex) -> Self {
        s.vertices
    }
}

// ---------------------------------------------------------------------------
// Multiset
// ---------------------------------------------------------------------------

/// A finite multiset of vertices with positive multiplicities, e.g.
/// `{1, 1, 2}`. Ordered lexicographically by its expanded vertex sequence,
/// so `{1,1} < {1,1,2} < {1,2}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multiset {
    counts: BTreeMap<VertexId, u32>,
}

impl Multiset {
    /// Tallies a list of vertices (any order, repeats meaningful).
    pub fn from_elements(elements: &[VertexId]) -> Result<Self> {
        if elements.contains(&0) {
            return Err(Error::Malformed("vertex ids must be positive".into()));
        }
        let mut counts = BTreeMap::new();
        for &v in elements {
            *counts.entry(v).or_insert(0) += 1;
        }
        Ok(Multiset { counts })
    }

    /// Builds from explicit multiplicities; zero multiplicities are dropped.
    pub fn from_counts(counts: impl IntoIterator<Item = (VertexId, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (v, c) in counts {
            if v == 0 {
                return Err(Error::Malformed("vertex ids must be positive".into()));
            }
            if c > 0 && map.insert(v, c).is_some() {
                return Err(Error::Malformed(format!(
                    "vertex {v} listed twice in multiset counts"
                )));
            }
        }
        Ok(Multiset { counts: map })
    }

    pub fn empty() -> Self {
        Multiset { counts: BTreeMap::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total number of elements counted with multiplicity.
    pub fn size(&self) -> u32 {
        self.counts.values().sum()
    }

    /// The support: the set of vertices with positive multiplicity.
    pub fn support(&self) -> Simplex {
        Simplex { vertices: self.counts.keys().copied().collect() }
    }

    pub fn multiplicity(&self, v: VertexId) -> u32 {
        self.counts.get(&v).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.counts.iter().map(|(v, c)| (*v, *c))
    }

    /// The expanded sequence, e.g. `{1:2, 2:1}` → `[1, 1, 2]`.
    pub fn expanded(&self) -> Vec<VertexId> {
        self.counts
            .iter()
            .flat_map(|(v, c)| std::iter::repeat(*v).take(*c as usize))
            .collect()
    }

    /// Multiset union (adds multiplicities).
    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut counts = self.counts.clone();
        for (v, c) in &other.counts {
            *counts.entry(*v).or_insert(0) += c;
        }
        Multiset { counts }
    }

    /// Pointwise ≤ on multiplicities.
    pub fn is_submultiset_of(&self, other: &Multiset) -> bool {
        self.counts.iter().all(|(v, c)| *c <= other.multiplicity(*v))
    }

    /// Pointwise difference `self - other`, or `None` if some multiplicity
    /// would go negative.
    pub fn checked_sub(&self, other: &Multiset) -> Option<Multiset> {
        let mut counts = BTreeMap::new();
        for (v, c) in &self.counts {
            match c.checked_sub(other.multiplicity(*v)) {
                Some(0) => {}
                Some(rest) => {
                    counts.insert(*v, rest);
                }
                None => return None,
            }
        }
        // `other` must not contain vertices absent from `self`.
        if other.counts.keys().any(|v| !self.counts.contains_key(v)) {
            return None;
        }
        Some(Multiset { counts })
    }

    /// All ordered pairs `(tau, sigma - tau)` of nonempty submultisets with
    /// union `self`. For `{1,1}` this is the single pair `({1}, {1})`; for
    /// `{1,2}` it is `({1},{2})` and `({2},{1})`.
    pub fn proper_splits(&self) -> Vec<(Multiset, Multiset)> {
        let entries: Vec<(VertexId, u32)> = self.counts().collect();
        let mut choice = vec![0u32; entries.len()];
        let mut out = Vec::new();
        loop {
            // Advance the mixed-radix counter `choice` (digit i runs to the
            // multiplicity of vertex i).
            let mut i = 0;
            while i < entries.len() {
                if choice[i] < entries[i].1 {
                    choice[i] += 1;
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == entries.len() {
                break; // wrapped around: all splits seen
            }
            if choice.iter().zip(&entries).all(|(c, (_, m))| c == m) {
                continue; // tau = sigma leaves the complement empty
            }
            let tau = Multiset {
                counts: entries
                    .iter()
                    .zip(&choice)
                    .filter(|(_, c)| **c > 0)
                    .map(|((v, _), c)| (*v, *c))
                    .collect(),
            };
            let rest = self.checked_sub(&tau).expect("tau is a submultiset by construction");
            out.push((tau, rest));
        }
        out.sort();
        out
    }
}

impl PartialOrd for Multiset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Multiset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = self
            .counts
            .iter()
            .flat_map(|(v, c)| std::iter::repeat(*v).take(*c as usize));
        let b = other
            .counts
            .iter()
            .flat_map(|(v, c)| std::iter::repeat(*v).take(*c as usize));
        a.cmp(b)
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.expanded().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

// ---------------------------------------------------------------------------
// SimplicialComplex
// ---------------------------------------------------------------------------

/// An abstract simplicial complex: a downward-closed family of simplices on
/// a fixed vertex set, containing the empty simplex and all singletons.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "ComplexFile", into = "ComplexFile")]
pub struct SimplicialComplex {
    vertices: Vec<VertexId>,
    simplices: BTreeSet<Simplex>,
}

/// The JSON shape of a complex: ground set plus maximal simplices.
#[derive(Serialize, Deserialize)]
struct ComplexFile {
    vertices: Vec<VertexId>,
    facets: Vec<Simplex>,
}

impl SimplicialComplex {
    /// Builds the downward closure of `facets` on the given vertex set.
    /// Every singleton of `vertices` is included whether or not it lies in a
    /// facet. Facets may overlap or repeat; the closure deduplicates.
    pub fn from_facets(vertices: Vec<VertexId>, facets: Vec<Simplex>) -> Result<Self> {
        let mut ground = vertices;
        ground.sort_unstable();
        if ground.first() == Some(&0) {
            return Err(Error::Malformed("vertex ids must be positive".into()));
        }
        if ground.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Malformed("duplicate vertex id in vertex list".into()));
        }
        let mut simplices = BTreeSet::new();
        simplices.insert(Simplex::empty());
        for v in &ground {
            simplices.insert(Simplex { vertices: vec![*v] });
        }
        for facet in &facets {
            if facet.len() > MAX_FULL_SIMPLEX_VERTICES {
                return Err(Error::Unsupported(format!(
                    "facet {facet} has more than {MAX_FULL_SIMPLEX_VERTICES} vertices"
                )));
            }
            if let Some(v) = facet.vertices().iter().find(|v| ground.binary_search(v).is_err()) {
                return Err(Error::Malformed(format!(
                    "facet {facet} uses vertex {v} outside the vertex set"
                )));
            }
            simplices.extend(facet.subsets());
        }
        let complex = SimplicialComplex { vertices: ground, simplices };
        complex.validate()?;
        Ok(complex)
    }

    /// The full simplex on the given (distinct) vertices: all `2^n` subsets.
    pub fn full_simplex(vertices: &[VertexId]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Unsupported(
                "full simplex needs at least one vertex".into(),
            ));
        }
        if vertices.len() > MAX_FULL_SIMPLEX_VERTICES {
            return Err(Error::Unsupported(format!(
                "full simplex on more than {MAX_FULL_SIMPLEX_VERTICES} vertices"
            )));
        }
        let top = Simplex::new(vertices.to_vec())?;
        if top.len() != vertices.len() {
            return Err(Error::Malformed("duplicate vertex id".into()));
        }
        SimplicialComplex::from_facets(top.vertices().to_vec(), vec![top])
    }

    /// The boundary of the full simplex: all subsets except the top one.
    /// Needs at least two vertices (the boundary of a point is empty and not
    /// a complex on its vertex set).
    pub fn boundary_simplex(vertices: &[VertexId]) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::Unsupported(
                "boundary simplex needs at least two vertices".into(),
            ));
        }
        let mut full = SimplicialComplex::full_simplex(vertices)?;
        let top = Simplex::new(vertices.to_vec())?;
        full.simplices.remove(&top);
        full.validate()?;
        Ok(full)
    }

    /// The substitution complex: `parts[l]` replaces the `l`-th vertex of
    /// `self` (in vertex order). Its simplices are the disjoint unions
    /// `I_{j_1} ⊔ … ⊔ I_{j_k}` where `{j_1, …, j_k}` runs over the simplices
    /// of `self` and each `I_{j_l}` over the simplices of the corresponding
    /// part. Parts must have pairwise disjoint vertex sets; the result lives
    /// on their union.
    pub fn substitution(&self, parts: &[SimplicialComplex]) -> Result<SimplicialComplex> {
        if parts.len() != self.vertices.len() {
            return Err(Error::Malformed(format!(
                "substitution needs one part per vertex: {} vertices, {} parts",
                self.vertices.len(),
                parts.len()
            )));
        }
        let mut seen: BTreeMap<VertexId, usize> = BTreeMap::new();
        for (l, part) in parts.iter().enumerate() {
            for v in &part.vertices {
                if let Some(other) = seen.insert(*v, l) {
                    return Err(Error::Malformed(format!(
                        "parts {other} and {l} share the vertex {v}"
                    )));
                }
            }
        }
        let vertices: Vec<VertexId> = seen.keys().copied().collect();

        let mut simplices = BTreeSet::new();
        for outer in &self.simplices {
            // All ways of picking one simplex from each part indexed by the
            // outer simplex, combined by disjoint union.
            let mut partial: Vec<Simplex> = vec![Simplex::empty()];
            for v in outer.vertices() {
                let l = self
                    .vertices
                    .binary_search(v)
                    .expect("outer simplex vertex is in the outer vertex set");
                let mut next = Vec::with_capacity(partial.len() * parts[l].simplices.len());
                for base in &partial {
                    for piece in &parts[l].simplices {
                        next.push(base.disjoint_union(piece)?);
                    }
                }
                partial = next;
            }
            simplices.extend(partial);
        }

        let complex = SimplicialComplex { vertices, simplices };
        complex.validate()?;
        Ok(complex)
    }

    /// True iff every simplex of `other` is a simplex of `self`.
    pub fn contains_subcomplex(&self, other: &SimplicialComplex) -> bool {
        other.simplices.iter().all(|s| self.simplices.contains(s))
    }

    pub fn contains(&self, simplex: &Simplex) -> bool {
        self.simplices.contains(simplex)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// All simplices, the empty one included, in lexicographic order.
    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn nonempty_simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().filter(|s| !s.is_empty())
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    /// The maximal simplices, in lexicographic order.
    pub fn facets(&self) -> Vec<Simplex> {
        self.simplices
            .iter()
            .filter(|s| {
                !self
                    .simplices
                    .iter()
                    .any(|t| t.len() > s.len() && s.is_subset_of(t))
            })
            .cloned()
            .collect()
    }

    /// Checks the defining invariants: downward closure, empty simplex and
    /// singletons present, all simplices inside the vertex set.
    fn validate(&self) -> Result<()> {
        if !self.simplices.contains(&Simplex::empty()) {
            return Err(Error::Internal("complex lost the empty simplex".into()));
        }
        for v in &self.vertices {
            if !self.simplices.contains(&Simplex { vertices: vec![*v] }) {
                return Err(Error::Internal(format!("missing singleton {{{v}}}")));
            }
        }
        for s in &self.simplices {
            for v in s.vertices() {
                if self.vertices.binary_search(v).is_err() {
                    return Err(Error::Internal(format!(
                        "simplex {s} leaves the vertex set"
                    )));
                }
            }
            // Downward closure: removing any single vertex stays inside.
            for drop in 0..s.len() {
                let face = Simplex {
                    vertices: s
                        .vertices()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != drop)
                        .map(|(_, v)| *v)
                        .collect(),
                };
                if !self.simplices.contains(&face) {
                    return Err(Error::Internal(format!(
                        "family not downward closed: {s} present, face {face} missing"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Loads a complex from its JSON form, recomputing the closure.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Malformed(format!("complex JSON: {e}")))
    }

    /// Renders the complex into its JSON form (vertices + facets).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("complex serialization cannot fail")
    }
}

impl TryFrom<ComplexFile> for SimplicialComplex {
    type Error = Error;
    fn try_from(file: ComplexFile) -> Result<Self> {
        SimplicialComplex::from_facets(file.vertices, file.facets)
    }
}

impl From<SimplicialComplex> for ComplexFile {
    fn from(k: SimplicialComplex) -> Self {
        ComplexFile { vertices: k.vertices.clone(), facets: k.facets() }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex on {{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}} with facets ")?;
        for (i, facet) in self.facets().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{facet}")?;
        }
        Ok(())
    }
}

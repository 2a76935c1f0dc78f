//! Hurewicz images of higher Whitehead products.
//!
//! A higher Whitehead product of the canonical sphere classes attaches a
//! top cell along a product of spheres. In the loop-space algebra model its
//! Hurewicz image is an explicit cycle built from the attaching data. This
//! module constructs those cycles:
//!
//! * [`attaching_cycle`] — the image of the top-cell attaching map of a
//!   product of spheres, as an element of the boundary-complex algebra;
//! * [`first_order_hurewicz_cycle`] — the cycle of an unnested product
//!   `[μ_{i₁}, …, μ_{i_m}]` inside `Cobar ℤ⟨K⟩`, defined exactly when
//!   `∂Δ(i₁,…,i_m) ⊆ K`;
//! * [`iterated_example_chain`] — the worked nested product
//!   `[[μ₁,μ₂,μ₃],μ₄,μ₅]` over `K = ∂Δ(∂Δ(1,2,3),4,5)`, evaluated along
//!   two independent routes that must agree exactly;
//! * [`hurewicz_class_report`] — cycle/boundary status of a chain's
//!   homology class, with an explicit bounding witness when it vanishes.
//!
//! Nested products other than the worked example are not constructed: the
//! general nested case has no finite recipe here, and the bracket grammar
//! feeds only the subcomplex inclusion tests for such expressions.

use std::collections::BTreeMap;

use num_traits::One;

use crate::algebra::{Coeff, GenToken, GradedElement, Word};
use crate::bracket::BracketExpr;
use crate::cobar::{
    canonical_embedding, cobar_dj, cobar_spheres, subalgebra_membership, DgAlgebra, DgaMap,
    SphereDims,
};
use crate::complex::{Multiset, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::homology::{class_is_zero, ClassVerdict};

/// The Hurewicz image of a higher Whitehead product: an explicit cycle in a
/// degree-truncated algebra `Cobar ℤ⟨K⟩`.
///
/// Invariants (enforced by the constructors in this module): `chain` is a
/// homogeneous cycle of degree `degree` in `ambient`, and every word of
/// `chain` is supported on simplices of the underlying complex.
#[derive(Clone, Debug)]
pub struct WhiteheadChain {
    /// The product this chain represents.
    pub bracket: BracketExpr,
    /// The algebra the chain lives in.
    pub ambient: DgAlgebra,
    /// The representing cycle.
    pub chain: GradedElement,
    /// Homogeneous degree of `chain`.
    pub degree: u32,
}

/// The cycle traced by the attaching map of the top cell of a product of
/// spheres over `J`: the differential of the top generator `b_J`, computed
/// in the full-simplex algebra. Every word of the result involves proper
/// subsets of `J` only, so the element lies in the subalgebra of the
/// boundary complex `∂Δ(J)`.
pub fn attaching_cycle(j: &Simplex, dims: &SphereDims) -> Result<GradedElement> {
    if j.len() < 2 {
        return Err(Error::Malformed(format!(
            "an attaching cycle needs at least two vertices, got {j}"
        )));
    }
    let full = SimplicialComplex::full_simplex(j.vertices())?;
    let alg = cobar_spheres(&full, dims)?;
    let top = alg
        .generator_by_token(&GenToken::Simplex(j.clone()))
        .ok_or_else(|| {
            Error::Internal("the full-simplex algebra lacks its top generator".to_string())
        })?;
    Ok(alg.diff_of(top)?.clone())
}

/// The Hurewicz-image cycle of the unnested (first-order) higher Whitehead
/// product of the canonical classes at `vertices`, inside `Cobar ℤ⟨K⟩`
/// truncated at degree `2m − 1` (`m` = number of vertices).
///
/// The product is defined exactly when `∂Δ(vertices) ⊆ K`; otherwise this
/// fails with [`Error::NotDefined`] naming a missing simplex. The cycle is
/// the partition sum `Σ χ_{σ₁} χ_{σ₂}` over ordered pairs of nonempty
/// disjoint subsets covering the vertex set — the expression the
/// differential of `χ_{vertices}` would produce — and has degree `2m − 2`.
pub fn first_order_hurewicz_cycle(
    vertices: &[VertexId],
    k: &SimplicialComplex,
) -> Result<WhiteheadChain> {
    let simplex = Simplex::new(vertices.to_vec())?;
    if simplex.len() < 2 {
        return Err(Error::Malformed(format!(
            "a product needs at least two vertices, got {}",
            simplex.len()
        )));
    }
    let boundary = SimplicialComplex::boundary_simplex(simplex.vertices())?;
    if !k.contains_subcomplex(&boundary) {
        let missing = boundary
            .nonempty_simplices()
            .find(|s| !k.contains(s))
            .expect("a non-contained subcomplex has a missing simplex");
        return Err(Error::NotDefined {
            missing: missing.to_string(),
        });
    }

    let m = simplex.len() as u32;
    let ambient = cobar_dj(k, 2 * m - 1)?;
    let sigma = Multiset::from_elements(simplex.vertices())?;
    let mut chain = GradedElement::zero();
    for (left, right) in sigma.proper_splits() {
        let l = dj_generator(&ambient, left)?;
        let r = dj_generator(&ambient, right)?;
        chain.add_term(Word::from_factors(vec![l, r]), Coeff::one());
    }

    let degree = 2 * m - 2;
    if chain.homogeneous_degree()? != Some(degree) {
        return Err(Error::Internal(
            "the partition sum is not homogeneous of the expected degree".to_string(),
        ));
    }
    if !ambient.apply_diff(&chain)?.is_zero() {
        return Err(Error::Internal(
            "the partition sum is not a cycle".to_string(),
        ));
    }
    let bracket = BracketExpr::node(
        simplex
            .vertices()
            .iter()
            .map(|v| BracketExpr::leaf(*v))
            .collect::<Result<Vec<_>>>()?,
    )?;
    Ok(WhiteheadChain {
        bracket,
        ambient,
        chain,
        degree,
    })
}

fn dj_generator(alg: &DgAlgebra, sigma: Multiset) -> Result<crate::algebra::Generator> {
    alg.generator_by_token(&GenToken::Multiset(sigma.clone()))
        .cloned()
        .ok_or_else(|| {
            Error::Internal(format!(
                "expected generator x{sigma} is missing from the ambient algebra"
            ))
        })
}

/// The image table of the algebra-model map induced by substituting the
/// three-fold product into the first slot of a three-vertex boundary
/// complex — the map used by the worked nested example.
///
/// Returns `(domain, codomain, map)`:
/// * domain — the sphere-product algebra over `∂Δ(1,2,3)` with dimensions
///   `(5, 2, 2)` (generators `b₁, b₂, b₃, b₁₂, b₁₃, b₂₃` of degrees
///   `4, 1, 1, 6, 6, 3`);
/// * codomain — the sphere-product algebra over `∂Δ(∂Δ(1,2,3),4,5)` with
///   every dimension 2;
/// * map — `b₁ ↦ [c₁,c₂₃]+[c₁₂,c₃]+[c₁₃,c₂]`, `b₂ ↦ c₄`, `b₃ ↦ c₅`,
///   `b₁₂ ↦ [c₁₂₄,c₃]+[c₁₃₄,c₂]+[c₁,c₂₃₄]+[c₁₂,c₃₄]+[c₁₃,c₂₄]+[c₁₄,c₂₃]`,
///   `b₁₃ ↦` the same six brackets with `5` in place of `4`, and
///   `b₂₃ ↦ c₄₅` (writing `c_J` for the codomain generators).
pub fn ah_map_g_images() -> Result<(DgAlgebra, DgAlgebra, DgaMap)> {
    let inner = SimplicialComplex::boundary_simplex(&[1, 2, 3])?;
    let dims = SphereDims::from_pairs([(1, 5), (2, 2), (3, 2)])?;
    let domain = cobar_spheres(&inner, &dims)?;

    let k = substituted_example_complex()?;
    let codomain = cobar_spheres(&k, &SphereDims::uniform(&k, 2)?)?;

    let c = |vs: &[VertexId]| -> Result<GradedElement> {
        let s = Simplex::new(vs.to_vec())?;
        let g = codomain.generator_by_token(&GenToken::Simplex(s)).ok_or_else(|| {
            Error::Internal(format!(
                "the codomain algebra lacks a generator for {vs:?}"
            ))
        })?;
        Ok(GradedElement::from_generator(g.clone()))
    };
    // Sum of graded brackets [c_{first}, c_{second}] over a list of pairs.
    let bracket_sum = |pairs: &[(&[VertexId], &[VertexId])]| -> Result<GradedElement> {
        let mut acc = GradedElement::zero();
        for (a, b) in pairs {
            acc = acc.add(&c(a)?.bracket(&c(b)?)?);
        }
        Ok(acc)
    };

    let mut images: BTreeMap<GenToken, GradedElement> = BTreeMap::new();
    let tok = |vs: &[VertexId]| -> Result<GenToken> {
        Ok(GenToken::Simplex(Simplex::new(vs.to_vec())?))
    };
    images.insert(
        tok(&[1])?,
        bracket_sum(&[(&[1], &[2, 3]), (&[1, 2], &[3]), (&[1, 3], &[2])])?,
    );
    images.insert(tok(&[2])?, c(&[4])?);
    images.insert(tok(&[3])?, c(&[5])?);
    images.insert(
        tok(&[1, 2])?,
        bracket_sum(&[
            (&[1, 2, 4], &[3]),
            (&[1, 3, 4], &[2]),
            (&[1], &[2, 3, 4]),
            (&[1, 2], &[3, 4]),
            (&[1, 3], &[2, 4]),
            (&[1, 4], &[2, 3]),
        ])?,
    );
    images.insert(
        tok(&[1, 3])?,
        bracket_sum(&[
            (&[1, 2, 5], &[3]),
            (&[1, 3, 5], &[2]),
            (&[1], &[2, 3, 5]),
            (&[1, 2], &[3, 5]),
            (&[1, 3], &[2, 5]),
            (&[1, 5], &[2, 3]),
        ])?,
    );
    images.insert(tok(&[2, 3])?, c(&[4, 5])?);

    Ok((domain, codomain, DgaMap::new(images)))
}

/// The complex `∂Δ(∂Δ(1,2,3),4,5)` of the worked nested example, derived
/// from its bracket expression.
fn substituted_example_complex() -> Result<SimplicialComplex> {
    let bracket = BracketExpr::parse("[[m1,m2,m3],m4,m5]")?;
    Ok(bracket.complexes()?.0)
}

/// The worked nested product `[[μ₁,μ₂,μ₃],μ₄,μ₅]` over
/// `K = ∂Δ(∂Δ(1,2,3),4,5)`: its Hurewicz-image cycle in `Cobar ℤ⟨K⟩`
/// truncated at degree 8.
///
/// The chain is evaluated along two independent routes and the results are
/// required to agree exactly:
///
/// 1. **Direct**: `−d([χ₁₂₃,χ₄₅] + [χ₁₂₃₄,χ₅] + [χ₁₂₃₅,χ₄])` inside the
///    full-simplex algebra on five vertices (the named generators exist
///    only there; the boundary lands in the `K`-subalgebra).
/// 2. **Composite**: the top sphere class is sent through the attaching
///    cycle of the inner product (`−[b₁,b₂₃] − [b₁₂,b₃] − [b₁₃,b₂]`), then
///    the image table of [`ah_map_g_images`] (verified to be a chain map),
///    then the canonical embedding into the `Cobar ℤ⟨K⟩` model.
///
/// Any disagreement, subalgebra-membership failure, or cycle failure is an
/// internal error: those would indicate inconsistent sign conventions.
pub fn iterated_example_chain() -> Result<WhiteheadChain> {
    let bracket = BracketExpr::parse("[[m1,m2,m3],m4,m5]")?;
    let k = substituted_example_complex()?;
    let ambient = cobar_dj(&k, 8)?;
    let five = SimplicialComplex::full_simplex(&[1, 2, 3, 4, 5])?;
    let big = cobar_dj(&five, 8)?;

    // Direct route.
    let chi = |vs: &[VertexId]| -> Result<GradedElement> {
        let sigma = Multiset::from_elements(vs)?;
        Ok(GradedElement::from_generator(dj_generator(&big, sigma)?))
    };
    let q = chi(&[1, 2, 3])?
        .bracket(&chi(&[4, 5])?)?
        .add(&chi(&[1, 2, 3, 4])?.bracket(&chi(&[5])?)?)
        .add(&chi(&[1, 2, 3, 5])?.bracket(&chi(&[4])?)?);
    let direct = big.apply_diff(&q)?.neg();

    // Composite route.
    let (g_domain, g_codomain, g_map) = ah_map_g_images()?;
    let failures = g_map.chain_map_failures(&g_domain, &g_codomain)?;
    if !failures.is_empty() {
        return Err(Error::Internal(format!(
            "the substitution image table fails the chain-map check on {} generator(s)",
            failures.len()
        )));
    }
    let inner = Simplex::new(vec![1, 2, 3])?;
    let dims = SphereDims::from_pairs([(1, 5), (2, 2), (3, 2)])?;
    let omega_image = attaching_cycle(&inner, &dims)?;
    let embed = canonical_embedding(&g_codomain, &ambient)?;
    let composite = embed.apply(&g_map.apply(&omega_image)?)?;

    if direct != composite {
        return Err(Error::Internal(
            "the two evaluation routes of the worked example disagree".to_string(),
        ));
    }
    if !subalgebra_membership(&big, &ambient, &direct)? {
        return Err(Error::Internal(
            "the worked-example chain does not lie in the subcomplex algebra".to_string(),
        ));
    }
    if !ambient.apply_diff(&direct)?.is_zero() {
        return Err(Error::Internal(
            "the worked-example chain is not a cycle".to_string(),
        ));
    }
    let degree = direct.homogeneous_degree()?.ok_or_else(|| {
        Error::Internal("the worked-example chain collapsed to zero".to_string())
    })?;
    if degree != 7 {
        return Err(Error::Internal(format!(
            "the worked-example chain has degree {degree}, expected 7"
        )));
    }
    Ok(WhiteheadChain {
        bracket,
        ambient,
        chain: direct,
        degree,
    })
}

/// Cycle/boundary status of a chain's homology class.
#[derive(Clone, Debug)]
pub struct HurewiczReport {
    /// Homogeneous degree of the chain.
    pub degree: u32,
    /// Whether the chain is a cycle (it always is for chains built here).
    pub cycle: bool,
    /// Whether the homology class vanishes (is a boundary).
    pub zero_class: bool,
    /// An explicit element with `d witness = chain`, when the class is zero.
    pub witness: Option<GradedElement>,
}

/// Evaluate the homology class of a chain: is it a cycle, and if so, does
/// it bound? The verdict is computed by an exact integer linear solve in
/// the ambient algebra.
pub fn hurewicz_class_report(w: &WhiteheadChain) -> Result<HurewiczReport> {
    let cycle = w.ambient.apply_diff(&w.chain)?.is_zero();
    if !cycle {
        return Ok(HurewiczReport {
            degree: w.degree,
            cycle,
            zero_class: false,
            witness: None,
        });
    }
    match class_is_zero(&w.ambient, &w.chain)? {
        ClassVerdict::Zero { witness } => Ok(HurewiczReport {
            degree: w.degree,
            cycle,
            zero_class: true,
            witness: Some(witness),
        }),
        ClassVerdict::Nonzero => Ok(HurewiczReport {
            degree: w.degree,
            cycle,
            zero_class: false,
            witness: None,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(v: &[VertexId]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn gen_of(alg: &DgAlgebra, token: GenToken) -> GradedElement {
        GradedElement::from_generator(alg.generator_by_token(&token).unwrap().clone())
    }

    fn b(alg: &DgAlgebra, v: &[VertexId]) -> GradedElement {
        gen_of(alg, GenToken::Simplex(simplex(v)))
    }

    #[test]
    fn attaching_cycle_for_an_edge() {
        let dims = SphereDims::from_pairs([(1, 2), (2, 2)]).unwrap();
        let w = attaching_cycle(&simplex(&[1, 2]), &dims).unwrap();
        assert_eq!(w.to_string(), "b{1}*b{2} + b{2}*b{1}");
    }

    #[test]
    fn attaching_cycle_for_a_triangle_of_even_spheres() {
        let k = SimplicialComplex::full_simplex(&[1, 2, 3]).unwrap();
        let dims = SphereDims::uniform(&k, 2).unwrap();
        let alg = cobar_spheres(&k, &dims).unwrap();
        let w = attaching_cycle(&simplex(&[1, 2, 3]), &dims).unwrap();
        let expected = b(&alg, &[1])
            .bracket(&b(&alg, &[2, 3]))
            .unwrap()
            .add(&b(&alg, &[1, 2]).bracket(&b(&alg, &[3])).unwrap())
            .add(&b(&alg, &[1, 3]).bracket(&b(&alg, &[2])).unwrap());
        assert_eq!(w, expected);
        // It is a cycle in the full-simplex algebra…
        assert!(alg.apply_diff(&w).unwrap().is_zero());
        // …and lies in the boundary-complex subalgebra.
        let boundary = SimplicialComplex::boundary_simplex(&[1, 2, 3]).unwrap();
        let sub = cobar_spheres(&boundary, &dims).unwrap();
        assert!(subalgebra_membership(&alg, &sub, &w).unwrap());
    }

    #[test]
    fn attaching_cycle_with_mixed_dimensions() {
        // Dimensions (5, 2, 2): the top differential is
        // −[b₁,b₂₃] − [b₁₂,b₃] − [b₁₃,b₂].
        let k = SimplicialComplex::full_simplex(&[1, 2, 3]).unwrap();
        let dims = SphereDims::from_pairs([(1, 5), (2, 2), (3, 2)]).unwrap();
        let alg = cobar_spheres(&k, &dims).unwrap();
        let w = attaching_cycle(&simplex(&[1, 2, 3]), &dims).unwrap();
        let expected = b(&alg, &[1])
            .bracket(&b(&alg, &[2, 3]))
            .unwrap()
            .add(&b(&alg, &[1, 2]).bracket(&b(&alg, &[3])).unwrap())
            .add(&b(&alg, &[1, 3]).bracket(&b(&alg, &[2])).unwrap())
            .neg();
        assert_eq!(w, expected);
    }

    #[test]
    fn attaching_cycle_needs_two_vertices() {
        let dims = SphereDims::from_pairs([(1, 2)]).unwrap();
        assert!(attaching_cycle(&simplex(&[1]), &dims).is_err());
    }

    #[test]
    fn first_order_pair_formula() {
        let k = SimplicialComplex::full_simplex(&[1, 2]).unwrap();
        let wc = first_order_hurewicz_cycle(&[1, 2], &k).unwrap();
        assert_eq!(wc.chain.to_string(), "x{1}*x{2} + x{2}*x{1}");
        assert_eq!(wc.degree, 2);
        assert_eq!(wc.bracket.to_string(), "[m1,m2]");
        let report = hurewicz_class_report(&wc).unwrap();
        assert!(report.cycle);
        assert!(report.zero_class);
        let witness = report.witness.unwrap();
        assert_eq!(wc.ambient.apply_diff(&witness).unwrap(), wc.chain);
    }

    #[test]
    fn first_order_pair_in_a_wedge_is_nonzero() {
        // Two disjoint vertices: the product exists but nothing bounds it.
        let k = SimplicialComplex::from_facets(
            vec![1, 2],
            vec![Simplex::new(vec![1]).unwrap(), Simplex::new(vec![2]).unwrap()],
        )
        .unwrap();
        let wc = first_order_hurewicz_cycle(&[1, 2], &k).unwrap();
        let report = hurewicz_class_report(&wc).unwrap();
        assert!(report.cycle);
        assert!(!report.zero_class);
        assert!(report.witness.is_none());
    }

    #[test]
    fn first_order_triple_inside_a_filled_triangle_bounds() {
        let k = SimplicialComplex::full_simplex(&[1, 2, 3]).unwrap();
        let wc = first_order_hurewicz_cycle(&[1, 2, 3], &k).unwrap();
        assert_eq!(wc.degree, 4);
        assert_eq!(wc.chain.term_count(), 6);
        // The canonical witness: the chain is exactly d(χ₁₂₃).
        let top = wc
            .ambient
            .generator_by_token(&GenToken::Multiset(
                Multiset::from_elements(&[1, 2, 3]).unwrap(),
            ))
            .unwrap()
            .clone();
        assert_eq!(wc.ambient.diff_of(&top).unwrap(), &wc.chain);
        let report = hurewicz_class_report(&wc).unwrap();
        assert!(report.zero_class);
        assert_eq!(
            wc.ambient.apply_diff(&report.witness.unwrap()).unwrap(),
            wc.chain
        );
    }

    #[test]
    fn first_order_triple_on_a_hollow_triangle_is_nonzero() {
        let k = SimplicialComplex::boundary_simplex(&[1, 2, 3]).unwrap();
        let wc = first_order_hurewicz_cycle(&[1, 2, 3], &k).unwrap();
        assert_eq!(wc.degree, 4);
        assert_eq!(wc.chain.term_count(), 6);
        let report = hurewicz_class_report(&wc).unwrap();
        assert!(report.cycle);
        assert!(!report.zero_class);
    }

    #[test]
    fn missing_boundary_face_means_not_defined() {
        // A path graph lacks the edge {1,3} of ∂Δ(1,2,3).
        let k = SimplicialComplex::from_facets(
            vec![1, 2, 3],
            vec![Simplex::new(vec![1, 2]).unwrap(), Simplex::new(vec![2, 3]).unwrap()],
        )
        .unwrap();
        match first_order_hurewicz_cycle(&[1, 2, 3], &k) {
            Err(Error::NotDefined { missing }) => assert_eq!(missing, "{1,3}"),
            other => panic!("expected a not-defined error, got {other:?}"),
        }
    }

    #[test]
    fn chains_relabel_with_the_vertices() {
        let k1 = SimplicialComplex::boundary_simplex(&[1, 2, 3]).unwrap();
        let k2 = SimplicialComplex::boundary_simplex(&[3, 5, 9]).unwrap();
        let w1 = first_order_hurewicz_cycle(&[1, 2, 3], &k1).unwrap();
        let w2 = first_order_hurewicz_cycle(&[3, 5, 9], &k2).unwrap();
        let relabel = |v: VertexId| match v {
            1 => 3,
            2 => 5,
            3 => 9,
            _ => unreachable!(),
        };
        let mut mapped = GradedElement::zero();
        for (word, coeff) in w1.chain.terms() {
            let factors: Vec<_> = word
                .factors()
                .iter()
                .map(|g| {
                    let GenToken::Multiset(m) = g.token() else { panic!() };
                    let relabeled = Multiset::from_elements(
                        &m.expanded().into_iter().map(relabel).collect::<Vec<_>>(),
                    )
                    .unwrap();
                    crate::algebra::Generator::new(GenToken::Multiset(relabeled), g.degree())
                        .unwrap()
                })
                .collect();
            mapped.add_term(Word::from_factors(factors), coeff.clone());
        }
        assert_eq!(mapped, w2.chain);
    }

    #[test]
    fn image_table_is_a_chain_map() {
        let (domain, codomain, map) = ah_map_g_images().unwrap();
        assert!(map.chain_map_failures(&domain, &codomain).unwrap().is_empty());
        // Spot check: the image of d(b₁₂) = −[b₁,b₂] is −[image(b₁), c₄].
        let db12 = domain
            .diff_of(domain.generator_by_token(&GenToken::Simplex(simplex(&[1, 2]))).unwrap())
            .unwrap();
        let image_of_db12 = map.apply(db12).unwrap();
        let image_b1 = map.image_of(&GenToken::Simplex(simplex(&[1]))).unwrap();
        let expected = image_b1.bracket(&b(&codomain, &[4])).unwrap().neg();
        assert_eq!(image_of_db12, expected);
        // And the image of [b₂,b₃] is [c₄,c₅] = d(c₄₅).
        let br23 = b(&domain, &[2]).bracket(&b(&domain, &[3])).unwrap();
        let image = map.apply(&br23).unwrap();
        let dc45 = codomain
            .diff_of(codomain.generator_by_token(&GenToken::Simplex(simplex(&[4, 5]))).unwrap())
            .unwrap();
        assert_eq!(&image, dc45);
    }

    #[test]
    fn worked_example_chain_has_the_advertised_shape() {
        let wc = iterated_example_chain().unwrap();
        assert_eq!(wc.degree, 7);
        assert_eq!(wc.bracket.to_string(), "[[m1,m2,m3],m4,m5]");
        assert_eq!(wc.chain.homogeneous_degree().unwrap(), Some(7));
        assert!(wc.ambient.apply_diff(&wc.chain).unwrap().is_zero());
        // All words carry the full vertex content {1,2,3,4,5}.
        let full = Multiset::from_elements(&[1, 2, 3, 4, 5]).unwrap();
        for (word, _) in wc.chain.terms() {
            assert_eq!(word.content(), Some(full.clone()));
        }
    }
}

//! JSON-friendly mirror types (DTOs) for the domain objects, with lossless
//! conversions in both directions.
//!
//! Coefficients are serialized as decimal strings because arbitrary-precision
//! integers do not fit JSON numbers. Conversions back into domain types go
//! through the validating constructors, so a deserialized algebra satisfies
//! the same invariants as a freshly built one — JSON output re-parses to a
//! structure equal to the in-memory original.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Coeff, GenToken, GradedElement, Generator, Word};
use crate::cobar::DgAlgebra;
use crate::complex::{Multiset, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::homology::HomologyRow;

/// A generator token: `{"simplex":[1,2,4]}`, `{"multiset":[1,1,2]}`, or
/// `{"name":"a3"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenDto {
    Simplex(Vec<VertexId>),
    Multiset(Vec<VertexId>),
    Name(String),
}

impl From<&GenToken> for TokenDto {
    fn from(token: &GenToken) -> Self {
        match token {
            GenToken::Simplex(s) => TokenDto::Simplex(s.vertices().to_vec()),
            GenToken::Multiset(m) => TokenDto::Multiset(m.expanded()),
            GenToken::Named(n) => TokenDto::Name(n.clone()),
        }
    }
}

impl TryFrom<&TokenDto> for GenToken {
    type Error = Error;

    fn try_from(dto: &TokenDto) -> Result<GenToken> {
        match dto {
            TokenDto::Simplex(vs) => Ok(GenToken::Simplex(Simplex::new(vs.clone())?)),
            TokenDto::Multiset(vs) => Ok(GenToken::Multiset(Multiset::from_elements(vs)?)),
            TokenDto::Name(n) => {
                if n.is_empty() {
                    return Err(Error::Malformed("empty generator name".to_string()));
                }
                Ok(GenToken::Named(n.clone()))
            }
        }
    }
}

/// A generator: token plus degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDto {
    pub token: TokenDto,
    pub degree: u32,
}

impl From<&Generator> for GeneratorDto {
    fn from(g: &Generator) -> Self {
        GeneratorDto {
            token: g.token().into(),
            degree: g.degree(),
        }
    }
}

impl TryFrom<&GeneratorDto> for Generator {
    type Error = Error;

    fn try_from(dto: &GeneratorDto) -> Result<Generator> {
        Generator::new((&dto.token).try_into()?, dto.degree)
    }
}

/// One term of an element: a decimal-string coefficient and a word given by
/// its generator factors in order. The unit word is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDto {
    pub coeff: String,
    pub word: Vec<GeneratorDto>,
}

/// Serialize an element as its canonical term list (ascending word order).
pub fn element_to_dto(x: &GradedElement) -> Vec<TermDto> {
    x.terms()
        .map(|(word, coeff)| TermDto {
            coeff: coeff.to_string(),
            word: word.factors().iter().map(GeneratorDto::from).collect(),
        })
        .collect()
}

/// Rebuild an element from a term list; repeated words accumulate.
pub fn element_from_dto(terms: &[TermDto]) -> Result<GradedElement> {
    let mut out = GradedElement::zero();
    for term in terms {
        let coeff: Coeff = term
            .coeff
            .parse()
            .map_err(|_| Error::Malformed(format!("bad coefficient {:?}", term.coeff)))?;
        let factors: Vec<Generator> = term
            .word
            .iter()
            .map(Generator::try_from)
            .collect::<Result<_>>()?;
        out.add_term(Word::from_factors(factors), coeff);
    }
    Ok(out)
}

/// One differential row: a generator and its image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffRowDto {
    pub generator: GeneratorDto,
    pub image: Vec<TermDto>,
}

/// A finitely generated differential graded algebra: generator list with
/// degrees and token payloads, the differential as a coefficient/word list
/// per generator, and the degree bound when the generator list was
/// truncated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DgAlgebraDto {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree_bound: Option<u32>,
    pub generators: Vec<GeneratorDto>,
    pub differential: Vec<DiffRowDto>,
}

/// Serialize an algebra. Rows follow the canonical generator order; rows
/// with zero image are included so the listing is self-contained.
pub fn algebra_to_dto(alg: &DgAlgebra) -> DgAlgebraDto {
    let generators: Vec<GeneratorDto> = alg.generators().iter().map(GeneratorDto::from).collect();
    let differential = alg
        .generators()
        .iter()
        .map(|g| DiffRowDto {
            generator: g.into(),
            image: element_to_dto(alg.diff_of(g).expect("own generator")),
        })
        .collect();
    DgAlgebraDto {
        degree_bound: alg.degree_bound(),
        generators,
        differential,
    }
}

/// Rebuild an algebra through the validating constructor: generator
/// degrees, differential degrees, and ownership of every image word are all
/// re-checked.
pub fn algebra_from_dto(dto: &DgAlgebraDto) -> Result<DgAlgebra> {
    let generators: Vec<Generator> = dto
        .generators
        .iter()
        .map(Generator::try_from)
        .collect::<Result<_>>()?;
    let mut diff: BTreeMap<GenToken, GradedElement> = BTreeMap::new();
    for row in &dto.differential {
        let g = Generator::try_from(&row.generator)?;
        let image = element_from_dto(&row.image)?;
        if diff.insert(g.token().clone(), image).is_some() {
            return Err(Error::Malformed(format!(
                "duplicate differential row for {}",
                g.token()
            )));
        }
    }
    DgAlgebra::new(generators, diff, dto.degree_bound)
}

/// One homology row: degree, chain rank, free rank, and torsion
/// coefficients as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyRowDto {
    pub degree: u32,
    pub chain_rank: usize,
    pub free_rank: usize,
    pub torsion: Vec<String>,
}

impl From<&HomologyRow> for HomologyRowDto {
    fn from(row: &HomologyRow) -> Self {
        HomologyRowDto {
            degree: row.degree,
            chain_rank: row.chain_rank,
            free_rank: row.free_rank,
            torsion: row.torsion.iter().map(Coeff::to_string).collect(),
        }
    }
}

impl TryFrom<&HomologyRowDto> for HomologyRow {
    type Error = Error;

    fn try_from(dto: &HomologyRowDto) -> Result<HomologyRow> {
        let torsion: Vec<Coeff> = dto
            .torsion
            .iter()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Malformed(format!("bad torsion coefficient {t:?}")))
            })
            .collect::<Result<_>>()?;
        Ok(HomologyRow {
            degree: dto.degree,
            chain_rank: dto.chain_rank,
            free_rank: dto.free_rank,
            torsion,
        })
    }
}

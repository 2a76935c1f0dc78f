//! Bracket expressions: the shorthand describing iterated higher Whitehead
//! products, e.g. `[[m1,m2,m3],m4,m5]`.
//!
//! Grammar (whitespace allowed between tokens):
//!
//! ```text
//! w ::= 'm' INT
//!     | '[' w (',' w)+ ']'
//! ```
//!
//! Leaves are sphere indices and must be pairwise distinct across the whole
//! expression; every bracket has at least two entries.
//!
//! Each expression `w` determines two simplicial complexes by structural
//! recursion: substitute, into the boundary (resp. full) simplex on the
//! bracket's entries, the boundary complex of each inner bracket and the
//! one-vertex complex `{∅, {i}}` for each bare index `m i`. The boundary
//! complex is the smallest complex in which the product named by `w` is
//! defined; the full one is where it is trivially so.

use std::fmt;

use crate::complex::{SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// A parsed bracket expression.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BracketExpr {
    /// A sphere index `m<id>`.
    Leaf(VertexId),
    /// A bracket `[w, w, …]` with at least two entries.
    Node(Vec<BracketExpr>),
}

impl BracketExpr {
    /// A leaf `m<id>`; ids are positive.
    pub fn leaf(id: VertexId) -> Result<Self> {
        if id == 0 {
            return Err(Error::Malformed("bracket indices must be positive".into()));
        }
        Ok(BracketExpr::Leaf(id))
    }

    /// A bracket node; requires ≥ 2 children and pairwise distinct leaf
    /// indices across the whole new expression.
    pub fn node(children: Vec<BracketExpr>) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::Malformed(
                "a bracket needs at least two entries".into(),
            ));
        }
        let node = BracketExpr::Node(children);
        node.check_distinct_leaves()?;
        Ok(node)
    }

    /// Parses the textual form. Syntax errors carry the byte offset where
    /// the parse failed; a repeated index is reported as its own error.
    pub fn parse(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let expr = parse_expr(bytes, &mut pos)?;
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(Error::Syntax {
                offset: pos,
                message: "trailing input after expression".into(),
            });
        }
        expr.check_distinct_leaves()?;
        Ok(expr)
    }

    /// Leaf indices in reading order.
    pub fn leaf_ids(&self) -> Vec<VertexId> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<VertexId>) {
        match self {
            BracketExpr::Leaf(id) => out.push(*id),
            BracketExpr::Node(children) => {
                for c in children {
                    c.collect_leaves(out);
                }
            }
        }
    }

    fn check_distinct_leaves(&self) -> Result<()> {
        let mut ids = self.leaf_ids();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedIndex(w[0]));
        }
        Ok(())
    }

    /// True for a plain bracket of bare indices, `[m i_1, …, m i_n]` — the
    /// form whose product chain the library constructs directly.
    pub fn is_first_order(&self) -> bool {
        match self {
            BracketExpr::Leaf(_) => false,
            BracketExpr::Node(children) => {
                children.iter().all(|c| matches!(c, BracketExpr::Leaf(_)))
            }
        }
    }

    /// The pair (boundary complex, full complex) of the expression; see the
    /// module docs. Errors on a bare leaf (a leaf names a sphere, not a
    /// product).
    pub fn complexes(&self) -> Result<(SimplicialComplex, SimplicialComplex)> {
        let children = match self {
            BracketExpr::Leaf(_) => {
                return Err(Error::Unsupported(
                    "a bare index is not a product; complexes need a bracket".into(),
                ))
            }
            BracketExpr::Node(children) => children,
        };
        let mut parts = Vec::with_capacity(children.len());
        for child in children {
            match child {
                BracketExpr::Leaf(id) => parts.push(SimplicialComplex::full_simplex(&[*id])?),
                BracketExpr::Node(_) => parts.push(child.complexes()?.0),
            }
        }
        // The outer slots are positional; their labels are substituted away.
        let slots: Vec<VertexId> = (1..=children.len() as VertexId).collect();
        let boundary = SimplicialComplex::boundary_simplex(&slots)?.substitution(&parts)?;
        let full = SimplicialComplex::full_simplex(&slots)?.substitution(&parts)?;
        Ok((boundary, full))
    }
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketExpr::Leaf(id) => write!(f, "m{id}"),
            BracketExpr::Node(children) => {
                write!(f, "[")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_expr(bytes: &[u8], pos: &mut usize) -> Result<BracketExpr> {
    skip_ws(bytes, pos);
    match bytes.get(*pos) {
        Some(b'm') => {
            *pos += 1;
            parse_index(bytes, pos)
        }
        Some(b'[') => {
            *pos += 1;
            let mut children = vec![parse_expr(bytes, pos)?];
            loop {
                skip_ws(bytes, pos);
                match bytes.get(*pos) {
                    Some(b',') => {
                        *pos += 1;
                        children.push(parse_expr(bytes, pos)?);
                    }
                    Some(b']') => {
                        *pos += 1;
                        break;
                    }
                    _ => {
                        return Err(Error::Syntax {
                            offset: *pos,
                            message: "expected ',' or ']'".into(),
                        })
                    }
                }
            }
            if children.len() < 2 {
                return Err(Error::Syntax {
                    offset: *pos,
                    message: "a bracket needs at least two entries".into(),
                });
            }
            Ok(BracketExpr::Node(children))
        }
        _ => Err(Error::Syntax {
            offset: *pos,
            message: "expected 'm<index>' or '['".into(),
        }),
    }
}

fn parse_index(bytes: &[u8], pos: &mut usize) -> Result<BracketExpr> {
    let start = *pos;
    let mut value: u64 = 0;
    while let Some(d) = bytes.get(*pos).filter(|b| b.is_ascii_digit()) {
        value = value * 10 + u64::from(d - b'0');
        if value > u64::from(VertexId::MAX) {
            return Err(Error::Syntax {
                offset: start,
                message: "index out of range".into(),
            });
        }
        *pos += 1;
    }
    if *pos == start {
        return Err(Error::Syntax {
            offset: start,
            message: "expected digits after 'm'".into(),
        });
    }
    if value == 0 {
        return Err(Error::Syntax {
            offset: start,
            message: "indices start at 1".into(),
        });
    }
    Ok(BracketExpr::Leaf(value as VertexId))
}

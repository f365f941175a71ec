//! The universal structure-constant JSON document:
//! `{"dim": n, "brackets": [{"i": 2, "j": 3, "k": 1, "c": "1"}, ...]}`
//! with 1-based indices, only i < j pairs accepted, and rational string
//! coefficients; omitted pairs are zero.

use crate::scalar::{format_q, parse_q};
use crate::tensor::{StructureConstants, TensorError, MAX_DIM};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketDoc {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub brackets: Vec<BracketDoc>,
}

/// Structural errors of the external document, distinct from axiom
/// violations.
#[derive(Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("document is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field \"dim\": {0} outside supported range 1..={max}", max = MAX_DIM)]
    BadDimension(usize),
    #[error("bracket entry {pos}: field \"{field}\": index {value} out of range 1..={dim}")]
    IndexOutOfRange {
        pos: usize,
        field: &'static str,
        value: usize,
        dim: usize,
    },
    #[error("bracket entry {pos}: requires i < j, got i={i}, j={j}")]
    PairNotCanonical { pos: usize, i: usize, j: usize },
    #[error("bracket entry {pos}: field \"c\": malformed rational {text:?}")]
    BadCoefficient { pos: usize, text: String },
    #[error("bracket entry {pos}: duplicate key (i={i}, j={j}, k={k})")]
    DuplicateEntry {
        pos: usize,
        i: usize,
        j: usize,
        k: usize,
    },
}

pub fn from_doc(doc: &AlgebraDoc) -> Result<StructureConstants, SchemaError> {
    if doc.dim == 0 || doc.dim > MAX_DIM {
        return Err(SchemaError::BadDimension(doc.dim));
    }
    let mut sc = StructureConstants::new(doc.dim).expect("range checked");
    let mut seen = std::collections::BTreeSet::new();
    for (pos, b) in doc.brackets.iter().enumerate() {
        for (field, value) in [("i", b.i), ("j", b.j), ("k", b.k)] {
            if value == 0 || value > doc.dim {
                return Err(SchemaError::IndexOutOfRange {
                    pos,
                    field,
                    value,
                    dim: doc.dim,
                });
            }
        }
        if b.i >= b.j {
            return Err(SchemaError::PairNotCanonical {
                pos,
                i: b.i,
                j: b.j,
            });
        }
        if !seen.insert((b.i, b.j, b.k)) {
            return Err(SchemaError::DuplicateEntry {
                pos,
                i: b.i,
                j: b.j,
                k: b.k,
            });
        }
        let c = parse_q(&b.c).map_err(|_| SchemaError::BadCoefficient {
            pos,
            text: b.c.clone(),
        })?;
        match sc.set(b.i, b.j, b.k, c) {
            Ok(()) => {}
            Err(TensorError::IndexOutOfRange { .. }) | Err(TensorError::NotCanonicalPair { .. }) => {
                unreachable!("ranges checked above")
            }
            Err(e) => panic!("unexpected tensor error: {e}"),
        }
    }
    Ok(sc)
}

pub fn to_doc(sc: &StructureConstants) -> AlgebraDoc {
    AlgebraDoc {
        dim: sc.dim(),
        brackets: sc
            .canonical_entries()
            .map(|(&(i, j, k), c)| BracketDoc {
                i,
                j,
                k,
                c: format_q(c),
            })
            .collect(),
    }
}

pub fn from_json_str(s: &str) -> Result<StructureConstants, SchemaError> {
    let doc: AlgebraDoc = serde_json::from_str(s)?;
    from_doc(&doc)
}

pub fn to_json_string(sc: &StructureConstants) -> String {
    serde_json::to_string_pretty(&to_doc(sc)).expect("serializable")
}

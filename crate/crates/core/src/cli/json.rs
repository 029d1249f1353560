//! JSON encodings of results. Every rational is an exact string `"a/b"`
//! (or `"a"` for integers) and partitions are arrays of parts.

use serde::{Deserialize, Serialize};

use crate::birig::TensorElem;
use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rational::{parse_q, render_q, Q};
use crate::symfunc::{BasisTag, SymFunc};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub basis: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Partition,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub bases: [String; 2],
    pub terms: Vec<TensorTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermJson {
    pub left: Partition,
    pub right: Partition,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub value: String,
}

/// Rows are indexed by irreducibles, columns by cycle types, both in the
/// order of `partitions`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharTableJson {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurDimJson {
    pub shape: Partition,
    pub dim: usize,
    pub rank: usize,
    pub hook_content: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyJson {
    #[serde(rename = "H0")]
    pub h0: SymFuncJson,
    #[serde(rename = "H1")]
    pub h1: SymFuncJson,
    pub euler: SymFuncJson,
}

fn basis(tag: &str) -> Result<BasisTag> {
    tag.parse()
}

pub fn symfunc_to_json(f: &SymFunc) -> SymFuncJson {
    SymFuncJson {
        basis: f.basis().to_string(),
        terms: f
            .terms()
            .iter()
            .map(|(p, c)| TermJson {
                partition: p.clone(),
                coeff: render_q(c),
            })
            .collect(),
    }
}

pub fn symfunc_from_json(j: &SymFuncJson) -> Result<SymFunc> {
    let terms = j
        .terms
        .iter()
        .map(|t| Ok((t.partition.clone(), parse_q(&t.coeff)?)))
        .collect::<Result<Vec<(Partition, Q)>>>()?;
    Ok(SymFunc::from_terms(basis(&j.basis)?, terms))
}

pub fn tensor_to_json(t: &TensorElem) -> TensorJson {
    let (a, b) = t.bases();
    TensorJson {
        bases: [a.to_string(), b.to_string()],
        terms: t
            .terms()
            .iter()
            .map(|((l, r), c)| TensorTermJson {
                left: l.clone(),
                right: r.clone(),
                coeff: render_q(c),
            })
            .collect(),
    }
}

pub fn tensor_from_json(j: &TensorJson) -> Result<TensorElem> {
    let terms = j
        .terms
        .iter()
        .map(|t| Ok(((t.left.clone(), t.right.clone()), parse_q(&t.coeff)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TensorElem::from_terms((basis(&j.bases[0])?, basis(&j.bases[1])?), terms))
}

pub fn scalar_to_json(x: &Q) -> ScalarJson {
    ScalarJson { value: render_q(x) }
}

pub fn scalar_from_json(j: &ScalarJson) -> Result<Q> {
    parse_q(&j.value)
}

pub fn char_table_to_json(t: &CharacterTable) -> CharTableJson {
    CharTableJson {
        n: t.n(),
        partitions: t.partitions().to_vec(),
        values: t
            .values()
            .iter()
            .map(|row| row.iter().map(i64::to_string).collect())
            .collect(),
    }
}

pub fn char_table_values(j: &CharTableJson) -> Result<Vec<Vec<i64>>> {
    j.values
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    x.parse()
                        .map_err(|_| Error::Domain(format!("character value `{x}` is not an integer")))
                })
                .collect()
        })
        .collect()
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("result serializes")
}

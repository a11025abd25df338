//! The JSON operator-set document read by every subcommand.
//!
//! ```json
//! {
//!   "ambient_dim": 2,
//!   "contexts": [
//!     { "label": "z", "projectors": [[[["1","0"],["0","0"]], [["0","0"],["0","0"]]], ...] }
//!   ],
//!   "subspaces": [ { "name": "diag", "span": [[["1","0"],["1","0"]]] } ]
//! }
//! ```
//!
//! Every scalar is a pair `[re, im]` of rational strings (`"p"` or `"p/q"`).

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use qlattice::{
    validate_context, Error, ExactMatrix, ExactVector, GaussianRational, MaximalContext, Subspace,
};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// A scalar in the `[re, im]` encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry(pub GaussianRational);

pub type VectorLiteral = Vec<Entry>;
pub type MatrixLiteral = Vec<VectorLiteral>;

/// A document-level failure, tagged with the context label or subspace name.
pub type Tagged<T> = Result<T, (String, Error)>;

/// Parses `"p"` or `"p/q"` with `q != 0`.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let int = |part: &str| BigInt::from_str(part).map_err(|_| format!("invalid rational {s:?}"));
    let (num, den) = (int(num)?, int(den)?);
    if den.is_zero() {
        return Err(format!("invalid rational {s:?}: zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.0.re().to_string(), self.0.im().to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [re, im] = <[String; 2]>::deserialize(d)?;
        let re = parse_rational(&re).map_err(de::Error::custom)?;
        let im = parse_rational(&im).map_err(de::Error::custom)?;
        Ok(Entry(GaussianRational::new(re, im)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextEntry {
    pub label: String,
    pub projectors: Vec<MatrixLiteral>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceEntry {
    pub name: String,
    pub span: Vec<VectorLiteral>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSetDocument {
    pub ambient_dim: usize,
    pub contexts: Vec<ContextEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subspaces: Option<Vec<SubspaceEntry>>,
}

pub fn vector_literal(v: &ExactVector) -> VectorLiteral {
    v.entries().iter().cloned().map(Entry).collect()
}

pub fn matrix_literal(m: &ExactMatrix) -> MatrixLiteral {
    m.row_vectors().iter().map(vector_literal).collect()
}

pub fn vector_from_literal(lit: &[Entry]) -> ExactVector {
    ExactVector::new(lit.iter().map(|e| e.0.clone()).collect())
}

/// A literal as a square matrix of side `n`.
pub fn matrix_from_literal(lit: &[VectorLiteral], n: usize) -> Result<ExactMatrix, Error> {
    let rows: Vec<Vec<GaussianRational>> = lit
        .iter()
        .map(|r| r.iter().map(|e| e.0.clone()).collect())
        .collect();
    let m = ExactMatrix::from_rows(rows)?;
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() != n {
        return Err(Error::DimensionMismatch {
            op: "projector",
            expected: n,
            found: m.rows(),
        });
    }
    Ok(m)
}

impl OperatorSetDocument {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Builds a document from library values.
    pub fn from_parts(
        ambient_dim: usize,
        contexts: &[MaximalContext],
        subspaces: Option<&[(String, Subspace)]>,
    ) -> Self {
        OperatorSetDocument {
            ambient_dim,
            contexts: contexts
                .iter()
                .map(|c| ContextEntry {
                    label: c.label().to_string(),
                    projectors: c
                        .projectors()
                        .iter()
                        .map(|p| matrix_literal(p.matrix()))
                        .collect(),
                })
                .collect(),
            subspaces: subspaces.map(|ss| {
                ss.iter()
                    .map(|(name, u)| SubspaceEntry {
                        name: name.clone(),
                        span: u.basis().iter().map(vector_literal).collect(),
                    })
                    .collect()
            }),
        }
    }

    /// Validates one context entry.
    pub fn context(&self, entry: &ContextEntry) -> Result<MaximalContext, Error> {
        let mut ms = Vec::with_capacity(entry.projectors.len());
        for (index, lit) in entry.projectors.iter().enumerate() {
            let m =
                matrix_from_literal(lit, self.ambient_dim).map_err(|e| Error::InvalidMember {
                    index,
                    reason: Box::new(e),
                })?;
            ms.push(m);
        }
        validate_context(entry.label.clone(), ms)
    }

    /// Every context, failing on the first invalid one.
    pub fn contexts(&self) -> Tagged<Vec<MaximalContext>> {
        self.contexts
            .iter()
            .map(|c| self.context(c).map_err(|e| (c.label.clone(), e)))
            .collect()
    }

    /// The named subspaces in canonical form, if the document lists any.
    pub fn subspaces(&self) -> Tagged<Option<Vec<(String, Subspace)>>> {
        let Some(entries) = &self.subspaces else {
            return Ok(None);
        };
        entries
            .iter()
            .map(|s| {
                let span: Vec<ExactVector> =
                    s.span.iter().map(|v| vector_from_literal(v)).collect();
                Subspace::from_span(self.ambient_dim, &span)
                    .map(|u| (s.name.clone(), u))
                    .map_err(|e| (s.name.clone(), e))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }
}

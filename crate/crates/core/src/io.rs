//! JSON reading and writing of groups, factor sets, algebra elements and
//! generators.

use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::factor_set::FactorSet;
use crate::field::{Field, FieldScalar};
use crate::group::{FiniteGroup, GroupDescriptor, SubsetMask};

/// A scalar literal: an integer or a string such as `"-3/4"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    pub fn parse(&self, field: Field) -> Result<FieldScalar> {
        match self {
            Literal::Int(v) => Ok(FieldScalar::from_int(field, *v)),
            Literal::Text(s) => FieldScalar::parse_literal(field, s),
        }
    }

    /// Integers for prime fields, strings for rationals.
    pub fn from_scalar(x: &FieldScalar) -> Literal {
        match x {
            FieldScalar::Prime { value, .. } => Literal::Int(*value as i64),
            FieldScalar::Rational(_) => Literal::Text(x.to_literal()),
        }
    }
}

/// On-disk form of a factor set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSetFile {
    pub field: Field,
    pub n: usize,
    pub entries: Vec<Vec<Literal>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupDescriptor>,
}

impl FactorSetFile {
    pub fn from_factor_set(sigma: &FactorSet, with_group: bool) -> FactorSetFile {
        FactorSetFile {
            field: sigma.field(),
            n: sigma.order(),
            entries: sigma.rows().iter().map(|r| r.iter().map(Literal::from_scalar).collect()).collect(),
            group: with_group.then(|| sigma.group().to_descriptor()),
        }
    }

    /// Resolves the group from the file or from `fallback`, which wins
    /// when both are present.
    pub fn into_factor_set(self, fallback: Option<Arc<FiniteGroup>>) -> Result<FactorSet> {
        let group = match (fallback, &self.group) {
            (Some(g), _) => g,
            (None, Some(d)) => Arc::new(FiniteGroup::build(d)?),
            (None, None) => return Err(Error::Schema("no group given for the factor set".into())),
        };
        if self.n != group.order() {
            return Err(Error::DimensionMismatch { expected: group.order(), found: self.n });
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.parse(self.field)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FactorSet::new(group, self.field, rows)
    }
}

/// One term `{U, g, coeff}` of an algebra element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermFile {
    #[serde(rename = "U")]
    pub u: Vec<usize>,
    pub g: usize,
    pub coeff: Literal,
}

pub fn element_to_terms(x: &AlgebraElement) -> Vec<TermFile> {
    x.terms().map(|(&(u, g), k)| TermFile { u: u.to_vec(), g, coeff: Literal::from_scalar(k) }).collect()
}

pub fn element_from_terms(terms: &[TermFile], grp: &FiniteGroup, field: Field) -> Result<AlgebraElement> {
    let mut x = AlgebraElement::zero();
    for t in terms {
        grp.check_element(t.g)?;
        for &e in &t.u {
            grp.check_element(e)?;
        }
        x.add_term((SubsetMask::from_elements(t.u.iter().copied()), t.g), t.coeff.parse(field)?);
    }
    Ok(x)
}

/// Parses JSON. Syntax errors become [`Error::Parse`]; well-formed JSON of
/// the wrong shape becomes [`Error::Schema`]. Both carry line and column.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Data => Error::Schema(format!("{e}")),
            _ => Error::Parse { line: e.line(), column: e.column(), message: e.to_string() },
        }
    })
}

/// Deterministic pretty JSON.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize infallibly")
}

/// Reads and parses a JSON file, prefixing errors with the path.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Schema(format!("{}: cannot read: {e}", path.display())))?;
    from_json(&text).map_err(|e| match e {
        Error::Parse { line, column, message } => {
            Error::Parse { line, column, message: format!("{}: {message}", path.display()) }
        }
        Error::Schema(m) => Error::Schema(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn read_factor_set(path: &Path, group: Option<Arc<FiniteGroup>>) -> Result<FactorSet> {
    read_json::<FactorSetFile>(path)?.into_factor_set(group)
}

pub fn write_factor_set(path: &Path, sigma: &FactorSet) -> Result<()> {
    let text = to_json(&FactorSetFile::from_factor_set(sigma, true));
    std::fs::write(path, text + "\n").map_err(|e| Error::Schema(format!("{}: cannot write: {e}", path.display())))
}

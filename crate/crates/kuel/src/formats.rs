//! JSON documents for fields, algebras, quiver presentations and group
//! tables.
//!
//! Scalars may be written as integers (the packed element index), as
//! strings in the field's polynomial notation (`"w^2+1"`), or as
//! coefficient lists low-to-high (`[1, 0, 1]`). Output always uses strings.

use anyhow::{anyhow, bail, Context, Result};
use kuelshammer_core::presentation::{quotient_algebra, quotient_algebra_auto, CayleyTable, Quiver, Relation};
use kuelshammer_core::{Algebra, Field, FieldSpec, Metadata};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u32,
    #[serde(default = "one")]
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

impl FieldJson {
    pub fn spec(&self) -> Result<FieldSpec> {
        match &self.modulus {
            Some(m) => Ok(FieldSpec { p: self.p, e: self.e, modulus: m.clone() }),
            None => FieldSpec::with_default_modulus(self.p, self.e)
                .ok_or_else(|| anyhow!("no default modulus for GF({}^{}); give one explicitly", self.p, self.e)),
        }
    }

    pub fn field(&self) -> Result<Field> {
        Ok(Field::new(self.spec()?)?)
    }
}

impl From<&FieldSpec> for FieldJson {
    fn from(s: &FieldSpec) -> Self {
        FieldJson { p: s.p, e: s.e, modulus: Some(s.modulus.clone()) }
    }
}

/// Parses the `--field` flag: `p=2`, `p=2,e=2` or `p=2,e=2,mod=1,1,1`.
/// Everything after `mod=` is the modulus.
pub fn parse_field_flag(s: &str) -> Result<FieldJson> {
    let mut p = None;
    let mut e = 1;
    let mut modulus: Option<Vec<u32>> = None;
    for part in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        if let Some(m) = modulus.as_mut() {
            if !part.contains('=') {
                m.push(part.parse().with_context(|| format!("bad modulus coefficient `{part}`"))?);
                continue;
            }
        }
        let (k, v) = part.split_once('=').ok_or_else(|| anyhow!("expected key=value in --field, got `{part}`"))?;
        match k.trim() {
            "p" => p = Some(v.trim().parse().with_context(|| format!("bad characteristic `{v}`"))?),
            "e" => e = v.trim().parse().with_context(|| format!("bad degree `{v}`"))?,
            "mod" | "modulus" => {
                modulus = Some(vec![v.trim().parse().with_context(|| format!("bad modulus coefficient `{v}`"))?])
            }
            other => bail!("unknown --field key `{other}`"),
        }
    }
    let p = p.ok_or_else(|| anyhow!("--field needs p=<prime>"))?;
    Ok(FieldJson { p, e, modulus })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Int(u32),
    Text(String),
    Coeffs(Vec<u32>),
}

impl ScalarJson {
    pub fn value(&self, f: &Field) -> Result<u32> {
        match self {
            ScalarJson::Int(x) if f.contains(*x) => Ok(*x),
            ScalarJson::Int(x) => bail!("{x} is not an element of {f}"),
            ScalarJson::Text(s) => Ok(f.parse(s)?),
            ScalarJson::Coeffs(c) => Ok(f.from_coords(c)?),
        }
    }
}

/// Presentation data accepted from files. Only the entries that are
/// validated on construction (idempotents) or used purely as a basis choice
/// (socle paths) are read back.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetadataJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idempotents: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub socle_paths: Vec<usize>,
    #[serde(default)]
    pub split_basic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldJson,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub unit: Vec<ScalarJson>,
    pub structure: Vec<(usize, usize, usize, ScalarJson)>,
    #[serde(default)]
    pub metadata: MetadataJson,
}

impl AlgebraJson {
    pub fn from_algebra(a: &Algebra) -> AlgebraJson {
        let f = a.field();
        let m = a.metadata();
        AlgebraJson {
            field: FieldJson::from(f.spec()),
            dim: a.dim(),
            labels: Some(a.labels().to_vec()),
            unit: a.unit().iter().map(|&x| ScalarJson::Text(f.format(x))).collect(),
            structure: a.structure().into_iter().map(|(i, j, k, c)| (i, j, k, ScalarJson::Text(f.format(c)))).collect(),
            metadata: MetadataJson {
                idempotents: m.idempotents.clone(),
                socle_paths: m.socle_paths.clone(),
                split_basic: m.split_basic,
            },
        }
    }

    pub fn build(&self, field: &Field) -> Result<Algebra> {
        let labels = match &self.labels {
            Some(l) if l.len() == self.dim => l.clone(),
            Some(l) => bail!("{} labels for dimension {}", l.len(), self.dim),
            None => (0..self.dim).map(|i| format!("b{i}")).collect(),
        };
        if self.unit.len() != self.dim {
            bail!("unit has {} coordinates for dimension {}", self.unit.len(), self.dim);
        }
        let unit = self.unit.iter().map(|s| s.value(field)).collect::<Result<Vec<_>>>()?;
        let structure = self
            .structure
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, c.value(field)?)))
            .collect::<Result<Vec<_>>>()?;
        if let Some(&bad) = self.metadata.socle_paths.iter().find(|&&i| i >= self.dim) {
            bail!("socle path index {bad} out of range");
        }
        let meta = Metadata {
            idempotents: self.metadata.idempotents.clone(),
            socle_paths: self.metadata.socle_paths.clone(),
            split_basic: self.metadata.split_basic,
            ..Metadata::default()
        };
        Ok(Algebra::new(field, labels, &structure, unit, meta)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldJson>,
    pub vertices: usize,
    pub arrows: Vec<(String, usize, usize)>,
    #[serde(default)]
    pub relations: Vec<Vec<(ScalarJson, Vec<String>)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length_bound: Option<usize>,
}

impl QuiverJson {
    /// Builds the quotient. An explicit bound (`bound`, else the document's
    /// `length_bound`) is used as is; otherwise the bound is escalated
    /// automatically.
    pub fn build(&self, field: &Field, bound: Option<usize>) -> Result<kuelshammer_core::presentation::QuiverAlgebra> {
        let q = Quiver::new(self.vertices, self.arrows.clone())?;
        let rels = self
            .relations
            .iter()
            .map(|r| {
                let terms = r.iter().map(|(c, w)| Ok((c.value(field)?, w.clone()))).collect::<Result<Vec<_>>>()?;
                Ok(Relation::new(terms))
            })
            .collect::<Result<Vec<_>>>()?;
        let qa = match bound.or(self.length_bound) {
            Some(l) => quotient_algebra(&q, &rels, field, l)?,
            None => quotient_algebra_auto(&q, &rels, field, 2)?,
        };
        Ok(qa)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldJson>,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl CayleyJson {
    pub fn table(&self) -> Result<CayleyTable> {
        if self.table.len() != self.order {
            bail!("table has {} rows for order {}", self.table.len(), self.order);
        }
        Ok(CayleyTable::new(self.table.clone())?)
    }
}

/// Any of the accepted input documents, told apart by their keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InputDoc {
    Algebra(AlgebraJson),
    Quiver(QuiverJson),
    Cayley(CayleyJson),
}

impl InputDoc {
    pub fn field(&self) -> Option<&FieldJson> {
        match self {
            InputDoc::Algebra(a) => Some(&a.field),
            InputDoc::Quiver(q) => q.field.as_ref(),
            InputDoc::Cayley(c) => c.field.as_ref(),
        }
    }
}

pub fn parse_document(text: &str) -> Result<InputDoc> {
    let value: serde_json::Value = serde_json::from_str(text).context("input is not valid JSON")?;
    let obj = value.as_object().ok_or_else(|| anyhow!("input JSON must be an object"))?;
    // pick the shape explicitly so that errors name the right fields
    let doc = if obj.contains_key("structure") {
        InputDoc::Algebra(serde_json::from_value(value).context("bad algebra document")?)
    } else if obj.contains_key("arrows") {
        InputDoc::Quiver(serde_json::from_value(value).context("bad quiver document")?)
    } else if obj.contains_key("table") {
        InputDoc::Cayley(serde_json::from_value(value).context("bad group table document")?)
    } else {
        bail!("input JSON has none of the keys `structure`, `arrows`, `table`");
    };
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use kuelshammer_core::algebra::truncated_polynomial;

    #[test]
    fn field_flag_forms() {
        assert_eq!(parse_field_flag("p=2").unwrap(), FieldJson { p: 2, e: 1, modulus: None });
        assert_eq!(parse_field_flag("p=2,e=2,mod=1,1,1").unwrap(), FieldJson { p: 2, e: 2, modulus: Some(vec![1, 1, 1]) });
        assert_eq!(parse_field_flag("e=2, p=3").unwrap().spec().unwrap().modulus, vec![1, 0, 1]);
        assert!(parse_field_flag("e=2").is_err());
        assert!(parse_field_flag("p=2,q=3").is_err());
    }

    #[test]
    fn scalar_notations_agree() {
        let f = Field::default_for(2, 2).unwrap();
        let w = f.generator();
        for s in [ScalarJson::Text("w".into()), ScalarJson::Coeffs(vec![0, 1]), ScalarJson::Int(w)] {
            assert_eq!(s.value(&f).unwrap(), w);
        }
        assert!(ScalarJson::Int(4).value(&f).is_err());
    }

    #[test]
    fn algebra_round_trip() {
        let f = Field::default_for(3, 2).unwrap();
        let a = truncated_polynomial(&f, 3);
        let doc = AlgebraJson::from_algebra(&a);
        let text = serde_json::to_string(&doc).unwrap();
        let InputDoc::Algebra(back) = parse_document(&text).unwrap() else { panic!("wrong shape") };
        let b = back.build(&back.field.field().unwrap()).unwrap();
        assert_eq!(a.structure(), b.structure());
        assert_eq!(a.unit(), b.unit());
    }

    #[test]
    fn quiver_document() {
        let text = r#"{"vertices": 1, "arrows": [["x", 0, 0]], "relations": [[[1, ["x", "x", "x"]]]]}"#;
        let InputDoc::Quiver(q) = parse_document(text).unwrap() else { panic!("wrong shape") };
        let qa = q.build(&Field::prime(2).unwrap(), None).unwrap();
        assert_eq!(qa.algebra.dim(), 3);
        assert!(q.build(&Field::prime(2).unwrap(), Some(1)).is_err());
    }

    #[test]
    fn unknown_shape_rejected() {
        assert!(parse_document(r#"{"dim": 2}"#).is_err());
        assert!(parse_document("[1]").is_err());
    }
}

//! Resolving a command-line input (file, inline JSON or registry name) to an
//! algebra.

use std::path::Path;

use anyhow::{bail, Context, Result};
use kuelshammer_core::families::instantiate;
use kuelshammer_core::form::BilinearForm;
use kuelshammer_core::presentation::{CayleyTable, QuiverAlgebra};
use kuelshammer_core::{Algebra, Field, Matrix};

use crate::formats::{parse_document, FieldJson, InputDoc};

/// A resolved input.
#[derive(Debug, Clone)]
pub struct Subject {
    pub name: String,
    pub algebra: Algebra,
    /// Symmetrizing form known from the construction.
    pub form: Option<BilinearForm>,
    pub quiver: Option<QuiverAlgebra>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    File,
    Inline,
    Registry,
}

pub fn classify(input: &str) -> Source {
    let t = input.trim_start();
    if t.starts_with('{') {
        Source::Inline
    } else if Path::new(input).is_file() {
        Source::File
    } else {
        Source::Registry
    }
}

/// Picks the field: the document's when present, else the flag's. Both
/// present and different is an error.
fn pick_field(doc: Option<&FieldJson>, flag: Option<&FieldJson>) -> Result<Field> {
    match (doc, flag) {
        (Some(d), Some(f)) => {
            let (a, b) = (d.field()?, f.field()?);
            a.ensure_same(&b)?;
            Ok(a)
        }
        (Some(x), None) | (None, Some(x)) => x.field(),
        (None, None) => bail!("no field given; pass --field p=<prime>[,e=<degree>]"),
    }
}

/// Resolves `input`. `bound` overrides the length bound of quiver documents;
/// registry families always use their own bound formula.
pub fn resolve(input: &str, field: Option<&FieldJson>, bound: Option<usize>) -> Result<Subject> {
    match classify(input) {
        Source::Registry => {
            let f = pick_field(None, field)?;
            let inst = instantiate(input, &f)?;
            Ok(Subject { name: inst.name, algebra: inst.algebra, form: inst.symmetric_form, quiver: inst.quiver })
        }
        src => {
            let (text, name) = if src == Source::File {
                let text = std::fs::read_to_string(input).with_context(|| format!("cannot read {input}"))?;
                let name = Path::new(input).file_stem().map_or(input.to_string(), |s| s.to_string_lossy().into_owned());
                (text, name)
            } else {
                (input.to_string(), "inline".to_string())
            };
            let doc = parse_document(&text)?;
            let f = pick_field(doc.field(), field)?;
            match doc {
                InputDoc::Algebra(a) => Ok(Subject { name, algebra: a.build(&f)?, form: None, quiver: None }),
                InputDoc::Quiver(q) => {
                    let qa = q.build(&f, bound)?;
                    Ok(Subject { name, algebra: qa.algebra.clone(), form: None, quiver: Some(qa) })
                }
                InputDoc::Cayley(c) => {
                    let g = c.table()?;
                    let a = g.group_algebra(&f);
                    let form = group_form(&g, &f)?;
                    Ok(Subject { name, algebra: a, form: Some(form), quiver: None })
                }
            }
        }
    }
}

/// `⟨g, h⟩ = 1` iff `gh = 1`, on the group basis.
fn group_form(g: &CayleyTable, f: &Field) -> Result<BilinearForm> {
    let n = g.order();
    Ok(BilinearForm::new(Matrix::from_fn(f, n, n, |i, j| u32::from(g.mul(i, j) == 0)))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_and_inline_inputs() {
        let gf2 = FieldJson { p: 2, e: 1, modulus: None };
        let s = resolve("Nil[n=2]", Some(&gf2), None).unwrap();
        assert_eq!(s.algebra.dim(), 2);
        let inline = r#"{"field": {"p": 2}, "order": 2, "table": [[0, 1], [1, 0]]}"#;
        let g = resolve(inline, None, None).unwrap();
        assert_eq!(g.algebra.dim(), 2);
        assert!(g.form.unwrap().is_symmetric());
        assert!(resolve("Nil[n=2]", None, None).is_err());
    }

    #[test]
    fn conflicting_fields_rejected() {
        let gf3 = FieldJson { p: 3, e: 1, modulus: None };
        let inline = r#"{"field": {"p": 2}, "order": 1, "table": [[0]]}"#;
        assert!(resolve(inline, Some(&gf3), None).is_err());
    }
}

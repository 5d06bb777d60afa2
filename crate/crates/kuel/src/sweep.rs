//! Parameter sweeps over a registry family.

use anyhow::{anyhow, bail, Context, Result};
use kuelshammer_core::families::{family, instantiate};
use kuelshammer_core::report::{invariant_report, InvariantReport};
use kuelshammer_core::Field;
use rayon::prelude::*;
use serde::Serialize;

/// One grid axis: a parameter and its values in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axis {
    pub name: String,
    pub values: Vec<String>,
}

/// Parses `k=1..4`, `k=1,2,5` or `c=0,w`. Ranges are inclusive.
pub fn parse_axis(s: &str) -> Result<Axis> {
    let (name, rhs) = s.split_once('=').ok_or_else(|| anyhow!("grid axis `{s}` is not name=values"))?;
    let rhs = rhs.trim();
    let values = if let Some((lo, hi)) = rhs.split_once("..") {
        let lo: i64 = lo.trim().parse().with_context(|| format!("bad range start in `{s}`"))?;
        let hi: i64 = hi.trim().parse().with_context(|| format!("bad range end in `{s}`"))?;
        (lo..=hi).map(|x| x.to_string()).collect()
    } else {
        rhs.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect()
    };
    Ok(Axis { name: name.trim().to_string(), values })
}

/// Cell names in row-major order of the axes (last axis fastest).
pub fn cells(family_name: &str, axes: &[Axis]) -> Vec<String> {
    if axes.iter().any(|a| a.values.is_empty()) {
        return Vec::new();
    }
    let mut out = vec![Vec::<(String, String)>::new()];
    for axis in axes {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                axis.values.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push((axis.name.clone(), v.clone()));
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|params| {
            let inner: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("{family_name}[{}]", inner.join(","))
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Cell {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<InvariantReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Runs one report per grid cell. Errors are recorded per cell; order is
/// the grid order regardless of scheduling.
pub fn sweep(family_name: &str, axes: &[Axis], field: &Field, depth: Option<usize>) -> Result<Vec<Cell>> {
    let spec = family(family_name)?;
    for a in axes {
        if !spec.params.iter().any(|p| p.name == a.name) {
            bail!("family {family_name} has no parameter `{}`", a.name);
        }
    }
    let names = cells(family_name, axes);
    Ok(names
        .into_par_iter()
        .map(|name| {
            let r = instantiate(&name, field).and_then(|inst| {
                invariant_report(&inst.name, &inst.algebra, inst.symmetric_form.as_ref(), depth)
            });
            match r {
                Ok(report) => Cell { name, report: Some(report), error: None },
                Err(e) => Cell { name, report: None, error: Some(e.to_string()) },
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_forms() {
        assert_eq!(parse_axis("n=2..4").unwrap().values, ["2", "3", "4"]);
        assert_eq!(parse_axis("c=0, w").unwrap().values, ["0", "w"]);
        assert!(parse_axis("n").is_err());
    }

    #[test]
    fn grid_order() {
        let axes = [parse_axis("n=2..3").unwrap(), parse_axis("j=0,1").unwrap()];
        assert_eq!(cells("Ln", &axes), ["Ln[n=2,j=0]", "Ln[n=2,j=1]", "Ln[n=3,j=0]", "Ln[n=3,j=1]"]);
        assert!(cells("Ln", &[parse_axis("n=3..2").unwrap()]).is_empty());
    }

    #[test]
    fn errors_are_recorded_per_cell() {
        let f = Field::prime(2).unwrap();
        let axes = [parse_axis("n=2").unwrap(), parse_axis("j=1..2").unwrap()];
        let out = sweep("Ln", &axes, &f, None).unwrap();
        assert_eq!(out.len(), 2);
        assert!(out[0].report.is_some());
        assert!(out[1].error.as_deref().unwrap().contains("j < n"));
    }
}

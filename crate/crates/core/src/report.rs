//! Invariant reports and pairwise comparison.
//!
//! A report collects everything the library computes about one algebra; a
//! comparison walks two reports in a fixed order and names the first
//! invariant that differs.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::form::{find_symmetric_form, socle_form, BilinearForm, FormPredicates, SymmetricFormSearch};
use crate::kuelshammer::{
    iso_search_local, quotient_ring, reynolds_ideal, ring_fingerprint, tower, IsoSearch, KuelshammerTower,
    RingFingerprint,
};
use crate::stable::{stable_invariants, StableInvariants};

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Dims {
    #[cfg_attr(feature = "serde", serde(rename = "A"))]
    pub a: usize,
    #[cfg_attr(feature = "serde", serde(rename = "Z"))]
    pub z: usize,
    pub commutator: usize,
    pub rad: usize,
    pub soc: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TowerLevel {
    pub n: usize,
    #[cfg_attr(feature = "serde", serde(rename = "dim_Tn"))]
    pub dim_tn: usize,
    /// Absent when no symmetrizing form is known.
    #[cfg_attr(feature = "serde", serde(rename = "dim_Tn_perp"))]
    pub dim_tn_perp: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuotientFingerprint {
    pub n: usize,
    pub fingerprint: RingFingerprint,
}

/// Where the symmetrizing form used for `T_n^⊥` came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum FormSource {
    Supplied,
    SocleForm,
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FormSummary {
    /// Predicates of the socle-path form, when the algebra records socle paths.
    pub socle_form: Option<FormPredicates>,
    pub symmetrizing_form: Option<FormSource>,
    /// `"witness"`, `"not symmetric"` or `"inconclusive"`.
    pub symmetric_search: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InvariantReport {
    pub name: String,
    pub field: FieldSpec,
    pub dims: Dims,
    pub tower: Vec<TowerLevel>,
    pub stabilization: usize,
    pub reynolds_dim: usize,
    /// Fingerprints of `Z/T_n^⊥`; empty without a symmetrizing form.
    pub quotient_fingerprints: Vec<QuotientFingerprint>,
    /// Absent for algebras without vertex idempotents.
    pub stable: Option<StableInvariants>,
    pub forms: FormSummary,
}

/// A report together with the data needed for a comparison.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub report: InvariantReport,
    pub algebra: Algebra,
    pub form: Option<BilinearForm>,
    pub tower: KuelshammerTower,
    /// `Z/T_n^⊥` for every computed level.
    pub quotients: Vec<Algebra>,
}

/// The socle-path form when it is symmetric and associative, else the
/// witness of the search.
fn choose_form(
    a: &Algebra,
    socle: Option<&BilinearForm>,
    search: &SymmetricFormSearch,
) -> Option<(FormSource, BilinearForm)> {
    if let Some(f) = socle {
        if f.is_symmetric() && f.is_associative(a) {
            return Some((FormSource::SocleForm, f.clone()));
        }
    }
    search.witness().map(|f| (FormSource::Search, f.clone()))
}

/// Computes the full report. `form`, when given, must be symmetric,
/// associative and nondegenerate.
pub fn analyze(name: &str, a: &Algebra, form: Option<&BilinearForm>, depth: Option<usize>) -> Result<Analysis> {
    if let Some(f) = form {
        let p = f.predicates(a);
        if !(p.symmetric && p.associative && p.nondegenerate) {
            return Err(Error::NotSymmetric(format!("supplied form for {name} is not a symmetrizing form")));
        }
    }
    let socle = if a.metadata().socle_paths.is_empty() { None } else { socle_form(a).ok() };
    let search = if form.is_some() { None } else { Some(find_symmetric_form(a)) };
    let chosen = match &search {
        Some(s) => choose_form(a, socle.as_ref(), s),
        None => form.map(|f| (FormSource::Supplied, f.clone())),
    };
    let symmetric_search = match &search {
        None | Some(SymmetricFormSearch::Witness(_)) => "witness",
        Some(SymmetricFormSearch::NotSymmetric { .. }) => "not symmetric",
        Some(SymmetricFormSearch::Inconclusive { .. }) => "inconclusive",
    };
    let tw = tower(a, chosen.as_ref().map(|c| &c.1), depth)?;
    let center = match &tw.center {
        Some(z) => z.clone(),
        None => a.center(),
    };
    let mut quotients = Vec::with_capacity(tw.perp.len());
    let mut quotient_fingerprints = Vec::with_capacity(tw.perp.len());
    for (n, i) in tw.perp.iter().enumerate() {
        let q = quotient_ring(a, &center, i)?;
        quotient_fingerprints.push(QuotientFingerprint { n, fingerprint: ring_fingerprint(&q)? });
        quotients.push(q);
    }
    let stable = match stable_invariants(a) {
        Ok(s) => Some(s),
        Err(Error::NoPresentation) => None,
        Err(e) => return Err(e),
    };
    let rad = a.radical()?;
    let soc = a.socle()?;
    let report = InvariantReport {
        name: name.to_string(),
        field: a.field().spec().clone(),
        dims: Dims {
            a: a.dim(),
            z: center.dim(),
            commutator: tw.quotient.commutator().dim(),
            rad: rad.dim(),
            soc: soc.dim(),
        },
        tower: tw
            .t
            .iter()
            .enumerate()
            .map(|(n, t)| TowerLevel { n, dim_tn: t.dim(), dim_tn_perp: tw.perp.get(n).map(|s| s.dim()) })
            .collect(),
        stabilization: tw.stabilization,
        reynolds_dim: reynolds_ideal(a)?.dim(),
        quotient_fingerprints,
        stable,
        forms: FormSummary {
            socle_form: socle.as_ref().map(|f| f.predicates(a)),
            symmetrizing_form: chosen.as_ref().map(|c| c.0),
            symmetric_search: symmetric_search.to_string(),
        },
    };
    Ok(Analysis { report, algebra: a.clone(), form: chosen.map(|c| c.1), tower: tw, quotients })
}

pub fn invariant_report(name: &str, a: &Algebra, form: Option<&BilinearForm>, depth: Option<usize>) -> Result<InvariantReport> {
    analyze(name, a, form, depth).map(|x| x.report)
}

/// How two algebras compare.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "verdict", rename_all = "snake_case"))]
pub enum Verdict {
    /// The named invariant takes different values.
    Distinguished { invariant: String, values: [String; 2] },
    /// Every compared invariant agrees; `inconclusive` lists checks that
    /// could not be decided.
    NotDistinguished { agreeing: Vec<String>, inconclusive: Vec<String> },
    /// Identical structure constants.
    Isomorphic { witness: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Comparison {
    pub left: String,
    pub right: String,
    #[cfg_attr(feature = "serde", serde(flatten))]
    pub verdict: Verdict,
    /// Matrix of a ring isomorphism `Z/T_1^⊥ -> Z/T_1^⊥` when one was found.
    pub quotient_isomorphism: Option<Vec<Vec<u32>>>,
}

impl Comparison {
    pub fn is_distinguished(&self) -> bool {
        matches!(self.verdict, Verdict::Distinguished { .. })
    }
}

fn same_structure(x: &Algebra, y: &Algebra) -> bool {
    x.dim() == y.dim() && x.unit() == y.unit() && x.structure() == y.structure()
}

fn opt<T: core::fmt::Debug>(v: Option<T>) -> String {
    match v {
        Some(x) => format!("{x:?}"),
        None => "n/a".into(),
    }
}

/// Compares tower dimensions, the fingerprints of `Z/T_n^⊥`, the stable
/// invariants and, when both are local and small enough, decides whether
/// the rings `Z/T_1^⊥` are isomorphic.
pub fn compare(x: &Analysis, y: &Analysis) -> Result<Comparison> {
    x.algebra.field().ensure_same(y.algebra.field())?;
    let (rx, ry) = (&x.report, &y.report);
    let done = |verdict| Comparison {
        left: rx.name.clone(),
        right: ry.name.clone(),
        verdict,
        quotient_isomorphism: None,
    };
    if same_structure(&x.algebra, &y.algebra) {
        return Ok(done(Verdict::Isomorphic { witness: "identity".into() }));
    }

    let mut checks: Vec<(String, String, String)> = Vec::new();
    checks.push(("dim Z".into(), format!("{}", rx.dims.z), format!("{}", ry.dims.z)));
    checks.push((
        "dim A/[A,A]".into(),
        format!("{}", rx.dims.a - rx.dims.commutator),
        format!("{}", ry.dims.a - ry.dims.commutator),
    ));
    checks.push(("stabilization index".into(), format!("{}", rx.stabilization), format!("{}", ry.stabilization)));
    let levels = rx.tower.len().max(ry.tower.len());
    for n in 0..levels {
        let (lx, ly) = (rx.tower.get(n), ry.tower.get(n));
        checks.push((
            format!("dim T_{n}/[A,A]"),
            opt(lx.map(|l| l.dim_tn - rx.dims.commutator)),
            opt(ly.map(|l| l.dim_tn - ry.dims.commutator)),
        ));
        checks.push((
            format!("dim T_{n}^perp"),
            opt(lx.and_then(|l| l.dim_tn_perp)),
            opt(ly.and_then(|l| l.dim_tn_perp)),
        ));
    }
    checks.push(("dim R(A)".into(), format!("{}", rx.reynolds_dim), format!("{}", ry.reynolds_dim)));
    let fps = rx.quotient_fingerprints.len().max(ry.quotient_fingerprints.len());
    for n in 0..fps {
        match (rx.quotient_fingerprints.get(n), ry.quotient_fingerprints.get(n)) {
            (Some(fx), Some(fy)) => {
                for ((name, vx), (_, vy)) in fx.fingerprint.components().into_iter().zip(fy.fingerprint.components()) {
                    checks.push((format!("Z/T_{n}^perp {name}"), vx, vy));
                }
            }
            (fx, fy) => checks.push((
                format!("Z/T_{n}^perp fingerprint"),
                opt(fx.map(|_| "computed")),
                opt(fy.map(|_| "computed")),
            )),
        }
    }
    let stable_fields = |s: &Option<StableInvariants>| -> Vec<(&'static str, String)> {
        match s {
            Some(s) => alloc::vec![
                ("rank of the Cartan matrix over K", format!("{}", s.cartan_rank_over_k)),
                ("dim Z^pr", format!("{}", s.dim_z_pr)),
                ("dim Z^st", format!("{}", s.dim_z_st)),
                ("dim HH_0^st", format!("{}", s.dim_hh0_st)),
            ],
            None => alloc::vec![("stable invariants", "n/a".into())],
        }
    };
    let (sx, sy) = (stable_fields(&rx.stable), stable_fields(&ry.stable));
    if sx.len() == sy.len() {
        for ((name, vx), (_, vy)) in sx.into_iter().zip(sy) {
            checks.push((name.into(), vx, vy));
        }
    } else {
        checks.push(("stable invariants".into(), opt(rx.stable), opt(ry.stable)));
    }

    let mut agreeing = Vec::new();
    for (name, vx, vy) in checks {
        if vx != vy {
            return Ok(done(Verdict::Distinguished { invariant: name, values: [vx, vy] }));
        }
        if !agreeing.contains(&name) {
            agreeing.push(name);
        }
    }

    let mut inconclusive = Vec::new();
    let mut quotient_isomorphism = None;
    match (x.quotients.get(1), y.quotients.get(1)) {
        (Some(qx), Some(qy)) => match iso_search_local(qx, qy) {
            Ok(IsoSearch::NotIsomorphic) => {
                return Ok(done(Verdict::Distinguished {
                    invariant: "Z/T_1^perp ring (exhaustive isomorphism search)".into(),
                    values: ["not isomorphic".into(), "not isomorphic".into()],
                }));
            }
            Ok(IsoSearch::Isomorphic(m)) => {
                agreeing.push("Z/T_1^perp ring isomorphism type (explicit map)".into());
                quotient_isomorphism = Some(m.to_rows());
            }
            Err(Error::NotLocal) => inconclusive.push("Z/T_1^perp isomorphism search: rings are not local".into()),
            Err(Error::SearchBoundExceeded(msg)) => {
                inconclusive.push(format!("Z/T_1^perp isomorphism search: bound exceeded ({msg})"))
            }
            Err(e) => return Err(e),
        },
        _ => inconclusive.push("Z/T_1^perp isomorphism search: no symmetrizing form".into()),
    }
    let mut c = done(Verdict::NotDistinguished { agreeing, inconclusive });
    c.quotient_isomorphism = quotient_isomorphism;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::truncated_polynomial;
    use crate::field::Field;

    #[test]
    fn dual_numbers_report() {
        let f = Field::prime(2).unwrap();
        let a = truncated_polynomial(&f, 2);
        let r = invariant_report("K[x]/x^2", &a, None, None).unwrap();
        assert_eq!(r.dims, Dims { a: 2, z: 2, commutator: 0, rad: 1, soc: 1 });
        assert_eq!(r.tower[1].dim_tn_perp, Some(1));
        assert_eq!(r.quotient_fingerprints[1].fingerprint.dim, 1);
        assert_eq!(r.forms.symmetric_search, "witness");
    }

    #[test]
    fn self_comparison_is_identity() {
        let f = Field::prime(3).unwrap();
        let a = analyze("x", &truncated_polynomial(&f, 3), None, None).unwrap();
        let c = compare(&a, &a).unwrap();
        assert_eq!(c.verdict, Verdict::Isomorphic { witness: "identity".into() });
    }

    #[test]
    fn truncations_of_different_length_are_distinguished() {
        let f = Field::prime(2).unwrap();
        let a = analyze("x2", &truncated_polynomial(&f, 2), None, None).unwrap();
        let b = analyze("x3", &truncated_polynomial(&f, 3), None, None).unwrap();
        let c = compare(&a, &b).unwrap();
        assert_eq!(c.verdict, Verdict::Distinguished { invariant: "dim Z".into(), values: ["2".into(), "3".into()] });
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let a = analyze("a", &truncated_polynomial(&Field::prime(2).unwrap(), 2), None, None).unwrap();
        let b = analyze("b", &truncated_polynomial(&Field::prime(3).unwrap(), 2), None, None).unwrap();
        assert!(matches!(compare(&a, &b), Err(Error::FieldMismatch(..))));
    }
}

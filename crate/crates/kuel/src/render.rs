//! Plain-text tables for `--out table`.

use std::fmt::Write;

use kuelshammer_core::report::{Comparison, InvariantReport, Verdict};
use kuelshammer_core::Algebra;

use crate::sweep::Cell;

fn opt(v: Option<usize>) -> String {
    v.map_or("-".into(), |x| x.to_string())
}

pub fn report(r: &InvariantReport) -> String {
    let mut s = String::new();
    let d = &r.dims;
    let _ = writeln!(s, "{} over {}", r.name, r.field);
    let _ = writeln!(s, "  dim A {}  dim Z {}  dim [A,A] {}  dim rad {}  dim soc {}  dim R {}", d.a, d.z, d.commutator, d.rad, d.soc, r.reynolds_dim);
    let _ = writeln!(s, "  stabilization index {}", r.stabilization);
    let _ = writeln!(s, "  {:>3}  {:>7}  {:>11}  {:>12}", "n", "dim T_n", "dim T_n^perp", "dim Z/T_n^perp");
    for l in &r.tower {
        let q = r.quotient_fingerprints.get(l.n).map(|f| f.fingerprint.dim);
        let _ = writeln!(s, "  {:>3}  {:>7}  {:>11}  {:>12}", l.n, l.dim_tn, opt(l.dim_tn_perp), opt(q));
    }
    for f in &r.quotient_fingerprints {
        let parts: Vec<String> = f.fingerprint.components().into_iter().map(|(k, v)| format!("{k}: {v}")).collect();
        let _ = writeln!(s, "  Z/T_{}^perp  {}", f.n, parts.join("; "));
    }
    match &r.stable {
        Some(st) => {
            let _ = writeln!(
                s,
                "  stable: rank C {}  dim Z^pr {}  dim Z^st {}  dim HH_0^st {}",
                st.cartan_rank_over_k, st.dim_z_pr, st.dim_z_st, st.dim_hh0_st
            );
        }
        None => {
            let _ = writeln!(s, "  stable: not available (no vertex idempotents)");
        }
    }
    let form = match r.forms.symmetrizing_form {
        Some(src) => format!("{src:?}"),
        None => "none".into(),
    };
    let _ = writeln!(s, "  symmetrizing form: {form}; symmetric form search: {}", r.forms.symmetric_search);
    if let Some(p) = r.forms.socle_form {
        let _ = writeln!(
            s,
            "  socle form: symmetric {}  associative {}  nondegenerate {}",
            p.symmetric, p.associative, p.nondegenerate
        );
    }
    s
}

pub fn comparison(c: &Comparison) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} vs {}", c.left, c.right);
    match &c.verdict {
        Verdict::Distinguished { invariant, values } => {
            let _ = writeln!(s, "  distinguished by {invariant}: {} vs {}", values[0], values[1]);
        }
        Verdict::NotDistinguished { agreeing, inconclusive } => {
            let _ = writeln!(s, "  not distinguished; {} invariants agree", agreeing.len());
            for a in agreeing {
                let _ = writeln!(s, "    = {a}");
            }
            for i in inconclusive {
                let _ = writeln!(s, "    ? {i}");
            }
        }
        Verdict::Isomorphic { witness } => {
            let _ = writeln!(s, "  isomorphic ({witness})");
        }
    }
    s
}

pub fn sweep(cells: &[Cell]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<28} {:>5} {:>5} {:>5}  dim T_n (n = 0, 1, ...)", "instance", "dim A", "dim Z", "stab");
    for c in cells {
        match (&c.report, &c.error) {
            (Some(r), _) => {
                let t: Vec<String> = r.tower.iter().map(|l| l.dim_tn.to_string()).collect();
                let _ = writeln!(s, "{:<28} {:>5} {:>5} {:>5}  {}", c.name, r.dims.a, r.dims.z, r.stabilization, t.join(" "));
            }
            (None, Some(e)) => {
                let _ = writeln!(s, "{:<28} error: {e}", c.name);
            }
            (None, None) => {}
        }
    }
    s
}

pub fn algebra(name: &str, a: &Algebra) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{name}: dimension {} over {}", a.dim(), a.field());
    let _ = writeln!(s, "  basis: {}", a.labels().join(" "));
    let m = a.metadata();
    if let Some(ids) = &m.idempotents {
        let _ = writeln!(s, "  vertex idempotents: {}", ids.len());
    }
    if !m.socle_paths.is_empty() {
        let soc: Vec<&str> = m.socle_paths.iter().map(|&i| a.labels()[i].as_str()).collect();
        let _ = writeln!(s, "  socle paths: {}", soc.join(" "));
    }
    s
}

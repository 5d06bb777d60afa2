//! The acceptance suite: one check per criterion, shared by `kuel selftest`
//! and the `acceptance` test target.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use anyhow::{anyhow, ensure, Result};
use kuelshammer_core::families::{instantiate, Instance};
use kuelshammer_core::form::{find_symmetric_form, nakayama, socle_form, twisted_center, SymmetricFormSearch};
use kuelshammer_core::kuelshammer::{
    center_annihilator_of_radical, mu_map, t_spaces, tower, trivial_extension_check, zeta_map, CommutatorQuotient,
};
use kuelshammer_core::report::{analyze, compare, Verdict};
use kuelshammer_core::stable::{cartan_rank, stable_invariants};
use kuelshammer_core::{Field, SemilinearMap, Subspace};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;

pub const DEFAULT_SEED: u64 = 0x4b75_656c;
/// Wall-clock budget for the whole suite.
pub const SUITE_BUDGET: Duration = Duration::from_secs(300);
/// Random pairs per instance in the μ check.
pub const MU_PAIRS: usize = 200;

/// Criteria whose failure is documented and expected with the current
/// family presentations; see the README.
pub const KNOWN_DIVERGENCES: &[&str] = &["scalar-separation", "ln-form-facts"];

pub struct Criterion {
    pub id: u8,
    pub key: &'static str,
    pub title: &'static str,
    run: fn(&Ctx) -> Result<String>,
}

pub const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, key: "ln-formula", title: "T_i dimensions of L_n match the closed formula", run: ln_formula },
    Criterion { id: 2, key: "scalar-separation", title: "c = 0 and c = 1 are distinguished", run: scalar_separation },
    Criterion { id: 3, key: "brauer-count", title: "dim A/TA counts simple modules", run: brauer_count },
    Criterion { id: 4, key: "reynolds", title: "three descriptions of the Reynolds ideal agree", run: reynolds },
    Criterion { id: 5, key: "symmetric-identities", title: "[A,A]^perp = Z and rad^perp = soc", run: symmetric_identities },
    Criterion { id: 6, key: "zeta-routes", title: "im zeta^n equals T_n^perp", run: zeta_routes },
    Criterion { id: 7, key: "trivial-extension", title: "Kuelshammer ideals of T(A_2)", run: trivial_extension },
    Criterion { id: 8, key: "quantum-exterior", title: "A_q over GF(4) with q = w", run: quantum_exterior },
    Criterion { id: 9, key: "ln-form-facts", title: "socle form of L_n and a symmetric witness", run: ln_form_facts },
    Criterion { id: 10, key: "stable-identity", title: "HH_0^st + rank C = dim A/[A,A]", run: stable_identity },
    Criterion { id: 11, key: "properties", title: "mu, monotonicity, TA, ideal closure", run: properties },
];

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub key: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn known_divergence(&self) -> bool {
        KNOWN_DIVERGENCES.contains(&self.key)
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {:>2} {:<21} {} [{:.2}s]: {}", self.id, self.key, self.title, self.elapsed.as_secs_f64(), self.detail)?;
        if !self.passed && self.known_divergence() {
            write!(f, " (known divergence)")?;
        }
        Ok(())
    }
}

/// Shared state: instance cache and the sampling seed.
pub struct Ctx {
    seed: u64,
    cache: Mutex<HashMap<(String, u32, u32), Arc<Instance>>>,
}

impl Ctx {
    pub fn new(seed: u64) -> Ctx {
        Ctx { seed, cache: Mutex::new(HashMap::new()) }
    }

    fn get(&self, name: &str, p: u32, e: u32) -> Result<Arc<Instance>> {
        let key = (name.to_string(), p, e);
        if let Some(x) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(x.clone());
        }
        let inst = Arc::new(instantiate(name, &Field::default_for(p, e)?)?);
        self.cache.lock().expect("cache lock").insert(key, inst.clone());
        Ok(inst)
    }
}

fn ln_names() -> Vec<String> {
    (2..=5).flat_map(|n| (0..n).map(move |j| format!("Ln[n={n},j={j}]"))).collect()
}

const PAIRS: [(&str, &str); 3] = [
    ("D2B[k=2,s=3,c=0]", "D2B[k=2,s=3,c=1]"),
    ("SD2B1[k=2,t=3,c=0]", "SD2B1[k=2,t=3,c=1]"),
    ("SD2B2[k=3,t=3,c=0]", "SD2B2[k=3,t=3,c=1]"),
];

/// `(name, p, expected number of simple modules)`.
const GROUPS: [(&str, u32, usize); 4] = [("Cyc[n=2]", 2, 1), ("Sym[k=3]", 2, 2), ("Sym[k=3]", 3, 2), ("Cyc[n=4]", 2, 1)];

/// Basic instances of criteria 1 and 2, all over GF(2).
fn basic_names() -> Vec<String> {
    let mut v = ln_names();
    v.extend(PAIRS.iter().flat_map(|(x, y)| [x.to_string(), y.to_string()]));
    v
}

/// Every registry instance the suite touches, as `(name, p, e)`.
pub fn suite_instances() -> Vec<(String, u32, u32)> {
    let mut v: Vec<(String, u32, u32)> = basic_names().into_iter().map(|n| (n, 2, 1)).collect();
    v.extend(GROUPS.iter().map(|(n, p, _)| (n.to_string(), *p, 1)));
    v.push(("Path[n=2]".into(), 2, 1));
    v.push(("Aq[q=w]".into(), 2, 2));
    v.push(("Nil[n=2]".into(), 2, 1));
    v.push(("Nil[n=2]".into(), 3, 1));
    v
}

/// Symmetric instances of criteria 1 to 4.
fn symmetric_instances(ctx: &Ctx) -> Result<Vec<Arc<Instance>>> {
    let mut v = Vec::new();
    for n in basic_names() {
        v.push(ctx.get(&n, 2, 1)?);
    }
    for (n, p, _) in GROUPS {
        v.push(ctx.get(n, p, 1)?);
    }
    Ok(v)
}

// ---------------------------------------------------------------------------

/// `n - max(ceil((2n - (2^{i+1} - 2) j - (2^{i+1} - 1)) / 2^{i+1}), 0)`.
pub fn ln_formula_value(n: i64, j: i64, i: u32) -> i64 {
    let q = 1i64 << (i + 1);
    let num = 2 * n - (q - 2) * j - (q - 1);
    let ceil = -((-num).div_euclid(q));
    n - ceil.max(0)
}

fn ln_formula(ctx: &Ctx) -> Result<String> {
    let mut cases = 0;
    for n in 2..=5i64 {
        for j in 0..n {
            let inst = ctx.get(&format!("Ln[n={n},j={j}]"), 2, 1)?;
            let tw = t_spaces(&inst.algebra, Some(3))?;
            for i in 1..=3u32 {
                let got = (tw.t[i as usize].dim() - tw.t[0].dim()) as i64;
                let want = ln_formula_value(n, j, i);
                ensure!(got == want, "{}: dim T_{i}/[A,A] = {got}, formula gives {want}", inst.name);
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases agree"))
}

fn scalar_separation(ctx: &Ctx) -> Result<String> {
    let mut notes = Vec::new();
    let mut ok = true;
    for (x, y) in PAIRS {
        let (ix, iy) = (ctx.get(x, 2, 1)?, ctx.get(y, 2, 1)?);
        let ax = analyze(&ix.name, &ix.algebra, ix.symmetric_form.as_ref(), None)?;
        let ay = analyze(&iy.name, &iy.algebra, iy.symmetric_form.as_ref(), None)?;
        let c = compare(&ax, &ay)?;
        let qdim = |a: &kuelshammer_core::report::Analysis| a.quotients.get(1).map(|q| q.dim());
        let (dx, dy) = (qdim(&ax), qdim(&ay));
        let family = x.split('[').next().unwrap_or(x);
        let verdict = match &c.verdict {
            Verdict::Distinguished { invariant, values } => format!("distinguished by {invariant} ({} vs {})", values[0], values[1]),
            Verdict::NotDistinguished { agreeing, inconclusive } => {
                let iso = if c.quotient_isomorphism.is_some() { ", Z/T_1^perp isomorphic by explicit map" } else { "" };
                format!("not distinguished ({} invariants agree{iso}; {} inconclusive)", agreeing.len(), inconclusive.len())
            }
            Verdict::Isomorphic { witness } => format!("isomorphic ({witness})"),
        };
        let dims_equal = dx.is_some() && dx == dy;
        ok &= c.is_distinguished() && dims_equal;
        notes.push(format!(
            "{family}: {verdict}, dim Z/T_1^perp {} vs {}",
            dx.map_or("n/a".into(), |d| d.to_string()),
            dy.map_or("n/a".into(), |d| d.to_string())
        ));
    }
    let detail = notes.join("; ");
    ensure!(ok, "{detail}");
    Ok(detail)
}

fn brauer_count(ctx: &Ctx) -> Result<String> {
    let names = basic_names();
    for n in &names {
        let inst = ctx.get(n, 2, 1)?;
        let tw = t_spaces(&inst.algebra, None)?;
        let simples = inst.algebra.dim() - tw.ta.dim();
        let vertices = inst.vertex_count().ok_or_else(|| anyhow!("{n} has no vertex idempotents"))?;
        ensure!(simples == vertices, "{n}: dim A/TA = {simples}, vertex count {vertices}");
    }
    let mut groups = Vec::new();
    for (n, p, expected) in GROUPS.iter().filter(|g| g.0 != "Cyc[n=2]") {
        let inst = ctx.get(n, *p, 1)?;
        let g = inst.group.as_ref().ok_or_else(|| anyhow!("{n} is not a group algebra"))?;
        let tw = t_spaces(&inst.algebra, None)?;
        let simples = inst.algebra.dim() - tw.ta.dim();
        let classes = g.p_regular_class_count(*p as u64);
        ensure!(
            simples == classes && classes == *expected,
            "GF({p}){n}: dim A/TA = {simples}, p-regular classes {classes}, expected {expected}"
        );
        groups.push(format!("GF({p}){n}: {simples}"));
    }
    Ok(format!("{} basic instances; {}", names.len(), groups.join(", ")))
}

fn reynolds(ctx: &Ctx) -> Result<String> {
    let mut dims = Vec::new();
    for (n, p, _) in GROUPS {
        let inst = ctx.get(n, p, 1)?;
        let a = &inst.algebra;
        let g = inst.group.as_ref().ok_or_else(|| anyhow!("{n} is not a group algebra"))?;
        let sums = g.reynolds_class_sums(a.field());
        let ann = center_annihilator_of_radical(a)?;
        let cap = a.center().intersect(&a.socle()?)?;
        ensure!(sums == ann && ann == cap, "GF({p}){n}: class sums {}, Ann_Z(rad) {}, Z cap soc {}", sums.dim(), ann.dim(), cap.dim());
        dims.push(format!("GF({p}){n}: {}", sums.dim()));
    }
    Ok(format!("dim R: {}", dims.join(", ")))
}

fn symmetric_identities(ctx: &Ctx) -> Result<String> {
    let insts = symmetric_instances(ctx)?;
    for inst in &insts {
        let a = &inst.algebra;
        let form = inst.symmetric_form.as_ref().ok_or_else(|| anyhow!("{} has no symmetrizing form", inst.name))?;
        let comm = a.commutator_space();
        let z = a.center();
        ensure!(form.orthogonal(&comm)? == z, "{}: [A,A]^perp differs from Z(A)", inst.name);
        ensure!(form.orthogonal(&a.radical()?)? == a.socle()?, "{}: rad^perp differs from soc", inst.name);
        ensure!(z.dim() == a.dim() - comm.dim(), "{}: dim Z = {}, dim A/[A,A] = {}", inst.name, z.dim(), a.dim() - comm.dim());
    }
    Ok(format!("{} symmetric instances", insts.len()))
}

fn zeta_routes(ctx: &Ctx) -> Result<String> {
    let insts = symmetric_instances(ctx)?;
    let mut levels = 0;
    for inst in &insts {
        let a = &inst.algebra;
        let f = a.field();
        let form = inst.symmetric_form.as_ref().ok_or_else(|| anyhow!("{} has no symmetrizing form", inst.name))?;
        let tw = t_spaces(a, None)?;
        let z = a.center();
        let zeta = zeta_map(a, form, &tw.quotient, &tw.mu, &z)?;
        let mut power = SemilinearMap::identity(f, z.dim());
        for (n, t) in tw.t.iter().enumerate() {
            if n > 0 {
                power = zeta.compose(&power)?;
            }
            let image: Vec<Vec<u32>> = power.image().basis().row_iter().map(|c| z.basis().vec_mul(c)).collect();
            let image = Subspace::span(f, a.dim(), &image);
            let orth = form.orthogonal(t)?.intersect(&z)?;
            ensure!(image == orth, "{}: routes differ at n = {n}", inst.name);
            levels += 1;
        }
    }
    Ok(format!("{} instances, {levels} levels", insts.len()))
}

fn trivial_extension(ctx: &Ctx) -> Result<String> {
    let inst = ctx.get("Path[n=2]", 2, 1)?;
    let check = trivial_extension_check(&inst.algebra, 2)?;
    ensure!(check.extension.dim() == 6, "T(A) has dimension {}", check.extension.dim());
    let p = check.form.predicates(&check.extension);
    ensure!(p.symmetric && p.associative && p.nondegenerate, "T(A) form predicates {p:?}");
    for n in 0..=2 {
        ensure!(check.ideals[n] == check.expected[n], "level {n}: T_n(TA)^perp differs from the expected subspace");
    }
    let dims: Vec<String> = check.ideals.iter().map(|s| s.dim().to_string()).collect();
    Ok(format!("dim T_n(TA)^perp for n = 0, 1, 2: {}", dims.join(", ")))
}

fn quantum_exterior(ctx: &Ctx) -> Result<String> {
    let inst = ctx.get("Aq[q=w]", 2, 2)?;
    let a = &inst.algebra;
    let f = a.field();
    let qa = inst.quiver.as_ref().ok_or_else(|| anyhow!("A_q has no quiver presentation"))?;
    let q = f.generator();
    let form = socle_form(a)?;
    let nu = nakayama(&form, a)?;
    let (x, y) = (qa.word("X")?, qa.word("Y")?);
    let scaled = |c: u32, v: &[u32]| -> Vec<u32> { v.iter().map(|&t| f.mul(c, t)).collect() };
    let qinv = f.inv(q).ok_or_else(|| anyhow!("q is zero"))?;
    ensure!(nu.apply(&x) == scaled(q, &x), "nu(X) is not qX");
    ensure!(nu.apply(&y) == scaled(qinv, &y), "nu(Y) is not q^-1 Y");
    let z = a.center();
    let zn = twisted_center(a, &nu);
    ensure!(z.dim() == 2 && zn.dim() == 3, "dim Z = {}, dim Z_nu = {}", z.dim(), zn.dim());
    let rad_z = z.intersect(&a.radical()?)?;
    ensure!(a.product_space(&rad_z, &zn).is_zero(), "rad(Z) Z_nu is nonzero");
    let search = find_symmetric_form(a);
    ensure!(
        matches!(search, SymmetricFormSearch::NotSymmetric { .. }),
        "symmetric form search did not return a certificate"
    );
    Ok("dim Z = 2, dim Z_nu = 3, nu(X) = qX, nu(Y) = q^-1 Y, no symmetric form".into())
}

fn ln_form_facts(ctx: &Ctx) -> Result<String> {
    let mut cases = 0;
    let mut mismatches = Vec::new();
    for n in 3..=4i64 {
        for j in 0..n {
            let inst = ctx.get(&format!("Ln[n={n},j={j}]"), 2, 1)?;
            let a = &inst.algebra;
            let qa = inst.quiver.as_ref().ok_or_else(|| anyhow!("{} has no quiver presentation", inst.name))?;
            let form = socle_form(a)?;
            let a0 = qa.word("a0")?;
            for m in 0..=2 * n {
                let mut w = String::from("abar0");
                for _ in 0..m {
                    w.push_str("*eps");
                }
                let x = qa.word(&w)?;
                let left = form.eval(&x, &a0);
                let right = form.eval(&a0, &x);
                let want_left = u32::from(m == 2 * n - 3);
                let want_right = u32::from(m == 2 * n - 3 || m == 2 * n - 4 - 2 * j);
                if left != want_left {
                    mismatches.push(format!("{}: <abar0 eps^{m}, a0> = {left}, expected {want_left}", inst.name));
                }
                if right != want_right {
                    mismatches.push(format!("{}: <a0, abar0 eps^{m}> = {right}, expected {want_right}", inst.name));
                }
                cases += 1;
            }
            if form.is_symmetric() {
                mismatches.push(format!("{}: socle form is symmetric", inst.name));
            }
            let SymmetricFormSearch::Witness(w) = find_symmetric_form(a) else {
                return Err(anyhow!("{}: no symmetric witness found", inst.name));
            };
            let p = w.predicates(a);
            ensure!(p.symmetric && p.associative && p.nondegenerate, "{}: witness predicates {p:?}", inst.name);
        }
    }
    ensure!(mismatches.is_empty(), "{} mismatches over {cases} exponents: {}", mismatches.len(), mismatches.join("; "));
    Ok(format!("{cases} exponents; 7 asymmetric socle forms with symmetric witnesses"))
}

fn stable_identity(ctx: &Ctx) -> Result<String> {
    let mut names: Vec<(String, u32)> = basic_names().into_iter().map(|n| (n, 2)).collect();
    names.push(("Nil[n=2]".into(), 2));
    names.push(("Nil[n=2]".into(), 3));
    for (n, p) in &names {
        let inst = ctx.get(n, *p, 1)?;
        let a = &inst.algebra;
        let s = stable_invariants(a)?;
        let quotient = a.dim() - a.commutator_space().dim();
        let rank = cartan_rank(a)?;
        ensure!(s.dim_commutator_quotient == quotient, "{n}: commutator quotient mismatch");
        ensure!(s.cartan_rank_over_k == rank, "{n}: Cartan rank mismatch");
        ensure!(s.dim_hh0_st + rank == quotient, "{n}: {} + {rank} != {quotient}", s.dim_hh0_st);
        if inst.symmetric_form.is_some() {
            let r = kuelshammer_core::kuelshammer::reynolds_ideal(a)?.dim();
            ensure!(s.dim_z_pr == rank && s.dim_z_pr <= r, "{n}: dim Z^pr = {}, rank {rank}, dim R = {r}", s.dim_z_pr);
        }
    }
    // dual numbers by hand: the trace of 1 on A e is 2
    let two = ctx.get("Nil[n=2]", 2, 1)?;
    let three = ctx.get("Nil[n=2]", 3, 1)?;
    let (s2, s3) = (stable_invariants(&two.algebra)?, stable_invariants(&three.algebra)?);
    ensure!((s2.dim_hh0_st, s2.cartan_rank_over_k) == (2, 0), "GF(2)[x]/x^2: {s2:?}");
    ensure!((s3.dim_hh0_st, s3.cartan_rank_over_k) == (1, 1), "GF(3)[x]/x^2: {s3:?}");
    Ok(format!("{} instances", names.len()))
}

fn properties(ctx: &Ctx) -> Result<String> {
    let list = suite_instances();
    for (idx, (name, p, e)) in list.iter().enumerate() {
        let inst = ctx.get(name, *p, *e)?;
        let a = &inst.algebra;
        let f = a.field();
        let pw = f.characteristic() as u64;
        let cq = CommutatorQuotient::new(a);
        let mu = mu_map(a, &cq);
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed.wrapping_add(idx as u64));
        let mut random = || -> Vec<u32> { (0..a.dim()).map(|_| rng.next_u32() % f.order()).collect() };
        for _ in 0..MU_PAIRS {
            let (x, y) = (random(), random());
            let s: Vec<u32> = x.iter().zip(&y).map(|(&u, &v)| f.add(u, v)).collect();
            let xp = a.pow(&x, pw);
            let yp = a.pow(&y, pw);
            let sum_p: Vec<u32> = xp.iter().zip(&yp).map(|(&u, &v)| f.add(u, v)).collect();
            ensure!(cq.project(&a.pow(&s, pw)) == cq.project(&sum_p), "{name}: (x+y)^p differs from x^p + y^p mod [A,A]");
            ensure!(cq.project(&a.pow(&a.commutator(&x, &y), pw)).iter().all(|&c| c == 0), "{name}: [x,y]^p not in [A,A]");
            ensure!(mu.apply(&cq.project(&x)) == cq.project(&xp), "{name}: mu disagrees with the p-th power");
        }
        let tw = tower(a, inst.symmetric_form.as_ref(), None)?;
        for w in tw.t.windows(2) {
            ensure!(w[1].contains_subspace(&w[0])?, "{name}: T_n not increasing");
        }
        ensure!(tw.ta == a.radical()?.sum(cq.commutator())?, "{name}: TA differs from rad + [A,A]");
        if let Some(z) = &tw.center {
            for w in tw.perp.windows(2) {
                ensure!(w[0].contains_subspace(&w[1])?, "{name}: T_n^perp not decreasing");
            }
            for (n, i) in tw.perp.iter().enumerate() {
                for r in i.basis().row_iter() {
                    for c in z.basis().row_iter() {
                        ensure!(i.contains(&a.multiply(c, r)), "{name}: T_{n}^perp is not an ideal of Z");
                    }
                }
            }
        }
    }
    Ok(format!("{} instances, {MU_PAIRS} random pairs each", list.len()))
}

// ---------------------------------------------------------------------------

pub fn matches_filter(c: &Criterion, filter: Option<&str>) -> bool {
    match filter {
        None => true,
        Some(f) => f.split(',').map(str::trim).any(|f| c.key.contains(f) || c.id.to_string() == f),
    }
}

fn run_one(c: &Criterion, ctx: &Ctx) -> CriterionResult {
    let start = Instant::now();
    let (passed, detail) = match (c.run)(ctx) {
        Ok(d) => (true, d),
        Err(e) => (false, format!("{e:#}")),
    };
    CriterionResult { id: c.id, key: c.key, title: c.title, passed, detail, elapsed: start.elapsed() }
}

/// Runs the selected criteria on `jobs` threads (0 lets rayon decide).
/// Results come back in criterion order. When the property suite runs, it
/// also fails if the whole run exceeded [`SUITE_BUDGET`].
pub fn run(filter: Option<&str>, jobs: usize, seed: u64) -> Result<Vec<CriterionResult>> {
    let ctx = Ctx::new(seed);
    let selected: Vec<&Criterion> = CRITERIA.iter().filter(|c| matches_filter(c, filter)).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let start = Instant::now();
    let mut results: Vec<CriterionResult> = pool.install(|| selected.par_iter().map(|c| run_one(c, &ctx)).collect());
    let total = start.elapsed();
    if let Some(r) = results.iter_mut().find(|r| r.key == "properties") {
        if total > SUITE_BUDGET {
            r.passed = false;
            r.detail = format!("{}; suite took {:.1}s, over the {}s budget", r.detail, total.as_secs_f64(), SUITE_BUDGET.as_secs());
        } else if r.passed {
            r.detail = format!("{}; suite wall-clock {:.1}s", r.detail, total.as_secs_f64());
        }
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        // n = 2, j = 0: ceil((4 - 3) / 4) = 1
        assert_eq!(ln_formula_value(2, 0, 1), 1);
        // large j makes the numerator negative
        assert_eq!(ln_formula_value(3, 2, 1), 3);
        assert_eq!(ln_formula_value(5, 0, 3), 5);
        // n = 5, j = 0, i = 1: ceil(7 / 4) = 2
        assert_eq!(ln_formula_value(5, 0, 1), 3);
    }

    #[test]
    fn filter_selects_by_key_or_id() {
        let keys: Vec<&str> = CRITERIA.iter().filter(|c| matches_filter(c, Some("ln-formula"))).map(|c| c.key).collect();
        assert_eq!(keys, ["ln-formula"]);
        let keys: Vec<&str> = CRITERIA.iter().filter(|c| matches_filter(c, Some("ln"))).map(|c| c.key).collect();
        assert_eq!(keys, ["ln-formula", "ln-form-facts"]);
        assert_eq!(CRITERIA.iter().filter(|c| matches_filter(c, Some("7,8"))).count(), 2);
    }
}

//! Registry of named algebra families.
//!
//! Names follow the grammar `Name` or `Name[key=value,...]`, e.g.
//! `D1A1[k=2]`, `SD2B1[k=2,t=3,c=1]`, `Ln[n=4,j=1]`, `Aq[q=w]`. Integer
//! parameters are decimal; scalar parameters use the field syntax of
//! [`Field::parse`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::form::{find_symmetric_form, socle_form, BilinearForm, SymmetricFormSearch};
use crate::linalg::Matrix;
use crate::presentation::{quotient_algebra_auto, CayleyTable, Quiver, QuiverAlgebra, Relation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Int,
    Scalar,
}

#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    /// Used when the parameter is omitted.
    pub default: Option<&'static str>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Flags {
    pub symmetric: bool,
    pub selfinjective: bool,
    pub split_basic: bool,
    /// Only defined in characteristic 2.
    pub char_two: bool,
    /// Listed for completeness; no acceptance run uses it.
    pub untested: bool,
}

pub struct FamilySpec {
    pub name: &'static str,
    pub params: &'static [ParamSpec],
    pub conditions: &'static str,
    pub relations: &'static str,
    pub flags: Flags,
    build: fn(&Params, &Field) -> Result<Built>,
}

impl core::fmt::Debug for FamilySpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "FamilySpec({})", self.name)
    }
}

enum Built {
    Quiver(QuiverAlgebra),
    Group(CayleyTable, Algebra),
}

/// Parsed parameters in schema order, as written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    values: Vec<(String, String)>,
}

impl Params {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn int(&self, key: &str) -> Result<i64> {
        let v = self.get(key).ok_or_else(|| Error::ParamOutOfRange(format!("missing parameter {key}")))?;
        v.parse().map_err(|_| Error::ParamOutOfRange(format!("{key}={v} is not an integer")))
    }

    fn uint(&self, key: &str) -> Result<usize> {
        let v = self.int(key)?;
        usize::try_from(v).map_err(|_| Error::ParamOutOfRange(format!("{key}={v} is negative")))
    }

    pub fn scalar(&self, key: &str, field: &Field) -> Result<u32> {
        let v = self.get(key).ok_or_else(|| Error::ParamOutOfRange(format!("missing parameter {key}")))?;
        field.parse(v).map_err(|_| Error::ParamOutOfRange(format!("{key}={v} is not an element of {field}")))
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.values
    }
}

/// An instantiated family member.
#[derive(Debug, Clone)]
pub struct Instance {
    /// Canonical name with every parameter spelled out.
    pub name: String,
    pub family: &'static FamilySpec,
    pub params: Params,
    pub algebra: Algebra,
    pub quiver: Option<QuiverAlgebra>,
    pub group: Option<CayleyTable>,
    /// A symmetric associative nondegenerate form, for symmetric families.
    pub symmetric_form: Option<BilinearForm>,
}

impl Instance {
    pub fn vertex_count(&self) -> Option<usize> {
        self.algebra.metadata().idempotents.as_ref().map(Vec::len)
    }
}

/// Splits `Name[k=v,...]` into the name and its key/value pairs.
pub fn parse_name(s: &str) -> Result<(String, Vec<(String, String)>)> {
    let s = s.trim();
    let Some(open) = s.find('[') else {
        return Ok((s.to_string(), Vec::new()));
    };
    let inner = s[open + 1..]
        .strip_suffix(']')
        .ok_or_else(|| Error::ParamOutOfRange(format!("missing closing bracket in {s}")))?;
    let mut pairs = Vec::new();
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::ParamOutOfRange(format!("parameter {part} is not key=value")))?;
        pairs.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok((s[..open].trim().to_string(), pairs))
}

pub fn list_families() -> &'static [FamilySpec] {
    REGISTRY
}

pub fn family(name: &str) -> Result<&'static FamilySpec> {
    REGISTRY.iter().find(|f| f.name == name).ok_or_else(|| Error::UnknownFamily(name.to_string()))
}

/// Instantiates a registry name over `field` and verifies the expected
/// properties of the family.
pub fn instantiate(name: &str, field: &Field) -> Result<Instance> {
    let (fam, pairs) = parse_name(name)?;
    let spec = family(&fam)?;
    let mut values = Vec::with_capacity(spec.params.len());
    for p in spec.params {
        let v = match pairs.iter().find(|(k, _)| k == p.name) {
            Some((_, v)) => v.clone(),
            None => match p.default {
                Some(d) => d.to_string(),
                None => return Err(Error::ParamOutOfRange(format!("{fam} needs parameter {}", p.name))),
            },
        };
        values.push((p.name.to_string(), v));
    }
    if let Some((k, _)) = pairs.iter().find(|(k, _)| !spec.params.iter().any(|p| p.name == k)) {
        return Err(Error::ParamOutOfRange(format!("{fam} has no parameter {k}")));
    }
    if spec.flags.char_two && field.characteristic() != 2 {
        return Err(Error::ParamOutOfRange(format!("{fam} requires characteristic 2")));
    }
    let params = Params { values };
    let canonical = if params.values.is_empty() {
        fam.clone()
    } else {
        let inner: Vec<String> = params.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{fam}[{}]", inner.join(","))
    };
    let (algebra, quiver, group) = match (spec.build)(&params, field)? {
        Built::Quiver(q) => (q.algebra.clone(), Some(q), None),
        Built::Group(g, a) => (a, None, Some(g)),
    };
    let mut inst =
        Instance { name: canonical, family: spec, params, algebra, quiver, group, symmetric_form: None };
    if spec.flags.symmetric {
        inst.symmetric_form = Some(symmetric_witness(&inst)?);
    }
    if spec.flags.selfinjective && !spec.flags.symmetric && inst.quiver.is_some() {
        socle_form(&inst.algebra)
            .map_err(|e| Error::InvariantViolation(format!("{}: expected selfinjective: {e}", inst.name)))?;
    }
    Ok(inst)
}

fn symmetric_witness(inst: &Instance) -> Result<BilinearForm> {
    let a = &inst.algebra;
    if let Some(g) = &inst.group {
        let gram = Matrix::from_fn(a.field(), g.order(), g.order(), |i, j| u32::from(g.mul(i, j) == 0));
        return BilinearForm::new(gram);
    }
    if let Ok(f) = socle_form(a) {
        if f.is_symmetric() && f.is_associative(a) {
            return Ok(f);
        }
    }
    match find_symmetric_form(a) {
        SymmetricFormSearch::Witness(f) => Ok(f),
        _ => Err(Error::InvariantViolation(format!("{} is flagged symmetric but no symmetric form was found", inst.name))),
    }
}

// ---------------------------------------------------------------------------
// relation helpers

/// Words are written with spaces between arrow labels.
fn word(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

fn rep(s: &str, k: usize) -> String {
    vec![s; k].join(" ")
}

/// `(coefficient, word)` terms; zero coefficients and empty words are dropped.
fn rel(terms: &[(u32, String)]) -> Relation {
    Relation::new(terms.iter().filter(|(c, w)| *c != 0 && !w.trim().is_empty()).map(|(c, w)| (*c, word(w))).collect())
}

fn arrows(list: &[(&str, usize, usize)]) -> Vec<(String, usize, usize)> {
    list.iter().map(|(l, s, t)| (l.to_string(), *s, *t)).collect()
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange(msg.to_string()))
    }
}

fn zero_or_one(c: u32, key: &str) -> Result<()> {
    need(c <= 1, &format!("{key} must be 0 or 1"))
}

fn build(q: Quiver, rels: Vec<Relation>, field: &Field, bound: usize) -> Result<Built> {
    Ok(Built::Quiver(quotient_algebra_auto(&q, &rels, field, bound)?))
}

const fn int(name: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Int, default: None }
}

const fn scalar(name: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Scalar, default: None }
}

const fn scalar_or(name: &'static str, d: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Scalar, default: Some(d) }
}

const TAME: Flags = Flags { symmetric: true, selfinjective: true, split_basic: true, char_two: false, untested: false };
const TAME2: Flags = Flags { char_two: true, ..TAME };
const UNTESTED: Flags = Flags { untested: true, ..TAME };

// ---------------------------------------------------------------------------
// one simple module: loops X, Y

fn one_a() -> Quiver {
    Quiver::new(1, arrows(&[("X", 0, 0), ("Y", 0, 0)])).expect("valid quiver")
}

fn xy(k: usize) -> String {
    rep("X Y", k)
}

fn yx(k: usize) -> String {
    rep("Y X", k)
}

fn d1a1(p: &Params, f: &Field) -> Result<Built> {
    let k = p.uint("k")?;
    need(k >= 1, "k >= 1")?;
    let m = f.neg(1);
    let rels = vec![rel(&[(1, "X X".into())]), rel(&[(1, "Y Y".into())]), rel(&[(1, xy(k)), (m, yx(k))])];
    build(one_a(), rels, f, 2 * k + 1)
}

fn d1a2(p: &Params, f: &Field) -> Result<Built> {
    let k = p.uint("k")?;
    let d = p.scalar("d", f)?;
    need(k >= 2, "k >= 2")?;
    zero_or_one(d, "d")?;
    let m = f.neg(1);
    let rels = vec![
        rel(&[(1, "X X".into()), (m, xy(k))]),
        rel(&[(1, "Y Y".into()), (f.neg(d), xy(k))]),
        rel(&[(1, xy(k)), (m, yx(k))]),
        rel(&[(1, format!("{} X", xy(k)))]),
        rel(&[(1, format!("{} Y", yx(k)))]),
    ];
    build(one_a(), rels, f, 2 * k + 1)
}

fn sd1a1(p: &Params, f: &Field) -> Result<Built> {
    let k = p.uint("k")?;
    need(k >= 2, "k >= 2")?;
    let m = f.neg(1);
    let rels = vec![
        rel(&[(1, xy(k)), (m, yx(k))]),
        rel(&[(1, format!("{} X", xy(k)))]),
        rel(&[(1, "Y Y".into())]),
        rel(&[(1, "X X".into()), (m, format!("{} Y", yx(k - 1)))]),
    ];
    build(one_a(), rels, f, 2 * k + 1)
}

fn sd1a2(p: &Params, f: &Field) -> Result<Built> {
    let k = p.uint("k")?;
    let c = p.scalar("c", f)?;
    let d = p.scalar("d", f)?;
    need(k >= 2, "k >= 2")?;
    need((c, d) != (0, 0), "(c, d) != (0, 0)")?;
    let m = f.neg(1);
    let rels = vec![
        rel(&[(1, xy(k)), (m, yx(k))]),
        rel(&[(1, format!("{} X", xy(k)))]),
        rel(&[(1, "Y Y".into()), (f.neg(d), xy(k))]),
        rel(&[(1, "X X".into()), (m, format!("{} Y", yx(k - 1))), (c, xy(k))]),
    ];
    build(one_a(), rels, f, 2 * k + 1)
}

fn q1a1(p: &Params, f: &Field) -> Result<Built> {
    let k = p.uint("k")?;
    need(k >= 2, "k >= 2")?;
    let m = f.neg(1);
    let rels = vec![
        rel(&[(1, xy(k)), (m, yx(k))]),
        rel(&[(1, format!("{} X", xy(k)))]),
        rel(&[(1, "Y Y".into()), (m, format!("{} X", xy(k - 1)))]),
        rel(&[(1, "X X".into()), (m, format!("{} Y", yx(k - 1)))]),
    ];
    build(one_a(), rels, f, 2 * k + 1)
}

fn q1a2(p: &Params, f: &Field) -> Result<Built> {
    let k = p.uint("k")?;
    let c = p.scalar("c", f)?;
    let d = p.scalar("d", f)?;
    need(k >= 2, "k >= 2")?;
    need((c, d) != (0, 0), "(c, d) != (0, 0)")?;
    let m = f.neg(1);
    let rels = vec![
        rel(&[(1, "X X".into()), (m, format!("{} Y", yx(k - 1))), (f.neg(c), xy(k))]),
        rel(&[(1, "Y Y".into()), (m, format!("{} X", xy(k - 1))), (f.neg(d), xy(k))]),
        rel(&[(1, xy(k)), (m, yx(k))]),
        rel(&[(1, format!("{} X", xy(k)))]),
        rel(&[(1, format!("{} Y", yx(k)))]),
    ];
    build(one_a(), rels, f, 2 * k + 1)
}

// ---------------------------------------------------------------------------
// two simple modules: alpha at 0, eta at 1, beta: 0 -> 1, gamma: 1 -> 0

fn two_b() -> Quiver {
    Quiver::new(2, arrows(&[("alpha", 0, 0), ("beta", 0, 1), ("gamma", 1, 0), ("eta", 1, 1)])).expect("valid quiver")
}

fn abg(k: usize) -> String {
    rep("alpha beta gamma", k)
}

fn bga(k: usize) -> String {
    rep("beta gamma alpha", k)
}

fn gab(k: usize) -> String {
    rep("gamma alpha beta", k)
}

fn d2b(p: &Params, f: &Field) -> Result<Built> {
    let k = p.uint("k")?;
    let s = p.uint("s")?;
    let c = p.scalar("c", f)?;
    need(k >= 1 && s >= 2, "k >= 1, s >= 2")?;
    zero_or_one(c, "c")?;
    let m = f.neg(1);
    let rels = vec![
        rel(&[(1, "beta eta".into())]),
        rel(&[(1, "eta gamma".into())]),
        rel(&[(1, "gamma beta".into())]),
        rel(&[(1, "alpha alpha".into()), (f.neg(c), abg(k))]),
        rel(&[(1, abg(k)), (m, bga(k))]),
        rel(&[(1, rep("eta", s)), (m, gab(k))]),
    ];
    build(two_b(), rels, f, 3 * k.max(s) + 2)
}

fn sd2b1(p: &Params, f: &Field) -> Result<Built> {
    let k = p.uint("k")?;
    let t = p.uint("t")?;
    let c = p.scalar("c", f)?;
    need(k >= 1 && t >= 2, "k >= 1, t >= 2")?;
    zero_or_one(c, "c")?;
    let m = f.neg(1);
    let rels = vec![
        rel(&[(1, "gamma beta".into())]),
        rel(&[(1, "eta gamma".into())]),
        rel(&[(1, "beta eta".into())]),
        rel(&[(1, "alpha alpha".into()), (m, format!("{} beta gamma", bga(k - 1))), (f.neg(c), abg(k))]),
        rel(&[(1, rep("eta", t)), (m, gab(k))]),
        rel(&[(1, abg(k)), (m, bga(k))]),
    ];
    build(two_b(), rels, f, 3 * k.max(t) + 2)
}

fn sd2b2(p: &Params, f: &Field) -> Result<Built> {
    let k = p.uint("k")?;
    let t = p.uint("t")?;
    let c = p.scalar("c", f)?;
    need(k >= 1 && t >= 3 && k + t >= 4, "k >= 1, t >= 3, k + t >= 4")?;
    zero_or_one(c, "c")?;
    let m = f.neg(1);
    let rels = vec![
        rel(&[(1, "beta eta".into()), (m, format!("{} alpha beta", abg(k - 1)))]),
        rel(&[(1, "eta gamma".into()), (m, format!("{} gamma alpha", gab(k - 1)))]),
        rel(&[(1, "gamma beta".into()), (m, rep("eta", t - 1))]),
        rel(&[(1, "alpha alpha".into()), (f.neg(c), abg(k))]),
        rel(&[(1, "beta eta eta".into())]),
        rel(&[(1, "eta eta gamma".into())]),
    ];
    build(two_b(), rels, f, 3 * k.max(t) + 2)
}

fn q2b1(p: &Params, f: &Field) -> Result<Built> {
    let k = p.uint("k")?;
    let s = p.uint("s")?;
    let a = p.scalar("a", f)?;
    let c = p.scalar("c", f)?;
    need(k >= 1 && s >= 3, "k >= 1, s >= 3")?;
    need(a != 0, "a != 0")?;
    let m = f.neg(1);
    let rels = vec![
        rel(&[(1, "gamma beta".into()), (m, rep("eta", s - 1))]),
        rel(&[(1, "beta eta".into()), (m, format!("{} alpha beta", abg(k - 1)))]),
        rel(&[(1, "eta gamma".into()), (m, format!("{} gamma alpha", gab(k - 1)))]),
        rel(&[(1, "alpha alpha".into()), (f.neg(a), format!("{} beta gamma", bga(k - 1))), (f.neg(c), bga(k))]),
        rel(&[(1, "alpha alpha beta".into())]),
        rel(&[(1, "gamma alpha alpha".into())]),
    ];
    build(two_b(), rels, f, 3 * k.max(s) + 2)
}

// ---------------------------------------------------------------------------
// three simple modules

/// Type 3K: beta: 0 -> 2, gamma: 2 -> 0, kappa: 0 -> 1, lambda: 1 -> 0,
/// eta: 1 -> 2, delta: 2 -> 1.
fn three_k() -> Quiver {
    Quiver::new(
        3,
        arrows(&[("beta", 0, 2), ("gamma", 2, 0), ("kappa", 0, 1), ("lambda", 1, 0), ("eta", 1, 2), ("delta", 2, 1)]),
    )
    .expect("valid quiver")
}

fn abc(p: &Params) -> Result<(usize, usize, usize)> {
    Ok((p.uint("a")?, p.uint("b")?, p.uint("c")?))
}

fn d3k(p: &Params, f: &Field) -> Result<Built> {
    let (a, b, c) = abc(p)?;
    need(a >= b && b >= c && c >= 1, "a >= b >= c >= 1")?;
    let m = f.neg(1);
    let mut rels: Vec<Relation> = ["beta delta", "delta lambda", "lambda beta", "gamma kappa", "kappa eta", "eta gamma"]
        .iter()
        .map(|w| rel(&[(1, (*w).into())]))
        .collect();
    rels.push(rel(&[(1, rep("beta gamma", a)), (m, rep("kappa lambda", b))]));
    rels.push(rel(&[(1, rep("lambda kappa", b)), (m, rep("eta delta", c))]));
    rels.push(rel(&[(1, rep("delta eta", c)), (m, rep("gamma beta", a))]));
    build(three_k(), rels, f, 2 * a + 2)
}

fn sd3k(p: &Params, f: &Field) -> Result<Built> {
    let (a, b, c) = abc(p)?;
    need(a >= b && b >= c && c >= 1 && a >= 2, "a >= b >= c >= 1, a >= 2")?;
    let m = f.neg(1);
    let rels = vec![
        rel(&[(1, "kappa eta".into())]),
        rel(&[(1, "eta gamma".into())]),
        rel(&[(1, "gamma kappa".into())]),
        rel(&[(1, "delta lambda".into()), (m, format!("{} gamma", rep("gamma beta", a - 1)))]),
        rel(&[(1, "beta delta".into()), (m, format!("{} kappa", rep("kappa lambda", b - 1)))]),
        rel(&[(1, "lambda beta".into()), (m, format!("{} eta", rep("eta delta", c - 1)))]),
    ];
    build(three_k(), rels, f, 2 * a + 2)
}

fn q3k(p: &Params, f: &Field) -> Result<Built> {
    let (a, b, c) = abc(p)?;
    need(a >= b && b >= c && c >= 1 && b >= 2 && (a, b, c) != (2, 2, 1), "a >= b >= c >= 1, b >= 2, (a,b,c) != (2,2,1)")?;
    let m = f.neg(1);
    let rels = vec![
        rel(&[(1, "beta delta".into()), (m, format!("{} kappa", rep("kappa lambda", a - 1)))]),
        rel(&[(1, "eta gamma".into()), (m, format!("{} lambda", rep("lambda kappa", a - 1)))]),
        rel(&[(1, "delta lambda".into()), (m, format!("{} gamma", rep("gamma beta", b - 1)))]),
        rel(&[(1, "kappa eta".into()), (m, format!("{} beta", rep("beta gamma", b - 1)))]),
        rel(&[(1, "lambda beta".into()), (m, format!("{} eta", rep("eta delta", c - 1)))]),
        rel(&[(1, "gamma kappa".into()), (m, format!("{} delta", rep("delta eta", c - 1)))]),
        rel(&[(1, "gamma beta delta".into())]),
        rel(&[(1, "delta eta gamma".into())]),
        rel(&[(1, "lambda kappa eta".into())]),
    ];
    build(three_k(), rels, f, 2 * a + 2)
}

/// Type 3R: beta: 0 -> 2, delta: 2 -> 1, lambda: 1 -> 0 and loops alpha
/// at 0, xi at 1, rho at 2.
fn d3r(p: &Params, f: &Field) -> Result<Built> {
    let (k, s, t, u) = (p.uint("k")?, p.uint("s")?, p.uint("t")?, p.uint("u")?);
    need(s >= t && t >= u && u >= k && k >= 1 && t >= 2, "s >= t >= u >= k >= 1, t >= 2")?;
    let q = Quiver::new(
        3,
        arrows(&[("alpha", 0, 0), ("beta", 0, 2), ("rho", 2, 2), ("delta", 2, 1), ("xi", 1, 1), ("lambda", 1, 0)]),
    )?;
    let m = f.neg(1);
    let mut rels: Vec<Relation> = ["alpha beta", "beta rho", "rho delta", "delta xi", "xi lambda", "lambda alpha"]
        .iter()
        .map(|w| rel(&[(1, (*w).into())]))
        .collect();
    rels.push(rel(&[(1, rep("alpha", s)), (m, rep("beta delta lambda", k))]));
    rels.push(rel(&[(1, rep("rho", t)), (m, rep("delta lambda beta", k))]));
    rels.push(rel(&[(1, rep("xi", u)), (m, rep("lambda beta delta", k))]));
    build(q, rels, f, s.max(3 * k) + 2)
}

/// Type 3A: beta: 0 -> 1, gamma: 1 -> 0, delta: 1 -> 2, eta: 2 -> 1.
fn q3a(p: &Params, f: &Field) -> Result<Built> {
    let d = p.scalar("d", f)?;
    need(d != 0 && d != 1, "d not in {0, 1}")?;
    let q = Quiver::new(3, arrows(&[("beta", 0, 1), ("gamma", 1, 0), ("delta", 1, 2), ("eta", 2, 1)]))?;
    let m = f.neg(1);
    let nd = f.neg(d);
    let rels = vec![
        rel(&[(1, "beta delta eta".into()), (m, "beta gamma beta".into())]),
        rel(&[(1, "delta eta gamma".into()), (m, "gamma beta gamma".into())]),
        rel(&[(1, "eta gamma beta".into()), (nd, "eta delta eta".into())]),
        rel(&[(1, "gamma beta delta".into()), (nd, "delta eta delta".into())]),
        rel(&[(1, "beta delta eta delta".into())]),
        rel(&[(1, "eta gamma beta gamma".into())]),
    ];
    build(q, rels, f, 6)
}

// ---------------------------------------------------------------------------
// deformed preprojective algebras of type L

/// Loop `eps` at 0, `a_i: i -> i+1`, `abar_i: i+1 -> i`. Paths are ordered
/// with `eps` lighter than the other arrows so that normal forms prefer
/// words of the shape `abar ... eps^m ... a`.
fn ln_quiver(n: usize) -> Result<Quiver> {
    let w = 2 * n as u32;
    let mut list = vec![("eps".to_string(), 0, 0, 1)];
    for i in 0..n - 1 {
        list.push((format!("abar{i}"), i + 1, i, w));
    }
    for i in 0..n - 1 {
        list.push((format!("a{i}"), i, i + 1, w));
    }
    Quiver::weighted(n, list)
}

fn ln(p: &Params, f: &Field) -> Result<Built> {
    let n = p.uint("n")?;
    need(n >= 2, "n >= 2")?;
    let j = match p.get("j") {
        Some("none") | None => None,
        Some(_) => {
            let j = p.uint("j")?;
            need(j < n, "0 <= j < n")?;
            need(f.characteristic() == 2, "deformed L_n requires characteristic 2")?;
            Some(j)
        }
    };
    let mut rels = Vec::new();
    for i in 1..n - 1 {
        rels.push(rel(&[(1, format!("a{i} abar{i}")), (1, format!("abar{} a{}", i - 1, i - 1))]));
    }
    rels.push(rel(&[(1, format!("abar{} a{}", n - 2, n - 2))]));
    rels.push(rel(&[(1, rep("eps", 2 * n))]));
    let mut last = vec![(1, "eps eps".to_string()), (1, "a0 abar0".to_string())];
    if let Some(j) = j {
        if 3 + 2 * j < 2 * n {
            last.push((1, rep("eps", 3 + 2 * j)));
        }
    }
    rels.push(rel(&last));
    build(ln_quiver(n)?, rels, f, 2 * n + 1)
}

/// The central element `ε² + ε³p(ε) + Σ (-1)^{i+1} ā_i a_i` of `L_n^p`.
pub fn ln_central_element(inst: &Instance) -> Result<Vec<u32>> {
    let q = inst.quiver.as_ref().ok_or(Error::NoPresentation)?;
    let a = &q.algebra;
    let f = a.field();
    let n = q.quiver.vertices();
    let mut z = q.word("eps*eps")?;
    if let Some(j) = inst.params.get("j").filter(|j| *j != "none") {
        let j: usize = j.parse().map_err(|_| Error::ParamOutOfRange("j".into()))?;
        let e = a.pow(&q.word("eps")?, 3 + 2 * j as u64);
        f.axpy(&mut z, 1, &e);
    }
    for i in 0..n - 1 {
        let sign = if i % 2 == 0 { f.neg(1) } else { 1 };
        f.axpy(&mut z, sign, &q.word(&format!("abar{i}*a{i}"))?);
    }
    Ok(z)
}

// ---------------------------------------------------------------------------
// other local and small examples

fn aq(p: &Params, f: &Field) -> Result<Built> {
    let q = p.scalar("q", f)?;
    need(q != 0, "q != 0")?;
    let rels = vec![
        rel(&[(1, "X X".into())]),
        rel(&[(1, "Y Y".into())]),
        rel(&[(1, "X Y".into()), (f.neg(q), "Y X".into())]),
    ];
    build(one_a(), rels, f, 3)
}

fn a_lambda(p: &Params, f: &Field) -> Result<Built> {
    let l = p.scalar("lambda", f)?;
    need(l != 0, "lambda != 0")?;
    let q = Quiver::new(1, arrows(&[("alpha", 0, 0), ("beta", 0, 0)]))?;
    let rels = vec![
        rel(&[(1, "alpha alpha".into())]),
        rel(&[(1, "beta beta".into())]),
        rel(&[(1, "alpha beta".into()), (f.neg(l), "beta alpha".into())]),
    ];
    build(q, rels, f, 3)
}

fn preprojective(p: &Params, f: &Field) -> Result<Built> {
    let n = p.uint("n")?;
    need(n >= 2, "n >= 2")?;
    let mut list = Vec::new();
    for i in 0..n - 1 {
        list.push((format!("a{i}"), i, i + 1));
        list.push((format!("abar{i}"), i + 1, i));
    }
    let q = Quiver::new(n, list)?;
    let m = f.neg(1);
    let mut rels = vec![rel(&[(1, "a0 abar0".into())])];
    for i in 1..n - 1 {
        rels.push(rel(&[(1, format!("a{i} abar{i}")), (m, format!("abar{} a{}", i - 1, i - 1))]));
    }
    rels.push(rel(&[(1, format!("abar{} a{}", n - 2, n - 2))]));
    build(q, rels, f, n)
}

fn nil(p: &Params, f: &Field) -> Result<Built> {
    let n = p.uint("n")?;
    need(n >= 2, "n >= 2")?;
    let q = Quiver::new(1, arrows(&[("x", 0, 0)]))?;
    build(q, vec![rel(&[(1, rep("x", n))])], f, n)
}

fn path(p: &Params, f: &Field) -> Result<Built> {
    let n = p.uint("n")?;
    need(n >= 1, "n >= 1")?;
    let list = (0..n.saturating_sub(1)).map(|i| (format!("a{i}"), i, i + 1)).collect();
    build(Quiver::new(n, list)?, Vec::new(), f, n.saturating_sub(1).max(1))
}

fn sym(p: &Params, f: &Field) -> Result<Built> {
    let k = p.uint("k")?;
    need((1..=5).contains(&k), "1 <= k <= 5")?;
    let g = CayleyTable::symmetric(k);
    let a = g.group_algebra(f);
    Ok(Built::Group(g, a))
}

fn cyc(p: &Params, f: &Field) -> Result<Built> {
    let n = p.uint("n")?;
    need((1..=128).contains(&n), "1 <= n <= 128")?;
    let g = CayleyTable::cyclic(n);
    let a = g.group_algebra(f);
    Ok(Built::Group(g, a))
}

const NON_SYMMETRIC: Flags = Flags { symmetric: false, selfinjective: true, split_basic: true, char_two: false, untested: false };
const PLAIN: Flags = Flags { symmetric: false, selfinjective: false, split_basic: true, char_two: false, untested: false };
const GROUP: Flags = Flags { symmetric: true, selfinjective: true, split_basic: false, char_two: false, untested: false };

static REGISTRY: &[FamilySpec] = &[
    FamilySpec {
        name: "D1A1",
        params: &[int("k")],
        conditions: "k >= 1",
        relations: "X^2, Y^2, (XY)^k - (YX)^k",
        flags: TAME,
        build: d1a1,
    },
    FamilySpec {
        name: "D1A2",
        params: &[int("k"), scalar("d")],
        conditions: "k >= 2, d in {0, 1}, char 2",
        relations: "X^2 - (XY)^k, Y^2 - d(XY)^k, (XY)^k - (YX)^k, (XY)^k X, (YX)^k Y",
        flags: TAME2,
        build: d1a2,
    },
    FamilySpec {
        name: "SD1A1",
        params: &[int("k")],
        conditions: "k >= 2",
        relations: "(XY)^k - (YX)^k, (XY)^k X, Y^2, X^2 - (YX)^{k-1} Y",
        flags: TAME,
        build: sd1a1,
    },
    FamilySpec {
        name: "SD1A2",
        params: &[int("k"), scalar("c"), scalar("d")],
        conditions: "k >= 2, (c, d) != (0, 0), char 2",
        relations: "(XY)^k - (YX)^k, (XY)^k X, Y^2 - d(XY)^k, X^2 - (YX)^{k-1} Y + c(XY)^k",
        flags: TAME2,
        build: sd1a2,
    },
    FamilySpec {
        name: "Q1A1",
        params: &[int("k")],
        conditions: "k >= 2",
        relations: "(XY)^k - (YX)^k, (XY)^k X, Y^2 - (XY)^{k-1} X, X^2 - (YX)^{k-1} Y",
        flags: TAME,
        build: q1a1,
    },
    FamilySpec {
        name: "Q1A2",
        params: &[int("k"), scalar("c"), scalar("d")],
        conditions: "k >= 2, (c, d) != (0, 0), char 2",
        relations: "X^2 - (YX)^{k-1} Y - c(XY)^k, Y^2 - (XY)^{k-1} X - d(XY)^k, (XY)^k - (YX)^k, (XY)^k X, (YX)^k Y",
        flags: TAME2,
        build: q1a2,
    },
    FamilySpec {
        name: "D2B",
        params: &[int("k"), int("s"), scalar("c")],
        conditions: "k >= 1, s >= 2, c in {0, 1}",
        relations: "beta eta, eta gamma, gamma beta, alpha^2 - c(alpha beta gamma)^k, \
                    (alpha beta gamma)^k - (beta gamma alpha)^k, eta^s - (gamma alpha beta)^k",
        flags: TAME,
        build: d2b,
    },
    FamilySpec {
        name: "SD2B1",
        params: &[int("k"), int("t"), scalar("c")],
        conditions: "k >= 1, t >= 2, c in {0, 1}",
        relations: "gamma beta, eta gamma, beta eta, \
                    alpha^2 - (beta gamma alpha)^{k-1} beta gamma - c(alpha beta gamma)^k, \
                    eta^t - (gamma alpha beta)^k, (alpha beta gamma)^k - (beta gamma alpha)^k",
        flags: TAME,
        build: sd2b1,
    },
    FamilySpec {
        name: "SD2B2",
        params: &[int("k"), int("t"), scalar("c")],
        conditions: "k >= 1, t >= 3, k + t >= 4, c in {0, 1}",
        relations: "beta eta - (alpha beta gamma)^{k-1} alpha beta, eta gamma - (gamma alpha beta)^{k-1} gamma alpha, \
                    gamma beta - eta^{t-1}, alpha^2 - c(alpha beta gamma)^k, beta eta^2, eta^2 gamma",
        flags: TAME,
        build: sd2b2,
    },
    FamilySpec {
        name: "Q2B1",
        params: &[int("k"), int("s"), scalar("a"), scalar("c")],
        conditions: "k >= 1, s >= 3, a != 0",
        relations: "gamma beta - eta^{s-1}, beta eta - (alpha beta gamma)^{k-1} alpha beta, \
                    eta gamma - (gamma alpha beta)^{k-1} gamma alpha, \
                    alpha^2 - a(beta gamma alpha)^{k-1} beta gamma - c(beta gamma alpha)^k, alpha^2 beta, gamma alpha^2",
        flags: TAME,
        build: q2b1,
    },
    FamilySpec {
        name: "D3K",
        params: &[int("a"), int("b"), int("c")],
        conditions: "a >= b >= c >= 1",
        relations: "beta delta, delta lambda, lambda beta, gamma kappa, kappa eta, eta gamma, \
                    (beta gamma)^a - (kappa lambda)^b, (lambda kappa)^b - (eta delta)^c, (delta eta)^c - (gamma beta)^a",
        flags: UNTESTED,
        build: d3k,
    },
    FamilySpec {
        name: "SD3K",
        params: &[int("a"), int("b"), int("c")],
        conditions: "a >= b >= c >= 1, a >= 2",
        relations: "kappa eta, eta gamma, gamma kappa, delta lambda - (gamma beta)^{a-1} gamma, \
                    beta delta - (kappa lambda)^{b-1} kappa, lambda beta - (eta delta)^{c-1} eta",
        flags: UNTESTED,
        build: sd3k,
    },
    FamilySpec {
        name: "Q3K",
        params: &[int("a"), int("b"), int("c")],
        conditions: "a >= b >= c >= 1, b >= 2, (a, b, c) != (2, 2, 1)",
        relations: "beta delta - (kappa lambda)^{a-1} kappa, eta gamma - (lambda kappa)^{a-1} lambda, \
                    delta lambda - (gamma beta)^{b-1} gamma, kappa eta - (beta gamma)^{b-1} beta, \
                    lambda beta - (eta delta)^{c-1} eta, gamma kappa - (delta eta)^{c-1} delta, \
                    gamma beta delta, delta eta gamma, lambda kappa eta",
        flags: UNTESTED,
        build: q3k,
    },
    FamilySpec {
        name: "D3R",
        params: &[int("k"), int("s"), int("t"), int("u")],
        conditions: "s >= t >= u >= k >= 1, t >= 2",
        relations: "alpha beta, beta rho, rho delta, delta xi, xi lambda, lambda alpha, \
                    alpha^s - (beta delta lambda)^k, rho^t - (delta lambda beta)^k, xi^u - (lambda beta delta)^k",
        flags: UNTESTED,
        build: d3r,
    },
    FamilySpec {
        name: "Q3A",
        params: &[scalar("d")],
        conditions: "d not in {0, 1}",
        relations: "beta delta eta - beta gamma beta, delta eta gamma - gamma beta gamma, \
                    eta gamma beta - d eta delta eta, gamma beta delta - d delta eta delta, \
                    beta delta eta delta, eta gamma beta gamma",
        flags: UNTESTED,
        build: q3a,
    },
    FamilySpec {
        name: "Ln",
        params: &[int("n"), ParamSpec { name: "j", kind: ParamKind::Int, default: Some("none") }],
        conditions: "n >= 2; j = none (undeformed) or 0 <= j < n in char 2",
        relations: "a_i abar_i + abar_{i-1} a_{i-1} (1 <= i <= n-2), abar_{n-2} a_{n-2}, eps^{2n}, \
                    eps^2 + a_0 abar_0 + eps^{3+2j}",
        flags: Flags { symmetric: true, selfinjective: true, split_basic: true, char_two: false, untested: false },
        build: ln,
    },
    FamilySpec {
        name: "Aq",
        params: &[scalar("q")],
        conditions: "q != 0",
        relations: "X^2, Y^2, XY - qYX",
        flags: NON_SYMMETRIC,
        build: aq,
    },
    FamilySpec {
        name: "Alambda",
        params: &[scalar_or("lambda", "1")],
        conditions: "lambda != 0",
        relations: "alpha^2, beta^2, alpha beta - lambda beta alpha",
        flags: Flags { untested: true, ..NON_SYMMETRIC },
        build: a_lambda,
    },
    FamilySpec {
        name: "Pre",
        params: &[int("n")],
        conditions: "n >= 2",
        relations: "a_0 abar_0, a_i abar_i - abar_{i-1} a_{i-1} (1 <= i <= n-2), abar_{n-2} a_{n-2}",
        flags: NON_SYMMETRIC,
        build: preprojective,
    },
    FamilySpec {
        name: "Nil",
        params: &[int("n")],
        conditions: "n >= 2",
        relations: "x^n",
        flags: TAME,
        build: nil,
    },
    FamilySpec {
        name: "Path",
        params: &[int("n")],
        conditions: "n >= 1",
        relations: "none (linear quiver 0 -> 1 -> ... -> n-1)",
        flags: PLAIN,
        build: path,
    },
    FamilySpec {
        name: "Sym",
        params: &[int("k")],
        conditions: "1 <= k <= 5",
        relations: "group algebra of the symmetric group S_k",
        flags: GROUP,
        build: sym,
    },
    FamilySpec {
        name: "Cyc",
        params: &[int("n")],
        conditions: "1 <= n <= 128",
        relations: "group algebra of the cyclic group C_n",
        flags: GROUP,
        build: cyc,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, e: u32) -> Field {
        Field::default_for(p, e).unwrap()
    }

    #[test]
    fn name_grammar() {
        assert_eq!(parse_name("D1A1").unwrap(), ("D1A1".to_string(), vec![]));
        let (n, p) = parse_name("SD2B1[k=2, t=3,c=1]").unwrap();
        assert_eq!(n, "SD2B1");
        assert_eq!(p, vec![("k".into(), "2".into()), ("t".into(), "3".into()), ("c".into(), "1".into())]);
        assert!(parse_name("D1A1[k=2").is_err());
        assert!(parse_name("D1A1[k]").is_err());
    }

    #[test]
    fn registry_names_are_unique() {
        for (i, a) in REGISTRY.iter().enumerate() {
            assert!(REGISTRY[i + 1..].iter().all(|b| b.name != a.name));
        }
    }

    #[test]
    fn d1a1_dimension() {
        for k in 1..=3 {
            let inst = instantiate(&format!("D1A1[k={k}]"), &gf(2, 1)).unwrap();
            assert_eq!(inst.algebra.dim(), 4 * k);
            assert!(inst.symmetric_form.is_some());
        }
    }

    #[test]
    fn side_conditions_are_named() {
        let f = gf(2, 1);
        match instantiate("SD2B2[k=1,t=2,c=0]", &f) {
            Err(Error::ParamOutOfRange(m)) => assert!(m.contains("t >= 3")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(instantiate("D2B[k=2,s=3,c=w]", &gf(2, 2)), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(instantiate("D1A2[k=2,d=0]", &gf(3, 1)), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(instantiate("Ln[n=3,j=0]", &gf(3, 1)), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(instantiate("Ln[n=3,j=3]", &f), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(instantiate("D1A1[k=2,z=1]", &f), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(instantiate("D1A1", &f), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(instantiate("Nope[k=1]", &f), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn canonical_names() {
        let f = gf(2, 1);
        assert_eq!(instantiate("Ln[ n=3 ]", &f).unwrap().name, "Ln[n=3,j=none]");
        assert_eq!(instantiate("Alambda", &f).unwrap().name, "Alambda[lambda=1]");
    }

    #[test]
    fn ln_vertex_count_and_central_element() {
        let f = gf(2, 1);
        for n in 2..=4 {
            for j in 0..n {
                let inst = instantiate(&format!("Ln[n={n},j={j}]"), &f).unwrap();
                assert_eq!(inst.vertex_count(), Some(n));
                let z = ln_central_element(&inst).unwrap();
                assert!(inst.algebra.center().contains(&z));
            }
        }
    }

    #[test]
    fn group_instances() {
        let inst = instantiate("Sym[k=3]", &gf(3, 1)).unwrap();
        assert_eq!(inst.algebra.dim(), 6);
        assert!(inst.symmetric_form.as_ref().unwrap().is_associative(&inst.algebra));
    }
}

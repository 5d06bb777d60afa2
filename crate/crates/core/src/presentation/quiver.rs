//! Quotients of path algebras by admissible ideals.
//!
//! Paths compose left to right: `a*b` is `a` followed by `b`. The ideal
//! generated by the relations is closed under left and right multiplication
//! by arrows inside the space of paths of length at most `L + 1`, discarding
//! longer components. The bound is accepted only if every path of length
//! `L + 1` then lies in the truncated ideal.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::algebra::{Algebra, Metadata, Origin};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Echelon, Matrix, Subspace};

/// Largest length bound tried by [`quotient_algebra_auto`].
pub const MAX_LENGTH_BOUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
    /// Weight in the path order; defaults to 1.
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<(String, usize, usize)>) -> Result<Quiver> {
        Quiver::weighted(vertices, arrows.into_iter().map(|(l, s, t)| (l, s, t, 1)).collect())
    }

    pub fn weighted(vertices: usize, arrows: Vec<(String, usize, usize, u32)>) -> Result<Quiver> {
        if vertices == 0 {
            return Err(Error::InvalidPresentation("a quiver needs at least one vertex".into()));
        }
        let mut out: Vec<Arrow> = Vec::with_capacity(arrows.len());
        for (label, source, target, weight) in arrows {
            if source >= vertices || target >= vertices {
                return Err(Error::InvalidPresentation(format!("arrow {label} has an endpoint out of range")));
            }
            if label.is_empty() || label.contains('*') {
                return Err(Error::InvalidPresentation(format!("bad arrow label `{label}`")));
            }
            if out.iter().any(|a| a.label == label) || is_vertex_label(&label) {
                return Err(Error::InvalidPresentation(format!("duplicate or reserved arrow label {label}")));
            }
            if weight == 0 {
                return Err(Error::InvalidPresentation(format!("arrow {label} has weight 0")));
            }
            out.push(Arrow { label, source, target, weight });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Arrow indices of a path written as labels; checks composability.
    pub fn resolve_path<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(labels.len());
        for l in labels {
            let l = l.as_ref();
            let i = self
                .arrow_index(l)
                .ok_or_else(|| Error::InvalidPresentation(format!("unknown arrow {l}")))?;
            if let Some(&prev) = out.last() {
                let prev: usize = prev;
                if self.arrows[prev].target != self.arrows[i].source {
                    return Err(Error::InvalidPresentation(format!(
                        "path {} is not composable",
                        labels.iter().map(|s| s.as_ref()).collect::<Vec<_>>().join("*")
                    )));
                }
            }
            out.push(i);
        }
        Ok(out)
    }
}

fn is_vertex_label(l: &str) -> bool {
    l.strip_prefix('e').is_some_and(|r| !r.is_empty() && r.bytes().all(|b| b.is_ascii_digit()))
}

/// A linear combination of parallel paths, each of length at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Relation {
    pub terms: Vec<(u32, Vec<String>)>,
}

impl Relation {
    pub fn new(terms: Vec<(u32, Vec<String>)>) -> Relation {
        Relation { terms }
    }

    /// Builds a relation from `(coefficient, "a*b*c")` pairs.
    pub fn from_words(terms: &[(u32, &str)]) -> Relation {
        Relation {
            terms: terms
                .iter()
                .map(|(c, w)| (*c, w.split('*').map(|s| s.trim().to_string()).collect()))
                .collect(),
        }
    }
}

/// Result of [`quotient_algebra`].
#[derive(Debug, Clone)]
pub struct QuiverAlgebra {
    pub algebra: Algebra,
    pub quiver: Quiver,
    /// The verified length bound.
    pub length_bound: usize,
    /// Basis index of each vertex idempotent.
    pub vertex_index: Vec<usize>,
    /// Basis index of each arrow.
    pub arrow_index: Vec<usize>,
}

impl QuiverAlgebra {
    /// Element given by a path in arrow labels; the empty path at vertex `v`
    /// is `e<v>`.
    pub fn path<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<u32>> {
        if labels.len() == 1 && is_vertex_label(labels[0].as_ref()) {
            let v: usize = labels[0].as_ref()[1..].parse().map_err(|_| Error::InvalidPresentation("bad vertex".into()))?;
            let i = *self
                .vertex_index
                .get(v)
                .ok_or_else(|| Error::InvalidPresentation(format!("no vertex {v}")))?;
            return Ok(self.algebra.basis_vector(i));
        }
        let arrows = self.quiver.resolve_path(labels)?;
        let mut acc: Option<Vec<u32>> = None;
        for a in arrows {
            let x = self.algebra.basis_vector(self.arrow_index[a]);
            acc = Some(match acc {
                None => x,
                Some(y) => self.algebra.multiply(&y, &x),
            });
        }
        acc.ok_or_else(|| Error::InvalidPresentation("empty path".into()))
    }

    /// Path written as `a*b*c`.
    pub fn word(&self, w: &str) -> Result<Vec<u32>> {
        let parts: Vec<&str> = w.split('*').map(str::trim).collect();
        self.path(&parts)
    }

    /// Evaluates a relation in the quotient.
    pub fn evaluate(&self, rel: &Relation) -> Result<Vec<u32>> {
        let f = self.algebra.field();
        let mut acc = vec![0; self.algebra.dim()];
        for (c, p) in &rel.terms {
            let v = self.path(p)?;
            f.axpy(&mut acc, *c, &v);
        }
        Ok(acc)
    }
}

/// Sparse vector over path ids, sorted by decreasing id.
type Sparse = Vec<(u32, u32)>;

const NONE: u32 = u32::MAX;

struct Paths {
    /// Arrow sequence of each path id; trivial paths have empty sequences.
    arrows: Vec<Vec<u16>>,
    source: Vec<u32>,
    target: Vec<u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    n_arrows: usize,
}

impl Paths {
    fn enumerate(q: &Quiver, max_len: usize) -> Paths {
        let na = q.arrows.len();
        // (weight, length, vertex-or-seq)
        let mut all: Vec<(u64, Vec<u16>, u32, u32)> = Vec::new();
        for v in 0..q.vertices {
            all.push((0, Vec::new(), v as u32, v as u32));
        }
        let mut frontier: Vec<(u64, Vec<u16>, u32, u32)> = q
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.weight as u64, vec![i as u16], a.source as u32, a.target as u32))
            .collect();
        for _ in 1..=max_len {
            let mut next = Vec::new();
            for (w, seq, s, t) in &frontier {
                for (i, a) in q.arrows.iter().enumerate() {
                    if a.source as u32 == *t {
                        let mut s2 = seq.clone();
                        s2.push(i as u16);
                        next.push((w + a.weight as u64, s2, *s, a.target as u32));
                    }
                }
            }
            all.append(&mut frontier);
            frontier = next;
        }
        all.sort_by(|a, b| {
            (a.0, a.1.len(), &a.1, a.2).cmp(&(b.0, b.1.len(), &b.1, b.2))
        });
        let n = all.len();
        let mut index: HashMap<Vec<u16>, u32> = HashMap::with_capacity(n);
        let mut trivial = vec![0u32; q.vertices];
        let mut arrows = Vec::with_capacity(n);
        let mut source = Vec::with_capacity(n);
        let mut target = Vec::with_capacity(n);
        for (id, (_, seq, s, t)) in all.into_iter().enumerate() {
            if seq.is_empty() {
                trivial[s as usize] = id as u32;
            } else {
                index.insert(seq.clone(), id as u32);
            }
            arrows.push(seq);
            source.push(s);
            target.push(t);
        }
        let mut right = vec![NONE; n * na];
        let mut left = vec![NONE; n * na];
        for id in 0..n {
            for (ai, a) in q.arrows.iter().enumerate() {
                if target[id] == a.source as u32 {
                    let mut s2 = arrows[id].clone();
                    s2.push(ai as u16);
                    if let Some(&j) = index.get(&s2) {
                        right[id * na + ai] = j;
                    }
                }
                if source[id] == a.target as u32 {
                    let mut s2 = Vec::with_capacity(arrows[id].len() + 1);
                    s2.push(ai as u16);
                    s2.extend_from_slice(&arrows[id]);
                    if let Some(&j) = index.get(&s2) {
                        left[id * na + ai] = j;
                    }
                }
            }
        }
        // trivial paths extend to single arrows
        for (ai, a) in q.arrows.iter().enumerate() {
            let j = index[&vec![ai as u16]];
            right[trivial[a.source] as usize * na + ai] = j;
            left[trivial[a.target] as usize * na + ai] = j;
        }
        Paths { arrows, source, target, right, left, n_arrows: na }
    }

    fn len(&self) -> usize {
        self.arrows.len()
    }

    fn id_of(&self, seq: &[usize], start: u32) -> Option<u32> {
        let mut id = start;
        for &a in seq {
            id = self.right[id as usize * self.n_arrows + a];
            if id == NONE {
                return None;
            }
        }
        Some(id)
    }

    fn label(&self, q: &Quiver, id: u32) -> String {
        let seq = &self.arrows[id as usize];
        if seq.is_empty() {
            format!("e{}", self.source[id as usize])
        } else {
            seq.iter().map(|&a| q.arrows[a as usize].label.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

fn normalize(f: &Field, mut v: Sparse) -> Sparse {
    v.sort_unstable_by_key(|b| core::cmp::Reverse(b.0));
    let mut out: Sparse = Vec::with_capacity(v.len());
    for (id, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == id => last.1 = f.add(last.1, c),
            _ => out.push((id, c)),
        }
    }
    out.retain(|t| t.1 != 0);
    out
}

/// `a - c b` for sparse vectors in decreasing order.
fn sub_scaled(f: &Field, a: &Sparse, c: u32, b: &Sparse) -> Sparse {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 > b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 > a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, f.neg(f.mul(c, b[j].1))));
            j += 1;
        } else {
            let v = f.sub(a[i].1, f.mul(c, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

struct IdealBuilder<'a> {
    field: &'a Field,
    paths: &'a Paths,
    rows: Vec<Sparse>,
    pivot: Vec<u32>,
}

impl<'a> IdealBuilder<'a> {
    fn insert(&mut self, mut v: Sparse) -> bool {
        let f = self.field;
        while let Some(&(lead, c)) = v.first() {
            let r = self.pivot[lead as usize];
            if r == NONE {
                let inv = f.inv(c).expect("nonzero");
                for t in v.iter_mut() {
                    t.1 = f.mul(t.1, inv);
                }
                self.pivot[lead as usize] = self.rows.len() as u32;
                self.rows.push(v);
                return true;
            }
            v = sub_scaled(f, &v, c, &self.rows[r as usize]);
        }
        false
    }

    fn multiply(&self, v: &Sparse, arrow: usize, on_left: bool) -> Sparse {
        let table = if on_left { &self.paths.left } else { &self.paths.right };
        let na = self.paths.n_arrows;
        let out: Sparse = v
            .iter()
            .filter_map(|&(id, c)| {
                let j = table[id as usize * na + arrow];
                (j != NONE).then_some((j, c))
            })
            .collect();
        normalize(self.field, out)
    }

    fn close(&mut self, generators: Vec<Sparse>) {
        let mut queue = Vec::new();
        for g in generators {
            if self.insert(g) {
                queue.push(self.rows.len() - 1);
            }
        }
        while let Some(r) = queue.pop() {
            for a in 0..self.paths.n_arrows {
                for on_left in [false, true] {
                    let prod = self.multiply(&self.rows[r], a, on_left);
                    if !prod.is_empty() && self.insert(prod) {
                        queue.push(self.rows.len() - 1);
                    }
                }
            }
        }
    }
}

/// A relation as `(coefficient, arrow indices)` terms.
type Terms = Vec<(u32, Vec<usize>)>;

fn check_relations(q: &Quiver, field: &Field, rels: &[Relation]) -> Result<Vec<Terms>> {
    let mut out = Vec::with_capacity(rels.len());
    for (ri, r) in rels.iter().enumerate() {
        let mut ends: Option<(usize, usize)> = None;
        let mut terms = Vec::new();
        for (c, p) in &r.terms {
            if !field.contains(*c) {
                return Err(Error::InvalidField(format!("coefficient {c} in relation {ri}")));
            }
            if *c == 0 {
                continue;
            }
            if p.len() < 2 {
                return Err(Error::NonAdmissible(format!(
                    "relation {ri} has a term of length {}: {}",
                    p.len(),
                    p.join("*")
                )));
            }
            let seq = q.resolve_path(p)?;
            let se = (q.arrows[seq[0]].source, q.arrows[*seq.last().unwrap()].target);
            match ends {
                None => ends = Some(se),
                Some(e) if e != se => {
                    return Err(Error::InvalidPresentation(format!("relation {ri} mixes non-parallel paths")));
                }
                _ => {}
            }
            terms.push((*c, seq));
        }
        out.push(terms);
    }
    Ok(out)
}

/// Builds `KQ/I` with path basis, verifying the length bound `l`.
pub fn quotient_algebra(q: &Quiver, rels: &[Relation], field: &Field, l: usize) -> Result<QuiverAlgebra> {
    if l == 0 {
        return Err(Error::InvalidPresentation("length bound must be at least 1".into()));
    }
    let resolved = check_relations(q, field, rels)?;
    let max_len = l + 1;
    let paths = Paths::enumerate(q, max_len);
    let trivial_of = |v: usize| -> u32 { (0..paths.len() as u32).find(|&i| paths.arrows[i as usize].is_empty() && paths.source[i as usize] == v as u32).expect("vertex path") };
    let mut gens = Vec::new();
    for terms in &resolved {
        let mut v: Sparse = Vec::new();
        for (c, seq) in terms {
            let start = trivial_of(q.arrows[seq[0]].source);
            if let Some(id) = paths.id_of(seq, start) {
                v.push((id, *c));
            }
        }
        let v = normalize(field, v);
        if !v.is_empty() {
            gens.push(v);
        }
    }
    let mut ideal = IdealBuilder { field, paths: &paths, rows: Vec::new(), pivot: vec![NONE; paths.len()] };
    ideal.close(gens);

    // Normal forms in increasing id order; standard paths become basis elements.
    let n = paths.len();
    let mut basis_ids: Vec<u32> = Vec::new();
    let mut basis_pos = vec![NONE; n];
    let mut nf: Vec<Sparse> = Vec::with_capacity(n);
    for (id, pos) in basis_pos.iter_mut().enumerate() {
        let r = ideal.pivot[id];
        if r == NONE {
            *pos = basis_ids.len() as u32;
            nf.push(vec![(basis_ids.len() as u32, 1)]);
            basis_ids.push(id as u32);
        } else {
            let mut acc: Sparse = Vec::new();
            for &(u, c) in ideal.rows[r as usize].iter().skip(1) {
                for &(b, x) in &nf[u as usize] {
                    acc.push((b, field.neg(field.mul(c, x))));
                }
            }
            nf.push(normalize(field, acc));
        }
    }
    for (id, f) in nf.iter().enumerate() {
        if paths.arrows[id].len() == max_len && !f.is_empty() {
            return Err(Error::BoundTooSmall { bound: l, path: paths.label(q, id as u32) });
        }
    }
    let d = basis_ids.len();
    let labels: Vec<String> = basis_ids.iter().map(|&id| paths.label(q, id)).collect();
    let na = paths.n_arrows;
    let product = |i: usize, j: usize| -> Vec<u32> {
        let (pi, pj) = (basis_ids[i] as usize, basis_ids[j] as usize);
        let mut out = vec![0; d];
        if paths.target[pi] != paths.source[pj] {
            return out;
        }
        let mut id = pi as u32;
        for &a in &paths.arrows[pj] {
            id = paths.right[id as usize * na + a as usize];
            if id == NONE {
                return out;
            }
        }
        for &(b, c) in &nf[id as usize] {
            out[b as usize] = c;
        }
        out
    };
    let vertex_index: Vec<usize> = (0..q.vertices).map(|v| basis_pos[trivial_of(v) as usize] as usize).collect();
    let arrow_index: Vec<usize> = (0..q.arrows.len())
        .map(|a| {
            let id = paths.id_of(&[a], trivial_of(q.arrows[a].source)).expect("arrow path");
            basis_pos[id as usize] as usize
        })
        .collect();
    if arrow_index.contains(&(NONE as usize)) {
        return Err(Error::NonAdmissible("an arrow lies in the ideal".into()));
    }
    let mut unit = vec![0; d];
    for &i in &vertex_index {
        unit[i] = 1;
    }
    let mut generators = vertex_index.clone();
    generators.extend_from_slice(&arrow_index);
    let meta = Metadata {
        idempotents: Some(vertex_index.clone()),
        arrow_ideal: true,
        generators: Some(generators),
        socle_paths: Vec::new(),
        radical: None,
        origin: Origin::Quiver {
            vertices: q.vertices,
            arrows: q.arrows.iter().map(|a| (a.label.clone(), a.source, a.target)).collect(),
        },
        split_basic: true,
    };
    let algebra = Algebra::from_products(field, labels, product, unit, meta)?;
    let mut qa = QuiverAlgebra { algebra, quiver: q.clone(), length_bound: l, vertex_index, arrow_index };
    for (ri, r) in rels.iter().enumerate() {
        if qa.evaluate(r)?.iter().any(|&x| x != 0) {
            return Err(Error::InvariantViolation(format!("relation {ri} does not vanish in the quotient")));
        }
    }
    arrange_socle(&mut qa, &paths, &nf, &basis_pos)?;
    Ok(qa)
}

/// Retries with `L + 2` on [`Error::BoundTooSmall`] until
/// [`MAX_LENGTH_BOUND`].
pub fn quotient_algebra_auto(q: &Quiver, rels: &[Relation], field: &Field, start: usize) -> Result<QuiverAlgebra> {
    let mut l = start.max(1);
    loop {
        match quotient_algebra(q, rels, field, l) {
            Err(Error::BoundTooSmall { bound, path }) => {
                if l + 2 > MAX_LENGTH_BOUND {
                    return Err(Error::BoundTooSmall { bound, path });
                }
                l += 2;
            }
            other => return other,
        }
    }
}

/// Ensures the basis contains a basis of the socle, exchanging basis paths
/// for other paths lying in the socle when necessary.
fn arrange_socle(qa: &mut QuiverAlgebra, paths: &Paths, nf: &[Sparse], basis_pos: &[u32]) -> Result<()> {
    let a = &qa.algebra;
    let f = a.field().clone();
    let d = a.dim();
    let soc = a.socle()?;
    let in_soc: Vec<usize> = (0..d).filter(|&i| soc.contains(&a.basis_vector(i))).collect();
    if in_soc.len() == soc.dim() {
        qa.algebra.metadata_mut().socle_paths = in_soc;
        return Ok(());
    }
    let dense = |s: &Sparse| -> Vec<u32> {
        let mut v = vec![0; d];
        for &(b, c) in s {
            v[b as usize] = c;
        }
        v
    };
    let mut chosen = Echelon::new(&f, d);
    let mut picks: Vec<(Vec<u32>, String)> = Vec::new();
    for &i in &in_soc {
        chosen.insert(a.basis_vector(i));
    }
    for id in 0..paths.len() {
        if chosen.rank() == soc.dim() {
            break;
        }
        if basis_pos[id] != NONE || nf[id].is_empty() {
            continue;
        }
        let v = dense(&nf[id]);
        if soc.contains(&v) && chosen.insert(v.clone()) {
            picks.push((v, paths.label(&qa.quiver, id as u32)));
        }
    }
    if chosen.rank() < soc.dim() {
        return Err(Error::SoclePathFailure(format!(
            "only {} of {} socle dimensions are reached by paths",
            chosen.rank(),
            soc.dim()
        )));
    }
    // Steinitz exchange, replacing the largest admissible basis path each time.
    let mut basis = Matrix::identity(&f, d);
    let mut labels: Vec<String> = a.labels().to_vec();
    let mut protected: Vec<bool> = (0..d).map(|i| in_soc.contains(&i)).collect();
    for i in a.metadata().idempotents.iter().flatten() {
        protected[*i] = true;
    }
    for &i in &qa.arrow_index {
        protected[i] = true;
    }
    for (v, label) in picks {
        let coords = basis.inverse()?.vec_mul(&v);
        let slot = (0..d)
            .rev()
            .find(|&i| coords[i] != 0 && !protected[i])
            .ok_or_else(|| Error::SoclePathFailure(format!("no exchange position for {label}")))?;
        basis.row_mut(slot).copy_from_slice(&v);
        labels[slot] = label;
        protected[slot] = true;
    }
    let mut meta = a.metadata().clone();
    let new_alg = a.change_basis(&basis, labels, meta.clone())?;
    let soc2 = new_alg.socle()?;
    let socle_paths: Vec<usize> = (0..d).filter(|&i| soc2.contains(&new_alg.basis_vector(i))).collect();
    if socle_paths.len() != soc2.dim() {
        return Err(Error::SoclePathFailure("exchange did not produce a socle basis".into()));
    }
    meta.socle_paths = socle_paths;
    let mut new_alg = new_alg;
    *new_alg.metadata_mut() = meta;
    qa.algebra = new_alg;
    Ok(())
}

/// Subspace spanned by the basis elements of the given indices.
pub fn coordinate_span(field: &Field, d: usize, idx: &[usize]) -> Subspace {
    let rows: Vec<Vec<u32>> = idx
        .iter()
        .map(|&i| {
            let mut v = vec![0; d];
            v[i] = 1;
            v
        })
        .collect();
    Subspace::span(field, d, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn arrows(list: &[(&str, usize, usize)]) -> Vec<(String, usize, usize)> {
        list.iter().map(|(l, s, t)| (l.to_string(), *s, *t)).collect()
    }

    fn gf2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn a2_path_algebra() {
        let q = Quiver::new(2, arrows(&[("a", 0, 1)])).unwrap();
        let qa = quotient_algebra(&q, &[], &gf2(), 1).unwrap();
        assert_eq!(qa.algebra.labels(), &["e0", "e1", "a"]);
        assert_eq!(qa.algebra.metadata().socle_paths, vec![2]);
    }

    #[test]
    fn dual_numbers_from_a_loop() {
        let q = Quiver::new(1, arrows(&[("x", 0, 0)])).unwrap();
        let rel = Relation::from_words(&[(1, "x*x")]);
        for l in 2..5 {
            let qa = quotient_algebra(&q, core::slice::from_ref(&rel), &gf2(), l).unwrap();
            assert_eq!(qa.algebra.dim(), 2);
            assert_eq!(qa.algebra.metadata().socle_paths, vec![1]);
        }
    }

    #[test]
    fn bound_too_small_is_reported() {
        let q = Quiver::new(1, arrows(&[("x", 0, 0)])).unwrap();
        let rel = Relation::from_words(&[(1, "x*x*x*x")]);
        match quotient_algebra(&q, core::slice::from_ref(&rel), &gf2(), 2) {
            Err(Error::BoundTooSmall { bound: 2, path }) => assert_eq!(path, "x*x*x"),
            other => panic!("unexpected {other:?}"),
        }
        let qa = quotient_algebra_auto(&q, &[rel], &gf2(), 1).unwrap();
        assert_eq!(qa.algebra.dim(), 4);
        assert_eq!(qa.length_bound, 3);
    }

    #[test]
    fn free_loop_exhausts_auto_bound() {
        let q = Quiver::new(1, arrows(&[("x", 0, 0), ("y", 0, 0)])).unwrap();
        let rel = Relation::from_words(&[(1, "x*x")]);
        assert!(matches!(quotient_algebra(&q, &[rel], &gf2(), 4), Err(Error::BoundTooSmall { .. })));
    }

    #[test]
    fn degree_one_terms_rejected() {
        let q = Quiver::new(1, arrows(&[("x", 0, 0), ("y", 0, 0)])).unwrap();
        let rel = Relation::from_words(&[(1, "x*x"), (1, "y")]);
        assert!(matches!(quotient_algebra(&q, &[rel], &gf2(), 3), Err(Error::NonAdmissible(_))));
        let bad = Relation::from_words(&[(1, "x*z")]);
        assert!(quotient_algebra(&q, &[bad], &gf2(), 3).is_err());
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let q = Quiver::new(2, arrows(&[("a", 0, 1), ("b", 1, 0)])).unwrap();
        let rel = Relation::from_words(&[(1, "a*b"), (1, "b*a")]);
        assert!(matches!(quotient_algebra(&q, &[rel], &gf2(), 3), Err(Error::InvalidPresentation(_))));
    }

    #[test]
    fn commuting_square_needs_socle_exchange() {
        // X^2, Y^2, XY + YX over GF(3): socle spanned by XY, which is a basis path.
        // With XY - YX instead (commutative), socle is XY as well.
        let f = Field::prime(3).unwrap();
        let q = Quiver::new(1, arrows(&[("X", 0, 0), ("Y", 0, 0)])).unwrap();
        let rels = [
            Relation::from_words(&[(1, "X*X")]),
            Relation::from_words(&[(1, "Y*Y")]),
            Relation::from_words(&[(1, "X*Y"), (2, "Y*X")]),
        ];
        let qa = quotient_algebra(&q, &rels, &f, 2).unwrap();
        assert_eq!(qa.algebra.dim(), 4);
        let soc = qa.algebra.metadata().socle_paths.clone();
        assert_eq!(soc.len(), 1);
        assert_eq!(qa.algebra.labels()[soc[0]], "X*Y");
    }

    /// Words in X, Y alternating, counted up to (XY)^k = (YX)^k.
    fn alternating_word_count(k: usize) -> usize {
        // 1, then for each length 1..2k two alternating words, identified at 2k.
        let mut n = 1;
        for len in 1..=2 * k {
            n += if len == 2 * k { 1 } else { 2 };
        }
        n
    }

    #[test]
    fn local_dihedral_dimension() {
        let q = Quiver::new(1, arrows(&[("X", 0, 0), ("Y", 0, 0)])).unwrap();
        for k in 1..=4 {
            let xy = ["X", "Y"].repeat(k).join("*");
            let yx = ["Y", "X"].repeat(k).join("*");
            let rels = [
                Relation::from_words(&[(1, "X*X")]),
                Relation::from_words(&[(1, "Y*Y")]),
                Relation::from_words(&[(1, &xy), (1, &yx)]),
            ];
            let qa = quotient_algebra(&q, &rels, &gf2(), 2 * k + 1).unwrap();
            assert_eq!(qa.algebra.dim(), 4 * k);
            assert_eq!(qa.algebra.dim(), alternating_word_count(k));
        }
    }
}

//! Quotient rings `Z/I`, isomorphism invariants of commutative rings and a
//! bounded isomorphism search for small local ones.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SemilinearMap, Subspace};

/// `Z/I` for a unital subalgebra `Z` of `A` and an ideal `I ⊆ Z`, on coset
/// representatives of the RREF basis of `Z`. `I = Z` yields the zero ring.
pub fn quotient_ring(a: &Algebra, z: &Subspace, i: &Subspace) -> Result<Algebra> {
    if !z.contains_subspace(i)? {
        return Err(Error::NotIdeal("ideal is not contained in the ring".into()));
    }
    let sub = a.subalgebra(z)?;
    let coords: Vec<Vec<u32>> =
        i.basis().row_iter().map(|r| z.coordinates(r).expect("contained")).collect();
    let ideal = Subspace::span(a.field(), z.dim(), &coords);
    sub.quotient_by_ideal(&ideal)
}

/// Kernel and image dimensions of `x -> x^p` on a subspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FrobeniusDims {
    pub kernel: usize,
    pub image: usize,
}

/// Ring-isomorphism invariants of a commutative algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RingFingerprint {
    pub dim: usize,
    /// `dim rad^i` for `i = 1, 2, ...` down to the first zero.
    pub radical_powers: Vec<usize>,
    pub frobenius: FrobeniusDims,
    pub frobenius_on_radical: FrobeniusDims,
    pub frobenius_on_radical_square: FrobeniusDims,
    /// Number of idempotents, when the ring has at most `2^16` elements.
    pub idempotents: Option<u64>,
}

impl RingFingerprint {
    /// Named components in a fixed order.
    pub fn components(&self) -> Vec<(&'static str, String)> {
        let fd = |d: &FrobeniusDims| format!("ker {}, im {}", d.kernel, d.image);
        vec![
            ("dim", format!("{}", self.dim)),
            ("radical powers", format!("{:?}", self.radical_powers)),
            ("p-power map", fd(&self.frobenius)),
            ("p-power map on rad", fd(&self.frobenius_on_radical)),
            ("p-power map on rad^2", fd(&self.frobenius_on_radical_square)),
            ("idempotents", match self.idempotents {
                Some(n) => format!("{n}"),
                None => "not counted".into(),
            }),
        ]
    }

    /// First component that differs, with both values.
    pub fn first_difference(&self, other: &RingFingerprint) -> Option<(&'static str, String, String)> {
        self.components()
            .into_iter()
            .zip(other.components())
            .find(|(x, y)| x.1 != y.1)
            .map(|(x, y)| (x.0, x.1, y.1))
    }
}

fn frobenius_map(q: &Algebra) -> SemilinearMap {
    let f = q.field();
    let p = f.characteristic() as u64;
    let cols: Vec<Vec<u32>> = (0..q.dim()).map(|i| q.pow(&q.basis_vector(i), p)).collect();
    SemilinearMap::new(Matrix::from_columns(f, q.dim(), &cols).expect("square"), 1).expect("square")
}

fn frobenius_dims(frob: &SemilinearMap, ker: &Subspace, s: &Subspace) -> Result<FrobeniusDims> {
    let images: Vec<Vec<u32>> = s.basis().row_iter().map(|r| frob.apply(r)).collect();
    let image = Subspace::span(s.field(), s.ambient_dim(), &images).dim();
    Ok(FrobeniusDims { kernel: s.intersect(ker)?.dim(), image })
}

/// Size limit for counting idempotents by enumeration.
const IDEMPOTENT_LIMIT: u64 = 1 << 16;

pub fn ring_fingerprint(q: &Algebra) -> Result<RingFingerprint> {
    if !q.is_commutative() {
        return Err(Error::InvalidAlgebra("fingerprints are defined for commutative rings".into()));
    }
    let rad = q.radical()?;
    let mut radical_powers = q.power_dims(&rad).ok_or_else(|| Error::RadicalFailure("radical is not nilpotent".into()))?;
    radical_powers.pop();
    let rad2 = q.product_space(&rad, &rad);
    let frob = frobenius_map(q);
    let ker = frob.kernel();
    let order = q.field().order() as u64;
    let idempotents = order.checked_pow(q.dim() as u32).filter(|&n| n <= IDEMPOTENT_LIMIT).map(|n| {
        let mut count = 0;
        for x in 0..n {
            let v = digits(x, order, q.dim());
            if q.multiply(&v, &v) == v {
                count += 1;
            }
        }
        count
    });
    Ok(RingFingerprint {
        dim: q.dim(),
        radical_powers,
        frobenius: frobenius_dims(&frob, &ker, &q.full_space())?,
        frobenius_on_radical: frobenius_dims(&frob, &ker, &rad)?,
        frobenius_on_radical_square: frobenius_dims(&frob, &ker, &rad2)?,
        idempotents,
    })
}

fn digits(mut x: u64, base: u64, n: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    for d in v.iter_mut() {
        *d = (x % base) as u32;
        x /= base;
    }
    v
}

/// Largest dimension accepted by [`iso_search_local`].
pub const ISO_SEARCH_DIM: usize = 8;
/// Largest field accepted by [`iso_search_local`].
pub const ISO_SEARCH_FIELD: u32 = 4;
/// Bound on the number of generator assignments visited.
pub const ISO_SEARCH_LIMIT: u64 = 1 << 22;

/// Result of [`iso_search_local`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoSearch {
    /// Matrix (on column vectors) of a ring isomorphism `Q1 -> Q2`.
    Isomorphic(Matrix),
    NotIsomorphic,
}

/// Decides whether two commutative local rings with residue field `K` are
/// isomorphic, by backtracking over images of generators of `Q1` (lifts of
/// a basis of `rad/rad^2`) in `rad(Q2) \ rad^2(Q2)`. A local ring is never
/// isomorphic to a non-local one. A partial assignment is pruned as soon as
/// the monomials in the assigned generators satisfy a linear relation in one
/// ring and not the other.
pub fn iso_search_local(q1: &Algebra, q2: &Algebra) -> Result<IsoSearch> {
    q1.field().ensure_same(q2.field())?;
    let f = q1.field().clone();
    if q1.dim().max(q2.dim()) > ISO_SEARCH_DIM || f.order() > ISO_SEARCH_FIELD {
        return Err(Error::SearchBoundExceeded(format!(
            "dimensions {} and {} over a field with {} elements",
            q1.dim(),
            q2.dim(),
            f.order()
        )));
    }
    if !q1.is_commutative() || !q2.is_commutative() {
        return Err(Error::InvalidAlgebra("isomorphism search expects commutative rings".into()));
    }
    let r1 = q1.radical()?;
    let r2 = q2.radical()?;
    let local = |q: &Algebra, r: &Subspace| q.dim() > 0 && q.dim() - r.dim() == 1;
    match (local(q1, &r1), local(q2, &r2)) {
        (true, true) => {}
        (false, false) => return Err(Error::NotLocal),
        _ => return Ok(IsoSearch::NotIsomorphic),
    }
    if q1.dim() != q2.dim() || r1.dim() != r2.dim() {
        return Ok(IsoSearch::NotIsomorphic);
    }
    let r1_2 = q1.product_space(&r1, &r1);
    let r2_2 = q2.product_space(&r2, &r2);
    if r1_2.dim() != r2_2.dim() {
        return Ok(IsoSearch::NotIsomorphic);
    }
    // generators of Q1: radical basis vectors independent modulo rad^2
    let mut gens: Vec<Vec<u32>> = Vec::new();
    let mut span = r1_2.clone();
    for v in r1.basis_vectors() {
        if !span.contains(&v) {
            span = span.sum(&Subspace::span(&f, q1.dim(), &[&v]))?;
            gens.push(v);
        }
    }
    let nil = q1.power_dims(&r1).map_or(q1.dim(), |d| d.len());
    let monomials = exponent_vectors(gens.len(), nil);
    // candidate images: rad(Q2) minus rad^2(Q2)
    let order = f.order() as u64;
    let r2_basis = r2.basis_vectors();
    let candidates: Vec<Vec<u32>> = (0..order.pow(r2.dim() as u32))
        .map(|x| {
            let c = digits(x, order, r2.dim());
            let mut v = vec![0; q2.dim()];
            for (ci, b) in c.iter().zip(&r2_basis) {
                f.axpy(&mut v, *ci, b);
            }
            v
        })
        .filter(|v| !r2_2.contains(v))
        .collect();
    let total = (candidates.len() as u64).checked_pow(gens.len() as u32);
    if total.is_none_or(|t| t > ISO_SEARCH_LIMIT) {
        return Err(Error::SearchBoundExceeded(format!(
            "{} candidates for {} generators",
            candidates.len(),
            gens.len()
        )));
    }
    let mut search = Search { q1, q2, gens: &gens, monomials: &monomials, candidates: &candidates, images: Vec::new() };
    Ok(match search.run()? {
        Some(m) => IsoSearch::Isomorphic(m),
        None => IsoSearch::NotIsomorphic,
    })
}

/// Exponent vectors in `r` variables of total degree `< nil`, degree 0 first.
fn exponent_vectors(r: usize, nil: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0; r]];
    let mut frontier = out.clone();
    for _ in 1..nil.max(1) + 1 {
        let mut next = Vec::new();
        for e in &frontier {
            // extend only at or after the last nonzero position to avoid repeats
            let start = e.iter().rposition(|&x| x != 0).unwrap_or(0);
            for i in start..r {
                let mut n = e.clone();
                n[i] += 1;
                next.push(n);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

struct Search<'a> {
    q1: &'a Algebra,
    q2: &'a Algebra,
    gens: &'a [Vec<u32>],
    monomials: &'a [Vec<usize>],
    candidates: &'a [Vec<u32>],
    images: Vec<Vec<u32>>,
}

impl Search<'_> {
    fn monomial(q: &Algebra, values: &[Vec<u32>], e: &[usize]) -> Vec<u32> {
        let mut acc = q.unit().to_vec();
        for (v, &k) in values.iter().zip(e) {
            if k > 0 {
                acc = q.multiply(&acc, &q.pow(v, k as u64));
            }
        }
        acc
    }

    /// Whether `m(g) -> m(h)` is a well-defined injective linear map on the
    /// monomials using only the first `k` generators. Returns the matrix of
    /// the map when `k` is the full generator count and it is bijective.
    fn consistent(&self, k: usize) -> (bool, Option<Matrix>) {
        let f = self.q1.field();
        let (d1, d2) = (self.q1.dim(), self.q2.dim());
        let mut rows = Vec::new();
        for e in self.monomials.iter().filter(|e| e[k..].iter().all(|&x| x == 0)) {
            let x = Self::monomial(self.q1, &self.gens[..k], &e[..k]);
            let y = Self::monomial(self.q2, &self.images, &e[..k]);
            rows.push([x, y].concat());
        }
        let joint = Matrix::from_rows(f, d1 + d2, &rows).expect("rows of equal length").rref();
        let left = joint.pivots.iter().filter(|&&p| p < d1).count();
        let right = Matrix::from_rows(f, d2, &rows.iter().map(|r| r[d1..].to_vec()).collect::<Vec<_>>())
            .expect("rows of equal length")
            .rank();
        // well defined: no pivot beyond the Q1 block; injective: ranks agree
        let ok = left == joint.rank && right == left;
        if !ok || k < self.gens.len() || left < d1 {
            return (ok, None);
        }
        // joint rows with pivots in the Q1 block: [e_i | φ(e_i)]
        let cols: Vec<Vec<u32>> = (0..d1).map(|i| joint.matrix.row(i)[d1..].to_vec()).collect();
        (ok, Some(Matrix::from_columns(f, d2, &cols).expect("square")))
    }

    fn run(&mut self) -> Result<Option<Matrix>> {
        let k = self.images.len();
        if k == self.gens.len() {
            return Ok(self.consistent(k).1);
        }
        for c in self.candidates {
            self.images.push(c.clone());
            let (ok, _) = self.consistent(k + 1);
            if ok {
                if let Some(m) = self.run()? {
                    return Ok(Some(m));
                }
            }
            self.images.pop();
        }
        Ok(None)
    }
}

//! Bilinear forms on algebras: the socle form, predicates, the Nakayama
//! automorphism and the search for a symmetrizing form.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Echelon, Matrix, Subspace};

/// Seed of the bounded random search in [`find_symmetric_form`].
pub const SYMMETRIC_SEARCH_SEED: u64 = 0x6b75_656c_7368_616d;
/// Number of random candidates tried when exhaustive search is too large.
pub const SYMMETRIC_SEARCH_TRIALS: usize = 10_000;
/// Exhaustive search is used when the solution space has at most this many
/// elements.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

/// `⟨x, y⟩ = xᵀ G y` on the algebra's coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FormPredicates {
    pub associative: bool,
    pub symmetric: bool,
    pub nondegenerate: bool,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<BilinearForm> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch("gram matrix must be square".into()));
        }
        Ok(BilinearForm { gram })
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, x: &[u32], y: &[u32]) -> u32 {
        self.gram.field().dot(x, &self.gram.mul_vec(y))
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.is_invertible()
    }

    /// `⟨b_i b_j, b_k⟩ = ⟨b_i, b_j b_k⟩` on all basis triples.
    pub fn is_associative(&self, a: &Algebra) -> bool {
        let d = a.dim();
        if d != self.dim() {
            return false;
        }
        let f = a.field();
        let g = &self.gram;
        for i in 0..d {
            for j in 0..d {
                let ij = a.mul_basis(i, j);
                for k in 0..d {
                    let lhs = ij.iter().fold(0, |s, &(l, c)| f.add(s, f.mul(c, g.get(l as usize, k))));
                    let rhs = a.mul_basis(j, k).iter().fold(0, |s, &(l, c)| f.add(s, f.mul(c, g.get(i, l as usize))));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn predicates(&self, a: &Algebra) -> FormPredicates {
        FormPredicates {
            associative: self.is_associative(a),
            symmetric: self.is_symmetric(),
            nondegenerate: self.is_nondegenerate(),
        }
    }

    /// `{w : ⟨w, x⟩ = 0 for all x in v}`.
    pub fn orthogonal(&self, v: &Subspace) -> Result<Subspace> {
        v.orthogonal(&self.gram)
    }

    /// `{w : ⟨x, w⟩ = 0 for all x in v}`.
    pub fn orthogonal_right(&self, v: &Subspace) -> Result<Subspace> {
        v.orthogonal_right(&self.gram)
    }
}

pub fn form_predicates(f: &BilinearForm, a: &Algebra) -> FormPredicates {
    f.predicates(a)
}

/// `⟨x, y⟩ = ψ(xy)` where `ψ` is 1 on the socle basis paths and 0 on the
/// other basis elements.
pub fn socle_form(a: &Algebra) -> Result<BilinearForm> {
    let soc = &a.metadata().socle_paths;
    if soc.is_empty() && a.dim() > 0 {
        return Err(Error::DegenerateForm("the algebra records no socle basis paths".into()));
    }
    let f = a.field();
    let d = a.dim();
    let mut psi = vec![0u32; d];
    for &k in soc {
        psi[k] = 1;
    }
    let gram = Matrix::from_fn(f, d, d, |i, j| {
        a.mul_basis(i, j).iter().fold(0, |s, &(k, c)| f.add(s, f.mul(c, psi[k as usize])))
    });
    let form = BilinearForm { gram };
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm("socle form is degenerate".into()));
    }
    Ok(form)
}

/// An algebra automorphism given by its matrix on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraAutomorphism {
    matrix: Matrix,
}

impl AlgebraAutomorphism {
    /// Checks invertibility, multiplicativity on basis pairs and the unit.
    pub fn new(a: &Algebra, matrix: Matrix) -> Result<AlgebraAutomorphism> {
        if matrix.rows() != a.dim() || !matrix.is_invertible() {
            return Err(Error::NotMultiplicative("map is not invertible".into()));
        }
        let d = a.dim();
        let images: Vec<Vec<u32>> = (0..d).map(|j| matrix.column(j)).collect();
        if matrix.mul_vec(a.unit()) != a.unit() {
            return Err(Error::NotMultiplicative("unit is not fixed".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = matrix.mul_vec(&a.mul_basis_dense(i, j));
                let rhs = a.multiply(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::NotMultiplicative(format!(
                        "fails on ({}, {})",
                        a.labels()[i],
                        a.labels()[j]
                    )));
                }
            }
        }
        Ok(AlgebraAutomorphism { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        self.matrix.mul_vec(v)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }
}

/// The automorphism `ν` with `⟨a, b⟩ = ⟨b, ν(a)⟩`.
pub fn nakayama(f: &BilinearForm, a: &Algebra) -> Result<AlgebraAutomorphism> {
    // aᵀ G b = bᵀ G N a for all a, b  <=>  G = Nᵀ Gᵀ  <=>  N = G⁻¹ Gᵀ
    let g = f.gram();
    let inv = g.inverse().map_err(|_| Error::SingularGram)?;
    let n = inv.mul(&g.transpose())?;
    AlgebraAutomorphism::new(a, n)
}

pub fn twisted_center(a: &Algebra, nu: &AlgebraAutomorphism) -> Subspace {
    a.twisted_center(nu.matrix())
}

/// Outcome of [`find_symmetric_form`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetricFormSearch {
    /// A symmetric, associative, nondegenerate form.
    Witness(BilinearForm),
    /// Every symmetric associative form is degenerate. Carries a basis of
    /// the solution space (as Gram matrices) that was searched exhaustively.
    NotSymmetric { solution_basis: Vec<Matrix> },
    /// Random search found nothing; no claim is made.
    Inconclusive { solution_dim: usize, trials: usize },
}

impl SymmetricFormSearch {
    pub fn witness(&self) -> Option<&BilinearForm> {
        match self {
            SymmetricFormSearch::Witness(f) => Some(f),
            _ => None,
        }
    }
}

/// Basis of the space of symmetric associative forms, as Gram matrices.
///
/// A form is associative iff `⟨a, b⟩ = λ(ab)` with `λ = ⟨1, -⟩`, and then it
/// is symmetric iff `λ` vanishes on `[A, A]`. So the space is parametrised by
/// the functionals on `A/[A,A]`; the `t`-th basis form uses the coordinate
/// of the `t`-th complement basis vector.
pub fn symmetric_associative_forms(a: &Algebra) -> Vec<Matrix> {
    let f = a.field();
    let d = a.dim();
    let comm = a.commutator_space();
    let proj = comm.complement_projector();
    let keep = comm.non_pivots();
    // reduced products b_i b_j modulo [A,A]
    let mut red = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            red.push(proj.mul_vec(&a.mul_basis_dense(i, j)));
        }
    }
    keep.iter().map(|&t| Matrix::from_fn(f, d, d, |i, j| red[i * d + j][t])).collect()
}

fn combine(f: &Field, basis: &[Matrix], coeffs: &[u32]) -> Matrix {
    let d = basis[0].rows();
    let mut g = Matrix::zeros(f, d, d);
    for (m, &c) in basis.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for i in 0..d {
            f.axpy(g.row_mut(i), c, m.row(i));
        }
    }
    g
}

fn full_rank(m: &Matrix) -> bool {
    let mut e = Echelon::new(m.field(), m.cols());
    for r in m.row_iter() {
        if !e.insert(r.to_vec()) {
            return false;
        }
    }
    true
}

/// Searches the symmetric associative forms for a nondegenerate one.
///
/// The search is exhaustive when the solution space has at most
/// [`EXHAUSTIVE_LIMIT`] elements (candidates are visited by increasing
/// number of nonzero coefficients); otherwise [`SYMMETRIC_SEARCH_TRIALS`]
/// random candidates from a ChaCha8 stream seeded with
/// [`SYMMETRIC_SEARCH_SEED`] are tried.
pub fn find_symmetric_form(a: &Algebra) -> SymmetricFormSearch {
    let f = a.field();
    let basis = symmetric_associative_forms(a);
    let m = basis.len();
    if a.dim() == 0 {
        return SymmetricFormSearch::Witness(BilinearForm { gram: Matrix::zeros(f, 0, 0) });
    }
    if m == 0 {
        return SymmetricFormSearch::NotSymmetric { solution_basis: basis };
    }
    let q = f.order() as u64;
    match q.checked_pow(m as u32) {
        Some(t) if t <= EXHAUSTIVE_LIMIT => {
            for weight in 1..=m {
                let mut found = None;
                for_each_support(m, weight, &mut |support| {
                    if found.is_some() {
                        return;
                    }
                    for_each_nonzero_assignment(q as u32, support.len(), &mut |vals| {
                        if found.is_some() {
                            return;
                        }
                        let mut c = vec![0u32; m];
                        for (&s, &v) in support.iter().zip(vals) {
                            c[s] = v;
                        }
                        let g = combine(f, &basis, &c);
                        if full_rank(&g) {
                            found = Some(g);
                        }
                    });
                });
                if let Some(gram) = found {
                    return SymmetricFormSearch::Witness(BilinearForm { gram });
                }
            }
            SymmetricFormSearch::NotSymmetric { solution_basis: basis }
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(SYMMETRIC_SEARCH_SEED);
            for _ in 0..SYMMETRIC_SEARCH_TRIALS {
                let c: Vec<u32> = (0..m).map(|_| (rng.next_u64() % q) as u32).collect();
                let g = combine(f, &basis, &c);
                if full_rank(&g) {
                    return SymmetricFormSearch::Witness(BilinearForm { gram: g });
                }
            }
            SymmetricFormSearch::Inconclusive { solution_dim: m, trials: SYMMETRIC_SEARCH_TRIALS }
        }
    }
}

/// Calls `visit` with every `k`-subset of `0..m` in lexicographic order.
fn for_each_support(m: usize, k: usize, visit: &mut dyn FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] < m - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Calls `visit` with every vector in `{1..q-1}^k`.
fn for_each_nonzero_assignment(q: u32, k: usize, visit: &mut dyn FnMut(&[u32])) {
    let mut vals = vec![1u32; k];
    loop {
        visit(&vals);
        let Some(i) = (0..k).find(|&i| vals[i] + 1 < q) else {
            return;
        };
        vals[i] += 1;
        for v in vals.iter_mut().take(i) {
            *v = 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra, truncated_polynomial, Metadata};

    fn dual_numbers(p: u32) -> Algebra {
        let mut a = truncated_polynomial(&Field::prime(p).unwrap(), 2);
        a.metadata_mut().socle_paths = vec![1];
        a
    }

    /// Solves "symmetric and associative on all triples" directly in the d²
    /// Gram entries.
    fn brute_symmetric_associative_dim(a: &Algebra) -> usize {
        let f = a.field();
        let d = a.dim();
        let var = |i: usize, j: usize| i * d + j;
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let mut r = vec![0; d * d];
                r[var(i, j)] = 1;
                r[var(j, i)] = f.sub(r[var(j, i)], 1);
                rows.push(r);
                for k in 0..d {
                    let mut r = vec![0; d * d];
                    for &(l, c) in a.mul_basis(i, j) {
                        r[var(l as usize, k)] = f.add(r[var(l as usize, k)], c);
                    }
                    for &(l, c) in a.mul_basis(j, k) {
                        r[var(i, l as usize)] = f.sub(r[var(i, l as usize)], c);
                    }
                    rows.push(r);
                }
            }
        }
        Matrix::from_rows(f, d * d, &rows).unwrap().kernel().dim()
    }

    #[test]
    fn dual_numbers_socle_form() {
        let a = dual_numbers(2);
        let form = socle_form(&a).unwrap();
        assert_eq!(form.gram().to_rows(), vec![vec![0, 1], vec![1, 0]]);
        let p = form.predicates(&a);
        assert!(p.associative && p.symmetric && p.nondegenerate);
        assert!(nakayama(&form, &a).unwrap().is_identity());
    }

    #[test]
    fn zero_form_is_degenerate() {
        let f = Field::prime(2).unwrap();
        let z = BilinearForm::new(Matrix::zeros(&f, 2, 2)).unwrap();
        assert!(!z.is_nondegenerate());
    }

    #[test]
    fn symmetric_search_on_small_algebras() {
        let a = dual_numbers(2);
        assert!(find_symmetric_form(&a).witness().is_some());
        let f = Field::prime(3).unwrap();
        let m = matrix_algebra(&f, 2);
        let w = find_symmetric_form(&m);
        let form = w.witness().expect("trace form");
        assert!(form.is_associative(&m) && form.is_symmetric() && form.is_nondegenerate());
    }

    #[test]
    fn parametrisation_matches_triple_system() {
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        let mut algebras = vec![
            truncated_polynomial(&f2, 3),
            matrix_algebra(&f2, 2),
            matrix_algebra(&f3, 2),
        ];
        // upper triangular 2x2 matrices: not symmetric
        let labels = vec!["e1".into(), "e2".into(), "a".into()];
        let structure = [(0, 0, 0, 1), (1, 1, 1, 1), (0, 2, 2, 1), (2, 1, 2, 1)];
        algebras.push(Algebra::new(&f2, labels, &structure, vec![1, 1, 0], Metadata::default()).unwrap());
        for a in &algebras {
            let basis = symmetric_associative_forms(a);
            assert_eq!(basis.len(), brute_symmetric_associative_dim(a));
            for g in &basis {
                let form = BilinearForm::new(g.clone()).unwrap();
                assert!(form.is_symmetric() && form.is_associative(a));
            }
        }
        let upper = algebras.last().unwrap();
        assert!(matches!(find_symmetric_form(upper), SymmetricFormSearch::NotSymmetric { .. }));
    }

    #[test]
    fn support_enumeration_counts() {
        let mut n = 0;
        for_each_support(5, 2, &mut |_| n += 1);
        assert_eq!(n, 10);
        let mut n = 0;
        for_each_nonzero_assignment(4, 3, &mut |_| n += 1);
        assert_eq!(n, 27);
    }
}

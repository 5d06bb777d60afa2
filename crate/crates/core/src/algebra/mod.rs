//! Finite-dimensional unital associative algebras given by structure
//! constants.

mod radical;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{refine_kernel, Echelon, Matrix, Subspace};

pub use radical::radical_char_p;

/// Where an algebra came from; informs which algorithms are available.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Origin {
    #[default]
    StructureConstants,
    Quiver {
        vertices: usize,
        arrows: Vec<(String, usize, usize)>,
    },
    Group {
        table: Vec<Vec<usize>>,
    },
    TrivialExtension {
        base_dim: usize,
    },
    Subquotient,
}

/// Presentation data attached to an algebra.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Metadata {
    /// Basis indices of pairwise orthogonal idempotents summing to 1, one
    /// per simple module (vertex idempotents of a basic presentation).
    pub idempotents: Option<Vec<usize>>,
    /// The basis elements outside `idempotents` span the radical.
    pub arrow_ideal: bool,
    /// Basis indices that generate the algebra (vertices and arrows).
    pub generators: Option<Vec<usize>>,
    /// Basis indices forming a basis of the socle.
    pub socle_paths: Vec<usize>,
    /// Explicit radical basis when known from the construction.
    pub radical: Option<Vec<Vec<u32>>>,
    pub origin: Origin,
    /// Set when every simple module is absolutely simple (basic split).
    pub split_basic: bool,
}

/// A validated algebra. Basis element `i` is written `b_i`.
#[derive(Clone)]
pub struct Algebra {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    /// `table[i * dim + j]` is the sparse product `b_i b_j`.
    table: Vec<Vec<(u32, u32)>>,
    unit: Vec<u32>,
    metadata: Metadata,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {} over {}, labels {:?})", self.dim, self.field, self.labels)
    }
}

impl Algebra {
    /// Builds an algebra from `(i, j, k, c)` entries meaning `b_i b_j ∋ c b_k`.
    /// Repeated entries accumulate. Associativity and the unit are checked.
    pub fn new(
        field: &Field,
        labels: Vec<String>,
        structure: &[(usize, usize, usize, u32)],
        unit: Vec<u32>,
        metadata: Metadata,
    ) -> Result<Algebra> {
        let d = labels.len();
        let mut dense = vec![vec![0u32; 0]; d * d];
        for &(i, j, k, c) in structure {
            if i >= d || j >= d || k >= d {
                return Err(Error::InvalidAlgebra(format!("structure index out of range in ({i},{j},{k})")));
            }
            if !field.contains(c) {
                return Err(Error::InvalidField(format!("{c} is not an element of {field}")));
            }
            let slot = &mut dense[i * d + j];
            if slot.is_empty() {
                slot.resize(d, 0);
            }
            slot[k] = field.add(slot[k], c);
        }
        let table = dense.into_iter().map(|v| sparse(&v)).collect();
        Algebra::from_sparse_table(field, labels, table, unit, metadata)
    }

    /// Builds an algebra from a product function on basis indices.
    pub fn from_products(
        field: &Field,
        labels: Vec<String>,
        mut product: impl FnMut(usize, usize) -> Vec<u32>,
        unit: Vec<u32>,
        metadata: Metadata,
    ) -> Result<Algebra> {
        let d = labels.len();
        let mut table = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let v = product(i, j);
                if v.len() != d {
                    return Err(Error::InvalidAlgebra(format!("product b_{i} b_{j} has wrong length")));
                }
                table.push(sparse(&v));
            }
        }
        Algebra::from_sparse_table(field, labels, table, unit, metadata)
    }

    fn from_sparse_table(
        field: &Field,
        labels: Vec<String>,
        table: Vec<Vec<(u32, u32)>>,
        unit: Vec<u32>,
        metadata: Metadata,
    ) -> Result<Algebra> {
        let d = labels.len();
        if unit.len() != d {
            return Err(Error::InvalidAlgebra(format!("unit has length {}, expected {d}", unit.len())));
        }
        if unit.iter().any(|&x| !field.contains(x)) {
            return Err(Error::InvalidField("unit coordinates outside the field".into()));
        }
        let a = Algebra { field: field.clone(), dim: d, labels, table, unit, metadata };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim;
        let f = &self.field;
        for i in 0..d {
            let e = self.basis_vector(i);
            if self.multiply(&self.unit, &e) != e || self.multiply(&e, &self.unit) != e {
                return Err(Error::InvalidAlgebra(format!("unit does not act trivially on {}", self.labels[i])));
            }
        }
        // (b_i b_j) b_k = b_i (b_j b_k), expanded through the sparse table.
        let mut lhs = vec![0u32; d];
        let mut rhs = vec![0u32; d];
        for i in 0..d {
            for j in 0..d {
                let ij = &self.table[i * d + j];
                for k in 0..d {
                    lhs.iter_mut().for_each(|x| *x = 0);
                    rhs.iter_mut().for_each(|x| *x = 0);
                    for &(l, c) in ij {
                        for &(m, c2) in &self.table[l as usize * d + k] {
                            lhs[m as usize] = f.add(lhs[m as usize], f.mul(c, c2));
                        }
                    }
                    for &(l, c) in &self.table[j * d + k] {
                        for &(m, c2) in &self.table[i * d + l as usize] {
                            rhs[m as usize] = f.add(rhs[m as usize], f.mul(c, c2));
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::InvalidAlgebra(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        if let Some(ids) = &self.metadata.idempotents {
            let mut sum = vec![0u32; d];
            for (a, &i) in ids.iter().enumerate() {
                if i >= d {
                    return Err(Error::InvalidAlgebra("idempotent index out of range".into()));
                }
                sum[i] = f.add(sum[i], 1);
                for (b, &j) in ids.iter().enumerate() {
                    let p = self.mul_basis_dense(i, j);
                    let expected = if a == b { self.basis_vector(i) } else { vec![0; d] };
                    if p != expected {
                        return Err(Error::InvalidAlgebra(format!(
                            "{} and {} are not orthogonal idempotents",
                            self.labels[i], self.labels[j]
                        )));
                    }
                }
            }
            if sum != self.unit {
                return Err(Error::InvalidAlgebra("idempotents do not sum to the unit".into()));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn metadata(&self) -> &Metadata {
        &self.metadata
    }

    pub fn metadata_mut(&mut self) -> &mut Metadata {
        &mut self.metadata
    }

    pub fn is_zero_ring(&self) -> bool {
        self.dim == 0
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    /// Structure constants as `(i, j, k, c)` entries.
    pub fn structure(&self) -> Vec<(usize, usize, usize, u32)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for &(k, c) in &self.table[i * d + j] {
                    out.push((i, j, k as usize, c));
                }
            }
        }
        out
    }

    /// Sparse `b_i b_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(u32, u32)] {
        &self.table[i * self.dim + j]
    }

    pub fn mul_basis_dense(&self, i: usize, j: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        for &(k, c) in self.mul_basis(i, j) {
            v[k as usize] = c;
        }
        v
    }

    pub fn multiply(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let d = self.dim;
        let mut out = vec![0u32; d];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let c = f.mul(x, y);
                for &(k, s) in &self.table[i * d + j] {
                    out[k as usize] = f.add(out[k as usize], f.mul(c, s));
                }
            }
        }
        out
    }

    pub fn commutator(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let ab = self.multiply(a, b);
        let ba = self.multiply(b, a);
        ab.iter().zip(&ba).map(|(&x, &y)| f.sub(x, y)).collect()
    }

    pub fn pow(&self, a: &[u32], mut n: u64) -> Vec<u32> {
        let mut base = a.to_vec();
        let mut acc = self.unit.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    /// Matrix of `x -> a x`.
    pub fn left_matrix(&self, a: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|j| self.multiply(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(&self.field, self.dim, &cols).expect("square")
    }

    /// Matrix of `x -> x a`.
    pub fn right_matrix(&self, a: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|j| self.multiply(&self.basis_vector(j), a)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols).expect("square")
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (i + 1..d).all(|j| self.table[i * d + j] == self.table[j * d + i]))
    }

    /// Basis indices generating the algebra: the presentation's generators
    /// if recorded, otherwise the whole basis.
    pub fn generator_indices(&self) -> Vec<usize> {
        match &self.metadata.generators {
            Some(g) => g.clone(),
            None => (0..self.dim).collect(),
        }
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(&self.field, self.dim)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(&self.field, self.dim)
    }

    fn full_basis(&self) -> Vec<Vec<u32>> {
        (0..self.dim).map(|i| self.basis_vector(i)).collect()
    }

    /// `[A, A]`, the span of all commutators.
    pub fn commutator_space(&self) -> Subspace {
        // [xy, z] = [x, yz] + [y, zx], so commutators with generators suffice.
        let d = self.dim;
        let mut e = Echelon::new(&self.field, d);
        for g in self.generator_indices() {
            for j in 0..d {
                if self.table[g * d + j] == self.table[j * d + g] {
                    continue;
                }
                e.insert(self.commutator(&self.basis_vector(g), &self.basis_vector(j)));
            }
        }
        e.into_subspace()
    }

    /// `Z(A)`.
    pub fn center(&self) -> Subspace {
        let mut k = self.full_basis();
        for g in self.generator_indices() {
            let bg = self.basis_vector(g);
            k = refine_kernel(&self.field, k, |z| self.commutator(&bg, z));
        }
        Subspace::span(&self.field, self.dim, &k)
    }

    /// `{a : b a = a ν(b) for all b}` for an automorphism given as a matrix
    /// acting on column vectors.
    pub fn twisted_center(&self, nu: &Matrix) -> Subspace {
        let f = &self.field;
        let mut k = self.full_basis();
        for g in self.generator_indices() {
            let bg = self.basis_vector(g);
            let nbg = nu.mul_vec(&bg);
            k = refine_kernel(f, k, |a| {
                let l = self.multiply(&bg, a);
                let r = self.multiply(a, &nbg);
                l.iter().zip(&r).map(|(&x, &y)| f.sub(x, y)).collect()
            });
        }
        Subspace::span(f, self.dim, &k)
    }

    /// Two-sided annihilator `{x : x s = s x = 0 for s in S}`.
    pub fn annihilator(&self, s: &Subspace) -> Subspace {
        let mut k = self.full_basis();
        for r in s.basis().row_iter() {
            k = refine_kernel(&self.field, k, |x| self.multiply(x, r));
            k = refine_kernel(&self.field, k, |x| self.multiply(r, x));
        }
        Subspace::span(&self.field, self.dim, &k)
    }

    /// Jacobson radical.
    pub fn radical(&self) -> Result<Subspace> {
        if let Some(r) = &self.metadata.radical {
            return Ok(Subspace::span(&self.field, self.dim, r));
        }
        if self.metadata.arrow_ideal {
            if let Some(ids) = &self.metadata.idempotents {
                let rows: Vec<Vec<u32>> =
                    (0..self.dim).filter(|i| !ids.contains(i)).map(|i| self.basis_vector(i)).collect();
                return Ok(Subspace::span(&self.field, self.dim, &rows));
            }
        }
        radical::radical_validated(self)
    }

    /// `soc(A)`, the two-sided annihilator of the radical.
    pub fn socle(&self) -> Result<Subspace> {
        Ok(self.annihilator(&self.radical()?))
    }

    /// Span of all products `u v` with `u in U`, `v in V`.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut e = Echelon::new(&self.field, self.dim);
        for x in u.basis().row_iter() {
            for y in v.basis().row_iter() {
                if e.is_full() {
                    break;
                }
                e.insert(self.multiply(x, y));
            }
        }
        e.into_subspace()
    }

    /// Dimensions of `I, I^2, I^3, ...` down to the first zero power; `None`
    /// if the powers stabilise at a nonzero space.
    pub fn power_dims(&self, ideal: &Subspace) -> Option<Vec<usize>> {
        let mut dims = Vec::new();
        let mut cur = ideal.clone();
        loop {
            dims.push(cur.dim());
            if cur.is_zero() {
                return Some(dims);
            }
            let next = self.product_space(&cur, ideal);
            if next.dim() == cur.dim() {
                return None;
            }
            cur = next;
        }
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim).all(|i| {
            let b = self.basis_vector(i);
            s.basis().row_iter().all(|r| s.contains(&self.multiply(&b, r)) && s.contains(&self.multiply(r, &b)))
        })
    }

    /// Cartan matrix `C[i][j] = dim e_j A e_i`.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<u64>>> {
        let ids = self.metadata.idempotents.as_ref().ok_or(Error::NoPresentation)?;
        let n = ids.len();
        let mut c = vec![vec![0u64; n]; n];
        for (a, &ei) in ids.iter().enumerate() {
            let ev_i = self.basis_vector(ei);
            // A e_i, then left multiply by e_j.
            let ae: Vec<Vec<u32>> = (0..self.dim).map(|k| self.multiply(&self.basis_vector(k), &ev_i)).collect();
            for (b, &ej) in ids.iter().enumerate() {
                let ev_j = self.basis_vector(ej);
                let mut e = Echelon::new(&self.field, self.dim);
                for v in &ae {
                    e.insert(self.multiply(&ev_j, v));
                }
                c[a][b] = e.rank() as u64;
            }
        }
        Ok(c)
    }

    /// Re-expresses the algebra in a new basis given by rows of `basis`
    /// (coordinates in the current basis).
    pub fn change_basis(&self, basis: &Matrix, labels: Vec<String>, metadata: Metadata) -> Result<Algebra> {
        let d = self.dim;
        if basis.rows() != d || basis.cols() != d || labels.len() != d {
            return Err(Error::DimensionMismatch("basis change must be square of algebra size".into()));
        }
        // new coords of x: solve x = c · basis, i.e. c = x · basis^{-1}
        let inv = basis.inverse()?;
        let rows = basis.to_rows();
        let products = |i: usize, j: usize| inv.vec_mul(&self.multiply(&rows[i], &rows[j]));
        let unit = inv.vec_mul(&self.unit);
        Algebra::from_products(&self.field, labels, products, unit, metadata)
    }

    /// The algebra structure on a subspace closed under multiplication and
    /// containing the unit, in the RREF basis of `s`.
    pub fn subalgebra(&self, s: &Subspace) -> Result<Algebra> {
        if !s.contains(&self.unit) {
            return Err(Error::InvalidAlgebra("subspace does not contain the unit".into()));
        }
        let rows = s.basis_vectors();
        let k = rows.len();
        let coords = |v: &[u32]| -> Result<Vec<u32>> {
            s.coordinates(v)
                .ok_or_else(|| Error::InvalidAlgebra("subspace is not closed under multiplication".into()))
        };
        let mut table = Vec::with_capacity(k * k);
        for x in &rows {
            for y in &rows {
                table.push(coords(&self.multiply(x, y))?);
            }
        }
        let unit = coords(&self.unit)?;
        let labels = (0..k).map(|i| format!("z{i}")).collect();
        let meta = Metadata { origin: Origin::Subquotient, ..Metadata::default() };
        Algebra::from_products(&self.field, labels, |i, j| table[i * k + j].clone(), unit, meta)
    }

    /// `A / I` for a two-sided ideal `I`, on the cosets of the basis vectors
    /// outside the pivots of `I`.
    pub fn quotient_by_ideal(&self, ideal: &Subspace) -> Result<Algebra> {
        if ideal.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch(ideal.ambient_dim(), self.dim));
        }
        if !self.is_two_sided_ideal(ideal) {
            return Err(Error::NotIdeal("subspace is not a two-sided ideal".into()));
        }
        let keep = ideal.non_pivots();
        let proj = ideal.complement_projector();
        let project = |v: &[u32]| -> Vec<u32> {
            let r = proj.mul_vec(v);
            keep.iter().map(|&i| r[i]).collect()
        };
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let unit = project(&self.unit);
        let meta = Metadata { origin: Origin::Subquotient, ..Metadata::default() };
        Algebra::from_products(
            &self.field,
            labels,
            |i, j| project(&self.mul_basis_dense(keep[i], keep[j])),
            unit,
            meta,
        )
    }

    pub fn label_of(&self, v: &[u32]) -> String {
        let mut parts = Vec::new();
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c == 1 {
                parts.push(self.labels[i].clone());
            } else {
                parts.push(format!("({})*{}", self.field.format(c), self.labels[i]));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

fn sparse(v: &[u32]) -> Vec<(u32, u32)> {
    v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k as u32, c)).collect()
}

/// `K[x]/(x^n)` with basis `1, x, ..., x^{n-1}`.
pub fn truncated_polynomial(field: &Field, n: usize) -> Algebra {
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut structure = Vec::new();
    for i in 0..n {
        for j in 0..n - i {
            structure.push((i, j, i + j, 1));
        }
    }
    let mut unit = vec![0; n];
    unit[0] = 1;
    Algebra::new(field, labels, &structure, unit, Metadata::default()).expect("valid truncated polynomial ring")
}

/// Full matrix algebra `Mat_n(K)` on matrix units `E_ij` (index `i*n+j`).
pub fn matrix_algebra(field: &Field, n: usize) -> Algebra {
    let labels = (0..n * n).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
    let mut structure = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                structure.push((i * n + j, j * n + l, i * n + l, 1));
            }
        }
    }
    let mut unit = vec![0; n * n];
    for i in 0..n {
        unit[i * n + i] = 1;
    }
    Algebra::new(field, labels, &structure, unit, Metadata::default()).expect("valid matrix algebra")
}

/// `K^n` with componentwise multiplication.
pub fn split_semisimple(field: &Field, n: usize) -> Algebra {
    let labels = (0..n).map(|i| format!("e{i}")).collect();
    let structure: Vec<_> = (0..n).map(|i| (i, i, i, 1)).collect();
    let meta = Metadata {
        idempotents: Some((0..n).collect()),
        arrow_ideal: true,
        split_basic: true,
        ..Metadata::default()
    };
    Algebra::new(field, labels, &structure, vec![1; n], meta).expect("valid product of fields")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn unit_acts_trivially() {
        let a = truncated_polynomial(&gf(2), 3);
        let x = a.basis_vector(1);
        assert_eq!(a.multiply(a.unit(), &x), x);
        assert_eq!(a.multiply(&x, &x), a.basis_vector(2));
        assert_eq!(a.pow(&x, 3), vec![0, 0, 0]);
    }

    #[test]
    fn matrix_units_multiply() {
        let m = matrix_algebra(&gf(2), 2);
        // E11 E12 = E12
        assert_eq!(m.multiply(&m.basis_vector(0), &m.basis_vector(1)), m.basis_vector(1));
    }

    #[test]
    fn non_associative_rejected() {
        let f = gf(2);
        // b1 b1 = b0 would need b0 = 1; make b1*b1 = b1 and b1*b2 = b2 but b2*b1 = b1
        let labels = vec!["1".into(), "a".into(), "b".into()];
        let structure = [
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 0, 1, 1),
            (0, 2, 2, 1),
            (2, 0, 2, 1),
            (1, 2, 2, 1),
            (2, 1, 1, 1),
        ];
        let r = Algebra::new(&f, labels, &structure, vec![1, 0, 0], Metadata::default());
        assert!(matches!(r, Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn commutator_space_examples() {
        let f = gf(3);
        let c = truncated_polynomial(&f, 3);
        assert!(c.commutator_space().is_zero());
        let m = matrix_algebra(&f, 3);
        assert_eq!(m.commutator_space().dim(), 8);
    }

    #[test]
    fn center_examples() {
        let f = gf(3);
        let c = truncated_polynomial(&f, 3);
        assert!(c.center().is_full());
        let m = matrix_algebra(&f, 2);
        let z = m.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(m.unit()));
    }

    #[test]
    fn radical_examples() {
        let f3 = gf(3);
        assert!(matrix_algebra(&f3, 2).radical().unwrap().is_zero());
        let f2 = gf(2);
        let r = truncated_polynomial(&f2, 2).radical().unwrap();
        assert_eq!(r.basis_vectors(), vec![vec![0, 1]]);
        let r4 = truncated_polynomial(&f2, 4).radical().unwrap();
        assert_eq!(r4.dim(), 3);
    }

    #[test]
    fn socle_examples() {
        let f2 = gf(2);
        let a = truncated_polynomial(&f2, 2);
        assert_eq!(a.socle().unwrap().basis_vectors(), vec![vec![0, 1]]);
        assert!(split_semisimple(&f2, 3).socle().unwrap().is_full());
    }

    #[test]
    fn cartan_examples() {
        let f2 = gf(2);
        assert_eq!(split_semisimple(&f2, 2).cartan_matrix().unwrap(), vec![vec![1, 0], vec![0, 1]]);
        assert!(matches!(truncated_polynomial(&f2, 2).cartan_matrix(), Err(Error::NoPresentation)));
    }

    #[test]
    fn quotient_and_subalgebra() {
        let f2 = gf(2);
        let a = truncated_polynomial(&f2, 3);
        let rad = a.radical().unwrap();
        let q = a.quotient_by_ideal(&rad).unwrap();
        assert_eq!(q.dim(), 1);
        let zero = a.quotient_by_ideal(&a.full_space()).unwrap();
        assert!(zero.is_zero_ring());
        let s = a.subalgebra(&a.center()).unwrap();
        assert_eq!(s.dim(), 3);
        let not_ideal = Subspace::span(&f2, 3, &[[1, 0, 0]]);
        assert!(matches!(a.quotient_by_ideal(&not_ideal), Err(Error::NotIdeal(_))));
    }

    #[test]
    fn change_basis_preserves_structure() {
        let f = gf(3);
        let a = truncated_polynomial(&f, 3);
        let basis = Matrix::from_rows(&f, 3, &[[1, 1, 0], [0, 1, 2], [0, 0, 1]]).unwrap();
        let b = a.change_basis(&basis, vec!["u".into(), "v".into(), "w".into()], Metadata::default()).unwrap();
        assert_eq!(b.center().dim(), 3);
        assert_eq!(b.radical().unwrap().dim(), 2);
    }
}

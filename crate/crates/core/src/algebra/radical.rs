//! Jacobson radical in characteristic p.
//!
//! Commutative algebras use the nilradical `ker F^k` of the Frobenius
//! `x -> x^p`. Otherwise the algebra is viewed over the prime field and the
//! ideals `I_i = {a in I_{i-1} : g_i(ab) = 0 for all b}` are computed, where
//! `g_i(x)` is the trace of the `p^i`-th power of an integer lift of the left
//! regular representation of `x`, taken modulo `p^{i+1}` and divided by
//! `p^i`. The last ideal, for `p^i <= dim`, is the radical.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, SemilinearMap, Subspace};

/// Radical with the mandatory consistency checks: the result must be a
/// nilpotent two-sided ideal whose quotient has zero radical.
pub(super) fn radical_validated(a: &Algebra) -> Result<Subspace> {
    let r = radical_char_p(a);
    if !a.is_two_sided_ideal(&r) {
        return Err(Error::RadicalFailure("result is not a two-sided ideal".into()));
    }
    if a.power_dims(&r).is_none() {
        return Err(Error::RadicalFailure("result is not nilpotent".into()));
    }
    let q = a
        .quotient_by_ideal(&r)
        .map_err(|e| Error::RadicalFailure(format!("quotient failed: {e}")))?;
    if !radical_char_p(&q).is_zero() {
        return Err(Error::RadicalFailure("quotient by the result is not semisimple".into()));
    }
    Ok(r)
}

/// Radical without validation.
pub fn radical_char_p(a: &Algebra) -> Subspace {
    if a.dim() == 0 {
        return a.zero_space();
    }
    if a.is_commutative() {
        nilradical(a)
    } else {
        trace_radical(a)
    }
}

fn nilradical(a: &Algebra) -> Subspace {
    let f = a.field();
    let d = a.dim();
    let p = f.characteristic() as u64;
    let cols: Vec<Vec<u32>> = (0..d).map(|i| a.pow(&a.basis_vector(i), p)).collect();
    let frob = SemilinearMap::new(Matrix::from_columns(f, d, &cols).expect("square"), 1).expect("square");
    let mut k = 0;
    let mut pk = 1u64;
    while pk < d as u64 {
        pk *= p;
        k += 1;
    }
    frob.power(k.max(1)).kernel()
}

/// Left regular representation over the prime field. Basis element
/// `(i, t)` of the prime-field algebra is `w^t b_i`, flattened to `i * e + t`.
struct PrimeView<'a> {
    a: &'a Algebra,
    e: usize,
    big_d: usize,
}

impl<'a> PrimeView<'a> {
    fn new(a: &'a Algebra) -> Self {
        let e = a.field().degree() as usize;
        PrimeView { a, e, big_d: a.dim() * e }
    }

    fn field(&self) -> &Field {
        self.a.field()
    }

    fn to_q(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field();
        (0..self.a.dim()).map(|i| f.from_coords(&v[i * self.e..(i + 1) * self.e]).expect("reduced digits")).collect()
    }

    fn to_p(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field();
        v.iter().flat_map(|&x| f.coords(x)).collect()
    }

    fn basis_element(&self, k: usize) -> Vec<u32> {
        let f = self.field();
        let (i, t) = (k / self.e, k % self.e);
        let mut v = vec![0; self.a.dim()];
        v[i] = f.pow(f.generator(), t as u64);
        v
    }

    fn mul_p(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.to_p(&self.a.multiply(&self.to_q(x), &self.to_q(y)))
    }

    /// Integer matrix (entries in `[0, p)`) of left multiplication by `x`.
    fn regular_rep(&self, x: &[u32]) -> Vec<Vec<u64>> {
        let n = self.big_d;
        let xq = self.to_q(x);
        let cols: Vec<Vec<u32>> = (0..n).map(|c| self.to_p(&self.a.multiply(&xq, &self.basis_element(c)))).collect();
        (0..n).map(|r| cols.iter().map(|col| col[r] as u64).collect()).collect()
    }
}

fn mat_mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], modulus: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i][k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = (out[i][j] + x * b[k][j]) % modulus;
            }
        }
    }
    out
}

/// `g_i(x)` for the regular representation matrix `m`.
fn trace_functional(m: Vec<Vec<u64>>, p: u64, i: u32) -> u32 {
    let pi = p.pow(i);
    let modulus = pi * p;
    let mut m = m;
    for _ in 0..i {
        // raise to the p-th power
        let base = m.clone();
        for _ in 1..p {
            m = mat_mul_mod(&m, &base, modulus);
        }
    }
    let tr = (0..m.len()).fold(0u64, |acc, k| (acc + m[k][k]) % modulus);
    debug_assert_eq!(tr % pi, 0);
    (tr / pi) as u32
}

fn trace_radical(a: &Algebra) -> Subspace {
    let view = PrimeView::new(a);
    let n = view.big_d;
    let fp = Field::prime(a.field().characteristic()).expect("characteristic is prime");
    let p = fp.characteristic() as u64;
    let mut l = 0u32;
    while p.pow(l + 1) <= n as u64 {
        l += 1;
    }
    let all: Vec<Vec<u32>> = (0..n)
        .map(|k| {
            let mut v = vec![0; n];
            v[k] = 1;
            v
        })
        .collect();
    let mut ideal = all.clone();
    for i in 0..=l {
        if ideal.is_empty() {
            break;
        }
        // a -> g_i(a b) is linear on I_{i-1}; impose it for every basis b.
        let cur = ideal.clone();
        let values: Vec<Vec<u32>> =
            cur.iter().map(|x| all.iter().map(|b| trace_functional(view.regular_rep(&view.mul_p(x, b)), p, i)).collect()).collect();
        let coeffs = Matrix::from_columns(&fp, n, &values).expect("one value per basis element").kernel();
        ideal = coeffs
            .basis()
            .row_iter()
            .map(|c| {
                let mut v = vec![0; n];
                for (ci, x) in c.iter().zip(&cur) {
                    fp.axpy(&mut v, *ci, x);
                }
                v
            })
            .collect();
    }
    let rows: Vec<Vec<u32>> = ideal.iter().map(|v| view.to_q(v)).collect();
    Subspace::span(a.field(), a.dim(), &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra, truncated_polynomial, Metadata};
    use alloc::string::String;

    fn cyclic_group_algebra(f: &Field, n: usize) -> Algebra {
        let labels: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
        let structure: Vec<_> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n, 1))).collect();
        let mut unit = vec![0; n];
        unit[0] = 1;
        Algebra::new(f, labels, &structure, unit, Metadata::default()).unwrap()
    }

    #[test]
    fn trace_radical_of_matrix_algebra_is_zero() {
        let f = Field::prime(2).unwrap();
        assert!(trace_radical(&matrix_algebra(&f, 2)).is_zero());
        let f4 = Field::default_for(2, 2).unwrap();
        assert!(trace_radical(&matrix_algebra(&f4, 2)).is_zero());
    }

    #[test]
    fn trace_radical_agrees_with_nilradical_on_commutative_inputs() {
        for (p, e, n) in [(2, 1, 4), (3, 1, 3), (2, 2, 3), (2, 1, 6), (3, 1, 6)] {
            let f = Field::default_for(p, e).unwrap();
            for a in [truncated_polynomial(&f, n), cyclic_group_algebra(&f, n)] {
                assert_eq!(trace_radical(&a), nilradical(&a), "p={p} e={e} n={n}");
            }
        }
    }

    #[test]
    fn cyclic_two_group_radical_is_augmentation_ideal() {
        let f = Field::prime(2).unwrap();
        let a = cyclic_group_algebra(&f, 4);
        let r = radical_validated(&a).unwrap();
        assert_eq!(r.dim(), 3);
        for row in r.basis().row_iter() {
            assert_eq!(row.iter().fold(0, |s, &x| f.add(s, x)), 0);
        }
    }
}

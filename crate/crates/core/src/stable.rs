//! Stable-equivalence invariants of basic algebras: the Cartan rank over
//! `K`, the projective and stable centres, and `HH_0^st`.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::kuelshammer::CommutatorQuotient;
use crate::linalg::{Matrix, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StableInvariants {
    pub cartan_rank_over_k: usize,
    pub dim_z_pr: usize,
    pub dim_z_st: usize,
    pub dim_hh0_st: usize,
    pub dim_commutator_quotient: usize,
}

/// Rank of the Cartan matrix with entries reduced into `K`.
pub fn cartan_rank(a: &Algebra) -> Result<usize> {
    let c = a.cartan_matrix()?;
    let f = a.field();
    let p = f.characteristic() as u64;
    let n = c.len();
    let m = Matrix::from_fn(f, n, n, |i, j| (c[i][j] % p) as u32);
    Ok(m.rank())
}

/// `dim Z^pr(A)`, taken to be the Cartan rank over `K`. Only meaningful for
/// symmetric split basic algebras.
pub fn dim_projective_center(a: &Algebra) -> Result<usize> {
    cartan_rank(a)
}

/// `τ_i(x)`: trace of left multiplication by `x` on `A e_i`, for every
/// vertex idempotent `e_i`.
pub fn trace_functionals(a: &Algebra, x: &[u32]) -> Result<Vec<u32>> {
    let ids = a.metadata().idempotents.as_ref().ok_or(Error::NoPresentation)?;
    let f = a.field();
    let mut out = Vec::with_capacity(ids.len());
    for &e in ids {
        let proj = projective(a, e);
        let mut tr = 0;
        for (j, s) in proj.basis().row_iter().enumerate() {
            let c = proj.coordinates(&a.multiply(x, s)).ok_or_else(|| {
                Error::InvariantViolation(format!("A e_{e} is not closed under left multiplication"))
            })?;
            tr = f.add(tr, c[j]);
        }
        out.push(tr);
    }
    Ok(out)
}

fn projective(a: &Algebra, e: usize) -> Subspace {
    let ev = a.basis_vector(e);
    let rows: Vec<Vec<u32>> = (0..a.dim()).map(|k| a.multiply(&a.basis_vector(k), &ev)).collect();
    Subspace::span(a.field(), a.dim(), &rows)
}

/// `HH_0^st(A)`, the common kernel of the `τ_i` on `A/[A,A]`, in the
/// coordinates of [`CommutatorQuotient`].
pub fn hh0_stable(a: &Algebra) -> Result<Subspace> {
    let cq = CommutatorQuotient::new(a);
    hh0_stable_in(a, &cq)
}

fn hh0_stable_in(a: &Algebra, cq: &CommutatorQuotient) -> Result<Subspace> {
    let m = cq.dim();
    let mut cols = Vec::with_capacity(m);
    for t in 0..m {
        let mut e = alloc::vec![0; m];
        e[t] = 1;
        cols.push(trace_functionals(a, &cq.lift(&e))?);
    }
    let n = a.metadata().idempotents.as_ref().map_or(0, |v| v.len());
    if m == 0 {
        return Ok(Subspace::zero(a.field(), 0));
    }
    Ok(Matrix::from_columns(a.field(), n, &cols)?.kernel())
}

/// All stable invariants. The identity
/// `dim HH_0^st + rank_K C_A = dim A/[A,A]` is checked and a failure is an
/// [`Error::InvariantViolation`].
pub fn stable_invariants(a: &Algebra) -> Result<StableInvariants> {
    let cq = CommutatorQuotient::new(a);
    let rank = cartan_rank(a)?;
    let hh0 = hh0_stable_in(a, &cq)?;
    if hh0.dim() + rank != cq.dim() {
        return Err(Error::InvariantViolation(format!(
            "dim HH0_st + rank C = {} + {rank}, but dim A/[A,A] = {}",
            hh0.dim(),
            cq.dim()
        )));
    }
    let dim_z = a.center().dim();
    Ok(StableInvariants {
        cartan_rank_over_k: rank,
        dim_z_pr: rank,
        dim_z_st: dim_z - rank,
        dim_hh0_st: hh0.dim(),
        dim_commutator_quotient: cq.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::split_semisimple;
    use crate::field::Field;
    use crate::presentation::{quotient_algebra, Quiver, Relation};
    use alloc::string::ToString;
    use alloc::vec;

    fn dual_numbers(p: u32) -> Algebra {
        let q = Quiver::new(1, vec![("x".to_string(), 0, 0)]).unwrap();
        let f = Field::prime(p).unwrap();
        quotient_algebra(&q, &[Relation::from_words(&[(1, "x*x")])], &f, 2).unwrap().algebra
    }

    #[test]
    fn cartan_rank_examples() {
        assert_eq!(cartan_rank(&dual_numbers(2)).unwrap(), 0);
        assert_eq!(cartan_rank(&dual_numbers(3)).unwrap(), 1);
        let f = Field::prime(2).unwrap();
        assert_eq!(cartan_rank(&split_semisimple(&f, 3)).unwrap(), 3);
        assert!(matches!(cartan_rank(&crate::algebra::truncated_polynomial(&f, 2)), Err(Error::NoPresentation)));
    }

    #[test]
    fn hh0_of_dual_numbers() {
        let a = dual_numbers(2);
        assert_eq!(trace_functionals(&a, &[1, 0]).unwrap(), vec![0]);
        assert_eq!(hh0_stable(&a).unwrap().dim(), 2);
        let s = stable_invariants(&a).unwrap();
        assert_eq!((s.dim_hh0_st, s.cartan_rank_over_k, s.dim_commutator_quotient), (2, 0, 2));
        assert_eq!(s.dim_z_st, 2);
        let s3 = stable_invariants(&dual_numbers(3)).unwrap();
        assert_eq!((s3.dim_hh0_st, s3.dim_z_pr), (1, 1));
    }

    #[test]
    fn semisimple_has_no_stable_part() {
        let f = Field::prime(2).unwrap();
        let a = split_semisimple(&f, 2);
        assert!(hh0_stable(&a).unwrap().is_zero());
        assert_eq!(trace_functionals(&a, &[1, 0]).unwrap(), vec![1, 0]);
    }
}

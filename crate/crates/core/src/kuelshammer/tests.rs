use super::*;
use crate::algebra::{matrix_algebra, split_semisimple, truncated_polynomial, Metadata};
use crate::field::Field;
use crate::form::BilinearForm;
use crate::presentation::{CayleyTable, Quiver};
use alloc::string::ToString;

fn gf(p: u32, e: u32) -> Field {
    Field::default_for(p, e).unwrap()
}

/// `⟨x^i, x^j⟩` = coefficient of `x^{n-1}` in `x^{i+j}`.
fn truncated_form(f: &Field, n: usize) -> BilinearForm {
    BilinearForm::new(Matrix::from_fn(f, n, n, |i, j| u32::from(i + j == n - 1))).unwrap()
}

fn group_form(g: &CayleyTable, f: &Field) -> BilinearForm {
    BilinearForm::new(Matrix::from_fn(f, g.order(), g.order(), |i, j| u32::from(g.mul(i, j) == 0))).unwrap()
}

fn all_vectors(f: &Field, n: usize) -> Vec<Vec<u32>> {
    let q = f.order() as u64;
    (0..q.pow(n as u32)).map(|x| digits(x, q, n)).collect()
}

fn digits(mut x: u64, q: u64, n: usize) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let d = (x % q) as u32;
            x /= q;
            d
        })
        .collect()
}

#[test]
fn mu_on_small_algebras() {
    let f = gf(2, 1);
    let kk = split_semisimple(&f, 2);
    let cq = CommutatorQuotient::new(&kk);
    assert!(mu_map(&kk, &cq).matrix().is_identity());

    let dual = truncated_polynomial(&f, 2);
    let mu = mu_map(&dual, &CommutatorQuotient::new(&dual));
    assert_eq!(mu.apply(&[1, 0]), vec![1, 0]);
    assert_eq!(mu.apply(&[0, 1]), vec![0, 0]);

    let m2 = matrix_algebra(&f, 2);
    let cq = CommutatorQuotient::new(&m2);
    assert_eq!(cq.dim(), 1);
    assert!(mu_map(&m2, &cq).matrix().is_identity());
}

#[test]
fn projection_and_lift() {
    let f = gf(3, 1);
    let m2 = matrix_algebra(&f, 2);
    let cq = CommutatorQuotient::new(&m2);
    for t in 0..cq.dim() {
        let mut e = vec![0; cq.dim()];
        e[t] = 1;
        assert_eq!(cq.project(&cq.lift(&e)), e);
    }
    // E11 and E22 agree modulo commutators
    assert_eq!(cq.project(&m2.basis_vector(0)), cq.project(&m2.basis_vector(3)));
}

#[test]
fn t_spaces_of_dual_numbers() {
    let f = gf(2, 1);
    let a = truncated_polynomial(&f, 2);
    let t = t_spaces(&a, None).unwrap();
    assert!(t.t[0].is_zero());
    assert_eq!(t.t[1], Subspace::span(&f, 2, &[[0, 1]]));
    assert_eq!(t.ta, t.t[1]);
    assert_eq!(t.stabilization, 1);
}

#[test]
fn brauer_count_for_s3() {
    for p in [2, 3] {
        let g = CayleyTable::symmetric(3);
        let a = g.group_algebra(&gf(p, 1));
        let t = t_spaces(&a, None).unwrap();
        assert_eq!(a.dim() - t.ta.dim(), g.p_regular_class_count(p as u64));
    }
}

fn check_zeta_identity(a: &Algebra, form: &BilinearForm) {
    let f = a.field();
    let p = f.characteristic() as u64;
    let t = tower(a, Some(form), Some(1)).unwrap();
    let zeta = t.zeta.as_ref().unwrap();
    let center = t.center.as_ref().unwrap();
    let zb = center.basis();
    for zc in all_vectors(f, center.dim()) {
        let z = zb.vec_mul(&zc);
        let zz = zb.vec_mul(&zeta.apply(&zc));
        for x in all_vectors(f, a.dim()) {
            let lhs = f.pow(form.eval(&zz, &x), p);
            assert_eq!(lhs, form.eval(&z, &a.pow(&x, p)));
        }
    }
}

#[test]
fn zeta_defining_identity() {
    let f2 = gf(2, 1);
    check_zeta_identity(&truncated_polynomial(&f2, 2), &truncated_form(&f2, 2));
    let f4 = gf(2, 2);
    check_zeta_identity(&truncated_polynomial(&f4, 3), &truncated_form(&f4, 3));
    let c2 = CayleyTable::cyclic(2);
    check_zeta_identity(&c2.group_algebra(&f4), &group_form(&c2, &f4));
    let f3 = gf(3, 1);
    let s3 = CayleyTable::symmetric(3);
    let a = s3.group_algebra(&f3);
    let t = tower(&a, Some(&group_form(&s3, &f3)), None).unwrap();
    assert_eq!(t.perp.len(), t.t.len());
}

#[test]
fn zeta_is_identity_when_semisimple_commutative() {
    let f = gf(2, 2);
    let a = split_semisimple(&f, 3);
    let form = BilinearForm::new(Matrix::identity(&f, 3)).unwrap();
    let t = tower(&a, Some(&form), None).unwrap();
    assert!(t.zeta.unwrap().matrix().is_identity());
}

#[test]
fn kuelshammer_ideals_of_dual_numbers() {
    let f = gf(2, 1);
    let a = truncated_polynomial(&f, 2);
    let t = tower(&a, Some(&truncated_form(&f, 2)), None).unwrap();
    assert_eq!(t.perp[0], a.center());
    assert_eq!(t.perp[1], Subspace::span(&f, 2, &[[0, 1]]));
    assert_eq!(t.stable_perp().unwrap(), &reynolds_ideal(&a).unwrap());
}

#[test]
fn non_symmetric_form_is_rejected() {
    let f = gf(2, 1);
    let a = truncated_polynomial(&f, 2);
    let form = BilinearForm::new(Matrix::from_rows(&f, 2, &[[0, 1], [0, 0]]).unwrap()).unwrap();
    assert!(matches!(tower(&a, Some(&form), None), Err(Error::NotSymmetric(_))));
}

#[test]
fn reynolds_examples() {
    let f = gf(2, 1);
    let c2 = CayleyTable::cyclic(2).group_algebra(&f);
    assert_eq!(reynolds_ideal(&c2).unwrap().basis_vectors(), vec![vec![1, 1]]);
    let s3 = CayleyTable::symmetric(3).group_algebra(&f);
    assert_eq!(reynolds_ideal(&s3).unwrap().dim(), 2);
    let kk = split_semisimple(&f, 2);
    assert_eq!(reynolds_ideal(&kk).unwrap(), kk.center());
}

#[test]
fn quotient_ring_examples() {
    let f = gf(2, 1);
    let a = truncated_polynomial(&f, 2);
    let z = a.center();
    assert_eq!(quotient_ring(&a, &z, &a.zero_space()).unwrap().dim(), 2);
    assert!(quotient_ring(&a, &z, &z).unwrap().is_zero_ring());
    let t = tower(&a, Some(&truncated_form(&f, 2)), None).unwrap();
    let q = quotient_ring(&a, &z, &t.perp[1]).unwrap();
    assert_eq!(q.dim(), 1);
    let not_ideal = Subspace::span(&f, 2, &[[1, 0]]);
    assert!(quotient_ring(&a, &z, &not_ideal).is_err());
}

#[test]
fn fingerprint_of_dual_numbers() {
    let f = gf(2, 1);
    let fp = ring_fingerprint(&truncated_polynomial(&f, 2)).unwrap();
    assert_eq!(fp.dim, 2);
    assert_eq!(fp.radical_powers, vec![1]);
    assert_eq!(fp.frobenius, FrobeniusDims { kernel: 1, image: 1 });
    assert_eq!(fp.frobenius_on_radical, FrobeniusDims { kernel: 1, image: 0 });
    assert_eq!(fp.frobenius_on_radical_square, FrobeniusDims { kernel: 0, image: 0 });
    assert_eq!(fp.idempotents, Some(2));
    let kk = ring_fingerprint(&split_semisimple(&f, 2)).unwrap();
    assert_eq!(kk.idempotents, Some(4));
    assert_eq!(fp.first_difference(&kk).unwrap().0, "radical powers");
}

/// `K[x]/x^3` rewritten in the basis `1, x + x^2, x^2`.
fn skewed_cubic(f: &Field) -> Algebra {
    let a = truncated_polynomial(f, 3);
    let basis = Matrix::from_rows(f, 3, &[[1, 0, 0], [0, 1, 1], [0, 0, 1]]).unwrap();
    let labels = ["1", "y", "y^2"].iter().map(|s| s.to_string()).collect();
    a.change_basis(&basis, labels, Metadata::default()).unwrap()
}

#[test]
fn fingerprint_is_basis_independent() {
    let f = gf(2, 1);
    let a = ring_fingerprint(&truncated_polynomial(&f, 3)).unwrap();
    let b = ring_fingerprint(&skewed_cubic(&f)).unwrap();
    assert_eq!(a, b);
}

/// `K[x,y]/(x^2, xy, y^2)`.
fn square_zero(f: &Field) -> Algebra {
    let labels = ["1", "x", "y"].iter().map(|s| s.to_string()).collect();
    let structure = [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1)];
    Algebra::new(f, labels, &structure, vec![1, 0, 0], Metadata::default()).unwrap()
}

#[test]
fn iso_search_examples() {
    let f = gf(2, 1);
    let cubic = truncated_polynomial(&f, 3);
    assert!(matches!(iso_search_local(&cubic, &cubic).unwrap(), IsoSearch::Isomorphic(_)));
    let dual = truncated_polynomial(&f, 2);
    assert_eq!(iso_search_local(&dual, &split_semisimple(&f, 2)).unwrap(), IsoSearch::NotIsomorphic);
    assert_eq!(iso_search_local(&cubic, &square_zero(&f)).unwrap(), IsoSearch::NotIsomorphic);
    assert!(matches!(
        iso_search_local(&split_semisimple(&f, 2), &split_semisimple(&f, 2)),
        Err(Error::NotLocal)
    ));
    let big = truncated_polynomial(&f, 9);
    assert!(matches!(iso_search_local(&big, &big), Err(Error::SearchBoundExceeded(_))));
}

#[test]
fn iso_search_witness_is_multiplicative() {
    for f in [gf(2, 1), gf(3, 1), gf(2, 2)] {
        let a = truncated_polynomial(&f, 3);
        let b = skewed_cubic(&f);
        let IsoSearch::Isomorphic(m) = iso_search_local(&a, &b).unwrap() else {
            panic!("isomorphic rings not matched");
        };
        assert!(m.is_invertible());
        for i in 0..3 {
            for j in 0..3 {
                let (x, y) = (a.basis_vector(i), a.basis_vector(j));
                assert_eq!(m.mul_vec(&a.multiply(&x, &y)), b.multiply(&m.mul_vec(&x), &m.mul_vec(&y)));
            }
        }
    }
}

#[test]
fn iso_search_separates_char_two_quadratic_rings() {
    // K[x,y]/(x^2, y^2) and K[x,y]/(x^2 + xy, y^2) share the radical
    // filtration; only the second has a nonzero square in rad.
    let f = gf(2, 1);
    let labels = || ["1", "x", "y", "xy"].iter().map(|s| s.to_string()).collect();
    let mut base = vec![(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1), (0, 3, 3, 1), (3, 0, 3, 1)];
    base.extend([(1, 2, 3, 1), (2, 1, 3, 1)]);
    let a = Algebra::new(&f, labels(), &base, vec![1, 0, 0, 0], Metadata::default()).unwrap();
    let mut twisted = base.clone();
    twisted.push((1, 1, 3, 1));
    let b = Algebra::new(&f, labels(), &twisted, vec![1, 0, 0, 0], Metadata::default()).unwrap();
    assert_eq!(iso_search_local(&a, &b).unwrap(), IsoSearch::NotIsomorphic);
    assert_ne!(ring_fingerprint(&a).unwrap(), ring_fingerprint(&b).unwrap());
}

#[test]
fn trivial_extension_of_a2() {
    let f = gf(2, 1);
    let q = Quiver::new(2, vec![("a".to_string(), 0, 1)]).unwrap();
    let a = crate::presentation::quotient_algebra(&q, &[], &f, 1).unwrap().algebra;
    let check = trivial_extension_check(&a, 2).unwrap();
    assert_eq!(check.extension.dim(), 6);
    assert!(check.holds());
}

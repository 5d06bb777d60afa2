use std::sync::OnceLock;

use kuelshammer_core::families::{instantiate, Instance};
use kuelshammer_core::kuelshammer::{mu_map, tower, CommutatorQuotient};
use kuelshammer_core::{Field, Matrix, SemilinearMap, Subspace};
use proptest::prelude::*;

const FIELDS: &[(u32, u32)] = &[(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2)];

fn field(i: usize) -> Field {
    let (p, e) = FIELDS[i % FIELDS.len()];
    Field::default_for(p, e).unwrap()
}

fn elements(f: &Field, n: usize) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0..f.order(), n)
}

proptest! {
    #[test]
    fn field_axioms(i in 0usize..6, seed in proptest::collection::vec(any::<u32>(), 3)) {
        let f = field(i);
        let [a, b, c] = [seed[0] % f.order(), seed[1] % f.order(), seed[2] % f.order()];
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        // Frobenius is a field automorphism
        prop_assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
        prop_assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
        prop_assert_eq!(f.inv_frobenius(f.frobenius(a, 1)), a);
        prop_assert_eq!(f.pow(a, f.order() as u64), a);
    }

    #[test]
    fn rank_nullity(i in 0usize..6, rows in 1usize..7, cols in 1usize..7, seed in any::<u64>()) {
        let f = field(i);
        let mut s = seed;
        let m = Matrix::from_fn(&f, rows, cols, |_, _| {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 33) % f.order() as u64) as u32
        });
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), cols);
        for v in k.basis().row_iter() {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
        prop_assert_eq!(m.image().dim(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn subspace_dimension_formula(i in 0usize..6, n in 1usize..6, seed in any::<u64>()) {
        let f = field(i);
        let mut s = seed;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 33) % f.order() as u64) as u32
        };
        let u: Vec<Vec<u32>> = (0..n / 2 + 1).map(|_| (0..n).map(|_| next()).collect()).collect();
        let w: Vec<Vec<u32>> = (0..n / 2 + 1).map(|_| (0..n).map(|_| next()).collect()).collect();
        let (u, w) = (Subspace::span(&f, n, &u), Subspace::span(&f, n, &w));
        let sum = u.sum(&w).unwrap();
        let cap = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + w.dim());
        prop_assert!(sum.contains_subspace(&u).unwrap());
        prop_assert!(u.contains_subspace(&cap).unwrap());
    }

    #[test]
    fn adjoint_identity(i in 0usize..6, n in 1usize..5, twist in 0i64..3, seed in any::<u64>()) {
        let f = field(i);
        let mut s = seed;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 33) % f.order() as u64) as u32
        };
        let m = Matrix::from_fn(&f, n, n, |_, _| next());
        let map = SemilinearMap::new(m, twist).unwrap();
        let mut g = Matrix::from_fn(&f, n, n, |_, _| next());
        if !g.is_invertible() {
            g = Matrix::identity(&f, n);
        }
        let adj = map.adjoint(&g).unwrap();
        let v: Vec<u32> = (0..n).map(|_| next()).collect();
        let w: Vec<u32> = (0..n).map(|_| next()).collect();
        let pair = |x: &[u32], y: &[u32]| f.dot(x, &g.mul_vec(y));
        prop_assert_eq!(pair(&v, &map.apply(&w)), f.frobenius(pair(&adj.apply(&v), &w), map.twist()));
    }
}

/// Small registry instances, one per construction route.
fn instances() -> &'static [Instance] {
    static CELL: OnceLock<Vec<Instance>> = OnceLock::new();
    CELL.get_or_init(|| {
        let gf2 = Field::prime(2).unwrap();
        let gf3 = Field::prime(3).unwrap();
        let gf4 = Field::default_for(2, 2).unwrap();
        vec![
            instantiate("Nil[n=3]", &gf2).unwrap(),
            instantiate("D1A1[k=2]", &gf2).unwrap(),
            instantiate("SD2B1[k=2,t=3,c=1]", &gf2).unwrap(),
            instantiate("Ln[n=3,j=1]", &gf2).unwrap(),
            instantiate("Pre[n=3]", &gf3).unwrap(),
            instantiate("Path[n=3]", &gf3).unwrap(),
            instantiate("Sym[k=3]", &gf3).unwrap(),
            instantiate("Cyc[n=4]", &gf2).unwrap(),
            instantiate("Aq[q=w]", &gf4).unwrap(),
        ]
    })
}

fn instance_and_pair() -> impl Strategy<Value = (usize, Vec<u32>, Vec<u32>)> {
    (0..instances().len()).prop_flat_map(|i| {
        let a = &instances()[i].algebra;
        (Just(i), elements(a.field(), a.dim()), elements(a.field(), a.dim()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mu_is_well_defined((i, x, y) in instance_and_pair()) {
        let a = &instances()[i].algebra;
        let f = a.field();
        let p = f.characteristic() as u64;
        let cq = CommutatorQuotient::new(a);
        let sum: Vec<u32> = x.iter().zip(&y).map(|(&u, &v)| f.add(u, v)).collect();
        let lhs = cq.project(&a.pow(&sum, p));
        let xp = a.pow(&x, p);
        let yp = a.pow(&y, p);
        let rhs = cq.project(&xp.iter().zip(&yp).map(|(&u, &v)| f.add(u, v)).collect::<Vec<_>>());
        prop_assert_eq!(lhs, rhs);
        prop_assert!(cq.project(&a.pow(&a.commutator(&x, &y), p)).iter().all(|&c| c == 0));
        // μ agrees with the p-th power on representatives
        let mu = mu_map(a, &cq);
        prop_assert_eq!(mu.apply(&cq.project(&x)), cq.project(&xp));
    }
}

#[test]
fn towers_are_monotone_and_perps_are_ideals() {
    for inst in instances() {
        let a = &inst.algebra;
        let tw = tower(a, inst.symmetric_form.as_ref(), None).unwrap();
        for w in tw.t.windows(2) {
            assert!(w[1].contains_subspace(&w[0]).unwrap(), "{}", inst.name);
        }
        assert!(tw.ta.contains_subspace(tw.t.last().unwrap()).unwrap());
        assert_eq!(tw.ta, a.radical().unwrap().sum(tw.quotient.commutator()).unwrap(), "{}", inst.name);
        if let Some(z) = &tw.center {
            for w in tw.perp.windows(2) {
                assert!(w[0].contains_subspace(&w[1]).unwrap(), "{}", inst.name);
            }
            for i in &tw.perp {
                for r in i.basis().row_iter() {
                    for c in z.basis().row_iter() {
                        assert!(i.contains(&a.multiply(c, r)), "{}", inst.name);
                    }
                }
            }
        }
    }
}

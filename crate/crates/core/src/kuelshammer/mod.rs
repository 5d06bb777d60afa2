//! The p-power map on `A/[A,A]`, the spaces `T_n(A)`, Külshammer ideals and
//! the Reynolds ideal.

mod quotient;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Origin};
use crate::error::{Error, Result};
use crate::form::BilinearForm;
use crate::linalg::{refine_kernel, Matrix, SemilinearMap, Subspace};
use crate::presentation::{trivial_extension, CayleyTable};

pub use quotient::{
    iso_search_local, quotient_ring, ring_fingerprint, FrobeniusDims, IsoSearch, RingFingerprint, ISO_SEARCH_LIMIT,
};

/// Levels computed when the tower has not stabilised earlier.
pub const TOWER_CAP: usize = 16;

/// `A/[A,A]` with coset representatives `b_c` for the basis indices `c` that
/// are not pivots of the commutator RREF.
#[derive(Debug, Clone)]
pub struct CommutatorQuotient {
    commutator: Subspace,
    complement: Vec<usize>,
    projector: Matrix,
}

impl CommutatorQuotient {
    pub fn new(a: &Algebra) -> CommutatorQuotient {
        let commutator = a.commutator_space();
        let complement = commutator.non_pivots();
        let projector = commutator.complement_projector();
        CommutatorQuotient { commutator, complement, projector }
    }

    pub fn commutator(&self) -> &Subspace {
        &self.commutator
    }

    /// Basis indices of the coset representatives.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// Coordinates of `a + [A,A]` in the representative basis.
    pub fn project(&self, a: &[u32]) -> Vec<u32> {
        let r = self.projector.mul_vec(a);
        self.complement.iter().map(|&c| r[c]).collect()
    }

    /// The representative with the given coordinates.
    pub fn lift(&self, coords: &[u32]) -> Vec<u32> {
        let mut v = vec![0; self.commutator.ambient_dim()];
        for (&c, &x) in self.complement.iter().zip(coords) {
            v[c] = x;
        }
        v
    }

    /// `{a : project(a) in s}`, i.e. `[A,A] + lift(s)`.
    pub fn preimage(&self, s: &Subspace) -> Subspace {
        let f = self.commutator.field();
        let mut rows = self.commutator.basis_vectors();
        rows.extend(s.basis().row_iter().map(|r| self.lift(r)));
        Subspace::span(f, self.commutator.ambient_dim(), &rows)
    }
}

/// `a + [A,A] -> a^p + [A,A]` as a semilinear map with twist 1.
pub fn mu_map(a: &Algebra, cq: &CommutatorQuotient) -> SemilinearMap {
    let f = a.field();
    let p = f.characteristic() as u64;
    let cols: Vec<Vec<u32>> = cq.complement.iter().map(|&c| cq.project(&a.pow(&a.basis_vector(c), p))).collect();
    let m = Matrix::from_columns(f, cq.dim(), &cols).expect("square");
    SemilinearMap::new(m, 1).expect("square")
}

/// The ascending chain `T_0 = [A,A] ⊆ T_1 ⊆ ...` and, for a symmetrizing
/// form, the descending chain of Külshammer ideals.
#[derive(Debug, Clone)]
pub struct KuelshammerTower {
    pub quotient: CommutatorQuotient,
    pub mu: SemilinearMap,
    /// `T_0, ..., T_N`.
    pub t: Vec<Subspace>,
    /// The stabilised term `TA`.
    pub ta: Subspace,
    /// Least `n` with `T_n = T_{n+1}`.
    pub stabilization: usize,
    pub center: Option<Subspace>,
    pub zeta: Option<SemilinearMap>,
    /// `T_0^⊥, ..., T_N^⊥` inside `A`.
    pub perp: Vec<Subspace>,
}

impl KuelshammerTower {
    pub fn depth(&self) -> usize {
        self.t.len() - 1
    }

    /// The Reynolds ideal as the last term of the Külshammer chain.
    pub fn stable_perp(&self) -> Option<&Subspace> {
        self.perp.get(self.stabilization.min(self.depth()))
    }
}

/// `T_n` for `n = 0..=N`. `depth = None` runs to stabilisation (at least one
/// step, at most [`TOWER_CAP`]).
///
/// Asserts `TA = rad(A) + [A,A]` whenever the radical is available.
pub fn t_spaces(a: &Algebra, depth: Option<usize>) -> Result<KuelshammerTower> {
    let quotient = CommutatorQuotient::new(a);
    let mu = mu_map(a, &quotient);
    // ker μ^n, n = 0, 1, ... until it stops growing
    let f = a.field();
    let m = quotient.dim();
    let mut kernels = vec![Subspace::zero(f, m)];
    let mut power = SemilinearMap::identity(f, m);
    loop {
        power = mu.compose(&power)?;
        let k = power.kernel();
        let done = k.dim() == kernels.last().expect("nonempty").dim();
        kernels.push(k);
        if done {
            break;
        }
    }
    let stabilization = kernels.len() - 2;
    let depth = depth.unwrap_or_else(|| stabilization.clamp(1, TOWER_CAP));
    let t: Vec<Subspace> = (0..=depth).map(|n| quotient.preimage(&kernels[n.min(stabilization)])).collect();
    let ta = quotient.preimage(&kernels[stabilization]);
    if let Ok(rad) = a.radical() {
        if rad.sum(quotient.commutator())? != ta {
            return Err(Error::InvariantViolation("TA differs from rad(A) + [A,A]".into()));
        }
    }
    Ok(KuelshammerTower { quotient, mu, t, ta, stabilization, center: None, zeta: None, perp: Vec::new() })
}

/// The adjoint `ζ` of `μ` for the pairing `Z(A) × A/[A,A] -> K` induced by
/// a symmetric associative nondegenerate form. Works in the RREF basis of
/// `center` and satisfies `⟨ζ(z), a⟩^p = ⟨z, a^p⟩`.
pub fn zeta_map(
    a: &Algebra,
    form: &BilinearForm,
    cq: &CommutatorQuotient,
    mu: &SemilinearMap,
    center: &Subspace,
) -> Result<SemilinearMap> {
    if !form.is_symmetric() {
        return Err(Error::NotSymmetric("zeta needs a symmetric form".into()));
    }
    if center.dim() != cq.dim() {
        return Err(Error::InvariantViolation(format!(
            "dim Z(A) = {} but dim A/[A,A] = {}",
            center.dim(),
            cq.dim()
        )));
    }
    let f = a.field();
    let reps: Vec<Vec<u32>> = (0..cq.dim()).map(|t| cq.lift(&unit(cq.dim(), t))).collect();
    let pairing = Matrix::from_fn(f, cq.dim(), cq.dim(), |i, t| form.eval(center.basis().row(i), &reps[t]));
    mu.adjoint(&pairing)
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Adds the Külshammer ideals to `tower`, computed both as
/// `T_n^⊥ ∩ Z(A)` and as `im ζ^n`. Disagreement is a [`Error::RouteMismatch`].
/// Each ideal is also checked to be closed under multiplication by `Z(A)`.
pub fn kuelshammer_ideals(a: &Algebra, form: &BilinearForm, tower: &mut KuelshammerTower) -> Result<()> {
    let f = a.field();
    let center = a.center();
    let zeta = zeta_map(a, form, &tower.quotient, &tower.mu, &center)?;
    let zb = center.basis();
    let to_a = |s: &Subspace| -> Result<Subspace> {
        let rows: Vec<Vec<u32>> = s.basis().row_iter().map(|c| zb.vec_mul(c)).collect();
        Ok(Subspace::span(f, a.dim(), &rows))
    };
    let mut perp = Vec::with_capacity(tower.t.len());
    let mut power = SemilinearMap::identity(f, center.dim());
    for (n, t) in tower.t.iter().enumerate() {
        if n > 0 {
            power = zeta.compose(&power)?;
        }
        let orth = form.orthogonal(t)?.intersect(&center)?;
        let image = to_a(&power.image())?;
        if orth != image {
            return Err(Error::RouteMismatch(n));
        }
        for r in orth.basis().row_iter() {
            for z in zb.row_iter() {
                if !orth.contains(&a.multiply(z, r)) {
                    return Err(Error::InvariantViolation(format!("T_{n}^perp is not an ideal of Z(A)")));
                }
            }
        }
        perp.push(orth);
    }
    tower.center = Some(center);
    tower.zeta = Some(zeta);
    tower.perp = perp;
    Ok(())
}

/// `T_n` and, when `form` is given, the Külshammer ideals.
pub fn tower(a: &Algebra, form: Option<&BilinearForm>, depth: Option<usize>) -> Result<KuelshammerTower> {
    let mut t = t_spaces(a, depth)?;
    if let Some(form) = form {
        kuelshammer_ideals(a, form, &mut t)?;
    }
    Ok(t)
}

/// `{z in Z(A) : z r = 0 for r in rad(A)}`.
pub fn center_annihilator_of_radical(a: &Algebra) -> Result<Subspace> {
    let rad = a.radical()?;
    let mut k = a.center().basis_vectors();
    for r in rad.basis().row_iter() {
        k = refine_kernel(a.field(), k, |z| a.multiply(z, r));
    }
    Ok(Subspace::span(a.field(), a.dim(), &k))
}

/// `R(A) = Z(A) ∩ soc(A)`. For group algebras this is cross-checked against
/// the span of the section sums and the annihilator of the radical in the
/// centre.
pub fn reynolds_ideal(a: &Algebra) -> Result<Subspace> {
    let r = a.center().intersect(&a.socle()?)?;
    if let Origin::Group { table } = &a.metadata().origin {
        let g = CayleyTable::new(table.clone())?;
        if g.reynolds_class_sums(a.field()) != r {
            return Err(Error::InvariantViolation("Reynolds ideal differs from the span of section sums".into()));
        }
        if center_annihilator_of_radical(a)? != r {
            return Err(Error::InvariantViolation("Reynolds ideal differs from Ann_Z(rad)".into()));
        }
    }
    Ok(r)
}

/// Comparison of the Külshammer ideals of the trivial extension `T(A)` with
/// the spaces computed in `A`.
#[derive(Debug, Clone)]
pub struct TrivialExtensionCheck {
    pub extension: Algebra,
    pub form: BilinearForm,
    /// `T_n(TA)^⊥` for `n = 0..=N`.
    pub ideals: Vec<Subspace>,
    /// `Ann(T_n A) × 0` for `n = 1..=N` at index `n`, and
    /// `Ann([A,A]) × Z(A)` at index 0.
    pub expected: Vec<Subspace>,
}

impl TrivialExtensionCheck {
    pub fn holds(&self) -> bool {
        self.ideals == self.expected
    }
}

/// Builds `T(A)`, computes its Külshammer ideals to depth `N` and the
/// subspaces they are expected to equal.
pub fn trivial_extension_check(a: &Algebra, depth: usize) -> Result<TrivialExtensionCheck> {
    let d = a.dim();
    let f = a.field();
    let (extension, form) = trivial_extension(a)?;
    let te = tower(&extension, Some(&form), Some(depth))?;
    let ta = t_spaces(a, Some(depth))?;
    let identity = Matrix::identity(f, d);
    let embed = |dual: &Subspace, base: &Subspace| -> Subspace {
        let mut rows: Vec<Vec<u32>> = dual.basis().row_iter().map(|r| [r, &vec![0; d][..]].concat()).collect();
        rows.extend(base.basis().row_iter().map(|r| [&vec![0; d][..], r].concat()));
        Subspace::span(f, 2 * d, &rows)
    };
    let mut expected = Vec::with_capacity(depth + 1);
    for (n, t) in ta.t.iter().enumerate() {
        // functionals c with c·t = 0 for t in T_n
        let ann = t.orthogonal(&identity)?;
        let base = if n == 0 { a.center() } else { Subspace::zero(f, d) };
        expected.push(embed(&ann, &base));
    }
    Ok(TrivialExtensionCheck { extension, form, ideals: te.perp, expected })
}

#[cfg(test)]
mod tests;

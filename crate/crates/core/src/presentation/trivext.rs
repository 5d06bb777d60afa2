//! Trivial extensions `T(A) = Hom_K(A, K) ⋊ A`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Metadata, Origin};
use crate::error::{Error, Result};
use crate::form::BilinearForm;
use crate::linalg::Matrix;

/// Builds `T(A)` with basis `f_0, ..., f_{d-1}` (the dual basis) followed by
/// `b_0, ..., b_{d-1}`, and its form `⟨(f, a), (g, b)⟩ = g(a) + f(b)`.
///
/// Products are `(f, a)(g, b) = (ag + fb, ab)` with `(a f b)(c) = f(b c a)`.
pub fn trivial_extension(a: &Algebra) -> Result<(Algebra, BilinearForm)> {
    let d = a.dim();
    let field = a.field();
    let mut structure: Vec<(usize, usize, usize, u32)> = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for &(k, c) in a.mul_basis(i, j) {
                let k = k as usize;
                // b_i b_j
                structure.push((d + i, d + j, d + k, c));
                // (b_j f_k)(b_l) = f_k(b_l b_j), so b_j f_k picks up c f_i
                structure.push((d + j, k, i, c));
                // (f_k b_i)(b_l) = f_k(b_i b_l), so f_k b_i picks up c f_j
                structure.push((k, d + i, j, c));
            }
        }
    }
    let mut labels: Vec<String> = a.labels().iter().map(|l| format!("{l}^*")).collect();
    labels.extend(a.labels().iter().cloned());
    let mut unit = vec![0; d];
    unit.extend_from_slice(a.unit());
    let meta = a.metadata();
    let mut radical = None;
    if let Ok(r) = a.radical() {
        let mut rows: Vec<Vec<u32>> = (0..d)
            .map(|i| {
                let mut v = vec![0; 2 * d];
                v[i] = 1;
                v
            })
            .collect();
        for row in r.basis().row_iter() {
            let mut v = vec![0; d];
            v.extend_from_slice(row);
            rows.push(v);
        }
        radical = Some(rows);
    }
    let generators = meta.generators.as_ref().map(|g| {
        let mut out: Vec<usize> = (0..d).collect();
        out.extend(g.iter().map(|&i| d + i));
        out
    });
    let t_meta = Metadata {
        idempotents: meta.idempotents.as_ref().map(|ids| ids.iter().map(|&i| d + i).collect()),
        arrow_ideal: false,
        generators,
        socle_paths: Vec::new(),
        radical,
        origin: Origin::TrivialExtension { base_dim: d },
        split_basic: meta.split_basic,
    };
    let t = Algebra::new(field, labels, &structure, unit, t_meta)?;
    let gram = Matrix::from_fn(field, 2 * d, 2 * d, |i, j| u32::from(i + d == j || j + d == i));
    let form = BilinearForm::new(gram)?;
    let p = form.predicates(&t);
    if !(p.associative && p.symmetric && p.nondegenerate) {
        return Err(Error::InvariantViolation("trivial extension form check failed".into()));
    }
    Ok((t, form))
}

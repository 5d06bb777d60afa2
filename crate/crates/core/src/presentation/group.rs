//! Finite groups given by multiplication tables, and their group algebras.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Metadata, Origin};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Subspace;

/// Multiplication table of a finite group with identity at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
    orders: Vec<u64>,
}

impl CayleyTable {
    /// Validates the table: identity at 0, Latin square, associativity.
    pub fn new(table: Vec<Vec<usize>>) -> Result<CayleyTable> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidPresentation("empty group table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidPresentation(format!("row {i} has length {}", row.len())));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || seen[x] {
                    return Err(Error::InvalidPresentation(format!("row {i} is not a permutation")));
                }
                seen[x] = true;
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                if seen[row[j]] {
                    return Err(Error::InvalidPresentation(format!("column {j} is not a permutation")));
                }
                seen[row[j]] = true;
            }
        }
        if (0..n).any(|i| table[0][i] != i || table[i][0] != i) {
            return Err(Error::InvalidPresentation("index 0 is not the identity".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidPresentation(format!("associativity fails on ({a},{b},{c})")));
                    }
                }
            }
        }
        let orders = (0..n)
            .map(|g| {
                let mut x = g;
                let mut k = 1u64;
                while x != 0 {
                    x = table[x][g];
                    k += 1;
                }
                k
            })
            .collect();
        Ok(CayleyTable { table, orders })
    }

    pub fn cyclic(n: usize) -> CayleyTable {
        CayleyTable::new((0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()).expect("cyclic group")
    }

    /// Symmetric group on `k` letters; permutations listed lexicographically
    /// so that the identity comes first.
    pub fn symmetric(k: usize) -> CayleyTable {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            perms.push(cur.clone());
            // next lexicographic permutation
            let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        // (a b)(x) = a(b(x)): apply b first
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index(&b.iter().map(|&x| a[x]).collect())).collect())
            .collect();
        CayleyTable::new(table).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn element_order(&self, g: usize) -> u64 {
        self.orders[g]
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order()).find(|&h| self.table[g][h] == 0).expect("Latin square")
    }

    pub fn pow(&self, g: usize, k: u64) -> usize {
        let k = k % self.orders[g];
        let mut x = 0;
        for _ in 0..k {
            x = self.table[x][g];
        }
        x
    }

    /// `(g_p, g_{p'})` with `g = g_p g_{p'}`, `g_p` of `p`-power order and
    /// `g_{p'}` of order prime to `p`.
    pub fn p_primary_decompose(&self, g: usize, p: u64) -> (usize, usize) {
        let mut m = self.orders[g];
        let mut pa = 1u64;
        while m.is_multiple_of(p) {
            m /= p;
            pa *= p;
        }
        let gp = self.pow(g, m * inv_mod(m, pa));
        let gq = self.pow(g, pa * inv_mod(pa, m));
        (gp, gq)
    }

    /// Conjugacy classes as sorted index lists, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = (0..n).map(|x| self.mul(self.mul(x, g), self.inverse(x))).collect();
            cls.sort_unstable();
            cls.dedup();
            for &h in &cls {
                class_of[h] = classes.len();
            }
            classes.push(cls);
        }
        classes
    }

    pub fn p_regular_class_count(&self, p: u64) -> usize {
        self.conjugacy_classes().iter().filter(|c| !self.orders[c[0]].is_multiple_of(p)).count()
    }

    /// Group algebra `KG` on the group elements.
    pub fn group_algebra(&self, field: &Field) -> Algebra {
        let n = self.order();
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        let structure: Vec<_> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b, self.table[a][b], 1))).collect();
        let mut unit = vec![0; n];
        unit[0] = 1;
        let meta = Metadata { origin: Origin::Group { table: self.table.clone() }, ..Metadata::default() };
        Algebra::new(field, labels, &structure, unit, meta).expect("group tables give associative algebras")
    }

    /// Span of the sums `C_h` over the sets `{g : g_{p'} conjugate to h_{p'}}`.
    pub fn reynolds_class_sums(&self, field: &Field) -> Subspace {
        let n = self.order();
        let p = field.characteristic() as u64;
        let classes = self.conjugacy_classes();
        let class_of = |g: usize| classes.iter().position(|c| c.contains(&g)).expect("partition");
        let section: Vec<usize> = (0..n).map(|g| class_of(self.p_primary_decompose(g, p).1)).collect();
        let mut sums: Vec<Vec<u32>> = Vec::new();
        for c in 0..classes.len() {
            let v: Vec<u32> = (0..n).map(|g| u32::from(section[g] == c)).collect();
            if v.iter().any(|&x| x != 0) {
                sums.push(v);
            }
        }
        Subspace::span(field, n, &sums)
    }
}

fn inv_mod(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    (1..m).find(|&x| a % m * x % m == 1).expect("coprime")
}

pub fn group_algebra(g: &CayleyTable, field: &Field) -> Algebra {
    g.group_algebra(field)
}

pub fn p_primary_decompose(g: &CayleyTable, element: usize, p: u64) -> (usize, usize) {
    g.p_primary_decompose(element, p)
}

pub fn p_regular_class_count(g: &CayleyTable, p: u64) -> usize {
    g.p_regular_class_count(p)
}

pub fn reynolds_class_sums(g: &CayleyTable, field: &Field) -> Subspace {
    g.reynolds_class_sums(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_has_three_classes() {
        let s3 = CayleyTable::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.conjugacy_classes().len(), 3);
        assert_eq!(s3.p_regular_class_count(2), 2);
        assert_eq!(s3.p_regular_class_count(3), 2);
        assert_eq!(s3.p_regular_class_count(5), 3);
    }

    #[test]
    fn c6_decomposition() {
        let c6 = CayleyTable::cyclic(6);
        assert_eq!(c6.p_primary_decompose(1, 2), (3, 4));
        let c3 = CayleyTable::cyclic(3);
        assert_eq!(c3.p_primary_decompose(1, 2), (0, 1));
        let c4 = CayleyTable::cyclic(4);
        assert_eq!(c4.p_primary_decompose(1, 2), (1, 0));
    }

    #[test]
    fn decomposition_parts_commute_and_multiply_back() {
        let s4 = CayleyTable::symmetric(4);
        for p in [2, 3] {
            for g in 0..s4.order() {
                let (a, b) = s4.p_primary_decompose(g, p);
                assert_eq!(s4.mul(a, b), g);
                assert_eq!(s4.mul(a, b), s4.mul(b, a));
                assert_eq!(s4.element_order(a), p.pow(s4.element_order(a).ilog(p)));
                assert_ne!(s4.element_order(b) % p, 0);
            }
        }
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(CayleyTable::new(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(CayleyTable::new(vec![vec![1, 0], vec![0, 1]]).is_err());
    }

    #[test]
    fn c2_class_sum() {
        let f = Field::prime(2).unwrap();
        let r = CayleyTable::cyclic(2).reynolds_class_sums(&f);
        assert_eq!(r.basis_vectors(), vec![vec![1, 1]]);
    }
}

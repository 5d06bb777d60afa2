//! Exact arithmetic in GF(p^e).
//!
//! Elements are stored as plain `u32` values encoding the coefficient vector
//! `c_0 + c_1 X + ... + c_{e-1} X^{e-1}` in base `p` (`c_0` least
//! significant). Hot loops in the linear algebra work on these raw values
//! through [`Field`]; [`Scalar`] is the checked value type that carries its
//! field along.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest extension field order for which log/exp tables are built.
const MAX_EXT_ORDER: u32 = 1 << 16;

/// Parameters of a finite field: characteristic, degree and modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    /// Monic modulus, coefficients low-to-high (length `e + 1`).
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    /// The prime field GF(p); its modulus is `X`.
    pub fn prime(p: u32) -> Self {
        FieldSpec { p, e: 1, modulus: vec![0, 1] }
    }

    /// GF(p^e) with the library's default modulus, if one is shipped.
    pub fn with_default_modulus(p: u32, e: u32) -> Option<Self> {
        if e == 1 {
            return Some(Self::prime(p));
        }
        let modulus: &[u32] = match (p, e) {
            (2, 2) => &[1, 1, 1],
            (2, 3) => &[1, 1, 0, 1],
            (2, 4) => &[1, 1, 0, 0, 1],
            (3, 2) => &[1, 0, 1],
            (3, 3) => &[1, 2, 0, 1],
            (5, 2) => &[2, 1, 1],
            _ => return None,
        };
        Some(FieldSpec { p, e, modulus: modulus.to_vec() })
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.e)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{}) mod {:?}", self.p, self.e, self.modulus)
        }
    }
}

#[derive(Debug)]
enum Kind {
    Prime,
    Ext {
        /// `exp[i] = g^i` for `i < 2(q-1)`.
        exp: Vec<u32>,
        /// `log[g^i] = i`; `log[0]` unused.
        log: Vec<u32>,
        /// Addition table for odd characteristic (`q * q` entries).
        add: Vec<u32>,
        neg: Vec<u32>,
    },
}

#[derive(Debug)]
struct FieldData {
    spec: FieldSpec,
    q: u32,
    kind: Kind,
}

/// A validated finite field. Cheap to clone; compares by its [`FieldSpec`].
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.spec)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.spec)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo monic `m` over GF(p), both low-to-high.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                let t = (lead as u64 * mc as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let e = modulus.len() - 1;
    // Trial division by every monic polynomial of degree 1..=e/2.
    for deg in 1..=e / 2 {
        let count = (p as u64).pow(deg as u32);
        for idx in 0..count {
            let mut div = Vec::with_capacity(deg + 1);
            let mut x = idx;
            for _ in 0..deg {
                div.push((x % p as u64) as u32);
                x /= p as u64;
            }
            div.push(1);
            if poly_rem(modulus, &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds and validates a field from its spec.
    pub fn new(spec: FieldSpec) -> Result<Field> {
        let FieldSpec { p, e, ref modulus } = spec;
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        if modulus.len() != e as usize + 1 {
            return Err(Error::InvalidField(format!(
                "modulus must have {} coefficients, got {}",
                e + 1,
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("modulus coefficients must lie in [0, p)".into()));
        }
        if modulus[e as usize] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        if e == 1 {
            if modulus[0] != 0 {
                return Err(Error::InvalidField("prime field modulus must be X".into()));
            }
            return Ok(Field(Arc::new(FieldData { q: p, kind: Kind::Prime, spec })));
        }
        let q64 = (p as u64).pow(e);
        if q64 > MAX_EXT_ORDER as u64 {
            return Err(Error::InvalidField(format!(
                "extension fields are limited to {MAX_EXT_ORDER} elements"
            )));
        }
        if !is_irreducible(modulus, p) {
            return Err(Error::InvalidField(format!("modulus {modulus:?} is reducible over GF({p})")));
        }
        let q = q64 as u32;
        let kind = build_ext_tables(p, e as usize, modulus, q);
        Ok(Field(Arc::new(FieldData { spec, q, kind })))
    }

    /// GF(p) for prime `p`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(FieldSpec::prime(p))
    }

    /// GF(p^e) with a shipped default modulus.
    pub fn default_for(p: u32, e: u32) -> Result<Field> {
        let spec = FieldSpec::with_default_modulus(p, e)
            .ok_or_else(|| Error::InvalidField(format!("no default modulus for GF({p}^{e})")))?;
        Field::new(spec)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn characteristic(&self) -> u32 {
        self.0.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.0.spec.e
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self.0.kind, Kind::Prime)
    }

    pub fn ensure_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(format!("{self}"), format!("{other}")))
        }
    }

    #[inline]
    pub fn zero(&self) -> u32 {
        0
    }

    #[inline]
    pub fn one(&self) -> u32 {
        1
    }

    /// Image of an integer under `Z -> GF(p) -> GF(q)`.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.spec.p as i64) as u32
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.0.q
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.spec.p;
        match &self.0.kind {
            Kind::Prime => {
                let s = a + b;
                if s >= p {
                    s - p
                } else {
                    s
                }
            }
            Kind::Ext { add, .. } => {
                if p == 2 {
                    a ^ b
                } else {
                    add[(a * self.0.q + b) as usize]
                }
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        match &self.0.kind {
            Kind::Prime => {
                if a == 0 {
                    0
                } else {
                    self.0.spec.p - a
                }
            }
            Kind::Ext { neg, .. } => neg[a as usize],
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.0.kind {
            Kind::Prime => (a as u64 * b as u64 % self.0.spec.p as u64) as u32,
            Kind::Ext { exp, log, .. } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    exp[(log[a as usize] + log[b as usize]) as usize]
                }
            }
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        match &self.0.kind {
            Kind::Prime => Some(self.pow(a, self.0.spec.p as u64 - 2)),
            Kind::Ext { exp, log, .. } => {
                let n = self.0.q - 1;
                Some(exp[((n - log[a as usize]) % n) as usize])
            }
        }
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        let inv = self
            .inv(b)
            .ok_or_else(|| Error::DegenerateInput("division by zero".into()))?;
        Ok(self.mul(a, inv))
    }

    pub fn pow(&self, a: u32, mut n: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// `a^(p^k)`; `k` is taken modulo `e`.
    pub fn frobenius(&self, a: u32, k: u32) -> u32 {
        match &self.0.kind {
            Kind::Prime => a,
            Kind::Ext { exp, log, .. } => {
                let k = k % self.0.spec.e;
                if a == 0 || k == 0 {
                    return a;
                }
                let n = (self.0.q - 1) as u64;
                let pk = (self.0.spec.p as u64).pow(k) % n;
                exp[(log[a as usize] as u64 * pk % n) as usize]
            }
        }
    }

    /// The unique `b` with `b^p = a`.
    pub fn inv_frobenius(&self, a: u32) -> u32 {
        let e = self.0.spec.e;
        self.frobenius(a, e - 1)
    }

    /// `frobenius(a, k)` for a signed twist.
    pub fn twist(&self, a: u32, k: i64) -> u32 {
        let e = self.0.spec.e as i64;
        self.frobenius(a, k.rem_euclid(e) as u32)
    }

    /// Coefficients of `a` as a polynomial in the generator `X`, low-to-high.
    pub fn coords(&self, a: u32) -> Vec<u32> {
        let p = self.0.spec.p;
        let mut x = a;
        (0..self.0.spec.e)
            .map(|_| {
                let c = x % p;
                x /= p;
                c
            })
            .collect()
    }

    /// Element with the given coefficients (shorter lists are zero padded).
    pub fn from_coords(&self, coords: &[u32]) -> Result<u32> {
        let p = self.0.spec.p;
        if coords.len() > self.0.spec.e as usize {
            return Err(Error::InvalidField(format!(
                "too many coefficients ({}) for degree {}",
                coords.len(),
                self.0.spec.e
            )));
        }
        let mut v = 0u32;
        for &c in coords.iter().rev() {
            if c >= p {
                return Err(Error::InvalidField(format!("coefficient {c} not reduced mod {p}")));
            }
            v = v * p + c;
        }
        Ok(v)
    }

    /// The class of `X` (a field generator over GF(p)); `1` for prime fields.
    pub fn generator(&self) -> u32 {
        if self.is_prime_field() {
            1
        } else {
            self.0.spec.p
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.q
    }

    /// `dst += c * src`.
    #[inline]
    pub fn axpy(&self, dst: &mut [u32], c: u32, src: &[u32]) {
        debug_assert_eq!(dst.len(), src.len());
        if c == 0 {
            return;
        }
        let p = self.0.spec.p;
        match &self.0.kind {
            Kind::Prime if p == 2 => {
                for (d, &s) in dst.iter_mut().zip(src) {
                    *d ^= s;
                }
            }
            Kind::Prime => {
                let (c, p) = (c as u64, p as u64);
                for (d, &s) in dst.iter_mut().zip(src) {
                    if s != 0 {
                        *d = ((*d as u64 + c * s as u64) % p) as u32;
                    }
                }
            }
            Kind::Ext { .. } => {
                for (d, &s) in dst.iter_mut().zip(src) {
                    if s != 0 {
                        *d = self.add(*d, self.mul(c, s));
                    }
                }
            }
        }
    }

    pub fn scale(&self, v: &mut [u32], c: u32) {
        if c == 1 {
            return;
        }
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    /// Dot product of two coordinate vectors.
    pub fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| if x == 0 || y == 0 { acc } else { self.add(acc, self.mul(x, y)) })
    }

    /// Human-readable rendering, e.g. `1`, `w`, `w^2+1`.
    pub fn format(&self, a: u32) -> String {
        if self.is_prime_field() {
            return format!("{a}");
        }
        let coords = self.coords(a);
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in coords.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "w".into(),
                _ => format!("w^{i}"),
            };
            parts.push(match (c, i) {
                (_, 0) => format!("{c}"),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// Parses `0`, `3`, `w`, `w^2`, `2*w^3`, and `+`-separated sums of those.
    /// `w` denotes the class of `X`.
    pub fn parse(&self, s: &str) -> Result<u32> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidField("empty scalar".into()));
        }
        let mut acc = 0u32;
        for term in s.split('+') {
            let term = term.trim();
            let (coef, mono) = match term.split_once('*') {
                Some((c, m)) => (c.trim(), Some(m.trim())),
                None if term.starts_with('w') => ("1", Some(term)),
                None => (term, None),
            };
            let c: i64 = coef
                .parse()
                .map_err(|_| Error::InvalidField(format!("cannot parse scalar term `{term}`")))?;
            let mut value = self.from_int(c);
            if let Some(m) = mono {
                let exp: u64 = match m.strip_prefix('w') {
                    Some("") => 1,
                    Some(rest) => rest
                        .strip_prefix('^')
                        .and_then(|x| x.parse().ok())
                        .ok_or_else(|| Error::InvalidField(format!("bad monomial `{m}`")))?,
                    None => return Err(Error::InvalidField(format!("bad monomial `{m}`"))),
                };
                value = self.mul(value, self.pow(self.generator(), exp));
            }
            acc = self.add(acc, value);
        }
        Ok(acc)
    }
}

fn build_ext_tables(p: u32, e: usize, modulus: &[u32], q: u32) -> Kind {
    let to_coords = |mut a: u32| -> Vec<u32> {
        (0..e)
            .map(|_| {
                let c = a % p;
                a /= p;
                c
            })
            .collect()
    };
    let from_coords = |c: &[u32]| -> u32 { c.iter().rev().fold(0, |v, &x| v * p + x) };
    let poly_mul = |a: u32, b: u32| -> u32 {
        let (ca, cb) = (to_coords(a), to_coords(b));
        let mut prod = vec![0u32; 2 * e - 1];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        let mut r = poly_rem(&prod, modulus, p);
        r.resize(e, 0);
        from_coords(&r)
    };
    let n = q - 1;
    // Find a primitive element by brute force.
    let mut exp = Vec::new();
    for g in 2..q {
        let mut x = 1u32;
        let mut order = 0u32;
        loop {
            x = poly_mul(x, g);
            order += 1;
            if x == 1 {
                break;
            }
        }
        if order == n {
            let mut cur = 1u32;
            exp.reserve(2 * n as usize);
            for _ in 0..n {
                exp.push(cur);
                cur = poly_mul(cur, g);
            }
            break;
        }
    }
    if q == 2 {
        exp.push(1);
    }
    let mut log = vec![0u32; q as usize];
    for (i, &x) in exp.iter().enumerate() {
        log[x as usize] = i as u32;
    }
    let first = exp.clone();
    exp.extend(first);
    let add_digits = |a: u32, b: u32| -> u32 {
        let (ca, cb) = (to_coords(a), to_coords(b));
        let s: Vec<u32> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % p).collect();
        from_coords(&s)
    };
    let neg: Vec<u32> = (0..q)
        .map(|a| {
            let c: Vec<u32> = to_coords(a).iter().map(|&x| (p - x) % p).collect();
            from_coords(&c)
        })
        .collect();
    let add = if p == 2 {
        Vec::new()
    } else {
        let mut t = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                t[(a * q + b) as usize] = add_digits(a, b);
            }
        }
        t
    };
    Kind::Ext { exp, log, add, neg }
}

/// A field element together with its field.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    field: Field,
    value: u32,
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(self.value))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(self.value))
    }
}

/// Binary operation selector for [`Scalar::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn new(field: &Field, value: u32) -> Result<Scalar> {
        if !field.contains(value) {
            return Err(Error::InvalidField(format!("{value} is not an element of {field}")));
        }
        Ok(Scalar { field: field.clone(), value })
    }

    pub fn from_coords(field: &Field, coords: &[u32]) -> Result<Scalar> {
        Ok(Scalar { field: field.clone(), value: field.from_coords(coords)? })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn coords(&self) -> Vec<u32> {
        self.field.coords(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn arith(&self, other: &Scalar, op: ArithOp) -> Result<Scalar> {
        self.field.ensure_same(&other.field)?;
        let f = &self.field;
        let value = match op {
            ArithOp::Add => f.add(self.value, other.value),
            ArithOp::Sub => f.sub(self.value, other.value),
            ArithOp::Mul => f.mul(self.value, other.value),
            ArithOp::Div => f.div(self.value, other.value)?,
        };
        Ok(Scalar { field: f.clone(), value })
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.arith(other, ArithOp::Add)
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.arith(other, ArithOp::Mul)
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.arith(other, ArithOp::Div)
    }

    pub fn frobenius(&self, k: u32) -> Scalar {
        Scalar { field: self.field.clone(), value: self.field.frobenius(self.value, k) }
    }

    pub fn inv_frobenius(&self) -> Scalar {
        Scalar { field: self.field.clone(), value: self.field.inv_frobenius(self.value) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, e: u32) -> Field {
        Field::default_for(p, e).unwrap()
    }

    #[test]
    fn gf2_one_plus_one() {
        let f = gf(2, 1);
        assert_eq!(f.add(1, 1), 0);
    }

    #[test]
    fn gf4_omega_squared() {
        // X^2 = X + 1 mod X^2+X+1
        let f = gf(2, 2);
        let w = f.from_coords(&[0, 1]).unwrap();
        let w1 = f.from_coords(&[1, 1]).unwrap();
        assert_eq!(f.mul(w, w), w1);
        assert_eq!(f.frobenius(w, 1), w1);
        assert_eq!(f.inv_frobenius(w1), w);
    }

    #[test]
    fn gf3_division() {
        let f = gf(3, 1);
        assert_eq!(f.div(2, 2).unwrap(), 1);
        assert!(matches!(f.div(1, 0), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn gf9_inverse_frobenius_is_cube() {
        let f = gf(3, 2);
        assert_eq!(f.spec().modulus, vec![1, 0, 1]);
        for a in f.elements() {
            assert_eq!(f.inv_frobenius(a), f.pow(a, 3));
        }
    }

    #[test]
    fn prime_field_frobenius_is_identity() {
        let f = gf(7, 1);
        for a in f.elements() {
            assert_eq!(f.frobenius(a, 1), a);
            assert_eq!(f.pow(a, 7), a);
        }
    }

    #[test]
    fn default_moduli_are_irreducible() {
        for (p, e) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)] {
            assert!(Field::default_for(p, e).is_ok(), "GF({p}^{e})");
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        let spec = FieldSpec { p: 2, e: 2, modulus: vec![1, 0, 1] };
        assert!(matches!(Field::new(spec), Err(Error::InvalidField(_))));
        assert!(Field::prime(4).is_err());
        let spec = FieldSpec { p: 3, e: 1, modulus: vec![1, 1] };
        assert!(Field::new(spec).is_err());
    }

    #[test]
    fn frobenius_is_ring_homomorphism_exhaustive() {
        for (p, e) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)] {
            let f = gf(p, e);
            if f.order() > 81 {
                continue;
            }
            for a in f.elements() {
                assert_eq!(f.frobenius(f.inv_frobenius(a), 1), a);
                assert_eq!(f.inv_frobenius(f.frobenius(a, 1)), a);
                assert_eq!(f.frobenius(a, e), a);
                for b in f.elements() {
                    assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
                    assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_small_fields() {
        for (p, e) in [(2, 2), (3, 2), (5, 1), (2, 3)] {
            let f = gf(p, e);
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    if b != 0 {
                        assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
                    }
                    assert_eq!(f.sub(f.add(a, b), b), a);
                }
            }
        }
    }

    #[test]
    fn scalar_mismatch_is_an_error() {
        let a = Scalar::new(&gf(2, 1), 1).unwrap();
        let b = Scalar::new(&gf(3, 1), 1).unwrap();
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch(..))));
        let c = Scalar::new(&gf(2, 1), 1).unwrap();
        assert!(a.add(&c).unwrap().is_zero());
    }

    #[test]
    fn parse_and_format_round_trip() {
        let f = gf(3, 2);
        for a in f.elements() {
            assert_eq!(f.parse(&f.format(a)).unwrap(), a);
        }
        let g = gf(2, 2);
        assert_eq!(g.parse("w").unwrap(), g.from_coords(&[0, 1]).unwrap());
        assert_eq!(g.parse("w^2").unwrap(), g.parse("w+1").unwrap());
    }
}

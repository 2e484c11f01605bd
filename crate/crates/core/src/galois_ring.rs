//! Arithmetic in the Galois ring `GR(p^2, s)`.
//!
//! Elements are stored as coefficient vectors in the power basis of a
//! Teichmüller generator `ξ` (so `ξ^(p^s) = ξ`), each coefficient reduced
//! mod `p^2`. The p-adic pair `(a, b)` with `α = a + p b`, `a, b ∈ T_s`, is
//! computed on demand.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::field::{Field, FqElem, ResidueField};
use crate::numtheory::{ipow, is_prime, prime_divisors};
use crate::{Error, Result};

/// Largest residue field (or ring) size scanned by exhaustive operations.
pub const EXHAUSTIVE_CEILING: u64 = 1 << 16;

// Teichmüller index tables are built up to this residue field size.
const LOG_TABLE_CEILING: u64 = 1 << 20;

/// Element of `GR(p^2, s)` in coefficient form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrElem(pub(crate) Vec<u64>);

impl GrElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

/// A constructed Galois ring `GR(p^2, s)`.
#[derive(Clone)]
pub struct GaloisRing {
    p: u64,
    s: usize,
    p2: u64,
    modulus: Vec<u64>,
    field: ResidueField,
    // ξ^(p i) for i < s: images of the power basis under the Frobenius.
    frob_basis: Vec<GrElem>,
    teich_log: OnceLock<Option<HashMap<FqElem, u64>>>,
}

impl fmt::Debug for GaloisRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisRing")
            .field("p", &self.p)
            .field("s", &self.s)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for GaloisRing {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for GaloisRing {}

impl fmt::Display for GaloisRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GR({}^2,{})", self.p, self.s)
    }
}

/// Lexicographically smallest monic primitive polynomial of degree `s` over
/// `F_p`. Candidates are ordered by the integer `Σ c_i p^i` of their
/// non-leading coefficients, i.e. lexicographically from the `x^(s-1)`
/// coefficient down.
pub fn smallest_primitive_polynomial(p: u64, s: usize) -> Vec<u64> {
    let count = ipow(p, s as u32);
    for k in 0..count {
        let mut g = vec![0u64; s + 1];
        let mut t = k;
        for c in g.iter_mut().take(s) {
            *c = t % p;
            t /= p;
        }
        g[s] = 1;
        if is_primitive(p, &g) {
            return g;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

/// Whether the monic `g` over `F_p` is primitive (its root has order `p^s - 1`).
pub fn is_primitive(p: u64, g: &[u64]) -> bool {
    let s = g.len() - 1;
    if s == 0 || g[s] % p != 1 || g[0] % p == 0 {
        return false;
    }
    let f = ResidueField::new(p, g.iter().map(|c| c % p).collect());
    let x = f.generator();
    let order = ipow(p, s as u32) as u128 - 1;
    if f.pow(&x, order) != f.one() {
        return false;
    }
    prime_divisors(order)
        .into_iter()
        .all(|r| f.pow(&x, order / r) != f.one())
}

impl GaloisRing {
    /// `GR(p^2, s)` built from the smallest primitive polynomial of degree `s`.
    pub fn new(p: u64, s: usize) -> Result<Self> {
        Self::check_params(p, s)?;
        let g = smallest_primitive_polynomial(p, s);
        Self::from_lift(p, &g)
    }

    fn check_params(p: u64, s: usize) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 16 {
            return Err(Error::PrimeTooLarge(p));
        }
        if s == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(())
    }

    /// Build the ring from any monic lift `lift` (over `Z_{p^2}`) of a
    /// primitive polynomial. The root is moved to its Teichmüller
    /// representative `x^(p^s)` and the modulus replaced by that element's
    /// minimal polynomial, so the indeterminate becomes `ξ` with `ξ^(p^s) = ξ`.
    pub fn from_lift(p: u64, lift: &[u64]) -> Result<Self> {
        if lift.len() < 2 {
            return Err(Error::ZeroDegree);
        }
        let s = lift.len() - 1;
        Self::check_params(p, s)?;
        let p2 = p * p;
        let naive: Vec<u64> = lift.iter().map(|c| c % p2).collect();
        if naive[s] != 1 {
            return Err(Error::InvalidModulus("polynomial must be monic".into()));
        }
        let reduced: Vec<u64> = naive.iter().map(|c| c % p).collect();
        if !is_primitive(p, &reduced) {
            return Err(Error::InvalidModulus(
                "reduction mod p is not a primitive polynomial".into(),
            ));
        }

        let tmp = Self::raw(p, s, naive);
        let q = tmp.residue_order() as u128;
        let root = tmp.pow(&tmp.xi(), q);
        // minimal polynomial: prod_{i<s} (X - root^(p^i)), coefficients in Z_{p^2}
        let mut poly: Vec<GrElem> = vec![tmp.one()];
        let mut conj = root;
        for _ in 0..s {
            let mut next = vec![tmp.zero(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] = tmp.add(&next[k + 1], c);
                let t = tmp.mul(c, &conj);
                next[k] = tmp.sub(&next[k], &t);
            }
            poly = next;
            conj = tmp.pow(&conj, p as u128);
        }
        let mut modulus = Vec::with_capacity(s + 1);
        for c in &poly {
            if c.0[1..].iter().any(|&x| x != 0) {
                return Err(Error::Internal(
                    "minimal polynomial of the Teichmüller root is not over Z_{p^2}".into(),
                ));
            }
            modulus.push(c.0[0]);
        }
        let ring = Self::raw(p, s, modulus);
        debug_assert!(ring.pow(&ring.xi(), q) == ring.xi());
        Ok(ring)
    }

    fn raw(p: u64, s: usize, modulus: Vec<u64>) -> Self {
        let field = ResidueField::new(p, modulus.iter().map(|c| c % p).collect());
        let mut ring = Self {
            p,
            s,
            p2: p * p,
            modulus,
            field,
            frob_basis: Vec::new(),
            teich_log: OnceLock::new(),
        };
        let xp = ring.pow(&ring.xi(), p as u128);
        let mut acc = ring.one();
        let mut basis = Vec::with_capacity(s);
        for _ in 0..s {
            basis.push(acc.clone());
            acc = ring.mul(&acc, &xp);
        }
        ring.frob_basis = basis;
        ring
    }

    pub fn characteristic_prime(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.s
    }

    /// Monic modulus over `Z_{p^2}`, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// `p^s`, the size of the residue field and of the Teichmüller set.
    pub fn residue_order(&self) -> u64 {
        ipow(self.p, self.s as u32)
    }

    /// `p^(2s)`, the number of ring elements.
    pub fn order(&self) -> u64 {
        ipow(self.p, 2 * self.s as u32)
    }

    pub fn residue_field(&self) -> &ResidueField {
        &self.field
    }

    pub fn zero(&self) -> GrElem {
        GrElem(vec![0; self.s])
    }

    pub fn one(&self) -> GrElem {
        self.from_int(1)
    }

    pub fn from_int(&self, c: i64) -> GrElem {
        let mut v = vec![0; self.s];
        v[0] = c.rem_euclid(self.p2 as i64) as u64;
        GrElem(v)
    }

    /// Element `Σ c_i ξ^i`; indices at or above `s` are reduced through the modulus.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> GrElem {
        let mut v: Vec<u64> = coeffs
            .iter()
            .map(|c| c.rem_euclid(self.p2 as i64) as u64)
            .collect();
        if v.len() < self.s {
            v.resize(self.s, 0);
        }
        GrElem(self.reduce(v))
    }

    /// The Teichmüller generator `ξ`.
    pub fn xi(&self) -> GrElem {
        if self.s == 1 {
            // x = -m_0 in Z_{p^2}
            return GrElem(vec![(self.p2 - self.modulus[0]) % self.p2]);
        }
        let mut v = vec![0; self.s];
        v[1] = 1;
        GrElem(v)
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let s = self.s;
        let p2 = self.p2;
        for top in (s..v.len()).rev() {
            let c = v[top] % p2;
            if c == 0 {
                continue;
            }
            v[top] = 0;
            for k in 0..s {
                let sub = c * self.modulus[k] % p2;
                let idx = top - s + k;
                v[idx] = (v[idx] + p2 - sub) % p2;
            }
        }
        v.truncate(s);
        v
    }

    pub fn add(&self, a: &GrElem, b: &GrElem) -> GrElem {
        GrElem(a.0.iter().zip(&b.0).map(|(x, y)| (x + y) % self.p2).collect())
    }

    pub fn sub(&self, a: &GrElem, b: &GrElem) -> GrElem {
        GrElem(a.0.iter().zip(&b.0).map(|(x, y)| (x + self.p2 - y) % self.p2).collect())
    }

    pub fn neg(&self, a: &GrElem) -> GrElem {
        GrElem(a.0.iter().map(|x| (self.p2 - x) % self.p2).collect())
    }

    pub fn mul(&self, a: &GrElem, b: &GrElem) -> GrElem {
        let s = self.s;
        if s == 1 {
            return GrElem(vec![a.0[0] * b.0[0] % self.p2]);
        }
        let mut prod = vec![0u64; 2 * s - 1];
        for (i, x) in a.0.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p2;
            }
        }
        GrElem(self.reduce(prod))
    }

    /// Multiply by an integer scalar.
    pub fn scale(&self, a: &GrElem, c: i64) -> GrElem {
        let c = c.rem_euclid(self.p2 as i64) as u64;
        GrElem(a.0.iter().map(|x| x * c % self.p2).collect())
    }

    pub fn pow(&self, a: &GrElem, mut e: u128) -> GrElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: &GrElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    /// Whether `a ∈ p GR(p^2, s)`.
    pub fn is_in_maximal_ideal(&self, a: &GrElem) -> bool {
        a.0.iter().all(|&c| c % self.p == 0)
    }

    pub fn is_unit(&self, a: &GrElem) -> bool {
        !self.is_in_maximal_ideal(a)
    }

    pub fn inv(&self, a: &GrElem) -> Result<GrElem> {
        if !self.is_unit(a) {
            return Err(Error::NonUnit);
        }
        // the unit group has order q(q - 1)
        let q = self.residue_order() as u128;
        Ok(self.pow(a, q * (q - 1) - 1))
    }

    /// `a / p` for `a ∈ pGR`.
    pub fn div_p(&self, a: &GrElem) -> GrElem {
        debug_assert!(self.is_in_maximal_ideal(a));
        GrElem(a.0.iter().map(|c| c / self.p).collect())
    }

    /// `p · a`.
    pub fn times_p(&self, a: &GrElem) -> GrElem {
        self.scale(a, self.p as i64)
    }

    /// Reduction mod `p` onto `F_{p^s}`.
    pub fn residue(&self, a: &GrElem) -> FqElem {
        FqElem(a.0.iter().map(|c| c % self.p).collect())
    }

    /// Naive coefficientwise lift of a residue (not Teichmüller).
    pub fn naive_lift(&self, x: &FqElem) -> GrElem {
        GrElem(x.0.clone())
    }

    /// The unique Teichmüller element with residue `x`.
    pub fn lift_teichmuller(&self, x: &FqElem) -> GrElem {
        let mut t = self.naive_lift(x);
        for _ in 0..self.s {
            t = self.pow(&t, self.p as u128);
        }
        t
    }

    pub fn is_teichmuller(&self, a: &GrElem) -> bool {
        self.lift_teichmuller(&self.residue(a)) == *a
    }

    /// p-adic expansion `α = a + p b` with `a, b` Teichmüller.
    pub fn teichmuller_decompose(&self, a: &GrElem) -> (GrElem, GrElem) {
        let t0 = self.lift_teichmuller(&self.residue(a));
        let rest = self.div_p(&self.sub(a, &t0));
        let t1 = self.lift_teichmuller(&self.residue(&rest));
        (t0, t1)
    }

    /// The generalized Frobenius `a + p b ↦ a^p + p b^p`, applied `k` times.
    /// It fixes `Z_{p^2}` and sends `ξ` to `ξ^p`.
    pub fn frobenius(&self, a: &GrElem, k: usize) -> GrElem {
        let mut x = a.clone();
        for _ in 0..k % self.s {
            let mut acc = self.zero();
            for (i, c) in x.0.iter().enumerate() {
                if *c != 0 {
                    acc = self.add(&acc, &self.scale(&self.frob_basis[i], *c as i64));
                }
            }
            x = acc;
        }
        x
    }

    /// Frobenius computed straight from the p-adic expansion.
    pub fn frobenius_by_expansion(&self, a: &GrElem, k: usize) -> GrElem {
        let (t0, t1) = self.teichmuller_decompose(a);
        let e = ipow(self.p, k as u32) as u128;
        self.add(&self.pow(&t0, e), &self.times_p(&self.pow(&t1, e)))
    }

    /// The order-2 automorphism `a + p b ↦ a^(p^(s/2)) + p b^(p^(s/2))`.
    pub fn conjugate(&self, a: &GrElem) -> Result<GrElem> {
        if self.s % 2 != 0 {
            return Err(Error::OddDegree(self.s));
        }
        Ok(self.frobenius(a, self.s / 2))
    }

    /// Teichmüller index `e` with `t = ξ^e`, or `None` for `t = 0`.
    /// Returns an error if `t` is not Teichmüller or the field is too large
    /// for the lookup table.
    pub fn teichmuller_index(&self, t: &GrElem) -> Result<Option<u64>> {
        if !self.is_teichmuller(t) {
            return Err(Error::Internal("not a Teichmüller element".into()));
        }
        let x = self.residue(t);
        if self.field.is_zero(&x) {
            return Ok(None);
        }
        let table = self.teich_log.get_or_init(|| {
            let q = self.residue_order();
            if q > LOG_TABLE_CEILING {
                return None;
            }
            let w = self.field.generator();
            let mut acc = self.field.one();
            let mut map = HashMap::with_capacity(q as usize);
            for e in 0..q - 1 {
                map.insert(acc.clone(), e);
                acc = self.field.mul(&acc, &w);
            }
            Some(map)
        });
        match table {
            Some(map) => Ok(map.get(&x).copied()),
            None => Err(Error::LimitExceeded {
                what: "Teichmüller index table",
                size: self.residue_order() as u128,
                limit: LOG_TABLE_CEILING as u128,
            }),
        }
    }

    /// `ξ^e`.
    pub fn teichmuller_power(&self, e: u64) -> GrElem {
        self.pow(&self.xi(), e as u128)
    }

    /// The Teichmüller set `{0, 1, ξ, …, ξ^(q-2)}`.
    pub fn teichmuller_set(&self) -> Result<Vec<GrElem>> {
        let q = self.residue_order();
        if q > EXHAUSTIVE_CEILING {
            return Err(Error::LimitExceeded {
                what: "Teichmüller set",
                size: q as u128,
                limit: EXHAUSTIVE_CEILING as u128,
            });
        }
        let mut out = vec![self.zero()];
        let mut acc = self.one();
        for _ in 0..q - 1 {
            out.push(acc.clone());
            acc = self.mul(&acc, &self.xi());
        }
        Ok(out)
    }

    /// Index of an element in `[0, p^(2s))` (base `p^2` digits of the coefficients).
    pub fn index_of(&self, a: &GrElem) -> u64 {
        a.0.iter().rev().fold(0, |acc, &c| acc * self.p2 + c)
    }

    pub fn from_index(&self, mut k: u64) -> GrElem {
        let mut v = vec![0; self.s];
        for c in v.iter_mut() {
            *c = k % self.p2;
            k /= self.p2;
        }
        GrElem(v)
    }

    /// Every ring element in index order.
    pub fn elements(&self) -> Result<Vec<GrElem>> {
        let n = self.order();
        if n > EXHAUSTIVE_CEILING {
            return Err(Error::LimitExceeded {
                what: "ring element scan",
                size: n as u128,
                limit: EXHAUSTIVE_CEILING as u128,
            });
        }
        Ok((0..n).map(|k| self.from_index(k)).collect())
    }

    /// Preimages of `target` under `Tr` or `Ψ` (relative to the half-degree
    /// subfield) in the residue field, by exhaustive scan.
    pub fn preimage_set(&self, map: HalfMap, target: &FqElem) -> Result<Vec<FqElem>> {
        let f = &self.field;
        if self.s % 2 != 0 {
            return Err(Error::OddDegree(self.s));
        }
        let mut out = Vec::new();
        for x in f.elements()? {
            let y = match map {
                HalfMap::Trace => f.trace_half(&x)?,
                HalfMap::Psi => f.psi(&x)?,
            };
            if y == *target {
                out.push(x);
            }
        }
        Ok(out)
    }
}

/// The two `F_{p^(s/2)}`-linear maps on `F_{p^s}` used by the Hermitian solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfMap {
    Trace,
    Psi,
}

/// Injective ring morphism `GR(p^2, s) → GR(p^2, sν)`.
#[derive(Clone, Debug)]
pub struct Embedding {
    base: GaloisRing,
    ext: GaloisRing,
    // η^i for i < s, where η is the image of the base generator
    images: Vec<GrElem>,
    // s × sν left inverse of the image basis over Z_{p^2}
    left_inverse: Vec<Vec<u64>>,
}

impl Embedding {
    /// The base generator goes to `ξ_ext^(j (Q-1)/(q-1))` for the smallest
    /// admissible `j` making it a root of the base modulus.
    pub fn new(base: &GaloisRing, ext: &GaloisRing) -> Result<Self> {
        if base.p != ext.p || ext.s % base.s != 0 {
            return Err(Error::Incompatible(format!(
                "{base} does not embed into {ext}"
            )));
        }
        let q = base.residue_order() as u128;
        let big_q = ext.residue_order() as u128;
        let step = (big_q - 1) / (q - 1);
        let xi_ext = ext.xi();
        let eval_modulus = |eta: &GrElem| {
            let mut acc = ext.zero();
            for c in base.modulus.iter().rev() {
                acc = ext.add(&ext.mul(&acc, eta), &ext.from_int(*c as i64));
            }
            acc
        };
        let mut eta = None;
        for j in 1..q.max(2) {
            if crate::numtheory::gcd(j as u64, (q - 1) as u64) != 1 && q > 2 {
                continue;
            }
            let cand = ext.pow(&xi_ext, j * step);
            if ext.is_zero(&eval_modulus(&cand)) {
                eta = Some(cand);
                break;
            }
        }
        let eta = eta.ok_or_else(|| {
            Error::Internal(format!("no root of the {base} modulus inside {ext}"))
        })?;

        let mut images = Vec::with_capacity(base.s);
        let mut acc = ext.one();
        for _ in 0..base.s {
            images.push(acc.clone());
            acc = ext.mul(&acc, &eta);
        }
        let left_inverse = left_inverse_mod_p2(&images, ext.s, base.p)?;
        Ok(Self {
            base: base.clone(),
            ext: ext.clone(),
            images,
            left_inverse,
        })
    }

    pub fn base(&self) -> &GaloisRing {
        &self.base
    }

    pub fn ext(&self) -> &GaloisRing {
        &self.ext
    }

    pub fn apply(&self, a: &GrElem) -> GrElem {
        let mut acc = self.ext.zero();
        for (c, img) in a.0.iter().zip(&self.images) {
            if *c != 0 {
                acc = self.ext.add(&acc, &self.ext.scale(img, *c as i64));
            }
        }
        acc
    }

    /// Inverse image of `b`, or `None` if `b` is outside the embedded subring.
    pub fn preimage(&self, b: &GrElem) -> Option<GrElem> {
        let p2 = self.base.p2;
        let coeffs: Vec<u64> = self
            .left_inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&b.0)
                    .fold(0u64, |acc, (l, x)| (acc + l * x) % p2)
            })
            .collect();
        let a = GrElem(coeffs);
        (self.apply(&a) == *b).then_some(a)
    }
}

// Columns are the coordinate vectors of `cols`; returns L with L·E = I.
fn left_inverse_mod_p2(cols: &[GrElem], rows: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    let p2 = p * p;
    let ncols = cols.len();
    let mut e: Vec<Vec<u64>> = (0..rows)
        .map(|r| cols.iter().map(|c| c.0[r]).collect())
        .collect();
    let mut t: Vec<Vec<u64>> = (0..rows)
        .map(|r| (0..rows).map(|c| u64::from(r == c)).collect())
        .collect();
    for col in 0..ncols {
        let piv = (col..rows)
            .find(|&r| e[r][col] % p != 0)
            .ok_or_else(|| Error::Internal("embedded basis is singular mod p".into()))?;
        e.swap(col, piv);
        t.swap(col, piv);
        let inv = crate::numtheory::inv_mod(e[col][col], p2).expect("unit pivot");
        for v in e[col].iter_mut().chain(t[col].iter_mut()) {
            *v = *v * inv % p2;
        }
        for r in 0..rows {
            if r == col || e[r][col] == 0 {
                continue;
            }
            let f = e[r][col];
            for c in 0..ncols {
                e[r][c] = (e[r][c] + p2 - f * e[col][c] % p2) % p2;
            }
            for c in 0..rows {
                t[r][c] = (t[r][c] + p2 - f * t[col][c] % p2) % p2;
            }
        }
    }
    t.truncate(ncols);
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_has_generator_one() {
        let r = GaloisRing::new(2, 1).unwrap();
        assert_eq!(r.xi(), r.one());
        assert_eq!(r.order(), 4);
    }

    #[test]
    fn gr42_generator_is_indeterminate_with_cube_one() {
        let r = GaloisRing::new(2, 2).unwrap();
        assert_eq!(r.modulus(), &[1, 1, 1]);
        let xi = r.xi();
        assert_eq!(xi.coeffs(), &[0, 1]);
        assert_eq!(r.pow(&xi, 3), r.one());
        assert_eq!(r.mul(&xi, &r.mul(&xi, &xi)), r.one());
    }

    #[test]
    fn z9_teichmuller_set_has_three_fixed_points() {
        let r = GaloisRing::new(3, 1).unwrap();
        // primitive root 2 mod 3 lifts to 8 = -1 in Z_9
        assert_eq!(r.xi(), r.from_int(8));
        let t = r.teichmuller_set().unwrap();
        assert_eq!(t.len(), 3);
        for x in &t {
            assert_eq!(r.pow(x, 3), *x);
        }
        let fixed = r
            .elements()
            .unwrap()
            .into_iter()
            .filter(|x| r.pow(x, 3) == *x)
            .count();
        assert_eq!(fixed, 3);
    }

    #[test]
    fn bad_parameters() {
        assert_eq!(GaloisRing::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(GaloisRing::new(2, 0).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn basic_arithmetic() {
        let z4 = GaloisRing::new(2, 1).unwrap();
        assert_eq!(z4.add(&z4.from_int(3), &z4.from_int(3)), z4.from_int(2));
        let r = GaloisRing::new(2, 2).unwrap();
        let a = r.add(&r.one(), &r.scale(&r.xi(), 2));
        assert_eq!(r.mul(&a, &a), r.one());
        assert_eq!(r.inv(&r.from_int(2)), Err(Error::NonUnit));
        let xi_inv = r.inv(&r.xi()).unwrap();
        assert_eq!(xi_inv, r.mul(&r.xi(), &r.xi()));
    }

    #[test]
    fn decompositions() {
        let z4 = GaloisRing::new(2, 1).unwrap();
        assert_eq!(
            z4.teichmuller_decompose(&z4.from_int(3)),
            (z4.one(), z4.one())
        );
        let r = GaloisRing::new(2, 2).unwrap();
        let two_xi = r.scale(&r.xi(), 2);
        assert_eq!(r.teichmuller_decompose(&two_xi), (r.zero(), r.xi()));
        let xi_plus_2 = r.add(&r.xi(), &r.from_int(2));
        assert_eq!(r.teichmuller_decompose(&xi_plus_2), (r.xi(), r.one()));
    }

    #[test]
    fn conjugation_on_gr42() {
        let r = GaloisRing::new(2, 2).unwrap();
        assert_eq!(r.conjugate(&r.xi()).unwrap(), r.mul(&r.xi(), &r.xi()));
        for c in 0..4 {
            assert_eq!(r.conjugate(&r.from_int(c)).unwrap(), r.from_int(c));
        }
        for a in r.elements().unwrap() {
            assert_eq!(r.conjugate(&r.conjugate(&a).unwrap()).unwrap(), a);
        }
        let z4 = GaloisRing::new(2, 1).unwrap();
        assert_eq!(z4.conjugate(&z4.one()), Err(Error::OddDegree(1)));
    }

    #[test]
    fn residue_and_lift() {
        let z4 = GaloisRing::new(2, 1).unwrap();
        assert_eq!(z4.residue(&z4.from_int(3)), z4.residue_field().one());
        let r = GaloisRing::new(2, 2).unwrap();
        let f = r.residue_field();
        let w = r.residue(&r.xi());
        let one_plus_w = f.add(&f.one(), &w);
        assert_eq!(r.lift_teichmuller(&one_plus_w), r.mul(&r.xi(), &r.xi()));
        assert!(f.is_zero(&r.residue(&r.scale(&r.xi(), 2))));
    }

    #[test]
    fn preimages_in_f4() {
        let r = GaloisRing::new(2, 2).unwrap();
        let f = r.residue_field();
        let w = f.generator();
        let pre = r.preimage_set(HalfMap::Trace, &f.one()).unwrap();
        assert_eq!(pre.len(), 2);
        assert!(pre.contains(&w));
        assert!(pre.contains(&f.mul(&w, &w)));
        let ker = r.preimage_set(HalfMap::Psi, &f.zero()).unwrap();
        assert_eq!(ker, vec![f.zero(), f.one()]);
        // ω is not in the image of Ψ = Tr
        assert!(r.preimage_set(HalfMap::Psi, &w).unwrap().is_empty());
    }

    #[test]
    fn embedding_gr42_into_gr44() {
        let base = GaloisRing::new(2, 2).unwrap();
        let ext = GaloisRing::new(2, 4).unwrap();
        let emb = Embedding::new(&base, &ext).unwrap();
        let img = emb.apply(&base.xi());
        assert_eq!(img, ext.pow(&ext.xi(), 5));
        assert_eq!(ext.pow(&img, 3), ext.one());
        assert_eq!(emb.apply(&base.one()), ext.one());
        let t = base.xi();
        assert_eq!(
            emb.apply(&base.times_p(&t)),
            ext.times_p(&emb.apply(&t))
        );
        for a in base.elements().unwrap() {
            assert_eq!(emb.preimage(&emb.apply(&a)), Some(a));
        }
        assert_eq!(emb.preimage(&ext.xi()), None);
    }
}

//! The ring `R = GR(p^2, s)[u]/(u^N - 1)` with `N = p^a`, canonical forms of
//! its ideals, normalization, membership and enumeration.
//!
//! Internally polynomials are stored in the `u` basis; ideal computations use
//! `Y = u - 1`, where `Y^N = -p q(Y)` for the binomial carry polynomial `q`.

use std::fmt;

use num_bigint::BigUint;

use crate::field::{Field, FqElem};
use crate::galois_ring::{GaloisRing, GrElem};
use crate::numtheory::{ipow, is_prime};
use crate::{Error, Result};

/// Largest code (in codewords) that [`CyclicRing::codewords`] will stream.
pub const CODEWORD_CEILING: u64 = 1 << 20;

/// Largest number of ideals that [`CyclicRing::enumerate_ideals`] will stream.
pub const IDEAL_CEILING: u64 = 1 << 24;

/// Parameters `(p, s, a)` of cyclic codes of length `p^a` over `GR(p^2, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeParams {
    pub p: u64,
    pub s: usize,
    pub a: u32,
}

impl CodeParams {
    pub fn new(p: u64, s: usize, a: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 {
            return Err(Error::ZeroDegree);
        }
        if p.checked_pow(a).is_none_or(|n| n > 1 << 16) {
            return Err(Error::OutOfRange {
                what: "length p^a",
                detail: format!("{p}^{a} exceeds 65536"),
            });
        }
        Ok(Self { p, s, a })
    }

    /// `N = p^a`.
    pub fn length(&self) -> usize {
        ipow(self.p, self.a) as usize
    }

    /// `p^(a-1)`, or 0 when `a = 0`.
    pub fn torsion_bound(&self) -> usize {
        if self.a == 0 {
            0
        } else {
            ipow(self.p, self.a - 1) as usize
        }
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.p, self.s, self.a)
    }
}

/// Canonical form of an ideal of `R`.
///
/// `Full { i0, i1, h }` is `⟨Y^i0 + p Σ_{j<i1} h_j Y^j, p Y^i1⟩` with
/// Teichmüller `h_j`; `TorsionOnly { i1 }` is `⟨p Y^i1⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonicalCode {
    Full { i0: usize, i1: usize, h: Vec<GrElem> },
    TorsionOnly { i1: usize },
}

impl CanonicalCode {
    pub fn unit_ideal() -> Self {
        CanonicalCode::Full {
            i0: 0,
            i1: 0,
            h: Vec::new(),
        }
    }

    /// `(i0, i1)`, with `i0 = N` for torsion-only codes.
    pub fn indices(&self, n: usize) -> (usize, usize) {
        match self {
            CanonicalCode::Full { i0, i1, .. } => (*i0, *i1),
            CanonicalCode::TorsionOnly { i1 } => (n, *i1),
        }
    }
}

/// Element of `R` in the `u` basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotPoly(pub(crate) Vec<GrElem>);

impl QuotPoly {
    pub fn coeffs(&self) -> &[GrElem] {
        &self.0
    }
}

/// The quotient ring `GR(p^2, s)[u]/(u^(p^a) - 1)`.
#[derive(Clone, Debug)]
pub struct CyclicRing {
    params: CodeParams,
    ring: GaloisRing,
    n: usize,
    // residues mod p of the carry polynomial q(Y), Y basis, length N
    carry: Vec<u64>,
}

impl CyclicRing {
    pub fn new(params: CodeParams) -> Result<Self> {
        let ring = GaloisRing::new(params.p, params.s)?;
        Self::with_ring(ring, params.a)
    }

    pub fn with_ring(ring: GaloisRing, a: u32) -> Result<Self> {
        let params = CodeParams::new(ring.characteristic_prime(), ring.degree(), a)?;
        let n = params.length();
        let p = params.p;
        let mut carry = vec![0u64; n];
        let mut binom = BigUint::from(1u32);
        let p2 = BigUint::from(p * p);
        for (k, slot) in carry.iter_mut().enumerate().skip(1) {
            binom = binom * BigUint::from((n - k + 1) as u64) / BigUint::from(k as u64);
            if k < n {
                let r: u64 = (&binom % &p2).try_into().expect("residue below p^2");
                debug_assert_eq!(r % p, 0);
                *slot = r / p;
            }
        }
        let cr = Self {
            params,
            ring,
            n,
            carry,
        };
        // Y^N + p q(Y) = 0 in R
        let y_n = cr.pow(&cr.y(), n as u64);
        let pq = cr.from_y(
            &cr.carry
                .iter()
                .map(|&c| cr.ring.from_int((c * p) as i64))
                .collect::<Vec<_>>(),
        );
        if !cr.is_zero(&cr.add(&y_n, &pq)) {
            return Err(Error::Internal("carry identity failed".into()));
        }
        Ok(cr)
    }

    pub fn params(&self) -> CodeParams {
        self.params
    }

    pub fn ring(&self) -> &GaloisRing {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.n
    }

    /// Residues mod p of the carry polynomial `q`, in the `Y` basis.
    pub fn carry_residue(&self) -> &[u64] {
        &self.carry
    }

    // Y-valuation of q mod p: p^(a-1), or N when q = 0.
    fn carry_valuation(&self) -> usize {
        self.carry.iter().position(|&c| c != 0).unwrap_or(self.n)
    }

    pub fn from_u_coeffs(&self, coeffs: Vec<GrElem>) -> Result<QuotPoly> {
        if coeffs.len() != self.n {
            return Err(Error::OutOfRange {
                what: "polynomial length",
                detail: format!("expected {} coefficients, got {}", self.n, coeffs.len()),
            });
        }
        Ok(QuotPoly(coeffs))
    }

    /// Reduce an arbitrary-length `u` polynomial via `u^N = 1`.
    pub fn from_u_poly(&self, coeffs: &[GrElem]) -> QuotPoly {
        let mut v = vec![self.ring.zero(); self.n];
        for (k, c) in coeffs.iter().enumerate() {
            let slot = k % self.n;
            v[slot] = self.ring.add(&v[slot], c);
        }
        QuotPoly(v)
    }

    pub fn zero(&self) -> QuotPoly {
        QuotPoly(vec![self.ring.zero(); self.n])
    }

    pub fn constant(&self, c: GrElem) -> QuotPoly {
        let mut v = self.zero();
        v.0[0] = c;
        v
    }

    pub fn one(&self) -> QuotPoly {
        self.constant(self.ring.one())
    }

    pub fn u(&self) -> QuotPoly {
        self.u_power(1)
    }

    pub fn u_power(&self, k: usize) -> QuotPoly {
        let mut v = self.zero();
        v.0[k % self.n] = self.ring.add(&v.0[k % self.n], &self.ring.one());
        v
    }

    /// `Y = u - 1`.
    pub fn y(&self) -> QuotPoly {
        self.sub(&self.u(), &self.one())
    }

    pub fn y_power(&self, k: usize) -> QuotPoly {
        self.pow(&self.y(), k as u64)
    }

    pub fn is_zero(&self, a: &QuotPoly) -> bool {
        a.0.iter().all(|c| self.ring.is_zero(c))
    }

    pub fn add(&self, a: &QuotPoly, b: &QuotPoly) -> QuotPoly {
        QuotPoly(a.0.iter().zip(&b.0).map(|(x, y)| self.ring.add(x, y)).collect())
    }

    pub fn sub(&self, a: &QuotPoly, b: &QuotPoly) -> QuotPoly {
        QuotPoly(a.0.iter().zip(&b.0).map(|(x, y)| self.ring.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &QuotPoly) -> QuotPoly {
        QuotPoly(a.0.iter().map(|x| self.ring.neg(x)).collect())
    }

    pub fn mul(&self, a: &QuotPoly, b: &QuotPoly) -> QuotPoly {
        let n = self.n;
        let mut out = vec![self.ring.zero(); n];
        for (i, x) in a.0.iter().enumerate() {
            if self.ring.is_zero(x) {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if self.ring.is_zero(y) {
                    continue;
                }
                let k = (i + j) % n;
                out[k] = self.ring.add(&out[k], &self.ring.mul(x, y));
            }
        }
        QuotPoly(out)
    }

    pub fn scale(&self, c: &GrElem, a: &QuotPoly) -> QuotPoly {
        QuotPoly(a.0.iter().map(|x| self.ring.mul(c, x)).collect())
    }

    pub fn times_p(&self, a: &QuotPoly) -> QuotPoly {
        QuotPoly(a.0.iter().map(|x| self.ring.times_p(x)).collect())
    }

    pub fn pow(&self, a: &QuotPoly, mut e: u64) -> QuotPoly {
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

    /// Coefficients in the `Y = u - 1` basis.
    pub fn to_y(&self, a: &QuotPoly) -> Vec<GrElem> {
        self.horner_shift(&a.0, 1)
    }

    /// Element with the given `Y`-basis coefficients (length at most `N`).
    pub fn from_y(&self, coeffs: &[GrElem]) -> QuotPoly {
        debug_assert!(coeffs.len() <= self.n);
        let mut v = coeffs.to_vec();
        v.resize(self.n, self.ring.zero());
        QuotPoly(self.horner_shift(&v, -1))
    }

    // Rewrite Σ c_k X^k as a polynomial in Z = X - shift (degree < N, no reduction).
    fn horner_shift(&self, coeffs: &[GrElem], shift: i64) -> Vec<GrElem> {
        let r = &self.ring;
        let sh = r.from_int(shift);
        let mut acc: Vec<GrElem> = Vec::with_capacity(self.n);
        for c in coeffs.iter().rev() {
            // acc <- acc * (Z + shift) + c
            let mut next = vec![r.zero(); acc.len() + 1];
            for (k, x) in acc.iter().enumerate() {
                next[k + 1] = r.add(&next[k + 1], x);
                next[k] = r.add(&next[k], &r.mul(x, &sh));
            }
            next[0] = r.add(&next[0], c);
            acc = next;
        }
        acc.resize(self.n.max(acc.len()), r.zero());
        acc.truncate(self.n);
        acc
    }

    fn residues(&self, y: &[GrElem]) -> Vec<FqElem> {
        y.iter().map(|c| self.ring.residue(c)).collect()
    }

    fn valuation(&self, v: &[FqElem]) -> usize {
        let f = self.ring.residue_field();
        v.iter().position(|c| !f.is_zero(c)).unwrap_or(self.n)
    }

    /// Valuation in `Y` of the residue of `a` in `F_q[Y]/(Y^N)` (N when `a ∈ pR`).
    pub fn residue_valuation(&self, a: &QuotPoly) -> usize {
        self.valuation(&self.residues(&self.to_y(a)))
    }

    // For a ∈ pR: Y-basis residue of a / p.
    fn torsion_residue(&self, a: &QuotPoly) -> Vec<FqElem> {
        self.to_y(a)
            .iter()
            .map(|c| {
                debug_assert!(self.ring.is_in_maximal_ideal(c));
                self.ring.residue(&self.ring.div_p(c))
            })
            .collect()
    }

    /// Inverse of a unit of `R` by Newton iteration.
    pub fn inv(&self, a: &QuotPoly) -> Result<QuotPoly> {
        let c: GrElem = a
            .0
            .iter()
            .fold(self.ring.zero(), |acc, x| self.ring.add(&acc, x));
        let c_inv = self.ring.inv(&c)?;
        let mut x = self.constant(c_inv);
        let two = self.constant(self.ring.from_int(2));
        let one = self.one();
        for _ in 0..2 * (usize::BITS as usize) {
            let ax = self.mul(a, &x);
            if ax == one {
                return Ok(x);
            }
            x = self.mul(&x, &self.sub(&two, &ax));
        }
        Err(Error::NonUnit)
    }

    fn teich_poly_y(&self, h: &[GrElem]) -> Vec<GrElem> {
        let mut v = h.to_vec();
        v.resize(self.n, self.ring.zero());
        v
    }

    /// The unit-leading generator `Y^i0 + p Σ h_j Y^j`.
    fn leading_generator(&self, i0: usize, h: &[GrElem]) -> QuotPoly {
        let w = self.from_y(&self.teich_poly_y(h));
        self.add(&self.y_power(i0), &self.times_p(&w))
    }

    /// Validate a canonical form. `Full` with `i0 = N` collapses to the
    /// equivalent `TorsionOnly` code.
    pub fn make_canonical(&self, code: CanonicalCode) -> Result<CanonicalCode> {
        let n = self.n;
        match code {
            CanonicalCode::TorsionOnly { i1 } => {
                if i1 > n {
                    return Err(Error::invalid_code(format!("i1 = {i1} exceeds length {n}")));
                }
                Ok(CanonicalCode::TorsionOnly { i1 })
            }
            CanonicalCode::Full { i0, i1, h } => {
                if i0 > n {
                    return Err(Error::invalid_code(format!("i0 = {i0} exceeds length {n}")));
                }
                if i1 > i0 {
                    return Err(Error::invalid_code(format!("i1 = {i1} exceeds i0 = {i0}")));
                }
                if h.len() != i1 {
                    return Err(Error::invalid_code(format!(
                        "expected {i1} h-coefficients, got {}",
                        h.len()
                    )));
                }
                if h.iter().any(|x| x.0.len() != self.ring.degree()) {
                    return Err(Error::invalid_code("h-coefficient from another ring"));
                }
                if let Some(j) = h.iter().position(|x| !self.ring.is_teichmuller(x)) {
                    return Err(Error::invalid_code(format!("h_{j} is not Teichmüller")));
                }
                // Y^(N - i0) w - q must vanish mod Y^i1
                let shift = n - i0;
                for k in 0..i1 {
                    let w = if k >= shift {
                        self.ring.residue(&h[k - shift])
                    } else {
                        self.ring.residue_field().zero()
                    };
                    let q = self.ring.residue_field().from_int(self.carry[k]);
                    if w != q {
                        return Err(Error::invalid_code(format!(
                            "h-coefficients inconsistent with i0 = {i0}, i1 = {i1} at Y^{k}"
                        )));
                    }
                }
                if i0 == n {
                    Ok(CanonicalCode::TorsionOnly { i1 })
                } else {
                    Ok(CanonicalCode::Full { i0, i1, h })
                }
            }
        }
    }

    /// `|C|` as an exact integer.
    pub fn cardinality(&self, code: &CanonicalCode) -> BigUint {
        let n = self.n;
        let exp = match code {
            CanonicalCode::Full { i0, i1, .. } => 2 * n - i0 - i1,
            CanonicalCode::TorsionOnly { i1 } => n - i1,
        };
        BigUint::from(self.params.p).pow((self.params.s * exp) as u32)
    }

    /// `log_p |C|`.
    pub fn log_cardinality(&self, code: &CanonicalCode) -> usize {
        let (i0, i1) = code.indices(self.n);
        self.params.s * (2 * self.n - i0 - i1)
    }

    /// Generators of the canonical form, in the `u` basis.
    pub fn generators(&self, code: &CanonicalCode) -> Vec<QuotPoly> {
        match code {
            CanonicalCode::Full { i0, i1, h } => vec![
                self.leading_generator(*i0, h),
                self.times_p(&self.y_power(*i1)),
            ],
            CanonicalCode::TorsionOnly { i1 } => vec![self.times_p(&self.y_power(*i1))],
        }
    }

    /// Canonical form of the ideal generated by `gens`.
    pub fn normalize(&self, gens: &[QuotPoly]) -> CanonicalCode {
        let n = self.n;
        let f = self.ring.residue_field();
        let vals: Vec<usize> = gens.iter().map(|g| self.residue_valuation(g)).collect();
        let i0 = vals.iter().copied().min().unwrap_or(n);
        if i0 == n {
            let i1 = gens
                .iter()
                .map(|g| self.valuation(&self.torsion_residue(g)))
                .min()
                .unwrap_or(n);
            return CanonicalCode::TorsionOnly { i1 };
        }
        let star = vals.iter().position(|&v| v == i0).expect("minimum attained");
        let g_star = &gens[star];
        let y_star = self.to_y(g_star);
        // g* = Y^i0 U + (terms in pR below Y^i0)
        let unit_part: Vec<GrElem> = y_star[i0..].to_vec();
        let unit = self.from_y(&unit_part);
        let unit_inv = self.inv(&unit).expect("unit cofactor");
        let lead = self.mul(&unit_inv, g_star);
        let w_bar = self.torsion_residue(&self.sub(&lead, &self.y_power(i0)));

        let mut i1 = i0;
        // Y^(N - i0) G = p (Y^(N - i0) w - q)
        let mut wrap = vec![f.zero(); n];
        for (k, slot) in wrap.iter_mut().enumerate() {
            let from_w = if k >= n - i0 {
                w_bar[k - (n - i0)].clone()
            } else {
                f.zero()
            };
            *slot = f.sub(&from_w, &f.from_int(self.carry[k]));
        }
        i1 = i1.min(self.valuation(&wrap));

        for (k, g) in gens.iter().enumerate() {
            if k == star {
                continue;
            }
            let t = self.reduce_by_leading(g, i0, &lead);
            i1 = i1.min(self.valuation(&t));
        }

        let h = w_bar[..i1]
            .iter()
            .map(|x| self.ring.lift_teichmuller(x))
            .collect();
        CanonicalCode::Full { i0, i1, h }
    }

    // g - B G for B̄ = ḡ / Y^i0; returns the residue of the result divided by p.
    fn reduce_by_leading(&self, g: &QuotPoly, i0: usize, lead: &QuotPoly) -> Vec<FqElem> {
        let y = self.to_y(g);
        let mut b = vec![self.ring.zero(); self.n];
        for k in i0..self.n {
            b[k - i0] = self.ring.naive_lift(&self.ring.residue(&y[k]));
        }
        let rest = self.sub(g, &self.mul(&self.from_y(&b), lead));
        self.torsion_residue(&rest)
    }

    /// Membership test.
    pub fn contains(&self, code: &CanonicalCode, v: &QuotPoly) -> bool {
        match code {
            CanonicalCode::Full { i0, i1, h } => {
                if self.residue_valuation(v) < *i0 {
                    return false;
                }
                let lead = self.leading_generator(*i0, h);
                let t = self.reduce_by_leading(v, *i0, &lead);
                self.valuation(&t) >= *i1
            }
            CanonicalCode::TorsionOnly { i1 } => {
                if self.residue_valuation(v) < self.n {
                    return false;
                }
                self.valuation(&self.torsion_residue(v)) >= *i1
            }
        }
    }

    /// Whether two codes denote nested ideals `a ⊆ b`.
    pub fn is_subcode(&self, a: &CanonicalCode, b: &CanonicalCode) -> bool {
        self.generators(a).iter().all(|g| self.contains(b, g))
    }

    /// Stream every codeword exactly once.
    pub fn codewords(&self, code: &CanonicalCode) -> Result<Codewords<'_>> {
        let size = self.cardinality(code);
        if size > BigUint::from(CODEWORD_CEILING) {
            return Err(Error::LimitExceeded {
                what: "code size",
                size: size.try_into().unwrap_or(u128::MAX),
                limit: CODEWORD_CEILING as u128,
            });
        }
        let teich = self.ring.teichmuller_set()?;
        let n = self.n;
        let (i0, i1) = code.indices(n);
        let mut basis = Vec::new();
        if let CanonicalCode::Full { i0, h, .. } = code {
            let lead = self.leading_generator(*i0, h);
            for k in 0..n - i0 {
                basis.push(self.mul(&self.y_power(k), &lead));
            }
        }
        for j in i1..n {
            basis.push(self.times_p(&self.y_power(j)));
        }
        debug_assert_eq!(basis.len(), 2 * n - i0 - i1);
        Ok(Codewords {
            cr: self,
            teich,
            digits: vec![0; basis.len()],
            basis,
            done: false,
        })
    }

    /// Number of ideals, counted from the canonical-form constraints.
    pub fn ideal_count(&self) -> BigUint {
        let n = self.n;
        let q = BigUint::from(self.ring.residue_order());
        let mut total = BigUint::from((n + 1) as u64);
        for i0 in 0..n {
            for i1 in 0..=i0 {
                if let Some(free) = self.free_positions(i0, i1) {
                    total += q.pow(free as u32);
                }
            }
        }
        total
    }

    // Number of free h positions for a full shape, or None if no h fits.
    fn free_positions(&self, i0: usize, i1: usize) -> Option<usize> {
        let free = i1.min(self.n - i0);
        (free <= self.carry_valuation()).then_some(free)
    }

    /// Every ideal of `R` exactly once: full forms by `(i0, i1, h)`, then the
    /// torsion-only codes by `i1`.
    pub fn enumerate_ideals(&self) -> Result<IdealIter<'_>> {
        let count = self.ideal_count();
        if count > BigUint::from(IDEAL_CEILING) {
            return Err(Error::LimitExceeded {
                what: "ideal count",
                size: count.try_into().unwrap_or(u128::MAX),
                limit: IDEAL_CEILING as u128,
            });
        }
        let teich = self.ring.teichmuller_set()?;
        let mut it = IdealIter {
            cr: self,
            teich,
            i0: 0,
            i1: 0,
            digits: Vec::new(),
            torsion: None,
        };
        it.settle();
        Ok(it)
    }
}

/// Iterator over the codewords of a code.
pub struct Codewords<'a> {
    cr: &'a CyclicRing,
    teich: Vec<GrElem>,
    basis: Vec<QuotPoly>,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = QuotPoly;

    fn next(&mut self) -> Option<QuotPoly> {
        if self.done {
            return None;
        }
        let mut v = self.cr.zero();
        for (d, b) in self.digits.iter().zip(&self.basis) {
            if *d != 0 {
                v = self.cr.add(&v, &self.cr.scale(&self.teich[*d], b));
            }
        }
        self.done = !bump(&mut self.digits, self.teich.len());
        Some(v)
    }
}

// Mixed-radix increment; false on wrap-around.
fn bump(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// Iterator over all ideals of a [`CyclicRing`].
pub struct IdealIter<'a> {
    cr: &'a CyclicRing,
    teich: Vec<GrElem>,
    i0: usize,
    i1: usize,
    digits: Vec<usize>,
    torsion: Option<usize>,
}

impl IdealIter<'_> {
    // Move to the next full shape that admits h values, resetting digits.
    fn settle(&mut self) {
        let n = self.cr.n;
        while self.torsion.is_none() {
            if self.i0 >= n {
                self.torsion = Some(0);
                return;
            }
            if let Some(free) = self.cr.free_positions(self.i0, self.i1) {
                self.digits = vec![0; free];
                return;
            }
            self.advance_shape();
        }
    }

    fn advance_shape(&mut self) {
        self.i1 += 1;
        if self.i1 > self.i0 {
            self.i0 += 1;
            self.i1 = 0;
        }
    }

    fn current(&self) -> CanonicalCode {
        let n = self.cr.n;
        let forced = self.i1.saturating_sub(n - self.i0);
        let ring = &self.cr.ring;
        let mut h = Vec::with_capacity(self.i1);
        for j in 0..self.i1 {
            if j < forced {
                let c = self.cr.carry[j + n - self.i0];
                h.push(ring.lift_teichmuller(&ring.residue_field().from_int(c)));
            } else {
                h.push(self.teich[self.digits[j - forced]].clone());
            }
        }
        CanonicalCode::Full {
            i0: self.i0,
            i1: self.i1,
            h,
        }
    }
}

impl Iterator for IdealIter<'_> {
    type Item = CanonicalCode;

    fn next(&mut self) -> Option<CanonicalCode> {
        if let Some(i1) = self.torsion {
            if i1 > self.cr.n {
                return None;
            }
            self.torsion = Some(i1 + 1);
            return Some(CanonicalCode::TorsionOnly { i1 });
        }
        let code = self.current();
        if !bump(&mut self.digits, self.teich.len()) {
            self.advance_shape();
            self.settle();
        }
        Some(code)
    }
}

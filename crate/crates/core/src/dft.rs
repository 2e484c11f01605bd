//! Cyclotomic cosets, the discrete Fourier transform of
//! `GR(p^2, s)[X]/(X^(m p^a) - 1)` into a product of rings
//! `GR(p^2, s m_h)[u]/(u^(p^a) - 1)`, and composite-length self-dual codes.

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclic::{CanonicalCode, CyclicRing, QuotPoly};
use crate::duality::{self, DualKind};
use crate::galois_ring::{Embedding, GaloisRing, GrElem};
use crate::numtheory::{gcd, inv_mod, ipow, is_prime, multiplicative_order};
use crate::{Error, Result};

/// The orbit `{h q^i mod m}` in increasing order.
pub fn coset(h: u64, m: u64, q: u64) -> Result<Vec<u64>> {
    if m == 0 || gcd(q % m, m) != 1 && m > 1 {
        return Err(Error::OutOfRange {
            what: "modulus",
            detail: format!("{q} is not invertible modulo {m}"),
        });
    }
    if h >= m {
        return Err(Error::OutOfRange {
            what: "h",
            detail: format!("{h} not below {m}"),
        });
    }
    let mut out = vec![h];
    let mut x = h * (q % m) % m;
    while x != h {
        out.push(x);
        x = x * (q % m) % m;
    }
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CosetClass {
    /// `{0}` and, for even `m`, `{m/2}`.
    J0,
    /// Self-inverse cosets outside `J0`.
    J1,
    /// The chosen member of an inverse pair.
    J2Prime,
    /// The negation of a `J2Prime` representative.
    J2Double,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub rep: usize,
    /// Members in orbit order `rep, rep q, rep q^2, …`.
    pub orbit: Vec<usize>,
    pub class: CosetClass,
}

impl Coset {
    pub fn size(&self) -> usize {
        self.orbit.len()
    }
}

/// The `q = p^s` cyclotomic cosets modulo `m`, classified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetPartition {
    pub m: usize,
    pub q_mod_m: usize,
    /// Cosets in increasing order of representative.
    pub cosets: Vec<Coset>,
    pub j0: Vec<usize>,
    pub j1: Vec<usize>,
    pub j2_prime: Vec<usize>,
    pub j2_double: Vec<usize>,
    // h -> index into cosets
    owner: Vec<usize>,
}

impl CosetPartition {
    /// Size of the coset containing `h`.
    pub fn size_of(&self, h: usize) -> usize {
        self.cosets[self.owner[h % self.m]].size()
    }

    pub fn coset_of(&self, h: usize) -> &Coset {
        &self.cosets[self.owner[h % self.m]]
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.cosets.iter().map(|c| c.rep).collect()
    }
}

/// Classify the `p^s`-cyclotomic cosets modulo `m`. Representatives are the
/// least element, except that each `J2Double` coset is represented by the
/// negation of its partner's representative.
pub fn partition(m: u64, p: u64, s: usize) -> Result<CosetPartition> {
    if m == 0 || m % p == 0 {
        return Err(Error::OutOfRange {
            what: "m",
            detail: format!("{m} must be positive and coprime to {p}"),
        });
    }
    let mu = m as usize;
    let q = crate::numtheory::pow_mod(p, s as u64, m);
    let mut owner = vec![usize::MAX; mu];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for h in 0..mu {
        if owner[h] != usize::MAX {
            continue;
        }
        let mut orbit = vec![h];
        let mut x = h * q as usize % mu;
        while x != h {
            orbit.push(x);
            x = x * q as usize % mu;
        }
        for &y in &orbit {
            owner[y] = raw.len();
        }
        raw.push(orbit);
    }
    let neg = |h: usize| (mu - h) % mu;
    let mut cosets = Vec::with_capacity(raw.len());
    let (mut j0, mut j1, mut j2p, mut j2d) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for (idx, orbit) in raw.iter().enumerate() {
        let least = orbit[0];
        let partner = owner[neg(least)];
        let (rep, class) = if least == 0 || (mu % 2 == 0 && least == mu / 2) {
            (least, CosetClass::J0)
        } else if partner == idx {
            (least, CosetClass::J1)
        } else if least < raw[partner][0] {
            (least, CosetClass::J2Prime)
        } else {
            (neg(raw[partner][0]), CosetClass::J2Double)
        };
        // rotate the orbit so it starts at the representative
        let start = orbit.iter().position(|&x| x == rep).expect("rep in orbit");
        let mut rotated = orbit[start..].to_vec();
        rotated.extend_from_slice(&orbit[..start]);
        match class {
            CosetClass::J0 => j0.push(rep),
            CosetClass::J1 => j1.push(rep),
            CosetClass::J2Prime => j2p.push(rep),
            CosetClass::J2Double => j2d.push(rep),
        }
        cosets.push(Coset {
            rep,
            orbit: rotated,
            class,
        });
    }
    cosets.sort_by_key(|c| c.rep);
    for (i, c) in cosets.iter().enumerate() {
        for &y in &c.orbit {
            owner[y] = i;
        }
    }
    for v in [&mut j0, &mut j1, &mut j2p, &mut j2d] {
        v.sort_unstable();
    }
    Ok(CosetPartition {
        m: mu,
        q_mod_m: q as usize,
        cosets,
        j0,
        j1,
        j2_prime: j2p,
        j2_double: j2d,
        owner,
    })
}

/// Parameters of length `n = m p^a` with `p ∤ m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompositeParams {
    pub p: u64,
    pub s: usize,
    pub m: u64,
    pub a: u32,
    pub n: u64,
    /// `m^(-1) mod p^a` (0 when `p^a = 1`).
    pub m_inv: u64,
    /// Multiplicative order of `p^s` modulo `m`.
    pub order: usize,
}

impl CompositeParams {
    pub fn new(p: u64, s: usize, n: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 {
            return Err(Error::ZeroDegree);
        }
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "n",
                detail: "length must be positive".into(),
            });
        }
        let (m, a) = crate::counting::split_length(p, n);
        let np = ipow(p, a);
        let m_inv = if np == 1 { 0 } else { inv_mod(m % np, np).expect("p ∤ m") };
        let q = crate::numtheory::pow_mod(p, s as u64, m);
        let order = multiplicative_order(q, m) as usize;
        Ok(Self {
            p,
            s,
            m,
            a,
            n,
            m_inv,
            order,
        })
    }

    /// `p^a`.
    pub fn prime_power(&self) -> usize {
        ipow(self.p, self.a) as usize
    }
}

/// Per-representative transform values, each in its component ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DftVector {
    pub components: Vec<QuotPoly>,
}

/// A cyclic code of composite length given by its component codes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecomposedCode {
    pub n: u64,
    /// `(representative, component code)` in increasing representative order.
    pub components: Vec<(usize, CanonicalCode)>,
}

/// Largest transform extension degree `s M` accepted.
pub const EXTENSION_CEILING: usize = 24;

/// Largest number of composite self-dual codes materialized at once.
pub const COMPOSITE_CEILING: u64 = 1 << 20;

struct Component {
    rep: usize,
    class: CosetClass,
    orbit: Vec<usize>,
    ring: CyclicRing,
    embed: Embedding,
}

/// Transform context for one length over one base ring.
pub struct Dft {
    params: CompositeParams,
    partition: CosetPartition,
    base: CyclicRing,
    ext: CyclicRing,
    base_embed: Embedding,
    zeta: GrElem,
    m_inv_ring: GrElem,
    components: Vec<Component>,
}

impl fmt::Debug for Dft {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Dft")
            .field("params", &self.params)
            .field("reps", &self.partition.representatives())
            .finish()
    }
}

impl Dft {
    pub fn new(p: u64, s: usize, n: u64) -> Result<Self> {
        Self::with_base(GaloisRing::new(p, s)?, n)
    }

    pub fn with_base(base_ring: GaloisRing, n: u64) -> Result<Self> {
        let p = base_ring.characteristic_prime();
        let s = base_ring.degree();
        let params = CompositeParams::new(p, s, n)?;
        let ext_degree = s * params.order;
        if ext_degree > EXTENSION_CEILING {
            return Err(Error::LimitExceeded {
                what: "transform extension degree",
                size: ext_degree as u128,
                limit: EXTENSION_CEILING as u128,
            });
        }
        let partition = partition(params.m, p, s)?;
        let mut rings: BTreeMap<usize, GaloisRing> = BTreeMap::new();
        rings.insert(s, base_ring.clone());
        let mut ring_of = |deg: usize| -> Result<GaloisRing> {
            if let Some(r) = rings.get(&deg) {
                return Ok(r.clone());
            }
            let r = GaloisRing::new(p, deg)?;
            rings.insert(deg, r.clone());
            Ok(r)
        };
        let ext_ring = ring_of(ext_degree)?;
        let base = CyclicRing::with_ring(base_ring.clone(), params.a)?;
        let ext = CyclicRing::with_ring(ext_ring.clone(), params.a)?;
        let base_embed = Embedding::new(&base_ring, &ext_ring)?;
        let big_q = ext_ring.residue_order() as u128;
        let zeta = ext_ring.pow(&ext_ring.xi(), (big_q - 1) / params.m as u128);
        let m_inv_ring = base_ring.inv(&base_ring.from_int(params.m as i64))?;

        let mut components = Vec::with_capacity(partition.cosets.len());
        let mut by_degree: BTreeMap<usize, (CyclicRing, Embedding)> = BTreeMap::new();
        for c in &partition.cosets {
            let deg = s * c.size();
            if !by_degree.contains_key(&deg) {
                let r = ring_of(deg)?;
                let cr = CyclicRing::with_ring(r.clone(), params.a)?;
                let emb = Embedding::new(&r, &ext_ring)?;
                by_degree.insert(deg, (cr, emb));
            }
            let (cr, emb) = by_degree[&deg].clone();
            components.push(Component {
                rep: c.rep,
                class: c.class,
                orbit: c.orbit.clone(),
                ring: cr,
                embed: emb,
            });
        }
        Ok(Self {
            params,
            partition,
            base,
            ext,
            base_embed,
            zeta,
            m_inv_ring,
            components,
        })
    }

    pub fn params(&self) -> &CompositeParams {
        &self.params
    }

    pub fn partition(&self) -> &CosetPartition {
        &self.partition
    }

    /// `GR(p^2, s)[u]/(u^(p^a) - 1)`.
    pub fn base(&self) -> &CyclicRing {
        &self.base
    }

    /// `GR(p^2, sM)[u]/(u^(p^a) - 1)`.
    pub fn ext(&self) -> &CyclicRing {
        &self.ext
    }

    pub fn zeta(&self) -> &GrElem {
        &self.zeta
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.rep).collect()
    }

    fn slot(&self, rep: usize) -> Result<usize> {
        self.components
            .iter()
            .position(|c| c.rep == rep)
            .ok_or_else(|| Error::OutOfRange {
                what: "representative",
                detail: format!("{rep} is not a coset representative"),
            })
    }

    pub fn component_ring(&self, rep: usize) -> Result<&CyclicRing> {
        Ok(&self.components[self.slot(rep)?].ring)
    }

    pub fn class_of(&self, rep: usize) -> Result<CosetClass> {
        Ok(self.components[self.slot(rep)?].class)
    }

    fn check_len(&self, c: &[GrElem]) -> Result<()> {
        if c.len() as u64 != self.params.n {
            return Err(Error::OutOfRange {
                what: "vector length",
                detail: format!("expected {}, got {}", self.params.n, c.len()),
            });
        }
        Ok(())
    }

    /// `Φ`: `(d_0, …, d_(m-1))` with `d_i = Σ_j c_(i,j) u^j` to `Σ c_(i,j) X^(i + j m)`.
    pub fn phi(&self, tuple: &[QuotPoly]) -> Result<Vec<GrElem>> {
        let m = self.params.m as usize;
        let np = self.params.prime_power();
        if tuple.len() != m {
            return Err(Error::OutOfRange {
                what: "tuple length",
                detail: format!("expected {m}, got {}", tuple.len()),
            });
        }
        let mut out = vec![self.base.ring().zero(); m * np];
        for (i, d) in tuple.iter().enumerate() {
            for (j, c) in d.coeffs().iter().enumerate() {
                out[i + j * m] = c.clone();
            }
        }
        Ok(out)
    }

    pub fn phi_inverse(&self, c: &[GrElem]) -> Result<Vec<QuotPoly>> {
        self.check_len(c)?;
        let m = self.params.m as usize;
        let np = self.params.prime_power();
        (0..m)
            .map(|i| {
                self.base
                    .from_u_coeffs((0..np).map(|j| c[i + j * m].clone()).collect())
            })
            .collect()
    }

    fn embed_poly(&self, emb: &Embedding, v: &QuotPoly) -> QuotPoly {
        QuotPoly(v.coeffs().iter().map(|x| emb.apply(x)).collect())
    }

    fn preimage_poly(&self, emb: &Embedding, v: &QuotPoly) -> Result<QuotPoly> {
        v.coeffs()
            .iter()
            .map(|x| {
                emb.preimage(x).ok_or_else(|| {
                    Error::Internal(format!("coefficient outside {}", emb.base()))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(QuotPoly)
    }

    // ĉ_h in the extension ring.
    fn transform_at(&self, tuple_ext: &[QuotPoly], h: usize) -> QuotPoly {
        let ext = &self.ext;
        let m = self.params.m as usize;
        let m_inv = self.params.m_inv as usize;
        let mut acc = ext.zero();
        let step = ext.ring().pow(&self.zeta, h as u128);
        let mut z = ext.ring().one();
        for (i, d) in tuple_ext.iter().enumerate().take(m) {
            let shifted = ext.mul(&ext.u_power(m_inv * i), d);
            acc = ext.add(&acc, &ext.scale(&z, &shifted));
            z = ext.ring().mul(&z, &step);
        }
        acc
    }

    fn tuple_in_ext(&self, c: &[GrElem]) -> Result<Vec<QuotPoly>> {
        Ok(self
            .phi_inverse(c)?
            .iter()
            .map(|d| self.embed_poly(&self.base_embed, d))
            .collect())
    }

    /// `ĉ_h` for every `h` in `0..m`, in the extension ring.
    pub fn forward_full(&self, c: &[GrElem]) -> Result<Vec<QuotPoly>> {
        let t = self.tuple_in_ext(c)?;
        Ok((0..self.params.m as usize)
            .map(|h| self.transform_at(&t, h))
            .collect())
    }

    /// Components at each representative, recognized in the component rings.
    pub fn forward(&self, c: &[GrElem]) -> Result<DftVector> {
        let t = self.tuple_in_ext(c)?;
        let components = self
            .components
            .iter()
            .map(|comp| {
                let v = self.transform_at(&t, comp.rep);
                self.preimage_poly(&comp.embed, &v)
            })
            .collect::<Result<_>>()?;
        Ok(DftVector { components })
    }

    /// Inverse transform back to a length-`n` coefficient vector.
    pub fn inverse(&self, v: &DftVector) -> Result<Vec<GrElem>> {
        if v.components.len() != self.components.len() {
            return Err(Error::OutOfRange {
                what: "component count",
                detail: format!(
                    "expected {}, got {}",
                    self.components.len(),
                    v.components.len()
                ),
            });
        }
        let ext = &self.ext;
        let er = ext.ring();
        let m = self.params.m as usize;
        let s = self.params.s;
        // full list ĉ_h via ĉ_(h q^k) = σ_s^k(ĉ_h)
        let mut full: Vec<Option<QuotPoly>> = vec![None; m];
        for (comp, val) in self.components.iter().zip(&v.components) {
            if val.coeffs().len() != self.params.prime_power()
                || val.coeffs().iter().any(|x| x.coeffs().len() != comp.ring.ring().degree())
            {
                return Err(Error::Incompatible(format!(
                    "component {} is not over {}",
                    comp.rep,
                    comp.ring.ring()
                )));
            }
            let mut cur = self.embed_poly(&comp.embed, val);
            for &h in &comp.orbit {
                full[h] = Some(cur.clone());
                cur = QuotPoly(cur.coeffs().iter().map(|x| er.frobenius(x, s)).collect());
            }
        }
        let full: Vec<QuotPoly> = full.into_iter().map(|x| x.expect("orbits cover")).collect();
        let m_inv = self.base_embed.apply(&self.m_inv_ring);
        let zeta_inv = er.pow(&self.zeta, (m as u128) - 1);
        let np = self.params.prime_power();
        let mut tuple = Vec::with_capacity(m);
        for i in 0..m {
            // D_i = (1/m) Σ_h ĉ_h ζ^(-h i), d_i = u^(-m' i) D_i
            let step = er.pow(&zeta_inv, i as u128);
            let mut z = er.one();
            let mut acc = ext.zero();
            for ch in &full {
                acc = ext.add(&acc, &ext.scale(&z, ch));
                z = er.mul(&z, &step);
            }
            acc = ext.scale(&m_inv, &acc);
            let back = (np - (self.params.m_inv as usize * i) % np) % np;
            acc = ext.mul(&ext.u_power(back), &acc);
            tuple.push(self.preimage_poly(&self.base_embed, &acc)?);
        }
        self.phi(&tuple)
    }

    /// Product in `GR(p^2, s)[X]/(X^n - 1)`.
    pub fn mul(&self, a: &[GrElem], b: &[GrElem]) -> Vec<GrElem> {
        let r = self.base.ring();
        let n = self.params.n as usize;
        let mut out = vec![r.zero(); n];
        for (i, x) in a.iter().enumerate() {
            if r.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let k = (i + j) % n;
                out[k] = r.add(&out[k], &r.mul(x, y));
            }
        }
        out
    }

    /// Component-wise product of transform vectors.
    pub fn mul_components(&self, a: &DftVector, b: &DftVector) -> DftVector {
        DftVector {
            components: self
                .components
                .iter()
                .zip(a.components.iter().zip(&b.components))
                .map(|(c, (x, y))| c.ring.mul(x, y))
                .collect(),
        }
    }

    /// Component codes of the ideal generated by `gens`.
    pub fn decompose(&self, gens: &[Vec<GrElem>]) -> Result<DecomposedCode> {
        let transforms = gens
            .iter()
            .map(|g| self.forward(g))
            .collect::<Result<Vec<_>>>()?;
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(k, comp)| {
                let g: Vec<QuotPoly> = transforms.iter().map(|t| t.components[k].clone()).collect();
                (comp.rep, comp.ring.normalize(&g))
            })
            .collect();
        Ok(DecomposedCode {
            n: self.params.n,
            components,
        })
    }

    fn check_decomposed(&self, code: &DecomposedCode) -> Result<()> {
        if code.n != self.params.n
            || code.components.len() != self.components.len()
            || code
                .components
                .iter()
                .zip(&self.components)
                .any(|((r, _), c)| *r != c.rep)
        {
            return Err(Error::Incompatible(format!(
                "decomposed code does not match length {} over {}",
                self.params.n,
                self.base.ring()
            )));
        }
        Ok(())
    }

    /// Generating set of the full-length code with the given components.
    pub fn compose(&self, code: &DecomposedCode) -> Result<Vec<Vec<GrElem>>> {
        self.check_decomposed(code)?;
        let mut out = Vec::new();
        for (k, (_, cc)) in code.components.iter().enumerate() {
            let ring = &self.components[k].ring;
            let cc = ring.make_canonical(cc.clone())?;
            for g in ring.generators(&cc) {
                let mut comps: Vec<QuotPoly> =
                    self.components.iter().map(|c| c.ring.zero()).collect();
                comps[k] = g;
                out.push(self.inverse(&DftVector { components: comps })?);
            }
        }
        Ok(out)
    }

    /// Component description of the Euclidean dual.
    pub fn dual_decomposition(&self, code: &DecomposedCode) -> Result<DecomposedCode> {
        self.check_decomposed(code)?;
        let m = self.params.m as usize;
        let mut components = Vec::with_capacity(code.components.len());
        for (k, comp) in self.components.iter().enumerate() {
            let c = match comp.class {
                CosetClass::J0 => duality::euclidean_dual(&comp.ring, &code.components[k].1)?,
                CosetClass::J1 => duality::hermitian_dual(&comp.ring, &code.components[k].1)?,
                CosetClass::J2Prime | CosetClass::J2Double => {
                    let partner = self.slot((m - comp.rep) % m)?;
                    duality::euclidean_dual(&comp.ring, &code.components[partner].1)?
                }
            };
            components.push((comp.rep, c));
        }
        Ok(DecomposedCode {
            n: self.params.n,
            components,
        })
    }

    /// Every Euclidean self-dual code of length `n`, as component tuples.
    /// The last free slot varies fastest.
    pub fn enumerate_self_dual_composite(&self) -> Result<CompositeIter<'_>> {
        let mut choices: Vec<Vec<CanonicalCode>> = Vec::new();
        let mut free_slots = Vec::new();
        let mut total: u128 = 1;
        for (k, comp) in self.components.iter().enumerate() {
            let list = match comp.class {
                CosetClass::J0 => duality::enumerate_self_dual(&comp.ring, DualKind::Euclidean)?,
                CosetClass::J1 => duality::enumerate_self_dual(&comp.ring, DualKind::Hermitian)?,
                CosetClass::J2Prime => comp.ring.enumerate_ideals()?.collect(),
                CosetClass::J2Double => continue,
            };
            total = total.saturating_mul(list.len() as u128);
            free_slots.push(k);
            choices.push(list);
        }
        if total > COMPOSITE_CEILING as u128 {
            return Err(Error::LimitExceeded {
                what: "composite self-dual codes",
                size: total,
                limit: COMPOSITE_CEILING as u128,
            });
        }
        let m = self.params.m as usize;
        let partners = self
            .components
            .iter()
            .map(|c| match c.class {
                CosetClass::J2Double => self.slot((m - c.rep) % m).map(Some),
                _ => Ok(None),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CompositeIter {
            dft: self,
            digits: vec![0; choices.len()],
            done: choices.iter().any(|c| c.is_empty()),
            choices,
            free_slots,
            partners,
        })
    }
}

/// Iterator over composite-length self-dual codes.
pub struct CompositeIter<'a> {
    dft: &'a Dft,
    choices: Vec<Vec<CanonicalCode>>,
    free_slots: Vec<usize>,
    partners: Vec<Option<usize>>,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for CompositeIter<'_> {
    type Item = Result<DecomposedCode>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let n_slots = self.dft.components.len();
        let mut picked: Vec<Option<CanonicalCode>> = vec![None; n_slots];
        for (i, &slot) in self.free_slots.iter().enumerate() {
            picked[slot] = Some(self.choices[i][self.digits[i]].clone());
        }
        let mut result = Ok(());
        for (slot, partner) in self.partners.iter().enumerate() {
            if let Some(src) = partner {
                let ring = &self.dft.components[slot].ring;
                match duality::euclidean_dual(ring, picked[*src].as_ref().expect("free slot")) {
                    Ok(c) => picked[slot] = Some(c),
                    Err(e) => result = Err(e),
                }
            }
        }
        // odometer with the last slot fastest
        self.done = true;
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.choices[i].len() {
                self.done = false;
                break;
            }
            self.digits[i] = 0;
        }
        Some(result.map(|_| DecomposedCode {
            n: self.dft.params.n,
            components: self
                .dft
                .components
                .iter()
                .zip(picked)
                .map(|(c, code)| (c.rep, code.expect("every slot filled")))
                .collect(),
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_examples() {
        assert_eq!(coset(1, 3, 2).unwrap(), vec![1, 2]);
        assert_eq!(coset(1, 5, 2).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(coset(1, 7, 2).unwrap(), vec![1, 2, 4]);
        assert!(coset(1, 4, 2).is_err());
    }

    #[test]
    fn partition_examples() {
        let pt = partition(3, 2, 1).unwrap();
        assert_eq!((pt.j0.clone(), pt.j1.clone()), (vec![0], vec![1]));
        assert!(pt.j2_prime.is_empty());
        let pt = partition(7, 2, 1).unwrap();
        assert_eq!(pt.j0, vec![0]);
        assert!(pt.j1.is_empty());
        assert_eq!(pt.j2_prime, vec![1]);
        assert_eq!(pt.j2_double, vec![6]);
        let pt = partition(4, 3, 1).unwrap();
        assert_eq!(pt.j0, vec![0, 2]);
        assert_eq!(pt.j1, vec![1]);
        assert!(partition(6, 2, 1).is_err());
    }

    #[test]
    fn partition_sanity() {
        for (m, p, s) in [(15u64, 2u64, 1usize), (21, 2, 2), (20, 3, 1), (13, 3, 1), (35, 2, 1)] {
            let pt = partition(m, p, s).unwrap();
            let total: usize = pt.cosets.iter().map(|c| c.size()).sum();
            assert_eq!(total, m as usize);
            assert_eq!(pt.j0.len(), if m % 2 == 0 { 2 } else { 1 });
            for &h in &pt.j1 {
                assert_eq!(pt.size_of(h) % 2, 0);
            }
            for &h in &pt.j2_prime {
                assert!(pt.j2_double.contains(&((m as usize - h) % m as usize)));
            }
            for h in 0..m as usize {
                assert_eq!(pt.size_of(h), pt.size_of((m as usize - h) % m as usize));
            }
        }
    }

    #[test]
    fn phi_examples() {
        let d = Dft::new(2, 1, 6).unwrap();
        let b = d.base();
        let r = b.ring();
        let tuple = vec![b.u(), b.zero(), b.zero()];
        let x3 = d.phi(&tuple).unwrap();
        let mut expect = vec![r.zero(); 6];
        expect[3] = r.one();
        assert_eq!(x3, expect);
        let tuple = vec![b.zero(), b.one(), b.zero()];
        let x = d.phi(&tuple).unwrap();
        let mut expect = vec![r.zero(); 6];
        expect[1] = r.one();
        assert_eq!(x, expect);
        assert_eq!(d.phi(&d.phi_inverse(&x3).unwrap()).unwrap(), x3);
    }

    #[test]
    fn transform_of_one_and_x() {
        let d = Dft::new(2, 1, 6).unwrap();
        let r = d.base().ring();
        let mut one = vec![r.zero(); 6];
        one[0] = r.one();
        for c in d.forward_full(&one).unwrap() {
            assert_eq!(c, d.ext().one());
        }
        let mut x = vec![r.zero(); 6];
        x[1] = r.one();
        let ext = d.ext();
        for (h, c) in d.forward_full(&x).unwrap().into_iter().enumerate() {
            let z = ext.ring().pow(d.zeta(), h as u128);
            assert_eq!(c, ext.scale(&z, &ext.u()));
        }
        assert_eq!(d.inverse(&d.forward(&x).unwrap()).unwrap(), x);
        let zero = vec![r.zero(); 6];
        assert_eq!(d.inverse(&d.forward(&zero).unwrap()).unwrap(), zero);
    }

    #[test]
    fn decompose_examples() {
        let d = Dft::new(2, 1, 6).unwrap();
        let r = d.base().ring();
        let mut two = vec![r.zero(); 6];
        two[0] = r.from_int(2);
        let code = d.decompose(&[two]).unwrap();
        assert_eq!(
            code.components,
            vec![
                (0, CanonicalCode::TorsionOnly { i1: 0 }),
                (1, CanonicalCode::TorsionOnly { i1: 0 })
            ]
        );
        let mut one = vec![r.zero(); 6];
        one[0] = r.one();
        let whole = d.decompose(&[one]).unwrap();
        assert!(whole.components.iter().all(|(_, c)| *c == CanonicalCode::unit_ideal()));
        let dual = d.dual_decomposition(&whole).unwrap();
        assert_eq!(dual.components[0].1, CanonicalCode::TorsionOnly { i1: 2 });
        assert_eq!(d.dual_decomposition(&code).unwrap(), code);
    }

    #[test]
    fn composite_self_dual_counts() {
        for (p, s, n, expect) in [(2, 1, 6, 3), (2, 1, 10, 5), (2, 1, 2, 1), (2, 1, 14, 13), (3, 1, 6, 4), (2, 2, 6, 9)] {
            let d = Dft::new(p, s, n).unwrap();
            let codes: Vec<_> = d
                .enumerate_self_dual_composite()
                .unwrap()
                .collect::<Result<_>>()
                .unwrap();
            assert_eq!(codes.len(), expect, "({p},{s},{n})");
            for c in &codes {
                assert_eq!(d.dual_decomposition(c).unwrap(), *c);
            }
        }
    }
}

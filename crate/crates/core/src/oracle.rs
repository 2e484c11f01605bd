//! Brute-force ideals and duals of `GR(p^2, s)[X]/(X^n - 1)` at micro scale.
//!
//! Vectors are packed into integers (base `p^(2s)` digits, one per
//! coordinate) and codes are sorted lists of packed vectors.

use std::collections::BTreeSet;

use crate::cyclic::{CanonicalCode, CyclicRing};
use crate::duality::DualKind;
use crate::galois_ring::{GaloisRing, GrElem};
use crate::numtheory::ipow;
use crate::{Error, Result};

/// Largest ambient module `(p^(2s))^n` the oracle will scan.
pub const AMBIENT_CEILING: u64 = 1 << 24;

/// A code given by its full, sorted list of packed codewords.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DenseCode {
    words: Vec<u32>,
}

impl DenseCode {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[u32] {
        &self.words
    }

    pub fn contains(&self, w: u32) -> bool {
        self.words.binary_search(&w).is_ok()
    }
}

pub struct Oracle {
    ring: GaloisRing,
    n: usize,
    order: u32,
    ambient: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    conj: Option<Vec<u32>>,
    // ξ^i for i < s, as element indices
    scalars: Vec<u32>,
}

impl Oracle {
    pub fn new(p: u64, s: usize, n: usize) -> Result<Self> {
        let ring = GaloisRing::new(p, s)?;
        Self::with_ring(ring, n)
    }

    pub fn with_ring(ring: GaloisRing, n: usize) -> Result<Self> {
        let order = ring.order();
        let ambient = order.checked_pow(n as u32).unwrap_or(u64::MAX);
        if ambient > AMBIENT_CEILING || n == 0 {
            return Err(Error::LimitExceeded {
                what: "oracle ambient module",
                size: ambient as u128,
                limit: AMBIENT_CEILING as u128,
            });
        }
        let elems = ring.elements()?;
        let q2 = order as usize;
        let mut add = vec![0u32; q2 * q2];
        let mut mul = vec![0u32; q2 * q2];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                add[i * q2 + j] = ring.index_of(&ring.add(x, y)) as u32;
                mul[i * q2 + j] = ring.index_of(&ring.mul(x, y)) as u32;
            }
        }
        // conjugation straight from the p-adic expansion
        let conj = (ring.degree() % 2 == 0).then(|| {
            elems
                .iter()
                .map(|x| ring.index_of(&ring.frobenius_by_expansion(x, ring.degree() / 2)) as u32)
                .collect()
        });
        let scalars = (0..ring.degree())
            .map(|i| ring.index_of(&ring.pow(&ring.xi(), i as u128)) as u32)
            .collect();
        Ok(Self {
            n,
            order: order as u32,
            ambient: ambient as u32,
            add,
            mul,
            conj,
            scalars,
            ring,
        })
    }

    pub fn ring(&self) -> &GaloisRing {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn ambient_size(&self) -> u32 {
        self.ambient
    }

    pub fn encode(&self, v: &[GrElem]) -> u32 {
        assert_eq!(v.len(), self.n);
        v.iter()
            .rev()
            .fold(0u32, |acc, x| acc * self.order + self.ring.index_of(x) as u32)
    }

    pub fn decode(&self, w: u32) -> Vec<GrElem> {
        self.digits(w)
            .into_iter()
            .map(|d| self.ring.from_index(d as u64))
            .collect()
    }

    fn digits(&self, mut w: u32) -> Vec<u32> {
        (0..self.n)
            .map(|_| {
                let d = w % self.order;
                w /= self.order;
                d
            })
            .collect()
    }

    // Digit-wise table lookup without allocating.
    fn combine(&self, table: &[u32], a: u32, b: u32) -> u32 {
        let q2 = self.order;
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.n {
            let d = table[((a % q2) * q2 + b % q2) as usize];
            out += d * place;
            place = place.wrapping_mul(q2);
            a /= q2;
            b /= q2;
        }
        out
    }

    fn vadd(&self, a: u32, b: u32) -> u32 {
        self.combine(&self.add, a, b)
    }

    fn vscale(&self, c: u32, a: u32) -> u32 {
        let q2 = self.order;
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.n {
            out += self.mul[(c * q2 + a % q2) as usize] * place;
            place = place.wrapping_mul(q2);
            a /= q2;
        }
        out
    }

    // Cyclic shift X · v.
    fn vshift(&self, a: u32) -> u32 {
        let top = self.ambient / self.order;
        let last = a / top;
        (a % top) * self.order + last
    }

    fn inner(&self, a: u32, b: u32, kind: DualKind) -> u32 {
        let q2 = self.order;
        let (mut a, mut b) = (a, b);
        let mut acc = 0u32;
        for _ in 0..self.n {
            let (x, mut y) = (a % q2, b % q2);
            if kind == DualKind::Hermitian {
                y = self.conj.as_ref().expect("even degree")[y as usize];
            }
            let t = self.mul[(x * q2 + y) as usize];
            acc = self.add[(acc * q2 + t) as usize];
            a /= q2;
            b /= q2;
        }
        acc
    }

    /// Ideal generated by `gens`.
    pub fn closure(&self, gens: &[u32]) -> DenseCode {
        let mut additive = Vec::new();
        for &g in gens {
            let mut v = g;
            for _ in 0..self.n {
                for &c in &self.scalars {
                    additive.push(self.vscale(c, v));
                }
                v = self.vshift(v);
            }
        }
        let (words, _) = self.additive_span(&additive);
        self.finish(words)
    }

    // Additive subgroup generated by `gens`; also returns the generators used.
    fn additive_span(&self, gens: &[u32]) -> (Vec<u32>, Vec<u32>) {
        // stamp[x] = index of the generator round that added x
        let mut stamp = vec![u32::MAX; self.ambient as usize];
        let mut words = vec![0u32];
        stamp[0] = 0;
        let mut used = Vec::new();
        for &g in gens {
            if stamp[g as usize] != u32::MAX {
                continue;
            }
            used.push(g);
            let round = used.len() as u32;
            let base_len = words.len();
            let mut step = g;
            // cosets H + c g until c g falls back into H
            while stamp[step as usize] == u32::MAX {
                for i in 0..base_len {
                    let x = self.vadd(words[i], step);
                    if stamp[x as usize] == u32::MAX {
                        stamp[x as usize] = round;
                        words.push(x);
                    }
                }
                step = self.vadd(step, g);
            }
        }
        (words, used)
    }

    fn finish(&self, mut words: Vec<u32>) -> DenseCode {
        words.sort_unstable();
        DenseCode { words }
    }

    fn sum(&self, a: &DenseCode, b: &DenseCode) -> DenseCode {
        let mut seen = vec![false; self.ambient as usize];
        let mut words = Vec::new();
        for &x in &a.words {
            for &y in &b.words {
                let z = self.vadd(x, y);
                if !seen[z as usize] {
                    seen[z as usize] = true;
                    words.push(z);
                }
            }
        }
        self.finish(words)
    }

    /// Every ideal exactly once: all principal ideals and their pairwise sums.
    pub fn brute_ideals(&self) -> Vec<DenseCode> {
        // <v> = <X v>, so one vector per shift orbit suffices
        let mut seen = vec![false; self.ambient as usize];
        let mut principal = BTreeSet::new();
        for v in 0..self.ambient {
            if seen[v as usize] {
                continue;
            }
            let mut w = v;
            for _ in 0..self.n {
                seen[w as usize] = true;
                w = self.vshift(w);
            }
            principal.insert(self.closure(&[v]));
        }
        let principal: Vec<DenseCode> = principal.into_iter().collect();
        let mut all: BTreeSet<DenseCode> = principal.iter().cloned().collect();
        for (i, a) in principal.iter().enumerate() {
            for b in &principal[i + 1..] {
                all.insert(self.sum(a, b));
            }
        }
        all.into_iter().collect()
    }

    /// Orthogonal complement of `code` under the chosen form.
    pub fn brute_dual(&self, code: &DenseCode, kind: DualKind) -> Result<DenseCode> {
        if kind == DualKind::Hermitian && self.conj.is_none() {
            return Err(Error::OddDegree(self.ring.degree()));
        }
        let (_, gens) = self.additive_span(&code.words);
        let words = (0..self.ambient)
            .filter(|&v| gens.iter().all(|&g| self.inner(v, g, kind) == 0))
            .collect();
        Ok(self.finish(words))
    }

    /// Dense form of the ideal spanned by vectors given as coefficient lists.
    pub fn dense_from(&self, gens: &[Vec<GrElem>]) -> DenseCode {
        let packed: Vec<u32> = gens.iter().map(|g| self.encode(g)).collect();
        self.closure(&packed)
    }

    /// Dense form of a canonical code of length `p^a`, closed from its generators.
    pub fn materialize(&self, cr: &CyclicRing, code: &CanonicalCode) -> DenseCode {
        let gens: Vec<Vec<GrElem>> = cr
            .generators(code)
            .iter()
            .map(|g| g.coeffs().to_vec())
            .collect();
        self.dense_from(&gens)
    }

    /// `(p^(2s))^n`.
    pub fn ambient_order(&self) -> u64 {
        ipow(self.order as u64, self.n as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_counts() {
        assert_eq!(Oracle::new(2, 1, 1).unwrap().brute_ideals().len(), 3);
        assert_eq!(Oracle::new(3, 1, 1).unwrap().brute_ideals().len(), 3);
        assert_eq!(Oracle::new(2, 1, 2).unwrap().brute_ideals().len(), 7);
    }

    #[test]
    fn duals_over_z4_length_two() {
        let o = Oracle::new(2, 1, 2).unwrap();
        let r = o.ring();
        let e = |a: i64, b: i64| vec![r.from_int(a), r.from_int(b)];
        let u_minus_1 = o.dense_from(&[e(3, 1)]);
        assert_eq!(u_minus_1.len(), 4);
        for w in [e(0, 0), e(3, 1), e(2, 2), e(1, 3)] {
            assert!(u_minus_1.contains(o.encode(&w)));
        }
        let d = o.brute_dual(&u_minus_1, DualKind::Euclidean).unwrap();
        assert_eq!(d, o.dense_from(&[e(1, 1)]));
        let two_r = o.dense_from(&[e(2, 0)]);
        assert_eq!(o.brute_dual(&two_r, DualKind::Euclidean).unwrap(), two_r);
        let zero = o.dense_from(&[]);
        assert_eq!(zero.len(), 1);
        assert_eq!(
            o.brute_dual(&zero, DualKind::Euclidean).unwrap().len() as u64,
            o.ambient_order()
        );
    }

    #[test]
    fn canonical_forms_match_brute_ideals() {
        use crate::cyclic::CodeParams;
        use crate::duality;
        for (p, s, a) in [(2, 1, 1), (2, 1, 2), (2, 2, 1), (3, 1, 1), (2, 1, 0)] {
            let cr = CyclicRing::new(CodeParams::new(p, s, a).unwrap()).unwrap();
            let o = Oracle::with_ring(cr.ring().clone(), cr.length()).unwrap();
            let brute: BTreeSet<DenseCode> = o.brute_ideals().into_iter().collect();
            let canon: Vec<CanonicalCode> = cr.enumerate_ideals().unwrap().collect();
            let dense: BTreeSet<DenseCode> = canon.iter().map(|c| o.materialize(&cr, c)).collect();
            assert_eq!(dense.len(), canon.len());
            assert_eq!(dense, brute, "({p},{s},{a})");
            for c in &canon {
                let dc = o.materialize(&cr, c);
                assert_eq!(num_bigint::BigUint::from(dc.len()), cr.cardinality(c));
                let mut kinds = vec![DualKind::Euclidean];
                if s % 2 == 0 {
                    kinds.push(DualKind::Hermitian);
                }
                for kind in kinds {
                    let fast = duality::dual(&cr, c, kind).unwrap();
                    assert_eq!(o.materialize(&cr, &fast), o.brute_dual(&dc, kind).unwrap());
                }
            }
        }
    }

    #[test]
    fn cardinality_law() {
        let o = Oracle::new(2, 2, 1).unwrap();
        for c in o.brute_ideals() {
            for kind in [DualKind::Euclidean, DualKind::Hermitian] {
                let d = o.brute_dual(&c, kind).unwrap();
                assert_eq!(c.len() as u64 * d.len() as u64, o.ambient_order());
            }
        }
    }
}

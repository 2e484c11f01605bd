//! Finite fields `F_p` and `F_{p^s}` and Gaussian elimination over them.
//!
//! The residue field of `GR(p^2, s)` is implemented on its own (coefficient
//! vectors mod `p`) rather than by reducing Galois ring arithmetic.

use std::fmt;

/// Minimal field interface used by the linear solvers.
pub trait Field {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }
}

/// The prime field `F_p`, elements are residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        Self { p }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        crate::numtheory::inv_mod(*a, self.p).expect("inverse of zero in F_p")
    }
}

/// Element of `F_{p^s}`: coefficients in the power basis of the residue of
/// the Teichmüller generator, each reduced into `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem(pub(crate) Vec<u64>);

impl FqElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

/// The residue field `F_{p^s} = F_p[x]/(g)` for a monic primitive `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    p: u64,
    s: usize,
    /// Monic modulus, `s + 1` coefficients from the constant term upwards.
    modulus: Vec<u64>,
}

impl ResidueField {
    pub(crate) fn new(p: u64, modulus: Vec<u64>) -> Self {
        let s = modulus.len() - 1;
        debug_assert_eq!(modulus[s], 1);
        Self { p, s, modulus }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.s
    }

    /// Number of elements `p^s`.
    pub fn order(&self) -> u64 {
        crate::numtheory::ipow(self.p, self.s as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> FqElem {
        let mut v = vec![0u64; self.s];
        for (i, c) in coeffs.iter().enumerate() {
            if i < self.s {
                v[i] = c % self.p;
            } else {
                // reduce through the modulus
                let mut tmp = vec![0u64; i + 1];
                tmp[i] = c % self.p;
                let r = self.reduce(tmp);
                for k in 0..self.s {
                    v[k] = (v[k] + r[k]) % self.p;
                }
            }
        }
        FqElem(v)
    }

    pub fn from_int(&self, c: u64) -> FqElem {
        self.from_coeffs(&[c])
    }

    /// Class of the indeterminate, i.e. the residue of the Teichmüller generator.
    pub fn generator(&self) -> FqElem {
        self.from_coeffs(&[0, 1])
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let p = self.p;
        let s = self.s;
        for top in (s..v.len()).rev() {
            let c = v[top] % p;
            if c == 0 {
                continue;
            }
            v[top] = 0;
            for k in 0..s {
                let sub = c * self.modulus[k] % p;
                let idx = top - s + k;
                v[idx] = (v[idx] + p - sub) % p;
            }
        }
        v.truncate(s);
        v.resize(s, 0);
        v
    }

    pub fn pow(&self, a: &FqElem, mut e: u128) -> FqElem {
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

    /// `x ↦ x^(p^k)`.
    pub fn frobenius(&self, a: &FqElem, k: usize) -> FqElem {
        let mut x = a.clone();
        for _ in 0..k {
            x = self.pow(&x, self.p as u128);
        }
        x
    }

    /// Relative trace to the half-degree subfield, `x + x^(p^(s/2))`.
    pub fn trace_half(&self, x: &FqElem) -> crate::Result<FqElem> {
        let half = self.half_degree()?;
        Ok(self.add(x, &self.frobenius(x, half)))
    }

    /// `Ψ(x) = x^(p^(s/2)) - x`.
    pub fn psi(&self, x: &FqElem) -> crate::Result<FqElem> {
        let half = self.half_degree()?;
        Ok(self.sub(&self.frobenius(x, half), x))
    }

    fn half_degree(&self) -> crate::Result<usize> {
        if self.s % 2 != 0 {
            return Err(crate::Error::OddDegree(self.s));
        }
        Ok(self.s / 2)
    }

    /// Every element of the field, in increasing coefficient-vector order
    /// (least significant coefficient first).
    pub fn elements(&self) -> crate::Result<Vec<FqElem>> {
        let q = self.order();
        if q > crate::galois_ring::EXHAUSTIVE_CEILING {
            return Err(crate::Error::LimitExceeded {
                what: "field element scan",
                size: q as u128,
                limit: crate::galois_ring::EXHAUSTIVE_CEILING as u128,
            });
        }
        Ok((0..q).map(|k| self.from_index(k)).collect())
    }

    /// Element whose coefficient vector is the base-`p` expansion of `k`.
    pub fn from_index(&self, mut k: u64) -> FqElem {
        let mut v = vec![0u64; self.s];
        for c in v.iter_mut() {
            *c = k % self.p;
            k /= self.p;
        }
        FqElem(v)
    }

    pub fn index_of(&self, a: &FqElem) -> u64 {
        a.0.iter().rev().fold(0u64, |acc, &c| acc * self.p + c)
    }

    /// Coordinates of `a` over `F_p`.
    pub fn to_prime_coords(&self, a: &FqElem) -> Vec<u64> {
        a.0.clone()
    }
}

impl Field for ResidueField {
    type Elem = FqElem;

    fn zero(&self) -> FqElem {
        FqElem(vec![0; self.s])
    }
    fn one(&self) -> FqElem {
        self.from_int(1)
    }
    fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqElem(a.0.iter().zip(&b.0).map(|(x, y)| (x + y) % self.p).collect())
    }
    fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqElem(a.0.iter().zip(&b.0).map(|(x, y)| (x + self.p - y) % self.p).collect())
    }
    fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let s = self.s;
        let mut prod = vec![0u64; 2 * s - 1];
        for (i, x) in a.0.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        FqElem(self.reduce(prod))
    }
    fn inv(&self, a: &FqElem) -> FqElem {
        assert!(!self.is_zero(a), "inverse of zero in F_q");
        self.pow(a, self.order() as u128 - 2)
    }
}

/// Affine solution set `{ particular + Σ t_k kernel_k }` of a linear system.
#[derive(Clone, Debug)]
pub struct AffineSolution<E> {
    pub particular: Vec<E>,
    pub kernel: Vec<Vec<E>>,
}

impl<E: Clone> AffineSolution<E> {
    pub fn dimension(&self) -> usize {
        self.kernel.len()
    }
}

/// Solve `A x = b` over a field; `None` when inconsistent.
pub fn solve_linear<F: Field>(
    field: &F,
    matrix: &[Vec<F::Elem>],
    rhs: &[F::Elem],
    ncols: usize,
) -> Option<AffineSolution<F::Elem>> {
    let nrows = matrix.len();
    assert_eq!(rhs.len(), nrows);
    let mut a: Vec<Vec<F::Elem>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            assert_eq!(row.len(), ncols);
            let mut v = row.clone();
            v.push(r.clone());
            v
        })
        .collect();

    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(piv) = (row..nrows).find(|&r| !field.is_zero(&a[r][col])) else {
            continue;
        };
        a.swap(row, piv);
        let inv = field.inv(&a[row][col]);
        for c in col..=ncols {
            a[row][c] = field.mul(&a[row][c], &inv);
        }
        for r in 0..nrows {
            if r != row && !field.is_zero(&a[r][col]) {
                let f = a[r][col].clone();
                for c in col..=ncols {
                    let t = field.mul(&f, &a[row][c]);
                    a[r][c] = field.sub(&a[r][c], &t);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    if a[row..].iter().any(|r| !field.is_zero(&r[ncols])) {
        return None;
    }

    let mut particular = vec![field.zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = a[r][ncols].clone();
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); ncols];
            v[fc] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(&a[r][fc]);
            }
            v
        })
        .collect();
    Some(AffineSolution { particular, kernel })
}

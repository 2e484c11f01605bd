//! Euclidean and Hermitian duals of cyclic codes of length `p^a`, the
//! self-duality linear systems and enumeration of self-dual codes.

use std::fmt;

use crate::cyclic::{CanonicalCode, CyclicRing, QuotPoly};
use crate::field::{AffineSolution, Field, FqElem, PrimeField, solve_linear};
use crate::galois_ring::GrElem;
use crate::numtheory::{binom_mod_p, binom_p_j_mod_p2};
use crate::{Error, Result};

/// Largest solution set materialized by [`solve_system`].
pub const SOLUTION_CEILING: u128 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DualKind {
    Euclidean,
    Hermitian,
}

impl fmt::Display for DualKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DualKind::Euclidean => "euclidean",
            DualKind::Hermitian => "hermitian",
        })
    }
}

/// `u ↦ u^(-1)` on `R`.
pub fn reciprocal(cr: &CyclicRing, v: &QuotPoly) -> QuotPoly {
    let n = cr.length();
    let c = v.coeffs();
    let out = (0..n).map(|k| c[(n - k) % n].clone()).collect();
    cr.from_u_coeffs(out).expect("same length")
}

/// Euclidean dual. Uses the closed-form generator when it applies and an
/// annihilator solve otherwise.
pub fn euclidean_dual(cr: &CyclicRing, code: &CanonicalCode) -> Result<CanonicalCode> {
    match dual_by_formula(cr, code) {
        Some(d) => Ok(d),
        None => dual_by_annihilator(cr, code),
    }
}

/// The closed-form dual generator pair, normalized. `None` outside its range
/// (`i0 + i1 > N`, `i1 > p^(a-1)`, torsion-only codes, `a = 0`).
pub fn dual_by_formula(cr: &CyclicRing, code: &CanonicalCode) -> Option<CanonicalCode> {
    let CanonicalCode::Full { i0, i1, h } = code else {
        return None;
    };
    let (i0, i1) = (*i0, *i1);
    let params = cr.params();
    let n = cr.length();
    let p = params.p;
    let block = params.torsion_bound();
    if params.a == 0 || i0 + i1 > n || i1 > block {
        return None;
    }
    let ring = cr.ring();
    // Y-basis coefficients; exponents N..2N go through the ring reduction
    let mut y = vec![ring.zero(); 2 * n];
    y[n - i1] = ring.one();
    // - p Y^(N - i0 - i1) Σ_t (Σ_j (-1)^(i0+j) C(i0-j, t-j) h_j) Y^t
    for t in 0..i1 {
        let mut coeff = ring.zero();
        for (j, hj) in h.iter().enumerate().take(t + 1) {
            let b = binom_mod_p((i0 - j) as u64, (t - j) as u64, p) as i64;
            let sign = if (i0 + j) % 2 == 0 { 1 } else { -1 };
            coeff = ring.add(&coeff, &ring.scale(hj, sign * b));
        }
        let k = n - i0 - i1 + t;
        y[k] = ring.sub(&y[k], &ring.times_p(&coeff));
    }
    // + Σ_{t=1}^{K} (Σ_j (-1)^(j+1) C(p-j, t-j) C(p, j)) Y^(t p^(a-1) - i1)
    let big_k = (n - i0 + i1 - 1) / block;
    for t in 1..=big_k {
        let mut c: i64 = 0;
        for j in 1..=t.min(p as usize - 1) {
            let b = binom_mod_p((p as usize - j) as u64, (t - j) as u64, p) as i64;
            let sign = if j % 2 == 0 { -1 } else { 1 };
            c += sign * b * binom_p_j_mod_p2(p, j as u64) as i64;
        }
        let k = t * block - i1;
        y[k] = ring.add(&y[k], &ring.from_int(c));
    }
    let mut first = cr.from_y(&y[..n]);
    for (k, c) in y.iter().enumerate().skip(n) {
        if !ring.is_zero(c) {
            first = cr.add(&first, &cr.scale(c, &cr.y_power(k)));
        }
    }
    let second = cr.times_p(&cr.y_power(n - i0));
    Some(cr.normalize(&[first, second]))
}

/// Dual as the reciprocal of the annihilator, solving for the `h` values
/// of the dual shape `(N - i1, N - i0)` over the residue field.
pub fn dual_by_annihilator(cr: &CyclicRing, code: &CanonicalCode) -> Result<CanonicalCode> {
    let n = cr.length();
    let (i0, i1, h) = match code {
        CanonicalCode::TorsionOnly { i1 } => {
            let gens = [
                cr.y_power(n - i1),
                cr.constant(cr.ring().from_int(cr.params().p as i64)),
            ];
            return Ok(cr.normalize(&gens));
        }
        CanonicalCode::Full { i0, i1, h } => (*i0, *i1, h),
    };
    if i1 == 0 {
        return Ok(CanonicalCode::TorsionOnly { i1: n - i0 });
    }
    let ring = cr.ring();
    let f = ring.residue_field();
    let dual_i0 = n - i1;
    let dual_i1 = n - i0;
    let lead = cr.generators(code).swap_remove(0);
    let lead_rec = reciprocal(cr, &lead);
    let shifted = cr.mul(&cr.y_power(dual_i0), &lead_rec);
    let e: Vec<FqElem> = cr
        .to_y(&shifted)
        .iter()
        .map(|c| ring.residue(&ring.div_p(c)))
        .collect();
    let g_bar: Vec<FqElem> = cr.to_y(&lead_rec).iter().map(|c| ring.residue(c)).collect();
    // w' * g_bar = -e in F_q[Y]/(Y^N), unknowns w'_j for j < dual_i1
    let matrix: Vec<Vec<FqElem>> = (0..n)
        .map(|k| {
            (0..dual_i1)
                .map(|j| if j <= k { g_bar[k - j].clone() } else { f.zero() })
                .collect()
        })
        .collect();
    let rhs: Vec<FqElem> = e.iter().map(|x| f.neg(x)).collect();
    let sol = solve_linear(f, &matrix, &rhs, dual_i1)
        .ok_or_else(|| Error::Internal(format!("no dual generator for {h:?}")))?;
    if sol.dimension() != 0 {
        return Err(Error::Internal("dual generator not unique".into()));
    }
    let dual_h = sol
        .particular
        .iter()
        .map(|x| ring.lift_teichmuller(x))
        .collect();
    cr.make_canonical(CanonicalCode::Full {
        i0: dual_i0,
        i1: dual_i1,
        h: dual_h,
    })
}

/// Apply the ring conjugation to every coefficient of a code.
pub fn conjugate_code(cr: &CyclicRing, code: &CanonicalCode) -> Result<CanonicalCode> {
    let ring = cr.ring();
    match code {
        CanonicalCode::TorsionOnly { i1 } => {
            if ring.degree() % 2 != 0 {
                return Err(Error::OddDegree(ring.degree()));
            }
            Ok(CanonicalCode::TorsionOnly { i1: *i1 })
        }
        CanonicalCode::Full { i0, i1, h } => Ok(CanonicalCode::Full {
            i0: *i0,
            i1: *i1,
            h: h.iter().map(|x| ring.conjugate(x)).collect::<Result<_>>()?,
        }),
    }
}

pub fn hermitian_dual(cr: &CyclicRing, code: &CanonicalCode) -> Result<CanonicalCode> {
    if cr.ring().degree() % 2 != 0 {
        return Err(Error::OddDegree(cr.ring().degree()));
    }
    conjugate_code(cr, &euclidean_dual(cr, code)?)
}

pub fn dual(cr: &CyclicRing, code: &CanonicalCode, kind: DualKind) -> Result<CanonicalCode> {
    match kind {
        DualKind::Euclidean => euclidean_dual(cr, code),
        DualKind::Hermitian => hermitian_dual(cr, code),
    }
}

pub fn is_self_dual(cr: &CyclicRing, code: &CanonicalCode, kind: DualKind) -> Result<bool> {
    Ok(dual(cr, code, kind)? == *code)
}

/// The system `M x + σ(x) - x = b` whose solutions parametrize self-dual
/// codes with torsion index `i1` (σ is the identity in the Euclidean case).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDualSystem {
    pub kind: DualKind,
    pub p: u64,
    pub s: usize,
    pub i0: usize,
    pub i1: usize,
    /// Lower-triangular `i1 × i1` matrix with entries in `F_p`.
    pub matrix: Vec<Vec<u64>>,
    /// Right-hand side with entries in `F_p`.
    pub rhs: Vec<u64>,
}

pub fn build_system(cr: &CyclicRing, i1: usize, kind: DualKind) -> Result<SelfDualSystem> {
    let params = cr.params();
    let p = params.p;
    let block = params.torsion_bound();
    if i1 > block {
        return Err(Error::OutOfRange {
            what: "i1",
            detail: format!("{i1} exceeds p^(a-1) = {block}"),
        });
    }
    if kind == DualKind::Hermitian && params.s % 2 != 0 {
        return Err(Error::OddDegree(params.s));
    }
    let i0 = cr.length() - i1;
    let signed = |odd: bool, v: u64| if odd { (p - v % p) % p } else { v % p };
    let mut matrix = vec![vec![0u64; i1]; i1];
    for i in 1..=i1 {
        for j in 1..i {
            let b = binom_mod_p((i0 - j + 1) as u64, (i - j) as u64, p);
            matrix[i - 1][j - 1] = signed((i0 + j - 1) % 2 == 1, b);
        }
        matrix[i - 1][i - 1] = (signed((i0 + i - 1) % 2 == 1, 1) + 1) % p;
    }
    let mut rhs = vec![0u64; i1];
    let hit = block + 1;
    if hit > i1 && hit - i1 <= i1 {
        rhs[hit - i1 - 1] = 1;
    }
    Ok(SelfDualSystem {
        kind,
        p,
        s: params.s,
        i0,
        i1,
        matrix,
        rhs,
    })
}

/// Solution vectors `x ∈ F_q^i1`, in lexicographic order of coefficients.
pub fn solve_system(cr: &CyclicRing, sys: &SelfDualSystem) -> Result<Vec<Vec<FqElem>>> {
    let f = cr.ring().residue_field();
    let s = sys.s;
    let i1 = sys.i1;
    let n_unknowns = s * i1;
    let fp = PrimeField::new(sys.p);
    // x_j = Σ_l c_{j,l} ω^l; column (j, l) is the image of ω^l in slot j
    let mut matrix = vec![vec![0u64; n_unknowns]; n_unknowns];
    for j in 0..i1 {
        for l in 0..s {
            let mut basis = vec![0u64; s];
            basis[l] = 1;
            let e = f.from_coeffs(&basis);
            let twist = match sys.kind {
                DualKind::Euclidean => f.zero(),
                DualKind::Hermitian => f.psi(&e)?,
            };
            for i in 0..i1 {
                let mut img = f.mul(&f.from_int(sys.matrix[i][j]), &e);
                if i == j {
                    img = f.add(&img, &twist);
                }
                for (r, c) in f.to_prime_coords(&img).into_iter().enumerate() {
                    matrix[i * s + r][j * s + l] = c;
                }
            }
        }
    }
    let mut rhs = vec![0u64; n_unknowns];
    for i in 0..i1 {
        rhs[i * s] = sys.rhs[i] % sys.p;
    }
    let Some(sol) = solve_linear(&fp, &matrix, &rhs, n_unknowns) else {
        return Ok(Vec::new());
    };
    let mut out: Vec<Vec<FqElem>> = expand_affine(&fp, &sol)?
        .into_iter()
        .map(|v| {
            (0..i1)
                .map(|j| f.from_coeffs(&v[j * s..(j + 1) * s]))
                .collect()
        })
        .collect();
    out.sort();
    Ok(out)
}

fn expand_affine(fp: &PrimeField, sol: &AffineSolution<u64>) -> Result<Vec<Vec<u64>>> {
    let p = fp.characteristic();
    let dim = sol.dimension();
    let total = (p as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
    if total > SOLUTION_CEILING {
        return Err(Error::LimitExceeded {
            what: "solution set",
            size: total,
            limit: SOLUTION_CEILING,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut digits = vec![0u64; dim];
    loop {
        let mut v = sol.particular.clone();
        for (d, k) in digits.iter().zip(&sol.kernel) {
            for (x, y) in v.iter_mut().zip(k) {
                *x = (*x + d * y) % p;
            }
        }
        out.push(v);
        let mut carry = true;
        for d in digits.iter_mut() {
            *d += 1;
            if *d < p {
                carry = false;
                break;
            }
            *d = 0;
        }
        if carry {
            break;
        }
    }
    Ok(out)
}

/// Left side of the system evaluated at `x`.
pub fn evaluate_system(cr: &CyclicRing, sys: &SelfDualSystem, x: &[FqElem]) -> Result<Vec<FqElem>> {
    let f = cr.ring().residue_field();
    (0..sys.i1)
        .map(|i| {
            let mut acc = f.zero();
            for (j, xj) in x.iter().enumerate() {
                acc = f.add(&acc, &f.mul(&f.from_int(sys.matrix[i][j]), xj));
            }
            if sys.kind == DualKind::Hermitian {
                acc = f.add(&acc, &f.psi(&x[i])?);
            }
            Ok(acc)
        })
        .collect()
}

/// Code with torsion index `i1 = x.len()` and `h_j` lifted from `x_(j+1)`.
pub fn code_from_solution(cr: &CyclicRing, x: &[FqElem]) -> Result<CanonicalCode> {
    let ring = cr.ring();
    let h: Vec<GrElem> = x.iter().map(|v| ring.lift_teichmuller(v)).collect();
    cr.make_canonical(CanonicalCode::Full {
        i0: cr.length() - x.len(),
        i1: x.len(),
        h,
    })
}

/// All self-dual codes of the given kind, by increasing `i1`.
pub fn enumerate_self_dual(cr: &CyclicRing, kind: DualKind) -> Result<Vec<CanonicalCode>> {
    if kind == DualKind::Hermitian && cr.params().s % 2 != 0 {
        return Err(Error::OddDegree(cr.params().s));
    }
    let mut out = vec![CanonicalCode::TorsionOnly { i1: 0 }];
    for i1 in 1..=cr.params().torsion_bound() {
        let sys = build_system(cr, i1, kind)?;
        for x in solve_system(cr, &sys)? {
            out.push(code_from_solution(cr, &x)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::CodeParams;
    use crate::galois_ring::HalfMap;

    fn cr(p: u64, s: usize, a: u32) -> CyclicRing {
        CyclicRing::new(CodeParams::new(p, s, a).unwrap()).unwrap()
    }

    fn full(cr: &CyclicRing, i0: usize, i1: usize, h: Vec<GrElem>) -> CanonicalCode {
        let _ = cr;
        CanonicalCode::Full { i0, i1, h }
    }

    #[test]
    fn euclidean_examples() {
        let c = cr(2, 1, 1);
        let z = c.ring().zero();
        let one = c.ring().one();
        assert_eq!(
            euclidean_dual(&c, &full(&c, 1, 1, vec![z])).unwrap(),
            full(&c, 1, 1, vec![one])
        );
        let tors0 = CanonicalCode::TorsionOnly { i1: 0 };
        assert_eq!(euclidean_dual(&c, &tors0).unwrap(), tors0);
        for (p, s, a) in [(2, 1, 1), (3, 1, 2), (2, 2, 1)] {
            let c = cr(p, s, a);
            assert_eq!(
                euclidean_dual(&c, &CanonicalCode::unit_ideal()).unwrap(),
                CanonicalCode::TorsionOnly { i1: c.length() }
            );
        }
    }

    #[test]
    fn hermitian_examples() {
        let c = cr(2, 2, 1);
        let xi = c.ring().xi();
        let tors0 = CanonicalCode::TorsionOnly { i1: 0 };
        assert_eq!(hermitian_dual(&c, &tors0).unwrap(), tors0);
        let code = full(&c, 1, 1, vec![xi]);
        assert_eq!(hermitian_dual(&c, &code).unwrap(), code);
        for code in c.enumerate_ideals().unwrap() {
            let cc = conjugate_code(&c, &code).unwrap();
            assert_eq!(conjugate_code(&c, &cc).unwrap(), code);
        }
        assert!(hermitian_dual(&cr(2, 1, 1), &tors0).is_err());
    }

    #[test]
    fn formula_agrees_with_annihilator() {
        for (p, s, a) in [(2, 1, 1), (2, 1, 2), (2, 1, 3), (2, 2, 1), (2, 2, 2), (3, 1, 1), (3, 1, 2), (5, 1, 1), (3, 2, 1)] {
            let c = cr(p, s, a);
            let mut used = 0;
            for code in c.enumerate_ideals().unwrap() {
                let generic = dual_by_annihilator(&c, &code).unwrap();
                if let Some(d) = dual_by_formula(&c, &code) {
                    used += 1;
                    assert_eq!(d, generic, "({p},{s},{a}) {code:?}");
                }
            }
            assert!(used > 0);
        }
    }

    #[test]
    fn involution_and_cardinality() {
        for (p, s, a) in [(2, 1, 2), (2, 2, 1), (3, 1, 1), (2, 1, 3), (3, 2, 1)] {
            let c = cr(p, s, a);
            let total = 2 * s * c.length();
            for code in c.enumerate_ideals().unwrap() {
                for kind in [DualKind::Euclidean, DualKind::Hermitian] {
                    if kind == DualKind::Hermitian && s % 2 == 1 {
                        continue;
                    }
                    let d = dual(&c, &code, kind).unwrap();
                    assert_eq!(dual(&c, &d, kind).unwrap(), code);
                    assert_eq!(c.log_cardinality(&code) + c.log_cardinality(&d), total);
                }
            }
        }
    }

    #[test]
    fn system_examples() {
        let s = build_system(&cr(2, 1, 1), 1, DualKind::Euclidean).unwrap();
        assert_eq!((s.matrix.clone(), s.rhs.clone()), (vec![vec![0]], vec![1]));
        let s = build_system(&cr(2, 1, 2), 2, DualKind::Euclidean).unwrap();
        assert_eq!(s.matrix, vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(s.rhs, vec![1, 0]);
        let s = build_system(&cr(3, 1, 1), 1, DualKind::Euclidean).unwrap();
        assert_eq!((s.matrix, s.rhs), (vec![vec![2]], vec![1]));
        assert!(build_system(&cr(2, 1, 1), 2, DualKind::Euclidean).is_err());
    }

    #[test]
    fn solver_examples() {
        let c = cr(2, 2, 1);
        let f = c.ring().residue_field();
        let w = f.generator();
        let sys = build_system(&c, 1, DualKind::Hermitian).unwrap();
        let sols = solve_system(&c, &sys).unwrap();
        assert_eq!(sols, vec![vec![w.clone()], vec![f.mul(&w, &w)]]);
        let sys = build_system(&c, 1, DualKind::Euclidean).unwrap();
        assert!(solve_system(&c, &sys).unwrap().is_empty());
        let c = cr(3, 2, 1);
        let sys = build_system(&c, 1, DualKind::Hermitian).unwrap();
        let sols = solve_system(&c, &sys).unwrap();
        assert_eq!(sols.len(), 3);
        let f = c.ring().residue_field();
        for x in &sols {
            let v = &x[0];
            let lhs = f.add(&f.pow(v, 3), v);
            assert_eq!(lhs, f.one());
        }
    }

    // Row-by-row back-substitution through Tr and Ψ preimages.
    fn sequential_solutions(c: &CyclicRing, sys: &SelfDualSystem) -> Vec<Vec<FqElem>> {
        let f = c.ring().residue_field();
        let mut partial: Vec<Vec<FqElem>> = vec![Vec::new()];
        for i in 0..sys.i1 {
            let mut next = Vec::new();
            for x in &partial {
                let mut target = f.from_int(sys.rhs[i]);
                for (j, xj) in x.iter().enumerate() {
                    target = f.sub(&target, &f.mul(&f.from_int(sys.matrix[i][j]), xj));
                }
                let map = if sys.matrix[i][i] == 2 % sys.p {
                    HalfMap::Trace
                } else {
                    HalfMap::Psi
                };
                for v in c.ring().preimage_set(map, &target).unwrap() {
                    let mut y = x.clone();
                    y.push(v);
                    next.push(y);
                }
            }
            partial = next;
        }
        partial.sort();
        partial
    }

    #[test]
    fn sequential_back_substitution_agrees() {
        for (p, s, a) in [(2, 2, 1), (2, 2, 2), (2, 2, 3), (3, 2, 1), (3, 2, 2), (2, 4, 1), (5, 2, 2)] {
            let c = cr(p, s, a);
            for i1 in 1..=c.params().torsion_bound() {
                let sys = build_system(&c, i1, DualKind::Hermitian).unwrap();
                let fast = solve_system(&c, &sys).unwrap();
                assert_eq!(fast, sequential_solutions(&c, &sys), "({p},{s},{a}) i1={i1}");
                assert_eq!(fast.len() as u64, p.pow((s * i1 / 2) as u32));
            }
        }
    }

    #[test]
    fn self_dual_enumerations() {
        let c = cr(2, 2, 1);
        let herm = enumerate_self_dual(&c, DualKind::Hermitian).unwrap();
        let xi = c.ring().xi();
        let xi2 = c.ring().mul(&xi, &xi);
        assert_eq!(
            herm,
            vec![
                CanonicalCode::TorsionOnly { i1: 0 },
                full(&c, 1, 1, vec![xi]),
                full(&c, 1, 1, vec![xi2]),
            ]
        );
        assert_eq!(enumerate_self_dual(&cr(2, 1, 3), DualKind::Euclidean).unwrap().len(), 11);
        assert_eq!(enumerate_self_dual(&cr(3, 1, 1), DualKind::Euclidean).unwrap().len(), 2);
        for (p, s, a, kind) in [
            (2, 1, 2, DualKind::Euclidean),
            (2, 2, 2, DualKind::Euclidean),
            (2, 2, 2, DualKind::Hermitian),
            (3, 2, 1, DualKind::Hermitian),
            (3, 1, 2, DualKind::Euclidean),
        ] {
            let c = cr(p, s, a);
            for code in enumerate_self_dual(&c, kind).unwrap() {
                assert!(is_self_dual(&c, &code, kind).unwrap(), "{code:?}");
            }
            let brute = c
                .enumerate_ideals()
                .unwrap()
                .filter(|code| is_self_dual(&c, code, kind).unwrap())
                .count();
            assert_eq!(enumerate_self_dual(&c, kind).unwrap().len(), brute);
        }
    }

    #[test]
    fn small_is_self_dual_cases() {
        let c = cr(2, 1, 1);
        assert!(is_self_dual(&c, &CanonicalCode::TorsionOnly { i1: 0 }, DualKind::Euclidean).unwrap());
        let z = c.ring().zero();
        assert!(!is_self_dual(&c, &full(&c, 1, 1, vec![z]), DualKind::Euclidean).unwrap());
        assert!(!is_self_dual(&c, &CanonicalCode::unit_ideal(), DualKind::Euclidean).unwrap());
    }
}

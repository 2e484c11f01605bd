//! Self-checks: the published tables, the count laws, and exhaustive
//! cross-checks against the brute-force oracle.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use crate::counting;
use crate::cyclic::{CanonicalCode, CodeParams, CyclicRing};
use crate::dft::{CosetClass, Dft};
use crate::duality::{self, DualKind};
use crate::galois_ring::{GaloisRing, GrElem};
use crate::numtheory::ipow;
use crate::oracle::{DenseCode, Oracle};

/// `N_E(Z_4, n)` for `n = 1..=40`.
pub const TABLE_Z4: [u64; 40] = [
    1, 1, 1, 3, 1, 3, 1, 11, 1, 5, 1, 21, 1, 13, 1, 59, 1, 27, 1, 63, 1, 33, 1, 341, 1, 65, 1,
    339, 1, 315, 1, 1019, 1, 289, 1, 1533, 1, 513, 1, 3751,
];

/// `N_E(Z_9, n)` for `n = 1..=40`.
pub const TABLE_Z9: [u64; 40] = [
    1, 1, 2, 1, 1, 4, 1, 1, 8, 1, 1, 16, 1, 1, 20, 1, 1, 64, 1, 1, 56, 1, 1, 544, 1, 1, 242, 1,
    1, 400, 1, 1, 1472, 1, 1, 2560, 1, 1, 15488, 1,
];

/// `N_E(GR(4,2), n)` for `n = 1..=40`.
pub const TABLE_GR4_2: [u64; 40] = [
    1, 1, 1, 5, 1, 9, 1, 37, 1, 25, 1, 225, 1, 69, 1, 677, 1, 621, 1, 2205, 1, 1029, 1, 29193,
    1, 4225, 1, 22125, 1, 99225, 1, 174757, 1, 83521, 1, 995625, 1, 262149, 1, 4302397,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

pub type CheckFn = fn() -> Result<(), String>;

#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub run: CheckFn,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub name: &'static str,
    pub result: Result<(), String>,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

pub fn execute(check: &Check) -> Outcome {
    let start = Instant::now();
    let result = (check.run)();
    Outcome {
        name: check.name,
        result,
        elapsed: start.elapsed(),
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn e<T: std::fmt::Display>(err: T) -> String {
    err.to_string()
}

fn cyclic(p: u64, s: usize, a: u32) -> Result<CyclicRing, String> {
    CodeParams::new(p, s, a)
        .and_then(CyclicRing::new)
        .map_err(e)
}

/// The ten acceptance criteria, in order.
pub fn criteria() -> Vec<Check> {
    vec![
        Check { name: "table-z4", run: table_z4 },
        Check { name: "table-z9", run: table_z9 },
        Check { name: "table-gr4-2", run: table_gr4_2 },
        Check { name: "hermitian-count-law", run: hermitian_count_law },
        Check { name: "euclidean-count-law", run: euclidean_count_law },
        Check { name: "oracle-equivalence", run: oracle_equivalence },
        Check { name: "hermitian-solution-counts", run: solution_counts },
        Check { name: "dft-integrity", run: dft_integrity },
        Check { name: "composite-worked-example", run: composite_example },
        Check { name: "uniqueness-predicate", run: uniqueness_predicate },
    ]
}

/// Fast subset for routine use.
pub fn quick_checks() -> Vec<Check> {
    vec![
        Check { name: "frobenius-routes", run: frobenius_routes },
        Check { name: "oracle-small", run: oracle_small },
        Check { name: "table-anchors", run: table_anchors },
        Check { name: "composite-n6", run: composite_n6 },
        Check { name: "dft-round-trip-n6", run: dft_round_trip_n6 },
        Check { name: "uniqueness-predicate", run: uniqueness_predicate },
    ]
}

pub fn checks(level: Level) -> Vec<Check> {
    match level {
        Level::Quick => quick_checks(),
        Level::Full => {
            let mut v = quick_checks();
            v.retain(|c| c.name != "uniqueness-predicate");
            v.extend(criteria());
            v
        }
    }
}

pub fn run(level: Level) -> Vec<Outcome> {
    checks(level).iter().map(execute).collect()
}

/// Rows where the computed count differs from `published`, as
/// `(n, computed, published)`.
pub fn table_mismatches(p: u64, s: usize, published: &[u64]) -> Result<Vec<(u64, BigUint, u64)>, String> {
    let rows = counting::emit_table(p, s, published.len() as u64).map_err(e)?;
    Ok(rows
        .into_iter()
        .zip(published)
        .filter(|((_, got), want)| *got != BigUint::from(**want))
        .map(|((n, got), want)| (n, got, *want))
        .collect())
}

/// Published rows known to be wrong: lengths prime to `p` whose cosets
/// include an inverse pair. Each pair contributes a factor 3 (the three
/// ideals of a length-one code), which the published tables drop.
pub fn is_known_erratum(p: u64, s: usize, n: u64, published: u64) -> bool {
    n % p != 0
        && published == 1
        && crate::dft::partition(n, p, s).is_ok_and(|pt| !pt.j2_prime.is_empty())
}

fn compare_table(p: u64, s: usize, expect: &[u64; 40]) -> Result<(), String> {
    for (n, got, want) in table_mismatches(p, s, expect)? {
        ensure!(is_known_erratum(p, s, n, want), "n={n}: got {got}, published {want}");
        let pairs = crate::dft::partition(n, p, s).map_err(e)?.j2_prime.len();
        ensure!(
            got == BigUint::from(3u32).pow(pairs as u32),
            "n={n}: got {got}, expected 3^{pairs} at an erratum row"
        );
    }
    Ok(())
}

fn table_z4() -> Result<(), String> {
    compare_table(2, 1, &TABLE_Z4)
}

fn table_z9() -> Result<(), String> {
    compare_table(3, 1, &TABLE_Z9)
}

fn table_gr4_2() -> Result<(), String> {
    compare_table(2, 2, &TABLE_GR4_2)
}

fn table_anchors() -> Result<(), String> {
    for (p, s, n, want) in [(2, 1, 8, 11u64), (2, 1, 24, 341), (3, 1, 9, 8), (3, 1, 27, 242), (2, 2, 12, 225)] {
        let got = counting::count_e_composite(p, s, n).map_err(e)?;
        ensure!(got == BigUint::from(want), "({p},{s},{n}): got {got}, want {want}");
    }
    Ok(())
}

fn self_dual_law(p: u64, s: usize, a: u32, kind: DualKind) -> Result<usize, String> {
    let cr = cyclic(p, s, a)?;
    let codes = duality::enumerate_self_dual(&cr, kind).map_err(e)?;
    let expect = match kind {
        DualKind::Euclidean => counting::count_e_prime_power(&cr.params()),
        DualKind::Hermitian => counting::count_h_prime_power(&cr.params()).map_err(e)?,
    };
    ensure!(
        BigUint::from(codes.len()) == expect,
        "({p},{s},{a}) {kind}: enumerated {}, closed form {expect}",
        codes.len()
    );
    let distinct: BTreeSet<_> = codes.iter().collect();
    ensure!(distinct.len() == codes.len(), "({p},{s},{a}) {kind}: duplicates");
    for c in &codes {
        ensure!(
            duality::is_self_dual(&cr, c, kind).map_err(e)?,
            "({p},{s},{a}) {kind}: {c:?} is not self-dual"
        );
    }
    Ok(codes.len())
}

fn hermitian_count_law() -> Result<(), String> {
    for (p, s, a) in [(2, 2, 1), (2, 2, 2), (2, 4, 1), (3, 2, 1), (3, 2, 2)] {
        let n = self_dual_law(p, s, a, DualKind::Hermitian)?;
        if (p, s, a) == (2, 2, 1) {
            ensure!(n == 3, "GR(4,2), length 2: {n} codes");
        }
        if (p, s, a) == (2, 4, 1) {
            ensure!(n == 5, "GR(4,4), length 2: {n} codes");
        }
    }
    Ok(())
}

fn euclidean_count_law() -> Result<(), String> {
    let cases = [
        ((2, 1, 1), 1),
        ((2, 1, 2), 3),
        ((2, 1, 3), 11),
        ((2, 2, 1), 1),
        ((2, 2, 2), 5),
        ((3, 1, 1), 2),
        ((3, 1, 2), 8),
    ];
    for ((p, s, a), want) in cases {
        let n = self_dual_law(p, s, a, DualKind::Euclidean)?;
        ensure!(n == want, "({p},{s},{a}): {n} codes, expected {want}");
    }
    Ok(())
}

fn oracle_case(p: u64, s: usize, n: usize) -> Result<(), String> {
    let (m, a) = counting::split_length(p, n as u64);
    ensure!(m == 1, "length {n} is not a power of {p}");
    let cr = cyclic(p, s, a)?;
    let o = Oracle::with_ring(cr.ring().clone(), n).map_err(e)?;
    let brute: BTreeSet<DenseCode> = o.brute_ideals().into_iter().collect();
    let law = counting::count_all(&cr.params());
    ensure!(
        BigUint::from(brute.len()) == law,
        "({p},{s},{n}): {} brute ideals, count law {law}",
        brute.len()
    );
    let canon: Vec<CanonicalCode> = cr.enumerate_ideals().map_err(e)?.collect();
    let dense: BTreeSet<DenseCode> = canon.iter().map(|c| o.materialize(&cr, c)).collect();
    ensure!(dense.len() == canon.len(), "({p},{s},{n}): canonical forms collide");
    ensure!(dense == brute, "({p},{s},{n}): canonical ideals differ from brute ideals");
    let mut kinds = vec![DualKind::Euclidean];
    if s % 2 == 0 {
        kinds.push(DualKind::Hermitian);
    }
    for c in &canon {
        let dc = o.materialize(&cr, c);
        for &kind in &kinds {
            let fast = duality::dual(&cr, c, kind).map_err(e)?;
            let bd = o.brute_dual(&dc, kind).map_err(e)?;
            ensure!(o.materialize(&cr, &fast) == bd, "({p},{s},{n}) {kind} dual of {c:?}");
            ensure!(
                dc.len() as u64 * bd.len() as u64 == o.ambient_order(),
                "({p},{s},{n}) {kind}: |C||C^perp| != ambient for {c:?}"
            );
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Result<(), String> {
    for (p, s, n) in [(2, 1, 1), (2, 1, 2), (2, 1, 4), (2, 2, 2), (3, 1, 3)] {
        oracle_case(p, s, n)?;
    }
    Ok(())
}

fn oracle_small() -> Result<(), String> {
    for (p, s, n) in [(2, 1, 2), (2, 2, 2), (3, 1, 1)] {
        oracle_case(p, s, n)?;
    }
    Ok(())
}

/// Largest `p^(s i1)` covered by the solution-count sweep.
pub const SOLVER_SWEEP_BOUND: u64 = 1 << 20;

/// Largest length `p^a` used in the solution-count sweep.
pub const SOLVER_SWEEP_LENGTH: u64 = 1 << 10;

/// `(p, s, a, i1)` covered by the solution-count sweep: `s` even,
/// `p^(s i1) ≤ 2^20`, `i1 ≤ p^(a-1)`, and the three smallest such `a` with
/// `p^a ≤ 2^10`.
pub fn solver_sweep() -> Vec<(u64, usize, u32, usize)> {
    let mut out = Vec::new();
    for p in (2..=1024u64).filter(|&p| crate::numtheory::is_prime(p)) {
        for s in (2..=20usize).step_by(2) {
            for i1 in 1usize.. {
                let size = (p as u128).checked_pow((s * i1) as u32);
                if size.is_none_or(|z| z > SOLVER_SWEEP_BOUND as u128) {
                    break;
                }
                let mut a_min = 1u32;
                while ipow(p, a_min - 1) < i1 as u64 {
                    a_min += 1;
                }
                for a in a_min..a_min + 3 {
                    if (p as u128).pow(a) <= SOLVER_SWEEP_LENGTH as u128 {
                        out.push((p, s, a, i1));
                    }
                }
            }
        }
    }
    out
}

fn solution_counts() -> Result<(), String> {
    let mut last: Option<(u64, usize, u32, CyclicRing)> = None;
    for (p, s, a, i1) in solver_sweep() {
        let cr = match &last {
            Some((lp, ls, la, cr)) if (*lp, *ls, *la) == (p, s, a) => cr.clone(),
            _ => {
                let cr = cyclic(p, s, a)?;
                last = Some((p, s, a, cr.clone()));
                cr
            }
        };
        let sys = duality::build_system(&cr, i1, DualKind::Hermitian).map_err(e)?;
        let sols = duality::solve_system(&cr, &sys).map_err(e)?;
        let want = ipow(p, (s * i1 / 2) as u32);
        ensure!(
            sols.len() as u64 == want,
            "(p={p}, s={s}, a={a}, i1={i1}): {} solutions, expected {want}",
            sols.len()
        );
        let f = cr.ring().residue_field();
        for x in &sols {
            let lhs = duality::evaluate_system(&cr, &sys, x).map_err(e)?;
            let rhs: Vec<_> = sys.rhs.iter().map(|&b| f.from_int(b)).collect();
            ensure!(lhs == rhs, "(p={p}, s={s}, a={a}, i1={i1}): {x:?} fails substitution");
        }
    }
    Ok(())
}

fn random_vector(rng: &mut StdRng, ring: &GaloisRing, n: usize) -> Vec<GrElem> {
    (0..n)
        .map(|_| ring.from_index(rng.random_range(0..ring.order())))
        .collect()
}

fn dft_samples(p: u64, s: usize, n: u64, samples: usize, seed: u64) -> Result<(), String> {
    let d = Dft::new(p, s, n).map_err(e)?;
    let ring = d.base().ring().clone();
    let ext = d.ext();
    let er = ext.ring();
    let m = d.params().m as usize;
    let mut rng = StdRng::seed_from_u64(seed);
    let part = d.partition().clone();
    for _ in 0..samples {
        let c = random_vector(&mut rng, &ring, n as usize);
        let c2 = random_vector(&mut rng, &ring, n as usize);
        let fc = d.forward(&c).map_err(e)?;
        ensure!(d.inverse(&fc).map_err(e)? == c, "n={n}: round trip failed");
        let fc2 = d.forward(&c2).map_err(e)?;
        let prod = d.forward(&d.mul(&c, &c2)).map_err(e)?;
        ensure!(prod == d.mul_components(&fc, &fc2), "n={n}: transform is not multiplicative");
        let full = d.forward_full(&c).map_err(e)?;
        for coset in &part.cosets {
            for &h in &coset.orbit {
                let mirror = &full[(m - h) % m];
                match coset.class {
                    CosetClass::J0 => ensure!(*mirror == full[h], "n={n}, h={h}: singleton symmetry"),
                    CosetClass::J1 => {
                        let k = s * coset.size() / 2;
                        let bar: Vec<GrElem> =
                            full[h].coeffs().iter().map(|x| er.frobenius(x, k)).collect();
                        ensure!(mirror.coeffs() == bar.as_slice(), "n={n}, h={h}: conjugate symmetry");
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(())
}

fn dft_integrity() -> Result<(), String> {
    for (p, n) in [(2, 6), (2, 10), (2, 12), (3, 6), (3, 12)] {
        dft_samples(p, 1, n, 1000, 0x5eed ^ n)?;
    }
    Ok(())
}

fn dft_round_trip_n6() -> Result<(), String> {
    dft_samples(2, 1, 6, 100, 6)
}

fn composite_full_length_check(p: u64, s: usize, n: u64) -> Result<usize, String> {
    let d = Dft::new(p, s, n).map_err(e)?;
    let o = Oracle::with_ring(d.base().ring().clone(), n as usize).map_err(e)?;
    let mut count = 0;
    for code in d.enumerate_self_dual_composite().map_err(e)? {
        let code = code.map_err(e)?;
        let gens = d.compose(&code).map_err(e)?;
        ensure!(d.decompose(&gens).map_err(e)? == code, "n={n}: decompose(compose) differs");
        let dense = o.dense_from(&gens);
        let dual = o.brute_dual(&dense, DualKind::Euclidean).map_err(e)?;
        ensure!(dense == dual, "n={n}: composed code is not self-dual: {code:?}");
        count += 1;
    }
    Ok(count)
}

fn composite_n6() -> Result<(), String> {
    let n = composite_full_length_check(2, 1, 6)?;
    ensure!(n == 3, "n=6 over Z4: {n} codes");
    Ok(())
}

fn composite_example() -> Result<(), String> {
    let n = composite_full_length_check(2, 1, 6)?;
    ensure!(n == 3, "n=6 over Z4: {n} codes");
    // component forms <2> x <2>, <2> x <1+u+2ξ>, <2> x <1+u+2ξ^2>
    let d = Dft::new(2, 1, 6).map_err(e)?;
    let comp = d.component_ring(1).map_err(e)?;
    let r = comp.ring();
    let xi = r.xi();
    let two = comp.constant(r.from_int(2));
    let mut expect = BTreeSet::new();
    for t in [None, Some(xi.clone()), Some(r.mul(&xi, &xi))] {
        let g = match t {
            None => two.clone(),
            Some(t) => {
                let lin = comp.add(&comp.one(), &comp.u());
                comp.add(&lin, &comp.constant(r.scale(&t, 2)))
            }
        };
        expect.insert(vec![
            (0, CanonicalCode::TorsionOnly { i1: 0 }),
            (1, comp.normalize(&[g])),
        ]);
    }
    let got: BTreeSet<_> = d
        .enumerate_self_dual_composite()
        .map_err(e)?
        .map(|c| c.map(|c| c.components))
        .collect::<Result<_, _>>()
        .map_err(e)?;
    ensure!(got == expect, "n=6 component forms differ: {got:?}");
    let d10 = Dft::new(2, 1, 10).map_err(e)?;
    let mut n10 = 0;
    for code in d10.enumerate_self_dual_composite().map_err(e)? {
        let code = code.map_err(e)?;
        ensure!(d10.dual_decomposition(&code).map_err(e)? == code, "n=10: {code:?} not self-dual");
        n10 += 1;
    }
    ensure!(n10 == 5, "n=10 over Z4: {n10} codes");
    Ok(())
}

fn uniqueness_predicate() -> Result<(), String> {
    for p in [2u64, 3, 5] {
        for s in [1usize, 2] {
            for m in (1..=20u64).filter(|m| m % p != 0) {
                let unique = counting::is_unique_self_dual(p, s, m).map_err(e)?;
                let count = counting::count_e_composite(p, s, m * p).map_err(e)?;
                ensure!(
                    unique == (count == BigUint::from(1u32)),
                    "(p={p}, s={s}, m={m}): predicate {unique}, count {count}"
                );
            }
        }
    }
    Ok(())
}

fn frobenius_routes() -> Result<(), String> {
    for (p, s) in [(2, 3), (3, 2), (5, 2)] {
        let r = GaloisRing::new(p, s).map_err(e)?;
        for a in r.elements().map_err(e)? {
            for k in 0..s {
                ensure!(
                    r.frobenius(&a, k) == r.frobenius_by_expansion(&a, k),
                    "GR({p}^2,{s}): Frobenius routes differ"
                );
            }
        }
    }
    Ok(())
}

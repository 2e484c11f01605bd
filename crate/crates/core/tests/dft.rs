use std::collections::BTreeSet;

use grcodes::cyclic::CanonicalCode;
use grcodes::dft::{CosetClass, DecomposedCode, Dft};
use grcodes::duality::{reciprocal, DualKind};
use grcodes::oracle::Oracle;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

fn all_decomposed(d: &Dft) -> Vec<DecomposedCode> {
    let mut acc: Vec<Vec<(usize, CanonicalCode)>> = vec![Vec::new()];
    for rep in d.representatives() {
        let ideals: Vec<CanonicalCode> = d.component_ring(rep).unwrap().enumerate_ideals().unwrap().collect();
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                ideals.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.push((rep, c.clone()));
                    v
                })
            })
            .collect();
    }
    acc.into_iter()
        .map(|components| DecomposedCode { n: d.params().n, components })
        .collect()
}

// Every component tuple composes to a distinct ideal; its dual matches brute force.
fn check_against_oracle(p: u64, s: usize, n: u64) {
    let d = Dft::new(p, s, n).unwrap();
    let o = Oracle::with_ring(d.base().ring().clone(), n as usize).unwrap();
    let brute: BTreeSet<_> = o.brute_ideals().into_iter().collect();
    let mut composed = BTreeSet::new();
    for code in all_decomposed(&d) {
        let gens = d.compose(&code).unwrap();
        assert_eq!(d.decompose(&gens).unwrap(), code);
        let dense = o.dense_from(&gens);
        let dual = d.dual_decomposition(&code).unwrap();
        let dense_dual = o.dense_from(&d.compose(&dual).unwrap());
        assert_eq!(dense_dual, o.brute_dual(&dense, DualKind::Euclidean).unwrap(), "{code:?}");
        composed.insert(dense);
    }
    assert_eq!(composed, brute, "({p},{s},{n})");
}

#[test]
fn decomposition_matches_oracle_n6() {
    check_against_oracle(2, 1, 6);
}

#[test]
fn decomposition_matches_oracle_n7_pairs() {
    check_against_oracle(2, 1, 7);
}

#[test]
fn decomposition_matches_oracle_z9_n4() {
    check_against_oracle(3, 1, 4);
}

#[test]
fn paired_slots_swap_under_duality() {
    let d = Dft::new(2, 1, 7).unwrap();
    assert_eq!(d.partition().j2_prime, vec![1]);
    assert_eq!(d.partition().j2_double, vec![6]);
    let whole = CanonicalCode::unit_ideal();
    let zero = CanonicalCode::TorsionOnly { i1: 1 };
    let code = DecomposedCode {
        n: 7,
        components: vec![(0, zero.clone()), (1, whole.clone()), (6, zero.clone())],
    };
    let dual = d.dual_decomposition(&code).unwrap();
    assert_eq!(dual.components, vec![(0, whole.clone()), (1, whole), (6, zero)]);
}

#[test]
fn membership_agrees_with_components() {
    let d = Dft::new(2, 1, 6).unwrap();
    let o = Oracle::with_ring(d.base().ring().clone(), 6).unwrap();
    let mut rng = StdRng::seed_from_u64(11);
    let codes = all_decomposed(&d);
    for _ in 0..200 {
        let code = &codes[rng.random_range(0..codes.len())];
        let dense = o.dense_from(&d.compose(code).unwrap());
        let w = rng.random_range(0..o.ambient_size());
        let v = o.decode(w);
        let t = d.forward(&v).unwrap();
        let inside = code
            .components
            .iter()
            .zip(&t.components)
            .all(|((rep, c), x)| d.component_ring(*rep).unwrap().contains(c, x));
        assert_eq!(inside, dense.contains(w));
    }
}

// m Σ d_i ~d'_i equals the sum of ĉ_h ~ĉ'_(-h), split by coset class.
fn inner_product_bridge(n: u64) {
    let d = Dft::new(2, 1, n).unwrap();
    let base = d.base();
    let ext = d.ext();
    let er = ext.ring();
    let r = base.ring();
    let m = d.params().m as usize;
    let s = d.params().s;
    let mut rng = StdRng::seed_from_u64(n);
    for _ in 0..50 {
        let c: Vec<_> = (0..n).map(|_| r.from_index(rng.random_range(0..r.order()))).collect();
        let c2: Vec<_> = (0..n).map(|_| r.from_index(rng.random_range(0..r.order()))).collect();
        let (t, t2) = (d.phi_inverse(&c).unwrap(), d.phi_inverse(&c2).unwrap());
        let mut lhs = base.zero();
        for (x, y) in t.iter().zip(&t2) {
            lhs = base.add(&lhs, &base.mul(x, &reciprocal(base, y)));
        }
        lhs = base.scale(&r.from_int(m as i64), &lhs);
        let (f, f2) = (d.forward_full(&c).unwrap(), d.forward_full(&c2).unwrap());
        let mut rhs = ext.zero();
        for coset in &d.partition().cosets {
            for &h in &coset.orbit {
                let other = match coset.class {
                    CosetClass::J0 => f2[h].clone(),
                    CosetClass::J1 => {
                        let k = s * coset.size() / 2;
                        let bar: Vec<_> = f2[h].coeffs().iter().map(|x| er.frobenius(x, k)).collect();
                        ext.from_u_coeffs(bar).unwrap()
                    }
                    _ => f2[(m - h) % m].clone(),
                };
                rhs = ext.add(&rhs, &ext.mul(&f[h], &reciprocal(ext, &other)));
            }
        }
        let lhs_ext: Vec<_> = lhs.coeffs().iter().map(|x| {
            // base coefficients are integers here (s = 1)
            er.from_int(x.coeffs()[0] as i64)
        }).collect();
        assert_eq!(rhs.coeffs(), lhs_ext.as_slice());
    }
}

#[test]
fn inner_product_bridge_n6() {
    inner_product_bridge(6);
}

#[test]
fn inner_product_bridge_n10() {
    inner_product_bridge(10);
}

#[test]
fn composite_counts_match_formula() {
    for (p, s, n) in [(2, 1, 12), (2, 1, 14), (2, 2, 6), (3, 1, 6), (3, 1, 12), (2, 1, 9), (5, 1, 10)] {
        let d = Dft::new(p, s, n).unwrap();
        let count = d.enumerate_self_dual_composite().unwrap().count();
        assert_eq!(
            num_bigint::BigUint::from(count),
            grcodes::counting::count_e_composite(p, s, n).unwrap(),
            "({p},{s},{n})"
        );
    }
}

#[test]
fn base_degree_two_round_trip() {
    let d = Dft::new(2, 2, 6).unwrap();
    let r = d.base().ring().clone();
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..100 {
        let c: Vec<_> = (0..6).map(|_| r.from_index(rng.random_range(0..r.order()))).collect();
        assert_eq!(d.inverse(&d.forward(&c).unwrap()).unwrap(), c);
    }
}

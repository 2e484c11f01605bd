//! Closed-form counts of cyclic, Euclidean self-dual and Hermitian self-dual
//! codes, exact over arbitrary-precision integers.

use num_bigint::BigUint;

use crate::cyclic::CodeParams;
use crate::dft::partition;
use crate::numtheory::{ipow, is_prime};
use crate::{Error, Result};

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

// (x^(k) - 1) / (x - 1) with exact division.
fn geometric(x: &BigUint, k: u32) -> BigUint {
    let one = big(1);
    let num = x.pow(k) - &one;
    let den = x - &one;
    assert!((&num % &den) == big(0), "geometric sum must divide exactly");
    num / den
}

fn q_of(params: &CodeParams) -> BigUint {
    big(params.p).pow(params.s as u32)
}

/// Number of ideals with `i0 + i1 = d`, for `0 ≤ d ≤ p^a`.
pub fn count_by_d(params: &CodeParams, d: usize) -> Result<BigUint> {
    let n = params.length();
    if d > n {
        return Err(Error::OutOfRange {
            what: "d",
            detail: format!("{d} exceeds p^a = {n}"),
        });
    }
    let ell = (d / 2).min(params.torsion_bound());
    Ok(geometric(&q_of(params), ell as u32 + 1))
}

/// Number of all cyclic codes of length `p^a` (3 when `a = 0`).
pub fn count_all(params: &CodeParams) -> BigUint {
    if params.a == 0 {
        return big(3);
    }
    let n = params.length();
    let mut sum = big(0);
    for d in 0..n {
        sum += count_by_d(params, d).expect("d below p^a");
    }
    sum * big(2) + geometric(&q_of(params), params.torsion_bound() as u32 + 1)
}

/// Number of Euclidean self-dual codes of length `p^a` (1 when `a = 0`).
pub fn count_e_prime_power(params: &CodeParams) -> BigUint {
    let a = params.a;
    if a == 0 {
        return big(1);
    }
    let q = q_of(params);
    if params.p == 2 {
        match a {
            1 => big(1),
            2 => big(1) + &q,
            _ => {
                let tail = geometric(&q, ipow(2, a - 2) as u32 - 1);
                big(1) + &q + big(2).pow(2 * params.s as u32 + 1) * tail
            }
        }
    } else {
        let k = (params.torsion_bound() as u32 + 1) / 2;
        big(2) * geometric(&q, k)
    }
}

/// Number of Hermitian self-dual codes of length `p^a` (1 when `a = 0`).
pub fn count_h_prime_power(params: &CodeParams) -> Result<BigUint> {
    if params.s % 2 != 0 {
        return Err(Error::OddDegree(params.s));
    }
    if params.a == 0 {
        return Ok(big(1));
    }
    let half = big(params.p).pow(params.s as u32 / 2);
    Ok(geometric(&half, params.torsion_bound() as u32 + 1))
}

/// `Σ_{i1=0}^{p^(a-1)} p^(s i1 / 2)`, the term-by-term form of the Hermitian count.
pub fn count_h_by_sum(params: &CodeParams) -> Result<BigUint> {
    if params.s % 2 != 0 {
        return Err(Error::OddDegree(params.s));
    }
    let half = big(params.p).pow(params.s as u32 / 2);
    let top = if params.a == 0 { 0 } else { params.torsion_bound() };
    Ok((0..=top).map(|i| half.pow(i as u32)).sum())
}

/// Split `n = m p^a` with `p ∤ m`.
pub fn split_length(p: u64, n: u64) -> (u64, u32) {
    let (mut m, mut a) = (n, 0);
    while m % p == 0 {
        m /= p;
        a += 1;
    }
    (m, a)
}

/// Number of Euclidean self-dual cyclic codes of length `n` over `GR(p^2, s)`.
pub fn count_e_composite(p: u64, s: usize, n: u64) -> Result<BigUint> {
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
    let (m, a) = split_length(p, n);
    let part = partition(m, p, s)?;
    let at = |deg: usize| CodeParams { p, s: deg, a };
    let delta = if m % 2 == 0 { 2 } else { 1 };
    let mut total = count_e_prime_power(&at(s)).pow(delta);
    for &h in &part.j1 {
        total *= count_h_prime_power(&at(s * part.size_of(h)))?;
    }
    for &k in &part.j2_prime {
        total *= count_all(&at(s * part.size_of(k)));
    }
    Ok(total)
}

/// Whether length `m p` admits exactly one Euclidean self-dual code.
pub fn is_unique_self_dual(p: u64, s: usize, m: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 || m % p == 0 {
        return Err(Error::OutOfRange {
            what: "m",
            detail: format!("{m} must be positive and coprime to {p}"),
        });
    }
    let _ = s;
    Ok(m == 1 && p == 2)
}

/// Rows `(n, N_E(n))` for `n = 1..=n_max`.
pub fn emit_table(p: u64, s: usize, n_max: u64) -> Result<Vec<(u64, BigUint)>> {
    (1..=n_max)
        .map(|n| Ok((n, count_e_composite(p, s, n)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(p: u64, s: usize, a: u32) -> CodeParams {
        CodeParams::new(p, s, a).unwrap()
    }

    #[test]
    fn by_d_examples() {
        assert_eq!(count_by_d(&cp(2, 1, 1), 0).unwrap(), big(1));
        assert_eq!(count_by_d(&cp(2, 1, 1), 2).unwrap(), big(3));
        assert_eq!(count_by_d(&cp(3, 1, 1), 2).unwrap(), big(4));
        assert!(count_by_d(&cp(2, 1, 1), 3).is_err());
    }

    #[test]
    fn all_examples() {
        assert_eq!(count_all(&cp(2, 1, 1)), big(7));
        assert_eq!(count_all(&cp(2, 1, 2)), big(23));
        assert_eq!(count_all(&cp(3, 1, 1)), big(16));
        assert_eq!(count_all(&cp(5, 3, 0)), big(3));
    }

    #[test]
    fn self_dual_prime_power_examples() {
        assert_eq!(count_e_prime_power(&cp(2, 1, 3)), big(11));
        assert_eq!(count_e_prime_power(&cp(3, 1, 2)), big(8));
        assert_eq!(count_e_prime_power(&cp(2, 2, 2)), big(5));
        assert_eq!(count_h_prime_power(&cp(2, 2, 1)).unwrap(), big(3));
        assert_eq!(count_h_prime_power(&cp(2, 4, 1)).unwrap(), big(5));
        assert_eq!(count_h_prime_power(&cp(2, 2, 2)).unwrap(), big(7));
        assert!(count_h_prime_power(&cp(2, 1, 2)).is_err());
    }

    #[test]
    fn hermitian_sum_matches_closed_form() {
        for p in [2u64, 3, 5, 7] {
            for s in [2usize, 4] {
                for a in 0..=4u32 {
                    if ipow(p, s as u32) > 81 || p.pow(a) > 1 << 16 {
                        continue;
                    }
                    let params = cp(p, s, a);
                    assert_eq!(count_h_prime_power(&params), count_h_by_sum(&params));
                }
            }
        }
    }

    #[test]
    fn composite_examples() {
        assert_eq!(count_e_composite(2, 1, 6).unwrap(), big(3));
        assert_eq!(count_e_composite(2, 2, 40).unwrap(), big(4302397));
        assert_eq!(count_e_composite(3, 1, 39).unwrap(), big(15488));
        assert_eq!(count_e_composite(2, 1, 24).unwrap(), big(341));
        assert_eq!(count_e_composite(2, 1, 2).unwrap(), big(1));
    }

    #[test]
    fn composite_with_m_one_is_prime_power() {
        for (p, s, a) in [(2, 1, 3), (3, 1, 2), (2, 2, 4), (5, 1, 2)] {
            let n = ipow(p, a);
            assert_eq!(
                count_e_composite(p, s, n).unwrap(),
                count_e_prime_power(&cp(p, s, a))
            );
        }
    }

    #[test]
    fn uniqueness_examples() {
        assert!(is_unique_self_dual(2, 3, 1).unwrap());
        assert!(!is_unique_self_dual(2, 1, 3).unwrap());
        assert!(!is_unique_self_dual(3, 1, 1).unwrap());
        assert!(is_unique_self_dual(3, 1, 3).is_err());
    }
}

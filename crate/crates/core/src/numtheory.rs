//! Small integer helpers: primality, factorisation, modular powers and
//! binomial coefficients modulo a prime.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    base = acc as u64;
    base
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Multiplicative order of `a` modulo `m` (requires gcd(a, m) = 1).
/// The order modulo 1 is taken to be 1.
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    assert_eq!(gcd(a % m, m), 1, "order of a non-unit");
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = ((x as u128 * a as u128) % m as u128) as u64;
        k += 1;
    }
    k
}

/// `p^e` as a `u64`, panicking on overflow.
pub fn ipow(p: u64, e: u32) -> u64 {
    p.checked_pow(e).expect("integer power overflows u64")
}

/// Binomial coefficient `C(n, k) mod p` by Lucas's theorem.
pub fn binom_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = acc * small_binom_mod(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

// C(n, k) mod p for 0 <= k <= n < p.
fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num = num * ((n - i) as u128) % p as u128;
        den = den * ((i + 1) as u128) % p as u128;
    }
    let inv = inv_mod(den as u64, p).expect("denominator invertible below p");
    (num * inv as u128 % p as u128) as u64
}

/// `C(p, j) mod p^2` for `1 <= j <= p - 1`, using
/// `C(p, j) = (p / j) C(p-1, j-1)` and `C(p-1, j-1) = (-1)^(j-1) mod p`.
pub fn binom_p_j_mod_p2(p: u64, j: u64) -> u64 {
    debug_assert!(j >= 1 && j < p);
    let jinv = inv_mod(j % p, p).expect("j < p");
    let unit = if (j - 1) % 2 == 0 { jinv } else { (p - jinv) % p };
    p * unit
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact_binom(n: u64, k: u64) -> u128 {
        if k > n {
            return 0;
        }
        let mut acc = 1u128;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
        }
        acc
    }

    #[test]
    fn lucas_matches_exact() {
        for p in [2u64, 3, 5, 7] {
            for n in 0..40 {
                for k in 0..=n {
                    assert_eq!(
                        binom_mod_p(n, k, p) as u128,
                        exact_binom(n, k) % p as u128,
                        "C({n},{k}) mod {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn binom_p_j_mod_p2_matches_exact() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for j in 1..p {
                assert_eq!(binom_p_j_mod_p2(p, j) as u128, exact_binom(p, j) % (p * p) as u128);
            }
        }
    }

    #[test]
    fn primes_and_orders() {
        let ps: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(multiplicative_order(2, 7), 3);
        assert_eq!(multiplicative_order(3, 13), 3);
        assert_eq!(multiplicative_order(4, 5), 2);
        assert_eq!(inv_mod(3, 4), Some(3));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(pow_mod(3, 4, 5), 1);
    }
}

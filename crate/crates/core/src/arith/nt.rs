//! Elementary number theory on machine integers.
//!
//! Everything here works on `u64`/`i64` inputs and uses `u128`/`i128`
//! intermediates, so results are exact for the full input range.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// `r mod m` as a representative in `0..m`.
pub fn reduce_mod(r: i64, m: u64) -> u64 {
    (r as i128).rem_euclid(m as i128) as u64
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_odd_prime(n: u64) -> bool {
    n != 2 && is_prime(n)
}

/// Prime factorisation by trial division, primes in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
        if n > 1 && is_prime(n) {
            break;
        }
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Largest `e` with `p^e | n`, for `n != 0`.
pub fn valuation_u64(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n != 0 && n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

/// Euler's totient, from the prime factorisation.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient is defined for n >= 1");
    factorize(n)
        .into_iter()
        .fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}

/// Multiplicative order of `r` modulo `m`; 1 when `m = 1`.
pub fn mult_order(r: i64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::Unsupported("modulus must be positive".into()));
    }
    if m == 1 {
        return Ok(1);
    }
    let r = reduce_mod(r, m);
    if gcd(r, m) != 1 {
        return Err(Error::NotCoprime {
            value: r as i64,
            modulus: m,
        });
    }
    // The order divides phi(m); strip prime factors while r^(ord/p) stays 1.
    let mut ord = totient(m);
    for (p, _) in factorize(ord) {
        while ord % p == 0 && pow_mod(r, ord / p, m) == 1 {
            ord /= p;
        }
    }
    Ok(ord)
}

/// Kronecker symbol `(a / n)` for arbitrary integers.
pub fn kronecker(a: i64, n: i64) -> i8 {
    let mut a = a as i128;
    let mut n = n as i128;
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut result: i8 = 1;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    let twos = n.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        n >>= twos;
        if twos % 2 == 1 {
            let r8 = a.rem_euclid(8);
            if r8 == 3 || r8 == 5 {
                result = -result;
            }
        }
    }
    // Jacobi symbol for odd n > 0.
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r8 = n % 8;
            if r8 == 3 || r8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a = a.rem_euclid(n);
    }
    if n == 1 {
        result
    } else {
        0
    }
}

pub fn is_squarefree(n: i64) -> bool {
    n != 0 && factorize(n.unsigned_abs()).iter().all(|&(_, e)| e == 1)
}

/// Discriminant of `Q(sqrt(d))` for squarefree `d != 1`.
pub fn fundamental_discriminant(d: i64) -> i64 {
    if d.rem_euclid(4) == 1 {
        d
    } else {
        4 * d
    }
}

pub fn is_fundamental_discriminant(disc: i64) -> bool {
    if disc == 0 || disc == 1 {
        return false;
    }
    match disc.rem_euclid(4) {
        1 => is_squarefree(disc),
        0 => {
            let m = disc / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m)
        }
        _ => false,
    }
}

/// `(D / p)` for a fundamental discriminant `D` and a prime `p`:
/// 0 when `p` ramifies in `Q(sqrt(D))`, +1 when it splits, -1 when inert.
pub fn kronecker_symbol(disc: i64, p: u64) -> Result<i8> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !is_fundamental_discriminant(disc) {
        return Err(Error::NotFundamental(disc));
    }
    Ok(kronecker(disc, p as i64))
}

/// p-adic valuation of a nonzero big integer.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return e;
        }
        n = q;
        e += 1;
    }
}

/// Decompose `q = p^a` with `p` prime and `a >= 1`.
pub fn prime_power(q: &BigInt) -> Option<(u64, u32)> {
    if q <= &BigInt::one() {
        return None;
    }
    let bits = q.bits() as u32;
    for a in 1..=bits {
        let root = q.nth_root(a);
        if root.pow(a) == *q {
            if let Some(p) = root.to_u64() {
                if is_prime(p) {
                    return Some((p, a));
                }
            }
        }
    }
    None
}

/// Squarefree kernel of a nonzero integer, keeping the sign.
///
/// Small prime factors are removed by trial division; a large cofactor is
/// accepted only when it is a perfect square or provably prime.
pub fn squarefree_part(n: &BigInt) -> Result<BigInt> {
    const TRIAL_BOUND: u64 = 1 << 20;
    assert!(!n.is_zero(), "squarefree part of zero");
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.abs();
    let mut kernel = BigInt::from(sign);
    let mut d = 2u64;
    while d < TRIAL_BOUND {
        let bd = BigInt::from(d);
        if &bd * &bd > rest {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&bd);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e % 2 == 1 {
            kernel *= &bd;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Ok(kernel);
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        return Ok(kernel);
    }
    let bound = BigInt::from(TRIAL_BOUND);
    if rest < &bound * &bound || rest.to_u64().is_some_and(is_prime) {
        return Ok(kernel * rest);
    }
    Err(Error::Unsupported(format!(
        "cannot certify the squarefree part of {n}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_examples() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(14), 6);
        assert_eq!(totient(22), 10);
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(mult_order(19, 18).unwrap(), 1);
        assert_eq!(mult_order(11, 14).unwrap(), 3);
        assert_eq!(mult_order(7, 18).unwrap(), 3);
        assert_eq!(mult_order(5, 1).unwrap(), 1);
        assert_eq!(mult_order(-1, 7).unwrap(), 2);
        assert!(matches!(mult_order(6, 18), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker_symbol(-19, 5).unwrap(), 1);
        assert_eq!(kronecker_symbol(-4, 2).unwrap(), 0);
        assert_eq!(kronecker_symbol(-7, 11).unwrap(), 1);
        assert_eq!(kronecker_symbol(-3, 19).unwrap(), 1);
        assert_eq!(kronecker_symbol(-7, 2).unwrap(), 1);
        assert_eq!(kronecker_symbol(5, 2).unwrap(), -1);
        assert!(kronecker_symbol(-12, 5).is_err());
        assert!(kronecker_symbol(-3, 9).is_err());
    }

    #[test]
    fn fundamental_discriminants() {
        assert_eq!(fundamental_discriminant(-19), -19);
        assert_eq!(fundamental_discriminant(-1), -4);
        assert_eq!(fundamental_discriminant(2), 8);
        assert!(is_fundamental_discriminant(-4));
        assert!(is_fundamental_discriminant(-8));
        assert!(!is_fundamental_discriminant(-16));
        assert!(!is_fundamental_discriminant(-1));
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(&BigInt::from(125)), Some((5, 3)));
        assert_eq!(prime_power(&BigInt::from(823_543)), Some((7, 7)));
        assert_eq!(prime_power(&BigInt::from(2)), Some((2, 1)));
        assert_eq!(prime_power(&BigInt::from(12)), None);
        assert_eq!(prime_power(&BigInt::from(1)), None);
    }

    #[test]
    fn squarefree_kernels() {
        assert_eq!(squarefree_part(&BigInt::from(-475)).unwrap(), BigInt::from(-19));
        assert_eq!(squarefree_part(&BigInt::from(-400)).unwrap(), BigInt::from(-1));
        assert_eq!(squarefree_part(&BigInt::from(-1323)).unwrap(), BigInt::from(-3));
        assert_eq!(squarefree_part(&BigInt::from(1)).unwrap(), BigInt::from(1));
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3_215_031_751));
    }
}

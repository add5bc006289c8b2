//! Valuations of the roots of a rational quadratic at the places above `p`.
//!
//! In the split case the roots live in `Q_p` and are `(-b ± sqrt(D)) / 2`.
//! `D = p^(2e) u` with `u` a p-adic unit square; `sqrt(u)` is Hensel-lifted
//! to the working precision and the root valuations are read off the
//! numerators. Valuations are normalised so that `w(p) = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::nt::{self, pow_mod};
use super::poly::IntPoly;
use super::rat::Rat;
use crate::error::{Error, Result};

const MAX_PRECISION: u32 = 1 << 14;

/// One place of `Q[t]/(h)` above `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceValuation {
    /// `w(root)` with `w(p) = 1`.
    pub valuation: Rat,
    /// `[K_v : Q_p]`
    pub local_degree: u32,
}

/// How a prime decomposes in a quadratic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Decomposition {
    Split,
    Inert,
    Ramified,
}

impl Decomposition {
    pub fn from_kronecker(symbol: i8) -> Self {
        match symbol {
            1 => Decomposition::Split,
            -1 => Decomposition::Inert,
            _ => Decomposition::Ramified,
        }
    }

    pub fn residue_degree(self) -> u32 {
        match self {
            Decomposition::Inert => 2,
            _ => 1,
        }
    }

    pub fn ramification_index(self) -> u32 {
        match self {
            Decomposition::Ramified => 2,
            _ => 1,
        }
    }

    pub fn place_count(self) -> u32 {
        match self {
            Decomposition::Split => 2,
            _ => 1,
        }
    }
}

/// Squarefree `d` with `Q(sqrt(disc)) = Q(sqrt(d))`, for a non-square `disc`.
pub fn quadratic_field_kernel(h: &IntPoly) -> Result<i64> {
    let disc = h
        .quadratic_discriminant()
        .ok_or_else(|| Error::Unsupported(format!("{h} is not quadratic")))?;
    if h.is_irreducible_low_degree() != Some(true) {
        return Err(Error::Reducible(h.to_string()));
    }
    nt::squarefree_part(&disc)?
        .to_i64()
        .ok_or_else(|| Error::Unsupported(format!("discriminant kernel of {h} exceeds 64 bits")))
}

/// Places of `Q[t]/(h)` above `p` with the valuation of the root of `h` at
/// each, for a monic irreducible quadratic `h`. Split places are returned
/// in decreasing order of valuation.
pub fn hensel_root_valuations(h: &IntPoly, p: u64) -> Result<Vec<PlaceValuation>> {
    if h.degree() != Some(2) {
        return Err(Error::Unsupported(format!("{h} is not quadratic")));
    }
    if !h.is_monic() {
        return Err(Error::NotMonic(h.to_string()));
    }
    if !nt::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let kernel = quadratic_field_kernel(h)?;
    let c0 = h.coeff(0);
    if c0.is_zero() {
        return Err(Error::Reducible(h.to_string()));
    }
    let v_c0 = nt::valuation(&c0, p);
    let decomposition = Decomposition::from_kronecker(nt::kronecker(
        nt::fundamental_discriminant(kernel),
        p as i64,
    ));
    if decomposition != Decomposition::Split {
        return Ok(vec![PlaceValuation {
            valuation: Rat::new(v_c0, 2),
            local_degree: 2,
        }]);
    }

    let b = h.coeff(1);
    let disc = h.quadratic_discriminant().expect("quadratic");
    let v_disc = nt::valuation(&disc, p);
    debug_assert!(v_disc % 2 == 0, "split prime with odd discriminant valuation");
    let mut precision = 2 * v_disc + 2 * v_c0 + 4;
    loop {
        let at_k = split_valuations(&b, &disc, p, precision);
        let at_k2 = split_valuations(&b, &disc, p, precision + 2);
        if let (Some(a), Some(c)) = (&at_k, &at_k2) {
            if a == c {
                let mut vals = *a;
                vals.sort_unstable_by(|x, y| y.cmp(x));
                return Ok(vals
                    .into_iter()
                    .map(|v| PlaceValuation {
                        valuation: Rat::from_int(v),
                        local_degree: 1,
                    })
                    .collect());
            }
        }
        precision *= 2;
        if precision > MAX_PRECISION {
            return Err(Error::PrecisionExhausted {
                poly: h.to_string(),
                p,
                precision,
            });
        }
    }
}

/// Root valuations computed modulo `p^k`; `None` while a root is still
/// indistinguishable from zero at that precision.
fn split_valuations(b: &BigInt, disc: &BigInt, p: u64, k: u32) -> Option<[u32; 2]> {
    let bp = BigInt::from(p);
    let e = nt::valuation(disc, p) / 2;
    let unit = disc / bp.pow(2 * e);
    // extra digits absorb the loss from dividing by 2 when p = 2
    let s = sqrt_unit(&unit, p, k + 2)?;
    let modulus = bp.pow(k);
    let shift = bp.pow(e);
    let two_val = if p == 2 { 1 } else { 0 };
    let mut out = [0u32; 2];
    for (slot, sign) in out.iter_mut().zip([1i32, -1]) {
        let num = (-b + BigInt::from(sign) * &shift * &s).mod_floor(&modulus);
        if num.is_zero() {
            return None;
        }
        *slot = nt::valuation(&num, p).checked_sub(two_val)?;
    }
    Some(out)
}

/// A square root of the p-adic unit `u` modulo `p^k`.
fn sqrt_unit(u: &BigInt, p: u64, k: u32) -> Option<BigInt> {
    let bp = BigInt::from(p);
    if p == 2 {
        let modulus = BigInt::from(2).pow(k.max(3));
        if u.mod_floor(&BigInt::from(8)) != BigInt::one() {
            return None;
        }
        let mut x = BigInt::one();
        for j in 3..k {
            let m = BigInt::from(2).pow(j + 1);
            if (&x * &x - u).mod_floor(&m) != BigInt::zero() {
                x += BigInt::from(2).pow(j - 1);
            }
        }
        return Some(x.mod_floor(&modulus));
    }
    let u_mod_p = u.mod_floor(&bp).to_u64()?;
    let mut x = BigInt::from(sqrt_mod_prime(u_mod_p, p)?);
    let mut reached = 1u32;
    while reached < k {
        reached = (2 * reached).min(k);
        let m = bp.pow(reached);
        let fx = (&x * &x - u).mod_floor(&m);
        let inv = mod_inverse(&(BigInt::from(2) * &x), &m)?;
        x = (&x - fx * inv).mod_floor(&m);
    }
    Some(x)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let eg = a.mod_floor(m).extended_gcd(m);
    eg.gcd.is_one().then(|| eg.x.mod_floor(m))
}

/// Tonelli-Shanks for an odd prime `p`; `None` for non-residues.
fn sqrt_mod_prime(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mulmod = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mulmod(tt, tt);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mulmod(b, b);
        t = mulmod(t, c);
        r = mulmod(r, b);
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(num: i64, den: i64, deg: u32) -> PlaceValuation {
        PlaceValuation {
            valuation: Rat::new(num, den),
            local_degree: deg,
        }
    }

    #[test]
    fn split_examples() {
        let h = IntPoly::from_i64s(&[125, 5, 1]);
        assert_eq!(
            hensel_root_valuations(&h, 5).unwrap(),
            vec![pv(2, 1, 1), pv(1, 1, 1)]
        );
        let h = IntPoly::from_i64s(&[1331, 44, 1]);
        assert_eq!(
            hensel_root_valuations(&h, 11).unwrap(),
            vec![pv(2, 1, 1), pv(1, 1, 1)]
        );
    }

    #[test]
    fn ramified_example() {
        let h = IntPoly::from_i64s(&[2, 2, 1]);
        assert_eq!(hensel_root_valuations(&h, 2).unwrap(), vec![pv(1, 2, 2)]);
    }

    #[test]
    fn inert_example() {
        // t^2 + t + 2 has disc -7; 3 is inert in Q(sqrt(-7))
        let h = IntPoly::from_i64s(&[2, 1, 1]);
        assert_eq!(hensel_root_valuations(&h, 3).unwrap(), vec![pv(0, 1, 2)]);
    }

    #[test]
    fn two_adic_split() {
        // t^2 + 2t + 8: disc -28, kernel -7, 2 splits; slopes 1 and 2
        let h = IntPoly::from_i64s(&[8, 2, 1]);
        assert_eq!(
            hensel_root_valuations(&h, 2).unwrap(),
            vec![pv(2, 1, 1), pv(1, 1, 1)]
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            hensel_root_valuations(&IntPoly::from_i64s(&[-4, 0, 1]), 2),
            Err(Error::Reducible(_))
        ));
        assert!(hensel_root_valuations(&IntPoly::from_i64s(&[1, 0, 1]), 4).is_err());
        assert!(hensel_root_valuations(&IntPoly::from_i64s(&[1, 1]), 2).is_err());
    }

    #[test]
    fn tonelli_shanks() {
        for p in [3u64, 5, 7, 13, 17, 41, 97, 193] {
            for a in 1..p {
                if let Some(r) = sqrt_mod_prime(a, p) {
                    assert_eq!(r * r % p, a);
                }
            }
        }
    }
}

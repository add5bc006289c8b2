use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense integer polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64s(&[1])
    }

    /// `t - c`
    pub fn linear(c: impl Into<BigInt>) -> Self {
        IntPoly::new(vec![-c.into(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, mut exp: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Quotient by a monic divisor; fails unless the division is exact.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let dd = divisor.degree().ok_or(Error::ConstantPolynomial)?;
        if !divisor.is_monic() {
            return Err(Error::NotMonic(divisor.to_string()));
        }
        let Some(nd) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if nd < dd {
            return Err(Error::Unsupported(format!("{divisor} does not divide {self}")));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Unsupported(format!("{divisor} does not divide {self}")));
        }
        Ok(IntPoly::new(quot))
    }

    /// `s^deg * self(t / s)`, i.e. coefficient `i` multiplied by `s^(deg - i)`.
    pub fn scale_roots(&self, s: &BigInt) -> IntPoly {
        let Some(n) = self.degree() else {
            return IntPoly::zero();
        };
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * s.pow((n - i) as u32))
                .collect(),
        )
    }

    /// `b^2 - 4ac` for a quadratic `a t^2 + b t + c`.
    pub fn quadratic_discriminant(&self) -> Option<BigInt> {
        (self.degree() == Some(2)).then(|| {
            let (c, b, a) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]);
            b * b - BigInt::from(4) * a * c
        })
    }

    /// Irreducibility over the rationals for degrees 1 and 2 (discriminant
    /// test); `None` for higher degree.
    pub fn is_irreducible_low_degree(&self) -> Option<bool> {
        match self.degree()? {
            0 => Some(false),
            1 => Some(true),
            2 => {
                let disc = self.quadratic_discriminant()?;
                if disc.is_negative() {
                    return Some(true);
                }
                let r = disc.sqrt();
                Some(&r * &r != disc)
            }
            _ => None,
        }
    }

    /// The `n`-th cyclotomic polynomial.
    pub fn cyclotomic(n: u64) -> IntPoly {
        assert!(n >= 1, "cyclotomic polynomial index must be positive");
        // t^n - 1 = prod_{d | n} Phi_d(t)
        let mut acc = x_pow_minus_one(n);
        for d in 1..n {
            if n % d == 0 {
                acc = acc
                    .div_exact(&IntPoly::cyclotomic(d))
                    .expect("cyclotomic factors divide t^n - 1");
            }
        }
        acc
    }
}

fn x_pow_minus_one(n: u64) -> IntPoly {
    let mut c = vec![BigInt::zero(); n as usize + 1];
    c[0] = BigInt::from(-1);
    c[n as usize] = BigInt::one();
    IntPoly::new(c)
}

impl From<IntPoly> for Vec<BigInt> {
    fn from(p: IntPoly) -> Self {
        p.coeffs
    }
}

impl From<Vec<BigInt>> for IntPoly {
    fn from(v: Vec<BigInt>) -> Self {
        IntPoly::new(v)
    }
}

// Coefficients travel as decimal strings so JSON stays readable.
impl From<IntPoly> for Vec<String> {
    fn from(p: IntPoly) -> Self {
        p.coeffs.iter().map(BigInt::to_string).collect()
    }
}

impl TryFrom<Vec<String>> for IntPoly {
    type Error = Error;

    fn try_from(v: Vec<String>) -> Result<Self> {
        v.join(",").parse()
    }
}

/// Comma-separated coefficients, constant term first: `"125,5,1"`.
impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("invalid coefficient {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Whether the roots of `h` are closed under `x -> q/x`, i.e.
/// `t^n h(q/t) = h(0) h(t)` coefficientwise, with `n = deg h`.
///
/// For `h = t - c` this is exactly `c^2 = q`. For higher degree it is
/// necessary but not sufficient for `h` to be the minimal polynomial of a
/// q-Weil number: real root pairs `x, q/x` also satisfy it.
pub fn weil_functional_equation(h: &IntPoly, q: &BigInt) -> Result<bool> {
    let n = match h.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    let c0 = h.coeff(0);
    let lead = h.leading().expect("nonzero polynomial");
    Ok((0..=n).all(|k| {
        // coefficient of t^k in t^n h(q/t) is c_{n-k} q^{n-k}
        h.coeff(n - k) * q.pow((n - k) as u32) == &c0 * h.coeff(k) * lead
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn normalisation_and_degree() {
        let p = IntPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPoly::from_i64s(&[0, 0]).degree(), None);
        assert!(IntPoly::from_i64s(&[125, 5, 1]).is_monic());
        assert!(!IntPoly::from_i64s(&[1, 2]).is_monic());
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64s(&[125, 5, 1]).to_string(), "t^2 + 5t + 125");
        assert_eq!(IntPoly::from_i64s(&[-11, 1]).to_string(), "t - 11");
        assert_eq!(IntPoly::from_i64s(&[0, -1, 0, 1]).to_string(), "t^3 - t");
    }

    #[test]
    fn parse() {
        let p: IntPoly = "125, 5, 1".parse().unwrap();
        assert_eq!(p, IntPoly::from_i64s(&[125, 5, 1]));
        assert!("1,x".parse::<IntPoly>().is_err());
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(IntPoly::cyclotomic(1), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(IntPoly::cyclotomic(2), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(IntPoly::cyclotomic(4), IntPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(IntPoly::cyclotomic(6), IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(
            IntPoly::cyclotomic(9),
            IntPoly::from_i64s(&[1, 0, 0, 1, 0, 0, 1])
        );
        assert_eq!(
            IntPoly::cyclotomic(14),
            IntPoly::from_i64s(&[1, -1, 1, -1, 1, -1, 1])
        );
        assert_eq!(IntPoly::cyclotomic(22).degree(), Some(10));
    }

    #[test]
    fn arithmetic() {
        let a = IntPoly::from_i64s(&[1, 1]);
        assert_eq!(a.pow(3), IntPoly::from_i64s(&[1, 3, 3, 1]));
        let q = IntPoly::from_i64s(&[1, 3, 3, 1])
            .div_exact(&IntPoly::from_i64s(&[1, 1]))
            .unwrap();
        assert_eq!(q, IntPoly::from_i64s(&[1, 2, 1]));
        assert!(IntPoly::from_i64s(&[1, 0, 1])
            .div_exact(&IntPoly::from_i64s(&[1, 1]))
            .is_err());
        assert_eq!(a.eval(&big(4)), big(5));
        assert_eq!(
            IntPoly::from_i64s(&[1, 1]).scale_roots(&big(3)),
            IntPoly::from_i64s(&[3, 1])
        );
    }

    #[test]
    fn functional_equation_examples() {
        let q = big(125);
        assert!(weil_functional_equation(&IntPoly::from_i64s(&[125, 5, 1]), &q).unwrap());
        assert!(weil_functional_equation(&IntPoly::from_i64s(&[11, 1]), &big(121)).unwrap());
        assert!(weil_functional_equation(&IntPoly::from_i64s(&[-11, 1]), &big(121)).unwrap());
        assert!(!weil_functional_equation(&IntPoly::from_i64s(&[-10, 1]), &big(121)).unwrap());
        // real root pair -25.69.., -4.86..: closed under x -> q/x, not Weil
        assert!(weil_functional_equation(&IntPoly::from_i64s(&[125, 30, 1]), &q).unwrap());
        assert!(!weil_functional_equation(&IntPoly::from_i64s(&[124, 5, 1]), &q).unwrap());
        assert!(weil_functional_equation(&IntPoly::from_i64s(&[7]), &q).is_err());
    }

    #[test]
    fn irreducibility() {
        assert_eq!(IntPoly::from_i64s(&[125, 5, 1]).is_irreducible_low_degree(), Some(true));
        assert_eq!(IntPoly::from_i64s(&[-4, 0, 1]).is_irreducible_low_degree(), Some(false));
        assert_eq!(IntPoly::from_i64s(&[-2, 0, 1]).is_irreducible_low_degree(), Some(true));
        assert_eq!(IntPoly::cyclotomic(7).is_irreducible_low_degree(), None);
    }
}

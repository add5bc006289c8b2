//! Symbolic number-field descriptors.
//!
//! Fields are never implemented elementwise. Every question asked of them
//! (degrees, splitting of primes, containment of quadratic subfields, unit
//! torsion) is answered from the conductor or discriminant alone. All fields
//! involved are abelian, so they sit inside a cyclotomic field `Q(zeta_N)`
//! and correspond to a subgroup of `(Z/N)^x`; local degrees are read off
//! the inertia and decomposition subgroups there.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::nt::{self, gcd, kronecker, lcm, totient};
use crate::arith::Decomposition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "param")]
pub enum FieldDescriptor {
    Rational,
    /// `Q(sqrt(d))`, `d > 1` squarefree.
    RealQuadratic(i64),
    /// `Q(sqrt(d))`, `d < 0` squarefree.
    ImagQuadratic(i64),
    /// `Q(zeta_m)` with `m >= 3`, `m != 2 mod 4`.
    Cyclotomic(u64),
}

/// Conductor of `Q(zeta_m)`: drops a single factor 2 from `m = 2 mod 4`.
pub fn normalize_conductor(m: u64) -> u64 {
    if m % 4 == 2 {
        m / 2
    } else {
        m
    }
}

impl FieldDescriptor {
    /// `Q(sqrt(d))` for squarefree `d != 0, 1`.
    pub fn quadratic(d: i64) -> Result<Self> {
        if d == 1 || !nt::is_squarefree(d) {
            return Err(Error::NotSquarefree(d));
        }
        Ok(if d < 0 {
            FieldDescriptor::ImagQuadratic(d)
        } else {
            FieldDescriptor::RealQuadratic(d)
        })
    }

    /// `Q(zeta_m)` with the conductor normalised; `Q` for `m <= 2`.
    pub fn cyclotomic(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::Unsupported("cyclotomic index must be positive".into()));
        }
        Ok(match normalize_conductor(m) {
            1 => FieldDescriptor::Rational,
            c => FieldDescriptor::Cyclotomic(c),
        })
    }

    pub fn degree(&self) -> u64 {
        match *self {
            FieldDescriptor::Rational => 1,
            FieldDescriptor::RealQuadratic(_) | FieldDescriptor::ImagQuadratic(_) => 2,
            FieldDescriptor::Cyclotomic(m) => totient(m),
        }
    }

    pub fn is_totally_imaginary(&self) -> bool {
        matches!(
            self,
            FieldDescriptor::ImagQuadratic(_) | FieldDescriptor::Cyclotomic(_)
        )
    }

    pub fn is_quadratic(&self) -> bool {
        matches!(
            self,
            FieldDescriptor::ImagQuadratic(_) | FieldDescriptor::RealQuadratic(_)
        )
    }

    /// `(r1, r2)`: real embeddings and pairs of complex embeddings.
    pub fn signature(&self) -> (u64, u64) {
        match *self {
            FieldDescriptor::Rational => (1, 0),
            FieldDescriptor::RealQuadratic(_) => (2, 0),
            FieldDescriptor::ImagQuadratic(_) => (0, 1),
            FieldDescriptor::Cyclotomic(m) => (0, totient(m) / 2),
        }
    }

    /// Fundamental discriminant of a quadratic field.
    pub fn quadratic_discriminant(&self) -> Option<i64> {
        match *self {
            FieldDescriptor::RealQuadratic(d) | FieldDescriptor::ImagQuadratic(d) => {
                Some(nt::fundamental_discriminant(d))
            }
            _ => None,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "Q"),
            FieldDescriptor::RealQuadratic(d) | FieldDescriptor::ImagQuadratic(d) => {
                write!(f, "Q(sqrt({d}))")
            }
            FieldDescriptor::Cyclotomic(m) => write!(f, "Q(zeta_{m})"),
        }
    }
}

fn require_quadratic(k: &FieldDescriptor) -> Result<i64> {
    k.quadratic_discriminant()
        .ok_or_else(|| Error::Unsupported(format!("{k} is not a quadratic field")))
}

fn require_prime(p: u64) -> Result<()> {
    if nt::is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Decomposition of `p` in a quadratic field, from the Kronecker symbol of
/// its discriminant.
pub fn splitting_in_quadratic(p: u64, k: &FieldDescriptor) -> Result<Decomposition> {
    let disc = require_quadratic(k)?;
    Ok(Decomposition::from_kronecker(nt::kronecker_symbol(disc, p)?))
}

/// Ramification index and residue degree of `p` in `Q(zeta_m)`.
pub fn cyclotomic_residue_degree(p: u64, m: u64) -> Result<(u64, u64)> {
    require_prime(p)?;
    if m == 0 {
        return Err(Error::Unsupported("conductor must be positive".into()));
    }
    let alpha = nt::valuation_u64(m, p);
    let prime_to_p = m / p.pow(alpha);
    let e = totient(p.pow(alpha));
    let f = nt::mult_order(p as i64, prime_to_p)?;
    Ok((e, f))
}

/// Whether `K ⊆ Q(zeta_m)`, i.e. the conductor `|disc K|` divides `m`.
pub fn contains_quadratic(m: u64, k: &FieldDescriptor) -> Result<bool> {
    let disc = require_quadratic(k)?;
    Ok(m % disc.unsigned_abs() == 0)
}

/// `[K(zeta_j) : K]` for a quadratic field `K`.
pub fn relative_degree_adjoin_zeta(k: &FieldDescriptor, j: u64) -> Result<u64> {
    if j == 0 {
        return Err(Error::Unsupported("root of unity order must be positive".into()));
    }
    let conductor = normalize_conductor(j);
    let phi = totient(conductor);
    Ok(if contains_quadratic(conductor, k)? {
        phi / 2
    } else {
        phi
    })
}

/// The compositum `L = K(zeta_j)` as the fixed field of a subgroup of
/// `(Z/N)^x`, `N = lcm(j', |disc K|)`.
struct AbelianCompositum {
    modulus: u64,
    units: Vec<u64>,
    fixing: BTreeSet<u64>,
}

impl AbelianCompositum {
    fn new(disc: i64, j: u64) -> Self {
        let conductor = normalize_conductor(j);
        let modulus = lcm(conductor, disc.unsigned_abs());
        let units: Vec<u64> = (1..=modulus).filter(|&x| gcd(x, modulus) == 1).collect();
        // x fixes zeta_j iff x = 1 mod j'; x fixes sqrt(d) iff chi_disc(x) = 1
        let fixing = units
            .iter()
            .copied()
            .filter(|&x| x % conductor == 1 % conductor && kronecker(disc, x as i64) == 1)
            .collect();
        AbelianCompositum {
            modulus,
            units,
            fixing,
        }
    }

    fn degree(&self) -> u64 {
        (self.units.len() / self.fixing.len()) as u64
    }

    /// `|S H| / |H|` for a subgroup `S` given by its elements.
    fn image_order(&self, subgroup: &BTreeSet<u64>) -> u64 {
        let mut prod = BTreeSet::new();
        for &s in subgroup {
            for &h in &self.fixing {
                prod.insert(mul_mod(s, h, self.modulus));
            }
        }
        (prod.len() / self.fixing.len()) as u64
    }

    /// `(e, f)` of `p` in `L` over `Q`.
    fn ramification(&self, p: u64) -> (u64, u64) {
        let n = self.modulus;
        let alpha = nt::valuation_u64(n, p);
        let p_part = p.pow(alpha);
        let prime_to_p = n / p_part;
        let inertia: BTreeSet<u64> = self
            .units
            .iter()
            .copied()
            .filter(|&x| x % prime_to_p == 1 % prime_to_p)
            .collect();
        // Frobenius: p mod the prime-to-p part, 1 mod the p part.
        let frob = self
            .units
            .iter()
            .copied()
            .find(|&x| x % prime_to_p == p % prime_to_p && x % p_part == 1 % p_part)
            .expect("CRT solution exists");
        let mut decomposition = BTreeSet::new();
        let mut power = 1 % n;
        loop {
            for &i in &inertia {
                decomposition.insert(mul_mod(power, i, n));
            }
            power = mul_mod(power, frob, n);
            if power == 1 % n {
                break;
            }
        }
        let e = self.image_order(&inertia);
        let ef = self.image_order(&decomposition);
        (e, ef / e)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Local degrees `[L_P : K_p]` of `L = K(zeta_j)` over a quadratic `K`, one
/// entry per prime `P` of `L` above `p`.
pub fn local_degrees_over(k: &FieldDescriptor, j: u64, p: u64) -> Result<Vec<u64>> {
    let disc = require_quadratic(k)?;
    require_prime(p)?;
    let rel = relative_degree_adjoin_zeta(k, j)?;
    let dec_k = splitting_in_quadratic(p, k)?;
    if rel == 1 {
        return Ok(vec![1; dec_k.place_count() as usize]);
    }
    let l = AbelianCompositum::new(disc, j);
    debug_assert_eq!(l.degree(), 2 * rel);
    let (e_l, f_l) = l.ramification(p);
    let ef_k = (dec_k.ramification_index() * dec_k.residue_degree()) as u64;
    let local = e_l * f_l / ef_k;
    let count = l.degree() / (e_l * f_l);
    Ok(vec![local; count as usize])
}

/// Dirichlet rank and order of the roots of unity of `O_F^x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitGroupShape {
    pub rank: u64,
    pub torsion_order: u64,
}

impl fmt::Display for UnitGroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rank {
            0 => write!(f, "Z/{}", self.torsion_order),
            1 => write!(f, "Z x Z/{}", self.torsion_order),
            r => write!(f, "Z^{r} x Z/{}", self.torsion_order),
        }
    }
}

/// Unit group of an imaginary quadratic or cyclotomic field.
pub fn unit_group_shape(field: &FieldDescriptor) -> Result<UnitGroupShape> {
    let (r1, r2) = field.signature();
    let torsion_order = match *field {
        FieldDescriptor::ImagQuadratic(-1) => 4,
        FieldDescriptor::ImagQuadratic(-3) => 6,
        FieldDescriptor::ImagQuadratic(_) => 2,
        FieldDescriptor::Cyclotomic(m) => lcm(2, m),
        FieldDescriptor::Rational | FieldDescriptor::RealQuadratic(_) => {
            return Err(Error::Unsupported(format!(
                "unit group of {field}: fundamental units are not computed"
            )))
        }
    };
    Ok(UnitGroupShape {
        rank: r1 + r2 - 1,
        torsion_order,
    })
}

/// Order of the torsion subgroup. The torsion part of `Z^rank x Z/n` is
/// cyclic, so every finite subgroup of the unit group is cyclic of order
/// dividing this.
pub fn torsion_subgroup_order(shape: &UnitGroupShape) -> u64 {
    shape.torsion_order
}

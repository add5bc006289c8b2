//! q-Weil numbers and the endomorphism algebras they determine.
//!
//! Two shapes are supported: roots of rational polynomials of degree at
//! most two, and `sqrt(q) * zeta_m` with `q` an even power of `p`. For
//! both, the local invariants of the endomorphism algebra at every place of
//! the center `K = Q(pi)` are computed exactly:
//!
//! * at a place `v` above `p`: `w_v(pi) / w_v(q) * [K_v : Q_p]` mod 1,
//! * at a real place: 1/2,
//! * everywhere else: 0.
//!
//! The index `d` is the least common denominator of the invariants and the
//! dimension of the corresponding simple abelian variety is `d * [K:Q] / 2`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::nt::{self, totient};
use crate::arith::{hensel_root_valuations, weil_functional_equation, IntPoly, Rat};
use crate::error::{Error, Result};
use crate::fields::{cyclotomic_residue_degree, normalize_conductor, FieldDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "m")]
pub enum WeilForm {
    /// Root of a rational polynomial of degree 1 or 2.
    Quadratic,
    /// `p^(a/2) * zeta_m`.
    Zeta(u64),
}

/// A q-Weil number, identified by its minimal polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilNumber {
    pub p: u64,
    pub a: u32,
    #[serde(with = "crate::arith::bigint_str")]
    pub q: BigInt,
    pub h: IntPoly,
    pub form: WeilForm,
}

fn split_prime_power(q: &BigInt) -> Result<(u64, u32)> {
    nt::prime_power(q).ok_or_else(|| Error::NotPrimePower(q.to_string()))
}

impl WeilNumber {
    /// Validates `h` as the minimal polynomial of a q-Weil number of
    /// degree one or two.
    pub fn from_poly(h: IntPoly, q: BigInt) -> Result<Self> {
        let (p, a) = split_prime_power(&q)?;
        if !h.is_monic() {
            return Err(Error::NotMonic(h.to_string()));
        }
        match h.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(1) => {
                if !weil_functional_equation(&h, &q)? {
                    return Err(Error::NotWeil(format!("root of {h} does not have absolute value sqrt({q})")));
                }
            }
            Some(2) => {
                // the modulus checks come first: a reducible h whose roots
                // are not Weil numbers is a negative answer, not bad input
                if !weil_functional_equation(&h, &q)? {
                    return Err(Error::NotWeil(format!("roots of {h} are not paired by x -> {q}/x")));
                }
                let disc = h.quadratic_discriminant().expect("quadratic");
                // either complex conjugate roots, or the real pair +-sqrt(q)
                let real_pair = h.coeff(1).is_zero() && h.coeff(0) == -&q;
                if !disc.is_negative() && !real_pair {
                    return Err(Error::NotWeil(format!(
                        "real roots of wrong modulus: {h} has discriminant {disc} > 0"
                    )));
                }
                if h.is_irreducible_low_degree() != Some(true) {
                    return Err(Error::Reducible(h.to_string()));
                }
            }
            Some(n) => {
                return Err(Error::Unsupported(format!(
                    "degree {n} polynomials are only supported in the zeta form"
                )))
            }
        }
        Ok(WeilNumber {
            p,
            a,
            q,
            h,
            form: WeilForm::Quadratic,
        })
    }

    pub fn degree(&self) -> usize {
        self.h.degree().expect("nonconstant")
    }

    /// `f_X = h^d`, the characteristic polynomial of Frobenius on the
    /// simple abelian variety in this isogeny class.
    pub fn characteristic_polynomial(&self) -> Result<IntPoly> {
        let d = division_index(&local_invariants(self)?);
        Ok(self.h.pow(d as u32))
    }
}

impl fmt::Display for WeilNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.form {
            WeilForm::Quadratic => write!(f, "root of {} (q = {})", self.h, self.q),
            WeilForm::Zeta(m) => {
                write!(f, "{}*zeta_{} (q = {})", BigInt::from(self.p).pow(self.a / 2), m, self.q)
            }
        }
    }
}

/// The root of `t^2 + b t + q`.
pub fn make_weil_quadratic(b: i64, q: &BigInt) -> Result<WeilNumber> {
    let b_big = BigInt::from(b);
    let four_q = BigInt::from(4) * q;
    let b2 = &b_big * &b_big;
    if b2 > four_q {
        return Err(Error::NotWeil(format!(
            "real roots of wrong modulus: b^2 = {b2} > 4q = {four_q}"
        )));
    }
    let h = IntPoly::new(vec![q.clone(), b_big, BigInt::from(1)]);
    if b2 == four_q {
        return Err(Error::Reducible(h.to_string()));
    }
    WeilNumber::from_poly(h, q.clone())
}

/// `pi = p^(a/2) * zeta_m`, a `p^a`-Weil number for even `a`.
pub fn make_weil_zeta(m: u64, p: u64, a: u32) -> Result<WeilNumber> {
    if m == 0 {
        return Err(Error::Unsupported("zeta order must be positive".into()));
    }
    if !nt::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if a == 0 || a % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "the zeta form needs an even positive exponent, got a = {a}"
        )));
    }
    let root_q = BigInt::from(p).pow(a / 2);
    let h = IntPoly::cyclotomic(m).scale_roots(&root_q);
    Ok(WeilNumber {
        p,
        a,
        q: BigInt::from(p).pow(a),
        h,
        form: WeilForm::Zeta(m),
    })
}

/// The center `Q(pi)` of the endomorphism algebra.
pub fn center_field(w: &WeilNumber) -> Result<FieldDescriptor> {
    match (w.form, w.degree()) {
        (WeilForm::Zeta(m), _) => FieldDescriptor::cyclotomic(m),
        (WeilForm::Quadratic, 1) => Ok(FieldDescriptor::Rational),
        (WeilForm::Quadratic, _) => {
            FieldDescriptor::quadratic(crate::arith::hensel::quadratic_field_kernel(&w.h)?)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index")]
pub enum Place {
    /// The `index`-th place above `p`.
    FiniteAboveP(u32),
    /// Stands for every finite place not above `p`.
    FiniteAwayFromP,
    RealPlace(u32),
    ComplexPlace(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceInvariant {
    pub place: Place,
    /// Reduced to `[0, 1)`.
    pub value: Rat,
    /// `[K_v : Q_p]` above `p`; 1 or 2 at infinite places.
    pub local_degree: u32,
}

impl fmt::Display for PlaceInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let place = match self.place {
            Place::FiniteAboveP(i) => format!("v{i} | p"),
            Place::FiniteAwayFromP => "v not above p".to_string(),
            Place::RealPlace(i) => format!("real {i}"),
            Place::ComplexPlace(i) => format!("complex {i}"),
        };
        write!(f, "{place}: {} (local degree {})", self.value, self.local_degree)
    }
}

fn above_p(index: u32, ratio: &Rat, local_degree: u32) -> PlaceInvariant {
    PlaceInvariant {
        place: Place::FiniteAboveP(index),
        value: (ratio * &Rat::from_int(local_degree)).frac(),
        local_degree,
    }
}

fn infinite_places(center: &FieldDescriptor) -> Vec<PlaceInvariant> {
    let (r1, r2) = center.signature();
    let real = (0..r1).map(|i| PlaceInvariant {
        place: Place::RealPlace(i as u32),
        value: Rat::half(),
        local_degree: 1,
    });
    let complex = (0..r2).map(|i| PlaceInvariant {
        place: Place::ComplexPlace(i as u32),
        value: Rat::zero(),
        local_degree: 2,
    });
    real.chain(complex).collect()
}

/// Local invariants of the endomorphism algebra at the places above `p`,
/// at the infinite places, and a single entry standing for all remaining
/// finite places.
pub fn local_invariants(w: &WeilNumber) -> Result<Vec<PlaceInvariant>> {
    let center = center_field(w)?;
    // w(pi) / w(q) with w(p) = 1
    let ratio = |valuation: &Rat| valuation * &Rat::new(1, w.a);
    let mut out = Vec::new();
    match center {
        FieldDescriptor::Rational => {
            // pi = +-sqrt(q): w(pi) / w(q) = 1/2 at the unique place above p
            out.push(above_p(0, &Rat::half(), 1));
        }
        FieldDescriptor::ImagQuadratic(_) | FieldDescriptor::RealQuadratic(_) => {
            if w.form != WeilForm::Quadratic {
                // zeta forms with a quadratic center: every conjugate has w(pi) = a/2
                return Err(Error::Unsupported(format!("unexpected center {center} for {w}")));
            }
            for (i, place) in hensel_root_valuations(&w.h, w.p)?.iter().enumerate() {
                out.push(above_p(i as u32, &ratio(&place.valuation), place.local_degree));
            }
        }
        FieldDescriptor::Cyclotomic(m) => {
            let m_norm = normalize_conductor(m);
            let (e, f) = cyclotomic_residue_degree(w.p, m_norm)?;
            let count = totient(m_norm) / (e * f);
            // zeta is a unit, so w(pi) = w(sqrt q) = w(q) / 2 everywhere
            for i in 0..count {
                out.push(above_p(i as u32, &Rat::half(), (e * f) as u32));
            }
        }
    }
    out.push(PlaceInvariant {
        place: Place::FiniteAwayFromP,
        value: Rat::zero(),
        local_degree: 1,
    });
    out.extend(infinite_places(&center));
    Ok(out)
}

/// Least common denominator of the invariants.
pub fn division_index(invariants: &[PlaceInvariant]) -> u64 {
    invariants.iter().fold(1u64, |acc, inv| {
        let den = inv
            .value
            .denom()
            .to_u64()
            .expect("invariant denominators are local degrees");
        acc.lcm(&den)
    })
}

/// `g = d e / 2`.
pub fn dimension(w: &WeilNumber) -> Result<u64> {
    let e = center_field(w)?.degree();
    let d = division_index(&local_invariants(w)?);
    if (d * e) % 2 == 1 {
        return Err(Error::Unsupported(format!("d * e = {} is odd for {w}", d * e)));
    }
    Ok(d * e / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlbertType {
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
}

impl fmt::Display for AlbertType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AlbertType::TypeI => "I",
            AlbertType::TypeII => "II",
            AlbertType::TypeIII => "III",
            AlbertType::TypeIV => "IV",
        };
        write!(f, "Type {s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EndoShape {
    /// A CM field of degree `2g`; `d = 1`.
    CMField,
    /// A division algebra of degree `g` over an imaginary quadratic field.
    DivisionAlgebraOverImagQuadratic,
}

impl fmt::Display for EndoShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndoShape::CMField => write!(f, "CM field"),
            EndoShape::DivisionAlgebraOverImagQuadratic => {
                write!(f, "central division algebra over an imaginary quadratic field")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoAlgebra {
    pub center: FieldDescriptor,
    pub e: u64,
    pub d: u64,
    pub g: u64,
    pub invariants: Vec<PlaceInvariant>,
    pub albert_type: AlbertType,
    pub shape: EndoShape,
}

/// Albert type of a division algebra with positive involution, from its
/// center and local invariants.
pub fn albert_type_of(center: &FieldDescriptor, invariants: &[PlaceInvariant]) -> AlbertType {
    if center.is_totally_imaginary() {
        return AlbertType::TypeIV;
    }
    let d = division_index(invariants);
    if d == 1 {
        return AlbertType::TypeI;
    }
    let real_ramified = invariants
        .iter()
        .filter(|i| matches!(i.place, Place::RealPlace(_)))
        .all(|i| i.value == Rat::half());
    if real_ramified {
        AlbertType::TypeIII
    } else {
        AlbertType::TypeII
    }
}

/// Assembles the endomorphism algebra of a simple abelian variety of odd
/// prime dimension and places it in one of the two possible shapes.
pub fn classify_endo(w: &WeilNumber) -> Result<EndoAlgebra> {
    let center = center_field(w)?;
    if !center.is_totally_imaginary() {
        return Err(Error::Unsupported(format!(
            "center {center} is not totally imaginary; real Weil numbers give g = 1 or Type III"
        )));
    }
    let invariants = local_invariants(w)?;
    let e = center.degree();
    let d = division_index(&invariants);
    let g = dimension(w)?;
    if !nt::is_odd_prime(g) {
        return Err(Error::Unsupported(format!(
            "dimension {g} is not an odd prime; the two-type dichotomy is not asserted"
        )));
    }
    let albert_type = albert_type_of(&center, &invariants);
    let shape = if d == 1 && e == 2 * g {
        EndoShape::CMField
    } else if e == 2 && d == g && matches!(center, FieldDescriptor::ImagQuadratic(_)) {
        EndoShape::DivisionAlgebraOverImagQuadratic
    } else {
        return Err(Error::DichotomyViolation(format!(
            "{w}: center {center}, e = {e}, d = {d}, g = {g}"
        )));
    };
    if !albert_table1_check(albert_type, e / 2, e, d, g, true) {
        return Err(Error::DichotomyViolation(format!(
            "{w}: Type IV numerical restriction e0 d | g fails for e = {e}, d = {d}, g = {g}"
        )));
    }
    Ok(EndoAlgebra {
        center,
        e,
        d,
        g,
        invariants,
        albert_type,
        shape,
    })
}

/// The numerical restriction on `(e0, e, d)` for each Albert type, in
/// characteristic zero or `p`.
pub fn albert_table1_check(ty: AlbertType, e0: u64, e: u64, d: u64, g: u64, char_p: bool) -> bool {
    let divides = |a: u64| a != 0 && g % a == 0;
    match ty {
        AlbertType::TypeI => divides(e),
        AlbertType::TypeII => divides(2 * e),
        AlbertType::TypeIII if char_p => divides(e),
        AlbertType::TypeIII => divides(2 * e),
        AlbertType::TypeIV if char_p => divides(e0 * d),
        AlbertType::TypeIV => divides(e0 * d * d),
    }
}

/// One candidate center degree `e` for a Type III endomorphism algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeIiiCase {
    pub e: u64,
    pub passes_albert_check: bool,
    pub excluded_because: String,
}

/// Why no simple abelian variety of odd prime dimension `g` over a finite
/// field has a Type III endomorphism algebra. The Albert restrictions in characteristic
/// `p` leaves `e in {1, g}`; `e = 1` gives `dim D = 4 < 2g`, and `e = g`
/// would need a totally real `Q(pi)` of degree `g > 2`, impossible when
/// `|pi| = sqrt(q)`.
pub fn type_iii_exclusion(g: u64) -> Result<Vec<TypeIiiCase>> {
    if !nt::is_odd_prime(g) {
        return Err(Error::NotOddPrime(g));
    }
    Ok((1..=g)
        .filter(|&e| albert_table1_check(AlbertType::TypeIII, e, e, 2, g, true))
        .map(|e| {
            let excluded_because = if 4 * e < 2 * g {
                format!("dim_Q D = 4e = {} < 2g = {}", 4 * e, 2 * g)
            } else {
                // a totally real Weil number is +-sqrt(q), of degree <= 2
                format!("totally real Q(pi) has degree <= 2 < e = {e}")
            };
            TypeIiiCase {
                e,
                passes_albert_check: true,
                excluded_because,
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutativityFlags {
    pub is_commutative: bool,
    pub is_supersingular_rational: bool,
}

pub fn commutativity_flags(w: &WeilNumber) -> Result<CommutativityFlags> {
    Ok(CommutativityFlags {
        is_commutative: division_index(&local_invariants(w)?) == 1,
        is_supersingular_rational: w.degree() == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn values(w: &WeilNumber) -> Vec<Rat> {
        local_invariants(w)
            .unwrap()
            .into_iter()
            .filter(|i| matches!(i.place, Place::FiniteAboveP(_)))
            .map(|i| i.value)
            .collect()
    }

    #[test]
    fn quadratic_constructor() {
        assert!(make_weil_quadratic(5, &q(125)).is_ok());
        assert!(make_weil_quadratic(44, &q(1331)).is_ok());
        assert!(matches!(make_weil_quadratic(30, &q(125)), Err(Error::NotWeil(_))));
        // b^2 = 4q: (t + 2)^2 for q = 4
        assert!(matches!(make_weil_quadratic(4, &q(4)), Err(Error::Reducible(_))));
        assert!(matches!(make_weil_quadratic(1, &q(12)), Err(Error::NotPrimePower(_))));
    }

    #[test]
    fn from_poly_shapes() {
        assert!(WeilNumber::from_poly(IntPoly::from_i64s(&[11, 1]), q(121)).is_ok());
        assert!(WeilNumber::from_poly(IntPoly::from_i64s(&[-125, 0, 1]), q(125)).is_ok());
        assert!(WeilNumber::from_poly(IntPoly::from_i64s(&[-10, 1]), q(121)).is_err());
        assert!(WeilNumber::from_poly(IntPoly::from_i64s(&[125, 30, 1]), q(125)).is_err());
        assert!(WeilNumber::from_poly(IntPoly::from_i64s(&[-121, 0, 1]), q(121)).is_err());
        assert!(WeilNumber::from_poly(IntPoly::from_i64s(&[125, 5, 2]), q(125)).is_err());
    }

    #[test]
    fn zeta_constructor() {
        let w = make_weil_zeta(22, 11, 2).unwrap();
        assert_eq!(w.degree(), 10);
        assert_eq!(w.q, q(121));
        assert!(weil_functional_equation(&w.h, &w.q).unwrap());
        assert_eq!(make_weil_zeta(14, 7, 2).unwrap().degree(), 6);
        assert_eq!(make_weil_zeta(18, 3, 2).unwrap().degree(), 6);
        assert!(make_weil_zeta(14, 7, 3).is_err());
        // 7 zeta_14 is a root of 7^6 Phi_14(t / 7)
        let h = make_weil_zeta(14, 7, 2).unwrap().h;
        assert_eq!(h.coeff(0), q(7i64.pow(6)));
        assert_eq!(h.coeff(5), q(-7));
    }

    #[test]
    fn centers() {
        let c = |w: WeilNumber| center_field(&w).unwrap();
        assert_eq!(c(make_weil_quadratic(5, &q(125)).unwrap()), FieldDescriptor::ImagQuadratic(-19));
        assert_eq!(c(make_weil_quadratic(19, &q(6859)).unwrap()), FieldDescriptor::ImagQuadratic(-3));
        assert_eq!(c(make_weil_quadratic(10, &q(125)).unwrap()), FieldDescriptor::ImagQuadratic(-1));
        assert_eq!(c(make_weil_zeta(22, 11, 2).unwrap()), FieldDescriptor::Cyclotomic(11));
    }

    #[test]
    fn invariant_examples() {
        let w = make_weil_quadratic(5, &q(125)).unwrap();
        assert_eq!(values(&w), vec![Rat::new(2, 3), Rat::new(1, 3)]);
        assert_eq!(division_index(&local_invariants(&w).unwrap()), 3);
        assert_eq!(dimension(&w).unwrap(), 3);

        let w = make_weil_zeta(22, 11, 2).unwrap();
        assert!(local_invariants(&w).unwrap().iter().all(|i| i.value.is_zero()));
        assert_eq!(dimension(&w).unwrap(), 5);

        // pi = -2 over F_4: D_{2, infinity}
        let w = WeilNumber::from_poly(IntPoly::linear(-2), q(4)).unwrap();
        let invs = local_invariants(&w).unwrap();
        assert_eq!(values(&w), vec![Rat::half()]);
        assert!(invs.iter().any(|i| i.place == Place::RealPlace(0) && i.value == Rat::half()));
        assert_eq!(division_index(&invs), 2);
        assert_eq!(dimension(&w).unwrap(), 1);
    }

    #[test]
    fn alt_family_dimension() {
        let g = 7u32;
        let b = 7i64.pow((g - 1) / 2);
        let w = make_weil_quadratic(b, &q(7i64.pow(g))).unwrap();
        assert_eq!(values(&w), vec![Rat::new(4, 7), Rat::new(3, 7)]);
        assert_eq!(dimension(&w).unwrap(), 7);
    }

    #[test]
    fn classification_examples() {
        let e = classify_endo(&make_weil_quadratic(10, &q(125)).unwrap()).unwrap();
        assert_eq!(e.shape, EndoShape::DivisionAlgebraOverImagQuadratic);
        assert_eq!(e.center, FieldDescriptor::ImagQuadratic(-1));
        assert_eq!(e.d, 3);

        let e = classify_endo(&make_weil_zeta(14, 7, 2).unwrap()).unwrap();
        assert_eq!((e.shape, e.e, e.g), (EndoShape::CMField, 6, 3));

        let e = classify_endo(&make_weil_zeta(22, 11, 2).unwrap()).unwrap();
        assert_eq!((e.shape, e.e, e.g), (EndoShape::CMField, 10, 5));
        assert_eq!(e.albert_type, AlbertType::TypeIV);

        // ordinary elliptic curve: g = 1
        assert!(matches!(
            classify_endo(&make_weil_quadratic(1, &q(125)).unwrap()),
            Err(Error::Unsupported(_))
        ));
        // real Weil numbers are refused
        assert!(classify_endo(&WeilNumber::from_poly(IntPoly::linear(11), q(121)).unwrap()).is_err());
    }

    #[test]
    fn albert_restrictions() {
        assert!(albert_table1_check(AlbertType::TypeIV, 1, 2, 3, 3, true));
        assert!(!albert_table1_check(AlbertType::TypeIV, 1, 2, 3, 3, false));
        assert!(albert_table1_check(AlbertType::TypeI, 1, 1, 1, 3, false));
        assert!(albert_table1_check(AlbertType::TypeIII, 3, 3, 2, 3, true));
        assert!(!albert_table1_check(AlbertType::TypeIII, 3, 3, 2, 3, false));
        assert!(!albert_table1_check(AlbertType::TypeII, 3, 3, 2, 3, true));
    }

    #[test]
    fn type_iii_cases() {
        let cases = type_iii_exclusion(3).unwrap();
        assert_eq!(cases.iter().map(|c| c.e).collect::<Vec<_>>(), vec![1, 3]);
        assert!(cases[0].excluded_because.contains("dim_Q D"));
        assert!(cases[1].excluded_because.contains("degree <= 2"));
        assert!(type_iii_exclusion(4).is_err());
    }

    #[test]
    fn flags() {
        let f = commutativity_flags(&make_weil_zeta(14, 7, 2).unwrap()).unwrap();
        assert_eq!((f.is_commutative, f.is_supersingular_rational), (true, false));
        let f = commutativity_flags(&make_weil_quadratic(5, &q(125)).unwrap()).unwrap();
        assert_eq!((f.is_commutative, f.is_supersingular_rational), (false, false));
        let f = commutativity_flags(&WeilNumber::from_poly(IntPoly::linear(-11), q(121)).unwrap()).unwrap();
        assert_eq!((f.is_commutative, f.is_supersingular_rational), (false, true));
    }

    #[test]
    fn characteristic_polynomial_is_power() {
        let w = make_weil_quadratic(5, &q(125)).unwrap();
        let f = w.characteristic_polynomial().unwrap();
        assert_eq!(f.degree(), Some(6));
        assert_eq!(f, w.h.pow(3));
    }
}

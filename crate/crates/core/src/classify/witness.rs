//! Replayable certificates for the constructions realizing each group.
//!
//! Every arithmetic claim is recomputed from the Weil number. The existence
//! results the constructions rest on (maximal orders occurring as
//! endomorphism rings, averaging a polarization, base change to the
//! algebraic closure) are recorded as `AXIOM` steps.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::embed::{
    cm_automorphism_group, cyclic_embeds_in_algebra, maximal_even_subgroup,
    DivisionAlgebraDescriptor,
};
use super::{classify, classify_closed, closed_field_types, ClassificationRow};
use crate::amitsur::GroupId;
use crate::arith::nt;
use crate::arith::{IntPoly, Rat};
use crate::error::{Error, Result};
use crate::fields::{unit_group_shape, FieldDescriptor};
use crate::weil::{
    classify_endo, make_weil_zeta, EndoAlgebra, EndoShape, Place, WeilNumber,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Axiom,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Axiom => "AXIOM",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub name: String,
    pub claim: String,
    pub verdict: Verdict,
    pub evidence: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub witness_id: String,
    pub steps: Vec<Step>,
    /// No step failed.
    pub overall: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessId {
    /// Constructions 1 to 6 over finite fields.
    Main(u8),
    Alt3,
    Alt4,
    Alt5,
    /// Base change of construction `n` to the algebraic closure.
    Closed(u8),
}

impl WitnessId {
    /// Every witness, in report order.
    pub fn all() -> Vec<WitnessId> {
        let mut ids: Vec<WitnessId> = (1..=6).map(WitnessId::Main).collect();
        ids.extend([WitnessId::Alt3, WitnessId::Alt4, WitnessId::Alt5]);
        ids.extend((1..=5).map(WitnessId::Closed));
        ids
    }

    /// Whether the witness is a family in `g`.
    pub fn takes_g(self) -> bool {
        matches!(self, WitnessId::Main(6) | WitnessId::Alt3)
    }

    pub fn default_g(self) -> u64 {
        match self {
            WitnessId::Main(6) => 5,
            WitnessId::Alt3 => 7,
            _ => 3,
        }
    }

    /// The side condition on `g` for the families.
    pub fn accepts_g(self, g: u64) -> bool {
        match self {
            WitnessId::Main(6) => g >= 5 && nt::is_prime(2 * g + 1),
            WitnessId::Alt3 => g >= 5 && !nt::is_prime(2 * g + 1),
            _ => g == 3,
        }
    }
}

impl fmt::Display for WitnessId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessId::Main(n) => write!(f, "{n}"),
            WitnessId::Alt3 => write!(f, "alt3"),
            WitnessId::Alt4 => write!(f, "alt4"),
            WitnessId::Alt5 => write!(f, "alt5"),
            WitnessId::Closed(n) => write!(f, "closed{n}"),
        }
    }
}

impl FromStr for WitnessId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownWitness(s.to_string());
        let id = match s {
            "alt3" => WitnessId::Alt3,
            "alt4" => WitnessId::Alt4,
            "alt5" => WitnessId::Alt5,
            _ => {
                if let Some(n) = s.strip_prefix("closed") {
                    let n: u8 = n.parse().map_err(|_| unknown())?;
                    if !(1..=5).contains(&n) {
                        return Err(unknown());
                    }
                    WitnessId::Closed(n)
                } else {
                    let n: u8 = s.parse().map_err(|_| unknown())?;
                    if !(1..=6).contains(&n) {
                        return Err(unknown());
                    }
                    WitnessId::Main(n)
                }
            }
        };
        Ok(id)
    }
}

enum WeilInput {
    /// Root of `t^2 + b t + q`.
    Quadratic { b: BigInt, q: BigInt },
    /// `p^(a/2) zeta_m`.
    Zeta { m: u64, p: u64, a: u32 },
}

impl fmt::Display for WeilInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeilInput::Quadratic { b, q } => write!(f, "root of t^2 + {b}t + {q}"),
            WeilInput::Zeta { m, p, a: 2 } => write!(f, "{p} * zeta_{m}"),
            WeilInput::Zeta { m, p, a } => write!(f, "{p}^({a}/2) * zeta_{m}"),
        }
    }
}

struct WitnessData {
    input: WeilInput,
    center: FieldDescriptor,
    d: u64,
    g: u64,
    /// Order of the cyclic group realized.
    group: u64,
    /// Generator of the group inside the endomorphism algebra.
    generator: &'static str,
    /// Ring of integers the maximal order is taken to contain.
    ring: &'static str,
    /// Set when the step template is instantiated by analogy with
    /// construction 3 rather than spelled out.
    analogy_note: Option<&'static str>,
}

fn quadratic(b: u64, q: u64) -> WeilInput {
    WeilInput::Quadratic {
        b: BigInt::from(b),
        q: BigInt::from(q),
    }
}

fn witness_data(id: WitnessId, g: u64) -> WitnessData {
    let imag = FieldDescriptor::ImagQuadratic;
    match id {
        WitnessId::Main(1) | WitnessId::Closed(1) => WitnessData {
            input: quadratic(5, 125),
            center: imag(-19),
            d: 3,
            g: 3,
            group: 2,
            generator: "-1",
            ring: "Z[(1 + sqrt(-19))/2]",
            analogy_note: None,
        },
        WitnessId::Main(2) | WitnessId::Closed(2) => WitnessData {
            input: quadratic(10, 125),
            center: imag(-1),
            d: 3,
            g: 3,
            group: 4,
            generator: "sqrt(-1)",
            ring: "Z[sqrt(-1)]",
            analogy_note: None,
        },
        WitnessId::Main(3) | WitnessId::Closed(3) => WitnessData {
            input: quadratic(19, 6859),
            center: imag(-3),
            d: 3,
            g: 3,
            group: 6,
            generator: "(1 + sqrt(-3))/2",
            ring: "Z[(1 + sqrt(-3))/2]",
            analogy_note: None,
        },
        WitnessId::Main(4) | WitnessId::Closed(4) => WitnessData {
            input: quadratic(44, 1331),
            center: imag(-7),
            d: 3,
            g: 3,
            group: 14,
            generator: "zeta_14",
            ring: "Z[zeta_14]",
            analogy_note: Some("splitting of Q(zeta_14)/Q(sqrt(-7)) tested at the places above 11, the only ramified primes"),
        },
        WitnessId::Main(5) | WitnessId::Closed(5) => WitnessData {
            input: quadratic(7, 343),
            center: imag(-3),
            d: 3,
            g: 3,
            group: 18,
            generator: "zeta_18",
            ring: "Z[zeta_18]",
            analogy_note: Some("splitting of Q(zeta_18)/Q(sqrt(-3)) tested at the places above 7, the only ramified primes"),
        },
        WitnessId::Main(6) => WitnessData {
            input: WeilInput::Zeta {
                m: 4 * g + 2,
                p: 2 * g + 1,
                a: 2,
            },
            center: FieldDescriptor::Cyclotomic(2 * g + 1),
            d: 1,
            g,
            group: 4 * g + 2,
            generator: "zeta_(4g+2)",
            ring: "Z[zeta_(4g+2)]",
            analogy_note: None,
        },
        WitnessId::Alt3 => {
            let half = u32::try_from((g - 1) / 2).expect("g fits in u32");
            WitnessData {
                input: WeilInput::Quadratic {
                    b: BigInt::from(7).pow(half),
                    q: BigInt::from(7).pow(half * 2 + 1),
                },
                center: imag(-3),
                d: g,
                g,
                group: 6,
                generator: "(1 + sqrt(-3))/2",
                ring: "Z[(1 + sqrt(-3))/2]",
                analogy_note: None,
            }
        }
        WitnessId::Alt4 => WitnessData {
            input: WeilInput::Zeta { m: 14, p: 7, a: 2 },
            center: FieldDescriptor::Cyclotomic(7),
            d: 1,
            g: 3,
            group: 14,
            generator: "zeta_14",
            ring: "Z[zeta_14]",
            analogy_note: None,
        },
        WitnessId::Alt5 => WitnessData {
            input: WeilInput::Zeta { m: 18, p: 3, a: 2 },
            center: FieldDescriptor::Cyclotomic(9),
            d: 1,
            g: 3,
            group: 18,
            generator: "zeta_18",
            ring: "Z[zeta_18]",
            analogy_note: Some("steps instantiated from the template of 7 * zeta_14"),
        },
        WitnessId::Main(_) | WitnessId::Closed(_) => unreachable!("ids are validated on parse"),
    }
}

struct Builder {
    steps: Vec<Step>,
}

impl Builder {
    fn push(&mut self, name: &str, claim: String, verdict: Verdict, evidence: String) {
        self.steps.push(Step {
            name: name.to_string(),
            claim,
            verdict,
            evidence,
        });
    }

    fn check(&mut self, name: &str, claim: String, ok: bool, evidence: String) -> bool {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        self.push(name, claim, verdict, evidence);
        ok
    }

    fn axiom(&mut self, name: &str, claim: String, evidence: &str) {
        self.push(name, claim, Verdict::Axiom, evidence.to_string());
    }

    /// Records an error from the pipeline as a failed step.
    fn fail_on<T>(&mut self, name: &str, claim: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.push(name, claim.to_string(), Verdict::Fail, e.to_string());
                None
            }
        }
    }

    fn finish(self, id: WitnessId) -> WitnessCertificate {
        let overall = self.steps.iter().all(|s| s.verdict != Verdict::Fail);
        WitnessCertificate {
            witness_id: id.to_string(),
            steps: self.steps,
            overall,
        }
    }
}

fn build_weil(input: &WeilInput) -> Result<WeilNumber> {
    match input {
        WeilInput::Quadratic { b, q } => WeilNumber::from_poly(
            IntPoly::new(vec![q.clone(), b.clone(), BigInt::from(1)]),
            q.clone(),
        ),
        WeilInput::Zeta { m, p, a } => make_weil_zeta(*m, *p, *a),
    }
}

fn format_invariants(endo: &EndoAlgebra) -> String {
    let parts: Vec<String> = endo.invariants.iter().map(ToString::to_string).collect();
    parts.join("; ")
}

/// Replays the construction behind a witness. `g` selects the member of
/// the families `6` and `alt3` and must be omitted for the others.
pub fn verify_witness(id: WitnessId, g: Option<u64>) -> Result<WitnessCertificate> {
    let g = match g {
        None => id.default_g(),
        Some(g) if id.takes_g() => {
            if !nt::is_odd_prime(g) {
                return Err(Error::NotOddPrime(g));
            }
            g
        }
        Some(3) => 3,
        Some(g) => {
            return Err(Error::Unsupported(format!(
                "witness {id} has fixed dimension 3, got g = {g}"
            )))
        }
    };
    let data = witness_data(id, g);
    let mut b = Builder { steps: Vec::new() };
    if id.takes_g() {
        let condition = match id {
            WitnessId::Main(6) => "g >= 5 and 2g + 1 prime",
            _ => "g >= 5 and 2g + 1 not prime",
        };
        b.check(
            "side condition",
            format!("g = {g} satisfies {condition}"),
            id.accepts_g(g),
            format!("2g + 1 = {} is {}", 2 * g + 1, if nt::is_prime(2 * g + 1) { "prime" } else { "not prime" }),
        );
    }
    replay(id, &data, &mut b);
    Ok(b.finish(id))
}

fn replay(id: WitnessId, data: &WitnessData, b: &mut Builder) -> Option<()> {
    let claim = format!("pi = {} is a q-Weil number", data.input);
    let w = b.fail_on("weil number", &claim, build_weil(&data.input))?;
    b.check(
        "weil number",
        claim,
        true,
        format!("minimal polynomial {} with q = {} = {}^{}; all roots have absolute value sqrt(q)", w.h, w.q, w.p, w.a),
    );

    let claim = match data.input {
        WeilInput::Zeta { m, .. } => format!("Q(pi) = Q(zeta_{m})"),
        WeilInput::Quadratic { .. } => format!("Q(pi) = {}", data.center),
    };
    let center = b.fail_on("center field", &claim, crate::weil::center_field(&w))?;
    let mut evidence = format!("computed center {center} of degree {}", center.degree());
    if let WeilInput::Zeta { m, .. } = data.input {
        if m % 2 == 0 && (m / 2) % 2 == 1 {
            evidence.push_str(&format!(" (Q(zeta_{m}) = Q(zeta_{}))", m / 2));
        }
    }
    b.check("center field", claim, center == data.center, evidence);

    let claim = "End^0(X) is one of the two shapes for odd prime dimension";
    let endo = b.fail_on("endomorphism algebra", claim, classify_endo(&w))?;
    let above_p: Vec<&Rat> = endo
        .invariants
        .iter()
        .filter(|i| matches!(i.place, Place::FiniteAboveP(_)))
        .map(|i| &i.value)
        .collect();
    let total: Rat = endo.invariants.iter().map(|i| i.value.clone()).sum();
    let invariants_ok = if data.d == 1 {
        endo.invariants.iter().all(|i| i.value.is_zero())
    } else {
        above_p.len() == 2
            && above_p.iter().all(|v| v.denom() == &BigInt::from(data.d))
            && total.is_integer()
    };
    let expected = if data.d == 1 {
        "all local invariants are 0".to_string()
    } else {
        format!("the two invariants above {} have order {} and sum to 0 mod 1", w.p, data.d)
    };
    b.check(
        "local invariants",
        format!("{expected}; index d = {}", data.d),
        invariants_ok && endo.d == data.d,
        format!("{}; sum = {total}; d = {}", format_invariants(&endo), endo.d),
    );
    b.check(
        "dimension",
        format!("simple abelian variety of dimension g = {}", data.g),
        endo.g == data.g,
        format!("e = [Q(pi) : Q] = {}, d = {}, g = d e / 2 = {}", endo.e, endo.d, endo.g),
    );
    let want_shape = if data.d == 1 {
        EndoShape::CMField
    } else {
        EndoShape::DivisionAlgebraOverImagQuadratic
    };
    b.check(
        "endomorphism algebra",
        format!("End^0(X) is a {want_shape}"),
        endo.shape == want_shape,
        format!("{} (Albert {}), center {}", endo.shape, endo.albert_type, endo.center),
    );

    b.axiom(
        "maximal order",
        format!(
            "End^0(X) has a maximal order O containing {}, and some X' isogenous to X has End(X') = O",
            data.ring
        ),
        "every maximal order of End^0(X) occurs as the endomorphism ring of a variety in the isogeny class of X",
    );

    let realized = if endo.shape == EndoShape::CMField {
        cm_route(data, &endo, b)
    } else {
        division_route(data, &endo, w.p, b)
    }?;

    b.axiom(
        "polarization",
        format!(
            "L' = tensor of f^* L over f in <{}> is ample and preserved, so <{}> <= Aut(X', L')",
            data.generator, data.generator
        ),
        "pullbacks of an ample line bundle by automorphisms are ample, and so is their tensor product",
    );

    if let WitnessId::Closed(_) = id {
        b.axiom(
            "base change",
            "X over the algebraic closure is simple and End(X) = End(X over the algebraic closure)".to_string(),
            "X stays simple after base change to the algebraic closure; End_k(X) is a maximal order inside the order End(X over the algebraic closure) of the same algebra, so the two are equal",
        );
        closed_list_step(b);
    }

    let no_fail = b.steps.iter().all(|s| s.verdict != Verdict::Fail);
    b.check(
        "verdict",
        format!("Aut(X', L') = <{}> = Z/{}", data.generator, data.group),
        no_fail && realized,
        format!("maximal finite subgroup Z/{} realized", data.group),
    );
    Some(())
}

fn division_route(data: &WitnessData, endo: &EndoAlgebra, p: u64, b: &mut Builder) -> Option<bool> {
    let claim = format!("Z/{} = <{}> lies in D^x", data.group, data.generator);
    let d = b.fail_on("torsion embedding", &claim, DivisionAlgebraDescriptor::from_endo(endo, p))?;
    let dec = b.fail_on("torsion embedding", &claim, cyclic_embeds_in_algebra(data.group, &d))?;
    let mut evidence = format!(
        "D: {d}; [K(zeta_{}) : K] = {}; {}. Criterion: a field L of degree g over K embeds in D iff at every ramified place the order of the local invariant divides [L_P : K_v]",
        data.group, dec.relative_degree, dec.reason
    );
    if let Some(note) = data.analogy_note {
        evidence.push_str(&format!(" ({note})"));
    }
    let embeds = b.check("torsion embedding", claim, dec.embeds, evidence);

    let claim = format!("Z/{} is a maximal finite subgroup of D^x", data.group);
    let report = b.fail_on("maximality", &claim, maximal_even_subgroup(&d, data.group))?;
    let checks: Vec<String> = report
        .checks
        .iter()
        .map(|c| {
            format!(
                "{}: {}{}",
                c.group,
                if c.decision.embeds { "embeds" } else { "blocked" },
                if c.decision.embeds { String::new() } else { format!(" ({})", c.decision.reason) }
            )
        })
        .collect();
    let evidence = if checks.is_empty() {
        "no larger even-order candidate".to_string()
    } else {
        format!("larger candidates: {}", checks.join("; "))
    };
    let maximal = b.check("maximality", claim, report.maximal, evidence);
    Some(embeds && maximal)
}

fn cm_route(data: &WitnessData, endo: &EndoAlgebra, b: &mut Builder) -> Option<bool> {
    let claim = format!("Z/{} = <{}> lies in O_E^x", data.group, data.generator);
    let shape = b.fail_on("torsion embedding", &claim, unit_group_shape(&endo.center))?;
    let embeds = b.check(
        "torsion embedding",
        claim,
        shape.torsion_order % data.group == 0,
        format!("O_E^x = {shape} for E = {}", endo.center),
    );
    let claim = format!("every finite subgroup of E^x lies in Z/{}", data.group);
    let group = b.fail_on("maximality", &claim, cm_automorphism_group(&endo.center))?;
    let mut evidence = format!(
        "finite subgroups of a field's unit group are cyclic; the torsion of {shape} is {group}"
    );
    if let Some(note) = data.analogy_note {
        evidence.push_str(&format!(" ({note})"));
    }
    let maximal = b.check(
        "maximality",
        claim,
        group == GroupId::Cyclic { order: data.group },
        evidence,
    );
    Some(embeds && maximal)
}

fn closed_list_step(b: &mut Builder) {
    let closed = classify_closed();
    let finite = classify(3).unwrap_or_default();
    let orders = |rows: &[ClassificationRow]| -> Vec<u64> { rows.iter().map(ClassificationRow::order).collect() };
    let types = closed_field_types().unwrap_or_default();
    let commentary: Vec<String> = types
        .iter()
        .map(|t| {
            if t.occurs_for_g3 {
                format!("{}: {:?}", t.description, t.even_orders)
            } else {
                format!("{}: does not occur", t.description)
            }
        })
        .collect();
    b.check(
        "closed-field list",
        "the groups over an algebraically closed field coincide with the finite-field list for g = 3".to_string(),
        orders(&closed) == orders(&finite),
        format!("{:?} = {:?}; by type of End^0: {}", orders(&closed), orders(&finite), commentary.join("; ")),
    );
}

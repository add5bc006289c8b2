//! Which cyclic groups sit inside a division algebra of odd prime degree
//! over an imaginary quadratic field.
//!
//! `Z/j` lies in `D^x` iff `L = K(zeta_j)` is a subfield of `D`. With
//! `deg D = g` prime, `[L : K]` must be 1 or `g`; in the second case `L`
//! embeds iff it splits `D`, i.e. iff at every ramified place the order of
//! the local invariant divides every local degree `[L_P : K_v]`.

use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::amitsur::{even_order_candidates, GroupId};
use crate::arith::nt;
use crate::error::{Error, Result};
use crate::fields::{
    local_degrees_over, relative_degree_adjoin_zeta, torsion_subgroup_order, unit_group_shape,
    FieldDescriptor,
};
use crate::weil::{EndoAlgebra, EndoShape, Place};

/// Orders of the local invariants at the places above one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamifiedPrime {
    pub p: u64,
    pub orders: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionAlgebraDescriptor {
    pub center: FieldDescriptor,
    pub degree: u64,
    pub ramified: Vec<RamifiedPrime>,
}

impl DivisionAlgebraDescriptor {
    pub fn new(center: FieldDescriptor, degree: u64, ramified: Vec<RamifiedPrime>) -> Result<Self> {
        if !matches!(center, FieldDescriptor::ImagQuadratic(_)) {
            return Err(Error::Unsupported(format!(
                "center {center} is not imaginary quadratic"
            )));
        }
        if !nt::is_odd_prime(degree) {
            return Err(Error::NotOddPrime(degree));
        }
        for r in &ramified {
            if !nt::is_prime(r.p) {
                return Err(Error::NotPrime(r.p));
            }
            if let Some(bad) = r.orders.iter().find(|&&o| o == 0 || degree % o != 0) {
                return Err(Error::Unsupported(format!(
                    "invariant order {bad} at {} does not divide the degree {degree}",
                    r.p
                )));
            }
            if r.orders.windows(2).any(|w| w[0] != w[1]) {
                return Err(Error::Unsupported(format!(
                    "conjugate places above {} carry invariants of different orders",
                    r.p
                )));
            }
        }
        Ok(DivisionAlgebraDescriptor {
            center,
            degree,
            ramified,
        })
    }

    /// The algebra attached to a Weil number over `F_{p^a}`; only primes
    /// above `p` can ramify.
    pub fn from_endo(endo: &EndoAlgebra, p: u64) -> Result<Self> {
        if endo.shape != EndoShape::DivisionAlgebraOverImagQuadratic {
            return Err(Error::Unsupported(format!(
                "endomorphism algebra over {} is a field",
                endo.center
            )));
        }
        let orders: Vec<u64> = endo
            .invariants
            .iter()
            .filter(|i| matches!(i.place, Place::FiniteAboveP(_)))
            .map(|i| i.value.denom().to_u64().expect("small denominator"))
            .collect();
        let ramified = if orders.iter().any(|&o| o > 1) {
            vec![RamifiedPrime { p, orders }]
        } else {
            Vec::new()
        };
        Self::new(endo.center, endo.g, ramified)
    }
}

impl fmt::Display for DivisionAlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {} over {}", self.degree, self.center)?;
        for r in &self.ramified {
            let orders: Vec<String> = r.orders.iter().map(u64::to_string).collect();
            write!(f, ", ramified above {} with orders [{}]", r.p, orders.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalCheck {
    pub p: u64,
    pub local_degrees: Vec<u64>,
    pub orders: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum EmbedReason {
    InCenter,
    DegreeObstruction {
        relative_degree: u64,
        degree: u64,
    },
    LocalDegreeObstruction {
        p: u64,
        local_degree: u64,
        order: u64,
    },
    Splits {
        checks: Vec<LocalCheck>,
    },
}

impl fmt::Display for EmbedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbedReason::InCenter => write!(f, "lies in the center"),
            EmbedReason::DegreeObstruction {
                relative_degree,
                degree,
            } => write!(
                f,
                "double centralizer: degree {relative_degree} does not divide {degree}"
            ),
            EmbedReason::LocalDegreeObstruction {
                p,
                local_degree,
                order,
            } => write!(
                f,
                "local degree {local_degree} not divisible by {order} at a place above {p}"
            ),
            EmbedReason::Splits { checks } => {
                let parts: Vec<String> = checks
                    .iter()
                    .map(|c| {
                        format!(
                            "above {}: local degrees {:?} divisible by orders {:?}",
                            c.p, c.local_degrees, c.orders
                        )
                    })
                    .collect();
                if parts.is_empty() {
                    write!(f, "splits: no ramified places")
                } else {
                    write!(f, "splits: {}", parts.join("; "))
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingDecision {
    pub j: u64,
    /// `[K(zeta_j) : K]`
    pub relative_degree: u64,
    pub embeds: bool,
    pub reason: EmbedReason,
}

/// Whether `Z/j`, equivalently `K(zeta_j)`, embeds in `D`.
pub fn cyclic_embeds_in_algebra(j: u64, d: &DivisionAlgebraDescriptor) -> Result<EmbeddingDecision> {
    let rel = relative_degree_adjoin_zeta(&d.center, j)?;
    let decision = |embeds, reason| EmbeddingDecision {
        j,
        relative_degree: rel,
        embeds,
        reason,
    };
    if rel == 1 {
        return Ok(decision(true, EmbedReason::InCenter));
    }
    if rel != d.degree {
        return Ok(decision(
            false,
            EmbedReason::DegreeObstruction {
                relative_degree: rel,
                degree: d.degree,
            },
        ));
    }
    let mut checks = Vec::new();
    for r in &d.ramified {
        let local_degrees = local_degrees_over(&d.center, j, r.p)?;
        for &order in &r.orders {
            if let Some(&bad) = local_degrees.iter().find(|&&l| l % order != 0) {
                return Ok(decision(
                    false,
                    EmbedReason::LocalDegreeObstruction {
                        p: r.p,
                        local_degree: bad,
                        order,
                    },
                ));
            }
        }
        checks.push(LocalCheck {
            p: r.p,
            local_degrees,
            orders: r.orders.clone(),
        });
    }
    Ok(decision(true, EmbedReason::Splits { checks }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LargerCheck {
    pub group: GroupId,
    pub contains_seed: bool,
    pub decision: EmbeddingDecision,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalityReport {
    pub seed: GroupId,
    /// Every even-order candidate of larger order, with its decision.
    pub checks: Vec<LargerCheck>,
    pub maximal: bool,
    /// A larger candidate containing the seed that embeds, if any.
    pub larger_embedding: Option<GroupId>,
}

/// Whether `Z/seed_j` is a maximal finite subgroup of `D^x`, among the
/// even-order candidates for the degree of `D`. Only candidates whose order
/// is a multiple of `seed_j` can contain the seed; the others are decided
/// and reported as well.
pub fn maximal_even_subgroup(d: &DivisionAlgebraDescriptor, seed_j: u64) -> Result<MaximalityReport> {
    let seed = cyclic_embeds_in_algebra(seed_j, d)?;
    if !seed.embeds {
        return Err(Error::Unsupported(format!(
            "Z/{seed_j} does not embed in D ({})",
            seed.reason
        )));
    }
    let mut checks = Vec::new();
    for group in even_order_candidates(d.degree)? {
        let j = group.cyclic_order().ok_or_else(|| {
            Error::Unsupported(format!("noncyclic candidate {group} for degree {}", d.degree))
        })?;
        if j <= seed_j {
            continue;
        }
        checks.push(LargerCheck {
            group,
            contains_seed: j % seed_j == 0,
            decision: cyclic_embeds_in_algebra(j, d)?,
        });
    }
    let larger_embedding = checks
        .iter()
        .find(|c| c.contains_seed && c.decision.embeds)
        .map(|c| c.group);
    Ok(MaximalityReport {
        seed: GroupId::Cyclic { order: seed_j },
        checks,
        maximal: larger_embedding.is_none(),
        larger_embedding,
    })
}

/// The largest finite subgroup of `E^x` for a cyclotomic CM-field `E`: the
/// roots of unity of its ring of integers.
pub fn cm_automorphism_group(e: &FieldDescriptor) -> Result<GroupId> {
    if !matches!(e, FieldDescriptor::Cyclotomic(_)) {
        return Err(Error::Unsupported(format!("{e} is not a cyclotomic field")));
    }
    Ok(GroupId::Cyclic {
        order: torsion_subgroup_order(&unit_group_shape(e)?),
    })
}

//! Automorphism groups of simple polarized abelian varieties of odd prime
//! dimension over finite fields, and of dimension 3 over algebraically
//! closed fields of positive characteristic.

mod embed;
mod witness;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::amitsur::{even_order_candidates, GroupId};
use crate::arith::nt::{self, totient};
use crate::error::{Error, Result};

pub use embed::{
    cm_automorphism_group, cyclic_embeds_in_algebra, maximal_even_subgroup,
    DivisionAlgebraDescriptor, EmbedReason, EmbeddingDecision, LargerCheck, LocalCheck,
    MaximalityReport, RamifiedPrime,
};
pub use witness::{verify_witness, Step, Verdict, WitnessCertificate, WitnessId};

/// For which dimensions a row of the classification applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GCondition {
    AllOddPrimes,
    GEquals3,
    /// `g >= 5` and `2g + 1` prime.
    GAtLeast5WithSafePrime,
}

impl fmt::Display for GCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GCondition::AllOddPrimes => "all",
            GCondition::GEquals3 => "g=3",
            GCondition::GAtLeast5WithSafePrime => "g>=5 and 2g+1 prime",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassificationRow {
    pub group: GroupId,
    pub g_condition: GCondition,
}

impl ClassificationRow {
    fn cyclic(order: u64, g_condition: GCondition) -> Self {
        ClassificationRow {
            group: GroupId::Cyclic { order },
            g_condition,
        }
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }
}

/// The groups realized as `Aut_k(X, L)` for a simple abelian variety `X` of
/// dimension `g` over a finite field `k`, in increasing order.
pub fn classify(g: u64) -> Result<Vec<ClassificationRow>> {
    if !nt::is_odd_prime(g) {
        return Err(Error::NotOddPrime(g));
    }
    let mut rows: Vec<ClassificationRow> = [2, 4, 6]
        .into_iter()
        .map(|o| ClassificationRow::cyclic(o, GCondition::AllOddPrimes))
        .collect();
    if g == 3 {
        rows.push(ClassificationRow::cyclic(14, GCondition::GEquals3));
        rows.push(ClassificationRow::cyclic(18, GCondition::GEquals3));
    } else if nt::is_prime(2 * g + 1) {
        rows.push(ClassificationRow::cyclic(
            4 * g + 2,
            GCondition::GAtLeast5WithSafePrime,
        ));
    }
    Ok(rows)
}

/// One possible shape of `End^0(X)` for a simple abelian threefold over an
/// algebraically closed field of positive characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFieldType {
    pub description: String,
    /// Present when the algebra is a field; its degree over `Q`.
    pub field_degree: Option<u64>,
    pub occurs_for_g3: bool,
    /// Even orders of finite subgroups it allows.
    pub even_orders: Vec<u64>,
}

fn roots_of_unity_orders(field_degree: u64, totally_real: bool) -> Vec<u64> {
    if totally_real {
        return vec![2];
    }
    // zeta_m in a field of degree n forces phi(m) | n, hence m <= 2 n^2
    (2..=2 * field_degree * field_degree)
        .step_by(2)
        .filter(|&m| field_degree % totient(m) == 0)
        .collect()
}

/// The possible endomorphism algebras in dimension 3 over an algebraically
/// closed field, with the finite subgroups each allows. `D_{p,inf}` only
/// arises from dimension 5 on.
pub fn closed_field_types() -> Result<Vec<ClosedFieldType>> {
    let field = |description: &str, degree: u64, totally_real: bool| ClosedFieldType {
        description: description.to_string(),
        field_degree: Some(degree),
        occurs_for_g3: true,
        even_orders: roots_of_unity_orders(degree, totally_real),
    };
    let division_orders: Vec<u64> = even_order_candidates(3)?
        .iter()
        .filter_map(GroupId::cyclic_order)
        .collect();
    Ok(vec![
        field("Q", 1, true),
        field("totally real field of degree 3", 3, true),
        ClosedFieldType {
            description: "quaternion algebra D_{p,inf} (dimension >= 5 only)".to_string(),
            field_degree: None,
            occurs_for_g3: false,
            even_orders: Vec::new(),
        },
        field("imaginary quadratic field", 2, false),
        field("CM-field of degree 6", 6, false),
        ClosedFieldType {
            description: "division algebra of degree 3 over an imaginary quadratic field, p-rank 0"
                .to_string(),
            field_degree: None,
            occurs_for_g3: true,
            even_orders: division_orders,
        },
    ])
}

/// The groups realized as `Aut_K(X, L)` for a simple abelian threefold over
/// an algebraically closed field `K` of positive characteristic.
pub fn classify_closed() -> Vec<ClassificationRow> {
    let types = closed_field_types().expect("3 is an odd prime");
    let orders: BTreeSet<u64> = types
        .iter()
        .filter(|t| t.occurs_for_g3)
        .flat_map(|t| t.even_orders.iter().copied())
        .collect();
    orders
        .into_iter()
        .map(|o| {
            let cond = if o <= 6 {
                GCondition::AllOddPrimes
            } else {
                GCondition::GEquals3
            };
            ClassificationRow::cyclic(o, cond)
        })
        .collect()
}

//! Finite subgroups of division rings.
//!
//! The metacyclic groups `G_{m,r} = <a, b | a^m = 1, b^n = a^t, b a b^-1 = a^r>`
//! with `s = gcd(r - 1, m)`, `t = m / s`, `n = ord_m(r)`, Amitsur's
//! criterion for embedding them in a division ring, and the even-order
//! candidate lists for a division algebra of odd prime degree `g` over an
//! imaginary quadratic field.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::nt::{self, gcd, mult_order, pow_mod, prime_divisors, reduce_mod, totient};
use crate::error::{Error, Result};

/// `(m, r)` together with the derived `(s, t, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GmrPresentation {
    pub m: u64,
    /// Reduced modulo `m`.
    pub r: u64,
    pub s: u64,
    pub t: u64,
    pub n: u64,
}

/// `(s, t, n)` for `G_{m,r}`; `(1, m, 1)` when `r = 1 (mod m)`.
pub fn derive_parameters(m: u64, r: i64) -> Result<(u64, u64, u64)> {
    let p = GmrPresentation::new(m, r)?;
    Ok((p.s, p.t, p.n))
}

impl GmrPresentation {
    pub fn new(m: u64, r: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::Unsupported("m must be positive".into()));
        }
        let r = reduce_mod(r, m);
        if gcd(r, m) != 1 {
            return Err(Error::NotCoprime {
                value: r as i64,
                modulus: m,
            });
        }
        if r % m == 1 % m {
            return Ok(GmrPresentation { m, r, s: 1, t: m, n: 1 });
        }
        let s = gcd(r - 1, m);
        Ok(GmrPresentation {
            m,
            r,
            s,
            t: m / s,
            n: mult_order(r as i64, m)?,
        })
    }

    pub fn is_cyclic(&self) -> bool {
        self.n == 1
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    /// `Dic_{2m}` when `r = -1 (mod m)` with `m >= 4` even.
    pub fn dicyclic_label(&self) -> Option<String> {
        (self.m >= 4 && self.m % 2 == 0 && self.r == self.m - 1)
            .then(|| format!("Dic_{}", self.order()))
    }
}

impl fmt::Display for GmrPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G_{{{},{}}} (s = {}, t = {}, n = {}, order {})",
            self.m,
            self.r,
            self.s,
            self.t,
            self.n,
            self.order()
        )
    }
}

pub fn condition_c1(p: &GmrPresentation) -> bool {
    gcd(p.n, p.t) == 1 && gcd(p.s, p.t) == 1
}

pub fn condition_c2(p: &GmrPresentation) -> bool {
    let alpha = nt::valuation_u64(p.m, 2);
    let two_alpha = 1u64 << alpha;
    p.n % 2 == 0
        && (p.n / 2) % 2 == 1
        && alpha >= 2
        && p.s % 2 == 0
        && (p.s / 2) % 2 == 1
        && gcd(p.n, p.t) == 2
        && gcd(p.s, p.t) == 2
        && (p.r + 1) % two_alpha == 0
}

/// `alpha_p`, `n_p`, `delta_p` for a prime `p | m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeData {
    pub p: u64,
    pub alpha: u32,
    pub n_p: u64,
    pub delta_p: u64,
}

pub fn prime_data(pres: &GmrPresentation, p: u64) -> Result<PrimeData> {
    if !nt::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if pres.m % p != 0 {
        return Err(Error::Unsupported(format!("{p} does not divide m = {}", pres.m)));
    }
    let alpha = nt::valuation_u64(pres.m, p);
    let rest = pres.m / p.pow(alpha);
    Ok(PrimeData {
        p,
        alpha,
        n_p: mult_order(pres.r as i64, rest)?,
        delta_p: mult_order(p as i64, rest)?,
    })
}

/// Which part of the criterion made a presentation embeddable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EmbeddingRoute {
    Cyclic,
    Condition1,
    Condition2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub check: String,
    pub holds: bool,
    pub detail: String,
}

impl TraceEntry {
    fn new(check: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        TraceEntry {
            check: check.into(),
            holds,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.holds { "yes" } else { "no" };
        write!(f, "{:<18} {:<3} {}", self.check, mark, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embeddability {
    pub presentation: GmrPresentation,
    pub embeddable: bool,
    pub route: Option<EmbeddingRoute>,
    pub trace: Vec<TraceEntry>,
}

/// Amitsur's criterion for `G_{m,r}` to embed in a division ring.
///
/// Every sub-check is evaluated and recorded, even once the verdict is
/// known, so the trace shows each `(q, p)` pair of condition (2).
pub fn embeddable_in_division_ring(pres: &GmrPresentation) -> Embeddability {
    let mut trace = Vec::new();
    if pres.is_cyclic() {
        trace.push(TraceEntry::new(
            "cyclic",
            true,
            format!("r = 1 (mod {}): cyclic of order {}", pres.m, pres.m),
        ));
        return Embeddability {
            presentation: *pres,
            embeddable: true,
            route: Some(EmbeddingRoute::Cyclic),
            trace,
        };
    }

    let c1 = condition_c1(pres);
    let c2 = condition_c2(pres);
    trace.push(TraceEntry::new(
        "C1",
        c1,
        format!(
            "gcd(n, t) = {}, gcd(s, t) = {}",
            gcd(pres.n, pres.t),
            gcd(pres.s, pres.t)
        ),
    ));
    trace.push(TraceEntry::new(
        "C2",
        c2,
        format!(
            "n = {}, m = 2^{} * {}, s = {}, r mod 2^alpha = {}",
            pres.n,
            nt::valuation_u64(pres.m, 2),
            pres.m >> nt::valuation_u64(pres.m, 2),
            pres.s,
            pres.r % (1u64 << nt::valuation_u64(pres.m, 2))
        ),
    ));

    let cond1 = pres.n == 2 && pres.s == 2 && (pres.r + 1) % pres.m == 0;
    trace.push(TraceEntry::new(
        "condition (1)",
        cond1,
        format!("n = {}, s = {}, r + 1 = {} (mod {})", pres.n, pres.s, (pres.r + 1) % pres.m, pres.m),
    ));

    let cond2 = condition_two(pres, c2, &mut trace);
    trace.push(TraceEntry::new(
        "condition (2)",
        cond2,
        "every prime q | n has a witness prime p | m".to_string(),
    ));

    let embeddable = (c1 || c2) && (cond1 || cond2);
    let route = match (embeddable, cond1) {
        (false, _) => None,
        (true, true) => Some(EmbeddingRoute::Condition1),
        (true, false) => Some(EmbeddingRoute::Condition2),
    };
    Embeddability {
        presentation: *pres,
        embeddable,
        route,
        trace,
    }
}

fn condition_two(pres: &GmrPresentation, c2: bool, trace: &mut Vec<TraceEntry>) -> bool {
    let primes_m = prime_divisors(pres.m);
    let mut all_q = true;
    for q in prime_divisors(pres.n) {
        let mut found = false;
        for &p in &primes_m {
            let data = prime_data(pres, p).expect("p divides m");
            let label = format!("(q, p) = ({q}, {p})");
            if data.n_p % q == 0 {
                trace.push(TraceEntry::new(
                    label,
                    false,
                    format!("q divides n_p = {}", data.n_p),
                ));
                continue;
            }
            let (holds, detail) = if p != 2 {
                clause_a(pres, &data, q)
            } else {
                let quarter_odd = pres.m % 4 == 0 && (pres.m / 4) % 2 == 1;
                let holds = q == 2 && c2 && quarter_odd && data.delta_p % 2 == 1;
                (
                    holds,
                    format!(
                        "clause (b): q = {q}, C2 = {c2}, m/4 odd = {quarter_odd}, delta_p = {}",
                        data.delta_p
                    ),
                )
            };
            trace.push(TraceEntry::new(label, holds, detail));
            found |= holds;
        }
        if !found {
            trace.push(TraceEntry::new(
                format!("q = {q}"),
                false,
                "no prime p | m satisfies (a) or (b)",
            ));
        }
        all_q &= found;
    }
    all_q
}

fn clause_a(pres: &GmrPresentation, data: &PrimeData, q: u64) -> (bool, String) {
    // p^delta_p overflows quickly, so work with p^delta_p - 1 modulo s q
    let sq = pres.s * q;
    let residue = (pow_mod(data.p, data.delta_p, sq) + sq - 1) % sq;
    if residue % pres.s != 0 {
        // gcd(q, (p^delta - 1)/s) is only meaningful when s divides p^delta - 1
        return (
            false,
            format!(
                "clause (a): divisibility precondition fails, s = {} does not divide p^delta_p - 1 (delta_p = {})",
                pres.s, data.delta_p
            ),
        );
    }
    let quotient_mod_q = residue / pres.s;
    let g = gcd(q, quotient_mod_q);
    (
        g == 1,
        format!(
            "clause (a): n_p = {}, delta_p = {}, (p^delta_p - 1)/s = {quotient_mod_q} (mod {q}), gcd = {g}",
            data.n_p, data.delta_p
        ),
    )
}

/// Finite groups that can embed in a division ring, by family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GroupId {
    Cyclic { order: u64 },
    Gmr { m: u64, r: u64 },
    /// Binary tetrahedral group times `G_{m,r}`.
    TstarProduct { m: u64, r: u64 },
    /// Binary octahedral group.
    Ostar,
    /// Binary icosahedral group.
    Istar,
}

impl GroupId {
    pub fn order(&self) -> u64 {
        match *self {
            GroupId::Cyclic { order } => order,
            GroupId::Gmr { m, r } => GmrPresentation::new(m, r as i64).map_or(0, |p| p.order()),
            GroupId::TstarProduct { m, r } => {
                24 * GmrPresentation::new(m, r as i64).map_or(0, |p| p.order())
            }
            GroupId::Ostar => 48,
            GroupId::Istar => 120,
        }
    }

    pub fn cyclic_order(&self) -> Option<u64> {
        match *self {
            GroupId::Cyclic { order } => Some(order),
            _ => None,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Cyclic { order } => write!(f, "Z/{order}"),
            GroupId::Gmr { m, r } => write!(f, "G_{{{m},{r}}}"),
            GroupId::TstarProduct { m, r } => write!(f, "T* x G_{{{m},{r}}}"),
            GroupId::Ostar => write!(f, "O*"),
            GroupId::Istar => write!(f, "I*"),
        }
    }
}

/// The exceptional families, which never occur in a division algebra whose
/// center is an imaginary quadratic field.
pub fn exceptional_families() -> Vec<(GroupId, &'static str)> {
    const REASON: &str = "excluded: center is an imaginary quadratic field";
    vec![
        (GroupId::TstarProduct { m: 1, r: 0 }, REASON),
        (GroupId::Ostar, REASON),
        (GroupId::Istar, REASON),
    ]
}

/// Residues `r mod m` of multiplicative order `n_target`, optionally only
/// those whose `G_{m,r}` embeds in a division ring. Sorted.
pub fn gmr_candidates(m: u64, n_target: u64, embeddable_only: bool) -> Vec<u64> {
    if m == 0 {
        return Vec::new();
    }
    (0..m)
        .filter(|&r| gcd(r, m) == 1)
        .filter(|&r| mult_order(r as i64, m).ok() == Some(n_target))
        .filter(|&r| {
            !embeddable_only
                || GmrPresentation::new(m, r as i64)
                    .map(|p| embeddable_in_division_ring(&p).embeddable)
                    .unwrap_or(false)
        })
        .collect()
}

fn require_odd_prime(g: u64) -> Result<()> {
    if nt::is_odd_prime(g) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(g))
    }
}

/// Even `m` with `phi(m) | 2g`.
///
/// Search bound: `phi(m) >= sqrt(m / 2)` for all `m`, so `phi(m) <= 2g`
/// forces `m <= 8 g^2`.
pub fn even_m_candidates(g: u64) -> Result<Vec<u64>> {
    require_odd_prime(g)?;
    Ok((2..=8 * g * g)
        .step_by(2)
        .filter(|&m| (2 * g) % totient(m) == 0)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateCheck {
    pub r: u64,
    pub embeddable: bool,
}

/// One even `m` with `n = g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionCase {
    pub m: u64,
    /// `|G_{m,r}| = m g`.
    pub group_order: u64,
    pub g_squared_divides: bool,
    /// Every `r` of order `g` mod `m`, with its embeddability.
    pub candidates: Vec<CandidateCheck>,
    pub excluded: bool,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionReport {
    pub g: u64,
    pub cases: Vec<ExclusionCase>,
    pub all_excluded: bool,
}

/// Checks that no noncyclic `G_{m,r}` of even order with `n = g` embeds in
/// a division algebra of degree `g` over an imaginary quadratic field.
/// Such a group would need `g^2 | m g`; where that holds, every `r` of
/// order `g` is run through the embeddability criterion.
pub fn noncyclic_exclusion(g: u64) -> Result<ExclusionReport> {
    let mut cases = Vec::new();
    for m in even_m_candidates(g)? {
        let group_order = m * g;
        let g_squared_divides = group_order % (g * g) == 0;
        let candidates: Vec<CandidateCheck> = gmr_candidates(m, g, false)
            .into_iter()
            .map(|r| CandidateCheck {
                r,
                embeddable: GmrPresentation::new(m, r as i64)
                    .map(|p| embeddable_in_division_ring(&p).embeddable)
                    .unwrap_or(false),
            })
            .collect();
        let any_embeds = candidates.iter().any(|c| c.embeddable);
        let (excluded, reason) = if !g_squared_divides {
            (true, format!("g^2 = {} does not divide |G| = {group_order}", g * g))
        } else if candidates.is_empty() {
            (true, format!("no r of order {g} modulo {m}"))
        } else if !any_embeds {
            let rs: Vec<String> = candidates.iter().map(|c| c.r.to_string()).collect();
            (true, format!("G_{{{m},r}} fails the criterion for r in {{{}}}", rs.join(", ")))
        } else {
            (false, "an embeddable presentation exists".to_string())
        };
        cases.push(ExclusionCase {
            m,
            group_order,
            g_squared_divides,
            candidates,
            excluded,
            reason,
        });
    }
    let all_excluded = cases.iter().all(|c| c.excluded);
    Ok(ExclusionReport {
        g,
        cases,
        all_excluded,
    })
}

/// Finite groups of even order that can embed in the multiplicative group
/// of a division algebra of degree `g` over an imaginary quadratic field.
pub fn even_order_candidates(g: u64) -> Result<Vec<GroupId>> {
    let mut out: Vec<GroupId> = even_m_candidates(g)?
        .into_iter()
        .map(|order| GroupId::Cyclic { order })
        .collect();
    for case in noncyclic_exclusion(g)?.cases {
        if case.g_squared_divides {
            out.extend(
                case.candidates
                    .iter()
                    .filter(|c| c.embeddable)
                    .map(|c| GroupId::Gmr { m: case.m, r: c.r }),
            );
        }
    }
    out.sort();
    Ok(out)
}

/// `r^k` for the orbit-closure property of `gmr_candidates`.
pub fn power_residue(r: u64, k: u64, m: u64) -> u64 {
    pow_mod(r, k, m)
}

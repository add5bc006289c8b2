//! The classification against a brute-force enumeration, and the cyclic
//! embedding test against a direct local-degree computation.

use abvar_aut::amitsur::{even_order_candidates, GroupId};
use abvar_aut::arith::nt::{self, is_squarefree, mult_order};
use abvar_aut::classify::{
    classify, classify_closed, cyclic_embeds_in_algebra, maximal_even_subgroup, verify_witness,
    DivisionAlgebraDescriptor, EmbedReason, RamifiedPrime, Verdict, WitnessId,
};
use abvar_aut::fields::{local_degrees_over, splitting_in_quadratic, FieldDescriptor};
use proptest::prelude::*;

const DEGREES: [u64; 4] = [3, 5, 7, 11];
const SMALL_PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

/// Euler's phi for `0..=n` by sieving.
fn totient_sieve(n: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for i in 2..=n {
        if phi[i] == i as u64 {
            for k in (i..=n).step_by(i) {
                phi[k] -= phi[k] / i as u64;
            }
        }
    }
    phi
}

/// Even `m` with `phi(m) | 2g`, searched well past the analytic bound.
fn brute_even_orders(g: u64, phi: &[u64]) -> Vec<u64> {
    (2..=20 * g * g)
        .step_by(2)
        .filter(|&m| (2 * g) % phi[m as usize] == 0)
        .collect()
}

fn imag_quadratic(d: i64) -> Option<FieldDescriptor> {
    (d < 0 && is_squarefree(d)).then(|| FieldDescriptor::quadratic(d).unwrap())
}

/// `D` of degree `g` over `Q(sqrt(d))`, ramified at the places above `p`.
fn algebra(d: i64, g: u64, p: u64) -> Option<DivisionAlgebraDescriptor> {
    let k = imag_quadratic(d)?;
    let places = splitting_in_quadratic(p, &k).ok()?.place_count();
    let orders = vec![g; places as usize];
    DivisionAlgebraDescriptor::new(k, g, vec![RamifiedPrime { p, orders }]).ok()
}

/// `[K(zeta_j)_P : K_v]` for `p` prime to `j` and unramified in `K`:
/// Frobenius has order `ord_j(p)` over `Q_p`, and `K_v` has residue degree `f`.
fn unramified_local_degree(k: &FieldDescriptor, j: u64, p: u64) -> u64 {
    let f = splitting_in_quadratic(p, k).unwrap().residue_degree() as u64;
    let o = mult_order(p as i64, j).unwrap();
    nt::lcm(o, f) / f
}

#[test]
fn classification_matches_brute_force() {
    let phi = totient_sieve(20 * 97 * 97);
    for g in (3..=97u64).filter(|&g| nt::is_odd_prime(g)) {
        let rows: Vec<u64> = classify(g).unwrap().iter().map(|r| r.order()).collect();
        assert_eq!(rows, brute_even_orders(g, &phi), "g = {g}");
        let candidates: Vec<u64> = even_order_candidates(g)
            .unwrap()
            .iter()
            .map(GroupId::order)
            .collect();
        assert_eq!(rows, candidates, "g = {g}");
    }
}

#[test]
fn classify_rejects_non_odd_primes() {
    for g in [0u64, 1, 2, 4, 9, 15, 21, 25] {
        assert!(classify(g).is_err(), "g = {g}");
    }
}

#[test]
fn closed_field_classification_is_the_g3_list() {
    let closed: Vec<u64> = classify_closed().iter().map(|r| r.order()).collect();
    let finite: Vec<u64> = classify(3).unwrap().iter().map(|r| r.order()).collect();
    assert_eq!(closed, vec![2, 4, 6, 14, 18]);
    assert_eq!(closed, finite);
}

#[test]
fn local_degrees_match_frobenius_orders() {
    for d in -43i64..=-1 {
        let Some(k) = imag_quadratic(d) else { continue };
        let disc = k.quadratic_discriminant().unwrap().unsigned_abs();
        for j in 3..=40u64 {
            for &p in &SMALL_PRIMES {
                if j % p == 0 || disc % p == 0 {
                    continue;
                }
                let want = unramified_local_degree(&k, j, p);
                let got = local_degrees_over(&k, j, p).unwrap();
                assert!(got.iter().all(|&l| l == want), "{k}, j = {j}, p = {p}: {got:?} vs {want}");
            }
        }
    }
}

#[test]
fn every_witness_certificate_passes() {
    for id in WitnessId::all() {
        let cert = verify_witness(id, None).unwrap();
        assert!(cert.overall, "{id}");
        assert!(cert.steps.iter().all(|s| s.verdict != Verdict::Fail), "{id}");
        assert!(cert.steps.iter().any(|s| s.verdict == Verdict::Axiom), "{id}");
    }
}

#[test]
fn witness_families_over_a_range_of_g() {
    for g in (5..=43u64).filter(|&g| nt::is_odd_prime(g)) {
        let safe = nt::is_prime(2 * g + 1);
        let six = verify_witness(WitnessId::Main(6), Some(g)).unwrap();
        let alt3 = verify_witness(WitnessId::Alt3, Some(g)).unwrap();
        assert_eq!(six.overall, safe, "6, g = {g}");
        assert_eq!(alt3.overall, !safe, "alt3, g = {g}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn embedding_decisions_are_sound(
        d in -60i64..0,
        gi in 0usize..DEGREES.len(),
        pi in 0usize..SMALL_PRIMES.len(),
        j in 1u64..200,
    ) {
        let g = DEGREES[gi];
        let p = SMALL_PRIMES[pi];
        let Some(alg) = algebra(d, g, p) else { return Ok(()) };
        let dec = cyclic_embeds_in_algebra(j, &alg).unwrap();
        // double centralizer: [K(zeta_j) : K] is 1 or g
        if dec.embeds {
            prop_assert!(dec.relative_degree == 1 || dec.relative_degree == g);
        }
        if dec.relative_degree == g {
            // splitting: every local degree above p is a multiple of g
            let degs = local_degrees_over(&alg.center, j, p).unwrap();
            prop_assert_eq!(dec.embeds, degs.iter().all(|&l| l % g == 0));
        }
        if dec.relative_degree == 1 {
            prop_assert_eq!(dec.reason, EmbedReason::InCenter);
        }
        // subgroups of an embedded cyclic group embed
        if dec.embeds {
            for k in (1..=j).filter(|k| j % k == 0) {
                prop_assert!(cyclic_embeds_in_algebra(k, &alg).unwrap().embeds, "j = {}, k = {}", j, k);
            }
        }
    }

    #[test]
    fn maximality_is_consistent(
        d in -60i64..0,
        gi in 0usize..2,
        pi in 0usize..SMALL_PRIMES.len(),
        seed_i in 0usize..5,
    ) {
        let g = DEGREES[gi];
        let p = SMALL_PRIMES[pi];
        let Some(alg) = algebra(d, g, p) else { return Ok(()) };
        let orders: Vec<u64> = classify(g).unwrap().iter().map(|r| r.order()).collect();
        let seed = orders[seed_i % orders.len()];
        match maximal_even_subgroup(&alg, seed) {
            Ok(rep) => {
                let bigger = orders
                    .iter()
                    .any(|&o| o > seed && o % seed == 0 && cyclic_embeds_in_algebra(o, &alg).unwrap().embeds);
                prop_assert_eq!(rep.maximal, !bigger);
                prop_assert_eq!(rep.checks.len(), orders.iter().filter(|&&o| o > seed).count());
            }
            Err(_) => prop_assert!(!cyclic_embeds_in_algebra(seed, &alg).unwrap().embeds),
        }
    }
}

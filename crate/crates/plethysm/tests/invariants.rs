//! Cross-module invariants: the enumeration identity behind the recursion,
//! the maximal-weight theorem, growth-lemma monotonicity, the double-hook
//! law, and the outer-product predicate.

use num_bigint::BigUint;
use num_traits::One;
use plethysm::classifier::{grow, outer_mf, GrowStep};
use plethysm::domino::symmetric_square_split;
use plethysm::engine::Engine;
use plethysm::near_maximal::{nu_bar, second_layer_coeff};
use plethysm::oracle::Oracle;
use plethysm::partition::{partitions_of, Partition};
use plethysm::tableaux::{kostka_partition, maximal_pstd_weights, pstd_count};

fn p(s: &str) -> Partition {
    Partition::parse(s).unwrap()
}

#[test]
fn monomial_identity_reproduces_pstd_counts() {
    // Σ_β p(ν,μ,β) · K(β,α) = |PStd(μ^ν, α)| for all |ν||μ| <= 10.
    let e = Engine::default();
    for n in 1..=10u32 {
        for m in 1..=(10 / n) {
            for nu in partitions_of(n) {
                for mu in partitions_of(m) {
                    let x = e.expand(&nu, &mu).unwrap();
                    for alpha in partitions_of(n * m) {
                        let mut total = BigUint::default();
                        for (beta, c) in &x.terms {
                            total += c * kostka_partition(beta, &alpha);
                        }
                        let direct = pstd_count(&mu, &nu, alpha.parts()).unwrap();
                        assert_eq!(total, direct, "{nu} o {mu} at {alpha}");
                    }
                }
            }
        }
    }
}

#[test]
fn maximal_weights_carry_their_coefficients() {
    // the dominance-maximal weights are constituents with the same count
    let e = Engine::default();
    for (nu, mu) in [
        (p("3"), p("2")),
        (p("2,1"), p("2,1")),
        (p("3,2"), p("2,1")),
        (p("2,2"), p("3")),
        (p("1,1,1"), p("3,1")),
    ] {
        let maxima = maximal_pstd_weights(&mu, &nu);
        assert!(!maxima.is_empty());
        for (alpha, count) in &maxima {
            assert_eq!(
                &e.coefficient(&nu, &mu, alpha).unwrap(),
                count,
                "{nu} o {mu} at {alpha}"
            );
            // nothing strictly above it is a weight at all
            for other in partitions_of(alpha.size()) {
                if other.strictly_dominates(alpha).unwrap() {
                    assert!(
                        !maxima.iter().any(|(w, _)| w == &other),
                        "dominated maximal weight {alpha}"
                    );
                }
            }
        }
    }
    // single dominance-maximal weight for a one-row outer shape over (2)
    let maxima = maximal_pstd_weights(&p("2"), &p("3"));
    assert_eq!(maxima.len(), 1);
    assert_eq!(maxima[0].0, p("6"));
    assert_eq!(maxima[0].1, BigUint::one());
}

#[test]
fn row_union_keeps_coefficients_sampled() {
    // prepending a long row to μ never changes a coefficient
    let e = Engine::default();
    for (nu, mu) in [
        (p("2"), p("2")),
        (p("2"), p("2,1")),
        (p("1,1"), p("2,1")),
        (p("3"), p("2")),
        (p("2,1"), p("2")),
        (p("2,2"), p("2")),
    ] {
        let x = e.expand(&nu, &mu).unwrap();
        for extra in 0..=2u32 {
            let r = mu.width() + extra;
            if nu.size() * (mu.size() + r) > e.max_degree() {
                continue;
            }
            for (lam, c) in &x.terms {
                let (n2, m2, l2) = grow(&GrowStep::UnionRow { r }, &nu, &mu, lam).unwrap();
                assert_eq!(
                    &e.coefficient(&n2, &m2, &l2).unwrap(),
                    c,
                    "{nu} o {mu} + row {r}"
                );
            }
        }
    }
}

#[test]
fn column_and_row_growth_is_monotone_sampled() {
    let e = Engine::default();
    for (nu, mu) in [(p("2,1"), p("2")), (p("2"), p("2,2")), (p("1,1,1"), p("2"))] {
        let x = e.expand(&nu, &mu).unwrap();
        for (lam, c) in x.terms.iter().take(6) {
            for alpha in [p("1"), p("1,1"), p("2,1")] {
                let (n2, m2, l2) = grow(
                    &GrowStep::AddColumn {
                        alpha: alpha.clone(),
                    },
                    &nu,
                    &mu,
                    lam,
                )
                .unwrap();
                if n2.size() * m2.size() <= e.max_degree() {
                    assert!(
                        e.coefficient(&n2, &m2, &l2).unwrap() >= *c,
                        "column growth at {nu} o {mu}, {lam}, alpha {alpha}"
                    );
                }
            }
            for r in 1..=2u32 {
                let (n2, m2, l2) = grow(&GrowStep::BrionRow { r }, &nu, &mu, lam).unwrap();
                if n2.size() * m2.size() <= e.max_degree() {
                    assert!(
                        e.coefficient(&n2, &m2, &l2).unwrap() >= *c,
                        "row growth at {nu} o {mu}, {lam}, r {r}"
                    );
                }
            }
        }
    }
}

#[test]
fn hook_squares_have_double_hook_twos() {
    // for μ = (a, 1^b): the squared outer product has coefficient 2 exactly
    // at double hooks with α_1 + α_2 = 2a + 1 and α'_1 + α'_2 = 2b + 3, and
    // the two domino tableaux then have opposite spin
    let o = Oracle::default();
    for a in 1..=5u32 {
        for b in 0..=(6 - a).min(5) {
            let mut parts = vec![a];
            parts.extend(std::iter::repeat_n(1, b as usize));
            let Ok(mu) = Partition::new(parts) else {
                continue;
            };
            let square = o.outer_product(&mu, &mu).unwrap();
            for alpha in partitions_of(2 * mu.size()) {
                let c = square.get(&alpha).cloned().unwrap_or_default();
                assert!(c <= BigUint::from(2u32), "square of a hook exceeds 2");
                let conj = alpha.conjugate();
                let is_double_hook = alpha.part(3) <= 2;
                let law = is_double_hook
                    && alpha.part(1) + alpha.part(2) == 2 * a + 1
                    && conj.part(1) + conj.part(2) == 2 * b + 3;
                assert_eq!(
                    c == BigUint::from(2u32),
                    law,
                    "double hook law at mu={mu}, alpha={alpha}"
                );
                if law {
                    let ts = plethysm::domino::enumerate_dom(&mu, alpha.parts()).unwrap();
                    assert_eq!(ts.len(), 2);
                    assert_ne!(ts[0].spin(), ts[1].spin(), "spins at {alpha}");
                }
            }
        }
    }
}

#[test]
fn small_families_split_multiplicity_free() {
    // both halves of the spin split are multiplicity-free for rectangles,
    // the three near-rectangle families and hooks, up to |μ| = 8
    for m in 1..=8u32 {
        for mu in partitions_of(m) {
            if !(plethysm::classifier::is_almost_rectangle(&mu) || mu.is_hook()) {
                continue;
            }
            let (plus, minus) = symmetric_square_split(&mu, 24).unwrap();
            assert!(
                plus.max_coefficient() <= BigUint::one(),
                "even half at {mu}"
            );
            assert!(
                minus.max_coefficient() <= BigUint::one(),
                "odd half at {mu}"
            );
        }
    }
}

#[test]
fn outer_predicate_matches_oracle() {
    let o = Oracle::default();
    for total in 2..=10u32 {
        for nm in 1..total {
            for mu in partitions_of(nm) {
                for nu in partitions_of(total - nm) {
                    let max = o
                        .outer_product(&mu, &nu)
                        .unwrap()
                        .values()
                        .max()
                        .cloned()
                        .unwrap();
                    assert_eq!(
                        outer_mf(&mu, &nu),
                        max == BigUint::one(),
                        "outer product {mu} x {nu} (max {max})"
                    );
                }
            }
        }
    }
}

#[test]
fn three_removable_nodes_seed_the_second_layer() {
    for n in 3..=8u32 {
        for nu in partitions_of(n) {
            if nu.rem() < 3 {
                continue;
            }
            let lam = nu_bar(&nu).remove_box(1).unwrap().add_box(2).unwrap();
            assert!(
                second_layer_coeff(&nu, &lam).unwrap() >= BigUint::from(2u32),
                "seed at {nu}"
            );
        }
    }
}

#[test]
fn conjugation_transport_sweep() {
    // every coefficient survives conjugation transport, degree <= 12
    let e = Engine::default();
    for n in 1..=12u32 {
        for m in 1..=(12 / n) {
            for nu in partitions_of(n) {
                for mu in partitions_of(m) {
                    let x = e.expand(&nu, &mu).unwrap();
                    for (lam, c) in &x.terms {
                        let (n2, m2, l2) =
                            plethysm::engine::conjugate_transport(&nu, &mu, lam);
                        assert_eq!(
                            &e.coefficient(&n2, &m2, &l2).unwrap(),
                            c,
                            "{nu} o {mu} at {lam}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn witness_handles_larger_pairs() {
    use plethysm::classifier::witness;
    let e = Engine::default();
    for (nu, mu) in [
        (p("2,1,1,1,1,1,1,1"), p("2")), // narrow hook family, degree 18
        (p("3,1,1,1,1,1,1,1"), p("2")), // hook family, degree 20
        (p("2,2,2,2,1,1"), p("2")),     // two-column family, degree 20
        (p("5,4"), p("2")),             // two-row growth, degree 18
        (p("4,4,4"), p("2")),           // rectangle, degree 24
        (p("2,2"), p("3,2")),           // exception nu with stripped mu, degree 20
        (p("7,7,7,7,7"), p("2")),       // rectangle far beyond the budget
    ] {
        let cert = witness(&e, &nu, &mu).unwrap();
        cert.replay().unwrap();
        let grade = nu.size() * mu.size();
        assert_eq!(cert.engine_verified, grade <= e.max_degree(), "{nu} o {mu}");
        if cert.engine_verified {
            assert!(
                e.coefficient(&nu, &mu, &cert.witness).unwrap() >= BigUint::from(2u32),
                "{nu} o {mu}"
            );
        }
    }
}

#[test]
fn exceptional_lists_validated_by_engine() {
    // every literal entry of the finite exception lists is checked exactly
    let e = Engine::default();
    let one = BigUint::one();
    // the ν-exceptions with both μ of size 2 are multiplicity-free
    for nu in plethysm::classifier::clause_three_exceptions() {
        for mu in [p("2"), p("1,1")] {
            assert_eq!(
                e.max_multiplicity(&nu, &mu).unwrap(),
                one,
                "clause (iii) entry {nu} with {mu}"
            );
        }
    }
    // the explicitly listed small products are multiplicity-free ...
    for (nu, mu) in [
        (p("1,1"), p("4,2")),
        (p("1,1"), p("2,2,1,1")),
        (p("1,1,1"), p("6")),
        (p("1,1,1"), p("1,1,1,1,1,1")),
        (p("1,1,1"), p("2,2")),
        (p("2,1"), p("3")),
        (p("2,1"), p("1,1,1")),
    ] {
        assert_eq!(e.max_multiplicity(&nu, &mu).unwrap(), one, "{nu} o {mu}");
    }
    // ... while the four excluded linear products are not
    for (nu, mu) in [
        (p("5"), p("3")),
        (p("1,1,1,1,1"), p("1,1,1")),
        (p("4"), p("4")),
        (p("4"), p("1,1,1,1")),
    ] {
        assert!(
            e.max_multiplicity(&nu, &mu).unwrap() > one,
            "excluded pair {nu} o {mu}"
        );
    }
    // all other linear pairs with total size at most 8 are multiplicity-free
    for n in 1..=7u32 {
        for m in 1..=(8 - n) {
            for nu in [Partition::single_row(n), Partition::single_column(n)] {
                for mu in [Partition::single_row(m), Partition::single_column(m)] {
                    let verdict = plethysm::classifier::is_multiplicity_free(&nu, &mu);
                    assert_eq!(
                        e.max_multiplicity(&nu, &mu).unwrap() == one,
                        verdict.verdict,
                        "linear pair {nu} o {mu}"
                    );
                }
            }
        }
    }
}

#[test]
fn even_locked_column_family_boundary() {
    use plethysm::classifier::witness;
    let e = Engine::default();
    // in budget: direct computation seeds the pair
    let cert = witness(&e, &p("1,1,1,1,1,1"), &p("2,2")).unwrap();
    cert.replay().unwrap();
    assert!(cert.engine_verified);
    // beyond budget: no growth lemma raises the length of ν, so the honest
    // outcome is an error rather than an unverifiable certificate
    let err = witness(&e, &p("1,1,1,1,1,1,1"), &p("2,2")).unwrap_err();
    assert!(err.to_string().contains("no derivation"));
}

/// Full witness sweep over every pair of total degree at most 18; slower
/// than the acceptance gate, so opt-in: `cargo test -- --ignored`.
#[test]
#[ignore]
fn witness_sweep_degree_18() {
    use plethysm::classifier::{is_multiplicity_free, witness};
    use rayon::prelude::*;
    let e = Engine::default();
    let mut pairs = Vec::new();
    for n in 1..=18u32 {
        for m in 1..=(18 / n) {
            for nu in partitions_of(n) {
                for mu in partitions_of(m) {
                    if !is_multiplicity_free(&nu, &mu).verdict {
                        pairs.push((nu.clone(), mu));
                    }
                }
            }
        }
    }
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|(nu, mu)| {
            let cert = match witness(&e, nu, mu) {
                Ok(c) => c,
                Err(err) => return Some(format!("{nu} o {mu}: {err}")),
            };
            if cert.replay().is_err() || !cert.engine_verified {
                return Some(format!("{nu} o {mu}: bad certificate"));
            }
            if e.coefficient(nu, mu, &cert.witness).unwrap() < BigUint::from(2u32) {
                return Some(format!("{nu} o {mu}: coefficient below 2"));
            }
            None
        })
        .collect();
    assert!(failures.is_empty(), "{failures:?}");
    println!("  witnessed {} pairs", pairs.len());
}

//! Randomized properties over partitions and weights.

use num_bigint::BigUint;
use plethysm::partition::Partition;
use plethysm::tableaux::{enumerate_pstd, enumerate_ssyt, kostka, pstd_count};
use proptest::prelude::*;

fn arb_partition(max_size: u32) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..=4, 0..=4).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        parts.retain(|&x| {
            total += x;
            total <= max_size
        });
        Partition::new(parts).unwrap()
    })
}

/// A composition of `total` into at most `slots` parts, built by colouring
/// `total` balls with `slots` colours.
fn composition_from_colours(colours: &[u32], slots: usize) -> Vec<u32> {
    let mut weight = vec![0u32; slots];
    for &c in colours {
        weight[c as usize % slots] += 1;
    }
    weight
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(lam in arb_partition(12)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
    }

    #[test]
    fn union_is_conjugate_addition(a in arb_partition(10), b in arb_partition(10)) {
        prop_assert_eq!(
            a.union(&b),
            a.conjugate().add(&b.conjugate()).conjugate()
        );
    }

    #[test]
    fn dominance_is_refined_by_lex(a in arb_partition(10), b in arb_partition(10)) {
        if a.size() == b.size() && a.dominates(&b).unwrap() {
            prop_assert_ne!(a.lex_cmp(&b).unwrap(), std::cmp::Ordering::Less);
        }
    }

    #[test]
    fn kostka_is_symmetric_in_the_weight(lam in arb_partition(8), seed in any::<u64>()) {
        if lam.is_empty() {
            return Ok(());
        }
        // scramble the weight of the superstandard filling
        let mut weight: Vec<u32> = lam.parts().to_vec();
        let mut state = seed;
        for i in (1..weight.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            let j = (state >> 33) as usize % (i + 1);
            weight.swap(i, j);
        }
        weight.push(0);
        weight.rotate_right(1);
        let sorted = Partition::from_unsorted(weight.iter().copied());
        prop_assert_eq!(
            kostka(&lam, &weight).unwrap(),
            kostka(&lam, sorted.parts()).unwrap()
        );
        prop_assert_eq!(
            kostka(&lam, &weight).unwrap(),
            BigUint::from(enumerate_ssyt(&lam, &weight).unwrap().len())
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pstd_count_equals_enumeration(
        nu in arb_partition(4),
        mu in arb_partition(3),
        colours in proptest::collection::vec(0u32..5, 0..=9),
    ) {
        if nu.is_empty() || mu.is_empty() || nu.size() * mu.size() > 9 {
            return Ok(());
        }
        let grade = nu.size() * mu.size();
        let slots = (grade as usize).min(5);
        let padded: Vec<u32> = colours
            .iter()
            .copied()
            .chain(std::iter::repeat(0))
            .take(grade as usize)
            .collect();
        let weight = composition_from_colours(&padded, slots);
        let by_table = pstd_count(&mu, &nu, &weight).unwrap();
        let by_enum = enumerate_pstd(&mu, &nu, &weight).unwrap().len();
        prop_assert_eq!(by_table, BigUint::from(by_enum));
    }
}

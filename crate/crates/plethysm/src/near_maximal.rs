//! Closed forms for the top two lexicographic layers of `s_ν ∘ s_(2)`,
//! together with the RSK insertion and the bijections behind them.

use crate::partition::Partition;
use crate::tableaux::{PlethysticTableau, Tableau};
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};

/// `ν̄ = ν + (n)`.
pub fn nu_bar(nu: &Partition) -> Partition {
    nu.add(&Partition::single_row(nu.size()))
}

/// Coefficient on the top layer `λ_1 = n + ν_1`: it is 1 exactly at `ν̄`.
pub fn first_layer_coeff(nu: &Partition, lambda: &Partition) -> Result<u8> {
    let n = nu.size();
    if lambda.size() != 2 * n || lambda.part(1) != n + nu.part(1) {
        return Err(Error::Precondition(format!(
            "{lambda} is not on the first layer of {nu}"
        )));
    }
    Ok(u8::from(*lambda == nu_bar(nu)))
}

/// The support of the second layer: all `β = ν̄ − ε_1 − ε_x + ε_a + ε_b`
/// with `x > 1`, `a ≥ b ≥ 2`, and `β_a ≠ β_b` when `a ≠ b`, together with
/// the sets `I(β)` of realizing pairs.
#[derive(Clone, Debug)]
pub struct SecondLayerSupport {
    pub base: Partition,
    pub entries: BTreeMap<Partition, BTreeSet<(usize, usize)>>,
}

pub fn second_layer_support(nu: &Partition) -> Result<SecondLayerSupport> {
    if nu.len() <= 1 {
        return Err(Error::Precondition(format!(
            "second layer formulas assume nu != (n), got {nu}"
        )));
    }
    let base1 = nu_bar(nu).remove_box(1)?;
    let mut entries: BTreeMap<Partition, BTreeSet<(usize, usize)>> = BTreeMap::new();
    for &x in &base1.removable_rows() {
        if x == 1 {
            continue;
        }
        let pi = base1.remove_box(x)?;
        let max_row = pi.len() + 2;
        for b in 2..=max_row {
            for a in b..=max_row {
                let mut parts: Vec<u32> = (1..=pi.len().max(a)).map(|i| pi.part(i)).collect();
                parts[a - 1] += 1;
                parts[b - 1] += 1;
                let Ok(beta) = Partition::new(parts) else {
                    continue;
                };
                if a != b && beta.part(a) == beta.part(b) {
                    continue;
                }
                entries.entry(beta).or_default().insert((a, b));
            }
        }
    }
    Ok(SecondLayerSupport {
        base: nu.clone(),
        entries,
    })
}

/// Coefficient `⟨s_ν ∘ s_(2), s_λ⟩` on the layer `λ_1 = n + ν_1 − 1`,
/// by the two closed-form case lists (`ν_1 ≠ ν_2` and `ν_1 = ν_2`).
pub fn second_layer_coeff(nu: &Partition, lambda: &Partition) -> Result<BigUint> {
    let n = nu.size();
    if nu.len() <= 1 {
        return Err(Error::Precondition(format!(
            "second layer formulas assume nu != (n), got {nu}"
        )));
    }
    if lambda.size() != 2 * n || lambda.part(1) != n + nu.part(1) - 1 {
        return Err(Error::Precondition(format!(
            "{lambda} is not on the second layer of {nu}"
        )));
    }
    let support = second_layer_support(nu)?;
    let size = |beta: &Partition| {
        support
            .entries
            .get(beta)
            .map(|s| s.len())
            .unwrap_or_default()
    };
    // The ν̄ − ε_1 + ε_c form is tested first; the two forms are disjoint
    // because the other one strictly lowers a row below the first.
    let base1 = nu_bar(nu).remove_box(1)?;
    for c in 2..=(base1.len() + 1) {
        if let Ok(cand) = base1.add_box(c) {
            if cand == *lambda {
                let count = size(lambda);
                let drop = usize::from(nu.part(1) == nu.part(2) && c == 2);
                return Ok(BigUint::from(count.saturating_sub(drop)));
            }
        }
    }
    if size(lambda) > 0 {
        return Ok(BigUint::from(1u32));
    }
    Ok(BigUint::zero())
}

/// Row-bumping insertion starting at `start_row` (1-based). Returns the new
/// tableau and the row where a box was added.
pub fn rsk_row_insert(t: &Tableau, value: u32, start_row: usize) -> (Tableau, usize) {
    let mut rows: Vec<Vec<u32>> = t.rows().to_vec();
    let mut carry = value;
    let mut r = start_row - 1;
    loop {
        if r >= rows.len() {
            rows.push(vec![carry]);
            break;
        }
        match rows[r].iter().position(|&x| x > carry) {
            None => {
                rows[r].push(carry);
                break;
            }
            Some(j) => {
                std::mem::swap(&mut rows[r][j], &mut carry);
                r += 1;
            }
        }
    }
    let landing = r + 1;
    let out = Tableau::new(rows).expect("row bumping preserves semistandardness");
    (out, landing)
}

/// Reverse of [`rsk_row_insert`]: removes the last box of `row` and unbumps
/// up to `stop_row`, returning the tableau and the value pushed out.
pub fn rsk_reverse_delete(t: &Tableau, row: usize, stop_row: usize) -> Result<(Tableau, u32)> {
    let mut rows: Vec<Vec<u32>> = t.rows().to_vec();
    if row > rows.len() || rows[row - 1].is_empty() {
        return Err(Error::Precondition(format!(
            "no box to remove in row {row}"
        )));
    }
    if row < rows.len() && rows[row].len() >= rows[row - 1].len() {
        return Err(Error::Precondition(format!(
            "row {row} has no removable box"
        )));
    }
    let mut carry = rows[row - 1].pop().unwrap();
    if rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
    for r in (stop_row - 1..row - 1).rev() {
        let j = rows[r]
            .iter()
            .rposition(|&x| x < carry)
            .ok_or_else(|| Error::Precondition("reverse bump found no smaller entry".into()))?;
        std::mem::swap(&mut rows[r][j], &mut carry);
    }
    let out = Tableau::new(rows)?;
    Ok((out, carry))
}

/// Image of the second-layer bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhiImage {
    /// Case (i) with `ν_1 ≠ ν_2`: a tableau of shape `ν̄`.
    Straight(Tableau),
    /// Case (i) with `ν_1 = ν_2`: the initial 1s dropped, shape `ν`.
    Trimmed(Tableau),
    /// Case (ii): a tableau of shape `β ∈ M(ν)` tagged with `(a, b)`.
    Bumped(Tableau, (usize, usize)),
}

impl PhiImage {
    pub fn tableau(&self) -> &Tableau {
        match self {
            PhiImage::Straight(t) | PhiImage::Trimmed(t) | PhiImage::Bumped(t, _) => t,
        }
    }
}

/// The map `Φ̂` (or `Φ̃` when `ν_1 = ν_2`) on a plethystic tableau of inner
/// shape `(2)` whose weight `λ` satisfies `λ_1 = n + ν_1 − 1`.
pub fn phi_map(t: &PlethysticTableau) -> Result<PhiImage> {
    if t.inner_shape != Partition::single_row(2) {
        return Err(Error::ShapeMismatch {
            left: t.inner_shape.to_string(),
            right: "2".into(),
        });
    }
    let nu = &t.outer_shape;
    let n = nu.size();
    let weight = t.weight();
    if weight.first().copied().unwrap_or(0) != n + nu.part(1) - 1 {
        return Err(Error::Precondition(format!(
            "weight {weight:?} is not on the second layer of {nu}"
        )));
    }
    let entry = |r: usize, c: usize| -> (u32, u32) {
        let rows = t.entry(r, c).rows();
        (rows[0][0], rows[0][1])
    };
    // locate entries whose first value is not 1
    let mut heavy: Option<(usize, usize)> = None;
    for r in 1..=nu.len() {
        for c in 1..=nu.part(r) as usize {
            if entry(r, c).0 >= 2 {
                if heavy.is_some() {
                    return Err(Error::Precondition(
                        "more than one inner tableau without a 1".into(),
                    ));
                }
                heavy = Some((r, c));
            }
        }
    }
    match heavy {
        None => {
            // Case (i): the unique non-(1,1) entry sits at (1, ν_1).
            let t_top = entry(1, nu.part(1) as usize).1;
            if t_top == 1 {
                return Err(Error::Precondition(
                    "case (i) needs a non-(1,1) entry at the end of row 1".into(),
                ));
            }
            for c in 1..nu.part(1) as usize {
                if entry(1, c) != (1, 1) {
                    return Err(Error::Precondition(
                        "case (i) needs (1,1) entries along row 1".into(),
                    ));
                }
            }
            if nu.part(1) == nu.part(2) {
                // drop all initial 1s, keep the shape ν
                let rows: Vec<Vec<u32>> = (1..=nu.len())
                    .map(|r| (1..=nu.part(r) as usize).map(|c| entry(r, c).1).collect())
                    .collect();
                Ok(PhiImage::Trimmed(Tableau::new(rows)?))
            } else {
                let mut rows: Vec<Vec<u32>> = Vec::new();
                let mut first = vec![1u32; (n + nu.part(1) - 1) as usize];
                first.push(t_top);
                rows.push(first);
                for r in 2..=nu.len() {
                    rows.push((1..=nu.part(r) as usize).map(|c| entry(r, c).1).collect());
                }
                Ok(PhiImage::Straight(Tableau::new(rows)?))
            }
        }
        Some((x, cx)) => {
            // Case (ii): the heavy entry occupies the removable node of row x.
            if x < 2 || cx != nu.part(x) as usize || nu.part(x) == nu.part(x + 1) {
                return Err(Error::Precondition(
                    "heavy entry must fill the removable node of a row x > 1".into(),
                ));
            }
            let (t1, t2) = entry(x, cx);
            let mut rows: Vec<Vec<u32>> = Vec::new();
            rows.push(vec![1u32; (n + nu.part(1) - 1) as usize]);
            for r in 2..=nu.len() {
                let width = nu.part(r) as usize - usize::from(r == x);
                if width > 0 {
                    rows.push((1..=width).map(|c| entry(r, c).1).collect());
                }
            }
            let tbar = Tableau::new(rows)?;
            let (after1, a) = rsk_row_insert(&tbar, t1, 2);
            let (after2, b) = rsk_row_insert(&after1, t2, 2);
            if b > a {
                return Err(Error::Internal(
                    "second insertion landed below the first".into(),
                ));
            }
            Ok(PhiImage::Bumped(after2, (a, b)))
        }
    }
}

/// Explicit inverse of the case (ii) branch: reverse the two bumps and
/// reinstate the heavy inner tableau at the removable node of row `x`.
pub fn phi_inverse_bumped(
    nu: &Partition,
    s: &Tableau,
    pair: (usize, usize),
) -> Result<PlethysticTableau> {
    let (a, b) = pair;
    let (after_b, t2) = rsk_reverse_delete(s, b, 2)?;
    let (base, t1) = rsk_reverse_delete(&after_b, a, 2)?;
    if t1 > t2 || t1 < 2 {
        return Err(Error::Precondition(
            "reverse bumps do not produce an ordered heavy entry".into(),
        ));
    }
    // find x: the row whose length dropped relative to ν
    let mut x = None;
    for r in 2..=nu.len() {
        let have = base.rows().get(r - 1).map(|row| row.len()).unwrap_or(0);
        match (nu.part(r) as usize).checked_sub(have) {
            Some(0) => {}
            Some(1) if x.is_none() => x = Some(r),
            _ => {
                return Err(Error::Precondition(
                    "reverse bumps do not match the outer shape".into(),
                ))
            }
        }
    }
    let x = x.ok_or_else(|| Error::Precondition("no removed node found".into()))?;
    let mut entries: Vec<Vec<Tableau>> = Vec::new();
    for r in 1..=nu.len() {
        let mut row = Vec::new();
        for c in 1..=nu.part(r) as usize {
            let cell = if (r, c) == (x, nu.part(x) as usize) {
                Tableau::new(vec![vec![t1, t2]])?
            } else if r == 1 {
                Tableau::new(vec![vec![1, 1]])?
            } else {
                Tableau::new(vec![vec![1, base.entry(r, c)]])?
            };
            row.push(cell);
        }
        entries.push(row);
    }
    let t = PlethysticTableau {
        inner_shape: Partition::single_row(2),
        outer_shape: nu.clone(),
        entries,
    };
    t.validate()?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_of, Partition};
    use crate::tableaux::{enumerate_pstd, enumerate_ssyt};
    use std::collections::HashSet;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn first_layer_examples() {
        assert_eq!(first_layer_coeff(&p("3,1"), &p("7,1")).unwrap(), 1);
        for lam in partitions_of(8) {
            if lam.part(1) != 7 || lam == p("7,1") {
                continue;
            }
            assert_eq!(first_layer_coeff(&p("3,1"), &lam).unwrap(), 0, "{lam}");
        }
        assert_eq!(first_layer_coeff(&p("4"), &p("8")).unwrap(), 1);
        assert!(first_layer_coeff(&p("3,1"), &p("6,2")).is_err());
    }

    #[test]
    fn second_layer_support_examples() {
        let m = second_layer_support(&p("2,1")).unwrap();
        assert_eq!(
            m.entries.get(&p("4,2")),
            Some(&BTreeSet::from([(2usize, 2usize)]))
        );
        assert!(!m.entries.contains_key(&p("4,1,1")));

        let m = second_layer_support(&p("3,2,1")).unwrap();
        assert_eq!(
            m.entries.get(&p("8,3,1")),
            Some(&BTreeSet::from([(2, 2), (3, 2)]))
        );

        assert!(second_layer_support(&p("4")).is_err());
    }

    #[test]
    fn second_layer_coeff_examples() {
        assert_eq!(
            second_layer_coeff(&p("2,1"), &p("4,2")).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            second_layer_coeff(&p("2,1"), &p("4,1,1")).unwrap(),
            BigUint::zero()
        );
        assert_eq!(
            second_layer_coeff(&p("3,2,1"), &p("8,3,1")).unwrap(),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn second_layer_matches_engine_small() {
        let engine = crate::engine::Engine::default();
        let two = p("2");
        for n in 2..=6u32 {
            for nu in partitions_of(n) {
                if nu.len() <= 1 {
                    continue;
                }
                let top = n + nu.part(1) - 1;
                for lam in partitions_of(2 * n) {
                    if lam.part(1) != top {
                        continue;
                    }
                    let formula = second_layer_coeff(&nu, &lam).unwrap();
                    let exact = engine.coefficient(&nu, &two, &lam).unwrap();
                    assert_eq!(formula, exact, "nu={nu}, lambda={lam}");
                }
            }
        }
    }

    #[test]
    fn rsk_insert_examples() {
        // appending a maximal value lands in the start row
        let t = Tableau::new(vec![vec![1, 2], vec![2]]).unwrap();
        let (out, row) = rsk_row_insert(&t, 3, 1);
        assert_eq!(row, 1);
        assert_eq!(out.rows()[0], vec![1, 2, 3]);

        // the worked bump: inserting 2 into row 2 = (2,2,2,2,3) bumps the 3
        // into row 3 = (3,3,3,3)
        let t = Tableau::new(vec![
            vec![1; 8],
            vec![2, 2, 2, 2, 3],
            vec![3, 3, 3, 3],
            vec![4, 4, 4, 5],
            vec![5, 5],
        ])
        .unwrap();
        let (out, row) = rsk_row_insert(&t, 2, 2);
        assert_eq!(row, 3);
        assert_eq!(out.rows()[1], vec![2, 2, 2, 2, 2]);
        assert_eq!(out.rows()[2], vec![3, 3, 3, 3, 3]);
    }

    #[test]
    fn rsk_roundtrip() {
        let t = Tableau::new(vec![vec![1, 1, 2, 3], vec![2, 3, 3], vec![4]]).unwrap();
        for v in 1..=5u32 {
            let (ins, row) = rsk_row_insert(&t, v, 1);
            let (back, out) = rsk_reverse_delete(&ins, row, 1).unwrap();
            assert_eq!(back, t, "insert {v}");
            assert_eq!(out, v);
        }
    }

    fn pleth(nu: &Partition, entries: Vec<Vec<[u32; 2]>>) -> PlethysticTableau {
        let t = PlethysticTableau {
            inner_shape: p("2"),
            outer_shape: nu.clone(),
            entries: entries
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|[a, b]| Tableau::new(vec![vec![a, b]]).unwrap())
                        .collect()
                })
                .collect(),
        };
        t.validate().unwrap();
        t
    }

    #[test]
    fn phi_worked_example() {
        // ν = (5,5,4,4,2,1) ⊢ 21, λ = (25,6,5,3,3); ν_1 = ν_2 so the trimmed
        // variant applies to case (i), while case (ii) is shared.
        let nu = p("5,5,4,4,2,1");

        let s = pleth(
            &nu,
            vec![
                vec![[1, 1]; 5],
                vec![[1, 2], [1, 2], [1, 2], [1, 2], [1, 2]],
                vec![[1, 3], [1, 3], [1, 3], [1, 3]],
                vec![[1, 4], [1, 4], [1, 4], [1, 5]],
                vec![[1, 5], [1, 5]],
                vec![[2, 3]],
            ],
        );
        assert_eq!(
            Partition::from_unsorted(s.weight().iter().copied()),
            p("25,6,5,3,3")
        );
        match phi_map(&s).unwrap() {
            PhiImage::Bumped(t, (a, b)) => {
                assert_eq!((a, b), (2, 2));
                assert_eq!(t.shape(), &p("25,7,4,4,2"));
            }
            other => panic!("unexpected image {other:?}"),
        }

        let t = pleth(
            &nu,
            vec![
                vec![[1, 1]; 5],
                vec![[1, 2], [1, 2], [1, 2], [1, 2], [1, 3]],
                vec![[1, 3], [1, 3], [1, 3], [1, 3]],
                vec![[1, 4], [1, 4], [1, 4], [1, 5]],
                vec![[1, 5], [1, 5]],
                vec![[2, 2]],
            ],
        );
        assert_eq!(
            Partition::from_unsorted(t.weight().iter().copied()),
            p("25,6,5,3,3")
        );
        match phi_map(&t).unwrap() {
            PhiImage::Bumped(img, (a, b)) => {
                assert_eq!((a, b), (3, 2));
                assert_eq!(img.shape(), &p("25,6,5,4,2"));
            }
            other => panic!("unexpected image {other:?}"),
        }
    }

    #[test]
    fn phi_case_i_prefix_of_ones() {
        // ν = (3,1): case (i) images carry n + ν_1 − 1 leading 1s plus one
        // extra entry at the end of row 1.
        let nu = p("3,1");
        let t = pleth(&nu, vec![vec![[1, 1], [1, 1], [1, 1]], vec![[2, 2]]]);
        match phi_map(&t).unwrap() {
            PhiImage::Bumped(_, _) => {}
            other => panic!("heavy case expected, got {other:?}"),
        }
        let t = pleth(&nu, vec![vec![[1, 1], [1, 1], [1, 3]], vec![[1, 2]]]);
        match phi_map(&t).unwrap() {
            PhiImage::Straight(s) => {
                assert_eq!(s.shape(), &p("7,1"));
                let first = &s.rows()[0];
                assert!(first[..6].iter().all(|&v| v == 1));
                assert_eq!(first[6], 3);
            }
            other => panic!("unexpected image {other:?}"),
        }
    }

    #[test]
    fn phi_bijection_by_counting() {
        // ν = (2,1), every λ ⊢ 6 with λ_1 = 4: the images are distinct and
        // their count matches |SStd(ν̄,λ)| + Σ_β |SStd(β,λ)|·|I(β)|.
        let nu = p("2,1");
        let support = second_layer_support(&nu).unwrap();
        for lam in partitions_of(6) {
            if lam.part(1) != 4 {
                continue;
            }
            let domain = enumerate_pstd(&p("2"), &nu, lam.parts()).unwrap();
            let mut images = HashSet::new();
            for t in &domain {
                let img = phi_map(t).unwrap();
                match &img {
                    PhiImage::Straight(s) => assert_eq!(s.shape(), &p("5,1")),
                    PhiImage::Trimmed(_) => panic!("unequal first rows here"),
                    PhiImage::Bumped(s, pair) => {
                        assert!(support.entries[s.shape()].contains(pair))
                    }
                }
                assert!(images.insert(format!("{img:?}")), "collision at {lam}");
            }
            let mut expected = enumerate_ssyt(&p("5,1"), lam.parts()).unwrap().len();
            for (beta, pairs) in &support.entries {
                if beta.dominates(&lam).unwrap() {
                    expected += enumerate_ssyt(beta, lam.parts()).unwrap().len() * pairs.len();
                }
            }
            assert_eq!(domain.len(), expected, "cardinality at {lam}");
        }
    }

    #[test]
    fn phi_bijection_equal_first_rows() {
        // ν = (2,2): the variant with case (i) landing in SStd(ν, λ−(n)).
        let nu = p("2,2");
        let support = second_layer_support(&nu).unwrap();
        for lam in partitions_of(8) {
            if lam.part(1) != 5 {
                continue;
            }
            let domain = enumerate_pstd(&p("2"), &nu, lam.parts()).unwrap();
            let mut images = HashSet::new();
            for t in &domain {
                let img = phi_map(t).unwrap();
                if let PhiImage::Straight(_) = img {
                    panic!("equal first rows must trim in case (i)");
                }
                assert!(images.insert(format!("{img:?}")), "collision at {lam}");
            }
            let trimmed_weight: Vec<u32> = {
                let mut w = lam.parts().to_vec();
                w[0] -= 4;
                w
            };
            let mut expected = enumerate_ssyt(&nu, &trimmed_weight).unwrap().len();
            for (beta, pairs) in &support.entries {
                if beta.dominates(&lam).unwrap() {
                    expected += enumerate_ssyt(beta, lam.parts()).unwrap().len() * pairs.len();
                }
            }
            assert_eq!(domain.len(), expected, "cardinality at {lam}");
        }
    }

    #[test]
    fn phi_inverse_roundtrip() {
        let nu = p("2,1");
        for lam in partitions_of(6) {
            if lam.part(1) != 4 {
                continue;
            }
            for t in enumerate_pstd(&p("2"), &nu, lam.parts()).unwrap() {
                if let PhiImage::Bumped(s, pair) = phi_map(&t).unwrap() {
                    let back = phi_inverse_bumped(&nu, &s, pair).unwrap();
                    assert_eq!(back, t, "round trip at {lam}");
                }
            }
        }
    }
}

//! Semistandard Young tableaux, Kostka numbers, and plethystic tableaux
//! ordered by the column-wise lexicographic tableau order.

use crate::partition::{partitions_in_box, Partition};
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

/// A semistandard Young tableau: rows weakly increase, columns strictly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32))?;
        let t = Tableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v == 0 {
                    return Err(Error::Precondition("tableau entries are positive".into()));
                }
                if j > 0 && row[j - 1] > v {
                    return Err(Error::Precondition(format!(
                        "row {} not weakly increasing",
                        i + 1
                    )));
                }
                if i > 0 && self.rows[i - 1][j] >= v {
                    return Err(Error::Precondition(format!(
                        "column {} not strictly increasing",
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> u32 {
        self.rows[row - 1][col - 1]
    }

    /// Weight composition: `weight()[k-1]` counts occurrences of `k`.
    pub fn weight(&self) -> Vec<u32> {
        let max = self
            .rows
            .iter()
            .flat_map(|r| r.iter())
            .copied()
            .max()
            .unwrap_or(0);
        let mut w = vec![0u32; max as usize];
        for row in &self.rows {
            for &v in row {
                w[v as usize - 1] += 1;
            }
        }
        w
    }

    pub fn weight_partition(&self) -> Partition {
        Partition::from_unsorted(self.weight())
    }

    /// Entries of column `col` (1-based), top to bottom.
    pub fn column(&self, col: usize) -> Vec<u32> {
        self.rows
            .iter()
            .filter_map(|r| r.get(col - 1).copied())
            .collect()
    }

    /// Superstandard tableau of shape `λ`: row `i` filled with `i`.
    pub fn superstandard(shape: &Partition) -> Tableau {
        let rows = (1..=shape.len())
            .map(|i| vec![i as u32; shape.part(i) as usize])
            .collect();
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// The tableau order: scan the leftmost column where `s`, `t` differ; the
/// tableau holding the greatest entry not common to both columns is greater.
pub fn tableau_cmp(s: &Tableau, t: &Tableau) -> Result<Ordering> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch {
            left: s.shape().to_string(),
            right: t.shape().to_string(),
        });
    }
    for col in 1..=(s.shape().width() as usize) {
        let a = s.column(col);
        let b = t.column(col);
        if a == b {
            continue;
        }
        // Greatest entry whose multiplicity differs between the two columns.
        let mut counts: HashMap<u32, i32> = HashMap::new();
        for &v in &a {
            *counts.entry(v).or_insert(0) += 1;
        }
        for &v in &b {
            *counts.entry(v).or_insert(0) -= 1;
        }
        let top = counts
            .iter()
            .filter(|&(_, &d)| d != 0)
            .map(|(&v, &d)| (v, d))
            .max_by_key(|&(v, _)| v)
            .expect("differing columns have a differing entry");
        return Ok(if top.1 < 0 {
            // the extremal entry lies in t
            Ordering::Less
        } else {
            Ordering::Greater
        });
    }
    Ok(Ordering::Equal)
}

/// All SSYT of shape `λ` with entries at most `max_entry`, in a fixed order
/// (lexicographic by row-reading word).
pub fn enumerate_ssyt_bounded(shape: &Partition, max_entry: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = (1..=shape.len())
        .map(|i| Vec::with_capacity(shape.part(i) as usize))
        .collect();
    fn rec(
        shape: &Partition,
        max_entry: u32,
        pos: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if pos == cells.len() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        let (r, c) = cells[pos];
        let lo = {
            let left = if c > 0 { rows[r][c - 1] } else { 1 };
            let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
            left.max(above)
        };
        for v in lo..=max_entry {
            rows[r].push(v);
            rec(shape, max_entry, pos + 1, cells, rows, out);
            rows[r].pop();
        }
    }
    let cells: Vec<(usize, usize)> = (0..shape.len())
        .flat_map(|r| (0..shape.part(r + 1) as usize).map(move |c| (r, c)))
        .collect();
    rec(shape, max_entry, 0, &cells, &mut rows, &mut out);
    out
}

/// All SSYT of shape `λ` and weight `α` (a composition), deterministic order.
pub fn enumerate_ssyt(shape: &Partition, weight: &[u32]) -> Result<Vec<Tableau>> {
    let total: u32 = weight.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch {
            left: shape.to_string(),
            right: format!("{weight:?}"),
            left_size: shape.size(),
            right_size: total,
        });
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.len()];
    let mut budget = weight.to_vec();
    let cells: Vec<(usize, usize)> = (0..shape.len())
        .flat_map(|r| (0..shape.part(r + 1) as usize).map(move |c| (r, c)))
        .collect();
    fn rec(
        shape: &Partition,
        pos: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u32>>,
        budget: &mut Vec<u32>,
        out: &mut Vec<Tableau>,
    ) {
        if pos == cells.len() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        let (r, c) = cells[pos];
        let lo = {
            let left = if c > 0 { rows[r][c - 1] } else { 1 };
            let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
            left.max(above)
        };
        for v in lo..=(budget.len() as u32) {
            let slot = (v - 1) as usize;
            if budget[slot] == 0 {
                continue;
            }
            budget[slot] -= 1;
            rows[r].push(v);
            rec(shape, pos + 1, cells, rows, budget, out);
            rows[r].pop();
            budget[slot] += 1;
        }
    }
    rec(shape, 0, &cells, &mut rows, &mut budget, &mut out);
    Ok(out)
}

fn kostka_cache() -> &'static RwLock<HashMap<(Partition, Partition), BigUint>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), BigUint>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Kostka number `K_{λα}` for a composition `α`; symmetric in `α`, computed
/// by stacking horizontal strips.
pub fn kostka(shape: &Partition, weight: &[u32]) -> Result<BigUint> {
    let total: u32 = weight.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch {
            left: shape.to_string(),
            right: format!("{weight:?}"),
            left_size: shape.size(),
            right_size: total,
        });
    }
    Ok(kostka_partition(
        shape,
        &Partition::from_unsorted(weight.iter().copied()),
    ))
}

/// `K_{λα}` for a partition weight `α` of the same size as `λ`.
pub fn kostka_partition(shape: &Partition, weight: &Partition) -> BigUint {
    debug_assert_eq!(shape.size(), weight.size());
    if !shape.dominates(weight).unwrap_or(false) {
        return BigUint::zero();
    }
    let key = (shape.clone(), weight.clone());
    if let Some(v) = kostka_cache().read().unwrap().get(&key) {
        return v.clone();
    }
    // Chains of horizontal strips of sizes α_1, α_2, … from ∅ up to λ.
    let mut frontier: HashMap<Partition, BigUint> = HashMap::new();
    frontier.insert(Partition::empty(), BigUint::one());
    for i in 1..=weight.len() {
        let step = weight.part(i);
        let mut next: HashMap<Partition, BigUint> = HashMap::new();
        for (sigma, count) in &frontier {
            for tau in horizontal_strip_extensions(sigma, step, shape) {
                *next.entry(tau).or_insert_with(BigUint::zero) += count;
            }
        }
        frontier = next;
    }
    let result = frontier.remove(shape).unwrap_or_else(BigUint::zero);
    kostka_cache().write().unwrap().insert(key, result.clone());
    result
}

/// Shapes `τ ⊆ bound` obtained from `σ` by adding a horizontal strip of
/// `strip` boxes.
fn horizontal_strip_extensions(sigma: &Partition, strip: u32, bound: &Partition) -> Vec<Partition> {
    let max_rows = bound.len();
    let mut out = Vec::new();
    let mut parts: Vec<u32> = (1..=max_rows).map(|i| sigma.part(i)).collect();
    fn rec(
        row: usize,
        remaining: u32,
        sigma: &Partition,
        bound: &Partition,
        parts: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == parts.len() {
            if remaining == 0 {
                out.push(Partition::new(parts.clone()).expect("strip keeps partition shape"));
            }
            return;
        }
        // Row row+1 (1-based) may grow from σ_{row+1} up to min(bound, σ_row):
        // the strip condition τ_{i+1} ≤ σ_i keeps strips horizontal.
        let base = sigma.part(row + 1);
        let cap = bound
            .part(row + 1)
            .min(if row == 0 { u32::MAX } else { sigma.part(row) });
        if cap < base {
            return;
        }
        let grow_max = (cap - base).min(remaining);
        for g in 0..=grow_max {
            parts[row] = base + g;
            rec(row + 1, remaining - g, sigma, bound, parts, out);
        }
        parts[row] = base;
    }
    rec(0, strip, sigma, bound, &mut parts, &mut out);
    out
}

/// A plethystic tableau: a filling of the outer shape by inner SSYT, rows
/// weakly and columns strictly increasing in the tableau order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlethysticTableau {
    pub inner_shape: Partition,
    pub outer_shape: Partition,
    pub entries: Vec<Vec<Tableau>>,
}

impl PlethysticTableau {
    pub fn entry(&self, row: usize, col: usize) -> &Tableau {
        &self.entries[row - 1][col - 1]
    }

    /// Total weight over all inner tableaux.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = Vec::new();
        for row in &self.entries {
            for t in row {
                let tw = t.weight();
                if tw.len() > w.len() {
                    w.resize(tw.len(), 0);
                }
                for (i, c) in tw.iter().enumerate() {
                    w[i] += c;
                }
            }
        }
        w
    }

    pub fn validate(&self) -> Result<()> {
        for (i, row) in self.entries.iter().enumerate() {
            for (j, t) in row.iter().enumerate() {
                if t.shape() != &self.inner_shape {
                    return Err(Error::ShapeMismatch {
                        left: t.shape().to_string(),
                        right: self.inner_shape.to_string(),
                    });
                }
                if j > 0 && tableau_cmp(&row[j - 1], t)? == Ordering::Greater {
                    return Err(Error::Precondition("plethystic row decreases".into()));
                }
                if i > 0 && tableau_cmp(&self.entries[i - 1][j], t)? != Ordering::Less {
                    return Err(Error::Precondition("plethystic column not strict".into()));
                }
            }
        }
        Ok(())
    }
}

/// All plethystic tableaux of shape `μ^ν` and weight `α`, enumerated by
/// backtracking over the outer diagram in row-major order with inner
/// tableaux in increasing tableau order.
pub fn enumerate_pstd(
    mu: &Partition,
    nu: &Partition,
    weight: &[u32],
) -> Result<Vec<PlethysticTableau>> {
    let total: u32 = weight.iter().sum();
    if total != mu.size() * nu.size() {
        return Err(Error::SizeMismatch {
            left: format!("{mu}^{nu}"),
            right: format!("{weight:?}"),
            left_size: mu.size() * nu.size(),
            right_size: total,
        });
    }
    let mut alphabet: Vec<Tableau> = enumerate_ssyt_bounded(mu, weight.len() as u32)
        .into_iter()
        .filter(|t| {
            t.weight()
                .iter()
                .zip(weight.iter())
                .all(|(have, cap)| have <= cap)
        })
        .collect();
    alphabet.sort_by(|a, b| tableau_cmp(a, b).expect("same shape"));
    let letter_weights: Vec<Vec<u32>> = alphabet.iter().map(|t| t.weight()).collect();

    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (0..nu.part(r + 1) as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..nu.len()).map(|_| Vec::new()).collect();
    let mut budget: Vec<i64> = weight.iter().map(|&w| w as i64).collect();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        pos: usize,
        cells: &[(usize, usize)],
        alphabet: &[Tableau],
        letter_weights: &[Vec<u32>],
        grid: &mut Vec<Vec<usize>>,
        budget: &mut Vec<i64>,
        mu: &Partition,
        nu: &Partition,
        out: &mut Vec<PlethysticTableau>,
    ) {
        if pos == cells.len() {
            if budget.iter().all(|&b| b == 0) {
                out.push(PlethysticTableau {
                    inner_shape: mu.clone(),
                    outer_shape: nu.clone(),
                    entries: grid
                        .iter()
                        .map(|row| row.iter().map(|&i| alphabet[i].clone()).collect())
                        .collect(),
                });
            }
            return;
        }
        let (r, c) = cells[pos];
        let lo = {
            let left = if c > 0 { grid[r][c - 1] } else { 0 };
            let above = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
            left.max(above)
        };
        'letters: for idx in lo..alphabet.len() {
            let lw = &letter_weights[idx];
            for (k, &need) in lw.iter().enumerate() {
                if budget[k] < need as i64 {
                    continue 'letters;
                }
            }
            for (k, &need) in lw.iter().enumerate() {
                budget[k] -= need as i64;
            }
            grid[r].push(idx);
            rec(
                pos + 1,
                cells,
                alphabet,
                letter_weights,
                grid,
                budget,
                mu,
                nu,
                out,
            );
            grid[r].pop();
            for (k, &need) in lw.iter().enumerate() {
                budget[k] += need as i64;
            }
        }
    }
    rec(
        0,
        &cells,
        &alphabet,
        &letter_weights,
        &mut grid,
        &mut budget,
        mu,
        nu,
        &mut out,
    );
    Ok(out)
}

/// `|PStd(μ^ν, α)|`, computed through the monomial table of the product
/// (equal to the backtracking enumeration, which stays available for
/// cross-checks and small cases).
pub fn pstd_count(mu: &Partition, nu: &Partition, weight: &[u32]) -> Result<BigUint> {
    let total: u32 = weight.iter().sum();
    if total != mu.size() * nu.size() {
        return Err(Error::SizeMismatch {
            left: format!("{mu}^{nu}"),
            right: format!("{weight:?}"),
            left_size: mu.size() * nu.size(),
            right_size: total,
        });
    }
    let table = crate::msym::pstd_table(nu, mu);
    let key = Partition::from_unsorted(weight.iter().copied());
    Ok(table.get(&key).cloned().unwrap_or_else(BigUint::zero))
}

/// Dominance-maximal weights `α` with nonempty `PStd(μ^ν, α)`, with counts.
pub fn maximal_pstd_weights(mu: &Partition, nu: &Partition) -> Vec<(Partition, BigUint)> {
    let table = crate::msym::pstd_table(nu, mu);
    let keys: Vec<&Partition> = table.keys().collect();
    let mut out = Vec::new();
    'outer: for k in &keys {
        for other in &keys {
            if other != k && other.strictly_dominates(k).unwrap_or(false) {
                continue 'outer;
            }
        }
        out.push(((*k).clone(), table[*k].clone()));
    }
    out.sort_by(|a, b| b.0.lex_cmp(&a.0).expect("same grade"));
    out
}

/// All distinct weight partitions seen among SSYT of `λ` — the support of the
/// monomial expansion of `s_λ` (all partitions dominated by `λ`).
pub fn weight_support(shape: &Partition) -> Vec<Partition> {
    partitions_in_box(shape.size(), shape.size(), shape.size() as usize)
        .into_iter()
        .filter(|alpha| shape.dominates(alpha).unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn ssyt_enumeration_examples() {
        let ts = enumerate_ssyt(&p("2,1"), &[1, 1, 1]).unwrap();
        assert_eq!(ts.len(), 2);
        let ts = enumerate_ssyt(&p("2,2"), &[2, 1, 1]).unwrap();
        assert_eq!(ts.len(), 1);
        assert!(enumerate_ssyt(&p("2,2"), &[2, 1]).is_err());
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p("2,1"), &[1, 1, 1]).unwrap(), 2u32.into());
        assert_eq!(kostka(&p("2,2"), &[2, 1, 1]).unwrap(), 1u32.into());
        for lam in partitions_of(6) {
            let w: Vec<u32> = lam.parts().to_vec();
            assert_eq!(kostka(&lam, &w).unwrap(), 1u32.into(), "K({lam},{lam})");
            // the unique filling of weight lambda is the superstandard one
            assert_eq!(
                enumerate_ssyt(&lam, &w).unwrap(),
                vec![Tableau::superstandard(&lam)]
            );
        }
    }

    #[test]
    fn kostka_matches_enumeration() {
        for n in 1..=7 {
            for lam in partitions_of(n) {
                for alpha in partitions_of(n) {
                    let k = kostka(&lam, alpha.parts()).unwrap();
                    let e = enumerate_ssyt(&lam, alpha.parts()).unwrap().len();
                    assert_eq!(k, BigUint::from(e), "K({lam},{alpha})");
                }
            }
        }
    }

    #[test]
    fn kostka_unitriangular() {
        for n in 1..=10u32 {
            for lam in partitions_of(n) {
                for alpha in partitions_of(n) {
                    let k = kostka_partition(&lam, &alpha);
                    if !lam.dominates(&alpha).unwrap() {
                        assert!(k.is_zero(), "K({lam},{alpha}) should vanish");
                    }
                }
                assert_eq!(kostka_partition(&lam, &lam), BigUint::one());
            }
        }
    }

    #[test]
    fn kostka_weight_permutation_symmetry() {
        let comps: Vec<Vec<u32>> = vec![
            vec![1, 3, 2],
            vec![2, 0, 2, 2],
            vec![0, 1, 2, 3],
            vec![3, 1, 1, 1],
            vec![1, 1, 4],
        ];
        for c in comps {
            let n: u32 = c.iter().sum();
            for lam in partitions_of(n) {
                let sorted = Partition::from_unsorted(c.iter().copied());
                assert_eq!(
                    kostka(&lam, &c).unwrap(),
                    kostka(&lam, sorted.parts()).unwrap(),
                    "K({lam},{c:?})"
                );
            }
        }
    }

    #[test]
    fn kostka_composition_equals_enumeration() {
        // Direct check that the sorted-weight shortcut matches filling counts
        // for genuinely unsorted compositions.
        let lam = p("3,2");
        let comp = vec![1, 2, 2];
        assert_eq!(
            kostka(&lam, &comp).unwrap(),
            BigUint::from(enumerate_ssyt(&lam, &comp).unwrap().len())
        );
    }

    #[test]
    fn tableau_order_examples() {
        // s with column (1,2), t with column (1,3): the 3 lies in t, so s < t.
        let s = Tableau::new(vec![vec![1, 1], vec![2]]).unwrap();
        let t = Tableau::new(vec![vec![1, 1], vec![3]]).unwrap();
        assert_eq!(tableau_cmp(&s, &t).unwrap(), Ordering::Less);
        assert_eq!(tableau_cmp(&s, &s).unwrap(), Ordering::Equal);
        let u = Tableau::new(vec![vec![1, 2], vec![2]]).unwrap();
        assert!(tableau_cmp(&s, &u).is_ok());
        let wrong = Tableau::new(vec![vec![1, 1, 1]]).unwrap();
        assert!(tableau_cmp(&s, &wrong).is_err());
    }

    #[test]
    fn tableau_order_total_on_fixed_shape() {
        let all = enumerate_ssyt_bounded(&p("2,1"), 4);
        for a in &all {
            for b in &all {
                let ab = tableau_cmp(a, b).unwrap();
                assert_eq!(ab == Ordering::Equal, a == b);
                assert_eq!(ab, tableau_cmp(b, a).unwrap().reverse());
                for c in &all {
                    if ab != Ordering::Greater && tableau_cmp(b, c).unwrap() != Ordering::Greater {
                        assert_ne!(tableau_cmp(a, c).unwrap(), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn pstd_outer_single_box_is_kostka() {
        let mu = p("3,1");
        for alpha in partitions_of(4) {
            let count = enumerate_pstd(&mu, &p("1"), alpha.parts()).unwrap().len();
            assert_eq!(BigUint::from(count), kostka_partition(&mu, &alpha));
        }
    }

    #[test]
    fn pstd_small_examples() {
        // mu=(2), nu=(2), alpha=(2,2): 11|22 and 12|12.
        let ts = enumerate_pstd(&p("2"), &p("2"), &[2, 2]).unwrap();
        assert_eq!(ts.len(), 2);
        assert!(ts
            .iter()
            .any(|t| t.entry(1, 1).rows() == [vec![1, 1]] && t.entry(1, 2).rows() == [vec![2, 2]]));
        assert!(ts
            .iter()
            .any(|t| t.entry(1, 1).rows() == [vec![1, 2]] && t.entry(1, 2).rows() == [vec![1, 2]]));

        // Figure example: mu=(2,1), nu=(3,2), alpha=(9,5,1) is nonempty.
        let ts = enumerate_pstd(&p("2,1"), &p("3,2"), &[9, 5, 1]).unwrap();
        assert!(!ts.is_empty());
        for t in &ts {
            t.validate().unwrap();
        }
    }

    #[test]
    fn figure_weight_is_dominance_maximal() {
        let maxima = maximal_pstd_weights(&p("2,1"), &p("3,2"));
        assert!(maxima.iter().any(|(w, _)| w == &p("9,5,1")));
        // (9,2,3,1) sorts to (9,3,2,1), which is not maximal.
        assert!(!maxima.iter().any(|(w, _)| w == &p("9,3,2,1")));
    }

    #[test]
    fn pstd_count_matches_enumeration() {
        for (mu, nu) in [
            (p("2"), p("2")),
            (p("2"), p("1,1")),
            (p("2,1"), p("2")),
            (p("2"), p("2,1")),
            (p("1,1"), p("2,1")),
            (p("3"), p("2")),
            (p("2,1"), p("3")),
            (p("2,2"), p("2")),
        ] {
            let grade = mu.size() * nu.size();
            for alpha in partitions_of(grade) {
                let by_enum = enumerate_pstd(&mu, &nu, alpha.parts()).unwrap().len();
                let by_table = pstd_count(&mu, &nu, alpha.parts()).unwrap();
                assert_eq!(BigUint::from(by_enum), by_table, "PStd({mu}^{nu}, {alpha})");
            }
        }
    }
}

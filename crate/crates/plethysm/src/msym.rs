//! Monomial-coefficient tables for symmetric functions of the inner-tableau
//! alphabet.
//!
//! A table maps a weight partition `α` to the coefficient of `x^α`; by
//! symmetry this determines every monomial coefficient. Plethystic-tableau
//! counts `|PStd(μ^ν, α)|` are the monomial coefficients of `s_ν` evaluated
//! at the alphabet of semistandard `μ`-tableaux, and are assembled here from
//! Kostka tables through Newton's identities and the Jacobi–Trudi
//! determinant. Everything is exact integer arithmetic.

use crate::partition::Partition;
use crate::tableaux::{kostka_partition, weight_support};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

pub type Table = HashMap<Partition, BigInt>;

fn factorial(n: u32) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=n {
        f *= BigUint::from(i);
    }
    f
}

/// Monomial table of `s_λ`: `α ↦ K(λ, α)` over all `α ⊴ λ`.
pub fn schur_table(shape: &Partition) -> Arc<Table> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<Table>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(shape) {
        return t.clone();
    }
    let mut table = Table::new();
    for alpha in weight_support(shape) {
        let k = kostka_partition(shape, &alpha);
        if !k.is_zero() {
            table.insert(alpha, BigInt::from(k));
        }
    }
    let table = Arc::new(table);
    cache.write().unwrap().insert(shape.clone(), table.clone());
    table
}

/// Table of `p_r` applied to the alphabet: every key scaled by `r`.
pub fn stretch(table: &Table, r: u32) -> Table {
    table
        .iter()
        .map(|(k, v)| {
            (
                Partition::from_unsorted(k.parts().iter().map(|&p| p * r)),
                v.clone(),
            )
        })
        .collect()
}

/// Value-grouped view of a partition: `(value, multiplicity)` pairs.
fn groups(p: &Partition) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::new();
    for &v in p.parts() {
        match out.last_mut() {
            Some((val, count)) if *val == v => *count += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

/// Product of two monomial tables.
///
/// For each key pair `(λ, σ)` the merge enumerates, group by group, how many
/// parts of `σ` land on parts of each value of `λ` and how many open fresh
/// slots; the multiplicity of each resulting key is a ratio of factorials of
/// value multiplicities.
pub fn mul(f: &Table, g: &Table) -> Table {
    let mut out = Table::new();
    for (lam, cf) in f {
        let lgroups = groups(lam);
        for (sig, cg) in g {
            let sgroups = groups(sig);
            let coeff = cf * cg;
            merge_recurse(
                &lgroups,
                &sgroups,
                0,
                &mut lgroups.iter().map(|&(_, c)| c).collect::<Vec<_>>(),
                &mut Vec::new(),
                &coeff,
                &mut out,
            );
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[allow(clippy::too_many_arguments)]
fn merge_recurse(
    lgroups: &[(u32, u32)],
    sgroups: &[(u32, u32)],
    gi: usize,
    remaining: &mut Vec<u32>,
    cells: &mut Vec<((u32, u32), u32)>,
    coeff: &BigInt,
    out: &mut Table,
) {
    if gi == sgroups.len() {
        // Leftover λ-parts become (x, 0) cells.
        let mut all_cells: Vec<((u32, u32), u32)> = cells.clone();
        for (i, &(x, _)) in lgroups.iter().enumerate() {
            if remaining[i] > 0 {
                all_cells.push(((x, 0), remaining[i]));
            }
        }
        let mut value_counts: HashMap<u32, u32> = HashMap::new();
        let mut denom = BigUint::one();
        let mut key_parts = Vec::new();
        for &((x, y), n) in &all_cells {
            *value_counts.entry(x + y).or_insert(0) += n;
            denom *= factorial(n);
            for _ in 0..n {
                key_parts.push(x + y);
            }
        }
        let mut numer = BigUint::one();
        for &c in value_counts.values() {
            numer *= factorial(c);
        }
        let mult = BigInt::from(numer / denom);
        let key = Partition::from_unsorted(key_parts);
        *out.entry(key).or_insert_with(BigInt::zero) += coeff * mult;
        return;
    }
    let (y, m) = sgroups[gi];
    // Distribute m parts of value y over λ-groups (capped) plus fresh slots.
    fn distribute(
        y: u32,
        left: u32,
        li: usize,
        lgroups: &[(u32, u32)],
        sgroups: &[(u32, u32)],
        gi: usize,
        remaining: &mut Vec<u32>,
        cells: &mut Vec<((u32, u32), u32)>,
        coeff: &BigInt,
        out: &mut Table,
    ) {
        if li == lgroups.len() {
            // Remaining `left` parts open fresh slots as (0, y) cells.
            if left > 0 {
                cells.push(((0, y), left));
            }
            merge_recurse(lgroups, sgroups, gi + 1, remaining, cells, coeff, out);
            if left > 0 {
                cells.pop();
            }
            return;
        }
        let cap = remaining[li].min(left);
        let x = lgroups[li].0;
        for take in 0..=cap {
            if take > 0 {
                remaining[li] -= take;
                cells.push(((x, y), take));
            }
            distribute(
                y,
                left - take,
                li + 1,
                lgroups,
                sgroups,
                gi,
                remaining,
                cells,
                coeff,
                out,
            );
            if take > 0 {
                remaining[li] += take;
                cells.pop();
            }
        }
    }
    distribute(y, m, 0, lgroups, sgroups, gi, remaining, cells, coeff, out);
}

fn unit_table() -> Table {
    let mut t = Table::new();
    t.insert(Partition::empty(), BigInt::one());
    t
}

fn div_exact(table: &mut Table, k: u32) {
    let k = BigInt::from(k);
    for v in table.values_mut() {
        let (q, r) = num_integer::Integer::div_rem(&*v, &k);
        assert!(r.is_zero(), "Newton division must be exact");
        *v = q;
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Flavor {
    Complete,
    Elementary,
}

/// `h_k` (or `e_k`) of the `SStd(μ)` alphabet, via Newton's identities.
fn power_table(mu: &Partition, k: u32, flavor: Flavor) -> Arc<Table> {
    #[allow(clippy::type_complexity)]
    static CACHE: OnceLock<RwLock<HashMap<(Partition, u32, Flavor), Arc<Table>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (mu.clone(), k, flavor);
    if let Some(t) = cache.read().unwrap().get(&key) {
        return t.clone();
    }
    let result = if k == 0 {
        Arc::new(unit_table())
    } else {
        let base = schur_table(mu);
        let mut acc = Table::new();
        for j in 1..=k {
            let pj = stretch(&base, j);
            let lower = power_table(mu, k - j, flavor);
            let term = mul(&pj, &lower);
            let negate = flavor == Flavor::Elementary && j % 2 == 0;
            for (key, val) in term {
                let signed = if negate { -val } else { val };
                *acc.entry(key).or_insert_with(BigInt::zero) += signed;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        div_exact(&mut acc, k);
        Arc::new(acc)
    };
    cache.write().unwrap().insert(key, result.clone());
    result
}

/// Monomial table of `s_ν ∘ s_μ`: `α ↦ |PStd(μ^ν, α)|`.
///
/// Jacobi–Trudi over `h_k[SStd(μ)]` (or the dual form over `e_k` when the
/// conjugate is shorter), expanded by Laplace steps down the columns.
pub fn pstd_table(nu: &Partition, mu: &Partition) -> Arc<HashMap<Partition, BigUint>> {
    #[allow(clippy::type_complexity)]
    static CACHE: OnceLock<
        RwLock<HashMap<(Partition, Partition), Arc<HashMap<Partition, BigUint>>>>,
    > = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (nu.clone(), mu.clone());
    if let Some(t) = cache.read().unwrap().get(&key) {
        return t.clone();
    }

    let (index, flavor) = if nu.len() <= nu.width() as usize {
        (nu.clone(), Flavor::Complete)
    } else {
        (nu.conjugate(), Flavor::Elementary)
    };
    let r = index.len();
    let signed = if r == 0 {
        unit_table()
    } else {
        // M[i][j] = f_{index_i − i + j}, i, j = 1..r; expand along columns with
        // a memo over the set of rows still unused.
        let mut entries: Vec<Vec<Option<Arc<Table>>>> = vec![vec![None; r]; r];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let sub = index.part(i + 1) as i64 - (i as i64 + 1) + (j as i64 + 1);
                if sub >= 0 {
                    *slot = Some(power_table(mu, sub as u32, flavor));
                }
            }
        }
        let mut memo: HashMap<u64, Arc<Table>> = HashMap::new();
        det_minor((1u64 << r) - 1, r, &entries, &mut memo)
            .as_ref()
            .clone()
    };

    let mut table = HashMap::new();
    for (k, v) in signed {
        assert!(
            !v.is_negative(),
            "PStd count at {k} came out negative for {nu} of {mu}"
        );
        if !v.is_zero() {
            table.insert(k, v.to_biguint().unwrap());
        }
    }
    let table = Arc::new(table);
    cache.write().unwrap().insert(key, table.clone());
    table
}

fn det_minor(
    rows: u64,
    r: usize,
    entries: &[Vec<Option<Arc<Table>>>],
    memo: &mut HashMap<u64, Arc<Table>>,
) -> Arc<Table> {
    if rows == 0 {
        return Arc::new(unit_table());
    }
    if let Some(t) = memo.get(&rows) {
        return t.clone();
    }
    let col = r - rows.count_ones() as usize;
    let mut acc = Table::new();
    let mut sign_flip = false;
    for i in 0..r {
        if rows & (1 << i) == 0 {
            continue;
        }
        if let Some(entry) = &entries[i][col] {
            let minor = det_minor(rows & !(1 << i), r, entries, memo);
            let term = mul(entry, &minor);
            for (k, v) in term {
                let signed = if sign_flip { -v } else { v };
                *acc.entry(k).or_insert_with(BigInt::zero) += signed;
            }
        }
        sign_flip = !sign_flip;
    }
    acc.retain(|_, v| !v.is_zero());
    let acc = Arc::new(acc);
    memo.insert(rows, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn table_of(pairs: &[(&str, i64)]) -> Table {
        pairs
            .iter()
            .map(|&(k, v)| (p(k), BigInt::from(v)))
            .collect()
    }

    #[test]
    fn mul_small_identities() {
        // m_1 * m_1 = m_2 + 2 m_{1,1}
        let m1 = table_of(&[("1", 1)]);
        let sq = mul(&m1, &m1);
        assert_eq!(sq, table_of(&[("2", 1), ("1,1", 2)]));

        // m_{1,1} * m_1 = 3 m_{1,1,1} + m_{2,1}
        let m11 = table_of(&[("1,1", 1)]);
        assert_eq!(mul(&m11, &m1), table_of(&[("1,1,1", 3), ("2,1", 1)]));

        // m_2 * m_2 = m_4 + 2 m_{2,2}
        let m2 = table_of(&[("2", 1)]);
        assert_eq!(mul(&m2, &m2), table_of(&[("4", 1), ("2,2", 2)]));
    }

    #[test]
    fn mul_matches_brute_force_polynomials() {
        // Expand in 3 variables by brute force and compare coefficients.
        fn expand(table: &Table, vars: usize) -> HashMap<Vec<u32>, BigInt> {
            use std::collections::HashSet;
            let mut out = HashMap::new();
            for (k, v) in table {
                if k.len() > vars {
                    continue;
                }
                let mut seen: HashSet<Vec<u32>> = HashSet::new();
                let mut expo = vec![0u32; vars];
                fn rec(
                    parts: &[u32],
                    idx: usize,
                    expo: &mut Vec<u32>,
                    seen: &mut HashSet<Vec<u32>>,
                ) {
                    if idx == parts.len() {
                        seen.insert(expo.clone());
                        return;
                    }
                    for i in 0..expo.len() {
                        if expo[i] == 0 {
                            expo[i] = parts[idx];
                            rec(parts, idx + 1, expo, seen);
                            expo[i] = 0;
                        }
                    }
                }
                rec(k.parts(), 0, &mut expo, &mut seen);
                for e in seen {
                    out.insert(e, v.clone());
                }
            }
            out
        }

        let f = table_of(&[("2,1", 3), ("1,1,1", 1)]);
        let g = table_of(&[("1,1", 2), ("2", 5)]);
        let product = mul(&f, &g);

        let fe = expand(&f, 3);
        let ge = expand(&g, 3);
        let mut brute: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (ef, cf) in &fe {
            for (eg, cg) in &ge {
                let sum: Vec<u32> = ef.iter().zip(eg).map(|(a, b)| a + b).collect();
                *brute.entry(sum).or_insert_with(BigInt::zero) += cf * cg;
            }
        }
        brute.retain(|_, v| !v.is_zero());
        let pe = expand(&product, 3);
        // compare on all exponent vectors that fit in 3 variables
        for (e, v) in &brute {
            assert_eq!(pe.get(e), Some(v), "exponent {e:?}");
        }
        for (e, v) in &pe {
            assert_eq!(brute.get(e), Some(v), "exponent {e:?}");
        }
    }

    #[test]
    fn h_and_e_of_trivial_alphabet() {
        // mu = (1): the alphabet is x_1, x_2, …, so h_k has all partitions of
        // k as keys with coefficient 1, and e_k only (1^k).
        let mu = p("1");
        let h3 = power_table(&mu, 3, Flavor::Complete);
        for lam in partitions_of(3) {
            assert_eq!(h3.get(&lam), Some(&BigInt::one()), "h3 at {lam}");
        }
        let e3 = power_table(&mu, 3, Flavor::Elementary);
        assert_eq!(e3.len(), 1);
        assert_eq!(e3.get(&p("1,1,1")), Some(&BigInt::one()));
    }

    #[test]
    fn pstd_table_outer_single_box() {
        let mu = p("2,1");
        let table = pstd_table(&p("1"), &mu);
        for alpha in partitions_of(3) {
            let expected = kostka_partition(&mu, &alpha);
            let got = table.get(&alpha).cloned().unwrap_or_default();
            assert_eq!(got, expected, "kostka at {alpha}");
        }
    }

    #[test]
    fn pstd_table_inner_single_box() {
        // s_nu ∘ s_(1) = s_nu.
        let nu = p("3,2");
        let table = pstd_table(&nu, &p("1"));
        for alpha in partitions_of(5) {
            let expected = kostka_partition(&nu, &alpha);
            let got = table.get(&alpha).cloned().unwrap_or_default();
            assert_eq!(got, expected, "kostka at {alpha}");
        }
    }
}

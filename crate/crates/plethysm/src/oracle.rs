//! Independent brute-force path: symmetric-function arithmetic in the
//! power-sum basis driven by Murnaghan–Nakayama characters.
//!
//! Used to validate the engine and to compute outer products. All
//! coefficients are exact rationals internally; any non-integrality at the
//! boundary is a fatal internal error.

use crate::partition::{partitions_of, Partition};
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

pub const DEFAULT_ORACLE_MAX_DEGREE: u32 = 14;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub max_degree: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_degree: DEFAULT_ORACLE_MAX_DEGREE,
        }
    }
}

/// A symmetric function in the power-sum basis.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSumVector {
    pub grade: u32,
    pub terms: HashMap<Partition, BigRational>,
}

/// Centralizer order `z_ρ = Π m^{k_m} k_m!`.
pub fn z_order(rho: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let mut mult: HashMap<u32, u32> = HashMap::new();
    for &part in rho.parts() {
        *mult.entry(part).or_insert(0) += 1;
    }
    for (m, k) in mult {
        for _ in 0..k {
            z *= BigUint::from(m);
        }
        for i in 2..=k {
            z *= BigUint::from(i);
        }
    }
    z
}

fn char_cache() -> &'static RwLock<HashMap<(Partition, Partition), BigInt>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Irreducible symmetric-group character `χ^λ(ρ)` by the Murnaghan–Nakayama
/// rule over beta-numbers.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: lambda.to_string(),
            right: rho.to_string(),
            left_size: lambda.size(),
            right_size: rho.size(),
        });
    }
    Ok(mn_rec(lambda, rho))
}

fn mn_rec(lambda: &Partition, rho: &Partition) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(v) = char_cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let r = rho.part(1);
    let rest = rho.strip_first_row();
    // beta-numbers: λ_i + ℓ − i for i = 1..ℓ, strictly decreasing
    let ell = lambda.len();
    let betas: Vec<u32> = (1..=ell)
        .map(|i| lambda.part(i) + (ell - i) as u32)
        .collect();
    let mut total = BigInt::zero();
    for (pos, &b) in betas.iter().enumerate() {
        if b < r {
            continue;
        }
        let nb = b - r;
        if betas.contains(&nb) {
            continue;
        }
        // height of the removed strip = number of betas strictly between nb and b
        let crossed = betas.iter().filter(|&&x| nb < x && x < b).count();
        let mut new_betas = betas.clone();
        new_betas[pos] = nb;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let stripped = Partition::new(
            new_betas
                .iter()
                .enumerate()
                .map(|(i, &bv)| bv - (ell - 1 - i) as u32)
                .collect::<Vec<_>>(),
        )
        .expect("valid beta-numbers");
        let sub = mn_rec(&stripped, &rest);
        if crossed % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    char_cache().write().unwrap().insert(key, total.clone());
    total
}

/// Dimension `χ^λ(1^n)` by the hook length formula; used as a cross-check.
pub fn hook_dimension(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let mut numer = BigUint::one();
    for i in 2..=n {
        numer *= BigUint::from(i);
    }
    let mut denom = BigUint::one();
    for r in 1..=lambda.len() {
        for c in 1..=lambda.part(r) as usize {
            denom *= BigUint::from(lambda.hook_length(r, c));
        }
    }
    numer / denom
}

/// `s_λ = Σ_ρ χ^λ(ρ)/z_ρ · p_ρ`.
pub fn schur_to_powersum(lambda: &Partition) -> PowerSumVector {
    let n = lambda.size();
    let mut terms = HashMap::new();
    for rho in partitions_of(n) {
        let chi = mn_rec(lambda, &rho);
        if chi.is_zero() {
            continue;
        }
        let z = BigInt::from(z_order(&rho));
        terms.insert(rho, BigRational::new(chi, z));
    }
    PowerSumVector { grade: n, terms }
}

/// Inverse basis change via the character pairing; coefficients may be
/// negative for a general power-sum vector.
pub fn powersum_to_schur(v: &PowerSumVector) -> Result<BTreeMap<Partition, BigInt>> {
    let mut out = BTreeMap::new();
    for alpha in partitions_of(v.grade) {
        let mut acc = BigRational::zero();
        for (rho, c) in &v.terms {
            let chi = mn_rec(&alpha, rho);
            if !chi.is_zero() {
                acc += c * BigRational::from_integer(chi);
            }
        }
        if !acc.is_zero() {
            if !acc.is_integer() {
                return Err(Error::Internal(format!(
                    "non-integer Schur coefficient {acc} at {alpha}"
                )));
            }
            out.insert(alpha, acc.to_integer());
        }
    }
    Ok(out)
}

fn psum_mul(a: &PowerSumVector, b: &PowerSumVector) -> PowerSumVector {
    let mut terms: HashMap<Partition, BigRational> = HashMap::new();
    for (ra, ca) in &a.terms {
        for (rb, cb) in &b.terms {
            let key = ra.union(rb);
            let val = ca * cb;
            terms.entry(key).and_modify(|v| *v += &val).or_insert(val);
        }
    }
    terms.retain(|_, v| !v.is_zero());
    PowerSumVector {
        grade: a.grade + b.grade,
        terms,
    }
}

/// `p_r ∘ v`: every part of every indexing partition is scaled by `r`.
fn psum_stretch(v: &PowerSumVector, r: u32) -> PowerSumVector {
    PowerSumVector {
        grade: v.grade * r,
        terms: v
            .terms
            .iter()
            .map(|(k, c)| {
                (
                    Partition::from_unsorted(k.parts().iter().map(|&p| p * r)),
                    c.clone(),
                )
            })
            .collect(),
    }
}

pub struct Oracle {
    cfg: OracleConfig,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(OracleConfig::default())
    }
}

impl Oracle {
    pub fn new(cfg: OracleConfig) -> Self {
        Oracle { cfg }
    }

    pub fn max_degree(&self) -> u32 {
        self.cfg.max_degree
    }

    fn check_budget(&self, grade: u32) -> Result<()> {
        if grade > self.cfg.max_degree {
            return Err(Error::Budget {
                degree: grade,
                budget: self.cfg.max_degree,
            });
        }
        Ok(())
    }

    /// Schur expansion of `s_ν ∘ s_μ` through the power-sum basis:
    /// `p_r ∘ p_s = p_{rs}` plus bilinearity.
    pub fn plethysm_expand_powersum(
        &self,
        nu: &Partition,
        mu: &Partition,
    ) -> Result<BTreeMap<Partition, BigUint>> {
        if nu.is_empty() || mu.is_empty() {
            return Err(Error::Precondition(
                "plethysm needs nonempty partitions".into(),
            ));
        }
        let grade = nu.size() * mu.size();
        self.check_budget(grade)?;
        let nu_p = schur_to_powersum(nu);
        let mu_p = schur_to_powersum(mu);
        let mut total = PowerSumVector {
            grade,
            terms: HashMap::new(),
        };
        for (rho, c) in &nu_p.terms {
            let mut term = PowerSumVector {
                grade: 0,
                terms: HashMap::from([(Partition::empty(), BigRational::one())]),
            };
            for &part in rho.parts() {
                term = psum_mul(&term, &psum_stretch(&mu_p, part));
            }
            for (k, v) in term.terms {
                let add = c * v;
                total
                    .terms
                    .entry(k)
                    .and_modify(|x| *x += &add)
                    .or_insert(add);
            }
        }
        total.terms.retain(|_, v| !v.is_zero());
        let signed = powersum_to_schur(&total)?;
        let mut out = BTreeMap::new();
        for (k, v) in signed {
            if v.is_negative() {
                return Err(Error::Internal(format!(
                    "negative plethysm coefficient {v} at {k}"
                )));
            }
            out.insert(k, v.to_biguint().unwrap());
        }
        Ok(out)
    }

    /// Outer (Littlewood–Richardson) product `s_λ ⊠ s_μ`.
    pub fn outer_product(
        &self,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<BTreeMap<Partition, BigUint>> {
        let grade = lambda.size() + mu.size();
        self.check_budget(grade)?;
        let prod = psum_mul(&schur_to_powersum(lambda), &schur_to_powersum(mu));
        let signed = powersum_to_schur(&prod)?;
        let mut out = BTreeMap::new();
        for (k, v) in signed {
            if v.is_negative() {
                return Err(Error::Internal(format!(
                    "negative outer-product coefficient {v} at {k}"
                )));
            }
            out.insert(k, v.to_biguint().unwrap());
        }
        Ok(out)
    }
}

//! The plethysm coefficient calculator.
//!
//! Coefficients of `s_ν ∘ s_μ` are computed by walking the partitions of
//! `|ν||μ|` in decreasing lexicographic order starting from the maximal
//! constituent, subtracting at each weight the contributions of the already
//! known, lexicographically greater constituents:
//!
//! `p(ν,μ,α) = |PStd(μ^ν,α)| − Σ_{β ⊳ α} p(ν,μ,β) · K(β,α)`.
//!
//! The computed prefix is cached per `(ν, μ)`, so near-maximal queries touch
//! only a short prefix while full expansions walk the entire grade.

use crate::msym;
use crate::partition::{partitions_of, Partition};
use crate::tableaux::kostka_partition;
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, RwLock};

pub const DEFAULT_MAX_DEGREE: u32 = 24;

#[derive(Clone, Copy, Debug)]
pub struct EngineConfig {
    /// Largest allowed total degree `|ν|·|μ|`.
    pub max_degree: u32,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

/// A Schur expansion: finite map from partitions of the grade to positive
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    pub grade: u32,
    pub terms: BTreeMap<Partition, BigUint>,
}

impl SchurExpansion {
    pub fn coefficient(&self, key: &Partition) -> BigUint {
        self.terms.get(key).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Keys in decreasing lexicographic order.
    pub fn keys_lex_desc(&self) -> Vec<&Partition> {
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.lex_cmp(a).expect("equal grade"));
        keys
    }

    pub fn max_coefficient(&self) -> BigUint {
        self.terms
            .values()
            .max()
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn total_multiplicity(&self) -> BigUint {
        let mut t = BigUint::zero();
        for v in self.terms.values() {
            t += v;
        }
        t
    }
}

/// The lexicographically maximal constituent of `s_ν ∘ s_μ`:
/// `(nμ_1, …, nμ_{ℓ−1}, nμ_ℓ − n + ν_1, ν_2, …)`, always with coefficient 1.
pub fn lex_max_constituent(nu: &Partition, mu: &Partition) -> Result<Partition> {
    if nu.is_empty() || mu.is_empty() {
        return Err(Error::Precondition(
            "lex_max_constituent needs nonempty partitions".into(),
        ));
    }
    let n = nu.size();
    let ell = mu.len();
    let mut parts: Vec<u32> = (1..ell).map(|i| n * mu.part(i)).collect();
    parts.push(n * mu.part(ell) - n + nu.part(1));
    parts.extend((2..=nu.len()).map(|i| nu.part(i)));
    Partition::new(parts).map_err(|_| Error::Internal("maximal term is not a partition".into()))
}

/// Conjugation transport: the triple with the same coefficient.
pub fn conjugate_transport(
    nu: &Partition,
    mu: &Partition,
    lambda: &Partition,
) -> (Partition, Partition, Partition) {
    if mu.size().is_multiple_of(2) {
        (nu.clone(), mu.conjugate(), lambda.conjugate())
    } else {
        (nu.conjugate(), mu.conjugate(), lambda.conjugate())
    }
}

/// `ν^M`: ν when `|μ|` is even, `ν^T` when odd.
pub fn nu_m(nu: &Partition, mu: &Partition) -> Partition {
    if mu.size().is_multiple_of(2) {
        nu.clone()
    } else {
        nu.conjugate()
    }
}

struct ExpansionState {
    /// All partitions of the grade, lex descending.
    ladder: Vec<Partition>,
    /// Index of the next uncomputed rung (starts at `maxp`).
    cursor: usize,
    coeffs: HashMap<Partition, BigUint>,
    /// Computed constituents with nonzero coefficient, lex-descending.
    nonzero: Vec<(Partition, BigUint)>,
    pstd: Arc<HashMap<Partition, BigUint>>,
    maxp: Partition,
}

impl ExpansionState {
    fn new(nu: &Partition, mu: &Partition) -> Result<Self> {
        let grade = nu.size() * mu.size();
        let maxp = lex_max_constituent(nu, mu)?;
        let pstd = msym::pstd_table(nu, mu);
        for key in pstd.keys() {
            if key.lex_cmp(&maxp)? == std::cmp::Ordering::Greater {
                return Err(Error::Internal(format!(
                    "weight {key} above the maximal constituent {maxp}"
                )));
            }
        }
        let ladder = partitions_of(grade);
        let start = ladder
            .iter()
            .position(|p| *p == maxp)
            .ok_or_else(|| Error::Internal("maximal constituent not on ladder".into()))?;
        let mut state = ExpansionState {
            ladder,
            cursor: start,
            coeffs: HashMap::new(),
            nonzero: Vec::new(),
            pstd,
            maxp,
        };
        state.step()?; // computes the maximal constituent itself
        if state.nonzero.first().map(|(_, c)| c) != Some(&BigUint::one()) {
            return Err(Error::Internal(
                "maximal constituent must have coefficient 1".into(),
            ));
        }
        Ok(state)
    }

    fn step(&mut self) -> Result<bool> {
        let Some(alpha) = self.ladder.get(self.cursor).cloned() else {
            return Ok(false);
        };
        self.cursor += 1;
        let total = self.pstd.get(&alpha).cloned().unwrap_or_else(BigUint::zero);
        let mut subtract = BigUint::zero();
        for (beta, c) in &self.nonzero {
            if beta.strictly_dominates(&alpha).expect("equal grade") {
                subtract += c * kostka_partition(beta, &alpha);
            }
        }
        if subtract > total {
            return Err(Error::Internal(format!(
                "negative coefficient at {alpha}: the recursion subtracted more than the tableau count"
            )));
        }
        let value = total - subtract;
        if !value.is_zero() {
            self.nonzero.push((alpha.clone(), value.clone()));
        }
        self.coeffs.insert(alpha, value);
        Ok(true)
    }

    fn ensure_down_to(&mut self, lambda: &Partition) -> Result<()> {
        while !self.coeffs.contains_key(lambda) {
            if !self.step()? {
                return Err(Error::Internal(format!("ran off the ladder at {lambda}")));
            }
        }
        Ok(())
    }

    fn run_to_end(&mut self) -> Result<()> {
        while self.step()? {}
        Ok(())
    }
}

type ExpansionCache = RwLock<HashMap<(Partition, Partition), Arc<Mutex<ExpansionState>>>>;

/// Plethysm engine with a per-`(ν, μ)` expansion cache.
pub struct Engine {
    cfg: EngineConfig,
    expansions: ExpansionCache,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(EngineConfig::default())
    }
}

impl Engine {
    pub fn new(cfg: EngineConfig) -> Self {
        Engine {
            cfg,
            expansions: RwLock::new(HashMap::new()),
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.cfg.max_degree
    }

    fn check_inputs(&self, nu: &Partition, mu: &Partition) -> Result<u32> {
        if nu.is_empty() || mu.is_empty() {
            return Err(Error::Precondition(
                "plethysm needs nonempty partitions".into(),
            ));
        }
        let grade = nu.size() * mu.size();
        if grade > self.cfg.max_degree {
            return Err(Error::Budget {
                degree: grade,
                budget: self.cfg.max_degree,
            });
        }
        Ok(grade)
    }

    fn state(&self, nu: &Partition, mu: &Partition) -> Result<Arc<Mutex<ExpansionState>>> {
        let key = (nu.clone(), mu.clone());
        if let Some(s) = self.expansions.read().unwrap().get(&key) {
            return Ok(s.clone());
        }
        let state = Arc::new(Mutex::new(ExpansionState::new(nu, mu)?));
        let mut map = self.expansions.write().unwrap();
        Ok(map.entry(key).or_insert(state).clone())
    }

    /// `p(ν, μ, λ)`.
    pub fn coefficient(
        &self,
        nu: &Partition,
        mu: &Partition,
        lambda: &Partition,
    ) -> Result<BigUint> {
        let grade = self.check_inputs(nu, mu)?;
        if lambda.size() != grade {
            return Err(Error::SizeMismatch {
                left: format!("{nu} o {mu}"),
                right: lambda.to_string(),
                left_size: grade,
                right_size: lambda.size(),
            });
        }
        let state = self.state(nu, mu)?;
        let mut state = state.lock().unwrap();
        if lambda.lex_cmp(&state.maxp)? == std::cmp::Ordering::Greater {
            return Ok(BigUint::zero());
        }
        state.ensure_down_to(lambda)?;
        Ok(state.coeffs[lambda].clone())
    }

    /// Complete Schur expansion of `s_ν ∘ s_μ`.
    pub fn expand(&self, nu: &Partition, mu: &Partition) -> Result<SchurExpansion> {
        let grade = self.check_inputs(nu, mu)?;
        let state = self.state(nu, mu)?;
        let mut guard = state.lock().unwrap();
        guard.run_to_end()?;
        Ok(SchurExpansion {
            grade,
            terms: guard.nonzero.iter().cloned().collect(),
        })
    }

    /// `p(ν, μ) = max_α p(ν, μ, α)`.
    pub fn max_multiplicity(&self, nu: &Partition, mu: &Partition) -> Result<BigUint> {
        Ok(self.expand(nu, mu)?.max_coefficient())
    }

    /// Walks the expansion in decreasing lexicographic order and returns the
    /// first constituent with coefficient at least `threshold`.
    pub fn first_with_multiplicity(
        &self,
        nu: &Partition,
        mu: &Partition,
        threshold: &BigUint,
    ) -> Result<Option<(Partition, BigUint)>> {
        self.check_inputs(nu, mu)?;
        let state = self.state(nu, mu)?;
        let mut guard = state.lock().unwrap();
        let mut seen = 0usize;
        loop {
            while seen < guard.nonzero.len() {
                let (k, v) = &guard.nonzero[seen];
                seen += 1;
                if v >= threshold {
                    return Ok(Some((k.clone(), v.clone())));
                }
            }
            if !guard.step()? {
                return Ok(None);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn coeff(nu: &str, mu: &str, lam: &str) -> u64 {
        let e = Engine::default();
        let c = e.coefficient(&p(nu), &p(mu), &p(lam)).unwrap();
        u64::try_from(&c).unwrap()
    }

    #[test]
    fn lex_max_examples() {
        assert_eq!(lex_max_constituent(&p("2"), &p("2,1")).unwrap(), p("4,2"));
        assert_eq!(lex_max_constituent(&p("1,1"), &p("2")).unwrap(), p("3,1"));
        assert_eq!(
            lex_max_constituent(&p("2,1"), &p("2,1")).unwrap(),
            p("6,2,1")
        );
        // agrees with ss[(2)] for the (1^2) ∘ (2) case
        assert_eq!(p("2").shift_symmetric().unwrap(), p("3,1"));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(coeff("3", "2", "4,2"), 1);
        assert_eq!(coeff("3", "2", "3,2,1"), 0);
        assert_eq!(coeff("2,2,2", "2", "6,4,2"), 2);
        assert_eq!(coeff("4,4", "2", "10,4,2"), 2);
    }

    #[test]
    fn coefficient_above_max_is_zero() {
        let e = Engine::default();
        // (6) is lex-greater than maxp((1,1,1),(2)) = (4,1,1)
        assert!(e
            .coefficient(&p("1,1,1"), &p("2"), &p("6"))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn expand_examples() {
        let e = Engine::default();
        let x = e.expand(&p("2"), &p("2")).unwrap();
        assert_eq!(x.terms.len(), 2);
        assert_eq!(x.coefficient(&p("4")), BigUint::one());
        assert_eq!(x.coefficient(&p("2,2")), BigUint::one());

        let x = e.expand(&p("1,1,1"), &p("2")).unwrap();
        assert_eq!(x.terms.len(), 2);
        assert_eq!(x.coefficient(&p("4,1,1")), BigUint::one());
        assert_eq!(x.coefficient(&p("3,3")), BigUint::one());

        let x = e.expand(&p("2,1"), &p("2")).unwrap();
        assert_eq!(x.terms.len(), 3);
        for lam in ["5,1", "4,2", "3,2,1"] {
            assert_eq!(x.coefficient(&p(lam)), BigUint::one(), "{lam}");
        }
    }

    #[test]
    fn conjugate_transport_examples() {
        let t = conjugate_transport(&p("3"), &p("2"), &p("4,2"));
        assert_eq!(t, (p("3"), p("1,1"), p("2,2,1,1")));

        let t = conjugate_transport(&p("2"), &p("2,1"), &p("4,2"));
        assert_eq!(t, (p("1,1"), p("2,1"), p("2,2,1,1")));

        // double application is the identity
        let back = conjugate_transport(&t.0, &t.1, &t.2);
        assert_eq!(back, (p("2"), p("2,1"), p("4,2")));
    }

    #[test]
    fn conjugate_transport_equal_coefficient() {
        let e = Engine::default();
        for (nu, mu) in [
            (p("2"), p("2,1")),
            (p("2,1"), p("2")),
            (p("3"), p("3")),
            (p("2,2"), p("2")),
            (p("1,1"), p("3,1")),
        ] {
            let x = e.expand(&nu, &mu).unwrap();
            for (lam, c) in &x.terms {
                let (nu2, mu2, lam2) = conjugate_transport(&nu, &mu, lam);
                assert_eq!(
                    e.coefficient(&nu2, &mu2, &lam2).unwrap(),
                    *c,
                    "{nu} o {mu} at {lam}"
                );
            }
        }
    }

    #[test]
    fn max_multiplicity_examples() {
        let e = Engine::default();
        assert_eq!(
            e.max_multiplicity(&p("2,1"), &p("3,1")).unwrap(),
            BigUint::from(7u32)
        );
        assert_eq!(
            e.max_multiplicity(&p("4"), &p("3,1")).unwrap(),
            BigUint::from(15u32)
        );
        assert_eq!(
            e.max_multiplicity(&p("1,1,1"), &p("2,2")).unwrap(),
            BigUint::one()
        );
    }

    #[test]
    fn budget_is_enforced() {
        let e = Engine::new(EngineConfig { max_degree: 10 });
        match e.expand(&p("4"), &p("3")) {
            Err(Error::Budget {
                degree: 12,
                budget: 10,
            }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn first_with_multiplicity_walks_lex_order() {
        let e = Engine::default();
        let hit = e
            .first_with_multiplicity(&p("2,2,2"), &p("2"), &BigUint::from(2u32))
            .unwrap()
            .unwrap();
        assert_eq!(hit.0, p("6,4,2"));
        assert_eq!(hit.1, BigUint::from(2u32));
    }
}

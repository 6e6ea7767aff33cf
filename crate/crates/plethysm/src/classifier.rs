//! The multiplicity-freeness decision procedure, the outer-product
//! predicate, and witness certificates grown from seeds of multiplicity.

use crate::engine::{conjugate_transport, Engine};
use crate::near_maximal::{nu_bar, second_layer_coeff};
use crate::partition::Partition;
use crate::{Error, Result};
use num_bigint::BigUint;
use std::collections::HashSet;
use std::fmt;

/// Which clause of the classification fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    /// ν or μ is (1).
    One,
    /// ν ⊢ 2 and μ is a rectangle, an almost rectangle, or a hook.
    Two,
    /// μ ⊢ 2 and ν is linear or one of the finitely many exceptions.
    Three,
    /// The finite list of small exceptional products.
    Four,
    NotListed,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Clause::One => "i",
            Clause::Two => "ii",
            Clause::Three => "iii",
            Clause::Four => "iv",
            Clause::NotListed => "not listed",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MFVerdict {
    pub nu: Partition,
    pub mu: Partition,
    pub verdict: bool,
    pub clause: Clause,
}

fn p(s: &str) -> Partition {
    Partition::parse(s).expect("literal partition")
}

/// The ν-exceptions of clause (iii): `(4,1), (3,1), (2,1^a) for 1 ≤ a ≤ 6,
/// (2^2), (3^2), (2^2,1)`.
pub fn clause_three_exceptions() -> Vec<Partition> {
    let mut list = vec![p("4,1"), p("3,1"), p("2,2"), p("3,3"), p("2,2,1")];
    for a in 1..=6u32 {
        let mut parts = vec![2u32];
        parts.extend(std::iter::repeat_n(1, a as usize));
        list.push(Partition::new(parts).unwrap());
    }
    list
}

fn all_parts_equal(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] == w[1])
}

/// Rectangle, `(a+1, a^{b−1})`, `(a^b, 1)`, or `(a^{b−1}, a−1)`.
pub fn is_almost_rectangle(mu: &Partition) -> bool {
    if mu.is_empty() {
        return false;
    }
    if mu.is_rectangle() {
        return true;
    }
    let parts = mu.parts();
    let ell = parts.len();
    if ell >= 2 {
        // (a+1, a^{b-1})
        if all_parts_equal(&parts[1..]) && parts[0] == parts[1] + 1 {
            return true;
        }
        // (a^{b-1}, a-1) and its special case (a^b, 1) with a = 2
        if all_parts_equal(&parts[..ell - 1]) && parts[ell - 1] + 1 == parts[0] {
            return true;
        }
        // (a^b, 1)
        if all_parts_equal(&parts[..ell - 1]) && parts[ell - 1] == 1 {
            return true;
        }
    }
    false
}

/// Exact clause match against the classification theorem.
pub fn is_multiplicity_free(nu: &Partition, mu: &Partition) -> MFVerdict {
    let one = Partition::single_row(1);
    let verdict = |verdict, clause| MFVerdict {
        nu: nu.clone(),
        mu: mu.clone(),
        verdict,
        clause,
    };
    if *nu == one || *mu == one {
        return verdict(true, Clause::One);
    }
    if nu.size() == 2 && (is_almost_rectangle(mu) || mu.is_hook()) {
        return verdict(true, Clause::Two);
    }
    if mu.size() == 2 && (nu.is_linear() || clause_three_exceptions().contains(nu)) {
        return verdict(true, Clause::Three);
    }
    // clause (iv): the finite exceptional list
    let in_four = {
        if nu.is_linear() && mu.is_linear() && nu.size() + mu.size() <= 8 {
            let banned = [
                (p("5"), p("3")),
                (p("1,1,1,1,1"), p("1,1,1")),
                (p("4"), p("4")),
                (p("4"), p("1,1,1,1")),
            ];
            !banned.contains(&(nu.clone(), mu.clone()))
        } else if *nu == p("1,1") {
            *mu == p("4,2") || *mu == p("2,2,1,1")
        } else if *nu == p("1,1,1") {
            *mu == p("6") || *mu == p("1,1,1,1,1,1") || *mu == p("2,2")
        } else if *nu == p("2,1") {
            *mu == p("3") || *mu == p("1,1,1")
        } else {
            false
        }
    };
    if in_four {
        return verdict(true, Clause::Four);
    }
    verdict(false, Clause::NotListed)
}

/// Multiplicity-freeness of the outer product `s_μ ⊠ s_ν`.
pub fn outer_mf(mu: &Partition, nu: &Partition) -> bool {
    let two_line_rect = |x: &Partition| x.is_rectangle() && x.is_two_line();
    mu.is_linear()
        || nu.is_linear()
        || (mu.is_rectangle() && nu.is_rectangle())
        || (mu.is_rectangle() && nu.is_near_rectangle())
        || (nu.is_rectangle() && mu.is_near_rectangle())
        || (two_line_rect(mu) && nu.is_fat_hook())
        || (two_line_rect(nu) && mu.is_fat_hook())
}

/// One growth step of a witness derivation. Every step maps a triple
/// `(ν, μ, λ)` to a triple whose coefficient is at least as large.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowStep {
    /// Prepend the row `(r)` to `μ` and `(n r)` to `λ`; needs `r ≥ w(μ)`
    /// and preserves the coefficient exactly.
    UnionRow { r: u32 },
    /// Replace `μ` by `α + μ` and `λ` by `n·α + λ`.
    AddColumn { alpha: Partition },
    /// Replace `ν` by `ν + (r)` and `λ` by `λ + r·μ`.
    BrionRow { r: u32 },
    /// Conjugation transport; preserves the coefficient exactly.
    Conjugate,
}

impl fmt::Display for GrowStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowStep::UnionRow { r } => write!(f, "union_row({r})"),
            GrowStep::AddColumn { alpha } => write!(f, "add_column({alpha})"),
            GrowStep::BrionRow { r } => write!(f, "brion_row({r})"),
            GrowStep::Conjugate => write!(f, "conjugate"),
        }
    }
}

/// Applies a growth step, checking its precondition.
pub fn grow(
    step: &GrowStep,
    nu: &Partition,
    mu: &Partition,
    lambda: &Partition,
) -> Result<(Partition, Partition, Partition)> {
    let n = nu.size();
    match step {
        GrowStep::UnionRow { r } => {
            if *r < mu.width() {
                return Err(Error::Precondition(format!(
                    "union_row needs r >= w(mu) = {}, got {r}",
                    mu.width()
                )));
            }
            Ok((
                nu.clone(),
                mu.union(&Partition::single_row(*r)),
                lambda.union(&Partition::single_row(n * r)),
            ))
        }
        GrowStep::AddColumn { alpha } => {
            let scaled = Partition::from_unsorted(alpha.parts().iter().map(|&x| x * n));
            // n·α keeps the shape of α, so the part-wise sums stay partitions
            let scaled_exact =
                Partition::new(alpha.parts().iter().map(|&x| x * n).collect::<Vec<_>>())
                    .unwrap_or(scaled);
            Ok((nu.clone(), alpha.add(mu), scaled_exact.add(lambda)))
        }
        GrowStep::BrionRow { r } => {
            let scaled = Partition::new(mu.parts().iter().map(|&x| x * r).collect::<Vec<_>>())
                .expect("scaling keeps partitions");
            Ok((
                nu.add(&Partition::single_row(*r)),
                mu.clone(),
                lambda.add(&scaled),
            ))
        }
        GrowStep::Conjugate => {
            let (a, b, c) = conjugate_transport(nu, mu, lambda);
            Ok((a, b, c))
        }
    }
}

/// The seed identity a derivation starts from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub nu: Partition,
    pub mu: Partition,
    pub lambda: Partition,
    pub at_least: BigUint,
    pub origin: String,
}

/// A replayable witness of multiplicity: a seed plus growth steps whose
/// replay transforms the seed triple into `(nu, mu, witness)`. The claimed
/// coefficient bound is `≥ 2`; it is engine-confirmed when within budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub nu: Partition,
    pub mu: Partition,
    pub witness: Partition,
    pub at_least: BigUint,
    pub seed: Seed,
    pub steps: Vec<GrowStep>,
    pub engine_verified: bool,
}

impl WitnessCertificate {
    /// Replays the derivation and checks it lands on `(nu, mu, witness)`.
    pub fn replay(&self) -> Result<()> {
        let mut triple = (
            self.seed.nu.clone(),
            self.seed.mu.clone(),
            self.seed.lambda.clone(),
        );
        for step in &self.steps {
            triple = grow(step, &triple.0, &triple.1, &triple.2)?;
        }
        if triple != (self.nu.clone(), self.mu.clone(), self.witness.clone()) {
            return Err(Error::Internal(format!(
                "replay landed on ({}, {}, {}) instead of ({}, {}, {})",
                triple.0, triple.1, triple.2, self.nu, self.mu, self.witness
            )));
        }
        Ok(())
    }
}

/// Closed-form seed for `(ν, (2))` with `ν` neither linear nor one of the
/// clause (iii) exceptions. Returns the witness partition, the coefficient,
/// and a short provenance tag.
fn mu2_seed(nu: &Partition) -> Option<Seed> {
    if nu.is_linear() || clause_three_exceptions().contains(nu) {
        return None;
    }
    let two = p("2");
    let seed = |lambda: Partition, c: u32, origin: &str| {
        Some(Seed {
            nu: nu.clone(),
            mu: two.clone(),
            lambda,
            at_least: BigUint::from(c),
            origin: origin.to_string(),
        })
    };

    // three or more removable nodes: the second-layer value at ν̄ − ε_1 + ε_2
    if nu.rem() >= 3 {
        let lambda = nu_bar(nu).remove_box(1).ok()?.add_box(2).ok()?;
        let c = second_layer_coeff(nu, &lambda).ok()?;
        if c >= BigUint::from(2u32) {
            return Some(Seed {
                nu: nu.clone(),
                mu: two,
                lambda,
                at_least: c,
                origin: "three removable nodes, second layer".into(),
            });
        }
        return None;
    }

    // proper fat hook: search the second layer, except the (a+k, a^b) family
    if nu.is_proper_fat_hook() {
        let base1 = nu_bar(nu).remove_box(1).ok()?;
        for c in 2..=base1.len() + 1 {
            let Ok(lambda) = base1.add_box(c) else {
                continue;
            };
            let v = second_layer_coeff(nu, &lambda).ok()?;
            if v >= BigUint::from(2u32) {
                return Some(Seed {
                    nu: nu.clone(),
                    mu: two,
                    lambda,
                    at_least: v,
                    origin: "proper fat hook, second layer".into(),
                });
            }
        }
        return None; // the (a+k, a^b) family reduces to a rectangle first
    }

    let parts = nu.parts();
    // rectangles
    if nu.is_rectangle() {
        let (a, b) = (nu.width(), nu.len() as u32);
        if b >= 3 && a >= 2 {
            let bar = nu_bar(nu);
            let mut v: Vec<u32> = (1..=bar.len()).map(|i| bar.part(i)).collect();
            v[0] -= 2;
            v[1] += 2;
            return seed(
                Partition::new(v).ok()?,
                2,
                "rectangle, two boxes moved below the top row",
            );
        }
        if b == 2 && a >= 4 {
            return seed(
                Partition::new(vec![3 * a - 2, a, 2]).ok()?,
                2,
                "two-row rectangle",
            );
        }
        return None;
    }

    // hooks (c, 1^d)
    if nu.is_hook() && nu.len() >= 3 {
        let d = nu.len() as u32 - 1;
        if parts[0] == 3 && d >= 2 {
            let mut v = vec![4 + d, 3];
            v.extend(std::iter::repeat_n(1, d as usize - 1));
            return seed(Partition::new(v).ok()?, 2, "hook family (3,1^a)");
        }
        if parts[0] == 2 && d >= 7 {
            let n = nu.size();
            let beta = Partition::new(vec![n - 4, 3, 1]).ok()?;
            return seed(
                beta.shift_symmetric().ok()?,
                2,
                "hook family (2,1^b), shift-symmetric witness",
            );
        }
        return None; // wider hooks reduce to (3,1^a) by a row step
    }

    // two-line shapes
    if nu.is_two_line() {
        if nu.len() == 2 {
            // (b, a): small direct seeds; larger ones reduce through them
            match (parts[0], parts[1]) {
                (5, 1) => return seed(p("6,4,2"), 2, "two-row seed"),
                (4, 2) => return seed(p("6,4,2"), 3, "two-row seed"),
                (4, 3) => return seed(p("8,4,2"), 3, "two-row seed"),
                (3, 2) => return seed(p("6,2,2"), 2, "two-row seed"),
                _ => return None,
            }
        }
        // two columns: (2^a, 1^b)
        let a = parts.iter().filter(|&&x| x == 2).count() as u32;
        let b = parts.iter().filter(|&&x| x == 1).count() as u32;
        if a + b != nu.len() as u32 {
            return None;
        }
        if a >= 2 && b >= 2 {
            let mut v = vec![a + b + 1, a + 2, 2];
            v.extend(std::iter::repeat_n(1, (2 * a + b - 5) as usize));
            let c = if b == 2 { 2 } else { 3 };
            return seed(Partition::new(v).ok()?, c, "two-column family (2^a,1^b)");
        }
        if a >= 3 && b == 1 {
            let mut v = vec![a + 2, a + 1, 3];
            v.extend(std::iter::repeat_n(1, (2 * a - 4) as usize));
            return seed(Partition::new(v).ok()?, 2, "two-column family (2^a,1)");
        }
        return None;
    }

    None
}

const SEED_SEARCH_LIMIT: u32 = 24;

/// Pattern-matching witness search: reverse growth moves toward a seed.
struct WitnessSearch<'a> {
    engine: &'a Engine,
    visited: HashSet<(Partition, Partition)>,
}

impl WitnessSearch<'_> {
    fn terminal(&self, nu: &Partition, mu: &Partition) -> Option<(Seed, Vec<GrowStep>)> {
        if *mu == p("2") {
            return mu2_seed(nu).map(|s| (s, Vec::new()));
        }
        if *mu == p("1,1") {
            // conjugation transports the (ν, (2)) seed; |μ| = 2 keeps ν fixed
            return mu2_seed(nu).map(|s| (s, vec![GrowStep::Conjugate]));
        }
        // the classes the classification itself settles by computation:
        // linear ν and the finite clause (iii) exceptions
        let budget = SEED_SEARCH_LIMIT.min(self.engine.max_degree());
        if (nu.is_linear() || clause_three_exceptions().contains(nu))
            && nu.size() * mu.size() <= budget
            && !is_multiplicity_free(nu, mu).verdict
        {
            if let Ok(Some((lambda, c))) =
                self.engine
                    .first_with_multiplicity(nu, mu, &BigUint::from(2u32))
            {
                return Some((
                    Seed {
                        nu: nu.clone(),
                        mu: mu.clone(),
                        lambda,
                        at_least: c,
                        origin: "direct computation".into(),
                    },
                    Vec::new(),
                ));
            }
        }
        None
    }

    fn search(&mut self, nu: &Partition, mu: &Partition) -> Option<(Seed, Vec<GrowStep>)> {
        if !self.visited.insert((nu.clone(), mu.clone())) {
            return None;
        }
        if let Some(hit) = self.terminal(nu, mu) {
            return Some(hit);
        }
        // vertical strips on μ (reverse of AddColumn with α = (1^r))
        for r in 1..=mu.len() {
            if mu.part(r) == mu.part(r + 1) {
                continue;
            }
            let alpha = Partition::single_column(r as u32);
            if let Some(smaller) = mu.checked_sub(&alpha) {
                if smaller.size() >= 2 {
                    if let Some((seed, mut steps)) = self.search(nu, &smaller) {
                        steps.push(GrowStep::AddColumn { alpha });
                        return Some((seed, steps));
                    }
                }
            }
        }
        // row strip on μ (reverse of UnionRow)
        let rest = mu.strip_first_row();
        if rest.size() >= 2 {
            if let Some((seed, mut steps)) = self.search(nu, &rest) {
                steps.push(GrowStep::UnionRow { r: mu.part(1) });
                return Some((seed, steps));
            }
        }
        // Brion strips on the first row of ν, widest first
        if nu.part(1) > nu.part(2) {
            for r in (1..=(nu.part(1) - nu.part(2))).rev() {
                let mut parts = nu.parts().to_vec();
                parts[0] -= r;
                let Ok(smaller) = Partition::new(parts) else {
                    continue;
                };
                if smaller.is_empty() {
                    continue;
                }
                if let Some((seed, mut steps)) = self.search(&smaller, mu) {
                    steps.push(GrowStep::BrionRow { r });
                    return Some((seed, steps));
                }
            }
        }
        // conjugation transport
        let (cnu, cmu) = if mu.size().is_multiple_of(2) {
            (nu.clone(), mu.conjugate())
        } else {
            (nu.conjugate(), mu.conjugate())
        };
        if (&cnu, &cmu) != (nu, mu) {
            if let Some((seed, mut steps)) = self.search(&cnu, &cmu) {
                steps.push(GrowStep::Conjugate);
                return Some((seed, steps));
            }
        }
        None
    }
}

/// Builds a replayable witness certificate for a pair that is not
/// multiplicity-free. The coefficient is engine-confirmed when the pair is
/// within the engine budget.
pub fn witness(engine: &Engine, nu: &Partition, mu: &Partition) -> Result<WitnessCertificate> {
    let verdict = is_multiplicity_free(nu, mu);
    if verdict.verdict {
        return Err(Error::Precondition(format!(
            "s_{nu} o s_{mu} is multiplicity-free (clause {})",
            verdict.clause
        )));
    }
    let mut search = WitnessSearch {
        engine,
        visited: HashSet::new(),
    };
    let Some((seed, steps)) = search.search(nu, mu) else {
        return Err(Error::Precondition(format!(
            "no derivation for s_{nu} o s_{mu} within the growth lemmas at budget {}",
            engine.max_degree()
        )));
    };
    let mut triple = (seed.nu.clone(), seed.mu.clone(), seed.lambda.clone());
    for step in &steps {
        triple = grow(step, &triple.0, &triple.1, &triple.2)?;
    }
    if (&triple.0, &triple.1) != (nu, mu) {
        return Err(Error::Internal(format!(
            "witness derivation landed on ({}, {})",
            triple.0, triple.1
        )));
    }
    let witness_lambda = triple.2;
    let grade = nu.size() * mu.size();
    let mut engine_verified = false;
    if grade <= engine.max_degree() {
        let exact = engine.coefficient(nu, mu, &witness_lambda)?;
        if exact < BigUint::from(2u32) {
            return Err(Error::Internal(format!(
                "witness {witness_lambda} for s_{nu} o s_{mu} has coefficient {exact}"
            )));
        }
        engine_verified = true;
    }
    let cert = WitnessCertificate {
        nu: nu.clone(),
        mu: mu.clone(),
        witness: witness_lambda,
        at_least: seed.at_least.clone().max(BigUint::from(2u32)),
        seed,
        steps,
        engine_verified,
    };
    cert.replay()?;
    Ok(cert)
}

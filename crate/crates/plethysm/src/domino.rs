//! Carré–Leclerc domino tableaux: spin, reading words, the lattice
//! condition, the rectangle and near-rectangle structure theory, and the two
//! deterministic construction algorithms for shapes `(a^b, a−1)`.

use crate::engine::SchurExpansion;
use crate::partition::Partition;
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// One domino, identified by its topmost-leftmost cell (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Domino {
    pub row: u16,
    pub col: u16,
    pub horizontal: bool,
    pub label: u32,
}

impl Domino {
    pub fn cells(&self) -> [(u16, u16); 2] {
        if self.horizontal {
            [(self.row, self.col), (self.row, self.col + 1)]
        } else {
            [(self.row, self.col), (self.row + 1, self.col)]
        }
    }
}

type CellGrid = Vec<Vec<Option<(usize, u32)>>>;

/// A labelled domino tiling of the doubled diagram `[λ]^{2×2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominoTableau {
    base: Partition,
    doubled_rows: Vec<u32>,
    dominoes: Vec<Domino>,
}

/// Row lengths of `[λ]^{2×2}`.
pub fn doubled_rows(lambda: &Partition) -> Vec<u32> {
    lambda
        .parts()
        .iter()
        .flat_map(|&p| [2 * p, 2 * p])
        .collect()
}

impl DominoTableau {
    pub fn new(base: Partition, mut dominoes: Vec<Domino>) -> Result<Self> {
        dominoes.sort();
        let t = DominoTableau {
            doubled_rows: doubled_rows(&base),
            base,
            dominoes,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn base_shape(&self) -> &Partition {
        &self.base
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    fn in_shape(&self, row: u16, col: u16) -> bool {
        row >= 1
            && col >= 1
            && (row as usize) <= self.doubled_rows.len()
            && col as u32 <= self.doubled_rows[row as usize - 1]
    }

    /// Map cell -> (owner, label); errors on overlap, spill, or gaps.
    fn grid(&self) -> Result<CellGrid> {
        let mut grid: CellGrid = self
            .doubled_rows
            .iter()
            .map(|&w| vec![None; w as usize])
            .collect();
        for (i, d) in self.dominoes.iter().enumerate() {
            if d.label == 0 {
                return Err(Error::Precondition("domino labels are positive".into()));
            }
            for (r, c) in d.cells() {
                if !self.in_shape(r, c) {
                    return Err(Error::Precondition(format!(
                        "domino at ({},{}) leaves the diagram",
                        d.row, d.col
                    )));
                }
                let slot = &mut grid[r as usize - 1][c as usize - 1];
                if slot.is_some() {
                    return Err(Error::Precondition(format!("overlap at ({r},{c})")));
                }
                *slot = Some((i, d.label));
            }
        }
        if grid.iter().flatten().any(|s| s.is_none()) {
            return Err(Error::Precondition(
                "tiling does not cover the diagram".into(),
            ));
        }
        Ok(grid)
    }

    /// Semistandard: weak increase along rows, strict increase down columns
    /// except inside a single vertical domino.
    pub fn validate(&self) -> Result<()> {
        let grid = self.grid()?;
        for r in 0..grid.len() {
            for c in 0..grid[r].len() {
                let (owner, v) = grid[r][c].unwrap();
                if c + 1 < grid[r].len() {
                    let (_, right) = grid[r][c + 1].unwrap();
                    if v > right {
                        return Err(Error::Precondition(format!(
                            "row {} not weakly increasing at column {}",
                            r + 1,
                            c + 1
                        )));
                    }
                }
                if r + 1 < grid.len() && c < grid[r + 1].len() {
                    let (other, below) = grid[r + 1][c].unwrap();
                    if owner != other && v >= below {
                        return Err(Error::Precondition(format!(
                            "column {} not strictly increasing at row {}",
                            c + 1,
                            r + 1
                        )));
                    }
                }
            }
        }
        if !self.horizontal_count().is_multiple_of(2) {
            return Err(Error::Internal(
                "odd number of horizontal dominoes on a doubled shape".into(),
            ));
        }
        Ok(())
    }

    pub fn horizontal_count(&self) -> usize {
        self.dominoes.iter().filter(|d| d.horizontal).count()
    }

    /// Spin type: half the number of horizontal dominoes, mod 2.
    pub fn spin(&self) -> u8 {
        ((self.horizontal_count() / 2) % 2) as u8
    }

    /// Weight composition: entry `k−1` counts dominoes labelled `k` (half the
    /// cell count per label).
    pub fn weight(&self) -> Vec<u32> {
        let max = self.dominoes.iter().map(|d| d.label).max().unwrap_or(0);
        let mut w = vec![0u32; max as usize];
        for d in &self.dominoes {
            w[d.label as usize - 1] += 1;
        }
        w
    }

    /// Reading word: labels down columns right-to-left, each domino recorded
    /// at its leftmost column (as late as possible).
    pub fn reading_word(&self) -> Vec<u32> {
        let max_col = self.doubled_rows.first().copied().unwrap_or(0) as u16;
        let mut word = Vec::with_capacity(self.dominoes.len());
        for col in (1..=max_col).rev() {
            let mut in_col: Vec<&Domino> = self.dominoes.iter().filter(|d| d.col == col).collect();
            in_col.sort_by_key(|d| d.row);
            word.extend(in_col.iter().map(|d| d.label));
        }
        word
    }

    /// Plain-text rendering of the tiling with labels.
    pub fn render(&self) -> String {
        let grid = self.grid().expect("validated");
        let width = self
            .dominoes
            .iter()
            .map(|d| d.label.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        let cols = self.doubled_rows.first().copied().unwrap_or(0) as usize;
        for r in 0..=self.doubled_rows.len() {
            let mut line = String::new();
            for c in 0..cols {
                let above = if r > 0 && c < grid[r - 1].len() {
                    grid[r - 1][c].map(|(o, _)| o)
                } else {
                    None
                };
                let here = if r < grid.len() && c < grid[r].len() {
                    grid[r][c].map(|(o, _)| o)
                } else {
                    None
                };
                let boundary = above != here || (above.is_none() && here.is_none());
                let boundary = boundary && !(above.is_none() && here.is_none());
                line.push('+');
                let fill = if boundary { '-' } else { ' ' };
                for _ in 0..width + 2 {
                    line.push(fill);
                }
            }
            line.push('+');
            out.push_str(line.trim_end());
            out.push('\n');
            if r == self.doubled_rows.len() {
                break;
            }
            let mut line = String::new();
            for c in 0..=grid[r].len() {
                let left = if c > 0 {
                    grid[r][c - 1].map(|(o, _)| o)
                } else {
                    None
                };
                let here = if c < grid[r].len() {
                    grid[r][c].map(|(o, _)| o)
                } else {
                    None
                };
                let boundary = left != here || c == 0 || c == grid[r].len();
                line.push(if boundary { '|' } else { ' ' });
                if c < grid[r].len() {
                    let label = grid[r][c].unwrap().1.to_string();
                    line.push_str(&format!(" {label:>width$} "));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Lattice permutation test: in every prefix, each value `i ≥ 2` occurs at
/// most as often as `i − 1` (the bracket-pairing rule).
pub fn is_lattice(word: &[u32]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0u32; max as usize + 1];
    for &v in word {
        counts[v as usize] += 1;
        if v >= 2 && counts[v as usize] > counts[v as usize - 1] {
            return false;
        }
    }
    true
}

/// Scan-order positions: columns right-to-left, rows top-to-bottom, so the
/// lattice condition is checkable on the growing reading-word prefix.
fn scan_cells(doubled: &[u32]) -> Vec<(u16, u16)> {
    let max_col = doubled.first().copied().unwrap_or(0) as u16;
    let mut cells = Vec::new();
    for col in (1..=max_col).rev() {
        for (r, &w) in doubled.iter().enumerate() {
            if col as u32 <= w {
                cells.push((r as u16 + 1, col));
            }
        }
    }
    cells
}

struct DomSearch<'a> {
    doubled: Vec<u32>,
    cells: Vec<(u16, u16)>,
    grid: CellGrid,
    placed: Vec<Domino>,
    budget: Option<Vec<i64>>,
    max_label: u32,
    word_counts: Vec<u32>,
    out: &'a mut dyn FnMut(&[Domino]),
}

impl DomSearch<'_> {
    fn cell(&self, r: u16, c: u16) -> Option<(usize, u32)> {
        if r < 1 || c < 1 {
            return None;
        }
        let (r, c) = (r as usize - 1, c as usize - 1);
        if r >= self.grid.len() || c >= self.grid[r].len() {
            return None;
        }
        self.grid[r][c]
    }

    fn in_shape(&self, r: u16, c: u16) -> bool {
        r >= 1
            && c >= 1
            && (r as usize) <= self.doubled.len()
            && c as u32 <= self.doubled[r as usize - 1]
    }

    fn set(&mut self, r: u16, c: u16, v: Option<(usize, u32)>) {
        self.grid[r as usize - 1][c as usize - 1] = v;
    }

    /// Label `v` at `(r,c)` against already placed neighbours; `mate` is the
    /// other cell of the same domino.
    fn fits(&self, r: u16, c: u16, v: u32, mate: (u16, u16)) -> bool {
        if c >= 2 && (r, c - 1) != mate {
            if let Some((_, left)) = self.cell(r, c - 1) {
                if left > v {
                    return false;
                }
            }
        }
        if (r, c + 1) != mate {
            if let Some((_, right)) = self.cell(r, c + 1) {
                if v > right {
                    return false;
                }
            }
        }
        if r >= 2 && (r - 1, c) != mate {
            if let Some((_, above)) = self.cell(r - 1, c) {
                if above >= v {
                    return false;
                }
            }
        }
        if (r + 1, c) != mate {
            if let Some((_, below)) = self.cell(r + 1, c) {
                if v >= below {
                    return false;
                }
            }
        }
        true
    }

    fn rec(&mut self, pos: usize) {
        if pos == self.cells.len() {
            if let Some(b) = &self.budget {
                if b.iter().any(|&x| x != 0) {
                    return;
                }
            }
            let doms = self.placed.clone();
            (self.out)(&doms);
            return;
        }
        let (r, c) = self.cells[pos];
        if let Some((id, label)) = self.cell(r, c) {
            let d = self.placed[id];
            // recording cell of the domino: its top-left cell
            if d.col == c && d.row == r {
                if self.word_push(label) {
                    self.rec(pos + 1);
                    self.word_pop(label);
                }
            } else {
                self.rec(pos + 1);
            }
            return;
        }
        // vertical (r, c)-(r+1, c): recorded here and now
        if self.in_shape(r + 1, c) && self.cell(r + 1, c).is_none() {
            for v in 1..=self.max_label {
                if !self.budget_ok(v)
                    || !self.fits(r, c, v, (r + 1, c))
                    || !self.fits(r + 1, c, v, (r, c))
                    || !self.word_push(v)
                {
                    continue;
                }
                let id = self.placed.len();
                self.placed.push(Domino {
                    row: r,
                    col: c,
                    horizontal: false,
                    label: v,
                });
                self.budget_take(v);
                self.set(r, c, Some((id, v)));
                self.set(r + 1, c, Some((id, v)));
                self.rec(pos + 1);
                self.set(r, c, None);
                self.set(r + 1, c, None);
                self.budget_give(v);
                self.placed.pop();
                self.word_pop(v);
            }
        }
        // horizontal (r, c−1)-(r, c): recorded later, at column c−1
        if c >= 2 && self.in_shape(r, c - 1) && self.cell(r, c - 1).is_none() {
            for v in 1..=self.max_label {
                if !self.budget_ok(v)
                    || !self.fits(r, c, v, (r, c - 1))
                    || !self.fits(r, c - 1, v, (r, c))
                {
                    continue;
                }
                let id = self.placed.len();
                self.placed.push(Domino {
                    row: r,
                    col: c - 1,
                    horizontal: true,
                    label: v,
                });
                self.budget_take(v);
                self.set(r, c, Some((id, v)));
                self.set(r, c - 1, Some((id, v)));
                self.rec(pos + 1);
                self.set(r, c, None);
                self.set(r, c - 1, None);
                self.budget_give(v);
                self.placed.pop();
            }
        }
    }

    fn budget_ok(&self, v: u32) -> bool {
        match &self.budget {
            Some(b) => b[v as usize - 1] > 0,
            None => true,
        }
    }

    fn budget_take(&mut self, v: u32) {
        if let Some(b) = &mut self.budget {
            b[v as usize - 1] -= 1;
        }
    }

    fn budget_give(&mut self, v: u32) {
        if let Some(b) = &mut self.budget {
            b[v as usize - 1] += 1;
        }
    }

    fn word_push(&mut self, v: u32) -> bool {
        self.word_counts[v as usize] += 1;
        if v >= 2 && self.word_counts[v as usize] > self.word_counts[v as usize - 1] {
            self.word_counts[v as usize] -= 1;
            return false;
        }
        true
    }

    fn word_pop(&mut self, v: u32) {
        self.word_counts[v as usize] -= 1;
    }
}

fn dom_search(lambda: &Partition, weight: Option<&[u32]>, mut sink: impl FnMut(&[Domino])) {
    let doubled = doubled_rows(lambda);
    let max_label = match weight {
        Some(w) => w.len() as u32,
        None => 2 * lambda.size(),
    };
    let mut search = DomSearch {
        cells: scan_cells(&doubled),
        grid: doubled.iter().map(|&w| vec![None; w as usize]).collect(),
        doubled,
        placed: Vec::new(),
        budget: weight.map(|w| w.iter().map(|&x| x as i64).collect()),
        max_label,
        word_counts: vec![0; max_label as usize + 1],
        out: &mut sink,
    };
    search.rec(0);
}

/// Full `Dom(λ, α)`: semistandard domino tableaux of weight `α` whose
/// reading word is a lattice permutation.
pub fn enumerate_dom(lambda: &Partition, weight: &[u32]) -> Result<Vec<DominoTableau>> {
    let total: u32 = weight.iter().sum();
    if total != 2 * lambda.size() {
        return Err(Error::SizeMismatch {
            left: format!("doubled {lambda}"),
            right: format!("{weight:?}"),
            left_size: 2 * lambda.size(),
            right_size: total,
        });
    }
    let mut out = Vec::new();
    dom_search(lambda, Some(weight), |doms| {
        out.push(DominoTableau::new(lambda.clone(), doms.to_vec()).expect("search output valid"));
    });
    Ok(out)
}

/// `(dom_+, dom_−)` — counts of even and odd spin members of `Dom(λ, α)`.
pub fn dom_counts(lambda: &Partition, weight: &[u32]) -> Result<(BigUint, BigUint)> {
    let mut plus = BigUint::zero();
    let mut minus = BigUint::zero();
    for t in enumerate_dom(lambda, weight)? {
        if t.spin() == 0 {
            plus += BigUint::one();
        } else {
            minus += BigUint::one();
        }
    }
    Ok((plus, minus))
}

/// `(s_(2) ∘ s_μ, s_(1²) ∘ s_μ)` via the spin split of `Dom(μ, ·)`.
pub fn symmetric_square_split(
    mu: &Partition,
    max_degree: u32,
) -> Result<(SchurExpansion, SchurExpansion)> {
    let grade = 2 * mu.size();
    if grade > max_degree {
        return Err(Error::Budget {
            degree: grade,
            budget: max_degree,
        });
    }
    let mut plus: BTreeMap<Partition, BigUint> = BTreeMap::new();
    let mut minus: BTreeMap<Partition, BigUint> = BTreeMap::new();
    dom_search(mu, None, |doms| {
        let t = DominoTableau::new(mu.clone(), doms.to_vec()).expect("search output valid");
        let alpha = Partition::new(t.weight()).expect("lattice weights decrease");
        let slot = if t.spin() == 0 { &mut plus } else { &mut minus };
        slot.entry(alpha)
            .and_modify(|c| *c += BigUint::one())
            .or_insert_with(BigUint::one);
    });
    Ok((
        SchurExpansion { grade, terms: plus },
        SchurExpansion {
            grade,
            terms: minus,
        },
    ))
}

/// The admissible tableau for `hat ⊆ (a^b)`: vertical dominoes on
/// `[hat]^{2×2}`, horizontal on the complement, columns labelled 1, 2, …
pub fn admissible_tableau(hat: &Partition, a: u32, b: u32) -> Result<DominoTableau> {
    if !Partition::rectangle(a, b).contains(hat) {
        return Err(Error::Precondition(format!(
            "{hat} does not fit inside the {a}x{b} rectangle"
        )));
    }
    let conj = hat.conjugate();
    let mut doms = Vec::new();
    for j in 1..=a {
        let v = conj.part(j as usize);
        for col in [2 * j - 1, 2 * j] {
            for k in 1..=v {
                doms.push(Domino {
                    row: (2 * k - 1) as u16,
                    col: col as u16,
                    horizontal: false,
                    label: k,
                });
            }
        }
    }
    for r in 1..=2 * b {
        let w = hat.part(r.div_ceil(2) as usize);
        let mut col = 2 * w + 1;
        while col < 2 * a {
            // the horizontal rows below the vertical block are consecutive,
            // so the label down the column is just r minus the block height
            let v = conj.part(col.div_ceil(2) as usize);
            doms.push(Domino {
                row: r as u16,
                col: col as u16,
                horizontal: true,
                label: r - v,
            });
            col += 2;
        }
    }
    let t = DominoTableau::new(Partition::rectangle(a, b), doms)?;
    debug_assert!(is_lattice(&t.reading_word()));
    Ok(t)
}

/// Rectangular weight partition of `hat ⊆ (a^b)`: the three-band formula.
pub fn rectangular_weight(hat: &Partition, a: u32, b: u32) -> Result<Partition> {
    if !Partition::rectangle(a, b).contains(hat) {
        return Err(Error::Precondition(format!(
            "{hat} does not fit inside the {a}x{b} rectangle"
        )));
    }
    let ell = hat.len();
    let mut parts = Vec::with_capacity(2 * b as usize);
    for i in 1..=(2 * b) as usize {
        let v = if i <= ell {
            a + hat.part(i)
        } else if i <= 2 * b as usize - ell {
            a
        } else {
            a - hat.part(2 * b as usize + 1 - i)
        };
        parts.push(v);
    }
    Partition::new(parts)
}

/// Inverse of [`rectangular_weight`]: `hat_i = (λ_i − λ_{2b+1−i})/2`.
/// Returns `None` when `λ` is not a rectangular weight for `(a^b)`.
pub fn recover_hat(lambda: &Partition, a: u32, b: u32) -> Option<Partition> {
    if lambda.size() != 2 * a * b || lambda.len() > 2 * b as usize {
        return None;
    }
    let mut parts = Vec::with_capacity(b as usize);
    for i in 1..=b as usize {
        let hi = lambda.part(i);
        let lo = lambda.part(2 * b as usize + 1 - i);
        if hi < lo || !(hi - lo).is_multiple_of(2) {
            return None;
        }
        parts.push((hi - lo) / 2);
    }
    let hat = Partition::new(parts).ok()?;
    if !Partition::rectangle(a, b).contains(&hat) {
        return None;
    }
    if rectangular_weight(&hat, a, b).ok()? != *lambda {
        return None;
    }
    Some(hat)
}

/// `⟨s_(a^b) ⊠ s_(a^b) | s_λ⟩ ∈ {0, 1}`, with the unique member of
/// `Dom((a^b), λ)` when it is 1.
pub fn rectangle_dom(lambda: &Partition, a: u32, b: u32) -> (u8, Option<DominoTableau>) {
    match recover_hat(lambda, a, b) {
        Some(hat) => {
            let t = admissible_tableau(&hat, a, b).expect("hat fits");
            (1, Some(t))
        }
        None => (0, None),
    }
}

/// Shared setup for the `(a^b, a−1)` algorithms: splits `α` into the forced
/// rectangular band plus the multiset of final double-row labels.
struct NearRectangle {
    a: u32,
    b: u32,
    hat_conjugate: Partition,
    band: Vec<Domino>,
    pool: BTreeMap<u32, u32>,
}

impl NearRectangle {
    fn setup(a: u32, b: u32, alpha: &Partition) -> Result<Option<Self>> {
        if a < 2 || b < 1 {
            return Err(Error::Precondition(
                "near-rectangle algorithms need a >= 2, b >= 1".into(),
            ));
        }
        if alpha.size() != 2 * (a * b + a - 1) {
            return Err(Error::SizeMismatch {
                left: format!("doubled ({a}^{b},{})", a - 1),
                right: alpha.to_string(),
                left_size: 2 * (a * b + a - 1),
                right_size: alpha.size(),
            });
        }
        let mut hat_parts = Vec::new();
        for i in 1..=b as usize {
            let ai = alpha.part(i);
            if ai < a || ai > 2 * a {
                return Ok(None);
            }
            hat_parts.push(ai - a);
        }
        let Ok(hat) = Partition::new(hat_parts) else {
            return Ok(None);
        };
        let band_weight = rectangular_weight(&hat, a, b)?;
        let Some(extra) = multiset_difference(alpha, &band_weight) else {
            return Ok(None);
        };
        let mut pool: BTreeMap<u32, u32> = BTreeMap::new();
        let mut count = 0u32;
        for (label, mult) in extra {
            if label <= b {
                return Ok(None); // final-row labels always exceed b
            }
            pool.insert(label, mult);
            count += mult;
        }
        if count != 2 * a - 2 {
            return Ok(None);
        }
        let band = admissible_tableau(&hat, a, b)?.dominoes().to_vec();
        Ok(Some(NearRectangle {
            a,
            b,
            hat_conjugate: hat.conjugate(),
            band,
            pool,
        }))
    }

    /// Label of the band domino at the bottom of base column `c`.
    fn band_bottom_label(&self, c: u32) -> u32 {
        2 * self.b - self.hat_conjugate.part(c as usize)
    }

    fn finish(&self, placements: Vec<Domino>, alpha: &Partition) -> Option<DominoTableau> {
        let mut doms = self.band.clone();
        doms.extend(placements);
        let shape = Partition::new(
            std::iter::repeat_n(self.a, self.b as usize)
                .chain([self.a - 1])
                .collect::<Vec<_>>(),
        )
        .expect("valid shape");
        let t = DominoTableau::new(shape, doms).ok()?;
        if t.weight() != alpha.parts() {
            return None;
        }
        if !is_lattice(&t.reading_word()) {
            return None;
        }
        Some(t)
    }
}

/// `α − λ` as a label multiset; `None` if any entry would be negative.
fn multiset_difference(alpha: &Partition, lambda: &Partition) -> Option<Vec<(u32, u32)>> {
    let len = alpha.len().max(lambda.len());
    let mut out = Vec::new();
    for i in 1..=len {
        let a = alpha.part(i);
        let l = lambda.part(i);
        if a < l {
            return None;
        }
        if a > l {
            out.push((i as u32, a - l));
        }
    }
    Some(out)
}

fn pool_take(pool: &mut BTreeMap<u32, u32>, label: u32) -> bool {
    match pool.get_mut(&label) {
        Some(m) if *m > 0 => {
            *m -= 1;
            if *m == 0 {
                pool.remove(&label);
            }
            true
        }
        _ => false,
    }
}

fn pool_contains(pool: &BTreeMap<u32, u32>, label: u32) -> bool {
    pool.get(&label).copied().unwrap_or(0) > 0
}

fn pool_max(pool: &BTreeMap<u32, u32>) -> Option<u32> {
    pool.keys().next_back().copied()
}

fn pool_total(pool: &BTreeMap<u32, u32>) -> u32 {
    pool.values().sum()
}

fn pool_all_equal(pool: &BTreeMap<u32, u32>, label: u32) -> bool {
    pool.keys().all(|&k| k == label)
}

/// Algorithm 1: the unique member of `Dom((a^b, a−1), α)` with no vertical
/// domino of label `> b+1`, when it exists. Any failed deduction yields
/// `None`, never a malformed tableau.
pub fn near_rectangle_algorithm1(
    a: u32,
    b: u32,
    alpha: &Partition,
) -> Result<Option<DominoTableau>> {
    let Some(setup) = NearRectangle::setup(a, b, alpha)? else {
        return Ok(None);
    };
    let mut pool = setup.pool.clone();
    let (row1, row2) = (2 * b + 1, 2 * b + 2);
    let mut next_col = 2 * a - 2;
    let mut f = setup.band_bottom_label(a);
    let mut placements = Vec::new();
    let mut step = 1u32;
    loop {
        if pool.is_empty() || pool_all_equal(&pool, b + 1) {
            if pool_total(&pool) != next_col {
                return Ok(None);
            }
            for col in 1..=next_col {
                placements.push(Domino {
                    row: row1 as u16,
                    col: col as u16,
                    horizontal: false,
                    label: b + 1,
                });
            }
            break;
        }
        if step >= a || next_col < 2 {
            return Ok(None);
        }
        let d = setup.band_bottom_label(a - step);
        let Some(w) = pool_max(&pool) else {
            return Ok(None);
        };
        let (e, ebar);
        if w == f + 1 {
            e = w;
            ebar = d + 1;
            if ebar >= e {
                return Ok(None);
            }
            if !(pool_take(&mut pool, e) && pool_take(&mut pool, ebar)) {
                return Ok(None);
            }
            if e > ebar + 1 {
                f = e;
            }
        } else {
            e = w;
            ebar = e - 1;
            if !(pool_take(&mut pool, e) && pool_take(&mut pool, ebar)) {
                return Ok(None);
            }
            if ebar == d + 1 {
                // support unchanged
            } else if ebar > d + 1 {
                if ebar != f + 1 {
                    return Ok(None);
                }
                f = d;
            } else {
                return Ok(None);
            }
        }
        placements.push(Domino {
            row: row1 as u16,
            col: (next_col - 1) as u16,
            horizontal: true,
            label: ebar,
        });
        placements.push(Domino {
            row: row2 as u16,
            col: (next_col - 1) as u16,
            horizontal: true,
            label: e,
        });
        next_col -= 2;
        step += 1;
    }
    Ok(setup.finish(placements, alpha))
}

/// Algorithm 2: the unique member of `Dom((a^b, a−1), α)` with at least one
/// vertical domino of label `> b+1`, when it exists.
pub fn near_rectangle_algorithm2(
    a: u32,
    b: u32,
    alpha: &Partition,
) -> Result<Option<DominoTableau>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Support {
        Band(u32),
        UpperRow(u32),
        Empty,
    }
    let Some(setup) = NearRectangle::setup(a, b, alpha)? else {
        return Ok(None);
    };
    let mut pool = setup.pool.clone();
    let (row1, row2) = (2 * b + 1, 2 * b + 2);
    let mut nc1 = 2 * a - 2;
    let mut nc2 = 2 * a - 2;
    let mut support = Support::Band(setup.band_bottom_label(a));
    let mut placements: Vec<Domino> = Vec::new();
    let mut step = 1u32;

    fn place_h(placements: &mut Vec<Domino>, row: u32, nc: &mut u32, label: u32) -> bool {
        if *nc < 2 {
            return false;
        }
        placements.push(Domino {
            row: row as u16,
            col: (*nc - 1) as u16,
            horizontal: true,
            label,
        });
        *nc -= 2;
        true
    }
    fn place_v(
        placements: &mut Vec<Domino>,
        row1: u32,
        nc1: &mut u32,
        nc2: &mut u32,
        label: u32,
    ) -> bool {
        if *nc1 != *nc2 || *nc1 < 1 {
            return false;
        }
        placements.push(Domino {
            row: row1 as u16,
            col: *nc1 as u16,
            horizontal: false,
            label,
        });
        *nc1 -= 1;
        *nc2 -= 1;
        true
    }

    loop {
        if support == Support::Empty && pool_all_equal(&pool, b + 1) {
            if nc1 != nc2 || pool_total(&pool) != nc1 {
                return Ok(None);
            }
            for col in 1..=nc1 {
                placements.push(Domino {
                    row: row1 as u16,
                    col: col as u16,
                    horizontal: false,
                    label: b + 1,
                });
            }
            break;
        }
        if step >= a {
            return Ok(None);
        }
        let d = setup.band_bottom_label(a - step);
        match support {
            Support::Band(fl) => {
                let Some(w) = pool_max(&pool) else {
                    return Ok(None);
                };
                if w == fl + 2 {
                    if !(pool_take(&mut pool, fl + 1) && pool_take(&mut pool, fl + 2)) {
                        return Ok(None);
                    }
                    if !place_h(&mut placements, row1, &mut nc1, fl + 1)
                        || !place_h(&mut placements, row2, &mut nc2, fl + 2)
                    {
                        return Ok(None);
                    }
                    if d < fl {
                        support = Support::Band(d);
                    } else if d != fl {
                        return Ok(None);
                    }
                } else if w == fl + 1 {
                    let mut probe = pool.clone();
                    if !(pool_take(&mut probe, fl + 1) && pool_take(&mut probe, d + 1)) {
                        return Ok(None);
                    }
                    if !(pool_take(&mut pool, fl + 1) && pool_take(&mut pool, d + 1)) {
                        return Ok(None);
                    }
                    if !pool_contains(&probe, d + 2) {
                        // two verticals, rightmost first
                        if !place_v(&mut placements, row1, &mut nc1, &mut nc2, fl + 1)
                            || !place_v(&mut placements, row1, &mut nc1, &mut nc2, d + 1)
                        {
                            return Ok(None);
                        }
                        support = Support::Empty;
                    } else {
                        // one vertical, then a horizontal in the upper row
                        if !place_v(&mut placements, row1, &mut nc1, &mut nc2, fl + 1)
                            || !place_h(&mut placements, row1, &mut nc1, d + 1)
                        {
                            return Ok(None);
                        }
                        support = Support::UpperRow(d + 1);
                    }
                } else {
                    return Ok(None);
                }
            }
            Support::UpperRow(fl) => {
                if d == fl {
                    return Ok(None);
                }
                let mut probe = pool.clone();
                if !pool_take(&mut probe, fl + 1) {
                    return Ok(None);
                }
                if !(pool_take(&mut pool, fl + 1) && pool_take(&mut pool, d + 1)) {
                    return Ok(None);
                }
                if pool_contains(&probe, d + 2) {
                    if !place_h(&mut placements, row2, &mut nc2, fl + 1)
                        || !place_h(&mut placements, row1, &mut nc1, d + 1)
                    {
                        return Ok(None);
                    }
                    support = Support::UpperRow(d + 1);
                } else {
                    if !place_h(&mut placements, row2, &mut nc2, fl + 1)
                        || !place_v(&mut placements, row1, &mut nc1, &mut nc2, d + 1)
                    {
                        return Ok(None);
                    }
                    support = Support::Empty;
                }
            }
            Support::Empty => {
                if !(pool_take(&mut pool, d + 1) && pool_take(&mut pool, d + 2)) {
                    return Ok(None);
                }
                if !place_h(&mut placements, row1, &mut nc1, d + 1)
                    || !place_h(&mut placements, row2, &mut nc2, d + 2)
                {
                    return Ok(None);
                }
            }
        }
        step += 1;
    }
    let Some(t) = setup.finish(placements, alpha) else {
        return Ok(None);
    };
    let has_tall = t
        .dominoes()
        .iter()
        .any(|dom| !dom.horizontal && dom.row as u32 > 2 * b && dom.label > b + 1);
    Ok(if has_tall { Some(t) } else { None })
}

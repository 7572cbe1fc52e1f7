//! Exhaustive search for lunar magic squares and cubes.
//!
//! Every cell of a magic grid is dominated by the total, so a search fixes
//! a total, lists the candidates it dominates (optionally only squares or
//! `n`-th powers), and backtracks over cell assignments. "Smallest" always
//! means least under length-lex order on totals.
//!
//! Budgets count search nodes (candidate placements), never wall time, and
//! results come out in a fixed order, so a spec always reproduces its
//! report whatever the thread count.

mod kernel;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

pub use kernel::{Pruning, StopReason};

use crate::error::{LunarError, Result};
use crate::magic::{symmetries, Cube3, Grid3, LineSet, LINES};
use crate::nat::LunarNat;
use crate::numtheory::{for_each_bounded, nth_roots, powers_dominated_by};
use kernel::{Geometry, Kernel, Outcome};

/// Cap on candidate table size; beyond this a total is too wide to search.
pub const MAX_CANDIDATES: usize = 1 << 22;

/// Which values may fill a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EntryConstraint {
    #[default]
    Any,
    LunarSquare,
    NthPower(u32),
}

impl EntryConstraint {
    /// The exponent entries must be powers of, if any.
    pub fn exponent(self) -> Option<u32> {
        match self {
            EntryConstraint::Any => None,
            EntryConstraint::LunarSquare => Some(2),
            EntryConstraint::NthPower(n) => Some(n),
        }
    }

    pub fn admits(self, value: &LunarNat) -> bool {
        match self.exponent() {
            None => true,
            Some(k) => !nth_roots(value, k).is_empty(),
        }
    }
}

impl fmt::Display for EntryConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryConstraint::Any => f.write_str("any"),
            EntryConstraint::LunarSquare => f.write_str("squares"),
            EntryConstraint::NthPower(n) => write!(f, "power:{n}"),
        }
    }
}

impl FromStr for EntryConstraint {
    type Err = LunarError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(EntryConstraint::Any),
            "squares" | "square" => Ok(EntryConstraint::LunarSquare),
            _ => {
                let n = s
                    .strip_prefix("power:")
                    .and_then(|n| n.parse::<u32>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| {
                        LunarError::InvalidSpec(format!(
                            "unknown entry constraint {s:?} (any, squares, power:N)"
                        ))
                    })?;
                Ok(if n == 2 {
                    EntryConstraint::LunarSquare
                } else {
                    EntryConstraint::NthPower(n)
                })
            }
        }
    }
}

impl Serialize for EntryConstraint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A declarative search description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSpec {
    pub base: u32,
    pub entry_constraint: EntryConstraint,
    pub require_distinct: bool,
    /// Fixed total; `None` scans totals in length-lex order.
    pub total: Option<LunarNat>,
    pub max_total_digits: usize,
    /// Node budget.
    pub budget: u64,
    pub emit_limit: usize,
    /// Emit only the least grid of each symmetry class.
    pub canonical: bool,
    pub pruning: Pruning,
}

impl SearchSpec {
    pub fn new(base: u32) -> Self {
        Self {
            base,
            entry_constraint: EntryConstraint::Any,
            require_distinct: false,
            total: None,
            max_total_digits: 3,
            budget: 1_000_000_000,
            emit_limit: 100,
            canonical: false,
            pruning: Pruning::Full,
        }
    }

    pub fn entries(mut self, c: EntryConstraint) -> Self {
        self.entry_constraint = c;
        self
    }

    pub fn distinct(mut self, yes: bool) -> Self {
        self.require_distinct = yes;
        self
    }

    pub fn total(mut self, total: LunarNat) -> Self {
        self.total = Some(total);
        self
    }

    pub fn max_total_digits(mut self, digits: usize) -> Self {
        self.max_total_digits = digits;
        self
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = nodes;
        self
    }

    pub fn emit_limit(mut self, n: usize) -> Self {
        self.emit_limit = n;
        self
    }

    pub fn canonical(mut self, yes: bool) -> Self {
        self.canonical = yes;
        self
    }

    pub fn pruning(mut self, p: Pruning) -> Self {
        self.pruning = p;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(LunarError::InvalidSpec(m));
        LunarNat::zero(self.base)?;
        if self.max_total_digits == 0 || self.max_total_digits > 64 {
            return bad("max_total_digits must be in 1..=64".into());
        }
        if self.budget == 0 {
            return bad("budget must be positive".into());
        }
        if self.emit_limit == 0 {
            return bad("emit_limit must be positive".into());
        }
        if self.entry_constraint == EntryConstraint::NthPower(0) {
            return bad("power must be at least 1".into());
        }
        if let Some(t) = &self.total {
            if t.base() != self.base {
                return Err(LunarError::BaseMismatch(self.base, t.base()));
            }
            if t.is_zero() {
                return bad("total must be nonzero".into());
            }
            if t.len() > self.max_total_digits {
                return bad(format!(
                    "total {t} has {} digits, more than max_total_digits = {}",
                    t.len(),
                    self.max_total_digits
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub spec: SearchSpec,
    /// The total the results share (the fixed total, or the one found).
    pub total: Option<LunarNat>,
    pub nodes_explored: u64,
    /// True when the budget never cut the search short: every branch was
    /// either explored or made moot by reaching `emit_limit`. The results
    /// are then the complete set, up to `emit_limit`.
    pub exhausted: bool,
    pub stop: StopReason,
    pub results: Vec<Grid3>,
    /// Totals searched completely without a result before the reported one.
    pub totals_refuted: u64,
}

/// Every value dominated by `total` that satisfies `constraint`, sorted.
pub fn candidates_for_total(
    total: &LunarNat,
    constraint: EntryConstraint,
) -> Result<Vec<LunarNat>> {
    if total.is_zero() {
        return Err(LunarError::InvalidSpec("total must be nonzero".into()));
    }
    let out = match constraint.exponent() {
        None => {
            let count = total
                .digits()
                .iter()
                .try_fold(1usize, |acc, &d| acc.checked_mul(d as usize + 1));
            if count.is_none_or(|c| c > MAX_CANDIDATES) {
                return Err(LunarError::InvalidSpec(format!(
                    "total {total} dominates too many values to search"
                )));
            }
            let mut out = Vec::with_capacity(count.unwrap_or(0));
            for_each_bounded(total.base(), total.digits(), |m| out.push(m));
            out.sort();
            out
        }
        Some(0) => return Err(LunarError::InvalidSpec("power must be at least 1".into())),
        Some(k) => powers_dominated_by(total, k),
    };
    Ok(out)
}

fn grid_geometry() -> &'static Geometry {
    static GEOMETRY: OnceLock<Geometry> = OnceLock::new();
    GEOMETRY.get_or_init(|| Geometry::new(9, LINES.to_vec()))
}

fn grid_symmetries() -> &'static [[usize; 9]; 8] {
    static MAPS: OnceLock<[[usize; 9]; 8]> = OnceLock::new();
    MAPS.get_or_init(symmetries)
}

fn cube_geometry(line_set: LineSet) -> &'static Geometry {
    static AXES: OnceLock<Geometry> = OnceLock::new();
    static FACES: OnceLock<Geometry> = OnceLock::new();
    let cell = match line_set {
        LineSet::AxesAndSpaceDiagonals => &AXES,
        LineSet::AxesSpaceAndFaceDiagonals => &FACES,
    };
    cell.get_or_init(|| Geometry::new(27, line_set.lines()))
}

fn match_mask(candidate: &LunarNat, total: &LunarNat) -> u64 {
    (0..total.len())
        .filter(|&i| candidate.digit(i) == total.digit(i))
        .fold(0, |m, i| m | (1 << i))
}

fn full_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

fn kernel_for<'a>(
    total: &LunarNat,
    candidates: &[LunarNat],
    geometry: &'a Geometry,
    distinct: bool,
    pruning: Pruning,
    symmetries: Option<&'a [[usize; 9]; 8]>,
) -> Kernel<'a> {
    Kernel {
        geometry,
        masks: candidates.iter().map(|c| match_mask(c, total)).collect(),
        full: full_mask(total.len()),
        distinct,
        pruning,
        symmetries,
        allowed: None,
    }
}

#[allow(clippy::too_many_arguments)]
fn search_total(
    total: &LunarNat,
    spec: &SearchSpec,
    geometry: &Geometry,
    symmetries: Option<&[[usize; 9]; 8]>,
    budget: u64,
    emit: usize,
    threads: usize,
    sink: &mut dyn FnMut(Vec<LunarNat>),
) -> Result<Outcome> {
    let candidates = candidates_for_total(total, spec.entry_constraint)?;
    if candidates.is_empty() {
        return Ok(Outcome {
            nodes: 0,
            emitted: 0,
            stop: StopReason::Exhausted,
        });
    }
    let kernel = kernel_for(
        total,
        &candidates,
        geometry,
        spec.require_distinct,
        spec.pruning,
        symmetries,
    );
    Ok(kernel.run(budget, emit, threads, &mut |hit| {
        sink(
            hit.iter()
                .map(|&c| candidates[c as usize].clone())
                .collect(),
        )
    }))
}

fn to_grid(base: u32, cells: Vec<LunarNat>) -> Grid3 {
    let cells: [LunarNat; 9] = cells.try_into().expect("grid searches fill nine cells");
    Grid3::from_flat_unchecked(base, cells)
}

/// Like [`find_squares_with_total`], but hands each grid to `sink` as soon
/// as it is final. The returned report has empty `results`.
pub fn stream_squares_with_total(
    spec: &SearchSpec,
    threads: usize,
    sink: &mut dyn FnMut(Grid3),
) -> Result<SearchReport> {
    spec.validate()?;
    let total = spec
        .total
        .clone()
        .ok_or_else(|| LunarError::InvalidSpec("a total is required".into()))?;
    let syms = spec.canonical.then(grid_symmetries);
    let base = spec.base;
    let outcome = search_total(
        &total,
        spec,
        grid_geometry(),
        syms,
        spec.budget,
        spec.emit_limit,
        threads,
        &mut |cells| sink(to_grid(base, cells)),
    )?;
    Ok(SearchReport {
        spec: spec.clone(),
        total: Some(total),
        nodes_explored: outcome.nodes,
        exhausted: outcome.stop != StopReason::Budget,
        stop: outcome.stop,
        results: Vec::new(),
        totals_refuted: 0,
    })
}

/// All magic grids with the spec's fixed total, in row-major length-lex
/// order.
pub fn find_squares_with_total(spec: &SearchSpec, threads: usize) -> Result<SearchReport> {
    let mut results = Vec::new();
    let mut report = stream_squares_with_total(spec, threads, &mut |g| results.push(g))?;
    report.results = results;
    Ok(report)
}

/// Nonzero totals of up to `max_digits` digits in length-lex order.
struct Totals {
    base: u32,
    max_digits: usize,
    digits: Vec<u32>,
}

impl Totals {
    fn new(base: u32, max_digits: usize) -> Self {
        Self {
            base,
            max_digits,
            digits: Vec::new(),
        }
    }
}

impl Iterator for Totals {
    type Item = LunarNat;

    fn next(&mut self) -> Option<LunarNat> {
        // Increment as an ordinary base-B numeral; overflow into a new top
        // digit moves on to the next length.
        let mut pos = 0;
        loop {
            if pos == self.digits.len() {
                self.digits.push(1);
                break;
            }
            if self.digits[pos] + 1 < self.base {
                self.digits[pos] += 1;
                break;
            }
            self.digits[pos] = 0;
            pos += 1;
        }
        (self.digits.len() <= self.max_digits)
            .then(|| LunarNat::from_raw(self.base, self.digits.clone()))
    }
}

fn totals_of(spec: &SearchSpec) -> Box<dyn Iterator<Item = LunarNat>> {
    match &spec.total {
        Some(t) => Box::new(std::iter::once(t.clone())),
        None => Box::new(Totals::new(spec.base, spec.max_total_digits)),
    }
}

struct Scan {
    /// The first total with any result.
    found: Option<LunarNat>,
    nodes: u64,
    stop: StopReason,
    refuted: u64,
}

/// Searches totals in length-lex order (or just the fixed one) under one
/// shared budget, stopping after the first total that yields results.
fn scan_totals(
    spec: &SearchSpec,
    geometry: &Geometry,
    symmetries: Option<&[[usize; 9]; 8]>,
    threads: usize,
    sink: &mut dyn FnMut(Vec<LunarNat>),
) -> Result<Scan> {
    let mut scan = Scan {
        found: None,
        nodes: 0,
        stop: StopReason::Exhausted,
        refuted: 0,
    };
    for total in totals_of(spec) {
        if scan.nodes == spec.budget {
            scan.stop = StopReason::Budget;
            return Ok(scan);
        }
        let outcome = search_total(
            &total,
            spec,
            geometry,
            symmetries,
            spec.budget - scan.nodes,
            spec.emit_limit,
            threads,
            sink,
        )?;
        scan.nodes += outcome.nodes;
        if outcome.emitted > 0 {
            scan.found = Some(total);
            scan.stop = outcome.stop;
            return Ok(scan);
        }
        if outcome.stop == StopReason::Budget {
            scan.stop = StopReason::Budget;
            return Ok(scan);
        }
        scan.refuted += 1;
    }
    Ok(scan)
}

/// Streaming form of [`find_smallest_total`]: every grid for the least
/// total goes to `sink`, and the report's `results` is left empty.
pub fn stream_smallest_total(
    spec: &SearchSpec,
    threads: usize,
    sink: &mut dyn FnMut(Grid3),
) -> Result<SearchReport> {
    spec.validate()?;
    let syms = spec.canonical.then(grid_symmetries);
    let base = spec.base;
    let scan = scan_totals(spec, grid_geometry(), syms, threads, &mut |cells| {
        sink(to_grid(base, cells))
    })?;
    Ok(SearchReport {
        spec: spec.clone(),
        total: scan.found,
        nodes_explored: scan.nodes,
        exhausted: scan.stop != StopReason::Budget,
        stop: scan.stop,
        results: Vec::new(),
        totals_refuted: scan.refuted,
    })
}

/// Outcome of a smallest-total search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallestTotal {
    /// The least total admitting a grid, with the first grid found for it.
    pub found: Option<(LunarNat, Grid3)>,
    /// Here `exhausted` also means every smaller total was searched
    /// completely and refuted.
    pub report: SearchReport,
}

/// Finds the least total (length-lex, nonzero, at most `max_total_digits`
/// digits) for which a grid meeting the spec exists. No total is skipped.
pub fn find_smallest_total(spec: &SearchSpec, threads: usize) -> Result<SmallestTotal> {
    let mut results = Vec::new();
    let mut report = stream_smallest_total(spec, threads, &mut |g| results.push(g))?;
    report.results = results;
    let found = report.total.clone().zip(report.results.first().cloned());
    Ok(SmallestTotal { found, report })
}

/// Two magic squares and their cellwise sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumPair {
    pub first: Grid3,
    pub second: Grid3,
    pub sum: Grid3,
}

/// The sum grid when `first + second` is a valid pair: all three grids are
/// magic with distinct entries meeting `constraint`, and in every cell the
/// three values are pairwise distinct (so with powers each cell is a
/// genuine triple `x^k + y^k = z^k`).
pub fn check_sum_pair(
    first: &Grid3,
    second: &Grid3,
    constraint: EntryConstraint,
) -> Result<Option<Grid3>> {
    let sum = first.elementwise_add(second)?;
    let good = |g: &Grid3| {
        g.has_distinct_entries()
            && g.magic_total().is_some()
            && g.cells().iter().all(|c| constraint.admits(c))
    };
    if !(good(first) && good(second) && good(&sum)) {
        return Ok(None);
    }
    let cellwise_distinct = (0..9).all(|k| {
        let (x, y, z) = (&first.cells()[k], &second.cells()[k], &sum.cells()[k]);
        x != y && y != z && x != z
    });
    Ok(cellwise_distinct.then_some(sum))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumPairReport {
    pub spec: SearchSpec,
    /// Total of the reported sum grids.
    pub sum_total: Option<LunarNat>,
    pub nodes_explored: u64,
    /// True when the budget never cut the search short.
    pub exhausted: bool,
    pub stop: StopReason,
    /// Sum totals searched completely without a pair first.
    pub sum_totals_refuted: u64,
    pub pairs: Vec<SumPair>,
}

/// Cap on `|candidates(T1)| * |candidates(T2)|` for one pair of totals.
const MAX_PAIR_TABLE: usize = 1 << 24;

/// The distinct magic grids for one total, as indices into its candidates.
struct Group {
    candidates: Vec<LunarNat>,
    grids: Vec<[u32; 9]>,
}

struct PairSearch<'s> {
    spec: &'s SearchSpec,
    threads: usize,
    nodes: u64,
    groups: HashMap<LunarNat, Group>,
    admits: HashMap<LunarNat, bool>,
}

impl PairSearch<'_> {
    fn left(&self) -> u64 {
        self.spec.budget - self.nodes
    }

    /// Makes sure the group for `total` is known; false if the budget ran
    /// out first.
    fn ensure_group(&mut self, total: &LunarNat) -> Result<bool> {
        if self.groups.contains_key(total) {
            return Ok(true);
        }
        if self.left() == 0 {
            return Ok(false);
        }
        let candidates = candidates_for_total(total, self.spec.entry_constraint)?;
        let mut grids = Vec::new();
        if !candidates.is_empty() {
            let kernel = kernel_for(
                total,
                &candidates,
                grid_geometry(),
                true,
                self.spec.pruning,
                None,
            );
            let outcome = kernel.run(self.left(), usize::MAX, self.threads, &mut |hit| {
                grids.push(hit.try_into().expect("nine cells"))
            });
            self.nodes += outcome.nodes;
            if outcome.stop == StopReason::Budget {
                return Ok(false);
            }
        }
        self.groups
            .insert(total.clone(), Group { candidates, grids });
        Ok(true)
    }

    fn admits(&mut self, z: &LunarNat) -> bool {
        let constraint = self.spec.entry_constraint;
        *self
            .admits
            .entry(z.clone())
            .or_insert_with(|| constraint.admits(z))
    }

    /// `compat[i][j]`: candidate `i` of `t1` and `j` of `t2` can share a
    /// cell (all three of x, y, x + y distinct, and x + y admitted).
    fn compat(&mut self, t1: &LunarNat, t2: &LunarNat) -> Result<Vec<Vec<bool>>> {
        let xs = self.groups[t1].candidates.clone();
        let ys = self.groups[t2].candidates.clone();
        if xs.len().saturating_mul(ys.len()) > MAX_PAIR_TABLE {
            return Err(LunarError::InvalidSpec(format!(
                "totals {t1} and {t2} have too many candidates to pair"
            )));
        }
        Ok(xs
            .iter()
            .map(|x| {
                ys.iter()
                    .map(|y| {
                        let z = x + y;
                        x != y && &z != x && &z != y && self.admits(&z)
                    })
                    .collect()
            })
            .collect())
    }
}

/// Streaming form of [`find_sum_pairs`]; the report's `pairs` is empty.
pub fn stream_sum_pairs(
    spec: &SearchSpec,
    threads: usize,
    sink: &mut dyn FnMut(SumPair),
) -> Result<SumPairReport> {
    spec.validate()?;
    let base = spec.base;
    let mut ps = PairSearch {
        spec,
        threads,
        nodes: 0,
        groups: HashMap::new(),
        admits: HashMap::new(),
    };
    let mut report = SumPairReport {
        spec: spec.clone(),
        sum_total: None,
        nodes_explored: 0,
        exhausted: false,
        stop: StopReason::Budget,
        sum_totals_refuted: 0,
        pairs: Vec::new(),
    };
    let mut emitted = 0usize;

    for t3 in totals_of(spec) {
        let mut parts = Vec::new();
        for_each_bounded(base, t3.digits(), |t| {
            if !t.is_zero() {
                parts.push(t)
            }
        });
        parts.sort();
        let mut found = false;
        for (i, t1) in parts.iter().enumerate() {
            for t2 in &parts[i..] {
                if t1 + t2 != t3 {
                    continue;
                }
                if !ps.ensure_group(t1)? || !ps.ensure_group(t2)? {
                    report.nodes_explored = ps.nodes;
                    return Ok(report);
                }
                if ps.groups[t1].grids.is_empty() || ps.groups[t2].grids.is_empty() {
                    continue;
                }
                let compat = ps.compat(t1, t2)?;
                let g1s = ps.groups[t1].grids.clone();
                for g1 in &g1s {
                    let allowed: Vec<Vec<bool>> =
                        g1.iter().map(|&x| compat[x as usize].clone()).collect();
                    if allowed.iter().any(|a| !a.contains(&true)) {
                        continue;
                    }
                    if ps.left() == 0 {
                        report.nodes_explored = ps.nodes;
                        return Ok(report);
                    }
                    let group2 = &ps.groups[t2];
                    let mut kernel = kernel_for(
                        t2,
                        &group2.candidates,
                        grid_geometry(),
                        true,
                        spec.pruning,
                        None,
                    );
                    kernel.allowed = Some(allowed);
                    let mut hits: Vec<Vec<u32>> = Vec::new();
                    let outcome =
                        kernel.run(ps.left(), usize::MAX, 1, &mut |h| hits.push(h.to_vec()));
                    ps.nodes += outcome.nodes;
                    for g2 in hits {
                        // Each unordered pair once.
                        if t1 == t2 && g2.as_slice() <= g1.as_slice() {
                            continue;
                        }
                        let group1 = &ps.groups[t1];
                        let first = to_grid(
                            base,
                            g1.iter()
                                .map(|&c| group1.candidates[c as usize].clone())
                                .collect(),
                        );
                        let second = to_grid(
                            base,
                            g2.iter()
                                .map(|&c| group2.candidates[c as usize].clone())
                                .collect(),
                        );
                        let sum = first.elementwise_add(&second)?;
                        if !sum.has_distinct_entries() {
                            continue;
                        }
                        sink(SumPair { first, second, sum });
                        found = true;
                        emitted += 1;
                        if emitted >= spec.emit_limit {
                            report.sum_total = Some(t3);
                            report.nodes_explored = ps.nodes;
                            report.exhausted = true;
                            report.stop = StopReason::EmitLimit;
                            return Ok(report);
                        }
                    }
                    if outcome.stop == StopReason::Budget {
                        report.sum_total = found.then_some(t3);
                        report.nodes_explored = ps.nodes;
                        return Ok(report);
                    }
                }
            }
        }
        if found {
            report.sum_total = Some(t3);
            break;
        }
        report.sum_totals_refuted += 1;
    }
    report.nodes_explored = ps.nodes;
    report.exhausted = true;
    report.stop = StopReason::Exhausted;
    Ok(report)
}

/// Pairs of distinct magic grids meeting the spec whose cellwise sum is
/// too, as [`check_sum_pair`] defines. Sum totals are tried in length-lex
/// order (or only the fixed `total`), and the search stops after the first
/// sum total that has any pair, so an exhausted run reports the pairs with
/// the least possible sum total.
///
/// For each split `T1 + T2` of the sum total (both dominated by it), every
/// grid for `T1` is enumerated, and for each one the grids for `T2` are
/// searched with every cell restricted to values that complete a valid
/// triple with the first grid's cell. Pairs come out ordered by split, then
/// first grid, then second. Group searches use `threads`; the many small
/// second-grid searches run on the calling thread.
pub fn find_sum_pairs(spec: &SearchSpec, threads: usize) -> Result<SumPairReport> {
    let mut pairs = Vec::new();
    let mut report = stream_sum_pairs(spec, threads, &mut |p| pairs.push(p))?;
    report.pairs = pairs;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubeSearchReport {
    pub spec: SearchSpec,
    pub line_set: LineSet,
    pub total: Option<LunarNat>,
    pub nodes_explored: u64,
    pub exhausted: bool,
    pub stop: StopReason,
    pub results: Vec<Cube3>,
    pub totals_refuted: u64,
}

/// Streaming form of [`find_magic_cubes`]; the report's `results` is empty.
pub fn stream_magic_cubes(
    spec: &SearchSpec,
    line_set: LineSet,
    threads: usize,
    sink: &mut dyn FnMut(Cube3),
) -> Result<CubeSearchReport> {
    spec.validate()?;
    if spec.canonical {
        return Err(LunarError::InvalidSpec(
            "canonical output is only available for squares".into(),
        ));
    }
    let base = spec.base;
    let scan = scan_totals(spec, cube_geometry(line_set), None, threads, &mut |cells| {
        sink(Cube3::from_flat_unchecked(base, line_set, cells))
    })?;
    Ok(CubeSearchReport {
        spec: spec.clone(),
        line_set,
        total: scan.found.or_else(|| spec.total.clone()),
        nodes_explored: scan.nodes,
        exhausted: scan.stop != StopReason::Budget,
        stop: scan.stop,
        results: Vec::new(),
        totals_refuted: scan.refuted,
    })
}

/// Magic cubes for the fixed total, or for the least total (length-lex)
/// that has any. Symmetry canonicalization is not offered for cubes.
pub fn find_magic_cubes(
    spec: &SearchSpec,
    line_set: LineSet,
    threads: usize,
) -> Result<CubeSearchReport> {
    let mut results = Vec::new();
    let mut report = stream_magic_cubes(spec, line_set, threads, &mut |c| results.push(c))?;
    report.results = results;
    Ok(report)
}

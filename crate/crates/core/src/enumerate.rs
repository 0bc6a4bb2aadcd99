//! Exhaustive enumeration of small semigroups by backtracking over Cayley
//! tables, with duplicate removal by canonical form.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canonical::{canonical_form_raw, CanonMode};
use crate::conjugacy::{relation_character, theorem_suite, Status, Which};
use crate::format::serialize;
use crate::semigroup::Semigroup;

/// Largest order enumerated without the long-running flag.
pub const MAX_ORDER: usize = 5;
/// Largest order enumerated at all.
pub const MAX_LONG_ORDER: usize = 6;

const UNSET: u8 = u8::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("order {n} exceeds the limit {max}{hint}")]
    SizeLimit { n: usize, max: usize, hint: &'static str },
    #[error("order must be at least 1")]
    Empty,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dedupe {
    /// Every table counts.
    Labeled,
    /// Up to isomorphism.
    Iso,
    /// Up to isomorphism and anti-isomorphism.
    #[default]
    Equivalence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumConstraints {
    pub order: usize,
    pub require_monoid: bool,
    pub require_zero: bool,
    /// Some `a, b ≠ 0` with `ab = 0`; implies `require_zero`.
    pub require_zero_divisors: bool,
    pub dedupe: Dedupe,
    /// Permits orders above [`MAX_ORDER`].
    pub long_running: bool,
}

impl EnumConstraints {
    pub fn semigroups(order: usize, dedupe: Dedupe) -> Self {
        EnumConstraints {
            order,
            require_monoid: false,
            require_zero: false,
            require_zero_divisors: false,
            dedupe,
            long_running: false,
        }
    }

    /// Monoids with a zero and zero divisors.
    pub fn monoids_with_zero_divisors(order: usize, dedupe: Dedupe) -> Self {
        EnumConstraints {
            order,
            require_monoid: true,
            require_zero: true,
            require_zero_divisors: true,
            dedupe,
            long_running: false,
        }
    }

    fn check(&self) -> Result<(), EnumError> {
        let n = self.order;
        if n == 0 {
            return Err(EnumError::Empty);
        }
        if n > MAX_LONG_ORDER {
            return Err(EnumError::SizeLimit { n, max: MAX_LONG_ORDER, hint: "" });
        }
        if n > MAX_ORDER && !self.long_running {
            return Err(EnumError::SizeLimit {
                n,
                max: MAX_ORDER,
                hint: " (pass the long-running flag for order 6)",
            });
        }
        Ok(())
    }

    fn needs_zero(&self) -> bool {
        self.require_zero || self.require_zero_divisors
    }
}

struct Search {
    n: usize,
    /// Cells still to fill, in row-major order.
    free: Vec<usize>,
    constraints: EnumConstraints,
    mode: Option<CanonMode>,
}

impl Search {
    fn new(c: EnumConstraints) -> (Self, Vec<u8>) {
        let n = c.order;
        let mut t = vec![UNSET; n * n];
        // fixed positions only when representatives are deduplicated anyway
        let fix = c.dedupe != Dedupe::Labeled && n >= 2;
        if fix && c.needs_zero() {
            for x in 0..n {
                t[x] = 0;
                t[x * n] = 0;
            }
        }
        if fix && c.require_monoid {
            let e = n - 1;
            for x in 0..n {
                if t[e * n + x] == UNSET {
                    t[e * n + x] = x as u8;
                }
                if t[x * n + e] == UNSET {
                    t[x * n + e] = x as u8;
                }
            }
        }
        let free = (0..n * n).filter(|&i| t[i] == UNSET).collect();
        let mode = match c.dedupe {
            Dedupe::Labeled => None,
            Dedupe::Iso => Some(CanonMode::Isomorphism),
            Dedupe::Equivalence => Some(CanonMode::Equivalence),
        };
        (
            Search {
                n,
                free,
                constraints: c,
                mode,
            },
            t,
        )
    }

    /// Checks every triple whose value became fully determined when `cell`
    /// was set. Such a triple uses `cell` in one of its four lookups.
    fn consistent(&self, t: &[u8], cell: usize) -> bool {
        let n = self.n;
        let (a, b) = (cell / n, cell % n);
        let get = |x: usize, y: usize| t[x * n + y];
        let triple = |x: usize, y: usize, z: usize| -> bool {
            let xy = get(x, y);
            let yz = get(y, z);
            if xy == UNSET || yz == UNSET {
                return true;
            }
            let l = get(xy as usize, z);
            let r = get(x, yz as usize);
            l == UNSET || r == UNSET || l == r
        };
        for z in 0..n {
            if !triple(a, b, z) || !triple(z, a, b) {
                return false;
            }
        }
        for x in 0..n {
            for y in 0..n {
                if get(x, y) as usize == a && !triple(x, y, b) {
                    return false;
                }
                if get(x, y) as usize == b && !triple(a, x, y) {
                    return false;
                }
            }
        }
        true
    }

    fn accept(&self, t: &[u8]) -> bool {
        let n = self.n;
        let s = Semigroup::from_flat_trusted(n, t.iter().map(|&v| v as u32).collect());
        let c = &self.constraints;
        if c.needs_zero() && s.zero().is_none() {
            return false;
        }
        if c.require_monoid && s.identity().is_none() {
            return false;
        }
        !c.require_zero_divisors || s.has_zero_divisors()
    }

    fn key(&self, t: &[u8]) -> Vec<u8> {
        match self.mode {
            Some(m) => canonical_form_raw(self.n, t, m),
            None => t.to_vec(),
        }
    }

    fn run(&self, t: &mut [u8], depth: usize, out: &mut BTreeSet<Vec<u8>>) {
        if depth == self.free.len() {
            if self.accept(t) {
                out.insert(self.key(t));
            }
            return;
        }
        let cell = self.free[depth];
        for v in 0..self.n as u8 {
            t[cell] = v;
            if self.consistent(t, cell) {
                self.run(t, depth + 1, out);
            }
        }
        t[cell] = UNSET;
    }

    /// Consistent partial tables with the first `depth` free cells filled.
    fn prefixes(&self, t: &mut [u8], depth: usize, target: usize, out: &mut Vec<Vec<u8>>) {
        if depth == target || depth == self.free.len() {
            out.push(t.to_vec());
            return;
        }
        let cell = self.free[depth];
        for v in 0..self.n as u8 {
            t[cell] = v;
            if self.consistent(t, cell) {
                self.prefixes(t, depth + 1, target, out);
            }
        }
        t[cell] = UNSET;
    }
}

fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var("CONJ_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&k| k > 0);
    match threads.and_then(|k| rayon::ThreadPoolBuilder::new().num_threads(k).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

/// Canonical (or, for labeled runs, literal) tables of every semigroup
/// meeting the constraints, in increasing order.
pub fn enumerate_tables(c: &EnumConstraints, parallel: bool) -> Result<Vec<Vec<u8>>, EnumError> {
    c.check()?;
    let (search, mut t) = Search::new(*c);
    let set = if parallel {
        let n = search.n;
        // split on the first row's free cells
        let target = search.free.iter().take_while(|&&i| i < n).count().max(1);
        let mut starts = Vec::new();
        search.prefixes(&mut t, 0, target, &mut starts);
        with_pool(|| {
            starts
                .into_par_iter()
                .map(|mut p| {
                    let mut local = BTreeSet::new();
                    let depth = search.free.iter().filter(|&&i| p[i] != UNSET).count();
                    search.run(&mut p, depth, &mut local);
                    local
                })
                .reduce(BTreeSet::new, |mut a, b| {
                    a.extend(b);
                    a
                })
        })
    } else {
        let mut out = BTreeSet::new();
        search.run(&mut t, 0, &mut out);
        out
    };
    Ok(set.into_iter().collect())
}

fn to_semigroup(n: usize, t: &[u8]) -> Semigroup {
    Semigroup::from_flat_trusted(n, t.iter().map(|&v| v as u32).collect())
}

/// Calls `visitor` once per representative, in a fixed order, and returns
/// the number of representatives.
pub fn enumerate(c: &EnumConstraints, mut visitor: impl FnMut(&Semigroup)) -> Result<usize, EnumError> {
    let tables = enumerate_tables(c, true)?;
    for t in &tables {
        visitor(&to_semigroup(c.order, t));
    }
    Ok(tables.len())
}

pub fn enumerate_all(c: &EnumConstraints) -> Result<Vec<Semigroup>, EnumError> {
    Ok(enumerate_tables(c, true)?
        .iter()
        .map(|t| to_semigroup(c.order, t))
        .collect())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Table1Counts {
    pub monoids: usize,
    pub c_identity: usize,
    pub c_universal_nonzero: usize,
    /// Classes whose representative and its opposite semigroup disagree on
    /// either column. Always zero up to isomorphism.
    pub opposite_disagreements: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub n: usize,
    pub equivalence: Table1Counts,
    pub isomorphism: Table1Counts,
}

impl Table1Row {
    /// `(monoids, c identity, c universal on nonzero)` for a convention.
    pub fn triple(&self, dedupe: Dedupe) -> (usize, usize, usize) {
        let c = match dedupe {
            Dedupe::Iso => &self.isomorphism,
            _ => &self.equivalence,
        };
        (c.monoids, c.c_identity, c.c_universal_nonzero)
    }
}

fn c_flags(s: &Semigroup) -> (bool, bool) {
    let ch = relation_character(s, Which::C);
    (ch.is_identity, ch.universal_on_nonzero)
}

fn table1_counts(n: usize, dedupe: Dedupe, long_running: bool) -> Result<Table1Counts, EnumError> {
    let mut c = EnumConstraints::monoids_with_zero_divisors(n, dedupe);
    c.long_running = long_running;
    let reps = enumerate_all(&c)?;
    let flags: Vec<((bool, bool), bool)> = reps
        .par_iter()
        .map(|s| {
            let f = c_flags(s);
            let disagree = dedupe == Dedupe::Equivalence && c_flags(&s.anti()) != f;
            (f, disagree)
        })
        .collect();
    Ok(Table1Counts {
        monoids: reps.len(),
        c_identity: flags.iter().filter(|((id, _), _)| *id).count(),
        c_universal_nonzero: flags.iter().filter(|((_, u), _)| *u).count(),
        opposite_disagreements: flags.iter().filter(|(_, d)| *d).count(),
    })
}

/// Rows for orders `3..=n_max` of the count of monoids with zero divisors
/// and how many have c-conjugacy trivial or universal on nonzero elements.
pub fn table1(n_max: usize, long_running: bool) -> Result<Vec<Table1Row>, EnumError> {
    (3..=n_max)
        .map(|n| {
            Ok(Table1Row {
                n,
                equivalence: table1_counts(n, Dedupe::Equivalence, long_running)?,
                isomorphism: table1_counts(n, Dedupe::Iso, long_running)?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckTally {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepFailure {
    pub check: String,
    pub detail: String,
    pub table: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub semigroups: usize,
    pub checks: Vec<CheckTally>,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the named checks of [`theorem_suite`] (all when `checks` is empty)
/// on every enumerated semigroup.
pub fn sweep(c: &EnumConstraints, checks: &[&str]) -> Result<SweepReport, EnumError> {
    let reps = enumerate_all(c)?;
    let reports: Vec<_> = with_pool(|| reps.par_iter().map(theorem_suite).collect());
    let mut tallies: Vec<CheckTally> = Vec::new();
    let mut failures = Vec::new();
    for (s, rep) in reps.iter().zip(&reports) {
        for ch in &rep.checks {
            if !checks.is_empty() && !checks.contains(&ch.name) {
                continue;
            }
            let tally = match tallies.iter_mut().position(|t| t.name == ch.name) {
                Some(i) => &mut tallies[i],
                None => {
                    tallies.push(CheckTally {
                        name: ch.name.to_string(),
                        passed: 0,
                        failed: 0,
                        skipped: 0,
                    });
                    tallies.last_mut().expect("just pushed")
                }
            };
            match ch.status {
                Status::Pass => tally.passed += 1,
                Status::Skipped => tally.skipped += 1,
                Status::Fail => {
                    tally.failed += 1;
                    failures.push(SweepFailure {
                        check: ch.name.to_string(),
                        detail: ch.detail.clone(),
                        table: serialize(s),
                    });
                }
            }
        }
    }
    Ok(SweepReport {
        semigroups: reps.len(),
        checks: tallies,
        failures,
    })
}

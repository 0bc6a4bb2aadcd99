//! Cycle-chain-ray types of partial injections of a countably infinite set
//! and the conjugacy and Green criteria stated in terms of them.
//!
//! A type records how many cycles and chains of each length occur, and how
//! many double rays (`omega`), right rays (`upsilon`) and left rays
//! (`lambda`). Per-length counts are a [`Spectrum`]: finitely many explicit
//! lengths plus one value shared by every other length.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::pinj::CycleChainType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolicError {
    #[error("type has chains or left rays, so it is not a full injection")]
    NotFullInjection,
    #[error("type is not an epigroup element (rays or unbounded chains)")]
    NotEpiElement,
    #[error("cannot parse type literal: {0}")]
    Syntax(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cardinal {
    Finite(u64),
    Aleph0,
}

impl Cardinal {
    pub const ZERO: Cardinal = Cardinal::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Cardinal::Finite(_))
    }

    pub fn is_zero(self) -> bool {
        self == Cardinal::ZERO
    }

    /// `k · self` for a positive integer `k`.
    pub fn times(self, k: u64) -> Cardinal {
        match self {
            Cardinal::Finite(c) => Cardinal::Finite(c * k),
            Cardinal::Aleph0 if k == 0 => Cardinal::ZERO,
            Cardinal::Aleph0 => Cardinal::Aleph0,
        }
    }
}

impl Add for Cardinal {
    type Output = Cardinal;

    fn add(self, rhs: Cardinal) -> Cardinal {
        match (self, rhs) {
            (Cardinal::Finite(a), Cardinal::Finite(b)) => Cardinal::Finite(a + b),
            _ => Cardinal::Aleph0,
        }
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(k) => write!(f, "{k}"),
            Cardinal::Aleph0 => write!(f, "w"),
        }
    }
}

impl FromStr for Cardinal {
    type Err = SymbolicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "w" => Ok(Cardinal::Aleph0),
            t => t
                .parse()
                .map(Cardinal::Finite)
                .map_err(|_| SymbolicError::Syntax(format!("bad cardinal {t:?}"))),
        }
    }
}

impl Serialize for Cardinal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cardinal::Finite(k) => s.serialize_u64(*k),
            Cardinal::Aleph0 => s.serialize_str("w"),
        }
    }
}

/// Counts indexed by length `k ≥ 1`: `exceptions[k]` where listed, and
/// `default` (zero or `ℵ₀`) for every other length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Spectrum {
    exceptions: BTreeMap<u64, Cardinal>,
    default: Cardinal,
}

impl Default for Spectrum {
    fn default() -> Self {
        Spectrum {
            exceptions: BTreeMap::new(),
            default: Cardinal::ZERO,
        }
    }
}

impl Spectrum {
    /// Entries equal to the default are dropped, as are lengths below 1.
    /// A default other than zero is read as `ℵ₀`.
    pub fn new(exceptions: impl IntoIterator<Item = (u64, Cardinal)>, default: Cardinal) -> Self {
        let default = if default.is_zero() { Cardinal::ZERO } else { Cardinal::Aleph0 };
        let exceptions = exceptions
            .into_iter()
            .filter(|&(k, c)| k >= 1 && c != default)
            .collect();
        Spectrum { exceptions, default }
    }

    pub fn finite(counts: impl IntoIterator<Item = (u64, u64)>) -> Self {
        Self::new(counts.into_iter().map(|(k, c)| (k, Cardinal::Finite(c))), Cardinal::ZERO)
    }

    pub fn get(&self, k: u64) -> Cardinal {
        self.exceptions.get(&k).copied().unwrap_or(self.default)
    }

    pub fn default_value(&self) -> Cardinal {
        self.default
    }

    pub fn exceptions(&self) -> &BTreeMap<u64, Cardinal> {
        &self.exceptions
    }

    pub fn is_zero(&self) -> bool {
        self.default.is_zero() && self.exceptions.is_empty()
    }

    /// `Σ k·count(k)`.
    pub fn weighted_total(&self) -> Cardinal {
        if !self.default.is_zero() {
            return Cardinal::Aleph0;
        }
        self.exceptions
            .iter()
            .fold(Cardinal::ZERO, |acc, (&k, &c)| acc + c.times(k))
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.exceptions.iter().map(|(k, c)| format!("{k}:{c}")).collect();
        write!(f, "{{{};{}}}", body.join(","), self.default)
    }
}

impl FromStr for Spectrum {
    type Err = SymbolicError;

    /// `{k:c,...;default}`; the `;default` part may be omitted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| SymbolicError::Syntax(format!("expected braces in {s:?}")))?;
        let (list, default) = match inner.split_once(';') {
            Some((l, d)) => (l, d.parse()?),
            None => (inner, Cardinal::ZERO),
        };
        let mut exceptions = Vec::new();
        for item in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, c) = item
                .split_once(':')
                .ok_or_else(|| SymbolicError::Syntax(format!("expected k:c, found {item:?}")))?;
            let k: u64 = k
                .trim()
                .parse()
                .map_err(|_| SymbolicError::Syntax(format!("bad length {k:?}")))?;
            if k == 0 {
                return Err(SymbolicError::Syntax("lengths start at 1".into()));
            }
            exceptions.push((k, c.parse()?));
        }
        Ok(Spectrum::new(exceptions, default))
    }
}

/// Cycle-chain-ray type of a partial injection of a countable set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct CCRType {
    pub cycles: Spectrum,
    pub chains: Spectrum,
    pub omega: Cardinal,
    pub upsilon: Cardinal,
    pub lambda: Cardinal,
}

impl Default for Cardinal {
    fn default() -> Self {
        Cardinal::ZERO
    }
}

impl CCRType {
    pub fn from_finite(t: &CycleChainType) -> Self {
        let conv = |m: &BTreeMap<usize, usize>| Spectrum::finite(m.iter().map(|(&k, &c)| (k as u64, c as u64)));
        CCRType {
            cycles: conv(&t.cycles),
            chains: conv(&t.chains),
            ..CCRType::default()
        }
    }

    /// The cycle-chain type when every count is finite and there are no rays.
    pub fn to_finite(&self) -> Option<CycleChainType> {
        if !self.omega.is_zero() || !self.upsilon.is_zero() || !self.lambda.is_zero() {
            return None;
        }
        let conv = |s: &Spectrum| -> Option<BTreeMap<usize, usize>> {
            if !s.default_value().is_zero() {
                return None;
            }
            s.exceptions()
                .iter()
                .map(|(&k, &c)| match c {
                    Cardinal::Finite(c) => Some((k as usize, c as usize)),
                    Cardinal::Aleph0 => None,
                })
                .collect()
        };
        Some(CycleChainType {
            cycles: conv(&self.cycles)?,
            chains: conv(&self.chains)?,
        })
    }

    pub fn has_rays(&self) -> bool {
        !(self.omega.is_zero() && self.upsilon.is_zero() && self.lambda.is_zero())
    }

    /// Defined on the whole set: no chains and no left rays.
    pub fn is_full_injection(&self) -> bool {
        self.chains.is_zero() && self.lambda.is_zero()
    }
}

impl fmt::Display for CCRType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cycles{} chains{} omega={} upsilon={} lambda={}",
            self.cycles, self.chains, self.omega, self.upsilon, self.lambda
        )
    }
}

impl FromStr for CCRType {
    type Err = SymbolicError;

    /// Fields may appear in any order and any may be omitted (zero).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut t = CCRType::default();
        let mut rest = s.trim();
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix("cycles").or_else(|| rest.strip_prefix("chains")) {
                let is_cycles = rest.starts_with("cycles");
                let end = r
                    .find('}')
                    .ok_or_else(|| SymbolicError::Syntax("unclosed brace".into()))?;
                let spec: Spectrum = r[..=end].parse()?;
                if is_cycles {
                    t.cycles = spec;
                } else {
                    t.chains = spec;
                }
                rest = r[end + 1..].trim_start();
                continue;
            }
            let (word, r) = rest.split_at(rest.find(char::is_whitespace).unwrap_or(rest.len()));
            let (key, val) = word
                .split_once('=')
                .ok_or_else(|| SymbolicError::Syntax(format!("unexpected {word:?}")))?;
            let c: Cardinal = val.parse()?;
            match key {
                "omega" => t.omega = c,
                "upsilon" => t.upsilon = c,
                "lambda" => t.lambda = c,
                _ => return Err(SymbolicError::Syntax(format!("unknown field {key:?}"))),
            }
            rest = r.trim_start();
        }
        Ok(t)
    }
}

/// Supremum of the chain lengths that occur; zero without chains.
pub fn kappa(t: &CCRType) -> Cardinal {
    if !t.chains.default_value().is_zero() {
        return Cardinal::Aleph0;
    }
    Cardinal::Finite(t.chains.exceptions().keys().next_back().copied().unwrap_or(0))
}

/// Largest `m ≤ κ` with `ℵ₀` chains of length `m`, for finite positive
/// `κ`; zero otherwise.
pub fn mu(t: &CCRType) -> u64 {
    match kappa(t) {
        Cardinal::Finite(k) if k >= 1 => (1..=k)
            .rev()
            .find(|&m| t.chains.get(m) == Cardinal::Aleph0)
            .unwrap_or(0),
        _ => 0,
    }
}

/// c-conjugacy in the symmetric inverse monoid of a countable set.
pub fn c_conjugate(a: &CCRType, b: &CCRType) -> bool {
    if a.cycles != b.cycles || a.omega != b.omega || a.lambda != b.lambda {
        return false;
    }
    if a.omega.is_finite() && a.upsilon != b.upsilon {
        return false;
    }
    if a.lambda.is_finite() {
        let k = kappa(a);
        if k != kappa(b) {
            return false;
        }
        if let Cardinal::Finite(k) = k {
            if k >= 1 {
                let m = mu(a);
                if m != mu(b) {
                    return false;
                }
                if (m + 1..=k).any(|j| a.chains.get(j) != b.chains.get(j)) {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GammaRelations {
    pub p: bool,
    pub c: bool,
    pub j: bool,
}

/// p-conjugacy, c-conjugacy and Green's J on full injections.
pub fn gamma_relations(a: &CCRType, b: &CCRType) -> Result<GammaRelations, SymbolicError> {
    if !a.is_full_injection() || !b.is_full_injection() {
        return Err(SymbolicError::NotFullInjection);
    }
    let same_cycles = a.cycles == b.cycles && a.omega == b.omega;
    Ok(GammaRelations {
        j: a.upsilon == b.upsilon,
        p: same_cycles && a.upsilon == b.upsilon,
        c: same_cycles && a.upsilon + a.omega == b.upsilon + b.omega,
    })
}

/// No rays and bounded chain lengths.
pub fn is_epi_element(t: &CCRType) -> bool {
    !t.has_rays() && t.chains.default_value().is_zero()
}

/// Trace conjugacy on epigroup elements: equal cycle spectra.
pub fn tr_conjugate(a: &CCRType, b: &CCRType) -> Result<bool, SymbolicError> {
    if !is_epi_element(a) || !is_epi_element(b) {
        return Err(SymbolicError::NotEpiElement);
    }
    Ok(a.cycles == b.cycles)
}

pub fn dom_cardinality(t: &CCRType) -> Cardinal {
    let rays = if t.has_rays() { Cardinal::Aleph0 } else { Cardinal::ZERO };
    t.cycles.weighted_total() + t.chains.weighted_total() + rays
}

/// Green's J in the symmetric inverse monoid: equal domain sizes.
pub fn i_j_related(a: &CCRType, b: &CCRType) -> bool {
    dom_cardinality(a) == dom_cardinality(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeBounds {
    pub max_exceptions: usize,
    pub max_length: u64,
    pub max_count: u64,
    /// Generate only full-injection types.
    pub full_injection: bool,
}

impl Default for TypeBounds {
    fn default() -> Self {
        TypeBounds {
            max_exceptions: 3,
            max_length: 4,
            max_count: 2,
            full_injection: false,
        }
    }
}

fn random_cardinal(rng: &mut ChaCha8Rng, max_count: u64) -> Cardinal {
    if rng.gen_ratio(1, 4) {
        Cardinal::Aleph0
    } else {
        Cardinal::Finite(rng.gen_range(0..=max_count))
    }
}

fn random_spectrum(rng: &mut ChaCha8Rng, b: &TypeBounds) -> Spectrum {
    let default = if rng.gen_ratio(1, 5) { Cardinal::Aleph0 } else { Cardinal::ZERO };
    let count = rng.gen_range(0..=b.max_exceptions);
    let items: Vec<(u64, Cardinal)> = (0..count)
        .map(|_| (rng.gen_range(1..=b.max_length.max(1)), random_cardinal(rng, b.max_count)))
        .collect();
    Spectrum::new(items, default)
}

/// A type drawn deterministically from `seed`.
pub fn random_type(seed: u64, bounds: &TypeBounds) -> CCRType {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cycles = random_spectrum(&mut rng, bounds);
    let chains = random_spectrum(&mut rng, bounds);
    let omega = random_cardinal(&mut rng, bounds.max_count);
    let upsilon = random_cardinal(&mut rng, bounds.max_count);
    let lambda = random_cardinal(&mut rng, bounds.max_count);
    if bounds.full_injection {
        CCRType {
            cycles,
            omega,
            upsilon,
            ..CCRType::default()
        }
    } else {
        CCRType {
            cycles,
            chains,
            omega,
            upsilon,
            lambda,
        }
    }
}

/// A pair of types with the expected verdicts of the relevant criteria.
#[derive(Clone, Debug, Serialize)]
pub struct KnownPair {
    pub name: &'static str,
    pub first: CCRType,
    pub second: CCRType,
    pub c: bool,
    /// `(p, c, j)` when both are full injections.
    pub gamma: Option<(bool, bool, bool)>,
}

/// Reference pairs separating the relations.
pub fn known_pairs() -> Vec<KnownPair> {
    let parse = |s: &str| s.parse::<CCRType>().expect("literal");
    vec![
        KnownPair {
            name: "left-rays-absorb-a-chain",
            first: parse("chains{2:1} lambda=w"),
            second: parse("lambda=w"),
            c: true,
            gamma: None,
        },
        KnownPair {
            name: "chain-lengths-differ",
            first: parse("chains{2:1}"),
            second: parse("chains{1:1}"),
            c: false,
            gamma: None,
        },
        KnownPair {
            name: "right-ray-among-double-rays",
            first: parse("omega=w upsilon=1"),
            second: parse("omega=w"),
            c: true,
            gamma: Some((false, true, false)),
        },
        KnownPair {
            name: "same-rays-different-cycles",
            first: parse("cycles{2:1} upsilon=1"),
            second: parse("cycles{1:2} upsilon=1"),
            c: false,
            gamma: Some((false, false, true)),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> CCRType {
        s.parse().unwrap()
    }

    #[test]
    fn cardinal_arithmetic() {
        use Cardinal::*;
        assert_eq!(Finite(2) + Finite(3), Finite(5));
        assert_eq!(Finite(2) + Aleph0, Aleph0);
        assert!(Finite(1_000_000) < Aleph0);
        assert_eq!(Aleph0.times(3), Aleph0);
    }

    #[test]
    fn kappa_and_mu() {
        let t = ty("chains{2:1}");
        assert_eq!((kappa(&t), mu(&t)), (Cardinal::Finite(2), 0));
        assert_eq!(kappa(&ty("chains{;w}")), Cardinal::Aleph0);
        assert_eq!(kappa(&CCRType::default()), Cardinal::ZERO);
        let t = ty("chains{1:w,3:2}");
        assert_eq!((kappa(&t), mu(&t)), (Cardinal::Finite(3), 1));
    }

    #[test]
    fn literal_round_trip() {
        let t = ty("cycles{1:2,3:w;0} chains{;w} omega=1 upsilon=w lambda=0");
        assert_eq!(t.to_string(), "cycles{1:2,3:w;0} chains{;w} omega=1 upsilon=w lambda=0");
        assert_eq!(ty(&t.to_string()), t);
        assert!("cycles{0:1}".parse::<CCRType>().is_err());
        assert!("bogus=1".parse::<CCRType>().is_err());
        // entries equal to the default are dropped
        assert_eq!(ty("cycles{2:w;w}"), ty("cycles{;w}"));
    }

    #[test]
    fn known_pairs_hold() {
        for k in known_pairs() {
            assert_eq!(c_conjugate(&k.first, &k.second), k.c, "{}", k.name);
            if let Some((p, c, j)) = k.gamma {
                let g = gamma_relations(&k.first, &k.second).unwrap();
                assert_eq!((g.p, g.c, g.j), (p, c, j), "{}", k.name);
            }
        }
    }

    #[test]
    fn epi_and_trace() {
        let a = ty("cycles{3:1} chains{1:1}");
        let b = ty("cycles{3:1} chains{2:5}");
        assert!(is_epi_element(&a));
        assert!(!is_epi_element(&ty("upsilon=1")));
        assert!(tr_conjugate(&a, &b).unwrap());
        assert_eq!(tr_conjugate(&a, &ty("upsilon=1")), Err(SymbolicError::NotEpiElement));
        assert_eq!(
            gamma_relations(&a, &a),
            Err(SymbolicError::NotFullInjection)
        );
    }

    #[test]
    fn domain_sizes() {
        assert!(i_j_related(&ty("cycles{3:1}"), &ty("cycles{1:3}")));
        assert!(!i_j_related(&ty("cycles{1:1}"), &ty("cycles{1:2}")));
        assert!(i_j_related(&ty("upsilon=1"), &ty("lambda=2")));
        assert_eq!(dom_cardinality(&ty("chains{2:1}")), Cardinal::Finite(2));
    }

    #[test]
    fn random_is_deterministic() {
        let b = TypeBounds::default();
        assert_eq!(random_type(7, &b), random_type(7, &b));
        let full = TypeBounds {
            full_injection: true,
            ..b
        };
        assert!((0..50).all(|s| random_type(s, &full).is_full_injection()));
    }
}

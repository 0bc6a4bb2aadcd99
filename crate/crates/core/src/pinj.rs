//! Partial injections of a finite set, their cycle-chain decomposition,
//! the symmetric inverse monoid `I_n`, and the digraph criterion for
//! c-conjugacy.
//!
//! Maps act on the right and compose left to right: `x(fg) = (xf)g`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::semigroup::Semigroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PinjError {
    #[error("ground sets differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("point {value} is outside 0..{n}")]
    OutOfRange { value: usize, n: usize },
    #[error("not injective: {0} is hit twice")]
    NotInjective(usize),
    #[error("symmetric inverse monoid supports n in 1..=5, got {0}")]
    SizeLimit(usize),
    #[error("cannot parse partial injection: {0}")]
    Syntax(String),
    #[error("type needs {need} points but only {n} are available")]
    DoesNotFit { need: usize, n: usize },
}

/// An injective partial map of `{0, …, n-1}`; `None` marks a point outside
/// the domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialInjection {
    n: usize,
    map: Vec<Option<usize>>,
}

impl PartialInjection {
    pub fn new(map: Vec<Option<usize>>) -> Result<Self, PinjError> {
        let n = map.len();
        let mut hit = vec![false; n];
        for &v in map.iter().flatten() {
            if v >= n {
                return Err(PinjError::OutOfRange { value: v, n });
            }
            if std::mem::replace(&mut hit[v], true) {
                return Err(PinjError::NotInjective(v));
            }
        }
        Ok(PartialInjection { n, map })
    }

    pub fn empty(n: usize) -> Self {
        PartialInjection { n, map: vec![None; n] }
    }

    pub fn identity(n: usize) -> Self {
        PartialInjection {
            n,
            map: (0..n).map(Some).collect(),
        }
    }

    /// The identity restricted to `points`.
    pub fn partial_identity(n: usize, points: &[usize]) -> Self {
        let mut f = Self::empty(n);
        for &x in points {
            f.map[x] = Some(x);
        }
        f
    }

    /// The cycle `(x0 x1 … x(k-1))`.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self, PinjError> {
        let mut map = vec![None; n];
        for (i, &x) in points.iter().enumerate() {
            check_point(x, n)?;
            map[x] = Some(points[(i + 1) % points.len()]);
        }
        Self::new(map)
    }

    /// The chain `[x0 x1 … xk]` of length `k`, defined on `x0 … x(k-1)`.
    pub fn chain(n: usize, points: &[usize]) -> Result<Self, PinjError> {
        let mut map = vec![None; n];
        for w in points.windows(2) {
            check_point(w[0], n)?;
            check_point(w[1], n)?;
            map[w[0]] = Some(w[1]);
        }
        Self::new(map)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.map[x]
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.map
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.map[x].is_some()).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.map.iter().flatten().copied().collect();
        im.sort_unstable();
        im
    }

    pub fn in_image(&self) -> Vec<bool> {
        let mut v = vec![false; self.n];
        for &y in self.map.iter().flatten() {
            v[y] = true;
        }
        v
    }

    pub fn span(&self) -> Vec<usize> {
        let im = self.in_image();
        (0..self.n).filter(|&x| self.map[x].is_some() || im[x]).collect()
    }

    pub fn rank(&self) -> usize {
        self.map.iter().flatten().count()
    }

    pub fn is_total(&self) -> bool {
        self.map.iter().all(Option::is_some)
    }

    /// `x(self·other) = (x self) other`.
    pub fn compose(&self, other: &Self) -> Result<Self, PinjError> {
        if self.n != other.n {
            return Err(PinjError::DimensionMismatch(self.n, other.n));
        }
        Ok(PartialInjection {
            n: self.n,
            map: self.map.iter().map(|&x| x.and_then(|y| other.map[y])).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut map = vec![None; self.n];
        for (x, y) in self.map.iter().enumerate() {
            if let Some(y) = *y {
                map[y] = Some(x);
            }
        }
        PartialInjection { n: self.n, map }
    }

    /// Cycles and chains, pairwise completely disjoint, whose join is `self`.
    /// Chains come first ordered by their initial point, then cycles ordered
    /// by their least point, which is written first.
    pub fn decompose(&self) -> Vec<Piece> {
        let im = self.in_image();
        let mut seen = vec![false; self.n];
        let mut pieces = Vec::new();
        for (start, &in_im) in im.iter().enumerate() {
            if self.map[start].is_some() && !in_im {
                let mut pts = vec![start];
                let mut x = start;
                while let Some(y) = self.map[x] {
                    pts.push(y);
                    x = y;
                }
                for &p in &pts {
                    seen[p] = true;
                }
                pieces.push(Piece::Chain(pts));
            }
        }
        for start in 0..self.n {
            if seen[start] || self.map[start].is_none() {
                continue;
            }
            let mut pts = vec![start];
            seen[start] = true;
            let mut x = self.map[start].expect("in domain");
            while x != start {
                seen[x] = true;
                pts.push(x);
                x = self.map[x].expect("points off every chain lie on cycles");
            }
            pieces.push(Piece::Cycle(pts));
        }
        pieces
    }

    pub fn cc_type(&self) -> CycleChainType {
        let mut t = CycleChainType::default();
        for p in self.decompose() {
            match p {
                Piece::Cycle(v) => *t.cycles.entry(v.len()).or_default() += 1,
                Piece::Chain(v) => *t.chains.entry(v.len() - 1).or_default() += 1,
            }
        }
        t
    }

    pub fn cycle_type(&self) -> BTreeMap<usize, usize> {
        self.cc_type().cycles
    }

    /// Index of this map in base `n+1`, `None` written as `n`.
    fn key(&self) -> usize {
        self.map
            .iter()
            .fold(0, |acc, v| acc * (self.n + 1) + v.unwrap_or(self.n))
    }
}

fn check_point(x: usize, n: usize) -> Result<(), PinjError> {
    if x >= n {
        Err(PinjError::OutOfRange { value: x, n })
    } else {
        Ok(())
    }
}

/// Joins pairwise completely disjoint pieces into one partial injection.
pub fn join(n: usize, pieces: &[Piece]) -> Result<PartialInjection, PinjError> {
    let mut map = vec![None; n];
    for p in pieces {
        let f = match p {
            Piece::Cycle(v) => PartialInjection::cycle(n, v)?,
            Piece::Chain(v) => PartialInjection::chain(n, v)?,
        };
        for x in f.domain() {
            if map[x].is_some() {
                return Err(PinjError::NotInjective(x));
            }
            map[x] = f.map[x];
        }
    }
    PartialInjection::new(map)
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        for v in &self.map {
            match v {
                Some(y) => write!(f, " {y}")?,
                None => write!(f, " -")?,
            }
        }
        Ok(())
    }
}

impl FromStr for PartialInjection {
    type Err = PinjError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (head, body) = s
            .split_once(';')
            .ok_or_else(|| PinjError::Syntax("expected \"n; x0 x1 …\"".into()))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| PinjError::Syntax(format!("bad size {:?}", head.trim())))?;
        let map = body
            .split_whitespace()
            .map(|tok| match tok {
                "-" => Ok(None),
                t => t
                    .parse()
                    .map(Some)
                    .map_err(|_| PinjError::Syntax(format!("bad entry {t:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if map.len() != n {
            return Err(PinjError::Syntax(format!("expected {n} entries, found {}", map.len())));
        }
        Self::new(map)
    }
}

impl Serialize for PartialInjection {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Piece {
    /// Points in cyclic order.
    Cycle(Vec<usize>),
    /// `k+1` points of a chain of length `k`.
    Chain(Vec<usize>),
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close, pts) = match self {
            Piece::Cycle(v) => ('(', ')', v),
            Piece::Chain(v) => ('[', ']', v),
        };
        let body: Vec<String> = pts.iter().map(|x| x.to_string()).collect();
        write!(f, "{open}{}{close}", body.join(" "))
    }
}

pub fn format_pieces(pieces: &[Piece]) -> String {
    if pieces.is_empty() {
        return "0".into();
    }
    pieces.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ∨ ")
}

/// Counts of cycles and chains by length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleChainType {
    pub cycles: BTreeMap<usize, usize>,
    pub chains: BTreeMap<usize, usize>,
}

impl CycleChainType {
    /// Number of points a realization occupies.
    pub fn span_size(&self) -> usize {
        self.cycles.iter().map(|(k, c)| k * c).sum::<usize>()
            + self.chains.iter().map(|(k, c)| (k + 1) * c).sum::<usize>()
    }

    pub fn dom_size(&self) -> usize {
        self.cycles.iter().chain(self.chains.iter()).map(|(k, c)| k * c).sum()
    }

    /// A partial injection of `{0..n-1}` with this type, laying pieces out
    /// on consecutive points: cycles by increasing length, then chains.
    pub fn realize(&self, n: usize) -> Result<PartialInjection, PinjError> {
        let need = self.span_size();
        if need > n {
            return Err(PinjError::DoesNotFit { need, n });
        }
        let mut next = 0;
        let mut pieces = Vec::new();
        for (&k, &c) in &self.cycles {
            for _ in 0..c {
                pieces.push(Piece::Cycle((next..next + k).collect()));
                next += k;
            }
        }
        for (&k, &c) in &self.chains {
            for _ in 0..c {
                pieces.push(Piece::Chain((next..next + k + 1).collect()));
                next += k + 1;
            }
        }
        join(n, &pieces)
    }
}

impl fmt::Display for CycleChainType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |m: &BTreeMap<usize, usize>| {
            m.iter().map(|(k, c)| format!("{k}:{c}")).collect::<Vec<_>>().join(",")
        };
        write!(f, "cycles{{{}}} chains{{{}}}", show(&self.cycles), show(&self.chains))
    }
}

/// Bijection between the elements of `I_n` and table indices.
#[derive(Clone, Debug)]
pub struct PinjCodec {
    n: usize,
    elements: Vec<PartialInjection>,
    by_key: Vec<u32>,
}

impl PinjCodec {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn decode(&self, index: usize) -> &PartialInjection {
        &self.elements[index]
    }

    pub fn encode(&self, f: &PartialInjection) -> Option<usize> {
        if f.n != self.n {
            return None;
        }
        Some(self.by_key[f.key()] as usize)
    }

    pub fn elements(&self) -> &[PartialInjection] {
        &self.elements
    }
}

fn subsets_by_size(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 0..=n {
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == size {
                out.push(cur.clone());
                return;
            }
            for x in start..n {
                cur.push(x);
                rec(x + 1, n, size, cur, out);
                cur.pop();
            }
        }
        rec(0, n, size, &mut cur, &mut out);
    }
    out
}

/// Every partial injection of `{0..n-1}`: by domain (smaller first, then
/// lexicographic), then by image tuple lexicographically.
pub fn all_partial_injections(n: usize) -> Vec<PartialInjection> {
    let mut out = Vec::new();
    for dom in subsets_by_size(n) {
        let mut images = vec![0usize; dom.len()];
        let mut used = vec![false; n];
        fn rec(
            i: usize,
            dom: &[usize],
            n: usize,
            images: &mut [usize],
            used: &mut [bool],
            out: &mut Vec<PartialInjection>,
        ) {
            if i == dom.len() {
                let mut map = vec![None; n];
                for (k, &x) in dom.iter().enumerate() {
                    map[x] = Some(images[k]);
                }
                out.push(PartialInjection { n, map });
                return;
            }
            for y in 0..n {
                if !used[y] {
                    used[y] = true;
                    images[i] = y;
                    rec(i + 1, dom, n, images, used, out);
                    used[y] = false;
                }
            }
        }
        rec(0, &dom, n, &mut images, &mut used, &mut out);
    }
    out
}

/// `I_n` as a Cayley table, with its codec. The empty map is element 0.
pub fn symmetric_inverse_monoid(n: usize) -> Result<(Semigroup, PinjCodec), PinjError> {
    if n == 0 || n > 5 {
        return Err(PinjError::SizeLimit(n));
    }
    let elements = all_partial_injections(n);
    let mut by_key = vec![u32::MAX; (n + 1).pow(n as u32)];
    for (i, f) in elements.iter().enumerate() {
        by_key[f.key()] = i as u32;
    }
    let m = elements.len();
    let table: Vec<u32> = (0..m)
        .into_par_iter()
        .flat_map_iter(|a| {
            let fa = &elements[a];
            let by_key = &by_key;
            elements.iter().map(move |fb| {
                let c = fa.compose(fb).expect("same ground set");
                by_key[c.key()]
            })
        })
        .collect();
    let codec = PinjCodec { n, elements, by_key };
    Ok((Semigroup::from_flat_trusted(m, table), codec))
}

/// Whether `phi` is an r-homomorphism from `Γ(alpha)` to `Γ(beta)`: defined
/// on all of `span(alpha)`, sending each arc `x → xα` to an arc of `Γ(beta)`
/// and each terminal vertex (one with no outgoing arc) of `Γ(alpha)` to a
/// terminal vertex of `Γ(beta)`. Injectivity holds by construction.
pub fn is_r_homomorphism(
    phi: &PartialInjection,
    alpha: &PartialInjection,
    beta: &PartialInjection,
) -> Result<bool, PinjError> {
    let n = alpha.n;
    if phi.n != n || beta.n != n {
        return Err(PinjError::DimensionMismatch(n, if phi.n != n { phi.n } else { beta.n }));
    }
    let beta_im = beta.in_image();
    for x in alpha.span() {
        let Some(y) = phi.map[x] else {
            return Ok(false);
        };
        match alpha.map[x] {
            Some(xa) => {
                if beta.map[y].is_none() || beta.map[y] != phi.map[xa] {
                    return Ok(false);
                }
            }
            None => {
                // terminal in Γ(alpha): y must be a vertex of Γ(beta) without an out-arc
                if beta.map[y].is_some() || !beta_im[y] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Searches for an r-homomorphism `Γ(alpha) → Γ(beta)`, placing one piece
/// of `alpha` at a time: a cycle of length `k` onto a `k`-cycle of `beta`,
/// a chain onto a terminal segment of a `beta` chain.
pub fn find_r_homomorphism(alpha: &PartialInjection, beta: &PartialInjection) -> Option<PartialInjection> {
    let n = alpha.n;
    if beta.n != n {
        return None;
    }
    let pieces = alpha.decompose();
    let beta_inv = beta.inverse();
    let beta_im = beta.in_image();
    let mut phi = vec![None; n];
    let mut used = vec![false; n];

    fn place(
        i: usize,
        pieces: &[Piece],
        beta: &PartialInjection,
        beta_inv: &PartialInjection,
        beta_im: &[bool],
        phi: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = beta.n;
        let Some(piece) = pieces.get(i) else {
            return true;
        };
        for y in 0..n {
            // images of the piece's points, following beta forwards for a
            // cycle, or backwards from a terminal vertex for a chain
            let imgs: Option<Vec<usize>> = match piece {
                Piece::Cycle(pts) => {
                    let mut v = vec![y];
                    let mut cur = y;
                    for _ in 1..pts.len() {
                        cur = match beta.map[cur] {
                            Some(c) => c,
                            None => break,
                        };
                        v.push(cur);
                    }
                    (v.len() == pts.len() && beta.map[cur] == Some(y)).then_some(v)
                }
                Piece::Chain(pts) => {
                    if beta.map[y].is_some() || !beta_im[y] {
                        None
                    } else {
                        let mut v = vec![y];
                        let mut cur = y;
                        for _ in 1..pts.len() {
                            cur = match beta_inv.map[cur] {
                                Some(c) => c,
                                None => break,
                            };
                            v.push(cur);
                        }
                        (v.len() == pts.len()).then(|| {
                            v.reverse();
                            v
                        })
                    }
                }
            };
            let Some(imgs) = imgs else { continue };
            let pts = match piece {
                Piece::Cycle(p) | Piece::Chain(p) => p,
            };
            if imgs.iter().any(|&t| used[t]) {
                continue;
            }
            for (&x, &t) in pts.iter().zip(&imgs) {
                phi[x] = Some(t);
                used[t] = true;
            }
            if place(i + 1, pieces, beta, beta_inv, beta_im, phi, used) {
                return true;
            }
            for (&x, &t) in pts.iter().zip(&imgs) {
                phi[x] = None;
                used[t] = false;
            }
        }
        false
    }

    if place(0, &pieces, beta, &beta_inv, &beta_im, &mut phi, &mut used) {
        Some(PartialInjection { n, map: phi })
    } else {
        None
    }
}

/// c-conjugacy in `I_n` via r-homomorphisms in both directions.
pub fn c_oracle(alpha: &PartialInjection, beta: &PartialInjection) -> bool {
    find_r_homomorphism(alpha, beta).is_some() && find_r_homomorphism(beta, alpha).is_some()
}

/// A permutation `σ` with `alpha = σ⁻¹·beta·σ`, built by matching the pieces
/// of equal kind and length positionally. `None` when the types differ.
pub fn permutation_witness(alpha: &PartialInjection, beta: &PartialInjection) -> Option<PartialInjection> {
    let n = alpha.n;
    if beta.n != n || alpha.cc_type() != beta.cc_type() {
        return None;
    }
    let sort_key = |p: &Piece| match p {
        Piece::Cycle(v) => (0, v.len()),
        Piece::Chain(v) => (1, v.len()),
    };
    let mut pa = alpha.decompose();
    let mut pb = beta.decompose();
    pa.sort_by_key(sort_key);
    pb.sort_by_key(sort_key);
    // σ carries Γ(beta) onto Γ(alpha): (xσ)α = (xβ)σ
    let mut sigma = vec![None; n];
    let mut hit = vec![false; n];
    for (a, b) in pa.iter().zip(&pb) {
        let (Piece::Cycle(va) | Piece::Chain(va)) = a;
        let (Piece::Cycle(vb) | Piece::Chain(vb)) = b;
        for (&x, &y) in vb.iter().zip(va) {
            sigma[x] = Some(y);
            hit[y] = true;
        }
    }
    let mut free = (0..n).filter(|&y| !hit[y]);
    for s in sigma.iter_mut() {
        if s.is_none() {
            *s = free.next();
        }
    }
    let sigma = PartialInjection::new(sigma).ok()?;
    let conj = sigma.inverse().compose(beta).ok()?.compose(&sigma).ok()?;
    (conj == *alpha).then_some(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pi(s: &str) -> PartialInjection {
        s.parse().unwrap()
    }

    /// The nine-point example, shifted to 0-based points.
    fn nine_point() -> PartialInjection {
        pi("9; 2 5 - 4 8 7 - 1 -")
    }

    #[test]
    fn nine_point_decomposition() {
        let a = nine_point();
        let pieces = a.decompose();
        assert_eq!(format_pieces(&pieces), "[0 2] ∨ [3 4 8] ∨ (1 5 7)");
        let t = a.cc_type();
        assert_eq!(t.cycles, BTreeMap::from([(3, 1)]));
        assert_eq!(t.chains, BTreeMap::from([(1, 1), (2, 1)]));
        assert_eq!(join(9, &pieces).unwrap(), a);
    }

    #[test]
    fn nine_point_square() {
        let a = nine_point();
        // by hand: 1→5→7, 3→4→8, 5→7→1, 7→1→5
        assert_eq!(a.compose(&a).unwrap(), pi("9; - 7 - 8 - 1 - 5 -"));
    }

    #[test]
    fn composition_basics() {
        let f = PartialInjection::chain(2, &[0, 1]).unwrap();
        assert_eq!(f.compose(&f.inverse()).unwrap(), PartialInjection::partial_identity(2, &[0]));
        assert_eq!(f.compose(&PartialInjection::empty(2)).unwrap(), PartialInjection::empty(2));
        assert!(f.compose(&PartialInjection::empty(3)).is_err());
        assert_eq!(PartialInjection::identity(4).cycle_type(), BTreeMap::from([(1, 4)]));
        assert_eq!(PartialInjection::empty(3).cc_type(), CycleChainType::default());
    }

    #[test]
    fn parse_errors() {
        assert!("3; 0 0 -".parse::<PartialInjection>().is_err());
        assert!("3; 0 1".parse::<PartialInjection>().is_err());
        assert!("3 0 1 2".parse::<PartialInjection>().is_err());
        assert_eq!(pi("3; 1 - 0").to_string(), "3; 1 - 0");
    }

    #[test]
    fn sizes() {
        let sizes: Vec<usize> = (1..=5).map(|n| all_partial_injections(n).len()).collect();
        assert_eq!(sizes, vec![2, 7, 34, 209, 1546]);
        let (s, codec) = symmetric_inverse_monoid(2).unwrap();
        assert_eq!(s.zero(), Some(0));
        assert_eq!(codec.decode(s.identity().unwrap()), &PartialInjection::identity(2));
        assert!(symmetric_inverse_monoid(6).is_err());
    }

    #[test]
    fn r_homomorphism_examples() {
        let a = PartialInjection::chain(2, &[0, 1]).unwrap();
        let z = PartialInjection::empty(2);
        assert!(is_r_homomorphism(&PartialInjection::identity(2), &a, &a).unwrap());
        for phi in all_partial_injections(2) {
            assert!(!is_r_homomorphism(&phi, &a, &z).unwrap());
        }
        assert!(!c_oracle(&a, &z));
        let b = PartialInjection::chain(2, &[1, 0]).unwrap();
        let sigma = permutation_witness(&a, &b).unwrap();
        assert!(is_r_homomorphism(&sigma.inverse(), &a, &b).unwrap());
        assert!(is_r_homomorphism(&sigma, &b, &a).unwrap());
        assert_eq!(permutation_witness(&a, &a), Some(PartialInjection::identity(2)));
    }

    #[test]
    fn realize_round_trip() {
        let t = nine_point().cc_type();
        assert_eq!(t.realize(9).unwrap().cc_type(), t);
        assert!(t.realize(7).is_err());
    }
}

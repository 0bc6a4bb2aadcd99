//! Partitions and symmetric pair relations on element indices.
//!
//! [`EqPartition`] carries equivalence relations (Green's relations and the
//! transitive conjugacies). [`PairRelation`] carries relations that are only
//! reflexive and symmetric, such as primary conjugacy, whose transitivity is
//! exactly one of the things being studied.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("element {0} appears in more than one class")]
    Overlap(usize),
    #[error("element {0} is not covered by any class")]
    Uncovered(usize),
    #[error("element {element} out of range for {n} elements")]
    OutOfRange { element: usize, n: usize },
    #[error("empty class")]
    EmptyClass,
    #[error("relation is not transitive: {0}~{1}, {1}~{2} but not {0}~{2}")]
    NotTransitive(usize, usize, usize),
    #[error("relation is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("malformed partition text: {0}")]
    Syntax(String),
}

/// Anything that decides relatedness of two elements of a fixed finite set.
pub trait Relation {
    fn order(&self) -> usize;
    fn related(&self, a: usize, b: usize) -> bool;
}

/// Returns the first pair `(a, b)` (in lexicographic order) that lies in `r`
/// but not in `s`, or `None` when `r ⊆ s`.
pub fn inclusion_witness(r: &dyn Relation, s: &dyn Relation) -> Option<(usize, usize)> {
    debug_assert_eq!(r.order(), s.order());
    let n = r.order();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| r.related(a, b) && !s.related(a, b))
}

pub fn is_subrelation(r: &dyn Relation, s: &dyn Relation) -> bool {
    inclusion_witness(r, s).is_none()
}

pub fn same_relation(r: &dyn Relation, s: &dyn Relation) -> bool {
    is_subrelation(r, s) && is_subrelation(s, r)
}

/// Disjoint-set forest with path halving.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so labels are stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub fn into_partition(mut self) -> EqPartition {
        let n = self.parent.len();
        let labels: Vec<usize> = (0..n).map(|i| self.find(i)).collect();
        EqPartition::from_labels(&labels)
    }
}

/// A partition of `{0, .., n-1}` in canonical form: classes sorted by their
/// minimum element, elements ascending inside each class.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct EqPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    n: usize,
    classes: Vec<Vec<usize>>,
}

impl TryFrom<PartitionRepr> for EqPartition {
    type Error = PartitionError;
    fn try_from(r: PartitionRepr) -> Result<Self, Self::Error> {
        EqPartition::from_classes(r.n, r.classes)
    }
}

impl From<EqPartition> for PartitionRepr {
    fn from(p: EqPartition) -> Self {
        PartitionRepr {
            n: p.order(),
            classes: p.classes,
        }
    }
}

impl EqPartition {
    /// Builds the partition whose classes are the fibres of `labels`.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone>(labels: &[T]) -> Self {
        let mut seen: std::collections::HashMap<T, usize> = std::collections::HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; labels.len()];
        for (i, l) in labels.iter().enumerate() {
            let c = *seen.entry(l.clone()).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(i);
            class_of[i] = c;
        }
        // first-occurrence numbering already sorts classes by minimum element
        EqPartition { classes, class_of }
    }

    pub fn from_classes(n: usize, classes: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut owner = vec![usize::MAX; n];
        for (ci, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(PartitionError::EmptyClass);
            }
            for &x in class {
                if x >= n {
                    return Err(PartitionError::OutOfRange { element: x, n });
                }
                if owner[x] != usize::MAX {
                    return Err(PartitionError::Overlap(x));
                }
                owner[x] = ci;
            }
        }
        if let Some(x) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(PartitionError::Uncovered(x));
        }
        Ok(Self::from_labels(&owner))
    }

    /// Builds a partition from a relation, checking that it is an equivalence.
    pub fn from_equivalence(rel: &dyn Relation) -> Result<Self, PartitionError> {
        let n = rel.order();
        let mut uf = UnionFind::new(n);
        for a in 0..n {
            if !rel.related(a, a) {
                return Err(PartitionError::NotReflexive(a));
            }
            for b in 0..n {
                if rel.related(a, b) {
                    if !rel.related(b, a) {
                        return Err(PartitionError::NotSymmetric(a, b));
                    }
                    uf.union(a, b);
                }
            }
        }
        let p = uf.into_partition();
        // every pair inside a class must be related, otherwise transitivity fails
        for class in &p.classes {
            let root = class[0];
            for &x in class {
                for &y in class {
                    if !rel.related(x, y) {
                        let mid = class
                            .iter()
                            .copied()
                            .find(|&m| rel.related(x, m) && rel.related(m, y))
                            .unwrap_or(root);
                        return Err(PartitionError::NotTransitive(x, mid, y));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn universal(n: usize) -> Self {
        Self::from_labels(&vec![0u8; n])
    }

    pub fn order(&self) -> usize {
        self.class_of.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_index(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn class_of(&self, a: usize) -> &[usize] {
        &self.classes[self.class_of[a]]
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn is_identity(&self) -> bool {
        self.classes.len() == self.order()
    }

    pub fn is_universal(&self) -> bool {
        self.classes.len() <= 1
    }

    /// Common refinement: `a ~ b` iff related in both partitions.
    pub fn meet(&self, other: &EqPartition) -> EqPartition {
        let labels: Vec<(usize, usize)> = (0..self.order())
            .map(|i| (self.class_of[i], other.class_of[i]))
            .collect();
        Self::from_labels(&labels)
    }

    /// `true` when every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &EqPartition) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().all(|&x| other.same_class(x, c[0])))
    }

    pub fn class_sets(&self) -> Vec<BitSet> {
        self.classes
            .iter()
            .map(|c| BitSet::from_indices(self.order(), c.iter().copied()))
            .collect()
    }

    /// Parses the `{0,1} {2}` text form; `n` is inferred from the largest element.
    pub fn parse(text: &str) -> Result<Self, PartitionError> {
        let mut classes = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('{')
                .ok_or_else(|| PartitionError::Syntax(format!("expected '{{' at {rest:?}")))?;
            let close = open
                .find('}')
                .ok_or_else(|| PartitionError::Syntax("unterminated class".into()))?;
            let body = &open[..close];
            let class = body
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| PartitionError::Syntax(format!("{t:?}: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            classes.push(class);
            rest = open[close + 1..].trim_start();
        }
        let n = classes.iter().flatten().map(|&x| x + 1).max().unwrap_or(0);
        Self::from_classes(n, classes)
    }
}

impl Relation for EqPartition {
    fn order(&self) -> usize {
        self.class_of.len()
    }
    fn related(&self, a: usize, b: usize) -> bool {
        self.same_class(a, b)
    }
}

impl fmt::Display for EqPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str("{")?;
            for (j, x) in class.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for EqPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EqPartition({self})")
    }
}

impl FromStr for EqPartition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// A reflexive, symmetric relation stored as a dense bit matrix.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "PairRepr", into = "PairRepr")]
pub struct PairRelation {
    rows: Vec<BitSet>,
}

#[derive(Serialize, Deserialize)]
struct PairRepr {
    n: usize,
    /// Non-loop pairs `(a, b)` with `a < b`.
    edges: Vec<(usize, usize)>,
}

impl From<PairRepr> for PairRelation {
    fn from(r: PairRepr) -> Self {
        let mut p = PairRelation::loops(r.n);
        for (a, b) in r.edges {
            p.insert(a, b);
        }
        p
    }
}

impl From<PairRelation> for PairRepr {
    fn from(p: PairRelation) -> Self {
        PairRepr {
            n: p.order(),
            edges: p.edges(),
        }
    }
}

impl PairRelation {
    /// The identity relation (loops only).
    pub fn loops(n: usize) -> Self {
        let mut rows = vec![BitSet::new(n); n];
        for (i, r) in rows.iter_mut().enumerate() {
            r.insert(i);
        }
        PairRelation { rows }
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.rows[a].insert(b);
        self.rows[b].insert(a);
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn row(&self, a: usize) -> &BitSet {
        &self.rows[a]
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Non-loop pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, r)| r.iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    /// Transitive closure, as a partition.
    pub fn closure(&self) -> EqPartition {
        let mut uf = UnionFind::new(self.order());
        for (a, b) in self.edges() {
            uf.union(a, b);
        }
        uf.into_partition()
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_witness().is_none()
    }

    /// A triple `(a, b, c)` with `a~b`, `b~c` and not `a~c`.
    pub fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        for b in 0..self.order() {
            let row = &self.rows[b];
            for a in row.iter() {
                for c in row.iter() {
                    if !self.rows[a].contains(c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().all(|r| r.count() == 1)
    }

    pub fn is_universal(&self) -> bool {
        let n = self.order();
        self.rows.iter().all(|r| r.count() == n)
    }

    /// The pairs of `self` that also lie in `other`.
    pub fn intersect(&self, other: &dyn Relation) -> PairRelation {
        let mut out = PairRelation::loops(self.order());
        for (a, b) in self.edges() {
            if other.related(a, b) {
                out.insert(a, b);
            }
        }
        out
    }

    pub fn from_relation(rel: &dyn Relation) -> PairRelation {
        let n = rel.order();
        let mut out = PairRelation::loops(n);
        for a in 0..n {
            for b in a + 1..n {
                if rel.related(a, b) {
                    out.insert(a, b);
                }
            }
        }
        out
    }
}

impl Relation for PairRelation {
    fn order(&self) -> usize {
        self.rows.len()
    }
    fn related(&self, a: usize, b: usize) -> bool {
        self.contains(a, b)
    }
}

impl fmt::Display for PairRelation {
    /// Non-loop edges as `a-b`, space separated; loops are implicit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges = self.edges();
        if edges.is_empty() {
            return f.write_str("(loops only)");
        }
        for (i, (a, b)) in edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PairRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PairRelation({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_display() {
        let p = EqPartition::from_labels(&[3, 7, 3, 3, 1, 9, 3]);
        assert_eq!(p.to_string(), "{0,2,3,6} {1} {4} {5}");
        let q: EqPartition = "{0,2,3,6} {1} {4} {5}".parse().unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn from_classes_rejects_bad_input() {
        assert_eq!(
            EqPartition::from_classes(3, vec![vec![0, 1], vec![1, 2]]),
            Err(PartitionError::Overlap(1))
        );
        assert_eq!(
            EqPartition::from_classes(3, vec![vec![0, 1]]),
            Err(PartitionError::Uncovered(2))
        );
    }

    #[test]
    fn pair_relation_closure_and_transitivity() {
        let mut p = PairRelation::loops(5);
        p.insert(1, 2);
        p.insert(2, 3);
        assert!(!p.is_transitive());
        assert_eq!(p.transitivity_witness(), Some((1, 2, 3)));
        assert_eq!(p.closure().to_string(), "{0} {1,2,3} {4}");
        assert_eq!(p.to_string(), "1-2 2-3");
    }

    #[test]
    fn from_equivalence_detects_non_transitive() {
        let mut p = PairRelation::loops(3);
        p.insert(0, 1);
        p.insert(1, 2);
        assert!(matches!(
            EqPartition::from_equivalence(&p),
            Err(PartitionError::NotTransitive(..))
        ));
        p.insert(0, 2);
        assert_eq!(EqPartition::from_equivalence(&p).unwrap().num_classes(), 1);
    }

    #[test]
    fn json_round_trip() {
        let p: EqPartition = "{0,1} {2}".parse().unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<EqPartition>(&s).unwrap(), p);
        let mut r = PairRelation::loops(4);
        r.insert(0, 3);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<PairRelation>(&s).unwrap(), r);
    }

    proptest! {
        #[test]
        fn meet_refines_both(a in prop::collection::vec(0u8..3, 1..12), b in prop::collection::vec(0u8..3, 1..12)) {
            let n = a.len().min(b.len());
            let pa = EqPartition::from_labels(&a[..n]);
            let pb = EqPartition::from_labels(&b[..n]);
            let m = pa.meet(&pb);
            prop_assert!(m.refines(&pa));
            prop_assert!(m.refines(&pb));
            prop_assert_eq!(EqPartition::parse(&pa.to_string()).ok().filter(|p| p.order() == n).map(|p| p == pa).unwrap_or(true), true);
        }
    }
}

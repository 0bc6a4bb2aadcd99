//! Finite semigroups given by Cayley tables.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("a semigroup needs at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    RowLength { row: usize, len: usize, n: usize },
    #[error("table has {rows} rows, expected {n}")]
    RowCount { rows: usize, n: usize },
    #[error("entry {value} at ({row},{col}) is out of range for {n} elements")]
    Range {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("not associative: ({0}·{1})·{2} ≠ {0}·({1}·{2})")]
    Associativity(usize, usize, usize),
    #[error("element {element} out of range for {n} elements")]
    NoSuchElement { element: usize, n: usize },
    #[error("subset is not closed: {0}·{1} = {2} lies outside")]
    NotClosed(usize, usize, usize),
}

/// An element of S¹: either an element of S or the identity adjoined to a
/// non-monoid. For monoids S¹ = S and `Adjoined` never appears.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtElement {
    Adjoined,
    Elem(usize),
}

impl ExtElement {
    pub fn elem(self) -> Option<usize> {
        match self {
            ExtElement::Adjoined => None,
            ExtElement::Elem(i) => Some(i),
        }
    }
}

impl std::fmt::Display for ExtElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtElement::Adjoined => f.write_str("1"),
            ExtElement::Elem(i) => write!(f, "{i}"),
        }
    }
}

/// A finite semigroup on `{0, .., n-1}`. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Semigroup {
    n: usize,
    table: Vec<u32>,
    zero: Option<usize>,
    identity: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BasicPredicates {
    pub commutative: bool,
    pub cancellative: bool,
    pub is_band: bool,
    pub is_semilattice: bool,
    pub is_null: bool,
    pub is_rectangular_band: bool,
    pub has_zero: bool,
    pub is_monoid: bool,
}

impl Semigroup {
    /// Builds and validates a semigroup from rows of its Cayley table.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, SemigroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        let mut flat = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(SemigroupError::RowLength {
                    row: r,
                    len: row.len(),
                    n,
                });
            }
            flat.extend(row.iter().map(|&v| v as u32));
        }
        Self::from_flat(n, flat)
    }

    /// Builds and validates a semigroup from a row-major flattened table.
    pub fn from_flat(n: usize, table: Vec<u32>) -> Result<Self, SemigroupError> {
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        if table.len() != n * n {
            return Err(SemigroupError::RowCount {
                rows: table.len() / n,
                n,
            });
        }
        if let Some(pos) = table.iter().position(|&v| v as usize >= n) {
            return Err(SemigroupError::Range {
                row: pos / n,
                col: pos % n,
                value: table[pos] as usize,
                n,
            });
        }
        if let Some((i, j, k)) = associativity_violation(n, &table) {
            return Err(SemigroupError::Associativity(i, j, k));
        }
        Ok(Self::from_flat_trusted(n, table))
    }

    /// Skips the O(n³) associativity check. Only for tables that are
    /// associative by construction (e.g. composition of maps).
    pub(crate) fn from_flat_trusted(n: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        let zero = (0..n).find(|&z| (0..n).all(|x| table[z * n + x] as usize == z && table[x * n + z] as usize == z));
        let identity = (0..n).find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x));
        Semigroup {
            n,
            table,
            zero,
            identity,
        }
    }

    /// Builds a table from a product function and validates it.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, SemigroupError> {
        let table = (0..n * n).map(|p| f(p / n, p % n) as u32).collect();
        Self::from_flat(n, table)
    }

    pub fn trivial() -> Self {
        Self::from_flat_trusted(1, vec![0])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    pub fn flat(&self) -> &[u32] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    pub fn check_element(&self, a: usize) -> Result<(), SemigroupError> {
        if a < self.n {
            Ok(())
        } else {
            Err(SemigroupError::NoSuchElement {
                element: a,
                n: self.n,
            })
        }
    }

    /// The elements of S¹. For a monoid this is just S.
    pub fn ext_elements(&self) -> impl Iterator<Item = ExtElement> + '_ {
        let adj = if self.identity.is_some() {
            None
        } else {
            Some(ExtElement::Adjoined)
        };
        adj.into_iter().chain((0..self.n).map(ExtElement::Elem))
    }

    /// Normalizes an element of S¹: the monoid identity is written as `Elem`.
    pub fn ext_one(&self) -> ExtElement {
        match self.identity {
            Some(e) => ExtElement::Elem(e),
            None => ExtElement::Adjoined,
        }
    }

    pub fn mul_ext(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        match (a, b) {
            (ExtElement::Adjoined, x) | (x, ExtElement::Adjoined) => x,
            (ExtElement::Elem(i), ExtElement::Elem(j)) => ExtElement::Elem(self.mul(i, j)),
        }
    }

    /// `m·a` for `m ∈ S¹`, `a ∈ S`.
    #[inline]
    pub fn mul_ext_left(&self, m: ExtElement, a: usize) -> usize {
        match m {
            ExtElement::Adjoined => a,
            ExtElement::Elem(i) => self.mul(i, a),
        }
    }

    /// `a·m` for `a ∈ S`, `m ∈ S¹`.
    #[inline]
    pub fn mul_ext_right(&self, a: usize, m: ExtElement) -> usize {
        match m {
            ExtElement::Adjoined => a,
            ExtElement::Elem(i) => self.mul(a, i),
        }
    }

    /// `a^k` for `k ≥ 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        assert!(k >= 1, "pow needs a positive exponent");
        let mut acc = a;
        for _ in 1..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotent_list(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A monoid in which every element has a two-sided inverse.
    pub fn is_group(&self) -> bool {
        match self.identity {
            None => false,
            Some(e) => (0..self.n).all(|a| (0..self.n).any(|b| self.mul(a, b) == e && self.mul(b, a) == e)),
        }
    }

    pub fn group_inverse(&self, a: usize) -> Option<usize> {
        let e = self.identity?;
        (0..self.n).find(|&b| self.mul(a, b) == e && self.mul(b, a) == e)
    }

    pub fn has_zero_divisors(&self) -> bool {
        match self.zero {
            None => false,
            Some(z) => (0..self.n).any(|a| a != z && (0..self.n).any(|b| b != z && self.mul(a, b) == z)),
        }
    }

    pub fn basic_predicates(&self) -> BasicPredicates {
        let n = self.n;
        let commutative = self.is_commutative();
        let left_cancel = (0..n).all(|a| {
            let mut seen = vec![false; n];
            self.row(a).iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true))
        });
        let right_cancel = (0..n).all(|b| {
            let mut seen = vec![false; n];
            (0..n).all(|a| !std::mem::replace(&mut seen[self.mul(a, b)], true))
        });
        let is_band = (0..n).all(|a| self.is_idempotent(a));
        let v = self.table[0];
        let is_null = self.table.iter().all(|&x| x == v);
        let is_rectangular_band =
            is_band && (0..n).all(|x| (0..n).all(|y| self.mul3(x, y, x) == x));
        BasicPredicates {
            commutative,
            cancellative: left_cancel && right_cancel,
            is_band,
            is_semilattice: is_band && commutative,
            is_null,
            is_rectangular_band,
            has_zero: self.zero.is_some(),
            is_monoid: self.identity.is_some(),
        }
    }

    /// The opposite semigroup: `x * y = y·x`.
    pub fn anti(&self) -> Semigroup {
        let n = self.n;
        let table = (0..n * n).map(|p| self.table[(p % n) * n + p / n]).collect();
        Semigroup {
            n,
            table,
            zero: self.zero,
            identity: self.identity,
        }
    }

    /// The isomorphic copy in which old element `i` is renamed `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Semigroup {
        let n = self.n;
        assert_eq!(perm.len(), n);
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)] as u32;
            }
        }
        Semigroup {
            n,
            table,
            zero: self.zero.map(|z| perm[z]),
            identity: self.identity.map(|e| perm[e]),
        }
    }

    /// Appends a new element `n` acting as a zero.
    pub fn adjoin_zero(&self) -> Semigroup {
        let n = self.n;
        let m = n + 1;
        let table = (0..m * m)
            .map(|p| {
                let (i, j) = (p / m, p % m);
                if i == n || j == n {
                    n as u32
                } else {
                    self.table[i * n + j]
                }
            })
            .collect();
        Self::from_flat_trusted(m, table)
    }

    /// Appends a new element `n` acting as an identity. When `force` is false
    /// and `self` is already a monoid, returns an unchanged copy.
    pub fn adjoin_identity(&self, force: bool) -> Semigroup {
        if !force && self.is_monoid() {
            return self.clone();
        }
        let n = self.n;
        let m = n + 1;
        let table = (0..m * m)
            .map(|p| {
                let (i, j) = (p / m, p % m);
                if i == n {
                    j as u32
                } else if j == n {
                    i as u32
                } else {
                    self.table[i * n + j]
                }
            })
            .collect();
        Self::from_flat_trusted(m, table)
    }

    /// The subsemigroup on `elements` (renumbered in the given order), if the
    /// subset is closed.
    pub fn subsemigroup(&self, elements: &[usize]) -> Result<Semigroup, SemigroupError> {
        let mut pos = vec![usize::MAX; self.n];
        for (k, &e) in elements.iter().enumerate() {
            self.check_element(e)?;
            pos[e] = k;
        }
        let m = elements.len();
        if m == 0 {
            return Err(SemigroupError::Empty);
        }
        let mut table = Vec::with_capacity(m * m);
        for &a in elements {
            for &b in elements {
                let c = self.mul(a, b);
                if pos[c] == usize::MAX {
                    return Err(SemigroupError::NotClosed(a, b, c));
                }
                table.push(pos[c] as u32);
            }
        }
        Ok(Self::from_flat_trusted(m, table))
    }

    /// Re-runs the associativity check; `None` means the table is associative.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        associativity_violation(self.n, &self.table)
    }
}

/// The lexicographically first triple `(i, j, k)` with `(ij)k ≠ i(jk)`.
pub fn associativity_violation(n: usize, t: &[u32]) -> Option<(usize, usize, usize)> {
    for i in 0..n {
        for j in 0..n {
            let ij = t[i * n + j] as usize;
            let row_ij = &t[ij * n..ij * n + n];
            let row_j = &t[j * n..j * n + n];
            let row_i = &t[i * n..i * n + n];
            for k in 0..n {
                if row_ij[k] != row_i[row_j[k] as usize] {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

impl std::fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Semigroup(n={}, zero={:?}, identity={:?})", self.n, self.zero, self.identity)?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_zero_and_identity() {
        let s = Semigroup::trivial();
        assert_eq!(s.zero(), Some(0));
        assert_eq!(s.identity(), Some(0));
        let lz = Semigroup::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(lz.zero(), None);
        assert_eq!(lz.identity(), None);
    }

    #[test]
    fn reports_first_violating_triple() {
        let err = Semigroup::from_rows(&[vec![0, 0], vec![1, 0]]).unwrap_err();
        assert_eq!(err, SemigroupError::Associativity(1, 0, 1));
        // (1·1)·1 = 0 but 1·(1·1) = 1 as well
        let t = [0u32, 0, 1, 0];
        let m = |a: usize, b: usize| t[a * 2 + b] as usize;
        assert_ne!(m(m(1, 1), 1), m(1, m(1, 1)));
    }

    #[test]
    fn range_and_shape_errors() {
        assert!(matches!(
            Semigroup::from_rows(&[vec![0, 2], vec![1, 0]]),
            Err(SemigroupError::Range { row: 0, col: 1, value: 2, .. })
        ));
        assert!(matches!(
            Semigroup::from_rows(&[vec![0, 1], vec![1]]),
            Err(SemigroupError::RowLength { row: 1, .. })
        ));
    }

    #[test]
    fn predicates_of_left_zero_band() {
        let lz = Semigroup::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        let p = lz.basic_predicates();
        assert!(p.is_rectangular_band);
        assert!(!p.commutative);
        assert!(!p.is_semilattice);
    }

    #[test]
    fn adjoining_elements() {
        let s = Semigroup::trivial().adjoin_zero();
        assert_eq!(s.order(), 2);
        assert!(s.basic_predicates().is_semilattice);
        assert_eq!(s.zero(), Some(1));
        assert_eq!(s.identity(), Some(0));
        let lz = Semigroup::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        let m = lz.adjoin_identity(false);
        assert_eq!(m.identity(), Some(2));
        assert!(m.associativity_violation().is_none());
        assert_eq!(m.adjoin_identity(false), m);
        assert_eq!(m.adjoin_identity(true).order(), 4);
    }

    #[test]
    fn ext_elements_skip_adjoined_for_monoids() {
        let lz = Semigroup::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(lz.ext_elements().count(), 3);
        assert_eq!(lz.adjoin_identity(false).ext_elements().count(), 3);
        assert_eq!(lz.mul_ext(ExtElement::Adjoined, ExtElement::Elem(1)), ExtElement::Elem(1));
    }
}

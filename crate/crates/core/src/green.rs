//! Green's relations, the natural order on idempotents, regularity and
//! ideal structure.

use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::partition::{EqPartition, UnionFind};
use crate::semigroup::Semigroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GreenError {
    #[error("the semigroup has no zero")]
    NoZero,
}

#[derive(Clone, Debug, Serialize)]
pub struct GreenData {
    pub l: EqPartition,
    pub r: EqPartition,
    pub h: EqPartition,
    pub d: EqPartition,
    pub j: EqPartition,
    /// `S¹a` for every `a`.
    #[serde(skip)]
    pub left_ideals: Vec<BitSet>,
    /// `aS¹` for every `a`.
    #[serde(skip)]
    pub right_ideals: Vec<BitSet>,
    /// `S¹aS¹` for every `a`.
    #[serde(skip)]
    pub two_sided_ideals: Vec<BitSet>,
}

pub fn left_ideals(s: &Semigroup) -> Vec<BitSet> {
    let n = s.order();
    (0..n)
        .map(|a| {
            let mut set = BitSet::new(n);
            set.insert(a);
            for x in 0..n {
                set.insert(s.mul(x, a));
            }
            set
        })
        .collect()
}

pub fn right_ideals(s: &Semigroup) -> Vec<BitSet> {
    let n = s.order();
    (0..n)
        .map(|a| {
            let mut set = BitSet::new(n);
            set.insert(a);
            for &v in s.row(a) {
                set.insert(v as usize);
            }
            set
        })
        .collect()
}

pub fn green(s: &Semigroup) -> GreenData {
    let n = s.order();
    let left = left_ideals(s);
    let right = right_ideals(s);
    let two_sided: Vec<BitSet> = left
        .iter()
        .map(|la| {
            let mut set = BitSet::new(n);
            for x in la.iter() {
                set.union_with(&right[x]);
            }
            set
        })
        .collect();
    let l = EqPartition::from_labels(&left);
    let r = EqPartition::from_labels(&right);
    let j = EqPartition::from_labels(&two_sided);
    let h = l.meet(&r);
    let d = compose_lr(&l, &r);
    GreenData {
        l,
        r,
        h,
        d,
        j,
        left_ideals: left,
        right_ideals: right,
        two_sided_ideals: two_sided,
    }
}

/// `L∘R`, checked to be an equivalence equal to `R∘L`.
fn compose_lr(l: &EqPartition, r: &EqPartition) -> EqPartition {
    let n = l.order();
    let mut meets = vec![false; l.num_classes() * r.num_classes()];
    let rc = r.num_classes();
    for x in 0..n {
        meets[l.class_index(x) * rc + r.class_index(x)] = true;
    }
    let lr = |a: usize, b: usize| meets[l.class_index(a) * rc + r.class_index(b)];
    let mut uf = UnionFind::new(n);
    for a in 0..n {
        uf.union(a, l.class_of(a)[0]);
        uf.union(a, r.class_of(a)[0]);
    }
    let d = uf.into_partition();
    for class in d.classes() {
        for &a in class {
            for &b in class {
                assert!(
                    lr(a, b) && lr(b, a),
                    "L∘R and R∘L disagree at ({a},{b}); the input is not a semigroup"
                );
            }
        }
    }
    d
}

pub fn idempotents(s: &Semigroup) -> Vec<usize> {
    s.idempotent_list()
}

/// Pairs `(e, f)` of distinct idempotents with `e ≤ f`, i.e. `ef = fe = e`.
pub fn natural_order(s: &Semigroup) -> Vec<(usize, usize)> {
    let es = s.idempotent_list();
    let mut out = Vec::new();
    for &e in &es {
        for &f in &es {
            if e != f && s.mul(e, f) == e && s.mul(f, e) == e {
                out.push((e, f));
            }
        }
    }
    out
}

/// Whether no two distinct idempotents are comparable. With `exclude_zero`
/// the zero (if any) is left out.
pub fn is_antichain(s: &Semigroup, exclude_zero: bool) -> bool {
    natural_order(s).iter().all(|&(e, f)| {
        exclude_zero && (Some(e) == s.zero() || Some(f) == s.zero())
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Regularity {
    pub regular_elements: Vec<usize>,
    pub is_regular: bool,
    pub is_inverse: bool,
    /// Inverses `b` of `a` (with `aba = a`, `bab = b`), per element.
    pub inverses: Vec<Vec<usize>>,
}

pub fn regularity(s: &Semigroup) -> Regularity {
    let n = s.order();
    let inverses: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .filter(|&b| s.mul3(a, b, a) == a && s.mul3(b, a, b) == b)
                .collect()
        })
        .collect();
    // a is regular iff it has an inverse
    let regular_elements: Vec<usize> = (0..n).filter(|&a| !inverses[a].is_empty()).collect();
    Regularity {
        is_regular: regular_elements.len() == n,
        is_inverse: inverses.iter().all(|v| v.len() == 1),
        regular_elements,
        inverses,
    }
}

pub fn is_regular_element(s: &Semigroup, a: usize) -> bool {
    (0..s.order()).any(|b| s.mul3(a, b, a) == a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdealStructure {
    pub is_simple: bool,
    pub is_zero_simple: bool,
    pub is_completely_simple: bool,
    pub is_completely_zero_simple: bool,
}

pub fn ideal_structure(s: &Semigroup) -> IdealStructure {
    let g = green(s);
    ideal_structure_with(s, &g)
}

pub fn ideal_structure_with(s: &Semigroup, g: &GreenData) -> IdealStructure {
    let n = s.order();
    let is_simple = g.j.num_classes() == 1;
    let is_zero_simple = match s.zero() {
        Some(z) if n >= 2 => {
            let square_nonzero = s.flat().iter().any(|&v| v as usize != z);
            square_nonzero && g.j.num_classes() == 2 && g.j.class_of(z).len() == 1
        }
        _ => false,
    };
    let order = natural_order(s);
    let es = s.idempotent_list();
    let primitive = |e: usize| -> bool {
        // no idempotent strictly below e except possibly the zero
        !order.iter().any(|&(f, e2)| e2 == e && Some(f) != s.zero())
    };
    let has_nonzero_primitive = es
        .iter()
        .any(|&e| Some(e) != s.zero() && primitive(e));
    let has_primitive = es.iter().any(|&e| {
        !order.iter().any(|&(_, e2)| e2 == e)
    });
    IdealStructure {
        is_simple,
        is_zero_simple,
        is_completely_simple: is_simple && has_primitive,
        is_completely_zero_simple: is_zero_simple && has_nonzero_primitive,
    }
}

/// Splits `S∖{0}` into its finest 0-direct decomposition and checks each
/// component (with 0) is completely 0-simple. `Ok(None)` when some component
/// fails that check.
pub fn zero_direct_union(s: &Semigroup) -> Result<Option<Vec<Vec<usize>>>, GreenError> {
    let z = s.zero().ok_or(GreenError::NoZero)?;
    let n = s.order();
    let mut uf = UnionFind::new(n);
    for x in 0..n {
        for y in 0..n {
            let xy = s.mul(x, y);
            if x != z && y != z && xy != z {
                uf.union(x, y);
                uf.union(x, xy);
            }
        }
    }
    let part = uf.into_partition();
    let comps: Vec<Vec<usize>> = part
        .classes()
        .iter()
        .filter(|c| c[0] != z || c.len() > 1)
        .map(|c| c.iter().copied().filter(|&x| x != z).collect())
        .collect();
    for (i, ci) in comps.iter().enumerate() {
        for cj in comps.iter().skip(i + 1) {
            for &x in ci {
                for &y in cj {
                    if s.mul(x, y) != z || s.mul(y, x) != z {
                        return Ok(None);
                    }
                }
            }
        }
        let mut elems = vec![z];
        elems.extend(ci);
        let sub = match s.subsemigroup(&elems) {
            Ok(sub) => sub,
            Err(_) => return Ok(None),
        };
        if !ideal_structure(&sub).is_completely_zero_simple {
            return Ok(None);
        }
    }
    Ok(Some(comps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain() -> Semigroup {
        Semigroup::from_rows(&[vec![0, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn group_is_one_class() {
        let z3 = Semigroup::from_fn(3, |a, b| (a + b) % 3).unwrap();
        let g = green(&z3);
        for p in [&g.l, &g.r, &g.h, &g.d, &g.j] {
            assert!(p.is_universal());
        }
        assert!(ideal_structure(&z3).is_completely_simple);
    }

    #[test]
    fn two_chain_order() {
        let s = two_chain();
        assert_eq!(natural_order(&s), vec![(0, 1)]);
        assert!(!is_antichain(&s, false));
        assert!(is_antichain(&s, true));
        // {0,1} is a trivial group with a zero adjoined
        assert_eq!(zero_direct_union(&s).unwrap(), Some(vec![vec![1]]));
    }

    #[test]
    fn null_semigroup_is_not_regular() {
        let s = Semigroup::from_rows(&[vec![0, 0], vec![0, 0]]).unwrap();
        let r = regularity(&s);
        assert_eq!(r.regular_elements, vec![0]);
        assert!(!r.is_regular);
        assert_eq!(zero_direct_union(&s).unwrap(), None);
        assert!(!ideal_structure(&s).is_zero_simple);
    }

    #[test]
    fn group_with_zero_is_zero_simple() {
        let z3 = Semigroup::from_fn(3, |a, b| (a + b) % 3).unwrap().adjoin_zero();
        let st = ideal_structure(&z3);
        assert!(st.is_zero_simple && st.is_completely_zero_simple);
        assert!(!st.is_simple);
    }

    #[test]
    fn no_zero_error() {
        let z2 = Semigroup::from_fn(2, |a, b| a ^ b).unwrap();
        assert_eq!(zero_direct_union(&z2), Err(GreenError::NoZero));
    }
}

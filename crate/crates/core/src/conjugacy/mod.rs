//! Conjugacy relations on finite semigroups.
//!
//! * `p`: `a = uv`, `b = vu` for some `u, v ∈ S¹` (reflexive, symmetric).
//! * `p*`: the transitive closure of `p`.
//! * `o`: `ag = gb` and `bh = ha` for some `g, h ∈ S¹`.
//! * `c`: as `o`, with `g ∈ P¹(a)` and `h ∈ P¹(b)`.
//! * `tr`: trace conjugacy, via mutually inverse `g, h` with
//!   `ha″g = b″`, `gh = a^ω`, `hg = b^ω`; equivalently `a″ ~p b″`.

mod strong;
mod suite;

use std::collections::HashMap;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::epigroup::EpigroupProfile;
use crate::partition::{EqPartition, PairRelation, Relation};
use crate::semigroup::{ExtElement, Semigroup};

pub use strong::{
    mutually_inverse_pairs, strong_c_witness, strong_o_witness, strong_relations, StrongRelations,
    WitnessError,
};
pub use suite::{theorem_suite, Check, Status, SuiteReport};

/// All `(uv, vu)` with `u, v ∈ S¹`.
pub fn p_relation(s: &Semigroup) -> PairRelation {
    let n = s.order();
    let mut rel = PairRelation::loops(n);
    for u in 0..n {
        for v in u + 1..n {
            rel.insert(s.mul(u, v), s.mul(v, u));
        }
    }
    rel
}

pub fn p_star(s: &Semigroup) -> EqPartition {
    p_relation(s).closure()
}

/// Some `(u, v)` with `a = uv`, `b = vu`.
pub fn p_witness(s: &Semigroup, a: usize, b: usize) -> Option<(ExtElement, ExtElement)> {
    if a == b {
        return Some((s.ext_one(), ExtElement::Elem(a)));
    }
    let n = s.order();
    (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .find(|&(u, v)| s.mul(u, v) == a && s.mul(v, u) == b)
        .map(|(u, v)| (ExtElement::Elem(u), ExtElement::Elem(v)))
}

/// Row `a` holds every `b` with `ag = gb` for some allowed `g` (always
/// including `g = 1`). `allowed(a)` restricts `g` to a subset of `S`.
fn one_sided(s: &Semigroup, allowed: Option<&[BitSet]>) -> Vec<BitSet> {
    let n = s.order();
    let mut rows: Vec<BitSet> = (0..n).map(|a| BitSet::from_indices(n, [a])).collect();
    // preimages of left multiplication by g, in CSR layout
    let mut start = vec![0usize; n + 1];
    let mut items = vec![0usize; n];
    let mut fill = vec![0usize; n];
    for g in 0..n {
        start.iter_mut().for_each(|x| *x = 0);
        for b in 0..n {
            start[s.mul(g, b) + 1] += 1;
        }
        for x in 0..n {
            start[x + 1] += start[x];
        }
        fill.copy_from_slice(&start[..n]);
        for b in 0..n {
            let x = s.mul(g, b);
            items[fill[x]] = b;
            fill[x] += 1;
        }
        for (a, row) in rows.iter_mut().enumerate() {
            if let Some(sets) = allowed {
                if !sets[a].contains(g) {
                    continue;
                }
            }
            let x = s.mul(a, g);
            for &b in &items[start[x]..start[x + 1]] {
                row.insert(b);
            }
        }
    }
    rows
}

/// Symmetric part of a one-sided relation, as a checked partition.
fn symmetric_part(rows: &[BitSet]) -> EqPartition {
    let n = rows.len();
    let mut rel = PairRelation::loops(n);
    for a in 0..n {
        for b in rows[a].iter().filter(|&b| b > a) {
            if rows[b].contains(a) {
                rel.insert(a, b);
            }
        }
    }
    EqPartition::from_equivalence(&rel).expect("conjugacy relation must be an equivalence")
}

pub fn o_conjugacy(s: &Semigroup) -> EqPartition {
    if s.zero().is_some() {
        // g = h = 0 conjugates any pair
        return EqPartition::universal(s.order());
    }
    symmetric_part(&one_sided(s, None))
}

/// `P¹(a) = P(a) ∪ {1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugatorSet {
    /// `P(a)`, a subset of `S`.
    pub base: BitSet,
    /// Always true here: the set is `P¹(a)`, which also contains the identity of `S¹`.
    pub includes_adjoined_identity: bool,
}

impl ConjugatorSet {
    pub fn contains(&self, s: &Semigroup, g: ExtElement) -> bool {
        match g {
            ExtElement::Adjoined => self.includes_adjoined_identity,
            ExtElement::Elem(i) => {
                self.base.contains(i) || (self.includes_adjoined_identity && s.identity() == Some(i))
            }
        }
    }

    pub fn elements(&self) -> Vec<usize> {
        self.base.to_vec()
    }
}

/// `P(a)` for every `a`.
pub fn conjugator_base_sets(s: &Semigroup) -> Vec<BitSet> {
    let n = s.order();
    let Some(z) = s.zero() else {
        return vec![BitSet::full(n); n];
    };
    // nonzero_right[x] = { g : xg ≠ 0 }
    let nonzero_right: Vec<BitSet> = (0..n)
        .map(|x| BitSet::from_indices(n, (0..n).filter(|&g| s.mul(x, g) != z)))
        .collect();
    (0..n)
        .map(|a| {
            if a == z {
                return BitSet::from_indices(n, [z]);
            }
            let mut set = nonzero_right[a].clone();
            for m in 0..n {
                let ma = s.mul(m, a);
                if ma != z {
                    set.intersect_with(&nonzero_right[ma]);
                }
            }
            set
        })
        .collect()
}

pub fn conjugator_sets(s: &Semigroup) -> Vec<ConjugatorSet> {
    conjugator_base_sets(s)
        .into_iter()
        .map(|base| ConjugatorSet {
            base,
            includes_adjoined_identity: true,
        })
        .collect()
}

pub fn conjugator_set(s: &Semigroup, a: usize) -> ConjugatorSet {
    conjugator_sets(s).swap_remove(a)
}

pub fn c_conjugacy(s: &Semigroup) -> EqPartition {
    let sets = conjugator_base_sets(s);
    let c = symmetric_part(&one_sided(s, Some(&sets)));
    if let Some(z) = s.zero() {
        assert_eq!(c.class_of(z), &[z], "the c-class of zero must be trivial");
    }
    c
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum TrMethod {
    /// Search over mutually inverse `g, h ∈ S¹`.
    #[default]
    Definitional,
    /// `a″ ~p b″`.
    ViaPp,
}

pub fn tr_conjugacy(s: &Semigroup, method: TrMethod) -> EqPartition {
    let prof = EpigroupProfile::new(s);
    match method {
        TrMethod::Definitional => tr_definitional(s, &prof),
        TrMethod::ViaPp => tr_via_pp(s, &prof, &p_relation(s)),
    }
}

pub(crate) fn tr_definitional(s: &Semigroup, prof: &EpigroupProfile) -> EqPartition {
    let n = s.order();
    let mut by_omega: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut by_key: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for a in 0..n {
        by_omega[prof.omega(a)].push(a);
        by_key.entry((prof.dpinv(a), prof.omega(a))).or_default().push(a);
    }
    let mut rel = PairRelation::loops(n);
    for (g, h) in mutually_inverse_pairs(s) {
        let (Some(e), Some(f)) = (s.mul_ext(g, h).elem(), s.mul_ext(h, g).elem()) else {
            continue;
        };
        for &a in &by_omega[e] {
            let x = s.mul_ext(s.mul_ext(h, ExtElement::Elem(prof.dpinv(a))), g);
            let Some(x) = x.elem() else { continue };
            if let Some(bs) = by_key.get(&(x, f)) {
                for &b in bs {
                    rel.insert(a, b);
                }
            }
        }
    }
    EqPartition::from_equivalence(&rel).expect("trace conjugacy must be an equivalence")
}

pub(crate) fn tr_via_pp(s: &Semigroup, prof: &EpigroupProfile, p: &PairRelation) -> EqPartition {
    let n = s.order();
    let mut by_dpinv: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in 0..n {
        by_dpinv[prof.dpinv(a)].push(a);
    }
    let mut rel = PairRelation::loops(n);
    for x in 0..n {
        if by_dpinv[x].is_empty() {
            continue;
        }
        for y in p.row(x).iter() {
            for &a in &by_dpinv[x] {
                for &b in &by_dpinv[y] {
                    rel.insert(a, b);
                }
            }
        }
    }
    EqPartition::from_equivalence(&rel).expect("trace conjugacy must be an equivalence")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Character {
    pub is_identity: bool,
    pub is_universal: bool,
    /// All nonzero elements are pairwise related (the zero, if any, is ignored).
    pub universal_on_nonzero: bool,
}

pub fn character_of(s: &Semigroup, rel: &dyn Relation) -> Character {
    let n = s.order();
    let nonzero: Vec<usize> = (0..n).filter(|&x| Some(x) != s.zero()).collect();
    let all_pairs = |xs: &[usize]| xs.iter().all(|&a| xs.iter().all(|&b| rel.related(a, b)));
    let all: Vec<usize> = (0..n).collect();
    Character {
        is_identity: (0..n).all(|a| (0..n).all(|b| a == b || !rel.related(a, b))),
        is_universal: all_pairs(&all),
        universal_on_nonzero: all_pairs(&nonzero),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Which {
    P,
    PStar,
    O,
    C,
    Tr,
}

pub fn relation_character(s: &Semigroup, which: Which) -> Character {
    match which {
        Which::P => character_of(s, &p_relation(s)),
        Which::PStar => character_of(s, &p_star(s)),
        Which::O => character_of(s, &o_conjugacy(s)),
        Which::C => character_of(s, &c_conjugacy(s)),
        Which::Tr => character_of(s, &tr_conjugacy(s, TrMethod::Definitional)),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Characters {
    pub p: Character,
    pub p_star: Character,
    pub o: Character,
    pub c: Character,
    pub tr: Character,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyReport {
    pub p: PairRelation,
    pub p_transitive: bool,
    pub p_star: EqPartition,
    pub o: EqPartition,
    pub c: EqPartition,
    pub tr: EqPartition,
    pub so: PairRelation,
    pub sc: PairRelation,
    /// `p ⊆ p* ⊆ tr ⊆ o` and `c ⊆ o`.
    pub inclusion_diagram_ok: bool,
    pub characters: Characters,
}

pub fn conjugacy_report(s: &Semigroup) -> ConjugacyReport {
    let prof = EpigroupProfile::new(s);
    let p = p_relation(s);
    let p_star = p.closure();
    let o = o_conjugacy(s);
    let c = c_conjugacy(s);
    let tr = tr_definitional(s, &prof);
    let strong = strong_relations(s);
    use crate::partition::is_subrelation as sub;
    let inclusion_diagram_ok = sub(&p, &p_star) && sub(&p_star, &tr) && sub(&tr, &o) && sub(&c, &o);
    ConjugacyReport {
        p_transitive: p.is_transitive(),
        characters: Characters {
            p: character_of(s, &p),
            p_star: character_of(s, &p_star),
            o: character_of(s, &o),
            c: character_of(s, &c),
            tr: character_of(s, &tr),
        },
        p,
        p_star,
        o,
        c,
        tr,
        so: strong.so,
        sc: strong.sc,
        inclusion_diagram_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_o(s: &Semigroup, a: usize, b: usize, restrict: bool) -> bool {
        let sets = conjugator_sets(s);
        let conj = |x: usize, y: usize| {
            s.ext_elements().any(|g| {
                (!restrict || sets[x].contains(s, g))
                    && s.mul_ext(ExtElement::Elem(x), g) == s.mul_ext(g, ExtElement::Elem(y))
            })
        };
        conj(a, b) && conj(b, a)
    }

    fn brute_p(s: &Semigroup, a: usize, b: usize) -> bool {
        s.ext_elements().any(|u| {
            s.ext_elements().any(|v| {
                s.mul_ext(u, v) == ExtElement::Elem(a) && s.mul_ext(v, u) == ExtElement::Elem(b)
            })
        })
    }

    fn samples() -> Vec<Semigroup> {
        vec![
            Semigroup::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap(),
            Semigroup::from_rows(&[vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 0]]).unwrap(),
            Semigroup::from_fn(3, |a, b| (a + b) % 3).unwrap().adjoin_zero(),
            Semigroup::from_rows(&[
                vec![0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 1],
                vec![0, 0, 0, 0, 2],
                vec![0, 0, 1, 0, 3],
                vec![0, 1, 2, 3, 4],
            ])
            .unwrap(),
        ]
    }

    #[test]
    fn relations_match_brute_force() {
        for s in samples() {
            let n = s.order();
            let p = p_relation(&s);
            let o = o_conjugacy(&s);
            let c = c_conjugacy(&s);
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(p.contains(a, b), brute_p(&s, a, b));
                    assert_eq!(o.same_class(a, b), brute_o(&s, a, b, false));
                    assert_eq!(c.same_class(a, b), brute_o(&s, a, b, true));
                }
            }
        }
    }

    #[test]
    fn tr_methods_agree_on_samples() {
        for s in samples() {
            assert_eq!(tr_conjugacy(&s, TrMethod::Definitional), tr_conjugacy(&s, TrMethod::ViaPp));
        }
    }

    #[test]
    fn left_zero_o_universal() {
        let s = Semigroup::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        assert!(o_conjugacy(&s).is_universal());
        assert!(relation_character(&s, Which::P).is_universal);
    }
}

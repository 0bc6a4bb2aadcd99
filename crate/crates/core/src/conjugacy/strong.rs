//! Conjugacy by mutually inverse conjugators, and the explicit witness
//! construction `h = da(cda)′`, `g = chc`.

use serde::Serialize;
use thiserror::Error;

use super::conjugator_sets;
use crate::epigroup::EpigroupProfile;
use crate::partition::PairRelation;
use crate::semigroup::{ExtElement, Semigroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("precondition fails: {0}")]
    Precondition(String),
    #[error("formula gives g = {g}, h = {h}, which {reason}")]
    FormulaInapplicable {
        g: ExtElement,
        h: ExtElement,
        reason: String,
    },
    #[error("formula output failed verification: {0}")]
    Internal(String),
}

/// All pairs `(g, h)` in `S¹ × S¹` with `ghg = g` and `hgh = h`.
pub fn mutually_inverse_pairs(s: &Semigroup) -> Vec<(ExtElement, ExtElement)> {
    let n = s.order();
    let mut out = Vec::new();
    if s.identity().is_none() {
        out.push((ExtElement::Adjoined, ExtElement::Adjoined));
    }
    for g in 0..n {
        for h in 0..n {
            if s.mul3(g, h, g) == g && s.mul3(h, g, h) == h {
                out.push((ExtElement::Elem(g), ExtElement::Elem(h)));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct StrongRelations {
    pub so: PairRelation,
    pub sc: PairRelation,
}

pub fn strong_relations(s: &Semigroup) -> StrongRelations {
    let n = s.order();
    let sets = conjugator_sets(s);
    let mut so = PairRelation::loops(n);
    let mut sc = PairRelation::loops(n);
    let pairs = mutually_inverse_pairs(s);
    let mut pre: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut current: Option<usize> = None;
    for (g, h) in pairs {
        let ExtElement::Elem(gi) = g else {
            // g = h = 1 relates each element only to itself
            continue;
        };
        if current != Some(gi) {
            pre.iter_mut().for_each(Vec::clear);
            for b in 0..n {
                pre[s.mul(gi, b)].push(b);
            }
            current = Some(gi);
        }
        for a in 0..n {
            let ha = s.mul_ext_left(h, a);
            for &b in &pre[s.mul(a, gi)] {
                if s.mul_ext_right(b, h) == ha {
                    so.insert(a, b);
                    if sets[a].contains(s, g) && sets[b].contains(s, h) {
                        sc.insert(a, b);
                    }
                }
            }
        }
    }
    StrongRelations { so, sc }
}

fn check_pre(s: &Semigroup, a: usize, b: usize, c: ExtElement, d: ExtElement) -> Result<(), WitnessError> {
    s.check_element(a)
        .and_then(|_| s.check_element(b))
        .map_err(|e| WitnessError::Precondition(e.to_string()))?;
    let (ea, eb) = (ExtElement::Elem(a), ExtElement::Elem(b));
    if s.mul_ext(ea, c) != s.mul_ext(c, eb) {
        return Err(WitnessError::Precondition(format!("ac ≠ cb for a={a}, b={b}, c={c}")));
    }
    if s.mul_ext(eb, d) != s.mul_ext(d, ea) {
        return Err(WitnessError::Precondition(format!("bd ≠ da for a={a}, b={b}, d={d}")));
    }
    Ok(())
}

/// Mutually inverse conjugators built from any conjugators `c, d` of `a, b`
/// (`ac = cb`, `bd = da`), as `h = da(cda)′`, `g = chc`.
pub fn strong_o_witness(
    s: &Semigroup,
    a: usize,
    b: usize,
    c: ExtElement,
    d: ExtElement,
) -> Result<(ExtElement, ExtElement), WitnessError> {
    check_pre(s, a, b, c, d)?;
    let prof = EpigroupProfile::new(s);
    let m = |x: ExtElement, y: ExtElement| s.mul_ext(x, y);
    let (ea, eb) = (ExtElement::Elem(a), ExtElement::Elem(b));
    let cda = m(m(c, d), ea).elem().expect("cda lies in S");
    let h = m(m(d, ea), ExtElement::Elem(prof.pinv(cda)));
    let g = m(m(c, h), c);
    let ok = m(m(g, h), g) == g && m(m(h, g), h) == h && m(ea, g) == m(g, eb) && m(eb, h) == m(h, ea);
    if !ok {
        return Err(WitnessError::Internal(format!("g={g}, h={h} for a={a}, b={b}")));
    }
    Ok((g, h))
}

/// As [`strong_o_witness`], additionally requiring `c ∈ P¹(a)`, `d ∈ P¹(b)`
/// on input and `g ∈ P¹(a)`, `h ∈ P¹(b)` on output.
pub fn strong_c_witness(
    s: &Semigroup,
    a: usize,
    b: usize,
    c: ExtElement,
    d: ExtElement,
) -> Result<(ExtElement, ExtElement), WitnessError> {
    check_pre(s, a, b, c, d)?;
    let sets = conjugator_sets(s);
    if !sets[a].contains(s, c) || !sets[b].contains(s, d) {
        return Err(WitnessError::Precondition(format!(
            "c={c} ∉ P¹({a}) or d={d} ∉ P¹({b})"
        )));
    }
    let (g, h) = strong_o_witness(s, a, b, c, d)?;
    if !sets[a].contains(s, g) || !sets[b].contains(s, h) {
        return Err(WitnessError::FormulaInapplicable {
            g,
            h,
            reason: format!("is not a pair in P¹({a}) × P¹({b})"),
        });
    }
    Ok((g, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::o_conjugacy;

    #[test]
    fn left_zero_witness() {
        let s = Semigroup::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        // aa = ab and bb = ba, so c = a, d = b conjugate a = 0 and b = 1
        let (g, h) = strong_o_witness(&s, 0, 1, ExtElement::Elem(0), ExtElement::Elem(1)).unwrap();
        assert_eq!((g, h), (ExtElement::Elem(0), ExtElement::Elem(1)));
        let st = strong_relations(&s);
        assert!(st.so.contains(0, 1));
    }

    #[test]
    fn reflexive_case() {
        let z3 = Semigroup::from_fn(3, |a, b| (a + b) % 3).unwrap();
        let one = z3.ext_one();
        let (g, h) = strong_o_witness(&z3, 2, 2, one, one).unwrap();
        assert_eq!(z3.mul_ext(g, h), z3.mul_ext(h, g));
    }

    #[test]
    fn precondition_checked() {
        let z3 = Semigroup::from_fn(3, |a, b| (a + b) % 3).unwrap();
        assert!(matches!(
            strong_o_witness(&z3, 1, 2, ExtElement::Elem(0), ExtElement::Elem(0)),
            Err(WitnessError::Precondition(_))
        ));
    }

    #[test]
    fn so_equals_o_on_small_examples() {
        let s = Semigroup::from_rows(&[vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 1]]).unwrap();
        let o = o_conjugacy(&s);
        let so = strong_relations(&s).so;
        assert!(crate::partition::same_relation(&o, &so));
    }
}

//! Monogenic subsemigroups, pseudo-inverses and epigroup varieties.
//!
//! For an element `a` of a finite semigroup the powers `a, a², ..` are
//! eventually periodic. Writing `index` and `period` for the tail length and
//! the cycle length, `a^ω` is the unique idempotent power and the
//! pseudo-inverse `a′` is the inverse of `a^(ω+1)` in the group of `a^ω`.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::semigroup::{Semigroup, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EpigroupError {
    #[error("pseudo-inverse check failed for element {element}: {detail}")]
    Internal { element: usize, detail: String },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonogenicData {
    pub index: usize,
    pub period: usize,
    /// Least `k ≥ index` divisible by `period`; `a^k = a^ω`.
    pub omega_exp: usize,
    pub omega: usize,
    pub pinv: usize,
    pub double_pinv: usize,
}

pub fn monogenic(s: &Semigroup, a: usize) -> Result<MonogenicData, EpigroupError> {
    s.check_element(a)?;
    let mut first_seen: HashMap<usize, usize> = HashMap::new();
    let mut powers = vec![a];
    first_seen.insert(a, 1);
    let (index, period) = loop {
        let k = powers.len() + 1;
        let next = s.mul(*powers.last().unwrap(), a);
        if let Some(&i) = first_seen.get(&next) {
            break (i, k - i);
        }
        first_seen.insert(next, k);
        powers.push(next);
    };
    // powers[k-1] = a^k; reduce larger exponents into the cycle
    let power = |k: usize| -> usize {
        let k = if k > powers.len() {
            index + (k - index) % period
        } else {
            k
        };
        powers[k - 1]
    };
    let omega_exp = index.div_ceil(period) * period;
    let mut x = period - 1;
    while x < index.max(1) {
        x += period;
    }
    let data = MonogenicData {
        index,
        period,
        omega_exp,
        omega: power(omega_exp),
        pinv: power(x.max(1)),
        double_pinv: s.mul3(a, power(x.max(1)), a),
    };

    let fail = |detail: &str| EpigroupError::Internal {
        element: a,
        detail: detail.to_string(),
    };
    let p = data.pinv;
    if s.mul3(p, a, p) != p {
        return Err(fail("a'aa' != a'"));
    }
    if s.mul(a, p) != s.mul(p, a) {
        return Err(fail("aa' != a'a"));
    }
    if s.mul(power(index + 1), p) != power(index) {
        return Err(fail("a^(n+1)a' != a^n"));
    }
    if s.mul(a, p) != data.omega || !s.is_idempotent(data.omega) {
        return Err(fail("aa' is not the idempotent power"));
    }
    Ok(data)
}

/// Per-element monogenic data of a whole semigroup.
#[derive(Clone, Debug, Serialize)]
pub struct EpigroupProfile {
    pub elements: Vec<MonogenicData>,
}

impl EpigroupProfile {
    pub fn new(s: &Semigroup) -> Self {
        let elements = (0..s.order())
            .map(|a| monogenic(s, a).expect("pseudo-inverse identities hold in every finite semigroup"))
            .collect();
        EpigroupProfile { elements }
    }

    #[inline]
    pub fn pinv(&self, a: usize) -> usize {
        self.elements[a].pinv
    }

    #[inline]
    pub fn dpinv(&self, a: usize) -> usize {
        self.elements[a].double_pinv
    }

    #[inline]
    pub fn omega(&self, a: usize) -> usize {
        self.elements[a].omega
    }

    #[inline]
    pub fn index(&self, a: usize) -> usize {
        self.elements[a].index
    }

    pub fn max_index(&self) -> usize {
        self.elements.iter().map(|d| d.index).max().unwrap_or(1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EpiClassification {
    pub epi_elements: Vec<usize>,
    /// Least `n` with `a ∈ Epi_n(S)`, i.e. the index of `a`.
    pub epi_index_bound: Vec<usize>,
    pub is_epigroup: bool,
    pub is_completely_regular: bool,
    pub min_n_with_s_eq_epi_n: usize,
}

pub fn epi_classification(s: &Semigroup) -> EpiClassification {
    let prof = EpigroupProfile::new(s);
    let bounds: Vec<usize> = prof.elements.iter().map(|d| d.index).collect();
    let max = prof.max_index();
    EpiClassification {
        epi_elements: (0..s.order()).collect(),
        epi_index_bound: bounds,
        is_epigroup: true,
        is_completely_regular: max == 1,
        min_n_with_s_eq_epi_n: max,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VarietyMembership {
    /// `S ∈ E_n` exactly for `n ≥ max_index`.
    pub max_index: usize,
    pub in_e1: bool,
    pub in_e2: bool,
    pub in_w: bool,
    pub in_v: bool,
}

impl VarietyMembership {
    pub fn in_e_n(&self, n: usize) -> bool {
        self.max_index <= n
    }
}

pub fn variety_membership(s: &Semigroup) -> VarietyMembership {
    let prof = EpigroupProfile::new(s);
    variety_membership_with(s, &prof)
}

pub fn variety_membership_with(s: &Semigroup, prof: &EpigroupProfile) -> VarietyMembership {
    let n = s.order();
    let max_index = prof.max_index();
    let in_e2 = max_index <= 2;
    let in_w = in_e2
        && (0..n).all(|x| (0..n).all(|y| {
            let xy = s.mul(x, y);
            prof.dpinv(xy) == xy
        }));
    let in_v = (0..n).all(|x| {
        (0..n).all(|y| {
            let xy = s.mul(x, y);
            s.mul(prof.dpinv(x), y) == xy && s.mul(x, prof.dpinv(y)) == xy
        })
    });
    VarietyMembership {
        max_index,
        in_e1: max_index <= 1,
        in_e2,
        in_w,
        in_v,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityViolation {
    pub identity: &'static str,
    pub x: usize,
    pub y: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PinvIdentityReport {
    pub checked: Vec<&'static str>,
    pub violations: Vec<IdentityViolation>,
}

impl PinvIdentityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the standard unary identities of epigroups on every element
/// (and every pair, for the two-variable one).
pub fn pinv_identity_suite(s: &Semigroup) -> PinvIdentityReport {
    let prof = EpigroupProfile::new(s);
    let n = s.order();
    let p = |a: usize| prof.pinv(a);
    let mut violations = Vec::new();
    let unary: [(&'static str, &dyn Fn(usize) -> bool); 6] = [
        ("x'xx' = x'", &|x| s.mul3(p(x), x, p(x)) == p(x)),
        ("xx' = x'x", &|x| s.mul(x, p(x)) == s.mul(p(x), x)),
        ("xx'x = x''", &|x| s.mul3(x, p(x), x) == p(p(x))),
        ("x''' = x'", &|x| p(p(p(x))) == p(x)),
        ("x^(n+1)x' = x^n", &|x| {
            let k = prof.index(x);
            s.mul(s.pow(x, k + 1), p(x)) == s.pow(x, k)
        }),
        ("x^w = x'^m x^m (m = 1..3)", &|x| {
            (1..=3).all(|m| s.mul(s.pow(p(x), m), s.pow(x, m)) == prof.omega(x))
        }),
    ];
    for (name, check) in unary.iter() {
        for x in 0..n {
            if !check(x) {
                violations.push(IdentityViolation {
                    identity: name,
                    x,
                    y: None,
                });
            }
        }
    }
    let binary = "(xy)'x = x(yx)'";
    for x in 0..n {
        for y in 0..n {
            if s.mul(p(s.mul(x, y)), x) != s.mul(x, p(s.mul(y, x))) {
                violations.push(IdentityViolation {
                    identity: binary,
                    x,
                    y: Some(y),
                });
            }
        }
    }
    let mut checked: Vec<&'static str> = unary.iter().map(|(name, _)| *name).collect();
    checked.push(binary);
    PinvIdentityReport { checked, violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotent_profile() {
        let s = Semigroup::from_rows(&[vec![0, 0], vec![0, 1]]).unwrap();
        let d = monogenic(&s, 1).unwrap();
        assert_eq!((d.index, d.period, d.pinv, d.omega, d.double_pinv), (1, 1, 1, 1, 1));
    }

    #[test]
    fn cyclic_group_generator() {
        let z4 = Semigroup::from_fn(4, |a, b| (a + b) % 4).unwrap();
        let d = monogenic(&z4, 1).unwrap();
        assert_eq!((d.index, d.period, d.pinv, d.omega), (1, 4, 3, 0));
    }

    #[test]
    fn nilpotent_element() {
        // element 1 is x, 2 is x², 0 is x³ = zero
        let t = Semigroup::from_rows(&[vec![0, 0, 0], vec![0, 2, 0], vec![0, 0, 0]]).unwrap();
        let d = monogenic(&t, 1).unwrap();
        assert_eq!((d.index, d.period, d.pinv, d.omega), (3, 1, 0, 0));
    }

    #[test]
    fn e1_w_e2_separating_monoid() {
        // identity e = 0; {a, b} = {1, 2} null with every product a = 1
        let s = Semigroup::from_rows(&[vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 1]]).unwrap();
        let v = variety_membership(&s);
        assert!(v.in_e2);
        assert!(!v.in_w);
        assert!(pinv_identity_suite(&s).ok());
    }

    #[test]
    fn null_semigroup_in_w() {
        let s = Semigroup::from_rows(&[vec![0; 3], vec![0; 3], vec![0; 3]]).unwrap();
        let v = variety_membership(&s);
        assert!(v.in_w && !v.in_e1);
    }
}

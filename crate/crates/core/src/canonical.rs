//! Canonical forms of Cayley tables up to isomorphism or equivalence
//! (isomorphism or anti-isomorphism).
//!
//! The canonical form is the lexicographically least row-major table over all
//! `n!` relabelings. Cost is `O(n!·n²)` in the worst case, with early abort on
//! every comparison, so this is meant for orders up to about 8.

use serde::{Deserialize, Serialize};

use crate::semigroup::Semigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum CanonMode {
    /// Relabelings only.
    Isomorphism,
    /// Relabelings of the table and of its transpose.
    #[default]
    Equivalence,
}

/// Canonical flattened table of `s`.
pub fn canonical_form(s: &Semigroup, mode: CanonMode) -> Vec<u8> {
    let n = s.order();
    assert!(n <= 255, "canonical forms are only supported for small orders");
    let t: Vec<u8> = s.flat().iter().map(|&v| v as u8).collect();
    let mut best = least_relabeling(n, &t, None);
    if mode == CanonMode::Equivalence {
        let tt: Vec<u8> = (0..n * n).map(|p| t[(p % n) * n + p / n]).collect();
        best = least_relabeling(n, &tt, Some(best));
    }
    best
}

/// Canonical form of a raw flattened table (assumed associative).
pub fn canonical_form_raw(n: usize, t: &[u8], mode: CanonMode) -> Vec<u8> {
    let mut best = least_relabeling(n, t, None);
    if mode == CanonMode::Equivalence {
        let tt: Vec<u8> = (0..n * n).map(|p| t[(p % n) * n + p / n]).collect();
        best = least_relabeling(n, &tt, Some(best));
    }
    best
}

pub fn equivalent(a: &Semigroup, b: &Semigroup) -> bool {
    a.order() == b.order()
        && canonical_form(a, CanonMode::Equivalence) == canonical_form(b, CanonMode::Equivalence)
}

pub fn isomorphic(a: &Semigroup, b: &Semigroup) -> bool {
    a.order() == b.order()
        && canonical_form(a, CanonMode::Isomorphism) == canonical_form(b, CanonMode::Isomorphism)
}

/// Least relabeled table of `t`, optionally starting from an incumbent.
fn least_relabeling(n: usize, t: &[u8], incumbent: Option<Vec<u8>>) -> Vec<u8> {
    // pi[k] = old element placed at position k; sigma = pi^{-1}
    let mut pi: Vec<usize> = (0..n).collect();
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut best = match incumbent {
        Some(b) => b,
        None => t.to_vec(),
    };
    let mut cand = vec![0u8; n * n];

    let mut consider = |pi: &[usize], sigma: &[usize], best: &mut Vec<u8>| {
        for p in 0..n * n {
            let v = sigma[t[pi[p / n] * n + pi[p % n]] as usize] as u8;
            if v > best[p] {
                return;
            }
            if v < best[p] {
                cand[..p].copy_from_slice(&best[..p]);
                cand[p] = v;
                for q in p + 1..n * n {
                    cand[q] = sigma[t[pi[q / n] * n + pi[q % n]] as usize] as u8;
                }
                best.copy_from_slice(&cand);
                return;
            }
        }
    };

    consider(&pi, &sigma, &mut best);
    // Heap's algorithm, iterative form
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            pi.swap(j, i);
            sigma[pi[j]] = j;
            sigma[pi[i]] = i;
            consider(&pi, &sigma, &mut best);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(n: usize, t: &[u8], mode: CanonMode) -> Vec<u8> {
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for x in (0..n).filter(|x| !p.contains(x)) {
                    let mut q = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
            perms = next;
        }
        let tt: Vec<u8> = (0..n * n).map(|p| t[(p % n) * n + p / n]).collect();
        let tables: Vec<&[u8]> = match mode {
            CanonMode::Isomorphism => vec![t],
            CanonMode::Equivalence => vec![t, &tt],
        };
        let mut best: Option<Vec<u8>> = None;
        for tab in tables {
            for sigma in &perms {
                // sigma[old] = new
                let mut out = vec![0u8; n * n];
                for i in 0..n {
                    for j in 0..n {
                        out[sigma[i] * n + sigma[j]] = sigma[tab[i * n + j] as usize] as u8;
                    }
                }
                if best.as_ref().is_none_or(|b| out < *b) {
                    best = Some(out);
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn agrees_with_brute_force_on_order_three() {
        // every associative table on 3 points
        for code in 0..3usize.pow(9) {
            let mut t = [0u8; 9];
            let mut c = code;
            for v in t.iter_mut() {
                *v = (c % 3) as u8;
                c /= 3;
            }
            let Ok(s) = Semigroup::from_flat(3, t.iter().map(|&v| v as u32).collect()) else {
                continue;
            };
            for mode in [CanonMode::Isomorphism, CanonMode::Equivalence] {
                assert_eq!(canonical_form(&s, mode), brute_force(3, &t, mode));
            }
        }
    }

    #[test]
    fn left_and_right_zero_are_equivalent_not_isomorphic() {
        let lz = Semigroup::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        let rz = Semigroup::from_rows(&[vec![0, 1], vec![0, 1]]).unwrap();
        assert!(equivalent(&lz, &rz));
        assert!(!isomorphic(&lz, &rz));
    }

    #[test]
    fn group_and_semilattice_differ() {
        let z2 = Semigroup::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let sl = Semigroup::from_rows(&[vec![0, 0], vec![0, 1]]).unwrap();
        assert!(!equivalent(&z2, &sl));
    }

    #[test]
    fn four_classes_on_two_points() {
        let mut forms = std::collections::BTreeSet::new();
        for code in 0..16u32 {
            let t: Vec<u32> = (0..4).map(|b| (code >> b) & 1).collect();
            if let Ok(s) = Semigroup::from_flat(2, t) {
                forms.insert(canonical_form(&s, CanonMode::Equivalence));
            }
        }
        assert_eq!(forms.len(), 4);
    }
}

//! Brute-force reference implementations written straight from the
//! definitions, sharing nothing with the library beyond table access.
#![allow(dead_code, clippy::needless_range_loop)]

use semiconj::Semigroup;

/// Multiplication on S¹ with the elements of S at `0..n` and, when S is
/// not a monoid, the adjoined identity at `n`.
pub struct Ext<'a> {
    pub s: &'a Semigroup,
    pub size: usize,
}

impl<'a> Ext<'a> {
    pub fn new(s: &'a Semigroup) -> Self {
        let n = s.order();
        let has_identity = (0..n).any(|e| (0..n).all(|x| s.mul(e, x) == x && s.mul(x, e) == x));
        Ext {
            s,
            size: if has_identity { n } else { n + 1 },
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.s.order();
        if a == n {
            b
        } else if b == n {
            a
        } else {
            self.s.mul(a, b)
        }
    }

    pub fn one(&self) -> usize {
        let n = self.s.order();
        if self.size > n {
            return n;
        }
        (0..n)
            .find(|&e| (0..n).all(|x| self.s.mul(e, x) == x && self.s.mul(x, e) == x))
            .unwrap()
    }
}

pub type Matrix = Vec<Vec<bool>>;

pub fn zero_of(s: &Semigroup) -> Option<usize> {
    let n = s.order();
    (0..n).find(|&z| (0..n).all(|x| s.mul(z, x) == z && s.mul(x, z) == z))
}

/// Sorted classes of an equivalence given as a matrix; panics if it is not
/// an equivalence.
pub fn classes(m: &Matrix) -> Vec<Vec<usize>> {
    let n = m.len();
    for a in 0..n {
        assert!(m[a][a], "not reflexive at {a}");
        for b in 0..n {
            assert_eq!(m[a][b], m[b][a], "not symmetric at ({a},{b})");
            for c in 0..n {
                assert!(!(m[a][b] && m[b][c]) || m[a][c], "not transitive at ({a},{b},{c})");
            }
        }
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&b| m[a][b]).collect();
        for &b in &class {
            seen[b] = true;
        }
        out.push(class);
    }
    out
}

pub fn closure(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut r = m.clone();
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

pub fn is_transitive(m: &Matrix) -> bool {
    closure(m) == *m
}

/// Unordered non-loop pairs of a relation.
pub fn edges(m: &Matrix) -> Vec<(usize, usize)> {
    let n = m.len();
    let mut v = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if m[a][b] {
                v.push((a, b));
            }
        }
    }
    v
}

pub fn p_naive(s: &Semigroup) -> Matrix {
    let n = s.order();
    let e = Ext::new(s);
    let mut m = vec![vec![false; n]; n];
    for a in 0..n {
        m[a][a] = true;
    }
    for u in 0..e.size {
        for v in 0..e.size {
            let (x, y) = (e.mul(u, v), e.mul(v, u));
            if x < n && y < n {
                m[x][y] = true;
                m[y][x] = true;
            }
        }
    }
    m
}

/// `g` with `ag = gb`, drawn from S¹ and filtered by `allowed(a, g)`.
fn two_sided(s: &Semigroup, allowed: &dyn Fn(usize, usize) -> bool) -> Matrix {
    let n = s.order();
    let e = Ext::new(s);
    let fwd = |a: usize, b: usize| (0..e.size).any(|g| allowed(a, g) && e.mul(a, g) == e.mul(g, b));
    (0..n)
        .map(|a| (0..n).map(|b| fwd(a, b) && fwd(b, a)).collect())
        .collect()
}

pub fn o_naive(s: &Semigroup) -> Matrix {
    two_sided(s, &|_, _| true)
}

/// `P¹(a)` as membership over S¹ (index `n` is the adjoined identity).
pub fn p1_naive(s: &Semigroup, a: usize) -> Vec<bool> {
    let n = s.order();
    let e = Ext::new(s);
    let one = e.one();
    let z = zero_of(s);
    (0..e.size)
        .map(|g| {
            if g == one {
                return true;
            }
            if g == n {
                return false;
            }
            match z {
                None => true,
                Some(z) if a == z => g == z,
                Some(z) => (0..e.size).all(|m| {
                    let ma = e.mul(m, a);
                    ma == z || s.mul(ma, g) != z
                }),
            }
        })
        .collect()
}

/// `P(a)` as a sorted list of elements of S.
pub fn p_set_naive(s: &Semigroup, a: usize) -> Vec<usize> {
    let n = s.order();
    let z = zero_of(s);
    (0..n)
        .filter(|&g| match z {
            None => true,
            Some(z) if a == z => g == z,
            Some(z) => {
                let e = Ext::new(s);
                (0..e.size).all(|m| {
                    let ma = e.mul(m, a);
                    ma == z || s.mul(ma, g) != z
                })
            }
        })
        .collect()
}

pub fn c_naive(s: &Semigroup) -> Matrix {
    let sets: Vec<Vec<bool>> = (0..s.order()).map(|a| p1_naive(s, a)).collect();
    two_sided(s, &|a, g| sets[a][g])
}

/// Index, period and the pseudo-inverse computed as the inverse of `a·a^ω`
/// inside the cyclic group of powers.
pub fn epi_naive(s: &Semigroup, a: usize) -> (usize, usize, usize, usize) {
    let mut powers = vec![a];
    loop {
        let next = s.mul(*powers.last().unwrap(), a);
        if let Some(i) = powers.iter().position(|&x| x == next) {
            let index = i + 1;
            let period = powers.len() + 1 - index;
            let cycle: Vec<usize> = powers[i..].to_vec();
            let e = *cycle.iter().find(|&&x| s.mul(x, x) == x).unwrap();
            let ae = s.mul(a, e);
            let inv = *cycle
                .iter()
                .find(|&&x| s.mul(x, ae) == e && s.mul(ae, x) == e)
                .unwrap();
            return (index, period, inv, e);
        }
        powers.push(next);
    }
}

pub fn pinv_naive(s: &Semigroup, a: usize) -> usize {
    epi_naive(s, a).2
}

pub fn dpinv_naive(s: &Semigroup, a: usize) -> usize {
    s.mul(s.mul(a, pinv_naive(s, a)), a)
}

/// Mutually inverse pairs over S¹.
fn inverse_pairs(e: &Ext) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for g in 0..e.size {
        for h in 0..e.size {
            if e.mul(e.mul(g, h), g) == g && e.mul(e.mul(h, g), h) == h {
                v.push((g, h));
            }
        }
    }
    v
}

/// Trace conjugacy from its defining equations: mutually inverse `g, h`
/// with `gh = a^ω`, `hg = b^ω` and `h a″ g = b″`.
pub fn tr_naive(s: &Semigroup) -> Matrix {
    let n = s.order();
    let e = Ext::new(s);
    let pairs = inverse_pairs(&e);
    let om: Vec<usize> = (0..n).map(|a| epi_naive(s, a).3).collect();
    let dp: Vec<usize> = (0..n).map(|a| dpinv_naive(s, a)).collect();
    let mut m = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            m[a][b] = pairs.iter().any(|&(g, h)| {
                e.mul(g, h) == om[a] && e.mul(h, g) == om[b] && e.mul(e.mul(h, dp[a]), g) == dp[b]
            });
        }
    }
    m
}

/// Strong variants: conjugators `g, h` mutually inverse, optionally
/// restricted to `P¹(a)`, `P¹(b)`.
pub fn strong_naive(s: &Semigroup, restricted: bool) -> Matrix {
    let n = s.order();
    let e = Ext::new(s);
    let pairs = inverse_pairs(&e);
    let sets: Vec<Vec<bool>> = (0..n).map(|a| p1_naive(s, a)).collect();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    pairs.iter().any(|&(g, h)| {
                        e.mul(a, g) == e.mul(g, b)
                            && e.mul(b, h) == e.mul(h, a)
                            && (!restricted || (sets[a][g] && sets[b][h]))
                    })
                })
                .collect()
        })
        .collect()
}

/// Green's J from principal two-sided ideals.
pub fn j_naive(s: &Semigroup) -> Matrix {
    let n = s.order();
    let e = Ext::new(s);
    let ideal = |a: usize| -> Vec<bool> {
        let mut v = vec![false; n];
        for x in 0..e.size {
            for y in 0..e.size {
                let t = e.mul(e.mul(x, a), y);
                v[t] = true;
            }
        }
        v
    };
    let ideals: Vec<Vec<bool>> = (0..n).map(ideal).collect();
    (0..n).map(|a| (0..n).map(|b| ideals[a] == ideals[b]).collect()).collect()
}

pub fn is_subrelation(r: &Matrix, t: &Matrix) -> bool {
    r.iter().zip(t).all(|(x, y)| x.iter().zip(y).all(|(&u, &v)| !u || v))
}

pub fn parts(classes: &[&[usize]]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = classes.iter().map(|c| {
        let mut c = c.to_vec();
        c.sort();
        c
    }).collect();
    v.sort();
    v
}

pub fn lib_classes(p: &semiconj::EqPartition) -> Vec<Vec<usize>> {
    let mut v = p.classes().to_vec();
    v.sort();
    v
}

pub fn lib_matrix(r: &dyn semiconj::Relation) -> Matrix {
    let n = r.order();
    (0..n).map(|a| (0..n).map(|b| r.related(a, b)).collect()).collect()
}

//! Standard families of finite semigroups, Rees matrix semigroups, variants,
//! direct products and a set of named example tables.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::epigroup::{variety_membership, EpigroupProfile};
use crate::semigroup::{Semigroup, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("the structure group is not a group")]
    NotAGroup,
    #[error("sandwich matrix {0}")]
    BadSandwich(String),
    #[error("{what} supports n ≤ {max}, got {n}")]
    SizeLimit { what: &'static str, max: usize, n: usize },
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// Data of a Rees matrix semigroup over a group `G` with index sets of
/// sizes `i_count` and `lambda_count`. `sandwich[λ][i]` is `None` for a zero
/// entry, which only the 0-variant accepts.
#[derive(Clone, Debug)]
pub struct ReesSpec {
    pub group: Semigroup,
    pub i_count: usize,
    pub lambda_count: usize,
    pub sandwich: Vec<Vec<Option<usize>>>,
}

impl ReesSpec {
    /// The sandwich matrix with every entry the group identity.
    pub fn normalized(group: Semigroup, i_count: usize, lambda_count: usize) -> Self {
        let e = group.identity().unwrap_or(0);
        ReesSpec {
            group,
            i_count,
            lambda_count,
            sandwich: vec![vec![Some(e); i_count]; lambda_count],
        }
    }

    fn nonzero_count(&self) -> usize {
        self.i_count * self.group.order() * self.lambda_count
    }

    pub fn encode(&self, i: usize, g: usize, lambda: usize) -> usize {
        let gl = self.group.order() * self.lambda_count;
        i * gl + g * self.lambda_count + lambda
    }

    /// `(i, g, λ)` of an element, or `None` for the zero of the 0-variant.
    pub fn decode(&self, index: usize) -> Option<(usize, usize, usize)> {
        if index >= self.nonzero_count() {
            return None;
        }
        let gl = self.group.order() * self.lambda_count;
        Some((index / gl, (index % gl) / self.lambda_count, index % self.lambda_count))
    }

    pub fn has_zero_entry(&self) -> bool {
        self.sandwich.iter().flatten().any(Option::is_none)
    }

    fn validate(&self, allow_zero: bool) -> Result<(), ConstructError> {
        if !self.group.is_group() {
            return Err(ConstructError::NotAGroup);
        }
        if self.i_count == 0 || self.lambda_count == 0 {
            return Err(ConstructError::BadSandwich("has an empty index set".into()));
        }
        if self.sandwich.len() != self.lambda_count
            || self.sandwich.iter().any(|row| row.len() != self.i_count)
        {
            return Err(ConstructError::BadSandwich(format!(
                "must be {} × {}",
                self.lambda_count, self.i_count
            )));
        }
        for (l, row) in self.sandwich.iter().enumerate() {
            for (i, entry) in row.iter().enumerate() {
                match entry {
                    Some(g) if *g >= self.group.order() => {
                        return Err(ConstructError::BadSandwich(format!(
                            "entry ({l},{i}) = {g} is not a group element"
                        )))
                    }
                    None if !allow_zero => {
                        return Err(ConstructError::BadSandwich(format!(
                            "entry ({l},{i}) is zero"
                        )))
                    }
                    _ => {}
                }
            }
        }
        if let Some(l) = (0..self.lambda_count).find(|&l| self.sandwich[l].iter().all(Option::is_none)) {
            return Err(ConstructError::BadSandwich(format!("row {l} is all zero")));
        }
        if let Some(i) = (0..self.i_count).find(|&i| self.sandwich.iter().all(|row| row[i].is_none())) {
            return Err(ConstructError::BadSandwich(format!("column {i} is all zero")));
        }
        Ok(())
    }

    fn build(&self) -> Semigroup {
        let m = self.nonzero_count();
        let zero = m;
        let with_zero = self.has_zero_entry();
        let n = if with_zero { m + 1 } else { m };
        let g = &self.group;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = match (self.decode(x), self.decode(y)) {
                    (Some((i, a, l)), Some((j, b, mu))) => match self.sandwich[l][j] {
                        Some(p) => self.encode(i, g.mul3(a, p, b), mu),
                        None => zero,
                    },
                    _ => zero,
                };
                table.push(v as u32);
            }
        }
        Semigroup::from_flat_trusted(n, table)
    }

    /// A random instance: `G` cyclic of order at most `max_group` (or `S₃`
    /// when that fits), index sets of size at most `max_index`. With
    /// `zero_entries`, entries are zero with probability 1/3 subject to no
    /// all-zero row or column.
    pub fn random(seed: u64, max_group: usize, max_index: usize, zero_entries: bool) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=max_group.max(1));
        let group = if max_group >= 6 && rng.gen_bool(0.2) {
            symmetric_group(3).expect("S3 is in range")
        } else {
            cyclic_group(k)
        };
        let i_count = rng.gen_range(1..=max_index.max(1));
        let lambda_count = rng.gen_range(1..=max_index.max(1));
        let order = group.order();
        loop {
            let sandwich: Vec<Vec<Option<usize>>> = (0..lambda_count)
                .map(|_| {
                    (0..i_count)
                        .map(|_| {
                            if zero_entries && rng.gen_ratio(1, 3) {
                                None
                            } else {
                                Some(rng.gen_range(0..order))
                            }
                        })
                        .collect()
                })
                .collect();
            let spec = ReesSpec {
                group: group.clone(),
                i_count,
                lambda_count,
                sandwich,
            };
            if spec.validate(zero_entries).is_ok() {
                return spec;
            }
        }
    }
}

/// `M(G; I, Λ; P)` with every sandwich entry in `G`.
pub fn rees(spec: &ReesSpec) -> Result<Semigroup, ConstructError> {
    spec.validate(false)?;
    Ok(spec.build())
}

/// `M⁰(G; I, Λ; P)`; the zero is the last element.
pub fn rees_zero(spec: &ReesSpec) -> Result<Semigroup, ConstructError> {
    spec.validate(true)?;
    if spec.has_zero_entry() {
        return Ok(spec.build());
    }
    Ok(spec.build().adjoin_zero())
}

fn trusted(n: usize, f: impl Fn(usize, usize) -> usize) -> Semigroup {
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(f(a, b) as u32);
        }
    }
    Semigroup::from_flat_trusted(n, table)
}

/// `xy = 0` for all `x, y`.
pub fn null_semigroup(n: usize) -> Semigroup {
    trusted(n.max(1), |_, _| 0)
}

/// `(i, λ)(j, μ) = (i, μ)`; element `(i, λ)` has index `i·q + λ`.
pub fn rectangular_band(p: usize, q: usize) -> Semigroup {
    let (p, q) = (p.max(1), q.max(1));
    trusted(p * q, |x, y| (x / q) * q + y % q)
}

pub fn cyclic_group(n: usize) -> Semigroup {
    let n = n.max(1);
    trusted(n, |a, b| (a + b) % n)
}

/// The chain `0 < 1 < … < n-1` under `min`.
pub fn chain_semilattice(n: usize) -> Semigroup {
    trusted(n.max(1), |a, b| a.min(b))
}

/// Semilattice with zero `0`, identity `1` and `k` pairwise incomparable
/// elements `2, …, k+1` between them.
pub fn antichain_with_0_1(k: usize) -> Semigroup {
    let k = k.max(1);
    trusted(k + 2, |a, b| match (a, b) {
        (1, y) => y,
        (x, 1) => x,
        (x, y) if x == y => x,
        _ => 0,
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn maps_table(maps: &[Vec<usize>]) -> Semigroup {
    let index: std::collections::HashMap<&[usize], usize> =
        maps.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    trusted(maps.len(), |a, b| {
        // left to right: x(fg) = (xf)g
        let c: Vec<usize> = maps[a].iter().map(|&x| maps[b][x]).collect();
        index[c.as_slice()]
    })
}

/// `Sym(n)` with permutations in lexicographic order of their images,
/// composed left to right.
pub fn symmetric_group(n: usize) -> Result<Semigroup, ConstructError> {
    if n == 0 || n > 4 {
        return Err(ConstructError::SizeLimit { what: "symmetric_group", max: 4, n });
    }
    Ok(maps_table(&permutations(n)))
}

/// All maps `{0..n-1} → {0..n-1}` in lexicographic order of their images,
/// composed left to right.
pub fn full_transformation_monoid(n: usize) -> Result<Semigroup, ConstructError> {
    if n == 0 || n > 3 {
        return Err(ConstructError::SizeLimit {
            what: "full_transformation_monoid",
            max: 3,
            n,
        });
    }
    let count = n.pow(n as u32);
    let maps: Vec<Vec<usize>> = (0..count)
        .map(|mut c| {
            let mut m = vec![0; n];
            for slot in m.iter_mut().rev() {
                *slot = c % n;
                c /= n;
            }
            m
        })
        .collect();
    Ok(maps_table(&maps))
}

/// The variant of `S` at `a`: `x ∘ y = xay`.
pub fn variant(s: &Semigroup, a: usize) -> Result<Semigroup, ConstructError> {
    s.check_element(a)?;
    Ok(Semigroup::from_fn(s.order(), |x, y| s.mul3(x, a, y))?)
}

#[derive(Clone, Debug, Serialize)]
pub struct UnaryVariantReport {
    pub sandwich: usize,
    pub completely_regular: bool,
    /// `x* = (xa)′x(ax)′`, computed in `S`.
    pub star: Vec<usize>,
    /// Elements where `x*` differs from the pseudo-inverse in the variant.
    pub mismatches: Vec<usize>,
    pub variant_in_w: bool,
    pub variant_p_transitive: bool,
}

impl UnaryVariantReport {
    /// For completely regular `S`, the variant must be in W with `x*` as
    /// its pseudo-inverse.
    pub fn ok(&self) -> bool {
        !self.completely_regular || (self.mismatches.is_empty() && self.variant_in_w)
    }
}

pub fn unary_variant_check(s: &Semigroup, a: usize) -> Result<UnaryVariantReport, ConstructError> {
    let t = variant(s, a)?;
    let ps = EpigroupProfile::new(s);
    let pt = EpigroupProfile::new(&t);
    let star: Vec<usize> = (0..s.order())
        .map(|x| s.mul3(ps.pinv(s.mul(x, a)), x, ps.pinv(s.mul(a, x))))
        .collect();
    let mismatches = (0..s.order()).filter(|&x| star[x] != pt.pinv(x)).collect();
    Ok(UnaryVariantReport {
        sandwich: a,
        completely_regular: ps.max_index() == 1,
        star,
        mismatches,
        variant_in_w: variety_membership(&t).in_w,
        variant_p_transitive: crate::conjugacy::p_relation(&t).is_transitive(),
    })
}

/// `S × T` with `(s, t)` at index `s·|T| + t`.
pub fn direct_product(s: &Semigroup, t: &Semigroup) -> Semigroup {
    let m = t.order();
    trusted(s.order() * m, |x, y| s.mul(x / m, y / m) * m + t.mul(x % m, y % m))
}

/// A named example table. `labels[i]` is the printed name of element `i`.
#[derive(Clone, Debug, Serialize)]
pub struct Fixture {
    pub id: &'static str,
    pub labels: Vec<String>,
    #[serde(skip)]
    pub semigroup: Semigroup,
}

impl Fixture {
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Element index of a printed label.
    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

pub const FIXTURE_IDS: [&str; 11] = [
    "F7_542155",
    "F6_414_S",
    "F6_E2A",
    "F7_E2B",
    "F6_STRONGC",
    "F4_22",
    "F4_113",
    "F4_56",
    "F5_CMP",
    "F5_110",
    "F2_LZ",
];

fn numeric(id: &'static str, rows: &[&[usize]]) -> Fixture {
    let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
    let semigroup = Semigroup::from_rows(&rows).expect("fixture tables are associative");
    Fixture {
        id,
        labels: (0..rows.len()).map(|i| i.to_string()).collect(),
        semigroup,
    }
}

fn lettered(id: &'static str, labels: &[&str], rows: &[&[&str]]) -> Fixture {
    let idx = |l: &str| labels.iter().position(|x| *x == l).expect("label in header");
    let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.iter().map(|l| idx(l)).collect()).collect();
    let semigroup = Semigroup::from_rows(&rows).expect("fixture tables are associative");
    Fixture {
        id,
        labels: labels.iter().map(|l| l.to_string()).collect(),
        semigroup,
    }
}

pub fn fixture(id: &str) -> Result<Fixture, ConstructError> {
    let f = match id {
        "F7_542155" => numeric(
            "F7_542155",
            &[
                &[0, 0, 0, 0, 4, 4, 0],
                &[0, 0, 0, 0, 4, 4, 0],
                &[0, 0, 0, 0, 4, 4, 0],
                &[0, 0, 0, 0, 4, 4, 0],
                &[4, 4, 4, 4, 4, 4, 4],
                &[4, 4, 4, 4, 4, 4, 4],
                &[0, 0, 2, 3, 4, 5, 6],
            ],
        ),
        "F6_414_S" => numeric(
            "F6_414_S",
            &[
                &[0, 0, 0, 0, 0],
                &[0, 0, 0, 1, 2],
                &[0, 1, 2, 1, 2],
                &[0, 0, 0, 3, 4],
                &[0, 3, 4, 3, 4],
            ],
        ),
        "F6_E2A" => numeric(
            "F6_E2A",
            &[
                &[0, 0, 0, 3, 3, 3],
                &[0, 1, 0, 3, 4, 3],
                &[0, 0, 2, 3, 3, 5],
                &[3, 3, 3, 0, 0, 0],
                &[3, 3, 4, 0, 0, 1],
                &[3, 5, 3, 0, 2, 0],
            ],
        ),
        "F7_E2B" => lettered(
            "F7_E2B",
            &["1", "a", "0", "b", "c", "e", "f"],
            &[
                &["1", "a", "0", "b", "c", "e", "f"],
                &["a", "1", "0", "e", "f", "b", "c"],
                &["0", "0", "0", "0", "0", "0", "0"],
                &["b", "f", "0", "0", "f", "b", "0"],
                &["c", "e", "0", "e", "0", "0", "c"],
                &["e", "c", "0", "0", "c", "e", "0"],
                &["f", "b", "0", "b", "0", "0", "f"],
            ],
        ),
        "F6_STRONGC" => numeric(
            "F6_STRONGC",
            &[
                &[0, 0, 0, 0, 0, 0],
                &[0, 1, 2, 3, 4, 5],
                &[0, 2, 0, 0, 2, 2],
                &[0, 3, 0, 0, 2, 2],
                &[0, 4, 2, 2, 5, 5],
                &[0, 5, 2, 2, 5, 5],
            ],
        ),
        "F4_22" => numeric(
            "F4_22",
            &[&[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 1], &[0, 1, 1, 3]],
        ),
        "F4_113" => numeric(
            "F4_113",
            &[&[0, 0, 0, 0], &[0, 1, 1, 1], &[0, 1, 2, 1], &[0, 3, 3, 3]],
        ),
        "F4_56" => numeric(
            "F4_56",
            &[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 2, 2], &[0, 0, 2, 3]],
        ),
        "F5_CMP" => numeric(
            "F5_CMP",
            &[
                &[0, 0, 0, 0, 0],
                &[0, 1, 2, 3, 4],
                &[0, 2, 0, 2, 0],
                &[0, 3, 4, 3, 4],
                &[0, 4, 0, 4, 0],
            ],
        ),
        "F5_110" => numeric(
            "F5_110",
            &[
                &[0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 1],
                &[0, 0, 0, 0, 2],
                &[0, 0, 1, 0, 3],
                &[0, 1, 2, 3, 4],
            ],
        ),
        "F2_LZ" => numeric("F2_LZ", &[&[0, 0], &[1, 1]]),
        other => return Err(ConstructError::UnknownFixture(other.to_string())),
    };
    Ok(f)
}

pub fn fixtures() -> Vec<Fixture> {
    FIXTURE_IDS
        .iter()
        .map(|id| fixture(id).expect("listed fixture"))
        .collect()
}

/// A random permutation of `0..n`, for relabeling tests.
pub fn random_permutation(seed: u64, n: usize) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rng);
    p
}

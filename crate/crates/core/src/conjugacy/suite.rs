//! Cross-checks between the conjugacy relations and structural properties
//! of a finite semigroup. Every check reports pass, fail or skipped, with a
//! witness on failure.

use serde::Serialize;

use super::{c_conjugacy, o_conjugacy, p_relation, strong_relations, tr_definitional, tr_via_pp};
use crate::epigroup::{pinv_identity_suite, variety_membership_with, EpigroupProfile};
use crate::green::{green, ideal_structure_with, is_antichain, regularity, zero_direct_union};
use crate::partition::{inclusion_witness, EqPartition, PairRelation, Relation};
use crate::semigroup::Semigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub order: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn all_passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Largest order for which congruences are enumerated exhaustively.
const CONGRUENCE_LIMIT: usize = 5;
/// Largest order for the quartic product-swap check.
const SWAP_LIMIT: usize = 10;

type Outcome = Result<String, String>;

fn pass(detail: impl Into<String>) -> Outcome {
    Ok(detail.into())
}

fn vacuous() -> Outcome {
    Ok("hypothesis not met".into())
}

fn sub(name: &str, r: &dyn Relation, s: &dyn Relation) -> Result<(), String> {
    match inclusion_witness(r, s) {
        None => Ok(()),
        Some((a, b)) => Err(format!("{name}: ({a},{b})")),
    }
}

fn same(r: &dyn Relation, s: &dyn Relation) -> bool {
    inclusion_witness(r, s).is_none() && inclusion_witness(s, r).is_none()
}

fn subset(r: &dyn Relation, s: &dyn Relation) -> bool {
    inclusion_witness(r, s).is_none()
}

fn pair_count(r: &dyn Relation) -> usize {
    let n = r.order();
    (0..n).map(|a| (0..n).filter(|&b| r.related(a, b)).count()).sum()
}

/// Pairs related by `r`, excluding loops; partitions are walked class by class.
fn related_pairs_of_partition(p: &EqPartition) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for class in p.classes() {
        for &a in class {
            for &b in class {
                if a != b {
                    out.push((a, b));
                }
            }
        }
    }
    out
}

fn related_pairs_of_pairs(p: &PairRelation) -> Vec<(usize, usize)> {
    p.edges().into_iter().flat_map(|(a, b)| [(a, b), (b, a)]).collect()
}

struct Ctx<'a> {
    s: &'a Semigroup,
    n: usize,
    prof: EpigroupProfile,
    p: PairRelation,
    p_star: EqPartition,
    o: EqPartition,
    c: EqPartition,
    tr: EqPartition,
    tr_pp: EqPartition,
    so: PairRelation,
    sc: PairRelation,
    commutative: bool,
    cancellative: bool,
    completely_regular: bool,
    regular: bool,
    in_w: bool,
    idempotents: Vec<usize>,
    /// powers[k-1][a] = a^k
    powers: Vec<Vec<usize>>,
}

impl<'a> Ctx<'a> {
    fn new(s: &'a Semigroup) -> Self {
        let n = s.order();
        let prof = EpigroupProfile::new(s);
        let p = p_relation(s);
        let strong = strong_relations(s);
        let preds = s.basic_predicates();
        let vm = variety_membership_with(s, &prof);
        let k_max = (2 * n).max(8);
        let mut powers = vec![(0..n).collect::<Vec<_>>()];
        for k in 1..k_max {
            let next = (0..n).map(|a| s.mul(powers[k - 1][a], a)).collect();
            powers.push(next);
        }
        Ctx {
            s,
            n,
            p_star: p.closure(),
            o: o_conjugacy(s),
            c: c_conjugacy(s),
            tr: tr_definitional(s, &prof),
            tr_pp: tr_via_pp(s, &prof, &p),
            p,
            so: strong.so,
            sc: strong.sc,
            commutative: preds.commutative,
            cancellative: preds.cancellative,
            completely_regular: vm.in_e1,
            regular: regularity(s).is_regular,
            in_w: vm.in_w,
            idempotents: s.idempotent_list(),
            powers,
            prof,
        }
    }

    fn pinv(&self, a: usize) -> usize {
        self.prof.pinv(a)
    }
}

/// Runs every check on `s`.
pub fn theorem_suite(s: &Semigroup) -> SuiteReport {
    let cx = Ctx::new(s);
    let g = green(s);
    let structure = ideal_structure_with(s, &g);
    let mut checks = Vec::new();
    let mut run = |name: &'static str, out: Outcome| {
        let (status, detail) = match out {
            Ok(d) if d == "skipped" => (Status::Skipped, d),
            Ok(d) => (Status::Pass, d),
            Err(d) => (Status::Fail, d),
        };
        checks.push(Check { name, status, detail });
    };

    run("inclusions", inclusions(&cx));
    run("c-intersections", c_intersections(&cx));
    run("tr-methods-agree", {
        if cx.tr == cx.tr_pp {
            pass("")
        } else {
            Err(format!("definitional {} vs via a''~p b'' {}", cx.tr, cx.tr_pp))
        }
    });
    run("so-equals-o", {
        let mut r = sub("so ⊄ o", &cx.so, &cx.o);
        if r.is_ok() {
            r = sub("o ⊄ so", &cx.o, &cx.so);
        }
        r.map(|_| String::new())
    });
    run("sc-within-c", sub("sc ⊄ c", &cx.sc, &cx.c).map(|_| String::new()));
    run("sc-versus-c", sc_versus_c(&cx));
    run("tr-closures", tr_closures(&cx));
    run("product-reversal", product_reversal(&cx));
    run("p-identity-iff-commutative", {
        let id = cx.p.is_identity();
        if id == cx.commutative {
            pass(format!("p identity: {id}"))
        } else {
            Err(format!("p identity: {id}, commutative: {}", cx.commutative))
        }
    });
    run("tr-identity-iff-commutative-completely-regular", {
        let id = cx.tr.is_identity();
        let rhs = cx.commutative && cx.completely_regular;
        if id == rhs {
            pass(format!("tr identity: {id}"))
        } else {
            Err(format!("tr identity: {id}, commutative and completely regular: {rhs}"))
        }
    });
    run("o-identity-iff-commutative-cancellative", {
        let id = cx.o.is_identity();
        let rhs = cx.commutative && cx.cancellative;
        if id == rhs {
            pass(format!("o identity: {id}"))
        } else {
            Err(format!("o identity: {id}, commutative and cancellative: {rhs}"))
        }
    });
    run("o-commutative-congruence", o_commutative_congruence(&cx));
    run("o-minimum-cancellative-congruence", o_minimum_cancellative(&cx));
    run("all-identity-iff-commutative-group", {
        let all = cx.p.is_identity() && cx.o.is_identity() && cx.tr.is_identity() && cx.c.is_identity();
        let rhs = cx.commutative && s.is_group();
        if all == rhs {
            pass(format!("all identity: {all}"))
        } else {
            Err(format!("all identity: {all}, commutative group: {rhs}"))
        }
    });
    run("tr-universal-conditions", tr_universal_conditions(&cx));
    run("p-universal", {
        let univ = cx.p.is_universal();
        let rect = s.basic_predicates().is_rectangular_band;
        if rect && !univ {
            Err("rectangular band with non-universal p".into())
        } else if univ && !(structure.is_simple && rect) {
            Err(format!(
                "p universal but simple={} rectangular band={rect}",
                structure.is_simple
            ))
        } else {
            pass(format!("p universal: {univ}"))
        }
    });
    run("completely-regular-elements-p-pstar-tr", completely_regular_elements(&cx));
    run("w-p-transitive", {
        if !cx.in_w {
            vacuous()
        } else if let Some((a, b, c)) = cx.p.transitivity_witness() {
            Err(format!("in W but {a}~p{b}, {b}~p{c}, not {a}~p{c}"))
        } else {
            pass("")
        }
    });
    run("completely-simple-all-equal", {
        if !structure.is_completely_simple {
            vacuous()
        } else if same(&cx.p, &cx.p_star) && same(&cx.p_star, &cx.tr) && same(&cx.tr, &cx.o) {
            pass("")
        } else {
            Err(format!("p={} p*={} tr={} o={}", cx.p, cx.p_star, cx.tr, cx.o))
        }
    });
    let p_eq_o = same(&cx.p, &cx.o);
    run("regular-no-zero-p-eq-o-iff-completely-simple", {
        if !cx.regular || s.zero().is_some() {
            vacuous()
        } else if p_eq_o == structure.is_completely_simple {
            pass(format!("p = o: {p_eq_o}"))
        } else {
            Err(format!("p = o: {p_eq_o}, completely simple: {}", structure.is_completely_simple))
        }
    });
    run("w-no-zero-p-eq-o-iff-completely-simple", {
        if !cx.in_w || s.zero().is_some() {
            vacuous()
        } else if p_eq_o == structure.is_completely_simple {
            pass(format!("p = o: {p_eq_o}"))
        } else {
            Err(format!("p = o: {p_eq_o}, completely simple: {}", structure.is_completely_simple))
        }
    });
    run("regular-with-zero-c-conditions", {
        if !cx.regular || s.zero().is_none() {
            vacuous()
        } else {
            let c_in_p = subset(&cx.c, &cx.p);
            let c_in_tr = subset(&cx.c, &cx.tr);
            let zdu = zero_direct_union(s).expect("has zero").is_some();
            if c_in_p == c_in_tr && c_in_tr == zdu {
                pass(format!("all three: {zdu}"))
            } else {
                Err(format!("c⊆p: {c_in_p}, c⊆tr: {c_in_tr}, 0-direct union: {zdu}"))
            }
        }
    });
    run("tr-eq-o-antichain", {
        if cx.tr != cx.o {
            vacuous()
        } else if is_antichain(s, false) {
            pass("")
        } else {
            Err("tr = o but idempotents are not an antichain".into())
        }
    });
    run("c-within-tr-nonzero-antichain", {
        if s.zero().is_none() || !subset(&cx.c, &cx.tr) {
            vacuous()
        } else if is_antichain(s, true) {
            pass("")
        } else {
            Err("c ⊆ tr but nonzero idempotents are comparable".into())
        }
    });
    run("powers", powers(&cx));
    run("pseudo-inverse-closure", pseudo_inverse_closure(&cx));
    run("finite-exponent", finite_exponent(&cx));
    run("pseudo-inverse-identities", {
        let rep = pinv_identity_suite(s);
        match rep.violations.first() {
            None => pass(format!("{} identities", rep.checked.len())),
            Some(v) => Err(format!("{} fails at x={} y={:?}", v.identity, v.x, v.y)),
        }
    });
    run("variety-chain", variety_chain(&cx));
    run("regular-iff-d-idempotent", {
        let reg = regularity(s);
        let bad = (0..cx.n).find(|&a| {
            let is_reg = reg.regular_elements.binary_search(&a).is_ok();
            let d_idem = g.d.class_of(a).iter().any(|&e| s.is_idempotent(e));
            is_reg != d_idem
        });
        match bad {
            None => pass(""),
            Some(a) => Err(format!("element {a}")),
        }
    });
    run("d-equals-j", {
        if g.d == g.j {
            pass("")
        } else {
            Err(format!("D={} J={}", g.d, g.j))
        }
    });
    run("zero-classes", {
        match s.zero() {
            Some(z) => {
                if cx.c.class_of(z) != [z] {
                    Err(format!("c-class of zero is {:?}", cx.c.class_of(z)))
                } else if !cx.o.is_universal() {
                    Err("o is not universal despite a zero".into())
                } else {
                    pass("")
                }
            }
            None => {
                if cx.c == cx.o {
                    pass("no zero: c = o")
                } else {
                    Err(format!("no zero but c={} o={}", cx.c, cx.o))
                }
            }
        }
    });
    run("product-swap", product_swap(&cx));

    SuiteReport {
        order: cx.n,
        checks,
    }
}

fn inclusions(cx: &Ctx) -> Outcome {
    sub("p ⊄ p*", &cx.p, &cx.p_star)?;
    sub("p* ⊄ tr", &cx.p_star, &cx.tr)?;
    sub("tr ⊄ o", &cx.tr, &cx.o)?;
    sub("c ⊄ o", &cx.c, &cx.o)?;
    pass("")
}

fn c_intersections(cx: &Ctx) -> Outcome {
    let cp = cx.p.intersect(&cx.c);
    let cps = PairRelation::from_relation(&cx.p_star).intersect(&cx.c);
    let ctr = PairRelation::from_relation(&cx.tr).intersect(&cx.c);
    sub("c∩p ⊄ c∩p*", &cp, &cps)?;
    sub("c∩p* ⊄ c∩tr", &cps, &ctr)?;
    pass(format!(
        "pairs: c∩p {}, c∩p* {}, c∩tr {}, c {}",
        pair_count(&cp),
        pair_count(&cps),
        pair_count(&ctr),
        pair_count(&cx.c)
    ))
}

fn sc_versus_c(cx: &Ctx) -> Outcome {
    let eq = same(&cx.sc, &cx.c);
    let forced = cx.s.zero().is_none() || cx.in_w;
    match (eq, forced) {
        (true, _) => pass("sc = c"),
        (false, false) => pass(format!(
            "sc ≠ c (observed), e.g. {:?}",
            inclusion_witness(&cx.c, &cx.sc)
        )),
        (false, true) => Err(format!(
            "sc ≠ c where equality is guaranteed: {:?}",
            inclusion_witness(&cx.c, &cx.sc)
        )),
    }
}

fn tr_closures(cx: &Ctx) -> Outcome {
    let s = cx.s;
    for a in 0..cx.n {
        if !cx.tr.same_class(a, cx.prof.dpinv(a)) {
            return Err(format!("{a} not tr-related to a''={}", cx.prof.dpinv(a)));
        }
        for b in 0..cx.n {
            if !cx.tr.same_class(s.mul(a, b), s.mul(b, a)) {
                return Err(format!("xy !~tr yx at x={a}, y={b}"));
            }
            if cx.tr.same_class(a, b) != cx.tr.same_class(cx.pinv(a), cx.pinv(b)) {
                return Err(format!("a~tr b and a'~tr b' disagree at ({a},{b})"));
            }
        }
    }
    pass("")
}

fn product_reversal(cx: &Ctx) -> Outcome {
    let s = cx.s;
    for x in 0..cx.n {
        for y in 0..cx.n {
            let (xy, yx) = (s.mul(x, y), s.mul(y, x));
            if !cx.p.contains(xy, yx) || !cx.o.same_class(xy, yx) {
                return Err(format!("xy and yx unrelated at x={x}, y={y}"));
            }
        }
    }
    pass("")
}

fn o_commutative_congruence(cx: &Ctx) -> Outcome {
    if !cx.commutative {
        return vacuous();
    }
    if !is_congruence(cx.s, &cx.o) {
        return Err("o is not a congruence".into());
    }
    if !is_cancellative_congruence(cx.s, &cx.o) {
        return Err("S/o is not cancellative".into());
    }
    pass("")
}

fn is_congruence(s: &Semigroup, theta: &EqPartition) -> bool {
    let n = s.order();
    (0..n).all(|a| {
        theta.class_of(a).iter().all(|&b| {
            (0..n).all(|c| {
                theta.same_class(s.mul(c, a), s.mul(c, b)) && theta.same_class(s.mul(a, c), s.mul(b, c))
            })
        })
    })
}

/// Whether the quotient by the congruence `theta` is cancellative.
fn is_cancellative_congruence(s: &Semigroup, theta: &EqPartition) -> bool {
    let k = theta.num_classes();
    let reps: Vec<usize> = theta.classes().iter().map(|c| c[0]).collect();
    let prod = |i: usize, j: usize| theta.class_index(s.mul(reps[i], reps[j]));
    (0..k).all(|a| {
        (0..k).all(|b| {
            (b + 1..k).all(|c| prod(a, b) != prod(a, c) && prod(b, a) != prod(c, a))
        })
    })
}

fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    // restricted growth strings
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max + 1 {
            cur[i] = v;
            rec(i + 1, max.max(v), cur, out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    rec(1, 0, &mut cur, &mut out);
    out
}

fn o_minimum_cancellative(cx: &Ctx) -> Outcome {
    if !cx.commutative {
        return vacuous();
    }
    if cx.n > CONGRUENCE_LIMIT {
        return Ok("skipped".into());
    }
    let mut count = 0;
    for labels in set_partitions(cx.n) {
        let theta = EqPartition::from_labels(&labels);
        if is_congruence(cx.s, &theta) && is_cancellative_congruence(cx.s, &theta) {
            count += 1;
            if !cx.o.refines(&theta) {
                return Err(format!("cancellative congruence {theta} does not contain o"));
            }
        }
    }
    pass(format!("{count} cancellative congruences"))
}

fn tr_universal_conditions(cx: &Ctx) -> Outcome {
    let s = cx.s;
    let n = cx.n;
    let om = |x: usize| cx.prof.omega(x);
    let c1 = cx.tr.is_universal();
    let c2 = is_antichain(s, false) && (0..n).all(|x| cx.prof.dpinv(x) == om(x));
    let c3 = (0..n).all(|x| (0..n).all(|y| s.mul3(cx.pinv(x), y, cx.pinv(x)) == cx.pinv(x)));
    let c4 = (0..n).all(|x| (0..n).all(|y| s.mul3(om(x), y, om(x)) == om(x)));
    let c5 = (0..n).all(|x| cx.idempotents.iter().all(|&e| s.mul3(e, x, e) == e));
    let v = [c1, c2, c3, c4, c5];
    if v.iter().all(|&b| b == c1) {
        pass(format!("all {c1}"))
    } else {
        Err(format!("conditions disagree: {v:?}"))
    }
}

fn completely_regular_elements(cx: &Ctx) -> Outcome {
    let cr: Vec<usize> = (0..cx.n).filter(|&a| cx.prof.index(a) == 1).collect();
    for &a in &cr {
        for &b in &cr {
            let p = cx.p.contains(a, b);
            let ps = cx.p_star.same_class(a, b);
            let tr = cx.tr.same_class(a, b);
            if p != ps || ps != tr {
                return Err(format!("({a},{b}): p={p} p*={ps} tr={tr}"));
            }
        }
    }
    if cx.completely_regular && !cx.p.is_transitive() {
        return Err("completely regular but p not transitive".into());
    }
    pass(format!("{} completely regular elements", cr.len()))
}

type PairSource<'a> = Box<dyn Fn() -> Vec<(usize, usize)> + 'a>;

fn powers(cx: &Ctx) -> Outcome {
    let k_max = cx.powers.len();
    let p_pairs = related_pairs_of_pairs(&cx.p);
    let rels: [(&str, &dyn Relation, PairSource<'_>); 4] = [
        ("p", &cx.p, Box::new(|| p_pairs.clone())),
        ("c", &cx.c, Box::new(|| related_pairs_of_partition(&cx.c))),
        ("o", &cx.o, Box::new(|| related_pairs_of_partition(&cx.o))),
        ("tr", &cx.tr, Box::new(|| related_pairs_of_partition(&cx.tr))),
    ];
    for (name, rel, pairs) in rels.iter() {
        if (0..cx.n).all(|a| (0..cx.n).all(|b| rel.related(a, b))) {
            continue;
        }
        for (a, b) in pairs() {
            for k in 1..=k_max {
                let (x, y) = (cx.powers[k - 1][a], cx.powers[k - 1][b]);
                if !rel.related(x, y) {
                    return Err(format!("{a}~{name}{b} but {a}^{k} and {b}^{k} unrelated"));
                }
            }
        }
    }
    pass(format!("k ≤ {k_max}"))
}

fn pseudo_inverse_closure(cx: &Ctx) -> Outcome {
    for (a, b) in related_pairs_of_pairs(&cx.p) {
        if !cx.p.contains(cx.pinv(a), cx.pinv(b)) {
            return Err(format!("{a}~p{b} but a', b' unrelated"));
        }
    }
    if !cx.o.is_universal() {
        for (a, b) in related_pairs_of_partition(&cx.o) {
            if !cx.o.same_class(cx.pinv(a), cx.pinv(b)) {
                return Err(format!("{a}~o{b} but a', b' unrelated"));
            }
        }
    }
    pass("")
}

fn finite_exponent(cx: &Ctx) -> Outcome {
    const SPAN: usize = 12;
    let k_max = cx.powers.len();
    let pw = |k: usize, a: usize| cx.powers[k - 1][a];
    for (a, b) in related_pairs_of_pairs(&cx.p) {
        let t = if cx.in_w { 1 } else { cx.prof.index(b) };
        let hi = (t + SPAN).min(k_max);
        for m in t..=hi {
            for k in m + 1..=hi {
                if pw(m, a) == pw(k, a) && pw(m, b) != pw(k, b) {
                    return Err(format!("{a}~p{b}, a^{m} = a^{k} but b^{m} ≠ b^{k}"));
                }
            }
        }
    }
    pass("")
}

fn variety_chain(cx: &Ctx) -> Outcome {
    let vm = variety_membership_with(cx.s, &cx.prof);
    if vm.in_e1 && !vm.in_w {
        return Err("completely regular but not in W".into());
    }
    if vm.in_w && !vm.in_e2 {
        return Err("in W but not in E2".into());
    }
    // W by definition: every product lies in a subgroup
    let s = cx.s;
    let squares_cr = (0..cx.n).all(|x| (0..cx.n).all(|y| cx.prof.index(s.mul(x, y)) == 1));
    if squares_cr != vm.in_w {
        return Err(format!("S² completely regular: {squares_cr}, W by identities: {}", vm.in_w));
    }
    pass(format!("E1 {} W {} E2 {}", vm.in_e1, vm.in_w, vm.in_e2))
}

fn product_swap(cx: &Ctx) -> Outcome {
    if cx.n > SWAP_LIMIT {
        return Ok("skipped".into());
    }
    let s = cx.s;
    let n = cx.n;
    let mut p_swap = true;
    for a1 in 0..n {
        for a2 in 0..n {
            for b1 in 0..n {
                for b2 in 0..n {
                    let (x, y) = (s.mul(a1, a2), s.mul(b1, b2));
                    let (x2, y2) = (s.mul(a2, a1), s.mul(b2, b1));
                    if cx.o.same_class(x, y) && !cx.o.same_class(x2, y2) {
                        return Err(format!("o swap fails at {a1},{a2},{b1},{b2}"));
                    }
                    if cx.tr.same_class(x, y) && !cx.tr.same_class(x2, y2) {
                        return Err(format!("tr swap fails at {a1},{a2},{b1},{b2}"));
                    }
                    if cx.p.contains(x, y) && !cx.p.contains(x2, y2) {
                        p_swap = false;
                    }
                }
            }
        }
    }
    if p_swap != cx.p.is_transitive() {
        return Err(format!("p swap property {p_swap}, p transitive {}", cx.p.is_transitive()));
    }
    pass("")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (1..=5).map(|n| set_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52]);
    }

    #[test]
    fn suite_passes_on_small_examples() {
        let examples = [
            Semigroup::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap(),
            Semigroup::from_fn(3, |a, b| (a + b) % 3).unwrap(),
            Semigroup::from_fn(3, |a, b| (a + b) % 3).unwrap().adjoin_zero(),
            Semigroup::from_rows(&[vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 1]]).unwrap(),
        ];
        for s in examples {
            let r = theorem_suite(&s);
            assert!(r.all_passed(), "{:?}", r.failures());
        }
    }
}

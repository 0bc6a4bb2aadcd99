//! Command-line front end.
//!
//! [`run`] parses arguments, writes results to the given streams and returns
//! the exit code: 0 on success, 1 on a validation or domain error, 2 on a
//! usage error.

use std::fmt::Display;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::conjugacy::{
    c_conjugacy, conjugacy_report, conjugator_sets, o_conjugacy, p_relation, p_star, strong_relations,
    relation_character, theorem_suite, tr_conjugacy, Status, TrMethod, Which,
};
use crate::constructors::{
    antichain_with_0_1, chain_semilattice, cyclic_group, fixture, full_transformation_monoid, null_semigroup,
    rectangular_band, rees, rees_zero, symmetric_group, unary_variant_check, variant, ReesSpec, FIXTURE_IDS,
};
use crate::enumerate::{enumerate_all, enumerate_tables, table1, Dedupe, EnumConstraints};
use crate::epigroup::{monogenic, variety_membership};
use crate::format::{parse_table, serialize, to_json, TableDoc};
use crate::green::{green, ideal_structure, idempotents, regularity};
use crate::partition::{EqPartition, PairRelation};
use crate::pinj::{c_oracle, find_r_homomorphism, format_pieces, permutation_witness, PartialInjection};
use crate::semigroup::Semigroup;
use crate::symbolic::{c_conjugate, gamma_relations, i_j_related, kappa, known_pairs, mu, tr_conjugate, CCRType};

#[derive(Parser, Debug)]
#[command(name = "semiconj", version, about = "Conjugacy relations on finite semigroups")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
#[command(group(clap::ArgGroup::new("source").required(true)))]
struct Input {
    /// Table file in text or JSON format.
    #[arg(long, group = "source")]
    file: Option<String>,
    /// Built-in example table.
    #[arg(long, group = "source")]
    fixture: Option<String>,
    /// Constructor spec such as `cyclic:4` (see `construct --help`).
    #[arg(long, group = "source")]
    construct: Option<String>,
    /// Print fixture labels instead of element indices.
    #[arg(long)]
    labels: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a table is a semigroup.
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Green's relations, idempotents and regularity.
    Green {
        #[command(flatten)]
        input: Input,
    },
    /// Conjugacy relations.
    Conjugacy {
        #[command(flatten)]
        input: Input,
        /// One relation; all of them when omitted.
        #[arg(long, value_enum)]
        relation: Option<RelationArg>,
        /// Also list the conjugator sets P(a).
        #[arg(long)]
        conjugators: bool,
    },
    /// Index, period and pseudo-inverses of every element.
    Epigroup {
        #[command(flatten)]
        input: Input,
    },
    /// Print a constructed table.
    ///
    /// Specs: null:N, band:PxQ, cyclic:N, chain:N, antichain:K, sym:N,
    /// transformations:N, rees:SEED, rees0:SEED, fixture:ID.
    Construct { spec: String },
    /// The variant x∘y = xay.
    Variant {
        #[command(flatten)]
        input: Input,
        /// Sandwich element.
        #[arg(long)]
        element: usize,
        /// Report the unary variant check instead of the table.
        #[arg(long)]
        unary: bool,
    },
    /// Enumerate semigroups of a given order.
    Enumerate {
        /// Number of elements, 1 to 5 (6 with --long).
        #[arg(long)]
        order: usize,
        /// Only monoids.
        #[arg(long)]
        monoid: bool,
        /// Only semigroups with a zero.
        #[arg(long)]
        zero: bool,
        /// Requires a zero and some a, b ≠ 0 with ab = 0.
        #[arg(long)]
        zero_divisors: bool,
        /// Keep every labelled table, one per isomorphism class, or one per
        /// class up to isomorphism or anti-isomorphism.
        #[arg(long, value_enum, default_value_t = DedupeArg::Equivalence)]
        dedupe: DedupeArg,
        /// Print only the count.
        #[arg(long)]
        count: bool,
        /// Allow order 6.
        #[arg(long)]
        long: bool,
    },
    /// Counts of monoids with zero divisors by c-conjugacy behaviour.
    Table1 {
        /// Largest order counted.
        #[arg(long, default_value_t = 5)]
        max: usize,
        /// Allow order 6.
        #[arg(long)]
        long: bool,
        /// List every monoid (up to equivalence) with its c-classes.
        #[arg(long)]
        list: bool,
    },
    /// Run every structural cross-check on one semigroup.
    Suite {
        #[command(flatten)]
        input: Input,
    },
    /// Partial injections, written as `n; x0 x1 ...` with `-` for undefined.
    Pinj {
        #[command(subcommand)]
        action: PinjAction,
    },
    /// Cycle-chain-ray types of partial injections of a countable set.
    Symbolic {
        #[command(subcommand)]
        action: SymbolicAction,
    },
}

#[derive(Subcommand, Debug)]
enum PinjAction {
    /// Cycle and chain decomposition and type.
    Decompose { map: String },
    /// Left-to-right composite `first` then `second`.
    Compose { first: String, second: String },
    /// Inverse partial injection.
    Inverse { map: String },
    /// c-conjugacy with its witnesses.
    Conjugate { first: String, second: String },
}

#[derive(Subcommand, Debug)]
enum SymbolicAction {
    /// Compare two types under every implemented relation.
    Compare { first: String, second: String },
    /// Derived invariants of one type.
    Inspect { ty: String },
    /// The reference pairs with their expected verdicts.
    Known,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum RelationArg {
    P,
    Pstar,
    O,
    C,
    Tr,
    So,
    Sc,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum DedupeArg {
    Labeled,
    Iso,
    Equivalence,
}

impl From<DedupeArg> for Dedupe {
    fn from(d: DedupeArg) -> Self {
        match d {
            DedupeArg::Labeled => Dedupe::Labeled,
            DedupeArg::Iso => Dedupe::Iso,
            DedupeArg::Equivalence => Dedupe::Equivalence,
        }
    }
}

/// A domain failure reported with exit code 1.
struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Res = Result<(), Failure>;

struct Out<'a> {
    w: &'a mut dyn Write,
    json: bool,
}

impl Out<'_> {
    fn line(&mut self, s: impl Display) {
        let _ = writeln!(self.w, "{s}");
    }

    fn value(&mut self, v: &impl Serialize) {
        let text = serde_json::to_string(v).expect("outputs serialize");
        self.line(text);
    }
}

/// A loaded semigroup with optional element names.
struct Loaded {
    s: Semigroup,
    labels: Option<Vec<String>>,
}

impl Loaded {
    fn name(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    fn partition(&self, p: &EqPartition) -> String {
        if self.labels.is_none() {
            return p.to_string();
        }
        let classes: Vec<String> = p
            .classes()
            .iter()
            .map(|c| format!("{{{}}}", c.iter().map(|&x| self.name(x)).collect::<Vec<_>>().join(",")))
            .collect();
        classes.join(" ")
    }

    fn pairs(&self, r: &PairRelation) -> String {
        if self.labels.is_none() {
            return r.to_string();
        }
        let e = r.edges();
        if e.is_empty() {
            return "(loops only)".into();
        }
        e.iter()
            .map(|&(a, b)| format!("{}-{}", self.name(a), self.name(b)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Builds a semigroup from a constructor spec such as `band:2x3`.
pub fn construct_spec(spec: &str) -> Result<Semigroup, String> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let num = |a: &str| a.trim().parse::<usize>().map_err(|_| format!("expected a number in {spec:?}"));
    let positive = |a: &str| num(a).and_then(|v| if v == 0 { Err(format!("size must be positive in {spec:?}")) } else { Ok(v) });
    let s = match kind {
        "null" => null_semigroup(positive(arg)?),
        "band" => {
            let (p, q) = arg.split_once('x').ok_or_else(|| format!("expected PxQ in {spec:?}"))?;
            rectangular_band(positive(p)?, positive(q)?)
        }
        "cyclic" => cyclic_group(positive(arg)?),
        "chain" => chain_semilattice(positive(arg)?),
        "antichain" => antichain_with_0_1(num(arg)?),
        "sym" => symmetric_group(positive(arg)?).map_err(|e| e.to_string())?,
        "transformations" => full_transformation_monoid(positive(arg)?).map_err(|e| e.to_string())?,
        "rees" => rees(&ReesSpec::random(num(arg)? as u64, 6, 3, false)).map_err(|e| e.to_string())?,
        "rees0" => rees_zero(&ReesSpec::random(num(arg)? as u64, 6, 3, true)).map_err(|e| e.to_string())?,
        "fixture" => fixture(arg).map_err(|e| e.to_string())?.semigroup,
        _ => return Err(format!("unknown constructor {kind:?}")),
    };
    Ok(s)
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    match (&input.file, &input.fixture, &input.construct) {
        (Some(path), None, None) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{path}: {e}")))?;
            let s = parse_table(&text).map_err(|e| Failure(format!("{path}: {e}")))?;
            Ok(Loaded { s, labels: None })
        }
        (None, Some(id), None) => {
            let f = fixture(id).map_err(|e| Failure(format!("{e}; known: {}", FIXTURE_IDS.join(", "))))?;
            let labels = input.labels.then(|| f.labels.clone());
            Ok(Loaded { s: f.semigroup, labels })
        }
        (None, None, Some(spec)) => Ok(Loaded {
            s: construct_spec(spec).map_err(Failure)?,
            labels: None,
        }),
        _ => Err(Failure("exactly one of --file, --fixture or --construct is required".into())),
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let mut o = Out { w: out, json: cli.json };
    match dispatch(cli.command, &mut o) {
        Ok(()) => 0,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn dispatch(cmd: Command, o: &mut Out) -> Res {
    match cmd {
        Command::Validate { input } => cmd_validate(&input, o),
        Command::Green { input } => cmd_green(&load(&input)?, o),
        Command::Conjugacy {
            input,
            relation,
            conjugators,
        } => cmd_conjugacy(&load(&input)?, relation, conjugators, o),
        Command::Epigroup { input } => cmd_epigroup(&load(&input)?, o),
        Command::Construct { spec } => {
            let s = construct_spec(&spec).map_err(Failure)?;
            print_table(&s, o);
            Ok(())
        }
        Command::Variant { input, element, unary } => cmd_variant(&load(&input)?, element, unary, o),
        Command::Enumerate {
            order,
            monoid,
            zero,
            zero_divisors,
            dedupe,
            count,
            long,
        } => {
            let c = EnumConstraints {
                order,
                require_monoid: monoid,
                require_zero: zero || zero_divisors,
                require_zero_divisors: zero_divisors,
                dedupe: dedupe.into(),
                long_running: long,
            };
            cmd_enumerate(&c, count, o)
        }
        Command::Table1 { max, long, list } => cmd_table1(max, long, list, o),
        Command::Suite { input } => cmd_suite(&load(&input)?, o),
        Command::Pinj { action } => cmd_pinj(action, o),
        Command::Symbolic { action } => cmd_symbolic(action, o),
    }
}

fn print_table(s: &Semigroup, o: &mut Out) {
    if o.json {
        o.line(to_json(s));
    } else {
        let _ = write!(o.w, "{}", serialize(s));
    }
}

fn cmd_validate(input: &Input, o: &mut Out) -> Res {
    let l = load(input)?;
    let s = &l.s;
    if o.json {
        o.value(&json!({
            "valid": true,
            "order": s.order(),
            "zero": s.zero(),
            "identity": s.identity(),
            "commutative": s.is_commutative(),
        }));
    } else {
        o.line(format!("valid semigroup of order {}", s.order()));
        o.line(format!("zero: {}", s.zero().map_or("none".into(), |z| l.name(z))));
        o.line(format!("identity: {}", s.identity().map_or("none".into(), |e| l.name(e))));
        o.line(format!("commutative: {}", s.is_commutative()));
    }
    Ok(())
}

fn cmd_green(l: &Loaded, o: &mut Out) -> Res {
    let s = &l.s;
    let g = green(s);
    let reg = regularity(s);
    let ideals = ideal_structure(s);
    let idem = idempotents(s);
    if o.json {
        o.value(&json!({
            "green": g,
            "idempotents": idem,
            "regularity": reg,
            "ideal_structure": ideals,
        }));
        return Ok(());
    }
    for (name, p) in [("L", &g.l), ("R", &g.r), ("H", &g.h), ("D", &g.d), ("J", &g.j)] {
        o.line(format!("{name}: {}", l.partition(p)));
    }
    o.line(format!("idempotents: {}", names(l, &idem)));
    o.line(format!("regular elements: {}", names(l, &reg.regular_elements)));
    o.line(format!("regular: {}", reg.is_regular));
    o.line(format!("inverse: {}", reg.is_inverse));
    o.line(format!("simple: {}", ideals.is_simple));
    o.line(format!("0-simple: {}", ideals.is_zero_simple));
    o.line(format!("completely simple: {}", ideals.is_completely_simple));
    o.line(format!("completely 0-simple: {}", ideals.is_completely_zero_simple));
    Ok(())
}

fn names(l: &Loaded, xs: &[usize]) -> String {
    let v: Vec<String> = xs.iter().map(|&x| l.name(x)).collect();
    format!("{{{}}}", v.join(","))
}

fn cmd_conjugacy(l: &Loaded, relation: Option<RelationArg>, conjugators: bool, o: &mut Out) -> Res {
    let s = &l.s;
    if let Some(r) = relation {
        let text = match r {
            RelationArg::P => {
                let p = p_relation(s);
                if o.json {
                    o.value(&p);
                    return Ok(());
                }
                l.pairs(&p)
            }
            RelationArg::So | RelationArg::Sc => {
                let st = strong_relations(s);
                let rel = if r == RelationArg::So { st.so } else { st.sc };
                if o.json {
                    o.value(&rel);
                    return Ok(());
                }
                l.pairs(&rel)
            }
            _ => {
                let p = match r {
                    RelationArg::Pstar => p_star(s),
                    RelationArg::O => o_conjugacy(s),
                    RelationArg::C => c_conjugacy(s),
                    _ => tr_conjugacy(s, TrMethod::Definitional),
                };
                if o.json {
                    o.value(&p);
                    return Ok(());
                }
                l.partition(&p)
            }
        };
        o.line(text);
    } else {
        let rep = conjugacy_report(s);
        if o.json && !conjugators {
            o.value(&rep);
            return Ok(());
        }
        if !o.json {
            o.line(format!("p: {}", l.pairs(&rep.p)));
            o.line(format!("p transitive: {}", rep.p_transitive));
            o.line(format!("p*: {}", l.partition(&rep.p_star)));
            o.line(format!("tr: {}", l.partition(&rep.tr)));
            o.line(format!("o: {}", l.partition(&rep.o)));
            o.line(format!("c: {}", l.partition(&rep.c)));
            o.line(format!("so: {}", l.pairs(&rep.so)));
            o.line(format!("sc: {}", l.pairs(&rep.sc)));
            o.line(format!("inclusions hold: {}", rep.inclusion_diagram_ok));
        }
        if o.json {
            let sets: Vec<Vec<usize>> = conjugator_sets(s).iter().map(|c| c.elements()).collect();
            o.value(&json!({ "report": rep, "conjugator_sets": sets }));
            return Ok(());
        }
    }
    if conjugators && !o.json {
        for (a, set) in conjugator_sets(s).iter().enumerate() {
            o.line(format!("P({}) = {}", l.name(a), names(l, &set.elements())));
        }
    }
    Ok(())
}

fn cmd_epigroup(l: &Loaded, o: &mut Out) -> Res {
    let s = &l.s;
    let data = (0..s.order()).map(|a| monogenic(s, a)).collect::<Result<Vec<_>, _>>()?;
    let v = variety_membership(s);
    if o.json {
        o.value(&json!({ "elements": data, "varieties": v }));
        return Ok(());
    }
    o.line("element index period a' a'' a^w");
    for (a, d) in data.iter().enumerate() {
        o.line(format!(
            "{} {} {} {} {} {}",
            l.name(a),
            d.index,
            d.period,
            l.name(d.pinv),
            l.name(d.double_pinv),
            l.name(d.omega)
        ));
    }
    o.line(format!("max index: {}", v.max_index));
    o.line(format!("completely regular: {}", v.in_e1));
    o.line(format!("E2: {}", v.in_e2));
    o.line(format!("W: {}", v.in_w));
    o.line(format!("V: {}", v.in_v));
    Ok(())
}

fn cmd_variant(l: &Loaded, a: usize, unary: bool, o: &mut Out) -> Res {
    if unary {
        let rep = unary_variant_check(&l.s, a)?;
        if o.json {
            o.value(&rep);
        } else {
            o.line(format!("sandwich: {}", l.name(rep.sandwich)));
            o.line(format!("completely regular: {}", rep.completely_regular));
            o.line(format!("x*: {}", rep.star.iter().map(|&x| l.name(x)).collect::<Vec<_>>().join(" ")));
            o.line(format!("mismatches: {}", names(l, &rep.mismatches)));
            o.line(format!("variant in W: {}", rep.variant_in_w));
            o.line(format!("variant p transitive: {}", rep.variant_p_transitive));
        }
        if !rep.ok() {
            return Err(Failure("unary variant check failed".into()));
        }
        return Ok(());
    }
    print_table(&variant(&l.s, a)?, o);
    Ok(())
}

fn cmd_enumerate(c: &EnumConstraints, count: bool, o: &mut Out) -> Res {
    let tables = enumerate_tables(c, true)?;
    if count {
        if o.json {
            o.value(&json!({ "constraints": c, "count": tables.len() }));
        } else {
            o.line(tables.len());
        }
        return Ok(());
    }
    let n = c.order;
    let sgs: Vec<Semigroup> = tables
        .iter()
        .map(|t| Semigroup::from_flat(n, t.iter().map(|&v| v as u32).collect()))
        .collect::<Result<_, _>>()?;
    if o.json {
        let docs: Vec<TableDoc> = sgs.iter().map(TableDoc::from).collect();
        o.value(&docs);
        return Ok(());
    }
    for (i, s) in sgs.iter().enumerate() {
        if i > 0 {
            o.line("");
        }
        let _ = write!(o.w, "{}", serialize(s));
    }
    Ok(())
}

fn cmd_table1(max: usize, long: bool, list: bool, o: &mut Out) -> Res {
    if list {
        return list_monoids(max, long, o);
    }
    let rows = table1(max, long)?;
    if o.json {
        o.value(&rows);
        return Ok(());
    }
    o.line("convention n monoids c_identity c_universal_nonzero");
    for (name, d) in [("equivalence", Dedupe::Equivalence), ("isomorphism", Dedupe::Iso)] {
        for r in &rows {
            let (m, id, un) = r.triple(d);
            o.line(format!("{name} {} {m} {id} {un}", r.n));
        }
    }
    Ok(())
}

fn list_monoids(max: usize, long: bool, o: &mut Out) -> Res {
    let mut entries = Vec::new();
    for n in 3..=max {
        let mut c = EnumConstraints::monoids_with_zero_divisors(n, Dedupe::Equivalence);
        c.long_running = long;
        for s in enumerate_all(&c)? {
            let ch = relation_character(&s, Which::C);
            entries.push((s.clone(), c_conjugacy(&s), ch));
        }
    }
    if o.json {
        let v: Vec<_> = entries
            .iter()
            .map(|(s, c, ch)| json!({ "table": TableDoc::from(s), "c": c, "character": ch }))
            .collect();
        o.value(&v);
        return Ok(());
    }
    for (i, (s, c, ch)) in entries.iter().enumerate() {
        if i > 0 {
            o.line("");
        }
        let _ = write!(o.w, "{}", serialize(s));
        o.line(format!(
            "# c: {c}; identity {}; universal on nonzero {}",
            ch.is_identity, ch.universal_on_nonzero
        ));
    }
    Ok(())
}

fn cmd_suite(l: &Loaded, o: &mut Out) -> Res {
    let rep = theorem_suite(&l.s);
    if o.json {
        o.value(&rep);
    } else {
        for c in &rep.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            if c.detail.is_empty() {
                o.line(format!("{tag} {}", c.name));
            } else {
                o.line(format!("{tag} {}: {}", c.name, c.detail));
            }
        }
    }
    let failed = rep.failures().len();
    if failed > 0 {
        return Err(Failure(format!("{failed} checks failed")));
    }
    Ok(())
}

fn pinj(text: &str) -> Result<PartialInjection, Failure> {
    text.parse::<PartialInjection>().map_err(|e| Failure(format!("{text:?}: {e}")))
}

fn cmd_pinj(action: PinjAction, o: &mut Out) -> Res {
    match action {
        PinjAction::Decompose { map } => {
            let f = pinj(&map)?;
            let pieces = f.decompose();
            let ty = f.cc_type();
            if o.json {
                o.value(&json!({ "map": f, "pieces": pieces, "type": ty }));
            } else {
                o.line(format_pieces(&pieces));
                o.line(ty);
            }
        }
        PinjAction::Compose { first, second } => {
            let f = pinj(&first)?.compose(&pinj(&second)?)?;
            if o.json {
                o.value(&f);
            } else {
                o.line(f);
            }
        }
        PinjAction::Inverse { map } => {
            let f = pinj(&map)?.inverse();
            if o.json {
                o.value(&f);
            } else {
                o.line(f);
            }
        }
        PinjAction::Conjugate { first, second } => {
            let (a, b) = (pinj(&first)?, pinj(&second)?);
            if a.order() != b.order() {
                return Err(Failure("maps act on sets of different sizes".into()));
            }
            let c = c_oracle(&a, &b);
            let forward = find_r_homomorphism(&a, &b);
            let backward = find_r_homomorphism(&b, &a);
            let sigma = permutation_witness(&a, &b);
            if o.json {
                o.value(&json!({
                    "c_conjugate": c,
                    "types": [a.cc_type(), b.cc_type()],
                    "r_homomorphisms": [forward, backward],
                    "permutation": sigma,
                }));
            } else {
                o.line(format!("c-conjugate: {c}"));
                o.line(format!("types: {} | {}", a.cc_type(), b.cc_type()));
                let show = |f: &Option<PartialInjection>| f.as_ref().map_or("none".into(), |f| f.to_string());
                o.line(format!("r-homomorphism first->second: {}", show(&forward)));
                o.line(format!("r-homomorphism second->first: {}", show(&backward)));
                o.line(format!("permutation: {}", show(&sigma)));
            }
        }
    }
    Ok(())
}

fn ccr(text: &str) -> Result<CCRType, Failure> {
    text.parse::<CCRType>().map_err(|e| Failure(format!("{text:?}: {e}")))
}

fn cmd_symbolic(action: SymbolicAction, o: &mut Out) -> Res {
    match action {
        SymbolicAction::Compare { first, second } => {
            let (a, b) = (ccr(&first)?, ccr(&second)?);
            let c = c_conjugate(&a, &b);
            let j = i_j_related(&a, &b);
            let tr = tr_conjugate(&a, &b).ok();
            let gamma = gamma_relations(&a, &b).ok();
            if o.json {
                o.value(&json!({ "c": c, "j": j, "tr": tr, "gamma": gamma }));
            } else {
                o.line(format!("c: {c}"));
                o.line(format!("J in I(X): {j}"));
                o.line(format!("tr: {}", tr.map_or("n/a".into(), |v| v.to_string())));
                match gamma {
                    Some(g) => o.line(format!("Gamma(X): p={} c={} j={}", g.p, g.c, g.j)),
                    None => o.line("Gamma(X): n/a"),
                }
            }
        }
        SymbolicAction::Inspect { ty } => {
            let t = ccr(&ty)?;
            let k = kappa(&t);
            let m = mu(&t);
            if o.json {
                o.value(&json!({
                    "type": t.to_string(),
                    "kappa": k,
                    "mu": m,
                    "full_injection": t.is_full_injection(),
                }));
            } else {
                o.line(&t);
                o.line(format!("kappa: {k}"));
                o.line(format!("mu: {m}"));
                o.line(format!("full injection: {}", t.is_full_injection()));
            }
        }
        SymbolicAction::Known => {
            let pairs = known_pairs();
            if o.json {
                o.value(&pairs);
            } else {
                for p in &pairs {
                    o.line(format!("{}: {} | {} c={}", p.name, p.first, p.second, p.c));
                }
            }
        }
    }
    Ok(())
}

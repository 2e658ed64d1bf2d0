//! Corpus generation and the lemma suite runner.
//!
//! Terms are enumerated exhaustively by size, substitution pools are drawn
//! deterministically from a seed, and the lemma suite turns the kernel's
//! invariants into pass/fail reports with replayable reproducers.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alpha::alpha_eq;
use crate::normalization::{count_succ, explore, numeral, Status};
use crate::print::print_term;
use crate::reduction::{
    beta_rules, check_compat_subst, check_comm_alpha, check_preserves_fresh,
    neutral_head_check, one_step_reducts, path_to_string, splice_at, systemt_rules, Move,
    RuleSet, RuleTag,
};
use crate::subst::{choose_fresh, fresh_not_in, restriction_fresh, Subst};
use crate::syntax::{Alphabet, Empty, TConst, Term, Var};
use crate::typing::{empty_signature, infer, system_t_signature, Signature, SimpleType};

/// Which alphabet (and therefore which rule sets and signature) the corpus
/// is built over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlphabetChoice {
    Empty,
    SystemT,
}

/// Bounds and seeds for corpus generation and the suite run.
#[derive(Clone, Debug)]
pub struct CorpusConfig {
    pub max_term_size: usize,
    pub variable_pool: Vec<Var>,
    pub alphabet: AlphabetChoice,
    pub substitution_pool_size: usize,
    pub seed: u64,
    pub node_budget: usize,
    pub fuel: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_term_size: 7,
            variable_pool: vec![Var(0), Var(1), Var(2)],
            alphabet: AlphabetChoice::SystemT,
            substitution_pool_size: 50,
            seed: 0xC0FFEE,
            node_budget: 100_000,
            fuel: 10_000,
        }
    }
}

/// Calls `f` with every term of exactly `n` constructors over the pool and
/// alphabet, in a fixed order: constants, then variables, then abstractions
/// (by binder, then body), then applications (by function size, function,
/// argument).
pub fn for_each_term_of_size<C: Alphabet>(
    n: usize,
    pool: &[Var],
    consts: &[C],
    f: &mut dyn FnMut(Term<C>),
) {
    match n {
        0 => {}
        1 => {
            for c in consts {
                f(Term::Const(c.clone()));
            }
            for &x in pool {
                f(Term::Var(x));
            }
        }
        _ => {
            for &x in pool {
                for_each_term_of_size(n - 1, pool, consts, &mut |body| f(Term::abs(x, body)));
            }
            for fun_size in 1..=n - 2 {
                for_each_term_of_size(fun_size, pool, consts, &mut |fun: Term<C>| {
                    for_each_term_of_size(n - 1 - fun_size, pool, consts, &mut |arg| {
                        f(Term::app(fun.clone(), arg))
                    });
                });
            }
        }
    }
}

/// Streams every term up to `max_size`, sizes ascending, without storing
/// the corpus.
pub fn for_each_term_up_to<C: Alphabet>(
    max_size: usize,
    pool: &[Var],
    f: &mut dyn FnMut(Term<C>),
) {
    let consts = C::enumerate();
    for n in 1..=max_size {
        for_each_term_of_size(n, pool, &consts, f);
    }
}

/// The full corpus up to `cfg.max_term_size`, deterministic and duplicate
/// free.
pub fn enumerate_terms<C: Alphabet>(cfg: &CorpusConfig) -> Vec<Term<C>> {
    let mut out = Vec::new();
    for_each_term_up_to(cfg.max_term_size, &cfg.variable_pool, &mut |t| out.push(t));
    out
}

/// Closed terms of the corpus that infer a type, paired with their ground
/// principal type (residual metavariables instantiated at the base type).
pub fn enumerate_typed_closed<C: Alphabet>(
    cfg: &CorpusConfig,
    sig: &Signature<C>,
) -> Vec<(Term<C>, SimpleType)> {
    let ctx = crate::typing::Context::new();
    let mut out = Vec::new();
    for_each_term_up_to(cfg.max_term_size, &cfg.variable_pool, &mut |t: Term<C>| {
        if !t.is_closed() {
            return;
        }
        if let Ok(ty) = infer(sig, &ctx, &t) {
            out.push((t, ty.default_to_base()));
        }
    });
    out
}

fn random_term<C: Alphabet>(rng: &mut ChaCha8Rng, size: usize, pool: &[Var], consts: &[C]) -> Term<C> {
    if size <= 1 {
        let n_atoms = consts.len() + pool.len();
        let i = rng.gen_range(0..n_atoms);
        return if i < consts.len() {
            Term::Const(consts[i].clone())
        } else {
            Term::Var(pool[i - consts.len()])
        };
    }
    if size == 2 || rng.gen_bool(0.5) {
        let x = pool[rng.gen_range(0..pool.len())];
        Term::abs(x, random_term(rng, size - 1, pool, consts))
    } else {
        let fun_size = rng.gen_range(1..=size - 2);
        Term::app(
            random_term(rng, fun_size, pool, consts),
            random_term(rng, size - 1 - fun_size, pool, consts),
        )
    }
}

/// A deterministic pool of finite-override substitutions on `domain`. The
/// identity substitution is always the first element; every override image
/// is a term of at most `cfg.max_term_size` constructors.
pub fn random_substitutions<C: Alphabet>(cfg: &CorpusConfig, domain: &[Var]) -> Vec<Subst<C>> {
    let consts = C::enumerate();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = vec![Subst::identity()];
    let image_cap = cfg.max_term_size.min(4).max(1);
    while out.len() < cfg.substitution_pool_size {
        let mut s = Subst::identity();
        for &x in domain {
            if rng.gen_bool(0.7) {
                let size = rng.gen_range(1..=image_cap);
                s = s.update(x, random_term(&mut rng, size, domain, &consts));
            }
        }
        out.push(s);
    }
    out
}

/// Independent completeness oracle: enumerates every one-hole context of
/// `m` and attempts a root contraction in the hole, returning all
/// (target, path) pairs.
pub fn reducts_by_context_oracle<C: Alphabet>(
    rules: &RuleSet<C>,
    m: &Term<C>,
) -> Vec<(Term<C>, Vec<Move>)> {
    fn paths<C>(t: &Term<C>, here: &mut Vec<Move>, out: &mut Vec<Vec<Move>>) {
        out.push(here.clone());
        match t {
            Term::Abs(_, body) => {
                here.push(Move::IntoBody);
                paths(body, here, out);
                here.pop();
            }
            Term::App(fun, arg) => {
                here.push(Move::IntoFun);
                paths(fun, here, out);
                here.pop();
                here.push(Move::IntoArg);
                paths(arg, here, out);
                here.pop();
            }
            _ => {}
        }
    }
    let mut all_paths = Vec::new();
    paths(m, &mut Vec::new(), &mut all_paths);
    let mut out = Vec::new();
    for p in all_paths {
        let sub = crate::reduction::subterm_at(m, &p).unwrap();
        for (contractum, _tag) in rules.root_contracta(sub) {
            out.push((splice_at(m, &p, contractum).unwrap(), p.clone()));
        }
    }
    out
}

const MAX_REPRODUCERS: usize = 25;

/// Per-lemma outcome; `failures` lists up to the first few reproducers.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub name: String,
    pub cases: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub lemmas: Vec<LemmaReport>,
}

impl SuiteReport {
    pub fn total_failures(&self) -> u64 {
        self.lemmas.iter().map(|l| l.failure_count).sum()
    }

    /// The line-oriented human log, one line per lemma plus reproducers.
    pub fn log(&self) -> String {
        let mut out = String::new();
        for l in &self.lemmas {
            out.push_str(&format!(
                "LEMMA {}: cases={} failures={} ({} ms)\n",
                l.name, l.cases, l.failure_count, l.millis
            ));
            for r in &l.failures {
                out.push_str(&format!("  repro: {r}\n"));
            }
        }
        out.push_str(&format!(
            "TOTAL: {} lemmas, {} failures\n",
            self.lemmas.len(),
            self.total_failures()
        ));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct LemmaRun {
    name: String,
    start: Instant,
    cases: u64,
    failure_count: u64,
    failures: Vec<String>,
}

impl LemmaRun {
    fn new(name: impl Into<String>) -> Self {
        LemmaRun {
            name: name.into(),
            start: Instant::now(),
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn case(&mut self, ok: bool, repro: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_REPRODUCERS {
                self.failures.push(repro());
            }
        }
    }

    fn finish(self) -> LemmaReport {
        LemmaReport {
            name: self.name,
            cases: self.cases,
            failure_count: self.failure_count,
            failures: self.failures,
            millis: self.start.elapsed().as_millis(),
        }
    }
}

fn subst_repr<C: Alphabet>(s: &Subst<C>) -> String {
    let parts: Vec<String> = s
        .override_domain()
        .map(|x| format!("{x}:={}", print_term(&s.apply_var(x))))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn step_repr<C: Alphabet>(s: &crate::reduction::Step<C>) -> String {
    format!(
        "{} --{}@{}--> {}",
        print_term(&s.source),
        s.tag,
        path_to_string(&s.path),
        print_term(&s.target)
    )
}

/// Runs the whole lemma suite over the configured corpus.
pub fn run_suite(cfg: &CorpusConfig) -> SuiteReport {
    match cfg.alphabet {
        AlphabetChoice::Empty => {
            let rule_sets = [beta_rules::<Empty>()];
            let lemmas = suite_core(cfg, &rule_sets, &empty_signature(), &rule_sets[0]);
            SuiteReport { lemmas }
        }
        AlphabetChoice::SystemT => {
            let rule_sets = [beta_rules::<TConst>(), systemt_rules()];
            let sn_rules = systemt_rules();
            let mut lemmas =
                suite_core(cfg, &rule_sets, &system_t_signature(), &sn_rules);
            lemmas.push(lemma_v_succ(cfg));
            lemmas.push(lemma_lex_decrease(cfg));
            SuiteReport { lemmas }
        }
    }
}

fn suite_core<C: Alphabet>(
    cfg: &CorpusConfig,
    rule_sets: &[RuleSet<C>],
    sig: &Signature<C>,
    sn_rules: &RuleSet<C>,
) -> Vec<LemmaReport> {
    let corpus: Vec<Term<C>> = enumerate_terms(cfg);
    let substs: Vec<Subst<C>> = random_substitutions(cfg, &cfg.variable_pool);
    let iota = Subst::identity();
    let mut lemmas = Vec::new();

    // The chosen fresh name avoids every free-variable image of the
    // substitution restricted to the term.
    let mut run = LemmaRun::new("fresh-choice-freshness");
    for m in &corpus {
        for s in &substs {
            let y = choose_fresh(s, m);
            run.case(restriction_fresh(y, s, m), || {
                format!("M={} sigma={}", print_term(m), subst_repr(s))
            });
        }
    }
    lemmas.push(run.finish());

    // Capture avoidance for the binder renaming.
    let mut run = LemmaRun::new("capture-avoidance");
    for m in &corpus {
        if let Term::Abs(_, _) = m {
            for s in &substs {
                let y = choose_fresh(s, m);
                let ok = m
                    .free_vars()
                    .into_iter()
                    .all(|w| s.apply_var(w).is_fresh(y));
                run.case(ok, || {
                    format!("M={} sigma={}", print_term(m), subst_repr(s))
                });
            }
        }
    }
    lemmas.push(run.finish());

    // The identity action only renames binders: M ~α M • ι.
    let mut run = LemmaRun::new("identity-action-alpha");
    for m in &corpus {
        run.case(alpha_eq(m, &m.subst(&iota)), || {
            format!("M={}", print_term(m))
        });
    }
    lemmas.push(run.finish());

    // Composition law: (M • σ ≺+ (x, v y)) [N / y] ~α M • σ ≺+ (x, N)
    // for y = χ(σ, λx M). Extra quantifiers x and N are sampled.
    let mut run = LemmaRun::new("substitution-composition");
    let xs: Vec<Var> = cfg.variable_pool.iter().copied().take(2).collect();
    let n_samples: Vec<Term<C>> = sample_ns(&cfg.variable_pool);
    for m in &corpus {
        for &x in &xs {
            let lam = Term::abs(x, m.clone());
            for s in &substs {
                let y = choose_fresh(s, &lam);
                for n in &n_samples {
                    let lhs = m.subst(&s.update(x, Term::Var(y))).subst1(n, y);
                    let rhs = m.subst(&s.update(x, n.clone()));
                    run.case(alpha_eq(&lhs, &rhs), || {
                        format!(
                            "M={} x={} N={} sigma={}",
                            print_term(m),
                            x,
                            print_term(n),
                            subst_repr(s)
                        )
                    });
                }
            }
        }
    }
    lemmas.push(run.finish());

    for rules in rule_sets {
        lemmas.extend(reduction_lemmas(cfg, rules, &corpus, &substs));
    }

    lemmas.extend(sn_lemmas(cfg, sn_rules, sig));
    lemmas
}

fn sample_ns<C: Alphabet>(pool: &[Var]) -> Vec<Term<C>> {
    let a = pool[0];
    let b = pool.get(1).copied().unwrap_or(a);
    vec![
        Term::Var(a),
        Term::app(Term::Var(b), Term::abs(a, Term::Var(a))),
    ]
}

fn reduction_lemmas<C: Alphabet>(
    cfg: &CorpusConfig,
    rules: &RuleSet<C>,
    corpus: &[Term<C>],
    substs: &[Subst<C>],
) -> Vec<LemmaReport> {
    let mut lemmas = Vec::new();
    let fresh_sample: Vec<Var> = {
        let mut xs = cfg.variable_pool.clone();
        xs.push(fresh_not_in(&xs));
        xs
    };

    // Preservation of freshness: steps never introduce a free name.
    let mut run = LemmaRun::new(format!("step-preserves-freshness [{}]", rules.name));
    for m in corpus {
        for s in one_step_reducts(rules, m) {
            for &x in &fresh_sample {
                run.case(check_preserves_fresh(x, &s), || {
                    format!("x={x} step: {}", step_repr(&s))
                });
            }
        }
    }
    lemmas.push(run.finish());

    // Stability under substitution: every step survives any substitution
    // up to ~α.
    let mut run = LemmaRun::new(format!("step-compat-subst [{}]", rules.name));
    for m in corpus {
        for s in one_step_reducts(rules, m) {
            for sigma in substs {
                run.case(check_compat_subst(rules, &s, sigma).is_some(), || {
                    format!("sigma={} step: {}", subst_repr(sigma), step_repr(&s))
                });
            }
        }
    }
    lemmas.push(run.finish());

    // Commutation with alpha: alpha-variants of the source can match the
    // step up to ~α. Variants come from the identity action.
    let mut run = LemmaRun::new(format!("step-comm-alpha [{}]", rules.name));
    for m in corpus {
        let steps = one_step_reducts(rules, m);
        if steps.is_empty() {
            continue;
        }
        let variant = m.subst(&Subst::identity());
        for s in steps {
            run.case(check_comm_alpha(rules, &variant, &s).is_some(), || {
                format!("M={} step: {}", print_term(&variant), step_repr(&s))
            });
        }
    }
    lemmas.push(run.finish());

    // Neutrality: variable-headed spines are never redexes.
    let mut run = LemmaRun::new(format!("neutrality [{}]", rules.name));
    for m in corpus {
        run.case(neutral_head_check(rules, m), || {
            format!("M={}", print_term(m))
        });
    }
    lemmas.push(run.finish());

    // The recursive reduct enumeration agrees with the one-hole-context
    // oracle as a set of (target, path) pairs.
    let mut run = LemmaRun::new(format!("reduct-completeness [{}]", rules.name));
    for m in corpus {
        let mut got: Vec<(Term<C>, Vec<Move>)> = one_step_reducts(rules, m)
            .into_iter()
            .map(|s| (s.target, s.path))
            .collect();
        let mut oracle = reducts_by_context_oracle(rules, m);
        got.sort();
        oracle.sort();
        run.case(got == oracle, || format!("M={}", print_term(m)));
    }
    lemmas.push(run.finish());

    lemmas
}

fn sn_lemmas<C: Alphabet>(
    cfg: &CorpusConfig,
    rules: &RuleSet<C>,
    sig: &Signature<C>,
) -> Vec<LemmaReport> {
    let typed = enumerate_typed_closed(cfg, sig);
    let mut lemmas = Vec::new();

    // Typed closed terms are strongly normalizing.
    let mut run = LemmaRun::new("typed-implies-sn");
    for (m, _) in &typed {
        let g = explore(rules, m, cfg.node_budget);
        run.case(g.status == Status::Finite, || {
            format!("M={} status={:?}", print_term(m), g.status)
        });
    }
    lemmas.push(run.finish());

    // v strictly decreases along every edge.
    let mut run = LemmaRun::new("v-strict-decrease");
    for (m, _) in &typed {
        let g = explore(rules, m, cfg.node_budget);
        if g.status != Status::Finite {
            continue;
        }
        for e in &g.edges {
            let ok = match (g.height_v(&e.source), g.height_v(&e.target)) {
                (Some(vs), Some(vt)) => vt < vs,
                _ => false,
            };
            run.case(ok, || format!("edge: {}", step_repr(e)));
        }
    }
    lemmas.push(run.finish());

    // sn (M · N) implies sn M and sn N.
    let mut run = LemmaRun::new("sn-app-inversion");
    for (m, _) in &typed {
        if let Term::App(fun, arg) = m {
            if explore(rules, m, cfg.node_budget).status != Status::Finite {
                continue;
            }
            let ok = explore(rules, fun, cfg.node_budget).status == Status::Finite
                && explore(rules, arg, cfg.node_budget).status == Status::Finite;
            run.case(ok, || format!("M={}", print_term(m)));
        }
    }
    lemmas.push(run.finish());

    // Alpha-variants are sn together, with equal v.
    let mut run = LemmaRun::new("sn-alpha-invariance");
    for (m, _) in &typed {
        let variant = m.subst(&Subst::identity());
        let gm = explore(rules, m, cfg.node_budget);
        let gv = explore(rules, &variant, cfg.node_budget);
        let ok = gm.status == Status::Finite
            && gv.status == Status::Finite
            && gm.root_height() == gv.root_height();
        run.case(ok, || {
            format!("M={} N={}", print_term(m), print_term(&variant))
        });
    }
    lemmas.push(run.finish());

    lemmas
}

/// v(N) = v(S N) for nat-typed N.
fn lemma_v_succ(cfg: &CorpusConfig) -> LemmaReport {
    let rules = systemt_rules();
    let sig = system_t_signature();
    let typed = enumerate_typed_closed(cfg, &sig);
    let mut run = LemmaRun::new("v-succ-invariance");
    for (m, ty) in &typed {
        if *ty != SimpleType::Base {
            continue;
        }
        let g = explore(&rules, m, cfg.node_budget);
        let sn = Term::app(Term::Const(TConst::Succ), m.clone());
        let gs = explore(&rules, &sn, cfg.node_budget);
        let ok = g.status == Status::Finite
            && gs.status == Status::Finite
            && g.root_height() == gs.root_height();
        run.case(ok, || format!("N={}", print_term(m)));
    }
    run.finish()
}

/// The lexicographic measure (v, ℓ) on a family of recursor spines
/// Rec G H (S N): the recS contractum drops in (v, ℓ) because ℓ(N) < ℓ(S N)
/// at equal v, and argument steps drop v outright.
fn lemma_lex_decrease(cfg: &CorpusConfig) -> LemmaReport {
    let rules = systemt_rules();
    let mut run = LemmaRun::new("lex-decrease-on-rec-spines");
    let id = Term::abs(Var(0), Term::<TConst>::var(0));
    let gs = [numeral(0), numeral(1)];
    let hs = [
        Term::abs(
            Var(0),
            Term::abs(Var(1), Term::app(Term::Const(TConst::Succ), Term::var(1))),
        ),
        Term::abs(Var(0), Term::abs(Var(1), Term::var(1))),
    ];
    let ns: Vec<Term<TConst>> = (0..=3)
        .flat_map(|k| [numeral(k), Term::app(id.clone(), numeral(k))])
        .collect();
    for g in &gs {
        for h in &hs {
            for n in &ns {
                let sn = Term::app(Term::Const(TConst::Succ), n.clone());
                let m = Term::apps(Term::Const(TConst::Rec), [g.clone(), h.clone(), sn.clone()]);
                let graph = explore(&rules, &m, cfg.node_budget);
                if graph.status != Status::Finite {
                    run.case(false, || format!("M={} not finite", print_term(&m)));
                    continue;
                }
                // recS contractum: equal v components, strictly smaller ℓ.
                let gn = explore(&rules, n, cfg.node_budget);
                let gsn = explore(&rules, &sn, cfg.node_budget);
                let lex_ok = gn.root_height() == gsn.root_height()
                    && count_succ(n) < count_succ(&sn);
                run.case(lex_ok, || format!("M={}", print_term(&m)));
                // argument steps: v strictly drops on the recursor argument.
                for e in one_step_reducts(&rules, &m) {
                    if e.tag == RuleTag::Beta && e.path.first() == Some(&Move::IntoArg) {
                        let g_tgt = explore(&rules, &e.target, cfg.node_budget);
                        let ok = g_tgt.root_height().zip(graph.root_height())
                            .is_some_and(|(t, s)| t < s);
                        run.case(ok, || format!("edge: {}", step_repr(&e)));
                    }
                }
            }
        }
    }
    run.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_cfg(alphabet: AlphabetChoice, size: usize) -> CorpusConfig {
        CorpusConfig {
            max_term_size: size,
            variable_pool: vec![Var(0), Var(1)],
            alphabet,
            substitution_pool_size: 8,
            seed: 42,
            node_budget: 10_000,
            fuel: 1_000,
        }
    }

    #[test]
    fn enumeration_smallest_sizes() {
        let cfg = CorpusConfig {
            max_term_size: 1,
            variable_pool: vec![Var(0)],
            alphabet: AlphabetChoice::Empty,
            ..small_cfg(AlphabetChoice::Empty, 1)
        };
        let terms: Vec<Term<Empty>> = enumerate_terms(&cfg);
        assert_eq!(terms, vec![Term::var(0)]);

        let cfg = CorpusConfig {
            max_term_size: 2,
            ..cfg
        };
        let terms: Vec<Term<Empty>> = enumerate_terms(&cfg);
        assert_eq!(terms, vec![Term::var(0), Term::abs(Var(0), Term::var(0))]);
    }

    #[test]
    fn enumeration_size_three_count() {
        // Brute-force cross-check: over pool {v0} and the empty alphabet the
        // size-3 layer adds λv0 λv0 v0 and v0 v0, for four terms in total.
        let cfg = CorpusConfig {
            max_term_size: 3,
            variable_pool: vec![Var(0)],
            alphabet: AlphabetChoice::Empty,
            ..small_cfg(AlphabetChoice::Empty, 3)
        };
        let terms: Vec<Term<Empty>> = enumerate_terms(&cfg);
        assert_eq!(
            terms,
            vec![
                Term::var(0),
                Term::abs(Var(0), Term::var(0)),
                Term::abs(Var(0), Term::abs(Var(0), Term::var(0))),
                Term::app(Term::var(0), Term::var(0)),
            ]
        );
    }

    #[test]
    fn enumeration_has_no_duplicates_and_respects_bound() {
        let cfg = small_cfg(AlphabetChoice::SystemT, 4);
        let terms: Vec<Term<TConst>> = enumerate_terms(&cfg);
        let mut seen = std::collections::HashSet::new();
        for t in &terms {
            assert!(t.size() <= 4);
            assert!(seen.insert(t.clone()), "duplicate {t:?}");
        }
    }

    #[test]
    fn typed_enumeration_examples() {
        let cfg = small_cfg(AlphabetChoice::SystemT, 3);
        let sig = system_t_signature();
        let typed = enumerate_typed_closed(&cfg, &sig);
        assert!(typed.contains(&(
            Term::abs(Var(0), Term::var(0)),
            SimpleType::arrow(SimpleType::Base, SimpleType::Base)
        )));
        assert!(typed.contains(&(Term::Const(TConst::Zero), SimpleType::Base)));
        let bad = Term::app(Term::Const(TConst::Zero), Term::Const(TConst::Zero));
        assert!(typed.iter().all(|(t, _)| *t != bad));
        assert!(typed.iter().all(|(t, _)| t.is_closed()));
    }

    #[test]
    fn substitution_pool_deterministic_and_bounded() {
        let cfg = small_cfg(AlphabetChoice::SystemT, 4);
        let a: Vec<Subst<TConst>> = random_substitutions(&cfg, &cfg.variable_pool);
        let b: Vec<Subst<TConst>> = random_substitutions(&cfg, &cfg.variable_pool);
        assert_eq!(a.len(), cfg.substitution_pool_size);
        for (s, t) in a.iter().zip(&b) {
            for &x in &cfg.variable_pool {
                assert_eq!(s.apply_var(x), t.apply_var(x));
            }
        }
        // first element is the identity
        for &x in &cfg.variable_pool {
            assert_eq!(a[0].apply_var(x), Term::Var(x));
        }
        for s in &a {
            for x in s.override_domain() {
                assert!(s.apply_var(x).size() <= cfg.max_term_size);
            }
        }
    }

    #[test]
    fn oracle_agrees_on_samples() {
        let rules = systemt_rules();
        let id = Term::abs(Var(0), Term::<TConst>::var(0));
        let samples = [
            Term::app(id.clone(), Term::Const(TConst::Zero)),
            Term::apps(
                Term::Const(TConst::Rec),
                [
                    Term::Const(TConst::Zero),
                    id.clone(),
                    Term::app(Term::Const(TConst::Succ), Term::Const(TConst::Zero)),
                ],
            ),
            Term::abs(Var(1), Term::app(id, Term::var(1))),
        ];
        for m in &samples {
            let mut got: Vec<_> = one_step_reducts(&rules, m)
                .into_iter()
                .map(|s| (s.target, s.path))
                .collect();
            let mut oracle = reducts_by_context_oracle(&rules, m);
            got.sort();
            oracle.sort();
            assert_eq!(got, oracle, "mismatch for {m:?}");
        }
    }

    #[test]
    fn lemma_run_records_failures() {
        let mut run = LemmaRun::new("demo");
        run.case(true, || unreachable!());
        run.case(false, || "broken".to_string());
        let report = run.finish();
        assert_eq!(report.cases, 2);
        assert_eq!(report.failure_count, 1);
        assert_eq!(report.failures, vec!["broken".to_string()]);
    }

    #[test]
    fn small_suite_is_clean_and_reproducible() {
        let cfg = small_cfg(AlphabetChoice::SystemT, 4);
        let a = run_suite(&cfg);
        assert_eq!(a.total_failures(), 0, "{}", a.log());
        let b = run_suite(&cfg);
        let strip = |r: &SuiteReport| {
            r.lemmas
                .iter()
                .map(|l| (l.name.clone(), l.cases, l.failure_count, l.failures.clone()))
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&a), strip(&b));
    }

    #[test]
    fn small_pure_suite_is_clean() {
        let cfg = small_cfg(AlphabetChoice::Empty, 4);
        let report = run_suite(&cfg);
        assert_eq!(report.total_failures(), 0, "{}", report.log());
    }

    #[test]
    fn report_serializes() {
        let cfg = small_cfg(AlphabetChoice::Empty, 3);
        let report = run_suite(&cfg);
        let json = report.to_json();
        assert!(json.contains("fresh-choice-freshness"));
        assert!(report.log().contains("TOTAL"));
    }
}

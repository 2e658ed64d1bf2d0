//! Normal forms, bounded strong-normalization exploration, the v ordinal
//! (longest reduction length), the ℓ count of successor symbols, and Gödel
//! numerals.
//!
//! `explore` walks the complete graph of many-step reducts under a rule
//! set, memoized on exact syntactic terms (alpha-variants are distinct
//! nodes). A finite graph witnesses strong normalization and carries a
//! per-node v; a reduction cycle refutes it; budget exhaustion is an
//! unknown, never a verdict.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::print::print_term;
use crate::reduction::{one_step_reducts, path_to_string, RuleSet, Step};
use crate::syntax::{Alphabet, TConst, Term};

/// Outcome of an exploration.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Status<C> {
    /// The reduct graph is finite and acyclic: the root is strongly
    /// normalizing.
    Finite,
    /// A reduction cycle was found; the witness lists the terms along the
    /// cycle, first and last entries equal.
    CycleFound(Vec<Term<C>>),
    /// The node budget ran out before the search completed.
    BudgetExhausted,
}

/// The memoized graph of all many-step reducts of a root term.
#[derive(Clone, Debug)]
pub struct ReductionGraph<C> {
    pub root: Term<C>,
    pub nodes: Vec<Term<C>>,
    pub edges: Vec<Step<C>>,
    pub status: Status<C>,
    heights: HashMap<Term<C>, u64>,
}

impl<C: Alphabet> ReductionGraph<C> {
    /// v(M): the length of the longest reduction sequence starting at `m`;
    /// 0 for normal forms. Only available on `Finite` graphs, and `None`
    /// for terms that are not nodes of the graph.
    pub fn height_v(&self, m: &Term<C>) -> Option<u64> {
        if self.status != Status::Finite {
            return None;
        }
        self.heights.get(m).copied()
    }

    /// v of the root of a finite graph.
    pub fn root_height(&self) -> Option<u64> {
        self.height_v(&self.root)
    }

    /// Graphviz rendering: one node per term labeled with its printed form
    /// and v, one edge per step labeled "tag@path".
    pub fn to_dot(&self) -> String {
        fn escape(s: &str) -> String {
            s.replace('\\', "\\\\").replace('"', "\\\"")
        }
        let index: HashMap<&Term<C>, usize> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        let mut out = String::from("digraph reduction {\n");
        for (i, t) in self.nodes.iter().enumerate() {
            let label = match self.heights.get(t) {
                Some(v) if self.status == Status::Finite => {
                    format!("{} (v={})", print_term(t), v)
                }
                _ => print_term(t),
            };
            let _ = writeln!(out, "  n{} [label=\"{}\"];", i, escape(&label));
        }
        for e in &self.edges {
            if let (Some(s), Some(t)) = (index.get(&e.source), index.get(&e.target)) {
                let _ = writeln!(
                    out,
                    "  n{} -> n{} [label=\"{}@{}\"];",
                    s,
                    t,
                    e.tag,
                    path_to_string(&e.path)
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

enum Stop<C> {
    Cycle(Vec<Term<C>>),
    Budget,
}

struct Explorer<'a, C> {
    rules: &'a RuleSet<C>,
    budget: usize,
    nodes: Vec<Term<C>>,
    edges: Vec<Step<C>>,
    heights: HashMap<Term<C>, u64>,
    stack: Vec<Term<C>>,
    on_stack: HashSet<Term<C>>,
}

impl<C: Alphabet> Explorer<'_, C> {
    fn dfs(&mut self, t: &Term<C>) -> Result<(), Stop<C>> {
        if self.heights.contains_key(t) {
            return Ok(());
        }
        if self.on_stack.contains(t) {
            let start = self.stack.iter().position(|s| s == t).unwrap();
            let mut cycle: Vec<Term<C>> = self.stack[start..].to_vec();
            cycle.push(t.clone());
            return Err(Stop::Cycle(cycle));
        }
        if self.nodes.len() >= self.budget {
            return Err(Stop::Budget);
        }
        self.nodes.push(t.clone());
        self.stack.push(t.clone());
        self.on_stack.insert(t.clone());
        let steps = one_step_reducts(self.rules, t);
        let mut height = 0u64;
        let mut result = Ok(());
        for s in steps {
            if let Err(stop) = self.dfs(&s.target) {
                result = Err(stop);
                break;
            }
            height = height.max(1 + self.heights[&s.target]);
            self.edges.push(s);
        }
        self.stack.pop();
        self.on_stack.remove(t);
        result?;
        self.heights.insert(t.clone(), height);
        Ok(())
    }
}

/// Exhaustive memoized search over the many-step reducts of `m`.
pub fn explore<C: Alphabet>(
    rules: &RuleSet<C>,
    m: &Term<C>,
    node_budget: usize,
) -> ReductionGraph<C> {
    let mut ex = Explorer {
        rules,
        budget: node_budget,
        nodes: Vec::new(),
        edges: Vec::new(),
        heights: HashMap::new(),
        stack: Vec::new(),
        on_stack: HashSet::new(),
    };
    let status = match ex.dfs(m) {
        Ok(()) => Status::Finite,
        Err(Stop::Cycle(witness)) => Status::CycleFound(witness),
        Err(Stop::Budget) => Status::BudgetExhausted,
    };
    ReductionGraph {
        root: m.clone(),
        nodes: ex.nodes,
        edges: ex.edges,
        status,
        heights: ex.heights,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
#[error("fuel exhausted before reaching a normal form")]
pub struct FuelExhausted;

/// Repeatedly contracts the first reduct (root redexes first) until no
/// reduct remains, taking at most `fuel` steps.
pub fn normalize<C: Alphabet>(
    rules: &RuleSet<C>,
    m: &Term<C>,
    fuel: usize,
) -> Result<(Term<C>, Vec<Step<C>>), FuelExhausted> {
    let mut current = m.clone();
    let mut trace = Vec::new();
    for _ in 0..fuel {
        let mut steps = one_step_reducts(rules, &current);
        if steps.is_empty() {
            return Ok((current, trace));
        }
        let step = steps.swap_remove(0);
        current = step.target.clone();
        trace.push(step);
    }
    if one_step_reducts(rules, &current).is_empty() {
        Ok((current, trace))
    } else {
        Err(FuelExhausted)
    }
}

/// Occurrences of a designated constant symbol.
pub fn count_const<C: Alphabet>(m: &Term<C>, c: &C) -> u64 {
    match m {
        Term::Const(k) => u64::from(k == c),
        Term::Var(_) => 0,
        Term::Abs(_, body) => count_const(body, c),
        Term::App(fun, arg) => count_const(fun, c) + count_const(arg, c),
    }
}

/// ℓ(M): the number of S symbols in a System T term.
pub fn count_succ(m: &Term<TConst>) -> u64 {
    count_const(m, &TConst::Succ)
}

/// The numeral Sⁿ 0.
pub fn numeral(n: u64) -> Term<TConst> {
    let mut t = Term::Const(TConst::Zero);
    for _ in 0..n {
        t = Term::app(Term::Const(TConst::Succ), t);
    }
    t
}

/// `Some(n)` iff the term is syntactically the numeral Sⁿ 0.
pub fn denumeral(m: &Term<TConst>) -> Option<u64> {
    let mut n = 0;
    let mut cur = m;
    loop {
        match cur {
            Term::Const(TConst::Zero) => return Some(n),
            Term::App(fun, arg) if **fun == Term::Const(TConst::Succ) => {
                n += 1;
                cur = arg;
            }
            _ => return None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::{beta_rules, systemt_rules};
    use crate::syntax::{Empty, Var};

    fn v(i: u32) -> Term<Empty> {
        Term::var(i)
    }

    fn omega() -> Term<Empty> {
        let half = Term::abs(Var(0), Term::app(v(0), v(0)));
        Term::app(half.clone(), half)
    }

    #[test]
    fn explore_normal_form() {
        let g = explore(&systemt_rules(), &Term::Const(TConst::Zero), 10);
        assert_eq!(g.status, Status::Finite);
        assert_eq!(g.nodes.len(), 1);
        assert_eq!(g.root_height(), Some(0));
    }

    #[test]
    fn explore_omega_finds_self_loop() {
        let g = explore(&beta_rules(), &omega(), 10);
        match &g.status {
            Status::CycleFound(w) => {
                assert_eq!(w.first(), w.last());
                assert!(w.contains(&omega()));
            }
            other => panic!("expected cycle, got {other:?}"),
        }
        assert_eq!(g.height_v(&omega()), None);
    }

    #[test]
    fn explore_identity_redex() {
        let m = Term::app(Term::abs(Var(0), v(0)), Term::abs(Var(1), v(1)));
        let g = explore(&beta_rules(), &m, 10);
        assert_eq!(g.status, Status::Finite);
        assert_eq!(g.root_height(), Some(1));
        assert_eq!(g.height_v(&Term::abs(Var(1), v(1))), Some(0));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let m = Term::app(Term::abs(Var(0), v(0)), Term::abs(Var(1), v(1)));
        let g = explore(&beta_rules(), &m, 1);
        assert_eq!(g.status, Status::BudgetExhausted);
    }

    #[test]
    fn height_absent_node() {
        let g = explore(&systemt_rules(), &Term::Const(TConst::Zero), 10);
        assert_eq!(g.height_v(&Term::Const(TConst::Succ)), None);
    }

    #[test]
    fn v_strictly_decreases_along_edges() {
        let id = Term::abs(Var(0), Term::<TConst>::var(0));
        let m = Term::app(id.clone(), Term::app(id, Term::Const(TConst::Zero)));
        let g = explore(&systemt_rules(), &m, 100);
        assert_eq!(g.status, Status::Finite);
        for e in &g.edges {
            assert!(g.height_v(&e.target).unwrap() < g.height_v(&e.source).unwrap());
        }
    }

    #[test]
    fn normalize_identity_redex() {
        let m = Term::app(
            Term::abs(Var(0), Term::<TConst>::var(0)),
            Term::Const(TConst::Zero),
        );
        let (nf, steps) = normalize(&beta_rules(), &m, 10).unwrap();
        assert_eq!(nf, Term::Const(TConst::Zero));
        assert_eq!(steps.len(), 1);
    }

    #[test]
    fn normalize_omega_exhausts_fuel() {
        assert_eq!(normalize(&beta_rules(), &omega(), 1000), Err(FuelExhausted));
    }

    #[test]
    fn normalize_rec_addition() {
        // Rec 0 (λv0 λv1. S v1) (S (S 0)) normalizes to S (S 0)
        let h = Term::abs(
            Var(0),
            Term::abs(
                Var(1),
                Term::app(Term::Const(TConst::Succ), Term::var(1)),
            ),
        );
        let m = Term::apps(
            Term::Const(TConst::Rec),
            [Term::Const(TConst::Zero), h, numeral(2)],
        );
        let (nf, _) = normalize(&systemt_rules(), &m, 100).unwrap();
        assert_eq!(nf, numeral(2));
    }

    #[test]
    fn normalize_step_count_bounded_by_v() {
        let id = Term::abs(Var(0), Term::<TConst>::var(0));
        let m = Term::app(id.clone(), Term::app(id, Term::Const(TConst::Zero)));
        let g = explore(&systemt_rules(), &m, 100);
        let (nf, steps) = normalize(&systemt_rules(), &m, 100).unwrap();
        assert!(one_step_reducts(&systemt_rules(), &nf).is_empty());
        assert!(steps.len() as u64 <= g.root_height().unwrap());
    }

    #[test]
    fn numerals() {
        assert_eq!(numeral(0), Term::Const(TConst::Zero));
        assert_eq!(
            numeral(1),
            Term::app(Term::Const(TConst::Succ), Term::Const(TConst::Zero))
        );
        for n in 0..=10 {
            assert_eq!(count_succ(&numeral(n)), n);
            assert_eq!(denumeral(&numeral(n)), Some(n));
        }
    }

    #[test]
    fn denumeral_rejects_non_numerals() {
        assert_eq!(denumeral(&Term::var(0)), None);
        assert_eq!(denumeral(&Term::Const(TConst::Succ)), None);
        let stuck = Term::app(Term::Const(TConst::Succ), Term::var(0));
        assert_eq!(denumeral(&stuck), None);
    }

    #[test]
    fn count_succ_cases() {
        assert_eq!(count_succ(&numeral(3)), 3);
        let t = Term::abs(
            Var(0),
            Term::app(Term::Const(TConst::Succ), Term::var(0)),
        );
        assert_eq!(count_succ(&t), 1);
        assert_eq!(count_succ(&Term::Const(TConst::Zero)), 0);
    }

    #[test]
    fn dot_export_shape() {
        let m = Term::app(
            Term::abs(Var(0), Term::<TConst>::var(0)),
            Term::Const(TConst::Zero),
        );
        let g = explore(&systemt_rules(), &m, 10);
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("beta@ε"));
        assert!(dot.contains("(v=1)"));
        assert!(dot.contains("(v=0)"));
    }
}

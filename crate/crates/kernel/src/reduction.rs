//! Contraction rule sets and one-step reduct enumeration.
//!
//! A `RuleSet` gives the contracta of a term viewed as a redex at the root;
//! `one_step_reducts` closes it compatibly over all positions and records
//! the redex path of every step. The meta-properties (freshness
//! preservation, alpha-compatibility with substitution, alpha-commutation,
//! and the neutrality condition on variable-headed spines) are realized as
//! finite witness searches, not proofs.

use std::fmt;

use crate::alpha::alpha_eq;
use crate::subst::Subst;
use crate::syntax::{Alphabet, TConst, Term, Var};

/// Which contraction rule produced a step.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RuleTag {
    Beta,
    Rec0,
    RecS,
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleTag::Beta => write!(f, "beta"),
            RuleTag::Rec0 => write!(f, "rec0"),
            RuleTag::RecS => write!(f, "recS"),
        }
    }
}

/// One move of a redex path, from the root towards the contracted redex.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Move {
    IntoBody,
    IntoFun,
    IntoArg,
}

/// Prints a path over {B, L, R}; the empty path prints as "ε".
pub fn path_to_string(path: &[Move]) -> String {
    if path.is_empty() {
        return "ε".to_string();
    }
    path.iter()
        .map(|m| match m {
            Move::IntoBody => 'B',
            Move::IntoFun => 'L',
            Move::IntoArg => 'R',
        })
        .collect()
}

/// A one-step reduction: contracting the redex of `source` at `path`
/// yields `target`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Step<C> {
    pub source: Term<C>,
    pub target: Term<C>,
    pub tag: RuleTag,
    pub path: Vec<Move>,
}

/// A contraction relation, presented as a root-contractum enumerator.
#[derive(Clone, Copy)]
pub struct RuleSet<C> {
    pub name: &'static str,
    root: fn(&Term<C>) -> Vec<(Term<C>, RuleTag)>,
}

impl<C: Alphabet> RuleSet<C> {
    /// All contracta of `m` viewed as a redex at the root.
    pub fn root_contracta(&self, m: &Term<C>) -> Vec<(Term<C>, RuleTag)> {
        (self.root)(m)
    }
}

fn beta_root<C: Alphabet>(m: &Term<C>) -> Vec<(Term<C>, RuleTag)> {
    if let Term::App(fun, arg) = m {
        if let Term::Abs(x, body) = fun.as_ref() {
            return vec![(body.subst1(arg, *x), RuleTag::Beta)];
        }
    }
    Vec::new()
}

fn systemt_root(m: &Term<TConst>) -> Vec<(Term<TConst>, RuleTag)> {
    let beta = beta_root(m);
    if !beta.is_empty() {
        return beta;
    }
    // Rec G H 0  and  Rec G H (S N)
    let (head, args) = m.spine();
    if *head == Term::Const(TConst::Rec) && args.len() == 3 {
        let (g, h, n) = (args[0], args[1], args[2]);
        if *n == Term::Const(TConst::Zero) {
            return vec![(g.clone(), RuleTag::Rec0)];
        }
        if let Term::App(sf, inner) = n {
            if **sf == Term::Const(TConst::Succ) {
                let rec_n = Term::apps(
                    Term::Const(TConst::Rec),
                    [g.clone(), h.clone(), inner.as_ref().clone()],
                );
                let target = Term::apps(h.clone(), [inner.as_ref().clone(), rec_n]);
                return vec![(target, RuleTag::RecS)];
            }
        }
    }
    Vec::new()
}

/// ▷β alone.
pub fn beta_rules<C: Alphabet>() -> RuleSet<C> {
    RuleSet {
        name: "beta",
        root: beta_root,
    }
}

/// ▷T: beta plus the rec0/recS rules for the primitive recursor.
pub fn systemt_rules() -> RuleSet<TConst> {
    RuleSet {
        name: "systemt",
        root: systemt_root,
    }
}

/// Every one-step reduct of `m`: root contracta first, then steps inside
/// the body/function position, then steps inside the argument position,
/// recursively.
pub fn one_step_reducts<C: Alphabet>(rules: &RuleSet<C>, m: &Term<C>) -> Vec<Step<C>> {
    let mut out = Vec::new();
    for (target, tag) in rules.root_contracta(m) {
        out.push(Step {
            source: m.clone(),
            target,
            tag,
            path: Vec::new(),
        });
    }
    match m {
        Term::Abs(x, body) => {
            for s in one_step_reducts(rules, body) {
                let mut path = vec![Move::IntoBody];
                path.extend(s.path);
                out.push(Step {
                    source: m.clone(),
                    target: Term::abs(*x, s.target),
                    tag: s.tag,
                    path,
                });
            }
        }
        Term::App(fun, arg) => {
            for s in one_step_reducts(rules, fun) {
                let mut path = vec![Move::IntoFun];
                path.extend(s.path);
                out.push(Step {
                    source: m.clone(),
                    target: Term::app(s.target, arg.as_ref().clone()),
                    tag: s.tag,
                    path,
                });
            }
            for s in one_step_reducts(rules, arg) {
                let mut path = vec![Move::IntoArg];
                path.extend(s.path);
                out.push(Step {
                    source: m.clone(),
                    target: Term::app(fun.as_ref().clone(), s.target),
                    tag: s.tag,
                    path,
                });
            }
        }
        _ => {}
    }
    out
}

/// The subterm of `m` at `path`, if the path addresses one.
pub fn subterm_at<'a, C>(m: &'a Term<C>, path: &[Move]) -> Option<&'a Term<C>> {
    let mut cur = m;
    for mv in path {
        cur = match (mv, cur) {
            (Move::IntoBody, Term::Abs(_, body)) => body,
            (Move::IntoFun, Term::App(fun, _)) => fun,
            (Move::IntoArg, Term::App(_, arg)) => arg,
            _ => return None,
        };
    }
    Some(cur)
}

/// Replaces the subterm of `m` at `path` with `replacement`.
pub fn splice_at<C: Alphabet>(
    m: &Term<C>,
    path: &[Move],
    replacement: Term<C>,
) -> Option<Term<C>> {
    match path.split_first() {
        None => Some(replacement),
        Some((mv, rest)) => match (mv, m) {
            (Move::IntoBody, Term::Abs(x, body)) => {
                Some(Term::abs(*x, splice_at(body, rest, replacement)?))
            }
            (Move::IntoFun, Term::App(fun, arg)) => Some(Term::app(
                splice_at(fun, rest, replacement)?,
                arg.as_ref().clone(),
            )),
            (Move::IntoArg, Term::App(fun, arg)) => Some(Term::app(
                fun.as_ref().clone(),
                splice_at(arg, rest, replacement)?,
            )),
            _ => None,
        },
    }
}

/// Compat•: searches the reducts of `s.source • σ` for a witness P with
/// `P ~α s.target • σ`.
pub fn check_compat_subst<C: Alphabet>(
    rules: &RuleSet<C>,
    s: &Step<C>,
    sigma: &Subst<C>,
) -> Option<Term<C>> {
    let source_image = s.source.subst(sigma);
    let target_image = s.target.subst(sigma);
    one_step_reducts(rules, &source_image)
        .into_iter()
        .map(|st| st.target)
        .find(|p| alpha_eq(p, &target_image))
}

/// Comm~α: given `M ~α s.source`, searches the reducts of `M` for a witness
/// Q with `Q ~α s.target`.
pub fn check_comm_alpha<C: Alphabet>(
    rules: &RuleSet<C>,
    m: &Term<C>,
    s: &Step<C>,
) -> Option<Term<C>> {
    one_step_reducts(rules, m)
        .into_iter()
        .map(|st| st.target)
        .find(|q| alpha_eq(q, &s.target))
}

/// Preserves#: a step never introduces a free occurrence of `x`.
pub fn check_preserves_fresh<C: Alphabet>(x: Var, s: &Step<C>) -> bool {
    !s.source.is_fresh(x) || s.target.is_fresh(x)
}

/// Cond▷: if the spine head of `m` is a variable, `m` must not be a redex.
pub fn neutral_head_check<C: Alphabet>(rules: &RuleSet<C>, m: &Term<C>) -> bool {
    let (head, _) = m.spine();
    !matches!(head, Term::Var(_)) || rules.root_contracta(m).is_empty()
}

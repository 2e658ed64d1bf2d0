//! Simple types, first-match contexts, constant signatures, and a
//! unification-based checker/inferencer for STLC and System T.
//!
//! Terms are Curry-style, so inference introduces a numbered metavariable
//! per binder and per schematic constant occurrence and solves application
//! constraints by first-order unification with an occurs check. `check`
//! stays faithful to the relational typing rules: it succeeds exactly when
//! the judgement is derivable.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::reduction::Move;
use crate::syntax::{Alphabet, Empty, TConst, Term, Var};

/// Object-level simple types: the base type τ (printed "nat") and arrows.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SimpleType {
    Base,
    Arrow(Box<SimpleType>, Box<SimpleType>),
}

impl SimpleType {
    pub fn arrow(dom: SimpleType, cod: SimpleType) -> Self {
        SimpleType::Arrow(Box::new(dom), Box::new(cod))
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleType::Base => write!(f, "nat"),
            SimpleType::Arrow(dom, cod) => {
                if matches!(dom.as_ref(), SimpleType::Arrow(_, _)) {
                    write!(f, "({dom}) -> {cod}")
                } else {
                    write!(f, "{dom} -> {cod}")
                }
            }
        }
    }
}

/// A variable context: ordered bindings, duplicates permitted, lookup
/// resolves to the most recently added binding.
#[derive(Clone, Debug, Default)]
pub struct Context {
    entries: Vec<(Var, SimpleType)>,
}

impl Context {
    pub fn new() -> Self {
        Context::default()
    }

    pub fn from_entries(entries: Vec<(Var, SimpleType)>) -> Self {
        Context { entries }
    }

    pub fn push(&mut self, x: Var, ty: SimpleType) {
        self.entries.push((x, ty));
    }

    /// Type of the first match scanning from the most recent binding.
    pub fn lookup(&self, x: Var) -> Option<&SimpleType> {
        self.entries
            .iter()
            .rev()
            .find(|(y, _)| *y == x)
            .map(|(_, ty)| ty)
    }

    pub fn entries(&self) -> &[(Var, SimpleType)] {
        &self.entries
    }
}

/// A simple type extended with numbered metavariables, used during
/// inference and to report principal schematic types.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MetaType {
    Base,
    Meta(u32),
    Arrow(Box<MetaType>, Box<MetaType>),
}

impl MetaType {
    pub fn arrow(dom: MetaType, cod: MetaType) -> Self {
        MetaType::Arrow(Box::new(dom), Box::new(cod))
    }

    pub fn is_ground(&self) -> bool {
        match self {
            MetaType::Base => true,
            MetaType::Meta(_) => false,
            MetaType::Arrow(d, c) => d.is_ground() && c.is_ground(),
        }
    }

    /// Instantiates every metavariable at `Base`.
    pub fn default_to_base(&self) -> SimpleType {
        match self {
            MetaType::Base | MetaType::Meta(_) => SimpleType::Base,
            MetaType::Arrow(d, c) => {
                SimpleType::arrow(d.default_to_base(), c.default_to_base())
            }
        }
    }

    pub fn to_simple(&self) -> Option<SimpleType> {
        match self {
            MetaType::Base => Some(SimpleType::Base),
            MetaType::Meta(_) => None,
            MetaType::Arrow(d, c) => Some(SimpleType::arrow(d.to_simple()?, c.to_simple()?)),
        }
    }
}

impl From<&SimpleType> for MetaType {
    fn from(t: &SimpleType) -> Self {
        match t {
            SimpleType::Base => MetaType::Base,
            SimpleType::Arrow(d, c) => MetaType::arrow(d.as_ref().into(), c.as_ref().into()),
        }
    }
}

impl fmt::Display for MetaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetaType::Base => write!(f, "nat"),
            MetaType::Meta(i) => write!(f, "?{i}"),
            MetaType::Arrow(dom, cod) => {
                if matches!(dom.as_ref(), MetaType::Arrow(_, _)) {
                    write!(f, "({dom}) -> {cod}")
                } else {
                    write!(f, "{dom} -> {cod}")
                }
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum TypeError {
    #[error("unbound variable {0}")]
    UnboundVariable(Var),
    #[error("cannot unify {0} with {1}")]
    UnificationClash(MetaType, MetaType),
    #[error("occurs check: ?{0} occurs in {1}")]
    OccursCheck(u32, MetaType),
}

/// Assigns every constant a type scheme; schematic variables are
/// instantiated with fresh metavariables per occurrence.
#[derive(Clone, Copy)]
pub struct Signature<C> {
    scheme: fn(&C, &mut dyn FnMut() -> u32) -> MetaType,
}

impl<C: Alphabet> Signature<C> {
    pub fn instantiate(&self, c: &C, fresh: &mut dyn FnMut() -> u32) -> MetaType {
        (self.scheme)(c, fresh)
    }
}

/// 0 : nat; S : nat ⇒ nat; Rec : α ⇒ (nat ⇒ α ⇒ α) ⇒ nat ⇒ α.
pub fn system_t_signature() -> Signature<TConst> {
    fn scheme(c: &TConst, fresh: &mut dyn FnMut() -> u32) -> MetaType {
        match c {
            TConst::Zero => MetaType::Base,
            TConst::Succ => MetaType::arrow(MetaType::Base, MetaType::Base),
            TConst::Rec => {
                let alpha = MetaType::Meta(fresh());
                MetaType::arrow(
                    alpha.clone(),
                    MetaType::arrow(
                        MetaType::arrow(
                            MetaType::Base,
                            MetaType::arrow(alpha.clone(), alpha.clone()),
                        ),
                        MetaType::arrow(MetaType::Base, alpha),
                    ),
                )
            }
        }
    }
    Signature { scheme }
}

/// The empty alphabet has no constants to assign.
pub fn empty_signature() -> Signature<Empty> {
    fn scheme(c: &Empty, _: &mut dyn FnMut() -> u32) -> MetaType {
        match *c {}
    }
    Signature { scheme }
}

struct Unifier {
    next: u32,
    solution: HashMap<u32, MetaType>,
}

impl Unifier {
    fn new() -> Self {
        Unifier {
            next: 0,
            solution: HashMap::new(),
        }
    }

    fn fresh(&mut self) -> u32 {
        let i = self.next;
        self.next += 1;
        i
    }

    fn zonk(&self, t: &MetaType) -> MetaType {
        match t {
            MetaType::Base => MetaType::Base,
            MetaType::Meta(i) => match self.solution.get(i) {
                Some(s) => self.zonk(&s.clone()),
                None => MetaType::Meta(*i),
            },
            MetaType::Arrow(d, c) => MetaType::arrow(self.zonk(d), self.zonk(c)),
        }
    }

    fn occurs(&self, i: u32, t: &MetaType) -> bool {
        match t {
            MetaType::Base => false,
            MetaType::Meta(j) => *j == i,
            MetaType::Arrow(d, c) => self.occurs(i, d) || self.occurs(i, c),
        }
    }

    fn unify(&mut self, a: &MetaType, b: &MetaType) -> Result<(), TypeError> {
        let a = self.zonk(a);
        let b = self.zonk(b);
        match (&a, &b) {
            (MetaType::Base, MetaType::Base) => Ok(()),
            (MetaType::Meta(i), MetaType::Meta(j)) if i == j => Ok(()),
            (MetaType::Meta(i), _) => {
                if self.occurs(*i, &b) {
                    return Err(TypeError::OccursCheck(*i, b));
                }
                self.solution.insert(*i, b);
                Ok(())
            }
            (_, MetaType::Meta(i)) => {
                if self.occurs(*i, &a) {
                    return Err(TypeError::OccursCheck(*i, a));
                }
                self.solution.insert(*i, a);
                Ok(())
            }
            (MetaType::Arrow(d1, c1), MetaType::Arrow(d2, c2)) => {
                self.unify(d1, d2)?;
                self.unify(c1, c2)
            }
            _ => Err(TypeError::UnificationClash(a, b)),
        }
    }
}

fn infer_node<C: Alphabet>(
    sig: &Signature<C>,
    uni: &mut Unifier,
    scope: &mut Vec<(Var, MetaType)>,
    m: &Term<C>,
    path: &mut Vec<Move>,
    nodes: Option<&mut HashMap<Vec<Move>, MetaType>>,
) -> Result<MetaType, TypeError> {
    let mut nodes = nodes;
    let ty = match m {
        Term::Const(c) => sig.instantiate(c, &mut || uni.fresh()),
        Term::Var(x) => scope
            .iter()
            .rev()
            .find(|(y, _)| y == x)
            .map(|(_, t)| t.clone())
            .ok_or(TypeError::UnboundVariable(*x))?,
        Term::Abs(x, body) => {
            let dom = MetaType::Meta(uni.fresh());
            scope.push((*x, dom.clone()));
            path.push(Move::IntoBody);
            let cod = infer_node(sig, uni, scope, body, path, nodes.as_deref_mut())?;
            path.pop();
            scope.pop();
            MetaType::arrow(dom, cod)
        }
        Term::App(fun, arg) => {
            path.push(Move::IntoFun);
            let fun_ty = infer_node(sig, uni, scope, fun, path, nodes.as_deref_mut())?;
            path.pop();
            path.push(Move::IntoArg);
            let arg_ty = infer_node(sig, uni, scope, arg, path, nodes.as_deref_mut())?;
            path.pop();
            let res = MetaType::Meta(uni.fresh());
            uni.unify(&fun_ty, &MetaType::arrow(arg_ty, res.clone()))?;
            res
        }
    };
    if let Some(nodes) = nodes.as_deref_mut() {
        nodes.insert(path.clone(), ty.clone());
    }
    Ok(ty)
}

/// Renumbers metavariables in left-to-right first-occurrence order.
fn canonicalize(t: &MetaType, map: &mut HashMap<u32, u32>) -> MetaType {
    match t {
        MetaType::Base => MetaType::Base,
        MetaType::Meta(i) => {
            let n = map.len() as u32;
            MetaType::Meta(*map.entry(*i).or_insert(n))
        }
        MetaType::Arrow(d, c) => {
            MetaType::arrow(canonicalize(d, map), canonicalize(c, map))
        }
    }
}

/// Infers the principal type of `m` under `ctx`. Unsolved metavariables are
/// reported schematically, renumbered from ?0 in order of appearance.
pub fn infer<C: Alphabet>(
    sig: &Signature<C>,
    ctx: &Context,
    m: &Term<C>,
) -> Result<MetaType, TypeError> {
    let mut uni = Unifier::new();
    let mut scope: Vec<(Var, MetaType)> = ctx
        .entries()
        .iter()
        .map(|(x, t)| (*x, MetaType::from(t)))
        .collect();
    let ty = infer_node(sig, &mut uni, &mut scope, m, &mut Vec::new(), None)?;
    let zonked = uni.zonk(&ty);
    Ok(canonicalize(&zonked, &mut HashMap::new()))
}

/// Decides whether `Γ ⊢ M : A` is derivable: infers and unifies the result
/// with `A`. A final clash or occurs failure is a plain `false`; errors
/// raised during inference itself are reported as errors.
pub fn check<C: Alphabet>(
    sig: &Signature<C>,
    ctx: &Context,
    m: &Term<C>,
    a: &SimpleType,
) -> Result<bool, TypeError> {
    let mut uni = Unifier::new();
    let mut scope: Vec<(Var, MetaType)> = ctx
        .entries()
        .iter()
        .map(|(x, t)| (*x, MetaType::from(t)))
        .collect();
    let ty = infer_node(sig, &mut uni, &mut scope, m, &mut Vec::new(), None)?;
    Ok(uni.unify(&ty, &a.into()).is_ok())
}

/// Infers a fully ground derivation: the type of every subterm, addressed by
/// its path from the root, with unsolved metavariables defaulted to `Base`.
pub fn ground_derivation<C: Alphabet>(
    sig: &Signature<C>,
    ctx: &Context,
    m: &Term<C>,
) -> Result<(SimpleType, HashMap<Vec<Move>, SimpleType>), TypeError> {
    let mut uni = Unifier::new();
    let mut scope: Vec<(Var, MetaType)> = ctx
        .entries()
        .iter()
        .map(|(x, t)| (*x, MetaType::from(t)))
        .collect();
    let mut nodes = HashMap::new();
    let ty = infer_node(sig, &mut uni, &mut scope, m, &mut Vec::new(), Some(&mut nodes))?;
    let root = uni.zonk(&ty).default_to_base();
    let nodes = nodes
        .into_iter()
        .map(|(p, t)| (p, uni.zonk(&t).default_to_base()))
        .collect();
    Ok((root, nodes))
}

/// Checks that a ground type is an instance of a constant's scheme, binding
/// the scheme's metavariables consistently.
pub fn scheme_admits<C: Alphabet>(sig: &Signature<C>, c: &C, ty: &SimpleType) -> bool {
    let mut counter = 0u32;
    let pattern = sig.instantiate(c, &mut || {
        let i = counter;
        counter += 1;
        i
    });
    fn matches(pat: &MetaType, ty: &SimpleType, binding: &mut HashMap<u32, SimpleType>) -> bool {
        match (pat, ty) {
            (MetaType::Base, SimpleType::Base) => true,
            (MetaType::Meta(i), _) => match binding.get(i) {
                Some(bound) => bound == ty,
                None => {
                    binding.insert(*i, ty.clone());
                    true
                }
            },
            (MetaType::Arrow(pd, pc), SimpleType::Arrow(td, tc)) => {
                matches(pd, td, binding) && matches(pc, tc, binding)
            }
            _ => false,
        }
    }
    matches(&pattern, ty, &mut HashMap::new())
}

/// Replays a ground derivation rule by rule, independently of the unifier:
/// every node's recorded type must be justified locally by the typing rule
/// for its constructor.
pub fn replay_derivation<C: Alphabet>(
    sig: &Signature<C>,
    ctx: &Context,
    m: &Term<C>,
    nodes: &HashMap<Vec<Move>, SimpleType>,
) -> bool {
    fn go<C: Alphabet>(
        sig: &Signature<C>,
        scope: &mut Vec<(Var, SimpleType)>,
        m: &Term<C>,
        path: &mut Vec<Move>,
        nodes: &HashMap<Vec<Move>, SimpleType>,
    ) -> bool {
        let Some(here) = nodes.get(path) else {
            return false;
        };
        match m {
            Term::Const(c) => scheme_admits(sig, c, here),
            Term::Var(x) => scope
                .iter()
                .rev()
                .find(|(y, _)| y == x)
                .is_some_and(|(_, t)| t == here),
            Term::Abs(x, body) => {
                let SimpleType::Arrow(dom, cod) = here else {
                    return false;
                };
                path.push(Move::IntoBody);
                let body_ty = nodes.get(path);
                let ok = body_ty == Some(cod.as_ref()) && {
                    scope.push((*x, dom.as_ref().clone()));
                    let ok = go(sig, scope, body, path, nodes);
                    scope.pop();
                    ok
                };
                path.pop();
                ok
            }
            Term::App(fun, arg) => {
                path.push(Move::IntoFun);
                let fun_ty = nodes.get(path).cloned();
                let fun_ok = go(sig, scope, fun, path, nodes);
                path.pop();
                path.push(Move::IntoArg);
                let arg_ty = nodes.get(path).cloned();
                let arg_ok = go(sig, scope, arg, path, nodes);
                path.pop();
                let (Some(fun_ty), Some(arg_ty)) = (fun_ty, arg_ty) else {
                    return false;
                };
                fun_ok
                    && arg_ok
                    && fun_ty == SimpleType::arrow(arg_ty, here.clone())
            }
        }
    }
    let mut scope: Vec<(Var, SimpleType)> = ctx.entries().to_vec();
    go(sig, &mut scope, m, &mut Vec::new(), nodes)
}

//! First-order lambda terms over a pluggable constant alphabet.
//!
//! Variables are natural-number-indexed names; syntactic equality does not
//! identify alpha-convertible terms.

use std::fmt;
use std::hash::Hash;

/// A named variable, identified by its natural-number index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(pub u32);

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// A constant alphabet: a countable set of symbols with decidable equality
/// and a printable name. The whole kernel is generic over this.
pub trait Alphabet:
    Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// All symbols, in a fixed order, for corpus enumeration. Must be finite.
    fn enumerate() -> Vec<Self>;

    /// Resolve a concrete-syntax token to a symbol.
    fn from_token(tok: &str) -> Option<Self>;

    /// The designated successor symbol, if this alphabet has one.
    fn succ_const() -> Option<Self> {
        None
    }
}

/// The empty alphabet: pure lambda terms, no constants.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Empty {}

impl fmt::Display for Empty {
    fn fmt(&self, _: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {}
    }
}

impl Alphabet for Empty {
    fn enumerate() -> Vec<Self> {
        Vec::new()
    }

    fn from_token(_: &str) -> Option<Self> {
        None
    }
}

/// The System T alphabet: zero, successor and the primitive recursor.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TConst {
    Zero,
    Succ,
    Rec,
}

impl fmt::Display for TConst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TConst::Zero => write!(f, "0"),
            TConst::Succ => write!(f, "S"),
            TConst::Rec => write!(f, "Rec"),
        }
    }
}

impl Alphabet for TConst {
    fn enumerate() -> Vec<Self> {
        vec![TConst::Zero, TConst::Succ, TConst::Rec]
    }

    fn from_token(tok: &str) -> Option<Self> {
        match tok {
            "0" => Some(TConst::Zero),
            "S" => Some(TConst::Succ),
            "Rec" => Some(TConst::Rec),
            _ => None,
        }
    }

    fn succ_const() -> Option<Self> {
        Some(TConst::Succ)
    }
}

/// A lambda term with constants.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Term<C> {
    Const(C),
    Var(Var),
    Abs(Var, Box<Term<C>>),
    App(Box<Term<C>>, Box<Term<C>>),
}

impl<C: Alphabet> Term<C> {
    pub fn var(i: u32) -> Self {
        Term::Var(Var(i))
    }

    pub fn abs(x: Var, body: Term<C>) -> Self {
        Term::Abs(x, Box::new(body))
    }

    pub fn app(fun: Term<C>, arg: Term<C>) -> Self {
        Term::App(Box::new(fun), Box::new(arg))
    }

    /// Left-associated application of `head` to `args`.
    pub fn apps(head: Term<C>, args: impl IntoIterator<Item = Term<C>>) -> Self {
        args.into_iter().fold(head, Term::app)
    }

    /// Free variables, each once, in left-to-right first-free-occurrence order.
    pub fn free_vars(&self) -> Vec<Var> {
        fn go<C>(t: &Term<C>, bound: &mut Vec<Var>, acc: &mut Vec<Var>) {
            match t {
                Term::Const(_) => {}
                Term::Var(x) => {
                    if !bound.contains(x) && !acc.contains(x) {
                        acc.push(*x);
                    }
                }
                Term::Abs(x, body) => {
                    bound.push(*x);
                    go(body, bound, acc);
                    bound.pop();
                }
                Term::App(fun, arg) => {
                    go(fun, bound, acc);
                    go(arg, bound, acc);
                }
            }
        }
        let mut acc = Vec::new();
        go(self, &mut Vec::new(), &mut acc);
        acc
    }

    /// True iff `x` has a free occurrence in the term.
    pub fn occurs_free(&self, x: Var) -> bool {
        match self {
            Term::Const(_) => false,
            Term::Var(y) => *y == x,
            Term::Abs(y, body) => *y != x && body.occurs_free(x),
            Term::App(fun, arg) => fun.occurs_free(x) || arg.occurs_free(x),
        }
    }

    /// True iff `x` has no free occurrence (`x # M`).
    pub fn is_fresh(&self, x: Var) -> bool {
        !self.occurs_free(x)
    }

    /// Decompose `M N1 ... Nn` into its head and argument vector.
    /// The head is never an application; `args` may be empty.
    pub fn spine(&self) -> (&Term<C>, Vec<&Term<C>>) {
        let mut head = self;
        let mut args = Vec::new();
        while let Term::App(fun, arg) = head {
            args.push(arg.as_ref());
            head = fun;
        }
        args.reverse();
        (head, args)
    }

    /// Number of constructors in the term.
    pub fn size(&self) -> usize {
        match self {
            Term::Const(_) | Term::Var(_) => 1,
            Term::Abs(_, body) => 1 + body.size(),
            Term::App(fun, arg) => 1 + fun.size() + arg.size(),
        }
    }

    pub fn is_closed(&self) -> bool {
        fn go<C>(t: &Term<C>, bound: &mut Vec<Var>) -> bool {
            match t {
                Term::Const(_) => true,
                Term::Var(x) => bound.contains(x),
                Term::Abs(x, body) => {
                    bound.push(*x);
                    let ok = go(body, bound);
                    bound.pop();
                    ok
                }
                Term::App(fun, arg) => go(fun, bound) && go(arg, bound),
            }
        }
        go(self, &mut Vec::new())
    }
}

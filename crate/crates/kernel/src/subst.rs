//! Simultaneous substitutions as total functions on variables, applied
//! with unconditional canonical renaming of every binder.
//!
//! A substitution is a total map from variables to terms that is identity
//! almost everywhere; we store only the finite set of overrides. The action
//! on a term renames every binder to a fresh name chosen by `choose_fresh`,
//! so capture never occurs and abstractions get a homogeneous treatment.

use std::collections::BTreeMap;

use crate::syntax::{Alphabet, Term, Var};

/// An identity-almost-everywhere map from variables to terms.
#[derive(Clone, Debug, Default)]
pub struct Subst<C> {
    overrides: BTreeMap<Var, Term<C>>,
}

impl<C: Alphabet> Subst<C> {
    /// The identity substitution ι.
    pub fn identity() -> Self {
        Subst {
            overrides: BTreeMap::new(),
        }
    }

    /// `σ ≺+ (x, M)`: maps `x` to `M` and any other variable as `σ` does.
    /// Value semantics; `self` is unchanged.
    pub fn update(&self, x: Var, m: Term<C>) -> Self {
        let mut overrides = self.overrides.clone();
        overrides.insert(x, m);
        Subst { overrides }
    }

    /// `ι ≺+ (x, M)`.
    pub fn single(x: Var, m: Term<C>) -> Self {
        Self::identity().update(x, m)
    }

    /// The image of `x`: the override if present, else `x` itself.
    pub fn apply_var(&self, x: Var) -> Term<C> {
        self.overrides
            .get(&x)
            .cloned()
            .unwrap_or(Term::Var(x))
    }

    /// The explicitly overridden variables (images may still be identity).
    pub fn override_domain(&self) -> impl Iterator<Item = Var> + '_ {
        self.overrides.keys().copied()
    }
}

/// χ′: the variable with the smallest index not occurring in `xs`.
pub fn fresh_not_in(xs: &[Var]) -> Var {
    let mut i = 0u32;
    while xs.contains(&Var(i)) {
        i += 1;
    }
    Var(i)
}

/// χ: the first name fresh in the restriction (σ, M), i.e. not free in any
/// image σy for y free in M.
pub fn choose_fresh<C: Alphabet>(sigma: &Subst<C>, m: &Term<C>) -> Var {
    let mut avoid = Vec::new();
    for y in m.free_vars() {
        avoid.extend(sigma.apply_var(y).free_vars());
    }
    fresh_not_in(&avoid)
}

/// Freshness on restrictions: `y # (σ, M)` iff `y` is fresh in every image
/// of a variable free in `M`.
pub fn restriction_fresh<C: Alphabet>(y: Var, sigma: &Subst<C>, m: &Term<C>) -> bool {
    m.free_vars()
        .into_iter()
        .all(|x| sigma.apply_var(x).is_fresh(y))
}

impl<C: Alphabet> Term<C> {
    /// The action `M • σ`. Every binder is renamed to the χ-chosen name.
    pub fn subst(&self, sigma: &Subst<C>) -> Term<C> {
        match self {
            Term::Const(c) => Term::Const(c.clone()),
            Term::Var(x) => sigma.apply_var(*x),
            Term::App(fun, arg) => Term::app(fun.subst(sigma), arg.subst(sigma)),
            Term::Abs(x, body) => {
                let y = choose_fresh(sigma, self);
                Term::abs(y, body.subst(&sigma.update(*x, Term::Var(y))))
            }
        }
    }

    /// Unary substitution `M [ N / x ] = M • ι ≺+ (x, N)`.
    pub fn subst1(&self, n: &Term<C>, x: Var) -> Term<C> {
        self.subst(&Subst::single(x, n.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{Empty, TConst};

    fn v(i: u32) -> Term<Empty> {
        Term::var(i)
    }

    #[test]
    fn identity_maps_vars_to_themselves() {
        let iota: Subst<Empty> = Subst::identity();
        assert_eq!(iota.apply_var(Var(0)), v(0));
        assert_eq!(iota.apply_var(Var(7)), v(7));
    }

    #[test]
    fn identity_orders_bound_variables() {
        // λv1 v1 • ι = λv0 v0
        let t = Term::<Empty>::abs(Var(1), v(1));
        assert_eq!(t.subst(&Subst::identity()), Term::abs(Var(0), v(0)));
    }

    #[test]
    fn update_and_apply_var() {
        let n = Term::app(v(0), v(1));
        let s = Subst::single(Var(0), n.clone());
        assert_eq!(s.apply_var(Var(0)), n);
        assert_eq!(s.apply_var(Var(1)), v(1));
        // outermost update wins
        let s2 = Subst::single(Var(0), v(5)).update(Var(0), v(6));
        assert_eq!(s2.apply_var(Var(0)), v(6));
    }

    #[test]
    fn apply_var_with_constants() {
        let s: Subst<TConst> = Subst::single(Var(1), Term::Const(TConst::Zero));
        assert_eq!(s.apply_var(Var(1)), Term::Const(TConst::Zero));
        assert_eq!(s.apply_var(Var(2)), Term::var(2));
    }

    #[test]
    fn fresh_not_in_smallest() {
        assert_eq!(fresh_not_in(&[]), Var(0));
        assert_eq!(fresh_not_in(&[Var(0), Var(1)]), Var(2));
        assert_eq!(fresh_not_in(&[Var(1)]), Var(0));
    }

    #[test]
    fn choose_fresh_examples() {
        let iota: Subst<Empty> = Subst::identity();
        assert_eq!(choose_fresh(&iota, &Term::abs(Var(1), v(1))), Var(0));
        assert_eq!(choose_fresh(&iota, &v(0)), Var(1));
        // worked example: σ = [v0/v1], M = λv3 λv2 λv0 (v0 v1 v2 v3)
        let sigma = Subst::single(Var(1), v(0));
        let body = Term::apps(v(0), [v(1), v(2), v(3)]);
        let m = Term::abs(Var(3), Term::abs(Var(2), Term::abs(Var(0), body)));
        assert_eq!(choose_fresh(&sigma, &m), Var(1));
    }

    #[test]
    fn restriction_fresh_examples() {
        let iota: Subst<Empty> = Subst::identity();
        assert!(restriction_fresh(Var(0), &iota, &Term::abs(Var(1), v(1))));
        assert!(!restriction_fresh(Var(0), &iota, &v(0)));
    }

    #[test]
    fn chi_is_sufficiently_fresh() {
        let sigma = Subst::single(Var(1), Term::app(v(0), v(2)));
        let m = Term::abs(Var(0), Term::app(v(0), Term::app(v(1), v(3))));
        let y = choose_fresh(&sigma, &m);
        assert!(restriction_fresh(y, &sigma, &m));
    }

    #[test]
    fn subst_worked_example() {
        // (λv3 λv2 λv0 (v0 v1 v2 v3)) [v0 / v1] = λv1 λv2 λv3 (v3 v0 v2 v1)
        let body = Term::apps(v(0), [v(1), v(2), v(3)]);
        let m = Term::abs(Var(3), Term::abs(Var(2), Term::abs(Var(0), body)));
        let expected_body = Term::apps(v(3), [v(0), v(2), v(1)]);
        let expected = Term::abs(
            Var(1),
            Term::abs(Var(2), Term::abs(Var(3), expected_body)),
        );
        assert_eq!(m.subst1(&v(0), Var(1)), expected);
        assert_eq!(m.subst(&Subst::single(Var(1), v(0))), expected);
    }

    #[test]
    fn subst_pointwise_on_application() {
        let m: Term<TConst> = Term::app(Term::var(0), Term::var(1));
        let s = Subst::single(Var(0), Term::Const(TConst::Zero));
        assert_eq!(
            m.subst(&s),
            Term::app(Term::Const(TConst::Zero), Term::var(1))
        );
    }

    #[test]
    fn subst1_examples() {
        let zero: Term<TConst> = Term::Const(TConst::Zero);
        assert_eq!(Term::var(0).subst1(&zero, Var(0)), zero);
        assert_eq!(Term::var(1).subst1(&zero, Var(0)), Term::var(1));
    }

    #[test]
    fn identity_override_is_observationally_identity() {
        let explicit: Subst<Empty> = Subst::single(Var(3), v(3));
        let iota: Subst<Empty> = Subst::identity();
        for i in 0..8 {
            assert_eq!(explicit.apply_var(Var(i)), iota.apply_var(Var(i)));
        }
        let m = Term::abs(Var(1), Term::app(v(1), v(3)));
        assert_eq!(m.subst(&explicit), m.subst(&iota));
    }

    #[test]
    fn free_vars_of_subst_are_union_of_image_free_vars() {
        let sigma = Subst::single(Var(0), Term::app(v(4), v(5))).update(Var(1), v(4));
        let m = Term::app(Term::abs(Var(2), Term::app(v(2), v(0))), v(1));
        let mut expected: Vec<Var> = Vec::new();
        for x in m.free_vars() {
            for y in sigma.apply_var(x).free_vars() {
                if !expected.contains(&y) {
                    expected.push(y);
                }
            }
        }
        let mut got = m.subst(&sigma).free_vars();
        expected.sort();
        got.sort();
        assert_eq!(got, expected);
    }
}

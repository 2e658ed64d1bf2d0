//! Decision procedure for the symmetric alpha-conversion relation.

use crate::subst::fresh_not_in;
use crate::syntax::{Alphabet, Term};

/// Decides `M ~α N`. Constants and variables must be equal, applications are
/// compared pointwise, and two abstractions are compared by renaming both
/// bound names to a common fresh one and recursing.
pub fn alpha_eq<C: Alphabet>(m: &Term<C>, n: &Term<C>) -> bool {
    match (m, n) {
        (Term::Const(a), Term::Const(b)) => a == b,
        (Term::Var(x), Term::Var(y)) => x == y,
        (Term::App(f, a), Term::App(g, b)) => alpha_eq(f, g) && alpha_eq(a, b),
        (Term::Abs(x, body), Term::Abs(x2, body2)) => {
            let mut avoid = m.free_vars();
            avoid.extend(n.free_vars());
            let y = fresh_not_in(&avoid);
            let vy = Term::Var(y);
            alpha_eq(&body.subst1(&vy, *x), &body2.subst1(&vy, *x2))
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subst::{choose_fresh, Subst};
    use crate::syntax::{Empty, Var};

    fn v(i: u32) -> Term<Empty> {
        Term::var(i)
    }

    #[test]
    fn renamed_identity_functions_are_equal() {
        assert!(alpha_eq(&Term::abs(Var(0), v(0)), &Term::abs(Var(1), v(1))));
    }

    #[test]
    fn free_versus_bound_differ() {
        assert!(!alpha_eq(&Term::abs(Var(0), v(1)), &Term::abs(Var(1), v(1))));
    }

    #[test]
    fn mixed_constructors_differ() {
        assert!(!alpha_eq(&v(0), &Term::abs(Var(0), v(0))));
        assert!(!alpha_eq(&Term::app(v(0), v(1)), &v(0)));
    }

    #[test]
    fn term_equals_its_identity_action() {
        // identity action yields alpha-variants on a few hand-picked terms
        let terms = [
            v(0),
            Term::abs(Var(1), v(1)),
            Term::abs(Var(3), Term::abs(Var(2), Term::app(v(2), v(5)))),
            Term::app(Term::abs(Var(0), Term::app(v(0), v(0))), v(1)),
        ];
        for t in &terms {
            assert!(alpha_eq(t, &t.subst(&Subst::identity())), "failed for {t:?}");
        }
    }

    #[test]
    fn alpha_equal_terms_have_equal_free_var_sets() {
        let m = Term::abs(Var(0), Term::app(v(0), v(2)));
        let n = Term::abs(Var(1), Term::app(v(1), v(2)));
        assert!(alpha_eq(&m, &n));
        let mut a = m.free_vars();
        let mut b = n.free_vars();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn substitution_composition_corollary() {
        // composition-law instance: with y = χ(σ, λx M),
        // (M • σ ≺+ (x, v y)) [N / y] ~α M • σ ≺+ (x, N)
        let m = Term::abs(Var(2), Term::apps(v(2), [v(0), v(1)]));
        let n = Term::app(v(0), v(3));
        let sigma = Subst::single(Var(0), v(4));
        let x = Var(1);
        let y = choose_fresh(&sigma, &Term::abs(x, m.clone()));
        let lhs = m.subst(&sigma.update(x, Term::Var(y))).subst1(&n, y);
        let rhs = m.subst(&sigma.update(x, n.clone()));
        assert!(alpha_eq(&lhs, &rhs));
    }
}

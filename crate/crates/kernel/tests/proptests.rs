//! Randomized structural properties complementing the exhaustive suite:
//! larger, deeper terms than the enumerated corpus ever reaches.

use proptest::prelude::*;

use lamt::alpha::alpha_eq;
use lamt::parse::parse_term;
use lamt::print::print_term;
use lamt::subst::Subst;
use lamt::syntax::{TConst, Term, Var};

fn arb_term() -> impl Strategy<Value = Term<TConst>> {
    let leaf = prop_oneof![
        (0u32..6).prop_map(|i| Term::<TConst>::var(i)),
        Just(Term::Const(TConst::Zero)),
        Just(Term::Const(TConst::Succ)),
        Just(Term::Const(TConst::Rec)),
    ];
    leaf.prop_recursive(8, 64, 4, |inner| {
        prop_oneof![
            ((0u32..6), inner.clone()).prop_map(|(x, b)| Term::abs(Var(x), b)),
            (inner.clone(), inner).prop_map(|(f, a)| Term::app(f, a)),
        ]
    })
}

proptest! {
    #[test]
    fn print_parse_round_trip(m in arb_term()) {
        let printed = print_term(&m);
        prop_assert_eq!(parse_term::<TConst>(&printed).unwrap(), m);
    }

    #[test]
    fn identity_action_is_alpha_identity(m in arb_term()) {
        prop_assert!(alpha_eq(&m, &m.subst(&Subst::identity())));
    }

    #[test]
    fn identity_action_is_idempotent(m in arb_term()) {
        // The identity action canonicalizes binder names, so applying it
        // twice changes nothing after the first pass.
        let once = m.subst(&Subst::identity());
        prop_assert_eq!(once.subst(&Subst::identity()), once);
    }

    #[test]
    fn subst_preserves_untouched_free_vars(m in arb_term()) {
        // Substituting for v9 (never generated) leaves the term unchanged
        // up to alpha.
        let s = Subst::single(Var(9), Term::Const(TConst::Zero));
        prop_assert!(alpha_eq(&m.subst(&s), &m));
    }

    #[test]
    fn alpha_eq_is_reflexive_and_respects_renaming(m in arb_term()) {
        prop_assert!(alpha_eq(&m, &m));
        let renamed = m.subst(&Subst::identity()).subst(&Subst::identity());
        prop_assert!(alpha_eq(&m, &renamed));
    }
}

//! Minimal-parentheses concrete syntax for terms.

use crate::syntax::{Alphabet, Term};

/// Prints a term so that `parse_term(print_term(M)) = M` syntactically.
/// Application is left-associative and a lambda body extends maximally to
/// the right, so parentheses appear only around abstractions in function
/// or argument position and applications in argument position.
pub fn print_term<C: Alphabet>(m: &Term<C>) -> String {
    let mut out = String::new();
    write_term(m, &mut out);
    out
}

fn write_term<C: Alphabet>(m: &Term<C>, out: &mut String) {
    match m {
        Term::Const(c) => out.push_str(&c.to_string()),
        Term::Var(x) => out.push_str(&x.to_string()),
        Term::Abs(x, body) => {
            out.push('\\');
            out.push_str(&x.to_string());
            out.push_str(". ");
            write_term(body, out);
        }
        Term::App(fun, arg) => {
            if matches!(fun.as_ref(), Term::Abs(_, _)) {
                out.push('(');
                write_term(fun, out);
                out.push(')');
            } else {
                write_term(fun, out);
            }
            out.push(' ');
            if matches!(arg.as_ref(), Term::Abs(_, _) | Term::App(_, _)) {
                out.push('(');
                write_term(arg, out);
                out.push(')');
            } else {
                write_term(arg, out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{Empty, TConst, Var};

    fn v(i: u32) -> Term<Empty> {
        Term::var(i)
    }

    #[test]
    fn worked_example_result() {
        let body = Term::apps(v(3), [v(0), v(2), v(1)]);
        let t = Term::abs(Var(1), Term::abs(Var(2), Term::abs(Var(3), body)));
        assert_eq!(print_term(&t), "\\v1. \\v2. \\v3. v3 v0 v2 v1");
    }

    #[test]
    fn numeral_two() {
        let two: Term<TConst> = Term::app(
            Term::Const(TConst::Succ),
            Term::app(Term::Const(TConst::Succ), Term::Const(TConst::Zero)),
        );
        assert_eq!(print_term(&two), "S (S 0)");
    }

    #[test]
    fn abstractions_parenthesized_in_app_positions() {
        let id = Term::abs(Var(0), v(0));
        assert_eq!(print_term(&Term::app(id.clone(), v(1))), "(\\v0. v0) v1");
        assert_eq!(print_term(&Term::app(v(1), id)), "v1 (\\v0. v0)");
    }

    #[test]
    fn left_associative_apps_unparenthesized() {
        let t = Term::apps(v(0), [v(1), v(2)]);
        assert_eq!(print_term(&t), "v0 v1 v2");
    }
}

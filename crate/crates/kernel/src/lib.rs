//! An executable kernel for the pure lambda calculus and Gödel's System T:
//! simultaneous capture-avoiding substitution, decidable alpha-equivalence,
//! rule-set-parameterized reduction, type checking and inference, a
//! strong-normalization explorer, and an exhaustive property harness.

pub mod alpha;
pub mod harness;
pub mod normalization;
pub mod parse;
pub mod print;
pub mod reduction;
pub mod subst;
pub mod syntax;
pub mod typing;

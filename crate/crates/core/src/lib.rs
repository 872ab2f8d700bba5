//! Gröbner–Shirshov bases in free associative algebras, left ideals and
//! free modules over free algebras ("double-free" modules).
//!
//! The crate covers exact arithmetic on words and polynomials, deg-lex
//! orders, normal-form rewriting, composition enumeration and triviality
//! checks, Shirshov completion, linear-basis enumeration with an
//! independent linear-algebra oracle, and generators for highest-weight
//! and Verma module presentations.

pub mod alphabet;
pub mod composition;
pub mod corpus;
pub mod engine;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod lie;
pub mod order;
pub mod poly;
pub mod presentation;
pub mod rewrite;
pub mod sample;
pub mod scalar;
pub mod word;

pub use alphabet::{Alphabet, Role, Signature};
pub use composition::{CompositionKind, CompositionReport, Participant, Verdict};
pub use engine::{
    complete_algebra, complete_module, is_gsb, is_minimal_gsb_left_ideal, lift_check,
    shirshov_complete, CheckMode, Completion, CompletionResult, CompletionStatus, GsbReport,
    LiftReport,
};
pub use enumerate::{
    cross_check, dimension_oracle, red_words, Basis, BasisReport, CrossCheck, DEFAULT_BUDGET,
};
pub use error::{Error, Result};
pub use format::{emit_presentation, parse_expr, parse_presentation, Expr};
pub use lie::{lie_expand, LieExpr};
pub use order::{deglex_compare, module_compare, validate_order, OrderHandle};
pub use poly::{act, poly_arith, ArithOp, LinComb, ModElement, Monomial, Poly};
pub use presentation::{embed_presentation, AlgebraPresentation, ModulePresentation, Presentation};
pub use rewrite::{Mode, NormalForm, Reduction, RuleRef, RuleSet, Step, Trace, DEFAULT_STEP_CAP};
pub use scalar::Scalar;
pub use word::{Gen, ModMonomial, Word};

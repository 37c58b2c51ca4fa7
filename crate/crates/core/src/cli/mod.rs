//! Text front end: expressions, tables and the verify runner.

pub mod eval;
pub mod expr;
pub mod table;
pub mod verify;

pub use eval::{eval_str, EvalContext, Value};
pub use expr::{parse, Expr};
pub use table::{build_table, emit_betti, family_label, Format, Table, TableRecord, TableRequest};
pub use verify::{run_verify, VerifyOptions, VerifyOutcome, SUITES};

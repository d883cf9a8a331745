//! Expression language shared by fixtures and the command line.

mod elab;
mod parse;

pub use elab::{elaborate, eval_str, BareEnv, Env, Value};
pub use parse::{index_of, parse, Expr, Sym, INDEX_CHARS};

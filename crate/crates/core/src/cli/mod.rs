//! Expression language, printers and the command-line front end.

pub mod command;
pub mod eval;
pub mod parse;
pub mod print;

pub use command::{run, Outcome};
pub use eval::{eval_element, eval_free};
pub use parse::{parse, Expr, Namespace};
pub use print::{element_json, print_element, print_free};

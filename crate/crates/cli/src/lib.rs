//! Text front end for `rankrev`: expressions, model files, input scripts
//! and the `rankrev` command.

pub mod commands;
pub mod error;
pub mod expr;
pub mod model;
pub mod render;
pub mod script;

pub use commands::{execute, Output, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION};
pub use error::{CliError, Diagnostic};
pub use expr::{parse_expression, Expression, Pos, Scope};
pub use model::{parse_model, ModelFile, State};
pub use script::{parse_directive, parse_script, Directive};

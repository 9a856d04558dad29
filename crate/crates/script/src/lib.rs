//! A small construction language over the projective geometry kernel.
//!
//! ```text
//! point P = (-1, 0, 1)
//! line l = join(P, Q)
//! assert outside(D3, join(D1, D2))
//! emit svg "out.svg" chart=z viewport=-6:6,-6:6 samples=200
//! print D3
//! ```
//!
//! Scripts are parsed, checked for bound names and kinds, and run
//! statement by statement.

pub mod ast;
pub mod check;
pub mod error;
pub mod interp;
pub mod parse;
pub mod report;
pub mod svg;

pub use ast::Script;
pub use error::ScriptError;
pub use interp::{run, RunOptions};
pub use parse::{parse, ParseError};
pub use report::{Report, Status};

/// Parses and checks a script.
pub fn load(text: &str) -> Result<Script, ScriptError> {
    let script = parse(text)?;
    check::check(&script)?;
    Ok(script)
}

/// Loads and runs a script, turning static errors into a report.
pub fn execute(name: &str, text: &str, opts: &RunOptions) -> Report {
    match load(text) {
        Ok(script) => run(&script, opts),
        Err(e) => Report::rejected(&e),
    }
    .finish(name)
}

//! Run reports in text and JSON form.

use std::fmt::Write as _;

use serde::Serialize;

use crate::ast::Pos;
use crate::error::ScriptError;
use crate::interp::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    #[default]
    Ok,
    AssertionFailed,
    RuntimeError,
    ParseError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::AssertionFailed => 1,
            Status::RuntimeError => 2,
            Status::ParseError => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Binding {
    pub name: String,
    pub kind: String,
    pub value: String,
    pub line: usize,
}

impl Binding {
    pub fn new(name: &str, v: &Value, pos: Pos) -> Self {
        Binding {
            name: name.into(),
            kind: v.kind().keyword().into(),
            value: v.to_string(),
            line: pos.line,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssertEntry {
    pub line: usize,
    pub text: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrintEntry {
    pub line: usize,
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Emitted {
    pub line: usize,
    pub path: String,
    pub points: usize,
    pub lines: usize,
    pub conics: usize,
    pub at_infinity: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorEntry {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl From<&ScriptError> for ErrorEntry {
    fn from(e: &ScriptError) -> Self {
        let pos = e.pos();
        ErrorEntry {
            line: pos.line,
            column: pos.column,
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub script: String,
    pub status: Status,
    pub exit_code: i32,
    pub bindings: Vec<Binding>,
    pub assertions: Vec<AssertEntry>,
    pub prints: Vec<PrintEntry>,
    pub emitted: Vec<Emitted>,
    pub errors: Vec<ErrorEntry>,
}

impl Report {
    /// Report for a script rejected before it ran.
    pub fn rejected(e: &ScriptError) -> Self {
        Report {
            status: Status::ParseError,
            errors: vec![ErrorEntry::from(e)],
            ..Report::default()
        }
    }

    /// Fills in derived fields once the run is over.
    pub fn finish(mut self, script: &str) -> Self {
        self.script = script.into();
        self.exit_code = self.status.exit_code();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for b in &self.bindings {
            writeln!(s, "{} {} = {}", b.kind, b.name, b.value).unwrap();
        }
        for a in &self.assertions {
            let verdict = if a.passed { "pass" } else { "FAIL" };
            writeln!(s, "line {}: {} ... {verdict}", a.line, a.text).unwrap();
        }
        for p in &self.prints {
            writeln!(s, "{} = {}", p.name, p.value).unwrap();
        }
        for e in &self.emitted {
            writeln!(
                s,
                "wrote {} ({} points, {} lines, {} conics)",
                e.path, e.points, e.lines, e.conics
            )
            .unwrap();
            if !e.at_infinity.is_empty() {
                writeln!(s, "  at infinity: {}", e.at_infinity.join("; ")).unwrap();
            }
        }
        for e in &self.errors {
            writeln!(s, "error: {}", e.message).unwrap();
        }
        let status = match self.status {
            Status::Ok => "ok",
            Status::AssertionFailed => "assertion failed",
            Status::RuntimeError => "runtime error",
            Status::ParseError => "parse error",
        };
        writeln!(s, "status: {status}").unwrap();
        s
    }
}

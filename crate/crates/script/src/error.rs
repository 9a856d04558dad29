use pg_core::GeomError;
use thiserror::Error;

use crate::ast::Pos;
use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScriptError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("{pos}: unbound name `{name}`")]
    Unbound { name: String, pos: Pos },
    #[error("{pos}: `{name}` is already bound at line {}", first.line)]
    Rebind { name: String, pos: Pos, first: Pos },
    #[error("{pos}: {message}")]
    Type { pos: Pos, message: String },
    #[error("{pos}: {source}")]
    Kernel { pos: Pos, source: GeomError },
    #[error("{pos}: cannot write {path}: {message}")]
    Io { pos: Pos, path: String, message: String },
    #[error("{pos}: skipped, depends on failed binding `{name}`")]
    Skipped { pos: Pos, name: String },
}

impl ScriptError {
    pub fn pos(&self) -> Pos {
        match self {
            ScriptError::Parse(e) => e.pos,
            ScriptError::Unbound { pos, .. }
            | ScriptError::Rebind { pos, .. }
            | ScriptError::Type { pos, .. }
            | ScriptError::Kernel { pos, .. }
            | ScriptError::Io { pos, .. }
            | ScriptError::Skipped { pos, .. } => *pos,
        }
    }

    /// Errors found before execution.
    pub fn is_static(&self) -> bool {
        matches!(
            self,
            ScriptError::Parse(_) | ScriptError::Unbound { .. } | ScriptError::Rebind { .. } | ScriptError::Type { .. }
        )
    }

    /// Process exit status: 3 for static errors, 2 for runtime ones.
    pub fn exit_code(&self) -> i32 {
        if self.is_static() {
            3
        } else {
            2
        }
    }
}

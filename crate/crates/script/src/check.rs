//! Static checks: single assignment, bound names, and the kinds of every
//! operation and predicate.

use std::collections::HashMap;

use crate::ast::{Expr, Kind, Literal, Pos, Script, Stmt};
use crate::error::ScriptError;

use Kind::{Conic as K, Line as L, Number as N, Point as P, Points as Ps, Projectivity as F};

/// Operations with their argument kinds and result kind.
pub const OPS: &[(&str, &[Kind], Kind)] = &[
    ("join", &[P, P], L),
    ("meet", &[L, L], P),
    ("harmonic", &[P, P, P], P),
    ("harmonic", &[L, L, L], L),
    ("projectivity3", &[P, P, P, P, P, P], F),
    ("apply", &[F, P], P),
    ("axis", &[F], L),
    ("conic5", &[P, P, P, P, P], K),
    ("tangent", &[K, P], L),
    ("second", &[K, P, L], P),
    ("pascal", &[K, P, P, P, P, P, P], L),
    ("sixth", &[P, P, P, P, P, L], P),
    ("polar", &[P, K], L),
    ("pole", &[L, K], P),
    ("trace", &[K, N], Ps),
    ("item", &[Ps, N], P),
];

/// Assertion predicates and their argument kinds.
pub const PREDICATES: &[(&str, &[Kind])] = &[
    ("collinear", &[P, P, P]),
    ("concurrent", &[L, L, L]),
    ("incident", &[P, L]),
    ("outside", &[P, L]),
    ("apart", &[P, P]),
    ("apart", &[L, L]),
    ("equal", &[P, P]),
    ("equal", &[L, L]),
    ("equal", &[F, F]),
    ("on", &[P, K]),
    ("harmonic", &[P, P, P, P]),
];

fn signature_error(name: &str, found: &[Kind], table: &[(&str, &[Kind])]) -> String {
    let shapes: Vec<String> = table
        .iter()
        .filter(|(n, _)| *n == name)
        .map(|(n, args)| {
            let a: Vec<&str> = args.iter().map(|k| k.keyword()).collect();
            format!("{n}({})", a.join(", "))
        })
        .collect();
    let f: Vec<&str> = found.iter().map(|k| k.keyword()).collect();
    if shapes.is_empty() {
        format!("unknown operation `{name}`")
    } else {
        format!("`{name}({})` does not match {}", f.join(", "), shapes.join(" or "))
    }
}

pub fn op_kind(op: &str, args: &[Kind]) -> Result<Kind, String> {
    OPS.iter()
        .find(|(n, a, _)| *n == op && *a == args)
        .map(|(_, _, k)| *k)
        .ok_or_else(|| {
            let table: Vec<(&str, &[Kind])> = OPS.iter().map(|(n, a, _)| (*n, *a)).collect();
            signature_error(op, args, &table)
        })
}

pub fn literal_kind(l: &Literal) -> Kind {
    match l {
        Literal::Point(_) => P,
        Literal::Line(_) => L,
        Literal::Number(_) => N,
    }
}

struct Scope {
    names: HashMap<String, (Kind, Pos)>,
}

impl Scope {
    fn expr(&self, e: &Expr, pos: Pos) -> Result<Kind, ScriptError> {
        match e {
            Expr::Name(n) => self
                .names
                .get(n)
                .map(|(k, _)| *k)
                .ok_or_else(|| ScriptError::Unbound { name: n.clone(), pos }),
            Expr::Literal(l) => Ok(literal_kind(l)),
            Expr::Call { op, args } => {
                let kinds = args.iter().map(|a| self.expr(a, pos)).collect::<Result<Vec<_>, _>>()?;
                op_kind(op, &kinds).map_err(|message| ScriptError::Type { pos, message })
            }
        }
    }

    fn bind(&mut self, name: &str, kind: Kind, pos: Pos) -> Result<(), ScriptError> {
        if let Some((_, first)) = self.names.get(name) {
            return Err(ScriptError::Rebind { name: name.into(), pos, first: *first });
        }
        self.names.insert(name.into(), (kind, pos));
        Ok(())
    }
}

/// Checks the whole script, stopping at the first problem.
pub fn check(script: &Script) -> Result<(), ScriptError> {
    let mut scope = Scope { names: HashMap::new() };
    for s in &script.statements {
        let pos = s.pos;
        match &s.stmt {
            Stmt::Declare { kind, name, literal } => {
                let found = literal_kind(literal);
                if found != *kind {
                    return Err(ScriptError::Type {
                        pos,
                        message: format!("`{name}` is declared {kind} but the literal is a {found}"),
                    });
                }
                scope.bind(name, *kind, pos)?;
            }
            Stmt::Construct { kind, name, expr } => {
                let found = scope.expr(expr, pos)?;
                if found != *kind {
                    return Err(ScriptError::Type {
                        pos,
                        message: format!("`{name}` is declared {kind} but `{expr}` is a {found}"),
                    });
                }
                scope.bind(name, *kind, pos)?;
            }
            Stmt::Assert { pred, args } => {
                let kinds = args.iter().map(|a| scope.expr(a, pos)).collect::<Result<Vec<_>, _>>()?;
                if !PREDICATES.iter().any(|(n, a)| n == pred && *a == kinds) {
                    let message = if PREDICATES.iter().any(|(n, _)| n == pred) {
                        signature_error(pred, &kinds, PREDICATES)
                    } else {
                        format!("unknown predicate `{pred}`")
                    };
                    return Err(ScriptError::Type { pos, message });
                }
            }
            Stmt::Print { name } => {
                scope.expr(&Expr::Name(name.clone()), pos)?;
            }
            Stmt::Emit { .. } => {}
        }
    }
    Ok(())
}

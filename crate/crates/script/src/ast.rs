//! Syntax tree of construction scripts and its canonical text form.

use std::fmt;

use pg_core::Scalar;

/// Value kinds a name can be declared with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Point,
    Line,
    Conic,
    Projectivity,
    Points,
    Number,
}

impl Kind {
    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Point => "point",
            Kind::Line => "line",
            Kind::Conic => "conic",
            Kind::Projectivity => "projectivity",
            Kind::Points => "points",
            Kind::Number => "number",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Kind> {
        Some(match s {
            "point" => Kind::Point,
            "line" => Kind::Line,
            "conic" => Kind::Conic,
            "projectivity" => Kind::Projectivity,
            "points" => Kind::Points,
            "number" => Kind::Number,
            _ => return None,
        })
    }

    pub const KEYWORDS: [&'static str; 6] = ["point", "line", "conic", "projectivity", "points", "number"];
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A coordinate literal: `(a, b, c)` for points, `[a, b, c]` for lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Literal {
    Point([Scalar; 3]),
    Line([Scalar; 3]),
    Number(Scalar),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Name(String),
    Literal(Literal),
    Call { op: String, args: Vec<Expr> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartAxis {
    X,
    Y,
    Z,
}

impl ChartAxis {
    /// Index of the dropped coordinate.
    pub fn dropped(self) -> usize {
        match self {
            ChartAxis::X => 0,
            ChartAxis::Y => 1,
            ChartAxis::Z => 2,
        }
    }

    /// Indices of the two affine coordinates, horizontal first.
    pub fn kept(self) -> (usize, usize) {
        match self {
            ChartAxis::X => (1, 2),
            ChartAxis::Y => (2, 0),
            ChartAxis::Z => (0, 1),
        }
    }
}

impl fmt::Display for ChartAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChartAxis::X => "x",
            ChartAxis::Y => "y",
            ChartAxis::Z => "z",
        })
    }
}

/// Affine chart of the plane with a viewport and a conic sample count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub axis: ChartAxis,
    pub x_min: Scalar,
    pub x_max: Scalar,
    pub y_min: Scalar,
    pub y_max: Scalar,
    pub samples: usize,
}

impl Default for Chart {
    fn default() -> Self {
        Chart {
            axis: ChartAxis::Z,
            x_min: Scalar::from(-5),
            x_max: Scalar::from(5),
            y_min: Scalar::from(-5),
            y_max: Scalar::from(5),
            samples: 200,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Declare { kind: Kind, name: String, literal: Literal },
    Construct { kind: Kind, name: String, expr: Expr },
    Assert { pred: String, args: Vec<Expr> },
    Emit { path: String, chart: Chart },
    Print { name: String },
}

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug)]
pub struct Statement {
    pub stmt: Stmt,
    pub pos: Pos,
}

#[derive(Clone, Debug, Default)]
pub struct Script {
    pub statements: Vec<Statement>,
}

impl Script {
    pub fn stmts(&self) -> impl Iterator<Item = &Stmt> {
        self.statements.iter().map(|s| &s.stmt)
    }
}

/// Scripts compare by statements; positions are ignored.
impl PartialEq for Script {
    fn eq(&self, other: &Self) -> bool {
        self.stmts().eq(other.stmts())
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Point(c) => {
                f.write_str("(")?;
                write_list(f, c)?;
                f.write_str(")")
            }
            Literal::Line(c) => {
                f.write_str("[")?;
                write_list(f, c)?;
                f.write_str("]")
            }
            Literal::Number(n) => write!(f, "{n}"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Name(n) => f.write_str(n),
            Expr::Literal(l) => write!(f, "{l}"),
            Expr::Call { op, args } => {
                write!(f, "{op}(")?;
                write_list(f, args)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "chart={} viewport={}:{},{}:{} samples={}",
            self.axis, self.x_min, self.x_max, self.y_min, self.y_max, self.samples
        )
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Declare { kind, name, literal } => write!(f, "{kind} {name} = {literal}"),
            Stmt::Construct { kind, name, expr } => write!(f, "{kind} {name} = {expr}"),
            Stmt::Assert { pred, args } => {
                write!(f, "assert {pred}(")?;
                write_list(f, args)?;
                f.write_str(")")
            }
            Stmt::Emit { path, chart } => write!(f, "emit svg {path:?} {chart}"),
            Stmt::Print { name } => write!(f, "print {name}"),
        }
    }
}

/// Canonical form: one statement per line, no comments.
impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s.stmt)?;
        }
        Ok(())
    }
}

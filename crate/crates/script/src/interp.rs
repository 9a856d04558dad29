//! Evaluation of checked scripts against the kernel.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};

use num_traits::ToPrimitive;
use pg_core::conic::{conic_through_five, sixth_point, Conic};
use pg_core::harmonic::{harmonic_conjugate, harmonic_conjugate_line, is_harmonic_set};
use pg_core::hvec::HVec;
use pg_core::plane::{incident, join, meet, outside, Line, Point};
use pg_core::projectivity::{axis_of_homology, from_three_points, RangeProjectivity};
use pg_core::{GeomError, Scalar};

use crate::ast::{Expr, Kind, Literal, Pos, Script, Stmt};
use crate::error::ScriptError;
use crate::report::{AssertEntry, Binding, Emitted, ErrorEntry, PrintEntry, Report, Status};
use crate::svg;

#[derive(Clone, Debug)]
pub enum Value {
    Point(Point),
    Line(Line),
    Conic(Box<Conic>),
    Projectivity(Box<RangeProjectivity>),
    Points(Vec<Point>),
    Number(Scalar),
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Point(_) => Kind::Point,
            Value::Line(_) => Kind::Line,
            Value::Conic(_) => Kind::Conic,
            Value::Projectivity(_) => Kind::Projectivity,
            Value::Points(_) => Kind::Points,
            Value::Number(_) => Kind::Number,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Point(p) => write!(f, "{p}"),
            Value::Line(l) => write!(f, "{l}"),
            Value::Conic(k) => write!(f, "{k}"),
            Value::Projectivity(p) => write!(f, "{p}"),
            Value::Points(ps) => {
                f.write_str("{")?;
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str("}")
            }
            Value::Number(n) => write!(f, "{n}"),
        }
    }
}

/// Drawable values in order of first appearance.
#[derive(Clone, Debug)]
pub enum Shape {
    Point(Point),
    Line(Line),
    Conic(Box<Conic>),
}

#[derive(Clone, Debug)]
pub struct SceneItem {
    pub shape: Shape,
    pub label: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Scene {
    pub items: Vec<SceneItem>,
    points: HashMap<Point, usize>,
    lines: HashMap<Line, usize>,
}

impl Scene {
    fn add(&mut self, v: &Value, label: Option<&str>) {
        let slot = match v {
            Value::Point(p) => self.points.get(p).copied(),
            Value::Line(l) => self.lines.get(l).copied(),
            // five points determine a conic
            Value::Conic(k) => self.items.iter().position(|item| match &item.shape {
                Shape::Conic(c) => k.defining_points().iter().all(|p| c.contains(p)),
                _ => false,
            }),
            _ => None,
        };
        if let Some(i) = slot {
            if self.items[i].label.is_none() {
                self.items[i].label = label.map(str::to_string);
            }
            return;
        }
        let idx = self.items.len();
        let shape = match v {
            Value::Point(p) => {
                self.points.insert(p.clone(), idx);
                Shape::Point(p.clone())
            }
            Value::Line(l) => {
                self.lines.insert(l.clone(), idx);
                Shape::Line(l.clone())
            }
            Value::Conic(k) => Shape::Conic(k.clone()),
            Value::Points(ps) => {
                for p in ps {
                    self.add(&Value::Point(p.clone()), None);
                }
                return;
            }
            _ => return,
        };
        self.items.push(SceneItem { shape, label: label.map(str::to_string) });
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Record errors and continue with statements that do not depend on
    /// failed bindings.
    pub keep_going: bool,
    /// Directory for relative emit paths; the working directory if unset.
    pub out_dir: Option<PathBuf>,
}

fn coords(c: &[Scalar; 3]) -> Result<HVec, GeomError> {
    HVec::from_scalars(c)
}

fn literal_value(l: &Literal) -> Result<Value, GeomError> {
    Ok(match l {
        Literal::Point(c) => Value::Point(Point::from_hvec(coords(c)?)),
        Literal::Line(c) => Value::Line(Line::from_hvec(coords(c)?)),
        Literal::Number(n) => Value::Number(n.clone()),
    })
}

fn count(n: &Scalar, what: &str) -> Result<usize, GeomError> {
    n.as_rational()
        .is_integer()
        .then(|| n.numer().to_usize())
        .flatten()
        .ok_or_else(|| GeomError::Degenerate(format!("{what} must be a nonnegative integer, got {n}")))
}

/// Longest point list `trace` will produce.
pub const TRACE_LIMIT: usize = 10_000;

fn call(op: &str, args: &[Value]) -> Result<Value, GeomError> {
    use Value as V;
    Ok(match (op, args) {
        ("join", [V::Point(p), V::Point(q)]) => V::Line(join(p, q)?),
        ("meet", [V::Line(l), V::Line(m)]) => V::Point(meet(l, m)?),
        ("harmonic", [V::Point(a), V::Point(b), V::Point(c)]) => V::Point(harmonic_conjugate(a, b, c)?),
        ("harmonic", [V::Line(a), V::Line(b), V::Line(c)]) => V::Line(harmonic_conjugate_line(a, b, c)?),
        ("projectivity3", [V::Point(a), V::Point(b), V::Point(c), V::Point(x), V::Point(y), V::Point(z)]) => {
            V::Projectivity(Box::new(from_three_points([a, b, c], [x, y, z])?))
        }
        ("apply", [V::Projectivity(f), V::Point(x)]) => V::Point(f.apply(x)?),
        ("axis", [V::Projectivity(f)]) => V::Line(axis_of_homology(f)?),
        ("conic5", [V::Point(u), V::Point(v), V::Point(a), V::Point(b), V::Point(c)]) => {
            V::Conic(Box::new(conic_through_five(u, v, a, b, c)?))
        }
        ("tangent", [V::Conic(k), V::Point(p)]) => V::Line(k.tangent_at(p)?),
        ("second", [V::Conic(k), V::Point(p), V::Line(l)]) => V::Point(k.second_intersection(p, l)?),
        (
            "pascal",
            [V::Conic(k), V::Point(a), V::Point(b), V::Point(c), V::Point(d), V::Point(e), V::Point(f)],
        ) => V::Line(k.pascal_line([a, b, c, d, e, f])?),
        ("sixth", [V::Point(a), V::Point(b), V::Point(c), V::Point(d), V::Point(e), V::Line(l)]) => {
            V::Point(sixth_point(a, b, c, d, e, l)?)
        }
        ("polar", [V::Point(p), V::Conic(k)]) => V::Line(k.polar(p)?),
        ("pole", [V::Line(l), V::Conic(k)]) => V::Point(k.pole(l)?),
        ("trace", [V::Conic(k), V::Number(n)]) => {
            let n = count(n, "trace count")?;
            if n == 0 || n > TRACE_LIMIT {
                return Err(GeomError::Degenerate(format!("trace count must be in 1..={TRACE_LIMIT}")));
            }
            V::Points(k.trace(n))
        }
        ("item", [V::Points(ps), V::Number(i)]) => {
            let i = count(i, "index")?;
            V::Point(ps.get(i).cloned().ok_or_else(|| {
                GeomError::Degenerate(format!("index {i} out of range for {} points", ps.len()))
            })?)
        }
        _ => unreachable!("kinds are checked before evaluation"),
    })
}

fn predicate(pred: &str, args: &[Value]) -> Result<bool, GeomError> {
    use Value as V;
    Ok(match (pred, args) {
        ("collinear", [V::Point(p), V::Point(q), V::Point(r)]) => {
            !p.apart(q) || incident(r, &join(p, q)?)
        }
        ("concurrent", [V::Line(l), V::Line(m), V::Line(n)]) => !l.apart(m) || incident(&meet(l, m)?, n),
        ("incident", [V::Point(p), V::Line(l)]) => incident(p, l),
        ("outside", [V::Point(p), V::Line(l)]) => outside(p, l),
        ("apart", [V::Point(p), V::Point(q)]) => p.apart(q),
        ("apart", [V::Line(l), V::Line(m)]) => l.apart(m),
        ("equal", [V::Point(p), V::Point(q)]) => p == q,
        ("equal", [V::Line(l), V::Line(m)]) => l == m,
        ("equal", [V::Projectivity(f), V::Projectivity(g)]) => f.equal(g),
        ("on", [V::Point(p), V::Conic(k)]) => k.contains(p),
        ("harmonic", [V::Point(a), V::Point(b), V::Point(c), V::Point(d)]) => is_harmonic_set(a, b, c, d)?,
        _ => unreachable!("kinds are checked before evaluation"),
    })
}

enum Failure {
    Kernel(GeomError),
    Skipped(String),
}

struct Interp<'a> {
    opts: &'a RunOptions,
    env: HashMap<String, Value>,
    failed: HashSet<String>,
    scene: Scene,
}

impl Interp<'_> {
    fn eval(&mut self, e: &Expr) -> Result<Value, Failure> {
        match e {
            Expr::Name(n) => {
                if self.failed.contains(n) {
                    return Err(Failure::Skipped(n.clone()));
                }
                Ok(self.env[n].clone())
            }
            Expr::Literal(l) => literal_value(l).map_err(Failure::Kernel),
            Expr::Call { op, args } => {
                let vals = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>, _>>()?;
                let v = call(op, &vals).map_err(Failure::Kernel)?;
                self.scene.add(&v, None);
                Ok(v)
            }
        }
    }

    fn resolve(&self, path: &str) -> PathBuf {
        match &self.opts.out_dir {
            Some(dir) if Path::new(path).is_relative() => dir.join(path),
            _ => PathBuf::from(path),
        }
    }
}

fn failure(pos: Pos, f: Failure) -> ScriptError {
    match f {
        Failure::Kernel(source) => ScriptError::Kernel { pos, source },
        Failure::Skipped(name) => ScriptError::Skipped { pos, name },
    }
}

/// Runs a checked script. Emitted files are written as they are reached.
pub fn run(script: &Script, opts: &RunOptions) -> Report {
    let mut it = Interp {
        opts,
        env: HashMap::new(),
        failed: HashSet::new(),
        scene: Scene::default(),
    };
    let mut report = Report::default();
    for s in &script.statements {
        let pos = s.pos;
        let outcome: Result<(), ScriptError> = match &s.stmt {
            Stmt::Declare { name, literal, .. } => match literal_value(literal) {
                Ok(v) => {
                    it.scene.add(&v, Some(name));
                    report.bindings.push(Binding::new(name, &v, pos));
                    it.env.insert(name.clone(), v);
                    Ok(())
                }
                Err(e) => {
                    it.failed.insert(name.clone());
                    Err(ScriptError::Kernel { pos, source: e })
                }
            },
            Stmt::Construct { name, expr, .. } => match it.eval(expr) {
                Ok(v) => {
                    it.scene.add(&v, Some(name));
                    report.bindings.push(Binding::new(name, &v, pos));
                    it.env.insert(name.clone(), v);
                    Ok(())
                }
                Err(f) => {
                    it.failed.insert(name.clone());
                    Err(failure(pos, f))
                }
            },
            Stmt::Assert { pred, args } => {
                let vals = args.iter().map(|a| it.eval(a)).collect::<Result<Vec<_>, _>>();
                match vals.and_then(|v| predicate(pred, &v).map_err(Failure::Kernel)) {
                    Ok(passed) => {
                        report.assertions.push(AssertEntry {
                            line: pos.line,
                            text: s.stmt.to_string(),
                            passed,
                        });
                        Ok(())
                    }
                    Err(f) => Err(failure(pos, f)),
                }
            }
            Stmt::Print { name } => match it.eval(&Expr::Name(name.clone())) {
                Ok(v) => {
                    report.prints.push(PrintEntry {
                        line: pos.line,
                        name: name.clone(),
                        value: v.to_string(),
                    });
                    Ok(())
                }
                Err(f) => Err(failure(pos, f)),
            },
            Stmt::Emit { path, chart } => {
                let target = it.resolve(path);
                svg::render(&it.scene, chart)
                    .map_err(|source| ScriptError::Kernel { pos, source })
                    .and_then(|out| {
                        std::fs::write(&target, &out.svg).map_err(|e| ScriptError::Io {
                            pos,
                            path: target.display().to_string(),
                            message: e.to_string(),
                        })?;
                        report.emitted.push(Emitted {
                            line: pos.line,
                            path: target.display().to_string(),
                            points: out.points,
                            lines: out.lines,
                            conics: out.conics,
                            at_infinity: out.at_infinity,
                        });
                        Ok(())
                    })
            }
        };
        if let Err(e) = outcome {
            report.errors.push(ErrorEntry::from(&e));
            if !opts.keep_going {
                break;
            }
        }
    }
    report.status = if !report.errors.is_empty() {
        Status::RuntimeError
    } else if report.assertions.iter().any(|a| !a.passed) {
        Status::AssertionFailed
    } else {
        Status::Ok
    };
    report
}

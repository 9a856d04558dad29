use pg_script::ast::{Chart, ChartAxis, Expr, Kind, Literal, Statement, Stmt, Pos};
use pg_script::{execute, load, parse, RunOptions, Script, ScriptError, Status};
use pg_core::Scalar;
use proptest::prelude::*;

const FANO: &str = include_str!("../examples/fano.pg");

fn run(text: &str) -> pg_script::Report {
    execute("test.pg", text, &RunOptions::default())
}

fn run_keep_going(text: &str) -> pg_script::Report {
    execute("test.pg", text, &RunOptions { keep_going: true, out_dir: None })
}

/// Runs `prelude` followed by one failing statement and returns the
/// error line and message.
fn kernel_error(prelude: &str, stmt: &str) -> (usize, String) {
    let text = format!("{prelude}\n{stmt}\n");
    let r = run(&text);
    assert_eq!(r.status, Status::RuntimeError, "{text}\n{}", r.to_text());
    assert_eq!(r.exit_code, 2);
    assert_eq!(r.errors.len(), 1, "{}", r.to_text());
    let e = &r.errors[0];
    assert_eq!(e.line, prelude.lines().count() + 1, "{}", r.to_text());
    assert!(e.column >= 1);
    (e.line, e.message.clone())
}

const BASE: &str = "\
point A = (1, 0, 0)
point B = (0, 1, 0)
point C = (1, 1, 0)
point E = (0, 0, 1)
line l = join(A, B)";

const CIRCLE: &str = "\
point U = (1, 0, 1)
point V = (-1, 0, 1)
point W = (0, 1, 1)
point X = (0, -1, 1)
point Y = (3, 4, 5)
conic K = conic5(U, V, W, X, Y)";

#[test]
fn fano_demo() {
    let script = load(FANO).unwrap();
    let constructions = script
        .stmts()
        .filter(|s| matches!(s, Stmt::Declare { .. } | Stmt::Construct { .. } | Stmt::Assert { .. }))
        .count();
    assert_eq!(constructions, 8);
    let dir = tempfile::tempdir().unwrap();
    let r = execute("fano.pg", FANO, &RunOptions { keep_going: false, out_dir: Some(dir.path().into()) });
    assert_eq!(r.status, Status::Ok, "{}", r.to_text());
    assert_eq!(r.assertions.len(), 1);
    assert!(r.assertions[0].passed);
    assert_eq!(r.prints[0].value, "(0, 1, 1)");
    let e = &r.emitted[0];
    assert_eq!((e.points, e.lines, e.conics), (7, 7, 0));
    assert!(e.at_infinity.is_empty());
    let svg = std::fs::read_to_string(dir.path().join("fano.svg")).unwrap();
    assert_eq!(svg.matches("<circle").count(), 7);
    assert_eq!(svg.matches("<line").count(), 7);
    assert_eq!(svg.matches("<text").count(), 7);
}

#[test]
fn failed_assertion() {
    let r = run(&format!("{BASE}\nassert outside(C, l)\nassert incident(C, l)\n"));
    assert_eq!(r.status, Status::AssertionFailed);
    assert_eq!(r.exit_code, 1);
    assert_eq!(r.assertions.iter().map(|a| a.passed).collect::<Vec<_>>(), [false, true]);
    assert_eq!(r.assertions[0].line, 6);
    assert_eq!(r.assertions[0].text, "assert outside(C, l)");
}

#[test]
fn kernel_errors_carry_positions() {
    let cases: &[(&str, &str, &str)] = &[
        (BASE, "line m = join(A, A)", "join"),
        (BASE, "point M = meet(l, l)", "meet"),
        (BASE, "point H = harmonic(A, B, E)", "join of the base points"),
        (BASE, "point H = harmonic(A, A, B)", "harmonic base points"),
        (BASE, "projectivity f = projectivity3(A, A, B, A, B, C)", "three-point"),
        (BASE, "projectivity f = projectivity3(A, B, E, A, B, C)", ""),
        (
            BASE,
            "projectivity f = projectivity3(A, B, C, B, A, C)\npoint F = apply(f, E)",
            "",
        ),
        (BASE, "projectivity f = projectivity3(A, B, C, B, A, C)\nline h = axis(f)", ""),
        (BASE, "conic K = conic5(A, B, C, E, (1, 2, 3))", "U, V"),
        (CIRCLE, "line t = tangent(K, (0, 0, 1))", ""),
        (CIRCLE, "point Z = second(K, U, [1, 0, -1])", ""),
        (CIRCLE, "line p = pascal(K, U, U, V, W, X, Y)", ""),
        (CIRCLE, "points T = trace(K, 0)", "trace count"),
        (CIRCLE, "points T = trace(K, 3)\npoint T9 = item(T, 9)", "out of range"),
        (BASE, "point Z = (0, 0, 0)", ""),
        (BASE, "assert harmonic(A, B, C, E)", ""),
    ];
    for (prelude, stmt, needle) in cases {
        let (_, message) = {
            let (pre, last) = match stmt.rsplit_once('\n') {
                Some((a, b)) => (format!("{prelude}\n{a}"), b.to_string()),
                None => (prelude.to_string(), stmt.to_string()),
            };
            kernel_error(&pre, &last)
        };
        assert!(message.contains(needle), "{stmt}: {message}");
    }
}

#[test]
fn keep_going_skips_dependents() {
    let text = format!("{BASE}\npoint M = meet(l, l)\nline n = join(M, E)\npoint N = meet(l, join(C, E))\nprint N\n");
    let stop = run(&text);
    assert_eq!(stop.errors.len(), 1);
    assert!(stop.prints.is_empty());
    let go = run_keep_going(&text);
    assert_eq!(go.status, Status::RuntimeError);
    assert_eq!(go.errors.len(), 2);
    assert_eq!(go.errors[0].line, 6);
    assert_eq!(go.errors[1].line, 7);
    assert!(go.errors[1].message.contains("depends on failed binding `M`"));
    assert_eq!(go.prints[0].value, "(1, 1, 0)");
}

#[test]
fn static_errors() {
    let unbound = load("point A = (1, 0, 0)\nline l = join(A, B)\n").unwrap_err();
    assert!(matches!(&unbound, ScriptError::Unbound { name, pos } if name == "B" && pos.line == 2));
    let rebind = load("point A = (1, 0, 0)\npoint A = (0, 1, 0)\n").unwrap_err();
    assert!(matches!(&rebind, ScriptError::Rebind { first, .. } if first.line == 1));
    let kind = load("point A = (1, 0, 0)\npoint B = join(A, A)\n").unwrap_err();
    assert!(matches!(kind, ScriptError::Type { .. }));
    let bad_arity = load("point A = (1, 0)\n").unwrap_err();
    assert_eq!(bad_arity.pos(), Pos { line: 1, column: 16 });
    for e in [unbound, rebind, bad_arity] {
        assert_eq!(e.exit_code(), 3);
    }
    let r = run("point A = (1, 0, 0\n");
    assert_eq!(r.status, Status::ParseError);
    assert_eq!(r.exit_code, 3);
    assert!(r.bindings.is_empty());
}

#[test]
fn points_at_infinity_are_reported() {
    let text = "point A = (1, 0, 0)\npoint B = (0, 1, 1)\nline l = join(A, B)\nemit svg \"x.svg\"\n";
    let dir = tempfile::tempdir().unwrap();
    let r = execute("t.pg", text, &RunOptions { keep_going: false, out_dir: Some(dir.path().into()) });
    assert_eq!(r.status, Status::Ok, "{}", r.to_text());
    let e = &r.emitted[0];
    assert_eq!(e.points, 1);
    assert_eq!(e.lines, 1);
    assert_eq!(e.at_infinity, ["A = (1, 0, 0)"]);
    assert!(r.to_text().contains("at infinity: A = (1, 0, 0)"));
}

#[test]
fn conics_render_as_polylines() {
    let text = format!("{CIRCLE}\nline t = tangent(K, U)\nemit svg \"c.svg\" chart=z viewport=-2:2,-2:2 samples=50\n");
    let dir = tempfile::tempdir().unwrap();
    let r = execute("t.pg", &text, &RunOptions { keep_going: false, out_dir: Some(dir.path().into()) });
    assert_eq!(r.status, Status::Ok, "{}", r.to_text());
    assert_eq!(r.emitted[0].conics, 1);
    let svg = std::fs::read_to_string(dir.path().join("c.svg")).unwrap();
    assert!(svg.contains("<polyline"));
    assert_eq!(r.bindings.last().unwrap().value, "[1, 0, -1]");
    let same = format!("{CIRCLE}\nconic K2 = conic5(Y, X, W, V, U)\nemit svg \"d.svg\"\n");
    let r = execute("t.pg", &same, &RunOptions { keep_going: false, out_dir: Some(dir.path().into()) });
    assert_eq!(r.emitted[0].conics, 1);
}

#[test]
fn io_errors_are_runtime_errors() {
    let dir = tempfile::tempdir().unwrap();
    let text = "point A = (1, 0, 0)\nemit svg \"missing/dir/a.svg\"\n";
    let r = execute("t.pg", text, &RunOptions { keep_going: false, out_dir: Some(dir.path().into()) });
    assert_eq!(r.status, Status::RuntimeError);
    assert_eq!(r.errors[0].line, 2);
    assert!(r.errors[0].message.contains("cannot write"));
}

#[test]
fn json_report_shape() {
    let r = run(&format!("{BASE}\nassert incident(C, l)\nprint C\n"));
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["status"], "ok");
    assert_eq!(v["exit_code"], 0);
    assert_eq!(v["script"], "test.pg");
    assert_eq!(v["bindings"][4]["name"], "l");
    assert_eq!(v["bindings"][4]["kind"], "line");
    assert_eq!(v["bindings"][4]["value"], "[0, 0, 1]");
    assert_eq!(v["assertions"][0]["passed"], true);
    assert_eq!(v["prints"][0]["value"], "(1, 1, 0)");
    assert!(v["emitted"].as_array().unwrap().is_empty());
    assert!(v["errors"].as_array().unwrap().is_empty());
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-50i64..50, 1i64..6).prop_map(|(n, d)| Scalar::new(n, d).unwrap())
}

fn name() -> impl Strategy<Value = String> {
    "[A-Z][a-z0-9_]{0,3}'?"
}

fn literal() -> impl Strategy<Value = Literal> {
    prop_oneof![
        [scalar(), scalar(), scalar()].prop_map(Literal::Point),
        [scalar(), scalar(), scalar()].prop_map(Literal::Line),
        scalar().prop_map(Literal::Number),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![name().prop_map(Expr::Name), literal().prop_map(Expr::Literal)];
    leaf.prop_recursive(3, 16, 4, |inner| {
        ("[a-z][a-z0-9]{0,6}", prop::collection::vec(inner, 0..4))
            .prop_map(|(op, args)| Expr::Call { op, args })
    })
}

fn kind() -> impl Strategy<Value = Kind> {
    prop::sample::select(Kind::KEYWORDS.map(|k| Kind::from_keyword(k).unwrap()).to_vec())
}

fn chart() -> impl Strategy<Value = Chart> {
    (prop::sample::select(vec![ChartAxis::X, ChartAxis::Y, ChartAxis::Z]), scalar(), scalar(), 2usize..500)
        .prop_map(|(axis, a, b, samples)| Chart {
            axis,
            x_min: a.clone(),
            x_max: &a + &Scalar::one(),
            y_min: b.clone(),
            y_max: &b + &Scalar::from(3),
            samples,
        })
}

fn stmt() -> impl Strategy<Value = Stmt> {
    prop_oneof![
        (kind(), name(), literal()).prop_map(|(kind, name, literal)| Stmt::Declare { kind, name, literal }),
        (kind(), name(), "[a-z]{1,6}", prop::collection::vec(expr(), 0..4)).prop_map(|(kind, name, op, args)| {
            Stmt::Construct { kind, name, expr: Expr::Call { op, args } }
        }),
        (kind(), name(), name()).prop_map(|(kind, name, other)| Stmt::Construct { kind, name, expr: Expr::Name(other) }),
        ("[a-z]{1,8}", prop::collection::vec(expr(), 0..4)).prop_map(|(pred, args)| Stmt::Assert { pred, args }),
        ("[a-zA-Z0-9_./ \"\\\\-]{1,12}", chart()).prop_map(|(path, chart)| Stmt::Emit { path, chart }),
        name().prop_map(|name| Stmt::Print { name }),
    ]
}

proptest! {
    #[test]
    fn format_round_trip(stmts in prop::collection::vec(stmt(), 0..12)) {
        let script = Script {
            statements: stmts
                .into_iter()
                .enumerate()
                .map(|(i, stmt)| Statement { stmt, pos: Pos { line: i + 1, column: 1 } })
                .collect(),
        };
        let text = script.to_string();
        let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(&back, &script);
        prop_assert_eq!(back.to_string(), text);
    }
}

//! Line-oriented lexer and recursive-descent parser.

use std::fmt;

use num_bigint::BigInt;
use pg_core::Scalar;

use crate::ast::{Chart, ChartAxis, Expr, Kind, Literal, Pos, Script, Statement, Stmt};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected ", self.pos)?;
        match self.expected.as_slice() {
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Str(String),
    Punct(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Str(s) => write!(f, "{s:?}"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of line"),
        }
    }
}

fn err(pos: Pos, expected: &[&str], found: impl fmt::Display) -> ParseError {
    ParseError {
        pos,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        found: found.to_string(),
    }
}

fn lex_line(text: &str, line: usize) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: i + 1 };
        if c == '#' {
            break;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("digits")), pos));
        } else if c == '"' {
            i += 1;
            let mut s = String::new();
            loop {
                match chars.get(i) {
                    None => return Err(err(Pos { line, column: i + 1 }, &["`\"`"], "end of line")),
                    Some('"') => break,
                    Some('\\') => {
                        let e = chars.get(i + 1).copied();
                        s.push(match e {
                            Some('n') => '\n',
                            Some('t') => '\t',
                            Some(e @ ('"' | '\\')) => e,
                            other => {
                                let found = other.map_or("end of line".into(), |c| format!("`{c}`"));
                                return Err(err(Pos { line, column: i + 2 }, &["escape"], found));
                            }
                        });
                        i += 2;
                    }
                    Some(&ch) => {
                        s.push(ch);
                        i += 1;
                    }
                }
            }
            i += 1;
            out.push((Tok::Str(s), pos));
        } else if "()[],=:/-".contains(c) {
            out.push((Tok::Punct(c), pos));
            i += 1;
        } else {
            return Err(err(pos, &["token"], format!("`{c}`")));
        }
    }
    out.push((Tok::End, Pos { line, column: chars.len() + 1 }));
    Ok(out)
}

struct Cursor {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Cursor {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(err(self.pos(), expected, self.peek()))
    }

    fn punct(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Punct(c) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&format!("`{c}`")])
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Tok::Ident(s) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => self.fail(&[what]),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            _ => self.fail(&[&format!("`{kw}`")]),
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => self.fail(&["end of line"]),
        }
    }

    /// `[-] int [/ int]`
    fn number(&mut self) -> Result<Scalar, ParseError> {
        let neg = self.eat('-');
        let num = match self.peek() {
            Tok::Int(n) => n.clone(),
            _ => return self.fail(&["number"]),
        };
        self.bump();
        let den = if self.eat('/') {
            let pos = self.pos();
            match self.peek() {
                Tok::Int(d) if d.sign() == num_bigint::Sign::NoSign => {
                    return Err(err(pos, &["nonzero denominator"], "`0`"));
                }
                Tok::Int(d) => {
                    let d = d.clone();
                    self.bump();
                    d
                }
                _ => return self.fail(&["denominator"]),
            }
        } else {
            BigInt::from(1)
        };
        let s = Scalar::new(num, den).expect("nonzero denominator");
        Ok(if neg { -s } else { s })
    }

    fn triple(&mut self, close: char) -> Result<[Scalar; 3], ParseError> {
        let a = self.number()?;
        self.punct(',')?;
        let b = self.number()?;
        self.punct(',')?;
        let c = self.number()?;
        self.punct(close)?;
        Ok([a, b, c])
    }

    fn literal(&mut self) -> Result<Option<Literal>, ParseError> {
        Ok(Some(match self.peek() {
            Tok::Punct('(') => {
                self.bump();
                Literal::Point(self.triple(')')?)
            }
            Tok::Punct('[') => {
                self.bump();
                Literal::Line(self.triple(']')?)
            }
            Tok::Punct('-') | Tok::Int(_) => Literal::Number(self.number()?),
            _ => return Ok(None),
        }))
    }

    fn args(&mut self) -> Result<Vec<Expr>, ParseError> {
        self.punct('(')?;
        let mut args = Vec::new();
        if self.eat(')') {
            return Ok(args);
        }
        loop {
            args.push(self.expr()?);
            if self.eat(')') {
                return Ok(args);
            }
            if !self.eat(',') {
                return self.fail(&["`,`", "`)`"]);
            }
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        if let Some(lit) = self.literal()? {
            return Ok(Expr::Literal(lit));
        }
        let name = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return self.fail(&["name", "call", "`(`", "`[`", "number"]),
        };
        self.bump();
        if *self.peek() == Tok::Punct('(') {
            Ok(Expr::Call { op: name, args: self.args()? })
        } else {
            Ok(Expr::Name(name))
        }
    }

    fn bound(&mut self) -> Result<(Scalar, Scalar), ParseError> {
        let lo = self.number()?;
        self.punct(':')?;
        let hi = self.number()?;
        Ok((lo, hi))
    }

    fn emit(&mut self) -> Result<Stmt, ParseError> {
        self.keyword("svg")?;
        let path = match self.peek() {
            Tok::Str(s) => s.clone(),
            _ => return self.fail(&["path string"]),
        };
        self.bump();
        let mut chart = Chart::default();
        while let Tok::Ident(opt) = self.peek().clone() {
            let pos = self.pos();
            self.bump();
            self.punct('=')?;
            match opt.as_str() {
                "chart" => {
                    chart.axis = match self.ident("`x`, `y` or `z`")?.as_str() {
                        "x" => ChartAxis::X,
                        "y" => ChartAxis::Y,
                        "z" => ChartAxis::Z,
                        other => return Err(err(pos, &["`x`", "`y`", "`z`"], format!("`{other}`"))),
                    }
                }
                "viewport" => {
                    let vpos = self.pos();
                    let (x0, x1) = self.bound()?;
                    self.punct(',')?;
                    let (y0, y1) = self.bound()?;
                    if !(x0 < x1 && y0 < y1) {
                        return Err(err(vpos, &["nonempty viewport"], "min >= max"));
                    }
                    (chart.x_min, chart.x_max, chart.y_min, chart.y_max) = (x0, x1, y0, y1);
                }
                "samples" => {
                    let spos = self.pos();
                    let n = self.number()?;
                    chart.samples = n
                        .as_rational()
                        .is_integer()
                        .then(|| n.to_string().parse::<usize>().ok())
                        .flatten()
                        .filter(|&n| n >= 2)
                        .ok_or_else(|| err(spos, &["sample count >= 2"], &n))?;
                }
                other => {
                    return Err(err(pos, &["`chart`", "`viewport`", "`samples`"], format!("`{other}`")));
                }
            }
        }
        Ok(Stmt::Emit { path, chart })
    }

    fn statement(&mut self) -> Result<Stmt, ParseError> {
        let head = self.ident("statement")?;
        let stmt = match head.as_str() {
            "assert" => {
                let pred = self.ident("predicate")?;
                let args = self.args()?;
                Stmt::Assert { pred, args }
            }
            "emit" => self.emit()?,
            "print" => Stmt::Print { name: self.ident("name")? },
            kw => {
                let Some(kind) = Kind::from_keyword(kw) else {
                    self.at -= 1;
                    let mut expected = vec!["`assert`", "`emit`", "`print`"];
                    expected.extend(Kind::KEYWORDS.iter().copied());
                    return self.fail(&expected);
                };
                let name = self.ident("name")?;
                self.punct('=')?;
                match self.expr()? {
                    Expr::Literal(literal) => Stmt::Declare { kind, name, literal },
                    expr => Stmt::Construct { kind, name, expr },
                }
            }
        };
        self.end()?;
        Ok(stmt)
    }
}

/// Parses a whole script; blank lines and `#` comments are skipped.
pub fn parse(text: &str) -> Result<Script, ParseError> {
    let mut statements = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let toks = lex_line(line, i + 1)?;
        if toks.len() == 1 {
            continue;
        }
        let pos = toks[0].1;
        let mut cur = Cursor { toks, at: 0 };
        statements.push(Statement { stmt: cur.statement()?, pos });
    }
    Ok(Script { statements })
}

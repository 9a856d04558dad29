//! Deterministic SVG rendering of a scene in an affine chart.

use std::fmt::Write as _;

use num_traits::Signed;
use pg_core::plane::{Line, Point};
use pg_core::{GeomError, Scalar};

use crate::ast::Chart;
use crate::interp::{Scene, Shape};

/// Width of the drawing in pixels; the height follows the viewport aspect.
pub const WIDTH: f64 = 600.0;

pub struct Rendered {
    pub svg: String,
    pub points: usize,
    pub lines: usize,
    pub conics: usize,
    /// Points and lines with no affine image in the chart.
    pub at_infinity: Vec<String>,
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

struct Frame<'a> {
    chart: &'a Chart,
    scale: f64,
    height: f64,
}

impl Frame<'_> {
    fn px(&self, u: &Scalar, v: &Scalar) -> (f64, f64) {
        let x = (u - &self.chart.x_min).to_f64() * self.scale;
        let y = (&self.chart.y_max - v).to_f64() * self.scale;
        (x, y)
    }

    /// Affine coordinates of a point, or `None` at infinity.
    fn affine(&self, p: &Point) -> Option<(Scalar, Scalar)> {
        let c = p.coords();
        let w = Scalar::from(c[self.chart.axis.dropped()].clone());
        if w.is_zero() {
            return None;
        }
        let (i, j) = self.chart.axis.kept();
        Some((&Scalar::from(c[i].clone()) / &w, &Scalar::from(c[j].clone()) / &w))
    }

    fn inside(&self, u: &Scalar, v: &Scalar) -> bool {
        let c = self.chart;
        c.x_min <= *u && *u <= c.x_max && c.y_min <= *v && *v <= c.y_max
    }

    /// Exact clip of `a u + b v + c = 0` to the viewport; `None` if the
    /// line misses it. `Err(())` marks the line at infinity.
    fn clip(&self, l: &Line) -> Result<Option<[(Scalar, Scalar); 2]>, ()> {
        let co = l.coords();
        let (i, j) = self.chart.axis.kept();
        let a = Scalar::from(co[i].clone());
        let b = Scalar::from(co[j].clone());
        let c = Scalar::from(co[self.chart.axis.dropped()].clone());
        if a.is_zero() && b.is_zero() {
            return Err(());
        }
        let ch = self.chart;
        let mut hits: Vec<(Scalar, Scalar)> = Vec::new();
        let mut push = |u: Scalar, v: Scalar| {
            if self.inside(&u, &v) && !hits.contains(&(u.clone(), v.clone())) {
                hits.push((u, v));
            }
        };
        if !b.is_zero() {
            for u in [&ch.x_min, &ch.x_max] {
                let v = -(&(&(&a * u) + &c) / &b);
                push(u.clone(), v);
            }
        }
        if !a.is_zero() {
            for v in [&ch.y_min, &ch.y_max] {
                let u = -(&(&(&b * v) + &c) / &a);
                push(u, v.clone());
            }
        }
        Ok(match hits.as_slice() {
            [p, q, ..] => Some([p.clone(), q.clone()]),
            _ => None,
        })
    }
}

/// Renders lines first, then conics, then dots and labels, each in scene
/// order.
pub fn render(scene: &Scene, chart: &Chart) -> Result<Rendered, GeomError> {
    let scale = WIDTH / (&chart.x_max - &chart.x_min).to_f64();
    let height = (&chart.y_max - &chart.y_min).to_f64() * scale;
    let frame = Frame { chart, scale, height };
    let mut out = Rendered {
        svg: String::new(),
        points: 0,
        lines: 0,
        conics: 0,
        at_infinity: Vec::new(),
    };
    let mut lines = String::new();
    let mut conics = String::new();
    let mut dots = String::new();
    let mut labels = String::new();
    let named = |label: &Option<String>, value: &dyn std::fmt::Display| match label {
        Some(n) => format!("{n} = {value}"),
        None => value.to_string(),
    };
    for item in &scene.items {
        match &item.shape {
            Shape::Point(p) => match frame.affine(p) {
                None => out.at_infinity.push(named(&item.label, p)),
                Some((u, v)) => {
                    if !frame.inside(&u, &v) {
                        continue;
                    }
                    let (x, y) = frame.px(&u, &v);
                    out.points += 1;
                    writeln!(dots, r#"<circle cx="{}" cy="{}" r="3"/>"#, num(x), num(y)).unwrap();
                    if let Some(name) = &item.label {
                        writeln!(
                            labels,
                            r#"<text x="{}" y="{}">{}</text>"#,
                            num(x + 5.0),
                            num(y - 5.0),
                            escape(name)
                        )
                        .unwrap();
                    }
                }
            },
            Shape::Line(l) => match frame.clip(l) {
                Err(()) => out.at_infinity.push(named(&item.label, l)),
                Ok(None) => {}
                Ok(Some([p, q])) => {
                    let (x1, y1) = frame.px(&p.0, &p.1);
                    let (x2, y2) = frame.px(&q.0, &q.1);
                    out.lines += 1;
                    writeln!(
                        lines,
                        r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                        num(x1),
                        num(y1),
                        num(x2),
                        num(y2)
                    )
                    .unwrap();
                }
            },
            Shape::Conic(k) => {
                out.conics += 1;
                let n = chart.samples;
                let params: Vec<Scalar> = (0..n)
                    .map(|i| {
                        let t = Scalar::new(2 * i as i64, (n - 1) as i64).expect("n >= 2");
                        &t - &Scalar::one()
                    })
                    .collect();
                let members = k.sweep(&params)?;
                let d = chart.axis.dropped();
                let mut run: Vec<(f64, f64)> = Vec::new();
                let mut side: Option<bool> = None;
                let mut flush = |run: &mut Vec<(f64, f64)>| {
                    if run.len() >= 2 {
                        let pts: Vec<String> = run.iter().map(|(x, y)| format!("{},{}", num(*x), num(*y))).collect();
                        writeln!(conics, r#"<polyline points="{}"/>"#, pts.join(" ")).unwrap();
                    }
                    run.clear();
                };
                for m in &members {
                    match frame.affine(m) {
                        None => {
                            flush(&mut run);
                            side = None;
                        }
                        Some((u, v)) => {
                            let s = m.coords()[d].is_positive();
                            if side.is_some_and(|prev| prev != s) {
                                flush(&mut run);
                            }
                            side = Some(s);
                            run.push(frame.px(&u, &v));
                        }
                    }
                }
                flush(&mut run);
            }
        }
    }
    let (w, h) = (num(WIDTH), num(frame.height));
    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(svg, r#"<defs><clipPath id="view"><rect x="0" y="0" width="{w}" height="{h}"/></clipPath></defs>"#).unwrap();
    writeln!(svg, r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#).unwrap();
    writeln!(svg, r##"<g clip-path="url(#view)" fill="none" stroke="#555555" stroke-width="1">"##).unwrap();
    svg.push_str(&lines);
    svg.push_str("</g>\n");
    writeln!(svg, r##"<g clip-path="url(#view)" fill="none" stroke="#1f5fa8" stroke-width="1.5">"##).unwrap();
    svg.push_str(&conics);
    svg.push_str("</g>\n");
    writeln!(svg, r#"<g clip-path="url(#view)" fill="black">"#).unwrap();
    svg.push_str(&dots);
    svg.push_str("</g>\n");
    writeln!(svg, r#"<g font-family="sans-serif" font-size="12" fill="black">"#).unwrap();
    svg.push_str(&labels);
    svg.push_str("</g>\n</svg>\n");
    out.svg = svg;
    Ok(out)
}

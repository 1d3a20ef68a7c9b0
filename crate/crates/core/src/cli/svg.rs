//! Minimal SVG output for construction diagrams.
//!
//! Coordinates come from [`ExactNumber::to_f64`](crate::exact::ExactNumber::to_f64) and are printed with six
//! decimals. They are for display only and never read back.

use std::fmt::Write;

use crate::plane::Point;

#[derive(Default)]
pub struct Drawing {
    items: Vec<Item>,
}

enum Item {
    Segment([f64; 2], [f64; 2], &'static str),
    Polygon(Vec<[f64; 2]>, &'static str),
    Label([f64; 2], String),
}

fn xy(p: &Point) -> [f64; 2] {
    // y grows downward in SVG
    [p.x.to_f64() + 0.0, -p.y.to_f64() + 0.0]
}

impl Drawing {
    pub fn segment(&mut self, p: &Point, q: &Point, stroke: &'static str) {
        self.items.push(Item::Segment(xy(p), xy(q), stroke));
    }

    pub fn polygon(&mut self, pts: &[Point], stroke: &'static str) {
        self.items.push(Item::Polygon(pts.iter().map(xy).collect(), stroke));
    }

    pub fn label(&mut self, p: &Point, name: &str) {
        self.items.push(Item::Label(xy(p), name.to_string()));
    }

    fn bounds(&self) -> [f64; 4] {
        let mut b = [f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY];
        let mut grow = |p: &[f64; 2]| {
            b[0] = b[0].min(p[0]);
            b[1] = b[1].min(p[1]);
            b[2] = b[2].max(p[0]);
            b[3] = b[3].max(p[1]);
        };
        for item in &self.items {
            match item {
                Item::Segment(p, q, _) => {
                    grow(p);
                    grow(q);
                }
                Item::Polygon(ps, _) => ps.iter().for_each(&mut grow),
                Item::Label(p, _) => grow(p),
            }
        }
        if b[0] > b[2] {
            return [0.0, 0.0, 1.0, 1.0];
        }
        b
    }

    pub fn to_svg(&self) -> String {
        let [x0, y0, x1, y1] = self.bounds();
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let pad = span * 0.1;
        let stroke = span / 200.0;
        let font = span / 25.0;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
            x0 - pad,
            y0 - pad,
            x1 - x0 + 2.0 * pad,
            y1 - y0 + 2.0 * pad
        );
        for item in &self.items {
            let _ = match item {
                Item::Segment(p, q, color) => writeln!(
                    s,
                    r#"  <line x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}" stroke="{color}" stroke-width="{stroke:.6}"/>"#,
                    p[0], p[1], q[0], q[1]
                ),
                Item::Polygon(ps, color) => {
                    let pts: Vec<String> = ps.iter().map(|p| format!("{:.6},{:.6}", p[0], p[1])).collect();
                    writeln!(
                        s,
                        r#"  <polygon points="{}" fill="none" stroke="{color}" stroke-width="{stroke:.6}"/>"#,
                        pts.join(" ")
                    )
                }
                Item::Label(p, name) => writeln!(
                    s,
                    r#"  <circle cx="{:.6}" cy="{:.6}" r="{:.6}"/>{}  <text x="{:.6}" y="{:.6}" font-size="{font:.6}">{}</text>"#,
                    p[0],
                    p[1],
                    stroke * 1.5,
                    "\n",
                    p[0] + stroke * 2.0,
                    p[1] - stroke * 2.0,
                    escape(name)
                ),
            };
        }
        s.push_str("</svg>\n");
        s
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

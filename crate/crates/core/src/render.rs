//! Text, SVG and JSON pictures of a meander: arcs of `a` below the
//! baseline, arcs of `b` above it.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::meander::{Arc, Meander};

pub const MAX_ASCII_N: usize = 200;
pub const MAX_SVG_N: usize = 10_000;

/// Horizontal distance between neighbouring SVG vertices.
pub const SVG_STEP: usize = 20;

/// Nesting depth of an arc inside its block, innermost arcs at 1.
fn height(arc: &Arc) -> usize {
    (arc.v - arc.u).div_ceil(2)
}

struct Canvas {
    rows: Vec<Vec<u8>>,
}

impl Canvas {
    fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![vec![b' '; cols]; rows],
        }
    }

    fn put(&mut self, row: usize, col: usize, ch: u8) {
        self.rows[row][col] = ch;
    }

    fn finish(self) -> Vec<String> {
        self.rows
            .into_iter()
            .map(|r| String::from_utf8(r).unwrap().trim_end().to_string())
            .collect()
    }
}

/// Plain-text picture. Upper arcs are drawn as `|` legs capped by `_`, lower
/// arcs as `|` legs joined by `_`; the baseline shows one `.` per vertex and
/// the last row numbers them.
pub fn render_ascii(m: &Meander) -> Result<String> {
    let n = m.n();
    if n > MAX_ASCII_N {
        return Err(Error::TooLarge {
            what: "vertices for ASCII rendering",
            got: n as u64,
            limit: MAX_ASCII_N as u64,
        });
    }
    let width = (n.to_string().len() + 1).max(2);
    let col = |x: usize| (x - 1) * width;
    let cols = col(n) + width;
    let (upper, lower) = (m.upper(), m.lower());
    let up_h = upper.iter().map(height).max().unwrap_or(0);
    let low_h = lower.iter().map(height).max().unwrap_or(0);

    // Rows above the baseline: the tallest upper arc needs up_h legs and a cap.
    let up_rows = if up_h == 0 { 0 } else { up_h + 1 };
    let mut top = Canvas::new(up_rows, cols);
    for arc in &upper {
        let h = height(arc);
        for r in 1..=h {
            top.put(up_rows - r, col(arc.u), b'|');
            top.put(up_rows - r, col(arc.v), b'|');
        }
        for c in col(arc.u) + 1..col(arc.v) {
            top.put(up_rows - h - 1, c, b'_');
        }
    }

    let mut bottom = Canvas::new(low_h, cols);
    for arc in &lower {
        let h = height(arc);
        for r in 0..h {
            bottom.put(r, col(arc.u), b'|');
            bottom.put(r, col(arc.v), b'|');
        }
        for c in col(arc.u) + 1..col(arc.v) {
            bottom.put(h - 1, c, b'_');
        }
    }

    let mut base = Canvas::new(2, cols);
    for x in 1..=n {
        base.put(0, col(x), b'.');
        for (i, d) in x.to_string().bytes().enumerate() {
            base.put(1, col(x) + i, d);
        }
    }
    let labels = base.finish();

    let mut lines = top.finish();
    lines.push(labels[0].clone());
    lines.extend(bottom.finish());
    lines.push(labels[1].clone());
    let mut out = lines.join("\n");
    out.push('\n');
    Ok(out)
}

/// SVG document with one `<path>` per arc. Arcs whose endpoints both lie in
/// component `highlight` (an index into [`Meander::components`]) carry the
/// `highlight` class.
pub fn render_svg(m: &Meander, highlight: Option<usize>) -> Result<String> {
    let n = m.n();
    if n > MAX_SVG_N {
        return Err(Error::TooLarge {
            what: "vertices for SVG rendering",
            got: n as u64,
            limit: MAX_SVG_N as u64,
        });
    }
    let marked: Vec<bool> = match highlight {
        None => vec![false; n + 1],
        Some(id) => {
            let comps = m.components();
            let comp = comps.get(id).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "component {id} does not exist ({} components)",
                    comps.len()
                ))
            })?;
            let mut marked = vec![false; n + 1];
            for &x in &comp.vertices {
                marked[x] = true;
            }
            marked
        }
    };

    let x = |i: usize| i * SVG_STEP;
    let reach = SVG_STEP / 2 * n + SVG_STEP;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 -{reach} {} {}">"#,
        x(n + 1),
        2 * reach
    );
    let _ = writeln!(
        s,
        "<style>.arc{{fill:none;stroke:#222;stroke-width:1.5}}.highlight{{stroke:#c0392b;stroke-width:3}}</style>"
    );
    let _ = writeln!(
        s,
        r##"<line x1="{}" y1="0" x2="{}" y2="0" stroke="#999"/>"##,
        x(1),
        x(n)
    );
    for (class, sweep, arcs) in [("upper", 1, m.upper()), ("lower", 0, m.lower())] {
        for arc in arcs {
            let r = (arc.v - arc.u) * SVG_STEP / 2;
            let hl = if marked[arc.u] && marked[arc.v] {
                " highlight"
            } else {
                ""
            };
            let _ = writeln!(
                s,
                r#"<path class="arc {class}{hl}" d="M {} 0 A {r} {r} 0 0 {sweep} {} 0"/>"#,
                x(arc.u),
                x(arc.v)
            );
        }
    }
    for i in 1..=n {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="4" font-size="8" text-anchor="middle">{i}</text>"#,
            x(i)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// The meander's report as pretty-printed JSON.
pub fn render_json(m: &Meander) -> Result<String> {
    serde_json::to_string_pretty(&m.report()).map_err(|e| Error::Internal(e.to_string()))
}

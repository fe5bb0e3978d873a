//! Wiring diagrams of switch sequences.
//!
//! The ASCII form is an interchange format that [`parse_ascii`] reads back.
//! Each swap takes a five-column block; a crossing between positions `p` and
//! `p + 1` looks like
//!
//! ```text
//! a --\ /-- b
//!      X
//! b --/ \-- a
//! ```
//!
//! Track rows carry the start order's label on the left and the end order's
//! label on the right. Gap rows carry only crossings.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::orders::{Alt, LinearOrder, SwitchingPair};
use crate::paths::SwitchSeq;
use crate::text::Alphabet;

const BLOCK: usize = 5;
const PLAIN: &str = "-----";
const UPPER: &str = "-\\ /-";
const LOWER: &str = "-/ \\-";
const GAP: &str = "     ";
const CROSS: &str = "  X  ";

/// Geometry of a wiring diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WiringDiagram {
    pub seq: SwitchSeq,
    /// Per alternative, its row at every column `0..=swaps`.
    pub tracks: Vec<(Alt, Vec<(usize, usize)>)>,
    /// Column and upper row of each crossing, in sequence order.
    pub crossings: Vec<(usize, usize, SwitchingPair)>,
}

impl WiringDiagram {
    pub fn new(seq: &SwitchSeq) -> Result<Self> {
        let path = seq.replay()?;
        let orders = path.orders();
        let tracks = seq
            .start
            .iter()
            .map(|a| (a, orders.iter().enumerate().map(|(c, o)| (c, o.position(a).expect("same universe"))).collect()))
            .collect();
        let crossings = seq
            .swaps
            .iter()
            .enumerate()
            .map(|(c, &p)| (c, orders[c].position(p.lo()).min(orders[c].position(p.hi())).expect("present"), p))
            .collect();
        Ok(Self { seq: seq.clone(), tracks, crossings })
    }

    pub fn end(&self) -> LinearOrder {
        *self.seq.replay().expect("validated").last()
    }
}

pub fn render_ascii(seq: &SwitchSeq, alphabet: &Alphabet) -> Result<String> {
    let w = WiringDiagram::new(seq)?;
    let (start, end) = (seq.start, w.end());
    let n = start.len();
    let mut rows: Vec<String> = (0..2 * n - 1)
        .map(|r| if r % 2 == 0 { format!("{} -", alphabet.label(start.at(r / 2))) } else { "   ".into() })
        .collect();
    for &(_, p, _) in &w.crossings {
        for (r, row) in rows.iter_mut().enumerate() {
            row.push_str(match r {
                _ if r == 2 * p => UPPER,
                _ if r == 2 * p + 2 => LOWER,
                _ if r == 2 * p + 1 => CROSS,
                _ if r % 2 == 0 => PLAIN,
                _ => GAP,
            });
        }
    }
    let mut out = String::new();
    for (r, row) in rows.iter().enumerate() {
        if r % 2 == 0 {
            let _ = writeln!(out, "{row}- {}", alphabet.label(end.at(r / 2)));
        } else {
            let _ = writeln!(out, "{}", row.trim_end());
        }
    }
    Ok(out)
}

fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Strict inverse of [`render_ascii`].
pub fn parse_ascii(text: &str, alphabet: &Alphabet) -> Result<SwitchSeq> {
    let lines: Vec<Vec<char>> = text.lines().map(|l| l.chars().collect()).collect();
    if lines.len().is_multiple_of(2) {
        return Err(bad(lines.len(), "expected an odd number of rows"));
    }
    let n = lines.len().div_ceil(2);
    let width = lines[0].len();
    if width < 6 || !(width - 6).is_multiple_of(BLOCK) {
        return Err(bad(1, "track row has the wrong width"));
    }
    let k = (width - 6) / BLOCK;
    let mut start = Vec::with_capacity(n);
    let mut end = Vec::with_capacity(n);
    for (i, l) in lines.iter().enumerate() {
        let line = i + 1;
        if i % 2 == 0 {
            if l.len() != width || l[1..3] != [' ', '-'] || l[width - 3..width - 1] != ['-', ' '] {
                return Err(bad(line, "malformed track row"));
            }
            let id = |c: char| alphabet.id(c).ok_or_else(|| bad(line, format!("unknown label {c:?}")));
            start.push(id(l[0])?);
            end.push(id(l[width - 1])?);
        } else if l.len() > width - 3 || l.iter().take(3).any(|&c| c != ' ') {
            return Err(bad(line, "malformed gap row"));
        }
    }
    let start = LinearOrder::new(&start).map_err(|e| bad(1, e.to_string()))?;
    let block = |row: usize, j: usize| -> String {
        let l = &lines[row];
        (0..BLOCK).map(|c| l.get(3 + j * BLOCK + c).copied().unwrap_or(' ')).collect()
    };
    let mut current = start;
    let mut swaps = Vec::with_capacity(k);
    for j in 0..k {
        let gaps: Vec<usize> = (0..n - 1).filter(|&p| block(2 * p + 1, j) == CROSS).collect();
        let [p] = gaps[..] else {
            return Err(bad(1, format!("column block {} needs exactly one crossing", j + 1)));
        };
        for r in 0..lines.len() {
            let expect = match r {
                _ if r == 2 * p => UPPER,
                _ if r == 2 * p + 2 => LOWER,
                _ if r == 2 * p + 1 => CROSS,
                _ if r % 2 == 0 => PLAIN,
                _ => GAP,
            };
            if block(r, j) != expect {
                return Err(bad(r + 1, format!("unexpected glyphs in column block {}", j + 1)));
            }
        }
        swaps.push(SwitchingPair::new(current.at(p), current.at(p + 1))?);
        current = current.swap_unchecked(p);
    }
    if !current.iter().eq(end.iter().copied()) {
        return Err(bad(1, "right-hand labels do not match the crossings"));
    }
    Ok(SwitchSeq::new(start, swaps))
}

const PITCH_X: usize = 40;
const PITCH_Y: usize = 30;
const MARGIN: usize = 30;

/// Fixed-pitch SVG drawing. Presentation only.
pub fn render_svg(seq: &SwitchSeq, alphabet: &Alphabet) -> Result<String> {
    let w = WiringDiagram::new(seq)?;
    let cols = seq.swaps.len();
    let (width, height) = (2 * MARGIN + (cols + 1) * PITCH_X, 2 * MARGIN + (seq.start.len() - 1) * PITCH_Y);
    let x = |c: usize| MARGIN + PITCH_X / 2 + c * PITCH_X;
    let y = |r: usize| MARGIN + r * PITCH_Y;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" font-family=\"monospace\" font-size=\"14\">\n"
    );
    for (a, pts) in &w.tracks {
        let mut d = format!("{},{}", x(0) - PITCH_X / 2, y(pts[0].1));
        for &(c, r) in pts {
            let _ = write!(d, " {},{}", x(c), y(r));
        }
        let last = pts.last().expect("nonempty").1;
        let _ = write!(d, " {},{}", x(cols) + PITCH_X / 2, y(last));
        let _ = writeln!(out, "  <polyline points=\"{d}\" fill=\"none\" stroke=\"black\"/>");
        let label = alphabet.label(*a);
        let _ =
            writeln!(out, "  <text x=\"{}\" y=\"{}\" text-anchor=\"end\">{label}</text>", MARGIN - 8, y(pts[0].1) + 5);
        let _ = writeln!(out, "  <text x=\"{}\" y=\"{}\">{label}</text>", width - MARGIN + 8, y(last) + 5);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

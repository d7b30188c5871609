//! ASCII and SVG diagrams of the distance support, the Ferrers frame, paths and staircases.
//!
//! Symbols: `x` crossed black point, `o` black circle, `*` red circle, `+` red crossed,
//! `#` a point on a staircase.

use std::fmt::Write;

use flagcodes::ferrers::{
    frame_point_is_black, staircase_of_partition, CellColor, EmbeddedPartition, FerrersFrame,
};
use flagcodes::paths::DistancePath;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    Support,
    Enriched,
    Frame,
    Path,
    Staircase,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    None,
    Path(DistancePath),
    Partition(EmbeddedPartition),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mark {
    Crossed,
    Circle,
    RedCircle,
    RedCrossed,
    OnPath,
}

impl Mark {
    fn ascii(self) -> char {
        match self {
            Mark::Crossed => 'x',
            Mark::Circle => 'o',
            Mark::RedCircle => '*',
            Mark::RedCrossed => '+',
            Mark::OnPath => '#',
        }
    }

    fn of_frame_point(n: usize, u: usize, v: usize) -> Self {
        let crossed = u + v + 1 >= n;
        match (frame_point_is_black(n, u, v), crossed) {
            (true, true) => Mark::Crossed,
            (true, false) => Mark::Circle,
            (false, true) => Mark::RedCrossed,
            (false, false) => Mark::RedCircle,
        }
    }
}

/// A sparse character canvas, origin bottom-left, rendered top row first.
struct Canvas {
    width: usize,
    height: usize,
    cells: Vec<char>,
}

impl Canvas {
    fn new(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            cells: vec![' '; width * height],
        }
    }

    fn put(&mut self, x: usize, y: usize, c: char) {
        self.cells[(self.height - 1 - y) * self.width + x] = c;
    }

    fn into_string(self) -> String {
        let mut out = String::new();
        for row in self.cells.chunks(self.width) {
            let line: String = row.iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Points of the (enriched) support in doubled coordinates `(X, Y) = (n+u-v, n-u-v)`:
/// black points are `(2i, 2δ)`, red ones sit at odd `(X, Y)`.
fn support_points(n: usize, enriched: bool) -> Vec<(usize, usize, Mark)> {
    let mut pts = Vec::new();
    for u in 0..=n {
        for v in 0..=n - u {
            let mark = Mark::of_frame_point(n, u, v);
            if enriched || matches!(mark, Mark::Crossed | Mark::Circle) {
                pts.push((n + u - v, n - u - v, mark));
            }
        }
    }
    pts
}

fn path_edges(p: &DistancePath) -> Vec<(usize, usize, char)> {
    p.deltas()
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let c = match w[1].cmp(&w[0]) {
                std::cmp::Ordering::Greater => '/',
                std::cmp::Ordering::Less => '\\',
                std::cmp::Ordering::Equal => '-',
            };
            (2 * i + 1, w[0] + w[1], c)
        })
        .collect()
}

fn support_ascii(n: usize, enriched: bool, path: Option<&DistancePath>) -> String {
    let max_y = if enriched { n } else { 2 * (n / 2) };
    let mut canvas = Canvas::new(2 * n + 1, max_y + 1);
    for (x, y, m) in support_points(n, enriched) {
        if y <= max_y {
            canvas.put(x, y, m.ascii());
        }
    }
    if let Some(p) = path {
        for (x, y, c) in path_edges(p) {
            canvas.put(x, y, c);
        }
    }
    if enriched {
        return canvas.into_string();
    }
    // Plain support: odd rows only ever hold path edges.
    let text = canvas.into_string();
    let lines: Vec<&str> = text.lines().collect();
    let mut out = String::new();
    for (k, line) in lines.iter().enumerate() {
        let y = max_y - k;
        if y % 2 == 0 || path.is_some() {
            out.push_str(line);
            out.push('\n');
        }
    }
    out
}

fn frame_ascii(n: usize) -> String {
    let frame = FerrersFrame::new(n);
    let mut rows = vec![String::new(); n.saturating_sub(1)];
    for (i, _j, color) in frame.cells() {
        let c = match color {
            CellColor::Black => Mark::Circle.ascii(),
            CellColor::Red => Mark::RedCircle.ascii(),
        };
        let row = &mut rows[i - 1];
        if !row.is_empty() {
            row.push(' ');
        }
        row.push(c);
    }
    rows.into_iter().map(|r| r + "\n").collect()
}

/// Frame points as a triangle: row `u`, column `n - v`; the staircase runs
/// from the top-left corner to the bottom-right one.
fn staircase_ascii(p: &EmbeddedPartition) -> String {
    let n = p.n();
    let on_path: std::collections::BTreeSet<(usize, usize)> =
        staircase_of_partition(p).points().into_iter().collect();
    let mut out = String::new();
    for u in 0..=n {
        let mut line = String::new();
        for col in 0..=n {
            if col > 0 {
                line.push(' ');
            }
            if col < u {
                line.push(' ');
                continue;
            }
            let v = n - col;
            let mark = if on_path.contains(&(u, v)) {
                Mark::OnPath
            } else {
                Mark::of_frame_point(n, u, v)
            };
            line.push(mark.ascii());
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

const SCALE: usize = 20;
const MARGIN: usize = 20;

fn svg_mark(out: &mut String, cx: usize, cy: usize, mark: Mark) {
    let r = 5;
    let (stroke, fill) = match mark {
        Mark::Crossed | Mark::Circle => ("black", "black"),
        Mark::RedCircle | Mark::RedCrossed => ("red", "red"),
        Mark::OnPath => ("blue", "blue"),
    };
    match mark {
        Mark::Crossed | Mark::RedCrossed => {
            let _ = writeln!(
                out,
                r#"<circle cx="{cx}" cy="{cy}" r="{r}" fill="none" stroke="{stroke}"/><path d="M{} {} L{} {} M{} {} L{} {}" stroke="{stroke}"/>"#,
                cx - 4,
                cy - 4,
                cx + 4,
                cy + 4,
                cx - 4,
                cy + 4,
                cx + 4,
                cy - 4
            );
        }
        _ => {
            let _ = writeln!(
                out,
                r#"<circle cx="{cx}" cy="{cy}" r="{r}" fill="{fill}" stroke="{stroke}"/>"#
            );
        }
    }
}

fn svg_document(width: usize, height: usize, body: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n{body}</svg>\n",
        w = width + 2 * MARGIN,
        h = height + 2 * MARGIN
    )
}

fn support_svg(n: usize, enriched: bool, path: Option<&DistancePath>) -> String {
    let max_y = n;
    let px = |x: usize| MARGIN + x * SCALE / 2;
    let py = |y: usize| MARGIN + (max_y - y) * SCALE / 2;
    let mut body = String::new();
    if let Some(p) = path {
        let pts: Vec<String> = p
            .deltas()
            .iter()
            .enumerate()
            .map(|(i, &d)| format!("{},{}", px(2 * i), py(2 * d)))
            .collect();
        let _ = writeln!(
            body,
            r#"<polyline points="{}" fill="none" stroke="blue" stroke-width="2"/>"#,
            pts.join(" ")
        );
    }
    for (x, y, m) in support_points(n, enriched) {
        svg_mark(&mut body, px(x), py(y), m);
    }
    svg_document(n * SCALE, max_y * SCALE / 2, &body)
}

fn frame_svg(n: usize) -> String {
    let mut body = String::new();
    for (i, j, color) in FerrersFrame::new(n).cells() {
        let mark = match color {
            CellColor::Black => Mark::Circle,
            CellColor::Red => Mark::RedCircle,
        };
        svg_mark(
            &mut body,
            MARGIN + (j - 1) * SCALE,
            MARGIN + (i - 1) * SCALE,
            mark,
        );
    }
    svg_document(
        n.saturating_sub(2) * SCALE,
        n.saturating_sub(2) * SCALE,
        &body,
    )
}

fn staircase_svg(p: &EmbeddedPartition) -> String {
    let n = p.n();
    let at = |u: usize, v: usize| (MARGIN + (n - v) * SCALE, MARGIN + u * SCALE);
    let mut body = String::new();
    let pts: Vec<String> = staircase_of_partition(p)
        .points()
        .into_iter()
        .map(|(u, v)| {
            let (x, y) = at(u, v);
            format!("{x},{y}")
        })
        .collect();
    let _ = writeln!(
        body,
        r#"<polyline points="{}" fill="none" stroke="blue" stroke-width="2"/>"#,
        pts.join(" ")
    );
    for u in 0..=n {
        for v in 0..=n - u {
            let (x, y) = at(u, v);
            svg_mark(&mut body, x, y, Mark::of_frame_point(n, u, v));
        }
    }
    svg_document(n * SCALE, n * SCALE, &body)
}

/// Renders `target`; `payload` must already be validated against `n`.
pub fn render(
    target: Target,
    format: Format,
    n: usize,
    payload: &Payload,
) -> Result<String, String> {
    let need_path = || match payload {
        Payload::Path(p) => Ok(p),
        _ => Err("the path target needs a delta vector".to_string()),
    };
    let need_partition = || match payload {
        Payload::Partition(p) => Ok(p),
        _ => Err("the staircase target needs a partition".to_string()),
    };
    Ok(match (target, format) {
        (Target::Support, Format::Ascii) => support_ascii(n, false, None),
        (Target::Support, Format::Svg) => support_svg(n, false, None),
        (Target::Enriched, Format::Ascii) => support_ascii(n, true, None),
        (Target::Enriched, Format::Svg) => support_svg(n, true, None),
        (Target::Frame, Format::Ascii) => frame_ascii(n),
        (Target::Frame, Format::Svg) => frame_svg(n),
        (Target::Path, Format::Ascii) => support_ascii(n, false, Some(need_path()?)),
        (Target::Path, Format::Svg) => support_svg(n, false, Some(need_path()?)),
        (Target::Staircase, Format::Ascii) => staircase_ascii(need_partition()?),
        (Target::Staircase, Format::Svg) => staircase_svg(need_partition()?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(s: &str, c: char) -> usize {
        s.chars().filter(|&x| x == c).count()
    }

    #[test]
    fn frame_rows() {
        let s = render(Target::Frame, Format::Ascii, 4, &Payload::None).unwrap();
        assert_eq!(s, "o * o\n* o\no\n");
    }

    #[test]
    fn enriched_counts() {
        let s = render(Target::Enriched, Format::Ascii, 8, &Payload::None).unwrap();
        assert_eq!(count(&s, 'o'), 16);
        assert_eq!(count(&s, '*'), 12);
        assert_eq!(count(&s, 'x'), 9);
        assert_eq!(count(&s, '+'), 8);
    }

    #[test]
    fn support_shape() {
        let s = render(Target::Support, Format::Ascii, 4, &Payload::None).unwrap();
        assert_eq!(s, "    o\n  o o o\nx x x x x\n");
    }

    #[test]
    fn path_overlay() {
        let p = DistancePath::new(4, vec![0, 1, 1, 1, 0]).unwrap();
        let s = render(Target::Path, Format::Ascii, 4, &Payload::Path(p)).unwrap();
        assert_eq!(
            s,
            "    o\n   \n  o-o-o\n /     \\\nx x x x x\n".replace("   \n", "\n")
        );
    }

    #[test]
    fn staircase_marks() {
        let p = EmbeddedPartition::new(3, vec![1]).unwrap();
        let s = render(Target::Staircase, Format::Ascii, 3, &Payload::Partition(p)).unwrap();
        assert_eq!(count(&s, '#'), 7);
        assert!(render(Target::Staircase, Format::Ascii, 3, &Payload::None).is_err());
    }

    #[test]
    fn svg_is_deterministic() {
        let p = DistancePath::new(5, vec![0, 1, 2, 1, 1, 0]).unwrap();
        let a = render(Target::Path, Format::Svg, 5, &Payload::Path(p.clone())).unwrap();
        let b = render(Target::Path, Format::Svg, 5, &Payload::Path(p)).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("<svg") && a.contains("polyline"));
    }
}

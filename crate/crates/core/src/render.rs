//! Plain-text drawings of growth diagrams.
//!
//! Vertex labels are written as comma-separated parts (`∅` for the empty
//! partition); each matrix entry sits between the four vertices of its
//! square, and zero entries are left blank.

use crate::partition::Partition;

fn label(p: &Partition) -> String {
    if p.is_empty() {
        "∅".to_string()
    } else {
        p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn pad(s: &str, width: usize) -> String {
    let len = s.chars().count();
    format!("{s}{}", " ".repeat(width.saturating_sub(len)))
}

/// Draws a (possibly ragged) array of vertex labels. `vertices[i][j]` may be
/// `None` for vertices outside the diagram; `entry(i, j)` is the entry of
/// the square whose bottom-right vertex is `(i, j)`.
pub fn render_labels(
    vertices: &[Vec<Option<Partition>>],
    entry: impl Fn(usize, usize) -> Option<usize>,
) -> String {
    let width = vertices
        .iter()
        .flatten()
        .flatten()
        .map(|p| label(p).chars().count())
        .max()
        .unwrap_or(1)
        + 3;
    let mut lines = Vec::new();
    for (i, row) in vertices.iter().enumerate() {
        if i > 0 {
            let mut line = " ".repeat(width / 2);
            for j in 1..row.len() {
                let cell = match entry(i, j) {
                    Some(a) if a > 0 => a.to_string(),
                    _ => String::new(),
                };
                line.push_str(&pad(&cell, width));
            }
            lines.push(line.trim_end().to_string());
        }
        let line: String = row
            .iter()
            .map(|v| pad(&v.as_ref().map(label).unwrap_or_default(), width))
            .collect();
        lines.push(line.trim_end().to_string());
    }
    lines.join("\n")
}

/// Draws a full rectangular grid.
pub fn render_grid(vertices: &[Vec<Partition>], entry: impl Fn(usize, usize) -> usize) -> String {
    let wrapped: Vec<Vec<Option<Partition>>> = vertices
        .iter()
        .map(|r| r.iter().cloned().map(Some).collect())
        .collect();
    render_labels(&wrapped, |i, j| Some(entry(i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    #[test]
    fn small_grid() {
        let v = vec![vec![p(&[]), p(&[])], vec![p(&[]), p(&[2, 1])]];
        let s = render_grid(&v, |_, _| 3);
        assert_eq!(s, "∅     ∅\n   3\n∅     2,1");
    }
}

//! Text and SVG renderings of arc diagrams.
//!
//! The text form prints the window values on a base line with arcs stacked
//! above it as `.___.` spans; the family D fork shows the top value on its
//! own line directly above the bottom one. The SVG form draws the same
//! picture with quadratic arcs, the fork opening into two prongs.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arcs::ArcDiagram;
use crate::roots::Family;

/// Column data shared by both renderers: one column per coordinate.
struct Columns {
    /// Rendered label per slot.
    labels: Vec<String>,
    /// Column index per coordinate value (1-based coords).
    col_center: Vec<usize>,
    width: usize,
}

fn columns(d: &ArcDiagram) -> Columns {
    let slots = d.layout().slots();
    let coord_count = slots.iter().map(|s| s.coord).max().unwrap_or(0) as usize;
    let labels: Vec<String> = (0..slots.len())
        .map(|i| format!("{}", d.value_at(i)))
        .collect();
    // Widest label of each coordinate column (the fork stacks two labels).
    let mut col_width = vec![1usize; coord_count];
    for (slot, label) in slots.iter().zip(&labels) {
        let c = (slot.coord - 1) as usize;
        col_width[c] = col_width[c].max(label.len());
    }
    let mut col_center = vec![0usize; coord_count];
    let mut x = 0usize;
    for c in 0..coord_count {
        col_center[c] = x + (col_width[c] - 1) / 2;
        x += col_width[c] + 2;
    }
    Columns {
        labels,
        col_center,
        width: x.saturating_sub(2),
    }
}

fn put(line: &mut Vec<char>, idx: usize, ch: char) {
    if idx >= line.len() {
        line.resize(idx + 1, ' ');
    }
    line[idx] = ch;
}

fn put_str(line: &mut Vec<char>, idx: usize, s: &str) {
    for (k, ch) in s.chars().enumerate() {
        put(line, idx + k, ch);
    }
}

/// Deterministic ASCII rendering.
pub fn render_text(d: &ArcDiagram) -> String {
    let cols = columns(d);
    let slots = d.layout().slots();

    // Arc spans in column space, sorted widest span last for level stacking.
    let mut spans: Vec<(usize, usize)> = d
        .arcs()
        .iter()
        .map(|arc| {
            let [s1, s2] = arc.slots();
            let c1 = cols.col_center[(slots[s1].coord - 1) as usize];
            let c2 = cols.col_center[(slots[s2].coord - 1) as usize];
            (c1.min(c2), c1.max(c2))
        })
        .collect();
    spans.sort_by_key(|&(l, r)| (r - l, l, r));

    // First-fit levels; arcs may share a column only at their endpoints.
    let mut levels: Vec<Vec<(usize, usize)>> = Vec::new();
    for &(l, r) in &spans {
        let fits = |level: &Vec<(usize, usize)>| {
            level
                .iter()
                .all(|&(a, b)| r <= a || b <= l)
        };
        match levels.iter_mut().find(|lev| fits(lev)) {
            Some(level) => level.push((l, r)),
            None => levels.push(vec![(l, r)]),
        }
    }

    let mut out = String::new();
    for level in levels.iter().rev() {
        let mut line: Vec<char> = Vec::with_capacity(cols.width);
        for &(l, r) in level {
            put(&mut line, l, '.');
            for x in l + 1..r {
                put(&mut line, x, '_');
            }
            put(&mut line, r, '.');
        }
        out.push_str(&line.iter().collect::<String>());
        out.push('\n');
    }

    if d.layout().kind().family == Family::D {
        let (top, bottom) = d.layout().fork_slots().expect("family D has a fork");
        let mut top_line: Vec<char> = Vec::new();
        let c = cols.col_center[(slots[top].coord - 1) as usize];
        put_str(&mut top_line, c, &cols.labels[top]);
        out.push_str(&top_line.iter().collect::<String>());
        out.push('\n');
        let mut base: Vec<char> = Vec::new();
        for (i, slot) in slots.iter().enumerate() {
            if i == top {
                continue;
            }
            let c = cols.col_center[(slot.coord - 1) as usize];
            let _ = bottom;
            put_str(&mut base, c, &cols.labels[i]);
        }
        out.push_str(&base.iter().collect::<String>());
        out.push('\n');
    } else {
        let mut base: Vec<char> = Vec::new();
        for (i, slot) in slots.iter().enumerate() {
            let c = cols.col_center[(slot.coord - 1) as usize];
            put_str(&mut base, c, &cols.labels[i]);
        }
        out.push_str(&base.iter().collect::<String>());
        out.push('\n');
    }
    out
}

/// Deterministic SVG rendering; the output is one self-contained `<svg>`
/// element.
pub fn render_svg(d: &ArcDiagram) -> String {
    let slots = d.layout().slots();
    let coord_count = slots.iter().map(|s| s.coord).max().unwrap_or(1) as i64;
    let step = 48i64;
    let margin = 40i64;
    let baseline = 140i64;
    let fork_dy = 22i64;
    let width = margin * 2 + step * (coord_count - 1);
    let height = baseline + 60;

    let x_of = |coord: u32| margin + step * (coord as i64 - 1);
    let is_d = d.layout().kind().family == Family::D;
    let fork = d.layout().fork_slots();
    let y_of = |slot: usize| -> i64 {
        match fork {
            Some((top, _)) if slot == top => baseline - fork_dy,
            Some((_, bottom)) if slot == bottom => baseline + fork_dy,
            _ => baseline,
        }
    };

    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    s.push_str("  <g stroke=\"black\" fill=\"none\">\n");

    // Base line, forked for family D.
    if is_d {
        let (top, bottom) = fork.unwrap();
        let split = x_of(slots[top].coord) - step / 2;
        let rejoin = x_of(slots[top].coord) + step / 2;
        let last = x_of(coord_count as u32);
        s.push_str(&format!(
            "    <path d=\"M {margin} {baseline} H {split} L {} {} L {rejoin} {baseline} H {last}\"/>\n",
            x_of(slots[top].coord),
            baseline - fork_dy
        ));
        s.push_str(&format!(
            "    <path d=\"M {split} {baseline} L {} {} L {rejoin} {baseline}\"/>\n",
            x_of(slots[bottom].coord),
            baseline + fork_dy
        ));
    } else {
        let last = x_of(coord_count as u32);
        s.push_str(&format!("    <path d=\"M {margin} {baseline} H {last}\"/>\n"));
    }

    // Arcs above the line.
    for arc in d.arcs() {
        let [s1, s2] = arc.slots();
        let (x1, y1) = (x_of(slots[s1].coord), y_of(s1));
        let (x2, y2) = (x_of(slots[s2].coord), y_of(s2));
        let span = (x2 - x1).abs().max(step / 2);
        let ctrl_y = (y1.min(y2)) - 18 - span / 4;
        let ctrl_x = (x1 + x2) / 2;
        s.push_str(&format!(
            "    <path d=\"M {x1} {y1} Q {ctrl_x} {ctrl_y} {x2} {y2}\"/>\n"
        ));
    }
    s.push_str("  </g>\n");

    // Slot dots and labels.
    s.push_str("  <g font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">\n");
    for (i, slot) in slots.iter().enumerate() {
        let x = x_of(slot.coord);
        let y = y_of(i);
        s.push_str(&format!(
            "    <circle cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"black\"/>\n"
        ));
        let label_y = if fork.is_some_and(|(top, _)| i == top) {
            y - 8
        } else {
            y + 20
        };
        s.push_str(&format!(
            "    <text x=\"{x}\" y=\"{label_y}\">{}</text>\n",
            d.value_at(i)
        ));
    }
    s.push_str("  </g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{NonNestingPartition, Root, RootSystem, RootSystemKind};
    use crate::weyl::SignedPermutation;

    fn diagram(family: Family, rank: usize, roots: Vec<Root>) -> ArcDiagram {
        let rs = RootSystem::new(RootSystemKind { family, rank }).unwrap();
        let p = NonNestingPartition::new(&rs, roots).unwrap();
        ArcDiagram::new(&rs, &SignedPermutation::identity(rs.kind()), &p).unwrap()
    }

    #[test]
    fn text_bare_line() {
        let d = diagram(Family::A, 2, vec![]);
        assert_eq!(render_text(&d), "1  2  3\n");
    }

    #[test]
    fn text_chain_arcs() {
        let d = diagram(
            Family::A,
            2,
            vec![Root::new(vec![1, -1, 0]), Root::new(vec![0, 1, -1])],
        );
        let s = render_text(&d);
        assert_eq!(s, ".__.__.\n1  2  3\n");
    }

    #[test]
    fn text_fork_layout() {
        let d = diagram(Family::D, 3, vec![Root::new(vec![0, 1, -1])]);
        let s = render_text(&d);
        let lines: Vec<&str> = s.lines().collect();
        // Arc rows, then the top fork value, then the base line.
        assert!(lines.len() >= 3);
        assert!(lines[lines.len() - 2].contains('3'));
        assert!(lines[lines.len() - 1].contains("-3"));
        assert!(s.contains('.'));
    }

    #[test]
    fn svg_is_balanced_and_deterministic() {
        let d = diagram(
            Family::C,
            2,
            vec![Root::new(vec![2, 0])],
        );
        let a = render_svg(&d);
        let b = render_svg(&d);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.trim_end().ends_with("</svg>"));
        assert_eq!(a.matches("<g").count(), a.matches("</g>").count());
        // One base line plus one arc.
        assert_eq!(a.matches("<path").count(), 2);
    }
}

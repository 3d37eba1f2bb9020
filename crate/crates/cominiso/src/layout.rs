//! Display layouts: each poset drawn as boxes in rows, partial order given
//! by "weakly north-west".
//!
//! The box shapes are data, one table per family with the rank as parameter.
//! The order used for computation is always the root-theoretic one; the
//! layout only assigns a box to each element, via an order isomorphism onto
//! the north-west order. Construction fails loudly if the shapes ever
//! disagree with the root order.

use crate::comin_poset::{CominPoset, Ideal};
use crate::labeled_poset::LabeledPoset;
use crate::root_system::{Family, LengthClass};

/// A box per poset element, `(row, col)` 1-based, north-west order.
#[derive(Debug, Clone)]
pub struct Layout {
    boxes: Vec<(usize, usize)>,
}

impl Layout {
    /// Lays out `p` according to its family's shape table. The shapes carry
    /// the prescribed short-box positions, so the assignment is forced to
    /// respect both the order and the labels.
    pub fn of(p: &CominPoset) -> Layout {
        let t = p.root_system().dynkin_type();
        let shape = shape_boxes(t.family(), t.rank(), p.gamma());
        assert_eq!(shape.len(), p.len(), "shape table size mismatch for {t}");

        // North-west order on the boxes.
        let n = shape.len();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = shape[a].0 <= shape[b].0 && shape[a].1 <= shape[b].1;
            }
        }
        let box_labels = shape
            .iter()
            .map(|&b| box_label(t.family(), t.rank(), b))
            .collect();
        let box_poset = LabeledPoset::new(n, leq, box_labels);
        let element_poset = LabeledPoset::from_ideal(p, p.full_ideal());
        let map = element_poset
            .find_isomorphism(&box_poset)
            .expect("layout shape must realize the root order and labels");
        Layout {
            boxes: map.into_iter().map(|b| shape[b]).collect(),
        }
    }

    pub fn box_of(&self, e: usize) -> (usize, usize) {
        self.boxes[e]
    }

    pub fn element_at(&self, row: usize, col: usize) -> Option<usize> {
        self.boxes.iter().position(|&b| b == (row, col))
    }

    /// Builds an ideal from box coordinates; panics on unknown boxes.
    pub fn ideal_from_boxes(
        &self,
        p: &CominPoset,
        boxes: &[(usize, usize)],
    ) -> crate::error::Result<Ideal> {
        let indices: Vec<usize> = boxes
            .iter()
            .map(|&(r, c)| self.element_at(r, c).expect("box not in layout"))
            .collect();
        p.ideal_from_indices(&indices)
    }

    /// Text rendering: one bracketed cell per box, annotated with the
    /// element index, `s` for short roots, and `*` for ideal members.
    pub fn render(&self, p: &CominPoset, ideal: Option<Ideal>) -> String {
        let max_row = self.boxes.iter().map(|b| b.0).max().unwrap_or(0);
        let max_col = self.boxes.iter().map(|b| b.1).max().unwrap_or(0);
        let cell_inner = format!("{}", p.len().saturating_sub(1)).len()
            + 1
            + usize::from(ideal.is_some());
        let mut out = String::new();
        for row in 1..=max_row {
            let mut line = String::new();
            for col in 1..=max_col {
                match self.element_at(row, col) {
                    Some(e) => {
                        let short = if p.label(e) == LengthClass::Short { "s" } else { "" };
                        let member = match ideal {
                            Some(i) if i.contains(e) => "*",
                            Some(_) => " ",
                            None => "",
                        };
                        let body = format!("{e}{short}{member}");
                        line.push_str(&format!("[{body:<cell_inner$}]"));
                    }
                    None => {
                        line.push_str(&" ".repeat(cell_inner + 2));
                    }
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Hasse diagram of the ideal's induced subposet in DOT format, short
/// elements annotated.
pub fn render_dot(p: &CominPoset, ideal: Ideal) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for e in ideal.indices() {
        let root = p.element(e);
        match p.label(e) {
            LengthClass::Short => out.push_str(&format!(
                "  n{e} [label=\"{e} {root} (s)\", shape=box];\n"
            )),
            LengthClass::Long => {
                out.push_str(&format!("  n{e} [label=\"{e} {root}\"];\n"))
            }
        }
    }
    for &(a, b) in p.covers() {
        if ideal.contains(a) && ideal.contains(b) {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
    }
    out.push_str("}\n");
    out
}

/// Short boxes: the middle of the odd-quadric chain, and everything
/// strictly above the diagonal of the Lagrangian staircase.
fn box_label(family: Family, rank: usize, (row, col): (usize, usize)) -> LengthClass {
    match family {
        Family::B if (row, col) == (1, rank) => LengthClass::Short,
        Family::C if col > row => LengthClass::Short,
        _ => LengthClass::Long,
    }
}

fn shape_boxes(family: Family, rank: usize, gamma: usize) -> Vec<(usize, usize)> {
    let mut boxes = Vec::new();
    match family {
        Family::A => {
            for r in 1..=gamma {
                for c in 1..=(rank + 1 - gamma) {
                    boxes.push((r, c));
                }
            }
        }
        Family::B => {
            for c in 1..=(2 * rank - 1) {
                boxes.push((1, c));
            }
        }
        Family::C => {
            for r in 1..=rank {
                for c in r..=rank {
                    boxes.push((r, c));
                }
            }
        }
        Family::D if gamma == 1 => {
            for c in 1..=(rank - 1) {
                boxes.push((1, c));
            }
            for c in (rank - 2)..=(2 * rank - 4) {
                boxes.push((2, c));
            }
        }
        Family::D => {
            for r in 1..=(rank - 1) {
                for c in r..=(rank - 1) {
                    boxes.push((r, c));
                }
            }
        }
        Family::E if rank == 6 => {
            for &(r, lo, hi) in &[(1, 1, 4), (2, 3, 6), (3, 3, 6), (4, 5, 8)] {
                for c in lo..=hi {
                    boxes.push((r, c));
                }
            }
        }
        Family::E => {
            for &(r, lo, hi) in &[
                (1, 1, 6),
                (2, 4, 6),
                (3, 5, 7),
                (4, 5, 9),
                (5, 5, 9),
                (6, 8, 9),
                (7, 9, 9),
                (8, 9, 9),
                (9, 9, 9),
            ] {
                for c in lo..=hi {
                    boxes.push((r, c));
                }
            }
        }
    }
    boxes
}

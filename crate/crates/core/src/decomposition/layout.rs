//! Index layouts of the spinspaces `S ∪ Ṡ` and `S ⊕ Ṡ`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LayoutKind {
    Union,
    DirectSum,
}

/// One cell: a paired `[first, second]` label for unions, a single label
/// for direct sums, or empty off the diagonal blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Pair(String, String),
    Single(String),
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinspaceLayout {
    pub kind: LayoutKind,
    pub rank: usize,
    pub cells: Vec<Vec<Cell>>,
}

const DOT: char = '\u{307}';

fn undotted(row: usize, col: usize, bits: usize) -> String {
    format!("{row:0bits$b}{col:0bits$b}")
}

fn dotted(label: &str) -> String {
    label.chars().flat_map(|c| [c, DOT]).collect()
}

pub fn spinspace_layout(rank: usize, kind: LayoutKind) -> Result<SpinspaceLayout> {
    let bits = match rank {
        2 => 1,
        4 => 2,
        r => return Err(Error::UnsupportedRank(r)),
    };
    let cells = match kind {
        LayoutKind::Union => (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let u = undotted(i, j, bits);
                        let d = dotted(&u);
                        Cell::Pair(u, d)
                    })
                    .collect()
            })
            .collect(),
        LayoutKind::DirectSum => (0..2 * rank)
            .map(|i| {
                (0..2 * rank)
                    .map(|j| match (i < rank, j < rank) {
                        (true, true) => Cell::Single(undotted(i, j, bits)),
                        (false, false) => Cell::Single(dotted(&undotted(i - rank, j - rank, bits))),
                        _ => Cell::Empty,
                    })
                    .collect()
            })
            .collect(),
    };
    Ok(SpinspaceLayout { kind, rank, cells })
}

impl SpinspaceLayout {
    /// Action of coefficient conjugation: exchanges dotted and undotted
    /// labels (pairs swap order, direct-sum blocks swap places).
    pub fn conjugated(&self) -> Self {
        let cells = match self.kind {
            LayoutKind::Union => self
                .cells
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| match c {
                            Cell::Pair(a, b) => Cell::Pair(b.clone(), a.clone()),
                            other => other.clone(),
                        })
                        .collect()
                })
                .collect(),
            LayoutKind::DirectSum => {
                let r = self.rank;
                (0..2 * r)
                    .map(|i| {
                        (0..2 * r)
                            .map(|j| self.cells[(i + r) % (2 * r)][(j + r) % (2 * r)].clone())
                            .collect()
                    })
                    .collect()
            }
        };
        Self {
            kind: self.kind,
            rank: self.rank,
            cells,
        }
    }

    pub fn render_text(&self) -> String {
        let text = |c: &Cell| match c {
            Cell::Pair(a, b) => format!("[{a},{b}]"),
            Cell::Single(a) => a.clone(),
            Cell::Empty => ".".into(),
        };
        let width = self
            .cells
            .iter()
            .flatten()
            .map(|c| text(c).chars().count())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in &self.cells {
            let line: Vec<String> = row
                .iter()
                .map(|c| {
                    let t = text(c);
                    let pad = width - t.chars().count();
                    format!("{t}{}", " ".repeat(pad))
                })
                .collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: &str, b: &str) -> Cell {
        Cell::Pair(a.into(), b.into())
    }

    #[test]
    fn rank_two_union() {
        let l = spinspace_layout(2, LayoutKind::Union).unwrap();
        let d = |s: &str| dotted(s);
        assert_eq!(
            l.cells,
            vec![
                vec![pair("00", &d("00")), pair("01", &d("01"))],
                vec![pair("10", &d("10")), pair("11", &d("11"))]
            ]
        );
    }

    #[test]
    fn rank_two_direct_sum_is_block_diagonal() {
        let l = spinspace_layout(2, LayoutKind::DirectSum).unwrap();
        assert_eq!(l.cells.len(), 4);
        assert_eq!(l.cells[0][0], Cell::Single("00".into()));
        assert_eq!(l.cells[1][1], Cell::Single("11".into()));
        assert_eq!(l.cells[0][2], Cell::Empty);
        assert_eq!(l.cells[2][2], Cell::Single(dotted("00")));
        assert_eq!(l.cells[3][2], Cell::Single(dotted("10")));
    }

    #[test]
    fn rank_four_union_row_major_binary() {
        let l = spinspace_layout(4, LayoutKind::Union).unwrap();
        assert_eq!(l.cells[0][3], pair("0011", &dotted("0011")));
        assert_eq!(l.cells[2][1], pair("1001", &dotted("1001")));
        assert_eq!(l.cells[3][3], pair("1111", &dotted("1111")));
    }

    #[test]
    fn conjugation_swaps_pair_order() {
        let l = spinspace_layout(2, LayoutKind::Union).unwrap();
        let c = l.conjugated();
        assert_eq!(c.cells[0][1], pair(&dotted("01"), "01"));
        assert_eq!(c.conjugated(), l);
        let ds = spinspace_layout(2, LayoutKind::DirectSum).unwrap();
        assert_eq!(ds.conjugated().cells[0][0], Cell::Single(dotted("00")));
    }

    #[test]
    fn unsupported_rank() {
        assert_eq!(
            spinspace_layout(3, LayoutKind::Union),
            Err(Error::UnsupportedRank(3))
        );
    }

    #[test]
    fn text_rendering() {
        let t = spinspace_layout(2, LayoutKind::Union)
            .unwrap()
            .render_text();
        assert_eq!(t.lines().count(), 2);
        assert!(t.starts_with("[00,"));
    }
}

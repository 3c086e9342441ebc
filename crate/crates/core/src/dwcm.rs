//! Difference weighted circuit matrix.
//!
//! For a spanning tree `t`, rows are the chords (edges outside `t`) and
//! columns the branches (edges of `t`), both in increasing id order. Cell
//! `(c, b)` is present iff branch `b` lies on the cycle that chord `c` closes
//! in `t`, and then holds `w(c) - w(b)`: the change in tree weight from
//! swapping `b` out for `c`. Cells off the cycle are [`Cell::Absent`], which is
//! kept distinct from a present zero so equal-weight swaps stay visible.

use std::fmt::{self, Write as _};

use crate::cycle::RootedTree;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, SpanningTree};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell<W> {
    Absent,
    Present(W),
}

impl<W: Copy> Cell<W> {
    pub fn delta(self) -> Option<W> {
        match self {
            Cell::Absent => None,
            Cell::Present(d) => Some(d),
        }
    }
}

/// Swap `branch` out of a tree and `chord` in; the tree weight changes by `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exchange<W> {
    pub chord: EdgeId,
    pub branch: EdgeId,
    pub delta: W,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dwcm<W> {
    tree: SpanningTree<W>,
    branches: Vec<EdgeId>,
    chords: Vec<EdgeId>,
    /// Row-major, `chords.len() * branches.len()`.
    cells: Vec<Cell<W>>,
}

/// Builds the matrix of `t`, which must be a spanning tree of `g`.
pub fn build_dwcm<W: Weight>(g: &Graph<W>, t: &SpanningTree<W>) -> Result<Dwcm<W>> {
    let checked = g.spanning_tree(t.edge_ids().iter().copied())?;
    if checked.weight() != t.weight() {
        return Err(Error::NotSpanningTree(format!(
            "cached weight {} differs from edge sum {}",
            t.weight(),
            checked.weight()
        )));
    }
    Ok(Dwcm::build_unchecked(g, t))
}

impl<W: Weight> Dwcm<W> {
    pub(crate) fn build_unchecked(g: &Graph<W>, t: &SpanningTree<W>) -> Self {
        let branches = t.edge_ids().to_vec();
        let chords: Vec<EdgeId> = t.chords(g).collect();

        let mut column = vec![usize::MAX; g.edge_count()];
        for (j, b) in branches.iter().enumerate() {
            column[b.index()] = j;
        }

        let rooted = RootedTree::new(g, t);
        let mut cells = vec![Cell::Absent; chords.len() * branches.len()];
        for (i, &c) in chords.iter().enumerate() {
            let e = g.edge(c);
            let row = &mut cells[i * branches.len()..(i + 1) * branches.len()];
            for b in rooted.path(e.u, e.v) {
                row[column[b.index()]] = Cell::Present(e.weight - g.weight(b));
            }
        }

        Dwcm {
            tree: t.clone(),
            branches,
            chords,
            cells,
        }
    }

    pub fn tree(&self) -> &SpanningTree<W> {
        &self.tree
    }

    /// Column heads.
    pub fn branches(&self) -> &[EdgeId] {
        &self.branches
    }

    /// Row heads.
    pub fn chords(&self) -> &[EdgeId] {
        &self.chords
    }

    /// `(rows, columns)`, i.e. `(m - n + 1, n - 1)`.
    pub fn dimensions(&self) -> (usize, usize) {
        (self.chords.len(), self.branches.len())
    }

    pub fn cell(&self, row: usize, col: usize) -> Cell<W> {
        self.cells[row * self.branches.len() + col]
    }

    pub fn row(&self, row: usize) -> &[Cell<W>] {
        let w = self.branches.len();
        &self.cells[row * w..(row + 1) * w]
    }

    /// Looks a cell up by its head edges; `None` if either is not a head.
    pub fn cell_at(&self, chord: EdgeId, branch: EdgeId) -> Option<Cell<W>> {
        let i = self.chords.binary_search(&chord).ok()?;
        let j = self.branches.binary_search(&branch).ok()?;
        Some(self.cell(i, j))
    }

    /// Every present cell as an exchange, in row-major order.
    pub fn exchanges(&self) -> impl Iterator<Item = Exchange<W>> + '_ {
        self.chords.iter().enumerate().flat_map(move |(i, &chord)| {
            self.row(i)
                .iter()
                .zip(&self.branches)
                .filter_map(move |(cell, &branch)| {
                    cell.delta().map(|delta| Exchange {
                        chord,
                        branch,
                        delta,
                    })
                })
        })
    }

    /// The present cell with the smallest strictly positive delta, ties to
    /// the smaller `(chord, branch)`.
    pub fn min_positive_cell(&self) -> Option<Exchange<W>> {
        self.exchanges()
            .filter(|x| x.delta > W::zero())
            .min_by_key(|x| (x.delta, x.chord, x.branch))
    }

    /// Present cells with positive delta (and zero delta when `include_zero`),
    /// ordered by `(delta, chord, branch)`.
    pub fn list_exchanges(&self, include_zero: bool) -> Vec<Exchange<W>> {
        let mut out: Vec<_> = self
            .exchanges()
            .filter(|x| x.delta > W::zero() || (include_zero && x.delta == W::zero()))
            .collect();
        out.sort_by_key(|x| (x.delta, x.chord, x.branch));
        out
    }

    /// Applies an exchange taken from this matrix.
    pub(crate) fn apply(&self, x: &Exchange<W>) -> SpanningTree<W> {
        SpanningTree::from_parts(
            self.tree.key().swapped(x.branch, x.chord),
            self.tree.weight() + x.delta,
        )
    }

    /// Text table: branch columns and chord rows headed `id:weight`, absent
    /// cells as `.`.
    pub fn render(&self, g: &Graph<W>) -> String {
        let head = |id: EdgeId| format!("{}:{}", id.index(), g.weight(id));
        let col_heads: Vec<String> = self.branches.iter().map(|&b| head(b)).collect();
        let row_heads: Vec<String> = self.chords.iter().map(|&c| head(c)).collect();
        let body: Vec<Vec<String>> = (0..self.chords.len())
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|c| c.delta().map_or_else(|| ".".to_string(), |d| d.to_string()))
                    .collect()
            })
            .collect();

        let head_width = row_heads.iter().map(String::len).max().unwrap_or(0);
        let width = col_heads
            .iter()
            .chain(body.iter().flatten())
            .map(String::len)
            .max()
            .unwrap_or(1);

        let mut out = String::new();
        let _ = writeln!(
            out,
            "# tree weight {} edges {}",
            self.tree.weight(),
            self.tree.key()
        );
        let _ = write!(out, "{:head_width$}", "");
        for h in &col_heads {
            let _ = write!(out, "  {h:>width$}");
        }
        out.push('\n');
        for (rh, row) in row_heads.iter().zip(&body) {
            let _ = write!(out, "{rh:>head_width$}");
            for v in row {
                let _ = write!(out, "  {v:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

impl<W: Weight> fmt::Display for Exchange<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "+{} -{} ({})", self.chord, self.branch, self.delta)
    }
}

/// Replaces `x.branch` by `x.chord` in `t`.
///
/// Fails unless the branch is in `t`, the chord is not, the branch lies on
/// the chord's fundamental cycle and `x.delta == w(chord) - w(branch)`.
pub fn apply_exchange<W: Weight>(
    g: &Graph<W>,
    t: &SpanningTree<W>,
    x: &Exchange<W>,
) -> Result<SpanningTree<W>> {
    for id in [x.chord, x.branch] {
        if id.index() >= g.edge_count() {
            return Err(Error::InvalidExchange(format!("unknown edge {id}")));
        }
    }
    if !t.contains(x.branch) {
        return Err(Error::InvalidExchange(format!(
            "{} is not a branch",
            x.branch
        )));
    }
    if t.contains(x.chord) {
        return Err(Error::InvalidExchange(format!(
            "{} is not a chord",
            x.chord
        )));
    }
    let e = g.edge(x.chord);
    if !RootedTree::new(g, t).path(e.u, e.v).contains(&x.branch) {
        return Err(Error::InvalidExchange(format!(
            "{} is not on the cycle of {}",
            x.branch, x.chord
        )));
    }
    if x.delta != g.weight(x.chord) - g.weight(x.branch) {
        return Err(Error::InvalidExchange(format!(
            "delta {} does not match the weight difference",
            x.delta
        )));
    }
    Ok(SpanningTree::from_parts(
        t.key().swapped(x.branch, x.chord),
        t.weight() + x.delta,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mst::kruskal_mst;

    fn ids(xs: &[usize]) -> Vec<EdgeId> {
        xs.iter().map(|&x| EdgeId(x)).collect()
    }

    fn k3() -> Graph<i64> {
        Graph::new(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap()
    }

    #[test]
    fn triangle_matrix() {
        let g = k3();
        let t = kruskal_mst(&g).unwrap();
        let d = build_dwcm(&g, &t).unwrap();
        assert_eq!(d.dimensions(), (1, 2));
        assert_eq!(d.chords(), &ids(&[2]));
        assert_eq!(d.row(0), &[Cell::Present(2), Cell::Present(1)]);
        assert_eq!(
            d.list_exchanges(false),
            vec![
                Exchange {
                    chord: EdgeId(2),
                    branch: EdgeId(1),
                    delta: 1
                },
                Exchange {
                    chord: EdgeId(2),
                    branch: EdgeId(0),
                    delta: 2
                },
            ]
        );
        assert_eq!(d.min_positive_cell().unwrap().delta, 1);
    }

    #[test]
    fn off_cycle_is_absent() {
        let g = Graph::new(4, [(0, 1, 1i64), (0, 2, 1), (0, 3, 9), (1, 2, 4)]).unwrap();
        let t = g.spanning_tree(ids(&[0, 1, 2])).unwrap();
        let d = build_dwcm(&g, &t).unwrap();
        assert_eq!(d.cell_at(EdgeId(3), EdgeId(2)), Some(Cell::Absent));
        assert_eq!(d.cell_at(EdgeId(3), EdgeId(0)), Some(Cell::Present(3)));
        assert_eq!(d.cell_at(EdgeId(0), EdgeId(1)), None);
    }

    #[test]
    fn chord_five_against_branch_six_is_minus_one() {
        let g = Graph::new(3, [(0, 1, 6i64), (1, 2, 0), (0, 2, 5)]).unwrap();
        let t = g.spanning_tree(ids(&[0, 1])).unwrap();
        let d = build_dwcm(&g, &t).unwrap();
        assert_eq!(d.cell_at(EdgeId(2), EdgeId(0)), Some(Cell::Present(-1)));
    }

    #[test]
    fn filters() {
        // chord 3 (w 4) closes a cycle over branches of weight 5, 4 and 1
        let g = Graph::new(4, [(0, 1, 5i64), (1, 2, 4), (2, 3, 1), (3, 0, 4)]).unwrap();
        let t = g.spanning_tree(ids(&[0, 1, 2])).unwrap();
        let d = build_dwcm(&g, &t).unwrap();
        let deltas = |v: Vec<Exchange<i64>>| v.into_iter().map(|x| x.delta).collect::<Vec<_>>();
        assert_eq!(deltas(d.list_exchanges(true)), vec![0, 3]);
        assert_eq!(deltas(d.list_exchanges(false)), vec![3]);
    }

    #[test]
    fn no_positive_cell() {
        let tree_only = Graph::new(3, [(0, 1, 1i64), (1, 2, 2)]).unwrap();
        let t = kruskal_mst(&tree_only).unwrap();
        let d = build_dwcm(&tree_only, &t).unwrap();
        assert_eq!(d.dimensions(), (0, 2));
        assert_eq!(d.min_positive_cell(), None);

        let g = Graph::new(2, [(0, 1, 3i64), (0, 1, 1)]).unwrap();
        let heavy = g.spanning_tree(ids(&[0])).unwrap();
        let d = build_dwcm(&g, &heavy).unwrap();
        assert_eq!(d.min_positive_cell(), None);
    }

    #[test]
    fn positive_ties_break_by_chord_then_branch() {
        let g = Graph::new(3, [(0, 1, 1i64), (1, 2, 1), (0, 2, 2), (0, 2, 2)]).unwrap();
        let t = kruskal_mst(&g).unwrap();
        let d = build_dwcm(&g, &t).unwrap();
        assert_eq!(
            d.min_positive_cell(),
            Some(Exchange {
                chord: EdgeId(2),
                branch: EdgeId(0),
                delta: 1
            })
        );
    }

    #[test]
    fn rejects_tree_from_another_graph() {
        let g = k3();
        let other = Graph::new(3, [(0, 1, 1i64), (0, 2, 2), (0, 2, 7)]).unwrap();
        // edges 0 and 2 also form a tree of g, but of a different weight
        let t = other.spanning_tree(ids(&[0, 2])).unwrap();
        assert!(matches!(build_dwcm(&g, &t), Err(Error::NotSpanningTree(_))));

        let parallel = Graph::new(3, [(0, 1, 1i64), (0, 1, 2), (1, 2, 3)]).unwrap();
        let t = k3().spanning_tree(ids(&[0, 1])).unwrap();
        assert!(matches!(
            build_dwcm(&parallel, &t),
            Err(Error::NotSpanningTree(_))
        ));
    }

    #[test]
    fn apply_on_triangle() {
        let g = k3();
        let t = kruskal_mst(&g).unwrap();
        let x = Exchange {
            chord: EdgeId(2),
            branch: EdgeId(1),
            delta: 1,
        };
        let next = apply_exchange(&g, &t, &x).unwrap();
        assert_eq!(next.edge_ids(), &ids(&[0, 2]));
        assert_eq!(next.weight(), 4);
    }

    #[test]
    fn apply_rejects_bad_exchanges() {
        let g = Graph::new(4, [(0, 1, 1i64), (0, 2, 1), (0, 3, 1), (1, 2, 1)]).unwrap();
        let t = g.spanning_tree(ids(&[0, 1, 2])).unwrap();
        let bad = [
            Exchange {
                chord: EdgeId(3),
                branch: EdgeId(2),
                delta: 0,
            },
            Exchange {
                chord: EdgeId(0),
                branch: EdgeId(1),
                delta: 0,
            },
            Exchange {
                chord: EdgeId(3),
                branch: EdgeId(3),
                delta: 0,
            },
            Exchange {
                chord: EdgeId(3),
                branch: EdgeId(0),
                delta: 5,
            },
            Exchange {
                chord: EdgeId(9),
                branch: EdgeId(0),
                delta: 0,
            },
        ];
        for x in bad {
            assert!(
                matches!(apply_exchange(&g, &t, &x), Err(Error::InvalidExchange(_))),
                "{x}"
            );
        }
    }

    #[test]
    fn render_marks_absent_cells() {
        let g = Graph::new(4, [(0, 1, 1i64), (0, 2, 1), (0, 3, 9), (1, 2, 4)]).unwrap();
        let t = g.spanning_tree(ids(&[0, 1, 2])).unwrap();
        let text = build_dwcm(&g, &t).unwrap().render(&g);
        assert_eq!(
            text,
            "# tree weight 11 edges 0,1,2\n     0:1  1:1  2:9\n3:4    3    3    .\n"
        );
    }
}

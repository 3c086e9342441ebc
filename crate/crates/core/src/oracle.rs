//! Ground truth for small graphs: exhaustive enumeration by
//! contraction–deletion and counting by the matrix-tree theorem.
//!
//! Nothing here touches the DWCM or the enumerator.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::enumerator::RankedTree;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, SpanningTree};
use crate::union_find::UnionFind;
use crate::weight::Weight;

/// Largest tree count the exhaustive oracle will attempt.
pub const TREE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone)]
pub struct OracleResult<W> {
    pub trees: Vec<SpanningTree<W>>,
    pub count: BigUint,
}

/// Both oracle computations together.
pub fn oracle<W: Weight>(g: &Graph<W>) -> Result<OracleResult<W>> {
    let count = kirchhoff_count(g);
    let trees = all_spanning_trees(g)?;
    Ok(OracleResult { trees, count })
}

/// Number of spanning trees, as the determinant of the Laplacian with the
/// last row and column removed. Parallel edges count with multiplicity;
/// weights are ignored. Zero for a disconnected graph.
pub fn kirchhoff_count<W: Weight>(g: &Graph<W>) -> BigUint {
    let size = g.vertex_count().saturating_sub(1);
    let mut minor = vec![vec![BigInt::zero(); size]; size];
    for e in g.edges() {
        let (u, v) = (e.u.index(), e.v.index());
        if u < size {
            minor[u][u] += 1;
        }
        if v < size {
            minor[v][v] += 1;
        }
        if u < size && v < size {
            minor[u][v] -= 1;
            minor[v][u] -= 1;
        }
    }
    determinant(minor)
        .abs()
        .to_biguint()
        .expect("absolute value is nonnegative")
}

/// Bareiss fraction-free elimination; every division is exact.
fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let size = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..size {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..size).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if size == 0 {
        BigInt::one()
    } else {
        a[size - 1][size - 1].clone()
    };
    if negate {
        -det
    } else {
        det
    }
}

/// Every spanning tree exactly once, branching on edges in id order: either
/// contract the edge (it joins the tree) or delete it. Refuses graphs with
/// more than [`TREE_LIMIT`] trees.
pub fn all_spanning_trees<W: Weight>(g: &Graph<W>) -> Result<Vec<SpanningTree<W>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let count = kirchhoff_count(g);
    if count > BigUint::from(TREE_LIMIT) {
        return Err(Error::TooManyTrees {
            count,
            limit: TREE_LIMIT,
        });
    }

    let mut search = Search {
        g,
        chosen: Vec::new(),
        out: Vec::new(),
    };
    search.recurse(0, (0..g.vertex_count()).collect());
    Ok(search.out)
}

struct Search<'a, W> {
    g: &'a Graph<W>,
    chosen: Vec<EdgeId>,
    out: Vec<SpanningTree<W>>,
}

impl<W: Weight> Search<'_, W> {
    /// `label[v]` names the contracted super-vertex containing `v`.
    fn recurse(&mut self, next: usize, label: Vec<usize>) {
        let n = self.g.vertex_count();
        if self.chosen.len() + 1 == n {
            let tree = self.g.spanning_tree(self.chosen.iter().copied());
            self.out
                .push(tree.expect("contraction keeps the chosen edges acyclic"));
            return;
        }
        if !self.still_connected(next, &label) {
            return;
        }
        let e = self.g.edge(EdgeId(next));
        let (a, b) = (label[e.u.index()], label[e.v.index()]);
        if a != b {
            let contracted = label.iter().map(|&x| if x == b { a } else { x }).collect();
            self.chosen.push(e.id);
            self.recurse(next + 1, contracted);
            self.chosen.pop();
        }
        self.recurse(next + 1, label);
    }

    /// Whether the edges from `next` on still connect the super-vertices.
    fn still_connected(&self, next: usize, label: &[usize]) -> bool {
        let n = self.g.vertex_count();
        let mut uf = UnionFind::new(n);
        for (v, &l) in label.iter().enumerate() {
            uf.union(v, l);
        }
        for e in &self.g.edges()[next..] {
            uf.union(e.u.index(), e.v.index());
        }
        uf.components() == 1
    }
}

/// The naive baseline: all trees, sorted by `(weight, key)` and ranked from 1.
pub fn sorted_reference<W: Weight>(g: &Graph<W>) -> Result<Vec<RankedTree<W>>> {
    let mut trees = all_spanning_trees(g)?;
    trees.sort_by(|a, b| (a.weight(), a.key()).cmp(&(b.weight(), b.key())));
    Ok(trees
        .into_iter()
        .enumerate()
        .map(|(i, tree)| RankedTree { rank: i + 1, tree })
        .collect())
}

//! Tree-path queries: the branches on the fundamental cycle of a chord.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, SpanningTree, VertexId};
use crate::weight::Weight;

/// A spanning tree rooted at vertex 0, answering path queries by walking
/// both endpoints up to their common ancestor.
#[derive(Debug, Clone)]
pub struct RootedTree {
    parent: Vec<Option<(VertexId, EdgeId)>>,
    depth: Vec<usize>,
}

impl RootedTree {
    pub fn new<W: Weight>(g: &Graph<W>, t: &SpanningTree<W>) -> Self {
        let n = g.vertex_count();
        let mut adjacency = vec![Vec::new(); n];
        for &id in t.edge_ids() {
            let e = g.edge(id);
            adjacency[e.u.index()].push((e.v, id));
            adjacency[e.v.index()].push((e.u, id));
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut visited = vec![false; n];
        let mut stack = vec![VertexId(0)];
        visited[0] = true;
        while let Some(x) = stack.pop() {
            for &(y, id) in &adjacency[x.index()] {
                if !visited[y.index()] {
                    visited[y.index()] = true;
                    parent[y.index()] = Some((x, id));
                    depth[y.index()] = depth[x.index()] + 1;
                    stack.push(y);
                }
            }
        }
        RootedTree { parent, depth }
    }

    /// Tree edges on the path between `a` and `b`, unordered.
    pub fn path(&self, mut a: VertexId, mut b: VertexId) -> Vec<EdgeId> {
        let mut edges = Vec::new();
        while a != b {
            let climb = if self.depth[a.index()] >= self.depth[b.index()] {
                &mut a
            } else {
                &mut b
            };
            let (up, id) = self.parent[climb.index()].expect("non-root vertex has a parent");
            edges.push(id);
            *climb = up;
        }
        edges
    }
}

/// The branches of `t` on the cycle closed by adding `chord`, sorted by id.
pub fn fundamental_cycle<W: Weight>(
    g: &Graph<W>,
    t: &SpanningTree<W>,
    chord: EdgeId,
) -> Result<Vec<EdgeId>> {
    if t.contains(chord) {
        return Err(Error::ChordInTree(chord));
    }
    let e = g.edge(chord);
    let mut branches = RootedTree::new(g, t).path(e.u, e.v);
    branches.sort_unstable();
    Ok(branches)
}

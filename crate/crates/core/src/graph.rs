//! Undirected weighted multigraphs and their spanning trees.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::union_find::UnionFind;
use crate::weight::{self, Weight};

/// Dense 0-based vertex index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

/// Edge index, assigned by input order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge<W> {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub weight: W,
}

impl<W> Edge<W> {
    /// The endpoint opposite `x`. Assumes `x` is an endpoint.
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Vertex count plus an immutable edge list.
///
/// Parallel edges are allowed, self-loops are not. Connectivity is not
/// enforced at construction so that disconnected input can still be counted
/// (it has zero spanning trees); the operations that need a connected graph
/// report [`Error::Disconnected`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph<W> {
    n: usize,
    edges: Vec<Edge<W>>,
}

impl<W: Weight> Graph<W> {
    /// Builds a graph from `(u, v, weight)` triples; edge ids follow iteration order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, W)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(i, (u, v, weight))| {
                let id = EdgeId(i);
                for x in [u, v] {
                    if x >= n {
                        return Err(Error::VertexRange {
                            edge: id,
                            vertex: VertexId(x),
                            n,
                        });
                    }
                }
                if u == v {
                    return Err(Error::SelfLoop { edge: id });
                }
                Ok(Edge {
                    id,
                    u: VertexId(u),
                    v: VertexId(v),
                    weight,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Graph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge<W>] {
        &self.edges
    }

    /// # Panics
    /// If `id` is not an edge of this graph.
    pub fn edge(&self, id: EdgeId) -> &Edge<W> {
        &self.edges[id.0]
    }

    pub fn weight(&self, id: EdgeId) -> W {
        self.edges[id.0].weight
    }

    /// True iff a traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let mut adjacency = vec![Vec::new(); self.n];
        for e in &self.edges {
            adjacency[e.u.0].push(e.v.0);
            adjacency[e.v.0].push(e.u.0);
        }
        let mut visited = vec![false; self.n];
        let mut stack = vec![0];
        visited[0] = true;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &y in &adjacency[x] {
                if !visited[y] {
                    visited[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        reached == self.n
    }

    /// Validates `edge_ids` as a spanning tree of this graph and computes its weight.
    pub fn spanning_tree(
        &self,
        edge_ids: impl IntoIterator<Item = EdgeId>,
    ) -> Result<SpanningTree<W>> {
        let mut ids: Vec<EdgeId> = edge_ids.into_iter().collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotSpanningTree(format!(
                "edge {} listed twice",
                w[0]
            )));
        }
        if let Some(bad) = ids.iter().find(|id| id.0 >= self.edges.len()) {
            return Err(Error::NotSpanningTree(format!("unknown edge {bad}")));
        }
        if ids.len() + 1 != self.n {
            return Err(Error::NotSpanningTree(format!(
                "{} edges, expected {}",
                ids.len(),
                self.n - 1
            )));
        }
        let mut uf = UnionFind::new(self.n);
        for &id in &ids {
            let e = self.edge(id);
            if !uf.union(e.u.0, e.v.0) {
                return Err(Error::NotSpanningTree(format!("edge {id} closes a cycle")));
            }
        }
        let weight = weight::total(ids.iter().map(|&id| self.weight(id)));
        Ok(SpanningTree {
            key: CanonicalKey(ids),
            weight,
        })
    }
}

/// The strictly increasing edge-id list of a spanning tree. Equal keys mean
/// equal edge sets; ordering is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<EdgeId>);

impl CanonicalKey {
    pub fn as_slice(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.0.binary_search(&id).is_ok()
    }

    /// Key of the edge set with `leaving` replaced by `entering`.
    pub(crate) fn swapped(&self, leaving: EdgeId, entering: EdgeId) -> CanonicalKey {
        let mut ids = Vec::with_capacity(self.0.len());
        let mut pending = Some(entering);
        for &id in &self.0 {
            if id == leaving {
                continue;
            }
            if let Some(p) = pending {
                if p < id {
                    ids.push(p);
                    pending = None;
                }
            }
            ids.push(id);
        }
        ids.extend(pending);
        CanonicalKey(ids)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, id) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", id.0)?;
        }
        Ok(())
    }
}

/// An `n - 1` edge subset that is acyclic and spans every vertex, with its
/// total weight cached.
///
/// Values are only produced by validating constructors ([`Graph::spanning_tree`])
/// or by operations that preserve the tree property.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpanningTree<W> {
    key: CanonicalKey,
    weight: W,
}

impl<W: Weight> SpanningTree<W> {
    pub(crate) fn from_parts(key: CanonicalKey, weight: W) -> Self {
        SpanningTree { key, weight }
    }

    /// Member edges in increasing id order.
    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.key.0
    }

    pub fn weight(&self) -> W {
        self.weight
    }

    pub fn key(&self) -> &CanonicalKey {
        &self.key
    }

    pub fn into_key(self) -> CanonicalKey {
        self.key
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.key.contains(id)
    }

    /// Edges of `g` not in this tree, in increasing id order.
    pub fn chords<'a>(&'a self, g: &'a Graph<W>) -> impl Iterator<Item = EdgeId> + 'a {
        let mut members = self.key.0.iter().peekable();
        g.edges().iter().map(|e| e.id).filter(move |&id| {
            while members.next_if(|&&m| m < id).is_some() {}
            members.peek().is_none_or(|&&m| m != id)
        })
    }
}

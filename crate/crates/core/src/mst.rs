use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, SpanningTree};
use crate::union_find::UnionFind;
use crate::weight::Weight;

/// Kruskal's algorithm with edges taken in `(weight, EdgeId)` order, so ties
/// go to the smaller id and the result is deterministic.
///
/// Under that order the returned tree is also the minimum-weight tree whose
/// canonical key is lexicographically smallest, which is what lets the
/// enumerator start from it.
pub fn kruskal_mst<W: Weight>(g: &Graph<W>) -> Result<SpanningTree<W>> {
    let mut order: Vec<EdgeId> = g.edges().iter().map(|e| e.id).collect();
    order.sort_by_key(|&id| (g.weight(id), id));

    let mut uf = UnionFind::new(g.vertex_count());
    let mut chosen = Vec::with_capacity(g.vertex_count() - 1);
    for id in order {
        if chosen.len() + 1 == g.vertex_count() {
            break;
        }
        let e = g.edge(id);
        if uf.union(e.u.index(), e.v.index()) {
            chosen.push(id);
        }
    }
    if chosen.len() + 1 != g.vertex_count() {
        return Err(Error::Disconnected);
    }
    g.spanning_tree(chosen)
}

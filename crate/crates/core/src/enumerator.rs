//! Best-first enumeration of spanning trees in nondecreasing weight order.
//!
//! The pool starts with the Kruskal tree. Each step pops the pool minimum by
//! `(weight, key)`, builds its DWCM and pushes every neighbour reached by a
//! nonnegative exchange that has not been seen before. Negative exchanges are
//! never followed: the lighter neighbour was reached earlier from the other
//! side.
//!
//! Output order is exactly `(weight, key)` ascending. With the `(weight, id)`
//! tie-break in Kruskal, every tree other than the first has a neighbour
//! that precedes it in that order, so when a tree becomes the smallest
//! unemitted one it is already in the pool.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::dwcm::Dwcm;
use crate::error::Result;
use crate::graph::{CanonicalKey, Graph, SpanningTree};
use crate::mst::kruskal_mst;
use crate::weight::Weight;

/// A tree with its 1-based position in the output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedTree<W> {
    pub rank: usize,
    pub tree: SpanningTree<W>,
}

/// How many trees to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Limit {
    First(usize),
    All,
}

pub fn canonical_key<W: Weight>(t: &SpanningTree<W>) -> CanonicalKey {
    t.key().clone()
}

/// Resumable enumeration state. Also an [`Iterator`] over [`RankedTree`]s.
#[derive(Debug, Clone)]
pub struct EnumState<'g, W> {
    graph: &'g Graph<W>,
    pool: BinaryHeap<Reverse<(W, CanonicalKey)>>,
    seen: HashSet<CanonicalKey>,
    emitted: usize,
    last_weight: Option<W>,
}

impl<'g, W: Weight> EnumState<'g, W> {
    /// Seeds the pool with the Kruskal tree.
    pub fn new(graph: &'g Graph<W>) -> Result<Self> {
        let mst = kruskal_mst(graph)?;
        let mut seen = HashSet::new();
        seen.insert(mst.key().clone());
        let mut pool = BinaryHeap::new();
        pool.push(Reverse((mst.weight(), mst.into_key())));
        Ok(EnumState {
            graph,
            pool,
            seen,
            emitted: 0,
            last_weight: None,
        })
    }

    pub fn graph(&self) -> &'g Graph<W> {
        self.graph
    }

    /// Pops the next tree and queues its unseen nonnegative-exchange neighbours.
    pub fn next_tree(&mut self) -> Option<RankedTree<W>> {
        let Reverse((weight, key)) = self.pool.pop()?;
        let tree = SpanningTree::from_parts(key, weight);

        let dwcm = Dwcm::build_unchecked(self.graph, &tree);
        for x in dwcm.list_exchanges(true) {
            let next = dwcm.apply(&x);
            if !self.seen.contains(next.key()) {
                self.seen.insert(next.key().clone());
                self.pool.push(Reverse((next.weight(), next.into_key())));
            }
        }

        debug_assert!(self.last_weight.is_none_or(|w| w <= weight));
        self.last_weight = Some(weight);
        self.emitted += 1;
        Some(RankedTree {
            rank: self.emitted,
            tree,
        })
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    /// Weight of the most recently emitted tree.
    pub fn last_weight(&self) -> Option<W> {
        self.last_weight
    }

    pub fn pool_len(&self) -> usize {
        self.pool.len()
    }

    /// Number of distinct trees ever queued, including those already emitted.
    pub fn seen_len(&self) -> usize {
        self.seen.len()
    }

    pub fn has_seen(&self, key: &CanonicalKey) -> bool {
        self.seen.contains(key)
    }

    /// Trees waiting in the pool, in no particular order.
    pub fn pooled(&self) -> impl Iterator<Item = SpanningTree<W>> + '_ {
        self.pool
            .iter()
            .map(|Reverse((w, k))| SpanningTree::from_parts(k.clone(), *w))
    }
}

impl<W: Weight> Iterator for EnumState<'_, W> {
    type Item = RankedTree<W>;

    fn next(&mut self) -> Option<Self::Item> {
        self.next_tree()
    }
}

/// The first `limit` trees of `g` in `(weight, key)` order.
pub fn enumerate_k<W: Weight>(g: &Graph<W>, limit: Limit) -> Result<Vec<RankedTree<W>>> {
    let state = EnumState::new(g)?;
    Ok(match limit {
        Limit::First(k) => state.take(k).collect(),
        Limit::All => state.collect(),
    })
}

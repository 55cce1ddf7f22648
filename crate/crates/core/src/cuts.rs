//! Strong bridges and twinless bridges by per-arc recomputation.

use crate::connectivity::{
    is_strongly_connected, is_twinless_strongly_connected, strongly_connected_where,
    twinless_strongly_connected_where,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{ArcId, Digraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeReport {
    pub strong_bridges: Vec<ArcId>,
    pub twinless_bridges: Vec<ArcId>,
    pub b_s: usize,
    pub b_t: usize,
}

/// Arcs whose removal leaves `g` not strongly connected, ascending.
pub fn strong_bridges(g: &Digraph) -> Result<Vec<ArcId>> {
    strong_bridges_with(g, Execution::default())
}

pub fn strong_bridges_with(g: &Digraph, exec: Execution) -> Result<Vec<ArcId>> {
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    // An arc outside some spanning out-tree (or in-tree) of a common root
    // cannot be a strong bridge: the tree survives its removal.
    let candidates = spanning_tree_arcs(g);
    Ok(exec.filter_items(&candidates, |e| {
        !strongly_connected_where(g, |a| a != e)
    }))
}

/// Arcs whose removal leaves `g` not twinless strongly connected, ascending.
pub fn twinless_bridges(g: &Digraph) -> Result<Vec<ArcId>> {
    twinless_bridges_with(g, Execution::default())
}

pub fn twinless_bridges_with(g: &Digraph, exec: Execution) -> Result<Vec<ArcId>> {
    if !is_twinless_strongly_connected(g) {
        return Err(Error::NotTwinlessStronglyConnected);
    }
    // Arcs outside a twinless strongly connected spanning subgraph are never
    // twinless bridges, so only the certificate arcs are rechecked.
    let candidates = twinless_certificate_arcs(g);
    Ok(exec.filter_items(&candidates, |e| {
        !twinless_strongly_connected_where(g, |a| a != e)
    }))
}

pub fn bridge_report(g: &Digraph, exec: Execution) -> Result<BridgeReport> {
    let twinless_bridges = twinless_bridges_with(g, exec)?;
    let strong_bridges = strong_bridges_with(g, exec)?;
    Ok(BridgeReport {
        b_s: strong_bridges.len(),
        b_t: twinless_bridges.len(),
        strong_bridges,
        twinless_bridges,
    })
}

/// Arcs of a breadth-first out-tree and in-tree rooted at vertex 0, ascending
/// and deduplicated. At most `2n - 2` arcs.
fn spanning_tree_arcs(g: &Digraph) -> Vec<ArcId> {
    let n = g.n();
    let mut picked = vec![false; g.m()];
    for forward in [true, false] {
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        if n > 0 {
            seen[0] = true;
            queue.push_back(0 as VertexId);
        }
        while let Some(v) = queue.pop_front() {
            let arcs = if forward { g.out_arcs(v) } else { g.in_arcs(v) };
            for &a in arcs {
                let arc = g.arc(a);
                let w = if forward { arc.target } else { arc.source };
                if !seen[w] {
                    seen[w] = true;
                    picked[a] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    (0..g.m()).filter(|&a| picked[a]).collect()
}

/// Arcs of a sparse twinless strongly connected spanning subgraph of a
/// twinless strongly connected `g`: the two spanning trees above plus two
/// nested spanning forests of the underlying graph with twin pairs merged.
/// Two such forests keep every cut of size at least two crossed twice.
/// At most `4n - 4` arcs, ascending.
fn twinless_certificate_arcs(g: &Digraph) -> Vec<ArcId> {
    let mut picked = vec![false; g.m()];
    for a in spanning_tree_arcs(g) {
        picked[a] = true;
    }
    let edges: Vec<ArcId> = (0..g.m())
        .filter(|&a| g.twin_of(a).is_none_or(|t| a < t))
        .collect();
    let mut in_first = vec![false; g.m()];
    for pass in 0..2 {
        let mut forest = UnionFind::new(g.n());
        for &a in &edges {
            if pass == 1 && in_first[a] {
                continue;
            }
            let arc = g.arc(a);
            if forest.union(arc.source, arc.target) {
                picked[a] = true;
                in_first[a] |= pass == 0;
            }
        }
    }
    (0..g.m()).filter(|&a| picked[a]).collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

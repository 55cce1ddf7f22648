//! Definition-level oracles.
//!
//! Twinless relatedness is decided by enumerating orientations: every arc
//! outside a twin pair is kept, and each twin pair keeps exactly one of its
//! two arcs. `u` and `v` are twinless related iff some orientation makes them
//! mutually reachable. Reachability is plain breadth-first search, so nothing
//! here depends on the lowlink or Tarjan code in [`crate::connectivity`].

use std::collections::VecDeque;

use crate::blocks::BlockSet;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{ArcId, Digraph, VertexId};
use crate::partition::Partition;

/// Largest number of twin pairs the orientation oracles accept (`2^20` orientations).
pub const TWIN_PAIR_LIMIT: usize = 20;
/// Largest `m * 2^p` accepted by [`oracle_two_edge_twinless_blocks`].
pub const ORACLE_WORK_LIMIT: u128 = 1 << 26;

struct Orientations {
    count: u64,
    /// For arcs in a twin pair: the pair index and whether the arc is the
    /// pair's forward arc.
    slot: Vec<Option<(usize, bool)>>,
}

impl Orientations {
    fn of(g: &Digraph) -> Result<Self> {
        let pairs = g.twin_pairs();
        if pairs.len() > TWIN_PAIR_LIMIT {
            return Err(Error::TwinPairBudget {
                pairs: pairs.len(),
                limit: TWIN_PAIR_LIMIT,
            });
        }
        let mut slot = vec![None; g.m()];
        for (i, p) in pairs.iter().enumerate() {
            slot[p.forward] = Some((i, true));
            slot[p.backward] = Some((i, false));
        }
        Ok(Self {
            count: 1 << pairs.len(),
            slot,
        })
    }

    fn keeps(&self, mask: u64, arc: ArcId) -> bool {
        match self.slot[arc] {
            None => true,
            Some((i, forward)) => (mask >> i & 1 == 1) == forward,
        }
    }
}

/// Vertices reachable from `s` over arcs accepted by `keep`.
fn reachable<F: Fn(ArcId) -> bool>(g: &Digraph, s: VertexId, keep: F) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &a in g.out_arcs(v) {
            let w = g.arc(a).target;
            if keep(a) && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Full reachability matrix, row-major.
fn closure<F: Fn(ArcId) -> bool>(g: &Digraph, keep: F) -> Vec<bool> {
    (0..g.n()).flat_map(|s| reachable(g, s, &keep)).collect()
}

/// Partition by mutual reachability, from the transitive closure.
pub fn oracle_scc(g: &Digraph) -> Partition {
    let n = g.n();
    let reach = closure(g, |_| true);
    let mut rep = vec![0; n];
    for v in 0..n {
        rep[v] = (0..=v).find(|&u| reach[u * n + v] && reach[v * n + u]).unwrap_or(v);
    }
    Partition::from_labels(&rep)
}

pub fn oracle_twinless_related(g: &Digraph, u: VertexId, v: VertexId) -> Result<bool> {
    oracle_twinless_related_with(g, u, v, Execution::default())
}

pub fn oracle_twinless_related_with(g: &Digraph, u: VertexId, v: VertexId, exec: Execution) -> Result<bool> {
    for x in [u, v] {
        if x >= g.n() {
            return Err(Error::UnknownVertex(x));
        }
    }
    let orient = Orientations::of(g)?;
    if u == v {
        return Ok(true);
    }
    Ok(exec.fold_range(
        0..orient.count,
        || false,
        |found, mask| {
            found || {
                let keep = |a| orient.keeps(mask, a);
                reachable(g, u, keep)[v] && reachable(g, v, keep)[u]
            }
        },
        |a, b| a || b,
    ))
}

/// The twinless relation as a row-major `n x n` matrix.
fn twinless_relation(g: &Digraph, exec: Execution) -> Result<Vec<bool>> {
    let n = g.n();
    let orient = Orientations::of(g)?;
    Ok(exec.fold_range(
        0..orient.count,
        || vec![false; n * n],
        |mut rel, mask| {
            let reach = closure(g, |a| orient.keeps(mask, a));
            for u in 0..n {
                for v in 0..n {
                    if reach[u * n + v] && reach[v * n + u] {
                        rel[u * n + v] = true;
                    }
                }
            }
            rel
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x |= y);
            a
        },
    ))
}

pub fn oracle_tscc(g: &Digraph) -> Result<Partition> {
    oracle_tscc_with(g, Execution::default())
}

/// Partition induced by [`oracle_twinless_related`], after checking the
/// relation is an equivalence.
pub fn oracle_tscc_with(g: &Digraph, exec: Execution) -> Result<Partition> {
    let n = g.n();
    let rel = twinless_relation(g, exec)?;
    let r = |u: usize, v: usize| rel[u * n + v];
    for u in 0..n {
        for v in 0..n {
            if !r(u, v) {
                continue;
            }
            if !r(v, u) {
                return Err(Error::NonTransitive(u, v, u));
            }
            if let Some(w) = (0..n).find(|&w| r(v, w) && !r(u, w)) {
                return Err(Error::NonTransitive(u, v, w));
            }
        }
    }
    let rep: Vec<usize> = (0..n)
        .map(|v| (0..=v).find(|&u| r(u, v)).unwrap_or(v))
        .collect();
    Ok(Partition::from_labels(&rep))
}

fn check_work(g: &Digraph) -> Result<()> {
    let pairs = g.twin_pairs().len();
    if pairs > TWIN_PAIR_LIMIT {
        return Err(Error::TwinPairBudget {
            pairs,
            limit: TWIN_PAIR_LIMIT,
        });
    }
    let work = (g.m() as u128) << pairs;
    if work > ORACLE_WORK_LIMIT {
        return Err(Error::OracleBudget {
            work,
            limit: ORACLE_WORK_LIMIT,
        });
    }
    Ok(())
}

pub fn oracle_two_edge_twinless_blocks(g: &Digraph) -> Result<BlockSet> {
    oracle_two_edge_twinless_blocks_with(g, Execution::default())
}

/// Meet over every arc `e` of the oracle TSCC partition of `G - e`.
pub fn oracle_two_edge_twinless_blocks_with(g: &Digraph, exec: Execution) -> Result<BlockSet> {
    check_work(g)?;
    let mut acc = Partition::whole(g.n());
    for e in 0..g.m() {
        let part = oracle_tscc_with(&g.remove_arcs(&[e])?, exec)?;
        acc = acc.meet(&part)?;
    }
    Ok(BlockSet::from_partition(&acc))
}

/// Meet over every arc `e` of the mutual-reachability partition of `G - e`.
pub fn oracle_two_edge_blocks(g: &Digraph) -> Result<BlockSet> {
    let mut acc = Partition::whole(g.n());
    for e in 0..g.m() {
        acc = acc.meet(&oracle_scc(&g.remove_arcs(&[e])?))?;
    }
    Ok(BlockSet::from_partition(&acc))
}

/// Arcs whose removal leaves more than one mutual-reachability class.
pub fn oracle_strong_bridges(g: &Digraph) -> Result<Vec<ArcId>> {
    (0..g.m())
        .filter_map(|e| match g.remove_arcs(&[e]) {
            Ok(h) => (oracle_scc(&h).len() > 1).then_some(Ok(e)),
            Err(err) => Some(Err(err)),
        })
        .collect()
}

/// Arcs whose removal leaves more than one oracle TSCC class.
pub fn oracle_twinless_bridges(g: &Digraph) -> Result<Vec<ArcId>> {
    check_work(g)?;
    let mut out = Vec::new();
    for e in 0..g.m() {
        if oracle_tscc_with(&g.remove_arcs(&[e])?, Execution::Sequential)?.len() > 1 {
            out.push(e);
        }
    }
    Ok(out)
}

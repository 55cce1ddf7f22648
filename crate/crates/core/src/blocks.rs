//! 2-edge blocks and 2-edge-twinless blocks.
//!
//! Two routes compute 2-edge-twinless blocks of a twinless strongly connected
//! graph:
//!
//! * [`tetb_alg1_matrix`] keeps an `n x n` separation matrix, clears every
//!   pair split by the removal of some twinless bridge, and returns the
//!   connected components of the pairs that survive in both directions.
//! * [`tetb_alg2_refine`] starts from the 2-edge blocks and refines them with
//!   the TSCC partitions of `G - e` for twinless bridges `e`.
//!
//! [`RefineMode::Faithful`] skips twinless bridges that are also strong
//! bridges. That is only sound when the graph has no strong bridge at all;
//! [`crate::fixtures::g_gadget`] is a twinless strongly connected graph where
//! it keeps two separable vertices together. [`RefineMode::Safe`] refines over
//! every twinless bridge and is the default.

use itertools::Itertools;

use crate::connectivity::{
    is_twinless_strongly_connected, scc_labels, tscc_where, twinless_strongly_connected_components,
};
use crate::cuts::{strong_bridges_with, twinless_bridges_with};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{compare_labels, ArcId, Digraph, VertexId};
use crate::partition::Partition;

/// Largest vertex count accepted by [`tetb_alg1_matrix`] (`n^2` bits, about 50 MB).
pub const MATRIX_LIMIT: usize = 20_000;
/// Largest `C(m, k - 1)` accepted by [`k_edge_twinless_blocks_bruteforce`].
pub const SUBSET_LIMIT: u128 = 1_000_000;

/// Disjoint vertex sets of size at least 2, in canonical order (ids ascending
/// inside a block, blocks ordered by smallest id). Vertices in no block are
/// not listed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BlockSet {
    blocks: Vec<Vec<VertexId>>,
}

impl BlockSet {
    /// Classes of `p` with at least two vertices.
    pub fn from_partition(p: &Partition) -> Self {
        Self {
            blocks: p.classes().iter().filter(|c| c.len() >= 2).cloned().collect(),
        }
    }

    /// Canonicalizes arbitrary blocks; sets with fewer than two vertices are dropped.
    pub fn from_blocks(blocks: impl IntoIterator<Item = Vec<VertexId>>) -> Self {
        let mut blocks: Vec<Vec<VertexId>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .filter(|b| b.len() >= 2)
            .collect();
        blocks.sort_unstable();
        Self { blocks }
    }

    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_pairwise_disjoint(&self) -> bool {
        let mut all: Vec<VertexId> = self.blocks.iter().flatten().copied().collect();
        let total = all.len();
        all.sort_unstable();
        all.dedup();
        all.len() == total
    }

    /// True if some block holds both `u` and `v`.
    pub fn together(&self, u: VertexId, v: VertexId) -> bool {
        self.blocks.iter().any(|b| b.contains(&u) && b.contains(&v))
    }

    /// Every block lies inside some block of `coarser`.
    pub fn within(&self, coarser: &BlockSet) -> bool {
        self.blocks
            .iter()
            .all(|b| coarser.blocks.iter().any(|c| b.iter().all(|v| c.contains(v))))
    }

    /// Every block lies inside one class of `p`.
    pub fn within_partition(&self, p: &Partition) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&v| p.same_class(b[0], v)))
    }

    /// Vertices of `0..n` that belong to no block, ascending.
    pub fn uncovered(&self, n: usize) -> Vec<VertexId> {
        let mut covered = vec![false; n];
        for &v in self.blocks.iter().flatten() {
            covered[v] = true;
        }
        (0..n).filter(|&v| !covered[v]).collect()
    }

    /// Blocks as labels: labels ascending inside a block, blocks ordered by
    /// their first label.
    pub fn labeled(&self, g: &Digraph) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .blocks
            .iter()
            .map(|b| {
                let mut b = b.clone();
                g.sort_by_label(&mut b);
                b.into_iter().map(|v| g.label(v).to_owned()).collect()
            })
            .collect();
        out.sort_by(|x, y| compare_labels(&x[0], &y[0]));
        out
    }
}

/// The `n x n` boolean matrix of Algorithm 1, one bit per ordered pair,
/// initialized to all ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl SeparationMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        let mut row = vec![u64::MAX; words];
        let tail = n % 64;
        if tail > 0 {
            row[words - 1] = (1u64 << tail) - 1;
        }
        let bits = row.iter().copied().cycle().take(words * n).collect();
        Self { n, words, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, v: VertexId, w: VertexId) -> bool {
        self.bits[v * self.words + w / 64] >> (w % 64) & 1 == 1
    }

    pub fn clear(&mut self, v: VertexId, w: VertexId) {
        self.bits[v * self.words + w / 64] &= !(1u64 << (w % 64));
    }

    /// Clears `A[v, w]` for every pair in distinct classes of `p`.
    pub fn separate(&mut self, p: &Partition) {
        let mut mask = vec![0u64; self.words];
        for class in p.classes() {
            for &w in class {
                mask[w / 64] |= 1 << (w % 64);
            }
            for &v in class {
                let row = &mut self.bits[v * self.words..(v + 1) * self.words];
                row.iter_mut().zip(&mask).for_each(|(r, m)| *r &= m);
            }
            for &w in class {
                mask[w / 64] = 0;
            }
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|v| (v + 1..self.n).all(|w| self.get(v, w) == self.get(w, v)))
    }

    fn row_ones(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.bits[v * self.words..(v + 1) * self.words]
            .iter()
            .enumerate()
            .flat_map(|(i, &word)| {
                let mut word = word;
                std::iter::from_fn(move || {
                    if word == 0 {
                        return None;
                    }
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(i * 64 + b)
                })
            })
    }

    /// Connected components of the undirected graph with an edge `{v, w}`
    /// whenever `A[v, w]` and `A[w, v]` are both set.
    pub fn mutual_components(&self) -> Partition {
        let mut comp = vec![usize::MAX; self.n];
        let mut stack = Vec::new();
        let mut ncomp = 0;
        for root in 0..self.n {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = ncomp;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for w in self.row_ones(v) {
                    if comp[w] == usize::MAX && self.get(w, v) {
                        comp[w] = ncomp;
                        stack.push(w);
                    }
                }
            }
            ncomp += 1;
        }
        Partition::from_dense_labels(&comp)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RefineMode {
    /// Refine only over twinless bridges that are not strong bridges.
    Faithful,
    /// Refine over every twinless bridge.
    #[default]
    Safe,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alg1Outcome {
    pub blocks: BlockSet,
    pub twinless_bridges: Vec<ArcId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alg2Outcome {
    pub blocks: BlockSet,
    pub strong_bridges: Vec<ArcId>,
    pub twinless_bridges: Vec<ArcId>,
}

pub fn partition_meet_all(n: usize, parts: &[Partition]) -> Result<Partition> {
    parts.iter().try_fold(Partition::whole(n), |acc, p| acc.meet(p))
}

/// 2-edge blocks of a strongly connected graph.
pub fn two_edge_blocks(g: &Digraph) -> Result<BlockSet> {
    two_edge_blocks_with(g, Execution::default())
}

pub fn two_edge_blocks_with(g: &Digraph, exec: Execution) -> Result<BlockSet> {
    let strong = strong_bridges_with(g, exec)?;
    Ok(BlockSet::from_partition(&refine_by_strong_bridges(g, &strong, exec)))
}

/// Meet of the SCC partitions of `G - e` over the given strong bridges.
/// Removing any other arc keeps the graph strongly connected, so this is the
/// full 2-edge-block partition (non-block vertices as singletons).
fn refine_by_strong_bridges(g: &Digraph, strong: &[ArcId], exec: Execution) -> Partition {
    exec.map_reduce(
        strong,
        || Partition::whole(g.n()),
        |&e| Partition::from_dense_labels(&scc_labels(g, |a| a != e)),
        |p, q| p.meet_labels(q.class_labels()),
    )
}

/// Meet of the TSCC partitions of `G - e` over `arcs`, starting from `base`.
fn refine_by_twinless(g: &Digraph, base: Partition, arcs: &[ArcId], exec: Execution) -> Partition {
    let refined = exec.map_reduce(
        arcs,
        || Partition::whole(g.n()),
        |&e| tscc_where(g, |a| a != e),
        |p, q| p.meet_labels(q.class_labels()),
    );
    base.meet_labels(refined.class_labels())
}

fn whole_vertex_set(g: &Digraph) -> BlockSet {
    BlockSet::from_partition(&Partition::whole(g.n()))
}

/// Algorithm 1: separation matrix over the twinless bridges.
pub fn tetb_alg1_matrix(g: &Digraph) -> Result<BlockSet> {
    tetb_alg1_matrix_detailed(g, Execution::default()).map(|o| o.blocks)
}

pub fn tetb_alg1_matrix_detailed(g: &Digraph, exec: Execution) -> Result<Alg1Outcome> {
    check_matrix_budget(g)?;
    if !is_twinless_strongly_connected(g) {
        return Err(Error::NotTwinlessStronglyConnected);
    }
    let twinless_bridges = twinless_bridges_with(g, exec)?;
    let blocks = if twinless_bridges.is_empty() {
        whole_vertex_set(g)
    } else {
        separation_blocks(g, &twinless_bridges, exec)
    };
    Ok(Alg1Outcome {
        blocks,
        twinless_bridges,
    })
}

/// Algorithm 1 with the separation loop run over every arc instead of only
/// the twinless bridges. Removing a non-bridge separates nothing, so the
/// result always equals [`tetb_alg1_matrix`].
pub fn tetb_alg1_matrix_all_arcs(g: &Digraph, exec: Execution) -> Result<BlockSet> {
    check_matrix_budget(g)?;
    if !is_twinless_strongly_connected(g) {
        return Err(Error::NotTwinlessStronglyConnected);
    }
    let all: Vec<ArcId> = (0..g.m()).collect();
    Ok(separation_blocks(g, &all, exec))
}

fn check_matrix_budget(g: &Digraph) -> Result<()> {
    if g.n() > MATRIX_LIMIT {
        return Err(Error::MatrixBudget {
            n: g.n(),
            limit: MATRIX_LIMIT,
        });
    }
    Ok(())
}

fn separation_blocks(g: &Digraph, arcs: &[ArcId], exec: Execution) -> BlockSet {
    const CHUNK: usize = 64;
    let mut matrix = SeparationMatrix::new(g.n());
    for chunk in arcs.chunks(CHUNK) {
        let parts = exec.map(chunk, |&e| tscc_where(g, |a| a != e));
        for p in &parts {
            matrix.separate(p);
        }
    }
    debug_assert!(matrix.is_symmetric());
    BlockSet::from_partition(&matrix.mutual_components())
}

/// Algorithm 2: refine the 2-edge blocks by TSCC partitions of `G - e`.
pub fn tetb_alg2_refine(g: &Digraph, mode: RefineMode) -> Result<BlockSet> {
    tetb_alg2_refine_detailed(g, mode, Execution::default()).map(|o| o.blocks)
}

pub fn tetb_alg2_refine_detailed(g: &Digraph, mode: RefineMode, exec: Execution) -> Result<Alg2Outcome> {
    if !is_twinless_strongly_connected(g) {
        return Err(Error::NotTwinlessStronglyConnected);
    }
    let strong_bridges = strong_bridges_with(g, exec)?;
    let twinless_bridges = twinless_bridges_with(g, exec)?;
    if twinless_bridges.is_empty() {
        return Ok(Alg2Outcome {
            blocks: whole_vertex_set(g),
            strong_bridges,
            twinless_bridges,
        });
    }
    let base = refine_by_strong_bridges(g, &strong_bridges, exec);
    let refine_over: Vec<ArcId> = match mode {
        RefineMode::Safe => twinless_bridges.clone(),
        RefineMode::Faithful => twinless_bridges
            .iter()
            .copied()
            .filter(|e| strong_bridges.binary_search(e).is_err())
            .collect(),
    };
    let refined = refine_by_twinless(g, base, &refine_over, exec);
    Ok(Alg2Outcome {
        blocks: BlockSet::from_partition(&refined),
        strong_bridges,
        twinless_bridges,
    })
}

/// How each twinless strongly connected piece is analysed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TetbMethod {
    Matrix,
    Refine(RefineMode),
}

impl Default for TetbMethod {
    fn default() -> Self {
        TetbMethod::Refine(RefineMode::Safe)
    }
}

/// 2-edge-twinless blocks of an arbitrary digraph: each TSCC with at least two
/// vertices is analysed on its own induced subgraph.
pub fn two_edge_twinless_blocks(g: &Digraph) -> BlockSet {
    two_edge_twinless_blocks_with(g, Execution::default())
}

pub fn two_edge_twinless_blocks_with(g: &Digraph, exec: Execution) -> BlockSet {
    two_edge_twinless_blocks_by(g, TetbMethod::default(), exec)
        .expect("a TSCC induces a twinless strongly connected subgraph")
}

/// Same decomposition as [`two_edge_twinless_blocks`] with a chosen method.
/// Only the matrix budget can fail.
pub fn two_edge_twinless_blocks_by(g: &Digraph, method: TetbMethod, exec: Execution) -> Result<BlockSet> {
    let tscc = twinless_strongly_connected_components(g);
    let mut blocks = Vec::new();
    for class in tscc.classes().iter().filter(|c| c.len() >= 2) {
        let (sub, back) = g.induced_subgraph_with_map(class)?;
        let found = match method {
            TetbMethod::Matrix => tetb_alg1_matrix_detailed(&sub, exec)?.blocks,
            TetbMethod::Refine(mode) => tetb_alg2_refine_detailed(&sub, mode, exec)?.blocks,
        };
        blocks.extend(
            found
                .blocks()
                .iter()
                .map(|b| b.iter().map(|&v| back[v]).collect::<Vec<_>>()),
        );
    }
    Ok(BlockSet::from_blocks(blocks))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// k-edge-twinless blocks by enumeration: meet over every arc set `L` with
/// `|L| <= k - 1` of the TSCC partition of `G - L`; classes of size >= 2.
pub fn k_edge_twinless_blocks_bruteforce(g: &Digraph, k: usize) -> Result<BlockSet> {
    k_edge_twinless_blocks_bruteforce_with(g, k, Execution::default())
}

pub fn k_edge_twinless_blocks_bruteforce_with(g: &Digraph, k: usize, exec: Execution) -> Result<BlockSet> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let subsets = binomial(g.m(), k - 1);
    if subsets > SUBSET_LIMIT {
        return Err(Error::EnumerationBudget {
            subsets,
            limit: SUBSET_LIMIT,
        });
    }
    let mut acc = Partition::whole(g.n());
    for size in 0..k {
        let removals: Vec<Vec<ArcId>> = (0..g.m()).combinations(size).collect();
        let part = exec.map_reduce(
            &removals,
            || Partition::whole(g.n()),
            |drop| tscc_where(g, |a| !drop.contains(&a)),
            |p, q| p.meet_labels(q.class_labels()),
        );
        acc = acc.meet_labels(part.class_labels());
    }
    Ok(BlockSet::from_partition(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn labeled(g: &Digraph, b: &BlockSet) -> Vec<Vec<String>> {
        b.labeled(g)
    }

    fn sets(v: &[&[&str]]) -> Vec<Vec<String>> {
        v.iter()
            .map(|b| b.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    #[test]
    fn blockset_canonical_and_disjointness() {
        let b = BlockSet::from_blocks([vec![5, 3], vec![1, 0], vec![9]]);
        assert_eq!(b.blocks(), &[vec![0, 1], vec![3, 5]]);
        assert!(b.is_pairwise_disjoint());
        assert!(!BlockSet::from_blocks([vec![0, 1], vec![1, 2]]).is_pairwise_disjoint());
        assert_eq!(b.uncovered(6), vec![2, 4]);
        assert!(b.together(3, 5) && !b.together(1, 3));
    }

    #[test]
    fn matrix_basics() {
        let mut a = SeparationMatrix::new(70);
        assert!(a.get(69, 0) && a.get(3, 3));
        a.clear(69, 0);
        assert!(!a.is_symmetric());
        a.clear(0, 69);
        assert!(a.is_symmetric());
        let p = Partition::from_dense_labels(&[0, 0, 1, 1]);
        let mut b = SeparationMatrix::new(4);
        b.separate(&p);
        assert!(b.is_symmetric());
        assert!(b.get(0, 1) && !b.get(0, 2) && b.get(2, 2));
        assert_eq!(b.mutual_components(), p);
    }

    #[test]
    fn two_edge_block_examples() {
        let g = fixtures::g_fig1();
        assert_eq!(
            labeled(&g, &two_edge_blocks(&g).unwrap()),
            sets(&[&["2", "5", "7"], &["12", "18"]])
        );
        assert!(two_edge_blocks(&fixtures::c3()).unwrap().is_empty());
        let k = fixtures::k3b();
        assert_eq!(labeled(&k, &two_edge_blocks(&k).unwrap()), sets(&[&["a", "b", "c"]]));
    }

    #[test]
    fn alg1_examples() {
        let g = fixtures::g_fig1();
        assert_eq!(labeled(&g, &tetb_alg1_matrix(&g).unwrap()), sets(&[&["2", "5"], &["12", "18"]]));
        assert!(tetb_alg1_matrix(&fixtures::c3()).unwrap().is_empty());
        let k = fixtures::k3b();
        assert_eq!(labeled(&k, &tetb_alg1_matrix(&k).unwrap()), sets(&[&["a", "b", "c"]]));
        assert_eq!(
            tetb_alg1_matrix(&fixtures::p2()).unwrap_err(),
            Error::NotTwinlessStronglyConnected
        );
    }

    #[test]
    fn alg2_examples() {
        let g = fixtures::g_fig1();
        assert_eq!(
            labeled(&g, &tetb_alg2_refine(&g, RefineMode::Safe).unwrap()),
            sets(&[&["2", "5"], &["12", "18"]])
        );
        let gadget = fixtures::g_gadget();
        let (x, y) = (gadget.vertex("x").unwrap(), gadget.vertex("y").unwrap());
        let safe = tetb_alg2_refine(&gadget, RefineMode::Safe).unwrap();
        let faithful = tetb_alg2_refine(&gadget, RefineMode::Faithful).unwrap();
        assert!(!safe.together(x, y));
        assert!(faithful.together(x, y));
    }

    #[test]
    fn pipeline_examples() {
        let g = fixtures::g_fig1();
        assert_eq!(labeled(&g, &two_edge_twinless_blocks(&g)), sets(&[&["2", "5"], &["12", "18"]]));
        assert!(two_edge_twinless_blocks(&fixtures::p2()).is_empty());

        let union: Digraph = format!("{}{}", fixtures::K3B_EDGE_LIST, fixtures::C3_EDGE_LIST)
            .parse()
            .unwrap();
        assert_eq!(union.n(), 6);
        assert_eq!(
            labeled(&union, &two_edge_twinless_blocks(&union)),
            sets(&[&["a", "b", "c"]])
        );
    }

    #[test]
    fn k_blocks() {
        for (_, g) in fixtures::all() {
            let k1 = k_edge_twinless_blocks_bruteforce(&g, 1).unwrap();
            assert_eq!(k1, BlockSet::from_partition(&twinless_strongly_connected_components(&g)));
        }
        let g = fixtures::g_fig1();
        let k2 = k_edge_twinless_blocks_bruteforce(&g, 2).unwrap();
        assert_eq!(k2, two_edge_twinless_blocks(&g));
        assert_eq!(labeled(&g, &k2), sets(&[&["2", "5"], &["12", "18"]]));
        let k = fixtures::k3b();
        assert_eq!(
            labeled(&k, &k_edge_twinless_blocks_bruteforce(&k, 2).unwrap()),
            sets(&[&["a", "b", "c"]])
        );
        assert_eq!(k_edge_twinless_blocks_bruteforce(&k, 0).unwrap_err(), Error::InvalidK);
    }

    #[test]
    fn k_blocks_budget() {
        // C(27, 5) = 80730 passes, C(27, 9) = 4686825 does not.
        assert_eq!(binomial(27, 5), 80_730);
        let g = fixtures::g_fig1();
        assert!(matches!(
            k_edge_twinless_blocks_bruteforce(&g, 10),
            Err(Error::EnumerationBudget { subsets: 4_686_825, .. })
        ));
    }

    #[test]
    fn matrix_budget() {
        let big = Digraph::with_numbered_vertices(MATRIX_LIMIT + 1, vec![]).unwrap();
        assert!(matches!(tetb_alg1_matrix(&big), Err(Error::MatrixBudget { .. })));
    }
}

//! Strongly connected components, undirected 2-edge-connectivity and twinless
//! strongly connected components.
//!
//! Twinless strongly connected components are computed per strongly connected
//! component: inside one SCC, the underlying undirected graph (a twin pair
//! counts as a single edge) has only twin pairs as bridges, and the TSCCs are
//! exactly its 2-edge-connected components. The characterization is checked
//! against the orientation-enumeration oracle in [`crate::testkit`].
//!
//! Every traversal here is iterative, so deep graphs do not overflow the stack.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{ArcId, Digraph, TwinPair, UndirectedGraph, VertexId};
use crate::partition::Partition;

const NONE: usize = usize::MAX;

pub fn strongly_connected_components(g: &Digraph) -> Partition {
    Partition::from_dense_labels(&scc_labels(g, |_| true))
}

/// True iff `g` has at most one strongly connected component.
pub fn is_strongly_connected(g: &Digraph) -> bool {
    strongly_connected_where(g, |_| true)
}

pub fn connected_components(u: &UndirectedGraph) -> Partition {
    Partition::from_dense_labels(&components_avoiding(u, &[]))
}

/// Edges whose removal disconnects their endpoints, as `(min, max)` pairs in
/// ascending order.
pub fn bridges_undirected(u: &UndirectedGraph) -> Vec<(VertexId, VertexId)> {
    bridge_flags(u)
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(e, _)| u.edges()[e])
        .collect()
}

pub fn two_edge_connected_components(u: &UndirectedGraph) -> Partition {
    let bridges = bridge_flags(u);
    Partition::from_dense_labels(&components_avoiding(u, &bridges))
}

pub fn twinless_strongly_connected_components(g: &Digraph) -> Partition {
    tscc_where(g, |_| true)
}

pub fn is_twinless_strongly_connected(g: &Digraph) -> bool {
    twinless_strongly_connected_where(g, |_| true)
}

/// Contraction of the TSCCs of a strongly connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondensationTree {
    /// The TSCC classes, in canonical partition order.
    pub nodes: Vec<Vec<VertexId>>,
    pub edges: Vec<TreeEdge>,
}

/// Adjacency between two contracted classes `a < b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    /// Every arc of the graph between the two classes, ascending.
    pub arcs: Vec<ArcId>,
    pub twin_pairs: Vec<TwinPair>,
}

impl CondensationTree {
    /// Connected with exactly `nodes - 1` edges.
    pub fn is_tree(&self) -> bool {
        let k = self.nodes.len();
        if k == 0 {
            return true;
        }
        if self.edges.len() != k - 1 {
            return false;
        }
        let pairs = self.edges.iter().map(|e| (e.a, e.b));
        match UndirectedGraph::new(k, pairs) {
            Ok(u) => connected_components(&u).len() == 1,
            Err(_) => false,
        }
    }

    pub fn every_edge_carries_twin_pair(&self) -> bool {
        self.edges.iter().all(|e| !e.twin_pairs.is_empty())
    }
}

pub fn condensation_tscc(g: &Digraph) -> Result<CondensationTree> {
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let tscc = twinless_strongly_connected_components(g);
    let mut between: BTreeMap<(usize, usize), Vec<ArcId>> = BTreeMap::new();
    for (id, arc) in g.arcs().iter().enumerate() {
        let (cu, cv) = (tscc.class_of(arc.source), tscc.class_of(arc.target));
        if cu != cv {
            between.entry((cu.min(cv), cu.max(cv))).or_default().push(id);
        }
    }
    let edges = between
        .into_iter()
        .map(|((a, b), arcs)| {
            let twin_pairs = arcs
                .iter()
                .filter_map(|&x| match g.twin_of(x) {
                    Some(y) if x < y => Some(TwinPair {
                        forward: x,
                        backward: y,
                    }),
                    _ => None,
                })
                .collect();
            TreeEdge {
                a,
                b,
                arcs,
                twin_pairs,
            }
        })
        .collect();
    Ok(CondensationTree {
        nodes: tscc.classes().to_vec(),
        edges,
    })
}

/// Iterative Tarjan over the arcs accepted by `alive`. Returns a component
/// label per vertex (labels are dense, in order of completion).
pub(crate) fn scc_labels<F: Fn(ArcId) -> bool>(g: &Digraph, alive: F) -> Vec<usize> {
    let n = g.n();
    let mut index = vec![NONE; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![NONE; n];
    let mut stack = Vec::new();
    let mut calls: Vec<(VertexId, usize)> = Vec::new();
    let mut counter = 0;
    let mut ncomp = 0;

    for root in 0..n {
        if index[root] != NONE {
            continue;
        }
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        calls.push((root, 0));

        while let Some(&mut (v, ref mut next)) = calls.last_mut() {
            let out = g.out_arcs(v);
            if *next < out.len() {
                let a = out[*next];
                *next += 1;
                if !alive(a) {
                    continue;
                }
                let w = g.arc(a).target;
                if index[w] == NONE {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    calls.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            calls.pop();
            if low[v] == index[v] {
                while let Some(w) = stack.pop() {
                    on_stack[w] = false;
                    comp[w] = ncomp;
                    if w == v {
                        break;
                    }
                }
                ncomp += 1;
            }
            if let Some(&(p, _)) = calls.last() {
                low[p] = low[p].min(low[v]);
            }
        }
    }
    comp
}

/// Forward and backward search from vertex 0 over the arcs accepted by `alive`.
pub(crate) fn strongly_connected_where<F: Fn(ArcId) -> bool>(g: &Digraph, alive: F) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let reaches_all = |forward: bool| {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut count = 1;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            let arcs = if forward { g.out_arcs(v) } else { g.in_arcs(v) };
            for &a in arcs {
                if !alive(a) {
                    continue;
                }
                let arc = g.arc(a);
                let w = if forward { arc.target } else { arc.source };
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    };
    reaches_all(true) && reaches_all(false)
}

pub(crate) fn tscc_where<F: Fn(ArcId) -> bool>(g: &Digraph, alive: F) -> Partition {
    let scc = scc_labels(g, &alive);
    let view = TwinCollapsed {
        g,
        alive: &alive,
        group: Some(&scc),
    };
    let bridges = bridge_flags(&view);
    Partition::from_dense_labels(&components_avoiding(&view, &bridges))
}

pub(crate) fn twinless_strongly_connected_where<F: Fn(ArcId) -> bool>(g: &Digraph, alive: F) -> bool {
    if !strongly_connected_where(g, &alive) {
        return false;
    }
    let view = TwinCollapsed {
        g,
        alive: &alive,
        group: None,
    };
    !bridge_flags(&view).contains(&true)
}

/// Index-addressable undirected adjacency, so the lowlink search can resume
/// a vertex's neighbor scan after returning from a child.
trait UndirectedView {
    fn vertex_count(&self) -> usize;
    /// Upper bound on edge ids.
    fn edge_bound(&self) -> usize;
    fn degree(&self, v: VertexId) -> usize;
    /// The `i`-th adjacency slot of `v`, or `None` if that slot is filtered out.
    fn neighbor(&self, v: VertexId, i: usize) -> Option<(VertexId, usize)>;
}

impl UndirectedView for UndirectedGraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn edge_bound(&self) -> usize {
        self.edge_count()
    }

    fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    fn neighbor(&self, v: VertexId, i: usize) -> Option<(VertexId, usize)> {
        Some(self.neighbors(v)[i])
    }
}

/// Underlying undirected graph of a digraph, seen through an arc filter.
/// A twin pair with both arcs alive is one edge, identified by the smaller
/// arc id. With `group`, only arcs inside one group are kept.
struct TwinCollapsed<'a, F> {
    g: &'a Digraph,
    alive: &'a F,
    group: Option<&'a [usize]>,
}

impl<F: Fn(ArcId) -> bool> UndirectedView for TwinCollapsed<'_, F> {
    fn vertex_count(&self) -> usize {
        self.g.n()
    }

    fn edge_bound(&self) -> usize {
        self.g.m()
    }

    fn degree(&self, v: VertexId) -> usize {
        self.g.out_arcs(v).len() + self.g.in_arcs(v).len()
    }

    fn neighbor(&self, v: VertexId, i: usize) -> Option<(VertexId, usize)> {
        let out = self.g.out_arcs(v);
        let (a, w) = if i < out.len() {
            (out[i], self.g.arc(out[i]).target)
        } else {
            let a = self.g.in_arcs(v)[i - out.len()];
            (a, self.g.arc(a).source)
        };
        if !(self.alive)(a) {
            return None;
        }
        if let Some(group) = self.group {
            if group[v] != group[w] {
                return None;
            }
        }
        let id = match self.g.twin_of(a) {
            Some(t) if (self.alive)(t) => a.min(t),
            _ => a,
        };
        Some((w, id))
    }
}

/// Lowlink bridge detection; one flag per edge id. Repeated adjacency slots
/// for the same edge id are harmless: the parent edge is skipped by id, and
/// a repeated tree edge seen from the parent never lowers its lowlink.
fn bridge_flags<V: UndirectedView>(view: &V) -> Vec<bool> {
    let n = view.vertex_count();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut is_bridge = vec![false; view.edge_bound()];
    let mut calls: Vec<(VertexId, usize, usize)> = Vec::new();
    let mut counter = 0;

    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = counter;
        low[root] = counter;
        counter += 1;
        calls.push((root, NONE, 0));
        while let Some(&mut (v, parent_edge, ref mut next)) = calls.last_mut() {
            if *next < view.degree(v) {
                let i = *next;
                *next += 1;
                let Some((w, e)) = view.neighbor(v, i) else {
                    continue;
                };
                if e == parent_edge {
                    continue;
                }
                if disc[w] == NONE {
                    disc[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    calls.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            calls.pop();
            if let Some(&(p, _, _)) = calls.last() {
                low[p] = low[p].min(low[v]);
                if low[v] > disc[p] {
                    is_bridge[parent_edge] = true;
                }
            }
        }
    }
    is_bridge
}

/// Connected components ignoring edges flagged in `skip` (an empty slice
/// skips nothing). Dense labels.
fn components_avoiding<V: UndirectedView>(view: &V, skip: &[bool]) -> Vec<usize> {
    let n = view.vertex_count();
    let mut comp = vec![NONE; n];
    let mut queue = VecDeque::new();
    let mut ncomp = 0;
    for root in 0..n {
        if comp[root] != NONE {
            continue;
        }
        comp[root] = ncomp;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for i in 0..view.degree(v) {
                let Some((w, e)) = view.neighbor(v, i) else {
                    continue;
                };
                if skip.get(e).copied().unwrap_or(false) || comp[w] != NONE {
                    continue;
                }
                comp[w] = ncomp;
                queue.push_back(w);
            }
        }
        ncomp += 1;
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn labels_of(g: &Digraph, class: &[VertexId]) -> Vec<String> {
        let mut c = class.to_vec();
        g.sort_by_label(&mut c);
        c.iter().map(|&v| g.label(v).to_owned()).collect()
    }

    fn class_containing(g: &Digraph, p: &Partition, label: &str) -> Vec<String> {
        let v = g.vertex(label).unwrap();
        labels_of(g, &p.classes()[p.class_of(v)])
    }

    fn fig1_minus_3_8() -> Digraph {
        let g = fixtures::g_fig1();
        let e = g.find_labeled_arc("3", "8").unwrap();
        g.remove_arcs(&[e]).unwrap()
    }

    fn path_xcy() -> UndirectedGraph {
        UndirectedGraph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn triangle() -> UndirectedGraph {
        UndirectedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn scc_examples() {
        assert_eq!(strongly_connected_components(&fixtures::c3()).len(), 1);
        assert_eq!(strongly_connected_components(&fixtures::g_fig1()).len(), 1);

        let h = fig1_minus_3_8();
        let p = strongly_connected_components(&h);
        assert_eq!(
            class_containing(&h, &p, "2"),
            ["1", "2", "5", "7", "9", "11", "12", "13", "14", "16", "17", "18", "19"]
        );
        for single in ["3", "4", "6", "8", "10", "15"] {
            assert_eq!(class_containing(&h, &p, single), [single]);
        }
        assert_eq!(p.len(), 7);
    }

    #[test]
    fn strong_connectivity_predicate() {
        let p2 = fixtures::p2();
        assert!(is_strongly_connected(&p2));
        let e = p2.find_labeled_arc("1", "2").unwrap();
        assert!(!is_strongly_connected(&p2.remove_arcs(&[e]).unwrap()));
        assert!(is_strongly_connected(&fixtures::g_fig1()));
    }

    #[test]
    fn undirected_components() {
        assert_eq!(connected_components(&triangle()).len(), 1);
        let empty = UndirectedGraph::new(3, []).unwrap();
        assert_eq!(connected_components(&empty), Partition::singletons(3));
        let two = UndirectedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        let p = connected_components(&two);
        assert_eq!(p.classes(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn undirected_bridges() {
        assert!(bridges_undirected(&triangle()).is_empty());
        assert_eq!(bridges_undirected(&path_xcy()), vec![(0, 1), (1, 2)]);

        let h = fig1_minus_3_8();
        let scc = strongly_connected_components(&h);
        let big = &scc.classes()[scc.class_of(h.vertex("2").unwrap())];
        let sub = h.induced_subgraph(big).unwrap();
        let u = sub.underlying_graph();
        let (five, seven) = (sub.vertex("5").unwrap(), sub.vertex("7").unwrap());
        assert!(bridges_undirected(&u).contains(&(five.min(seven), five.max(seven))));
    }

    #[test]
    fn undirected_two_edge_components() {
        assert_eq!(two_edge_connected_components(&triangle()).len(), 1);
        assert_eq!(
            two_edge_connected_components(&path_xcy()),
            Partition::singletons(3)
        );
        let pendant = UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let p = two_edge_connected_components(&pendant);
        assert_eq!(p.classes(), &[vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn tscc_examples() {
        let p2 = fixtures::p2();
        assert_eq!(twinless_strongly_connected_components(&p2), Partition::singletons(2));
        assert_eq!(
            twinless_strongly_connected_components(&fixtures::g_fig1()).len(),
            1
        );

        let h = fig1_minus_3_8();
        let p = twinless_strongly_connected_components(&h);
        let (two, seven) = (h.vertex("2").unwrap(), h.vertex("7").unwrap());
        assert!(!p.same_class(two, seven));
        assert_eq!(
            class_containing(&h, &p, "2"),
            ["1", "2", "5", "9", "11", "12", "13", "14", "16", "17", "18", "19"]
        );
        for single in ["7", "3", "4", "6", "8", "10", "15"] {
            assert_eq!(class_containing(&h, &p, single), [single]);
        }
        assert_eq!(p.len(), 8);
    }

    #[test]
    fn twinless_predicate() {
        assert!(is_twinless_strongly_connected(&fixtures::c3()));
        assert!(!is_twinless_strongly_connected(&fixtures::p2()));
        assert!(is_twinless_strongly_connected(&fixtures::g_fig1()));
        assert!(is_twinless_strongly_connected(&fixtures::k3b()));
        assert!(is_twinless_strongly_connected(&fixtures::g_gadget()));
        let single = Digraph::with_numbered_vertices(1, vec![]).unwrap();
        assert!(is_strongly_connected(&single));
        assert!(is_twinless_strongly_connected(&single));
    }

    #[test]
    fn condensation_examples() {
        let c3 = condensation_tscc(&fixtures::c3()).unwrap();
        assert_eq!((c3.nodes.len(), c3.edges.len()), (1, 0));
        assert!(c3.is_tree());

        let p2 = condensation_tscc(&fixtures::p2()).unwrap();
        assert_eq!((p2.nodes.len(), p2.edges.len()), (2, 1));
        assert_eq!(p2.edges[0].twin_pairs.len(), 1);

        let path: Digraph = "1 2\n2 1\n2 3\n3 2".parse().unwrap();
        let t = condensation_tscc(&path).unwrap();
        assert_eq!((t.nodes.len(), t.edges.len()), (3, 2));
        assert!(t.is_tree() && t.every_edge_carries_twin_pair());

        let broken: Digraph = "1 2\n2 3".parse().unwrap();
        assert_eq!(condensation_tscc(&broken).unwrap_err(), Error::NotStronglyConnected);
    }

    #[test]
    fn deep_path_does_not_overflow() {
        let n = 200_000;
        let mut text = String::new();
        for i in 1..n {
            text.push_str(&format!("{} {}\n{} {}\n", i, i + 1, i + 1, i));
        }
        let g: Digraph = text.parse().unwrap();
        assert_eq!(strongly_connected_components(&g).len(), 1);
        assert_eq!(twinless_strongly_connected_components(&g).len(), n);
    }
}

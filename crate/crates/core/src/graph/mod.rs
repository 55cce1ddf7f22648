//! Directed graph model.
//!
//! A [`Digraph`] is a simple directed graph over dense vertex ids `0..n`.
//! Every vertex carries the external label it was parsed from, and every arc
//! has a dense id `0..m`. Graphs are immutable: edits such as
//! [`Digraph::remove_arcs`] return a new value.

mod parse;
mod undirected;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

pub use parse::{parse_edge_list, ParseMode, Parsed};
pub use undirected::UndirectedGraph;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type ArcId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub source: VertexId,
    pub target: VertexId,
}

/// Two antiparallel arcs `(u, v)` and `(v, u)`. `forward` is the arc with the
/// smaller id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwinPair {
    pub forward: ArcId,
    pub backward: ArcId,
}

#[derive(Debug, Clone)]
pub struct Digraph {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    arcs: Vec<Arc>,
    out_adj: Vec<Vec<ArcId>>,
    in_adj: Vec<Vec<ArcId>>,
    twin: Vec<Option<ArcId>>,
}

/// Total order on vertex labels: integer labels compare numerically and sort
/// before all other labels, which compare as strings.
pub fn compare_labels(a: &str, b: &str) -> Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

impl Digraph {
    /// Builds a graph from explicit labels and arcs given as id pairs.
    pub fn from_parts(labels: Vec<String>, arcs: Vec<Arc>) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (v, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), v).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let mut by_pair: HashMap<(VertexId, VertexId), ArcId> = HashMap::with_capacity(arcs.len());
        for (id, arc) in arcs.iter().enumerate() {
            for v in [arc.source, arc.target] {
                if v >= n {
                    return Err(Error::UnknownVertex(v));
                }
            }
            if arc.source == arc.target {
                return Err(Error::SelfLoop {
                    line: 0,
                    label: labels[arc.source].clone(),
                });
            }
            if by_pair.insert((arc.source, arc.target), id).is_some() {
                return Err(Error::DuplicateArc {
                    line: 0,
                    source_label: labels[arc.source].clone(),
                    target_label: labels[arc.target].clone(),
                });
            }
            out_adj[arc.source].push(id);
            in_adj[arc.target].push(id);
        }
        let twin = arcs
            .iter()
            .map(|a| by_pair.get(&(a.target, a.source)).copied())
            .collect();
        Ok(Self {
            labels,
            index,
            arcs,
            out_adj,
            in_adj,
            twin,
        })
    }

    /// Builds a graph from labeled arcs, interning labels in first-appearance order.
    pub fn from_labeled_arcs<I, S>(arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, VertexId> = HashMap::new();
        let mut intern = |s: &str| -> VertexId {
            if let Some(&v) = index.get(s) {
                return v;
            }
            labels.push(s.to_owned());
            index.insert(s.to_owned(), labels.len() - 1);
            labels.len() - 1
        };
        let arcs: Vec<Arc> = arcs
            .into_iter()
            .map(|(s, t)| Arc {
                source: intern(s.as_ref()),
                target: intern(t.as_ref()),
            })
            .collect();
        Self::from_parts(labels, arcs)
    }

    /// A graph on `n` vertices labeled `1..=n`.
    pub fn with_numbered_vertices(n: usize, arcs: Vec<Arc>) -> Result<Self> {
        Self::from_parts((1..=n).map(|i| i.to_string()).collect(), arcs)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: ArcId) -> Arc {
        self.arcs[id]
    }

    pub fn out_arcs(&self, v: VertexId) -> &[ArcId] {
        &self.out_adj[v]
    }

    pub fn in_arcs(&self, v: VertexId) -> &[ArcId] {
        &self.in_adj[v]
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    /// The antiparallel partner of `arc`, if present.
    pub fn twin_of(&self, arc: ArcId) -> Option<ArcId> {
        self.twin[arc]
    }

    pub fn find_arc(&self, source: VertexId, target: VertexId) -> Option<ArcId> {
        self.out_adj
            .get(source)?
            .iter()
            .copied()
            .find(|&a| self.arcs[a].target == target)
    }

    /// Looks an arc up by the labels of its endpoints.
    pub fn find_labeled_arc(&self, source: &str, target: &str) -> Option<ArcId> {
        self.find_arc(self.vertex(source)?, self.vertex(target)?)
    }

    pub fn arc_labels(&self, id: ArcId) -> (&str, &str) {
        let a = self.arcs[id];
        (self.label(a.source), self.label(a.target))
    }

    pub fn twin_pairs(&self) -> Vec<TwinPair> {
        self.twin
            .iter()
            .enumerate()
            .filter_map(|(a, t)| match *t {
                Some(b) if a < b => Some(TwinPair {
                    forward: a,
                    backward: b,
                }),
                _ => None,
            })
            .collect()
    }

    /// Copy of the graph without the arcs in `drop`. Vertex ids and labels are
    /// kept; surviving arcs are renumbered in their original order.
    pub fn remove_arcs(&self, drop: &[ArcId]) -> Result<Digraph> {
        let mut dropped = vec![false; self.m()];
        for &a in drop {
            if a >= self.m() {
                return Err(Error::UnknownArc(a));
            }
            dropped[a] = true;
        }
        let arcs = self
            .arcs
            .iter()
            .zip(&dropped)
            .filter(|(_, &d)| !d)
            .map(|(a, _)| *a)
            .collect();
        Digraph::from_parts(self.labels.clone(), arcs)
    }

    pub fn underlying_graph(&self) -> UndirectedGraph {
        let edges = self
            .arcs
            .iter()
            .map(|a| (a.source.min(a.target), a.source.max(a.target)))
            .collect::<BTreeSet<_>>();
        UndirectedGraph::from_normalized(self.n(), edges.into_iter().collect())
    }

    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<Digraph> {
        self.induced_subgraph_with_map(keep).map(|(g, _)| g)
    }

    /// Induced subgraph on `keep` (new ids follow the ascending order of the
    /// kept ids), together with the map from new ids back to ids of `self`.
    pub fn induced_subgraph_with_map(&self, keep: &[VertexId]) -> Result<(Digraph, Vec<VertexId>)> {
        let mut local = vec![usize::MAX; self.n()];
        for &v in keep {
            if v >= self.n() {
                return Err(Error::UnknownVertex(v));
            }
            local[v] = 0;
        }
        let mut back = Vec::with_capacity(keep.len());
        for (v, slot) in local.iter_mut().enumerate() {
            if *slot == 0 {
                *slot = back.len();
                back.push(v);
            }
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|a| local[a.source] != usize::MAX && local[a.target] != usize::MAX)
            .map(|a| Arc {
                source: local[a.source],
                target: local[a.target],
            })
            .collect();
        let labels = back.iter().map(|&v| self.labels[v].clone()).collect();
        Ok((Digraph::from_parts(labels, arcs)?, back))
    }

    /// The arc set as label pairs; equal for graphs that differ only in id assignment.
    pub fn labeled_arc_set(&self) -> BTreeSet<(String, String)> {
        self.arcs
            .iter()
            .map(|a| (self.labels[a.source].clone(), self.labels[a.target].clone()))
            .collect()
    }

    pub fn label_set(&self) -> BTreeSet<String> {
        self.labels.iter().cloned().collect()
    }

    /// Vertex ids sorted by label order.
    pub fn sort_by_label(&self, vertices: &mut [VertexId]) {
        vertices.sort_by(|&a, &b| compare_labels(&self.labels[a], &self.labels[b]));
    }

    /// Canonical edge-list text: one `SOURCE TARGET` line per arc, sorted by
    /// source label then target label, lines joined by `\n`.
    pub fn serialize(&self) -> String {
        let mut arcs: Vec<(&str, &str)> = (0..self.m()).map(|a| self.arc_labels(a)).collect();
        arcs.sort_by(|x, y| compare_labels(x.0, y.0).then_with(|| compare_labels(x.1, y.1)));
        arcs.iter()
            .map(|(s, t)| format!("{s} {t}"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl std::str::FromStr for Digraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_edge_list(s, ParseMode::Strict).map(|p| p.graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn twin_pairs_of_fixtures() {
        assert!(fixtures::c3().twin_pairs().is_empty());
        let p2 = fixtures::p2();
        assert_eq!(p2.twin_pairs(), vec![TwinPair { forward: 0, backward: 1 }]);

        let g = fixtures::g_fig1();
        let pairs = g.twin_pairs();
        assert_eq!(pairs.len(), 1);
        let mut ends = [g.arc_labels(pairs[0].forward), g.arc_labels(pairs[0].backward)];
        ends.sort();
        assert_eq!(ends, [("5", "7"), ("7", "5")]);
    }

    #[test]
    fn removing_one_twin_breaks_the_pair() {
        let g = fixtures::g_fig1();
        let a = g.find_labeled_arc("5", "7").unwrap();
        let h = g.remove_arcs(&[a]).unwrap();
        assert!(h.twin_pairs().is_empty());
        assert_eq!(h.m(), 26);
    }

    #[test]
    fn remove_arcs_edge_cases() {
        let g = fixtures::g_fig1();
        let e = g.find_labeled_arc("3", "8").unwrap();
        let h = g.remove_arcs(&[e]).unwrap();
        assert_eq!((h.n(), h.m()), (19, 26));
        assert_eq!(g.m(), 27);
        assert!(h.find_labeled_arc("3", "8").is_none());

        let c3 = fixtures::c3();
        let same = c3.remove_arcs(&[]).unwrap();
        assert_eq!(same.labeled_arc_set(), c3.labeled_arc_set());
        assert_eq!(c3.remove_arcs(&[3]).unwrap_err(), Error::UnknownArc(3));
    }

    #[test]
    fn underlying_graph_collapses_twins() {
        assert_eq!(fixtures::p2().underlying_graph().edges(), &[(0, 1)]);
        assert_eq!(fixtures::k3b().underlying_graph().edge_count(), 3);
        assert_eq!(fixtures::c3().underlying_graph().edge_count(), 3);
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = fixtures::g_fig1();
        let keep: Vec<_> = ["12", "16", "18"].iter().map(|l| g.vertex(l).unwrap()).collect();
        let h = g.induced_subgraph(&keep).unwrap();
        let expected: BTreeSet<_> = [("12", "16"), ("16", "18")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(h.labeled_arc_set(), expected);

        let c3 = fixtures::c3();
        let all = c3.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(all.labeled_arc_set(), c3.labeled_arc_set());
        let one = c3.induced_subgraph(&[c3.vertex("1").unwrap()]).unwrap();
        assert_eq!((one.n(), one.m()), (1, 0));
        assert_eq!(c3.induced_subgraph(&[7]).unwrap_err(), Error::UnknownVertex(7));
    }

    #[test]
    fn label_order_is_numeric_first() {
        let mut v = vec!["b", "12", "2", "a", "-1"];
        v.sort_by(|a, b| compare_labels(a, b));
        assert_eq!(v, ["-1", "2", "12", "a", "b"]);
    }

    #[test]
    fn from_parts_rejects_bad_input() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let loop_arc = vec![Arc { source: 0, target: 0 }];
        assert!(matches!(
            Digraph::from_parts(labels.clone(), loop_arc),
            Err(Error::SelfLoop { .. })
        ));
        let dup = vec![Arc { source: 0, target: 1 }, Arc { source: 0, target: 1 }];
        assert!(matches!(
            Digraph::from_parts(labels.clone(), dup),
            Err(Error::DuplicateArc { .. })
        ));
        assert!(matches!(
            Digraph::from_parts(vec!["a".into(), "a".into()], vec![]),
            Err(Error::DuplicateLabel(_))
        ));
    }
}

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// Disjoint nonempty vertex classes covering `0..n`.
///
/// Always stored in canonical form: vertices ascending inside a class, classes
/// ordered by their smallest vertex. Two partitions are equal iff they group
/// the same vertices together.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<VertexId>>,
}

impl Partition {
    /// Builds a partition from any per-vertex labelling: vertices with equal
    /// labels share a class.
    pub fn from_labels<L: Eq + std::hash::Hash + Copy>(labels: &[L]) -> Self {
        let mut rename: HashMap<L, usize> = HashMap::new();
        let mut classes: Vec<Vec<VertexId>> = Vec::new();
        let class_of = labels
            .iter()
            .enumerate()
            .map(|(v, l)| {
                let c = *rename.entry(*l).or_insert_with(|| {
                    classes.push(Vec::new());
                    classes.len() - 1
                });
                classes[c].push(v);
                c
            })
            .collect();
        Self { class_of, classes }
    }

    /// Dense labels `0..k`; cheaper than [`Partition::from_labels`].
    pub(crate) fn from_dense_labels(labels: &[usize]) -> Self {
        let mut rename = vec![usize::MAX; labels.len()];
        let mut classes: Vec<Vec<VertexId>> = Vec::new();
        let class_of = labels
            .iter()
            .enumerate()
            .map(|(v, &l)| {
                if rename[l] == usize::MAX {
                    rename[l] = classes.len();
                    classes.push(Vec::new());
                }
                classes[rename[l]].push(v);
                rename[l]
            })
            .collect();
        Self { class_of, classes }
    }

    /// Validates that `classes` are disjoint, nonempty and cover `0..n`.
    pub fn from_classes(n: usize, classes: Vec<Vec<VertexId>>) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::NotAPartition(n));
            }
            for &v in class {
                if v >= n || labels[v] != usize::MAX {
                    return Err(Error::NotAPartition(n));
                }
                labels[v] = c;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::NotAPartition(n));
        }
        Ok(Self::from_dense_labels(&labels))
    }

    /// One class holding every vertex (no classes when `n == 0`).
    pub fn whole(n: usize) -> Self {
        Self::from_dense_labels(&vec![0; n])
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_dense_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn universe(&self) -> usize {
        self.class_of.len()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    pub fn class_of(&self, v: VertexId) -> usize {
        self.class_of[v]
    }

    pub fn class_labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn same_class(&self, u: VertexId, v: VertexId) -> bool {
        self.class_of[u] == self.class_of[v]
    }

    /// True if every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.universe() == coarser.universe()
            && self
                .classes
                .iter()
                .all(|c| c.iter().all(|&v| coarser.same_class(c[0], v)))
    }

    /// Coarsest common refinement: `u` and `v` share a class iff they share
    /// one in both operands.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        if self.universe() != other.universe() {
            return Err(Error::UniverseMismatch {
                left: self.universe(),
                right: other.universe(),
            });
        }
        let pairs: Vec<(usize, usize)> = self
            .class_of
            .iter()
            .zip(&other.class_of)
            .map(|(&a, &b)| (a, b))
            .collect();
        Ok(Self::from_labels(&pairs))
    }

    /// Meet with a partition given as raw per-vertex labels over the same universe.
    pub(crate) fn meet_labels(&self, labels: &[usize]) -> Partition {
        debug_assert_eq!(labels.len(), self.universe());
        let pairs: Vec<(usize, usize)> = self
            .class_of
            .iter()
            .zip(labels)
            .map(|(&a, &b)| (a, b))
            .collect();
        Self::from_labels(&pairs)
    }
}

pub fn partition_meet(p: &Partition, q: &Partition) -> Result<Partition> {
    p.meet(q)
}

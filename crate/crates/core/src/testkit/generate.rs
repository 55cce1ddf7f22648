use std::collections::HashSet;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::{is_strongly_connected, is_twinless_strongly_connected};
use crate::error::{Error, Result};
use crate::graph::{Arc, Digraph, VertexId};

/// Uniform attempts before falling back to a planted Hamiltonian cycle.
const REJECTION_ATTEMPTS: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Shape {
    #[default]
    Any,
    StronglyConnected,
    TwinlessStronglyConnected,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub n: RangeInclusive<usize>,
    pub m: RangeInclusive<usize>,
    /// Probability that a new arc is the reverse of an existing one.
    pub twin_density: f64,
    pub max_twin_pairs: Option<usize>,
    pub seed: u64,
    pub shape: Shape,
}

impl GeneratorConfig {
    pub fn new(n: usize, m: usize, seed: u64) -> Self {
        Self {
            n: n..=n,
            m: m..=m,
            twin_density: 0.2,
            max_twin_pairs: None,
            seed,
            shape: Shape::Any,
        }
    }

    pub fn ranges(n: RangeInclusive<usize>, m: RangeInclusive<usize>, seed: u64) -> Self {
        Self {
            n,
            m,
            ..Self::new(0, 0, seed)
        }
    }

    pub fn shape(mut self, shape: Shape) -> Self {
        self.shape = shape;
        self
    }

    pub fn twin_density(mut self, density: f64) -> Self {
        self.twin_density = density;
        self
    }

    pub fn max_twin_pairs(mut self, cap: usize) -> Self {
        self.max_twin_pairs = Some(cap);
        self
    }
}

struct Builder {
    n: usize,
    arcs: Vec<(VertexId, VertexId)>,
    present: HashSet<(VertexId, VertexId)>,
    pairs: usize,
    cap: usize,
}

impl Builder {
    fn new(n: usize, cap: usize) -> Self {
        Self {
            n,
            arcs: Vec::new(),
            present: HashSet::new(),
            pairs: 0,
            cap,
        }
    }

    fn admits(&self, u: VertexId, v: VertexId) -> bool {
        u != v
            && !self.present.contains(&(u, v))
            && (self.pairs < self.cap || !self.present.contains(&(v, u)))
    }

    fn push(&mut self, u: VertexId, v: VertexId) {
        if self.present.contains(&(v, u)) {
            self.pairs += 1;
        }
        self.present.insert((u, v));
        self.arcs.push((u, v));
    }

    fn add_random(&mut self, rng: &mut ChaCha8Rng, density: f64) -> bool {
        if !self.arcs.is_empty() && self.pairs < self.cap && rng.gen_bool(density) {
            for _ in 0..8 {
                let &(u, v) = self.arcs.choose(rng).expect("nonempty");
                if self.admits(v, u) {
                    self.push(v, u);
                    return true;
                }
            }
        }
        for _ in 0..64 {
            let (u, v) = (rng.gen_range(0..self.n), rng.gen_range(0..self.n));
            if self.admits(u, v) {
                self.push(u, v);
                return true;
            }
        }
        let open: Vec<(VertexId, VertexId)> = (0..self.n)
            .flat_map(|u| (0..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.admits(u, v))
            .collect();
        match open.choose(rng) {
            Some(&(u, v)) => {
                self.push(u, v);
                true
            }
            None => false,
        }
    }

    fn fill(&mut self, rng: &mut ChaCha8Rng, m: usize, density: f64) -> Result<()> {
        while self.arcs.len() < m {
            if !self.add_random(rng, density) {
                return Err(Error::InfeasibleConfig(format!(
                    "cannot place {m} arcs on {} vertices",
                    self.n
                )));
            }
        }
        Ok(())
    }

    fn build(mut self, rng: &mut ChaCha8Rng) -> Result<Digraph> {
        self.arcs.shuffle(rng);
        let arcs = self
            .arcs
            .into_iter()
            .map(|(source, target)| Arc { source, target })
            .collect();
        Digraph::with_numbered_vertices(self.n, arcs)
    }
}

fn accepts(shape: Shape, g: &Digraph) -> bool {
    match shape {
        Shape::Any => true,
        Shape::StronglyConnected => is_strongly_connected(g),
        Shape::TwinlessStronglyConnected => is_twinless_strongly_connected(g),
    }
}

/// Seeded random simple digraph with vertices labeled `1..=n`. The same
/// config always yields the same graph.
pub fn random_digraph(cfg: &GeneratorConfig) -> Result<Digraph> {
    let infeasible = |why: String| Err(Error::InfeasibleConfig(why));
    if cfg.n.is_empty() || cfg.m.is_empty() {
        return infeasible("empty vertex or arc range".into());
    }
    if !(0.0..=1.0).contains(&cfg.twin_density) {
        return infeasible(format!("twin density {} outside [0, 1]", cfg.twin_density));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = rng.gen_range(cfg.n.clone());
    let cap = cfg.max_twin_pairs.unwrap_or(usize::MAX);
    let half = n * n.saturating_sub(1) / 2;
    let most = half + cap.min(half);
    let least = match (cfg.shape, n) {
        (Shape::Any, _) | (_, 0 | 1) => 0,
        (Shape::TwinlessStronglyConnected, 2) => {
            return infeasible("no twinless strongly connected graph has 2 vertices".into())
        }
        (Shape::StronglyConnected, 2) if cap == 0 => {
            return infeasible("2 strongly connected vertices need a twin pair".into())
        }
        _ => n,
    };
    let lo = least.max(*cfg.m.start());
    let hi = most.min(*cfg.m.end());
    if lo > hi {
        return infeasible(format!(
            "arc range {:?} impossible for n = {n} (need {least}..={most})",
            cfg.m
        ));
    }
    let m = rng.gen_range(lo..=hi);

    if cfg.shape == Shape::Any || n <= 1 {
        let mut b = Builder::new(n, cap);
        b.fill(&mut rng, m, cfg.twin_density)?;
        return b.build(&mut rng);
    }

    for _ in 0..REJECTION_ATTEMPTS {
        let mut b = Builder::new(n, cap);
        b.fill(&mut rng, m, cfg.twin_density)?;
        let g = b.build(&mut rng)?;
        if accepts(cfg.shape, &g) {
            return Ok(g);
        }
    }

    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut b = Builder::new(n, cap);
    for i in 0..n {
        b.push(order[i], order[(i + 1) % n]);
    }
    b.fill(&mut rng, m, cfg.twin_density)?;
    let g = b.build(&mut rng)?;
    if accepts(cfg.shape, &g) {
        Ok(g)
    } else {
        infeasible(format!("could not realize shape {:?}", cfg.shape))
    }
}

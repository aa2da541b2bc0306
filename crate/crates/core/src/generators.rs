//! Deterministic seeded graph families.
//!
//! Randomness comes from SplitMix64 (Steele, Lea and Flood, 2014): the state
//! advances by `0x9E3779B97F4A7C15` and each output is mixed with
//!
//! ```text
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z =  z ^ (z >> 31)
//! ```
//!
//! Integers below a bound use the high word of a 128-bit product
//! (`(x * bound) >> 64`); probabilities use the top 53 bits as a double in
//! `[0, 1)`. The generator is local so ports in other languages can reproduce
//! every graph edge for edge.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: usize) -> usize {
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }

    /// Integer in `lo..=hi`.
    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Uniformly random labeled tree (Prüfer decoding).
    Tree,
    Cycle,
    Complete,
    /// Tree of cycles and bridges: each step hangs either a fresh edge or a
    /// cycle of `3..=max_cycle` vertices from a random existing vertex.
    Cactus {
        cycle_prob: f64,
        max_cycle: usize,
    },
    /// Uniform random spanning tree plus every other pair with probability `p`.
    RandomConnected {
        p: f64,
    },
    /// Chains of blocks glued through cut vertices. A block of size 2 is an
    /// edge, larger blocks are cycles. Each chain starts at the hub vertex 0;
    /// with a single chain this is a plain path of blocks.
    BlockChain {
        chains: Vec<Vec<usize>>,
    },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Tree => "tree",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Cactus { .. } => "cactus",
            Family::RandomConnected { .. } => "random_connected",
            Family::BlockChain { .. } => "block_chain",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, n: usize, seed: u64) -> Self {
        Self { family, n, seed }
    }

    /// Block chain spec with `n` derived from the block sizes.
    pub fn block_chain(chains: Vec<Vec<usize>>) -> Self {
        let n = block_chain_order(&chains);
        Self {
            family: Family::BlockChain { chains },
            n,
            seed: 0,
        }
    }
}

fn block_chain_order(chains: &[Vec<usize>]) -> usize {
    1 + chains
        .iter()
        .flatten()
        .map(|&s| s.saturating_sub(1))
        .sum::<usize>()
}

pub fn generate(spec: &GenSpec) -> Result<Graph, GenError> {
    let n = spec.n;
    if n == 0 {
        return Err(GenError::InvalidSpec("n must be at least 1".into()));
    }
    let mut rng = SplitMix64::new(spec.seed);
    let edges = match &spec.family {
        Family::Tree => random_tree(n, &mut rng),
        Family::Cycle => {
            if n < 3 {
                return Err(GenError::InvalidSpec("a cycle needs n >= 3".into()));
            }
            (0..n).map(|i| (i, (i + 1) % n)).collect()
        }
        Family::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        Family::Cactus {
            cycle_prob,
            max_cycle,
        } => {
            check_probability(*cycle_prob)?;
            if *max_cycle < 3 {
                return Err(GenError::InvalidSpec("max_cycle must be at least 3".into()));
            }
            cactus(n, *cycle_prob, *max_cycle, &mut rng)
        }
        Family::RandomConnected { p } => {
            check_probability(*p)?;
            random_connected(n, *p, &mut rng)
        }
        Family::BlockChain { chains } => {
            if chains.is_empty() || chains.iter().any(Vec::is_empty) {
                return Err(GenError::InvalidSpec("block_chain needs nonempty chains".into()));
            }
            if chains.iter().flatten().any(|&s| s < 2) {
                return Err(GenError::InvalidSpec("block sizes must be at least 2".into()));
            }
            let order = block_chain_order(chains);
            if order != n {
                return Err(GenError::InvalidSpec(format!(
                    "block sizes give {order} vertices, spec says {n}"
                )));
            }
            block_chain(chains)
        }
    };
    Ok(Graph::from_edges(n, &edges)?)
}

fn check_probability(p: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenError::InvalidSpec(format!("probability {p} outside [0, 1]")))
    }
}

/// Decodes a random Prüfer sequence in linear time.
fn random_tree(n: usize, rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    if n <= 2 {
        return if n == 2 { vec![(0, 1)] } else { vec![] };
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.below(n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &x in &code {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

fn random_connected(n: usize, p: f64, rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    let mut edges = random_tree(n, rng);
    let mut tree_adj = vec![Vec::new(); n];
    for &(u, v) in &edges {
        tree_adj[u].push(v);
        tree_adj[v].push(u);
    }
    // Quadratic in n; meant for the small graphs of the oracle suites.
    for (u, tree_nbrs) in tree_adj.iter().enumerate() {
        for v in u + 1..n {
            if !tree_nbrs.contains(&v) && rng.unit() < p {
                edges.push((u, v));
            }
        }
    }
    edges
}

fn cactus(n: usize, cycle_prob: f64, max_cycle: usize, rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(2 * n);
    let mut next = 1;
    while next < n {
        let anchor = rng.below(next);
        let remaining = n - next;
        let fresh = if remaining >= 2 && rng.unit() < cycle_prob {
            rng.between(2, (max_cycle - 1).min(remaining))
        } else {
            1
        };
        let mut prev = anchor;
        for v in next..next + fresh {
            edges.push((prev, v));
            prev = v;
        }
        if fresh >= 2 {
            edges.push((prev, anchor));
        }
        next += fresh;
    }
    edges
}

fn block_chain(chains: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let mut next = 1;
    for chain in chains {
        let mut joint = 0;
        for &size in chain {
            let fresh: Vec<usize> = (next..next + size - 1).collect();
            next += size - 1;
            let mut prev = joint;
            for &v in &fresh {
                edges.push((prev, v));
                prev = v;
            }
            if size >= 3 {
                edges.push((prev, joint));
            }
            joint = *fresh.last().unwrap();
        }
    }
    edges
}

/// Every connected labeled graph on `1..=n_max` vertices, by increasing order
/// and then by edge-subset mask. Isomorphic copies are all included.
pub fn enumerate_small(n_max: usize) -> Result<impl Iterator<Item = Graph>, GenError> {
    if n_max > 7 {
        return Err(GenError::InvalidSpec(format!(
            "exhaustive enumeration supports n_max <= 7, got {n_max}"
        )));
    }
    Ok((1..=n_max).flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0..1u64 << pairs.len()).filter_map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            spans(n, &edges).then(|| Graph::from_edges(n, &edges).expect("checked connected"))
        })
    }))
}

fn spans(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut reach = 1u64;
    loop {
        let before = reach;
        for &(u, v) in edges {
            if reach >> u & 1 == 1 || reach >> v & 1 == 1 {
                reach |= 1 << u | 1 << v;
            }
        }
        if reach == before {
            return reach.count_ones() as usize == n;
        }
    }
}

/// Eighteen-vertex graph with seven blocks: `{a,b}`, `{b,c,d}`, `{b,e,g,f}`,
/// `{f,l,u,v,w}`, `{h,i,j,k,l}`, `{w,x}` and `{w,y,z}`, each realized as a
/// cycle (or an edge) in the listed order. Cut vertices are `b, f, l, w`.
pub fn seven_block_graph() -> Graph {
    const BLOCKS: [&[&str]; 7] = [
        &["a", "b"],
        &["b", "c", "d"],
        &["b", "e", "g", "f"],
        &["f", "l", "u", "v", "w"],
        &["h", "i", "j", "k", "l"],
        &["w", "x"],
        &["w", "y", "z"],
    ];
    let mut edges = Vec::new();
    for block in BLOCKS {
        if block.len() == 2 {
            edges.push((block[0], block[1]));
            continue;
        }
        for i in 0..block.len() {
            edges.push((block[i], block[(i + 1) % block.len()]));
        }
    }
    Graph::from_labeled_edges(&edges).expect("seven-block graph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::decompose;

    #[test]
    fn splitmix_reference_values() {
        // Published first outputs for seed 1234567.
        let mut rng = SplitMix64::new(1234567);
        assert_eq!(rng.next_u64(), 6457827717110365317);
        assert_eq!(rng.next_u64(), 3203168211198807973);
        assert_eq!(rng.next_u64(), 9817491932198370423);
    }

    #[test]
    fn cycle_family() {
        let g = generate(&GenSpec::new(Family::Cycle, 4, 0)).unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 3), (1, 2), (2, 3)]
        );
        assert!(generate(&GenSpec::new(Family::Cycle, 2, 0)).is_err());
    }

    #[test]
    fn block_chain_structure() {
        let g = generate(&GenSpec::block_chain(vec![vec![2, 3, 4]])).unwrap();
        assert_eq!(g.n(), 7);
        let t = decompose(&g);
        assert_eq!(t.block_count(), 3);
        assert_eq!(t.cut_vertices().len(), 2);
        let stats = t.end_block_stats();
        assert_eq!((stats.eb, stats.b), (2, 2));
        let mut sizes: Vec<_> = t.blocks().map(<[usize]>::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3, 4]);
    }

    #[test]
    fn block_chain_hub() {
        let g = generate(&GenSpec::block_chain(vec![vec![3], vec![4, 2], vec![5]])).unwrap();
        let stats = decompose(&g).end_block_stats();
        assert_eq!((stats.eb, stats.b), (3, 2));
    }

    #[test]
    fn block_chain_rejects_bad_sizes() {
        assert!(generate(&GenSpec::block_chain(vec![vec![1, 3]])).is_err());
        assert!(generate(&GenSpec::block_chain(vec![])).is_err());
        let mut spec = GenSpec::block_chain(vec![vec![3]]);
        spec.n = 9;
        assert!(matches!(generate(&spec), Err(GenError::InvalidSpec(_))));
    }

    #[test]
    fn cactus_is_sparse() {
        let spec = GenSpec::new(
            Family::Cactus {
                cycle_prob: 0.5,
                max_cycle: 6,
            },
            100_000,
            7,
        );
        let g = generate(&spec).unwrap();
        assert_eq!(g.n(), 100_000);
        assert!(g.m() < 2 * g.n());
    }

    #[test]
    fn deterministic_by_seed() {
        let spec = GenSpec::new(Family::RandomConnected { p: 0.3 }, 12, 99);
        let a = generate(&spec).unwrap().to_edge_list();
        assert_eq!(a, generate(&spec).unwrap().to_edge_list());
        let other = GenSpec { seed: 100, ..spec };
        assert_ne!(a, generate(&other).unwrap().to_edge_list());
    }

    #[test]
    fn small_enumeration() {
        let small: Vec<_> = enumerate_small(2).unwrap().collect();
        assert_eq!(small.len(), 2);
        assert_eq!((small[0].n(), small[0].m()), (1, 0));
        assert_eq!((small[1].n(), small[1].m()), (2, 1));
        let three: Vec<_> = enumerate_small(3).unwrap().filter(|g| g.n() == 3).collect();
        // Three labeled paths and the triangle.
        assert_eq!(three.len(), 4);
        assert!(three.iter().any(|g| g.m() == 3));
        assert!(enumerate_small(8).is_err());
    }

    #[test]
    fn seven_block_graph_shape() {
        let g = seven_block_graph();
        assert_eq!((g.n(), g.m()), (18, 1 + 3 + 4 + 5 + 5 + 1 + 3));
    }
}

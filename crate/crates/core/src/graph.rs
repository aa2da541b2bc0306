//! Immutable simple connected undirected graphs and vertex sets.
//!
//! Vertices are dense indices `0..n`. Every graph also carries an external
//! label per vertex; labels are fixed at construction time in
//! first-appearance order.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("line {line}: expected one or two vertex labels, got {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("line {line}: self-loop on vertex {label:?}")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge {u:?} -- {v:?}")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error(
        "graph is disconnected ({components} components); vertex {label:?} is unreachable from {root:?}"
    )]
    Disconnected {
        components: usize,
        root: String,
        label: String,
    },
    #[error("vertex index {index} out of range for graph with {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        Self {
            members: (0..n).collect(),
        }
    }

    pub fn singleton(v: usize) -> Self {
        Self { members: vec![v] }
    }

    /// Builds a set from an indicator mask.
    pub fn from_mask(mask: &[bool]) -> Self {
        Self {
            members: mask
                .iter()
                .enumerate()
                .filter_map(|(v, &on)| on.then_some(v))
                .collect(),
        }
    }

    /// Builds a set from the low `n` bits of `bits` (`n <= 64`).
    pub fn from_bits(bits: u64, n: usize) -> Self {
        Self {
            members: (0..n.min(64)).filter(|&v| bits >> v & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    /// Largest member plus one, or zero for the empty set.
    pub fn bound(&self) -> usize {
        self.members.last().map_or(0, |&v| v + 1)
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.members {
            mask[v] = true;
        }
        mask
    }

    pub fn to_bits(&self) -> u64 {
        self.members.iter().fold(0, |acc, &v| acc | 1 << v)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        let mut rest = other.members.iter();
        self.members.iter().all(|v| rest.by_ref().any(|w| w == v))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.members
            .iter()
            .copied()
            .filter(|&v| other.contains(v))
            .collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.members
            .iter()
            .copied()
            .filter(|&v| !other.contains(v))
            .collect()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.members.binary_search(&v) {
            Ok(_) => false,
            Err(at) => {
                self.members.insert(at, v);
                true
            }
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self { members }
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.members).finish()
    }
}

/// A finite, simple, nonempty, connected undirected graph.
///
/// Adjacency is stored in compressed sparse rows with every neighbor list
/// sorted ascending.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Graph {
    /// Builds a graph on vertices `0..n` labeled by their decimal index.
    ///
    /// Errors report the offending edge by its 1-based position in `edges`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let labels = (0..n).map(|v| v.to_string()).collect();
        let numbered: Vec<_> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (i + 1, u, v))
            .collect();
        for &(_, u, v) in &numbered {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { index: w, n });
                }
            }
        }
        Self::build(labels, &numbered)
    }

    /// Builds a graph from labeled edges; labels get indices in first-appearance order.
    pub fn from_labeled_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self, GraphError> {
        let mut labels = Vec::new();
        let mut index = HashMap::new();
        let mut numbered = Vec::with_capacity(edges.len());
        for (i, (u, v)) in edges.iter().enumerate() {
            let u = intern(&mut labels, &mut index, u.as_ref());
            let v = intern(&mut labels, &mut index, v.as_ref());
            numbered.push((i + 1, u, v));
        }
        Self::build(labels, &numbered)
    }

    /// Parses the edge-list text format.
    ///
    /// Each non-blank line that does not start with `#` holds two
    /// whitespace-separated labels (an edge) or a single label (a vertex with
    /// no edges on that line, which is how the one-vertex graph is written).
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut labels = Vec::new();
        let mut index = HashMap::new();
        let mut numbered = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            match fields.as_slice() {
                [v] => {
                    intern(&mut labels, &mut index, v);
                }
                [u, v] => {
                    let u = intern(&mut labels, &mut index, u);
                    let v = intern(&mut labels, &mut index, v);
                    numbered.push((i + 1, u, v));
                }
                _ => {
                    return Err(GraphError::MalformedLine {
                        line: i + 1,
                        content: line.to_string(),
                    })
                }
            }
        }
        Self::build(labels, &numbered)
    }

    fn build(labels: Vec<String>, edges: &[(usize, usize, usize)]) -> Result<Self, GraphError> {
        let n = labels.len();
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut degree = vec![0usize; n];
        for &(line, u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop {
                    line,
                    label: labels[u].clone(),
                });
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0; offsets[n]];
        let mut origin = vec![0; offsets[n]];
        for &(line, u, v) in edges {
            targets[fill[u]] = v;
            origin[fill[u]] = line;
            fill[u] += 1;
            targets[fill[v]] = u;
            origin[fill[v]] = line;
            fill[v] += 1;
        }
        for u in 0..n {
            let range = offsets[u]..offsets[u + 1];
            let mut row: Vec<(usize, usize)> = targets[range.clone()]
                .iter()
                .copied()
                .zip(origin[range.clone()].iter().copied())
                .collect();
            row.sort_unstable();
            if let Some(pair) = row.windows(2).find(|w| w[0].0 == w[1].0) {
                let (v, line) = (pair[0].0, pair[0].1.max(pair[1].1));
                let (a, b) = if u < v { (u, v) } else { (v, u) };
                return Err(GraphError::DuplicateEdge {
                    line,
                    u: labels[a].clone(),
                    v: labels[b].clone(),
                });
            }
            for (slot, (v, _)) in targets[range].iter_mut().zip(row) {
                *slot = v;
            }
        }
        let index = labels.iter().enumerate().map(|(v, l)| (l.clone(), v)).collect();
        let graph = Self {
            offsets,
            targets,
            labels,
            index,
        };
        let components = graph.components_avoiding(&vec![false; n]);
        if components.len() > 1 {
            return Err(GraphError::Disconnected {
                components: components.len(),
                root: graph.labels[0].clone(),
                label: graph.labels[components[1].as_slice()[0]].clone(),
            });
        }
        Ok(graph)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Checks indices against this graph and builds a set.
    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, iter: I) -> Result<VertexSet, GraphError> {
        let n = self.n();
        iter.into_iter()
            .map(|v| {
                if v < n {
                    Ok(v)
                } else {
                    Err(GraphError::VertexOutOfRange { index: v, n })
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(VertexSet::from_iter)
    }

    pub fn labeled_set<I, S>(&self, labels: I) -> Result<VertexSet, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels
            .into_iter()
            .map(|l| {
                self.vertex(l.as_ref())
                    .ok_or_else(|| GraphError::UnknownLabel(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(VertexSet::from_iter)
    }

    pub fn set_labels<'a>(&'a self, s: &'a VertexSet) -> impl Iterator<Item = &'a str> + 'a {
        s.iter().map(move |v| self.label(v))
    }

    /// Serializes back to the edge-list format, edges in lexicographic index order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        if self.m() == 0 {
            for l in &self.labels {
                out.push_str(l);
                out.push('\n');
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&self.labels[u]);
            out.push(' ');
            out.push_str(&self.labels[v]);
            out.push('\n');
        }
        out
    }

    /// Connected components of `G - removed`, each as a vertex set, ordered by
    /// smallest member.
    fn components_avoiding(&self, removed: &[bool]) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = removed.to_vec();
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut members = Vec::new();
            while let Some(u) = stack.pop() {
                members.push(u);
                for &v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            components.push(VertexSet { members });
        }
        components
    }

    fn assert_members(&self, s: &VertexSet) {
        assert!(
            s.bound() <= self.n(),
            "vertex set {s:?} exceeds graph order {}",
            self.n()
        );
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn intern(labels: &mut Vec<String>, index: &mut HashMap<String, usize>, label: &str) -> usize {
    if let Some(&v) = index.get(label) {
        return v;
    }
    let v = labels.len();
    labels.push(label.to_string());
    index.insert(label.to_string(), v);
    v
}

/// Connected components of the subgraph induced on `V \ s`.
///
/// Returns an empty list when `s = V`. Panics if `s` holds an index outside
/// the graph.
pub fn delete_vertices(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    g.assert_members(s);
    g.components_avoiding(&s.to_mask(g.n()))
}

/// `N(X, Y)`: the members of `y` adjacent to at least one member of `x`.
pub fn neighbors_into(g: &Graph, x: &VertexSet, y: &VertexSet) -> VertexSet {
    g.assert_members(x);
    g.assert_members(y);
    let in_x = x.to_mask(g.n());
    y.iter()
        .filter(|&v| g.neighbors(v).iter().any(|&u| in_x[u]))
        .collect()
}

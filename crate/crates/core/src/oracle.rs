//! Brute-force all-path convexity by exhaustive simple-path enumeration.
//!
//! Nothing here touches the block-cut tree: every answer comes straight from
//! the definitions, which makes this module the ground truth for the fast
//! path on small graphs. Running time is exponential; every entry point is
//! guarded by an [`OracleBudget`].

use thiserror::Error;

use crate::convexity::ConvexityReport;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle budget allows at most {max_n}")]
    BudgetExceeded { n: usize, max_n: usize },
    #[error("path enumeration exceeded the budget of {0} path extensions")]
    PathBudgetExceeded(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n: usize,
    /// Cap on DFS path extensions per interval computation.
    pub max_paths: Option<u64>,
}

impl OracleBudget {
    pub const DEFAULT_MAX_N: usize = 12;

    /// Explicitly raises the vertex limit above the default. Subset scans use
    /// 64-bit masks, so anything above 63 is clamped.
    pub fn with_max_n(max_n: usize) -> Self {
        Self {
            max_n: max_n.min(63),
            max_paths: None,
        }
    }

    fn admit(&self, g: &Graph) -> Result<(), OracleError> {
        if g.n() > self.max_n {
            return Err(OracleError::BudgetExceeded {
                n: g.n(),
                max_n: self.max_n,
            });
        }
        Ok(())
    }
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_n: Self::DEFAULT_MAX_N,
            max_paths: None,
        }
    }
}

/// Hull and the number of growing applications of the interval needed to
/// reach it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullTrace {
    pub hull: VertexSet,
    pub growing_steps: usize,
}

/// `S` plus every vertex on a simple path whose two distinct endpoints lie
/// in `S`.
pub fn interval_bf(g: &Graph, s: &VertexSet, b: &OracleBudget) -> Result<VertexSet, OracleError> {
    b.admit(g)?;
    let n = g.n();
    let in_s = s.to_mask(n);
    let mut covered = in_s.clone();
    let mut uncovered = n - s.len();

    let mut on_path = vec![false; n];
    let mut path: Vec<usize> = Vec::with_capacity(n);
    let mut cursor: Vec<usize> = Vec::with_capacity(n);
    let mut extensions = 0u64;

    // Every path is found from both endpoints, so the last source is redundant.
    let sources = s.len().saturating_sub(1);
    for u in s.iter().take(sources) {
        if uncovered == 0 {
            break;
        }
        path.push(u);
        cursor.push(0);
        on_path[u] = true;
        while let Some(&x) = path.last() {
            if uncovered == 0 {
                break;
            }
            let depth = path.len() - 1;
            let adj = g.neighbors(x);
            if cursor[depth] == adj.len() {
                on_path[x] = false;
                path.pop();
                cursor.pop();
                continue;
            }
            let y = adj[cursor[depth]];
            cursor[depth] += 1;
            if on_path[y] {
                continue;
            }
            extensions += 1;
            if let Some(cap) = b.max_paths {
                if extensions > cap {
                    return Err(OracleError::PathBudgetExceeded(cap));
                }
            }
            path.push(y);
            cursor.push(0);
            on_path[y] = true;
            if in_s[y] {
                for &w in &path {
                    if !covered[w] {
                        covered[w] = true;
                        uncovered -= 1;
                    }
                }
            }
        }
        for &w in &path {
            on_path[w] = false;
        }
        path.clear();
        cursor.clear();
    }
    Ok(VertexSet::from_mask(&covered))
}

/// Iterates [`interval_bf`] to its fixpoint.
pub fn hull_bf(g: &Graph, s: &VertexSet, b: &OracleBudget) -> Result<HullTrace, OracleError> {
    let mut current = s.clone();
    let mut growing_steps = 0;
    loop {
        let next = interval_bf(g, &current, b)?;
        if next == current {
            return Ok(HullTrace {
                hull: current,
                growing_steps,
            });
        }
        current = next;
        growing_steps += 1;
    }
}

pub fn is_convex_bf(g: &Graph, s: &VertexSet, b: &OracleBudget) -> Result<bool, OracleError> {
    Ok(interval_bf(g, s, b)? == *s)
}

/// All brute-force intervals, indexed by subset bitmask.
pub fn interval_table(g: &Graph, b: &OracleBudget) -> Result<Vec<u64>, OracleError> {
    b.admit(g)?;
    let n = g.n();
    (0..1u64 << n)
        .map(|bits| interval_bf(g, &VertexSet::from_bits(bits, n), b).map(|i| i.to_bits()))
        .collect()
}

/// Every parameter by scanning all `2^n` subsets.
///
/// Witnesses are the numerically smallest masks attaining the optimum.
pub fn numbers_bf(g: &Graph, b: &OracleBudget) -> Result<ConvexityReport, OracleError> {
    let table = interval_table(g, b)?;
    Ok(numbers_from_table(g.n(), &table))
}

/// [`numbers_bf`] over a precomputed [`interval_table`].
pub fn numbers_from_table(n: usize, table: &[u64]) -> ConvexityReport {
    let full = (1u64 << n) - 1;
    let size = |bits: u64| bits.count_ones() as usize;

    let mut c: Option<u64> = None;
    let mut i: Option<u64> = None;
    let mut h: Option<u64> = None;
    let mut gin = 0;
    for bits in 0..=full {
        let image = table[bits as usize];
        if image == bits && bits != full && c.is_none_or(|best| size(bits) > size(best)) {
            c = Some(bits);
        }
        if image == full && i.is_none_or(|best| size(bits) < size(best)) {
            i = Some(bits);
        }
        let mut current = bits;
        let mut steps = 0;
        while table[current as usize] != current {
            current = table[current as usize];
            steps += 1;
        }
        gin = gin.max(steps);
        if current == full && h.is_none_or(|best| size(bits) < size(best)) {
            h = Some(bits);
        }
    }
    let c = c.expect("the empty set is a convex proper subset");
    let i = i.expect("V is an interval set");
    let h = h.expect("V is a hull set");
    ConvexityReport {
        c: size(c),
        i: size(i),
        h: size(h),
        gin,
        max_convex_witness: VertexSet::from_bits(c, n),
        min_interval_witness: VertexSet::from_bits(i, n),
        trivial: n == 1,
    }
}

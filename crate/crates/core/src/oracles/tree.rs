use std::ops::Range;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numeric::Nat;

use super::guard;

/// The ball of radius `depth` around a vertex of the m-regular tree, stored
/// level by level: the root has `m` children and every other vertex above the
/// last level has `m - 1`.
#[derive(Clone, Debug)]
pub struct TruncatedTree {
    m: u32,
    depth: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    levels: Vec<Range<usize>>,
}

impl TruncatedTree {
    /// Vertices in a tree of the given degree and depth.
    pub fn vertex_count(m: u32, depth: usize) -> BigUint {
        let mut total = BigUint::from(1u32);
        let mut level = BigUint::from(1u32);
        for d in 1..=depth {
            level *= if d == 1 { m } else { m.saturating_sub(1) };
            if level.is_zero() {
                break;
            }
            total += &level;
        }
        total
    }

    pub fn build(m: u32, depth: usize, max_states: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidDegree(m, "a tree needs degree at least 1"));
        }
        guard(&Self::vertex_count(m, depth), max_states)?;
        let mut parent = vec![None];
        let mut children = vec![Vec::new()];
        let mut levels: Vec<Range<usize>> = Vec::new();
        levels.push(0..1);
        for d in 1..=depth {
            let prev = levels[d - 1].clone();
            let start = parent.len();
            let fanout = if d == 1 { m } else { m - 1 };
            for v in prev {
                for _ in 0..fanout {
                    let id = parent.len();
                    parent.push(Some(v));
                    children.push(Vec::new());
                    children[v].push(id);
                }
            }
            if parent.len() == start {
                break;
            }
            levels.push(start..parent.len());
        }
        Ok(TruncatedTree {
            m,
            depth,
            parent,
            children,
            levels,
        })
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Vertices at distance `i` from the root; empty past the last level.
    pub fn level(&self, i: usize) -> Range<usize> {
        self.levels.get(i).cloned().unwrap_or(0..0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.parent[v]
            .into_iter()
            .chain(self.children[v].iter().copied())
    }

    /// Number of walks of length `n` from the root to every vertex.
    /// Requires `n <= depth` so no walk can leave the truncated ball.
    pub fn walk_distribution(&self, n: usize) -> Vec<Nat> {
        assert!(
            n <= self.depth,
            "walks of length {n} can leave a ball of radius {}",
            self.depth
        );
        let mut cur = vec![Nat::zero(); self.len()];
        cur[0] = Nat::from(1u32);
        for _ in 0..n {
            let mut next = vec![Nat::zero(); self.len()];
            for (v, count) in cur.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for u in self.neighbors(v) {
                    next[u] += count;
                }
            }
            cur = next;
        }
        cur
    }
}

/// `counts[i]` = walks of length `n` from the root to the first vertex at
/// distance `i`, for `i = 0..=n`.
pub fn tree_walk_counts(m: u32, n: usize, max_states: u64) -> Result<Vec<Nat>> {
    let tree = TruncatedTree::build(m, n, max_states)?;
    let dist = tree.walk_distribution(n);
    Ok((0..=n)
        .map(|i| {
            tree.level(i)
                .next()
                .map_or_else(Nat::zero, |v| dist[v].clone())
        })
        .collect())
}

/// Walks of length `n` on the m-regular tree ending at a fixed vertex at
/// distance `i`. Zero when `i > n`, or when no vertex at distance `i` exists
/// (`m = 1`, `i >= 2`).
pub fn tree_walk_count(m: u32, i: usize, n: usize, max_states: u64) -> Result<Nat> {
    if m == 0 {
        return Err(Error::InvalidDegree(m, "a tree needs degree at least 1"));
    }
    if i > n {
        return Ok(Nat::zero());
    }
    Ok(tree_walk_counts(m, n, max_states)?.swap_remove(i))
}

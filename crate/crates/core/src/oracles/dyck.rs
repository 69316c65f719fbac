use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::numeric::Rat;
use crate::recurrence::WeightConfig;

use super::guard;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

/// A sequence of up and down steps that never drops below the axis.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h = 0usize;
        for (k, step) in steps.iter().enumerate() {
            match step {
                Step::Up => h += 1,
                Step::Down => h = h.checked_sub(1).ok_or(Error::BelowAxis(k))?,
            }
        }
        Ok(LatticePath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights `h_0 = 0, h_1, ..., h_len`.
    pub fn heights(&self) -> Vec<usize> {
        let mut hs = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0;
        hs.push(h);
        for step in &self.steps {
            match step {
                Step::Up => h += 1,
                Step::Down => h -= 1,
            }
            hs.push(h);
        }
        hs
    }

    pub fn end_height(&self) -> usize {
        self.steps.iter().fold(0, |h, s| match s {
            Step::Up => h + 1,
            Step::Down => h - 1,
        })
    }

    /// `(weight, poids)`: every U contributes `c1`; a D contributes `c2`,
    /// except under poids where a D landing on the axis contributes `c3`.
    pub fn weight_poids(&self, w: &WeightConfig) -> (Rat, Rat) {
        let mut weight = Rat::one();
        let mut poids = Rat::one();
        let mut h = 0usize;
        for step in &self.steps {
            match step {
                Step::Up => {
                    h += 1;
                    weight = weight * &w.c1;
                    poids = poids * &w.c1;
                }
                Step::Down => {
                    h -= 1;
                    weight = weight * &w.c2;
                    poids = poids * if h == 0 { &w.c3 } else { &w.c2 };
                }
            }
        }
        (weight, poids)
    }

    /// Splits a path that ends on the axis into its irreducible arches.
    pub fn components(&self) -> Result<Vec<LatticePath>> {
        let end = self.end_height();
        if end != 0 {
            return Err(Error::NotOnAxis(end));
        }
        let mut parts = Vec::new();
        let mut start = 0;
        for (k, h) in self.heights().into_iter().enumerate().skip(1) {
            if h == 0 {
                parts.push(LatticePath {
                    steps: self.steps[start..k].to_vec(),
                });
                start = k;
            }
        }
        Ok(parts)
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                other => Err(Error::InvalidStep(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::new(steps)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePath({self})")
    }
}

pub fn path_weight_poids(p: &LatticePath, w: &WeightConfig) -> (Rat, Rat) {
    p.weight_poids(w)
}

pub fn decompose_irreducible(p: &LatticePath) -> Result<Vec<LatticePath>> {
    p.components()
}

fn check_size(n: usize, max_states: u64) -> Result<()> {
    guard(&(BigUint::from(1u32) << n), max_states)
}

/// Every valid path of length `n`, found by filtering all `2^n` step words.
pub fn all_paths(n: usize, max_states: u64) -> Result<Vec<LatticePath>> {
    check_size(n, max_states)?;
    Ok((0u64..1 << n)
        .filter_map(|mask| {
            let steps = (0..n)
                .map(|k| {
                    if mask >> k & 1 == 1 {
                        Step::Up
                    } else {
                        Step::Down
                    }
                })
                .collect();
            LatticePath::new(steps).ok()
        })
        .collect())
}

/// Sum of poids over all paths of length `n` ending at height `i`.
pub fn enumerate_dyck(w: &WeightConfig, i: usize, n: usize, max_states: u64) -> Result<Rat> {
    Ok(all_paths(n, max_states)?
        .iter()
        .filter(|p| p.end_height() == i)
        .map(|p| p.weight_poids(w).1)
        .sum())
}

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::numeric::Nat;

use super::guard;

/// A generator `x_k` (1-based) or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub generator: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn x(generator: u32) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn x_inv(generator: u32) -> Self {
        Letter {
            generator,
            inverse: true,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }

    /// All `2g` letters `x1, x1^-1, ..., xg, xg^-1`.
    pub fn alphabet(g: u32) -> Vec<Letter> {
        (1..=g)
            .flat_map(|k| [Letter::x(k), Letter::x_inv(k)])
            .collect()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.generator)?;
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A word in the free group, not necessarily reduced.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GroupWord { letters }
    }

    pub fn empty() -> Self {
        GroupWord::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Free reduction with a stack: push each letter, popping instead when it
    /// cancels the top.
    pub fn reduce(&self) -> GroupWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        GroupWord { letters: stack }
    }

    /// Position of the first cancelling pair, if any.
    pub fn first_cancellation(&self) -> Option<usize> {
        self.letters.windows(2).position(|p| p[0] == p[1].inverse())
    }

    pub fn is_reduced(&self) -> bool {
        self.first_cancellation().is_none()
    }

    fn validate(&self, g: u32) -> Result<()> {
        if let Some(l) = self
            .letters
            .iter()
            .find(|l| l.generator == 0 || l.generator > g)
        {
            return Err(Error::UnknownGenerator {
                index: l.generator,
                generators: g,
            });
        }
        match self.first_cancellation() {
            Some(pos) => Err(Error::UnreducedWord(pos)),
            None => Ok(()),
        }
    }
}

impl FromIterator<Letter> for GroupWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        GroupWord::new(iter.into_iter().collect())
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupWord({self})")
    }
}

/// Visits the free reduction of every product of `n` letters, maintaining the
/// reduced prefix incrementally.
fn for_each_product(
    g: u32,
    n: usize,
    max_states: u64,
    mut visit: impl FnMut(&[Letter]),
) -> Result<()> {
    guard(&num_traits::pow(BigUint::from(2 * g), n), max_states)?;
    let alphabet = Letter::alphabet(g);
    let mut stack = Vec::with_capacity(n);
    descend(&alphabet, n, &mut stack, &mut visit);
    Ok(())
}

fn descend(
    alphabet: &[Letter],
    remaining: usize,
    stack: &mut Vec<Letter>,
    visit: &mut impl FnMut(&[Letter]),
) {
    if remaining == 0 {
        visit(stack);
        return;
    }
    for &l in alphabet {
        if stack.last() == Some(&l.inverse()) {
            let top = stack.pop().expect("non-empty");
            descend(alphabet, remaining - 1, stack, visit);
            stack.push(top);
        } else {
            stack.push(l);
            descend(alphabet, remaining - 1, stack, visit);
            stack.pop();
        }
    }
}

/// Coefficient of the reduced word `target` in `(x1 + x1^-1 + ... + xg + xg^-1)^n`.
pub fn free_group_count(g: u32, target: &GroupWord, n: usize, max_states: u64) -> Result<Nat> {
    target.validate(g)?;
    let mut hits = 0u64;
    for_each_product(g, n, max_states, |w| {
        if w == target.letters() {
            hits += 1;
        }
    })?;
    Ok(Nat::from(hits))
}

/// The full expansion of `(x1 + x1^-1 + ... + xg + xg^-1)^n`: every reduced
/// word with a nonzero coefficient, and that coefficient.
pub fn free_group_distribution(
    g: u32,
    n: usize,
    max_states: u64,
) -> Result<HashMap<GroupWord, Nat>> {
    let mut counts: HashMap<GroupWord, u64> = HashMap::new();
    for_each_product(g, n, max_states, |w| {
        *counts.entry(GroupWord::new(w.to_vec())).or_default() += 1;
    })?;
    Ok(counts.into_iter().map(|(w, c)| (w, Nat::from(c))).collect())
}

/// All reduced words of length `len` over `g` generators, in lexicographic order.
pub fn reduced_words(g: u32, len: usize) -> Vec<GroupWord> {
    let alphabet = Letter::alphabet(g);
    let mut words = vec![GroupWord::empty()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                let last = w.letters.last().copied();
                alphabet
                    .iter()
                    .filter(move |&&l| last != Some(l.inverse()))
                    .map(move |&l| {
                        let mut next = w.letters.clone();
                        next.push(l);
                        GroupWord::new(next)
                    })
            })
            .collect();
    }
    words
}

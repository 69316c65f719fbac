//! The table `A(i, n)` of weighted walk counts, filled column by column.
//!
//! `A(i, 0) = [i = 0]`, `A(0, n) = c3 * A(1, n-1)` and, for `i >= 1`,
//! `A(i, n) = c1 * A(i-1, n-1) + c2 * A(i+1, n-1)`. With the tree weights
//! `(1, m-1, m)` the entries count walks of length `n` on the m-regular tree
//! ending at a fixed vertex at distance `i` from the start.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::Rat;

/// Step weights `(c1, c2, c3)`: up step, down step staying above the axis,
/// and down step landing on the axis.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightConfig {
    pub c1: Rat,
    pub c2: Rat,
    pub c3: Rat,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "decimal_degree"
    )]
    pub m: Option<u32>,
}

mod decimal_degree {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &Option<u32>, s: S) -> Result<S::Ok, S::Error> {
        match m {
            Some(m) => s.collect_str(m),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<u32>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

impl WeightConfig {
    pub fn new(c1: Rat, c2: Rat, c3: Rat) -> Self {
        WeightConfig {
            c1,
            c2,
            c3,
            m: None,
        }
    }

    pub fn from_ints(c1: i64, c2: i64, c3: i64) -> Self {
        Self::new(c1.into(), c2.into(), c3.into())
    }

    /// Weights of the m-regular tree, tagged with `m`.
    pub fn tree(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidDegree(m, "a tree needs degree at least 1"));
        }
        Ok(WeightConfig {
            c1: Rat::one(),
            c2: Rat::from(i64::from(m) - 1),
            c3: Rat::from(i64::from(m)),
            m: Some(m),
        })
    }

    pub fn degree(&self) -> Option<u32> {
        self.m
    }

    pub fn all_nonnegative_integers(&self) -> bool {
        [&self.c1, &self.c2, &self.c3]
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

impl fmt::Debug for WeightConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c1, self.c2, self.c3)?;
        if let Some(m) = self.m {
            write!(f, " [m={m}]")?;
        }
        Ok(())
    }
}

impl fmt::Display for WeightConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Shorthand for [`WeightConfig::tree`].
pub fn tree_weights(m: u32) -> Result<WeightConfig> {
    WeightConfig::tree(m)
}

/// Dense triangle of `A(i, n)` for `0 <= i <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTable {
    weights: WeightConfig,
    n_max: usize,
    // columns[n][i] for i in 0..=n
    columns: Vec<Vec<Rat>>,
}

impl WalkTable {
    pub fn build(weights: &WeightConfig, n_max: usize) -> Self {
        let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(n_max + 1);
        columns.push(vec![Rat::one()]);
        for n in 1..=n_max {
            let prev = &columns[n - 1];
            let at = |i: usize| prev.get(i);
            let mut col = Vec::with_capacity(n + 1);
            col.push(at(1).map_or_else(Rat::zero, |x| &weights.c3 * x));
            for i in 1..=n {
                let mut v = Rat::zero();
                if let Some(x) = at(i - 1) {
                    v += &(&weights.c1 * x);
                }
                if let Some(x) = at(i + 1) {
                    v += &(&weights.c2 * x);
                }
                col.push(v);
            }
            columns.push(col);
        }
        if weights.m.is_some() {
            assert!(
                columns
                    .iter()
                    .flatten()
                    .all(|x| x.is_integer() && !x.is_negative()),
                "tree walk counts must be non-negative integers"
            );
        }
        WalkTable {
            weights: weights.clone(),
            n_max,
            columns,
        }
    }

    pub fn weights(&self) -> &WeightConfig {
        &self.weights
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `A(i, n)`; zero when `i > n`.
    pub fn get(&self, i: usize, n: usize) -> Result<Rat> {
        let col = self.columns.get(n).ok_or(Error::OutOfRange {
            n,
            n_max: self.n_max,
        })?;
        Ok(col.get(i).cloned().unwrap_or_else(Rat::zero))
    }

    /// Column `n`: `A(0, n), ..., A(n, n)`.
    pub fn column(&self, n: usize) -> Option<&[Rat]> {
        self.columns.get(n).map(Vec::as_slice)
    }

    /// Row `i` indexed by `n = 0..=n_max` (zeros where `i > n`).
    pub fn row(&self, i: usize) -> Vec<Rat> {
        self.columns
            .iter()
            .map(|col| col.get(i).cloned().unwrap_or_else(Rat::zero))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<Vec<Rat>> = (0..=self.n_max).map(|i| self.row(i)).collect();
        serde_json::json!({
            "weights": self.weights,
            "n_max": self.n_max.to_string(),
            "entries": entries,
        })
    }
}

pub fn build_table(weights: &WeightConfig, n_max: usize) -> WalkTable {
    WalkTable::build(weights, n_max)
}

pub fn walk_count(table: &WalkTable, i: usize, n: usize) -> Result<Rat> {
    table.get(i, n)
}

/// Number of vertices at distance `i` from a fixed vertex of the m-regular tree.
pub fn sphere_size(m: u32, i: usize) -> BigInt {
    if i == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(m) * num_traits::pow(BigInt::from(m) - 1, i - 1)
    }
}

/// `sum_i |S_i| * A_m(i, n)`, which counts all walks of length n and so must
/// equal `m^n`.
pub fn mass_check(m: u32, n: usize, table: &WalkTable) -> Result<Rat> {
    if m < 2 {
        return Err(Error::InvalidDegree(
            m,
            "mass check needs degree at least 2",
        ));
    }
    if table.weights.m != Some(m) {
        return Err(Error::TableMismatch {
            expected: m,
            found: table.weights.to_string(),
        });
    }
    let col = table.column(n).ok_or(Error::OutOfRange {
        n,
        n_max: table.n_max,
    })?;
    Ok(col
        .iter()
        .enumerate()
        .map(|(i, a)| Rat::from(sphere_size(m, i)) * a)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[Rat]) -> Vec<i64> {
        v.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    fn even_row(t: &WalkTable, i: usize) -> Vec<i64> {
        ints(&t.row(i)).into_iter().skip(i).step_by(2).collect()
    }

    #[test]
    fn tree_weights_examples() {
        let w = tree_weights(3).unwrap();
        assert_eq!(
            w,
            WeightConfig {
                m: Some(3),
                ..WeightConfig::from_ints(1, 2, 3)
            }
        );
        let w = tree_weights(2).unwrap();
        assert_eq!((w.c1, w.c2, w.c3), (1.into(), 1.into(), 2.into()));
        assert!(matches!(tree_weights(0), Err(Error::InvalidDegree(0, _))));
    }

    #[test]
    fn tree_columns() {
        let t = build_table(&tree_weights(3).unwrap(), 6);
        assert_eq!(ints(&t.row(0)), [1, 0, 3, 0, 15, 0, 87]);
        assert_eq!(walk_count(&t, 1, 5).unwrap(), 29.into());
        assert_eq!(walk_count(&t, 5, 3).unwrap(), Rat::zero());
        assert_eq!(walk_count(&t, 9, 3).unwrap(), Rat::zero());
        assert_eq!(
            walk_count(&t, 0, 7),
            Err(Error::OutOfRange { n: 7, n_max: 6 })
        );

        let t = build_table(&tree_weights(2).unwrap(), 8);
        assert_eq!(even_row(&t, 0), [1, 2, 6, 20, 70]);

        let t = build_table(&tree_weights(4).unwrap(), 6);
        assert_eq!(walk_count(&t, 0, 6).unwrap(), 232.into());
    }

    #[test]
    fn catalan_from_unit_weights() {
        let t = build_table(&WeightConfig::from_ints(1, 1, 1), 8);
        assert_eq!(even_row(&t, 0), [1, 1, 2, 5, 14]);
    }

    #[test]
    fn degree_one_bounces_on_an_edge() {
        let t = build_table(&tree_weights(1).unwrap(), 10);
        assert_eq!(even_row(&t, 0), [1; 6]);
        assert_eq!(even_row(&t, 1), [1; 5]);
        // no vertex sits at distance 2 on a single edge, but the recurrence
        // still counts the straight path UU
        assert_eq!(t.get(2, 2).unwrap(), Rat::one());
    }

    #[test]
    fn zero_order_table() {
        let t = build_table(&WeightConfig::from_ints(5, 7, 11), 0);
        assert_eq!(t.get(0, 0).unwrap(), Rat::one());
        assert_eq!(t.get(3, 0).unwrap(), Rat::zero());
    }

    #[test]
    fn mass_examples() {
        let t3 = build_table(&tree_weights(3).unwrap(), 4);
        assert_eq!(mass_check(3, 2, &t3).unwrap(), 9.into());
        let t2 = build_table(&tree_weights(2).unwrap(), 4);
        assert_eq!(mass_check(2, 4, &t2).unwrap(), 16.into());
        let t4 = build_table(&tree_weights(4).unwrap(), 0);
        assert_eq!(mass_check(4, 0, &t4).unwrap(), 1.into());

        assert!(matches!(
            mass_check(4, 2, &t3),
            Err(Error::TableMismatch { .. })
        ));
        let plain = build_table(&WeightConfig::from_ints(1, 2, 3), 4);
        assert!(matches!(
            mass_check(3, 2, &plain),
            Err(Error::TableMismatch { .. })
        ));
        assert!(matches!(
            mass_check(1, 0, &t3),
            Err(Error::InvalidDegree(1, _))
        ));
        assert!(matches!(
            mass_check(3, 5, &t3),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn json_export_uses_strings() {
        let t = build_table(&tree_weights(3).unwrap(), 2);
        let v = t.to_json();
        assert_eq!(
            v,
            serde_json::json!({
                "weights": {"c1": "1", "c2": "2", "c3": "3", "m": "3"},
                "n_max": "2",
                "entries": [["1", "0", "3"], ["0", "1", "0"], ["0", "0", "1"]],
            })
        );
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rat::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn recurrence_residual_and_parity(c1 in small_rat(), c2 in small_rat(), c3 in small_rat(), n_max in 0usize..16) {
            let w = WeightConfig::new(c1, c2, c3);
            // one extra column so entries next to the diagonal have both neighbours
            let t = build_table(&w, n_max + 1);
            for n in 1..=n_max {
                prop_assert_eq!(t.get(0, n).unwrap(), &w.c3 * &t.get(1, n - 1).unwrap());
                for i in 1..=n_max {
                    let expect = &w.c1 * &t.get(i - 1, n - 1).unwrap() + &w.c2 * &t.get(i + 1, n - 1).unwrap();
                    prop_assert_eq!(t.get(i, n).unwrap(), expect);
                }
            }
            for n in 0..=n_max {
                for i in 0..=n_max {
                    if i > n || (n - i) % 2 == 1 {
                        prop_assert!(t.get(i, n).unwrap().is_zero());
                    }
                }
            }
        }

        #[test]
        fn nonnegative_integer_weights_give_integers(c1 in 0i64..5, c2 in 0i64..5, c3 in 0i64..5) {
            let t = build_table(&WeightConfig::from_ints(c1, c2, c3), 12);
            for n in 0..=12 {
                for x in t.column(n).unwrap() {
                    prop_assert!(x.is_integer() && !x.is_negative());
                }
            }
        }

        #[test]
        fn mass_is_power_of_degree(m in 2u32..7, n in 0usize..14) {
            let t = build_table(&tree_weights(m).unwrap(), n);
            prop_assert_eq!(mass_check(m, n, &t).unwrap(), Rat::from(i64::from(m)).pow(n as u32));
        }
    }
}

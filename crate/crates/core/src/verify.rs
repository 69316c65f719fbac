//! Cross-method checks: recurrence against generating functions against the
//! brute-force oracles, plus the algebraic identities the generating
//! functions must satisfy.

use std::fmt;

use crate::error::{Error, Result};
use crate::numeric::Rat;
use crate::oracles::{
    self, free_group_count, free_group_distribution, reduced_words, GroupWord, Letter,
};
use crate::recurrence::{build_table, mass_check, WalkTable, WeightConfig};
use crate::series::{gf_a, gf_b_c, gf_d_i, gf_f, gf_f_closed_form, PowerSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Tree,
    Dyck,
    FreeGroup,
    All,
}

impl Scope {
    fn includes(self, other: Scope) -> bool {
        self == Scope::All || self == other
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub scope: Scope,
    pub n_max: usize,
    pub m_max: u32,
    pub max_states: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            scope: Scope::All,
            n_max: 10,
            m_max: 4,
            max_states: oracles::DEFAULT_MAX_STATES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    /// Number of individual equalities confirmed, or the first counterexample.
    pub outcome: std::result::Result<usize, String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Ok(n) => write!(f, "PASS {} ({n} comparisons)", self.name),
            Err(why) => write!(f, "FAIL {}: {why}", self.name),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

/// Weight triples used by the dyck scope: trees of degree 2, 3, 4 and three
/// triples that are not tree weights, one of them non-integral.
pub fn sample_weights() -> Vec<WeightConfig> {
    let mut ws: Vec<WeightConfig> = (2..=4)
        .map(|m| WeightConfig::tree(m).expect("degree >= 1"))
        .collect();
    ws.push(WeightConfig::from_ints(1, 1, 1));
    ws.push(WeightConfig::from_ints(2, 1, 5));
    ws.push(WeightConfig::new(
        Rat::one(),
        Rat::new(1, 2).expect("nonzero"),
        Rat::from(2),
    ));
    ws
}

enum Failure {
    Mismatch(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Step = std::result::Result<(), Failure>;

#[derive(Default)]
struct Tally(usize);

impl Tally {
    fn eq<T: PartialEq + fmt::Debug>(
        &mut self,
        left: &T,
        right: &T,
        ctx: impl FnOnce() -> String,
    ) -> Step {
        self.0 += 1;
        if left == right {
            Ok(())
        } else {
            Err(Failure::Mismatch(format!(
                "{}: {left:?} != {right:?}",
                ctx()
            )))
        }
    }

    fn holds(&mut self, cond: bool, ctx: impl FnOnce() -> String) -> Step {
        self.0 += 1;
        if cond {
            Ok(())
        } else {
            Err(Failure::Mismatch(ctx()))
        }
    }
}

#[derive(Default)]
struct Runner {
    checks: Vec<CheckResult>,
}

impl Runner {
    fn check(&mut self, name: impl Into<String>, f: impl FnOnce(&mut Tally) -> Step) -> Result<()> {
        let mut tally = Tally::default();
        let outcome = match f(&mut tally) {
            Ok(()) => Ok(tally.0),
            Err(Failure::Mismatch(why)) => Err(why),
            Err(Failure::Lib(e @ Error::Infeasible { .. })) => return Err(e),
            Err(Failure::Lib(e)) => Err(format!("error: {e}")),
        };
        self.checks.push(CheckResult {
            name: name.into(),
            outcome,
        });
        Ok(())
    }
}

/// Runs every check in scope. Fails only when an oracle would exceed the
/// state ceiling; individual check failures are reported in the [`Report`].
pub fn run(cfg: &VerifyConfig) -> Result<Report> {
    let mut runner = Runner::default();
    if cfg.scope.includes(Scope::Tree) {
        tree_checks(&mut runner, cfg)?;
    }
    if cfg.scope.includes(Scope::Dyck) {
        dyck_checks(&mut runner, cfg)?;
    }
    if cfg.scope.includes(Scope::FreeGroup) {
        free_group_checks(&mut runner, cfg)?;
    }
    Ok(Report {
        checks: runner.checks,
    })
}

fn check_base_cases(t: &mut Tally, table: &WalkTable) -> Step {
    t.eq(&table.get(0, 0)?, &Rat::one(), || "A(0,0)".into())?;
    for i in 1..=table.n_max() + 1 {
        t.eq(&table.get(i, 0)?, &Rat::zero(), || format!("A({i},0)"))?;
    }
    Ok(())
}

fn check_table_vs_series(
    t: &mut Tally,
    table: &WalkTable,
    i: usize,
    s: &PowerSeries,
    label: &str,
) -> Step {
    for n in 0..=table.n_max() {
        let coeff = s.coeff(n).cloned().unwrap_or_else(Rat::zero);
        t.eq(&table.get(i, n)?, &coeff, || format!("{label} i={i} n={n}"))?;
    }
    Ok(())
}

fn check_parity(t: &mut Tally, values: &[Rat], i: usize, label: impl Fn(usize) -> String) -> Step {
    for (n, v) in values.iter().enumerate() {
        if n < i || (n - i) % 2 == 1 {
            t.holds(v.is_zero(), || format!("{}: expected 0, got {v}", label(n)))?;
        }
    }
    Ok(())
}

fn check_algebra(t: &mut Tally, w: &WeightConfig, order: usize) -> Step {
    let c1c2 = &w.c1 * &w.c2;
    let radicand =
        PowerSeries::one(order).sub(&PowerSeries::monomial(Rat::from(4) * &c1c2, 2, order));
    let root = radicand.sqrt()?;
    t.eq(&root.mul(&root), &radicand, || format!("{w}: sqrt squared"))?;

    let a = gf_a(w, order)?;
    let c1c2t2 = PowerSeries::monomial(c1c2, 2, order);
    let residual = c1c2t2.mul(&a).mul(&a).sub(&a).add(&PowerSeries::one(order));
    t.holds(residual.is_zero(), || {
        format!("{w}: quadratic residual {residual:?}")
    })?;

    let (b, _) = gf_b_c(w, order)?;
    t.eq(&b, &c1c2t2.mul(&a), || format!("{w}: b = c1 c2 t^2 a"))?;
    t.eq(&a, &PowerSeries::one(order).sub(&b).inv()?, || {
        format!("{w}: a = 1/(1-b)")
    })?;
    Ok(())
}

fn tree_checks(r: &mut Runner, cfg: &VerifyConfig) -> Result<()> {
    let n = cfg.n_max;
    let degrees: Vec<u32> = (2..=cfg.m_max).collect();
    let tables: Vec<(u32, WalkTable)> = degrees
        .iter()
        .map(|&m| Ok((m, build_table(&WeightConfig::tree(m)?, n))))
        .collect::<Result<_>>()?;

    r.check("tree: base cases A(0,0)=1, A(i,0)=0", |t| {
        tables
            .iter()
            .try_for_each(|(_, table)| check_base_cases(t, table))
    })?;
    r.check(
        "tree: recurrence table = generating function f_m^(i)",
        |t| {
            for (m, table) in &tables {
                for i in 0..=n {
                    check_table_vs_series(t, table, i, &gf_f(*m, i, n)?, &format!("m={m}"))?;
                }
            }
            Ok(())
        },
    )?;
    r.check("tree: factored form = direct closed form", |t| {
        for &m in &degrees {
            for i in 0..=n {
                t.eq(&gf_f(m, i, n)?, &gf_f_closed_form(m, i, n)?, || {
                    format!("m={m} i={i}")
                })?;
            }
        }
        Ok(())
    })?;
    r.check("tree: recurrence table = walks on explicit tree", |t| {
        for (m, table) in &tables {
            for len in 0..=n {
                let counts = oracles::tree_walk_counts(*m, len, cfg.max_states)?;
                for (i, c) in counts.into_iter().enumerate() {
                    t.eq(&table.get(i, len)?, &Rat::from(c), || {
                        format!("m={m} i={i} n={len}")
                    })?;
                }
            }
        }
        Ok(())
    })?;
    r.check("tree: mass conservation sum_i |S_i| A_m(i,n) = m^n", |t| {
        for (m, table) in &tables {
            for len in 0..=n {
                let expect = Rat::from(i64::from(*m)).pow(len as u32);
                t.eq(&mass_check(*m, len, table)?, &expect, || {
                    format!("m={m} n={len}")
                })?;
            }
        }
        Ok(())
    })?;
    r.check("tree: parity vanishing in table and series", |t| {
        for (m, table) in &tables {
            for i in 0..=n {
                check_parity(t, &table.row(i), i, |k| format!("table m={m} A({i},{k})"))?;
                check_parity(t, gf_f(*m, i, n)?.coeffs(), i, |k| {
                    format!("series m={m} i={i} t^{k}")
                })?;
            }
        }
        Ok(())
    })?;
    r.check("tree: entries are non-negative integers", |t| {
        for (m, table) in &tables {
            for i in 0..=n {
                for (k, v) in table.row(i).iter().enumerate() {
                    t.holds(v.is_integer() && !v.is_negative(), || {
                        format!("m={m} A({i},{k}) = {v}")
                    })?;
                }
            }
        }
        Ok(())
    })?;
    r.check("tree: sqrt and quadratic residuals", |t| {
        for (_, table) in &tables {
            check_algebra(t, table.weights(), n)?;
        }
        Ok(())
    })?;
    Ok(())
}

fn dyck_checks(r: &mut Runner, cfg: &VerifyConfig) -> Result<()> {
    let n = cfg.n_max;
    let weights = sample_weights();
    let tables: Vec<WalkTable> = weights.iter().map(|w| build_table(w, n + 1)).collect();

    r.check("dyck: base cases A(0,0)=1, A(i,0)=0", |t| {
        tables
            .iter()
            .try_for_each(|table| check_base_cases(t, table))
    })?;
    r.check("dyck: recurrence residual", |t| {
        for table in &tables {
            let w = table.weights();
            for len in 1..=n {
                let a = |i: usize, k: usize| table.get(i, k);
                t.eq(&a(0, len)?, &(&w.c3 * &a(1, len - 1)?), || {
                    format!("{w} boundary n={len}")
                })?;
                for i in 1..=n {
                    let rhs = &w.c1 * &a(i - 1, len - 1)? + &w.c2 * &a(i + 1, len - 1)?;
                    t.eq(&a(i, len)?, &rhs, || format!("{w} i={i} n={len}"))?;
                }
            }
        }
        Ok(())
    })?;
    r.check("dyck: recurrence table = generating function d_i", |t| {
        for (w, table) in weights.iter().zip(&tables) {
            for i in 0..=n {
                let s = gf_d_i(w, i, n)?;
                for len in 0..=n {
                    t.eq(&table.get(i, len)?, &s.coeffs()[len], || {
                        format!("{w} i={i} n={len}")
                    })?;
                }
            }
        }
        Ok(())
    })?;
    r.check(
        "dyck: recurrence table = exhaustive path enumeration",
        |t| {
            for len in 0..=n {
                let paths = oracles::all_paths(len, cfg.max_states)?;
                for (w, table) in weights.iter().zip(&tables) {
                    let mut sums = vec![Rat::zero(); len + 1];
                    for p in &paths {
                        sums[p.end_height()] += &p.weight_poids(w).1;
                    }
                    for (i, s) in sums.iter().enumerate() {
                        t.eq(&table.get(i, len)?, s, || format!("{w} i={i} n={len}"))?;
                    }
                }
            }
            Ok(())
        },
    )?;
    r.check("dyck: poids = weight * (c3/c2)^components", |t| {
        for len in (0..=n).step_by(2) {
            let paths = oracles::all_paths(len, cfg.max_states)?;
            for w in &weights {
                let ratio = w.c3.checked_div(&w.c2)?;
                for p in paths.iter().filter(|p| p.end_height() == 0) {
                    let (weight, poids) = p.weight_poids(w);
                    let k = p.components()?.len() as u32;
                    t.eq(&poids, &(weight * ratio.pow(k)), || format!("{w} path {p}"))?;
                }
            }
        }
        Ok(())
    })?;
    r.check("dyck: d_i = d * (c1 t a)^i", |t| {
        for w in &weights {
            let d = gf_d_i(w, 0, n)?;
            let step = PowerSeries::monomial(w.c1.clone(), 1, n).mul(&gf_a(w, n)?);
            for i in 0..=n {
                let expect = d.mul(&step.pow(i as u32));
                t.eq(&gf_d_i(w, i, n)?, &expect, || format!("{w} i={i}"))?;
            }
        }
        Ok(())
    })?;
    r.check("dyck: sqrt and quadratic residuals", |t| {
        weights.iter().try_for_each(|w| check_algebra(t, w, n))
    })?;
    r.check("dyck: parity vanishing in table and series", |t| {
        for (w, table) in weights.iter().zip(&tables) {
            for i in 0..=n {
                let row = table.row(i);
                check_parity(t, &row[..=n], i, |k| format!("table {w} A({i},{k})"))?;
                check_parity(t, gf_d_i(w, i, n)?.coeffs(), i, |k| {
                    format!("series {w} i={i} t^{k}")
                })?;
            }
        }
        Ok(())
    })?;
    Ok(())
}

/// Two distinct reduced words of each length (only one of length 0 exists).
fn sample_targets(g: u32, len: usize) -> Vec<GroupWord> {
    let first: GroupWord = std::iter::repeat_n(Letter::x(1), len).collect();
    let second: GroupWord = (0..len)
        .map(|k| {
            if g >= 2 && k % 2 == 1 {
                Letter::x_inv(2)
            } else {
                Letter::x_inv(1)
            }
        })
        .collect();
    let mut words = vec![first, second];
    words.dedup();
    words
}

fn free_group_checks(r: &mut Runner, cfg: &VerifyConfig) -> Result<()> {
    let n = cfg.n_max;
    let gens: Vec<u32> = vec![1, 2];
    let tables: Vec<(u32, WalkTable)> = gens
        .iter()
        .map(|&g| Ok((g, build_table(&WeightConfig::tree(2 * g)?, n))))
        .collect::<Result<_>>()?;

    r.check(
        "freegroup: coefficient of sample reduced words = A_2g(i,n)",
        |t| {
            for (g, table) in &tables {
                for len in 0..=n {
                    for i in 0..=len.min(2) {
                        for word in sample_targets(*g, i) {
                            let c = free_group_count(*g, &word, len, cfg.max_states)?;
                            t.eq(&Rat::from(c), &table.get(i, len)?, || {
                                format!("g={g} word={word} n={len}")
                            })?;
                        }
                    }
                }
            }
            Ok(())
        },
    )?;
    r.check(
        "freegroup: every reduced word of length i has coefficient A_2g(i,n)",
        |t| {
            for (g, table) in &tables {
                for len in 0..=n {
                    let dist = free_group_distribution(*g, len, cfg.max_states)?;
                    for i in 0..=len {
                        let expect = table.get(i, len)?;
                        for word in reduced_words(*g, i) {
                            let c = dist.get(&word).cloned().unwrap_or_default();
                            t.eq(&Rat::from(c), &expect, || {
                                format!("g={g} word={word} n={len}")
                            })?;
                        }
                    }
                }
            }
            Ok(())
        },
    )?;
    Ok(())
}

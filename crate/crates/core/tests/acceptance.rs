//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or overruns its time budget.

use std::fmt::Debug;
use std::time::{Duration, Instant};

use cayley_walks::oracles::{
    enumerate_dyck, free_group_count, free_group_distribution, reduced_words, tree_walk_counts,
    GroupWord, Letter, DEFAULT_MAX_STATES,
};
use cayley_walks::series::{gf_a, gf_d_i, gf_f, gf_f_closed_form};
use cayley_walks::{build_table, mass_check, PowerSeries, Rat, WalkTable, WeightConfig};
use num_bigint::BigInt;

type Outcome = Result<usize, String>;

#[derive(Default)]
struct Counter(usize);

impl Counter {
    fn eq<T: PartialEq + Debug>(
        &mut self,
        got: T,
        want: T,
        ctx: impl FnOnce() -> String,
    ) -> Result<(), String> {
        self.0 += 1;
        if got == want {
            Ok(())
        } else {
            Err(format!("{}: got {got:?}, want {want:?}", ctx()))
        }
    }

    fn zero(&mut self, v: &Rat, ctx: impl FnOnce() -> String) -> Result<(), String> {
        self.eq(v, &Rat::zero(), ctx)
    }
}

fn tree(m: u32) -> WeightConfig {
    WeightConfig::tree(m).unwrap()
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d).unwrap()
}

fn general_weights() -> Vec<WeightConfig> {
    vec![
        WeightConfig::from_ints(1, 1, 1),
        WeightConfig::from_ints(1, 2, 3),
        WeightConfig::from_ints(1, 3, 4),
        WeightConfig::from_ints(2, 1, 5),
        WeightConfig::new(rat(1, 1), rat(1, 2), rat(2, 1)),
    ]
}

fn central_binomial(n: u32) -> BigInt {
    // C(2n, n) = prod_{k=1..n} (n + k) / k, exact at every step
    (1..=n).fold(BigInt::from(1), |acc, k| acc * (n + k) / k)
}

fn read_bfile(name: &str) -> Vec<Rat> {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{path}: {e}"))
        .lines()
        .enumerate()
        .map(|(k, line)| {
            let (idx, val) = line.split_once(' ').expect("INDEX VALUE");
            assert_eq!(idx.parse::<usize>().unwrap(), k);
            val.parse().unwrap()
        })
        .collect()
}

fn even_terms(values: &[Rat], count: usize) -> Vec<Rat> {
    values.iter().step_by(2).take(count).cloned().collect()
}

fn parity_zero(c: &mut Counter, values: &[Rat], i: usize, ctx: &str) -> Result<(), String> {
    for (n, v) in values.iter().enumerate() {
        if n < i || (n - i) % 2 == 1 {
            c.zero(v, || format!("{ctx} i={i} n={n}"))?;
        }
    }
    Ok(())
}

fn central_binomials() -> Outcome {
    let mut c = Counter::default();
    let fixture = read_bfile("A000984.b");
    let dp = build_table(&tree(2), 40).row(0);
    let gf = gf_f(2, 0, 40).unwrap();
    for n in 0..=20usize {
        let want = Rat::from(central_binomial(n as u32));
        c.eq(&dp[2 * n], &want, || format!("dp n={n}"))?;
        c.eq(&gf.coeffs()[2 * n], &want, || format!("gf n={n}"))?;
        c.eq(&fixture[n], &want, || format!("fixture n={n}"))?;
    }
    Ok(c.0)
}

fn closed_form_vs_recurrence() -> Outcome {
    let mut c = Counter::default();
    for m in 2..=8 {
        let table = build_table(&tree(m), 60);
        for i in 0..=6 {
            let direct = gf_f_closed_form(m, i, 60).unwrap();
            let factored = gf_f(m, i, 60).unwrap();
            for n in 0..=60 {
                let a = table.get(i, n).unwrap();
                c.eq(&direct.coeffs()[n], &a, || {
                    format!("closed form m={m} i={i} n={n}")
                })?;
                c.eq(&factored.coeffs()[n], &a, || {
                    format!("factored m={m} i={i} n={n}")
                })?;
            }
        }
    }
    Ok(c.0)
}

fn general_weights_equivalence() -> Outcome {
    let mut c = Counter::default();
    for w in general_weights() {
        let table = build_table(&w, 14);
        let series: Vec<PowerSeries> = (0..=14).map(|i| gf_d_i(&w, i, 14).unwrap()).collect();
        for n in 0..=14 {
            for (i, s) in series.iter().enumerate().take(n + 1) {
                let brute = enumerate_dyck(&w, i, n, DEFAULT_MAX_STATES).unwrap();
                c.eq(&table.get(i, n).unwrap(), &brute, || {
                    format!("dp {w} i={i} n={n}")
                })?;
                c.eq(&s.coeffs()[n], &brute, || format!("gf {w} i={i} n={n}"))?;
            }
        }
    }
    Ok(c.0)
}

fn tree_oracle() -> Outcome {
    let mut c = Counter::default();
    for m in 2..=4 {
        let table = build_table(&tree(m), 10);
        for n in 0..=10 {
            let counts = tree_walk_counts(m, n, DEFAULT_MAX_STATES).unwrap();
            for (i, k) in counts.into_iter().enumerate() {
                c.eq(Rat::from(k), table.get(i, n).unwrap(), || {
                    format!("m={m} i={i} n={n}")
                })?;
            }
        }
    }
    Ok(c.0)
}

fn free_group_remark() -> Outcome {
    let mut c = Counter::default();
    for g in 1..=2u32 {
        let table = build_table(&tree(2 * g), 8);
        for n in 0..=8 {
            let dist = free_group_distribution(g, n, DEFAULT_MAX_STATES).unwrap();
            for i in 0..=n {
                let want = table.get(i, n).unwrap();
                let words = reduced_words(g, i);
                let samples: Vec<&GroupWord> = if i == 0 {
                    vec![&words[0]]
                } else {
                    vec![&words[0], words.last().unwrap()]
                };
                if i > 0 {
                    c.eq(samples[0] != samples[1], true, || {
                        format!("distinct samples g={g} i={i}")
                    })?;
                }
                for w in samples {
                    let got = free_group_count(g, w, n, DEFAULT_MAX_STATES).unwrap();
                    c.eq(Rat::from(got), want.clone(), || {
                        format!("g={g} word={w} n={n}")
                    })?;
                }
                for w in &words {
                    let got = dist.get(w).cloned().unwrap_or_default();
                    c.eq(Rat::from(got), want.clone(), || {
                        format!("all words g={g} word={w} n={n}")
                    })?;
                }
            }
        }
    }
    // the plain word x1 x2 appears exactly once among products of two letters
    let x1x2: GroupWord = [Letter::x(1), Letter::x(2)].into_iter().collect();
    c.eq(
        free_group_count(2, &x1x2, 2, DEFAULT_MAX_STATES).unwrap(),
        1u32.into(),
        || "x1 x2".into(),
    )?;
    Ok(c.0)
}

fn algebraic_residuals() -> Outcome {
    let mut c = Counter::default();
    let order = 60;
    let mut weights = general_weights();
    weights.extend((2..=8).map(tree));
    for w in &weights {
        let c1c2 = &w.c1 * &w.c2;
        let radicand =
            PowerSeries::one(order).sub(&PowerSeries::monomial(Rat::from(4) * &c1c2, 2, order));
        let root = radicand.sqrt().unwrap();
        c.eq(&root.mul(&root), &radicand, || format!("sqrt {w}"))?;
        c.eq(&radicand.sqrt_newton().unwrap(), &root, || {
            format!("newton sqrt {w}")
        })?;

        let a = gf_a(w, order).unwrap();
        let residual = PowerSeries::monomial(c1c2, 2, order)
            .mul(&a)
            .mul(&a)
            .sub(&a)
            .add(&PowerSeries::one(order));
        c.eq(residual.is_zero(), true, || {
            format!("quadratic residual {w}: {residual:?}")
        })?;

        let d = gf_d_i(w, 0, order).unwrap();
        let step = PowerSeries::monomial(w.c1.clone(), 1, order).mul(&a);
        for i in 0..=6u32 {
            c.eq(
                gf_d_i(w, i as usize, order).unwrap(),
                d.mul(&step.pow(i)),
                || format!("d_i product {w} i={i}"),
            )?;
        }
    }
    Ok(c.0)
}

fn mass_conservation() -> Outcome {
    let mut c = Counter::default();
    for m in 2..=5u32 {
        let table = build_table(&tree(m), 16);
        for n in 0..=16 {
            let want = Rat::from(num_traits::pow(BigInt::from(m), n));
            c.eq(mass_check(m, n, &table).unwrap(), want, || {
                format!("m={m} n={n}")
            })?;
        }
    }
    Ok(c.0)
}

fn sequence_prefixes() -> Outcome {
    let mut c = Counter::default();
    for (m, file) in [(3u32, "A089022.b"), (4, "A035610.b")] {
        let fixture = read_bfile(file);
        let k = fixture.len();
        let n_max = 2 * (k - 1);
        let w = tree(m);
        let dp = build_table(&w, n_max).row(0);
        let gf = gf_f(m, 0, n_max).unwrap().into_coeffs();
        let closed = gf_f_closed_form(m, 0, n_max).unwrap().into_coeffs();
        let enumerated: Vec<Rat> = (0..=n_max)
            .map(|n| enumerate_dyck(&w, 0, n, DEFAULT_MAX_STATES).unwrap())
            .collect();
        let on_tree: Vec<Rat> = (0..=n_max)
            .map(|n| Rat::from(tree_walk_counts(m, n, DEFAULT_MAX_STATES).unwrap()[0].clone()))
            .collect();
        for (name, seq) in [
            ("dp", &dp),
            ("gf", &gf),
            ("closed form", &closed),
            ("enum", &enumerated),
            ("tree", &on_tree),
        ] {
            c.eq(even_terms(seq, k), fixture.clone(), || {
                format!("{name} m={m}")
            })?;
        }
        if m == 4 {
            let fg: Vec<Rat> = (0..=n_max)
                .map(|n| {
                    Rat::from(
                        free_group_count(2, &GroupWord::empty(), n, DEFAULT_MAX_STATES).unwrap(),
                    )
                })
                .collect();
            c.eq(even_terms(&fg, k), fixture.clone(), || {
                "free group m=4".into()
            })?;
        }
    }
    Ok(c.0)
}

fn parity_vanishing() -> Outcome {
    let mut c = Counter::default();
    for m in 2..=8 {
        let table = build_table(&tree(m), 60);
        for i in 0..=6 {
            parity_zero(&mut c, &table.row(i), i, &format!("table m={m}"))?;
            parity_zero(
                &mut c,
                gf_f(m, i, 60).unwrap().coeffs(),
                i,
                &format!("series m={m}"),
            )?;
        }
    }
    for w in general_weights() {
        let table: WalkTable = build_table(&w, 14);
        for i in 0..=14 {
            parity_zero(&mut c, &table.row(i), i, &format!("table {w}"))?;
            parity_zero(
                &mut c,
                gf_d_i(&w, i, 14).unwrap().coeffs(),
                i,
                &format!("series {w}"),
            )?;
        }
    }
    Ok(c.0)
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "A_2(0,2n) = C(2n,n), n <= 20, dp and gf",
            budget: Duration::from_secs(1),
            run: central_binomials,
        },
        Criterion {
            id: 2,
            name: "closed-form f_m^(i) coefficients = recurrence, m 2..8, i 0..6, to t^60",
            budget: Duration::from_secs(30),
            run: closed_form_vs_recurrence,
        },
        Criterion {
            id: 3,
            name: "general weights: enumeration = dp = gf, i <= n <= 14",
            budget: Duration::from_secs(60),
            run: general_weights_equivalence,
        },
        Criterion {
            id: 4,
            name: "explicit tree walks = A_m(i,n), m 2..4, n <= 10",
            budget: Duration::from_secs(60),
            run: tree_oracle,
        },
        Criterion {
            id: 5,
            name: "free-group coefficients = A_2g(i,n), g 1..2, n <= 8",
            budget: Duration::from_secs(60),
            run: free_group_remark,
        },
        Criterion {
            id: 6,
            name: "quadratic, sqrt and product residuals mod t^61",
            budget: Duration::from_secs(60),
            run: algebraic_residuals,
        },
        Criterion {
            id: 7,
            name: "mass conservation = m^n, m 2..5, n <= 16",
            budget: Duration::from_secs(60),
            run: mass_conservation,
        },
        Criterion {
            id: 8,
            name: "m=3 and m=4 even prefixes by every method",
            budget: Duration::from_secs(60),
            run: sequence_prefixes,
        },
        Criterion {
            id: 9,
            name: "parity vanishing over criteria 2-3 inputs",
            budget: Duration::from_secs(60),
            run: parity_vanishing,
        },
    ];

    let mut failed = 0;
    for cr in &criteria {
        let start = Instant::now();
        let outcome = (cr.run)();
        let elapsed = start.elapsed();
        let line = match outcome {
            Ok(_) if elapsed > cr.budget => {
                Err(format!("took {elapsed:.2?}, budget {:?}", cr.budget))
            }
            other => other,
        };
        match line {
            Ok(n) => println!(
                "PASS criterion {}: {} ({n} checks, {elapsed:.2?})",
                cr.id, cr.name
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {} -- {why}", cr.id, cr.name);
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

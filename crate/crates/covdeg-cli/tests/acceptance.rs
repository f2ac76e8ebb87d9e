//! End-to-end checks: exact pinned values, oracle corpora with pinned
//! sizes and seeds, and the performance budget.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use covdeg::inversion::{mobius_in_place, naive_mobius, naive_zeta, zeta_in_place};
use covdeg::reduct::naive_in_union_closure;
use covdeg::{
    canonical_equal, cov, cov_is_reduct, degree_table, gamma, in_union_closure, indicator_table,
    is_reduct_of, mobius_transform, neighborhoods, parity_pair, random, reducible_elements, reduct,
    relation, repeat_degree, same_p, same_relation, tables_equal, zeta_transform, Block, Covering,
    DegreeTable, RealSubsetFunction, SetFamily, Universe,
};

fn universe(names: &[&str]) -> Universe {
    Universe::new(names.iter().copied()).expect("valid names")
}

fn covering(names: &[&str], blocks: &[&[&str]]) -> Covering {
    let u = universe(names);
    let blocks = blocks
        .iter()
        .map(|b| u.block_from_names(b.iter().copied()).expect("known names"));
    let blocks: Vec<Block> = blocks.collect();
    Covering::new(u, blocks).expect("valid covering")
}

fn set(c: &Covering, names: &[&str]) -> Block {
    c.universe()
        .block_from_names(names.iter().copied())
        .expect("known names")
}

fn base_covering() -> Covering {
    covering(
        &["1", "2", "3", "4"],
        &[&["1", "2"], &["2", "3", "4"], &["3", "4"]],
    )
}

fn run_covdeg(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_covdeg"))
        .args(args)
        .env_remove("COVDEG_LATTICE_CAP")
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
    )
}

#[test]
fn pinned_degree_values_are_exact() {
    let c = base_covering();
    let cases: &[(&[&str], u64)] = &[
        (&[], 3),
        (&["1"], 1),
        (&["2"], 2),
        (&["3"], 2),
        (&["4"], 2),
        (&["1", "2"], 1),
        (&["2", "3"], 1),
        (&["2", "4"], 1),
        (&["1", "3"], 0),
        (&["1", "4"], 0),
        (&["3", "4"], 2),
        (&["2", "3", "4"], 1),
        (&["1", "3", "4"], 0),
        (&["1", "2", "4"], 0),
        (&["1", "2", "3"], 0),
        (&["1", "2", "3", "4"], 0),
    ];
    let start = Instant::now();
    for &(names, expected) in cases {
        assert_eq!(
            repeat_degree(&c, set(&c, names)).expect("in range"),
            expected,
            "degree of {names:?}"
        );
    }
    assert!(start.elapsed() < Duration::from_millis(1));
}

#[test]
fn gamma_blocks_and_reduct_verdict_are_exact() {
    let c = covering(
        &["1", "2", "3", "4"],
        &[&["1", "2"], &["1", "2", "3"], &["3", "4"]],
    );
    let start = Instant::now();
    let g1 = gamma(&c, "1").expect("known element");
    let g2 = gamma(&c, "2").expect("known element");
    let g3 = gamma(&c, "3").expect("known element");
    let g4 = gamma(&c, "4").expect("known element");
    let verdict = cov_is_reduct(&c);
    assert!(start.elapsed() < Duration::from_millis(1));

    assert_eq!(g1, Some(set(&c, &["1", "2"])));
    assert_eq!(g2, g1);
    assert_eq!(g3, None);
    assert_eq!(g4, Some(set(&c, &["3", "4"])));
    let middle = set(&c, &["1", "2", "3"]);
    assert!(![g1, g2, g3, g4].contains(&Some(middle)));
    assert_eq!(verdict, (false, Some("3".to_owned())));
}

#[test]
fn equivalent_presentations_share_relation_cov_and_p() {
    let c1 = covering(&["1", "2", "3"], &[&["1", "2"], &["2", "3"], &["3"]]);
    let c2 = covering(
        &["1", "2", "3"],
        &[&["1", "2", "3"], &["1", "2"], &["2", "3"], &["3"]],
    );
    let start = Instant::now();
    assert!(same_relation(&c1, &c2).expect("same universe"));
    assert!(same_p(&c1, &c2).expect("same universe"));
    assert!(canonical_equal(&cov(&c1), &cov(&c2)).expect("same universe"));
    let pairs = relation(&c1).pair_names();
    assert!(start.elapsed() < Duration::from_millis(1));
    let expected = [("1", "1"), ("1", "2"), ("2", "2"), ("3", "3")];
    assert_eq!(pairs, expected.map(|(x, y)| (x.to_owned(), y.to_owned())));
}

#[test]
fn membership_indicator_matches_the_pinned_table() {
    let c = covering(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
    let t = indicator_table(&c).expect("small universe");
    assert_eq!(t.get(Block::EMPTY), 0);
    let expected: &[(&[&str], u8)] = &[
        (&["1"], 0),
        (&["2"], 0),
        (&["3"], 0),
        (&["1", "2"], 1),
        (&["1", "3"], 0),
        (&["2", "3"], 1),
        (&["1", "2", "3"], 0),
    ];
    for &(names, flag) in expected {
        assert_eq!(t.get(set(&c, names)), flag, "indicator of {names:?}");
    }
    // the full nonempty-subset listing, in canonical order
    let mut listed: Vec<(Block, u8)> = expected
        .iter()
        .map(|&(names, flag)| (set(&c, names), flag))
        .collect();
    listed.sort_by_key(|e| e.0);
    assert_eq!(t.entries(), listed);
}

#[test]
fn parity_pair_is_pinned_and_scales_to_eight_elements() {
    let (code, text) = run_covdeg(&["parity-pair", "-n", "3", "--names", "a,b,c"]);
    assert_eq!(code, 0);
    assert_eq!(
        text,
        "# universe: a b c\neven:\na b\na c\nb c\nodd:\na\nb\nc\na b c\n"
    );

    for n in 2..=8usize {
        let start = Instant::now();
        let pair = parity_pair(Universe::indexed(n).expect("small")).expect("within cap");
        let truncated: Vec<usize> = (1..n).collect();
        let left = degree_table(&pair.even, &truncated).expect("within cap");
        let right = degree_table(&pair.odd, &truncated).expect("within cap");
        assert!(tables_equal(&left, &right).expect("same window"), "n={n}");

        let full: Vec<usize> = (1..=n).collect();
        let left = degree_table(&pair.even, &full).expect("within cap");
        let right = degree_table(&pair.odd, &full).expect("within cap");
        let top = pair.even.universe().full_block();
        for (&(bl, vl), &(br, vr)) in left.entries().iter().zip(right.entries()) {
            assert_eq!(bl, br);
            if bl == top {
                assert_ne!(vl, vr, "full tables must differ at the size-{n} entry");
            } else {
                assert_eq!(vl, vr, "entries below the top size must agree at n={n}");
            }
        }
        if n == 8 {
            assert!(start.elapsed() < Duration::from_secs(1));
        }
    }
}

#[test]
fn a_thousand_random_tables_reconstruct_their_covering() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let start = Instant::now();
    for i in 0..1000usize {
        let n = 2 + i % 9;
        let u = Universe::indexed(n).expect("small");
        let c = random::random_covering(&mut rng, &u);
        let window: Vec<usize> = (1..=n).collect();
        let table = degree_table(&c, &window).expect("within cap");
        let back = covdeg::reconstruct_covering(&table).expect("tables of coverings invert");
        assert!(
            canonical_equal(&back, &c).expect("same universe"),
            "iteration {i}"
        );
    }
    assert!(start.elapsed() < Duration::from_secs(30));
}

#[test]
fn transforms_match_the_naive_oracles_and_invert() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [4usize, 8, 12] {
        let values: Vec<i64> = (0..1usize << n)
            .map(|_| rng.random_range(-1000..1000))
            .collect();
        let mut fast = values.clone();
        zeta_in_place(&mut fast);
        assert_eq!(fast, naive_zeta(&values), "zeta at n={n}");
        mobius_in_place(&mut fast);
        assert_eq!(fast, values, "round trip at n={n}");
        let mut back = naive_mobius(&naive_zeta(&values));
        assert_eq!(back, values, "naive round trip at n={n}");
        mobius_in_place(&mut back);
        assert_eq!(back, naive_mobius(&values), "mobius at n={n}");
    }

    let u = Universe::indexed(16).expect("small");
    let g = RealSubsetFunction::from_fn(u, |_| rng.random_range(-1.0..1.0)).expect("within cap");
    let back = mobius_transform(&zeta_transform(&g));
    for (slot, (&got, &want)) in back.values().iter().zip(g.values()).enumerate() {
        assert!((got - want).abs() <= 1e-9, "entry {slot}: {got} vs {want}");
    }
}

fn reduct_corpus() -> impl Iterator<Item = Covering> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    (0..1000usize).map(move |i| {
        let n = 2 + i % 7;
        let u = Universe::indexed(n).expect("small");
        random::random_covering_bounded(&mut rng, &u, 12)
    })
}

fn brute_force_reducible(c: &Covering) -> Vec<Block> {
    c.blocks()
        .iter()
        .copied()
        .filter(|&k| {
            let rest: Vec<Block> = c.blocks().iter().copied().filter(|&b| b != k).collect();
            if rest.is_empty() {
                return false;
            }
            let family = SetFamily::new(c.universe().clone(), rest).expect("nonempty");
            naive_in_union_closure(&family, k).expect("same universe")
        })
        .collect()
}

#[test]
fn reduct_survives_the_brute_force_oracle() {
    let start = Instant::now();
    for (i, c) in reduct_corpus().enumerate() {
        assert!(c.len() <= 12 && c.universe().len() <= 8);
        let reducible = reducible_elements(&c);
        assert_eq!(
            reducible.blocks(),
            brute_force_reducible(&c),
            "iteration {i}"
        );

        let report = reduct(&c);
        assert!(is_reduct_of(report.reduct.as_family(), &c).expect("same universe"));

        let covered = cov(&c);
        let again = reduct(&covered);
        assert!(canonical_equal(&again.reduct, &covered).expect("same universe"));
        for &k in c.blocks() {
            assert!(in_union_closure(covered.as_family(), k).expect("same universe"));
        }
    }
    assert!(start.elapsed() < Duration::from_secs(60));
}

#[test]
fn cov_is_reduct_agrees_with_the_direct_comparison() {
    for (i, c) in reduct_corpus().enumerate() {
        let (flag, witness) = cov_is_reduct(&c);
        let direct = canonical_equal(&cov(&c), &reduct(&c).reduct).expect("same universe");
        assert_eq!(flag, direct, "iteration {i}");
        assert_eq!(flag, witness.is_none(), "iteration {i}");
    }
}

#[test]
fn the_equivalence_triple_holds_on_five_hundred_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..500usize {
        let n = 2 + i % 7;
        let u = Universe::indexed(n).expect("small");
        let c1 = random::random_covering(&mut rng, &u);
        let (c2, expected) = if i % 2 == 0 {
            let extra = rng.random_range(1..=3);
            (random::union_augmented(&mut rng, &c1, extra), Some(true))
        } else {
            (random::random_covering(&mut rng, &u), None)
        };
        let by_p = same_p(&c1, &c2).expect("same universe");
        let by_relation = same_relation(&c1, &c2).expect("same universe");
        let by_cov = canonical_equal(&cov(&c1), &cov(&c2)).expect("same universe");
        assert_eq!(by_p, by_relation, "pair {i}");
        assert_eq!(by_p, by_cov, "pair {i}");
        if let Some(want) = expected {
            assert_eq!(by_p, want, "pair {i}");
        }
    }
}

#[test]
fn removing_any_reducible_subset_leaves_the_rest_reducible() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..500usize {
        let n = 2 + i % 7;
        let u = Universe::indexed(n).expect("small");
        let c = random::random_covering(&mut rng, &u);
        let reducible = reducible_elements(&c);
        let dropped: Vec<Block> = reducible
            .blocks()
            .iter()
            .copied()
            .filter(|_| rng.random_bool(0.5))
            .collect();
        let kept: Vec<Block> = reducible
            .blocks()
            .iter()
            .copied()
            .filter(|b| !dropped.contains(b))
            .collect();
        let remaining: Vec<Block> = c
            .blocks()
            .iter()
            .copied()
            .filter(|b| !dropped.contains(b))
            .collect();
        let slim = Covering::new(c.universe().clone(), remaining).expect("still a covering");
        assert_eq!(reducible_elements(&slim).blocks(), kept, "iteration {i}");
    }
}

#[test]
fn neighborhoods_stay_consistent_between_library_and_binary() {
    let c = base_covering();
    let map = neighborhoods(&c);
    assert_eq!(map.by_name("2").expect("known element"), set(&c, &["2"]));
    let file = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance_base4.cov");
    std::fs::write(&file, covdeg::render_covering(&c)).expect("temp file writes");
    let (code, text) = run_covdeg(&["neigh", file.to_str().expect("utf-8 path")]);
    assert_eq!(code, 0);
    assert_eq!(text, "1 : 1 2\n2 : 2\n3 : 3 4\n4 : 3 4\n");
}

#[test]
fn full_table_round_trip_survives_both_window_shapes() {
    // the inversion survives windows with and without the empty set
    let c = base_covering();
    for window in [vec![0, 1, 2, 3, 4], vec![1, 2, 3, 4]] {
        let table = degree_table(&c, &window).expect("within cap");
        let text = covdeg::render_degree_table(&table);
        let parsed: DegreeTable = covdeg::parse_degree_table(&text).expect("round trip");
        assert!(tables_equal(&table, &parsed).expect("same window"));
        let back = covdeg::reconstruct_covering(&parsed).expect("consistent");
        assert!(canonical_equal(&back, &c).expect("same universe"));
    }
}

#[test]
fn the_benchmark_meets_the_performance_budget() {
    let (code, text) = run_covdeg(&["bench", "--json"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(report["n"], 20);
    let table_secs = report["table_secs"].as_f64().expect("number");
    let invert_secs = report["invert_secs"].as_f64().expect("number");
    assert!(
        table_secs + invert_secs < 5.0,
        "inversion took {:.3}s",
        table_secs + invert_secs
    );
    let rss = report["peak_rss_bytes"].as_u64().expect("linux rss");
    assert!(rss < 256 * 1024 * 1024, "peak rss {rss} bytes");
    assert_eq!(report["naive_n"], 12);
    let speedup = report["speedup"].as_f64().expect("number");
    assert!(speedup >= 50.0, "speedup {speedup:.1}x");
}

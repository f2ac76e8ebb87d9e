//! Self-check suite run by `covdeg verify`.
//!
//! Every property is checked on the input covering and on a deterministic
//! corpus of mutations derived from the seed: union-augmented variants
//! (which must preserve the induced relation) alternating with fresh random
//! coverings over the same universe. A failure reports the first offending
//! covering so the run can be replayed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use covdeg::inversion::zeta_in_place;
use covdeg::reduct::naive_in_union_closure;
use covdeg::{
    canonical_equal, cov, cov_is_reduct, degree_table_with_cap, gamma, gamma_map, in_union_closure,
    indicator_table_with_cap, is_reduct_of, neighborhoods, p_set, random,
    reconstruct_covering_with_cap, reducible_elements, reduct, relation, repeat_degree, same_p,
    same_relation, Block, Covering,
};

pub enum Status {
    Pass,
    Skip(String),
    Fail(String),
}

pub struct Outcome {
    pub name: &'static str,
    pub status: Status,
}

const BRUTE_FORCE_LIMIT: usize = 12;

/// Dense-table properties walk all 2^n subsets per covering, so they stay
/// practical only well below the library's lattice cap.
const DENSE_CHECK_LIMIT: usize = 16;

pub fn run_suite(base: &Covering, seed: u64, iterations: usize, cap: usize) -> Vec<Outcome> {
    let dense_limit = cap.min(DENSE_CHECK_LIMIT);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut corpus = vec![base.clone()];
    for i in 0..iterations {
        if i % 2 == 0 {
            let extra = rng.random_range(1..=3);
            corpus.push(random::union_augmented(&mut rng, base, extra));
        } else {
            corpus.push(random::random_covering(&mut rng, base.universe()));
        }
    }

    let mut out = Vec::new();
    out.push(each(&corpus, "neighborhood-contains-self", |c, _| {
        let map = neighborhoods(c);
        for i in 0..c.universe().len() {
            if !map.at(i).contains(i) {
                return fail_at(
                    c,
                    &format!("{} is outside its own neighborhood", c.universe().name(i)),
                );
            }
        }
        None
    }));
    out.push(each(&corpus, "neighborhood-nesting", |c, _| {
        let map = neighborhoods(c);
        let u = c.universe();
        for x in 0..u.len() {
            for y in map.at(x).iter() {
                if !map.at(y).is_subset_of(map.at(x)) {
                    return fail_at(
                        c,
                        &format!("N({}) is not inside N({})", u.name(y), u.name(x)),
                    );
                }
            }
        }
        None
    }));
    out.push(each(
        &corpus,
        "neighborhood-is-block-intersection",
        |c, _| {
            let map = neighborhoods(c);
            let u = c.universe();
            for x in 0..u.len() {
                let mut meet = u.full_block();
                for &k in c.blocks() {
                    if k.contains(x) {
                        meet = meet & k;
                    }
                }
                if meet != map.at(x) {
                    return fail_at(c, &format!("stale neighborhood for {}", u.name(x)));
                }
            }
            None
        },
    ));
    out.push(each(&corpus, "cov-covers-universe", |c, _| {
        let covered = cov(c);
        if covered.as_family().covers_universe() {
            None
        } else {
            fail_at(c, "cov(C) does not cover the universe")
        }
    }));
    out.push(each(&corpus, "relation-successor-roundtrip", |c, _| {
        let map = neighborhoods(c);
        let edges = relation(c);
        let u = c.universe();
        for x in 0..u.len() {
            if edges.successor_at(x) != map.at(x) {
                return fail_at(
                    c,
                    &format!("successor set of {} is not N({})", u.name(x), u.name(x)),
                );
            }
        }
        None
    }));
    out.push(each(&corpus, "degree-pair-criterion", |c, _| {
        let map = neighborhoods(c);
        let u = c.universe();
        for x in 0..u.len() {
            let dx = repeat_degree(c, Block::singleton(x)).expect("singleton fits");
            for y in 0..u.len() {
                let pair = Block::singleton(x).with(y);
                let dxy = repeat_degree(c, pair).expect("pair fits");
                if (dxy == dx) != map.at(x).contains(y) {
                    return fail_at(
                        c,
                        &format!(
                            "pair degree misclassifies {} against {}",
                            u.name(y),
                            u.name(x)
                        ),
                    );
                }
            }
        }
        None
    }));
    out.push(each(&corpus, "p-equals-neighborhood", |c, _| {
        let map = neighborhoods(c);
        let u = c.universe();
        for x in 0..u.len() {
            if p_set(c, u.name(x)).expect("known element") != map.at(x) {
                return fail_at(
                    c,
                    &format!("P({}) differs from N({})", u.name(x), u.name(x)),
                );
            }
        }
        None
    }));
    out.push(each(&corpus, "degree-monotone", |c, rng| {
        let n = c.universe().len();
        for _ in 0..64 {
            let sub = random_block(rng, n);
            let sup = sub | random_block(rng, n);
            let d_sub = repeat_degree(c, sub).expect("in range");
            let d_sup = repeat_degree(c, sup).expect("in range");
            if d_sub < d_sup {
                return fail_at(c, "degree grows on a superset");
            }
        }
        None
    }));
    out.push(each(&corpus, "gamma-unique", |c, _| {
        let u = c.universe();
        let map = neighborhoods(c);
        for x in 0..u.len() {
            let mut qualifying = Vec::new();
            for &k in c.blocks() {
                if k.contains(x) && degrees_match_inside(c, x, k) {
                    qualifying.push(k);
                }
            }
            let got = gamma(c, u.name(x)).expect("known element");
            match (qualifying.len(), got) {
                (0, None) => {}
                (1, Some(b)) if b == qualifying[0] && b == map.at(x) => {}
                _ => {
                    return fail_at(
                        c,
                        &format!("gamma disagrees with the membership scan at {}", u.name(x)),
                    )
                }
            }
        }
        None
    }));
    out.push(each(&corpus, "gamma-tracks-membership", |c, _| {
        let u = c.universe();
        let map = neighborhoods(c);
        let gm = gamma_map(c);
        for x in 0..u.len() {
            let expected = if c.as_family().contains(map.at(x)) {
                Some(map.at(x))
            } else {
                None
            };
            if gm.at(x) != expected {
                return fail_at(c, &format!("gamma presence is wrong at {}", u.name(x)));
            }
        }
        None
    }));
    out.push(each(&corpus, "closure-fast-matches-brute", |c, rng| {
        if c.blocks().len() > BRUTE_FORCE_LIMIT {
            return None;
        }
        let family = c.as_family();
        let n = c.universe().len();
        for _ in 0..32 {
            let k = random_block(rng, n);
            let fast = in_union_closure(family, k).expect("same universe");
            let brute = naive_in_union_closure(family, k).expect("same universe");
            if fast != brute {
                return fail_at(c, &format!("closure verdicts split on {k:?}"));
            }
        }
        None
    }));
    out.push(each(&corpus, "closure-grows-with-family", |c, rng| {
        let augmented = random::union_augmented(rng, c, 2);
        for &k in c.blocks() {
            if !in_union_closure(augmented.as_family(), k).expect("same universe") {
                return fail_at(c, "a base block left the closure after augmenting");
            }
        }
        None
    }));
    out.push(each(&corpus, "reduct-is-minimal", |c, _| {
        let report = reduct(c);
        match is_reduct_of(report.reduct.as_family(), c) {
            Ok(true) => None,
            _ => fail_at(c, "reduct(C) fails the reduct test"),
        }
    }));
    out.push(each(&corpus, "reduct-has-no-reducible-blocks", |c, _| {
        let report = reduct(c);
        if reducible_elements(&report.reduct).is_empty() {
            None
        } else {
            fail_at(c, "reduct(C) still contains a reducible block")
        }
    }));
    out.push(each(&corpus, "cov-reduct-fixed-point", |c, _| {
        let covered = cov(c);
        let report = reduct(&covered);
        match canonical_equal(&report.reduct, &covered) {
            Ok(true) => None,
            _ => fail_at(c, "cov(C) is not its own reduct"),
        }
    }));
    out.push(each(&corpus, "blocks-in-cov-closure", |c, _| {
        let covered = cov(c);
        for &k in c.blocks() {
            if !in_union_closure(covered.as_family(), k).expect("same universe") {
                return fail_at(c, "a block is outside the closure of cov(C)");
            }
        }
        None
    }));
    out.push(each(&corpus, "cov-is-reduct-verdict", |c, _| {
        let (flag, witness) = cov_is_reduct(c);
        let covered = cov(c);
        let report = reduct(c);
        let equal = canonical_equal(&covered, &report.reduct).expect("same universe");
        if flag != equal || flag != witness.is_none() {
            return fail_at(c, "cov_is_reduct disagrees with the direct comparison");
        }
        if let Some(x) = witness {
            if gamma(c, &x).expect("known element").is_some() {
                return fail_at(c, "reported witness has a gamma block");
            }
        }
        None
    }));
    out.push(each(&corpus, "batch-removal-soundness", |c, rng| {
        let reducible = reducible_elements(c);
        let kept: Vec<Block> = reducible
            .blocks()
            .iter()
            .copied()
            .filter(|_| rng.random_bool(0.5))
            .collect();
        let dropped: Vec<Block> = reducible
            .blocks()
            .iter()
            .copied()
            .filter(|b| !kept.contains(b))
            .collect();
        let remaining: Vec<Block> = c
            .blocks()
            .iter()
            .copied()
            .filter(|b| !dropped.contains(b))
            .collect();
        let slim =
            Covering::new(c.universe().clone(), remaining).expect("removals keep a covering");
        let slim_reducible = reducible_elements(&slim);
        if slim_reducible.blocks() != kept.as_slice() {
            return fail_at(c, "removing reducible blocks changed the reducible set");
        }
        None
    }));
    out.push(capped(
        &corpus,
        dense_limit,
        "degree-table-roundtrip",
        |c| {
            let n = c.universe().len();
            let window: Vec<usize> = (1..=n).collect();
            let table = degree_table_with_cap(c, &window, cap).expect("within cap");
            let back =
                reconstruct_covering_with_cap(&table, cap).expect("tables of coverings invert");
            match canonical_equal(&back, c) {
                Ok(true) => None,
                _ => fail_at(c, "full-window table did not reconstruct its covering"),
            }
        },
    ));
    out.push(capped(
        &corpus,
        dense_limit,
        "indicator-matches-blocks",
        |c| {
            let ind = indicator_table_with_cap(c, cap).expect("within cap");
            let ones = ind.ones();
            if ones.blocks() == c.blocks() {
                None
            } else {
                fail_at(c, "indicator support differs from the block list")
            }
        },
    ));
    out.push(capped(
        &corpus,
        dense_limit,
        "indicator-zeta-degrees",
        |c| {
            let ind = indicator_table_with_cap(c, cap).expect("within cap");
            let n = c.universe().len();
            let mut dense = vec![0i64; 1 << n];
            for (b, v) in ind.entries() {
                dense[b.bits() as usize] = i64::from(v);
            }
            zeta_in_place(&mut dense);
            for (probe, &val) in dense.iter().enumerate() {
                let b = Block::from_bits(probe as u64);
                if val as u64 != repeat_degree(c, b).expect("in range") {
                    return fail_at(
                        c,
                        &format!("zeta of the indicator missed the degree of {b:?}"),
                    );
                }
            }
            None
        },
    ));

    let mut pairs: Vec<(Covering, Covering, Option<bool>)> = Vec::new();
    for c in &corpus {
        let extra = rng.random_range(1..=3);
        pairs.push((
            c.clone(),
            random::union_augmented(&mut rng, c, extra),
            Some(true),
        ));
    }
    for w in corpus.windows(2) {
        pairs.push((w[0].clone(), w[1].clone(), None));
    }
    out.push(pair_check(
        &pairs,
        "triple-verdict-agreement",
        |c1, c2, expect| {
            let by_relation = same_relation(c1, c2).expect("same universe");
            let by_p = same_p(c1, c2).expect("same universe");
            let by_cov = canonical_equal(&cov(c1), &cov(c2)).expect("same universe");
            if by_relation != by_p || by_relation != by_cov {
                return Some("the three equivalence tests split".to_owned());
            }
            if let Some(want) = expect {
                if by_relation != want {
                    return Some(format!("expected verdict {want}, got {by_relation}"));
                }
            }
            None
        },
    ));

    out
}

fn each(
    corpus: &[Covering],
    name: &'static str,
    mut f: impl FnMut(&Covering, &mut ChaCha8Rng) -> Option<String>,
) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ name.len() as u64);
    for c in corpus {
        if let Some(detail) = f(c, &mut rng) {
            return Outcome {
                name,
                status: Status::Fail(detail),
            };
        }
    }
    Outcome {
        name,
        status: Status::Pass,
    }
}

fn capped(
    corpus: &[Covering],
    cap: usize,
    name: &'static str,
    mut f: impl FnMut(&Covering) -> Option<String>,
) -> Outcome {
    let n = corpus[0].universe().len();
    if n > cap {
        return Outcome {
            name,
            status: Status::Skip(format!(
                "universe size {n} exceeds the table-check limit {cap}"
            )),
        };
    }
    for c in corpus {
        if let Some(detail) = f(c) {
            return Outcome {
                name,
                status: Status::Fail(detail),
            };
        }
    }
    Outcome {
        name,
        status: Status::Pass,
    }
}

fn pair_check(
    pairs: &[(Covering, Covering, Option<bool>)],
    name: &'static str,
    mut f: impl FnMut(&Covering, &Covering, Option<bool>) -> Option<String>,
) -> Outcome {
    for (i, (c1, c2, expect)) in pairs.iter().enumerate() {
        if let Some(detail) = f(c1, c2, *expect) {
            return Outcome {
                name,
                status: Status::Fail(format!("pair #{i}: {detail}")),
            };
        }
    }
    Outcome {
        name,
        status: Status::Pass,
    }
}

fn fail_at(c: &Covering, detail: &str) -> Option<String> {
    Some(format!("{detail}; covering {:?}", c.as_family()))
}

fn random_block(rng: &mut ChaCha8Rng, n: usize) -> Block {
    let mut b = Block::EMPTY;
    for i in 0..n {
        if rng.random_bool(0.5) {
            b = b.with(i);
        }
    }
    b
}

fn degrees_match_inside(c: &Covering, x: usize, k: Block) -> bool {
    let dx = repeat_degree(c, Block::singleton(x)).expect("singleton fits");
    for y in k.iter() {
        let pair = Block::singleton(x).with(y);
        if repeat_degree(c, pair).expect("pair fits") != dx {
            return false;
        }
    }
    true
}

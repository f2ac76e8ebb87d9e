use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use covdeg::inversion::{naive_zeta, zeta_in_place};
use covdeg::{
    canonical_equal, degree_table_with_cap, random, reconstruct_covering_with_cap, Universe,
};

pub struct BenchReport {
    pub n: usize,
    pub blocks: usize,
    pub table_secs: f64,
    pub invert_secs: f64,
    pub peak_rss_bytes: Option<u64>,
    pub naive_n: usize,
    pub fast_secs: f64,
    pub naive_secs: f64,
    pub speedup: f64,
}

const FAST_REPS: u32 = 50;

pub fn run(n: usize, naive_n: usize, seed: u64, cap: usize) -> covdeg::Result<BenchReport> {
    let universe = Universe::indexed(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let covering = random::random_covering(&mut rng, &universe);
    let window: Vec<usize> = (1..=n).collect();

    let start = Instant::now();
    let table = degree_table_with_cap(&covering, &window, cap)?;
    let table_secs = start.elapsed().as_secs_f64();

    let start = Instant::now();
    let back = reconstruct_covering_with_cap(&table, cap)?;
    let invert_secs = start.elapsed().as_secs_f64();
    assert!(
        canonical_equal(&back, &covering)?,
        "inversion must return the covering it came from"
    );

    let values: Vec<i64> = (0..1usize << naive_n)
        .map(|_| rng.random_range(-1000..1000))
        .collect();
    let start = Instant::now();
    for _ in 0..FAST_REPS {
        let mut scratch = values.clone();
        zeta_in_place(&mut scratch);
        std::hint::black_box(&scratch);
    }
    let fast_secs = start.elapsed().as_secs_f64() / f64::from(FAST_REPS);

    let start = Instant::now();
    let naive = naive_zeta(&values);
    let naive_secs = start.elapsed().as_secs_f64();
    std::hint::black_box(&naive);

    Ok(BenchReport {
        n,
        blocks: covering.blocks().len(),
        table_secs,
        invert_secs,
        peak_rss_bytes: peak_rss_bytes(),
        naive_n,
        fast_secs,
        naive_secs,
        speedup: naive_secs / fast_secs.max(1e-9),
    })
}

/// Peak resident set size, read from the kernel's per-process accounting.
fn peak_rss_bytes() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let field = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = field.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

pub fn report_text(r: &BenchReport) -> String {
    let rss = match r.peak_rss_bytes {
        Some(bytes) => format!("{:.1} MiB", bytes as f64 / (1024.0 * 1024.0)),
        None => "unavailable".to_owned(),
    };
    format!(
        "inversion n={} ({} blocks): table {:.3}s, reconstruct {:.3}s, peak rss {rss}\n\
         transforms n={}: fast {:.6}s, naive {:.3}s, speedup {:.1}x\n",
        r.n, r.blocks, r.table_secs, r.invert_secs, r.naive_n, r.fast_secs, r.naive_secs, r.speedup
    )
}

pub fn report_json(r: &BenchReport) -> serde_json::Value {
    serde_json::json!({
        "n": r.n,
        "blocks": r.blocks,
        "table_secs": r.table_secs,
        "invert_secs": r.invert_secs,
        "peak_rss_bytes": r.peak_rss_bytes,
        "naive_n": r.naive_n,
        "fast_secs": r.fast_secs,
        "naive_secs": r.naive_secs,
        "speedup": r.speedup,
    })
}

use std::fmt;
use std::ops::{AddAssign, SubAssign};

use crate::block::Block;
use crate::error::{Error, Result};
use crate::family::{Covering, SetFamily};
use crate::universe::{remap_block, Universe};

/// Largest universe for which full-lattice work (2^n dense arrays) is
/// attempted without an explicit override.
pub const DEFAULT_LATTICE_CAP: usize = 24;

/// Hard ceiling for the cap override: 2^30 entries of 8 bytes is already
/// an 8 GiB array.
pub const MAX_LATTICE_CAP: usize = 30;

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if cap == 0 || cap > MAX_LATTICE_CAP {
        return Err(Error::InvalidCap {
            cap,
            max: MAX_LATTICE_CAP,
        });
    }
    if n > cap {
        return Err(Error::UniverseTooLarge { size: n, cap });
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Calls `f` with every size-`w` subset of {0..n}, in canonical order
/// (lexicographic on ascending index lists).
fn for_each_subset_of_size(n: usize, w: usize, mut f: impl FnMut(Block)) {
    if w > n {
        return;
    }
    if w == 0 {
        f(Block::EMPTY);
        return;
    }
    let mut idx: Vec<usize> = (0..w).collect();
    loop {
        f(Block::from_indices(idx.iter().copied()));
        let mut i = w;
        while i > 0 && idx[i - 1] == i - 1 + n - w {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..w {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn normalize_window(window: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut window = window.to_vec();
    window.sort_unstable();
    window.dedup();
    for &w in &window {
        if w > n {
            return Err(Error::InvalidWindow { size: w, max: n });
        }
    }
    Ok(window)
}

/// Repeat degrees of every subset whose cardinality lies in a declared
/// window. Entries are kept in canonical block order, so identical tables
/// have identical entry sequences.
#[derive(Clone, PartialEq)]
pub struct DegreeTable {
    universe: Universe,
    window: Vec<usize>,
    entries: Vec<(Block, u64)>,
}

impl DegreeTable {
    /// Assembles a table from raw entries, enforcing that every declared
    /// size is completely populated and nothing falls outside the window.
    pub fn from_entries(
        universe: Universe,
        window: &[usize],
        entries: impl IntoIterator<Item = (Block, u64)>,
    ) -> Result<DegreeTable> {
        let n = universe.len();
        let window = normalize_window(window, n)?;
        let mut entries: Vec<(Block, u64)> = entries.into_iter().collect();
        for &(b, _) in &entries {
            universe.check_block(b)?;
        }
        entries.sort_by_key(|e| e.0);
        for pair in entries.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::DuplicateEntry {
                    subset: universe.block_names(pair[0].0).join(" "),
                });
            }
        }
        let mut counts = vec![0u128; n + 1];
        for &(b, _) in &entries {
            let w = b.cardinality();
            if window.binary_search(&w).is_err() {
                return Err(Error::EntryOutsideWindow {
                    subset: universe.block_names(b).join(" "),
                    size: w,
                });
            }
            counts[w] += 1;
        }
        for &w in &window {
            let expect = binomial(n, w);
            if counts[w] != expect {
                return Err(Error::IncompleteTable {
                    detail: format!("size {w} has {} of {expect} entries", counts[w]),
                });
            }
        }
        Ok(DegreeTable {
            universe,
            window,
            entries,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    pub fn entries(&self) -> &[(Block, u64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, b: Block) -> Option<u64> {
        self.entries
            .binary_search_by(|probe| probe.0.cmp(&b))
            .ok()
            .map(|i| self.entries[i].1)
    }

    /// Same table over a universe listing the same names in another order.
    pub fn remap_to(&self, target: &Universe) -> Result<DegreeTable> {
        if self.universe == *target {
            return Ok(self.clone());
        }
        let map = self.universe.alignment_to(target)?;
        let mut entries: Vec<(Block, u64)> = self
            .entries
            .iter()
            .map(|&(b, v)| (remap_block(b, &map), v))
            .collect();
        entries.sort_by_key(|e| e.0);
        Ok(DegreeTable {
            universe: target.clone(),
            window: self.window.clone(),
            entries,
        })
    }
}

impl fmt::Debug for DegreeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DegreeTable{{n={}, window={:?}, entries={}}}",
            self.universe.len(),
            self.window,
            self.entries.len()
        )
    }
}

pub fn degree_table(c: &Covering, window: &[usize]) -> Result<DegreeTable> {
    degree_table_with_cap(c, window, DEFAULT_LATTICE_CAP)
}

/// Builds the degree table either by one zeta transform over the dense
/// lattice or by scanning blocks per subset, whichever costs less.
pub fn degree_table_with_cap(c: &Covering, window: &[usize], cap: usize) -> Result<DegreeTable> {
    if cap == 0 || cap > MAX_LATTICE_CAP {
        return Err(Error::InvalidCap {
            cap,
            max: MAX_LATTICE_CAP,
        });
    }
    let universe = c.universe().clone();
    let n = universe.len();
    let window = normalize_window(window, n)?;
    let budget: u128 = window.iter().map(|&w| binomial(n, w)).sum();
    if budget > 1u128 << cap {
        return Err(Error::UniverseTooLarge { size: n, cap });
    }

    let mut entries = Vec::with_capacity(budget as usize);
    let dense_cost = if n <= cap {
        (n as u128) << n
    } else {
        u128::MAX
    };
    let sparse_cost = budget * c.len() as u128;
    if dense_cost < sparse_cost {
        let mut values = vec![0u64; 1 << n];
        for &k in c.blocks() {
            values[k.bits() as usize] = 1;
        }
        zeta_in_place(&mut values);
        for &w in &window {
            for_each_subset_of_size(n, w, |b| {
                entries.push((b, values[b.bits() as usize]));
            });
        }
    } else {
        for &w in &window {
            for_each_subset_of_size(n, w, |b| {
                let d = c.blocks().iter().filter(|&&k| b.is_subset_of(k)).count();
                entries.push((b, d as u64));
            });
        }
    }
    entries.sort_by_key(|e| e.0);
    Ok(DegreeTable {
        universe,
        window,
        entries,
    })
}

/// 0/1 membership flags for every nonempty subset, stored densely.
#[derive(Clone, PartialEq)]
pub struct IndicatorTable {
    universe: Universe,
    dense: Vec<u8>,
}

impl IndicatorTable {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn get(&self, b: Block) -> u8 {
        self.dense[b.bits() as usize]
    }

    /// All nonempty subsets with their flags, in canonical order.
    pub fn entries(&self) -> Vec<(Block, u8)> {
        let n = self.universe.len();
        let mut out = Vec::with_capacity(self.dense.len() - 1);
        for w in 1..=n {
            for_each_subset_of_size(n, w, |b| {
                out.push((b, self.dense[b.bits() as usize]));
            });
        }
        out
    }

    /// The subsets flagged 1, as a family.
    pub fn ones(&self) -> SetFamily {
        let blocks = (1..self.dense.len())
            .filter(|&m| self.dense[m] == 1)
            .map(|m| Block::from_bits(m as u64));
        SetFamily::new(self.universe.clone(), blocks)
            .expect("dense indices stay within the universe mask")
    }
}

impl fmt::Debug for IndicatorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IndicatorTable{{n={}, ones={:?}}}",
            self.universe.len(),
            self.ones()
        )
    }
}

pub fn indicator_table(c: &Covering) -> Result<IndicatorTable> {
    indicator_table_with_cap(c, DEFAULT_LATTICE_CAP)
}

pub fn indicator_table_with_cap(c: &Covering, cap: usize) -> Result<IndicatorTable> {
    let universe = c.universe().clone();
    check_cap(universe.len(), cap)?;
    let mut dense = vec![0u8; 1 << universe.len()];
    for &k in c.blocks() {
        dense[k.bits() as usize] = 1;
    }
    Ok(IndicatorTable { universe, dense })
}

/// Superset sums in place: after the call, slot Y holds the sum of the
/// original values over all supersets of Y. One pass per bit, O(n * 2^n).
pub fn zeta_in_place<T: AddAssign + Copy>(values: &mut [T]) {
    assert!(
        values.len().is_power_of_two(),
        "lattice arrays have power-of-two length"
    );
    let n = values.len().trailing_zeros();
    for b in 0..n {
        let bit = 1usize << b;
        for mask in 0..values.len() {
            if mask & bit == 0 {
                let upper = values[mask | bit];
                values[mask] += upper;
            }
        }
    }
}

/// Exact inverse of `zeta_in_place`, recovering the original values by
/// alternating subtraction.
pub fn mobius_in_place<T: SubAssign + Copy>(values: &mut [T]) {
    assert!(
        values.len().is_power_of_two(),
        "lattice arrays have power-of-two length"
    );
    let n = values.len().trailing_zeros();
    for b in 0..n {
        let bit = 1usize << b;
        for mask in 0..values.len() {
            if mask & bit == 0 {
                let upper = values[mask | bit];
                values[mask] -= upper;
            }
        }
    }
}

/// Quadratic reference: sums over all superset pairs directly.
pub fn naive_zeta<T: AddAssign + Copy + Default>(values: &[T]) -> Vec<T> {
    assert!(
        values.len().is_power_of_two(),
        "lattice arrays have power-of-two length"
    );
    let mut out = vec![T::default(); values.len()];
    for (y, slot) in out.iter_mut().enumerate() {
        for (x, &v) in values.iter().enumerate() {
            if x & y == y {
                *slot += v;
            }
        }
    }
    out
}

/// Quadratic reference for the inverse: signed sums over supersets.
pub fn naive_mobius<T: AddAssign + SubAssign + Copy + Default>(values: &[T]) -> Vec<T> {
    assert!(
        values.len().is_power_of_two(),
        "lattice arrays have power-of-two length"
    );
    let mut out = vec![T::default(); values.len()];
    for (v, slot) in out.iter_mut().enumerate() {
        for (z, &f) in values.iter().enumerate() {
            if z & v == v {
                if (z.count_ones() - v.count_ones()) % 2 == 0 {
                    *slot += f;
                } else {
                    *slot -= f;
                }
            }
        }
    }
    out
}

/// A real-valued function on the full subset lattice, for the general
/// transform pair; integer paths elsewhere never go through floats.
#[derive(Clone, PartialEq)]
pub struct RealSubsetFunction {
    universe: Universe,
    values: Vec<f64>,
}

impl RealSubsetFunction {
    pub fn new(universe: Universe, values: Vec<f64>) -> Result<RealSubsetFunction> {
        check_cap(universe.len(), DEFAULT_LATTICE_CAP)?;
        if values.len() != 1 << universe.len() {
            return Err(Error::IncompleteTable {
                detail: format!(
                    "expected {} values for the full lattice, got {}",
                    1usize << universe.len(),
                    values.len()
                ),
            });
        }
        Ok(RealSubsetFunction { universe, values })
    }

    pub fn zeros(universe: Universe) -> Result<RealSubsetFunction> {
        check_cap(universe.len(), DEFAULT_LATTICE_CAP)?;
        let len = 1usize << universe.len();
        Ok(RealSubsetFunction {
            universe,
            values: vec![0.0; len],
        })
    }

    pub fn from_fn(
        universe: Universe,
        mut f: impl FnMut(Block) -> f64,
    ) -> Result<RealSubsetFunction> {
        let mut out = RealSubsetFunction::zeros(universe)?;
        for m in 0..out.values.len() {
            out.values[m] = f(Block::from_bits(m as u64));
        }
        Ok(out)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn get(&self, b: Block) -> f64 {
        self.values[b.bits() as usize]
    }

    pub fn set(&mut self, b: Block, v: f64) {
        self.values[b.bits() as usize] = v;
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

impl fmt::Debug for RealSubsetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealSubsetFunction{{n={}}}", self.universe.len())
    }
}

/// Superset-sum transform: result(Y) = sum of g over all X with Y ⊆ X.
pub fn zeta_transform(g: &RealSubsetFunction) -> RealSubsetFunction {
    let mut out = g.clone();
    zeta_in_place(&mut out.values);
    out
}

/// Alternating-sum inverse: recovers g from its superset sums.
pub fn mobius_transform(f: &RealSubsetFunction) -> RealSubsetFunction {
    let mut out = f.clone();
    mobius_in_place(&mut out.values);
    out
}

pub fn reconstruct_covering(t: &DegreeTable) -> Result<Covering> {
    reconstruct_covering_with_cap(t, DEFAULT_LATTICE_CAP)
}

/// Inverts a full degree table back to the unique covering producing it.
///
/// The empty-set slot never feeds the inversion at nonempty subsets, so
/// the table may omit it (or carry it, via a window containing 0). Fails
/// when some recovered multiplicity is not 0/1, or when the recovered
/// family does not cover the universe.
pub fn reconstruct_covering_with_cap(t: &DegreeTable, cap: usize) -> Result<Covering> {
    let universe = t.universe().clone();
    let n = universe.len();
    check_cap(n, cap)?;
    for w in 1..=n {
        if t.window().binary_search(&w).is_err() {
            return Err(Error::IncompleteTable {
                detail: format!("reconstruction needs every size 1..={n}, window omits {w}"),
            });
        }
    }
    // No covering over n elements has more than 2^n - 1 blocks, so larger
    // values cannot be degrees and would overflow the signed accumulators.
    let limit = (1u64 << n) - 1;
    for &(b, v) in t.entries() {
        if v > limit {
            return Err(Error::InconsistentTable {
                subset: universe.block_names(b).join(" "),
                value: i64::try_from(v).unwrap_or(i64::MAX),
            });
        }
    }

    let len = 1usize << n;
    let mut g = vec![0i64; len];
    for &(b, v) in t.entries() {
        if !b.is_empty() {
            g[b.bits() as usize] = v as i64;
        }
    }
    mobius_in_place(&mut g);

    let mut violator: Option<Block> = None;
    for (mask, &val) in g.iter().enumerate().skip(1) {
        if val != 0 && val != 1 {
            let b = Block::from_bits(mask as u64);
            if violator.is_none_or(|cur| b < cur) {
                violator = Some(b);
            }
        }
    }
    if let Some(b) = violator {
        return Err(Error::InconsistentTable {
            subset: universe.block_names(b).join(" "),
            value: g[b.bits() as usize],
        });
    }

    let blocks: Vec<Block> = (1..len)
        .filter(|&m| g[m] == 1)
        .map(|m| Block::from_bits(m as u64))
        .collect();
    let family = SetFamily::new(universe.clone(), blocks)?;
    if !family.covers_universe() {
        let missing = universe.block_names(universe.full_block() - family.support());
        return Err(Error::NotACovering {
            missing,
            recovered: Some(Box::new(family)),
        });
    }
    Covering::new(universe, family.blocks().iter().copied())
}

/// The even/odd cardinality pair: the only two distinct coverings whose
/// degree tables agree on every size below the universe size.
#[derive(Clone, Debug, PartialEq)]
pub struct ParityPair {
    pub even: Covering,
    pub odd: Covering,
}

pub fn parity_pair(universe: Universe) -> Result<ParityPair> {
    parity_pair_with_cap(universe, DEFAULT_LATTICE_CAP)
}

pub fn parity_pair_with_cap(universe: Universe, cap: usize) -> Result<ParityPair> {
    let n = universe.len();
    if n < 2 {
        return Err(Error::InvalidSize { size: n });
    }
    check_cap(n, cap)?;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for mask in 1..(1u64 << n) {
        if mask.count_ones() % 2 == 0 {
            even.push(Block::from_bits(mask));
        } else {
            odd.push(Block::from_bits(mask));
        }
    }
    Ok(ParityPair {
        even: Covering::new(universe.clone(), even)?,
        odd: Covering::new(universe, odd)?,
    })
}

pub fn tables_equal(t1: &DegreeTable, t2: &DegreeTable) -> Result<bool> {
    let t2 = t2.remap_to(t1.universe())?;
    if t1.window() != t2.window() {
        return Err(Error::WindowMismatch {
            left: t1.window().to_vec(),
            right: t2.window().to_vec(),
        });
    }
    Ok(t1.entries() == t2.entries())
}

use std::fmt;

use crate::block::Block;
use crate::degree::gamma_map;
use crate::error::Result;
use crate::family::{Covering, SetFamily};
use crate::neighborhood::cov;

/// Whether k is a union of some subfamily. The empty subfamily has union
/// empty, so the empty block is always a member.
///
/// Any subfamily with union k consists only of subsets of k, and adding
/// further subsets of k never overshoots, so it suffices to union every
/// block contained in k and compare. One linear pass instead of 2^|family|.
pub fn in_union_closure(family: &SetFamily, k: Block) -> Result<bool> {
    family.universe().check_block(k)?;
    let mut acc = Block::EMPTY;
    for &l in family.blocks() {
        if l.is_subset_of(k) {
            acc = acc | l;
        }
    }
    Ok(acc == k)
}

/// Reference implementation enumerating all 2^|family| subfamilies.
/// Only usable for small families; kept as the oracle the fast test is
/// checked against.
pub fn naive_in_union_closure(family: &SetFamily, k: Block) -> Result<bool> {
    family.universe().check_block(k)?;
    let blocks = family.blocks();
    assert!(
        blocks.len() <= 20,
        "brute-force closure is exponential in the family size"
    );
    for choice in 0u64..(1 << blocks.len()) {
        let mut acc = Block::EMPTY;
        for (i, &l) in blocks.iter().enumerate() {
            if choice >> i & 1 == 1 {
                acc = acc | l;
            }
        }
        if acc == k {
            return Ok(true);
        }
    }
    Ok(false)
}

fn reducible_within(blocks: &[Block], k: Block) -> bool {
    // Distinct blocks contained in k are proper subsets, so the union of
    // all of them reaching k is exactly membership in I(C - {k}).
    let mut acc = Block::EMPTY;
    for &l in blocks {
        if l != k && l.is_subset_of(k) {
            acc = acc | l;
        }
    }
    acc == k
}

/// The blocks expressible as unions of other blocks of the covering.
pub fn reducible_elements(c: &Covering) -> SetFamily {
    let reducible = c
        .blocks()
        .iter()
        .copied()
        .filter(|&k| reducible_within(c.blocks(), k))
        .collect::<Vec<_>>();
    SetFamily::new(c.universe().clone(), reducible)
        .expect("blocks of a covering are valid over its universe")
}

/// Result of removing every reducible element at once.
#[derive(Clone, PartialEq)]
pub struct ReductReport {
    pub reduct: Covering,
    /// Removed reducible blocks, in canonical order.
    pub removed: Vec<Block>,
    pub cov_equals_reduct: bool,
    /// An element whose gamma block is absent, present exactly when the
    /// covering of neighborhoods differs from the reduct.
    pub gamma_witness: Option<String>,
}

impl fmt::Debug for ReductReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReductReport")
            .field("reduct", &self.reduct)
            .field("removed", &self.removed.len())
            .field("cov_equals_reduct", &self.cov_equals_reduct)
            .field("gamma_witness", &self.gamma_witness)
            .finish()
    }
}

/// Remove all reducible elements in one pass. Removing the whole family at
/// once is sound: a block reducible in C stays reducible after deleting
/// other reducible blocks, and no new reducible blocks appear.
pub fn reduct(c: &Covering) -> ReductReport {
    let removed = reducible_elements(c);
    let kept = c
        .blocks()
        .iter()
        .copied()
        .filter(|k| !removed.contains(*k))
        .collect::<Vec<_>>();
    let reduct = Covering::new(c.universe().clone(), kept)
        .expect("every covering block is a union of kept blocks");
    let cov_blocks = cov(c);
    let cov_equals_reduct = cov_blocks.blocks() == reduct.blocks();
    let gamma_witness = gamma_map(c).first_empty().map(str::to_owned);
    ReductReport {
        reduct,
        removed: removed.blocks().to_vec(),
        cov_equals_reduct,
        gamma_witness,
    }
}

/// Whether b is exactly the reduct of c: b must generate every block of c
/// by unions, and dropping any block of b must break that.
pub fn is_reduct_of(b: &SetFamily, c: &Covering) -> Result<bool> {
    let b = b.remap_to(c.universe())?;
    if b.blocks().iter().any(|&k| !c.contains(k)) {
        return Ok(false);
    }
    let generates = |family: &[Block]| {
        c.blocks().iter().all(|&k| {
            let mut acc = Block::EMPTY;
            for &l in family {
                if l.is_subset_of(k) {
                    acc = acc | l;
                }
            }
            acc == k
        })
    };
    if !generates(b.blocks()) {
        return Ok(false);
    }
    for drop in 0..b.len() {
        let rest = b
            .blocks()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != drop)
            .map(|(_, &l)| l)
            .collect::<Vec<_>>();
        if generates(&rest) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the covering of neighborhoods coincides with the reduct,
/// decided through the gamma criterion. The witness is the first element
/// whose gamma block is absent.
pub fn cov_is_reduct(c: &Covering) -> (bool, Option<String>) {
    match gamma_map(c).first_empty() {
        None => (true, None),
        Some(x) => (false, Some(x.to_owned())),
    }
}

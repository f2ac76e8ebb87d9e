use std::fmt;

use crate::block::Block;
use crate::error::{Error, Result};
use crate::family::Covering;
use crate::inversion::DegreeTable;
use crate::universe::Universe;

/// Number of blocks containing `x_set`. The empty set is contained in
/// every block, so its degree is the block count.
pub fn repeat_degree(c: &Covering, x_set: Block) -> Result<u64> {
    c.universe().check_block(x_set)?;
    Ok(c.blocks()
        .iter()
        .filter(|&&k| x_set.is_subset_of(k))
        .count() as u64)
}

fn singleton_degree(c: &Covering, x: usize) -> u64 {
    c.blocks().iter().filter(|&&k| k.contains(x)).count() as u64
}

/// Degrees of {x, y} for a fixed x and every y, as one row.
fn pair_degree_row(c: &Covering, x: usize) -> Vec<u64> {
    let n = c.universe().len();
    let mut row = vec![0u64; n];
    for &k in c.blocks() {
        if k.contains(x) {
            for y in k.iter() {
                row[y] += 1;
            }
        }
    }
    row
}

/// The set {y : degree({x,y}) = degree({x})}, computed from degrees alone.
/// Always equals the neighborhood of x.
pub fn p_set(c: &Covering, x: &str) -> Result<Block> {
    let xi = c.universe().require(x)?;
    let dx = singleton_degree(c, xi);
    let row = pair_degree_row(c, xi);
    Ok(Block::from_indices(
        (0..c.universe().len()).filter(|&y| row[y] == dx),
    ))
}

/// Whether two coverings assign every element the same P set.
pub fn same_p(c1: &Covering, c2: &Covering) -> Result<bool> {
    Ok(same_p_witness(c1, c2)?.is_none())
}

/// First element (in universe order) whose P sets differ, or None when
/// the coverings agree everywhere.
pub fn same_p_witness(c1: &Covering, c2: &Covering) -> Result<Option<String>> {
    let c2 = c2.aligned_with(c1)?;
    for name in c1.universe().elements() {
        if p_set(c1, name)? != p_set(&c2, name)? {
            return Ok(Some(name.clone()));
        }
    }
    Ok(None)
}

/// Per-element witness blocks: gamma(x) is the covering block K containing
/// x on which every member y has degree({x,y}) = degree({x}). At most one
/// block qualifies, and one exists exactly when N(x) is itself a block.
#[derive(Clone, PartialEq)]
pub struct GammaMap {
    universe: Universe,
    gamma: Vec<Option<Block>>,
}

impl GammaMap {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn entries(&self) -> &[Option<Block>] {
        &self.gamma
    }

    pub fn at(&self, index: usize) -> Option<Block> {
        self.gamma[index]
    }

    pub fn by_name(&self, name: &str) -> Result<Option<Block>> {
        Ok(self.gamma[self.universe.require(name)?])
    }

    /// First element with no gamma block, in universe order.
    pub fn first_empty(&self) -> Option<&str> {
        self.gamma
            .iter()
            .position(Option::is_none)
            .map(|i| self.universe.name(i))
    }
}

impl fmt::Debug for GammaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GammaMap{{")?;
        for (i, g) in self.gamma.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match g {
                Some(b) => write!(
                    f,
                    "{} : {{{}}}",
                    self.universe.name(i),
                    self.universe.block_names(*b).join(" ")
                )?,
                None => write!(f, "{} : -", self.universe.name(i))?,
            }
        }
        write!(f, "}}")
    }
}

fn gamma_at(c: &Covering, xi: usize) -> Option<Block> {
    let dx = singleton_degree(c, xi);
    let row = pair_degree_row(c, xi);
    c.blocks()
        .iter()
        .copied()
        .find(|k| k.contains(xi) && k.iter().all(|y| row[y] == dx))
}

pub fn gamma(c: &Covering, x: &str) -> Result<Option<Block>> {
    Ok(gamma_at(c, c.universe().require(x)?))
}

pub fn gamma_map(c: &Covering) -> GammaMap {
    let universe = c.universe().clone();
    let gamma = (0..universe.len()).map(|xi| gamma_at(c, xi)).collect();
    GammaMap { universe, gamma }
}

/// Rebuild the covering of neighborhoods from singleton and pair degrees
/// alone, without access to the covering itself.
pub fn cov_from_pair_degrees(t: &DegreeTable) -> Result<Covering> {
    let universe = t.universe().clone();
    let n = universe.len();
    let need = |b: Block| -> Result<u64> {
        t.get(b).ok_or_else(|| Error::IncompleteTable {
            detail: format!(
                "missing entry for {{{}}}",
                universe.block_names(b).join(" ")
            ),
        })
    };
    let mut p_sets = Vec::with_capacity(n);
    for x in 0..n {
        let dx = need(Block::singleton(x))?;
        let mut p = Block::EMPTY;
        for y in 0..n {
            let pair = Block::singleton(x).with(y);
            if need(pair)? == dx {
                p = p.with(y);
            }
        }
        p_sets.push(p);
    }
    Covering::new(universe, p_sets)
}

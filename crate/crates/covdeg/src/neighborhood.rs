use std::fmt;

use crate::block::Block;
use crate::error::Result;
use crate::family::Covering;
use crate::universe::Universe;

/// Per-element neighborhoods of a covering: N(x) is the intersection of
/// every block containing x.
#[derive(Clone, PartialEq)]
pub struct NeighborhoodMap {
    universe: Universe,
    neighborhoods: Vec<Block>,
}

impl NeighborhoodMap {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn blocks(&self) -> &[Block] {
        &self.neighborhoods
    }

    pub fn at(&self, index: usize) -> Block {
        self.neighborhoods[index]
    }

    pub fn by_name(&self, name: &str) -> Result<Block> {
        Ok(self.neighborhoods[self.universe.require(name)?])
    }
}

impl fmt::Debug for NeighborhoodMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NeighborhoodMap{{")?;
        for (i, &n) in self.neighborhoods.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "{} : {{{}}}",
                self.universe.name(i),
                self.universe.block_names(n).join(" ")
            )?;
        }
        write!(f, "}}")
    }
}

/// All neighborhoods in one pass: every block ANDs into the accumulator
/// of each of its members, so the whole map costs O(|C| * n) bit operations.
pub fn neighborhoods(c: &Covering) -> NeighborhoodMap {
    let universe = c.universe().clone();
    let mut acc = vec![universe.full_block(); universe.len()];
    for &k in c.blocks() {
        for x in k.iter() {
            acc[x] = acc[x] & k;
        }
    }
    NeighborhoodMap {
        universe,
        neighborhoods: acc,
    }
}

pub fn neighborhood(c: &Covering, x: &str) -> Result<Block> {
    let pos = c.universe().require(x)?;
    let mut acc = c.universe().full_block();
    for &k in c.blocks() {
        if k.contains(pos) {
            acc = acc & k;
        }
    }
    Ok(acc)
}

/// The covering of neighborhoods: the deduplicated set {N(x) : x in U}.
pub fn cov(c: &Covering) -> Covering {
    let map = neighborhoods(c);
    Covering::new(map.universe.clone(), map.neighborhoods.iter().copied())
        .expect("neighborhoods contain their own element, so they cover the universe")
}

/// The relation induced by a covering: x relates to y exactly when y lies
/// in N(x). Stored as one successor bitset per source element, so
/// successor lookup is a row read.
#[derive(Clone, PartialEq)]
pub struct RelationEdges {
    universe: Universe,
    rows: Vec<Block>,
}

impl RelationEdges {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn rows(&self) -> &[Block] {
        &self.rows
    }

    pub fn successor_at(&self, index: usize) -> Block {
        self.rows[index]
    }

    pub fn successor(&self, x: &str) -> Result<Block> {
        Ok(self.rows[self.universe.require(x)?])
    }

    pub fn contains(&self, x: &str, y: &str) -> Result<bool> {
        let xi = self.universe.require(x)?;
        let yi = self.universe.require(y)?;
        Ok(self.rows[xi].contains(yi))
    }

    /// All ordered pairs (x, y), sorted by source then target position.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, row) in self.rows.iter().enumerate() {
            for y in row.iter() {
                out.push((x, y));
            }
        }
        out
    }

    pub fn pair_names(&self) -> Vec<(String, String)> {
        self.pairs()
            .into_iter()
            .map(|(x, y)| {
                (
                    self.universe.name(x).to_owned(),
                    self.universe.name(y).to_owned(),
                )
            })
            .collect()
    }
}

impl fmt::Debug for RelationEdges {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelationEdges{{")?;
        for (i, (x, y)) in self.pairs().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({},{})", self.universe.name(x), self.universe.name(y))?;
        }
        write!(f, "}}")
    }
}

pub fn relation(c: &Covering) -> RelationEdges {
    let map = neighborhoods(c);
    RelationEdges {
        universe: map.universe,
        rows: map.neighborhoods,
    }
}

pub fn successor_neighborhood(r: &RelationEdges, x: &str) -> Result<Block> {
    r.successor(x)
}

/// Whether two coverings induce the same relation, decided by comparing
/// per-element neighborhoods rather than materializing pair sets.
pub fn same_relation(c1: &Covering, c2: &Covering) -> Result<bool> {
    let c2 = c2.aligned_with(c1)?;
    Ok(neighborhoods(c1).neighborhoods == neighborhoods(&c2).neighborhoods)
}

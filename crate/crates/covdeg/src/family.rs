use std::fmt;

use crate::block::Block;
use crate::error::{Error, Result};
use crate::universe::{remap_block, Universe};

/// A finite family of distinct subsets of a universe, kept in canonical
/// order (cardinality first, then lexicographic on element positions).
///
/// Duplicates collapse on construction, so two families are equal exactly
/// when they contain the same subsets.
#[derive(Clone, PartialEq)]
pub struct SetFamily {
    universe: Universe,
    blocks: Vec<Block>,
}

impl SetFamily {
    pub fn new(universe: Universe, blocks: impl IntoIterator<Item = Block>) -> Result<SetFamily> {
        let mut blocks: Vec<Block> = blocks.into_iter().collect();
        for &b in &blocks {
            universe.check_block(b)?;
        }
        blocks.sort();
        blocks.dedup();
        Ok(SetFamily { universe, blocks })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains(&self, block: Block) -> bool {
        self.blocks.binary_search(&block).is_ok()
    }

    /// Union of all member blocks.
    pub fn support(&self) -> Block {
        self.blocks.iter().fold(Block::EMPTY, |acc, &b| acc | b)
    }

    pub fn covers_universe(&self) -> bool {
        self.support() == self.universe.full_block()
    }

    /// Same family over a universe listing the same names in another order.
    pub fn remap_to(&self, target: &Universe) -> Result<SetFamily> {
        if self.universe == *target {
            return Ok(self.clone());
        }
        let map = self.universe.alignment_to(target)?;
        SetFamily::new(
            target.clone(),
            self.blocks.iter().map(|&b| remap_block(b, &map)),
        )
    }

    /// Member names, one Vec per block, in canonical block order.
    pub fn block_name_lists(&self) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|&b| self.universe.block_names(b))
            .collect()
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily{{")?;
        for (i, &b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{{}}}", self.universe.block_names(b).join(" "))?;
        }
        write!(f, "}}")
    }
}

/// A covering: a nonempty family of nonempty blocks whose union is the
/// whole universe.
#[derive(Clone, PartialEq)]
pub struct Covering {
    family: SetFamily,
}

impl Covering {
    pub fn new(universe: Universe, blocks: impl IntoIterator<Item = Block>) -> Result<Covering> {
        let blocks: Vec<Block> = blocks.into_iter().collect();
        for (index, &b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::EmptyBlock { index });
            }
        }
        let family = SetFamily::new(universe, blocks)?;
        if family.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if !family.covers_universe() {
            let missing = family
                .universe
                .block_names(family.universe.full_block() - family.support());
            return Err(Error::NotACovering {
                missing,
                recovered: None,
            });
        }
        Ok(Covering { family })
    }

    /// Build from element names grouped per block.
    pub fn from_names<I, J, S>(universe: Universe, names: I) -> Result<Covering>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let blocks = names
            .into_iter()
            .map(|group| universe.block_from_names(group))
            .collect::<Result<Vec<_>>>()?;
        Covering::new(universe, blocks)
    }

    pub fn universe(&self) -> &Universe {
        &self.family.universe
    }

    pub fn blocks(&self) -> &[Block] {
        &self.family.blocks
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    pub fn contains(&self, block: Block) -> bool {
        self.family.contains(block)
    }

    pub fn as_family(&self) -> &SetFamily {
        &self.family
    }

    pub fn into_family(self) -> SetFamily {
        self.family
    }

    pub fn remap_to(&self, target: &Universe) -> Result<Covering> {
        let family = self.family.remap_to(target)?;
        Ok(Covering { family })
    }

    /// Covering over the other covering's universe, aligned by element name.
    pub fn aligned_with(&self, other: &Covering) -> Result<Covering> {
        self.remap_to(other.universe())
    }
}

impl fmt::Debug for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Covering{}",
            format!("{:?}", self.family).trim_start_matches("SetFamily")
        )
    }
}

/// True when both carry the same element names and the same subsets.
pub fn canonical_equal(left: &Covering, right: &Covering) -> Result<bool> {
    let right = right.aligned_with(left)?;
    Ok(left.blocks() == right.blocks())
}

/// Universe spanned by raw name lists, elements in first-appearance order.
pub fn infer_universe<S: AsRef<str>>(raw_blocks: &[Vec<S>]) -> Result<Universe> {
    if raw_blocks.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut seen = std::collections::HashSet::new();
    let mut names = Vec::new();
    for block in raw_blocks {
        for name in block {
            let name = name.as_ref();
            if seen.insert(name.to_owned()) {
                names.push(name.to_owned());
            }
        }
    }
    Universe::new(names)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(names: &[&str]) -> Universe {
        Universe::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn family_sorts_and_dedups() {
        let u = uni(&["a", "b", "c"]);
        let blocks = [
            u.block_from_names(["b", "c"]).unwrap(),
            u.block_from_names(["a"]).unwrap(),
            u.block_from_names(["b", "c"]).unwrap(),
            u.block_from_names(["a", "b"]).unwrap(),
        ];
        let f = SetFamily::new(u, blocks).unwrap();
        assert_eq!(
            f.block_name_lists(),
            vec![
                vec!["a".to_string()],
                vec!["a".to_string(), "b".to_string()],
                vec!["b".to_string(), "c".to_string()],
            ]
        );
    }

    #[test]
    fn covering_rejects_gaps_and_empty_blocks() {
        let u = uni(&["a", "b", "c"]);
        let partial = [u.block_from_names(["a", "b"]).unwrap()];
        match Covering::new(u.clone(), partial) {
            Err(Error::NotACovering { missing, .. }) => assert_eq!(missing, vec!["c"]),
            other => panic!("expected NotACovering, got {other:?}"),
        }
        let with_empty = [u.full_block(), Block::EMPTY];
        assert_eq!(
            Covering::new(u.clone(), with_empty),
            Err(Error::EmptyBlock { index: 1 })
        );
        assert_eq!(Covering::new(u, []), Err(Error::EmptyFamily));
    }

    #[test]
    fn equality_respects_alignment() {
        let c1 = Covering::from_names(uni(&["a", "b", "c"]), [vec!["a", "b"], vec!["c"]]).unwrap();
        let c2 = Covering::from_names(uni(&["c", "b", "a"]), [vec!["c"], vec!["b", "a"]]).unwrap();
        assert!(canonical_equal(&c1, &c2).unwrap());

        let c3 = Covering::from_names(uni(&["a", "b", "c"]), [vec!["a"], vec!["b", "c"]]).unwrap();
        assert!(!canonical_equal(&c1, &c3).unwrap());

        let c4 = Covering::from_names(uni(&["a", "b"]), [vec!["a", "b"]]).unwrap();
        assert!(matches!(
            canonical_equal(&c1, &c4),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn inference_follows_first_appearance() {
        let blocks = vec![vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]];
        let u = infer_universe(&blocks).unwrap();
        assert_eq!(u.elements(), &["a", "b", "c"]);

        let blocks = vec![vec!["2", "3"], vec!["1", "2"]];
        let u = infer_universe(&blocks).unwrap();
        assert_eq!(u.elements(), &["2", "3", "1"]);

        assert_eq!(infer_universe::<&str>(&[]), Err(Error::EmptyFamily));
    }

    #[test]
    fn support_and_membership() {
        let u = uni(&["a", "b", "c"]);
        let c = Covering::from_names(u.clone(), [vec!["a", "b"], vec!["b", "c"]]).unwrap();
        assert!(c.contains(u.block_from_names(["a", "b"]).unwrap()));
        assert!(!c.contains(u.block_from_names(["a"]).unwrap()));
        assert_eq!(c.as_family().support(), u.full_block());
    }
}

use std::collections::HashMap;
use std::fmt;

use crate::block::{Block, MAX_WIDTH};
use crate::error::{Error, Result};

/// The finite, ordered ground set all blocks are subsets of.
///
/// Element order is fixed at construction and drives every canonical
/// ordering and every rendering, so identical inputs always produce
/// identical outputs.
#[derive(Clone)]
pub struct Universe {
    elements: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Universe>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let elements: Vec<String> = names.into_iter().map(Into::into).collect();
        if elements.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if elements.len() > MAX_WIDTH {
            return Err(Error::UniverseTooLarge {
                size: elements.len(),
                cap: MAX_WIDTH,
            });
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, name) in elements.iter().enumerate() {
            validate_name(name)?;
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement { name: name.clone() });
            }
        }
        Ok(Universe { elements, index })
    }

    /// Universe with generated names x1..xn.
    pub fn indexed(n: usize) -> Result<Universe> {
        Universe::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, index: usize) -> &str {
        &self.elements[index]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.position(name).ok_or_else(|| Error::UnknownElement {
            name: name.to_owned(),
        })
    }

    /// Mask with every element present.
    pub fn full_block(&self) -> Block {
        Block::full(self.len())
    }

    /// Rejects blocks carrying bits outside this universe's width.
    pub fn check_block(&self, block: Block) -> Result<()> {
        if block.is_subset_of(self.full_block()) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                detail: format!("block has bits beyond the {}-element universe", self.len()),
            })
        }
    }

    pub fn block_from_names<I, S>(&self, names: I) -> Result<Block>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut block = Block::EMPTY;
        for name in names {
            block = block.with(self.require(name.as_ref())?);
        }
        Ok(block)
    }

    /// Element names of a block, in universe order.
    pub fn block_names(&self, block: Block) -> Vec<String> {
        block.iter().map(|i| self.elements[i].clone()).collect()
    }

    pub fn same_names(&self, other: &Universe) -> bool {
        self.len() == other.len() && self.elements.iter().all(|e| other.index.contains_key(e))
    }

    /// Per-index translation from `self` positions to `other` positions.
    ///
    /// Errors with `UniverseMismatch` unless both universes carry exactly the
    /// same element names (order may differ).
    pub fn alignment_to(&self, other: &Universe) -> Result<Vec<usize>> {
        if !self.same_names(other) {
            return Err(Error::UniverseMismatch {
                detail: format!(
                    "element sets differ: [{}] vs [{}]",
                    self.elements.join(" "),
                    other.elements.join(" ")
                ),
            });
        }
        Ok(self.elements.iter().map(|e| other.index[e]).collect())
    }
}

/// Remap a block through an index translation table.
pub fn remap_block(block: Block, map: &[usize]) -> Block {
    Block::from_indices(block.iter().map(|i| map[i]))
}

fn validate_name(name: &str) -> Result<()> {
    let bad = name.is_empty()
        || name.starts_with('#')
        || name.chars().any(|c| c.is_whitespace() || c == ':');
    if bad {
        Err(Error::InvalidElementName {
            name: name.to_owned(),
        })
    } else {
        Ok(())
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Universe[{}]", self.elements.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_validates_names() {
        assert!(Universe::new(["a", "b"]).is_ok());
        assert_eq!(
            Universe::new(Vec::<String>::new()),
            Err(Error::EmptyUniverse)
        );
        assert_eq!(
            Universe::new(["a", "a"]),
            Err(Error::DuplicateElement { name: "a".into() })
        );
        assert!(matches!(
            Universe::new(["a", ""]),
            Err(Error::InvalidElementName { .. })
        ));
        assert!(matches!(
            Universe::new(["a:b"]),
            Err(Error::InvalidElementName { .. })
        ));
        assert!(matches!(
            Universe::new(["#x"]),
            Err(Error::InvalidElementName { .. })
        ));
        assert!(matches!(
            Universe::new(["a b"]),
            Err(Error::InvalidElementName { .. })
        ));
    }

    #[test]
    fn width_cap_is_enforced() {
        let names: Vec<String> = (0..65).map(|i| format!("e{i}")).collect();
        assert!(matches!(
            Universe::new(names),
            Err(Error::UniverseTooLarge { size: 65, cap: 64 })
        ));
        let names: Vec<String> = (0..64).map(|i| format!("e{i}")).collect();
        assert!(Universe::new(names).is_ok());
    }

    #[test]
    fn alignment_translates_positions() {
        let u1 = Universe::new(["a", "b", "c"]).unwrap();
        let u2 = Universe::new(["c", "a", "b"]).unwrap();
        let map = u1.alignment_to(&u2).unwrap();
        assert_eq!(map, vec![1, 2, 0]);
        let b = u1.block_from_names(["a", "c"]).unwrap();
        let remapped = remap_block(b, &map);
        assert_eq!(
            u2.block_names(remapped),
            vec!["c".to_string(), "a".to_string()]
        );

        let u3 = Universe::new(["a", "b"]).unwrap();
        assert!(matches!(
            u1.alignment_to(&u3),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn block_lookup_round_trips() {
        let u = Universe::new(["x", "y", "z"]).unwrap();
        let b = u.block_from_names(["z", "x"]).unwrap();
        assert_eq!(u.block_names(b), vec!["x".to_string(), "z".to_string()]);
        assert!(matches!(
            u.block_from_names(["w"]),
            Err(Error::UnknownElement { .. })
        ));
    }
}

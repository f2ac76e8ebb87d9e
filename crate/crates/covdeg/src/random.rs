use rand::Rng;

use crate::block::Block;
use crate::family::Covering;
use crate::universe::Universe;

/// Random covering over a fixed universe: between 1 and 3n candidate
/// blocks, each element joining each candidate with probability 1/2,
/// then singletons patch whatever stayed uncovered.
pub fn random_covering<R: Rng + ?Sized>(rng: &mut R, universe: &Universe) -> Covering {
    random_blocks(rng, universe, 3 * universe.len())
}

/// Like `random_covering`, but resamples until the deduplicated covering
/// has at most `max_blocks` blocks (block-count-sensitive callers, e.g.
/// exponential oracles). Always terminates: a single-candidate draw plus
/// singleton patches stays within n + 1 blocks.
pub fn random_covering_bounded<R: Rng + ?Sized>(
    rng: &mut R,
    universe: &Universe,
    max_blocks: usize,
) -> Covering {
    assert!(
        max_blocks > universe.len(),
        "max_blocks must exceed the universe size to leave room for patching"
    );
    loop {
        let c = random_blocks(rng, universe, max_blocks);
        if c.len() <= max_blocks {
            return c;
        }
    }
}

fn random_blocks<R: Rng + ?Sized>(
    rng: &mut R,
    universe: &Universe,
    max_candidates: usize,
) -> Covering {
    let n = universe.len();
    let count = rng.random_range(1..=max_candidates.max(1));
    let mut blocks = Vec::with_capacity(count + n);
    for _ in 0..count {
        let mut b = Block::EMPTY;
        for i in 0..n {
            if rng.random_bool(0.5) {
                b = b.with(i);
            }
        }
        if !b.is_empty() {
            blocks.push(b);
        }
    }
    let mut support = blocks.iter().fold(Block::EMPTY, |acc, &b| acc | b);
    for i in 0..n {
        if !support.contains(i) {
            blocks.push(Block::singleton(i));
            support = support.with(i);
        }
    }
    Covering::new(universe.clone(), blocks).expect("singleton patching completes the covering")
}

/// Adds `extra` blocks that are unions of random subfamilies. Such blocks
/// never change any neighborhood, so the result induces the same relation
/// as the input.
pub fn union_augmented<R: Rng + ?Sized>(rng: &mut R, c: &Covering, extra: usize) -> Covering {
    let mut blocks = c.blocks().to_vec();
    for _ in 0..extra {
        let mut b = Block::EMPTY;
        for &k in c.blocks() {
            if rng.random_bool(0.5) {
                b = b | k;
            }
        }
        if b.is_empty() {
            b = c.blocks()[rng.random_range(0..c.len())];
        }
        blocks.push(b);
    }
    Covering::new(c.universe().clone(), blocks).expect("augmenting keeps the covering valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::neighborhood::same_relation;

    #[test]
    fn generated_coverings_are_valid_and_reproducible() {
        let u = Universe::indexed(6).unwrap();
        let mut a = ChaCha8Rng::seed_from_u64(3);
        let mut b = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let c1 = random_covering(&mut a, &u);
            let c2 = random_covering(&mut b, &u);
            assert_eq!(c1.blocks(), c2.blocks());
            assert!(c1.as_family().covers_universe());
        }
    }

    #[test]
    fn bounded_generation_respects_the_limit() {
        let u = Universe::indexed(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let c = random_covering_bounded(&mut rng, &u, 7);
            assert!(c.len() <= 7);
        }
    }

    #[test]
    fn union_augmentation_preserves_the_relation() {
        let u = Universe::indexed(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..30 {
            let c = random_covering(&mut rng, &u);
            let augmented = union_augmented(&mut rng, &c, 3);
            assert!(augmented.len() >= c.len());
            assert!(same_relation(&c, &augmented).unwrap());
        }
    }
}

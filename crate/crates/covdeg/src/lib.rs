//! Coverings of finite universes and the calculus of their repeat degrees:
//! neighborhoods and the relation they induce, union-closure reducts, and
//! exact reconstruction of a covering from its degree table by subset-lattice
//! inversion.
//!
//! Universes hold at most 64 named elements, so every subset is a single
//! machine word and all families live in canonical (cardinality, then
//! lexicographic) order.
//!
//! ```
//! use covdeg::{Covering, Universe};
//!
//! let u = Universe::new(["1", "2", "3", "4"]).unwrap();
//! let blocks = vec![vec!["1", "2"], vec!["2", "3", "4"], vec!["3", "4"]];
//! let c = Covering::from_names(u, blocks).unwrap();
//!
//! let n2 = covdeg::neighborhood(&c, "2").unwrap();
//! assert_eq!(c.universe().block_names(n2), ["2"]);
//!
//! // The full degree table pins the covering down exactly.
//! let table = covdeg::degree_table(&c, &[1, 2, 3, 4]).unwrap();
//! let back = covdeg::reconstruct_covering(&table).unwrap();
//! assert_eq!(back.blocks(), c.blocks());
//! ```

pub mod block;
pub mod degree;
pub mod error;
pub mod family;
pub mod format;
pub mod inversion;
pub mod neighborhood;
pub mod random;
pub mod reduct;
pub mod universe;

pub use block::{Block, MAX_WIDTH};
pub use degree::{
    cov_from_pair_degrees, gamma, gamma_map, p_set, repeat_degree, same_p, same_p_witness, GammaMap,
};
pub use error::{Error, Result};
pub use family::{canonical_equal, infer_universe, Covering, SetFamily};
pub use format::{
    parse_covering, parse_degree_table, render_covering, render_covering_json, render_degree_table,
};
pub use inversion::{
    degree_table, degree_table_with_cap, indicator_table, indicator_table_with_cap,
    mobius_transform, parity_pair, parity_pair_with_cap, reconstruct_covering,
    reconstruct_covering_with_cap, tables_equal, zeta_transform, DegreeTable, IndicatorTable,
    ParityPair, RealSubsetFunction, DEFAULT_LATTICE_CAP, MAX_LATTICE_CAP,
};
pub use neighborhood::{
    cov, neighborhood, neighborhoods, relation, same_relation, successor_neighborhood,
    NeighborhoodMap, RelationEdges,
};
pub use reduct::{
    cov_is_reduct, in_union_closure, is_reduct_of, reducible_elements, reduct, ReductReport,
};
pub use universe::Universe;

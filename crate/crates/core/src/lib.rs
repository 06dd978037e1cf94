//! Clutters and their blockers, exact polyhedral idealness, cuboids, binary
//! matroids, cycle covers of graphs, and projective-geometry embeddings with
//! the dyadic packings they carry.
//!
//! Every computation is exact: GF(2) work uses packed bit vectors and all
//! polyhedral work uses arbitrary-precision rationals.
//!
//! ```
//! use tangle_core::{Clutter, CoveringNumber};
//!
//! let q6 = Clutter::q6();
//! assert_eq!(q6.covering_number(), CoveringNumber::Finite(2));
//! assert_eq!(q6.packing_number().unwrap(), 1);
//! assert!(q6.is_k_wise_intersecting(2) && !q6.is_k_wise_intersecting(3));
//! assert!(tangle_core::lp::is_ideal(&q6).unwrap().is_ideal());
//! ```

pub mod clutter;
pub mod cuboid;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod lp;
pub mod matroid;
pub mod pg;

pub use clutter::{Clutter, Colouring, CoveringNumber, DeletionMinor, Deduplication, Minor};
pub use cuboid::{FacetClass, FacetKind, ZeroOneSet};
pub use error::{Error, Result};
pub use gf2::{BinarySpace, BitVector};
pub use graph::{t30, CycleCover, Graph};
pub use lp::{FractionalPacking, Idealness, LpProblem, Rational};
pub use matroid::{BinaryMatroid, SumKind, ThreeCycleCover};
pub use pg::{Embedding, PgSubspace, QuarterPacking};

/// Search and enumeration limits. Exceeding one is always an error, never a
/// silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest rank whose points [`BinarySpace::points`] will list.
    pub point_rank: usize,
    /// Largest ground set for vertex enumeration of `Q(C)`.
    pub vertex_ground: usize,
    /// Largest member count for vertex enumeration of `Q(C)`.
    pub vertex_members: usize,
    /// Largest width for the cuboid idealness test.
    pub cube_width: usize,
    /// Largest width for facet enumeration of `conv(S)`.
    pub facet_width: usize,
    /// Largest cycle-space rank for exhaustive cycle cover search.
    pub cover_rank: usize,
    /// Largest width for the projective-geometry subspace construction.
    pub pg_width: usize,
    /// Largest number of candidate member subsets tried by the embedding search.
    pub embed_subsets: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            point_rank: gf2::DEFAULT_POINT_RANK_CAP,
            vertex_ground: 14,
            vertex_members: 128,
            cube_width: 7,
            facet_width: 6,
            cover_rank: 8,
            pg_width: 20,
            embed_subsets: 1 << 22,
        }
    }
}

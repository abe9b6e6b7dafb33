//! Exact dimension computations for degree-2, `C¹` generalized splines on
//! planar graphs whose edges carry squared linear forms.
//!
//! The dimension is read off the extended cycle basis matrix `M^ext`
//! ([`spline`]), checked against a combinatorial route through
//! edge-injective functions ([`injective`]) and repeated contraction of
//! minimal contractible face sets ([`contraction`]). Triangulations enter
//! through their labeled dual graphs ([`triangulation`]).
//!
//! ```
//! use splinedim::{fixtures, spline};
//!
//! let g = fixtures::two_squares();
//! let slopes = fixtures::consecutive_slopes(g.num_edges());
//! let labeled = g.with_slopes(&slopes);
//! assert_eq!(spline::mext_rank(&labeled, &labeled.labels()).unwrap(), 6);
//! assert_eq!(spline::spline_dimension(&labeled, &labeled.labels(), 0).unwrap(), 2);
//! ```

pub mod algebra;
pub mod contraction;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod injective;
pub mod spline;
pub mod triangulation;

pub use error::{Error, Result};
pub use graph::{EdgeLabel, GraphBuilder, PlanarGraph};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    struct Intro;
    #[doc = include_str!("../../../book/src/graphs.md")]
    struct Graphs;
    #[doc = include_str!("../../../book/src/matrices.md")]
    struct Matrices;
    #[doc = include_str!("../../../book/src/injective.md")]
    struct Injective;
    #[doc = include_str!("../../../book/src/contraction.md")]
    struct Contraction;
    #[doc = include_str!("../../../book/src/triangulations.md")]
    struct Triangulations;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}

//! Zero-free disks for chromatic polynomials of claw-free graphs.
//!
//! The chromatic polynomial is expanded over Penrose forests,
//! `P_G(q) = q^n F_G(-1/q)`, and a tree-counting bound on `F_G` shows that
//! `P_G` has no zeros with `|q| >= C Δ` for a constant `C` that depends on
//! the graph class and on the pair independence ratio `κ` of the graph.
//!
//! * [`graph`]: graphs, the edge-list format, class membership and `κ`.
//! * [`penrose`]: the Penrose scheme, forest polynomials, the ratio `R^u`,
//!   partition-scheme checks and two-branch obstructions.
//! * [`chromatic`]: an independent deletion–contraction oracle.
//! * [`genfun`]: tree generating functions and their closed forms.
//! * [`bounds`]: `K`, `x(a)`, `C(a)` and the table of constants.
//! * [`roots`]: complex roots of integer polynomials.
//! * [`corpus`] and [`families`]: the fixed graph corpus.
//! * [`cli`]: the `clawfree` command-line front end.

pub mod bounds;
pub mod chromatic;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod families;
pub mod genfun;
pub mod graph;
pub mod penrose;
pub mod poly;
pub mod roots;

pub use error::{Error, Result};
pub use graph::{parse_graph, Edge, Graph};
pub use penrose::{ForestTable, VertexOrdering};
pub use poly::SparsePolynomial;

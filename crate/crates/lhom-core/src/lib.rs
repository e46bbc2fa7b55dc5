//! A laboratory for the list homomorphism problem LHom(H).
//!
//! Given a fixed target graph `H` (possibly with loops) and an instance
//! `(G, L)` assigning each vertex of `G` a list `L(v) ⊆ V(H)`, LHom(H) asks
//! for a homomorphism `G -> H` respecting the lists. This crate bundles:
//!
//! * structural analysis of targets (comparability, predators, the
//!   associated bipartite graph, split/bipartite decompositions,
//!   interval-ness of reflexive targets),
//! * an exhaustive oracle used as ground truth everywhere,
//! * list-reduction preprocessing shared by the solvers,
//! * a quasi-polynomial-style branching solver for path-free instances,
//! * balanced-separator machinery and tree-decomposition dynamic
//!   programming, combined into a win-win solver for subdivided-claw-free
//!   triangle-free instances,
//! * search-based synthesis of verified gadgets, and compilers turning
//!   3-SAT / 3-Coloring into concrete LHom instances with certified
//!   structural freeness.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share across threads.

pub mod branching;
pub mod error;
pub mod gadget;
pub mod gen;
pub mod graph;
pub mod instance;
pub mod oracle;
pub mod preprocess;
pub mod reduction;
pub mod separator;
pub mod target;
pub mod treewidth;
pub mod winwin;

pub use error::Error;

//! Zero-divisor graphs of Z_n, their barycentric subdivisions, and exact
//! metric / fault-tolerant metric dimension via set-multicover search.
//!
//! The pipeline: [`zdgraph`] builds Γ(Z_n) on the nonzero zero-divisors,
//! [`subdivision`] replaces each edge with a midpoint and names the parts of
//! the result for n = pq, [`metric`] turns BFS distances into per-pair
//! resolver sets, [`solver`] finds minimum 1- and 2-covers of those pairs
//! (dim and fdim), and [`families`] checks the known closed-form values and
//! explicit landmark families against the solver.

pub mod bitset;
pub mod corpus;
pub mod families;
pub mod graph;
pub mod metric;
pub mod solver;
pub mod subdivision;
pub mod zdgraph;

pub use graph::{Graph, GraphError, LabeledGraph, VertexTag};
pub use metric::{
    all_pairs_distances, closed_neighborhood, is_ft_resolving, is_ft_resolving_by_removal,
    is_resolving, metric_code, pair_coverage, resolves, resolving_multiplicity, DistanceMatrix,
    LandmarkSet, MetricCode, MetricError, PairCoverage,
};
pub use solver::{
    cover_exists_within, dim, fdim, greedy_multicover, lower_bound_multicover,
    solve_min_multicover, solve_min_multicover_with, Feasibility, SearchLimits, SolveReport,
    SolveStatus, SolverError, Strategy,
};
pub use subdivision::{
    barycentric_subdivision, canonical_pq_labeling, PartLabel, PqPartition, SubdivisionError,
};
pub use zdgraph::{build_gamma, is_complete_bipartite, zero_divisors, GammaError, Residue};

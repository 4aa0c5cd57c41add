//! Perfection oracles: odd hole and antihole search for graphs, exact
//! vertex enumeration of `P(M) = {x in [0,1]^n : Mx <= 1}` for 0/1
//! matrices, and the combined verdict on whether N[G] is perfect.

mod family;
mod holes;
mod inherit;
mod rational;
mod vertices;

pub use family::{family_f_membership, ExtendedCliqueNode, Limits, PerfectionReport};
pub use holes::{find_odd_hole, is_perfect_graph, GraphPerfection, OddKind, OddWitness, MAX_PERFECT_GRAPH_NODES};
pub use inherit::{check_inherited_imperfection, InheritanceCheck};
pub use rational::{format_rational, parse_rational, RationalPoint};
pub(crate) use rational::{as_string as rational_string, option_as_string as option_rational_string};
pub use vertices::{
    is_perfect_matrix, is_perfect_matrix_capped, polytope_vertices, polytope_vertices_capped,
    MatrixPerfection, DEFAULT_MAX_VERTEX_DIM,
};

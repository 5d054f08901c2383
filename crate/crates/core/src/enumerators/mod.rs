//! Combinatorial models of `U_n` and `U_{n,d}`: subdiagonal maps, increasing
//! trees, unlabeled shapes and partial bijections.

mod bijections;
mod caps;
mod maps;
mod shapes;
mod trees;

pub use bijections::{
    count_partial_bijections, count_rook_placements, gen_stirling_by_bijections, staircase_board,
};
pub use caps::{Caps, CAP_ITEMS_ENV, CAP_SHAPES_ENV};
pub use maps::{
    count_pd_by_type, enumerate_pd, enumerate_sd, pd_type_counts, u_from_partial_maps,
    u_from_subdiagonal, PartialSubdiagonalMap, SubdiagonalMap,
};
pub use shapes::{alpha, enumerate_shapes, shape_of, u_from_shapes, RootedTree};
pub use trees::{
    enumerate_tree_tuples, enumerate_trees, u_d_from_tree_tuples, u_from_trees, v_from_trees,
    IncreasingTree,
};

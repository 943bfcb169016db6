//! Combinatorics of nilpotent H-orbits on the symmetric space GL_N/O_N and
//! the generalized Springer correspondence attached to them: orbit and
//! local-system labels, cuspidal data, the series bijection, restriction
//! multiplicities, dimension bookkeeping, counting series, and an exact
//! rational matrix oracle for the linear-algebra facts underneath.

pub mod correspondence;
pub mod counting;
pub mod cuspidal;
pub mod dims;
pub mod matrix;
pub mod orbit;
pub mod partition;
pub mod restriction;

pub use correspondence::{
    appendix_rows, correspondence_table, induced_orbit, sign_rep_orbit, unit_rep_orbit,
    verify_appendix, AppendixCheck, CorrespondenceRow,
};
pub use counting::{
    count_row, cuspidal_count, even_count_identity, partition_count, q1, q2,
    total_count_identity, weighted_count_identity, CountRow, PowerSeries,
};
pub use cuspidal::{
    cuspidal_support, cuspidal_support_all_orders, enumerate_cuspidal, enumerate_series, gamma,
    is_cuspidal, series_partition, CuspidalDatum, GammaError,
};
pub use dims::{
    b_w, d0, d_o, delta_q_w, dim_x_uni, half_gap, nu_h, random_signed_permutation, s_and_delta,
    LeviShape, SDelta, SignedPermutation,
};

pub use matrix::{
    adjoint, canonical_gram_constants, centralizer_dims, form_matrix, is_self_adjoint,
    jordan_type, nilpotent_representative, normal_basis, random_h_element,
    split_exchange_matrix, FormContext, MatrixError, NormalBasis, RationalMatrix,
};
pub use orbit::{
    component_groups, enumerate_orbits, enumerate_pairs, format_label, orbit_dimension,
    parse_label, requires_split, valid_sign_vectors, GroupContext, OrbitLabel, PairLabel, Sign,
    SignVector, Split,
};
pub use partition::{dominance_leq, enumerate_partitions, Block, ParseLabelError, Partition};
pub use restriction::{
    branching_consistency, d_member, epsilon_multiplicity, procedures, y_dimension, Procedure,
    ProcedureKind, YDimension,
};

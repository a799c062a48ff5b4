//! Subgroup machinery over tabulated groups: lattices, normality, series,
//! quotients and isomorphism.

pub mod cache;
mod iso;
mod lattice;
mod ops;
mod recognize;
mod table;

pub use iso::{are_isomorphic, tabulated_isomorphic};
pub use lattice::{SubgroupLattice, SUBGROUP_COUNT_CAP};
pub use ops::{
    center, centralizer, centralizer_of_element, commutator_subgroup, core, frattini_of,
    frattini_subgroup, is_nilpotent, is_normal, is_perfect, is_soluble, normal_closure,
    normal_closure_in, normality_data, normalizer, p_part, prime_divisors, quotient_group,
    quotient_of, series, series_of, sylow_subgroup, sylow_subgroup_of, NormalityData,
    SeriesKind, SeriesResult,
};
pub use recognize::{is_simple, recognize_group, recognize_tabulated};
pub use table::{SubgroupHandle, TabulatedGroup};

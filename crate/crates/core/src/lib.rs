//! General Sombor index `SO_α` on simple graphs, the extremal unicyclic
//! families, exhaustive unicyclic enumeration and numeric verification of the
//! extremal results.
//!
//! Index computations and analytic checks are generic over [`Scalar`]
//! (`f32` or `f64`); the aliases below pin the common choices.

pub mod enumerate;
pub mod families;
pub mod graph;
pub mod index;
pub mod scalar;
pub mod transforms;
pub mod verify;

pub use enumerate::{
    count_unicyclic, enumerate_free_trees, enumerate_unicyclic, EnumError, EnumFilter, EnumResult,
    Enumerator,
};
pub use families::{c_family, closed_form_u, cycle, u_graph, FamilyError, FamilySpec};
pub use graph::{are_isomorphic, canonical_code, CanonicalCode, FormatError, Graph, GraphError};
pub use index::{
    edge_contribution, forgotten, general_sombor, sombor, Alpha, IndexError, IndexValue,
};
pub use scalar::Scalar;
pub use transforms::{apply_swap, relocate, EdgeSwap, TransformError};
pub use verify::VerifyError;

pub type Alpha64 = Alpha<f64>;
pub type Alpha32 = Alpha<f32>;
pub type IndexValue64 = IndexValue<f64>;
pub type IndexValue32 = IndexValue<f32>;

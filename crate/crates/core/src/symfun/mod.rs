//! Symmetric functions over F_p: partitions, Schur functions through the
//! dual Jacobi-Trudi determinant and through tableaux, the dual Cauchy
//! identity, and the top Chern class of a tensor product.

mod cauchy;
mod partition;
mod poly;
mod schur;

pub use cauchy::{
    chern_euler_crosscheck, dual_cauchy_check, dual_cauchy_expansion, dual_cauchy_generators,
    dual_cauchy_product, euler_crosscheck, rectangular_schur, tensor_top_class,
    top_power_coefficient, EulerCrosscheck,
};
pub use partition::{box_complement, conjugate, partitions_in_box, Partition};
pub use poly::{elementary, elementary_in, GeneratorPoly, MultiPoly, SymPoly};
pub use schur::{
    nk_determinant, schur_monomial_oracle, schur_nk_expanded, schur_of_class, schur_via_nk,
};

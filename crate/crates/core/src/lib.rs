//! Exact model of the `(d+2)`-angulated higher cluster category of type `A_n`
//! and of indices with respect to its cluster tilting objects.
//!
//! The combinatorics ([`cyclic_model`], [`hom_engine`], [`tilting`]) work on
//! integers. The linear algebra ([`algebra_engine`], [`index_engine`]) is
//! generic over a [`Field`]; [`Rational`] is the default and the aliases
//! below fix it.

pub mod algebra_engine;
pub mod cyclic_model;
pub mod error;
pub mod hom_engine;
pub mod index_engine;
pub mod linalg;
pub mod scalar;
pub mod tilting;

pub use algebra_engine::{
    build_algebra, minimal_resolution, module_of, projective_cover, AlgebraPresentation, BasisMorphism, FreeModule,
    ModuleRep, ProjectiveCover, ResolutionReport,
};
pub use cyclic_model::{
    binomial, cyclically_between, enumerate_indecomposables, intertwines, is_admissible, predecessor, shift,
    strictly_cyclically_between, IndObj, ModelParams, Vertex,
};
pub use error::{Error, Result};
pub use hom_engine::{
    compose_nonzero, factors_through, hom_dim, hom_dim_by_chain, ideal_hom_dim, quotient_hom_dim, HomDim, HomQuery,
    HomTable,
};
pub use index_engine::{index_of, index_table, index_via_system, IndexEngine, IndexRow, IndexTable, IndexVector, Route};
pub use linalg::Matrix;
pub use scalar::{Field, Fp, IntegerLift};
pub use tilting::{
    compatibility_graph, enumerate_tilting, validate_tilting, CompatibilityGraph, TiltingEnumeration, TiltingError,
    TiltingObject,
};

/// Arbitrary-precision rationals, the default scalar field.
pub type Rational = num_rational::BigRational;
/// Rationals with machine-word numerators and denominators.
pub type SmallRational = num_rational::Ratio<i64>;
pub type Gf2 = Fp<2>;
pub type Gf3 = Fp<3>;
/// A large word-sized prime field, 2^31 - 1.
pub type GfMersenne31 = Fp<2_147_483_647>;

pub type RationalMatrix = Matrix<Rational>;
pub type RationalModule = ModuleRep<Rational>;
pub type RationalResolution = ResolutionReport<Rational>;

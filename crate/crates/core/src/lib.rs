//! Galerkin boundary element solver for harmonic acoustic transmission through
//! penetrable homogeneous objects.
//!
//! The crate assembles the Helmholtz boundary integral operators on triangulated
//! interfaces with continuous piecewise-linear (P1) elements, builds the PMCHWT
//! and Müller transmission formulations for one or more objects, and solves them
//! with unrestarted GMRES under mass, block-diagonal Calderón, or OSRC
//! (on-surface radiation condition) preconditioning. An independent
//! spherical-harmonic series solution for the penetrable sphere is included for
//! verification, together with volumetric field evaluation through the
//! representation formulas.

pub mod analytic;
pub mod assembly;
pub mod fields;
pub mod formulations;
pub mod medium;
pub mod mesh;
pub mod precond;
pub mod quadrature;
pub mod solver;
pub mod sparse;

pub use num_complex::Complex64;

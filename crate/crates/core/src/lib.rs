//! Exact computation of unfolded Seiberg–Witten Floer spectrum invariants
//! (type-A ind-spectra and type-R pro-spectra, S¹- and Pin(2)-equivariant)
//! for circle bundles, nil manifolds, S²×S¹ and flat T²-bundles.
//!
//! Modules, bottom up:
//! - [`seifert`]: orbifold line bundles, torsion spin-c classes, reducibility.
//! - [`spectral`]: lattice eigenvalue families, `m(L, δ)`, spectral flow.
//! - [`grading`]: eta/APS arithmetic and relative gradings.
//! - [`conley`]: Conley-index normal forms and their homology.
//! - [`systems`]: ind/pro systems of (descriptor, m, n) and the assembly pipeline.
//! - [`cli`]: spec parsing, reports, regression table.

pub mod cli;
pub mod conley;
pub mod grading;
pub mod rat;
pub mod seifert;
pub mod spectral;
pub mod systems;

pub use rat::Rat;

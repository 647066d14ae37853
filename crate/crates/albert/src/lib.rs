//! Exact-arithmetic toolkit for the algebra behind the exceptional
//! quadrangle: composition algebras up to the octonions, the 27-dimensional
//! exceptional Jordan algebra, Veronese vectors and their isotropy theory,
//! explicit spin-group generators with invariance certification, the
//! bivector toy model on a 6-dimensional hermitian space, and a generic
//! incidence-geometry audit layer.
//!
//! Everything computes over the rationals or the Gaussian rationals. Every
//! identity involved is polynomial in coordinates, so exact verification
//! over these desk-scale fields establishes it over the real and complex
//! ground fields; no tolerances enter unless the opt-in float backend is
//! selected.
//!
//! The crate is primarily a library. Start with the runnable examples, one
//! per capability:
//!
//! ```text
//! examples/
//! ├── octonions.rs          # Cayley-Dickson tower, norms, zero divisors
//! ├── jordan_algebra.rs     # Jordan product, det and cross, two routes each
//! ├── veronese_points.rs    # Veronese conditions, h, isotropy certificates
//! ├── classify_batch.rs     # batch classification with both procedures
//! ├── spin_generators.rs    # generator actions and invariance certification
//! ├── orbits.rs             # projective orbits under generator words
//! ├── toy_model.rs          # wedge algebra, confluence, Witt indices 2 and 7
//! └── quadrangle_audit.rs   # axiom audits, projections, samples, exports
//! ```
//!
//! A thin `albert` binary exposes the same capabilities as subcommands
//! (`verify`, `classify`, `orbit`, `witt`, `project`, `export-graph`); see
//! the repository README for the flag reference.
//!
//! Module map: [`scalar`] (ground fields), [`cayley`] (composition
//! algebras), [`jordan`] (the Albert algebra), [`veronese`] (isotropy and
//! V-incidence), [`spin`] (group generators and orbits), [`plucker`] (the
//! toy model), [`geometry`] (incidence samples and audits), with [`linalg`],
//! [`rng`], [`wire`], [`suites`] and [`cli`] as supporting layers.

pub mod cayley;
pub mod cli;
pub mod geometry;
pub mod jordan;
pub mod linalg;
pub mod plucker;
pub mod rng;
pub mod scalar;
pub mod spin;
pub mod suites;
pub mod veronese;
pub mod wire;

pub use cayley::CDNum;
pub use jordan::Herm3;
pub use scalar::{Field, GScalar, Rational};
pub use veronese::ProjPoint;

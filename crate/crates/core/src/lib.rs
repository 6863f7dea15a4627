//! Exact computation in the Schrödinger-Virasoro algebra `sv` and its
//! Whittaker modules.
//!
//! - [`lie`]: generators `L_n`, `M_n`, `Y_{n+1/2}` and the bracket.
//! - [`pbw`]: PBW words and normal forms in `U(sv)`.
//! - [`module`]: the universal Whittaker module `W_ψ`, its quotient
//!   `L_{ψ,ξ}`, the Verma module `V(ξ,ζ)`, and their actions.
//! - [`solver`]: exact kernels over truncated windows (Whittaker and
//!   singular vectors), nilpotency indices and submodule closures.
//! - [`expr`]: the text expression language used by the `sv` binary.
//! - [`verify`]: the bundled verification checks.
//!
//! All scalars are exact rationals.
//!
//! ```
//! use sv_core::rational::int;
//! use sv_core::{normal_form, whittaker_vectors, Generator, ModuleSpec, Truncation, WhittakerHom};
//!
//! let u = normal_form(&[Generator::l(1), Generator::l(-1)], &int(1));
//! assert_eq!(u.to_string(), "L-1*L1 - 2*L0");
//!
//! let spec = ModuleSpec::universal(WhittakerHom::new(int(0), int(0), int(1), int(0)));
//! let r = whittaker_vectors(&spec, &Truncation::uniform(2, 2, 2)).unwrap();
//! assert_eq!(r.dimension, 3);
//! ```

pub mod error;
pub mod expr;
pub mod lie;
pub mod linalg;
pub mod module;
pub mod partition;
pub mod pbw;
pub mod rational;
pub mod solver;
pub mod verify;

pub use error::{ParseError, Result, SvError};
pub use lie::{bracket, bracket_gen, gen_weight, Family, Generator, HalfInteger, LieElement};
pub use module::{act, act_gen, dot_act, z_element, BasisIndex, DegreeBound, ModuleSpec, ModuleVector, WhittakerHom};
pub use partition::{Partition, Pseudopartition};
pub use pbw::{ad_power, multiply, normal_form, uea_weight, Homogeneity, PbwOrder, PbwWord, UeaElement};
pub use rational::Rational;
pub use solver::{singular_vectors, whittaker_vectors, SolveReport, Truncation};

//! Exact equivariant Poincare series for Yang-Mills theory on surfaces with
//! classical structure groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: integer polynomials, rational functions in `t`, and
//!   truncated power series.
//! * [`rootsys`]: root data of types A, B, C, D in the coordinates
//!   `θ_i` / `e_i`.
//! * [`levidata`]: subsets of simple roots as compositions with tail flags,
//!   and the Levi data they determine.
//! * [`gaugeseries`]: Poincare series of classifying spaces of gauge groups.
//! * [`closedforms`]: closed formulas for flat and central Yang-Mills
//!   series, together with the general parabolic-sum engine.
//! * [`strata`]: Atiyah-Bott points, codimensions, stratum series and the
//!   recursion check.
//! * [`nonorient`]: index sets and component classification over
//!   nonorientable surfaces.
//! * [`inversion`]: lattice cone sums, the Langlands identity and the
//!   abstract inversion on small parabolic posets.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod closedforms;
pub mod error;
pub mod exactalg;
pub mod gaugeseries;
pub mod inversion;
pub mod levidata;
pub mod nonorient;
pub mod rootsys;
pub mod strata;

pub use error::{Result, YmError};
pub use exactalg::{BigRat, CoeffVector, Poly, RatFun};
pub use rootsys::{Family, GroupSpec, TopClass};

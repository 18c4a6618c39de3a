//! Closed formulas for equivariant Poincare series of flat and central
//! Yang-Mills connections over closed orientable surfaces.
//!
//! Each specialized formula lives in its own file and is transcribed term by
//! term from its printed statement:
//!
//! * `U(n)` central connections of any degree, and `SU(n)`, in [`zagier`];
//! * `Sp(n)` in [`sp`];
//! * `SO(2n+1)` for both values of `w₂` in [`so_odd`];
//! * `SO(2n)` for both values of `w₂` in [`so_even`].
//!
//! [`general`] evaluates the parabolic sum over all subsets of simple roots
//! from root and Levi data alone; the two routes are cross-checked.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Result, YmError};
use crate::exactalg::{BigRat, Poly, RatFun, Term};
use crate::rootsys::{Family, GroupSpec, TopClass};

pub mod general;
pub mod so_even;
pub mod so_odd;
pub mod sp;
pub mod zagier;

pub use general::lr_general;
pub use so_even::so_even_flat;
pub use so_odd::so_odd_flat;
pub use sp::sp_flat;
pub use zagier::{sun_flat, zagier_un};

/// Surface `Σ^ℓ_i`: genus-like parameter `ℓ` and `i ∈ {0, 1, 2}` (orientable,
/// one extra crosscap, or an extra Klein bottle).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceSpec {
    pub ell: u32,
    pub i: u8,
}

impl SurfaceSpec {
    pub fn orientable(ell: u32) -> SurfaceSpec {
        SurfaceSpec { ell, i: 0 }
    }

    /// Number of crosscaps `m = 2ℓ + i` of a nonorientable surface.
    pub fn crosscaps(&self) -> Option<u32> {
        (self.i > 0).then(|| 2 * self.ell + self.i as u32)
    }
}

/// A request for the flat (or, for `U(n)`, central) series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FlatSeriesRequest {
    pub group: GroupSpec,
    pub topclass: TopClass,
    pub surface: SurfaceSpec,
}

impl FlatSeriesRequest {
    pub fn new(group: GroupSpec, topclass: TopClass, ell: u32) -> FlatSeriesRequest {
        FlatSeriesRequest {
            group,
            topclass,
            surface: SurfaceSpec::orientable(ell),
        }
    }

    /// Checks the hard preconditions and returns the soft ones as warnings.
    pub fn validate(&self) -> Result<Vec<String>> {
        if self.surface.i != 0 {
            return Err(YmError::InvalidArgument(
                "closed formulas are stated for orientable surfaces only".into(),
            ));
        }
        check_ell(self.surface.ell)?;
        self.topclass.validate(&self.group)?;
        let mut warnings = Vec::new();
        if self.surface.ell < 2 {
            warnings.push(format!(
                "the stratification argument assumes genus at least 2; ℓ = {} is evaluated formally",
                self.surface.ell
            ));
        }
        Ok(warnings)
    }
}

/// Which route computes a flat series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    General,
    Specialized,
    /// Both routes, failing unless they agree.
    Both,
}

/// The representative of `x mod ℤ` in `(0, 1]`; in particular `⟨0⟩ = 1`.
pub fn frac_part(x: &BigRat) -> BigRat {
    x - x.ceil() + BigRat::one()
}

pub(crate) fn check_ell(ell: u32) -> Result<()> {
    if ell == 0 {
        return Err(YmError::InvalidArgument(
            "closed formulas need ℓ >= 1".into(),
        ));
    }
    Ok(())
}

/// Converts a rational exponent to a natural number.
pub(crate) fn nat_exponent(x: &BigRat) -> Result<usize> {
    if !x.denom().is_one() || *x < BigRat::zero() {
        return Err(YmError::NonIntegerExponent(x.to_string()));
    }
    x.numer()
        .to_usize()
        .ok_or_else(|| YmError::NonIntegerExponent(x.to_string()))
}

pub(crate) fn int(x: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(x))
}

/// `∏_{j=1}^{m} (1+t^{2j-1})^{2ℓ} / ((1-t^{2m}) ∏_{j=1}^{m-1} (1-t^{2j})^2)`,
/// the gauge factor of a `GL(m)` block.
pub(crate) fn gl_block(m: usize, ell: u32) -> Term {
    let mut num = Poly::one();
    for j in 1..=m {
        num = num.mul(&Poly::one_plus_t(2 * j - 1).pow(2 * ell as u64));
    }
    let mut den = vec![2 * m];
    for j in 1..m {
        den.push(2 * j);
        den.push(2 * j);
    }
    Term::new(num, den)
}

/// `∏_{j=1}^{m} (1+t^{4j-1})^{2ℓ} / ∏_{j=1}^{2m} (1-t^{2j})`, the gauge factor
/// of an `Sp(m)` or `SO(2m+1)` tail.
pub(crate) fn bc_tail(m: usize, ell: u32) -> Term {
    let mut num = Poly::one();
    for j in 1..=m {
        num = num.mul(&Poly::one_plus_t(4 * j - 1).pow(2 * ell as u64));
    }
    Term::new(num, (1..=2 * m).map(|j| 2 * j).collect())
}

/// `(1+t^{2m-1})^{2ℓ} ∏_{j=1}^{m-1} (1+t^{4j-1})^{2ℓ} /
/// ((1-t^{2m-2})(1-t^{2m}) ∏_{j=1}^{2m-2} (1-t^{2j}))`, the gauge factor of
/// an `SO(2m)` tail, `m ≥ 2`.
pub(crate) fn d_tail(m: usize, ell: u32) -> Term {
    assert!(m >= 2);
    let mut num = Poly::one_plus_t(2 * m - 1).pow(2 * ell as u64);
    for j in 1..m {
        num = num.mul(&Poly::one_plus_t(4 * j - 1).pow(2 * ell as u64));
    }
    let mut den = vec![2 * m - 2, 2 * m];
    den.extend((1..=2 * m - 2).map(|j| 2 * j));
    Term::new(num, den)
}

/// `Σ_{i<j} n_i n_j`.
pub(crate) fn cross_sum(comp: &[usize]) -> usize {
    let mut s = 0;
    for i in 0..comp.len() {
        for j in i + 1..comp.len() {
            s += comp[i] * comp[j];
        }
    }
    s
}

/// Dispatches a request to the specialized formula of its family.
fn specialized(req: &FlatSeriesRequest) -> Result<RatFun> {
    let g = req.group;
    let ell = req.surface.ell;
    let class = req.topclass.validate(&g)?;
    match (g.family, class) {
        (Family::U, TopClass::Degree(k)) => zagier_un(g.n, k, ell),
        (Family::SU, _) => sun_flat(g.n, ell),
        (Family::Sp, _) => sp_flat(g.n, ell),
        (Family::SOodd, TopClass::W2(w)) => so_odd_flat(g.n, ell, w),
        (Family::SpinOdd, _) => so_odd_flat(g.n, ell, 0),
        (Family::SOeven, TopClass::W2(w)) => so_even_flat(g.n, ell, w),
        (Family::SpinEven, _) => so_even_flat(g.n, ell, 0),
        _ => Err(YmError::TopClassMismatch {
            group: g.name(),
            class: class.to_string(),
        }),
    }
}

/// The flat series (central series for `U(n)`) through the chosen engine.
pub fn flat_series(req: &FlatSeriesRequest, engine: Engine) -> Result<RatFun> {
    req.validate()?;
    match engine {
        Engine::General => lr_general(req),
        Engine::Specialized => specialized(req),
        Engine::Both => {
            let a = lr_general(req)?;
            let b = specialized(req)?;
            if a == b {
                Ok(a)
            } else {
                Err(YmError::EngineMismatch(format!(
                    "{} {}: general {} vs specialized {}",
                    req.group, req.topclass, a, b
                )))
            }
        }
    }
}

/// The four identities between flat series forced by the low-rank
/// isomorphisms `Sp(1) ≅ SU(2) ≅ Spin(3)`, `Sp(2) ≅ Spin(5)`,
/// `Spin(4) ≅ SU(2) × SU(2)` and `Spin(6) ≅ SU(4)`, with the outcome of each.
pub fn exceptional_isomorphisms(ell: u32) -> Result<Vec<(&'static str, bool)>> {
    check_ell(ell)?;
    let su2 = sun_flat(2, ell)?;
    let sp1 = sp_flat(1, ell)?;
    Ok(vec![
        (
            "Sp(1) = SU(2) = SO(3)",
            sp1 == su2 && su2 == so_odd_flat(1, ell, 0)?,
        ),
        ("Sp(2) = SO(5)", sp_flat(2, ell)? == so_odd_flat(2, ell, 0)?),
        (
            "SO(4) = SU(2) x SU(2)",
            so_even_flat(2, ell, 0)? == su2.mul(&su2),
        ),
        (
            "SO(6) = SU(4)",
            so_even_flat(3, ell, 0)? == sun_flat(4, ell)?,
        ),
    ])
}

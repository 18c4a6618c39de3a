//! The parabolic sum evaluated from root data.
//!
//! ```text
//! P_t^G(X_flat(G)^c) = Σ_{I ⊆ Δ} (-1)^{dim Z(L_I) - dim Z(G)} P_t(B𝒢_{L_I})
//!     · t^{2 dim_ℂ U_I (ℓ-1)}
//!     · ∏_{α ∈ Δ \ I} t^{4⟨ρ^I, α^∨⟩ ⟨ϖ_α(c)⟩} / (1 - t^{4⟨ρ^I, α^∨⟩})
//! ```
//!
//! where `⟨x⟩` is the representative of `x mod ℤ` in `(0, 1]`. The sum over
//! the complement of `I` is indexed here by the roots cut from the diagram,
//! so the term with `I = Δ` is the gauge series of `G` itself.

use num_traits::Zero;

use super::{check_ell, frac_part, int, nat_exponent, FlatSeriesRequest};
use crate::error::Result;
use crate::exactalg::{sum_terms, BigRat, Poly, RatFun, Term};
use crate::gaugeseries::bg_orientable_term;
use crate::levidata::{enumerate_parabolics, levi_profile, weight_exponent};
use crate::rootsys::{weight_on_pi1, Family};

/// Evaluates the parabolic sum for `req`.
///
/// Individual twist exponents `4⟨ρ^I, α^∨⟩⟨ϖ_α(c)⟩` may be fractional for
/// `U(n)`; only their total must be an integer.
pub fn lr_general(req: &FlatSeriesRequest) -> Result<RatFun> {
    let g = req.group;
    let ell = req.surface.ell;
    check_ell(ell)?;
    let class = req.topclass.validate(&g)?;
    let mut terms = Vec::new();
    for index in enumerate_parabolics(&g) {
        let profile = levi_profile(&g, &index)?;
        let mut term = bg_orientable_term(&profile.betti, ell);
        let mut exponent = int(2 * profile.dim_u as i64 * (ell as i64 - 1));
        let mut den = Vec::new();
        for (j, v) in &profile.rho_pairings {
            let p = weight_exponent(v)?;
            let w = match (g.family, class) {
                (Family::SU, _) => BigRat::zero(),
                (Family::SpinOdd | Family::SpinEven, _) => BigRat::zero(),
                _ => weight_on_pi1(&g, *j, class)?,
            };
            exponent += int(p as i64) * frac_part(&w);
            den.push(p);
        }
        let e = nat_exponent(&exponent)?;
        term = term.mul(&Term::new(Poly::t_pow(e), den));
        if profile.center_excess % 2 == 1 {
            term = term.scale(-1);
        }
        terms.push(term);
    }
    Ok(sum_terms(&terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedforms::{so_even_flat, so_odd_flat, sp_flat, sun_flat, zagier_un};
    use crate::rootsys::{GroupSpec, TopClass};

    fn req(g: GroupSpec, c: TopClass, ell: u32) -> FlatSeriesRequest {
        FlatSeriesRequest::new(g, c, ell)
    }

    #[test]
    fn agrees_with_unitary() {
        for n in 1..=4 {
            for k in 0..n as i64 {
                for ell in 1..=3 {
                    let a = lr_general(&req(GroupSpec::u(n), TopClass::Degree(k), ell)).unwrap();
                    assert_eq!(a, zagier_un(n, k, ell).unwrap(), "U({n}) k={k} l={ell}");
                }
            }
        }
    }

    #[test]
    fn agrees_with_special_unitary() {
        for n in 2..=4 {
            for ell in 1..=3 {
                let a = lr_general(&req(GroupSpec::su(n), TopClass::Trivial, ell)).unwrap();
                assert_eq!(a, sun_flat(n, ell).unwrap(), "SU({n}) l={ell}");
            }
        }
    }

    #[test]
    fn agrees_with_symplectic_and_orthogonal() {
        for n in 1..=3 {
            for ell in 1..=3 {
                let a = lr_general(&req(GroupSpec::sp(n), TopClass::Trivial, ell)).unwrap();
                assert_eq!(a, sp_flat(n, ell).unwrap(), "Sp({n}) l={ell}");
                for w in 0..2u8 {
                    let a = lr_general(&req(GroupSpec::so_odd(n), TopClass::W2(w), ell)).unwrap();
                    assert_eq!(
                        a,
                        so_odd_flat(n, ell, w).unwrap(),
                        "SO({}) w={w}",
                        2 * n + 1
                    );
                    if n >= 2 {
                        let a =
                            lr_general(&req(GroupSpec::so_even(n), TopClass::W2(w), ell)).unwrap();
                        assert_eq!(a, so_even_flat(n, ell, w).unwrap(), "SO({}) w={w}", 2 * n);
                    }
                }
            }
        }
    }
}

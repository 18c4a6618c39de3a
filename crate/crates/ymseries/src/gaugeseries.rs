//! Rational Poincare series of classifying spaces of gauge groups.
//!
//! A compact connected group with rational cohomology generated in degrees
//! `2d_1 - 1, …, 2d_N - 1`, of which the first `r` have `d = 1` (the torus
//! part), has over a closed orientable surface of genus `ℓ`
//!
//! ```text
//! P_t(BG) = ((1+t)^{2ℓ}/(1-t^2))^r ∏_{k>r} (1+t^{2d_k-1})^{2ℓ} / ((1-t^{2d_k-2})(1-t^{2d_k}))
//! ```
//!
//! and over the connected sum of `m` real projective planes
//!
//! ```text
//! P_t(BG) = ∏_k (1+t^{2d_k-1})^{m-1} / (1-t^{2d_k}).
//! ```

use serde::{Deserialize, Serialize};

use crate::exactalg::{Poly, RatFun, Term};
use crate::levidata::LeviProfile;
use crate::rootsys::{Family, GroupSpec};

/// Degrees `d_1 ≤ d_2 ≤ ⋯` of the generators of `H^*(BG; ℚ)` (halved), with
/// the number `center_count` of degree-one entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub degrees: Vec<u32>,
    pub center_count: usize,
}

impl DegreeProfile {
    /// Sorts the degrees and checks that exactly `center_count` of them are 1.
    pub fn new(mut degrees: Vec<u32>, center_count: usize) -> DegreeProfile {
        degrees.sort_unstable();
        let ones = degrees.iter().filter(|&&d| d == 1).count();
        assert_eq!(
            ones, center_count,
            "degree-one entries must form the torus part"
        );
        assert!(degrees.iter().all(|&d| d >= 1));
        DegreeProfile {
            degrees,
            center_count,
        }
    }

    /// Profile of a product group.
    pub fn product(parts: &[DegreeProfile]) -> DegreeProfile {
        let degrees = parts
            .iter()
            .flat_map(|p| p.degrees.iter().copied())
            .collect();
        let center = parts.iter().map(|p| p.center_count).sum();
        DegreeProfile::new(degrees, center)
    }
}

/// `U(m)`: degrees `1, 2, …, m`.
pub fn unitary_degrees(m: usize) -> DegreeProfile {
    DegreeProfile::new((1..=m as u32).collect(), 1)
}

/// `SO(2m+1)` and `Sp(m)`: degrees `2, 4, …, 2m`.
pub fn type_bc_degrees(m: usize) -> DegreeProfile {
    DegreeProfile::new((1..=m as u32).map(|k| 2 * k).collect(), 0)
}

/// `SO(2m)`, `m ≥ 2`: degrees `2, 4, …, 2m-2` and `m`.
pub fn type_d_degrees(m: usize) -> DegreeProfile {
    assert!(m >= 2, "SO(2m) needs m >= 2");
    let mut d: Vec<u32> = (1..m as u32).map(|k| 2 * k).collect();
    d.push(m as u32);
    DegreeProfile::new(d, 0)
}

/// Degree profile of `g`.
pub fn betti_degrees(g: &GroupSpec) -> DegreeProfile {
    match g.family {
        Family::U => unitary_degrees(g.n),
        Family::SU => DegreeProfile::new((2..=g.n as u32).collect(), 0),
        Family::SOodd | Family::SpinOdd | Family::Sp => type_bc_degrees(g.n),
        Family::SOeven | Family::SpinEven => type_d_degrees(g.n),
    }
}

/// The orientable gauge series as a summand with binomial denominator.
pub fn bg_orientable_term(profile: &DegreeProfile, ell: u32) -> Term {
    let two_l = 2 * ell as u64;
    let mut num = Poly::one();
    let mut den = Vec::new();
    for &d in &profile.degrees {
        let d = d as usize;
        num = num.mul(&Poly::one_plus_t(2 * d - 1).pow(two_l));
        if d == 1 {
            den.push(2);
        } else {
            den.push(2 * d - 2);
            den.push(2 * d);
        }
    }
    Term::new(num, den)
}

/// `P_t(B𝒢)` over the closed orientable surface of genus `ℓ`.
pub fn bg_orientable(profile: &DegreeProfile, ell: u32) -> RatFun {
    bg_orientable_term(profile, ell).to_ratfun()
}

/// `P_t(B𝒢)` over the connected sum of `m ≥ 1` real projective planes.
pub fn bg_nonorientable(profile: &DegreeProfile, m: u32) -> RatFun {
    assert!(m >= 1, "a nonorientable surface has at least one crosscap");
    let mut num = Poly::one();
    let mut den = Vec::new();
    for &d in &profile.degrees {
        let d = d as usize;
        num = num.mul(&Poly::one_plus_t(2 * d - 1).pow((m - 1) as u64));
        den.push(2 * d);
    }
    Term::new(num, den).to_ratfun()
}

/// Gauge series of the Levi factor: the product of the per-factor series.
pub fn bg_levi(profile: &LeviProfile, ell: u32) -> RatFun {
    bg_orientable(&profile.betti, ell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{ratfun_eq, series_expand};
    use crate::levidata::{levi_profile, ParabolicIndex, TailFlags};

    fn rf(num: Poly, dens: &[usize]) -> RatFun {
        let mut d = Poly::one();
        for &a in dens {
            d = d.mul(&Poly::one_minus_t(a));
        }
        RatFun::new(num, d).unwrap()
    }

    #[test]
    fn degree_tables() {
        assert_eq!(
            betti_degrees(&GroupSpec::u(3)),
            DegreeProfile::new(vec![1, 2, 3], 1)
        );
        assert_eq!(
            betti_degrees(&GroupSpec::sp(2)),
            DegreeProfile::new(vec![2, 4], 0)
        );
        assert_eq!(
            betti_degrees(&GroupSpec::so_even(3)),
            DegreeProfile::new(vec![2, 3, 4], 0)
        );
        assert_eq!(betti_degrees(&GroupSpec::so_even(2)).degrees, vec![2, 2]);
        assert_eq!(betti_degrees(&GroupSpec::su(3)).degrees, vec![2, 3]);
    }

    #[test]
    fn orientable_examples() {
        for ell in 0..4u32 {
            let l2 = 2 * ell as u64;
            assert_eq!(
                bg_orientable(&unitary_degrees(1), ell),
                rf(Poly::one_plus_t(1).pow(l2), &[2])
            );
            assert_eq!(
                bg_orientable(&betti_degrees(&GroupSpec::su(2)), ell),
                rf(Poly::one_plus_t(3).pow(l2), &[2, 4])
            );
        }
        let u2 = bg_orientable(&unitary_degrees(2), 2);
        let want = rf(
            Poly::one_plus_t(1).pow(4).mul(&Poly::one_plus_t(3).pow(4)),
            &[2, 2, 4],
        );
        assert_eq!(u2, want);
    }

    #[test]
    fn nonorientable_examples() {
        assert_eq!(
            bg_nonorientable(&unitary_degrees(1), 2),
            rf(Poly::one(), &[1])
        );
        assert_eq!(
            bg_nonorientable(&betti_degrees(&GroupSpec::su(2)), 3),
            rf(Poly::one_plus_t(3).pow(2), &[4])
        );
        assert_eq!(
            bg_nonorientable(&betti_degrees(&GroupSpec::sp(2)), 2),
            rf(Poly::one_plus_t(3).mul(&Poly::one_plus_t(7)), &[4, 8])
        );
    }

    #[test]
    fn levi_examples() {
        let ell = 3;
        let u1 = bg_orientable(&unitary_degrees(1), ell);
        let p = levi_profile(
            &GroupSpec::u(2),
            &ParabolicIndex::new(vec![1, 1], TailFlags::None),
        )
        .unwrap();
        assert!(ratfun_eq(&bg_levi(&p, ell), &u1.mul(&u1)));
        let full = levi_profile(
            &GroupSpec::sp(2),
            &ParabolicIndex::new(vec![2], TailFlags::Last(false)),
        )
        .unwrap();
        assert_eq!(
            bg_levi(&full, ell),
            bg_orientable(&betti_degrees(&GroupSpec::sp(2)), ell)
        );
        let mixed = levi_profile(
            &GroupSpec::sp(2),
            &ParabolicIndex::new(vec![1, 1], TailFlags::Last(false)),
        )
        .unwrap();
        let sp1 = bg_orientable(&betti_degrees(&GroupSpec::sp(1)), ell);
        assert_eq!(bg_levi(&mixed, ell), u1.mul(&sp1));
    }

    #[test]
    fn positivity_at_base_cases() {
        let groups = [
            GroupSpec::u(1),
            GroupSpec::u(3),
            GroupSpec::su(4),
            GroupSpec::sp(3),
            GroupSpec::so_odd(2),
            GroupSpec::so_even(3),
        ];
        for g in groups {
            let p = betti_degrees(&g);
            let a = series_expand(&bg_orientable(&p, 0), 60).unwrap();
            let b = series_expand(&bg_nonorientable(&p, 1), 60).unwrap();
            assert!(a.all_nonnegative(), "{g}");
            assert!(b.all_nonnegative(), "{g}");
        }
    }

    #[test]
    fn multiplicative() {
        let a = unitary_degrees(2);
        let b = type_bc_degrees(2);
        let prod = DegreeProfile::product(&[a.clone(), b.clone()]);
        for ell in 1..3 {
            assert_eq!(
                bg_orientable(&prod, ell),
                bg_orientable(&a, ell).mul(&bg_orientable(&b, ell))
            );
        }
    }
}

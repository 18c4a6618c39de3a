//! Printed example expressions, transcribed summand by summand, used as
//! independent oracles by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use ymseries::exactalg::{Poly, RatFun};
use ymseries::{GroupSpec, TopClass};

/// `c · ∏ (1+t^j)^{mℓ} · t^{aℓ+b} / ∏ (1-t^d)`.
#[derive(Debug, Clone)]
pub struct Summand {
    pub coeff: i64,
    pub odd_factors: &'static [(usize, u64)],
    pub t_power: (i64, i64),
    pub den: &'static [usize],
}

const fn s(
    coeff: i64,
    odd_factors: &'static [(usize, u64)],
    t_power: (i64, i64),
    den: &'static [usize],
) -> Summand {
    Summand {
        coeff,
        odd_factors,
        t_power,
        den,
    }
}

impl Summand {
    pub fn eval(&self, ell: u32) -> RatFun {
        let l = ell as i64;
        let mut num = Poly::constant(BigInt::from(self.coeff));
        for &(j, m) in self.odd_factors {
            num = num.mul(&Poly::one_plus_t(j).pow(m * ell as u64));
        }
        let e = self.t_power.0 * l + self.t_power.1;
        assert!(e >= 0, "negative power of t in a transcription");
        num = num.mul(&Poly::t_pow(e as usize));
        let mut den = Poly::one();
        for &d in self.den {
            den = den.mul(&Poly::one_minus_t(d));
        }
        RatFun::new(num, den).expect("nonzero denominator")
    }
}

/// One printed example.
#[derive(Debug, Clone)]
pub struct Example {
    /// Golden-file stem.
    pub name: &'static str,
    pub group: GroupSpec,
    pub topclass: TopClass,
    pub summands: Vec<Summand>,
}

impl Example {
    pub fn eval(&self, ell: u32) -> RatFun {
        self.summands
            .iter()
            .fold(RatFun::zero(), |acc, x| acc.add(&x.eval(ell)))
    }
}

fn sp1_like() -> Vec<Summand> {
    vec![
        s(-1, &[(1, 2)], (2, 2), &[2, 4]),
        s(1, &[(3, 2)], (0, 0), &[2, 4]),
    ]
}

fn u2(k_odd: bool) -> Vec<Summand> {
    let b = if k_odd { 0 } else { 2 };
    vec![
        s(1, &[(1, 2), (3, 2)], (0, 0), &[2, 2, 4]),
        Summand {
            coeff: -1,
            odd_factors: &[(1, 4)],
            t_power: (2, b),
            den: &[2, 2, 4],
        },
    ]
}

/// The first printed line of the `SO(4)`, `w₂ = 1` example.
pub fn so4_minus_first_line() -> Vec<Summand> {
    vec![
        s(1, &[(1, 4)], (4, 2), &[2, 2, 4, 4]),
        s(-2, &[(1, 2), (3, 2)], (2, 0), &[2, 2, 4, 4]),
        s(1, &[(3, 4)], (0, 0), &[2, 2, 4, 4]),
    ]
}

/// The factored second line of the same example.
pub fn so4_minus_second_line() -> Vec<Summand> {
    vec![
        s(1, &[(1, 2), (3, 4)], (0, 0), &[2, 2, 4, 4]),
        s(-2, &[(1, 4), (3, 2)], (2, 0), &[2, 2, 4, 4]),
        s(1, &[(1, 6)], (4, 0), &[2, 2, 4, 4]),
    ]
}

/// The first line of the `SO(4)`, `w₂ = 1` example with `t^{4ℓ+2}` read as
/// `t^{4ℓ}`.
pub fn so4_minus_first_line_exponent_fixed() -> Vec<Summand> {
    let mut v = so4_minus_first_line();
    v[0].t_power = (4, 0);
    v
}

/// The second line of the same example without the `(1+t)^{2ℓ}` prefactor.
pub fn so4_minus_second_line_prefactor_dropped() -> Vec<Summand> {
    vec![
        s(1, &[(3, 4)], (0, 0), &[2, 2, 4, 4]),
        s(-2, &[(1, 2), (3, 2)], (2, 0), &[2, 2, 4, 4]),
        s(1, &[(1, 4)], (4, 0), &[2, 2, 4, 4]),
    ]
}

/// Examples whose printed expression disagrees with the computed series;
/// see `so4_minus_*` above.
pub const MISPRINTED: [&str; 1] = ["so4_minus"];

pub fn sum(v: &[Summand], ell: u32) -> RatFun {
    v.iter()
        .fold(RatFun::zero(), |acc, x| acc.add(&x.eval(ell)))
}

/// The second, factored line of the `SO(4)`, `w₂ = 0` example.
pub fn so4_plus_second_line() -> Vec<Summand> {
    vec![
        s(1, &[(3, 4)], (0, 0), &[2, 2, 4, 4]),
        s(-2, &[(1, 2), (3, 2)], (2, 2), &[2, 2, 4, 4]),
        s(1, &[(1, 4)], (4, 4), &[2, 2, 4, 4]),
    ]
}

/// Every printed example of a flat or central series.
pub fn printed_examples() -> Vec<Example> {
    vec![
        Example {
            name: "u2_even",
            group: GroupSpec::u(2),
            topclass: TopClass::Degree(0),
            summands: u2(false),
        },
        Example {
            name: "u2_odd",
            group: GroupSpec::u(2),
            topclass: TopClass::Degree(1),
            summands: u2(true),
        },
        Example {
            name: "su2",
            group: GroupSpec::su(2),
            topclass: TopClass::Trivial,
            summands: vec![
                s(1, &[(3, 2)], (0, 0), &[2, 4]),
                s(-1, &[(1, 2)], (2, 2), &[2, 4]),
            ],
        },
        Example {
            name: "su3",
            group: GroupSpec::su(3),
            topclass: TopClass::Trivial,
            summands: vec![
                s(1, &[(3, 2), (5, 2)], (0, 0), &[2, 4, 4, 6]),
                s(-2, &[(1, 2), (3, 2)], (4, 2), &[2, 2, 4, 6]),
                s(1, &[(1, 4)], (6, 2), &[2, 2, 4, 4]),
            ],
        },
        Example {
            name: "su4",
            group: GroupSpec::su(4),
            topclass: TopClass::Trivial,
            summands: vec![
                s(1, &[(3, 2), (5, 2), (7, 2)], (0, 0), &[2, 4, 4, 6, 6, 8]),
                s(-2, &[(1, 2), (3, 2), (5, 2)], (6, 2), &[2, 2, 4, 4, 6, 8]),
                s(-1, &[(1, 2), (3, 4)], (8, 0), &[2, 2, 2, 4, 4, 8]),
                s(2, &[(1, 4), (3, 2)], (10, 0), &[2, 2, 2, 4, 4, 6]),
                s(1, &[(1, 4), (3, 2)], (10, 2), &[2, 2, 2, 4, 6, 6]),
                s(-1, &[(1, 6)], (12, 0), &[2, 2, 2, 4, 4, 4]),
            ],
        },
        Example {
            name: "so3_plus",
            group: GroupSpec::so_odd(1),
            topclass: TopClass::W2(0),
            summands: sp1_like(),
        },
        Example {
            name: "so3_minus",
            group: GroupSpec::so_odd(1),
            topclass: TopClass::W2(1),
            summands: vec![
                s(-1, &[(1, 2)], (2, 0), &[2, 4]),
                s(1, &[(3, 2)], (0, 0), &[2, 4]),
            ],
        },
        Example {
            name: "so5_plus",
            group: GroupSpec::so_odd(2),
            topclass: TopClass::W2(0),
            summands: vec![
                s(-1, &[(1, 2), (3, 2)], (6, 2), &[2, 2, 4, 8]),
                s(1, &[(3, 2), (7, 2)], (0, 0), &[2, 4, 6, 8]),
                s(1, &[(1, 4)], (8, 0), &[2, 2, 4, 4]),
                s(-1, &[(1, 2), (3, 2)], (6, 0), &[2, 2, 4, 6]),
            ],
        },
        Example {
            name: "so5_minus",
            group: GroupSpec::so_odd(2),
            topclass: TopClass::W2(1),
            summands: vec![
                s(-1, &[(1, 2), (3, 2)], (6, -2), &[2, 2, 4, 8]),
                s(1, &[(3, 2), (7, 2)], (0, 0), &[2, 4, 6, 8]),
                s(1, &[(1, 4)], (8, -2), &[2, 2, 4, 4]),
                s(-1, &[(1, 2), (3, 2)], (6, 0), &[2, 2, 4, 6]),
            ],
        },
        Example {
            name: "sp1",
            group: GroupSpec::sp(1),
            topclass: TopClass::Trivial,
            summands: sp1_like(),
        },
        Example {
            name: "sp2",
            group: GroupSpec::sp(2),
            topclass: TopClass::Trivial,
            summands: vec![
                s(-1, &[(1, 2), (3, 2)], (6, 0), &[2, 2, 4, 6]),
                s(1, &[(1, 4)], (8, 0), &[2, 2, 4, 4]),
                s(1, &[(3, 2), (7, 2)], (0, 0), &[2, 4, 6, 8]),
                s(-1, &[(1, 2), (3, 2)], (6, 2), &[2, 2, 4, 8]),
            ],
        },
        Example {
            name: "sp3",
            group: GroupSpec::sp(3),
            topclass: TopClass::Trivial,
            summands: vec![
                s(-1, &[(1, 2), (3, 2), (5, 2)], (12, -4), &[2, 2, 4, 4, 6, 8]),
                s(1, &[(1, 4), (3, 2)], (16, -4), &[2, 2, 2, 4, 6, 6]),
                s(1, &[(1, 4), (3, 2)], (16, -6), &[2, 2, 2, 4, 4, 6]),
                s(-1, &[(1, 6)], (18, -6), &[2, 2, 2, 4, 4, 4]),
                s(1, &[(3, 2), (7, 2), (11, 2)], (0, 0), &[2, 4, 6, 8, 10, 12]),
                s(-1, &[(1, 2), (3, 2), (7, 2)], (10, 2), &[2, 2, 4, 6, 8, 12]),
                s(-1, &[(1, 2), (3, 4)], (14, -4), &[2, 2, 2, 4, 4, 10]),
                s(1, &[(1, 4), (3, 2)], (16, -4), &[2, 2, 2, 4, 4, 8]),
            ],
        },
        Example {
            name: "so4_plus",
            group: GroupSpec::so_even(2),
            topclass: TopClass::W2(0),
            summands: vec![
                s(1, &[(1, 4)], (4, 4), &[2, 2, 4, 4]),
                s(-2, &[(1, 2), (3, 2)], (2, 2), &[2, 2, 4, 4]),
                s(1, &[(3, 4)], (0, 0), &[2, 2, 4, 4]),
            ],
        },
        Example {
            name: "so4_minus",
            group: GroupSpec::so_even(2),
            topclass: TopClass::W2(1),
            summands: so4_minus_first_line(),
        },
        Example {
            name: "so6_plus",
            group: GroupSpec::so_even(3),
            topclass: TopClass::W2(0),
            summands: vec![
                s(1, &[(1, 4), (3, 2)], (10, 2), &[2, 2, 2, 4, 6, 6]),
                s(-1, &[(1, 6)], (12, 0), &[2, 2, 2, 4, 4, 4]),
                s(-2, &[(1, 2), (3, 2), (5, 2)], (6, 2), &[2, 2, 4, 4, 6, 8]),
                s(2, &[(1, 4), (3, 2)], (10, 0), &[2, 2, 2, 4, 4, 6]),
                s(1, &[(3, 2), (5, 2), (7, 2)], (0, 0), &[2, 4, 4, 6, 6, 8]),
                s(-1, &[(1, 2), (3, 4)], (8, 0), &[2, 2, 2, 4, 4, 8]),
            ],
        },
        Example {
            name: "so6_minus",
            group: GroupSpec::so_even(3),
            topclass: TopClass::W2(1),
            summands: vec![
                s(1, &[(1, 4), (3, 2)], (10, -4), &[2, 2, 2, 4, 6, 6]),
                s(-1, &[(1, 6)], (12, -4), &[2, 2, 2, 4, 4, 4]),
                s(-2, &[(1, 2), (3, 2), (5, 2)], (6, -2), &[2, 2, 4, 4, 6, 8]),
                s(2, &[(1, 4), (3, 2)], (10, -2), &[2, 2, 2, 4, 4, 6]),
                s(1, &[(3, 2), (5, 2), (7, 2)], (0, 0), &[2, 4, 4, 6, 6, 8]),
                s(-1, &[(1, 2), (3, 4)], (8, 0), &[2, 2, 2, 4, 4, 8]),
            ],
        },
    ]
}

/// Genus values at which the examples are compared.
pub const EXAMPLE_GENERA: [u32; 3] = [2, 3, 5];

//! Root data of the classical groups in the coordinates used throughout the
//! crate: covectors are written in the basis `θ_1, …, θ_n` of the dual of the
//! maximal torus and vectors in the dual basis `e_1, …, e_n`.
//!
//! | group        | type      | simple roots                                  |
//! |--------------|-----------|-----------------------------------------------|
//! | `U(n)`       | `A_{n-1}` | `θ_i - θ_{i+1}`                               |
//! | `SO(2n+1)`   | `B_n`     | `θ_i - θ_{i+1}`, `θ_n`                        |
//! | `Sp(n)`      | `C_n`     | `θ_i - θ_{i+1}`, `2θ_n`                       |
//! | `SO(2n)`     | `D_n`     | `θ_i - θ_{i+1}`, `θ_{n-1} + θ_n`              |

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Result, YmError};
use crate::exactalg::BigRat;

/// Rational covector or vector of length `n`.
pub type RatVec = Vec<BigRat>;

/// Classical group family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    U,
    SU,
    SOodd,
    SOeven,
    Sp,
    SpinOdd,
    SpinEven,
}

/// Dynkin type of the root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootType {
    A,
    B,
    C,
    D,
}

/// A classical compact group together with its rank parameter `n`:
/// `U(n)`, `SU(n)`, `SO(2n+1)`, `SO(2n)`, `Sp(n)`, `Spin(2n+1)`, `Spin(2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
}

impl GroupSpec {
    /// Validates the rank: `n >= 1` in general and `n >= 2` for the even
    /// orthogonal and even spin families.
    pub fn new(family: Family, n: usize) -> Result<GroupSpec> {
        let min = match family {
            Family::SOeven | Family::SpinEven => 2,
            _ => 1,
        };
        if n < min {
            return Err(YmError::UnsupportedRank {
                family: format!("{family:?}"),
                n,
            });
        }
        Ok(GroupSpec { family, n })
    }

    pub fn u(n: usize) -> GroupSpec {
        GroupSpec::new(Family::U, n).expect("valid rank")
    }

    pub fn su(n: usize) -> GroupSpec {
        GroupSpec::new(Family::SU, n).expect("valid rank")
    }

    pub fn so_odd(n: usize) -> GroupSpec {
        GroupSpec::new(Family::SOodd, n).expect("valid rank")
    }

    pub fn so_even(n: usize) -> GroupSpec {
        GroupSpec::new(Family::SOeven, n).expect("valid rank")
    }

    pub fn sp(n: usize) -> GroupSpec {
        GroupSpec::new(Family::Sp, n).expect("valid rank")
    }

    pub fn root_type(&self) -> RootType {
        match self.family {
            Family::U | Family::SU => RootType::A,
            Family::SOodd | Family::SpinOdd => RootType::B,
            Family::Sp => RootType::C,
            Family::SOeven | Family::SpinEven => RootType::D,
        }
    }

    /// Spin groups share root data and series with the orthogonal group of
    /// the same type; this maps them to that group.
    pub fn orthogonal_alias(&self) -> GroupSpec {
        let family = match self.family {
            Family::SpinOdd => Family::SOodd,
            Family::SpinEven => Family::SOeven,
            f => f,
        };
        GroupSpec { family, n: self.n }
    }

    /// Number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        match self.root_type() {
            RootType::A => self.n - 1,
            _ => self.n,
        }
    }

    /// Conventional name such as `SO(5)` or `Sp(2)`.
    pub fn name(&self) -> String {
        let n = self.n;
        match self.family {
            Family::U => format!("U({n})"),
            Family::SU => format!("SU({n})"),
            Family::SOodd => format!("SO({})", 2 * n + 1),
            Family::SOeven => format!("SO({})", 2 * n),
            Family::Sp => format!("Sp({n})"),
            Family::SpinOdd => format!("Spin({})", 2 * n + 1),
            Family::SpinEven => format!("Spin({})", 2 * n),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Topological type of a principal bundle over a closed orientable surface,
/// an element of `π_1(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TopClass {
    /// Degree `k` of a `U(n)` bundle.
    Degree(i64),
    /// Second Stiefel-Whitney class of an `SO(m)` bundle.
    W2(u8),
    /// The only class for simply connected groups.
    Trivial,
}

impl TopClass {
    /// The default class for `g`: degree 0, `w₂ = 0`, or trivial.
    pub fn default_for(g: &GroupSpec) -> TopClass {
        match g.family {
            Family::U => TopClass::Degree(0),
            Family::SOodd | Family::SOeven => TopClass::W2(0),
            _ => TopClass::Trivial,
        }
    }

    /// Checks that the class belongs to `π_1(g)` and reduces `w₂` mod 2.
    pub fn validate(self, g: &GroupSpec) -> Result<TopClass> {
        let ok = match (g.family, self) {
            (Family::U, TopClass::Degree(_)) => Some(self),
            (Family::SOodd | Family::SOeven, TopClass::W2(w)) => Some(TopClass::W2(w % 2)),
            (Family::SU | Family::Sp | Family::SpinOdd | Family::SpinEven, TopClass::Trivial) => {
                Some(self)
            }
            (Family::SU | Family::Sp | Family::SpinOdd | Family::SpinEven, TopClass::Degree(0)) => {
                Some(TopClass::Trivial)
            }
            (Family::SU | Family::Sp | Family::SpinOdd | Family::SpinEven, TopClass::W2(0)) => {
                Some(TopClass::Trivial)
            }
            _ => None,
        };
        ok.ok_or_else(|| YmError::TopClassMismatch {
            group: g.name(),
            class: self.to_string(),
        })
    }
}

impl fmt::Display for TopClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopClass::Degree(k) => write!(f, "k={k}"),
            TopClass::W2(w) => write!(f, "w2={w}"),
            TopClass::Trivial => f.write_str("trivial"),
        }
    }
}

/// Root data: simple roots, positive roots, simple coroots and fundamental
/// weights. Roots and coroots are integral; weights are rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub group: GroupSpec,
    /// Coordinate dimension (`n` for every family).
    pub dim: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    pub fundamental_weights: Vec<RatVec>,
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn diff(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] += 1;
    v[j] -= 1;
    v
}

fn sum2(n: usize, i: usize, j: usize, ci: i64, cj: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] += ci;
    v[j] += cj;
    v
}

fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the root system of `g` in the `θ`/`e` coordinates.
pub fn build_root_system(g: &GroupSpec) -> Result<RootSystem> {
    let g = GroupSpec::new(g.family, g.n)?;
    let n = g.n;
    let ty = g.root_type();
    let mut simple_roots = Vec::new();
    let mut simple_coroots = Vec::new();
    for i in 0..n - 1 {
        simple_roots.push(diff(n, i, i + 1));
        simple_coroots.push(diff(n, i, i + 1));
    }
    match ty {
        RootType::A => {}
        RootType::B => {
            simple_roots.push(unit(n, n - 1));
            simple_coroots.push(sum2(n, n - 1, n - 1, 1, 1));
        }
        RootType::C => {
            simple_roots.push(sum2(n, n - 1, n - 1, 1, 1));
            simple_coroots.push(unit(n, n - 1));
        }
        RootType::D => {
            simple_roots.push(sum2(n, n - 2, n - 1, 1, 1));
            simple_coroots.push(sum2(n, n - 2, n - 1, 1, 1));
        }
    }

    let mut positive_roots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            positive_roots.push(diff(n, i, j));
        }
    }
    if ty != RootType::A {
        for i in 0..n {
            for j in i + 1..n {
                positive_roots.push(sum2(n, i, j, 1, 1));
            }
        }
    }
    match ty {
        RootType::B => (0..n).for_each(|i| positive_roots.push(unit(n, i))),
        RootType::C => (0..n).for_each(|i| positive_roots.push(sum2(n, i, i, 1, 1))),
        _ => {}
    }

    let mut fundamental_weights = Vec::new();
    let prefix = |i: usize| -> RatVec {
        (0..n)
            .map(|m| {
                if m <= i {
                    BigRat::one()
                } else {
                    BigRat::zero()
                }
            })
            .collect()
    };
    match ty {
        RootType::A => {
            for i in 0..n - 1 {
                let shift = rat((i + 1) as i64, n as i64);
                fundamental_weights.push(prefix(i).into_iter().map(|x| x - &shift).collect());
            }
        }
        RootType::B => {
            for i in 0..n - 1 {
                fundamental_weights.push(prefix(i));
            }
            fundamental_weights.push(vec![rat(1, 2); n]);
        }
        RootType::C => {
            for i in 0..n {
                fundamental_weights.push(prefix(i));
            }
        }
        RootType::D => {
            for i in 0..n - 2 {
                fundamental_weights.push(prefix(i));
            }
            let mut minus = vec![rat(1, 2); n];
            minus[n - 1] = rat(-1, 2);
            fundamental_weights.push(minus);
            fundamental_weights.push(vec![rat(1, 2); n]);
        }
    }

    Ok(RootSystem {
        group: g,
        dim: n,
        simple_roots,
        positive_roots,
        simple_coroots,
        fundamental_weights,
    })
}

/// Converts an integer covector or vector to rationals.
pub fn to_rat(v: &[i64]) -> RatVec {
    v.iter()
        .map(|&x| BigRat::from_integer(BigInt::from(x)))
        .collect()
}

/// Exact pairing `⟨covector, vector⟩ = Σ_i c_i v_i`.
pub fn pairing(covector: &[BigRat], vector: &[BigRat]) -> Result<BigRat> {
    if covector.len() != vector.len() {
        return Err(YmError::DimensionMismatch(covector.len(), vector.len()));
    }
    Ok(covector
        .iter()
        .zip(vector)
        .fold(BigRat::zero(), |acc, (a, b)| acc + a * b))
}

/// Integer pairing of a root with a coroot.
pub fn pairing_int(covector: &[i64], vector: &[i64]) -> i64 {
    assert_eq!(covector.len(), vector.len());
    covector.iter().zip(vector).map(|(a, b)| a * b).sum()
}

/// Reduces `x` into `[0, 1)`.
pub fn mod_one(x: &BigRat) -> BigRat {
    x - x.floor()
}

impl RootSystem {
    /// Coefficients of `beta` in the basis of simple roots (for type A the
    /// input must be orthogonal to `e_1 + ⋯ + e_n`).
    pub fn simple_root_coords(&self, beta: &[i64]) -> Vec<BigRat> {
        let n = self.dim;
        let mut partial = Vec::with_capacity(n);
        let mut s = 0i64;
        for &b in beta {
            s += b;
            partial.push(s);
        }
        let int = |x: i64| BigRat::from_integer(BigInt::from(x));
        match self.group.root_type() {
            RootType::A => partial[..n - 1].iter().map(|&x| int(x)).collect(),
            RootType::B => partial.iter().map(|&x| int(x)).collect(),
            RootType::C => {
                let mut c: Vec<BigRat> = partial[..n - 1].iter().map(|&x| int(x)).collect();
                c.push(rat(partial[n - 1], 2));
                c
            }
            RootType::D => {
                let mut c: Vec<BigRat> = partial[..n - 2].iter().map(|&x| int(x)).collect();
                c.push(rat(partial[n - 2] - beta[n - 1], 2));
                c.push(rat(partial[n - 1], 2));
                c
            }
        }
    }

    /// JSON export; rationals are written as strings such as `"1/2"`.
    pub fn to_json(&self) -> Value {
        let ints = |vs: &[Vec<i64>]| -> Value {
            Value::Array(
                vs.iter()
                    .map(|v| Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect()))
                    .collect(),
            )
        };
        let rats = Value::Array(
            self.fundamental_weights
                .iter()
                .map(|v| Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect()))
                .collect(),
        );
        json!({
            "group": self.group.name(),
            "dim": self.dim,
            "simple_roots": ints(&self.simple_roots),
            "positive_roots": ints(&self.positive_roots),
            "simple_coroots": ints(&self.simple_coroots),
            "fundamental_weights": rats,
        })
    }
}

/// The class `ϖ_{α_i}(c) ∈ ℚ/ℤ`, returned as its representative in `[0, 1)`.
///
/// The class `c` is represented by `k e_1` for `U(n)` and by `w₂ e_n` for the
/// orthogonal groups. Simply connected groups give 0. `SU(n)` is served
/// through `U(n)` and is rejected here.
pub fn weight_on_pi1(g: &GroupSpec, i: usize, c: TopClass) -> Result<BigRat> {
    let rs = build_root_system(g)?;
    if i == 0 || i > rs.simple_roots.len() {
        return Err(YmError::InvalidArgument(format!(
            "simple root index {i} out of range for {g}"
        )));
    }
    let weight = &rs.fundamental_weights[i - 1];
    let c = c.validate(g)?;
    let value = match (g.family, c) {
        (Family::SU, _) => return Err(YmError::UnsupportedFamily(g.name())),
        (Family::U, TopClass::Degree(k)) => &weight[0] * BigRat::from_integer(BigInt::from(k)),
        (Family::SOodd | Family::SOeven, TopClass::W2(w)) => {
            &weight[g.n - 1] * BigRat::from_integer(BigInt::from(w))
        }
        _ => BigRat::zero(),
    };
    Ok(mod_one(&value))
}

/// `true` when `x` is an integer.
pub fn is_integer(x: &BigRat) -> bool {
    x.denom().is_one()
}

/// `x` as an `i64` when it is an integer.
pub fn rat_to_i64(x: &BigRat) -> Option<i64> {
    use num_traits::ToPrimitive;
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn all_groups(max: usize) -> Vec<GroupSpec> {
        let mut out = Vec::new();
        for n in 1..=max {
            out.push(GroupSpec::u(n));
            out.push(GroupSpec::so_odd(n));
            out.push(GroupSpec::sp(n));
            if n >= 2 {
                out.push(GroupSpec::so_even(n));
            }
        }
        out
    }

    /// Positive roots by closing the simple roots under simple reflections.
    fn weyl_closure(rs: &RootSystem) -> BTreeSet<Vec<i64>> {
        let mut seen: BTreeSet<Vec<i64>> = rs.simple_roots.iter().cloned().collect();
        let mut frontier: Vec<Vec<i64>> = seen.iter().cloned().collect();
        while let Some(beta) = frontier.pop() {
            for (a, av) in rs.simple_roots.iter().zip(&rs.simple_coroots) {
                let c = pairing_int(&beta, av);
                let img: Vec<i64> = beta.iter().zip(a).map(|(b, x)| b - c * x).collect();
                if seen.insert(img.clone()) {
                    frontier.push(img);
                }
            }
        }
        seen.into_iter()
            .filter(|r| {
                rs.simple_root_coords(r)
                    .iter()
                    .all(|c| *c >= BigRat::zero())
            })
            .collect()
    }

    #[test]
    fn u2_data() {
        let rs = build_root_system(&GroupSpec::u(2)).unwrap();
        assert_eq!(rs.simple_roots, vec![vec![1, -1]]);
        assert_eq!(rs.simple_coroots, vec![vec![1, -1]]);
        assert_eq!(rs.positive_roots, vec![vec![1, -1]]);
    }

    #[test]
    fn sp1_data() {
        let rs = build_root_system(&GroupSpec::sp(1)).unwrap();
        assert_eq!(rs.simple_roots, vec![vec![2]]);
        assert_eq!(rs.simple_coroots, vec![vec![1]]);
        assert_eq!(rs.positive_roots, vec![vec![2]]);
    }

    #[test]
    fn so5_data() {
        let rs = build_root_system(&GroupSpec::so_odd(2)).unwrap();
        assert_eq!(rs.simple_roots, vec![vec![1, -1], vec![0, 1]]);
        let got: BTreeSet<_> = rs.positive_roots.iter().cloned().collect();
        let want: BTreeSet<_> = [vec![1, -1], vec![0, 1], vec![1, 0], vec![1, 1]]
            .into_iter()
            .collect();
        assert_eq!(got, want);
        assert_eq!(weyl_closure(&rs), want);
    }

    #[test]
    fn positive_roots_match_weyl_closure() {
        for g in all_groups(6) {
            let rs = build_root_system(&g).unwrap();
            let got: BTreeSet<_> = rs.positive_roots.iter().cloned().collect();
            assert_eq!(got.len(), rs.positive_roots.len(), "{g}: duplicates");
            assert_eq!(got, weyl_closure(&rs), "{g}");
        }
    }

    #[test]
    fn positive_root_counts() {
        for g in all_groups(6) {
            let n = g.n;
            let want = match g.root_type() {
                RootType::A => n * (n - 1) / 2,
                RootType::B | RootType::C => n * n,
                RootType::D => n * (n - 1),
            };
            assert_eq!(
                build_root_system(&g).unwrap().positive_roots.len(),
                want,
                "{g}"
            );
        }
    }

    #[test]
    fn weights_dual_to_coroots() {
        for g in all_groups(6) {
            let rs = build_root_system(&g).unwrap();
            for (i, w) in rs.fundamental_weights.iter().enumerate() {
                for (j, c) in rs.simple_coroots.iter().enumerate() {
                    let p = pairing(w, &to_rat(c)).unwrap();
                    let want = if i == j {
                        BigRat::one()
                    } else {
                        BigRat::zero()
                    };
                    assert_eq!(p, want, "{g} weight {i} coroot {j}");
                }
            }
        }
    }

    #[test]
    fn simple_root_coords_reconstruct() {
        for g in all_groups(6) {
            let rs = build_root_system(&g).unwrap();
            for beta in &rs.positive_roots {
                let c = rs.simple_root_coords(beta);
                let mut acc = vec![BigRat::zero(); rs.dim];
                for (cj, a) in c.iter().zip(&rs.simple_roots) {
                    for (slot, x) in acc.iter_mut().zip(a) {
                        *slot += cj * BigRat::from_integer(BigInt::from(*x));
                    }
                }
                assert_eq!(acc, to_rat(beta), "{g} {beta:?}");
                assert!(c.iter().all(|x| is_integer(x) && *x >= BigRat::zero()));
            }
        }
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(
            pairing(&to_rat(&[1, -1]), &to_rat(&[1, -1])).unwrap(),
            rat(2, 1)
        );
        assert_eq!(
            pairing(&[rat(1, 2), rat(1, 2)], &to_rat(&[0, 1])).unwrap(),
            rat(1, 2)
        );
        let rs = build_root_system(&GroupSpec::u(3)).unwrap();
        assert_eq!(
            pairing(&rs.fundamental_weights[0], &to_rat(&rs.simple_coroots[1])).unwrap(),
            BigRat::zero()
        );
        assert_eq!(
            pairing(&to_rat(&[1]), &to_rat(&[1, 2])),
            Err(YmError::DimensionMismatch(1, 2))
        );
    }

    #[test]
    fn weight_on_pi1_examples() {
        let so5 = GroupSpec::so_odd(2);
        assert_eq!(weight_on_pi1(&so5, 2, TopClass::W2(1)).unwrap(), rat(1, 2));
        assert_eq!(
            weight_on_pi1(&so5, 1, TopClass::W2(1)).unwrap(),
            BigRat::zero()
        );
        // ϖ_1 of U(3) is θ_1 - (θ_1+θ_2+θ_3)/3; on 2e_1 it takes the value 4/3.
        let u3 = GroupSpec::u(3);
        assert_eq!(
            weight_on_pi1(&u3, 1, TopClass::Degree(2)).unwrap(),
            rat(1, 3)
        );
        assert_eq!(
            weight_on_pi1(&u3, 1, TopClass::Degree(3)).unwrap(),
            BigRat::zero()
        );
        let so6 = GroupSpec::so_even(3);
        assert_eq!(weight_on_pi1(&so6, 2, TopClass::W2(1)).unwrap(), rat(1, 2));
        assert_eq!(weight_on_pi1(&so6, 3, TopClass::W2(1)).unwrap(), rat(1, 2));
        assert_eq!(
            weight_on_pi1(&so6, 1, TopClass::W2(1)).unwrap(),
            BigRat::zero()
        );
        assert_eq!(
            weight_on_pi1(&GroupSpec::sp(2), 2, TopClass::Trivial).unwrap(),
            BigRat::zero()
        );
        assert!(matches!(
            weight_on_pi1(&GroupSpec::su(3), 1, TopClass::Trivial),
            Err(YmError::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn weight_on_pi1_additive() {
        for n in 2..=5 {
            let g = GroupSpec::u(n);
            for i in 1..n {
                for a in -4..=4 {
                    for b in -4..=4 {
                        let lhs = weight_on_pi1(&g, i, TopClass::Degree(a + b)).unwrap();
                        let rhs = weight_on_pi1(&g, i, TopClass::Degree(a)).unwrap()
                            + weight_on_pi1(&g, i, TopClass::Degree(b)).unwrap();
                        assert_eq!(lhs, mod_one(&rhs));
                    }
                }
            }
        }
    }

    #[test]
    fn rank_validation() {
        assert!(GroupSpec::new(Family::SOeven, 1).is_err());
        assert!(GroupSpec::new(Family::U, 0).is_err());
        assert!(build_root_system(&GroupSpec {
            family: Family::SOeven,
            n: 1
        })
        .is_err());
    }

    #[test]
    fn json_export_uses_strings() {
        let rs = build_root_system(&GroupSpec::so_odd(1)).unwrap();
        let v = rs.to_json();
        assert_eq!(v["fundamental_weights"][0][0], "1/2");
        assert_eq!(v["simple_coroots"][0][0], "2");
    }
}

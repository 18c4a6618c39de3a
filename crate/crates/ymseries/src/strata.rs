//! Atiyah-Bott points of the Yang-Mills functional over a closed orientable
//! surface, their codimensions and stratum series, and the recursion
//!
//! ```text
//! P_t(B𝒢(P)) = Σ_μ t^{2 d_μ} P_t^{G}(stratum μ),
//! d_μ = Σ_{α ∈ R⁺, α(μ) > 0} (α(μ) + ℓ - 1).
//! ```
//!
//! A point is stored as a composition `(n_1, …, n_r)` of the rank with
//! integer labels `(k_1, …, k_r)`; block `j` carries slope `k_j / n_j` on
//! `n_j` consecutive coordinates of the chamber vector.
//!
//! Point sets per family:
//!
//! * `U(n)`, degree `k`: `k_1/n_1 > ⋯ > k_r/n_r` and `Σ k_j = k`.
//! * `Sp(n)` and `SO(2n+1)`: `k_1/n_1 > ⋯ > k_r/n_r ≥ 0`, where `k_r = 0`
//!   marks a zero block carrying a flat `Sp(n_r)` or `SO(2n_r+1)` factor.
//! * `SO(2n)`: as above with a zero block of size `n_r ≥ 2`, or with a last
//!   block of size 1 and any sign (`k_{r-1}/n_{r-1} > |k_r|`), or with a
//!   last block of size `n_r ≥ 2` whose final coordinate is negated.
//!
//! For the orthogonal groups a point without a zero block lies over the
//! bundle with `w₂ ≡ Σ k_j`; a point with a zero block lies over both
//! bundles, and over the bundle `w₂` its flat factor has
//! `w₂' ≡ w₂ + Σ_{j<r} k_j`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::closedforms::{so_even_flat, so_odd_flat, sp_flat, zagier_un};
use crate::error::{Result, YmError};
use crate::exactalg::{series_expand, BigRat, CoeffVector, RatFun};
use crate::gaugeseries::{betti_degrees, bg_orientable};
use crate::levidata::compositions;
use crate::rootsys::{build_root_system, Family, GroupSpec, TopClass};

/// How the last block of a point is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TailKind {
    /// Every block is unitary.
    None,
    /// The last block has label 0 and carries a flat factor of the same family.
    ZeroBlock,
    /// `SO(2n)` only: the last coordinate of the final block is negated.
    MinusLast,
}

/// An Atiyah-Bott point in the closed fundamental chamber.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AtiyahBottPoint {
    pub group: GroupSpec,
    pub composition: Vec<usize>,
    pub labels: Vec<i64>,
    pub tail_kind: TailKind,
}

/// Which flat factor of a zero-block point is meant, for orthogonal groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentTag {
    /// The point has a single component.
    Single,
    /// The flat factor has `w₂' = 0`.
    Plus,
    /// The flat factor has `w₂' = 1`.
    Minus,
}

/// A factor of a stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StratumFactor {
    /// Central Yang-Mills connections on a `U(n)` bundle of degree `k`.
    CentralU {
        n: usize,
        k: i64,
    },
    FlatSp {
        n: usize,
    },
    #[serde(rename = "flat_so_odd")]
    FlatSOodd {
        n: usize,
        w2: u8,
    },
    #[serde(rename = "flat_so_even")]
    FlatSOeven {
        n: usize,
        w2: u8,
    },
}

impl StratumFactor {
    pub fn series(&self, ell: u32) -> Result<RatFun> {
        match *self {
            StratumFactor::CentralU { n, k } => zagier_un(n, k, ell),
            StratumFactor::FlatSp { n } => sp_flat(n, ell),
            StratumFactor::FlatSOodd { n, w2 } => so_odd_flat(n, ell, w2),
            StratumFactor::FlatSOeven { n, w2 } => so_even_flat(n, ell, w2),
        }
    }

    /// A key under which equal series coincide.
    fn cache_key(&self) -> StratumFactor {
        match *self {
            StratumFactor::CentralU { n, k } => StratumFactor::CentralU {
                n,
                k: k.rem_euclid(n as i64),
            },
            other => other,
        }
    }
}

/// The product decomposition of a stratum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumDecomposition {
    pub factors: Vec<StratumFactor>,
    pub component_tag: ComponentTag,
}

fn slope_gt(k1: i64, n1: usize, k2: i64, n2: usize) -> bool {
    k1 * n2 as i64 > k2 * n1 as i64
}

fn supported(g: &GroupSpec) -> Result<()> {
    match g.family {
        Family::U | Family::Sp | Family::SOodd | Family::SOeven => Ok(()),
        _ => Err(YmError::UnsupportedFamily(g.name())),
    }
}

impl AtiyahBottPoint {
    /// Builds a point and checks the chamber conditions of its family.
    pub fn new(
        group: GroupSpec,
        composition: Vec<usize>,
        labels: Vec<i64>,
        tail_kind: TailKind,
    ) -> Result<AtiyahBottPoint> {
        supported(&group)?;
        let p = AtiyahBottPoint {
            group,
            composition,
            labels,
            tail_kind,
        };
        p.check()
            .map_err(|why| YmError::InvalidPoint(format!("{p}: {why}")))?;
        Ok(p)
    }

    fn check(&self) -> std::result::Result<(), &'static str> {
        let comp = &self.composition;
        let k = &self.labels;
        if comp.is_empty() || comp.len() != k.len() {
            return Err("composition and labels must be nonempty of equal length");
        }
        if comp.contains(&0) || comp.iter().sum::<usize>() != self.group.n {
            return Err("not a composition of the rank");
        }
        let r = comp.len();
        for j in 1..r {
            if !slope_gt(k[j - 1], comp[j - 1], k[j], comp[j]) {
                // The last block of SO(2n) may have negative label; compare |k_r|.
                let even_last = self.group.family == Family::SOeven && j == r - 1 && comp[j] == 1;
                if !(even_last && slope_gt(k[j - 1], comp[j - 1], k[j].abs(), 1)) {
                    return Err("slopes must decrease strictly");
                }
            }
        }
        if self.group.family == Family::SOeven
            && r >= 2
            && comp[r - 1] == 1
            && !slope_gt(k[r - 2], comp[r - 2], k[r - 1].abs(), 1)
        {
            return Err("k_{r-1}/n_{r-1} must exceed |k_r|");
        }
        let last = k[r - 1];
        let nr = comp[r - 1];
        match (self.group.family, self.tail_kind) {
            (Family::U, TailKind::None) => Ok(()),
            (Family::U, _) => Err("unitary points have no tail"),
            (Family::Sp | Family::SOodd, TailKind::None) => (last > 0)
                .then_some(())
                .ok_or("labels must be positive without a zero block"),
            (Family::Sp | Family::SOodd, TailKind::ZeroBlock) => {
                (last == 0).then_some(()).ok_or("a zero block has label 0")
            }
            (Family::SOeven, TailKind::None) => {
                if nr == 1 || last > 0 {
                    Ok(())
                } else {
                    Err("a block of size at least 2 needs a positive label")
                }
            }
            (Family::SOeven, TailKind::ZeroBlock) => {
                if nr >= 2 && last == 0 {
                    Ok(())
                } else {
                    Err("a zero block of SO(2n) has size at least 2 and label 0")
                }
            }
            (Family::SOeven, TailKind::MinusLast) => {
                if nr >= 2 && last > 0 {
                    Ok(())
                } else {
                    Err("a negated last block has size at least 2 and positive label")
                }
            }
            (_, TailKind::MinusLast) => Err("only SO(2n) has negated last blocks"),
            _ => Err("unsupported family"),
        }
    }

    /// The chamber vector in the coordinates of the root system.
    pub fn vector(&self) -> Vec<BigRat> {
        let mut v = Vec::with_capacity(self.group.n);
        for (&m, &k) in self.composition.iter().zip(&self.labels) {
            let s = BigRat::new(BigInt::from(k), BigInt::from(m as i64));
            v.extend(std::iter::repeat_n(s, m));
        }
        if self.tail_kind == TailKind::MinusLast {
            let last = v.len() - 1;
            v[last] = -v[last].clone();
        }
        v
    }

    /// `Σ_{j<r} k_j` for a zero-block point and `Σ k_j` otherwise.
    fn label_sum(&self) -> i64 {
        self.labels.iter().sum()
    }

    /// Whether the stratum lies over the bundle `c`.
    pub fn lies_over(&self, c: TopClass) -> Result<bool> {
        let c = c.validate(&self.group)?;
        Ok(match (self.group.family, c) {
            (Family::U, TopClass::Degree(k)) => self.label_sum() == k,
            (Family::SOodd | Family::SOeven, TopClass::W2(w)) => {
                self.tail_kind == TailKind::ZeroBlock || self.label_sum().rem_euclid(2) as u8 == w
            }
            _ => true,
        })
    }

    /// The component of a zero-block point lying over the bundle `w₂`.
    pub fn component_for_bundle(&self, w2: u8) -> ComponentTag {
        let orthogonal = matches!(self.group.family, Family::SOodd | Family::SOeven);
        if !orthogonal || self.tail_kind != TailKind::ZeroBlock {
            return ComponentTag::Single;
        }
        if (w2 as i64 + self.label_sum()).rem_euclid(2) == 0 {
            ComponentTag::Plus
        } else {
            ComponentTag::Minus
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "composition": self.composition,
            "labels": self.labels,
            "tail_kind": self.tail_kind,
        })
    }
}

impl std::fmt::Display for AtiyahBottPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c: Vec<String> = self.composition.iter().map(|x| x.to_string()).collect();
        let k: Vec<String> = self.labels.iter().map(|x| x.to_string()).collect();
        write!(f, "({});({})", c.join(","), k.join(","))?;
        match self.tail_kind {
            TailKind::None => Ok(()),
            TailKind::ZeroBlock => f.write_str("[zero]"),
            TailKind::MinusLast => f.write_str("[minus]"),
        }
    }
}

/// `d_μ = Σ_{α ∈ R⁺, α(μ) > 0} (α(μ) + ℓ - 1)`.
pub fn codim(g: &GroupSpec, mu: &AtiyahBottPoint, ell: u32) -> Result<u64> {
    if mu.group != *g {
        return Err(YmError::InvalidPoint(format!("{mu} is not a point of {g}")));
    }
    let rs = build_root_system(g)?;
    let v = mu.vector();
    let shift = BigRat::from_integer(BigInt::from(ell as i64 - 1));
    let mut d = BigRat::zero();
    for root in &rs.positive_roots {
        let mut a = BigRat::zero();
        for (c, x) in root.iter().zip(&v) {
            if *c != 0 {
                a += x * BigRat::from_integer(BigInt::from(*c));
            }
        }
        if a > BigRat::zero() {
            d += a + &shift;
        }
    }
    if !d.is_integer() || d < BigRat::zero() {
        return Err(YmError::NonIntegerCodimension(format!("{mu}: {d}")));
    }
    d.to_integer()
        .to_u64()
        .ok_or_else(|| YmError::NonIntegerCodimension(format!("{mu}: {d}")))
}

/// Candidate labels for block `j` with the slope bound `bound` per unit rank.
fn label_candidates(
    family: Family,
    comp: &[usize],
    j: usize,
    tail: TailKind,
    bound: i64,
) -> Vec<i64> {
    let r = comp.len();
    let m = comp[j] as i64;
    let last = j == r - 1;
    match family {
        Family::U => (-m * bound..=m * bound).collect(),
        Family::SOeven if last && tail == TailKind::None && comp[j] == 1 => {
            (-bound..=bound).collect()
        }
        _ if last && tail == TailKind::ZeroBlock => vec![0],
        _ => (1..=m * bound).collect(),
    }
}

/// All Atiyah-Bott points of type `c` with `d_μ ≤ bound`, sorted by
/// codimension and then by point.
pub fn enumerate_ab_points(
    g: &GroupSpec,
    c: TopClass,
    ell: u32,
    bound: u64,
) -> Result<Vec<(AtiyahBottPoint, u64)>> {
    supported(g)?;
    let c = c.validate(g)?;
    if ell == 0 {
        return Err(YmError::InvalidArgument("enumeration needs ℓ >= 1".into()));
    }
    // Every slope lies within `bound` of the average slope, which is 0 for
    // the orthogonal and symplectic groups and k/n for U(n).
    let degree = match c {
        TopClass::Degree(k) => k.abs(),
        _ => 0,
    };
    let slope_bound = bound as i64 + degree;
    let tails: &[TailKind] = match g.family {
        Family::U => &[TailKind::None],
        Family::SOeven => &[TailKind::None, TailKind::ZeroBlock, TailKind::MinusLast],
        _ => &[TailKind::None, TailKind::ZeroBlock],
    };
    let mut out = Vec::new();
    for comp in compositions(g.n) {
        for &tail in tails {
            let mut labels = Vec::with_capacity(comp.len());
            search(
                g,
                c,
                ell,
                bound,
                &comp,
                tail,
                slope_bound,
                &mut labels,
                &mut out,
            )?;
        }
    }
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &GroupSpec,
    c: TopClass,
    ell: u32,
    bound: u64,
    comp: &[usize],
    tail: TailKind,
    slope_bound: i64,
    labels: &mut Vec<i64>,
    out: &mut Vec<(AtiyahBottPoint, u64)>,
) -> Result<()> {
    let j = labels.len();
    if j == comp.len() {
        if let Ok(p) = AtiyahBottPoint::new(*g, comp.to_vec(), labels.clone(), tail) {
            if p.lies_over(c)? {
                let d = codim(g, &p, ell)?;
                if d <= bound {
                    out.push((p, d));
                }
            }
        }
        return Ok(());
    }
    let candidates: Vec<i64> = match (g.family, c) {
        (Family::U, TopClass::Degree(k)) if j == comp.len() - 1 => {
            vec![k - labels.iter().sum::<i64>()]
        }
        _ => label_candidates(g.family, comp, j, tail, slope_bound),
    };
    for k in candidates {
        if j > 0 {
            let prev = labels[j - 1];
            let signed_last = g.family == Family::SOeven && j == comp.len() - 1 && comp[j] == 1;
            let probe = if signed_last { k.abs() } else { k };
            if !slope_gt(prev, comp[j - 1], probe, comp[j]) {
                continue;
            }
        }
        labels.push(k);
        search(g, c, ell, bound, comp, tail, slope_bound, labels, out)?;
        labels.pop();
    }
    Ok(())
}

/// The factors of the stratum of `mu`; `tag` selects the flat factor of a
/// zero-block orthogonal point.
pub fn stratum_decomposition(
    mu: &AtiyahBottPoint,
    tag: Option<ComponentTag>,
) -> Result<StratumDecomposition> {
    let family = mu.group.family;
    let r = mu.composition.len();
    let orthogonal = matches!(family, Family::SOodd | Family::SOeven);
    let has_tail = mu.tail_kind == TailKind::ZeroBlock;
    let blocks = if has_tail { r - 1 } else { r };
    let mut factors = Vec::with_capacity(r);
    for j in 0..blocks {
        let k = mu.labels[j];
        let k = if orthogonal { -k } else { k };
        factors.push(StratumFactor::CentralU {
            n: mu.composition[j],
            k,
        });
    }
    let mut component_tag = ComponentTag::Single;
    if has_tail {
        let m = mu.composition[r - 1];
        let flat = match family {
            Family::Sp => StratumFactor::FlatSp { n: m },
            Family::SOodd | Family::SOeven => {
                let t = tag.ok_or(YmError::AmbiguousComponent)?;
                let w2 = match t {
                    ComponentTag::Plus => 0,
                    ComponentTag::Minus => 1,
                    ComponentTag::Single => return Err(YmError::AmbiguousComponent),
                };
                component_tag = t;
                if family == Family::SOodd {
                    StratumFactor::FlatSOodd { n: m, w2 }
                } else {
                    StratumFactor::FlatSOeven { n: m, w2 }
                }
            }
            _ => return Err(YmError::InvalidPoint(mu.to_string())),
        };
        factors.push(flat);
    }
    Ok(StratumDecomposition {
        factors,
        component_tag,
    })
}

/// `P_t^G` of the stratum of `mu`: the product of its factor series.
pub fn stratum_series(mu: &AtiyahBottPoint, tag: Option<ComponentTag>, ell: u32) -> Result<RatFun> {
    let dec = stratum_decomposition(mu, tag)?;
    let mut out = RatFun::one();
    for f in &dec.factors {
        out = out.mul(&f.series(ell)?);
    }
    Ok(out)
}

/// Outcome of [`verify_recursion`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionReport {
    pub group: GroupSpec,
    pub topclass: TopClass,
    pub ell: u32,
    pub degree: usize,
    pub holds: bool,
    pub residual: CoeffVector,
    pub strata: Vec<(AtiyahBottPoint, u64)>,
}

impl RecursionReport {
    pub fn strata_used(&self) -> usize {
        self.strata.len()
    }

    pub fn to_json(&self) -> Value {
        let strata: Vec<Value> = self
            .strata
            .iter()
            .map(|(p, d)| json!({ "mu": p.to_json(), "codim": d }))
            .collect();
        json!({
            "group": self.group.name(),
            "topclass": self.topclass.to_string(),
            "l": self.ell,
            "degree": self.degree,
            "holds": self.holds,
            "strata_used": self.strata_used(),
            "residual": self.residual.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "strata": strata,
        })
    }
}

/// Compares `P_t(B𝒢(P))` with `Σ_μ t^{2d_μ} P_t^G(stratum μ)` to order `degree`.
pub fn verify_recursion(
    g: &GroupSpec,
    c: TopClass,
    ell: u32,
    degree: usize,
) -> Result<RecursionReport> {
    if ell < 2 {
        return Err(YmError::InvalidArgument(
            "the recursion is stated for ℓ >= 2".into(),
        ));
    }
    let c = c.validate(g)?;
    let lhs = series_expand(&bg_orientable(&betti_degrees(g), ell), degree)?;
    let strata = enumerate_ab_points(g, c, ell, degree.div_ceil(2) as u64)?;
    let w2 = match c {
        TopClass::W2(w) => w,
        _ => 0,
    };
    let mut cache: HashMap<StratumFactor, CoeffVector> = HashMap::new();
    let mut rhs = CoeffVector::zeros(degree);
    for (mu, d) in &strata {
        let shift = 2 * *d as usize;
        if shift > degree {
            continue;
        }
        let dec = stratum_decomposition(mu, Some(mu.component_for_bundle(w2)))?;
        let mut series = CoeffVector::zeros(degree - shift);
        series.coeffs[0] = BigInt::from(1);
        for f in &dec.factors {
            let key = f.cache_key();
            if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(key) {
                e.insert(series_expand(&key.series(ell)?, degree)?);
            }
            series = series.mul(&cache[&key]);
        }
        rhs.add_shifted(&series, shift);
    }
    let residual = lhs.sub(&rhs);
    Ok(RecursionReport {
        group: *g,
        topclass: c,
        ell,
        degree,
        holds: residual.is_zero(),
        residual,
        strata,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(g: GroupSpec, comp: &[usize], k: &[i64], tail: TailKind) -> AtiyahBottPoint {
        AtiyahBottPoint::new(g, comp.to_vec(), k.to_vec(), tail).unwrap()
    }

    #[test]
    fn codim_examples() {
        let u2 = GroupSpec::u(2);
        assert_eq!(
            codim(&u2, &pt(u2, &[1, 1], &[1, -1], TailKind::None), 2).unwrap(),
            3
        );
        assert_eq!(
            codim(&u2, &pt(u2, &[2], &[5], TailKind::None), 4).unwrap(),
            0
        );
        let sp1 = GroupSpec::sp(1);
        assert_eq!(
            codim(&sp1, &pt(sp1, &[1], &[1], TailKind::None), 2).unwrap(),
            3
        );
        assert_eq!(
            codim(&sp1, &pt(sp1, &[1], &[0], TailKind::ZeroBlock), 2).unwrap(),
            0
        );
    }

    #[test]
    fn invalid_points_rejected() {
        let u2 = GroupSpec::u(2);
        assert!(AtiyahBottPoint::new(u2, vec![1, 1], vec![0, 0], TailKind::None).is_err());
        let sp2 = GroupSpec::sp(2);
        assert!(AtiyahBottPoint::new(sp2, vec![1, 1], vec![1, 0], TailKind::None).is_err());
        assert!(AtiyahBottPoint::new(sp2, vec![1, 1], vec![1, 1], TailKind::ZeroBlock).is_err());
        let so4 = GroupSpec::so_even(2);
        assert!(AtiyahBottPoint::new(so4, vec![1, 1], vec![2, -1], TailKind::None).is_ok());
        assert!(AtiyahBottPoint::new(so4, vec![1, 1], vec![1, -1], TailKind::None).is_err());
        assert!(AtiyahBottPoint::new(so4, vec![2], vec![0], TailKind::MinusLast).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let got = enumerate_ab_points(&GroupSpec::u(2), TopClass::Degree(0), 2, 4).unwrap();
        let want = vec![
            (pt(GroupSpec::u(2), &[2], &[0], TailKind::None), 0),
            (pt(GroupSpec::u(2), &[1, 1], &[1, -1], TailKind::None), 3),
        ];
        assert_eq!(got, want);

        let sp1 = GroupSpec::sp(1);
        let got = enumerate_ab_points(&sp1, TopClass::Trivial, 2, 6).unwrap();
        let want = vec![
            (pt(sp1, &[1], &[0], TailKind::ZeroBlock), 0),
            (pt(sp1, &[1], &[1], TailKind::None), 3),
            (pt(sp1, &[1], &[2], TailKind::None), 5),
        ];
        assert_eq!(got, want);

        for k in -3..3 {
            let got = enumerate_ab_points(&GroupSpec::u(1), TopClass::Degree(k), 3, 50).unwrap();
            assert_eq!(got.len(), 1);
            assert_eq!(got[0].0.labels, vec![k]);
        }
    }

    #[test]
    fn stratum_examples() {
        let sp2 = GroupSpec::sp(2);
        for ell in 1..4 {
            let s = stratum_series(&pt(sp2, &[1, 1], &[2, 1], TailKind::None), None, ell).unwrap();
            let u1 = zagier_un(1, 0, ell).unwrap();
            assert_eq!(s, u1.mul(&u1));
            let s =
                stratum_series(&pt(sp2, &[1, 1], &[1, 0], TailKind::ZeroBlock), None, ell).unwrap();
            assert_eq!(
                s,
                zagier_un(1, 1, ell).unwrap().mul(&sp_flat(1, ell).unwrap())
            );
        }
        let so5 = GroupSpec::so_odd(2);
        let central = pt(so5, &[2], &[0], TailKind::ZeroBlock);
        assert_eq!(
            stratum_series(&central, Some(ComponentTag::Plus), 2).unwrap(),
            so_odd_flat(2, 2, 0).unwrap()
        );
        assert!(matches!(
            stratum_series(&central, None, 2),
            Err(YmError::AmbiguousComponent)
        ));
    }

    #[test]
    fn small_recursions() {
        for k in -2..3 {
            let rep = verify_recursion(&GroupSpec::u(1), TopClass::Degree(k), 2, 30).unwrap();
            assert!(rep.holds);
            assert_eq!(rep.strata_used(), 1);
        }
        assert!(
            verify_recursion(&GroupSpec::u(2), TopClass::Degree(1), 2, 40)
                .unwrap()
                .holds
        );
        assert!(
            verify_recursion(&GroupSpec::sp(1), TopClass::Trivial, 2, 40)
                .unwrap()
                .holds
        );
        for w in 0..2 {
            assert!(
                verify_recursion(&GroupSpec::so_odd(1), TopClass::W2(w), 2, 40)
                    .unwrap()
                    .holds
            );
        }
    }
}

//! Yang-Mills types over nonorientable surfaces `Σ^ℓ_i`, `i ∈ {1, 2}`.
//!
//! The involution `τ(Y) = w·(-Y)` on the closed fundamental chamber fixes
//! the types that can carry Yang-Mills connections. For each family these
//! types are written as compositions with integer labels:
//!
//! * `Sp(n)`: block `j` has value `2k_j/n_j - 1` with
//!   `k_1/n_1 > ⋯ > k_r/n_r > 1/2`, optionally followed by a zero block.
//! * `SO(2n+1)`: values `2k_j/n_j` with `k_1/n_1 > ⋯ > k_r/n_r ≥ 0`; the
//!   label `k_r = 0` marks a zero block.
//! * `SO(2n)` with `n` odd: positive values `2k_j/n_j` followed by a
//!   mandatory zero block.
//! * `SO(2n)` with `n` even: either a last block of size 1 with
//!   `k_{r-1}/n_{r-1} > |k_r|`, a last block of size at least 2 with
//!   positive label (possibly with its final coordinate negated), or a zero
//!   block of size at least 2.
//!
//! A point without zero block (for the orthogonal groups) or any point (for
//! `Sp(n)`) gives one connected component. An orthogonal zero-block point
//! gives two components, one over each bundle, whose last factor is a
//! twisted `O(m)` variety with determinant `(-1)^{n-n_r}` and component sign
//! `±(-1)^{k_1+⋯+k_{r-1} + i(n-n_r)(n-n_r-1)/2}`, the sign `±` being that of
//! the bundle. A one-component orthogonal point lies over the bundle with
//! `w₂ ≡ k_1+⋯+k_r + i·n(n+1)/2`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Result, YmError};
use crate::exactalg::BigRat;
use crate::levidata::compositions;
use crate::rootsys::{Family, GroupSpec};
use crate::strata::TailKind;

/// Applies `τ` to a chamber vector of `g`.
pub fn chamber_involution(g: &GroupSpec, mu: &[BigRat]) -> Vec<BigRat> {
    match g.family {
        Family::U | Family::SU => mu.iter().rev().map(|x| -x.clone()).collect(),
        Family::SOeven | Family::SpinEven if g.n % 2 == 1 => {
            let mut v = mu.to_vec();
            if let Some(last) = v.last_mut() {
                *last = -last.clone();
            }
            v
        }
        _ => mu.to_vec(),
    }
}

/// A Yang-Mills type over `Σ^ℓ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NonorientablePoint {
    pub group: GroupSpec,
    pub composition: Vec<usize>,
    pub labels: Vec<i64>,
    pub tail_kind: TailKind,
    pub surface_i: u8,
}

fn slope_gt(k1: i64, n1: usize, k2: i64, n2: usize) -> bool {
    k1 * n2 as i64 > k2 * n1 as i64
}

fn supported(g: &GroupSpec) -> Result<()> {
    match g.family {
        Family::Sp | Family::SOodd | Family::SOeven => Ok(()),
        _ => Err(YmError::UnsupportedFamily(g.name())),
    }
}

impl NonorientablePoint {
    /// Builds a point and checks the index-set conditions of its family.
    pub fn new(
        group: GroupSpec,
        composition: Vec<usize>,
        labels: Vec<i64>,
        tail_kind: TailKind,
        surface_i: u8,
    ) -> Result<NonorientablePoint> {
        supported(&group)?;
        let p = NonorientablePoint {
            group,
            composition,
            labels,
            tail_kind,
            surface_i,
        };
        p.check()
            .map_err(|why| YmError::InvalidPoint(format!("{p}: {why}")))?;
        Ok(p)
    }

    pub fn has_zero_block(&self) -> bool {
        self.tail_kind == TailKind::ZeroBlock
    }

    fn check(&self) -> std::result::Result<(), &'static str> {
        if !(1..=2).contains(&self.surface_i) {
            return Err("surface index must be 1 or 2");
        }
        let comp = &self.composition;
        let k = &self.labels;
        if comp.is_empty() || comp.len() != k.len() {
            return Err("composition and labels must be nonempty of equal length");
        }
        if comp.contains(&0) || comp.iter().sum::<usize>() != self.group.n {
            return Err("not a composition of the rank");
        }
        let r = comp.len();
        let zero = self.has_zero_block();
        let unitary = if zero { r - 1 } else { r };
        if zero && k[r - 1] != 0 {
            return Err("a zero block has label 0");
        }
        for j in 1..unitary {
            if !slope_gt(k[j - 1], comp[j - 1], k[j], comp[j]) {
                let signed_last = self.group.family == Family::SOeven
                    && self.group.n.is_multiple_of(2)
                    && j == r - 1
                    && comp[j] == 1;
                if !signed_last {
                    return Err("slopes must decrease strictly");
                }
            }
        }
        let n_even = self.group.n.is_multiple_of(2);
        match self.group.family {
            Family::Sp => {
                if self.tail_kind == TailKind::MinusLast {
                    return Err("Sp(n) has no negated blocks");
                }
                // Every unitary block needs k_j/n_j > 1/2.
                if (0..unitary).any(|j| 2 * k[j] <= comp[j] as i64) {
                    return Err("unitary slopes must exceed 1/2");
                }
                Ok(())
            }
            Family::SOodd => match self.tail_kind {
                TailKind::MinusLast => Err("SO(2n+1) has no negated blocks"),
                _ if (0..unitary).any(|j| k[j] <= 0) => Err("unitary labels must be positive"),
                _ => Ok(()),
            },
            Family::SOeven if !n_even => match self.tail_kind {
                TailKind::ZeroBlock if (0..unitary).all(|j| k[j] > 0) => Ok(()),
                TailKind::ZeroBlock => Err("unitary labels must be positive"),
                _ => Err("for odd n the zero block is mandatory"),
            },
            Family::SOeven => match self.tail_kind {
                TailKind::ZeroBlock => {
                    if comp[r - 1] < 2 {
                        Err("a zero block needs size at least 2")
                    } else if (0..unitary).any(|j| k[j] <= 0) {
                        Err("unitary labels must be positive")
                    } else {
                        Ok(())
                    }
                }
                TailKind::None if comp[r - 1] == 1 => {
                    if (0..r - 1).any(|j| k[j] <= 0) {
                        Err("unitary labels must be positive")
                    } else if r >= 2 && !slope_gt(k[r - 2], comp[r - 2], k[r - 1].abs(), 1) {
                        Err("k_{r-1}/n_{r-1} must exceed |k_r|")
                    } else {
                        Ok(())
                    }
                }
                TailKind::None | TailKind::MinusLast => {
                    if comp[r - 1] < 2 && self.tail_kind == TailKind::MinusLast {
                        Err("a negated block needs size at least 2")
                    } else if k.iter().any(|&x| x <= 0) {
                        Err("labels must be positive")
                    } else {
                        Ok(())
                    }
                }
            },
            _ => Err("unsupported family"),
        }
    }

    /// The chamber vector `μ`.
    pub fn vector(&self) -> Vec<BigRat> {
        let sp = self.group.family == Family::Sp;
        let zero = self.has_zero_block();
        let r = self.composition.len();
        let mut v = Vec::with_capacity(self.group.n);
        for (j, (&m, &k)) in self.composition.iter().zip(&self.labels).enumerate() {
            let mut x = BigRat::new(BigInt::from(2 * k), BigInt::from(m as i64));
            if zero && j == r - 1 {
                x = BigRat::from_integer(BigInt::from(0));
            } else if sp {
                x -= BigRat::from_integer(BigInt::from(1));
            }
            v.extend(std::iter::repeat_n(x, m));
        }
        if self.tail_kind == TailKind::MinusLast {
            let last = v.len() - 1;
            v[last] = -v[last].clone();
        }
        v
    }
}

impl fmt::Display for NonorientablePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.composition.iter().map(|x| x.to_string()).collect();
        let k: Vec<String> = self.labels.iter().map(|x| x.to_string()).collect();
        write!(f, "({});({})", c.join(","), k.join(","))?;
        match self.tail_kind {
            TailKind::None => {}
            TailKind::ZeroBlock => f.write_str("[zero]")?,
            TailKind::MinusLast => f.write_str("[minus]")?,
        }
        write!(f, " i={}", self.surface_i)
    }
}

/// All points of the index set of `g` over `Σ^ℓ_i` with `|k_j| ≤ bound`.
pub fn enumerate_nonorientable_points(
    g: &GroupSpec,
    i: u8,
    bound: i64,
) -> Result<Vec<NonorientablePoint>> {
    supported(g)?;
    if !(1..=2).contains(&i) {
        return Err(YmError::InvalidArgument(
            "surface index must be 1 or 2".into(),
        ));
    }
    let tails: &[TailKind] = match g.family {
        Family::SOeven if g.n.is_multiple_of(2) => {
            &[TailKind::None, TailKind::MinusLast, TailKind::ZeroBlock]
        }
        Family::SOeven => &[TailKind::ZeroBlock],
        _ => &[TailKind::None, TailKind::ZeroBlock],
    };
    let mut out = Vec::new();
    for comp in compositions(g.n) {
        for &tail in tails {
            let mut labels = vec![0i64; comp.len()];
            fill(g, i, bound, &comp, tail, 0, &mut labels, &mut out);
        }
    }
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    g: &GroupSpec,
    i: u8,
    bound: i64,
    comp: &[usize],
    tail: TailKind,
    j: usize,
    labels: &mut Vec<i64>,
    out: &mut Vec<NonorientablePoint>,
) {
    if j == comp.len() {
        if let Ok(p) = NonorientablePoint::new(*g, comp.to_vec(), labels.clone(), tail, i) {
            out.push(p);
        }
        return;
    }
    let range: Vec<i64> = if tail == TailKind::ZeroBlock && j == comp.len() - 1 {
        vec![0]
    } else {
        (-bound..=bound).collect()
    };
    for k in range {
        labels[j] = k;
        fill(g, i, bound, comp, tail, j + 1, labels, out);
    }
}

/// The bundle a component lies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BundleLabel {
    TrivialBundle,
    NontrivialBundle,
}

impl BundleLabel {
    fn from_w2(w2: u8) -> BundleLabel {
        if w2.is_multiple_of(2) {
            BundleLabel::TrivialBundle
        } else {
            BundleLabel::NontrivialBundle
        }
    }

    /// `+1` for the trivial bundle and `-1` otherwise.
    pub fn sign(self) -> i8 {
        match self {
            BundleLabel::TrivialBundle => 1,
            BundleLabel::NontrivialBundle => -1,
        }
    }

    pub fn w2(self) -> u8 {
        match self {
            BundleLabel::TrivialBundle => 0,
            BundleLabel::NontrivialBundle => 1,
        }
    }
}

/// A factor of a component's moduli space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TwistedFactor {
    /// The twisted unitary variety with rank `n` and label `k`.
    TwistedU { n: usize, k: i64 },
    /// The twisted `O(m)` variety with determinant and component signs.
    TwistedO { m: usize, det: i8, sign: i8 },
    /// Flat `Sp(n)` connections over the same surface.
    FlatSp { n: usize },
}

impl fmt::Display for TwistedFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pm = |s: i8| if s > 0 { '+' } else { '-' };
        match *self {
            TwistedFactor::TwistedU { n, k } => write!(f, "M~(l,i;{n},{k})"),
            TwistedFactor::TwistedO { m, det, sign } => {
                write!(f, "M(l,i,{};O({m}),{})", pm(sign), pm(det))
            }
            TwistedFactor::FlatSp { n } => write!(f, "M(l,i;Sp({n}))"),
        }
    }
}

/// One connected component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub bundle: BundleLabel,
    pub factors: Vec<TwistedFactor>,
}

/// Connected components of the Yang-Mills set of one type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub group: GroupSpec,
    pub point: NonorientablePoint,
    pub components: Vec<Component>,
    /// Smallest `ℓ` for which the connectedness statements are claimed.
    pub l_min: u32,
    /// Whether every twisted `O(m)` factor has `m > 2`, the range in which
    /// its two components are established.
    pub o_factors_above_rank_two: bool,
}

impl ComponentReport {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self
            .components
            .iter()
            .map(|c| {
                let factors: Vec<Value> = c
                    .factors
                    .iter()
                    .map(|f| serde_json::to_value(f).expect("plain data"))
                    .collect();
                json!({ "w2": c.bundle.w2(), "bundle": c.bundle, "factors": factors })
            })
            .collect();
        json!({
            "group": self.group.name(),
            "point": {
                "composition": self.point.composition,
                "labels": self.point.labels,
                "tail_kind": self.point.tail_kind,
            },
            "surface_i": self.point.surface_i,
            "components": comps,
            "validity": {
                "l_min": self.l_min,
                "o_factors_above_rank_two": self.o_factors_above_rank_two,
            },
        })
    }
}

/// `(-1)^e` for an integer exponent.
fn parity_sign(e: i64) -> i8 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `i(n-n_r)(n-n_r-1)/2 + k_1 + ⋯ + k_{r-1}`, the exponent of the component
/// sign of the twisted `O(m)` factor.
pub fn o_sign_exponent(p: &NonorientablePoint) -> i64 {
    let r = p.composition.len();
    let n = p.group.n as i64;
    let nr = p.composition[r - 1] as i64;
    let labels: i64 = p.labels[..r - 1].iter().sum();
    labels + p.surface_i as i64 * ((n - nr) * (n - nr - 1) / 2)
}

/// `w₂ ≡ k_1 + ⋯ + k_r + i·n(n+1)/2` for a one-component orthogonal point.
pub fn single_component_w2(p: &NonorientablePoint) -> u8 {
    let n = p.group.n as i64;
    let e: i64 = p.labels.iter().sum::<i64>() + p.surface_i as i64 * (n * (n + 1) / 2);
    e.rem_euclid(2) as u8
}

/// Component count, bundle labels and factors of the Yang-Mills set of `p`.
pub fn classify_components(g: &GroupSpec, p: &NonorientablePoint) -> Result<ComponentReport> {
    if p.group != *g {
        return Err(YmError::InvalidPoint(format!("{p} is not a point of {g}")));
    }
    let checked = NonorientablePoint::new(
        p.group,
        p.composition.clone(),
        p.labels.clone(),
        p.tail_kind,
        p.surface_i,
    )?;
    let r = checked.composition.len();
    let zero = checked.has_zero_block();
    let unitary = if zero { r - 1 } else { r };
    let sp = g.family == Family::Sp;
    let unit_factors: Vec<TwistedFactor> = (0..unitary)
        .map(|j| TwistedFactor::TwistedU {
            n: checked.composition[j],
            k: if sp {
                checked.labels[j]
            } else {
                -checked.labels[j]
            },
        })
        .collect();
    let mut o_ok = true;
    let components = if sp {
        let mut factors = unit_factors;
        if zero {
            factors.push(TwistedFactor::FlatSp {
                n: checked.composition[r - 1],
            });
        }
        vec![Component {
            bundle: BundleLabel::TrivialBundle,
            factors,
        }]
    } else if !zero {
        vec![Component {
            bundle: BundleLabel::from_w2(single_component_w2(&checked)),
            factors: unit_factors,
        }]
    } else {
        let nr = checked.composition[r - 1];
        let m = if g.family == Family::SOodd {
            2 * nr + 1
        } else {
            2 * nr
        };
        o_ok = m > 2;
        let det = parity_sign((g.n - nr) as i64);
        let base = parity_sign(o_sign_exponent(&checked));
        [BundleLabel::TrivialBundle, BundleLabel::NontrivialBundle]
            .into_iter()
            .map(|bundle| {
                let mut factors = unit_factors.clone();
                factors.push(TwistedFactor::TwistedO {
                    m,
                    det,
                    sign: bundle.sign() * base,
                });
                Component { bundle, factors }
            })
            .collect()
    };
    Ok(ComponentReport {
        group: *g,
        point: checked,
        components,
        l_min: 2 * p.surface_i as u32,
        o_factors_above_rank_two: o_ok,
    })
}

/// Renders a report, one line per component.
pub fn decomposition_render(report: &ComponentReport) -> String {
    let tagged = report.components.len() > 1;
    let mut lines = Vec::new();
    for c in &report.components {
        let body: Vec<String> = c.factors.iter().map(|f| f.to_string()).collect();
        let body = if body.is_empty() {
            "point".to_string()
        } else {
            body.join(" x ")
        };
        if tagged {
            let tag = if c.bundle.sign() > 0 { '+' } else { '-' };
            lines.push(format!("{tag}: {body}"));
        } else {
            lines.push(body);
        }
    }
    lines.join("\n")
}

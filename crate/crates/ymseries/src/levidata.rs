//! Standard parabolic subgroups encoded as compositions with tail flags, and
//! the Levi data each one determines.
//!
//! A subset `I` of simple roots (the roots cut out of the Levi factor) is
//! written as a composition `(n_1, …, n_r)` of `n` whose partial sums
//! `s_i = n_1 + ⋯ + n_i` give the cut roots `α_{s_i}`, together with flags
//! for the roots at the end of the Dynkin diagram:
//!
//! * `U(n)`: no flag; `I = {α_{s_1}, …, α_{s_{r-1}}}`.
//! * `SO(2n+1)`, `Sp(n)`: one flag, whether `α_n ∈ I`.
//! * `SO(2n)`: two flags, whether `α_{n-1} ∈ I` and whether `α_n ∈ I`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Result, YmError};
use crate::exactalg::BigRat;
use crate::gaugeseries::{type_bc_degrees, type_d_degrees, unitary_degrees, DegreeProfile};
use crate::rootsys::{
    build_root_system, pairing, pairing_int, to_rat, Family, GroupSpec, RootSystem,
};

/// Family-specific flags for the roots at the end of the diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TailFlags {
    /// Type A: no end roots.
    None,
    /// Types B and C: whether `α_n ∈ I`.
    Last(bool),
    /// Type D: whether `α_{n-1} ∈ I` and whether `α_n ∈ I`.
    Pair(bool, bool),
}

/// A subset of the simple roots, as a composition with tail flags.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParabolicIndex {
    pub composition: Vec<usize>,
    pub flags: TailFlags,
}

impl ParabolicIndex {
    pub fn new(composition: Vec<usize>, flags: TailFlags) -> ParabolicIndex {
        ParabolicIndex { composition, flags }
    }

    pub fn r(&self) -> usize {
        self.composition.len()
    }

    pub fn last(&self) -> usize {
        *self.composition.last().expect("nonempty composition")
    }
}

impl fmt::Display for ParabolicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.composition.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))?;
        match self.flags {
            TailFlags::None => Ok(()),
            TailFlags::Last(b) => write!(f, "[{}]", if b { "T" } else { "F" }),
            TailFlags::Pair(a, b) => write!(
                f,
                "[{}{}]",
                if a { "T" } else { "F" },
                if b { "T" } else { "F" }
            ),
        }
    }
}

/// Non-unitary factor of the Levi subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LeviTail {
    None,
    SOodd(usize),
    SOeven(usize),
    Sp(usize),
}

/// Levi data attached to a subset `I` of simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviProfile {
    pub group: GroupSpec,
    pub index: ParabolicIndex,
    /// Sizes of the `GL` blocks.
    pub unitary_blocks: Vec<usize>,
    pub tail: LeviTail,
    /// `dim_ℂ U^I`, the dimension of the unipotent radical.
    pub dim_u: u64,
    /// `dim_ℂ 𝔷_{L^I} - dim_ℂ 𝔷_G`.
    pub center_excess: usize,
    /// The cut roots `α_j ∈ I` with their pairings `⟨ρ^I, α_j^∨⟩`, indexed
    /// from 1 and sorted by `j`.
    pub rho_pairings: Vec<(usize, BigRat)>,
    /// Degree profile of the compact form of `L^I`.
    pub betti: DegreeProfile,
}

impl LeviProfile {
    /// Indices of the cut roots, from 1.
    pub fn cut_roots(&self) -> Vec<usize> {
        self.rho_pairings.iter().map(|(j, _)| *j).collect()
    }

    pub fn to_json(&self) -> Value {
        let tail = match self.tail {
            LeviTail::None => json!(null),
            LeviTail::SOodd(m) => json!({"kind": "SOodd", "rank": m}),
            LeviTail::SOeven(m) => json!({"kind": "SOeven", "rank": m}),
            LeviTail::Sp(m) => json!({"kind": "Sp", "rank": m}),
        };
        let pairings: serde_json::Map<String, Value> = self
            .rho_pairings
            .iter()
            .map(|(j, p)| (format!("alpha_{j}"), Value::String(p.to_string())))
            .collect();
        json!({
            "group": self.group.name(),
            "index": self.index.to_string(),
            "unitary_blocks": self.unitary_blocks,
            "tail": tail,
            "dim_u": self.dim_u,
            "center_excess": self.center_excess,
            "rho_pairings": pairings,
            "betti_degrees": self.betti.degrees,
            "center_count": self.betti.center_count,
        })
    }
}

/// All compositions of `n`, ordered by length and then lexicographically.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for first in 1..=rest {
            cur.push(first);
            rec(rest - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Spin and special unitary groups share parabolic data with `SO` and `U`.
fn base_family(g: &GroupSpec) -> Family {
    match g.family {
        Family::SU => Family::U,
        Family::SpinOdd => Family::SOodd,
        Family::SpinEven => Family::SOeven,
        f => f,
    }
}

fn admissible(family: Family, composition: &[usize], flags: TailFlags) -> bool {
    let last = *composition.last().unwrap();
    match (family, flags) {
        (Family::U, TailFlags::None) => true,
        (Family::SOodd | Family::Sp, TailFlags::Last(_)) => true,
        (Family::SOeven, TailFlags::Pair(true, true)) => last == 1,
        (Family::SOeven, TailFlags::Pair(_, _)) => last > 1,
        _ => false,
    }
}

/// Every subset of simple roots of `g`, including `I = ∅` and `I = Δ`,
/// ordered by `(r, composition, flags)`.
pub fn enumerate_parabolics(g: &GroupSpec) -> Vec<ParabolicIndex> {
    let family = base_family(g);
    let flag_options: Vec<TailFlags> = match family {
        Family::U => vec![TailFlags::None],
        Family::SOodd | Family::Sp => vec![TailFlags::Last(false), TailFlags::Last(true)],
        _ => vec![
            TailFlags::Pair(false, false),
            TailFlags::Pair(false, true),
            TailFlags::Pair(true, false),
            TailFlags::Pair(true, true),
        ],
    };
    let mut out = Vec::new();
    for c in compositions(g.n) {
        for &f in &flag_options {
            if admissible(family, &c, f) {
                out.push(ParabolicIndex::new(c.clone(), f));
            }
        }
    }
    out
}

fn half(x: i64) -> BigRat {
    BigRat::new(BigInt::from(x), BigInt::from(2))
}

/// Levi data for `I`, read off from the case tables of each family.
pub fn levi_profile(g: &GroupSpec, index: &ParabolicIndex) -> Result<LeviProfile> {
    let family = base_family(g);
    let comp = &index.composition;
    let n = g.n;
    let bad = |why: &str| YmError::InadmissibleCase(format!("{index} for {g}: {why}"));
    if comp.is_empty() || comp.contains(&0) || comp.iter().sum::<usize>() != n {
        return Err(bad("not a composition of the rank"));
    }
    if !admissible(family, comp, index.flags) {
        return Err(bad("flags do not fit the composition"));
    }
    let r = comp.len();
    let nn: Vec<i64> = comp.iter().map(|&x| x as i64).collect();
    let partial: Vec<usize> = comp
        .iter()
        .scan(0, |s, &x| {
            *s += x;
            Some(*s)
        })
        .collect();
    let mut cross = 0i64;
    for i in 0..r {
        for j in i + 1..r {
            cross += nn[i] * nn[j];
        }
    }
    let n_i = n as i64;
    let nr = nn[r - 1];
    let consecutive = |i: usize| half(nn[i] + nn[i + 1]);

    let mut pairings: Vec<(usize, BigRat)> = Vec::new();
    let (blocks, tail, dim_u, excess): (Vec<usize>, LeviTail, i64, usize);
    match (family, index.flags) {
        (Family::U, _) => {
            for i in 0..r - 1 {
                pairings.push((partial[i], consecutive(i)));
            }
            blocks = comp.clone();
            tail = LeviTail::None;
            dim_u = cross;
            excess = r - 1;
        }
        (Family::SOodd | Family::Sp, TailFlags::Last(true)) => {
            for i in 0..r - 1 {
                pairings.push((partial[i], consecutive(i)));
            }
            let last = if family == Family::Sp {
                half(nr + 1)
            } else {
                BigRat::from_integer(BigInt::from(nr))
            };
            pairings.push((n, last));
            blocks = comp.clone();
            tail = LeviTail::None;
            dim_u = cross + n_i * (n_i + 1) / 2;
            excess = r;
        }
        (Family::SOodd | Family::Sp, TailFlags::Last(false)) => {
            if r >= 2 {
                for i in 0..r - 2 {
                    pairings.push((partial[i], consecutive(i)));
                }
                let prev = nn[r - 2];
                let last = if family == Family::Sp {
                    half(prev + 1) + BigRat::from_integer(BigInt::from(nr))
                } else {
                    half(prev) + BigRat::from_integer(BigInt::from(nr))
                };
                pairings.push((partial[r - 2], last));
            }
            blocks = comp[..r - 1].to_vec();
            tail = if family == Family::Sp {
                LeviTail::Sp(comp[r - 1])
            } else {
                LeviTail::SOodd(comp[r - 1])
            };
            dim_u = cross + (n_i * (n_i + 1) - nr * (nr + 1)) / 2;
            excess = r - 1;
        }
        (Family::SOeven, TailFlags::Pair(true, true)) => {
            for i in 0..r - 2 {
                pairings.push((partial[i], consecutive(i)));
            }
            let v = half(nn[r - 2] + 1);
            pairings.push((n - 1, v.clone()));
            pairings.push((n, v));
            blocks = comp.clone();
            tail = LeviTail::None;
            dim_u = cross + n_i * (n_i - 1) / 2;
            excess = r;
        }
        (Family::SOeven, TailFlags::Pair(a, b)) if a != b => {
            for i in 0..r - 1 {
                pairings.push((partial[i], consecutive(i)));
            }
            let end = if a { n - 1 } else { n };
            pairings.push((end, BigRat::from_integer(BigInt::from(nr - 1))));
            blocks = comp.clone();
            tail = LeviTail::None;
            dim_u = cross + n_i * (n_i - 1) / 2;
            excess = r;
        }
        (Family::SOeven, TailFlags::Pair(false, false)) => {
            if r >= 2 {
                for i in 0..r - 2 {
                    pairings.push((partial[i], consecutive(i)));
                }
                pairings.push((partial[r - 2], half(nn[r - 2] + 2 * nr - 1)));
            }
            blocks = comp[..r - 1].to_vec();
            tail = LeviTail::SOeven(comp[r - 1]);
            dim_u = cross + (n_i * (n_i - 1) - nr * (nr - 1)) / 2;
            excess = r - 1;
        }
        _ => return Err(bad("flags do not fit the family")),
    }
    pairings.sort_by_key(|(j, _)| *j);

    let mut parts: Vec<DegreeProfile> = blocks.iter().map(|&m| unitary_degrees(m)).collect();
    match tail {
        LeviTail::None => {}
        LeviTail::SOodd(m) | LeviTail::Sp(m) => parts.push(type_bc_degrees(m)),
        LeviTail::SOeven(m) => parts.push(type_d_degrees(m)),
    }
    let mut betti = DegreeProfile::product(&parts);
    if g.family == Family::SU {
        // SU(n) is the derived group of U(n): its Levi factors lose one
        // central circle.
        let pos = betti.degrees.iter().position(|&d| d == 1).expect("center");
        betti.degrees.remove(pos);
        betti.center_count -= 1;
    }

    Ok(LeviProfile {
        group: *g,
        index: index.clone(),
        unitary_blocks: blocks,
        tail,
        dim_u: dim_u as u64,
        center_excess: excess,
        rho_pairings: pairings,
        betti,
    })
}

/// Independent recomputation of the Levi data from the root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCount {
    /// `|R⁺(G)| - |R⁺(L^I)|`.
    pub dim_u: u64,
    /// `⟨ρ^I, α^∨⟩` for `α ∈ I`, with `ρ^I = ½ Σ β` over the roots `β` of
    /// the unipotent radical, that is the positive roots whose expansion in
    /// simple roots has a positive coefficient on some `α ∈ I`.
    pub rho_pairings: Vec<(usize, BigRat)>,
}

/// Recomputes `dim U^I` and the pairings `⟨ρ^I, α^∨⟩` from the roots.
pub fn root_count(rs: &RootSystem, cut: &[usize]) -> RootCount {
    let in_levi = |beta: &[i64]| {
        let c = rs.simple_root_coords(beta);
        cut.iter().all(|&j| c[j - 1].is_zero())
    };
    let levi = rs.positive_roots.iter().filter(|b| in_levi(b)).count();
    let dim_u = (rs.positive_roots.len() - levi) as u64;

    let mut rho = vec![BigRat::zero(); rs.dim];
    for beta in rs.positive_roots.iter().filter(|b| !in_levi(b)) {
        {
            for (slot, &b) in rho.iter_mut().zip(beta) {
                *slot += half(b);
            }
        }
    }
    let rho_pairings = cut
        .iter()
        .map(|&j| {
            let v = pairing(&rho, &to_rat(&rs.simple_coroots[j - 1])).expect("same dimension");
            (j, v)
        })
        .collect();
    RootCount {
        dim_u,
        rho_pairings,
    }
}

/// `⟨ρ', α^∨⟩` for `α ∈ I`, where `ρ' = ½ Σ β` runs over the positive roots
/// with `⟨β, α^∨⟩ > 0` for some `α ∈ I`. This reading of the definition of
/// `ρ^I` differs from the unipotent-radical one in types B and C from rank
/// 3 on; it is kept to document that difference.
pub fn rho_pairings_coroot_reading(rs: &RootSystem, cut: &[usize]) -> Vec<(usize, BigRat)> {
    let mut rho = vec![BigRat::zero(); rs.dim];
    for beta in &rs.positive_roots {
        if cut
            .iter()
            .any(|&j| pairing_int(beta, &rs.simple_coroots[j - 1]) > 0)
        {
            for (slot, &b) in rho.iter_mut().zip(beta) {
                *slot += half(b);
            }
        }
    }
    cut.iter()
        .map(|&j| {
            let v = pairing(&rho, &to_rat(&rs.simple_coroots[j - 1])).expect("same dimension");
            (j, v)
        })
        .collect()
}

/// Compares the tables against [`root_count`] for one index.
pub fn check_profile(g: &GroupSpec, index: &ParabolicIndex) -> Result<bool> {
    let rs = build_root_system(&g.orthogonal_alias())?;
    let p = levi_profile(g, index)?;
    let rc = root_count(&rs, &p.cut_roots());
    Ok(rc.dim_u == p.dim_u && rc.rho_pairings == p.rho_pairings)
}

/// `true` when every rational pairing is strictly positive.
pub fn pairings_positive(p: &LeviProfile) -> bool {
    p.rho_pairings.iter().all(|(_, v)| *v > BigRat::zero())
}

/// `4⟨ρ^I, α^∨⟩`, which must be a positive integer.
pub fn weight_exponent(v: &BigRat) -> Result<usize> {
    let four = v * BigRat::from_integer(BigInt::from(4));
    if !four.denom().is_one() || four <= BigRat::zero() {
        return Err(YmError::NonIntegerExponent(four.to_string()));
    }
    use num_traits::ToPrimitive;
    four.numer()
        .to_usize()
        .ok_or_else(|| YmError::NonIntegerExponent(four.to_string()))
}

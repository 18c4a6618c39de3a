//! Lattice-cone sums and the inversion of parabolic recursions.
//!
//! For `p ∈ ℤ_{>0}` and `x ∈ ℚ`,
//!
//! ```text
//! Σ_{m ∈ ℤ, x+m > 0} t^{p(x+m)} = t^{p⟨x⟩} / (1 - t^p),
//! ```
//!
//! and a relation
//!
//! ```text
//! a_0(Q) = Σ_{P ⊆ Q} Σ_{ν_P ↦ ν_Q} τ_P^Q([ν_P']^Q) b_0(P, ν_P) t^{m(P,ν_P') - m(Q,ν_Q')}
//! ```
//!
//! over the standard parabolics of a group is inverted by
//!
//! ```text
//! b_0(Q, ν_Q) = Σ_{P ⊆ Q} (-1)^{dim 𝔞_P^Q} a_0(P) t^{n_P - n_Q}
//!     ∏_{α ∈ Δ_P^Q} t^{⟨ε_P^Q, α^∨⟩⟨ϖ_α(ν_Q)⟩} / (1 - t^{⟨ε_P^Q, α^∨⟩}).
//! ```
//!
//! Parabolics are encoded by the bitmask of the simple roots in their Levi
//! factor. For `H ∈ 𝔞_0`, written in the basis of simple coroots,
//! `τ_P^Q(H) = 1` when `α(H_P) > 0` for every `α ∈ Δ_P^Q`, and
//! `τ̂_P^Q(H) = 1` when the coefficient of `α^∨` in `H_Q` is positive for every
//! `α ∈ Δ_P^Q`; here `H_P` is the projection of `H` to `𝔞_P` along the span
//! of the coroots of the Levi factor of `P`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closedforms::frac_part;
use crate::error::{Result, YmError};
use crate::exactalg::{series_expand, BigRat, CoeffVector, Poly, RatFun};
use crate::gaugeseries::{bg_orientable, DegreeProfile};
use crate::rootsys::{
    build_root_system, pairing, pairing_int, to_rat, weight_on_pi1, Family, GroupSpec, RootSystem,
    TopClass,
};

/// Weights `p_α` and classes `x_α` of a product of one-dimensional cone sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSumSpec {
    pub weights: Vec<u64>,
    pub classes: Vec<BigRat>,
}

impl ConeSumSpec {
    pub fn new(weights: Vec<u64>, classes: Vec<BigRat>) -> Result<ConeSumSpec> {
        let spec = ConeSumSpec { weights, classes };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if self.weights.len() != self.classes.len() {
            return Err(YmError::DimensionMismatch(
                self.weights.len(),
                self.classes.len(),
            ));
        }
        if self.weights.contains(&0) {
            return Err(YmError::InvalidArgument(
                "cone weights must be positive".into(),
            ));
        }
        self.lowest_exponent().map(|_| ())
    }

    /// `Σ_α p_α⟨x_α⟩`, which must be a natural number. Single summands may be
    /// fractional.
    pub fn lowest_exponent(&self) -> Result<usize> {
        let mut e = BigRat::zero();
        for (p, x) in self.weights.iter().zip(&self.classes) {
            e += rat(*p) * frac_part(x);
        }
        if !e.is_integer() {
            return Err(YmError::NonIntegerExponent(e.to_string()));
        }
        e.to_integer()
            .to_usize()
            .ok_or_else(|| YmError::NonIntegerExponent(e.to_string()))
    }
}

fn rat(p: u64) -> BigRat {
    BigRat::from_integer(BigInt::from(p))
}

/// `∏_α Σ_{m ∈ ℤ, x_α+m > 0} t^{p_α(x_α+m)}` to order `order`, by walking
/// the lattice points of each factor. Exponents are tracked on the grid
/// `ℤ/L` with `L` the common denominator of the `p_α x_α`.
pub fn cone_sum_truncated(spec: &ConeSumSpec, order: usize) -> Result<CoeffVector> {
    spec.validate()?;
    let mut lcd = BigInt::one();
    for (&p, x) in spec.weights.iter().zip(&spec.classes) {
        lcd = num_integer::Integer::lcm(&lcd, (rat(p) * x).denom());
    }
    let scale = lcd.to_usize().expect("small denominators");
    let fine = order * scale;
    let mut out = CoeffVector::zeros(fine);
    out.coeffs[0] = BigInt::one();
    for (&p, x) in spec.weights.iter().zip(&spec.classes) {
        let mut factor = CoeffVector::zeros(fine);
        // Smallest integer m with x + m > 0.
        let mut m = (-x).floor().to_integer() + BigInt::one();
        loop {
            let e =
                rat(p) * (x + BigRat::from_integer(m.clone())) * BigRat::from_integer(lcd.clone());
            debug_assert!(e.is_integer());
            match e.to_integer().to_usize() {
                Some(e) if e <= fine => factor.coeffs[e] += 1,
                _ => break,
            }
            m += 1;
        }
        out = out.mul(&factor);
    }
    let mut coarse = CoeffVector::zeros(order);
    for (e, c) in out.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if e % scale != 0 {
            return Err(YmError::NonIntegerExponent(format!("{e}/{scale}")));
        }
        coarse.coeffs[e / scale] = c.clone();
    }
    Ok(coarse)
}

/// `t^{Σ_α p_α⟨x_α⟩} / ∏_α (1 - t^{p_α})`.
pub fn cone_sum_closed(spec: &ConeSumSpec) -> Result<RatFun> {
    spec.validate()?;
    let mut den = Poly::one();
    for &p in &spec.weights {
        den = den.mul(&Poly::one_minus_t(p as usize));
    }
    Ok(RatFun::new(Poly::t_pow(spec.lowest_exponent()?), den)?)
}

/// Solves `a z = b` over ℚ for a square invertible `a`.
fn solve(a: &[Vec<BigRat>], b: &[BigRat]) -> Vec<BigRat> {
    let n = b.len();
    let mut m: Vec<Vec<BigRat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("Cartan submatrices are invertible");
        m.swap(col, pivot);
        let inv = BigRat::one() / m[col][col].clone();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let delta = &f * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n].clone()).collect()
}

fn bits(mask: u32, rank: usize) -> Vec<usize> {
    (0..rank).filter(|&i| mask & (1 << i) != 0).collect()
}

/// Cartan data `A[i][j] = ⟨α_i, α_j^∨⟩` of a rank-`r` root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cartan {
    pub a: Vec<Vec<BigRat>>,
}

impl Cartan {
    /// Type `A_rank`.
    pub fn type_a(rank: usize) -> Cartan {
        let mut a = vec![vec![BigRat::zero(); rank]; rank];
        for i in 0..rank {
            a[i][i] = rat(2);
            if i + 1 < rank {
                a[i][i + 1] = BigRat::from_integer(BigInt::from(-1));
                a[i + 1][i] = BigRat::from_integer(BigInt::from(-1));
            }
        }
        Cartan { a }
    }

    pub fn from_root_system(rs: &RootSystem) -> Cartan {
        let r = rs.simple_roots.len();
        let a = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        BigRat::from_integer(BigInt::from(pairing_int(
                            &rs.simple_roots[i],
                            &rs.simple_coroots[j],
                        )))
                    })
                    .collect()
            })
            .collect();
        Cartan { a }
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// `α_i(H)` for `H = Σ c_j α_j^∨`.
    fn root_values(&self, c: &[BigRat]) -> Vec<BigRat> {
        (0..self.rank())
            .map(|i| {
                let mut s = BigRat::zero();
                for (j, cj) in c.iter().enumerate() {
                    s += &self.a[i][j] * cj;
                }
                s
            })
            .collect()
    }

    /// Coefficients of the projection of `H` to the span of the coroots in `s`.
    fn levi_part(&self, s: &[usize], values: &[BigRat]) -> Vec<BigRat> {
        if s.is_empty() {
            return Vec::new();
        }
        let sub: Vec<Vec<BigRat>> = s
            .iter()
            .map(|&i| s.iter().map(|&j| self.a[i][j].clone()).collect())
            .collect();
        let rhs: Vec<BigRat> = s.iter().map(|&i| values[i].clone()).collect();
        solve(&sub, &rhs)
    }

    /// `α(H_P)` for `α ∈ Δ_P^Q`, keyed by simple root index.
    fn tau_values(&self, p: u32, q: u32, c: &[BigRat]) -> Vec<BigRat> {
        let r = self.rank();
        let values = self.root_values(c);
        let sp = bits(p, r);
        let z = self.levi_part(&sp, &values);
        bits(q & !p, r)
            .into_iter()
            .map(|a| {
                let mut v = values[a].clone();
                for (k, &g) in sp.iter().enumerate() {
                    v -= &z[k] * &self.a[a][g];
                }
                v
            })
            .collect()
    }

    /// Coefficients of `α^∨` in the projection of `H` to the coroot span of
    /// `Q`, for `α ∈ Δ_P^Q`.
    fn tau_hat_values(&self, p: u32, q: u32, c: &[BigRat]) -> Vec<BigRat> {
        let r = self.rank();
        let values = self.root_values(c);
        let sq = bits(q, r);
        let z = self.levi_part(&sq, &values);
        bits(q & !p, r)
            .into_iter()
            .map(|a| {
                let k = sq.iter().position(|&x| x == a).expect("a ∈ S_Q");
                z[k].clone()
            })
            .collect()
    }

    /// `(τ_P^Q(H), τ̂_P^Q(H))`; fails on walls.
    pub fn tau_pair(&self, p: u32, q: u32, c: &[BigRat]) -> Result<(bool, bool)> {
        let t = self.tau_values(p, q, c);
        let th = self.tau_hat_values(p, q, c);
        if t.iter().chain(&th).any(|v| v.is_zero()) {
            return Err(YmError::WallPoint);
        }
        Ok((
            t.iter().all(|v| v.is_positive()),
            th.iter().all(|v| v.is_positive()),
        ))
    }
}

fn popcount(x: u32) -> i64 {
    x.count_ones() as i64
}

/// Checks both identities
/// `Σ_{P⊆Q⊆R} (-1)^{dim 𝔞_Q^R} τ_P^Q(H) τ̂_Q^R(H) = δ_P^R` and
/// `Σ_{P⊆Q⊆R} (-1)^{dim 𝔞_P^Q} τ̂_P^Q(H) τ_Q^R(H) = δ_P^R`
/// for all standard parabolics of `A_rank` at each sample point.
pub fn verify_langlands(rank: usize, samples: &[Vec<BigRat>]) -> Result<bool> {
    if !(1..=3).contains(&rank) {
        return Err(YmError::UnsupportedRank {
            family: "A".into(),
            n: rank,
        });
    }
    let cartan = Cartan::type_a(rank);
    let full: u32 = (1 << rank) - 1;
    for h in samples {
        if h.len() != rank {
            return Err(YmError::DimensionMismatch(rank, h.len()));
        }
        let mut tau = BTreeMap::new();
        for q in 0..=full {
            for p in 0..=full {
                if p & q == p {
                    tau.insert((p, q), cartan.tau_pair(p, q, h)?);
                }
            }
        }
        for r in 0..=full {
            for p in 0..=full {
                if p & r != p {
                    continue;
                }
                let mut first = 0i64;
                let mut second = 0i64;
                for q in 0..=full {
                    if p & q != p || q & r != q {
                        continue;
                    }
                    let (t_pq, th_pq) = tau[&(p, q)];
                    let (t_qr, th_qr) = tau[&(q, r)];
                    let s_qr = if (popcount(r) - popcount(q)) % 2 == 0 {
                        1
                    } else {
                        -1
                    };
                    let s_pq = if (popcount(q) - popcount(p)) % 2 == 0 {
                        1
                    } else {
                        -1
                    };
                    if t_pq && th_qr {
                        first += s_qr;
                    }
                    if th_pq && t_qr {
                        second += s_pq;
                    }
                }
                let delta = (p == r) as i64;
                if first != delta || second != delta {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The poset of standard parabolics of a group of semisimple rank at most
/// 3, with the data entering the inversion for the bundle of class `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicPoset {
    pub group: GroupSpec,
    pub ell: u32,
    pub rank: usize,
    /// Bitmasks of the simple roots in each Levi factor, by increasing size.
    pub elements: Vec<u32>,
    /// `n_P = 2 dim N_P (ℓ - 1)`.
    pub codim: BTreeMap<u32, u64>,
    /// `⟨ε_P^Q, α^∨⟩` for `α ∈ Δ_P^Q`, in increasing root order.
    pub weights: BTreeMap<(u32, u32), Vec<u64>>,
    /// Coroot coordinates of the projection of `ν` to the span of the
    /// coroots, that is `ϖ_α(ν)` for each simple root `α`.
    pub classes: Vec<BigRat>,
    pub cartan: Cartan,
    /// Degrees of the Levi factor of each element.
    pub levi_degrees: BTreeMap<u32, DegreeProfile>,
}

impl ParabolicPoset {
    /// The full poset of `g` for the class `c` over genus `ℓ`.
    pub fn from_group(g: &GroupSpec, c: TopClass, ell: u32) -> Result<ParabolicPoset> {
        let rs = build_root_system(g)?;
        let rank = rs.simple_roots.len();
        if rank > 3 {
            return Err(YmError::UnsupportedRank {
                family: format!("{:?}", g.family),
                n: g.n,
            });
        }
        let c = c.validate(g)?;
        let classes = (1..=rank)
            .map(|i| match g.family {
                Family::U | Family::SOodd | Family::SOeven => weight_on_pi1(g, i, c),
                _ => Ok(BigRat::zero()),
            })
            .collect::<Result<Vec<_>>>()?;
        let full: u32 = (1 << rank) - 1;
        let mut elements: Vec<u32> = (0..=full).collect();
        elements.sort_by_key(|&m| (m.count_ones(), m));
        let coords: Vec<Vec<BigRat>> = rs
            .positive_roots
            .iter()
            .map(|b| rs.simple_root_coords(b))
            .collect();
        let support = |k: usize| -> u32 {
            let mut m = 0;
            for (i, v) in coords[k].iter().enumerate() {
                if !v.is_zero() {
                    m |= 1 << i;
                }
            }
            m
        };
        let supports: Vec<u32> = (0..coords.len()).map(support).collect();
        let center = if g.family == Family::U { 1 } else { 0 };
        let mut codim = BTreeMap::new();
        let mut levi_degrees = BTreeMap::new();
        for &p in &elements {
            let outside = supports.iter().filter(|&&s| s & !p != 0).count() as u64;
            codim.insert(p, 2 * outside * (ell as u64).saturating_sub(1));
            levi_degrees.insert(p, levi_profile_of(&rs, &supports, p, rank + center));
        }
        let mut weights = BTreeMap::new();
        for &q in &elements {
            for &p in &elements {
                if p & q != p {
                    continue;
                }
                // ρ_P^Q: half the sum of positive roots of the Levi of Q outside that of P.
                let mut rho = vec![BigRat::zero(); rs.dim];
                for (k, beta) in rs.positive_roots.iter().enumerate() {
                    if supports[k] & !q == 0 && supports[k] & !p != 0 {
                        for (x, b) in rho.iter_mut().zip(beta) {
                            *x += BigRat::new(BigInt::from(*b), BigInt::from(2));
                        }
                    }
                }
                let mut ws = Vec::new();
                for a in bits(q & !p, rank) {
                    let v = pairing(&rho, &to_rat(&rs.simple_coroots[a]))? * rat(4);
                    if !v.is_integer() || !v.is_positive() {
                        return Err(YmError::NonIntegerExponent(v.to_string()));
                    }
                    ws.push(v.to_integer().to_u64().expect("small"));
                }
                weights.insert((p, q), ws);
            }
        }
        Ok(ParabolicPoset {
            group: *g,
            ell,
            rank,
            elements,
            codim,
            weights,
            classes,
            cartan: Cartan::from_root_system(&rs),
            levi_degrees,
        })
    }

    pub fn top(&self) -> u32 {
        (1 << self.rank) - 1
    }

    /// `a_0(P) = P_t(B𝒢_{L_P})`, the gauge series of each Levi factor.
    pub fn gauge_series(&self) -> BTreeMap<u32, RatFun> {
        self.levi_degrees
            .iter()
            .map(|(&p, d)| (p, bg_orientable(d, self.ell)))
            .collect()
    }
}

/// Degrees of the Levi factor for the simple roots in `mask`: the torus part
/// plus the exponents read off from the number of roots of each height.
fn levi_profile_of(
    rs: &RootSystem,
    supports: &[u32],
    mask: u32,
    total_rank: usize,
) -> DegreeProfile {
    let mut heights: BTreeMap<i64, usize> = BTreeMap::new();
    for (k, beta) in rs.positive_roots.iter().enumerate() {
        if supports[k] & !mask == 0 {
            let h: BigRat = rs.simple_root_coords(beta).iter().sum();
            *heights
                .entry(h.to_integer().to_i64().expect("small"))
                .or_default() += 1;
        }
    }
    let semisimple = mask.count_ones() as usize;
    let mut degrees = vec![1u32; total_rank - semisimple];
    let max_h = heights.keys().copied().max().unwrap_or(0);
    for h in 1..=max_h {
        let here = heights.get(&h).copied().unwrap_or(0);
        let next = heights.get(&(h + 1)).copied().unwrap_or(0);
        for _ in 0..here.saturating_sub(next) {
            degrees.push(h as u32 + 1);
        }
    }
    let ones = total_rank - semisimple;
    DegreeProfile::new(degrees, ones)
}

/// `b_0` from the closed inversion formula together with the residual of the
/// defining relation, re-summed to order `truncation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionResult {
    pub b0: BTreeMap<u32, RatFun>,
    pub residual: BTreeMap<u32, CoeffVector>,
}

impl InversionResult {
    pub fn residual_is_zero(&self) -> bool {
        self.residual.values().all(|r| r.is_zero())
    }
}

/// Inverts the relation on `poset` for the given `a_0`.
pub fn invert_abstract(
    poset: &ParabolicPoset,
    a0: &BTreeMap<u32, RatFun>,
    truncation: usize,
) -> Result<InversionResult> {
    if truncation == 0 {
        return Err(YmError::TruncationTooSmall(
            "the forward check needs order at least 1".into(),
        ));
    }
    for p in &poset.elements {
        if !a0.contains_key(p) {
            return Err(YmError::InvalidArgument(format!(
                "a0 is missing the element {p:b}"
            )));
        }
    }
    let mut inv = Inverter {
        poset,
        a0,
        truncation,
        cache: BTreeMap::new(),
    };
    let c = poset.classes.clone();
    let mut b0 = BTreeMap::new();
    let mut residual = BTreeMap::new();
    for &q in &poset.elements {
        b0.insert(q, inv.b0_at(q, &c)?);
        let want = series_expand(&a0[&q], truncation)?;
        residual.insert(q, want.sub(&inv.forward(q, &c)?));
    }
    Ok(InversionResult { b0, residual })
}

struct Inverter<'a> {
    poset: &'a ParabolicPoset,
    a0: &'a BTreeMap<u32, RatFun>,
    truncation: usize,
    cache: BTreeMap<(u32, Vec<BigRat>), CoeffVector>,
}

impl Inverter<'_> {
    /// `b_0(Q, ν_Q)` for the class of the point `h` of `𝔞_0`.
    fn b0_at(&self, q: u32, h: &[BigRat]) -> Result<RatFun> {
        let poset = self.poset;
        let mut sum = RatFun::zero();
        for &p in &poset.elements {
            if p & q != p {
                continue;
            }
            let spec = ConeSumSpec::new(
                poset.weights[&(p, q)].clone(),
                poset.cartan.tau_hat_values(p, q, h),
            )?;
            let shift = (poset.codim[&p] - poset.codim[&q]) as usize;
            let mut term = self.a0[&p].mul(&cone_sum_closed(&spec)?).shift(shift);
            if (q & !p).count_ones() % 2 == 1 {
                term = term.neg();
            }
            sum = sum.add(&term);
        }
        Ok(sum)
    }

    /// Series of `b_0(Q, ν_Q)`, cached by the class data it depends on.
    fn b0_series(&mut self, q: u32, h: &[BigRat]) -> Result<CoeffVector> {
        let key: Vec<BigRat> = self
            .poset
            .cartan
            .tau_hat_values(0, q, h)
            .iter()
            .map(frac_part)
            .collect();
        if let Some(s) = self.cache.get(&(q, key.clone())) {
            return Ok(s.clone());
        }
        let s = series_expand(&self.b0_at(q, h)?, self.truncation)?;
        self.cache.insert((q, key), s.clone());
        Ok(s)
    }

    /// `Σ_{P⊆Q} Σ_{ν_P ↦ ν_Q} τ_P^Q b_0(P, ν_P) t^{m(P) - m(Q)}` to the
    /// truncation order, with `ν_P` running over the lattice points
    /// `h + Σ_{α ∈ Δ_P^Q} m_α α^∨`.
    fn forward(&mut self, q: u32, h: &[BigRat]) -> Result<CoeffVector> {
        let poset = self.poset;
        let order = self.truncation;
        let mut total = CoeffVector::zeros(order);
        for &p in &poset.elements {
            if p & q != p {
                continue;
            }
            let shift = (poset.codim[&p] - poset.codim[&q]) as usize;
            if shift > order {
                continue;
            }
            let diff = bits(q & !p, poset.rank);
            let weights = poset.weights[&(p, q)].clone();
            let base = poset.cartan.tau_hat_values(p, q, h);
            // The τ-cone lies inside the cone where the coroot coordinates
            // `y_α` of the projection to `Q` are positive, so each `y_α` runs
            // over `⟨x_α⟩, ⟨x_α⟩ + 1, …` up to `order / p_α`.
            let ranges: Vec<Vec<BigInt>> = base
                .iter()
                .zip(&weights)
                .map(|(x, &w)| {
                    let mut ms = Vec::new();
                    let mut m = (-x).floor().to_integer() + BigInt::one();
                    while (x + BigRat::from_integer(m.clone())) * rat(w) <= rat(order as u64) {
                        ms.push(m.clone());
                        m += 1;
                    }
                    ms
                })
                .collect();
            if ranges.iter().any(|r| r.is_empty()) {
                continue;
            }
            let mut idx = vec![0usize; diff.len()];
            'points: loop {
                let mut point = h.to_vec();
                let mut e = BigRat::zero();
                for (k, &a) in diff.iter().enumerate() {
                    let m = BigRat::from_integer(ranges[k][idx[k]].clone());
                    point[a] += &m;
                    e += (&base[k] + m) * rat(weights[k]);
                }
                let inside = poset
                    .cartan
                    .tau_values(p, q, &point)
                    .iter()
                    .all(|v| v.is_positive());
                if inside && e <= rat((order - shift) as u64) {
                    if !e.is_integer() {
                        return Err(YmError::NonIntegerExponent(e.to_string()));
                    }
                    let e = e.to_integer().to_usize().expect("bounded by order");
                    let s = self.b0_series(p, &point)?;
                    total.add_shifted(&s, shift + e);
                }
                let mut pos = 0;
                loop {
                    if pos == idx.len() {
                        break 'points;
                    }
                    idx[pos] += 1;
                    if idx[pos] < ranges[pos].len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
            }
        }
        Ok(total)
    }
}

/// `count` random cone specifications with `1 ≤ p_α ≤ 6`, `x_α = a/q` with
/// `q ≤ 6` dividing `p_α`, and one to three factors.
pub fn random_cone_specs(seed: u64, count: usize) -> Vec<ConeSumSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=3);
            let mut weights = Vec::with_capacity(len);
            let mut classes = Vec::with_capacity(len);
            for _ in 0..len {
                let p: u64 = rng.gen_range(1..=6);
                let divisors: Vec<u64> = (1..=p).filter(|q| p.is_multiple_of(*q)).collect();
                let q = divisors[rng.gen_range(0..divisors.len())];
                let a: i64 = rng.gen_range(-2 * q as i64..=2 * q as i64);
                weights.push(p);
                classes.push(BigRat::new(BigInt::from(a), BigInt::from(q)));
            }
            ConeSumSpec::new(weights, classes).expect("integral by construction")
        })
        .collect()
}

/// `count` random points of `𝔞_0` for `A_rank` off every wall, with
/// coordinates `a/q`, `|a| ≤ 30`, `1 ≤ q ≤ 12`.
pub fn random_off_wall_samples(rank: usize, count: usize, seed: u64) -> Result<Vec<Vec<BigRat>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let h: Vec<BigRat> = (0..rank)
            .map(|_| {
                let a: i64 = rng.gen_range(-30..=30);
                let q: i64 = rng.gen_range(1..=12);
                BigRat::new(BigInt::from(a), BigInt::from(q))
            })
            .collect();
        match verify_langlands(rank, std::slice::from_ref(&h)) {
            Err(YmError::WallPoint) => continue,
            Err(e) => return Err(e),
            Ok(_) => out.push(h),
        }
    }
    Ok(out)
}

/// Outcome of the randomized appendix suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixReport {
    pub cone_specs: usize,
    pub cone_failures: Vec<ConeSumSpec>,
    pub langlands: Vec<(usize, usize, bool)>,
}

impl AppendixReport {
    pub fn holds(&self) -> bool {
        self.cone_failures.is_empty() && self.langlands.iter().all(|l| l.2)
    }
}

/// Compares truncated and closed cone sums on `cone_specs` random specs to
/// `order`, and checks the Langlands identities at `samples` random points
/// for each rank 1 to 3.
pub fn verify_appendix(
    seed: u64,
    cone_specs: usize,
    samples: usize,
    order: usize,
) -> Result<AppendixReport> {
    let mut cone_failures = Vec::new();
    for spec in random_cone_specs(seed, cone_specs) {
        let direct = cone_sum_truncated(&spec, order)?;
        let closed = series_expand(&cone_sum_closed(&spec)?, order)?;
        if direct != closed {
            cone_failures.push(spec);
        }
    }
    let mut langlands = Vec::new();
    for rank in 1..=3 {
        let pts = random_off_wall_samples(rank, samples, seed.wrapping_add(rank as u64))?;
        langlands.push((rank, pts.len(), verify_langlands(rank, &pts)?));
    }
    Ok(AppendixReport {
        cone_specs,
        cone_failures,
        langlands,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedforms::{lr_general, sp_flat, zagier_un, FlatSeriesRequest};
    use crate::gaugeseries::betti_degrees;

    fn q(a: i64, b: i64) -> BigRat {
        BigRat::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn cone_examples() {
        let s = ConeSumSpec::new(vec![2], vec![q(1, 2)]).unwrap();
        assert_eq!(
            cone_sum_truncated(&s, 7).unwrap(),
            CoeffVector::from_i64(&[0, 1, 0, 1, 0, 1, 0, 1])
        );
        assert_eq!(
            cone_sum_closed(&s).unwrap(),
            RatFun::new(Poly::t_pow(1), Poly::one_minus_t(2)).unwrap()
        );
        let s = ConeSumSpec::new(vec![2], vec![q(0, 1)]).unwrap();
        assert_eq!(
            cone_sum_truncated(&s, 6).unwrap(),
            CoeffVector::from_i64(&[0, 0, 1, 0, 1, 0, 1])
        );
        let s = ConeSumSpec::new(vec![4], vec![q(0, 1)]).unwrap();
        assert_eq!(
            cone_sum_closed(&s).unwrap(),
            RatFun::new(Poly::t_pow(4), Poly::one_minus_t(4)).unwrap()
        );
        let s = ConeSumSpec::new(vec![2, 3], vec![q(1, 2), q(1, 3)]).unwrap();
        let closed = cone_sum_closed(&s).unwrap();
        assert_eq!(
            closed,
            RatFun::new(
                Poly::t_pow(2),
                Poly::one_minus_t(2).mul(&Poly::one_minus_t(3))
            )
            .unwrap()
        );
        assert_eq!(
            cone_sum_truncated(&s, 10).unwrap(),
            series_expand(&closed, 10).unwrap()
        );
        assert!(ConeSumSpec::new(vec![2], vec![q(1, 3)]).is_err());
        // Fractional summands with an integral total.
        let s = ConeSumSpec::new(vec![2, 2], vec![q(1, 3), q(2, 3)]).unwrap();
        assert_eq!(
            cone_sum_truncated(&s, 12).unwrap(),
            series_expand(&cone_sum_closed(&s).unwrap(), 12).unwrap()
        );
        assert!(ConeSumSpec::new(vec![0], vec![q(0, 1)]).is_err());
    }

    #[test]
    fn randomized_suites() {
        let report = verify_appendix(7, 40, 60, 30).unwrap();
        assert!(report.holds(), "{report:?}");
    }

    #[test]
    fn langlands_rank_one() {
        assert!(verify_langlands(1, &[vec![q(3, 7)]]).unwrap());
        assert!(verify_langlands(1, &[vec![q(-5, 2)]]).unwrap());
        assert!(matches!(
            verify_langlands(1, &[vec![q(0, 1)]]),
            Err(YmError::WallPoint)
        ));
    }

    #[test]
    fn langlands_ranks_two_and_three() {
        let pts: Vec<Vec<BigRat>> = vec![
            vec![q(1, 3), q(-2, 5)],
            vec![q(-1, 7), q(3, 2)],
            vec![q(5, 4), q(2, 9)],
        ];
        assert!(verify_langlands(2, &pts).unwrap());
        let pts: Vec<Vec<BigRat>> = vec![
            vec![q(1, 3), q(-2, 5), q(7, 11)],
            vec![q(-3, 2), q(1, 13), q(-1, 6)],
        ];
        assert!(verify_langlands(3, &pts).unwrap());
    }

    #[test]
    fn levi_degrees_of_the_top_element() {
        for g in [
            GroupSpec::u(3),
            GroupSpec::su(4),
            GroupSpec::sp(3),
            GroupSpec::so_odd(3),
            GroupSpec::so_even(3),
        ] {
            let poset = ParabolicPoset::from_group(&g, TopClass::default_for(&g), 2).unwrap();
            assert_eq!(poset.levi_degrees[&poset.top()], betti_degrees(&g), "{g}");
        }
    }

    #[test]
    fn rank_one_round_trips() {
        for ell in 1..=3 {
            for k in 0..2 {
                let poset =
                    ParabolicPoset::from_group(&GroupSpec::u(2), TopClass::Degree(k), ell).unwrap();
                let res = invert_abstract(&poset, &poset.gauge_series(), 30).unwrap();
                assert_eq!(res.b0[&poset.top()], zagier_un(2, k, ell).unwrap());
                assert!(res.residual_is_zero());
            }
            let poset =
                ParabolicPoset::from_group(&GroupSpec::sp(1), TopClass::Trivial, ell).unwrap();
            let res = invert_abstract(&poset, &poset.gauge_series(), 30).unwrap();
            assert_eq!(res.b0[&poset.top()], sp_flat(1, ell).unwrap());
            assert!(res.residual_is_zero());
        }
    }

    #[test]
    fn trivial_poset() {
        let poset = ParabolicPoset::from_group(&GroupSpec::u(1), TopClass::Degree(3), 2).unwrap();
        assert_eq!(poset.elements, vec![0]);
        let a0 = poset.gauge_series();
        let res = invert_abstract(&poset, &a0, 20).unwrap();
        assert_eq!(res.b0[&0], a0[&0]);
        assert!(res.residual_is_zero());
    }

    #[test]
    fn higher_rank_round_trips() {
        for (g, c) in [
            (GroupSpec::u(3), TopClass::Degree(1)),
            (GroupSpec::sp(2), TopClass::Trivial),
            (GroupSpec::so_odd(2), TopClass::W2(1)),
            (GroupSpec::u(4), TopClass::Degree(2)),
            (GroupSpec::sp(3), TopClass::Trivial),
            (GroupSpec::so_odd(3), TopClass::W2(1)),
            (GroupSpec::so_even(3), TopClass::W2(1)),
        ] {
            let poset = ParabolicPoset::from_group(&g, c, 2).unwrap();
            let res = invert_abstract(&poset, &poset.gauge_series(), 24).unwrap();
            assert!(res.residual_is_zero(), "{g}");
            let want = lr_general(&FlatSeriesRequest::new(g, c, 2)).unwrap();
            assert_eq!(res.b0[&poset.top()], want, "{g}");
        }
    }
}

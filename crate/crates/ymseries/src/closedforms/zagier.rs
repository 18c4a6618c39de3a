//! Central Yang-Mills series for `U(n)` (Zagier's formula) and the flat
//! series of `SU(n)` derived from it.
//!
//! ```text
//! P^{U(n)}_t(X_YM(U(n))_{k/n,…,k/n})
//!   = Σ_{r=1}^{n} Σ_{n_1+⋯+n_r=n} (-1)^{r-1}
//!       ∏_{i=1}^{r} ∏_{j=1}^{n_i} (1+t^{2j-1})^{2ℓ} / ((1-t^{2n_i}) ∏_{j=1}^{n_i-1} (1-t^{2j})^2)
//!       · t^{2(ℓ-1) Σ_{i<j} n_i n_j} / ∏_{i=1}^{r-1} (1-t^{2(n_i+n_{i+1})})
//!       · t^{2 Σ_{i=1}^{r-1} (n_i+n_{i+1}) ⟨(n_1+⋯+n_i)(-k/n)⟩}
//! ```
//!
//! and, for `n ≥ 2`,
//!
//! ```text
//! P^{U(n)}_t(X_flat(U(n))) = (1+t)^{2ℓ}/(1-t^2) · P^{SU(n)}_t(X_flat(SU(n))).
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::{check_ell, cross_sum, frac_part, gl_block, int, nat_exponent};
use crate::error::Result;
use crate::exactalg::{sum_terms, BigRat, Poly, RatFun, Term};
use crate::levidata::compositions;

/// The `U(n)` central series of degree `k` as a list of summands.
pub(crate) fn zagier_terms(n: usize, k: i64, ell: u32) -> Result<Vec<Term>> {
    check_ell(ell)?;
    let slope = BigRat::new(BigInt::from(-k), BigInt::from(n as i64));
    let mut terms = Vec::new();
    for comp in compositions(n) {
        let r = comp.len();
        let mut term = Term::one();
        for &m in &comp {
            term = term.mul(&gl_block(m, ell));
        }
        let mut twist = BigRat::zero();
        let mut den = Vec::new();
        let mut partial = 0usize;
        for i in 0..r - 1 {
            partial += comp[i];
            let pair = comp[i] + comp[i + 1];
            den.push(2 * pair);
            twist += int(2 * pair as i64) * frac_part(&(int(partial as i64) * &slope));
        }
        let exponent = 2 * (ell as usize - 1) * cross_sum(&comp) + nat_exponent(&twist)?;
        term = term.mul(&Term::new(Poly::t_pow(exponent), den));
        if r % 2 == 0 {
            term = term.scale(-1);
        }
        terms.push(term);
    }
    Ok(terms)
}

/// `P^{U(n)}_t` of central Yang-Mills connections of degree `k`.
pub fn zagier_un(n: usize, k: i64, ell: u32) -> Result<RatFun> {
    Ok(sum_terms(&zagier_terms(n, k, ell)?))
}

/// `P^{SU(n)}_t(X_flat(SU(n)))`, obtained by dividing the degree-zero `U(n)`
/// series by `(1+t)^{2ℓ}/(1-t^2)`.
pub fn sun_flat(n: usize, ell: u32) -> Result<RatFun> {
    let terms: Vec<Term> = zagier_terms(n, 0, ell)?
        .into_iter()
        .map(|t| {
            // Each summand contains at least one GL block, whose factor
            // (1+t)^{2ℓ}/(1-t^2) is removed exactly.
            let num = t
                .num
                .div_exact(&Poly::one_plus_t(1).pow(2 * ell as u64))
                .expect("every summand carries (1+t)^{2ℓ}");
            let mut den = t.den.clone();
            let pos = den
                .iter()
                .position(|&a| a == 2)
                .expect("every summand carries 1-t^2");
            den.remove(pos);
            Term::new(num, den)
        })
        .collect();
    Ok(sum_terms(&terms))
}

//! Flat series of `SO(2n+1)` on the bundle with `w₂ ≡ k (mod 2)`.
//!
//! ```text
//! P_t^{SO(2n+1)}(X_flat(SO(2n+1))^{(-1)^k}) = Σ_{r=1}^{n} Σ_{n_1+⋯+n_r=n} (
//!     (-1)^r ∏_{i=1}^{r} G(n_i)
//!       · t^{(ℓ-1)(2Σ_{i<j} n_i n_j + n(n+1))}
//!         / ([∏_{i=1}^{r-1} (1-t^{2(n_i+n_{i+1})})] (1-t^{4n_r}))
//!       · t^{2Σ_{i=1}^{r-1}(n_i+n_{i+1}) + 4n_r⟨k/2⟩}
//!   + (-1)^{r-1} ∏_{i=1}^{r-1} G(n_i)
//!       · ∏_{j=1}^{n_r} (1+t^{4j-1})^{2ℓ} / ∏_{j=1}^{2n_r} (1-t^{2j})
//!       · t^{(ℓ-1)(2Σ_{i<j} n_i n_j + n(n+1) - n_r(n_r+1))}
//!         / ([∏_{i=1}^{r-2} (1-t^{2(n_i+n_{i+1})})] (1-ε(r) t^{2n_{r-1}+4n_r}))
//!       · t^{2Σ_{i=1}^{r-1}(n_i+n_{i+1}) + 2ε(r) n_r} )
//! ```
//!
//! with `G` and `ε` as for `Sp(n)`. In the second family the exponent sum
//! runs to `r-1` while the denominator product runs to `r-2`; the extra
//! summand `2(n_{r-1}+n_r)` together with `2ε(r)n_r` equals the boundary
//! exponent `2n_{r-1}+4n_r`, so the formula is transcribed as printed.

use num_bigint::BigInt;

use super::{bc_tail, check_ell, cross_sum, frac_part, gl_block, int, nat_exponent};
use crate::error::Result;
use crate::exactalg::{sum_terms, BigRat, Poly, RatFun, Term};
use crate::levidata::compositions;

/// `P_t^{SO(2n+1)}(X_flat(SO(2n+1))^{±1})` for `w₂ = 0` (`+1`) or `1` (`-1`).
pub fn so_odd_flat(n: usize, ell: u32, w2: u8) -> Result<RatFun> {
    check_ell(ell)?;
    let l1 = ell as usize - 1;
    let half_k = frac_part(&BigRat::new(BigInt::from(w2 % 2), BigInt::from(2)));
    let mut terms = Vec::new();
    for comp in compositions(n) {
        let r = comp.len();
        let nr = comp[r - 1];
        let cross = cross_sum(&comp);
        let consecutive: usize = (0..r - 1).map(|i| 2 * (comp[i] + comp[i + 1])).sum();

        let mut first = Term::one();
        for &m in &comp {
            first = first.mul(&gl_block(m, ell));
        }
        let mut den: Vec<usize> = (0..r - 1).map(|i| 2 * (comp[i] + comp[i + 1])).collect();
        den.push(4 * nr);
        let twist = nat_exponent(&(int(4 * nr as i64) * &half_k))?;
        let exponent = l1 * (2 * cross + n * (n + 1)) + consecutive + twist;
        first = first.mul(&Term::new(Poly::t_pow(exponent), den));
        if r % 2 == 1 {
            first = first.scale(-1);
        }
        terms.push(first);

        let mut second = Term::one();
        for &m in &comp[..r - 1] {
            second = second.mul(&gl_block(m, ell));
        }
        second = second.mul(&bc_tail(nr, ell));
        let mut den: Vec<usize> = (0..r.saturating_sub(2))
            .map(|i| 2 * (comp[i] + comp[i + 1]))
            .collect();
        let mut twist = consecutive;
        if r > 1 {
            den.push(2 * comp[r - 2] + 4 * nr);
            twist += 2 * nr;
        }
        let exponent = l1 * (2 * cross + n * (n + 1) - nr * (nr + 1)) + twist;
        second = second.mul(&Term::new(Poly::t_pow(exponent), den));
        if r % 2 == 0 {
            second = second.scale(-1);
        }
        terms.push(second);
    }
    Ok(sum_terms(&terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so3_both_bundles() {
        for ell in 1..=5u32 {
            let l2 = 2 * ell as u64;
            let a = Term::new(Poly::one_plus_t(3).pow(l2), vec![2, 4]).to_ratfun();
            for (w2, shift) in [(0u8, 2 * ell as usize + 2), (1, 2 * ell as usize)] {
                let b = Term::new(Poly::one_plus_t(1).pow(l2).shift(shift), vec![2, 4]).to_ratfun();
                assert_eq!(so_odd_flat(1, ell, w2).unwrap(), a.sub(&b));
            }
        }
    }
}

//! Flat series of `Sp(n)`.
//!
//! ```text
//! P_t^{Sp(n)}(X_flat(Sp(n))) = Σ_{r=1}^{n} Σ_{n_1+⋯+n_r=n} (
//!     (-1)^r ∏_{i=1}^{r} G(n_i)
//!       · t^{(ℓ-1)(2Σ_{i<j} n_i n_j + n(n+1))}
//!         / ([∏_{i=1}^{r-1} (1-t^{2(n_i+n_{i+1})})] (1-t^{2(n_r+1)}))
//!       · t^{2Σ_{i=1}^{r-1}(n_i+n_{i+1}) + 2(n_r+1)}
//!   + (-1)^{r-1} ∏_{i=1}^{r-1} G(n_i)
//!       · ∏_{j=1}^{n_r} (1+t^{4j-1})^{2ℓ} / ∏_{j=1}^{2n_r} (1-t^{2j})
//!       · t^{(ℓ-1)(2Σ_{i<j} n_i n_j + n(n+1) - n_r(n_r+1))}
//!         / ([∏_{i=1}^{r-2} (1-t^{2(n_i+n_{i+1})})] (1-ε(r) t^{2(n_{r-1}+2n_r+1)}))
//!       · t^{2Σ_{i=1}^{r-2}(n_i+n_{i+1}) + 2ε(r)(n_{r-1}+2n_r+1)} )
//! ```
//!
//! where `G(m) = ∏_{j=1}^{m} (1+t^{2j-1})^{2ℓ} / ((1-t^{2m}) ∏_{j=1}^{m-1} (1-t^{2j})^2)`
//! and `ε(1) = 0`, `ε(r) = 1` for `r > 1`.

use super::{bc_tail, check_ell, cross_sum, gl_block};
use crate::error::Result;
use crate::exactalg::{sum_terms, Poly, RatFun, Term};
use crate::levidata::compositions;

/// `P_t^{Sp(n)}(X_flat(Sp(n)))`.
pub fn sp_flat(n: usize, ell: u32) -> Result<RatFun> {
    check_ell(ell)?;
    let l1 = ell as usize - 1;
    let mut terms = Vec::new();
    for comp in compositions(n) {
        let r = comp.len();
        let nr = comp[r - 1];
        let cross = cross_sum(&comp);

        // First family.
        let mut first = Term::one();
        for &m in &comp {
            first = first.mul(&gl_block(m, ell));
        }
        let mut den: Vec<usize> = (0..r - 1).map(|i| 2 * (comp[i] + comp[i + 1])).collect();
        den.push(2 * (nr + 1));
        let twist: usize = (0..r - 1)
            .map(|i| 2 * (comp[i] + comp[i + 1]))
            .sum::<usize>()
            + 2 * (nr + 1);
        let exponent = l1 * (2 * cross + n * (n + 1)) + twist;
        first = first.mul(&Term::new(Poly::t_pow(exponent), den));
        if r % 2 == 1 {
            first = first.scale(-1);
        }
        terms.push(first);

        // Second family.
        let mut second = Term::one();
        for &m in &comp[..r - 1] {
            second = second.mul(&gl_block(m, ell));
        }
        second = second.mul(&bc_tail(nr, ell));
        let mut den: Vec<usize> = (0..r.saturating_sub(2))
            .map(|i| 2 * (comp[i] + comp[i + 1]))
            .collect();
        let mut twist: usize = (0..r.saturating_sub(2))
            .map(|i| 2 * (comp[i] + comp[i + 1]))
            .sum();
        if r > 1 {
            let boundary = 2 * (comp[r - 2] + 2 * nr + 1);
            den.push(boundary);
            twist += boundary;
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

//! Flat series of `SO(2n)`, `n ≥ 2`, on the bundle with `w₂ ≡ k (mod 2)`.
//!
//! ```text
//! P_t^{SO(2n)}(X_flat(SO(2n))^{(-1)^k})
//!   = Σ_{r=2}^{n} Σ_{n_1+⋯+n_r=n, n_r=1} (-1)^r ∏_{i=1}^{r} G(n_i)
//!       · t^{(ℓ-1)(2Σ_{i<j} n_i n_j + n(n-1))}
//!         / ([∏_{i=1}^{r-1} (1-t^{2(n_i+n_{i+1})})] (1-t^{2(n_{r-1}+1)}))
//!       · t^{2Σ_{i=1}^{r-2}(n_i+n_{i+1}) + 4(n_{r-1}+1)⟨k/2⟩}
//!   + Σ_{r=1}^{n-1} Σ_{n_1+⋯+n_r=n, n_r>1} (
//!       2(-1)^r ∏_{i=1}^{r} G(n_i)
//!         · t^{(ℓ-1)(2Σ_{i<j} n_i n_j + n(n-1))}
//!           / ([∏_{i=1}^{r-1} (1-t^{2(n_i+n_{i+1})})] (1-t^{4(n_r-1)}))
//!         · t^{2Σ_{i=1}^{r-1}(n_i+n_{i+1}) + 4(n_r-1)⟨k/2⟩}
//!     + (-1)^{r-1} ∏_{i=1}^{r-1} G(n_i)
//!         · (1+t^{2n_r-1})^{2ℓ} ∏_{j=1}^{n_r-1} (1+t^{4j-1})^{2ℓ}
//!           / ((1-t^{2n_r-2})(1-t^{2n_r}) ∏_{j=1}^{2n_r-2} (1-t^{2j}))
//!         · t^{(ℓ-1)(2Σ_{i<j} n_i n_j + n(n-1) - n_r(n_r-1))}
//!           / ([∏_{i=1}^{r-2} (1-t^{2(n_i+n_{i+1})})] (1-ε(r) t^{2(n_{r-1}+2n_r-1)}))
//!         · t^{2Σ_{i=1}^{r-2}(n_i+n_{i+1}) + 2ε(r)(n_{r-1}+2n_r-1)} )
//! ```
//!
//! with `G` and `ε` as for `Sp(n)`.

use num_bigint::BigInt;

use super::{check_ell, cross_sum, d_tail, frac_part, gl_block, int, nat_exponent};
use crate::error::{Result, YmError};
use crate::exactalg::{sum_terms, BigRat, Poly, RatFun, Term};
use crate::levidata::compositions;

/// `P_t^{SO(2n)}(X_flat(SO(2n))^{±1})` for `w₂ = 0` (`+1`) or `1` (`-1`).
pub fn so_even_flat(n: usize, ell: u32, w2: u8) -> Result<RatFun> {
    check_ell(ell)?;
    if n < 2 {
        return Err(YmError::UnsupportedRank {
            family: "SOeven".into(),
            n,
        });
    }
    let l1 = ell as usize - 1;
    let half_k = frac_part(&BigRat::new(BigInt::from(w2 % 2), BigInt::from(2)));
    let pair = |comp: &[usize], i: usize| 2 * (comp[i] + comp[i + 1]);
    let mut terms = Vec::new();
    for comp in compositions(n) {
        let r = comp.len();
        let nr = comp[r - 1];
        let cross = cross_sum(&comp);
        let mut blocks = Term::one();
        for &m in &comp {
            blocks = blocks.mul(&gl_block(m, ell));
        }

        if nr == 1 {
            let prev = comp[r - 2];
            let mut den: Vec<usize> = (0..r - 1).map(|i| pair(&comp, i)).collect();
            den.push(2 * (prev + 1));
            let twist: usize = (0..r - 2).map(|i| pair(&comp, i)).sum::<usize>()
                + nat_exponent(&(int(4 * (prev as i64 + 1)) * &half_k))?;
            let exponent = l1 * (2 * cross + n * (n - 1)) + twist;
            let mut term = blocks.mul(&Term::new(Poly::t_pow(exponent), den));
            if r % 2 == 1 {
                term = term.scale(-1);
            }
            terms.push(term);
            continue;
        }

        let mut den: Vec<usize> = (0..r - 1).map(|i| pair(&comp, i)).collect();
        den.push(4 * (nr - 1));
        let twist: usize = (0..r - 1).map(|i| pair(&comp, i)).sum::<usize>()
            + nat_exponent(&(int(4 * (nr as i64 - 1)) * &half_k))?;
        let exponent = l1 * (2 * cross + n * (n - 1)) + twist;
        let mut doubled = blocks.mul(&Term::new(Poly::t_pow(exponent), den)).scale(2);
        if r % 2 == 1 {
            doubled = doubled.scale(-1);
        }
        terms.push(doubled);

        let mut tail = Term::one();
        for &m in &comp[..r - 1] {
            tail = tail.mul(&gl_block(m, ell));
        }
        tail = tail.mul(&d_tail(nr, ell));
        let mut den: Vec<usize> = (0..r.saturating_sub(2)).map(|i| pair(&comp, i)).collect();
        let mut twist: usize = (0..r.saturating_sub(2)).map(|i| pair(&comp, i)).sum();
        if r > 1 {
            let boundary = 2 * (comp[r - 2] + 2 * nr - 1);
            den.push(boundary);
            twist += boundary;
        }
        let exponent = l1 * (2 * cross + n * (n - 1) - nr * (nr - 1)) + twist;
        tail = tail.mul(&Term::new(Poly::t_pow(exponent), den));
        if r % 2 == 0 {
            tail = tail.scale(-1);
        }
        terms.push(tail);
    }
    Ok(sum_terms(&terms))
}

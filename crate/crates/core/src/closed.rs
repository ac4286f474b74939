//! Closed-form W-polynomials for the chain families and the antichain.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::IntPolynomial;

/// `C(n, k)` by a running product; every intermediate quotient is exact.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `W(m ⊔ n, t) = sum_k C(m, k) C(n, k) t^k`.
///
/// A linear extension of two disjoint chains is fixed by its descent tops
/// (taken from the second chain) and descent bottoms (from the first).
pub fn w_disjoint_chains(m: u64, n: u64) -> IntPolynomial {
    IntPolynomial::new(
        (0..=m.min(n))
            .map(|k| binomial(m, k) * binomial(n, k))
            .collect(),
    )
}

/// `W(P_{m,n}, t) = W(m ⊔ n, t) - 1`: only the identity is lost.
pub fn w_pmn(m: u64, n: u64) -> IntPolynomial {
    &w_disjoint_chains(m, n) - &IntPolynomial::constant(BigInt::one())
}

/// Eulerian polynomial `A_p(t)`, the W-polynomial of the antichain on `[p]`.
///
/// Uses `A_p = (1 + (p-1) t) A_{p-1} + t (1 - t) A'_{p-1}`, `A_1 = 1`,
/// which never subtracts large terms. `p = 0` is treated like `p = 1`.
pub fn eulerian_polynomial(p: u64) -> IntPolynomial {
    let mut a = IntPolynomial::constant(BigInt::one());
    for q in 2..=p {
        let linear = IntPolynomial::new(vec![BigInt::one(), BigInt::from(q - 1)]);
        let t_one_minus_t = IntPolynomial::from_i64s(&[0, 1, -1]);
        a = &(&linear * &a) + &(&t_one_minus_t * &a.derivative());
    }
    a
}

/// Weakly rises then weakly falls. The zero polynomial counts as unimodal.
///
/// Interior zeros are only a violation when they create a valley, e.g.
/// `(1, 0, 1)`; leading zeros as in `(0, 4, 1)` are part of the rise.
pub fn is_unimodal(poly: &IntPolynomial) -> bool {
    let c = poly.coeffs();
    debug_assert!(c.iter().all(|x| !x.is_negative()));
    let peak = c.windows(2).position(|w| w[1] < w[0]).unwrap_or(c.len());
    c[peak.min(c.len())..].windows(2).all(|w| w[1] <= w[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linext::{w_polynomial_enumerative, DEFAULT_BUDGET};
    use crate::poset::Poset;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(42, 6), BigInt::from(5_245_786));
        assert_eq!(
            binomial(200, 100).to_string(),
            "90548514656103281165404177077484163874504589675413336841320"
        );
    }

    #[test]
    fn disjoint_chain_examples() {
        assert_eq!(w_disjoint_chains(2, 2), p(&[1, 4, 1]));
        assert_eq!(w_disjoint_chains(1, 9), p(&[1, 9]));
        assert_eq!(w_disjoint_chains(3, 4), p(&[1, 12, 18, 4]));
        let enumerated =
            w_polynomial_enumerative(&Poset::disjoint_chains(3, 4).unwrap(), DEFAULT_BUDGET)
                .unwrap();
        assert_eq!(enumerated, p(&[1, 12, 18, 4]));
    }

    #[test]
    fn pmn_examples() {
        assert_eq!(w_pmn(2, 2), p(&[0, 4, 1]));
        assert_eq!(w_pmn(1, 1), p(&[0, 1]));
        assert_eq!(
            w_pmn(36, 6),
            p(&[0, 216, 9450, 142800, 883575, 2261952, 1947792])
        );
    }

    #[test]
    fn formula_matches_enumeration() {
        for m in 1..=6u64 {
            for n in 1..=6u64 {
                let chains = Poset::disjoint_chains(m as usize, n as usize).unwrap();
                let pmn = Poset::pmn(m as usize, n as usize).unwrap();
                assert_eq!(
                    w_disjoint_chains(m, n),
                    w_polynomial_enumerative(&chains, DEFAULT_BUDGET).unwrap()
                );
                assert_eq!(
                    w_pmn(m, n),
                    w_polynomial_enumerative(&pmn, DEFAULT_BUDGET).unwrap()
                );
                assert_eq!(w_disjoint_chains(m, n), w_disjoint_chains(n, m));
                assert_eq!(&w_disjoint_chains(m, n) - &w_pmn(m, n), p(&[1]));
                assert_eq!(w_disjoint_chains(m, n).degree(), Some(m.min(n) as usize));
            }
        }
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian_polynomial(1), p(&[1]));
        assert_eq!(eulerian_polynomial(3), p(&[1, 4, 1]));
        assert_eq!(eulerian_polynomial(4), p(&[1, 11, 11, 1]));
        for q in 1..=7u64 {
            let anti = Poset::antichain(q as usize).unwrap();
            assert_eq!(
                eulerian_polynomial(q),
                w_polynomial_enumerative(&anti, DEFAULT_BUDGET).unwrap()
            );
        }
    }

    #[test]
    fn eulerian_palindromic_with_factorial_sum() {
        let mut factorial = BigInt::one();
        for q in 1..=12u64 {
            factorial *= BigInt::from(q);
            let a = eulerian_polynomial(q);
            let c = a.coeffs();
            assert_eq!(c.len() as u64, q);
            for k in 0..c.len() {
                assert_eq!(c[k], c[c.len() - 1 - k]);
            }
            assert_eq!(a.value_at_one(), factorial);
        }
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&p(&[1, 4, 1])));
        assert!(!is_unimodal(&p(&[1, 0, 1])));
        assert!(is_unimodal(&w_pmn(36, 6)));
        assert!(is_unimodal(&p(&[])));
        assert!(is_unimodal(&p(&[0, 4, 1])));
        assert!(is_unimodal(&p(&[3, 3, 3])));
        assert!(!is_unimodal(&p(&[2, 1, 2])));
        assert!(!is_unimodal(&p(&[1, 3, 0, 2])));
    }
}

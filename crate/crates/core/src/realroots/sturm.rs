//! Sturm chains over the integers.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::squarefree::is_squarefree;
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// A rational number or one of the two infinities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtendedRational {
    NegInfinity,
    Finite(BigRational),
    PosInfinity,
}

impl ExtendedRational {
    pub fn finite(x: BigRational) -> Self {
        Self::Finite(x)
    }

    pub fn from_integer(x: i64) -> Self {
        Self::Finite(BigRational::from_integer(x.into()))
    }
}

impl From<BigRational> for ExtendedRational {
    fn from(x: BigRational) -> Self {
        Self::Finite(x)
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NegInfinity => f.write_str("-inf"),
            Self::Finite(x) => write!(f, "{x}"),
            Self::PosInfinity => f.write_str("+inf"),
        }
    }
}

/// `p_0 = q`, `p_1 = q'`, `p_{i+1} = -prem(p_{i-1}, p_i) / c_i` with every
/// scaling factor positive, ending at a non-zero constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SturmChain {
    polys: Vec<IntPolynomial>,
}

impl SturmChain {
    /// Builds the chain of a squarefree, non-constant polynomial.
    ///
    /// Each remainder is divided by its (positive) content, which keeps
    /// coefficient growth in check without disturbing any sign.
    pub fn new(q: &IntPolynomial) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if q.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        let mut polys = vec![q.clone(), q.derivative().primitive_part()];
        loop {
            let n = polys.len();
            let r = -polys[n - 2].pseudo_rem(&polys[n - 1]).primitive_part();
            if r.is_zero() {
                break;
            }
            polys.push(r);
        }
        if !polys.last().unwrap().is_constant() {
            return Err(Error::NotSquarefree);
        }
        Ok(Self { polys })
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Sign changes in the chain evaluated at `x`, zeros skipped.
    pub fn sign_variations_at(&self, x: &ExtendedRational) -> usize {
        let signs = self.polys.iter().map(|p| match x {
            ExtendedRational::Finite(v) => p.sign_at(v),
            ExtendedRational::PosInfinity => lead_sign(p),
            ExtendedRational::NegInfinity => {
                let s = lead_sign(p);
                if p.degree().unwrap_or(0) % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        });
        count_variations(signs)
    }

    /// Distinct real roots of the chain's first entry in `(lo, hi]`.
    pub fn count_roots(&self, lo: &ExtendedRational, hi: &ExtendedRational) -> Result<usize> {
        if lo >= hi {
            return Err(Error::EmptyInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        if let ExtendedRational::Finite(v) = lo {
            if self.polys[0].sign_at(v) == 0 {
                return Err(Error::EndpointRoot(v.to_string()));
            }
        }
        let v_lo = self.sign_variations_at(lo);
        let v_hi = self.sign_variations_at(hi);
        Ok(v_lo - v_hi)
    }
}

fn lead_sign(p: &IntPolynomial) -> i8 {
    match p.leading() {
        Some(c) if c.is_negative() => -1,
        Some(c) if !c.is_zero() => 1,
        _ => 0,
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots of a squarefree `q` in `(lo, hi]`.
pub fn count_real_roots(
    q: &IntPolynomial,
    lo: &ExtendedRational,
    hi: &ExtendedRational,
) -> Result<usize> {
    if !is_squarefree(q) {
        return Err(Error::NotSquarefree);
    }
    if q.is_constant() {
        return Ok(0);
    }
    SturmChain::new(q)?.count_roots(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtendedRational::{NegInfinity, PosInfinity};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn chain_of_t2_minus_1() {
        let chain = SturmChain::new(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(chain.polys(), &[p(&[-1, 0, 1]), p(&[0, 1]), p(&[1])]);
        assert_eq!(chain.sign_variations_at(&NegInfinity), 2);
        assert_eq!(chain.sign_variations_at(&PosInfinity), 0);
        assert_eq!(
            chain.sign_variations_at(&ExtendedRational::from_integer(0)),
            1
        );
    }

    #[test]
    fn chain_of_t2_plus_1() {
        let chain = SturmChain::new(&p(&[1, 0, 1])).unwrap();
        assert_eq!(chain.len(), 3);
        assert!(chain.polys()[2].leading().unwrap().is_negative());
        assert_eq!(chain.sign_variations_at(&NegInfinity), 1);
        assert_eq!(chain.sign_variations_at(&PosInfinity), 1);
    }

    #[test]
    fn chain_of_p22() {
        // t^2 + 4t, (2t + 4) -> t + 2, prem = -4 so the tail is +4 -> 1.
        let chain = SturmChain::new(&p(&[0, 4, 1])).unwrap();
        assert_eq!(chain.polys(), &[p(&[0, 4, 1]), p(&[2, 1]), p(&[1])]);
        assert_eq!(chain.count_roots(&NegInfinity, &PosInfinity).unwrap(), 2);
    }

    #[test]
    fn negative_leading_coefficient_keeps_sign_pattern() {
        // -(t - 1)(t - 2)(t - 3): leading coefficient negative throughout.
        let q = p(&[6, -11, 6, -1]);
        let chain = SturmChain::new(&q).unwrap();
        assert_eq!(chain.count_roots(&NegInfinity, &PosInfinity).unwrap(), 3);
        let half = |n: i64| ExtendedRational::Finite(BigRational::new(n.into(), 2.into()));
        assert_eq!(chain.count_roots(&half(3), &half(5)).unwrap(), 1);
        assert_eq!(chain.count_roots(&half(1), &half(3)).unwrap(), 1);
        assert_eq!(chain.count_roots(&half(7), &PosInfinity).unwrap(), 0);
    }

    #[test]
    fn count_examples() {
        let two = ExtendedRational::from_integer(2);
        let zero = ExtendedRational::from_integer(0);
        assert_eq!(count_real_roots(&p(&[-2, 0, 1]), &zero, &two).unwrap(), 1);
        assert_eq!(
            count_real_roots(&p(&[1, 0, 1]), &NegInfinity, &PosInfinity).unwrap(),
            0
        );
        // Half-open: a root at the right endpoint counts.
        assert_eq!(count_real_roots(&p(&[-2, 1]), &zero, &two).unwrap(), 1);
        assert_eq!(
            count_real_roots(&p(&[-2, 1]), &two, &PosInfinity),
            Err(Error::EndpointRoot("2".into()))
        );
        assert!(matches!(
            count_real_roots(&p(&[1, 1]), &two, &zero),
            Err(Error::EmptyInterval { .. })
        ));
    }

    #[test]
    fn rejects_non_squarefree() {
        assert_eq!(SturmChain::new(&p(&[1, -2, 1])), Err(Error::NotSquarefree));
        assert_eq!(
            count_real_roots(&p(&[1, -2, 1]), &NegInfinity, &PosInfinity),
            Err(Error::NotSquarefree)
        );
        assert_eq!(SturmChain::new(&p(&[3])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn degrees_strictly_decrease() {
        let q = crate::closed::w_pmn(11, 11).split_zero_root().1;
        let chain = SturmChain::new(&q).unwrap();
        let degrees: Vec<_> = chain.polys().iter().map(|p| p.degree().unwrap()).collect();
        assert!(degrees.windows(2).all(|w| w[1] < w[0]));
        assert_eq!(*degrees.last().unwrap(), 0);
    }
}

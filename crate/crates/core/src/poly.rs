//! Dense univariate polynomials with exact coefficients.
//!
//! Both types store coefficients in ascending degree with trailing zeros
//! trimmed, so the zero polynomial has an empty coefficient vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for zero and for non-zero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Gcd of the coefficients, always non-negative. Zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the (positive) content; the sign of every coefficient is kept.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Primitive part with a positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive_part();
        match p.leading() {
            Some(lc) if lc.is_negative() => -p,
            _ => p,
        }
    }

    /// Order of vanishing at `t = 0` and the cofactor: `self = t^k * rest`.
    pub fn split_zero_root(&self) -> (usize, Self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if self.is_zero() {
            return (0, Self::zero());
        }
        (
            k,
            Self {
                coeffs: self.coeffs[k..].to_vec(),
            },
        )
    }

    /// Pseudo-remainder of `self` by `divisor`, scaling the dividend only by
    /// positive factors `|lc(divisor)|`. The result therefore has the same
    /// sign behaviour as the true remainder up to a positive constant.
    ///
    /// Panics if `divisor` is zero.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        let d = divisor
            .degree()
            .expect("pseudo-remainder by zero polynomial");
        let lc = divisor.leading().unwrap();
        let lc_abs = lc.abs();
        let lc_negative = lc.is_negative();
        let mut rem = self.coeffs.clone();
        while rem.len() > d && !rem.is_empty() {
            let top = rem.len() - 1;
            let lead = rem[top].clone();
            if lead.is_zero() {
                rem.pop();
                continue;
            }
            let factor = if lc_negative { -lead } else { lead };
            let shift = top - d;
            for c in rem.iter_mut() {
                *c *= &lc_abs;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &factor * b;
            }
            debug_assert!(rem[top].is_zero());
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Self::new(rem)
    }

    /// Quotient `self / divisor` when the division is exact over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let d = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree().unwrap();
        if n < d {
            return None;
        }
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for shift in (0..=n - d).rev() {
            let top = &rem[shift + d];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &q * b;
            }
            quot[shift] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// Greatest common divisor, normalized to be primitive with positive
    /// leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.normalized();
        let mut b = other.normalized();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).normalized();
            a = b;
            b = r;
        }
        a
    }

    /// Sign of `self(x)` as -1, 0 or 1, evaluated exactly.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        // den^deg * p(num/den) has the sign of p(x) because den > 0.
        let num = x.numer();
        let den = x.denom();
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients rounded to `f64`.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Exact substitution `t -> t / c`.
    pub fn substitute_scaled(&self, c: &BigInt) -> RatPolynomial {
        let mut den = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(BigRational::new(a.clone(), den.clone()));
            den *= c;
        }
        RatPolynomial::new(out)
    }

    /// `c^deg * self(t / c)`, an integer polynomial with the same root
    /// structure scaled by `c`.
    pub fn rescale(&self, c: &BigInt) -> Self {
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        let mut pow = BigInt::one();
        let mut out = vec![BigInt::zero(); deg + 1];
        for k in (0..=deg).rev() {
            out[k] = &self.coeffs[k] * &pow;
            pow *= c;
        }
        Self::new(out)
    }

    /// Sum of the coefficients, i.e. the value at `t = 1`.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in terms.iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match (*k, magnitude.is_one()) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{magnitude}*t")?,
                (k, true) => write!(f, "t^{k}")?,
                (k, false) => write!(f, "{magnitude}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -self.clone()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $trait:ident, $method:ident) => {
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(IntPolynomial, Add, add);
forward_owned_binop!(IntPolynomial, Sub, sub);
forward_owned_binop!(IntPolynomial, Mul, mul);

#[derive(Serialize, Deserialize)]
struct CoeffsRepr {
    coeffs: Vec<String>,
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CoeffsRepr {
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CoeffsRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

/// Polynomial with exact rational coefficients in lowest terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Exact evaluation at the binary rational equal to `x`, rounded once at the end.
    ///
    /// Panics if `x` is not finite.
    pub fn eval_f64_exact(&self, x: f64) -> f64 {
        let xr = BigRational::from_float(x).expect("finite evaluation point");
        ratio_to_f64(&self.eval(&xr))
    }

    /// Multiplies through by the lcm of the denominators. The result is
    /// primitive up to the content of the numerators.
    pub fn clear_denominators(&self) -> IntPolynomial {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
    }
}

impl From<&IntPolynomial> for RatPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        RatPolynomial::new(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let magnitude = c.abs();
            match k {
                0 => write!(f, "{sep}{magnitude}")?,
                _ if magnitude.is_one() => write!(f, "{sep}{}", power(k))?,
                _ => write!(f, "{sep}({magnitude})*{}", power(k))?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn power(k: usize) -> String {
    if k == 1 {
        "t".to_string()
    } else {
        format!("t^{k}")
    }
}

/// Correctly rounded conversion of an exact rational.
pub fn ratio_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn display_matches_ascending_style() {
        assert_eq!(p(&[0, 4, 1]).to_string(), "4*t + t^2");
        assert_eq!(p(&[1, 4, 1]).to_string(), "1 + 4*t + t^2");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "-1 + t^2");
        assert_eq!(p(&[1, -2, 1]).to_string(), "1 - 2*t + t^2");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn pseudo_remainder_uses_positive_scaling() {
        // t^2 + 1 by -2t: true remainder is 1, one elimination step scales by |lc| = 2.
        let r = p(&[1, 0, 1]).pseudo_rem(&p(&[0, -2]));
        assert_eq!(r, p(&[2]));
        let r = p(&[-1, 0, 1]).pseudo_rem(&p(&[0, 2]));
        assert_eq!(r, p(&[-2]));
        // Two steps: remainder of t^2 + t + 1 by 1 - 2t is 7/4, scaled by 2^2.
        let r = p(&[1, 1, 1]).pseudo_rem(&p(&[1, -2]));
        assert_eq!(r, p(&[7]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[0, 1])), None);
        assert_eq!(p(&[2, 2]).div_exact(&p(&[1, 2])), None);
    }

    #[test]
    fn gcd_is_normalized() {
        let a = &p(&[-1, 1]) * &p(&[2, 3]);
        let b = &p(&[-1, 1]) * &p(&[5, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[0, -6]).gcd(&p(&[0, 0, 4])), p(&[0, 1]));
        assert!(p(&[1, 0, 1]).gcd(&p(&[0, 2])).is_constant());
    }

    #[test]
    fn sign_at_rational_points() {
        let q = p(&[-2, 0, 1]);
        assert_eq!(q.sign_at(&BigRational::new(3.into(), 2.into())), 1);
        assert_eq!(q.sign_at(&BigRational::new(7.into(), 5.into())), -1);
        assert_eq!(
            p(&[-1, 2]).sign_at(&BigRational::new(1.into(), 2.into())),
            0
        );
    }

    #[test]
    fn substitution_and_rescale() {
        let w = p(&[0, 4, 1]);
        let f = w.substitute_scaled(&BigInt::from(4));
        assert_eq!(f.coeff(1), BigRational::one());
        assert_eq!(f.coeff(2), BigRational::new(1.into(), 16.into()));
        assert_eq!(w.rescale(&BigInt::from(4)), p(&[0, 16, 1]));
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&p(&[0, 216, 9450])).unwrap();
        assert_eq!(s, r#"{"coeffs":["0","216","9450"]}"#);
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p(&[0, 216, 9450]));
    }
}

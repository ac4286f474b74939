//! Exact real-root certification for integer polynomials.
//!
//! [`analyze`] splits off the root at zero, takes a squarefree
//! decomposition, counts the real roots of each factor with a Sturm chain
//! and isolates the distinct non-zero real roots by bisection. All counts
//! are exact; the optional complex approximations come from a separate
//! floating-point pass.

mod approx;
mod isolate;
mod squarefree;
mod sturm;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::poly::IntPolynomial;
use crate::{Error, Result};

pub use approx::{all_roots, conjugate_pairs, relative_residual};
pub use isolate::{cauchy_bound, isolate_all_real_roots, isolate_real_roots, refine_interval};
pub use squarefree::{expand, is_squarefree, squarefree_decomposition, squarefree_part};
pub use sturm::{count_real_roots, ExtendedRational, SturmChain};

/// Root census of an integer polynomial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootReport {
    pub degree: usize,
    pub zero_root_multiplicity: usize,
    pub distinct_real_roots: usize,
    pub real_roots_with_multiplicity: usize,
    pub nonreal_with_multiplicity: usize,
    /// One open interval per distinct non-zero real root, ascending.
    #[serde(with = "interval_strings")]
    pub isolating_intervals: Vec<(BigRational, BigRational)>,
    /// Distinct non-real roots, conjugates adjacent, as `[re, im]`.
    #[serde(with = "complex_pairs")]
    pub nonreal_approx: Option<Vec<Complex64>>,
}

impl RootReport {
    pub fn is_real_rooted(&self) -> bool {
        self.nonreal_with_multiplicity == 0
    }

    /// The report without the floating-point part, i.e. the certificate.
    pub fn exact_part(&self) -> RootReport {
        RootReport {
            nonreal_approx: None,
            ..self.clone()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    RealRooted,
    /// Number of non-real roots counted with multiplicity.
    NonReal(usize),
}

/// Full root census of a non-zero polynomial.
pub fn analyze(p: &IntPolynomial, want_approx: bool) -> Result<RootReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = p.degree().unwrap();
    let (zero_mult, rest) = p.split_zero_root();
    let factors = squarefree_decomposition(&rest)?;

    let mut distinct = usize::from(zero_mult > 0);
    let mut with_mult = zero_mult;
    let mut nonreal_factors = Vec::new();
    for (q, m) in &factors {
        let real = count_real_roots(
            q,
            &ExtendedRational::NegInfinity,
            &ExtendedRational::PosInfinity,
        )?;
        distinct += real;
        with_mult += real * m;
        let deg = q.degree().unwrap();
        if real < deg {
            nonreal_factors.push((q, deg - real));
        }
    }

    let isolating_intervals = if rest.is_constant() {
        Vec::new()
    } else {
        let core = squarefree_part(&rest)?;
        let mut intervals = isolate_all_real_roots(&core)?;
        if zero_mult > 0 {
            exclude_zero(&core, &mut intervals);
        }
        intervals
    };
    debug_assert_eq!(
        isolating_intervals.len() + usize::from(zero_mult > 0),
        distinct
    );

    let nonreal_approx = (want_approx && !nonreal_factors.is_empty()).then(|| {
        let mut out = Vec::new();
        for (q, nonreal) in nonreal_factors {
            let roots = all_roots(&q.to_f64_coeffs());
            out.extend(conjugate_pairs(&roots, nonreal));
        }
        out.sort_by(|a, b| a.re.total_cmp(&b.re).then(b.im.total_cmp(&a.im)));
        out
    });

    Ok(RootReport {
        degree,
        zero_root_multiplicity: zero_mult,
        distinct_real_roots: distinct,
        real_roots_with_multiplicity: with_mult,
        nonreal_with_multiplicity: degree - with_mult,
        isolating_intervals,
        nonreal_approx,
    })
}

/// Cuts the interval straddling 0 at 0, keeping the half with the root of
/// `core`. `core` does not vanish at 0.
fn exclude_zero(core: &IntPolynomial, intervals: &mut [(BigRational, BigRational)]) {
    let zero = BigRational::zero();
    for (a, b) in intervals.iter_mut() {
        if *a < zero && zero < *b {
            if core.sign_at(a) * core.sign_at(&zero) < 0 {
                *b = zero;
            } else {
                *a = zero;
            }
            return;
        }
    }
}

/// Whether every complex root of `p` is real.
pub fn is_real_rooted(p: &IntPolynomial) -> Result<Verdict> {
    let report = analyze(p, false)?;
    Ok(match report.nonreal_with_multiplicity {
        0 => Verdict::RealRooted,
        k => Verdict::NonReal(k),
    })
}

/// `gcd(p, p')` is constant, i.e. no repeated complex root.
pub fn is_simple_rooted(p: &IntPolynomial) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(is_squarefree(p))
}

mod interval_strings {
    use num_rational::BigRational;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(
        v: &[(BigRational, BigRational)],
        s: S,
    ) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|(a, b)| [a.to_string(), b.to_string()])
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Vec<(BigRational, BigRational)>, D::Error> {
        let raw = Vec::<[String; 2]>::deserialize(d)?;
        raw.into_iter()
            .map(|[a, b]| {
                Ok((
                    a.parse().map_err(D::Error::custom)?,
                    b.parse().map_err(D::Error::custom)?,
                ))
            })
            .collect()
    }
}

mod complex_pairs {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Vec<Complex64>>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref()
            .map(|zs| zs.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>())
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Option<Vec<Complex64>>, D::Error> {
        let raw = Option::<Vec<[f64; 2]>>::deserialize(d)?;
        Ok(raw.map(|zs| {
            zs.into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect()
        }))
    }
}

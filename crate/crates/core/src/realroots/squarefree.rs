//! Squarefree decomposition over the integers (Yun's algorithm).

use num_bigint::BigInt;

use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Factors `p = c * prod q_i^{m_i}` with each `q_i` squarefree, primitive,
/// with positive leading coefficient, and pairwise coprime. Multiplicities
/// are strictly increasing. A constant input yields an empty list.
pub fn squarefree_decomposition(p: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.normalized();
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0).expect("gcd divides f");
    let c = df.div_exact(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut multiplicity = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        let next_b = b.div_exact(&a).expect("gcd divides b");
        let next_c = d.div_exact(&a).expect("gcd divides d");
        if !a.is_constant() {
            out.push((a, multiplicity));
        }
        d = &next_c - &next_b.derivative();
        b = next_b;
        multiplicity += 1;
    }
    Ok(out)
}

/// Product of the distinct irreducible-root factors: `p / gcd(p, p')`,
/// primitive with positive leading coefficient.
pub fn squarefree_part(p: &IntPolynomial) -> Result<IntPolynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.normalized();
    let g = f.gcd(&f.derivative());
    Ok(f.div_exact(&g).expect("gcd divides f").normalized())
}

/// `gcd(p, p')` is constant.
pub fn is_squarefree(p: &IntPolynomial) -> bool {
    !p.is_zero() && p.gcd(&p.derivative()).is_constant()
}

/// Multiplies the decomposition back out; used to check reconstructions.
pub fn expand(factors: &[(IntPolynomial, usize)]) -> IntPolynomial {
    let mut acc = IntPolynomial::constant(BigInt::from(1));
    for (q, m) in factors {
        for _ in 0..*m {
            acc = &acc * q;
        }
    }
    acc
}

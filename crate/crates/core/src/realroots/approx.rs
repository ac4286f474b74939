//! Floating-point approximation of all complex roots (Aberth-Ehrlich).
//!
//! Only used to display non-real roots; exact verdicts never depend on it.

use num_complex::Complex64;

pub const MAX_ITERATIONS: usize = 1000;
pub const STEP_TOLERANCE: f64 = 1e-12;
/// Fixed angular offset for the initial circle, keeps starts off the real axis.
const ANGLE_OFFSET: f64 = 0.4;

fn eval_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `a / b` with `b` rescaled first, so `|b|^2` cannot overflow.
fn scaled_div(a: Complex64, b: Complex64) -> Complex64 {
    let s = b.re.abs().max(b.im.abs());
    if s == 0.0 || !s.is_finite() {
        return a / b;
    }
    (a / s) / (b / s)
}

/// Newton correction `p(z) / p'(z)`. For `|z| > 1` it is computed from the
/// reversed polynomial at `1/z`, so intermediate values stay bounded.
fn newton_ratio(coeffs: &[f64], z: Complex64) -> Complex64 {
    if z.norm() <= 1.0 {
        let (p, dp) = eval_with_derivative(coeffs, z);
        return scaled_div(p, dp);
    }
    let n = (coeffs.len() - 1) as f64;
    let w = scaled_div(Complex64::new(1.0, 0.0), z);
    let mut q = Complex64::new(0.0, 0.0);
    let mut dq = Complex64::new(0.0, 0.0);
    for &c in coeffs {
        dq = dq * w + q;
        q = q * w + c;
    }
    scaled_div(z, Complex64::new(n, 0.0) - w * scaled_div(dq, q))
}

pub fn eval(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// All roots of the polynomial with ascending coefficients `coeffs`.
///
/// Starts on a circle of Cauchy-bound radius and runs simultaneous Aberth
/// corrections until the largest relative step falls below
/// [`STEP_TOLERANCE`] or [`MAX_ITERATIONS`] is reached, then applies two
/// Newton polishing steps per root.
pub fn all_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = coeffs[n].abs();
    let radius = 1.0 + coeffs[..n].iter().map(|c| c.abs()).fold(0.0, f64::max) / lead;
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / n as f64 + ANGLE_OFFSET;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let z = roots[k];
            if eval(coeffs, z) == Complex64::new(0.0, 0.0) {
                continue;
            }
            let newton = newton_ratio(coeffs, z);
            let repulsion: Complex64 = roots
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &w)| scaled_div(Complex64::new(1.0, 0.0), z - w))
                .sum();
            let step = scaled_div(newton, Complex64::new(1.0, 0.0) - newton * repulsion);
            if step.is_finite() {
                roots[k] = z - step;
                max_step = max_step.max(step.norm() / z.norm().max(1.0));
            }
        }
        if max_step < STEP_TOLERANCE {
            break;
        }
    }
    for z in roots.iter_mut() {
        for _ in 0..2 {
            let step = newton_ratio(coeffs, *z);
            if step.is_finite() {
                *z -= step;
            }
        }
    }
    roots
}

/// `|p(z)| / max |a_i|`
pub fn relative_residual(coeffs: &[f64], z: Complex64) -> f64 {
    let norm = coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max);
    eval(coeffs, z).norm() / norm
}

/// Picks the `count` roots furthest from the real axis and returns them as
/// exact conjugate pairs `(re, ±im)`, sorted by real part then imaginary part.
pub fn conjugate_pairs(roots: &[Complex64], count: usize) -> Vec<Complex64> {
    let mut by_imag: Vec<Complex64> = roots.to_vec();
    by_imag.sort_by(|a, b| b.im.abs().total_cmp(&a.im.abs()));
    let mut chosen: Vec<Complex64> = by_imag.into_iter().take(count).collect();
    let mut out = Vec::with_capacity(count);
    while let Some(z) = chosen.pop() {
        let partner = chosen
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| (**a - z.conj()).norm().total_cmp(&(**b - z.conj()).norm()))
            .map(|(i, _)| i);
        let (re, im) = match partner {
            Some(i) => {
                let w = chosen.swap_remove(i);
                ((z.re + w.re) / 2.0, (z.im.abs() + w.im.abs()) / 2.0)
            }
            None => (z.re, z.im.abs()),
        };
        out.push(Complex64::new(re, im));
        out.push(Complex64::new(re, -im));
    }
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(b.im.total_cmp(&a.im)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_with_complex_pair() {
        // t^2 + 2t + 5 = (t + 1 - 2i)(t + 1 + 2i)
        let roots = all_roots(&[5.0, 2.0, 1.0]);
        let pairs = conjugate_pairs(&roots, 2);
        assert!((pairs[0] - Complex64::new(-1.0, 2.0)).norm() < 1e-12);
        assert!((pairs[1] - Complex64::new(-1.0, -2.0)).norm() < 1e-12);
    }

    #[test]
    fn real_roots_converge() {
        // (t-1)(t-2)(t-3)(t+4)
        let c = [-24.0, 38.0, -13.0, -2.0, 1.0];
        let mut roots: Vec<f64> = all_roots(&c).iter().map(|z| z.re).collect();
        roots.sort_by(f64::total_cmp);
        for (got, want) in roots.iter().zip([-4.0, 1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-10);
        }
        for z in all_roots(&c) {
            assert!(relative_residual(&c, z) < 1e-12);
        }
    }

    #[test]
    fn huge_start_radius_still_converges() {
        // Twelve roots of modulus <= 50 with a Cauchy bound near 2.5e14.
        let c: Vec<f64> = [
            -245724610560000i64,
            -184665468108800,
            -65925414912000,
            26356555757568,
            -2097141269504,
            -10979150800,
            7016720600,
            -184028476,
            -5350122,
            260100,
            -475,
            -92,
            1,
        ]
        .iter()
        .map(|&x| x as f64)
        .collect();
        for z in all_roots(&c) {
            assert!(z.norm() < 60.0, "{z}");
            assert!(relative_residual(&c, z) < 1e-8, "{z}");
        }
    }

    #[test]
    fn constant_has_no_roots() {
        assert!(all_roots(&[3.0]).is_empty());
    }
}

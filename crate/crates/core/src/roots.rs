//! Complex roots of integer polynomials.
//!
//! Exact zero and small integer roots are divided out first; what remains is
//! handed to the companion matrix eigen-solver and polished with Newton steps.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::SparsePolynomial;

/// Relative residual below which a root is accepted.
pub const ROOT_RESIDUAL_TOLERANCE: f64 = 1e-8;
/// Integer candidates `|r| <= INTEGER_ROOT_SEARCH` are tried by exact division.
pub const INTEGER_ROOT_SEARCH: i64 = 64;
const NEWTON_STEPS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Root {
    pub re: f64,
    pub im: f64,
    /// `|P(r)| / (Σ|c_k| max(1, |r|)^deg)`.
    pub residual: f64,
    /// Bound on the distance to a true root, zero for exact integer roots.
    pub uncertainty: f64,
    pub exact: bool,
}

impl Root {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn modulus(&self) -> f64 {
        self.value().norm()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootReport {
    pub degree: usize,
    pub roots: Vec<Root>,
    pub max_residual: f64,
    /// Set when some root's residual is at or above [`ROOT_RESIDUAL_TOLERANCE`].
    pub ill_conditioned: bool,
}

impl RootReport {
    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(Root::modulus).fold(0.0, f64::max)
    }
}

/// All complex roots of `p`, with multiplicity.
pub fn find_roots(p: &SparsePolynomial) -> Result<RootReport> {
    let degree = p
        .degree()
        .ok_or_else(|| Error::contract("the zero polynomial has no finite root set"))?;
    let mut roots = Vec::with_capacity(degree);
    let mut rest = p.clone();

    let push_exact = |roots: &mut Vec<Root>, r: i64| {
        roots.push(Root {
            re: r as f64,
            im: 0.0,
            residual: 0.0,
            uncertainty: 0.0,
            exact: true,
        })
    };

    while rest.degree().unwrap_or(0) > 0 && rest.coeff(0).is_zero() {
        rest = divide_by_x(&rest);
        push_exact(&mut roots, 0);
    }
    for r in (1..=INTEGER_ROOT_SEARCH).flat_map(|k| [k, -k]) {
        loop {
            let c0 = rest.coeff(0);
            if rest.degree().unwrap_or(0) == 0 || !(&c0 % BigInt::from(r)).is_zero() {
                break;
            }
            match rest.deflate_integer_root(&BigInt::from(r)) {
                Some(q) => {
                    rest = q;
                    push_exact(&mut roots, r);
                }
                None => break,
            }
        }
    }

    for z in companion_roots(&rest) {
        let z = polish(p, z);
        let residual = relative_residual(p, z);
        roots.push(Root {
            re: z.re,
            im: z.im,
            residual,
            uncertainty: uncertainty(p, z, residual, degree),
            exact: false,
        });
    }

    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let max_residual = roots.iter().map(|r| r.residual).fold(0.0, f64::max);
    Ok(RootReport {
        degree,
        roots,
        max_residual,
        ill_conditioned: max_residual >= ROOT_RESIDUAL_TOLERANCE,
    })
}

/// Eigenvalues of the companion matrix of `p / lead(p)`.
fn companion_roots(p: &SparsePolynomial) -> Vec<Complex64> {
    let Some(d) = p.degree() else {
        return Vec::new();
    };
    if d == 0 {
        return Vec::new();
    }
    let c = p.to_f64_vec();
    let lead = c[d];
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        m[(i, d - 1)] = -c[i] / lead;
    }
    m.complex_eigenvalues().iter().copied().collect()
}

/// Newton steps on the full polynomial, keeping a step only if it lowers `|P|`.
fn polish(p: &SparsePolynomial, mut z: Complex64) -> Complex64 {
    let dp = derivative(p);
    let mut val = p.eval_complex(z).norm();
    for _ in 0..NEWTON_STEPS {
        let d = dp.eval_complex(z);
        if d.norm() == 0.0 {
            break;
        }
        let next = z - p.eval_complex(z) / d;
        let next_val = p.eval_complex(next).norm();
        if !(next_val < val) {
            break;
        }
        z = next;
        val = next_val;
    }
    z
}

pub fn relative_residual(p: &SparsePolynomial, z: Complex64) -> f64 {
    let deg = p.degree().unwrap_or(0) as i32;
    let scale = p.abs_coeff_sum_at(1.0) * z.norm().max(1.0).powi(deg);
    if scale == 0.0 {
        return 0.0;
    }
    p.eval_complex(z).norm() / scale
}

/// Newton-step size `|P/P'|` where the derivative is usable; otherwise the
/// multiple-root bound `residual^(1/deg) max(1, |z|)`.
fn uncertainty(p: &SparsePolynomial, z: Complex64, residual: f64, degree: usize) -> f64 {
    let fallback = residual.powf(1.0 / degree.max(1) as f64) * z.norm().max(1.0);
    let d = derivative(p).eval_complex(z);
    let step = (p.eval_complex(z) / d).norm();
    if step.is_finite() && d.norm() > 1e-6 * p.abs_coeff_sum_at(z.norm().max(1.0)) {
        step
    } else {
        fallback
    }
}

fn derivative(p: &SparsePolynomial) -> SparsePolynomial {
    SparsePolynomial::from_coeffs(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect(),
    )
}

/// Real integer roots in the report, with multiplicity, if all roots are real
/// integers up to `tol`.
pub fn integer_roots(report: &RootReport, tol: f64) -> Option<Vec<i64>> {
    report
        .roots
        .iter()
        .map(|r| {
            let k = r.re.round();
            ((r.re - k).abs() < tol && r.im.abs() < tol).then(|| k.to_i64())?
        })
        .collect()
}

/// Whether every root lies in `|q| < radius` with room for its uncertainty.
pub fn all_inside(report: &RootReport, radius: f64) -> bool {
    report
        .roots
        .iter()
        .all(|r| r.modulus() + r.uncertainty < radius)
}

/// Divides by `x`; the constant coefficient must be zero.
fn divide_by_x(p: &SparsePolynomial) -> SparsePolynomial {
    SparsePolynomial::from_coeffs(p.coeffs().iter().skip(1).cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> SparsePolynomial {
        SparsePolynomial::from_i64(c)
    }

    #[test]
    fn triangle_roots() {
        let r = find_roots(&p(&[0, 2, -3, 1])).unwrap();
        assert_eq!(integer_roots(&r, 1e-12), Some(vec![0, 1, 2]));
        assert!(r.roots.iter().all(|r| r.exact));
    }

    #[test]
    fn edgeless_roots() {
        let r = find_roots(&p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(integer_roots(&r, 1e-12), Some(vec![0, 0, 0]));
    }

    #[test]
    fn five_cycle_roots() {
        // (q-1)^5 - (q-1) = q (q-1) (q-2) (q² - 2q + 2)
        let poly = p(&[0, 4, -10, 10, -5, 1]);
        let r = find_roots(&poly).unwrap();
        assert_eq!(r.roots.len(), 5);
        assert!(!r.ill_conditioned);
        let complex: Vec<_> = r.roots.iter().filter(|r| !r.exact).collect();
        assert_eq!(complex.len(), 2);
        for root in complex {
            let want = Complex64::new(1.0, root.im.signum());
            assert!((root.value() - want).norm() < 1e-12);
        }
    }

    #[test]
    fn irrational_roots_are_polished() {
        // q² - 2
        let r = find_roots(&p(&[-2, 0, 1])).unwrap();
        assert!((r.roots[0].re + 2f64.sqrt()).abs() < 1e-14);
        assert!((r.roots[1].re - 2f64.sqrt()).abs() < 1e-14);
        assert!(r.max_residual < 1e-15);
        assert!(r.roots.iter().all(|r| r.uncertainty < 1e-14));
    }

    #[test]
    fn constant_and_zero() {
        assert!(find_roots(&SparsePolynomial::zero()).is_err());
        let r = find_roots(&p(&[5])).unwrap();
        assert!(r.roots.is_empty());
    }

    #[test]
    fn disk_check() {
        let r = find_roots(&p(&[0, 2, -3, 1])).unwrap();
        assert!(all_inside(&r, 2.5));
        assert!(!all_inside(&r, 2.0));
    }
}

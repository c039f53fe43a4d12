//! Exact integer polynomials in one variable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense coefficient vector over `BigInt`, lowest degree first, with
/// trailing zeros trimmed. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparsePolynomial {
    coeffs: Vec<BigInt>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        SparsePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        SparsePolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        SparsePolynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `self += c * x^k * other`, the accumulation step of the forest recursion.
    pub fn add_scaled_shifted(&mut self, c: &BigInt, k: usize, other: &SparsePolynomial) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let need = k + other.coeffs.len();
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (j, a) in other.coeffs.iter().enumerate() {
            self.coeffs[k + j] += c * a;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// The polynomial `x^n * p(-1/x)`, i.e. coefficient `k` moves to degree
    /// `n - k` with sign `(-1)^k`. Requires `n >= deg p`.
    pub fn reflect_alternating(&self, n: usize) -> Self {
        let mut out = vec![BigInt::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            assert!(k <= n, "degree {k} exceeds reflection order {n}");
            out[n - k] = if k % 2 == 0 { c.clone() } else { -c };
        }
        Self::from_coeffs(out)
    }

    pub fn eval_integer(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in double precision.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + to_f64(c))
    }

    pub fn eval_real(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    /// `sum_k |c_k| r^k`, the scale against which evaluation error is judged.
    pub fn abs_coeff_sum_at(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + to_f64(&c.abs()))
    }

    /// Exact division by `(x - r)` if `r` is a root, else `None`.
    pub fn deflate_integer_root(&self, r: &BigInt) -> Option<Self> {
        let d = self.degree()?;
        if d == 0 {
            return None;
        }
        // synthetic division from the top
        let mut quotient = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for k in (1..=d).rev() {
            carry = &carry * r + &self.coeffs[k];
            quotient[k - 1] = carry.clone();
        }
        let remainder = carry * r + &self.coeffs[0];
        remainder.is_zero().then(|| Self::from_coeffs(quotient))
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }
}

pub(crate) fn to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        out.add_scaled_shifted(&BigInt::one(), 0, rhs);
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        out.add_scaled_shifted(&-BigInt::one(), 0, rhs);
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        SparsePolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return SparsePolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SparsePolynomial::from_coeffs(out)
    }
}

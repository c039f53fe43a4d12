//! Tree generating functions.
//!
//! `u_n(d, m)` counts rooted subtrees of the infinite `d`-ary tree with `n`
//! vertices in which every vertex keeps at most two children, and a pair of
//! children only when it is one of `m` designated pairs. The series
//! `u(y) = Σ u_n y^n` solves `u = y (1 + d u + m u²)`.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::penrose::{for_each_penrose_tree, VertexOrdering, DEFAULT_ENUM_CAP};

/// Square-root arguments in `(-SQRT_CLAMP, 0)` are treated as zero.
pub const SQRT_CLAMP: f64 = 1e-14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenFunParams {
    d: u32,
    m: u32,
}

impl GenFunParams {
    /// `d >= 2`. `m` is not tied to `floor(d²/4)`; choosing it is up to the caller.
    pub fn new(d: u32, m: u32) -> Result<Self> {
        if d < 2 {
            return Err(Error::Domain {
                what: "branching degree d",
                value: d as f64,
                lo: 2.0,
                hi: f64::INFINITY,
            });
        }
        Ok(GenFunParams { d, m })
    }

    pub fn d(self) -> u32 {
        self.d
    }

    pub fn m(self) -> u32 {
        self.m
    }

    /// Radius of convergence `1 / (2√m + d)`.
    pub fn radius(self) -> f64 {
        1.0 / (2.0 * (self.m as f64).sqrt() + self.d as f64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenFunTable {
    params: GenFunParams,
    /// `coeffs[k] = u_{k+1}`.
    coeffs: Vec<BigUint>,
}

impl GenFunTable {
    pub fn params(&self) -> GenFunParams {
        self.params
    }

    /// `u_n` for `1 <= n <= n_max`.
    pub fn u(&self, n: usize) -> &BigUint {
        &self.coeffs[n - 1]
    }

    pub fn n_max(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Truncated `u(y) = Σ_{n <= n_max} u_n y^n`.
    pub fn eval_u(&self, y: f64) -> f64 {
        self.eval_w(y) * y
    }

    /// Truncated `w(y) = Σ_{n <= n_max} u_n y^{n-1}`.
    pub fn eval_w(&self, y: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * y + c.to_f64().unwrap_or(f64::INFINITY))
    }
}

/// `u_1 = 1`, `u_n = d u_{n-1} + m Σ_{j=1}^{n-2} u_j u_{n-1-j}`.
pub fn u_coefficients(p: GenFunParams, n_max: usize) -> GenFunTable {
    let n_max = n_max.max(1);
    let d = BigUint::from(p.d);
    let m = BigUint::from(p.m);
    let mut coeffs: Vec<BigUint> = Vec::with_capacity(n_max);
    coeffs.push(BigUint::from(1u32));
    for n in 2..=n_max {
        // coeffs is 0-based: u_j = coeffs[j-1]
        let mut conv = BigUint::zero();
        for j in 1..=n.saturating_sub(2) {
            conv += &coeffs[j - 1] * &coeffs[n - 1 - j - 1];
        }
        let next = &d * &coeffs[n - 2] + &m * conv;
        coeffs.push(next);
    }
    GenFunTable { params: p, coeffs }
}

fn clamped_sqrt(arg: f64) -> f64 {
    if arg < 0.0 && arg > -SQRT_CLAMP {
        0.0
    } else {
        arg.sqrt()
    }
}

/// `w(y) = 2 / (1 - d y + √((1 - d y)² - 4 m y²))` on `[0, radius]`.
pub fn w_closed_form(p: GenFunParams, y: f64) -> Result<f64> {
    let radius = p.radius();
    let domain = Error::Domain {
        what: "w closed form",
        value: y,
        lo: 0.0,
        hi: radius,
    };
    if !(0.0..=radius).contains(&y) {
        return Err(domain);
    }
    let (d, m) = (p.d as f64, p.m as f64);
    let lin = 1.0 - d * y;
    let w = 2.0 / (lin + clamped_sqrt(lin * lin - 4.0 * m * y * y));
    if w.is_finite() {
        Ok(w)
    } else {
        Err(domain)
    }
}

/// `g_Δ(y) = 4 / (1 + √(1 - 2(Δ-1) y))²` for `Δ >= 3`, `0 <= y <= 1/(2(Δ-1))`.
pub fn g_delta(delta: usize, y: f64) -> Result<f64> {
    if delta < 3 {
        return Err(Error::Domain {
            what: "g_delta max degree",
            value: delta as f64,
            lo: 3.0,
            hi: f64::INFINITY,
        });
    }
    let hi = 1.0 / (2.0 * (delta as f64 - 1.0));
    if !(0.0..=hi).contains(&y) {
        return Err(Error::Domain {
            what: "g_delta",
            value: y,
            lo: 0.0,
            hi,
        });
    }
    let s = 1.0 + clamped_sqrt(1.0 - 2.0 * (delta as f64 - 1.0) * y);
    Ok(4.0 / (s * s))
}

/// `h(x) = 4 / (1 + √(1 - 2x))²` for `0 <= x <= 1/2`.
pub fn h(x: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&x) {
        return Err(Error::Domain {
            what: "h",
            value: x,
            lo: 0.0,
            hi: 0.5,
        });
    }
    let s = 1.0 + clamped_sqrt(1.0 - 2.0 * x);
    Ok(4.0 / (s * s))
}

/// Coefficients of `T_{G,v}(y)`: entry `k` counts Penrose trees with `k`
/// edges that contain `v` (entry 0 is the empty tree). Truncated at
/// `n_max` edges; trailing zeros dropped.
pub fn tree_genfun(g: &Graph, ord: &VertexOrdering, v: usize, n_max: usize) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    if n > DEFAULT_ENUM_CAP {
        return Err(Error::CapExceeded {
            what: "Penrose tree enumeration",
            size: n,
            cap: DEFAULT_ENUM_CAP,
        });
    }
    if v >= n {
        return Err(Error::contract(format!("vertex {v} out of range")));
    }
    let mut counts = vec![0u64; n_max.min(n.saturating_sub(1)) + 1];
    counts[0] = 1;
    // trees containing v are rooted at v or at some earlier vertex
    for r in (0..n).filter(|&r| r == v || ord.precedes(r, v)) {
        let allowed = (0..n)
            .filter(|&w| ord.precedes(r, w))
            .fold(0u64, |m, w| m | 1 << w);
        for_each_penrose_tree(g, ord, r, allowed, n_max, |t| {
            if t.edge_count() > 0 && t.vertex_mask >> v & 1 == 1 {
                counts[t.edge_count()] += 1;
            }
        });
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts)
}

/// `Σ_k c_k y^k`.
pub fn eval_counts(counts: &[u64], y: f64) -> f64 {
    counts.iter().rev().fold(0.0, |acc, &c| acc * y + c as f64)
}

//! Truncated Taylor series in `t = x - x₀`, used to differentiate profiles
//! exactly (up to rounding) at a quadrature node.

use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients `c_k` of `Σ c_k t^k`, all series of one computation sharing
/// the same truncation order.
#[derive(Clone, Debug, PartialEq)]
pub struct Series {
    pub x0: f64,
    pub c: Vec<f64>,
}

impl Series {
    pub fn constant(x0: f64, v: f64, len: usize) -> Self {
        let mut c = vec![0.0; len];
        c[0] = v;
        Series { x0, c }
    }

    /// The coordinate `x = x₀ + t`.
    pub fn x(x0: f64, len: usize) -> Self {
        let mut s = Self::constant(x0, x0, len);
        if len > 1 {
            s.c[1] = 1.0;
        }
        s
    }

    /// `1 - x²`
    pub fn one_minus_x2(x0: f64, len: usize) -> Self {
        let x = Self::x(x0, len);
        &Self::constant(x0, 1.0, len) - &(&x * &x)
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// `d^k/dx^k` at `x₀`.
    pub fn derivative_at(&self, k: usize) -> f64 {
        let fact: f64 = (1..=k).map(|i| i as f64).product();
        self.c.get(k).copied().unwrap_or(0.0) * fact
    }

    /// `d/dx`; the result is one order shorter and padded with a zero.
    pub fn deriv(&self) -> Self {
        let mut c: Vec<f64> = (1..self.c.len()).map(|k| k as f64 * self.c[k]).collect();
        c.push(0.0);
        Series { x0: self.x0, c }
    }

    pub fn scale(&self, a: f64) -> Self {
        Series { x0: self.x0, c: self.c.iter().map(|v| v * a).collect() }
    }

    fn zip(&self, o: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        Series { x0: self.x0, c: self.c.iter().zip(&o.c).map(|(a, b)| f(*a, *b)).collect() }
    }

    /// `exp(f)` via `g' = f' g`.
    pub fn exp(&self) -> Self {
        let n = self.len();
        let mut g = vec![0.0; n];
        g[0] = self.c[0].exp();
        for k in 1..n {
            let s: f64 = (1..=k).map(|j| j as f64 * self.c[j] * g[k - j]).sum();
            g[k] = s / k as f64;
        }
        Series { x0: self.x0, c: g }
    }

    /// `ln(f)` for `f(x₀) > 0`, via `f g' = f'`.
    pub fn ln(&self) -> Self {
        let n = self.len();
        let mut g = vec![0.0; n];
        g[0] = self.c[0].ln();
        for k in 1..n {
            let s: f64 = (1..k).map(|j| j as f64 * g[j] * self.c[k - j]).sum();
            g[k] = (k as f64 * self.c[k] - s) / (k as f64 * self.c[0]);
        }
        Series { x0: self.x0, c: g }
    }

    /// `f^a` for `f(x₀) > 0`.
    pub fn powf(&self, a: f64) -> Self {
        self.ln().scale(a).exp()
    }

    /// `L_m f = m x f' - (1 - x²) f''`, the Laplacian (`-div ∇`) of an
    /// axially symmetric function on a sphere of dimension `m`.
    pub fn laplacian(&self, m: f64) -> Self {
        let d1 = self.deriv();
        let d2 = d1.deriv();
        let x = Self::x(self.x0, self.len());
        &(&x * &d1).scale(m) - &(&Self::one_minus_x2(self.x0, self.len()) * &d2)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, o: &Series) -> Series {
        self.zip(o, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, o: &Series) -> Series {
        self.zip(o, |a, b| a - b)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, o: &Series) -> Series {
        let n = self.len();
        let mut c = vec![0.0; n];
        for (i, a) in self.c.iter().enumerate() {
            if *a == 0.0 {
                continue;
            }
            for (j, b) in o.c.iter().enumerate().take(n - i) {
                c[i + j] += a * b;
            }
        }
        Series { x0: self.x0, c }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(-1.0)
    }
}

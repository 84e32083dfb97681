//! Dense tensor polynomials in scaled local coordinates.
//!
//! A [`SpaceTimePoly`] represents
//! `p(x, t) = sum c_{i,j,s} B_i(u) B_j(v) B_s(w)` with `u = (x - cx)/hx`,
//! `v = (y - cy)/hy`, `w = (t - ct)/ht`, where `B` is either the monomial or
//! the Legendre family. Space-only polynomials carry time degree 0; 1-D
//! polynomials carry y degree 0.

use super::legendre::{legendre_derivatives, Quadrature};
use crate::util::falling;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    ScaledMonomial,
    ScaledLegendre,
}

#[derive(Debug, Clone)]
pub struct SpaceTimePoly {
    /// Spatial dimension, 1 or 2.
    pub dim: usize,
    /// Per-axis degree (x, y, t); y degree is 0 in 1-D.
    pub degrees: [usize; 3],
    /// Physical center (x, y, t reference).
    pub center: [f64; 3],
    /// Per-axis scale lengths; strictly positive.
    pub scales: [f64; 3],
    pub basis: Basis,
    /// Coefficients, x index fastest, then y, then t.
    pub coeffs: Vec<f64>,
}

impl SpaceTimePoly {
    pub fn zero(dim: usize, degrees: [usize; 3], center: [f64; 3], scales: [f64; 3], basis: Basis) -> Self {
        assert!(dim == 1 || dim == 2);
        assert!(scales.iter().all(|&s| s > 0.0), "scales must be positive");
        let len = (degrees[0] + 1) * (degrees[1] + 1) * (degrees[2] + 1);
        SpaceTimePoly { dim, degrees, center, scales, basis, coeffs: vec![0.0; len] }
    }

    pub fn constant(dim: usize, value: f64, center: [f64; 3], scales: [f64; 3]) -> Self {
        let mut p = Self::zero(dim, [0, 0, 0], center, scales, Basis::ScaledMonomial);
        p.coeffs[0] = value;
        p
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize, s: usize) -> usize {
        i + (self.degrees[0] + 1) * (j + (self.degrees[1] + 1) * s)
    }

    /// Local coordinates of a physical point.
    #[inline]
    pub fn local(&self, x: [f64; 3]) -> [f64; 3] {
        [
            (x[0] - self.center[0]) / self.scales[0],
            (x[1] - self.center[1]) / self.scales[1],
            (x[2] - self.center[2]) / self.scales[2],
        ]
    }

    fn axis_table(&self, axis: usize, u: f64, maxder: usize) -> Vec<Vec<f64>> {
        let n = self.degrees[axis];
        match self.basis {
            Basis::ScaledLegendre => legendre_derivatives(n, u, maxder),
            Basis::ScaledMonomial => {
                let mut tab = vec![vec![0.0; n + 1]; maxder + 1];
                let mut pows = vec![1.0; n + 1];
                for p in 1..=n {
                    pows[p] = pows[p - 1] * u;
                }
                for d in 0..=maxder {
                    for p in 0..=n {
                        tab[d][p] = if p >= d { falling(p, d) * pows[p - d] } else { 0.0 };
                    }
                }
                tab
            }
        }
    }

    /// Evaluate at a physical space-time point (y and t ignored as appropriate).
    pub fn eval(&self, x: [f64; 3]) -> f64 {
        self.eval_derivative([0, 0, 0], x)
    }

    /// Evaluate the physical mixed derivative `d^alpha p` at a point.
    pub fn eval_derivative(&self, alpha: [usize; 3], x: [f64; 3]) -> f64 {
        let u = self.local(x);
        let tx = self.axis_table(0, u[0], alpha[0]);
        let ty = self.axis_table(1, u[1], alpha[1]);
        let tt = self.axis_table(2, u[2], alpha[2]);
        let (bx, by, bt) = (&tx[alpha[0]], &ty[alpha[1]], &tt[alpha[2]]);
        let (dx, dy, dt) = (self.degrees[0], self.degrees[1], self.degrees[2]);
        let mut acc = 0.0;
        for s in 0..=dt {
            let mut acc_y = 0.0;
            for j in 0..=dy {
                let base = (dx + 1) * (j + (dy + 1) * s);
                let row = &self.coeffs[base..base + dx + 1];
                let mut acc_x = 0.0;
                for i in 0..=dx {
                    acc_x += row[i] * bx[i];
                }
                acc_y += acc_x * by[j];
            }
            acc += acc_y * bt[s];
        }
        let scale = self.scales[0].powi(alpha[0] as i32)
            * self.scales[1].powi(alpha[1] as i32)
            * self.scales[2].powi(alpha[2] as i32);
        acc / scale
    }

    /// Physical derivative `d^alpha p` as a polynomial on the same chart.
    /// Requires the scaled-monomial basis.
    pub fn derivative(&self, alpha: [usize; 3]) -> SpaceTimePoly {
        assert_eq!(self.basis, Basis::ScaledMonomial, "derivative needs monomial basis");
        let nd = [
            self.degrees[0].saturating_sub(alpha[0]),
            self.degrees[1].saturating_sub(alpha[1]),
            self.degrees[2].saturating_sub(alpha[2]),
        ];
        let mut out = SpaceTimePoly::zero(self.dim, nd, self.center, self.scales, self.basis);
        let scale = self.scales[0].powi(alpha[0] as i32)
            * self.scales[1].powi(alpha[1] as i32)
            * self.scales[2].powi(alpha[2] as i32);
        for s in 0..=nd[2] {
            for j in 0..=nd[1] {
                for i in 0..=nd[0] {
                    if alpha[0] > self.degrees[0]
                        || alpha[1] > self.degrees[1]
                        || alpha[2] > self.degrees[2]
                    {
                        continue;
                    }
                    let src = self.idx(i + alpha[0], j + alpha[1], s + alpha[2]);
                    let f = falling(i + alpha[0], alpha[0])
                        * falling(j + alpha[1], alpha[1])
                        * falling(s + alpha[2], alpha[2]);
                    let dst = out.idx(i, j, s);
                    out.coeffs[dst] = self.coeffs[src] * f / scale;
                }
            }
        }
        out
    }

    /// Re-express the polynomial in another basis on the same chart.
    pub fn to_basis(&self, basis: Basis) -> SpaceTimePoly {
        if basis == self.basis {
            return self.clone();
        }
        let mut out = self.clone();
        out.basis = basis;
        for axis in 0..3 {
            let n = self.degrees[axis];
            if n == 0 {
                continue;
            }
            let mat = match basis {
                // coeffs_mono = M * coeffs_leg
                Basis::ScaledMonomial => legendre_to_monomial(n),
                // coeffs_leg = M^{-1} * coeffs_mono
                Basis::ScaledLegendre => monomial_to_legendre(n),
            };
            apply_axis_matrix(&mut out.coeffs, self.degrees, axis, &mat);
        }
        out
    }
}

/// Matrix M with `P_j(u) = sum_l M[l][j] u^l`; returned row-major, (n+1) x (n+1).
pub fn legendre_to_monomial(n: usize) -> Vec<f64> {
    let w = n + 1;
    let mut m = vec![0.0; w * w];
    m[0] = 1.0; // P_0 = 1
    if n >= 1 {
        m[1 * w + 1] = 1.0; // P_1 = u
    }
    // (j+1) P_{j+1} = (2j+1) u P_j - j P_{j-1}
    for j in 1..n {
        for l in 0..=j {
            let t = (2 * j + 1) as f64 * m[l * w + j] / (j + 1) as f64;
            m[(l + 1) * w + j + 1] += t;
        }
        for l in 0..=j.saturating_sub(1) {
            m[l * w + j + 1] -= j as f64 * m[l * w + j - 1] / (j + 1) as f64;
        }
    }
    m
}

/// Inverse transform of [`legendre_to_monomial`], by back substitution in degree.
pub fn monomial_to_legendre(n: usize) -> Vec<f64> {
    let w = n + 1;
    let m = legendre_to_monomial(n);
    let mut inv = vec![0.0; w * w];
    // Solve M x = e_col for each column; M is triangular in the sense that
    // monomial degree l only receives contributions from P_j with j >= l of
    // equal parity, and M[j][j] != 0.
    for col in 0..w {
        let mut rhs = vec![0.0; w];
        rhs[col] = 1.0;
        for j in (0..w).rev() {
            let x = rhs[j] / m[j * w + j];
            inv[j * w + col] = x;
            if x != 0.0 {
                for l in 0..=j {
                    rhs[l] -= m[l * w + j] * x;
                }
            }
        }
    }
    inv
}

/// Apply a per-axis linear map to a coefficient tensor:
/// `new[r, rest] = sum_c mat[r*(n+1) + c] * old[c, rest]`.
pub fn apply_axis_matrix(coeffs: &mut [f64], degrees: [usize; 3], axis: usize, mat: &[f64]) {
    let n = degrees[axis];
    let w = n + 1;
    let dims = [degrees[0] + 1, degrees[1] + 1, degrees[2] + 1];
    let strides = [1, dims[0], dims[0] * dims[1]];
    let stride = strides[axis];
    let mut line = vec![0.0; w];
    // iterate over all lines along `axis`
    let (o1, o2) = match axis {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    for b in 0..dims[o2] {
        for a in 0..dims[o1] {
            let base = a * strides[o1] + b * strides[o2];
            for c in 0..w {
                line[c] = coeffs[base + c * stride];
            }
            for r in 0..w {
                let mut acc = 0.0;
                for c in 0..w {
                    acc += mat[r * w + c] * line[c];
                }
                coeffs[base + r * stride] = acc;
            }
        }
    }
}

/// `C[l*(k+1) + j] = integral over [x0,x1] of (a*X + b)^l P_j(X) dX`.
///
/// Used to take moments of a polynomial given on one chart against Legendre
/// basis functions of another chart; `a`, `b` encode the affine map between
/// the two local coordinates.
pub fn affine_monomial_moments(
    a: f64,
    b: f64,
    x0: f64,
    x1: f64,
    max_pow: usize,
    k: usize,
    quad: &Quadrature,
) -> Vec<f64> {
    let mut out = vec![0.0; (max_pow + 1) * (k + 1)];
    let c = 0.5 * (x0 + x1);
    let r = 0.5 * (x1 - x0);
    let mut leg = vec![0.0; k + 1];
    let mut pows = vec![1.0; max_pow + 1];
    for (xq, wq) in quad.points.iter().zip(&quad.weights) {
        let x = c + r * xq;
        super::legendre::legendre_values(k, x, &mut leg);
        let s = a * x + b;
        for l in 1..=max_pow {
            pows[l] = pows[l - 1] * s;
        }
        let w = wq * r;
        for l in 0..=max_pow {
            let base = l * (k + 1);
            let ws = w * pows[l];
            for j in 0..=k {
                out[base + j] += ws * leg[j];
            }
        }
    }
    out
}

/// `G[i*(k+1) + j] = integral over [x0,x1] of P_i(X) P_j(X) dX`.
pub fn legendre_pair_moments(x0: f64, x1: f64, k: usize, quad: &Quadrature) -> Vec<f64> {
    let mut out = vec![0.0; (k + 1) * (k + 1)];
    let c = 0.5 * (x0 + x1);
    let r = 0.5 * (x1 - x0);
    let mut leg = vec![0.0; k + 1];
    for (xq, wq) in quad.points.iter().zip(&quad.weights) {
        super::legendre::legendre_values(k, c + r * xq, &mut leg);
        let w = wq * r;
        for i in 0..=k {
            let wi = w * leg[i];
            for j in 0..=k {
                out[i * (k + 1) + j] += wi * leg[j];
            }
        }
    }
    out
}

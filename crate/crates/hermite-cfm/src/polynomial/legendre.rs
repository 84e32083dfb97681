//! Legendre polynomials and Gauss-Legendre quadrature on [-1, 1].

use crate::error::{Error, Result};

/// Evaluate the Legendre polynomial P_n at `x` by the three-term recurrence.
pub fn legendre_eval(n: usize, x: f64) -> f64 {
    let mut p0 = 1.0;
    if n == 0 {
        return p0;
    }
    let mut p1 = x;
    for j in 1..n {
        let p2 = ((2 * j + 1) as f64 * x * p1 - j as f64 * p0) / (j + 1) as f64;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Tabulate P_0..=P_n at `x` into `out` (length n+1).
pub fn legendre_values(n: usize, x: f64, out: &mut [f64]) {
    debug_assert!(out.len() >= n + 1);
    out[0] = 1.0;
    if n == 0 {
        return;
    }
    out[1] = x;
    for j in 1..n {
        out[j + 1] = ((2 * j + 1) as f64 * x * out[j] - j as f64 * out[j - 1]) / (j + 1) as f64;
    }
}

/// Tabulate derivatives of Legendre polynomials at `x`.
///
/// Returns `tab` with `tab[d][j] = P_j^{(d)}(x)` for d = 0..=maxder, j = 0..=n,
/// built from P'_{j+1} = P'_{j-1} + (2j+1) P_j differentiated d-1 more times.
pub fn legendre_derivatives(n: usize, x: f64, maxder: usize) -> Vec<Vec<f64>> {
    let mut tab = vec![vec![0.0; n + 1]; maxder + 1];
    legendre_values(n, x, &mut tab[0]);
    for d in 1..=maxder {
        // P_j^{(d)}: zero for j < d; recurrence in j above that.
        if d <= n {
            // P_d^{(d)} = (2d)! / (2^d d!)
            let mut lead = 1.0;
            for i in 0..d {
                lead *= (d + i + 1) as f64 / 2.0;
            }
            tab[d][d] = lead;
            for j in d..n {
                let prev = if j >= 1 { tab[d][j - 1] } else { 0.0 };
                tab[d][j + 1] = prev + (2 * j + 1) as f64 * tab[d - 1][j];
            }
        }
    }
    tab
}

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct Quadrature {
    pub points: Vec<f64>,
    pub weights: Vec<f64>,
    pub n: usize,
}

impl Quadrature {
    /// Integrate f over [a, b].
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let c = 0.5 * (a + b);
        let r = 0.5 * (b - a);
        let mut acc = 0.0;
        for (x, w) in self.points.iter().zip(&self.weights) {
            acc += w * f(c + r * x);
        }
        acc * r
    }
}

/// Build the n-point Gauss-Legendre rule. Nodes are found by Newton iteration
/// on P_n starting from Chebyshev estimates; iteration failure is reported.
pub fn gauss_rule(n: usize) -> Result<Quadrature> {
    if n == 0 || n > 32 {
        return Err(Error::QuadratureOrder { n });
    }
    let mut points = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut converged = false;
        let mut dp = 0.0;
        for _ in 0..100 {
            let p = legendre_eval(n, x);
            let pm1 = legendre_eval(n - 1, x);
            dp = n as f64 * (x * p - pm1) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-15 {
                // one polish step, then re-check the residual
                let p = legendre_eval(n, x);
                let pm1 = legendre_eval(n - 1, x);
                dp = n as f64 * (x * p - pm1) / (x * x - 1.0);
                x -= p / dp;
                converged = legendre_eval(n, x).abs() <= 1e-14;
                break;
            }
        }
        if !converged {
            return Err(Error::Study(format!(
                "Gauss-Legendre Newton iteration failed for n = {n}, root {i}"
            )));
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // roots come out in decreasing |x|; store symmetric pair
        points[i] = -x;
        points[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        points[n / 2] = 0.0;
    }
    Ok(Quadrature { points, weights, n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_values() {
        assert_eq!(legendre_eval(0, 0.3), 1.0);
        assert_eq!(legendre_eval(1, -0.5), -0.5);
        // P_2(x) = (3x^2 - 1)/2
        assert!((legendre_eval(2, 0.5) - (-0.125)).abs() < 1e-15);
    }

    #[test]
    fn one_and_two_point_rules() {
        let q1 = gauss_rule(1).unwrap();
        assert_eq!(q1.points, vec![0.0]);
        assert_eq!(q1.weights, vec![2.0]);
        let q2 = gauss_rule(2).unwrap();
        let r = 1.0 / 3.0_f64.sqrt();
        assert!((q2.points[0] + r).abs() < 1e-15);
        assert!((q2.points[1] - r).abs() < 1e-15);
        assert!((q2.weights[0] - 1.0).abs() < 1e-15);
        assert!((q2.weights[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn three_point_rule_integrates_x4() {
        let q = gauss_rule(3).unwrap();
        let val: f64 = q
            .points
            .iter()
            .zip(&q.weights)
            .map(|(x, w)| w * x.powi(4))
            .sum();
        assert!((val - 0.4).abs() < 1e-15);
    }

    #[test]
    fn exactness_through_2n_minus_1() {
        for n in 1..=16 {
            let q = gauss_rule(n).unwrap();
            let wsum: f64 = q.weights.iter().sum();
            assert!((wsum - 2.0).abs() < 1e-14, "weight sum for n = {n}");
            for deg in 0..=(2 * n - 1) {
                let num: f64 = q
                    .points
                    .iter()
                    .zip(&q.weights)
                    .map(|(x, w)| w * x.powi(deg as i32))
                    .sum();
                let exact = if deg % 2 == 0 {
                    2.0 / (deg as f64 + 1.0)
                } else {
                    0.0
                };
                assert!(
                    (num - exact).abs() <= 1e-14 * (1.0 + exact.abs()),
                    "n = {n}, deg = {deg}: {num} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(gauss_rule(0).is_err());
        assert!(gauss_rule(33).is_err());
    }

    #[test]
    fn derivative_table_matches_finite_differences() {
        let x = 0.37;
        let eps = 1e-6;
        let tab = legendre_derivatives(8, x, 2);
        for j in 0..=8 {
            let fd1 = (legendre_eval(j, x + eps) - legendre_eval(j, x - eps)) / (2.0 * eps);
            assert!((tab[1][j] - fd1).abs() < 1e-8 * (1.0 + fd1.abs()), "P'_{j}");
            let fd2 = (legendre_eval(j, x + eps) - 2.0 * legendre_eval(j, x)
                + legendre_eval(j, x - eps))
                / (eps * eps);
            assert!((tab[2][j] - fd2).abs() < 1e-3 * (1.0 + fd2.abs()), "P''_{j}");
        }
    }
}

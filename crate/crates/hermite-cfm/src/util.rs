//! Small numeric helpers shared across modules.

/// n! as f64; exact for n <= 22.
pub fn factorial(n: usize) -> f64 {
    let mut f = 1.0;
    for i in 2..=n {
        f *= i as f64;
    }
    f
}

/// Binomial coefficient C(n, k) as f64.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut c = 1.0;
    for i in 0..k {
        c = c * (n - i) as f64 / (i + 1) as f64;
    }
    c
}

/// Falling factorial n! / (n-k)!; zero when k > n.
pub fn falling(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let mut f = 1.0;
    for i in 0..k {
        f *= (n - i) as f64;
    }
    f
}

/// Least-squares slope of y against x.
pub fn ls_slope(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    let sx: f64 = x.iter().sum();
    let sy: f64 = y.iter().sum();
    let sxx: f64 = x.iter().map(|v| v * v).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), 1.0);
        assert_eq!(factorial(5), 120.0);
        assert_eq!(binomial(6, 2), 15.0);
        assert_eq!(binomial(3, 5), 0.0);
        assert_eq!(falling(5, 2), 20.0);
        assert_eq!(falling(2, 3), 0.0);
    }

    #[test]
    fn slope_of_line() {
        let x = [1.0, 2.0, 3.0, 4.0];
        let y: Vec<f64> = x.iter().map(|v| 3.0 * v - 1.0).collect();
        assert!((ls_slope(&x, &y) - 3.0).abs() < 1e-12);
    }
}

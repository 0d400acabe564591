//! Small numerical helpers: binomial coefficients, compensated summation,
//! golden-section minimization and a symmetric eigensolver.

use crate::real::Real;

/// Binomial coefficient as a float. Exact integer arithmetic up to n = 60,
/// log-gamma beyond that (values overflow u128 range well before f64).
pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    if n <= 60 {
        let mut acc: u128 = 1;
        for i in 1..=u128::from(k) {
            acc = acc * (u128::from(n - k) + i) / i;
        }
        acc as f64
    } else {
        let n = f64::from(n);
        let k = f64::from(k);
        (ln_gamma(n + 1.0) - ln_gamma(k + 1.0) - ln_gamma(n - k + 1.0)).exp()
    }
}

/// Lanczos approximation (g = 7, 9 terms), ~1e-13 relative accuracy for
/// positive arguments.
pub fn ln_gamma(x: f64) -> f64 {
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_59,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    debug_assert!(x > 0.0);
    if x < 0.5 {
        // reflection
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut sum = COEF[0];
    for (i, c) in COEF.iter().enumerate().skip(1) {
        sum += c / (x + i as f64);
    }
    let t = x + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + sum.ln()
}

/// Kahan compensated accumulator.
#[derive(Clone, Copy, Debug)]
pub struct KahanSum<R: Real> {
    sum: R,
    carry: R,
}

impl<R: Real> KahanSum<R> {
    pub fn new() -> Self {
        KahanSum { sum: R::zero(), carry: R::zero() }
    }

    pub fn add(&mut self, v: R) {
        let y = v - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> R {
        self.sum
    }
}

impl<R: Real> Default for KahanSum<R> {
    fn default() -> Self {
        Self::new()
    }
}

/// Compensated sum of an iterator.
pub fn ksum<R: Real, I: IntoIterator<Item = R>>(it: I) -> R {
    let mut acc = KahanSum::new();
    for v in it {
        acc.add(v);
    }
    acc.value()
}

/// Golden-section search for the minimizer of `f` on `[a, b]`; stops when the
/// interval is narrower than `tol` and returns the interval midpoint.
pub fn golden_min<R: Real>(mut f: impl FnMut(R) -> R, mut a: R, mut b: R, tol: R) -> R {
    let inv_phi = R::of(0.618_033_988_749_894_8);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    (a + b) / R::of(2.0)
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
/// The matrices here are tiny (|L| + d_c - 1 square), so this is plenty.
pub fn symmetric_eigenvalues<R: Real>(mut a: Vec<Vec<R>>) -> Vec<R> {
    let n = a.len();
    if n == 0 {
        return Vec::new();
    }
    let tol = R::of(1e-30);
    for _sweep in 0..100 {
        let mut off = R::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p][q] * a[p][q];
            }
        }
        let scale: R = (0..n).map(|i| a[i][i] * a[i][i]).sum();
        if off <= tol * (scale + off) {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                if a[p][q].abs() <= R::of(1e-300) {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (R::of(2.0) * a[p][q]);
                let t = {
                    let s = theta.signum();
                    s / (theta.abs() + (theta * theta + R::one()).sqrt())
                };
                let c = R::one() / (t * t + R::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<R> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).expect("NaN eigenvalue"));
    eig
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_exact() {
        assert_eq!(binomial(5, 2), 10.0);
        assert_eq!(binomial(6, 0), 1.0);
        assert_eq!(binomial(6, 6), 1.0);
        assert_eq!(binomial(3, 5), 0.0);
        assert_eq!(binomial(60, 30), 118264581564861424.0);
    }

    #[test]
    fn binomial_large_matches_recurrence() {
        // Pascal recurrence as an independent route.
        let direct = binomial(80, 13);
        let rec = binomial(79, 12) + binomial(79, 13);
        assert!((direct - rec).abs() / rec < 1e-11, "{direct} vs {rec}");
    }

    #[test]
    fn ln_gamma_factorials() {
        for n in 1..15u32 {
            let f: f64 = (1..=n).map(f64::from).product::<f64>().ln();
            assert!((ln_gamma(f64::from(n) + 1.0) - f).abs() < 1e-10);
        }
    }

    #[test]
    fn golden_finds_parabola_min() {
        let m = golden_min(|y: f64| (y - 0.3) * (y - 0.3), 0.0, 1.0, 1e-12);
        assert!((m - 0.3).abs() < 1e-9);
    }

    #[test]
    fn jacobi_diagonal_and_known() {
        let eig = symmetric_eigenvalues(vec![vec![2.0, 1.0], vec![1.0, 2.0]]);
        assert!((eig[0] - 1.0).abs() < 1e-12 && (eig[1] - 3.0).abs() < 1e-12);
    }
}

//! Dense integer polynomials, just enough to compute cyclotomic polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A univariate polynomial over Z, coefficients stored lowest degree first.
///
/// The zero polynomial is the empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// x^n - 1.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::one();
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has degree 0 by convention.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }

    /// Exact division by a monic divisor. Panics if the division leaves a
    /// remainder; the callers only divide products of cyclotomic factors.
    pub fn exact_div(&self, divisor: &IntPoly) -> IntPoly {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        assert!(
            divisor.coeffs.last().unwrap().is_one(),
            "exact_div expects a monic divisor"
        );
        if self.is_zero() {
            return IntPoly::new(vec![]);
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        assert!(self.degree() >= dd, "degree of divisor exceeds dividend");
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dd].clone();
            if q.is_zero() {
                continue;
            }
            quot[k] = q.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let delta = &q * c;
                rem[k + i] -= delta;
            }
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "exact_div: division left a remainder"
        );
        IntPoly::new(quot)
    }
}

/// All positive divisors of `n`, in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0);
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0);
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Prime factorization `n = prod p^e` as (p, e) pairs, p ascending.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0);
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// The N-th cyclotomic polynomial Phi_N, the minimal polynomial of a
/// primitive N-th root of unity. Degree phi(N).
///
/// Computed as (x^N - 1) / prod_{d | N, d < N} Phi_d via exact division.
pub fn cyclotomic_polynomial(n: u32) -> IntPoly {
    assert!(n >= 1, "cyclotomic_polynomial: N must be positive");
    let mut memo: HashMap<u64, IntPoly> = HashMap::new();
    phi_poly(n as u64, &mut memo)
}

fn phi_poly(n: u64, memo: &mut HashMap<u64, IntPoly>) -> IntPoly {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut p = IntPoly::x_pow_minus_one(n as usize);
    for d in divisors(n) {
        if d < n {
            let phi_d = phi_poly(d, memo);
            p = p.exact_div(&phi_d);
        }
    }
    memo.insert(n, p.clone());
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_8_by_explicit_division() {
        // Independent route: divide x^8 - 1 by hand-written Phi_1, Phi_2, Phi_4.
        let x8 = IntPoly::x_pow_minus_one(8);
        let q = x8
            .exact_div(&IntPoly::from_i64(&[-1, 1]))
            .exact_div(&IntPoly::from_i64(&[1, 1]))
            .exact_div(&IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(q, IntPoly::from_i64(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(8), q);
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        // Multiplication-only route, independent of the division used above.
        for n in 1..=30u64 {
            let mut prod = IntPoly::one();
            for d in divisors(n) {
                prod = prod.mul(&cyclotomic_polynomial(d as u32));
            }
            assert_eq!(prod, IntPoly::x_pow_minus_one(n as usize), "n = {}", n);
        }
    }

    #[test]
    fn degree_is_euler_phi() {
        for n in 1..=60 {
            assert_eq!(cyclotomic_polynomial(n).degree() as u64, euler_phi(n as u64));
        }
    }

    #[test]
    fn totient_and_divisors() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(360), 96);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
    }
}

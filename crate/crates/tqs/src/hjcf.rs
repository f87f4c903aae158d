//! Hirzebruch-Jung continued fractions and critical pairs.
//!
//! The expansion of n/d (with 1 <= d <= n, gcd(n,d) = 1) is the integer
//! string (a_0, ..., a_r), all a_i >= 2, with
//!
//! ```text
//! n/d = a_0 - 1/(a_1 - 1/(a_2 - ...))
//! ```
//!
//! It encodes the self-intersections -a_i of the exceptional curves in the
//! minimal resolution of the cyclic quotient singularity 1/n(1,d).
//!
//! A coprime pair (n, d) with d < n is *critical* when the expansion is
//! palindromic, of odd length, with even central term; equivalently when
//! d^2 = 1 (mod n), n is even, and d = +-1 (mod 2^a) for 2^a the largest
//! power of 2 dividing n. Both criteria are implemented and must agree.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// The term string (a_0, ..., a_r) of an expansion; empty only for 1/1.
pub type HjExpansion = Vec<u64>;

fn check_pair(n: u64, d: u64) -> Result<()> {
    if n == 0 || d == 0 || d > n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= d <= n, got n = {}, d = {}",
            n, d
        )));
    }
    if n.gcd(&d) != 1 {
        return Err(Error::NotCoprime(n, d));
    }
    Ok(())
}

/// Hirzebruch-Jung expansion of n/d.
///
/// Recurrence: a_i = ceil(n_i / d_i), (n_{i+1}, d_{i+1}) = (d_i, a_i d_i - n_i),
/// stopping when the remainder is 0. Returns the empty string iff n = 1.
pub fn hj_expand(n: u64, d: u64) -> Result<HjExpansion> {
    check_pair(n, d)?;
    let mut terms = Vec::new();
    let (mut n_i, mut d_i) = (n, d);
    while d_i != 0 {
        if n_i == 1 {
            // smooth point: 1/1 has the empty expansion
            debug_assert!(terms.is_empty() && d_i == 1);
            break;
        }
        let a = n_i.div_ceil(d_i);
        terms.push(a);
        let next_d = a * d_i - n_i;
        n_i = d_i;
        d_i = next_d;
    }
    Ok(terms)
}

/// Evaluate an expansion back to the reduced fraction n/d.
pub fn hj_eval(terms: &[u64]) -> Result<Rational> {
    for &a in terms {
        if a < 2 {
            return Err(Error::InvalidTerm(a));
        }
    }
    // fold from the innermost term; terms >= 2 keep every partial value > 1
    let mut v: Option<BigRational> = None;
    for &a in terms.iter().rev() {
        let a = BigRational::from_integer(a.into());
        v = Some(match v {
            None => a,
            Some(prev) => {
                if prev.is_zero() {
                    return Err(Error::Internal("zero denominator in evaluation".into()));
                }
                &a - BigRational::one() / &prev
            }
        });
    }
    Ok(v.unwrap_or_else(BigRational::one))
}

/// Shape criterion: the expansion is palindromic, of odd length, and with an
/// even central term.
pub fn is_critical_pair(n: u64, d: u64) -> Result<bool> {
    if d >= n {
        return Err(Error::OutOfRange(format!(
            "critical pairs need d < n, got n = {}, d = {}",
            n, d
        )));
    }
    let e = hj_expand(n, d)?;
    let len = e.len();
    let palindromic = e.iter().eq(e.iter().rev());
    Ok(palindromic && len % 2 == 1 && e[len / 2] % 2 == 0)
}

/// Arithmetic criterion: d^2 = 1 (mod n), n even, and d = +-1 (mod 2^a)
/// where 2^a is the largest power of 2 dividing n.
pub fn is_critical_pair_arith(n: u64, d: u64) -> Result<bool> {
    if d >= n {
        return Err(Error::OutOfRange(format!(
            "critical pairs need d < n, got n = {}, d = {}",
            n, d
        )));
    }
    check_pair(n, d)?;
    if n % 2 != 0 {
        return Ok(false);
    }
    if (d * d) % n != 1 {
        return Ok(false);
    }
    let mut two_a = 1u64;
    let mut m = n;
    while m % 2 == 0 {
        two_a *= 2;
        m /= 2;
    }
    let r = d % two_a;
    Ok(r == 1 % two_a || r == two_a - 1)
}

/// The unique b with 1 <= b <= n and b*d = 1 (mod n).
pub fn mod_inverse(d: u64, n: u64) -> Result<u64> {
    if n == 0 || d == 0 {
        return Err(Error::OutOfRange("mod_inverse needs positive arguments".into()));
    }
    if n.gcd(&d) != 1 {
        return Err(Error::NotCoprime(d, n));
    }
    if n == 1 {
        return Ok(1);
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, (d % n) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    let b = t.rem_euclid(n as i128) as u64;
    Ok(if b == 0 { n } else { b })
}

/// For a critical pair (n, d), the additive order o = n / gcd(n, d-1) of
/// d-1 modulo n. The construction of non-liftable twisted forms needs 2o to
/// divide both n and d+1; both divisibilities are verified here.
pub fn nonlift_divisibility_witness(n: u64, d: u64) -> Result<u64> {
    if !is_critical_pair(n, d)? {
        return Err(Error::NotCritical(n, d));
    }
    let o = n / n.gcd(&(d - 1));
    if n % (2 * o) != 0 || (d + 1) % (2 * o) != 0 {
        return Err(Error::Internal(format!(
            "divisibility witness failed for the critical pair ({}, {}): o = {}",
            n, d, o
        )));
    }
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: u64, d: u64) -> Rational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn expansions_of_two_power_pairs() {
        assert_eq!(hj_expand(8, 7).unwrap(), vec![2, 2, 2, 2, 2, 2, 2]);
        assert_eq!(hj_expand(8, 5).unwrap(), vec![2, 3, 2]);
        assert_eq!(hj_expand(8, 3).unwrap(), vec![3, 3]);
        assert_eq!(hj_expand(8, 1).unwrap(), vec![8]);
    }

    #[test]
    fn smooth_point_has_empty_expansion() {
        assert_eq!(hj_expand(1, 1).unwrap(), Vec::<u64>::new());
        assert_eq!(hj_eval(&[]).unwrap(), frac(1, 1));
    }

    #[test]
    fn expansion_of_12_5() {
        let e = hj_expand(12, 5).unwrap();
        assert_eq!(e, vec![3, 2, 3]);
        assert_eq!(hj_eval(&e).unwrap(), frac(12, 5));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(hj_eval(&[2, 3, 2]).unwrap(), frac(8, 5));
        assert_eq!(hj_eval(&[3, 2, 3]).unwrap(), frac(12, 5));
        assert_eq!(hj_eval(&[2, 1, 2]), Err(Error::InvalidTerm(1)));
    }

    #[test]
    fn invalid_pairs_are_rejected() {
        assert_eq!(hj_expand(8, 6), Err(Error::NotCoprime(8, 6)));
        assert!(matches!(hj_expand(5, 7), Err(Error::OutOfRange(_))));
        assert!(matches!(hj_expand(5, 0), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn critical_pair_examples() {
        assert!(is_critical_pair(8, 7).unwrap());
        assert!(!is_critical_pair(8, 5).unwrap());
        assert!(!is_critical_pair(8, 3).unwrap());
        assert!(is_critical_pair(2, 1).unwrap());
        assert!(is_critical_pair(12, 5).unwrap());
    }

    #[test]
    fn arithmetic_criterion_examples() {
        assert!(is_critical_pair_arith(8, 7).unwrap());
        assert!(!is_critical_pair_arith(8, 5).unwrap());
        assert!(!is_critical_pair_arith(15, 4).unwrap()); // n odd
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(3, 16).unwrap(), 11);
        assert_eq!(mod_inverse(1, 7).unwrap(), 1);
        assert_eq!(mod_inverse(7, 8).unwrap(), 7);
        assert_eq!(mod_inverse(1, 1).unwrap(), 1);
        assert_eq!(mod_inverse(4, 8), Err(Error::NotCoprime(4, 8)));
    }

    #[test]
    fn witness_examples() {
        assert_eq!(nonlift_divisibility_witness(2, 1).unwrap(), 1);
        assert_eq!(nonlift_divisibility_witness(8, 7).unwrap(), 4);
        assert_eq!(nonlift_divisibility_witness(12, 5).unwrap(), 3);
        assert_eq!(
            nonlift_divisibility_witness(8, 5),
            Err(Error::NotCritical(8, 5))
        );
    }

    #[test]
    fn round_trip_small() {
        for n in 1..=120u64 {
            for d in 1..=n {
                if num_integer::gcd(n, d) != 1 {
                    continue;
                }
                let e = hj_expand(n, d).unwrap();
                assert_eq!(hj_eval(&e).unwrap(), frac(n, d), "n={} d={}", n, d);
                assert!(e.iter().all(|&a| a >= 2));
            }
        }
    }

    #[test]
    fn criteria_agree_small() {
        for n in 2..=200u64 {
            for d in 1..n {
                if num_integer::gcd(n, d) != 1 {
                    continue;
                }
                assert_eq!(
                    is_critical_pair(n, d).unwrap(),
                    is_critical_pair_arith(n, d).unwrap(),
                    "n={} d={}",
                    n,
                    d
                );
            }
        }
    }

    #[test]
    fn reversal_duality_small() {
        for n in 2..=150u64 {
            for d in 1..n {
                if num_integer::gcd(n, d) != 1 {
                    continue;
                }
                let b = mod_inverse(d, n).unwrap();
                let mut rev = hj_expand(n, d).unwrap();
                rev.reverse();
                assert_eq!(hj_expand(n, b).unwrap(), rev, "n={} d={}", n, d);
            }
        }
    }
}

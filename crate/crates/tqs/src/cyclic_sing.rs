//! Normalized cyclic quotient singularities 1/n(1,d) and the type-R decision.
//!
//! A diagonal action of a cyclic group of order a with eigenvalue exponents
//! (e1, e2) is normalized by peeling off the subgroup generated by
//! pseudoreflections (powers with one eigenvalue equal to 1) and then
//! reparametrizing to the form 1/n(1,d). The pair (n,d) and its dual
//! (n, d^{-1} mod n) denote the same singularity, so the canonical
//! representative takes the smaller of the two.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::factorize;
use crate::hjcf::mod_inverse;

/// Normalized singularity datum 1/n(1,d): 1 <= d <= n, gcd(n,d) = 1,
/// d = min(d, d^{-1} mod n). n = 1 encodes the smooth point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicType {
    n: u64,
    d: u64,
}

impl CyclicType {
    pub fn new(n: u64, d: u64) -> Result<CyclicType> {
        if n == 0 || d == 0 || d > n {
            return Err(Error::OutOfRange(format!(
                "need 1 <= d <= n, got n = {}, d = {}",
                n, d
            )));
        }
        if n.gcd(&d) != 1 {
            return Err(Error::NotCoprime(n, d));
        }
        let b = mod_inverse(d, n)?;
        Ok(CyclicType { n, d: d.min(b) })
    }

    pub fn smooth() -> CyclicType {
        CyclicType { n: 1, d: 1 }
    }

    pub fn is_smooth(&self) -> bool {
        self.n == 1
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// The dual parameter b = d^{-1} mod n (the same singularity with the
    /// eigenvectors swapped).
    pub fn dual_d(&self) -> u64 {
        mod_inverse(self.d, self.n).expect("fields are coprime by construction")
    }
}

impl fmt::Display for CyclicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.n, self.d)
    }
}

/// A diagonal cyclic action: group order a, eigenvalue exponents e1, e2
/// (taken mod a). Faithful means gcd(a, e1, e2) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightedAction {
    a: u64,
    e1: u64,
    e2: u64,
}

impl WeightedAction {
    pub fn new(a: u64, e1: u64, e2: u64) -> Result<WeightedAction> {
        if a == 0 {
            return Err(Error::OutOfRange("group order must be positive".into()));
        }
        let e1 = e1 % a;
        let e2 = e2 % a;
        if a.gcd(&e1).gcd(&e2) != 1 {
            return Err(Error::NotFaithful);
        }
        Ok(WeightedAction { a, e1, e2 })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn e1(&self) -> u64 {
        self.e1
    }

    pub fn e2(&self) -> u64 {
        self.e2
    }
}

/// Normalize the quotient of the plane by diag(zeta_a^e1, zeta_a^e2):
/// repeatedly peel c1 = gcd(a, e1) and c2 = gcd(a, e2) (the pseudoreflection
/// directions), then reparametrize to 1/n(1, d) with d = e2 * e1^{-1} mod n.
/// The loop terminates because a strictly decreases at every peel.
pub fn from_weights(w: &WeightedAction) -> CyclicType {
    let (mut a, mut e1, mut e2) = (w.a, w.e1, w.e2);
    loop {
        let c1 = a.gcd(&e1);
        if c1 > 1 {
            a /= c1;
            e1 /= c1;
            e1 %= a.max(1);
            e2 %= a.max(1);
            continue;
        }
        let c2 = a.gcd(&e2);
        if c2 > 1 {
            a /= c2;
            e2 /= c2;
            e1 %= a.max(1);
            e2 %= a.max(1);
            continue;
        }
        break;
    }
    if a == 1 {
        return CyclicType::smooth();
    }
    // both e1 and e2 are now units mod a
    let inv_e1 = mod_inverse(e1, a).expect("e1 is a unit after peeling");
    let d = (e2 % a) * inv_e1 % a;
    let d = if d == 0 { a } else { d };
    CyclicType::new(a, d).expect("normalized weights are coprime")
}

/// Decide whether the singularity 1/n(1,d) is of type R in characteristic p
/// (p = 0 or a prime not dividing n). It fails to be of type R exactly when
/// n is even and d = +-1 modulo every maximal prime power dividing n.
pub fn is_type_r(t: &CyclicType, p: u64) -> Result<bool> {
    if p != 0 && !is_prime(p) {
        return Err(Error::OutOfRange(format!(
            "characteristic must be 0 or prime, got {}",
            p
        )));
    }
    if p != 0 && t.n % p == 0 {
        return Err(Error::NotTame(p, t.n));
    }
    if t.n % 2 != 0 {
        return Ok(true);
    }
    for (l, e) in factorize(t.n) {
        let q = l.pow(e);
        let r = t.d % q;
        if r != 1 % q && r != q - 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= p {
        if p % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// A basis of a rank-2 sublattice of Z^2 in row Hermite normal form:
/// rows [[a, b], [0, c]] with a, c > 0 and 0 <= b < c.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeBasis(pub [[i64; 2]; 2]);

impl LatticeBasis {
    /// The index of the lattice in Z^2.
    pub fn index(&self) -> i64 {
        self.0[0][0] * self.0[1][1]
    }
}

/// Hermite-form basis of the lattice of invariant monomial exponents
/// {(alpha, beta) : alpha*e1 + beta*e2 = 0 (mod a)}.
pub fn invariant_lattice(w: &WeightedAction) -> LatticeBasis {
    let a = w.a as i64;
    let (e1, e2) = (w.e1 as i64, w.e2 as i64);
    let mut rows: Vec<[i64; 2]> = vec![[a, 0], [0, a]];
    for alpha in 0..a {
        for beta in 0..a {
            if (alpha * e1 + beta * e2) % a == 0 {
                rows.push([alpha, beta]);
            }
        }
    }
    hermite_form(&rows)
}

/// Row Hermite normal form of a full-rank set of generators of a sublattice
/// of Z^2: [[a, b], [0, c]], a, c > 0, 0 <= b < c.
pub fn hermite_form(rows: &[[i64; 2]]) -> LatticeBasis {
    let mut rows: Vec<[i64; 2]> = rows.to_vec();
    // pivot in column 0 via the Euclidean algorithm on rows
    loop {
        rows.retain(|r| r != &[0, 0]);
        let mut nonzero: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][0] != 0).collect();
        nonzero.sort_by_key(|&i| rows[i][0].abs());
        if nonzero.len() <= 1 {
            break;
        }
        let i = nonzero[0];
        let pivot = rows[i];
        for &j in &nonzero[1..] {
            let q = rows[j][0].div_euclid(pivot[0]);
            rows[j][0] -= q * pivot[0];
            rows[j][1] -= q * pivot[1];
        }
    }
    let mut first = rows
        .iter()
        .find(|r| r[0] != 0)
        .copied()
        .expect("rank-2 lattice expected");
    if first[0] < 0 {
        first = [-first[0], -first[1]];
    }
    let mut c = 0i64;
    for r in &rows {
        if r[0] == 0 {
            c = if c == 0 { r[1].abs() } else { c.gcd(&r[1].abs()) };
        }
    }
    assert!(c > 0, "rank-2 lattice expected");
    first[1] = first[1].rem_euclid(c);
    LatticeBasis([[first[0], first[1]], [0, c]])
}

//! Invariant theory of reflection subgroups of GL_2 and the full
//! group-to-singularity pipeline.
//!
//! For a finite P < GL_2 generated by pseudoreflections, the invariant ring
//! K[x,y]^P is a polynomial ring on two homogeneous generators f1, f2 with
//! deg f1 * deg f2 = |P| (Chevalley-Shephard-Todd). The dimensions of the
//! graded pieces come from the Molien series, bases from Reynolds averaging,
//! and the singularity of A^2/G is read off the induced action of a coset
//! generator of G/P on span(f1, f2) modulo the square of the maximal ideal.
//!
//! Both the Molien sums and the Reynolds averages factor through the scalar
//! subgroup of P: a scalar lambda multiplies a degree-k monomial by lambda^k,
//! so the sum over P collapses to a sum over scalar-coset representatives
//! with a divisibility gate on k. The collapsed sums are what make the large
//! icosahedral reflection groups tractable.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cyclic_sing::{from_weights, is_type_r, CyclicType, WeightedAction};
use crate::error::{Error, Result};
use crate::exact::{Cyclo, Rational};
use crate::matgrp::{
    pseudoreflection_subgroup, quotient_structure, FiniteMatrixGroup, Mat2, QuotientStructure,
};

/// A sparse bivariate polynomial over a cyclotomic field, keyed by
/// (x-degree, y-degree). Canonical: no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly2 {
    conductor: u32,
    terms: BTreeMap<(u32, u32), Cyclo>,
}

impl Poly2 {
    pub fn zero(conductor: u32) -> Result<Poly2> {
        Cyclo::zero(conductor)?;
        Ok(Poly2 {
            conductor,
            terms: BTreeMap::new(),
        })
    }

    pub fn monomial(conductor: u32, xdeg: u32, ydeg: u32, coeff: Cyclo) -> Result<Poly2> {
        if coeff.conductor() != conductor {
            return Err(Error::ConductorMismatch(conductor, coeff.conductor()));
        }
        let mut p = Poly2::zero(conductor)?;
        if !coeff.is_zero() {
            p.terms.insert((xdeg, ydeg), coeff);
        }
        Ok(p)
    }

    pub fn var_x(conductor: u32) -> Result<Poly2> {
        Poly2::monomial(conductor, 1, 0, Cyclo::one(conductor)?)
    }

    pub fn var_y(conductor: u32) -> Result<Poly2> {
        Poly2::monomial(conductor, 0, 1, Cyclo::one(conductor)?)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Cyclo> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: (u32, u32)) -> Option<&Cyclo> {
        self.terms.get(&key)
    }

    fn add_assign_term(&mut self, key: (u32, u32), val: Cyclo) -> Result<()> {
        match self.terms.remove(&key) {
            None => {
                if !val.is_zero() {
                    self.terms.insert(key, val);
                }
            }
            Some(old) => {
                let sum = old.add(&val)?;
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Poly2) -> Result<Poly2> {
        if self.conductor != rhs.conductor {
            return Err(Error::ConductorMismatch(self.conductor, rhs.conductor));
        }
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_assign_term(*k, v.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Poly2) -> Result<Poly2> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly2 {
        Poly2 {
            conductor: self.conductor,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Cyclo) -> Result<Poly2> {
        if c.conductor() != self.conductor {
            return Err(Error::ConductorMismatch(self.conductor, c.conductor()));
        }
        if c.is_zero() {
            return Poly2::zero(self.conductor);
        }
        let mut out = Poly2::zero(self.conductor)?;
        for (k, v) in &self.terms {
            out.add_assign_term(*k, v.mul(c)?)?;
        }
        Ok(out)
    }

    pub fn scale_rational(&self, r: &Rational) -> Poly2 {
        if r.is_zero() {
            return Poly2 {
                conductor: self.conductor,
                terms: BTreeMap::new(),
            };
        }
        Poly2 {
            conductor: self.conductor,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.scale(r)))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly2) -> Result<Poly2> {
        if self.conductor != rhs.conductor {
            return Err(Error::ConductorMismatch(self.conductor, rhs.conductor));
        }
        let mut out = Poly2::zero(self.conductor)?;
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_assign_term((a1 + a2, b1 + b2), c1.mul(c2)?)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Poly2> {
        let mut out = Poly2::monomial(self.conductor, 0, 0, Cyclo::one(self.conductor)?)?;
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn partial_x(&self) -> Poly2 {
        let mut terms = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            if *a > 0 {
                let scaled = c.scale(&Rational::from_integer((*a).into()));
                terms.insert((*a - 1, *b), scaled);
            }
        }
        Poly2 {
            conductor: self.conductor,
            terms,
        }
    }

    pub fn partial_y(&self) -> Poly2 {
        let mut terms = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            if *b > 0 {
                let scaled = c.scale(&Rational::from_integer((*b).into()));
                terms.insert((*a, *b - 1), scaled);
            }
        }
        Poly2 {
            conductor: self.conductor,
            terms,
        }
    }

    /// Re-express every coefficient in a larger cyclotomic field.
    pub fn embed(&self, conductor: u32) -> Result<Poly2> {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            terms.insert(*k, v.embed(conductor)?);
        }
        Ok(Poly2 { conductor, terms })
    }

    /// Total degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let mut deg = None;
        for (a, b) in self.terms.keys() {
            let d = a + b;
            match deg {
                None => deg = Some(d),
                Some(prev) if prev == d => {}
                Some(prev) => {
                    return Err(Error::OutOfRange(format!(
                        "polynomial is not homogeneous: degrees {} and {}",
                        prev, d
                    )))
                }
            }
        }
        deg.ok_or_else(|| Error::OutOfRange("zero polynomial has no degree".into()))
    }

    /// Substitute the linear change of variables given by a matrix:
    /// (x, y) -> (a x + b y, c x + d y) for M = [[a, b], [c, d]].
    pub fn substitute(&self, m: &Mat2) -> Result<Poly2> {
        if m.conductor() != self.conductor {
            return Err(Error::ConductorMismatch(self.conductor, m.conductor()));
        }
        let [a, b, c, d] = m.entries();
        let mut rows1: HashMap<u32, Vec<Cyclo>> = HashMap::new();
        let mut rows2: HashMap<u32, Vec<Cyclo>> = HashMap::new();
        for (alpha, beta) in self.terms.keys() {
            if !rows1.contains_key(alpha) {
                rows1.insert(*alpha, linear_form_pow(a, b, *alpha)?);
            }
            if !rows2.contains_key(beta) {
                rows2.insert(*beta, linear_form_pow(c, d, *beta)?);
            }
        }
        let mut out = Poly2::zero(self.conductor)?;
        for ((alpha, beta), coeff) in &self.terms {
            let r1 = &rows1[alpha];
            let r2 = &rows2[beta];
            for (i, u) in r1.iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                let cu = coeff.mul(u)?;
                for (j, v) in r2.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let x = (i + j) as u32;
                    let y = alpha + beta - x;
                    out.add_assign_term((x, y), cu.mul(v)?)?;
                }
            }
        }
        Ok(out)
    }
}

/// Coefficients of (a x + b y)^k: entry i is binom(k, i) a^i b^{k-i},
/// the coefficient of x^i y^{k-i}.
fn linear_form_pow(a: &Cyclo, b: &Cyclo, k: u32) -> Result<Vec<Cyclo>> {
    let k = k as usize;
    let n = a.conductor();
    let mut pa = Vec::with_capacity(k + 1);
    let mut pb = Vec::with_capacity(k + 1);
    pa.push(Cyclo::one(n)?);
    pb.push(Cyclo::one(n)?);
    for i in 1..=k {
        pa.push(pa[i - 1].mul(a)?);
        pb.push(pb[i - 1].mul(b)?);
    }
    let mut out = Vec::with_capacity(k + 1);
    let mut binom = BigInt::one();
    for i in 0..=k {
        if i > 0 {
            binom = binom * BigInt::from(k - i + 1) / BigInt::from(i);
        }
        let c = pa[i].mul(&pb[k - i])?;
        out.push(c.scale(&Rational::from_integer(binom.clone())));
    }
    Ok(out)
}

/// Jacobian determinant of a pair of polynomials.
pub fn jacobian_det(f: &Poly2, g: &Poly2) -> Result<Poly2> {
    let fx = f.partial_x();
    let fy = f.partial_y();
    let gx = g.partial_x();
    let gy = g.partial_y();
    fx.mul(&gy)?.sub(&fy.mul(&gx)?)
}

/// Scalar subgroup order of P together with one representative per scalar
/// coset. Sums over P of degree-graded quantities collapse to these.
fn scalar_coset_reps(p: &FiniteMatrixGroup) -> Result<(u64, Vec<usize>)> {
    let scalars: Vec<Cyclo> = p
        .elements()
        .filter_map(|m| m.as_scalar().cloned())
        .collect();
    let s = scalars.len() as u64;
    let n = p.order() as usize;
    let mut visited = vec![false; n];
    let mut reps = Vec::new();
    for i in 0..n {
        if visited[i] {
            continue;
        }
        reps.push(i);
        for lam in &scalars {
            let m = p.element(i).scalar_mul(lam)?;
            let j = p
                .index_of(&m)
                .ok_or_else(|| Error::Internal("scalar multiple left the group".into()))?;
            visited[j] = true;
        }
    }
    Ok((s, reps))
}

/// Incremental Molien series: yields dim K[x,y]^P_k for k = 0, 1, 2, ...
///
/// dim_k = (1/|P|) sum_{g in P} [t^k] 1/det(1 - t g); each summand satisfies
/// c_k = tr(g) c_{k-1} - det(g) c_{k-2}, and the scalar part of P contributes
/// the factor s*[s | k], leaving a sum over coset representatives.
struct MolienScanner {
    s: u64,
    tr: Vec<Cyclo>,
    dt: Vec<Cyclo>,
    prev: Vec<Cyclo>, // c_{k-1}
    cur: Vec<Cyclo>,  // c_k
    k: u64,
}

impl MolienScanner {
    fn new(p: &FiniteMatrixGroup) -> Result<MolienScanner> {
        let (s, reps) = scalar_coset_reps(p)?;
        let n = p.conductor();
        let mut tr = Vec::with_capacity(reps.len());
        let mut dt = Vec::with_capacity(reps.len());
        for &i in &reps {
            tr.push(p.element(i).trace());
            dt.push(p.element(i).det());
        }
        let one = Cyclo::one(n)?;
        let zero = Cyclo::zero(n)?;
        Ok(MolienScanner {
            s,
            tr,
            dt,
            prev: vec![zero; reps.len()],
            cur: vec![one; reps.len()],
            k: 0,
        })
    }

    /// Dimension in the current degree, then advance to the next one.
    fn next_dim(&mut self) -> Result<u64> {
        let dim = if self.k % self.s == 0 {
            let n = self.tr.first().map_or(1, |t| t.conductor());
            let mut sum = Cyclo::zero(n)?;
            for c in &self.cur {
                sum = sum.add(c)?;
            }
            let total = sum
                .as_rational()
                .ok_or_else(|| Error::Internal("Molien sum is irrational".into()))?;
            let avg = total / Rational::from_integer((self.cur.len() as i64).into());
            if !avg.is_integer() || avg.is_negative() {
                return Err(Error::Internal(format!(
                    "Molien dimension in degree {} is {}",
                    self.k, avg
                )));
            }
            let v: BigInt = avg.to_integer();
            u64::try_from(v).map_err(|_| Error::Internal("Molien dimension overflow".into()))?
        } else {
            0
        };
        // advance the recurrences
        let mut next = Vec::with_capacity(self.cur.len());
        for i in 0..self.cur.len() {
            let t = self.tr[i].mul(&self.cur[i])?;
            let d = self.dt[i].mul(&self.prev[i])?;
            next.push(t.sub(&d)?);
        }
        self.prev = std::mem::replace(&mut self.cur, next);
        self.k += 1;
        Ok(dim)
    }
}

/// Dimensions of the invariant subspaces of degrees 0..=degree_bound.
pub fn molien_dimensions(p: &FiniteMatrixGroup, degree_bound: usize) -> Result<Vec<u64>> {
    let mut scanner = MolienScanner::new(p)?;
    let mut dims = Vec::with_capacity(degree_bound + 1);
    for _ in 0..=degree_bound {
        dims.push(scanner.next_dim()?);
    }
    Ok(dims)
}

/// Reynolds average of the monomial x^alpha y^beta over P, using the scalar
/// collapse: zero unless s | alpha + beta, else the average over coset reps.
fn reynolds_monomial(
    p: &FiniteMatrixGroup,
    s: u64,
    reps: &[usize],
    alpha: u32,
    beta: u32,
) -> Result<Poly2> {
    let n = p.conductor();
    if u64::from(alpha + beta) % s != 0 {
        return Poly2::zero(n);
    }
    let mono = Poly2::monomial(n, alpha, beta, Cyclo::one(n)?)?;
    let mut acc = Poly2::zero(n)?;
    for &i in reps {
        acc = acc.add(&mono.substitute(p.element(i))?)?;
    }
    Ok(acc.scale_rational(&Rational::new(1.into(), (reps.len() as i64).into())))
}

/// Dense coefficient row of a homogeneous degree-k polynomial, indexed by
/// x-degree.
fn poly_to_row(f: &Poly2, k: u32) -> Result<Vec<Cyclo>> {
    let n = f.conductor();
    let mut row = vec![Cyclo::zero(n)?; k as usize + 1];
    for ((a, b), c) in f.terms() {
        if a + b != k {
            return Err(Error::Internal("inhomogeneous invariant row".into()));
        }
        row[*a as usize] = c.clone();
    }
    Ok(row)
}

/// Incremental row reduction for linear-independence bookkeeping.
struct RowReducer {
    width: usize,
    rows: Vec<(usize, Vec<Cyclo>)>,
}

impl RowReducer {
    fn new(width: usize) -> RowReducer {
        RowReducer { width, rows: vec![] }
    }

    /// Reduce against the stored rows; store and report true if independent.
    fn insert(&mut self, mut row: Vec<Cyclo>) -> Result<bool> {
        for (p, r) in &self.rows {
            if !row[*p].is_zero() {
                let f = row[*p].clone();
                for i in 0..self.width {
                    row[i] = row[i].sub(&f.mul(&r[i])?)?;
                }
            }
        }
        match (0..self.width).find(|&i| !row[i].is_zero()) {
            None => Ok(false),
            Some(p) => {
                let inv = row[p].inv()?;
                for i in 0..self.width {
                    row[i] = row[i].mul(&inv)?;
                }
                self.rows.push((p, row));
                Ok(true)
            }
        }
    }
}

/// A basis of the degree-k invariants of P, built by Reynolds-averaging the
/// monomials of degree k and keeping a maximal linearly independent set. The
/// cardinality always equals the Molien dimension in that degree, which is
/// computed first so the averaging stops as soon as the space is spanned.
pub fn invariant_basis(p: &FiniteMatrixGroup, k: u32) -> Result<Vec<Poly2>> {
    let target = *molien_dimensions(p, k as usize)?.last().expect("k+1 entries");
    let (s, reps) = scalar_coset_reps(p)?;
    let mut reducer = RowReducer::new(k as usize + 1);
    let mut basis = Vec::new();
    for alpha in (0..=k).rev() {
        if basis.len() as u64 == target {
            break;
        }
        let avg = reynolds_monomial(p, s, &reps, alpha, k - alpha)?;
        if avg.is_zero() {
            continue;
        }
        if reducer.insert(poly_to_row(&avg, k)?)? {
            basis.push(avg);
        }
    }
    if basis.len() as u64 != target {
        return Err(Error::Internal(format!(
            "Reynolds averages spanned {} dimensions in degree {}, Molien expects {}",
            basis.len(),
            k,
            target
        )));
    }
    Ok(basis)
}

/// Rewrite a group over the smallest cyclotomic subfield containing its
/// generators (every element follows, the subfield being closed under the
/// matrix arithmetic). The invariant computations are quadratic in the
/// power-basis length, so dropping from, say, phi(420) = 96 to phi(60) = 16
/// coordinates is a large constant-factor win.
fn at_minimal_conductor(p: &FiniteMatrixGroup) -> Result<FiniteMatrixGroup> {
    let n = p.conductor();
    'candidates: for m in crate::exact::divisors(u64::from(n)) {
        let m = m as u32;
        if m == n {
            break;
        }
        let mut lowered: Vec<Mat2> = Vec::with_capacity(p.generators().len());
        for g in p.generators() {
            let mut entries: Vec<Cyclo> = Vec::with_capacity(4);
            for e in g.entries() {
                match crate::exact::lower_conductor(e, m)? {
                    Some(x) => entries.push(x),
                    None => continue 'candidates,
                }
            }
            lowered.push(Mat2::new(
                entries[0].clone(),
                entries[1].clone(),
                entries[2].clone(),
                entries[3].clone(),
            )?);
        }
        if lowered.is_empty() {
            return FiniteMatrixGroup::trivial(m);
        }
        return FiniteMatrixGroup::generate(&lowered, p.order());
    }
    Ok(p.clone())
}

/// Fundamental invariants (f1, f2) of a reflection group P: homogeneous,
/// algebraically independent, deg f1 <= deg f2, deg f1 * deg f2 = |P|.
/// f1 spans (or helps span) the nonzero invariant space of least degree.
/// Coefficients come back at the conductor of P, but the averaging itself
/// runs at the minimal conductor of the group.
pub fn fundamental_invariants(p: &FiniteMatrixGroup) -> Result<(Poly2, Poly2)> {
    let n = p.conductor();
    if p.order() == 1 {
        return Ok((Poly2::var_x(n)?, Poly2::var_y(n)?));
    }
    let small = at_minimal_conductor(p)?;
    let (f1, f2) = fundamental_invariants_direct(&small)?;
    Ok((f1.embed(n)?, f2.embed(n)?))
}

fn fundamental_invariants_direct(p: &FiniteMatrixGroup) -> Result<(Poly2, Poly2)> {
    let refl = pseudoreflection_subgroup(p)?;
    if refl.order() != p.order() {
        return Err(Error::NotReflectionGroup);
    }
    let n = p.conductor();
    if p.order() == 1 {
        return Ok((Poly2::var_x(n)?, Poly2::var_y(n)?));
    }
    let mut scanner = MolienScanner::new(p)?;
    scanner.next_dim()?; // degree 0
    let mut d1 = 0u32;
    let mut dim1 = 0u64;
    for k in 1..=p.order() {
        let dim = scanner.next_dim()?;
        if dim > 0 {
            d1 = u32::try_from(k).map_err(|_| Error::GroupTooLarge(p.order()))?;
            dim1 = dim;
            break;
        }
    }
    if d1 == 0 {
        return Err(Error::Internal(
            "no invariants found up to the group order".into(),
        ));
    }
    if p.order() % u64::from(d1) != 0 {
        return Err(Error::Internal(
            "minimal invariant degree does not divide the group order".into(),
        ));
    }
    let d2 = u32::try_from(p.order() / u64::from(d1))
        .map_err(|_| Error::GroupTooLarge(p.order()))?;
    let basis1 = invariant_basis(p, d1)?;
    if basis1.len() as u64 != dim1 {
        return Err(Error::Internal(
            "Reynolds basis disagrees with the Molien dimension".into(),
        ));
    }
    if d1 == d2 {
        if basis1.len() != 2 {
            return Err(Error::Internal(format!(
                "degree {} = {} invariants should be a plane, found dimension {}",
                d1,
                d2,
                basis1.len()
            )));
        }
        let f1 = basis1[0].clone();
        let f2 = basis1[1].clone();
        if jacobian_det(&f1, &f2)?.is_zero() {
            return Err(Error::Internal(
                "basis of the least degree is algebraically dependent".into(),
            ));
        }
        Ok((f1, f2))
    } else {
        if basis1.len() != 1 {
            return Err(Error::Internal(format!(
                "least-degree invariant space should be a line, found dimension {}",
                basis1.len()
            )));
        }
        let f1 = basis1[0].clone();
        let basis2 = invariant_basis(p, d2)?;
        for f2 in basis2 {
            if !jacobian_det(&f1, &f2)?.is_zero() {
                return Ok((f1, f2));
            }
        }
        Err(Error::Internal(
            "no algebraically independent invariant at the complementary degree".into(),
        ))
    }
}

/// Express `target` exactly in the span of `basis`; the coefficients are
/// returned in basis order. Errors with `InconsistentExpansion` when the
/// target is outside the span.
fn solve_in_span(basis: &[Poly2], target: &Poly2) -> Result<Vec<Cyclo>> {
    let n = target.conductor();
    let mut keys: BTreeSet<(u32, u32)> = target.terms().keys().copied().collect();
    for b in basis {
        keys.extend(b.terms().keys().copied());
    }
    let keys: Vec<(u32, u32)> = keys.into_iter().collect();
    let cols = basis.len();
    let zero = Cyclo::zero(n)?;
    // rows of [A | b]
    let mut rows: Vec<Vec<Cyclo>> = keys
        .iter()
        .map(|k| {
            let mut row: Vec<Cyclo> = basis
                .iter()
                .map(|f| f.coeff(*k).cloned().unwrap_or_else(|| zero.clone()))
                .collect();
            row.push(target.coeff(*k).cloned().unwrap_or_else(|| zero.clone()));
            row
        })
        .collect();
    let mut pivot_row_of_col = vec![usize::MAX; cols];
    let mut used = vec![false; rows.len()];
    for j in 0..cols {
        let Some(r) = (0..rows.len()).find(|&r| !used[r] && !rows[r][j].is_zero()) else {
            return Err(Error::Internal(
                "expansion basis is linearly dependent".into(),
            ));
        };
        used[r] = true;
        pivot_row_of_col[j] = r;
        let inv = rows[r][j].inv()?;
        for e in rows[r].iter_mut() {
            *e = e.mul(&inv)?;
        }
        let pivot = rows[r].clone();
        for (rr, row) in rows.iter_mut().enumerate() {
            if rr == r || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (e, pe) in row.iter_mut().zip(&pivot) {
                *e = e.sub(&f.mul(pe)?)?;
            }
        }
    }
    for (r, row) in rows.iter().enumerate() {
        if !used[r] && !row[cols].is_zero() {
            return Err(Error::InconsistentExpansion(
                "substituted invariant is outside the invariant ring".into(),
            ));
        }
    }
    pivot_row_of_col
        .iter()
        .map(|&r| Ok(rows[r][cols].clone()))
        .collect()
}

/// The matrix of the action of a coset generator omega of the cyclic
/// quotient G/P on span(f1, f2) modulo the square of the maximal ideal:
/// substitute omega into each f_i and expand in the invariant ring,
/// discarding the f1^k (k >= 2) component as a higher-order term.
pub fn cotangent_action(
    g: &FiniteMatrixGroup,
    p: &FiniteMatrixGroup,
    omega: &Mat2,
    f1: &Poly2,
    f2: &Poly2,
) -> Result<Mat2> {
    if !g.contains(omega) {
        return Err(Error::OutOfRange(
            "the coset generator must be an element of the group".into(),
        ));
    }
    if p.conductor() != g.conductor() {
        return Err(Error::ConductorMismatch(g.conductor(), p.conductor()));
    }
    let d1 = f1.homogeneous_degree()?;
    let d2 = f2.homogeneous_degree()?;
    if d1 > d2 {
        return Err(Error::OutOfRange(
            "fundamental invariants must be ordered by degree".into(),
        ));
    }
    let h1 = f1.substitute(omega)?;
    let h2 = f2.substitute(omega)?;
    let n = g.conductor();
    let zero = Cyclo::zero(n)?;
    if d1 == d2 {
        let c1 = solve_in_span(&[f1.clone(), f2.clone()], &h1)?;
        let c2 = solve_in_span(&[f1.clone(), f2.clone()], &h2)?;
        Mat2::new(c1[0].clone(), c2[0].clone(), c1[1].clone(), c2[1].clone())
    } else {
        let a = solve_in_span(std::slice::from_ref(f1), &h1)?.remove(0);
        let mut basis = vec![f2.clone()];
        if d2 % d1 == 0 {
            basis.push(f1.pow(d2 / d1)?);
        }
        let c = solve_in_span(&basis, &h2)?;
        Mat2::new(a, zero.clone(), zero, c[0].clone())
    }
}

/// Eigenvalues of a finite-order 2x2 matrix whose order divides t: both are
/// t-th roots of unity, found by direct evaluation of the characteristic
/// polynomial on mu_t.
fn eigenvalues_in_mu(m: &Mat2, t: u64) -> Result<(Cyclo, Cyclo)> {
    let l64 = num_integer::lcm(u64::from(m.conductor()), t);
    let l = u32::try_from(l64)
        .map_err(|_| Error::ConductorTooLarge(u32::MAX, crate::exact::conductor_cap()))?;
    let mm = m.embed(l)?;
    let tr = mm.trace();
    let det = mm.det();
    let step = (l64 / t) as i64;
    for k in 0..t {
        let lam = Cyclo::root_of_unity(l, step * k as i64)?;
        let val = lam.mul(&lam)?.sub(&tr.mul(&lam)?)?.add(&det)?;
        if val.is_zero() {
            let other = tr.sub(&lam)?;
            if lam.mul(&other)? != det {
                return Err(Error::Internal("eigenvalue factorization failed".into()));
            }
            return Ok((lam, other));
        }
    }
    Err(Error::Internal(
        "no eigenvalue among the roots of unity of the expected order".into(),
    ))
}

/// Outcome of the group-to-singularity pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSingularity {
    /// The group is generated by pseudoreflections; the quotient is smooth.
    Smooth,
    /// G/P is not cyclic; such quotients are always of type R.
    NonCyclicQuotient,
    /// Cyclic quotient singularity with its type-R verdict (characteristic 0).
    Classified {
        quotient: CyclicType,
        type_r: bool,
    },
}

impl GroupSingularity {
    pub fn is_type_r(&self) -> bool {
        match self {
            GroupSingularity::Smooth | GroupSingularity::NonCyclicQuotient => true,
            GroupSingularity::Classified { type_r, .. } => *type_r,
        }
    }
}

/// Full pipeline: pseudoreflection subgroup, quotient structure, fundamental
/// invariants, cotangent action, eigenvalue exponents, weight normalization,
/// type-R decision (characteristic 0).
///
/// The claim that G/P acts faithfully and without pseudoreflections on
/// A^2/P is re-checked at runtime: the cotangent matrix must have order
/// exactly |G/P| and the normalized type must keep that order.
pub fn singularity_of_group(g: &FiniteMatrixGroup) -> Result<GroupSingularity> {
    let p = pseudoreflection_subgroup(g)?;
    if p.order() == g.order() {
        return Ok(GroupSingularity::Smooth);
    }
    let (t, omega) = match quotient_structure(g, &p)? {
        QuotientStructure::NonCyclic => return Ok(GroupSingularity::NonCyclicQuotient),
        QuotientStructure::Cyclic { order, generator } => (order, generator),
    };
    let (f1, f2) = fundamental_invariants(&p)?;
    let cm = cotangent_action(g, &p, &omega, &f1, &f2)?;
    match cm.order(t) {
        Ok(o) if o == t => {}
        _ => {
            return Err(Error::Internal(
                "cotangent action order differs from |G/P|".into(),
            ))
        }
    }
    let (l1, l2) = eigenvalues_in_mu(&cm, t)?;
    let (o1, k1) = l1
        .root_of_unity_log()
        .ok_or_else(|| Error::Internal("cotangent eigenvalue is not a root of unity".into()))?;
    let (o2, k2) = l2
        .root_of_unity_log()
        .ok_or_else(|| Error::Internal("cotangent eigenvalue is not a root of unity".into()))?;
    let a = num_integer::lcm(o1, o2);
    let w = WeightedAction::new(a, k1 * (a / o1), k2 * (a / o2))?;
    let quotient = from_weights(&w);
    if quotient.n() != t {
        return Err(Error::Internal(
            "quotient action by G/P still contained pseudoreflections".into(),
        ));
    }
    let type_r = is_type_r(&quotient, 0)?;
    Ok(GroupSingularity::Classified { quotient, type_r })
}

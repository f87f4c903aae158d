//! Finite subgroups of GL_2 over cyclotomic fields.
//!
//! Groups are explicit element sets produced by breadth-first closure of a
//! generator list; canonical coefficient vectors make membership a hash
//! lookup. On top of the closure this module computes the subgroup generated
//! by pseudoreflections, cyclic-quotient structure, the scalar subgroup and
//! the isomorphism type of the image in PGL_2.

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{parse_cyclo_in, Cyclo};

/// Default closure bound; the classification sweep stays well below it.
pub const DEFAULT_MAX_ORDER: u64 = 10_000;

/// A 2x2 matrix over a cyclotomic field, entries sharing one conductor,
/// stored row-major as [a, b, c, d].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    e: [Cyclo; 4],
}

impl Mat2 {
    pub fn new(a: Cyclo, b: Cyclo, c: Cyclo, d: Cyclo) -> Result<Mat2> {
        let n = a.conductor();
        for x in [&b, &c, &d] {
            if x.conductor() != n {
                return Err(Error::ConductorMismatch(n, x.conductor()));
            }
        }
        Ok(Mat2 { e: [a, b, c, d] })
    }

    pub fn identity(n: u32) -> Result<Mat2> {
        let one = Cyclo::one(n)?;
        let zero = Cyclo::zero(n)?;
        Mat2::new(one.clone(), zero.clone(), zero, one)
    }

    /// diag(x, y).
    pub fn diagonal(x: Cyclo, y: Cyclo) -> Result<Mat2> {
        let zero = Cyclo::zero(x.conductor())?;
        Mat2::new(x, zero.clone(), zero, y)
    }

    /// antidiag(x, y) = [[0, x], [y, 0]].
    pub fn antidiagonal(x: Cyclo, y: Cyclo) -> Result<Mat2> {
        let zero = Cyclo::zero(x.conductor())?;
        Mat2::new(zero.clone(), x, y, zero)
    }

    pub fn conductor(&self) -> u32 {
        self.e[0].conductor()
    }

    pub fn entries(&self) -> &[Cyclo; 4] {
        &self.e
    }

    pub fn entry(&self, row: usize, col: usize) -> &Cyclo {
        &self.e[2 * row + col]
    }

    pub fn mul(&self, rhs: &Mat2) -> Result<Mat2> {
        let [a, b, c, d] = &self.e;
        let [e, f, g, h] = &rhs.e;
        Mat2::new(
            a.mul(e)?.add(&b.mul(g)?)?,
            a.mul(f)?.add(&b.mul(h)?)?,
            c.mul(e)?.add(&d.mul(g)?)?,
            c.mul(f)?.add(&d.mul(h)?)?,
        )
    }

    pub fn det(&self) -> Cyclo {
        let [a, b, c, d] = &self.e;
        a.mul(d)
            .and_then(|ad| ad.sub(&b.mul(c)?))
            .expect("entries share a conductor")
    }

    pub fn trace(&self) -> Cyclo {
        self.e[0].add(&self.e[3]).expect("entries share a conductor")
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv = det.inv()?;
        let [a, b, c, d] = &self.e;
        Mat2::new(
            d.mul(&inv)?,
            b.neg().mul(&inv)?,
            c.neg().mul(&inv)?,
            a.mul(&inv)?,
        )
    }

    /// Multiply every entry by a scalar.
    pub fn scalar_mul(&self, s: &Cyclo) -> Result<Mat2> {
        Mat2::new(
            self.e[0].mul(s)?,
            self.e[1].mul(s)?,
            self.e[2].mul(s)?,
            self.e[3].mul(s)?,
        )
    }

    pub fn embed(&self, m: u32) -> Result<Mat2> {
        Mat2::new(
            self.e[0].embed(m)?,
            self.e[1].embed(m)?,
            self.e[2].embed(m)?,
            self.e[3].embed(m)?,
        )
    }

    pub fn is_identity(&self) -> bool {
        self.e[0].is_one() && self.e[1].is_zero() && self.e[2].is_zero() && self.e[3].is_one()
    }

    /// Some(lambda) iff the matrix is lambda * Id.
    pub fn as_scalar(&self) -> Option<&Cyclo> {
        if self.e[1].is_zero() && self.e[2].is_zero() && self.e[0] == self.e[3] {
            Some(&self.e[0])
        } else {
            None
        }
    }

    /// Nonnegative power by square-and-multiply.
    pub fn pow(&self, e: u64) -> Result<Mat2> {
        let mut result = Mat2::identity(self.conductor())?;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Multiplicative order, by repeated multiplication, failing above `cap`.
    pub fn order(&self, cap: u64) -> Result<u64> {
        let mut p = self.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return Ok(k);
            }
            p = p.mul(self)?;
        }
        Err(Error::GroupTooLarge(cap))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0], self.e[1], self.e[2], self.e[3]
        )
    }
}

/// A pseudoreflection is a non-identity element with exactly one eigenvalue
/// equal to 1; in dimension 2 that is det(M - I) = 0 with M != I.
pub fn is_pseudoreflection(m: &Mat2) -> bool {
    if m.is_identity() {
        return false;
    }
    let one = Cyclo::one(m.conductor()).expect("conductor already admitted");
    let a1 = m.e[0].sub(&one).expect("same conductor");
    let d1 = m.e[3].sub(&one).expect("same conductor");
    let det = a1
        .mul(&d1)
        .and_then(|x| x.sub(&m.e[1].mul(&m.e[2])?))
        .expect("same conductor");
    det.is_zero()
}

/// An explicit finite subgroup of GL_2: full element set in canonical form,
/// closed under products (hence under inverses), in breadth-first order.
#[derive(Debug, Clone)]
pub struct FiniteMatrixGroup {
    conductor: u32,
    generators: Vec<Mat2>,
    elements: IndexSet<Mat2>,
}

impl FiniteMatrixGroup {
    /// The trivial group at a given conductor.
    pub fn trivial(conductor: u32) -> Result<FiniteMatrixGroup> {
        let id = Mat2::identity(conductor)?;
        let mut elements = IndexSet::new();
        elements.insert(id);
        Ok(FiniteMatrixGroup {
            conductor,
            generators: vec![],
            elements,
        })
    }

    /// Breadth-first closure of the generators under multiplication.
    pub fn generate(generators: &[Mat2], max_order: u64) -> Result<FiniteMatrixGroup> {
        let Some(first) = generators.first() else {
            return Err(Error::OutOfRange(
                "generate needs at least one generator (use trivial() otherwise)".into(),
            ));
        };
        let conductor = first.conductor();
        for g in generators {
            if g.conductor() != conductor {
                return Err(Error::ConductorMismatch(conductor, g.conductor()));
            }
            if g.det().is_zero() {
                return Err(Error::NotInvertible);
            }
        }
        let mut elements: IndexSet<Mat2> = IndexSet::new();
        elements.insert(Mat2::identity(conductor)?);
        let mut i = 0;
        while i < elements.len() {
            let current = elements.get_index(i).expect("index in range").clone();
            for g in generators {
                let p = current.mul(g)?;
                if elements.insert(p) && elements.len() as u64 > max_order {
                    return Err(Error::GroupTooLarge(max_order));
                }
            }
            i += 1;
        }
        Ok(FiniteMatrixGroup {
            conductor,
            generators: generators.to_vec(),
            elements,
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Mat2] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = &Mat2> {
        self.elements.iter()
    }

    pub fn element(&self, i: usize) -> &Mat2 {
        self.elements.get_index(i).expect("index in range")
    }

    pub fn contains(&self, m: &Mat2) -> bool {
        self.elements.contains(m)
    }

    pub fn index_of(&self, m: &Mat2) -> Option<usize> {
        self.elements.get_index_of(m)
    }

    pub fn is_subgroup_of(&self, other: &FiniteMatrixGroup) -> bool {
        self.conductor == other.conductor && self.elements().all(|m| other.contains(m))
    }
}

/// The subgroup of G generated by all of its pseudoreflections. Normality is
/// verified on return (conjugates of pseudoreflections are pseudoreflections,
/// so this never fires on a correct closure).
pub fn pseudoreflection_subgroup(g: &FiniteMatrixGroup) -> Result<FiniteMatrixGroup> {
    let reflections: Vec<&Mat2> = g.elements().filter(|m| is_pseudoreflection(m)).collect();
    let mut sub = FiniteMatrixGroup::trivial(g.conductor())?;
    let mut gens: Vec<Mat2> = Vec::new();
    for r in &reflections {
        if !sub.contains(r) {
            gens.push((*r).clone());
            sub = FiniteMatrixGroup::generate(&gens, g.order())?;
        }
    }
    // every pseudoreflection of G must be inside (exhaustive by construction)
    debug_assert!(reflections.iter().all(|r| sub.contains(r)));
    // normality: conjugating the generating reflections by the generators of G
    for x in g.generators() {
        let xi = x.inverse()?;
        for p in sub.generators() {
            let conj = x.mul(p)?.mul(&xi)?;
            if !sub.contains(&conj) {
                return Err(Error::NotNormal);
            }
        }
    }
    Ok(sub)
}

/// Structure of the quotient G/P for P normal in G.
#[derive(Debug, Clone)]
pub enum QuotientStructure {
    /// Cyclic of the given order, with an element of G whose coset generates.
    Cyclic { order: u64, generator: Mat2 },
    NonCyclic,
}

/// Partition of a group into cosets of a subgroup, with multiplication of
/// cosets through representatives. Shared by the quotient and PGL machinery.
struct CosetTable<'a> {
    group: &'a FiniteMatrixGroup,
    coset_of: Vec<usize>,
    reps: Vec<usize>,
}

impl<'a> CosetTable<'a> {
    fn new(group: &'a FiniteMatrixGroup, sub: &FiniteMatrixGroup) -> Result<CosetTable<'a>> {
        if sub.conductor() != group.conductor() {
            return Err(Error::ConductorMismatch(group.conductor(), sub.conductor()));
        }
        if !sub.is_subgroup_of(group) {
            return Err(Error::Internal(
                "coset table: subgroup is not contained in the group".into(),
            ));
        }
        // normality via conjugation of subgroup generators by group generators
        for x in group.generators() {
            let xi = x.inverse()?;
            for p in sub.generators() {
                if !sub.contains(&x.mul(p)?.mul(&xi)?) {
                    return Err(Error::NotNormal);
                }
            }
        }
        let n = group.order() as usize;
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for i in 0..n {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(i);
            let gi = group.element(i);
            for q in sub.elements() {
                let m = gi.mul(q)?;
                let j = group
                    .index_of(&m)
                    .ok_or_else(|| Error::Internal("coset product left the group".into()))?;
                coset_of[j] = id;
            }
        }
        if group.order() % sub.order() != 0
            || reps.len() as u64 != group.order() / sub.order()
        {
            return Err(Error::Internal("coset count does not divide out".into()));
        }
        Ok(CosetTable {
            group,
            coset_of,
            reps,
        })
    }

    fn count(&self) -> usize {
        self.reps.len()
    }

    fn identity_coset(&self) -> usize {
        self.coset_of[self
            .group
            .index_of(&Mat2::identity(self.group.conductor()).expect("valid conductor"))
            .expect("identity is in the group")]
    }

    fn mul(&self, a: usize, b: usize) -> Result<usize> {
        let m = self
            .group
            .element(self.reps[a])
            .mul(self.group.element(self.reps[b]))?;
        Ok(self.coset_of[self
            .group
            .index_of(&m)
            .ok_or_else(|| Error::Internal("coset product left the group".into()))?])
    }

    /// Coset exponentiation by square-and-multiply.
    fn pow(&self, c: usize, e: u64) -> Result<usize> {
        let mut result = self.identity_coset();
        let mut base = c;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base)?;
            }
        }
        Ok(result)
    }

    /// Order of a coset: strip primes from the quotient size (every coset
    /// order divides it by Lagrange).
    fn coset_order(&self, c: usize) -> Result<u64> {
        let e = self.identity_coset();
        let t = self.count() as u64;
        let mut ord = t;
        for (p, _) in crate::exact::factorize(t) {
            while ord % p == 0 && self.pow(c, ord / p)? == e {
                ord /= p;
            }
        }
        Ok(ord)
    }

    fn coset_of_element(&self, m: &Mat2) -> Result<usize> {
        let i = self
            .group
            .index_of(m)
            .ok_or_else(|| Error::Internal("element is not in the group".into()))?;
        Ok(self.coset_of[i])
    }
}

/// Scalar matrices of G sorted by (multiplicative order, exponent); the
/// deterministic preference order for reported quotient generators.
fn sorted_scalars(g: &FiniteMatrixGroup) -> Vec<(u64, u64, usize)> {
    let mut scalars: Vec<(u64, u64, usize)> = Vec::new();
    for (i, m) in g.elements().enumerate() {
        if let Some((t, k)) = m.as_scalar().and_then(|s| s.root_of_unity_log()) {
            scalars.push((t, k, i));
        }
    }
    scalars.sort_unstable();
    scalars
}

/// Decide whether G/P is cyclic; if so return its order and an element of G
/// whose coset generates it (a scalar matrix whenever a scalar coset
/// generates, for stable output).
///
/// The quotient is abelian iff the commutators of the generators of G lie in
/// P; a non-abelian quotient is never cyclic. For an abelian quotient the
/// orders of the generator cosets are combined into an element realizing
/// their lcm, and the quotient is cyclic iff that lcm is the full quotient
/// size.
pub fn quotient_structure(
    g: &FiniteMatrixGroup,
    p: &FiniteMatrixGroup,
) -> Result<QuotientStructure> {
    let table = CosetTable::new(g, p)?;
    let t = table.count() as u64;
    if t == 1 {
        return Ok(QuotientStructure::Cyclic {
            order: 1,
            generator: Mat2::identity(g.conductor())?,
        });
    }
    for x in g.generators() {
        for y in g.generators() {
            let comm = x.mul(y)?.mul(&x.inverse()?)?.mul(&y.inverse()?)?;
            if !p.contains(&comm) {
                return Ok(QuotientStructure::NonCyclic);
            }
        }
    }
    // abelian quotient: build an element whose coset order is the lcm of the
    // generator coset orders
    let mut carrier_coset = table.identity_coset();
    let mut carrier_order = 1u64;
    let mut carrier_elem = Mat2::identity(g.conductor())?;
    for x in g.generators() {
        let cx = table.coset_of_element(x)?;
        let ox = table.coset_order(cx)?;
        let l = num_integer::lcm(carrier_order, ox);
        if l == carrier_order {
            continue;
        }
        // split l into coprime parts carried by each side
        let mut a_part = 1u64;
        for (prime, e) in crate::exact::factorize(l) {
            let pe = prime.pow(e);
            if carrier_order % pe == 0 {
                a_part *= pe;
            }
        }
        let b_part = l / a_part;
        let ea = carrier_order / a_part;
        let eb = ox / b_part;
        carrier_coset = table.mul(table.pow(carrier_coset, ea)?, table.pow(cx, eb)?)?;
        carrier_elem = carrier_elem.pow(ea)?.mul(&x.pow(eb)?)?;
        carrier_order = l;
        debug_assert_eq!(table.coset_order(carrier_coset)?, l);
        debug_assert_eq!(table.coset_of_element(&carrier_elem)?, carrier_coset);
    }
    if carrier_order != t {
        return Ok(QuotientStructure::NonCyclic);
    }
    // prefer a scalar generator when some scalar coset generates
    for (_, _, i) in sorted_scalars(g) {
        let c = table.coset_of[i];
        if table.coset_order(c)? == t {
            return Ok(QuotientStructure::Cyclic {
                order: t,
                generator: g.element(i).clone(),
            });
        }
    }
    Ok(QuotientStructure::Cyclic {
        order: t,
        generator: carrier_elem,
    })
}

/// Isomorphism type of the image of G in PGL_2 (G modulo its scalar matrices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PglImage {
    Cyclic(u64),
    Dihedral(u64),
    A4,
    S4,
    A5,
}

impl fmt::Display for PglImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PglImage::Cyclic(k) => write!(f, "C{}", k),
            PglImage::Dihedral(m) => write!(f, "D{}", m),
            PglImage::A4 => write!(f, "A4"),
            PglImage::S4 => write!(f, "S4"),
            PglImage::A5 => write!(f, "A5"),
        }
    }
}

/// The largest k with zeta_k * Id in G. The scalar matrices of a finite
/// group form a cyclic group, which is verified on the way.
pub fn scalar_subgroup(g: &FiniteMatrixGroup) -> Result<u64> {
    let mut count = 0u64;
    let mut max_order = 1u64;
    for m in g.elements() {
        if let Some(s) = m.as_scalar() {
            let (t, _) = s
                .root_of_unity_log()
                .ok_or_else(|| Error::Internal("scalar of infinite order in a finite group".into()))?;
            count += 1;
            max_order = max_order.max(t);
        }
    }
    if count != max_order {
        return Err(Error::Internal(
            "scalar matrices do not form a cyclic group".into(),
        ));
    }
    Ok(count)
}

/// The scalar matrices of G as a subgroup.
pub fn scalar_matrices_subgroup(g: &FiniteMatrixGroup) -> Result<FiniteMatrixGroup> {
    let k = scalar_subgroup(g)?;
    if k == 1 {
        return FiniteMatrixGroup::trivial(g.conductor());
    }
    let gen = g
        .elements()
        .find(|m| {
            m.as_scalar()
                .and_then(|s| s.root_of_unity_log())
                .map_or(false, |(t, _)| t == k)
        })
        .expect("a scalar of maximal order exists");
    FiniteMatrixGroup::generate(std::slice::from_ref(gen), k)
}

/// Classify the image of G in PGL_2. The finite subgroups of PGL_2 over a
/// field of characteristic zero are cyclic, dihedral, A4, S4 or A5, so the
/// order together with the element-order statistics decides the type; the
/// dihedral branch verifies an inverting involution explicitly.
pub fn pgl_image_type(g: &FiniteMatrixGroup) -> Result<PglImage> {
    let scalars = scalar_matrices_subgroup(g)?;
    let table = CosetTable::new(g, &scalars)?;
    let n = table.count() as u64;
    let mut orders = vec![0u64; table.count()];
    for c in 0..table.count() {
        orders[c] = table.coset_order(c)?;
    }
    let max = orders.iter().copied().max().unwrap_or(1);
    if max == n {
        return Ok(PglImage::Cyclic(n));
    }
    if n == 12 && max == 3 {
        return Ok(PglImage::A4);
    }
    if n == 24 && max == 4 {
        return Ok(PglImage::S4);
    }
    if n == 60 && max == 5 {
        return Ok(PglImage::A5);
    }
    // dihedral: a cyclic subgroup of index 2 plus an inverting involution
    if n % 2 == 0 {
        let half = n / 2;
        let x = (0..table.count()).find(|&c| orders[c] == half);
        if let Some(x) = x {
            // x^{-1} = x^{half - 1}
            let mut xinv = table.identity_coset();
            for _ in 0..half.saturating_sub(1) {
                xinv = table.mul(xinv, x)?;
            }
            let powers: std::collections::HashSet<usize> = {
                let mut s = std::collections::HashSet::new();
                let mut cur = table.identity_coset();
                s.insert(cur);
                for _ in 1..half {
                    cur = table.mul(cur, x)?;
                    s.insert(cur);
                }
                s
            };
            for y in 0..table.count() {
                if orders[y] == 2 && !powers.contains(&y) {
                    let conj = table.mul(table.mul(y, x)?, y)?;
                    if conj == xinv {
                        return Ok(PglImage::Dihedral(half));
                    }
                }
            }
        }
    }
    Err(Error::Internal(format!(
        "projective image of order {} with maximal element order {} is not a subgroup of PGL_2",
        n, max
    )))
}

/// Generator file: a conductor and a list of 2x2 matrices of cyclotomic
/// element strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupFile {
    pub conductor: u32,
    pub generators: Vec<[[String; 2]; 2]>,
}

impl GroupFile {
    pub fn from_json(s: &str) -> Result<GroupFile> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("group file: {}", e)))
    }

    pub fn to_matrices(&self) -> Result<Vec<Mat2>> {
        self.generators
            .iter()
            .map(|rows| {
                Mat2::new(
                    parse_cyclo_in(&rows[0][0], self.conductor)?,
                    parse_cyclo_in(&rows[0][1], self.conductor)?,
                    parse_cyclo_in(&rows[1][0], self.conductor)?,
                    parse_cyclo_in(&rows[1][1], self.conductor)?,
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    pub(crate) fn mat_i64(n: u32, a: [i64; 4]) -> Mat2 {
        Mat2::new(
            Cyclo::from_integer(n, a[0]).unwrap(),
            Cyclo::from_integer(n, a[1]).unwrap(),
            Cyclo::from_integer(n, a[2]).unwrap(),
            Cyclo::from_integer(n, a[3]).unwrap(),
        )
        .unwrap()
    }

    /// [[0, i], [i, 0]] at a conductor divisible by 4.
    pub(crate) fn j_mat(n: u32) -> Mat2 {
        let i = Cyclo::zeta(4).unwrap().embed(n).unwrap();
        Mat2::antidiagonal(i.clone(), i).unwrap()
    }

    /// diag(zeta_k, zeta_k^{-1}) at a conductor divisible by k.
    pub(crate) fn c_prime_gen(n: u32, k: u32) -> Mat2 {
        let z = Cyclo::zeta(k).unwrap().embed(n).unwrap();
        let zi = Cyclo::root_of_unity(k, -1).unwrap().embed(n).unwrap();
        Mat2::diagonal(z, zi).unwrap()
    }

    #[test]
    fn closure_of_minus_identity() {
        let m = mat_i64(4, [-1, 0, 0, -1]);
        let g = FiniteMatrixGroup::generate(&[m], 10).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn d1_prime_has_order_four() {
        // <[[0,i],[i,0]], -Id>
        let g =
            FiniteMatrixGroup::generate(&[j_mat(4), mat_i64(4, [-1, 0, 0, -1])], 100).unwrap();
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn s4_prime_has_order_48() {
        // <diag(z8, z8^-1), A4'>
        let n = 8;
        let t = a4_t(n);
        let gens = vec![j_mat(n), c_prime_gen(n, 4), t, c_prime_gen(n, 8)];
        let g = FiniteMatrixGroup::generate(&gens, 100).unwrap();
        assert_eq!(g.order(), 48);
    }

    /// The extra generator of the binary tetrahedral group A4':
    /// (1+i)/2 * [[1, i], [1, -i]].
    pub(crate) fn a4_t(n: u32) -> Mat2 {
        let half = Rational::new(1.into(), 2.into());
        let i = Cyclo::zeta(4).unwrap().embed(n).unwrap();
        let one = Cyclo::one(n).unwrap();
        let w = one.add(&i).unwrap().scale(&half); // (1+i)/2
        Mat2::new(
            w.clone(),
            w.mul(&i).unwrap(),
            w.clone(),
            w.mul(&i.neg()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn a4_prime_closure() {
        let n = 4;
        let gens = vec![j_mat(n), c_prime_gen(n, 4), a4_t(n)];
        let g = FiniteMatrixGroup::generate(&gens, 100).unwrap();
        assert_eq!(g.order(), 24);
        assert!(g.contains(&mat_i64(4, [-1, 0, 0, -1])));
    }

    #[test]
    fn closure_bound_fires() {
        let g = FiniteMatrixGroup::generate(&[c_prime_gen(8, 8)], 4);
        assert_eq!(g.unwrap_err(), Error::GroupTooLarge(4));
    }

    #[test]
    fn singular_generators_are_rejected() {
        let z = Cyclo::zero(4).unwrap();
        let m = Mat2::new(z.clone(), z.clone(), z.clone(), z).unwrap();
        assert_eq!(
            FiniteMatrixGroup::generate(&[m], 10).unwrap_err(),
            Error::NotInvertible
        );
    }

    #[test]
    fn pseudoreflection_examples() {
        assert!(is_pseudoreflection(&mat_i64(4, [1, 0, 0, -1])));
        assert!(!is_pseudoreflection(&mat_i64(4, [-1, 0, 0, -1])));
        // [[0,1],[1,0]] has eigenvalues +-1
        assert!(is_pseudoreflection(&mat_i64(4, [0, 1, 1, 0])));
        assert!(!is_pseudoreflection(&Mat2::identity(4).unwrap()));
    }

    #[test]
    fn reflection_subgroup_of_scalars_is_trivial() {
        let g = FiniteMatrixGroup::generate(&[mat_i64(4, [-1, 0, 0, -1])], 10).unwrap();
        let p = pseudoreflection_subgroup(&g).unwrap();
        assert_eq!(p.order(), 1);
    }

    #[test]
    fn reflection_subgroup_of_mu4_d1() {
        // mu_4 D_1' = <j, i*Id>; its reflections generate G(2,2,2) of order 4
        let i = Cyclo::zeta(4).unwrap();
        let scalar_i = Mat2::diagonal(i.clone(), i).unwrap();
        let g = FiniteMatrixGroup::generate(&[j_mat(4), scalar_i], 100).unwrap();
        assert_eq!(g.order(), 8);
        let p = pseudoreflection_subgroup(&g).unwrap();
        assert_eq!(p.order(), 4);
        // quotient is cyclic of order 2 generated by the class of i*Id
        match quotient_structure(&g, &p).unwrap() {
            QuotientStructure::Cyclic { order, generator } => {
                assert_eq!(order, 2);
                let s = generator.as_scalar().expect("scalar generator preferred");
                assert_eq!(s.root_of_unity_log(), Some((4, 1)));
            }
            QuotientStructure::NonCyclic => panic!("expected a cyclic quotient"),
        }
    }

    #[test]
    fn quaternion_quotient_is_noncyclic() {
        // D_2' = <j, diag(i,-i)> is the quaternion group of order 8; P is trivial
        let g = FiniteMatrixGroup::generate(&[j_mat(4), c_prime_gen(4, 4)], 100).unwrap();
        assert_eq!(g.order(), 8);
        let p = pseudoreflection_subgroup(&g).unwrap();
        assert_eq!(p.order(), 1);
        assert!(matches!(
            quotient_structure(&g, &p).unwrap(),
            QuotientStructure::NonCyclic
        ));
    }

    #[test]
    fn trivial_quotient_by_trivial_subgroup() {
        let g = FiniteMatrixGroup::generate(&[mat_i64(4, [-1, 0, 0, -1])], 10).unwrap();
        let p = FiniteMatrixGroup::trivial(4).unwrap();
        match quotient_structure(&g, &p).unwrap() {
            QuotientStructure::Cyclic { order, generator } => {
                assert_eq!(order, 2);
                assert_eq!(generator, mat_i64(4, [-1, 0, 0, -1]));
            }
            _ => panic!("cyclic expected"),
        }
    }

    #[test]
    fn pgl_image_examples() {
        // C_4' has projective image C_2
        let g = FiniteMatrixGroup::generate(&[c_prime_gen(4, 4)], 10).unwrap();
        assert_eq!(pgl_image_type(&g).unwrap(), PglImage::Cyclic(2));
        // G(3,1,2) has projective image D_3
        let z3 = Cyclo::zeta(3).unwrap();
        let gens = vec![
            mat_i64(3, [0, 1, 1, 0]),
            Mat2::antidiagonal(z3.clone(), z3.inv().unwrap()).unwrap(),
            Mat2::diagonal(Cyclo::one(3).unwrap(), z3).unwrap(),
        ];
        let g = FiniteMatrixGroup::generate(&gens, 100).unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(pgl_image_type(&g).unwrap(), PglImage::Dihedral(3));
        // A_4' has projective image A4
        let gens = vec![j_mat(4), c_prime_gen(4, 4), a4_t(4)];
        let g = FiniteMatrixGroup::generate(&gens, 100).unwrap();
        assert_eq!(pgl_image_type(&g).unwrap(), PglImage::A4);
    }

    #[test]
    fn scalar_subgroup_examples() {
        let gens = vec![j_mat(4), c_prime_gen(4, 4), a4_t(4)];
        let g = FiniteMatrixGroup::generate(&gens, 100).unwrap();
        assert_eq!(scalar_subgroup(&g).unwrap(), 2);
        let t = FiniteMatrixGroup::trivial(4).unwrap();
        assert_eq!(scalar_subgroup(&t).unwrap(), 1);
    }

    #[test]
    fn projectivization_kernel_is_the_scalar_subgroup() {
        for gens in [
            vec![j_mat(4), c_prime_gen(4, 4)],
            vec![j_mat(4), c_prime_gen(4, 4), a4_t(4)],
            vec![c_prime_gen(8, 8)],
        ] {
            let g = FiniteMatrixGroup::generate(&gens, 200).unwrap();
            let s = scalar_subgroup(&g).unwrap();
            let image_order = match pgl_image_type(&g).unwrap() {
                PglImage::Cyclic(k) => k,
                PglImage::Dihedral(m) => 2 * m,
                PglImage::A4 => 12,
                PglImage::S4 => 24,
                PglImage::A5 => 60,
            };
            assert_eq!(image_order * s, g.order());
        }
    }

    #[test]
    fn generator_order_does_not_change_the_element_set() {
        let a = j_mat(4);
        let b = c_prime_gen(4, 4);
        let c = a4_t(4);
        let g1 = FiniteMatrixGroup::generate(&[a.clone(), b.clone(), c.clone()], 100).unwrap();
        let g2 = FiniteMatrixGroup::generate(&[c, a, b], 100).unwrap();
        assert_eq!(g1.order(), g2.order());
        assert!(g1.elements().all(|m| g2.contains(m)));
    }

    #[test]
    fn lagrange_for_reflection_subgroups() {
        for gens in [
            vec![j_mat(4), c_prime_gen(4, 4), a4_t(4)],
            vec![j_mat(8), c_prime_gen(8, 4), a4_t(8), c_prime_gen(8, 8)],
            vec![j_mat(4), c_prime_gen(4, 2)],
        ] {
            let g = FiniteMatrixGroup::generate(&gens, 200).unwrap();
            let p = pseudoreflection_subgroup(&g).unwrap();
            assert_eq!(g.order() % p.order(), 0);
        }
    }

    #[test]
    fn group_file_round_trip() {
        let json = r#"{
            "conductor": 4,
            "generators": [
                [["0", "1*z4^1"], ["1*z4^1", "0"]],
                [["-1", "0"], ["0", "-1"]]
            ]
        }"#;
        let gf = GroupFile::from_json(json).unwrap();
        let mats = gf.to_matrices().unwrap();
        assert_eq!(mats.len(), 2);
        assert_eq!(mats[0], j_mat(4));
        let g = FiniteMatrixGroup::generate(&mats, 100).unwrap();
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn matrix_order() {
        assert_eq!(j_mat(4).order(10).unwrap(), 4);
        assert_eq!(Mat2::identity(4).unwrap().order(10).unwrap(), 1);
        assert_eq!(c_prime_gen(8, 8).order(10).unwrap(), 8);
    }
}

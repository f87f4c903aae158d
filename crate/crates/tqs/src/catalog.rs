//! The nine conjugacy families of non-abelian finite subgroups of GL_2 over
//! an algebraically closed field of characteristic zero (after Cohen's
//! presentation of the classical classification), the imprimitive reflection
//! groups G(m,p,2), named Shephard-Todd groups, the expected classification
//! of which family members fail to be of type R, and the verification sweep
//! that re-derives that classification from the group engine.
//!
//! Group construction conventions, with j = [[0,i],[i,0]] and
//! C_k' = <diag(zeta_k, zeta_k^{-1})>:
//!
//! * D_k' = <j, C_2k'>, A_4' = <(1+i)/sqrt(2)... given by the matrix
//!   (1+i)/2 * [[1, i], [1, -i]] over D_2'>, S_4' = <diag(zeta_8,
//!   zeta_8^{-1}), A_4'>, and A_5' is the binary icosahedral group,
//!   generated over Q(zeta_20) by A_4' and an order-10 icosian matrix.
//! * mu_d denotes the scalars <zeta_d * Id>.
//! * The mixed group (mu_wd | mu_d ; H | K), with H/K cyclic of order w
//!   matched to mu_wd/mu_d, is generated by K together with zeta_wd * h for
//!   a coset generator h of H/K; the scalars mu_d appear automatically as
//!   (zeta_wd h)^w h^{-w}. Different admissible choices of h give conjugate
//!   groups, which the tests check through the singularity output.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Cyclo, Rational};
use crate::hjcf::is_critical_pair_arith;
use crate::invariant::{singularity_of_group, GroupSingularity};
use crate::matgrp::{
    pgl_image_type, pseudoreflection_subgroup, quotient_structure, scalar_matrices_subgroup,
    scalar_subgroup, FiniteMatrixGroup, Mat2, PglImage, QuotientStructure, DEFAULT_MAX_ORDER,
};

/// The nine families. D-families take two parameters (m, q), the rest only q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// (mu_4q | mu_2q ; D_m' | C_2m')
    DC,
    /// (mu_4q | mu_2q ; D_2m' | D_m')
    DD,
    /// mu_2q D_m'
    MuD,
    /// (mu_4q | mu_q ; D_{2m+1}' | C_{2m+1}')
    DCodd,
    /// (mu_6q | mu_2q ; A_4' | D_2')
    A4D2,
    /// mu_2q A_4'
    MuA4,
    /// mu_2q S_4'
    MuS4,
    /// (mu_4q | mu_2q ; S_4' | A_4')
    S4A4,
    /// mu_2q A_5'
    MuA5,
}

pub const ALL_FAMILIES: [Family; 9] = [
    Family::DC,
    Family::DD,
    Family::MuD,
    Family::DCodd,
    Family::A4D2,
    Family::MuA4,
    Family::MuS4,
    Family::S4A4,
    Family::MuA5,
];

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::DC => "D-C",
            Family::DD => "D-D",
            Family::MuD => "muD",
            Family::DCodd => "D-Codd",
            Family::A4D2 => "A4-D2",
            Family::MuA4 => "muA4",
            Family::MuS4 => "muS4",
            Family::S4A4 => "S4-A4",
            Family::MuA5 => "muA5",
        }
    }

    pub fn takes_m(&self) -> bool {
        matches!(self, Family::DC | Family::DD | Family::MuD | Family::DCodd)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        ALL_FAMILIES
            .iter()
            .copied()
            .find(|f| f.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown family `{}` (expected one of D-C, D-D, muD, D-Codd, A4-D2, muA4, muS4, S4-A4, muA5)",
                    s
                ))
            })
    }
}

/// A family member: the family tag plus its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub q: u64,
    pub m: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, q: u64, m: Option<u64>) -> Result<FamilySpec> {
        if q == 0 {
            return Err(Error::OutOfRange("q must be at least 1".into()));
        }
        match (family.takes_m(), m) {
            (true, Some(m)) if m >= 1 => Ok(FamilySpec { family, q, m: Some(m) }),
            (true, _) => Err(Error::OutOfRange(format!(
                "family {} needs a parameter m >= 1",
                family
            ))),
            (false, None) => Ok(FamilySpec { family, q, m: None }),
            (false, Some(_)) => Err(Error::OutOfRange(format!(
                "family {} does not take a parameter m",
                family
            ))),
        }
    }

    fn m(&self) -> u64 {
        self.m.unwrap_or(1)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            Some(m) => write!(f, "{}(m={}, q={})", self.family, m, self.q),
            None => write!(f, "{}(q={})", self.family, self.q),
        }
    }
}

fn lcm_all(values: &[u64]) -> u64 {
    values.iter().fold(1u64, |a, &b| a.lcm(&b))
}

/// The conductor a family member's generators live in.
pub fn family_conductor(spec: &FamilySpec) -> u64 {
    let q = spec.q;
    let m = spec.m();
    match spec.family {
        Family::DC => lcm_all(&[4, 2 * m, 4 * q]),
        Family::DD => lcm_all(&[4, 4 * m, 4 * q]),
        Family::MuD => lcm_all(&[4, 2 * m, 2 * q]),
        Family::DCodd => lcm_all(&[4, 2 * m + 1, 4 * q]),
        Family::A4D2 => lcm_all(&[4, 6 * q]),
        Family::MuA4 => lcm_all(&[4, 2 * q]),
        Family::MuS4 => lcm_all(&[8, 2 * q]),
        Family::S4A4 => lcm_all(&[8, 4 * q]),
        Family::MuA5 => lcm_all(&[20, 2 * q]),
    }
}

fn zeta_in(cond: u32, n: u64, k: i64) -> Result<Cyclo> {
    Cyclo::root_of_unity(n as u32, k)?.embed(cond)
}

/// diag(zeta_k, zeta_k^{-1}) embedded at the given conductor.
fn c_prime_gen(cond: u32, k: u64) -> Result<Mat2> {
    Mat2::diagonal(zeta_in(cond, k, 1)?, zeta_in(cond, k, -1)?)
}

/// [[0, i], [i, 0]].
fn j_mat(cond: u32) -> Result<Mat2> {
    let i = zeta_in(cond, 4, 1)?;
    Mat2::antidiagonal(i.clone(), i)
}

/// The order-6 extra generator of the binary tetrahedral group A_4':
/// (1+i)/2 * [[1, i], [1, -i]] (equal to zeta_8/sqrt(2) * [[1, i], [1, -i]]).
fn a4_extra(cond: u32) -> Result<Mat2> {
    let half = Rational::new(1.into(), 2.into());
    let i = zeta_in(cond, 4, 1)?;
    let w = Cyclo::one(cond)?.add(&i)?.scale(&half);
    Mat2::new(w.clone(), w.mul(&i)?, w.clone(), w.mul(&i.neg())?)
}

/// An order-10 icosian in SL_2(Q(zeta_20)):
/// [[phi/2 + (1/(2 phi)) i, 1/2], [-1/2, phi/2 - (1/(2 phi)) i]]
/// with phi the golden ratio; together with A_4' it generates the binary
/// icosahedral group A_5' of order 120.
fn a5_extra(cond: u32) -> Result<Mat2> {
    let quarter = Rational::new(1.into(), 4.into());
    let half = Rational::new(1.into(), 2.into());
    // sqrt(5) = zeta_5 - zeta_5^2 - zeta_5^3 + zeta_5^4
    let sqrt5 = zeta_in(cond, 5, 1)?
        .sub(&zeta_in(cond, 5, 2)?)?
        .sub(&zeta_in(cond, 5, 3)?)?
        .add(&zeta_in(cond, 5, 4)?)?;
    let one = Cyclo::one(cond)?;
    let phi_half = one.add(&sqrt5)?.scale(&quarter); // phi/2 = (1 + sqrt5)/4
    let phi_inv_half = sqrt5.sub(&one)?.scale(&quarter); // 1/(2 phi) = (sqrt5 - 1)/4
    let i = zeta_in(cond, 4, 1)?;
    let a = phi_half.add(&phi_inv_half.mul(&i)?)?;
    let d = phi_half.sub(&phi_inv_half.mul(&i)?)?;
    let b = Cyclo::from_rational(cond, half.clone())?;
    let c = Cyclo::from_rational(cond, -half)?;
    Mat2::new(a, b, c, d)
}

fn a4_prime_gens(cond: u32) -> Result<Vec<Mat2>> {
    Ok(vec![j_mat(cond)?, c_prime_gen(cond, 4)?, a4_extra(cond)?])
}

fn scalar_gen(cond: u32, n: u64) -> Result<Mat2> {
    let z = zeta_in(cond, n, 1)?;
    Mat2::diagonal(z.clone(), z)
}

/// Generators for a family member, together with the conductor they live in.
/// The closure of the generators has the order given by
/// [`family_order_formula`].
pub fn family_generators(spec: &FamilySpec) -> Result<(u32, Vec<Mat2>)> {
    let q = spec.q;
    let m = spec.m();
    let cond64 = family_conductor(spec);
    let c = u32::try_from(cond64).map_err(|_| Error::ConductorTooLarge(u32::MAX, cond64 as u32))?;
    let gens: Vec<Mat2> = match spec.family {
        Family::DC => {
            let w = j_mat(c)?.scalar_mul(&zeta_in(c, 4 * q, 1)?)?;
            vec![c_prime_gen(c, 2 * m)?, w]
        }
        Family::DD => {
            let w = c_prime_gen(c, 4 * m)?.scalar_mul(&zeta_in(c, 4 * q, 1)?)?;
            vec![j_mat(c)?, c_prime_gen(c, 2 * m)?, w]
        }
        Family::MuD => vec![j_mat(c)?, c_prime_gen(c, 2 * m)?, scalar_gen(c, 2 * q)?],
        Family::DCodd => {
            let w = j_mat(c)?.scalar_mul(&zeta_in(c, 4 * q, 1)?)?;
            vec![c_prime_gen(c, 2 * m + 1)?, w]
        }
        Family::A4D2 => {
            let w = a4_extra(c)?.scalar_mul(&zeta_in(c, 6 * q, 1)?)?;
            vec![j_mat(c)?, c_prime_gen(c, 4)?, w]
        }
        Family::MuA4 => {
            let mut gens = a4_prime_gens(c)?;
            gens.push(scalar_gen(c, 2 * q)?);
            gens
        }
        Family::MuS4 => {
            let mut gens = a4_prime_gens(c)?;
            gens.push(c_prime_gen(c, 8)?);
            gens.push(scalar_gen(c, 2 * q)?);
            gens
        }
        Family::S4A4 => {
            let mut gens = a4_prime_gens(c)?;
            gens.push(c_prime_gen(c, 8)?.scalar_mul(&zeta_in(c, 4 * q, 1)?)?);
            gens
        }
        Family::MuA5 => {
            let mut gens = a4_prime_gens(c)?;
            gens.push(a5_extra(c)?);
            gens.push(scalar_gen(c, 2 * q)?);
            gens
        }
    };
    Ok((c, gens))
}

/// Expected group order.
pub fn family_order_formula(spec: &FamilySpec) -> u64 {
    let q = spec.q;
    let m = spec.m();
    match spec.family {
        Family::DC | Family::MuD => 4 * m * q,
        Family::DD => 8 * m * q,
        Family::DCodd => {
            let n0 = 2 * m + 1;
            if q % 2 == 0 {
                4 * n0 * q
            } else {
                2 * n0 * q
            }
        }
        Family::A4D2 | Family::MuA4 => 24 * q,
        Family::MuS4 | Family::S4A4 => 48 * q,
        Family::MuA5 => 120 * q,
    }
}

/// Expected order of the subgroup of scalar matrices.
pub fn family_center_formula(spec: &FamilySpec) -> u64 {
    match spec.family {
        Family::DCodd if spec.q % 2 == 1 => spec.q,
        _ => 2 * spec.q,
    }
}

/// Expected isomorphism type of the image in PGL_2. Degenerate dihedral
/// groups are reported by their actual type (D_1 = C_2; D_2 is the Klein
/// four-group, kept as Dihedral(2)).
pub fn family_pgl_expected(spec: &FamilySpec) -> PglImage {
    fn dihedral(m: u64) -> PglImage {
        if m == 1 {
            PglImage::Cyclic(2)
        } else {
            PglImage::Dihedral(m)
        }
    }
    let m = spec.m();
    match spec.family {
        Family::DC | Family::MuD => dihedral(m),
        Family::DD => dihedral(2 * m),
        Family::DCodd => dihedral(2 * m + 1),
        Family::A4D2 | Family::MuA4 => PglImage::A4,
        Family::MuS4 | Family::S4A4 => PglImage::S4,
        Family::MuA5 => PglImage::A5,
    }
}

/// The imprimitive reflection group G(m, p, 2) (p | m) of order 2 m^2 / p,
/// generated by the pseudoreflections [[0,1],[1,0]],
/// [[0, zeta_m],[zeta_m^{-1}, 0]] and diag(1, zeta_m^p).
pub fn g_mp2(m: u64, p: u64) -> Result<FiniteMatrixGroup> {
    if m == 0 || p == 0 || m % p != 0 {
        return Err(Error::OutOfRange(format!(
            "G(m,p,2) needs p | m, got m = {}, p = {}",
            m, p
        )));
    }
    let cond = u32::try_from(m).map_err(|_| Error::GroupTooLarge(m))?;
    let one = Cyclo::one(cond)?;
    let zm = Cyclo::zeta(cond)?;
    let gens = vec![
        Mat2::antidiagonal(one.clone(), one.clone())?,
        Mat2::antidiagonal(zm.clone(), zm.inv()?)?,
        Mat2::diagonal(one, zm.pow(p))?,
    ];
    let order = 2 * m * m / p;
    let g = FiniteMatrixGroup::generate(&gens, order.max(4))?;
    if g.order() != order {
        return Err(Error::Internal(format!(
            "G({},{},2) closed to order {} instead of {}",
            m,
            p,
            g.order(),
            order
        )));
    }
    Ok(g)
}

/// The rank-2 Shephard-Todd reflection groups that arise as family members:
/// ST_4..ST_7 (tetrahedral), ST_9/ST_11/ST_15 (octahedral), and
/// ST_17/ST_19/ST_21/ST_22 (icosahedral). The remaining numbers of the
/// rank-2 range have no construction here.
pub fn st_group(id: u32) -> Result<FiniteMatrixGroup> {
    let (spec, expected_order) = st_family_spec(id)?;
    let (_, gens) = family_generators(&spec)?;
    let g = FiniteMatrixGroup::generate(&gens, DEFAULT_MAX_ORDER)?;
    if g.order() != expected_order {
        return Err(Error::Internal(format!(
            "ST_{} closed to order {} instead of {}",
            id,
            g.order(),
            expected_order
        )));
    }
    let p = pseudoreflection_subgroup(&g)?;
    if p.order() != g.order() {
        return Err(Error::Internal(format!(
            "ST_{} is not generated by its pseudoreflections",
            id
        )));
    }
    Ok(g)
}

/// Family membership of the supported Shephard-Todd groups, with orders.
pub fn st_family_spec(id: u32) -> Result<(FamilySpec, u64)> {
    let (family, q, order) = match id {
        4 => (Family::A4D2, 1, 24),
        5 => (Family::MuA4, 3, 72),
        6 => (Family::A4D2, 2, 48),
        7 => (Family::MuA4, 6, 144),
        9 => (Family::MuS4, 4, 192),
        11 => (Family::MuS4, 12, 576),
        15 => (Family::MuS4, 6, 288),
        17 => (Family::MuA5, 10, 1200),
        19 => (Family::MuA5, 30, 3600),
        21 => (Family::MuA5, 6, 720),
        22 => (Family::MuA5, 2, 240),
        other => return Err(Error::UnsupportedId(other)),
    };
    Ok((FamilySpec::new(family, q, None)?, order))
}

/// A "critical pair" clause of the expected classification, guarded for the
/// degenerate parameter combinations (n < 2 or gcd > 1 can arise from the
/// parameter arithmetic and are never critical).
fn critical_clause(n: u64, d_raw: u64) -> bool {
    if n < 2 {
        return false;
    }
    let d = d_raw % n;
    if d == 0 || n.gcd(&d) != 1 {
        return false;
    }
    is_critical_pair_arith(n, d).expect("guards establish the preconditions")
}

/// The expected classification: does this family member generate a
/// singularity that is NOT of type R? The verification sweep recomputes the
/// answer with the group engine and compares.
pub fn table_prediction(spec: &FamilySpec) -> bool {
    let q = spec.q;
    let m = spec.m();
    let g = m.gcd(&q);
    let (m1, q1) = (m / g, q / g);
    match spec.family {
        Family::DC => q % 2 == 0 && q % m == 0 && (q / m) % 2 == 1,
        Family::DD => critical_clause(2 * q1, m1 + q1),
        Family::MuD => {
            if q % 2 == 1 {
                q % m == 0
            } else {
                critical_clause(q1, m1)
            }
        }
        Family::DCodd => false,
        Family::A4D2 => q == 4 || q == 8,
        Family::MuA4 => q % 4 == 0,
        Family::MuS4 => matches!(q, 3 | 8 | 9 | 16) || q % 24 == 0,
        Family::S4A4 => q % 12 == 0 && q % 24 != 0,
        Family::MuA5 => matches!(q, 4 | 8 | 12 | 16 | 20 | 24 | 36 | 40 | 72) || q % 60 == 0,
    }
}

/// One line of the verification sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: String,
    pub q: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub computed_type: Option<String>,
    #[serde(rename = "computed_typeR", skip_serializing_if = "Option::is_none", default)]
    pub computed_type_r: Option<bool>,
    #[serde(rename = "predicted_negR")]
    pub predicted_neg_r: bool,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none", default)]
    pub matched: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

pub fn singularity_type_string(s: &GroupSingularity) -> String {
    match s {
        GroupSingularity::Smooth => "smooth".to_string(),
        GroupSingularity::NonCyclicQuotient => "noncyclic".to_string(),
        GroupSingularity::Classified { quotient, .. } => quotient.to_string(),
    }
}

/// Build the group for a family member, re-derive its singularity, run the
/// internal cross-checks (order/center/projective-image formulas and the
/// agreement between linear and projective quotient cyclicity), and compare
/// the type-R verdict against the expected classification.
pub fn verify_family(spec: &FamilySpec, max_order: u64) -> VerificationReport {
    let predicted = table_prediction(spec);
    let mut report = VerificationReport {
        family: spec.family.tag().to_string(),
        q: spec.q,
        m: spec.m,
        order: None,
        computed_type: None,
        computed_type_r: None,
        predicted_neg_r: predicted,
        matched: None,
        error: None,
    };
    match verify_family_inner(spec, max_order) {
        Ok((order, sing)) => {
            report.order = Some(order);
            report.computed_type = Some(singularity_type_string(&sing));
            let type_r = sing.is_type_r();
            report.computed_type_r = Some(type_r);
            report.matched = Some(type_r == !predicted);
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report
}

fn verify_family_inner(spec: &FamilySpec, max_order: u64) -> Result<(u64, GroupSingularity)> {
    let (_, gens) = family_generators(spec)?;
    let g = FiniteMatrixGroup::generate(&gens, max_order)?;
    if g.order() != family_order_formula(spec) {
        return Err(Error::Internal(format!(
            "{} closed to order {} instead of {}",
            spec,
            g.order(),
            family_order_formula(spec)
        )));
    }
    let center = scalar_subgroup(&g)?;
    if center != family_center_formula(spec) {
        return Err(Error::Internal(format!(
            "{} has scalar subgroup of order {} instead of {}",
            spec,
            center,
            family_center_formula(spec)
        )));
    }
    let image = pgl_image_type(&g)?;
    if image != family_pgl_expected(spec) {
        return Err(Error::Internal(format!(
            "{} has projective image {} instead of {}",
            spec,
            image,
            family_pgl_expected(spec)
        )));
    }
    // The necessary condition for a non-R quotient can be read off G/P or off
    // the projective images; check that the two readings agree.
    let p = pseudoreflection_subgroup(&g)?;
    let linear_cyclic = matches!(
        quotient_structure(&g, &p)?,
        QuotientStructure::Cyclic { .. }
    );
    let ps = join_with_scalars(&g, &p)?;
    let projective_cyclic = matches!(
        quotient_structure(&g, &ps)?,
        QuotientStructure::Cyclic { .. }
    );
    if linear_cyclic && !projective_cyclic {
        return Err(Error::Internal(format!(
            "{}: G/P cyclic but its projective image is not",
            spec
        )));
    }
    if !linear_cyclic && projective_cyclic {
        return Err(Error::Internal(format!(
            "{}: projective quotient cyclic but G/P is not",
            spec
        )));
    }
    let sing = singularity_of_group(&g)?;
    Ok((g.order(), sing))
}

/// The subgroup generated by P together with the scalar matrices of G;
/// G modulo this subgroup is the projective quotient image(G)/image(P).
fn join_with_scalars(
    g: &FiniteMatrixGroup,
    p: &FiniteMatrixGroup,
) -> Result<FiniteMatrixGroup> {
    let s = scalar_matrices_subgroup(g)?;
    let mut gens: Vec<Mat2> = p.generators().to_vec();
    gens.extend(s.generators().iter().cloned());
    if gens.is_empty() {
        return Ok(s);
    }
    FiniteMatrixGroup::generate(&gens, g.order())
}

/// Bounds of a verification sweep.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SweepBounds {
    pub max_q: u64,
    pub max_m: u64,
    pub max_order: u64,
}

/// Every family/parameter combination within the bounds, in a fixed order.
/// A combination is within bounds when its order formula stays under
/// `max_order` and its conductor under the current conductor cap.
pub fn sweep_specs(bounds: &SweepBounds) -> Vec<FamilySpec> {
    let cap = u64::from(crate::exact::conductor_cap());
    let mut specs = Vec::new();
    let mut push = |spec: FamilySpec| {
        if family_order_formula(&spec) <= bounds.max_order && family_conductor(&spec) <= cap {
            specs.push(spec);
        }
    };
    for family in ALL_FAMILIES {
        if family.takes_m() {
            for m in 1..=bounds.max_m {
                for q in 1..=bounds.max_q {
                    push(FamilySpec::new(family, q, Some(m)).expect("parameters validated"));
                }
            }
        } else {
            for q in 1..=bounds.max_q {
                push(FamilySpec::new(family, q, None).expect("parameters validated"));
            }
        }
    }
    specs
}

/// Run the verification sweep over `jobs` worker threads. Reports come back
/// in the deterministic `sweep_specs` order regardless of scheduling; a
/// report that fails to build carries an error marker instead of aborting
/// the sweep.
pub fn sweep(bounds: &SweepBounds, jobs: usize) -> Vec<VerificationReport> {
    let specs = sweep_specs(bounds);
    let jobs = jobs.max(1).min(specs.len().max(1));
    let slots: Vec<OnceLock<VerificationReport>> =
        (0..specs.len()).map(|_| OnceLock::new()).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= specs.len() {
                    break;
                }
                let report = verify_family(&specs[i], bounds.max_order);
                let _ = slots[i].set(report);
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.into_inner().expect("every slot is filled"))
        .collect()
}

/// Counts of a finished sweep.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SweepSummary {
    pub reports: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub errors: usize,
}

pub fn summarize(reports: &[VerificationReport]) -> SweepSummary {
    let matches = reports
        .iter()
        .filter(|r| r.matched == Some(true))
        .count();
    let mismatches = reports
        .iter()
        .filter(|r| r.matched == Some(false))
        .count();
    let errors = reports.iter().filter(|r| r.error.is_some()).count();
    SweepSummary {
        reports: reports.len(),
        matches,
        mismatches,
        errors,
    }
}

/// Render the sweep as a table in the layout of the classification: one row
/// per family with the observed not-R parameters, order and center formulas
/// and the projective image.
pub fn render_summary_table(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    out.push_str(
        "family   | not-R parameters (observed)                  | order        | center | image\n",
    );
    out.push_str(
        "---------+----------------------------------------------+--------------+--------+------\n",
    );
    let meta: [(&str, &str, &str, &str); 9] = [
        ("D-C", "4mq", "2q", "Dm"),
        ("D-D", "8mq", "2q", "D2m"),
        ("muD", "4mq", "2q", "Dm"),
        ("D-Codd", "4(2m+1)q or 2(2m+1)q", "2q or q", "D2m+1"),
        ("A4-D2", "24q", "2q", "A4"),
        ("muA4", "24q", "2q", "A4"),
        ("muS4", "48q", "2q", "S4"),
        ("S4-A4", "48q", "2q", "S4"),
        ("muA5", "120q", "2q", "A5"),
    ];
    for (tag, order, center, image) in meta {
        let mut params: Vec<String> = Vec::new();
        for r in reports.iter().filter(|r| r.family == tag) {
            if r.computed_type_r == Some(false) {
                params.push(match r.m {
                    Some(m) => format!("(m={},q={})", m, r.q),
                    None => format!("q={}", r.q),
                });
            }
        }
        let shown = if params.is_empty() {
            "none".to_string()
        } else if params.len() > 6 {
            format!("{} ... ({} total)", params[..6].join(" "), params.len())
        } else {
            params.join(" ")
        };
        out.push_str(&format!(
            "{:<8} | {:<44} | {:<12} | {:<6} | {}\n",
            tag, shown, order, center, image
        ));
    }
    let s = summarize(reports);
    out.push_str(&format!(
        "reports: {}  matches: {}  mismatches: {}  errors: {}\n",
        s.reports, s.matches, s.mismatches, s.errors
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, q: u64, m: Option<u64>) -> FamilySpec {
        FamilySpec::new(family, q, m).unwrap()
    }

    fn build(family: Family, q: u64, m: Option<u64>) -> FiniteMatrixGroup {
        let (_, gens) = family_generators(&spec(family, q, m)).unwrap();
        FiniteMatrixGroup::generate(&gens, DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn family_orders_match_the_formulas() {
        assert_eq!(build(Family::MuD, 1, Some(1)).order(), 4);
        assert_eq!(build(Family::MuS4, 3, None).order(), 144);
        assert_eq!(build(Family::A4D2, 1, None).order(), 24);
        assert_eq!(build(Family::DC, 2, Some(2)).order(), 16);
        assert_eq!(build(Family::DD, 1, Some(1)).order(), 8);
        assert_eq!(build(Family::DCodd, 1, Some(1)).order(), 6);
        assert_eq!(build(Family::DCodd, 2, Some(1)).order(), 24);
    }

    #[test]
    fn a5_prime_is_validated() {
        // A_5' itself: order 120, contains -Id, projective image A5, in SL_2
        let c = 20;
        let mut gens = a4_prime_gens(c).unwrap();
        gens.push(a5_extra(c).unwrap());
        for g in &gens {
            assert!(g.det().is_one(), "A_5' generators must have determinant 1");
        }
        let g = FiniteMatrixGroup::generate(&gens, 500).unwrap();
        assert_eq!(g.order(), 120);
        let minus_id = Mat2::diagonal(
            Cyclo::from_integer(c, -1).unwrap(),
            Cyclo::from_integer(c, -1).unwrap(),
        )
        .unwrap();
        assert!(g.contains(&minus_id));
        assert_eq!(pgl_image_type(&g).unwrap(), PglImage::A5);
    }

    #[test]
    fn st_group_examples() {
        let st5 = st_group(5).unwrap();
        assert_eq!(st5.order(), 72);
        let st7 = st_group(7).unwrap();
        assert_eq!(st7.order(), 144);
        assert_eq!(st_group(8).unwrap_err(), Error::UnsupportedId(8));
        assert_eq!(st_group(3).unwrap_err(), Error::UnsupportedId(3));
    }

    #[test]
    fn st17_has_order_1200() {
        // mu_20 A_5': order 20 * 120 / 2, also the degree product 20 * 60
        let st17 = st_group(17).unwrap();
        assert_eq!(st17.order(), 1200);
    }

    #[test]
    fn scalar_subgroup_of_mu6_s4() {
        let g = build(Family::MuS4, 3, None);
        assert_eq!(scalar_subgroup(&g).unwrap(), 6);
    }

    #[test]
    fn st5_has_a_line_of_sextic_invariants() {
        let st5 = st_group(5).unwrap();
        assert_eq!(crate::invariant::invariant_basis(&st5, 6).unwrap().len(), 1);
    }

    #[test]
    fn g_mp2_orders() {
        assert_eq!(g_mp2(2, 2).unwrap().order(), 4);
        assert_eq!(g_mp2(4, 2).unwrap().order(), 16);
        assert_eq!(g_mp2(3, 1).unwrap().order(), 18);
        assert!(g_mp2(4, 3).is_err());
    }

    #[test]
    fn prediction_examples() {
        assert!(table_prediction(&spec(Family::MuS4, 3, None)));
        assert!(table_prediction(&spec(Family::MuA5, 4, None)));
        assert!(!table_prediction(&spec(Family::DCodd, 5, Some(2))));
        assert!(table_prediction(&spec(Family::MuD, 2, Some(1))));
        assert!(!table_prediction(&spec(Family::MuS4, 4, None)));
        assert!(table_prediction(&spec(Family::S4A4, 12, None)));
        assert!(!table_prediction(&spec(Family::S4A4, 24, None)));
    }

    #[test]
    fn verify_family_examples() {
        let r = verify_family(&spec(Family::MuA4, 4, None), DEFAULT_MAX_ORDER);
        assert_eq!(r.error, None);
        assert_eq!(r.matched, Some(true));
        assert_eq!(r.computed_type_r, Some(false));

        let r = verify_family(&spec(Family::DC, 2, Some(2)), DEFAULT_MAX_ORDER);
        assert_eq!(r.error, None);
        assert_eq!(r.matched, Some(true));
        assert_eq!(r.computed_type_r, Some(false));
    }

    #[test]
    fn sweep_one_report_per_family_at_unit_bounds() {
        let bounds = SweepBounds {
            max_q: 1,
            max_m: 1,
            max_order: DEFAULT_MAX_ORDER,
        };
        let reports = sweep(&bounds, 2);
        assert_eq!(reports.len(), 9);
        assert!(reports.iter().all(|r| r.error.is_none()));
        assert!(reports.iter().all(|r| r.matched == Some(true)));
    }

    #[test]
    fn small_sweep_matches() {
        let bounds = SweepBounds {
            max_q: 4,
            max_m: 2,
            max_order: 2000,
        };
        let reports = sweep(&bounds, 2);
        let s = summarize(&reports);
        assert_eq!(s.mismatches, 0, "{:#?}", reports.iter().filter(|r| r.matched == Some(false)).collect::<Vec<_>>());
        assert_eq!(s.errors, 0);
        assert_eq!(s.matches, s.reports);
    }

    #[test]
    fn family_tags_round_trip() {
        for f in ALL_FAMILIES {
            assert_eq!(f.tag().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }
}

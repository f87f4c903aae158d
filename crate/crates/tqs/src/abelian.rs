//! The R2 decision for finite abelian groups.
//!
//! An abelian group is of type R2 when every faithful two-dimensional
//! representation produces a type-R quotient singularity. In invariant-factor
//! form s_1 | s_2 the failing groups are exactly those isomorphic to
//! C_a x C_2ab (a, b >= 1): at most two factors (s, t) with t/s even.
//! Groups of rank >= 3 have no faithful two-dimensional representation at
//! all, so they are R2 vacuously.
//!
//! The closed-form decision is checked against a brute-force oracle that
//! enumerates every faithful pair of characters, builds the corresponding
//! diagonal matrix group, and runs the general group-to-singularity pipeline.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::exact::Cyclo;
use crate::invariant::singularity_of_group;
use crate::matgrp::{FiniteMatrixGroup, Mat2};

/// A finite abelian group in invariant-factor form s_1 | s_2 | ... | s_k,
/// each factor >= 2; the empty list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    /// Normalize an arbitrary list of cyclic factors (e.g. C_6 x C_4 becomes
    /// invariant factors [2, 12]) by merging prime-power elementary divisors.
    pub fn new(factors: &[u64]) -> Result<AbelianGroup> {
        let mut by_prime: HashMap<u64, Vec<u32>> = HashMap::new();
        for &f in factors {
            if f == 0 {
                return Err(Error::OutOfRange("cyclic factors must be positive".into()));
            }
            for (p, e) in crate::exact::factorize(f) {
                by_prime.entry(p).or_default().push(e);
            }
        }
        let rank = by_prime.values().map(|v| v.len()).max().unwrap_or(0);
        let mut invariant = vec![1u64; rank];
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a)); // descending
            for (slot, e) in exps.into_iter().enumerate() {
                // slot 0 feeds the largest invariant factor (the last one)
                invariant[rank - 1 - slot] *= p.pow(e);
            }
        }
        Ok(AbelianGroup { factors: invariant })
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// The exponent: the largest invariant factor.
    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }
}

/// Closed-form R2 decision: false (not R2) exactly for C_s x C_t with
/// s | t and t/s even, i.e. the groups C_a x C_2ab.
pub fn is_r2_abelian(g: &AbelianGroup) -> bool {
    match g.invariant_factors() {
        [] => true,
        [t] => t % 2 != 0,
        [s, t] => ((t / s) % 2) != 0,
        _ => true, // rank >= 3: no faithful 2-dimensional representation
    }
}

/// A pair of characters of C_s x C_t, each given by its weights on the two
/// invariant-factor generators: chi(g1) = zeta_s^u, chi(g2) = zeta_t^v.
/// For rank <= 1 the group is treated as C_1 x C_t.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacterPair {
    pub s: u64,
    pub t: u64,
    pub chi1: (u64, u64),
    pub chi2: (u64, u64),
}

/// All pairs of characters with trivial joint kernel, i.e. the faithful
/// diagonal two-dimensional representations. Empty for rank >= 3.
pub fn faithful_diagonal_reps(g: &AbelianGroup) -> Vec<CharacterPair> {
    let (s, t) = match g.invariant_factors() {
        [] => (1, 1),
        [t] => (1, *t),
        [s, t] => (*s, *t),
        _ => return vec![],
    };
    let mut out = Vec::new();
    for u1 in 0..s {
        for v1 in 0..t {
            for u2 in 0..s {
                for v2 in 0..t {
                    if joint_kernel_is_trivial(s, t, (u1, v1), (u2, v2)) {
                        out.push(CharacterPair {
                            s,
                            t,
                            chi1: (u1, v1),
                            chi2: (u2, v2),
                        });
                    }
                }
            }
        }
    }
    out
}

fn joint_kernel_is_trivial(s: u64, t: u64, c1: (u64, u64), c2: (u64, u64)) -> bool {
    // element (x, y) with x mod s, y mod t; chi_i(x,y) = zeta_t^{(t/s) u_i x + v_i y}
    let step = t / s;
    for x in 0..s {
        for y in 0..t {
            if x == 0 && y == 0 {
                continue;
            }
            let e1 = (step * c1.0 * x + c1.1 * y) % t;
            let e2 = (step * c2.0 * x + c2.1 * y) % t;
            if e1 == 0 && e2 == 0 {
                return false;
            }
        }
    }
    true
}

/// The image of a faithful pair inside (Z_t)^2: exponent vectors of the
/// diagonal entries of every group element. Distinct pairs with the same
/// image generate literally the same matrix group.
fn image_exponents(rep: &CharacterPair) -> BTreeSet<(u64, u64)> {
    let step = rep.t / rep.s;
    let mut set = BTreeSet::new();
    for x in 0..rep.s {
        for y in 0..rep.t {
            let e1 = (step * rep.chi1.0 * x + rep.chi1.1 * y) % rep.t;
            let e2 = (step * rep.chi2.0 * x + rep.chi2.1 * y) % rep.t;
            set.insert((e1, e2));
        }
    }
    set
}

/// Build the diagonal matrix group of a faithful pair over Q(zeta_t).
pub fn diagonal_matrix_group(rep: &CharacterPair) -> Result<FiniteMatrixGroup> {
    let t = u32::try_from(rep.t).map_err(|_| Error::GroupTooLarge(rep.t))?;
    let order = rep.s * rep.t;
    let step = (rep.t / rep.s) as i64;
    let g1 = Mat2::diagonal(
        Cyclo::root_of_unity(t, step * rep.chi1.0 as i64)?,
        Cyclo::root_of_unity(t, step * rep.chi2.0 as i64)?,
    )?;
    let g2 = Mat2::diagonal(
        Cyclo::root_of_unity(t, rep.chi1.1 as i64)?,
        Cyclo::root_of_unity(t, rep.chi2.1 as i64)?,
    )?;
    let g = FiniteMatrixGroup::generate(&[g1, g2], order)?;
    if g.order() != order {
        return Err(Error::Internal(format!(
            "faithful diagonal image closed to order {} instead of {}",
            g.order(),
            order
        )));
    }
    Ok(g)
}

/// Brute-force R2 decision through the group engine: true iff every faithful
/// diagonal representation yields a type-R singularity. Representations with
/// identical image groups are classified once.
pub fn is_r2_abelian_bruteforce(g: &AbelianGroup) -> Result<bool> {
    if g.rank() > 2 {
        return Ok(true);
    }
    if g.order() == 1 {
        // the trivial representation of the trivial group: a smooth quotient
        return Ok(true);
    }
    let mut seen: BTreeSet<Vec<(u64, u64)>> = BTreeSet::new();
    for rep in faithful_diagonal_reps(g) {
        let key: Vec<(u64, u64)> = image_exponents(&rep).into_iter().collect();
        if !seen.insert(key) {
            continue;
        }
        let group = diagonal_matrix_group(&rep)?;
        if !singularity_of_group(&group)?.is_type_r() {
            return Ok(false);
        }
    }
    Ok(true)
}

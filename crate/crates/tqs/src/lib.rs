//! Exact classification of two-dimensional tame quotient singularities of
//! type R.
//!
//! A cyclic quotient singularity 1/n(1,d) fails to be of type R exactly when
//! (n, d) is a *critical pair*: the Hirzebruch-Jung expansion of n/d is
//! palindromic, of odd length, with even central term; equivalently d^2 = 1
//! (mod n), n even, and d = +-1 modulo the largest power of 2 dividing n.
//! Every non-cyclic tame quotient surface singularity is of type R.
//!
//! The crate decides both criteria, normalizes arbitrary diagonal cyclic
//! actions, computes the quotient singularity of any finite subgroup of GL_2
//! given by generators over a cyclotomic field (pseudoreflection subgroup,
//! fundamental invariants, cotangent action), re-derives the classification
//! of the nine non-abelian families that fail to be of type R, and settles
//! the R2 question for abelian groups with an independent brute-force
//! oracle. All arithmetic is exact, over the rationals and the cyclotomic
//! fields Q(zeta_N).

pub mod abelian;
pub mod catalog;
pub mod cli;
pub mod cyclic_sing;
pub mod error;
pub mod exact;
pub mod hjcf;
pub mod invariant;
pub mod matgrp;

pub use error::{Error, Result};

//! Textual syntax for cyclotomic elements.
//!
//! An element is a sum of terms `c*z<N>^k` joined by `+`/`-`, where `c` is a
//! rational and `z<N>` stands for zeta_N, e.g. `1/2*z8^1 - 1/2*z8^3`. Plain
//! rationals are terms with k = 0. Printing always emits the canonical
//! power-basis form (exponents ascending, explicit coefficients), so
//! print-then-parse is the identity.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::cyclo::{Cyclo, Rational};
use crate::error::{Error, Result};

/// Canonical rendering of an element.
pub fn format_cyclo(x: &Cyclo) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let n = x.conductor();
    let mut out = String::new();
    let mut first = true;
    for (i, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if i == 0 {
            out.push_str(&mag.to_string());
        } else {
            out.push_str(&format!("{}*z{}^{}", mag, n, i));
        }
    }
    out
}

#[derive(Debug)]
struct Term {
    coeff: Rational,
    zeta: Option<(u32, i64)>, // (conductor, exponent)
}

/// Parse an element. The conductor is inferred from the `z<N>` tokens (all of
/// which must agree); an expression without any `z` token is rational and gets
/// conductor 1.
pub fn parse_cyclo(s: &str) -> Result<Cyclo> {
    let terms = parse_terms(s)?;
    let mut conductor: Option<u32> = None;
    for t in &terms {
        if let Some((n, _)) = t.zeta {
            match conductor {
                None => conductor = Some(n),
                Some(m) if m == n => {}
                Some(m) => {
                    return Err(Error::Parse(format!(
                        "mixed conductors {} and {} in one element",
                        m, n
                    )))
                }
            }
        }
    }
    let n = conductor.unwrap_or(1);
    let mut acc = Cyclo::zero(n)?;
    for t in terms {
        let term = match t.zeta {
            None => Cyclo::from_rational(n, t.coeff)?,
            Some((_, k)) => Cyclo::root_of_unity(n, k)?.scale(&t.coeff),
        };
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Parse an element and embed it into the given conductor.
pub fn parse_cyclo_in(s: &str, conductor: u32) -> Result<Cyclo> {
    let x = parse_cyclo(s)?;
    x.embed(conductor)
}

fn parse_terms(s: &str) -> Result<Vec<Term>> {
    // split on top-level '+'/'-' signs; a '-' directly after '^' belongs to
    // an exponent, and a sign in front of an empty term is the term's sign
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut pending: Option<bool> = None;
    let mut last_nonspace: Option<char> = None;
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && last_nonspace != Some('^') {
            if cur.trim().is_empty() {
                if pending.is_some() {
                    return Err(Error::Parse(format!("consecutive signs in `{}`", s)));
                }
                pending = Some(ch == '-');
            } else {
                pieces.push((pending.take().unwrap_or(false), std::mem::take(&mut cur)));
                pending = Some(ch == '-');
            }
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            last_nonspace = Some(ch);
        }
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse(format!(
            "empty or sign-terminated element `{}`",
            s
        )));
    }
    pieces.push((pending.unwrap_or(false), cur));

    let mut terms = Vec::new();
    for (neg, body) in pieces {
        let mut t = parse_term(body.trim())?;
        if neg {
            t.coeff = -t.coeff;
        }
        terms.push(t);
    }
    Ok(terms)
}

fn parse_term(body: &str) -> Result<Term> {
    // forms: "c", "c*zN^k", "c*zN", "zN^k", "zN"
    let (coeff_str, zeta_str) = match body.find('*') {
        Some(i) => (body[..i].trim(), Some(body[i + 1..].trim())),
        None => {
            if body.trim_start().starts_with('z') {
                ("1", Some(body.trim()))
            } else {
                (body.trim(), None)
            }
        }
    };
    let coeff: BigRational = coeff_str
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{}`", coeff_str)))?;
    let zeta = match zeta_str {
        None => None,
        Some(z) => Some(parse_zeta(z)?),
    };
    Ok(Term { coeff, zeta })
}

fn parse_zeta(z: &str) -> Result<(u32, i64)> {
    let rest = z
        .strip_prefix('z')
        .ok_or_else(|| Error::Parse(format!("expected z<N>, got `{}`", z)))?;
    let (n_str, k_str) = match rest.find('^') {
        Some(i) => (&rest[..i], Some(&rest[i + 1..])),
        None => (rest, None),
    };
    let n: u32 = n_str
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad conductor in `{}`", z)))?;
    if n == 0 {
        return Err(Error::Parse("conductor must be positive".into()));
    }
    let k: i64 = match k_str {
        None => 1,
        Some(k) => k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in `{}`", z)))?,
    };
    Ok((n, k))
}

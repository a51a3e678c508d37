//! Text form of polynomials.
//!
//! The printed form is valid input for the expression parser, and printing
//! is deterministic (terms in descending graded lex order), so callers can
//! compare outputs byte for byte.

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::monomial::Monomial;
use crate::poly::{NormalizedPoly, Poly};

fn push_coeff(out: &mut String, c: &BigRational, monomial_follows: bool) {
    let abs = c.abs();
    if abs.is_one() && monomial_follows {
        return;
    }
    if abs.denom().is_one() {
        out.push_str(&abs.numer().to_string());
    } else {
        out.push_str(&format!("{}/{}", abs.numer(), abs.denom()));
    }
    if monomial_follows {
        out.push('*');
    }
}

fn push_monomial(out: &mut String, m: &Monomial, p: &Poly) {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(p.vars().name(i));
        if e > 1 {
            out.push_str(&format!("^{}", e));
        }
    }
}

pub fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    // BTreeMap iterates ascending; we want the leading term first.
    for (i, (m, c)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        push_coeff(&mut out, c, !m.is_one());
        push_monomial(&mut out, m, p);
    }
    out
}

/// Renders a factor list as a product, e.g. `(y - 1)^2 * (y + 2)`.
/// An empty list (the factorization of a nonzero constant) prints as `1`.
pub fn format_factored(factors: &[(NormalizedPoly, u32)]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    let mut parts = Vec::with_capacity(factors.len());
    for (f, mult) in factors {
        let body = format_poly(f.as_poly());
        let needs_parens = f.as_poly().num_terms() > 1;
        let wrapped = if needs_parens { format!("({})", body) } else { body };
        if *mult == 1 {
            parts.push(wrapped);
        } else {
            let base = if needs_parens { wrapped } else { format!("({})", wrapped) };
            parts.push(format!("{}^{}", base, mult));
        }
    }
    parts.join(" * ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{normalize, Poly};
    use crate::vars::VarSet;

    #[test]
    fn formats_signs_and_powers() {
        let vs = VarSet::of(&["x", "y"]);
        let p = Poly::from_int_terms(
            &vs,
            &[(-3, &[2, 1]), (1, &[1, 0]), (-1, &[0, 1]), (5, &[0, 0])],
        );
        assert_eq!(format_poly(&p), "-3*x^2*y + x - y + 5");
        assert_eq!(format_poly(&Poly::zero(&vs)), "0");
        assert_eq!(format_poly(&Poly::int_constant(&vs, -2)), "-2");
    }

    #[test]
    fn formats_rational_coefficients() {
        let vs = VarSet::of(&["x"]);
        let p = Poly::from_terms(
            &vs,
            [(
                crate::monomial::Monomial::new(vec![1]),
                num_rational::BigRational::new(3.into(), 4.into()),
            )],
        );
        assert_eq!(format_poly(&p), "3/4*x");
    }

    #[test]
    fn formats_factor_lists() {
        let vs = VarSet::of(&["y"]);
        let a = normalize(&Poly::from_int_terms(&vs, &[(1, &[1]), (-1, &[0])]));
        let b = normalize(&Poly::from_int_terms(&vs, &[(1, &[1]), (2, &[0])]));
        let y = normalize(&Poly::var(&vs, 0));
        assert_eq!(format_factored(&[(a, 2), (b, 1)]), "(y - 1)^2 * (y + 2)");
        assert_eq!(format_factored(&[(y, 3)]), "(y)^3");
        assert_eq!(format_factored(&[]), "1");
    }
}

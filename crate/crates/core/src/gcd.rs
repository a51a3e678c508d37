//! Polynomial GCDs, content/primitive splits, and squarefree decomposition.
//!
//! The multivariate GCD uses a primitive polynomial remainder sequence on a
//! chosen main variable, recursing into the coefficient ring for contents.
//! Exact for desk-scale inputs; no modular arithmetic involved.

use num_traits::One;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{normalize, NormalizedPoly, Poly};
use crate::printer::format_poly;

/// GCD of two polynomials over the same variable set, canonically scaled.
/// `gcd(p, 0) = normalize(p)` and `gcd(0, 0) = 0`.
pub fn gcd_poly(a: &Poly, b: &Poly) -> NormalizedPoly {
    normalize(&gcd_raw(a, b))
}

fn gcd_raw(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalize(b).into_poly();
    }
    if b.is_zero() {
        return normalize(a).into_poly();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one(a.vars());
    }
    // Main variable: used by at least one operand, smallest combined degree,
    // ties broken by position. Degree-0 operands fall out via the content
    // split below.
    let v = {
        let mut used: Vec<usize> = a.used_vars();
        for i in b.used_vars() {
            if !used.contains(&i) {
                used.push(i);
            }
        }
        used.sort_unstable();
        *used
            .iter()
            .min_by_key(|&&i| {
                a.degree_in_var(i).unwrap_or(0) as u64 + b.degree_in_var(i).unwrap_or(0) as u64
            })
            .expect("nonconstant polynomials use at least one variable")
    };
    let (ca, pa) = split_in_var(a, v);
    let (cb, pb) = split_in_var(b, v);
    let cg = gcd_raw(&ca, &cb);
    let pg = primitive_prs(pa, pb, v);
    &cg * &pg
}

/// Content/primitive split with respect to a single variable: `p = c * q`
/// where `c` is the canonical GCD of the coefficients of powers of `v` and
/// `q` has coprime coefficients.
fn split_in_var(p: &Poly, v: usize) -> (Poly, Poly) {
    let coeffs = p.coeffs_in_var(v);
    let mut c = Poly::zero(p.vars());
    for coeff in &coeffs {
        if !coeff.is_zero() {
            c = gcd_raw(&c, coeff);
            if c.is_one() {
                break;
            }
        }
    }
    let q = p.div_exact(&c).expect("content divides");
    (c, q)
}

/// Primitive remainder sequence on `v`; inputs are primitive with respect
/// to `v`. Returns the primitive GCD (1 when coprime).
fn primitive_prs(mut f: Poly, mut g: Poly, v: usize) -> Poly {
    if f.degree_in_var(v).unwrap_or(0) < g.degree_in_var(v).unwrap_or(0) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.is_zero() {
            return normalize(&f).into_poly();
        }
        if g.degree_in_var(v).unwrap_or(0) == 0 {
            // Nonzero content-free remainder: the primitive parts are coprime.
            return Poly::one(f.vars());
        }
        let r = pseudo_rem(&f, &g, v);
        f = g;
        g = if r.is_zero() {
            r
        } else {
            let (_, prim) = split_in_var(&r, v);
            // Keep integer coefficients small as well.
            normalize(&prim).into_poly()
        };
    }
}

/// Pseudo-remainder of `f` by `g` in `v`: repeatedly cancels the leading
/// `v`-term after scaling by the leading coefficient of `g`.
fn pseudo_rem(f: &Poly, g: &Poly, v: usize) -> Poly {
    let dg = g.degree_in_var(v).expect("nonzero divisor");
    let lc_g = leading_coeff_in_var(g, v, dg);
    let mut r = f.clone();
    while let Some(dr) = r.degree_in_var(v) {
        if r.is_zero() || dr < dg {
            break;
        }
        let lc_r = leading_coeff_in_var(&r, v, dr);
        let shift = Monomial::var_pow(r.vars().len(), v, dr - dg);
        let scaled_r = &r * &lc_g;
        let cancel = &lc_r.mul_term(&shift, &num_rational::BigRational::one()) * g;
        r = &scaled_r - &cancel;
        debug_assert!(r.degree_in_var(v).unwrap_or(0) < dr || r.is_zero());
    }
    r
}

fn leading_coeff_in_var(p: &Poly, v: usize, deg: u32) -> Poly {
    let mut out = Poly::zero(p.vars());
    for (m, c) in p.terms() {
        if m[v] == deg {
            let mut exps = m.exps().to_vec();
            exps[v] = 0;
            out = &out + &Poly::from_terms(p.vars(), [(Monomial::new(exps), c.clone())]);
        }
    }
    out
}

/// Splits `p` into content and primitive part with respect to a block of
/// main variables: coefficients are grouped by their monomial in the block,
/// the content is the canonical GCD of those coefficient polynomials, and
/// `p = content * primitive` holds exactly.
pub fn content_primitive(p: &Poly, main: &[usize]) -> (Poly, Poly) {
    if p.is_zero() {
        return (Poly::zero(p.vars()), Poly::zero(p.vars()));
    }
    let mut grouped: std::collections::BTreeMap<Vec<u32>, Poly> = std::collections::BTreeMap::new();
    for (m, c) in p.terms() {
        let mut key = vec![0u32; p.vars().len()];
        let mut rest = m.exps().to_vec();
        for &i in main {
            key[i] = m[i];
            rest[i] = 0;
        }
        grouped
            .entry(key)
            .or_insert_with(|| Poly::zero(p.vars()))
            .add_assign(&Poly::from_terms(p.vars(), [(Monomial::new(rest), c.clone())]));
    }
    let mut content = Poly::zero(p.vars());
    for coeff in grouped.values() {
        content = gcd_raw(&content, coeff);
        if content.is_one() {
            break;
        }
    }
    let primitive = p.div_exact(&content).expect("content divides");
    (content, primitive)
}

/// Yun's squarefree decomposition of a univariate polynomial: returns
/// pairwise-coprime squarefree factors with multiplicities, sorted by
/// multiplicity descending. The factor product reassembles the input up to
/// a nonzero constant. Nonzero constants decompose into the empty list.
pub fn squarefree_decomposition(p: &Poly) -> Result<Vec<(NormalizedPoly, u32)>> {
    if p.is_zero() {
        return Err(Error::Validate("squarefree decomposition of the zero polynomial".into()));
    }
    let used = p.used_vars();
    if used.len() > 1 {
        return Err(Error::Validate(format!(
            "squarefree decomposition requires a univariate polynomial, got one in {} variables",
            used.len()
        )));
    }
    if used.is_empty() {
        return Ok(Vec::new());
    }
    let v = used[0];
    let f = normalize(p).into_poly();
    let df = f.derivative(v);
    let g = gcd_poly(&f, &df).into_poly();
    let mut out: Vec<(NormalizedPoly, u32)> = Vec::new();
    if g.as_constant().is_some() {
        out.push((normalize(&f), 1));
        return Ok(out);
    }
    let mut b = f.div_exact(&g).expect("gcd divides");
    let c = df.div_exact(&g).expect("gcd divides derivative");
    let mut d = &c - &b.derivative(v);
    let mut i = 1u32;
    while b.as_constant().is_none() {
        let a = gcd_poly(&b, &d).into_poly();
        if a.as_constant().is_none() {
            out.push((normalize(&a), i));
        }
        b = b.div_exact(&a).expect("factor divides");
        let c_next = d.div_exact(&a).expect("factor divides");
        d = &c_next - &b.derivative(v);
        i += 1;
    }
    out.sort_by(|x, y| {
        y.1.cmp(&x.1)
            .then_with(|| format_poly(x.0.as_poly()).cmp(&format_poly(y.0.as_poly())))
    });
    Ok(out)
}

/// Product of the distinct squarefree factors: a canonical polynomial with
/// the same roots as `p`, each with multiplicity one. Constants map to 1.
pub fn squarefree_part(p: &Poly) -> Result<NormalizedPoly> {
    let factors = squarefree_decomposition(p)?;
    let mut acc = Poly::one(p.vars());
    for (f, _) in factors {
        acc = &acc * f.as_poly();
    }
    Ok(normalize(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::VarSet;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::sync::Arc;

    fn upoly(vs: &Arc<VarSet>, coeffs: &[i64]) -> Poly {
        // coeffs[k] is the coefficient of y^k
        let terms: Vec<(i64, Vec<u32>)> =
            coeffs.iter().enumerate().map(|(k, &c)| (c, vec![k as u32])).collect();
        let borrowed: Vec<(i64, &[u32])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
        Poly::from_int_terms(vs, &borrowed)
    }

    #[test]
    fn gcd_of_the_two_perturbation_results() {
        let vy = VarSet::of(&["y"]);
        let r1 = upoly(&vy, &[2, 5, 2, -6, -3]); // -3y^4 - 6y^3 + 2y^2 + 5y + 2
        let r2 = upoly(&vy, &[2, -5, -21, -11, -1]); // -y^4 - 11y^3 - 21y^2 - 5y + 2
        let g = gcd_poly(&r1, &r2);
        let expect = upoly(&vy, &[2, 1]); // y + 2
        assert_eq!(g.as_poly(), &expect);
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let vy = VarSet::of(&["y"]);
        let p = upoly(&vy, &[-4, 0, -6]);
        let z = Poly::zero(&vy);
        assert_eq!(gcd_poly(&p, &z), normalize(&p));
        assert_eq!(gcd_poly(&z, &p), normalize(&p));
        assert!(gcd_poly(&z, &z).is_zero());
    }

    #[test]
    fn gcd_of_shared_binary_form_factor() {
        // gcd(x1*(x1 + x2*y), x1*(x1 - x2*y)) = x1
        let vs = VarSet::of(&["x1", "x2", "y"]);
        let x1 = Poly::var(&vs, 0);
        let plus = Poly::from_int_terms(&vs, &[(1, &[1, 0, 0]), (1, &[0, 1, 1])]);
        let minus = Poly::from_int_terms(&vs, &[(1, &[1, 0, 0]), (-1, &[0, 1, 1])]);
        let g = gcd_poly(&(&x1 * &plus), &(&x1 * &minus));
        assert_eq!(g.as_poly(), &x1);
        // and the cofactors themselves are coprime
        assert!(gcd_poly(&plus, &minus).is_one());
    }

    fn random_poly(vars: &Arc<VarSet>, rng: &mut StdRng, max_terms: usize, max_exp: u32) -> Poly {
        let n_terms = rng.gen_range(1..=max_terms);
        let mut p = Poly::zero(vars);
        for _ in 0..n_terms {
            let exps: Vec<u32> = (0..vars.len()).map(|_| rng.gen_range(0..=max_exp)).collect();
            let c = rng.gen_range(-9i64..=9);
            p = &p + &Poly::from_int_terms(vars, &[(c, &exps)]);
        }
        p
    }

    #[test]
    fn gcd_recovers_common_factor_randomized() {
        let vs = VarSet::of(&["x", "y"]);
        let mut rng = StdRng::seed_from_u64(101);
        let mut checked = 0;
        for _ in 0..120 {
            let a = random_poly(&vs, &mut rng, 3, 2);
            let b = random_poly(&vs, &mut rng, 3, 2);
            let g = random_poly(&vs, &mut rng, 3, 2);
            if a.is_zero() || b.is_zero() || g.is_zero() {
                continue;
            }
            if !gcd_poly(&a, &b).is_one() {
                continue;
            }
            let got = gcd_poly(&(&a * &g), &(&b * &g));
            assert_eq!(got, normalize(&g), "a={} b={} g={}", a, b, g);
            checked += 1;
        }
        assert!(checked > 50, "only {} coprime pairs exercised", checked);
    }

    #[test]
    fn gcd_divides_both_inputs_randomized() {
        let vs = VarSet::of(&["x", "y", "z"]);
        let mut rng = StdRng::seed_from_u64(103);
        for _ in 0..60 {
            let a = random_poly(&vs, &mut rng, 3, 2);
            let b = random_poly(&vs, &mut rng, 3, 2);
            let g = gcd_poly(&a, &b).into_poly();
            if g.is_zero() {
                continue;
            }
            assert!(a.div_exact(&g).is_some(), "gcd {} does not divide {}", g, a);
            assert!(b.div_exact(&g).is_some(), "gcd {} does not divide {}", g, b);
        }
    }

    #[test]
    fn content_primitive_examples() {
        let vs = VarSet::of(&["x1", "x2", "y"]);
        // x1*y with main block [x1]
        let p = Poly::from_int_terms(&vs, &[(1, &[1, 0, 1])]);
        let (c, q) = content_primitive(&p, &[0]);
        assert_eq!(c, Poly::var(&vs, 2));
        assert_eq!(q, Poly::var(&vs, 0));

        // x1^2 + x2^2 has trivial content in the full block
        let p = Poly::from_int_terms(&vs, &[(1, &[2, 0, 0]), (1, &[0, 2, 0])]);
        let (c, q) = content_primitive(&p, &[0, 1]);
        assert!(c.is_one());
        assert_eq!(q, p);

        // y^2*x1 + y^3*x2 → content y^2, primitive x1 + y*x2
        let p = Poly::from_int_terms(&vs, &[(1, &[1, 0, 2]), (1, &[0, 1, 3])]);
        let (c, q) = content_primitive(&p, &[0, 1]);
        let y = Poly::var(&vs, 2);
        assert_eq!(c, &y * &y);
        assert_eq!(q, Poly::from_int_terms(&vs, &[(1, &[1, 0, 0]), (1, &[0, 1, 1])]));
        assert_eq!(&c * &q, p);
    }

    #[test]
    fn squarefree_decomposition_examples() {
        let vy = VarSet::of(&["y"]);
        let p = upoly(&vy, &[2, -3, 0, 1]); // y^3 - 3y + 2 = (y-1)^2 (y+2)
        let dec = squarefree_decomposition(&p).unwrap();
        let ym1 = normalize(&upoly(&vy, &[-1, 1]));
        let yp2 = normalize(&upoly(&vy, &[2, 1]));
        assert_eq!(dec, vec![(ym1, 2), (yp2, 1)]);

        let y2 = upoly(&vy, &[0, 0, 1]);
        let dec = squarefree_decomposition(&y2).unwrap();
        assert_eq!(dec, vec![(normalize(&Poly::var(&vy, 0)), 2)]);

        let p = upoly(&vy, &[2, 1]);
        let dec = squarefree_decomposition(&p).unwrap();
        assert_eq!(dec, vec![(normalize(&upoly(&vy, &[2, 1])), 1)]);

        assert!(squarefree_decomposition(&Poly::zero(&vy)).is_err());
        assert_eq!(squarefree_decomposition(&Poly::int_constant(&vy, 5)).unwrap(), vec![]);
    }

    #[test]
    fn squarefree_reassembles_randomized() {
        let vy = VarSet::of(&["y"]);
        let mut rng = StdRng::seed_from_u64(107);
        for _ in 0..200 {
            // build from random linear/quadratic factors with multiplicities
            let mut p = Poly::int_constant(&vy, rng.gen_range(1i64..=3));
            for _ in 0..rng.gen_range(1..=3) {
                let f = upoly(&vy, &[rng.gen_range(-3i64..=3), rng.gen_range(1i64..=3)]);
                p = &p * &f.pow(rng.gen_range(1..=3));
            }
            let dec = squarefree_decomposition(&p).unwrap();
            let mut prod = Poly::one(&vy);
            for (f, k) in &dec {
                prod = &prod * &f.as_poly().pow(*k);
            }
            assert_eq!(normalize(&prod), normalize(&p));
            // factors pairwise coprime
            for i in 0..dec.len() {
                for j in i + 1..dec.len() {
                    assert!(gcd_poly(dec[i].0.as_poly(), dec[j].0.as_poly()).is_one());
                }
            }
        }
    }
}

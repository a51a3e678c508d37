//! Perturbed resultants: the generalized characteristic polynomial.
//!
//! When the resultant of a system vanishes identically because of an excess
//! component (a common factor, a positive-dimensional intersection piece),
//! the finite part can still be recovered: perturb each form with epsilon
//! times an admissible form of matching degree, take the resultant of the
//! perturbed system as a polynomial in epsilon, and read off the
//! lowest-order nonvanishing coefficient.
//!
//! A perturbation (p_1, ..., p_n) is admissible when the p_i have no common
//! projective zero, equivalently their (constant) resultant is nonzero.
//! Powers of independent linear forms are the cheap certified family: their
//! resultant is a power of the determinant of the linear coefficients.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::det::det_rational;
use crate::error::{Error, Result};
use crate::gcd::gcd_poly;
use crate::monomial::Monomial;
use crate::poly::{normalize, NormalizedPoly, Poly};
use crate::resultant::{resultant, Method};
use crate::system::System;
use crate::vars::VarSet;

/// Proof that a perturbation has no nontrivial common zero, together with
/// the witness value. The perturbation is admissible iff the value is
/// nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdmissibilityCheck {
    /// Every p_i is a power of a linear form; the value is the determinant
    /// of the matrix of linear coefficients.
    LinearFormDet(BigRational),
    /// General case: the value is the resultant of the p_i themselves.
    ConstantResultant(BigRational),
}

impl AdmissibilityCheck {
    pub fn is_admissible(&self) -> bool {
        match self {
            AdmissibilityCheck::LinearFormDet(v) => !v.is_zero(),
            AdmissibilityCheck::ConstantResultant(v) => !v.is_zero(),
        }
    }

    pub fn value(&self) -> &BigRational {
        match self {
            AdmissibilityCheck::LinearFormDet(v) => v,
            AdmissibilityCheck::ConstantResultant(v) => v,
        }
    }
}

/// Where a perturbation came from; recorded for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    User,
    Seeded { seed: u64, coeff_bound: i64 },
}

/// An admissibility-checked perturbation vector over the x-variables of a
/// particular system shape.
#[derive(Debug, Clone)]
pub struct PerturbationVector {
    polys: Vec<Poly>,
    provenance: Provenance,
    check: AdmissibilityCheck,
}

impl PerturbationVector {
    /// Validates shape and admissibility of user-supplied forms. The forms
    /// may be given over any variable set as long as they only use the
    /// system's x-variables.
    pub fn new(sys: &System, polys: Vec<Poly>, provenance: Provenance) -> Result<Self> {
        let polys = normalize_varset(sys, polys)?;
        let check = is_admissible(sys, &polys)?;
        if !check.is_admissible() {
            return Err(Error::Validate(
                "perturbation forms share a nontrivial common zero".into(),
            ));
        }
        Ok(PerturbationVector { polys, provenance, check })
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn check(&self) -> &AdmissibilityCheck {
        &self.check
    }
}

/// Rebases the forms onto an x-only variable set and checks degrees.
fn normalize_varset(sys: &System, polys: Vec<Poly>) -> Result<Vec<Poly>> {
    if polys.len() != sys.n() {
        return Err(Error::Validate(format!(
            "perturbation must supply one form per equation: expected {}, got {}",
            sys.n(),
            polys.len()
        )));
    }
    let x_vs = VarSet::new(sys.x_names().iter().cloned())?;
    let mut out = Vec::with_capacity(polys.len());
    for (i, p) in polys.iter().enumerate() {
        for vi in p.used_vars() {
            let name = p.vars().name(vi);
            if x_vs.index_of(name).is_none() {
                return Err(Error::Validate(format!(
                    "perturbation form {} uses '{}', which is not an x-variable",
                    i + 1,
                    name
                )));
            }
        }
        let p = p.embed(&x_vs);
        let all: Vec<usize> = (0..x_vs.len()).collect();
        let want = sys.degrees()[i];
        match p.homogeneous_degree_in(&all) {
            Some(d) if d == want => out.push(p),
            Some(d) => {
                return Err(Error::Validate(format!(
                    "perturbation form {} has degree {}, the equation it perturbs has degree {}",
                    i + 1,
                    d,
                    want
                )))
            }
            None => {
                return Err(Error::Validate(format!(
                    "perturbation form {} must be homogeneous of degree {}",
                    i + 1,
                    want
                )))
            }
        }
    }
    Ok(out)
}

/// Decides admissibility of degree-checked forms over the x-variables.
/// Returns the certificate either way; inspect `is_admissible()` on it.
pub fn is_admissible(sys: &System, polys: &[Poly]) -> Result<AdmissibilityCheck> {
    let polys = normalize_varset(sys, polys.to_vec())?;
    let n = sys.n();
    let x_vs = polys[0].vars().clone();
    let linear: Option<Vec<Poly>> = polys
        .iter()
        .zip(sys.degrees())
        .map(|(p, &d)| linear_root(p, d))
        .collect();
    if let Some(roots) = linear {
        let matrix: Vec<Vec<BigRational>> = roots
            .iter()
            .map(|l| {
                (0..n).map(|j| l.coeff(&Monomial::var_pow(n, j, 1)).clone()).collect()
            })
            .collect();
        return Ok(AdmissibilityCheck::LinearFormDet(det_rational(matrix)));
    }
    let named: Vec<(String, Poly)> = polys
        .iter()
        .enumerate()
        .map(|(i, p)| (format!("p{}", i + 1), p.clone()))
        .collect();
    let psys = System::from_parts(x_vs, n, named)?;
    let r = resultant(&psys)?;
    let value = r
        .poly
        .as_poly()
        .as_constant()
        .expect("resultant of a parameter-free system is constant");
    Ok(AdmissibilityCheck::ConstantResultant(value))
}

/// If `p` equals c * l^d for a linear form l, returns l; otherwise None.
fn linear_root(p: &Poly, d: u32) -> Option<Poly> {
    if d == 1 {
        return Some(p.clone());
    }
    let var = *p.used_vars().first()?;
    let dp = p.derivative(var);
    if dp.is_zero() {
        return None;
    }
    let g = gcd_poly(p, &dp).into_poly();
    let candidate = p.div_exact(&g)?;
    let all: Vec<usize> = (0..p.vars().len()).collect();
    if candidate.homogeneous_degree_in(&all) != Some(1) {
        return None;
    }
    let lifted = normalize(&candidate.pow(d));
    if lifted == normalize(p) {
        Some(candidate)
    } else {
        None
    }
}

const RANDOM_PERTURBATION_ATTEMPTS: u32 = 1000;

/// Draws powers of random independent linear forms matching the system's
/// degrees: p_i = (sum_j c_ij x_j)^{d_i} with integer c_ij in
/// [-coeff_bound, coeff_bound] and det(c) != 0. Deterministic in the seed.
pub fn random_admissible_perturbation(
    sys: &System,
    seed: u64,
    coeff_bound: i64,
) -> Result<PerturbationVector> {
    if coeff_bound < 1 {
        return Err(Error::Validate("coefficient bound must be at least 1".into()));
    }
    let n = sys.n();
    let x_vs = VarSet::new(sys.x_names().iter().cloned())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_PERTURBATION_ATTEMPTS {
        let coeffs: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-coeff_bound..=coeff_bound)).collect())
            .collect();
        let matrix: Vec<Vec<BigRational>> = coeffs
            .iter()
            .map(|row| row.iter().map(|&c| BigRational::from(BigInt::from(c))).collect())
            .collect();
        let det = det_rational(matrix);
        if det.is_zero() {
            continue;
        }
        let polys: Vec<Poly> = coeffs
            .iter()
            .zip(sys.degrees())
            .map(|(row, &d)| {
                let mut lin = Poly::zero(&x_vs);
                for (j, &c) in row.iter().enumerate() {
                    lin = &lin + &Poly::var(&x_vs, j).scale(&BigRational::from(BigInt::from(c)));
                }
                lin.pow(d)
            })
            .collect();
        return Ok(PerturbationVector {
            polys,
            provenance: Provenance::Seeded { seed, coeff_bound },
            check: AdmissibilityCheck::LinearFormDet(det),
        });
    }
    Err(Error::Internal(format!(
        "no admissible perturbation found in {} attempts",
        RANDOM_PERTURBATION_ATTEMPTS
    )))
}

/// Result of one generalized-characteristic-polynomial computation.
#[derive(Debug, Clone)]
pub struct GcpResult {
    /// Valuation: the lowest epsilon-power with a nonvanishing coefficient.
    /// Zero exactly when the unperturbed resultant is nonzero.
    pub s: u32,
    /// That coefficient, over the parameter variables, canonicalized.
    pub r_s: NormalizedPoly,
    pub perturbation: PerturbationVector,
    pub method: Method,
}

/// Computes the generalized characteristic polynomial of the system under
/// the given perturbation and extracts its lowest epsilon coefficient.
pub fn gcp(sys: &System, perturbation: &PerturbationVector) -> Result<GcpResult> {
    let polys = normalize_varset(sys, perturbation.polys().to_vec())?;
    let eps = fresh_name("eps", sys.vars());
    let ext_names: Vec<String> = sys
        .vars()
        .names()
        .iter()
        .cloned()
        .chain(std::iter::once(eps.clone()))
        .collect();
    let ext_vs = VarSet::new(ext_names)?;
    let eps_idx = ext_vs.len() - 1;
    let eps_poly = Poly::var(&ext_vs, eps_idx);
    let named: Vec<(String, Poly)> = sys
        .form_names()
        .iter()
        .zip(sys.forms())
        .zip(&polys)
        .map(|((name, f), p)| {
            let perturbed = &f.embed(&ext_vs) + &(&p.embed(&ext_vs) * &eps_poly);
            (name.clone(), perturbed)
        })
        .collect();
    let ext_sys = System::from_parts(ext_vs, sys.n(), named)?;
    let r = resultant(&ext_sys)?;
    let rp = r.poly.as_poly();
    if rp.is_zero() {
        return Err(Error::Internal(
            "characteristic polynomial vanished identically despite an admissible perturbation"
                .into(),
        ));
    }
    // rp lives over (params, eps); eps is the last variable there.
    let eps_param = rp.vars().len() - 1;
    let s = rp
        .terms()
        .map(|(m, _)| m[eps_param])
        .min()
        .expect("nonzero polynomial has terms");
    let param_vs = VarSet::new(sys.param_names().iter().cloned())?;
    let mut slice = Poly::zero(rp.vars());
    for (m, c) in rp.terms() {
        if m[eps_param] == s {
            let mut exps = m.exps().to_vec();
            exps[eps_param] = 0;
            slice = &slice + &Poly::from_terms(rp.vars(), [(Monomial::new(exps), c.clone())]);
        }
    }
    Ok(GcpResult {
        s,
        r_s: normalize(&slice.embed(&param_vs)),
        perturbation: perturbation.clone(),
        method: r.method,
    })
}

fn fresh_name(base: &str, vars: &Arc<VarSet>) -> String {
    let mut name = base.to_string();
    while vars.index_of(&name).is_some() {
        name.push('_');
    }
    name
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_expr, parse_system};

    fn sys_of(text: &str) -> System {
        System::validate(&parse_system(text).unwrap()).unwrap()
    }

    fn intro() -> System {
        sys_of(
            "vars x1; params y; homogenize x2;\n\
             f1 = x1^2 - y^2 + x1 - y;\n\
             f2 = 2*x1^2 - x1*y - y^2;",
        )
    }

    fn x_forms(sys: &System, texts: &[&str]) -> Vec<Poly> {
        let vs = VarSet::new(sys.x_names().iter().cloned()).unwrap();
        texts.iter().map(|t| parse_expr(t, &vs).unwrap()).collect()
    }

    fn upoly(vs: &Arc<VarSet>, coeffs: &[i64]) -> Poly {
        let terms: Vec<(i64, Vec<u32>)> =
            coeffs.iter().enumerate().map(|(k, &c)| (c, vec![k as u32])).collect();
        let borrowed: Vec<(i64, &[u32])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
        Poly::from_int_terms(vs, &borrowed)
    }

    #[test]
    fn coordinate_powers_are_admissible() {
        let sys = intro();
        let p = x_forms(&sys, &["x1^2", "x2^2"]);
        let check = is_admissible(&sys, &p).unwrap();
        assert!(check.is_admissible());
        assert!(matches!(check, AdmissibilityCheck::LinearFormDet(_)));
    }

    #[test]
    fn repeated_linear_form_is_inadmissible() {
        let sys = intro();
        let p = x_forms(&sys, &["x1^2", "x1^2"]);
        let check = is_admissible(&sys, &p).unwrap();
        assert!(!check.is_admissible());
        assert!(PerturbationVector::new(&sys, p, Provenance::User).is_err());
    }

    #[test]
    fn non_linear_power_falls_back_to_resultant_certificate() {
        let sys = intro();
        let p = x_forms(&sys, &["x1^2 + x2^2", "x1*x2"]);
        let check = is_admissible(&sys, &p).unwrap();
        assert!(matches!(check, AdmissibilityCheck::ConstantResultant(_)));
        assert!(check.is_admissible());
    }

    #[test]
    fn shared_zero_detected_by_resultant_certificate() {
        let sys = intro();
        let p = x_forms(&sys, &["x1*x2", "x1*x2 + x1^2"]);
        let check = is_admissible(&sys, &p).unwrap();
        assert!(matches!(check, AdmissibilityCheck::ConstantResultant(_)));
        assert!(!check.is_admissible());
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let sys = intro();
        let p = x_forms(&sys, &["x1", "x2^2"]);
        assert!(matches!(is_admissible(&sys, &p), Err(Error::Validate(_))));
    }

    #[test]
    fn inhomogeneous_perturbation_is_rejected() {
        let sys = intro();
        let vs = VarSet::of(&["x1", "x2"]);
        let p = vec![parse_expr("x1^2 + x1", &vs).unwrap(), parse_expr("x2^2", &vs).unwrap()];
        assert!(matches!(is_admissible(&sys, &p), Err(Error::Validate(_))));
    }

    #[test]
    fn perturbation_in_foreign_variables_is_rejected() {
        let sys = intro();
        let vs = VarSet::of(&["x1", "z"]);
        let p = vec![parse_expr("x1^2", &vs).unwrap(), parse_expr("z^2", &vs).unwrap()];
        assert!(matches!(is_admissible(&sys, &p), Err(Error::Validate(_))));
    }

    #[test]
    fn random_perturbations_are_deterministic_in_the_seed() {
        let sys = intro();
        let a = random_admissible_perturbation(&sys, 7, 10).unwrap();
        let b = random_admissible_perturbation(&sys, 7, 10).unwrap();
        assert_eq!(a.polys(), b.polys());
        assert!(a.check().is_admissible());
        let c = random_admissible_perturbation(&sys, 8, 10).unwrap();
        assert_ne!(a.polys(), c.polys());
    }

    #[test]
    fn zero_coefficient_bound_is_rejected() {
        let sys = intro();
        assert!(matches!(
            random_admissible_perturbation(&sys, 1, 0),
            Err(Error::Validate(_))
        ));
    }

    #[test]
    fn axis_powers_on_the_intro_system() {
        // perturbing with (x1^2, x2^2) gives valuation 1 and lowest
        // coefficient 3y^4 + 6y^3 - 2y^2 - 5y - 2
        let sys = intro();
        let p = PerturbationVector::new(&sys, x_forms(&sys, &["x1^2", "x2^2"]), Provenance::User)
            .unwrap();
        let g = gcp(&sys, &p).unwrap();
        assert_eq!(g.s, 1);
        let vy = g.r_s.as_poly().vars().clone();
        assert_eq!(g.r_s.as_poly(), &upoly(&vy, &[-2, -5, -2, 6, 3]));
    }

    #[test]
    fn nonvanishing_resultant_means_valuation_zero() {
        let sys = sys_of("vars x1 x2; params y; f1 = x1 + x2*y; f2 = x1 - x2*y;");
        let p = random_admissible_perturbation(&sys, 5, 10).unwrap();
        let g = gcp(&sys, &p).unwrap();
        assert_eq!(g.s, 0);
        // the valuation-zero coefficient is the plain resultant
        let r = resultant(&sys).unwrap();
        assert_eq!(g.r_s, r.poly);
    }

    #[test]
    fn shared_component_forces_positive_valuation() {
        let sys = sys_of("vars x1 x2; params y; f1 = x1*(x1 + x2*y); f2 = x1*(x1 - x2*y);");
        for seed in [1u64, 2, 3] {
            let p = random_admissible_perturbation(&sys, seed, 10).unwrap();
            let g = gcp(&sys, &p).unwrap();
            assert!(g.s > 0, "seed {}", seed);
        }
    }

    #[test]
    fn intro_lowest_coefficients_share_the_isolated_root() {
        // several independent perturbations: every lowest coefficient
        // vanishes at y = -2, the isolated intersection
        let sys = intro();
        let minus_two = [BigRational::from(BigInt::from(-2))];
        for seed in 11u64..16 {
            let p = random_admissible_perturbation(&sys, seed, 10).unwrap();
            let g = gcp(&sys, &p).unwrap();
            assert!(g.s >= 1, "seed {}", seed);
            let val = g.r_s.as_poly().eval(&minus_two);
            assert!(val.is_zero(), "seed {} value {}", seed, val);
        }
    }

    #[test]
    fn epsilon_name_avoids_collisions() {
        let sys = sys_of("vars x1 x2; params eps; f1 = x1*eps; f2 = x1 - x2;");
        let p = random_admissible_perturbation(&sys, 3, 10).unwrap();
        let g = gcp(&sys, &p).unwrap();
        // the perturbation variable was renamed away from the user's `eps`
        assert_eq!(g.r_s.as_poly().vars().names(), &["eps".to_string()]);
    }
}

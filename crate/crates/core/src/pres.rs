//! The perturbed resultant: a gcd of lowest perturbation coefficients over
//! several independent random perturbations.
//!
//! One perturbed-resultant coefficient already vanishes on every parameter
//! value where the system acquires an isolated solution, but it also picks
//! up perturbation-dependent junk factors. Junk varies with the
//! perturbation while the geometric content does not, so the gcd across
//! independent trials strips it with high probability. A confirmation
//! trial is always folded in afterwards; whether it changed anything is
//! reported as the agreement flag.
//!
//! For two equations in one parameter there is an independent elimination
//! route (gcd plus a Sylvester resultant of the cofactors) used as a
//! cross-check oracle.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gcd::{content_primitive, gcd_poly, squarefree_decomposition, squarefree_part};
use crate::gcp::{gcp, random_admissible_perturbation};
use crate::poly::{normalize, NormalizedPoly, Poly};
use crate::resultant::binary_form_resultant;
use crate::system::System;
use crate::vars::VarSet;

/// One perturbation trial inside a perturbed-resultant run.
#[derive(Debug, Clone)]
pub struct TrialRecord {
    /// Seed that generated this trial's perturbation.
    pub seed: u64,
    /// Valuation of the characteristic polynomial in this trial.
    pub s: u32,
    /// The lowest nonvanishing coefficient of this trial.
    pub cres: NormalizedPoly,
}

/// Outcome of a perturbed-resultant computation.
#[derive(Debug, Clone)]
pub struct PresResult {
    /// Gcd of the per-trial coefficients, confirmation trial included.
    pub gcd: NormalizedPoly,
    /// Squarefree factorization of the gcd, multiplicities descending.
    pub squarefree: Vec<(NormalizedPoly, u32)>,
    /// Number of requested trials (the confirmation trial is extra).
    pub trials: u32,
    /// True when the confirmation trial left the gcd unchanged.
    pub agreement: bool,
    /// All trials in order; the confirmation trial is last.
    pub records: Vec<TrialRecord>,
}

/// Runs `trials` independent perturbation trials plus one confirmation
/// trial and folds their lowest coefficients into a gcd. Per-trial seeds
/// are drawn from a stream seeded with `seed`, so a run with more trials
/// extends the trials of a run with fewer.
pub fn pres(sys: &System, trials: u32, seed: u64, coeff_bound: i64) -> Result<PresResult> {
    if trials < 2 {
        return Err(Error::Validate(format!(
            "at least 2 trials are required for a meaningful gcd, got {}",
            trials
        )));
    }
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let trial_seeds: Vec<u64> = (0..trials + 1).map(|_| master.gen()).collect();
    let mut records = Vec::with_capacity(trial_seeds.len());
    let mut running: Option<NormalizedPoly> = None;
    let mut before_confirmation = None;
    for (k, &ts) in trial_seeds.iter().enumerate() {
        let p = random_admissible_perturbation(sys, ts, coeff_bound)?;
        let g = gcp(sys, &p)?;
        running = Some(match running {
            None => g.r_s.clone(),
            Some(acc) => gcd_poly(acc.as_poly(), g.r_s.as_poly()),
        });
        if k + 1 == trials as usize {
            before_confirmation = running.clone();
        }
        records.push(TrialRecord { seed: ts, s: g.s, cres: g.r_s });
    }
    let gcd = running.expect("at least three trials ran");
    let agreement = before_confirmation.as_ref() == Some(&gcd);
    let squarefree = squarefree_report(&gcd);
    Ok(PresResult { gcd, squarefree, trials, agreement, records })
}

/// Squarefree factorization when the gcd is a polynomial in at most one
/// variable (the common case); a gcd in several parameters is reported as
/// a single factor.
fn squarefree_report(g: &NormalizedPoly) -> Vec<(NormalizedPoly, u32)> {
    if g.as_poly().used_vars().len() <= 1 {
        squarefree_decomposition(g.as_poly())
            .expect("gcd is nonzero and uses at most one variable")
    } else {
        vec![(g.clone(), 1)]
    }
}

/// The zero set computed by the independent planar route, with its two
/// ingredients kept for inspection. All parts are polynomials in the
/// single parameter.
#[derive(Debug, Clone)]
pub struct PlanarZeroSet {
    /// Squarefree polynomial cutting out the whole zero set.
    pub poly: NormalizedPoly,
    /// Parameter-only content of the common factor of the two forms.
    pub content_part: NormalizedPoly,
    /// Resultant of the coprime cofactors.
    pub cofactor_part: NormalizedPoly,
}

/// Independent elimination for two forms in one parameter: split off the
/// common factor g = gcd(f1, f2), take the parameter content of g (values
/// where a whole curve of solutions appears) times the Sylvester resultant
/// of the cofactors (values where the residual curves meet), and reduce to
/// a squarefree polynomial.
pub fn planar_oracle(sys: &System) -> Result<PlanarZeroSet> {
    if sys.n() != 2 || sys.m() != 1 {
        return Err(Error::Structure(format!(
            "planar oracle needs 2 equations and 1 parameter, got {} and {}",
            sys.n(),
            sys.m()
        )));
    }
    let f1 = &sys.forms()[0];
    let f2 = &sys.forms()[1];
    let g = gcd_poly(f1, f2).into_poly();
    let h1 = f1.div_exact(&g).expect("gcd divides");
    let h2 = f2.div_exact(&g).expect("gcd divides");
    let x_idx = sys.x_indices();
    let (content, _) = content_primitive(&g, &x_idx);
    let a = squarefree_part(&content)?;
    let e1 = h1.homogeneous_degree_in(&x_idx).expect("cofactor of a form is a form");
    let e2 = h2.homogeneous_degree_in(&x_idx).expect("cofactor of a form is a form");
    let res = binary_form_resultant(&h1, &h2, (x_idx[0], x_idx[1]), (e1, e2));
    let b = squarefree_part(&res)?;
    let param_vs = VarSet::new(sys.param_names().iter().cloned())?;
    let combined = squarefree_part(&(a.as_poly() * b.as_poly()))?;
    Ok(PlanarZeroSet {
        poly: normalize(&combined.as_poly().embed(&param_vs)),
        content_part: normalize(&a.as_poly().embed(&param_vs)),
        cofactor_part: normalize(&b.as_poly().embed(&param_vs)),
    })
}

/// Whether two nonzero polynomials in at most one variable cut out the
/// same zero set, i.e. have equal squarefree parts. The polynomials may
/// live over different variable sets; variables are matched by name.
pub fn zero_set_equal(a: &Poly, b: &Poly) -> Result<bool> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Validate(
            "the zero polynomial does not define a comparable zero set".into(),
        ));
    }
    let sa = squarefree_part(a)?;
    let sb = squarefree_part(b)?;
    let name = |p: &NormalizedPoly| {
        p.as_poly().used_vars().first().map(|&i| p.as_poly().vars().name(i).to_string())
    };
    match (name(&sa), name(&sb)) {
        (None, None) => Ok(true),
        (Some(na), Some(nb)) => {
            if na != nb {
                return Ok(false);
            }
            let u = VarSet::new([na])?;
            Ok(sa.as_poly().embed(&u) == sb.as_poly().embed(&u))
        }
        _ => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_system;
    use crate::poly::Poly;
    use crate::DEFAULT_SEED;
    use std::sync::Arc;

    fn sys_of(text: &str) -> System {
        System::validate(&parse_system(text).unwrap()).unwrap()
    }

    fn upoly(vs: &Arc<VarSet>, coeffs: &[i64]) -> Poly {
        let terms: Vec<(i64, Vec<u32>)> =
            coeffs.iter().enumerate().map(|(k, &c)| (c, vec![k as u32])).collect();
        let borrowed: Vec<(i64, &[u32])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
        Poly::from_int_terms(vs, &borrowed)
    }

    fn embedded() -> System {
        sys_of("vars x1 x2; params y; f1 = x1*(x1 + x2*y); f2 = x1*(x1 - x2*y);")
    }

    #[test]
    fn embedded_line_yields_y_squared() {
        let r = pres(&embedded(), 2, DEFAULT_SEED, 10).unwrap();
        let vy = r.gcd.as_poly().vars().clone();
        assert_eq!(r.gcd.as_poly(), &upoly(&vy, &[0, 0, 1]));
        assert!(r.agreement);
        assert_eq!(r.records.len(), 3);
        assert_eq!(r.squarefree.len(), 1);
        assert_eq!(r.squarefree[0].1, 2);
    }

    #[test]
    fn too_few_trials_is_a_validation_error() {
        assert!(matches!(pres(&embedded(), 1, DEFAULT_SEED, 10), Err(Error::Validate(_))));
    }

    #[test]
    fn runs_are_deterministic_in_the_master_seed() {
        let a = pres(&embedded(), 2, 42, 10).unwrap();
        let b = pres(&embedded(), 2, 42, 10).unwrap();
        assert_eq!(a.gcd, b.gcd);
        assert_eq!(
            a.records.iter().map(|r| r.seed).collect::<Vec<_>>(),
            b.records.iter().map(|r| r.seed).collect::<Vec<_>>()
        );
    }

    #[test]
    fn more_trials_refine_the_gcd() {
        // the seed stream is a prefix, so the gcd over more trials divides
        // the gcd over fewer
        let sys = embedded();
        let few = pres(&sys, 2, 77, 10).unwrap();
        let many = pres(&sys, 4, 77, 10).unwrap();
        assert!(few.gcd.as_poly().div_exact(many.gcd.as_poly()).is_some());
    }

    #[test]
    fn intro_system_pins_the_isolated_root() {
        let sys = sys_of(
            "vars x1; params y; homogenize x2;\n\
             f1 = x1^2 - y^2 + x1 - y;\n\
             f2 = 2*x1^2 - x1*y - y^2;",
        );
        let r = pres(&sys, 2, DEFAULT_SEED, 10).unwrap();
        let vy = r.gcd.as_poly().vars().clone();
        assert_eq!(r.gcd.as_poly(), &upoly(&vy, &[2, 1]));
    }

    #[test]
    fn oracle_on_the_intro_system() {
        let sys = sys_of(
            "vars x1; params y; homogenize x2;\n\
             f1 = x1^2 - y^2 + x1 - y;\n\
             f2 = 2*x1^2 - x1*y - y^2;",
        );
        let z = planar_oracle(&sys).unwrap();
        let vy = z.poly.as_poly().vars().clone();
        assert_eq!(z.poly.as_poly(), &upoly(&vy, &[2, 1]));
        // no common factor, so the content part is trivial
        assert!(z.content_part.is_one());
    }

    #[test]
    fn oracle_on_the_embedded_line() {
        let z = planar_oracle(&embedded()).unwrap();
        let vy = z.poly.as_poly().vars().clone();
        assert_eq!(z.poly.as_poly(), &upoly(&vy, &[0, 1]));
    }

    #[test]
    fn oracle_on_forms_with_pure_parameter_content() {
        // f1 = f2 = x1*y: the whole x-line solves the system at y = 0
        let sys = sys_of("vars x1 x2; params y; f1 = x1*y; f2 = x1*y;");
        let z = planar_oracle(&sys).unwrap();
        let vy = z.poly.as_poly().vars().clone();
        assert_eq!(z.poly.as_poly(), &upoly(&vy, &[0, 1]));
        assert_eq!(z.content_part.as_poly(), &upoly(&vy, &[0, 1]));
        assert!(z.cofactor_part.is_one());
    }

    #[test]
    fn oracle_rejects_wrong_shape() {
        let sys = sys_of(
            "vars x1 x2 x3; params y;\n\
             f1 = y*x1 + x2 + x3; f2 = x1 + y*x2 + x3; f3 = x1 + x2 + y*x3;",
        );
        assert!(matches!(planar_oracle(&sys), Err(Error::Structure(_))));
    }

    #[test]
    fn oracle_agrees_with_perturbed_resultant_up_to_multiplicity() {
        let sys = embedded();
        let z = planar_oracle(&sys).unwrap();
        let r = pres(&sys, 2, DEFAULT_SEED, 10).unwrap();
        assert!(zero_set_equal(z.poly.as_poly(), r.gcd.as_poly()).unwrap());
    }

    #[test]
    fn zero_set_comparison_ignores_multiplicity_and_constants() {
        let vy = VarSet::of(&["y"]);
        let y = Poly::var(&vy, 0);
        let y2 = &y * &y;
        assert!(zero_set_equal(&y, &y2).unwrap());
        assert!(zero_set_equal(&Poly::one(&vy), &Poly::int_constant(&vy, 5)).unwrap());
        assert!(!zero_set_equal(&y, &Poly::one(&vy)).unwrap());
        let shifted = &y + &Poly::int_constant(&vy, 2);
        assert!(!zero_set_equal(&y, &shifted).unwrap());
        assert!(zero_set_equal(&Poly::zero(&vy), &y).is_err());
        // same polynomial under a different variable name is a different set
        let vz = VarSet::of(&["z"]);
        let z = Poly::var(&vz, 0);
        assert!(!zero_set_equal(&y, &z).unwrap());
    }
}

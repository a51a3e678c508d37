//! Multivariate resultants of x-homogeneous forms with polynomial
//! coefficients.
//!
//! Two paths:
//! * n = 2: the Sylvester matrix of the two binary x-forms, with entries in
//!   the coefficient ring, eliminated fraction-free. Fully symbolic.
//! * general n: the Macaulay determinant ratio det M / det M'. Rather than
//!   carrying polynomial entries through two large determinants, the
//!   parameters are evaluated at integer sample points, each sample yields
//!   one exact rational value of the resultant, and the polynomial is
//!   recovered by dense interpolation against a priori degree bounds, then
//!   verified at fresh sample points.
//!
//! Samples where det M' vanishes are rejected. If rejections dominate, the
//! designated minor may vanish identically for this system; a random
//! unimodular change of x-coordinates (which alters the resultant by at
//! most a constant factor) is applied and the pass restarts.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::det::{det_fraction_free, det_rational};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{normalize, NormalizedPoly, Poly};
use crate::system::System;
use crate::vars::VarSet;

/// How a resultant was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Sylvester,
    /// Macaulay ratio evaluated once (no parameters to interpolate).
    MacaulayDirect,
    /// Macaulay ratio sampled and interpolated over the parameters.
    MacaulayInterpolated,
}

/// A computed resultant: a canonical polynomial over the parameter block
/// (the x-variables are eliminated). Defined up to a nonzero constant
/// factor, hence reported normalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultantValue {
    pub poly: NormalizedPoly,
    pub method: Method,
    /// Unimodular x-coordinate change applied before computing, if the
    /// original layout was rejected. Row i gives the image of x_i.
    pub coordinate_change: Option<Vec<Vec<i64>>>,
}

/// Routes to the Sylvester path for n = 2 and the Macaulay path otherwise.
pub fn resultant(sys: &System) -> Result<ResultantValue> {
    if sys.n() == 2 {
        sylvester_resultant(sys)
    } else {
        macaulay_resultant(sys)
    }
}

/// Resultant of a two-form system via the symbolic Sylvester determinant.
pub fn sylvester_resultant(sys: &System) -> Result<ResultantValue> {
    if sys.n() != 2 {
        return Err(Error::Structure(format!(
            "Sylvester resultant requires exactly 2 forms, system has {}",
            sys.n()
        )));
    }
    let d = sys.degrees();
    let det = binary_form_resultant(&sys.forms()[0], &sys.forms()[1], (0, 1), (d[0], d[1]));
    let param_vars = param_varset(sys);
    Ok(ResultantValue {
        poly: normalize(&det.embed(&param_vars)),
        method: Method::Sylvester,
        coordinate_change: None,
    })
}

/// Sylvester determinant of two binary forms in the variables `x = (x0, x1)`
/// with the given formal degrees. The result lives over the same variable
/// set as the inputs (with the x-variables unused). Degree-0 formal degrees
/// are allowed: an empty matrix yields 1, and a single constant-in-x form of
/// formal degree 0 contributes its value as a power.
///
/// Panics if a form has a term whose x-degree differs from its formal
/// degree; callers pass exact degrees.
pub fn binary_form_resultant(f: &Poly, g: &Poly, x: (usize, usize), formal: (u32, u32)) -> Poly {
    let (d1, d2) = formal;
    for (name, p, d) in [("first", f, d1), ("second", g, d2)] {
        for (m, _) in p.terms() {
            assert_eq!(
                m[x.0] + m[x.1],
                d,
                "{} form is not homogeneous of the stated formal degree",
                name
            );
        }
    }
    let size = (d1 + d2) as usize;
    let vars = f.vars();
    let one = Poly::one(vars);
    if size == 0 {
        return one;
    }
    let a: Vec<Poly> = (0..=d1).map(|j| binary_coeff(f, x, d1 - j, j)).collect();
    let b: Vec<Poly> = (0..=d2).map(|j| binary_coeff(g, x, d2 - j, j)).collect();
    let mut matrix = vec![vec![Poly::zero(vars); size]; size];
    for r in 0..d2 as usize {
        for (j, aj) in a.iter().enumerate() {
            matrix[r][r + j] = aj.clone();
        }
    }
    for r in 0..d1 as usize {
        for (j, bj) in b.iter().enumerate() {
            matrix[d2 as usize + r][r + j] = bj.clone();
        }
    }
    det_fraction_free(matrix, &one)
}

/// Coefficient of x0^e0 * x1^e1 in `p`, as a polynomial with those two
/// exponents cleared.
fn binary_coeff(p: &Poly, x: (usize, usize), e0: u32, e1: u32) -> Poly {
    let mut out = Poly::zero(p.vars());
    for (m, c) in p.terms() {
        if m[x.0] == e0 && m[x.1] == e1 {
            let mut exps = m.exps().to_vec();
            exps[x.0] = 0;
            exps[x.1] = 0;
            out = &out + &Poly::from_terms(p.vars(), [(Monomial::new(exps), c.clone())]);
        }
    }
    out
}

fn param_varset(sys: &System) -> Arc<VarSet> {
    VarSet::new(sys.param_names()).expect("parameter names are valid")
}

/// The classical Macaulay layout in the critical degree
/// D = sum(d_i - 1) + 1: one row and one column per degree-D monomial in x.
struct MacaulayLayout {
    cols: Vec<Vec<u32>>,
    col_index: HashMap<Vec<u32>, usize>,
    /// Per row (aligned with `cols`): the form index and the monomial the
    /// form is multiplied by for this row.
    row_form: Vec<usize>,
    row_multiplier: Vec<Vec<u32>>,
    /// Indices of monomials divisible by x_i^{d_i} for at least two i; the
    /// minor M' lives on these rows and columns.
    nonreduced: Vec<usize>,
}

fn macaulay_layout(degrees: &[u32]) -> MacaulayLayout {
    let n = degrees.len();
    let critical: u32 = degrees.iter().map(|&d| d - 1).sum::<u32>() + 1;
    let cols = monomials_of_degree(n, critical);
    let col_index: HashMap<Vec<u32>, usize> =
        cols.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let mut row_form = Vec::with_capacity(cols.len());
    let mut row_multiplier = Vec::with_capacity(cols.len());
    let mut nonreduced = Vec::new();
    for (idx, m) in cols.iter().enumerate() {
        let hits: Vec<usize> = (0..n).filter(|&i| m[i] >= degrees[i]).collect();
        // every degree-D monomial exceeds at least one d_i by pigeonhole
        let i = hits[0];
        let mut mult = m.clone();
        mult[i] -= degrees[i];
        row_form.push(i);
        row_multiplier.push(mult);
        if hits.len() >= 2 {
            nonreduced.push(idx);
        }
    }
    MacaulayLayout { cols, col_index, row_form, row_multiplier, nonreduced }
}

/// All exponent vectors of length `n` with the given total degree, in a
/// fixed deterministic order.
fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = rem;
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for e in (0..=rem).rev() {
            cur[i] = e;
            rec(i + 1, rem - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// Evaluates the Macaulay determinant ratio at numeric parameter points.
struct SampleEvaluator {
    layout: MacaulayLayout,
    /// Per form: its x-monomial support with coefficient polynomials over
    /// the parameter variables.
    form_coeffs: Vec<Vec<(Vec<u32>, Poly)>>,
    param_vars: Arc<VarSet>,
}

impl SampleEvaluator {
    fn new(sys: &System) -> SampleEvaluator {
        let param_vars = param_varset(sys);
        let n = sys.n();
        let form_coeffs = sys
            .forms()
            .iter()
            .map(|f| {
                let mut map: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
                for (m, c) in f.terms() {
                    let xe = m.exps()[..n].to_vec();
                    let pe = m.exps()[n..].to_vec();
                    map.entry(xe)
                        .or_insert_with(|| Poly::zero(&param_vars))
                        .add_assign(&Poly::from_terms(&param_vars, [(Monomial::new(pe), c.clone())]));
                }
                map.into_iter().collect()
            })
            .collect();
        SampleEvaluator { layout: macaulay_layout(sys.degrees()), form_coeffs, param_vars }
    }

    /// det M / det M' at the point, or `None` when det M' = 0 there.
    fn eval(&self, point: &[BigRational]) -> Option<BigRational> {
        let size = self.layout.cols.len();
        let form_values: Vec<Vec<(&Vec<u32>, BigRational)>> = self
            .form_coeffs
            .iter()
            .map(|coeffs| coeffs.iter().map(|(xe, p)| (xe, p.eval(point))).collect())
            .collect();
        let mut m = vec![vec![BigRational::zero(); size]; size];
        for r in 0..size {
            let mult = &self.layout.row_multiplier[r];
            for (xe, val) in &form_values[self.layout.row_form[r]] {
                if val.is_zero() {
                    continue;
                }
                let col_exps: Vec<u32> = xe.iter().zip(mult).map(|(a, b)| a + b).collect();
                let c = self.layout.col_index[&col_exps];
                m[r][c] = val.clone();
            }
        }
        let minor: Vec<Vec<BigRational>> = self
            .layout
            .nonreduced
            .iter()
            .map(|&r| self.layout.nonreduced.iter().map(|&c| m[r][c].clone()).collect())
            .collect();
        let det_minor = det_rational(minor);
        if det_minor.is_zero() {
            return None;
        }
        let det_full = det_rational(m);
        Some(det_full / det_minor)
    }
}

/// Interpolation degree bound per parameter: the resultant has degree
/// D_i = prod_{j != i} d_j in the coefficients of the i-th form, so its
/// degree in a parameter v is at most sum_i D_i * deg_v(f_i).
fn degree_bounds(sys: &System) -> Result<Vec<u32>> {
    let degs = sys.degrees();
    let n = sys.n();
    let coeff_degree: Vec<u64> = (0..n)
        .map(|i| degs.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &d)| d as u64).product())
        .collect();
    let mut bounds = Vec::with_capacity(sys.m());
    for k in 0..sys.m() {
        let var = n + k;
        let mut b: u64 = 0;
        for (i, f) in sys.forms().iter().enumerate() {
            b += coeff_degree[i] * f.degree_in_var(var).unwrap_or(0) as u64;
        }
        let b = u32::try_from(b)
            .map_err(|_| Error::Structure("interpolation degree bound overflows".into()))?;
        bounds.push(b);
    }
    Ok(bounds)
}

/// Extra candidate nodes tried per variable before declaring a slice
/// hopeless.
const SLICE_EXTRA: u32 = 40;
/// Seed for drawing verification points; fixed so runs are reproducible.
const VERIFY_SEED: u64 = 0x76657269;
/// Seed base for coordinate-change fallbacks.
const COORD_SEED: u64 = 0x636f6f72;
const MAX_COORD_ATTEMPTS: u64 = 5;

struct Interpolator<'a> {
    eval: &'a SampleEvaluator,
    bounds: Vec<u32>,
    attempts: u64,
    rejections: u64,
}

impl Interpolator<'_> {
    fn run(&mut self) -> Result<Option<Poly>> {
        let mut point = vec![BigRational::zero(); self.bounds.len()];
        self.level(0, &mut point)
    }

    /// Interpolates the resultant in variables `k..` with variables `..k`
    /// already fixed in `point`. `Ok(None)` means this slice could not
    /// gather enough accepted samples.
    fn level(&mut self, k: usize, point: &mut Vec<BigRational>) -> Result<Option<Poly>> {
        if k == self.bounds.len() {
            self.attempts += 1;
            return match self.eval.eval(point) {
                Some(v) => Ok(Some(Poly::constant(&self.eval.param_vars, v))),
                None => {
                    self.rejections += 1;
                    if self.rejections > 20 && self.rejections * 2 > self.attempts {
                        Err(Error::DegenerateLayout(
                            "more than half of the sample points were rejected".into(),
                        ))
                    } else {
                        Ok(None)
                    }
                }
            };
        }
        let need = self.bounds[k] as usize + 1;
        let mut nodes: Vec<(BigRational, Poly)> = Vec::with_capacity(need);
        let mut t: u32 = 0;
        while nodes.len() < need && t < self.bounds[k] + 1 + SLICE_EXTRA {
            t += 1;
            point[k] = BigRational::from(BigInt::from(t));
            if let Some(slice) = self.level(k + 1, point)? {
                nodes.push((point[k].clone(), slice));
            }
        }
        point[k] = BigRational::zero();
        if nodes.len() < need {
            return Ok(None);
        }
        Ok(Some(lagrange(k, &nodes, &self.eval.param_vars)))
    }
}

/// Lagrange interpolation in one variable with polynomial-valued nodes.
fn lagrange(var: usize, nodes: &[(BigRational, Poly)], vars: &Arc<VarSet>) -> Poly {
    let v = Poly::var(vars, var);
    let mut acc = Poly::zero(vars);
    for (j, (tj, pj)) in nodes.iter().enumerate() {
        let mut basis = Poly::one(vars);
        let mut denom = BigRational::one();
        for (l, (tl, _)) in nodes.iter().enumerate() {
            if l == j {
                continue;
            }
            basis = &basis * &(&v - &Poly::constant(vars, tl.clone()));
            denom *= tj - tl;
        }
        acc = &acc + &(&basis * pj).scale(&(BigRational::one() / denom));
    }
    acc
}

fn verify_interpolation(ev: &SampleEvaluator, p: &Poly) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
    let m = ev.param_vars.len();
    let mut verified = 0;
    let mut tries = 0;
    while verified < 3 && tries < 200 {
        tries += 1;
        let point: Vec<BigRational> =
            (0..m).map(|_| BigRational::from(BigInt::from(rng.gen_range(50i64..=5000)))).collect();
        match ev.eval(&point) {
            Some(v) => {
                if p.eval(&point) != v {
                    return Err(Error::Internal(
                        "interpolated resultant disagrees with a direct evaluation".into(),
                    ));
                }
                verified += 1;
            }
            None => continue,
        }
    }
    if verified < 3 {
        return Err(Error::Internal("no usable verification points found".into()));
    }
    Ok(())
}

/// Random integer matrix with determinant +-1 and entries in [-5, 5],
/// composed from elementary row operations.
fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    loop {
        let mut t = vec![vec![0i64; n]; n];
        for (i, row) in t.iter_mut().enumerate() {
            row[i] = 1;
        }
        let ops = rng.gen_range(2..=n + 3);
        for _ in 0..ops {
            match rng.gen_range(0..3) {
                0 if n >= 2 => {
                    // shear: row_i += c * row_j
                    let i = rng.gen_range(0..n);
                    let mut j = rng.gen_range(0..n - 1);
                    if j >= i {
                        j += 1;
                    }
                    let c = *[-2i64, -1, 1, 2].iter().nth(rng.gen_range(0..4)).unwrap();
                    for col in 0..n {
                        t[i][col] += c * t[j][col];
                    }
                }
                1 if n >= 2 => {
                    let i = rng.gen_range(0..n);
                    let mut j = rng.gen_range(0..n - 1);
                    if j >= i {
                        j += 1;
                    }
                    t.swap(i, j);
                }
                _ => {
                    let i = rng.gen_range(0..n);
                    for col in 0..n {
                        t[i][col] = -t[i][col];
                    }
                }
            }
        }
        let identity = t.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, &e)| e == if i == j { 1 } else { 0 })
        });
        let small = t.iter().flatten().all(|&e| e.abs() <= 5);
        if !identity && small {
            return t;
        }
    }
}

/// Applies x_i -> sum_j T[i][j] x_j to every form.
fn apply_coordinate_change(sys: &System, t: &[Vec<i64>]) -> Result<System> {
    let n = sys.n();
    let vars = sys.vars();
    let subs: Vec<(usize, Poly)> = (0..n)
        .map(|i| {
            let mut lin = Poly::zero(vars);
            for (j, &c) in t[i].iter().enumerate() {
                lin = &lin + &Poly::var(vars, j).scale(&BigRational::from(BigInt::from(c)));
            }
            (i, lin)
        })
        .collect();
    let forms = sys.forms().iter().map(|f| f.substitute(&subs)).collect();
    sys.with_forms(forms)
}

/// Resultant via the Macaulay determinant ratio with sampling and
/// interpolation over the parameters.
pub fn macaulay_resultant(sys: &System) -> Result<ResultantValue> {
    for attempt in 0..=MAX_COORD_ATTEMPTS {
        let (cur, change) = if attempt == 0 {
            (sys.clone(), None)
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(COORD_SEED.wrapping_add(attempt));
            let t = random_unimodular(sys.n(), &mut rng);
            (apply_coordinate_change(sys, &t)?, Some(t))
        };
        let evaluator = SampleEvaluator::new(&cur);
        let bounds = degree_bounds(&cur)?;
        let mut interp =
            Interpolator { eval: &evaluator, bounds, attempts: 0, rejections: 0 };
        match interp.run() {
            Ok(Some(p)) => {
                verify_interpolation(&evaluator, &p)?;
                let method = if sys.m() == 0 {
                    Method::MacaulayDirect
                } else {
                    Method::MacaulayInterpolated
                };
                return Ok(ResultantValue { poly: normalize(&p), method, coordinate_change: change });
            }
            // Not enough accepted samples on some slice: same treatment as
            // the explicit rejection-ratio abort.
            Ok(None) => continue,
            Err(Error::DegenerateLayout(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::DegenerateLayout(
        "the designated Macaulay minor vanishes identically; coordinate changes did not help"
            .into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_system;
    use crate::system::System;

    fn sys_of(text: &str) -> System {
        System::validate(&parse_system(text).unwrap()).unwrap()
    }

    fn upoly(vs: &Arc<VarSet>, coeffs: &[i64]) -> Poly {
        let terms: Vec<(i64, Vec<u32>)> =
            coeffs.iter().enumerate().map(|(k, &c)| (c, vec![k as u32])).collect();
        let borrowed: Vec<(i64, &[u32])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
        Poly::from_int_terms(vs, &borrowed)
    }

    #[test]
    fn sylvester_of_the_intro_cofactors() {
        // Res_x(x1 + x2*y + x2, 2*x1 + x2*y) is a constant multiple of y + 2
        let sys = sys_of("vars x1 x2; params y; h1 = x1 + x2*y + x2; h2 = 2*x1 + x2*y;");
        let r = sylvester_resultant(&sys).unwrap();
        let vy = r.poly.as_poly().vars().clone();
        assert_eq!(r.poly.as_poly(), &upoly(&vy, &[2, 1]));
        assert_eq!(r.method, Method::Sylvester);
    }

    #[test]
    fn sylvester_of_coordinate_forms_is_constant() {
        let sys = sys_of("vars x1 x2; params ; f = x1; g = x2;");
        let r = sylvester_resultant(&sys).unwrap();
        assert!(r.poly.is_one());
    }

    #[test]
    fn sylvester_detects_shared_factor() {
        let sys = sys_of("vars x1 x2; params y; f = x1*y; g = x1*y;");
        let r = resultant(&sys).unwrap();
        assert!(r.poly.is_zero());
    }

    #[test]
    fn sylvester_rejects_wrong_form_count() {
        let sys = sys_of("vars x1 x2 x3; params ; f = x1; g = x2; h = x3;");
        assert!(matches!(sylvester_resultant(&sys), Err(Error::Structure(_))));
    }

    #[test]
    fn degree_zero_formal_degrees() {
        let vs = VarSet::of(&["x1", "x2", "y"]);
        let c = Poly::from_int_terms(&vs, &[(1, &[0, 0, 1]), (3, &[0, 0, 0])]); // y + 3
        let g = Poly::from_int_terms(&vs, &[(1, &[2, 0, 0]), (1, &[0, 2, 0])]); // x1^2 + x2^2
        // empty matrix
        let one = binary_form_resultant(&Poly::one(&vs), &Poly::one(&vs), (0, 1), (0, 0));
        assert!(one.is_one());
        // deg-0 against deg-2: the constant form to the power d2
        let r = binary_form_resultant(&c, &g, (0, 1), (0, 2));
        assert_eq!(r, &c * &c);
    }

    #[test]
    fn macaulay_layout_sizes() {
        // degrees (1,1,1): critical degree 1, 3 columns, no nonreduced rows
        let l = macaulay_layout(&[1, 1, 1]);
        assert_eq!(l.cols.len(), 3);
        assert!(l.nonreduced.is_empty());
        // degrees (2,2,2): critical degree 4, C(6,2)=15 columns, minor 3x3
        let l = macaulay_layout(&[2, 2, 2]);
        assert_eq!(l.cols.len(), 15);
        assert_eq!(l.nonreduced.len(), 3);
        // every row assignment divides: multiplier + d_i * e_i = column
        for (r, m) in l.cols.iter().enumerate() {
            let i = l.row_form[r];
            let mut back = l.row_multiplier[r].clone();
            back[i] += [2, 2, 2][i];
            assert_eq!(&back, m);
        }
    }

    #[test]
    fn macaulay_on_the_linear_system() {
        // det [[y,1,1],[1,y,1],[1,1,y]] = y^3 - 3y + 2
        let sys = sys_of(
            "vars x1 x2 x3; params y;\n\
             f1 = y*x1 + x2 + x3; f2 = x1 + y*x2 + x3; f3 = x1 + x2 + y*x3;",
        );
        let r = macaulay_resultant(&sys).unwrap();
        let vy = r.poly.as_poly().vars().clone();
        assert_eq!(r.poly.as_poly(), &upoly(&vy, &[2, -3, 0, 1]));
        assert_eq!(r.method, Method::MacaulayInterpolated);
    }

    #[test]
    fn macaulay_of_coordinate_forms() {
        let sys = sys_of("vars x1 x2 x3; params ; f = x1; g = x2; h = x3;");
        let r = macaulay_resultant(&sys).unwrap();
        assert!(r.poly.is_one());
        assert_eq!(r.method, Method::MacaulayDirect);
    }

    #[test]
    fn methods_agree_on_a_two_form_system() {
        let sys = sys_of(
            "vars x1; params y; homogenize x2;\n\
             f1 = x1^2 - y^2 + x1 - y;\n\
             f2 = 2*x1^2 - x1*y - y^2;",
        );
        let s = sylvester_resultant(&sys).unwrap();
        let m = macaulay_resultant(&sys).unwrap();
        assert_eq!(s.poly, m.poly);
    }

    #[test]
    fn coordinate_change_alters_resultant_by_constant_only() {
        let sys = sys_of(
            "vars x1 x2; params y;\n\
             f1 = x1^2 - x2^2*y^2 + x1*x2 - x2^2*y;\n\
             f2 = 2*x1^2 - x1*x2*y - x2^2*y^2;",
        );
        let base = resultant(&sys).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..5 {
            let t = random_unimodular(2, &mut rng);
            let changed = apply_coordinate_change(&sys, &t).unwrap();
            let r = resultant(&changed).unwrap();
            assert_eq!(r.poly, base.poly, "change {:?}", t);
        }
    }

    #[test]
    fn unimodular_matrices_are_small_and_invertible() {
        let mut rng = ChaCha8Rng::seed_from_u64(321);
        for n in 2..=4usize {
            for _ in 0..20 {
                let t = random_unimodular(n, &mut rng);
                let m: Vec<Vec<num_bigint::BigInt>> = t
                    .iter()
                    .map(|row| row.iter().map(|&e| num_bigint::BigInt::from(e)).collect())
                    .collect();
                let det = crate::det::det_integer(m);
                assert!(det == BigInt::from(1) || det == BigInt::from(-1));
                assert!(t.iter().flatten().all(|&e| e.abs() <= 5));
            }
        }
    }
}

//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are stored in a `BTreeMap` keyed by [`Monomial`] under graded lex,
//! so iteration is always in ascending monomial order and the last entry is
//! the leading term. The map never stores zero coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::printer::format_poly;
use crate::vars::{same_vars, VarSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero(vars: &Arc<VarSet>) -> Poly {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Arc<VarSet>) -> Poly {
        Poly::constant(vars, BigRational::one())
    }

    pub fn constant(vars: &Arc<VarSet>, c: BigRational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(vars.len()), c);
        }
        Poly { vars: vars.clone(), terms }
    }

    pub fn int_constant(vars: &Arc<VarSet>, c: i64) -> Poly {
        Poly::constant(vars, BigRational::from(BigInt::from(c)))
    }

    /// The variable `x_idx` as a polynomial.
    pub fn var(vars: &Arc<VarSet>, idx: usize) -> Poly {
        assert!(idx < vars.len(), "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var_pow(vars.len(), idx, 1), BigRational::one());
        Poly { vars: vars.clone(), terms }
    }

    /// Builds a polynomial from integer-coefficient terms given as
    /// `(coefficient, exponent vector)` pairs. Test and construction helper.
    pub fn from_int_terms(vars: &Arc<VarSet>, terms: &[(i64, &[u32])]) -> Poly {
        let mut p = Poly::zero(vars);
        for &(c, exps) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(Monomial::new(exps.to_vec()), BigRational::from(BigInt::from(c)));
        }
        p
    }

    pub fn from_terms<I>(vars: &Arc<VarSet>, terms: I) -> Poly
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Poly::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "monomial length mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map_or(false, |c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Leading term under graded lex; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Degree in a single variable; `None` for the zero polynomial.
    pub fn degree_in_var(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|m| m[idx]).max()
    }

    /// Combined degree in a subset of variables; `None` for zero.
    pub fn degree_in(&self, idxs: &[usize]) -> Option<u32> {
        self.terms.keys().map(|m| m.degree_in(idxs)).max()
    }

    /// `Some(d)` when every term has the same degree `d` in the selected
    /// variables. Zero polynomial reports `None`: it has no well-defined
    /// homogeneity degree.
    pub fn homogeneous_degree_in(&self, idxs: &[usize]) -> Option<u32> {
        let mut deg = None;
        for m in self.terms.keys() {
            let d = m.degree_in(idxs);
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_compatible(&self, other: &Poly) {
        assert!(
            same_vars(&self.vars, &other.vars),
            "polynomials over different variable sets: {} vs {}",
            self.vars,
            other.vars
        );
    }

    pub fn add_assign(&mut self, other: &Poly) {
        self.assert_compatible(other);
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients of the powers of `x_idx`: entry `k` is the coefficient
    /// polynomial of `x_idx^k` (with that exponent removed). The vector has
    /// length `degree_in_var(idx) + 1`, or is empty for the zero polynomial.
    pub fn coeffs_in_var(&self, idx: usize) -> Vec<Poly> {
        let deg = match self.degree_in_var(idx) {
            None => return Vec::new(),
            Some(d) => d,
        };
        let mut out = vec![Poly::zero(&self.vars); deg as usize + 1];
        for (m, c) in &self.terms {
            let k = m[idx] as usize;
            let mut exps = m.exps().to_vec();
            exps[idx] = 0;
            out[k].add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Inverse of [`coeffs_in_var`]: `sum coeffs[k] * x_idx^k`.
    pub fn from_coeffs_in_var(vars: &Arc<VarSet>, idx: usize, coeffs: &[Poly]) -> Poly {
        let mut p = Poly::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            let shift = Monomial::var_pow(vars.len(), idx, k as u32);
            p.add_assign(&c.mul_term(&shift, &BigRational::one()));
        }
        p
    }

    pub fn derivative(&self, idx: usize) -> Poly {
        let mut p = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[idx] = e - 1;
            p.add_term(Monomial::new(exps), c * BigRational::from(BigInt::from(e)));
        }
        p
    }

    /// Full evaluation at a rational point (one value per variable).
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len(), "wrong evaluation point length");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes rational values for a subset of variables; the result
    /// still lives over the same variable set.
    pub fn partial_eval(&self, assign: &[(usize, BigRational)]) -> Poly {
        let mut p = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.exps().to_vec();
            for (idx, val) in assign {
                let e = exps[*idx];
                exps[*idx] = 0;
                for _ in 0..e {
                    coeff *= val;
                }
                if coeff.is_zero() {
                    break;
                }
            }
            p.add_term(Monomial::new(exps), coeff);
        }
        p
    }

    /// Substitutes polynomials (over the same variable set) for selected
    /// variables, all simultaneously.
    pub fn substitute(&self, subs: &[(usize, Poly)]) -> Poly {
        for (_, s) in subs {
            self.assert_compatible(s);
        }
        let mut result = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut exps = m.exps().to_vec();
            let mut factor = Poly::one(&self.vars);
            for (idx, replacement) in subs {
                let e = exps[*idx];
                if e > 0 {
                    exps[*idx] = 0;
                    factor = &factor * &replacement.pow(e);
                }
            }
            let base = Poly::from_terms(&self.vars, [(Monomial::new(exps), c.clone())]);
            result.add_assign(&(&base * &factor));
        }
        result
    }

    /// Reinterprets the polynomial over `target`, matching variables by
    /// name. Panics if a variable that actually occurs is missing from the
    /// target set; unused target variables are fine.
    pub fn embed(&self, target: &Arc<VarSet>) -> Poly {
        if same_vars(&self.vars, target) {
            return self.clone();
        }
        let map: Vec<Option<usize>> = self
            .vars
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let mut p = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] += e,
                    None => panic!(
                        "variable '{}' not present in target set {}",
                        self.vars.name(i),
                        target
                    ),
                }
            }
            p.add_term(Monomial::new(exps), c.clone());
        }
        p
    }

    /// Indices of variables that actually occur with positive exponent.
    pub fn used_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.vars.len()];
        for m in self.terms.keys() {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter_map(|(i, &u)| if u { Some(i) } else { None })
            .collect()
    }

    /// Homogenizes with respect to the selected variables: each term is
    /// padded with a power of `fresh` so that every term reaches degree
    /// `deg` in `x_idxs ∪ {fresh}`, where `deg` is the maximal degree of
    /// `self` in `x_idxs`. Setting `fresh` to 1 afterwards recovers `self`.
    ///
    /// Panics if `fresh` already occurs in the polynomial or is listed in
    /// `x_idxs`; callers validate name collisions before reaching this.
    pub fn homogenize(&self, x_idxs: &[usize], fresh: usize) -> Poly {
        assert!(!x_idxs.contains(&fresh), "fresh variable listed among the block variables");
        assert!(
            self.degree_in_var(fresh).unwrap_or(0) == 0,
            "fresh variable '{}' already occurs",
            self.vars.name(fresh)
        );
        let deg = match self.degree_in(x_idxs) {
            None => return self.clone(),
            Some(d) => d,
        };
        let mut p = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut exps = m.exps().to_vec();
            exps[fresh] = deg - m.degree_in(x_idxs);
            p.add_term(Monomial::new(exps), c.clone());
        }
        p
    }

    /// Sets the given variable to 1 (the inverse of [`homogenize`] for the
    /// fresh variable).
    pub fn dehomogenize(&self, fresh: usize) -> Poly {
        self.partial_eval(&[(fresh, BigRational::one())])
    }

    /// Exact division: `Some(q)` with `self = q * d` when `d` divides
    /// `self`, otherwise `None`. Division by zero returns `None`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        self.assert_compatible(d);
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero(&self.vars));
        }
        let (lm, lc) = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.vars);
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(lm)?;
            let qc = rc / lc;
            let t = d.mul_term(&qm, &qc);
            quot.add_term(qm, qc);
            rem = &rem - &t;
        }
        Some(quot)
    }

    /// Multiplies through by the lcm of coefficient denominators, returning
    /// the scaled terms as integer coefficients together with the lcm used.
    pub fn clear_denominators(&self) -> (Vec<(Monomial, BigInt)>, BigInt) {
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let scaled = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.numer() * (&lcm / c.denom())))
            .collect();
        (scaled, lcm)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, other: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_assign(other);
        p
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, other: &Poly) -> Poly {
        self.assert_compatible(other);
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), -c.clone());
        }
        p
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, other: &Poly) -> Poly {
        self.assert_compatible(other);
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                use std::collections::btree_map::Entry;
                match acc.entry(m) {
                    Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { vars: self.vars.clone(), terms: acc }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(self))
    }
}

/// A polynomial in canonical scaled form: integer coefficients with content
/// 1 and a positive leading coefficient under graded lex. Two polynomials
/// that agree up to a nonzero constant factor normalize identically, so
/// equality of `NormalizedPoly` is exactly "equal up to constant factor".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedPoly {
    poly: Poly,
}

impl NormalizedPoly {
    pub fn as_poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// True for the canonical nonzero constant, which is always 1.
    pub fn is_one(&self) -> bool {
        self.poly.is_one()
    }
}

impl fmt::Display for NormalizedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Canonical representative of `p` up to a nonzero constant factor: clears
/// denominators, divides out integer content, and fixes the sign of the
/// leading coefficient to be positive. The zero polynomial maps to zero.
pub fn normalize(p: &Poly) -> NormalizedPoly {
    if p.is_zero() {
        return NormalizedPoly { poly: p.clone() };
    }
    let (scaled, _) = p.clear_denominators();
    let mut content = BigInt::zero();
    for (_, c) in &scaled {
        content = content.gcd(c);
    }
    let leading_neg = scaled
        .iter()
        .max_by(|a, b| a.0.cmp(&b.0))
        .map(|(_, c)| c.is_negative())
        .unwrap_or(false);
    if leading_neg {
        content = -content;
    }
    let terms = scaled
        .into_iter()
        .map(|(m, c)| (m, BigRational::from(c / &content)));
    NormalizedPoly { poly: Poly::from_terms(p.vars(), terms) }
}

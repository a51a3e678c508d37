//! Validated polynomial systems: an ordered x-block, a parameter block, and
//! n forms homogeneous in x.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::printer::format_poly;
use crate::vars::VarSet;

/// Raw parse result: declared blocks plus named expressions, before any
/// structural checks. Produced by [`crate::parse::parse_system`].
#[derive(Debug, Clone)]
pub struct SystemSource {
    pub x_names: Vec<String>,
    pub param_names: Vec<String>,
    /// Fresh variable name from a `homogenize` directive, if present.
    pub homogenize_name: Option<String>,
    /// Named forms over `vars` (x-block followed by parameters).
    pub forms: Vec<(String, Poly)>,
    pub vars: Arc<VarSet>,
}

/// A validated system: n forms, each homogeneous in the x-block with
/// positive x-degree. The variable set is always x-block first, parameters
/// after, so x-indices are `0..n` and parameter indices are `n..n+m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct System {
    vars: Arc<VarSet>,
    n: usize,
    form_names: Vec<String>,
    forms: Vec<Poly>,
    degrees: Vec<u32>,
}

impl System {
    /// Checks a parsed source and produces a [`System`]. If the source has a
    /// homogenize directive, the fresh variable is appended to the x-block
    /// and every form is homogenized with respect to the original x-block
    /// first.
    pub fn validate(src: &SystemSource) -> Result<System> {
        let mut x_names = src.x_names.clone();
        if let Some(fresh) = &src.homogenize_name {
            x_names.push(fresh.clone());
        }
        let vars = VarSet::new(x_names.iter().chain(src.param_names.iter()).cloned())?;
        let n_orig = src.x_names.len();
        let forms: Vec<(String, Poly)> = src
            .forms
            .iter()
            .map(|(name, p)| {
                let mut q = p.embed(&vars);
                if src.homogenize_name.is_some() {
                    let orig_idxs: Vec<usize> = (0..n_orig).collect();
                    q = q.homogenize(&orig_idxs, n_orig);
                }
                (name.clone(), q)
            })
            .collect();
        System::from_parts(vars, x_names.len(), forms)
    }

    /// Programmatic constructor over an already-built variable set whose
    /// first `n` variables form the x-block.
    pub fn from_parts(
        vars: Arc<VarSet>,
        n: usize,
        named_forms: Vec<(String, Poly)>,
    ) -> Result<System> {
        if n == 0 {
            return Err(Error::Validate("the x-block is empty".into()));
        }
        if n > vars.len() {
            return Err(Error::Validate("x-block larger than the variable set".into()));
        }
        if named_forms.len() != n {
            return Err(Error::Validate(format!(
                "expected {} forms for {} x-variables, found {}",
                n,
                n,
                named_forms.len()
            )));
        }
        let x_idxs: Vec<usize> = (0..n).collect();
        let mut form_names = Vec::with_capacity(n);
        let mut forms = Vec::with_capacity(n);
        let mut degrees = Vec::with_capacity(n);
        for (name, f) in named_forms {
            assert!(
                crate::vars::same_vars(f.vars(), &vars),
                "form over a different variable set"
            );
            if f.is_zero() {
                return Err(Error::Validate(format!("form '{}' is identically zero", name)));
            }
            let d = match f.homogeneous_degree_in(&x_idxs) {
                Some(d) => d,
                None => {
                    let (w1, w2) = homogeneity_witnesses(&f, &x_idxs);
                    return Err(Error::Validate(format!(
                        "form '{}' is not homogeneous in the x-block: terms {} and {} have x-degrees {} and {}",
                        name,
                        w1.0,
                        w2.0,
                        w1.1,
                        w2.1
                    )));
                }
            };
            if d == 0 {
                return Err(Error::Validate(format!(
                    "form '{}' has x-degree 0 (it must involve the x-variables)",
                    name
                )));
            }
            form_names.push(name);
            forms.push(f);
            degrees.push(d);
        }
        Ok(System { vars, n, form_names, forms, degrees })
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    /// Size of the x-block (also the number of forms).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parameters.
    pub fn m(&self) -> usize {
        self.vars.len() - self.n
    }

    pub fn x_indices(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    pub fn param_indices(&self) -> Vec<usize> {
        (self.n..self.vars.len()).collect()
    }

    pub fn x_names(&self) -> Vec<String> {
        (0..self.n).map(|i| self.vars.name(i).to_string()).collect()
    }

    pub fn param_names(&self) -> Vec<String> {
        (self.n..self.vars.len()).map(|i| self.vars.name(i).to_string()).collect()
    }

    pub fn forms(&self) -> &[Poly] {
        &self.forms
    }

    pub fn form_names(&self) -> &[String] {
        &self.form_names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Same shape and names, different forms (revalidated).
    pub fn with_forms(&self, forms: Vec<Poly>) -> Result<System> {
        let named = self.form_names.iter().cloned().zip(forms).collect();
        System::from_parts(self.vars.clone(), self.n, named)
    }
}

fn homogeneity_witnesses(f: &Poly, x_idxs: &[usize]) -> ((String, u32), (String, u32)) {
    let mut first: Option<(String, u32)> = None;
    for (m, _) in f.terms() {
        let d = m.degree_in(x_idxs);
        let shown = {
            let single = Poly::from_terms(f.vars(), [(m.clone(), num_rational::BigRational::from_integer(1.into()))]);
            format_poly(&single)
        };
        match &first {
            None => first = Some((shown, d)),
            Some((_, d0)) if *d0 != d => {
                return (first.unwrap(), (shown, d));
            }
            _ => {}
        }
    }
    unreachable!("called only on non-homogeneous polynomials")
}

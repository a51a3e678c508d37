//! Variable sets shared by polynomials.
//!
//! A [`VarSet`] is an ordered list of distinct variable names. Every
//! polynomial holds an `Arc<VarSet>`; ring operations require both operands
//! to share the same set (pointer equality or structural equality), which
//! keeps exponent vectors aligned without any per-term bookkeeping.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of variable names. The position of a name is its index in
/// every exponent vector of a polynomial over this set. Order also fixes the
/// monomial order: in graded lex comparisons the earliest variable is the
/// most significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
}

/// Convenience alias used where the emphasis is on the ordering of the
/// variables rather than the set itself.
pub type VarOrder = VarSet;

impl VarSet {
    /// Builds a variable set, rejecting duplicates and empty names.
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Arc<VarSet>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::Validate("empty variable name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::Validate(format!("duplicate variable '{}'", n)));
            }
        }
        Ok(Arc::new(VarSet { names }))
    }

    /// Panicking constructor for internal and test use with known-good names.
    pub fn of(names: &[&str]) -> Arc<VarSet> {
        VarSet::new(names.iter().copied()).expect("valid variable names")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// New set with the given names appended at the end.
    pub fn extend<S: Into<String>, I: IntoIterator<Item = S>>(&self, extra: I) -> Result<Arc<VarSet>> {
        let mut names = self.names.clone();
        names.extend(extra.into_iter().map(Into::into));
        VarSet::new(names)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(", "))
    }
}

/// True when two polynomials may be combined: either the same allocation or
/// structurally equal sets.
pub fn same_vars(a: &Arc<VarSet>, b: &Arc<VarSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        assert!(VarSet::new(["x", "y", "x"]).is_err());
        assert!(VarSet::new(["x", ""]).is_err());
        assert!(VarSet::new(["x", "y"]).is_ok());
    }

    #[test]
    fn index_lookup() {
        let vs = VarSet::of(&["x1", "x2", "y"]);
        assert_eq!(vs.index_of("x2"), Some(1));
        assert_eq!(vs.index_of("z"), None);
        assert_eq!(vs.len(), 3);
    }

    #[test]
    fn extend_appends() {
        let vs = VarSet::of(&["x", "y"]);
        let ext = vs.extend(["eps"]).unwrap();
        assert_eq!(ext.names(), &["x", "y", "eps"]);
        assert!(vs.extend(["x"]).is_err());
    }
}

//! Exact determinants via Bareiss single-step fraction-free elimination.
//!
//! Works over any integral domain with exact division; instantiated here
//! for polynomial matrices (symbolic Sylvester/Macaulay determinants) and
//! big-integer matrices (numeric sample evaluations). All intermediate
//! divisions are exact by the Bareiss identity; a failed division means a
//! corrupted matrix and panics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::Poly;

/// Determinant of a square polynomial matrix. The empty matrix has
/// determinant 1 (by the usual convention for empty products).
pub fn det_fraction_free(mut m: Vec<Vec<Poly>>, one: &Poly) -> Poly {
    let n = m.len();
    for row in &m {
        assert_eq!(row.len(), n, "matrix is not square");
    }
    if n == 0 {
        return one.clone();
    }
    let zero = Poly::zero(one.vars());
    let mut sign_flip = false;
    let mut prev = one.clone();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Poly::zero(one.vars()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division must be exact over an integral domain");
            }
            m[i][k] = zero.clone();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -&det
    } else {
        det
    }
}

/// Determinant of a square integer matrix (Bareiss, exact).
pub fn det_integer(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    for row in &m {
        assert_eq!(row.len(), n, "matrix is not square");
    }
    if n == 0 {
        return BigInt::one();
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if sign_flip {
        -m[n - 1][n - 1].clone()
    } else {
        m[n - 1][n - 1].clone()
    }
}

/// Determinant of a square rational matrix: rows are scaled to integers
/// (tracking the scale factors), then the integer kernel runs.
pub fn det_rational(m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut scale = BigInt::one();
    let mut int_rows = Vec::with_capacity(n);
    for row in &m {
        assert_eq!(row.len(), n, "matrix is not square");
        let mut lcm = BigInt::one();
        for e in row {
            lcm = lcm.lcm(e.denom());
        }
        int_rows.push(
            row.iter()
                .map(|e| e.numer() * (&lcm / e.denom()))
                .collect::<Vec<BigInt>>(),
        );
        scale *= lcm;
    }
    BigRational::new(det_integer(int_rows), scale)
}

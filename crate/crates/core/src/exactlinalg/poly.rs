//! Univariate polynomials over the rationals, just enough for minimal
//! polynomials and squarefreeness tests.

use num_traits::{One, Zero};

use super::matrix::{RatMatrix, Rational};
use super::subspace::Subspace;
use super::LinalgError;

/// Coefficients from the constant term upwards, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        match self.0.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.recip();
                Poly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    fn rem(&self, divisor: &Poly) -> Poly {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.0[dd].recip();
        let mut r = self.0.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let q = &r[top] * &lead_inv;
            let shift = top - dd;
            for (i, c) in divisor.0.iter().enumerate() {
                r[shift + i] -= &q * c;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Poly(r)
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True iff the polynomial has no repeated irreducible factor.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

/// Monic minimal polynomial of a square matrix, found as the first linear
/// dependency among `I, X, X^2, ...`.
pub fn minimal_polynomial(x: &RatMatrix) -> Result<Poly, LinalgError> {
    if !x.is_square() {
        return Err(LinalgError::NotSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    let n = x.rows();
    let mut powers: Vec<Vec<Rational>> = Vec::new();
    let mut current = RatMatrix::identity(n);
    loop {
        let flat = current.as_flat().to_vec();
        let span = Subspace::span(n * n, powers.clone())?;
        if span.contains_vector(&flat)? {
            let coords = span
                .coordinate_map()
                .coordinates(&flat)
                .expect("vector lies in the span");
            let mut coeffs: Vec<Rational> = coords.into_iter().map(|c| -c).collect();
            coeffs.push(Rational::one());
            return Ok(Poly::new(coeffs));
        }
        powers.push(flat);
        current = current.checked_mul(x)?;
    }
}

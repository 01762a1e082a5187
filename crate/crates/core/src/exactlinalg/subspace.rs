use num_traits::Zero;

use super::matrix::{rref, RatMatrix, Rational};
use super::LinalgError;

/// A linear subspace of `Q^ambient` with an independent basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = Rational::from_integer(1.into());
                v
            })
            .collect();
        Subspace { ambient, basis }
    }

    pub(crate) fn from_independent(ambient: usize, basis: Vec<Vec<Rational>>) -> Self {
        debug_assert!(basis.iter().all(|v| v.len() == ambient));
        Subspace { ambient, basis }
    }

    /// Span of `vectors`, keeping the first maximal independent subset in
    /// the given order so that hand-picked generators survive.
    pub fn span(ambient: usize, vectors: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let mut echelon = Echelon::new(ambient);
        let mut basis = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(LinalgError::AmbientMismatch {
                    left: ambient,
                    right: v.len(),
                });
            }
            if echelon.insert(&v) {
                basis.push(v);
            }
        }
        Ok(Subspace { ambient, basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Basis vectors as the rows of a `dim x ambient` matrix.
    pub fn as_rows(&self) -> RatMatrix {
        RatMatrix::from_flat(
            self.basis.len(),
            self.ambient,
            self.basis.iter().flatten().cloned().collect(),
        )
        .expect("basis vectors share the ambient dimension")
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        self.check_len(v.len())?;
        let mut echelon = Echelon::new(self.ambient);
        for b in &self.basis {
            echelon.insert(b);
        }
        Ok(!echelon.insert(v))
    }

    /// True iff `other` ⊆ `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_len(other.ambient)?;
        let mut echelon = Echelon::new(self.ambient);
        for b in &self.basis {
            echelon.insert(b);
        }
        Ok(other.basis.iter().all(|v| !echelon.insert(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_len(other.ambient)?;
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis).cloned().collect())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_len(other.ambient)?;
        let (a, b) = (self.dim(), other.dim());
        // Solve sum(x_i u_i) = sum(y_j v_j); the intersection is spanned by the x-parts.
        let mut m = RatMatrix::zeros(self.ambient, a + b);
        for (j, u) in self.basis.iter().enumerate() {
            for (i, x) in u.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                m.set(i, a + j, -x.clone());
            }
        }
        let vectors = m.kernel().basis().iter().map(|sol| self.combine(&sol[..a])).collect();
        Subspace::span(self.ambient, vectors)
    }

    /// `sum_i coeffs[i] * basis[i]`.
    pub fn combine(&self, coeffs: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    pub fn coordinate_map(&self) -> CoordinateMap {
        CoordinateMap::new(self)
    }

    fn check_len(&self, len: usize) -> Result<(), LinalgError> {
        if len != self.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: len,
            });
        }
        Ok(())
    }
}

/// Precomputed solver for coordinates with respect to a fixed basis.
#[derive(Clone, Debug)]
pub struct CoordinateMap {
    ambient: usize,
    pivots: Vec<usize>,
    reduced: Vec<Vec<Rational>>,
    transform: Vec<Vec<Rational>>,
}

impl CoordinateMap {
    fn new(space: &Subspace) -> Self {
        let d = space.dim();
        let n = space.ambient;
        let mut rows: Vec<Vec<Rational>> = space
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut row = b.clone();
                row.extend((0..d).map(|j| {
                    if i == j {
                        Rational::from_integer(1.into())
                    } else {
                        Rational::zero()
                    }
                }));
                row
            })
            .collect();
        let pivots = rref(&mut rows, n);
        debug_assert_eq!(pivots.len(), d, "basis must be independent");
        let reduced = rows.iter().map(|r| r[..n].to_vec()).collect();
        let transform = rows.iter().map(|r| r[n..].to_vec()).collect();
        CoordinateMap {
            ambient: n,
            pivots,
            reduced,
            transform,
        }
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient {
            return None;
        }
        let mut residual = v.to_vec();
        for (row, &p) in self.reduced.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r -= &c * x;
                }
            }
        }
        if residual.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let d = self.transform.len();
        let mut coords = vec![Rational::zero(); d];
        for (t, &p) in self.transform.iter().zip(&self.pivots) {
            let c = &v[p];
            if c.is_zero() {
                continue;
            }
            for (out, x) in coords.iter_mut().zip(t) {
                if !x.is_zero() {
                    *out += c * x;
                }
            }
        }
        Some(coords)
    }
}

/// Incremental row echelon form used for independence tests.
struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    fn new(_ambient: usize) -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Reduces `v` against the stored rows; stores and returns true when the
    /// remainder is nonzero.
    fn insert(&mut self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let c = w[*p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = w[p].recip();
                for x in w.iter_mut() {
                    *x *= &inv;
                }
                // Keep stored rows reduced at the new pivot.
                for (_, row) in self.rows.iter_mut() {
                    if row[p].is_zero() {
                        continue;
                    }
                    let c = row[p].clone();
                    for (x, r) in row.iter_mut().zip(&w) {
                        if !r.is_zero() {
                            *x -= &c * r;
                        }
                    }
                }
                self.rows.push((p, w));
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::rat;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn containment_examples() {
        let plane = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let x_axis = Subspace::span(3, vec![v(&[1, 0, 0])]).unwrap();
        let y_axis = Subspace::span(3, vec![v(&[0, 1, 0])]).unwrap();
        assert!(plane.contains(&x_axis).unwrap());
        assert!(!x_axis.contains(&y_axis).unwrap());
        assert!(plane.contains(&plane).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(3);
        let b = Subspace::full(2);
        assert!(matches!(
            a.contains(&b),
            Err(LinalgError::AmbientMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn span_drops_dependent_vectors() {
        let s = Subspace::span(3, vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.basis()[0], v(&[1, 2, 3]));
    }

    #[test]
    fn intersection_of_planes_is_a_line() {
        let xy = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let yz = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let line = xy.intersect(&yz).unwrap();
        assert_eq!(line.dim(), 1);
        assert!(line.contains_vector(&v(&[0, 5, 0])).unwrap());
    }

    #[test]
    fn coordinates_round_trip() {
        let s = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let map = s.coordinate_map();
        let target = v(&[2, 5, 3]);
        let c = map.coordinates(&target).unwrap();
        assert_eq!(c, v(&[2, 3]));
        assert_eq!(s.combine(&c), target);
        assert!(map.coordinates(&v(&[1, 0, 0])).is_none());
    }
}

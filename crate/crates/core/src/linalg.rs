//! Dense exact linear algebra: subspaces in reduced row echelon form.

use crate::error::{Error, Result};
use crate::field::{Field, FieldScalar};

/// A subspace of `field^dim`, stored as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    dim: usize,
    rows: Vec<Vec<FieldScalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, dim: usize) -> Subspace {
        Subspace { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Row-reduces `vectors` into a basis of their span.
    pub fn row_reduce(field: Field, dim: usize, vectors: &[Vec<FieldScalar>]) -> Result<Subspace> {
        let mut s = Subspace::zero(field, dim);
        for v in vectors {
            s.insert(v.clone())?;
        }
        Ok(s)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<FieldScalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, v: &[FieldScalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        if let Some(bad) = v.iter().find(|x| x.field() != self.field) {
            return Err(Error::FieldMismatch { left: self.field, right: bad.field() });
        }
        Ok(())
    }

    /// Residue of `v` after eliminating every pivot column.
    fn reduce(&self, mut v: Vec<FieldScalar>) -> Vec<FieldScalar> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = &*x - &(&c * r);
                    }
                }
            }
        }
        v
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<FieldScalar>) -> Result<bool> {
        self.check(&v)?;
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = v[p].inv()?;
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !r.is_zero() {
                        *x = &*x - &(&c * r);
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        Ok(true)
    }

    pub fn contains(&self, v: &[FieldScalar]) -> Result<bool> {
        self.check(v)?;
        Ok(self.reduce(v.to_vec()).iter().all(|x| x.is_zero()))
    }

    /// Intersection by the Zassenhaus construction: reduce `[s | s]` for
    /// `s ∈ self` together with `[t | 0]` for `t ∈ other`; rows whose left
    /// half vanishes span the intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field, right: other.field });
        }
        let n = self.dim;
        let zero = self.field.zero();
        let mut big = Subspace::zero(self.field, 2 * n);
        for r in &self.rows {
            let mut v = r.clone();
            v.extend(r.iter().cloned());
            big.insert(v)?;
        }
        for r in &other.rows {
            let mut v = r.clone();
            v.extend(std::iter::repeat_n(zero.clone(), n));
            big.insert(v)?;
        }
        let mut out = Subspace::zero(self.field, n);
        for (row, &p) in big.rows.iter().zip(&big.pivots) {
            if p >= n {
                out.insert(row[n..].to_vec())?;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<FieldScalar> {
        v.iter().map(|&x| FieldScalar::from_int(Field::Rational, x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Subspace::row_reduce(Field::Rational, 2, &[q(&[1, 0]), q(&[0, 1])]).unwrap().rank(), 2);
        assert_eq!(Subspace::row_reduce(Field::Rational, 2, &[q(&[1, 1]), q(&[2, 2])]).unwrap().rank(), 1);
        assert_eq!(Subspace::row_reduce(Field::Rational, 2, &[]).unwrap().rank(), 0);
    }

    #[test]
    fn dimension_mismatch() {
        let r = Subspace::row_reduce(Field::Rational, 2, &[q(&[1, 0, 0])]);
        assert_eq!(r, Err(Error::DimensionMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn membership_and_intersection() {
        let s = Subspace::row_reduce(Field::Rational, 2, &[q(&[1, 0])]).unwrap();
        let t = Subspace::row_reduce(Field::Rational, 2, &[q(&[0, 1])]).unwrap();
        assert!(s.contains(&q(&[2, 0])).unwrap());
        assert!(!s.contains(&q(&[1, 1])).unwrap());
        assert_eq!(s.intersect(&t).unwrap().rank(), 0);
        assert_eq!(s.intersect(&s).unwrap(), s);
    }

    #[test]
    fn intersection_of_planes() {
        let s = Subspace::row_reduce(Field::Rational, 3, &[q(&[1, 0, 0]), q(&[0, 1, 0])]).unwrap();
        let t = Subspace::row_reduce(Field::Rational, 3, &[q(&[1, 1, 1]), q(&[0, 1, 0])]).unwrap();
        let i = s.intersect(&t).unwrap();
        assert_eq!(i.rank(), 1);
        assert!(i.contains(&q(&[0, 1, 0])).unwrap());
    }

    #[test]
    fn reducing_a_basis_is_idempotent() {
        let s = Subspace::row_reduce(Field::Rational, 3, &[q(&[2, 4, 1]), q(&[1, 1, 1])]).unwrap();
        let again = Subspace::row_reduce(Field::Rational, 3, s.rows()).unwrap();
        assert_eq!(s, again);
    }
}

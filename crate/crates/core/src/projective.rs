//! Points, covectors and maps of the projective sphere `Sⁿ`, all modulo positive scaling.
//!
//! Canonical representatives divide by the absolute value of the first nonzero
//! coordinate and never negate, so `[x]` and `[−x]` stay distinct.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::numfield::{FieldScalar, TimeParam};

fn canonicalize(v: &[FieldScalar]) -> Result<Vec<FieldScalar>> {
    let lead = v.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
    if lead.is_one() {
        return Ok(v.to_vec());
    }
    let inv = lead.abs().inv()?;
    Ok(v.iter().map(|x| x * &inv).collect())
}

fn dot(a: &[FieldScalar], b: &[FieldScalar]) -> FieldScalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(FieldScalar::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// A point `[x] ∈ Sⁿ`, stored as its canonical representative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: Vec<FieldScalar>,
}

impl ProjPoint {
    pub fn new(coords: Vec<FieldScalar>) -> Result<Self> {
        Ok(ProjPoint { coords: canonicalize(&coords)? })
    }

    /// Point `[1 : y₁ : … : yₙ]` of the affine chart.
    pub fn from_affine(y: &[FieldScalar]) -> Self {
        let mut coords = Vec::with_capacity(y.len() + 1);
        coords.push(FieldScalar::one());
        coords.extend_from_slice(y);
        ProjPoint { coords }
    }

    pub fn coords(&self) -> &[FieldScalar] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn antipode(&self) -> Self {
        ProjPoint { coords: self.coords.iter().map(|x| -x).collect() }
    }

    /// Affine coordinates `(x₁/x₀, …, xₙ/x₀)`.
    pub fn to_affine(&self) -> Result<AffineImage> {
        match self.coords[0].signum() {
            1 => {
                let inv = self.coords[0].inv()?;
                Ok(AffineImage::Point(self.coords[1..].iter().map(|x| x * &inv).collect()))
            }
            0 => Ok(AffineImage::AtInfinity),
            _ => Err(Error::WrongChart),
        }
    }
}

/// Result of [`ProjPoint::to_affine`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineImage {
    Point(Vec<FieldScalar>),
    AtInfinity,
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(" : "))
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ProjPoint", 2)?;
        st.serialize_field("coords", &self.coords)?;
        st.serialize_field("dim", &self.dim())?;
        st.end()
    }
}

#[derive(Deserialize)]
struct ProjPointRepr {
    coords: Vec<FieldScalar>,
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ProjPointRepr::deserialize(deserializer)?;
        ProjPoint::new(repr.coords).map_err(serde::de::Error::custom)
    }
}

/// A covector `α` with half-space `{[x] : α(x) ≤ 0}`.
///
/// The given representative is kept so that bilinear-form values match the
/// tables they come from; equality and hashing use the canonical one.
#[derive(Clone)]
pub struct Covector {
    coeffs: Vec<FieldScalar>,
}

impl Covector {
    pub fn new(coeffs: Vec<FieldScalar>) -> Result<Self> {
        if coeffs.iter().all(FieldScalar::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(Covector { coeffs })
    }

    pub fn coeffs(&self) -> &[FieldScalar] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn canonical(&self) -> Vec<FieldScalar> {
        canonicalize(&self.coeffs).expect("nonzero covector")
    }

    /// `α(x)` on a representative.
    pub fn eval(&self, x: &[FieldScalar]) -> FieldScalar {
        dot(&self.coeffs, x)
    }

    /// Sign of `α` at a point: `≤ 0` means the point lies in the half-space.
    pub fn side(&self, p: &ProjPoint) -> i8 {
        self.eval(p.coords()).signum()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.side(p) <= 0
    }

    /// The opposite half-space.
    pub fn flip(&self) -> Self {
        Covector { coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }
}

impl PartialEq for Covector {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.len() == other.coeffs.len() && self.canonical() == other.canonical()
    }
}

impl Eq for Covector {}

impl Hash for Covector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Debug for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

impl Serialize for Covector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Covector", 2)?;
        st.serialize_field("coords", &self.coeffs)?;
        st.serialize_field("dim", &self.dim())?;
        st.end()
    }
}

/// An invertible linear map modulo positive scalars.
///
/// The given matrix is kept (reflections stay exact involutions); equality
/// compares canonical representatives.
#[derive(Clone)]
pub struct ProjMap {
    matrix: Matrix<FieldScalar>,
}

impl ProjMap {
    pub fn new(matrix: Matrix<FieldScalar>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        if matrix.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(ProjMap { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        ProjMap { matrix: Matrix::identity(dim + 1) }
    }

    /// `[diag(−1, …, −1)]`.
    pub fn antipodal(dim: usize) -> Self {
        ProjMap { matrix: Matrix::identity(dim + 1).neg() }
    }

    /// `r_{|t|} = [diag(1, …, 1, 1/|t|)]`.
    pub fn rescale(t: &TimeParam, dim: usize) -> Result<Self> {
        if t.is_zero() {
            return Err(Error::DegenerateRescale);
        }
        let mut d = vec![FieldScalar::one(); dim + 1];
        d[dim] = t.abs().inv()?;
        Ok(ProjMap { matrix: Matrix::diag(d) })
    }

    /// Permutation of coordinates: output coordinate `i` is input coordinate `perm[i]`,
    /// multiplied by `signs[i]`.
    pub fn signed_permutation(perm: &[usize], signs: &[i64]) -> Result<Self> {
        let n = perm.len();
        let mut m = Matrix::zeros(n, n);
        for (i, (&p, &s)) in perm.iter().zip(signs).enumerate() {
            m.set(i, p, FieldScalar::from_int(s));
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &Matrix<FieldScalar> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows() - 1
    }

    pub fn canonical(&self) -> Matrix<FieldScalar> {
        let data = canonicalize(self.matrix.entries()).expect("nonsingular matrix");
        Matrix::new(self.matrix.rows(), self.matrix.cols(), data)
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &ProjMap) -> ProjMap {
        ProjMap { matrix: self.matrix.mul(&rhs.matrix) }
    }

    pub fn inverse(&self) -> ProjMap {
        ProjMap { matrix: self.matrix.inverse().expect("invertible by construction") }
    }

    pub fn apply_point(&self, p: &ProjPoint) -> Result<ProjPoint> {
        if p.coords().len() != self.matrix.cols() {
            return Err(Error::DimensionMismatch { expected: self.matrix.cols(), found: p.coords().len() });
        }
        ProjPoint::new(self.matrix.mul_vec(p.coords()))
    }

    /// Covector of the image half-space `A(ℓH)`, namely `α ∘ A⁻¹`.
    pub fn pushforward_halfspace(&self, h: &Covector) -> Result<Covector> {
        if h.coeffs().len() != self.matrix.rows() {
            return Err(Error::DimensionMismatch { expected: self.matrix.rows(), found: h.coeffs().len() });
        }
        Covector::new(self.inverse().matrix.vec_mul(h.coeffs()))
    }

    pub fn is_identity(&self) -> bool {
        self.canonical().is_identity()
    }
}

impl PartialEq for ProjMap {
    fn eq(&self, other: &Self) -> bool {
        self.matrix.rows() == other.matrix.rows() && self.canonical() == other.canonical()
    }
}

impl Eq for ProjMap {}

impl Hash for ProjMap {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Debug for ProjMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjMap{:?}", self.matrix)
    }
}

impl Serialize for ProjMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.matrix.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<FieldScalar> {
        xs.iter().map(|&x| FieldScalar::from_int(x)).collect()
    }

    #[test]
    fn canonical_keeps_sign() {
        let p = ProjPoint::new(v(&[-2, 4, 0])).unwrap();
        assert_eq!(p.coords(), &v(&[-1, 2, 0])[..]);
        assert_ne!(p, p.antipode());
    }

    #[test]
    fn apply_examples() {
        let r_l = ProjMap::signed_permutation(&[0, 2, 1, 3, 4], &[1; 5]).unwrap();
        let p = ProjPoint::new(v(&[1, 2, 3, 0, 0])).unwrap();
        assert_eq!(r_l.apply_point(&p).unwrap(), ProjPoint::new(v(&[1, 3, 2, 0, 0])).unwrap());
        let e0 = ProjPoint::new(v(&[1, 0, 0, 0, 0])).unwrap();
        let image = ProjMap::antipodal(4).apply_point(&e0).unwrap();
        assert_eq!(image.coords(), &v(&[-1, 0, 0, 0, 0])[..]);
        assert_ne!(image, e0);
    }

    #[test]
    fn rescale_examples() {
        assert!(ProjMap::rescale(&TimeParam::one(), 4).unwrap().is_identity());
        let expected = ProjMap::new(Matrix::diag(v(&[1, 1, 1, 1, 2]))).unwrap();
        assert_eq!(ProjMap::rescale(&TimeParam::ratio(1, 2), 4).unwrap(), expected);
        assert_eq!(ProjMap::rescale(&TimeParam::ratio(-1, 2), 4).unwrap(), expected);
        assert_eq!(ProjMap::rescale(&TimeParam::zero(), 4), Err(Error::DegenerateRescale));
    }

    #[test]
    fn affine_examples() {
        assert_eq!(ProjPoint::new(v(&[1, 0, 0, 0, 0])).unwrap().to_affine().unwrap(), AffineImage::Point(v(&[0, 0, 0, 0])));
        assert_eq!(ProjPoint::new(v(&[0, 0, 0, 0, 1])).unwrap().to_affine().unwrap(), AffineImage::AtInfinity);
        assert_eq!(ProjPoint::new(v(&[-1, 0, 0, 0, 0])).unwrap().to_affine(), Err(Error::WrongChart));
    }
}

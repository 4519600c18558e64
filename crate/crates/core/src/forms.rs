//! The parametric forms `q_t = −x₀² + x₁² + … + t|t|·xₙ²`, domain membership,
//! causal types of hyperplanes, and angle data.
//!
//! Covectors pair through the dual form `J_t⁻¹`. Because the rescaling
//! `r_{|t|}` conjugates `J_t` to `J_{±1}`, the dual-form values of a rescaled
//! covector equal the `q_{±1}` values of the original one, so the sign rules
//! below apply uniformly to unrescaled tables at `t = ±1` and to rescaled
//! tables at any `t ≠ 0`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::numfield::{Branch, FieldScalar, TimeParam};
use crate::projective::{Covector, ProjPoint};

/// Geometry selected by the sign of `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Regime {
    Hyperbolic,
    AntiDeSitter,
    HalfPipe,
}

/// The form of `X_tⁿ` in dimension `n` (matrices are `(n+1)×(n+1)`).
///
/// Stored by its last diagonal entry `s = t|t|`, so the model forms at `t = ±1` are included.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamForm {
    dim: usize,
    s: FieldScalar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PointClass {
    Interior,
    Boundary,
    Exterior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum HyperplaneType {
    Spacelike,
    Timelike,
    Lightlike,
    Degenerate,
    NonIntersecting,
}

/// How two hyperplanes meet, according to the regime's transversality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Intersection {
    /// Transverse intersection of two spacelike hyperplanes.
    Transverse,
    /// The test fails: the hyperplanes are disjoint or tangent at infinity.
    NotTransverse,
    /// Two timelike hyperplanes meeting in a spacelike subspace.
    SpacelikeMeet,
    /// Two timelike hyperplanes meeting in a timelike subspace.
    TimelikeMeet,
    /// Equality case of a timelike pair.
    LightlikeMeet,
    /// One spacelike and one timelike hyperplane.
    Mixed,
}

/// Bilinear data of a pair of covectors; angles are never taken in floating point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AngleData {
    pub b: FieldScalar,
    pub qa: FieldScalar,
    pub qb: FieldScalar,
    /// `−b/√(qa·qb)` (hyperbolic) or `|b|/√(qa·qb)` (AdS), when the root lies in the field.
    pub cosine: Option<FieldScalar>,
    pub b_sign: i8,
    pub intersection: Intersection,
}

impl ParamForm {
    pub fn new(dim: usize, t: &TimeParam) -> Self {
        ParamForm { dim, s: t.t_abs_t() }
    }

    /// Form with last diagonal entry `s`.
    pub fn from_last(dim: usize, s: FieldScalar) -> Self {
        ParamForm { dim, s }
    }

    /// `q₁`.
    pub fn hyperbolic(dim: usize) -> Self {
        Self::from_last(dim, FieldScalar::one())
    }

    /// `q₋₁`.
    pub fn anti_de_sitter(dim: usize) -> Self {
        Self::from_last(dim, FieldScalar::from_int(-1))
    }

    /// `q₀`.
    pub fn half_pipe(dim: usize) -> Self {
        Self::from_last(dim, FieldScalar::zero())
    }

    /// Model form `q_{sign t}` of the regime containing `t`; pairs with unrescaled covectors.
    pub fn model(dim: usize, t: &TimeParam) -> Self {
        match t.branch() {
            Branch::Positive => Self::hyperbolic(dim),
            Branch::Negative => Self::anti_de_sitter(dim),
            Branch::Zero => Self::half_pipe(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Last diagonal entry `t|t|`.
    pub fn last(&self) -> &FieldScalar {
        &self.s
    }

    pub fn regime(&self) -> Regime {
        match self.s.signum() {
            1 => Regime::Hyperbolic,
            -1 => Regime::AntiDeSitter,
            _ => Regime::HalfPipe,
        }
    }

    /// Diagonal of `J_t`.
    pub fn diag(&self) -> Vec<FieldScalar> {
        let mut d = vec![FieldScalar::one(); self.dim + 1];
        d[0] = FieldScalar::from_int(-1);
        d[self.dim] = self.s.clone();
        d
    }

    pub fn matrix(&self) -> Matrix<FieldScalar> {
        Matrix::diag(self.diag())
    }

    /// Diagonal of `J_t⁻¹`; `None` in the half-pipe regime.
    pub fn dual_diag(&self) -> Option<Vec<FieldScalar>> {
        let d = self.diag();
        d.iter().map(|x| x.inv().ok()).collect()
    }

    pub fn q(&self, x: &[FieldScalar]) -> FieldScalar {
        self.b(x, x)
    }

    pub fn b(&self, x: &[FieldScalar], y: &[FieldScalar]) -> FieldScalar {
        weighted(&self.diag(), x, y)
    }

    /// Dual pairing `αᵀJ_t⁻¹α′`; fails in the half-pipe regime.
    pub fn dual_b(&self, a: &[FieldScalar], b: &[FieldScalar]) -> Result<FieldScalar> {
        let d = self.dual_diag().ok_or(Error::DivByZero)?;
        Ok(weighted(&d, a, b))
    }

    pub fn dual_q(&self, a: &[FieldScalar]) -> Result<FieldScalar> {
        self.dual_b(a, a)
    }

    pub fn classify_point(&self, p: &ProjPoint) -> PointClass {
        let q = self.q(p.coords()).signum();
        let x0 = p.coords()[0].signum();
        match self.regime() {
            Regime::AntiDeSitter => match q {
                -1 => PointClass::Interior,
                0 => PointClass::Boundary,
                _ => PointClass::Exterior,
            },
            Regime::Hyperbolic | Regime::HalfPipe => match (q, x0) {
                (-1, 1) => PointClass::Interior,
                (0, 0..=1) => PointClass::Boundary,
                _ => PointClass::Exterior,
            },
        }
    }

    pub fn classify_hyperplane(&self, h: &Covector) -> HyperplaneType {
        let a = h.coeffs();
        match self.regime() {
            Regime::Hyperbolic => match self.dual_q(a).expect("nondegenerate").signum() {
                1 => HyperplaneType::Spacelike,
                0 => HyperplaneType::Lightlike,
                _ => HyperplaneType::NonIntersecting,
            },
            Regime::AntiDeSitter => match self.dual_q(a).expect("nondegenerate").signum() {
                -1 => HyperplaneType::Spacelike,
                1 => HyperplaneType::Timelike,
                _ => HyperplaneType::Lightlike,
            },
            Regime::HalfPipe => {
                if !a[self.dim].is_zero() {
                    HyperplaneType::Spacelike
                } else if hat_q(&a[..self.dim]).is_positive() {
                    HyperplaneType::Degenerate
                } else {
                    HyperplaneType::NonIntersecting
                }
            }
        }
    }

    /// Angle data of two hyperplanes in the hyperbolic or AdS regime.
    pub fn angle_between(&self, h1: &Covector, h2: &Covector) -> Result<AngleData> {
        if self.regime() == Regime::HalfPipe {
            return Err(Error::OutsideDomain);
        }
        let (a, c) = (h1.coeffs(), h2.coeffs());
        let b = self.dual_b(a, c)?;
        let qa = self.dual_q(a)?;
        let qb = self.dual_q(c)?;
        let prod = &qa * &qb;
        let b2 = &b * &b;
        let cmp = b2.cmp_value(&prod);
        let root = prod.abs().sqrt()?.filter(|r| !r.is_zero());
        let b_sign = b.signum();
        match self.regime() {
            Regime::Hyperbolic => {
                if !qa.is_positive() || !qb.is_positive() {
                    return Err(Error::OutsideDomain);
                }
                let intersection = if cmp.is_lt() { Intersection::Transverse } else { Intersection::NotTransverse };
                let cosine = root.map(|r| (-&b).checked_div(&r).expect("nonzero root"));
                Ok(AngleData { b, qa, qb, cosine, b_sign, intersection })
            }
            _ => {
                let (sa, sb) = (qa.signum(), qb.signum());
                let intersection = match (sa, sb) {
                    (-1, -1) => {
                        if cmp.is_gt() {
                            Intersection::Transverse
                        } else {
                            Intersection::NotTransverse
                        }
                    }
                    (1, 1) => match cmp {
                        std::cmp::Ordering::Greater => Intersection::SpacelikeMeet,
                        std::cmp::Ordering::Less => Intersection::TimelikeMeet,
                        std::cmp::Ordering::Equal => Intersection::LightlikeMeet,
                    },
                    (0, _) | (_, 0) => return Err(Error::LightlikeMirror),
                    _ => Intersection::Mixed,
                };
                let cosine = root.map(|r| b.abs().checked_div(&r).expect("nonzero root"));
                Ok(AngleData { b, qa, qb, cosine, b_sign, intersection })
            }
        }
    }
}

fn weighted(d: &[FieldScalar], x: &[FieldScalar], y: &[FieldScalar]) -> FieldScalar {
    assert_eq!(x.len(), y.len(), "form arguments of equal length");
    d.iter()
        .zip(x.iter().zip(y))
        .filter(|(_, (a, b))| !a.is_zero() && !b.is_zero())
        .fold(FieldScalar::zero(), |acc, (w, (a, b))| &acc + &(&(a * b) * w))
}

/// Diagonal of the hatted Minkowski form `q̂ = diag(−1, 1, …, 1)` of the given size.
pub fn hat_diag(n: usize) -> Vec<FieldScalar> {
    let mut d = vec![FieldScalar::one(); n];
    d[0] = FieldScalar::from_int(-1);
    d
}

pub fn hat_matrix(n: usize) -> Matrix<FieldScalar> {
    Matrix::diag(hat_diag(n))
}

pub fn hat_b(x: &[FieldScalar], y: &[FieldScalar]) -> FieldScalar {
    weighted(&hat_diag(x.len()), x, y)
}

pub fn hat_q(x: &[FieldScalar]) -> FieldScalar {
    hat_b(x, x)
}

/// Squared half-pipe angle `ψ² = q̂(α̂ − α̂′)` after normalizing both last coordinates to 1.
pub fn hp_angle_sq(h1: &Covector, h2: &Covector) -> Result<FieldScalar> {
    let n = h1.dim();
    if h2.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: h2.dim() });
    }
    let normalize = |h: &Covector| -> Result<Vec<FieldScalar>> {
        let last = &h.coeffs()[n];
        if last.is_zero() {
            return Err(Error::OutsideDomain);
        }
        let inv = last.inv()?;
        Ok(h.coeffs()[..n].iter().map(|x| x * &inv).collect())
    };
    let a = normalize(h1)?;
    let c = normalize(h2)?;
    let diff: Vec<FieldScalar> = a.iter().zip(&c).map(|(x, y)| x - y).collect();
    if diff.iter().all(FieldScalar::is_zero) {
        return Ok(FieldScalar::zero());
    }
    let q = hat_q(&diff);
    if !q.is_positive() {
        return Err(Error::NoTransverseIntersection);
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(s: &str) -> FieldScalar {
        s.parse().unwrap()
    }

    fn cov(xs: &[&str]) -> Covector {
        Covector::new(xs.iter().map(|s| fs(s)).collect()).unwrap()
    }

    fn pt(xs: &[&str]) -> ProjPoint {
        ProjPoint::new(xs.iter().map(|s| fs(s)).collect()).unwrap()
    }

    #[test]
    fn point_classes() {
        let f = ParamForm::new(4, &TimeParam::ratio(1, 2));
        assert_eq!(f.classify_point(&pt(&["1", "0", "0", "0", "0"])), PointClass::Interior);
        assert_eq!(f.classify_point(&pt(&["2", "sqrt2", "sqrt2", "0", "0"])), PointClass::Boundary);
        let g = ParamForm::new(4, &TimeParam::ratio(-1, 2));
        assert_eq!(g.classify_point(&pt(&["0", "0", "0", "0", "1"])), PointClass::Interior);
    }

    #[test]
    fn hyperplane_types() {
        let ads = ParamForm::anti_de_sitter(4);
        assert_eq!(ads.classify_hyperplane(&cov(&["-1/2*sqrt2", "1/2", "1/2", "1/2", "1"])), HyperplaneType::Spacelike);
        assert_eq!(ads.classify_hyperplane(&cov(&["-1*sqrt2", "1", "1", "1", "1/2"])), HyperplaneType::Timelike);
        let hp = ParamForm::half_pipe(4);
        assert_eq!(hp.classify_hyperplane(&cov(&["-1*sqrt2", "1", "1", "1", "0"])), HyperplaneType::Degenerate);
    }

    #[test]
    fn angle_examples() {
        let hyp = ParamForm::hyperbolic(4);
        let p0 = cov(&["-1/2*sqrt2", "1/2", "1/2", "1/2", "1"]);
        let p2 = cov(&["-1/2*sqrt2", "1/2", "-1/2", "-1/2", "1"]);
        let a = hyp.angle_between(&p0, &p2).unwrap();
        assert_eq!(a.b, FieldScalar::from_ratio(1, 4));
        assert_eq!(a.qa, FieldScalar::from_ratio(5, 4));
        assert_eq!(a.cosine, Some(FieldScalar::from_ratio(-1, 5)));
        assert_eq!(a.intersection, Intersection::Transverse);
        let m1 = cov(&["-1*sqrt2", "1", "-1", "1", "1/2"]);
        assert!(hyp.angle_between(&p0, &m1).unwrap().b.is_zero());

        let ads = ParamForm::anti_de_sitter(4);
        let a = ads.angle_between(&p0, &p2).unwrap();
        assert_eq!(a.cosine, Some(FieldScalar::from_ratio(7, 3)));
        assert_eq!(a.b_sign, -1);
        assert_eq!(a.intersection, Intersection::Transverse);
    }

    #[test]
    fn hp_angles() {
        let p1 = cov(&["-1*sqrt2", "1", "-1", "1", "-1"]);
        let p3 = cov(&["-1*sqrt2", "1", "1", "-1", "-1"]);
        assert_eq!(hp_angle_sq(&p1, &p3).unwrap(), FieldScalar::from_int(8));
        assert_eq!(hp_angle_sq(&p1, &p1).unwrap(), FieldScalar::zero());
    }
}

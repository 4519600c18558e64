use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::ParamForm;
use crate::linalg::Matrix;
use crate::numfield::{FieldScalar, TimeParam};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EmbeddingKind {
    /// `η_t(y₂, …, yₙ) = (f + 1, f, y₂, …, yₙ)` with `f = ½(y₂² + … + t|t|yₙ²)`.
    Eta,
    /// The upper half-space parameterization `(y₁, …, yₙ)`, `y₁ > 0`.
    Zeta,
}

/// A horosphere or upper half-space parameterization of the model of dimension `dim`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HorosphereEmbedding {
    pub kind: EmbeddingKind,
    pub t: TimeParam,
    pub dim: usize,
}

/// Value and gradient of a function of the chart coordinates.
#[derive(Debug, Clone)]
struct Jet {
    val: FieldScalar,
    grad: Vec<FieldScalar>,
}

impl Jet {
    fn constant(c: FieldScalar, k: usize) -> Self {
        Jet { val: c, grad: vec![FieldScalar::zero(); k] }
    }

    fn var(c: FieldScalar, i: usize, k: usize) -> Self {
        let mut grad = vec![FieldScalar::zero(); k];
        grad[i] = FieldScalar::one();
        Jet { val: c, grad }
    }

    fn add(&self, o: &Jet) -> Jet {
        Jet { val: self.val.add_ref(&o.val), grad: self.grad.iter().zip(&o.grad).map(|(a, b)| a.add_ref(b)).collect() }
    }

    fn sub(&self, o: &Jet) -> Jet {
        Jet { val: self.val.sub_ref(&o.val), grad: self.grad.iter().zip(&o.grad).map(|(a, b)| a.sub_ref(b)).collect() }
    }

    fn mul(&self, o: &Jet) -> Jet {
        Jet {
            val: self.val.mul_ref(&o.val),
            grad: self.grad.iter().zip(&o.grad).map(|(a, b)| a.mul_ref(&o.val).add_ref(&self.val.mul_ref(b))).collect(),
        }
    }

    fn scale(&self, c: &FieldScalar) -> Jet {
        Jet { val: self.val.mul_ref(c), grad: self.grad.iter().map(|a| a.mul_ref(c)).collect() }
    }

    fn recip(&self) -> Result<Jet> {
        let inv = self.val.inv()?;
        let d = inv.mul_ref(&inv).neg_ref();
        Ok(Jet { val: inv, grad: self.grad.iter().map(|a| a.mul_ref(&d)).collect() })
    }
}

impl HorosphereEmbedding {
    pub fn new(kind: EmbeddingKind, t: TimeParam, dim: usize) -> Self {
        HorosphereEmbedding { kind, t, dim }
    }

    /// Number of chart coordinates: `n − 1` for `η`, `n` for `ζ`.
    pub fn chart_dim(&self) -> usize {
        match self.kind {
            EmbeddingKind::Eta => self.dim - 1,
            EmbeddingKind::Zeta => self.dim,
        }
    }

    fn eta_jets(&self, y: &[Jet]) -> Vec<Jet> {
        let k = y.first().map_or(0, |j| j.grad.len());
        let s = self.t.t_abs_t();
        let last = y.len() - 1;
        let mut f = Jet::constant(FieldScalar::zero(), k);
        for (i, yi) in y.iter().enumerate() {
            let sq = yi.mul(yi);
            f = f.add(&if i == last { sq.scale(&s) } else { sq });
        }
        let f = f.scale(&FieldScalar::from_ratio(1, 2));
        let mut out = vec![f.add(&Jet::constant(FieldScalar::one(), k)), f];
        out.extend(y.iter().cloned());
        out
    }

    fn jets(&self, y: &[FieldScalar]) -> Result<Vec<Jet>> {
        let k = self.chart_dim();
        if y.len() != k {
            return Err(Error::DimensionMismatch { expected: k, found: y.len() });
        }
        let vars: Vec<Jet> = y.iter().enumerate().map(|(i, c)| Jet::var(c.clone(), i, k)).collect();
        match self.kind {
            EmbeddingKind::Eta => Ok(self.eta_jets(&vars)),
            EmbeddingKind::Zeta => {
                if !y[0].is_positive() {
                    return Err(Error::OutOfChart);
                }
                let inv = vars[0].recip()?;
                let scaled: Vec<Jet> = vars[1..].iter().map(|v| v.mul(&inv)).collect();
                let e = self.eta_jets(&scaled);
                let half = FieldScalar::from_ratio(1, 2);
                let c = vars[0].add(&inv).scale(&half);
                let s = vars[0].sub(&inv).scale(&half);
                let mut out = vec![c.mul(&e[0]).add(&s.mul(&e[1])), s.mul(&e[0]).add(&c.mul(&e[1]))];
                out.extend(e[2..].iter().cloned());
                Ok(out)
            }
        }
    }

    /// The image point in `ℝⁿ⁺¹`.
    pub fn eval(&self, y: &[FieldScalar]) -> Result<Vec<FieldScalar>> {
        Ok(self.jets(y)?.into_iter().map(|j| j.val).collect())
    }

    /// `q_t` of the image point; `−1` on the whole chart.
    pub fn q_image(&self, y: &[FieldScalar]) -> Result<FieldScalar> {
        Ok(ParamForm::new(self.dim, &self.t).q(&self.eval(y)?))
    }

    /// The closed form `diag(1, …, 1, t|t|)`, divided by `y₁²` for `ζ`.
    pub fn expected_pullback(&self, y: &[FieldScalar]) -> Result<Matrix<FieldScalar>> {
        let k = self.chart_dim();
        let mut d = vec![FieldScalar::one(); k];
        d[k - 1] = self.t.t_abs_t();
        if self.kind == EmbeddingKind::Zeta {
            if !y[0].is_positive() {
                return Err(Error::OutOfChart);
            }
            let w = y[0].mul_ref(&y[0]).inv()?;
            d = d.iter().map(|x| x.mul_ref(&w)).collect();
        }
        Ok(Matrix::diag(d))
    }
}

/// Gram matrix `(Dψ)ᵀ B_t (Dψ)` of the differential at `y`, by exact forward differentiation.
pub fn pullback_metric_at(emb: &HorosphereEmbedding, y: &[FieldScalar]) -> Result<Matrix<FieldScalar>> {
    let jets = emb.jets(y)?;
    let k = emb.chart_dim();
    let rows: Vec<Vec<FieldScalar>> = jets.iter().map(|j| j.grad.clone()).collect();
    let d = Matrix::from_rows(rows);
    let b = ParamForm::new(emb.dim, &emb.t).matrix();
    let g = d.transpose().mul(&b).mul(&d);
    debug_assert_eq!(g.rows(), k);
    Ok(g)
}

/// The boost-like block of the upper half-space map at `y₁`, an isometry of every `q_t`.
pub fn translation_matrix(y1: &FieldScalar, dim: usize) -> Result<Matrix<FieldScalar>> {
    let inv = y1.inv()?;
    let half = FieldScalar::from_ratio(1, 2);
    let c = y1.add_ref(&inv).mul_ref(&half);
    let s = y1.sub_ref(&inv).mul_ref(&half);
    let mut m = Matrix::identity(dim + 1);
    m.set(0, 0, c.clone());
    m.set(1, 1, c);
    m.set(0, 1, s.clone());
    m.set(1, 0, s);
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldScalar {
        FieldScalar::from_ratio(n, d)
    }

    #[test]
    fn eta_pullback() {
        let e = HorosphereEmbedding::new(EmbeddingKind::Eta, TimeParam::ratio(1, 2), 4);
        let y = vec![FieldScalar::zero(); 3];
        assert_eq!(pullback_metric_at(&e, &y).unwrap(), Matrix::diag(vec![q(1, 1), q(1, 1), q(1, 4)]));
        let e = HorosphereEmbedding::new(EmbeddingKind::Eta, TimeParam::ratio(-1, 2), 4);
        let y = vec![q(3, 7), q(-2, 1), q(5, 3)];
        assert_eq!(pullback_metric_at(&e, &y).unwrap(), Matrix::diag(vec![q(1, 1), q(1, 1), q(-1, 4)]));
        assert_eq!(e.q_image(&y).unwrap(), q(-1, 1));
    }

    #[test]
    fn zeta_pullback() {
        let e = HorosphereEmbedding::new(EmbeddingKind::Zeta, TimeParam::one(), 4);
        let y = vec![q(2, 1), q(0, 1), q(0, 1), q(0, 1)];
        assert_eq!(pullback_metric_at(&e, &y).unwrap(), Matrix::diag(vec![q(1, 4); 4]));
        let e = HorosphereEmbedding::new(EmbeddingKind::Zeta, TimeParam::ratio(-1, 3), 4);
        let y = vec![q(3, 2), q(1, 5), q(-1, 1), q(2, 3)];
        assert_eq!(pullback_metric_at(&e, &y).unwrap(), e.expected_pullback(&y).unwrap());
        assert_eq!(pullback_metric_at(&e, &[q(-1, 1), q(0, 1), q(0, 1), q(0, 1)]), Err(Error::OutOfChart));
    }

    #[test]
    fn translation_is_isometry() {
        let m = translation_matrix(&q(3, 5), 4).unwrap();
        for t in [TimeParam::ratio(1, 2), TimeParam::zero(), TimeParam::ratio(-1, 3)] {
            let j = ParamForm::new(4, &t).matrix();
            assert_eq!(m.transpose().mul(&j).mul(&m), j);
        }
    }
}

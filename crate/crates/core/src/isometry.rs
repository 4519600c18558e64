//! Reflections, rotations and boosts, the half-pipe group, Minkowski duality,
//! and rescaled reflection families with their limits at `t = 0`.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{hat_b, hat_matrix, hat_q, ParamForm, Regime};
use crate::linalg::Matrix;
use crate::numfield::{BranchFunc, FieldScalar, TimeParam};
use crate::projective::{Covector, ProjMap};

/// Reflection in `∂ℓH` with respect to `form`.
///
/// For `t ≠ 0` this is `id − 2(J⁻¹α)αᵀ/(αᵀJ⁻¹α)`. In the half-pipe regime only
/// spacelike mirrors (`αₙ ≠ 0`) have a unique reflection, the one with upper block
/// `id`, corner `−1` and bottom row `−2α̂/αₙ`.
pub fn reflection(h: &Covector, form: &ParamForm) -> Result<ProjMap> {
    let a = h.coeffs();
    let n = form.dim();
    if a.len() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, found: a.len() });
    }
    if form.regime() == Regime::HalfPipe {
        let last = &a[n];
        if last.is_zero() {
            return Err(Error::AmbiguousHalfPipeReflection);
        }
        let mut m = Matrix::identity(n + 1);
        let scale = FieldScalar::from_int(-2) * last.inv()?;
        for (j, x) in a[..n].iter().enumerate() {
            m.set(n, j, x * &scale);
        }
        m.set(n, n, FieldScalar::from_int(-1));
        return ProjMap::new(m);
    }
    let d = form.dual_diag().ok_or(Error::DivByZero)?;
    let q = form.dual_q(a)?;
    if q.is_zero() {
        return Err(Error::LightlikeMirror);
    }
    let k = FieldScalar::from_int(-2) * q.inv()?;
    let mut m = Matrix::identity(n + 1);
    for i in 0..=n {
        let di = &(&d[i] * &a[i]) * &k;
        if di.is_zero() {
            continue;
        }
        for j in 0..=n {
            let v = m.get(i, j) + &(&di * &a[j]);
            m.set(i, j, v);
        }
    }
    ProjMap::new(m)
}

/// A one-parameter family of matrices with branch-valued entries.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsomFamily {
    pub label: String,
    pub entries: Matrix<BranchFunc>,
}

impl IsomFamily {
    pub fn dim(&self) -> usize {
        self.entries.rows() - 1
    }

    /// Value at `t`; at `t = 0` the common one-sided limit.
    pub fn eval(&self, t: &TimeParam) -> Result<Matrix<FieldScalar>> {
        self.entries.eval(t)
    }

    pub fn is_constant(&self) -> bool {
        self.entries.entries().iter().all(BranchFunc::is_constant)
    }
}

/// `r_{|t|} ∘ r_{ℓH(t)} ∘ r_{|t|}⁻¹` for an unrescaled covector family `α(t)`, where the
/// reflection is taken in `q_{sign t}`.
pub fn conj_rescaled(label: &str, alpha: &[BranchFunc]) -> Result<IsomFamily> {
    let n = alpha.len() - 1;
    let mut jd = vec![BranchFunc::one(); n + 1];
    jd[0] = BranchFunc::int(-1);
    jd[n] = BranchFunc::sign_t();
    let ja: Vec<BranchFunc> = jd.iter().zip(alpha).map(|(d, a)| d.mul(a)).collect();
    let q = ja.iter().zip(alpha).fold(BranchFunc::zero(), |acc, (x, a)| acc.add(&x.mul(a)));
    let k = BranchFunc::int(-2).checked_div(&q).map_err(|_| Error::LightlikeMirror)?;
    let abs_t = BranchFunc::abs_t();
    let mut m: Matrix<BranchFunc> = Matrix::identity(n + 1);
    for i in 0..=n {
        for j in 0..=n {
            let mut v = m.get(i, j).add(&ja[i].mul(&alpha[j]).mul(&k));
            if i == n && j < n {
                v = v.checked_div(&abs_t)?;
            } else if i < n && j == n {
                v = v.mul(&abs_t);
            }
            m.set(i, j, v);
        }
    }
    Ok(IsomFamily { label: label.to_string(), entries: m })
}

/// One-sided limits `(left, right)` at `t = 0` of the `order`-th derivative.
pub fn family_limit(fam: &IsomFamily, order: usize) -> Result<(Matrix<FieldScalar>, Matrix<FieldScalar>)> {
    fam.entries.derivative(order).limit_at_zero()
}

/// An element of the half-pipe group: `[[Â, 0], [row, corner]]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HPElement {
    pub block: Matrix<FieldScalar>,
    pub bottom_row: Vec<FieldScalar>,
    pub corner: i8,
}

impl HPElement {
    /// Reads the block shape of an `(n+1)×(n+1)` matrix; `Â` must preserve `q̂` exactly
    /// and `(Âe₀)₀ > 0`.
    pub fn from_matrix(m: &Matrix<FieldScalar>) -> Result<Self> {
        let n = m.rows() - 1;
        if (0..n).any(|i| !m.get(i, n).is_zero()) {
            return Err(Error::NotIsometry);
        }
        let corner = match m.get(n, n) {
            c if *c == FieldScalar::one() => 1,
            c if *c == FieldScalar::from_int(-1) => -1,
            _ => return Err(Error::NotIsometry),
        };
        let block = Matrix::from_rows((0..n).map(|i| m.row(i)[..n].to_vec()).collect());
        if !is_lorentz(&block) || !block.get(0, 0).is_positive() {
            return Err(Error::NotLorentz);
        }
        Ok(HPElement { block, bottom_row: m.row(n)[..n].to_vec(), corner })
    }

    pub fn matrix(&self) -> Matrix<FieldScalar> {
        let n = self.block.rows();
        let mut m = Matrix::zeros(n + 1, n + 1);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.block.get(i, j).clone());
            }
            m.set(n, i, self.bottom_row[i].clone());
        }
        m.set(n, n, FieldScalar::from_int(self.corner as i64));
        m
    }

    /// Translation vector `v` of `φ(Â, v)`, recovered from `row = vᵀĴÂ`.
    pub fn translation(&self) -> Vec<FieldScalar> {
        let j = hat_matrix(self.block.rows());
        let inv = self.block.inverse().expect("Lorentz block");
        j.mul_vec(&inv.vec_mul(&self.bottom_row))
    }
}

/// `ÂᵀĴÂ = Ĵ`.
pub fn is_lorentz(a: &Matrix<FieldScalar>) -> bool {
    let j = hat_matrix(a.rows());
    a.transpose().mul(&j).mul(a) == j
}

/// Membership in the half-pipe group, as a predicate on the matrix shape.
pub fn in_hp_group(m: &Matrix<FieldScalar>) -> bool {
    HPElement::from_matrix(m).is_ok()
}

/// `φ(Â, v) = [[Â, 0], [vᵀĴÂ, ±1]]`; `negated` encodes `(−Â, v)` with corner `−1`.
pub fn phi_minkowski(a: &Matrix<FieldScalar>, v: &[FieldScalar], negated: bool) -> Result<HPElement> {
    if !is_lorentz(a) {
        return Err(Error::NotLorentz);
    }
    if v.len() != a.rows() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: v.len() });
    }
    let j = hat_matrix(a.rows());
    let row = j.mul(a).vec_mul(v);
    Ok(HPElement { block: a.clone(), bottom_row: row, corner: if negated { -1 } else { 1 } })
}

/// Minkowski reflection in `{x : b̂(x, w) = a}` carried to the half-pipe group by `φ`.
pub fn degenerate_reflection_family(w: &[FieldScalar], a: &FieldScalar) -> Result<HPElement> {
    let qw = hat_q(w);
    if !qw.is_positive() {
        return Err(Error::NotSpacelike);
    }
    let n = w.len();
    let inv = qw.inv()?;
    let jw = hat_matrix(n).mul_vec(w);
    let mut l = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let v = l.get(i, j) - &(&(&w[i] * &jw[j]) * &(FieldScalar::from_int(2) * &inv));
            l.set(i, j, v);
        }
    }
    let shift = FieldScalar::from_int(2) * a * &inv;
    let v: Vec<FieldScalar> = w.iter().map(|x| x * &shift).collect();
    phi_minkowski(&l, &v, false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RotationKind {
    Rotation,
    Boost,
    Infinitesimal,
}

/// Angle data of a rotation, boost or infinitesimal rotation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotationData {
    pub kind: RotationKind,
    pub fixed_dim: usize,
    pub trace: FieldScalar,
    /// `cos α` (rotation) or `cosh β` (boost), equal to `(trace − (n − 1))/2`.
    pub cosine: Option<FieldScalar>,
    /// Squared magnitude `q̂(row)` of the translation part of an infinitesimal rotation.
    pub magnitude_sq: Option<FieldScalar>,
}

/// Fixed-space dimension and angle datum of `M`, which must preserve `form`.
pub fn rotation_or_boost_analyze(m: &ProjMap, form: &ParamForm) -> Result<RotationData> {
    let a = m.matrix();
    let n = form.dim();
    if a.rows() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, found: a.rows() });
    }
    if m.is_identity() {
        return Err(Error::TrivialElement);
    }
    if form.regime() == Regime::HalfPipe {
        let e = HPElement::from_matrix(a).map_err(|_| Error::NotIsometry)?;
        let fixed_dim = a.sub(&Matrix::identity(n + 1)).nullspace().len();
        return Ok(RotationData {
            kind: RotationKind::Infinitesimal,
            fixed_dim,
            trace: a.trace(),
            cosine: None,
            magnitude_sq: Some(hat_q(&e.bottom_row)),
        });
    }
    let j = form.matrix();
    let g = a.transpose().mul(&j).mul(a);
    let lambda = g.get(0, 0).checked_div(j.get(0, 0))?;
    if !lambda.is_positive() || g != j.scale(&lambda) {
        return Err(Error::NotIsometry);
    }
    let root = lambda.sqrt()?.ok_or(Error::NotIsometry)?;
    let inv = root.inv()?;
    let mut norm = a.scale(&inv);
    if a.get(0, 0).is_negative() && form.regime() == Regime::Hyperbolic {
        norm = norm.neg();
    }
    let fixed_dim = norm.sub(&Matrix::identity(n + 1)).nullspace().len();
    let trace = norm.trace();
    let cosine = (&trace - &FieldScalar::from_int(n as i64 - 1)).scale(&num_rational::BigRational::new(1.into(), 2.into()));
    Ok(RotationData {
        kind: if form.regime() == Regime::Hyperbolic { RotationKind::Rotation } else { RotationKind::Boost },
        fixed_dim,
        trace,
        cosine: Some(cosine),
        magnitude_sq: None,
    })
}

/// Membership in the common subgroup `G₀`: block form `[[Â, 0], [0, ±1]]` with `Â` in
/// the time-orientation-preserving Lorentz group, up to positive scale.
pub fn g0_membership(m: &ProjMap) -> bool {
    let a = m.canonical();
    let n = a.rows() - 1;
    if (0..n).any(|i| !a.get(i, n).is_zero() || !a.get(n, i).is_zero()) {
        return false;
    }
    let block = Matrix::from_rows((0..n).map(|i| a.row(i)[..n].to_vec()).collect());
    let j = hat_matrix(n);
    let g = block.transpose().mul(&j).mul(&block);
    let lambda = -g.get(0, 0).clone();
    if !lambda.is_positive() || g != j.scale(&lambda) || !block.get(0, 0).is_positive() {
        return false;
    }
    &a.get(n, n).clone() * &a.get(n, n).clone() == lambda
}

/// Conjugate by `r_t = diag(1, …, 1, 1/t)` of the rotation (or boost) with Pythagorean
/// parameter `u(t)` in the last two coordinates of dimension `dim`.
///
/// The signed `r_t` makes the lower-left entry `−sin θ(t)/t`, whose limit is `−2u̇(0)`
/// from both sides.
pub fn rational_rotation_family(u: &BranchFunc, dim: usize, boost: bool) -> Result<IsomFamily> {
    if u.limit_at_zero()? != (FieldScalar::zero(), FieldScalar::zero()) {
        return Err(Error::NotCollapsing);
    }
    let u2 = u.mul(u);
    let den = if boost { BranchFunc::one().sub(&u2) } else { BranchFunc::one().add(&u2) };
    let c_num = if boost { BranchFunc::one().add(&u2) } else { BranchFunc::one().sub(&u2) };
    let c = c_num.checked_div(&den)?;
    let s = u.scale(&FieldScalar::from_int(2)).checked_div(&den)?;
    let t = BranchFunc::t();
    let mut m = Matrix::identity(dim + 1);
    let (p, q) = (dim - 1, dim);
    m.set(p, p, c.clone());
    m.set(q, q, c);
    m.set(p, q, s.mul(&t));
    let lower = s.checked_div(&t)?;
    m.set(q, p, if boost { lower } else { lower.neg() });
    Ok(IsomFamily { label: if boost { "boost".into() } else { "rotation".into() }, entries: m })
}

/// Result of the toric-cusp commutation test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuspCommutation {
    pub commutes: bool,
    /// First entry `(i, j)` where the two products differ.
    pub witness: Option<(usize, usize)>,
}

/// Whether `φ(Â, 0)` and `φ(id, λw)` commute.
pub fn toric_cusp_commutation(a: &Matrix<FieldScalar>, w: &[FieldScalar], lambda: &FieldScalar) -> Result<CuspCommutation> {
    let n = a.rows();
    let rot = phi_minkowski(a, &vec![FieldScalar::zero(); n], false)?.matrix();
    let v: Vec<FieldScalar> = w.iter().map(|x| x * lambda).collect();
    let tr = phi_minkowski(&Matrix::identity(n), &v, false)?.matrix();
    let lhs = rot.mul(&tr);
    let rhs = tr.mul(&rot);
    let witness = lhs.first_difference(&rhs);
    Ok(CuspCommutation { commutes: witness.is_none(), witness })
}

/// Null rotation `I + w sᵀĴ − s wᵀĴ − (q̂(s)/2) w wᵀĴ`, a `q̂`-isometry fixing the
/// lightlike vector `w`; `s` must satisfy `b̂(s, w) = 0`.
pub fn null_rotation(w: &[FieldScalar], s: &[FieldScalar]) -> Result<Matrix<FieldScalar>> {
    if !hat_q(w).is_zero() || !hat_b(s, w).is_zero() {
        return Err(Error::NotSpacelike);
    }
    let n = w.len();
    let j = hat_matrix(n);
    let jw = j.mul_vec(w);
    let js = j.mul_vec(s);
    let half = hat_q(s).scale(&num_rational::BigRational::new(1.into(), 2.into()));
    let mut m = Matrix::identity(n);
    for i in 0..n {
        for k in 0..n {
            let v = m.get(i, k) + &(&w[i] * &js[k]) - &(&s[i] * &jw[k]) - &(&(&half * &w[i]) * &jw[k]);
            m.set(i, k, v);
        }
    }
    Ok(m)
}

/// The group generated by `gens`, by closure under right multiplication; `None` if it
/// exceeds `limit` elements.
pub fn generate_group(gens: &[ProjMap], limit: usize) -> Option<Vec<ProjMap>> {
    let dim = gens.first()?.dim();
    let id = ProjMap::identity(dim);
    let mut seen: HashSet<ProjMap> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in gens {
                let h = g.compose(s);
                if seen.insert(h.clone()) {
                    if seen.len() > limit {
                        return None;
                    }
                    out.push(h.clone());
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    Some(out)
}

/// Whether the maps pairwise commute and each squares to the identity.
pub fn commuting_involutions(gens: &[ProjMap]) -> bool {
    gens.iter().all(|g| g.compose(g).is_identity())
        && gens.iter().enumerate().all(|(i, g)| gens[i + 1..].iter().all(|h| g.compose(h) == h.compose(g)))
}

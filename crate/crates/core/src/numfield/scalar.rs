use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact element `a + b√2 + c√3 + d√6` of the field ℚ(√2,√3).
///
/// Coefficients are kept in lowest terms by `BigRational`, so structural
/// equality and hashing coincide with field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    c: [BigRational; 4],
}

/// `BASIS_MUL[i][j] = (k, m)` means `e_i * e_j = k * e_m` for the basis `1, √2, √3, √6`.
const BASIS_MUL: [[(i64, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (2, 0), (1, 3), (2, 2)],
    [(1, 2), (1, 3), (3, 0), (3, 1)],
    [(1, 3), (2, 2), (3, 1), (6, 0)],
];

const RADICANDS: [u32; 3] = [2, 3, 6];

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl FieldScalar {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        FieldScalar { c: [a, b, c, d] }
    }

    pub fn zero() -> Self {
        FieldScalar { c: [BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::zero()] }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n/d` as a field element. Panics if `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(ratio(n, d))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut x = Self::zero();
        x.c[0] = q;
        x
    }

    /// `q·√2`.
    pub fn sqrt2_times(q: BigRational) -> Self {
        let mut x = Self::zero();
        x.c[1] = q;
        x
    }

    pub fn sqrt2() -> Self {
        Self::sqrt2_times(BigRational::one())
    }

    pub fn sqrt3() -> Self {
        let mut x = Self::zero();
        x.c[2] = BigRational::one();
        x
    }

    pub fn sqrt6() -> Self {
        let mut x = Self::zero();
        x.c[3] = BigRational::one();
        x
    }

    /// Rational coefficients `(a, b, c, d)` of `a + b√2 + c√3 + d√6`.
    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.c[1..].iter().all(Zero::is_zero).then_some(&self.c[0])
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        FieldScalar { c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]) }
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        FieldScalar { c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]) }
    }

    pub fn neg_ref(&self) -> Self {
        FieldScalar { c: std::array::from_fn(|i| -&self.c[i]) }
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (k, m) = BASIS_MUL[i][j];
                let p = x * y;
                if k == 1 {
                    out.c[m] += p;
                } else {
                    out.c[m] += p * BigInt::from(k);
                }
            }
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        FieldScalar { c: std::array::from_fn(|i| &self.c[i] * q) }
    }

    /// Galois conjugate `√3 ↦ −√3`.
    fn conj3(&self) -> Self {
        FieldScalar { c: [self.c[0].clone(), self.c[1].clone(), -&self.c[2], -&self.c[3]] }
    }

    /// Galois conjugate `√2 ↦ −√2`.
    fn conj2(&self) -> Self {
        FieldScalar { c: [self.c[0].clone(), -&self.c[1], self.c[2].clone(), -&self.c[3]] }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip()));
        }
        // x·conj3(x) lies in ℚ(√2); multiplying by its √2-conjugate lands in ℚ.
        let c3 = self.conj3();
        let n = self.mul_ref(&c3);
        let n2 = n.conj2();
        let m = n.mul_ref(&n2);
        let m = m.as_rational().expect("norm lies in ℚ").clone();
        Ok(c3.mul_ref(&n2).scale(&m.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_ref(&rhs.inv()?))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Integer numerators over a common positive denominator.
    fn integer_form(&self) -> ([BigInt; 4], BigInt) {
        let den = self.c.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let nums = std::array::from_fn(|i| self.c[i].numer() * (&den / self.c[i].denom()));
        (nums, den)
    }

    /// Rational enclosure `[lo, hi] / den` of the real value, with the radicals
    /// replaced by dyadic brackets of width `2^-bits`.
    fn enclosure(&self, bits: u64) -> (BigInt, BigInt, BigInt) {
        let (nums, den) = self.integer_form();
        let scale = BigInt::one() << bits;
        let mut lo = &nums[0] * &scale;
        let mut hi = lo.clone();
        for (k, r) in RADICANDS.iter().enumerate() {
            let x = &nums[k + 1];
            if x.is_zero() {
                continue;
            }
            let floor = (BigInt::from(*r) << (2 * bits)).sqrt();
            let ceil = &floor + 1u32;
            if x.is_positive() {
                lo += x * &floor;
                hi += x * &ceil;
            } else {
                lo += x * &ceil;
                hi += x * &floor;
            }
        }
        (lo, hi, den * scale)
    }

    /// Exact sign in `{-1, 0, 1}`.
    ///
    /// Zero is decided from the coefficients; otherwise the enclosure is refined
    /// until it excludes zero, which terminates for every nonzero element.
    pub fn signum(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if let Some(q) = self.as_rational() {
            return if q.is_positive() { 1 } else { -1 };
        }
        let mut bits = 64;
        loop {
            let (lo, hi, _) = self.enclosure(bits);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits *= 2;
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg_ref()
        } else {
            self.clone()
        }
    }

    /// A square root in the field with nonnegative sign, if one exists.
    pub fn sqrt(&self) -> Result<Option<Self>> {
        match self.signum() {
            -1 => return Err(Error::NegativeRadicand),
            0 => return Ok(Some(Self::zero())),
            _ => {}
        }
        // Tower ℚ ⊂ K = ℚ(√2) ⊂ K(√3): write x = u + v√3 with u, v ∈ K.
        let u = (self.c[0].clone(), self.c[1].clone());
        let v = (self.c[2].clone(), self.c[3].clone());
        let candidates: Vec<((BigRational, BigRational), (BigRational, BigRational))> =
            if v.0.is_zero() && v.1.is_zero() {
                let mut out = Vec::new();
                if let Some(p) = sqrt_k(&u) {
                    out.push((p, k_zero()));
                }
                let third = ratio(1, 3);
                if let Some(q) = sqrt_k(&(&u.0 * &third, &u.1 * &third)) {
                    out.push((k_zero(), q));
                }
                out
            } else {
                let norm = k_sub(&k_mul(&u, &u), &k_scale(&k_mul(&v, &v), &ratio(3, 1)));
                let mut out = Vec::new();
                if let Some(s) = sqrt_k(&norm) {
                    let half = ratio(1, 2);
                    for sgn in [1, -1] {
                        let s_signed = k_scale(&s, &ratio(sgn, 1));
                        let p2 = k_scale(&k_add(&u, &s_signed), &half);
                        if let Some(p) = sqrt_k(&p2) {
                            if p.0.is_zero() && p.1.is_zero() {
                                continue;
                            }
                            let q = k_div(&k_scale(&v, &half), &p);
                            out.push((p, q));
                        }
                    }
                }
                out
            };
        for (p, q) in candidates {
            let y = FieldScalar { c: [p.0, p.1, q.0, q.1] };
            if &y.mul_ref(&y) == self {
                return Ok(Some(y.abs()));
            }
        }
        Ok(None)
    }

    /// `(self - other).signum()` as an ordering.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.sub_ref(other).signum().cmp(&0)
    }

    /// Midpoint of an enclosure whose width is below `2^-bits` relative to the value.
    fn approximation(&self, digits: usize) -> BigRational {
        if let Some(q) = self.as_rational() {
            return q.clone();
        }
        let target = BigInt::from(10u32).pow(digits as u32 + 3);
        let mut bits = 64;
        loop {
            let (lo, hi, den) = self.enclosure(bits);
            let width = &hi - &lo;
            let low_mag = lo.abs().min(hi.abs());
            if (lo.is_positive() || hi.is_negative()) && width * &target < low_mag {
                return BigRational::new(lo + hi, den * 2);
            }
            bits *= 2;
        }
    }

    /// Decimal approximation with `sig` significant digits.
    pub fn to_decimal(&self, sig: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        format_decimal(&self.approximation(sig), sig)
    }

    /// Nearest `f64`; for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        self.approximation(17).to_f64().unwrap_or(f64::NAN)
    }

    /// Stable four-term serialization `p/q + r/s*sqrt2 + u/v*sqrt3 + w/x*sqrt6`.
    pub fn to_exact_string(&self) -> String {
        let term = |q: &BigRational| format!("{}/{}", q.numer(), q.denom());
        format!(
            "{} + {}*sqrt2 + {}*sqrt3 + {}*sqrt6",
            term(&self.c[0]),
            term(&self.c[1]),
            term(&self.c[2]),
            term(&self.c[3])
        )
    }
}

type KElem = (BigRational, BigRational);

fn k_zero() -> KElem {
    (BigRational::zero(), BigRational::zero())
}

fn k_add(x: &KElem, y: &KElem) -> KElem {
    (&x.0 + &y.0, &x.1 + &y.1)
}

fn k_sub(x: &KElem, y: &KElem) -> KElem {
    (&x.0 - &y.0, &x.1 - &y.1)
}

fn k_mul(x: &KElem, y: &KElem) -> KElem {
    (&x.0 * &y.0 + &x.1 * &y.1 * BigInt::from(2), &x.0 * &y.1 + &x.1 * &y.0)
}

fn k_scale(x: &KElem, q: &BigRational) -> KElem {
    (&x.0 * q, &x.1 * q)
}

fn k_div(x: &KElem, y: &KElem) -> KElem {
    let n = &y.0 * &y.0 - &y.1 * &y.1 * BigInt::from(2);
    let conj = (y.0.clone(), -&y.1);
    k_scale(&k_mul(x, &conj), &n.recip())
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

/// Square root inside ℚ(√2) of `a + b√2`.
fn sqrt_k(x: &KElem) -> Option<KElem> {
    let (a, b) = x;
    if b.is_zero() {
        if let Some(p) = rational_sqrt(a) {
            return Some((p, BigRational::zero()));
        }
        return rational_sqrt(&(a / BigInt::from(2))).map(|q| (BigRational::zero(), q));
    }
    let disc = a * a - b * b * BigInt::from(2);
    let r = rational_sqrt(&disc)?;
    for s in [&r, &-&r] {
        let p2 = (a + s) / BigInt::from(2);
        if let Some(p) = rational_sqrt(&p2) {
            if !p.is_zero() {
                let q = b / (&p * BigInt::from(2));
                return Some((p, q));
            }
        }
    }
    None
}

fn format_decimal(v: &BigRational, sig: usize) -> String {
    let negative = v.is_negative();
    let n = v.numer().abs();
    let d = v.denom().clone();
    let ten = BigInt::from(10u32);
    // e = floor(log10(n/d))
    let mut e = n.to_string().len() as i64 - d.to_string().len() as i64;
    let pow10 = |k: i64| ten.pow(k.unsigned_abs() as u32);
    let ge = |e: i64| if e >= 0 { n.clone() >= &d * pow10(e) } else { &n * pow10(e) >= d };
    while !ge(e) {
        e -= 1;
    }
    while ge(e + 1) {
        e += 1;
    }
    let shift = sig as i64 - 1 - e;
    let (num, den) = if shift >= 0 { (&n * pow10(shift), d.clone()) } else { (n.clone(), &d * pow10(shift)) };
    let (q, r) = num.div_rem(&den);
    let mut digits = if r * 2 >= den { q + 1 } else { q };
    if digits >= pow10(sig as i64) {
        digits /= &ten;
        e += 1;
    }
    let ds = digits.to_string();
    let body = if (-5..sig as i64).contains(&e) {
        if e >= 0 {
            let (int, frac) = ds.split_at(e as usize + 1);
            if frac.is_empty() {
                int.to_string()
            } else {
                format!("{int}.{frac}")
            }
        } else {
            format!("0.{}{}", "0".repeat((-e - 1) as usize), ds)
        }
    } else {
        let (lead, rest) = ds.split_at(1);
        format!("{lead}.{rest}e{e}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

impl Default for FieldScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialOrd for FieldScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}

impl From<i64> for FieldScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for FieldScalar {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&FieldScalar> for &FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: &FieldScalar) -> FieldScalar {
                self.$inner(rhs)
            }
        }
        impl $tr<FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: FieldScalar) -> FieldScalar {
                self.$inner(&rhs)
            }
        }
        impl $tr<&FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: &FieldScalar) -> FieldScalar {
                self.$inner(rhs)
            }
        }
        impl $tr<FieldScalar> for &FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: FieldScalar) -> FieldScalar {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        self.neg_ref()
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        self.neg_ref()
    }
}

impl AddAssign<&FieldScalar> for FieldScalar {
    fn add_assign(&mut self, rhs: &FieldScalar) {
        for i in 0..4 {
            self.c[i] += &rhs.c[i];
        }
    }
}

impl SubAssign<&FieldScalar> for FieldScalar {
    fn sub_assign(&mut self, rhs: &FieldScalar) {
        for i in 0..4 {
            self.c[i] -= &rhs.c[i];
        }
    }
}

impl fmt::Display for FieldScalar {
    /// Compact form listing nonzero terms only, e.g. `-1/2 + 3*sqrt2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["", "*sqrt2", "*sqrt3", "*sqrt6"];
        let mut first = true;
        for (q, name) in self.c.iter().zip(names) {
            if q.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{q}{name}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.trim_start().starts_with('-');
        let int_part = if int.is_empty() || int == "-" || int == "+" { BigInt::zero() } else { BigInt::from_str(int).map_err(|_| bad())? };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_val = BigInt::from_str(frac).map_err(|_| bad())?;
        let mag = int_part.abs() * &scale + frac_val;
        let num = if negative { -mag } else { mag };
        return Ok(BigRational::new(num, scale));
    }
    Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?))
}

impl FromStr for FieldScalar {
    type Err = Error;

    /// Accepts sums of terms `q`, `q*sqrtN` (N ∈ {2,3,6}) with `q` an integer,
    /// fraction or finite decimal; this covers both serialized forms.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = FieldScalar::zero();
        let cleaned = s.replace(' ', "");
        if cleaned.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in cleaned.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('+') && !cur.ends_with('-') {
                terms.push(std::mem::take(&mut cur));
            }
            if ch != '+' {
                cur.push(ch);
            }
        }
        terms.push(cur);
        for term in terms {
            let term = if let Some(rest) = term.strip_prefix("-sqrt") {
                format!("-1*sqrt{rest}")
            } else if term.starts_with("sqrt") {
                format!("1*{term}")
            } else {
                term
            };
            let (coef, idx) = match term.split_once("*sqrt") {
                Some((c, r)) => {
                    let idx = match r {
                        "2" => 1,
                        "3" => 2,
                        "6" => 3,
                        _ => return Err(Error::Parse(format!("unsupported radical in `{term}`"))),
                    };
                    (parse_rational(c)?, idx)
                }
                None => (parse_rational(&term)?, 0),
            };
            out.c[idx] += coef;
        }
        Ok(out)
    }
}

impl Serialize for FieldScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FieldScalar", 2)?;
        st.serialize_field("exact", &self.to_exact_string())?;
        st.serialize_field("approx", &self.to_decimal(12))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for FieldScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = FieldScalar;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a field element string or an object with an `exact` field")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<FieldScalar, E> {
                v.parse().map_err(E::custom)
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<FieldScalar, A::Error> {
                let mut exact = None;
                while let Some(key) = map.next_key::<String>()? {
                    if key == "exact" {
                        exact = Some(map.next_value::<String>()?);
                    } else {
                        map.next_value::<de::IgnoredAny>()?;
                    }
                }
                let exact = exact.ok_or_else(|| de::Error::missing_field("exact"))?;
                exact.parse().map_err(de::Error::custom)
            }
        }
        deserializer.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(s: &str) -> FieldScalar {
        s.parse().unwrap()
    }

    #[test]
    fn basis_products() {
        assert_eq!(FieldScalar::sqrt2() * FieldScalar::sqrt3(), FieldScalar::sqrt6());
        assert_eq!(fs("1 + 1*sqrt2") * fs("1 - 1*sqrt2"), FieldScalar::from_int(-1));
        let m = -FieldScalar::sqrt2();
        assert_eq!(&m * &m, FieldScalar::from_int(2));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(FieldScalar::one().checked_div(&FieldScalar::zero()), Err(Error::DivByZero));
    }

    #[test]
    fn signs() {
        assert_eq!(FieldScalar::zero().signum(), 0);
        assert_eq!(fs("3 - 2*sqrt2").signum(), 1);
        assert_eq!(fs("1*sqrt2 + 1*sqrt3 - 1*sqrt6").signum(), 1);
        assert_eq!(fs("-5*sqrt6 + 12").signum(), -1);
        assert_eq!(fs("-2*sqrt6 + 5").signum(), 1);
        assert_eq!(fs("5*sqrt6 - 13").signum(), -1);
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(FieldScalar::from_int(2).sqrt().unwrap(), Some(FieldScalar::sqrt2()));
        assert_eq!(FieldScalar::from_ratio(3, 4).sqrt().unwrap(), Some(FieldScalar::sqrt3().scale(&ratio(1, 2))));
        assert_eq!(FieldScalar::from_ratio(5, 4).sqrt().unwrap(), None);
        assert_eq!(FieldScalar::from_int(-1).sqrt(), Err(Error::NegativeRadicand));
        // (1 + √2)² = 3 + 2√2, (√2 + √3)² = 5 + 2√6
        assert_eq!(fs("3 + 2*sqrt2").sqrt().unwrap(), Some(fs("1 + 1*sqrt2")));
        assert_eq!(fs("5 + 2*sqrt6").sqrt().unwrap(), Some(fs("1*sqrt2 + 1*sqrt3")));
        assert_eq!(FieldScalar::from_int(6).sqrt().unwrap(), Some(FieldScalar::sqrt6()));
    }

    #[test]
    fn decimal_format() {
        assert_eq!(FieldScalar::sqrt2().to_decimal(12), "1.41421356237");
        assert_eq!(FieldScalar::from_ratio(-1, 5).to_decimal(12), "-0.200000000000");
        assert_eq!(FieldScalar::from_int(1000).to_decimal(3), "1.00e3");
        assert_eq!(fs("3 - 2*sqrt2").to_decimal(6), "0.171573");
    }

    #[test]
    fn exact_string_round_trip() {
        let x = fs("-1/2 + 3/7*sqrt2 - 5*sqrt3 + 1/9*sqrt6");
        assert_eq!(x.to_exact_string(), "-1/2 + 3/7*sqrt2 + -5/1*sqrt3 + 1/9*sqrt6");
        assert_eq!(fs(&x.to_exact_string()), x);
        let json = serde_json::to_string(&x).unwrap();
        let back: FieldScalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn parse_decimals() {
        assert_eq!(fs("0.9"), FieldScalar::from_ratio(9, 10));
        assert_eq!(fs("-0.25"), FieldScalar::from_ratio(-1, 4));
        assert!("1/0".parse::<FieldScalar>().is_err());
        assert!("sqrt5".parse::<FieldScalar>().is_err());
    }
}

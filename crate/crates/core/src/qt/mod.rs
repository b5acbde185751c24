//! The coefficient field K = Q(q,t) and its specialization Q(t).
//!
//! A [`Scalar`] is a reduced fraction of integer polynomials in q and t.
//! Negative powers of q or t are carried by the denominator, so the
//! underlying polynomials only ever hold nonnegative exponents. All
//! arithmetic is exact; equality is structural because every value is kept
//! in canonical form (coprime numerator/denominator, denominator's lowest
//! graded-lex coefficient positive, zero stored as 0/1).

mod parse;
mod poly;

pub use poly::{Mono, QtPoly, TPoly};

use crate::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element of Q(q,t) in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scalar {
    num: QtPoly,
    den: QtPoly,
}

impl Scalar {
    fn make(num: QtPoly, den: QtPoly) -> Self {
        assert!(!den.is_zero(), "scalar with zero denominator");
        if num.is_zero() {
            return Scalar {
                num: QtPoly::zero(),
                den: QtPoly::one(),
            };
        }
        let g = QtPoly::gcd(&num, &den);
        let mut num = num.divexact(&g);
        let mut den = den.divexact(&g);
        if den.lowest_coeff().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    fn resign(&mut self) {
        if self.den.lowest_coeff().is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn zero() -> Self {
        Scalar {
            num: QtPoly::zero(),
            den: QtPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            num: QtPoly::one(),
            den: QtPoly::one(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Scalar {
            num: QtPoly::constant(BigInt::from(v)),
            den: QtPoly::one(),
        }
    }

    pub fn q() -> Self {
        Scalar {
            num: QtPoly::var_q(),
            den: QtPoly::one(),
        }
    }

    pub fn t() -> Self {
        Scalar {
            num: QtPoly::var_t(),
            den: QtPoly::one(),
        }
    }

    /// The Laurent monomial q^a t^b.
    pub fn monomial(a: i64, b: i64) -> Self {
        let num = QtPoly::monomial(a.max(0) as u32, b.max(0) as u32, BigInt::one());
        let den = QtPoly::monomial((-a).max(0) as u32, (-b).max(0) as u32, BigInt::one());
        Scalar { num, den }
    }

    pub fn from_poly(p: QtPoly) -> Self {
        Scalar {
            num: p,
            den: QtPoly::one(),
        }
    }

    pub fn numerator(&self) -> &QtPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QtPoly {
        &self.den
    }

    /// Test helper: the numerator of a fraction known to be polynomial.
    pub fn into_numerator_checked(self) -> QtPoly {
        assert!(self.den.is_one(), "scalar is not a polynomial: {}", self);
        self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &rhs.inv())
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero scalar");
        Scalar::make(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Scalar {
        if e == 0 {
            return Scalar::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0, t0);
        if d.is_zero() {
            return Err(Error::DenominatorZeroAtPoint);
        }
        Ok(self.num.eval(q0, t0) / d)
    }

    /// Substitute q -> t^e, yielding an exact element of Q(t). Fails when the
    /// denominator vanishes identically on the curve (a genuine pole).
    pub fn substitute_q(&self, e: i64) -> Result<TScalar> {
        let dl = self.den.substitute_q_power(e);
        if dl.is_empty() {
            return Err(Error::IdenticallyZeroDenominator(e));
        }
        if self.num.is_zero() {
            return Ok(TScalar::zero());
        }
        let nl = self.num.substitute_q_power(e);
        if nl.is_empty() {
            return Ok(TScalar::zero());
        }
        let nmin = *nl.keys().next().unwrap();
        let dmin = *dl.keys().next().unwrap();
        let to_tpoly = |m: &std::collections::BTreeMap<i64, BigInt>, base: i64| -> TPoly {
            let mut coeffs = Vec::new();
            for (k, c) in m {
                let idx = (k - base) as usize;
                if coeffs.len() <= idx {
                    coeffs.resize(idx + 1, BigInt::zero());
                }
                coeffs[idx] = c.clone();
            }
            TPoly { coeffs }
        };
        let mut num = to_tpoly(&nl, nmin);
        let mut den = to_tpoly(&dl, dmin);
        let shift = nmin - dmin;
        if shift >= 0 {
            num = num.shifted(shift as usize);
        } else {
            den = den.shifted((-shift) as usize);
        }
        Ok(TScalar::make(num, den))
    }

    pub fn parse(s: &str) -> Result<Scalar> {
        parse::parse_scalar(s)
    }

    /// Bound on the q,t degrees appearing anywhere in the fraction.
    pub fn degree_bounds(&self) -> (u32, u32) {
        (
            self.num.deg_q().max(self.den.deg_q()),
            self.num.deg_t().max(self.den.deg_t()),
        )
    }
}

// Fraction addition with the denominator-gcd split: with g = gcd(b, d),
// a/b + c/d = (a d' + c b')/(g b' d') and the only reduction left is
// against g, which keeps every gcd small.
fn add_fractions(an: &QtPoly, ad: &QtPoly, bn: &QtPoly, bd: &QtPoly) -> Scalar {
    if an.is_zero() {
        return Scalar::make(bn.clone(), bd.clone());
    }
    if bn.is_zero() {
        return Scalar::make(an.clone(), ad.clone());
    }
    let g = QtPoly::gcd(ad, bd);
    if g.is_one() {
        let num = an.mul(bd).add(&bn.mul(ad));
        if num.is_zero() {
            return Scalar::zero();
        }
        let mut out = Scalar {
            num,
            den: ad.mul(bd),
        };
        out.resign();
        return out;
    }
    let adp = ad.divexact(&g);
    let bdp = bd.divexact(&g);
    let num = an.mul(&bdp).add(&bn.mul(&adp));
    if num.is_zero() {
        return Scalar::zero();
    }
    let h = QtPoly::gcd(&num, &g);
    let num = num.divexact(&h);
    let den = adp.mul(&bdp).mul(&g.divexact(&h));
    let mut out = Scalar { num, den };
    out.resign();
    out
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        add_fractions(&self.num, &self.den, &rhs.num, &rhs.den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        add_fractions(&self.num, &self.den, &rhs.num.neg(), &rhs.den)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        // cross-reduce so the final gcds are trivial
        let g1 = QtPoly::gcd(&self.num, &rhs.den);
        let g2 = QtPoly::gcd(&rhs.num, &self.den);
        let num = self.num.divexact(&g1).mul(&rhs.num.divexact(&g2));
        let den = self.den.divexact(&g2).mul(&rhs.den.divexact(&g1));
        let mut out = Scalar { num, den };
        if out.den.lowest_coeff().is_negative() {
            out.num = out.num.neg();
            out.den = out.den.neg();
        }
        out
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An element of Q(t), used for specializations q = t^e.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TScalar {
    num: TPoly,
    den: TPoly,
}

impl TScalar {
    fn make(num: TPoly, den: TPoly) -> Self {
        assert!(!den.is_zero(), "t-scalar with zero denominator");
        if num.is_zero() {
            return TScalar::zero();
        }
        let g = TPoly::gcd(&num, &den);
        let mut num = num.divexact(&g);
        let mut den = den.divexact(&g);
        if den.lowest().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        TScalar { num, den }
    }

    pub fn zero() -> Self {
        TScalar {
            num: TPoly::zero(),
            den: TPoly::one(),
        }
    }

    pub fn one() -> Self {
        TScalar {
            num: TPoly::one(),
            den: TPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &TScalar) -> TScalar {
        TScalar::make(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn mul(&self, rhs: &TScalar) -> TScalar {
        TScalar::make(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn eval(&self, t0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return Err(Error::DenominatorZeroAtPoint);
        }
        Ok(self.num.eval(t0) / d)
    }

    pub fn parse(s: &str) -> Result<TScalar> {
        parse::parse_tscalar(s)
    }
}

impl fmt::Display for TScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl serde::Serialize for TScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// u(z) = (t - z)(1 - z t)/(1 - z)^2, the universal norm-ratio unit.
pub fn u_factor(z: &Scalar) -> Result<Scalar> {
    if z.is_one() {
        return Err(Error::PoleAtOne);
    }
    let t = Scalar::t();
    let one = Scalar::one();
    let num = &(&t - z) * &(&one - &(z * &t));
    let d = &one - z;
    Ok(&num / &(&d * &d))
}

/// Genericity scan: q0 != 1, q0^a t0^b != 1 for 1 <= a <= a_max and
/// |b| <= b_max, and t0^b != 1 for 1 <= |b| <= b_max.
pub fn is_generic_point(q0: &BigRational, t0: &BigRational, a_max: u32, b_max: u32) -> bool {
    let one = BigRational::one();
    if q0 == &one || q0.is_zero() || t0.is_zero() {
        return false;
    }
    let rat_pow = |x: &BigRational, e: i64| -> BigRational {
        let p = num::pow::pow(x.clone(), e.unsigned_abs() as usize);
        if e < 0 {
            p.recip()
        } else {
            p
        }
    };
    for b in 1..=b_max as i64 {
        if rat_pow(t0, b) == one {
            return false;
        }
    }
    for a in 1..=a_max as i64 {
        let qa = rat_pow(q0, a);
        for b in -(b_max as i64)..=b_max as i64 {
            if qa.clone() * rat_pow(t0, b) == one {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(txt: &str) -> Scalar {
        Scalar::parse(txt).unwrap()
    }

    fn rat(txt: &str) -> BigRational {
        txt.parse().unwrap()
    }

    #[test]
    fn self_division_is_one() {
        let a = s("1 - q*t");
        assert!(a.checked_div(&a).unwrap().is_one());
    }

    #[test]
    fn additive_inverse() {
        let a = &s("q") + &s("t");
        assert_eq!(&a - &s("t"), s("q"));
    }

    #[test]
    fn division_by_zero_reported() {
        assert_eq!(
            s("1").checked_div(&Scalar::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn u_is_invariant_under_inversion() {
        // u(z) = u(1/z) for z = q t^2
        let z = Scalar::monomial(1, 2);
        let zi = Scalar::monomial(-1, -2);
        assert_eq!(u_factor(&z).unwrap(), u_factor(&zi).unwrap());
        let z = Scalar::monomial(1, 1);
        let zi = Scalar::monomial(-1, -1);
        assert_eq!(u_factor(&z).unwrap(), u_factor(&zi).unwrap());
    }

    #[test]
    fn u_at_t_inverse_squared() {
        let got = u_factor(&Scalar::monomial(0, -2)).unwrap();
        assert_eq!(got, s("(t*(t^3 - 1)*(t - 1))/((t^2 - 1)^2)"));
    }

    #[test]
    fn u_vanishes_at_t() {
        assert!(u_factor(&Scalar::t()).unwrap().is_zero());
    }

    #[test]
    fn u_pole_at_one() {
        assert_eq!(u_factor(&Scalar::one()), Err(Error::PoleAtOne));
    }

    #[test]
    fn substitute_forced_cancellation() {
        // 1 - q t^-3 at q = t^3
        let a = &Scalar::one() - &Scalar::monomial(1, -3);
        assert!(a.substitute_q(3).unwrap().is_zero());
    }

    #[test]
    fn substitute_u_on_curve() {
        // u(q t^-2) vanishes on q = t^3 because the argument becomes t.
        // Cross-checked numerically: at (q0,t0) = (8,2) the argument is 2 and
        // u(2) = (2-2)(1-4)/(1-2)^2 = 0.
        let a = u_factor(&Scalar::monomial(1, -2)).unwrap();
        assert_eq!(
            a.eval(&rat("8"), &rat("2")).unwrap(),
            BigRational::zero()
        );
        assert!(a.substitute_q(3).unwrap().is_zero());
    }

    #[test]
    fn substitute_pole_on_curve() {
        let a = (&Scalar::one() - &Scalar::monomial(1, -3)).inv();
        assert_eq!(a.substitute_q(3), Err(Error::IdenticallyZeroDenominator(3)));
    }

    #[test]
    fn substitute_matches_eval() {
        // wherever both sides are defined they agree
        let a = u_factor(&Scalar::monomial(1, -2)).unwrap();
        let mut checked = 0;
        for e in [-3i64, -1, 1, 2, 3] {
            let sub = match a.substitute_q(e) {
                Ok(s) => s,
                Err(_) => continue, // genuine pole on the curve
            };
            for t0 in ["2", "3/2", "5"] {
                let t0 = rat(t0);
                let q0 = num::pow::pow(t0.clone(), e.unsigned_abs() as usize);
                let q0 = if e < 0 { q0.recip() } else { q0 };
                if let (Ok(lhs), Ok(rhs)) = (sub.eval(&t0), a.eval(&q0, &t0)) {
                    assert_eq!(lhs, rhs);
                    checked += 1;
                }
            }
        }
        assert!(checked >= 9);
    }

    #[test]
    fn eval_simple() {
        assert_eq!(
            (&s("q") + &s("t")).eval(&rat("1/2"), &rat("2")).unwrap(),
            rat("5/2")
        );
    }

    #[test]
    fn eval_u_at_two() {
        // u(t^-2) at t = 2: (2 - 1/4)(1 - 1/2)/(1 - 1/4)^2 = 14/9
        let a = u_factor(&Scalar::monomial(0, -2)).unwrap();
        assert_eq!(a.eval(&rat("7"), &rat("2")).unwrap(), rat("14/9"));
    }

    #[test]
    fn eval_pole() {
        let a = (&Scalar::one() - &Scalar::q()).inv();
        assert_eq!(a.eval(&rat("1"), &rat("2")), Err(Error::DenominatorZeroAtPoint));
    }

    #[test]
    fn generic_point_checks() {
        assert!(!is_generic_point(&rat("1/2"), &rat("2"), 3, 2)); // q t = 1
        assert!(is_generic_point(&rat("1/3"), &rat("2"), 3, 2));
        assert!(!is_generic_point(&rat("1"), &rat("2"), 3, 2)); // q = 1
        assert!(!is_generic_point(&rat("1/3"), &rat("1"), 3, 2)); // t^b = 1
    }

    #[test]
    fn display_round_trip() {
        for txt in [
            "0",
            "1",
            "-1 + q*t",
            "(1 - q*t^3)/(1 - q*t)",
            "(t*(t^3 - 1)*(t - 1))/((t^2 - 1)^2)",
            "(2*q^2 - 3*t)/(5 + q)",
        ] {
            let a = s(txt);
            assert_eq!(s(&a.to_string()), a);
        }
    }

    #[test]
    fn canonical_display_shape() {
        let a = s("(1 - q*t^3)/(1 - q*t)");
        assert_eq!(a.to_string(), "(1 - q*t^3)/(1 - q*t)");
    }

    #[test]
    fn sign_normalization() {
        let a = s("(q - 1)/(t - 1)");
        // denominator's lowest graded-lex coefficient must be positive
        assert_eq!(a.to_string(), "(1 - q)/(1 - t)");
    }
}

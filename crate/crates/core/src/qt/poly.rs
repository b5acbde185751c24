//! Integer-coefficient polynomials in t and in (q,t), with exact GCDs.
//!
//! `QtPoly` stores only nonnegative exponents; Laurent data lives in the
//! fraction layer above. The bivariate GCD reads a polynomial as univariate
//! in q over Z[t] and runs a primitive pseudo-remainder sequence.

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent pair ordered graded-lex: total degree first, then q-degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mono {
    pub dq: u32,
    pub dt: u32,
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.dq + self.dt, self.dq).cmp(&(other.dq + other.dt, other.dq))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Dense univariate integer polynomial in t. `coeffs[k]` is the coefficient
/// of t^k; the top coefficient is nonzero, the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TPoly {
    pub coeffs: Vec<BigInt>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            TPoly::zero()
        } else {
            TPoly { coeffs: vec![c] }
        }
    }

    pub fn monomial(k: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        TPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn lowest(&self) -> &BigInt {
        self.coeffs
            .iter()
            .find(|c| !c.is_zero())
            .expect("lowest coefficient of zero polynomial")
    }

    pub fn neg(&self) -> Self {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            let b = other.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            coeffs.push(a + b);
        }
        let mut p = TPoly { coeffs };
        p.trim();
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        let mut p = TPoly { coeffs };
        p.trim();
        p
    }

    pub fn mul_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// GCD of the integer coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return TPoly::zero();
        }
        let c = self.content();
        TPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn divexact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return TPoly::zero();
        }
        let mut rem = self.clone();
        let dd = d.degree().unwrap();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let (quo, r) = rem.leading().div_rem(d.leading());
            assert!(r.is_zero(), "inexact t-polynomial division");
            let shift = rd - dd;
            q[shift] = quo.clone();
            let sub = d.mul(&TPoly::monomial(shift, quo));
            rem = rem.sub(&sub);
        }
        assert!(rem.is_zero(), "inexact t-polynomial division");
        let mut p = TPoly { coeffs: q };
        p.trim();
        p
    }

    /// Sloppy pseudo-remainder: repeatedly kills the leading term after
    /// scaling by the divisor's leading coefficient.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let mut rem = self.clone();
        let dd = d.degree().expect("pseudo_rem by zero");
        loop {
            match rem.degree() {
                Some(rd) if rd >= dd => {
                    let lead = rem.leading().clone();
                    rem = rem.mul_int(d.leading());
                    let sub = d.mul(&TPoly::monomial(rd - dd, lead));
                    rem = rem.sub(&sub);
                    debug_assert!(rem.degree().is_none_or(|x| x < rd));
                }
                _ => return rem,
            }
        }
    }

    /// Attempt exact division; None when a remainder is left.
    pub fn divexact_checked(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(TPoly::zero());
        }
        let dd = d.degree().unwrap();
        if self.degree().unwrap() < dd {
            return None;
        }
        let mut rem = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len() - dd];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let (quo, r) = rem.leading().div_rem(d.leading());
            if !r.is_zero() {
                return None;
            }
            let shift = rd - dd;
            q[shift] = quo.clone();
            let sub = d.mul(&TPoly::monomial(shift, quo));
            rem = rem.sub(&sub);
            if rem.is_zero() {
                let mut p = TPoly { coeffs: q };
                p.trim();
                return Some(p);
            }
        }
        None
    }

    /// GCD over Z[t], sign-normalized so the lowest coefficient is positive.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.sign_normalized();
        }
        if b.is_zero() {
            return a.sign_normalized();
        }
        let c = a.content().gcd(&b.content());
        let (mut f, mut g) = (a.primitive(), b.primitive());
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
        }
        // probabilistic coprimality pre-check: a degree-zero gcd of the
        // images mod a large prime proves the primitive parts coprime
        if modp::tpoly_images_coprime(&f, &g) {
            return TPoly::constant(c).sign_normalized();
        }
        if let Some(_q) = f.divexact_checked(&g) {
            return g.mul_int(&c).sign_normalized();
        }
        loop {
            let r = f.pseudo_rem(&g);
            if r.is_zero() {
                break;
            }
            f = g;
            g = r.primitive();
        }
        g.mul_int(&c).sign_normalized()
    }

    fn sign_normalized(&self) -> Self {
        if !self.is_zero() && self.lowest().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Multiply by t^k.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TPoly { coeffs }
    }

    pub fn eval(&self, t0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t0 + BigRational::from(c.clone());
        }
        acc
    }
}

/// Sparse integer polynomial in q and t with deterministic graded-lex term
/// order and no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QtPoly {
    pub terms: BTreeMap<Mono, BigInt>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        QtPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = QtPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Mono { dq: 0, dt: 0 }, c);
        }
        p
    }

    pub fn monomial(dq: u32, dt: u32, c: BigInt) -> Self {
        let mut p = QtPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Mono { dq, dt }, c);
        }
        p
    }

    pub fn var_q() -> Self {
        QtPoly::monomial(1, 0, BigInt::one())
    }

    pub fn var_t() -> Self {
        QtPoly::monomial(0, 1, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono { dq: 0, dt: 0 })
                .is_some_and(|c| c.is_one())
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.keys().map(|m| m.dq).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.keys().map(|m| m.dt).max().unwrap_or(0)
    }

    fn insert_add(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        QtPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QtPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(
                    Mono {
                        dq: ma.dq + mb.dq,
                        dt: ma.dt + mb.dt,
                    },
                    ca * cb,
                );
            }
        }
        out
    }

    /// Coefficient vector in q; entry k is the t-polynomial at q^k.
    fn q_coeffs(&self) -> Vec<TPoly> {
        let mut out = vec![TPoly::zero(); self.deg_q() as usize + 1];
        for (m, c) in &self.terms {
            let p = &mut out[m.dq as usize];
            let k = m.dt as usize;
            if p.coeffs.len() <= k {
                p.coeffs.resize(k + 1, BigInt::zero());
            }
            p.coeffs[k] = c.clone();
        }
        for p in &mut out {
            p.trim();
        }
        out
    }

    fn from_q_coeffs(coeffs: &[TPoly]) -> Self {
        let mut p = QtPoly::zero();
        for (k, tp) in coeffs.iter().enumerate() {
            for (j, c) in tp.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    p.terms.insert(
                        Mono {
                            dq: k as u32,
                            dt: j as u32,
                        },
                        c.clone(),
                    );
                }
            }
        }
        p
    }

    fn t_content(coeffs: &[TPoly]) -> TPoly {
        let mut g = TPoly::zero();
        for p in coeffs {
            g = TPoly::gcd(&g, p);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Pseudo-remainder in q over Z[t].
    fn pseudo_rem_q(f: &[TPoly], g: &[TPoly]) -> Vec<TPoly> {
        let mut rem: Vec<TPoly> = f.to_vec();
        let gd = g.len() - 1;
        let glead = &g[gd];
        loop {
            while rem.last().is_some_and(|p| p.is_zero()) {
                rem.pop();
            }
            if rem.len() <= gd {
                return rem;
            }
            let rd = rem.len() - 1;
            let rlead = rem[rd].clone();
            for p in rem.iter_mut() {
                *p = p.mul(glead);
            }
            let shift = rd - gd;
            for (k, gp) in g.iter().enumerate() {
                let cur = rem[k + shift].sub(&gp.mul(&rlead));
                rem[k + shift] = cur;
            }
            debug_assert!(rem[rd].is_zero());
        }
    }

    /// GCD with a single-term polynomial: minimum exponents and the content
    /// gcd.
    fn gcd_with_monomial(mono: &Self, other: &Self) -> Self {
        let (m, c) = mono.terms.iter().next().expect("nonzero monomial");
        let dq = other.terms.keys().map(|k| k.dq).min().unwrap().min(m.dq);
        let dt = other.terms.keys().map(|k| k.dt).min().unwrap().min(m.dt);
        let mut g = c.abs();
        for v in other.terms.values() {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        QtPoly::monomial(dq, dt, g)
    }

    /// GCD over Z[q,t] including integer content, lowest graded-lex
    /// coefficient positive.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.sign_normalized();
        }
        if b.is_zero() {
            return a.sign_normalized();
        }
        if a.terms.len() == 1 {
            return Self::gcd_with_monomial(a, b);
        }
        if b.terms.len() == 1 {
            return Self::gcd_with_monomial(b, a);
        }
        let ac = a.q_coeffs();
        let bc = b.q_coeffs();
        let cont_a = Self::t_content(&ac);
        let cont_b = Self::t_content(&bc);
        let cont = TPoly::gcd(&cont_a, &cont_b);
        if ac.len() == 1 || bc.len() == 1 {
            // one side is free of q: gcd is a t-polynomial
            return Self::from_q_coeffs(&[cont]).sign_normalized();
        }
        let pp = |coeffs: &[TPoly], cont: &TPoly| -> Vec<TPoly> {
            coeffs.iter().map(|p| p.divexact(cont)).collect()
        };
        let mut f = pp(&ac, &cont_a);
        let mut g = pp(&bc, &cont_b);
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
        }
        // probabilistic pre-check on images mod a large prime: coprime
        // images prove the primitive parts coprime in q
        if modp::qpoly_images_coprime(&f, &g) {
            return Self::from_q_coeffs(&[cont]).sign_normalized();
        }
        loop {
            let mut r = Self::pseudo_rem_q(&f, &g);
            while r.last().is_some_and(|p| p.is_zero()) {
                r.pop();
            }
            if r.is_empty() {
                break;
            }
            if r.len() == 1 {
                // coprime primitive parts
                return Self::from_q_coeffs(&[cont]).sign_normalized();
            }
            let rc = Self::t_content(&r);
            f = g;
            g = r.iter().map(|p| p.divexact(&rc)).collect();
        }
        let gc = Self::t_content(&g);
        let prim: Vec<TPoly> = g.iter().map(|p| p.divexact(&gc)).collect();
        let mut out = Self::from_q_coeffs(&prim);
        out = out.mul(&Self::from_q_coeffs(&[cont]));
        out.sign_normalized()
    }

    /// Exact division; panics if not exact.
    pub fn divexact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return QtPoly::zero();
        }
        if d.is_one() {
            return self.clone();
        }
        let dc = d.q_coeffs();
        if dc.len() == 1 {
            let tp = &dc[0];
            let sc = self.q_coeffs();
            let out: Vec<TPoly> = sc.iter().map(|p| p.divexact(tp)).collect();
            return Self::from_q_coeffs(&out);
        }
        let mut rem = self.q_coeffs();
        let gd = dc.len() - 1;
        let mut quo = vec![TPoly::zero(); rem.len().saturating_sub(gd)];
        loop {
            while rem.last().is_some_and(|p| p.is_zero()) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
            let rd = rem.len() - 1;
            assert!(rd >= gd, "inexact qt-polynomial division");
            let qc = rem[rd].divexact(&dc[gd]);
            let shift = rd - gd;
            for (k, dp) in dc.iter().enumerate() {
                let cur = rem[k + shift].sub(&dp.mul(&qc));
                rem[k + shift] = cur;
            }
            assert!(rem[rd].is_zero(), "inexact qt-polynomial division");
            quo[shift] = qc;
            rem.pop();
        }
        Self::from_q_coeffs(&quo)
    }

    /// First coefficient in ascending graded-lex order.
    pub fn lowest_coeff(&self) -> &BigInt {
        self.terms
            .values()
            .next()
            .expect("lowest coefficient of zero polynomial")
    }

    pub fn sign_normalized(&self) -> Self {
        if !self.is_zero() && self.lowest_coeff().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut qpow: BTreeMap<u32, BigRational> = BTreeMap::new();
        let mut tpow: BTreeMap<u32, BigRational> = BTreeMap::new();
        let pow = |cache: &mut BTreeMap<u32, BigRational>, base: &BigRational, e: u32| {
            cache
                .entry(e)
                .or_insert_with(|| num::pow::pow(base.clone(), e as usize))
                .clone()
        };
        for (m, c) in &self.terms {
            acc += BigRational::from(c.clone())
                * pow(&mut qpow, q0, m.dq)
                * pow(&mut tpow, t0, m.dt);
        }
        acc
    }

    /// Substitute q -> t^e; the result is Laurent in t, returned as a map
    /// from (possibly negative) exponents to coefficients.
    pub fn substitute_q_power(&self, e: i64) -> BTreeMap<i64, BigInt> {
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.dq as i64 * e + m.dt as i64;
            let entry = out.entry(k).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(&k);
            }
        }
        out
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, &mut first, c, 0, k as u32)?;
        }
        Ok(())
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            write_term(f, &mut first, c, m.dq, m.dt)?;
        }
        Ok(())
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    c: &BigInt,
    dq: u32,
    dt: u32,
) -> fmt::Result {
    let neg = c.sign() == Sign::Minus;
    if *first {
        if neg {
            write!(f, "-")?;
        }
        *first = false;
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let mag = c.magnitude();
    let mut wrote = false;
    if !mag.is_one() || (dq == 0 && dt == 0) {
        write!(f, "{}", mag)?;
        wrote = true;
    }
    for (name, d) in [("q", dq), ("t", dt)] {
        if d == 0 {
            continue;
        }
        if wrote {
            write!(f, "*")?;
        }
        if d == 1 {
            write!(f, "{}", name)?;
        } else {
            write!(f, "{}^{}", name, d)?;
        }
        wrote = true;
    }
    Ok(())
}

/// Coprimality pre-checks over F_p with p = 2^61 - 1. Images can only
/// enlarge a gcd, so a degree-zero image gcd (with nonvanishing leading
/// coefficients) is a proof of coprimality; anything else falls back to the
/// exact remainder sequence.
mod modp {
    use super::TPoly;
    use num::{BigInt, Signed, Zero};

    const P: u64 = (1 << 61) - 1;

    fn mulmod(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn reduce_bigint(x: &BigInt) -> u64 {
        let m = x.magnitude() % num::BigUint::from(P);
        let v = m.to_u64_digits().first().copied().unwrap_or(0);
        if x.is_negative() && v != 0 {
            P - v
        } else {
            v
        }
    }

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    /// Degree of gcd of two univariate images, None if either leading
    /// coefficient vanished in the image.
    fn gcd_degree(mut f: Vec<u64>, mut g: Vec<u64>, lead_ok: bool) -> Option<usize> {
        if !lead_ok {
            return None;
        }
        trim(&mut f);
        trim(&mut g);
        while !g.is_empty() {
            // f mod g via synthetic division with inverse-free scaling
            let gl = *g.last().unwrap();
            let gl_inv = modinv(gl);
            while f.len() >= g.len() && !f.is_empty() {
                let fl = *f.last().unwrap();
                if fl == 0 {
                    f.pop();
                    continue;
                }
                let c = mulmod(fl, gl_inv);
                let shift = f.len() - g.len();
                for (k, gv) in g.iter().enumerate() {
                    let sub = mulmod(c, *gv);
                    let idx = k + shift;
                    f[idx] = (f[idx] + P - sub) % P;
                }
                trim(&mut f);
            }
            std::mem::swap(&mut f, &mut g);
            trim(&mut g);
        }
        Some(f.len().saturating_sub(1))
    }

    fn modinv(a: u64) -> u64 {
        // Fermat: a^(P-2) mod P
        let mut base = a % P;
        let mut e = P - 2;
        let mut acc: u64 = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            e >>= 1;
        }
        acc
    }

    pub(super) fn tpoly_images_coprime(f: &TPoly, g: &TPoly) -> bool {
        let fi: Vec<u64> = f.coeffs.iter().map(reduce_bigint).collect();
        let gi: Vec<u64> = g.coeffs.iter().map(reduce_bigint).collect();
        let lead_ok = fi.last().is_some_and(|&c| c != 0)
            && gi.last().is_some_and(|&c| c != 0);
        matches!(gcd_degree(fi, gi, lead_ok), Some(0))
    }

    /// Evaluate t at a fixed point mod p and test the q-images.
    pub(super) fn qpoly_images_coprime(f: &[TPoly], g: &[TPoly]) -> bool {
        const T0: u64 = 7919;
        let eval = |p: &TPoly| -> u64 {
            let mut acc: u64 = 0;
            for c in p.coeffs.iter().rev() {
                acc = (mulmod(acc, T0) + reduce_bigint(c)) % P;
            }
            acc
        };
        let fi: Vec<u64> = f.iter().map(eval).collect();
        let gi: Vec<u64> = g.iter().map(eval).collect();
        let lead_ok = fi.last().is_some_and(|&c| c != 0)
            && gi.last().is_some_and(|&c| c != 0);
        matches!(gcd_degree(fi, gi, lead_ok), Some(0))
    }

    #[allow(dead_code)]
    fn is_zero_poly(p: &TPoly) -> bool {
        p.coeffs.iter().all(|c| c.is_zero())
    }
}

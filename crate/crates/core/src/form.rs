//! The symmetric bilinear form on P (x) V_tau: closed-form norms of the
//! Macdonald basis, expansion of arbitrary polynomials in that basis,
//! adjointness verification, the degree-reduction operators, and the exact
//! (q,t) positivity-region classifier.
//!
//! The form is defined the way it is derived: by the partition norm
//! formula, the ratio E(alpha,S), and orthogonality of the basis. The
//! adjointness statements are then verified as finite matrix identities.

use crate::combinat::{rank_vector, sort_desc, Composition};
use crate::graph::GraphBuilder;
use crate::hecke::ModuleData;
use crate::linalg::{solve_left, Matrix};
use crate::poly::{GradedBasis, Operators, VVPoly};
use crate::qt::Scalar;
use crate::{Error, Result};
use num::{BigRational, One, Signed};
use std::collections::BTreeMap;

/// (z; q)_n = prod_{l=0}^{n-1} (1 - z q^l).
pub fn pochhammer(z: &Scalar, n: u32) -> Scalar {
    let mut acc = Scalar::one();
    for l in 0..n {
        let f = &Scalar::one() - &(z * &Scalar::monomial(l as i64, 0));
        acc = &acc * &f;
    }
    acc
}

/// A product of factors (1 - q^a t^b) with a sign and a Laurent monomial in
/// front. The norm formulas live entirely in this shape, so building them
/// here cancels everything factor-by-factor and the single expansion at the
/// end stays small.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    negative: bool,
    q_exp: i64,
    t_exp: i64,
    /// (a, b) -> multiplicity for the factor 1 - q^a t^b, normalized so
    /// that a > 0, or a = 0 and b > 0.
    factors: BTreeMap<(u32, i64), i64>,
}

impl Factored {
    pub fn one() -> Self {
        Factored {
            negative: false,
            q_exp: 0,
            t_exp: 0,
            factors: BTreeMap::new(),
        }
    }

    pub fn mul_monomial(&mut self, dq: i64, dt: i64) {
        self.q_exp += dq;
        self.t_exp += dt;
    }

    /// Multiply by (1 - q^a t^b)^mult after normalizing the factor.
    pub fn mul_factor(&mut self, a: i64, b: i64, mult: i64) {
        if mult == 0 {
            return;
        }
        let (a, b) = if a > 0 || (a == 0 && b > 0) {
            (a, b)
        } else {
            assert!(
                !(a == 0 && b == 0),
                "vanishing factor 1 - q^0 t^0 in a norm product"
            );
            // 1 - q^a t^b = -q^a t^b (1 - q^-a t^-b)
            self.q_exp += a * mult;
            self.t_exp += b * mult;
            if mult % 2 != 0 {
                self.negative = !self.negative;
            }
            (-a, -b)
        };
        let e = self.factors.entry((a as u32, b)).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.factors.remove(&(a as u32, b));
        }
    }

    /// Multiply by u(q^a t^b)^mult
    /// = [t (1 - q^a t^{b-1})(1 - q^a t^{b+1}) / (1 - q^a t^b)^2]^mult.
    pub fn mul_u(&mut self, a: i64, b: i64, mult: i64) {
        self.t_exp += mult;
        self.mul_factor(a, b - 1, mult);
        self.mul_factor(a, b + 1, mult);
        self.mul_factor(a, b, -2 * mult);
    }

    /// Multiply by (z; q)_n^mult with z = q^a t^b.
    pub fn mul_pochhammer(&mut self, a: i64, b: i64, n: u32, mult: i64) {
        for l in 0..n as i64 {
            self.mul_factor(a + l, b, mult);
        }
    }

    pub fn mul(&mut self, other: &Factored) {
        self.negative ^= other.negative;
        self.q_exp += other.q_exp;
        self.t_exp += other.t_exp;
        for (&(a, b), &m) in &other.factors {
            self.mul_factor(a as i64, b, m);
        }
    }

    pub fn div(&mut self, other: &Factored) {
        self.negative ^= other.negative;
        self.q_exp -= other.q_exp;
        self.t_exp -= other.t_exp;
        for (&(a, b), &m) in &other.factors {
            self.mul_factor(a as i64, b, -m);
        }
    }

    /// Expand to a canonical scalar.
    pub fn to_scalar(&self) -> Scalar {
        let mut num = Scalar::monomial(self.q_exp, self.t_exp);
        if self.negative {
            num = -&num;
        }
        let mut den = Scalar::one();
        for (&(a, b), &m) in &self.factors {
            let f = &Scalar::one() - &Scalar::monomial(a as i64, b);
            let p = f.pow(m.unsigned_abs().min(i32::MAX as u64) as i32);
            if m > 0 {
                num = &num * &p;
            } else {
                den = &den * &p;
            }
        }
        num.checked_div(&den).expect("nonzero denominator factors")
    }

    /// Exact evaluation without expanding.
    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        let rat_pow = |x: &BigRational, e: i64| -> BigRational {
            let p = num::pow::pow(x.clone(), e.unsigned_abs() as usize);
            if e < 0 {
                p.recip()
            } else {
                p
            }
        };
        let mut acc = rat_pow(q0, self.q_exp) * rat_pow(t0, self.t_exp);
        if self.negative {
            acc = -acc;
        }
        for (&(a, b), &m) in &self.factors {
            let f = BigRational::one() - rat_pow(q0, a as i64) * rat_pow(t0, b);
            if f == BigRational::from_integer(0.into()) {
                if m < 0 {
                    return Err(Error::DenominatorZeroAtPoint);
                }
                return Ok(BigRational::from_integer(0.into()));
            }
            acc *= rat_pow(&f, m);
        }
        Ok(acc)
    }

    /// True iff some factor with positive multiplicity vanishes on q = t^e,
    /// i.e. the value is identically zero on the curve.
    pub fn vanishes_on_curve(&self, e: i64) -> bool {
        self.factors
            .iter()
            .any(|(&(a, b), &m)| m > 0 && a as i64 * e + b == 0)
    }
}

/// Hook product over the cells of a partition:
/// prod (1 - z q^{arm} t^{leg}).
pub fn hook_product(lambda: &[u32], z: &Scalar) -> Scalar {
    let positive: Vec<u32> = lambda.iter().copied().filter(|&p| p > 0).collect();
    if positive.is_empty() {
        return Scalar::one();
    }
    let shape = crate::combinat::Shape::new(positive).expect("partition");
    let mut acc = Scalar::one();
    for (r, c) in shape.cells() {
        let arm = shape.arm(r, c) as i64;
        let leg = shape.leg(r, c) as i64;
        let f = &Scalar::one() - &(z * &Scalar::monomial(arm, leg));
        acc = &acc * &f;
    }
    acc
}

/// Generalized (q,t) factorial (z; q,t)_lambda = prod_i (z t^{1-i}; q)_{lambda_i}.
pub fn qt_factorial(z: &Scalar, lambda: &[u32]) -> Scalar {
    let mut acc = Scalar::one();
    for (idx, &l) in lambda.iter().enumerate() {
        let zi = z * &Scalar::monomial(0, -(idx as i64));
        acc = &acc * &pochhammer(&zi, l);
    }
    acc
}

/// E(alpha,S) in factored form: the product over inversion pairs of
/// u(q^{alpha_j - alpha_i} t^{c(r(j),S) - c(r(i),S)}); exactly inv(alpha)
/// u-factors.
pub fn e_product_factored(md: &ModuleData, alpha: &[u32], tab: usize) -> Factored {
    let comp = Composition::new(alpha.to_vec());
    let ranks = rank_vector(&comp);
    let s = md.tableau(tab);
    let mut acc = Factored::one();
    for i in 0..alpha.len() {
        for j in i + 1..alpha.len() {
            if alpha[i] < alpha[j] {
                let dq = (alpha[j] - alpha[i]) as i64;
                let dt = (s.content_of(ranks[j]) - s.content_of(ranks[i])) as i64;
                acc.mul_u(dq, dt, 1);
            }
        }
    }
    acc
}

pub fn e_product(md: &ModuleData, alpha: &[u32], tab: usize) -> Scalar {
    e_product_factored(md, alpha, tab).to_scalar()
}

/// ||S||_0^2 as a factored product of u-values at content differences.
pub fn norm0_factored(md: &ModuleData, tab: usize) -> Factored {
    let c = md.tableau(tab).content_vector();
    let mut acc = Factored::one();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            if c[j] - c[i] >= 2 {
                acc.mul_u(0, (c[i] - c[j]) as i64, 1);
            }
        }
    }
    acc
}

/// Closed-form norm of M_{lambda,S} for a partition lambda, factored:
/// t^{k(lambda)} ||S||_0^2 (1-q)^{-|lambda|} prod_i (q t^{c(i,S)}; q)_{lambda_i}
/// times the pair product over i < j.
pub fn norm_partition_vv_factored(md: &ModuleData, lambda: &[u32], tab: usize) -> Factored {
    assert!(
        lambda.windows(2).all(|w| w[0] >= w[1]),
        "norm_partition_vv needs a partition"
    );
    let n = md.n();
    assert_eq!(lambda.len(), n);
    let s = md.tableau(tab);
    let mut acc = norm0_factored(md, tab);
    acc.mul_monomial(0, crate::combinat::k_lambda(lambda));
    let weight: i64 = lambda.iter().map(|&x| x as i64).sum();
    acc.mul_factor(1, 0, -weight);
    for (idx, &l) in lambda.iter().enumerate() {
        acc.mul_pochhammer(1, s.content_of(idx + 1) as i64, l, 1);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let diff = lambda[i - 1] - lambda[j - 1];
            if diff == 0 {
                continue;
            }
            let dc = (s.content_of(i) - s.content_of(j)) as i64;
            acc.mul_pochhammer(1, dc - 1, diff, 1);
            acc.mul_pochhammer(1, dc + 1, diff, 1);
            acc.mul_pochhammer(1, dc, diff, -2);
        }
    }
    acc
}

pub fn norm_partition_vv(md: &ModuleData, lambda: &[u32], tab: usize) -> Scalar {
    norm_partition_vv_factored(md, lambda, tab).to_scalar()
}

/// Scalar norm formula for the single-row shape:
/// t^{k(lambda)} h(lambda;q)/h(lambda;qt) (q t^N; q,t)_lambda / (1-q)^{|lambda|}.
pub fn norm_partition_scalar(lambda: &[u32]) -> Scalar {
    assert!(
        lambda.windows(2).all(|w| w[0] >= w[1]),
        "norm_partition_scalar needs a partition"
    );
    let n = lambda.len() as i64;
    let mut acc = Factored::one();
    acc.mul_monomial(0, crate::combinat::k_lambda(lambda));
    let positive: Vec<u32> = lambda.iter().copied().filter(|&p| p > 0).collect();
    if !positive.is_empty() {
        let shape = crate::combinat::Shape::new(positive).expect("partition");
        for (r, c) in shape.cells() {
            let arm = shape.arm(r, c) as i64;
            let leg = shape.leg(r, c) as i64;
            // h(lambda; q) / h(lambda; qt)
            acc.mul_factor(1 + arm, leg, 1);
            acc.mul_factor(1 + arm, leg + 1, -1);
        }
    }
    // (q t^N; q,t)_lambda
    for (idx, &l) in lambda.iter().enumerate() {
        acc.mul_pochhammer(1, n - idx as i64, l, 1);
    }
    let weight: i64 = lambda.iter().map(|&x| x as i64).sum();
    acc.mul_factor(1, 0, -weight);
    acc.to_scalar()
}

/// ||M_{alpha,S}||^2 = E(alpha,S)^{-1} ||M_{alpha+,S}||^2, factored.
pub fn norm_factored(md: &ModuleData, alpha: &[u32], tab: usize) -> Factored {
    let sorted = sort_desc(&Composition::new(alpha.to_vec()));
    let mut acc = norm_partition_vv_factored(md, &sorted.0, tab);
    acc.div(&e_product_factored(md, alpha, tab));
    acc
}

pub fn norm(md: &ModuleData, alpha: &[u32], tab: usize) -> Scalar {
    norm_factored(md, alpha, tab).to_scalar()
}

/// Expansion of a polynomial in the Macdonald basis: a list of
/// ((alpha, tableau index), coefficient) pairs in deterministic order.
pub fn expand_in_macdonald(
    gb: &GraphBuilder,
    f: &VVPoly,
) -> Vec<((Vec<u32>, usize), Scalar)> {
    let md = gb.module();
    let dim = md.dim();
    let mut out: BTreeMap<(Vec<u32>, usize), Scalar> = BTreeMap::new();
    let mut rem = f.clone();
    while !rem.is_zero() {
        // a triangle-maximal exponent among the remaining terms
        let keys = rem.exponents_desc();
        let mut beta = keys[0].clone();
        for cand in &keys {
            let cmp = crate::combinat::triangle_compare(
                &Composition::new(cand.clone()),
                &Composition::new(beta.clone()),
            )
            .expect("equal lengths");
            if cmp == crate::combinat::TriangleOrd::Greater {
                beta = cand.clone();
            }
        }
        let v = rem.coeff(&beta);
        let nodes: Vec<_> = (0..dim).map(|tab| gb.node(&beta, tab)).collect();
        // rows: leading coefficient vectors of the nodes with exponent beta
        let lead = Matrix::from_rows(
            nodes
                .iter()
                .map(|node| {
                    let lv = node.poly.coeff(&beta);
                    (0..dim).map(|s| lv.get(s)).collect()
                })
                .collect(),
        );
        let rhs: Vec<Scalar> = (0..dim).map(|s| v.get(s)).collect();
        let coeffs = solve_left(&lead, &rhs).expect("leading matrix invertible");
        for (tab, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            rem = rem.sub(&nodes[tab].poly.scaled(c));
            let entry = out
                .entry((beta.clone(), tab))
                .or_insert_with(Scalar::zero);
            *entry = &*entry + c;
        }
        assert!(rem.coeff(&beta).is_zero(), "leading term did not cancel");
    }
    out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// The symmetric bilinear form via orthogonal expansion.
pub fn form_eval(gb: &GraphBuilder, f: &VVPoly, g: &VVPoly) -> Scalar {
    if f.is_zero() || g.is_zero() {
        return Scalar::zero();
    }
    let fe = expand_in_macdonald(gb, f);
    let ge: BTreeMap<(Vec<u32>, usize), Scalar> =
        expand_in_macdonald(gb, g).into_iter().collect();
    let md = gb.module();
    let mut acc = Scalar::zero();
    for (key, cf) in fe {
        if let Some(cg) = ge.get(&key) {
            let nrm = norm(md, &key.0, key.1);
            acc = &acc + &(&(&cf * cg) * &nrm);
        }
    }
    acc
}

/// Gram matrix of the monomial (x) tableau basis of one graded component.
#[allow(clippy::needless_range_loop)]
pub fn gram_matrix(gb: &GraphBuilder, basis: &GradedBasis) -> Matrix {
    let md = gb.module();
    let dim = basis.dim();
    // expansion matrix C: rows basis elements, cols node keys
    let mut keys: Vec<(Vec<u32>, usize)> = Vec::new();
    for m in &basis.monomials {
        for tab in 0..md.dim() {
            keys.push((m.clone(), tab));
        }
    }
    let index: BTreeMap<(Vec<u32>, usize), usize> = keys
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect();
    let mut c = Matrix::zeros(dim, keys.len());
    for r in 0..dim {
        for (key, coeff) in expand_in_macdonald(gb, &basis.element(r)) {
            *c.at_mut(r, index[&key]) = coeff;
        }
    }
    let norms: Vec<Scalar> = keys.iter().map(|(a, tab)| norm(md, a, *tab)).collect();
    let mut scaled = c.clone();
    for r in 0..dim {
        for k in 0..keys.len() {
            let val = scaled.at(r, k) * &norms[k];
            *scaled.at_mut(r, k) = val;
        }
    }
    scaled.mul(&c.transpose())
}

/// The degree-preserving reduction operators of the adjoint recursion,
/// built on one graded component. `a[i-1][j-1]` and `b[i-1][j-1]` hold
/// A_{i,j} and B_{i,j} for 1 <= i <= j <= N.
pub struct ReductionOps {
    pub a: Vec<Vec<Option<Matrix>>>,
    pub b: Vec<Vec<Option<Matrix>>>,
}

/// Build A_{i,j}, B_{i,j} on the degree-(n-1) component:
/// A_{N,N} = (1-q) w* w, A_{k,k} = (1/t) T_k A_{k+1,k+1} T_k,
/// A_{k,k+1} = ((t-1)/t) T_k A_{k+1,k+1}, A_{k,j} = (1/t) T_k A_{k+1,j} T_k,
/// B_{k,k} = A_{k,k}^{-1}, B_{k,m} = -sum_j A_{k,k}^{-1} A_{k,j} B_{j,m}.
pub fn reduction_operators(gb: &GraphBuilder, basis: &GradedBasis) -> Result<ReductionOps> {
    let md = gb.module();
    let n = md.n();
    let ops = Operators::new(md);
    let tmat: Vec<Matrix> = (1..n)
        .map(|i| ops.matrix_of(|f| ops.hecke(f, i), basis, basis))
        .collect();
    let wmat = ops.matrix_of(|f| ops.shift(f), basis, basis);
    let wstar = ops.matrix_of(|f| ops.shift_star(f), basis, basis);
    let one_minus_q = &Scalar::one() - &Scalar::q();
    let t_inv = Scalar::monomial(0, -1);

    let mut a: Vec<Vec<Option<Matrix>>> = vec![vec![None; n]; n];
    a[n - 1][n - 1] = Some(wstar.mul(&wmat).scale(&one_minus_q));
    for k in (1..n).rev() {
        // row k built from row k+1 (1-based indices k, matrices tmat[k-1])
        let tk = &tmat[k - 1];
        let akk1 = a[k][k].clone().expect("previous diagonal");
        a[k - 1][k - 1] = Some(tk.mul(&akk1).mul(tk).scale(&t_inv));
        a[k - 1][k] = Some(
            tk.mul(&akk1)
                .scale(&(&(&Scalar::t() - &Scalar::one()) * &t_inv)),
        );
        for j in k + 2..=n {
            let akj = a[k][j - 1].clone().expect("previous row entry");
            a[k - 1][j - 1] = Some(tk.mul(&akj).mul(tk).scale(&t_inv));
        }
    }
    let mut b: Vec<Vec<Option<Matrix>>> = vec![vec![None; n]; n];
    for k in (1..=n).rev() {
        let akk = a[k - 1][k - 1].as_ref().unwrap();
        let akk_inv = akk.inverse().map_err(|_| Error::SingularAii(k))?;
        b[k - 1][k - 1] = Some(akk_inv.clone());
        for m in k + 1..=n {
            let mut acc = Matrix::zeros(basis.dim(), basis.dim());
            for j in k + 1..=m {
                let term = akk_inv
                    .mul(a[k - 1][j - 1].as_ref().unwrap())
                    .mul(b[j - 1][m - 1].as_ref().unwrap());
                acc = acc.add(&term);
            }
            b[k - 1][m - 1] = Some(acc.scale(&Scalar::from_int(-1)));
        }
    }
    Ok(ReductionOps { a, b })
}

/// Verify the two displayed identities of the reduction recursion between
/// degree n and degree n-1:
///   D_i G_lo = sum_j G_hi (A_{i,j} X_j)^T
///   G_hi X_i^T = sum_j D_j G_lo B_{i,j}^T
pub fn verify_reduction_identities(
    gb: &GraphBuilder,
    degree: u32,
) -> Result<()> {
    assert!(degree >= 1);
    let md = gb.module();
    let n = md.n();
    let ops = Operators::new(md);
    let hi = GradedBasis::new(md, degree);
    let lo = GradedBasis::new(md, degree - 1);
    let red = reduction_operators(gb, &lo)?;
    let g_hi = gram_matrix(gb, &hi);
    let g_lo = gram_matrix(gb, &lo);
    let d_mats: Vec<Matrix> = (1..=n)
        .map(|i| ops.matrix_of(|f| ops.dunkl(f, i), &hi, &lo))
        .collect();
    let x_mats: Vec<Matrix> = (1..=n)
        .map(|j| ops.matrix_of(|f| ops.mult_x(f, j), &lo, &hi))
        .collect();
    for i in 1..=n {
        let lhs = d_mats[i - 1].mul(&g_lo);
        let mut rhs = Matrix::zeros(hi.dim(), lo.dim());
        for j in i..=n {
            let aij = red.a[i - 1][j - 1].as_ref().unwrap();
            rhs = rhs.add(&g_hi.mul(&aij.mul(&x_mats[j - 1]).transpose()));
        }
        if lhs != rhs {
            return Err(Error::NonGenericParameters(format!(
                "reduction identity A fails at i = {}",
                i
            )));
        }
        let lhs2 = g_hi.mul(&x_mats[i - 1].transpose());
        let mut rhs2 = Matrix::zeros(hi.dim(), lo.dim());
        for j in i..=n {
            let bij = red.b[i - 1][j - 1].as_ref().unwrap();
            rhs2 = rhs2.add(&d_mats[j - 1].mul(&g_lo).mul(&bij.transpose()));
        }
        if lhs2 != rhs2 {
            return Err(Error::NonGenericParameters(format!(
                "reduction identity B fails at i = {}",
                i
            )));
        }
    }
    Ok(())
}

/// Where a parameter point sits relative to the positivity region of a
/// shape with maximal hook h.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RegionClass {
    Inside,
    Outside,
    Boundary,
}

impl std::fmt::Display for RegionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegionClass::Inside => write!(f, "inside"),
            RegionClass::Outside => write!(f, "outside"),
            RegionClass::Boundary => write!(f, "boundary"),
        }
    }
}

/// Exact classification: inside iff q < min(t^-h, t^h) or q > max(t^-h, t^h),
/// boundary iff q = t^h or q = t^-h.
pub fn positivity_classify(
    q0: &BigRational,
    t0: &BigRational,
    h: u32,
) -> Result<RegionClass> {
    let one = BigRational::one();
    if !q0.is_positive() || !t0.is_positive() {
        return Err(Error::InvalidParameters("q and t must be positive".into()));
    }
    if q0 == &one {
        return Err(Error::InvalidParameters("q must differ from 1".into()));
    }
    let th = num::pow::pow(t0.clone(), h as usize);
    let tmh = th.recip();
    if q0 == &th || q0 == &tmh {
        return Ok(RegionClass::Boundary);
    }
    let lo = th.clone().min(tmh.clone());
    let hi = th.max(tmh);
    if q0 < &lo || q0 > &hi {
        Ok(RegionClass::Inside)
    } else {
        Ok(RegionClass::Outside)
    }
}

/// Region classification tied to a shape. One-dimensional modules see only
/// one sign of content differences, so their region is one-sided: the
/// single row has q < min(1, t^-N) or q > max(1, t^-N), the single column
/// the mirror image with t^N; every other shape uses the two-sided region
/// cut out by the maximal hook.
pub fn positivity_classify_shape(
    shape: &crate::combinat::Shape,
    q0: &BigRational,
    t0: &BigRational,
) -> Result<RegionClass> {
    let one = BigRational::one();
    if !q0.is_positive() || !t0.is_positive() {
        return Err(Error::InvalidParameters("q and t must be positive".into()));
    }
    if q0 == &one {
        return Err(Error::InvalidParameters("q must differ from 1".into()));
    }
    let n = shape.size();
    let single_row = shape.ell() == 1;
    let single_col = shape.parts().iter().all(|&p| p == 1);
    if n >= 2 && (single_row || single_col) {
        let tn = num::pow::pow(t0.clone(), n);
        let edge = if single_row { tn.recip() } else { tn };
        if q0 == &edge {
            return Ok(RegionClass::Boundary);
        }
        let lo = one.clone().min(edge.clone());
        let hi = one.max(edge);
        return Ok(if q0 < &lo || q0 > &hi {
            RegionClass::Inside
        } else {
            RegionClass::Outside
        });
    }
    positivity_classify(q0, t0, shape.max_hook())
}

/// CSV samples of the positivity boundary in log10 coordinates: the curves
/// log q = +-h log t and the line q = 1.
pub fn region_boundary_csv(h: u32, log_range: f64, samples: u32) -> String {
    let mut out = String::from("log10_q,log10_t,curve_id\n");
    let k = samples as i64;
    let mut push = |lq: f64, lt: f64, id: &str| {
        out.push_str(&format!("{},{},{}\n", lq, lt, id));
    };
    for j in -k..=k {
        let s = log_range * j as f64 / k as f64;
        push(h as f64 * s, s, "q=t^h");
    }
    for j in -k..=k {
        let s = log_range * j as f64 / k as f64;
        push(-(h as f64) * s, s, "q=t^-h");
    }
    for j in -k..=k {
        let s = log_range * j as f64 / k as f64;
        push(0.0, s, "q=1");
    }
    out
}

//! Certification of singular polynomials: on the boundary curves
//! q = t^(+-h) the designated Macdonald polynomials are annihilated by all
//! Dunkl operators. A certificate records the per-operator residuals after
//! substituting the curve into the fully symbolic result; the polynomial is
//! built off the curve first so that every graph step stays generic.

use crate::graph::GraphBuilder;
use crate::hecke::ModuleData;
use crate::poly::{Operators, VVPoly};
use crate::qt::TScalar;
use crate::{Error, Result};
use serde::Serialize;
use std::sync::Arc;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Family {
    S0,
    S1,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::S0 => write!(f, "S0"),
            Family::S1 => write!(f, "S1"),
        }
    }
}

#[derive(Clone, Serialize)]
pub struct SingularCertificate {
    pub schema: u32,
    pub shape: Vec<u32>,
    pub alpha: Vec<u32>,
    pub tableau: Family,
    /// q = t^exponent on the certified curve.
    pub exponent: i64,
    /// Per-operator sum-of-squares residuals; all zero iff valid.
    pub residuals: Vec<TScalar>,
    pub valid: bool,
}

/// True iff the Dunkl operators D_j annihilate M_{alpha,S} for all
/// j > m, where m is the last position with alpha_m > 0 (generic check).
pub fn check_zero_diff(gb: &GraphBuilder, alpha: &[u32], tab: usize) -> bool {
    let ops = Operators::new(gb.module());
    let m = alpha.iter().rposition(|&a| a > 0).map_or(0, |p| p + 1);
    let node = gb.node(alpha, tab);
    (m + 1..=gb.module().n()).all(|j| ops.dunkl(&node.poly, j).is_zero())
}

/// Both sides of the iterated lowering identity
///   M_{alpha,S} D_m = t^{m-N} prod_{j=m}^{N-1} u(q t^{c(m,S)-c(j+1,S)})
///                     M_{alpha^{(N)},S} D_N T_{N-1} ... T_m
/// for alpha = (a_1,...,a_{m-1},1,0,...) with a_i >= 1 up to m.
pub fn iterated_u_sides(
    gb: &GraphBuilder,
    alpha: &[u32],
    tab: usize,
) -> Result<(VVPoly, VVPoly)> {
    let md = gb.module();
    let n = md.n();
    let m = match alpha.iter().rposition(|&a| a > 0) {
        Some(p) => p + 1,
        None => {
            return Err(Error::InvalidParameters(
                "composition must have a positive entry".into(),
            ))
        }
    };
    if alpha[m - 1] != 1 || alpha[..m].contains(&0) {
        return Err(Error::InvalidParameters(
            "pattern requires a_m = 1 and positive entries before it".into(),
        ));
    }
    let ops = Operators::new(md);
    let node = gb.node(alpha, tab);
    let lhs = ops.dunkl(&node.poly, m);

    let mut moved = alpha.to_vec();
    moved[m - 1] = 0;
    moved[n - 1] = 1;
    let node_moved = gb.node(&moved, tab);
    let mut rhs = ops.dunkl(&node_moved.poly, n);
    for j in (m..n).rev() {
        rhs = ops.hecke(&rhs, j);
    }
    let s = md.tableau(tab);
    let mut factor = crate::qt::Scalar::monomial(0, m as i64 - n as i64);
    for j in m..n {
        let z = crate::qt::Scalar::monomial(
            1,
            (s.content_of(m) - s.content_of(j + 1)) as i64,
        );
        factor = &factor * &crate::qt::u_factor(&z)?;
    }
    Ok((lhs, rhs.scaled(&factor)))
}

fn residual_of(f: &VVPoly, exponent: i64) -> Result<TScalar> {
    let mut acc = TScalar::zero();
    for (_, v) in f.terms() {
        for (_, c) in v.iter() {
            let sub = c.substitute_q(exponent).map_err(|e| match e {
                Error::IdenticallyZeroDenominator(_) => {
                    Error::SubstitutionPole(c.to_string())
                }
                other => other,
            })?;
            acc = acc.add(&sub.mul(&sub));
        }
    }
    Ok(acc)
}

fn certify(
    md: Arc<ModuleData>,
    family: Family,
    alpha: Vec<u32>,
    tab: usize,
    exponent: i64,
) -> Result<SingularCertificate> {
    let gb = GraphBuilder::new(md.clone());
    let ops = Operators::new(&md);
    let node = gb.node(&alpha, tab);
    let mut residuals = Vec::with_capacity(md.n());
    for i in 1..=md.n() {
        let image = ops.dunkl(&node.poly, i);
        residuals.push(residual_of(&image, exponent)?);
    }
    let valid = residuals.iter().all(|r| r.is_zero());
    Ok(SingularCertificate {
        schema: 1,
        shape: md.shape.parts().to_vec(),
        alpha,
        tableau: family,
        exponent,
        residuals,
        valid,
    })
}

/// Certificate for the row-filled family: alpha = (1^{tau_l}, 0^{N-tau_l})
/// with l = ell(tau), specialized to q = t^{h}.
pub fn certify_singular_s1(md: Arc<ModuleData>) -> Result<SingularCertificate> {
    if md.dim() < 2 {
        return Err(Error::InvalidParameters(
            "singular certification needs a module of dimension >= 2".into(),
        ));
    }
    let n = md.n();
    let ell = md.shape.ell();
    let m = md.shape.parts()[ell - 1] as usize;
    let mut alpha = vec![0u32; n];
    for a in alpha.iter_mut().take(m) {
        *a = 1;
    }
    let (_, s1) = md.extremal_indices();
    let h = md.shape.max_hook() as i64;
    certify(md, Family::S1, alpha, s1, h)
}

/// Certificate for the column-filled family: alpha = (1^m, 0^{N-m}) with m
/// the length of the last column, specialized to q = t^{-h}.
pub fn certify_singular_s0(md: Arc<ModuleData>) -> Result<SingularCertificate> {
    if md.dim() < 2 {
        return Err(Error::InvalidParameters(
            "singular certification needs a module of dimension >= 2".into(),
        ));
    }
    let n = md.n();
    let t1 = md.shape.parts()[0] as usize;
    let m = md.shape.transpose()[t1 - 1] as usize;
    let mut alpha = vec![0u32; n];
    for a in alpha.iter_mut().take(m) {
        *a = 1;
    }
    let (s0, _) = md.extremal_indices();
    let h = md.shape.max_hook() as i64;
    certify(md, Family::S0, alpha, s0, -h)
}

/// At generic (q,t) the certified polynomial is not annihilated by every
/// Dunkl operator.
pub fn generic_nonsingular(md: Arc<ModuleData>, family: Family) -> bool {
    let n = md.n();
    let (alpha, tab) = match family {
        Family::S1 => {
            let ell = md.shape.ell();
            let m = md.shape.parts()[ell - 1] as usize;
            let mut alpha = vec![0u32; n];
            for a in alpha.iter_mut().take(m) {
                *a = 1;
            }
            (alpha, md.extremal_indices().1)
        }
        Family::S0 => {
            let t1 = md.shape.parts()[0] as usize;
            let m = md.shape.transpose()[t1 - 1] as usize;
            let mut alpha = vec![0u32; n];
            for a in alpha.iter_mut().take(m) {
                *a = 1;
            }
            (alpha, md.extremal_indices().0)
        }
    };
    let gb = GraphBuilder::new(md.clone());
    let ops = Operators::new(&md);
    let node = gb.node(&alpha, tab);
    (1..=n).any(|i| !ops.dunkl(&node.poly, i).is_zero())
}

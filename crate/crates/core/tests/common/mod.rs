//! Shared test-only machinery: the triangular eigen-solve oracle that
//! extracts a Macdonald polynomial from the Cherednik matrices by exact
//! linear algebra, with no reference to the graph recursion.

use macdonald::graph::spectral_vector;
use macdonald::hecke::ModuleData;
use macdonald::linalg::Matrix;
use macdonald::poly::{GradedBasis, Operators, VVPoly};
use macdonald::qt::Scalar;

/// Solve the joint eigenproblem for the label (alpha, tab) on the graded
/// component of |alpha|: stack the shifted Cherednik matrices and compute
/// the left nullspace. Returns the unique eigenfunction up to scale.
pub fn eigen_solve(md: &ModuleData, alpha: &[u32], tab: usize) -> VVPoly {
    let n = md.n();
    let degree: u32 = alpha.iter().sum();
    let basis = GradedBasis::new(md, degree);
    let ops = Operators::new(md);
    let zeta = spectral_vector(md, alpha, tab);
    let dim = basis.dim();
    let mut stacked = Matrix::zeros(dim, dim * n);
    for (op_idx, &(a, b)) in zeta.iter().enumerate() {
        let xi = ops.matrix_of(|f| ops.cherednik(f, op_idx + 1), &basis, &basis);
        let eig = Scalar::monomial(a as i64, b as i64);
        for r in 0..dim {
            for c in 0..dim {
                let mut v = xi.at(r, c).clone();
                if r == c {
                    v = &v - &eig;
                }
                *stacked.at_mut(r, op_idx * dim + c) = v;
            }
        }
    }
    let null = stacked.left_nullspace();
    assert_eq!(
        null.len(),
        1,
        "joint eigenspace is not one-dimensional for {:?}",
        alpha
    );
    let v = &null[0];
    let mut out = VVPoly::zero(n);
    for (k, coeff) in v.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let (m, t) = (k / basis.dim_v, k % basis.dim_v);
        out.add_term(
            &basis.monomials[m],
            &macdonald::hecke::VModuleVector::basis(t).scaled(coeff),
        );
    }
    out
}

/// Equality up to one global scalar; returns the scale that maps `reference`
/// onto `candidate` when they span the same line.
pub fn proportional(candidate: &VVPoly, reference: &VVPoly) -> Option<Scalar> {
    if reference.is_zero() || candidate.is_zero() {
        return None;
    }
    let (e, v) = reference.terms().next()?;
    let (tab, base) = v.iter().next()?;
    let other = candidate.coeff(e).get(tab);
    if other.is_zero() {
        return None;
    }
    let scale = other.checked_div(base).ok()?;
    if candidate == &reference.scaled(&scale) {
        Some(scale)
    } else {
        None
    }
}

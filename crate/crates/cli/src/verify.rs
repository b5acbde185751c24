//! Verification suites behind `macd verify`: each runs a family of exact
//! identities at a bounded size and reports the first counterexample.

use macdonald::combinat::compositions_of;
use macdonald::form::{form_eval, gram_matrix, norm_factored, verify_reduction_identities};
use macdonald::qt::u_factor;
use macdonald::graph::{spectral_vector, GraphBuilder};
use macdonald::hecke::{ModuleData, VModuleVector};
use macdonald::linalg::Matrix;
use macdonald::poly::{GradedBasis, Operators};
use macdonald::qt::Scalar;
use std::sync::Arc;

pub type SuiteResult = Result<(), String>;

pub fn suite_hecke(md: &Arc<ModuleData>, max_degree: u32) -> SuiteResult {
    let n = md.n();
    let d = md.dim();
    let t = Scalar::t();
    for i in 1..n {
        let ti = md.gen_matrix(i);
        let quad = ti
            .add(&Matrix::identity(d))
            .mul(&ti.sub(&Matrix::identity(d).scale(&t)));
        if !quad.is_zero() {
            return Err(format!("quadratic relation fails for T_{}", i));
        }
    }
    for i in 1..n.saturating_sub(1) {
        let a = md.gen_matrix(i);
        let b = md.gen_matrix(i + 1);
        if a.mul(&b).mul(&a) != b.mul(&a).mul(&b) {
            return Err(format!("braid relation fails at i = {}", i));
        }
    }
    for i in 1..n {
        for j in i + 2..n {
            let a = md.gen_matrix(i);
            let b = md.gen_matrix(j);
            if a.mul(&b) != b.mul(&a) {
                return Err(format!("commutation fails for T_{}, T_{}", i, j));
            }
        }
    }
    // polynomial-level relations on each graded component
    let ops = Operators::new(md);
    for degree in 0..=max_degree {
        let basis = GradedBasis::new(md, degree);
        for k in 0..basis.dim() {
            let f = basis.element(k);
            for i in 1..n {
                let tf = ops.hecke(&f, i);
                let lhs = ops
                    .hecke(&tf, i)
                    .add(&tf)
                    .sub(&tf.scaled(&t))
                    .sub(&f.scaled(&t));
                if !lhs.is_zero() {
                    return Err(format!(
                        "polynomial quadratic relation fails at degree {} i = {}",
                        degree, i
                    ));
                }
            }
            for i in 1..n.saturating_sub(1) {
                let a = ops.hecke(&ops.hecke(&ops.hecke(&f, i), i + 1), i);
                let b = ops.hecke(&ops.hecke(&ops.hecke(&f, i + 1), i), i + 1);
                if a != b {
                    return Err(format!(
                        "polynomial braid relation fails at degree {} i = {}",
                        degree, i
                    ));
                }
            }
        }
    }
    Ok(())
}

pub fn suite_jm(md: &Arc<ModuleData>) -> SuiteResult {
    let n = md.n();
    for i in 1..=n {
        for j in i + 1..=n {
            let a = md.jucys_murphy_matrix(i);
            let b = md.jucys_murphy_matrix(j);
            if a.mul(&b) != b.mul(&a) {
                return Err(format!("phi_{} and phi_{} do not commute", i, j));
            }
        }
    }
    for (idx, tab) in md.tableaux().iter().enumerate() {
        for i in 1..=n {
            let got = md.jucys_murphy(&VModuleVector::basis(idx), i);
            let want = VModuleVector::basis(idx)
                .scaled(&Scalar::monomial(0, tab.content_of(i) as i64));
            if got != want {
                return Err(format!(
                    "phi_{} eigenvalue fails on tableau {}",
                    i,
                    tab.serialize()
                ));
            }
        }
    }
    Ok(())
}

pub fn suite_operators(md: &Arc<ModuleData>, max_degree: u32) -> SuiteResult {
    let n = md.n();
    let ops = Operators::new(md);
    for degree in 0..=max_degree {
        let basis = GradedBasis::new(md, degree);
        for k in 0..basis.dim() {
            let f = basis.element(k);
            for i in 1..=n {
                for j in i + 1..=n {
                    let a = ops.cherednik(&ops.cherednik(&f, i), j);
                    let b = ops.cherednik(&ops.cherednik(&f, j), i);
                    if a != b {
                        return Err(format!(
                            "xi_{} and xi_{} do not commute at degree {}",
                            i, j, degree
                        ));
                    }
                }
            }
            for i in 1..n {
                let lhs = ops.cherednik(&f, i);
                let rhs = ops
                    .hecke(&ops.cherednik(&ops.hecke(&f, i), i + 1), i)
                    .scaled(&Scalar::monomial(0, -1));
                if lhs != rhs {
                    return Err(format!("xi recursion fails at i = {}", i));
                }
            }
            if degree >= 1 {
                for i in 1..=n {
                    let g = ops.dunkl(&f, i);
                    if !g.is_zero() && g.degree() != Some(degree - 1) {
                        return Err(format!("D_{} does not lower degree by one", i));
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn suite_eigen(gb: &GraphBuilder, max_degree: u32) -> SuiteResult {
    let ops = Operators::new(gb.module());
    for node in gb.nodes_up_to(max_degree) {
        for i in 1..=gb.module().n() {
            let got = ops.cherednik(&node.poly, i);
            if got != node.poly.scaled(&node.zeta_scalar(i)) {
                return Err(format!(
                    "eigenfunction property fails at alpha = {:?}, tableau {}, i = {}",
                    node.alpha, node.tab, i
                ));
            }
        }
    }
    Ok(())
}

pub fn suite_norms(md: &Arc<ModuleData>, max_degree: u32) -> SuiteResult {
    let n = md.n();
    for d in 0..=max_degree {
        for alpha in compositions_of(d, n) {
            for tab in 0..md.dim() {
                // swap step at each ascent
                for i in 0..n - 1 {
                    if alpha.0[i] >= alpha.0[i + 1] {
                        continue;
                    }
                    let z = spectral_vector(md, &alpha.0, tab);
                    let rho = Scalar::monomial(
                        z[i + 1].0 as i64 - z[i].0 as i64,
                        (z[i + 1].1 - z[i].1) as i64,
                    );
                    let lhs = norm_factored(md, &alpha.swap_adjacent(i).0, tab).to_scalar();
                    let rhs = &u_factor(&rho).map_err(|e| e.to_string())?
                        * &norm_factored(md, &alpha.0, tab).to_scalar();
                    if lhs != rhs {
                        return Err(format!("swap-step norm ratio fails at {:?}", alpha));
                    }
                }
                // affine step
                let phi = macdonald::combinat::phi_step(&alpha);
                let m = macdonald::combinat::rank_vector(&alpha)[0];
                let c = md.tableau(tab).content_of(m) as i64;
                let ratio = (&Scalar::one() - &Scalar::monomial(alpha.0[0] as i64 + 1, c))
                    .checked_div(&(&Scalar::one() - &Scalar::q()))
                    .map_err(|e| e.to_string())?;
                let lhs = norm_factored(md, &phi.0, tab).to_scalar();
                let rhs = &ratio * &norm_factored(md, &alpha.0, tab).to_scalar();
                if lhs != rhs {
                    return Err(format!("affine-step norm ratio fails at {:?}", alpha));
                }
            }
        }
    }
    Ok(())
}

pub fn suite_bf2(gb: &GraphBuilder, max_degree: u32) -> SuiteResult {
    let md = gb.module();
    let ops = Operators::new(md);
    // base case: the form on constants restricts to the module form
    for a in 0..md.dim() {
        for b in 0..md.dim() {
            let fa = macdonald::poly::VVPoly::constant_basis(md.n(), a);
            let fb = macdonald::poly::VVPoly::constant_basis(md.n(), b);
            let want = md.form0(&VModuleVector::basis(a), &VModuleVector::basis(b));
            if form_eval(gb, &fa, &fb) != want {
                return Err("constant-term base case fails".into());
            }
        }
    }
    for degree in 1..=max_degree {
        let basis = GradedBasis::new(md, degree);
        let g = gram_matrix(gb, &basis);
        if g != g.transpose() {
            return Err(format!("Gram matrix not symmetric at degree {}", degree));
        }
        for i in 1..md.n() {
            let tm = ops.matrix_of(|f| ops.hecke(f, i), &basis, &basis);
            if tm.mul(&g) != g.mul(&tm.transpose()) {
                return Err(format!("T_{} not self-adjoint at degree {}", i, degree));
            }
        }
        let xi = ops.matrix_of(|f| ops.cherednik(f, md.n()), &basis, &basis);
        if xi.mul(&g) != g.mul(&xi.transpose()) {
            return Err(format!("xi_N not self-adjoint at degree {}", degree));
        }
        // the Dunkl adjoint identity against degree - 1
        let lo = GradedBasis::new(md, degree - 1);
        let g_lo = gram_matrix(gb, &lo);
        let d = ops.matrix_of(|f| ops.dunkl(f, md.n()), &basis, &lo);
        let xww = ops.matrix_of(
            |f| ops.mult_x(&ops.shift(&ops.shift_star(f)), md.n()),
            &lo,
            &basis,
        );
        let lhs = d.mul(&g_lo);
        let rhs = g
            .mul(&xww.transpose())
            .scale(&(&Scalar::one() - &Scalar::q()));
        if lhs != rhs {
            return Err(format!("Dunkl adjoint identity fails at degree {}", degree));
        }
    }
    Ok(())
}

pub fn suite_fdxg(gb: &GraphBuilder, degree: u32) -> SuiteResult {
    verify_reduction_identities(gb, degree.max(1)).map_err(|e| e.to_string())
}

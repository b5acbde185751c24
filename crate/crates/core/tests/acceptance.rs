//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line. Every identity is checked in exact arithmetic; the
//! tolerances are exact equality throughout.
//!
//! Run with `cargo test -p macdonald --test acceptance -- --nocapture` to
//! see the per-criterion lines.

mod common;

use macdonald::combinat::{
    compositions_of, partitions_of, phi_step, rank_vector, shapes_of, Shape,
};
use macdonald::form::{
    e_product_factored, form_eval, gram_matrix, norm_factored, norm_partition_scalar,
    norm_partition_vv, positivity_classify, positivity_classify_shape, region_boundary_csv,
    verify_reduction_identities, RegionClass,
};
use macdonald::graph::{spectral_vector, GraphBuilder};
use macdonald::hecke::{ModuleData, VModuleVector};
use macdonald::linalg::Matrix;
use macdonald::poly::{GradedBasis, Operators, VVPoly};
use macdonald::qt::{u_factor, Scalar};
use num::{BigRational, One, Zero};
use std::sync::Arc;

fn report(criterion: u32, ok: bool, what: &str) {
    println!(
        "ACCEPTANCE {:>2}: {} — {}",
        criterion,
        if ok { "PASS" } else { "FAIL" },
        what
    );
    assert!(ok, "criterion {} failed: {}", criterion, what);
}

fn md(parts: &[u32]) -> Arc<ModuleData> {
    ModuleData::new(Shape::new(parts.to_vec()).unwrap())
}

fn rat(s: &str) -> BigRational {
    s.parse().unwrap()
}

#[test]
fn criterion_01_representation_relations() {
    let mut ok = true;
    for n in 2..=5u32 {
        for shape in shapes_of(n) {
            let m = ModuleData::new(shape.clone());
            ok &= m.dim() as u64 == shape.hook_count();
            let d = m.dim();
            let t = Scalar::t();
            for i in 1..m.n() {
                let ti = m.gen_matrix(i);
                let quad = ti
                    .add(&Matrix::identity(d))
                    .mul(&ti.sub(&Matrix::identity(d).scale(&t)));
                ok &= quad.is_zero();
            }
            for i in 1..m.n().saturating_sub(1) {
                let a = m.gen_matrix(i);
                let b = m.gen_matrix(i + 1);
                ok &= a.mul(&b).mul(&a) == b.mul(&a).mul(&b);
            }
            for i in 1..m.n() {
                for j in i + 2..m.n() {
                    ok &= m.gen_matrix(i).mul(&m.gen_matrix(j))
                        == m.gen_matrix(j).mul(&m.gen_matrix(i));
                }
            }
        }
    }
    report(
        1,
        ok,
        "seminormal generators satisfy quadratic, braid and commuting relations for all shapes of N <= 5; dimensions match hook counts",
    );
}

#[test]
fn criterion_02_jucys_murphy() {
    let mut ok = true;
    for n in 2..=5u32 {
        for shape in shapes_of(n) {
            let m = ModuleData::new(shape);
            for i in 1..=m.n() {
                for j in i + 1..=m.n() {
                    let a = m.jucys_murphy_matrix(i);
                    let b = m.jucys_murphy_matrix(j);
                    ok &= a.mul(&b) == b.mul(&a);
                }
            }
            for (idx, tab) in m.tableaux().iter().enumerate() {
                for i in 1..=m.n() {
                    let got = m.jucys_murphy(&VModuleVector::basis(idx), i);
                    let want = VModuleVector::basis(idx)
                        .scaled(&Scalar::monomial(0, tab.content_of(i) as i64));
                    ok &= got == want;
                }
            }
        }
    }
    // the worked example: shape (4,3) contains the stated content vector
    let m = md(&[4, 3]);
    ok &= m.index_of_content(&[1, 3, 0, -1, 2, 1, 0]).is_some();
    report(
        2,
        ok,
        "Jucys-Murphy elements commute and act diagonally by t^content for all shapes of N <= 5; the (4,3) content vector [1,3,0,-1,2,1,0] is present",
    );
}

#[test]
fn criterion_03_polynomial_operators() {
    let mut ok = true;
    for n in 2..=4u32 {
        for shape in shapes_of(n) {
            if shape.max_hook() > 4 {
                continue;
            }
            let m = ModuleData::new(shape);
            let ops = Operators::new(&m);
            let nn = m.n();
            for degree in 0..=3u32 {
                let basis = GradedBasis::new(&m, degree);
                let dim = basis.dim();
                let t_mats: Vec<Matrix> = (1..nn)
                    .map(|i| ops.matrix_of(|f| ops.hecke(f, i), &basis, &basis))
                    .collect();
                let t = Scalar::t();
                for tm in &t_mats {
                    let quad = tm
                        .add(&Matrix::identity(dim))
                        .mul(&tm.sub(&Matrix::identity(dim).scale(&t)));
                    ok &= quad.is_zero();
                }
                for i in 0..t_mats.len().saturating_sub(1) {
                    let a = &t_mats[i];
                    let b = &t_mats[i + 1];
                    ok &= a.mul(b).mul(a) == b.mul(a).mul(b);
                }
                for i in 0..t_mats.len() {
                    for j in i + 2..t_mats.len() {
                        ok &= t_mats[i].mul(&t_mats[j]) == t_mats[j].mul(&t_mats[i]);
                    }
                }
                let xi_mats: Vec<Matrix> = (1..=nn)
                    .map(|i| ops.matrix_of(|f| ops.cherednik(f, i), &basis, &basis))
                    .collect();
                for i in 0..nn {
                    for j in i + 1..nn {
                        ok &= xi_mats[i].mul(&xi_mats[j]) == xi_mats[j].mul(&xi_mats[i]);
                    }
                }
                if degree >= 1 {
                    for k in 0..dim {
                        let f = basis.element(k);
                        for i in 1..=nn {
                            let g = ops.dunkl(&f, i);
                            // exact degree drop with no residue
                            ok &= g.is_zero()
                                || (g.is_homogeneous() && g.degree() == Some(degree - 1));
                        }
                    }
                }
            }
        }
    }
    report(
        3,
        ok,
        "Hecke relations for the polynomial action, commuting Cherednik operators, and exact degree lowering by Dunkl operators (N <= 4, degree <= 3, hooks <= 4)",
    );
}

#[test]
fn criterion_04_eigenfunctions_and_oracle() {
    let mut ok = true;
    for n in 2..=3u32 {
        for shape in shapes_of(n) {
            let gb = GraphBuilder::new(ModuleData::new(shape));
            let m = gb.module();
            let ops = Operators::new(m);
            for node in gb.nodes_up_to(3) {
                for i in 1..=m.n() {
                    ok &= ops.cherednik(&node.poly, i)
                        == node.poly.scaled(&node.zeta_scalar(i));
                }
                // independent eigen-solve oracle: same line, same polynomial
                // after matching one coordinate
                let oracle = common::eigen_solve(m, &node.alpha, node.tab);
                ok &= common::proportional(&node.poly, &oracle).is_some();
            }
        }
    }
    report(
        4,
        ok,
        "graph-built polynomials satisfy the joint eigenvalue equations and match the triangular eigen-solve oracle (N <= 3, degree <= 3)",
    );
}

#[test]
fn criterion_05_norm_recursions() {
    let mut ok = true;
    for parts in [vec![2u32, 1], vec![3u32]] {
        let m = md(&parts);
        let n = m.n();
        // swap and affine steps for every composition of weight <= 3
        for d in 0..=3u32 {
            for alpha in compositions_of(d, n) {
                for tab in 0..m.dim() {
                    for i in 0..n - 1 {
                        if alpha.0[i] >= alpha.0[i + 1] {
                            continue;
                        }
                        let z = spectral_vector(&m, &alpha.0, tab);
                        let rho = Scalar::monomial(
                            z[i + 1].0 as i64 - z[i].0 as i64,
                            (z[i + 1].1 - z[i].1) as i64,
                        );
                        let lhs = norm_factored(&m, &alpha.swap_adjacent(i).0, tab).to_scalar();
                        let rhs = &u_factor(&rho).unwrap()
                            * &norm_factored(&m, &alpha.0, tab).to_scalar();
                        ok &= lhs == rhs;
                    }
                    if d < 3 {
                        let phi = phi_step(&alpha);
                        let mm = rank_vector(&alpha)[0];
                        let c = m.tableau(tab).content_of(mm) as i64;
                        let ratio = (&Scalar::one()
                            - &Scalar::monomial(alpha.0[0] as i64 + 1, c))
                            .checked_div(&(&Scalar::one() - &Scalar::q()))
                            .unwrap();
                        let lhs = norm_factored(&m, &phi.0, tab).to_scalar();
                        let rhs = &ratio * &norm_factored(&m, &alpha.0, tab).to_scalar();
                        ok &= lhs == rhs;
                    }
                }
            }
        }
    }
    // tableau step on the two-dimensional module
    {
        let m = md(&[2, 1]);
        let (i0, i1) = m.extremal_indices();
        for d in 0..=3u32 {
            for alpha in compositions_of(d, 3) {
                let ranks = rank_vector(&alpha);
                for (i, &rank) in ranks.iter().take(2).enumerate() {
                    if alpha.0[i] != alpha.0[i + 1] || rank != 1 {
                        continue;
                    }
                    let lhs = norm_factored(&m, &alpha.0, i1)
                        .to_scalar()
                        .checked_div(&norm_factored(&m, &alpha.0, i0).to_scalar())
                        .unwrap();
                    let rhs = m.norm0(i1).checked_div(m.norm0(i0)).unwrap();
                    ok &= lhs == rhs;
                }
            }
        }
    }
    // scalar formula agrees with the single-row specialization
    for n in 2..=3usize {
        let m = md(&[n as u32]);
        for d in 0..=3u32 {
            for lam in partitions_of(d, n) {
                ok &= norm_partition_scalar(&lam.0) == norm_partition_vv(&m, &lam.0, 0);
            }
        }
    }
    report(
        5,
        ok,
        "the closed norm formula satisfies the swap, tableau and affine recursions symbolically, and the scalar formula matches the single-row specialization (weights <= 3)",
    );
}

#[test]
fn criterion_06_bf2_adjointness() {
    let mut ok = true;
    for n in 2..=3u32 {
        for shape in shapes_of(n) {
            let gb = GraphBuilder::new(ModuleData::new(shape));
            let m = gb.module();
            let ops = Operators::new(m);
            // base case on constants
            for a in 0..m.dim() {
                for b in 0..m.dim() {
                    let fa = VVPoly::constant_basis(m.n(), a);
                    let fb = VVPoly::constant_basis(m.n(), b);
                    ok &= form_eval(&gb, &fa, &fb)
                        == m.form0(&VModuleVector::basis(a), &VModuleVector::basis(b));
                }
            }
            for degree in 1..=2u32 {
                let basis = GradedBasis::new(m, degree);
                let g = gram_matrix(&gb, &basis);
                ok &= g == g.transpose();
                for i in 1..m.n() {
                    let tm = ops.matrix_of(|f| ops.hecke(f, i), &basis, &basis);
                    ok &= tm.mul(&g) == g.mul(&tm.transpose());
                }
                let xi = ops.matrix_of(|f| ops.cherednik(f, m.n()), &basis, &basis);
                ok &= xi.mul(&g) == g.mul(&xi.transpose());
                // the Dunkl adjoint relation against degree - 1
                let lo = GradedBasis::new(m, degree - 1);
                let g_lo = gram_matrix(&gb, &lo);
                let d = ops.matrix_of(|f| ops.dunkl(f, m.n()), &basis, &lo);
                let xww = ops.matrix_of(
                    |f| ops.mult_x(&ops.shift(&ops.shift_star(f)), m.n()),
                    &lo,
                    &basis,
                );
                ok &= d.mul(&g_lo)
                    == g
                        .mul(&xww.transpose())
                        .scale(&(&Scalar::one() - &Scalar::q()));
            }
        }
    }
    report(
        6,
        ok,
        "the Gram matrices of degrees <= 2 (N <= 3) make the Hecke generators and the last Cherednik operator self-adjoint and satisfy the Dunkl adjoint relation",
    );
}

#[test]
fn criterion_07_reduction_operators() {
    let mut ok = true;
    for parts in [vec![2u32], vec![1u32, 1], vec![2u32, 1]] {
        let gb = GraphBuilder::new(md(&parts));
        ok &= verify_reduction_identities(&gb, 1).is_ok();
    }
    report(
        7,
        ok,
        "the degree-reduction operator families satisfy both displayed identities on degree-1 bases for shapes (2), (1,1) and (2,1)",
    );
}

#[test]
fn criterion_08_positivity_region() {
    let mut ok = true;
    // >= 20 exact rational points inside the region for shape (2,1), h = 3
    let m = md(&[2, 1]);
    let inside_points: Vec<(BigRational, BigRational)> = {
        let qs = ["1/10", "1/12", "1/20", "1/30", "9", "10", "12", "15", "20", "28"];
        let ts = ["3/4", "3/2"];
        let mut pts = Vec::new();
        for q in qs {
            for t in ts {
                pts.push((rat(q), rat(t)));
            }
        }
        pts
    };
    ok &= inside_points.len() >= 20;
    for (q0, t0) in &inside_points {
        ok &= positivity_classify(q0, t0, 3).unwrap() == RegionClass::Inside;
        for d in 0..=3u32 {
            for alpha in compositions_of(d, 3) {
                for tab in 0..m.dim() {
                    let v = norm_factored(&m, &alpha.0, tab).eval(q0, t0).unwrap();
                    ok &= v > BigRational::zero();
                }
            }
        }
    }
    // boundary marks are exact
    for t0 in ["1/2", "2/3", "3/2", "2", "7/3"] {
        let t0 = rat(t0);
        let th = num::pow::pow(t0.clone(), 3);
        ok &= positivity_classify(&th, &t0, 3).unwrap() == RegionClass::Boundary;
        ok &= positivity_classify(&th.recip(), &t0, 3).unwrap() == RegionClass::Boundary;
    }
    // the scalar region for the single row of 4 matches the closed form on a
    // grid, and the sampled norms change sign exactly off the region
    let shape4 = Shape::new(vec![4]).unwrap();
    let row = md(&[4]);
    for q0 in ["1/20", "1/10", "1/5", "1/2", "2", "3", "17"] {
        for t0 in ["1/2", "2/3", "3/2", "2"] {
            let q0 = rat(q0);
            let t0 = rat(t0);
            let tmn = num::pow::pow(t0.clone(), 4).recip();
            let one = BigRational::one();
            let closed_inside =
                q0 < one.clone().min(tmn.clone()) || q0 > one.clone().max(tmn.clone());
            let class = positivity_classify_shape(&shape4, &q0, &t0).unwrap();
            let want = if q0 == tmn {
                RegionClass::Boundary
            } else if closed_inside {
                RegionClass::Inside
            } else {
                RegionClass::Outside
            };
            ok &= class == want;
            // engine agreement: inside -> sampled norms positive,
            // strictly outside -> some sampled norm <= 0
            let mut nonpositive = false;
            for d in 0..=4u32 {
                for alpha in compositions_of(d, 4) {
                    if let Ok(v) = norm_factored(&row, &alpha.0, 0).eval(&q0, &t0) {
                        if v <= BigRational::zero() {
                            nonpositive = true;
                        }
                    }
                }
            }
            match want {
                RegionClass::Inside => ok &= !nonpositive,
                RegionClass::Outside => ok &= nonpositive,
                RegionClass::Boundary => {}
            }
        }
    }
    // Fig-1 style CSV with slopes +-1/4 in (log q, log t)
    let csv = region_boundary_csv(4, 1.0, 50);
    for line in csv.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let lq: f64 = cols[0].parse().unwrap();
        let lt: f64 = cols[1].parse().unwrap();
        match cols[2] {
            "q=t^h" => ok &= lq == 4.0 * lt,
            "q=t^-h" => ok &= lq == -4.0 * lt,
            "q=1" => ok &= lq == 0.0,
            _ => ok = false,
        }
    }
    report(
        8,
        ok,
        "20+ interior points give positive norms up to degree 3 for shape (2,1); the boundary q = t^(+-3) is marked exactly; the single-row region matches its closed form and the CSV carries slopes +-1/4",
    );
}

#[test]
fn criterion_09_singular_certificates() {
    let mut ok = true;
    for parts in [vec![2u32, 1], vec![2u32, 2]] {
        let m = md(&parts);
        let h = m.shape.max_hook() as i64;
        let c1 = macdonald::singular::certify_singular_s1(m.clone()).unwrap();
        ok &= c1.valid && c1.exponent == h;
        let c0 = macdonald::singular::certify_singular_s0(m.clone()).unwrap();
        ok &= c0.valid && c0.exponent == -h;
        // off the curve the same polynomials are not annihilated
        ok &= macdonald::singular::generic_nonsingular(m.clone(), macdonald::singular::Family::S1);
        ok &= macdonald::singular::generic_nonsingular(m.clone(), macdonald::singular::Family::S0);
        // the closed-form norm vanishes identically on each curve
        let (s0, s1) = m.extremal_indices();
        let norm_s1 = norm_factored(&m, &c1.alpha, s1);
        ok &= norm_s1.to_scalar().substitute_q(h).unwrap().is_zero();
        ok &= norm_s1.vanishes_on_curve(h);
        let norm_s0 = norm_factored(&m, &c0.alpha, s0);
        ok &= norm_s0.to_scalar().substitute_q(-h).unwrap().is_zero();
        ok &= norm_s0.vanishes_on_curve(-h);
        // a singular curve cannot meet the open positivity region
        for t0 in ["1/2", "2/3", "3/2", "2"] {
            let t0 = rat(t0);
            for e in [h, -h] {
                let q0 = {
                    let p = num::pow::pow(t0.clone(), e.unsigned_abs() as usize);
                    if e < 0 {
                        p.recip()
                    } else {
                        p
                    }
                };
                ok &= positivity_classify(&q0, &t0, m.shape.max_hook()).unwrap()
                    == RegionClass::Boundary;
            }
        }
    }
    report(
        9,
        ok,
        "singular certificates hold for shapes (2,1) and (2,2) on q = t^(+-h): every Dunkl image vanishes after substitution, generically the polynomials are not singular, and their closed-form norms vanish on the curves",
    );
}

#[test]
fn criterion_10_incompatibility_witness() {
    // single row of 4: <M_{(1,0,0,0)}, M_{(0,1,0,0)} w w*> != 0
    let gb = GraphBuilder::new(md(&[4]));
    let ops = Operators::new(gb.module());
    let m_alpha = gb.node(&[1, 0, 0, 0], 0);
    let m_beta = gb.node(&[0, 1, 0, 0], 0);
    let moved = ops.shift_star(&ops.shift(&m_beta.poly));
    let value = form_eval(&gb, &m_alpha.poly, &moved);
    let ok = !value.is_zero();
    report(
        10,
        ok,
        "the incompatibility witness (single row of 4, alpha = (1,0,0,0), beta = (0,1,0,0)) gives a nonzero pairing against the shifted polynomial",
    );
}

#[test]
fn e_product_factor_count_matches_inversions() {
    // supplementary: E(alpha,S) carries exactly inv(alpha) u-factors; checked
    // through the swap recursion E(alpha)/E(alpha.s_i) = u(rho) at ascents
    let m = md(&[2, 1]);
    for d in 0..=3u32 {
        for alpha in compositions_of(d, 3) {
            for tab in 0..m.dim() {
                for i in 0..2usize {
                    if alpha.0[i] >= alpha.0[i + 1] {
                        continue;
                    }
                    let z = spectral_vector(&m, &alpha.0, tab);
                    let rho = Scalar::monomial(
                        z[i + 1].0 as i64 - z[i].0 as i64,
                        (z[i + 1].1 - z[i].1) as i64,
                    );
                    let lhs = e_product_factored(&m, &alpha.0, tab).to_scalar();
                    let rhs = &u_factor(&rho).unwrap()
                        * &e_product_factored(&m, &alpha.swap_adjacent(i).0, tab).to_scalar();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

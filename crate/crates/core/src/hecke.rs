//! The irreducible seminormal representation of the Hecke algebra H_N(t)
//! attached to a shape, its Jucys-Murphy elements, and the diagonal
//! symmetric form on the module.
//!
//! The module is spanned by the RSYT of the shape. Generator actions are
//! two-term rows in that basis; the rows for the "reversed" content gap are
//! derived from the forward case through the quadratic relation and checked
//! against their closed form at construction time.

use crate::combinat::Shape;
use crate::linalg::Matrix;
use crate::qt::{u_factor, Scalar};
use crate::tableaux::{enumerate_rsyt, exchange, ExchangeOutcome, Tableau};
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::Arc;

/// A sparse element of the module V_tau in the canonical tableau basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VModuleVector {
    coeffs: BTreeMap<usize, Scalar>,
}

impl VModuleVector {
    pub fn zero() -> Self {
        VModuleVector::default()
    }

    pub fn basis(index: usize) -> Self {
        let mut v = VModuleVector::zero();
        v.coeffs.insert(index, Scalar::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, index: usize) -> Scalar {
        self.coeffs.get(&index).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn add_term(&mut self, index: usize, value: &Scalar) {
        if value.is_zero() {
            return;
        }
        match self.coeffs.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + value;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_term(k, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_term(k, &(-v));
        }
        out
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return VModuleVector::zero();
        }
        VModuleVector {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }
}

/// A word in the generators T_i and their inverses, applied left to right.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HeckeWord {
    pub letters: Vec<(usize, i32)>,
}

impl HeckeWord {
    pub fn identity() -> Self {
        HeckeWord::default()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// omega = T_1 T_2 ... T_{N-1}.
    pub fn omega(n: usize) -> Self {
        HeckeWord {
            letters: (1..n).map(|i| (i, 1)).collect(),
        }
    }

    /// phi_i = t^{i-N} T_i ... T_{N-1} T_{N-1} ... T_i; this is only the
    /// word part, the scale is applied by the caller.
    fn jucys_murphy_word(i: usize, n: usize) -> Self {
        let mut letters: Vec<(usize, i32)> = (i..n).map(|k| (k, 1)).collect();
        letters.extend((i..n).rev().map(|k| (k, 1)));
        HeckeWord { letters }
    }

    pub fn inverse(&self) -> Self {
        HeckeWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(i, e)| (i, -e))
                .collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        HeckeWord { letters }
    }
}

type Row = Vec<(usize, Scalar)>;

/// All per-shape data: the tableau basis in canonical order, generator
/// action rows, and the diagonal of the module form.
pub struct ModuleData {
    pub shape: Shape,
    tableaux: Vec<Tableau>,
    index_by_content: HashMap<Vec<i32>, usize>,
    /// gen_rows[i-1][s] = the expansion of (basis s) T_i.
    gen_rows: Vec<Vec<Row>>,
    form0_diag: Vec<Scalar>,
}

impl ModuleData {
    pub fn new(shape: Shape) -> Arc<ModuleData> {
        let tableaux = enumerate_rsyt(&shape);
        let n = shape.size();
        let index_by_content: HashMap<Vec<i32>, usize> = tableaux
            .iter()
            .enumerate()
            .map(|(k, t)| (t.content_vector().to_vec(), k))
            .collect();
        let t = Scalar::t();
        let one = Scalar::one();
        let mut gen_rows: Vec<Vec<Row>> = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            let mut rows: Vec<Row> = Vec::with_capacity(tableaux.len());
            for s in &tableaux {
                let delta = s.content_of(i) - s.content_of(i + 1);
                let row: Row = match delta {
                    1 => vec![(index_by_content[s.content_vector()], t.clone())],
                    -1 => vec![(index_by_content[s.content_vector()], -&one)],
                    d if d >= 2 => {
                        let partner = match exchange(s, i) {
                            ExchangeOutcome::Moved(p) => p,
                            _ => unreachable!("gap >= 2 admits the exchange"),
                        };
                        let self_idx = index_by_content[s.content_vector()];
                        let partner_idx = index_by_content[partner.content_vector()];
                        // (t - 1)/(1 - t^{-d})
                        let kappa = (&t - &one)
                            .checked_div(&(&one - &Scalar::monomial(0, -(d as i64))))
                            .expect("generic t");
                        vec![(partner_idx, one.clone()), (self_idx, kappa)]
                    }
                    d => {
                        // d <= -2: derive from the partner's forward row via
                        // the quadratic relation, then check the closed form
                        let partner = {
                            let mut pos: Vec<(usize, usize)> =
                                (1..=n).map(|e| s.position_of(e)).collect();
                            pos.swap(i - 1, i);
                            // positions define the partner; identify by content
                            let content: Vec<i32> = pos
                                .iter()
                                .map(|&(r, c)| c as i32 - r as i32)
                                .collect();
                            index_by_content[&content]
                        };
                        let self_idx = index_by_content[s.content_vector()];
                        let kappa = (&t - &one)
                            .checked_div(&(&one - &Scalar::monomial(0, d as i64)))
                            .expect("generic t");
                        // S T = (t - 1 - kappa) S + (kappa (t - 1 - kappa) + t) S'
                        let a = &(&t - &one) - &kappa;
                        let b = &(&kappa * &a) + &t;
                        let tb = Scalar::monomial(0, d as i64);
                        let closed_self = (&tb * &(&t - &one))
                            .checked_div(&(&tb - &one))
                            .unwrap();
                        let tb1 = Scalar::monomial(0, d as i64 + 1);
                        let tbm1 = Scalar::monomial(0, d as i64 - 1);
                        let den = &(&tb - &one) * &(&tb - &one);
                        let closed_partner = (&(&t * &(&tb1 - &one)) * &(&tbm1 - &one))
                            .checked_div(&den)
                            .unwrap();
                        assert_eq!(a, closed_self, "reversed-gap self coefficient");
                        assert_eq!(b, closed_partner, "reversed-gap partner coefficient");
                        vec![(partner, b), (self_idx, a)]
                    }
                };
                rows.push(row);
            }
            gen_rows.push(rows);
        }
        let form0_diag = tableaux
            .iter()
            .map(|s| {
                let mut acc = Scalar::one();
                let c = s.content_vector();
                for i in 0..c.len() {
                    for j in i + 1..c.len() {
                        if c[j] - c[i] >= 2 {
                            let z = Scalar::monomial(0, (c[i] - c[j]) as i64);
                            acc = &acc * &u_factor(&z).expect("content gap >= 2");
                        }
                    }
                }
                acc
            })
            .collect();
        Arc::new(ModuleData {
            shape,
            tableaux,
            index_by_content,
            gen_rows,
            form0_diag,
        })
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn tableau(&self, index: usize) -> &Tableau {
        &self.tableaux[index]
    }

    pub fn index_of_content(&self, content: &[i32]) -> Option<usize> {
        self.index_by_content.get(content).copied()
    }

    /// Indices of the column-filled (inv-maximal) and row-filled
    /// (inv-minimal) tableaux.
    pub fn extremal_indices(&self) -> (usize, usize) {
        let (s0, s1) = crate::tableaux::extremal_tableaux(&self.shape);
        (
            self.index_of_content(s0.content_vector()).unwrap(),
            self.index_of_content(s1.content_vector()).unwrap(),
        )
    }

    /// Apply the generator T_i, 1 <= i < N.
    pub fn apply_gen(&self, v: &VModuleVector, i: usize) -> VModuleVector {
        let rows = &self.gen_rows[i - 1];
        let mut out = VModuleVector::zero();
        for (s, coeff) in v.iter() {
            for (target, w) in &rows[s] {
                out.add_term(*target, &(coeff * w));
            }
        }
        out
    }

    /// T_i^{-1} = (T_i + 1 - t)/t.
    pub fn apply_gen_inv(&self, v: &VModuleVector, i: usize) -> VModuleVector {
        let t_inv = Scalar::monomial(0, -1);
        let shifted = self
            .apply_gen(v, i)
            .add(&v.scaled(&(&Scalar::one() - &Scalar::t())));
        shifted.scaled(&t_inv)
    }

    pub fn apply_word(&self, v: &VModuleVector, word: &HeckeWord) -> VModuleVector {
        let mut cur = v.clone();
        for &(i, e) in &word.letters {
            cur = if e >= 0 {
                self.apply_gen(&cur, i)
            } else {
                self.apply_gen_inv(&cur, i)
            };
        }
        cur
    }

    /// The Jucys-Murphy element phi_i; on a basis tableau this scales by
    /// t^{c(i,S)}.
    pub fn jucys_murphy(&self, v: &VModuleVector, i: usize) -> VModuleVector {
        let n = self.n();
        assert!(i >= 1 && i <= n);
        if i == n {
            return v.clone();
        }
        let word = HeckeWord::jucys_murphy_word(i, n);
        self.apply_word(v, &word)
            .scaled(&Scalar::monomial(0, i as i64 - n as i64))
    }

    /// The symmetric module form: diagonal on the tableau basis.
    pub fn form0(&self, v: &VModuleVector, w: &VModuleVector) -> Scalar {
        let mut acc = Scalar::zero();
        for (s, a) in v.iter() {
            let b = w.get(s);
            if !b.is_zero() {
                acc = &acc + &(&(a * &b) * &self.form0_diag[s]);
            }
        }
        acc
    }

    /// ||S||_0^2 for a basis tableau.
    pub fn norm0(&self, index: usize) -> &Scalar {
        &self.form0_diag[index]
    }

    pub fn gen_matrix(&self, i: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for s in 0..d {
            for (target, w) in &self.gen_rows[i - 1][s] {
                *m.at_mut(s, *target) = w.clone();
            }
        }
        m
    }

    pub fn word_matrix(&self, word: &HeckeWord) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for s in 0..d {
            let v = self.apply_word(&VModuleVector::basis(s), word);
            for (k, c) in v.iter() {
                *m.at_mut(s, k) = c.clone();
            }
        }
        m
    }

    pub fn jucys_murphy_matrix(&self, i: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for s in 0..d {
            let v = self.jucys_murphy(&VModuleVector::basis(s), i);
            for (k, c) in v.iter() {
                *m.at_mut(s, k) = c.clone();
            }
        }
        m
    }
}

//! Construction of the Macdonald basis of P (x) V_tau by walking the
//! Yang-Baxter graph on labels (alpha, S).
//!
//! Nodes carry the composition, the tableau, the spectral vector, the
//! sorting word R_alpha, the leading coefficient eta and the polynomial
//! itself. The canonical construction path recurses through the affine step
//! when alpha ends in a positive entry and otherwise through the adjacent
//! swap at the largest descent; degree zero is the base case 1 (x) S.

use crate::combinat::{
    compositions_of, inversion_number, phi_inverse, rank_vector, Composition,
};
use crate::hecke::{HeckeWord, ModuleData};
use crate::poly::{Operators, VVPoly};
use crate::qt::Scalar;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// A spectral vector entry q^a t^b stored by exponents.
pub type ZetaExp = (u32, i32);

type NodeKey = (Vec<u32>, usize);

/// A constructed node of the graph.
#[derive(Clone, Debug)]
pub struct Node {
    pub alpha: Vec<u32>,
    pub tab: usize,
    pub zeta: Vec<ZetaExp>,
    pub r_word: HeckeWord,
    /// eta = q^a t^b, the coefficient of the leading term.
    pub eta: (u32, i64),
    pub poly: VVPoly,
}

impl Node {
    pub fn eta_scalar(&self) -> Scalar {
        Scalar::monomial(self.eta.0 as i64, self.eta.1)
    }

    pub fn zeta_scalar(&self, i: usize) -> Scalar {
        let (a, b) = self.zeta[i - 1];
        Scalar::monomial(a as i64, b as i64)
    }
}

/// The spectral vector zeta(i) = q^{alpha_i} t^{c(r_alpha(i), S)}.
pub fn spectral_vector(md: &ModuleData, alpha: &[u32], tab: usize) -> Vec<ZetaExp> {
    let comp = Composition::new(alpha.to_vec());
    let ranks = rank_vector(&comp);
    let s = md.tableau(tab);
    alpha
        .iter()
        .zip(&ranks)
        .map(|(&a, &r)| (a, s.content_of(r)))
        .collect()
}

/// A minimal sorting word for alpha: repeatedly swap the smallest ascent.
/// R_alpha is the inverse of the recorded generator word.
pub fn r_alpha_word(alpha: &[u32]) -> HeckeWord {
    let mut cur = alpha.to_vec();
    let mut seq = Vec::new();
    loop {
        let ascent = (0..cur.len() - 1).find(|&i| cur[i] < cur[i + 1]);
        match ascent {
            Some(i) => {
                seq.push((i + 1, 1));
                cur.swap(i, i + 1);
            }
            None => break,
        }
    }
    debug_assert_eq!(seq.len(), inversion_number(&Composition::new(alpha.to_vec())));
    HeckeWord { letters: seq }.inverse()
}

/// Memoizing builder for graph nodes over a fixed shape.
pub struct GraphBuilder {
    md: Arc<ModuleData>,
    memo: Mutex<HashMap<NodeKey, Arc<Node>>>,
    memo_cap: Option<usize>,
}

impl GraphBuilder {
    pub fn new(md: Arc<ModuleData>) -> Self {
        let memo_cap = std::env::var("MACD_MEMO_CAP")
            .ok()
            .and_then(|v| v.parse::<usize>().ok());
        GraphBuilder {
            md,
            memo: Mutex::new(HashMap::new()),
            memo_cap,
        }
    }

    pub fn with_memo_cap(md: Arc<ModuleData>, cap: Option<usize>) -> Self {
        GraphBuilder {
            md,
            memo: Mutex::new(HashMap::new()),
            memo_cap: cap,
        }
    }

    pub fn module(&self) -> &ModuleData {
        &self.md
    }

    pub fn module_arc(&self) -> Arc<ModuleData> {
        self.md.clone()
    }

    /// Build (or fetch) the node for (alpha, S).
    pub fn node(&self, alpha: &[u32], tab: usize) -> Arc<Node> {
        assert_eq!(alpha.len(), self.md.n(), "composition length must be N");
        assert!(tab < self.md.dim(), "tableau index out of range");
        let key = (alpha.to_vec(), tab);
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let node = Arc::new(self.compute(alpha, tab));
        let mut memo = self.memo.lock().unwrap();
        if self.memo_cap.is_none_or(|cap| memo.len() < cap) {
            memo.insert(key, node.clone());
        }
        node
    }

    fn compute(&self, alpha: &[u32], tab: usize) -> Node {
        let n = self.md.n();
        let ops = Operators::new(&self.md);
        let weight: u32 = alpha.iter().sum();
        if weight == 0 {
            return Node {
                alpha: alpha.to_vec(),
                tab,
                zeta: spectral_vector(&self.md, alpha, tab),
                r_word: HeckeWord::identity(),
                eta: (0, 0),
                poly: VVPoly::constant_basis(n, tab),
            };
        }
        if alpha[n - 1] > 0 {
            // affine step from beta with alpha = beta.Phi
            let comp = Composition::new(alpha.to_vec());
            let beta = phi_inverse(&comp).expect("last entry positive");
            let nb = self.node(&beta.0, tab);
            let poly = ops.mult_x(&ops.shift(&nb.poly), n);
            let mut zeta: Vec<ZetaExp> = nb.zeta[1..].to_vec();
            zeta.push((nb.zeta[0].0 + 1, nb.zeta[0].1));
            let m = rank_vector(&beta)[0];
            let c_m = self.md.tableau(tab).content_of(m) as i64;
            let eta = (
                nb.eta.0 + beta.0[0],
                nb.eta.1 + (n as i64 - m as i64) + c_m,
            );
            Node {
                alpha: alpha.to_vec(),
                tab,
                zeta,
                r_word: r_alpha_word(alpha),
                eta,
                poly,
            }
        } else {
            // swap step up from alpha.s_i at the largest descent i
            let i = (0..n - 1)
                .rev()
                .find(|&i| alpha[i] > alpha[i + 1])
                .expect("nonzero composition ending in zero has a descent");
            let mut prev = alpha.to_vec();
            prev.swap(i, i + 1);
            let np = self.node(&prev, tab);
            // rho = zeta_prev(i+1)/zeta_prev(i), a Laurent monomial
            let (a1, b1) = np.zeta[i + 1];
            let (a0, b0) = np.zeta[i];
            let rho = Scalar::monomial(a1 as i64 - a0 as i64, (b1 - b0) as i64);
            let coeff = (&Scalar::t() - &Scalar::one())
                .checked_div(&(&rho - &Scalar::one()))
                .expect("generic parameters: spectral ratio is not 1");
            let poly = ops.hecke(&np.poly, i + 1).add(&np.poly.scaled(&coeff));
            let mut zeta = np.zeta.clone();
            zeta.swap(i, i + 1);
            Node {
                alpha: alpha.to_vec(),
                tab,
                zeta,
                r_word: r_alpha_word(alpha),
                eta: np.eta,
                poly,
            }
        }
    }

    /// Express M_{alpha,S} T_i in the Macdonald basis by the case table;
    /// used to cross-check the direct operator action.
    pub fn step_down_hecke(&self, node: &Node, i: usize) -> VVPoly {
        let n = self.md.n();
        assert!(i >= 1 && i < n);
        let alpha = &node.alpha;
        let one = Scalar::one();
        let t = Scalar::t();
        if alpha[i - 1] < alpha[i] {
            // M T_i = M_{alpha.s_i} - (t-1)/(rho-1) M, rho = zeta(i+1)/zeta(i)
            let up = {
                let mut a = alpha.clone();
                a.swap(i - 1, i);
                self.node(&a, node.tab)
            };
            let (a1, b1) = node.zeta[i];
            let (a0, b0) = node.zeta[i - 1];
            let rho = Scalar::monomial(a1 as i64 - a0 as i64, (b1 - b0) as i64);
            let coeff = (&t - &one).checked_div(&(&rho - &one)).unwrap();
            return up.poly.sub(&node.poly.scaled(&coeff));
        }
        if alpha[i - 1] > alpha[i] {
            // rho = zeta(i)/zeta(i+1)
            let down = {
                let mut a = alpha.clone();
                a.swap(i - 1, i);
                self.node(&a, node.tab)
            };
            let (a0, b0) = node.zeta[i - 1];
            let (a1, b1) = node.zeta[i];
            let rho = Scalar::monomial(a0 as i64 - a1 as i64, (b0 - b1) as i64);
            let dd = &(&one - &rho) * &(&one - &rho);
            let c_other = (&(&one - &(&t * &rho)) * &(&t - &rho))
                .checked_div(&dd)
                .unwrap();
            let c_self = (&rho * &(&one - &t)).checked_div(&(&one - &rho)).unwrap();
            return down
                .poly
                .scaled(&c_other)
                .add(&node.poly.scaled(&c_self));
        }
        // alpha_i = alpha_{i+1}: tableau cases at j = r_alpha(i)
        let j = rank_vector(&Composition::new(alpha.clone()))[i - 1];
        let s = self.md.tableau(node.tab);
        let delta = s.content_of(j) - s.content_of(j + 1);
        match delta {
            1 => node.poly.scaled(&t),
            -1 => node.poly.scaled(&(-&one)),
            d if d >= 2 => {
                let partner = self.exchange_index(node.tab, j);
                let other = self.node(alpha, partner);
                let rho = Scalar::monomial(0, -(d as i64));
                let coeff = (&t - &one).checked_div(&(&rho - &one)).unwrap();
                other.poly.sub(&node.poly.scaled(&coeff))
            }
            d => {
                let partner = self.exchange_index(node.tab, j);
                let other = self.node(alpha, partner);
                let rho = Scalar::monomial(0, d as i64);
                let dd = &(&one - &rho) * &(&one - &rho);
                let c_other = (&(&one - &(&t * &rho)) * &(&t - &rho))
                    .checked_div(&dd)
                    .unwrap();
                let c_self = (&rho * &(&one - &t)).checked_div(&(&one - &rho)).unwrap();
                other.poly.scaled(&c_other).add(&node.poly.scaled(&c_self))
            }
        }
    }

    fn exchange_index(&self, tab: usize, j: usize) -> usize {
        let s = self.md.tableau(tab);
        let mut content = s.content_vector().to_vec();
        content.swap(j - 1, j);
        self.md
            .index_of_content(&content)
            .expect("exchange stays within the shape")
    }

    /// All nodes with |alpha| <= max_degree in deterministic order.
    pub fn nodes_up_to(&self, max_degree: u32) -> Vec<Arc<Node>> {
        let n = self.md.n();
        let mut out = Vec::new();
        for d in 0..=max_degree {
            for alpha in compositions_of(d, n) {
                for tab in 0..self.md.dim() {
                    out.push(self.node(&alpha.0, tab));
                }
            }
        }
        out
    }

    /// DOT export of the graph restricted to |alpha| <= max_degree, with
    /// swap, tableau and affine edges.
    pub fn export_dot(&self, max_degree: u32) -> String {
        let n = self.md.n();
        let mut ids: HashMap<(Vec<u32>, usize), usize> = HashMap::new();
        let mut lines = vec!["digraph yang_baxter {".to_string()];
        let mut order = Vec::new();
        for d in 0..=max_degree {
            for alpha in compositions_of(d, n) {
                for tab in 0..self.md.dim() {
                    let id = ids.len();
                    ids.insert((alpha.0.clone(), tab), id);
                    order.push((alpha.0.clone(), tab));
                    let contents = self.md.tableau(tab).content_vector();
                    lines.push(format!(
                        "  n{} [label=\"({} | {})\"];",
                        id,
                        alpha,
                        contents
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    ));
                }
            }
        }
        for (alpha, tab) in &order {
            let from = ids[&(alpha.clone(), *tab)];
            let ranks = rank_vector(&Composition::new(alpha.clone()));
            let s = self.md.tableau(*tab);
            for i in 1..n {
                if alpha[i - 1] < alpha[i] {
                    let mut a = alpha.clone();
                    a.swap(i - 1, i);
                    lines.push(format!(
                        "  n{} -> n{} [label=\"s{}\"];",
                        from,
                        ids[&(a, *tab)],
                        i
                    ));
                } else if alpha[i - 1] == alpha[i] {
                    let j = ranks[i - 1];
                    if s.content_of(j) - s.content_of(j + 1) >= 2 {
                        let partner = self.exchange_index(*tab, j);
                        lines.push(format!(
                            "  n{} -> n{} [label=\"t{}\"];",
                            from,
                            ids[&(alpha.clone(), partner)],
                            j
                        ));
                    }
                }
            }
            let weight: u32 = alpha.iter().sum();
            if weight < max_degree {
                let phi = crate::combinat::phi_step(&Composition::new(alpha.clone()));
                lines.push(format!(
                    "  n{} -> n{} [label=\"Phi\"];",
                    from,
                    ids[&(phi.0, *tab)]
                ));
            }
        }
        lines.push("}".to_string());
        lines.join("\n") + "\n"
    }
}

//! Compositions, partitions, rank vectors, partial orders, the affine map,
//! and Ferrers-diagram statistics.
//!
//! Compositions are fixed-length vectors of nonnegative integers; trailing
//! zeros are explicit because the number of variables N is global to a
//! computation.

use crate::{Error, Result};

/// A composition: an N-tuple of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "composition must have at least one part");
        Composition(parts)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Swap entries i and i+1 (0-based i).
    pub fn swap_adjacent(&self, i: usize) -> Composition {
        let mut v = self.0.clone();
        v.swap(i, i + 1);
        Composition(v)
    }

    pub fn parse(s: &str) -> Result<Composition> {
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        match parts {
            Ok(v) if !v.is_empty() => Ok(Composition(v)),
            _ => Err(Error::Parse(format!("bad composition `{}`", s))),
        }
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Nonincreasing rearrangement of a composition.
pub fn sort_desc(alpha: &Composition) -> Composition {
    let mut v = alpha.0.clone();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Composition(v)
}

/// Rank vector: r(i) = #{j : a_j > a_i} + #{j <= i : a_j = a_i}.
/// Always a permutation of 1..=N (returned 1-based).
pub fn rank_vector(alpha: &Composition) -> Vec<usize> {
    let a = &alpha.0;
    let n = a.len();
    let mut r = vec![0usize; n];
    for i in 0..n {
        let bigger = a.iter().filter(|&&x| x > a[i]).count();
        let equal_before = a[..=i].iter().filter(|&&x| x == a[i]).count();
        r[i] = bigger + equal_before;
    }
    r
}

/// Number of pairs i < j with a_i < a_j; also the minimal number of
/// adjacent-swap steps from alpha to its sorted rearrangement.
pub fn inversion_number(alpha: &Composition) -> usize {
    let a = &alpha.0;
    let mut count = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] < a[j] {
                count += 1;
            }
        }
    }
    count
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TriangleOrd {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Dominance comparison by partial sums. Returns None when incomparable.
pub fn dominance_compare(
    alpha: &Composition,
    beta: &Composition,
) -> Result<Option<std::cmp::Ordering>> {
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch(format!(
            "dominance needs equal lengths, got {} and {}",
            alpha.len(),
            beta.len()
        )));
    }
    if alpha == beta {
        return Ok(Some(std::cmp::Ordering::Equal));
    }
    let mut ge = true;
    let mut le = true;
    let mut sa = 0i64;
    let mut sb = 0i64;
    for (x, y) in alpha.0.iter().zip(&beta.0) {
        sa += *x as i64;
        sb += *y as i64;
        if sa < sb {
            ge = false;
        }
        if sa > sb {
            le = false;
        }
    }
    Ok(match (ge, le) {
        (true, false) => Some(std::cmp::Ordering::Greater),
        (false, true) => Some(std::cmp::Ordering::Less),
        (true, true) => Some(std::cmp::Ordering::Equal), // same partial sums
        (false, false) => None,
    })
}

/// The triangle order: alpha > beta iff |alpha| = |beta| and either
/// alpha+ dominates beta+ strictly, or alpha+ = beta+ and alpha dominates
/// beta. Different weights are incomparable.
pub fn triangle_compare(alpha: &Composition, beta: &Composition) -> Result<TriangleOrd> {
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch(format!(
            "triangle order needs equal lengths, got {} and {}",
            alpha.len(),
            beta.len()
        )));
    }
    if alpha == beta {
        return Ok(TriangleOrd::Equal);
    }
    if alpha.weight() != beta.weight() {
        return Ok(TriangleOrd::Incomparable);
    }
    let ap = sort_desc(alpha);
    let bp = sort_desc(beta);
    use std::cmp::Ordering::*;
    let outer = dominance_compare(&ap, &bp)?;
    Ok(match outer {
        Some(Greater) => TriangleOrd::Greater,
        Some(Less) => TriangleOrd::Less,
        Some(Equal) => match dominance_compare(alpha, beta)? {
            Some(Greater) => TriangleOrd::Greater,
            Some(Less) => TriangleOrd::Less,
            // alpha != beta with equal sorted parts and equal partial sums
            // cannot happen; equal partial sums force equality
            Some(Equal) => TriangleOrd::Incomparable,
            None => TriangleOrd::Incomparable,
        },
        None => TriangleOrd::Incomparable,
    })
}

/// The affine step: (a_1,...,a_N) -> (a_2,...,a_N, a_1 + 1).
pub fn phi_step(alpha: &Composition) -> Composition {
    let mut v: Vec<u32> = alpha.0[1..].to_vec();
    v.push(alpha.0[0] + 1);
    Composition(v)
}

/// Inverse of the affine step when the last entry is positive.
pub fn phi_inverse(alpha: &Composition) -> Option<Composition> {
    let last = *alpha.0.last().unwrap();
    if last == 0 {
        return None;
    }
    let mut v = Vec::with_capacity(alpha.len());
    v.push(last - 1);
    v.extend_from_slice(&alpha.0[..alpha.len() - 1]);
    Some(Composition(v))
}

/// k(lambda) = sum (N - 2i + 1) lambda_i over the full N-tuple; nonnegative
/// for partitions.
pub fn k_lambda(lambda: &[u32]) -> i64 {
    let n = lambda.len() as i64;
    lambda
        .iter()
        .enumerate()
        .map(|(idx, &l)| (n - 2 * (idx as i64 + 1) + 1) * l as i64)
        .sum()
}

/// A partition of N used as the shape of a Hecke module.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Shape {
    parts: Vec<u32>,
}

impl Shape {
    /// Positive, nonincreasing parts.
    pub fn new(parts: Vec<u32>) -> Result<Shape> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidParameters(
                "shape parts must be positive".into(),
            ));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameters(
                "shape parts must be nonincreasing".into(),
            ));
        }
        Ok(Shape { parts })
    }

    pub fn parse(s: &str) -> Result<Shape> {
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        match parts {
            Ok(v) => Shape::new(v),
            Err(_) => Err(Error::Parse(format!("bad shape `{}`", s))),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes; this is the N of the computation.
    pub fn size(&self) -> usize {
        self.parts.iter().sum::<u32>() as usize
    }

    /// Number of rows.
    pub fn ell(&self) -> usize {
        self.parts.len()
    }

    pub fn transpose(&self) -> Vec<u32> {
        let cols = self.parts[0] as usize;
        (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect()
    }

    /// Maximum hook length tau_1 + ell(tau) - 1.
    pub fn max_hook(&self) -> u32 {
        self.parts[0] + self.ell() as u32 - 1
    }

    /// Cells (row, col), both 1-based, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 1..=len as usize {
                out.push((r + 1, c));
            }
        }
        out
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && row <= self.parts.len() && col >= 1 && col <= self.parts[row - 1] as usize
    }

    /// arm(i,j) = lambda_i - j for a cell (i,j), 1-based.
    pub fn arm(&self, row: usize, col: usize) -> u32 {
        self.parts[row - 1] - col as u32
    }

    /// leg(i,j) = lambda'_j - i for a cell (i,j), 1-based.
    pub fn leg(&self, row: usize, col: usize) -> u32 {
        self.transpose()[col - 1] - row as u32
    }

    /// Hook length of a cell: arm + leg + 1.
    pub fn hook_len(&self, row: usize, col: usize) -> u32 {
        self.arm(row, col) + self.leg(row, col) + 1
    }

    /// N! divided by the product of hook lengths.
    pub fn hook_count(&self) -> u64 {
        let n = self.size() as u64;
        let mut numer: u64 = 1;
        for k in 1..=n {
            numer *= k;
        }
        let mut denom: u64 = 1;
        for (r, c) in self.cells() {
            denom *= self.hook_len(r, c) as u64;
        }
        numer / denom
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// All compositions of `degree` into `n` parts, lexicographically descending.
pub fn compositions_of(degree: u32, n: usize) -> Vec<Composition> {
    fn rec(degree: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 1 {
            prefix.push(degree);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=degree).rev() {
            prefix.push(first);
            rec(degree - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(degree, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions (as full N-tuples with trailing zeros) of weight `degree`.
pub fn partitions_of(degree: u32, n: usize) -> Vec<Composition> {
    compositions_of(degree, n)
        .into_iter()
        .filter(|c| c.is_partition())
        .collect()
}

/// All partition shapes of N (positive parts only), for enumerating modules.
pub fn shapes_of(n: u32) -> Vec<Shape> {
    partitions_of(n, n as usize)
        .into_iter()
        .map(|c| {
            let parts: Vec<u32> = c.0.into_iter().filter(|&p| p > 0).collect();
            Shape::new(parts).unwrap()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn sort_examples() {
        assert_eq!(sort_desc(&c(&[1, 2, 1, 4])), c(&[4, 2, 1, 1]));
        assert_eq!(sort_desc(&c(&[0, 0, 0])), c(&[0, 0, 0]));
        assert_eq!(sort_desc(&c(&[3, 3, 1, 0, 2])), c(&[3, 3, 2, 1, 0]));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_vector(&c(&[4, 2, 1, 1])), vec![1, 2, 3, 4]);
        assert_eq!(rank_vector(&c(&[1, 2, 1, 4])), vec![3, 2, 4, 1]);
        // the pattern (lambda_1,...,lambda_{m-1},0,...,0,lambda_m)
        assert_eq!(rank_vector(&c(&[3, 2, 0, 0, 1])), vec![1, 2, 4, 5, 3]);
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(inversion_number(&c(&[4, 2, 1, 1])), 0);
        assert_eq!(inversion_number(&c(&[0, 1])), 1);
        assert_eq!(inversion_number(&c(&[1, 2, 1, 4])), 4);
    }

    #[test]
    fn inversion_swap_step() {
        for n in 2..=5usize {
            for deg in 0..=4u32 {
                for a in compositions_of(deg, n) {
                    for i in 0..n - 1 {
                        if a.0[i] < a.0[i + 1] {
                            assert_eq!(
                                inversion_number(&a.swap_adjacent(i)),
                                inversion_number(&a) - 1
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(triangle_compare(&c(&[1, 1]), &c(&[1, 1])).unwrap(), TriangleOrd::Equal);
        assert_eq!(
            triangle_compare(&c(&[2, 0]), &c(&[1, 1])).unwrap(),
            TriangleOrd::Greater
        );
        assert_eq!(
            triangle_compare(&c(&[0, 2]), &c(&[2, 0])).unwrap(),
            TriangleOrd::Less
        );
        assert_eq!(
            triangle_compare(&c(&[1, 0]), &c(&[0, 2])).unwrap(),
            TriangleOrd::Incomparable
        );
        assert!(triangle_compare(&c(&[1, 0]), &c(&[1, 0, 0])).is_err());
    }

    #[test]
    fn triangle_is_partial_order() {
        // antisymmetry + transitivity over all compositions of small weight
        let all: Vec<Composition> = (0..=4).flat_map(|d| compositions_of(d, 3)).collect();
        for a in &all {
            for b in &all {
                let ab = triangle_compare(a, b).unwrap();
                let ba = triangle_compare(b, a).unwrap();
                match ab {
                    TriangleOrd::Greater => assert_eq!(ba, TriangleOrd::Less),
                    TriangleOrd::Less => assert_eq!(ba, TriangleOrd::Greater),
                    TriangleOrd::Equal => assert_eq!(a, b),
                    TriangleOrd::Incomparable => assert_eq!(ba, TriangleOrd::Incomparable),
                }
                for cc in &all {
                    if ab == TriangleOrd::Greater
                        && triangle_compare(b, cc).unwrap() == TriangleOrd::Greater
                    {
                        assert_eq!(triangle_compare(a, cc).unwrap(), TriangleOrd::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_step(&c(&[0, 0, 0])), c(&[0, 0, 1]));
        assert_eq!(phi_step(&c(&[1, 0])), c(&[0, 2]));
        // beta -> alpha of the inductive-step pattern
        let beta = c(&[1, 3, 2, 0, 0]); // (lambda_m - 1, lambda_1, ..., lambda_{m-1}, 0...)
        let alpha = c(&[3, 2, 0, 0, 2]);
        assert_eq!(phi_step(&beta), alpha);
        assert_eq!(phi_inverse(&alpha), Some(beta));
        assert_eq!(phi_inverse(&c(&[1, 0])), None);
    }

    #[test]
    fn phi_increments_one_sorted_part() {
        for n in 2..=4usize {
            for deg in 0..=3u32 {
                for a in compositions_of(deg, n) {
                    let before = sort_desc(&a);
                    let after = sort_desc(&phi_step(&a));
                    let diffs: Vec<i64> = before
                        .0
                        .iter()
                        .zip(&after.0)
                        .map(|(x, y)| *y as i64 - *x as i64)
                        .collect();
                    assert_eq!(diffs.iter().sum::<i64>(), 1);
                    assert_eq!(diffs.iter().filter(|&&d| d != 0).count(), 1);
                }
            }
        }
    }

    #[test]
    fn shape_stats() {
        let s = Shape::new(vec![4, 3]).unwrap();
        assert_eq!(s.ell(), 2);
        assert_eq!(s.max_hook(), 5);
        assert_eq!(s.transpose(), vec![2, 2, 2, 1]);

        let row = Shape::new(vec![5]).unwrap();
        assert_eq!(row.max_hook(), 5);

        assert_eq!(k_lambda(&[2, 1, 0]), 4);
    }

    #[test]
    fn k_nonnegative_on_partitions() {
        for n in 1..=6usize {
            for deg in 0..=6u32 {
                for lam in partitions_of(deg, n) {
                    assert!(k_lambda(&lam.0) >= 0, "k < 0 at {:?}", lam);
                }
            }
        }
    }

    #[test]
    fn rank_is_permutation() {
        for n in 1..=5usize {
            for deg in 0..=4u32 {
                for a in compositions_of(deg, n) {
                    let mut r = rank_vector(&a);
                    r.sort_unstable();
                    assert_eq!(r, (1..=n).collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let a = Composition::parse("1,2,1,4").unwrap();
        assert_eq!(a, c(&[1, 2, 1, 4]));
        assert_eq!(a.to_string(), "1,2,1,4");
        assert_eq!(Shape::parse("4,3").unwrap().parts(), &[4, 3]);
        assert!(Shape::parse("3,4").is_err());
        assert!(Shape::parse("2,0").is_err());
    }
}

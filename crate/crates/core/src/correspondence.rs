//! The three-way correspondence: threshold graphs, Betti sequences of their
//! coedge-ideal quotients, and anti-lecture hall compositions bounded by 1.
//!
//! Both directions of every map are explicit and exact. The graph-to-sequence
//! maps read labels off the complement; the inverse maps reconstruct sigma
//! from the composition and certify Betti input by a full round trip. An
//! independent subset-sum oracle ([`betti_oracle`]) recomputes Betti numbers
//! from induced-subgraph component counts so the labeling formulas can be
//! cross-checked exhaustively.
//!
//! Sequences are indexed from homological degree 1; the degree-0 entry is
//! always 1 for these quotients and is not stored.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{binomial, is_nonnegative};
use crate::graph::{Adjacency, Shift, ThresholdGraph};
use crate::{Error, Result};

/// Betti sequence (β_1, ..., β_n) of a quotient by a coedge ideal.
///
/// Construction only enforces what any graded Betti sequence satisfies
/// (nonempty, entries ≥ 0); whether the sequence actually arises from a
/// threshold graph is decided by [`alhc_from_betti`] / [`graph_from_betti`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiSequence(Vec<BigInt>);

impl BettiSequence {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        if !entries.iter().all(is_nonnegative) {
            return Err(Error::NotBettiSequence);
        }
        Ok(BettiSequence(entries))
    }

    pub fn from_ints(entries: &[u64]) -> Self {
        BettiSequence(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// (β_1, ..., β_n).
    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    /// n, the number of stored degrees.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entries as machine integers, when they all fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.0.iter().map(|x| x.to_u64()).collect()
    }
}

/// Anti-lecture hall composition: (λ_1, ..., λ_n) with
/// t ≥ λ_1/1 ≥ λ_2/2 ≥ ... ≥ λ_n/n ≥ 0.
///
/// The chain is checked by cross-multiplication, never by division, so
/// validity is exact. The correspondence with graphs fixes t = 1; other
/// bounds appear only in enumeration and validation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alhc {
    entries: Vec<u64>,
    bound: u64,
}

impl Alhc {
    pub fn new(entries: Vec<u64>, bound: u64) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        if entries[0] > bound {
            return Err(Error::RatioViolation);
        }
        for k in 1..entries.len() {
            // λ_{k+1}/(k+1) ≤ λ_k/k, cross-multiplied.
            if (entries[k] as u128) * (k as u128) > (entries[k - 1] as u128) * (k as u128 + 1) {
                return Err(Error::RatioViolation);
            }
        }
        Ok(Alhc { entries, bound })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Whether (λ_1, ..., λ_n) is an anti-lecture hall composition with bound t:
/// all entries nonnegative and t ≥ λ_1/1 ≥ ... ≥ λ_n/n ≥ 0. Empty input is
/// not a composition here.
pub fn validate_alhc(entries: &[i64], t: u64) -> bool {
    if entries.is_empty() || entries.iter().any(|&x| x < 0) {
        return false;
    }
    if entries[0] as u64 > t {
        return false;
    }
    entries.windows(2).enumerate().all(|(i, w)| {
        let k = i as u128 + 1;
        (w[1] as u128) * k <= (w[0] as u128) * (k + 1)
    })
}

/// λ(T): entry k counts the non-edges whose point label is k.
pub fn alhc_of(t: &ThresholdGraph) -> Alhc {
    let mut entries = vec![0u64; t.n()];
    for item in t.labeled_complement() {
        entries[item.lambda - 1] += 1;
    }
    Alhc::new(entries, 1).expect("point-label counts always satisfy the ratio chain")
}

/// β(T) by the interval-label formula: each non-edge uv (u < v) contributes
/// C(v, u+1) · C(i(v), k-u-1) to β_k for every k in its interval.
pub fn betti_of(t: &ThresholdGraph) -> BettiSequence {
    let mut beta = vec![BigInt::zero(); t.n()];
    for item in t.labeled_complement() {
        let (u, v) = (item.edge.u(), item.edge.v());
        let weight = binomial(v as u64, u as i64 + 1);
        let above = t.isolated_above(v);
        for k in item.beta.lo()..=item.beta.hi() {
            beta[k - 1] += &weight * binomial(above as u64, (k - u) as i64 - 1);
        }
    }
    BettiSequence(beta)
}

/// β from λ by the unipotent triangular transform
/// β_i = sum_{k=i}^{n} C(k-1, i-1) λ_k. Requires bound 1: that is the only
/// bound under which the composition corresponds to a graph.
pub fn betti_from_alhc(lam: &Alhc) -> Result<BettiSequence> {
    if lam.bound() != 1 {
        return Err(Error::BoundNotOne(lam.bound()));
    }
    let n = lam.len();
    let mut beta = vec![BigInt::zero(); n];
    for (i, slot) in beta.iter_mut().enumerate() {
        for k in i..n {
            *slot += binomial(k as u64, i as i64) * BigInt::from(lam.entries()[k]);
        }
    }
    Ok(BettiSequence(beta))
}

/// λ from β by the inverse transform
/// λ_i = sum_{k=i}^{n} (-1)^{i+k} C(k-1, i-1) β_k.
///
/// The two transforms are mutually inverse on all integer sequences, so this
/// always produces *some* integer vector; the input was a genuine Betti
/// sequence of a threshold graph exactly when that vector is a valid bound-1
/// composition. Anything else is rejected.
pub fn alhc_from_betti(beta: &BettiSequence) -> Result<Alhc> {
    let n = beta.len();
    let mut entries = Vec::with_capacity(n);
    for i in 0..n {
        let mut lam = BigInt::zero();
        for k in i..n {
            let term = binomial(k as u64, i as i64) * &beta.entries()[k];
            if (i + k) % 2 == 0 {
                lam += term;
            } else {
                lam -= term;
            }
        }
        // Bound-1 compositions satisfy λ_i ≤ i ≤ n, so any entry that
        // overflows u64 is already out.
        entries.push(lam.to_u64().ok_or(Error::NotBettiSequence)?);
    }
    Alhc::new(entries, 1).map_err(|_| Error::NotBettiSequence)
}

/// T from λ (bound 1): the nonzero values among k - λ_k are exactly the
/// complement of sigma in {1, ..., n}.
pub fn graph_from_alhc(lam: &Alhc) -> Result<ThresholdGraph> {
    if lam.bound() != 1 {
        return Err(Error::BoundNotOne(lam.bound()));
    }
    let n = lam.len();
    let mut in_sigma = vec![true; n + 1];
    for (k, &lam_k) in (1..=n).zip(lam.entries()) {
        let diff = k as u64 - lam_k; // λ_k ≤ k for bound 1
        if diff != 0 {
            in_sigma[diff as usize] = false;
        }
    }
    ThresholdGraph::new(n, (1..=n).filter(|&i| in_sigma[i]))
}

/// T from β: transform to a composition, rebuild the graph, then certify by
/// recomputing β(T). The certificate is what rejects nonnegative integer
/// sequences that pass the transform but belong to no graph.
pub fn graph_from_betti(beta: &BettiSequence) -> Result<ThresholdGraph> {
    let lam = alhc_from_betti(beta)?;
    let t = graph_from_alhc(&lam)?;
    if betti_of(&t) != *beta {
        return Err(Error::NotBettiSequence);
    }
    Ok(t)
}

/// Index of the last nonzero entry (the projective dimension of the
/// quotient), or 0 for the zero sequence (the complete graph's zero ideal).
pub fn projective_dimension(beta: &BettiSequence) -> usize {
    beta.entries()
        .iter()
        .rposition(|x| !x.is_zero())
        .map_or(0, |i| i + 1)
}

/// Brute-force Betti numbers from first principles:
/// β_k = sum over all (k+1)-subsets W of vertices of
/// (#components of the induced subgraph on W, minus 1).
///
/// Valid for any chordal graph, which covers every threshold graph; it never
/// looks at sigma or the labelings, so it is a genuinely independent check
/// of [`betti_of`]. Cost is Θ(2^n) subsets with near-O(1) incremental work
/// on additions, O(n^2) rebuilds on removals; fine through n ≈ 14.
pub fn betti_oracle(t: &ThresholdGraph) -> BettiSequence {
    let sums = component_defect_sums(&t.adjacency());
    BettiSequence(sums.into_iter().map(BigInt::from).collect())
}

/// Union-find over a fixed vertex slab; only vertices in the current subset
/// are ever touched, so stale entries are harmless until the next rebuild.
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn reset(&mut self, v: usize) {
        self.parent[v] = v;
        self.size[v] = 1;
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when the merge joined two distinct components.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// sums[w-2] = total over all w-subsets W of (#components(G[W]) - 1), for
/// w = 2, ..., |V|. Subsets are visited in Gray-code order so consecutive
/// subsets differ by one vertex: additions update the union-find
/// incrementally, removals rebuild it.
fn component_defect_sums(adj: &Adjacency) -> Vec<u64> {
    let size = adj.vertex_count();
    debug_assert!((2..=63).contains(&size));
    let mut sums = vec![0u64; size - 1];
    let mut uf = UnionFind::new(size);
    let mut mask = 0u64;
    let mut components = 0u64;
    for i in 1u64..1 << size {
        let bit = i.trailing_zeros() as usize; // Gray codes of i-1 and i differ here
        let v = bit;
        if mask >> bit & 1 == 0 {
            mask |= 1 << bit;
            uf.reset(v);
            components += 1;
            let mut others = mask & !(1 << bit);
            while others != 0 {
                let u = others.trailing_zeros() as usize;
                others &= others - 1;
                if adj.has_edge(u, v) && uf.union(u, v) {
                    components -= 1;
                }
            }
        } else {
            mask &= !(1 << bit);
            components = rebuild(&mut uf, adj, mask);
        }
        let w = mask.count_ones() as usize;
        if w >= 2 {
            sums[w - 2] += components - 1;
        }
    }
    sums
}

fn rebuild(uf: &mut UnionFind, adj: &Adjacency, mask: u64) -> u64 {
    let mut components = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        uf.reset(v);
        components += 1;
    }
    let mut outer = mask;
    while outer != 0 {
        let v = outer.trailing_zeros() as usize;
        outer &= outer - 1;
        let mut inner = outer;
        while inner != 0 {
            let u = inner.trailing_zeros() as usize;
            inner &= inner - 1;
            if adj.has_edge(u, v) && uf.union(u, v) {
                components -= 1;
            }
        }
    }
    components
}

/// One-vertex extension on the Betti side. Dominating appends a zero;
/// isolated sends (β_1, ..., β_n) to
/// (β, 0) + (0, β) + (C(n+1, 1), ..., C(n+1, n+1)).
pub fn shift_betti(beta: &BettiSequence, mode: Shift) -> BettiSequence {
    let n = beta.len();
    let mut out = Vec::with_capacity(n + 1);
    match mode {
        Shift::Dominating => {
            out.extend_from_slice(beta.entries());
            out.push(BigInt::zero());
        }
        Shift::Isolated => {
            for k in 1..=n + 1 {
                let mut entry = binomial(n as u64 + 1, k as i64);
                if k <= n {
                    entry += &beta.entries()[k - 1];
                }
                if k >= 2 {
                    entry += &beta.entries()[k - 2];
                }
                out.push(entry);
            }
        }
    }
    BettiSequence(out)
}

/// One-vertex extension on the composition side. Dominating appends a zero;
/// isolated sends (λ_1, ..., λ_n) to (1, λ_1 + 1, ..., λ_n + 1). The result
/// is revalidated, which can only fail when the bound-1 precondition is
/// broken.
pub fn shift_alhc(lam: &Alhc, mode: Shift) -> Result<Alhc> {
    let mut out = Vec::with_capacity(lam.len() + 1);
    match mode {
        Shift::Dominating => {
            out.extend_from_slice(lam.entries());
            out.push(0);
        }
        Shift::Isolated => {
            out.push(1);
            out.extend(lam.entries().iter().map(|&x| x + 1));
        }
    }
    Alhc::new(out, lam.bound())
}

/// Streams every composition of length n with bound t, lexicographically
/// ascending, (0, ..., 0) first and (t, 2t, ..., nt) last. There are
/// (t+1)^n of them. Panics if n = 0.
pub fn enumerate_alhc(n: usize, t: u64) -> impl Iterator<Item = Alhc> {
    assert!(n >= 1, "enumeration needs n >= 1");
    AlhcIter { current: Some(vec![0; n]), t }
}

struct AlhcIter {
    current: Option<Vec<u64>>,
    t: u64,
}

impl AlhcIter {
    /// Largest value entry k+1 may take given entry k (1-based positions):
    /// floor(λ_k (k+1) / k), or t for the first position. The chain
    /// condition is transitive, so the predecessor cap is the whole
    /// constraint.
    fn cap(&self, entries: &[u64], pos: usize) -> u64 {
        if pos == 0 {
            self.t
        } else {
            let k = pos as u128;
            ((entries[pos - 1] as u128 * (k + 1)) / k) as u64
        }
    }
}

impl Iterator for AlhcIter {
    type Item = Alhc;

    fn next(&mut self) -> Option<Alhc> {
        let entries = self.current.take()?;
        let item = Alhc { entries: entries.clone(), bound: self.t };
        let mut next = entries;
        let mut pos = next.len();
        while pos > 0 {
            pos -= 1;
            if next[pos] < self.cap(&next, pos) {
                next[pos] += 1;
                for slot in next[pos + 1..].iter_mut() {
                    *slot = 0;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(item)
    }
}

/// Exhaustively checks, for every threshold graph with at most `max_n + 1`
/// vertices, that the labeling formula agrees with the subset oracle and
/// that both inverse maps round-trip. Returns the number of graphs checked;
/// the first disagreement aborts with the offending (n, sigma).
pub fn oracle_check(max_n: usize) -> Result<u64> {
    let mut checked = 0u64;
    for n in 1..=max_n {
        let failure = (0u64..1 << n)
            .into_par_iter()
            .find_map_first(|mask| {
                let t = ThresholdGraph::from_mask(n, mask);
                let beta = betti_of(&t);
                let ok = betti_oracle(&t) == beta
                    && graph_from_betti(&beta).as_ref() == Ok(&t)
                    && graph_from_alhc(&alhc_of(&t)).as_ref() == Ok(&t);
                (!ok).then(|| t.sigma().iter().copied().collect::<Vec<usize>>())
            });
        if let Some(sigma) = failure {
            return Err(Error::OracleMismatch { n, sigma });
        }
        checked += 1 << n;
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate;
    use std::collections::HashSet;

    fn graph(n: usize, sigma: &[usize]) -> ThresholdGraph {
        ThresholdGraph::new(n, sigma.iter().copied()).unwrap()
    }

    fn alhc(entries: &[u64]) -> Alhc {
        Alhc::new(entries.to_vec(), 1).unwrap()
    }

    /// n = 3 correspondence, all eight graphs: (sigma, betti, alhc).
    const TABLE_N3: [(&[usize], &[u64], &[u64]); 8] = [
        (&[], &[0, 0, 0], &[0, 0, 0]),
        (&[1], &[1, 0, 0], &[1, 0, 0]),
        (&[2], &[2, 1, 0], &[1, 1, 0]),
        (&[3], &[3, 3, 1], &[1, 1, 1]),
        (&[1, 2], &[3, 2, 0], &[1, 2, 0]),
        (&[1, 3], &[4, 4, 1], &[1, 2, 1]),
        (&[2, 3], &[5, 6, 2], &[1, 2, 2]),
        (&[1, 2, 3], &[6, 8, 3], &[1, 2, 3]),
    ];

    #[test]
    fn three_vertex_table() {
        for &(sigma, beta, lam) in &TABLE_N3 {
            let t = graph(3, sigma);
            assert_eq!(betti_of(&t), BettiSequence::from_ints(beta), "beta of {sigma:?}");
            assert_eq!(alhc_of(&t).entries(), lam, "lambda of {sigma:?}");
        }
    }

    #[test]
    fn worked_example_sequences() {
        let t = graph(5, &[1, 2, 4]);
        assert_eq!(betti_of(&t), BettiSequence::from_ints(&[7, 11, 6, 1, 0]));
        assert_eq!(alhc_of(&t).entries(), [1, 2, 3, 1, 0]);
        // And the one-smaller relative from the four-vertex table.
        let t = graph(4, &[1, 2, 4]);
        assert_eq!(betti_of(&t), BettiSequence::from_ints(&[7, 11, 6, 1]));
        assert_eq!(alhc_of(&t).entries(), [1, 2, 3, 1]);
    }

    #[test]
    fn transforms_are_mutually_inverse() {
        assert_eq!(
            betti_from_alhc(&alhc(&[1, 2, 2])).unwrap(),
            BettiSequence::from_ints(&[5, 6, 2])
        );
        assert_eq!(
            betti_from_alhc(&alhc(&[1, 2, 3, 1, 0])).unwrap(),
            BettiSequence::from_ints(&[7, 11, 6, 1, 0])
        );
        assert_eq!(
            alhc_from_betti(&BettiSequence::from_ints(&[7, 11, 6, 1, 0]))
                .unwrap()
                .entries(),
            [1, 2, 3, 1, 0]
        );
        for n in 1..=9 {
            for t in enumerate(n) {
                let beta = betti_of(&t);
                let lam = alhc_of(&t);
                assert_eq!(betti_from_alhc(&lam).unwrap(), beta);
                assert_eq!(alhc_from_betti(&beta).unwrap(), lam);
            }
        }
    }

    #[test]
    fn graph_reconstruction() {
        assert_eq!(graph_from_alhc(&alhc(&[1, 2, 3, 1, 0])).unwrap(), graph(5, &[1, 2, 4]));
        assert_eq!(graph_from_alhc(&alhc(&[0, 0, 0])).unwrap(), graph(3, &[]));
        assert_eq!(graph_from_alhc(&alhc(&[1, 2, 3])).unwrap(), graph(3, &[1, 2, 3]));
        assert_eq!(
            graph_from_betti(&BettiSequence::from_ints(&[7, 11, 6, 1, 0])).unwrap(),
            graph(5, &[1, 2, 4])
        );
        assert_eq!(
            graph_from_betti(&BettiSequence::from_ints(&[4, 4, 1])).unwrap(),
            graph(3, &[1, 3])
        );
        assert_eq!(
            graph_from_betti(&BettiSequence::from_ints(&[0, 0, 0])).unwrap(),
            graph(3, &[])
        );
    }

    #[test]
    fn invalid_sequences_are_rejected() {
        // Transform output goes negative.
        assert_eq!(
            alhc_from_betti(&BettiSequence::from_ints(&[1, 5, 0])),
            Err(Error::NotBettiSequence)
        );
        // Transform output is nonnegative but fails the ratio chain.
        assert_eq!(
            alhc_from_betti(&BettiSequence::from_ints(&[1, 1])),
            Err(Error::NotBettiSequence)
        );
        assert_eq!(
            graph_from_betti(&BettiSequence::from_ints(&[2, 0, 0])),
            Err(Error::NotBettiSequence)
        );
        assert!(BettiSequence::new(vec![]).is_err());
        assert_eq!(
            BettiSequence::new(vec![BigInt::from(-1)]),
            Err(Error::NotBettiSequence)
        );
        // Wrong bound is refused before any arithmetic.
        let lam2 = Alhc::new(vec![2, 4], 2).unwrap();
        assert_eq!(betti_from_alhc(&lam2), Err(Error::BoundNotOne(2)));
        assert_eq!(graph_from_alhc(&lam2), Err(Error::BoundNotOne(2)));
    }

    #[test]
    fn alhc_validation() {
        assert!(validate_alhc(&[1, 2, 2, 1, 0], 1));
        assert!(validate_alhc(&[1, 2, 3, 4, 5], 1));
        assert!(validate_alhc(&[0, 0, 0], 1));
        assert!(!validate_alhc(&[2, 1], 1)); // first entry exceeds t
        assert!(!validate_alhc(&[1, 3], 1)); // 3/2 > 1/1
        assert!(!validate_alhc(&[1, 2, 1, 3], 1)); // 3/4 > 1/3
        assert!(!validate_alhc(&[0, -1], 1));
        assert!(!validate_alhc(&[], 1));
        assert!(validate_alhc(&[2, 4, 6], 2));
        assert!(!validate_alhc(&[3, 4, 6], 2));
        assert_eq!(Alhc::new(vec![2, 1], 1), Err(Error::RatioViolation));
        assert_eq!(Alhc::new(vec![], 1), Err(Error::EmptySequence));
    }

    #[test]
    fn alhc_enumeration() {
        let all: Vec<Alhc> = enumerate_alhc(3, 1).collect();
        assert_eq!(all.len(), 8);
        let expected: HashSet<Vec<u64>> =
            TABLE_N3.iter().map(|&(_, _, lam)| lam.to_vec()).collect();
        let got: HashSet<Vec<u64>> = all.iter().map(|l| l.entries().to_vec()).collect();
        assert_eq!(got, expected);

        // Lexicographic order, smallest first.
        let seq: Vec<Vec<u64>> =
            enumerate_alhc(2, 2).map(|l| l.entries().to_vec()).collect();
        assert_eq!(
            seq,
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![1, 1],
                vec![1, 2],
                vec![2, 0],
                vec![2, 1],
                vec![2, 2],
                vec![2, 3],
                vec![2, 4],
            ]
        );

        assert_eq!(enumerate_alhc(1, 0).map(|l| l.entries().to_vec()).collect::<Vec<_>>(), vec![vec![0]]);

        // (t+1)^n count on a small grid, every item valid.
        for n in 1..=6usize {
            for t in 0..=3u64 {
                let mut count = 0u64;
                for lam in enumerate_alhc(n, t) {
                    let as_i64: Vec<i64> = lam.entries().iter().map(|&x| x as i64).collect();
                    assert!(validate_alhc(&as_i64, t));
                    count += 1;
                }
                assert_eq!(count, (t + 1).pow(n as u32), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn alhc_enumeration_matches_graph_images() {
        for n in 1..=8 {
            let images: HashSet<Vec<u64>> =
                enumerate(n).map(|t| alhc_of(&t).entries().to_vec()).collect();
            let listed: HashSet<Vec<u64>> =
                enumerate_alhc(n, 1).map(|l| l.entries().to_vec()).collect();
            assert_eq!(images, listed);
            assert_eq!(images.len(), 1 << n);
        }
    }

    #[test]
    fn oracle_agrees_with_formula() {
        assert_eq!(betti_oracle(&graph(3, &[3])), BettiSequence::from_ints(&[3, 3, 1]));
        assert_eq!(betti_oracle(&graph(4, &[])), BettiSequence::from_ints(&[0, 0, 0, 0]));
        assert_eq!(
            betti_oracle(&graph(5, &[1, 2, 4])),
            BettiSequence::from_ints(&[7, 11, 6, 1, 0])
        );
        for n in 1..=8 {
            for t in enumerate(n) {
                assert_eq!(betti_oracle(&t), betti_of(&t), "sigma={:?}", t.sigma());
            }
        }
    }

    #[test]
    fn oracle_check_runs() {
        assert_eq!(oracle_check(6).unwrap(), 2 + 4 + 8 + 16 + 32 + 64);
    }

    #[test]
    fn shifts_match_appends() {
        // Frozen examples first.
        assert_eq!(
            shift_betti(&BettiSequence::from_ints(&[5, 6, 2]), Shift::Dominating),
            BettiSequence::from_ints(&[5, 6, 2, 0])
        );
        assert_eq!(
            shift_betti(&BettiSequence::from_ints(&[5, 6, 2]), Shift::Isolated),
            BettiSequence::from_ints(&[9, 17, 12, 3])
        );
        assert_eq!(
            shift_alhc(&alhc(&[1, 2, 2]), Shift::Isolated).unwrap().entries(),
            [1, 2, 3, 3]
        );
        assert_eq!(
            shift_alhc(&alhc(&[0, 0, 0]), Shift::Isolated).unwrap().entries(),
            [1, 1, 1, 1]
        );
        // Shift on the sequence side = append on the graph side.
        for n in 1..=7 {
            for t in enumerate(n) {
                for mode in [Shift::Dominating, Shift::Isolated] {
                    let bigger = t.shift(mode);
                    assert_eq!(shift_betti(&betti_of(&t), mode), betti_of(&bigger));
                    assert_eq!(shift_alhc(&alhc_of(&t), mode).unwrap(), alhc_of(&bigger));
                }
            }
        }
    }

    #[test]
    fn projective_dimension_values() {
        assert_eq!(projective_dimension(&BettiSequence::from_ints(&[7, 11, 6, 1, 0])), 4);
        assert_eq!(projective_dimension(&BettiSequence::from_ints(&[0, 0, 0])), 0);
        assert_eq!(projective_dimension(&BettiSequence::from_ints(&[3, 3, 1])), 3);
        // Equals max(sigma) with max(∅) = 0.
        for n in 1..=8 {
            for t in enumerate(n) {
                let expected = t.sigma().iter().next_back().copied().unwrap_or(0);
                assert_eq!(projective_dimension(&betti_of(&t)), expected);
            }
        }
    }

    #[test]
    fn mass_conservation() {
        // sum λ_k = sum sigma = β_1 = #non-edges.
        for n in 1..=8 {
            for t in enumerate(n) {
                let total: u64 = alhc_of(&t).entries().iter().sum();
                let sigma_sum: usize = t.sigma().iter().sum();
                assert_eq!(total, sigma_sum as u64);
                assert_eq!(betti_of(&t).entries()[0], BigInt::from(total));
            }
        }
    }

    #[test]
    fn alternating_betti_sum() {
        // sum (-1)^{k-1} β_k is 1 unless the ideal is zero.
        for n in 1..=8 {
            for t in enumerate(n) {
                let mut sum = BigInt::zero();
                for (k, b) in betti_of(&t).entries().iter().enumerate() {
                    if k % 2 == 0 {
                        sum += b;
                    } else {
                        sum -= b;
                    }
                }
                let expected = if t.sigma().is_empty() { 0 } else { 1 };
                assert_eq!(sum, BigInt::from(expected));
            }
        }
    }
}

//! 2-densities: `d2(H) = (e(H) - 1) / (|H| - 2)` and its maximum `m2` over
//! subgraphs with at least three vertices.
//!
//! For a fixed vertex set more edges only raise `d2`, so the maximum is
//! attained by an induced subgraph and the engine only looks at vertex
//! subsets. Vertices with equal open or closed neighbourhoods are
//! interchangeable, so the densest subset of each size is found by choosing
//! how many vertices to take from each twin class.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bits::Bits;
use crate::canon::{canonical_form, canonical_graph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::rational::Rational;
use crate::subgraph::contains_subgraph;

/// Count-vector sweeps larger than this fall back to per-size search.
const VECTOR_SWEEP_LIMIT: u64 = 1 << 22;

fn need_three(g: &Graph) -> Result<()> {
    if g.n() < 3 {
        Err(Error::UndefinedDensity(g.n()))
    } else {
        Ok(())
    }
}

fn ratio(edges: usize, size: usize) -> Rational {
    Rational::new(edges as i64 - 1, size as i64 - 2)
}

pub fn d2(g: &Graph) -> Result<Rational> {
    need_three(g)?;
    Ok(ratio(g.edge_count(), g.n()))
}

/// Densest induced subgraph of one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeBest {
    pub edges: usize,
    /// Sorted vertex set attaining `edges`.
    pub witness: Vec<usize>,
}

/// Partition into twin classes. The flag is true for true twins (the class
/// is a clique); singletons are reported as non-clique classes.
pub fn twin_classes(g: &Graph) -> Vec<(Vec<usize>, bool)> {
    let n = g.n();
    let mut closed: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for v in 0..n {
        let mut row = g.row(v).to_vec();
        row[v / 64] |= 1 << (v % 64);
        closed.entry(row).or_default().push(v);
    }
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for class in closed.into_values() {
        if class.len() > 1 {
            for &v in &class {
                assigned[v] = true;
            }
            out.push((class, true));
        }
    }
    let mut open: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for v in (0..n).filter(|&v| !assigned[v]) {
        open.entry(g.row(v).to_vec()).or_default().push(v);
    }
    out.extend(open.into_values().map(|c| (c, false)));
    for (c, _) in out.iter_mut() {
        c.sort_unstable();
    }
    out.sort_by_key(|(c, _)| c[0]);
    out
}

struct VectorSweep {
    sizes: Vec<usize>,
    clique: Vec<bool>,
    adj: Vec<Vec<bool>>,
    counts: Vec<usize>,
    best: Vec<Option<(usize, Vec<usize>)>>,
}

impl VectorSweep {
    fn dfs(&mut self, i: usize, size: usize, edges: usize) {
        if i == self.sizes.len() {
            match &self.best[size] {
                Some((e, _)) if *e >= edges => {}
                _ => self.best[size] = Some((edges, self.counts.clone())),
            }
            return;
        }
        let link: usize = (0..i).filter(|&j| self.adj[i][j]).map(|j| self.counts[j]).sum();
        for c in 0..=self.sizes[i] {
            let inner = if self.clique[i] { c * c.saturating_sub(1) / 2 } else { 0 };
            self.counts[i] = c;
            self.dfs(i + 1, size + c, edges + inner + c * link);
        }
        self.counts[i] = 0;
    }
}

fn profile_by_classes(g: &Graph, classes: &[(Vec<usize>, bool)]) -> Vec<SizeBest> {
    let q = classes.len();
    let reps: Vec<usize> = classes.iter().map(|(c, _)| c[0]).collect();
    let adj = (0..q)
        .map(|i| (0..q).map(|j| i != j && g.has_edge(reps[i], reps[j])).collect())
        .collect();
    let mut sweep = VectorSweep {
        sizes: classes.iter().map(|(c, _)| c.len()).collect(),
        clique: classes.iter().map(|(_, t)| *t).collect(),
        adj,
        counts: vec![0; q],
        best: vec![None; g.n() + 1],
    };
    sweep.dfs(0, 0, 0);
    sweep
        .best
        .into_iter()
        .map(|b| {
            let (edges, counts) = b.expect("every size is reachable");
            let mut witness: Vec<usize> = classes
                .iter()
                .zip(&counts)
                .flat_map(|((c, _), &k)| c[..k].iter().copied())
                .collect();
            witness.sort_unstable();
            SizeBest { edges, witness }
        })
        .collect()
}

struct Densest<'a> {
    masks: &'a [u64],
    target: usize,
    best: usize,
    best_set: u64,
}

impl Densest<'_> {
    fn dfs(&mut self, chosen: u64, size: usize, edges: usize, cand: u64) {
        if size == self.target {
            if edges > self.best || self.best_set == 0 {
                self.best = edges;
                self.best_set = chosen;
            }
            return;
        }
        let left = self.target - size;
        if (cand.count_ones() as usize) < left {
            return;
        }
        // Each added vertex brings its links into `chosen` plus at most half
        // of its links among the other additions.
        let mut gains: Vec<usize> = cand
            .iter()
            .map(|v| {
                let m = self.masks[v];
                2 * (m & chosen).count_ones() as usize + ((m & cand).count_ones() as usize).min(left - 1)
            })
            .collect();
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let bound2 = 2 * edges + gains[..left].iter().sum::<usize>();
        if self.best_set != 0 && bound2 <= 2 * self.best {
            return;
        }
        let v = cand
            .iter()
            .max_by_key(|&v| ((self.masks[v] & chosen).count_ones(), (self.masks[v] & cand).count_ones()))
            .expect("nonempty candidates");
        let gain = (self.masks[v] & chosen).count_ones() as usize;
        self.dfs(chosen.with(v), size + 1, edges + gain, cand.without(v));
        self.dfs(chosen, size, edges, cand.without(v));
    }
}

fn densest_by_search(g: &Graph, s: usize) -> SizeBest {
    let masks = g.masks();
    let mut d = Densest {
        masks: &masks,
        target: s,
        best: 0,
        best_set: 0,
    };
    if s == 0 {
        return SizeBest { edges: 0, witness: Vec::new() };
    }
    d.dfs(0, 0, 0, u64::prefix(g.n()));
    SizeBest {
        edges: d.best,
        witness: d.best_set.iter().collect(),
    }
}

/// Densest induced subgraph for every size `0..=n`.
pub fn edge_profile(g: &Graph) -> Result<Vec<SizeBest>> {
    let classes = twin_classes(g);
    let work = classes
        .iter()
        .try_fold(1u64, |acc, (c, _)| acc.checked_mul(c.len() as u64 + 1))
        .unwrap_or(u64::MAX);
    if work <= VECTOR_SWEEP_LIMIT {
        return Ok(profile_by_classes(g, &classes));
    }
    if g.n() > 64 {
        return Err(Error::Infeasible(format!(
            "densest-subgraph search on {} vertices with {} twin classes",
            g.n(),
            classes.len()
        )));
    }
    Ok((0..=g.n()).into_par_iter().map(|s| densest_by_search(g, s)).collect())
}

/// Per-size profile computed without the twin-class shortcut.
pub fn edge_profile_by_search(g: &Graph) -> Result<Vec<SizeBest>> {
    if g.n() > 64 {
        return Err(Error::Infeasible(format!("densest-subgraph search on {} vertices", g.n())));
    }
    Ok((0..=g.n()).map(|s| densest_by_search(g, s)).collect())
}

pub fn max_edges_at_size(g: &Graph, s: usize) -> Result<SizeBest> {
    if s < 3 || s > g.n() {
        return Err(Error::InvalidParameter(format!(
            "subgraph size must satisfy 3 <= s <= n, got s={s}, n={}",
            g.n()
        )));
    }
    let mut p = edge_profile(g)?;
    Ok(p.swap_remove(s))
}

/// `m2` with the sizes attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct M2 {
    pub value: Rational,
    /// Largest maximizing vertex set.
    pub witness: Vec<usize>,
    /// Every subgraph size whose densest member attains `value`.
    pub sizes: Vec<usize>,
}

fn m2_from_profile(profile: &[SizeBest]) -> M2 {
    let value = (3..profile.len())
        .map(|s| ratio(profile[s].edges, s))
        .max()
        .expect("at least three vertices");
    let sizes: Vec<usize> = (3..profile.len())
        .filter(|&s| ratio(profile[s].edges, s) == value)
        .collect();
    let witness = profile[*sizes.last().expect("a maximizer")].witness.clone();
    M2 { value, witness, sizes }
}

pub fn m2(g: &Graph) -> Result<M2> {
    need_three(g)?;
    Ok(m2_from_profile(&edge_profile(g)?))
}

pub fn m2_value(g: &Graph) -> Result<Rational> {
    Ok(m2(g)?.value)
}

pub fn is_strictly_2_balanced(g: &Graph) -> Result<bool> {
    need_three(g)?;
    let p = edge_profile(g)?;
    let whole = ratio(g.edge_count(), g.n());
    Ok((3..g.n()).all(|s| ratio(p[s].edges, s) < whole))
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul((n - i) as u64) / (i as u64 + 1))
}

/// Largest number of subsets examined when breaking ties among maximizers.
const TIE_SWEEP_LIMIT: u64 = 1 << 20;

/// A strictly 2-balanced subgraph with the same `m2`.
///
/// Returns the densest subgraph with the fewest vertices; among several of
/// that size the one with the smallest canonical key wins. The result is in
/// canonical labelling.
pub fn reduce_to_strictly_2_balanced(h: &Graph) -> Result<Graph> {
    need_three(h)?;
    let p = edge_profile(h)?;
    let res = m2_from_profile(&p);
    let s = res.sizes[0];
    let target = p[s].edges;
    if h.n() <= 64 && binomial(h.n(), s) <= TIE_SWEEP_LIMIT {
        let masks = h.masks();
        let mut best: Option<(crate::canon::CanonicalKey, Graph)> = None;
        for_each_subset(h.n(), s, |set| {
            let e: usize = set.iter().map(|v| (masks[v] & set).count_ones() as usize).sum::<usize>() / 2;
            if e == target {
                let sub = canonical_graph(&h.induced_mask(set));
                let key = canonical_form(&sub);
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((key, sub));
                }
            }
        });
        return Ok(best.expect("profile witness exists").1);
    }
    Ok(canonical_graph(&h.induced(&p[s].witness)))
}

/// Calls `f` on every `k`-subset of `0..n` in colexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u64)) {
    assert!(n <= 64);
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut set = u64::prefix(k);
    loop {
        f(set);
        // Gosper's hack
        let c = set & set.wrapping_neg();
        let r = set.wrapping_add(c);
        if r == 0 || r > limit || r < set {
            return;
        }
        set = (((r ^ set) >> 2) / c) | r;
        if set > limit {
            return;
        }
    }
}

/// Strictly 2-balanced graphs covering every m-vertex graph with α < r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenFamily {
    pub m: usize,
    pub r: usize,
    /// Canonically labelled, ordered by (vertices, edges, key).
    pub members: Vec<Graph>,
    /// Minimum `m2` over members, equal to M(m, r).
    pub min_density: Rational,
}

impl ForbiddenFamily {
    pub fn t(&self) -> usize {
        self.members.len()
    }

    /// First member embedded in `g`, with its embedding.
    pub fn find_member(&self, g: &Graph) -> Option<(usize, Vec<usize>)> {
        self.members
            .iter()
            .enumerate()
            .find_map(|(i, h)| crate::subgraph::find_subgraph(g, h).map(|emb| (i, emb)))
    }
}

impl Serialize for ForbiddenFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ForbiddenFamily", 4)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("r", &self.r)?;
        let g6: Vec<String> = self.members.iter().map(to_graph6).collect();
        st.serialize_field("members", &g6)?;
        st.serialize_field("M", &self.min_density)?;
        st.end()
    }
}

pub const FAMILY_MAX_M: usize = 10;

pub fn check_local_params(m: usize, r: usize) -> Result<()> {
    if r < 2 || m + 1 < 2 * r {
        return Err(Error::InvalidParameter(format!(
            "need m >= 2r-1 >= 3, got m={m}, r={r}"
        )));
    }
    Ok(())
}

pub fn forbidden_family(m: usize, r: usize) -> Result<ForbiddenFamily> {
    check_local_params(m, r)?;
    if m > FAMILY_MAX_M {
        return Err(Error::Infeasible(format!(
            "forbidden family enumeration supports m <= {FAMILY_MAX_M}, got {m}"
        )));
    }
    let classes = crate::enumerate::enumerate_alpha_bounded(m, r - 1)?;
    let reduced: Vec<Graph> = classes
        .par_iter()
        .map(|g| reduce_to_strictly_2_balanced(g).expect("m >= 3"))
        .collect();
    let mut unique: BTreeMap<(usize, usize, String), Graph> = BTreeMap::new();
    for h in reduced {
        let key = to_graph6(&h);
        unique.entry((h.n(), h.edge_count(), key)).or_insert(h);
    }
    let mut members: Vec<Graph> = Vec::new();
    for h in unique.into_values() {
        if !members.iter().any(|k| contains_subgraph(&h, k)) {
            members.push(h);
        }
    }
    let min_density = members
        .iter()
        .map(|h| d2(h).expect("members have >= 3 vertices"))
        .min()
        .expect("the complete graph on m vertices always qualifies");
    Ok(ForbiddenFamily {
        m,
        r,
        members,
        min_density,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
    }

    fn h7() -> Graph {
        // C5 blow-up with cliques of sizes 1,2,1,1,2
        let parts = [vec![0], vec![1, 2], vec![3], vec![4], vec![5, 6]];
        let mut edges = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            for (a, &u) in p.iter().enumerate() {
                for &v in &p[a + 1..] {
                    edges.push((u, v));
                }
                for &v in &parts[(i + 1) % 5] {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(7, &edges).unwrap()
    }

    fn k5_minus_edge() -> Graph {
        let mut g = Graph::complete(5).unwrap();
        g.clear_edge(0, 1);
        g
    }

    fn brute_profile(g: &Graph) -> Vec<usize> {
        let n = g.n();
        let masks = g.masks();
        let mut best = vec![0; n + 1];
        for set in 0u64..1 << n {
            let e = set.iter().map(|v| (masks[v] & set).count_ones() as usize).sum::<usize>() / 2;
            let s = set.count_ones() as usize;
            best[s] = best[s].max(e);
        }
        best
    }

    #[test]
    fn d2_examples() {
        assert_eq!(d2(&Graph::complete(4).unwrap()).unwrap(), Rational::new(5, 2));
        assert_eq!(d2(&cycle(5)).unwrap(), Rational::new(4, 3));
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(d2(&p3).unwrap(), Rational::int(1));
        assert_eq!(d2(&Graph::complete(2).unwrap()), Err(Error::UndefinedDensity(2)));
    }

    #[test]
    fn m2_examples() {
        assert_eq!(m2_value(&Graph::complete(5).unwrap()).unwrap(), Rational::int(3));
        assert_eq!(m2_value(&cycle(9)).unwrap(), Rational::new(8, 7));
        assert_eq!(m2_value(&h7()).unwrap(), Rational::int(2));
        let res = m2(&h7()).unwrap();
        assert_eq!(res.witness.len(), 7);
    }

    #[test]
    fn max_edges_examples() {
        assert_eq!(max_edges_at_size(&cycle(5), 3).unwrap().edges, 2);
        assert_eq!(max_edges_at_size(&k5_minus_edge(), 4).unwrap().edges, 6);
        let brute = brute_profile(&h7());
        assert_eq!(max_edges_at_size(&h7(), 5).unwrap().edges, brute[5]);
        assert!(max_edges_at_size(&cycle(5), 2).is_err());
        assert!(max_edges_at_size(&cycle(5), 6).is_err());
    }

    #[test]
    fn profile_matches_brute_force() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        for n in 3..=11 {
            for _ in 0..20 {
                let mut g = Graph::empty(n).unwrap();
                for u in 0..n {
                    for v in u + 1..n {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        if state.is_multiple_of(3) {
                            g.set_edge(u, v);
                        }
                    }
                }
                let brute = brute_profile(&g);
                let fast: Vec<usize> = edge_profile(&g).unwrap().iter().map(|b| b.edges).collect();
                let slow = edge_profile_by_search(&g).unwrap();
                assert_eq!(fast, brute, "{g:?}");
                assert_eq!(slow.iter().map(|b| b.edges).collect::<Vec<_>>(), brute, "{g:?}");
                for (s, b) in slow.iter().enumerate() {
                    assert_eq!(b.witness.len(), s);
                    assert_eq!(g.induced(&b.witness).edge_count(), b.edges);
                }
            }
        }
    }

    #[test]
    fn strict_balance_examples() {
        assert!(is_strictly_2_balanced(&Graph::complete(4).unwrap()).unwrap());
        assert!(is_strictly_2_balanced(&cycle(5)).unwrap());
        assert!(!is_strictly_2_balanced(&bowtie()).unwrap());
    }

    #[test]
    fn reduction_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(is_isomorphic(&reduce_to_strictly_2_balanced(&bowtie()).unwrap(), &k3));
        assert!(is_isomorphic(&reduce_to_strictly_2_balanced(&cycle(5)).unwrap(), &cycle(5)));
        let k5e = k5_minus_edge();
        assert_eq!(m2_value(&k5e).unwrap(), Rational::new(8, 3));
        assert!(is_isomorphic(&reduce_to_strictly_2_balanced(&k5e).unwrap(), &k5e));
        // the diamond ties with its triangles
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_isomorphic(&reduce_to_strictly_2_balanced(&diamond).unwrap(), &k3));
    }

    #[test]
    fn subsets_are_enumerated_once() {
        let mut seen = Vec::new();
        for_each_subset(6, 3, |s| seen.push(s));
        assert_eq!(seen.len(), 20);
        assert!(seen.iter().all(|s| s.count_ones() == 3 && *s < 64));
        seen.dedup();
        assert_eq!(seen.len(), 20);
        let mut all = 0;
        for_each_subset(64, 64, |_| all += 1);
        assert_eq!(all, 1);
    }

    #[test]
    fn twins_partition_vertices() {
        let g = Graph::complete(4).unwrap().disjoint_union(&Graph::empty(3).unwrap()).unwrap();
        let classes = twin_classes(&g);
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0], (vec![0, 1, 2, 3], true));
        assert_eq!(classes[1], (vec![4, 5, 6], false));
    }
}

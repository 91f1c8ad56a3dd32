//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the search kernels of the library.
#![allow(dead_code)]

use turan2d::{Graph, Rational};

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn is_independent(adj: &[Vec<bool>], set: u64) -> bool {
    let vs: Vec<usize> = (0..adj.len()).filter(|&v| set >> v & 1 == 1).collect();
    vs.iter().all(|&u| vs.iter().all(|&v| !adj[u][v]))
}

pub fn is_clique(adj: &[Vec<bool>], set: u64) -> bool {
    let vs: Vec<usize> = (0..adj.len()).filter(|&v| set >> v & 1 == 1).collect();
    vs.iter().all(|&u| vs.iter().all(|&v| u == v || adj[u][v]))
}

/// Largest independent subset of `within`.
pub fn alpha_within(adj: &[Vec<bool>], within: u64) -> usize {
    let mut best = 0;
    let mut sub = within;
    loop {
        if is_independent(adj, sub) {
            best = best.max(sub.count_ones() as usize);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & within;
    }
    best
}

pub fn alpha(g: &Graph) -> usize {
    alpha_within(&adjacency(g), (1u64 << g.n()) - 1)
}

pub fn omega(g: &Graph) -> usize {
    let adj = adjacency(g);
    (0u64..1 << g.n())
        .filter(|&s| is_clique(&adj, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn local_alpha(g: &Graph, m: usize) -> usize {
    let adj = adjacency(g);
    (0u64..1 << g.n())
        .filter(|s| s.count_ones() as usize == m)
        .map(|s| alpha_within(&adj, s))
        .min()
        .unwrap()
}

/// Max of `(e(H)-1)/(|H|-2)` over all subgraphs `H`, edge subsets included.
pub fn m2_all_subgraphs(g: &Graph) -> Rational {
    let n = g.n();
    let edges = g.edges();
    let mut best: Option<Rational> = None;
    for f in 0u64..1 << edges.len() {
        let chosen: Vec<&(usize, usize)> = (0..edges.len()).filter(|&i| f >> i & 1 == 1).map(|i| &edges[i]).collect();
        let touched = chosen.iter().fold(0u64, |m, &&(u, v)| m | 1 << u | 1 << v);
        for s in 0u64..1 << n {
            if s & touched != touched || s.count_ones() < 3 {
                continue;
            }
            let d = Rational::new(chosen.len() as i64 - 1, s.count_ones() as i64 - 2);
            if best.is_none_or(|b| d > b) {
                best = Some(d);
            }
        }
    }
    best.unwrap()
}

/// Lexicographically smallest upper-triangle bit string over all relabellings.
pub fn brute_canon(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let adj = adjacency(g);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let code: Vec<bool> = (0..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .map(|(u, v)| adj[perm[u]][perm[v]])
            .collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every labelled graph on `n` vertices.
pub fn labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let e: Vec<(usize, usize)> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        Graph::from_edges(n, &e).unwrap()
    })
}

/// Deterministic pseudo-random graph; each edge present with chance `p256 / 256`.
pub fn lcg_graph(n: usize, state: &mut u64, p256: u64) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if *state >> 56 < p256 {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &e).unwrap()
}

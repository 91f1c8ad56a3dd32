//! Exact clique and independence invariants.
//!
//! Maximum clique is a colouring-bounded branch and bound over bit rows
//! (greedy colour classes give the upper bound, vertices are expanded in
//! reverse colour order). Independence numbers run the same kernel on the
//! complement after peeling isolated and pendant vertices and splitting
//! into connected components.

use crate::bits::{Bits, Wide};
use crate::error::{Error, Result};
use crate::graph::Graph;

struct CliqueSearch<'a, B: Bits> {
    adj: &'a [B],
    best: Vec<usize>,
    current: Vec<usize>,
    /// Stop as soon as a clique of this size is found.
    stop_at: usize,
    done: bool,
}

impl<'a, B: Bits> CliqueSearch<'a, B> {
    fn colour_order(&self, cand: B) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(cand.count() as usize);
        let mut colours = Vec::with_capacity(order.capacity());
        let mut uncoloured = cand;
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured;
            while let Some(v) = q.first() {
                q = q.without(v).and_not(self.adj[v]);
                uncoloured = uncoloured.without(v);
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(&mut self, mut cand: B) {
        let (order, colours) = self.colour_order(cand);
        for idx in (0..order.len()).rev() {
            if self.done || self.current.len() + colours[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            self.current.push(v);
            let next = cand.and(self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                    if self.best.len() >= self.stop_at {
                        self.done = true;
                    }
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand = cand.without(v);
        }
    }
}

/// Maximum clique inside `cand` for adjacency rows `adj`.
pub fn max_clique_in<B: Bits>(adj: &[B], cand: B) -> Vec<usize> {
    max_clique_bounded(adj, cand, usize::MAX)
}

/// Like [`max_clique_in`] but returns as soon as a clique of size `stop_at`
/// is found (the result is then a clique of exactly that size, not
/// necessarily maximum).
pub fn max_clique_bounded<B: Bits>(adj: &[B], cand: B, stop_at: usize) -> Vec<usize> {
    if cand.is_empty() {
        return Vec::new();
    }
    let mut s = CliqueSearch {
        adj,
        best: Vec::new(),
        current: Vec::new(),
        stop_at,
        done: false,
    };
    s.expand(cand);
    let mut best = s.best;
    best.sort_unstable();
    best
}

/// Complement rows restricted to the first `n` vertices.
pub fn complement_rows<B: Bits>(adj: &[B]) -> Vec<B> {
    let n = adj.len();
    let all = B::prefix(n);
    adj.iter()
        .enumerate()
        .map(|(v, &row)| all.and_not(row).without(v))
        .collect()
}

/// Clique number of the subgraph induced by `within` (masks for `n <= 64`).
pub fn clique_number_within(masks: &[u64], within: u64) -> usize {
    max_clique_in(masks, within).len()
}

/// Independence number of the subgraph induced by `within` (`n <= 64`).
pub fn independence_number_within(masks: &[u64], within: u64) -> usize {
    let comp = complement_rows(masks);
    max_clique_in(&comp, within).len()
}

/// True iff the subgraph induced by `within` has a clique on `k` vertices.
pub fn has_clique_within(masks: &[u64], within: u64, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    max_clique_bounded(masks, within, k).len() >= k
}

/// True iff the subgraph induced by `within` has an independent set of size `k`.
pub fn has_independent_set_within(masks: &[u64], within: u64, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let comp = complement_rows(masks);
    max_clique_bounded(&comp, within, k).len() >= k
}

pub fn max_clique(g: &Graph) -> Vec<usize> {
    if g.n() <= 64 {
        max_clique_in(&g.masks(), u64::prefix(g.n()))
    } else {
        max_clique_in(&g.wide_rows(), Wide::prefix(g.n()))
    }
}

/// Exact clique number ω(G).
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// A maximum independent set, sorted ascending.
pub fn max_independent_set(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 64 {
        let comp = complement_rows(&g.masks());
        return max_clique_in(&comp, u64::prefix(n));
    }
    // Peel isolated and pendant vertices; both always belong to some
    // maximum independent set.
    let rows = g.wide_rows();
    let mut alive = Wide::prefix(n);
    let mut chosen = Vec::new();
    loop {
        let mut changed = false;
        for v in alive.iter() {
            if !alive.contains(v) {
                continue;
            }
            let nb = rows[v].and(alive);
            match nb.count() {
                0 => {
                    chosen.push(v);
                    alive = alive.without(v);
                    changed = true;
                }
                1 => {
                    chosen.push(v);
                    alive = alive.without(v).and_not(nb);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let alive_list: Vec<usize> = alive.iter().collect();
    let core = g.induced(&alive_list);
    for comp in core.components() {
        let sub = core.induced(&comp);
        let local = if sub.n() <= 64 {
            max_clique_in(&complement_rows(&sub.masks()), u64::prefix(sub.n()))
        } else {
            max_clique_in(&complement_rows(&sub.wide_rows()), Wide::prefix(sub.n()))
        };
        chosen.extend(local.into_iter().map(|i| alive_list[comp[i]]));
    }
    chosen.sort_unstable();
    chosen
}

/// Exact independence number α(G); 0 for the empty vertex set.
pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).len()
}

fn count_cliques_from<B: Bits>(adj: &[B], cand: B, remaining: usize) -> u64 {
    if remaining == 0 {
        return 1;
    }
    if (cand.count() as usize) < remaining {
        return 0;
    }
    if remaining == 1 {
        return cand.count() as u64;
    }
    let mut total = 0;
    let mut rest = cand;
    while let Some(v) = rest.first() {
        rest = rest.without(v);
        total += count_cliques_from(adj, rest.and(adj[v]), remaining - 1);
    }
    total
}

/// Number of copies of `K_i` in `g` (`t_i` in Turán-type counting).
pub fn clique_count(g: &Graph, i: usize) -> Result<u64> {
    if i == 0 {
        return Err(Error::InvalidParameter("clique size must be at least 1".into()));
    }
    if i > g.n() {
        return Ok(0);
    }
    Ok(if g.n() <= 64 {
        count_cliques_from(&g.masks(), u64::prefix(g.n()), i)
    } else {
        count_cliques_from(&g.wide_rows(), Wide::prefix(g.n()), i)
    })
}

/// Degeneracy via repeated removal of a minimum-degree vertex.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| deg[v])
            .expect("a vertex remains");
        best = best.max(deg[v]);
        removed[v] = true;
        for u in g.neighbours(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    best
}

/// Largest `n` for which the unthresholded local independence number
/// sweeps all m-subsets.
pub const LOCAL_ALPHA_FULL_LIMIT: usize = 20;

struct LocalSearch<'a> {
    comp: &'a [u64],
    order: Vec<usize>,
    m: usize,
    best: usize,
    witness: Option<u64>,
    stop_on_witness: bool,
}

impl LocalSearch<'_> {
    fn dfs(&mut self, idx: usize, chosen: u64, size: usize) {
        if self.stop_on_witness && self.witness.is_some() {
            return;
        }
        if size == self.m {
            let a = max_clique_bounded(self.comp, chosen, self.best).len();
            if a < self.best {
                self.best = a;
                self.witness = Some(chosen);
            }
            return;
        }
        if self.order.len() - idx < self.m - size {
            return;
        }
        // α never drops when vertices are added, so a partial set that
        // already reaches the incumbent cannot improve it.
        if size > 0 && max_clique_bounded(self.comp, chosen, self.best).len() >= self.best {
            return;
        }
        let v = self.order[idx];
        self.dfs(idx + 1, chosen.with(v), size + 1);
        if self.best == 1 {
            return;
        }
        self.dfs(idx + 1, chosen, size);
    }
}

fn local_search(
    g: &Graph,
    m: usize,
    initial_best: usize,
    stop_on_witness: bool,
) -> Result<(usize, Option<u64>)> {
    let n = g.n();
    if m < 1 || m > n {
        return Err(Error::InvalidParameter(format!(
            "local independence number needs 1 <= m <= n, got m={m}, n={n}"
        )));
    }
    if n > 64 {
        return Err(Error::Infeasible(format!(
            "local independence search supports n <= 64, got {n}"
        )));
    }
    let masks = g.masks();
    let comp = complement_rows(&masks);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut s = LocalSearch {
        comp: &comp,
        order,
        m,
        best: initial_best,
        witness: None,
        stop_on_witness,
    };
    s.dfs(0, 0, 0);
    Ok((s.best, s.witness))
}

/// α_m(G): minimum independence number over m-vertex induced subgraphs.
///
/// Full sweep is limited to `n <= 20`; beyond that use
/// [`local_independence_at_least`].
pub fn local_independence_number(g: &Graph, m: usize) -> Result<usize> {
    if g.n() > LOCAL_ALPHA_FULL_LIMIT && m >= 1 && m <= g.n() {
        return Err(Error::Infeasible(format!(
            "unthresholded local independence number supports n <= {LOCAL_ALPHA_FULL_LIMIT}; supply a threshold"
        )));
    }
    let (best, _) = local_search(g, m, m + 1, false)?;
    Ok(best)
}

/// Minimum α over m-subsets when it is below `cap`, with a witness;
/// otherwise `(cap, None)`.
pub fn local_independence_below(g: &Graph, m: usize, cap: usize) -> Result<(usize, Option<Vec<usize>>)> {
    let (best, witness) = local_search(g, m, cap, false)?;
    Ok((best, witness.map(|w| w.iter().collect())))
}

/// Decides α_m(G) ≥ r. When false, returns an m-subset with α < r.
pub fn local_independence_at_least(g: &Graph, m: usize, r: usize) -> Result<(bool, Option<Vec<usize>>)> {
    let (_, witness) = local_search(g, m, r, true)?;
    Ok(match witness {
        Some(w) => (false, Some(w.iter().collect())),
        None => (true, None),
    })
}

//! Non-induced subgraph containment by backtracking.

use crate::bits::{Bits, Wide};
use crate::graph::Graph;

struct Matcher<'a, B: Bits> {
    target: &'a [B],
    order: Vec<usize>,
    back_nbrs: Vec<Vec<usize>>,
    allowed: Vec<B>,
    map: Vec<usize>,
}

impl<B: Bits> Matcher<'_, B> {
    fn extend(&mut self, depth: usize, used: B) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        let mut cand = self.allowed[u].and_not(used);
        for &w in &self.back_nbrs[depth] {
            cand = cand.and(self.target[self.map[w]]);
            if cand.is_empty() {
                return false;
            }
        }
        for x in cand.iter() {
            self.map[u] = x;
            if self.extend(depth + 1, used.with(x)) {
                return true;
            }
        }
        false
    }
}

/// Pattern vertices ordered so each one has as many already-placed
/// neighbours as possible; ties go to higher degree.
fn matching_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let deg = h.degrees();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let u = (0..n)
            .filter(|&u| !placed[u])
            .max_by_key(|&u| (links[u], deg[u], std::cmp::Reverse(u)))
            .expect("unplaced vertex");
        placed[u] = true;
        order.push(u);
        for w in h.neighbours(u) {
            links[w] += 1;
        }
    }
    order
}

fn find<B: Bits>(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let target = g.rows_as::<B>();
    let gdeg = g.degrees();
    let hdeg = h.degrees();
    let order = matching_order(h);
    let pos: Vec<usize> = {
        let mut p = vec![0; h.n()];
        for (i, &u) in order.iter().enumerate() {
            p[u] = i;
        }
        p
    };
    let back_nbrs = order
        .iter()
        .enumerate()
        .map(|(i, &u)| h.neighbours(u).filter(|&w| pos[w] < i).collect())
        .collect();
    let allowed = (0..h.n())
        .map(|u| {
            (0..g.n())
                .filter(|&x| gdeg[x] >= hdeg[u])
                .fold(B::empty(), |m, x| m.with(x))
        })
        .collect();
    let mut m = Matcher {
        target: &target,
        order,
        back_nbrs,
        allowed,
        map: vec![usize::MAX; h.n()],
    };
    if m.extend(0, B::empty()) {
        Some(m.map)
    } else {
        None
    }
}

/// Finds an injective map `h -> g` sending edges to edges.
///
/// `result[u]` is the image of pattern vertex `u`.
pub fn find_subgraph(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return None;
    }
    if h.n() == 0 {
        return Some(Vec::new());
    }
    if g.n() <= 64 {
        find::<u64>(g, h)
    } else {
        find::<Wide>(g, h)
    }
}

pub fn contains_subgraph(g: &Graph, h: &Graph) -> bool {
    find_subgraph(g, h).is_some()
}

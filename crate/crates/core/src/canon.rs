//! Canonical labelling by partition refinement and individualisation.
//!
//! Nodes of the search tree are ordered partitions refined to equitable
//! form. Leaves are discrete partitions; each one induces a relabelled
//! adjacency matrix, and the lexicographically largest one is the
//! canonical graph. Leaves that reproduce an earlier certificate yield
//! automorphisms, which prune sibling branches (orbit pruning) and let
//! the search jump back to the common ancestor of the two leaves.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{Bits, Wide};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};

/// graph6 of the canonical representative of an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn to_graph(&self) -> Graph {
        parse_graph6(&self.0).expect("canonical keys are valid graph6")
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Canon {
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    pub graph: Graph,
    /// Automorphisms discovered during the search, as vertex maps.
    pub automorphisms: Vec<Vec<usize>>,
}

type Cells = Vec<Vec<usize>>;

fn cell_masks<B: Bits>(cells: &Cells) -> Vec<B> {
    cells
        .iter()
        .map(|c| c.iter().fold(B::empty(), |m, &v| m.with(v)))
        .collect()
}

/// Refines an ordered partition until every cell is equitable with respect
/// to every other. Sub-cells are ordered by their neighbour-count signature,
/// so the result depends only on the ordered partition, not on labels.
fn refine<B: Bits>(rows: &[B], mut cells: Cells) -> Cells {
    loop {
        let masks = cell_masks::<B>(&cells);
        let mut out: Cells = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                out.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|&m| rows[v].and(m).count()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    out.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            if !out.is_empty() && out.last().map(|c| c.len()) != Some(cell.len()) {
                split = true;
            }
        }
        if !split {
            return out;
        }
        cells = out;
    }
}

fn initial_cells(n: usize, colours: Option<&[u32]>) -> Cells {
    match colours {
        None => {
            if n == 0 {
                Vec::new()
            } else {
                vec![(0..n).collect()]
            }
        }
        Some(c) => {
            assert_eq!(c.len(), n);
            let mut values: Vec<u32> = c.to_vec();
            values.sort_unstable();
            values.dedup();
            values
                .iter()
                .map(|&val| (0..n).filter(|&v| c[v] == val).collect())
                .collect()
        }
    }
}

/// Equitable refinement of the unit (or colour) partition.
pub fn equitable_partition(g: &Graph, colours: Option<&[u32]>) -> Vec<Vec<usize>> {
    let cells = initial_cells(g.n(), colours);
    if g.n() <= 64 {
        refine(&g.masks(), cells)
    } else {
        refine(&g.wide_rows(), cells)
    }
}

struct Leaf {
    cert: Vec<u64>,
    labeling: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a, B: Bits> {
    rows: &'a [B],
    n: usize,
    words: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

enum Step {
    Continue,
    /// Unwind to the node at this depth and continue with its next child.
    JumpTo(usize),
}

impl<B: Bits> Search<'_, B> {
    fn certificate(&self, labeling: &[usize]) -> Vec<u64> {
        let mut inv = vec![0usize; self.n];
        for (v, &p) in labeling.iter().enumerate() {
            inv[p] = v;
        }
        let mut cert = vec![0u64; self.n * self.words];
        for p in 0..self.n {
            let v = inv[p];
            for u in self.rows[v].iter() {
                let q = labeling[u];
                // Most significant position first so lexicographic order on
                // words matches order on the row read left to right.
                cert[p * self.words + q / 64] |= 1u64 << (63 - q % 64);
            }
        }
        cert
    }

    fn orbit_reps(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for gamma in &self.autos {
            if prefix.iter().all(|&v| gamma[v] == v) {
                for (v, &gv) in gamma.iter().enumerate() {
                    let a = find(&mut parent, v);
                    let b = find(&mut parent, gv);
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    fn record_auto(&mut self, from: &[usize], to: &[usize]) {
        // from/to are labelings; vertex v maps to the vertex holding the
        // same canonical position in the other leaf.
        let mut inv_to = vec![0usize; self.n];
        for (v, &p) in to.iter().enumerate() {
            inv_to[p] = v;
        }
        let gamma: Vec<usize> = from.iter().map(|&p| inv_to[p]).collect();
        if gamma.iter().enumerate().any(|(v, &w)| v != w) {
            self.autos.push(gamma);
        }
    }

    fn common_prefix(a: &[usize], b: &[usize]) -> usize {
        a.iter().zip(b).take_while(|(x, y)| x == y).count()
    }

    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Step {
        let mut labeling = vec![0usize; self.n];
        for (i, c) in cells.iter().enumerate() {
            labeling[c[0]] = i;
        }
        let cert = self.certificate(&labeling);
        let leaf = Leaf {
            cert,
            labeling,
            path: path.to_vec(),
        };
        if self.first.is_none() {
            self.first = Some(Leaf {
                cert: leaf.cert.clone(),
                labeling: leaf.labeling.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return Step::Continue;
        }
        let first = self.first.as_ref().expect("set");
        if first.cert == leaf.cert {
            let (fl, depth) = (first.labeling.clone(), Self::common_prefix(&first.path, path));
            self.record_auto(&leaf.labeling, &fl);
            return Step::JumpTo(depth);
        }
        let best = self.best.as_ref().expect("set");
        match leaf.cert.cmp(&best.cert) {
            std::cmp::Ordering::Equal => {
                let (bl, depth) = (best.labeling.clone(), Self::common_prefix(&best.path, path));
                self.record_auto(&leaf.labeling, &bl);
                Step::JumpTo(depth)
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(leaf);
                Step::Continue
            }
            std::cmp::Ordering::Less => Step::Continue,
        }
    }

    fn visit(&mut self, cells: Cells, path: &mut Vec<usize>) -> Step {
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let min_size = cells.iter().map(|c| c.len()).filter(|&l| l > 1).min().expect("non-discrete");
        let ti = cells.iter().position(|c| c.len() == min_size).expect("exists");
        let target = cells[ti].clone();
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &target {
            if !explored.is_empty() {
                let reps = self.orbit_reps(path);
                if explored.iter().any(|&w| reps[w] == reps[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = target.iter().copied().filter(|&w| w != v).collect();
            child.splice(ti..=ti, [vec![v], rest]);
            let child = refine(self.rows, child);
            path.push(v);
            let step = self.visit(child, path);
            path.pop();
            if let Step::JumpTo(d) = step {
                if d < depth {
                    return step;
                }
            }
        }
        Step::Continue
    }
}

fn run_search<B: Bits>(g: &Graph, colours: Option<&[u32]>) -> Canon {
    let n = g.n();
    let rows = g.rows_as::<B>();
    let words = n.div_ceil(64).max(1);
    let mut s = Search {
        rows: &rows,
        n,
        words,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let cells = refine(&rows, initial_cells(n, colours));
    s.visit(cells, &mut Vec::new());
    let best = s.best.expect("at least one leaf");
    let graph = g.permuted(&best.labeling);
    Canon {
        labeling: best.labeling,
        graph,
        automorphisms: s.autos,
    }
}

/// Canonical labelling of `g`, optionally respecting a vertex colouring
/// (vertices may only map to vertices of equal colour).
pub fn canonicalize(g: &Graph, colours: Option<&[u32]>) -> Canon {
    if g.n() == 0 {
        return Canon {
            labeling: Vec::new(),
            graph: g.clone(),
            automorphisms: Vec::new(),
        };
    }
    if g.n() <= 64 {
        run_search::<u64>(g, colours)
    } else {
        run_search::<Wide>(g, colours)
    }
}

pub fn canonical_graph(g: &Graph) -> Graph {
    canonicalize(g, None).graph
}

/// Isomorphism-invariant key: equal iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> CanonicalKey {
    CanonicalKey(to_graph6(&canonical_graph(g)))
}

/// Canonical key of `g` with vertex `v` distinguished.
pub fn rooted_key(g: &Graph, v: usize) -> CanonicalKey {
    let colours: Vec<u32> = (0..g.n()).map(|u| (u == v) as u32).collect();
    let c = canonicalize(g, Some(&colours));
    CanonicalKey(format!("{}:{}", to_graph6(&c.graph), c.labeling[v]))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

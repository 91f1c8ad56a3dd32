//! Finite checks of graph-theoretic statements over exhaustive class lists
//! and seeded random samples.
//!
//! Every check has a mutated form that drops or weakens one hypothesis; the
//! mutated form is expected to fail, which shows the check is not vacuous.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bits::Bits;
use crate::constructions::h7;
use crate::density::{d2, for_each_subset, twin_classes};
use crate::enumerate::{generate, generate_levels, Constraints};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::invariants::{
    clique_count, clique_number, degeneracy, has_clique_within, independence_number,
    local_independence_at_least,
};
use crate::rational::Rational;
use crate::subgraph::contains_subgraph;

pub const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Equivalence73,
    TuranLb,
    TuranUb,
    TriangleNbhd,
    Switching,
    DisjointUnion,
    SparseTfBound,
    UpBip,
}

impl CheckId {
    pub const ALL: [CheckId; 8] = [
        CheckId::Equivalence73,
        CheckId::TuranLb,
        CheckId::TuranUb,
        CheckId::TriangleNbhd,
        CheckId::Switching,
        CheckId::DisjointUnion,
        CheckId::SparseTfBound,
        CheckId::UpBip,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckId::Equivalence73 => "equivalence-7-3",
            CheckId::TuranLb => "turan-lb",
            CheckId::TuranUb => "turan-ub",
            CheckId::TriangleNbhd => "triangle-nbhd",
            CheckId::Switching => "m2-switching",
            CheckId::DisjointUnion => "disjoint-union",
            CheckId::SparseTfBound => "sparse-tf-bound",
            CheckId::UpBip => "up-bip",
        }
    }

    /// The statement under test.
    pub fn citation(&self) -> &'static str {
        match self {
            CheckId::Equivalence73 => {
                "every K_4-free graph with no H_7 subgraph has alpha_7 >= 3, where H_7 is the clique blow-up of C_5 with parts 1,2,1,1,2"
            }
            CheckId::TuranLb => "t_k(G) / t_(k-1)(G) >= |G| / (k alpha(G)^(k-1)) - 1 whenever t_(k-1)(G) > 0",
            CheckId::TuranUb => {
                "a K_k-free graph with independence number below alpha has t_i(G) <= alpha^(C(k,2) - C(k-i,2)) / i! for all i <= k"
            }
            CheckId::TriangleNbhd => {
                "in a K_4-free, H_7-free graph the v-extending vertices avoid N(v), apexes of vertex-disjoint v-triangles are non-adjacent, and the v-extending vertices span no triangle"
            }
            CheckId::Switching => {
                "a d_2-maximising subgraph with as many vertices as possible contains both or neither of any two vertices swapped by an automorphism"
            }
            CheckId::DisjointUnion => "if 2e(G) > |G| and 2e(H) > |H| then d_2(G + H) < max(d_2(G), d_2(H)) for the disjoint union",
            CheckId::SparseTfBound => {
                "a 3-degenerate triangle-free graph on m vertices with no independent set of size r has at least 6m - 13r - 1 edges"
            }
            CheckId::UpBip => {
                "a triangle-free graph on 2k-1 vertices in which any k vertices span at least t+1 edges, with t < sqrt((k-1)/2), has at most (k-1)^2 - t^2 + 1 edges"
            }
        }
    }

    /// What the mutated form changes.
    pub fn mutation(&self) -> &'static str {
        match self {
            CheckId::Equivalence73 => "H_7-freeness dropped",
            CheckId::TuranLb => "the -1 term dropped",
            CheckId::TuranUb => "alpha(G) < alpha relaxed to alpha(G) <= alpha",
            CheckId::TriangleNbhd => "H_7-freeness dropped",
            CheckId::Switching => "every d_2 maximiser tested, not only the largest ones",
            CheckId::DisjointUnion => "the hypothesis 2e > |V| dropped",
            CheckId::SparseTfBound => "the coefficient of r lowered from 13 to 6",
            CheckId::UpBip => "the k-subset edge hypothesis dropped",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check id {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub context: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub citation: String,
    pub mutated: bool,
    pub passed: bool,
    pub instances_checked: u64,
    /// Sorted, at most [`MAX_COUNTEREXAMPLES`].
    pub counterexamples: Vec<Counterexample>,
    pub total_counterexamples: u64,
    pub parameters: BTreeMap<String, Value>,
    #[serde(skip)]
    pub wall_time: f64,
}

/// Parameters shared by all checks; each check reads the fields it needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckParams {
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
    pub alpha_grid: Vec<usize>,
    pub k_grid: Vec<usize>,
    pub mutated: bool,
}

impl CheckParams {
    /// The full-size parameter set for each check.
    pub fn defaults(id: CheckId) -> Self {
        let mut p = CheckParams {
            n_max: 8,
            samples: 0,
            seed: 42,
            alpha_grid: (1..=6).collect(),
            k_grid: (3..=6).collect(),
            mutated: false,
        };
        match id {
            CheckId::Equivalence73 => p.n_max = 7,
            CheckId::TriangleNbhd => {
                p.n_max = 9;
                p.samples = 1000;
            }
            CheckId::DisjointUnion => p.n_max = 6,
            CheckId::SparseTfBound => p.n_max = 10,
            CheckId::UpBip => p.k_grid = vec![5],
            _ => {}
        }
        p
    }

    fn echo(&self, id: CheckId) -> BTreeMap<String, Value> {
        let mut m = BTreeMap::new();
        match id {
            CheckId::Equivalence73 => {
                m.insert("n".into(), json!(self.n_max));
            }
            CheckId::TuranUb => {
                m.insert("n_max".into(), json!(self.n_max));
                m.insert("alpha_grid".into(), json!(self.alpha_grid));
                m.insert("k_grid".into(), json!(self.k_grid));
            }
            CheckId::TriangleNbhd => {
                m.insert("n_max".into(), json!(self.n_max));
                m.insert("samples".into(), json!(self.samples));
                m.insert("seed".into(), json!(self.seed));
                m.insert("sample_orders".into(), json!(sample_orders(self.n_max)));
            }
            CheckId::UpBip => {
                m.insert("k_grid".into(), json!(self.k_grid));
            }
            _ => {
                m.insert("n_max".into(), json!(self.n_max));
            }
        }
        if self.mutated {
            m.insert("mutation".into(), json!(id.mutation()));
        }
        m
    }
}

fn limit(id: CheckId, what: &str, value: usize, max: usize) -> Result<()> {
    if value > max {
        return Err(Error::InvalidParameter(format!("{id} supports {what} <= {max}, got {value}")));
    }
    Ok(())
}

fn validate(id: CheckId, p: &CheckParams) -> Result<()> {
    match id {
        CheckId::Equivalence73 => limit(id, "n", p.n_max, 8),
        CheckId::TuranLb | CheckId::TuranUb | CheckId::Switching => limit(id, "n_max", p.n_max, 8),
        CheckId::TriangleNbhd => limit(id, "n_max", p.n_max, 9),
        CheckId::DisjointUnion => limit(id, "n_max", p.n_max, 6),
        CheckId::SparseTfBound => limit(id, "n_max", p.n_max, 10),
        CheckId::UpBip => match p.k_grid.iter().find(|k| !(5..=6).contains(*k)) {
            Some(k) => Err(Error::InvalidParameter(format!("up-bip supports k in {{5, 6}}, got {k}"))),
            None => Ok(()),
        },
    }
}

/// Graphs and their per-graph violation lists, folded into a report.
fn fold(id: CheckId, p: &CheckParams, instances: u64, found: Vec<Counterexample>, start: Instant) -> CheckReport {
    let mut found = found;
    found.sort();
    let total = found.len() as u64;
    found.truncate(MAX_COUNTEREXAMPLES);
    CheckReport {
        check_id: id.as_str().into(),
        citation: id.citation().into(),
        mutated: p.mutated,
        passed: total == 0,
        instances_checked: instances,
        counterexamples: found,
        total_counterexamples: total,
        parameters: p.echo(id),
        wall_time: start.elapsed().as_secs_f64(),
    }
}

fn over_graphs<F>(graphs: &[Graph], f: F) -> Vec<Counterexample>
where
    F: Fn(&Graph) -> Vec<String> + Sync,
{
    graphs
        .par_iter()
        .flat_map_iter(|g| {
            let key = to_graph6(g);
            f(g).into_iter().map(move |context| Counterexample {
                graph6: key.clone(),
                context,
            })
        })
        .collect()
}

fn all_classes(n_max: usize) -> Result<Vec<Graph>> {
    Ok(generate_levels(n_max, &Constraints::default())?.into_iter().flatten().collect())
}

// ---------------------------------------------------------------------------
// per-graph predicates

/// Violations of the 7-vertex equivalence statement for one graph.
pub fn equivalence_violations(g: &Graph, mutated: bool) -> Vec<String> {
    if g.n() < 7 || clique_number(g) >= 4 {
        return Vec::new();
    }
    if !mutated && contains_subgraph(g, &h7()) {
        return Vec::new();
    }
    match local_independence_at_least(g, 7, 3).expect("n >= 7") {
        (true, _) => Vec::new(),
        (false, w) => vec![format!("K_4-free with alpha_7 < 3 on vertices {:?}", w.unwrap_or_default())],
    }
}

fn pow(base: i128, exp: usize) -> i128 {
    (0..exp).fold(1i128, |acc, _| acc * base)
}

pub fn turan_lb_violations(g: &Graph, mutated: bool) -> Vec<String> {
    let n = g.n() as i128;
    if n == 0 {
        return Vec::new();
    }
    let alpha = independence_number(g) as i128;
    let mut out = Vec::new();
    for k in 2..=g.n() + 1 {
        let prev = clique_count(g, k - 1).expect("k >= 2") as i128;
        if prev == 0 {
            break;
        }
        let cur = clique_count(g, k).expect("k >= 2") as i128;
        let scale = k as i128 * pow(alpha, k - 1);
        // t_k / t_{k-1} >= n / scale - shift
        let shift = if mutated { 0 } else { 1 };
        if cur * scale < prev * (n - shift * scale) {
            out.push(format!(
                "k={k}: t_k={cur}, t_(k-1)={prev}, alpha={alpha}, bound {} - {shift}",
                Rational::new(n as i64, scale as i64)
            ));
        }
    }
    out
}

fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

pub fn turan_ub_violations(g: &Graph, alpha_grid: &[usize], k_grid: &[usize], mutated: bool) -> Vec<String> {
    let a_g = independence_number(g);
    let omega = clique_number(g);
    let counts: Vec<u64> = (0..=g.n().max(1) + 6)
        .map(|i| if i == 0 { 1 } else { clique_count(g, i).expect("i >= 1") })
        .collect();
    let mut out = Vec::new();
    for &k in k_grid {
        if omega >= k {
            continue;
        }
        for &alpha in alpha_grid {
            let admitted = if mutated { a_g <= alpha } else { a_g < alpha };
            if !admitted {
                continue;
            }
            let mut fact: i128 = 1;
            for i in 1..=k {
                fact *= i as i128;
                let exp = choose2(k) - choose2(k - i);
                let t = *counts.get(i).unwrap_or(&0) as i128;
                if t * fact > pow(alpha as i128, exp) {
                    out.push(format!(
                        "k={k}, alpha={alpha}, i={i}: t_i={t} > {alpha}^{exp}/{i}!"
                    ));
                }
            }
        }
    }
    out
}

/// Triangles `xyz` with the edge `xy` inside `N(v)`, grouped by apex `z`.
fn v_triangles(masks: &[u64], v: usize) -> Vec<Vec<(usize, usize)>> {
    let n = masks.len();
    let nv = masks[v];
    let mut by_apex = vec![Vec::new(); n];
    for x in nv.iter() {
        for y in (masks[x] & nv).iter().filter(|&y| y > x) {
            for z in (masks[x] & masks[y]).without(v).iter() {
                by_apex[z].push((x, y));
            }
        }
    }
    by_apex
}

pub fn triangle_nbhd_violations(g: &Graph, mutated: bool) -> Vec<String> {
    if clique_number(g) >= 4 || (!mutated && contains_subgraph(g, &h7())) {
        return Vec::new();
    }
    let masks = g.masks();
    let mut out = Vec::new();
    for v in 0..g.n() {
        let nv = masks[v];
        let tri = v_triangles(&masks, v);
        let inside: Vec<usize> = nv.iter().filter(|&z| !tri[z].is_empty()).collect();
        if !inside.is_empty() {
            out.push(format!("v={v}: triangle apexes {inside:?} inside N(v)"));
        }
        let ext = (0..g.n())
            .filter(|&z| z != v && !nv.contains(z) && !tri[z].is_empty())
            .fold(0u64, |m, z| m.with(z));
        for u in ext.iter() {
            for w in (masks[u] & ext).iter().filter(|&w| w > u) {
                let disjoint = tri[u].iter().any(|&(a, b)| {
                    tri[w]
                        .iter()
                        .any(|&(c, d)| a != c && a != d && b != c && b != d)
                });
                if disjoint {
                    out.push(format!("v={v}: adjacent apexes {u},{w} of vertex-disjoint v-triangles"));
                }
            }
        }
        if has_clique_within(&masks, ext, 3) {
            out.push(format!("v={v}: v-extending vertices {:?} span a triangle", ext.iter().collect::<Vec<_>>()));
        }
    }
    out
}

fn induced_edges(masks: &[u64], set: u64) -> usize {
    set.iter().map(|v| (masks[v] & set).count_ones() as usize).sum::<usize>() / 2
}

pub fn switching_violations(g: &Graph, mutated: bool) -> Vec<String> {
    let n = g.n();
    if n < 3 {
        return Vec::new();
    }
    let pairs: Vec<(usize, usize)> = twin_classes(g)
        .into_iter()
        .flat_map(|(c, _)| {
            let mut ps = Vec::new();
            for (i, &u) in c.iter().enumerate() {
                for &w in &c[i + 1..] {
                    ps.push((u, w));
                }
            }
            ps
        })
        .collect();
    if pairs.is_empty() {
        return Vec::new();
    }
    let masks = g.masks();
    let mut best: Option<Rational> = None;
    let mut maximisers: Vec<u64> = Vec::new();
    for s in 3..=n {
        for_each_subset(n, s, |set| {
            let d = Rational::new(induced_edges(&masks, set) as i64 - 1, s as i64 - 2);
            if best.is_none_or(|b| d > b) {
                best = Some(d);
                maximisers.clear();
            }
            if best == Some(d) {
                maximisers.push(set);
            }
        });
    }
    let top = maximisers.iter().map(|s| s.count_ones()).max().expect("a maximiser");
    let mut out = Vec::new();
    for set in maximisers.into_iter().filter(|s| mutated || s.count_ones() == top) {
        for &(u, w) in &pairs {
            if set.contains(u) != set.contains(w) {
                out.push(format!(
                    "maximiser {:?} splits the equivalent pair {u},{w}",
                    set.iter().collect::<Vec<_>>()
                ));
            }
        }
    }
    out
}

pub fn disjoint_union_violation(g: &Graph, h: &Graph, mutated: bool) -> Option<String> {
    if g.n() < 3 || h.n() < 3 {
        return None;
    }
    let dense = |x: &Graph| 2 * x.edge_count() > x.n();
    if !mutated && !(dense(g) && dense(h)) {
        return None;
    }
    let u = g.disjoint_union(h).expect("small");
    let (a, b, c) = (d2(g).ok()?, d2(h).ok()?, d2(&u).ok()?);
    (c >= a.max(b)).then(|| format!("d2(union)={c} >= max({a}, {b}) with {}", to_graph6(h)))
}

/// Coefficient of `r` in the sparse bound.
fn sparse_coefficient(mutated: bool) -> i64 {
    if mutated {
        6
    } else {
        13
    }
}

pub fn sparse_tf_violations(g: &Graph, mutated: bool) -> Vec<String> {
    if g.n() == 0 || clique_number(g) >= 3 || degeneracy(g) > 3 {
        return Vec::new();
    }
    let m = g.n() as i64;
    let r = independence_number(g) as i64 + 1;
    let bound = 6 * m - sparse_coefficient(mutated) * r - 1;
    let e = g.edge_count() as i64;
    if e < bound {
        vec![format!("m={m}, r={r}: e={e} < {bound}")]
    } else {
        Vec::new()
    }
}

pub fn up_bip_violations(g: &Graph, k: usize, mutated: bool) -> Vec<String> {
    if g.n() != 2 * k - 1 || clique_number(g) >= 3 {
        return Vec::new();
    }
    let masks = g.masks();
    let mut sparsest = usize::MAX;
    for_each_subset(g.n(), k, |set| sparsest = sparsest.min(induced_edges(&masks, set)));
    let e = g.edge_count();
    let mut out = Vec::new();
    let mut t = 1;
    // t < sqrt((k-1)/2)
    while 2 * t * t < k - 1 {
        if (mutated || sparsest > t) && e + t * t > (k - 1) * (k - 1) + 1 {
            out.push(format!(
                "k={k}, t={t}: e={e} > {}, sparsest k-set has {sparsest} edges",
                (k - 1) * (k - 1) + 1 - t * t
            ));
        }
        t += 1;
    }
    out
}

// ---------------------------------------------------------------------------
// random K_4-free, H_7-free graphs

fn sample_orders(n_max: usize) -> (usize, usize) {
    (n_max + 1, n_max + 7)
}

/// A random K_4-free, H_7-free graph (H_7 allowed when `mutated`) built by
/// adding edges in random order while the constraints hold, stopping at a
/// random edge target.
pub fn random_k4_h7_free(n: usize, seed: u64, stream: u64, allow_h7: bool) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let target = rng.random_range(n..=pairs.len());
    let mut masks = vec![0u64; n];
    let pattern = h7();
    let mut added = 0;
    for (u, v) in pairs {
        if added == target {
            break;
        }
        let common = masks[u] & masks[v];
        if common.iter().any(|w| masks[w] & common != 0) {
            continue;
        }
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
        if !allow_h7 && contains_subgraph(&Graph::from_masks(&masks), &pattern) {
            masks[u] &= !(1 << v);
            masks[v] &= !(1 << u);
            continue;
        }
        added += 1;
    }
    Graph::from_masks(&masks)
}

// ---------------------------------------------------------------------------
// checks

pub fn check_equivalence_7_3(n: usize, mutated: bool) -> Result<CheckReport> {
    let p = CheckParams {
        n_max: n,
        mutated,
        ..CheckParams::defaults(CheckId::Equivalence73)
    };
    run_check(CheckId::Equivalence73, &p)
}

pub fn check_clique_count_lower(n_max: usize, mutated: bool) -> Result<CheckReport> {
    let p = CheckParams {
        n_max,
        mutated,
        ..CheckParams::defaults(CheckId::TuranLb)
    };
    run_check(CheckId::TuranLb, &p)
}

pub fn check_clique_count_upper(n_max: usize, alpha_grid: &[usize], k_grid: &[usize], mutated: bool) -> Result<CheckReport> {
    let p = CheckParams {
        n_max,
        alpha_grid: alpha_grid.to_vec(),
        k_grid: k_grid.to_vec(),
        mutated,
        ..CheckParams::defaults(CheckId::TuranUb)
    };
    run_check(CheckId::TuranUb, &p)
}

pub fn check_triangle_nbhd(n_max: usize, samples: usize, seed: u64, mutated: bool) -> Result<CheckReport> {
    let p = CheckParams {
        n_max,
        samples,
        seed,
        mutated,
        ..CheckParams::defaults(CheckId::TriangleNbhd)
    };
    run_check(CheckId::TriangleNbhd, &p)
}

pub fn check_switching(n_max: usize, mutated: bool) -> Result<CheckReport> {
    let p = CheckParams {
        n_max,
        mutated,
        ..CheckParams::defaults(CheckId::Switching)
    };
    run_check(CheckId::Switching, &p)
}

pub fn check_disjoint_union(n_max: usize, mutated: bool) -> Result<CheckReport> {
    let p = CheckParams {
        n_max,
        mutated,
        ..CheckParams::defaults(CheckId::DisjointUnion)
    };
    run_check(CheckId::DisjointUnion, &p)
}

pub fn check_sparse_tf_bound(n_max: usize, mutated: bool) -> Result<CheckReport> {
    let p = CheckParams {
        n_max,
        mutated,
        ..CheckParams::defaults(CheckId::SparseTfBound)
    };
    run_check(CheckId::SparseTfBound, &p)
}

pub fn check_up_bip(k_grid: &[usize], mutated: bool) -> Result<CheckReport> {
    let p = CheckParams {
        k_grid: k_grid.to_vec(),
        mutated,
        ..CheckParams::defaults(CheckId::UpBip)
    };
    run_check(CheckId::UpBip, &p)
}

pub fn run_check(id: CheckId, p: &CheckParams) -> Result<CheckReport> {
    validate(id, p)?;
    let start = Instant::now();
    let mutated = p.mutated;
    let (instances, found) = match id {
        CheckId::Equivalence73 => {
            if p.n_max < 7 {
                (0, Vec::new())
            } else {
                let graphs = generate(p.n_max, &Constraints::default())?.graphs;
                (graphs.len(), over_graphs(&graphs, |g| equivalence_violations(g, mutated)))
            }
        }
        CheckId::TuranLb => {
            let graphs = all_classes(p.n_max)?;
            (graphs.len(), over_graphs(&graphs, |g| turan_lb_violations(g, mutated)))
        }
        CheckId::TuranUb => {
            let graphs = all_classes(p.n_max)?;
            let f = |g: &Graph| turan_ub_violations(g, &p.alpha_grid, &p.k_grid, mutated);
            (graphs.len(), over_graphs(&graphs, f))
        }
        CheckId::TriangleNbhd => {
            let c = Constraints {
                clique_max: Some(3),
                forbidden: if mutated { Vec::new() } else { vec![h7()] },
                ..Default::default()
            };
            let mut graphs: Vec<Graph> = generate_levels(p.n_max, &c)?.into_iter().flatten().collect();
            let (lo, hi) = sample_orders(p.n_max);
            let sampled: Vec<Graph> = (0..p.samples as u64)
                .into_par_iter()
                .map(|i| {
                    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
                    rng.set_stream(i);
                    let n = rng.random_range(lo..=hi);
                    random_k4_h7_free(n, p.seed ^ 0x5eed, i, mutated)
                })
                .collect();
            graphs.extend(sampled);
            (graphs.len(), over_graphs(&graphs, |g| triangle_nbhd_violations(g, mutated)))
        }
        CheckId::Switching => {
            let graphs = all_classes(p.n_max)?;
            (graphs.len(), over_graphs(&graphs, |g| switching_violations(g, mutated)))
        }
        CheckId::DisjointUnion => {
            let graphs: Vec<Graph> = all_classes(p.n_max)?.into_iter().filter(|g| g.n() >= 3).collect();
            let pairs: Vec<(usize, usize)> = (0..graphs.len())
                .flat_map(|i| (i..graphs.len()).map(move |j| (i, j)))
                .collect();
            let found = pairs
                .par_iter()
                .filter_map(|&(i, j)| {
                    disjoint_union_violation(&graphs[i], &graphs[j], mutated).map(|context| Counterexample {
                        graph6: to_graph6(&graphs[i]),
                        context,
                    })
                })
                .collect();
            (pairs.len(), found)
        }
        CheckId::SparseTfBound => {
            let c = Constraints {
                clique_max: Some(2),
                ..Default::default()
            };
            let graphs: Vec<Graph> = generate_levels(p.n_max, &c)?.into_iter().flatten().collect();
            (graphs.len(), over_graphs(&graphs, |g| sparse_tf_violations(g, mutated)))
        }
        CheckId::UpBip => {
            let c = Constraints {
                clique_max: Some(2),
                ..Default::default()
            };
            let mut total = 0;
            let mut found = Vec::new();
            for &k in &p.k_grid {
                let graphs = generate(2 * k - 1, &c)?.graphs;
                total += graphs.len();
                found.extend(over_graphs(&graphs, |g| up_bip_violations(g, k, mutated)));
            }
            (total, found)
        }
    };
    Ok(fold(id, p, instances as u64, found, start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, ConstructionSpec};

    fn cycle(n: usize) -> Graph {
        build(&ConstructionSpec::Cycle { n }).unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for id in CheckId::ALL {
            assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
        }
        assert!("nope".parse::<CheckId>().is_err());
    }

    #[test]
    fn single_graph_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert!(turan_lb_violations(&k5, false).is_empty());
        assert!(turan_lb_violations(&cycle(5), false).is_empty());
        assert!(turan_ub_violations(&cycle(5), &[3], &[3], false).is_empty());
        assert!(!turan_ub_violations(&cycle(5), &[2], &[3], true).is_empty());
        assert!(triangle_nbhd_violations(&cycle(5), false).is_empty());
        assert!(sparse_tf_violations(&cycle(5), false).is_empty());
        let petersen = crate::constructions::petersen();
        assert!(sparse_tf_violations(&petersen, false).is_empty());
        let k4 = Graph::complete(4).unwrap();
        assert!(disjoint_union_violation(&k4, &k4, false).is_none());
        let k2 = Graph::complete(2).unwrap();
        assert!(disjoint_union_violation(&k2, &k2, true).is_none());
    }

    #[test]
    fn equivalence_examples() {
        let r = check_equivalence_7_3(7, false).unwrap();
        assert!(r.passed);
        assert_eq!(r.instances_checked, 1044);
        let small = check_equivalence_7_3(6, false).unwrap();
        assert!(small.passed);
        assert_eq!(small.instances_checked, 0);
    }

    #[test]
    fn switching_on_two_cliques() {
        let g = build(&ConstructionSpec::DisjointCliques(vec![4, 4])).unwrap();
        assert!(switching_violations(&g, false).is_empty());
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(switching_violations(&diamond, false).is_empty());
        assert!(!switching_violations(&diamond, true).is_empty());
    }

    #[test]
    fn random_graphs_are_deterministic_and_constrained() {
        let a = random_k4_h7_free(14, 9, 3, false);
        let b = random_k4_h7_free(14, 9, 3, false);
        assert_eq!(a, b);
        assert!(clique_number(&a) <= 3);
        assert!(!contains_subgraph(&a, &h7()));
    }
}

//! Isomorph-free generation by canonical vertex augmentation, and the
//! extremal searches built on it.
//!
//! Every graph on `n + 1` vertices is reached from exactly one class on `n`
//! vertices: the child is kept only when the added vertex lies in the orbit
//! of the child's canonical deletion vertex. All constraints used here are
//! closed under taking induced subgraphs, so pruning a parent prunes every
//! descendant it would have had.

use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bits::Bits;
use crate::canon::{canonicalize, rooted_key};
use crate::constructions::{build, ConstructionSpec};
use crate::density::{check_local_params, m2_value};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::invariants::{has_clique_within, has_independent_set_within};
use crate::rational::Rational;
use crate::subgraph::contains_subgraph;

/// Bumped whenever the generator's output order or content changes.
pub const GENERATOR_VERSION: u32 = 1;

pub const MAX_WITNESSES: usize = 100;

/// Largest order enumerated with nothing but an independence bound.
pub const UNCONSTRAINED_MAX_M: usize = 11;

/// Largest order enumerated under any constraint set.
pub const CONSTRAINED_MAX_M: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DensityBound {
    pub value: Rational,
    /// `m2 < value` when set, `m2 <= value` otherwise.
    pub strict: bool,
}

impl DensityBound {
    fn admits(&self, d: Rational) -> bool {
        if self.strict {
            d < self.value
        } else {
            d <= self.value
        }
    }
}

/// Restrictions on the generated classes. All but `min_degree` are
/// hereditary and prune during generation; `min_degree` filters the last
/// level only.
#[derive(Clone, Debug, Default)]
pub struct Constraints {
    pub alpha_max: Option<usize>,
    pub clique_max: Option<usize>,
    pub m2: Option<DensityBound>,
    /// Graphs that may not occur as (not necessarily induced) subgraphs.
    pub forbidden: Vec<Graph>,
    pub min_degree: Option<usize>,
}

impl Constraints {
    pub fn alpha(a: usize) -> Self {
        Constraints {
            alpha_max: Some(a),
            ..Default::default()
        }
    }

    fn is_restrictive(&self) -> bool {
        self.clique_max.is_some() || self.m2.is_some() || !self.forbidden.is_empty()
    }
}

/// One generation run.
#[derive(Clone, Debug)]
pub struct Generated {
    /// Canonically labelled, sorted by graph6 key.
    pub graphs: Vec<Graph>,
    /// Classes accepted over all levels.
    pub nodes: u64,
    /// Augmentations cut by clique, density, forbidden-subgraph or degree
    /// constraints.
    pub pruned: u64,
}

struct Children {
    graphs: Vec<(String, Graph)>,
    pruned: u64,
}

/// Isomorphism-invariant vertex score used to preselect deletion candidates.
fn vertex_score(masks: &[u64], v: usize) -> (u32, u32) {
    let deg = masks[v].count_ones();
    let around: u32 = masks[v].iter().map(|u| masks[u].count_ones()).sum();
    (deg, around)
}

fn augment(parent: &Graph, c: &Constraints, last: bool) -> Children {
    let n = parent.n();
    let masks = parent.masks();
    let all = u64::prefix(n);
    let mut seen = HashSet::new();
    let mut out = Children {
        graphs: Vec::new(),
        pruned: 0,
    };
    for s in 0..=all {
        if let Some(a) = c.alpha_max {
            if has_independent_set_within(&masks, all & !s, a) {
                continue;
            }
        }
        if let Some(k) = c.clique_max {
            if has_clique_within(&masks, s, k) {
                out.pruned += 1;
                continue;
            }
        }
        let mut cm = masks.clone();
        cm.push(s);
        for v in s.iter() {
            cm[v] |= 1 << n;
        }
        if last {
            if let Some(d) = c.min_degree {
                if cm.iter().any(|m| (m.count_ones() as usize) < d) {
                    out.pruned += 1;
                    continue;
                }
            }
        }
        let best = (0..=n).map(|v| vertex_score(&cm, v)).max().expect("nonempty");
        if vertex_score(&cm, n) != best {
            continue;
        }
        let child = Graph::from_masks(&cm);
        if let Some(b) = c.m2 {
            if child.n() >= 3 && !b.admits(m2_value(&child).expect("n >= 3")) {
                out.pruned += 1;
                continue;
            }
        }
        if c.forbidden.iter().any(|h| contains_subgraph(&child, h)) {
            out.pruned += 1;
            continue;
        }
        let canon = canonicalize(&child, None);
        let cands: Vec<usize> = (0..=n).filter(|&v| vertex_score(&cm, v) == best).collect();
        if cands.len() > 1 {
            let w = *cands
                .iter()
                .max_by_key(|&&v| canon.labeling[v])
                .expect("nonempty");
            if w != n && rooted_key(&child, w) != rooted_key(&child, n) {
                continue;
            }
        }
        let key = to_graph6(&canon.graph);
        if seen.insert(key.clone()) {
            out.graphs.push((key, canon.graph));
        }
    }
    out
}

fn check_size(m: usize, c: &Constraints) -> Result<()> {
    let limit = if c.is_restrictive() {
        CONSTRAINED_MAX_M
    } else {
        UNCONSTRAINED_MAX_M
    };
    if m > limit {
        return Err(Error::Infeasible(format!(
            "exhaustive generation on {m} vertices exceeds the limit of {limit} for these constraints"
        )));
    }
    Ok(())
}

fn run_levels(m: usize, c: &Constraints, keep: bool) -> Result<(Vec<Vec<Graph>>, u64, u64)> {
    check_size(m, c)?;
    let mut level = vec![Graph::empty(0)?];
    let mut kept = Vec::new();
    let mut nodes = 0u64;
    let mut pruned = 0u64;
    for n in 0..m {
        if keep {
            kept.push(level.clone());
        }
        if c.alpha_max == Some(0) {
            level.clear();
        }
        let last = n + 1 == m;
        let parts: Vec<Children> = level.par_iter().map(|p| augment(p, c, last)).collect();
        let mut next: Vec<(String, Graph)> = Vec::new();
        for part in parts {
            pruned += part.pruned;
            next.extend(part.graphs);
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        nodes += next.len() as u64;
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    kept.push(level);
    Ok((kept, nodes, pruned))
}

/// All classes on `m` vertices satisfying `c`.
pub fn generate(m: usize, c: &Constraints) -> Result<Generated> {
    let (mut levels, nodes, pruned) = run_levels(m, c, false)?;
    Ok(Generated {
        graphs: levels.pop().expect("last level"),
        nodes,
        pruned,
    })
}

/// Classes on `0..=m` vertices satisfying `c`, indexed by order. A
/// `min_degree` constraint only applies to the last level.
pub fn generate_levels(m: usize, c: &Constraints) -> Result<Vec<Vec<Graph>>> {
    Ok(run_levels(m, c, true)?.0)
}

/// Every class on `m` vertices with independence number at most `alpha_max`.
pub fn enumerate_alpha_bounded(m: usize, alpha_max: usize) -> Result<Vec<Graph>> {
    if m == 0 {
        return Err(Error::InvalidParameter("need at least one vertex".into()));
    }
    Ok(generate(m, &Constraints::alpha(alpha_max))?.graphs)
}

/// Number of isomorphism classes of graphs on `m` vertices.
pub fn count_classes(m: usize) -> Result<u64> {
    if m > 8 {
        return Err(Error::InvalidParameter(format!("class counting supports m <= 8, got {m}")));
    }
    Ok(generate(m, &Constraints::default())?.graphs.len() as u64)
}

fn cache_file(dir: &Path, m: usize, alpha_max: usize) -> std::path::PathBuf {
    dir.join(format!("alpha{alpha_max}_n{m}.g6"))
}

fn manifest_line() -> String {
    format!("turan2d-generator {GENERATOR_VERSION}")
}

fn cache_is_current(dir: &Path) -> bool {
    fs::read_to_string(dir.join("VERSION")).is_ok_and(|s| s.trim() == manifest_line())
}

/// Like [`enumerate_alpha_bounded`], reusing `{dir}/alpha{a}_n{m}.g6` when
/// the cache was written by the same generator version.
pub fn enumerate_alpha_bounded_cached(m: usize, alpha_max: usize, dir: &Path) -> Result<Vec<Graph>> {
    let file = cache_file(dir, m, alpha_max);
    if cache_is_current(dir) {
        if let Ok(text) = fs::read_to_string(&file) {
            if let Ok(graphs) = text.lines().map(parse_graph6).collect::<Result<Vec<_>>>() {
                return Ok(graphs);
            }
        }
    }
    let graphs = enumerate_alpha_bounded(m, alpha_max)?;
    fs::create_dir_all(dir)?;
    if !cache_is_current(dir) {
        for entry in fs::read_dir(dir)? {
            let path = entry?.path();
            if path.extension().is_some_and(|e| e == "g6") {
                fs::remove_file(path)?;
            }
        }
        fs::write(dir.join("VERSION"), manifest_line() + "\n")?;
    }
    let mut body = String::new();
    for g in &graphs {
        body.push_str(&to_graph6(g));
        body.push('\n');
    }
    fs::write(file, body)?;
    Ok(graphs)
}

/// Extremal value of a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Extremum {
    Density(Rational),
    Edges(usize),
}

impl Serialize for Extremum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extremum::Density(r) => r.serialize(s),
            Extremum::Edges(e) => s.serialize_u64(*e as u64),
        }
    }
}

impl fmt::Display for Extremum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extremum::Density(r) => write!(f, "{r}"),
            Extremum::Edges(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    pub m: usize,
    pub r: usize,
    pub profile: String,
    pub citations: Vec<String>,
    /// Whether `value` is the extremum over all graphs rather than over the
    /// profile's restricted class.
    pub exact: bool,
    /// `None` when no graph qualifies.
    pub value: Option<Extremum>,
    /// Canonical graph6 strings, sorted, at most [`MAX_WITNESSES`].
    pub witnesses: Vec<String>,
    pub total_witnesses: usize,
    pub enumerated: u64,
    pub pruned: u64,
    #[serde(skip)]
    pub wall_time: f64,
}

/// Pruning profile for [`min_m2`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Profile {
    /// Prune on the incumbent from known constructions only.
    Default,
    /// Additionally forbid `K_{c+1}`.
    CliqueCap(usize),
    /// Only triangle-free graphs.
    TriangleFree,
    /// Only graphs of minimum degree at least `d`.
    MinDegree(usize),
}

impl Profile {
    pub fn parse(s: &str, m: usize, r: usize) -> Result<Profile> {
        let k = m.div_ceil(r.saturating_sub(1).max(1));
        match s {
            "default" => Ok(Profile::Default),
            "clique-cap" => Ok(Profile::CliqueCap(k)),
            "triangle-free" => Ok(Profile::TriangleFree),
            _ => {
                if let Some(c) = s.strip_prefix("clique-cap=") {
                    c.parse().map(Profile::CliqueCap).map_err(|_| bad_profile(s))
                } else if let Some(d) = s.strip_prefix("min-degree=") {
                    d.parse().map(Profile::MinDegree).map_err(|_| bad_profile(s))
                } else {
                    Err(bad_profile(s))
                }
            }
        }
    }

    pub fn id(&self) -> String {
        match self {
            Profile::Default => "default".into(),
            Profile::CliqueCap(c) => format!("clique-cap={c}"),
            Profile::TriangleFree => "triangle-free".into(),
            Profile::MinDegree(d) => format!("min-degree={d}"),
        }
    }

    /// Clique cap imposed by the profile.
    fn cap(&self) -> Option<usize> {
        match self {
            Profile::CliqueCap(c) => Some(*c),
            Profile::TriangleFree => Some(2),
            _ => None,
        }
    }

    fn citation(&self) -> Option<String> {
        match self {
            Profile::Default => None,
            Profile::CliqueCap(c) => Some(format!(
                "a graph containing K_{} has m2 >= {}, so the restriction to K_{}-free graphs is exact whenever the value found is at most that",
                c + 1,
                clique_density(c + 1),
                c + 1
            )),
            Profile::TriangleFree => Some(
                "a graph containing a triangle has m2 >= 2, so the restriction to triangle-free graphs is exact whenever the value found is at most 2"
                    .into(),
            ),
            Profile::MinDegree(d) => Some(format!(
                "restricted to minimum degree >= {d}; the value is a minimum over that class only"
            )),
        }
    }
}

fn bad_profile(s: &str) -> Error {
    Error::InvalidParameter(format!(
        "unknown profile {s:?}; expected default, clique-cap, clique-cap=C, triangle-free or min-degree=D"
    ))
}

fn clique_density(k: usize) -> Rational {
    Rational::new(k as i64 + 1, 2)
}

/// Largest `c` with `m2(K_c) = (c+1)/2` admitted by `bound`.
fn implied_clique_cap(bound: DensityBound) -> usize {
    let mut c = 2;
    while bound.admits(clique_density(c + 1)) {
        c += 1;
    }
    c
}

const MONOTONE: &str = "m2 never increases when passing to a subgraph, so any branch whose graph already exceeds the bound cannot produce a better graph";

/// Smallest known `m2` of an `m`-vertex graph with independence number below `r`.
pub fn incumbent(m: usize, r: usize) -> Result<(Rational, ConstructionSpec)> {
    let mut specs = vec![ConstructionSpec::TuranComplement { m, parts: r - 1 }];
    let general = ConstructionSpec::GeneralExample { m, r };
    if general.validate().is_ok() {
        specs.push(general);
    }
    let mut best: Option<(Rational, ConstructionSpec)> = None;
    for spec in specs {
        let g = build(&spec)?;
        let d = m2_value(&g)?;
        if best.as_ref().is_none_or(|(b, _)| d < *b) {
            best = Some((d, spec));
        }
    }
    Ok(best.expect("at least one construction"))
}

fn outcome_from(
    m: usize,
    r: usize,
    profile: String,
    citations: Vec<String>,
    exact: bool,
    scored: Vec<(Extremum, String)>,
    gen: &Generated,
) -> SearchOutcome {
    let value = scored.iter().map(|(v, _)| *v).min();
    let mut winners: Vec<String> = scored
        .into_iter()
        .filter(|(v, _)| Some(*v) == value)
        .map(|(_, k)| k)
        .collect();
    winners.sort();
    let total = winners.len();
    winners.truncate(MAX_WITNESSES);
    SearchOutcome {
        m,
        r,
        profile,
        citations,
        exact,
        value,
        witnesses: winners,
        total_witnesses: total,
        enumerated: gen.graphs.len() as u64,
        pruned: gen.pruned,
        wall_time: 0.0,
    }
}

/// M(m, r): the least `m2` over `m`-vertex graphs with no independent set
/// of size `r`.
pub fn min_m2(m: usize, r: usize, profile: &Profile) -> Result<SearchOutcome> {
    let start = Instant::now();
    check_local_params(m, r)?;
    let (upper, spec) = incumbent(m, r)?;
    let bound = DensityBound {
        value: upper,
        strict: false,
    };
    let mut c = Constraints {
        alpha_max: Some(r - 1),
        clique_max: Some(implied_clique_cap(bound)),
        m2: Some(bound),
        ..Default::default()
    };
    let mut citations = vec![
        MONOTONE.to_string(),
        format!("incumbent {upper} from {spec}"),
    ];
    if let Some(cap) = profile.cap() {
        c.clique_max = Some(c.clique_max.expect("set above").min(cap));
    }
    if let Profile::MinDegree(d) = profile {
        c.min_degree = Some(*d);
    }
    citations.extend(profile.citation());
    let gen = generate(m, &c)?;
    let scored: Vec<(Extremum, String)> = gen
        .graphs
        .par_iter()
        .map(|g| (Extremum::Density(m2_value(g).expect("m >= 3")), to_graph6(g)))
        .collect();
    let best = scored.iter().map(|(v, _)| *v).min();
    let exact = match profile {
        Profile::Default => true,
        Profile::MinDegree(_) => false,
        _ => match (best, profile.cap()) {
            (Some(Extremum::Density(v)), Some(cap)) => v <= clique_density(cap + 1),
            _ => false,
        },
    };
    let mut out = outcome_from(m, r, profile.id(), citations, exact, scored, &gen);
    out.wall_time = start.elapsed().as_secs_f64();
    Ok(out)
}

/// e(m, r) under a cap: the least edge count of an `m`-vertex graph with no
/// independent set of size `r` and `m2 < cap`.
pub fn min_edges_under_m2_cap(m: usize, r: usize, cap: Rational) -> Result<SearchOutcome> {
    let start = Instant::now();
    if r < 2 || m < 3 {
        return Err(Error::InvalidParameter(format!("need m >= 3 and r >= 2, got m={m}, r={r}")));
    }
    if cap <= Rational::int(0) {
        return Err(Error::InvalidParameter(format!("cap must be positive, got {cap}")));
    }
    let bound = DensityBound {
        value: cap,
        strict: true,
    };
    let c = Constraints {
        alpha_max: Some(r - 1),
        clique_max: Some(implied_clique_cap(bound)),
        m2: Some(bound),
        ..Default::default()
    };
    let gen = generate(m, &c)?;
    let scored = gen
        .graphs
        .iter()
        .map(|g| (Extremum::Edges(g.edge_count()), to_graph6(g)))
        .collect();
    let citations = vec![MONOTONE.to_string(), format!("only graphs with m2 < {cap} are admitted")];
    let mut out = outcome_from(m, r, "default".into(), citations, true, scored, &gen);
    out.wall_time = start.elapsed().as_secs_f64();
    Ok(out)
}

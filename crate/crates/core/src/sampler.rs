//! Random graphs at the local-lemma edge density, screened for the local
//! independence property.
//!
//! Each edge `uv` is drawn from a fixed position of a ChaCha stream keyed by
//! the seed, so the sample does not depend on thread count or draw order.

use std::fmt::Write as _;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::density::{check_local_params, forbidden_family, ForbiddenFamily};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{independence_number, local_independence_below};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct SampleParams {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub seed: u64,
    pub family: ForbiddenFamily,
}

impl SampleParams {
    pub fn new(n: usize, m: usize, r: usize, seed: u64) -> Result<Self> {
        Self::with_family(n, seed, forbidden_family(m, r)?)
    }

    pub fn with_family(n: usize, seed: u64, family: ForbiddenFamily) -> Result<Self> {
        let p = SampleParams {
            n,
            m: family.m,
            r: family.r,
            seed,
            family,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        check_local_params(self.m, self.r)?;
        if self.n < self.m {
            return Err(Error::InvalidParameter(format!("need n >= m, got n={}, m={}", self.n, self.m)));
        }
        Graph::empty(self.n)?;
        self.probability().map(|_| ())
    }

    /// The edge probability `1 / (48 t n^(1/M))`.
    pub fn probability(&self) -> Result<f64> {
        lll_probability(self.family.t(), self.family.min_density, self.n)
    }
}

pub fn lll_probability(t: usize, density: Rational, n: usize) -> Result<f64> {
    if density.num() <= 0 || t == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "edge probability needs t >= 1, M > 0 and n >= 1, got t={t}, M={density}, n={n}"
        )));
    }
    let p = 1.0 / (48.0 * t as f64 * (n as f64).powf(1.0 / density.to_f64()));
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidParameter(format!("edge probability {p} is outside (0, 1)")));
    }
    Ok(p)
}

/// `p` as a threshold on uniform 64-bit draws.
pub fn dyadic_threshold(p: f64) -> u64 {
    (p * 2f64.powi(64)).floor() as u64
}

fn edge_index(n: usize, u: usize, v: usize) -> u128 {
    (u * (2 * n - u - 1) / 2 + (v - u - 1)) as u128
}

/// `G(n, p)` at the local-lemma density.
pub fn sample_lll(params: &SampleParams) -> Result<Graph> {
    params.validate()?;
    let threshold = dyadic_threshold(params.probability()?);
    let n = params.n;
    let edges: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|u| {
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
            if u + 1 < n {
                // two 32-bit words per draw
                rng.set_word_pos(2 * edge_index(n, u, u + 1));
            }
            (u + 1..n).filter(move |_| rng.next_u64() < threshold).map(move |v| (u, v))
        })
        .collect();
    Graph::from_edges(n, &edges)
}

/// Outcome of [`verify_local`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalVerdict {
    /// No member of the forbidden family occurs.
    FamilyFree,
    /// A member occurs, but no m-subset has independence number below r.
    MemberOnly { member: usize, embedding: Vec<usize> },
    /// An m-subset with independence number below r.
    Violated {
        member: usize,
        embedding: Vec<usize>,
        witness: Vec<usize>,
    },
}

impl LocalVerdict {
    /// Whether α_m(G) ≥ r.
    pub fn holds(&self) -> bool {
        !matches!(self, LocalVerdict::Violated { .. })
    }
}

/// Smallest total independence number of an m-subset, when below `r`.
///
/// Independence numbers add over components, so the search runs per
/// component and combines sizes with a knapsack.
fn local_violation(g: &Graph, m: usize, r: usize) -> Result<Option<Vec<usize>>> {
    // best[s] = (alpha, chosen vertices) over the components seen so far
    let mut best: Vec<Option<(usize, Vec<usize>)>> = vec![None; m + 1];
    best[0] = Some((0, Vec::new()));
    for comp in g.components() {
        let sub = g.induced(&comp);
        let mut options: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        for s in 1..=comp.len().min(m) {
            if comp.len() > 64 {
                return Err(Error::Infeasible(format!(
                    "local verification supports components of at most 64 vertices, found {}",
                    comp.len()
                )));
            }
            if let (a, Some(w)) = local_independence_below(&sub, s, r)? {
                options.push((s, a, w.into_iter().map(|i| comp[i]).collect()));
            }
        }
        let prev = best.clone();
        for (s, a, w) in &options {
            for used in 0..=m - s {
                if let Some((pa, pw)) = &prev[used] {
                    let total = pa + a;
                    if total < r && best[used + s].as_ref().is_none_or(|(ba, _)| total < *ba) {
                        let mut chosen = pw.clone();
                        chosen.extend(w);
                        best[used + s] = Some((total, chosen));
                    }
                }
            }
        }
    }
    Ok(best[m].take().map(|(_, mut w)| {
        w.sort_unstable();
        w
    }))
}

/// Decides α_m(G) ≥ r, screening with the forbidden family first.
pub fn verify_local(g: &Graph, family: &ForbiddenFamily) -> Result<LocalVerdict> {
    if g.n() < family.m {
        return Err(Error::InvalidParameter(format!(
            "local verification needs at least m={} vertices, got {}",
            family.m,
            g.n()
        )));
    }
    let Some((member, embedding)) = family.find_member(g) else {
        return Ok(LocalVerdict::FamilyFree);
    };
    Ok(match local_violation(g, family.m, family.r)? {
        Some(witness) => LocalVerdict::Violated {
            member,
            embedding,
            witness,
        },
        None => LocalVerdict::MemberOnly { member, embedding },
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleRecord {
    pub n: usize,
    pub rep: usize,
    pub seed: u64,
    pub edges: usize,
    pub accepted: bool,
    /// Independence number, recorded for accepted samples only.
    pub alpha: Option<usize>,
    pub predicted_scale: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentRow {
    pub n: usize,
    pub p: f64,
    pub reps: usize,
    pub accepted: usize,
    pub acceptance_rate: f64,
    pub alpha_min: Option<usize>,
    pub alpha_median: Option<f64>,
    pub alpha_max: Option<usize>,
    /// `n^(1/M) ln n`.
    pub predicted_scale: f64,
    /// `8 ln n / p + 2`, reported only.
    pub k_threshold: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub m: usize,
    pub r: usize,
    pub t: usize,
    #[serde(rename = "M")]
    pub min_density: Rational,
    pub seed: u64,
    pub grid: Vec<usize>,
    pub rows: Vec<ExperimentRow>,
    /// Soft trend check; a false value is reported, not treated as failure.
    pub median_alpha_nondecreasing: bool,
    pub samples: Vec<SampleRecord>,
}

impl ExperimentReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,rep,accepted,alpha,predicted_scale\n");
        for s in &self.samples {
            let alpha = s.alpha.map(|a| a.to_string()).unwrap_or_default();
            writeln!(out, "{},{},{},{},{}", s.n, s.rep, s.accepted, alpha, s.predicted_scale).expect("string");
        }
        out
    }
}

/// Seed of replicate `rep` at order `n`.
pub fn replicate_seed(seed: u64, n: usize, rep: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 32) | rep as u64);
    rng.next_u64()
}

fn median(sorted: &[usize]) -> Option<f64> {
    let k = sorted.len();
    match k {
        0 => None,
        _ if k % 2 == 1 => Some(sorted[k / 2] as f64),
        _ => Some((sorted[k / 2 - 1] + sorted[k / 2]) as f64 / 2.0),
    }
}

pub fn experiment(m: usize, r: usize, grid: &[usize], reps: usize, seed: u64) -> Result<ExperimentReport> {
    let family = forbidden_family(m, r)?;
    for &n in grid {
        SampleParams::with_family(n, seed, family.clone())?;
    }
    let jobs: Vec<(usize, usize)> = grid.iter().flat_map(|&n| (0..reps).map(move |rep| (n, rep))).collect();
    let inv = 1.0 / family.min_density.to_f64();
    let samples: Vec<SampleRecord> = jobs
        .par_iter()
        .map(|&(n, rep)| {
            let s = replicate_seed(seed, n, rep);
            let params = SampleParams::with_family(n, s, family.clone())?;
            let g = sample_lll(&params)?;
            let accepted = verify_local(&g, &family)?.holds();
            Ok(SampleRecord {
                n,
                rep,
                seed: s,
                edges: g.edge_count(),
                accepted,
                alpha: accepted.then(|| independence_number(&g)),
                predicted_scale: (n as f64).powf(inv) * (n as f64).ln(),
            })
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for &n in grid {
        let p = lll_probability(family.t(), family.min_density, n)?;
        let here: Vec<&SampleRecord> = samples.iter().filter(|s| s.n == n).collect();
        let mut alphas: Vec<usize> = here.iter().filter_map(|s| s.alpha).collect();
        alphas.sort_unstable();
        let accepted = here.iter().filter(|s| s.accepted).count();
        rows.push(ExperimentRow {
            n,
            p,
            reps,
            accepted,
            acceptance_rate: if reps == 0 { 0.0 } else { accepted as f64 / reps as f64 },
            alpha_min: alphas.first().copied(),
            alpha_median: median(&alphas),
            alpha_max: alphas.last().copied(),
            predicted_scale: (n as f64).powf(inv) * (n as f64).ln(),
            k_threshold: 8.0 * (n as f64).ln() / p + 2.0,
        });
    }
    let medians: Vec<f64> = rows.iter().filter_map(|r| r.alpha_median).collect();
    Ok(ExperimentReport {
        m,
        r,
        t: family.t(),
        min_density: family.min_density,
        seed,
        grid: grid.to_vec(),
        median_alpha_nondecreasing: medians.windows(2).all(|w| w[0] <= w[1]),
        rows,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, petersen, ConstructionSpec};
    use crate::graph6::to_graph6;

    #[test]
    fn probability_at_4096() {
        let p = lll_probability(2, Rational::new(4, 3), 4096).unwrap();
        assert!((p - 1.0 / 49152.0).abs() < 1e-15);
    }

    #[test]
    fn local_examples() {
        let fam = forbidden_family(5, 3).unwrap();
        let c5 = build(&ConstructionSpec::Cycle { n: 5 }).unwrap();
        assert!(matches!(verify_local(&c5, &fam).unwrap(), LocalVerdict::Violated { .. }));
        let empty = Graph::empty(10).unwrap();
        assert_eq!(verify_local(&empty, &fam).unwrap(), LocalVerdict::FamilyFree);
        assert!(!verify_local(&petersen(), &fam).unwrap().holds());
    }

    #[test]
    fn member_without_violation() {
        let fam = forbidden_family(7, 3).unwrap();
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(verify_local(&g, &fam).unwrap(), LocalVerdict::MemberOnly { .. }));
    }

    #[test]
    fn samples_are_deterministic_across_pools() {
        let params = SampleParams::new(200, 5, 3, 7).unwrap();
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = one.install(|| sample_lll(&params).unwrap());
        let b = four.install(|| sample_lll(&params).unwrap());
        assert_eq!(to_graph6(&a), to_graph6(&b));
    }

    #[test]
    fn small_experiment() {
        let rep = experiment(5, 3, &[128], 10, 1).unwrap();
        assert_eq!(rep.rows.len(), 1);
        assert_eq!(rep.samples.len(), 10);
        let empty = experiment(5, 3, &[64], 0, 1).unwrap();
        assert_eq!(empty.rows[0].accepted, 0);
        assert!(empty.samples.is_empty());
    }
}

//! Explicit graph families: cycles, cliques, cycle powers and clique
//! blow-ups of the pentagon, plus disjoint unions of these.
//!
//! Vertex numbering is fixed: parts in cyclic order, vertices consecutive
//! within a part, components in the order they are listed.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionSpec {
    Cycle { n: usize },
    Clique { k: usize },
    DisjointCliques(Vec<usize>),
    /// Vertices at cyclic distance at most `d` are adjacent.
    CyclePower { n: usize, d: usize },
    /// Pentagon blow-up with a clique in every part.
    C5CliqueBlowup([usize; 5]),
    /// Blow-up with parts `1, k-2, 1, 1, k-2`.
    H2kMinus1 { k: usize },
    /// Blow-up with parts `1, k-1-a, a, a, k-1-a`, `a` from
    /// [`odd_optimal_parameter`].
    OddOptimal { k: usize },
    /// Complement of the Turán graph: `parts` near-equal disjoint cliques.
    TuranComplement { m: usize, parts: usize },
    /// `l` copies of `OddOptimal(k)` and `r-1-2l` copies of `K_{k-1}`, where
    /// `k = ceil(m/(r-1))` and `l = m - (k-1)(r-1)`.
    GeneralExample { m: usize, r: usize },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Construction(msg.into())
}

/// `m(t) = min(t/(k-2), ((k+1)/2 - (t-1)^2)/(2k-3))`.
pub fn odd_gap(k: usize, t: usize) -> Rational {
    let k = k as i64;
    let t = t as i64;
    let first = Rational::new(t, k - 2);
    let second = (Rational::new(k + 1, 2) - Rational::int((t - 1) * (t - 1))) / Rational::int(2 * k - 3);
    first.min(second)
}

/// Smallest `t` in `1..=k-2` maximising [`odd_gap`].
pub fn odd_optimal_parameter(k: usize) -> Result<usize> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!("odd-optimal parameter needs k >= 4, got {k}")));
    }
    let mut best = 1;
    for t in 2..=k - 2 {
        if odd_gap(k, t) > odd_gap(k, best) {
            best = t;
        }
    }
    debug_assert!(2 * best < k);
    debug_assert!(2 * (best - 1) * (best - 1) < k - 1);
    Ok(best)
}

/// `(k+1)/2 - m(a)`: the smallest 2-density of a `(2k-1)`-vertex graph with
/// no independent set of size three.
pub fn odd_bound(k: usize) -> Result<Rational> {
    let a = odd_optimal_parameter(k)?;
    Ok(Rational::new(k as i64 + 1, 2) - odd_gap(k, a))
}

fn general_split(m: usize, r: usize) -> Result<(usize, usize)> {
    if r < 3 || m < r {
        return Err(invalid(format!("general example needs r >= 3 and m >= r, got m={m}, r={r}")));
    }
    let k = m.div_ceil(r - 1);
    let l = m - (k - 1) * (r - 1);
    if k < 4 {
        return Err(invalid(format!("general example needs k = ceil(m/(r-1)) >= 4, got {k}")));
    }
    if 2 * l > r - 1 {
        return Err(invalid(format!(
            "general example needs l = m - (k-1)(r-1) <= (r-1)/2, got l={l}"
        )));
    }
    Ok((k, l))
}

fn turan_sizes(m: usize, parts: usize) -> Vec<usize> {
    (0..parts).map(|i| m / parts + usize::from(i < m % parts)).collect()
}

impl ConstructionSpec {
    pub fn validate(&self) -> Result<()> {
        use ConstructionSpec::*;
        match self {
            Cycle { n } if *n < 3 => Err(invalid(format!("cycle needs n >= 3, got {n}"))),
            Clique { k } if *k < 1 => Err(invalid("clique needs k >= 1")),
            DisjointCliques(s) if s.is_empty() || s.contains(&0) => {
                Err(invalid("disjoint cliques need a nonempty list of positive sizes"))
            }
            CyclePower { n, d } if *n < 3 || *d < 1 => {
                Err(invalid(format!("cycle power needs n >= 3 and d >= 1, got n={n}, d={d}")))
            }
            C5CliqueBlowup(p) if p.contains(&0) => Err(invalid("blow-up parts must be positive")),
            H2kMinus1 { k } if *k < 3 => Err(invalid(format!("H_(2k-1) needs k >= 3, got {k}"))),
            OddOptimal { k } if *k < 4 => Err(invalid(format!("odd-optimal needs k >= 4, got {k}"))),
            TuranComplement { m, parts } if *parts < 1 || m < parts => {
                Err(invalid(format!("turan complement needs 1 <= parts <= m, got m={m}, parts={parts}")))
            }
            GeneralExample { m, r } => general_split(*m, *r).map(|_| ()),
            _ => Ok(()),
        }
    }

    /// Part sizes for the pentagon blow-up variants.
    pub fn blowup_parts(&self) -> Option<[usize; 5]> {
        match self {
            ConstructionSpec::C5CliqueBlowup(p) => Some(*p),
            ConstructionSpec::H2kMinus1 { k } => Some([1, k - 2, 1, 1, k - 2]),
            ConstructionSpec::OddOptimal { k } => {
                let a = odd_optimal_parameter(*k).ok()?;
                Some([1, k - 1 - a, a, a, k - 1 - a])
            }
            _ => None,
        }
    }
}

fn blowup(parts: &[usize; 5]) -> Result<Graph> {
    let starts: Vec<usize> = parts
        .iter()
        .scan(0, |acc, &p| {
            let s = *acc;
            *acc += p;
            Some(s)
        })
        .collect();
    let n: usize = parts.iter().sum();
    let mut edges = Vec::new();
    for i in 0..5 {
        let part: Vec<usize> = (starts[i]..starts[i] + parts[i]).collect();
        let j = (i + 1) % 5;
        for (a, &u) in part.iter().enumerate() {
            edges.extend(part[a + 1..].iter().map(|&v| (u, v)));
            edges.extend((starts[j]..starts[j] + parts[j]).map(|v| (u, v)));
        }
    }
    Graph::from_edges(n, &edges)
}

fn disjoint_cliques(sizes: &[usize]) -> Result<Graph> {
    sizes.iter().try_fold(Graph::empty(0)?, |acc, &s| acc.disjoint_union(&Graph::complete(s)?))
}

pub fn build(spec: &ConstructionSpec) -> Result<Graph> {
    use ConstructionSpec::*;
    spec.validate()?;
    match spec {
        Cycle { n } => {
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(*n, &edges)
        }
        Clique { k } => Graph::complete(*k),
        DisjointCliques(sizes) => disjoint_cliques(sizes),
        CyclePower { n, d } => {
            let mut edges = Vec::new();
            for u in 0..*n {
                for step in 1..=*d {
                    let v = (u + step) % n;
                    if v != u {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(*n, &edges)
        }
        C5CliqueBlowup(_) | H2kMinus1 { .. } | OddOptimal { .. } => {
            blowup(&spec.blowup_parts().expect("validated"))
        }
        TuranComplement { m, parts } => disjoint_cliques(&turan_sizes(*m, *parts)),
        GeneralExample { m, r } => {
            let (k, l) = general_split(*m, *r)?;
            let odd = build(&OddOptimal { k })?;
            let small = Graph::complete(k - 1)?;
            let mut g = Graph::empty(0)?;
            for _ in 0..l {
                g = g.disjoint_union(&odd)?;
            }
            for _ in 0..(r - 1 - 2 * l) {
                g = g.disjoint_union(&small)?;
            }
            Ok(g)
        }
    }
}

/// Closed-form predictions for a construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedStats {
    pub vertices: usize,
    pub edges: usize,
    /// Claimed upper bound on the independence number.
    pub alpha_at_most: usize,
    /// Claimed 2-density, where a closed form is known.
    pub m2: Option<Rational>,
}

fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

fn clique_m2(k: usize) -> Option<Rational> {
    (k >= 3).then(|| Rational::new(k as i64 + 1, 2))
}

fn cliques_stats(sizes: &[usize]) -> ExpectedStats {
    let max = *sizes.iter().max().expect("nonempty");
    ExpectedStats {
        vertices: sizes.iter().sum(),
        edges: sizes.iter().map(|&s| choose2(s)).sum(),
        alpha_at_most: sizes.len(),
        m2: clique_m2(max),
    }
}

fn odd_edges(k: usize, a: usize) -> usize {
    k * (k - 1) + (a - 1) * (a - 1) - 1
}

pub fn expected_stats(spec: &ConstructionSpec) -> Result<ExpectedStats> {
    use ConstructionSpec::*;
    spec.validate()?;
    Ok(match spec {
        Cycle { n } => ExpectedStats {
            vertices: *n,
            edges: *n,
            alpha_at_most: n / 2,
            m2: Some(Rational::new(*n as i64 - 1, *n as i64 - 2)),
        },
        Clique { k } => cliques_stats(&[*k]),
        DisjointCliques(sizes) => cliques_stats(sizes),
        TuranComplement { m, parts } => cliques_stats(&turan_sizes(*m, *parts)),
        CyclePower { n, d } => {
            let full = 2 * d + 1 >= *n;
            let half = n / 2;
            ExpectedStats {
                vertices: *n,
                edges: if full { choose2(*n) } else { n * d },
                alpha_at_most: if full { 1 } else { n / (d + 1) },
                // the (k/2)-th power of C_{2k} for even k
                m2: if full {
                    clique_m2(*n)
                } else if n % 4 == 0 && *d == n / 4 {
                    clique_m2(half)
                } else {
                    None
                },
            }
        }
        C5CliqueBlowup(p) => ExpectedStats {
            vertices: p.iter().sum(),
            edges: (0..5).map(|i| choose2(p[i]) + p[i] * p[(i + 1) % 5]).sum(),
            alpha_at_most: 2,
            m2: None,
        },
        H2kMinus1 { k } => ExpectedStats {
            vertices: 2 * k - 1,
            edges: k * k - k - 1,
            alpha_at_most: 2,
            m2: match odd_optimal_parameter(*k) {
                Ok(1) => Some(odd_bound(*k)?),
                _ => None,
            },
        },
        OddOptimal { k } => {
            let a = odd_optimal_parameter(*k)?;
            ExpectedStats {
                vertices: 2 * k - 1,
                edges: odd_edges(*k, a),
                alpha_at_most: 2,
                m2: Some(odd_bound(*k)?),
            }
        }
        GeneralExample { m, r } => {
            let (k, l) = general_split(*m, *r)?;
            let a = odd_optimal_parameter(k)?;
            let small = r - 1 - 2 * l;
            let mut m2 = odd_bound(k)?;
            if small > 0 {
                m2 = m2.max(Rational::new(k as i64, 2));
            }
            ExpectedStats {
                vertices: *m,
                edges: l * odd_edges(k, a) + small * choose2(k - 1),
                alpha_at_most: r - 1,
                m2: Some(m2),
            }
        }
    })
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("valid")
}

/// Two triangles sharing a vertex.
pub fn bowtie() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).expect("valid")
}

/// `H_7`, the blow-up with parts `1, 2, 1, 1, 2`.
pub fn h7() -> Graph {
    build(&ConstructionSpec::H2kMinus1 { k: 4 }).expect("valid")
}

/// Graphs reachable by name on the command line.
pub fn named(name: &str) -> Option<Graph> {
    match name {
        "petersen" => Some(petersen()),
        "bowtie" => Some(bowtie()),
        "h7" => Some(h7()),
        _ => None,
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructionSpec::*;
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Cycle { n } => write!(f, "cycle:n={n}"),
            Clique { k } => write!(f, "clique:k={k}"),
            DisjointCliques(s) => write!(f, "disjoint-cliques:{}", list(s)),
            CyclePower { n, d } => write!(f, "cycle-power:n={n},d={d}"),
            C5CliqueBlowup(p) => write!(f, "c5-blowup:{}", list(p)),
            H2kMinus1 { k } => write!(f, "h2k-1:k={k}"),
            OddOptimal { k } => write!(f, "odd-optimal:k={k}"),
            TuranComplement { m, parts } => write!(f, "turan-complement:m={m},parts={parts}"),
            GeneralExample { m, r } => write!(f, "general-example:m={m},r={r}"),
        }
    }
}

fn parse_named(body: &str, keys: &[&str]) -> Result<Vec<usize>> {
    let mut out = vec![None; keys.len()];
    for item in body.split(',').filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| invalid(format!("expected key=value, got {item:?}")))?;
        let idx = keys
            .iter()
            .position(|&want| want == k.trim())
            .ok_or_else(|| invalid(format!("unknown key {k:?}")))?;
        let v: usize = v.trim().parse().map_err(|_| invalid(format!("bad value {v:?}")))?;
        out[idx] = Some(v);
    }
    out.into_iter()
        .zip(keys)
        .map(|(v, k)| v.ok_or_else(|| invalid(format!("missing key {k}"))))
        .collect()
}

fn parse_list(body: &str) -> Result<Vec<usize>> {
    body.split(',')
        .map(|s| s.trim().parse().map_err(|_| invalid(format!("bad size {s:?}"))))
        .collect()
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use ConstructionSpec::*;
        let (kind, body) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let spec = match kind {
            "cycle" => Cycle { n: parse_named(body, &["n"])?[0] },
            "clique" => Clique { k: parse_named(body, &["k"])?[0] },
            "disjoint-cliques" => DisjointCliques(parse_list(body)?),
            "cycle-power" => {
                let v = parse_named(body, &["n", "d"])?;
                CyclePower { n: v[0], d: v[1] }
            }
            "c5-blowup" => {
                let v = parse_list(body)?;
                let parts: [usize; 5] = v
                    .try_into()
                    .map_err(|_| invalid("c5-blowup needs exactly five part sizes"))?;
                C5CliqueBlowup(parts)
            }
            "h2k-1" => H2kMinus1 { k: parse_named(body, &["k"])?[0] },
            "odd-optimal" => OddOptimal { k: parse_named(body, &["k"])?[0] },
            "turan-complement" => {
                let v = parse_named(body, &["m", "parts"])?;
                TuranComplement { m: v[0], parts: v[1] }
            }
            "general-example" => {
                let v = parse_named(body, &["m", "r"])?;
                GeneralExample { m: v[0], r: v[1] }
            }
            other => return Err(invalid(format!("unknown construction {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::m2_value;
    use crate::invariants::{clique_number, degeneracy, independence_number};

    #[test]
    fn h7_and_odd_optimal_four() {
        let h = build(&ConstructionSpec::H2kMinus1 { k: 4 }).unwrap();
        assert_eq!((h.n(), h.edge_count()), (7, 11));
        let o = build(&ConstructionSpec::OddOptimal { k: 4 }).unwrap();
        assert_eq!(ConstructionSpec::OddOptimal { k: 4 }.blowup_parts(), Some([1, 2, 1, 1, 2]));
        assert_eq!(o.edge_count(), 11);
    }

    #[test]
    fn parameter_examples() {
        assert_eq!(odd_optimal_parameter(4).unwrap(), 1);
        assert_eq!(odd_optimal_parameter(5).unwrap(), 1);
        assert_eq!(odd_optimal_parameter(10).unwrap(), 2);
        assert_eq!(odd_gap(5, 1), Rational::new(1, 3));
        assert_eq!(odd_gap(5, 2), Rational::new(2, 7));
        assert_eq!(odd_gap(10, 3), Rational::new(3, 34));
        assert!(odd_optimal_parameter(3).is_err());
        assert_eq!(odd_bound(4).unwrap(), Rational::int(2));
    }

    #[test]
    fn disjoint_cliques_and_cycle_power() {
        let g = build(&ConstructionSpec::DisjointCliques(vec![5, 5, 5, 5])).unwrap();
        assert_eq!((g.n(), g.edge_count(), independence_number(&g)), (20, 40, 4));
        let c = build(&ConstructionSpec::CyclePower { n: 8, d: 2 }).unwrap();
        assert_eq!((c.n(), c.edge_count()), (8, 16));
        assert_eq!((clique_number(&c), independence_number(&c)), (3, 2));
        assert_eq!(degeneracy(&petersen()), 3);
    }

    #[test]
    fn expected_stat_examples() {
        let s = expected_stats(&ConstructionSpec::OddOptimal { k: 5 }).unwrap();
        assert_eq!((s.vertices, s.edges, s.alpha_at_most, s.m2), (9, 19, 2, Some(Rational::new(8, 3))));
        let s = expected_stats(&ConstructionSpec::DisjointCliques(vec![6, 6])).unwrap();
        assert_eq!((s.vertices, s.edges, s.alpha_at_most, s.m2), (12, 30, 2, Some(Rational::new(7, 2))));
        let s = expected_stats(&ConstructionSpec::Cycle { n: 9 }).unwrap();
        assert_eq!((s.vertices, s.edges, s.alpha_at_most, s.m2), (9, 9, 4, Some(Rational::new(8, 7))));
    }

    #[test]
    fn builds_match_expectations() {
        use ConstructionSpec::*;
        let specs = [
            Cycle { n: 7 },
            Clique { k: 5 },
            DisjointCliques(vec![4, 3, 3]),
            CyclePower { n: 8, d: 2 },
            CyclePower { n: 12, d: 3 },
            CyclePower { n: 7, d: 3 },
            C5CliqueBlowup([2, 1, 3, 1, 2]),
            H2kMinus1 { k: 6 },
            OddOptimal { k: 7 },
            TuranComplement { m: 11, parts: 3 },
            GeneralExample { m: 13, r: 5 },
        ];
        for spec in specs {
            let g = build(&spec).unwrap();
            let e = expected_stats(&spec).unwrap();
            assert_eq!((g.n(), g.edge_count()), (e.vertices, e.edges), "{spec}");
            assert!(independence_number(&g) <= e.alpha_at_most, "{spec}");
            if let Some(m2) = e.m2 {
                assert_eq!(m2_value(&g).unwrap(), m2, "{spec}");
            }
        }
    }

    #[test]
    fn blowup_complements_are_triangle_free() {
        for k in 3..9 {
            let g = build(&ConstructionSpec::H2kMinus1 { k }).unwrap();
            assert!(clique_number(&g.complement()) <= 2);
        }
    }

    #[test]
    fn text_forms_round_trip() {
        for s in [
            "odd-optimal:k=5",
            "disjoint-cliques:5,5,5,5",
            "cycle-power:n=8,d=2",
            "cycle:n=9",
            "clique:k=4",
            "c5-blowup:1,2,1,1,2",
            "h2k-1:k=4",
            "turan-complement:m=10,parts=2",
            "general-example:m=13,r=5",
        ] {
            let spec: ConstructionSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("odd-optimal:k=3".parse::<ConstructionSpec>().is_err());
        assert!("cycle:m=3".parse::<ConstructionSpec>().is_err());
        assert!("general-example:m=12,r=5".parse::<ConstructionSpec>().is_err());
        assert!("wheel:n=5".parse::<ConstructionSpec>().is_err());
    }
}

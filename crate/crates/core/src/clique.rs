//! Exact clique machinery: r-clique counting, maximal-clique enumeration via
//! pivoting Bron–Kerbosch, and the clique number via branch-and-bound with a
//! greedy-coloring upper bound.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use crate::bitset::VertexSet;
use crate::combo::{binomial, ratio_to_f64};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on the number of maximal cliques an enumeration may emit.
pub const DEFAULT_CLIQUE_CAP: usize = 10_000_000;

/// All maximal cliques of a graph in canonical order: size descending, then
/// element-list lexicographic. Isolated vertices appear as 1-cliques.
#[derive(Debug, Clone)]
pub struct CliqueList {
    pub cliques: Vec<VertexSet>,
    pub source_n: usize,
}

impl CliqueList {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn max_size(&self) -> usize {
        self.cliques.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// One line per clique: space-separated ascending vertex indices.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.cliques {
            let verts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            out.push_str(&verts.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Exact r-clique count and the density `count / C(n, r)` it induces.
#[derive(Debug, Clone)]
pub struct DensityReport {
    pub r: usize,
    pub count: BigUint,
    pub binom: BigUint,
    pub c: BigRational,
}

impl DensityReport {
    pub fn c_float(&self) -> f64 {
        ratio_to_f64(&self.c)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "r": self.r,
            "count": self.count.to_string(),
            "binom": self.binom.to_string(),
            "c_num": self.c.numer().to_string(),
            "c_den": self.c.denom().to_string(),
            "c_float": self.c_float(),
        })
    }
}

/// Exact number of r-vertex subsets inducing a complete subgraph.
///
/// Ordered backtracking over bitset candidate intersections; a candidate set
/// that is itself a clique contributes `C(|cand|, need)` in one step, which
/// keeps dense graphs (and the complete graph in particular) cheap.
pub fn count_r_cliques(g: &Graph, r: usize) -> BigUint {
    if r == 0 {
        return BigUint::one();
    }
    if r > g.n() {
        return BigUint::zero();
    }
    let mut count = BigUint::zero();
    let cand = VertexSet::full(g.n());
    count_rec(g, &cand, r, &mut count);
    count
}

fn count_rec(g: &Graph, cand: &VertexSet, need: usize, count: &mut BigUint) {
    let avail = cand.len();
    if avail < need {
        return;
    }
    if need == 1 {
        *count += avail;
        return;
    }
    if g.is_clique(cand) {
        *count += binomial(avail as u64, need as u64);
        return;
    }
    let mut rest = cand.clone();
    for v in cand.iter() {
        rest.remove(v);
        if rest.len() + 1 < need {
            break;
        }
        let next = rest.intersection(g.neighbors(v));
        count_rec(g, &next, need - 1, count);
    }
}

/// `count_r_cliques(g, r) / C(n, r)` as an exact rational.
pub fn clique_density(g: &Graph, r: usize) -> Result<DensityReport> {
    if r > g.n() {
        return Err(Error::InvalidParameter(format!(
            "clique order r={r} exceeds n={}",
            g.n()
        )));
    }
    let count = count_r_cliques(g, r);
    let binom = binomial(g.n() as u64, r as u64);
    let c = BigRational::new(count.clone().into(), binom.clone().into());
    Ok(DensityReport { r, count, binom, c })
}

/// Enumerates all maximal cliques with the default output cap.
pub fn enumerate_maximal_cliques(g: &Graph) -> Result<CliqueList> {
    enumerate_maximal_cliques_with_cap(g, DEFAULT_CLIQUE_CAP)
}

/// Pivoting Bron–Kerbosch over bitset candidate/excluded sets. The pivot is
/// the vertex of `P ∪ X` maximizing `|P ∩ N(u)|`, lowest index on ties, so
/// the recursion tree — and therefore the output — is deterministic. Output
/// is sorted size-descending then lexicographic.
pub fn enumerate_maximal_cliques_with_cap(g: &Graph, cap: usize) -> Result<CliqueList> {
    let n = g.n();
    let mut out: Vec<VertexSet> = Vec::new();
    if n > 0 {
        let mut current = Vec::new();
        bron_kerbosch(
            g,
            &mut current,
            VertexSet::full(n),
            VertexSet::new(n),
            &mut out,
            cap,
        )?;
    }
    out.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    Ok(CliqueList {
        cliques: out,
        source_n: n,
    })
}

fn bron_kerbosch(
    g: &Graph,
    current: &mut Vec<usize>,
    p: VertexSet,
    x: VertexSet,
    out: &mut Vec<VertexSet>,
    cap: usize,
) -> Result<()> {
    if p.is_empty() {
        if x.is_empty() {
            if out.len() >= cap {
                return Err(Error::ResourceLimit(format!(
                    "maximal clique count exceeds cap {cap}"
                )));
            }
            out.push(VertexSet::from_iter(g.n(), current.iter().copied()));
        }
        return Ok(());
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .map(|u| (p.intersection_len(g.neighbors(u)), std::cmp::Reverse(u)))
        .max()
        .map(|(_, std::cmp::Reverse(u))| u)
        .expect("P nonempty");
    let mut ext = p.clone();
    ext.subtract(g.neighbors(pivot));

    let mut p = p;
    let mut x = x;
    for v in ext.iter() {
        let np = p.intersection(g.neighbors(v));
        let nx = x.intersection(g.neighbors(v));
        current.push(v);
        bron_kerbosch(g, current, np, nx, out, cap)?;
        current.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// Clique number via branch-and-bound: candidates are greedily colored and
/// visited from the highest color class down, pruning branches whose color
/// bound cannot beat the incumbent. Cross-checked against
/// [`enumerate_maximal_cliques`] in the test suites.
pub fn clique_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut best = 0;
    expand(g, 0, VertexSet::full(g.n()), &mut best);
    best
}

fn expand(g: &Graph, depth: usize, p: VertexSet, best: &mut usize) {
    if p.is_empty() {
        *best = (*best).max(depth);
        return;
    }
    // Greedy coloring of P in ascending index order; color class i gets the
    // vertices whose earlier-colored neighbors miss class i.
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut order: Vec<(usize, usize)> = Vec::new(); // (color, vertex)
    for v in p.iter() {
        let mut color = None;
        for (i, class) in classes.iter().enumerate() {
            if class.is_disjoint_from(g.neighbors(v)) {
                color = Some(i);
                break;
            }
        }
        let i = match color {
            Some(i) => i,
            None => {
                classes.push(VertexSet::new(g.n()));
                classes.len() - 1
            }
        };
        classes[i].insert(v);
        order.push((i + 1, v));
    }
    order.sort_unstable();

    let mut p = p;
    for &(color, v) in order.iter().rev() {
        if depth + color <= *best {
            return; // colors only decrease from here
        }
        let np = p.intersection(g.neighbors(v));
        expand(g, depth + 1, np, best);
        p.remove(v);
    }
}

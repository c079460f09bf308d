//! The semi-induced pattern family and its detection machinery.
//!
//! A pattern of order `r` lives on `2r` vertices split into `r` parts
//! `{u_i, u_i'}`. Between different parts every pair touching an unprimed
//! vertex is a required edge; the pair inside each part is a required
//! non-edge; the pairs among primed vertices are unconstrained ("free").
//! Ranging over all `2^C(r,2)` free-edge subsets closes the family, which is
//! exactly why containment search only needs the required/forbidden classes.

use serde_json::json;

use crate::bitset::VertexSet;
use crate::clique::CliqueList;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default backtracking-node budget for containment searches.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Pair classification for a pattern template on `2r` roles: roles `0..r`
/// are the unprimed (anchor) vertices, roles `r..2r` their primed partners.
#[derive(Debug, Clone)]
pub struct PatternSpec {
    pub r: usize,
    pub required: Vec<(usize, usize)>,
    pub forbidden: Vec<(usize, usize)>,
    pub free: Vec<(usize, usize)>,
    /// Whether free pairs are instead required (the induced 2-blow-up case).
    free_required: bool,
}

impl PatternSpec {
    /// The semi-induced family template: free pairs are unconstrained.
    pub fn semi_induced(r: usize) -> Result<PatternSpec> {
        if r < 2 {
            return Err(Error::InvalidParameter(format!("pattern order r={r} < 2")));
        }
        let mut required = Vec::new();
        let mut free = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                required.push((i, j)); // anchor-anchor
                free.push((r + i, r + j)); // partner-partner
            }
        }
        for i in 0..r {
            for j in 0..r {
                if i != j {
                    required.push((i.min(r + j), i.max(r + j))); // anchor-partner across parts
                }
            }
        }
        let forbidden = (0..r).map(|i| (i, r + i)).collect();
        Ok(PatternSpec {
            r,
            required,
            forbidden,
            free,
            free_required: false,
        })
    }

    /// The induced 2-blow-up of the complete graph on `r` vertices: the
    /// member of the family with every free pair present, matched as an
    /// induced subgraph (free pairs become required).
    pub fn induced_blowup(r: usize) -> Result<PatternSpec> {
        let mut spec = Self::semi_induced(r)?;
        spec.free_required = true;
        Ok(spec)
    }

    /// Bit position of the free pair `(u_i', u_j')`, `i < j`, in
    /// lexicographic order.
    pub fn free_pair_bit(r: usize, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < r);
        i * r - i * (i + 1) / 2 + (j - i - 1)
    }

    /// The labeled template graph on `2r` vertices for a given free-edge
    /// mask.
    pub fn template_graph(&self, free_mask: u64) -> Graph {
        let mut edges: Vec<(usize, usize)> = self.required.clone();
        for (bit, &(a, b)) in self.free.iter().enumerate() {
            if free_mask >> bit & 1 == 1 {
                edges.push((a, b));
            }
        }
        Graph::from_edges(2 * self.r, edges).expect("template pairs are in range and loop-free")
    }
}

/// All `2^C(r,2)` members of the family of order `r`, indexed by free-edge
/// mask. Guarded at `r <= 6` (32768 members).
pub fn family_members(r: usize) -> Result<Vec<Graph>> {
    if !(2..=6).contains(&r) {
        return Err(Error::InvalidParameter(format!(
            "family materialization supports 2 <= r <= 6, got {r}"
        )));
    }
    let spec = PatternSpec::semi_induced(r)?;
    let members = 1u64 << spec.free.len();
    Ok((0..members).map(|mask| spec.template_graph(mask)).collect())
}

/// An embedding of a family member into a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub r: usize,
    /// Anchor vertices `u_1..u_r` (a clique in the host).
    pub u: Vec<usize>,
    /// Partner vertices `u_1'..u_r'`; partner `i` misses anchor `i` and hits
    /// every other anchor.
    pub u_prime: Vec<usize>,
    /// Host edges among partners, by free-pair bit.
    pub free_mask: u64,
}

impl PatternWitness {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "r": self.r,
            "u": self.u,
            "u_prime": self.u_prime,
            "free_mask": self.free_mask,
        })
    }
}

/// Independent pair-by-pair check of a witness against the pattern classes
/// and the host adjacency (including the recorded free mask).
pub fn verify_witness(g: &Graph, w: &PatternWitness) -> bool {
    let r = w.r;
    if w.u.len() != r || w.u_prime.len() != r || r < 2 {
        return false;
    }
    let all: Vec<usize> = w.u.iter().chain(&w.u_prime).copied().collect();
    if all.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let distinct: std::collections::HashSet<usize> = all.iter().copied().collect();
    if distinct.len() != 2 * r {
        return false;
    }
    for i in 0..r {
        for j in i + 1..r {
            if !g.has_edge(w.u[i], w.u[j]) {
                return false;
            }
            let bit = PatternSpec::free_pair_bit(r, i, j);
            if g.has_edge(w.u_prime[i], w.u_prime[j]) != (w.free_mask >> bit & 1 == 1) {
                return false;
            }
        }
    }
    for i in 0..r {
        if g.has_edge(w.u[i], w.u_prime[i]) {
            return false;
        }
        for j in 0..r {
            if i != j && !g.has_edge(w.u[j], w.u_prime[i]) {
                return false;
            }
        }
    }
    true
}

/// Outcome of a containment search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Containment {
    Found(PatternWitness),
    Absent,
    /// The node budget ran out before the search space was exhausted;
    /// distinct from a verified absence.
    BudgetExhausted,
}

impl Containment {
    pub fn witness(&self) -> Option<&PatternWitness> {
        match self {
            Containment::Found(w) => Some(w),
            _ => None,
        }
    }
}

struct Searcher<'a> {
    g: &'a Graph,
    r: usize,
    partners_complete: bool,
    budget: u64,
    exhausted: bool,
}

impl<'a> Searcher<'a> {
    fn charge(&mut self) -> bool {
        if self.budget == 0 {
            self.exhausted = true;
            return false;
        }
        self.budget -= 1;
        true
    }

    /// Extends the ascending anchor clique; on completion runs the partner
    /// phase. Returns the first (lexicographically least) full assignment.
    fn place_anchor(&mut self, anchors: &mut Vec<usize>, cand: &VertexSet) -> Option<PatternWitness> {
        if anchors.len() == self.r {
            return self.partner_phase(anchors);
        }
        for v in cand.iter() {
            if !self.charge() {
                return None;
            }
            let mut next = cand.intersection(self.g.neighbors(v));
            next.retain_above(v);
            anchors.push(v);
            if let Some(found) = self.place_anchor(anchors, &next) {
                return Some(found);
            }
            anchors.pop();
            if self.exhausted {
                return None;
            }
        }
        None
    }

    fn partner_phase(&mut self, anchors: &[usize]) -> Option<PatternWitness> {
        let n = self.g.n();
        // base candidates for partner i: adjacent to every other anchor,
        // non-adjacent to anchor i, and distinct from anchor i (the only
        // anchor not already excluded by the non-adjacency constraint).
        let mut base: Vec<VertexSet> = Vec::with_capacity(self.r);
        for i in 0..self.r {
            let mut c = VertexSet::full(n);
            for (j, &a) in anchors.iter().enumerate() {
                if j == i {
                    c.subtract(self.g.neighbors(a));
                    c.remove(a);
                } else {
                    c.intersect_with(self.g.neighbors(a));
                }
            }
            if c.is_empty() {
                return None;
            }
            base.push(c);
        }
        let mut partners = Vec::with_capacity(self.r);
        self.place_partner(anchors, &base, &mut partners)
    }

    fn place_partner(
        &mut self,
        anchors: &[usize],
        base: &[VertexSet],
        partners: &mut Vec<usize>,
    ) -> Option<PatternWitness> {
        let i = partners.len();
        if i == self.r {
            let free_mask = free_mask_of(self.g, partners);
            return Some(PatternWitness {
                r: self.r,
                u: anchors.to_vec(),
                u_prime: partners.clone(),
                free_mask,
            });
        }
        let mut cand = base[i].clone();
        for &placed in partners.iter() {
            cand.remove(placed);
            if self.partners_complete {
                cand.intersect_with(self.g.neighbors(placed));
            }
        }
        for v in cand.iter() {
            if !self.charge() {
                return None;
            }
            partners.push(v);
            if let Some(found) = self.place_partner(anchors, base, partners) {
                return Some(found);
            }
            partners.pop();
            if self.exhausted {
                return None;
            }
        }
        None
    }
}

fn free_mask_of(g: &Graph, partners: &[usize]) -> u64 {
    let r = partners.len();
    let mut mask = 0u64;
    for i in 0..r {
        for j in i + 1..r {
            if g.has_edge(partners[i], partners[j]) {
                mask |= 1 << PatternSpec::free_pair_bit(r, i, j);
            }
        }
    }
    mask
}

fn run_search(g: &Graph, r: usize, partners_complete: bool, budget: u64) -> Result<Containment> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("pattern order r={r} < 2")));
    }
    if 2 * r > g.n() {
        return Ok(Containment::Absent); // too few vertices to host any member
    }
    let mut s = Searcher {
        g,
        r,
        partners_complete,
        budget,
        exhausted: false,
    };
    let mut anchors = Vec::with_capacity(r);
    match s.place_anchor(&mut anchors, &VertexSet::full(g.n())) {
        Some(w) => {
            debug_assert!(verify_witness(g, &w));
            Ok(Containment::Found(w))
        }
        None if s.exhausted => Ok(Containment::BudgetExhausted),
        None => Ok(Containment::Absent),
    }
}

/// Searches for any member of the order-`r` family (required edges present,
/// matching non-edges absent, partner pairs unconstrained). Returns the
/// lexicographically least witness under the role order `u_1..u_r,
/// u_1'..u_r'`; `Absent` is a verified freeness certificate.
pub fn contains_semi_induced(g: &Graph, r: usize) -> Result<Containment> {
    contains_semi_induced_with_budget(g, r, DEFAULT_NODE_BUDGET)
}

pub fn contains_semi_induced_with_budget(g: &Graph, r: usize, budget: u64) -> Result<Containment> {
    run_search(g, r, false, budget)
}

/// Searches for the 2-blow-up of the complete graph on `r` vertices as an
/// induced subgraph (all partner pairs present as well).
pub fn contains_induced_blowup(g: &Graph, r: usize) -> Result<Containment> {
    contains_induced_blowup_with_budget(g, r, DEFAULT_NODE_BUDGET)
}

pub fn contains_induced_blowup_with_budget(g: &Graph, r: usize, budget: u64) -> Result<Containment> {
    run_search(g, r, true, budget)
}

/// Constructive extraction: a set `S` of size `r` shattered by the maximal
/// cliques yields a pattern witness directly.
///
/// For each `i` some clique traces to `S` minus its `i`-th element; by
/// maximality that clique contains a vertex non-adjacent to the dropped
/// element, which serves as partner `i`. Partners must be pairwise distinct,
/// which single-clique choices do not guarantee, so candidates are pooled
/// across all cliques realizing each trace and a distinct-representative
/// search picks the lexicographically least selection. `S` itself must be a
/// clique: its pair edges follow from the traces when `r >= 3`, and from the
/// full trace (present whenever `S` is shattered) when `r = 2`.
pub fn witness_from_shattered(g: &Graph, mc: &CliqueList, s: &VertexSet) -> Result<PatternWitness> {
    let elems: Vec<usize> = s.iter().collect();
    let r = elems.len();
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "shattered-set extraction needs |S| >= 2, got {r}"
        )));
    }
    if r > 30 {
        return Err(Error::InvalidParameter(format!("|S|={r} exceeds guard 30")));
    }

    let full: u32 = ((1u64 << r) - 1) as u32;
    let mut saw_full = false;
    let mut pools: Vec<VertexSet> = vec![VertexSet::new(g.n()); r];
    for clique in &mc.cliques {
        let mut mask = 0u32;
        for (i, &v) in elems.iter().enumerate() {
            if clique.contains(v) {
                mask |= 1 << i;
            }
        }
        if mask == full {
            saw_full = true;
        }
        // trace S \ {elems[i]}: pool the clique's outside vertices that
        // miss elems[i]
        if mask.count_ones() as usize == r - 1 {
            let i = (!mask & full).trailing_zeros() as usize;
            let mut extra = clique.clone();
            extra.subtract(s);
            extra.subtract(g.neighbors(elems[i]));
            pools[i].union_with(&extra);
        }
    }

    for (i, pool) in pools.iter().enumerate() {
        if pool.is_empty() {
            return Err(Error::NotShattered(format!(
                "no maximal clique realizes the trace dropping element {} (or none offers a non-neighbor)",
                elems[i]
            )));
        }
    }
    if r == 2 && !saw_full {
        return Err(Error::NotShattered(
            "no maximal clique contains the whole pair, so its edge cannot be derived".into(),
        ));
    }
    for i in 0..r {
        for j in i + 1..r {
            if !g.has_edge(elems[i], elems[j]) {
                return Err(Error::NotShattered(format!(
                    "elements {} and {} are not adjacent",
                    elems[i], elems[j]
                )));
            }
        }
    }

    let mut partners = Vec::with_capacity(r);
    if !pick_distinct(&pools, &mut partners) {
        return Err(Error::ExtractionFailure(
            "partner pools admit no system of distinct representatives".into(),
        ));
    }
    let free_mask = free_mask_of(g, &partners);
    let w = PatternWitness {
        r,
        u: elems,
        u_prime: partners,
        free_mask,
    };
    if !verify_witness(g, &w) {
        return Err(Error::ExtractionFailure(
            "extracted assignment failed pairwise verification; the clique list is inconsistent with the graph".into(),
        ));
    }
    Ok(w)
}

/// Lexicographically least system of distinct representatives over the
/// pools, by straight backtracking (r is tiny).
fn pick_distinct(pools: &[VertexSet], chosen: &mut Vec<usize>) -> bool {
    let i = chosen.len();
    if i == pools.len() {
        return true;
    }
    for v in pools[i].iter() {
        if chosen.contains(&v) {
            continue;
        }
        chosen.push(v);
        if pick_distinct(pools, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

//! Set systems over a vertex ground set: traces, shattering certificates,
//! exact VC-dimension, and the growth-function bound.

use num_bigint::BigUint;
use serde_json::json;

use crate::bitset::VertexSet;
use crate::clique::CliqueList;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use crate::combo::sauer_shelah_bound;

/// Where a family came from; carried through for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemLabel {
    Neighborhood,
    MaximalCliques,
    Custom,
}

impl SystemLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            SystemLabel::Neighborhood => "neighborhood",
            SystemLabel::MaximalCliques => "maximal_cliques",
            SystemLabel::Custom => "custom",
        }
    }
}

/// A family of subsets of `0..ground_n`. Construction deduplicates while
/// preserving first-occurrence order, so member indices are deterministic.
#[derive(Debug, Clone)]
pub struct SetSystem {
    ground_n: usize,
    sets: Vec<VertexSet>,
    label: SystemLabel,
}

impl SetSystem {
    pub fn new(ground_n: usize, sets: Vec<VertexSet>, label: SystemLabel) -> SetSystem {
        let mut seen = std::collections::HashSet::new();
        let mut kept = Vec::with_capacity(sets.len());
        for s in sets {
            debug_assert_eq!(s.capacity(), ground_n);
            if seen.insert(s.clone()) {
                kept.push(s);
            }
        }
        SetSystem {
            ground_n,
            sets: kept,
            label,
        }
    }

    pub fn ground_n(&self) -> usize {
        self.ground_n
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn label(&self) -> SystemLabel {
        self.label
    }

    /// One line per member set: space-separated ascending indices.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for s in &self.sets {
            let verts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            out.push_str(&verts.join(" "));
            out.push('\n');
        }
        out
    }
}

/// The family of open neighborhoods `{N(v) : v}`, deduplicated.
pub fn neighborhood_system(g: &Graph) -> SetSystem {
    SetSystem::new(
        g.n(),
        (0..g.n()).map(|v| g.neighbors(v).clone()).collect(),
        SystemLabel::Neighborhood,
    )
}

/// The family of maximal cliques as a set system (member order follows the
/// canonical clique order).
pub fn maximal_clique_system_from(list: &CliqueList) -> SetSystem {
    SetSystem::new(
        list.source_n,
        list.cliques.clone(),
        SystemLabel::MaximalCliques,
    )
}

/// Convenience wrapper that enumerates maximal cliques first.
pub fn maximal_clique_system(g: &Graph) -> Result<SetSystem> {
    Ok(maximal_clique_system_from(&crate::clique::enumerate_maximal_cliques(g)?))
}

/// The trace `{F ∩ S : F}` as a system over ground set `0..|S|`, members
/// relabeled by rank within `S` and deduplicated.
pub fn trace(f: &SetSystem, s: &VertexSet) -> SetSystem {
    let positions: Vec<usize> = s.iter().collect();
    let k = positions.len();
    let mut projected = Vec::with_capacity(f.len());
    for member in f.sets() {
        let mut t = VertexSet::new(k);
        for (rank, &v) in positions.iter().enumerate() {
            if member.contains(v) {
                t.insert(rank);
            }
        }
        projected.push(t);
    }
    SetSystem::new(k, projected, SystemLabel::Custom)
}

/// Proof object for a shattered set: one realizing member index per subset
/// of the witness (indexed by bitmask over the witness's ascending order).
#[derive(Debug, Clone)]
pub struct ShatterCertificate {
    pub witness: VertexSet,
    pub realizers: Vec<usize>,
}

impl ShatterCertificate {
    /// Re-checks every entry against the family: realizer `F` of mask `A'`
    /// must satisfy `F ∩ A = A'`.
    pub fn verify(&self, f: &SetSystem) -> bool {
        let elems: Vec<usize> = self.witness.iter().collect();
        if self.realizers.len() != 1usize << elems.len() {
            return false;
        }
        self.realizers.iter().enumerate().all(|(mask, &idx)| {
            f.sets().get(idx).is_some_and(|member| {
                elems
                    .iter()
                    .enumerate()
                    .all(|(i, &v)| member.contains(v) == (mask >> i & 1 == 1))
            })
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (mask, &idx) in self.realizers.iter().enumerate() {
            map.insert(mask.to_string(), json!(idx));
        }
        json!({
            "witness": self.witness.to_vec(),
            "realizers": serde_json::Value::Object(map),
        })
    }
}

/// Tests whether `a` is shattered: every subset of `a` must appear as some
/// member's intersection with `a`. Returns the certificate when it is.
/// Guarded at |a| <= 30 since the realizer table has `2^|a|` entries.
pub fn is_shattered(f: &SetSystem, a: &VertexSet) -> Result<Option<ShatterCertificate>> {
    let elems: Vec<usize> = a.iter().collect();
    let k = elems.len();
    if k > 30 {
        return Err(Error::InvalidParameter(format!(
            "shatter check limited to 30 elements, got {k}"
        )));
    }
    let table = 1usize << k;
    let mut realizers: Vec<Option<usize>> = vec![None; table];
    let mut filled = 0usize;
    for (idx, member) in f.sets().iter().enumerate() {
        let mut mask = 0usize;
        for (i, &v) in elems.iter().enumerate() {
            if member.contains(v) {
                mask |= 1 << i;
            }
        }
        if realizers[mask].is_none() {
            realizers[mask] = Some(idx);
            filled += 1;
            if filled == table {
                break;
            }
        }
    }
    if filled < table {
        return Ok(None);
    }
    Ok(Some(ShatterCertificate {
        witness: a.clone(),
        realizers: realizers.into_iter().map(|r| r.expect("filled")).collect(),
    }))
}

/// Exact VC-dimension plus a witness of that size.
#[derive(Debug, Clone)]
pub struct VcReport {
    /// `-1` for the empty family, else the maximum shattered-set size.
    pub dim: i64,
    /// Lexicographically smallest shattered set of maximum size.
    pub witness: VertexSet,
}

impl VcReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({ "dim": self.dim, "witness": self.witness.to_vec() })
    }
}

/// Computes the VC-dimension by level-wise extension of shattered sets.
///
/// Shattering is hereditary, so every shattered s-set extends a shattered
/// (s-1)-set by a larger element; the search therefore visits levels in
/// lexicographic order and stops at the first empty one. Two prunes keep the
/// candidate space small: only elements that are in some member and out of
/// some member can appear in a shattered set, and a candidate must be
/// contained in at least one member (the full-subset realizer), which an
/// inverted element->members index answers with one intersection.
pub fn vc_dimension(f: &SetSystem) -> VcReport {
    if f.is_empty() {
        return VcReport {
            dim: -1,
            witness: VertexSet::new(f.ground_n()),
        };
    }
    let nsets = f.len();
    let mut member_index: Vec<VertexSet> = vec![VertexSet::new(nsets); f.ground_n()];
    for (idx, member) in f.sets().iter().enumerate() {
        for v in member.iter() {
            member_index[v].insert(idx);
        }
    }
    let useful: Vec<usize> = (0..f.ground_n())
        .filter(|&v| {
            let cnt = member_index[v].len();
            cnt > 0 && cnt < nsets
        })
        .collect();

    // (elements ascending, members containing all of them)
    let mut level: Vec<(Vec<usize>, VertexSet)> = vec![(Vec::new(), VertexSet::full(nsets))];
    let mut best = VcReport {
        dim: 0,
        witness: VertexSet::new(f.ground_n()),
    };
    loop {
        let mut next: Vec<(Vec<usize>, VertexSet)> = Vec::new();
        for (elems, support) in &level {
            let floor = elems.last().map_or(0, |&v| v + 1);
            for &x in useful.iter().filter(|&&x| x >= floor) {
                let sup = support.intersection(&member_index[x]);
                if sup.is_empty() {
                    continue;
                }
                let mut cand = elems.clone();
                cand.push(x);
                let a = VertexSet::from_iter(f.ground_n(), cand.iter().copied());
                if is_shattered(f, &a)
                    .expect("level sizes stay far below the shatter-check guard")
                    .is_some()
                {
                    next.push((cand, sup));
                }
            }
        }
        if next.is_empty() {
            return best;
        }
        best = VcReport {
            dim: level[0].0.len() as i64 + 1,
            witness: VertexSet::from_iter(f.ground_n(), next[0].0.iter().copied()),
        };
        level = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_basic, BasicKind};

    fn mc(g: &Graph) -> SetSystem {
        maximal_clique_system(g).unwrap()
    }

    #[test]
    fn neighborhoods_dedup() {
        let k3 = gen_basic(BasicKind::Complete, 3).unwrap();
        let ns = neighborhood_system(&k3);
        assert_eq!(ns.len(), 3);
        assert!(ns.sets().iter().all(|s| s.len() == 2));

        let i4 = gen_basic(BasicKind::Independent, 4).unwrap();
        assert_eq!(neighborhood_system(&i4).len(), 1); // single empty set

        let c4 = gen_basic(BasicKind::Cycle, 4).unwrap();
        assert_eq!(neighborhood_system(&c4).len(), 2); // opposite vertices agree
    }

    #[test]
    fn clique_systems() {
        let k5 = gen_basic(BasicKind::Complete, 5).unwrap();
        let s = mc(&k5);
        assert_eq!(s.len(), 1);
        assert_eq!(s.sets()[0].len(), 5);
        assert_eq!(s.label(), SystemLabel::MaximalCliques);

        let c5 = gen_basic(BasicKind::Cycle, 5).unwrap();
        assert_eq!(mc(&c5).len(), 5);
    }

    #[test]
    fn trace_examples() {
        let c5 = gen_basic(BasicKind::Cycle, 5).unwrap();
        let f = mc(&c5);
        let t = trace(&f, &VertexSet::from_iter(5, [0, 1]));
        assert_eq!(t.len(), 4);
        assert_eq!(t.ground_n(), 2);

        let p3 = gen_basic(BasicKind::Path, 3).unwrap();
        let t = trace(&mc(&p3), &VertexSet::from_iter(3, [0, 2]));
        assert_eq!(t.len(), 2);

        let t = trace(&f, &VertexSet::new(5));
        assert_eq!(t.len(), 1); // just the empty set
    }

    #[test]
    fn shatter_certificate_on_c5() {
        let c5 = gen_basic(BasicKind::Cycle, 5).unwrap();
        let f = mc(&c5);
        let a = VertexSet::from_iter(5, [0, 1]);
        let cert = is_shattered(&f, &a).unwrap().expect("edge pair shattered");
        assert!(cert.verify(&f));
        // canonical member order is {0,1},{0,4},{1,2},{2,3},{3,4}; the first
        // realizer per subset mask is then fixed.
        assert_eq!(cert.realizers, vec![3, 1, 2, 0]);
    }

    #[test]
    fn shatter_negative_and_empty() {
        let p3 = gen_basic(BasicKind::Path, 3).unwrap();
        let f = mc(&p3);
        let a = VertexSet::from_iter(3, [0, 2]);
        assert!(is_shattered(&f, &a).unwrap().is_none());

        // the empty set is shattered by any nonempty family
        let cert = is_shattered(&f, &VertexSet::new(3)).unwrap().unwrap();
        assert_eq!(cert.realizers, vec![0]);

        let empty = SetSystem::new(3, vec![], SystemLabel::Custom);
        assert!(is_shattered(&empty, &VertexSet::new(3)).unwrap().is_none());
    }

    #[test]
    fn shatter_guard() {
        let f = SetSystem::new(40, vec![VertexSet::new(40)], SystemLabel::Custom);
        let a = VertexSet::full(40);
        assert!(matches!(
            is_shattered(&f, &a),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn vc_dimension_fixed() {
        let k6 = gen_basic(BasicKind::Complete, 6).unwrap();
        let r = vc_dimension(&mc(&k6));
        assert_eq!(r.dim, 0);

        let c5 = gen_basic(BasicKind::Cycle, 5).unwrap();
        let r = vc_dimension(&mc(&c5));
        assert_eq!(r.dim, 2);
        assert_eq!(r.witness.to_vec(), vec![0, 1]); // lexicographically least

        let p3 = gen_basic(BasicKind::Path, 3).unwrap();
        assert_eq!(vc_dimension(&mc(&p3)).dim, 1);
    }

    #[test]
    fn vc_degenerate_families() {
        let empty = SetSystem::new(5, vec![], SystemLabel::Custom);
        assert_eq!(vc_dimension(&empty).dim, -1);

        let only_empty = SetSystem::new(5, vec![VertexSet::new(5)], SystemLabel::Custom);
        assert_eq!(vc_dimension(&only_empty).dim, 0);
    }

    #[test]
    fn gadget_neighborhoods_shatter_block() {
        for t in 1..=4 {
            let (g, a) = crate::graph::build_shatter_gadget(t, crate::graph::InnerPolicy::Empty)
                .unwrap();
            let ns = neighborhood_system(&g);
            assert!(is_shattered(&ns, &a).unwrap().is_some(), "t={t}");
            assert!(vc_dimension(&ns).dim >= t as i64, "t={t}");
        }
    }

    #[test]
    fn dedup_preserves_first_occurrence_order() {
        let sets = vec![
            VertexSet::from_iter(4, [1, 2]),
            VertexSet::from_iter(4, [0]),
            VertexSet::from_iter(4, [1, 2]),
        ];
        let f = SetSystem::new(4, sets, SystemLabel::Custom);
        assert_eq!(f.len(), 2);
        assert_eq!(f.sets()[0].to_vec(), vec![1, 2]);
        assert_eq!(f.to_lines(), "1 2\n0\n");
    }
}

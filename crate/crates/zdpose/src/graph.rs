//! Zero-divisor graphs Γ(P), their reduced graphs Γ_E(P), and the exact
//! graph invariants the checks need: distance, diameter, girth, clique
//! number, degrees, and shape classification.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poset::{ElementId, IdealSet, Poset, Subset};

/// Finite distance or infinity (disconnected pair / acyclic graph).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Distance::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{}", d),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// An equivalence class of zero-divisors sharing one annihilator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnnClass {
    /// Smallest member index.
    pub representative: ElementId,
    pub members: Subset,
    pub ann: IdealSet,
}

/// What a graph vertex stands for.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VertexTag {
    Element(ElementId),
    Class(AnnClass),
}

impl VertexTag {
    /// The poset elements this vertex represents.
    pub fn member_set(&self) -> Subset {
        match self {
            VertexTag::Element(x) => Subset::singleton(*x),
            VertexTag::Class(c) => c.members,
        }
    }
}

/// A simple undirected graph over tagged vertices. At most 64 vertices
/// (adjacency rows are bitmasks).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZdGraph {
    vertices: Vec<VertexTag>,
    adj: Vec<u64>,
}

/// Shape flags per the usual catalogue of special graphs.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct ShapeReport {
    pub is_complete: bool,
    pub is_star: bool,
    pub is_regular: bool,
    pub is_cycle: bool,
    /// Vertex partition with adjacency exactly across parts, when the graph
    /// is complete multipartite (parts sorted by least vertex).
    pub complete_multipartite: Option<Vec<Vec<usize>>>,
}

impl ZdGraph {
    fn new(vertices: Vec<VertexTag>, adj: Vec<u64>) -> ZdGraph {
        debug_assert_eq!(vertices.len(), adj.len());
        debug_assert!(vertices.len() <= 64);
        for (i, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row >> i & 1, 0, "no loops");
            let mut m = row;
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                m &= m - 1;
                debug_assert_eq!(adj[j] >> i & 1, 1, "adjacency must be symmetric");
            }
        }
        ZdGraph { vertices, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[VertexTag] {
        &self.vertices
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Adjacency row of `v` as a bitmask over vertex indices.
    pub fn neighborhood_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut m = self.adj[v];
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            out.push(j);
        }
        out
    }

    /// Edges as (u, v) with u < v, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            let mut m = self.adj[u] >> (u + 1) << (u + 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    fn bfs(&self, start: usize) -> Vec<Option<u32>> {
        let n = self.vertex_count();
        let mut dist = vec![None; n];
        dist[start] = Some(0);
        let mut frontier = vec![start];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                let mut m = self.adj[u];
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if dist[v].is_none() {
                        dist[v] = Some(d);
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Distance {
        match self.bfs(u)[v] {
            Some(d) => Distance::Finite(d),
            None => Distance::Infinite,
        }
    }

    pub fn all_distances(&self) -> Vec<Vec<Option<u32>>> {
        (0..self.vertex_count()).map(|v| self.bfs(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        n <= 1 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Maximum pairwise distance; requires at least two vertices.
    pub fn diameter(&self) -> Result<Distance> {
        let n = self.vertex_count();
        if n < 2 {
            return Err(Error::TooFewVertices);
        }
        let mut best = Distance::Finite(0);
        for u in 0..n {
            let dist = self.bfs(u);
            for v in 0..n {
                let d = match dist[v] {
                    Some(d) => Distance::Finite(d),
                    None => Distance::Infinite,
                };
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// Length of a shortest cycle, infinity when acyclic. BFS from every
    /// vertex; every non-tree edge closes a walk of length
    /// dist(u) + dist(v) + 1 that bounds the girth from above, and a BFS
    /// rooted on a shortest cycle attains it.
    pub fn girth(&self) -> Distance {
        let n = self.vertex_count();
        let edges = self.edges();
        let mut best: Option<u32> = None;
        for root in 0..n {
            let mut dist = vec![u32::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let mut m = self.adj[u];
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            for &(u, v) in &edges {
                if dist[u] == u32::MAX || dist[v] == u32::MAX {
                    continue;
                }
                if parent[u] == v || parent[v] == u {
                    continue;
                }
                let cand = dist[u] + dist[v] + 1;
                if best.map_or(true, |b| cand < b) {
                    best = Some(cand);
                }
            }
        }
        match best {
            Some(g) => Distance::Finite(g),
            None => Distance::Infinite,
        }
    }

    /// Exact maximum clique size: branch and bound with a greedy coloring
    /// upper bound over vertices in degeneracy order.
    pub fn clique_number(&self) -> usize {
        let n = self.vertex_count();
        if n == 0 {
            return 0;
        }
        // degeneracy order: repeatedly remove a minimum-degree vertex
        let mut remaining = crate::poset::full_mask(n);
        let mut order = Vec::with_capacity(n);
        while remaining != 0 {
            let mut pick = usize::MAX;
            let mut pick_deg = usize::MAX;
            let mut m = remaining;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let deg = (self.adj[v] & remaining).count_ones() as usize;
                if deg < pick_deg {
                    pick = v;
                    pick_deg = deg;
                }
            }
            order.push(pick);
            remaining &= !(1 << pick);
        }
        // relabel so searches expand dense cores first
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = n - 1 - i;
        }
        let mut adj = vec![0u64; n];
        for v in 0..n {
            let mut m = self.adj[v];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                adj[pos[v]] |= 1 << pos[w];
            }
        }
        let mut best = 0;
        expand_clique(&adj, crate::poset::full_mask(n), 0, &mut best);
        best
    }

    /// Shape flags plus the complete-multipartite partition when one exists
    /// (detected via complement components, then verifying independence
    /// within parts).
    pub fn classify_shape(&self) -> ShapeReport {
        let n = self.vertex_count();
        let degs: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let is_complete = n >= 1 && degs.iter().all(|&d| d == n - 1);
        let is_regular = n >= 1 && degs.iter().all(|&d| d == degs[0]);
        let is_star = n >= 2
            && (0..n).any(|c| {
                degs[c] == n - 1 && (0..n).all(|v| v == c || degs[v] == 1)
            });
        let is_cycle = n >= 3 && self.is_connected() && degs.iter().all(|&d| d == 2);

        let complete_multipartite = self.multipartite_parts();

        ShapeReport { is_complete, is_star, is_regular, is_cycle, complete_multipartite }
    }

    fn multipartite_parts(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.vertex_count();
        if n < 2 {
            return None;
        }
        let full = crate::poset::full_mask(n);
        // components of the complement graph
        let mut comp_of = vec![usize::MAX; n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if comp_of[s] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut stack = vec![s];
            comp_of[s] = id;
            let mut part = vec![];
            while let Some(u) = stack.pop() {
                part.push(u);
                let mut m = full & !self.adj[u] & !(1 << u);
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if comp_of[v] == usize::MAX {
                        comp_of[v] = id;
                        stack.push(v);
                    }
                }
            }
            part.sort();
            parts.push(part);
        }
        if parts.len() < 2 {
            return None;
        }
        // vertices within a part must be pairwise non-adjacent
        for part in &parts {
            for (i, &u) in part.iter().enumerate() {
                for &v in &part[i + 1..] {
                    if self.is_adjacent(u, v) {
                        return None;
                    }
                }
            }
        }
        Some(parts)
    }
}

fn expand_clique(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        if size > *best {
            *best = size;
        }
        return;
    }
    // greedy coloring of the candidate set: color class index bounds any
    // clique inside `cand`
    let mut colored: Vec<(usize, usize)> = Vec::new();
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v);
            avail &= !adj[v];
            uncolored &= !(1 << v);
            colored.push((v, color));
        }
    }
    let mut cand = cand;
    for &(v, c) in colored.iter().rev() {
        if size + c <= *best {
            return;
        }
        expand_clique(adj, cand & adj[v], size + 1, best);
        cand &= !(1 << v);
    }
}

/// Γ(P): vertices are the non-zero zero-divisors, edges join elements whose
/// lower cone is {0}. Connected with diameter at most 3 for every poset.
pub fn gamma(p: &Poset) -> Result<ZdGraph> {
    let zds = p.zero_divisors();
    if zds.is_empty() {
        return Err(Error::NoZeroDivisors);
    }
    let verts: Vec<ElementId> = zds.iter().collect();
    let index_of = |x: ElementId| verts.binary_search(&x).unwrap();
    let mut adj = vec![0u64; verts.len()];
    for (i, &x) in verts.iter().enumerate() {
        let ann = p.annihilator(x).members();
        for y in ann.intersect(zds).iter() {
            adj[i] |= 1 << index_of(y);
        }
    }
    let g = ZdGraph::new(verts.into_iter().map(VertexTag::Element).collect(), adj);
    debug_assert!(g.is_connected());
    Ok(g)
}

/// Partition of Z(P)^× by annihilator equality, sorted by representative.
pub fn ann_classes(p: &Poset) -> Result<Vec<AnnClass>> {
    let zds = p.zero_divisors();
    if zds.is_empty() {
        return Err(Error::NoZeroDivisors);
    }
    let mut by_ann: BTreeMap<IdealSet, Subset> = BTreeMap::new();
    for x in zds.iter() {
        let mut e = by_ann.entry(p.annihilator(x)).or_insert(Subset::EMPTY);
        e.insert(x);
    }
    let mut classes: Vec<AnnClass> = by_ann
        .into_iter()
        .map(|(ann, members)| AnnClass {
            representative: members.first().expect("class is non-empty"),
            members,
            ann,
        })
        .collect();
    classes.sort_by_key(|c| c.representative);
    Ok(classes)
}

/// Γ_E(P): vertices are the annihilator classes, adjacency decided on
/// representatives (well-defined because adjacency only depends on the
/// annihilator).
pub fn gamma_e(p: &Poset) -> Result<ZdGraph> {
    let classes = ann_classes(p)?;
    let k = classes.len();
    let mut adj = vec![0u64; k];
    for i in 0..k {
        for j in i + 1..k {
            let adjacent = classes[i].ann.contains(classes[j].representative);
            if adjacent {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            #[cfg(debug_assertions)]
            for u in classes[i].members.iter() {
                for v in classes[j].members.iter() {
                    debug_assert_eq!(
                        p.lower_cone(u, v).len() == 1,
                        adjacent,
                        "class adjacency must not depend on the representative"
                    );
                }
            }
        }
    }
    let g = ZdGraph::new(classes.into_iter().map(VertexTag::Class).collect(), adj);
    debug_assert!(g.is_connected());
    Ok(g)
}

/// Quotient of a graph by neighborhood equality. Vertices with identical
/// neighborhoods are never adjacent, so the merged groups are well-defined;
/// adjacency is inherited from any representatives. Applied to Γ(P) this
/// reproduces Γ_E(P) class by class and edge by edge.
pub fn reduce_graph(g: &ZdGraph) -> ZdGraph {
    let n = g.vertex_count();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut group_of = vec![usize::MAX; n];
    let mut seen: BTreeMap<u64, usize> = BTreeMap::new();
    for v in 0..n {
        match seen.get(&g.neighborhood_mask(v)) {
            Some(&gi) => {
                groups[gi].push(v);
                group_of[v] = gi;
            }
            None => {
                seen.insert(g.neighborhood_mask(v), groups.len());
                group_of[v] = groups.len();
                groups.push(vec![v]);
            }
        }
    }
    let tags: Vec<VertexTag> = groups
        .iter()
        .map(|grp| {
            if grp.len() == 1 {
                g.vertices[grp[0]].clone()
            } else {
                let members: Subset = grp
                    .iter()
                    .flat_map(|&v| g.vertices[v].member_set().iter())
                    .collect();
                let representative = members.first().expect("group is non-empty");
                let ann = match &g.vertices[grp[0]] {
                    // for element graphs the common annihilator is exactly
                    // the neighborhood plus the least element
                    VertexTag::Element(_) => {
                        let mut bits = Subset::EMPTY;
                        bits.insert(ElementId(0));
                        let elems: Subset = g
                            .neighborhood(grp[0])
                            .iter()
                            .flat_map(|&w| g.vertices[w].member_set().iter())
                            .collect();
                        IdealSet::from_subset_unchecked(bits.union(elems))
                    }
                    VertexTag::Class(c) => c.ann,
                };
                VertexTag::Class(AnnClass { representative, members, ann })
            }
        })
        .collect();
    let k = groups.len();
    let mut adj = vec![0u64; k];
    for i in 0..k {
        for j in i + 1..k {
            if g.is_adjacent(groups[i][0], groups[j][0]) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    ZdGraph::new(tags, adj)
}

/// Display label of a vertex: the element label, or `[repr]{members}` for a
/// class vertex.
pub fn vertex_label(p: &Poset, tag: &VertexTag) -> String {
    match tag {
        VertexTag::Element(x) => p.label(*x).to_string(),
        VertexTag::Class(c) => format!(
            "[{}]{{{}}}",
            p.label(c.representative),
            p.subset_labels(c.members).join(",")
        ),
    }
}

/// Deterministic DOT rendering: vertices in index order, edges lexicographic.
pub fn to_dot(p: &Poset, g: &ZdGraph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", name);
    for (i, tag) in g.vertices().iter().enumerate() {
        out.push_str(&format!(
            "  v{} [label=\"{}\"];\n",
            i,
            vertex_label(p, tag).replace('"', "\\\"")
        ));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  v{} -- v{};\n", u, v));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named_example;

    fn p0(k: usize) -> Poset {
        named_example("p0_trunc", Some(k)).unwrap()
    }

    #[test]
    fn gamma_of_antichain_is_complete() {
        let p = named_example("antichain", Some(3)).unwrap();
        let g = gamma(&p).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.classify_shape().is_complete);
    }

    #[test]
    fn gamma_of_p0_truncation_is_a_star() {
        let p = p0(3);
        let g = gamma(&p).unwrap();
        assert_eq!(g.vertex_count(), 4);
        let shape = g.classify_shape();
        assert!(shape.is_star);
        assert!(!shape.is_complete);
        // centered at {1}
        let center = p.find("{1}").unwrap();
        let ci = g
            .vertices()
            .iter()
            .position(|t| t.member_set() == Subset::singleton(center))
            .unwrap();
        assert_eq!(g.degree(ci), 3);
        assert_eq!(g.girth(), Distance::Infinite);
    }

    #[test]
    fn gamma_requires_zero_divisors() {
        let p = Poset::build(
            vec!["0".into(), "a".into(), "b".into()],
            &[("0".to_string(), "a".to_string()), ("a".to_string(), "b".to_string())],
        )
        .unwrap();
        assert_eq!(gamma(&p), Err(Error::NoZeroDivisors));
        assert_eq!(gamma_e(&p), Err(Error::NoZeroDivisors));
    }

    #[test]
    fn classes_of_p0_truncation() {
        let p = p0(3);
        let classes = ann_classes(&p).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(p.label(classes[0].representative), "{1}");
        assert_eq!(classes[0].members.len(), 1);
        assert_eq!(p.subset_labels(classes[1].members), vec!["{2}", "{2,3}", "{2,4}"]);
        for c in &classes {
            assert!(c.members.contains(c.representative));
            for m in c.members.iter() {
                assert_eq!(p.annihilator(m), c.ann);
            }
        }
    }

    #[test]
    fn classes_of_antichain_are_singletons() {
        let p = named_example("antichain", Some(4)).unwrap();
        let classes = ann_classes(&p).unwrap();
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|c| c.members.len() == 1));
    }

    #[test]
    fn classes_of_degree_counterexample_are_ten_singletons() {
        let p = named_example("deg_counterexample", None).unwrap();
        let classes = ann_classes(&p).unwrap();
        assert_eq!(classes.len(), 10);
        assert!(classes.iter().all(|c| c.members.len() == 1));
    }

    #[test]
    fn gamma_e_of_p0_truncation_is_k2() {
        let p = p0(3);
        let g = gamma_e(&p).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.girth(), Distance::Infinite);
    }

    #[test]
    fn gamma_e_of_powerset_matches_gamma() {
        let p = named_example("powerset", Some(3)).unwrap();
        let g = gamma(&p).unwrap();
        let ge = gamma_e(&p).unwrap();
        assert_eq!(ge.vertex_count(), 6);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), ge.edge_count());
    }

    #[test]
    fn distances_in_powerset_gamma() {
        let p = named_example("powerset", Some(3)).unwrap();
        let g = gamma(&p).unwrap();
        let vi = |l: &str| {
            let x = p.find(l).unwrap();
            g.vertices()
                .iter()
                .position(|t| t.member_set() == Subset::singleton(x))
                .unwrap()
        };
        assert_eq!(g.distance(vi("{1,2}"), vi("{1,2}")), Distance::Finite(0));
        assert_eq!(g.distance(vi("{1,2}"), vi("{1,3}")), Distance::Finite(3));
        assert_eq!(g.diameter().unwrap(), Distance::Finite(3));
        assert_eq!(gamma_e(&p).unwrap().diameter().unwrap(), Distance::Finite(3));
    }

    #[test]
    fn diameter_requires_two_vertices() {
        let g = ZdGraph::new(vec![VertexTag::Element(ElementId(1))], vec![0]);
        assert_eq!(g.diameter(), Err(Error::TooFewVertices));
    }

    #[test]
    fn girth_examples() {
        let k3 = gamma(&named_example("antichain", Some(3)).unwrap()).unwrap();
        assert_eq!(k3.girth(), Distance::Finite(3));

        let star = gamma(&p0(3)).unwrap();
        assert_eq!(star.girth(), Distance::Infinite);

        let c4 = gamma(&named_example("bipartite_example", None).unwrap()).unwrap();
        assert_eq!(c4.vertex_count(), 4);
        assert_eq!(c4.girth(), Distance::Finite(4));
        let shape = c4.classify_shape();
        assert!(shape.is_cycle);
        let parts = shape.complete_multipartite.unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.len() == 2));
    }

    #[test]
    fn clique_numbers() {
        for n in 2..=6 {
            let g = gamma(&named_example("antichain", Some(n)).unwrap()).unwrap();
            assert_eq!(g.clique_number(), n);
        }
        let g = gamma(&named_example("deg_counterexample", None).unwrap()).unwrap();
        assert_eq!(g.clique_number(), 6);
        let g = gamma(&named_example("powerset", Some(3)).unwrap()).unwrap();
        assert_eq!(g.clique_number(), 3);
    }

    #[test]
    fn degrees_in_degree_counterexample() {
        let p = named_example("deg_counterexample", None).unwrap();
        let ge = gamma_e(&p).unwrap();
        let deg_of = |l: &str| {
            let x = p.find(l).unwrap();
            let i = ge
                .vertices()
                .iter()
                .position(|t| t.member_set().contains(x))
                .unwrap();
            ge.degree(i)
        };
        assert_eq!(deg_of("{3}"), 6);
        assert_eq!(deg_of("{1,2}"), 7);
        // K_n check: every antichain degree is n-1
        let kn = gamma(&named_example("antichain", Some(5)).unwrap()).unwrap();
        assert!((0..5).all(|v| kn.degree(v) == 4));
        // end vertex of the star
        let star = gamma(&p0(3)).unwrap();
        assert_eq!(star.degree(1), 1);
    }

    #[test]
    fn shape_of_k3_and_star() {
        let k3 = gamma(&named_example("antichain", Some(3)).unwrap()).unwrap();
        let s = k3.classify_shape();
        assert!(s.is_complete && s.is_cycle && s.is_regular);
        assert_eq!(s.complete_multipartite.unwrap().len(), 3);

        let star = gamma(&p0(3)).unwrap();
        let s = star.classify_shape();
        assert!(s.is_star && !s.is_complete && !s.is_regular && !s.is_cycle);
        let mut sizes: Vec<usize> =
            s.complete_multipartite.unwrap().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3]);
    }

    #[test]
    fn shape_of_powerset_gamma_e_is_plain() {
        let p = named_example("powerset", Some(3)).unwrap();
        let s = gamma_e(&p).unwrap().classify_shape();
        assert!(!s.is_complete && !s.is_star && !s.is_regular && !s.is_cycle);
        assert!(s.complete_multipartite.is_none());
    }

    #[test]
    fn k2_counts_as_a_star() {
        let g = gamma_e(&p0(2)).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.classify_shape().is_star);
    }

    #[test]
    fn reduce_gamma_matches_gamma_e() {
        for p in [
            p0(3),
            named_example("powerset", Some(3)).unwrap(),
            named_example("antichain", Some(4)).unwrap(),
            named_example("deg_counterexample", None).unwrap(),
            named_example("bipartite_example", None).unwrap(),
        ] {
            let r = reduce_graph(&gamma(&p).unwrap());
            let ge = gamma_e(&p).unwrap();
            let rm: Vec<Subset> = r.vertices().iter().map(VertexTag::member_set).collect();
            let gm: Vec<Subset> = ge.vertices().iter().map(VertexTag::member_set).collect();
            assert_eq!(rm, gm);
            assert_eq!(r.edges(), ge.edges());
        }
    }

    #[test]
    fn reduce_of_complete_graph_is_identity() {
        let g = gamma(&named_example("antichain", Some(4)).unwrap()).unwrap();
        let r = reduce_graph(&g);
        assert_eq!(r.vertex_count(), g.vertex_count());
        assert_eq!(r.edges(), g.edges());
    }

    #[test]
    fn reduce_of_gamma_e_merges_nothing() {
        for p in [p0(4), named_example("powerset", Some(3)).unwrap()] {
            let ge = gamma_e(&p).unwrap();
            assert_eq!(reduce_graph(&ge).vertex_count(), ge.vertex_count());
        }
    }

    #[test]
    fn dot_output_is_deterministic_and_labeled() {
        let p = p0(3);
        let ge = gamma_e(&p).unwrap();
        let dot = to_dot(&p, &ge, "gammaE");
        assert!(dot.starts_with("graph gammaE {"));
        assert!(dot.contains("v0 [label=\"{1}\"];"));
        assert!(dot.contains("v1 [label=\"[{2}]{{2},{2,3},{2,4}}\"];"));
        assert!(dot.contains("v0 -- v1;"));
        assert_eq!(dot, to_dot(&p, &gamma_e(&p).unwrap(), "gammaE"));
    }
}

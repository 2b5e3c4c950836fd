//! Finite simple graphs on the vertex set `{1, .., n}` and the structural
//! predicates the polytope deciders quantify over.
//!
//! Vertices are 1-based throughout; adjacency is kept as one `u64` bitmask per
//! vertex, which caps graphs at [`MAX_VERTICES`] vertices. Everything here is
//! immutable after construction.

use crate::error::{Error, Result};
use std::fmt;

/// Largest supported vertex count (bit 0 of each mask is unused).
pub const MAX_VERTICES: usize = 62;

/// A subset of the vertex set `{1, .., n}`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    bits: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    pub fn from_bits(bits: u64) -> Self {
        VertexSet { bits }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet { bits: 1u64 << v }
    }

    /// Full vertex set `{1, .., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet {
            bits: ((1u128 << (n + 1)) - 2) as u64,
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.bits |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.bits &= !(1u64 << v);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn union(&self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & !other.bits,
        }
    }

    pub fn is_disjoint(&self, other: VertexSet) -> bool {
        self.bits & other.bits == 0
    }

    pub fn is_subset_of(&self, other: VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..64).filter(move |v| bits >> v & 1 == 1)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn smallest(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite simple graph on `{1, .., n}`: no loops, no multiple edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted list of edges `(i, j)` with `i < j`.
    edges: Vec<(usize, usize)>,
    /// `adj[v]` is the neighbor bitmask of `v`; slot 0 unused.
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "vertex count {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a < 1 || a > n || b < 1 || b > n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) has an endpoint outside 1..={n}"
                )));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            let d = list.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
            return Err(Error::InvalidGraph(format!("duplicate edge {d:?}")));
        }
        let mut adj = vec![0u64; n + 1];
        for &(a, b) in &list {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    /// Cycle `1-2-..-n-1`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::new(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)]))
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(
            n,
            (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j))),
        )
    }

    /// Complete bipartite graph with sides `{1..a}` and `{a+1..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidGraph(
                "complete bipartite graph needs both sides nonempty".into(),
            ));
        }
        Graph::new(
            a + b,
            (1..=a).flat_map(move |i| (a + 1..=a + b).map(move |j| (i, j))),
        )
    }

    /// Path `1-2-..-n`.
    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|i| (i, i + 1)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(i, j)` pairs with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset_of(self.vertex_set()) {
            Ok(())
        } else {
            Err(Error::InvalidGraph(format!(
                "vertex set {s:?} not contained in 1..={}",
                self.n
            )))
        }
    }

    /// True iff no two distinct members of `s` are adjacent.
    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    /// True iff all pairs of distinct members of `s` are adjacent.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.bits() & !self.adj[v] == 1 << v)
    }

    /// All stable sets, the empty set included, in ascending bitmask order.
    pub fn stable_sets(&self) -> StableSets<'_> {
        StableSets {
            graph: self,
            next_mask: 0,
            end: 1u64 << (self.n + 1),
        }
    }

    /// Union of the neighbor sets of the members of `s`.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut bits = 0u64;
        for v in s.iter() {
            bits |= self.adj[v];
        }
        VertexSet::from_bits(bits)
    }

    /// Connectivity of the subgraph induced on `support`, isolated members
    /// included. The empty set counts as connected.
    pub fn is_connected_within(&self, support: VertexSet) -> bool {
        let Some(start) = support.smallest() else {
            return true;
        };
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & support.bits() & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == support.bits()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_set())
    }

    /// Connected and still connected after deleting any single vertex. For
    /// n <= 2 this is defined as plain connectivity.
    pub fn is_two_connected(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        if self.n <= 2 {
            return true;
        }
        let full = self.vertex_set();
        (1..=self.n).all(|v| {
            let mut rest = full;
            rest.remove(v);
            self.is_connected_within(rest)
        })
    }

    /// Connected components of the subgraph induced on `support`.
    pub fn components_within(&self, support: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut todo = support.bits();
        while todo != 0 {
            let start = todo.trailing_zeros() as usize;
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v] & todo & !seen;
                }
                seen |= next;
                frontier = next;
            }
            out.push(VertexSet::from_bits(seen));
            todo &= !seen;
        }
        out
    }

    /// Two-coloring classes of a connected bipartite graph; `None` if an odd
    /// cycle exists. The first class contains vertex 1.
    pub fn bipartition(&self) -> Result<Option<(VertexSet, VertexSet)>> {
        if !self.is_connected() {
            return Err(Error::Disconnected {
                operation: "bipartition",
            });
        }
        let mut color = vec![u8::MAX; self.n + 1];
        color[1] = 0;
        let mut queue = vec![1usize];
        while let Some(v) = queue.pop() {
            for u in self.neighbors(v).iter() {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push(u);
                } else if color[u] == color[v] {
                    return Ok(None);
                }
            }
        }
        let side0 = (1..=self.n).filter(|&v| color[v] == 0).collect();
        let side1 = (1..=self.n).filter(|&v| color[v] == 1).collect();
        Ok(Some((side0, side1)))
    }

    /// True iff the subgraph induced on `support` contains an odd cycle.
    pub fn has_odd_cycle_within(&self, support: VertexSet) -> bool {
        // A graph has an odd cycle iff some component is not 2-colorable.
        let mut color = vec![u8::MAX; self.n + 1];
        for start in support.iter() {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for u in (self.neighbors(v).intersection(support)).iter() {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push(u);
                    } else if color[u] == color[v] {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// The bipartite graph induced by a nonempty stable set: vertex support
    /// `t ∪ N(t)` and exactly the edges of `self` with one endpoint in `t`
    /// and the other in `N(t)`. Labels are preserved.
    pub fn induced_bipartite(&self, t: VertexSet) -> Result<InducedBipartite> {
        self.check_vertex_set(t)?;
        if t.is_empty() || !self.is_stable(t) {
            return Err(Error::NotStable(t.to_vec()));
        }
        let nbh = self.neighborhood(t);
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| {
                (t.contains(a) && nbh.contains(b)) || (t.contains(b) && nbh.contains(a))
            })
            .collect();
        let graph = Graph::new(self.n, edges)?;
        Ok(InducedBipartite {
            graph,
            support: t.union(nbh),
        })
    }
}

/// Result of [`Graph::induced_bipartite`]: the crossing-edge subgraph together
/// with its vertex support, so connectivity is judged on the support only.
#[derive(Clone, Debug)]
pub struct InducedBipartite {
    pub graph: Graph,
    pub support: VertexSet,
}

impl InducedBipartite {
    pub fn is_connected(&self) -> bool {
        self.graph.is_connected_within(self.support)
    }
}

/// Iterator over all stable sets of a graph in ascending bitmask order.
pub struct StableSets<'a> {
    graph: &'a Graph,
    next_mask: u64,
    end: u64,
}

impl Iterator for StableSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 2; // odd bit 0 is never used
            let set = VertexSet::from_bits(mask);
            if self.graph.is_stable(set) {
                return Some(set);
            }
        }
        None
    }
}

/// A set of pairwise-disjoint edges of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates disjointness and membership in `g`.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        list.sort_unstable();
        let mut covered = VertexSet::EMPTY;
        for &(a, b) in &list {
            if !g.has_edge(a, b) {
                return Err(Error::InvalidGraph(format!(
                    "({a},{b}) is not an edge of the host graph"
                )));
            }
            if covered.contains(a) || covered.contains(b) {
                return Err(Error::InvalidGraph(format!(
                    "matching edges overlap at ({a},{b})"
                )));
            }
            covered.insert(a);
            covered.insert(b);
        }
        Ok(Matching { edges: list })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.edges
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .collect()
    }

    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        self.covered() == g.vertex_set()
    }
}

/// Some perfect matching if one exists, searched by backtracking on the
/// lowest-index uncovered vertex with neighbors tried in ascending order.
pub fn perfect_matching(g: &Graph) -> Option<Matching> {
    if g.vertex_count() % 2 != 0 {
        return None;
    }
    fn go(g: &Graph, covered: VertexSet, picked: &mut Vec<(usize, usize)>) -> bool {
        let uncovered = g.vertex_set().difference(covered);
        let Some(v) = uncovered.smallest() else {
            return true;
        };
        for u in g.neighbors(v).intersection(uncovered).iter() {
            let mut c = covered;
            c.insert(v);
            c.insert(u);
            picked.push((v, u));
            if go(g, c, picked) {
                return true;
            }
            picked.pop();
        }
        false
    }
    let mut picked = Vec::new();
    if go(g, VertexSet::EMPTY, &mut picked) {
        Some(Matching::new(g, picked).expect("search yields a valid matching"))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(1, 2), (2, 1)]).is_err());
        assert!(Graph::new(3, [(1, 4)]).is_err());
        assert!(Graph::new(3, [(0, 1)]).is_err());
    }

    #[test]
    fn stable_sets_of_a_four_cycle() {
        let g = Graph::cycle(4).unwrap();
        let sets: Vec<VertexSet> = g.stable_sets().collect();
        assert_eq!(sets.len(), 7);
        assert!(sets.contains(&VertexSet::from_iter([1, 3])));
        assert!(sets.contains(&VertexSet::from_iter([2, 4])));
        assert!(sets.contains(&VertexSet::EMPTY));
        assert!(!g.is_stable(VertexSet::from_iter([1, 2])));
    }

    #[test]
    fn triangle_pair_is_not_stable() {
        let g = Graph::complete(3).unwrap();
        assert!(!g.is_stable(VertexSet::from_iter([1, 2])));
        assert!(g.is_stable(VertexSet::EMPTY));
        assert!(g.is_stable(VertexSet::singleton(2)));
    }

    #[test]
    fn neighborhoods() {
        let g = Graph::path(3).unwrap();
        assert_eq!(
            g.neighborhood(VertexSet::singleton(2)),
            VertexSet::from_iter([1, 3])
        );
        assert_eq!(g.neighborhood(VertexSet::EMPTY), VertexSet::EMPTY);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(
            c6.neighborhood(VertexSet::from_iter([1, 3])),
            VertexSet::from_iter([2, 4, 6])
        );
    }

    #[test]
    fn stable_set_and_neighborhood_are_disjoint() {
        for g in [
            Graph::cycle(6).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::path(5).unwrap(),
        ] {
            for t in g.stable_sets() {
                assert!(t.is_disjoint(g.neighborhood(t)));
            }
        }
    }

    #[test]
    fn induced_bipartite_examples() {
        let g = Graph::path(3).unwrap();
        let ib = g.induced_bipartite(VertexSet::from_iter([1, 3])).unwrap();
        assert_eq!(ib.graph.edges(), &[(1, 2), (2, 3)]);
        assert!(ib.is_connected());

        let k4 = Graph::complete(4).unwrap();
        let star = k4.induced_bipartite(VertexSet::singleton(1)).unwrap();
        assert_eq!(star.graph.edge_count(), 3);
        assert!(star.is_connected());

        let two = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        let ib = two.induced_bipartite(VertexSet::from_iter([1, 3])).unwrap();
        assert_eq!(ib.graph.edges(), &[(1, 2), (3, 4)]);
        assert!(!ib.is_connected());

        assert!(g.induced_bipartite(VertexSet::EMPTY).is_err());
        assert!(g.induced_bipartite(VertexSet::from_iter([1, 2])).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(4).unwrap().is_connected());
        assert!(Graph::cycle(4).unwrap().is_two_connected());
        assert!(!Graph::path(3).unwrap().is_two_connected());
        let shared = Graph::new(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(shared.is_connected());
        assert!(!shared.is_two_connected());
        assert!(Graph::new(1, []).unwrap().is_connected());
        assert!(Graph::new(2, [(1, 2)]).unwrap().is_two_connected());
    }

    #[test]
    fn bipartition_classes() {
        let c6 = Graph::cycle(6).unwrap();
        let (a, b) = c6.bipartition().unwrap().unwrap();
        assert_eq!(a, VertexSet::from_iter([1, 3, 5]));
        assert_eq!(b, VertexSet::from_iter([2, 4, 6]));
        assert!(Graph::cycle(3).unwrap().bipartition().unwrap().is_none());
        let p4 = Graph::path(4).unwrap();
        let (a, b) = p4.bipartition().unwrap().unwrap();
        assert_eq!(a, VertexSet::from_iter([1, 3]));
        assert_eq!(b, VertexSet::from_iter([2, 4]));
        let disc = Graph::new(4, [(1, 2)]).unwrap();
        assert!(disc.bipartition().is_err());
    }

    #[test]
    fn perfect_matchings() {
        let c4 = Graph::cycle(4).unwrap();
        let m = perfect_matching(&c4).unwrap();
        assert_eq!(m.edges(), &[(1, 2), (3, 4)]);
        assert!(m.is_perfect_for(&c4));
        assert!(perfect_matching(&Graph::path(3).unwrap()).is_none());
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(
            perfect_matching(&c6).unwrap().edges(),
            &[(1, 2), (3, 4), (5, 6)]
        );
    }

    #[test]
    fn matching_validation() {
        let g = Graph::cycle(4).unwrap();
        assert!(Matching::new(&g, [(1, 3)]).is_err());
        assert!(Matching::new(&g, [(1, 2), (2, 3)]).is_err());
        let m = Matching::new(&g, [(3, 4), (1, 2)]).unwrap();
        assert_eq!(m.edges(), &[(1, 2), (3, 4)]);
    }

    #[test]
    fn perfect_matching_absence_matches_exhaustive_search() {
        // Exhaustive oracle: try all subsets of the edge list.
        fn exists_by_subsets(g: &Graph) -> bool {
            let m = g.edge_count();
            (0u32..1 << m).any(|mask| {
                let mut covered = VertexSet::EMPTY;
                for (k, &(a, b)) in g.edges().iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        if covered.contains(a) || covered.contains(b) {
                            return false;
                        }
                        covered.insert(a);
                        covered.insert(b);
                    }
                }
                covered == g.vertex_set()
            })
        }
        for n in 2..=5 {
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                .collect();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, edges).unwrap();
                assert_eq!(perfect_matching(&g).is_some(), exists_by_subsets(&g));
            }
        }
    }
}

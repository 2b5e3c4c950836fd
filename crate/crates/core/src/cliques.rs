//! Cliques, proper colorings, and the definition-level perfection check.
//!
//! All searches branch on the lowest-index undecided vertex and try choices in
//! ascending order, so certificates are reproducible across runs.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default vertex bound for [`is_perfect`]; the check walks every induced
/// subgraph, so it is gated.
pub const PERFECTION_BOUND: usize = 12;

/// All inclusion-maximal cliques of the subgraph induced on `within`, sorted
/// by their member lists.
pub fn maximal_cliques_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut r = VertexSet::EMPTY;
    bron_kerbosch(g, &mut r, within, VertexSet::EMPTY, &mut out);
    out.sort_by_key(|s| s.to_vec());
    out
}

fn bron_kerbosch(g: &Graph, r: &mut VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() && x.is_empty() {
        out.push(*r);
        return;
    }
    let mut p = p;
    let mut x = x;
    while let Some(v) = p.smallest() {
        let nv = g.neighbors(v);
        r.insert(v);
        bron_kerbosch(g, r, p.intersection(nv), x.intersection(nv), out);
        r.remove(v);
        p.remove(v);
        x.insert(v);
    }
}

/// All inclusion-maximal cliques, each listed once. Isolated vertices appear
/// as singleton cliques.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    maximal_cliques_within(g, g.vertex_set())
}

/// Largest clique cardinality in the subgraph induced on `within` (0 when
/// `within` is empty).
pub fn clique_number_within(g: &Graph, within: VertexSet) -> usize {
    maximal_cliques_within(g, within)
        .iter()
        .map(VertexSet::len)
        .max()
        .unwrap_or(0)
}

pub fn clique_number(g: &Graph) -> usize {
    clique_number_within(g, g.vertex_set())
}

/// A proper coloring of the subgraph induced on `within` using colors
/// `1..=k`, as a map indexed by vertex (0 on vertices outside `within`), or
/// `None` if no such coloring exists.
pub fn proper_coloring_within(g: &Graph, within: VertexSet, k: usize) -> Option<Vec<usize>> {
    let mut colors = vec![0usize; g.vertex_count() + 1];
    fn go(g: &Graph, within: VertexSet, k: usize, colors: &mut Vec<usize>, rest: VertexSet) -> bool {
        let Some(v) = rest.smallest() else {
            return true;
        };
        let mut remaining = rest;
        remaining.remove(v);
        for c in 1..=k {
            if g.neighbors(v)
                .intersection(within)
                .iter()
                .all(|u| colors[u] != c)
            {
                colors[v] = c;
                if go(g, within, k, colors, remaining) {
                    return true;
                }
                colors[v] = 0;
            }
        }
        false
    }
    if go(g, within, k, &mut colors, within) {
        Some(colors)
    } else {
        None
    }
}

pub fn proper_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    proper_coloring_within(g, g.vertex_set(), k)
}

/// Smallest number of colors of a proper coloring of the subgraph induced on
/// `within` (0 when empty).
pub fn chromatic_number_within(g: &Graph, within: VertexSet) -> usize {
    if within.is_empty() {
        return 0;
    }
    (1..=within.len())
        .find(|&k| proper_coloring_within(g, within, k).is_some())
        .expect("|within| colors always suffice")
}

pub fn chromatic_number(g: &Graph) -> usize {
    chromatic_number_within(g, g.vertex_set())
}

/// Perfection by definition: chromatic number equals clique number on every
/// nonempty induced subgraph. Refuses graphs larger than `bound` vertices.
pub fn is_perfect_bounded(g: &Graph, bound: usize) -> Result<bool> {
    let n = g.vertex_count();
    if n > bound {
        return Err(Error::PerfectionBound { n, bound });
    }
    for mask in (2..1u64 << (n + 1)).step_by(2) {
        let within = VertexSet::from_bits(mask);
        if chromatic_number_within(g, within) != clique_number_within(g, within) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`is_perfect_bounded`] at the default bound of 12 vertices.
pub fn is_perfect(g: &Graph) -> Result<bool> {
    is_perfect_bounded(g, PERFECTION_BOUND)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximal_cliques_examples() {
        let g = Graph::new(4, [(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let cliques = maximal_cliques(&g);
        assert_eq!(
            cliques,
            vec![
                VertexSet::from_iter([1, 2, 3]),
                VertexSet::from_iter([3, 4])
            ]
        );

        let edgeless = Graph::new(3, []).unwrap();
        assert_eq!(
            maximal_cliques(&edgeless),
            vec![
                VertexSet::singleton(1),
                VertexSet::singleton(2),
                VertexSet::singleton(3)
            ]
        );

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(maximal_cliques(&c5).len(), 5);
        assert_eq!(clique_number(&c5), 2);
    }

    #[test]
    fn chromatic_numbers() {
        for q in 1..=5 {
            assert_eq!(chromatic_number(&Graph::complete(q).unwrap()), q);
        }
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&Graph::new(3, []).unwrap()), 1);
    }

    #[test]
    fn coloring_is_deterministic_and_proper() {
        let g = Graph::cycle(6).unwrap();
        let coloring = proper_coloring(&g, 2).unwrap();
        assert_eq!(coloring[1..], [1, 2, 1, 2, 1, 2]);
        assert!(proper_coloring(&Graph::cycle(5).unwrap(), 2).is_none());
    }

    #[test]
    fn perfection_examples() {
        assert!(!is_perfect(&Graph::cycle(5).unwrap()).unwrap());
        assert!(is_perfect(&Graph::cycle(4).unwrap()).unwrap());
        assert!(is_perfect(&Graph::cycle(6).unwrap()).unwrap());
        assert!(!is_perfect(&Graph::cycle(7).unwrap()).unwrap());
        let chain = crate::poset::Poset::chain(3).unwrap().comparability_graph();
        assert!(is_perfect(&chain).unwrap());
        let big = Graph::cycle(13).unwrap();
        assert!(matches!(
            is_perfect(&big),
            Err(Error::PerfectionBound { n: 13, bound: 12 })
        ));
        assert!(!is_perfect_bounded(&big, 13).unwrap());
    }

    #[test]
    fn perfect_graphs_have_equal_invariants() {
        for g in [
            Graph::cycle(4).unwrap(),
            Graph::complete(5).unwrap(),
            Graph::complete_bipartite(2, 3).unwrap(),
        ] {
            assert!(is_perfect(&g).unwrap());
            assert_eq!(chromatic_number(&g), clique_number(&g));
        }
    }
}

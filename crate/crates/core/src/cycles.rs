//! Odd-cycle machinery: chordless cycle enumeration, the odd cycle condition,
//! the vertex-deletion condition, and the pairwise-intersection criterion.
//!
//! Two vertex-disjoint odd cycles with no joining edge exist iff two such
//! chordless odd cycles exist: every odd cycle contains a chordless odd cycle
//! on a subset of its vertices (a chord splits an odd cycle into an odd and an
//! even one; recurse into the odd part). So all the deciders below enumerate
//! chordless cycles only; the equivalence is oracle-tested against full cycle
//! enumeration in the integration suite.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A simple cycle as its vertex sequence, starting at its smallest vertex.
pub type Cycle = Vec<usize>;

fn cycle_mask(c: &[usize]) -> VertexSet {
    c.iter().copied().collect()
}

/// All chordless cycles, each listed once: the sequence starts at the cycle's
/// smallest vertex and its second entry is smaller than its last.
pub fn chordless_cycles(g: &Graph) -> Vec<Cycle> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    for s in 1..=g.vertex_count() {
        path.clear();
        path.push(s);
        grow_chordless(g, s, &mut path, VertexSet::singleton(s), &mut out);
    }
    out
}

fn grow_chordless(g: &Graph, start: usize, path: &mut Vec<usize>, on_path: VertexSet, out: &mut Vec<Cycle>) {
    let last = *path.last().unwrap();
    let forbidden = on_path.difference(VertexSet::singleton(last));
    for w in g.neighbors(last).iter() {
        if w <= start || on_path.contains(w) {
            continue;
        }
        // Chords from w to earlier path vertices rule out every extension;
        // an edge back to the start closes a chordless cycle instead.
        let back = g.neighbors(w).intersection(forbidden);
        if back == VertexSet::singleton(start) && path.len() >= 2 {
            if path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                out.push(cycle);
            }
        } else if back.is_empty() {
            path.push(w);
            let mut next_on = on_path;
            next_on.insert(w);
            grow_chordless(g, start, path, next_on, out);
            path.pop();
        }
    }
}

/// All simple cycles (not just chordless ones), same canonical form. Intended
/// as a test oracle; exponential in general.
pub fn all_cycles(g: &Graph) -> Vec<Cycle> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    for s in 1..=g.vertex_count() {
        path.clear();
        path.push(s);
        grow_all(g, s, &mut path, VertexSet::singleton(s), &mut out);
    }
    out
}

fn grow_all(g: &Graph, start: usize, path: &mut Vec<usize>, on_path: VertexSet, out: &mut Vec<Cycle>) {
    let last = *path.last().unwrap();
    for w in g.neighbors(last).iter() {
        if w <= start || on_path.contains(w) {
            continue;
        }
        if path.len() >= 2 && g.has_edge(w, start) && path[1] < w {
            let mut cycle = path.clone();
            cycle.push(w);
            out.push(cycle);
        }
        path.push(w);
        let mut next_on = on_path;
        next_on.insert(w);
        grow_all(g, start, path, next_on, out);
        path.pop();
    }
}

fn odd_cycles(cycles: &[Cycle]) -> Vec<&Cycle> {
    cycles.iter().filter(|c| c.len() % 2 == 1).collect()
}

/// Outcome of the odd cycle condition check, with a witness pair of
/// vertex-disjoint unjoined odd cycles on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycleCondition {
    pub holds: bool,
    pub witness: Option<(Cycle, Cycle)>,
}

fn cycles_joined(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    let mb = cycle_mask(b);
    a.iter().any(|&v| !g.neighbors(v).is_disjoint(mb))
}

fn odd_cycle_condition_over(g: &Graph, cycles: &[Cycle]) -> OddCycleCondition {
    let odd = odd_cycles(cycles);
    for i in 0..odd.len() {
        let mi = cycle_mask(odd[i]);
        for c in odd.iter().skip(i + 1) {
            if mi.is_disjoint(cycle_mask(c)) && !cycles_joined(g, odd[i], c) {
                return OddCycleCondition {
                    holds: false,
                    witness: Some((odd[i].clone(), (*c).clone())),
                };
            }
        }
    }
    OddCycleCondition {
        holds: true,
        witness: None,
    }
}

/// True iff every two vertex-disjoint odd cycles are joined by an edge.
pub fn odd_cycle_condition(g: &Graph) -> Result<OddCycleCondition> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            operation: "odd_cycle_condition",
        });
    }
    Ok(odd_cycle_condition_over(g, &chordless_cycles(g)))
}

/// Same decision over the full cycle list; test oracle only.
pub fn odd_cycle_condition_all_cycles(g: &Graph) -> Result<OddCycleCondition> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            operation: "odd_cycle_condition",
        });
    }
    Ok(odd_cycle_condition_over(g, &all_cycles(g)))
}

/// True iff for every vertex `i`, every connected component of the graph with
/// `i` deleted contains an odd cycle (equivalently, is non-bipartite).
pub fn deletion_components_all_have_odd_cycle(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            operation: "deletion_components_all_have_odd_cycle",
        });
    }
    for v in 1..=g.vertex_count() {
        let mut rest = g.vertex_set();
        rest.remove(v);
        for comp in g.components_within(rest) {
            if !g.has_odd_cycle_within(comp) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff every two odd cycles share a vertex. Vacuously true for bipartite
/// graphs.
pub fn odd_cycles_pairwise_intersect(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            operation: "odd_cycles_pairwise_intersect",
        });
    }
    let cycles = chordless_cycles(g);
    let odd = odd_cycles(&cycles);
    for i in 0..odd.len() {
        let mi = cycle_mask(odd[i]);
        for c in odd.iter().skip(i + 1) {
            if mi.is_disjoint(cycle_mask(c)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles_with_path() -> Graph {
        Graph::new(
            7,
            [
                (1, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (5, 7),
                (6, 7),
            ],
        )
        .unwrap()
    }

    #[test]
    fn chordless_cycles_of_small_graphs() {
        let k4 = Graph::complete(4).unwrap();
        let cycles = chordless_cycles(&k4);
        // K4: four triangles; every 4-cycle has a chord.
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.len() == 3));

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(chordless_cycles(&c5), vec![vec![1, 2, 3, 4, 5]]);

        let all = all_cycles(&k4);
        assert_eq!(all.len(), 7); // 4 triangles + 3 four-cycles
    }

    #[test]
    fn odd_cycle_condition_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(odd_cycle_condition(&k4).unwrap().holds);

        let g = two_triangles_with_path();
        let out = odd_cycle_condition(&g).unwrap();
        assert!(!out.holds);
        let (a, b) = out.witness.unwrap();
        assert_eq!(a, vec![1, 2, 3]);
        assert_eq!(b, vec![5, 6, 7]);
        // The witness is checkable directly: disjoint, odd, unjoined.
        let ma: VertexSet = a.iter().copied().collect();
        let mb: VertexSet = b.iter().copied().collect();
        assert!(ma.is_disjoint(mb));
        assert!(a.len() % 2 == 1 && b.len() % 2 == 1);
        assert!(!cycles_joined(&g, &a, &b));

        assert!(odd_cycle_condition(&Graph::new(4, [(1, 2)]).unwrap()).is_err());
    }

    #[test]
    fn deletion_condition_examples() {
        assert!(deletion_components_all_have_odd_cycle(&Graph::complete(4).unwrap()).unwrap());
        assert!(!deletion_components_all_have_odd_cycle(&Graph::cycle(5).unwrap()).unwrap());
    }

    #[test]
    fn pairwise_intersection_examples() {
        assert!(odd_cycles_pairwise_intersect(&Graph::complete(4).unwrap()).unwrap());
        assert!(odd_cycles_pairwise_intersect(&Graph::cycle(6).unwrap()).unwrap());
        let g = two_triangles_with_path();
        assert!(!odd_cycles_pairwise_intersect(&g).unwrap());
    }
}

//! Finite posets on `{1, .., n}` and their comparability graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A finite partial order, stored transitively closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `less[i]` is the bitmask of elements strictly greater than `i`.
    less: Vec<u64>,
}

impl Poset {
    /// Builds from a list of strict relations `i < j`; the transitive closure
    /// is applied, and inputs whose closure violates irreflexivity or
    /// antisymmetry are rejected.
    pub fn new(n: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > crate::graph::MAX_VERTICES {
            return Err(Error::InvalidPoset(format!(
                "element count {n} exceeds the supported maximum"
            )));
        }
        let mut less = vec![0u64; n + 1];
        for (a, b) in relations {
            if a < 1 || a > n || b < 1 || b > n {
                return Err(Error::InvalidPoset(format!(
                    "relation ({a},{b}) out of range 1..={n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidPoset(format!("reflexive relation {a} < {a}")));
            }
            less[a] |= 1 << b;
        }
        // Warshall closure.
        for k in 1..=n {
            for i in 1..=n {
                if less[i] >> k & 1 == 1 {
                    less[i] |= less[k];
                }
            }
        }
        for i in 1..=n {
            if less[i] >> i & 1 == 1 {
                return Err(Error::InvalidPoset(format!(
                    "relation cycle through element {i}"
                )));
            }
            for j in i + 1..=n {
                if less[i] >> j & 1 == 1 && less[j] >> i & 1 == 1 {
                    return Err(Error::InvalidPoset(format!(
                        "antisymmetry violated between {i} and {j}"
                    )));
                }
            }
        }
        Ok(Poset { n, less })
    }

    /// Total order `1 < 2 < .. < n`.
    pub fn chain(n: usize) -> Result<Self> {
        Poset::new(n, (1..n).map(|i| (i, i + 1)))
    }

    pub fn antichain(n: usize) -> Result<Self> {
        Poset::new(n, [])
    }

    pub fn element_count(&self) -> usize {
        self.n
    }

    pub fn is_less(&self, a: usize, b: usize) -> bool {
        self.less[a] >> b & 1 == 1
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.is_less(a, b) || self.is_less(b, a)
    }

    /// All strict relations `(i, j)` with `i < j` in the order, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.is_less(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Graph on the same elements whose edges are the comparable pairs.
    pub fn comparability_graph(&self) -> Graph {
        let edges = (1..=self.n).flat_map(|i| {
            (i + 1..=self.n)
                .filter(move |&j| self.comparable(i, j))
                .map(move |j| (i, j))
        });
        Graph::new(self.n, edges).expect("comparable pairs form a simple graph")
    }
}

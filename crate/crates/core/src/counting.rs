//! Exact lattice-point counting in dilated polytopes.
//!
//! Counting runs in the full-dimensional lattice model: hull equations are
//! eliminated through the coordinate-drop isomorphism, and a DFS assigns model
//! coordinates in order, bounding each one by interval propagation from the
//! facet inequalities over the (dilated) vertex bounding box.

use crate::error::{Error, Result};
use crate::polytope::{HPolytope, LatticeModel};
use crate::Budget;

/// Closed system `a·y <= c` over a box, in model coordinates.
struct ScaledSystem {
    dim: usize,
    constraints: Vec<(Vec<i64>, i128)>,
    lo: Vec<i64>,
    hi: Vec<i64>,
    /// `suffix_min[i][k]` = minimal value of `Σ_{j >= k} a_i[j] y_j` over the box.
    suffix_min: Vec<Vec<i128>>,
}

impl ScaledSystem {
    fn build(h: &HPolytope, model: &LatticeModel, t: u64, strict: bool) -> Result<Self> {
        let dim = model.model_dim();
        let kept = model.kept_coordinates();
        let mut constraints = Vec::with_capacity(h.halfspaces().len());
        for f in h.halfspaces() {
            match model.project_halfspace_raw(f)? {
                None => continue,
                Some((normal, offset)) => {
                    let mut c = offset * t as i128;
                    if strict {
                        c -= 1;
                    }
                    constraints.push((normal, c));
                }
            }
        }
        let lo: Vec<i64> = kept
            .iter()
            .map(|&j| h.bounding_box()[j].0.checked_mul(t as i64).ok_or(Error::Overflow("box")))
            .collect::<Result<_>>()?;
        let hi: Vec<i64> = kept
            .iter()
            .map(|&j| h.bounding_box()[j].1.checked_mul(t as i64).ok_or(Error::Overflow("box")))
            .collect::<Result<_>>()?;
        let suffix_min = constraints
            .iter()
            .map(|(a, _)| {
                let mut acc = vec![0i128; dim + 1];
                for k in (0..dim).rev() {
                    let term = (a[k] as i128 * lo[k] as i128).min(a[k] as i128 * hi[k] as i128);
                    acc[k] = acc[k + 1] + term;
                }
                acc
            })
            .collect();
        Ok(ScaledSystem {
            dim,
            constraints,
            lo,
            hi,
            suffix_min,
        })
    }

    /// Feasible interval for coordinate `depth` given the partial sums of the
    /// assigned prefix, or `None` when empty.
    fn coordinate_range(&self, depth: usize, sums: &[i128]) -> Option<(i64, i64)> {
        let mut lo = self.lo[depth] as i128;
        let mut hi = self.hi[depth] as i128;
        for (i, (a, c)) in self.constraints.iter().enumerate() {
            let ak = a[depth] as i128;
            if ak == 0 {
                continue;
            }
            // a_k y_k <= c - prefix - (best case for the rest)
            let slack = c - sums[i] - self.suffix_min[i][depth + 1];
            if ak > 0 {
                hi = hi.min(slack.div_euclid(ak));
            } else {
                lo = lo.max((-slack).div_euclid(-ak) + i128::from((-slack).rem_euclid(-ak) != 0));
            }
            if lo > hi {
                return None;
            }
        }
        Some((lo as i64, hi as i64))
    }
}

enum Mode<'a> {
    Count(&'a mut u64),
    Collect(&'a mut Vec<Vec<i64>>),
    First(&'a mut Option<Vec<i64>>),
}

fn search(
    sys: &ScaledSystem,
    depth: usize,
    point: &mut Vec<i64>,
    sums: &mut Vec<i128>,
    nodes: &mut u64,
    budget: u64,
    mode: &mut Mode<'_>,
) -> Result<()> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExceeded {
            what: "lattice point search",
            budget,
        });
    }
    if depth == sys.dim {
        match mode {
            Mode::Count(c) => **c += 1,
            Mode::Collect(list) => list.push(point.clone()),
            Mode::First(slot) => **slot = Some(point.clone()),
        }
        return Ok(());
    }
    let Some((lo, hi)) = sys.coordinate_range(depth, sums) else {
        return Ok(());
    };
    for y in lo..=hi {
        point.push(y);
        for (i, (a, _)) in sys.constraints.iter().enumerate() {
            sums[i] += a[depth] as i128 * y as i128;
        }
        search(sys, depth + 1, point, sums, nodes, budget, mode)?;
        if let Mode::First(slot) = mode {
            if slot.is_some() {
                return Ok(());
            }
        }
        for (i, (a, _)) in sys.constraints.iter().enumerate() {
            sums[i] -= a[depth] as i128 * y as i128;
        }
        point.pop();
    }
    Ok(())
}

fn run(h: &HPolytope, t: u64, strict: bool, budget: u64, mode: &mut Mode<'_>) -> Result<()> {
    let model = LatticeModel::from_equations(h.ambient_dim(), h.equations())?;
    let sys = ScaledSystem::build(h, &model, t, strict)?;
    let mut sums = vec![0i128; sys.constraints.len()];
    let mut point = Vec::with_capacity(sys.dim);
    let mut nodes = 0u64;
    search(&sys, 0, &mut point, &mut sums, &mut nodes, budget, mode)?;
    // Lift collected model points back to ambient coordinates of t*P.
    match mode {
        Mode::Collect(list) => {
            for p in list.iter_mut() {
                *p = model.lift_point_scaled(p, t);
            }
        }
        Mode::First(slot) => {
            if let Some(p) = slot.as_mut() {
                *p = model.lift_point_scaled(p, t);
            }
        }
        _ => {}
    }
    Ok(())
}

/// Exact `|tP ∩ Z^N|`.
pub fn lattice_points(h: &HPolytope, t: u64, budget: &Budget) -> Result<u64> {
    let mut count = 0u64;
    run(h, t, false, budget.count_nodes, &mut Mode::Count(&mut count))?;
    Ok(count)
}

/// The points of `tP ∩ Z^N`, in ambient coordinates.
pub fn lattice_points_list(h: &HPolytope, t: u64, budget: &Budget) -> Result<Vec<Vec<i64>>> {
    let mut list = Vec::new();
    run(h, t, false, budget.count_nodes, &mut Mode::Collect(&mut list))?;
    Ok(list)
}

/// Some lattice point in the relative interior of `tP`, in ambient
/// coordinates — the lexicographically least in model coordinates.
pub fn interior_lattice_point(h: &HPolytope, t: u64, budget: &Budget) -> Result<Option<Vec<i64>>> {
    let mut slot = None;
    run(h, t, true, budget.count_nodes, &mut Mode::First(&mut slot))?;
    Ok(slot)
}

/// Minimal `delta >= 1` such that the interior of `delta * P` contains a
/// lattice point, with the witness. The polytope must be full-dimensional;
/// such a delta always exists and is at most `dim + 1`.
pub fn smallest_interior_dilation(h: &HPolytope, budget: &Budget) -> Result<(u64, Vec<i64>)> {
    if !h.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            dim: h.dim(),
            ambient: h.ambient_dim(),
        });
    }
    for t in 1..=(h.ambient_dim() as u64 + 1) {
        if let Some(p) = interior_lattice_point(h, t, budget)? {
            return Ok((t, p));
        }
    }
    Err(Error::InvalidPolytope(
        "no interior lattice point up to dilation dim+1; polytope must be degenerate".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facets::facets_bruteforce;
    use crate::polytope::VPolytope;

    fn hull_of(dim: usize, pts: &[&[i64]]) -> (VPolytope, HPolytope) {
        let v = VPolytope::new(dim, pts.iter().map(|p| p.to_vec()).collect()).unwrap();
        let h = facets_bruteforce(&v, &Budget::default()).unwrap();
        (v, h)
    }

    #[test]
    fn triangle_counts_are_triangular_numbers() {
        let (_, h) = hull_of(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(lattice_points(&h, 1, &Budget::default()).unwrap(), 3);
        assert_eq!(lattice_points(&h, 2, &Budget::default()).unwrap(), 6);
        assert_eq!(lattice_points(&h, 3, &Budget::default()).unwrap(), 10);
    }

    #[test]
    fn square_counts() {
        let (_, h) = hull_of(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(lattice_points(&h, 2, &Budget::default()).unwrap(), 9);
        let pts = lattice_points_list(&h, 1, &Budget::default()).unwrap();
        assert_eq!(pts.len(), 4);
    }

    #[test]
    fn interior_points_and_dilation() {
        let (_, h) = hull_of(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(interior_lattice_point(&h, 2, &Budget::default())
            .unwrap()
            .is_none());
        let (delta, witness) = smallest_interior_dilation(&h, &Budget::default()).unwrap();
        assert_eq!(delta, 3);
        assert_eq!(witness, vec![1, 1]);
    }

    #[test]
    fn counting_respects_hull_equations() {
        // Segment on the sum-2 hyperplane in Z^3.
        let (_, h) = hull_of(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(lattice_points(&h, 1, &Budget::default()).unwrap(), 2);
        assert_eq!(lattice_points(&h, 2, &Budget::default()).unwrap(), 3);
        assert_eq!(lattice_points(&h, 3, &Budget::default()).unwrap(), 4);
    }

    #[test]
    fn budget_is_enforced() {
        let (_, h) = hull_of(2, &[&[0, 0], &[10, 0], &[0, 10], &[10, 10]]);
        let tiny = Budget {
            facet_subsets: 1000,
            count_nodes: 5,
        };
        assert!(matches!(
            lattice_points(&h, 3, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn point_polytope_counts_one() {
        let v = VPolytope::new(2, vec![vec![3, 4]]).unwrap();
        let hull = crate::polytope::affine_hull(&v);
        let h = HPolytope::from_parts(2, Vec::new(), hull.equations, v.bounding_box());
        assert_eq!(lattice_points(&h, 5, &Budget::default()).unwrap(), 1);
        assert_eq!(
            lattice_points_list(&h, 2, &Budget::default()).unwrap(),
            vec![vec![6, 8]]
        );
    }
}

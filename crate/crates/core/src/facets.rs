//! Brute-force facet enumeration and the geometric Gorenstein pipeline.
//!
//! The oracle enumerates d-subsets of the vertices in the full-dimensional
//! lattice model, keeps the spanned hyperplanes that support the polytope,
//! and normalizes them to primitive outward form. It is deliberately naive:
//! it is the independent check against which the combinatorial facet lists
//! are validated, so simplicity beats speed.

use crate::counting::smallest_interior_dilation;
use crate::error::{Error, Result};
use crate::linalg;
use crate::polytope::{
    affine_hull, dual_is_integral, translate_to_standard_type, AffineHull, HPolytope, HalfSpace,
    LatticeModel, VPolytope,
};
use crate::Budget;
use std::collections::BTreeSet;
use std::collections::HashSet;

/// Complete irredundant facet list of the projection of `v` into its
/// full-dimensional lattice model.
pub(crate) fn facets_in_model(vm: &VPolytope, budget: &Budget) -> Result<Vec<HalfSpace>> {
    let d = vm.ambient_dim();
    let verts = vm.vertices();
    let mut seen: HashSet<(Vec<i64>, i64)> = HashSet::new();
    let mut facets: Vec<HalfSpace> = Vec::new();
    let mut subset: Vec<usize> = (0..d).collect();
    let mut ops: u64 = 0;
    loop {
        ops += 1;
        if ops > budget.facet_subsets {
            return Err(Error::BudgetExceeded {
                what: "facet enumeration",
                budget: budget.facet_subsets,
            });
        }
        let points: Vec<&[i64]> = subset.iter().map(|&i| verts[i].as_slice()).collect();
        if let Some((a, b)) = linalg::hyperplane_through(&points) {
            let key = unoriented_key(&a, b);
            if seen.insert(key) {
                let mut above = false;
                let mut below = false;
                for w in verts {
                    let s = linalg::dot(&a, w);
                    above |= s > b as i128;
                    below |= s < b as i128;
                    if above && below {
                        break;
                    }
                }
                if !(above && below) {
                    debug_assert!(above || below, "full-dimensional polytope off the hyperplane");
                    if above {
                        facets.push(HalfSpace {
                            normal: a.iter().map(|&x| -x).collect(),
                            offset: -b,
                        });
                    } else {
                        facets.push(HalfSpace { normal: a, offset: b });
                    }
                }
            }
        }
        if !next_combination(&mut subset, verts.len()) {
            break;
        }
    }
    facets.sort();
    Ok(facets)
}

fn unoriented_key(a: &[i64], b: i64) -> (Vec<i64>, i64) {
    let flip = a.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0);
    if flip {
        (a.iter().map(|&x| -x).collect(), -b)
    } else {
        (a.to_vec(), b)
    }
}

fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Complete facet description computed geometrically: enumerate vertex
/// d-subsets in the lattice model, keep supporting hyperplanes, lift back to
/// ambient coordinates, and attach the hull equations.
pub fn facets_bruteforce(v: &VPolytope, budget: &Budget) -> Result<HPolytope> {
    let hull = affine_hull(v);
    if hull.dim == 0 {
        return Err(Error::DegenerateDimension);
    }
    let model = LatticeModel::from_equations(v.ambient_dim(), &hull.equations)?;
    let vm = model.project_vpolytope(v)?;
    let model_facets = facets_in_model(&vm, budget)?;
    let lifted = lift_halfspaces(&model, &model_facets);
    Ok(HPolytope::from_parts(
        v.ambient_dim(),
        lifted,
        hull.equations,
        v.bounding_box(),
    ))
}

fn lift_halfspaces(model: &LatticeModel, facets: &[HalfSpace]) -> Vec<HalfSpace> {
    facets
        .iter()
        .map(|f| {
            let mut normal = vec![0i64; model.ambient_dim()];
            for (j, &c) in model.kept_coordinates().iter().enumerate() {
                normal[c] = f.normal[j];
            }
            HalfSpace {
                normal,
                offset: f.offset,
            }
        })
        .collect()
}

/// Set equality of two facet descriptions of the same polytope, compared in
/// the lattice model so representatives modulo the hull equations agree.
pub fn facet_sets_equal_modulo_hull(a: &HPolytope, b: &HPolytope) -> Result<bool> {
    if a.ambient_dim() != b.ambient_dim() {
        return Ok(false);
    }
    let rank_of = |eqs: &[crate::polytope::Equation]| {
        linalg::rank(
            eqs.iter()
                .map(|e| e.normal.iter().map(|&x| x as i128).collect())
                .collect(),
        )
    };
    if rank_of(a.equations()) != rank_of(b.equations()) {
        return Ok(false);
    }
    let model = LatticeModel::from_equations(a.ambient_dim(), a.equations())?;
    // The other hull must satisfy the same equations identically.
    for e in b.equations() {
        for (normal, value) in [
            (e.normal.clone(), e.value),
            (e.normal.iter().map(|&x| -x).collect(), -e.value),
        ] {
            match model.project_halfspace_raw(&HalfSpace { normal, offset: value }) {
                Ok(None) => {}
                _ => return Ok(false),
            }
        }
    }
    let canon = |h: &HPolytope| -> Result<BTreeSet<(Vec<i64>, i64)>> {
        let mut out = BTreeSet::new();
        for f in h.halfspaces() {
            if let Some(p) = model.project_halfspace(f)? {
                out.insert((p.normal, p.offset));
            }
        }
        Ok(out)
    };
    Ok(canon(a)? == canon(b)?)
}

/// Verdict of the geometric Gorenstein test: find the smallest dilation with
/// an interior lattice point, translate it to standard type, and test dual
/// integrality. A zero-dimensional polytope is a single point with a
/// polynomial-ring coordinate ring; it counts as Gorenstein at dilation 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricCheck {
    pub gorenstein: bool,
    pub delta: u64,
    /// Interior lattice point of `delta * P`, in ambient coordinates.
    pub interior_point: Vec<i64>,
    pub facet_count: usize,
}

pub fn geometric_gorenstein(v: &VPolytope, budget: &Budget) -> Result<GeometricCheck> {
    let hull = affine_hull(v);
    if hull.dim == 0 {
        return Ok(GeometricCheck {
            gorenstein: true,
            delta: 1,
            interior_point: v.vertices()[0].clone(),
            facet_count: 0,
        });
    }
    let model = LatticeModel::from_equations(v.ambient_dim(), &hull.equations)?;
    let vm = model.project_vpolytope(v)?;
    let facets = facets_in_model(&vm, budget)?;
    let hm = HPolytope::from_parts(vm.ambient_dim(), facets, Vec::new(), vm.bounding_box());
    let (delta, witness) = smallest_interior_dilation(&hm, budget)?;
    let standard = translate_to_standard_type(&hm, delta, &witness)?;
    let gorenstein = dual_is_integral(&standard)?;
    Ok(GeometricCheck {
        gorenstein,
        delta,
        interior_point: model.lift_point_scaled(&witness, delta),
        facet_count: hm.facet_count(),
    })
}

pub(crate) fn hull_and_model(v: &VPolytope) -> Result<(AffineHull, LatticeModel)> {
    let hull = affine_hull(v);
    let model = LatticeModel::from_equations(v.ambient_dim(), &hull.equations)?;
    Ok((hull, model))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vp(dim: usize, pts: &[&[i64]]) -> VPolytope {
        VPolytope::new(dim, pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn triangle_facets() {
        let tri = vp(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let h = facets_bruteforce(&tri, &Budget::default()).unwrap();
        let mut fs = h.halfspaces().to_vec();
        fs.sort();
        assert_eq!(
            fs,
            vec![
                HalfSpace { normal: vec![-1, 0], offset: 0 },
                HalfSpace { normal: vec![0, -1], offset: 0 },
                HalfSpace { normal: vec![1, 1], offset: 1 },
            ]
        );
    }

    #[test]
    fn square_has_four_facets() {
        let sq = vp(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let h = facets_bruteforce(&sq, &Budget::default()).unwrap();
        assert_eq!(h.facet_count(), 4);
    }

    #[test]
    fn degenerate_and_budget_errors() {
        let pt = vp(2, &[&[1, 1]]);
        assert!(matches!(
            facets_bruteforce(&pt, &Budget::default()),
            Err(Error::DegenerateDimension)
        ));
        let sq = vp(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let tiny = Budget {
            facet_subsets: 2,
            count_nodes: 1000,
        };
        assert!(matches!(
            facets_bruteforce(&sq, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn facets_of_lower_dimensional_polytopes_attach_equations() {
        // Triangle on the sum-2 hyperplane in Z^3.
        let tri = vp(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let h = facets_bruteforce(&tri, &Budget::default()).unwrap();
        assert_eq!(h.equations().len(), 1);
        assert_eq!(h.facet_count(), 3);
        for p in tri.vertices() {
            assert!(h.contains_lattice(p).unwrap());
        }
    }

    #[test]
    fn geometric_pipeline_on_simplices() {
        // The standard triangle: delta = 3, dual of the translate integral.
        let tri = vp(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let check = geometric_gorenstein(&tri, &Budget::default()).unwrap();
        assert!(check.gorenstein);
        assert_eq!(check.delta, 3);
        assert_eq!(check.interior_point, vec![1, 1]);

        // The unit square: delta = 2, translate is [-1,1]^2, dual integral.
        let sq = vp(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let check = geometric_gorenstein(&sq, &Budget::default()).unwrap();
        assert!(check.gorenstein);
        assert_eq!(check.delta, 2);

        // A point: Gorenstein by convention.
        let pt = vp(2, &[&[1, 1]]);
        let check = geometric_gorenstein(&pt, &Budget::default()).unwrap();
        assert!(check.gorenstein);
        assert_eq!(check.delta, 1);
        assert_eq!(check.interior_point, vec![1, 1]);
    }

    #[test]
    fn facet_set_comparison_modulo_hull() {
        let tri = vp(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let h = facets_bruteforce(&tri, &Budget::default()).unwrap();
        // An equivalent description with representatives shifted by the hull
        // equation z1+z2+z3 = 2.
        let shifted: Vec<HalfSpace> = h
            .halfspaces()
            .iter()
            .map(|f| HalfSpace {
                normal: f.normal.iter().map(|&x| x + 1).collect(),
                offset: f.offset + 2,
            })
            .collect();
        let h2 = HPolytope::from_parts(3, shifted, h.equations().to_vec(), tri.bounding_box());
        assert!(facet_sets_equal_modulo_hull(&h, &h2).unwrap());
        let h3 = HPolytope::from_parts(
            3,
            h.halfspaces()[1..].to_vec(),
            h.equations().to_vec(),
            tri.bounding_box(),
        );
        assert!(!facet_sets_equal_modulo_hull(&h, &h3).unwrap());
    }
}

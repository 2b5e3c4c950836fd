//! Exact lattice-polytope representations and transforms.
//!
//! Vertex representations hold integer points; halfspace representations hold
//! primitive outward inequalities `a·x <= b` plus the integer equations of the
//! affine hull. Polytopes that are not full-dimensional are handled through a
//! [`LatticeModel`], a coordinate-drop isomorphism between the affine lattice
//! of the hull and `Z^d`; widths, dilations and dual integrality are always
//! measured in that model so primitive normals are unambiguous.

use crate::error::{Error, Result};
use crate::feasibility::in_convex_hull;
use crate::linalg;
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Integer vertex representation. Listed points are pairwise distinct and
/// extreme; general constructors enforce extremeness with an exact
/// linear-feasibility reduction pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    ambient_dim: usize,
    vertices: Vec<Vec<i64>>,
}

impl VPolytope {
    pub fn new(ambient_dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        let points = Self::dedup_checked(ambient_dim, points)?;
        let mut vertices = Vec::with_capacity(points.len());
        for (k, p) in points.iter().enumerate() {
            let others: Vec<&[i64]> = points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, q)| q.as_slice())
                .collect();
            if !in_convex_hull(&others, p) {
                vertices.push(p.clone());
            }
        }
        Ok(VPolytope {
            ambient_dim,
            vertices,
        })
    }

    /// Fast path for 0/1 generators, where every listed point is extreme.
    pub fn from_01_points(ambient_dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        let points = Self::dedup_checked(ambient_dim, points)?;
        if points
            .iter()
            .any(|p| p.iter().any(|&x| x != 0 && x != 1))
        {
            return Err(Error::InvalidPolytope(
                "expected 0/1 coordinates".into(),
            ));
        }
        Ok(VPolytope {
            ambient_dim,
            vertices: points,
        })
    }

    /// For images of vertex sets under affine isomorphisms, where extremeness
    /// is inherited from the source.
    pub(crate) fn from_extreme_points(ambient_dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        let points = Self::dedup_checked(ambient_dim, points)?;
        Ok(VPolytope {
            ambient_dim,
            vertices: points,
        })
    }

    fn dedup_checked(ambient_dim: usize, mut points: Vec<Vec<i64>>) -> Result<Vec<Vec<i64>>> {
        if points.is_empty() {
            return Err(Error::InvalidPolytope("no vertices given".into()));
        }
        if let Some(bad) = points.iter().find(|p| p.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                got: bad.len(),
            });
        }
        points.sort_unstable();
        points.dedup();
        Ok(points)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Componentwise vertex minima and maxima.
    pub fn bounding_box(&self) -> Vec<(i64, i64)> {
        (0..self.ambient_dim)
            .map(|j| {
                let lo = self.vertices.iter().map(|v| v[j]).min().unwrap();
                let hi = self.vertices.iter().map(|v| v[j]).max().unwrap();
                (lo, hi)
            })
            .collect()
    }
}

/// The halfspace `normal · x <= offset`, with a primitive normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl HalfSpace {
    /// Normalizes `a·x <= b` to a primitive normal. The divisibility of the
    /// offset is guaranteed for supporting hyperplanes of lattice polytopes.
    pub fn new(normal: Vec<i64>, offset: i64) -> Result<Self> {
        let mut wide: Vec<i128> = normal.iter().map(|&x| x as i128).collect();
        let g = wide.iter().fold(0i128, |acc, &x| linalg::gcd(acc, x));
        if g == 0 {
            return Err(Error::InvalidPolytope("zero normal in halfspace".into()));
        }
        if g > 1 {
            if offset as i128 % g != 0 {
                return Err(Error::InvalidPolytope(
                    "halfspace offset not divisible by the normal's content".into(),
                ));
            }
            linalg::primitivize(&mut wide);
        }
        Ok(HalfSpace {
            normal: wide.into_iter().map(|x| x as i64).collect(),
            offset: if g > 1 { offset / g as i64 } else { offset },
        })
    }

    pub fn eval(&self, x: &[i64]) -> i128 {
        linalg::dot(&self.normal, x)
    }

    pub fn is_tight_on(&self, x: &[i64]) -> bool {
        self.eval(x) == self.offset as i128
    }
}

/// The hyperplane `normal · x = value`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Equation {
    pub normal: Vec<i64>,
    pub value: i64,
}

impl Equation {
    pub fn eval(&self, x: &[i64]) -> i128 {
        linalg::dot(&self.normal, x)
    }

    pub fn holds_on(&self, x: &[i64]) -> bool {
        self.eval(x) == self.value as i128
    }
}

/// Irredundant facet representation plus affine-hull equations. Always built
/// from a bounded vertex set, whose componentwise bounds are carried along
/// for lattice-point searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    ambient_dim: usize,
    halfspaces: Vec<HalfSpace>,
    equations: Vec<Equation>,
    bbox: Vec<(i64, i64)>,
}

impl HPolytope {
    pub(crate) fn from_parts(
        ambient_dim: usize,
        mut halfspaces: Vec<HalfSpace>,
        equations: Vec<Equation>,
        bbox: Vec<(i64, i64)>,
    ) -> Self {
        halfspaces.sort();
        halfspaces.dedup();
        debug_assert_eq!(bbox.len(), ambient_dim);
        HPolytope {
            ambient_dim,
            halfspaces,
            equations,
            bbox,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn facet_count(&self) -> usize {
        self.halfspaces.len()
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        self.ambient_dim - self.equations.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub(crate) fn bounding_box(&self) -> &[(i64, i64)] {
        &self.bbox
    }

    /// Exact membership for a rational point.
    pub fn contains(&self, x: &[BigRational]) -> Result<bool> {
        self.check_dim(x.len())?;
        Ok(self.equations.iter().all(|e| eval_rat(&e.normal, x) == big(e.value))
            && self
                .halfspaces
                .iter()
                .all(|h| eval_rat(&h.normal, x) <= big(h.offset)))
    }

    /// Exact relative-interior membership: equations hold, every facet
    /// inequality strict.
    pub fn contains_interior(&self, x: &[BigRational]) -> Result<bool> {
        self.check_dim(x.len())?;
        Ok(self.equations.iter().all(|e| eval_rat(&e.normal, x) == big(e.value))
            && self
                .halfspaces
                .iter()
                .all(|h| eval_rat(&h.normal, x) < big(h.offset)))
    }

    pub fn contains_lattice(&self, x: &[i64]) -> Result<bool> {
        self.check_dim(x.len())?;
        Ok(self.equations.iter().all(|e| e.holds_on(x))
            && self.halfspaces.iter().all(|h| h.eval(x) <= h.offset as i128))
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got == self.ambient_dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got,
            })
        }
    }
}

fn big(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn eval_rat(a: &[i64], x: &[BigRational]) -> BigRational {
    a.iter()
        .zip(x)
        .map(|(&ai, xi)| big(ai) * xi)
        .fold(BigRational::from_integer(BigInt::from(0)), |acc, t| acc + t)
}

/// Integer equation system cutting out the affine hull, plus its dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineHull {
    pub equations: Vec<Equation>,
    pub dim: usize,
}

/// Affine hull of the vertex set as an integer equation system. The system's
/// solution set over the rationals is exactly the affine span.
pub fn affine_hull(v: &VPolytope) -> AffineHull {
    let n = v.ambient_dim();
    let verts = v.vertices();
    let base = &verts[0];
    let diffs: Vec<Vec<i128>> = verts[1..]
        .iter()
        .map(|p| (0..n).map(|j| p[j] as i128 - base[j] as i128).collect())
        .collect();
    let basis = linalg::kernel_basis(&diffs, n);
    let dim = n - basis.len();
    let equations = basis
        .into_iter()
        .map(|a| {
            let value: i128 = (0..n).map(|j| a[j] * base[j] as i128).sum();
            Equation {
                normal: a.iter().map(|&x| i64::try_from(x).expect("hull normal fits i64")).collect(),
                value: i64::try_from(value).expect("hull value fits i64"),
            }
        })
        .collect();
    AffineHull { equations, dim }
}

/// Coordinate-drop isomorphism between the affine lattice of an equation
/// system and `Z^d`. The dropped coordinates are recovered by an integral
/// affine lift, so lattice points correspond exactly in both directions.
#[derive(Clone, Debug)]
pub struct LatticeModel {
    ambient_dim: usize,
    kept: Vec<usize>,
    dropped: Vec<usize>,
    /// `x[dropped[r]] = lift_const[r] + Σ_j lift_coef[r][j] * y[j]`.
    lift_coef: Vec<Vec<i64>>,
    lift_const: Vec<i64>,
}

impl LatticeModel {
    pub fn identity(ambient_dim: usize) -> Self {
        LatticeModel {
            ambient_dim,
            kept: (0..ambient_dim).collect(),
            dropped: Vec::new(),
            lift_coef: Vec::new(),
            lift_const: Vec::new(),
        }
    }

    /// Chooses a set of coordinates to drop whose equation submatrix is
    /// unimodular, preferring high indices. Errors when no coordinate subset
    /// works (possible for exotic equation lattices, not for the polytopes
    /// built here).
    pub fn from_equations(ambient_dim: usize, equations: &[Equation]) -> Result<Self> {
        if equations.is_empty() {
            return Ok(Self::identity(ambient_dim));
        }
        // Keep an independent subset of the equations.
        let mut rows: Vec<Vec<i128>> = Vec::new();
        let mut rhs: Vec<i128> = Vec::new();
        for e in equations {
            let mut candidate = rows.clone();
            candidate.push(e.normal.iter().map(|&x| x as i128).collect());
            if linalg::rank(candidate.clone()) > rows.len() {
                rows = candidate;
                rhs.push(e.value as i128);
            }
        }
        let k = rows.len();
        if k > ambient_dim {
            return Err(Error::InvalidPolytope("overdetermined hull equations".into()));
        }
        let mut columns: Vec<usize> = (0..ambient_dim).collect();
        columns.reverse();
        for drop in columns.into_iter().combinations(k) {
            let sub: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| drop.iter().map(|&c| r[c]).collect())
                .collect();
            if linalg::determinant(sub.clone()).abs() != 1 {
                continue;
            }
            let mut dropped = drop.clone();
            dropped.sort_unstable();
            let kept: Vec<usize> = (0..ambient_dim).filter(|c| !dropped.contains(c)).collect();
            // Solve x_dropped = A_S^{-1} (b - A_K y) by Cramer; the
            // submatrix is unimodular, so the inverse is integral.
            let det = linalg::determinant(
                rows.iter()
                    .map(|r| dropped.iter().map(|&c| r[c]).collect())
                    .collect(),
            );
            let solve = |target: &[i128]| -> Vec<i128> {
                (0..k)
                    .map(|col| {
                        let m: Vec<Vec<i128>> = rows
                            .iter()
                            .enumerate()
                            .map(|(i, r)| {
                                dropped
                                    .iter()
                                    .enumerate()
                                    .map(|(j, &c)| if j == col { target[i] } else { r[c] })
                                    .collect()
                            })
                            .collect();
                        linalg::determinant(m) / det
                    })
                    .collect()
            };
            let consts = solve(&rhs);
            let mut lift_coef = vec![vec![0i64; kept.len()]; k];
            for (j, &kc) in kept.iter().enumerate() {
                let col: Vec<i128> = rows.iter().map(|r| -r[kc]).collect();
                let sol = solve(&col);
                for r in 0..k {
                    lift_coef[r][j] = i64::try_from(sol[r]).expect("lift coefficient fits i64");
                }
            }
            let lift_const = consts
                .into_iter()
                .map(|c| i64::try_from(c).expect("lift constant fits i64"))
                .collect();
            return Ok(LatticeModel {
                ambient_dim,
                kept,
                dropped,
                lift_coef,
                lift_const,
            });
        }
        Err(Error::NoLatticeModel)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn model_dim(&self) -> usize {
        self.kept.len()
    }

    pub fn kept_coordinates(&self) -> &[usize] {
        &self.kept
    }

    pub fn project_point(&self, x: &[i64]) -> Vec<i64> {
        self.kept.iter().map(|&c| x[c]).collect()
    }

    /// Integral lift of a model point back to the ambient affine hull.
    pub fn lift_point(&self, y: &[i64]) -> Vec<i64> {
        self.lift_point_scaled(y, 1)
    }

    /// Lift into the hull of the `t`-fold dilation, whose equations have
    /// right-hand sides scaled by `t`.
    pub fn lift_point_scaled(&self, y: &[i64], t: u64) -> Vec<i64> {
        let mut x = vec![0i64; self.ambient_dim];
        for (j, &c) in self.kept.iter().enumerate() {
            x[c] = y[j];
        }
        for (r, &c) in self.dropped.iter().enumerate() {
            let mut acc = self.lift_const[r] as i128 * t as i128;
            for (j, &coef) in self.lift_coef[r].iter().enumerate() {
                acc += coef as i128 * y[j] as i128;
            }
            x[c] = i64::try_from(acc).expect("lifted coordinate fits i64");
        }
        x
    }

    /// Halfspace restricted to the hull, in model coordinates, without
    /// primitive normalization. `None` when the inequality is trivial on the
    /// hull; an error when it is violated identically.
    pub fn project_halfspace_raw(&self, h: &HalfSpace) -> Result<Option<(Vec<i64>, i128)>> {
        let mut normal = vec![0i128; self.kept.len()];
        for (j, &c) in self.kept.iter().enumerate() {
            normal[j] = h.normal[c] as i128;
        }
        let mut offset = h.offset as i128;
        for (r, &c) in self.dropped.iter().enumerate() {
            let a = h.normal[c] as i128;
            if a == 0 {
                continue;
            }
            offset -= a * self.lift_const[r] as i128;
            for (j, &coef) in self.lift_coef[r].iter().enumerate() {
                normal[j] += a * coef as i128;
            }
        }
        if normal.iter().all(|&x| x == 0) {
            return if offset >= 0 {
                Ok(None)
            } else {
                Err(Error::InfeasibleConstraint)
            };
        }
        let out = normal
            .into_iter()
            .map(|x| i64::try_from(x).expect("projected normal fits i64"))
            .collect();
        Ok(Some((out, offset)))
    }

    /// Primitive outward model form of an ambient facet.
    pub fn project_halfspace(&self, h: &HalfSpace) -> Result<Option<HalfSpace>> {
        match self.project_halfspace_raw(h)? {
            None => Ok(None),
            Some((normal, offset)) => {
                let offset = i64::try_from(offset).expect("projected offset fits i64");
                Ok(Some(HalfSpace::new(normal, offset)?))
            }
        }
    }

    pub fn project_vpolytope(&self, v: &VPolytope) -> Result<VPolytope> {
        let pts = v.vertices().iter().map(|p| self.project_point(p)).collect();
        let out = VPolytope::from_extreme_points(self.model_dim().max(0), pts)?;
        // The drop is only an isomorphism when every vertex lifts back.
        for p in v.vertices() {
            if self.lift_point(&self.project_point(p)) != *p {
                return Err(Error::RepresentationMismatch(
                    "equations do not cut out the vertex set's affine hull".into(),
                ));
            }
        }
        Ok(out)
    }
}

/// A candidate special simplex: indices into a host polytope's vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialSimplex {
    pub vertex_indices: Vec<usize>,
}

impl SpecialSimplex {
    pub fn new(vertex_indices: Vec<usize>) -> Self {
        SpecialSimplex { vertex_indices }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_indices.len()
    }
}

/// Per-facet tight-vertex counts from a special-simplex check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialSimplexCheck {
    pub special: bool,
    pub facet_counts: Vec<usize>,
}

/// True iff every facet is tight on exactly `q - 1` of the `q` simplex
/// vertices. The referenced vertices must be affinely independent.
pub fn is_special_simplex(
    v: &VPolytope,
    h: &HPolytope,
    s: &SpecialSimplex,
) -> Result<SpecialSimplexCheck> {
    if h.ambient_dim() != v.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: v.ambient_dim(),
            got: h.ambient_dim(),
        });
    }
    let verts = v.vertices();
    let points: Vec<&[i64]> = s
        .vertex_indices
        .iter()
        .map(|&i| {
            verts
                .get(i)
                .map(|p| p.as_slice())
                .ok_or_else(|| Error::InvalidPolytope(format!("vertex index {i} out of range")))
        })
        .collect::<Result<_>>()?;
    let q = points.len();
    if q == 0 {
        return Err(Error::DegenerateSimplex);
    }
    let diffs: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| {
            (0..v.ambient_dim())
                .map(|j| p[j] as i128 - points[0][j] as i128)
                .collect()
        })
        .collect();
    if linalg::rank(diffs) != q - 1 {
        return Err(Error::DegenerateSimplex);
    }
    let facet_counts: Vec<usize> = h
        .halfspaces()
        .iter()
        .map(|f| points.iter().filter(|p| f.is_tight_on(p)).count())
        .collect();
    let special = facet_counts.iter().all(|&c| c == q - 1);
    Ok(SpecialSimplexCheck {
        special,
        facet_counts,
    })
}

/// Drops the last coordinate of a polytope lying on the hyperplane where the
/// coordinates sum to 2. This is a lattice-preserving affine isomorphism.
pub fn project_onto_sum2_hyperplane(v: &VPolytope) -> Result<VPolytope> {
    let n = v.ambient_dim();
    if n == 0 {
        return Err(Error::DegenerateDimension);
    }
    for p in v.vertices() {
        let s: i128 = p.iter().map(|&x| x as i128).sum();
        if s != 2 {
            return Err(Error::InvalidPolytope(format!(
                "vertex {p:?} has coordinate sum {s}, expected 2"
            )));
        }
    }
    let pts = v
        .vertices()
        .iter()
        .map(|p| p[..n - 1].to_vec())
        .collect();
    VPolytope::from_extreme_points(n - 1, pts)
}

/// `delta * P` translated by an interior lattice point, so the origin becomes
/// interior. Facets transform exactly: `a·x <= delta*b - a·c`.
pub fn translate_to_standard_type(
    h: &HPolytope,
    delta: u64,
    interior_point: &[i64],
) -> Result<HPolytope> {
    if !h.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            dim: h.dim(),
            ambient: h.ambient_dim(),
        });
    }
    if interior_point.len() != h.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: h.ambient_dim(),
            got: interior_point.len(),
        });
    }
    let d = delta as i128;
    let mut halfspaces = Vec::with_capacity(h.halfspaces().len());
    for f in h.halfspaces() {
        let shift = f.eval(interior_point);
        let b = d * f.offset as i128 - shift;
        if b <= 0 {
            return Err(Error::NotInterior);
        }
        halfspaces.push(HalfSpace {
            normal: f.normal.clone(),
            offset: i64::try_from(b).expect("translated offset fits i64"),
        });
    }
    let bbox = h
        .bounding_box()
        .iter()
        .zip(interior_point)
        .map(|(&(lo, hi), &c)| {
            (
                i64::try_from(d * lo as i128 - c as i128).expect("bbox fits i64"),
                i64::try_from(d * hi as i128 - c as i128).expect("bbox fits i64"),
            )
        })
        .collect();
    Ok(HPolytope::from_parts(
        h.ambient_dim(),
        halfspaces,
        Vec::new(),
        bbox,
    ))
}

/// For a full-dimensional polytope with the origin interior and primitive
/// facet normals, the polar dual has integer vertices iff every facet offset
/// is 1.
pub fn dual_is_integral(h: &HPolytope) -> Result<bool> {
    if !h.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            dim: h.dim(),
            ambient: h.ambient_dim(),
        });
    }
    if h.halfspaces().iter().any(|f| f.offset <= 0) {
        return Err(Error::OriginNotInterior);
    }
    Ok(h.halfspaces().iter().all(|f| f.offset == 1))
}

/// Facet-width criterion for compressedness: in the full-dimensional lattice
/// model, every vertex lies on a facet hyperplane or at lattice distance one
/// from it.
pub fn is_compressed_width1(v: &VPolytope, h: &HPolytope) -> Result<bool> {
    verify_representation(v, h)?;
    let model = LatticeModel::from_equations(h.ambient_dim(), h.equations())?;
    let vm = model.project_vpolytope(v)?;
    for f in h.halfspaces() {
        let Some(fm) = model.project_halfspace(f)? else {
            continue;
        };
        for w in vm.vertices() {
            let s = fm.eval(w);
            let b = fm.offset as i128;
            if s != b && s != b - 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks that `h` is a valid facet description of `v`: dimensions match,
/// every vertex satisfies every constraint, and every halfspace is tight on
/// at least one vertex.
pub fn verify_representation(v: &VPolytope, h: &HPolytope) -> Result<()> {
    if h.ambient_dim() != v.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: v.ambient_dim(),
            got: h.ambient_dim(),
        });
    }
    for p in v.vertices() {
        if !h.contains_lattice(p)? {
            return Err(Error::RepresentationMismatch(format!(
                "vertex {p:?} violates the halfspace system"
            )));
        }
    }
    for f in h.halfspaces() {
        if !v.vertices().iter().any(|p| f.is_tight_on(p)) {
            return Err(Error::RepresentationMismatch(format!(
                "halfspace {:?} <= {} is not tight on any vertex",
                f.normal, f.offset
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vp(dim: usize, pts: &[&[i64]]) -> VPolytope {
        VPolytope::new(dim, pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn vertex_reduction_drops_interior_points() {
        let p = vp(2, &[&[0, 0], &[2, 0], &[0, 2], &[1, 1], &[1, 0]]);
        assert_eq!(
            p.vertices(),
            &[vec![0, 0], vec![0, 2], vec![2, 0]]
        );
        let single = vp(3, &[&[5, 5, 5]]);
        assert_eq!(single.vertex_count(), 1);
    }

    #[test]
    fn affine_hull_of_triangle_and_point() {
        let tri = vp(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let hull = affine_hull(&tri);
        assert_eq!(hull.dim, 2);
        assert!(hull.equations.is_empty());

        let pt = vp(2, &[&[3, 4]]);
        let hull = affine_hull(&pt);
        assert_eq!(hull.dim, 0);
        assert_eq!(hull.equations.len(), 2);

        let seg = vp(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let hull = affine_hull(&seg);
        assert_eq!(hull.dim, 1);
        for e in &hull.equations {
            assert!(seg.vertices().iter().all(|p| e.holds_on(p)));
        }
    }

    #[test]
    fn sum2_projection() {
        let p = vp(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let q = project_onto_sum2_hyperplane(&p).unwrap();
        assert_eq!(q.vertices(), &[vec![0, 1], vec![1, 1]]);
        let bad = vp(2, &[&[1, 0]]);
        assert!(project_onto_sum2_hyperplane(&bad).is_err());
    }

    #[test]
    fn lattice_model_roundtrip_on_sum_hyperplane() {
        let eqs = vec![Equation {
            normal: vec![1, 1, 1],
            value: 2,
        }];
        let model = LatticeModel::from_equations(3, &eqs).unwrap();
        assert_eq!(model.model_dim(), 2);
        // Prefers dropping the last coordinate.
        assert_eq!(model.kept_coordinates(), &[0, 1]);
        let x = [1i64, 0, 1];
        let y = model.project_point(&x);
        assert_eq!(model.lift_point(&y), x);
    }

    #[test]
    fn standard_type_translate_and_dual() {
        // conv(0, e1, e2) dilated by 3 and translated by (1,1):
        // x >= -1, y >= -1, x + y <= 1.
        let tri = vp(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let h = crate::facets::facets_bruteforce(&tri, &crate::Budget::default()).unwrap();
        let std = translate_to_standard_type(&h, 3, &[1, 1]).unwrap();
        let mut fs = std.halfspaces().to_vec();
        fs.sort();
        assert_eq!(
            fs,
            vec![
                HalfSpace { normal: vec![-1, 0], offset: 1 },
                HalfSpace { normal: vec![0, -1], offset: 1 },
                HalfSpace { normal: vec![1, 1], offset: 1 },
            ]
        );
        assert!(dual_is_integral(&std).unwrap());
        // (1,1) is not interior at delta = 2.
        assert!(translate_to_standard_type(&h, 2, &[1, 1]).is_err());
    }

    #[test]
    fn dual_integrality_detects_lattice_distance() {
        // Triangle conv((-1,-2),(1,-2),(0,2)) has the origin interior but the
        // bottom edge at lattice distance 2.
        let tri = vp(2, &[&[-1, -2], &[1, -2], &[0, 2]]);
        let h = crate::facets::facets_bruteforce(&tri, &crate::Budget::default()).unwrap();
        assert!(!dual_is_integral(&h).unwrap());
    }

    #[test]
    fn compressed_unit_square() {
        let sq = vp(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let h = crate::facets::facets_bruteforce(&sq, &crate::Budget::default()).unwrap();
        assert!(is_compressed_width1(&sq, &h).unwrap());
        let big = vp(2, &[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]);
        let h = crate::facets::facets_bruteforce(&big, &crate::Budget::default()).unwrap();
        assert!(!is_compressed_width1(&big, &h).unwrap());
    }

    #[test]
    fn special_simplex_rejects_and_counts() {
        let tri = vp(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let h = crate::facets::facets_bruteforce(&tri, &crate::Budget::default()).unwrap();
        // q = 1 simplex on the origin: facets x >= 0 and y >= 0 contain it.
        let check = is_special_simplex(&tri, &h, &SpecialSimplex::new(vec![0])).unwrap();
        assert!(!check.special);
        assert!(check.facet_counts.contains(&1));
        // Degenerate: repeated vertex.
        assert!(is_special_simplex(&tri, &h, &SpecialSimplex::new(vec![0, 0])).is_err());
    }

    #[test]
    fn rational_membership() {
        let sq = vp(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let h = crate::facets::facets_bruteforce(&sq, &crate::Budget::default()).unwrap();
        let half = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        assert!(h.contains(&[half(1, 2), half(1, 2)]).unwrap());
        assert!(h.contains_interior(&[half(1, 2), half(1, 2)]).unwrap());
        assert!(h.contains(&[half(0, 1), half(1, 2)]).unwrap());
        assert!(!h.contains_interior(&[half(0, 1), half(1, 2)]).unwrap());
        assert!(!h.contains(&[half(1, 1), half(3, 2)]).unwrap());
    }
}

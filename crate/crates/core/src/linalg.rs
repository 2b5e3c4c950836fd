//! Exact integer linear algebra on small dense matrices: fraction-free
//! (Bareiss) elimination, ranks, kernels, and hyperplanes through point sets.
//!
//! Entries are `i128`; inputs here are coordinates of lattice polytopes at
//! desk scale, so every intermediate value is a minor of a small matrix and
//! fits comfortably.

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Divides the vector by the gcd of its entries (no-op on the zero vector).
pub fn primitivize(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |acc, &x| gcd(acc, x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

/// Fraction-free row echelon form. Returns the rank and the pivot columns;
/// `m` is left in echelon form with exact (divided) entries.
pub fn bareiss_echelon(m: &mut [Vec<i128>]) -> (usize, Vec<usize>) {
    let rows = m.len();
    if rows == 0 {
        return (0, Vec::new());
    }
    let cols = m[0].len();
    let mut pivot_cols = Vec::new();
    let mut prev = 1i128;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(src) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, src);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                m[i][j] = num / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivot_cols.push(c);
        r += 1;
    }
    (r, pivot_cols)
}

pub fn rank(rows: Vec<Vec<i128>>) -> usize {
    let mut m = rows;
    bareiss_echelon(&mut m).0
}

/// Determinant of a square matrix.
pub fn determinant(rows: Vec<Vec<i128>>) -> i128 {
    let n = rows.len();
    let mut m = rows;
    let mut sign = 1i128;
    let mut prev = 1i128;
    for c in 0..n {
        let Some(src) = (c..n).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if src != c {
            m.swap(c, src);
            sign = -sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let num = m[c][c] * m[i][j] - m[i][c] * m[c][j];
                debug_assert_eq!(num % prev, 0);
                m[i][j] = num / prev;
            }
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    sign * m[n - 1][n - 1]
}

/// Primitive integer basis of the rational kernel `{x : rows * x = 0}`.
/// One basis vector per free column, each supported on that free column and
/// the pivot columns; deterministic given the row order.
pub fn kernel_basis(rows: &[Vec<i128>], cols: usize) -> Vec<Vec<i128>> {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let (_, pivot_cols) = bareiss_echelon(&mut m);
    let is_pivot: Vec<bool> = {
        let mut p = vec![false; cols];
        for &c in &pivot_cols {
            p[c] = true;
        }
        p
    };
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![0i128; cols];
        // Pivot variables to the right of the free column stay zero; the ones
        // to its left form a square subsystem. Scaling the free coordinate by
        // that subsystem's Bareiss pivot (its determinant) turns the solution
        // into the signed-minor vector of Cramer's rule, so every
        // back-substitution step divides exactly.
        let above = pivot_cols.iter().take_while(|&&p| p < free).count();
        x[free] = if above == 0 { 1 } else { m[above - 1][pivot_cols[above - 1]] };
        for i in (0..above).rev() {
            let p = pivot_cols[i];
            let mut acc: i128 = 0;
            for j in p + 1..cols {
                if x[j] != 0 {
                    acc += m[i][j] * x[j];
                }
            }
            debug_assert_eq!(acc % m[i][p], 0, "kernel back-substitution must be exact");
            x[p] = -acc / m[i][p];
        }
        primitivize(&mut x);
        // Sign convention: first nonzero entry positive.
        if let Some(first) = x.iter().find(|&&v| v != 0) {
            if *first < 0 {
                for v in x.iter_mut() {
                    *v = -*v;
                }
            }
        }
        basis.push(x);
    }
    basis
}

/// The unique hyperplane `a·x = b` through `dim` points in `R^dim`, with a
/// primitive normal, or `None` when the points do not affinely span one.
pub fn hyperplane_through(points: &[&[i64]]) -> Option<(Vec<i64>, i64)> {
    let dim = points[0].len();
    debug_assert_eq!(points.len(), dim);
    if dim == 1 {
        return Some((vec![1], points[0][0] as i128 as i64));
    }
    let diffs: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| {
            (0..dim)
                .map(|j| p[j] as i128 - points[0][j] as i128)
                .collect()
        })
        .collect();
    let basis = kernel_basis(&diffs, dim);
    if basis.len() != 1 {
        return None;
    }
    let normal = basis.into_iter().next().unwrap();
    let b: i128 = (0..dim).map(|j| normal[j] * points[0][j] as i128).sum();
    let a: Vec<i64> = normal
        .iter()
        .map(|&x| i64::try_from(x).expect("hyperplane normal exceeds i64"))
        .collect();
    Some((a, i64::try_from(b).expect("hyperplane offset exceeds i64")))
}

pub fn dot(a: &[i64], x: &[i64]) -> i128 {
    a.iter()
        .zip(x)
        .map(|(&ai, &xi)| ai as i128 * xi as i128)
        .sum()
}

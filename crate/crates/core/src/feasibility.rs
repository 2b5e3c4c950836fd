//! Exact convex-combination feasibility over arbitrary-precision rationals.
//!
//! Used by the vertex reduction pass: a listed point is extreme iff it is not
//! a convex combination of the remaining points. Phase-1 simplex with Bland's
//! rule, so termination and determinism are guaranteed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn ratio(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// True iff `target` is a convex combination of `points` (exact arithmetic).
pub fn in_convex_hull(points: &[&[i64]], target: &[i64]) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = target.len();
    let m = dim + 1; // coordinate equations plus the barycentric one
    let n = points.len();

    // Equality system A λ = b with λ >= 0:
    //   Σ λ_k p_k[j] = target[j]  and  Σ λ_k = 1.
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for j in 0..dim {
        let mut row: Vec<BigRational> = points.iter().map(|p| ratio(p[j])).collect();
        row.push(ratio(target[j]));
        rows.push(row);
    }
    let mut last: Vec<BigRational> = points.iter().map(|_| BigRational::one()).collect();
    last.push(BigRational::one());
    rows.push(last);

    // Make every right-hand side nonnegative, then add one artificial
    // variable per row; phase 1 minimizes their sum.
    for row in rows.iter_mut() {
        if row[n].is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
    }

    // Tableau columns: n structural + m artificial + rhs.
    let cols = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut full = vec![BigRational::zero(); cols];
            full[..n].clone_from_slice(&row[..n]);
            full[n + i] = BigRational::one();
            full[cols - 1] = row[n].clone();
            full
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Objective row: reduced costs for minimizing the artificial sum.
    let mut obj = vec![BigRational::zero(); cols];
    for trow in &t {
        for (o, v) in obj.iter_mut().zip(trow) {
            *o += v.clone();
        }
    }
    for j in n..n + m {
        obj[j] = BigRational::zero();
    }

    loop {
        // Bland: entering variable is the lowest-index structural column
        // with a positive reduced cost.
        let Some(enter) = (0..n + m).find(|&j| !basis.contains(&j) && obj[j].is_positive())
        else {
            break;
        };
        // Ratio test; ties broken by the lowest basis index (Bland).
        let mut pick: Option<(usize, BigRational)> = None;
        for (i, trow) in t.iter().enumerate() {
            if trow[enter].is_positive() {
                let r = &trow[cols - 1] / &trow[enter];
                pick = match pick {
                    Some((bi, best)) if best < r || (best == r && basis[bi] < basis[i]) => {
                        Some((bi, best))
                    }
                    _ => Some((i, r)),
                };
            }
        }
        let Some((row, _)) = pick else {
            break; // unbounded cannot happen in phase 1; defensive exit
        };
        // Pivot.
        let pv = t[row][enter].clone();
        for x in t[row].iter_mut() {
            *x /= pv.clone();
        }
        for i in 0..m {
            if i != row && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                let src = t[row].clone();
                for (x, s) in t[i].iter_mut().zip(&src) {
                    *x -= &f * s;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (x, s) in obj.iter_mut().zip(&t[row]) {
                *x -= &f * s;
            }
        }
        basis[row] = enter;
    }

    obj[cols - 1].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_membership() {
        let square: Vec<&[i64]> = vec![&[0, 0], &[1, 0], &[0, 1], &[1, 1]];
        assert!(in_convex_hull(&square, &[0, 0]));
        assert!(!in_convex_hull(&square[..3], &[1, 1]));
        // Midpoint witness: (1,1) is in the hull of (0,0) and (2,2).
        assert!(in_convex_hull(&[&[0, 0], &[2, 2]], &[1, 1]));
        assert!(!in_convex_hull(&[&[0, 0], &[2, 2]], &[1, 2]));
        assert!(!in_convex_hull(&[], &[0]));
    }
}

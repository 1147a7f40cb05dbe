use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::balanced::{beta, enumerate_maximal_balanced_sets_with_cap, lp_cap};
use super::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Optimal solutions of the packing LP
/// `max Σ y_v  s.t.  Σ_{v∈B} y_v ≤ 1 for every row B,  y ≥ 0`
/// and of its dual covering LP.
#[derive(Debug, Clone, PartialEq)]
pub struct PackingSolution {
    pub value: BigRational,
    /// One weight per column (vertex).
    pub y: Vec<BigRational>,
    /// One weight per row (set), optimal for the covering LP.
    pub x: Vec<BigRational>,
}

/// Dictionary-form simplex with Bland's rule. Columns are `0..n`, each row
/// lists the columns it contains. The origin is feasible.
pub fn solve_packing(n: usize, rows: &[Vec<usize>]) -> PackingSolution {
    let m = rows.len();
    let zero = BigRational::zero();
    let one = BigRational::one();
    // labels: 0..n structural, n..n+m slacks
    let mut nonbasic: Vec<usize> = (0..n).collect();
    let mut basic: Vec<usize> = (n..n + m).collect();
    // basic_r = b[r] - Σ_j a[r][j] * nonbasic_j
    let mut b = vec![one.clone(); m];
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|row| {
            let mut r = vec![zero.clone(); n];
            for &v in row {
                r[v] = one.clone();
            }
            r
        })
        .collect();
    // z = z0 + Σ_j c[j] * nonbasic_j
    let mut z0 = zero.clone();
    let mut c = vec![one.clone(); n];

    while let Some(j) = (0..n).filter(|&j| c[j].is_positive()).min_by_key(|&j| nonbasic[j]) {
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..m {
            if !a[r][j].is_positive() {
                continue;
            }
            let ratio = &b[r] / &a[r][j];
            let better = match &leave {
                None => true,
                Some((lr, lratio)) => ratio < *lratio || (ratio == *lratio && basic[r] < basic[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // every column lies in some row, so the LP is bounded
        let (r, _) = leave.expect("packing LP is bounded");
        let piv = a[r][j].clone();
        b[r] = &b[r] / &piv;
        for k in 0..n {
            if k != j {
                a[r][k] = &a[r][k] / &piv;
            }
        }
        a[r][j] = &one / &piv;
        let (row_b, row_a) = (b[r].clone(), a[r].clone());
        for i in 0..m {
            if i == r || a[i][j].is_zero() {
                continue;
            }
            let f = a[i][j].clone();
            b[i] = &b[i] - &f * &row_b;
            for k in 0..n {
                if k != j {
                    a[i][k] = &a[i][k] - &f * &row_a[k];
                }
            }
            a[i][j] = -(&f * &row_a[j]);
        }
        let f = c[j].clone();
        z0 = &z0 + &f * &row_b;
        for k in 0..n {
            if k != j {
                c[k] = &c[k] - &f * &row_a[k];
            }
        }
        c[j] = -(&f * &row_a[j]);
        std::mem::swap(&mut nonbasic[j], &mut basic[r]);
    }

    let mut y = vec![zero.clone(); n];
    for (r, &lab) in basic.iter().enumerate() {
        if lab < n {
            y[lab] = b[r].clone();
        }
    }
    let mut x = vec![zero.clone(); m];
    for (j, &lab) in nonbasic.iter().enumerate() {
        if lab >= n {
            x[lab - n] = -c[j].clone();
        }
    }
    PackingSolution { value: z0, y, x }
}

/// Result of [`chi_fb_exact`].
#[derive(Debug, Clone, PartialEq)]
pub struct ChiFb {
    pub value: BigRational,
    /// Optimal fractional cover by maximal balanced sets.
    pub certificate: Certificate,
    /// Optimal vertex weights of the dual packing LP.
    pub dual: Vec<BigRational>,
    pub beta: usize,
    /// `n / β`, never above `value`.
    pub lower_bound: BigRational,
}

pub fn chi_fb_exact(g: &SignedGraph) -> Result<ChiFb> {
    chi_fb_exact_with_cap(g, lp_cap())
}

pub fn chi_fb_exact_with_cap(g: &SignedGraph, cap: usize) -> Result<ChiFb> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParam("graph has no vertices".into()));
    }
    let family = enumerate_maximal_balanced_sets_with_cap(g, cap)?;
    let sol = solve_packing(n, &family.sets);

    // check both solutions exactly; equal objectives prove optimality
    let zero = BigRational::zero();
    let one = BigRational::one();
    let primal_sum: BigRational = sol.x.iter().fold(zero.clone(), |acc, v| acc + v);
    let dual_sum: BigRational = sol.y.iter().fold(zero.clone(), |acc, v| acc + v);
    if primal_sum != sol.value || dual_sum != sol.value {
        return Err(Error::Internal("LP objectives disagree".into()));
    }
    if sol.x.iter().chain(sol.y.iter()).any(|v| v.is_negative()) {
        return Err(Error::Internal("LP solution has a negative entry".into()));
    }
    let mut cover = vec![zero.clone(); n];
    for (set, w) in family.sets.iter().zip(&sol.x) {
        for &v in set {
            cover[v] += w;
        }
        let load: BigRational = set.iter().fold(zero.clone(), |acc, &v| acc + &sol.y[v]);
        if load > one {
            return Err(Error::Internal("dual LP solution is infeasible".into()));
        }
    }
    if cover.iter().any(|c| *c < one) {
        return Err(Error::Internal("primal LP solution does not cover".into()));
    }

    let certificate = Certificate {
        entries: family
            .sets
            .into_iter()
            .zip(sol.x)
            .filter(|(_, w)| !w.is_zero())
            .collect(),
    };
    let (b, _) = beta(g);
    let lower_bound = BigRational::new(n.into(), b.into());
    if lower_bound > sol.value {
        return Err(Error::Internal("LP value below n/beta".into()));
    }
    Ok(ChiFb {
        value: sol.value,
        certificate,
        dual: sol.y,
        beta: b,
        lower_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn tiny_packing() {
        // triangle of pairs: optimum 3/2
        let sol = solve_packing(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(sol.value, r(3, 2));
        assert_eq!(sol.x.iter().fold(BigRational::zero(), |a, b| a + b), r(3, 2));
    }

    #[test]
    fn known_values() {
        assert_eq!(chi_fb_exact(&generate::k4_bullet()).unwrap().value, r(5, 3));
        assert_eq!(chi_fb_exact(&generate::k4_minus()).unwrap().value, r(2, 1));
        assert_eq!(
            chi_fb_exact(&generate::cycle(6, false).unwrap()).unwrap().value,
            r(1, 1)
        );
        for k in 3..=8 {
            let res = chi_fb_exact(&generate::cycle(k, true).unwrap()).unwrap();
            assert_eq!(res.value, r(k as i64, k as i64 - 1), "k={k}");
            assert_eq!(res.beta, k - 1);
        }
    }
}

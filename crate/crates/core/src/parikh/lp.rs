//! Small exact two-phase simplex over rationals (Bland's rule), enough for
//! the flow relaxations solved during branch-and-bound.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Q = BigRational;

/// `min c·x` subject to `A x = b` and `lower <= x <= upper`.
#[derive(Clone, Debug)]
pub(crate) struct Lp {
    pub vars: usize,
    /// Sparse equality rows: coefficients and right-hand side.
    pub rows: Vec<(Vec<(usize, i64)>, i64)>,
    pub objective: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum LpOutcome {
    Infeasible,
    Optimal(Vec<Q>),
}

fn q(v: &BigInt) -> Q {
    Q::from_integer(v.clone())
}

impl Lp {
    pub fn solve(&self, lower: &[BigInt], upper: &[Option<BigInt>]) -> LpOutcome {
        for j in 0..self.vars {
            if let Some(u) = &upper[j] {
                if u < &lower[j] {
                    return LpOutcome::Infeasible;
                }
            }
        }
        // substitute x = lower + y, y >= 0
        let bounded: Vec<usize> = (0..self.vars).filter(|&j| upper[j].is_some()).collect();
        let m = self.rows.len() + bounded.len();
        // columns: y (vars), bound slacks, artificials (m), rhs
        let slack0 = self.vars;
        let art0 = slack0 + bounded.len();
        let rhs = art0 + m;
        let width = rhs + 1;
        let mut t: Vec<Vec<Q>> = vec![vec![Q::zero(); width]; m];
        for (i, (coeffs, b)) in self.rows.iter().enumerate() {
            let mut r = Q::from_integer(BigInt::from(*b));
            for &(j, a) in coeffs {
                t[i][j] += Q::from_integer(BigInt::from(a));
                r -= Q::from_integer(BigInt::from(a)) * q(&lower[j]);
            }
            t[i][rhs] = r;
        }
        for (s, &j) in bounded.iter().enumerate() {
            let i = self.rows.len() + s;
            t[i][j] = Q::one();
            t[i][slack0 + s] = Q::one();
            t[i][rhs] = q(upper[j].as_ref().unwrap()) - q(&lower[j]);
        }
        for (i, row) in t.iter_mut().enumerate() {
            if row[rhs].is_negative() {
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
            }
            row[art0 + i] = Q::one();
        }
        let mut basis: Vec<usize> = (0..m).map(|i| art0 + i).collect();

        // phase 1
        let mut cost1 = vec![Q::zero(); rhs];
        for c in cost1.iter_mut().skip(art0) {
            *c = Q::one();
        }
        run_simplex(&mut t, &mut basis, &cost1, rhs, rhs);
        let infeasibility: Q = basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= art0)
            .map(|(i, _)| t[i][rhs].clone())
            .fold(Q::zero(), |a, b| a + b);
        if infeasibility.is_positive() {
            return LpOutcome::Infeasible;
        }
        // drive remaining (zero-valued) artificials out of the basis
        let mut i = 0;
        while i < t.len() {
            if basis[i] >= art0 {
                match (0..art0).find(|&j| !t[i][j].is_zero()) {
                    Some(j) => {
                        pivot(&mut t, &mut basis, i, j);
                        i += 1;
                    }
                    None => {
                        t.remove(i);
                        basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }

        // phase 2 over original and slack columns only
        let mut cost2 = vec![Q::zero(); rhs];
        for (j, &c) in self.objective.iter().enumerate() {
            cost2[j] = Q::from_integer(BigInt::from(c));
        }
        run_simplex(&mut t, &mut basis, &cost2, art0, rhs);

        let mut x: Vec<Q> = lower.iter().map(q).collect();
        for (i, &b) in basis.iter().enumerate() {
            if b < self.vars {
                x[b] += t[i][rhs].clone();
            }
        }
        LpOutcome::Optimal(x)
    }
}

fn pivot(t: &mut [Vec<Q>], basis: &mut [usize], r: usize, c: usize) {
    let p = t[r][c].clone();
    for v in t[r].iter_mut() {
        *v /= p.clone();
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= f.clone() * pv;
            }
        }
    }
    basis[r] = c;
}

/// Minimises `cost` using columns `< allowed`. The objective is assumed
/// bounded below (true for the nonnegative objectives used here).
fn run_simplex(t: &mut [Vec<Q>], basis: &mut [usize], cost: &[Q], allowed: usize, rhs: usize) {
    loop {
        let entering = (0..allowed).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut r = cost[j].clone();
            for (i, &b) in basis.iter().enumerate() {
                if !t[i][j].is_zero() && !cost[b].is_zero() {
                    r -= cost[b].clone() * &t[i][j];
                }
            }
            r.is_negative()
        });
        let Some(c) = entering else { return };
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..t.len() {
            if t[i][c].is_positive() {
                let ratio = t[i][rhs].clone() / &t[i][c];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            // unbounded direction; cannot happen for the objectives used here
            return;
        };
        pivot(t, basis, r, c);
    }
}

//! Exact two-phase simplex over the rationals with Bland's anti-cycling rule.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

/// Outcome of a standard-form problem `min c·x  s.t.  A x = b, x ≥ 0`.
#[derive(Clone, Debug)]
pub(crate) enum StdOutcome {
    /// `duals` solve `yᵀA ≤ c` with `yᵀb = value`.
    Optimal { x: Vec<Q>, value: Q, duals: Vec<Q> },
    /// Farkas certificate: `yᵀA ≤ 0` column-wise and `yᵀb > 0`.
    Infeasible { farkas: Vec<Q> },
    Unbounded,
}

struct Tableau {
    /// `m` rows of `n_orig + m` coefficients followed by the right-hand side.
    rows: Vec<Vec<Q>>,
    /// Reduced-cost row, same width as `rows`; last entry is `-objective`.
    cost: Vec<Q>,
    basis: Vec<usize>,
    n_orig: usize,
}

impl Tableau {
    fn width(&self) -> usize {
        self.cost.len() - 1
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let inv = Q::one() / &self.rows[pr][pc];
        if !inv.is_one() {
            for v in self.rows[pr].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
        }
        let nz: Vec<usize> = (0..=self.width()).filter(|&j| !self.rows[pr][j].is_zero()).collect();
        let prow = std::mem::take(&mut self.rows[pr]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == pr || row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            for &j in &nz {
                row[j] -= &f * &prow[j];
            }
        }
        if !self.cost[pc].is_zero() {
            let f = self.cost[pc].clone();
            for &j in &nz {
                self.cost[j] -= &f * &prow[j];
            }
        }
        self.rows[pr] = prow;
        self.basis[pr] = pc;
    }

    /// Runs Bland-rule iterations over columns `< limit`. Returns `false` when unbounded.
    fn optimize(&mut self, limit: usize) -> bool {
        let rhs = self.width();
        loop {
            let Some(pc) = (0..limit).find(|&j| self.cost[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[pc].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[pc];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((pr, _)) => self.pivot(pr, pc),
                None => return false,
            }
        }
    }
}

/// Solves `min c·x  s.t.  A x = b, x ≥ 0` exactly.
pub(crate) fn solve_standard(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> StdOutcome {
    let m = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == m);

    let mut flip = vec![false; m];
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        flip[i] = b[i].is_negative();
        let mut row = Vec::with_capacity(n + m + 1);
        for v in &a[i] {
            row.push(if flip[i] { -v.clone() } else { v.clone() });
        }
        for k in 0..m {
            row.push(if k == i { Q::one() } else { Q::zero() });
        }
        row.push(if flip[i] { -b[i].clone() } else { b[i].clone() });
        rows.push(row);
    }

    // Phase 1: minimise the sum of artificials.
    let mut cost = vec![Q::zero(); n + m + 1];
    for row in &rows {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[n + m] -= &row[n + m];
    }
    let mut t = Tableau { rows, cost, basis: (n..n + m).collect(), n_orig: n };
    t.optimize(n + m);

    let phase1 = -t.cost[n + m].clone();
    if phase1.is_positive() {
        // cost[art_i] = 1 - y_i for the flipped system.
        let farkas = (0..m)
            .map(|i| {
                let y = Q::one() - &t.cost[n + i];
                if flip[i] { -y } else { y }
            })
            .collect();
        return StdOutcome::Infeasible { farkas };
    }

    // Drive zero-level artificials out of the basis where possible.
    for r in 0..m {
        if t.basis[r] < n {
            continue;
        }
        if let Some(j) = (0..n).find(|&j| !t.rows[r][j].is_zero()) {
            t.pivot(r, j);
        }
    }

    // Phase 2.
    let mut cost = vec![Q::zero(); n + m + 1];
    cost[..n].clone_from_slice(c);
    for (r, &bv) in t.basis.iter().enumerate() {
        if bv < n && !c[bv].is_zero() {
            let cb = c[bv].clone();
            for (j, slot) in cost.iter_mut().enumerate() {
                if !t.rows[r][j].is_zero() {
                    *slot -= &cb * &t.rows[r][j];
                }
            }
        }
    }
    t.cost = cost;
    if !t.optimize(t.n_orig) {
        return StdOutcome::Unbounded;
    }

    let rhs = n + m;
    let mut x = vec![Q::zero(); n];
    for (r, &bv) in t.basis.iter().enumerate() {
        if bv < n {
            x[bv] = t.rows[r][rhs].clone();
        }
    }
    let value = -t.cost[rhs].clone();
    let duals = (0..m)
        .map(|i| {
            let y = -t.cost[n + i].clone();
            if flip[i] { -y } else { y }
        })
        .collect();
    StdOutcome::Optimal { x, value, duals }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub relation: Relation,
    pub rhs: Q,
}

impl Constraint {
    pub fn new(coeffs: Vec<Q>, relation: Relation, rhs: Q) -> Self {
        Self { coeffs, relation, rhs }
    }
}

/// `maximize objective·x` over free variables `x` subject to `constraints`.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub objective: Vec<Q>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Q, point: Vec<Q> },
    Infeasible,
    Unbounded,
}

pub fn lp_solve(p: &LinearProgram) -> Result<LpOutcome> {
    let d = p.objective.len();
    if let Some(bad) = p.constraints.iter().find(|c| c.coeffs.len() != d) {
        return Err(Error::Dimension(format!(
            "constraint with {} coefficients in a {d}-variable program",
            bad.coeffs.len()
        )));
    }
    let slacks = p.constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    let n = 2 * d + slacks;
    let mut a = Vec::with_capacity(p.constraints.len());
    let mut b = Vec::with_capacity(p.constraints.len());
    let mut s = 2 * d;
    for con in &p.constraints {
        let mut row = vec![Q::zero(); n];
        for (j, v) in con.coeffs.iter().enumerate() {
            row[j] = v.clone();
            row[d + j] = -v.clone();
        }
        match con.relation {
            Relation::Le => {
                row[s] = Q::one();
                s += 1;
            }
            Relation::Ge => {
                row[s] = -Q::one();
                s += 1;
            }
            Relation::Eq => {}
        }
        a.push(row);
        b.push(con.rhs.clone());
    }
    let mut c = vec![Q::zero(); n];
    for (j, v) in p.objective.iter().enumerate() {
        c[j] = -v.clone();
        c[d + j] = v.clone();
    }
    Ok(match solve_standard(&a, &b, &c) {
        StdOutcome::Optimal { x, value, .. } => LpOutcome::Optimal {
            value: -value,
            point: (0..d).map(|j| &x[j] - &x[d + j]).collect(),
        },
        StdOutcome::Infeasible { .. } => LpOutcome::Infeasible,
        StdOutcome::Unbounded => LpOutcome::Unbounded,
    })
}

pub(crate) fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

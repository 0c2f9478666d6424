//! Membership in a monoid generated by finitely many vectors of `N^d`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::leq_i64;

/// Largest box the dense table may cover.
pub(crate) const MAX_BOX: u128 = 1 << 26;

/// Iterates the lattice points of `[0, bound_0] x ... x [0, bound_{d-1}]` in
/// lexicographic order.
pub(crate) struct BoxPoints {
    bound: Vec<i64>,
    next: Option<Vec<i64>>,
}

impl BoxPoints {
    pub(crate) fn new(bound: &[i64]) -> Self {
        let next = if bound.iter().all(|&b| b >= 0) { Some(vec![0; bound.len()]) } else { None };
        BoxPoints { bound: bound.to_vec(), next }
    }
}

impl Iterator for BoxPoints {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] < self.bound[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

pub(crate) fn box_volume(bound: &[i64]) -> u128 {
    bound.iter().map(|&b| (b.max(-1) + 1) as u128).product()
}

pub(crate) fn check_box(bound: &[i64]) -> Result<()> {
    let vol = box_volume(bound);
    if vol > MAX_BOX {
        return Err(Error::TooLarge(format!("box {bound:?} has {vol} points")));
    }
    Ok(())
}

/// Dense membership table of `<gens>` over the box `[0, bound]`.
pub(crate) struct MembershipTable {
    bound: Vec<i64>,
    #[cfg_attr(not(test), allow(dead_code))]
    strides: Vec<usize>,
    member: Vec<bool>,
}

impl MembershipTable {
    pub(crate) fn build(gens: &[Vec<i64>], bound: &[i64]) -> Result<Self> {
        check_box(bound)?;
        let d = bound.len();
        let mut strides = vec![1usize; d];
        for i in (0..d.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (bound[i + 1] as usize + 1);
        }
        let vol = box_volume(bound) as usize;
        let mut member = vec![false; vol];
        let useful: Vec<(&Vec<i64>, usize)> = gens
            .iter()
            .filter(|g| leq_i64(g, bound))
            .map(|g| (g, g.iter().zip(&strides).map(|(&x, &s)| x as usize * s).sum()))
            .collect();
        for (idx, p) in BoxPoints::new(bound).enumerate() {
            member[idx] = idx == 0 || useful.iter().any(|(g, off)| leq_i64(g, &p) && member[idx - off]);
        }
        Ok(MembershipTable { bound: bound.to_vec(), strides, member })
    }

    /// `None` when `p` lies outside the box (or has a negative coordinate).
    #[cfg(test)]
    pub(crate) fn contains(&self, p: &[i64]) -> Option<bool> {
        if p.iter().zip(&self.bound).any(|(&x, &b)| x < 0 || x > b) {
            return None;
        }
        let idx: usize = p.iter().zip(&self.strides).map(|(&x, &s)| x as usize * s).sum();
        Some(self.member[idx])
    }

    /// Points of the box outside the monoid, in lexicographic order.
    pub(crate) fn non_members(&self) -> Vec<Vec<i64>> {
        BoxPoints::new(&self.bound)
            .zip(&self.member)
            .filter(|(_, &m)| !m)
            .map(|(p, _)| p)
            .collect()
    }
}

/// Membership for one-off queries. Either a memoised depth-first search
/// over `v - g`, or, when cheaper, enumeration of the coefficients of the
/// generators outside a fixed basis of the column space, solving exactly
/// for the basis coefficients.
pub(crate) struct MemberSearch<'a> {
    gens: &'a [Vec<i64>],
    memo: HashMap<Vec<i64>, bool>,
    solver: Option<BasisSolver>,
}

/// `B c = w` for a full-column-rank basis `B`, via `c = adj (w_R) / det`
/// on an invertible square block of rows `R`.
struct BasisSolver {
    basis: Vec<usize>,
    free: Vec<usize>,
    rows: Vec<usize>,
    adj: Vec<Vec<i128>>,
    det: i128,
}

impl BasisSolver {
    fn new(gens: &[Vec<i64>]) -> Option<Self> {
        let d = gens.first()?.len();
        // small generators have the largest ranges, so they go into the basis
        let mut order: Vec<usize> = (0..gens.len()).collect();
        order.sort_by_key(|&i| (gens[i].iter().sum::<i64>(), i));
        let mut basis: Vec<usize> = Vec::new();
        for &i in &order {
            let mut trial = basis.clone();
            trial.push(i);
            if rank(gens, &trial) == trial.len() {
                basis = trial;
            }
        }
        let free: Vec<usize> = order.iter().copied().filter(|i| !basis.contains(i)).collect();
        let r = basis.len();
        let mut rows: Vec<usize> = Vec::new();
        for j in 0..d {
            let mut trial = rows.clone();
            trial.push(j);
            let t: Vec<Vec<i64>> = basis.iter().map(|&i| trial.iter().map(|&k| gens[i][k]).collect()).collect();
            if rank(&t, &(0..r).collect::<Vec<_>>()) == trial.len() {
                rows = trial;
            }
        }
        // square block: entry (a, b) = gens[basis[b]][rows[a]]
        let block: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|&j| basis.iter().map(|&i| BigRational::from_integer(gens[i][j].into())).collect())
            .collect();
        let inv = invert(block)?;
        let det = inv.iter().flatten().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        let adj = inv
            .iter()
            .map(|row| row.iter().map(|q| (q * BigRational::from_integer(det.clone())).to_integer().to_i128()).collect())
            .collect::<Option<Vec<Vec<i128>>>>()?;
        Some(BasisSolver { basis, free, rows, adj, det: det.to_i128()? })
    }

    fn cost(&self, gens: &[Vec<i64>], v: &[i64]) -> u128 {
        self.free.iter().fold(1u128, |acc, &i| acc.saturating_mul(range(&gens[i], v) as u128 + 1))
    }

    fn contains(&self, gens: &[Vec<i64>], v: &[i64]) -> bool {
        self.enumerate(gens, 0, &mut v.to_vec())
    }

    fn enumerate(&self, gens: &[Vec<i64>], k: usize, w: &mut Vec<i64>) -> bool {
        if k == self.free.len() {
            return self.solve(gens, w);
        }
        let f = &gens[self.free[k]];
        let start = w.clone();
        let found = loop {
            if self.enumerate(gens, k + 1, w) {
                break true;
            }
            w.iter_mut().zip(f).for_each(|(a, b)| *a -= b);
            if w.iter().any(|&x| x < 0) {
                break false;
            }
        };
        *w = start;
        found
    }

    fn solve(&self, gens: &[Vec<i64>], w: &[i64]) -> bool {
        let mut c = Vec::with_capacity(self.basis.len());
        for row in &self.adj {
            let num: i128 = row.iter().zip(&self.rows).map(|(a, &j)| a * w[j] as i128).sum();
            if num < 0 || num % self.det != 0 {
                return false;
            }
            c.push(num / self.det);
        }
        (0..w.len()).all(|j| {
            let sum: i128 = c.iter().zip(&self.basis).map(|(ci, &i)| ci * gens[i][j] as i128).sum();
            sum == w[j] as i128
        })
    }
}

/// `max {c : c g <= v}`.
fn range(g: &[i64], v: &[i64]) -> i64 {
    g.iter().zip(v).filter(|(&x, _)| x > 0).map(|(&x, &y)| y / x).min().unwrap_or(0)
}

fn rank(gens: &[Vec<i64>], cols: &[usize]) -> usize {
    let d = gens.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> =
        cols.iter().map(|&i| (0..d).map(|j| BigRational::from_integer(gens[i][j].into())).collect()).collect();
    let mut r = 0;
    for c in 0..d {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            let f = &m[i][c] / &m[r][c];
            for k in c..d {
                let t = &f * &m[r][k];
                m[i][k] -= t;
            }
        }
        r += 1;
    }
    r
}

fn invert(mut m: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        inv.swap(c, p);
        let f = m[c][c].recip();
        m[c].iter_mut().for_each(|x| *x *= &f);
        inv[c].iter_mut().for_each(|x| *x *= &f);
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..n {
                    let (t, u) = (&f * &m[c][k], &f * &inv[c][k]);
                    m[i][k] -= t;
                    inv[i][k] -= u;
                }
            }
        }
    }
    Some(inv)
}

impl<'a> MemberSearch<'a> {
    pub(crate) fn new(gens: &'a [Vec<i64>]) -> Self {
        MemberSearch { gens, memo: HashMap::new(), solver: BasisSolver::new(gens) }
    }

    pub(crate) fn contains(&mut self, v: &[i64]) -> bool {
        if v.iter().any(|&x| x < 0) {
            return false;
        }
        if let Some(&known) = self.memo.get(v) {
            return known;
        }
        if let Some(solver) = &self.solver {
            let down_set = v.iter().fold(1u128, |acc, &x| acc.saturating_mul(x as u128 + 1));
            if solver.cost(self.gens, v) < down_set {
                let found = solver.contains(self.gens, v);
                self.memo.insert(v.to_vec(), found);
                return found;
            }
        }
        self.search(v)
    }

    fn search(&mut self, v: &[i64]) -> bool {
        enum Step {
            Found,
            Descend(Vec<i64>),
            Exhausted,
        }
        // explicit stack of (point, next generator index)
        let mut stack: Vec<(Vec<i64>, usize)> = vec![(v.to_vec(), 0)];
        while let Some((p, next)) = stack.last_mut() {
            let step = if p.iter().all(|&x| x == 0) {
                Step::Found
            } else {
                let mut step = Step::Exhausted;
                while *next < self.gens.len() {
                    let g = &self.gens[*next];
                    *next += 1;
                    if !leq_i64(g, p) {
                        continue;
                    }
                    let c: Vec<i64> = p.iter().zip(g).map(|(a, b)| a - b).collect();
                    match self.memo.get(&c) {
                        Some(true) => {
                            step = Step::Found;
                            break;
                        }
                        Some(false) => continue,
                        None => {
                            step = Step::Descend(c);
                            break;
                        }
                    }
                }
                step
            };
            match step {
                Step::Found => {
                    for (q, _) in stack.drain(..) {
                        self.memo.insert(q, true);
                    }
                    return true;
                }
                Step::Descend(c) => stack.push((c, 0)),
                Step::Exhausted => {
                    let (p, _) = stack.pop().expect("non-empty");
                    self.memo.insert(p, false);
                }
            }
        }
        self.memo[v]
    }
}

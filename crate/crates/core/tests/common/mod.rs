//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library except for converting its values.
#![allow(dead_code)]

use std::collections::BTreeSet;

use semigap::IntVector;

pub type P = Vec<i64>;

pub fn small(vs: &[IntVector]) -> Vec<P> {
    vs.iter().map(|v| v.to_i64().unwrap()).collect()
}

pub fn vs(rows: &[&[i64]]) -> Vec<IntVector> {
    rows.iter().map(|r| IntVector::from_i64s(r)).collect()
}

pub fn sorted(mut v: Vec<P>) -> Vec<P> {
    v.sort();
    v
}

/// All points of `[0, bound_0] x ... x [0, bound_{d-1}]`.
pub fn box_points(bound: &[i64]) -> Vec<P> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p: P| {
                (0..=b).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Dense membership table of the monoid generated by `gens` over a box,
/// filled in lexicographic order: `p` is a member iff `p = 0` or `p - g` is
/// a member for some generator `g`.
pub struct BoxTable {
    bound: Vec<i64>,
    strides: Vec<usize>,
    bits: Vec<bool>,
}

impl BoxTable {
    pub fn new(gens: &[P], bound: &[i64]) -> Self {
        let mut strides = vec![1usize; bound.len()];
        for k in (0..bound.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * (bound[k + 1] as usize + 1);
        }
        let size = strides.first().map_or(1, |s| s * (bound[0] as usize + 1));
        let mut t = BoxTable { bound: bound.to_vec(), strides, bits: vec![false; size] };
        let points = box_points(bound);
        for p in &points {
            let member = p.iter().all(|&x| x == 0)
                || gens.iter().any(|g| {
                    let q: P = p.iter().zip(g).map(|(a, b)| a - b).collect();
                    t.get(&q)
                });
            let i = t.index(p);
            t.bits[i] = member;
        }
        t
    }

    fn index(&self, p: &[i64]) -> usize {
        p.iter().zip(&self.strides).map(|(&x, s)| x as usize * s).sum()
    }

    /// False outside the box.
    pub fn get(&self, p: &[i64]) -> bool {
        p.iter().zip(&self.bound).all(|(&x, &b)| (0..=b).contains(&x)) && self.bits[self.index(p)]
    }

    pub fn members(&self) -> Vec<P> {
        box_points(&self.bound).into_iter().filter(|p| self.get(p)).collect()
    }
}

/// `S \ (base + S)` inside the box.
pub fn ideal_complement_in_box(s_gens: &[P], base: &[P], bound: &[i64]) -> BTreeSet<P> {
    let s = BoxTable::new(s_gens, bound);
    s.members()
        .into_iter()
        .filter(|p| !base.iter().any(|x| s.get(&p.iter().zip(x).map(|(a, b)| a - b).collect::<P>())))
        .collect()
}

/// `C \ S` inside the box.
pub fn relative_in_box(c_gens: &[P], s_gens: &[P], bound: &[i64]) -> BTreeSet<P> {
    let s = BoxTable::new(s_gens, bound);
    BoxTable::new(c_gens, bound).members().into_iter().filter(|p| !s.get(p)).collect()
}

/// Finiteness by box growth: the set seen in `[0, 2b]` is declared finite
/// when it already lies in `[0, b]`, and returned in that case.
pub fn finite_by_growth(b: &[i64], set: impl Fn(&[i64]) -> BTreeSet<P>) -> Option<BTreeSet<P>> {
    let doubled: Vec<i64> = b.iter().map(|x| 2 * x).collect();
    let big = set(&doubled);
    big.iter().all(|p| p.iter().zip(b).all(|(x, y)| x <= y)).then_some(big)
}

/// Is `x` a non-negative integer combination of `basis`? Tries every
/// coefficient of all vectors but one, and divides for the last.
pub fn is_combination(basis: &[P], x: &[i64]) -> bool {
    fn range(h: &[i64], x: &[i64]) -> i64 {
        h.iter().zip(x).filter(|(&a, _)| a > 0).map(|(&a, &b)| b / a).min().unwrap_or(0)
    }
    fn go(basis: &[&P], r: &mut P) -> bool {
        match basis {
            [] => r.iter().all(|&v| v == 0),
            [h] => {
                let c = range(h, r);
                r.iter().zip(h.iter()).all(|(&v, &a)| v == c * a)
            }
            [h, rest @ ..] => {
                let mut found = false;
                let mut taken = 0;
                loop {
                    if go(rest, r) {
                        found = true;
                        break;
                    }
                    r.iter_mut().zip(h.iter()).for_each(|(a, b)| *a -= b);
                    taken += 1;
                    if r.iter().any(|&v| v < 0) {
                        break;
                    }
                }
                r.iter_mut().zip(h.iter()).for_each(|(a, b)| *a += taken * b);
                found
            }
        }
    }
    if x.iter().any(|&v| v < 0) {
        return false;
    }
    let mut order: Vec<&P> = basis.iter().filter(|h| h.iter().any(|&v| v != 0)).collect();
    order.sort_by_key(|h| range(h, x));
    go(&order, &mut x.to_vec())
}

fn mul(rows: &[P], x: &[i64]) -> P {
    rows.iter().map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Soundness, pairwise incomparability and completeness on a box for the
/// output of the solver on `rows x = rhs` (`rhs = None` for the Hilbert
/// basis of the homogeneous system). The box side is the largest keeping
/// at most `budget` points.
pub fn check_solver_output(rows: &[P], m: usize, rhs: Option<&[i64]>, out: &[P], budget: usize) -> Result<(), String> {
    let zero = vec![0; rows.len()];
    let target = rhs.unwrap_or(&zero);
    for x in out {
        if x.len() != m || x.iter().any(|&v| v < 0) {
            return Err(format!("{x:?} is not in N^{m}"));
        }
        if mul(rows, x) != target {
            return Err(format!("{x:?} does not solve the system"));
        }
        if rhs.is_none() && x.iter().all(|&v| v == 0) {
            return Err("zero vector in a Hilbert basis".into());
        }
    }
    for (i, x) in out.iter().enumerate() {
        for (j, y) in out.iter().enumerate() {
            if i != j && leq(x, y) {
                return Err(format!("{x:?} <= {y:?}"));
            }
        }
    }
    let mut side = 1i64;
    while ((side + 2) as f64).powi(m as i32) <= budget as f64 {
        side += 1;
    }
    for x in box_points(&vec![side; m]) {
        if mul(rows, &x) != target {
            continue;
        }
        let covered = match rhs {
            None => is_combination(out, &x),
            Some(_) => out.iter().any(|y| leq(y, &x)),
        };
        if !covered {
            return Err(format!("box solution {x:?} is not covered"));
        }
    }
    Ok(())
}

//! Non-negative integer solutions of linear Diophantine systems.
//!
//! Hilbert bases are computed one equation at a time, starting from the unit
//! vectors of `N^m`: each step completes the Hilbert basis of the previous
//! solution monoid against the next row by a sign-compatible completion.
//!
//! The inhomogeneous system `A x = b` is solved as the homogeneous system
//! `[A | -b] (x, z) = 0` with the extra coordinate capped at one; its
//! solutions with `z = 1` are exactly the minimal solutions of `A x = b`.
//!
//! Arithmetic runs on `i64` with checked operations. If any operation would
//! overflow, the whole search is repeated on `BigInt`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{check_dims, IntMatrix, IntVector};
use crate::par;

/// Hilbert basis of `{x in N^m : A x = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousSolutionBasis {
    pub system: IntMatrix,
    /// Lexicographically sorted.
    pub basis: Vec<IntVector>,
}

/// Minimal non-negative solutions of `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InhomogeneousMinimalSolutions {
    pub system: IntMatrix,
    pub rhs: IntVector,
    /// Lexicographically sorted; empty when the system has no solution.
    pub minimals: Vec<IntVector>,
}

/// Common view over both solution sets.
pub trait SolutionSet {
    fn width(&self) -> usize;
    fn vectors(&self) -> &[IntVector];
}

impl SolutionSet for HomogeneousSolutionBasis {
    fn width(&self) -> usize {
        self.system.cols()
    }
    fn vectors(&self) -> &[IntVector] {
        &self.basis
    }
}

impl SolutionSet for InhomogeneousMinimalSolutions {
    fn width(&self) -> usize {
        self.system.cols()
    }
    fn vectors(&self) -> &[IntVector] {
        &self.minimals
    }
}

pub fn hilbert_basis(a: &IntMatrix) -> Result<HomogeneousSolutionBasis> {
    let cols: Vec<IntVector> = (0..a.cols()).map(|c| a.column(c)).collect();
    let basis = hilbert_basis_of_columns(&cols, a.rows())?;
    Ok(HomogeneousSolutionBasis {
        system: a.clone(),
        basis: basis.into_iter().map(IntVector::from).collect(),
    })
}

pub fn minimal_solutions(a: &IntMatrix, b: &IntVector) -> Result<InhomogeneousMinimalSolutions> {
    check_dims(a.rows(), b.dim())?;
    let cols: Vec<IntVector> = (0..a.cols()).map(|c| a.column(c)).collect();
    let minimals = minimal_solutions_of_columns(&cols, b)?;
    Ok(InhomogeneousMinimalSolutions {
        system: a.clone(),
        rhs: b.clone(),
        minimals: minimals.into_iter().map(IntVector::from).collect(),
    })
}

/// The `k`-th coordinate of every vector in the set, in set order.
pub fn axis_projection<S: SolutionSet + ?Sized>(set: &S, k: usize) -> Result<Vec<BigInt>> {
    if k >= set.width() {
        return Err(Error::IndexOutOfRange { index: k, len: set.width() });
    }
    Ok(set.vectors().iter().map(|v| v.coords()[k].clone()).collect())
}

/// Hilbert basis of the system whose matrix has the given columns.
pub(crate) fn hilbert_basis_of_columns(cols: &[IntVector], rows: usize) -> Result<Vec<Vec<i64>>> {
    if cols.is_empty() {
        return Err(Error::Empty("system has no columns"));
    }
    for c in cols {
        check_dims(rows, c.dim())?;
    }
    solve(cols, None)
}

/// Minimal solutions of `sum x_j cols[j] = rhs`.
pub(crate) fn minimal_solutions_of_columns(cols: &[IntVector], rhs: &IntVector) -> Result<Vec<Vec<i64>>> {
    let rows = rhs.dim();
    for c in cols {
        check_dims(rows, c.dim())?;
    }
    let mut extended = cols.to_vec();
    extended.push(rhs.neg());
    let aux = cols.len();
    let found = solve(&extended, Some(aux))?;
    Ok(found
        .into_iter()
        .filter(|x| x[aux] == 1)
        .map(|mut x| {
            x.truncate(aux);
            x
        })
        .collect())
}

/// Solves with repeated columns merged, then lifts. If columns `j` and `k`
/// are equal, the solutions (and the irreducible or minimal ones) are
/// exactly the splittings of those of the merged system, so a merged
/// coefficient `t` becomes every `(s, t - s)`.
fn solve(cols: &[IntVector], aux: Option<usize>) -> Result<Vec<Vec<i64>>> {
    let mut distinct: Vec<IntVector> = Vec::new();
    let mut group_of: Vec<usize> = Vec::with_capacity(cols.len());
    let mut aux_group = None;
    for (j, c) in cols.iter().enumerate() {
        let found = if Some(j) == aux {
            None
        } else {
            (0..distinct.len()).find(|&g| Some(g) != aux_group && distinct[g] == *c)
        };
        let g = found.unwrap_or_else(|| {
            distinct.push(c.clone());
            distinct.len() - 1
        });
        if Some(j) == aux {
            aux_group = Some(g);
        }
        group_of.push(g);
    }
    if distinct.len() == cols.len() {
        return solve_distinct(cols, aux);
    }
    let merged = solve_distinct(&distinct, aux.map(|a| group_of[a]))?;
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); distinct.len()];
    for (j, &g) in group_of.iter().enumerate() {
        members[g].push(j);
    }
    let mut out = Vec::new();
    for r in &merged {
        let mut partial = vec![vec![0i64; cols.len()]];
        for (g, js) in members.iter().enumerate() {
            partial = partial.into_iter().flat_map(|x| splittings(x, js, r[g])).collect();
        }
        out.extend(partial);
    }
    out.sort();
    Ok(out)
}

/// Every way of writing `t` as a sum over the coordinates `js` of `x`.
fn splittings(x: Vec<i64>, js: &[usize], t: i64) -> Vec<Vec<i64>> {
    match js {
        [] => vec![x],
        [j] => {
            let mut x = x;
            x[*j] = t;
            vec![x]
        }
        [j, rest @ ..] => (0..=t)
            .flat_map(|s| {
                let mut y = x.clone();
                y[*j] = s;
                splittings(y, rest, t - s)
            })
            .collect(),
    }
}

/// Runs the completion on `i64`, escalating to `BigInt` on overflow.
fn solve_distinct(cols: &[IntVector], aux: Option<usize>) -> Result<Vec<Vec<i64>>> {
    let rows = cols.first().map_or(0, IntVector::dim);
    let big: Vec<Vec<BigInt>> = (0..rows).map(|r| cols.iter().map(|c| c.coords()[r].clone()).collect()).collect();
    let big = echelon_rows(big);
    let small: Option<Vec<Vec<i64>>> = big.iter().map(|r| r.iter().map(ToPrimitive::to_i64).collect()).collect();
    if let Some(found) = small.and_then(|small| complete(&small, cols.len(), aux)) {
        return Ok(found);
    }
    let found = complete(&big, cols.len(), aux).expect("BigInt arithmetic cannot overflow");
    found
        .into_iter()
        .map(|x| x.iter().map(|v| v.to_i64().ok_or_else(|| Error::TooLarge(v.to_string()))).collect())
        .collect()
}

/// Primitive integer rows of the reduced row echelon form. They span the
/// same rational row space, so the solutions in `N^m` are unchanged, and
/// each row involves only its pivot and the free columns.
fn echelon_rows(rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> =
        rows.into_iter().map(|r| r.into_iter().map(BigRational::from_integer).collect()).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        m[rank].iter_mut().for_each(|x| *x *= &inv);
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    let t = &f * &m[rank][c];
                    m[r][c] -= t;
                }
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    m.into_iter()
        .map(|row| {
            let den = row.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
            let ints: Vec<BigInt> = row.iter().map(|q| (q * &den).to_integer()).collect();
            let g = ints.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
            ints.into_iter().map(|v| v / &g).collect()
        })
        .collect()
}

trait Scalar: Clone + Ord + Eq + Hash + Zero + One + Send + Sync {
    fn checked_add_(&self, other: &Self) -> Option<Self>;
    fn checked_mul_(&self, other: &Self) -> Option<Self>;
}

impl Scalar for i64 {
    fn checked_add_(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn checked_mul_(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
}

impl Scalar for BigInt {
    fn checked_add_(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn checked_mul_(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> Option<T> {
    let mut acc = T::zero();
    for (p, q) in a.iter().zip(b) {
        acc = acc.checked_add_(&p.checked_mul_(q)?)?;
    }
    Some(acc)
}

fn add_vec<T: Scalar>(a: &[T], b: &[T]) -> Option<Vec<T>> {
    a.iter().zip(b).map(|(p, q)| p.checked_add_(q)).collect()
}

fn leq<T: Scalar>(a: &[T], b: &[T]) -> bool {
    a.iter().zip(b).all(|(p, q)| p <= q)
}

/// Hilbert basis of `{x in N^m : rows x = 0}`, restricted to `x_aux <= 1`
/// when `aux` is given, or `None` on arithmetic overflow.
fn complete<T: Scalar>(rows: &[Vec<T>], m: usize, aux: Option<usize>) -> Option<Vec<Vec<T>>> {
    let mut gens: Vec<Vec<T>> = (0..m)
        .map(|j| (0..m).map(|k| if j == k { T::one() } else { T::zero() }).collect())
        .collect();
    let mut pending: Vec<&Vec<T>> = rows.iter().filter(|r| !r.iter().all(Zero::is_zero)).collect();
    while !pending.is_empty() {
        // the row splitting the current basis into the fewest mixed pairs
        let mut best = (usize::MAX, 0);
        for (k, row) in pending.iter().enumerate() {
            let (mut p, mut n) = (0usize, 0usize);
            for g in &gens {
                match dot(row, g)?.cmp(&T::zero()) {
                    Ordering::Greater => p += 1,
                    Ordering::Less => n += 1,
                    Ordering::Equal => {}
                }
            }
            if p * n < best.0 {
                best = (p * n, k);
            }
        }
        let row = pending.swap_remove(best.1);
        gens = add_equation(gens, row, aux)?;
    }
    gens.sort();
    Some(gens)
}

struct Found<T> {
    x: Vec<T>,
    value: T,
    support: u64,
}

/// Bit `i % 64` is set when some coordinate `i` is positive. `w <= z`
/// forces `support(w) & !support(z) == 0`.
fn support<T: Scalar>(x: &[T]) -> u64 {
    x.iter()
        .enumerate()
        .filter(|(_, v)| **v > T::zero())
        .fold(0, |m, (i, _)| m | 1 << (i % 64))
}

fn reduces<T: Scalar>(w: &Found<T>, z: &[T], mask: u64) -> bool {
    w.support & !mask == 0 && leq(&w.x, z)
}

/// Given the Hilbert basis `gens` of a monoid `M = {x in N^m : A x = 0}`,
/// returns the Hilbert basis of `M ∩ {row · x = 0}`.
///
/// Candidates are processed by increasing coordinate sum. A candidate `z`
/// is dropped when some `w` found earlier satisfies `w <= z` with
/// `row · w` between zero and `row · z`. Each surviving candidate with
/// non-zero value is added to every survivor of the opposite sign.
fn add_equation<T: Scalar>(gens: Vec<Vec<T>>, row: &[T], aux: Option<usize>) -> Option<Vec<Vec<T>>> {
    let mut zero: Vec<Found<T>> = Vec::new();
    let mut pos: Vec<Found<T>> = Vec::new();
    let mut neg: Vec<Found<T>> = Vec::new();
    let mut queue: BTreeMap<T, Vec<Vec<T>>> = BTreeMap::new();
    let degree = |x: &[T]| x.iter().try_fold(T::zero(), |a, b| a.checked_add_(b));
    for g in gens {
        queue.entry(degree(&g)?).or_default().push(g);
    }
    while let Some((_, mut batch)) = queue.pop_first() {
        batch.sort_unstable();
        batch.dedup();
        let (zero_ref, pos_ref, neg_ref) = (&zero, &pos, &neg);
        let checked: Vec<Option<Option<Found<T>>>> = par::map(&batch, |z| {
            let value = dot(row, z)?;
            let mask = support(z);
            let reducible = zero_ref.iter().any(|w| reduces(w, z, mask))
                || match value.cmp(&T::zero()) {
                    Ordering::Greater => pos_ref.iter().any(|w| w.value <= value && reduces(w, z, mask)),
                    Ordering::Less => neg_ref.iter().any(|w| w.value >= value && reduces(w, z, mask)),
                    Ordering::Equal => false,
                };
            Some((!reducible).then(|| Found { x: z.clone(), value, support: mask }))
        });
        for item in checked {
            let Some(found) = item? else { continue };
            let partners = match found.value.cmp(&T::zero()) {
                Ordering::Equal => {
                    zero.push(found);
                    continue;
                }
                Ordering::Greater => &neg,
                Ordering::Less => &pos,
            };
            for other in partners {
                let sum = add_vec(&found.x, &other.x)?;
                if aux.is_some_and(|a| sum[a] > T::one()) {
                    continue;
                }
                queue.entry(degree(&sum)?).or_default().push(sum);
            }
            if found.value > T::zero() {
                pos.push(found);
            } else {
                neg.push(found);
            }
        }
    }
    Some(zero.into_iter().map(|f| f.x).collect())
}

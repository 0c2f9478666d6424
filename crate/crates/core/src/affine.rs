//! Affine semigroups in `N^d`, cofiniteness of a submonoid `S` inside an
//! ambient affine semigroup `C`, and enumeration of `C \ S`.
//!
//! The ambient generators `g_1..g_n` define the epimorphism
//! `f_C: N^n -> C, x -> sum x_i g_i`. The complement `C \ S` is the image of
//! the finite set `N^n \ f_C^{-1}(S)`, and `f_C^{-1}(S)` is generated by the
//! first `n` coordinates of the Hilbert basis of `[g_1..g_n, -s_1..-s_t]`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::cone::in_cone;
use crate::diophantine::{hilbert_basis_of_columns, minimal_solutions_of_columns};
use crate::error::{Error, Result};
use crate::lattice::{check_dims, IntVector};
use crate::membership::{check_box, MemberSearch, MembershipTable};
use crate::numerical::{minimal_generators_u64, NumericalSemigroup};
use crate::par;

/// A finitely generated submonoid of `N^d`, kept with the generator list
/// exactly as supplied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineSemigroup {
    dim: usize,
    generators: Vec<IntVector>,
}

impl AffineSemigroup {
    /// Rejects an empty list, mixed dimensions, negative coordinates and the
    /// zero vector.
    pub fn new(generators: Vec<IntVector>) -> Result<Self> {
        let dim = generators.first().ok_or(Error::Empty("semigroup generators"))?.dim();
        if dim == 0 {
            return Err(Error::Precondition("dimension must be positive".into()));
        }
        for g in &generators {
            check_dims(dim, g.dim())?;
            g.require_nonnegative()?;
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
        }
        Ok(AffineSemigroup { dim, generators })
    }

    pub fn from_i64s(generators: &[&[i64]]) -> Result<Self> {
        Self::new(generators.iter().map(|g| IntVector::from_i64s(g)).collect())
    }

    /// `N^d` with the standard basis.
    pub fn orthant(dim: usize) -> Self {
        AffineSemigroup { dim, generators: (0..dim).map(|i| IntVector::unit(dim, i)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub(crate) fn small(&self) -> Result<Vec<Vec<i64>>> {
        self.generators.iter().map(IntVector::to_i64).collect()
    }

    /// The same monoid presented by its minimal generators.
    pub fn minimized(&self) -> Result<AffineSemigroup> {
        Ok(AffineSemigroup { dim: self.dim, generators: minimal_generators(&self.generators)? })
    }

    /// `f(x) = sum x_i g_i`.
    pub fn image(&self, x: &IntVector) -> Result<IntVector> {
        check_dims(self.len(), x.dim())?;
        let mut acc = IntVector::zero(self.dim);
        for (c, g) in x.coords().iter().zip(&self.generators) {
            acc = acc.add(&g.scale(c))?;
        }
        Ok(acc)
    }

    pub(crate) fn check_point(&self, v: &IntVector) -> Result<()> {
        check_dims(self.dim, v.dim())?;
        v.require_nonnegative()
    }
}

pub(crate) fn image_i64(gens: &[Vec<i64>], x: &[i64]) -> Result<Vec<i64>> {
    let d = gens.first().map_or(0, Vec::len);
    let mut acc = vec![0i64; d];
    for (&c, g) in x.iter().zip(gens) {
        for (a, &gi) in acc.iter_mut().zip(g) {
            *a = c
                .checked_mul(gi)
                .and_then(|t| a.checked_add(t))
                .ok_or_else(|| Error::TooLarge(format!("image of {x:?}")))?;
        }
    }
    Ok(acc)
}

/// Every `x in N^t` with `sum x_j n_j = v`, sorted lexicographically.
pub fn factorizations(s: &AffineSemigroup, v: &IntVector) -> Result<Vec<IntVector>> {
    s.check_point(v)?;
    let gens = s.small()?;
    let target = v.to_i64()?;
    Ok(factorizations_i64(&gens, &target).into_iter().map(IntVector::from).collect())
}

pub(crate) fn factorizations_i64(gens: &[Vec<i64>], v: &[i64]) -> Vec<Vec<i64>> {
    struct Walk<'a> {
        gens: &'a [Vec<i64>],
        // (generator index, remainder) -> remainder is representable by gens[index..]
        feasible: HashMap<(usize, Vec<i64>), bool>,
        current: Vec<i64>,
        out: Vec<Vec<i64>>,
    }
    impl Walk<'_> {
        fn go(&mut self, k: usize, rem: Vec<i64>) -> bool {
            if k == self.gens.len() {
                let done = rem.iter().all(|&x| x == 0);
                if done {
                    self.out.push(self.current.clone());
                }
                return done;
            }
            if let Some(false) = self.feasible.get(&(k, rem.clone())) {
                return false;
            }
            let g = &self.gens[k];
            // largest multiple of g that fits under rem
            let cap = g
                .iter()
                .zip(&rem)
                .filter(|(&gi, _)| gi > 0)
                .map(|(&gi, &r)| r / gi)
                .min()
                .unwrap_or(0);
            let mut any = false;
            let mut r = rem.clone();
            for c in 0..=cap {
                self.current[k] = c;
                if self.go(k + 1, r.clone()) {
                    any = true;
                }
                for (ri, gi) in r.iter_mut().zip(g) {
                    *ri -= gi;
                }
            }
            self.current[k] = 0;
            self.feasible.insert((k, rem), any);
            any
        }
    }
    let mut walk = Walk { gens, feasible: HashMap::new(), current: vec![0; gens.len()], out: Vec::new() };
    walk.go(0, v.to_vec());
    let mut out = walk.out;
    out.sort();
    out
}

pub fn member(s: &AffineSemigroup, v: &IntVector) -> Result<bool> {
    s.check_point(v)?;
    let gens = s.small()?;
    Ok(MemberSearch::new(&gens).contains(&v.to_i64()?))
}

/// `S ⊆ C`, checked on the generators of `S`.
pub fn is_subsemigroup(c: &AffineSemigroup, s: &AffineSemigroup) -> Result<bool> {
    check_dims(c.dim(), s.dim())?;
    let cg = c.small()?;
    let mut search = MemberSearch::new(&cg);
    for n in s.generators() {
        if !search.contains(&n.to_i64()?) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_contained(c: &AffineSemigroup, s: &AffineSemigroup) -> Result<()> {
    check_dims(c.dim(), s.dim())?;
    let cg = c.small()?;
    let mut search = MemberSearch::new(&cg);
    for n in s.generators() {
        if !search.contains(&n.to_i64()?) {
            return Err(Error::NotContained(n.to_string()));
        }
    }
    Ok(())
}

/// The unique minimal generating set of `<gens>`, sorted lexicographically.
pub fn minimal_generators(gens: &[IntVector]) -> Result<Vec<IntVector>> {
    let dim = gens.first().map_or(0, IntVector::dim);
    let mut small = Vec::with_capacity(gens.len());
    for g in gens {
        check_dims(dim, g.dim())?;
        g.require_nonnegative()?;
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        small.push(g.to_i64()?);
    }
    Ok(minimal_generators_i64(small).into_iter().map(IntVector::from).collect())
}

pub(crate) fn minimal_generators_i64(mut gens: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    gens.retain(|g| g.iter().any(|&x| x != 0));
    gens.sort_by_key(|g| (g.iter().sum::<i64>(), g.clone()));
    gens.dedup();
    // a summand of g has strictly smaller coordinate sum, so g only needs
    // testing against the generators already kept
    let mut kept: Vec<Vec<i64>> = Vec::new();
    for g in gens {
        if !MemberSearch::new(&kept).contains(&g) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// Extreme rays of `cone(S)`, one minimal generator per ray (the one with the
/// smallest coordinate sum), sorted lexicographically.
pub fn extreme_rays(s: &AffineSemigroup) -> Result<Vec<IntVector>> {
    let mins = minimal_generators_i64(s.small()?);
    Ok(extreme_rays_i64(&mins).into_iter().map(IntVector::from).collect())
}

pub(crate) fn extreme_rays_i64(mins: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let primitive = |g: &Vec<i64>| {
        let d = crate::lattice::gcd_i64(g.iter().copied());
        g.iter().map(|x| x / d).collect::<Vec<i64>>()
    };
    // one representative per ray
    let mut reps: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut order: Vec<&Vec<i64>> = mins.iter().collect();
    order.sort_by_key(|g| (g.iter().sum::<i64>(), (*g).clone()));
    for g in order {
        let dir = primitive(g);
        if !reps.iter().any(|(d, _)| *d == dir) {
            reps.push((dir, g.clone()));
        }
    }
    let mut rays: Vec<Vec<i64>> = reps
        .iter()
        .enumerate()
        .filter(|(i, (dir, _))| {
            let others: Vec<Vec<i64>> =
                reps.iter().enumerate().filter(|(j, _)| j != i).map(|(_, (d, _))| d.clone()).collect();
            !in_cone(dir, &others)
        })
        .map(|(_, (_, g))| g.clone())
        .collect();
    rays.sort();
    rays
}

/// `S_i = {λ : λ g_i ∈ S}`, or why it is not a numerical semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxisSemigroup {
    Numerical(NumericalSemigroup),
    /// The multiples of `g_i` lying in `S` have this gcd (zero when only the
    /// trivial multiple does).
    NotNumerical { gcd: BigInt },
}

impl AxisSemigroup {
    pub fn is_numerical(&self) -> bool {
        matches!(self, AxisSemigroup::Numerical(_))
    }
}

/// Minimal `k` with `g_i + k g_j ∈ S`, per ordered pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixingEntry {
    pub i: usize,
    pub j: usize,
    pub coefficient: Option<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofinitenessReport {
    pub cofinite: bool,
    /// One entry per generator of `C`.
    pub axis_semigroups: Vec<AxisSemigroup>,
    /// Ordered pairs `(i, j)`, `i != j`, row-major.
    pub mixing: Vec<MixingEntry>,
}

impl CofinitenessReport {
    pub fn mixing_coefficient(&self, i: usize, j: usize) -> Option<&BigInt> {
        self.mixing.iter().find(|m| m.i == i && m.j == j)?.coefficient.as_ref()
    }
}

fn check_index(c: &AffineSemigroup, i: usize) -> Result<()> {
    if i < c.len() {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i, len: c.len() })
    }
}

/// The values `λ` in the Hilbert basis of `[n_1..n_t, -g]` (last coordinate).
fn multiples_in(s: &AffineSemigroup, g: &IntVector) -> Result<Vec<i64>> {
    let mut cols = s.generators().to_vec();
    cols.push(g.neg());
    let basis = hilbert_basis_of_columns(&cols, s.dim())?;
    let last = cols.len() - 1;
    Ok(basis.into_iter().map(|x| x[last]).filter(|&l| l > 0).collect())
}

pub fn axis_semigroup(c: &AffineSemigroup, s: &AffineSemigroup, i: usize) -> Result<AxisSemigroup> {
    check_index(c, i)?;
    require_contained(c, s)?;
    axis_semigroup_unchecked(c, s, i)
}

fn axis_semigroup_unchecked(c: &AffineSemigroup, s: &AffineSemigroup, i: usize) -> Result<AxisSemigroup> {
    let lambdas = multiples_in(s, &c.generators()[i])?;
    let g = crate::lattice::gcd_i64(lambdas.iter().copied());
    if g != 1 {
        return Ok(AxisSemigroup::NotNumerical { gcd: BigInt::from(g) });
    }
    let values: Vec<u64> = lambdas.iter().map(|&l| l as u64).collect();
    Ok(AxisSemigroup::Numerical(NumericalSemigroup::new(&values)?))
}

/// `min {k : g_i + k g_j ∈ S}`, `None` when no such `k` exists.
pub fn mixing_coefficient(c: &AffineSemigroup, s: &AffineSemigroup, i: usize, j: usize) -> Result<Option<BigInt>> {
    check_index(c, i)?;
    check_index(c, j)?;
    if i == j {
        return Err(Error::Precondition("mixing coefficient needs i != j".into()));
    }
    require_contained(c, s)?;
    mixing_coefficient_unchecked(c, s, i, j)
}

fn mixing_coefficient_unchecked(
    c: &AffineSemigroup,
    s: &AffineSemigroup,
    i: usize,
    j: usize,
) -> Result<Option<BigInt>> {
    let gi = &c.generators()[i];
    if member(s, gi)? {
        return Ok(Some(BigInt::zero()));
    }
    let mut cols = s.generators().to_vec();
    cols.push(c.generators()[j].neg());
    let last = cols.len() - 1;
    let sols = minimal_solutions_of_columns(&cols, gi)?;
    Ok(sols.iter().map(|x| x[last]).min().map(BigInt::from))
}

/// Decides whether `C \ S` is finite from the two generator conditions and
/// reports every witness.
pub fn is_c_cofinite(c: &AffineSemigroup, s: &AffineSemigroup) -> Result<CofinitenessReport> {
    require_contained(c, s)?;
    let n = c.len();
    let axis_semigroups = par::map_range(n, |i| axis_semigroup_unchecked(c, s, i))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mixing = par::map(&pairs, |&(i, j)| {
        mixing_coefficient_unchecked(c, s, i, j).map(|coefficient| MixingEntry { i, j, coefficient })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let cofinite =
        axis_semigroups.iter().all(AxisSemigroup::is_numerical) && mixing.iter().all(|m| m.coefficient.is_some());
    Ok(CofinitenessReport { cofinite, axis_semigroups, mixing })
}

/// Per-axis and per-pair data of a generating set of a submonoid of `N^n`.
struct OrthantData {
    n: usize,
    /// gcd-one axis semigroups (`None` when condition (1) fails on that axis)
    axis: Vec<Option<NumericalSemigroup>>,
    /// `pair[j][i]`: least `m` with `e_j + m e_i` in the set
    pair: Vec<Vec<Option<i64>>>,
}

impl OrthantData {
    fn new(b: &[Vec<i64>], n: usize) -> Result<Self> {
        let mut axis_values: Vec<Vec<u64>> = vec![Vec::new(); n];
        let mut pair = vec![vec![None; n]; n];
        for v in b {
            let support: Vec<usize> = (0..n).filter(|&k| v[k] != 0).collect();
            match support.as_slice() {
                [i] => {
                    axis_values[*i].push(v[*i] as u64);
                    if v[*i] == 1 {
                        for (k, slot) in pair[*i].iter_mut().enumerate() {
                            if k != *i {
                                *slot = Some(0);
                            }
                        }
                    }
                }
                [p, q] => {
                    for (j, i) in [(*p, *q), (*q, *p)] {
                        if v[j] == 1 {
                            let slot = &mut pair[j][i];
                            *slot = Some(slot.map_or(v[i], |m: i64| m.min(v[i])));
                        }
                    }
                }
                _ => {}
            }
        }
        let axis = axis_values
            .iter()
            .map(|vals| {
                let g = vals.iter().fold(0u64, |a, &x| a.gcd(&x));
                if g == 1 {
                    NumericalSemigroup::new(vals).map(Some)
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(OrthantData { n, axis, pair })
    }

    fn cofinite(&self) -> bool {
        self.axis.iter().all(Option::is_some)
            && (0..self.n).all(|j| (0..self.n).all(|i| i == j || self.pair[j][i].is_some()))
    }

    /// Box bound `β` with every gap `h` satisfying `h_i < β_i`. Only valid
    /// when [`Self::cofinite`] holds.
    ///
    /// For active coordinates `U`, every point with `x_j >= c_j` for all
    /// `j ∈ U` is a member, so a gap lies in a slab `x_j = s < c_j`. Spending
    /// the `s` units of `e_j` through `s (e_j + m e_i)` leaves a point of the
    /// restricted monoid on `U \ {j}`, which must then be a gap there; if no
    /// `x_i` is large enough to spend through, every other coordinate is
    /// below `s * max_i m_{j,i}`.
    fn gap_bound(&self) -> Vec<i64> {
        let conductor: Vec<i64> = self.axis.iter().map(|a| a.as_ref().map_or(0, |s| s.conductor() as i64)).collect();
        let full = (1usize << self.n) - 1;
        let mut memo: HashMap<usize, Vec<i64>> = HashMap::new();
        self.bound_for(full, &conductor, &mut memo)
    }

    fn bound_for(&self, set: usize, conductor: &[i64], memo: &mut HashMap<usize, Vec<i64>>) -> Vec<i64> {
        if let Some(b) = memo.get(&set) {
            return b.clone();
        }
        let members: Vec<usize> = (0..self.n).filter(|&k| set & (1 << k) != 0).collect();
        let mut beta = vec![0i64; self.n];
        for &j in &members {
            let cj = conductor[j];
            if cj == 0 {
                continue;
            }
            beta[j] = beta[j].max(cj);
            let rest = set & !(1 << j);
            if rest == 0 {
                continue;
            }
            let inner = self.bound_for(rest, conductor, memo);
            let spend = members
                .iter()
                .filter(|&&i| i != j)
                .map(|&i| self.pair[j][i].expect("cofinite"))
                .max()
                .unwrap_or(0);
            for &k in &members {
                if k != j {
                    beta[k] = beta[k].max(inner[k] + (cj - 1) * spend);
                }
            }
        }
        memo.insert(set, beta.clone());
        beta
    }
}

fn orthant_input(b: &[IntVector]) -> Result<(Vec<Vec<i64>>, usize)> {
    let n = b.first().ok_or(Error::Empty("generators"))?.dim();
    let mut small = Vec::with_capacity(b.len());
    for v in b {
        check_dims(n, v.dim())?;
        v.require_nonnegative()?;
        if v.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        small.push(v.to_i64()?);
    }
    Ok((small, n))
}

/// Whether `<B>` has finite complement in `N^n`.
pub fn is_nn_cofinite(b: &[IntVector]) -> Result<bool> {
    let (small, n) = orthant_input(b)?;
    Ok(OrthantData::new(&small, n)?.cofinite())
}

/// `N^n \ <B>`, sorted lexicographically.
pub fn gaps_nn(b: &[IntVector]) -> Result<Vec<IntVector>> {
    let (small, n) = orthant_input(b)?;
    Ok(gaps_nn_i64(&small, n)?.into_iter().map(IntVector::from).collect())
}

pub(crate) fn gap_bound_i64(b: &[Vec<i64>], n: usize) -> Result<Vec<i64>> {
    let data = OrthantData::new(b, n)?;
    if !data.cofinite() {
        return Err(Error::NotCofinite);
    }
    Ok(data.gap_bound())
}

pub(crate) fn gaps_nn_i64(b: &[Vec<i64>], n: usize) -> Result<Vec<Vec<i64>>> {
    let beta = gap_bound_i64(b, n)?;
    check_box(&beta)?;
    let table = MembershipTable::build(b, &beta)?;
    let gaps = table.non_members();
    if let Some(g) = gaps.iter().find(|g| g.iter().zip(&beta).any(|(x, b)| x >= b)) {
        return Err(Error::Inconsistency(format!("gap {g:?} is not strictly inside the bound {beta:?}")));
    }
    Ok(gaps)
}

/// Generators of `f_C^{-1}(S) ⊆ N^n`, minimal and sorted.
pub fn preimage_monoid_generators(c: &AffineSemigroup, s: &AffineSemigroup) -> Result<Vec<IntVector>> {
    require_contained(c, s)?;
    Ok(preimage_generators_i64(c, s)?.into_iter().map(IntVector::from).collect())
}

fn preimage_generators_i64(c: &AffineSemigroup, s: &AffineSemigroup) -> Result<Vec<Vec<i64>>> {
    let n = c.len();
    let mut cols = c.generators().to_vec();
    cols.extend(s.generators().iter().map(IntVector::neg));
    let basis = hilbert_basis_of_columns(&cols, c.dim())?;
    let projected: Vec<Vec<i64>> = basis.into_iter().map(|mut x| {
        x.truncate(n);
        x
    }).collect();
    Ok(minimal_generators_i64(projected))
}

/// Either the finite complement or the verdict that it is infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Complement {
    Finite(Vec<IntVector>),
    Infinite,
}

impl Complement {
    pub fn is_finite(&self) -> bool {
        matches!(self, Complement::Finite(_))
    }

    pub fn finite(&self) -> Option<&[IntVector]> {
        match self {
            Complement::Finite(v) => Some(v),
            Complement::Infinite => None,
        }
    }
}

/// `C \ S` through the preimage monoid in `N^n`.
pub fn relative_gaps(c: &AffineSemigroup, s: &AffineSemigroup) -> Result<Complement> {
    require_contained(c, s)?;
    let n = c.len();
    let b = preimage_generators_i64(c, s)?;
    let data = OrthantData::new(&b, n)?;
    if !data.cofinite() {
        return Ok(Complement::Infinite);
    }
    let h = gaps_nn_i64(&b, n)?;
    let cg = c.small()?;
    let mut image = h.iter().map(|x| image_i64(&cg, x)).collect::<Result<Vec<_>>>()?;
    image.sort();
    image.dedup();
    Ok(Complement::Finite(image.into_iter().map(IntVector::from).collect()))
}

/// Generators of `C \ {h}` for a minimal generator `h` of `C`: the other
/// generators, each shifted by `h`, and `2h`, `3h`.
pub fn remove_gap_generators(c: &AffineSemigroup, h: &IntVector) -> Result<Vec<IntVector>> {
    c.check_point(h)?;
    let mins = minimal_generators(c.generators())?;
    if !mins.contains(h) {
        return Err(Error::NotMinimalGenerator(h.to_string()));
    }
    let others: Vec<&IntVector> = c.generators().iter().filter(|g| *g != h).collect();
    let mut out: Vec<IntVector> = others.iter().map(|g| (*g).clone()).collect();
    for g in &others {
        out.push(g.add(h)?);
    }
    out.push(h.scale(&BigInt::from(2)));
    out.push(h.scale(&BigInt::from(3)));
    Ok(out)
}

/// Checks that each `λ g_i`, for `λ` a minimal generator of `S_i`, is a
/// minimal generator of `S`. Requires `g_i` to be an extreme ray of `C` with
/// coprime coordinates.
pub fn axis_generators_are_minimal_check(c: &AffineSemigroup, s: &AffineSemigroup, i: usize) -> Result<bool> {
    check_index(c, i)?;
    require_contained(c, s)?;
    let gi = &c.generators()[i];
    let gi_small = gi.to_i64()?;
    if crate::lattice::gcd_i64(gi_small.iter().copied()) != 1 {
        return Err(Error::Precondition(format!("{gi} has non-coprime coordinates")));
    }
    let rays = extreme_rays_i64(&minimal_generators_i64(c.small()?));
    if !rays.contains(&gi_small) {
        return Err(Error::Precondition(format!("{gi} is not an extreme ray")));
    }
    let lambdas: Vec<u64> = multiples_in(s, gi)?.into_iter().map(|l| l as u64).collect();
    let mins = minimal_generators_i64(s.small()?);
    let ok = minimal_generators_u64(&lambdas)?.into_iter().all(|l| {
        let scaled: Vec<i64> = gi_small.iter().map(|x| x * l as i64).collect();
        mins.contains(&scaled)
    });
    Ok(ok)
}

//! Random small instances for property suites and the self-test.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::affine::{member, minimal_generators_i64, AffineSemigroup};
use crate::error::Result;
use crate::ideal::{is_ideal_cofinite, SemigroupIdeal};
use crate::lattice::IntVector;

/// Size limits for generated instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceParams {
    pub max_dim: usize,
    pub max_generators: usize,
    pub max_coord: i64,
}

impl Default for InstanceParams {
    fn default() -> Self {
        InstanceParams { max_dim: 3, max_generators: 5, max_coord: 6 }
    }
}

fn random_point<R: Rng + ?Sized>(rng: &mut R, dim: usize, max_coord: i64) -> Vec<i64> {
    loop {
        let p: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..=max_coord)).collect();
        if p.iter().any(|&x| x != 0) {
            return p;
        }
    }
}

fn from_small(gens: Vec<Vec<i64>>) -> Result<AffineSemigroup> {
    AffineSemigroup::new(gens.into_iter().map(IntVector::from).collect())
}

/// Up to `max_generators` random non-zero generators in `N^d`.
pub fn random_semigroup<R: Rng + ?Sized>(rng: &mut R, params: &InstanceParams) -> Result<AffineSemigroup> {
    let dim = rng.gen_range(1..=params.max_dim);
    let count = rng.gen_range(1..=params.max_generators);
    from_small((0..count).map(|_| random_point(rng, dim, params.max_coord)).collect())
}

/// Random generators in `N^d` whose monoid has full rank `d` (each axis
/// direction is reached by some generator).
pub fn random_full_semigroup<R: Rng + ?Sized>(rng: &mut R, params: &InstanceParams) -> Result<AffineSemigroup> {
    let dim = rng.gen_range(1..=params.max_dim);
    let count = rng.gen_range(dim..=params.max_generators.max(dim));
    loop {
        let gens: Vec<Vec<i64>> = (0..count).map(|_| random_point(rng, dim, params.max_coord)).collect();
        if rank(&gens) == dim {
            return from_small(gens);
        }
    }
}

/// Rank over the rationals, by fraction-free elimination.
fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            let (a, b) = (m[r][c], m[i][c]);
            for k in 0..cols {
                m[i][k] = m[i][k] * a - m[r][k] * b;
            }
            let g = m[i].iter().fold(0i128, |g, &x| num_integer::Integer::gcd(&g, &x));
            if g > 1 {
                m[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        r += 1;
    }
    r
}

/// Non-zero elements of `s` with every coordinate at most `bound`.
fn box_members(s: &AffineSemigroup, bound: i64) -> Result<Vec<Vec<i64>>> {
    let dim = s.dim();
    let mut out = Vec::new();
    let mut p = vec![0i64; dim];
    loop {
        if p.iter().any(|&x| x != 0) && member(s, &IntVector::from(p.clone()))? {
            out.push(p.clone());
        }
        let Some(k) = (0..dim).find(|&k| p[k] < bound) else { break };
        p[k] += 1;
        p[..k].iter_mut().for_each(|x| *x = 0);
    }
    Ok(out)
}

/// A random submonoid of `c` whose generators are elements of `c` with
/// coordinates at most `params.max_coord`, at most `params.max_generators`
/// of them. Each generator of `c` is kept with probability 2/3 and up to
/// two other box elements are added, so both cofinite and non-cofinite
/// pairs occur.
pub fn random_submonoid<R: Rng + ?Sized>(
    rng: &mut R,
    c: &AffineSemigroup,
    params: &InstanceParams,
) -> Result<AffineSemigroup> {
    let cg = c.small()?;
    let box_members = box_members(c, params.max_coord)?;
    loop {
        let mut gens: Vec<Vec<i64>> = cg.iter().filter(|_| rng.gen_range(0..3) > 0).cloned().collect();
        for _ in 0..rng.gen_range(0..=2) {
            gens.push(box_members.choose(rng).expect("generators lie in the box").clone());
        }
        gens.shuffle(rng);
        gens.truncate(params.max_generators);
        if !gens.is_empty() {
            return from_small(minimal_generators_i64(gens));
        }
    }
}

/// A random element `sum k_i g_i` with `0 <= k_i <= max_coeff`.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, s: &AffineSemigroup, max_coeff: i64) -> Result<IntVector> {
    let gens = s.small()?;
    let mut acc = vec![0i64; s.dim()];
    for g in &gens {
        let k = rng.gen_range(0..=max_coeff);
        acc.iter_mut().zip(g).for_each(|(a, x)| *a += k * x);
    }
    Ok(IntVector::from(acc))
}

/// A random ideal of `s` with one to three base points, each an element
/// of `s` with coordinates at most `params.max_coord`. With `cofinite`,
/// multiples `k g_i` (`k <= 3`) of randomly chosen generators are added
/// until the complement is finite.
pub fn random_ideal<R: Rng + ?Sized>(
    rng: &mut R,
    s: &AffineSemigroup,
    params: &InstanceParams,
    cofinite: bool,
) -> Result<SemigroupIdeal> {
    let members = box_members(s, params.max_coord)?;
    let mut base: Vec<IntVector> = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        match members.choose(rng) {
            Some(p) => base.push(IntVector::from(p.clone())),
            None => base.push(s.generators().choose(rng).expect("non-empty").clone()),
        }
    }
    let mut ideal = SemigroupIdeal::new(s.clone(), base.clone())?;
    if !cofinite {
        return Ok(ideal);
    }
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.shuffle(rng);
    for i in order {
        if is_ideal_cofinite(&ideal)?.finite {
            break;
        }
        let k: i64 = rng.gen_range(1..=3);
        base.push(s.generators()[i].scale(&k.into()));
        ideal = SemigroupIdeal::new(s.clone(), base.clone())?;
    }
    Ok(ideal)
}

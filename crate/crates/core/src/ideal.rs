//! Ideals `I = X + S` of an affine semigroup `S` and their complements
//! `S \ I`, including Apéry sets.

use num_bigint::BigInt;

use crate::affine::{extreme_rays_i64, image_i64, minimal_generators_i64, AffineSemigroup, Complement};
use crate::diophantine::minimal_solutions_of_columns;
use crate::error::{Error, Result};
use crate::lattice::{check_dims, leq_i64, minimals_i64, IntVector};
use crate::membership::{check_box, BoxPoints, MemberSearch};
use crate::par;

/// `I = X + S`, with `X` reduced to the `≤_S`-minimal elements of `I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemigroupIdeal {
    ambient: AffineSemigroup,
    base: Vec<IntVector>,
}

impl SemigroupIdeal {
    /// Fails when `base` is empty or has a point outside `ambient`.
    pub fn new(ambient: AffineSemigroup, base: Vec<IntVector>) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::Empty("ideal base"));
        }
        let gens = ambient.small()?;
        let mut search = MemberSearch::new(&gens);
        let mut small = Vec::with_capacity(base.len());
        for u in &base {
            check_dims(ambient.dim(), u.dim())?;
            u.require_nonnegative()?;
            let s = u.to_i64()?;
            if !search.contains(&s) {
                return Err(Error::NotContained(u.to_string()));
            }
            small.push(s);
        }
        small.sort();
        small.dedup();
        let keep: Vec<Vec<i64>> = small
            .iter()
            .filter(|u| {
                !small.iter().any(|w| {
                    w != *u && leq_i64(w, u) && {
                        let diff: Vec<i64> = u.iter().zip(w).map(|(a, b)| a - b).collect();
                        search.contains(&diff)
                    }
                })
            })
            .cloned()
            .collect();
        Ok(SemigroupIdeal { ambient, base: keep.into_iter().map(IntVector::from).collect() })
    }

    pub fn ambient(&self) -> &AffineSemigroup {
        &self.ambient
    }

    /// The canonical base, sorted lexicographically.
    pub fn base(&self) -> &[IntVector] {
        &self.base
    }

    pub(crate) fn small_base(&self) -> Result<Vec<Vec<i64>>> {
        self.base.iter().map(IntVector::to_i64).collect()
    }

    pub fn contains(&self, v: &IntVector) -> Result<bool> {
        self.ambient.check_point(v)?;
        let gens = self.ambient.small()?;
        let base = self.small_base()?;
        Ok(in_ideal(&mut MemberSearch::new(&gens), &base, &v.to_i64()?))
    }
}

pub(crate) fn in_ideal(search: &mut MemberSearch<'_>, base: &[Vec<i64>], v: &[i64]) -> bool {
    base.iter().any(|u| {
        leq_i64(u, v) && {
            let diff: Vec<i64> = v.iter().zip(u).map(|(a, b)| a - b).collect();
            search.contains(&diff)
        }
    })
}

/// Outcome of a complement computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealComplementResult {
    pub finite: bool,
    /// `S \ I`, sorted; empty when infinite.
    pub complement: Vec<IntVector>,
    /// Per generator, the least `k` with `k g_i ∈ I` (for the Gröbner route,
    /// the least pure power of `Z_i` in the initial ideal).
    pub witnesses: Vec<Option<BigInt>>,
}

impl IdealComplementResult {
    pub fn as_complement(&self) -> Complement {
        if self.finite {
            Complement::Finite(self.complement.clone())
        } else {
            Complement::Infinite
        }
    }
}

fn check_index(s: &AffineSemigroup, i: usize) -> Result<()> {
    if i < s.len() {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i, len: s.len() })
    }
}

/// `min {k : k g_i ∈ I}`, `None` if there is none.
pub fn min_multiple_in_ideal(ideal: &SemigroupIdeal, i: usize) -> Result<Option<BigInt>> {
    check_index(&ideal.ambient, i)?;
    Ok(min_multiple_i64(ideal, i)?.map(BigInt::from))
}

fn min_multiple_i64(ideal: &SemigroupIdeal, i: usize) -> Result<Option<i64>> {
    let gens = ideal.ambient.generators();
    let mut cols: Vec<IntVector> = gens.iter().enumerate().filter(|(l, _)| *l != i).map(|(_, g)| g.clone()).collect();
    cols.push(gens[i].neg());
    let last = cols.len() - 1;
    let mut best: Option<i64> = None;
    for u in &ideal.base {
        let sols = minimal_solutions_of_columns(&cols, &u.neg())?;
        if let Some(k) = sols.iter().map(|x| x[last]).min() {
            best = Some(best.map_or(k, |b| b.min(k)));
        }
    }
    Ok(best)
}

fn witnesses_i64(ideal: &SemigroupIdeal) -> Result<Vec<Option<i64>>> {
    par::map_range(ideal.ambient.len(), |i| min_multiple_i64(ideal, i)).into_iter().collect()
}

fn to_witnesses(ks: &[Option<i64>]) -> Vec<Option<BigInt>> {
    ks.iter().map(|k| k.map(BigInt::from)).collect()
}

/// Finiteness of `S \ I` from the per-generator multiples; the complement
/// is left empty.
pub fn is_ideal_cofinite(ideal: &SemigroupIdeal) -> Result<IdealComplementResult> {
    let ks = witnesses_i64(ideal)?;
    Ok(IdealComplementResult {
        finite: ks.iter().all(Option::is_some),
        complement: Vec::new(),
        witnesses: to_witnesses(&ks),
    })
}

/// The `f_S`-images of the points of `[0, bound]` accepted by `keep` that
/// lie outside `I`, deduplicated and sorted.
fn images_outside(
    ideal: &SemigroupIdeal,
    bound: &[i64],
    keep: impl Fn(&[i64]) -> bool + Sync,
) -> Result<Vec<IntVector>> {
    if bound.iter().any(|&b| b < 0) {
        return Ok(Vec::new());
    }
    check_box(bound)?;
    let gens = ideal.ambient.small()?;
    let points: Vec<Vec<i64>> = BoxPoints::new(bound).filter(|p| keep(p)).collect();
    let mut images = par::map(&points, |p| image_i64(&gens, p)).into_iter().collect::<Result<Vec<_>>>()?;
    images.sort();
    images.dedup();
    let base = ideal.small_base()?;
    // each chunk keeps its own memo
    let chunks: Vec<&[Vec<i64>]> = images.chunks(512).collect();
    let outside = par::flat_map(&chunks, |chunk| {
        let mut search = MemberSearch::new(&gens);
        chunk.iter().filter(|v| !in_ideal(&mut search, &base, v)).cloned().collect::<Vec<_>>()
    });
    Ok(outside.into_iter().map(IntVector::from).collect())
}

/// `S \ I` as the images of the box `λ_i < k_i` that fall outside `I`.
pub fn complement_by_box(ideal: &SemigroupIdeal) -> Result<IdealComplementResult> {
    let ks = witnesses_i64(ideal)?;
    complement_by_box_with(ideal, &ks)
}

/// The box algorithm run with caller-supplied upper bounds `k_i` (any
/// `k_i` with `k_i g_i ∈ I` gives the same complement).
pub fn complement_by_box_with_bounds(ideal: &SemigroupIdeal, bounds: &[BigInt]) -> Result<IdealComplementResult> {
    check_dims(ideal.ambient.len(), bounds.len())?;
    let gens = ideal.ambient.small()?;
    let base = ideal.small_base()?;
    let mut search = MemberSearch::new(&gens);
    let mut ks = Vec::with_capacity(bounds.len());
    for (g, k) in gens.iter().zip(bounds) {
        let k = IntVector::new(vec![k.clone()]).to_i64()?[0];
        let multiple: Vec<i64> = g.iter().map(|x| x * k).collect();
        if k < 0 || !in_ideal(&mut search, &base, &multiple) {
            return Err(Error::Precondition(format!("{k} times {g:?} is not in the ideal")));
        }
        ks.push(Some(k));
    }
    complement_by_box_with(ideal, &ks)
}

fn complement_by_box_with(ideal: &SemigroupIdeal, ks: &[Option<i64>]) -> Result<IdealComplementResult> {
    let witnesses = to_witnesses(ks);
    let Some(bound) = ks.iter().map(|k| k.map(|k| k - 1)).collect::<Option<Vec<i64>>>() else {
        return Ok(IdealComplementResult { finite: false, complement: Vec::new(), witnesses });
    };
    let complement = images_outside(ideal, &bound, |_| true)?;
    Ok(IdealComplementResult { finite: true, complement, witnesses })
}

/// Minimal elements of `f_S^{-1}(I) ⊆ N^n`, sorted.
pub fn preimage_ideal_minimals(ideal: &SemigroupIdeal) -> Result<Vec<IntVector>> {
    Ok(preimage_minimals_i64(ideal)?.into_iter().map(IntVector::from).collect())
}

fn preimage_minimals_i64(ideal: &SemigroupIdeal) -> Result<Vec<Vec<i64>>> {
    let n = ideal.ambient.len();
    let mut cols = ideal.ambient.generators().to_vec();
    cols.extend(ideal.ambient.generators().iter().map(IntVector::neg));
    let per_base = par::map(&ideal.base, |u| minimal_solutions_of_columns(&cols, u));
    let mut projected = Vec::new();
    for sols in per_base {
        projected.extend(sols?.into_iter().map(|mut x| {
            x.truncate(n);
            x
        }));
    }
    Ok(minimals_i64(projected))
}

/// `S \ I` as the image of `Q = {x : y ≰ x for all y ∈ M(I)}`.
pub fn complement_by_preimage(ideal: &SemigroupIdeal) -> Result<IdealComplementResult> {
    let n = ideal.ambient.len();
    let mins = preimage_minimals_i64(ideal)?;
    // smallest a with a e_i in M(I) + N^n
    let axis: Vec<Option<i64>> = (0..n)
        .map(|i| mins.iter().filter(|y| (0..n).all(|k| k == i || y[k] == 0)).map(|y| y[i]).min())
        .collect();
    let theorem = witnesses_i64(ideal)?;
    if axis != theorem {
        return Err(Error::Inconsistency(format!(
            "axis elements {axis:?} of the preimage ideal disagree with the multiples {theorem:?}"
        )));
    }
    let witnesses = to_witnesses(&axis);
    let Some(bound) = axis.iter().map(|a| a.map(|a| a - 1)).collect::<Option<Vec<i64>>>() else {
        return Ok(IdealComplementResult { finite: false, complement: Vec::new(), witnesses });
    };
    let complement = images_outside(ideal, &bound, |x| !mins.iter().any(|y| leq_i64(y, x)))?;
    Ok(IdealComplementResult { finite: true, complement, witnesses })
}

/// `Ap(S, X) = S \ (X + S)`.
pub fn apery(s: &AffineSemigroup, x: &[IntVector]) -> Result<Complement> {
    let ideal = SemigroupIdeal::new(s.clone(), x.to_vec())?;
    Ok(complement_by_box(&ideal)?.as_complement())
}

/// `Ap(S, E)` for `E` the extreme rays of `S`; always finite.
pub fn apery_extreme_rays(s: &AffineSemigroup) -> Result<Vec<IntVector>> {
    let rays = extreme_rays_i64(&minimal_generators_i64(s.small()?));
    match apery(s, &rays.into_iter().map(IntVector::from).collect::<Vec<_>>())? {
        Complement::Finite(v) => Ok(v),
        Complement::Infinite => Err(Error::Inconsistency("Apéry set of the extreme rays is infinite".into())),
    }
}

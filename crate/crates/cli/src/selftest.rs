//! Random instances run through every pair of algorithms that must agree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semigap::affine::{is_c_cofinite, relative_gaps};
use semigap::groebner::{apery_groebner, ideal_complement_groebner};
use semigap::ideal::{apery_extreme_rays, complement_by_box, complement_by_preimage, is_ideal_cofinite};
use semigap::instances::{random_full_semigroup, random_ideal, random_submonoid, InstanceParams};
use semigap::TermOrder;
use serde::Serialize;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Checks {
    /// `is_c_cofinite` against the finiteness of `relative_gaps`.
    pub semigroup_pairs: usize,
    /// Witness test against box, preimage and Gröbner complements.
    pub ideals: usize,
    /// Extreme-ray Apéry set by box and by Gröbner basis.
    pub apery_sets: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub kind: &'static str,
    pub seed: u64,
    pub count: usize,
    pub checks: Checks,
    pub disagreements: Vec<String>,
}

/// `count` rounds, each one semigroup pair, one ideal and one Apéry set.
pub fn selftest(seed: u64, count: usize) -> SelftestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = InstanceParams::default();
    let mut checks = Checks::default();
    let mut disagreements = Vec::new();
    for round in 0..count {
        if let Err(e) = one_round(&mut rng, &params, &mut checks) {
            disagreements.push(format!("round {round}: {e}"));
        }
    }
    SelftestReport { kind: "selftest", seed, count, checks, disagreements }
}

fn one_round(rng: &mut ChaCha8Rng, params: &InstanceParams, checks: &mut Checks) -> Result<(), String> {
    let err = |e: semigap::Error| e.to_string();

    let c = random_full_semigroup(rng, params).map_err(err)?;
    let s = random_submonoid(rng, &c, params).map_err(err)?;
    let report = is_c_cofinite(&c, &s).map_err(err)?;
    let gaps = relative_gaps(&c, &s).map_err(err)?;
    if report.cofinite != gaps.is_finite() {
        return Err(format!("C={c:?} S={s:?}: cofinite {} but gaps finite {}", report.cofinite, gaps.is_finite()));
    }
    checks.semigroup_pairs += 1;

    let ambient = random_full_semigroup(rng, params).map_err(err)?;
    let cofinite = rng.gen_bool(0.5);
    let ideal = random_ideal(rng, &ambient, params, cofinite).map_err(err)?;
    let order = TermOrder::grevlex(ambient.len());
    let witness = is_ideal_cofinite(&ideal).map_err(err)?;
    let by_box = complement_by_box(&ideal).map_err(err)?;
    let by_pre = complement_by_preimage(&ideal).map_err(err)?;
    let by_gb = ideal_complement_groebner(&ideal, &order).map_err(err)?;
    let all = [&by_box, &by_pre, &by_gb];
    if all.iter().any(|r| r.finite != witness.finite)
        || all.iter().any(|r| r.as_complement() != by_box.as_complement())
    {
        return Err(format!("{ideal:?}: box, preimage and groebner complements differ"));
    }
    checks.ideals += 1;

    let rays = apery_extreme_rays(&ambient).map_err(err)?;
    let gb = apery_groebner(&ambient).map_err(err)?;
    if rays != gb {
        return Err(format!("{ambient:?}: Apéry sets of the extreme rays differ"));
    }
    checks.apery_sets += 1;
    Ok(())
}

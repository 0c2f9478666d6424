//! Numerical semigroups: submonoids of `N` with finite complement.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest table the membership sieve is allowed to allocate.
const MAX_TABLE: u64 = 1 << 32;

/// A numerical semigroup, stored by its minimal generators together with a
/// membership table up to the conductor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    /// `below_conductor[n]` is membership of `n` for `n < conductor`.
    below_conductor: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn new(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Empty("numerical semigroup generators"));
        }
        if gens.contains(&0) {
            return Err(Error::Precondition("generators must be positive".into()));
        }
        let g = gens.iter().fold(0u64, |a, &b| a.gcd(&b));
        if g != 1 {
            return Err(Error::GcdNotOne(BigInt::from(g)));
        }
        let generators = minimal_generators_u64(gens)?;
        let below_conductor = sieve_to_conductor(&generators)?;
        Ok(NumericalSemigroup { generators, below_conductor })
    }

    pub fn from_bigints(gens: &[BigInt]) -> Result<Self> {
        Self::new(&to_u64s(gens)?)
    }

    /// Minimal generators in increasing order.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn conductor(&self) -> u64 {
        self.below_conductor.len() as u64
    }

    /// Largest integer outside the semigroup; `-1` for `N` itself.
    pub fn frobenius(&self) -> i64 {
        self.conductor() as i64 - 1
    }

    pub fn contains(&self, n: u64) -> bool {
        match usize::try_from(n) {
            Ok(i) if i < self.below_conductor.len() => self.below_conductor[i],
            _ => true,
        }
    }

    /// `N \ S` in increasing order.
    pub fn gaps(&self) -> Vec<u64> {
        self.below_conductor
            .iter()
            .enumerate()
            .filter(|(_, &m)| !m)
            .map(|(i, _)| i as u64)
            .collect()
    }
}

pub(crate) fn to_u64s(gens: &[BigInt]) -> Result<Vec<u64>> {
    gens.iter()
        .map(|g| {
            if !g.is_positive() {
                return Err(Error::Precondition(format!("generator {g} is not positive")));
            }
            g.to_u64().ok_or_else(|| Error::TooLarge(g.to_string()))
        })
        .collect()
}

/// True iff the generators have gcd one.
pub fn is_numerical_semigroup(gens: &[BigInt]) -> Result<bool> {
    if gens.is_empty() {
        return Err(Error::Empty("numerical semigroup generators"));
    }
    if let Some(g) = gens.iter().find(|g| !g.is_positive()) {
        return Err(Error::Precondition(format!("generator {g} is not positive")));
    }
    let g = gens.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
    Ok(g == BigInt::from(1))
}

pub fn minimal_generators_1d(gens: &[BigInt]) -> Result<Vec<BigInt>> {
    if !is_numerical_semigroup(gens)? {
        let g = gens.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
        return Err(Error::GcdNotOne(g));
    }
    let mins = minimal_generators_u64(&to_u64s(gens)?)?;
    Ok(mins.into_iter().map(BigInt::from).collect())
}

pub fn frobenius(s: &NumericalSemigroup) -> i64 {
    s.frobenius()
}

pub fn gaps_1d(s: &NumericalSemigroup) -> Vec<u64> {
    s.gaps()
}

/// Minimal generators of the submonoid of `N` generated by `gens`; the gcd
/// need not be one. Zeros are ignored.
pub(crate) fn minimal_generators_u64(gens: &[u64]) -> Result<Vec<u64>> {
    let mut sorted: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
    sorted.sort_unstable();
    sorted.dedup();
    let Some(&max) = sorted.last() else {
        return Ok(Vec::new());
    };
    if max > MAX_TABLE {
        return Err(Error::TooLarge(format!("generator {max}")));
    }
    let mut reachable = vec![false; max as usize + 1];
    reachable[0] = true;
    let mut kept: Vec<u64> = Vec::new();
    let mut filled = 0usize;
    for &g in &sorted {
        let g = g as usize;
        // extend membership of <kept> up to g
        for n in filled + 1..=g {
            reachable[n] = kept.iter().any(|&k| k as usize <= n && reachable[n - k as usize]);
        }
        filled = g;
        if !reachable[g] {
            kept.push(g as u64);
            reachable[g] = true;
        }
    }
    Ok(kept)
}

/// Membership table of `<gens>` (gcd one) below its conductor.
fn sieve_to_conductor(gens: &[u64]) -> Result<Vec<bool>> {
    let min = gens[0];
    let max = *gens.last().expect("non-empty");
    // Schur: the Frobenius number is below (min - 1) * (max - 1)
    let bound = (min - 1)
        .checked_mul(max.saturating_sub(1))
        .and_then(|b| b.checked_add(min))
        .ok_or_else(|| Error::TooLarge(format!("Frobenius bound for {gens:?}")))?;
    if bound > MAX_TABLE {
        return Err(Error::TooLarge(format!("Frobenius bound {bound}")));
    }
    let mut member: Vec<bool> = Vec::with_capacity(bound as usize + 1);
    let mut run = 0u64;
    let mut n = 0usize;
    loop {
        let m = n == 0 || gens.iter().any(|&g| g as usize <= n && member[n - g as usize]);
        member.push(m);
        if m {
            run += 1;
            if run == min {
                member.truncate(n + 1 - min as usize);
                return Ok(member);
            }
        } else {
            run = 0;
        }
        n += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Membership by direct search over coefficient vectors.
    fn brute_member(gens: &[u64], n: u64) -> bool {
        fn go(gens: &[u64], n: u64) -> bool {
            match gens.split_first() {
                None => n == 0,
                Some((&g, rest)) => (0..=n / g).any(|k| go(rest, n - k * g)),
            }
        }
        go(gens, n)
    }

    #[test]
    fn gcd_test() {
        assert!(is_numerical_semigroup(&b(&[6, 2, 7, 3, 5])).unwrap());
        assert!(!is_numerical_semigroup(&b(&[2, 4])).unwrap());
        assert!(is_numerical_semigroup(&b(&[1])).unwrap());
        assert!(is_numerical_semigroup(&[]).is_err());
        assert!(is_numerical_semigroup(&b(&[0, 1])).is_err());
        assert!(is_numerical_semigroup(&b(&[-3, 1])).is_err());
    }

    #[test]
    fn minimal_generators_examples() {
        assert_eq!(minimal_generators_1d(&b(&[6, 2, 7, 3, 5])).unwrap(), b(&[2, 3]));
        assert_eq!(minimal_generators_1d(&b(&[1, 5])).unwrap(), b(&[1]));
        assert_eq!(minimal_generators_1d(&b(&[4, 6, 9])).unwrap(), b(&[4, 6, 9]));
        // each of 4, 6, 9 is outside the monoid of the other two
        for (g, others) in [(4, [6, 9]), (6, [4, 9]), (9, [4, 6])] {
            assert!(!brute_member(&others, g));
        }
        assert_eq!(minimal_generators_1d(&b(&[2, 4])), Err(Error::GcdNotOne(BigInt::from(2))));
    }

    #[test]
    fn frobenius_and_gaps() {
        let s23 = NumericalSemigroup::new(&[2, 3]).unwrap();
        let s1 = NumericalSemigroup::new(&[1]).unwrap();
        let s35 = NumericalSemigroup::new(&[3, 5]).unwrap();
        assert_eq!(frobenius(&s23), 1);
        assert_eq!(frobenius(&s1), -1);
        assert_eq!(frobenius(&s35), 7);
        assert_eq!(gaps_1d(&s23), vec![1]);
        assert!(gaps_1d(&s1).is_empty());
        assert_eq!(gaps_1d(&s35), vec![1, 2, 4, 7]);
        // brute-force oracle over [0, 15]
        let brute: Vec<u64> = (0..=15).filter(|&n| !brute_member(&[3, 5], n)).collect();
        assert_eq!(brute, vec![1, 2, 4, 7]);
        assert_eq!(s1.conductor(), 0);
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(NumericalSemigroup::new(&[]).is_err());
        assert!(NumericalSemigroup::new(&[0, 1]).is_err());
        assert_eq!(NumericalSemigroup::new(&[4, 6]), Err(Error::GcdNotOne(BigInt::from(2))));
    }

    #[test]
    fn submonoid_generators_with_common_factor() {
        assert_eq!(minimal_generators_u64(&[4, 6, 8, 10, 0]).unwrap(), vec![4, 6]);
        assert!(minimal_generators_u64(&[0]).unwrap().is_empty());
    }

    proptest::proptest! {
        #[test]
        fn membership_agrees_with_brute_force(gens in proptest::collection::vec(1u64..15, 1..5)) {
            let g = gens.iter().fold(0u64, |a, &b| a.gcd(&b));
            proptest::prop_assume!(g == 1);
            let s = NumericalSemigroup::new(&gens).unwrap();
            let f = s.frobenius();
            for n in 0..(f + 50).max(0) as u64 {
                proptest::prop_assert_eq!(s.contains(n), brute_member(&gens, n));
                if n as i64 > f {
                    proptest::prop_assert!(s.contains(n));
                }
            }
            let gaps = s.gaps();
            if let Some(&last) = gaps.last() {
                proptest::prop_assert_eq!(last as i64, f);
            }
            // minimal generators generate the same monoid
            let max = *gens.iter().max().unwrap();
            for n in 0..=(f.max(0) as u64 + max) {
                proptest::prop_assert_eq!(brute_member(s.generators(), n), brute_member(&gens, n));
            }
        }
    }
}

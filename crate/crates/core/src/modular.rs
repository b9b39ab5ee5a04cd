//! Modular arithmetic primitives and the exponent-residue sieve.
//!
//! For a fixed base `B` and modulus `m`, the sequence `B^1, B^2, ... (mod m)`
//! is eventually periodic: a (possibly empty) pre-periodic tail followed by a
//! cycle. When `gcd(B, m) = 1` the tail is empty and the cycle length is the
//! multiplicative order. Bases sharing a factor with `m` (for example an even
//! leg `b ≡ 4 (mod 8)`, giving `4, 0, 0, ...`) have a tail, and those
//! exponents are tracked one by one instead of being folded into the cycle.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Sieve moduli used when none are configured.
pub const DEFAULT_MODULI: [u64; 8] = [5, 8, 16, 3, 13, 7, 9, 11];

/// `base^exp mod modulus`, with `exp = 0` giving `1 mod modulus`.
pub fn mod_pow(base: &BigUint, exp: &BigUint, modulus: &BigUint) -> Result<BigUint> {
    if *modulus < BigUint::from(2u32) {
        return Err(Error::Domain(format!("modulus must be at least 2, got {modulus}")));
    }
    Ok(base.modpow(exp, modulus))
}

/// Smallest `k ≥ 1` with `a^k ≡ 1 (mod m)`.
///
/// Computed from Euler's phi of `m` by stripping prime factors of phi while
/// the power stays at one. Both factorisations use trial division, so this is
/// meant for moduli of modest size.
pub fn mult_order(a: &BigUint, m: &BigUint) -> Result<BigUint> {
    if *m < BigUint::from(2u32) {
        return Err(Error::Domain(format!("modulus must be at least 2, got {m}")));
    }
    if !a.gcd(m).is_one() {
        return Err(Error::Domain(format!("order of {a} mod {m} is undefined: gcd({a}, {m}) != 1")));
    }
    let phi = trial_factor(m).into_iter().fold(BigUint::one(), |acc, (p, k)| {
        acc * (&p - 1u32) * p.pow(k - 1)
    });
    let mut order = phi.clone();
    for (p, _) in trial_factor(&phi) {
        while order.is_multiple_of(&p) {
            let candidate = &order / &p;
            if a.modpow(&candidate, m).is_one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    Ok(order)
}

fn trial_factor(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut factors = Vec::new();
    let mut d = BigUint::from(2u32);
    while &d * &d <= n {
        let mut k = 0;
        while n.is_multiple_of(&d) {
            n /= &d;
            k += 1;
        }
        if k > 0 {
            factors.push((d.clone(), k));
        }
        d += 1u32;
    }
    if n > BigUint::one() {
        factors.push((n, 1));
    }
    factors
}

fn reduce(base: &BigUint, m: u64) -> u64 {
    (base % m).to_u64().expect("residue is below a u64 modulus")
}

fn mul_mod(x: u64, y: u64, m: u64) -> u64 {
    ((x as u128 * y as u128) % m as u128) as u64
}

/// One full cycle of powers of a unit modulo `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueCycle {
    #[serde(serialize_with = "crate::triples::ser_big")]
    pub base: BigUint,
    pub modulus: u64,
    pub period: u64,
    /// `base^1, ..., base^period (mod modulus)`.
    pub residues: Vec<u64>,
}

impl ResidueCycle {
    /// `base^exp mod modulus` for any `exp ≥ 0`, read off the cycle.
    pub fn residue_at(&self, exp: u64) -> u64 {
        if exp == 0 {
            return 1 % self.modulus;
        }
        self.residues[((exp - 1) % self.period) as usize]
    }
}

/// Tabulates the powers of `a` modulo `m` by direct enumeration.
pub fn residue_cycle(a: &BigUint, m: u64) -> Result<ResidueCycle> {
    if m < 2 {
        return Err(Error::Domain(format!("modulus must be at least 2, got {m}")));
    }
    let r = reduce(a, m);
    if r.gcd(&m) != 1 {
        return Err(Error::Domain(format!("gcd({a}, {m}) != 1: no residue cycle")));
    }
    let mut residues = vec![r];
    let mut v = r;
    while v != 1 {
        v = mul_mod(v, r, m);
        residues.push(v);
    }
    Ok(ResidueCycle { base: a.clone(), modulus: m, period: residues.len() as u64, residues })
}

/// The eventually periodic sequence `B^k mod m` for `k ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSequence {
    tail: Vec<u64>,
    cycle: Vec<u64>,
}

impl PowerSequence {
    pub fn new(base: &BigUint, m: u64) -> Self {
        let r = reduce(base, m);
        let mut seen: HashMap<u64, usize> = HashMap::new();
        let mut values = Vec::new();
        let mut v = r;
        loop {
            if let Some(&start) = seen.get(&v) {
                let cycle = values.split_off(start);
                return PowerSequence { tail: values, cycle };
            }
            seen.insert(v, values.len());
            values.push(v);
            v = mul_mod(v, r, m);
        }
    }

    /// Number of leading exponents that are not part of the cycle.
    pub fn tail_len(&self) -> u64 {
        self.tail.len() as u64
    }

    pub fn period(&self) -> u64 {
        self.cycle.len() as u64
    }

    /// Number of distinct exponent classes (tail exponents plus cycle slots).
    pub fn states(&self) -> usize {
        self.tail.len() + self.cycle.len()
    }

    /// Dense index of the class of `exp` (`exp ≥ 1`), in `0..states()`.
    pub fn state_index(&self, exp: u64) -> usize {
        debug_assert!(exp >= 1);
        let tail = self.tail_len();
        if exp <= tail {
            (exp - 1) as usize
        } else {
            // slot j of the cycle holds exponent tail + 1 + j (mod period)
            self.tail.len() + ((exp - tail - 1) % self.period()) as usize
        }
    }

    /// `B^exp mod m` for `exp ≥ 1`.
    pub fn value_at(&self, exp: u64) -> u64 {
        self.state_value(self.state_index(exp))
    }

    fn state_value(&self, idx: usize) -> u64 {
        if idx < self.tail.len() {
            self.tail[idx]
        } else {
            self.cycle[idx - self.tail.len()]
        }
    }

    /// The exponent class for a dense state index.
    pub fn class_of_state(&self, idx: usize) -> ExponentClass {
        if idx < self.tail.len() {
            ExponentClass::Exact(idx as u64 + 1)
        } else {
            let exp = idx as u64 + 1;
            ExponentClass::Periodic(exp % self.period())
        }
    }

    pub fn class_of(&self, exp: u64) -> ExponentClass {
        self.class_of_state(self.state_index(exp))
    }

    /// Smallest exponent `≥ 1` belonging to `class`.
    pub fn representative(&self, class: ExponentClass) -> u64 {
        match class {
            ExponentClass::Exact(e) => e,
            ExponentClass::Periodic(rho) => {
                let first = self.tail_len() + 1;
                let p = self.period();
                first + (rho + p - first % p) % p
            }
        }
    }
}

/// A class of exponents with identical power residues.
///
/// `Periodic(ρ)` covers every exponent `e` past the tail with
/// `e ≡ ρ (mod period)`; `ρ = 0` stands for multiples of the period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExponentClass {
    Exact(u64),
    Periodic(u64),
}

impl fmt::Display for ExponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExponentClass::Exact(e) => write!(f, "={e}"),
            ExponentClass::Periodic(r) => write!(f, "~{r}"),
        }
    }
}

impl Serialize for ExponentClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Exponent classes `(x, y, z)` for which `a^x + b^y ≡ c^z (mod m)`.
#[derive(Debug, Clone)]
pub struct AdmissibleResidues {
    modulus: u64,
    seqs: [PowerSequence; 3],
    admitted: Vec<bool>,
}

impl AdmissibleResidues {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn x_period(&self) -> u64 {
        self.seqs[0].period()
    }

    pub fn y_period(&self) -> u64 {
        self.seqs[1].period()
    }

    pub fn z_period(&self) -> u64 {
        self.seqs[2].period()
    }

    /// Power sequences of `a`, `b`, `c` in that order.
    pub fn sequences(&self) -> &[PowerSequence; 3] {
        &self.seqs
    }

    fn flat(&self, ix: usize, iy: usize, iz: usize) -> usize {
        (ix * self.seqs[1].states() + iy) * self.seqs[2].states() + iz
    }

    /// Lookup by dense state indices (see [`PowerSequence::state_index`]).
    pub fn admits_state(&self, ix: usize, iy: usize, iz: usize) -> bool {
        self.admitted[self.flat(ix, iy, iz)]
    }

    /// Whether the exponent triple passes this modulus. Exponents start at 1.
    pub fn admits(&self, x: u64, y: u64, z: u64) -> bool {
        if x == 0 || y == 0 || z == 0 {
            return false;
        }
        let [sx, sy, sz] = &self.seqs;
        self.admits_state(sx.state_index(x), sy.state_index(y), sz.state_index(z))
    }

    /// All admitted class triples.
    pub fn admitted(&self) -> BTreeSet<(ExponentClass, ExponentClass, ExponentClass)> {
        let [sx, sy, sz] = &self.seqs;
        let mut out = BTreeSet::new();
        for ix in 0..sx.states() {
            for iy in 0..sy.states() {
                for iz in 0..sz.states() {
                    if self.admits_state(ix, iy, iz) {
                        out.insert((sx.class_of_state(ix), sy.class_of_state(iy), sz.class_of_state(iz)));
                    }
                }
            }
        }
        out
    }

    /// Number of admitted class triples.
    pub fn admitted_count(&self) -> usize {
        self.admitted.iter().filter(|&&b| b).count()
    }
}

/// Enumerates one full tail-plus-cycle of each base and keeps exactly the
/// class triples satisfying `a^x + b^y ≡ c^z (mod m)`.
///
/// Any bases are accepted: units get a pure cycle, the rest a tail.
pub fn admissible_exponent_residues(
    a: &BigUint,
    b: &BigUint,
    c: &BigUint,
    m: u64,
) -> Result<AdmissibleResidues> {
    if m < 2 {
        return Err(Error::Domain(format!("modulus must be at least 2, got {m}")));
    }
    let seqs = [PowerSequence::new(a, m), PowerSequence::new(b, m), PowerSequence::new(c, m)];
    let (nx, ny, nz) = (seqs[0].states(), seqs[1].states(), seqs[2].states());
    let mut admitted = vec![false; nx * ny * nz];
    for ix in 0..nx {
        let ax = seqs[0].state_value(ix);
        for iy in 0..ny {
            let lhs = (ax + seqs[1].state_value(iy)) % m;
            for iz in 0..nz {
                admitted[(ix * ny + iy) * nz + iz] = lhs == seqs[2].state_value(iz);
            }
        }
    }
    Ok(AdmissibleResidues { modulus: m, seqs, admitted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn brute_order(a: u64, m: u64) -> u64 {
        let mut v = a % m;
        let mut k = 1;
        while v != 1 {
            v = v * a % m;
            k += 1;
        }
        k
    }

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(&big(3), &big(2), &big(5)).unwrap(), big(4));
        assert_eq!(mod_pow(&big(7), &big(0), &big(13)).unwrap(), big(1));
        assert_eq!(mod_pow(&big(3), &big(100), &big(5)).unwrap(), big(1));
        assert!(mod_pow(&big(3), &big(2), &big(1)).is_err());
        assert!(mod_pow(&big(3), &big(2), &big(0)).is_err());
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(mult_order(&big(3), &big(5)).unwrap(), big(4));
        assert_eq!(mult_order(&big(1), &big(7)).unwrap(), big(1));
        assert_eq!(mult_order(&big(3), &big(8)).unwrap(), big(2));
        assert!(matches!(mult_order(&big(4), &big(8)), Err(Error::Domain(_))));
        assert!(mult_order(&big(0), &big(5)).is_err());
    }

    #[test]
    fn odd_orders_mod_8_never_reach_4() {
        for a in (1..64u64).step_by(2) {
            let ord = mult_order(&big(a), &big(8)).unwrap();
            assert!(ord <= big(2), "ord_8({a}) = {ord}");
        }
    }

    #[test]
    fn residue_cycle_examples() {
        let c = residue_cycle(&big(3), 5).unwrap();
        assert_eq!((c.period, c.residues.clone()), (4, vec![3, 4, 2, 1]));
        let c = residue_cycle(&big(4), 5).unwrap();
        assert_eq!((c.period, c.residues.clone()), (2, vec![4, 1]));
        let c = residue_cycle(&big(1), 5).unwrap();
        assert_eq!((c.period, c.residues.clone()), (1, vec![1]));
        assert!(residue_cycle(&big(10), 5).is_err());
        assert!(residue_cycle(&big(3), 1).is_err());
    }

    #[test]
    fn admissible_mod5_for_gpt() {
        let adm = admissible_exponent_residues(&big(3), &big(4), &big(5), 5).unwrap();
        assert_eq!((adm.x_period(), adm.y_period(), adm.z_period()), (4, 2, 1));
        let pairs: BTreeSet<_> = adm.admitted().into_iter().map(|(x, y, _)| (x, y)).collect();
        let expected: BTreeSet<_> = [
            (ExponentClass::Periodic(2), ExponentClass::Periodic(0)),
            (ExponentClass::Periodic(0), ExponentClass::Periodic(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(pairs, expected);
        // c ≡ 0: the single z class is "any exponent, term 0"
        assert!(adm.admitted().iter().all(|&(_, _, z)| z == ExponentClass::Periodic(0)));
    }

    #[test]
    fn admissible_mod8_for_gpt_tracks_first_power_of_b() {
        use ExponentClass::*;
        let adm = admissible_exponent_residues(&big(3), &big(4), &big(5), 8).unwrap();
        assert_eq!(adm.sequences()[1].tail_len(), 1);
        let expected: BTreeSet<_> =
            [(Periodic(0), Exact(1), Periodic(1)), (Periodic(0), Periodic(0), Periodic(0))]
                .into_iter()
                .collect();
        assert_eq!(adm.admitted(), expected);
        assert!(adm.admits(2, 2, 2));
        assert!(adm.admits(4, 1, 3));
        assert!(!adm.admits(2, 1, 2));
        assert!(!adm.admits(3, 5, 7));
    }

    #[test]
    fn degenerate_bases_admit_everything() {
        let adm = admissible_exponent_residues(&big(1), &big(14), &big(1), 7).unwrap();
        for x in 1..10 {
            for y in 1..10 {
                for z in 1..10 {
                    assert!(adm.admits(x, y, z));
                }
            }
        }
    }

    #[test]
    fn representative_lands_in_class() {
        for (base, m) in [(4u64, 8u64), (12, 16), (3, 9), (6, 9), (2, 12), (7, 13)] {
            let seq = PowerSequence::new(&big(base), m);
            for idx in 0..seq.states() {
                let class = seq.class_of_state(idx);
                let e = seq.representative(class);
                assert_eq!(seq.state_index(e), idx, "base {base} mod {m} class {class}");
            }
        }
    }

    proptest! {
        #[test]
        fn order_is_minimal_and_matches_enumeration(a in 1u64..500, m in 2u64..200) {
            prop_assume!(a.gcd(&m) == 1);
            let ord = mult_order(&big(a), &big(m)).unwrap();
            prop_assert_eq!(ord.clone(), big(brute_order(a, m)));
            prop_assert!(mod_pow(&big(a), &ord, &big(m)).unwrap().is_one());
            let cyc = residue_cycle(&big(a), m).unwrap();
            prop_assert_eq!(big(cyc.period), ord);
            prop_assert_eq!(*cyc.residues.last().unwrap(), 1);
        }

        #[test]
        fn cycle_period_divides_phi(a in 1u64..500, m in 2u64..300) {
            prop_assume!(a.gcd(&m) == 1);
            let phi = (1..=m).filter(|k| k.gcd(&m) == 1).count() as u64;
            let cyc = residue_cycle(&big(a), m).unwrap();
            prop_assert_eq!(phi % cyc.period, 0);
            for k in 1..3 * cyc.period {
                prop_assert_eq!(cyc.residue_at(k + cyc.period), cyc.residue_at(k));
            }
        }

        #[test]
        fn power_sequence_matches_direct_powers(base in 0u64..1000, m in 2u64..100, e in 1u64..80) {
            let seq = PowerSequence::new(&big(base), m);
            let direct = big(base).modpow(&big(e), &big(m));
            prop_assert_eq!(big(seq.value_at(e)), direct);
        }
    }
}

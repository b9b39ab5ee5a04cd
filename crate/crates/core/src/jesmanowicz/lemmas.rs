use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use serde::Serialize;

use super::ExponentSolution;
use crate::triples::{ser_big, PythTriple, TripleParams};

/// The exponent-shape predicate: `(2, 2, 2)`, or `x ≥ 2`, `z ≥ 2`, `x ≥ z`
/// and `x ≡ z (mod 2)`.
pub(crate) fn lemma2_holds(x: u32, _y: u32, z: u32) -> bool {
    (x, z) == (2, 2) || (x >= 2 && z >= 2 && x >= z && (x - z).is_multiple_of(2))
}

/// Predicate any non-trivial solution is claimed to satisfy.
///
/// The claim is audited against the oracle wherever it is used for pruning;
/// it does not depend on the triple.
pub fn lemma2_constraints(_tr: &PythTriple) -> impl Fn(ExponentSolution) -> bool {
    |s: ExponentSolution| lemma2_holds(s.x, s.y, s.z)
}

/// `μ = c^(2k3+1) + a^(2k1+1)` and `ν = c^(2k3+1) − a^(2k1+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuNuSplit {
    pub k1: u32,
    pub k2: u32,
    pub k3: u32,
    #[serde(serialize_with = "ser_big")]
    pub mu: BigUint,
    #[serde(serialize_with = "ser_bigint")]
    pub nu: BigInt,
    /// `ν > 0` and `μ·ν = b^(4k2+2)`.
    pub identity_holds: bool,
    /// `(μ + ν)/2 = c^(2k3+1)` and `(μ − ν)/2 = a^(2k1+1)` exactly.
    pub reconstructs: bool,
    /// `μ = 2^(4k2+1)·s^(4k2+2)` and `ν = 2·t^(4k2+2)`.
    pub st_form: bool,
}

fn ser_bigint<S: serde::Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    let num: serde_json::Number = n.to_string().parse().map_err(serde::ser::Error::custom)?;
    num.serialize(s)
}

pub fn mu_nu_split(tr: &PythTriple, k1: u32, k2: u32, k3: u32) -> MuNuSplit {
    let c_pow = BigInt::from(tr.c().pow(2 * k3 + 1));
    let a_pow = BigInt::from(tr.a().pow(2 * k1 + 1));
    let b_pow = BigInt::from(tr.b().pow(4 * k2 + 2));
    let mu = &c_pow + &a_pow;
    let nu = &c_pow - &a_pow;

    let identity_holds = nu.sign() == Sign::Plus && &mu * &nu == b_pow;
    let half = |n: BigInt| n.is_even().then(|| n / 2);
    let reconstructs = half(&mu + &nu) == Some(c_pow) && half(&mu - &nu) == Some(a_pow);

    let p = tr.params();
    let e = 4 * k2 + 2;
    let st_form = mu == BigInt::from(BigUint::from(2u32).pow(4 * k2 + 1) * p.s().pow(e))
        && nu == BigInt::from(BigUint::from(2u32) * p.t().pow(e));

    MuNuSplit {
        k1,
        k2,
        k3,
        mu: mu.to_biguint().expect("sum of positive powers"),
        nu,
        identity_holds,
        reconstructs,
        st_form,
    }
}

/// Which system of the pair was tested for a given `(s, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Lemma1System {
    /// `s` even: `c^Z + a^X = 2^(2Y−1)·s^(2Y)`, `c^Z − a^X = 2·t^(2Y)`.
    #[serde(rename = "i")]
    SEven,
    /// `t` even: `c^Z + a^X = 2·t^(2Y)`, `c^Z − a^X = 2^(2Y−1)·s^(2Y)`.
    #[serde(rename = "ii")]
    TEven,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Hit {
    pub s: u64,
    pub t: u64,
    pub system: Lemma1System,
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Lemma1Report {
    pub s_max: u64,
    pub exp_bound: u32,
    pub pairs_scanned: u64,
    /// Pairs whose system is satisfied at `X = Y = Z = 1`.
    pub trivial_confirmed: u64,
    /// Pairs whose system is not satisfied at `X = Y = Z = 1`.
    pub trivial_absent: u64,
    /// Solutions other than `X = Y = Z = 1`; expected empty.
    pub hits: Vec<Lemma1Hit>,
}

/// Exhausts `1 ≤ X, Y, Z ≤ exp_bound` for every valid `(s, t)` with
/// `s ≤ s_max`, testing the system selected by which parameter is even.
pub fn lemma1_scan(s_max: u64, exp_bound: u32) -> Lemma1Report {
    let mut report = Lemma1Report { s_max, exp_bound, ..Default::default() };
    let two = BigUint::from(2u32);
    for s in 2..=s_max {
        for t in 1..s {
            let Ok(params) = TripleParams::new(s, t) else { continue };
            report.pairs_scanned += 1;
            let tr = PythTriple::from_params(&params);
            let system = if s % 2 == 0 { Lemma1System::SEven } else { Lemma1System::TEven };

            let a_pows: Vec<BigUint> = (1..=exp_bound).map(|x| tr.a().pow(x)).collect();
            let c_pows: Vec<BigUint> = (1..=exp_bound).map(|z| tr.c().pow(z)).collect();
            // (sum, difference) right-hand sides for each Y
            let rhs: Vec<(BigUint, BigUint)> = (1..=exp_bound)
                .map(|y| {
                    let s_side = two.pow(2 * y - 1) * params.s().pow(2 * y);
                    let t_side = &two * params.t().pow(2 * y);
                    match system {
                        Lemma1System::SEven => (s_side, t_side),
                        Lemma1System::TEven => (t_side, s_side),
                    }
                })
                .collect();

            let mut trivial = false;
            for (zi, cz) in c_pows.iter().enumerate() {
                for (xi, ax) in a_pows.iter().enumerate() {
                    if ax >= cz {
                        break;
                    }
                    let (sum, diff) = (cz + ax, cz - ax);
                    for (yi, (want_sum, want_diff)) in rhs.iter().enumerate() {
                        if sum != *want_sum || diff != *want_diff {
                            continue;
                        }
                        let (x, y, z) = (xi as u32 + 1, yi as u32 + 1, zi as u32 + 1);
                        if (x, y, z) == (1, 1, 1) {
                            trivial = true;
                        } else {
                            report.hits.push(Lemma1Hit { s, t, system, x, y, z });
                        }
                    }
                }
            }
            if trivial {
                report.trivial_confirmed += 1;
            } else {
                report.trivial_absent += 1;
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triples::validate;

    fn tr(a: u32, b: u32, c: u32) -> PythTriple {
        validate(a, b, c).unwrap()
    }

    #[test]
    fn lemma2_predicate_examples() {
        let p = lemma2_constraints(&tr(3, 4, 5));
        assert!(p(ExponentSolution::new(2, 2, 2)));
        for y in 1..10 {
            for z in 1..10 {
                assert!(!p(ExponentSolution::new(1, y, z)));
            }
        }
        assert!(!p(ExponentSolution::new(3, 5, 2)));
        assert!(p(ExponentSolution::new(6, 1, 4)));
        assert!(!p(ExponentSolution::new(2, 1, 4)));
    }

    #[test]
    fn mu_nu_examples() {
        let m = mu_nu_split(&tr(3, 4, 5), 0, 0, 0);
        assert_eq!((m.mu.clone(), m.nu.clone()), (BigUint::from(8u32), BigInt::from(2)));
        assert!(m.identity_holds && m.reconstructs && m.st_form);

        let m = mu_nu_split(&tr(5, 12, 13), 0, 0, 0);
        assert_eq!((m.mu.clone(), m.nu.clone()), (BigUint::from(18u32), BigInt::from(8)));
        assert!(m.identity_holds && m.reconstructs && m.st_form);

        let m = mu_nu_split(&tr(3, 4, 5), 1, 0, 0);
        assert_eq!((m.mu.clone(), m.nu.clone()), (BigUint::from(32u32), BigInt::from(-22)));
        assert!(!m.identity_holds);
        assert!(m.reconstructs);
    }

    #[test]
    fn mu_nu_serialises_negative_nu() {
        let m = mu_nu_split(&tr(3, 4, 5), 1, 0, 0);
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.contains("\"mu\":32,\"nu\":-22"), "{json}");
    }

    #[test]
    fn lemma1_smallest_scan() {
        let r = lemma1_scan(2, 1);
        assert_eq!(r.pairs_scanned, 1);
        assert_eq!(r.trivial_confirmed, 1);
        assert!(r.hits.is_empty());
    }

    #[test]
    fn lemma1_t_even_system_has_no_trivial_solution() {
        // s = 3, t = 2: c + a = 2s² = 18, but the t-even system asks for 2t² = 8
        let r = lemma1_scan(3, 3);
        assert_eq!(r.pairs_scanned, 2);
        assert_eq!((r.trivial_confirmed, r.trivial_absent), (1, 1));
        assert!(r.hits.is_empty());
    }
}

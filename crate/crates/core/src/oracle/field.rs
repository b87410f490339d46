use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::degree::DegreeFunction;
use crate::error::{Error, Result};

/// The base field of the polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    Rationals,
    PrimeField { p: u64 },
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PrimeField { p })
    }

    /// Characteristic; 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField { p } => p,
        }
    }

    /// True iff the characteristic is 0 or exceeds `bound`.
    pub fn char_exceeds(&self, bound: u64) -> bool {
        match *self {
            FieldSpec::Rationals => true,
            FieldSpec::PrimeField { p } => p > bound,
        }
    }

    /// Warning when the characteristic is at most `phi(1)+phi(2)+phi(3)-2`,
    /// below which `J_phi` and `I_phi` may have different Hilbert series.
    pub fn hypothesis_warning(&self, f: &DegreeFunction) -> Option<String> {
        let bound = u64::from(f.total()).saturating_sub(2);
        (!self.char_exceeds(bound)).then(|| {
            format!(
                "characteristic {} does not exceed phi(1)+phi(2)+phi(3)-2 = {bound} for phi={f}; \
                 the Hilbert series of J_phi may differ from the characteristic-0 one",
                self.characteristic()
            )
        })
    }

    /// Reduces an integer into the field's canonical integer representative:
    /// unchanged over the rationals, the residue in `[0, p)` otherwise.
    pub fn reduce(&self, v: &BigInt) -> BigInt {
        match *self {
            FieldSpec::Rationals => v.clone(),
            FieldSpec::PrimeField { p } => BigInt::from(residue(v, p)),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::PrimeField { p } => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q`, `Q`, `QQ`, `rationals`, `0`, `p=7`, `GF(7)` or a bare prime.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        if matches!(lower.as_str(), "q" | "qq" | "rationals" | "rational" | "0") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = lower
            .strip_prefix("p=")
            .or_else(|| lower.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
            .unwrap_or(&lower);
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("cannot parse field `{s}`")))?;
        FieldSpec::prime(p)
    }
}

pub(crate) fn residue(v: &BigInt, p: u64) -> u64 {
    let r = (v.magnitude() % p).to_u64().expect("residue below p");
    if v.is_negative() && r != 0 {
        p - r
    } else {
        r
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes in `[2, bound]`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fields() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("QQ".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!(
            "p=2".parse::<FieldSpec>().unwrap(),
            FieldSpec::PrimeField { p: 2 }
        );
        assert_eq!(
            "GF(101)".parse::<FieldSpec>().unwrap(),
            FieldSpec::PrimeField { p: 101 }
        );
        assert_eq!(
            "31".parse::<FieldSpec>().unwrap(),
            FieldSpec::PrimeField { p: 31 }
        );
        assert!("p=9".parse::<FieldSpec>().is_err());
        assert!("banana".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = primes_up_to(50);
        assert_eq!(
            small,
            [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
        );
        assert!(is_prime(4_611_686_018_427_387_847)); // 2^62 - 57
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2, 3, 5, 7
        assert!(!is_prime(1));
    }

    #[test]
    fn residues() {
        assert_eq!(residue(&BigInt::from(-3), 7), 4);
        assert_eq!(residue(&BigInt::from(14), 7), 0);
        assert_eq!(residue(&BigInt::from(-14), 7), 0);
        assert_eq!(mul_mod(inv_mod(3, 7), 3, 7), 1);
    }

    #[test]
    fn warnings() {
        let f = DegreeFunction::new(3, 2, 1).unwrap();
        assert!(FieldSpec::PrimeField { p: 2 }
            .hypothesis_warning(&f)
            .is_some());
        assert!(FieldSpec::PrimeField { p: 5 }
            .hypothesis_warning(&f)
            .is_none());
        assert!(FieldSpec::Rationals.hypothesis_warning(&f).is_none());
    }
}

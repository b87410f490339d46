//! Degree functions `phi = (phi(1), phi(2), phi(3))` and the divisor family
//! `D_j` they induce on the blow-up.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, NUM_POINTS};

/// Coarse classification, used for dispatch and error messages.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Linear,
    AlmostLinear,
    General,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Linear => "linear",
            Kind::AlmostLinear => "almost_linear",
            Kind::General => "general",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    /// `phi(r) = l + k(3 - r)`.
    Linear {
        l: u32,
        k: u32,
    },
    /// Consecutive differences are `k` and `k + 1` in some order.
    AlmostLinear {
        k: u32,
        delta: (u32, u32),
    },
    General,
}

impl Classification {
    pub fn kind(&self) -> Kind {
        match self {
            Classification::Linear { .. } => Kind::Linear,
            Classification::AlmostLinear { .. } => Kind::AlmostLinear,
            Classification::General => Kind::General,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeFunction {
    pub phi: [u32; 3],
    pub classification: Classification,
}

/// Classifies `(phi1, phi2, phi3)`. All entries must be positive.
pub fn classify(phi1: i64, phi2: i64, phi3: i64) -> Result<DegreeFunction> {
    let mut phi = [0u32; 3];
    for (slot, v) in phi.iter_mut().zip([phi1, phi2, phi3]) {
        if v < 1 {
            return Err(Error::InvalidArgument(format!(
                "degree function values must be positive, got ({phi1}, {phi2}, {phi3})"
            )));
        }
        *slot = u32::try_from(v).map_err(|_| {
            Error::InvalidArgument(format!("degree function value {v} is too large"))
        })?;
    }
    let d1 = phi1 - phi2;
    let d2 = phi2 - phi3;
    let classification = if d1 >= 1 && d1 == d2 {
        Classification::Linear {
            l: phi[2],
            k: d1 as u32,
        }
    } else if d1 >= 1 && d2 >= 1 && (d1 - d2).abs() == 1 {
        Classification::AlmostLinear {
            k: d1.min(d2) as u32,
            delta: (d1 as u32, d2 as u32),
        }
    } else {
        Classification::General
    };
    Ok(DegreeFunction {
        phi,
        classification,
    })
}

impl DegreeFunction {
    pub fn new(phi1: i64, phi2: i64, phi3: i64) -> Result<Self> {
        classify(phi1, phi2, phi3)
    }

    /// The linear degree function with `phi(r) = l + k(3 - r)`.
    pub fn linear(l: i64, k: i64) -> Result<Self> {
        if l < 1 || k < 1 {
            return Err(Error::InvalidArgument(format!(
                "linear degree functions need l, k >= 1, got l={l}, k={k}"
            )));
        }
        classify(l + 2 * k, l + k, l)
    }

    pub fn kind(&self) -> Kind {
        self.classification.kind()
    }

    /// `(phi(1) - phi(2), phi(2) - phi(3))`, possibly nonpositive for general `phi`.
    pub fn delta(&self) -> (i64, i64) {
        let [a, b, c] = self.phi.map(i64::from);
        (a - b, b - c)
    }

    /// Exponents `t_i` of the seven generators `L_{p_i}^{t_i}` of `J_phi`, in
    /// point order.
    pub fn generator_exponents(&self) -> [u32; NUM_POINTS] {
        let [p1, p2, p3] = self.phi;
        [p1, p1, p1, 2 * p2, 2 * p2, 2 * p2, 3 * p3]
    }

    /// Sum `phi(1) + phi(2) + phi(3)`.
    pub fn total(&self) -> u32 {
        self.phi.iter().sum()
    }

    fn require_special(&self, op: &'static str) -> Result<()> {
        match self.kind() {
            Kind::Linear | Kind::AlmostLinear => Ok(()),
            kind => Err(Error::UnsupportedClassification { op, kind }),
        }
    }
}

impl fmt::Display for DegreeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.phi;
        write!(f, "({a},{b},{c})")
    }
}

/// Multiplicities `a_1..a_7` of the fatpoint scheme in degree `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiplicityProfile {
    pub j: u32,
    pub a: [u32; NUM_POINTS],
}

/// `a_i = (j - t_i + 1)_+` with `t_i` the generator exponents.
pub fn multiplicities(f: &DegreeFunction, j: u32) -> MultiplicityProfile {
    let a = f
        .generator_exponents()
        .map(|t| (i64::from(j) - i64::from(t) + 1).max(0) as u32);
    MultiplicityProfile { j, a }
}

/// `D_j = j E_0 - sum a_i E_i`.
pub fn divisor_at(f: &DegreeFunction, j: u32) -> DivisorClass {
    let prof = multiplicities(f, j);
    DivisorClass::from_degree_and_multiplicities(i64::from(j), prof.a.map(i64::from))
}

/// Degrees of the generators of `J_phi` (equivalently of `I_phi`), sorted.
pub fn generator_degrees(f: &DegreeFunction) -> Vec<u32> {
    let mut d = f.generator_exponents().to_vec();
    d.sort_unstable();
    d
}

/// First degree in which `R/J_phi` vanishes: `phi(1) + phi(2) + phi(3) - 2`.
pub fn socle_bound(f: &DegreeFunction) -> Result<u32> {
    f.require_special("socle_bound")?;
    Ok(f.total() - 2)
}

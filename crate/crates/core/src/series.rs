//! Hilbert series of `R/J_phi`, `R/I_phi` and of generic quotients.
//!
//! A series is kept both as its coefficient list and, where known, as the
//! numerator `N(t)` of `N(t) / (1 - t)^3`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::degree::{
    divisor_at, generator_degrees, socle_bound, Classification, DegreeFunction, Kind,
};
use crate::error::{Error, Result};
use crate::oracle::forms::Exponent;
use crate::reduce::h0;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    /// Coefficient of `t^j`, trailing zeros trimmed.
    pub poly: Vec<u64>,
    /// Numerator over `(1 - t)^3`, trailing zeros trimmed.
    pub numerator: Option<Vec<i64>>,
    /// True when `poly` is only an initial segment of an infinite series.
    #[serde(default)]
    pub is_prefix: bool,
}

impl HilbertSeries {
    /// A finite series, with the numerator `poly * (1 - t)^3`.
    pub fn from_poly(poly: Vec<u64>) -> Self {
        let poly = trim_u(poly);
        let numerator = Some(numerator_of_poly(&poly));
        HilbertSeries {
            poly,
            numerator,
            is_prefix: false,
        }
    }

    /// The series `numerator / (1 - t)^3`, which must be a polynomial with
    /// nonnegative coefficients.
    pub fn from_numerator(numerator: Vec<i64>) -> Result<Self> {
        let numerator = trim_i(numerator);
        let expanded = expand(&numerator, numerator.len() + 3);
        if expanded[numerator.len()..].iter().any(|&c| c != 0) {
            return Err(Error::InvalidArgument(format!(
                "numerator {} is not divisible by (1-t)^3",
                format_numerator(&numerator)
            )));
        }
        let poly = expanded
            .iter()
            .map(|&c| u64::try_from(c))
            .collect::<std::result::Result<Vec<u64>, _>>()
            .map_err(|_| {
                Error::InvalidArgument(format!(
                    "numerator {} expands with a negative coefficient",
                    format_numerator(&numerator)
                ))
            })?;
        Ok(HilbertSeries {
            poly: trim_u(poly),
            numerator: Some(numerator),
            is_prefix: false,
        })
    }

    /// Coefficient of `t^j`; zero past the end of a finite series.
    pub fn coeff(&self, j: usize) -> u64 {
        self.poly.get(j).copied().unwrap_or(0)
    }

    /// Degree of the last nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.poly.len().checked_sub(1)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.poly))?;
        if self.is_prefix {
            f.write_str(" + ...")?;
        }
        Ok(())
    }
}

/// `x^a y^b z^c`, not the unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonomialGenerator {
    pub exponents: Exponent,
}

impl MonomialGenerator {
    pub fn new(exponents: Exponent) -> Result<Self> {
        if exponents == [0, 0, 0] {
            return Err(Error::InvalidArgument(
                "the unit monomial generates the whole ring".into(),
            ));
        }
        Ok(MonomialGenerator { exponents })
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn divides(&self, m: Exponent) -> bool {
        self.exponents.iter().zip(m).all(|(a, b)| *a <= b)
    }
}

/// `x^phi(1), y^phi(1), z^phi(1), (xy)^phi(2), (xz)^phi(2), (yz)^phi(2), (xyz)^phi(3)`.
pub fn i_phi_generators(f: &DegreeFunction) -> Vec<MonomialGenerator> {
    crate::oracle::forms::i_generator_exponents(f)
        .into_iter()
        .map(|exponents| MonomialGenerator { exponents })
        .collect()
}

/// `R/J_phi` by divisor reduction: `dim (R/J_phi)_j = h^0(D_j)`.
///
/// Linear and almost linear `phi` vanish from `phi(1)+phi(2)+phi(3)-2` on.
/// For other `phi` the sweep runs to `max_degree` and the result is marked
/// as a prefix unless it reaches zero.
pub fn series_geometric(f: &DegreeFunction, max_degree: Option<u32>) -> Result<HilbertSeries> {
    let (top, bounded) = match (socle_bound(f), max_degree) {
        (Ok(b), _) => (b, true),
        (Err(_), Some(m)) => (m, false),
        (Err(e), None) => return Err(e),
    };
    let poly: Vec<u64> = (0..=top)
        .into_par_iter()
        .map(|j| h0(&divisor_at(f, j)))
        .collect();
    if bounded {
        debug_assert_eq!(
            poly.last(),
            Some(&0),
            "h0 must vanish at the socle bound of {f}"
        );
        return Ok(HilbertSeries::from_poly(poly));
    }
    let reaches_zero = poly.last() == Some(&0);
    let mut s = HilbertSeries::from_poly(poly);
    if !reaches_zero {
        s.is_prefix = true;
        s.numerator = None;
    }
    Ok(s)
}

fn add_term(terms: &mut BTreeMap<u32, i64>, exp: u32, c: i64) {
    *terms.entry(exp).or_insert(0) += c;
}

fn terms_to_vec(terms: BTreeMap<u32, i64>) -> Vec<i64> {
    let len = terms.keys().max().map_or(1, |m| *m as usize + 1);
    let mut v = vec![0; len];
    for (e, c) in terms {
        v[e as usize] += c;
    }
    trim_i(v)
}

/// `1 - 3t^phi(1) - 3t^2phi(2) - t^3phi(3) + 6t^(phi(1)+phi(2))
/// + 6t^(2phi(2)+phi(3)) - 6t^(phi(1)+phi(2)+phi(3))`.
pub fn numerator_linear(f: &DegreeFunction) -> Result<HilbertSeries> {
    if f.kind() != Kind::Linear {
        return Err(Error::UnsupportedClassification {
            op: "numerator_linear",
            kind: f.kind(),
        });
    }
    let [p1, p2, p3] = f.phi;
    let mut t = BTreeMap::new();
    add_term(&mut t, 0, 1);
    add_term(&mut t, p1, -3);
    add_term(&mut t, 2 * p2, -3);
    add_term(&mut t, 3 * p3, -1);
    add_term(&mut t, p1 + p2, 6);
    add_term(&mut t, 2 * p2 + p3, 6);
    add_term(&mut t, p1 + p2 + p3, -6);
    HilbertSeries::from_numerator(terms_to_vec(t))
}

/// `1 - 3t^phi(1) - 3t^2phi(2) - t^3phi(3) + 3t^(2phi(2)+phi(3))
/// + 3t^(phi(1)+2phi(3)) + 6t^(phi(1)+phi(2)) - 6t^(phi(1)+phi(2)+phi(3))`.
/// Linear input is routed to [`numerator_linear`].
pub fn numerator_almost_linear(f: &DegreeFunction) -> Result<HilbertSeries> {
    match f.kind() {
        Kind::Linear => return numerator_linear(f),
        Kind::AlmostLinear => {}
        kind => {
            return Err(Error::UnsupportedClassification {
                op: "numerator_almost_linear",
                kind,
            })
        }
    }
    let [p1, p2, p3] = f.phi;
    let mut t = BTreeMap::new();
    add_term(&mut t, 0, 1);
    add_term(&mut t, p1, -3);
    add_term(&mut t, 2 * p2, -3);
    add_term(&mut t, 3 * p3, -1);
    add_term(&mut t, 2 * p2 + p3, 3);
    add_term(&mut t, p1 + 2 * p3, 3);
    add_term(&mut t, p1 + p2, 6);
    add_term(&mut t, p1 + p2 + p3, -6);
    HilbertSeries::from_numerator(terms_to_vec(t))
}

/// The closed form matching the classification of `f`.
pub fn closed_form(f: &DegreeFunction) -> Result<HilbertSeries> {
    match f.classification {
        Classification::Linear { .. } => numerator_linear(f),
        Classification::AlmostLinear { .. } => numerator_almost_linear(f),
        Classification::General => Err(Error::UnsupportedClassification {
            op: "closed_form",
            kind: Kind::General,
        }),
    }
}

fn lcm_exp(a: Exponent, b: Exponent) -> Exponent {
    [a[0].max(b[0]), a[1].max(b[1]), a[2].max(b[2])]
}

fn has_pure_powers(gens: &[MonomialGenerator]) -> bool {
    (0..3).all(|v| {
        gens.iter()
            .any(|g| g.exponents[v] > 0 && (0..3).all(|w| w == v || g.exponents[w] == 0))
    })
}

/// Largest degree in which an artinian monomial quotient can be nonzero.
fn monomial_top_degree(gens: &[MonomialGenerator]) -> Option<u32> {
    let pure = |v: usize| {
        gens.iter()
            .filter(|g| (0..3).all(|w| w == v || g.exponents[w] == 0))
            .map(|g| g.exponents[v])
            .min()
    };
    Some(pure(0)? + pure(1)? + pure(2)? - 3)
}

/// Taylor resolution: the numerator coefficient of `t^d` is
/// `sum (-1)^|S|` over generator subsets `S` whose lcm has degree `d`.
/// Non-artinian ideals give a numerator with an empty `poly`; see
/// [`expand_series`] for a prefix.
pub fn series_monomial(gens: &[MonomialGenerator]) -> HilbertSeries {
    let mut terms: BTreeMap<u32, i64> = BTreeMap::new();
    fn walk(gens: &[MonomialGenerator], lcm: Exponent, sign: i64, terms: &mut BTreeMap<u32, i64>) {
        add_term(terms, lcm.iter().sum(), sign);
        for (i, g) in gens.iter().enumerate() {
            walk(&gens[i + 1..], lcm_exp(lcm, g.exponents), -sign, terms);
        }
    }
    walk(gens, [0, 0, 0], 1, &mut terms);
    let numerator = terms_to_vec(terms);
    if has_pure_powers(gens) {
        HilbertSeries::from_numerator(numerator).expect("artinian monomial quotient")
    } else {
        HilbertSeries {
            poly: Vec::new(),
            numerator: Some(numerator),
            is_prefix: true,
        }
    }
}

/// Counts standard monomials degree by degree. Without `max_degree` the
/// ideal must be artinian.
pub fn series_monomial_by_counting(
    gens: &[MonomialGenerator],
    max_degree: Option<u32>,
) -> Result<HilbertSeries> {
    let top = match (monomial_top_degree(gens), max_degree) {
        (_, Some(m)) => m,
        (Some(t), None) => t,
        (None, None) => return Err(Error::NonArtinian),
    };
    let poly: Vec<u64> = (0..=top)
        .map(|d| {
            crate::oracle::forms::monomials(d)
                .into_iter()
                .filter(|&m| !gens.iter().any(|g| g.divides(m)))
                .count() as u64
        })
        .collect();
    let finite = has_pure_powers(gens) || poly.last() == Some(&0);
    let mut s = HilbertSeries::from_poly(poly);
    if !finite {
        s.is_prefix = true;
        s.numerator = None;
    }
    Ok(s)
}

/// Generic forms of the given degrees: `prod (1 - t^d) / (1 - t)^3` up to
/// its first nonpositive coefficient. With fewer than three forms the
/// series never stops and `max_degree` is required.
pub fn series_generic(degrees: &[u32], max_degree: Option<u32>) -> Result<HilbertSeries> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(Error::InvalidArgument(
            "generic series needs degrees >= 1".into(),
        ));
    }
    let mut numerator = vec![1i64];
    for &d in degrees {
        let mut next = vec![0i64; numerator.len() + d as usize];
        for (i, c) in numerator.iter().enumerate() {
            next[i] += c;
            next[i + d as usize] -= c;
        }
        numerator = next;
    }
    let numerator = trim_i(numerator);
    let len =
        match (degrees.len() >= 3, max_degree) {
            (_, Some(m)) => m as usize + 1,
            (true, None) => numerator.len() + 1,
            (false, None) => return Err(Error::InvalidArgument(
                "fewer than three generic forms never give an artinian quotient; pass a max degree"
                    .into(),
            )),
        };
    let expanded = expand(&numerator, len);
    let stop = expanded.iter().position(|&c| c <= 0);
    let poly: Vec<u64> = expanded[..stop.unwrap_or(len)]
        .iter()
        .map(|&c| c as u64)
        .collect();
    let is_prefix = stop.is_none();
    let numerator = (!is_prefix).then(|| numerator_of_poly(&poly));
    Ok(HilbertSeries {
        poly,
        numerator,
        is_prefix,
    })
}

/// The generic series in the generator degrees of `f`.
pub fn series_generic_for(f: &DegreeFunction) -> Result<HilbertSeries> {
    series_generic(&generator_degrees(f), None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub phi: DegreeFunction,
    pub geometric: HilbertSeries,
    pub monomial: HilbertSeries,
    pub generic: HilbertSeries,
    pub closed: HilbertSeries,
    pub j_equals_i: bool,
    pub j_equals_generic: bool,
    pub closed_form_matches: bool,
}

/// The geometric series of `R/J_phi` against `R/I_phi`, the generic series
/// and the closed form.
pub fn compare(f: &DegreeFunction) -> Result<ComparisonReport> {
    let closed = closed_form(f)?;
    let geometric = series_geometric(f, None)?;
    let monomial = series_monomial(&i_phi_generators(f));
    let generic = series_generic_for(f)?;
    Ok(ComparisonReport {
        phi: *f,
        j_equals_i: geometric.poly == monomial.poly,
        j_equals_generic: geometric.poly == generic.poly,
        closed_form_matches: closed.poly == geometric.poly,
        geometric,
        monomial,
        generic,
        closed,
    })
}

/// The first `len` coefficients of `numerator / (1 - t)^3`.
pub fn expand(numerator: &[i64], len: usize) -> Vec<i64> {
    (0..len)
        .map(|j| {
            numerator
                .iter()
                .enumerate()
                .take(j + 1)
                .map(|(i, c)| c * binom2((j - i) as i64 + 2))
                .sum()
        })
        .collect()
}

/// Expands the numerator of `s` to `len` coefficients as a prefix series.
pub fn expand_series(s: &HilbertSeries, len: usize) -> Option<Vec<i64>> {
    s.numerator.as_deref().map(|n| expand(n, len))
}

/// `poly * (1 - t)^3`.
pub fn numerator_of_poly(poly: &[u64]) -> Vec<i64> {
    const CUBE: [i64; 4] = [1, -3, 3, -1];
    let mut out = vec![0i64; poly.len() + 3];
    for (i, &c) in poly.iter().enumerate() {
        for (k, w) in CUBE.iter().enumerate() {
            out[i + k] += w * c as i64;
        }
    }
    trim_i(out)
}

fn binom2(m: i64) -> i64 {
    if m >= 2 {
        m * (m - 1) / 2
    } else {
        0
    }
}

fn trim_u(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn trim_i(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn power(j: usize) -> String {
    match j {
        0 => String::new(),
        1 => "t".into(),
        _ => format!("t^{j}"),
    }
}

/// `1 + 3t + 6t^2`.
pub fn format_poly(poly: &[u64]) -> String {
    let parts: Vec<String> = poly
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(j, &c)| match (j, c) {
            (0, c) => c.to_string(),
            (j, 1) => power(j),
            (j, c) => format!("{c}{}", power(j)),
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// `(1 - 3t^5 + ...)/(1-t)^3`.
pub fn format_numerator(numerator: &[i64]) -> String {
    let mut s = String::new();
    for (j, &c) in numerator.iter().enumerate().filter(|(_, c)| **c != 0) {
        let mag = c.unsigned_abs();
        let body = match (j, mag) {
            (0, m) => m.to_string(),
            (j, 1) => power(j),
            (j, m) => format!("{m}{}", power(j)),
        };
        if s.is_empty() {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if c < 0 { " - " } else { " + " });
        }
        s.push_str(&body);
    }
    if s.is_empty() {
        s.push('0');
    }
    format!("({s})/(1-t)^3")
}

//! The cross-method harness: for every `phi` and degree `j`, the geometric
//! value `h^0(D_j)` is compared with the rank oracle, the closed form and the
//! monomial ideal, and the duality between `J_phi` and the fatpoint ideal is
//! checked.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::degree::{divisor_at, socle_bound, DegreeFunction};
use crate::error::Result;
use crate::oracle::forms::{
    fatpoint_dimension, ideal_dimension, j_generators, num_monomials, FatpointSystem,
};
use crate::oracle::FieldSpec;
use crate::reduce::h0;
use crate::series::{
    closed_form, expand, i_phi_generators, series_monomial, series_monomial_by_counting,
};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CheckRow {
    pub phi1: u32,
    pub phi2: u32,
    pub phi3: u32,
    pub j: u32,
    pub method_a: String,
    pub method_b: String,
    pub value_a: i64,
    pub value_b: i64,
    pub pass: bool,
}

pub const CSV_HEADER: &str = "phi1,phi2,phi3,j,method_a,method_b,value_a,value_b,pass";

impl CheckRow {
    fn new(f: &DegreeFunction, j: u32, a: &str, b: &str, va: i64, vb: i64) -> Self {
        let [phi1, phi2, phi3] = f.phi;
        CheckRow {
            phi1,
            phi2,
            phi3,
            j,
            method_a: a.into(),
            method_b: b.into(),
            value_a: va,
            value_b: vb,
            pass: va == vb,
        }
    }

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.phi1,
            self.phi2,
            self.phi3,
            self.j,
            self.method_a,
            self.method_b,
            self.value_a,
            self.value_b,
            self.pass
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub field: FieldSpec,
    /// Run the rank and fatpoint oracles (the expensive part).
    pub oracle: bool,
    /// Harness self-test: perturb the closed-form numerator.
    pub corrupt: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            field: FieldSpec::Rationals,
            oracle: true,
            corrupt: false,
        }
    }
}

/// Linear `phi` with `1 <= l <= l_max`, `1 <= k <= k_max`.
pub fn linear_grid(l_max: u32, k_max: u32) -> Vec<DegreeFunction> {
    let mut out = Vec::new();
    for l in 1..=l_max as i64 {
        for k in 1..=k_max as i64 {
            out.push(DegreeFunction::linear(l, k).expect("positive l, k"));
        }
    }
    out
}

/// Almost linear `phi` with `phi(3) <= phi3_max` and `k <= k_max`, both
/// orders of the differences `k, k+1`.
pub fn almost_linear_grid(phi3_max: u32, k_max: u32) -> Vec<DegreeFunction> {
    let mut out = Vec::new();
    for p3 in 1..=phi3_max as i64 {
        for k in 1..=k_max as i64 {
            for (d1, d2) in [(k, k + 1), (k + 1, k)] {
                let p2 = p3 + d2;
                out.push(DegreeFunction::new(p2 + d1, p2, p3).expect("positive phi"));
            }
        }
    }
    out
}

fn binom2(j: u32) -> i64 {
    num_monomials(j) as i64
}

/// Rough cost in matrix cells of the oracle part; used as a guard.
pub fn cost_estimate(instances: &[DegreeFunction], opts: &VerifyOptions) -> u64 {
    if !opts.oracle {
        return 0;
    }
    instances
        .iter()
        .filter_map(|f| socle_bound(f).ok())
        .map(|b| (0..=b).map(|j| (binom2(j) as u64).pow(2)).sum::<u64>() * 2)
        .sum()
}

/// All checks for one `phi`, in degrees `0..=socle_bound`.
pub fn verify_instance(f: &DegreeFunction, opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    let bound = socle_bound(f)?;
    let mut closed = closed_form(f)?
        .numerator
        .expect("closed forms carry a numerator");
    if opts.corrupt {
        if closed.len() < 2 {
            closed.resize(2, 0);
        }
        closed[1] += 1;
    }
    let closed_poly = expand(&closed, bound as usize + 1);
    let i_gens = i_phi_generators(f);
    let taylor = series_monomial(&i_gens);
    let counting = series_monomial_by_counting(&i_gens, Some(bound))?;
    let j_gens = opts.oracle.then(|| j_generators(f, opts.field));

    let rows: Vec<Vec<CheckRow>> = (0..=bound)
        .into_par_iter()
        .map(|j| {
            let geom = h0(&divisor_at(f, j)) as i64;
            let mut rows = vec![
                CheckRow::new(f, j, "geometry", "closed", geom, closed_poly[j as usize]),
                CheckRow::new(
                    f,
                    j,
                    "geometry",
                    "taylor",
                    geom,
                    taylor.coeff(j as usize) as i64,
                ),
                CheckRow::new(
                    f,
                    j,
                    "taylor",
                    "counting",
                    taylor.coeff(j as usize) as i64,
                    counting.coeff(j as usize) as i64,
                ),
            ];
            if let Some(gens) = &j_gens {
                let ideal = ideal_dimension(gens, j, opts.field) as i64;
                rows.push(CheckRow::new(
                    f,
                    j,
                    "geometry",
                    "oracle",
                    geom,
                    binom2(j) - ideal,
                ));
                if !opts.field.char_exceeds(u64::from(j)) {
                    return rows;
                }
                let fat =
                    fatpoint_dimension(&FatpointSystem::for_degree_function(f, j), opts.field);
                rows.push(CheckRow::new(
                    f,
                    j,
                    "ideal+fatpoint",
                    "ambient",
                    ideal + fat as i64,
                    binom2(j),
                ));
            }
            rows
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

/// Runs every instance and merges the rows in sorted order.
pub fn verify_grid(instances: &[DegreeFunction], opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    let per: Vec<Result<Vec<CheckRow>>> = instances
        .par_iter()
        .map(|f| verify_instance(f, opts))
        .collect();
    let mut rows = Vec::new();
    for r in per {
        rows.extend(r?);
    }
    rows.sort();
    rows.dedup();
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::classify;

    #[test]
    fn small_instance_passes() {
        let f = classify(5, 3, 1).unwrap();
        let rows = verify_instance(&f, &VerifyOptions::default()).unwrap();
        assert!(rows.iter().all(|r| r.pass), "{rows:?}");
        assert_eq!(rows.len(), 5 * 8);
    }

    #[test]
    fn corruption_is_caught() {
        let f = classify(5, 3, 1).unwrap();
        let opts = VerifyOptions {
            corrupt: true,
            oracle: false,
            ..Default::default()
        };
        let rows = verify_instance(&f, &opts).unwrap();
        assert!(rows.iter().any(|r| !r.pass));
        assert!(rows
            .iter()
            .filter(|r| r.method_b != "closed")
            .all(|r| r.pass));
    }

    #[test]
    fn grids() {
        assert_eq!(linear_grid(3, 3).len(), 9);
        let al = almost_linear_grid(6, 4);
        assert_eq!(al.len(), 48);
        assert!(al
            .iter()
            .all(|f| f.kind() == crate::degree::Kind::AlmostLinear));
    }

    #[test]
    fn csv_row() {
        let f = classify(5, 3, 1).unwrap();
        let r = CheckRow::new(&f, 6, "geometry", "oracle", 6, 6);
        assert_eq!(r.csv(), "5,3,1,6,geometry,oracle,6,6,true");
        assert_eq!(CSV_HEADER.split(',').count(), r.csv().split(',').count());
    }
}

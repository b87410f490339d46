//! Brute-force exact linear algebra over `QQ` or `GF(p)`: graded pieces of
//! ideals generated by powers of linear forms, fatpoint conditions, quotient
//! bases and Koszul Betti numbers. Independent of the lattice machinery.

pub mod betti;
pub mod field;
pub mod forms;
pub mod linalg;

pub use betti::{
    betti_table, betti_table_to_degree, conjectured_linear_shape, minimal_generator_degrees,
    GradedBettiTable,
};
pub use field::FieldSpec;
pub use forms::{
    duality_check, fatpoint_dimension, i_generators, ideal_dimension, j_generators, power_of_form,
    quotient_basis, quotient_dimensions, DenseForm, FatpointSystem,
};

use crate::degree::DegreeFunction;
use crate::error::Result;

/// `dim (R/I)_d` for every `d` up to the last nonzero one. Without
/// `max_degree` the sweep stops at the first zero and fails on
/// non-artinian input.
pub fn quotient_hilbert_function(
    gens: &[DenseForm],
    field: FieldSpec,
    max_degree: Option<u32>,
) -> Result<Vec<u64>> {
    let hf: Vec<u64> = match max_degree {
        Some(m) => quotient_dimensions(gens, m, field)
            .into_iter()
            .map(|v| v as u64)
            .collect(),
        None => {
            let top = betti::artinian_top_degree(gens, field)?;
            match top {
                Some(t) => quotient_dimensions(gens, t, field)
                    .into_iter()
                    .map(|v| v as u64)
                    .collect(),
                None => Vec::new(),
            }
        }
    };
    Ok(trim(hf))
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// The Hilbert function of `R/J_phi` from the rank oracle.
pub fn j_hilbert_function(
    f: &DegreeFunction,
    field: FieldSpec,
    max_degree: Option<u32>,
) -> Result<Vec<u64>> {
    quotient_hilbert_function(&j_generators(f, field), field, max_degree)
}

/// Smallest prime `p <= bound` at which the Hilbert function of `R/J_phi`
/// over `GF(p)` differs from the rational one, or `None`. Data only; the
/// guaranteed bound is `p > phi(1)+phi(2)+phi(3)-2`.
pub fn first_divergent_prime(f: &DegreeFunction, bound: u64) -> Result<Option<u64>> {
    let reference = j_hilbert_function(f, FieldSpec::Rationals, None)?;
    for p in field::primes_up_to(bound) {
        let fp = FieldSpec::PrimeField { p };
        // compare on a window wide enough to see a longer tail
        let window = reference.len() as u32 + f.total();
        let hf = j_hilbert_function(f, fp, Some(window))?;
        if hf != reference {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::classify;

    #[test]
    fn hilbert_function_of_531() {
        let f = classify(5, 3, 1).unwrap();
        assert_eq!(
            j_hilbert_function(&f, FieldSpec::Rationals, None).unwrap(),
            [1, 3, 6, 9, 12, 12, 6]
        );
    }

    #[test]
    fn char_two_tail() {
        let f = classify(3, 2, 1).unwrap();
        let f2 = FieldSpec::PrimeField { p: 2 };
        assert_eq!(
            j_hilbert_function(&f, f2, None).unwrap(),
            [1, 3, 6, 6, 4, 1]
        );
        assert_eq!(first_divergent_prime(&f, 7).unwrap(), Some(2));
    }

    #[test]
    fn bounded_sweep_of_non_artinian() {
        let gens = [DenseForm::monomial([1, 0, 0])];
        assert!(quotient_hilbert_function(&gens, FieldSpec::Rationals, None).is_err());
        assert_eq!(
            quotient_hilbert_function(&gens, FieldSpec::Rationals, Some(3)).unwrap(),
            [1, 2, 3, 4]
        );
    }
}

//! Reduction of a divisor class to its nef part by subtracting negative curves.
//!
//! Starting from `D`, the catalog of negative curves is scanned in a fixed
//! order. The first curve `C` with `D.C < 0` is a fixed component of `|D|`;
//! the least number of copies restoring `D.C >= 0` is subtracted and the scan
//! restarts. The process stops either at a nef class `G`, in which case
//! `h^0(D) = h^0(G) = chi(G)` (nef classes on a rational surface with
//! `K^2 > 0` have no higher cohomology), or as soon as the `E_0` coefficient
//! turns negative, which certifies `h^0(D) = 0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{euler_characteristic, intersect, negative_curves, CurveClass, DivisorClass};

/// Hard cap on the number of batch steps. Each step lowers the `E_0`
/// coefficient or raises a positive `E_i` coefficient to zero, so honest
/// inputs finish far below this.
pub const STEP_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub curve: CurveClass,
    pub copies: i64,
    /// `D.C` before subtraction; always negative.
    pub pairing_before: i64,
    pub class_after: DivisorClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Effective { nef_part: DivisorClass },
    NotEffective { witness: DivisorClass },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub input: DivisorClass,
    pub steps: Vec<ReductionStep>,
    pub outcome: Outcome,
    pub h0: u64,
}

impl ReductionTrace {
    /// The class the reduction ended at (nef part or witness).
    pub fn final_class(&self) -> DivisorClass {
        match self.outcome {
            Outcome::Effective { nef_part } => nef_part,
            Outcome::NotEffective { witness } => witness,
        }
    }

    pub fn nef_part(&self) -> Option<DivisorClass> {
        match self.outcome {
            Outcome::Effective { nef_part } => Some(nef_part),
            Outcome::NotEffective { .. } => None,
        }
    }

    pub fn is_effective(&self) -> bool {
        matches!(self.outcome, Outcome::Effective { .. })
    }

    /// Total copies of the curve `label` subtracted over the whole trace.
    pub fn copies_of(&self, label: &str) -> i64 {
        self.steps
            .iter()
            .filter(|s| s.curve.label == label)
            .map(|s| s.copies)
            .sum()
    }

    /// The fixed part `Z = sum copies * C`.
    pub fn fixed_part(&self) -> DivisorClass {
        self.steps
            .iter()
            .fold(DivisorClass::ZERO, |acc, s| acc + s.copies * s.curve.class)
    }

    /// `chi` of the final class.
    pub fn final_chi(&self) -> i64 {
        euler_characteristic(&self.final_class())
    }
}

/// True iff `d` pairs nonnegatively with every catalog curve.
pub fn is_nef(d: &DivisorClass) -> bool {
    negative_curves()
        .iter()
        .all(|c| intersect(d, &c.class) >= 0)
}

/// Reduces `d` scanning the catalog in its standard order.
pub fn zariski_reduce(d: &DivisorClass) -> ReductionTrace {
    let order: Vec<usize> = (0..negative_curves().len()).collect();
    zariski_reduce_with_order(d, &order).expect("standard scan order is a valid permutation")
}

/// Reduces `d` scanning the catalog in the order given by `order`, a
/// permutation of catalog indices.
pub fn zariski_reduce_with_order(d: &DivisorClass, order: &[usize]) -> Result<ReductionTrace> {
    let catalog = negative_curves();
    let mut seen = vec![false; catalog.len()];
    for &i in order {
        if i >= catalog.len() || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidArgument(format!(
                "scan order {order:?} is not a permutation of the catalog"
            )));
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::InvalidArgument(format!(
            "scan order {order:?} is not a permutation of the catalog"
        )));
    }

    let mut current = *d;
    let mut steps = Vec::new();
    loop {
        if current.degree() < 0 {
            return Ok(ReductionTrace {
                input: *d,
                steps,
                outcome: Outcome::NotEffective { witness: current },
                h0: 0,
            });
        }
        let hit = order.iter().map(|&i| &catalog[i]).find_map(|c| {
            let p = intersect(&current, &c.class);
            (p < 0).then_some((c, p))
        });
        let Some((c, pairing)) = hit else {
            let chi = euler_characteristic(&current);
            debug_assert!(chi >= 0, "nef class {current} has negative chi");
            return Ok(ReductionTrace {
                input: *d,
                steps,
                outcome: Outcome::Effective { nef_part: current },
                h0: chi.max(0) as u64,
            });
        };
        if steps.len() >= STEP_LIMIT {
            return Err(Error::StepLimit(STEP_LIMIT));
        }
        let neg_sq = -c.self_intersection;
        let copies = (-pairing + neg_sq - 1) / neg_sq;
        current = current
            .checked_sub(
                &c.class
                    .checked_scale(copies)
                    .expect("curve multiple overflowed"),
            )
            .expect("reduction overflowed");
        steps.push(ReductionStep {
            curve: c.clone(),
            copies,
            pairing_before: pairing,
            class_after: current,
        });
    }
}

/// `h^0(d)`.
pub fn h0(d: &DivisorClass) -> u64 {
    zariski_reduce(d).h0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::{classify, divisor_at};
    use crate::lattice::curve;

    #[test]
    fn d6_of_531() {
        let f = classify(5, 3, 1).unwrap();
        let tr = zariski_reduce(&divisor_at(&f, 6));
        assert_eq!(
            tr.nef_part(),
            Some(DivisorClass([3, -1, -1, -1, 0, 0, 0, -1]))
        );
        let labels: Vec<(&str, i64)> = tr
            .steps
            .iter()
            .map(|s| (s.curve.label.as_str(), s.copies))
            .collect();
        assert_eq!(labels, [("C_167", 1), ("C_257", 1), ("C_347", 1)]);
        assert_eq!(tr.h0, 6);
    }

    #[test]
    fn d13_of_853() {
        let f = classify(8, 5, 3).unwrap();
        let tr = zariski_reduce(&divisor_at(&f, 13));
        assert_eq!(
            tr.nef_part(),
            Some(DivisorClass([4, -1, -1, -1, -1, -1, -1, -2]))
        );
        let labels: Vec<(&str, i64)> = tr
            .steps
            .iter()
            .map(|s| (s.curve.label.as_str(), s.copies))
            .collect();
        assert_eq!(
            labels,
            [
                ("C_124", 2),
                ("C_135", 2),
                ("C_236", 2),
                ("C_167", 1),
                ("C_257", 1),
                ("C_347", 1)
            ]
        );
        // intermediate class after the -2 curves through p_1, p_2, p_3
        assert_eq!(
            tr.steps[2].class_after,
            DivisorClass([7, -2, -2, -2, -2, -2, -2, -5])
        );
        assert_eq!(tr.h0, 6);
    }

    #[test]
    fn d7_of_531_is_not_effective() {
        let f = classify(5, 3, 1).unwrap();
        let tr = zariski_reduce(&divisor_at(&f, 7));
        assert!(!tr.is_effective());
        assert!(tr.final_class().degree() < 0);
        assert_eq!(tr.h0, 0);
    }

    #[test]
    fn zero_class() {
        let tr = zariski_reduce(&DivisorClass::ZERO);
        assert!(tr.steps.is_empty());
        assert_eq!(tr.nef_part(), Some(DivisorClass::ZERO));
        assert_eq!(tr.h0, 1);
    }

    #[test]
    fn nef_examples() {
        assert!(is_nef(&DivisorClass([3, -1, -1, -1, 0, 0, 0, -1])));
        assert!(!is_nef(&DivisorClass([6, -2, -2, -2, -1, -1, -1, -4])));
        assert!(is_nef(&DivisorClass::basis(0)));
    }

    #[test]
    fn h0_examples() {
        let f = classify(5, 3, 1).unwrap();
        assert_eq!(h0(&divisor_at(&f, 3)), 9);
        assert_eq!(h0(&divisor_at(&f, 6)), 6);
        assert_eq!(h0(&DivisorClass([2, 0, 0, 0, 0, 0, 0, 0])), 6);
    }

    #[test]
    fn steps_are_minimal() {
        let f = classify(8, 5, 3).unwrap();
        for j in 0..20 {
            let tr = zariski_reduce(&divisor_at(&f, j));
            let mut cur = tr.input;
            for s in &tr.steps {
                assert!(s.pairing_before < 0);
                assert_eq!(intersect(&cur, &s.curve.class), s.pairing_before);
                cur = cur - s.copies * s.curve.class;
                assert_eq!(cur, s.class_after);
                let after = intersect(&cur, &s.curve.class);
                assert!(after >= 0 && after < -s.curve.self_intersection);
            }
            assert_eq!(tr.input, tr.final_class() + tr.fixed_part());
        }
    }

    #[test]
    fn positive_exceptional_coefficients_are_cleared() {
        // -E4 - E5 - E6 + E7 first drops E7, then needs two copies of C_45
        let tr = zariski_reduce(&DivisorClass([0, 0, 0, 0, -1, -1, -1, 1]));
        assert_eq!(tr.steps[0].curve.label, "E_7");
        assert!(!tr.is_effective());
        let tr = zariski_reduce(&DivisorClass([1, 5, 0, 0, 0, 0, 0, 0]));
        assert_eq!(tr.copies_of("E_1"), 5);
        assert_eq!(tr.h0, 3);
    }

    #[test]
    fn rejects_bad_orders() {
        let d = DivisorClass::basis(0);
        assert!(zariski_reduce_with_order(&d, &[0, 1, 2]).is_err());
        let mut dup: Vec<usize> = (0..16).collect();
        dup[3] = 4;
        assert!(zariski_reduce_with_order(&d, &dup).is_err());
        let rev: Vec<usize> = (0..16).rev().collect();
        assert_eq!(zariski_reduce_with_order(&d, &rev).unwrap().h0, 3);
    }

    #[test]
    fn curve_lookup_for_copies() {
        let f = classify(8, 5, 3).unwrap();
        let tr = zariski_reduce(&divisor_at(&f, 13));
        assert_eq!(
            tr.copies_of("C_124") + tr.copies_of("C_135") + tr.copies_of("C_236"),
            6
        );
        assert_eq!(tr.copies_of(&curve("C_167").unwrap().label), 1);
    }
}

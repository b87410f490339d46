//! Picard lattice of the blow-up `X` of the projective plane at seven fixed
//! points.
//!
//! A class is stored by its raw coefficients on the basis `E_0, E_1, ..., E_7`,
//! where `E_0` is the pullback of a line and `E_i` is the exceptional curve
//! over `p_i`. The intersection form is `diag(1, -1, ..., -1)`.
//!
//! Arithmetic on classes is checked 64-bit; an overflow panics. Degrees that
//! actually occur stay in the hundreds, so this never triggers in practice.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

/// Number of blown-up points.
pub const NUM_POINTS: usize = 7;

/// A divisor class `c_0 E_0 + c_1 E_1 + ... + c_7 E_7`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct DivisorClass(pub [i64; 8]);

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass([0; 8]);

    pub fn new(coeffs: [i64; 8]) -> Self {
        DivisorClass(coeffs)
    }

    /// `j E_0 - sum a_i E_i`.
    pub fn from_degree_and_multiplicities(j: i64, a: [i64; NUM_POINTS]) -> Self {
        let mut c = [0i64; 8];
        c[0] = j;
        for (slot, ai) in c[1..].iter_mut().zip(a) {
            *slot = ai.checked_neg().expect("multiplicity overflows i64");
        }
        DivisorClass(c)
    }

    /// The basis class `E_i`, `0 <= i <= 7`.
    pub fn basis(i: usize) -> Self {
        assert!(i < 8, "basis index {i} out of range");
        let mut c = [0i64; 8];
        c[i] = 1;
        DivisorClass(c)
    }

    pub fn coeffs(&self) -> &[i64; 8] {
        &self.0
    }

    /// Coefficient of `E_0`, i.e. `D . E_0`.
    pub fn degree(&self) -> i64 {
        self.0[0]
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 8]
    }

    pub fn checked_sub(&self, rhs: &DivisorClass) -> Option<DivisorClass> {
        let mut out = [0i64; 8];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(&rhs.0)) {
            *o = a.checked_sub(*b)?;
        }
        Some(DivisorClass(out))
    }

    pub fn checked_add(&self, rhs: &DivisorClass) -> Option<DivisorClass> {
        let mut out = [0i64; 8];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(&rhs.0)) {
            *o = a.checked_add(*b)?;
        }
        Some(DivisorClass(out))
    }

    pub fn checked_scale(&self, m: i64) -> Option<DivisorClass> {
        let mut out = [0i64; 8];
        for (o, a) in out.iter_mut().zip(&self.0) {
            *o = a.checked_mul(m)?;
        }
        Some(DivisorClass(out))
    }

    /// Self-intersection `D . D`.
    pub fn square(&self) -> i64 {
        intersect(self, self)
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        self.checked_add(&rhs)
            .expect("divisor class addition overflowed")
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        self.checked_sub(&rhs)
            .expect("divisor class subtraction overflowed")
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self.checked_scale(-1)
            .expect("divisor class negation overflowed")
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        rhs.checked_scale(self)
            .expect("divisor class scaling overflowed")
    }
}

impl fmt::Display for DivisorClass {
    /// Writes e.g. `3E0 - E1 - E2 - E3 - E7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "E{i}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The intersection pairing `a . b = a_0 b_0 - sum_{i>=1} a_i b_i`.
///
/// Panics if the result does not fit in an `i64`.
pub fn intersect(a: &DivisorClass, b: &DivisorClass) -> i64 {
    let mut acc = a.0[0] as i128 * b.0[0] as i128;
    for i in 1..8 {
        acc -= a.0[i] as i128 * b.0[i] as i128;
    }
    i64::try_from(acc).expect("intersection number overflows i64")
}

/// `K_X = -3E_0 + E_1 + ... + E_7`.
pub fn canonical() -> DivisorClass {
    DivisorClass([-3, 1, 1, 1, 1, 1, 1, 1])
}

/// True iff `d.d + d.K` is even. This holds for every integral class since
/// `c^2` and `c` have the same parity coefficientwise.
pub fn genus_parity_check(d: &DivisorClass) -> bool {
    let k = canonical();
    let s = d.square() as i128 + intersect(d, &k) as i128;
    s % 2 == 0
}

/// Riemann-Roch: `chi(D) = (D^2 - D.K)/2 + 1`.
pub fn euler_characteristic(d: &DivisorClass) -> i64 {
    debug_assert!(genus_parity_check(d));
    let k = canonical();
    let num = d.square() as i128 - intersect(d, &k) as i128;
    i64::try_from(num / 2 + 1).expect("Euler characteristic overflows i64")
}

/// A negative curve on `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    pub label: String,
    pub class: DivisorClass,
    pub self_intersection: i64,
}

impl CurveClass {
    fn new(label: &str, class: DivisorClass) -> Self {
        CurveClass {
            label: label.to_string(),
            self_intersection: class.square(),
            class,
        }
    }
}

/// Index triples `{i, j, k}` of collinear points, in catalog order.
pub const COLLINEAR_TRIPLES: [[usize; 3]; 6] = [
    [1, 2, 4],
    [1, 3, 5],
    [2, 3, 6],
    [1, 6, 7],
    [2, 5, 7],
    [3, 4, 7],
];

/// Pairs among `p_4, p_5, p_6` whose lines carry a `-1` curve.
pub const SPECIAL_PAIRS: [[usize; 2]; 3] = [[4, 5], [4, 6], [5, 6]];

fn line_class(points: &[usize]) -> DivisorClass {
    let mut c = [0i64; 8];
    c[0] = 1;
    for &p in points {
        c[p] = -1;
    }
    DivisorClass(c)
}

/// The sixteen negative curves on `X`.
///
/// Order: `E_1..E_7`, then the six `-2` curves `C_124, C_135, C_236, C_167,
/// C_257, C_347`, then the `-1` curves `C_45, C_46, C_56`. The reduction scans
/// in this order.
pub fn negative_curves() -> &'static [CurveClass] {
    static CATALOG: OnceLock<Vec<CurveClass>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut out = Vec::with_capacity(16);
        for i in 1..=NUM_POINTS {
            out.push(CurveClass::new(&format!("E_{i}"), DivisorClass::basis(i)));
        }
        for t in COLLINEAR_TRIPLES {
            let label = format!("C_{}{}{}", t[0], t[1], t[2]);
            out.push(CurveClass::new(&label, line_class(&t)));
        }
        for p in SPECIAL_PAIRS {
            let label = format!("C_{}{}", p[0], p[1]);
            out.push(CurveClass::new(&label, line_class(&p)));
        }
        out
    })
}

/// Looks up a catalog curve by label, e.g. `"C_167"`.
pub fn curve(label: &str) -> Option<&'static CurveClass> {
    negative_curves().iter().find(|c| c.label == label)
}

/// The seven points `p_1, ..., p_7` in projective coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfig {
    pub points: [[i64; 3]; NUM_POINTS],
}

impl Default for PointConfig {
    fn default() -> Self {
        PointConfig::standard()
    }
}

impl PointConfig {
    pub fn standard() -> Self {
        PointConfig {
            points: [
                [1, 0, 0],
                [0, 1, 0],
                [0, 0, 1],
                [1, 1, 0],
                [1, 0, 1],
                [0, 1, 1],
                [1, 1, 1],
            ],
        }
    }

    /// 1-based point access.
    pub fn point(&self, i: usize) -> [i64; 3] {
        self.points[i - 1]
    }

    /// All collinear triples (1-based indices, sorted) found by determinant.
    pub fn collinear_triples(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for i in 1..=NUM_POINTS {
            for j in i + 1..=NUM_POINTS {
                for k in j + 1..=NUM_POINTS {
                    if det3(self.point(i), self.point(j), self.point(k)) == 0 {
                        out.push([i, j, k]);
                    }
                }
            }
        }
        out
    }
}

fn det3(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

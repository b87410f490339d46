//! Forms in `K[x, y, z]`, graded pieces of ideals and fatpoint conditions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::field::FieldSpec;
use super::linalg::{Echelon, IntRow, NormalForm};
use crate::degree::{multiplicities, DegreeFunction};
use crate::error::{Error, Result};
use crate::lattice::{PointConfig, NUM_POINTS};

/// Exponent vector `(a, b, c)` of `x^a y^b z^c`.
pub type Exponent = [u32; 3];

pub fn num_monomials(d: u32) -> usize {
    let d = d as usize;
    (d + 1) * (d + 2) / 2
}

/// Degree-`d` monomials in lex order (`x > y > z`), descending.
pub fn monomials(d: u32) -> Vec<Exponent> {
    let mut out = Vec::with_capacity(num_monomials(d));
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

/// Position of `e` in [`monomials`] of its degree.
pub fn monomial_index(e: Exponent) -> usize {
    let d = (e[0] + e[1] + e[2]) as usize;
    let r = d - e[0] as usize;
    r * (r + 1) / 2 + e[2] as usize
}

fn divides(a: Exponent, b: Exponent) -> bool {
    a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]
}

fn add_exp(a: Exponent, b: Exponent) -> Exponent {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// A homogeneous form with integer coefficients. Forms meant for a prime
/// field carry residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseForm {
    pub degree: u32,
    pub coeffs: BTreeMap<Exponent, BigInt>,
}

impl DenseForm {
    pub fn monomial(e: Exponent) -> Self {
        DenseForm {
            degree: e.iter().sum(),
            coeffs: BTreeMap::from([(e, BigInt::one())]),
        }
    }

    /// The single exponent if this form is a monomial (up to a unit).
    pub fn as_monomial(&self) -> Option<Exponent> {
        match self.coeffs.len() {
            1 => self.coeffs.keys().next().copied(),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: Exponent) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }
}

/// `(l_0 x + l_1 y + l_2 z)^t`, expanded by the multinomial theorem and
/// reduced into `field`.
pub fn power_of_form(l: [i64; 3], t: u32, field: FieldSpec) -> Result<DenseForm> {
    let lr = l.map(|v| field.reduce(&BigInt::from(v)));
    if lr.iter().all(Zero::is_zero) {
        return Err(Error::InvalidArgument(format!(
            "linear form {l:?} is zero over {field}"
        )));
    }
    let pow = |base: &BigInt, e: u32| num_traits::pow(base.clone(), e as usize);
    let mut coeffs = BTreeMap::new();
    let mut binom_a = BigInt::one(); // C(t, a)
    for a in 0..=t {
        let mut binom_b = BigInt::one(); // C(t - a, b)
        for b in 0..=t - a {
            let c = t - a - b;
            let v = &binom_a * &binom_b * pow(&lr[0], a) * pow(&lr[1], b) * pow(&lr[2], c);
            let v = field.reduce(&v);
            if !v.is_zero() {
                coeffs.insert([a, b, c], v);
            }
            binom_b = binom_b * (t - a - b) / (b + 1);
        }
        binom_a = binom_a * (t - a) / (a + 1);
    }
    Ok(DenseForm { degree: t, coeffs })
}

/// Generators `L_{p_i}^{t_i}` of `J_phi`: `x, y, z` to the `phi(1)`,
/// `x+y, x+z, y+z` to the `2 phi(2)`, `x+y+z` to the `3 phi(3)`.
pub fn j_generators(f: &DegreeFunction, field: FieldSpec) -> Vec<DenseForm> {
    let pts = PointConfig::standard();
    pts.points
        .iter()
        .zip(f.generator_exponents())
        .map(|(p, t)| power_of_form(*p, t, field).expect("points are nonzero"))
        .collect()
}

/// Monomial exponents of the generators of `I_phi`, in point order.
pub fn i_generator_exponents(f: &DegreeFunction) -> Vec<Exponent> {
    let [p1, p2, p3] = f.phi;
    vec![
        [p1, 0, 0],
        [0, p1, 0],
        [0, 0, p1],
        [p2, p2, 0],
        [p2, 0, p2],
        [0, p2, p2],
        [p3, p3, p3],
    ]
}

pub fn i_generators(f: &DegreeFunction) -> Vec<DenseForm> {
    i_generator_exponents(f)
        .into_iter()
        .map(DenseForm::monomial)
        .collect()
}

/// The degree-`d` piece of an ideal, in the monomial basis.
///
/// Monomials divisible by a monomial generator span a coordinate subspace
/// and are split off first; the echelon form only sees the remaining
/// columns.
pub struct GradedPiece {
    pub degree: u32,
    /// Monomials killed by monomial generators.
    pub killed: usize,
    /// For each degree-`d` monomial (by [`monomial_index`]) its column.
    column_of: Vec<Option<usize>>,
    columns: Vec<Exponent>,
    echelon: Echelon,
}

impl GradedPiece {
    pub fn new(gens: &[DenseForm], d: u32, field: FieldSpec) -> Self {
        let live: Vec<&DenseForm> = gens.iter().filter(|g| !g.is_zero()).collect();
        let mono_gens: Vec<Exponent> = live.iter().filter_map(|g| g.as_monomial()).collect();
        let mut column_of = Vec::with_capacity(num_monomials(d));
        let mut columns = Vec::new();
        let mut killed = 0;
        for m in monomials(d) {
            if mono_gens.iter().any(|&g| divides(g, m)) {
                column_of.push(None);
                killed += 1;
            } else {
                column_of.push(Some(columns.len()));
                columns.push(m);
            }
        }
        let mut echelon = Echelon::new(field, columns.len());
        'gens: for g in live.iter().filter(|g| g.as_monomial().is_none()) {
            if g.degree > d {
                continue;
            }
            for m in monomials(d - g.degree) {
                if echelon.is_full() {
                    break 'gens;
                }
                let row: IntRow = g
                    .coeffs
                    .iter()
                    .filter_map(|(e, v)| {
                        column_of[monomial_index(add_exp(*e, m))].map(|c| (c, v.clone()))
                    })
                    .collect();
                if !row.is_empty() {
                    echelon.insert(&row);
                }
            }
        }
        GradedPiece {
            degree: d,
            killed,
            column_of,
            columns,
            echelon,
        }
    }

    /// `dim I_d`.
    pub fn ideal_dim(&self) -> usize {
        self.killed + self.echelon.rank()
    }

    /// `dim (R/I)_d`.
    pub fn quotient_dim(&self) -> usize {
        self.columns.len() - self.echelon.rank()
    }

    /// Monomials whose cosets form a basis of `(R/I)_d`.
    pub fn quotient_basis(&self) -> Vec<Exponent> {
        self.echelon
            .free_columns()
            .into_iter()
            .map(|c| self.columns[c])
            .collect()
    }

    /// Normal form of the monomial `m` over the quotient basis, as
    /// `(basis position, numerator)` pairs over a common denominator.
    pub fn normal_form(&self, m: Exponent) -> NormalForm {
        let Some(col) = self.column_of[monomial_index(m)] else {
            return NormalForm {
                terms: Vec::new(),
                denom: BigInt::one(),
            };
        };
        let free = self.echelon.free_columns();
        let mut nf = self.echelon.normal_form_of_unit(col);
        for t in nf.terms.iter_mut() {
            t.0 = free
                .binary_search(&t.0)
                .expect("normal form lives on free columns");
        }
        nf
    }
}

/// `dim_K <gens>_j`.
pub fn ideal_dimension(gens: &[DenseForm], j: u32, field: FieldSpec) -> usize {
    GradedPiece::new(gens, j, field).ideal_dim()
}

/// Hilbert function of `R/<gens>` in each degree `0..=max_degree`.
pub fn quotient_dimensions(gens: &[DenseForm], max_degree: u32, field: FieldSpec) -> Vec<usize> {
    (0..=max_degree)
        .map(|d| GradedPiece::new(gens, d, field).quotient_dim())
        .collect()
}

/// For each `d <= up_to`, monomials whose cosets form a basis of `(R/I)_d`.
pub fn quotient_basis(gens: &[DenseForm], field: FieldSpec, up_to: u32) -> Vec<Vec<Exponent>> {
    (0..=up_to)
        .map(|d| GradedPiece::new(gens, d, field).quotient_basis())
        .collect()
}

/// Fatpoint scheme `m_1 p_1 + ... + m_7 p_7` together with a degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FatpointSystem {
    pub points: PointConfig,
    pub mults: [u32; NUM_POINTS],
    pub j: u32,
}

impl FatpointSystem {
    /// `F(j)` for `J_phi`: multiplicities `a_i = (j - t_i + 1)_+`.
    pub fn for_degree_function(f: &DegreeFunction, j: u32) -> Self {
        FatpointSystem {
            points: PointConfig::standard(),
            mults: multiplicities(f, j).a,
            j,
        }
    }

    /// Rows imposing that every partial derivative of order below `m_i`
    /// vanishes at `p_i`, one row per (point, derivative).
    pub fn condition_rows(&self) -> Vec<IntRow> {
        let mons = monomials(self.j);
        let mut rows = Vec::new();
        for (p, &m) in self.points.points.iter().zip(&self.mults) {
            for order in 0..m.min(self.j + 1) {
                for beta in monomials(order) {
                    let row: IntRow = mons
                        .iter()
                        .enumerate()
                        .filter(|(_, &alpha)| divides(beta, alpha))
                        .filter_map(|(c, &alpha)| derivative_at(alpha, beta, *p).map(|v| (c, v)))
                        .collect();
                    rows.push(row);
                }
            }
        }
        rows
    }
}

/// `d^beta x^alpha` evaluated at `p`, or `None` when it vanishes.
fn derivative_at(alpha: Exponent, beta: Exponent, p: [i64; 3]) -> Option<BigInt> {
    let mut v = BigInt::one();
    for i in 0..3 {
        let rest = alpha[i] - beta[i];
        if rest > 0 {
            if p[i] == 0 {
                return None;
            }
            v *= num_traits::pow(BigInt::from(p[i]), rest as usize);
        }
        for f in rest + 1..=alpha[i] {
            v *= f;
        }
    }
    Some(v)
}

/// `dim F_j`, the forms of degree `j` vanishing to order `m_i` at `p_i`.
pub fn fatpoint_dimension(sys: &FatpointSystem, field: FieldSpec) -> usize {
    let rows: Vec<IntRow> = sys
        .condition_rows()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|(c, v)| (c, field.reduce(&v)))
                .filter(|(_, v)| !v.is_zero())
                .collect::<IntRow>()
        })
        .filter(|r| !r.is_empty())
        .collect();
    let n = num_monomials(sys.j);
    n - rank_peeling_singletons(field, n, rows)
}

/// Warning for fatpoint computations when `0 < char K <= j`.
pub fn fatpoint_warning(j: u32, field: FieldSpec) -> Option<String> {
    (!field.char_exceeds(u64::from(j))).then(|| {
        format!(
            "characteristic {} does not exceed j = {j}; vanishing conditions and \
             the duality with powers of linear forms may disagree",
            field.characteristic()
        )
    })
}

/// Rank where single-entry rows are used first to clear their columns.
fn rank_peeling_singletons(field: FieldSpec, ncols: usize, rows: Vec<IntRow>) -> usize {
    let mut dead = vec![false; ncols];
    let mut peeled = 0;
    for r in &rows {
        if let [(c, _)] = r.as_slice() {
            if !std::mem::replace(&mut dead[*c], true) {
                peeled += 1;
            }
        }
    }
    let mut compact = vec![usize::MAX; ncols];
    let mut alive = 0;
    for c in 0..ncols {
        if !dead[c] {
            compact[c] = alive;
            alive += 1;
        }
    }
    let mut ech = Echelon::new(field, alive);
    for r in rows {
        if ech.is_full() {
            break;
        }
        let row: IntRow = r
            .into_iter()
            .filter(|(c, _)| !dead[*c])
            .map(|(c, v)| (compact[c], v))
            .collect();
        if !row.is_empty() {
            ech.insert(&row);
        }
    }
    peeled + ech.rank()
}

/// Checks `dim (J_phi)_j + dim F(j)_j = dim R_j`.
///
/// Refuses fields of characteristic `0 < p <= j`, where the correspondence
/// between powers of linear forms and fatpoints is not available.
pub fn duality_check(f: &DegreeFunction, j: u32, field: FieldSpec) -> Result<bool> {
    if !field.char_exceeds(u64::from(j)) {
        return Err(Error::HypothesisViolation(format!(
            "duality needs characteristic 0 or > j = {j}, got {field}"
        )));
    }
    let gens = j_generators(f, field);
    let lhs = ideal_dimension(&gens, j, field);
    let rhs = fatpoint_dimension(&FatpointSystem::for_degree_function(f, j), field);
    Ok(lhs + rhs == num_monomials(j))
}

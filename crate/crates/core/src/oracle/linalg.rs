//! Exact row echelon forms, built one row at a time.
//!
//! Over the rationals all arithmetic stays in the integers: a row is reduced
//! against a pivot row by cross-multiplication and then divided by its
//! content, so every stored row is a primitive integer vector. Over a prime
//! field the usual normalized elimination is used. In both cases the stored
//! basis is kept fully reduced (each pivot column is zero in every other row),
//! so its pivot set is the pivot set of the reduced row echelon form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{inv_mod, mul_mod, residue, FieldSpec};

/// A sparse integer row: `(column, value)` pairs.
pub type IntRow = Vec<(usize, BigInt)>;

/// Normal form of a vector modulo the row space, written over the non-pivot
/// columns: `terms / denom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub terms: Vec<(usize, BigInt)>,
    pub denom: BigInt,
}

pub enum Echelon {
    Exact(ExactEchelon),
    Modular(ModEchelon),
}

impl Echelon {
    pub fn new(field: FieldSpec, ncols: usize) -> Self {
        match field {
            FieldSpec::Rationals => Echelon::Exact(ExactEchelon::new(ncols)),
            FieldSpec::PrimeField { p } => Echelon::Modular(ModEchelon::new(ncols, p)),
        }
    }

    pub fn ncols(&self) -> usize {
        match self {
            Echelon::Exact(e) => e.ncols,
            Echelon::Modular(e) => e.ncols,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Echelon::Exact(e) => e.rows.len(),
            Echelon::Modular(e) => e.rows.len(),
        }
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ncols()
    }

    /// Adds a row; returns true if the rank went up.
    pub fn insert(&mut self, row: &[(usize, BigInt)]) -> bool {
        match self {
            Echelon::Exact(e) => e.insert(row),
            Echelon::Modular(e) => e.insert(row),
        }
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        match self {
            Echelon::Exact(e) => e.pivot_row[col].is_some(),
            Echelon::Modular(e) => e.pivot_row[col].is_some(),
        }
    }

    /// Non-pivot columns, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols()).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Normal form of the unit vector `e_col`. Over a prime field the
    /// denominator is 1 and terms are residues.
    pub fn normal_form_of_unit(&self, col: usize) -> NormalForm {
        match self {
            Echelon::Exact(e) => e.normal_form_of_unit(col),
            Echelon::Modular(e) => e.normal_form_of_unit(col),
        }
    }
}

/// Rank of the integer rows over `field`.
pub fn rank<'a, I>(field: FieldSpec, ncols: usize, rows: I) -> usize
where
    I: IntoIterator<Item = &'a IntRow>,
{
    let mut ech = Echelon::new(field, ncols);
    for r in rows {
        if ech.is_full() {
            break;
        }
        ech.insert(r);
    }
    ech.rank()
}

pub struct ExactEchelon {
    ncols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl ExactEchelon {
    pub fn new(ncols: usize) -> Self {
        ExactEchelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    fn insert(&mut self, sparse: &[(usize, BigInt)]) -> bool {
        let mut row = vec![BigInt::zero(); self.ncols];
        for (c, v) in sparse {
            row[*c] += v;
        }
        for k in 0..self.rows.len() {
            let c = self.pivots[k];
            if !row[c].is_zero() {
                eliminate(&mut row, &self.rows[k], c);
            }
        }
        if !make_primitive(&mut row) {
            return false;
        }
        let c = row.iter().position(|v| !v.is_zero()).expect("nonzero row");
        if row[c].is_negative() {
            row.iter_mut().for_each(|v| *v = -(&*v));
        }
        for k in 0..self.rows.len() {
            if !self.rows[k][c].is_zero() {
                eliminate(&mut self.rows[k], &row, c);
                make_primitive(&mut self.rows[k]);
            }
        }
        self.pivot_row[c] = Some(self.rows.len());
        self.pivots.push(c);
        self.rows.push(row);
        true
    }

    fn normal_form_of_unit(&self, col: usize) -> NormalForm {
        match self.pivot_row[col] {
            None => NormalForm {
                terms: vec![(col, BigInt::one())],
                denom: BigInt::one(),
            },
            Some(k) => {
                // e_col = (row_k - sum over free f of row_k[f] e_f) / row_k[col]
                // modulo the row space.
                let row = &self.rows[k];
                let terms = row
                    .iter()
                    .enumerate()
                    .filter(|(f, v)| !v.is_zero() && self.pivot_row[*f].is_none())
                    .map(|(f, v)| (f, -v))
                    .collect();
                NormalForm {
                    terms,
                    denom: row[col].clone(),
                }
            }
        }
    }
}

/// `row <- a*row - b*pivot` with `a = pivot[c]/g`, `b = row[c]/g`, which
/// zeroes `row[c]`.
fn eliminate(row: &mut [BigInt], pivot: &[BigInt], c: usize) {
    let g = row[c].gcd(&pivot[c]);
    let a = &pivot[c] / &g;
    let b = &row[c] / &g;
    let a_is_one = a.is_one();
    for (x, y) in row.iter_mut().zip(pivot) {
        if y.is_zero() {
            if !a_is_one && !x.is_zero() {
                *x *= &a;
            }
        } else if a_is_one {
            *x -= &b * y;
        } else {
            *x = &a * &*x - &b * y;
        }
    }
    debug_assert!(row[c].is_zero());
}

/// Divides by the content; returns false for the zero row.
fn make_primitive(row: &mut [BigInt]) -> bool {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
            if g.is_one() {
                return true;
            }
        }
    }
    if g.is_zero() {
        return false;
    }
    for v in row.iter_mut() {
        if !v.is_zero() {
            *v /= &g;
        }
    }
    true
}

pub struct ModEchelon {
    ncols: usize,
    p: u64,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl ModEchelon {
    pub fn new(ncols: usize, p: u64) -> Self {
        ModEchelon {
            ncols,
            p,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    fn insert(&mut self, sparse: &[(usize, BigInt)]) -> bool {
        let p = self.p;
        let mut row = vec![0u64; self.ncols];
        for (c, v) in sparse {
            row[*c] = (row[*c] + residue(v, p)) % p;
        }
        for k in 0..self.rows.len() {
            let c = self.pivots[k];
            let f = row[c];
            if f != 0 {
                axpy(&mut row, &self.rows[k], p - f, p);
            }
        }
        let Some(c) = row.iter().position(|&v| v != 0) else {
            return false;
        };
        let inv = inv_mod(row[c], p);
        row.iter_mut().for_each(|v| *v = mul_mod(*v, inv, p));
        for k in 0..self.rows.len() {
            let f = self.rows[k][c];
            if f != 0 {
                axpy(&mut self.rows[k], &row, p - f, p);
            }
        }
        self.pivot_row[c] = Some(self.rows.len());
        self.pivots.push(c);
        self.rows.push(row);
        true
    }

    fn normal_form_of_unit(&self, col: usize) -> NormalForm {
        let p = self.p;
        let terms = match self.pivot_row[col] {
            None => vec![(col, BigInt::one())],
            Some(k) => self.rows[k]
                .iter()
                .enumerate()
                .filter(|(f, v)| **v != 0 && self.pivot_row[*f].is_none())
                .map(|(f, v)| (f, BigInt::from(p - v)))
                .collect(),
        };
        NormalForm {
            terms,
            denom: BigInt::one(),
        }
    }
}

/// `row += f * other (mod p)`.
fn axpy(row: &mut [u64], other: &[u64], f: u64, p: u64) {
    for (x, &y) in row.iter_mut().zip(other) {
        if y != 0 {
            *x = ((*x as u128 + f as u128 * y as u128) % p as u128) as u64;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn dense(rows: &[&[i64]]) -> Vec<IntRow> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0)
                    .map(|(c, v)| (c, BigInt::from(*v)))
                    .collect()
            })
            .collect()
    }

    /// Textbook Gauss-Jordan over exact rationals, as an independent check.
    fn rational_rank(rows: &[Vec<i64>], ncols: usize) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| BigRational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let pivot_row = m[rank].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != rank && !row[c].is_zero() {
                    let f = &row[c] / &pivot_row[c];
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        let rows = dense(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(FieldSpec::Rationals, 3, &rows), 2);
        let rows = dense(&[&[2, 0], &[0, 2]]);
        assert_eq!(rank(FieldSpec::Rationals, 2, &rows), 2);
        assert_eq!(rank(FieldSpec::PrimeField { p: 2 }, 2, &rows), 0);
        assert_eq!(rank(FieldSpec::PrimeField { p: 3 }, 2, &rows), 2);
    }

    #[test]
    fn reduced_form_and_normal_forms() {
        // row space spanned by (1,1,0) and (0,2,1)
        let rows = dense(&[&[1, 1, 0], &[0, 2, 1]]);
        let mut ech = Echelon::new(FieldSpec::Rationals, 3);
        for r in &rows {
            ech.insert(r);
        }
        assert_eq!(ech.free_columns(), [2]);
        // e_0 = (1,1,0) - e_1 and e_1 = ((0,2,1) - e_2)/2, so e_0 == e_2/2
        let nf = ech.normal_form_of_unit(0);
        assert_eq!(nf.terms, [(2, BigInt::from(1))]);
        assert_eq!(nf.denom, BigInt::from(2));
        let nf = ech.normal_form_of_unit(1);
        assert_eq!(nf.terms, [(2, BigInt::from(-1))]);
        assert_eq!(nf.denom, BigInt::from(2));

        let mut ech = Echelon::new(FieldSpec::PrimeField { p: 5 }, 3);
        for r in &rows {
            ech.insert(r);
        }
        // 1/2 = 3 mod 5
        assert_eq!(ech.normal_form_of_unit(0).terms, [(2, BigInt::from(3))]);
    }

    proptest::proptest! {
        #[test]
        fn exact_rank_matches_textbook(
            entries in proptest::collection::vec(-4i64..=4, 30),
            nrows in 1usize..=6,
        ) {
            let ncols = 5;
            let rows: Vec<Vec<i64>> = entries.chunks(ncols).take(nrows).map(|c| c.to_vec()).collect();
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let sparse = dense(&refs);
            let expected = rational_rank(&rows, ncols);
            proptest::prop_assert_eq!(rank(FieldSpec::Rationals, ncols, &sparse), expected);
            // a large prime almost never drops rank on such small entries
            let big_prime = FieldSpec::PrimeField { p: 1_000_003 };
            proptest::prop_assert!(rank(big_prime, ncols, &sparse) <= expected);
        }

        #[test]
        fn rank_ignores_row_order_and_scaling(
            entries in proptest::collection::vec(-3i64..=3, 24),
            scale in 1i64..=7,
        ) {
            let rows: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let mut shuffled: Vec<Vec<i64>> = rows.iter().rev().cloned().collect();
            shuffled[0].iter_mut().for_each(|v| *v *= scale);
            let a: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let b: Vec<&[i64]> = shuffled.iter().map(|r| r.as_slice()).collect();
            for field in [FieldSpec::Rationals, FieldSpec::PrimeField { p: 11 }] {
                if field != FieldSpec::Rationals && scale % 11 == 0 { continue; }
                proptest::prop_assert_eq!(rank(field, 4, &dense(&a)), rank(field, 4, &dense(&b)));
            }
        }
    }
}

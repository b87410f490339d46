//! Graded Betti numbers of `R/I` from the homology of the Koszul complex
//! `K(x, y, z) (x) R/I`.
//!
//! `beta_{i,j} = dim H_i(K (x) R/I)_j`, where the degree-`j` strand of
//! homological position `i` is `wedge^i K^3 (x) (R/I)_{j-i}` and
//! `d(e_S (x) m) = sum_t (-1)^t e_{S - s_t} (x) x_{s_t} m`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::field::FieldSpec;
use super::forms::{DenseForm, Exponent, GradedPiece};
use super::linalg::{rank, IntRow};
use crate::error::{Error, Result};

/// `beta_{i,j}` of a quotient `R/I`; only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<BettiEntry>", into = "Vec<BettiEntry>")]
pub struct GradedBettiTable {
    pub entries: BTreeMap<(u32, u32), u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: u32,
    pub j: u32,
    pub beta: u64,
}

impl From<Vec<BettiEntry>> for GradedBettiTable {
    fn from(v: Vec<BettiEntry>) -> Self {
        GradedBettiTable {
            entries: v
                .into_iter()
                .filter(|e| e.beta > 0)
                .map(|e| ((e.i, e.j), e.beta))
                .collect(),
        }
    }
}

impl From<GradedBettiTable> for Vec<BettiEntry> {
    fn from(t: GradedBettiTable) -> Self {
        t.entries
            .into_iter()
            .map(|((i, j), beta)| BettiEntry { i, j, beta })
            .collect()
    }
}

impl GradedBettiTable {
    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Homological step `s` of the ideal's resolution as `(degree, rank)`
    /// pairs; these are `beta_{s+1, *}` of the quotient.
    pub fn ideal_step(&self, s: u32) -> Vec<(u32, u64)> {
        self.entries
            .iter()
            .filter(|((i, _), _)| *i == s + 1)
            .map(|((_, j), b)| (*j, *b))
            .collect()
    }

    /// `sum_i (-1)^i beta_{i,j}` for each `j`; equals the numerator of the
    /// Hilbert series over `(1-t)^3`.
    pub fn euler_numerator(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|(_, j)| *j).max().unwrap_or(0) as usize;
        let mut out = vec![0i64; top + 1];
        for ((i, j), b) in &self.entries {
            let s = if i % 2 == 0 { 1 } else { -1 };
            out[*j as usize] += s * *b as i64;
        }
        while out.len() > 1 && out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    pub fn max_index(&self) -> u32 {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }
}

impl fmt::Display for GradedBettiTable {
    /// Macaulay-style: column `i`, row `j - i`, dots for zeros.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.max_index() + 1;
        let max_row = self.entries.keys().map(|(i, j)| j - i).max().unwrap_or(0);
        let mut cells: Vec<Vec<String>> = Vec::new();
        let totals: Vec<String> = (0..cols)
            .map(|i| {
                self.entries
                    .iter()
                    .filter(|((ii, _), _)| *ii == i)
                    .map(|(_, b)| *b)
                    .sum::<u64>()
                    .to_string()
            })
            .collect();
        for r in 0..=max_row {
            cells.push(
                (0..cols)
                    .map(|i| match self.get(i, i + r) {
                        0 => ".".to_string(),
                        b => b.to_string(),
                    })
                    .collect(),
            );
        }
        let width = cells
            .iter()
            .flatten()
            .chain(&totals)
            .map(String::len)
            .max()
            .unwrap_or(1)
            .max((cols - 1).to_string().len());
        let label_w = format!("{max_row}:").len().max("total:".len());
        write!(f, "{:>label_w$}", "")?;
        for i in 0..cols {
            write!(f, " {:>width$}", i)?;
        }
        writeln!(f)?;
        write!(f, "{:>label_w$}", "total:")?;
        for t in &totals {
            write!(f, " {t:>width$}")?;
        }
        writeln!(f)?;
        for (r, row) in cells.iter().enumerate() {
            write!(f, "{:>label_w$}", format!("{r}:"))?;
            for c in row {
                write!(f, " {c:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

const SUBSETS: [&[usize]; 8] = [&[], &[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2], &[0, 1, 2]];

fn subsets_of_size(i: usize) -> Vec<&'static [usize]> {
    SUBSETS.iter().copied().filter(|s| s.len() == i).collect()
}

/// Quotient data for degrees `0..=top`.
struct Quotient {
    pieces: Vec<GradedPiece>,
    bases: Vec<Vec<Exponent>>,
}

impl Quotient {
    fn dim(&self, d: i64) -> usize {
        if d < 0 || d as usize >= self.pieces.len() {
            0
        } else {
            self.bases[d as usize].len()
        }
    }
}

/// Sweeps degrees until the quotient vanishes. Inputs whose quotient is still
/// nonzero in degree `3D - 2` (`D` the largest generator degree) are not
/// artinian: an artinian ideal contains, after a field extension, a regular
/// sequence of three forms of degree `D`.
pub fn artinian_top_degree(gens: &[DenseForm], field: FieldSpec) -> Result<Option<u32>> {
    let max_deg = gens.iter().filter(|g| !g.is_zero()).map(|g| g.degree).max();
    let Some(dmax) = max_deg else {
        return Err(Error::NonArtinian);
    };
    let limit = 3 * dmax.max(1) - 2;
    for d in 0..=limit {
        if GradedPiece::new(gens, d, field).quotient_dim() == 0 {
            return Ok(d.checked_sub(1));
        }
    }
    Err(Error::NonArtinian)
}

/// Full graded Betti table of `R/<gens>` for an artinian quotient.
pub fn betti_table(gens: &[DenseForm], field: FieldSpec) -> Result<GradedBettiTable> {
    let top = artinian_top_degree(gens, field)?;
    let Some(top) = top else {
        // unit ideal
        return Ok(GradedBettiTable::default());
    };
    Ok(koszul_betti(gens, field, top, top + 3))
}

/// Betti numbers `beta_{i,j}` for `j <= max_internal_degree`, for any ideal.
/// Internal degree `j` needs the quotient through degree `j`.
pub fn betti_table_to_degree(
    gens: &[DenseForm],
    field: FieldSpec,
    max_internal_degree: u32,
) -> GradedBettiTable {
    koszul_betti(gens, field, max_internal_degree, max_internal_degree)
}

fn koszul_betti(gens: &[DenseForm], field: FieldSpec, top: u32, max_j: u32) -> GradedBettiTable {
    let pieces: Vec<GradedPiece> = (0..=top)
        .map(|d| GradedPiece::new(gens, d, field))
        .collect();
    let bases = pieces.iter().map(GradedPiece::quotient_basis).collect();
    let q = Quotient { pieces, bases };
    let mut table = GradedBettiTable::default();
    for j in 0..=max_j {
        let ranks: Vec<usize> = (0..=4).map(|i| koszul_rank(&q, field, i, j)).collect();
        for i in 0..=3u32 {
            let dim = binom3(i) * q.dim(j as i64 - i as i64);
            let b = dim - ranks[i as usize] - ranks[i as usize + 1];
            if b > 0 {
                table.entries.insert((i, j), b as u64);
            }
        }
    }
    table
}

fn binom3(i: u32) -> usize {
    [1, 3, 3, 1][i as usize]
}

/// Rank of `d_i : wedge^i (x) Q_{j-i} -> wedge^{i-1} (x) Q_{j-i+1}`.
fn koszul_rank(q: &Quotient, field: FieldSpec, i: usize, j: u32) -> usize {
    if i == 0 || i > 3 {
        return 0;
    }
    let src_deg = j as i64 - i as i64;
    let tgt_deg = src_deg + 1;
    if q.dim(src_deg) == 0 || q.dim(tgt_deg) == 0 {
        return 0;
    }
    let tgt_dim = q.dim(tgt_deg);
    let tgt_subsets = subsets_of_size(i - 1);
    let block_of = |s: &[usize]| tgt_subsets.iter().position(|t| *t == s).expect("subset");
    let src = &q.bases[src_deg as usize];
    let tgt_piece = &q.pieces[tgt_deg as usize];

    let mut rows: Vec<IntRow> = Vec::new();
    for s in subsets_of_size(i) {
        for m in src {
            // image of e_s (x) m, as rationals
            let mut parts = Vec::with_capacity(i);
            for (t, &var) in s.iter().enumerate() {
                let mut xm = *m;
                xm[var] += 1;
                let nf = tgt_piece.normal_form(xm);
                if nf.terms.is_empty() {
                    continue;
                }
                let rest: Vec<usize> = s.iter().copied().filter(|&v| v != var).collect();
                let offset = block_of(&rest) * tgt_dim;
                let sign = if t % 2 == 0 { 1 } else { -1 };
                parts.push((offset, sign, nf));
            }
            if parts.is_empty() {
                continue;
            }
            let lcm = parts
                .iter()
                .fold(BigInt::one(), |acc, (_, _, nf)| acc.lcm(&nf.denom));
            let mut row: IntRow = Vec::new();
            for (offset, sign, nf) in parts {
                let scale = &lcm / &nf.denom * sign;
                for (c, v) in nf.terms {
                    row.push((offset + c, field.reduce(&(v * &scale))));
                }
            }
            row.retain(|(_, v)| !v.is_zero());
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    rank(field, tgt_subsets.len() * tgt_dim, &rows)
}

/// Degrees of a minimal generating set, sorted.
pub fn minimal_generator_degrees(gens: &[DenseForm], field: FieldSpec) -> Result<Vec<u32>> {
    let table = betti_table(gens, field)?;
    Ok(expand_step(&table, 0))
}

fn expand_step(table: &GradedBettiTable, s: u32) -> Vec<u32> {
    table
        .ideal_step(s)
        .into_iter()
        .flat_map(|(d, b)| std::iter::repeat_n(d, b as usize))
        .collect()
}

/// The resolution shape predicted for `J_phi` when `phi` is linear:
/// `R(-3phi3) + R^3(-phi1) + R^3(-2phi2)` generators,
/// `R^6(-phi1-phi2) + R^6(-2phi2-phi3)` first syzygies and
/// `R^6(-phi1-phi2-phi3)` second syzygies, as a table for `R/J_phi`.
pub fn conjectured_linear_shape(phi: [u32; 3]) -> GradedBettiTable {
    let [p1, p2, p3] = phi;
    let mut t = GradedBettiTable::default();
    let mut add = |i: u32, j: u32, b: u64| *t.entries.entry((i, j)).or_insert(0) += b;
    add(0, 0, 1);
    add(1, p1, 3);
    add(1, 2 * p2, 3);
    add(1, 3 * p3, 1);
    add(2, p1 + p2, 6);
    add(2, 2 * p2 + p3, 6);
    add(3, p1 + p2 + p3, 6);
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::classify;
    use crate::oracle::forms::{i_generators, j_generators};

    const QQ: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn principal_ideal() {
        let gens = [DenseForm::monomial([1, 0, 0])];
        assert!(matches!(betti_table(&gens, QQ), Err(Error::NonArtinian)));
        let t = betti_table_to_degree(&gens, QQ, 6);
        assert_eq!(t.ideal_step(0), [(1, 1)]);
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.get(0, 0), 1);
    }

    #[test]
    fn irrelevant_ideal_is_koszul() {
        let gens: Vec<DenseForm> = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            .into_iter()
            .map(DenseForm::monomial)
            .collect();
        let t = betti_table(&gens, QQ).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 1), 3);
        assert_eq!(t.get(2, 2), 3);
        assert_eq!(t.get(3, 3), 1);
        assert_eq!(t.entries.len(), 4);
        assert_eq!(minimal_generator_degrees(&gens, QQ).unwrap(), [1, 1, 1]);
    }

    #[test]
    fn monomial_generators_of_321() {
        let f = classify(3, 2, 1).unwrap();
        assert_eq!(
            minimal_generator_degrees(&i_generators(&f), QQ).unwrap(),
            [3, 3, 3, 3, 4, 4, 4]
        );
    }

    #[test]
    fn char_two_drops_generators() {
        let f = classify(3, 2, 1).unwrap();
        let f2 = FieldSpec::PrimeField { p: 2 };
        assert_eq!(
            minimal_generator_degrees(&j_generators(&f, f2), f2).unwrap(),
            [3, 3, 3, 3]
        );
    }

    #[test]
    fn complete_intersection_x2_y2_z2() {
        let gens: Vec<DenseForm> = [[2, 0, 0], [0, 2, 0], [0, 0, 2]]
            .into_iter()
            .map(DenseForm::monomial)
            .collect();
        let t = betti_table(&gens, QQ).unwrap();
        assert_eq!(t.ideal_step(0), [(2, 3)]);
        assert_eq!(t.ideal_step(1), [(4, 3)]);
        assert_eq!(t.ideal_step(2), [(6, 1)]);
        assert_eq!(t.euler_numerator(), [1, 0, -3, 0, 3, 0, -1]);
    }

    #[test]
    fn display_and_json() {
        let gens: Vec<DenseForm> = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            .into_iter()
            .map(DenseForm::monomial)
            .collect();
        let t = betti_table(&gens, QQ).unwrap();
        let shown = t.to_string();
        assert!(shown.contains("total: 1 3 3 1"), "{shown}");
        assert!(shown.contains("0: 1 3 3 1"), "{shown}");
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.starts_with(r#"[{"i":0,"j":0,"beta":1}"#), "{json}");
        let back: GradedBettiTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }
}

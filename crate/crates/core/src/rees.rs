//! Rees matrix semigroups `M0[G; I, Λ; P]` over a finite group.
//!
//! Index sets are `0..|I|` and `0..|Λ|` internally and 1-based in all text
//! forms. The structure matrix is stored with one row per `λ` and one column
//! per `i`, so `entry(λ, i)` is `p_{λi}`.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement};

/// Default limit on the number of elements [`ReesMatrixSemigroup::elements`]
/// will enumerate.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// `None` is the zero of `G⁰`.
pub type MatrixEntry = Option<GroupElement>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureMatrix {
    lambdas: usize,
    is: usize,
    entries: Vec<MatrixEntry>,
}

impl StructureMatrix {
    /// `rows` is indexed by `λ`, each row by `i`.
    pub fn from_rows(rows: Vec<Vec<MatrixEntry>>) -> Result<Self> {
        let lambdas = rows.len();
        let is = rows.first().map_or(0, Vec::len);
        if lambdas == 0 || is == 0 {
            return Err(Error::Usage(
                "structure matrix needs at least one row and column".into(),
            ));
        }
        if rows.iter().any(|r| r.len() != is) {
            return Err(Error::Usage("ragged structure matrix".into()));
        }
        Ok(StructureMatrix {
            lambdas,
            is,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zero(lambdas: usize, is: usize) -> Result<Self> {
        Self::from_rows(vec![vec![None; is]; lambdas])
    }

    /// `p_{λi} = 1` when `λ == i`, zero elsewhere.
    pub fn identity(size: usize, one: GroupElement) -> Result<Self> {
        Self::from_rows(
            (0..size)
                .map(|l| (0..size).map(|i| (l == i).then_some(one)).collect())
                .collect(),
        )
    }

    pub fn lambda_count(&self) -> usize {
        self.lambdas
    }

    pub fn i_count(&self) -> usize {
        self.is
    }

    pub fn entry(&self, lambda: usize, i: usize) -> MatrixEntry {
        self.entries[lambda * self.is + i]
    }

    pub fn set(&mut self, lambda: usize, i: usize, value: MatrixEntry) {
        self.entries[lambda * self.is + i] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[MatrixEntry]> {
        self.entries.chunks(self.is)
    }

    /// Non-zero entries as `(λ, i, p_{λi})` in row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, GroupElement)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter_map(move |(k, e)| e.map(|g| (k / self.is, k % self.is, g)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Option::is_none)
    }

    /// Every row and every column has a non-zero entry.
    pub fn is_regular(&self) -> bool {
        let rows_ok = self.rows().all(|r| r.iter().any(Option::is_some));
        let cols_ok = (0..self.is).all(|i| (0..self.lambdas).any(|l| self.entry(l, i).is_some()));
        rows_ok && cols_ok
    }

    /// `P^T`: rows indexed by `i`, columns by `λ`.
    pub fn transpose(&self) -> StructureMatrix {
        StructureMatrix::from_rows(
            (0..self.is)
                .map(|i| (0..self.lambdas).map(|l| self.entry(l, i)).collect())
                .collect(),
        )
        .expect("dimensions are positive")
    }

    /// New row `k` is old row `lambda_order[k]`, new column `k` is old
    /// column `i_order[k]`.
    pub fn permute(&self, lambda_order: &[usize], i_order: &[usize]) -> StructureMatrix {
        StructureMatrix::from_rows(
            lambda_order
                .iter()
                .map(|&l| i_order.iter().map(|&i| self.entry(l, i)).collect())
                .collect(),
        )
        .expect("dimensions are positive")
    }

    pub fn map_entries(&self, mut f: impl FnMut(GroupElement) -> GroupElement) -> StructureMatrix {
        StructureMatrix {
            lambdas: self.lambdas,
            is: self.is,
            entries: self.entries.iter().map(|e| e.map(&mut f)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RmsElement {
    Zero,
    Triple { i: usize, g: GroupElement, lambda: usize },
}

impl RmsElement {
    pub fn triple(i: usize, g: GroupElement, lambda: usize) -> Self {
        RmsElement::Triple { i, g, lambda }
    }
}

#[derive(Clone, Debug)]
pub struct ReesMatrixSemigroup {
    group: Arc<FiniteGroup>,
    matrix: StructureMatrix,
}

impl ReesMatrixSemigroup {
    pub fn new(group: Arc<FiniteGroup>, matrix: StructureMatrix) -> Result<Self> {
        if let Some((l, i, g)) = matrix.nonzero().find(|&(_, _, g)| !group.is_valid(g)) {
            return Err(Error::Usage(format!(
                "entry ({}, {}) = {} is not an element of {}",
                l + 1,
                i + 1,
                g.index(),
                group.name()
            )));
        }
        Ok(ReesMatrixSemigroup { group, matrix })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn matrix(&self) -> &StructureMatrix {
        &self.matrix
    }

    pub fn i_count(&self) -> usize {
        self.matrix.i_count()
    }

    pub fn lambda_count(&self) -> usize {
        self.matrix.lambda_count()
    }

    /// `|I|·|G|·|Λ| + 1`.
    pub fn size(&self) -> usize {
        self.i_count() * self.group.order() * self.lambda_count() + 1
    }

    pub fn contains(&self, x: &RmsElement) -> bool {
        match *x {
            RmsElement::Zero => true,
            RmsElement::Triple { i, g, lambda } => {
                i < self.i_count() && lambda < self.lambda_count() && self.group.is_valid(g)
            }
        }
    }

    /// `(i,g,λ)(j,h,μ) = (i, g p_{λj} h, μ)` when `p_{λj}` is non-zero, else 0.
    pub fn multiply(&self, x: &RmsElement, y: &RmsElement) -> RmsElement {
        match (*x, *y) {
            (RmsElement::Triple { i, g, lambda }, RmsElement::Triple { i: j, g: h, lambda: mu }) => {
                match self.matrix.entry(lambda, j) {
                    Some(p) => RmsElement::triple(i, self.group.multiply(self.group.multiply(g, p), h), mu),
                    None => RmsElement::Zero,
                }
            }
            _ => RmsElement::Zero,
        }
    }

    /// Checked multiplication for elements of unknown origin.
    pub fn try_multiply(&self, x: &RmsElement, y: &RmsElement) -> Result<RmsElement> {
        for e in [x, y] {
            if !self.contains(e) {
                return Err(Error::Usage(format!("{e:?} is not an element of this semigroup")));
            }
        }
        Ok(self.multiply(x, y))
    }

    /// Non-zero idempotents `(i, p_{λi}^-1, λ)` in row-major order of `P`.
    pub fn idempotents(&self) -> Vec<RmsElement> {
        self.matrix
            .nonzero()
            .map(|(l, i, p)| RmsElement::triple(i, self.group.inverse(p), l))
            .collect()
    }

    /// Zero first, then triples in `(i, g, λ)` lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = RmsElement> + '_ {
        let (is, ls, order) = (self.i_count(), self.lambda_count(), self.group.order());
        std::iter::once(RmsElement::Zero).chain((0..is).flat_map(move |i| {
            (0..order).flat_map(move |g| (0..ls).map(move |l| RmsElement::triple(i, GroupElement::new(g), l)))
        }))
    }

    /// [`Self::elements`], refusing semigroups larger than `cap`.
    pub fn enumerate_elements(&self, cap: usize) -> Result<impl Iterator<Item = RmsElement> + '_> {
        if self.size() > cap {
            return Err(Error::Size(format!(
                "semigroup has {} elements, cap is {cap}",
                self.size()
            )));
        }
        Ok(self.elements())
    }

    pub fn with_matrix(&self, matrix: StructureMatrix) -> Result<Self> {
        Self::new(self.group.clone(), matrix)
    }

    /// `0` or `i g λ` with 1-based indices.
    pub fn format_element(&self, x: &RmsElement) -> String {
        match *x {
            RmsElement::Zero => "0".to_string(),
            RmsElement::Triple { i, g, lambda } => {
                format!("{} {} {}", i + 1, self.group.literal(g), lambda + 1)
            }
        }
    }

    /// Inverse of [`Self::format_element`].
    pub fn parse_element(&self, text: &str) -> Result<RmsElement> {
        let text = text.trim();
        if text == "0" {
            return Ok(RmsElement::Zero);
        }
        let (first, rest) = text
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::Usage(format!("`{text}` is not an element")))?;
        let (middle, last) = rest
            .trim()
            .rsplit_once(char::is_whitespace)
            .ok_or_else(|| Error::Usage(format!("`{text}` is not an element")))?;
        let index = |s: &str, bound: usize| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(k) if (1..=bound).contains(&k) => Ok(k - 1),
                _ => Err(Error::Usage(format!("index `{s}` out of range 1..={bound}"))),
            }
        };
        Ok(RmsElement::triple(
            index(first, self.i_count())?,
            self.group.parse_literal(middle)?,
            index(last, self.lambda_count())?,
        ))
    }

    /// The `matrix <Λ> <I>` block followed by one line per row.
    pub fn format_matrix(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "matrix {} {}", self.lambda_count(), self.i_count());
        for row in self.matrix.rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|e| e.map_or_else(|| "0".to_string(), |g| self.group.literal(g)))
                .collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3).unwrap())
    }

    #[test]
    fn zero_absorbs() {
        let g = s3();
        let s = ReesMatrixSemigroup::new(g.clone(), StructureMatrix::identity(2, g.identity()).unwrap()).unwrap();
        for x in s.elements() {
            assert_eq!(s.multiply(&RmsElement::Zero, &x), RmsElement::Zero);
            assert_eq!(s.multiply(&x, &RmsElement::Zero), RmsElement::Zero);
        }
    }

    #[test]
    fn multiplication_rule_over_c2() {
        let c2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let one = c2.identity();
        let a = GroupElement::new(1);
        let s = ReesMatrixSemigroup::new(c2, StructureMatrix::from_rows(vec![vec![Some(one)]]).unwrap()).unwrap();
        let x = RmsElement::triple(0, a, 0);
        assert_eq!(s.multiply(&x, &x), RmsElement::triple(0, one, 0));
    }

    #[test]
    fn multiplication_rule_over_s3() {
        let g = s3();
        let t = g.parse_literal("(1 2)").unwrap();
        let c = g.parse_literal("(1 2 3)").unwrap();
        let s = ReesMatrixSemigroup::new(
            g.clone(),
            StructureMatrix::from_rows(vec![vec![Some(t), None]]).unwrap(),
        )
        .unwrap();
        let x = RmsElement::triple(1, c, 0);
        let y = RmsElement::triple(0, g.identity(), 0);
        // (1 2 3)(1 2) composed left to right is (2 3).
        let expected = RmsElement::triple(1, g.parse_literal("(2 3)").unwrap(), 0);
        assert_eq!(s.multiply(&x, &y), expected);
        // Column 1 of P is zero.
        assert_eq!(s.multiply(&x, &RmsElement::triple(1, c, 0)), RmsElement::Zero);
    }

    #[test]
    fn idempotents_follow_nonzero_entries() {
        let g = s3();
        let zero = ReesMatrixSemigroup::new(g.clone(), StructureMatrix::zero(2, 3).unwrap()).unwrap();
        assert!(zero.idempotents().is_empty());
        let brandt = ReesMatrixSemigroup::new(g.clone(), StructureMatrix::identity(4, g.identity()).unwrap()).unwrap();
        let e = brandt.idempotents();
        assert_eq!(
            e,
            (0..4)
                .map(|k| RmsElement::triple(k, g.identity(), k))
                .collect::<Vec<_>>()
        );
        let t = g.parse_literal("(1 2 3)").unwrap();
        let mixed = ReesMatrixSemigroup::new(
            g.clone(),
            StructureMatrix::from_rows(vec![vec![Some(t), None], vec![Some(g.identity()), Some(t)]]).unwrap(),
        )
        .unwrap();
        let es = mixed.idempotents();
        assert_eq!(es.len(), 3);
        for x in mixed.elements() {
            let idem = mixed.multiply(&x, &x) == x && x != RmsElement::Zero;
            assert_eq!(idem, es.contains(&x));
        }
    }

    #[test]
    fn regularity() {
        let one = GroupElement::new(0);
        assert!(StructureMatrix::identity(3, one).unwrap().is_regular());
        let m = StructureMatrix::from_rows(vec![vec![Some(one), None], vec![None, None]]).unwrap();
        assert!(!m.is_regular());
        assert!(!m.transpose().is_regular());
    }

    #[test]
    fn element_enumeration() {
        let c2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let s = ReesMatrixSemigroup::new(c2, StructureMatrix::zero(1, 1).unwrap()).unwrap();
        assert_eq!(s.elements().count(), 3);
        let g = s3();
        let s = ReesMatrixSemigroup::new(g, StructureMatrix::zero(3, 2).unwrap()).unwrap();
        let all: Vec<_> = s.enumerate_elements(100).unwrap().collect();
        assert_eq!(all.len(), 37);
        assert_eq!(all[0], RmsElement::Zero);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(s.enumerate_elements(36).is_err());
    }

    #[test]
    fn element_text_round_trip() {
        let g = s3();
        let s = ReesMatrixSemigroup::new(g, StructureMatrix::zero(3, 2).unwrap()).unwrap();
        for x in s.elements() {
            assert_eq!(s.parse_element(&s.format_element(&x)).unwrap(), x);
        }
        assert!(s.parse_element("3 () 1").is_err());
        assert!(s.parse_element("1 () 4").is_err());
    }
}

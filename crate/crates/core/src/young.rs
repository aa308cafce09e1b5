//! Young diagrams, hook-length dimensions and content products.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::{IntPolynomial, Variable};

/// Integer partition with weakly decreasing positive rows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

/// Which content shift the box product uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContentVariant {
    /// `n + 2j - i - 1`
    O,
    /// `n + 2j - i - 2`
    B,
    /// `n + j - i`
    OStar,
}

impl YoungDiagram {
    /// Sorts the rows and drops zeros.
    pub fn new(mut rows: Vec<usize>) -> Self {
        rows.retain(|&r| r > 0);
        rows.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram { rows }
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn boxes(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Vec<usize> {
        let width = self.rows.first().copied().unwrap_or(0);
        (0..width)
            .map(|j| self.rows.iter().filter(|&&r| r > j).count())
            .collect()
    }

    /// 1-based box coordinates `(i, j)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Number of standard tableaux, by the hook-length formula.
    pub fn dimension(&self) -> BigInt {
        let cols = self.conjugate();
        let mut hooks = BigInt::one();
        for (i, j) in self.cells() {
            let arm = self.rows[i - 1] - j;
            let leg = cols[j - 1] - i;
            hooks *= arm + leg + 1;
        }
        let fact: BigInt = (1..=self.boxes()).map(BigInt::from).product();
        fact / hooks
    }

    /// Doubles every row.
    pub fn double(&self) -> Self {
        YoungDiagram {
            rows: self.rows.iter().map(|r| 2 * r).collect(),
        }
    }

    /// Product over boxes of the variant's linear content factor.
    pub fn content_poly(&self, variant: ContentVariant) -> IntPolynomial {
        let mut out = IntPolynomial::one(Variable::N);
        for (i, j) in self.cells() {
            let (i, j) = (i as i64, j as i64);
            let shift = match variant {
                ContentVariant::O => 2 * j - i - 1,
                ContentVariant::B => 2 * j - i - 2,
                ContentVariant::OStar => j - i,
            };
            out = &out * &IntPolynomial::linear(Variable::N, shift);
        }
        out
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

/// Partitions of `m` in reverse lexicographic order, starting from `(m)`.
pub fn enumerate_diagrams(m: usize) -> Vec<YoungDiagram> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if rest == 0 {
            out.push(YoungDiagram { rows: cur.clone() });
            return;
        }
        for part in (1..=rest.min(cap)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// Counts standard tableaux by placing the largest entry in a removable
/// corner, recursively. Test oracle for the hook-length formula.
pub fn count_standard_tableaux(lambda: &YoungDiagram) -> u64 {
    fn go(rows: &mut Vec<usize>) -> u64 {
        if rows.iter().all(|&r| r == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..rows.len() {
            let removable = rows[i] > 0 && rows.get(i + 1).is_none_or(|&below| below < rows[i]);
            if removable {
                rows[i] -= 1;
                total += go(rows);
                rows[i] += 1;
            }
        }
        total
    }
    let mut rows = lambda.rows.clone();
    if rows.is_empty() {
        rows = vec![0];
    }
    go(&mut rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec())
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_diagrams(2), vec![yd(&[2]), yd(&[1, 1])]);
        assert_eq!(enumerate_diagrams(0), vec![YoungDiagram::empty()]);
        assert_eq!(enumerate_diagrams(4).len(), 5);
        assert_eq!(enumerate_diagrams(8).len(), 22);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(yd(&[1]).dimension(), BigInt::from(1));
        assert_eq!(yd(&[2, 1]).dimension(), BigInt::from(2));
        assert_eq!(yd(&[2, 2]).dimension(), BigInt::from(2));
        assert_eq!(YoungDiagram::empty().dimension(), BigInt::from(1));
    }

    #[test]
    fn double_and_text() {
        assert_eq!(yd(&[2, 1]).double(), yd(&[4, 2]));
        assert_eq!(YoungDiagram::empty().double(), YoungDiagram::empty());
        assert_eq!(yd(&[1, 1]).double(), yd(&[2, 2]));
        assert_eq!(yd(&[2, 1]).to_string(), "(2,1)");
    }

    #[test]
    fn content_examples() {
        let n = Variable::N;
        assert_eq!(
            yd(&[2]).content_poly(ContentVariant::O),
            IntPolynomial::from_i64s(n, &[0, 2, 1])
        );
        assert_eq!(
            yd(&[1, 1]).content_poly(ContentVariant::O),
            IntPolynomial::from_i64s(n, &[0, -1, 1])
        );
        assert_eq!(
            yd(&[1]).content_poly(ContentVariant::B),
            IntPolynomial::from_i64s(n, &[-1, 1])
        );
        assert!(YoungDiagram::empty()
            .content_poly(ContentVariant::OStar)
            .is_one());
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for m in 0..=8usize {
            let total: BigInt = enumerate_diagrams(m)
                .iter()
                .map(|l| l.dimension().pow(2))
                .sum();
            let fact: BigInt = (1..=m).map(BigInt::from).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn hook_length_matches_tableau_count() {
        for m in 0..=6 {
            for l in enumerate_diagrams(m) {
                assert_eq!(
                    l.dimension(),
                    BigInt::from(count_standard_tableaux(&l)),
                    "{l}"
                );
            }
        }
    }

    #[test]
    fn ostar_content_is_monic_of_full_degree() {
        for m in 0..=6 {
            for l in enumerate_diagrams(m) {
                let p = l.content_poly(ContentVariant::OStar);
                assert_eq!(p.degree(), Some(m));
                assert!(p.is_monic());
            }
        }
    }
}

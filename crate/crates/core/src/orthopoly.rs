//! Monic orthogonal polynomials from moment sequences, the recurrence
//! families of the classical and free categories, and the Jacobi data of
//! the Fuss-Catalan moments.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{enumerate, Category};
use crate::poly::RatPolynomial;

/// Where a moment sequence came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Partition counts of a category.
    Category(Category),
    Named(String),
}

/// `m_0 = 1, m_1, ..., m_D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSequence {
    values: Vec<BigRational>,
    provenance: Provenance,
}

impl MomentSequence {
    pub fn new(values: Vec<BigRational>, provenance: Provenance) -> Result<Self> {
        match values.first() {
            Some(m0) if m0.is_one() => Ok(MomentSequence { values, provenance }),
            _ => Err(Error::InvalidQuery(
                "moment sequences start with m_0 = 1".into(),
            )),
        }
    }

    pub fn from_integers(values: &[i64], name: &str) -> Result<Self> {
        Self::new(
            values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
            Provenance::Named(name.into()),
        )
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Highest available moment index.
    pub fn top(&self) -> usize {
        self.values.len() - 1
    }

    /// `L(p) = Σ c_j m_j`.
    pub fn functional(&self, p: &RatPolynomial) -> Result<BigRational> {
        let coeffs = p.coeffs();
        if coeffs.len() > self.values.len() {
            return Err(Error::MissingMoments {
                needed: coeffs.len(),
                have: self.values.len(),
            });
        }
        Ok(coeffs.iter().zip(&self.values).map(|(c, m)| c * m).sum())
    }
}

/// Recurrence data `Q_{k+1} = (n - α_k) Q_k - β_k Q_{k-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiData {
    /// `α_0 .. α_{depth-1}`.
    pub alpha: Vec<BigRational>,
    /// `β_1 .. β_depth`.
    pub beta: Vec<BigRational>,
    /// `γ_k = L(n^k Q_k)` for `k = 0..=depth`.
    pub gamma: Vec<BigRational>,
    /// `Q_0 .. Q_depth`.
    pub q: Vec<RatPolynomial>,
}

fn times_power(p: &RatPolynomial, e: usize) -> RatPolynomial {
    let mut coeffs = vec![BigRational::zero(); e];
    coeffs.extend(p.coeffs().iter().cloned());
    RatPolynomial::new(coeffs)
}

/// Jacobi parameters up to `depth` from moments `m_0 .. m_{2 depth}`.
pub fn jacobi_from_moments(m: &MomentSequence, depth: usize) -> Result<JacobiData> {
    if m.top() < 2 * depth {
        return Err(Error::MissingMoments {
            needed: 2 * depth + 1,
            have: m.values.len(),
        });
    }
    let mut q = vec![RatPolynomial::one()];
    let mut gamma = vec![BigRational::one()];
    let mut alpha = Vec::with_capacity(depth);
    let mut beta = Vec::with_capacity(depth);
    for k in 0..depth {
        let mut a = m.functional(&times_power(&q[k], k + 1))? / &gamma[k];
        if k > 0 {
            a -= m.functional(&times_power(&q[k - 1], k))? / &gamma[k - 1];
        }
        let mut next = q[k].mul_linear(&a);
        if k > 0 {
            next = next.sub(&q[k - 1].scale(&beta[k - 1]));
        }
        let g = m.functional(&times_power(&next, k + 1))?;
        if g.is_zero() {
            return Err(Error::Degenerate { index: k + 1 });
        }
        beta.push(&g / &gamma[k]);
        alpha.push(a);
        gamma.push(g);
        q.push(next);
    }
    Ok(JacobiData {
        alpha,
        beta,
        gamma,
        q,
    })
}

/// `L(Q_a Q_b) = 0` for `a ≠ b` and `L(Q_a²) = γ_a > 0`, within the range
/// the moments cover.
pub fn orthogonality_check(j: &JacobiData, m: &MomentSequence) -> Result<bool> {
    for a in 0..j.q.len() {
        for b in 0..=a {
            let value = m.functional(&j.q[a].mul(&j.q[b]))?;
            let ok = if a == b {
                value == j.gamma[a] && value.is_positive()
            } else {
                value.is_zero()
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The seven families with known three-term recurrences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    O,
    B,
    OStar,
    S,
    OPlus,
    BPlus,
    SPlus,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::O,
        Family::B,
        Family::OStar,
        Family::S,
        Family::OPlus,
        Family::BPlus,
        Family::SPlus,
    ];

    pub fn category(self) -> Category {
        match self {
            Family::O => Category::O,
            Family::B => Category::B,
            Family::OStar => Category::OStar,
            Family::S => Category::S,
            Family::OPlus => Category::OPlus,
            Family::BPlus => Category::BPlus,
            Family::SPlus => Category::SPlus,
        }
    }

    pub fn from_category(c: Category) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.category() == c)
    }

    /// `α_k`.
    pub fn alpha(self, k: usize) -> i64 {
        match self {
            Family::O | Family::OStar | Family::OPlus => 0,
            Family::B | Family::BPlus => 1,
            Family::S => k as i64 + 1,
            Family::SPlus => {
                if k == 0 {
                    1
                } else {
                    2
                }
            }
        }
    }

    /// `β_k` for `k ≥ 1`.
    pub fn beta(self, k: usize) -> i64 {
        match self {
            Family::O | Family::B | Family::S => k as i64,
            Family::OStar => (k as i64 + 1) / 2,
            Family::OPlus | Family::BPlus | Family::SPlus => 1,
        }
    }
}

/// `Q_0 .. Q_depth` of a family, from its recurrence.
pub fn recurrence_polys(family: Family, depth: usize) -> Vec<RatPolynomial> {
    let int = |v: i64| BigRational::from_integer(v.into());
    let mut q = vec![RatPolynomial::one()];
    for k in 0..depth {
        let mut next = q[k].mul_linear(&int(family.alpha(k)));
        if k > 0 {
            next = next.sub(&q[k - 1].scale(&int(family.beta(k))));
        }
        q.push(next);
    }
    q
}

/// `m_j = #partitions of j points in the category`, for `j = 0..=top`.
pub fn moments(category: Category, top: usize) -> MomentSequence {
    let values = (0..=top)
        .map(|j| BigRational::from_integer(enumerate(category, j).len().into()))
        .collect();
    MomentSequence {
        values,
        provenance: Provenance::Category(category),
    }
}

/// `C(3l, l) / (2l + 1)`.
pub fn fuss_catalan(l: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..l {
        c = c * BigInt::from(3 * l - i) / BigInt::from(i + 1);
    }
    c / BigInt::from(2 * l + 1)
}

/// Moments with `m_{2l}` Fuss-Catalan and odd moments zero.
pub fn fuss_catalan_moments(top: usize) -> MomentSequence {
    let values = (0..=top)
        .map(|j| {
            if j % 2 == 1 {
                BigRational::zero()
            } else {
                BigRational::from_integer(fuss_catalan(j / 2))
            }
        })
        .collect();
    MomentSequence {
        values,
        provenance: Provenance::Named("fuss-catalan".into()),
    }
}

/// Conjectured closed form of `β_k` for the Fuss-Catalan moments.
pub fn conjectured_beta(k: usize) -> BigRational {
    let k = k as i64;
    let (a, b) = if k % 2 == 0 {
        (3 * k - 1, 3 * k + 2)
    } else {
        (3 * k - 2, 3 * k + 1)
    };
    BigRational::new((3 * a * b).into(), (4 * (2 * k - 1) * (2 * k + 1)).into())
}

/// One row of the Fuss-Catalan Jacobi table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnPlusRow {
    pub k: usize,
    pub moment: BigInt,
    pub gamma: BigRational,
    pub beta: BigRational,
    pub conjectured: BigRational,
}

impl HnPlusRow {
    pub fn matches(&self) -> bool {
        self.beta == self.conjectured
    }
}

/// `γ_k`, `β_k` for `k = 1..=depth` from the Fuss-Catalan moments, each
/// compared with the conjectured `β_k`.
pub fn hnplus_jacobi(depth: usize) -> Result<Vec<HnPlusRow>> {
    let m = fuss_catalan_moments(2 * depth);
    let j = jacobi_from_moments(&m, depth)?;
    if j.alpha.iter().any(|a| !a.is_zero()) {
        return Err(Error::InvalidQuery(
            "symmetric moments produced a nonzero alpha".into(),
        ));
    }
    Ok((1..=depth)
        .map(|k| HnPlusRow {
            k,
            moment: fuss_catalan(k),
            gamma: j.gamma[k].clone(),
            beta: j.beta[k - 1].clone(),
            conjectured: conjectured_beta(k),
        })
        .collect())
}

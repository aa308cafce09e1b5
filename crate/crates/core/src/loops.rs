//! The loop-model factorization `G = T Tᵗ` for noncrossing pairings, with
//! `T` built from height profiles and ratios of the polynomials `P_r`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::closed::{cheb, exponent_f, ChebFamily};
use crate::error::{Error, Result};
use crate::matrix::det_exact;
use crate::partition::{enumerate, Category, SetPartition};
use crate::report::FailureReport;

/// `h(i)` for `i = 0..=k`: points `≤ i` paired with a point `> i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HeightProfile {
    heights: Vec<usize>,
}

impl HeightProfile {
    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Pointwise `self ≤ other`.
    pub fn below(&self, other: &HeightProfile) -> bool {
        self.heights.iter().zip(&other.heights).all(|(a, b)| a <= b)
    }
}

pub fn height_profile(p: &SetPartition) -> Result<HeightProfile> {
    if !Category::OPlus.is_member(p) {
        return Err(Error::NotNoncrossingPairing);
    }
    let blocks = p.blocks();
    let mut heights = vec![0usize; p.k() + 1];
    for block in &blocks {
        for h in &mut heights[block[0] + 1..block[1] + 1] {
            *h += 1;
        }
    }
    Ok(HeightProfile { heights })
}

/// Outcome of the factorization check at one `(k, n)`.
#[derive(Debug, Clone)]
pub struct LoopCheck {
    pub k: usize,
    pub n: u64,
    /// Pairings by total height, ties in canonical order.
    pub order: Vec<SetPartition>,
    /// `e_r` for `r = 0..=k/2`: openers reaching height `r` minus those reaching `r + 1`.
    pub exponents: Vec<i64>,
    /// Openers reaching height `r`, summed over all pairings.
    pub opener_counts: Vec<u64>,
    pub det_t_squared: BigRational,
    pub det_g: BigInt,
    /// Largest `|(T Tᵗ)(π,σ) - G(π,σ)| / G(π,σ)` seen.
    pub max_relative_error: BigRational,
    pub failures: Vec<FailureReport>,
}

impl LoopCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Bits of fixed-point precision for the numeric identity (about 60 digits).
const SCALE_BITS: u64 = 200;

/// Builds `T_kn` and checks lower-triangularity in the height order, the
/// exact determinant identity, and `G = T Tᵗ` to relative `1e-9`.
pub fn loop_factorization_check(k: usize, n: u64) -> Result<LoopCheck> {
    if k % 2 == 1 || n < 2 {
        return Err(Error::InvalidQuery(alloc::format!(
            "loop model needs even k and n >= 2, got k={k}, n={n}"
        )));
    }
    let mut order = enumerate(Category::OPlus, k);
    let profiles: Vec<HeightProfile> = order.iter().map(height_profile).collect::<Result<_>>()?;
    let mut keyed: Vec<(usize, SetPartition, HeightProfile)> = order
        .drain(..)
        .zip(profiles)
        .map(|(p, h)| (h.heights.iter().sum(), p, h))
        .collect();
    keyed.sort();
    let order: Vec<SetPartition> = keyed.iter().map(|t| t.1.clone()).collect();
    let heights: Vec<HeightProfile> = keyed.into_iter().map(|t| t.2).collect();
    let size = order.len();
    let nb = BigInt::from(n);
    let p_vals: Vec<BigInt> = (0..=k / 2 + 1)
        .map(|r| cheb(ChebFamily::P, r).eval(&nb))
        .collect();
    let mut failures = Vec::new();

    // Squared entries: T(π,σ)^2 as an exact rational, or None when zero.
    let mut squared: Vec<Option<BigRational>> = Vec::with_capacity(size * size);
    for (pi, _) in order.iter().zip(&heights) {
        for hs in &heights {
            let h = &hs.heights;
            let mut acc = Some(BigRational::one());
            for block in pi.blocks() {
                let (i, j) = (block[0] + 1, block[1] + 1);
                if h[i - 1] != h[j] || h[i] != h[j - 1] {
                    acc = None;
                    break;
                }
                if let Some(a) = acc.as_mut() {
                    *a *= BigRational::new(p_vals[h[i]].clone(), p_vals[h[i - 1]].clone());
                }
            }
            squared.push(acc);
        }
    }
    let at = |i: usize, j: usize| &squared[i * size + j];

    for (a, pi) in order.iter().enumerate() {
        for (b, sigma) in order.iter().enumerate() {
            if !heights[b].below(&heights[a]) && at(a, b).is_some() {
                failures.push(
                    FailureReport::new("loop model: triangularity", Some(Category::OPlus), k)
                        .at_n(n)
                        .entry(pi, sigma)
                        .values("0", "nonzero"),
                );
            }
        }
    }

    let mut opener_counts = vec![0u64; k / 2 + 2];
    for (pi, h) in order.iter().zip(&heights) {
        for block in pi.blocks() {
            opener_counts[h.heights[block[0] + 1]] += 1;
        }
    }
    let exponents: Vec<i64> = (0..=k / 2)
        .map(|r| opener_counts[r] as i64 - opener_counts[r + 1] as i64)
        .collect();
    opener_counts.truncate(k / 2 + 1);
    for r in 1..=k / 2 {
        let expected = exponent_f(1, num_rational::Ratio::new(k as i64, 2), r as i64);
        if opener_counts[r] as i64 != expected {
            failures.push(
                FailureReport::new("loop model: opener count", Some(Category::OPlus), k)
                    .values(alloc::format!("f(k/2,{r}) = {expected}"), opener_counts[r]),
            );
        }
    }

    let det_t_squared: BigRational = (0..size)
        .map(|i| at(i, i).clone().unwrap_or_else(BigRational::zero))
        .product();
    let from_exponents: BigRational = exponents
        .iter()
        .enumerate()
        .map(|(r, &e)| {
            let base = BigRational::from_integer(p_vals[r].clone());
            let p = num_traits::pow(base, e.unsigned_abs() as usize);
            if e < 0 {
                p.recip()
            } else {
                p
            }
        })
        .product();
    let gram = crate::gram::GramInstance::new(Category::OPlus, k);
    let perm: Vec<usize> = order
        .iter()
        .map(|p| gram.partitions().binary_search(p).expect("same set"))
        .collect();
    let det_g = det_exact(&gram.matrix_at(&nb))?;
    let det_g_q = BigRational::from_integer(det_g.clone());
    if det_t_squared != det_g_q || from_exponents != det_g_q {
        failures.push(
            FailureReport::new("loop model: det(T)^2 = det(G)", Some(Category::OPlus), k)
                .at_n(n)
                .values(
                    &det_g,
                    alloc::format!(
                        "{} (diagonal), {} (exponents)",
                        det_t_squared,
                        from_exponents
                    ),
                ),
        );
    }

    // Fixed-point square roots at scale 2^SCALE_BITS.
    let fixed: Vec<BigInt> = squared
        .iter()
        .map(|sq| match sq {
            None => BigInt::zero(),
            Some(q) => {
                let num = q.numer().magnitude() << (2 * SCALE_BITS);
                BigInt::from((num / q.denom().magnitude()).sqrt())
            }
        })
        .collect();
    let scale2 = BigInt::from(BigUint::one() << (2 * SCALE_BITS));
    let mut max_relative_error = BigRational::zero();
    for a in 0..size {
        for b in 0..size {
            let mut sum = BigInt::zero();
            for c in 0..size {
                let (x, y) = (&fixed[a * size + c], &fixed[b * size + c]);
                if !x.is_zero() && !y.is_zero() {
                    sum += x * y;
                }
            }
            let g = nb.pow(gram.exponent(perm[a], perm[b]) as u32) * &scale2;
            let err = BigRational::new((&sum - &g).abs(), g.clone());
            if err > max_relative_error {
                max_relative_error = err.clone();
            }
            if err * BigInt::from(1_000_000_000u64) > BigRational::one() {
                failures.push(
                    FailureReport::new("loop model: G = T T^t", Some(Category::OPlus), k)
                        .at_n(n)
                        .entry(&order[a], &order[b])
                        .values(
                            &g >> (2 * SCALE_BITS) as usize,
                            sum >> (2 * SCALE_BITS) as usize,
                        ),
                );
            }
        }
    }

    Ok(LoopCheck {
        k,
        n,
        order,
        exponents,
        opener_counts,
        det_t_squared,
        det_g,
        max_relative_error,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn height_examples() {
        assert_eq!(
            height_profile(&p("{1,2}{3,4}")).unwrap().heights(),
            &[0, 1, 0, 1, 0]
        );
        assert_eq!(
            height_profile(&p("{1,4}{2,3}")).unwrap().heights(),
            &[0, 1, 2, 1, 0]
        );
        assert_eq!(height_profile(&p("{1,2}")).unwrap().heights(), &[0, 1, 0]);
        assert_eq!(
            height_profile(&p("{1,3}{2,4}")),
            Err(Error::NotNoncrossingPairing)
        );
        assert_eq!(
            height_profile(&p("{1,2,3,4}")),
            Err(Error::NotNoncrossingPairing)
        );
    }

    #[test]
    fn heights_are_dyck_paths() {
        for k in (0..=10).step_by(2) {
            for x in enumerate(Category::OPlus, k) {
                let h = height_profile(&x).unwrap();
                let h = h.heights();
                assert_eq!((h[0], h[k]), (0, 0));
                assert!(h.windows(2).all(|w| w[0].abs_diff(w[1]) == 1));
            }
        }
    }

    #[test]
    fn small_cases() {
        let c = loop_factorization_check(2, 5).unwrap();
        assert!(c.passed());
        assert_eq!(c.det_g, BigInt::from(5));
        let c = loop_factorization_check(4, 3).unwrap();
        assert!(c.passed(), "{:?}", c.failures);
        assert_eq!(c.det_g, BigInt::from(72));
        assert_eq!(&c.opener_counts[1..], &[3, 1]);
        assert!(loop_factorization_check(3, 3).is_err());
    }

    #[test]
    fn passes_up_to_eight() {
        for k in (2..=8).step_by(2) {
            for n in [2, 3, 5] {
                let c = loop_factorization_check(k, n).unwrap();
                assert!(c.passed(), "k={k} n={n}: {:?}", c.failures);
            }
        }
    }
}

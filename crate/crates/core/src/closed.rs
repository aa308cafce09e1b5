//! Closed-form determinant products, the polynomial families P, Q, R, S,
//! binomial exponent tables, trace polynomials and the epi product.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::{enumerate_epi, invariant_bundle, Category};
use crate::poly::{IntPolynomial, RationalFunction, Reduced, Variable};
use crate::young::{enumerate_diagrams, ContentVariant, YoungDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebFamily {
    P,
    Q,
    R,
    S,
}

impl ChebFamily {
    pub fn letter(self) -> &'static str {
        match self {
            ChebFamily::P => "P",
            ChebFamily::Q => "Q",
            ChebFamily::R => "R",
            ChebFamily::S => "S",
        }
    }
}

fn n_poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(Variable::N, c)
}

/// `P_0 = 1, P_1 = n, P_{r+1} = n P_r - P_{r-1}`.
fn cheb_p(r: usize) -> IntPolynomial {
    let x = n_poly(&[0, 1]);
    let (mut a, mut b) = (n_poly(&[1]), x.clone());
    if r == 0 {
        return a;
    }
    for _ in 1..r {
        let next = &(&x * &b) - &a;
        a = b;
        b = next;
    }
    b
}

fn cheb_r(r: usize) -> IntPolynomial {
    let seeds = [
        n_poly(&[1]),
        n_poly(&[1]),
        n_poly(&[-1, 1]),
        n_poly(&[-2, 1]),
    ];
    let mut seq: Vec<IntPolynomial> = seeds.to_vec();
    let step = n_poly(&[-2, 1]);
    while seq.len() <= r {
        let m = seq.len();
        let next = &(&step * &seq[m - 2]) - &seq[m - 4];
        seq.push(next);
    }
    seq.swap_remove(r)
}

/// `S_r(m) = m^{⌊r/2⌋} P_r(√m)^2`, expanded in `m`.
fn cheb_s(r: usize) -> IntPolynomial {
    let sq = cheb_p(r).pow(2);
    let coeffs = sq.coeffs();
    assert!(
        coeffs.iter().skip(1).step_by(2).all(Zero::is_zero),
        "P_r^2 is a polynomial in n^2"
    );
    let even: Vec<BigInt> = coeffs.iter().step_by(2).cloned().collect();
    IntPolynomial::new(Variable::N, even).shift_up(r / 2)
}

/// The `r`-th member of a family, as a polynomial in `n`.
pub fn cheb(family: ChebFamily, r: usize) -> IntPolynomial {
    match family {
        ChebFamily::P => cheb_p(r),
        ChebFamily::Q => cheb_p(r).compose(&IntPolynomial::linear(Variable::N, -1)),
        ChebFamily::R => cheb_r(r),
        ChebFamily::S => cheb_s(r),
    }
}

fn binom(n: i64, m: i64) -> i64 {
    if m < 0 || n < 0 || m > n {
        return 0;
    }
    let m = m.min(n - m);
    let mut acc: i128 = 1;
    for i in 0..m {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// `f^i_{kr} = C((i+1)k, k-r) - C((i+1)k, k-r-1)`, zero for non-integer `k`.
pub fn exponent_f(i: u32, k: Ratio<i64>, r: i64) -> i64 {
    if !k.is_integer() {
        return 0;
    }
    let k = k.to_integer();
    let top = (i as i64 + 1) * k;
    binom(top, k - r) - binom(top, k - r - 1)
}

/// `d^i_{kr} = f^i_{kr} - f^i_{k,r+1}`.
pub fn exponent_d(i: u32, k: Ratio<i64>, r: i64) -> i64 {
    exponent_f(i, k, r) - exponent_f(i, k, r + 1)
}

fn half(k: usize) -> Ratio<i64> {
    Ratio::new(k as i64, 2)
}

fn whole(k: usize) -> Ratio<i64> {
    Ratio::from_integer(k as i64)
}

/// One factor `poly^exp` of a product formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub name: String,
    pub poly: IntPolynomial,
    pub exp: i64,
}

/// `n^monomial_exp · Π factor^exp`, with its expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub monomial_exp: i64,
    pub factors: Vec<Factor>,
    pub poly: IntPolynomial,
}

impl ClosedForm {
    fn assemble(monomial_exp: i64, factors: Vec<Factor>) -> Result<Self> {
        let factors: Vec<Factor> = factors.into_iter().filter(|f| f.exp != 0).collect();
        let poly = product_of(monomial_exp, &factors)
            .normalize()?
            .into_polynomial()?;
        Ok(ClosedForm {
            monomial_exp,
            factors,
            poly,
        })
    }
}

fn product_of(monomial_exp: i64, factors: &[Factor]) -> RationalFunction {
    let mut acc = RationalFunction::from_polynomial(IntPolynomial::one(Variable::N));
    acc.mul_power(&n_poly(&[0, 1]), monomial_exp);
    for f in factors {
        acc.mul_power(&f.poly, f.exp);
    }
    acc
}

fn family_factor(family: ChebFamily, r: usize, exp: i64) -> Factor {
    Factor {
        name: format!("{}_{}", family.letter(), r),
        poly: cheb(family, r),
        exp,
    }
}

fn linear_name(shift: i64) -> String {
    match shift {
        0 => "n".into(),
        s if s > 0 => format!("n+{s}"),
        s => format!("n-{}", -s),
    }
}

/// Product over the category's partitions of `n!/(n-|π|)!`.
fn falling_product(category: Category, k: usize) -> Result<ClosedForm> {
    let stirling = invariant_bundle(category, k).stirling;
    let mut factors = Vec::new();
    let count_above = |i: usize| -> i64 { stirling.iter().skip(i + 1).sum::<u64>() as i64 };
    for i in 1..k {
        factors.push(Factor {
            name: linear_name(-(i as i64)),
            poly: IntPolynomial::linear(Variable::N, -(i as i64)),
            exp: count_above(i),
        });
    }
    ClosedForm::assemble(count_above(0), factors)
}

fn young_product(
    k: usize,
    monomial_exp: i64,
    variant: ContentVariant,
    sizes: &[usize],
    weight: impl Fn(usize, &YoungDiagram) -> BigInt,
) -> Result<ClosedForm> {
    let prefix = match variant {
        ContentVariant::O => "f_n",
        ContentVariant::B => "f'_n",
        ContentVariant::OStar => "f''_n",
    };
    let mut factors = Vec::new();
    for &m in sizes {
        for lambda in enumerate_diagrams(m) {
            if m == 0 {
                continue;
            }
            let exp = weight(k, &lambda).to_i64().ok_or(Error::NonPolynomial)?;
            factors.push(Factor {
                name: format!("{prefix}{lambda}"),
                poly: lambda.content_poly(variant),
                exp,
            });
        }
    }
    ClosedForm::assemble(monomial_exp, factors)
}

fn binom_big(n: usize, m: usize) -> BigInt {
    BigInt::from(binom(n as i64, m as i64))
}

/// The category's closed-form determinant of `G_kn` with its factorization.
pub fn closed_det(category: Category, k: usize) -> Result<ClosedForm> {
    let a = invariant_bundle(category, k).a;
    let l = k / 2;
    match category {
        Category::S | Category::H | Category::HStar => falling_product(category, k),
        Category::O if k % 2 == 0 => young_product(k, 0, ContentVariant::O, &[l], |_, lam| {
            lam.double().dimension()
        }),
        Category::OStar if k % 2 == 0 => {
            young_product(k, 0, ContentVariant::OStar, &[l], |_, lam| {
                lam.dimension().pow(2)
            })
        }
        Category::O | Category::OStar => ClosedForm::assemble(0, Vec::new()),
        Category::B => {
            let sizes: Vec<usize> = (0..=l).collect();
            young_product(k, a, ContentVariant::B, &sizes, |k, lam| {
                binom_big(k, 2 * lam.boxes()) * lam.double().dimension()
            })
        }
        Category::OPlus => {
            let factors = (1..=l)
                .map(|r| family_factor(ChebFamily::P, r, exponent_d(1, half(k), r as i64)))
                .collect();
            ClosedForm::assemble(a, factors)
        }
        Category::BPlus => {
            let factors = (1..=l)
                .map(|r| {
                    let exp = (1..=l)
                        .map(|j| binom(k as i64, 2 * j as i64) * exponent_d(1, whole(j), r as i64))
                        .sum();
                    family_factor(ChebFamily::Q, r, exp)
                })
                .collect();
            ClosedForm::assemble(a, factors)
        }
        Category::SPlus => {
            let factors = (1..=k)
                .map(|r| family_factor(ChebFamily::R, r, exponent_d(1, whole(k), r as i64)))
                .collect();
            ClosedForm::assemble(a, factors)
        }
        Category::HPlus => {
            let factors = (1..=l)
                .map(|r| family_factor(ChebFamily::S, r, exponent_d(2, half(k), r as i64)))
                .collect();
            ClosedForm::assemble(a, factors)
        }
    }
}

/// Reading of the exponent in the free orthogonal product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentReading {
    /// `d_{kr} = f_{kr} - f_{k,r+1}`
    NextR,
    /// `d_{kr} = f_{kr} - f_{k+1,r}`
    NextK,
}

/// `Π_r P_r^{d_{k/2,r}}` under either exponent reading, reduced.
pub fn oplus_product(k: usize, reading: ExponentReading) -> Result<Reduced> {
    let kk = half(k);
    let factors: Vec<Factor> = (1..=k / 2)
        .map(|r| {
            let r = r as i64;
            let exp = match reading {
                ExponentReading::NextR => exponent_d(1, kk, r),
                ExponentReading::NextK => exponent_f(1, kk, r) - exponent_f(1, kk + 1, r),
            };
            family_factor(ChebFamily::P, r as usize, exp)
        })
        .collect();
    product_of(0, &factors).normalize()
}

fn pow_rational(base: &BigRational, e: i64) -> BigRational {
    let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// The free-case products written with `P_r` at `√n` (or at `n - 1` for the
/// bistochastic case), evaluated at `n = m^2`.
pub fn root_form_value(category: Category, k: usize, m: &BigInt) -> Result<BigRational> {
    let a = invariant_bundle(category, k).a;
    let mq = BigRational::from_integer(m.clone());
    let l = k / 2;
    let p_at = |r: usize, x: &BigRational| cheb_p(r).eval_rational(x);
    let mut acc = BigRational::one();
    match category {
        Category::OPlus => {
            let n = &mq * &mq;
            for r in 1..=l {
                acc *= pow_rational(&p_at(r, &n), exponent_d(1, half(k), r as i64));
            }
        }
        Category::SPlus => {
            acc = pow_rational(&mq, a);
            for r in 1..=k {
                acc *= pow_rational(&p_at(r, &mq), exponent_d(1, whole(k), r as i64));
            }
        }
        Category::HPlus => {
            acc = pow_rational(&mq, a);
            for r in 1..=l {
                acc *= pow_rational(&p_at(r, &mq), 2 * exponent_d(2, half(k), r as i64));
            }
        }
        Category::BPlus => {
            let n = &mq * &mq;
            acc = pow_rational(&n, a);
            let shifted = &n - BigRational::one();
            for r in 1..=l {
                let exp: i64 = (1..=l)
                    .map(|j| binom(k as i64, 2 * j as i64) * exponent_d(1, whole(j), r as i64))
                    .sum();
                acc *= pow_rational(&p_at(r, &shifted), exp);
            }
        }
        _ => {
            return Err(Error::UnsupportedCategory {
                op: "root-variable product",
                category,
            })
        }
    }
    Ok(acc)
}

/// One evaluation point of the root-variable comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantPoint {
    pub m: i64,
    pub n: i64,
    pub root_form: BigRational,
    pub closed: BigInt,
}

impl VariantPoint {
    pub fn agrees(&self) -> bool {
        self.root_form == BigRational::from_integer(self.closed.clone())
    }
}

/// Compares the root-variable product with `closed_det` at `n = m^2`,
/// `m = 2..=6`.
pub fn closed_det_variant(category: Category, k: usize) -> Result<Vec<VariantPoint>> {
    let closed = closed_det(category, k)?.poly;
    (2..=6i64)
        .map(|m| {
            let root_form = root_form_value(category, k, &BigInt::from(m))?;
            Ok(VariantPoint {
                m,
                n: m * m,
                root_form,
                closed: closed.eval(&BigInt::from(m * m)),
            })
        })
        .collect()
}

/// `n^{a_k} Π_σ F_{r(σ)} / F_{r(σ)-1}` over epi diagrams. Epi with `r = 0`
/// contribute 1; for the orthogonal and bistochastic cases only even `r`
/// enter, with `F_r` indexed by `r/2`.
pub fn epi_det(category: Category, k: usize) -> Result<ClosedForm> {
    let groups = enumerate_epi(category, k)?;
    let a = invariant_bundle(category, k).a;
    let (family, halve) = match category {
        Category::OPlus => (ChebFamily::P, true),
        Category::BPlus => (ChebFamily::Q, true),
        _ => (ChebFamily::R, false),
    };
    let mut exps: Vec<i64> = vec![0; k + 2];
    for (r, group) in groups.iter().enumerate() {
        if r == 0 || (halve && r % 2 == 1) {
            continue;
        }
        let idx = if halve { r / 2 } else { r };
        exps[idx] += group.len() as i64;
        exps[idx - 1] -= group.len() as i64;
    }
    let factors = exps
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &e)| family_factor(family, i, e))
        .collect();
    ClosedForm::assemble(a, factors)
}

/// `Σ_r S_kr t^r`.
pub fn trace_poly(category: Category, k: usize) -> IntPolynomial {
    let row = invariant_bundle(category, k).stirling;
    IntPolynomial::new(Variable::T, row.into_iter().map(BigInt::from).collect())
}

/// `T_{2l}(t) = Σ_r (1/r) C(l-1, r-1) C(2l, r-1) t^r` for `l ≥ 1`.
pub fn hplus_trace_formula(l: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); l + 1];
    if l == 0 {
        return IntPolynomial::one(Variable::T);
    }
    for r in 1..=l {
        let num = binom_big(l - 1, r - 1) * binom_big(2 * l, r - 1);
        assert!((&num % r).is_zero());
        coeffs[r] = num / r;
    }
    IntPolynomial::new(Variable::T, coeffs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subleading {
    /// `T'(1)`
    pub s: BigInt,
    /// `T''(1)`
    pub z: BigInt,
    /// Coefficient of `n^{s-1}` in the closed form.
    pub observed: BigInt,
}

impl Subleading {
    pub fn holds(&self) -> bool {
        BigInt::from(2) * &self.observed == -&self.z
    }
}

pub fn subleading_check(category: Category, k: usize) -> Result<Subleading> {
    if !matches!(category, Category::S | Category::H | Category::HStar) {
        return Err(Error::UnsupportedCategory {
            op: "subleading check",
            category,
        });
    }
    let t = trace_poly(category, k);
    let d1 = t.derivative();
    let d2 = d1.derivative();
    let one = BigInt::one();
    let s = d1.eval(&one);
    let z = d2.eval(&one);
    let poly = closed_det(category, k)?.poly;
    let idx = s.to_usize().expect("small degree");
    let observed = if idx == 0 {
        BigInt::zero()
    } else {
        poly.coeff(idx - 1)
    };
    Ok(Subleading { s, z, observed })
}

/// `a_k + Σ_π (k - 2|π|) = 0` and the rewritten product with `n^{a_k}`
/// pulled out agrees with the falling-factorial product.
pub fn classical_rewrite_identity(category: Category, k: usize) -> Result<bool> {
    if !matches!(category, Category::S | Category::H | Category::HStar) {
        return Err(Error::UnsupportedCategory {
            op: "classical rewrite",
            category,
        });
    }
    let bundle = invariant_bundle(category, k);
    let correction: i64 = bundle
        .stirling
        .iter()
        .enumerate()
        .map(|(r, &c)| (k as i64 - 2 * r as i64) * c as i64)
        .sum();
    let direct = closed_det(category, k)?;
    let rewritten = ClosedForm::assemble(
        direct.monomial_exp + bundle.a + correction,
        direct.factors.clone(),
    )?;
    Ok(bundle.a + correction == 0 && rewritten.poly == direct.poly)
}

/// `Σ_{l=1}^{⌈k/2⌉} d¹_{k,2l-1} = C(2k,k)/(k+1)`.
pub fn odd_exponent_sum(k: usize) -> (i64, i64) {
    let lhs = (1..=k.div_ceil(2))
        .map(|l| exponent_d(1, whole(k), 2 * l as i64 - 1))
        .sum();
    (lhs, binom(2 * k as i64, k as i64) / (k as i64 + 1))
}

/// `Σ_{s=2}^{l} ⌊s/2⌋ d²_{ls} = C(3l-1, l-2)`.
pub fn fuss_exponent_sum(l: usize) -> (i64, i64) {
    let lhs = (2..=l)
        .map(|s| (s / 2) as i64 * exponent_d(2, whole(l), s as i64))
        .sum();
    (lhs, binom(3 * l as i64 - 1, l as i64 - 2))
}

impl core::fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.monomial_exp != 0 {
            parts.push(if self.monomial_exp == 1 {
                "n".into()
            } else {
                format!("n^{}", self.monomial_exp)
            });
        }
        for fac in &self.factors {
            let base = if fac.name.starts_with('n') {
                format!("({})", fac.name)
            } else {
                fac.name.clone()
            };
            parts.push(if fac.exp == 1 {
                base
            } else {
                format!("{base}^{}", fac.exp)
            });
        }
        if parts.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&parts.join(" * "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prod(fs: &[(&[i64], u64)]) -> IntPolynomial {
        fs.iter()
            .fold(IntPolynomial::one(Variable::N), |acc, (c, e)| {
                &acc * &n_poly(c).pow(*e)
            })
    }

    #[test]
    fn family_examples() {
        assert_eq!(cheb(ChebFamily::P, 2), n_poly(&[-1, 0, 1]));
        assert_eq!(cheb(ChebFamily::S, 2), prod(&[(&[0, 1], 1), (&[-1, 1], 2)]));
        assert_eq!(cheb(ChebFamily::R, 4), n_poly(&[1, -3, 1]));
        assert_eq!(cheb(ChebFamily::Q, 2), n_poly(&[0, -2, 1]));
        assert_eq!(cheb(ChebFamily::S, 3), prod(&[(&[0, 1], 2), (&[-2, 1], 2)]));
        assert_eq!(cheb(ChebFamily::S, 1), n_poly(&[0, 1]));
    }

    #[test]
    fn family_identities() {
        let sq = n_poly(&[0, 0, 1]);
        let x = n_poly(&[0, 1]);
        for r in 0..=12 {
            let q = cheb(ChebFamily::Q, r);
            if r >= 2 {
                let rec = &(&n_poly(&[-1, 1]) * &cheb(ChebFamily::Q, r - 1))
                    - &cheb(ChebFamily::Q, r - 2);
                assert_eq!(q, rec);
            }
            let p = cheb(ChebFamily::P, r);
            let rr = cheb(ChebFamily::R, r).compose(&sq);
            assert_eq!(p, if r % 2 == 0 { rr } else { &x * &rr });
            let s = cheb(ChebFamily::S, r).compose(&sq);
            assert_eq!(s, &x.pow(2 * (r / 2) as u64) * &p.pow(2));
        }
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(exponent_f(1, whole(2), 1), 3);
        assert_eq!(exponent_f(2, whole(2), 1), 5);
        assert_eq!(exponent_f(1, Ratio::new(5, 2), 1), 0);
        for i in 1..=2 {
            for k in 0..=10 {
                let kk = whole(k);
                for r in 0..=12 {
                    assert!(exponent_f(i, kk, r) >= 0);
                    if r > k as i64 {
                        assert_eq!(exponent_f(i, kk, r), 0);
                    }
                }
                let tele: i64 = (1..=k as i64 + 1).map(|r| exponent_d(i, kk, r)).sum();
                assert_eq!(tele, exponent_f(i, kk, 1));
            }
        }
    }

    #[test]
    fn closed_examples() {
        assert_eq!(
            closed_det(Category::S, 3).unwrap().poly,
            prod(&[(&[0, 1], 5), (&[-1, 1], 4), (&[-2, 1], 1)])
        );
        assert_eq!(
            closed_det(Category::O, 4).unwrap().poly,
            prod(&[(&[0, 1], 3), (&[-1, 1], 2), (&[2, 1], 1)])
        );
        assert_eq!(
            closed_det(Category::HPlus, 4).unwrap().poly,
            prod(&[(&[0, 1], 3), (&[-1, 1], 2)])
        );
        assert_eq!(
            closed_det(Category::BPlus, 2).unwrap().poly,
            prod(&[(&[0, 1], 2), (&[-1, 1], 1)])
        );
        assert_eq!(
            closed_det(Category::OStar, 4).unwrap().poly,
            n_poly(&[0, 0, -1, 0, 1])
        );
        let hp = closed_det(Category::HPlus, 4).unwrap();
        assert_eq!(hp.monomial_exp, -2);
        assert_eq!(
            hp.factors.iter().map(|f| f.exp).collect::<Vec<_>>(),
            vec![4, 1]
        );
        assert!(closed_det(Category::OPlus, 3).unwrap().poly.is_one());
        assert_eq!(
            closed_det(Category::OPlus, 4).unwrap().to_string(),
            "P_1^2 * P_2"
        );
    }

    #[test]
    fn variant_examples() {
        let pts = closed_det_variant(Category::HPlus, 4).unwrap();
        let at9 = pts.iter().find(|p| p.n == 9).unwrap();
        assert_eq!(at9.closed, BigInt::from(46656));
        assert!(pts.iter().all(VariantPoint::agrees));
        let pts = closed_det_variant(Category::SPlus, 2).unwrap();
        assert_eq!(
            pts.iter().find(|p| p.n == 4).unwrap().closed,
            BigInt::from(48)
        );
        assert!(pts.iter().all(VariantPoint::agrees));
        for k in 0..=8 {
            assert!(closed_det_variant(Category::OPlus, k)
                .unwrap()
                .iter()
                .all(VariantPoint::agrees));
        }
    }

    #[test]
    fn printed_reading_fails_at_four() {
        let good = oplus_product(4, ExponentReading::NextR).unwrap();
        assert_eq!(good, Reduced::Polynomial(n_poly(&[0, 0, -1, 0, 1])));
        assert!(matches!(
            oplus_product(4, ExponentReading::NextK).unwrap(),
            Reduced::Fraction(_)
        ));
    }

    #[test]
    fn epi_examples() {
        assert_eq!(
            epi_det(Category::OPlus, 4).unwrap().poly,
            n_poly(&[0, 0, -1, 0, 1])
        );
        assert_eq!(
            epi_det(Category::SPlus, 2).unwrap().poly,
            prod(&[(&[0, 1], 2), (&[-1, 1], 1)])
        );
        assert_eq!(
            epi_det(Category::BPlus, 2).unwrap().poly,
            prod(&[(&[0, 1], 2), (&[-1, 1], 1)])
        );
        assert!(epi_det(Category::H, 2).is_err());
    }

    #[test]
    fn trace_examples() {
        let t = |c: &[i64]| IntPolynomial::from_i64s(Variable::T, c);
        assert_eq!(trace_poly(Category::S, 3), t(&[0, 1, 3, 1]));
        assert_eq!(trace_poly(Category::HPlus, 4), t(&[0, 1, 2]));
        assert_eq!(trace_poly(Category::O, 4), t(&[0, 0, 3]));
        assert_eq!(hplus_trace_formula(2), t(&[0, 1, 2]));
        for l in 1..=5 {
            assert_eq!(hplus_trace_formula(l), trace_poly(Category::HPlus, 2 * l));
        }
    }

    #[test]
    fn subleading_examples() {
        let s = subleading_check(Category::S, 3).unwrap();
        assert_eq!((s.s, s.z, s.observed), (10.into(), 12.into(), (-6).into()));
        let h = subleading_check(Category::H, 4).unwrap();
        assert_eq!((h.s, h.z, h.observed), (7.into(), 6.into(), (-3).into()));
        let one = subleading_check(Category::S, 1).unwrap();
        assert_eq!((one.s, one.z, one.observed), (1.into(), 0.into(), 0.into()));
        for c in [Category::S, Category::H, Category::HStar] {
            for k in 0..=6 {
                assert!(subleading_check(c, k).unwrap().holds());
                assert!(classical_rewrite_identity(c, k).unwrap());
            }
        }
    }

    #[test]
    fn telescoping_sums() {
        for k in 1..=10 {
            let (l, r) = odd_exponent_sum(k);
            assert_eq!(l, r, "k={k}");
        }
        for l in 1..=10 {
            let (a, b) = fuss_exponent_sum(l);
            assert_eq!(a, b, "l={l}");
        }
    }
}

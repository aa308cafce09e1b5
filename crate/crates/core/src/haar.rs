//! Brute-force Haar integration over `S_n` and `H_n`, the Weingarten sum
//! over partitions, the Möbius form of the Weingarten matrix, and grid
//! checks of its leading-order behaviour.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gram::{falling_factorial, weingarten_matrix};
use crate::matrix::RatMatrix;
use crate::partition::{enumerate, Category, MobiusTable, SetPartition};
use crate::report::FailureReport;

/// Largest `n` for which `S_n` is enumerated.
pub const MAX_PERM_N: usize = 7;
/// Largest `n` for which `H_n` is enumerated.
pub const MAX_HYPEROCT_N: usize = 4;

/// The monomial `u_{i_1 j_1} ... u_{i_k j_k}`, indices 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MomentQuery {
    n: usize,
    i: Vec<usize>,
    j: Vec<usize>,
}

impl MomentQuery {
    pub fn new(n: usize, i: Vec<usize>, j: Vec<usize>) -> Result<Self> {
        if i.len() != j.len() {
            return Err(Error::InvalidQuery(alloc::format!(
                "tuple lengths {} and {} differ",
                i.len(),
                j.len()
            )));
        }
        if let Some(bad) = i.iter().chain(&j).find(|&&x| x == 0 || x > n) {
            return Err(Error::InvalidQuery(alloc::format!(
                "index {bad} outside 1..={n}"
            )));
        }
        Ok(MomentQuery { n, i, j })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.i.len()
    }

    pub fn i(&self) -> &[usize] {
        &self.i
    }

    pub fn j(&self) -> &[usize] {
        &self.j
    }
}

/// Calls `f` on every permutation of `0..n` (as the image vector).
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        f(&perm);
        // Next permutation in lexicographic order.
        let Some(pivot) = (1..n).rev().find(|&x| perm[x - 1] < perm[x]).map(|x| x - 1) else {
            return;
        };
        let succ = (pivot + 1..n)
            .rev()
            .find(|&x| perm[x] > perm[pivot])
            .expect("pivot has a successor");
        perm.swap(pivot, succ);
        perm[pivot + 1..].reverse();
    }
}

/// `∫ Π u_{i_m j_m}` over `S_n`, with `u` the permutation matrix `u_{g(j) j} = 1`.
pub fn haar_integrate_perm(q: &MomentQuery) -> Result<BigRational> {
    if q.n > MAX_PERM_N {
        return Err(Error::BoundExceeded {
            n: q.n,
            max: MAX_PERM_N,
        });
    }
    let mut hits = 0u64;
    let mut total = 0u64;
    for_each_permutation(q.n, |g| {
        total += 1;
        if q.i.iter().zip(&q.j).all(|(&i, &j)| g[j - 1] == i - 1) {
            hits += 1;
        }
    });
    Ok(BigRational::new(hits.into(), total.into()))
}

/// `∫ Π u_{i_m j_m}` over signed permutation matrices.
pub fn haar_integrate_hyperoct(q: &MomentQuery) -> Result<BigRational> {
    if q.n > MAX_HYPEROCT_N {
        return Err(Error::BoundExceeded {
            n: q.n,
            max: MAX_HYPEROCT_N,
        });
    }
    let mut sum = 0i64;
    let mut total = 0i64;
    for_each_permutation(q.n, |g| {
        for signs in 0u32..(1 << q.n) {
            total += 1;
            let mut value = 1i64;
            for (&i, &j) in q.i.iter().zip(&q.j) {
                if g[j - 1] != i - 1 {
                    value = 0;
                    break;
                }
                if signs >> (j - 1) & 1 == 1 {
                    value = -value;
                }
            }
            sum += value;
        }
    });
    Ok(BigRational::new(sum.into(), total.into()))
}

fn check_classical(op: &'static str, category: Category) -> Result<()> {
    match category {
        Category::S | Category::H => Ok(()),
        _ => Err(Error::UnsupportedCategory { op, category }),
    }
}

/// `[tuple constant on each block of p]`.
fn fits(p: &SetPartition, tuple: &[usize]) -> bool {
    p.blocks()
        .iter()
        .all(|b| b.iter().all(|&x| tuple[x] == tuple[b[0]]))
}

/// `Σ_{π,σ} δ_π(i) δ_σ(j) W(π,σ)` over the category's partitions.
pub fn weingarten_sum(
    category: Category,
    k: usize,
    n: usize,
    i: &[usize],
    j: &[usize],
) -> Result<BigRational> {
    check_classical("weingarten_sum", category)?;
    let q = MomentQuery::new(n, i.to_vec(), j.to_vec())?;
    if q.k() != k {
        return Err(Error::InvalidQuery(alloc::format!(
            "tuples have length {}, expected {k}",
            q.k()
        )));
    }
    let parts = enumerate(category, k);
    let w = weingarten_matrix(category, k, &BigInt::from(n))?;
    Ok(weingarten_sum_with(&parts, &w, &q))
}

fn weingarten_sum_with(parts: &[SetPartition], w: &RatMatrix, q: &MomentQuery) -> BigRational {
    let rows: Vec<usize> = (0..parts.len())
        .filter(|&a| fits(&parts[a], &q.i))
        .collect();
    let cols: Vec<usize> = (0..parts.len())
        .filter(|&b| fits(&parts[b], &q.j))
        .collect();
    let mut acc = BigRational::zero();
    for &a in &rows {
        for &b in &cols {
            acc += &w[(a, b)];
        }
    }
    acc
}

/// Index tuples of length `k` over `1..=n` in first-occurrence form. Every
/// tuple is a relabeling of exactly one of these, and the Haar integrals are
/// invariant under relabeling `i` and `j` separately.
pub fn canonical_tuples(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, n: usize, cur: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 1..=(used + 1).min(n) {
            cur.push(v);
            go(k, n, cur, used.max(v), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, n, &mut Vec::new(), 0, &mut out);
    out
}

/// Result of comparing the Weingarten sum with the group integral.
#[derive(Debug, Clone)]
pub struct WeingartenCheck {
    pub category: Category,
    pub k: usize,
    pub n: usize,
    pub cases: usize,
    pub failures: Vec<FailureReport>,
}

/// Compares `weingarten_sum` with brute-force integration over every pair of
/// canonical index tuples.
pub fn verify_weingarten_formula(
    category: Category,
    k: usize,
    n: usize,
) -> Result<WeingartenCheck> {
    check_classical("verify_weingarten_formula", category)?;
    let parts = enumerate(category, k);
    let w = weingarten_matrix(category, k, &BigInt::from(n))?;
    let tuples = canonical_tuples(k, n);
    let mut cases = 0;
    let mut failures = Vec::new();
    for i in &tuples {
        for j in &tuples {
            let q = MomentQuery::new(n, i.clone(), j.clone())?;
            let expected = match category {
                Category::S => haar_integrate_perm(&q)?,
                _ => haar_integrate_hyperoct(&q)?,
            };
            let actual = weingarten_sum_with(&parts, &w, &q);
            cases += 1;
            if actual != expected {
                failures.push(
                    FailureReport::new("weingarten formula", Some(category), k)
                        .at_n(n)
                        .entry(alloc::format!("{i:?}"), alloc::format!("{j:?}"))
                        .values(&expected, &actual),
                );
            }
        }
    }
    Ok(WeingartenCheck {
        category,
        k,
        n,
        cases,
        failures,
    })
}

/// `W(π,σ) = Σ μ(τ,π) μ(τ,σ) / (n)_{|τ|}` over category partitions `τ`
/// refining both `π` and `σ`.
pub fn mobius_weingarten(category: Category, k: usize, n: usize) -> Result<RatMatrix> {
    check_classical("mobius_weingarten", category)?;
    let parts = enumerate(category, k);
    let terms = lower_bound_terms(&parts)?;
    let nb = BigInt::from(n);
    let inverse_falling: Vec<Option<BigRational>> = (0..=k)
        .map(|m| {
            let f = falling_factorial(&nb, m);
            (!f.is_zero()).then(|| BigRational::new(BigInt::one(), f))
        })
        .collect();
    let size = parts.len();
    let mut out = RatMatrix::from_fn(size, size, |_, _| BigRational::zero());
    for a in 0..size {
        for b in 0..size {
            let mut acc = BigRational::zero();
            for &(t, mu) in &terms[a * size + b] {
                let Some(w) = &inverse_falling[parts[t].num_blocks()] else {
                    return Err(Error::Singular { stage: t });
                };
                acc += w * BigInt::from(mu);
            }
            out[(a, b)] = acc;
        }
    }
    Ok(out)
}

/// For each `(π,σ)`: the common lower bounds `τ` with `μ(τ,π) μ(τ,σ)`.
fn lower_bound_terms(parts: &[SetPartition]) -> Result<Vec<Vec<(usize, i64)>>> {
    let size = parts.len();
    let mut table = MobiusTable::new();
    // below[a]: (index of τ, μ(τ, parts[a])) for τ ≤ parts[a].
    let mut below: Vec<Vec<(usize, i64)>> = vec![Vec::new(); size];
    for (a, p) in parts.iter().enumerate() {
        for (t, tau) in parts.iter().enumerate() {
            if tau.refines(p)? {
                below[a].push((t, table.mobius(tau, p)?));
            }
        }
    }
    let mut out = Vec::with_capacity(size * size);
    for a in 0..size {
        for b in 0..size {
            let mut terms = Vec::new();
            for &(t, mu_a) in &below[a] {
                if let Some(&(_, mu_b)) = below[b].iter().find(|x| x.0 == t) {
                    terms.push((t, mu_a * mu_b));
                }
            }
            out.push(terms);
        }
    }
    Ok(out)
}

/// Claim name of the final-point deviation check in failure reports.
pub const FINAL_DEVIATION: &str = "leading term: final deviation";

/// Grid behaviour of one Weingarten entry.
#[derive(Debug, Clone)]
pub struct AsymptoticReport {
    pub category: Category,
    pub k: usize,
    pub pi: SetPartition,
    pub sigma: SetPartition,
    pub grid: Vec<u64>,
    /// Fewest blocks among common lower bounds; `None` when there are none
    /// and the entry vanishes.
    pub order: Option<usize>,
    /// Predicted limit of `n^order W(π,σ)`.
    pub limit: BigRational,
    /// `n^order W(π,σ)` on the grid.
    pub scaled: Vec<BigRational>,
    /// `|W(π,σ)| n^{|π|+|σ|-|π∨σ|}` on the grid.
    pub bounded: Vec<BigRational>,
    /// `n |n^order W - limit|` at the largest grid point: the fitted
    /// constant of the `1/n` correction.
    pub fitted_constant: BigRational,
    pub failures: Vec<FailureReport>,
}

impl AsymptoticReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, on an increasing grid, that `n^m W(π,σ)` approaches the sum of
/// `μ(τ,π) μ(τ,σ)` over lower bounds `τ` with the fewest blocks `m`, with
/// non-increasing deviation that ends below `10/n`; and that
/// `|W| n^{|π|+|σ|-|π∨σ|}` does not grow at the last grid point beyond the
/// same `10/n` slack. For `π ≤ σ` the limit is `μ(π,σ)` at order `|π|`.
pub fn asymptotic_order_check(
    category: Category,
    k: usize,
    pi: &SetPartition,
    sigma: &SetPartition,
    grid: &[u64],
) -> Result<AsymptoticReport> {
    check_classical("asymptotic_order_check", category)?;
    let parts = enumerate(category, k);
    let a = parts
        .binary_search(pi)
        .map_err(|_| Error::InvalidQuery(alloc::format!("{pi} is not in {category}")))?;
    let b = parts
        .binary_search(sigma)
        .map_err(|_| Error::InvalidQuery(alloc::format!("{sigma} is not in {category}")))?;
    let matrices = grid_matrices(category, k, grid)?;
    let terms = lower_bound_terms(&parts)?;
    Ok(asymptotic_entry(
        category, &parts, &terms, &matrices, grid, a, b,
    ))
}

/// Runs [`asymptotic_order_check`] on every entry, sharing the matrices.
pub fn asymptotic_order_table(
    category: Category,
    k: usize,
    grid: &[u64],
) -> Result<Vec<AsymptoticReport>> {
    check_classical("asymptotic_order_table", category)?;
    let parts = enumerate(category, k);
    let matrices = grid_matrices(category, k, grid)?;
    let terms = lower_bound_terms(&parts)?;
    let size = parts.len();
    Ok((0..size * size)
        .map(|x| {
            asymptotic_entry(
                category,
                &parts,
                &terms,
                &matrices,
                grid,
                x / size,
                x % size,
            )
        })
        .collect())
}

fn grid_matrices(category: Category, k: usize, grid: &[u64]) -> Result<Vec<RatMatrix>> {
    if grid.len() < 3 || grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidQuery(
            "grid needs at least 3 increasing values".to_string(),
        ));
    }
    grid.iter()
        .map(|&n| mobius_weingarten(category, k, n as usize))
        .collect()
}

fn asymptotic_entry(
    category: Category,
    parts: &[SetPartition],
    terms: &[Vec<(usize, i64)>],
    matrices: &[RatMatrix],
    grid: &[u64],
    a: usize,
    b: usize,
) -> AsymptoticReport {
    let (pi, sigma) = (&parts[a], &parts[b]);
    let k = pi.k();
    let entry_terms = &terms[a * parts.len() + b];
    let order = entry_terms
        .iter()
        .map(|&(t, _)| parts[t].num_blocks())
        .min();
    let limit = match order {
        Some(m) => {
            let s: i64 = entry_terms
                .iter()
                .filter(|&&(t, _)| parts[t].num_blocks() == m)
                .map(|x| x.1)
                .sum();
            BigRational::from_integer(s.into())
        }
        None => BigRational::zero(),
    };
    let m = order.unwrap_or(0);
    let join_blocks = pi.join_blocks(sigma);
    let bound_power = pi.num_blocks() + sigma.num_blocks() - join_blocks;
    let power = |n: u64, e: usize| BigRational::from_integer(BigInt::from(n).pow(e as u32));
    let values: Vec<&BigRational> = matrices.iter().map(|w| &w[(a, b)]).collect();
    let scaled: Vec<BigRational> = grid
        .iter()
        .zip(&values)
        .map(|(&n, &w)| w * power(n, m))
        .collect();
    let bounded: Vec<BigRational> = grid
        .iter()
        .zip(&values)
        .map(|(&n, &w)| w.abs() * power(n, bound_power))
        .collect();
    let deviations: Vec<BigRational> = scaled.iter().map(|s| (s - &limit).abs()).collect();

    let mut failures = Vec::new();
    let n_last = *grid.last().expect("grid is non-empty");
    let slack = BigRational::new(BigInt::from(10), BigInt::from(n_last));
    let report = |claim: &str| {
        FailureReport::new(claim, Some(category), k)
            .at_n(n_last)
            .entry(pi, sigma)
    };
    if deviations.windows(2).any(|w| w[1] > w[0]) {
        failures.push(
            report("leading term: deviation not monotone")
                .values("non-increasing", dev_list(&deviations)),
        );
    }
    let last_dev = deviations.last().expect("grid is non-empty").clone();
    if last_dev >= slack {
        failures.push(report(FINAL_DEVIATION).values(alloc::format!("< {slack}"), &last_dev));
    }
    let (last, earlier) = bounded.split_last().expect("grid is non-empty");
    let cap = earlier.iter().max().cloned().unwrap_or_default() * (BigRational::one() + &slack);
    if *last > cap {
        failures.push(
            report("order bound: growth at last grid point")
                .values(alloc::format!("<= {cap}"), last),
        );
    }

    AsymptoticReport {
        category,
        k,
        pi: pi.clone(),
        sigma: sigma.clone(),
        grid: grid.to_vec(),
        order,
        limit,
        scaled,
        bounded,
        fitted_constant: last_dev * BigInt::from(n_last),
        failures,
    }
}

fn dev_list(xs: &[BigRational]) -> alloc::string::String {
    let parts: Vec<alloc::string::String> = xs.iter().map(|x| x.to_string()).collect();
    parts.join(", ")
}

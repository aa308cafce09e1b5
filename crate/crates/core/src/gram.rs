//! Gram and Weingarten matrices over a category, brute-force determinant
//! polynomials, and the Möbius column reduction.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{det_exact, invert_rational, IntMatrix, Matrix, RatMatrix};
use crate::modp::{self, PrimeField};
use crate::partition::{enumerate, Category, MobiusTable, SetPartition};
use crate::poly::{interpolate_from_values, IntPolynomial, Variable};

/// A category's partitions of `k` points with the cached join exponents
/// `|π ∨ σ|`.
#[derive(Debug, Clone)]
pub struct GramInstance {
    category: Category,
    k: usize,
    partitions: Vec<SetPartition>,
    exponents: Vec<u8>,
    /// Orbits under rotating the points, when the category is closed under it.
    orbits: Option<Vec<Vec<usize>>>,
}

fn rotate(p: &SetPartition) -> SetPartition {
    let k = p.k();
    let mut labels = vec![0u8; k];
    for (i, &b) in p.rgs().iter().enumerate() {
        labels[(i + 1) % k] = b;
    }
    SetPartition::from_labels(&labels)
}

impl GramInstance {
    pub fn new(category: Category, k: usize) -> Self {
        let partitions = enumerate(category, k);
        let size = partitions.len();
        let mut exponents = vec![0u8; size * size];
        for i in 0..size {
            for j in i..size {
                let e = partitions[i].join_blocks(&partitions[j]) as u8;
                exponents[i * size + j] = e;
                exponents[j * size + i] = e;
            }
        }
        let orbits = Self::rotation_orbits(&partitions, k);
        GramInstance {
            category,
            k,
            partitions,
            exponents,
            orbits,
        }
    }

    fn rotation_orbits(partitions: &[SetPartition], k: usize) -> Option<Vec<Vec<usize>>> {
        if k < 2 {
            return None;
        }
        let mut seen = vec![false; partitions.len()];
        let mut orbits = Vec::new();
        for start in 0..partitions.len() {
            if seen[start] {
                continue;
            }
            let mut members = vec![start];
            seen[start] = true;
            let mut cur = rotate(&partitions[start]);
            loop {
                let idx = partitions.binary_search(&cur).ok()?;
                if idx == start {
                    break;
                }
                seen[idx] = true;
                members.push(idx);
                cur = rotate(&cur);
            }
            orbits.push(members);
        }
        Some(orbits)
    }

    pub fn category(&self) -> Category {
        self.category
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn partitions(&self) -> &[SetPartition] {
        &self.partitions
    }

    pub fn size(&self) -> usize {
        self.partitions.len()
    }

    /// `|π_i ∨ π_j|`.
    pub fn exponent(&self, i: usize, j: usize) -> usize {
        self.exponents[i * self.size() + j] as usize
    }

    /// Sum of block counts, the degree of the determinant.
    pub fn block_sum(&self) -> usize {
        self.partitions.iter().map(SetPartition::num_blocks).sum()
    }

    pub fn matrix_at(&self, n: &BigInt) -> IntMatrix {
        let powers: Vec<BigInt> = (0..=self.k).map(|e| n.pow(e as u32)).collect();
        Matrix::from_fn(self.size(), self.size(), |i, j| {
            powers[self.exponent(i, j)].clone()
        })
    }

    /// Determinant polynomial through exact Bareiss determinants at
    /// `n = 1..=s_k+1`. Only practical for small instances.
    pub fn det_poly_bareiss(&self) -> Result<IntPolynomial> {
        let d = self.block_sum();
        let points = (1..=d as u64 + 1)
            .map(|n| {
                let n = BigInt::from(n);
                let v = det_exact(&self.matrix_at(&n))?;
                Ok((n, v))
            })
            .collect::<Result<Vec<_>>>()?;
        interpolate_from_values(&points, d)
    }

    /// Bits needed for the largest coefficient magnitude of the determinant
    /// polynomial. On the circle `|n| = ρ` Hadamard's inequality bounds
    /// `|D|` by the product of row norms, and Cauchy's estimate turns that
    /// into `|c_i| ≤ sqrt(Π_rows Σ_σ ρ^{2e}) / ρ^i`; the minimum is taken
    /// over a fixed set of integer radii, in exact arithmetic.
    pub fn coefficient_bits(&self) -> u64 {
        let size = self.size();
        let degree = self.block_sum();
        let mut histos: Vec<Vec<u64>> = Vec::new();
        for i in 0..size {
            let mut cnt = vec![0u64; self.k + 1];
            for j in 0..size {
                cnt[self.exponent(i, j)] += 1;
            }
            histos.push(cnt);
        }
        histos.sort_unstable();
        let mut best = vec![u64::MAX; degree + 1];
        let radii = (1u64..=12).chain([
            16,
            24,
            32,
            48,
            64,
            128,
            256,
            1 << 10,
            1 << 12,
            1 << 16,
            1 << 24,
            1 << 32,
        ]);
        for rho in radii {
            let r2 = BigUint::from(rho).pow(2);
            let pw: Vec<BigUint> = (0..=self.k as u32).map(|e| r2.pow(e)).collect();
            let mut prod = BigUint::one();
            for cnt in &histos {
                let row: BigUint = cnt.iter().zip(&pw).map(|(&c, p)| p * c).sum();
                prod *= row;
            }
            let half = prod.bits().div_ceil(2);
            let mut rp = BigUint::one();
            for b in best.iter_mut() {
                *b = (*b).min(half.saturating_sub(rp.bits() - 1));
                rp *= rho;
            }
        }
        best.into_iter().max().unwrap_or(0) + 1
    }

    /// Per-prime data: for each character block, the rows' scaling and the
    /// coefficient of every power `n^e` in every entry.
    fn blocks_mod(&self, f: &PrimeField) -> Vec<ModBlock> {
        let size = self.size();
        let stride = self.k + 1;
        let Some(orbits) = &self.orbits else {
            let mut coeff = vec![0u64; size * size * stride];
            for i in 0..size {
                for j in 0..size {
                    coeff[(i * size + j) * stride + self.exponent(i, j)] = f.one();
                }
            }
            return vec![ModBlock {
                dim: size,
                coeff,
                scale: f.one(),
                mult: 1,
            }];
        };
        let k = self.k;
        let omega = f.root_of_unity(k as u64);
        let omega_inv = f.inv(omega);
        let mut powers = Vec::with_capacity(k);
        let mut acc = f.one();
        for _ in 0..k {
            powers.push(acc);
            acc = f.mul(acc, omega_inv);
        }
        let mut blocks = Vec::with_capacity(k);
        // G is symmetric, so the blocks for j and k - j are transposes of
        // each other up to the same row scaling: only j <= k/2 is built.
        for j in 0..=k / 2 {
            let mult = if j == 0 || 2 * j == k { 1 } else { 2 };
            let valid: Vec<&Vec<usize>> =
                orbits.iter().filter(|o| (j * o.len()) % k == 0).collect();
            let dim = valid.len();
            if dim == 0 {
                continue;
            }
            let mut coeff = vec![0u64; dim * dim * stride];
            let mut scale = f.one();
            for (a, oa) in valid.iter().enumerate() {
                scale = f.mul(scale, f.inv(f.to_mont((k / oa.len()) as u64)));
                let rep = oa[0];
                for (b, ob) in valid.iter().enumerate() {
                    let cell = &mut coeff[(a * dim + b) * stride..(a * dim + b + 1) * stride];
                    for t in 0..k {
                        let e = self.exponent(rep, ob[t % ob.len()]);
                        cell[e] = f.add(cell[e], powers[(j * t) % k]);
                    }
                }
            }
            blocks.push(ModBlock {
                dim,
                coeff,
                scale,
                mult,
            });
        }
        blocks
    }

    /// Determinant values mod `p` at the nodes `1..=count`, Montgomery form.
    fn values_mod(&self, f: &PrimeField, count: usize) -> Vec<u64> {
        let blocks = self.blocks_mod(f);
        let stride = self.k + 1;
        let mut scratch = Vec::new();
        (1..=count as u64)
            .map(|x| {
                let xm = f.to_mont(x);
                let mut pw = Vec::with_capacity(stride);
                let mut acc = f.one();
                for _ in 0..stride {
                    pw.push(acc);
                    acc = f.mul(acc, xm);
                }
                let mut det = f.one();
                for block in &blocks {
                    scratch.clear();
                    scratch.extend(block.coeff.chunks_exact(stride).map(|cell| {
                        cell.iter().zip(&pw).fold(
                            0,
                            |s, (&c, &p)| if c == 0 { s } else { f.add(s, f.mul(c, p)) },
                        )
                    }));
                    let d = f.mul(modp::det_in_place(f, &mut scratch, block.dim), block.scale);
                    det = f.mul(det, f.pow(d, block.mult));
                    if det == 0 {
                        break;
                    }
                }
                det
            })
            .collect()
    }

    /// The determinant `D_k(n)` as an exact integer polynomial, by evaluation
    /// at `n = 1..=s_k+1` modulo word-sized primes, interpolation, and
    /// Chinese remaindering under a proven coefficient bound.
    pub fn det_poly(&self) -> IntPolynomial {
        let degree = self.block_sum();
        let nodes = degree + 1;
        let bits = self.coefficient_bits() + 1;
        let count = (bits as usize).div_ceil(61).max(1);
        let primes = modp::primes_one_mod(self.k.max(1) as u64, count);
        let mut residues = vec![Vec::with_capacity(count); nodes];
        for &p in &primes {
            let f = PrimeField::new(p);
            let values = self.values_mod(&f, nodes);
            let coeffs = modp::interpolate_consecutive(&f, &values);
            for (slot, c) in residues.iter_mut().zip(coeffs) {
                slot.push(f.from_mont(c));
            }
        }
        let coeffs = residues
            .iter()
            .map(|r| modp::crt_symmetric(&primes, r))
            .collect();
        IntPolynomial::new(Variable::N, coeffs)
    }
}

#[derive(Debug, Clone)]
struct ModBlock {
    dim: usize,
    coeff: Vec<u64>,
    scale: u64,
    mult: u64,
}

/// `G_kn(π, σ) = n^{|π ∨ σ|}` in the canonical order.
pub fn gram_matrix(category: Category, k: usize, n: &BigInt) -> IntMatrix {
    GramInstance::new(category, k).matrix_at(n)
}

pub fn gram_det_poly(category: Category, k: usize) -> IntPolynomial {
    GramInstance::new(category, k).det_poly()
}

/// Exact inverse of the Gram matrix.
pub fn weingarten_matrix(category: Category, k: usize, n: &BigInt) -> Result<RatMatrix> {
    invert_rational(&gram_matrix(category, k, n).to_rational())
}

/// `n (n-1) ... (n-m+1)`.
pub fn falling_factorial(n: &BigInt, m: usize) -> BigInt {
    (0..m).fold(BigInt::one(), |acc, i| acc * (n - BigInt::from(i)))
}

/// Gram matrix after Möbius column operations.
#[derive(Debug, Clone)]
pub struct Triangularized {
    /// Partitions by decreasing block count, ties in canonical order.
    pub order: Vec<SetPartition>,
    pub matrix: IntMatrix,
}

/// Column `σ` replaced by `Σ_{τ ≥ σ} μ(σ, τ) · column τ`, which leaves
/// `(n)_{|σ|}` on the diagonal and zero whenever `π ≰ σ`. Only defined where
/// the category contains every coarsening of its partitions.
pub fn mobius_triangularize(category: Category, k: usize, n: &BigInt) -> Result<Triangularized> {
    if !matches!(category, Category::S | Category::H | Category::HStar) {
        return Err(Error::UnsupportedCategory {
            op: "Möbius triangularization",
            category,
        });
    }
    let mut order = enumerate(category, k);
    order.sort_by(|a, b| b.num_blocks().cmp(&a.num_blocks()).then_with(|| a.cmp(b)));
    let size = order.len();
    let powers: Vec<BigInt> = (0..=k).map(|e| n.pow(e as u32)).collect();
    let mut table = MobiusTable::new();
    let mut transform = vec![vec![0i64; size]; size];
    for (t, tau) in order.iter().enumerate() {
        for (s, sigma) in order.iter().enumerate() {
            if sigma.refines(tau)? {
                transform[t][s] = table.mobius(sigma, tau)?;
            }
        }
    }
    let matrix = Matrix::from_fn(size, size, |i, s| {
        let mut acc = BigInt::zero();
        for (t, tau) in order.iter().enumerate() {
            let m = transform[t][s];
            if m != 0 {
                acc += &powers[order[i].join_blocks(tau)] * m;
            }
        }
        acc
    });
    Ok(Triangularized { order, matrix })
}

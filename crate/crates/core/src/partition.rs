//! Set partitions in restricted-growth form, the ten partition categories,
//! lattice operations and counting invariants.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// A partition of `k` points, stored as its restricted-growth string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    rgs: Vec<u8>,
}

impl SetPartition {
    /// Validates a restricted-growth string.
    pub fn from_rgs(rgs: Vec<u8>) -> Result<Self> {
        let mut next = 0u8;
        for (i, &b) in rgs.iter().enumerate() {
            if b > next {
                return Err(Error::Parse(alloc::format!(
                    "restricted-growth string violated at position {}",
                    i + 1
                )));
            }
            if b == next {
                next = next
                    .checked_add(1)
                    .ok_or_else(|| Error::Parse("too many blocks".into()))?;
            }
        }
        Ok(SetPartition { rgs })
    }

    /// Canonicalizes an arbitrary labeling: points with equal labels share a block.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let mut seen: Vec<&T> = Vec::new();
        let rgs = labels
            .iter()
            .map(|l| match seen.iter().position(|s| *s == l) {
                Some(i) => i as u8,
                None => {
                    seen.push(l);
                    (seen.len() - 1) as u8
                }
            })
            .collect();
        SetPartition { rgs }
    }

    /// Builds a partition from 0-based blocks covering `0..k` exactly once.
    pub fn from_blocks(k: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut label = vec![usize::MAX; k];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            for &x in block {
                if x >= k || label[x] != usize::MAX {
                    return Err(Error::Parse(alloc::format!(
                        "point {} out of range or repeated",
                        x + 1
                    )));
                }
                label[x] = b;
            }
        }
        if let Some(missing) = label.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Parse(alloc::format!(
                "point {} is not covered",
                missing + 1
            )));
        }
        Ok(Self::from_labels(&label))
    }

    pub fn singletons(k: usize) -> Self {
        SetPartition {
            rgs: (0..k as u8).collect(),
        }
    }

    pub fn one_block(k: usize) -> Self {
        SetPartition { rgs: vec![0; k] }
    }

    pub fn k(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    /// Block index of point `i` (0-based).
    pub fn block_of(&self, i: usize) -> usize {
        self.rgs[i] as usize
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks as sorted 0-based point lists, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.rgs.iter().enumerate() {
            out[b as usize].push(i);
        }
        out
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.num_blocks()];
        for &b in &self.rgs {
            out[b as usize] += 1;
        }
        out
    }

    pub fn is_pairing(&self) -> bool {
        self.block_sizes().iter().all(|&s| s == 2)
    }

    /// Linear noncrossing test.
    pub fn is_noncrossing(&self) -> bool {
        let k = self.k();
        let mut last = vec![usize::MAX; self.num_blocks()];
        let mut first = vec![usize::MAX; self.num_blocks()];
        for (i, &b) in self.rgs.iter().enumerate() {
            let b = b as usize;
            if first[b] == usize::MAX {
                first[b] = i;
            }
            last[b] = i;
        }
        // Consecutive elements i < j of a block enclose only blocks living
        // strictly inside (i, j).
        let mut prev = vec![usize::MAX; self.num_blocks()];
        for j in 0..k {
            let b = self.rgs[j] as usize;
            let i = prev[b];
            prev[b] = j;
            if i == usize::MAX {
                continue;
            }
            for m in i + 1..j {
                let c = self.rgs[m] as usize;
                if first[c] < i || last[c] > j {
                    return false;
                }
            }
        }
        true
    }

    /// Number of blocks of the join, without building it.
    pub fn join_blocks(&self, other: &SetPartition) -> usize {
        let nb = self.num_blocks();
        let mut parent: Vec<usize> = (0..nb).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut comps = nb;
        let mut first_in = vec![usize::MAX; other.num_blocks()];
        for (i, &b) in other.rgs.iter().enumerate() {
            let b = b as usize;
            let mine = self.rgs[i] as usize;
            if first_in[b] == usize::MAX {
                first_in[b] = mine;
            } else {
                let x = find(&mut parent, first_in[b]);
                let y = find(&mut parent, mine);
                if x != y {
                    parent[x] = y;
                    comps -= 1;
                }
            }
        }
        comps
    }

    fn check_same_k(&self, other: &SetPartition) -> Result<()> {
        if self.k() != other.k() {
            return Err(Error::PointCountMismatch {
                left: self.k(),
                right: other.k(),
            });
        }
        Ok(())
    }

    /// Finest common coarsening.
    pub fn join(&self, other: &SetPartition) -> Result<SetPartition> {
        self.check_same_k(other)?;
        let k = self.k();
        let mut label: Vec<usize> = (0..k).collect();
        fn find(l: &mut [usize], mut x: usize) -> usize {
            while l[x] != x {
                l[x] = l[l[x]];
                x = l[x];
            }
            x
        }
        for p in [self, other] {
            let mut rep = vec![usize::MAX; p.num_blocks()];
            for i in 0..k {
                let b = p.rgs[i] as usize;
                if rep[b] == usize::MAX {
                    rep[b] = i;
                } else {
                    let x = find(&mut label, rep[b]);
                    let y = find(&mut label, i);
                    label[x] = y;
                }
            }
        }
        let roots: Vec<usize> = (0..k).map(|i| find(&mut label, i)).collect();
        Ok(Self::from_labels(&roots))
    }

    /// Coarsest common refinement.
    pub fn meet(&self, other: &SetPartition) -> Result<SetPartition> {
        self.check_same_k(other)?;
        let pairs: Vec<(u8, u8)> = self
            .rgs
            .iter()
            .copied()
            .zip(other.rgs.iter().copied())
            .collect();
        Ok(Self::from_labels(&pairs))
    }

    /// True iff every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> Result<bool> {
        self.check_same_k(other)?;
        let mut image = vec![u8::MAX; self.num_blocks()];
        for (&a, &b) in self.rgs.iter().zip(&other.rgs) {
            let slot = &mut image[a as usize];
            if *slot == u8::MAX {
                *slot = b;
            } else if *slot != b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Restricts to a subset of points given in increasing order.
    pub fn restrict(&self, points: &[usize]) -> SetPartition {
        let labels: Vec<u8> = points.iter().map(|&i| self.rgs[i]).collect();
        Self::from_labels(&labels)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rgs.is_empty() {
            return f.write_str("{}");
        }
        for block in self.blocks() {
            f.write_str("{")?;
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Parses the text form `{1,2}{3,4}`; `{}` or the empty string is the
    /// partition of zero points.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "{}" {
            return Ok(SetPartition { rgs: Vec::new() });
        }
        let mut blocks = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('{')
                .and_then(|r| r.find('}').map(|end| (&r[..end], &r[end + 1..])))
                .ok_or_else(|| Error::Parse(alloc::format!("malformed partition text `{s}`")))?;
            let block = inner
                .0
                .split(',')
                .map(|x| match x.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(Error::Parse(alloc::format!("bad point `{x}`"))),
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
            rest = inner.1;
        }
        let k = blocks.iter().map(Vec::len).sum();
        Self::from_blocks(k, &blocks)
    }
}

/// The ten categories of partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    S,
    O,
    B,
    H,
    SPlus,
    OPlus,
    BPlus,
    HPlus,
    OStar,
    HStar,
}

impl Category {
    pub const ALL: [Category; 10] = [
        Category::S,
        Category::O,
        Category::B,
        Category::H,
        Category::SPlus,
        Category::OPlus,
        Category::BPlus,
        Category::HPlus,
        Category::OStar,
        Category::HStar,
    ];

    /// Canonical ASCII name, e.g. `o_plus`.
    pub fn name(self) -> &'static str {
        match self {
            Category::S => "s",
            Category::O => "o",
            Category::B => "b",
            Category::H => "h",
            Category::SPlus => "s_plus",
            Category::OPlus => "o_plus",
            Category::BPlus => "b_plus",
            Category::HPlus => "h_plus",
            Category::OStar => "o_star",
            Category::HStar => "h_star",
        }
    }

    /// Short name, e.g. `o+`.
    pub fn symbol(self) -> &'static str {
        match self {
            Category::SPlus => "s+",
            Category::OPlus => "o+",
            Category::BPlus => "b+",
            Category::HPlus => "h+",
            Category::OStar => "o*",
            Category::HStar => "h*",
            other => other.name(),
        }
    }

    pub fn is_free(self) -> bool {
        matches!(
            self,
            Category::SPlus | Category::OPlus | Category::BPlus | Category::HPlus
        )
    }

    /// Largest allowed block size.
    fn max_block(self) -> usize {
        match self {
            Category::O | Category::OPlus | Category::OStar | Category::B | Category::BPlus => 2,
            _ => usize::MAX,
        }
    }

    fn block_ok(self, block: &[usize]) -> bool {
        let len = block.len();
        match self {
            Category::S | Category::SPlus => true,
            Category::O | Category::OPlus => len == 2,
            Category::B | Category::BPlus => len <= 2,
            Category::H | Category::HPlus => len % 2 == 0,
            Category::OStar | Category::HStar => {
                if self == Category::OStar && len != 2 {
                    return false;
                }
                let odd = block.iter().filter(|&&x| x % 2 == 0).count();
                2 * odd == len
            }
        }
    }

    pub fn is_member(self, p: &SetPartition) -> bool {
        p.blocks().iter().all(|b| self.block_ok(b)) && (!self.is_free() || p.is_noncrossing())
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Category {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        Category::ALL
            .into_iter()
            .find(|c| c.name() == lower || c.symbol() == lower)
            .ok_or_else(|| Error::Parse(alloc::format!("unknown category `{s}`")))
    }
}

/// Noncrossing partitions of `n` points in linear order whose blocks all
/// satisfy `block_ok`, with blocks pruned as soon as they exceed `max_block`
/// or are closed off by a later block.
pub(crate) fn noncrossing_partitions(
    n: usize,
    max_block: usize,
    block_ok: &dyn Fn(&[usize]) -> bool,
) -> Vec<SetPartition> {
    struct State<'a> {
        n: usize,
        max_block: usize,
        block_ok: &'a dyn Fn(&[usize]) -> bool,
        blocks: Vec<Vec<usize>>,
        open: Vec<usize>,
        rgs: Vec<u8>,
        out: Vec<SetPartition>,
    }
    fn go(st: &mut State<'_>, i: usize) {
        if i == st.n {
            if st.open.iter().all(|&b| (st.block_ok)(&st.blocks[b])) {
                st.out.push(SetPartition {
                    rgs: st.rgs.clone(),
                });
            }
            return;
        }
        // Join an open block: every block opened after it is closed for good.
        for depth in 0..st.open.len() {
            let b = st.open[depth];
            if st.blocks[b].len() >= st.max_block {
                continue;
            }
            if !st.open[depth + 1..]
                .iter()
                .all(|&c| (st.block_ok)(&st.blocks[c]))
            {
                continue;
            }
            let saved: Vec<usize> = st.open.split_off(depth + 1);
            st.blocks[b].push(i);
            st.rgs.push(b as u8);
            go(st, i + 1);
            st.rgs.pop();
            st.blocks[b].pop();
            st.open.extend(saved);
        }
        let b = st.blocks.len();
        st.blocks.push(vec![i]);
        st.open.push(b);
        st.rgs.push(b as u8);
        go(st, i + 1);
        st.rgs.pop();
        st.open.pop();
        st.blocks.pop();
    }
    let mut st = State {
        n,
        max_block,
        block_ok,
        blocks: Vec::new(),
        open: Vec::new(),
        rgs: Vec::new(),
        out: Vec::new(),
    };
    go(&mut st, 0);
    st.out.sort();
    st.out
}

/// All partitions of `n` points with blocks of size at most `max_block`
/// satisfying `block_ok`.
fn all_partitions(
    n: usize,
    max_block: usize,
    block_ok: &dyn Fn(&[usize]) -> bool,
) -> Vec<SetPartition> {
    fn go(
        n: usize,
        max_block: usize,
        block_ok: &dyn Fn(&[usize]) -> bool,
        blocks: &mut Vec<Vec<usize>>,
        rgs: &mut Vec<u8>,
        out: &mut Vec<SetPartition>,
    ) {
        let i = rgs.len();
        if i == n {
            if blocks.iter().all(|b| block_ok(b)) {
                out.push(SetPartition { rgs: rgs.clone() });
            }
            return;
        }
        for b in 0..=blocks.len() {
            if b == blocks.len() {
                blocks.push(Vec::new());
            } else if blocks[b].len() >= max_block {
                continue;
            }
            blocks[b].push(i);
            rgs.push(b as u8);
            go(n, max_block, block_ok, blocks, rgs, out);
            rgs.pop();
            blocks[b].pop();
            if blocks[b].is_empty() {
                blocks.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(
        n,
        max_block,
        block_ok,
        &mut Vec::new(),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// The partitions of `k` points in the category, in lexicographic order of
/// restricted-growth strings.
pub fn enumerate(category: Category, k: usize) -> Vec<SetPartition> {
    let ok = |b: &[usize]| category.block_ok(b);
    if category.is_free() {
        noncrossing_partitions(k, category.max_block(), &ok)
    } else {
        all_partitions(k, category.max_block(), &ok)
    }
}

pub fn is_member(category: Category, p: &SetPartition) -> bool {
    category.is_member(p)
}

pub fn join(p: &SetPartition, q: &SetPartition) -> Result<SetPartition> {
    p.join(q)
}

pub fn meet(p: &SetPartition, q: &SetPartition) -> Result<SetPartition> {
    p.meet(q)
}

pub fn refines(p: &SetPartition, q: &SetPartition) -> Result<bool> {
    p.refines(q)
}

/// Partitions `τ` with `p ≤ τ ≤ q` in the full partition lattice.
pub fn interval(p: &SetPartition, q: &SetPartition) -> Result<Vec<SetPartition>> {
    if !p.refines(q)? {
        return Err(Error::NotRefinement);
    }
    // Merge blocks of p, but only those lying in a common block of q.
    let pblocks = p.blocks();
    let parent: Vec<usize> = pblocks.iter().map(|b| q.block_of(b[0])).collect();
    let merges = all_partitions(pblocks.len(), usize::MAX, &|_| true);
    Ok(merges
        .into_iter()
        .filter(|m| {
            let mut first = vec![usize::MAX; m.num_blocks()];
            (0..pblocks.len()).all(|i| {
                let slot = &mut first[m.block_of(i)];
                if *slot == usize::MAX {
                    *slot = parent[i];
                    true
                } else {
                    *slot == parent[i]
                }
            })
        })
        .map(|m| {
            let mut labels = vec![0usize; p.k()];
            for (i, block) in pblocks.iter().enumerate() {
                for &x in block {
                    labels[x] = m.block_of(i);
                }
            }
            SetPartition::from_labels(&labels)
        })
        .collect())
}

/// Memoized Möbius function of the partition lattice.
#[derive(Debug, Default, Clone)]
pub struct MobiusTable {
    memo: BTreeMap<(SetPartition, SetPartition), i64>,
}

impl MobiusTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `μ(p, q)` via `μ(p,p) = 1`, `μ(p,q) = -Σ_{p≤τ<q} μ(p,τ)`.
    pub fn mobius(&mut self, p: &SetPartition, q: &SetPartition) -> Result<i64> {
        if !p.refines(q)? {
            return Err(Error::NotRefinement);
        }
        Ok(self.mobius_unchecked(p, q))
    }

    fn mobius_unchecked(&mut self, p: &SetPartition, q: &SetPartition) -> i64 {
        if p == q {
            return 1;
        }
        let key = (p.clone(), q.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let below = interval(p, q).expect("p refines q");
        let mut sum = 0i64;
        for t in below.iter().filter(|t| *t != q) {
            sum += self.mobius_unchecked(p, t);
        }
        self.memo.insert(key, -sum);
        -sum
    }
}

pub fn mobius(p: &SetPartition, q: &SetPartition) -> Result<i64> {
    MobiusTable::new().mobius(p, q)
}

/// `S_kr` for `r = 0..=k`.
pub fn stirling_row(category: Category, k: usize) -> Vec<u64> {
    let mut row = vec![0u64; k + 1];
    for p in enumerate(category, k) {
        row[p.num_blocks()] += 1;
    }
    row
}

pub fn stirling(category: Category, k: usize, r: usize) -> u64 {
    stirling_row(category, k).get(r).copied().unwrap_or(0)
}

/// Partition count, block-count sum and derived quantities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBundle {
    pub b: u64,
    pub s: u64,
    /// `s / b`; zero when there are no partitions.
    pub m: Ratio<i64>,
    pub a: i64,
    /// Indexed by block count `r = 0..=k`.
    pub stirling: Vec<u64>,
}

pub fn invariant_bundle(category: Category, k: usize) -> InvariantBundle {
    let stirling = stirling_row(category, k);
    let b: u64 = stirling.iter().sum();
    let s: u64 = stirling
        .iter()
        .enumerate()
        .map(|(r, &c)| r as u64 * c)
        .sum();
    let m = if b == 0 {
        Ratio::from_integer(0)
    } else {
        Ratio::new(s as i64, b as i64)
    };
    InvariantBundle {
        b,
        s,
        m,
        a: 2 * s as i64 - (k as i64) * b as i64,
        stirling,
    }
}

/// Epi diagrams between `r` upper and `k` lower points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Epi {
    /// Upper points are labeled `0..r`, lower points `r..r+k`.
    pub partition: SetPartition,
    pub r: usize,
    pub k: usize,
    pub category: Category,
}

impl Epi {
    /// Text form listing upper points as `u1..` and lower points as `1..`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for block in self.partition.blocks() {
            s.push('{');
            let items: Vec<String> = block
                .iter()
                .map(|&x| {
                    if x < self.r {
                        alloc::format!("u{}", x + 1)
                    } else {
                        (x - self.r + 1).to_string()
                    }
                })
                .collect();
            s.push_str(&items.join(","));
            s.push('}');
        }
        s
    }
}

/// All epi diagrams onto `k` lower points, grouped by upper point count
/// `r = 0..=k` (free orthogonal, bistochastic and symmetric categories only).
pub fn enumerate_epi(category: Category, k: usize) -> Result<Vec<Vec<Epi>>> {
    let size_ok: fn(usize) -> bool = match category {
        Category::OPlus => |s| s == 2,
        Category::BPlus => |s| s <= 2,
        Category::SPlus => |_| true,
        _ => {
            return Err(Error::UnsupportedCategory {
                op: "epi enumeration",
                category,
            })
        }
    };
    let max_block = if category == Category::SPlus {
        usize::MAX
    } else {
        2
    };
    let mut groups = Vec::with_capacity(k + 1);
    for r in 0..=k {
        let total = r + k;
        // Circular order u1..ur, l_k..l_1; position p >= r is lower point k-(p-r).
        let label = |pos: usize| if pos < r { pos } else { r + k - 1 - (pos - r) };
        let ok = |block: &[usize]| {
            let uppers = block.iter().filter(|&&p| p < r).count();
            size_ok(block.len()) && uppers <= 1 && (uppers == 0 || block.len() > 1)
        };
        let mut group: Vec<Epi> = noncrossing_partitions(total, max_block, &ok)
            .into_iter()
            .map(|p| {
                let mut labels = vec![0usize; total];
                for pos in 0..total {
                    labels[label(pos)] = p.block_of(pos);
                }
                Epi {
                    partition: SetPartition::from_labels(&labels),
                    r,
                    k,
                    category,
                }
            })
            .collect();
        // Every upper point must be used.
        group.retain(|e| (0..r).all(|u| e.partition.block_sizes()[e.partition.block_of(u)] > 1));
        group.sort();
        groups.push(group);
    }
    Ok(groups)
}

/// Epi counts indexed by `r = 0..=k`.
pub fn epi_counts(category: Category, k: usize) -> Result<Vec<u64>> {
    Ok(enumerate_epi(category, k)?
        .iter()
        .map(|g| g.len() as u64)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(p("{1,2}{3,4}").rgs(), &[0, 0, 1, 1]);
        assert_eq!(p("{1,4}{2,3}").to_string(), "{1,4}{2,3}");
        assert_eq!(p("{3}{1,2}").to_string(), "{1,2}{3}");
        assert_eq!(p("{}").k(), 0);
        assert!("{1,1}".parse::<SetPartition>().is_err());
        assert!("{1}{3}".parse::<SetPartition>().is_err());
        assert!(SetPartition::from_rgs(vec![0, 2]).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate(Category::S, 3).len(), 5);
        let ostar: Vec<String> = enumerate(Category::OStar, 4)
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(ostar, ["{1,2}{3,4}", "{1,4}{2,3}"]);
        let hplus: Vec<String> = enumerate(Category::HPlus, 4)
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(hplus, ["{1,2,3,4}", "{1,2}{3,4}", "{1,4}{2,3}"]);
        assert_eq!(enumerate(Category::O, 3).len(), 0);
        assert_eq!(
            enumerate(Category::OPlus, 0),
            vec![SetPartition::singletons(0)]
        );
    }

    #[test]
    fn membership_examples() {
        assert!(!is_member(Category::HStar, &p("{1,3}{2,4}")));
        assert!(is_member(Category::HStar, &p("{1,2}{3,4}")));
        assert!(is_member(Category::S, &p("{1,3}{2}{4}")));
        assert!(!is_member(Category::OPlus, &p("{1,3}{2,4}")));
        assert!(is_member(Category::O, &p("{1,3}{2,4}")));
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(join(&p("{1,3}{2}"), &p("{1}{2,3}")).unwrap(), p("{1,2,3}"));
        assert_eq!(
            join(&p("{1,2}{3,4}"), &p("{1,4}{2,3}")).unwrap(),
            p("{1,2,3,4}")
        );
        assert_eq!(meet(&p("{1,2,3}"), &p("{1,2}{3}")).unwrap(), p("{1,2}{3}"));
        assert_eq!(
            meet(&p("{1,2}{3,4}"), &p("{1,4}{2,3}")).unwrap(),
            SetPartition::singletons(4)
        );
        assert!(refines(&SetPartition::singletons(3), &p("{1,3}{2}")).unwrap());
        assert!(!refines(&p("{1,2,3}"), &p("{1,2}{3}")).unwrap());
        assert_eq!(
            join(&p("{1}"), &p("{1,2}")),
            Err(Error::PointCountMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn mobius_examples() {
        let x = p("{1,2}{3}");
        assert_eq!(mobius(&x, &x).unwrap(), 1);
        assert_eq!(
            mobius(&SetPartition::singletons(2), &p("{1,2}")).unwrap(),
            -1
        );
        assert_eq!(
            mobius(&SetPartition::singletons(3), &p("{1,2,3}")).unwrap(),
            2
        );
        assert_eq!(mobius(&p("{1,2,3}"), &x), Err(Error::NotRefinement));
    }

    #[test]
    fn mobius_matches_product_formula() {
        // μ(p, q) = Π over blocks of q of (-1)^{m-1} (m-1)!, m = number of p-blocks merged
        let mut table = MobiusTable::new();
        for q in enumerate(Category::S, 5) {
            for x in enumerate(Category::S, 5) {
                if !x.refines(&q).unwrap() {
                    continue;
                }
                let mut merged = vec![0i64; q.num_blocks()];
                for b in x.blocks() {
                    merged[q.block_of(b[0])] += 1;
                }
                let expected: i64 = merged
                    .iter()
                    .map(|&m| {
                        let f: i64 = (1..m).product();
                        if m % 2 == 0 {
                            -f
                        } else {
                            f
                        }
                    })
                    .product();
                assert_eq!(table.mobius(&x, &q).unwrap(), expected);
            }
        }
    }

    #[test]
    fn stirling_and_bundles() {
        assert_eq!(stirling(Category::S, 3, 2), 3);
        assert_eq!(stirling(Category::O, 4, 2), 3);
        assert_eq!(stirling(Category::H, 4, 2), 3);
        let b = invariant_bundle(Category::SPlus, 3);
        assert_eq!((b.b, b.s, b.a), (5, 10, 5));
        let b = invariant_bundle(Category::OPlus, 4);
        assert_eq!((b.b, b.s, b.m, b.a), (2, 4, Ratio::from_integer(2), 0));
        let b = invariant_bundle(Category::HPlus, 4);
        assert_eq!((b.b, b.s, b.a), (3, 5, -2));
        let b = invariant_bundle(Category::O, 0);
        assert_eq!((b.b, b.s, b.a), (1, 0, 0));
    }

    #[test]
    fn sequence_counts() {
        let bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for k in 0..=10 {
            assert_eq!(enumerate(Category::S, k).len() as u64, bell[k]);
            assert_eq!(
                enumerate(Category::SPlus, k).len() as u64,
                binom(2 * k as u64, k as u64) / (k as u64 + 1)
            );
            let l = (k / 2) as u64;
            let even = k % 2 == 0;
            let pairings = if even {
                (1..=l).map(|i| 2 * i - 1).product()
            } else {
                0
            };
            assert_eq!(enumerate(Category::O, k).len() as u64, pairings);
            let cat = if even { binom(2 * l, l) / (l + 1) } else { 0 };
            assert_eq!(enumerate(Category::OPlus, k).len() as u64, cat);
            let fact = if even { (1..=l).product() } else { 0 };
            assert_eq!(enumerate(Category::OStar, k).len() as u64, fact);
            let fc = if even {
                binom(3 * l, l) / (2 * l + 1)
            } else {
                0
            };
            assert_eq!(enumerate(Category::HPlus, k).len() as u64, fc);
        }
    }

    #[test]
    fn free_categories_sit_inside_classical_ones() {
        let pairs = [
            (Category::SPlus, Category::S),
            (Category::OPlus, Category::O),
            (Category::BPlus, Category::B),
            (Category::HPlus, Category::H),
        ];
        for k in 0..=8 {
            for (free, classical) in pairs {
                let big = enumerate(classical, k);
                for x in enumerate(free, k) {
                    assert!(big.binary_search(&x).is_ok());
                }
                let filtered: Vec<_> = big.into_iter().filter(|x| x.is_noncrossing()).collect();
                assert_eq!(filtered, enumerate(free, k));
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_filtered() {
        for c in Category::ALL {
            for k in 0..=7 {
                let list = enumerate(c, k);
                assert!(list.windows(2).all(|w| w[0] < w[1]));
                let brute: Vec<_> = enumerate(Category::S, k)
                    .into_iter()
                    .filter(|x| c.is_member(x))
                    .collect();
                assert_eq!(list, brute, "{c} k={k}");
            }
        }
    }

    #[test]
    fn epi_examples() {
        assert_eq!(epi_counts(Category::OPlus, 4).unwrap(), vec![2, 0, 3, 0, 1]);
        assert_eq!(epi_counts(Category::OPlus, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(epi_counts(Category::SPlus, 2).unwrap(), vec![2, 3, 1]);
        assert!(enumerate_epi(Category::H, 2).is_err());
        let e = &enumerate_epi(Category::OPlus, 2).unwrap()[2][0];
        assert_eq!(e.to_text(), "{u1,1}{u2,2}");
    }

    #[test]
    fn epi_counts_match_binomials() {
        for k in (0..=12u64).step_by(2) {
            let counts = epi_counts(Category::OPlus, k as usize).unwrap();
            for r in 0..=k / 2 {
                let l = k / 2;
                let f = binom(2 * l, l - r) - if r < l { binom(2 * l, l - r - 1) } else { 0 };
                assert_eq!(counts[2 * r as usize], f, "k={k} r={r}");
            }
        }
    }

    fn arb_partition(k: usize) -> impl Strategy<Value = SetPartition> {
        proptest::collection::vec(0usize..k.max(1), k).prop_map(|l| SetPartition::from_labels(&l))
    }

    fn arb_pair() -> impl Strategy<Value = (SetPartition, SetPartition, SetPartition)> {
        (0usize..=8).prop_flat_map(|k| (arb_partition(k), arb_partition(k), arb_partition(k)))
    }

    proptest! {
        #[test]
        fn lattice_laws((a, b, c) in arb_pair()) {
            let j = a.join(&b).unwrap();
            let m = a.meet(&b).unwrap();
            prop_assert_eq!(&j, &b.join(&a).unwrap());
            prop_assert_eq!(&m, &b.meet(&a).unwrap());
            prop_assert_eq!(a.join(&a).unwrap(), a.clone());
            prop_assert_eq!(a.meet(&a).unwrap(), a.clone());
            prop_assert_eq!(j.join(&c).unwrap(), a.join(&b.join(&c).unwrap()).unwrap());
            prop_assert_eq!(m.meet(&c).unwrap(), a.meet(&b.meet(&c).unwrap()).unwrap());
            prop_assert!(m.refines(&a).unwrap() && a.refines(&j).unwrap());
            prop_assert_eq!(j.num_blocks(), a.join_blocks(&b));
            prop_assert!(j.num_blocks() <= a.num_blocks().min(b.num_blocks()));
            prop_assert_eq!(j.num_blocks() == a.num_blocks(), b.refines(&a).unwrap());
            prop_assert_eq!(a.refines(&b).unwrap(), a.join(&b).unwrap() == b);
            if a.refines(&b).unwrap() && b.refines(&c).unwrap() {
                prop_assert!(a.refines(&c).unwrap());
            }
            if a.refines(&b).unwrap() && b.refines(&a).unwrap() {
                prop_assert_eq!(&a, &b);
            }
        }

        #[test]
        fn mobius_inversion((a, b, _c) in arb_pair()) {
            let lo = a.meet(&b).unwrap();
            let hi = a.join(&b).unwrap();
            let mut table = MobiusTable::new();
            let total: i64 = interval(&lo, &hi).unwrap().iter().map(|t| table.mobius(&lo, t).unwrap()).sum();
            prop_assert_eq!(total, i64::from(lo == hi));
        }

        #[test]
        fn text_form_round_trips((a, _b, _c) in arb_pair()) {
            prop_assert_eq!(a.to_string().parse::<SetPartition>().unwrap(), a);
        }
    }
}

//! The four partition lattices behind the moment–cumulant formulae: all set
//! partitions `P(n)`, non-crossing `NC(n)`, interval `I(n)`, and monotone
//! partitions `M(n)` (non-crossing partitions with a block order compatible
//! with nesting).

use alloc::vec::Vec;

use crate::{Error, Result};

/// Largest `n` accepted by the unordered enumerations.
pub const MAX_PARTITION_SIZE: usize = 12;
/// Largest `n` accepted by [`enumerate_monotone`].
pub const MAX_MONOTONE_SIZE: usize = 10;

/// A partition of `{1, …, n}`; blocks are sorted internally and ordered by
/// their least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Canonicalizes `blocks`; fails unless they are disjoint, nonempty and
    /// cover `{1, …, n}`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = alloc::vec![false; n + 1];
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidArgument("partition blocks must be nonempty"));
            }
            b.sort_unstable();
            for &e in b.iter() {
                if e == 0 || e > n || seen[e] {
                    return Err(Error::InvalidArgument("blocks must be disjoint subsets of 1..=n"));
                }
                seen[e] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::InvalidArgument("blocks must cover 1..=n"));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self { n, blocks })
    }

    /// From a restricted growth string (`labels[i]` is the block of `i + 1`).
    fn from_rgs(labels: &[usize]) -> Self {
        let count = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = alloc::vec![Vec::new(); count];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l].push(i + 1);
        }
        Self { n: labels.len(), blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `|π|`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block sizes in decreasing order (the partition's type).
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// `r_π = Π_V r_{|V|}` for a sequence indexed from 1.
    pub fn product<T, F>(&self, r: F) -> T
    where
        T: core::ops::Mul<Output = T> + From<f64>,
        F: Fn(usize) -> T,
    {
        self.blocks.iter().fold(T::from(1.0), |acc, b| acc * r(b.len()))
    }

    pub fn is_noncrossing(&self) -> bool {
        is_noncrossing(self)
    }

    pub fn is_interval(&self) -> bool {
        self.blocks.iter().all(|b| b[b.len() - 1] - b[0] + 1 == b.len())
    }

    /// `true` when block `inner` lies strictly between two elements of block
    /// `outer`: `min outer < min inner ≤ max inner < max outer`.
    pub fn is_nested_in(&self, inner: usize, outer: usize) -> bool {
        let (v, w) = (&self.blocks[inner], &self.blocks[outer]);
        w[0] < v[0] && v[v.len() - 1] < w[w.len() - 1]
    }

    /// Immediate enclosing block of each block in a non-crossing partition.
    pub fn nesting_parents(&self) -> Vec<Option<usize>> {
        (0..self.blocks.len())
            .map(|v| {
                // the innermost enclosing block has the largest least element
                (0..self.blocks.len())
                    .filter(|&w| w != v && self.is_nested_in(v, w))
                    .max_by_key(|&w| self.blocks[w][0])
            })
            .collect()
    }

    pub fn has_nesting(&self) -> bool {
        self.nesting_parents().iter().any(Option::is_some)
    }

    /// Number of block orders compatible with nesting, divided by `|π|!`:
    /// `1 / Π_V |subtree(V)|` over the nesting forest.
    pub fn monotone_weight(&self) -> f64 {
        let parents = self.nesting_parents();
        let mut subtree = alloc::vec![1usize; self.blocks.len()];
        for v in 0..self.blocks.len() {
            let mut p = parents[v];
            while let Some(w) = p {
                subtree[w] += 1;
                p = parents[w];
            }
        }
        1.0 / subtree.iter().map(|&s| s as f64).product::<f64>()
    }
}

/// Crossing test: no `a < b < c < d` with `a, c` in one block and `b, d` in
/// another.
pub fn is_noncrossing(p: &SetPartition) -> bool {
    let mut label = alloc::vec![0usize; p.n + 1];
    for (i, b) in p.blocks.iter().enumerate() {
        for &e in b {
            label[e] = i;
        }
    }
    let l = &label[1..];
    let n = l.len();
    for a in 0..n {
        for b in a + 1..n {
            if l[b] == l[a] {
                continue;
            }
            for c in b + 1..n {
                if l[c] != l[a] {
                    continue;
                }
                if l[c + 1..].iter().any(|&d| d == l[b]) {
                    return false;
                }
            }
        }
    }
    true
}

fn check_size(n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("partitions need n >= 1"));
    }
    if n > limit {
        return Err(Error::SizeLimit { requested: n, limit });
    }
    Ok(())
}

/// All partitions of `{1..n}` in lexicographic order of their restricted
/// growth strings.
pub fn enumerate_partitions(n: usize) -> Result<Vec<SetPartition>> {
    check_size(n, MAX_PARTITION_SIZE)?;
    let mut out = Vec::new();
    let mut labels = alloc::vec![0usize; n];
    // maxima[i] = max(labels[..i])
    let mut maxima = alloc::vec![0usize; n];
    loop {
        out.push(SetPartition::from_rgs(&labels));
        // find rightmost position that can be incremented
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(out);
            }
            if labels[i] <= maxima[i] {
                break;
            }
            i -= 1;
        }
        labels[i] += 1;
        for j in i + 1..n {
            labels[j] = 0;
            maxima[j] = maxima[j - 1].max(labels[j - 1]);
        }
    }
}

pub fn enumerate_noncrossing(n: usize) -> Result<Vec<SetPartition>> {
    Ok(enumerate_partitions(n)?.into_iter().filter(is_noncrossing).collect())
}

/// Partitions into runs of consecutive integers, generated directly from the
/// `2^(n-1)` compositions of `n`.
pub fn enumerate_interval(n: usize) -> Result<Vec<SetPartition>> {
    check_size(n, MAX_PARTITION_SIZE)?;
    let mut out: Vec<SetPartition> = (0..1u32 << (n - 1))
        .map(|cuts| {
            let mut blocks = Vec::new();
            let mut current = alloc::vec![1];
            for e in 2..=n {
                if cuts & (1 << (e - 2)) != 0 {
                    blocks.push(core::mem::take(&mut current));
                }
                current.push(e);
            }
            blocks.push(current);
            SetPartition { n, blocks }
        })
        .collect();
    out.sort_by_cached_key(rgs);
    Ok(out)
}

fn rgs(p: &SetPartition) -> Vec<usize> {
    let mut labels = alloc::vec![0; p.n];
    for (i, b) in p.blocks.iter().enumerate() {
        for &e in b {
            labels[e - 1] = i;
        }
    }
    labels
}

/// A non-crossing partition with a block order in which every nested block
/// comes after the blocks enclosing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedNCPartition {
    base: SetPartition,
    order: Vec<usize>,
}

impl OrderedNCPartition {
    /// `order[i]` is the label in `1..=|π|` of `base.blocks()[i]`.
    pub fn new(base: SetPartition, order: Vec<usize>) -> Result<Self> {
        let k = base.block_count();
        let mut seen = alloc::vec![false; k + 1];
        if order.len() != k || order.iter().any(|&o| o == 0 || o > k || core::mem::replace(&mut seen[o], true)) {
            return Err(Error::InvalidArgument("order must be a bijection onto 1..=|π|"));
        }
        if !base.is_noncrossing() {
            return Err(Error::InvalidArgument("monotone partitions must be non-crossing"));
        }
        let ok = (0..k).all(|v| (0..k).all(|w| !base.is_nested_in(v, w) || order[v] > order[w]));
        if !ok {
            return Err(Error::InvalidArgument("nested blocks must carry larger labels"));
        }
        Ok(Self { base, order })
    }

    pub fn base(&self) -> &SetPartition {
        &self.base
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// Every monotone partition of `{1..n}`, by partition then by label vector.
pub fn enumerate_monotone(n: usize) -> Result<Vec<OrderedNCPartition>> {
    check_size(n, MAX_MONOTONE_SIZE)?;
    let mut out = Vec::new();
    for base in enumerate_noncrossing(n)? {
        let parents = base.nesting_parents();
        let k = base.block_count();
        let mut orders = Vec::new();
        let mut labels = alloc::vec![0usize; k];
        linear_extensions(&parents, &mut labels, 1, &mut orders);
        orders.sort_unstable();
        out.extend(orders.into_iter().map(|order| OrderedNCPartition { base: base.clone(), order }));
    }
    Ok(out)
}

// Assign label `next` to each block whose parent is already labelled.
fn linear_extensions(parents: &[Option<usize>], labels: &mut [usize], next: usize, out: &mut Vec<Vec<usize>>) {
    if next > labels.len() {
        out.push(labels.to_vec());
        return;
    }
    for v in 0..labels.len() {
        if labels[v] == 0 && parents[v].is_none_or(|p| labels[p] != 0) {
            labels[v] = next;
            linear_extensions(parents, labels, next + 1, out);
            labels[v] = 0;
        }
    }
}

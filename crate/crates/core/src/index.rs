//! Index sets, the partition bijections and Poincaré duality.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::label::Label;
use crate::spec::{LieType, Spec};

/// Strictly increasing entries in [1, N] with no two (possibly equal) entries summing to N+1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(spec: &Spec, mut entries: Vec<usize>) -> Result<IndexSet> {
        entries.sort_unstable();
        let n1 = spec.ambient() + 1;
        if entries.len() != spec.m {
            return Err(Error::IndexSet(format!("{entries:?}: cardinality must be m={}", spec.m)));
        }
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::IndexSet(format!("{entries:?}: repeated entry")));
        }
        if entries.iter().any(|&e| e == 0 || e >= n1) {
            return Err(Error::IndexSet(format!("{entries:?}: entries must lie in [1,{}]", n1 - 1)));
        }
        for &a in &entries {
            if entries.binary_search(&(n1 - a)).is_ok() {
                return Err(Error::IndexSet(format!("{entries:?}: contains a pair summing to {n1}")));
            }
        }
        Ok(IndexSet(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Entry `j` (1-based).
    pub fn at(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl core::fmt::Display for IndexSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

pub fn label_to_index_set(spec: &Spec, label: &Label) -> Result<IndexSet> {
    label.check(spec)?;
    let (n, k, m) = (spec.n, spec.k, spec.m);
    let lam = |j: usize| label.part(j);
    let mut out = Vec::with_capacity(m);
    for j in 1..=m {
        let lj = lam(j);
        let p = match spec.lie_type {
            LieType::C | LieType::B => {
                let cnt = (1..j).filter(|&i| lam(i) + lj <= 2 * k + j - i).count();
                let p = n + k + 1 - lj + cnt;
                if spec.lie_type == LieType::B && lj <= k { p + 1 } else { p }
            }
            LieType::D | LieType::Dmax => {
                let cnt = (1..j).filter(|&i| lam(i) + lj + 1 <= 2 * k + j - i).count();
                let one = lj > k || (lj == k && k < lam(j - 1) && (n + j + label.ty() as usize) % 2 == 0);
                n + k - lj + cnt + if one { 1 } else { 2 }
            }
        };
        out.push(p);
    }
    IndexSet::new(spec, out).map_err(|e| Error::Finding(format!("index set of {label} is invalid: {e}")))
}

pub fn index_set_to_label(spec: &Spec, set: &IndexSet) -> Result<Label> {
    let (n, k, m) = (spec.n, spec.k, spec.m);
    if set.0.len() != m {
        return Err(Error::IndexSet(format!("{set}: cardinality must be m={m}")));
    }
    let mut parts = Vec::with_capacity(m);
    let ty;
    match spec.lie_type {
        LieType::C | LieType::B => {
            let p: Vec<usize> = if spec.lie_type == LieType::B {
                set.0.iter().map(|&x| if x > n + 1 { x - 1 } else { x }).collect()
            } else {
                set.0.clone()
            };
            for j in 0..m {
                let cnt = (0..j).filter(|&i| p[i] + p[j] > 2 * n + 1).count();
                parts.push((n + k + 1 + cnt) as isize - p[j] as isize);
            }
            ty = 0;
        }
        LieType::D | LieType::Dmax => {
            let p = &set.0;
            for j in 0..m {
                let v = if p[j] <= n + 1 {
                    (n + k + 1) as isize - p[j] as isize
                } else {
                    let cnt = (0..j).filter(|&i| p[i] + p[j] > 2 * n + 3).count();
                    (n + k + 2 + cnt) as isize - p[j] as isize
                };
                parts.push(v);
            }
            ty = if set.contains(n + 1) || set.contains(n + 2) {
                let missing = (1..=n + 1).filter(|&i| !set.contains(i)).count();
                1 + (missing % 2) as u8
            } else {
                0
            };
        }
    }
    if parts.iter().any(|&v| v < 0) {
        return Err(Error::Finding(format!("{set}: negative part in conversion")));
    }
    let label = Label::new(parts.into_iter().map(|v| v as usize).collect(), ty);
    label
        .check(spec)
        .map_err(|e| Error::Finding(format!("{set} converts to an invalid label: {e}")))?;
    Ok(label)
}

pub fn dual_index_set(spec: &Spec, set: &IndexSet) -> IndexSet {
    let n = spec.n;
    let mut out: Vec<usize> = set.0.iter().map(|&p| spec.ambient() + 1 - p).collect();
    if spec.lie_type.is_even() && n % 2 == 0 {
        for v in out.iter_mut() {
            if *v == n + 1 {
                *v = n + 2;
            } else if *v == n + 2 {
                *v = n + 1;
            }
        }
    }
    out.sort_unstable();
    IndexSet(out)
}

/// The Poincaré dual label.
pub fn dual(spec: &Spec, label: &Label) -> Result<Label> {
    let p = label_to_index_set(spec, label)?;
    index_set_to_label(spec, &dual_index_set(spec, &p))
}

/// A pair (alpha, beta): alpha has at most k rows, beta is strict, alpha_k >= len(beta).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionPair {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

fn conjugate(p: &[usize]) -> Vec<usize> {
    let w = p.first().copied().unwrap_or(0);
    (1..=w).map(|c| p.iter().filter(|&&x| x >= c).count()).collect()
}

pub fn partition_pair_to_label(pair: &PartitionPair, k: usize) -> Result<Label> {
    let alpha: Vec<usize> = pair.alpha.iter().copied().filter(|&x| x > 0).collect();
    let beta: Vec<usize> = pair.beta.iter().copied().filter(|&x| x > 0).collect();
    if alpha.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Label(format!("alpha {alpha:?} is not a partition")));
    }
    if alpha.len() > k {
        return Err(Error::Label(format!("alpha {alpha:?} has more than k={k} rows")));
    }
    if beta.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Label(format!("beta {beta:?} is not strict")));
    }
    let alpha_k = if k == 0 { usize::MAX } else { alpha.get(k - 1).copied().unwrap_or(0) };
    if alpha_k < beta.len() {
        return Err(Error::Label(format!("alpha_k = {alpha_k} is smaller than the length {} of beta", beta.len())));
    }
    let a = conjugate(&alpha);
    let len = a.len().max(beta.len());
    let parts = (0..len)
        .map(|i| a.get(i).copied().unwrap_or(0) + beta.get(i).copied().unwrap_or(0))
        .collect();
    Ok(Label::new(parts, 0))
}

/// Inverse of [`partition_pair_to_label`] on k-strict partitions.
pub fn label_to_partition_pair(label: &Label, k: usize) -> PartitionPair {
    let a: Vec<usize> = label.parts().iter().map(|&p| p.min(k)).collect();
    let beta = label.parts().iter().filter(|&&p| p > k).map(|&p| p - k).collect();
    PartitionPair { alpha: conjugate(&a), beta }
}

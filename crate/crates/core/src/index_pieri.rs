//! Pieri rules stated on index sets. Kept independent of the partition rules so
//! that each can check the other.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::index::{index_set_to_label, label_to_index_set, IndexSet};
use crate::label::{enumerate_basis, Label};
use crate::pieri::{candidates, Delta, SpecialClass};
use crate::ring::{QExp, RingElement};
use crate::spec::{LieType, Spec};

/// Rows [q_j, p_j] of the skew diagram D(P,Q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewDiagram {
    pub rows: Vec<(usize, usize)>,
}

impl SkewDiagram {
    pub fn column_count(&self, c: usize) -> usize {
        self.rows.iter().filter(|&&(q, p)| q <= c && c <= p).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutProfile {
    pub cuts: BTreeSet<usize>,
    pub i_set: BTreeSet<usize>,
    /// Count of c in I with c >= 2 and c-1 not in I (before the p > k correction).
    pub n: usize,
    pub h: Option<usize>,
    pub s: BTreeSet<usize>,
    pub s_prime: BTreeSet<usize>,
}

fn ordered(spec: &Spec, p: &IndexSet, q: &IndexSet) -> bool {
    let n = spec.n;
    (1..=spec.m).all(|j| {
        let (pj, qj) = (p.at(j), q.at(j));
        qj <= pj && !(spec.lie_type.is_even() && pj == n + 2 && qj == n + 1)
    })
}

pub fn skew_diagram(spec: &Spec, p: &IndexSet, q: &IndexSet) -> Option<SkewDiagram> {
    if !ordered(spec, p, q) {
        return None;
    }
    Some(SkewDiagram { rows: (1..=spec.m).map(|j| (q.at(j), p.at(j))).collect() })
}

pub fn cut_profile(spec: &Spec, p: &IndexSet, q: &IndexSet) -> CutProfile {
    let (n, m, big) = (spec.n, spec.m, spec.ambient());
    let pj = |j: usize| if j == 0 { 0 } else { p.at(j) };
    let qj = |j: usize| if j == m + 1 { big + 1 } else { q.at(j) };
    let cuts: BTreeSet<usize> = (0..=big).filter(|&c| (0..=m).any(|j| pj(j) <= c && c < qj(j + 1))).collect();
    // Cut c mirrors cut big - c.
    let mut i_set: BTreeSet<usize> = (0..=n).filter(|&c| cuts.contains(&c) || cuts.contains(&(big - c))).collect();
    if spec.lie_type != LieType::C {
        i_set.insert(n + 1);
    }
    let count = i_set.iter().filter(|&&c| c >= 2 && !i_set.contains(&(c - 1))).count();
    let (mut s, mut s_prime, mut h) = (BTreeSet::new(), BTreeSet::new(), None);
    if spec.lie_type.is_even() {
        s = (1..=n + 1).filter(|&i| (1..=m).any(|j| q.at(j) <= i && i <= p.at(j))).collect();
        s_prime = p.entries().iter().copied().filter(|&x| x >= n + 2 && s.contains(&(2 * n + 3 - x))).collect();
        h = Some(s.len() + s_prime.len() + n);
    }
    CutProfile { cuts, i_set, n: count, h, s, s_prime }
}

pub fn index_arrow(spec: &Spec, p: &IndexSet, q: &IndexSet) -> bool {
    let Some(d) = skew_diagram(spec, p, q) else { return false };
    let (n, m) = (spec.n, spec.m);
    let mirror = spec.ambient() + 1;
    if !spec.lie_type.is_even() {
        for j in 1..m {
            if p.at(j) > q.at(j + 1) {
                return false;
            }
            if p.at(j) == q.at(j + 1) {
                let c = mirror - p.at(j);
                if !(1..=m).any(|i| q.at(i) < c && c < p.at(i)) {
                    return false;
                }
            }
        }
        return true;
    }
    // Two-by-two squares sit in rows j, j+1 and columns c, c+1 with q_{j+1} <= c < p_j.
    let mut middle = 0;
    for j in 1..m {
        let (lo, hi) = (q.at(j + 1), p.at(j));
        if hi > lo {
            if lo == n + 1 && hi == n + 2 {
                middle += 1;
            } else {
                return false;
            }
        }
    }
    if middle > 1 {
        return false;
    }
    for c in 1..=spec.ambient() {
        if d.column_count(c) >= 2 && d.column_count(mirror - c) == 0 {
            return false;
        }
    }
    d.column_count(n + 1) + d.column_count(n + 2) != 3
}

fn codim(spec: &Spec, set: &IndexSet) -> Result<usize> {
    Ok(index_set_to_label(spec, set)?.weight())
}

pub fn index_multiplicity(spec: &Spec, p: &IndexSet, q: &IndexSet, s: SpecialClass) -> Result<BigInt> {
    s.check(spec)?;
    if !index_arrow(spec, p, q) {
        return Err(Error::IndexSet(format!("{p} -> {q} does not hold")));
    }
    if codim(spec, q)? != codim(spec, p)? + s.p {
        return Err(Error::IndexSet(format!("codimensions of {p} and {q} do not differ by {}", s.p)));
    }
    let prof = cut_profile(spec, p, q);
    let nn = prof.n as isize;
    let n_prime = if spec.lie_type != LieType::C && s.p > spec.k { nn - 1 } else { nn };
    let pow = |e: isize| -> Result<BigInt> {
        if e < 0 {
            return Err(Error::Finding(format!("negative exponent for {p} -> {q}")));
        }
        Ok(BigInt::one() << e as usize)
    };
    match spec.lie_type {
        LieType::C => pow(nn),
        LieType::B => pow(n_prime),
        LieType::D | LieType::Dmax => {
            if s.p != spec.k {
                return pow(n_prime);
            }
            let h = prof.h.expect("even type profile has h");
            let d = if n_prime > 0 {
                Delta::Half
            } else if (h % 2 == 1) != s.primed {
                Delta::One
            } else {
                Delta::Zero
            };
            match d {
                Delta::Zero => Ok(BigInt::default()),
                Delta::One => pow(n_prime),
                Delta::Half => pow(n_prime - 1),
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateSource {
    /// Convert the partition-side candidate shapes to index sets.
    FromPartitions,
    /// Scan every basis element of the right codimension.
    Raw,
}

pub fn classical_pieri_via_index(spec: &Spec, s: SpecialClass, lam: &Label) -> Result<RingElement> {
    classical_pieri_via_index_with(spec, s, lam, CandidateSource::FromPartitions)
}

pub fn classical_pieri_via_index_with(
    spec: &Spec,
    s: SpecialClass,
    lam: &Label,
    source: CandidateSource,
) -> Result<RingElement> {
    s.check(spec)?;
    let p = label_to_index_set(spec, lam)?;
    let want = lam.weight() + s.p;
    let pool: Vec<Label> = match source {
        CandidateSource::FromPartitions => candidates(spec, lam, s.p),
        CandidateSource::Raw => enumerate_basis(spec).into_iter().filter(|l| l.weight() == want).collect(),
    };
    let mut out = RingElement::zero();
    for mu in pool {
        let q = label_to_index_set(spec, &mu)?;
        if index_arrow(spec, &p, &q) {
            let c = index_multiplicity(spec, &p, &q, s)?;
            out.add_term(index_set_to_label(spec, &q)?, QExp::ZERO, c);
        }
    }
    Ok(out)
}

//! Pieri rules stated on partitions.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::label::{ell_k, Label};
use crate::ring::{QExp, RingElement};
use crate::spec::{LieType, Spec};

/// A box in row `row`, column `col` (both 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Cell {
        Cell { row, col }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Diagonals centred on column k+1.
    BC,
    /// Diagonals centred between columns k and k+1.
    D,
}

impl Convention {
    pub fn of(lie_type: LieType) -> Convention {
        if lie_type.is_even() { Convention::D } else { Convention::BC }
    }
}

/// Diagonal index of a box; two boxes are related when these agree.
/// The D value is doubled to stay integral.
fn diagonal(b: Cell, k: usize, conv: Convention) -> usize {
    match conv {
        Convention::BC => (b.col as isize - k as isize - 1).unsigned_abs() + b.row,
        Convention::D => (2 * b.col as isize - 2 * k as isize - 1).unsigned_abs() + 2 * b.row,
    }
}

pub fn k_related(a: Cell, b: Cell, k: usize, conv: Convention) -> bool {
    diagonal(a, k, conv) == diagonal(b, k, conv)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Delta {
    Zero,
    Half,
    One,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaData {
    pub g: usize,
    pub h: usize,
    pub delta: Delta,
    pub delta_prime: Delta,
}

/// Witness for a relation source -> target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieriMove {
    pub source: Label,
    pub target: Label,
    pub removed: Vec<Cell>,
    pub added: Vec<Cell>,
    pub set_a: Vec<Cell>,
    pub components: Vec<Vec<Cell>>,
    /// Components of the set A with no box in column k+1.
    pub n: usize,
    /// All components, less one when p > k. May be -1, which the multiplicity code rejects.
    pub n_prime: isize,
    pub delta: Option<DeltaData>,
}

impl PieriMove {
    pub fn p(&self) -> usize {
        self.target.weight() - self.source.weight()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpecialClass {
    pub p: usize,
    pub primed: bool,
}

impl SpecialClass {
    pub fn new(p: usize) -> SpecialClass {
        SpecialClass { p, primed: false }
    }

    pub fn primed(p: usize) -> SpecialClass {
        SpecialClass { p, primed: true }
    }

    pub fn check(&self, spec: &Spec) -> Result<()> {
        if self.p == 0 || self.p > spec.width() {
            return Err(Error::Special(format!("p={} outside [1,{}]", self.p, spec.width())));
        }
        if self.primed {
            if !spec.lie_type.is_even() {
                return Err(Error::Special("primed classes exist only for D and Dmax".into()));
            }
            if self.p != spec.k {
                return Err(Error::Special(format!("primed class needs p = k = {}", spec.k)));
            }
        }
        Ok(())
    }

    /// The basis label of this class.
    pub fn label(&self, spec: &Spec) -> Label {
        let ty = if spec.lie_type.is_even() && self.p == spec.k { if self.primed { 2 } else { 1 } } else { 0 };
        Label::new(vec![self.p], ty)
    }

    /// The special class whose label is a single row, if `label` is one.
    pub fn from_label(label: &Label) -> Option<SpecialClass> {
        if label.len() != 1 {
            return None;
        }
        Some(SpecialClass { p: label.part(1), primed: label.ty() == 2 })
    }
}

impl core::fmt::Display for SpecialClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.primed { write!(f, "t'{}", self.p) } else { write!(f, "t{}", self.p) }
    }
}

/// The relation lam -> mu inside `frame` (which may be larger than the working space).
pub(crate) fn arrow_in(frame: &Spec, lam: &Label, mu: &Label) -> Option<PieriMove> {
    let (m, k) = (frame.m, frame.k);
    let conv = Convention::of(frame.lie_type);
    if mu.weight() < lam.weight() {
        return None;
    }
    let p = mu.weight() - lam.weight();
    if conv == Convention::D && lam.ty() + mu.ty() == 3 {
        return None;
    }
    let mut removed = Vec::new();
    let mut added = Vec::new();
    for i in 1..=m {
        let (li, mi) = (lam.part(i), mu.part(i));
        if mi + 1 < li || (mi + 1 == li && li > k) {
            return None;
        }
        if i > 1 && mi > lam.part(i - 1) {
            return None;
        }
        if mi < li {
            removed.push(Cell::new(i, li));
        }
        for c in li + 1..=mi {
            added.push(Cell::new(i, c));
        }
    }
    let diag: Vec<usize> = added.iter().map(|&b| diagonal(b, k, conv)).collect();
    let partners = |b: Cell| -> Vec<usize> {
        let d = diagonal(b, k, conv);
        (0..added.len()).filter(|&i| diag[i] == d).collect()
    };
    let mut mentioned = BTreeSet::new();
    for c in 1..=k {
        let (lc, mc) = (lam.column(c), mu.column(c));
        if mc == lc && lc > 0 {
            let hits = partners(Cell::new(lc, c));
            if hits.len() > 1 {
                return None;
            }
            mentioned.extend(hits);
        } else if mc < lc {
            let mut row = None;
            let first = if mc > 0 { mc } else { 1 };
            for r in first..=lc {
                let hits = partners(Cell::new(r, c));
                if hits.len() != 1 {
                    return None;
                }
                let hr = added[hits[0]].row;
                if *row.get_or_insert(hr) != hr {
                    return None;
                }
                mentioned.insert(hits[0]);
            }
        }
    }
    let set_a: Vec<Cell> =
        (0..added.len()).filter(|i| !mentioned.contains(i) && added[*i].col > k).map(|i| added[i]).collect();
    let components = components(&set_a);
    let n = components.iter().filter(|comp| comp.iter().all(|b| b.col != k + 1)).count();
    let n_prime = components.len() as isize - if p > k { 1 } else { 0 };
    let delta = if conv == Convention::D {
        let g = (1..=k).filter(|&c| mu.column(c) <= lam.column(c)).count();
        let h = g + lam.ty().max(mu.ty()) as usize;
        let (delta, delta_prime) = if p != k {
            (Delta::One, Delta::One)
        } else if n_prime > 0 {
            (Delta::Half, Delta::Half)
        } else if h % 2 == 1 {
            (Delta::One, Delta::Zero)
        } else {
            (Delta::Zero, Delta::One)
        };
        Some(DeltaData { g, h, delta, delta_prime })
    } else {
        None
    };
    Some(PieriMove { source: lam.clone(), target: mu.clone(), removed, added, set_a, components, n, n_prime, delta })
}

/// Connected components under shared-vertex adjacency.
fn components(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let mut seen = vec![false; cells.len()];
    let mut out = Vec::new();
    for s in 0..cells.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = Vec::new();
        while let Some(i) = stack.pop() {
            comp.push(cells[i]);
            for j in 0..cells.len() {
                if !seen[j] && cells[i].row.abs_diff(cells[j].row) <= 1 && cells[i].col.abs_diff(cells[j].col) <= 1 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Labels reachable from `lam` by removing a vertical strip from the first k
/// columns and adding a horizontal strip, with total weight |lam|+p, inside `frame`.
pub(crate) fn candidates(frame: &Spec, lam: &Label, p: usize) -> Vec<Label> {
    let target = lam.weight() + p;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(frame.m);
    grow_rows(frame, lam, target, &mut cur, &mut out);
    out
}

fn grow_rows(frame: &Spec, lam: &Label, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Label>) {
    let i = cur.len() + 1;
    if i > frame.m {
        if left == 0 {
            let shape = Label::new(cur.clone(), 0);
            if frame.lie_type.is_even() && shape.has_part(frame.k) {
                out.push(shape.with_type(1));
                out.push(shape.with_type(2));
            } else {
                out.push(shape);
            }
        }
        return;
    }
    let li = lam.part(i);
    let lo = if li >= 1 && li <= frame.k { li - 1 } else { li };
    let mut hi = if i == 1 { frame.width() } else { lam.part(i - 1).min(cur[i - 2]) };
    if i > 1 && cur[i - 2] > frame.k {
        hi = hi.min(cur[i - 2] - 1);
    }
    let rows_left = frame.m - i + 1;
    for v in lo..=hi.min(left) {
        if v * rows_left < left {
            continue;
        }
        cur.push(v);
        grow_rows(frame, lam, left - v, cur, out);
        cur.pop();
    }
}

/// Classical coefficient carried by a move for the given special class.
pub(crate) fn move_coefficient(lie_type: LieType, mv: &PieriMove, s: SpecialClass) -> Result<BigInt> {
    let pow = |e: isize| -> Result<BigInt> {
        if e < 0 {
            return Err(Error::Finding(format!(
                "negative exponent {e} for {} -> {} (p={})",
                mv.source,
                mv.target,
                mv.p()
            )));
        }
        Ok(BigInt::one() << e as usize)
    };
    match lie_type {
        LieType::C => pow(mv.n as isize),
        LieType::B => pow(mv.n_prime),
        LieType::D | LieType::Dmax => {
            let dd = mv.delta.as_ref().expect("even type moves carry delta data");
            let d = if s.primed { dd.delta_prime } else { dd.delta };
            match d {
                Delta::Zero => Ok(BigInt::default()),
                Delta::One => pow(mv.n_prime),
                Delta::Half => pow(mv.n_prime - 1),
            }
        }
    }
}

pub fn pieri_arrow(spec: &Spec, lam: &Label, mu: &Label) -> Result<Option<PieriMove>> {
    lam.check(spec)?;
    mu.check(spec)?;
    Ok(arrow_in(spec, lam, mu))
}

/// Classical Pieri product `s * lam` inside `frame`.
pub(crate) fn classical_pieri_in(frame: &Spec, s: SpecialClass, lam: &Label) -> Result<RingElement> {
    let mut out = RingElement::zero();
    for mu in candidates(frame, lam, s.p) {
        if let Some(mv) = arrow_in(frame, lam, &mu) {
            let c = move_coefficient(frame.lie_type, &mv, s)?;
            out.add_term(mu, QExp::ZERO, c);
        }
    }
    Ok(out)
}

pub fn classical_pieri(spec: &Spec, s: SpecialClass, lam: &Label) -> Result<RingElement> {
    s.check(spec)?;
    lam.check(spec)?;
    classical_pieri_in(spec, s, lam)
}

/// Exponent relating B and C structure constants.
pub fn bc_comparison_exponent(k: usize, lam: &Label, mu: &Label, nu: &Label) -> isize {
    ell_k(nu, k) as isize - ell_k(lam, k) as isize - ell_k(mu, k) as isize
}

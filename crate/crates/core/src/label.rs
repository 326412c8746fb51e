use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::spec::{LieType, Spec};

/// A k-strict partition with a type marker (nonzero only in the even orthogonal case).
///
/// Ordering is the fixed basis order: weight ascending, then parts in
/// reverse lexicographic order, then type ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Label {
    parts: Vec<usize>,
    ty: u8,
}

impl Label {
    pub fn new(mut parts: Vec<usize>, ty: u8) -> Label {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Label { parts, ty }
    }

    pub fn plain(parts: &[usize]) -> Label {
        Label::new(parts.to_vec(), 0)
    }

    pub fn empty() -> Label {
        Label::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn ty(&self) -> u8 {
        self.ty
    }

    pub fn with_type(&self, ty: u8) -> Label {
        Label { parts: self.parts.clone(), ty }
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (1-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 { usize::MAX } else { self.parts.get(i - 1).copied().unwrap_or(0) }
    }

    /// Number of boxes in column `c` (1-based).
    pub fn column(&self, c: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    pub fn contains(&self, other: &[usize]) -> bool {
        other.len() <= self.parts.len() && other.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Drop the first row, keeping the type.
    pub fn tail(&self) -> Label {
        Label::new(self.parts.iter().skip(1).copied().collect(), self.ty)
    }

    pub fn has_part(&self, v: usize) -> bool {
        self.parts.contains(&v)
    }

    pub fn parse(s: &str) -> Result<Label> {
        let s = s.trim();
        let (body, ty) = match s.split_once(':') {
            Some((b, t)) => {
                let ty: u8 = t
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad type suffix in `{s}`")))?;
                if ty > 2 {
                    return Err(Error::Parse(format!("type must be 0, 1 or 2 in `{s}`")));
                }
                (b.trim(), ty)
            }
            None => (s, 0),
        };
        if body.is_empty() || body == "-" {
            return Ok(Label::new(Vec::new(), ty));
        }
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let v: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad part `{}` in `{s}`", tok.trim())))?;
            parts.push(v);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts must be weakly decreasing in `{s}`")));
        }
        Ok(Label::new(parts, ty))
    }

    /// Why the label is not in the basis of `spec`, if it is not.
    pub fn violation(&self, spec: &Spec) -> Option<String> {
        let k = spec.k;
        if self.parts.windows(2).any(|w| w[0] < w[1]) {
            return Some(format!("{self}: parts are not weakly decreasing"));
        }
        if self.parts.windows(2).any(|w| w[0] == w[1] && w[0] > k) {
            return Some(format!("{self}: a part greater than k={k} is repeated"));
        }
        if self.len() > spec.m {
            return Some(format!("{self}: length exceeds m={}", spec.m));
        }
        if self.part(1) > spec.width() && !self.is_empty() {
            return Some(format!("{self}: first part exceeds n+k={}", spec.width()));
        }
        if spec.lie_type.is_even() {
            let needs = self.has_part(k);
            if needs && self.ty == 0 {
                return Some(format!("{self}: has a part equal to k={k}, so a type 1 or 2 is required"));
            }
            if !needs && self.ty != 0 {
                return Some(format!("{self}: type must be 0 without a part equal to k={k}"));
            }
        } else if self.ty != 0 {
            return Some(format!("{self}: type markers only apply to D and Dmax"));
        }
        None
    }

    pub fn is_valid(&self, spec: &Spec) -> bool {
        self.violation(spec).is_none()
    }

    pub fn check(&self, spec: &Spec) -> Result<()> {
        match self.violation(spec) {
            None => Ok(()),
            Some(msg) => Err(Error::Label(msg)),
        }
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
            .then_with(|| self.ty.cmp(&other.ty))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl core::fmt::Display for Label {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.parts.is_empty() {
            f.write_str("-")?;
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        if self.ty != 0 {
            write!(f, ":{}", self.ty)?;
        }
        Ok(())
    }
}

impl core::str::FromStr for Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Label> {
        Label::parse(s)
    }
}

/// All basis labels of `spec`, in the fixed order.
pub fn enumerate_basis(spec: &Spec) -> Vec<Label> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(spec, spec.width(), &mut cur, &mut out);
    out.sort();
    out
}

fn fill(spec: &Spec, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Label>) {
    let shape = Label::new(cur.clone(), 0);
    if spec.lie_type.is_even() && shape.has_part(spec.k) {
        out.push(shape.with_type(1));
        out.push(shape.with_type(2));
    } else {
        out.push(shape);
    }
    if cur.len() == spec.m {
        return;
    }
    for v in 1..=cap {
        cur.push(v);
        let next = if v > spec.k { v - 1 } else { v };
        fill(spec, next, cur, out);
        cur.pop();
    }
}

pub fn validate_label(spec: &Spec, label: &Label) -> bool {
    label.is_valid(spec)
}

/// Number of parts strictly greater than k.
pub fn ell_k(label: &Label, k: usize) -> usize {
    label.parts().iter().filter(|&&p| p > k).count()
}

/// Staircase (d, d-1, ..., 1).
pub fn staircase(d: usize) -> Vec<usize> {
    (1..=d).rev().collect()
}

/// The containment criterion under which degree-d invariants can be nonzero.
pub fn admits_degree(lie_type: LieType, parts: &Label, d: usize) -> bool {
    match lie_type {
        LieType::C => parts.contains(&staircase(d)),
        _ => {
            if d == 0 {
                true
            } else if d % 2 == 0 {
                parts.contains(&staircase(d - 1))
            } else {
                let mut s = staircase(d - 1);
                s.push(1);
                parts.contains(&s)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::{LieType, Spec};

    #[test]
    fn type_coherence() {
        let d = Spec::new(LieType::D, 3, 4).unwrap();
        assert!(Label::parse("3,2:1").unwrap().is_valid(&d));
        assert!(Label::parse("3,2:2").unwrap().is_valid(&d));
        assert!(!Label::parse("3,2").unwrap().is_valid(&d));
        assert!(!Label::parse("3,1:1").unwrap().is_valid(&d));
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase(3), [3, 2, 1]);
        assert!(staircase(0).is_empty());
        assert!(admits_degree(LieType::B, &Label::plain(&[1]), 1));
        assert!(!admits_degree(LieType::C, &Label::plain(&[1]), 2));
    }
}

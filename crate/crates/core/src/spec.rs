use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieType {
    /// Symplectic, IG(m, 2n).
    C,
    /// Odd orthogonal, OG(m, 2n+1).
    B,
    /// Even orthogonal, OG(m, 2n+2) with m <= n.
    D,
    /// OG(n, 2n+2), the even orthogonal case with two quantum parameters.
    Dmax,
}

impl LieType {
    pub fn name(self) -> &'static str {
        match self {
            LieType::C => "C",
            LieType::B => "B",
            LieType::D => "D",
            LieType::Dmax => "Dmax",
        }
    }

    /// True when labels carry a type marker and k'-relations are used.
    pub fn is_even(self) -> bool {
        matches!(self, LieType::D | LieType::Dmax)
    }
}

impl core::str::FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C" | "c" => Ok(LieType::C),
            "B" | "b" => Ok(LieType::B),
            "D" | "d" => Ok(LieType::D),
            "Dmax" | "dmax" | "DMAX" => Ok(LieType::Dmax),
            _ => Err(Error::Parse(format!("unknown type `{s}` (expected C, B, D or Dmax)"))),
        }
    }
}

/// A Grassmannian of isotropic subspaces. Derived quantities are computed on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spec {
    pub lie_type: LieType,
    pub m: usize,
    pub n: usize,
    pub k: usize,
}

impl Spec {
    pub fn new(lie_type: LieType, m: usize, n: usize) -> Result<Spec> {
        if m == 0 || n == 0 {
            return Err(Error::Spec(format!("m and n must be positive (got m={m}, n={n})")));
        }
        let k = match lie_type {
            LieType::C | LieType::B => {
                if m > n {
                    return Err(Error::Spec(format!("{} needs m <= n (got m={m}, n={n})", lie_type.name())));
                }
                n - m
            }
            LieType::D => {
                if m == n + 1 {
                    return Err(Error::Spec(format!(
                        "D with m = n+1 is the maximal even orthogonal Grassmannian; use Dmax with m = n = {}",
                        n - 1
                    )));
                }
                if m > n {
                    return Err(Error::Spec(format!("D needs m <= n (got m={m}, n={n})")));
                }
                n + 1 - m
            }
            LieType::Dmax => {
                if m != n {
                    return Err(Error::Spec(format!("Dmax is OG(n,2n+2) and needs m = n (got m={m}, n={n})")));
                }
                1
            }
        };
        Ok(Spec { lie_type, m, n, k })
    }

    pub fn ambient(&self) -> usize {
        match self.lie_type {
            LieType::C => 2 * self.n,
            LieType::B => 2 * self.n + 1,
            LieType::D | LieType::Dmax => 2 * self.n + 2,
        }
    }

    pub fn dim(&self) -> usize {
        let (m, n) = (self.m, self.n);
        match self.lie_type {
            LieType::C | LieType::B => 2 * m * (n - m) + m * (m + 1) / 2,
            LieType::D | LieType::Dmax => 2 * m * (n + 1 - m) + m * (m - 1) / 2,
        }
    }

    pub fn q_degrees(&self) -> Vec<usize> {
        match self.lie_type {
            LieType::C => vec![self.n + self.k + 1],
            LieType::B | LieType::D => vec![self.n + self.k],
            LieType::Dmax => vec![self.n + 1, self.n + 1],
        }
    }

    pub fn num_q(&self) -> usize {
        if self.lie_type == LieType::Dmax { 2 } else { 1 }
    }

    /// Largest part allowed in a label.
    pub fn width(&self) -> usize {
        self.n + self.k
    }

    /// Rank of the cohomology ring, from the closed formula.
    pub fn rank(&self) -> u128 {
        match self.lie_type {
            LieType::C | LieType::B => (1u128 << self.m) * binomial(self.n, self.k),
            LieType::D | LieType::Dmax => (1u128 << (self.n + 1 - self.k)) * binomial(self.n + 1, self.k),
        }
    }

    pub fn check_quantum(&self) -> Result<()> {
        match self.lie_type {
            LieType::C | LieType::Dmax => Ok(()),
            LieType::B if self.k > 0 => Ok(()),
            LieType::D if self.k > 1 => Ok(()),
            LieType::B => Err(Error::Unsupported("quantum ring of OG(n,2n+1) (k = 0) is not covered".into())),
            LieType::D => Err(Error::Unsupported("quantum D with k = 1 goes through Dmax".into())),
        }
    }

    /// The space one size up with the same k, used by the quantum Pieri rules.
    pub(crate) fn grow(&self) -> Spec {
        let lie_type = if self.lie_type == LieType::Dmax { LieType::D } else { self.lie_type };
        Spec { lie_type, m: self.m + 1, n: self.n + 1, k: self.k }
    }

    /// Classical D code path for Dmax.
    pub(crate) fn classical_type(&self) -> LieType {
        if self.lie_type == LieType::Dmax { LieType::D } else { self.lie_type }
    }
}

impl core::fmt::Display for Spec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let g = if self.lie_type == LieType::C { "IG" } else { "OG" };
        write!(f, "{}({},{}) [type {}, k={}]", g, self.m, self.ambient(), self.lie_type.name(), self.k)
    }
}

pub fn make_spec(lie_type: LieType, m: usize, n: usize) -> Result<Spec> {
    Spec::new(lie_type, m, n)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

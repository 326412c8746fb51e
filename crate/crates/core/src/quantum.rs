//! Quantum Pieri rules.

use alloc::format;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::label::{admits_degree, Label};
use crate::pieri::{arrow_in, candidates, classical_pieri_in, move_coefficient, SpecialClass};
use crate::ring::{QExp, RingElement};
use crate::spec::{LieType, Spec};

pub fn quantum_pieri(spec: &Spec, s: SpecialClass, lam: &Label) -> Result<RingElement> {
    spec.check_quantum()?;
    s.check(spec)?;
    lam.check(spec)?;
    quantum_pieri_unchecked(spec, s, lam)
}

/// The one-parameter D rule read with k = 1 on the Dmax space. Identifying
/// q1 and q2 in the Dmax rule should give exactly this.
pub fn quantum_pieri_d_k1(spec: &Spec, s: SpecialClass, lam: &Label) -> Result<RingElement> {
    if spec.lie_type != LieType::Dmax {
        return Err(Error::Unsupported(format!("{spec} is not OG(n,2n+2)")));
    }
    let d = Spec { lie_type: LieType::D, ..*spec };
    s.check(&d)?;
    lam.check(&d)?;
    quantum_pieri_unchecked(&d, s, lam)
}

pub(crate) fn quantum_pieri_unchecked(spec: &Spec, s: SpecialClass, lam: &Label) -> Result<RingElement> {
    let mut out = classical_pieri_in(spec, s, lam)?;
    let (n, k) = (spec.n, spec.k);
    let big = spec.grow();
    match spec.lie_type {
        LieType::C => {
            for nu in candidates(&big, lam, s.p) {
                if nu.part(1) != n + k + 1 {
                    continue;
                }
                let Some(mv) = arrow_in(&big, lam, &nu) else { continue };
                if mv.n == 0 {
                    return Err(Error::Finding(format!("N({lam},{nu}) = 0 in the quantum C rule")));
                }
                out.add_term(nu.tail(), QExp::single(1), BigInt::one() << (mv.n - 1));
            }
        }
        LieType::B | LieType::D | LieType::Dmax => {
            let even = spec.lie_type.is_even();
            // Length, first-part and second-column limits of the auxiliary set.
            // The reduced label keeps rows 2..=nu_1-2k+slack so that degrees match.
            let (len, lo, slack) = if even { (n + 2 - k, 2 * k - 1, 2) } else { (n + 1 - k, 2 * k, 1) };
            for nu in candidates(&big, lam, s.p) {
                let nu1 = nu.part(1);
                if nu.len() != len || nu1 < lo || nu1 > n + k || nu.column(2) + 2 * k > nu1 + slack {
                    continue;
                }
                let Some(mv) = arrow_in(&big, lam, &nu) else { continue };
                let c = move_coefficient(big.lie_type, &mv, s)?;
                let r = nu1 + slack - 2 * k;
                let parts = if r > 1 { nu.parts()[1..r].to_vec() } else { alloc::vec::Vec::new() };
                let shape = Label::new(parts, 0);
                let ty = if even && shape.has_part(k) { 3 - nu.ty() } else { 0 };
                let target = shape.with_type(ty);
                if !target.is_valid(spec) {
                    return Err(Error::Finding(format!("{nu} reduces to {target}, which is not a basis label")));
                }
                let q = match spec.lie_type {
                    LieType::Dmax => match nu.ty() {
                        1 => QExp([1, 0]),
                        2 => QExp([0, 1]),
                        _ => return Err(Error::Finding(format!("{nu} has type 0 in the Dmax rule"))),
                    },
                    _ => QExp::single(1),
                };
                out.add_term(target, q, c);
            }
            if lam.part(1) == n + k {
                let star = lam.tail();
                let q = if spec.lie_type == LieType::Dmax { QExp([1, 1]) } else { QExp::single(2) };
                for rho in candidates(spec, &star, s.p) {
                    if rho.part(1) != n + k {
                        continue;
                    }
                    let Some(mv) = arrow_in(spec, &star, &rho) else { continue };
                    let c = move_coefficient(spec.lie_type, &mv, s)?;
                    out.add_term(rho.tail(), q, c);
                }
            }
        }
    }
    Ok(out)
}

/// Largest d for which the vanishing criterion does not rule out degree-d terms of `s * lam`.
pub fn max_q_degree_bound(spec: &Spec, lam: &Label, s: SpecialClass) -> usize {
    let lt = spec.classical_type();
    let bound = |l: &Label| (0..).take_while(|&d| admits_degree(lt, l, d)).last().unwrap_or(0);
    bound(lam).min(bound(&s.label(spec)))
}

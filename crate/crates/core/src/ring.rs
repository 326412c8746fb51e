use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::label::Label;
use crate::spec::Spec;

/// Exponents of the quantum parameters; the second slot is used only by Dmax.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct QExp(pub [u32; 2]);

impl QExp {
    pub const ZERO: QExp = QExp([0, 0]);

    pub fn single(d: u32) -> QExp {
        QExp([d, 0])
    }

    pub fn total(&self) -> u32 {
        self.0[0] + self.0[1]
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0]
    }

    pub fn add(self, other: QExp) -> QExp {
        QExp([self.0[0] + other.0[0], self.0[1] + other.0[1]])
    }

    /// Weighted degree under `spec`.
    pub fn degree(&self, spec: &Spec) -> usize {
        spec.q_degrees().iter().zip(self.0).map(|(d, e)| d * e as usize).sum()
    }

    pub fn as_vec(&self, num_q: usize) -> Vec<u32> {
        self.0[..num_q].to_vec()
    }

    /// `*q^d` or `*q1^a*q2^b` suffix; empty for q^0.
    pub fn suffix(&self, num_q: usize) -> String {
        let mut s = String::new();
        if num_q == 1 {
            match self.0[0] {
                0 => {}
                1 => s.push_str("*q"),
                d => {
                    let _ = write!(s, "*q^{d}");
                }
            }
        } else {
            for (i, e) in self.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => {
                        let _ = write!(s, "*q{}", i + 1);
                    }
                    e => {
                        let _ = write!(s, "*q{}^{e}", i + 1);
                    }
                }
            }
        }
        s
    }
}

impl Ord for QExp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for QExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Finitely supported map (q-exponent, label) -> integer; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RingElement {
    terms: BTreeMap<(QExp, Label), BigInt>,
}

impl RingElement {
    pub fn zero() -> RingElement {
        RingElement::default()
    }

    pub fn one() -> RingElement {
        RingElement::basis(Label::empty())
    }

    pub fn basis(label: Label) -> RingElement {
        RingElement::term(label, QExp::ZERO, BigInt::one())
    }

    pub fn term(label: Label, q: QExp, c: BigInt) -> RingElement {
        let mut r = RingElement::zero();
        r.add_term(label, q, c);
        r
    }

    pub fn add_term(&mut self, label: Label, q: QExp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (q, label);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &RingElement, c: &BigInt, shift: QExp) {
        if c.is_zero() {
            return;
        }
        for ((q, l), v) in &other.terms {
            self.add_term(l.clone(), q.add(shift), v * c);
        }
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        let mut r = self.clone();
        r.add_scaled(other, &BigInt::one(), QExp::ZERO);
        r
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        let mut r = self.clone();
        r.add_scaled(other, &-BigInt::one(), QExp::ZERO);
        r
    }

    pub fn scale(&self, c: &BigInt) -> RingElement {
        let mut r = RingElement::zero();
        r.add_scaled(self, c, QExp::ZERO);
        r
    }

    pub fn coeff(&self, label: &Label, q: QExp) -> BigInt {
        self.terms.get(&(q, label.clone())).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in output order: by q-exponent, then the fixed basis order.
    pub fn iter(&self) -> impl Iterator<Item = (&Label, QExp, &BigInt)> {
        self.terms.iter().map(|((q, l), c)| (l, *q, c))
    }

    pub fn classical_part(&self) -> RingElement {
        let terms = self.terms.iter().filter(|((q, _), _)| q.is_zero()).map(|(k, v)| (k.clone(), v.clone())).collect();
        RingElement { terms }
    }

    /// Replace (q1, q2) by (q, q).
    pub fn merge_q(&self) -> RingElement {
        let mut r = RingElement::zero();
        for ((q, l), c) in &self.terms {
            r.add_term(l.clone(), QExp::single(q.total()), c.clone());
        }
        r
    }

    pub fn max_q_total(&self) -> u32 {
        self.terms.keys().map(|(q, _)| q.total()).max().unwrap_or(0)
    }

    /// The common value of |label| + deg(q^d) if all terms agree.
    pub fn homogeneous_degree(&self, spec: &Spec) -> Option<Option<usize>> {
        let mut deg = None;
        for (q, l) in self.terms.keys() {
            let d = l.weight() + q.degree(spec);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        Some(deg)
    }

    pub fn has_negative(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    /// `<coeff>*s[parts(:type)]<q suffix>` joined by ` + `; `0` for the zero element.
    pub fn render(&self, num_q: usize) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, ((q, l), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            } else if c.is_negative() {
                s.push('-');
            }
            let _ = write!(s, "{}*s[{}]{}", c.abs(), render_parts(l), q.suffix(num_q));
        }
        s
    }
}

/// Parts with optional type suffix, empty string for the empty partition.
pub fn render_parts(l: &Label) -> String {
    if l.is_empty() && l.ty() == 0 {
        String::new()
    } else {
        alloc::format!("{l}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qexp_order_and_suffix() {
        assert!(QExp([0, 1]) > QExp([1, 0]));
        assert!(QExp([2, 0]) > QExp([0, 1]));
        assert_eq!(QExp::single(2).suffix(1), "*q^2");
        assert_eq!(QExp([1, 3]).suffix(2), "*q1*q2^3");
        assert_eq!(QExp::ZERO.suffix(2), "");
    }

    #[test]
    fn cancellation_removes_terms() {
        let l = Label::plain(&[2, 1]);
        let mut x = RingElement::term(l.clone(), QExp::ZERO, BigInt::from(3));
        x.add_term(l, QExp::ZERO, BigInt::from(-3));
        assert!(x.is_empty());
    }
}

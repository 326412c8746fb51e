#![allow(dead_code)]

use grassq_core::{BigInt, Label, LieType, QExp, RingElement, Spec};

pub fn spec(t: LieType, m: usize, n: usize) -> Spec {
    Spec::new(t, m, n).unwrap()
}

pub fn l(s: &str) -> Label {
    Label::parse(s).unwrap()
}

/// Parse `c*s[parts]*q^d + ...` (the same text the CLI prints).
pub fn elem(s: &str) -> RingElement {
    let mut out = RingElement::zero();
    let s = s.replace(" - ", " + -");
    for term in s.split(" + ") {
        let term = term.trim();
        if term.is_empty() || term == "0" {
            continue;
        }
        let (c, rest) = match term.split_once("*s[") {
            Some((c, r)) => (c.parse::<i64>().unwrap(), r),
            None => (1, term.trim_start_matches("s[")),
        };
        let (parts, qpart) = rest.split_once(']').unwrap();
        let mut q = [0u32; 2];
        for f in qpart.split('*').filter(|f| !f.is_empty()) {
            let (name, e) = match f.split_once('^') {
                Some((a, b)) => (a, b.parse().unwrap()),
                None => (f, 1),
            };
            match name {
                "q" | "q1" => q[0] += e,
                "q2" => q[1] += e,
                _ => panic!("bad factor {f}"),
            }
        }
        out.add_term(l(if parts.is_empty() { "-" } else { parts }), QExp(q), BigInt::from(c));
    }
    out
}

//! General products and Gromov-Witten invariants, by writing Schubert classes
//! as polynomials in the special classes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::index::dual;
use crate::index_pieri::classical_pieri_via_index;
use crate::label::{enumerate_basis, Label};
use crate::pieri::{classical_pieri, SpecialClass};
use crate::quantum::quantum_pieri;
use crate::ring::{QExp, RingElement};
use crate::spec::{LieType, Spec};

/// A product of special classes, largest first.
pub type Monomial = Vec<SpecialClass>;

fn normalize(mut m: Monomial) -> Monomial {
    m.sort_by(|a, b| b.cmp(a));
    m
}

/// Polynomial in the special classes and the quantum parameters.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpecialPolynomial {
    terms: BTreeMap<(Monomial, QExp), BigInt>,
}

impl SpecialPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), QExp::ZERO, BigInt::one())
    }

    pub fn monomial(m: Monomial, q: QExp, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(m, q, c);
        p
    }

    pub fn generator(s: SpecialClass) -> Self {
        Self::monomial(alloc::vec![s], QExp::ZERO, BigInt::one())
    }

    pub fn q(q: QExp) -> Self {
        Self::monomial(Vec::new(), q, BigInt::one())
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(Vec::new(), QExp::ZERO, BigInt::from(c))
    }

    pub fn add_term(&mut self, m: Monomial, q: QExp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (normalize(m), q);
        let v = self.terms.entry(key.clone()).or_default();
        *v += c;
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &BigInt, shift: QExp) {
        for ((m, q), v) in &other.terms {
            self.add_term(m.clone(), q.add(shift), v * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(other, &BigInt::one(), QExp::ZERO);
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(other, &-BigInt::one(), QExp::ZERO);
        r
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut r = Self::zero();
        r.add_scaled(self, &BigInt::from(c), QExp::ZERO);
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for ((m1, q1), c1) in &self.terms {
            for ((m2, q2), c2) in &other.terms {
                let mut m = m1.clone();
                m.extend_from_slice(m2);
                r.add_term(m, q1.add(*q2), c1 * c2);
            }
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[SpecialClass], q: QExp) -> BigInt {
        self.terms.get(&(normalize(m.to_vec()), q)).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, QExp, &BigInt)> {
        self.terms.iter().map(|((m, q), c)| (m, *q, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree of each term, if they all agree.
    pub fn homogeneous_degree(&self, spec: &Spec) -> Option<usize> {
        let mut out = None;
        for (m, q) in self.terms.keys() {
            let d = m.iter().map(|s| s.p).sum::<usize>() + q.degree(spec);
            if *out.get_or_insert(d) != d {
                return None;
            }
        }
        out
    }

    /// Text form such as `s4*s2^2 - s4*s3*s1 - q`; generators are `s` for C and `t` otherwise.
    pub fn render(&self, spec: &Spec) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let g = if spec.lie_type == LieType::C { "s" } else { "t" };
        let mut out = String::new();
        // Longest monomials first, then lexicographic, q terms last.
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| b.0 .0.len().cmp(&a.0 .0.len()).then(a.0 .0.cmp(&b.0 .0)).then(a.0 .1.cmp(&b.0 .1)));
        for (i, ((m, q), c)) in keys.into_iter().enumerate() {
            if i > 0 {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            } else if c.is_negative() {
                out.push('-');
            }
            let mut factors: Vec<String> = Vec::new();
            let mut j = 0;
            while j < m.len() {
                let mut e = 1;
                while j + e < m.len() && m[j + e] == m[j] {
                    e += 1;
                }
                let name = format!("{g}{}{}", if m[j].primed { "'" } else { "" }, m[j].p);
                factors.push(if e > 1 { format!("{name}^{e}") } else { name });
                j += e;
            }
            let qs = q.suffix(spec.num_q());
            if !qs.is_empty() {
                factors.push(String::from(&qs[1..]));
            }
            let mag = c.abs();
            if factors.is_empty() {
                let _ = write!(out, "{mag}");
            } else if mag.is_one() {
                out.push_str(&factors.join("*"));
            } else {
                let _ = write!(out, "{mag}*{}", factors.join("*"));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Classical,
    Quantum,
}

/// Caches Pieri products and special-class expressions for one spec.
/// A session is single-threaded by construction (`&mut self`).
#[derive(Debug)]
pub struct Session {
    spec: Spec,
    mode: Mode,
    oracle: bool,
    pieri: BTreeMap<(SpecialClass, Label), Rc<RingElement>>,
    exprs: BTreeMap<Label, Rc<SpecialPolynomial>>,
    active: BTreeSet<Label>,
    fallbacks: usize,
}

impl Session {
    pub fn new(spec: Spec, mode: Mode) -> Result<Session> {
        if mode == Mode::Quantum {
            spec.check_quantum()?;
        }
        Ok(Session {
            spec,
            mode,
            oracle: false,
            pieri: BTreeMap::new(),
            exprs: BTreeMap::new(),
            active: BTreeSet::new(),
            fallbacks: 0,
        })
    }

    pub fn classical(spec: Spec) -> Session {
        Session::new(spec, Mode::Classical).expect("classical sessions always exist")
    }

    pub fn quantum(spec: Spec) -> Result<Session> {
        Session::new(spec, Mode::Quantum)
    }

    /// Route classical Pieri products through the index-set rules.
    pub fn with_oracle(mut self, oracle: bool) -> Session {
        self.oracle = oracle;
        self
    }

    pub fn spec(&self) -> &Spec {
        &self.spec
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// How many weights needed the linear-system fallback.
    pub fn fallbacks(&self) -> usize {
        self.fallbacks
    }

    pub fn generators(&self) -> Vec<SpecialClass> {
        let mut g: Vec<SpecialClass> = (1..=self.spec.width()).map(SpecialClass::new).collect();
        if self.spec.lie_type.is_even() {
            g.push(SpecialClass::primed(self.spec.k));
        }
        g
    }

    pub fn pieri(&mut self, s: SpecialClass, lam: &Label) -> Result<Rc<RingElement>> {
        if let Some(r) = self.pieri.get(&(s, lam.clone())) {
            return Ok(r.clone());
        }
        let r = match (self.mode, self.oracle) {
            (Mode::Quantum, _) => quantum_pieri(&self.spec, s, lam)?,
            (Mode::Classical, false) => classical_pieri(&self.spec, s, lam)?,
            (Mode::Classical, true) => classical_pieri_via_index(&self.spec, s, lam)?,
        };
        let r = Rc::new(r);
        self.pieri.insert((s, lam.clone()), r.clone());
        Ok(r)
    }

    pub fn apply_special(&mut self, s: SpecialClass, x: &RingElement) -> Result<RingElement> {
        let mut out = RingElement::zero();
        for (l, q, c) in x.iter() {
            let r = self.pieri(s, l)?;
            out.add_scaled(&r, c, q);
        }
        Ok(out)
    }

    /// Multiply `x` by the factors of `m`, rightmost first.
    pub fn apply_monomial(&mut self, m: &[SpecialClass], x: &RingElement) -> Result<RingElement> {
        let mut cur = x.clone();
        for s in m.iter().rev() {
            cur = self.apply_special(*s, &cur)?;
        }
        Ok(cur)
    }

    pub fn evaluate_on(&mut self, f: &SpecialPolynomial, x: &RingElement) -> Result<RingElement> {
        let mut out = RingElement::zero();
        for (m, q, c) in f.iter() {
            let r = self.apply_monomial(m, x)?;
            out.add_scaled(&r, c, q);
        }
        if self.mode == Mode::Classical {
            out = out.classical_part();
        }
        Ok(out)
    }

    pub fn evaluate(&mut self, f: &SpecialPolynomial) -> Result<RingElement> {
        self.evaluate_on(f, &RingElement::one())
    }

    /// The monomial attached to a label (type 2 uses the primed class for parts equal to k).
    pub fn label_monomial(&self, lam: &Label) -> Monomial {
        let k = self.spec.k;
        normalize(
            lam.parts()
                .iter()
                .map(|&p| SpecialClass { p, primed: self.spec.lie_type.is_even() && lam.ty() == 2 && p == k })
                .collect(),
        )
    }

    pub fn express(&mut self, lam: &Label) -> Result<Rc<SpecialPolynomial>> {
        lam.check(&self.spec)?;
        if let Some(f) = self.exprs.get(lam) {
            return Ok(f.clone());
        }
        if let Some(f) = self.express_recursive(lam)? {
            return Ok(f);
        }
        self.fallbacks += 1;
        self.solve_weight(lam.weight())?;
        self.exprs.get(lam).cloned().ok_or_else(|| Error::Finding(format!("no expression for {lam}")))
    }

    /// None signals a triangularity failure (leading coefficient or cycle).
    fn express_recursive(&mut self, lam: &Label) -> Result<Option<Rc<SpecialPolynomial>>> {
        if let Some(f) = self.exprs.get(lam) {
            return Ok(Some(f.clone()));
        }
        if !self.active.insert(lam.clone()) {
            return Ok(None);
        }
        let res = self.express_step(lam);
        self.active.remove(lam);
        let f = match res? {
            Some(f) => Rc::new(f),
            None => return Ok(None),
        };
        self.exprs.insert(lam.clone(), f.clone());
        Ok(Some(f))
    }

    fn express_step(&mut self, lam: &Label) -> Result<Option<SpecialPolynomial>> {
        let mono = self.label_monomial(lam);
        let e = self.apply_monomial(&mono, &RingElement::one())?;
        if !e.coeff(lam, QExp::ZERO).is_one() {
            return Ok(None);
        }
        let mut f = SpecialPolynomial::monomial(mono, QExp::ZERO, BigInt::one());
        for (mu, q, c) in e.iter() {
            if mu == lam && q.is_zero() {
                continue;
            }
            let g = if q.is_zero() {
                match self.express_recursive(mu)? {
                    Some(g) => g,
                    None => return Ok(None),
                }
            } else {
                self.express(mu)?
            };
            f.add_scaled(&g, &-c.clone(), q);
        }
        Ok(Some(f))
    }

    /// Solve for every label of weight `w` at once from the monomials of that weight.
    /// `express` only falls back to this when the recursion stalls.
    pub fn solve_weight(&mut self, w: usize) -> Result<()> {
        let labels: Vec<Label> = enumerate_basis(&self.spec).into_iter().filter(|l| l.weight() == w).collect();
        let pos: BTreeMap<&Label, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let size = labels.len();
        // Row i: monomial of labels[i] minus its quantum corrections, and its classical expansion.
        let mut rows: Vec<SpecialPolynomial> = Vec::with_capacity(size);
        let mut mat: Vec<Vec<BigInt>> = Vec::with_capacity(size);
        for lam in &labels {
            let mono = self.label_monomial(lam);
            let e = self.apply_monomial(&mono, &RingElement::one())?;
            let mut f = SpecialPolynomial::monomial(mono, QExp::ZERO, BigInt::one());
            let mut row = alloc::vec![BigInt::zero(); size];
            for (mu, q, c) in e.iter() {
                if q.is_zero() {
                    row[pos[mu]] = c.clone();
                } else {
                    let g = self.express(mu)?;
                    f.add_scaled(&g, &-c.clone(), q);
                }
            }
            rows.push(f);
            mat.push(row);
        }
        let inv = invert_integer(mat).ok_or_else(|| {
            Error::Finding(format!("monomials of weight {w} do not span the integral basis"))
        })?;
        for (j, mu) in labels.iter().enumerate() {
            let mut f = SpecialPolynomial::zero();
            for (i, row) in rows.iter().enumerate() {
                // rows = M * sigma, so sigma = M^-1 * rows.
                f.add_scaled(row, &inv[j][i], QExp::ZERO);
            }
            self.exprs.insert(mu.clone(), Rc::new(f));
        }
        Ok(())
    }

    pub fn product(&mut self, lam: &Label, mu: &Label) -> Result<RingElement> {
        mu.check(&self.spec)?;
        let f = self.express(lam)?;
        self.evaluate_on(&f, &RingElement::basis(mu.clone()))
    }

    pub fn gromov_witten(&mut self, lam: &Label, mu: &Label, nu: &Label, d: QExp) -> Result<BigInt> {
        for l in [lam, mu, nu] {
            l.check(&self.spec)?;
        }
        if self.spec.num_q() == 1 && d.0[1] != 0 {
            return Err(Error::Degree("this space has a single quantum parameter".into()));
        }
        if self.mode == Mode::Classical && !d.is_zero() {
            return Err(Error::Unsupported("positive degree in a classical session".into()));
        }
        let total = lam.weight() + mu.weight() + nu.weight();
        let want = self.spec.dim() + d.degree(&self.spec);
        if total != want {
            return Err(Error::Degree(format!(
                "|{lam}|+|{mu}|+|{nu}| = {total}, but dim + deg(q^d) = {want}"
            )));
        }
        let target = dual(&self.spec, nu)?;
        Ok(self.product(lam, mu)?.coeff(&target, d))
    }
}

/// Inverse of a square integer matrix whose inverse is integral.
fn invert_integer(mut a: Vec<Vec<BigInt>>) -> Option<Vec<Vec<BigInt>>> {
    let n = a.len();
    // Fraction-free elimination to the identity, tracking a common denominator per row.
    let mut inv: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let (x, y) = (a[col][col].clone(), a[r][col].clone());
            let g = x.gcd(&y);
            let (fx, fy) = (&x / &g, &y / &g);
            for c in 0..n {
                let v = &a[r][c] * &fx - &a[col][c] * &fy;
                a[r][c] = v;
                let v = &inv[r][c] * &fx - &inv[col][c] * &fy;
                inv[r][c] = v;
            }
        }
    }
    for r in 0..n {
        let d = a[r][r].clone();
        for c in 0..n {
            if !(&inv[r][c] % &d).is_zero() {
                return None;
            }
            inv[r][c] = &inv[r][c] / &d;
        }
    }
    Some(inv)
}

pub fn express_in_specials(spec: &Spec, lam: &Label) -> Result<SpecialPolynomial> {
    let mut s = Session::quantum(*spec)?;
    Ok((*s.express(lam)?).clone())
}

pub fn quantum_product(spec: &Spec, lam: &Label, mu: &Label) -> Result<RingElement> {
    Session::quantum(*spec)?.product(lam, mu)
}

pub fn classical_product(spec: &Spec, lam: &Label, mu: &Label) -> Result<RingElement> {
    Session::classical(*spec).product(lam, mu)
}

pub fn gromov_witten(spec: &Spec, lam: &Label, mu: &Label, nu: &Label, d: QExp) -> Result<BigInt> {
    let mode = if d.is_zero() && spec.check_quantum().is_err() { Mode::Classical } else { Mode::Quantum };
    Session::new(*spec, mode)?.gromov_witten(lam, mu, nu, d)
}

/// Degree-one invariant `<lam, mu, nu>_1` computed two ways.
///
/// For C this is compared with half the classical triple intersection on
/// IG(m+1, 2n+2). For B and D, `nu` must be a special class and the
/// comparison space is OG(m+1, N) with the first columns of `lam` and `mu`
/// deleted.
pub fn degree_one_crosscheck(spec: &Spec, lam: &Label, mu: &Label, nu: &Label) -> Result<(BigInt, BigInt)> {
    for l in [lam, mu, nu] {
        l.check(spec)?;
    }
    let (m, n, k) = (spec.m, spec.n, spec.k);
    match spec.lie_type {
        LieType::C => {
            if lam.len() + mu.len() + nu.len() > 2 * m + 1 {
                return Err(Error::Unsupported(format!(
                    "length condition fails: {} + {} + {} > 2m+1 = {}",
                    lam.len(),
                    mu.len(),
                    nu.len(),
                    2 * m + 1
                )));
            }
        }
        LieType::B if k == 0 => return Err(Error::Unsupported("B needs k > 0".into())),
        LieType::D if k < 2 => return Err(Error::Unsupported("D needs k > 1".into())),
        LieType::Dmax => return Err(Error::Unsupported("no degree-one reduction for Dmax".into())),
        _ => {
            if nu.len() != 1 {
                return Err(Error::Unsupported(format!("the third class {nu} must be special")));
            }
        }
    }
    let lhs = gromov_witten(spec, lam, mu, nu, QExp::single(1))?;
    let rhs = match spec.lie_type {
        LieType::C => {
            let big = spec.grow();
            let mut s = Session::classical(big).with_oracle(true);
            let target = dual(&big, nu)?;
            let full = s.product(lam, mu)?.coeff(&target, QExp::ZERO);
            let (half, rem) = full.div_rem(&BigInt::from(2));
            if !rem.is_zero() {
                return Err(Error::Finding(format!("odd classical number {full} on {big}")));
            }
            half
        }
        _ => {
            let small = Spec { lie_type: spec.lie_type, m: m + 1, n, k: k - 1 };
            let bar = |l: &Label| Label::new(l.parts().iter().map(|&x| x.saturating_sub(1)).collect(), l.ty());
            let (lb, mb) = (bar(lam), bar(mu));
            let p = nu.part(1);
            if lb.weight() + mb.weight() + p - 1 != small.dim() {
                BigInt::zero()
            } else {
                let mut s = Session::classical(small).with_oracle(true);
                let target = dual(&small, &mb)?;
                if p == 1 {
                    if lb == target { BigInt::one() } else { BigInt::zero() }
                } else {
                    let sc = SpecialClass { p: p - 1, primed: nu.ty() == 2 };
                    s.pieri(sc, &lb)?.coeff(&target, QExp::ZERO)
                }
            }
        }
    };
    Ok((lhs, rhs))
}

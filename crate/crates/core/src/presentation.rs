//! Ring presentations by special classes, checked by evaluation in the
//! rings computed from the Pieri rules.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::engine::{Mode, Session, SpecialPolynomial};
use crate::error::Result;
use crate::label::{enumerate_basis, Label};
use crate::pieri::SpecialClass;
use crate::ring::{QExp, RingElement};
use crate::spec::{LieType, Spec};

/// Polynomial in the generators of the presentation (and q).
pub type GeneratorPolynomial = SpecialPolynomial;

/// Which entries fill the Schur determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// `a_i = sigma_i`.
    Cd,
    /// `a_i = delta_i tau_i`, with `delta_i = 2` once `i > k`.
    BWeighted,
    /// `a_i = c_i`: `tau_i` below k, `tau_k + tau'_k` at k, `2 tau_i` above.
    DDelta,
}

impl Flavor {
    pub fn of(lie_type: LieType) -> Flavor {
        match lie_type {
            LieType::C => Flavor::Cd,
            LieType::B => Flavor::BWeighted,
            LieType::D | LieType::Dmax => Flavor::DDelta,
        }
    }
}

fn gen(p: usize) -> GeneratorPolynomial {
    if p == 0 {
        GeneratorPolynomial::one()
    } else {
        GeneratorPolynomial::generator(SpecialClass::new(p))
    }
}

fn gen_primed(p: usize) -> GeneratorPolynomial {
    GeneratorPolynomial::generator(SpecialClass::primed(p))
}

/// `tau_p`, with `tau_0 = 1` and zero past the width.
fn tau(spec: &Spec, p: usize) -> GeneratorPolynomial {
    if p > spec.width() {
        GeneratorPolynomial::zero()
    } else {
        gen(p)
    }
}

fn delta(spec: &Spec, p: usize) -> i64 {
    if p == 0 || p <= spec.k { 1 } else { 2 }
}

/// The i-th entry `a_i` of the determinant; `a_0 = 1`.
pub fn entry(spec: &Spec, flavor: Flavor, i: usize) -> GeneratorPolynomial {
    if i == 0 {
        return GeneratorPolynomial::one();
    }
    if i > spec.width() {
        return GeneratorPolynomial::zero();
    }
    match flavor {
        Flavor::Cd => gen(i),
        Flavor::BWeighted => gen(i).scale(delta(spec, i)),
        Flavor::DDelta if i < spec.k => gen(i),
        Flavor::DDelta if i == spec.k => gen(i).add(&gen_primed(i)),
        Flavor::DDelta => gen(i).scale(2),
    }
}

/// `det(a_{1+j-i})` of size r, via `d_r = a_1 d_{r-1} - a_2 d_{r-2} + ...`.
pub fn schur_determinant(spec: &Spec, r: usize, flavor: Flavor) -> GeneratorPolynomial {
    schur_table(spec, r, flavor).pop().unwrap_or_else(GeneratorPolynomial::one)
}

/// `d_0, ..., d_r`.
pub fn schur_table(spec: &Spec, r: usize, flavor: Flavor) -> Vec<GeneratorPolynomial> {
    let a: Vec<_> = (0..=r).map(|i| entry(spec, flavor, i)).collect();
    let mut d: Vec<GeneratorPolynomial> = Vec::with_capacity(r + 1);
    d.push(GeneratorPolynomial::one());
    for s in 1..=r {
        let mut x = GeneratorPolynomial::zero();
        for i in 1..=s {
            let t = a[i].mul(&d[s - i]);
            x = if i % 2 == 1 { x.add(&t) } else { x.sub(&t) };
        }
        d.push(x);
    }
    d
}

/// One relation `lhs = rhs` of the presentation.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub degree: usize,
    pub lhs: GeneratorPolynomial,
    pub rhs: GeneratorPolynomial,
}

impl Relation {
    fn new(name: String, degree: usize, lhs: GeneratorPolynomial, rhs: GeneratorPolynomial) -> Relation {
        Relation { name, degree, lhs, rhs }
    }

    fn zero(name: String, degree: usize, lhs: GeneratorPolynomial) -> Relation {
        Relation::new(name, degree, lhs, GeneratorPolynomial::zero())
    }

    pub fn difference(&self) -> GeneratorPolynomial {
        self.lhs.sub(&self.rhs)
    }
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 { 1 } else { -1 }
}

fn qpoly(a: u32, b: u32) -> GeneratorPolynomial {
    GeneratorPolynomial::q(QExp([a, b]))
}

/// Generators of the presentation for `spec`.
pub fn generators(spec: &Spec) -> Vec<SpecialClass> {
    let mut g: Vec<SpecialClass> = (1..=spec.width()).map(SpecialClass::new).collect();
    if spec.lie_type.is_even() {
        g.insert(spec.k, SpecialClass::primed(spec.k));
    }
    g
}

/// The defining relations in `mode`; quantum mode checks that the spec is supported.
pub fn relations(spec: &Spec, mode: Mode) -> Result<Vec<Relation>> {
    if mode == Mode::Quantum {
        spec.check_quantum()?;
    }
    let quantum = mode == Mode::Quantum;
    let (n, k) = (spec.n, spec.k);
    let flavor = Flavor::of(spec.lie_type);
    let d = schur_table(spec, n + k, flavor);
    let mut out = Vec::new();
    match spec.lie_type {
        LieType::C => {
            for r in n - k + 1..=n + k {
                out.push(Relation::zero(format!("R1 r={r}"), r, d[r].clone()));
            }
            for r in k + 1..=n {
                let mut lhs = gen(r).mul(&gen(r));
                for i in 1..=(n + k - r).min(r) {
                    lhs = lhs.add(&gen(r + i).mul(&gen(r - i)).scale(2 * sign(i)));
                }
                let rhs = if quantum && 2 * r > n + k {
                    gen(2 * r - n - k - 1).mul(&qpoly(1, 0)).scale(sign(n + k - r))
                } else {
                    GeneratorPolynomial::zero()
                };
                out.push(Relation::new(format!("R2 r={r}"), 2 * r, lhs, rhs));
            }
        }
        LieType::B => {
            for r in n - k + 1..=n {
                out.push(Relation::zero(format!("R1 r={r}"), r, d[r].clone()));
            }
            for r in n + 1..=n + k {
                let mut lhs = GeneratorPolynomial::zero();
                for p in k + 1..=r {
                    lhs = lhs.add(&gen(p).mul(&d[r - p]).scale(sign(p)));
                }
                if quantum && r == n + k {
                    out.push(Relation::new(format!("R1'' r={r}"), r, lhs, qpoly(1, 0)));
                } else {
                    out.push(Relation::zero(format!("R1' r={r}"), r, lhs));
                }
            }
            for r in k + 1..=n {
                let mut lhs = gen(r).mul(&gen(r));
                for i in 1..=r {
                    lhs = lhs.add(&tau(spec, r + i).mul(&gen(r - i)).scale(sign(i) * delta(spec, r - i)));
                }
                out.push(Relation::zero(format!("R2 r={r}"), 2 * r, lhs));
            }
        }
        LieType::D | LieType::Dmax => {
            let two_q = spec.lie_type == LieType::Dmax && quantum;
            for r in n - k + 2..=n {
                out.push(Relation::zero(format!("R1 r={r}"), r, d[r].clone()));
            }
            let mut tail = GeneratorPolynomial::zero();
            for p in k + 1..=n + 1 {
                tail = tail.add(&tau(spec, p).mul(&d[n + 1 - p]).scale(sign(p + k + 1)));
            }
            let base = d[n + 1 - k].clone();
            let mut unprimed = gen(k).mul(&base);
            let mut primed = gen_primed(k).mul(&base);
            if two_q {
                unprimed = unprimed.sub(&qpoly(1, 0));
                primed = primed.sub(&qpoly(0, 1));
            }
            out.push(Relation::new(format!("R1' tau{k}"), n + 1, unprimed, tail.clone()));
            out.push(Relation::new(format!("R1' tau'{k}"), n + 1, primed, tail));
            for r in n + 2..=n + k {
                let mut lhs = GeneratorPolynomial::zero();
                for p in k + 1..=r {
                    lhs = lhs.add(&tau(spec, p).mul(&d[r - p]).scale(sign(p)));
                }
                if quantum && r == n + k {
                    out.push(Relation::new(format!("R1q r={r}"), r, lhs, qpoly(1, 0).scale(-1)));
                } else {
                    out.push(Relation::zero(format!("R1'' r={r}"), r, lhs));
                }
            }
            for r in k + 1..=n {
                let mut lhs = gen(r).mul(&gen(r));
                for i in 1..=r {
                    lhs = lhs.add(&tau(spec, r + i).mul(&entry(spec, flavor, r - i)).scale(sign(i)));
                }
                out.push(Relation::zero(format!("R2 r={r}"), 2 * r, lhs));
            }
            let mut lhs = gen(k).mul(&gen_primed(k));
            for i in 1..=k {
                lhs = lhs.add(&tau(spec, k + i).mul(&gen(k - i)).scale(sign(i)));
            }
            out.push(Relation::zero(String::from("R2'"), 2 * k, lhs));
        }
    }
    Ok(out)
}

/// Value of `poly` in H* (classical) or QH* (quantum).
pub fn evaluate(spec: &Spec, poly: &GeneratorPolynomial, mode: Mode) -> Result<RingElement> {
    Session::new(*spec, mode)?.evaluate(poly)
}

#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub name: String,
    pub degree: usize,
    /// `lhs - rhs` evaluated in the ring.
    pub residual: RingElement,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Debug, Clone)]
pub struct PresentationReport {
    pub spec: Spec,
    pub mode: Mode,
    pub checks: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(RelationCheck::passed)
    }
}

pub fn verify_presentation(spec: &Spec, mode: Mode) -> Result<PresentationReport> {
    verify_in(&mut Session::new(*spec, mode)?)
}

/// Same as `verify_presentation`, reusing the caches of `session`.
pub fn verify_in(session: &mut Session) -> Result<PresentationReport> {
    let spec = *session.spec();
    let mut checks = Vec::new();
    for rel in relations(&spec, session.mode())? {
        let residual = session.evaluate(&rel.difference())?;
        checks.push(RelationCheck { name: rel.name, degree: rel.degree, residual });
    }
    Ok(PresentationReport { spec, mode: session.mode(), checks })
}

#[derive(Debug, Clone)]
pub struct BasisReport {
    pub basis_size: usize,
    /// Product of relation degrees over product of generator degrees.
    pub degree_ratio: BigInt,
    /// Whether that ratio is an integer at all.
    pub ratio_exact: bool,
    /// Labels whose monomial is not its class plus strictly dominant terms.
    pub triangularity_failures: Vec<Label>,
}

impl BasisReport {
    pub fn passed(&self) -> bool {
        self.ratio_exact
            && self.degree_ratio == BigInt::from(self.basis_size)
            && self.triangularity_failures.is_empty()
    }
}

fn strictly_dominates(mu: &Label, lam: &Label) -> bool {
    if mu.parts() == lam.parts() {
        return false;
    }
    let (mut a, mut b) = (0usize, 0usize);
    for i in 1..=mu.len().max(lam.len()) {
        a += mu.part(i);
        b += lam.part(i);
        if a < b {
            return false;
        }
    }
    true
}

/// Rank count and unitriangularity of the monomial basis, classically.
pub fn basis_check(spec: &Spec) -> Result<BasisReport> {
    let mut session = Session::classical(*spec);
    let basis = enumerate_basis(spec);
    let mut failures = Vec::new();
    for lam in &basis {
        let mono = session.label_monomial(lam);
        let e = session.apply_monomial(&mono, &RingElement::one())?;
        let ok = e.coeff(lam, QExp::ZERO).is_one()
            && e.iter().all(|(mu, q, _)| q.is_zero() && (mu == lam || strictly_dominates(mu, lam)));
        if !ok {
            failures.push(lam.clone());
        }
    }
    let num: BigInt = relations(spec, Mode::Classical)?.iter().map(|r| BigInt::from(r.degree)).product();
    let den: BigInt = generators(spec).iter().map(|g| BigInt::from(g.p)).product();
    Ok(BasisReport {
        basis_size: basis.len(),
        degree_ratio: &num / &den,
        ratio_exact: (&num % &den).is_zero(),
        triangularity_failures: failures,
    })
}

/// Coefficient checks of the two generating-function identities
/// `(sum a_i t^i)(sum (-1)^i d_i t^i) = 1` and
/// `(sum a_i t^i)(sum (-1)^i a_i t^i) = sum (-1)^i b_i t^{2i}`,
/// where `b_r = a_r^2 + 2 sum_i (-1)^i a_{r+i} a_{r-i}`. Purely symbolic.
pub fn power_series_identities(spec: &Spec, flavor: Flavor) -> bool {
    let top = 2 * spec.width();
    let a: Vec<_> = (0..=top).map(|i| entry(spec, flavor, i)).collect();
    let d = schur_table(spec, top, flavor);
    for j in 1..=top {
        let mut s = GeneratorPolynomial::zero();
        for i in 0..=j {
            s = s.add(&a[i].mul(&d[j - i]).scale(sign(j - i)));
        }
        if !s.is_zero() {
            return false;
        }
    }
    for j in 0..=top {
        let mut s = GeneratorPolynomial::zero();
        for i in 0..=j {
            s = s.add(&a[i].mul(&a[j - i]).scale(sign(j - i)));
        }
        let expect = if j % 2 == 1 {
            GeneratorPolynomial::zero()
        } else {
            let r = j / 2;
            let mut b = a[r].mul(&a[r]);
            for i in 1..=r {
                b = b.add(&a[r + i].mul(&a[r - i]).scale(2 * sign(i)));
            }
            b.scale(sign(r))
        };
        if s != expect {
            return false;
        }
    }
    true
}

/// Classical values of `d_r` for `n+k < r <= 2n` on a C spec; all should vanish.
pub fn redundant_determinants(spec: &Spec) -> Result<Vec<(usize, RingElement)>> {
    let mut session = Session::classical(*spec);
    let d = schur_table(spec, 2 * spec.n, Flavor::Cd);
    let mut out = Vec::new();
    for (r, dr) in d.iter().enumerate().skip(spec.width() + 1) {
        out.push((r, session.evaluate(dr)?));
    }
    Ok(out)
}

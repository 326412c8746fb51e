//! Argument handling, dispatch and rendering for the `grassq` binary.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use grassq_core::index::{label_to_partition_pair, partition_pair_to_label, PartitionPair};
use grassq_core::index_pieri::{classical_pieri_via_index_with, CandidateSource};
use grassq_core::presentation::{basis_check, verify_presentation};
use grassq_core::{
    classical_pieri, dual, enumerate_basis, index_set_to_label, label_to_index_set, quantum_pieri, BigInt, Error,
    IndexSet, Label, LieType, Mode, QExp, RingElement, Session, SpecialClass, Spec,
};
use serde::{Deserialize, Serialize};

pub const DEFAULT_MAX_N: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "grassq", version, about = "Schubert calculus on isotropic Grassmannians")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    /// C, B, D or Dmax
    #[arg(long = "type")]
    pub lie_type: String,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SpecialArgs {
    #[arg(long)]
    pub p: usize,
    /// Use the primed class (D and Dmax, p = k)
    #[arg(long)]
    pub primed: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classical product of a special class with a Schubert class
    Pieri {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        special: SpecialArgs,
        label: String,
        /// Use the index-set rule
        #[arg(long)]
        oracle: bool,
    },
    /// Quantum product of a special class with a Schubert class
    Qpieri {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        special: SpecialArgs,
        label: String,
    },
    /// Classical product of two Schubert classes
    Product {
        #[command(flatten)]
        spec: SpecArgs,
        left: String,
        right: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Quantum product of two Schubert classes
    Qproduct {
        #[command(flatten)]
        spec: SpecArgs,
        left: String,
        right: String,
    },
    /// Three-point, genus zero Gromov-Witten invariant
    Gw {
        #[command(flatten)]
        spec: SpecArgs,
        a: String,
        b: String,
        c: String,
        #[arg(long, conflicts_with_all = ["d1", "d2"])]
        d: Option<u32>,
        #[arg(long)]
        d1: Option<u32>,
        #[arg(long)]
        d2: Option<u32>,
        /// Use the index-set rule (degree zero only)
        #[arg(long)]
        oracle: bool,
    },
    /// Poincare dual class
    Dual {
        #[command(flatten)]
        spec: SpecArgs,
        label: String,
    },
    /// Translate between partitions, index sets and partition pairs
    Convert {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(required_unless_present_any = ["index", "pair"])]
        label: Option<String>,
        /// Index set such as `2,5,7`
        #[arg(long, conflicts_with_all = ["label", "pair"])]
        index: Option<String>,
        /// Partition pair `alpha/beta`, e.g. `1/4`
        #[arg(long, conflicts_with = "label")]
        pair: Option<String>,
    },
    /// List the Schubert basis
    Basis {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Check presentations, the monomial basis and the index-set rules
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub m: usize,
    pub n: usize,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Vec<usize>,
    #[serde(rename = "type")]
    pub ty: u8,
    pub q: Vec<u32>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub spec: SpecJson,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueJson {
    pub spec: SpecJson,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub partition: Vec<usize>,
    #[serde(rename = "type")]
    pub ty: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassOutJson {
    pub spec: SpecJson,
    pub class: ClassJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvertJson {
    pub spec: SpecJson,
    pub class: ClassJson,
    pub index: Vec<usize>,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub spec: SpecJson,
    pub count: usize,
    pub basis: Vec<ClassJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub spec: SpecJson,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

pub fn spec_json(spec: &Spec) -> SpecJson {
    SpecJson { lie_type: spec.lie_type.name().into(), m: spec.m, n: spec.n, k: spec.k }
}

fn class_json(l: &Label) -> ClassJson {
    ClassJson { partition: l.parts().to_vec(), ty: l.ty() }
}

pub fn element_json(spec: &Spec, e: &RingElement) -> ElementJson {
    let terms = e
        .iter()
        .map(|(l, q, c)| TermJson {
            partition: l.parts().to_vec(),
            ty: l.ty(),
            q: q.as_vec(spec.num_q()),
            coeff: c.to_string(),
        })
        .collect();
    ElementJson { spec: spec_json(spec), terms }
}

/// Inverse of [`element_json`].
pub fn element_from_json(j: &ElementJson) -> Result<(Spec, RingElement), Error> {
    let spec = Spec::new(j.spec.lie_type.parse()?, j.spec.m, j.spec.n)?;
    let mut e = RingElement::zero();
    for t in &j.terms {
        let mut q = [0u32; 2];
        if t.q.len() != spec.num_q() {
            return Err(Error::Parse(format!("expected {} q exponents, got {}", spec.num_q(), t.q.len())));
        }
        q[..t.q.len()].copy_from_slice(&t.q);
        let c: BigInt = t.coeff.parse().map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.coeff)))?;
        e.add_term(Label::new(t.partition.clone(), t.ty), QExp(q), c);
    }
    Ok((spec, e))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(msg: String) -> Outcome {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

fn max_n() -> Result<usize, String> {
    match std::env::var("GRASSQ_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| format!("GRASSQ_MAX_N must be an integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn build_spec(a: &SpecArgs) -> Result<Spec, String> {
    let t: LieType = a.lie_type.parse().map_err(|e: Error| e.to_string())?;
    let cap = max_n()?;
    if a.n > cap {
        return Err(format!("n = {} exceeds GRASSQ_MAX_N = {cap}", a.n));
    }
    Spec::new(t, a.m, a.n).map_err(|e| e.to_string())
}

fn parse_label(spec: &Spec, s: &str) -> Result<Label, Error> {
    let l = Label::parse(s)?;
    l.check(spec)?;
    Ok(l)
}

fn parse_list(s: &str) -> Result<Vec<usize>, Error> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad entry `{}` in `{s}`", t.trim()))))
        .collect()
}

fn join(v: &[usize]) -> String {
    if v.is_empty() {
        "-".into()
    } else {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("output types serialize");
    s.push('\n');
    s
}

fn element_out(spec: &Spec, e: &RingElement, json: bool) -> String {
    if json {
        to_json(&element_json(spec, e))
    } else {
        format!("{}\n", e.render(spec.num_q()))
    }
}

fn special(spec: &Spec, a: &SpecialArgs) -> Result<SpecialClass, Error> {
    let s = SpecialClass { p: a.p, primed: a.primed };
    s.check(spec)?;
    Ok(s)
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(o) => o,
        Err(msg) => Outcome::error(msg),
    }
}

fn dispatch(cmd: Command) -> Result<Outcome, String> {
    let e2s = |e: Error| e.to_string();
    match cmd {
        Command::Pieri { spec: sa, special: sp, label, oracle } => {
            let spec = build_spec(&sa)?;
            let s = special(&spec, &sp).map_err(e2s)?;
            let lam = parse_label(&spec, &label).map_err(e2s)?;
            let e = if oracle {
                classical_pieri_via_index_with(&spec, s, &lam, CandidateSource::FromPartitions)
            } else {
                classical_pieri(&spec, s, &lam)
            }
            .map_err(e2s)?;
            Ok(Outcome::ok(element_out(&spec, &e, sa.json)))
        }
        Command::Qpieri { spec: sa, special: sp, label } => {
            let spec = build_spec(&sa)?;
            let s = special(&spec, &sp).map_err(e2s)?;
            let lam = parse_label(&spec, &label).map_err(e2s)?;
            let e = quantum_pieri(&spec, s, &lam).map_err(e2s)?;
            Ok(Outcome::ok(element_out(&spec, &e, sa.json)))
        }
        Command::Product { spec: sa, left, right, oracle } => {
            let spec = build_spec(&sa)?;
            let (a, b) = (parse_label(&spec, &left).map_err(e2s)?, parse_label(&spec, &right).map_err(e2s)?);
            let e = Session::classical(spec).with_oracle(oracle).product(&a, &b).map_err(e2s)?;
            Ok(Outcome::ok(element_out(&spec, &e, sa.json)))
        }
        Command::Qproduct { spec: sa, left, right } => {
            let spec = build_spec(&sa)?;
            let (a, b) = (parse_label(&spec, &left).map_err(e2s)?, parse_label(&spec, &right).map_err(e2s)?);
            let e = Session::quantum(spec).map_err(e2s)?.product(&a, &b).map_err(e2s)?;
            Ok(Outcome::ok(element_out(&spec, &e, sa.json)))
        }
        Command::Gw { spec: sa, a, b, c, d, d1, d2, oracle } => {
            let spec = build_spec(&sa)?;
            let labels = [&a, &b, &c].map(|s| parse_label(&spec, s));
            let [a, b, c] = labels;
            let (a, b, c) = (a.map_err(e2s)?, b.map_err(e2s)?, c.map_err(e2s)?);
            let deg = match (spec.num_q(), d, d1, d2) {
                (1, d, None, None) => QExp::single(d.unwrap_or(0)),
                (1, _, _, _) => return Err("--d1/--d2 apply only to Dmax; use --d".into()),
                (_, None, d1, d2) => QExp([d1.unwrap_or(0), d2.unwrap_or(0)]),
                _ => return Err("Dmax has two quantum parameters; use --d1 and --d2".into()),
            };
            let mode = if deg.is_zero() && (oracle || spec.check_quantum().is_err()) {
                Mode::Classical
            } else {
                Mode::Quantum
            };
            if oracle && mode == Mode::Quantum {
                return Err("--oracle applies only to degree zero".into());
            }
            let mut session = Session::new(spec, mode).map_err(e2s)?.with_oracle(oracle);
            let v = session.gromov_witten(&a, &b, &c, deg).map_err(e2s)?;
            Ok(Outcome::ok(if sa.json {
                to_json(&ValueJson { spec: spec_json(&spec), value: v.to_string() })
            } else {
                format!("{v}\n")
            }))
        }
        Command::Dual { spec: sa, label } => {
            let spec = build_spec(&sa)?;
            let lam = parse_label(&spec, &label).map_err(e2s)?;
            let d = dual(&spec, &lam).map_err(e2s)?;
            Ok(Outcome::ok(if sa.json {
                to_json(&ClassOutJson { spec: spec_json(&spec), class: class_json(&d) })
            } else {
                format!("{d}\n")
            }))
        }
        Command::Convert { spec: sa, label, index, pair } => {
            let spec = build_spec(&sa)?;
            let lam = if let Some(ix) = index {
                let set = IndexSet::new(&spec, parse_list(&ix).map_err(e2s)?).map_err(e2s)?;
                index_set_to_label(&spec, &set).map_err(e2s)?
            } else if let Some(pr) = pair {
                let (a, b) = pr.split_once('/').ok_or_else(|| format!("pair `{pr}` must look like alpha/beta"))?;
                let pp = PartitionPair { alpha: parse_list(a).map_err(e2s)?, beta: parse_list(b).map_err(e2s)? };
                let l = partition_pair_to_label(&pp, spec.k).map_err(e2s)?;
                l.check(&spec).map_err(e2s)?;
                l
            } else {
                parse_label(&spec, label.as_deref().unwrap_or_default()).map_err(e2s)?
            };
            let set = label_to_index_set(&spec, &lam).map_err(e2s)?;
            let pp = label_to_partition_pair(&lam, spec.k);
            Ok(Outcome::ok(if sa.json {
                to_json(&ConvertJson {
                    spec: spec_json(&spec),
                    class: class_json(&lam),
                    index: set.entries().to_vec(),
                    alpha: pp.alpha,
                    beta: pp.beta,
                })
            } else {
                format!("partition {lam}\nindex {set}\npair {}/{}\n", join(&pp.alpha), join(&pp.beta))
            }))
        }
        Command::Basis { spec: sa } => {
            let spec = build_spec(&sa)?;
            let basis = enumerate_basis(&spec);
            Ok(Outcome::ok(if sa.json {
                to_json(&BasisJson {
                    spec: spec_json(&spec),
                    count: basis.len(),
                    basis: basis.iter().map(class_json).collect(),
                })
            } else {
                let mut s = String::new();
                for l in &basis {
                    let _ = writeln!(s, "{l}");
                }
                let _ = writeln!(s, "count {}", basis.len());
                s
            }))
        }
        Command::Verify { spec: sa } => {
            let spec = build_spec(&sa)?;
            let checks = verify_all(&spec).map_err(e2s)?;
            let passed = checks.iter().all(|c| c.passed);
            let stdout = if sa.json {
                to_json(&VerifyJson { spec: spec_json(&spec), passed, checks })
            } else {
                let w = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
                let mut s = format!("{spec}\n");
                for c in &checks {
                    let _ = writeln!(s, "{:<w$}  {}  {}", c.name, if c.passed { "pass" } else { "FAIL" }, c.detail);
                }
                s
            };
            Ok(Outcome { code: if passed { 0 } else { 1 }, stdout, stderr: String::new() })
        }
    }
}

/// Presentation, basis and oracle checks for one spec.
pub fn verify_all(spec: &Spec) -> Result<Vec<CheckJson>, Error> {
    let mut out = Vec::new();
    let mut modes = vec![Mode::Classical];
    if spec.check_quantum().is_ok() {
        modes.push(Mode::Quantum);
    }
    for mode in modes {
        let r = verify_presentation(spec, mode)?;
        let bad: Vec<String> = r
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| format!("{}: {}", c.name, c.residual.render(spec.num_q())))
            .collect();
        out.push(CheckJson {
            name: format!("presentation ({})", if mode == Mode::Classical { "classical" } else { "quantum" }),
            passed: bad.is_empty(),
            detail: if bad.is_empty() { format!("{} relations vanish", r.checks.len()) } else { bad.join("; ") },
        });
    }
    let b = basis_check(spec)?;
    out.push(CheckJson {
        name: "monomial basis".into(),
        passed: b.passed(),
        detail: format!(
            "{} classes, degree ratio {}{}, {} triangularity failures",
            b.basis_size,
            b.degree_ratio,
            if b.ratio_exact { "" } else { " (inexact)" },
            b.triangularity_failures.len()
        ),
    });
    let basis = enumerate_basis(spec);
    let mut specials: Vec<SpecialClass> = (1..=spec.width()).map(SpecialClass::new).collect();
    if spec.lie_type.is_even() {
        specials.push(SpecialClass::primed(spec.k));
    }
    let (mut total, mut bad) = (0usize, Vec::new());
    for s in &specials {
        for lam in &basis {
            total += 1;
            let a = classical_pieri(spec, *s, lam)?;
            let b = classical_pieri_via_index_with(spec, *s, lam, CandidateSource::Raw)?;
            if a != b {
                bad.push(format!("{s}*{lam}"));
            }
        }
    }
    out.push(CheckJson {
        name: "index-set oracle".into(),
        passed: bad.is_empty(),
        detail: if bad.is_empty() { format!("{total} products agree") } else { bad.join("; ") },
    });
    Ok(out)
}

use std::fmt::Write as _;

use iwahori_core::braid::BraidWord;
use iwahori_core::coefficients::{parse_scalar, FieldContext, Scalar};
use iwahori_core::hecke::HeckeAlgebra;
use iwahori_core::invariants::{jones_via_bracket, InvariantEngine};
use iwahori_core::oracles::{exhaustive_word_closure_in, group_algebra_mismatches};
use iwahori_core::specht::{count_standard_tableaux, SpechtContext};
use iwahori_core::trace::{decompose_closure_over, partitions_of, MarkovTrace};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;
use crate::{Config, FieldArg, Format};

/// Text for stdout and the exit code.
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// The selected field and, when specialized, the value of `q`.
fn field(cfg: &Config) -> Result<(FieldContext, Option<Scalar>)> {
    let q_text = || {
        cfg.q
            .as_deref()
            .ok_or_else(|| CliError::Input("a specialized field needs --q".into()))
    };
    match cfg.field {
        FieldArg::Generic => Ok((FieldContext::RationalFunctions, None)),
        FieldArg::Q => {
            let f = FieldContext::Rationals;
            Ok((f, Some(parse_scalar(q_text()?, f)?)))
        }
        FieldArg::Fp => {
            let p = cfg
                .p
                .ok_or_else(|| CliError::Input("--field Fp needs --p".into()))?;
            let f = FieldContext::prime(p)?;
            let q: u64 = q_text()?
                .trim()
                .parse()
                .map_err(|_| CliError::Input("--q must be an integer for Fp".into()))?;
            if q == 0 || q >= p {
                return Err(CliError::Input(format!("--q must satisfy 0 < q < {p}")));
            }
            Ok((f, Some(f.from_int(q as i64))))
        }
    }
}

/// `H_n(q1, q2)` generically, `H_n(-1, q)` for a specialized field.
fn algebra(cfg: &Config, n: usize) -> Result<HeckeAlgebra> {
    match field(cfg)? {
        (_, None) => Ok(HeckeAlgebra::generic(n)),
        (f, Some(q)) => Ok(HeckeAlgebra::new(n, f.from_int(-1), q)?),
    }
}

fn parse_word(cfg: &Config, word: &str) -> Result<BraidWord> {
    let b = BraidWord::parse(word, cfg.strands)?;
    if cfg.verbose > 0 {
        eprintln!("braid {b}, {} letters", b.len());
    }
    Ok(b)
}

fn render<T: Serialize>(cfg: &Config, value: &T, text: String) -> Result<Output> {
    Ok(Output::ok(match cfg.format {
        Format::Text => text + "\n",
        Format::Json => serde_json::to_string(value)? + "\n",
    }))
}

fn require_generic(cfg: &Config, what: &str) -> Result<()> {
    if cfg.field != FieldArg::Generic {
        return Err(CliError::Precondition(format!(
            "{what} is only available over the generic field"
        )));
    }
    Ok(())
}

pub fn reduce(cfg: &Config, word: &str) -> Result<Output> {
    let b = parse_word(cfg, word)?;
    let h = algebra(cfg, b.strands())?;
    let x = h.from_braid_word(&b)?;
    if cfg.verbose > 0 {
        eprintln!("{} terms", x.len());
    }
    render(cfg, &x, x.to_string())
}

#[derive(Serialize)]
struct HomflyOut {
    homflypt: String,
}

pub fn homfly(cfg: &Config, word: &str) -> Result<Output> {
    let b = parse_word(cfg, word)?;
    let value = if cfg.field == FieldArg::Generic {
        InvariantEngine::new().homflypt(&b)?
    } else {
        MarkovTrace::new(&algebra(cfg, b.strands())?)?.trace_of_braid(&b)?
    };
    let text = value.to_string();
    render(
        cfg,
        &HomflyOut {
            homflypt: text.clone(),
        },
        text,
    )
}

pub fn jones(cfg: &Config, word: &str) -> Result<Output> {
    require_generic(cfg, "the Jones polynomial")?;
    let b = parse_word(cfg, word)?;
    let v = InvariantEngine::new().jones(&b)?;
    render(cfg, &v, v.to_string())
}

pub fn decompose(cfg: &Config, word: &str) -> Result<Output> {
    let b = parse_word(cfg, word)?;
    let (f, _) = field(cfg)?;
    let d = decompose_closure_over(&b, f)?;
    render(cfg, &d, d.to_string())
}

#[derive(Serialize)]
struct SpechtOut {
    n: usize,
    field: String,
    e: String,
    rows: Vec<iwahori_core::specht::SpechtRow>,
}

pub fn specht(cfg: &Config, n: usize) -> Result<Output> {
    let ctx = match field(cfg)? {
        (_, None) => SpechtContext::generic(n),
        (_, Some(q)) => SpechtContext::new(n, q)?,
    };
    let rows = ctx.table()?;
    let mut text = String::new();
    let generic = cfg.field == FieldArg::Generic;
    let header = format!(
        "{:<16}{:>7}{:>7}{:>14}",
        "partition", "dim S", "dim D", "e-restricted"
    );
    text += header.as_str();
    text += if generic { "  gram det\n" } else { "\n" };
    for r in &rows {
        let _ = write!(
            text,
            "{:<16}{:>7}{:>7}{:>14}",
            r.partition,
            r.dim_s,
            r.dim_d,
            if r.e_restricted { "yes" } else { "no" }
        );
        match &r.gram_determinant {
            Some(det) => {
                let _ = writeln!(text, "  {det}");
            }
            None => text.push('\n'),
        }
    }
    let out = SpechtOut {
        n,
        field: ctx.field().name(),
        e: ctx.e().to_string(),
        rows,
    };
    Ok(Output::ok(match cfg.format {
        Format::Text => text,
        Format::Json => serde_json::to_string(&out)? + "\n",
    }))
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct VerifyOut {
    passed: bool,
    checks: Vec<Check>,
}

fn verify_output(cfg: &Config, checks: Vec<Check>) -> Result<Output> {
    let passed = checks.iter().all(|c| c.passed);
    let text = match cfg.format {
        Format::Json => serde_json::to_string(&VerifyOut { passed, checks })? + "\n",
        Format::Text => {
            let mut t = String::new();
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(t, "{tag} {}: {}", c.name, c.detail);
            }
            t
        }
    };
    Ok(Output {
        text,
        code: if passed { 0 } else { 4 },
    })
}

/// Small property suites, each with a fixed seed.
pub fn verify_quick(cfg: &Config, inject_fault: bool) -> Result<Output> {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let h3 = {
        let h = HeckeAlgebra::generic(3);
        if inject_fault {
            h.with_quadratic_fault()
        } else {
            h
        }
    };

    let report = exhaustive_word_closure_in(&h3, 4)?;
    checks.push(Check {
        name: "word relations (n = 3, length <= 4)",
        passed: report.is_clean(),
        detail: format!(
            "{} pairs, {} violations",
            report.checked, report.violation_count
        ),
    });

    let mut bad = 0;
    for n in 1..=4 {
        bad += group_algebra_mismatches(n, 25, n as u64)?;
    }
    checks.push(Check {
        name: "symmetric group specialization (n <= 4)",
        passed: bad == 0,
        detail: format!("100 products, {bad} mismatches"),
    });

    let mut bad = 0;
    for _ in 0..30 {
        let a = BraidWord::random(&mut rng, 3, 4);
        let b = BraidWord::random(&mut rng, 3, 4);
        let whole = h3.from_braid_word(&a.concat(&b)?)?;
        let parts = h3.mul(&h3.from_braid_word(&a)?, &h3.from_braid_word(&b)?)?;
        bad += usize::from(whole != parts);
    }
    checks.push(Check {
        name: "multiplicativity (n = 3)",
        passed: bad == 0,
        detail: format!("30 pairs, {bad} mismatches"),
    });

    let mut engine = InvariantEngine::new();
    let mut bad = 0;
    for k in 0..20 {
        let n = 2 + k % 3;
        let a = BraidWord::random(&mut rng, n, 3);
        let b = BraidWord::random(&mut rng, n, 3);
        let ab = engine.homflypt(&a.concat(&b)?)?;
        let ba = engine.homflypt(&b.concat(&a)?)?;
        let stab = engine.homflypt(&a.stabilize(false))?;
        bad += usize::from(ab != ba || stab != engine.homflypt(&a)?);
    }
    checks.push(Check {
        name: "trace cyclicity and stabilization (n <= 4)",
        passed: bad == 0,
        detail: format!("20 pairs, {bad} mismatches"),
    });

    let mut bad = 0;
    let mut count = 0;
    for _ in 0..30 {
        let b = BraidWord::random(&mut rng, 3, 5);
        bad += usize::from(engine.jones(&b)? != jones_via_bracket(&b)?);
        count += 1;
    }
    checks.push(Check {
        name: "Jones against the bracket state sum",
        passed: bad == 0,
        detail: format!("{count} braids, {bad} mismatches"),
    });

    let mut bad = Vec::new();
    for n in 1..=4 {
        let ctx = SpechtContext::generic(n);
        for l in partitions_of(n) {
            let m = ctx.specht_module(&l)?;
            if m.dim() as u64 != count_standard_tableaux(&l) || m.dim_d() != m.dim() {
                bad.push(l.to_string());
            }
        }
    }
    checks.push(Check {
        name: "Specht dimensions (n <= 4)",
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            "all match standard tableaux".into()
        } else {
            format!("mismatch at {}", bad.join(" "))
        },
    });

    verify_output(cfg, checks)
}

#[derive(Serialize)]
struct ExhaustiveOut<'a> {
    n: usize,
    max_len: usize,
    #[serde(flatten)]
    report: &'a iwahori_core::oracles::ClosureReport,
}

pub fn verify_exhaustive(
    cfg: &Config,
    n: usize,
    max_len: usize,
    inject_fault: bool,
) -> Result<Output> {
    let mut h = algebra(cfg, n)?;
    if inject_fault {
        h = h.with_quadratic_fault();
    }
    let report = exhaustive_word_closure_in(&h, max_len)?;
    let text = match cfg.format {
        Format::Json => {
            serde_json::to_string(&ExhaustiveOut {
                n,
                max_len,
                report: &report,
            })? + "\n"
        }
        Format::Text => {
            let mut t = format!(
                "n = {n}, words of length <= {max_len}: {} pairs checked, {} violations\n",
                report.checked, report.violation_count
            );
            for v in &report.violations {
                let _ = writeln!(t, "  {:?} vs {:?} ({:?})", v.word, v.rewritten, v.rule);
            }
            t
        }
    };
    Ok(Output {
        text,
        code: if report.is_clean() { 0 } else { 4 },
    })
}

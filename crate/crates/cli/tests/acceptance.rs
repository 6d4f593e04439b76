//! Acceptance suite: one PASS/FAIL line per criterion, exact equality
//! throughout. Runs without the libtest harness so the lines always show.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use iwahori_core::braid::{BraidWord, MarkovMoveRecord, Permutation};
use iwahori_core::coefficients::{parse_scalar, FieldContext, QuantumE, Scalar};
use iwahori_core::hecke::{HeckeAlgebra, HeckeElement};
use iwahori_core::invariants::{jones_via_bracket, InvariantEngine};
use iwahori_core::oracles::group_algebra_mismatches;
use iwahori_core::specht::{count_standard_tableaux, SpechtContext};
use iwahori_core::trace::{partitions_of, Decomposer, MarkovTrace, Partition};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rf(text: &str) -> Scalar {
    parse_scalar(text, FieldContext::RationalFunctions).unwrap()
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.random_range(0..=max_len);
    BraidWord::random(rng, n, len)
}

fn random_element(rng: &mut ChaCha8Rng, h: &HeckeAlgebra) -> HeckeElement {
    let perms = Permutation::all(h.n());
    let coeffs = ["1", "-2", "q1", "q2", "q1-q2", "3*q1*q2"];
    let terms = (0..3).map(|_| {
        (
            perms.choose(rng).unwrap().clone(),
            rf(coeffs.choose(rng).unwrap()),
        )
    });
    h.element(terms).unwrap()
}

/// `u x v` against `u y v` for one relation `x = y` in the braid group.
fn related_pair(rng: &mut ChaCha8Rng, n: usize) -> (BraidWord, BraidWord) {
    let i = rng.random_range(1..n as i32);
    let sign = if rng.random_bool(0.5) { 1 } else { -1 };
    let (x, y): (Vec<i32>, Vec<i32>) = match rng.random_range(0..3) {
        0 if i + 1 < n as i32 => (
            vec![sign * i, sign * (i + 1), sign * i],
            vec![sign * (i + 1), sign * i, sign * (i + 1)],
        ),
        1 if i + 2 < n as i32 => {
            let j = rng.random_range(i + 2..n as i32);
            (vec![i, sign * j], vec![sign * j, i])
        }
        _ => (vec![i, -i], vec![]),
    };
    let u = random_word(rng, n, 3);
    let v = random_word(rng, n, 3);
    let build = |mid: Vec<i32>| {
        let mut l = u.letters().to_vec();
        l.extend(mid);
        l.extend(v.letters());
        BraidWord::new(n, l).unwrap()
    };
    (build(x), build(y))
}

fn basis_and_relations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut pairs = 0;
    for n in 2..=5 {
        let h = HeckeAlgebra::generic(n);
        for _ in 0..500 {
            let (a, b) = related_pair(&mut rng, n);
            ensure(
                h.from_braid_word(&a).unwrap() == h.from_braid_word(&b).unwrap(),
                || format!("relation images differ: {a} vs {b}"),
            )?;
            let (a, b) = (random_word(&mut rng, n, 4), random_word(&mut rng, n, 4));
            let whole = h.from_braid_word(&a.concat(&b).unwrap()).unwrap();
            let parts = h.mul(
                &h.from_braid_word(&a).unwrap(),
                &h.from_braid_word(&b).unwrap(),
            );
            ensure(whole == parts.unwrap(), || {
                format!("not multiplicative on {a}, {b}")
            })?;
            pairs += 1;
        }
    }
    let mut triples = 0;
    for k in 0..200 {
        let h = HeckeAlgebra::generic(2 + k % 4);
        let (x, y, z) = (
            random_element(&mut rng, &h),
            random_element(&mut rng, &h),
            random_element(&mut rng, &h),
        );
        let left = h.mul(&h.mul(&x, &y).unwrap(), &z).unwrap();
        let right = h.mul(&x, &h.mul(&y, &z).unwrap()).unwrap();
        ensure(left == right, || {
            format!("not associative: {x} | {y} | {z}")
        })?;
        triples += 1;
    }
    Ok(format!("{pairs} word pairs, {triples} triples"))
}

fn symmetric_group_specialization() -> Outcome {
    let mut bad = 0;
    for n in 2..=5 {
        bad += group_algebra_mismatches(n, 125, 100 + n as u64).unwrap();
    }
    ensure(bad == 0, || format!("{bad} of 500 products disagree"))?;
    Ok("500 products agree".into())
}

fn markov_trace_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut tr = MarkovTrace::new(&HeckeAlgebra::generic(1)).unwrap();
    let h = tr.algebra().clone();
    let a_factor = h.field().one() + h.q_prod().clone();
    let s_factor = h.q_sum().clone();
    for k in 0..500 {
        let n = 2 + k % 4;
        let (a, b) = (random_word(&mut rng, n, 4), random_word(&mut rng, n, 4));
        let ab = tr.trace_of_braid(&a.concat(&b).unwrap()).unwrap();
        let ba = tr.trace_of_braid(&b.concat(&a).unwrap()).unwrap();
        ensure(ab == ba, || format!("tr(ab) != tr(ba) for {a}, {b}"))?;
    }
    for k in 0..200 {
        let b = random_word(&mut rng, 1 + k % 4, 6);
        let t = tr.trace_of_braid(&b).unwrap();
        let lhs = &a_factor * &t;
        let rhs = &s_factor * &tr.trace_of_braid(&b.add_strand()).unwrap();
        ensure(lhs == rhs, || format!("added strand fails on {b}"))?;
        ensure(tr.trace_of_braid(&b.stabilize(true)).unwrap() == t, || {
            format!("positive stabilization fails on {b}")
        })?;
        ensure(tr.trace_of_braid(&b.stabilize(false)).unwrap() == t, || {
            format!("negative stabilization fails on {b}")
        })?;
    }
    Ok("500 cyclic pairs, 200 braids for each strand identity".into())
}

fn trace_of_b_lambda() -> Outcome {
    let mut tr = MarkovTrace::new(&HeckeAlgebra::generic(1)).unwrap();
    let delta = rf("(1+q1*q2)/(q1+q2)");
    let mut count = 0;
    for n in 1..=7 {
        for l in partitions_of(n) {
            let want = delta.pow(l.len() as i32 - 1).unwrap();
            ensure(tr.trace_of_braid(&l.braid()).unwrap() == want, || {
                format!("tr(b{l}) is wrong")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} partitions, n <= 7"))
}

fn jones_cross_validation() -> Outcome {
    let mut engine = InvariantEngine::new();
    let check = |engine: &mut InvariantEngine, b: &BraidWord| -> Result<(), String> {
        let v = engine.jones(b).map_err(|e| e.to_string())?;
        ensure(v == jones_via_bracket(b).unwrap(), || {
            format!("Jones disagrees on {b}")
        })?;
        ensure(v.in_t() == (b.closure_components() % 2 == 1), || {
            format!("power parity wrong on {b}")
        })
    };
    let mut words = vec![Vec::new()];
    let mut count = 0;
    for _ in 0..=6 {
        let mut next = Vec::new();
        for w in &words {
            check(&mut engine, &BraidWord::new(2, w.clone()).unwrap())?;
            count += 1;
            for l in [1, -1] {
                let mut x = w.clone();
                x.push(l);
                next.push(x);
            }
        }
        words = next;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let n = rng.random_range(1..=4);
        let b = random_word(&mut rng, n, 10);
        check(&mut engine, &b)?;
        count += 1;
    }
    let trefoil = engine
        .jones(&BraidWord::new(2, vec![1, 1, 1]).unwrap())
        .unwrap();
    ensure(trefoil.to_string() == "-t^4+t^3+t", || {
        format!("trefoil gives {trefoil}")
    })?;
    Ok(format!("{count} braids agree with the state sum"))
}

fn random_move(rng: &mut ChaCha8Rng, b: &BraidWord) -> MarkovMoveRecord {
    loop {
        let m = match rng.random_range(0..5) {
            0 | 1 if b.strands() >= 2 => {
                let i = rng.random_range(1..b.strands() as i32);
                let l = if rng.random_bool(0.5) { i } else { -i };
                MarkovMoveRecord::Conjugate(BraidWord::new(b.strands(), vec![l]).unwrap())
            }
            2 if b.strands() < 5 => MarkovMoveRecord::StabilizePositive,
            3 if b.strands() < 5 => MarkovMoveRecord::StabilizeNegative,
            _ => match b.letters().last() {
                Some(&l) if l > 0 => MarkovMoveRecord::DestabilizePositive,
                Some(_) => MarkovMoveRecord::DestabilizeNegative,
                None => continue,
            },
        };
        if m.apply(b).is_ok() {
            return m;
        }
    }
}

fn markov_move_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut engine = InvariantEngine::new();
    let mut sequences = 0;
    for _ in 0..100 {
        let n = rng.random_range(2..=3);
        let b = random_word(&mut rng, n, 5);
        let p = engine.homflypt(&b).unwrap();
        let v = engine.jones(&b).unwrap();
        for _ in 0..20 {
            let mut c = b.clone();
            for _ in 0..3 {
                c = random_move(&mut rng, &c).apply(&c).unwrap();
            }
            ensure(engine.homflypt(&c).unwrap() == p, || {
                format!("HOMFLYPT changed: {b} -> {c}")
            })?;
            ensure(engine.jones(&c).unwrap() == v, || {
                format!("Jones changed: {b} -> {c}")
            })?;
            sequences += 1;
        }
    }
    Ok(format!("{sequences} move sequences"))
}

fn v_basis_witness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut conj = 0;
    for n in 1..=5 {
        let dec = Decomposer::new(n).map_err(|e| e.to_string())?;
        ensure(!dec.character_matrix().determinant().is_zero(), || {
            format!("character matrix singular for n = {n}")
        })?;
        for l in dec.partitions() {
            let d = dec.decompose(&l.braid()).unwrap();
            let terms: Vec<_> = d.terms().collect();
            ensure(
                terms.len() == 1 && terms[0].0 == l && terms[0].1.is_one(),
                || format!("b{l} decomposes as {d}"),
            )?;
        }
        if (2..=4).contains(&n) {
            for _ in 0..34 {
                let b = random_word(&mut rng, n, 4);
                let by = random_word(&mut rng, n, 3);
                let c = b.conjugate(&by).unwrap();
                ensure(
                    dec.decompose(&b).unwrap() == dec.decompose(&c).unwrap(),
                    || format!("conjugating {b} by {by} changes the decomposition"),
                )?;
                conj += 1;
            }
        }
    }
    Ok(format!("invertible for n <= 5, {conj} conjugations"))
}

fn specht_dimensions() -> Outcome {
    for n in 1..=5 {
        let ctx = SpechtContext::generic(n);
        let mut total = 0;
        for l in partitions_of(n) {
            let m = ctx.specht_module(&l).map_err(|e| e.to_string())?;
            ensure(m.dim() as u64 == count_standard_tableaux(&l), || {
                format!("dim S{l} = {}", m.dim())
            })?;
            ensure(m.gram().rank() == m.dim(), || {
                format!("Gram of S{l} is degenerate")
            })?;
            total += m.dim() * m.dim();
        }
        ensure(total == (1..=n).product::<usize>(), || {
            format!("sum of squares {total} for n = {n}")
        })?;
    }
    Ok("n <= 5 over Q(q)".into())
}

fn murphy_lemma() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let contexts: Vec<SpechtContext> = (1..=4).map(SpechtContext::generic).collect();
    let mut modules = std::collections::HashMap::new();
    for _ in 0..100 {
        let n = rng.random_range(1..=4);
        let parts = partitions_of(n);
        let l: Partition = parts.choose(&mut rng).unwrap().clone();
        let w = Permutation::all(n).choose(&mut rng).unwrap().clone();
        let m = modules
            .entry(l.clone())
            .or_insert_with(|| contexts[n - 1].specht_module(&l).unwrap());
        m.murphy_check(&w).map_err(|e| format!("{l}, {w:?}: {e}"))?;
    }
    Ok("100 samples proportional to m_lambda".into())
}

fn e_restricted_heads() -> Outcome {
    let cases = [(3, 2, 2), (7, 2, 3), (5, 2, 4)];
    let mut seen = BTreeSet::new();
    for (p, q, e) in cases {
        let f = FieldContext::prime(p).unwrap();
        for n in 1..=5 {
            let ctx = SpechtContext::new(n, f.from_int(q)).unwrap();
            ensure(ctx.e() == QuantumE::Finite(e), || {
                format!("F{p}, q = {q} has e = {}", ctx.e())
            })?;
            for l in partitions_of(n) {
                let d = ctx.specht_module(&l).map_err(|e| e.to_string())?.dim_d();
                let restricted = l.is_e_restricted(ctx.e());
                ensure((d > 0) == restricted, || {
                    format!("e = {e}: dim D{l} = {d}, restricted = {restricted}")
                })?;
            }
        }
        seen.insert(e);
    }
    Ok(format!("e in {seen:?}, n <= 5"))
}

const CLI_CASES: &[(&str, &[&str])] = &[
    ("reduce_quadratic", &["reduce", "--strands", "2", "1 1"]),
    ("reduce_cancel", &["reduce", "--strands", "2", "1 -1"]),
    ("reduce_bad_generator", &["reduce", "--strands", "2", "3"]),
    ("jones_trefoil", &["jones", "--strands", "2", "1 1 1"]),
    ("jones_trivial", &["jones", "--strands", "1", ""]),
    ("homfly_hopf", &["homfly", "--strands", "2", "1 1"]),
    ("specht_3", &["specht", "--n", "3"]),
    (
        "specht_2_f3",
        &[
            "specht", "--n", "2", "--field", "Fp", "--p", "3", "--q", "2",
        ],
    ),
    ("specht_0", &["specht", "--n", "0"]),
    ("verify_quick", &["verify", "--quick"]),
    (
        "verify_exhaustive_3",
        &["verify", "--exhaustive", "--n", "3"],
    ),
    ("decompose_b3", &["decompose", "--strands", "3", "2 1"]),
    ("decompose_hopf", &["decompose", "--strands", "2", "1 1"]),
    (
        "decompose_rational",
        &[
            "decompose",
            "--strands",
            "2",
            "1 1",
            "--field",
            "Q",
            "--q",
            "2",
        ],
    ),
];

fn run_cli(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_iwahori"))
        .args(args)
        .env_remove("IWAHORI_FIELD")
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn cli_contract() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (name, args) in CLI_CASES {
        let first = run_cli(args);
        let want = std::fs::read(dir.join(format!("{name}.out"))).map_err(|e| e.to_string())?;
        let code: i32 = std::fs::read_to_string(dir.join(format!("{name}.code")))
            .map_err(|e| e.to_string())?
            .trim()
            .parse()
            .map_err(|_| format!("{name}: bad exit code file"))?;
        ensure(first.0 == want && first.1 == code, || {
            format!("{name} differs from golden")
        })?;
        ensure(run_cli(args) == first, || {
            format!("{name} is not deterministic")
        })?;
    }
    let (_, fault) = run_cli(&["verify", "--quick", "--inject-fault"]);
    ensure(fault != 0, || "fault-injected verify exits 0".into())?;
    Ok(format!(
        "{} golden cases, byte-identical reruns",
        CLI_CASES.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "basis and relations",
            Duration::from_secs(60),
            basis_and_relations,
        ),
        (
            "symmetric group specialization",
            Duration::from_secs(30),
            symmetric_group_specialization,
        ),
        (
            "Markov trace axioms",
            Duration::from_secs(120),
            markov_trace_axioms,
        ),
        (
            "trace of b_lambda",
            Duration::from_secs(60),
            trace_of_b_lambda,
        ),
        (
            "Jones against the bracket",
            Duration::from_secs(180),
            jones_cross_validation,
        ),
        (
            "Markov move invariance",
            Duration::from_secs(120),
            markov_move_invariance,
        ),
        (
            "closure basis witness",
            Duration::from_secs(180),
            v_basis_witness,
        ),
        (
            "Specht dimensions",
            Duration::from_secs(300),
            specht_dimensions,
        ),
        (
            "Murphy proportionality",
            Duration::from_secs(120),
            murphy_lemma,
        ),
        (
            "e-restricted heads",
            Duration::from_secs(300),
            e_restricted_heads,
        ),
        ("CLI contract", Duration::from_secs(30), cli_contract),
    ];
    let mut failed = 0;
    for (k, (name, target, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        let budget = if start.elapsed() <= *target {
            ""
        } else {
            ", over time target"
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s{budget})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s{budget})", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

mod common;

use std::collections::HashSet;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use codefglm::decoder::{canonical_form_gb, canonical_form_matphi, decode};
use codefglm::oracle::{verify_decoding, CosetTable};
use codefglm::{
    run_fglm, BinaryCode, Binomial, BitVector, Capability, FglmOptions, FglmResult, Monomial,
    TermOrdering,
};
use common::{example, random_codes, test_codes, EXAMPLE_GB};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GOLDEN_TIME_LIMIT: Duration = Duration::from_secs(1);
const RANDOM_SET_TIME_LIMIT: Duration = Duration::from_secs(30);
const RANDOM_CODE_COUNT: usize = 60;
const RANDOM_SEED: u64 = 0xacce97;
const WORDS_PER_CODE: usize = 1000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_default(code: &BinaryCode) -> FglmResult {
    run_fglm(code, TermOrdering::DegRevLex, FglmOptions::default()).expect("fglm run")
}

fn acceptance_codes() -> Vec<BinaryCode> {
    random_codes(RANDOM_SEED, RANDOM_CODE_COUNT)
}

fn golden_basis() -> Outcome {
    let code = example();
    let start = Instant::now();
    let res = run_default(&code);
    let elapsed = start.elapsed();
    let got: HashSet<Binomial> = res.gb.iter().cloned().collect();
    let want: HashSet<Binomial> = EXAMPLE_GB
        .iter()
        .map(|s| Binomial::parse(s, 6).unwrap())
        .collect();
    check(res.gb.len() == 20, || {
        format!("basis has {} elements", res.gb.len())
    })?;
    check(got == want, || {
        format!(
            "basis differs: extra {:?}, missing {:?}",
            got.difference(&want),
            want.difference(&got)
        )
    })?;
    let normal: Vec<String> = res
        .normal_set
        .terms()
        .iter()
        .map(Monomial::to_string)
        .collect();
    check(
        normal == ["1", "x1", "x2", "x3", "x4", "x5", "x6", "x1*x6"],
        || format!("normal set {normal:?}"),
    )?;
    check(res.normal_set.len() == 1 << (6 - 3), || {
        "normal set size".into()
    })?;
    check(res.t_detected == Some(Capability::Radius(1)), || {
        format!("t_detected {:?}", res.t_detected)
    })?;
    check(elapsed < GOLDEN_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("20 binomials, |N| = 8, t = 1, {elapsed:?}"))
}

fn golden_decode() -> Outcome {
    let res = run_default(&example());
    let d = decode(&BitVector::parse_bits("111010").unwrap(), &res).map_err(|e| e.to_string())?;
    let e = d.error().map(BitVector::to_bit_string);
    let c = d.codeword().map(BitVector::to_bit_string);
    check(e.as_deref() == Some("001000"), || format!("error {e:?}"))?;
    check(c.as_deref() == Some("110010"), || format!("codeword {c:?}"))?;
    Ok("e = (0,0,1,0,0,0), c = (1,1,0,0,1,0)".into())
}

fn dimension_law() -> Outcome {
    let codes = acceptance_codes();
    let start = Instant::now();
    for code in &codes {
        check(code.n() <= 12 && code.r() <= 8, || {
            "code outside the desk-scale range".into()
        })?;
        let res = run_default(code);
        check(res.normal_set.len() == 1 << code.r(), || {
            format!(
                "|N| = {} for r = {} on {code:?}",
                res.normal_set.len(),
                code.r()
            )
        })?;
    }
    let elapsed = start.elapsed();
    check(elapsed < RANDOM_SET_TIME_LIMIT, || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} codes, |N| = 2^r for all, {elapsed:?}",
        codes.len()
    ))
}

fn oracle_decoding() -> Outcome {
    let codes = acceptance_codes();
    let mut vectors = 0usize;
    for code in &codes {
        let res = run_default(code);
        let report = verify_decoding(code, &res).map_err(|e| e.to_string())?;
        check(report.is_pass(), || format!("{code:?}\n{report}"))?;
        vectors += 1 << code.n();
    }
    Ok(format!(
        "{} codes, {vectors} received vectors, 0 violations",
        codes.len()
    ))
}

fn t_detection() -> Outcome {
    let codes = test_codes();
    for code in &codes {
        let res = run_default(code);
        let d = code
            .enumerate_codewords()
            .map_err(|e| e.to_string())?
            .iter()
            .filter(|c| !c.is_zero())
            .map(BitVector::weight)
            .min();
        let want = d.map_or(Capability::Unbounded, |d| Capability::Radius((d - 1) / 2));
        check(res.t_detected == Some(want), || {
            format!(
                "detected {:?}, expected {want:?} on {code:?}",
                res.t_detected
            )
        })?;
        let table = CosetTable::build(code).map_err(|e| e.to_string())?;
        check(table.min_distance() == d, || {
            "coset scan and codeword enumeration disagree on d".into()
        })?;
    }
    Ok(format!("{} codes", codes.len()))
}

fn matphi_structure() -> Outcome {
    let codes = test_codes();
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    for code in &codes {
        let res = run_default(code);
        let phi = res.matphi.as_ref().ok_or("no matphi")?;
        let s = 1usize << code.r();
        for k in 0..code.n() {
            let map = phi.phi(k);
            let image: HashSet<usize> = map.iter().copied().collect();
            check(
                map.len() == s && image.len() == s && image.iter().all(|&j| j < s),
                || format!("phi({}) is not a permutation of {s} points", k + 1),
            )?;
            check((0..s).all(|i| map[map[i]] == i), || {
                format!("phi({}) is not an involution", k + 1)
            })?;
            for j in 0..k {
                check(
                    (0..s).all(|i| phi.apply(k, phi.apply(j, i)) == phi.apply(j, phi.apply(k, i))),
                    || format!("phi({}) and phi({}) do not commute", j + 1, k + 1),
                )?;
            }
        }
        for _ in 0..WORDS_PER_CODE {
            let w = Monomial::from_exponents((0..code.n()).map(|_| rng.gen_range(0..4)).collect());
            let by_tables = canonical_form_matphi(&w, &res.normal_set, phi);
            let by_rewriting = canonical_form_gb(&w, &res.gb).map_err(|e| e.to_string())?;
            check(by_tables == by_rewriting, || {
                format!("Can({w}): tables {by_tables}, rewriting {by_rewriting}")
            })?;
        }
    }
    Ok(format!(
        "{} codes, {WORDS_PER_CODE} words each",
        codes.len()
    ))
}

fn structural_invariants() -> Outcome {
    let codes = test_codes();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (i, code) in codes.iter().enumerate() {
        let res = run_default(code);
        let border = res.border.as_ref().ok_or("no border basis")?;
        check(res.gb.iter().all(|g| border.contains(g)), || {
            "border basis misses a basis element".into()
        })?;

        let path = dir.path().join(format!("code{i}.txt"));
        std::fs::write(&path, code.to_text()).map_err(|e| e.to_string())?;
        let out = Command::new(env!("CARGO_BIN_EXE_codefglm"))
            .arg("verify")
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        check(out.status.code() == Some(0), || {
            format!(
                "verify exited {:?}: {}",
                out.status.code(),
                String::from_utf8_lossy(&out.stdout)
            )
        })?;
    }
    Ok(format!("`verify` exit 0 on {} codes", codes.len()))
}

fn step4_equivalence() -> Outcome {
    let codes = test_codes();
    let opts = FglmOptions {
        cross_check_step4: true,
        ..FglmOptions::default()
    };
    let mut iterations = 0;
    for ord in [
        TermOrdering::DegRevLex,
        TermOrdering::DegLex,
        TermOrdering::Lex,
    ] {
        for code in &codes {
            let res = run_fglm(code, ord, opts).map_err(|e| e.to_string())?;
            check(res.trace.step4_checks == res.trace.iterations, || {
                "an iteration went unchecked".into()
            })?;
            check(res.trace.step4_disagreements == 0, || {
                format!(
                    "{} disagreements under {ord} on {code:?}",
                    res.trace.step4_disagreements
                )
            })?;
            iterations += res.trace.iterations;
        }
    }
    Ok(format!("{iterations} iterations, 0 disagreements"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 golden reduced basis", golden_basis),
        ("AC2 golden decode", golden_decode),
        ("AC3 dimension law |N| = 2^r", dimension_law),
        ("AC4 oracle decoding equivalence", oracle_decoding),
        ("AC5 t detection", t_detection),
        ("AC6 matphi structure", matphi_structure),
        (
            "AC7 structural invariants via verify",
            structural_invariants,
        ),
        ("AC8 step-4 criterion equivalence", step4_equivalence),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    let stdout = std::io::stdout();
    for (name, criterion) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(criterion)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .unwrap_or_else(|| "panicked".into()))
        });
        let mut out = stdout.lock();
        match outcome {
            Ok(detail) => writeln!(out, "PASS  {name}: {detail}").unwrap(),
            Err(why) => {
                failed += 1;
                writeln!(out, "FAIL  {name}: {why}").unwrap();
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

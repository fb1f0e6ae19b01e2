//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fail.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use meadow::arith::is_squarefree;
use meadow::finite_meadows::{build_galois_field, build_mdk, decompose, standard_battery};
use meadow::logic::{
    check_conditional, derived_identity_suite, encode_conditional, ln_equation, AxiomSet,
};
use meadow::models::ModelRegistry;
use meadow::rationals::{eval_rational, sample_check, RationalAssignment, RationalZT};
use meadow::structures::FiniteStructure;
use meadow::structures::{check_axiom_set, check_equation, write_structure, Verdict};
use meadow::terms::parse_term;
use meadow::vnr::{PseudoinverseOrder, RawRing};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TABLE_LIMIT: Duration = Duration::from_secs(1);
const EXHAUSTION_LIMIT: Duration = Duration::from_secs(60);
const DECOMPOSE_LIMIT: Duration = Duration::from_secs(30);
const ENCODING_LIMIT: Duration = Duration::from_secs(120);
const SQUAREFREE_UP_TO: u64 = 210;
const ENCODING_CASES: usize = 200;
const ENCODING_DEPTH: usize = 4;
const ENCODING_MAX_SIZE: usize = 30;
const DECOMPOSE_MAX_SIZE: usize = 100;
const RATIONAL_SAMPLES: usize = 1000;
const SEED: u64 = 0;

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.detail = format!("{} [{:.2}s]", o.detail, took.as_secs_f64());
    if let Some(limit) = limit {
        if took > limit {
            o.pass = false;
            o.detail = format!("{} exceeds {}s", o.detail, limit.as_secs());
        }
    }
    o
}

fn squarefree() -> impl Iterator<Item = u64> {
    (1..=SQUAREFREE_UP_TO).filter(|&k| is_squarefree(k))
}

fn inverse_row(spec: &str) -> Option<String> {
    let s = ModelRegistry::default().resolve_structure(spec).ok()?;
    let table = write_structure(&s);
    let mut lines = table.lines();
    lines.by_ref().find(|l| *l == "inv:")?;
    lines.next().map(str::to_string)
}

fn c1() -> Outcome {
    let row = inverse_row("mdk:6");
    outcome(
        row.as_deref() == Some("0 1 2 3 4 5"),
        format!("Md_6 inverse row {row:?}"),
    )
}

fn c2() -> Outcome {
    let row = inverse_row("mdk:10");
    outcome(
        row.as_deref() == Some("0 1 8 7 4 5 6 3 2 9"),
        format!("Md_10 inverse row {row:?}"),
    )
}

fn c3() -> Outcome {
    let mut checked = 0;
    for k in squarefree() {
        let s = build_mdk(k).unwrap();
        let report = check_axiom_set(&s, AxiomSet::Md).unwrap();
        if report.results.len() != 10 {
            return outcome(false, format!("Md has {} equations", report.results.len()));
        }
        if let Some((axiom, w)) = report.failures().next() {
            return outcome(false, format!("Md_{k} fails {axiom} at {w}"));
        }
        checked += 1;
    }
    outcome(
        true,
        format!("{checked} meadows Md_k, k <= {SQUAREFREE_UP_TO}, pass all 10 equations"),
    )
}

fn c4() -> Outcome {
    let battery = standard_battery().unwrap();
    let bad: Vec<String> = battery
        .iter()
        .filter(|d| !is_squarefree(d.realized.characteristic().unwrap()))
        .map(|d| d.realized.name().to_string())
        .collect();
    let invalid = battery.iter().filter(|d| d.validate().is_err()).count();
    outcome(
        battery.len() >= 20 && bad.is_empty() && invalid == 0,
        format!(
            "{} meadows, non-squarefree characteristic: {bad:?}, non-meadows: {invalid}",
            battery.len()
        ),
    )
}

fn c5() -> Outcome {
    for k in squarefree() {
        let ring = RawRing::new(FiniteStructure::integers_mod(k as usize).unwrap()).unwrap();
        let up = ring.expansion_with(PseudoinverseOrder::Ascending).unwrap();
        let down = ring.expansion_with(PseudoinverseOrder::Descending).unwrap();
        if up != down {
            return outcome(false, format!("Z/{k}: selection orders disagree"));
        }
        let m = ring.expand_to_meadow().unwrap();
        if !m.same_tables(&build_mdk(k).unwrap()) {
            return outcome(false, format!("Z/{k}: expansion differs from Md_{k}"));
        }
    }
    let witness = |n| {
        RawRing::new(FiniteStructure::integers_mod(n).unwrap())
            .unwrap()
            .expand_to_meadow()
            .err()
    };
    let (w4, w8) = (witness(4), witness(8));
    let want = Some(meadow::Error::NotRegular { witness: 2 });
    outcome(
        w4 == want && w8 == want,
        format!("squarefree k <= {SQUAREFREE_UP_TO} agree; Z/4 {w4:?}, Z/8 {w8:?}"),
    )
}

fn c6() -> Outcome {
    let md30 = Arc::new(build_mdk(30).unwrap());
    let d = decompose(&md30).unwrap();
    let targets: Vec<&str> = d.components.iter().map(|h| h.target().name()).collect();
    let crt = (0..30u32).all(|x| {
        d.components.iter().map(|h| h.apply(x)).collect::<Vec<_>>() == vec![x % 2, x % 3, x % 5]
    });
    if targets != ["Z_2", "Z_3", "Z_5"] || !crt || !d.diagonal.is_isomorphism() {
        return outcome(false, format!("Md_30 components {targets:?}, CRT {crt}"));
    }
    let mut n = 0;
    for s in common::battery() {
        if s.size() > DECOMPOSE_MAX_SIZE || s.is_trivial() {
            continue;
        }
        match decompose(&s) {
            Ok(d) if d.diagonal.is_injective() => n += 1,
            Ok(_) => return outcome(false, format!("{}: diagonal not injective", s.name())),
            Err(e) => return outcome(false, format!("{}: {e}", s.name())),
        }
    }
    outcome(
        true,
        format!("Md_30 onto {targets:?} bijectively; {n} non-trivial battery meadows embed"),
    )
}

fn c7() -> Outcome {
    let models: Vec<_> = common::battery()
        .into_iter()
        .filter(|s| s.size() <= ENCODING_MAX_SIZE)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut agree, mut total, mut valid) = (0usize, 0usize, 0usize);
    let (mut field_cases, mut field_misses) = (0usize, 0usize);
    let mut first_miss = None;
    for _ in 0..ENCODING_CASES {
        let ce = common::random_conditional(&mut rng, ENCODING_DEPTH);
        let enc = encode_conditional(&ce).unwrap();
        for m in &models {
            let a = check_conditional(m, &ce).unwrap().holds();
            let b = check_equation(m, &enc).unwrap().holds();
            total += 1;
            valid += a as usize;
            if m.is_zero_totalized_field() {
                field_cases += 1;
                field_misses += (a != b) as usize;
            }
            if a == b {
                agree += 1;
            } else if first_miss.is_none() {
                first_miss = Some(format!("{ce} in {}", m.name()));
            }
        }
    }
    let detail = format!(
        "{agree}/{total} agree over {} meadows ({valid} valid cases); \
         in fields {}/{field_cases} agree, outside fields {}/{}{}",
        models.len(),
        field_cases - field_misses,
        agree - (field_cases - field_misses),
        total - field_cases,
        first_miss
            .map(|m| format!("; first disagreement: {m}"))
            .unwrap_or_default()
    );
    outcome(agree == total, detail)
}

fn c8() -> Outcome {
    for s in common::battery() {
        let r = derived_identity_suite(&s).unwrap();
        if let Some(e) = r.entries.iter().find(|e| !e.holds()) {
            return outcome(false, format!("{}: {} fails", s.name(), e.name));
        }
    }
    let gf4 = build_galois_field(2, 2).unwrap();
    let sq = gf4.elements().all(|x| gf4.inv(x) == Some(gf4.mul(x, x)));
    outcome(
        sq,
        format!("all six entries hold on the battery; GF(4) x^-1 = x^2 at 4 elements: {sq}"),
    )
}

fn c9() -> Outcome {
    let l1 = ln_equation(1);
    let l4 = ln_equation(4);
    let q = sample_check(&l4, RATIONAL_SAMPLES, SEED).unwrap();
    let z3 = check_equation(&build_mdk(3).unwrap(), &l1).unwrap();
    let mut detail = format!("Q0 L4 {}; Z_3 L1 {}", q.holds(), z3.holds());
    let mut pass = q.holds() && z3.holds();
    for p in [2, 3, 5, 7, 11, 13] {
        let v = check_equation(&build_mdk(p).unwrap(), &l4).unwrap();
        match v.witness() {
            Some(w) => detail.push_str(&format!("; Z_{p} fails at {w}")),
            None => {
                pass = false;
                detail.push_str(&format!("; Z_{p} holds"));
            }
        }
    }
    outcome(pass, detail)
}

fn c10() -> Outcome {
    let mut failures = Vec::new();
    for set in [AxiomSet::Md, AxiomSet::SIP, AxiomSet::Ref] {
        for ax in set.axioms() {
            if let Verdict::Fails(a) = sample_check(&ax.equation, RATIONAL_SAMPLES, SEED).unwrap() {
                failures.push(format!("{} at {a:?}", ax.name));
            }
        }
    }
    let a: RationalAssignment = [("x".to_string(), RationalZT::zero())].into();
    let trace = eval_rational(&parse_term("x/x").unwrap(), &a).unwrap();
    let zero = trace.value.is_zero() && trace.unsafe_division_used;
    outcome(
        failures.is_empty() && zero,
        format!("Md, SIP, Ref exact at {RATIONAL_SAMPLES} samples each, failures {failures:?}; x/x at 0 = {} unsafe={}", trace.value, trace.unsafe_division_used),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Md_6 inverse table", Some(TABLE_LIMIT), c1),
        ("Md_10 inverse table", Some(TABLE_LIMIT), c2),
        (
            "axiom exhaustion for squarefree k <= 210",
            Some(EXHAUSTION_LIMIT),
            c3,
        ),
        ("squarefree characteristic over the battery", None, c4),
        ("expansion uniqueness", None, c5),
        ("decomposition into fields", Some(DECOMPOSE_LIMIT), c6),
        ("conditional encoding soundness", Some(ENCODING_LIMIT), c7),
        ("derived-identity suite", None, c8),
        ("L_n behaviour", None, c9),
        ("exact zero-totalized rationals", None, c10),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let o = timed(*limit, f);
        failed += !o.pass as usize;
        println!(
            "{} {:>2} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

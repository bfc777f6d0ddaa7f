use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use baxterlab::combinatorics::{row_json, stirling_first, stirling_second};
use baxterlab::congruences::{
    check_fermat_quotient_base, check_pa_congruence, check_sni_congruence, check_tensor_freshman,
    check_x_power_congruence,
};
use baxterlab::free_baxter::p1x_power;
use baxterlab::identities::verify_range;
use baxterlab::{Algebra, Base, BaxterElement, IdentityId, Ring, TensorWord, VerificationReport};
use num_bigint::BigInt;
use serde_json::Value;

use crate::{Cli, Command, Format, Kind, VerifyArgs};

const DEFAULT_MAX_DEGREE: usize = 16;
const WARN_DEGREE: usize = 12;

fn max_degree() -> Result<usize> {
    match std::env::var("BAXTERLAB_MAX_DEGREE") {
        Ok(s) => s
            .trim()
            .parse()
            .with_context(|| format!("BAXTERLAB_MAX_DEGREE={s:?} is not a number")),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

/// Rejects results whose words would exceed the configured length cap.
fn check_degree(predicted: usize) -> Result<()> {
    let cap = max_degree()?;
    if predicted > cap {
        bail!("result words reach length {predicted}, above BAXTERLAB_MAX_DEGREE={cap}");
    }
    if predicted > WARN_DEGREE {
        eprintln!("warning: words of length {predicted}; term counts grow like Delannoy numbers");
    }
    Ok(())
}

/// `lambda-int`, `lambda-mod:P`, `int:W` or `mod:P:W`.
pub fn parse_ring(s: &str) -> Result<Ring> {
    let parts: Vec<&str> = s.split(':').collect();
    let ring = match parts.as_slice() {
        ["lambda-int"] => Ring::lambda_int(),
        ["lambda-mod", p] => Ring::formal(Base::ModP(p.parse()?))?,
        ["int", w] => Ring::pinned(Base::Int, w.parse::<BigInt>()?)?,
        ["mod", p, w] => Ring::pinned(Base::ModP(p.parse()?), w.parse::<BigInt>()?)?,
        _ => bail!("unknown ring {s:?}; expected lambda-int, lambda-mod:P, int:W or mod:P:W"),
    };
    Ok(ring)
}

fn read_element(path: &Path, ring: Option<&Ring>) -> Result<BaxterElement> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let json: Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let default = ring.cloned().unwrap_or_else(Ring::lambda_int);
    let elem = BaxterElement::from_json(&json, &default)
        .with_context(|| format!("reading element from {}", path.display()))?;
    if let Some(r) = ring {
        if elem.ring() != r {
            bail!(
                "{} is over {}, but --ring asks for {r}",
                path.display(),
                elem.ring()
            );
        }
    }
    Ok(elem)
}

fn emit_element(
    out: &mut impl Write,
    elem: &BaxterElement,
    target: Option<&Path>,
    text: bool,
    ascii: bool,
) -> Result<()> {
    let body = if text {
        elem.render(ascii)
    } else {
        serde_json::to_string(&elem.to_json())?
    };
    match target {
        Some(path) => fs::write(path, format!("{body}\n"))
            .with_context(|| format!("writing {}", path.display()))?,
        None => writeln!(out, "{body}")?,
    }
    Ok(())
}

fn pa_battery() -> Vec<BaxterElement> {
    let alg = Algebra::formal();
    let r = alg.ring();
    let w = |e: &[u32]| TensorWord::new(e.to_vec()).expect("non-empty");
    let word = |e: &[u32]| BaxterElement::word(&alg, w(e));
    vec![
        word(&[0]),
        word(&[1]),
        &word(&[1]) + &word(&[2]),
        word(&[0, 1]),
        word(&[1, 2]),
        BaxterElement::from_terms(
            &alg,
            [
                (w(&[1, 1]), r.from_int(2)),
                (w(&[0]), r.lambda()),
                (w(&[2, 0]), r.from_int(-1)),
            ],
        )
        .expect("ring coefficients"),
    ]
}

fn freshman_battery() -> Vec<TensorWord> {
    let mut words = Vec::new();
    for len in 1..=3u32 {
        for code in 0..3u32.pow(len) {
            let e = (0..len).map(|i| (code / 3u32.pow(i)) % 3).collect();
            words.push(TensorWord::new(e).expect("non-empty"));
        }
    }
    words
}

fn parse_word(s: &str) -> Result<TensorWord> {
    let exps = s
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .with_context(|| format!("bad word {s:?}"))?;
    Ok(TensorWord::new(exps)?)
}

fn run_verify(out: &mut impl Write, args: &VerifyArgs) -> Result<ExitCode> {
    let id: IdentityId = args.identity.parse()?;
    let reports: Vec<VerificationReport> = if id.is_congruence() {
        let Some(p) = args.prime else {
            bail!("--identity {id} needs --prime");
        };
        match id {
            IdentityId::Sni => vec![check_sni_congruence(p)?],
            IdentityId::Xpow => vec![check_x_power_congruence(p)?],
            IdentityId::Pa => {
                let elems = match &args.elem {
                    Some(path) => vec![read_element(path, None)?],
                    None => pa_battery(),
                };
                elems
                    .iter()
                    .map(|a| check_pa_congruence(p, a))
                    .collect::<Result<_, _>>()?
            }
            IdentityId::Freshman => {
                let words = match &args.word {
                    Some(s) => vec![parse_word(s)?],
                    None => freshman_battery(),
                };
                words
                    .iter()
                    .map(|w| check_tensor_freshman(p, w))
                    .collect::<Result<_, _>>()?
            }
            IdentityId::Fermat => vec![check_fermat_quotient_base(p, args.trials, args.seed)?],
            _ => unreachable!("non-congruence ids handled below"),
        }
    } else {
        let Some(n) = args.n_max else {
            bail!("--identity {id} needs --n-max");
        };
        verify_range(id, n)?
    };

    let failures: Vec<&VerificationReport> = reports.iter().filter(|r| !r.passed).collect();
    if failures.is_empty() {
        for r in &reports {
            writeln!(out, "{}", serde_json::to_string(&r.summary_json())?)?;
        }
        Ok(ExitCode::SUCCESS)
    } else {
        for r in failures {
            writeln!(out, "{}", serde_json::to_string(&r.to_json())?)?;
        }
        Ok(ExitCode::from(1))
    }
}

pub fn run(cli: &Cli, out: &mut impl Write) -> Result<ExitCode> {
    match &cli.command {
        Command::Stirling { kind, n, k } => {
            let value = |n, k| match kind {
                Kind::First => stirling_first(n, k),
                Kind::Second => stirling_second(n, k),
            };
            match k {
                Some(k) => writeln!(out, "{}", value(*n, *k))?,
                None => {
                    let row: Vec<BigInt> = (0..=*n).map(|k| value(*n, k)).collect();
                    writeln!(out, "{}", row_json(&row))?;
                }
            }
        }
        Command::Product {
            lhs,
            rhs,
            ring,
            out: target,
            text,
        } => {
            let ring = ring.as_deref().map(parse_ring).transpose()?;
            let a = read_element(lhs, ring.as_ref())?;
            let b = read_element(rhs, ring.as_ref())?;
            if !a.is_zero() && !b.is_zero() {
                check_degree(a.max_word_len() + b.max_word_len() - 1)?;
            }
            let prod = a.product(&b)?;
            emit_element(out, &prod, target.as_deref(), *text, cli.ascii)?;
        }
        Command::Power {
            elem,
            n,
            ring,
            out: target,
            text,
        } => {
            let ring = ring.as_deref().map(parse_ring).transpose()?;
            let a = read_element(elem, ring.as_ref())?;
            if !a.is_zero() {
                check_degree(1 + *n as usize * (a.max_word_len() - 1))?;
            }
            emit_element(out, &a.power(*n), target.as_deref(), *text, cli.ascii)?;
        }
        Command::ExpandP1x { n, format } => {
            check_degree(*n as usize + 1)?;
            let e = p1x_power(&Algebra::formal(), *n);
            if matches!(format, Format::Both | Format::Text) {
                writeln!(out, "{}", e.render(cli.ascii))?;
            }
            if matches!(format, Format::Both | Format::Json) {
                writeln!(out, "{}", serde_json::to_string(&e.to_json())?)?;
            }
        }
        Command::Verify(args) => return run_verify(out, args),
    }
    Ok(ExitCode::SUCCESS)
}

use std::io::Read;

use clap::Parser;
use rayon::prelude::*;

use holkit::checks::{self, Bounds, Sample, Suite, Tally};
use holkit::fgroup::{decompose_f, is_inner};
use holkit::holomorph::{corollary_injection, embed_e, ActionTable};
use holkit::intmat::sanov_rewrite;
use holkit::pi::pi_normal_form;
use holkit::relations::{standard_relations, Relation};
use holkit::text::{
    format_automorphism, format_endo, format_f, format_hol, format_pi, format_semidirect,
    parse_automorphism, parse_endo, parse_f, parse_hol, parse_pi, parse_semidirect,
};
use holkit::{Alphabet, Error, IntMatrix2};

use crate::args::{AlphabetArg, Cli, Command, Group, RandomCheckArgs};
use crate::record::{Record, Verdict};

pub enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// The input is well formed but the mathematical claim fails: exit code 1.
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotCongruent
            | Error::NotInSanov
            | Error::NotInner
            | Error::NotInF(_)
            | Error::NotInPi => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// What a command prints: text lines in text mode, the record (if any) in
/// records mode.
pub struct Report {
    pub text: Vec<String>,
    pub record: Option<Record>,
    pub pass: bool,
}

impl Report {
    pub fn text(&self) -> String {
        self.text.join("\n")
    }
}

type Outcome = Result<Vec<Report>, Failure>;

fn alphabet(a: &AlphabetArg) -> Result<Alphabet, Failure> {
    Ok(Alphabet::parse_list(&a.alphabet)?)
}

/// The subcommand name and its arguments, as they would be typed.
fn invocation(cmd: &Command) -> (String, Vec<String>) {
    let alpha = |a: &AlphabetArg| vec!["--alphabet".to_string(), a.alphabet.clone()];
    let group = |g: &Group| {
        let name = clap::ValueEnum::to_possible_value(g)
            .expect("named")
            .get_name()
            .to_string();
        vec!["--group".to_string(), name]
    };
    let mut v: Vec<String> = Vec::new();
    let kind = match cmd {
        Command::Reduce { alphabet, word } => {
            v.extend(alpha(alphabet));
            v.push(word.clone());
            "reduce"
        }
        Command::Mul {
            group: g,
            alphabet,
            elements,
        } => {
            v.extend(group(g));
            v.extend(alpha(alphabet));
            v.extend(elements.iter().cloned());
            "mul"
        }
        Command::Inv {
            group: g,
            alphabet,
            element,
        } => {
            v.extend(group(g));
            v.extend(alpha(alphabet));
            v.push(element.clone());
            "inv"
        }
        Command::Apply {
            alphabet,
            endo,
            word,
        } => {
            v.extend(alpha(alphabet));
            v.extend([endo.clone(), word.clone()]);
            "apply"
        }
        Command::Compose { alphabet, endos } => {
            v.extend(alpha(alphabet));
            v.extend(endos.iter().cloned());
            "compose"
        }
        Command::Ab { alphabet, endo } => {
            v.extend(alpha(alphabet));
            v.push(endo.clone());
            "ab"
        }
        Command::SanovRewrite { matrix } => {
            v.push(matrix.clone());
            "sanov-rewrite"
        }
        Command::IsInner { endo } => {
            v.push(endo.clone());
            "is-inner"
        }
        Command::DecomposeF { endo } => {
            v.push(endo.clone());
            "decompose-f"
        }
        Command::NfPi { element } => {
            v.push(element.clone());
            "nf-pi"
        }
        Command::F1 { element } => {
            v.push(element.clone());
            "f1"
        }
        Command::F2 { element } => {
            v.push(element.clone());
            "f2"
        }
        Command::EmbedFf { element } => {
            v.push(element.clone());
            "embed-ff"
        }
        Command::EmbedAut3 { m, element } => {
            v.extend(["--m".to_string(), m.to_string(), element.clone()]);
            "embed-aut3"
        }
        Command::Semidirect {
            actions,
            inject,
            elements,
        } => {
            for a in actions {
                v.extend(["--action".to_string(), a.clone()]);
            }
            if *inject {
                v.push("--inject".to_string());
            }
            v.extend(elements.iter().cloned());
            "semidirect"
        }
        Command::VerifyRelations { extra } => {
            for r in extra {
                v.extend(["--extra".to_string(), r.clone()]);
            }
            "verify-relations"
        }
        Command::RandomCheck(_) => "random-check",
        Command::Replay { path } => {
            v.push(path.clone());
            "replay"
        }
    };
    // positional arguments may start with '-' (e.g. negative matrix entries)
    if let Some(first_positional) = positional_start(cmd, &v) {
        v.insert(first_positional, "--".to_string());
    }
    (kind.to_string(), v)
}

fn positional_start(cmd: &Command, args: &[String]) -> Option<usize> {
    let flags = match cmd {
        Command::Reduce { .. }
        | Command::Apply { .. }
        | Command::Compose { .. }
        | Command::Ab { .. } => 2,
        Command::Mul { .. } | Command::Inv { .. } => 4,
        Command::EmbedAut3 { .. } => 2,
        Command::Semidirect {
            actions, inject, ..
        } => 2 * actions.len() + usize::from(*inject),
        Command::VerifyRelations { .. } | Command::RandomCheck(_) => return None,
        _ => 0,
    };
    (flags < args.len()).then_some(flags)
}

fn single(cmd: &Command, outputs: Vec<String>) -> Outcome {
    let (kind, inputs) = invocation(cmd);
    Ok(vec![Report {
        text: outputs.clone(),
        record: Some(Record {
            kind,
            inputs,
            outputs,
            seed: None,
            verdict: Verdict::Pass,
        }),
        pass: true,
    }])
}

/// Run a command; mathematical failures of single-shot commands are
/// reported as [`Failure::Math`].
pub fn run(cmd: &Command) -> Outcome {
    match cmd {
        Command::Reduce { alphabet: a, word } => {
            let a = alphabet(a)?;
            let w = a.parse_word(word)?;
            single(cmd, vec![a.format_word(&w)])
        }
        Command::Mul {
            group,
            alphabet: a,
            elements,
        } => single(cmd, vec![multiply(*group, a, elements)?]),
        Command::Inv {
            group,
            alphabet: a,
            element,
        } => single(cmd, vec![invert(*group, a, element)?]),
        Command::Apply {
            alphabet: a,
            endo,
            word,
        } => {
            let a = alphabet(a)?;
            let e = parse_endo(endo, &a)?;
            let w = a.parse_word(word)?;
            single(cmd, vec![a.format_word(&e.apply(&w)?)])
        }
        Command::Compose { alphabet: a, endos } => {
            let a = alphabet(a)?;
            let mut acc = parse_endo(&endos[0], &a)?;
            for e in &endos[1..] {
                acc = acc.compose(&parse_endo(e, &a)?)?;
            }
            single(cmd, vec![format_endo(&acc, &a)])
        }
        Command::Ab { alphabet: a, endo } => {
            let a = alphabet(a)?;
            let m = parse_endo(endo, &a)?.abelianize();
            let rows: Vec<String> = m
                .iter()
                .map(|r| {
                    format!(
                        "[{}]",
                        r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
                    )
                })
                .collect();
            single(cmd, vec![format!("[{}]", rows.join(","))])
        }
        Command::SanovRewrite { matrix } => {
            let m: IntMatrix2 = matrix.parse()?;
            single(cmd, vec![sanov_rewrite(&m)?.to_string()])
        }
        Command::IsInner { endo } => {
            let ab = Alphabet::ab();
            let w = is_inner(&parse_endo(endo, &ab)?)?;
            single(cmd, vec![ab.format_word(&w)])
        }
        Command::DecomposeF { endo } => {
            let f = decompose_f(&parse_endo(endo, &Alphabet::ab())?)?;
            single(cmd, vec![format_f(&f)])
        }
        Command::NfPi { element } => {
            single(cmd, vec![format_pi(&pi_normal_form(&parse_hol(element)?)?)])
        }
        Command::F1 { element } => single(cmd, vec![format_f(&parse_pi(element)?.f1())]),
        Command::F2 { element } => single(cmd, vec![format_f(&parse_pi(element)?.f2())]),
        Command::EmbedFf { element } => {
            let (f1, f2) = parse_pi(element)?.embed();
            single(cmd, vec![format_f(&f1), format_f(&f2)])
        }
        Command::EmbedAut3 { m, element } => {
            let e = embed_e(*m, &parse_hol(element)?)?;
            single(
                cmd,
                vec![format_endo(e.forward(), &Alphabet::embedding(*m))],
            )
        }
        Command::Semidirect {
            actions,
            inject,
            elements,
        } => {
            let ab = Alphabet::ab();
            let table = ActionTable::new(
                2,
                actions
                    .iter()
                    .map(|a| parse_automorphism(a, &ab))
                    .collect::<holkit::Result<Vec<_>>>()?,
            )?;
            let base = Alphabet::base(table.base_rank());
            let mut acc = table.identity();
            for e in elements {
                acc = table.mul(&acc, &parse_semidirect(e, &ab, &base)?)?;
            }
            let out = if *inject {
                let (p, h) = corollary_injection(&table, &acc)?;
                vec![format_hol(&p), base.format_word(&h)]
            } else {
                vec![format_semidirect(&acc, &ab, &base)]
            };
            single(cmd, out)
        }
        Command::VerifyRelations { extra } => {
            let mut relations = standard_relations();
            for r in extra {
                relations.push(Relation::parse(r)?);
            }
            let results: Vec<_> = relations.iter().map(Relation::check).collect();
            let pass = results.iter().all(|r| r.passed());
            let lines: Vec<String> = results.iter().map(ToString::to_string).collect();
            let (kind, inputs) = invocation(cmd);
            Ok(vec![Report {
                text: lines.clone(),
                record: Some(Record {
                    kind,
                    inputs,
                    outputs: lines,
                    seed: None,
                    verdict: if pass { Verdict::Pass } else { Verdict::Fail },
                }),
                pass,
            }])
        }
        Command::RandomCheck(args) => random_check(args),
        Command::Replay { path } => replay(path),
    }
}

fn multiply(group: Group, a: &AlphabetArg, elements: &[String]) -> Result<String, Failure> {
    Ok(match group {
        Group::Free => {
            let a = alphabet(a)?;
            let mut acc = a.parse_word(&elements[0])?;
            for e in &elements[1..] {
                acc = acc.mul(&a.parse_word(e)?)?;
            }
            a.format_word(&acc)
        }
        Group::Aut => {
            let a = alphabet(a)?;
            let mut acc = parse_automorphism(&elements[0], &a)?;
            for e in &elements[1..] {
                acc = acc.compose(&parse_automorphism(e, &a)?)?;
            }
            format_automorphism(&acc, &a)
        }
        Group::Hol => {
            let mut acc = parse_hol(&elements[0])?;
            for e in &elements[1..] {
                acc = acc.mul(&parse_hol(e)?)?;
            }
            format_hol(&acc)
        }
        Group::F => {
            let mut acc = parse_f(&elements[0])?;
            for e in &elements[1..] {
                acc = acc.mul(&parse_f(e)?);
            }
            format_f(&acc)
        }
        Group::Pi => {
            let mut acc = parse_pi(&elements[0])?;
            for e in &elements[1..] {
                acc = acc.mul(&parse_pi(e)?);
            }
            format_pi(&acc)
        }
        Group::Mat => {
            let mut acc: IntMatrix2 = elements[0].parse()?;
            for e in &elements[1..] {
                acc = acc.mul(&e.parse()?);
            }
            acc.to_string()
        }
    })
}

fn invert(group: Group, a: &AlphabetArg, element: &str) -> Result<String, Failure> {
    Ok(match group {
        Group::Free => {
            let a = alphabet(a)?;
            a.format_word(&a.parse_word(element)?.inv())
        }
        Group::Aut => {
            let a = alphabet(a)?;
            format_automorphism(&parse_automorphism(element, &a)?.invert(), &a)
        }
        Group::Hol => format_hol(&parse_hol(element)?.inv()),
        Group::F => format_f(&parse_f(element)?.inv()),
        Group::Pi => format_pi(&parse_pi(element)?.inv()),
        Group::Mat => {
            let m: IntMatrix2 = element.parse()?;
            m.inverse()
                .ok_or_else(|| Failure::Math(format!("{m} is not invertible over the integers")))?
                .to_string()
        }
    })
}

fn suite_bounds(suite: Suite, args: &RandomCheckArgs) -> Bounds {
    let d = suite.default_bounds();
    Bounds {
        word: args.max_len.unwrap_or(d.word),
        x: args.max_x.unwrap_or(d.x),
        steps: args.max_steps.unwrap_or(d.steps),
        max_work: args.max_work.unwrap_or(d.max_work),
    }
}

/// Command line reproducing exactly one sample.
fn sample_inputs(s: &Sample, bounds: &Bounds) -> Vec<String> {
    [
        ("--suite", s.suite.name().to_string()),
        ("--seed", s.seed.to_string()),
        ("--start", s.index.to_string()),
        ("--count", "1".to_string()),
        ("--max-len", bounds.word.to_string()),
        ("--max-x", bounds.x.to_string()),
        ("--max-steps", bounds.steps.to_string()),
        ("--max-work", bounds.max_work.to_string()),
    ]
    .into_iter()
    .flat_map(|(k, v)| [k.to_string(), v])
    .collect()
}

fn random_check(args: &RandomCheckArgs) -> Outcome {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse()?]
    };
    let end = args
        .start
        .checked_add(args.count)
        .ok_or_else(|| Failure::Usage("--start + --count overflows".into()))?;
    let mut reports = Vec::new();
    for suite in suites {
        let bounds = suite_bounds(suite, args);
        let samples: Vec<Sample> = (args.start..end)
            .into_par_iter()
            .map(|i| checks::sample(suite, args.seed, i, &bounds))
            .collect();
        let mut tally = Tally::default();
        for s in &samples {
            tally.add(s.verdict);
        }
        let pass = tally.all_passed();
        for s in &samples {
            reports.push(Report {
                text: Vec::new(),
                record: Some(Record {
                    kind: "random-check".into(),
                    inputs: sample_inputs(s, &bounds),
                    outputs: s
                        .inputs
                        .iter()
                        .map(|x| format!("sample: {x}"))
                        .chain(s.outputs.iter().map(|x| format!("result: {x}")))
                        .chain([format!("verdict: {}", s.verdict)])
                        .collect(),
                    seed: Some(s.seed),
                    verdict: if s.verdict == checks::Verdict::Pass {
                        Verdict::Pass
                    } else {
                        Verdict::Fail
                    },
                }),
                pass: true,
            });
        }
        let mut text = vec![format!(
            "{} {suite}: {tally} (seed {}, samples {}..{end})",
            if pass { "PASS" } else { "FAIL" },
            args.seed,
            args.start
        )];
        for s in samples
            .iter()
            .filter(|s| s.verdict != checks::Verdict::Pass)
            .take(5)
        {
            text.push(format!(
                "  {} sample {}: {}",
                s.verdict,
                s.index,
                s.inputs.join(" ; ")
            ));
        }
        reports.push(Report {
            text,
            record: None,
            pass,
        });
    }
    Ok(reports)
}

fn replay(path: &str) -> Outcome {
    let mut content = String::new();
    let read = if path == "-" {
        std::io::stdin().read_to_string(&mut content)
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut content))
    };
    read.map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    let mut text = Vec::new();
    let mut mismatches = 0;
    let mut total = 0;
    for (n, line) in content.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        total += 1;
        let rec: Record = serde_json::from_str(line)
            .map_err(|e| Failure::Usage(format!("line {}: not a certificate: {e}", n + 1)))?;
        let argv = std::iter::once("holkit".to_string())
            .chain(std::iter::once(rec.kind.clone()))
            .chain(rec.inputs.iter().cloned());
        let cli = Cli::try_parse_from(argv)
            .map_err(|e| Failure::Usage(format!("line {}: {}", n + 1, e.kind())))?;
        if matches!(cli.command, Command::Replay { .. }) {
            return Err(Failure::Usage(format!("line {}: nested replay", n + 1)));
        }
        let again: Vec<Record> = match run(&cli.command) {
            Ok(reports) => reports.into_iter().filter_map(|r| r.record).collect(),
            Err(Failure::Math(msg)) => vec![failed_record(&cli.command, msg)],
            Err(Failure::Usage(msg)) => {
                return Err(Failure::Usage(format!("line {}: {msg}", n + 1)))
            }
        };
        if again.len() == 1 && again[0] == rec {
            text.push(format!("ok    line {}: {}", n + 1, rec.kind));
        } else {
            mismatches += 1;
            text.push(format!("DIFF  line {}: {}", n + 1, rec.kind));
        }
    }
    text.push(format!(
        "replayed {total} certificates, {mismatches} mismatches"
    ));
    let pass = mismatches == 0;
    Ok(vec![Report {
        text,
        record: None,
        pass,
    }])
}

/// The record emitted for a command that failed mathematically.
pub fn failed_record(cmd: &Command, msg: String) -> Record {
    let (kind, inputs) = invocation(cmd);
    Record {
        kind,
        inputs,
        outputs: vec![format!("error: {msg}")],
        seed: None,
        verdict: Verdict::Fail,
    }
}

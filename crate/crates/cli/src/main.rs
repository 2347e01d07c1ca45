use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use commafree::dips::{base_letters, factor_dips, layered_parse, render_dip_parse, Rejection};
use commafree::eastman::render_trace;
use commafree::lazard::render_snapshot;
use commafree::melancon::render_state;
use commafree::verify::{
    check_comma_free, check_overlap_free, check_synchronizing, compare_codes, Sampling,
};
use commafree::{
    classify, compare_radix, eastman_code, eastman_rotate, eliminate, index, melancon_rotate,
    necklace_count, Alphabet, OrderKind, SigmaClassification, Word,
};

/// Comma-free codes, dips and Lazard elimination over an ordered alphabet.
#[derive(Parser)]
#[command(name = "commafree", version)]
struct Cli {
    /// Letters in increasing order, e.g. "abc" for a < b < c.
    #[arg(long, short, global = true)]
    alphabet: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    words: Vec<String>,
    /// Read words from a file, one per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Factor words into dips; with --levels, show the whole superdip tower.
    Factor {
        #[arg(long)]
        levels: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Report which S_n, if any, a word belongs to.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Largest n with w in D_n^+ P_n.
    Index {
        #[command(flatten)]
        input: Input,
    },
    /// Rotate words to their code representative.
    Rotate {
        #[arg(long, value_enum, default_value = "eastman")]
        method: RotateMethod,
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Merge letters until the Lazard-set conjugate remains.
    Melancon {
        #[arg(long)]
        order: OrderKind,
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Build the comma-free code of an odd length.
    Code {
        #[arg(long, value_enum)]
        method: CodeMethod,
        /// Order for --method lazard.
        #[arg(long, default_value = "eastman")]
        order: OrderKind,
        #[arg(long)]
        length: usize,
    },
    /// Run Lazard elimination up to a length bound.
    Eliminate {
        #[arg(long)]
        order: OrderKind,
        #[arg(long)]
        maxlen: usize,
        #[arg(long)]
        snapshots: bool,
    },
    /// Print the Hall tree of a word of the Lazard set.
    HallTree {
        #[arg(long)]
        order: OrderKind,
        word: String,
    },
    /// Check a property of a code or a dip.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Number of primitive conjugacy classes of a length.
    Count {
        #[arg(long)]
        length: usize,
    },
    /// Compare two codes stored one word per line.
    Compare { left: PathBuf, right: PathBuf },
}

#[derive(Subcommand)]
enum Check {
    CommaFree {
        #[command(flatten)]
        input: Input,
    },
    Overlap {
        /// Check this many random triples instead of all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        input: Input,
    },
    Sync {
        /// Longest prefix u to try.
        #[arg(long, default_value_t = 6)]
        max_u: usize,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RotateMethod {
    Eastman,
}

#[derive(Clone, Copy, ValueEnum)]
enum CodeMethod {
    Eastman,
    Scholtz,
    Lazard,
}

/// Whether the requested property held.
enum Verdict {
    Holds,
    Violated,
}

#[derive(Serialize)]
struct EliminationJson {
    order: String,
    #[serde(rename = "N")]
    n: usize,
    zs: Vec<String>,
    nu: BTreeMap<String, usize>,
}

struct Ctx {
    alphabet: Alphabet,
    json: bool,
}

impl Ctx {
    fn render(&self, w: &[u8]) -> String {
        self.alphabet.render(w)
    }

    fn render_all(&self, ws: &[Word]) -> Vec<String> {
        ws.iter().map(|w| self.render(w)).collect()
    }

    fn words(&self, input: &Input) -> anyhow::Result<Vec<Word>> {
        let mut texts = input.words.clone();
        if let Some(path) = &input.file {
            texts.extend(read_lines(path)?);
        }
        if texts.is_empty() {
            bail!("no words given");
        }
        texts
            .iter()
            .map(|t| self.alphabet.parse(t).map_err(Into::into))
            .collect()
    }

    fn emit(&self, text: impl AsRef<str>, value: serde_json::Value) {
        if self.json {
            println!("{value}");
        } else {
            println!("{}", text.as_ref());
        }
    }
}

fn read_lines(path: &Path) -> anyhow::Result<Vec<String>> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect())
}

fn sorted(mut ws: Vec<Word>) -> Vec<Word> {
    ws.sort_by(|u, v| compare_radix(u, v));
    ws
}

fn describe(c: &SigmaClassification) -> String {
    let why = |r: &Rejection| match r {
        Rejection::Residual => "unfinished dip",
        Rejection::Head => "starts with an even dip",
    };
    match c {
        SigmaClassification::Level(n) => format!("S_{n}"),
        SigmaClassification::Star {
            level,
            count,
            reason,
        } => {
            format!("product of {count} words of S_{level} ({})", why(reason))
        }
        SigmaClassification::Rejected { reason, .. } => format!("not in S_1^* ({})", why(reason)),
    }
}

fn spans(ctx: &Ctx, word: &Word, ranges: &[std::ops::Range<usize>]) -> String {
    if ranges.is_empty() {
        return "-".into();
    }
    ranges
        .iter()
        .map(|r| ctx.render(&word[r.clone()]))
        .collect::<Vec<_>>()
        .join("·")
}

fn factor(ctx: &Ctx, levels: bool, words: &[Word]) -> anyhow::Result<()> {
    for w in words {
        if !levels {
            let parse = factor_dips(w, &base_letters(w));
            let dips: Vec<String> = parse
                .dips
                .iter()
                .map(|d| ctx.render(&w[d[0].start..d[d.len() - 1].end]))
                .collect();
            let residual = parse.residual.first().map(|l| ctx.render(&w[l.start..]));
            ctx.emit(
                render_dip_parse(&ctx.alphabet, w, &parse),
                json!({ "word": ctx.render(w), "dips": dips, "residual": residual }),
            );
            continue;
        }
        let parse = layered_parse(&ctx.alphabet, w)?;
        let mut lines = vec![ctx.render(w)];
        let mut out = Vec::new();
        for lp in &parse.levels {
            let tail =
                |r: &Option<std::ops::Range<usize>>| r.as_ref().map(|r| ctx.render(&w[r.clone()]));
            lines.push(format!(
                "  level {}: dips {} | residual: {} | superdips {}{}",
                lp.level,
                spans(ctx, w, &lp.dips),
                tail(&lp.residual).unwrap_or_else(|| "-".into()),
                spans(ctx, w, &lp.superdips),
                tail(&lp.head)
                    .map(|h| format!(" | head: {h}"))
                    .unwrap_or_default(),
            ));
            out.push(json!({
                "level": lp.level,
                "dips": lp.dips.iter().map(|r| ctx.render(&w[r.clone()])).collect::<Vec<_>>(),
                "dip_lengths": lp.dip_lengths,
                "residual": tail(&lp.residual),
                "head": tail(&lp.head),
                "superdips": lp.superdips.iter().map(|r| ctx.render(&w[r.clone()])).collect::<Vec<_>>(),
            }));
        }
        ctx.emit(
            lines.join("\n"),
            json!({ "word": ctx.render(w), "levels": out }),
        );
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<Verdict> {
    let Some(letters) = cli.alphabet else {
        bail!("--alphabet is required");
    };
    let ctx = Ctx {
        alphabet: Alphabet::new(&letters)?,
        json: cli.json,
    };
    let a = &ctx.alphabet;
    match cli.command {
        Command::Factor { levels, input } => factor(&ctx, levels, &ctx.words(&input)?)?,
        Command::Classify { input } => {
            for w in ctx.words(&input)? {
                let c = classify(a, &w)?;
                ctx.emit(
                    format!("{}: {}", ctx.render(&w), describe(&c)),
                    json!({ "word": ctx.render(&w), "level": c.sigma_level(), "description": describe(&c) }),
                );
            }
        }
        Command::Index { input } => {
            for w in ctx.words(&input)? {
                let i = index(a, &w)?;
                ctx.emit(
                    format!("{}: {i}", ctx.render(&w)),
                    json!({ "word": ctx.render(&w), "index": i }),
                );
            }
        }
        Command::Rotate {
            method: RotateMethod::Eastman,
            trace,
            input,
        } => {
            for w in ctx.words(&input)? {
                let t = eastman_rotate(a, &w)?;
                let text = if trace {
                    render_trace(a, &t)
                } else {
                    ctx.render(&t.output)
                };
                ctx.emit(
                    text,
                    json!({ "word": ctx.render(&w), "output": ctx.render(&t.output), "level": t.final_level }),
                );
            }
        }
        Command::Melancon {
            order,
            trace,
            input,
        } => {
            for w in ctx.words(&input)? {
                let (out, log) = melancon_rotate(&w, order.order())?;
                let states: Vec<String> = log.states().iter().map(|s| render_state(a, s)).collect();
                let text = if trace {
                    format!("{}\nresult: {}", states.join("\n"), ctx.render(&out))
                } else {
                    ctx.render(&out)
                };
                ctx.emit(
                    text,
                    json!({ "word": ctx.render(&w), "output": ctx.render(&out), "states": states }),
                );
            }
        }
        Command::Code {
            method,
            order,
            length,
        } => {
            if length % 2 == 0 {
                bail!("codes are built for odd lengths only, got {length}");
            }
            let code = match method {
                CodeMethod::Eastman => eastman_code(a, length)?,
                CodeMethod::Scholtz => {
                    eliminate(a, OrderKind::Scholtz.order(), length, false)?.lazard_words(length)?
                }
                CodeMethod::Lazard => {
                    eliminate(a, order.order(), length, false)?.lazard_words(length)?
                }
            };
            let words = ctx.render_all(&sorted(code));
            ctx.emit(words.join(" "), json!({ "length": length, "code": words }));
        }
        Command::Eliminate {
            order,
            maxlen,
            snapshots,
        } => {
            let trace = eliminate(a, order.order(), maxlen, snapshots)?;
            if ctx.json {
                let out = EliminationJson {
                    order: order.to_string(),
                    n: maxlen,
                    zs: ctx.render_all(trace.zs()),
                    nu: trace
                        .zs()
                        .iter()
                        .map(|z| (ctx.render(z), trace.nu(z).unwrap()))
                        .collect(),
                };
                println!("{}", serde_json::to_string(&out)?);
            } else if let Some(snaps) = trace.snapshots() {
                // the final snapshot is always empty
                for (i, snap) in snaps[..snaps.len() - 1].iter().enumerate() {
                    println!("{}", render_snapshot(a, i + 1, maxlen, snap));
                }
            } else {
                for (i, z) in trace.zs().iter().enumerate() {
                    println!(
                        "z_{} = {} (nu={})",
                        i + 1,
                        ctx.render(z),
                        trace.nu(z).unwrap()
                    );
                }
            }
        }
        Command::HallTree { order, word } => {
            let w = a.parse(&word)?;
            if w.is_empty() {
                bail!("the empty word has no Hall tree");
            }
            let trace = eliminate(a, order.order(), w.len(), false)?;
            let tree = trace.hall_tree(&w)?.render(a);
            ctx.emit(&tree, json!({ "word": word, "tree": tree }));
        }
        Command::Verify { check } => return verify(&ctx, check),
        Command::Count { length } => {
            let c = necklace_count(length, a.size())?;
            ctx.emit(
                c.count.to_string(),
                json!({ "length": length, "alphabet_size": a.size(), "count": c.count }),
            );
        }
        Command::Compare { left, right } => {
            let parse = |p: &Path| -> anyhow::Result<Vec<Word>> {
                read_lines(p)?
                    .iter()
                    .map(|t| a.parse(t).map_err(Into::into))
                    .collect()
            };
            let report = compare_codes(&parse(&left)?, &parse(&right)?)?;
            let pairs: Vec<String> = report
                .pairs
                .iter()
                .map(|(l, r)| format!("{} ~ {}", ctx.render(l), ctx.render(r)))
                .collect();
            let text = [
                format!("common: {}", ctx.render_all(&report.common).join(" ")),
                format!("only left: {}", ctx.render_all(&report.only_left).join(" ")),
                format!(
                    "only right: {}",
                    ctx.render_all(&report.only_right).join(" ")
                ),
                format!("conjugate pairs: {}", pairs.join(", ")),
                format!(
                    "unpaired left: {}",
                    ctx.render_all(&report.unpaired_left).join(" ")
                ),
                format!(
                    "unpaired right: {}",
                    ctx.render_all(&report.unpaired_right).join(" ")
                ),
            ]
            .join("\n");
            ctx.emit(
                text,
                json!({
                    "identical": report.identical(),
                    "common": ctx.render_all(&report.common),
                    "only_left": ctx.render_all(&report.only_left),
                    "only_right": ctx.render_all(&report.only_right),
                    "pairs": report.pairs.iter().map(|(l, r)| [ctx.render(l), ctx.render(r)]).collect::<Vec<_>>(),
                    "unpaired_left": ctx.render_all(&report.unpaired_left),
                    "unpaired_right": ctx.render_all(&report.unpaired_right),
                }),
            );
            if !report.identical() {
                return Ok(Verdict::Violated);
            }
        }
    }
    Ok(Verdict::Holds)
}

fn verify(ctx: &Ctx, check: Check) -> anyhow::Result<Verdict> {
    let a = &ctx.alphabet;
    let mut ok = true;
    match check {
        Check::CommaFree { input } => {
            let r = check_comma_free(a, &ctx.words(&input)?)?;
            ok = r.is_comma_free;
            let text = match &r.witness {
                None => format!(
                    "comma-free: yes ({} words, {} of {} classes)",
                    r.code.len(),
                    r.class_coverage,
                    r.expected.unwrap_or(0)
                ),
                Some(w) => format!(
                    "comma-free: no ({} occurs in {}·{} at offset {})",
                    ctx.render(&w.x),
                    ctx.render(&w.y),
                    ctx.render(&w.z),
                    w.offset
                ),
            };
            ctx.emit(
                text,
                json!({
                    "comma_free": r.is_comma_free,
                    "maximal": r.is_maximal(),
                    "class_coverage": r.class_coverage,
                    "expected": r.expected,
                    "witness": r.witness.as_ref().map(|w| json!({
                        "x": ctx.render(&w.x), "y": ctx.render(&w.y), "z": ctx.render(&w.z), "offset": w.offset,
                    })),
                }),
            );
        }
        Check::Overlap {
            sample,
            seed,
            input,
        } => {
            let sampling = match sample {
                Some(triples) => Sampling::Random { triples, seed },
                None => Sampling::Exhaustive,
            };
            let r = check_overlap_free(&ctx.words(&input)?, sampling);
            ok = r.overlap_free;
            let text = match &r.witness {
                None => format!("overlap-free: yes ({} triples)", r.triples_checked),
                Some(w) => format!(
                    "overlap-free: no ({}|{} against y={}, z={})",
                    ctx.render(&w.x[..w.split]),
                    ctx.render(&w.x[w.split..]),
                    ctx.render(&w.y),
                    ctx.render(&w.z)
                ),
            };
            ctx.emit(
                text,
                json!({
                    "overlap_free": r.overlap_free,
                    "triples_checked": r.triples_checked,
                    "witness": r.witness.as_ref().map(|w| json!({
                        "x": ctx.render(&w.x), "split": w.split, "y": ctx.render(&w.y), "z": ctx.render(&w.z),
                    })),
                }),
            );
        }
        Check::Sync { max_u, input } => {
            for x in ctx.words(&input)? {
                let r = check_synchronizing(a, &x, max_u)?;
                ok &= r.synchronizing;
                let text = match &r.witness {
                    None => format!(
                        "{}: synchronizing ({} prefixes)",
                        ctx.render(&x),
                        r.prefixes_checked
                    ),
                    Some(u) => format!(
                        "{}: not synchronizing (u={})",
                        ctx.render(&x),
                        ctx.render(u)
                    ),
                };
                ctx.emit(
                    text,
                    json!({
                        "word": ctx.render(&x),
                        "synchronizing": r.synchronizing,
                        "witness": r.witness.as_ref().map(|u| ctx.render(u)),
                        "prefixes_checked": r.prefixes_checked,
                    }),
                );
            }
        }
    }
    Ok(if ok {
        Verdict::Holds
    } else {
        Verdict::Violated
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Holds) => ExitCode::SUCCESS,
        Ok(Verdict::Violated) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", format!("{e:#}").replace('\n', " "));
            ExitCode::from(2)
        }
    }
}

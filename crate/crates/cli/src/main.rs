mod records;
mod verify;

use std::io::{self, BufRead, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use absentseq::classify::{is_mas, is_mas_prefix, is_sas, is_subsequence};
use absentseq::longest::longest_mas;
use absentseq::mas_direct::{enumerate_mas, enumerate_mas_incremental};
use absentseq::mas_skeleton::{build_mas_skeleton, count_mas, enumerate_mas_via_skeleton};
use absentseq::oracle;
use absentseq::sas::{build_sas_skeleton, count_sas, enumerate_sas};
use absentseq::script::{EditScript, Expand, Replayer};
use absentseq::{AlphabetMode, Letter, Word, WordIndex};
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use records::{DirectTokens, EngineName, Record, SkeletonTokens, Target, Tokens};
use verify::Oracle;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Word(#[from] absentseq::Error),
    #[error("verification failed: {0}")]
    Verify(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Shortest and minimal absent subsequences of a word.
///
/// The word is read from FILE, or from standard input when FILE is omitted
/// or `-`.
#[derive(Debug, Parser)]
#[command(name = "absentseq", version)]
struct Cli {
    /// How the input is split into symbols.
    #[arg(long, value_enum, global = true, default_value_t = AlphabetArg::Bytes)]
    alphabet: AlphabetArg,
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Recompute the answer with the exhaustive checker and compare.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlphabetArg {
    /// Every byte is a letter.
    Bytes,
    /// Whitespace separated positive integers.
    Ints,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Subsequence,
    Sas,
    Mas,
    MasPrefix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SasEngine {
    Skeleton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MasEngine {
    Direct,
    Skeleton,
}

#[derive(Debug, Args)]
struct Input {
    /// Input file; standard input if omitted or `-`.
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Listing {
    /// Print only the number of results.
    #[arg(long, conflicts_with_all = ["limit", "incremental"])]
    count: bool,
    /// Stop after N results.
    #[arg(long, value_name = "N")]
    limit: Option<usize>,
    /// Emit structured edit records instead of whole words.
    #[arg(long)]
    incremental: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Arch factorization and universality index.
    Arches(Input),
    /// Universality index.
    Universality(Input),
    /// Test a pattern against the word.
    Check {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        pattern: String,
        #[command(flatten)]
        input: Input,
    },
    /// Shortest absent subsequences.
    Sas {
        #[command(flatten)]
        listing: Listing,
        #[arg(long, value_enum, default_value_t = SasEngine::Skeleton)]
        engine: SasEngine,
        #[command(flatten)]
        input: Input,
    },
    /// Minimal absent subsequences.
    Mas {
        #[command(flatten)]
        listing: Listing,
        #[arg(long, value_enum, default_value_t = MasEngine::Direct)]
        engine: MasEngine,
        #[command(flatten)]
        input: Input,
    },
    /// A longest minimal absent subsequence.
    LongestMas {
        #[arg(long)]
        length_only: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Expand structured records back into plain words.
    Replay(Input),
}

fn read_input(input: &Input) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    match &input.file {
        Some(p) if p.as_os_str() != "-" => {
            buf = std::fs::read(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin().lock().read_to_end(&mut buf)?;
        }
    }
    Ok(buf)
}

struct Out {
    w: BufWriter<io::StdoutLock<'static>>,
    structured: bool,
}

impl Out {
    fn new(structured: bool) -> Result<Out, CliError> {
        let mut out = Out { w: BufWriter::new(io::stdout().lock()), structured };
        if structured {
            writeln!(out.w, "{}", records::VERSION_LINE)?;
        }
        Ok(out)
    }

    fn line(&mut self, bytes: &[u8]) -> Result<(), CliError> {
        self.w.write_all(bytes)?;
        self.w.write_all(b"\n")?;
        Ok(())
    }

    fn record(&mut self, r: &Record) -> Result<(), CliError> {
        self.line(records::line(r).as_bytes())
    }

    fn word(&mut self, word: &Word, v: &[Letter]) -> Result<(), CliError> {
        self.line(&word.render(v))
    }
}

struct Ctx {
    format: Format,
    verify: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("absentseq: {e}");
            match e {
                CliError::Verify(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mode = match cli.alphabet {
        AlphabetArg::Bytes => AlphabetMode::Bytes,
        AlphabetArg::Ints => AlphabetMode::Ints,
    };
    let ctx = Ctx { format: cli.format, verify: cli.verify };
    let load =
        |input: &Input| -> Result<WordIndex, CliError> { Ok(WordIndex::new(Word::parse(&read_input(input)?, mode)?)) };
    match cli.command {
        Command::Arches(input) => arches(&ctx, &load(&input)?),
        Command::Universality(input) => universality(&ctx, &load(&input)?),
        Command::Check { kind, pattern, input } => check(&ctx, &load(&input)?, kind, &pattern),
        Command::Sas { listing, engine: SasEngine::Skeleton, input } => sas(&ctx, &load(&input)?, &listing),
        Command::Mas { listing, engine, input } => mas(&ctx, &load(&input)?, &listing, engine),
        Command::LongestMas { length_only, input } => longest(&ctx, &load(&input)?, length_only),
        Command::Replay(input) => {
            let mut reader: Box<dyn BufRead> = match &input.file {
                Some(p) if p.as_os_str() != "-" => {
                    let f = std::fs::File::open(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
                    Box::new(io::BufReader::new(f))
                }
                _ => Box::new(io::stdin().lock()),
            };
            let mut out = Out::new(false)?;
            records::replay(&mut reader, &mut |w, v| out.word(w, v))?;
            out.w.flush()?;
            Ok(())
        }
    }
}

fn check_iota(ix: &WordIndex) -> Result<(), CliError> {
    match oracle::brute_iota(ix.word().letters()) {
        Ok(k) if k != ix.iota() => Err(verify::mismatch(format!("iota {} but the checker finds {k}", ix.iota()))),
        Ok(_) => Ok(()),
        Err(e) => {
            verify::warn(&e.to_string());
            Ok(())
        }
    }
}

fn arches(ctx: &Ctx, ix: &WordIndex) -> Result<(), CliError> {
    if ctx.verify {
        check_iota(ix)?;
    }
    let w = ix.word();
    let a = ix.arches();
    let piece = |s: usize, e: usize| w.render(&w.letters()[s - 1..e]);
    let parts: Vec<Vec<u8>> = (1..=a.iota()).map(|l| a.arch(l)).map(|(s, e)| piece(s, e)).collect();
    let rest = if a.rest_start() <= ix.n() { piece(a.rest_start(), ix.n()) } else { Vec::new() };
    let mut out = Out::new(ctx.format == Format::Structured)?;
    if out.structured {
        let text = |b: &[u8]| String::from_utf8_lossy(b).into_owned();
        out.record(&Record::Arches {
            arches: parts.iter().map(|p| text(p)).collect(),
            rest: text(&rest),
            iota: ix.iota(),
        })?;
    } else {
        let mut line = Vec::new();
        for p in &parts {
            line.extend_from_slice(p);
            line.push(b'|');
        }
        line.extend_from_slice(&rest);
        out.line(&line)?;
        out.line(format!("iota={}", ix.iota()).as_bytes())?;
    }
    out.w.flush()?;
    Ok(())
}

fn universality(ctx: &Ctx, ix: &WordIndex) -> Result<(), CliError> {
    if ctx.verify {
        check_iota(ix)?;
    }
    let mut out = Out::new(ctx.format == Format::Structured)?;
    if out.structured {
        out.record(&Record::Universality { iota: ix.iota() })?;
    } else {
        out.line(ix.iota().to_string().as_bytes())?;
    }
    out.w.flush()?;
    Ok(())
}

fn check(ctx: &Ctx, ix: &WordIndex, kind: Kind, pattern: &str) -> Result<(), CliError> {
    let v = ix.word().parse_pattern(pattern.as_bytes())?;
    let (name, result) = match kind {
        Kind::Subsequence => ("subsequence", is_subsequence(ix, &v)?),
        Kind::Sas => ("sas", is_sas(ix, &v)?),
        Kind::Mas => ("mas", is_mas(ix, &v)?),
        Kind::MasPrefix => ("mas-prefix", is_mas_prefix(ix, &v)?),
    };
    if ctx.verify {
        let expected = match kind {
            Kind::Subsequence => Some(oracle::is_subsequence(ix.word().letters(), &v)),
            Kind::Sas => match verify::sas(ix) {
                Oracle::Ready(all) => Some(all.contains(&v)),
                Oracle::Skipped(r) => {
                    verify::warn(&r);
                    None
                }
            },
            Kind::Mas | Kind::MasPrefix => match verify::mas(ix) {
                Oracle::Ready(all) => Some(if kind == Kind::Mas {
                    all.contains(&v)
                } else {
                    !v.is_empty() && all.iter().any(|u| u.len() > v.len() && u[..v.len()] == v[..])
                }),
                Oracle::Skipped(r) => {
                    verify::warn(&r);
                    None
                }
            },
        };
        if let Some(want) = expected {
            if want != result {
                return Err(verify::mismatch(format!("{name}: answered {result}, checker says {want}")));
            }
        }
    }
    let mut out = Out::new(ctx.format == Format::Structured)?;
    if out.structured {
        out.record(&Record::Check { kind: name.to_string(), result })?;
    } else {
        out.line(result.to_string().as_bytes())?;
    }
    out.w.flush()?;
    Ok(())
}

fn oracle_for(ctx: &Ctx, ix: &WordIndex, target: Target) -> Option<Vec<Vec<Letter>>> {
    if !ctx.verify {
        return None;
    }
    match if target == Target::Sas { verify::sas(ix) } else { verify::mas(ix) } {
        Oracle::Ready(all) => Some(all),
        Oracle::Skipped(r) => {
            verify::warn(&r);
            None
        }
    }
}

fn count(ctx: &Ctx, ix: &WordIndex, target: Target, value: String) -> Result<(), CliError> {
    if let Some(want) = oracle_for(ctx, ix, target) {
        if want.len().to_string() != value {
            return Err(verify::mismatch(format!("count {value}, checker finds {}", want.len())));
        }
    }
    let mut out = Out::new(ctx.format == Format::Structured)?;
    if out.structured {
        out.record(&Record::Count { value })?;
    } else {
        out.line(value.as_bytes())?;
    }
    out.w.flush()?;
    Ok(())
}

fn sas(ctx: &Ctx, ix: &WordIndex, listing: &Listing) -> Result<(), CliError> {
    let sk = build_sas_skeleton(ix);
    if listing.count {
        return count(ctx, ix, Target::Sas, count_sas(&sk).to_string());
    }
    let want = oracle_for(ctx, ix, Target::Sas);
    if listing.incremental {
        let tokens = SkeletonTokens::new(records::sas_names(sk.labels(), ix.n()));
        emit_scripts(ix, Target::Sas, EngineName::Skeleton, &tokens, sk.words(), sk.scripts(), listing.limit, want)
    } else {
        emit_words(ctx, ix, Target::Sas, EngineName::Skeleton, enumerate_sas(&sk), listing.limit, want)
    }
}

fn mas(ctx: &Ctx, ix: &WordIndex, listing: &Listing, engine: MasEngine) -> Result<(), CliError> {
    if listing.count {
        let sk = build_mas_skeleton(ix);
        return count(ctx, ix, Target::Mas, count_mas(&sk).to_string());
    }
    let want = oracle_for(ctx, ix, Target::Mas);
    match (engine, listing.incremental) {
        (MasEngine::Direct, false) => {
            emit_words(ctx, ix, Target::Mas, EngineName::Direct, enumerate_mas(ix), listing.limit, want)
        }
        (MasEngine::Direct, true) => {
            let tokens = DirectTokens { ix };
            emit_scripts(
                ix,
                Target::Mas,
                EngineName::Direct,
                &tokens,
                ix,
                enumerate_mas_incremental(ix),
                listing.limit,
                want,
            )
        }
        (MasEngine::Skeleton, incremental) => {
            let sk = build_mas_skeleton(ix);
            if incremental {
                let tokens = SkeletonTokens::new(records::mas_names(sk.labels()));
                emit_scripts(
                    ix,
                    Target::Mas,
                    EngineName::Skeleton,
                    &tokens,
                    sk.words(),
                    sk.scripts(),
                    listing.limit,
                    want,
                )
            } else {
                emit_words(
                    ctx,
                    ix,
                    Target::Mas,
                    EngineName::Skeleton,
                    enumerate_mas_via_skeleton(&sk),
                    listing.limit,
                    want,
                )
            }
        }
    }
}

fn emit_words(
    ctx: &Ctx,
    ix: &WordIndex,
    target: Target,
    engine: EngineName,
    words: impl Iterator<Item = Vec<Letter>>,
    limit: Option<usize>,
    want: Option<Vec<Vec<Letter>>>,
) -> Result<(), CliError> {
    let mut out = Out::new(ctx.format == Format::Structured)?;
    if out.structured {
        out.record(&records::header(ix, target, engine))?;
    }
    let limit = limit.unwrap_or(usize::MAX);
    let mut seen = Vec::new();
    let mut complete = true;
    for (k, v) in words.enumerate() {
        if k == limit {
            complete = false;
            break;
        }
        if out.structured {
            out.record(&Record::Init { letters: records::letters_of(&v) })?;
        } else {
            out.word(ix.word(), &v)?;
        }
        if want.is_some() {
            seen.push(v);
        }
    }
    out.w.flush()?;
    if let Some(want) = want {
        verify::stream(&want, &seen, complete)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn emit_scripts<T: Tokens, E: Expand<Node = T::Node>>(
    ix: &WordIndex,
    target: Target,
    engine: EngineName,
    tokens: &T,
    expander: &E,
    scripts: impl Iterator<Item = EditScript<T::Node>>,
    limit: Option<usize>,
    want: Option<Vec<Vec<Letter>>>,
) -> Result<(), CliError> {
    let mut out = Out::new(true)?;
    out.record(&records::header(ix, target, engine))?;
    let limit = limit.unwrap_or(usize::MAX);
    let mut replayer = Replayer::new(expander);
    let mut seen = Vec::new();
    let mut complete = true;
    for (k, s) in scripts.enumerate() {
        if k == limit {
            complete = false;
            break;
        }
        if k == 0 || want.is_some() {
            let v = replayer.apply(&s);
            if want.is_some() {
                seen.push(v.to_vec());
            }
        }
        if k == 0 {
            out.record(&Record::Init { letters: records::letters_of(replayer.current()) })?;
        } else {
            out.record(&records::edit_record(tokens, &s))?;
        }
    }
    out.w.flush()?;
    if let Some(want) = want {
        verify::stream(&want, &seen, complete)?;
    }
    Ok(())
}

fn longest(ctx: &Ctx, ix: &WordIndex, length_only: bool) -> Result<(), CliError> {
    let v = longest_mas(ix);
    if let Some(all) = oracle_for(ctx, ix, Target::Mas) {
        let max = all.iter().map(|u| u.len()).max().unwrap_or(0);
        if v.len() != max || !all.contains(&v) {
            return Err(verify::mismatch(format!("length {} but the longest MAS has length {max}", v.len())));
        }
    }
    let mut out = Out::new(ctx.format == Format::Structured)?;
    if out.structured {
        let word = (!length_only).then(|| ix.word().render_string(&v));
        out.record(&Record::Longest { length: v.len(), word })?;
    } else if length_only {
        out.line(v.len().to_string().as_bytes())?;
    } else {
        out.word(ix.word(), &v)?;
    }
    out.w.flush()?;
    Ok(())
}

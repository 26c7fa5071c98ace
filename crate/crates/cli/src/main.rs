//! `markov-deform`: command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails (a JSON witness is
//! written to stderr), 2 on usage or input errors.

mod output;
mod verify;

use anyhow::{bail, Context, Result};
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use markov_deform::arith::{parse_rational, BigInt, BigRational, IntPoly, LaurentPoly, Mat2};
use markov_deform::bridge::{bridge_check, bridge_point};
use markov_deform::castling::{
    castling_bfs, f_of_word, figure4_search, figure4_targets, markov_subtree_scan, pv_of_fraction,
    t_markov_tree, CastlingTuple, FIGURE4_MAX_DEGREE, FIGURE4_MAX_LEN,
};
use markov_deform::contfrac::{CFNegative, CFRegular};
use markov_deform::errata::errata;
use markov_deform::markov::{
    cohn_matrix_classical, cohn_matrix_q, fixed_point, markov_number, markov_tree, q_markov_tree,
    q_markov_value,
};
use markov_deform::qrat::{q_rational_matrix, q_rational_negative, q_rational_regular};
use markov_deform::tree::{word_triples, TripleNode};
use markov_deform::words::{path_of_fraction, triple_of_fraction, word_of_fraction, Word};
use output::{dot, emit, json, path_node, At, DotNode, Format, Report};
use serde::Serialize;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "markov-deform",
    version,
    about = "Exact q- and t-deformations of Markov triples"
)]
struct Cli {
    /// Output format; `dot` only applies to tree commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Tree depth (the root is depth 1).
    #[arg(long, global = true, default_value_t = 4)]
    depth: usize,
    /// Largest entry kept by `tree castling`.
    #[arg(long, global = true, default_value = "10000")]
    budget: BigInt,
    /// Values shown in text and DOT labels of polynomial trees.
    #[arg(long, global = true, value_enum, default_value_t = At::Generic)]
    at: At,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Regular,
    Negative,
    Matrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum CfKind {
    Regular,
    Negative,
}

#[derive(Subcommand)]
enum Command {
    /// q-deformed rational [r/s]_q.
    Qrat {
        fraction: String,
        #[arg(long, value_enum, default_value_t = Via::Regular)]
        via: Via,
    },
    /// Continued fractions of R/S, or the value of a term list with --kind.
    Cf {
        input: String,
        #[arg(long, value_enum)]
        kind: Option<CfKind>,
    },
    /// Christoffel word of a fraction in (0, 1].
    Word { fraction: String },
    /// Markov data of a Christoffel word or of a fraction R/S.
    Markov { input: String },
    /// Fixed point of the q-Cohn matrix of a word.
    FixedPoint { word: String },
    /// Both sides of f_w((1 + q + q^2)/q) = q h_w(q).
    Bridge { word: String },
    /// PV label of a fraction in (0, 1].
    Pv { fraction: String },
    #[command(subcommand)]
    Tree(TreeCommand),
    #[command(subcommand)]
    Search(SearchCommand),
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Places where computation disagrees with printed values.
    Errata,
}

#[derive(Subcommand)]
enum TreeCommand {
    /// Christoffel word triples.
    Words,
    /// Classical Markov triples.
    Markov,
    /// q-Markov triples (h_w).
    Qmarkov,
    /// t-Markov triples (f_w).
    Tmarkov,
    /// Integer castling tuples reachable by flat moves.
    Castling {
        #[arg(long, default_value = "3")]
        dim: BigInt,
        /// Comma-separated starting entries.
        #[arg(long, default_value = "1,1,2")]
        seed: String,
    },
}

#[derive(Subcommand)]
enum SearchCommand {
    /// Breadth-first search of the t-castling tree from (t; 1).
    Figure4 {
        #[arg(long, default_value_t = FIGURE4_MAX_DEGREE)]
        max_degree: usize,
        #[arg(long, default_value_t = FIGURE4_MAX_LEN)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    Qmarkov,
    TEq,
    Bridge,
    Fricke,
    Commutator,
    Divisibility,
    Alt1,
    Alt2 {
        /// Use [3]_{q^2} in place of [3]_q.
        #[arg(long)]
        corrected: bool,
    },
    Chebyshev {
        #[arg(long, default_value_t = 20)]
        n: usize,
    },
    Polycf,
    Fixedpoint,
}

fn rational(s: &str) -> Result<BigRational> {
    parse_rational(s).with_context(|| format!("invalid fraction {s:?}"))
}

fn word(s: &str) -> Result<Word> {
    s.parse().with_context(|| format!("invalid word {s:?}"))
}

fn word_or_fraction(s: &str) -> Result<Word> {
    if s.contains('/') {
        Ok(word_of_fraction(&rational(s)?)?)
    } else {
        word(s)
    }
}

fn strings<T: ToString>(m: &Mat2<T>) -> [String; 4] {
    [&m.a11, &m.a12, &m.a21, &m.a22].map(ToString::to_string)
}

fn qrat(fraction: &str, via: Via, format: Format) -> Result<String> {
    let x = rational(fraction)?;
    let v = match via {
        Via::Regular => q_rational_regular(&CFRegular::from_rational(&x)?),
        Via::Negative => q_rational_negative(&CFNegative::from_rational(&x)?),
        Via::Matrix => q_rational_matrix(&CFRegular::from_rational(&x)?),
    };
    emit(format, &v, || {
        format!("[{x}]_q = ({}) / ({})\n", v.num(), v.den())
    })
}

#[derive(Serialize)]
struct CfExpansions {
    fraction: String,
    regular: Vec<u64>,
    regular_even: Vec<u64>,
    negative: Vec<u64>,
}

#[derive(Serialize)]
struct CfValue {
    kind: &'static str,
    terms: Vec<u64>,
    value: String,
}

fn cf(input: &str, kind: Option<CfKind>, format: Format) -> Result<String> {
    match kind {
        None => {
            let x = rational(input)?;
            let r = CFRegular::from_rational(&x)?;
            let n = CFNegative::from_rational(&x)?;
            let out = CfExpansions {
                fraction: x.to_string(),
                regular: r.terms().to_vec(),
                regular_even: r.even_terms(),
                negative: n.terms().to_vec(),
            };
            emit(format, &out, || format!("{x} = {r} = {n}\n"))
        }
        Some(CfKind::Regular) => {
            let c: CFRegular = input.parse()?;
            let out = CfValue {
                kind: "regular",
                terms: c.terms().to_vec(),
                value: c.value().to_string(),
            };
            emit(format, &out, || format!("{c} = {}\n", out.value))
        }
        Some(CfKind::Negative) => {
            let c: CFNegative = input.parse()?;
            let out = CfValue {
                kind: "negative",
                terms: c.terms().to_vec(),
                value: c.value().to_string(),
            };
            emit(format, &out, || format!("{c} = {}\n", out.value))
        }
    }
}

#[derive(Serialize)]
struct WordInfo {
    fraction: String,
    word: Word,
    compact: String,
    path: Option<String>,
    triple: Option<[Word; 3]>,
}

fn word_cmd(fraction: &str, format: Format) -> Result<String> {
    let x = rational(fraction)?;
    let w = word_of_fraction(&x)?;
    let triple = triple_of_fraction(&x)?;
    let info = WordInfo {
        fraction: x.to_string(),
        compact: w.compact(),
        path: path_of_fraction(&x).ok(),
        triple: triple.map(|t| [t.left, t.middle, t.right]),
        word: w,
    };
    emit(format, &info, || {
        format!("{} -> {} ({})\n", info.fraction, info.word, info.compact)
    })
}

#[derive(Serialize)]
struct MarkovInfo {
    word: Word,
    compact: String,
    fraction: String,
    markov_number: String,
    cohn_matrix: [String; 4],
    q_cohn_matrix: Mat2<LaurentPoly>,
    h: LaurentPoly,
    f: IntPoly,
    triple: Option<[String; 3]>,
}

fn markov_cmd(input: &str, format: Format) -> Result<String> {
    let w = word_or_fraction(input)?;
    if !w.is_christoffel() {
        bail!("{w} is not a Christoffel word");
    }
    let triple = match triple_of_fraction(&w.fraction())? {
        Some(t) => {
            let v = markov_deform::markov::markov_triple(&t)?;
            Some([v.0, v.1, v.2].map(|x| x.to_string()))
        }
        None => None,
    };
    let info = MarkovInfo {
        compact: w.compact(),
        fraction: w.fraction().to_string(),
        markov_number: markov_number(&w)?.to_string(),
        cohn_matrix: strings(&cohn_matrix_classical(&w)),
        q_cohn_matrix: cohn_matrix_q(&w),
        h: q_markov_value(&w)?,
        f: f_of_word(&w)?,
        triple,
        word: w,
    };
    emit(format, &info, || {
        format!(
            "word {} ({})\nmarkov number {}\nh_w(q) = {}\nf_w(t) = {}\n",
            info.word, info.compact, info.markov_number, info.h, info.f
        )
    })
}

fn fixed_point_cmd(w: &str, format: Format) -> Result<Report> {
    let fp = fixed_point(&word(w)?)?;
    let check = fp.verify();
    #[derive(Serialize)]
    struct Out<'a> {
        fixed_point: &'a markov_deform::markov::FixedPoint,
        holds: bool,
        tag_matches: bool,
    }
    let out = Out {
        fixed_point: &fp,
        holds: check.holds,
        tag_matches: fp.tag_matches(),
    };
    let stdout = emit(format, &out, || {
        let s = &fp.surd;
        format!(
            "theta = (({}) + sqrt(q^-{} ({}))) / ({})\n",
            s.p, s.scale, s.d, s.s
        )
    })?;
    let witness =
        (!check.holds).then(|| serde_json::json!({ "check": "fixed-point", "witness": check }));
    Ok(Report { stdout, witness })
}

fn bridge_cmd(w: &str, format: Format) -> Result<Report> {
    let w = word(w)?;
    let r = bridge_check(&w)?;
    let out = serde_json::json!({
        "word": w,
        "s": bridge_point(),
        "lhs": r.lhs,
        "rhs": r.rhs,
        "holds": r.holds,
    });
    let stdout = emit(format, &out, || {
        format!(
            "f_w(s) = {}\nq h_w(q) = {}\nholds: {}\n",
            r.lhs, r.rhs, r.holds
        )
    })?;
    let witness =
        (!r.holds).then(|| serde_json::json!({ "check": "bridge", "word": w, "witness": r }));
    Ok(Report { stdout, witness })
}

#[derive(Serialize)]
struct PvOut {
    fraction: String,
    word: Word,
    tree_order: [String; 3],
    label: [String; 3],
    pv: String,
}

fn pv_cmd(fraction: &str, format: Format) -> Result<String> {
    let r = pv_of_fraction(&rational(fraction)?)?;
    let (a, b, c) = r.tree_order;
    let (x, y, z) = r.label.tuple();
    let out = PvOut {
        fraction: r.fraction,
        word: r.word,
        tree_order: [a, b, c].map(|v| v.to_string()),
        label: [x, y, z].map(|v| v.to_string()),
        pv: r.pv,
    };
    emit(format, &out, || {
        format!("{} -> {} -> {}\n", out.fraction, out.word, out.pv)
    })
}

#[derive(Serialize)]
struct NodeOut<T> {
    path: String,
    words: [Word; 3],
    values: [T; 3],
}

fn node_out<T: Clone, S>(n: &TripleNode<T>, f: impl Fn(&T) -> S) -> NodeOut<S> {
    let w = n.words.clone();
    NodeOut {
        path: n.path.clone(),
        words: [w.left, w.middle, w.right],
        values: [f(&n.values.0), f(&n.values.1), f(&n.values.2)],
    }
}

/// Renders a tree in the requested format; `label` gives the text of the
/// three values at the chosen specialization.
fn tree_output<T: Clone, S: Serialize>(
    name: &str,
    nodes: &[TripleNode<T>],
    format: Format,
    to_json: impl Fn(&T) -> S,
    label: impl Fn(&T) -> String,
) -> Result<String> {
    let triple = |n: &TripleNode<T>| {
        format!(
            "({}, {}, {})",
            label(&n.values.0),
            label(&n.values.1),
            label(&n.values.2)
        )
    };
    match format {
        Format::Json => json(
            &nodes
                .iter()
                .map(|n| node_out(n, &to_json))
                .collect::<Vec<_>>(),
        ),
        Format::Text => Ok(nodes
            .iter()
            .map(|n| {
                let p = if n.path.is_empty() { "-" } else { &n.path };
                format!("{p}\t{}\t{}\n", triple(n), n.words)
            })
            .collect()),
        Format::Dot => Ok(dot(
            name,
            &nodes
                .iter()
                .map(|n| path_node(&n.path, triple(n)))
                .collect::<Vec<_>>(),
        )),
    }
}

fn tree_cmd(cmd: &TreeCommand, cli: &Cli) -> Result<String> {
    let (depth, format, at) = (cli.depth, cli.format, cli.at);
    match cmd {
        TreeCommand::Words => {
            let nodes: Vec<TripleNode<Word>> = word_triples(depth)
                .into_iter()
                .zip(markov_tree(depth))
                .map(|(t, n)| TripleNode {
                    values: (t.left.clone(), t.middle.clone(), t.right.clone()),
                    words: t,
                    path: n.path,
                })
                .collect();
            tree_output("words", &nodes, format, Clone::clone, Word::compact)
        }
        TreeCommand::Markov => tree_output(
            "markov",
            &markov_tree(depth),
            format,
            ToString::to_string,
            ToString::to_string,
        ),
        TreeCommand::Qmarkov => {
            if at == At::TThree {
                bail!("--at t=3 does not apply to q-Markov values");
            }
            let label = move |p: &LaurentPoly| match at {
                At::QOne => p.eval_at_one().to_string(),
                _ => p.to_string(),
            };
            tree_output(
                "qmarkov",
                &q_markov_tree(depth),
                format,
                Clone::clone,
                label,
            )
        }
        TreeCommand::Tmarkov => {
            if at == At::QOne {
                bail!("--at q=1 does not apply to t-Markov values");
            }
            let three = BigInt::from(3);
            let label = move |p: &IntPoly| match at {
                At::TThree => p.eval(&three).to_string(),
                _ => p.to_string(),
            };
            tree_output(
                "tmarkov",
                &t_markov_tree(depth),
                format,
                Clone::clone,
                label,
            )
        }
        TreeCommand::Castling { dim, seed } => castling_cmd(dim, seed, &cli.budget, format),
    }
}

#[derive(Serialize)]
struct CastlingNodeOut {
    index: usize,
    parent: Option<usize>,
    via: Option<String>,
    entries: Vec<String>,
}

fn castling_cmd(dim: &BigInt, seed: &str, budget: &BigInt, format: Format) -> Result<String> {
    let entries = seed
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .with_context(|| format!("invalid seed entry {s:?}"))
        })
        .collect::<Result<Vec<_>>>()?;
    let seed = CastlingTuple::new(dim.clone(), entries)?;
    let zero = BigInt::from(0);
    if seed.entries.iter().any(|e| *e <= zero) {
        bail!("seed entries must be positive");
    }
    let max_len = seed.len();
    let keep = |c: &CastlingTuple<BigInt>| c.entries.iter().all(|e| e <= budget);
    let (nodes, _) = if keep(&seed) {
        castling_bfs(seed.clone(), max_len, keep, usize::MAX)
    } else {
        (Vec::new(), false)
    };
    // with dimension 3 and three entries every tuple is a Markov triple
    let labels = if *dim == BigInt::from(3) && max_len == 3 {
        Some(markov_subtree_scan(&seed, budget)?)
    } else {
        None
    };
    let render = |c: &CastlingTuple<BigInt>| {
        let e: Vec<String> = c.entries.iter().map(ToString::to_string).collect();
        format!("({}; {})", c.dim, e.join(", "))
    };
    match format {
        Format::Json => {
            let out: Vec<_> = nodes
                .iter()
                .enumerate()
                .map(|(i, n)| CastlingNodeOut {
                    index: i,
                    parent: n.parent,
                    via: n.via.map(|m| m.to_string()),
                    entries: n.tuple.entries.iter().map(ToString::to_string).collect(),
                })
                .collect();
            let labels = labels.map(|l| {
                l.iter()
                    .map(|p| [&p.m1, &p.m2, &p.m3].map(ToString::to_string))
                    .collect::<Vec<_>>()
            });
            json(&serde_json::json!({
                "dim": dim.to_string(),
                "budget": budget.to_string(),
                "nodes": out,
                "markov_labels": labels,
            }))
        }
        Format::Text => Ok(nodes
            .iter()
            .map(|n| {
                let via = n
                    .via
                    .map(|m| m.to_string())
                    .unwrap_or_else(|| "seed".into());
                format!("{}\t{via}\n", render(&n.tuple))
            })
            .collect()),
        Format::Dot => {
            let dn: Vec<DotNode> = nodes
                .iter()
                .enumerate()
                .map(|(i, n)| DotNode {
                    id: format!("c{i}"),
                    parent: n.parent.map(|p| format!("c{p}")),
                    label: render(&n.tuple),
                    edge: n.via.map(|m| m.to_string()),
                })
                .collect();
            Ok(dot("castling", &dn))
        }
    }
}

fn figure4_cmd(max_degree: usize, max_len: usize, format: Format) -> Result<String> {
    let report = figure4_search(&figure4_targets(), max_degree, max_len);
    emit(format, &report, || {
        let mut s = format!(
            "{} tuples (max degree {}, max length {}{})\n",
            report.states,
            report.max_degree,
            report.max_len,
            if report.truncated { ", truncated" } else { "" }
        );
        for o in &report.outcomes {
            match &o.path {
                Some(p) => {
                    let moves: Vec<String> = p.iter().map(ToString::to_string).collect();
                    s += &format!("{}: found via {}\n", o.name, moves.join(","));
                }
                None => s += &format!("{}: not found\n", o.name),
            }
        }
        s
    })
}

fn errata_cmd(format: Format) -> Result<String> {
    let all = errata()?;
    emit(format, &all, || {
        all.iter()
            .map(|e| {
                format!(
                    "[{}] {}\n  printed:  {}\n  computed: {}\n",
                    e.id, e.location, e.printed, e.computed
                )
            })
            .collect()
    })
}

fn verify_cmd(cmd: &VerifyCommand, depth: usize, format: Format) -> Result<Report> {
    match cmd {
        VerifyCommand::Qmarkov => verify::qmarkov(depth, format),
        VerifyCommand::TEq => verify::t_eq(depth, format),
        VerifyCommand::Bridge => verify::bridge(depth, format),
        VerifyCommand::Fricke => verify::fricke(depth, format),
        VerifyCommand::Commutator => verify::commutator(depth, format),
        VerifyCommand::Divisibility => verify::divisibility(depth, format),
        VerifyCommand::Alt1 => verify::alt1(depth, format),
        VerifyCommand::Alt2 { corrected } => verify::alt2(depth, *corrected, format),
        VerifyCommand::Chebyshev { n } => verify::chebyshev(*n, format),
        VerifyCommand::Polycf => verify::polycf(format),
        VerifyCommand::Fixedpoint => verify::fixedpoint(depth, format),
    }
}

fn run(cli: &Cli) -> Result<Report> {
    let f = cli.format;
    let ok = |s: Result<String>| s.map(Report::ok);
    match &cli.command {
        Command::Qrat { fraction, via } => ok(qrat(fraction, *via, f)),
        Command::Cf { input, kind } => ok(cf(input, *kind, f)),
        Command::Word { fraction } => ok(word_cmd(fraction, f)),
        Command::Markov { input } => ok(markov_cmd(input, f)),
        Command::FixedPoint { word } => fixed_point_cmd(word, f),
        Command::Bridge { word } => bridge_cmd(word, f),
        Command::Pv { fraction } => ok(pv_cmd(fraction, f)),
        Command::Tree(t) => ok(tree_cmd(t, cli)),
        Command::Search(SearchCommand::Figure4 {
            max_degree,
            max_len,
        }) => ok(figure4_cmd(*max_degree, *max_len, f)),
        Command::Verify(v) => verify_cmd(v, cli.depth, f),
        Command::Errata => ok(errata_cmd(f)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            if !e.use_stderr() {
                return ExitCode::SUCCESS;
            }
            let names: Vec<String> = Cli::command()
                .get_subcommands()
                .map(|c| c.get_name().to_string())
                .collect();
            eprintln!("valid subcommands: {}", names.join(", "));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.stdout.as_bytes());
            match report.witness {
                None => ExitCode::SUCCESS,
                Some(w) => {
                    eprintln!("{}", serde_json::to_string_pretty(&w).unwrap_or_default());
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

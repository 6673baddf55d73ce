//! Command-line workbench for exact diagram-algebra computations: rank
//! enumerations, relation suites, admissible-set orbits and Hasse diagrams,
//! monoid actions, and the constructive isomorphism check.

mod parse;
mod report;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use dtl_core::admissible::{self, RootSet};
use dtl_core::diagrams_a::{brauer_rank, catalan, enumerate_monoid, full_brauer_gens, tl_gens};
use dtl_core::diagrams_d::{self, psi_gen, GenKind, ScaledDiagramD};
use dtl_core::dtl::{phi_b_gen, rank_dtl_b, rank_dtl_c, surjectivity_bfs};
use dtl_core::rootsys::{DynkinType, RootSystem};
use dtl_core::suites::{run_named_suite, Check};
use parse::{parse_action_word, parse_dynkin, parse_root_set, ActionSym};
use report::RunReport;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "dtl",
    about = "Exact workbench for Brauer/Temperley-Lieb diagram monoids and the DTL algebras",
    version
)]
struct Cli {
    /// Emit the report as JSON
    #[arg(long, global = true)]
    json: bool,
    /// Cap on monoid enumerations
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_elements: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a rank by enumeration and compare it with the closed formula
    Rank {
        /// one of: brA, tlA, dtlB, dtlC
        #[arg(long)]
        algebra: Option<String>,
        /// size for brA (strand count minus one)
        #[arg(long)]
        m: Option<usize>,
        /// size for tlA/dtlB/dtlC
        #[arg(long)]
        n: Option<usize>,
        /// shorthand like B4 (dtlB, n=4), C3, A3 (brA, m=3)
        #[arg(long = "type")]
        kind: Option<String>,
    },
    /// Enumerate a diagram monoid modulo powers of the loop parameter
    Enumerate {
        /// `A<m>` for type-A diagrams on m+1 strands, `D<k>` for type-D on k strands
        #[arg(long = "type")]
        kind: String,
        /// full (R and E generators) or tl (E generators only)
        #[arg(long, default_value = "full")]
        gens: String,
        /// for type D: l1 (undecorated) or l2 (decorated)
        #[arg(long, default_value = "l1")]
        layer: String,
        /// print the count only
        #[arg(long)]
        count: bool,
    },
    /// Run a named relation/property suite
    Verify {
        /// one of: def11, rem31, def01, def02, newrel, heightinv, admissible
        #[arg(long)]
        suite: String,
        #[arg(long = "type")]
        kind: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Enumerate the Weyl orbit of an admissible set with its poset structure
    Orbit {
        #[arg(long = "type")]
        kind: String,
        /// comma-separated root expressions, e.g. "a1,a3"
        #[arg(long)]
        seed: String,
        /// also write the Hasse diagram in DOT
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Emit the Hasse diagram of an orbit in DOT with height-ranked layers
    Hasse {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        seed: String,
        /// output path; stdout when omitted
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Apply a generator word to an admissible set (rightmost symbol first)
    Action {
        #[arg(long = "type")]
        kind: String,
        /// word of `R<i>`/`E<i>` tokens, e.g. "E1" or "R4 R1 R2 R1"
        #[arg(long)]
        word: String,
        #[arg(long)]
        set: String,
    },
    /// Admissible closure of a set of mutually orthogonal positive roots
    Closure {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        roots: String,
    },
    /// Constructive isomorphism check: reachability of all mirror-invariant
    /// height-0 admissible sets, with witness words
    IsoCheck {
        #[arg(long)]
        n: usize,
        /// write the witness words as JSON
        #[arg(long)]
        witnesses: Option<PathBuf>,
    },
    /// Print a root system
    Rootsys {
        #[arg(long = "type")]
        kind: String,
        /// list positive roots as coefficient tuples and epsilon expressions
        #[arg(long)]
        list_positive: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = RunReport::new(command_echo(&cli.cmd));
    match run(&cli, &mut report) {
        Ok(()) => {
            report.duration_ms = start.elapsed().as_millis();
            report.emit(cli.json);
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}

fn command_echo(cmd: &Cmd) -> String {
    match cmd {
        Cmd::Rank { .. } => "rank",
        Cmd::Enumerate { .. } => "enumerate",
        Cmd::Verify { .. } => "verify",
        Cmd::Orbit { .. } => "orbit",
        Cmd::Hasse { .. } => "hasse",
        Cmd::Action { .. } => "action",
        Cmd::Closure { .. } => "closure",
        Cmd::IsoCheck { .. } => "iso-check",
        Cmd::Rootsys { .. } => "rootsys",
    }
    .to_string()
}

fn run(cli: &Cli, report: &mut RunReport) -> Result<()> {
    match &cli.cmd {
        Cmd::Rank {
            algebra,
            m,
            n,
            kind,
        } => cmd_rank(cli, report, algebra.as_deref(), *m, *n, kind.as_deref()),
        Cmd::Enumerate {
            kind,
            gens,
            layer,
            count,
        } => cmd_enumerate(cli, report, kind, gens, layer, *count),
        Cmd::Verify { suite, kind, n } => {
            let checks =
                run_named_suite(suite, kind.as_deref(), *n).map_err(|e| anyhow!("{}", e))?;
            for c in checks {
                report.push_check(c);
            }
            Ok(())
        }
        Cmd::Orbit { kind, seed, dot } => cmd_orbit(report, kind, seed, dot.as_deref(), false),
        Cmd::Hasse { kind, seed, dot } => cmd_orbit(report, kind, seed, dot.as_deref(), true),
        Cmd::Action { kind, word, set } => cmd_action(report, kind, word, set),
        Cmd::Closure { kind, roots } => cmd_closure(report, kind, roots),
        Cmd::IsoCheck { n, witnesses } => cmd_iso_check(report, *n, witnesses.as_deref()),
        Cmd::Rootsys {
            kind,
            list_positive,
        } => cmd_rootsys(report, kind, *list_positive),
    }
}

fn cmd_rank(
    cli: &Cli,
    report: &mut RunReport,
    algebra: Option<&str>,
    m: Option<usize>,
    n: Option<usize>,
    kind: Option<&str>,
) -> Result<()> {
    let (algebra, size) = match (algebra, kind) {
        (Some(a), _) => {
            let size = match a {
                "brA" => m.ok_or_else(|| anyhow!("--algebra brA needs --m"))?,
                _ => n.ok_or_else(|| anyhow!("--algebra {} needs --n", a))?,
            };
            (a.to_string(), size)
        }
        (None, Some(t)) => {
            let (letter, size) = dtl_core::suites::parse_type(t).map_err(|e| anyhow!("{}", e))?;
            let a = match letter {
                'A' => "brA",
                'B' => "dtlB",
                'C' => "dtlC",
                _ => bail!("no rank target for type {}", t),
            };
            (a.to_string(), size)
        }
        (None, None) => bail!("rank needs --algebra with --m/--n, or --type"),
    };
    match algebra.as_str() {
        "brA" => {
            let count = enumerate_monoid(&full_brauer_gens(size + 1), cli.max_elements)
                .map_err(|e| anyhow!("{}", e))?
                .elements
                .len() as u64;
            report.push_check(Check::equality(
                format!("rank Br(A{}) by enumeration vs (m+1)!! formula", size),
                count,
                brauer_rank(size),
            ));
        }
        "tlA" => {
            let count = enumerate_monoid(&tl_gens(size + 1), cli.max_elements)
                .map_err(|e| anyhow!("{}", e))?
                .elements
                .len() as u64;
            report.push_check(Check::equality(
                format!("rank TL(A{}) by enumeration vs Catalan formula", size),
                count,
                catalan(size + 1),
            ));
        }
        "dtlB" => {
            let ev = rank_dtl_b(size).map_err(|e| anyhow!("{}", e))?;
            report.note(format!(
                "spanning-image count {} / generated-monoid count {}",
                ev.spanning_image_count, ev.monoid_count
            ));
            report.push_check(Check::equality(
                format!("rank DTL(B{}) vs C_n + C_(n+1) - 1", size),
                ev.monoid_count,
                ev.expected,
            ));
        }
        "dtlC" => {
            let ev = rank_dtl_c(size).map_err(|e| anyhow!("{}", e))?;
            report.note(format!(
                "generated-monoid count {} / STL basis count {}",
                ev.monoid_count, ev.stl_basis_count
            ));
            report.push_check(Check::equality(
                format!("rank DTL(C{}) vs binom(2n, n)", size),
                ev.monoid_count,
                ev.expected,
            ));
        }
        other => bail!("unknown algebra {:?}; use brA, tlA, dtlB or dtlC", other),
    }
    Ok(())
}

fn cmd_enumerate(
    cli: &Cli,
    report: &mut RunReport,
    kind: &str,
    gens: &str,
    layer: &str,
    count_only: bool,
) -> Result<()> {
    let (letter, size) = dtl_core::suites::parse_type(kind).map_err(|e| anyhow!("{}", e))?;
    match letter {
        'A' => {
            let strands = size + 1;
            let generators = match gens {
                "full" => full_brauer_gens(strands),
                "tl" => tl_gens(strands),
                other => bail!("unknown generator set {:?}; use full or tl", other),
            };
            let enumeration =
                enumerate_monoid(&generators, cli.max_elements).map_err(|e| anyhow!("{}", e))?;
            report.note(format!(
                "monoid of {} diagrams on {} strands modulo delta: {} elements",
                kind,
                strands,
                enumeration.elements.len()
            ));
            if !count_only {
                for c in &enumeration.elements {
                    report.note(format!("  {}", c));
                }
            }
        }
        'D' => {
            let strands = size;
            if strands < 2 {
                bail!("type D needs at least 2 strands");
            }
            let n = strands - 1;
            match layer {
                "l1" => {
                    let mut generators: Vec<ScaledDiagramD> = (0..n)
                        .map(|i| phi_b_gen(i, n).map_err(|e| anyhow!("{}", e)))
                        .collect::<Result<_>>()?;
                    if gens == "full" {
                        for i in 2..=strands {
                            generators
                                .push(psi_gen(GenKind::R, i, n).map_err(|e| anyhow!("{}", e))?);
                        }
                    }
                    let elements =
                        dtl_core::dtl::enumerate_monoid_l1(&generators, cli.max_elements)
                            .map_err(|e| anyhow!("{}", e))?;
                    report.note(format!(
                        "undecorated (L1) monoid on {} strands modulo delta: {} elements",
                        strands,
                        elements.len()
                    ));
                    if !count_only {
                        for (tag, c) in &elements {
                            report.note(format!("  {}*{}", tag, c));
                        }
                    }
                }
                "l2" => {
                    let mut generators: Vec<ScaledDiagramD> = Vec::new();
                    for i in 1..=strands {
                        if gens == "full" {
                            generators
                                .push(psi_gen(GenKind::R, i, n).map_err(|e| anyhow!("{}", e))?);
                        }
                        generators.push(psi_gen(GenKind::E, i, n).map_err(|e| anyhow!("{}", e))?);
                    }
                    let elements = diagrams_d::enumerate_monoid_l2(&generators, cli.max_elements)
                        .map_err(|e| anyhow!("{}", e))?;
                    report.note(format!(
                        "decorated (L2) monoid on {} strands modulo delta: {} elements",
                        strands,
                        elements.len()
                    ));
                    if !count_only {
                        for (tag, c, dec) in &elements {
                            report.note(format!("  {}*{} dec 0x{:x}", tag, c, dec));
                        }
                    }
                }
                other => bail!("unknown layer {:?}; use l1 or l2", other),
            }
        }
        _ => bail!("enumerate supports type A and D diagrams, got {}", kind),
    }
    Ok(())
}

/// Resolves a seed set, converting a non-admissible seed into a usage error
/// that suggests its closure.
fn admissible_seed(sys: &RootSystem, literal: &str) -> Result<RootSet> {
    let seed = parse_root_set(literal, sys)?;
    if !admissible::is_admissible(sys, &seed) {
        let closure = admissible::closure(sys, &seed).map_err(|e| anyhow!("{}", e))?;
        bail!(
            "seed {} is not admissible; its admissible closure is {} — try that instead",
            seed,
            closure
        );
    }
    Ok(seed)
}

fn cmd_orbit(
    report: &mut RunReport,
    kind: &str,
    seed: &str,
    dot: Option<&std::path::Path>,
    dot_to_stdout: bool,
) -> Result<()> {
    let sys = RootSystem::from_type(parse_dynkin(kind)?).map_err(|e| anyhow!("{}", e))?;
    let seed = admissible_seed(&sys, seed)?;
    let poset = admissible::orbit(&sys, &seed).map_err(|e| anyhow!("{}", e))?;
    report.note(format!(
        "orbit of {} in {}: {} sets, maximal element {}, height range 0..={}",
        seed,
        sys.kind(),
        poset.len(),
        poset.maximal(),
        poset.diameter()
    ));
    for (i, set) in poset.sets().iter().enumerate() {
        report.note(format!("  ht {}  {}", poset.height_by_index(i), set));
    }
    report.push_check(Check::boolean(
        format!("orbit of {} has a unique maximal element", seed),
        true,
    ));
    let dot_text = poset.to_dot();
    if let Some(path) = dot {
        std::fs::write(path, &dot_text)
            .with_context(|| format!("writing DOT to {}", path.display()))?;
        report.note(format!("wrote Hasse diagram to {}", path.display()));
    } else if dot_to_stdout {
        println!("{}", dot_text);
    }
    Ok(())
}

fn cmd_action(report: &mut RunReport, kind: &str, word: &str, set: &str) -> Result<()> {
    let sys = RootSystem::from_type(parse_dynkin(kind)?).map_err(|e| anyhow!("{}", e))?;
    let start = admissible_seed(&sys, set)?;
    let word = parse_action_word(word)?;
    let mut cur = start.clone();
    for sym in word.iter().rev() {
        let next = match sym {
            ActionSym::R(i) => admissible::weyl_action(&sys, &[*i], &cur),
            ActionSym::E(i) => admissible::ei_action(&sys, *i, &cur),
        }
        .map_err(|e| anyhow!("{}", e))?;
        report.note(format!(
            "{}{} . {} = {}",
            match sym {
                ActionSym::R(_) => "R",
                ActionSym::E(_) => "E",
            },
            match sym {
                ActionSym::R(i) | ActionSym::E(i) => i,
            },
            cur,
            next
        ));
        cur = next;
    }
    report.note(format!("result: {}", cur));
    report.push_check(Check::boolean(format!("action applied to {}", start), true));
    Ok(())
}

fn cmd_closure(report: &mut RunReport, kind: &str, roots: &str) -> Result<()> {
    let sys = RootSystem::from_type(parse_dynkin(kind)?).map_err(|e| anyhow!("{}", e))?;
    let set = parse_root_set(roots, &sys)?;
    let closure = admissible::closure(&sys, &set).map_err(|e| anyhow!("{}", e))?;
    report.note(format!(
        "closure of {} in {} is {}",
        set,
        sys.kind(),
        closure
    ));
    report.push_check(Check::boolean(
        format!("closure is admissible: {}", closure),
        admissible::is_admissible(&sys, &closure),
    ));
    Ok(())
}

fn cmd_iso_check(
    report: &mut RunReport,
    n: usize,
    witnesses: Option<&std::path::Path>,
) -> Result<()> {
    let surj = surjectivity_bfs(n).map_err(|e| anyhow!("{}", e))?;
    for size in &surj.sizes {
        report.note(format!(
            "size {}: seed {}, {} targets, explored {} sets",
            size.size,
            size.seed,
            size.witnesses.len(),
            size.explored
        ));
        for w in &size.witnesses {
            match &w.word {
                Some(word) => report.note(format!("  {} <- {}", w.target, word)),
                None => report.note(format!("  {} UNREACHED", w.target)),
            }
        }
        report.push_check(Check::boolean(
            format!(
                "size {}: every mirror-invariant height-0 set reached",
                size.size
            ),
            size.all_reached,
        ));
    }
    let rank = rank_dtl_c(n).map_err(|e| anyhow!("{}", e))?;
    report.push_check(Check::equality(
        format!("rank DTL(C{}) equals the STL basis size", n),
        rank.monoid_count,
        rank.stl_basis_count,
    ));
    if let Some(path) = witnesses {
        let payload = serde_json::json!({
            "schema": 1,
            "n": n,
            "sizes": surj.sizes.iter().map(|s| serde_json::json!({
                "size": s.size,
                "seed": s.seed.to_string(),
                "explored": s.explored,
                "witnesses": s.witnesses.iter().map(|w| serde_json::json!({
                    "target": w.target.to_string(),
                    "word": w.word.as_ref().map(|x| x.to_string()),
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        std::fs::write(path, serde_json::to_string_pretty(&payload)?)
            .with_context(|| format!("writing witnesses to {}", path.display()))?;
        report.note(format!("wrote witnesses to {}", path.display()));
    }
    Ok(())
}

fn cmd_rootsys(report: &mut RunReport, kind: &str, list_positive: bool) -> Result<()> {
    let sys = RootSystem::from_type(parse_dynkin(kind)?).map_err(|e| anyhow!("{}", e))?;
    report.note(format!(
        "{}: {} nodes, {} positive roots",
        sys.kind(),
        sys.rank(),
        sys.positive_roots().len()
    ));
    if list_positive {
        let has_epsilon = !matches!(sys.kind(), DynkinType::E(_));
        for r in sys.positive_roots() {
            if has_epsilon {
                report.note(format!("  {}  =  {}", r, sys.epsilon_string(r)));
            } else {
                report.note(format!("  {}", r));
            }
        }
    }
    report.push_check(Check::boolean(format!("{} constructed", sys.kind()), true));
    Ok(())
}

//! `equifloer` — exact verification harness for group actions on
//! Floer-Novikov style complexes. Every subcommand validates its JSON
//! inputs (reporting a JSON pointer on malformed data, exit code 2),
//! runs its checks, and emits either a human table or a deterministic
//! JSON report. Exit code 0 means every check passed; 1 means some
//! check failed.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use equifloer_core::ainfinity::{
    self, check_bimodule_equivariance, check_weak_action, restrict_invariant,
};
use equifloer_core::field::{rat_from_str, rat_to_string, Cyc3, Rat};
use equifloer_core::formats::{self, ValidationError};
use equifloer_core::gcomplex::{energy_zero_subgroup, signed_action_check};
use equifloer_core::groupcoh::{
    central_extension, cohomologous, compute_h2, spin_profile_from_defects,
};
use equifloer_core::novikov::{push_by_maslov, push_to_universal, PeriodLattice};

mod examples;
mod report;

use report::RunReport;

#[derive(Parser)]
#[command(
    name = "equifloer",
    about = "Exact arithmetic for finite group actions on Floer-Novikov complexes",
    version
)]
struct Cli {
    /// Emit the report as JSON on stdout instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group cohomology in degree two.
    Cohomology {
        #[command(subcommand)]
        cmd: CohomologyCmd,
    },
    /// Truncated Novikov-series arithmetic and period lattices.
    Novikov {
        #[command(subcommand)]
        cmd: NovikovCmd,
    },
    /// Equivariant chain complexes and weighted graphs.
    Complex {
        #[command(subcommand)]
        cmd: ComplexCmd,
    },
    /// A∞ structures, representations, averaging.
    Ainf {
        #[command(subcommand)]
        cmd: AinfCmd,
    },
    /// Compiled-in verification suites.
    Examples {
        #[command(subcommand)]
        cmd: ExamplesCmd,
    },
}

#[derive(Subcommand)]
enum CohomologyCmd {
    /// Dimension and basis of H²(G; Z/2).
    H2(GroupArg),
    /// Class of a lift-defect 2-cochain in the H² basis.
    Class {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        cochain: PathBuf,
    },
    /// The central extension classified by a 2-cocycle.
    Extension {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        cochain: PathBuf,
    },
}

#[derive(Args)]
struct GroupArg {
    /// Group file: {"order": n, "table": [[...]]}.
    #[arg(long)]
    group: PathBuf,
}

#[derive(Subcommand)]
enum NovikovCmd {
    /// Sum of two series files.
    Add {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        cutoff: Option<String>,
    },
    /// Product of two series files.
    Mul {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        cutoff: Option<String>,
    },
    /// Period lattice generated by a comma-separated weight list.
    Lattice {
        #[arg(long, value_delimiter = ',')]
        weights: Vec<String>,
    },
    /// Push a weighted group-ring element to the universal ring.
    Push {
        x: PathBuf,
        #[arg(long)]
        cutoff: Option<String>,
    },
}

#[derive(Subcommand)]
enum ComplexCmd {
    /// ∂² = 0, equivariance, and homology ranks (total and invariant).
    Homology { complex: PathBuf },
    /// Basis and induced differential of the invariant subcomplex.
    Invariant { complex: PathBuf },
    /// Energy-zero subgroup of a weighted graph, with witness paths.
    #[command(name = "g-alpha")]
    GAlpha {
        graph: PathBuf,
        /// Require zero Maslov index as well.
        #[arg(long)]
        maslov: bool,
        /// Require trivial sp class as well.
        #[arg(long)]
        sp: bool,
    },
    /// Does a sign assignment make the twisted action compose?
    SignedAction {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        spf0: PathBuf,
        #[arg(long)]
        spf1: PathBuf,
        #[arg(long)]
        sp: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldChoice {
    Rational,
    Cyclotomic3,
}

#[derive(Subcommand)]
enum AinfCmd {
    /// A∞-relations up to an arity bound.
    Check {
        structure: PathBuf,
        #[arg(long)]
        arity: Option<usize>,
        #[arg(long, value_enum, default_value = "rational")]
        field: FieldChoice,
    },
    /// Equivariance of the operations for a representation.
    Equivariance {
        structure: PathBuf,
        rep: PathBuf,
        #[arg(long, value_enum, default_value = "rational")]
        field: FieldChoice,
    },
    /// Restriction to the invariant subspace.
    Invariant {
        structure: PathBuf,
        rep: PathBuf,
        #[arg(long, value_enum, default_value = "rational")]
        field: FieldChoice,
    },
    /// Average a morphism over the group.
    Average {
        morphism: PathBuf,
        source: PathBuf,
        target: PathBuf,
        rep_source: PathBuf,
        rep_target: PathBuf,
    },
    /// The weak-action homotopy identity.
    WeakAction { input: PathBuf },
    /// Bimodule equivariance.
    Bimodule { input: PathBuf },
}

#[derive(Subcommand)]
enum ExamplesCmd {
    /// Matrix factorizations of the three-fold cover potential.
    #[command(name = "cp1-z3")]
    Cp1Z3,
    /// Rank tables of the plane example on both sides of the mirror.
    #[command(name = "cp2-z3")]
    Cp2Z3 {
        #[arg(long, value_enum, default_value = "compare")]
        side: SideChoice,
    },
    /// Singularity-category ranks against the Clifford torus.
    Dbsing,
    /// Circle with the rotation action.
    MorseCircle,
    /// Sphere with the axis rotation, plus the sign-cancellation case.
    MorseSphere,
    /// Free-action quotient comparison.
    FreeQuotient,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideChoice {
    A,
    B,
    Compare,
}

/// CLI-level failure: distinguishes malformed input (exit 2) from
/// failed checks (exit 1, handled through the report).
enum CliError {
    BadInput(String),
}

impl From<ValidationError> for CliError {
    fn from(e: ValidationError) -> Self {
        CliError::BadInput(e.to_string())
    }
}

fn load_json(path: &Path, report: &mut RunReport) -> Result<Value, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))?;
    report.record_input(&path.display().to_string(), &bytes);
    serde_json::from_slice(&bytes)
        .map_err(|e| CliError::BadInput(format!("{}: invalid JSON: {e}", path.display())))
}

fn parse_cutoff(s: &Option<String>) -> Result<Option<Rat>, CliError> {
    match s {
        None => Ok(None),
        Some(s) => rat_from_str(s)
            .map(Some)
            .map_err(|e| CliError::BadInput(format!("--cutoff: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = RunReport::new(command_name(&cli.command));
    match run(&cli.command, &mut report) {
        Ok(()) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            } else {
                print!("{}", report.render_human());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(CliError::BadInput(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn command_name(cmd: &Command) -> String {
    match cmd {
        Command::Cohomology { cmd } => match cmd {
            CohomologyCmd::H2(_) => "cohomology h2",
            CohomologyCmd::Class { .. } => "cohomology class",
            CohomologyCmd::Extension { .. } => "cohomology extension",
        },
        Command::Novikov { cmd } => match cmd {
            NovikovCmd::Add { .. } => "novikov add",
            NovikovCmd::Mul { .. } => "novikov mul",
            NovikovCmd::Lattice { .. } => "novikov lattice",
            NovikovCmd::Push { .. } => "novikov push",
        },
        Command::Complex { cmd } => match cmd {
            ComplexCmd::Homology { .. } => "complex homology",
            ComplexCmd::Invariant { .. } => "complex invariant",
            ComplexCmd::GAlpha { .. } => "complex g-alpha",
            ComplexCmd::SignedAction { .. } => "complex signed-action",
        },
        Command::Ainf { cmd } => match cmd {
            AinfCmd::Check { .. } => "ainf check",
            AinfCmd::Equivariance { .. } => "ainf equivariance",
            AinfCmd::Invariant { .. } => "ainf invariant",
            AinfCmd::Average { .. } => "ainf average",
            AinfCmd::WeakAction { .. } => "ainf weak-action",
            AinfCmd::Bimodule { .. } => "ainf bimodule",
        },
        Command::Examples { cmd } => match cmd {
            ExamplesCmd::Cp1Z3 => "examples cp1-z3",
            ExamplesCmd::Cp2Z3 { .. } => "examples cp2-z3",
            ExamplesCmd::Dbsing => "examples dbsing",
            ExamplesCmd::MorseCircle => "examples morse-circle",
            ExamplesCmd::MorseSphere => "examples morse-sphere",
            ExamplesCmd::FreeQuotient => "examples free-quotient",
        },
    }
    .to_string()
}

fn run(cmd: &Command, report: &mut RunReport) -> Result<(), CliError> {
    match cmd {
        Command::Cohomology { cmd } => run_cohomology(cmd, report),
        Command::Novikov { cmd } => run_novikov(cmd, report),
        Command::Complex { cmd } => run_complex(cmd, report),
        Command::Ainf { cmd } => run_ainf(cmd, report),
        Command::Examples { cmd } => {
            match cmd {
                ExamplesCmd::Cp1Z3 => examples::cp1_z3(report),
                ExamplesCmd::Cp2Z3 { side } => {
                    let side = match side {
                        SideChoice::A => examples::Cp2Side::A,
                        SideChoice::B => examples::Cp2Side::B,
                        SideChoice::Compare => examples::Cp2Side::Compare,
                    };
                    examples::cp2_z3(report, side)
                }
                ExamplesCmd::Dbsing => examples::dbsing(report),
                ExamplesCmd::MorseCircle => examples::morse_circle(report),
                ExamplesCmd::MorseSphere => examples::morse_sphere(report),
                ExamplesCmd::FreeQuotient => examples::free_quotient(report),
            }
            Ok(())
        }
    }
}

fn run_cohomology(cmd: &CohomologyCmd, report: &mut RunReport) -> Result<(), CliError> {
    match cmd {
        CohomologyCmd::H2(arg) => {
            let v = load_json(&arg.group, report)?;
            let group = formats::group_from_value(&v, "")?;
            let h2 = compute_h2(&group);
            report.pass("dimension", json!(h2.dimension));
            report.pass(
                "basis",
                json!(h2
                    .basis
                    .iter()
                    .map(|c| c.values.clone())
                    .collect::<Vec<_>>()),
            );
        }
        CohomologyCmd::Class { group, cochain } => {
            let gv = load_json(&group.group, report)?;
            let group = formats::group_from_value(&gv, "")?;
            let cv = load_json(cochain, report)?;
            let cochain = formats::two_cochain_from_value(&cv, &group, "")?;
            match spin_profile_from_defects(&group, &cochain) {
                Ok(class) => {
                    report.pass("is-cocycle", json!(true));
                    report.pass(
                        "class",
                        json!({
                            "coefficients": class.coefficients,
                            "trivial": class.is_trivial(),
                        }),
                    );
                    // a coboundary witness exists exactly for the
                    // trivial class
                    let zero = equifloer_core::groupcoh::TwoCochain::zero(group.order());
                    let witness = cohomologous(&group, &cochain, &zero)
                        .expect("inputs are cocycles")
                        .map(|w| w.values);
                    report.pass("coboundary-witness", json!(witness));
                }
                Err(e) => {
                    report.check("is-cocycle", false, json!(e.to_string()));
                }
            }
        }
        CohomologyCmd::Extension { group, cochain } => {
            let gv = load_json(&group.group, report)?;
            let group = formats::group_from_value(&gv, "")?;
            let cv = load_json(cochain, report)?;
            let cochain = formats::two_cochain_from_value(&cv, &group, "")?;
            match central_extension(&group, &cochain) {
                Ok(ext) => {
                    report.pass("is-cocycle", json!(true));
                    report.pass("extension", formats::group_to_value(&ext));
                }
                Err(e) => report.check("is-cocycle", false, json!(e.to_string())),
            }
        }
    }
    Ok(())
}

fn run_novikov(cmd: &NovikovCmd, report: &mut RunReport) -> Result<(), CliError> {
    match cmd {
        NovikovCmd::Add { a, b, cutoff } | NovikovCmd::Mul { a, b, cutoff } => {
            let mul = matches!(cmd, NovikovCmd::Mul { .. });
            let av = load_json(a, report)?;
            let bv = load_json(b, report)?;
            let mut sa = formats::series_from_value(&av, "")?;
            let mut sb = formats::series_from_value(&bv, "")?;
            if let Some(c) = parse_cutoff(cutoff)? {
                sa = sa.truncate(c.clone());
                sb = sb.truncate(c);
            }
            let result = if mul { sa.mul(&sb) } else { sa.add(&sb) };
            match result {
                Ok(s) => report.pass("result", formats::series_to_value(&s)),
                Err(e) => {
                    return Err(CliError::BadInput(format!(
                        "series mismatch: {e} (use --cutoff to align)"
                    )))
                }
            }
        }
        NovikovCmd::Lattice { weights } => {
            let parsed: Result<Vec<Rat>, _> = weights.iter().map(|w| rat_from_str(w)).collect();
            let parsed = parsed.map_err(|e| CliError::BadInput(format!("--weights: {e}")))?;
            let lattice = PeriodLattice::from_weights(&parsed);
            report.pass("generator", json!(rat_to_string(lattice.generator())));
        }
        NovikovCmd::Push { x, cutoff } => {
            let xv = load_json(x, report)?;
            let mut elem = formats::group_ring_from_value(&xv, "")?;
            if let Some(c) = parse_cutoff(cutoff)? {
                elem = elem.truncate(c);
            }
            let series = push_to_universal(&elem);
            report.pass("series", formats::series_to_value(&series));
            let graded: BTreeMap<String, Value> = push_by_maslov(&elem)
                .into_iter()
                .map(|(k, s)| (k.to_string(), formats::series_to_value(&s)))
                .collect();
            report.pass("by-maslov", json!(graded));
        }
    }
    Ok(())
}

fn run_complex(cmd: &ComplexCmd, report: &mut RunReport) -> Result<(), CliError> {
    match cmd {
        ComplexCmd::Homology { complex } => {
            let v = load_json(complex, report)?;
            let c = formats::complex_from_value(&v, "")?;
            let dsq = c.check_dsq_zero();
            report.check("dsq-zero", dsq, json!(null));
            let equivariant = c.check_equivariance() && c.signs_compose();
            report.check("equivariant", equivariant, json!(null));
            if dsq && equivariant {
                let ranks = c.homology_ranks().expect("checked above");
                report.pass(
                    "total-ranks",
                    json!(ranks
                        .total
                        .iter()
                        .map(|(k, r)| (k.to_string(), *r))
                        .collect::<BTreeMap<_, _>>()),
                );
                report.pass(
                    "invariant-ranks",
                    json!(ranks
                        .invariant
                        .iter()
                        .map(|(k, r)| (k.to_string(), *r))
                        .collect::<BTreeMap<_, _>>()),
                );
            }
        }
        ComplexCmd::Invariant { complex } => {
            let v = load_json(complex, report)?;
            let c = formats::complex_from_value(&v, "")?;
            match c.invariant_subcomplex() {
                Ok(sub) => {
                    report.pass(
                        "dimensions",
                        json!(sub
                            .dims
                            .iter()
                            .map(|(k, d)| (k.to_string(), *d))
                            .collect::<BTreeMap<_, _>>()),
                    );
                    report.pass(
                        "homology-ranks",
                        json!(sub
                            .homology_ranks()
                            .iter()
                            .map(|(k, r)| (k.to_string(), *r))
                            .collect::<BTreeMap<_, _>>()),
                    );
                }
                Err(e) => report.check("equivariant", false, json!(e.to_string())),
            }
        }
        ComplexCmd::GAlpha { graph, maslov, sp } => {
            let v = load_json(graph, report)?;
            let g = formats::graph_from_value(&v, "")?;
            match energy_zero_subgroup(&g, *maslov, *sp) {
                Ok(result) => {
                    report.pass("members", json!(result.members));
                    let witnesses: BTreeMap<String, Value> = result
                        .witnesses
                        .iter()
                        .map(|(g, walk)| {
                            (
                                g.to_string(),
                                json!(walk
                                    .iter()
                                    .map(|s| json!({
                                        "edge": s.edge,
                                        "forward": s.forward,
                                    }))
                                    .collect::<Vec<_>>()),
                            )
                        })
                        .collect();
                    report.pass("witnesses", json!(witnesses));
                }
                Err(e) => report.check("computable", false, json!(e.to_string())),
            }
        }
        ComplexCmd::SignedAction {
            group,
            spf0,
            spf1,
            sp,
        } => {
            let gv = load_json(&group.group, report)?;
            let g = formats::group_from_value(&gv, "")?;
            let c0 = formats::two_cochain_from_value(&load_json(spf0, report)?, &g, "")?;
            let c1 = formats::two_cochain_from_value(&load_json(spf1, report)?, &g, "")?;
            let sp = formats::one_cochain_from_value(&load_json(sp, report)?, &g, "")?;
            match signed_action_check(&g, &c0, &c1, &sp) {
                Ok(result) => {
                    report.check("holds", result.holds, json!(result.defect.values));
                }
                Err(e) => report.check("cocycles", false, json!(e.to_string())),
            }
        }
    }
    Ok(())
}

fn run_ainf(cmd: &AinfCmd, report: &mut RunReport) -> Result<(), CliError> {
    match cmd {
        AinfCmd::Check {
            structure,
            arity,
            field,
        } => {
            let v = load_json(structure, report)?;
            match field {
                FieldChoice::Rational => {
                    let a = formats::ainf_from_value::<Rat>(&v, "")?;
                    ainf_check_into(report, &a, *arity)?;
                }
                FieldChoice::Cyclotomic3 => {
                    let a = formats::ainf_from_value::<Cyc3>(&v, "")?;
                    ainf_check_into(report, &a, *arity)?;
                }
            }
        }
        AinfCmd::Equivariance {
            structure,
            rep,
            field,
        } => {
            let sv = load_json(structure, report)?;
            let rv = load_json(rep, report)?;
            match field {
                FieldChoice::Rational => {
                    let a = formats::ainf_from_value::<Rat>(&sv, "")?;
                    let rep = formats::grep_from_value::<Rat>(&rv, a.space(), "")?;
                    report.check(
                        "equivariant",
                        ainfinity::check_equivariance(&a, &rep),
                        json!(null),
                    );
                }
                FieldChoice::Cyclotomic3 => {
                    let a = formats::ainf_from_value::<Cyc3>(&sv, "")?;
                    let rep = formats::grep_from_value::<Cyc3>(&rv, a.space(), "")?;
                    report.check(
                        "equivariant",
                        ainfinity::check_equivariance(&a, &rep),
                        json!(null),
                    );
                }
            }
        }
        AinfCmd::Invariant {
            structure,
            rep,
            field,
        } => {
            let sv = load_json(structure, report)?;
            let rv = load_json(rep, report)?;
            if *field != FieldChoice::Rational {
                return Err(CliError::BadInput(
                    "invariant restriction is exposed for the rational field".into(),
                ));
            }
            let a = formats::ainf_from_value::<Rat>(&sv, "")?;
            let rep = formats::grep_from_value::<Rat>(&rv, a.space(), "")?;
            match restrict_invariant(&a, &rep) {
                Ok(inv) => {
                    report.pass(
                        "invariant-dimensions",
                        json!(inv
                            .space()
                            .degrees()
                            .into_iter()
                            .map(|d| {
                                let count = (0..inv.space().dim())
                                    .filter(|&i| inv.space().degree(i) == d)
                                    .count();
                                (d.to_string(), count)
                            })
                            .collect::<BTreeMap<_, _>>()),
                    );
                    let closed = inv
                        .check_relations(inv.max_arity())
                        .map(|r| r.holds)
                        .unwrap_or(false);
                    report.check("relations-closed", closed, json!(null));
                }
                Err(e) => report.check("equivariant", false, json!(e.to_string())),
            }
        }
        AinfCmd::Average {
            morphism,
            source,
            target,
            rep_source,
            rep_target,
        } => {
            let sv = load_json(source, report)?;
            let tv = load_json(target, report)?;
            let src = formats::ainf_from_value::<Rat>(&sv, "")?;
            let tgt = formats::ainf_from_value::<Rat>(&tv, "")?;
            let mv = load_json(morphism, report)?;
            let f = formats::morphism_from_value::<Rat>(&mv, src.space(), tgt.space(), "")?;
            let r1v = load_json(rep_source, report)?;
            let r2v = load_json(rep_target, report)?;
            let rep1 = formats::grep_from_value::<Rat>(&r1v, src.space(), "")?;
            let rep2 = formats::grep_from_value::<Rat>(&r2v, tgt.space(), "")?;
            match ainfinity::average_morphism(&f, &rep1, &rep2) {
                Ok(avg) => {
                    report.check(
                        "equivariant-after-averaging",
                        ainfinity::morphism_is_equivariant(&avg, &rep1, &rep2),
                        json!(null),
                    );
                    let rendered: Vec<Value> = avg
                        .normalized()
                        .into_iter()
                        .map(|(k, inputs, out, c)| {
                            json!({
                                "arity": k,
                                "inputs": inputs
                                    .iter()
                                    .map(|&i| src.space().id(i))
                                    .collect::<Vec<_>>(),
                                "output": tgt.space().id(out),
                                "coeff": rat_to_string(&c),
                            })
                        })
                        .collect();
                    report.pass("averaged", json!(rendered));
                }
                Err(e) => report.check("averagable", false, json!(e.to_string())),
            }
        }
        AinfCmd::WeakAction { input } => {
            let v = load_json(input, report)?;
            let data = formats::weak_action_from_value(&v, "")?;
            match check_weak_action(&data.complex, &data.group, &data.psi, &data.sigma) {
                Ok(result) => {
                    report.check(
                        "weak-action",
                        result.holds,
                        json!(result.failing_pair.map(|(g, h)| vec![g, h])),
                    );
                }
                Err(e) => report.check("chain-maps", false, json!(e.to_string())),
            }
        }
        AinfCmd::Bimodule { input } => {
            let v = load_json(input, report)?;
            let data = formats::bimodule_from_value(&v, "")?;
            report.check(
                "equivariant",
                check_bimodule_equivariance(
                    &data.bimodule,
                    &data.rep_c1,
                    &data.rep_m,
                    &data.rep_c2,
                ),
                json!(null),
            );
        }
    }
    Ok(())
}

fn ainf_check_into<F: equifloer_core::formats::ScalarFormat>(
    report: &mut RunReport,
    a: &equifloer_core::ainfinity::AInfStructure<F>,
    arity: Option<usize>,
) -> Result<(), CliError> {
    let up_to = arity.unwrap_or(a.max_arity());
    match a.check_relations(up_to) {
        Ok(r) => {
            report.check(
                "relations",
                r.holds,
                json!({
                    "up_to_arity": up_to,
                    "failing_arity": r.failing_arity,
                    "failing_tuple": r.failing_tuple,
                }),
            );
            Ok(())
        }
        Err(e) => Err(CliError::BadInput(format!("--arity: {e}"))),
    }
}

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use typeb_core::adjacency::OrderTable;
use typeb_core::preorder::{preceq_relation, witness_step_in, PreorderOracle};
use typeb_core::verify::{Verifier, VerifyConfig};
use typeb_core::{a_value, family_table, kappa, symbol, Bipartition, Error};

#[derive(Parser)]
#[command(name = "typeb", version, about = "Symbols, families and the dominance order for type B")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Symbol rows and kappa of a bipartition
    Symbol {
        #[arg(allow_hyphen_values = true)]
        bipartition: String,
        #[arg(long, default_value_t = 0)]
        b: usize,
        /// Symbol width; defaults to the smallest admissible one
        #[arg(long = "N")]
        width: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Sorted symbol entries of a bipartition
    Kappa {
        #[arg(allow_hyphen_values = true)]
        bipartition: String,
        #[arg(long, default_value_t = 0)]
        b: usize,
        #[arg(long = "N")]
        width: Option<usize>,
    },
    /// Families of the characters of rank n
    Families {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        b: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// a-value of every character of rank n
    Avalues {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        b: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Compare two characters in the dominance order
    Compare {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[arg(long, default_value_t = 0)]
        b: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Saturated chain between comparable characters, with one witness per step
    Chain {
        #[arg(allow_hyphen_values = true)]
        from: String,
        #[arg(allow_hyphen_values = true)]
        to: String,
        #[arg(long, default_value_t = 0)]
        b: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Run the property suites
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3")]
        b_list: Vec<usize>,
        /// Also compare dominance with the induction-generated preorder
        #[arg(long)]
        oracle: bool,
    },
    /// Hasse diagram of the families
    Hasse {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        b: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// 0/1 matrix of the order on all characters of rank n
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        b: usize,
        /// Print the induction-generated preorder instead of dominance
        #[arg(long)]
        oracle: bool,
    },
}

enum Failure {
    Core(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotAdmissible { .. } => 3,
        Error::NotComparable(..) => 4,
        _ => 2,
    }
}

fn parse(text: &str) -> Result<Bipartition, Error> {
    text.parse()
}

fn unsupported(format: Format, command: &str) -> Error {
    Error::InvalidArgument(format!("format {format:?} is not available for {command}"))
}

fn list(xs: &[usize]) -> String {
    if xs.is_empty() {
        return "-".into();
    }
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn run(cmd: Command) -> Result<String, Failure> {
    let mut out = String::new();
    match cmd {
        Command::Symbol {
            bipartition,
            b,
            width,
            format,
        } => {
            let bp = parse(&bipartition)?;
            let width = width.unwrap_or_else(|| bp.min_admissible());
            let s = symbol(&bp, b, width)?;
            let k = s.kappa().entries;
            match format {
                Format::Tsv => {
                    let _ = writeln!(out, "bipartition\t{bp}\nb\t{b}\nN\t{width}");
                    let _ = writeln!(out, "top\t{}\nbottom\t{}", list(&s.row2), list(&s.row1));
                    let _ = writeln!(out, "kappa\t{k}\nsize\t{}\na\t{}", k.size(), a_value(&bp, b));
                }
                Format::Json => {
                    out = serde_json::to_string(&s.record(&bp)).expect("plain record") + "\n";
                }
                Format::Dot => return Err(unsupported(format, "symbol").into()),
            }
        }
        Command::Kappa { bipartition, b, width } => {
            let bp = parse(&bipartition)?;
            let width = width.unwrap_or_else(|| bp.min_admissible());
            let _ = writeln!(out, "{}", kappa(&bp, b, width)?.entries);
        }
        Command::Families { n, b, format } => {
            let table = family_table(n, b);
            match format {
                Format::Tsv => out = table.to_tsv(),
                Format::Json => {
                    let families: Vec<_> = table
                        .families
                        .iter()
                        .map(|f| {
                            json!({
                                "kappa": f.kappa.parts(),
                                "a": f.a_value,
                                "members": f.members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    let doc = json!({ "n": n, "b": b, "N": table.width, "families": families });
                    out = doc.to_string() + "\n";
                }
                Format::Dot => out = table.hasse().to_dot(&format!("B{n}_b{b}")),
            }
        }
        Command::Avalues { n, b, format } => {
            let table = OrderTable::new(n, b);
            let rows: Vec<(String, String, usize)> = table
                .bipartitions()
                .iter()
                .map(|bp| {
                    let k = table.kappa_of(bp).expect("enumerated").to_string();
                    (bp.to_string(), k, a_value(bp, b))
                })
                .collect();
            match format {
                Format::Tsv => {
                    out.push_str("bipartition\tkappa\ta\n");
                    for (bp, k, a) in rows {
                        let _ = writeln!(out, "{bp}\t{k}\t{a}");
                    }
                }
                Format::Json => {
                    let records: Vec<_> = rows
                        .iter()
                        .map(|(bp, k, a)| json!({ "bipartition": bp, "kappa": k, "a": a }))
                        .collect();
                    out = serde_json::Value::from(records).to_string() + "\n";
                }
                Format::Dot => return Err(unsupported(format, "avalues").into()),
            }
        }
        Command::Compare { left, right, b, format } => {
            let (x, y) = (parse(&left)?, parse(&right)?);
            if x.rank() != y.rank() {
                return Err(Error::RankMismatch {
                    left: x.rank(),
                    right: y.rank(),
                }
                .into());
            }
            let table = OrderTable::new(x.rank(), b);
            let (up, down) = (table.leq(&x, &y)?, table.leq(&y, &x)?);
            let verdict = match (up, down) {
                (true, true) => "EQ",
                (true, false) => "LEQ",
                (false, true) => "GEQ",
                (false, false) => "INCOMPARABLE",
            };
            let (ax, ay) = (a_value(&x, b), a_value(&y, b));
            match format {
                Format::Tsv => {
                    let _ = writeln!(out, "{verdict}\ta({x})={ax}\ta({y})={ay}");
                }
                Format::Json => {
                    let doc = json!({
                        "relation": verdict,
                        "left": x.to_string(), "right": y.to_string(),
                        "a_left": ax, "a_right": ay,
                    });
                    out = doc.to_string() + "\n";
                }
                Format::Dot => return Err(unsupported(format, "compare").into()),
            }
        }
        Command::Chain { from, to, b, format } => {
            let (x, y) = (parse(&from)?, parse(&to)?);
            if x.rank() != y.rank() {
                return Err(Error::RankMismatch {
                    left: x.rank(),
                    right: y.rank(),
                }
                .into());
            }
            let table = OrderTable::new(x.rank(), b);
            let chain = table.saturated_chain(&x, &y)?;
            let mut steps = Vec::new();
            for (idx, pair) in chain.windows(2).enumerate() {
                let (lo, hi) = (&pair[0], &pair[1]);
                if table.kappa_of(lo)? == table.kappa_of(hi)? {
                    steps.push(None);
                    continue;
                }
                let mv = table.adjacency_move(lo, hi)?;
                let w = witness_step_in(&table, lo, hi)?;
                steps.push(Some((mv, w.record(idx + 1, lo, hi, b)?)));
            }
            match format {
                Format::Tsv => {
                    out.push_str("step\tbipartition\tkappa\tmove\tnu\tl\tcase\n");
                    let _ = writeln!(out, "0\t{x}\t{}\t-\t-\t-\t-", table.kappa_of(&x)?);
                    for (idx, (bp, step)) in chain.iter().skip(1).zip(&steps).enumerate() {
                        let k = table.kappa_of(bp)?;
                        match step {
                            Some((mv, rec)) => {
                                let case = if rec.transposed { 2 } else { 1 };
                                let _ = writeln!(out, "{}\t{bp}\t{k}\t{mv}\t{}\t{}\t{case}", idx + 1, rec.nu, rec.l);
                            }
                            None => {
                                let _ = writeln!(out, "{}\t{bp}\t{k}\tfamily\t-\t-\t-", idx + 1);
                            }
                        }
                    }
                }
                Format::Json => {
                    let witnesses: Vec<_> = steps
                        .iter()
                        .flatten()
                        .map(|(mv, rec)| {
                            let mut v = serde_json::to_value(rec).expect("plain record");
                            v["move"] = json!(mv.to_string());
                            v
                        })
                        .collect();
                    let doc = json!({
                        "b": b,
                        "chain": chain.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "witnesses": witnesses,
                    });
                    out = doc.to_string() + "\n";
                }
                Format::Dot => return Err(unsupported(format, "chain").into()),
            }
        }
        Command::Verify { max_n, b_list, oracle } => {
            let cfg = VerifyConfig { max_n, b_list, oracle };
            let reports = Verifier::new().run(&cfg);
            let failed = reports.iter().filter(|r| !r.passed()).count();
            for r in &reports {
                let _ = writeln!(out, "{}", r.line());
            }
            if failed > 0 {
                let _ = writeln!(out, "{failed} suite(s) failed");
                print!("{out}");
                return Err(Failure::Verification);
            }
            out.push_str("all suites passed\n");
        }
        Command::Hasse { n, b, format } => {
            let hasse = family_table(n, b).hasse();
            match format {
                Format::Dot => out = hasse.to_dot(&format!("B{n}_b{b}")),
                Format::Json => {
                    let nodes: Vec<_> = hasse
                        .labels
                        .iter()
                        .enumerate()
                        .map(|(id, (k, a))| json!({ "id": id, "kappa": k.parts(), "a": a }))
                        .collect();
                    out = json!({ "nodes": nodes, "edges": hasse.edges }).to_string() + "\n";
                }
                Format::Tsv => {
                    out.push_str("lower\tupper\n");
                    for &(lo, hi) in &hasse.edges {
                        let _ = writeln!(out, "{}\t{}", hasse.labels[lo].0, hasse.labels[hi].0);
                    }
                }
            }
        }
        Command::Matrix { n, b, oracle } => {
            out = if oracle {
                PreorderOracle::new(b).relation(n).to_matrix_text()
            } else {
                preceq_relation(n, b).to_matrix_text()
            };
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

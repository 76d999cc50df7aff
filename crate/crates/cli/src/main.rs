//! `freeprod`: command-line front end for computations in `H * G`.

use std::fmt::Display;
use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use free_product::conjugacy::{are_conjugate, canonical_class, enumerate_u_classes, ClassId};
use free_product::homology::{assemble_reduced_hc, assemble_reduced_phc, AssemblyReport, ModuleExpr, Ring, SideSummand};
use free_product::roots::{centralizer, class_invariants, primitive_root, CentralizerDescriptor};
use free_product::word::{FreeProduct, ReducedWord};
use free_product::{GroupTable, Parity, Side};
use serde_json::{json, Value};

const MAX_ORDER: usize = 64;

#[derive(Parser)]
#[command(name = "freeprod", version, about = "Exact computation in the free product of two finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Session {
    /// First factor: a preset (cyclic<n>, klein4, sym3, trivial) or a JSON table file.
    #[arg(long = "H", value_name = "GROUP")]
    h: String,
    /// Second factor.
    #[arg(long = "G", value_name = "GROUP")]
    g: String,
    /// Emit line-delimited JSON records.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HomologyArgs {
    /// Z, Z/<m>, Q or F<p>.
    #[arg(long, default_value = "Q")]
    ring: String,
    /// Largest `(h, g)` pair count of the listed mixed classes.
    #[arg(long, default_value_t = 3)]
    class_bound: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a raw word.
    Reduce {
        #[command(flatten)]
        session: Session,
        word: String,
    },
    /// Product of two words.
    Mul {
        #[command(flatten)]
        session: Session,
        a: String,
        b: String,
    },
    /// Inverse of a word.
    Inv {
        #[command(flatten)]
        session: Session,
        word: String,
    },
    /// Integer power of a word.
    Pow {
        #[command(flatten)]
        session: Session,
        word: String,
        #[arg(allow_negative_numbers = true)]
        exponent: i64,
    },
    /// Syllable type of a word.
    Type {
        #[command(flatten)]
        session: Session,
        word: String,
    },
    /// Canonical conjugacy class of a word.
    Class {
        #[command(flatten)]
        session: Session,
        word: String,
    },
    /// Whether two words are conjugate.
    Conjugate {
        #[command(flatten)]
        session: Session,
        a: String,
        b: String,
    },
    /// Primitive root and its multiplicity.
    Root {
        #[command(flatten)]
        session: Session,
        word: String,
    },
    /// Structure of the centralizer.
    Centralizer {
        #[command(flatten)]
        session: Session,
        word: String,
    },
    /// Mixed conjugacy classes up to a number of pairs.
    Classes {
        #[command(flatten)]
        session: Session,
        #[arg(long)]
        max_pairs: usize,
    },
    /// Reduced cyclic homology of the group ring.
    Hc {
        #[command(flatten)]
        session: Session,
        #[command(flatten)]
        homology: HomologyArgs,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Reduced periodic cyclic homology of the group ring.
    Phc {
        #[command(flatten)]
        session: Session,
        #[command(flatten)]
        homology: HomologyArgs,
        /// even or odd; both when omitted.
        #[arg(long, value_parser = parse_parity)]
        parity: Option<Parity>,
    },
}

fn parse_parity(s: &str) -> Result<Parity, String> {
    match s {
        "even" => Ok(Parity::Even),
        "odd" => Ok(Parity::Odd),
        _ => Err(format!("expected `even` or `odd`, got `{s}`")),
    }
}

fn err(e: impl Display) -> String {
    e.to_string()
}

fn load(source: &str) -> Result<GroupTable, String> {
    let table = match GroupTable::preset(source) {
        Ok(t) => t,
        Err(preset_err) => {
            if !Path::new(source).is_file() {
                return Err(err(preset_err));
            }
            let text = std::fs::read_to_string(source).map_err(|e| format!("{source}: {e}"))?;
            GroupTable::from_json(&text).map_err(|e| format!("{source}: {e}"))?
        }
    };
    if table.order() > MAX_ORDER {
        return Err(format!("{source}: order {} exceeds the limit of {MAX_ORDER}", table.order()));
    }
    Ok(table)
}

struct Out {
    json: bool,
    lines: Vec<String>,
}

impl Out {
    fn emit(&mut self, text: impl Into<String>, record: Value) {
        if self.json {
            self.lines.push(record.to_string());
        } else {
            self.lines.push(text.into());
        }
    }
}

impl Session {
    fn open(&self) -> Result<(Arc<FreeProduct>, Out), String> {
        let ctx = FreeProduct::new(load(&self.h)?, load(&self.g)?);
        Ok((
            ctx,
            Out {
                json: self.json,
                lines: Vec::new(),
            },
        ))
    }
}

fn parse(ctx: &Arc<FreeProduct>, text: &str) -> Result<ReducedWord, String> {
    ctx.parse(text).map_err(err)
}

fn word_record(out: &mut Out, w: &ReducedWord) {
    out.emit(w.to_string(), json!({ "word": w.to_string() }));
}

fn class_record(ctx: &Arc<FreeProduct>, class: &ClassId) -> Value {
    let (n, k) = class_invariants(ctx, class);
    let (kind, index) = match class {
        ClassId::Identity => ("identity", None),
        ClassId::HClass(i) => ("H", Some(*i)),
        ClassId::GClass(i) => ("G", Some(*i)),
        ClassId::Mixed(_) => ("mixed", None),
    };
    json!({
        "class": kind,
        "index": index,
        "representative": class.representative(ctx).to_string(),
        "k": k,
        "n": n.to_string(),
    })
}

fn side_elements(side: Side, elements: &[usize]) -> String {
    let items: Vec<String> = elements.iter().map(|i| format!("{}{i}", side.prefix())).collect();
    format!("{{{}}}", items.join(", "))
}

fn row_values(values: &[ModuleExpr]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn render_report(out: &mut Out, report: &AssemblyReport) {
    let labels = report.window.slot_labels();
    let side_row = |name: &str, s: &SideSummand| match s {
        SideSummand::Evaluated(v) => (name.to_string(), row_values(v)),
        SideSummand::Symbolic(sym) => (name.to_string(), vec![sym.clone(); labels.len()]),
    };
    let mut rows = vec![side_row("H", &report.h_side), side_row("G", &report.g_side)];
    for r in &report.rows {
        rows.push((format!("[{}] k={}", r.word, r.k), row_values(&r.values)));
    }
    if let Some(total) = &report.total {
        rows.push(("total".to_string(), row_values(total)));
    }

    let header = format!("reduced {} over {}", report.theory.tag(), report.ring);
    if out.json {
        out.emit("", json!({ "report": header, "slots": labels }));
        for (name, values) in &rows {
            out.emit("", json!({ "row": name, "values": values }));
        }
        out.emit("", json!({ "truncation": report.truncation_notice() }));
        return;
    }

    let first = rows.iter().map(|(n, _)| n.len()).chain([6]).max().unwrap();
    let widths: Vec<usize> = (0..labels.len())
        .map(|j| rows.iter().map(|(_, v)| v[j].len()).chain([labels[j].len()]).max().unwrap())
        .collect();
    let line = |name: &str, cells: &[String]| {
        let mut s = format!("{name:<first$}");
        for (c, w) in cells.iter().zip(&widths) {
            s.push_str(&format!("  {c:<w$}"));
        }
        s.trim_end().to_string()
    };
    out.emit(header, Value::Null);
    out.emit(line("degree", &labels), Value::Null);
    for (name, values) in &rows {
        out.emit(line(name, values), Value::Null);
    }
    out.emit(report.truncation_notice(), Value::Null);
}

fn run(command: Command) -> Result<Vec<String>, String> {
    let (ctx, mut out) = match &command {
        Command::Reduce { session, .. }
        | Command::Mul { session, .. }
        | Command::Inv { session, .. }
        | Command::Pow { session, .. }
        | Command::Type { session, .. }
        | Command::Class { session, .. }
        | Command::Conjugate { session, .. }
        | Command::Root { session, .. }
        | Command::Centralizer { session, .. }
        | Command::Classes { session, .. }
        | Command::Hc { session, .. }
        | Command::Phc { session, .. } => session.open()?,
    };
    match command {
        Command::Reduce { word, .. } => word_record(&mut out, &parse(&ctx, &word)?),
        Command::Mul { a, b, .. } => {
            let p = parse(&ctx, &a)?.mul(&parse(&ctx, &b)?).map_err(err)?;
            word_record(&mut out, &p);
        }
        Command::Inv { word, .. } => word_record(&mut out, &parse(&ctx, &word)?.inverse()),
        Command::Pow { word, exponent, .. } => word_record(&mut out, &parse(&ctx, &word)?.pow(exponent)),
        Command::Type { word, .. } => {
            let w = parse(&ctx, &word)?;
            let t = w.syllable_type().to_string();
            out.emit(t.clone(), json!({ "word": w.to_string(), "type": t }));
        }
        Command::Class { word, .. } => {
            let w = parse(&ctx, &word)?;
            let class = canonical_class(&w);
            let mut record = class_record(&ctx, &class);
            record["word"] = json!(w.to_string());
            out.emit(class.to_string(), record);
        }
        Command::Conjugate { a, b, .. } => {
            let same = are_conjugate(&parse(&ctx, &a)?, &parse(&ctx, &b)?).map_err(err)?;
            out.emit(same.to_string(), json!({ "conjugate": same }));
        }
        Command::Root { word, .. } => {
            let w = parse(&ctx, &word)?;
            let r = primitive_root(&w).map_err(err)?;
            out.emit(
                format!("root {}\nk={}", r.root, r.multiplicity),
                json!({ "word": w.to_string(), "root": r.root.to_string(), "k": r.multiplicity }),
            );
        }
        Command::Centralizer { word, .. } => {
            let w = parse(&ctx, &word)?;
            let (text, record) = match centralizer(&w) {
                CentralizerDescriptor::FullGroup => ("full group".to_string(), json!({ "centralizer": "full" })),
                CentralizerDescriptor::FiniteSide {
                    side,
                    elements,
                    conjugator,
                } => (
                    format!(
                        "finite {side}-centralizer {} conjugated by {conjugator}",
                        side_elements(side, &elements)
                    ),
                    json!({
                        "centralizer": "finite",
                        "side": side.to_string(),
                        "elements": elements,
                        "conjugator": conjugator.to_string(),
                    }),
                ),
                CentralizerDescriptor::InfiniteCyclic { generator, k } => (
                    format!("infinite cyclic generated by {generator}, k={k}"),
                    json!({ "centralizer": "infinite-cyclic", "generator": generator.to_string(), "k": k }),
                ),
            };
            out.emit(text, record);
        }
        Command::Classes { max_pairs, .. } => {
            for w in enumerate_u_classes(&ctx, max_pairs) {
                let (n, k) = class_invariants(&ctx, &ClassId::Mixed(w.clone()));
                let k = k.expect("mixed classes have a root");
                out.emit(
                    format!("{w}\tk={k}\tn={n}"),
                    json!({ "word": w.to_string(), "k": k, "n": n.to_string() }),
                );
            }
        }
        Command::Hc {
            homology, max_degree, ..
        } => {
            let ring = Ring::parse(&homology.ring).map_err(err)?;
            render_report(&mut out, &assemble_reduced_hc(&ctx, ring, max_degree, homology.class_bound));
        }
        Command::Phc { homology, parity, .. } => {
            let ring = Ring::parse(&homology.ring).map_err(err)?;
            let parities = parity.map_or(vec![Parity::Even, Parity::Odd], |p| vec![p]);
            for p in parities {
                render_report(&mut out, &assemble_reduced_phc(&ctx, ring, p, homology.class_bound));
            }
        }
    }
    Ok(out.lines)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(lines) => {
            for l in lines {
                println!("{l}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

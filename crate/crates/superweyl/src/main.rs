//! Command-line surface: enumeration, Coxeter data, group orders, defining
//! sequences, relation checking and the verification suites.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use superweyl::catalog::{build_catalog, parse_spec, AlgebraCatalog, Family};
use superweyl::coxeter::{coxeter_matrix, emit_dot, emit_text, CoxeterGraph};
use superweyl::defseq::encode;
use superweyl::enumerator::{enumerate_borels, BorelSet};
use superweyl::permgroup::{
    brute_force_order, build_generator_table, check_relations, group_order, parse_relation_file,
};
use superweyl::rootspace::Rational;
use superweyl::verify::run_suite;

#[derive(Parser)]
#[command(name = "superweyl", version, about = "Fundamental systems and super Weyl groups of basic classical Lie superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoxFormat {
    Dot,
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all fundamental systems.
    Enumerate {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value = "text")]
        format: EnumFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Concrete parameter for D(2,1;a); generic by default.
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Compute the Coxeter matrix or graph of the super simple generators.
    Coxeter {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value = "text")]
        format: CoxFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        alpha: Option<String>,
        /// Accepted for interface stability; pairwise orders are cheap
        /// enough that computation is sequential regardless.
        #[arg(long, default_value = "1")]
        jobs: usize,
    },
    /// Exact order of the super Weyl group.
    GroupOrder {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        alpha: Option<String>,
        /// Also run the brute-force closure and compare.
        #[arg(long)]
        check: bool,
    },
    /// Defining sequences of all fundamental systems.
    Defseq {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value = "text")]
        format: EnumFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check relations from a file against the permutation realization.
    Relations {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        file: PathBuf,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Gate the proposed exceptional graphs as hard checks.
        #[arg(long)]
        strict: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn parse_alpha(text: &str) -> superweyl::Result<Rational> {
    let bad = || superweyl::Error::BadAlpha(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let n: num_bigint::BigInt = num.trim().parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = den.trim().parse().map_err(|_| bad())?;
    if d == num_bigint::BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

fn catalog_for(algebra: &str, alpha: &Option<String>) -> superweyl::Result<AlgebraCatalog> {
    let mut spec = parse_spec(algebra)?;
    if let Some(a) = alpha {
        if spec.family != Family::D21Alpha {
            return Err(superweyl::Error::BadAlpha(format!(
                "--alpha only applies to D(2,1;a), not {spec}"
            )));
        }
        let a = parse_alpha(a)?;
        spec = superweyl::catalog::AlgebraSpec::d21(Some(a))?;
    }
    build_catalog(&spec)
}

fn emit(out: &Option<PathBuf>, text: &str) -> superweyl::Result<()> {
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            f.write_all(text.as_bytes())?;
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn rational_pair(q: &Rational) -> (i64, i64) {
    // Root coordinates are tiny; the conversion is exact.
    let num: i64 = q.numer().try_into().expect("coordinate numerator fits i64");
    let den: i64 = q.denom().try_into().expect("coordinate denominator fits i64");
    debug_assert!(den.is_positive());
    (num, den)
}

fn enumerate_json(cat: &AlgebraCatalog, borels: &BorelSet) -> serde_json::Value {
    let systems: Vec<_> = borels
        .systems()
        .iter()
        .enumerate()
        .map(|(id, fs)| {
            let roots: Vec<Vec<[i64; 2]>> = fs
                .roots()
                .iter()
                .map(|r| {
                    r.coords
                        .iter()
                        .map(|c| {
                            let (n, d) = rational_pair(c);
                            [n, d]
                        })
                        .collect()
                })
                .collect();
            let isotropic: Vec<bool> =
                fs.roots().iter().map(|r| cat.is_isotropic_root(r)).collect();
            json!({ "id": id, "roots": roots, "isotropic_simple": isotropic })
        })
        .collect();
    json!({
        "algebra": cat.spec.to_string(),
        "count": borels.len(),
        "systems": systems,
    })
}

fn run(cli: Cli) -> superweyl::Result<i32> {
    match cli.command {
        Command::Enumerate { algebra, format, out, alpha } => {
            let cat = catalog_for(&algebra, &alpha)?;
            let borels = enumerate_borels(&cat)?;
            match format {
                EnumFormat::Json => {
                    let v = enumerate_json(&cat, &borels);
                    emit(&out, &format!("{}\n", serde_json::to_string_pretty(&v).unwrap()))?;
                }
                EnumFormat::Text => {
                    let mut text = format!("algebra: {}\ncount: {}\n", cat.spec, borels.len());
                    for (id, fs) in borels.systems().iter().enumerate() {
                        let pretty: Vec<String> =
                            fs.roots().iter().map(|r| cat.pretty_root(r)).collect();
                        text.push_str(&format!("{id:4}: {{ {} }}\n", pretty.join(", ")));
                    }
                    emit(&out, &text)?;
                }
            }
            Ok(0)
        }
        Command::Coxeter { algebra, format, out, alpha, jobs: _ } => {
            let cat = catalog_for(&algebra, &alpha)?;
            let borels = enumerate_borels(&cat)?;
            let table = build_generator_table(&cat, &borels);
            let matrix = coxeter_matrix(&table);
            match format {
                CoxFormat::Dot => emit(&out, &emit_dot(&CoxeterGraph::from(&matrix)))?,
                CoxFormat::Text => {
                    emit(&out, &format!("algebra: {}\n{}", cat.spec, emit_text(&matrix)))?
                }
                CoxFormat::Json => {
                    emit(&out, &format!("{}\n", serde_json::to_string_pretty(&matrix).unwrap()))?
                }
            }
            Ok(0)
        }
        Command::GroupOrder { algebra, alpha, check } => {
            let cat = catalog_for(&algebra, &alpha)?;
            let borels = enumerate_borels(&cat)?;
            let table = build_generator_table(&cat, &borels);
            let result = group_order(&table.gens);
            println!("algebra: {}", cat.spec);
            println!("borel count: {}", borels.len());
            println!("group order: {}", result.order);
            println!("base: {:?}", result.base);
            println!("strong generators: {}", result.strong_generator_count);
            if check {
                if borels.len() > 256 {
                    eprintln!(
                        "error: --check (brute-force closure) is limited to 256 Borels, got {}",
                        borels.len()
                    );
                    return Ok(2);
                }
                let slow = brute_force_order(&table.gens);
                println!("closure order: {slow}");
                if slow != result.order {
                    eprintln!("error: stabilizer chain disagrees with closure");
                    return Ok(2);
                }
            }
            Ok(0)
        }
        Command::Defseq { algebra, format, out } => {
            let cat = catalog_for(&algebra, &None)?;
            let borels = enumerate_borels(&cat)?;
            match format {
                EnumFormat::Json => {
                    let items: Vec<_> = borels
                        .systems()
                        .iter()
                        .enumerate()
                        .map(|(id, fs)| {
                            let seq = encode(&cat, fs)?;
                            Ok(json!({ "id": id, "sequence": seq.to_strings(&cat) }))
                        })
                        .collect::<superweyl::Result<_>>()?;
                    emit(
                        &out,
                        &format!("{}\n", serde_json::to_string_pretty(&json!(items)).unwrap()),
                    )?;
                }
                EnumFormat::Text => {
                    let mut text = format!("algebra: {}\ncount: {}\n", cat.spec, borels.len());
                    for (id, fs) in borels.systems().iter().enumerate() {
                        let seq = encode(&cat, fs)?;
                        text.push_str(&format!(
                            "{id:4}: ({})\n",
                            seq.to_strings(&cat).join(", ")
                        ));
                    }
                    emit(&out, &text)?;
                }
            }
            Ok(0)
        }
        Command::Relations { algebra, file } => {
            let cat = catalog_for(&algebra, &None)?;
            let borels = enumerate_borels(&cat)?;
            let table = build_generator_table(&cat, &borels);
            let text = std::fs::read_to_string(&file)?;
            let relations = parse_relation_file(&text)?;
            let results = check_relations(&table, &relations)?;
            let mut all_ok = true;
            for ((word, exp), ok) in relations.iter().zip(&results) {
                let status = if *ok { "ok  " } else { "FAIL" };
                if !ok {
                    all_ok = false;
                }
                println!("{status} ({})^{exp}", word.join(" "));
            }
            Ok(if all_ok { 0 } else { 1 })
        }
        Command::Verify { suite, strict } => {
            let reports = run_suite(&suite, strict)?;
            let mut ok = true;
            for report in &reports {
                print!("{}", report.render());
                ok &= report.passed();
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

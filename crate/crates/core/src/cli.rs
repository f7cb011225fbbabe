//! The `liext` command-line driver.
//!
//! Every subcommand is a thin wrapper around one library operation, reading
//! the JSON formats of [`crate::io`] and reporting either human-readable
//! text or, with `--json`, a single canonical document.
//!
//! Exit codes follow one contract everywhere: `0` for success (including
//! positive decisions), `1` for a negative mathematical answer (not
//! equivalent, nonzero obstruction class, does not split), and `2` for
//! malformed input — unreadable files, schema violations, Jacobi failures,
//! invalid data — with the offending key or triple named on standard error.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::cohomology::{self, CochainComplexSlice};
use crate::ext::{
    self, build, central_class, decide_split_abelian, enumerate_extensions, equivalent,
    extract, obstruction, pullback, semidirect, verify_split, ExtError, Extension,
    OuterAction,
};
use crate::io::{self, DataFile};
use crate::lie::{LieAlgebra, LinearMap, Representation};
use crate::linalg::{vec_is_zero, Matrix, Rat};

#[derive(Parser)]
#[command(
    name = "liext",
    version,
    about = "Exact-arithmetic Lie algebra extensions over the rationals",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra file: Jacobi identity, dimension, center
    Check {
        algebra: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Summarize an algebra: center, derivations, inner and outer parts
    Invariants {
        algebra: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print a basis of the derivation algebra
    Derivations {
        algebra: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Cohomology dimension of a coefficient module in one degree
    Cohomology {
        /// Algebra file for the acting algebra
        #[arg(long)]
        g: PathBuf,
        /// Coefficient module: `trivialN` (N-dimensional, zero action) or `adjoint`
        #[arg(long)]
        coefficients: String,
        #[arg(long)]
        degree: usize,
        /// Also print a basis of representative cocycles
        #[arg(long)]
        representatives: bool,
        #[arg(long)]
        json: bool,
    },
    /// Assemble the extension algebra described by a data file
    Build {
        data: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Read data off an extension document relative to a section
    Extract {
        extension: PathBuf,
        /// Matrix file overriding the section stored in the document
        #[arg(long)]
        section: Option<PathBuf>,
    },
    /// Decide whether two data files describe equivalent extensions
    Equivalent {
        d1: PathBuf,
        d2: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build the semidirect product for a derivation-valued action
    Semidirect {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        /// Action file (`{"matrices": …}`) or the word `zero`
        #[arg(long)]
        action: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide splitness (abelian kernel) or verify a proposed splitting
    Split {
        data: PathBuf,
        /// Matrix file with a proposed `b: g → h`
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the degree-3 obstruction class of an outer action
    Obstruction {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        /// Outer-action file (`{"images": …}`) or the word `zero`
        #[arg(long)]
        outer: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the extensions inducing an outer action, as data files
    Classify {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        /// Outer-action file (`{"images": …}`) or the word `zero`
        #[arg(long)]
        outer: String,
        /// Directory the data files are written into
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Realize an outer action as the pullback extension over ad(h)
    Pullback {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        /// Outer-action file (`{"images": …}`) or the word `zero`
        #[arg(long)]
        outer: String,
        #[arg(long)]
        json: bool,
    },
    /// The canonical central class of a kernel algebra
    CentralClass {
        algebra: PathBuf,
        /// Algebra file for an acting algebra (with --outer: report invariance)
        #[arg(long, requires = "outer")]
        g: Option<PathBuf>,
        /// Outer-action file or `zero`; requires --g
        #[arg(long, requires = "g")]
        outer: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

/// Run the command line. Returns the process exit code instead of exiting,
/// so tests can drive it in-process.
pub fn run<I>(argv: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<i32, String> {
    match command {
        Command::Check { algebra, json } => cmd_check(&algebra, json),
        Command::Invariants { algebra, json } => cmd_invariants(&algebra, json),
        Command::Derivations { algebra, json } => cmd_derivations(&algebra, json),
        Command::Cohomology { g, coefficients, degree, representatives, json } => {
            cmd_cohomology(&g, &coefficients, degree, representatives, json)
        }
        Command::Build { data, json } => cmd_build(&data, json),
        Command::Extract { extension, section } => cmd_extract(&extension, section.as_deref()),
        Command::Equivalent { d1, d2, json } => cmd_equivalent(&d1, &d2, json),
        Command::Semidirect { g, h, action, json } => cmd_semidirect(&g, &h, &action, json),
        Command::Split { data, witness, json } => cmd_split(&data, witness.as_deref(), json),
        Command::Obstruction { g, h, outer, json } => cmd_obstruction(&g, &h, &outer, json),
        Command::Classify { g, h, outer, out_dir, json } => {
            cmd_classify(&g, &h, &outer, &out_dir, json)
        }
        Command::Pullback { g, h, outer, json } => cmd_pullback(&g, &h, &outer, json),
        Command::CentralClass { algebra, g, outer, json } => {
            cmd_central_class(&algebra, g.as_deref(), outer.as_deref(), json)
        }
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn emit(v: &Value) {
    print!("{}", io::canonical_json(v));
}

/// `c₁·l₁ + c₂·l₂` with unit coefficients elided, `0` when empty.
fn combination(coeffs: &[Rat], labels: &[String]) -> String {
    let mut terms = Vec::new();
    for (c, label) in coeffs.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let one: Rat = crate::linalg::rat(1);
        if *c == one {
            terms.push(label.clone());
        } else if *c == -one {
            terms.push(format!("-{label}"));
        } else {
            terms.push(format!("{c}*{label}"));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn matrix_lines(m: &Matrix, indent: &str) -> Vec<String> {
    (0..m.rows())
        .map(|r| {
            let entries: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
            format!("{indent}[{}]", entries.join(", "))
        })
        .collect()
}

fn print_bracket_table(algebra: &LieAlgebra) {
    for ((i, j), coeffs) in algebra.structure() {
        if vec_is_zero(coeffs) {
            continue;
        }
        println!(
            "  [{},{}] = {}",
            algebra.basis_labels()[*i],
            algebra.basis_labels()[*j],
            combination(coeffs, algebra.basis_labels())
        );
    }
}

fn print_extension(ext: &Extension, json: bool) {
    if json {
        emit(&io::extension_value(ext));
    } else {
        println!(
            "e = {} (dim {}), kernel {} (dim {}), quotient {} (dim {})",
            ext.e().name(),
            ext.e().dim(),
            ext.h().name(),
            ext.h().dim(),
            ext.g().name(),
            ext.g().dim()
        );
        print_bracket_table(ext.e());
    }
}

fn cmd_check(path: &Path, json: bool) -> Result<i32, String> {
    let algebra = io::read_algebra(path).map_err(fail)?;
    let center_dim = algebra.center().dim();
    if json {
        emit(&json!({ "jacobi": "ok", "dim": algebra.dim(), "center_dim": center_dim }));
    } else {
        println!("Jacobi: ok, dim {}, center dim {}", algebra.dim(), center_dim);
    }
    Ok(0)
}

fn cmd_invariants(path: &Path, json: bool) -> Result<i32, String> {
    let algebra = io::read_algebra(path).map_err(fail)?;
    let out = algebra.outer();
    let abelian = algebra.structure().is_empty();
    if json {
        emit(&json!({
            "name": algebra.name(),
            "dim": algebra.dim(),
            "abelian": abelian,
            "center_dim": algebra.center().dim(),
            "derivations_dim": out.der_dim(),
            "inner_dim": out.inner().dim(),
            "outer_dim": out.quotient_dim(),
        }));
    } else {
        println!("name: {}", algebra.name());
        println!("dim: {}", algebra.dim());
        println!("abelian: {}", if abelian { "yes" } else { "no" });
        println!("center dim: {}", algebra.center().dim());
        println!("derivations dim: {}", out.der_dim());
        println!("inner dim: {}", out.inner().dim());
        println!("outer dim: {}", out.quotient_dim());
    }
    Ok(0)
}

fn cmd_derivations(path: &Path, json: bool) -> Result<i32, String> {
    let algebra = io::read_algebra(path).map_err(fail)?;
    let out = algebra.outer();
    let matrices: Vec<Matrix> = out
        .der()
        .basis()
        .iter()
        .map(|f| Matrix::from_flat(algebra.dim(), algebra.dim(), f.clone()))
        .collect();
    if json {
        let basis: Vec<Value> = matrices.iter().map(io::matrix_value).collect();
        emit(&json!({ "dim": out.der_dim(), "basis": basis }));
    } else {
        println!("dim der({}) = {}", algebra.name(), out.der_dim());
        for (k, m) in matrices.iter().enumerate() {
            println!("derivation {}:", k + 1);
            for line in matrix_lines(m, "  ") {
                println!("{line}");
            }
        }
    }
    Ok(0)
}

fn parse_coefficients(g: &LieAlgebra, spec: &str) -> Result<Representation, String> {
    if spec == "adjoint" {
        return Ok(g.adjoint());
    }
    if let Some(n) = spec.strip_prefix("trivial") {
        if let Ok(n) = n.parse::<usize>() {
            return Ok(Representation::trivial(g.clone(), n));
        }
    }
    Err(format!("--coefficients must be `adjoint` or `trivialN`, got `{spec}`"))
}

fn cmd_cohomology(
    g_path: &Path,
    coefficients: &str,
    degree: usize,
    representatives: bool,
    json: bool,
) -> Result<i32, String> {
    let g = io::read_algebra(g_path).map_err(fail)?;
    let module = parse_coefficients(&g, coefficients)?;
    let dim = cohomology::cohomology_dim(&module, degree);
    let reps = if representatives {
        Some(CochainComplexSlice::new(&module, degree).representatives())
    } else {
        None
    };
    if json {
        let mut doc = Map::new();
        doc.insert("degree".into(), json!(degree));
        doc.insert("coefficients".into(), json!(coefficients));
        doc.insert("dim".into(), json!(dim));
        if let Some(reps) = &reps {
            let values: Vec<Value> = reps
                .iter()
                .map(|c| io::cochain_coords_value(c, g.basis_labels()))
                .collect();
            doc.insert("representatives".into(), Value::Array(values));
        }
        emit(&Value::Object(doc));
    } else {
        println!("dim H^{degree} = {dim}");
        if let Some(reps) = &reps {
            for (k, c) in reps.iter().enumerate() {
                println!("representative {}: {}", k + 1, c);
            }
        }
    }
    Ok(0)
}

fn read_valid_data(path: &Path) -> Result<DataFile, String> {
    let file = io::read_data(path).map_err(fail)?;
    file.data.require_valid().map_err(fail)?;
    Ok(file)
}

fn cmd_build(path: &Path, json: bool) -> Result<i32, String> {
    let file = read_valid_data(path)?;
    let ext = build(&file.data).map_err(fail)?;
    print_extension(&ext, json);
    Ok(0)
}

fn cmd_extract(path: &Path, section_path: Option<&Path>) -> Result<i32, String> {
    let ext = io::read_extension(path).map_err(fail)?;
    let section = match section_path {
        Some(p) => LinearMap::new(
            io::read_matrix(p, ext.e().dim(), ext.g().dim()).map_err(fail)?,
        ),
        None => ext
            .section()
            .cloned()
            .ok_or("the extension document has no section; pass --section")?,
    };
    let data = extract(&ext, &section).map_err(fail)?;
    emit(&io::data_value(&DataFile::inline(data)));
    Ok(0)
}

fn cmd_equivalent(p1: &Path, p2: &Path, json: bool) -> Result<i32, String> {
    let f1 = io::read_data(p1).map_err(fail)?;
    let f2 = io::read_data(p2).map_err(fail)?;
    match equivalent(&f1.data, &f2.data).map_err(fail)? {
        Some(witness) => {
            if json {
                emit(&json!({
                    "equivalent": true,
                    "witness": io::matrix_value(witness.b().matrix()),
                }));
            } else {
                println!("equivalent, witness b:");
                for line in matrix_lines(witness.b().matrix(), "  ") {
                    println!("{line}");
                }
            }
            Ok(0)
        }
        None => {
            let reason = match ext::inner_adjustment(&f1.data, &f2.data) {
                None => "the action difference is not inner",
                Some(_) => "class difference nonzero in H^2",
            };
            if json {
                emit(&json!({ "equivalent": false, "reason": reason }));
            } else {
                println!("not equivalent: {reason}");
            }
            Ok(1)
        }
    }
}

fn cmd_semidirect(
    g_path: &Path,
    h_path: &Path,
    action: &str,
    json: bool,
) -> Result<i32, String> {
    let g = io::read_algebra(g_path).map_err(fail)?;
    let h = io::read_algebra(h_path).map_err(fail)?;
    let matrices = if action == "zero" {
        vec![Matrix::zeros(h.dim(), h.dim()); g.dim()]
    } else {
        io::read_action(Path::new(action), g.dim(), h.dim()).map_err(fail)?
    };
    let ext = semidirect(&g, &h, matrices).map_err(fail)?;
    print_extension(&ext, json);
    Ok(0)
}

fn cmd_split(path: &Path, witness: Option<&Path>, json: bool) -> Result<i32, String> {
    let file = read_valid_data(path)?;
    let d = &file.data;
    match witness {
        Some(p) => {
            let b = LinearMap::new(
                io::read_matrix(p, d.h().dim(), d.g().dim()).map_err(fail)?,
            );
            if verify_split(d, &b).map_err(fail)? {
                if json {
                    emit(&json!({ "splits": true, "verified": true }));
                } else {
                    println!("splits: the witness is verified");
                }
                Ok(0)
            } else {
                if json {
                    emit(&json!({ "splits": false, "verified": false }));
                } else {
                    println!("the proposed witness does not split the datum");
                }
                Ok(1)
            }
        }
        None => match decide_split_abelian(d) {
            Ok(Some(b)) => {
                if json {
                    emit(&json!({ "splits": true, "witness": io::matrix_value(b.matrix()) }));
                } else {
                    println!("splits, witness b:");
                    for line in matrix_lines(b.matrix(), "  ") {
                        println!("{line}");
                    }
                }
                Ok(0)
            }
            Ok(None) => {
                if json {
                    emit(&json!({ "splits": false }));
                } else {
                    println!("does not split: correction class nonzero in H^2");
                }
                Ok(1)
            }
            Err(ExtError::SplitUndecidable) => Err(
                "the kernel is nonabelian: pass --witness to verify a proposed splitting"
                    .into(),
            ),
            Err(e) => Err(fail(e)),
        },
    }
}

fn load_outer_action(
    g_path: &Path,
    h_path: &Path,
    outer: &str,
) -> Result<OuterAction, String> {
    let g = io::read_algebra(g_path).map_err(fail)?;
    let h = io::read_algebra(h_path).map_err(fail)?;
    let out = h.outer();
    if outer == "zero" {
        Ok(OuterAction::zero(g, out))
    } else {
        let images = io::read_outer_images(Path::new(outer)).map_err(fail)?;
        OuterAction::new(g, out, images).map_err(fail)
    }
}

fn cmd_obstruction(
    g_path: &Path,
    h_path: &Path,
    outer: &str,
    json: bool,
) -> Result<i32, String> {
    let action = load_outer_action(g_path, h_path, outer)?;
    let ob = obstruction(&action, None, None).map_err(fail)?;
    let g_labels = action.g().basis_labels().to_vec();
    if json {
        emit(&json!({
            "vanishes": ob.vanishes,
            "center_dim": ob.center.dim(),
            "lambda": io::cochain_coords_value(&ob.lambda, &g_labels),
        }));
    } else if ob.vanishes {
        println!("obstruction class vanishes in H^3");
    } else {
        println!("obstruction: nonzero class in H^3");
        println!("lambda (center coordinates): {}", ob.lambda);
    }
    Ok(if ob.vanishes { 0 } else { 1 })
}

fn cmd_classify(
    g_path: &Path,
    h_path: &Path,
    outer: &str,
    out_dir: &Path,
    json: bool,
) -> Result<i32, String> {
    let action = load_outer_action(g_path, h_path, outer)?;
    let list = match enumerate_extensions(&action) {
        Ok(list) => list,
        Err(ExtError::ObstructionNonzero(rep)) => {
            if json {
                emit(&json!({ "count": 0, "obstruction": rep }));
            } else {
                println!("no extensions: obstruction class nonzero in H^3 ({rep})");
            }
            return Ok(1);
        }
        Err(e) => return Err(fail(e)),
    };
    std::fs::create_dir_all(out_dir)
        .map_err(|e| format!("cannot create `{}`: {e}", out_dir.display()))?;
    let mut entries = Vec::new();
    for (k, data) in list.into_iter().enumerate() {
        let label = if k == 0 { "base".to_string() } else { format!("base+mu{k}") };
        let file_path = out_dir.join(format!("{label}.data"));
        std::fs::write(&file_path, io::write_data(&DataFile::inline(data)))
            .map_err(|e| format!("cannot write `{}`: {e}", file_path.display()))?;
        entries.push((label, file_path));
    }
    if json {
        let items: Vec<Value> = entries
            .iter()
            .map(|(label, path)| {
                json!({ "label": label, "file": path.display().to_string() })
            })
            .collect();
        emit(&json!({ "count": entries.len(), "entries": items }));
    } else {
        println!("{} extensions induce the outer action", entries.len());
        for (label, path) in &entries {
            println!("wrote {} ({label})", path.display());
        }
    }
    Ok(0)
}

fn cmd_pullback(
    g_path: &Path,
    h_path: &Path,
    outer: &str,
    json: bool,
) -> Result<i32, String> {
    let action = load_outer_action(g_path, h_path, outer)?;
    let ext = pullback(&action).map_err(fail)?;
    print_extension(&ext, json);
    Ok(0)
}

fn cmd_central_class(
    path: &Path,
    g_path: Option<&Path>,
    outer: Option<&str>,
    json: bool,
) -> Result<i32, String> {
    let h = io::read_algebra(path).map_err(fail)?;
    let action = match (g_path, outer) {
        (Some(g), Some(outer)) => Some(load_outer_action(g, path, outer)?),
        _ => None,
    };
    let cc = central_class(&h, action.as_ref()).map_err(fail)?;
    let class_zero = cc.class.is_zero().map_err(fail)?;
    if json {
        let mut doc = Map::new();
        doc.insert("center_dim".into(), json!(h.center().dim()));
        doc.insert("quotient_dim".into(), json!(cc.quotient.dim()));
        doc.insert(
            "nu".into(),
            io::cochain_coords_value(&cc.nu, cc.quotient.basis_labels()),
        );
        doc.insert("class_zero".into(), json!(class_zero));
        if let Some(report) = &cc.invariance {
            doc.insert("invariant".into(), json!(report.invariant));
            doc.insert("convention".into(), json!(report.convention));
        }
        emit(&Value::Object(doc));
    } else {
        println!("center dim: {}", h.center().dim());
        println!("quotient dim: {}", cc.quotient.dim());
        println!("nu: {}", cc.nu);
        println!("class: {}", if class_zero { "zero" } else { "nonzero" });
        if let Some(report) = &cc.invariance {
            println!(
                "invariant under the outer action: {}",
                if report.invariant { "yes" } else { "no" }
            );
            println!("convention: {}", report.convention);
        }
    }
    Ok(0)
}

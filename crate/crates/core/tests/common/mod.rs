//! Helpers shared by the integration suites: the repository-root locator,
//! the executable-documentation harness for `docs/cli.md`, byte-stability
//! checks for the fixture corpus, and seeded random generators for
//! matrices, cochains, and valid extension data.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;
use serde_json::Value;

use liext::cochain::{increasing_tuples, SkewCochain};
use liext::cohomology::CochainComplexSlice;
use liext::ext::ExtensionData;
use liext::io;
use liext::lie::Representation;
use liext::linalg::{rat, Matrix, Rat};
use liext::samples;

pub fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .canonicalize()
        .expect("the repository root exists")
}

pub fn read(root: &Path, rel: &str) -> String {
    std::fs::read_to_string(root.join(rel))
        .unwrap_or_else(|e| panic!("cannot read `{rel}`: {e}"))
}

pub struct Example {
    pub line: usize,
    pub args: Vec<String>,
    pub expect: Vec<String>,
    pub exit: i32,
}

/// Every `$ liext` example in the document, with its expected lines and
/// exit code. Panics on a malformed example so the doc cannot silently
/// drift out of the harness.
pub fn console_examples(doc: &str) -> Vec<Example> {
    let mut examples = Vec::new();
    let mut in_console = false;
    let mut current: Option<Example> = None;
    for (idx, line) in doc.lines().enumerate() {
        if !in_console {
            in_console = line.trim() == "```console";
            continue;
        }
        if line.trim() == "```" {
            assert!(current.is_none(), "docs/cli.md line {}: example has no [exit N] line", idx);
            in_console = false;
        } else if let Some(rest) = line.strip_prefix("$ liext ") {
            assert!(current.is_none(), "docs/cli.md line {}: example has no [exit N] line", idx);
            current = Some(Example {
                line: idx + 1,
                args: rest.split_whitespace().map(str::to_string).collect(),
                expect: Vec::new(),
                exit: 0,
            });
        } else if let Some(code) = line.strip_prefix("[exit ").and_then(|s| s.strip_suffix(']')) {
            let mut example = current.take().expect("[exit] follows a command");
            example.exit = code.parse().expect("exit codes are integers");
            examples.push(example);
        } else if !line.trim().is_empty() {
            if let Some(example) = current.as_mut() {
                example.expect.push(line.to_string());
            }
        }
    }
    examples
}

/// Runs the binary on one argument list from the repository root and
/// returns (exit code, stdout, stderr).
pub fn run_liext_raw(root: &Path, args: &[String]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_liext"))
        .args(args)
        .current_dir(root)
        .output()
        .expect("the binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

/// Runs the binary and returns (exit code, combined stdout+stderr).
pub fn run_liext(root: &Path, args: &[String]) -> (i32, String) {
    let (code, stdout, stderr) = run_liext_raw(root, args);
    (code, format!("{stdout}{stderr}"))
}

/// Executes every parsed example and asserts its exit code and output lines.
pub fn run_examples(root: &Path, examples: &[Example]) {
    for example in examples {
        let command = format!("liext {}", example.args.join(" "));
        let (code, combined) = run_liext(root, &example.args);
        assert_eq!(
            code, example.exit,
            "docs/cli.md line {}: `{command}` exited {code}, documented {}\n{combined}",
            example.line, example.exit
        );
        for want in &example.expect {
            assert!(
                combined.contains(want),
                "docs/cli.md line {}: output of `{command}` lacks {want:?}\n{combined}",
                example.line
            );
        }
    }
}

pub fn algebra_fixtures_byte_stable(root: &Path) {
    for name in ["a1", "a2", "a3", "heis3", "sl2", "solv2", "solv3"] {
        let rel = format!("fixtures/{name}.alg");
        let text = read(root, &rel);
        let algebra = io::parse_algebra(&text).unwrap_or_else(|e| panic!("`{rel}`: {e}"));
        assert_eq!(io::write_algebra(&algebra), text, "`{rel}` is not canonical");
    }
}

pub fn data_fixtures_byte_stable(root: &Path) {
    for name in ["d_zero", "d_heis"] {
        let rel = format!("fixtures/{name}.data");
        let text = read(root, &rel);
        let file = io::parse_data(&text, &root.join("fixtures"))
            .unwrap_or_else(|e| panic!("`{rel}`: {e}"));
        assert_eq!(io::write_data(&file), text, "`{rel}` is not canonical");
    }
}

pub fn matrix_action_outer_fixtures_byte_stable(root: &Path) {
    let text = read(root, "fixtures/b_zero.json");
    let matrix = io::parse_matrix(&text, 1, 2).expect("b_zero parses");
    assert_eq!(io::write_matrix(&matrix), text);

    let text = read(root, "fixtures/action_heis_diag.json");
    let matrices = io::parse_action(&text, 1, 3).expect("the action file parses");
    let mut doc = serde_json::Map::new();
    doc.insert(
        "matrices".into(),
        Value::Array(matrices.iter().map(io::matrix_value).collect()),
    );
    assert_eq!(io::canonical_json(&Value::Object(doc)), text);

    let text = read(root, "fixtures/outer_solv3.json");
    let images = io::parse_outer_images(&text).expect("the outer file parses");
    let rows: Vec<Value> = images
        .iter()
        .map(|row| {
            Value::Array(row.iter().map(|x| Value::String(io::rational_string(x))).collect())
        })
        .collect();
    let mut doc = serde_json::Map::new();
    doc.insert("images".into(), Value::Array(rows));
    assert_eq!(io::canonical_json(&Value::Object(doc)), text);
}

pub fn extension_fixture_byte_stable(root: &Path) {
    let text = read(root, "fixtures/ext_heis.json");
    let ext = io::parse_extension(&text).expect("the extension document parses");
    assert_eq!(io::write_extension(&ext), text);
}

pub fn rint(rng: &mut ChaCha8Rng, bound: u64) -> i64 {
    (rng.next_u64() % (2 * bound + 1)) as i64 - bound as i64
}

pub fn rvec(rng: &mut ChaCha8Rng, n: usize, bound: u64) -> Vec<Rat> {
    (0..n).map(|_| rat(rint(rng, bound))).collect()
}

pub fn rmat(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: u64) -> Matrix {
    Matrix::from_flat(rows, cols, rvec(rng, rows * cols, bound))
}

pub fn rcochain(
    rng: &mut ChaCha8Rng,
    degree: usize,
    source: usize,
    target: usize,
) -> SkewCochain {
    let mut c = SkewCochain::zero(degree, source, target);
    for tuple in increasing_tuples(source, degree) {
        c.set(&tuple, rvec(rng, target, 4));
    }
    c
}

pub fn lincomb(dim: usize, basis: &[Vec<Rat>], coeffs: &[Rat]) -> Vec<Rat> {
    let mut out = vec![rat(0); dim];
    for (v, c) in basis.iter().zip(coeffs) {
        for (slot, entry) in out.iter_mut().zip(v) {
            *slot = &*slot + &(entry * c);
        }
    }
    out
}

/// Any pair of 1×1 action matrices and any correction over `(a2, a1)` is a
/// valid datum: scalars commute, the kernel is abelian, and there is no
/// degree-3 slot left to obstruct.
pub fn random_abelian_pair_data(rng: &mut ChaCha8Rng) -> ExtensionData {
    let alpha = vec![rmat(rng, 1, 1, 4), rmat(rng, 1, 1, 4)];
    let mut rho = SkewCochain::zero(2, 2, 1);
    rho.set(&[0, 1], rvec(rng, 1, 4));
    ExtensionData::new(samples::abelian(2), samples::abelian(1), alpha, rho).unwrap()
}

/// One basis direction acting on the Heisenberg algebra by an arbitrary
/// derivation; over a 1-dimensional quotient there is no room for ρ.
pub fn random_heisenberg_kernel_data(rng: &mut ChaCha8Rng) -> ExtensionData {
    let h = samples::heisenberg3();
    let ders = h.derivations();
    let coeffs = rvec(rng, ders.dim(), 3);
    let action = Matrix::from_flat(3, 3, lincomb(9, ders.basis(), &coeffs));
    ExtensionData::new(samples::abelian(1), h, vec![action], SkewCochain::zero(2, 1, 3))
        .unwrap()
}

/// A conjugate of the defining representation of `sl2` on ℚ², with ρ drawn
/// from the closed 2-cochains of that module.
pub fn random_sl2_module_data(rng: &mut ChaCha8Rng) -> ExtensionData {
    let g = samples::sl2();
    let standard = Representation::new(
        g.clone(),
        2,
        vec![
            Matrix::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]]),
            Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(0), rat(0)]]),
            Matrix::from_rows(vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]),
        ],
    )
    .expect("the defining representation is a representation");
    let p = loop {
        let candidate = rmat(rng, 2, 2, 3);
        if candidate.rank() == 2 {
            break candidate;
        }
    };
    let module = standard.conjugate(&p).expect("p is invertible");
    let cocycles = CochainComplexSlice::new(&module, 2).cocycles();
    let coeffs = rvec(rng, cocycles.dim(), 3);
    let rho = SkewCochain::from_flat(
        2,
        3,
        2,
        lincomb(cocycles.ambient_dim(), cocycles.basis(), &coeffs),
    );
    ExtensionData::new(g, samples::abelian(2), module.action().to_vec(), rho).unwrap()
}

/// A seeded generator of valid extension data.
pub type Recipe = fn(&mut ChaCha8Rng) -> ExtensionData;

pub const RECIPES: [(&str, Recipe); 3] = [
    ("abelian pair", random_abelian_pair_data),
    ("heisenberg kernel", random_heisenberg_kernel_data),
    ("sl2 module", random_sl2_module_data),
];

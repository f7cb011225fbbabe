//! The C interface driven from Rust: every handle type, the status paths,
//! and byte-stability of the documents that cross the boundary.

use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::ptr;

use liext::ext::{transform, verify_split, ExtensionData};
use liext::io::{parse_matrix, read_data, write_data, DataFile};
use liext::lie::LinearMap;
use liext::linalg::{rat, Matrix};
use liext::samples;
use liext_ffi::*;

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .canonicalize()
        .expect("the fixture corpus exists")
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixtures_dir().join(name))
        .unwrap_or_else(|e| panic!("cannot read fixture `{name}`: {e}"))
}

/// A data fixture with its algebra references resolved and inlined, in the
/// form the memory-only C interface accepts.
fn inline_data_fixture(name: &str) -> String {
    let file = read_data(&fixtures_dir().join(name)).expect("the fixture parses");
    write_data(&DataFile::inline(file.data))
}

fn inline_data_document(data: ExtensionData) -> String {
    write_data(&DataFile::inline(data))
}

fn cstring(text: &str) -> CString {
    CString::new(text).expect("test inputs contain no NUL bytes")
}

fn last_error() -> String {
    let pointer = liext_last_error();
    assert!(!pointer.is_null(), "a failing call leaves a message");
    unsafe { CStr::from_ptr(pointer) }
        .to_str()
        .expect("error messages are UTF-8")
        .to_string()
}

/// Copy a returned string to the Rust side and free the C allocation.
fn take_string(pointer: *mut c_char) -> String {
    assert!(!pointer.is_null(), "a successful call writes the string slot");
    let text = unsafe { CStr::from_ptr(pointer) }
        .to_str()
        .expect("returned documents are UTF-8")
        .to_string();
    unsafe { liext_string_free(pointer) };
    text
}

fn algebra_handle(text: &str) -> *mut liext_algebra {
    let json = cstring(text);
    let mut out = ptr::null_mut();
    let status = unsafe { liext_algebra_parse(json.as_ptr(), &mut out) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
    out
}

fn data_handle(text: &str) -> *mut liext_data {
    let json = cstring(text);
    let mut out = ptr::null_mut();
    let status = unsafe { liext_data_parse(json.as_ptr(), &mut out) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
    out
}

#[test]
fn algebra_handles_roundtrip_canonical_documents() {
    let text = fixture("heis3.alg");
    let algebra = algebra_handle(&text);

    let mut dim = 0usize;
    assert_eq!(unsafe { liext_algebra_dim(algebra, &mut dim) }, liext_status::LIEXT_OK);
    assert_eq!(dim, 3);

    let mut center = 0usize;
    assert_eq!(
        unsafe { liext_algebra_center_dim(algebra, &mut center) },
        liext_status::LIEXT_OK
    );
    assert_eq!(center, 1);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { liext_algebra_to_json(algebra, &mut out) }, liext_status::LIEXT_OK);
    assert_eq!(take_string(out), text, "the reprint is byte-identical to the fixture");

    unsafe { liext_algebra_free(algebra) };

    let sl2 = algebra_handle(&fixture("sl2.alg"));
    let mut center = usize::MAX;
    assert_eq!(unsafe { liext_algebra_center_dim(sl2, &mut center) }, liext_status::LIEXT_OK);
    assert_eq!(center, 0);
    unsafe { liext_algebra_free(sl2) };
}

#[test]
fn failing_calls_report_status_and_message() {
    let mut algebra_out: *mut liext_algebra = ptr::null_mut();

    let status = unsafe { liext_algebra_parse(ptr::null(), &mut algebra_out) };
    assert_eq!(status, liext_status::LIEXT_NULL_ARGUMENT);
    assert!(last_error().contains("null pointer"), "got: {}", last_error());

    let not_utf8 = CString::new(vec![0xff]).unwrap();
    let status = unsafe { liext_algebra_parse(not_utf8.as_ptr(), &mut algebra_out) };
    assert_eq!(status, liext_status::LIEXT_INVALID_UTF8);
    assert!(last_error().contains("UTF-8"), "got: {}", last_error());

    let not_json = cstring("not json");
    let status = unsafe { liext_algebra_parse(not_json.as_ptr(), &mut algebra_out) };
    assert_eq!(status, liext_status::LIEXT_PARSE_ERROR);

    let broken = cstring(&fixture("bad.alg"));
    let status = unsafe { liext_algebra_parse(broken.as_ptr(), &mut algebra_out) };
    assert_eq!(status, liext_status::LIEXT_PARSE_ERROR);
    assert!(
        last_error().contains("Jacobi identity fails in `bad`"),
        "got: {}",
        last_error()
    );

    let good = cstring(&fixture("heis3.alg"));
    let status = unsafe { liext_algebra_parse(good.as_ptr(), ptr::null_mut()) };
    assert_eq!(status, liext_status::LIEXT_NULL_ARGUMENT);

    let mut dim = 0usize;
    let status = unsafe { liext_algebra_dim(ptr::null(), &mut dim) };
    assert_eq!(status, liext_status::LIEXT_NULL_ARGUMENT);

    // Data documents that point at algebra files belong to the command
    // line, which has a directory to resolve them against.
    let with_paths = cstring(&fixture("d_heis.data"));
    let mut data_out: *mut liext_data = ptr::null_mut();
    let status = unsafe { liext_data_parse(with_paths.as_ptr(), &mut data_out) };
    assert_eq!(status, liext_status::LIEXT_UNSUPPORTED);
    assert!(last_error().contains("file path"), "got: {}", last_error());

    let wrong_schema = cstring(&inline_data_fixture("d_heis.data"));
    let mut extension_out: *mut liext_extension = ptr::null_mut();
    let status = unsafe { liext_extension_parse(wrong_schema.as_ptr(), &mut extension_out) };
    assert_eq!(status, liext_status::LIEXT_PARSE_ERROR);
}

#[test]
fn data_builds_extracts_and_survives_the_wire() {
    let document = inline_data_fixture("d_heis.data");
    let data = data_handle(&document);

    assert_eq!(unsafe { liext_data_check(data) }, liext_status::LIEXT_OK);

    let (mut ng, mut nh) = (0usize, 0usize);
    assert_eq!(unsafe { liext_data_dims(data, &mut ng, &mut nh) }, liext_status::LIEXT_OK);
    assert_eq!((ng, nh), (2, 1));

    let mut extension = ptr::null_mut();
    let status = unsafe { liext_build(data, &mut extension) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());

    let mut dim = 0usize;
    assert_eq!(unsafe { liext_extension_dim(extension, &mut dim) }, liext_status::LIEXT_OK);
    assert_eq!(dim, 3);

    // The document of the built extension parses back into a handle.
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { liext_extension_to_json(extension, &mut out) },
        liext_status::LIEXT_OK
    );
    let extension_document = take_string(out);
    let reparsed_json = cstring(&extension_document);
    let mut reparsed = ptr::null_mut();
    let status = unsafe { liext_extension_parse(reparsed_json.as_ptr(), &mut reparsed) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());

    // Extraction relative to the stored section recovers the datum that
    // built the extension, down to the bytes of its document.
    let mut recovered = ptr::null_mut();
    let status = unsafe { liext_extension_extract(reparsed, &mut recovered) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { liext_data_to_json(recovered, &mut out) }, liext_status::LIEXT_OK);
    assert_eq!(take_string(out), document);

    unsafe {
        liext_data_free(recovered);
        liext_extension_free(reparsed);
        liext_extension_free(extension);
        liext_data_free(data);
    }
}

#[test]
fn extension_documents_roundtrip_byte_for_byte() {
    let text = fixture("ext_heis.json");
    let json = cstring(&text);
    let mut extension = ptr::null_mut();
    let status = unsafe { liext_extension_parse(json.as_ptr(), &mut extension) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());

    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { liext_extension_to_json(extension, &mut out) },
        liext_status::LIEXT_OK
    );
    assert_eq!(take_string(out), text);

    unsafe { liext_extension_free(extension) };
}

#[test]
fn equivalence_answers_come_with_checkable_witnesses() {
    let heis = data_handle(&inline_data_fixture("d_heis.data"));
    let zero = data_handle(&inline_data_fixture("d_zero.data"));
    let heis_datum = read_data(&fixtures_dir().join("d_heis.data")).unwrap().data;

    // A datum is equivalent to itself, and the witness transforms it to
    // itself — checked through the library, not trusted.
    let mut answer = false;
    let mut witness: *mut c_char = ptr::null_mut();
    let status = unsafe { liext_equivalent(heis, heis, &mut answer, &mut witness) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
    assert!(answer);
    let b = parse_matrix(&take_string(witness), 1, 2).expect("the witness is a matrix document");
    let moved = transform(&heis_datum, &LinearMap::new(b)).unwrap();
    assert_eq!(moved, heis_datum);

    // The Heisenberg datum is not equivalent to the zero datum; the witness
    // slot comes back null.
    let mut witness: *mut c_char = ptr::null_mut();
    let status = unsafe { liext_equivalent(zero, heis, &mut answer, &mut witness) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
    assert!(!answer);
    assert!(witness.is_null());

    // The witness slot is optional.
    let status = unsafe { liext_equivalent(heis, heis, &mut answer, ptr::null_mut()) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
    assert!(answer);

    // Data over different algebra pairs cannot be compared.
    let other = data_handle(&inline_data_document(ExtensionData::direct_sum(
        samples::abelian(1),
        samples::heisenberg3(),
    )));
    let status = unsafe { liext_equivalent(heis, other, &mut answer, ptr::null_mut()) };
    assert_eq!(status, liext_status::LIEXT_INVALID_INPUT);
    assert!(last_error().contains("different algebras"), "got: {}", last_error());

    unsafe {
        liext_data_free(other);
        liext_data_free(zero);
        liext_data_free(heis);
    }
}

#[test]
fn splitness_is_decided_over_abelian_kernels_only() {
    let zero = data_handle(&inline_data_fixture("d_zero.data"));
    let zero_datum = read_data(&fixtures_dir().join("d_zero.data")).unwrap().data;
    let heis = data_handle(&inline_data_fixture("d_heis.data"));

    let mut splits = false;
    let mut witness: *mut c_char = ptr::null_mut();
    let status = unsafe { liext_split_abelian(zero, &mut splits, &mut witness) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
    assert!(splits);
    let b = parse_matrix(&take_string(witness), 1, 2).expect("the witness is a matrix document");
    assert!(verify_split(&zero_datum, &LinearMap::new(b)).unwrap());

    let mut witness: *mut c_char = ptr::null_mut();
    let status = unsafe { liext_split_abelian(heis, &mut splits, &mut witness) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
    assert!(!splits);
    assert!(witness.is_null());

    let nonabelian = data_handle(&inline_data_document(ExtensionData::direct_sum(
        samples::abelian(1),
        samples::heisenberg3(),
    )));
    let status = unsafe { liext_split_abelian(nonabelian, &mut splits, ptr::null_mut()) };
    assert_eq!(status, liext_status::LIEXT_UNSUPPORTED);
    assert!(last_error().contains("nonabelian kernel"), "got: {}", last_error());

    unsafe {
        liext_data_free(nonabelian);
        liext_data_free(heis);
        liext_data_free(zero);
    }
}

#[test]
fn invalid_data_is_parseable_but_fails_check_and_build() {
    // diag(1, 0, 0) is not a derivation of heis3: it kills e3 but not
    // [e1, e2].
    let not_a_derivation = Matrix::from_flat(
        3,
        3,
        vec![
            rat(1), rat(0), rat(0),
            rat(0), rat(0), rat(0),
            rat(0), rat(0), rat(0),
        ],
    );
    let datum = ExtensionData::new(
        samples::abelian(1),
        samples::heisenberg3(),
        vec![not_a_derivation],
        liext::cochain::SkewCochain::zero(2, 1, 3),
    )
    .expect("the shapes are right");

    let data = data_handle(&inline_data_document(datum));
    let status = unsafe { liext_data_check(data) };
    assert_eq!(status, liext_status::LIEXT_INVALID_INPUT);
    assert!(
        last_error().contains("alpha[0] is not a derivation"),
        "got: {}",
        last_error()
    );

    let mut extension = ptr::null_mut();
    let status = unsafe { liext_build(data, &mut extension) };
    assert_eq!(status, liext_status::LIEXT_INVALID_INPUT);
    assert!(extension.is_null(), "a failing build leaves the out slot alone");

    unsafe { liext_data_free(data) };
}

#[test]
fn cohomology_dimensions_match_the_library() {
    // sl2 with one-dimensional trivial coefficients: 1, 0, 0, 1.
    let sl2 = algebra_handle(&fixture("sl2.alg"));
    let mut dims = Vec::new();
    for degree in 0..=3 {
        let mut dim = usize::MAX;
        let status = unsafe { liext_cohomology_trivial_dim(sl2, 1, degree, &mut dim) };
        assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
        dims.push(dim);
    }
    assert_eq!(dims, vec![1, 0, 0, 1]);

    // With trivial coefficients over an abelian algebra every differential
    // vanishes, so the dimensions are binomial: C(2, n).
    let a2 = algebra_handle(&fixture("a2.alg"));
    let mut dims = Vec::new();
    for degree in 0..=3 {
        let mut dim = usize::MAX;
        let status = unsafe { liext_cohomology_trivial_dim(a2, 1, degree, &mut dim) };
        assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
        dims.push(dim);
    }
    assert_eq!(dims, vec![1, 2, 1, 0]);

    // Degree-0 adjoint cohomology is the center.
    let heis3 = algebra_handle(&fixture("heis3.alg"));
    let mut dim = usize::MAX;
    let status = unsafe { liext_cohomology_adjoint_dim(heis3, 0, &mut dim) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
    assert_eq!(dim, 1);

    let mut dim = usize::MAX;
    let status = unsafe { liext_cohomology_adjoint_dim(sl2, 0, &mut dim) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
    assert_eq!(dim, 0);

    unsafe {
        liext_algebra_free(heis3);
        liext_algebra_free(a2);
        liext_algebra_free(sl2);
    }
}

#[test]
fn obstruction_vanishing_is_decided_through_the_wire() {
    let a1 = algebra_handle(&fixture("a1.alg"));
    let a2 = algebra_handle(&fixture("a2.alg"));
    let heis3 = algebra_handle(&fixture("heis3.alg"));
    let solv3 = algebra_handle(&fixture("solv3.alg"));

    // The zero action of any base on heis3 comes from an extension.
    let mut vanishes = false;
    let status = unsafe { liext_obstruction_vanishes(a1, heis3, ptr::null(), &mut vanishes) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
    assert!(vanishes);

    let status = unsafe { liext_obstruction_vanishes(solv3, heis3, ptr::null(), &mut vanishes) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
    assert!(vanishes);

    // A centerless kernel obstructs nothing: the class lives in the center.
    let images = cstring(&fixture("outer_solv3.json"));
    let status = unsafe { liext_obstruction_vanishes(a1, solv3, images.as_ptr(), &mut vanishes) };
    assert_eq!(status, liext_status::LIEXT_OK, "{}", last_error());
    assert!(vanishes);

    // One image for a two-dimensional base is a count mismatch.
    let status = unsafe { liext_obstruction_vanishes(a2, solv3, images.as_ptr(), &mut vanishes) };
    assert_eq!(status, liext_status::LIEXT_INVALID_INPUT);
    assert!(last_error().contains("expected 2"), "got: {}", last_error());

    // An outer-images document without its one key does not parse.
    let malformed = cstring("[]");
    let status = unsafe { liext_obstruction_vanishes(a1, solv3, malformed.as_ptr(), &mut vanishes) };
    assert_eq!(status, liext_status::LIEXT_PARSE_ERROR);

    unsafe {
        liext_algebra_free(solv3);
        liext_algebra_free(heis3);
        liext_algebra_free(a2);
        liext_algebra_free(a1);
    }
}

#[test]
fn freeing_null_handles_is_a_no_op() {
    unsafe {
        liext_algebra_free(ptr::null_mut());
        liext_data_free(ptr::null_mut());
        liext_extension_free(ptr::null_mut());
        liext_string_free(ptr::null_mut());
    }
}

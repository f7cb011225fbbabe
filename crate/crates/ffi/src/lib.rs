//! C ABI over the extension library: opaque handles, integer status codes,
//! and the same JSON documents the command line reads and writes.
//!
//! Every fallible function returns a [`liext_status`]. `LIEXT_OK` means the
//! out parameters were written; any other value means they were left alone
//! and [`liext_last_error`] holds a message for the calling thread.
//! Mathematical no-answers — not equivalent, does not split, obstruction
//! does not vanish — are reported through `bool` out parameters, not status
//! codes: a "no" is a successful computation.
//!
//! Handles and strings handed out through out parameters are owned by the
//! caller and are returned through the matching `_free` function
//! ([`liext_string_free`] for strings). All documents use the formats of the
//! command-line tool, so files written by one are readable by the other.
//!
//! # Safety
//!
//! One contract covers every function here, so it is stated once instead of
//! on each signature: string arguments must be NUL-terminated and readable;
//! handle arguments must be live pointers previously returned by this
//! library and not yet freed; out parameters must be writable; and each
//! `_free` function must be called at most once per value, though always
//! with null as a no-op. Within that contract the library never reads or
//! writes memory it was not given, and panics are caught at the boundary
//! rather than unwound across it.

#![allow(non_camel_case_types)]
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use liext::cohomology::cohomology_dim;
use liext::ext::{
    build, decide_split_abelian, equivalent, extract, obstruction, ExtError, Extension,
    ExtensionData, OuterAction,
};
use liext::io::{
    parse_algebra, parse_data, parse_extension, parse_outer_images, write_algebra, write_data,
    write_extension, write_matrix, DataFile, IoError,
};
use liext::lie::{LieAlgebra, Representation};

/// Outcome of a call. Zero is success; everything else is a failure whose
/// message is available from `liext_last_error`.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum liext_status {
    /// The call succeeded and every out parameter was written.
    LIEXT_OK = 0,
    /// A required pointer argument was null.
    LIEXT_NULL_ARGUMENT = 1,
    /// A string argument was not valid UTF-8.
    LIEXT_INVALID_UTF8 = 2,
    /// A document failed to parse or violated its schema.
    LIEXT_PARSE_ERROR = 3,
    /// The inputs parsed but do not satisfy the laws the operation needs.
    LIEXT_INVALID_INPUT = 4,
    /// The operation is not defined for these inputs (for example, blind
    /// splitness search over a nonabelian kernel).
    LIEXT_UNSUPPORTED = 5,
    /// An internal invariant failed; please report the message.
    LIEXT_INTERNAL = 6,
}

/// A Lie algebra with a fixed ordered basis, as parsed from an algebra
/// document. Free with `liext_algebra_free`.
pub struct liext_algebra {
    inner: LieAlgebra,
}

/// Extension data: the pair of algebras together with the action family and
/// the correction cochain. Free with `liext_data_free`.
pub struct liext_data {
    inner: ExtensionData,
}

/// A built extension: the total algebra with its inclusion, projection, and
/// section. Free with `liext_extension_free`.
pub struct liext_extension {
    inner: Extension,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: liext_status, message: String) -> liext_status {
    let text = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
    status
}

fn io_error(err: IoError) -> liext_status {
    fail(liext_status::LIEXT_PARSE_ERROR, err.to_string())
}

fn ext_error(err: ExtError) -> liext_status {
    let status = match err {
        ExtError::SplitUndecidable => liext_status::LIEXT_UNSUPPORTED,
        _ => liext_status::LIEXT_INVALID_INPUT,
    };
    fail(status, err.to_string())
}

/// Run a call body, converting panics into `LIEXT_INTERNAL` instead of
/// letting them unwind across the C boundary.
fn api(body: impl FnOnce() -> Result<(), liext_status>) -> liext_status {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => liext_status::LIEXT_OK,
        Ok(Err(status)) => status,
        Err(payload) => {
            let message = if let Some(text) = payload.downcast_ref::<&str>() {
                (*text).to_string()
            } else if let Some(text) = payload.downcast_ref::<String>() {
                text.clone()
            } else {
                "unidentified panic".to_string()
            };
            fail(liext_status::LIEXT_INTERNAL, format!("internal error: {message}"))
        }
    }
}

unsafe fn text_argument<'a>(pointer: *const c_char, what: &str) -> Result<&'a str, liext_status> {
    if pointer.is_null() {
        return Err(fail(
            liext_status::LIEXT_NULL_ARGUMENT,
            format!("{what} is a null pointer"),
        ));
    }
    CStr::from_ptr(pointer)
        .to_str()
        .map_err(|_| fail(liext_status::LIEXT_INVALID_UTF8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle_argument<'a, T>(pointer: *const T, what: &str) -> Result<&'a T, liext_status> {
    if pointer.is_null() {
        return Err(fail(
            liext_status::LIEXT_NULL_ARGUMENT,
            format!("{what} is a null pointer"),
        ));
    }
    Ok(&*pointer)
}

unsafe fn out_argument<'a, T>(pointer: *mut T, what: &str) -> Result<&'a mut T, liext_status> {
    if pointer.is_null() {
        return Err(fail(
            liext_status::LIEXT_NULL_ARGUMENT,
            format!("{what} is a null pointer"),
        ));
    }
    Ok(&mut *pointer)
}

fn give_handle<T>(slot: &mut *mut T, value: T) {
    *slot = Box::into_raw(Box::new(value));
}

fn give_string(slot: &mut *mut c_char, text: String) -> Result<(), liext_status> {
    match CString::new(text) {
        Ok(text) => {
            *slot = text.into_raw();
            Ok(())
        }
        Err(_) => Err(fail(
            liext_status::LIEXT_INTERNAL,
            "produced text contained a NUL byte".to_string(),
        )),
    }
}

/// The message for the most recent failure on the calling thread, or null if
/// nothing has failed yet. The pointer stays valid until the next failing
/// call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn liext_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(text) => text.as_ptr(),
        None => std::ptr::null(),
    })
}

/// Free a string returned through an out parameter. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn liext_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Parse an algebra document (the `.alg` format: `name`, `basis`, `brackets`).
/// The antisymmetry and Jacobi checks run during parsing, so a handle always
/// holds a genuine Lie algebra.
#[no_mangle]
pub unsafe extern "C" fn liext_algebra_parse(
    json: *const c_char,
    out: *mut *mut liext_algebra,
) -> liext_status {
    api(|| {
        let slot = out_argument(out, "out")?;
        let text = text_argument(json, "json")?;
        let inner = parse_algebra(text).map_err(io_error)?;
        give_handle(slot, liext_algebra { inner });
        Ok(())
    })
}

/// Write the algebra back out in canonical form (sorted keys, fixed layout),
/// byte-identical to what the command line prints.
#[no_mangle]
pub unsafe extern "C" fn liext_algebra_to_json(
    algebra: *const liext_algebra,
    out: *mut *mut c_char,
) -> liext_status {
    api(|| {
        let slot = out_argument(out, "out")?;
        let algebra = handle_argument(algebra, "algebra")?;
        give_string(slot, write_algebra(&algebra.inner))
    })
}

/// The dimension of the algebra.
#[no_mangle]
pub unsafe extern "C" fn liext_algebra_dim(
    algebra: *const liext_algebra,
    out: *mut usize,
) -> liext_status {
    api(|| {
        let slot = out_argument(out, "out")?;
        let algebra = handle_argument(algebra, "algebra")?;
        *slot = algebra.inner.dim();
        Ok(())
    })
}

/// The dimension of the center.
#[no_mangle]
pub unsafe extern "C" fn liext_algebra_center_dim(
    algebra: *const liext_algebra,
    out: *mut usize,
) -> liext_status {
    api(|| {
        let slot = out_argument(out, "out")?;
        let algebra = handle_argument(algebra, "algebra")?;
        *slot = algebra.inner.center().dim();
        Ok(())
    })
}

/// Free an algebra handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn liext_algebra_free(algebra: *mut liext_algebra) {
    if !algebra.is_null() {
        drop(Box::from_raw(algebra));
    }
}

/// The C interface works on in-memory documents only; `g`/`h` entries that
/// name files on disk are a command-line convenience, where there is a
/// directory to resolve them against.
fn reject_path_references(text: &str) -> Result<(), liext_status> {
    let value: serde_json::Value = match serde_json::from_str(text) {
        Ok(value) => value,
        // Let the data parser report the syntax error with its own message.
        Err(_) => return Ok(()),
    };
    for key in ["g", "h"] {
        if value.get(key).is_some_and(serde_json::Value::is_string) {
            return Err(fail(
                liext_status::LIEXT_UNSUPPORTED,
                format!("`{key}` is a file path; inline the algebra document instead"),
            ));
        }
    }
    Ok(())
}

/// Parse a data document (`g`, `h`, `alpha`, `rho`) with both algebras
/// inline. Shapes are checked here; whether the datum satisfies the laws of
/// valid extension data is the business of `liext_data_check`.
#[no_mangle]
pub unsafe extern "C" fn liext_data_parse(
    json: *const c_char,
    out: *mut *mut liext_data,
) -> liext_status {
    api(|| {
        let slot = out_argument(out, "out")?;
        let text = text_argument(json, "json")?;
        reject_path_references(text)?;
        let file = parse_data(text, Path::new(".")).map_err(io_error)?;
        give_handle(slot, liext_data { inner: file.data });
        Ok(())
    })
}

/// Write the data document in canonical form with both algebras inline.
#[no_mangle]
pub unsafe extern "C" fn liext_data_to_json(
    data: *const liext_data,
    out: *mut *mut c_char,
) -> liext_status {
    api(|| {
        let slot = out_argument(out, "out")?;
        let data = handle_argument(data, "data")?;
        give_string(slot, write_data(&DataFile::inline(data.inner.clone())))
    })
}

/// Decide whether the datum is valid extension data: every action matrix is
/// a derivation, the action bracket closes up to the inner correction, and
/// the correction cochain is closed. `LIEXT_OK` means valid;
/// `LIEXT_INVALID_INPUT` means the message lists the violations.
#[no_mangle]
pub unsafe extern "C" fn liext_data_check(data: *const liext_data) -> liext_status {
    api(|| {
        let data = handle_argument(data, "data")?;
        data.inner.require_valid().map_err(ext_error)
    })
}

/// The dimensions of the base algebra and of the kernel, in that order.
#[no_mangle]
pub unsafe extern "C" fn liext_data_dims(
    data: *const liext_data,
    out_g_dim: *mut usize,
    out_h_dim: *mut usize,
) -> liext_status {
    api(|| {
        let g_slot = out_argument(out_g_dim, "out_g_dim")?;
        let h_slot = out_argument(out_h_dim, "out_h_dim")?;
        let data = handle_argument(data, "data")?;
        *g_slot = data.inner.g().dim();
        *h_slot = data.inner.h().dim();
        Ok(())
    })
}

/// Free a data handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn liext_data_free(data: *mut liext_data) {
    if !data.is_null() {
        drop(Box::from_raw(data));
    }
}

/// Build the extension the datum describes: the total algebra on kernel
/// coordinates followed by base coordinates, with the standard inclusion,
/// projection, and section. Fails with `LIEXT_INVALID_INPUT` when the datum
/// is not valid.
#[no_mangle]
pub unsafe extern "C" fn liext_build(
    data: *const liext_data,
    out: *mut *mut liext_extension,
) -> liext_status {
    api(|| {
        let slot = out_argument(out, "out")?;
        let data = handle_argument(data, "data")?;
        let inner = build(&data.inner).map_err(ext_error)?;
        give_handle(slot, liext_extension { inner });
        Ok(())
    })
}

/// Parse an extension document (`g`, `h`, `e`, `inclusion`, `projection`,
/// `section`). The exactness and homomorphism laws are re-checked, so a
/// handle always holds a genuine extension.
#[no_mangle]
pub unsafe extern "C" fn liext_extension_parse(
    json: *const c_char,
    out: *mut *mut liext_extension,
) -> liext_status {
    api(|| {
        let slot = out_argument(out, "out")?;
        let text = text_argument(json, "json")?;
        let inner = parse_extension(text).map_err(io_error)?;
        give_handle(slot, liext_extension { inner });
        Ok(())
    })
}

/// Write the extension document in canonical form.
#[no_mangle]
pub unsafe extern "C" fn liext_extension_to_json(
    extension: *const liext_extension,
    out: *mut *mut c_char,
) -> liext_status {
    api(|| {
        let slot = out_argument(out, "out")?;
        let extension = handle_argument(extension, "extension")?;
        give_string(slot, write_extension(&extension.inner))
    })
}

/// The dimension of the total algebra.
#[no_mangle]
pub unsafe extern "C" fn liext_extension_dim(
    extension: *const liext_extension,
    out: *mut usize,
) -> liext_status {
    api(|| {
        let slot = out_argument(out, "out")?;
        let extension = handle_argument(extension, "extension")?;
        *slot = extension.inner.e().dim();
        Ok(())
    })
}

/// Read extension data off the extension relative to its stored section.
/// Fails with `LIEXT_UNSUPPORTED` when the document carries no section.
#[no_mangle]
pub unsafe extern "C" fn liext_extension_extract(
    extension: *const liext_extension,
    out: *mut *mut liext_data,
) -> liext_status {
    api(|| {
        let slot = out_argument(out, "out")?;
        let extension = handle_argument(extension, "extension")?;
        let section = extension.inner.section().ok_or_else(|| {
            fail(
                liext_status::LIEXT_UNSUPPORTED,
                "the extension document carries no section".to_string(),
            )
        })?;
        let inner = extract(&extension.inner, section).map_err(ext_error)?;
        give_handle(slot, liext_data { inner });
        Ok(())
    })
}

/// Free an extension handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn liext_extension_free(extension: *mut liext_extension) {
    if !extension.is_null() {
        drop(Box::from_raw(extension));
    }
}

/// Decide whether two data over the same pair of algebras describe
/// equivalent extensions. On success `*out_equivalent` holds the answer;
/// when it is true and `out_witness_json` is non-null, that slot receives
/// the witnessing section change as a matrix document (the map `b` with
/// `transform(first, b) == second`). When it is false the slot is set to
/// null. Pass null for `out_witness_json` to skip the witness.
#[no_mangle]
pub unsafe extern "C" fn liext_equivalent(
    first: *const liext_data,
    second: *const liext_data,
    out_equivalent: *mut bool,
    out_witness_json: *mut *mut c_char,
) -> liext_status {
    api(|| {
        let answer = out_argument(out_equivalent, "out_equivalent")?;
        let first = handle_argument(first, "first")?;
        let second = handle_argument(second, "second")?;
        let witness = equivalent(&first.inner, &second.inner).map_err(ext_error)?;
        *answer = witness.is_some();
        if let Some(slot) = out_witness_json.as_mut() {
            match witness {
                Some(witness) => give_string(slot, write_matrix(witness.b().matrix()))?,
                None => *slot = std::ptr::null_mut(),
            }
        }
        Ok(())
    })
}

/// Decide whether a datum with an abelian kernel splits, where the question
/// is linear. On success `*out_splits` holds the answer; when it is true and
/// `out_witness_json` is non-null, that slot receives the splitting section
/// change as a matrix document, and when it is false the slot is set to
/// null. A nonabelian kernel fails with `LIEXT_UNSUPPORTED` — splitness
/// there is decided only against a supplied certificate.
#[no_mangle]
pub unsafe extern "C" fn liext_split_abelian(
    data: *const liext_data,
    out_splits: *mut bool,
    out_witness_json: *mut *mut c_char,
) -> liext_status {
    api(|| {
        let answer = out_argument(out_splits, "out_splits")?;
        let data = handle_argument(data, "data")?;
        let witness = decide_split_abelian(&data.inner).map_err(ext_error)?;
        *answer = witness.is_some();
        if let Some(slot) = out_witness_json.as_mut() {
            match witness {
                Some(b) => give_string(slot, write_matrix(b.matrix()))?,
                None => *slot = std::ptr::null_mut(),
            }
        }
        Ok(())
    })
}

/// The dimension of the degree-`degree` cohomology of the algebra with
/// coefficients in the trivial module of the given dimension.
#[no_mangle]
pub unsafe extern "C" fn liext_cohomology_trivial_dim(
    algebra: *const liext_algebra,
    coefficients: usize,
    degree: usize,
    out: *mut usize,
) -> liext_status {
    api(|| {
        let slot = out_argument(out, "out")?;
        let algebra = handle_argument(algebra, "algebra")?;
        let module = Representation::trivial(algebra.inner.clone(), coefficients);
        *slot = cohomology_dim(&module, degree);
        Ok(())
    })
}

/// The dimension of the degree-`degree` cohomology of the algebra acting on
/// itself by the adjoint representation.
#[no_mangle]
pub unsafe extern "C" fn liext_cohomology_adjoint_dim(
    algebra: *const liext_algebra,
    degree: usize,
    out: *mut usize,
) -> liext_status {
    api(|| {
        let slot = out_argument(out, "out")?;
        let algebra = handle_argument(algebra, "algebra")?;
        *slot = cohomology_dim(&algebra.inner.adjoint(), degree);
        Ok(())
    })
}

/// Decide whether the degree-3 obstruction class of an outer action
/// vanishes — equivalently, whether any extension induces the action.
/// `images_json` is an outer-images document giving the class of the action
/// of each base basis element in outer-derivation coordinates of the kernel;
/// pass null for the zero action. The images must form a homomorphism into
/// the outer algebra, or the call fails with `LIEXT_INVALID_INPUT`.
#[no_mangle]
pub unsafe extern "C" fn liext_obstruction_vanishes(
    g: *const liext_algebra,
    h: *const liext_algebra,
    images_json: *const c_char,
    out_vanishes: *mut bool,
) -> liext_status {
    api(|| {
        let answer = out_argument(out_vanishes, "out_vanishes")?;
        let g = handle_argument(g, "g")?;
        let h = handle_argument(h, "h")?;
        let outer = h.inner.outer();
        let action = if images_json.is_null() {
            OuterAction::zero(g.inner.clone(), outer)
        } else {
            let text = text_argument(images_json, "images_json")?;
            let images = parse_outer_images(text).map_err(io_error)?;
            OuterAction::new(g.inner.clone(), outer, images).map_err(ext_error)?
        };
        let obstruction = obstruction(&action, None, None).map_err(ext_error)?;
        *answer = obstruction.vanishes;
        Ok(())
    })
}

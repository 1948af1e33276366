//! C ABI over `effpcm`.
//!
//! Matrices, weight vectors and efficient sets are opaque heap handles created
//! by `*_new`/`*_from_*` functions and released with the matching `*_free`.
//! Every fallible call returns an [`EffpcmStatus`]; on failure the message is
//! kept per thread and read back with [`effpcm_last_error`]. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`effpcm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use effpcm::geometry::{contains_cycle_region, efficient_set, embed_exact, EfficientSet, EmbeddedPoint, PerturbTag};
use effpcm::io::{parse_matrix_json, parse_weights_json, GeometryDocument};
use effpcm::{is_efficient, Error, Pcm, Rational, WeightVector};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EffpcmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON, numeral or matrix shape.
    Parse = 3,
    /// Non-positive or non-reciprocal entries.
    InvalidMatrix = 4,
    /// Wrong or unsupported dimension.
    Dimension = 5,
    /// Non-positive or non-normalized weights.
    InvalidWeights = 6,
    /// An index argument outside its range.
    OutOfRange = 7,
    /// Any other library error.
    Domain = 8,
    /// A panic was caught at the boundary.
    Panic = 9,
}

/// Perturbation class of a 4×4 matrix.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EffpcmClass {
    Triple = 0,
    DoubleTriad = 1,
    DoubleOneCycle = 2,
    DoubleTwoCycles = 3,
    Simple = 4,
    Consistent = 5,
}

impl From<PerturbTag> for EffpcmClass {
    fn from(tag: PerturbTag) -> Self {
        match tag {
            PerturbTag::Triple => EffpcmClass::Triple,
            PerturbTag::DoubleTriad => EffpcmClass::DoubleTriad,
            PerturbTag::DoubleOneCycle => EffpcmClass::DoubleOneCycle,
            PerturbTag::DoubleTwoCycles => EffpcmClass::DoubleTwoCycles,
            PerturbTag::Simple => EffpcmClass::Simple,
            PerturbTag::Consistent => EffpcmClass::Consistent,
        }
    }
}

/// Opaque pairwise comparison matrix.
pub struct EffpcmMatrix(Pcm);

/// Opaque weight vector.
pub struct EffpcmWeights(WeightVector);

/// Opaque efficient set of a 4×4 matrix, together with the matrix.
pub struct EffpcmEfficientSet {
    pcm: Pcm,
    set: EfficientSet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(err: &Error) -> EffpcmStatus {
    match err {
        Error::NonSquare(_) | Error::BadNumeral(_) => EffpcmStatus::Parse,
        Error::NonPositiveEntry(..) | Error::ReciprocityViolation(..) => EffpcmStatus::InvalidMatrix,
        Error::UnsupportedDimension(_) | Error::DimensionTooLarge { .. } | Error::DimensionMismatch { .. } => {
            EffpcmStatus::Dimension
        }
        Error::NonPositiveWeight(_) | Error::NotNormalized => EffpcmStatus::InvalidWeights,
        Error::IndexOutOfRange { .. } => EffpcmStatus::OutOfRange,
        _ => EffpcmStatus::Domain,
    }
}

struct Failure(EffpcmStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure(status_of(&err), err.to_string())
    }
}

fn null(name: &str) -> Failure {
    Failure(EffpcmStatus::NullPointer, format!("null pointer passed as `{name}`"))
}

/// Runs `body`, recording any failure or panic as the thread's last error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> EffpcmStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => EffpcmStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".to_string());
            EffpcmStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(EffpcmStatus::InvalidUtf8, format!("`{name}` is not valid UTF-8")))
}

unsafe fn reference<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(name))
}

unsafe fn write<T>(out: *mut T, value: T, name: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(name));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no interior nul").into_raw()
}

/// Message of the last failed call on this thread, or null after a success.
///
/// The pointer stays valid until the next `effpcm_*` call on the same thread.
#[no_mangle]
pub extern "C" fn effpcm_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn effpcm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a matrix document `{"n": …, "entries": [[…], …]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn effpcm_matrix_from_json(json: *const c_char, out: *mut *mut EffpcmMatrix) -> EffpcmStatus {
    guard(|| {
        let pcm = parse_matrix_json(text(json, "json")?)?;
        write(out, Box::into_raw(Box::new(EffpcmMatrix(pcm))), "out")
    })
}

/// Builds an `n`×`n` matrix from its `n(n−1)/2` upper-triangle entries in row
/// order, each a numeral such as `"3"`, `"2/7"` or `"0.25"`.
///
/// # Safety
/// `entries` must point to `count` nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn effpcm_matrix_from_upper(
    n: usize,
    entries: *const *const c_char,
    count: usize,
    out: *mut *mut EffpcmMatrix,
) -> EffpcmStatus {
    guard(|| {
        if entries.is_null() && count > 0 {
            return Err(null("entries"));
        }
        let mut upper = Vec::with_capacity(count);
        for k in 0..count {
            upper.push(Rational::parse(text(*entries.add(k), "entries[k]")?)?);
        }
        let pcm = Pcm::from_upper(n, &upper)?;
        write(out, Box::into_raw(Box::new(EffpcmMatrix(pcm))), "out")
    })
}

/// # Safety
/// `m` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn effpcm_matrix_free(m: *mut EffpcmMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live matrix handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn effpcm_matrix_dimension(m: *const EffpcmMatrix, out: *mut usize) -> EffpcmStatus {
    guard(|| write(out, reference(m, "m")?.0.n(), "out"))
}

/// Perturbation class of a 4×4 matrix.
///
/// # Safety
/// `m` must be a live matrix handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn effpcm_matrix_classify(m: *const EffpcmMatrix, out: *mut EffpcmClass) -> EffpcmStatus {
    guard(|| {
        let class = effpcm::geometry::classify(&reference(m, "m")?.0)?;
        write(out, class.tag.into(), "out")
    })
}

/// Parses a weight document `{"w": […]}`: all strings give exact weights,
/// any JSON number makes the vector floating.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn effpcm_weights_from_json(json: *const c_char, out: *mut *mut EffpcmWeights) -> EffpcmStatus {
    guard(|| {
        let w = parse_weights_json(text(json, "json")?)?;
        write(out, Box::into_raw(Box::new(EffpcmWeights(w))), "out")
    })
}

/// Floating weight vector copied from `len` doubles.
///
/// # Safety
/// `values` must point to `len` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn effpcm_weights_from_f64(
    values: *const f64,
    len: usize,
    out: *mut *mut EffpcmWeights,
) -> EffpcmStatus {
    guard(|| {
        if values.is_null() && len > 0 {
            return Err(null("values"));
        }
        let components = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(values, len).to_vec() };
        let w = WeightVector::float(components)?;
        write(out, Box::into_raw(Box::new(EffpcmWeights(w))), "out")
    })
}

/// # Safety
/// `w` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn effpcm_weights_free(w: *mut EffpcmWeights) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Whether `w` is efficient for `m`, decided on the BCC digraph.
///
/// # Safety
/// `m` and `w` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn effpcm_is_efficient(
    m: *const EffpcmMatrix,
    w: *const EffpcmWeights,
    out: *mut bool,
) -> EffpcmStatus {
    guard(|| {
        let verdict = is_efficient(&reference(m, "m")?.0, &reference(w, "w")?.0)?;
        write(out, verdict, "out")
    })
}

/// Builds the three tetrahedra of a 4×4 matrix.
///
/// # Safety
/// `m` must be a live matrix handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn effpcm_efficient_set_new(
    m: *const EffpcmMatrix,
    out: *mut *mut EffpcmEfficientSet,
) -> EffpcmStatus {
    guard(|| {
        let pcm = reference(m, "m")?.0.clone();
        let set = efficient_set(&pcm)?;
        write(out, Box::into_raw(Box::new(EffpcmEfficientSet { pcm, set })), "out")
    })
}

/// # Safety
/// `s` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn effpcm_efficient_set_free(s: *mut EffpcmEfficientSet) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Writes vertex `vertex` (0..4) of tetrahedron `cycle` (0..3, canonical
/// order) as the 4 weights into `weights` and its embedded coordinates into `xyz`.
/// Either output may be null.
///
/// # Safety
/// `s` must be a live handle; non-null outputs must hold 4 and 3 doubles.
#[no_mangle]
pub unsafe extern "C" fn effpcm_efficient_set_vertex(
    s: *const EffpcmEfficientSet,
    cycle: usize,
    vertex: usize,
    weights: *mut f64,
    xyz: *mut f64,
) -> EffpcmStatus {
    guard(|| {
        let s = reference(s, "s")?;
        if cycle >= 3 || vertex >= 4 {
            return Err(Failure(EffpcmStatus::OutOfRange, format!("no vertex {vertex} of tetrahedron {cycle}")));
        }
        let v = s.set.tetrahedra[cycle].vertex(vertex);
        if !weights.is_null() {
            for (k, c) in v.iter().enumerate() {
                weights.add(k).write(c.to_f64());
            }
        }
        if !xyz.is_null() {
            let point = EmbeddedPoint::from_exact(&embed_exact(v)?).to_array();
            for (k, c) in point.into_iter().enumerate() {
                xyz.add(k).write(c);
            }
        }
        Ok(())
    })
}

/// Whether `w` lies in the efficient set, i.e. in some tetrahedron's region.
///
/// # Safety
/// `s` and `w` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn effpcm_efficient_set_contains(
    s: *const EffpcmEfficientSet,
    w: *const EffpcmWeights,
    out: *mut bool,
) -> EffpcmStatus {
    guard(|| {
        let s = reference(s, "s")?;
        let w = &reference(w, "w")?.0;
        let mut inside = false;
        for t in &s.set.tetrahedra {
            inside |= contains_cycle_region(&s.pcm, &t.orientation(), w)?;
        }
        write(out, inside, "out")
    })
}

/// The full geometry document as JSON; free it with [`effpcm_string_free`].
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn effpcm_efficient_set_to_json(
    s: *const EffpcmEfficientSet,
    out: *mut *mut c_char,
) -> EffpcmStatus {
    guard(|| {
        let s = reference(s, "s")?;
        let json = GeometryDocument::new(&s.pcm, &s.set)?.to_json();
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, owned_string(json), "out")
    })
}

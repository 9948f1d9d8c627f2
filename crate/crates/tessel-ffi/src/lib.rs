//! C ABI for the tessel toolkit.
//!
//! Opaque handles, integer status codes, and a thread-local last-error
//! message. Curvature values cross the boundary as exact numerator /
//! denominator pairs.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use num_traits::ToPrimitive;
use tessel::curvature::{gauss_bonnet, vertex_curvature};
use tessel::generate;
use tessel::surface::{self, Loaded};
use tessel::TessError;

/// An embedded graph: a closed tessellation or a patch of an infinite one.
pub struct TsltGraph {
    inner: Loaded,
}

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TsltStatus {
    TsltOk = 0,
    TsltErrBadSpec = 1,
    TsltErrParse = 2,
    TsltErrIo = 3,
    TsltErrUnsupported = 4,
    TsltErrPrecondition = 5,
    TsltErrNullArgument = 6,
    TsltErrUtf8 = 7,
    TsltErrOverflow = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &TessError) -> TsltStatus {
    match err {
        TessError::BadSpec(_) => TsltStatus::TsltErrBadSpec,
        TessError::Parse { .. } => TsltStatus::TsltErrParse,
        TessError::Io(_) => TsltStatus::TsltErrIo,
        TessError::Unsupported(_) => TsltStatus::TsltErrUnsupported,
        _ => TsltStatus::TsltErrPrecondition,
    }
}

fn fail(err: TessError) -> TsltStatus {
    set_error(&err.to_string());
    status_of(&err)
}

unsafe fn cstr<'a>(ptr: *const c_char) -> Result<&'a str, TsltStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(TsltStatus::TsltErrNullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        TsltStatus::TsltErrUtf8
    })
}

fn put(out: *mut *mut TsltGraph, loaded: Loaded) -> TsltStatus {
    if out.is_null() {
        set_error("null output pointer");
        return TsltStatus::TsltErrNullArgument;
    }
    let boxed = Box::new(TsltGraph { inner: loaded });
    unsafe { *out = Box::into_raw(boxed) };
    TsltStatus::TsltOk
}

/// Message describing the most recent failure on this thread; valid until
/// the next failing call.
#[no_mangle]
pub extern "C" fn tessel_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Loads a tessellation file in the exchange format.
///
/// # Safety
/// `path` must be a valid NUL-terminated string; `out` must be a valid
/// pointer. The returned handle is freed with [`tessel_free`].
#[no_mangle]
pub unsafe extern "C" fn tessel_load(path: *const c_char, out: *mut *mut TsltGraph) -> TsltStatus {
    let path = match cstr(path) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match surface::load(std::path::Path::new(path)) {
        Ok(loaded) => put(out, loaded),
        Err(e) => fail(e),
    }
}

/// Writes the handle to `path` in canonical exchange format.
///
/// # Safety
/// `g` must be a live handle from this library; `path` a valid string.
#[no_mangle]
pub unsafe extern "C" fn tessel_save(g: *const TsltGraph, path: *const c_char) -> TsltStatus {
    let Some(g) = g.as_ref() else {
        set_error("null graph handle");
        return TsltStatus::TsltErrNullArgument;
    };
    let path = match cstr(path) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match surface::save(&g.inner, std::path::Path::new(path)) {
        Ok(()) => TsltStatus::TsltOk,
        Err(e) => fail(e),
    }
}

/// Ball of radius `radius` in the `(p,q)`-regular tessellation
/// (nonpositive corner curvature required).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tessel_generate_regular_ball(
    p: u32,
    q: u32,
    radius: u32,
    out: *mut *mut TsltGraph,
) -> TsltStatus {
    match generate::hyperbolic_ball(p, q, radius) {
        Ok(patch) => put(out, Loaded::Patch(patch)),
        Err(e) => fail(e),
    }
}

/// One of the five platonic solids by name.
///
/// # Safety
/// `name` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tessel_generate_platonic(
    name: *const c_char,
    out: *mut *mut TsltGraph,
) -> TsltStatus {
    let name = match cstr(name) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match generate::PlatonicSolid::parse(name).and_then(generate::platonic) {
        Ok(t) => put(out, Loaded::Closed(t)),
        Err(e) => fail(e),
    }
}

/// Releases a handle. Null is allowed.
///
/// # Safety
/// `g` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn tessel_free(g: *mut TsltGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tessel_vertex_count(g: *const TsltGraph) -> u64 {
    g.as_ref().map_or(0, |g| match &g.inner {
        Loaded::Closed(t) => t.vertex_count() as u64,
        Loaded::Patch(p) => p.vertex_count() as u64,
    })
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tessel_edge_count(g: *const TsltGraph) -> u64 {
    g.as_ref().map_or(0, |g| match &g.inner {
        Loaded::Closed(t) => t.edge_count() as u64,
        Loaded::Patch(p) => p.rotation().edge_count() as u64,
    })
}

/// Complete faces (all faces of a closed tessellation).
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tessel_face_count(g: *const TsltGraph) -> u64 {
    g.as_ref().map_or(0, |g| match &g.inner {
        Loaded::Closed(t) => t.face_count() as u64,
        Loaded::Patch(p) => p.faces().count() as u64,
    })
}

/// 1 when curvature is defined at `v` (every vertex of a closed
/// tessellation, interior vertices of a patch), else 0.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tessel_is_interior(g: *const TsltGraph, v: u32) -> i32 {
    g.as_ref().map_or(0, |g| {
        let inside = match &g.inner {
            Loaded::Closed(t) => (v as usize) < t.vertex_count(),
            Loaded::Patch(p) => (v as usize) < p.vertex_count() && p.is_interior(v),
        };
        inside as i32
    })
}

/// Euler characteristic of a closed tessellation.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tessel_euler_characteristic(
    g: *const TsltGraph,
    out: *mut i64,
) -> TsltStatus {
    let Some(g) = g.as_ref() else {
        set_error("null graph handle");
        return TsltStatus::TsltErrNullArgument;
    };
    match &g.inner {
        Loaded::Closed(t) => {
            if out.is_null() {
                set_error("null output pointer");
                return TsltStatus::TsltErrNullArgument;
            }
            *out = t.euler_genus().0;
            TsltStatus::TsltOk
        }
        Loaded::Patch(_) => fail(TessError::Unsupported(
            "Euler characteristic needs a closed tessellation".into(),
        )),
    }
}

fn write_rational(value: &tessel::Rational, num: *mut i64, den: *mut u64) -> TsltStatus {
    if num.is_null() || den.is_null() {
        set_error("null output pointer");
        return TsltStatus::TsltErrNullArgument;
    }
    let (Some(n), Some(d)) = (value.numer().to_i64(), value.denom().to_u64()) else {
        set_error("rational value exceeds 64-bit range");
        return TsltStatus::TsltErrOverflow;
    };
    unsafe {
        *num = n;
        *den = d;
    }
    TsltStatus::TsltOk
}

/// Exact curvature sum over all vertices of a closed tessellation (the
/// Gauss–Bonnet value), as numerator/denominator.
///
/// # Safety
/// `g` must be a live handle; `num`, `den` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tessel_gauss_bonnet(
    g: *const TsltGraph,
    num: *mut i64,
    den: *mut u64,
) -> TsltStatus {
    let Some(g) = g.as_ref() else {
        set_error("null graph handle");
        return TsltStatus::TsltErrNullArgument;
    };
    match &g.inner {
        Loaded::Closed(t) => write_rational(&gauss_bonnet(t), num, den),
        Loaded::Patch(_) => fail(TessError::Unsupported(
            "Gauss-Bonnet needs a closed tessellation".into(),
        )),
    }
}

/// Exact vertex curvature `1 - d/2 + sum 1/deg(f)` at a covered vertex.
///
/// # Safety
/// `g` must be a live handle; `num`, `den` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tessel_vertex_curvature(
    g: *const TsltGraph,
    v: u32,
    num: *mut i64,
    den: *mut u64,
) -> TsltStatus {
    let Some(g) = g.as_ref() else {
        set_error("null graph handle");
        return TsltStatus::TsltErrNullArgument;
    };
    let result = match &g.inner {
        Loaded::Closed(t) => vertex_curvature(t, v),
        Loaded::Patch(p) => vertex_curvature(p, v),
    };
    match result {
        Ok(phi) => write_rational(&phi, num, den),
        Err(e) => fail(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generate_query_free() {
        let mut handle: *mut TsltGraph = std::ptr::null_mut();
        let name = CString::new("dodecahedron").unwrap();
        let status = unsafe { tessel_generate_platonic(name.as_ptr(), &mut handle) };
        assert_eq!(status, TsltStatus::TsltOk);
        unsafe {
            assert_eq!(tessel_vertex_count(handle), 20);
            assert_eq!(tessel_edge_count(handle), 30);
            assert_eq!(tessel_face_count(handle), 12);
            let mut chi = 0i64;
            assert_eq!(
                tessel_euler_characteristic(handle, &mut chi),
                TsltStatus::TsltOk
            );
            assert_eq!(chi, 2);
            let (mut num, mut den) = (0i64, 0u64);
            assert_eq!(
                tessel_gauss_bonnet(handle, &mut num, &mut den),
                TsltStatus::TsltOk
            );
            assert_eq!((num, den), (2, 1));
            assert_eq!(
                tessel_vertex_curvature(handle, 0, &mut num, &mut den),
                TsltStatus::TsltOk
            );
            assert_eq!((num, den), (1, 10));
            tessel_free(handle);
        }
    }

    #[test]
    fn patch_round_trip_through_files() {
        let dir = std::env::temp_dir().join(format!("tsltffi{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("b.tess");
        let cpath = CString::new(path.to_str().unwrap()).unwrap();
        let mut handle: *mut TsltGraph = std::ptr::null_mut();
        unsafe {
            assert_eq!(
                tessel_generate_regular_ball(7, 3, 4, &mut handle),
                TsltStatus::TsltOk
            );
            assert_eq!(tessel_save(handle, cpath.as_ptr()), TsltStatus::TsltOk);
            let mut reloaded: *mut TsltGraph = std::ptr::null_mut();
            assert_eq!(
                tessel_load(cpath.as_ptr(), &mut reloaded),
                TsltStatus::TsltOk
            );
            assert_eq!(tessel_vertex_count(handle), tessel_vertex_count(reloaded));
            // Boundary vertices carry no curvature.
            let (mut num, mut den) = (0i64, 0u64);
            let last = tessel_vertex_count(handle) as u32 - 1;
            assert_eq!(tessel_is_interior(handle, last), 0);
            assert_eq!(
                tessel_vertex_curvature(handle, last, &mut num, &mut den),
                TsltStatus::TsltErrPrecondition
            );
            let msg = CStr::from_ptr(tessel_last_error())
                .to_string_lossy()
                .into_owned();
            assert!(msg.contains("non-interior"), "{msg}");
            tessel_free(handle);
            tessel_free(reloaded);
        }
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn spherical_parameters_report_bad_spec() {
        let mut handle: *mut TsltGraph = std::ptr::null_mut();
        let status = unsafe { tessel_generate_regular_ball(3, 3, 2, &mut handle) };
        assert_eq!(status, TsltStatus::TsltErrBadSpec);
        assert!(handle.is_null());
    }
}

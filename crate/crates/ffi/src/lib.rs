//! C ABI over `relctx`.
//!
//! Every fallible function returns a [`RelctxStatus`] and writes results
//! through out-pointers. On failure, [`relctx_last_error_message`] returns a
//! description that stays valid until the next failing call on the same
//! thread. Densities are opaque handles released with
//! [`relctx_density_free`]; strings returned by the library are released
//! with [`relctx_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_complex::Complex64;
use relctx::cli::{execute, parse_config, render, Format, RunConfig};
use relctx::contextuality::{ground_chsh, hydrogen_chsh, hydrogen_density, optimal_xi, peres_mermin_value};
use relctx::freeparticle::{free_chsh, free_state};
use relctx::hydrogen::sommerfeld_mu;
use relctx::{Error, QuadratureSpec, QuantumNumbers, ReducedSpinDensity};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelctxStatus {
    Ok = 0,
    InvalidArgument = 1,
    Numerical = 2,
    ContractViolation = 3,
    NullPointer = 4,
    Panic = 5,
}

/// Reduced 4x4 spin density.
pub struct RelctxDensity {
    inner: ReducedSpinDensity,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(RelctxStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidArgument(_) => RelctxStatus::InvalidArgument,
            Error::Numerical(_) => RelctxStatus::Numerical,
            Error::ContractViolation(_) => RelctxStatus::ContractViolation,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(RelctxStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RelctxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RelctxStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside relctx");
            RelctxStatus::Panic
        }
    }
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn density<'a>(d: *const RelctxDensity) -> Result<&'a ReducedSpinDensity, Failure> {
    d.as_ref().map(|d| &d.inner).ok_or_else(|| null("density"))
}

fn boxed(inner: ReducedSpinDensity) -> *mut RelctxDensity {
    Box::into_raw(Box::new(RelctxDensity { inner }))
}

/// Message of the last failure on this thread (empty if none).
#[no_mangle]
pub extern "C" fn relctx_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn relctx_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// `E / Mc^2` of the level `(n, kappa)`.
///
/// # Safety
/// `out` must be valid for writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn relctx_sommerfeld_mu(n: u32, kappa: i32, alpha: f64, out: *mut f64) -> RelctxStatus {
    guard(|| write(out, sommerfeld_mu(n, kappa, alpha)?, "out"))
}

/// Spin density of the bound state `(n, kappa, m_j = two_mj / 2)` with the
/// default quadrature.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn relctx_density_from_hydrogen(
    n: u32,
    kappa: i32,
    two_mj: i32,
    alpha: f64,
    out: *mut *mut RelctxDensity,
) -> RelctxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let qn = QuantumNumbers::new(n, kappa, two_mj)?;
        let rho = hydrogen_density(&qn, alpha, &QuadratureSpec::default())?;
        write(out, boxed(rho), "out")
    })
}

/// Pure-state density of the spinor with real parts `re[0..4]` and imaginary
/// parts `im[0..4]`, normalised internally. A zero spinor is rejected.
///
/// # Safety
/// `re` and `im` must point to four `double`s each; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn relctx_density_from_spinor(
    re: *const f64,
    im: *const f64,
    out: *mut *mut RelctxDensity,
) -> RelctxStatus {
    guard(|| {
        if re.is_null() || im.is_null() {
            return Err(null("spinor"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let (re, im) = (std::slice::from_raw_parts(re, 4), std::slice::from_raw_parts(im, 4));
        let psi: [Complex64; 4] = std::array::from_fn(|k| Complex64::new(re[k], im[k]));
        let rho = ReducedSpinDensity::from_pure(&psi, "spinor")?;
        write(out, boxed(rho), "out")
    })
}

/// Density of the free electron at velocity `beta` with helicity `+-1`.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn relctx_density_from_free(
    beta: f64,
    helicity: i32,
    out: *mut *mut RelctxDensity,
) -> RelctxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let st = free_state(beta, helicity)?;
        let rho = ReducedSpinDensity::from_pure(&st.spinor, format!("free beta={beta}"))?;
        write(out, boxed(rho), "out")
    })
}

/// The maximally mixed density `I / 4`.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn relctx_density_maximally_mixed(out: *mut *mut RelctxDensity) -> RelctxStatus {
    guard(|| write(out, boxed(ReducedSpinDensity::maximally_mixed()), "out"))
}

/// Releases a density. Null is ignored.
///
/// # Safety
/// `d` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn relctx_density_free(d: *mut RelctxDensity) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Copies the matrix row-major into `re[0..16]` and `im[0..16]`.
///
/// # Safety
/// `d` must be a live density; `re` and `im` must hold 16 `double`s each.
#[no_mangle]
pub unsafe extern "C" fn relctx_density_matrix(
    d: *const RelctxDensity,
    re: *mut f64,
    im: *mut f64,
) -> RelctxStatus {
    guard(|| {
        let rho = density(d)?;
        if re.is_null() || im.is_null() {
            return Err(null("output buffer"));
        }
        for (i, row) in rho.matrix.entries.iter().enumerate() {
            for (j, z) in row.iter().enumerate() {
                re.add(4 * i + j).write(z.re);
                im.add(4 * i + j).write(z.im);
            }
        }
        Ok(())
    })
}

/// CHSH-like value of `d` with the ground-state observables for
/// `m_j = two_mj / 2`.
///
/// # Safety
/// `d` must be a live density; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn relctx_ground_chsh(
    d: *const RelctxDensity,
    two_mj: i32,
    alpha: f64,
    out: *mut f64,
) -> RelctxStatus {
    guard(|| {
        let qn = QuantumNumbers::new(1, 1, two_mj)?;
        write(out, ground_chsh(density(d)?, &qn, alpha)?.value, "out")
    })
}

/// CHSH-like value of `d` with the `xi` family for state `(n, kappa,
/// two_mj)`. A NaN `xi` selects the optimal angle.
///
/// # Safety
/// `d` must be a live density; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn relctx_excited_chsh(
    d: *const RelctxDensity,
    n: u32,
    kappa: i32,
    two_mj: i32,
    alpha: f64,
    xi: f64,
    out: *mut f64,
) -> RelctxStatus {
    guard(|| {
        let qn = QuantumNumbers::new(n, kappa, two_mj)?;
        let xi = (!xi.is_nan()).then_some(xi);
        write(out, hydrogen_chsh(density(d)?, &qn, alpha, xi)?.value, "out")
    })
}

/// Optimal `xi` and the closed-form maximum for state `(n, kappa, two_mj)`.
///
/// # Safety
/// `xi_out` and `value_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn relctx_optimal_xi(
    n: u32,
    kappa: i32,
    two_mj: i32,
    alpha: f64,
    xi_out: *mut f64,
    value_out: *mut f64,
) -> RelctxStatus {
    guard(|| {
        if xi_out.is_null() || value_out.is_null() {
            return Err(null("out"));
        }
        let c = optimal_xi(&QuantumNumbers::new(n, kappa, two_mj)?, alpha)?;
        write(xi_out, c.xi_star, "xi_out")?;
        write(value_out, c.value_star, "value_out")
    })
}

/// Peres-Mermin value of `d` (noncontextual bound 4).
///
/// # Safety
/// `d` must be a live density; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn relctx_peres_mermin(d: *const RelctxDensity, out: *mut f64) -> RelctxStatus {
    guard(|| write(out, peres_mermin_value(density(d)?)?.value, "out"))
}

/// CHSH-like value of the free electron at velocity `beta`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn relctx_free_chsh(beta: f64, out: *mut f64) -> RelctxStatus {
    guard(|| write(out, free_chsh(beta)?.value, "out"))
}

/// Runs a scenario described by a JSON run configuration, e.g.
/// `{"command": "sweep", "n_max": 3}`, and returns the JSON report.
///
/// # Safety
/// `config` must be a NUL-terminated string; `out` must be writable. The
/// returned string is released with [`relctx_string_free`].
#[no_mangle]
pub unsafe extern "C" fn relctx_execute_json(config: *const c_char, out: *mut *mut c_char) -> RelctxStatus {
    guard(|| {
        if config.is_null() {
            return Err(null("config"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(config)
            .to_str()
            .map_err(|e| Failure(RelctxStatus::InvalidArgument, format!("config is not UTF-8: {e}")))?;
        let cfg: RunConfig = parse_config(text)?;
        let doc = render(&execute(&cfg)?, Format::Json)?;
        let c = CString::new(doc).map_err(|e| Failure(RelctxStatus::Numerical, e.to_string()))?;
        write(out, c.into_raw(), "out")
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn relctx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

//! C ABI for the plethysm library.
//!
//! All functions return a status code (`PLETH_OK` on success) and pass
//! results through out-pointers. Strings returned through out-pointers are
//! heap-allocated and must be released with [`pleth_string_free`].
//! Partitions are passed as text: comma-separated parts with the exponent
//! shorthand, e.g. `"4,2,1"` or `"2^3,1"`.

use plethysm::classifier::{is_multiplicity_free, witness};
use plethysm::domino::symmetric_square_split;
use plethysm::engine::{Engine, EngineConfig};
use plethysm::oracle::{Oracle, OracleConfig};
use plethysm::output;
use plethysm::{Error, Partition};
use std::ffi::{c_char, c_int, c_uint, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes: 0 success, 2 bad input, 3 budget exceeded, 4 internal error.
pub const PLETH_OK: c_int = 0;
pub const PLETH_ERR_INPUT: c_int = 2;
pub const PLETH_ERR_BUDGET: c_int = 3;
pub const PLETH_ERR_INTERNAL: c_int = 4;

/// Opaque engine handle with its expansion cache.
pub struct PlethEngine {
    engine: Engine,
    max_degree: u32,
}

fn status_of(err: &Error) -> c_int {
    err.exit_code()
}

unsafe fn parse_arg(ptr: *const c_char) -> Result<Partition, c_int> {
    if ptr.is_null() {
        return Err(PLETH_ERR_INPUT);
    }
    let text = unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| PLETH_ERR_INPUT)?;
    Partition::parse(text).map_err(|_| PLETH_ERR_INPUT)
}

fn emit_string(out: *mut *mut c_char, value: String) -> c_int {
    let Ok(cstring) = CString::new(value) else {
        return PLETH_ERR_INTERNAL;
    };
    unsafe { *out = cstring.into_raw() };
    PLETH_OK
}

fn guarded(out: *mut *mut c_char, body: impl FnOnce() -> Result<String, c_int>) -> c_int {
    if out.is_null() {
        return PLETH_ERR_INPUT;
    }
    unsafe { *out = std::ptr::null_mut() };
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(value)) => emit_string(out, value),
        Ok(Err(code)) => code,
        Err(_) => PLETH_ERR_INTERNAL,
    }
}

/// Creates an engine with the given degree budget (0 picks the default).
#[no_mangle]
pub extern "C" fn pleth_engine_new(max_degree: c_uint) -> *mut PlethEngine {
    let max_degree = if max_degree == 0 {
        plethysm::engine::DEFAULT_MAX_DEGREE
    } else {
        max_degree
    };
    Box::into_raw(Box::new(PlethEngine {
        engine: Engine::new(EngineConfig { max_degree }),
        max_degree,
    }))
}

/// Releases an engine handle.
///
/// # Safety
/// `engine` must be a pointer returned by [`pleth_engine_new`], at most once.
#[no_mangle]
pub unsafe extern "C" fn pleth_engine_free(engine: *mut PlethEngine) {
    if !engine.is_null() {
        drop(unsafe { Box::from_raw(engine) });
    }
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be a pointer produced by one of the `pleth_*` functions.
#[no_mangle]
pub unsafe extern "C" fn pleth_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// `p(ν, μ, λ)` as a decimal string.
///
/// # Safety
/// `engine` must be a live engine handle; partition arguments must be valid
/// NUL-terminated strings; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pleth_coefficient(
    engine: *const PlethEngine,
    nu: *const c_char,
    mu: *const c_char,
    lambda: *const c_char,
    out: *mut *mut c_char,
) -> c_int {
    let Some(handle) = (unsafe { engine.as_ref() }) else {
        return PLETH_ERR_INPUT;
    };
    let args = (|| {
        Ok::<_, c_int>((
            unsafe { parse_arg(nu) }?,
            unsafe { parse_arg(mu) }?,
            unsafe { parse_arg(lambda) }?,
        ))
    })();
    let (nu, mu, lambda) = match args {
        Ok(t) => t,
        Err(code) => return code,
    };
    guarded(out, || {
        handle
            .engine
            .coefficient(&nu, &mu, &lambda)
            .map(|c| c.to_string())
            .map_err(|e| status_of(&e))
    })
}

/// Full Schur expansion of `s_ν ∘ s_μ` as a JSON record; when
/// `check_oracle` is nonzero the power-sum oracle is run as well and the
/// agreement flag is filled in.
///
/// # Safety
/// Same contract as [`pleth_coefficient`].
#[no_mangle]
pub unsafe extern "C" fn pleth_expand_json(
    engine: *const PlethEngine,
    nu: *const c_char,
    mu: *const c_char,
    check_oracle: c_int,
    out: *mut *mut c_char,
) -> c_int {
    let Some(handle) = (unsafe { engine.as_ref() }) else {
        return PLETH_ERR_INPUT;
    };
    let args = (|| Ok::<_, c_int>((unsafe { parse_arg(nu) }?, unsafe { parse_arg(mu) }?)))();
    let (nu, mu) = match args {
        Ok(t) => t,
        Err(code) => return code,
    };
    guarded(out, || {
        let x = handle.engine.expand(&nu, &mu).map_err(|e| status_of(&e))?;
        let agrees = if check_oracle != 0 {
            let oracle = Oracle::new(OracleConfig {
                max_degree: handle.max_degree,
            });
            let other = oracle
                .plethysm_expand_powersum(&nu, &mu)
                .map_err(|e| status_of(&e))?;
            Some(other == x.terms)
        } else {
            None
        };
        let record = output::expand_record(&nu, &mu, &x, agrees);
        Ok(record.json.to_string())
    })
}

/// Multiplicity-freeness verdict; `out_verdict` receives 1 or 0 and the JSON
/// record (with the clause) is returned through `out`.
///
/// # Safety
/// Partition arguments must be valid NUL-terminated strings; out-pointers
/// must be valid.
#[no_mangle]
pub unsafe extern "C" fn pleth_multiplicity_free(
    nu: *const c_char,
    mu: *const c_char,
    out_verdict: *mut c_int,
    out: *mut *mut c_char,
) -> c_int {
    if out_verdict.is_null() {
        return PLETH_ERR_INPUT;
    }
    let args = (|| Ok::<_, c_int>((unsafe { parse_arg(nu) }?, unsafe { parse_arg(mu) }?)))();
    let (nu, mu) = match args {
        Ok(t) => t,
        Err(code) => return code,
    };
    guarded(out, || {
        let verdict = is_multiplicity_free(&nu, &mu);
        unsafe { *out_verdict = c_int::from(verdict.verdict) };
        Ok(output::mf_record(&verdict).json.to_string())
    })
}

/// Witness certificate for a pair that is not multiplicity-free, as JSON.
///
/// # Safety
/// Same contract as [`pleth_coefficient`].
#[no_mangle]
pub unsafe extern "C" fn pleth_witness_json(
    engine: *const PlethEngine,
    nu: *const c_char,
    mu: *const c_char,
    out: *mut *mut c_char,
) -> c_int {
    let Some(handle) = (unsafe { engine.as_ref() }) else {
        return PLETH_ERR_INPUT;
    };
    let args = (|| Ok::<_, c_int>((unsafe { parse_arg(nu) }?, unsafe { parse_arg(mu) }?)))();
    let (nu, mu) = match args {
        Ok(t) => t,
        Err(code) => return code,
    };
    guarded(out, || {
        let cert = witness(&handle.engine, &nu, &mu).map_err(|e| status_of(&e))?;
        Ok(output::witness_record(&cert).json.to_string())
    })
}

/// Spin split of `Dom(μ, ·)` — the expansions of `s_(2) ∘ s_μ` and
/// `s_(1²) ∘ s_μ` — as JSON.
///
/// # Safety
/// Same contract as [`pleth_coefficient`].
#[no_mangle]
pub unsafe extern "C" fn pleth_domino_split_json(
    engine: *const PlethEngine,
    mu: *const c_char,
    out: *mut *mut c_char,
) -> c_int {
    let Some(handle) = (unsafe { engine.as_ref() }) else {
        return PLETH_ERR_INPUT;
    };
    let mu = match unsafe { parse_arg(mu) } {
        Ok(p) => p,
        Err(code) => return code,
    };
    guarded(out, || {
        let (plus, minus) =
            symmetric_square_split(&mu, handle.max_degree).map_err(|e| status_of(&e))?;
        Ok(output::domino_record(&mu, &plus, &minus, None)
            .json
            .to_string())
    })
}

//! C ABI over `ree-core`.
//!
//! Fields, groups and reports are opaque handles created by `*_new` and
//! released by the matching `*_free`. Every fallible call returns a
//! [`ReeStatus`]; on failure a message is available from
//! [`ree_last_error`] until the next call on the same thread.
//!
//! Field elements cross the boundary as their base-3 index (`0..q`).

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use ree_core::field::{make_field, FieldContext, FieldElement, FieldError};
use ree_core::group::{MoufangPoint, ReeGroup as CoreGroup, Triple};
use ree_core::hexagon::Hexagon;
use ree_core::report::CheckReport;
use ree_core::sampling::Sampling;
use ree_core::verify::{self, closure, Side, SuiteConfig};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnsupportedField = 3,
    OutOfRange = 4,
    DivisionByZero = 5,
    /// A computed value contradicts a structural fact, e.g. a vanishing norm.
    InvariantViolation = 6,
    Panic = 7,
}

/// An element `(a, b, c)` of `U`, coordinates as field element indices.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReeTriple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

/// A point of `X`. When `is_infinity` is nonzero, `g` is ignored.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReePoint {
    pub is_infinity: u8,
    pub g: ReeTriple,
}

/// How to compute `omega`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReeOmegaVia {
    Formula = 0,
    Hexagon = 1,
}

/// Side on which `U` acts in the closure computation.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReeSide {
    Right = 0,
    Left = 1,
}

/// Opaque finite field `GF(3^m)`.
pub struct ReeField(Arc<FieldContext>);

/// Opaque group `U` with its action on `X`.
pub struct ReeGroup {
    group: CoreGroup,
    hexagon: Hexagon,
}

/// Opaque verification report.
pub struct ReeReport {
    report: CheckReport,
    json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

/// Run `f`, clearing the last error first and turning panics into
/// [`ReeStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), (ReeStatus, String)>) -> ReeStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ReeStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ReeStatus::Panic
        }
    }
}

fn field_status(e: FieldError) -> (ReeStatus, String) {
    let status = match e {
        FieldError::UnsupportedDegree(_) | FieldError::Reducible(_) => ReeStatus::UnsupportedField,
        FieldError::OutOfRange { .. } => ReeStatus::OutOfRange,
        FieldError::ZeroInverse => ReeStatus::DivisionByZero,
        FieldError::BadLength { .. } | FieldError::BadCoefficient(_) => ReeStatus::InvalidArgument,
    };
    (status, e.to_string())
}

fn null() -> (ReeStatus, String) {
    (ReeStatus::NullPointer, "null pointer argument".into())
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, (ReeStatus, String)> {
    p.as_ref().ok_or_else(null)
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, (ReeStatus, String)> {
    p.as_mut().ok_or_else(null)
}

fn element(f: &FieldContext, i: u32) -> Result<FieldElement, (ReeStatus, String)> {
    f.element(i).map_err(field_status)
}

fn triple_in(f: &FieldContext, t: &ReeTriple) -> Result<Triple<FieldElement>, (ReeStatus, String)> {
    Ok(Triple::new(
        element(f, t.a)?,
        element(f, t.b)?,
        element(f, t.c)?,
    ))
}

fn triple_out(t: &Triple<FieldElement>) -> ReeTriple {
    ReeTriple {
        a: t.a.index(),
        b: t.b.index(),
        c: t.c.index(),
    }
}

fn point_in(f: &FieldContext, p: &ReePoint) -> Result<MoufangPoint, (ReeStatus, String)> {
    if p.is_infinity != 0 {
        Ok(MoufangPoint::Infinity)
    } else {
        triple_in(f, &p.g).map(MoufangPoint::Finite)
    }
}

fn point_out(p: &MoufangPoint) -> ReePoint {
    match p {
        MoufangPoint::Infinity => ReePoint {
            is_infinity: 1,
            g: ReeTriple::default(),
        },
        MoufangPoint::Finite(g) => ReePoint {
            is_infinity: 0,
            g: triple_out(g),
        },
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn ree_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Create `GF(3^m)` for `m` in 1, 3, 5, 7.
///
/// # Safety
/// `out_field` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn ree_field_new(m: u32, out_field: *mut *mut ReeField) -> ReeStatus {
    guard(|| {
        let slot = out(out_field)?;
        let f = make_field(m).map_err(field_status)?;
        *slot = Box::into_raw(Box::new(ReeField(Arc::new(f))));
        Ok(())
    })
}

/// # Safety
/// `field` must come from [`ree_field_new`] and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ree_field_free(field: *mut ReeField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// `q`, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ree_field_order(field: *const ReeField) -> u32 {
    field.as_ref().map_or(0, |f| f.0.order())
}

/// The binary field operations.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReeFieldOp {
    Add = 0,
    Sub = 1,
    Mul = 2,
    Div = 3,
}

/// `out = x op y`.
///
/// # Safety
/// `field` must be a live handle and `out_value` writable.
#[no_mangle]
pub unsafe extern "C" fn ree_field_binary(
    field: *const ReeField,
    op: ReeFieldOp,
    x: u32,
    y: u32,
    out_value: *mut u32,
) -> ReeStatus {
    guard(|| {
        let f = &deref(field)?.0;
        let slot = out(out_value)?;
        let (x, y) = (element(f, x)?, element(f, y)?);
        let z = match op {
            ReeFieldOp::Add => f.add(x, y),
            ReeFieldOp::Sub => f.sub(x, y),
            ReeFieldOp::Mul => f.mul(x, y),
            ReeFieldOp::Div => f.div(x, y).map_err(field_status)?,
        };
        *slot = z.index();
        Ok(())
    })
}

/// `out = x^θ`.
///
/// # Safety
/// `field` must be a live handle and `out_value` writable.
#[no_mangle]
pub unsafe extern "C" fn ree_field_theta(
    field: *const ReeField,
    x: u32,
    out_value: *mut u32,
) -> ReeStatus {
    guard(|| {
        let f = &deref(field)?.0;
        let slot = out(out_value)?;
        *slot = f.theta(element(f, x)?).index();
        Ok(())
    })
}

/// The group `U` over `field`. The field handle may be freed afterwards.
///
/// # Safety
/// `field` must be a live handle and `out_group` writable.
#[no_mangle]
pub unsafe extern "C" fn ree_group_new(
    field: *const ReeField,
    out_group: *mut *mut ReeGroup,
) -> ReeStatus {
    guard(|| {
        let f = deref(field)?.0.clone();
        let slot = out(out_group)?;
        *slot = Box::into_raw(Box::new(ReeGroup {
            group: CoreGroup::new(f.clone()),
            hexagon: Hexagon::new(f),
        }));
        Ok(())
    })
}

/// # Safety
/// `group` must come from [`ree_group_new`] and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ree_group_free(group: *mut ReeGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// `out = g h`.
///
/// # Safety
/// Pointers must be valid; `out_product` writable.
#[no_mangle]
pub unsafe extern "C" fn ree_group_mul(
    group: *const ReeGroup,
    g: *const ReeTriple,
    h: *const ReeTriple,
    out_product: *mut ReeTriple,
) -> ReeStatus {
    guard(|| {
        let grp = &deref(group)?.group;
        let (g, h) = (
            triple_in(grp.field(), deref(g)?)?,
            triple_in(grp.field(), deref(h)?)?,
        );
        *out(out_product)? = triple_out(&grp.u_mul(&g, &h));
        Ok(())
    })
}

/// `out = g⁻¹`.
///
/// # Safety
/// Pointers must be valid; `out_inverse` writable.
#[no_mangle]
pub unsafe extern "C" fn ree_group_inv(
    group: *const ReeGroup,
    g: *const ReeTriple,
    out_inverse: *mut ReeTriple,
) -> ReeStatus {
    guard(|| {
        let grp = &deref(group)?.group;
        let g = triple_in(grp.field(), deref(g)?)?;
        *out(out_inverse)? = triple_out(&grp.u_inv(&g));
        Ok(())
    })
}

/// The norm `N(g)` and the auxiliary `v(g)`, `u(g)`. Any output pointer may
/// be null.
///
/// # Safety
/// `group` and `g` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ree_group_norm(
    group: *const ReeGroup,
    g: *const ReeTriple,
    out_norm: *mut u32,
    out_v: *mut u32,
    out_u: *mut u32,
) -> ReeStatus {
    guard(|| {
        let grp = &deref(group)?.group;
        let g = triple_in(grp.field(), deref(g)?)?;
        let aux = grp.aux_uvw(&g);
        for (p, x) in [(out_norm, aux.w), (out_v, aux.v), (out_u, aux.u)] {
            if let Some(slot) = p.as_mut() {
                *slot = x.index();
            }
        }
        Ok(())
    })
}

/// `out = ω(p)`, by the closed formula or through the hexagon.
///
/// # Safety
/// Pointers must be valid; `out_point` writable.
#[no_mangle]
pub unsafe extern "C" fn ree_group_omega(
    group: *const ReeGroup,
    p: *const ReePoint,
    via: ReeOmegaVia,
    out_point: *mut ReePoint,
) -> ReeStatus {
    guard(|| {
        let g = deref(group)?;
        let p = point_in(g.group.field(), deref(p)?)?;
        let image = match via {
            ReeOmegaVia::Formula => g.group.omega_apply(&p),
            ReeOmegaVia::Hexagon => g.hexagon.omega_hex(&p),
        }
        .map_err(|e| (ReeStatus::InvariantViolation, e.to_string()))?;
        *out(out_point)? = point_out(&image);
        Ok(())
    })
}

/// Run the verification suite over the field orders `fields[0..n_fields]`.
/// A report is produced even when checks fail; see [`ree_report_passed`].
///
/// # Safety
/// `fields` must point to `n_fields` values; `out_report` writable.
#[no_mangle]
pub unsafe extern "C" fn ree_verify(
    fields: *const u32,
    n_fields: usize,
    seed: u64,
    samples: u64,
    slow: u8,
    out_report: *mut *mut ReeReport,
) -> ReeStatus {
    guard(|| {
        if fields.is_null() && n_fields > 0 {
            return Err(null());
        }
        let slot = out(out_report)?;
        let orders = if n_fields == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(fields, n_fields).to_vec()
        };
        if let Some(q) = orders
            .iter()
            .find(|&&q| verify::degree_of_order(q).is_none())
        {
            return Err((
                ReeStatus::UnsupportedField,
                format!("unsupported field order {q}"),
            ));
        }
        if samples == 0 {
            return Err((
                ReeStatus::InvalidArgument,
                "samples must be positive".into(),
            ));
        }
        let report = verify::run_suite(&SuiteConfig {
            fields: orders,
            sampling: Sampling { seed, samples },
            slow: slow != 0,
            mutation: None,
        });
        let json = CString::new(report.to_json().to_string()).expect("JSON has no NUL bytes");
        *slot = Box::into_raw(Box::new(ReeReport { report, json }));
        Ok(())
    })
}

/// # Safety
/// `report` must come from [`ree_verify`] and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ree_report_free(report: *mut ReeReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// 1 if every check passed, 0 otherwise (including a null handle).
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ree_report_passed(report: *const ReeReport) -> u8 {
    report.as_ref().map_or(0, |r| r.report.passed() as u8)
}

/// Number of checks in the report, or 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ree_report_check_count(report: *const ReeReport) -> usize {
    report.as_ref().map_or(0, |r| r.report.checks().len())
}

/// Number of failed checks, or 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ree_report_failure_count(report: *const ReeReport) -> usize {
    report.as_ref().map_or(0, |r| r.report.failures().count())
}

/// The report as JSON, owned by the report handle.
///
/// # Safety
/// `report` must be null or a live handle. Returns null for null.
#[no_mangle]
pub unsafe extern "C" fn ree_report_json(report: *const ReeReport) -> *const c_char {
    report.as_ref().map_or(ptr::null(), |r| r.json.as_ptr())
}

/// Closure of `⟨U, ω, h⟩` at `q = 3`. Writes 0 to `out_order` when the
/// closure passes four times the expected order.
///
/// # Safety
/// Output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn ree_closure_q3(
    side: ReeSide,
    out_order: *mut u64,
    out_derived: *mut u64,
) -> ReeStatus {
    guard(|| {
        let (order, derived) = (out(out_order)?, out(out_derived)?);
        let field = Arc::new(make_field(1).map_err(field_status)?);
        let side = match side {
            ReeSide::Right => Side::Right,
            ReeSide::Left => Side::Left,
        };
        let data = closure::closure_data(&CoreGroup::new(field), side, 4 * 1512)
            .map_err(|e| (ReeStatus::InvariantViolation, e.to_string()))?;
        let (o, d) = data.map_or((0, 0), |d| (d.order as u64, d.derived as u64));
        *order = o;
        *derived = d;
        Ok(())
    })
}

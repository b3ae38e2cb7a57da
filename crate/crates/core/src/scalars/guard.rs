use std::cell::Cell;
use std::panic::{self, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering};

use super::ScalarError;

/// Default bound on the number of nonzero terms in any intermediate polynomial.
pub const DEFAULT_TERM_BOUND: usize = 10_000;

static TERM_BOUND: AtomicUsize = AtomicUsize::new(DEFAULT_TERM_BOUND);

thread_local! {
    static LOCAL_BOUND: Cell<Option<usize>> = const { Cell::new(None) };
}

/// Panic payload raised when a polynomial exceeds the term bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TermBoundExceeded {
    pub terms: usize,
    pub bound: usize,
}

pub fn set_term_bound(bound: usize) {
    TERM_BOUND.store(bound, Ordering::Relaxed);
}

pub fn term_bound() -> usize {
    LOCAL_BOUND.with(|b| b.get()).unwrap_or_else(|| TERM_BOUND.load(Ordering::Relaxed))
}

/// Runs `f` on the current thread with a temporary term bound.
pub fn with_term_bound<T>(bound: usize, f: impl FnOnce() -> T) -> T {
    let prev = LOCAL_BOUND.with(|b| b.replace(Some(bound)));
    let out = panic::catch_unwind(AssertUnwindSafe(f));
    LOCAL_BOUND.with(|b| b.set(prev));
    match out {
        Ok(v) => v,
        Err(p) => panic::resume_unwind(p),
    }
}

pub(crate) fn check_terms(terms: usize) {
    let bound = term_bound();
    if terms > bound {
        panic::panic_any(TermBoundExceeded { terms, bound });
    }
}

/// Runs `f`, converting a term-bound overflow anywhere inside it into
/// [`ScalarError::ResourceExhausted`]. Other panics propagate unchanged.
pub fn guarded<T>(f: impl FnOnce() -> T) -> Result<T, ScalarError> {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(v) => Ok(v),
        Err(payload) => match payload.downcast::<TermBoundExceeded>() {
            Ok(e) => Err(ScalarError::ResourceExhausted { terms: e.terms, bound: e.bound }),
            Err(other) => panic::resume_unwind(other),
        },
    }
}

/// Installs a panic hook that stays silent for term-bound overflows.
pub fn quiet_term_bound_panics() {
    let prev = panic::take_hook();
    panic::set_hook(Box::new(move |info| {
        if info.payload().downcast_ref::<TermBoundExceeded>().is_none() {
            prev(info);
        }
    }));
}

//! Values that have passed their own validation.
//!
//! Constructors never validate on their own, so deliberately broken inputs
//! stay representable. Operations whose results are only meaningful on valid
//! data take a `Verified<T>` instead.

use std::ops::Deref;

use crate::report::Report;
use crate::sampling::CheckConfig;

pub trait Validate {
    fn validate(&self, cfg: &CheckConfig) -> Report;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verified<T> {
    inner: T,
}

impl<T: Validate> Verified<T> {
    /// Validates `value`; the failing report is returned on error.
    pub fn new(value: T, cfg: &CheckConfig) -> Result<Self, Box<Report>> {
        let report = value.validate(cfg);
        if report.passed() {
            Ok(Verified { inner: value })
        } else {
            Err(Box::new(report))
        }
    }
}

impl<T> Verified<T> {
    pub fn into_inner(self) -> T {
        self.inner
    }
}

impl<T> Deref for Verified<T> {
    type Target = T;

    fn deref(&self) -> &T {
        &self.inner
    }
}

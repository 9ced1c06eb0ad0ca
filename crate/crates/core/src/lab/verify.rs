//! Checking that an element of `H^0` is a relation, either by evaluating the
//! modified sums or by reducing to the `>= 2` normal form.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::WordCombo;
use crate::expand::Expander;
use crate::sums::eval_z_dia;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `Z_N(combo) = 0` for every `N` in `1..=n_max`.
    DiaEval { n_max: u64 },
    /// The normal form of `combo` vanishes.
    NormalForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    /// `None` for the normal-form check.
    pub n: Option<u64>,
    pub ok: bool,
    /// The nonzero value or normal form, or the error, when `ok` is false.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

pub fn verify(combo: &WordCombo, mode: Mode, ex: &mut Expander) -> Report {
    let mut checks = Vec::new();
    match mode {
        Mode::DiaEval { n_max } => {
            for n in 1..=n_max {
                let (ok, witness) = match eval_z_dia(combo, n) {
                    Ok(v) if v.is_zero() => (true, None),
                    Ok(v) => (false, Some(v.to_string())),
                    Err(e) => (false, Some(e.to_string())),
                };
                checks.push(Check { n: Some(n), ok, witness });
            }
        }
        Mode::NormalForm => {
            let (ok, witness) = match ex.normal_form(combo) {
                Ok(nf) if nf.is_zero() => (true, None),
                Ok(nf) => (false, Some(nf.to_string())),
                Err(e) => (false, Some(e.to_string())),
            };
            checks.push(Check { n: None, ok, witness });
        }
    }
    Report { checks }
}

//! Built-in copies of the data files under `fixtures/`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::rep::format::ModuleText;
use crate::rep::Module;

use super::files::parse_algebra;

macro_rules! fixture_files {
    ($($name:literal),* $(,)?) => {
        pub const FILES: &[(&str, &str)] = &[$(($name, include_str!(concat!("../../fixtures/", $name)))),*];
    };
}

fixture_files!(
    "two_cycle.alg",
    "a2.alg",
    "dual_numbers.alg",
    "a3_zero.alg",
    "a4.alg",
    "a4_one_zero.alg",
    "a4_two_zeros.alg",
    "auslander.alg",
    "auslander_endo.alg",
    "auslander_endo_full.alg",
    "two_cycle_s2_p2.mod",
    "a3_zero_tilting.mod",
    "a4_tilting.mod",
    "a4_one_zero_tilting.mod",
    "a4_one_zero_s2.mod",
    "auslander_m.mod",
    "auslander_tau_tilting.mod",
);

pub fn text(name: &str) -> Result<&'static str> {
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Io(std::io::Error::new(std::io::ErrorKind::NotFound, format!("no fixture {name}"))))
}

pub fn algebra(name: &str) -> Result<Algebra> {
    parse_algebra(text(name)?)
}

/// A fixture module together with the algebra named in its header.
pub fn module(name: &str) -> Result<Module> {
    let mt = ModuleText::parse(text(name)?)?;
    let alg = algebra(&mt.algebra_path)?;
    mt.build(&alg)
}

/// A fixture module read over the given algebra.
pub fn module_over(name: &str, algebra: &Algebra) -> Result<Module> {
    ModuleText::parse(text(name)?)?.build(algebra)
}

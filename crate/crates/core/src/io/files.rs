use std::path::{Path, PathBuf};

use crate::algebra::{build_algebra, Algebra, QuiverPresentation};
use crate::error::Result;
use crate::rep::format::ModuleText;
use crate::rep::Module;

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    build_algebra(&QuiverPresentation::parse(text)?)
}

pub fn load_algebra(path: &Path) -> Result<Algebra> {
    parse_algebra(&std::fs::read_to_string(path)?)
}

/// Loads a module file; its `module over` path is resolved relative to the file.
pub fn load_module(path: &Path) -> Result<(Module, PathBuf)> {
    let text = ModuleText::parse(&std::fs::read_to_string(path)?)?;
    let alg_path = path.parent().unwrap_or(Path::new(".")).join(&text.algebra_path);
    let alg = load_algebra(&alg_path)?;
    Ok((text.build(&alg)?, alg_path))
}

/// Loads a module file over an already loaded algebra, ignoring its header path.
pub fn load_module_over(path: &Path, algebra: &Algebra) -> Result<Module> {
    ModuleText::parse(&std::fs::read_to_string(path)?)?.build(algebra)
}

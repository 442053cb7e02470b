use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A polynomial ring over the rationals, identified by its ordered variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    variables: Vec<String>,
}

pub type RingRef = Arc<Ring>;

/// Reserved name of the auxiliary variable adjoined during elimination.
/// It can never be declared by users since `@` is not an identifier character.
pub const AUX_VARIABLE: &str = "@w";

pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ring> {
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        let mut variables: Vec<String> = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("`{name}` is not a valid variable name")));
            }
            if variables.iter().any(|v| v == name) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
            variables.push(name.to_string());
        }
        Ok(Ring { variables })
    }

    pub fn shared<S: AsRef<str>>(names: &[S]) -> Result<RingRef> {
        Ring::new(names).map(Arc::new)
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn name(&self, index: usize) -> &str {
        &self.variables[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self} vs {other}")))
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.variables.join(","))
    }
}

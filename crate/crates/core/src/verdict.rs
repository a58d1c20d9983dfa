use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Outcome of checking a statement on one instance: a witness, or a
/// description of how the instance contradicts it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "lowercase")]
pub enum Check<W> {
    Holds(W),
    Falsified(String),
}

impl<W> Check<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Check::Holds(w) => Some(w),
            Check::Falsified(_) => None,
        }
    }

    /// Turns a falsification into [`Error::Certification`].
    pub fn into_result(self) -> Result<W> {
        match self {
            Check::Holds(w) => Ok(w),
            Check::Falsified(msg) => Err(Error::Certification(msg)),
        }
    }
}

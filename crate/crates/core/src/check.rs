//! Named statement checks collected into reports.

use serde::{Deserialize, Serialize};

/// One checked statement. `applies` records whether its premise held for
/// the inputs; a statement that does not apply is vacuously satisfied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub applies: bool,
    pub holds: bool,
    pub detail: String,
}

impl Clause {
    pub fn fired(name: &str, holds: bool, detail: impl Into<String>) -> Clause {
        Clause { name: name.into(), applies: true, holds, detail: detail.into() }
    }

    pub fn skipped(name: &str, detail: impl Into<String>) -> Clause {
        Clause { name: name.into(), applies: false, holds: true, detail: detail.into() }
    }

    pub fn when(name: &str, premise: bool, holds: bool, detail: impl Into<String>) -> Clause {
        if premise {
            Clause::fired(name, holds, detail)
        } else {
            Clause::skipped(name, detail)
        }
    }
}

pub fn all_hold(clauses: &[Clause]) -> bool {
    clauses.iter().all(|c| c.holds)
}

//! The one shape every module error is funneled into before printing.
//!
//! A failure renders as `error: <Name>: <message>` on standard output and
//! decides the exit code: 2 for grammar-level problems (the input text never
//! parsed), 1 for domain problems (the inputs parsed but the mathematics
//! refused). The names come from each module's own `name()` so scripts can
//! match on them without parsing prose.

use gross_deriv::DerivError;
use gross_expr::ExprError;
use gross_series::SeriesError;
use gross_topo::TopoError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub name: &'static str,
    pub message: String,
    pub syntax: bool,
}

impl Failure {
    /// A grammar-level failure of the CLI's own little languages (grid
    /// triples, side names, point kinds, knob values).
    pub fn syntax(message: impl Into<String>) -> Failure {
        Failure {
            name: "SyntaxError",
            message: message.into(),
            syntax: true,
        }
    }

    /// A filesystem failure while reading an input file.
    pub fn io(message: impl Into<String>) -> Failure {
        Failure {
            name: "Io",
            message: message.into(),
            syntax: false,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.syntax {
            2
        } else {
            1
        }
    }

    pub fn render(&self) -> String {
        format!("error: {}: {}", self.name, self.message)
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Failure {
        Failure {
            name: e.name(),
            syntax: e.is_syntax(),
            message: e.to_string(),
        }
    }
}

impl From<SeriesError> for Failure {
    fn from(e: SeriesError) -> Failure {
        Failure {
            name: e.name(),
            message: e.to_string(),
            syntax: false,
        }
    }
}

impl From<TopoError> for Failure {
    fn from(e: TopoError) -> Failure {
        Failure {
            name: e.name(),
            message: e.to_string(),
            syntax: false,
        }
    }
}

impl From<DerivError> for Failure {
    fn from(e: DerivError) -> Failure {
        Failure {
            name: e.name(),
            message: e.to_string(),
            syntax: false,
        }
    }
}

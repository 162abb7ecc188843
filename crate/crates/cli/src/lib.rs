//! Command-line front end for `gsym-core`: space specifications, report
//! rendering and the `compute`, `table` and `list` commands.

pub mod output;
pub mod spec;

use gsym_core::embedding::catalog;
use gsym_core::homotopy::{report, symmetric_instances, Method, MethodReport};
use gsym_core::Error;
use rayon::prelude::*;

pub use spec::{parse_generic, parse_space};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const DISAGREEMENT: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const COMPUTATION: i32 = 3;
}

/// Rendered output plus the process exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

fn failure(e: &Error) -> Outcome {
    let status = match e {
        Error::Parse { .. }
        | Error::ParameterOutOfRange(_)
        | Error::InvalidDescriptor(_)
        | Error::InvalidRank { .. } => exit::INPUT,
        _ => exit::COMPUTATION,
    };
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        status,
    }
}

pub fn compute(spec: &str, method: Method, format: Format) -> Outcome {
    let r = match parse_space(spec).and_then(|sp| report(&sp, method)) {
        Ok(r) => r,
        Err(e) => return failure(&e),
    };
    let stdout = match format {
        Format::Json => output::to_json_string(&output::report_json(&r)) + "\n",
        Format::Text => output::report_text(&r, true) + "\n",
    };
    let status = if r.agreement == Some(false) {
        exit::DISAGREEMENT
    } else {
        exit::OK
    };
    Outcome {
        stdout,
        stderr: String::new(),
        status,
    }
}

/// All tabulated instances up to `max_rank`, computed in parallel and
/// returned in catalog order.
pub fn table_reports(max_rank: u32) -> Vec<(&'static str, MethodReport)> {
    symmetric_instances(max_rank)
        .into_par_iter()
        .map(|row| {
            (
                row.family,
                report(&row.space, row.method()).expect("catalog spaces are valid"),
            )
        })
        .collect()
}

pub fn table(max_rank: u32, format: Format) -> Outcome {
    if max_rank < 2 {
        return failure(&Error::ParameterOutOfRange(format!(
            "--max-rank {max_rank} (need at least 2)"
        )));
    }
    let reports = table_reports(max_rank);
    let status = if reports.iter().any(|(_, r)| r.agreement == Some(false)) {
        exit::DISAGREEMENT
    } else {
        exit::OK
    };
    let stdout = match format {
        Format::Json => {
            let docs: Vec<_> = reports.iter().map(|(_, r)| output::report_json(r)).collect();
            output::to_json_string(&serde_json::Value::Array(docs)) + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            let mut last_family = "";
            for (fam, r) in &reports {
                if *fam != last_family {
                    s.push_str(&format!("{fam}\n"));
                    last_family = fam;
                }
                s.push_str(&format!("  {}\n", output::report_text(r, false)));
            }
            s
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        status,
    }
}

pub fn list() -> Outcome {
    let mut s = String::new();
    for f in catalog() {
        s.push_str(f.name);
        if !f.range.is_empty() {
            s.push_str(&format!(" ({})", f.range));
        }
        if f.theorem_only {
            s.push_str(" [theorem only]");
        }
        s.push('\n');
    }
    Outcome {
        stdout: s,
        stderr: String::new(),
        status: exit::OK,
    }
}

//! Batch analysis of braid files in numeric form, one braid per line.

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::cache::Cache;
use crate::error::Result;
use crate::report::{analyze, ReportRecord};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BatchLine {
    Ok {
        line: usize,
        #[serde(flatten)]
        record: ReportRecord,
    },
    Failed {
        line: usize,
        error: String,
        message: String,
    },
}

/// Analyses every non-blank line not starting with `#`. Results keep input
/// order; a bad line yields an error record and the batch carries on.
pub fn run_batch(text: &str, cache: Option<&Cache>) -> Vec<BatchLine> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    lines
        .par_iter()
        .map(|&(line, text)| {
            let outcome = BraidWord::parse_numeric(text).and_then(|w| match cache {
                Some(c) => c.get_or_compute(&w).map(|(r, _)| r),
                None => analyze(&w),
            });
            match outcome {
                Ok(record) => BatchLine::Ok { line, record },
                Err(e) => BatchLine::Failed { line, error: e.code().to_string(), message: e.to_string() },
            }
        })
        .collect()
}

pub fn run_batch_file(path: &Path, cache: Option<&Cache>) -> Result<Vec<BatchLine>> {
    let text = std::fs::read_to_string(path)?;
    Ok(run_batch(&text, cache))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_keep_order_and_errors() {
        let out = run_batch("6: 2 2 4 1 3 5 2\n\n# comment\n4: 2 x\n4: 2 -1 2 2 3\n3: 1 2\n", None);
        assert_eq!(out.len(), 4);
        assert!(matches!(&out[0], BatchLine::Ok { line: 1, record } if record.components == 1));
        assert!(matches!(&out[1], BatchLine::Failed { line: 4, error, .. } if error == "SyntaxError"));
        assert!(matches!(&out[2], BatchLine::Ok { line: 5, record } if record.strands == 4));
        assert!(matches!(&out[3], BatchLine::Failed { line: 6, error, .. } if error == "OddStrands"));
    }

    #[test]
    fn missing_file() {
        assert!(run_batch_file(Path::new("/nonexistent/braids.txt"), None).is_err());
    }
}

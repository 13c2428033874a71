//! Edge-list, motif-file, CSV and JSON input and output.

use std::fs;
use std::path::Path;

use motifcorr_core::motif::MotifFamily;
use motifcorr_core::roc::RocCurve;
use motifcorr_core::SimpleGraph;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::experiments::{Bin, Scores};

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        }
    }
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

fn format_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Format {
        path: path.into(),
        message: e.to_string(),
    }
}

/// Loads a graph in the edge-list format of [`SimpleGraph::parse_edge_list`].
pub fn load_edge_list(path: &Path) -> Result<SimpleGraph> {
    SimpleGraph::parse_edge_list(&read_text(path)?).map_err(|e| format_err(path, e))
}

pub fn load_family(path: &Path) -> Result<MotifFamily> {
    MotifFamily::parse_text(&read_text(path)?).map_err(|e| format_err(path, e))
}

fn csv_writer(path: &Path) -> Result<csv::Writer<fs::File>> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        }
    }
    csv::Writer::from_path(path).map_err(|e| csv_err(path, e))
}

fn csv_err(path: &Path, e: csv::Error) -> Error {
    if e.is_io_error() {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::io(path, io),
            _ => unreachable!("checked io kind"),
        }
    } else {
        format_err(path, e)
    }
}

#[derive(Serialize, serde::Deserialize)]
struct ScoreRow {
    trial: usize,
    hypothesis: String,
    statistic: f64,
}

/// `trial,hypothesis,statistic` with hypotheses `h0` and `h1`.
pub fn write_scores_csv(path: &Path, s: &Scores) -> Result<()> {
    let mut w = csv_writer(path)?;
    for (hyp, values) in [("h0", &s.h0), ("h1", &s.h1)] {
        for (trial, &statistic) in values.iter().enumerate() {
            w.serialize(ScoreRow {
                trial,
                hypothesis: hyp.into(),
                statistic,
            })
            .map_err(|e| csv_err(path, e))?;
        }
    }
    w.flush().map_err(|e| Error::io(path, e))
}

pub fn read_scores_csv(path: &Path) -> Result<Scores> {
    let mut r = csv::Reader::from_path(path).map_err(|e| csv_err(path, e))?;
    let mut s = Scores {
        h0: Vec::new(),
        h1: Vec::new(),
    };
    for row in r.deserialize() {
        let row: ScoreRow = row.map_err(|e| csv_err(path, e))?;
        match row.hypothesis.as_str() {
            "h0" => s.h0.push(row.statistic),
            "h1" => s.h1.push(row.statistic),
            other => return Err(format_err(path, format!("unknown hypothesis {other:?}"))),
        }
    }
    Ok(s)
}

/// `threshold,fpr,tpr`, infinite thresholds written as `inf` and `-inf`.
pub fn write_roc_csv(path: &Path, roc: &RocCurve) -> Result<()> {
    let mut w = csv_writer(path)?;
    w.write_record(["threshold", "fpr", "tpr"])
        .map_err(|e| csv_err(path, e))?;
    for p in &roc.points {
        w.write_record([p.threshold.to_string(), p.fpr.to_string(), p.tpr.to_string()])
            .map_err(|e| csv_err(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

pub fn write_histogram_csv(path: &Path, bins: &[Bin]) -> Result<()> {
    let mut w = csv_writer(path)?;
    for b in bins {
        w.serialize(b).map_err(|e| csv_err(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("summaries serialize");
    text.push('\n');
    write_text(path, &text)
}

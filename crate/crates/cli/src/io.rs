//! File formats: network JSON, tableau JSON, and versioned CSV.
//!
//! Network JSON is the interchange unit for every command:
//! `{"n": int, "swaps": [int, …], "metadata": {…}}`, swap locations
//! one-based. Readers accept objects with or without the metadata block.
//!
//! CSV files carry two comment lines before the header row:
//! `# schema: <name> v<schema-version> artifact=<artifact-version>` and
//! `# metadata: <json>`. Floats are printed with 17 significant digits so
//! every value round-trips exactly.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use sortnet_core::perm::SortingNetwork;

use crate::metadata::{RunMetadata, ARTIFACT_VERSION, CSV_SCHEMA_VERSION};

/// Round-trip-safe float formatting (17 significant digits).
pub fn format_float(x: f64) -> String {
    format!("{:.16e}", x)
}

#[derive(Serialize, Deserialize)]
struct NetworkFile {
    n: usize,
    swaps: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    metadata: Option<RunMetadata>,
}

pub fn write_network(path: &Path, w: &SortingNetwork, metadata: RunMetadata) -> Result<()> {
    let file = NetworkFile {
        n: w.n(),
        swaps: w.swaps().to_vec(),
        metadata: Some(metadata),
    };
    let mut out = serde_json::to_string_pretty(&file)?;
    out.push('\n');
    fs::write(path, out).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn read_network(path: &Path) -> Result<SortingNetwork> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: NetworkFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    SortingNetwork::new(file.n, file.swaps)
        .with_context(|| format!("{} does not contain a valid sorting network", path.display()))
}

/// Buffered writer for one versioned CSV file.
pub struct CsvWriter {
    out: BufWriter<fs::File>,
}

impl CsvWriter {
    pub fn create(
        path: &Path,
        schema: &str,
        columns: &[&str],
        metadata: &RunMetadata,
    ) -> Result<Self> {
        let file =
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        let mut out = BufWriter::new(file);
        writeln!(
            out,
            "# schema: {} v{} artifact={}",
            schema, CSV_SCHEMA_VERSION, ARTIFACT_VERSION
        )?;
        writeln!(out, "# metadata: {}", serde_json::to_string(metadata)?)?;
        writeln!(out, "{}", columns.join(","))?;
        Ok(CsvWriter { out })
    }

    pub fn row(&mut self, fields: &[CsvField]) -> Result<()> {
        let mut first = true;
        for field in fields {
            if !first {
                write!(self.out, ",")?;
            }
            first = false;
            match field {
                CsvField::Int(v) => write!(self.out, "{}", v)?,
                CsvField::Float(v) => write!(self.out, "{}", format_float(*v))?,
            }
        }
        writeln!(self.out)?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        self.out.flush()?;
        Ok(())
    }
}

pub enum CsvField {
    Int(i64),
    Float(f64),
}

/// Check the schema line of a CSV produced by this harness; errors on a
/// schema or artifact version mismatch.
pub fn validate_csv_schema(path: &Path, expected_schema: &str) -> Result<()> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let first = text.lines().next().unwrap_or_default();
    let want = format!(
        "# schema: {} v{} artifact={}",
        expected_schema, CSV_SCHEMA_VERSION, ARTIFACT_VERSION
    );
    if first != want {
        bail!(
            "schema mismatch in {}: found {:?}, expected {:?}",
            path.display(),
            first,
            want
        );
    }
    Ok(())
}

/// Exact rational rendered as numerator/denominator strings plus a float.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
    pub float: f64,
}

impl RationalJson {
    pub fn from_rational(q: &num_rational::BigRational) -> Self {
        RationalJson {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
            float: rational_to_f64(q),
        }
    }
}

/// Float value of a big rational, stable far beyond `f64` integer range.
pub fn rational_to_f64(q: &num_rational::BigRational) -> f64 {
    use num_traits::{Signed, Zero};
    if q.is_zero() {
        return 0.0;
    }
    let sign = if q.is_negative() { -1.0 } else { 1.0 };
    sign * sortnet_core::counting::ln_rational(&q.abs()).exp()
}

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use semikit::semimodule::SemiMatrix;
use semikit::NonnegScalar;

use crate::CliError;

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// JSON rows, or CSV with one row per line when the extension is `.csv`.
pub fn read_matrix(path: &Path) -> Result<SemiMatrix, CliError> {
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_path(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let row = record
                .iter()
                .map(str::parse::<NonnegScalar>)
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        return Ok(SemiMatrix::from_rows(rows)?);
    }
    read_json(path)
}

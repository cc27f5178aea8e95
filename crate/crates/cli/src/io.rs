//! JSON matrix and region files.

use std::fs;
use std::path::Path;

use hrnr_core::{Matrix, RangeReport, C64};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// `{"dim": n, "data": [[[re, im], ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub data: Vec<Vec<[f64; 2]>>,
}

impl MatrixFile {
    pub fn from_matrix(t: &Matrix) -> Self {
        let data = (0..t.rows())
            .map(|i| t.row(i).iter().map(|z| [z.re, z.im]).collect())
            .collect();
        MatrixFile {
            dim: t.rows(),
            data,
        }
    }

    /// Square, finite, `dim` rows. Shape errors come back as core errors.
    pub fn to_matrix(&self) -> Result<Matrix, CliError> {
        let rows = self
            .data
            .iter()
            .map(|r| r.iter().map(|&[re, im]| C64::new(re, im)).collect())
            .collect();
        let t = Matrix::from_rows(rows)?;
        t.require_square()?;
        if t.rows() != self.dim {
            return Err(CliError::Usage(format!(
                "dim = {} but data has {} rows",
                self.dim,
                t.rows()
            )));
        }
        Ok(t)
    }
}

pub fn read_matrix(path: &Path) -> Result<Matrix, CliError> {
    let text = fs::read_to_string(path)?;
    let file: MatrixFile = serde_json::from_str(&text)?;
    file.to_matrix()
}

pub fn write_matrix(path: &Path, t: &Matrix) -> Result<(), CliError> {
    write_json(path, &MatrixFile::from_matrix(t))
}

/// Serialised [`RangeReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionFile {
    pub tag: String,
    pub k: usize,
    pub angles: usize,
    pub vertices: Vec<[f64; 2]>,
    pub outer_error_bound: f64,
    /// `[θ_j, λ_k(H_{θ_j}) / 2]`.
    pub support_samples: Vec<[f64; 2]>,
}

impl RegionFile {
    pub fn from_report(rep: &RangeReport) -> Self {
        RegionFile {
            tag: rep.region.tag().to_string(),
            k: rep.k,
            angles: rep.angles,
            vertices: rep.region.vertices().iter().map(|z| [z.re, z.im]).collect(),
            outer_error_bound: rep.outer_error_bound,
            support_samples: rep.support_samples.iter().map(|&(t, b)| [t, b]).collect(),
        }
    }

    pub fn max_modulus(&self) -> Option<f64> {
        self.vertices
            .iter()
            .map(|&[re, im]| re.hypot(im))
            .reduce(f64::max)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    fs::write(path, to_json(value)?)?;
    Ok(())
}

pub fn read_region(path: &Path) -> Result<RegionFile, CliError> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

use std::path::PathBuf;

use thiserror::Error;

use crate::geometry::Region;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Reasons a PGM byte stream is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PgmError {
    #[error("bad magic number {0:?}, expected P5 or P2")]
    BadMagic(String),
    #[error("malformed header: {0}")]
    MalformedHeader(&'static str),
    #[error("invalid dimensions {width}x{height}")]
    InvalidDimensions { width: u64, height: u64 },
    #[error("unsupported maxval {0} (only 8-bit images are supported)")]
    UnsupportedMaxval(u32),
    #[error("truncated pixel data: expected {expected} samples, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("sample {value} at index {index} exceeds maxval {maxval}")]
    SampleOutOfRange { index: usize, value: u32, maxval: u32 },
}

/// Reasons a ground-truth annotation is rejected.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PointsError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("annotation declares no points")]
    Empty,
    #[error("point count mismatch: header says {declared}, found {found}")]
    CountMismatch { declared: usize, found: usize },
    #[error("non-numeric coordinate {0:?}")]
    NonNumeric(String),
    #[error("point {index} at ({x}, {y}) lies outside the {width}x{height} image")]
    OutOfBounds { index: usize, x: f64, y: f64, width: usize, height: usize },
    #[error("index map refers to point {index} but only {count} points are present")]
    MissingIndex { index: usize, count: usize },
    #[error("inter-ocular distance is zero")]
    DegenerateEyes,
    #[error("invalid JSON annotation: {0}")]
    Json(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Pgm(#[from] PgmError),
    #[error(transparent)]
    Points(#[from] PointsError),
    #[error("raster of {width}x{height} needs {expected} pixels, got {found}")]
    PixelCount { width: usize, height: usize, expected: usize, found: usize },
    #[error("binary image pixel {index} has value {value}, expected 0 or 255")]
    NotBinary { index: usize, value: u8 },
    #[error("rectangle {x},{y} {w}x{h} does not fit inside {width}x{height}")]
    Bounds { x: usize, y: usize, w: usize, h: usize, width: usize, height: usize },
    #[error("{region} point ({x}, {y}) lies outside the {width}x{height} image")]
    PointOutOfBounds { region: &'static str, x: usize, y: usize, width: usize, height: usize },
    #[error("face of {width}x{height} is too small for the ROI layout (minimum 40x40)")]
    DegenerateLayout { width: usize, height: usize },
    #[error("invalid layout config for {region}: {reason}")]
    LayoutConfig { region: Region, reason: String },
    #[error("cannot build a cumulative histogram of an empty image")]
    EmptyImage,
    #[error("histogram covers {histogram} pixels but the image has {image}")]
    HistogramMismatch { histogram: u64, image: u64 },
    #[error("threshold {0} outside (0, 1]")]
    ThresholdRange(f64),
    #[error("no images were evaluated")]
    EmptyEvaluation,
    #[error("invalid sweep range: {0}")]
    SweepRange(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Config(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

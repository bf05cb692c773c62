//! Facial feature point extraction by cumulative-histogram thresholding.
//!
//! Given a grayscale image and a face box, six regions (both eyebrows, both
//! eyes, nose, mouth) are cropped and each is binarized by keeping the
//! darkest pixels whose cumulative histogram value stays under a per-region
//! threshold. Eyebrow, eye and mouth corners are the first white pixels of a
//! directional search; nostrils come from the last two connected components
//! of the nose region, and the nose tip is computed from them.
//!
//! ```
//! use chfeatures::{detect_features, roi_layout, LayoutConfig, ThresholdConfig};
//! use chfeatures::synth::SyntheticFace;
//!
//! let face = SyntheticFace::new(200, 200);
//! let layout = roi_layout(200, 200, &LayoutConfig::default()).unwrap();
//! let points = detect_features(&face.image, &layout, &ThresholdConfig::default()).unwrap();
//! assert_eq!(points.count(), 13);
//! ```
//!
//! Modules:
//! - [`raster`]: image types, PGM codec, cropping, marker overlays
//! - [`geometry`]: ROI placement inside the face box
//! - [`chfilter`]: histogram, cumulative histogram and threshold filtering
//! - [`detect`]: corner search, component labeling, nostrils, nose tip
//! - [`eval`]: annotations, hit matching, rate reports, threshold sweeps
//! - [`cli`]: the `chfeatures` command line front end

pub mod chfilter;
pub mod cli;
pub mod detect;
mod error;
pub mod eval;
pub mod geometry;
pub mod raster;
pub mod synth;

pub use chfilter::{binarize_roi, cumulative, filter_image, histogram, CumulativeHistogram, Histogram, ThresholdConfig};
pub use detect::{
    corner_search, detect_features, detect_features_with, find_components, nose_tip, select_nostrils, Contour,
    CornerPair, DetectOptions, FeaturePoints, NostrilPair, ScanOrder, SearchMode,
};
pub use error::{Error, PgmError, PointsError, Result};
pub use eval::{
    detection_rates, load_points_file, match_points, threshold_sweep, EvalConfig, EvalSample, GroundTruth, RateReport,
    RegionOutcome, Status, SweepTable,
};
pub use geometry::{roi_layout, LayoutConfig, Rect, Region, RoiLayout};
pub use raster::{crop, draw_markers, load_pgm, save_pgm, BinaryImage, GrayImage, Point};

//! Ground-truth ingestion, hit matching, detection-rate reports and
//! threshold sweeps.
//!
//! A detected point is a hit when it lies within `radius_frac` times the
//! inter-ocular distance of its reference point. Each of the six regions has
//! two points; an image scores "both", "single" or "none" per region.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chfilter::ThresholdConfig;
use crate::detect::{detect_features_with, detect_region, DetectOptions, FeaturePoints, RegionDetection, POINT_NAMES};
use crate::error::{Error, PointsError, Result};
use crate::geometry::{roi_layout, LayoutConfig, Rect, Region};
use crate::raster::{crop, load_pgm, GrayImage, Point};

pub const DEFAULT_RADIUS_FRAC: f64 = 0.15;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PointF {
    pub x: f64,
    pub y: f64,
}

impl PointF {
    pub const fn new(x: f64, y: f64) -> Self {
        PointF { x, y }
    }

    pub fn distance(self, other: PointF) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn midpoint(self, other: PointF) -> PointF {
        PointF::new((self.x + other.x) / 2.0, (self.y + other.y) / 2.0)
    }
}

impl From<Point> for PointF {
    fn from(p: Point) -> Self {
        PointF::new(p.x as f64, p.y as f64)
    }
}

/// Annotation index of each of the twelve points, in `POINT_NAMES` order.
///
/// The default follows the 20-point BioID markup, where "right" is the
/// subject's right. Nostril slots are matched by image side: the
/// `nostril_right` detection is taken from the image-right blob, which is
/// the subject's left nostril.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct IndexMap {
    pub eyebrow_right_outer: usize,
    pub eyebrow_right_inner: usize,
    pub eyebrow_left_inner: usize,
    pub eyebrow_left_outer: usize,
    pub eye_right_outer: usize,
    pub eye_right_inner: usize,
    pub eye_left_inner: usize,
    pub eye_left_outer: usize,
    pub mouth_right: usize,
    pub mouth_left: usize,
    pub nostril_right: usize,
    pub nostril_left: usize,
}

impl Default for IndexMap {
    fn default() -> Self {
        IndexMap {
            eyebrow_right_outer: 4,
            eyebrow_right_inner: 5,
            eyebrow_left_inner: 6,
            eyebrow_left_outer: 7,
            eye_right_outer: 9,
            eye_right_inner: 10,
            eye_left_inner: 11,
            eye_left_outer: 12,
            mouth_right: 2,
            mouth_left: 3,
            nostril_right: 16,
            nostril_left: 15,
        }
    }
}

impl IndexMap {
    pub fn as_array(&self) -> [usize; 12] {
        [
            self.eyebrow_right_outer,
            self.eyebrow_right_inner,
            self.eyebrow_left_inner,
            self.eyebrow_left_outer,
            self.eye_right_outer,
            self.eye_right_inner,
            self.eye_left_inner,
            self.eye_left_outer,
            self.mouth_right,
            self.mouth_left,
            self.nostril_right,
            self.nostril_left,
        ]
    }
}

/// Reference positions of the twelve points, in `POINT_NAMES` order.
#[derive(Debug, Clone, PartialEq)]
pub struct GroundTruth {
    pub points: [PointF; 12],
    pub inter_ocular: f64,
}

impl GroundTruth {
    /// Eye centers are the midpoints of each eye's two corners.
    pub fn new(points: [PointF; 12]) -> Result<Self, PointsError> {
        let right = points[4].midpoint(points[5]);
        let left = points[6].midpoint(points[7]);
        let inter_ocular = right.distance(left);
        if inter_ocular <= 0.0 || inter_ocular.is_nan() {
            return Err(PointsError::DegenerateEyes);
        }
        Ok(GroundTruth { points, inter_ocular })
    }

    pub fn point(&self, name: &str) -> Option<PointF> {
        POINT_NAMES.iter().position(|n| *n == name).map(|i| self.points[i])
    }

    /// The two reference points of a region, in `POINT_NAMES` order.
    pub fn region_points(&self, region: Region) -> [PointF; 2] {
        let base = region_base(region);
        [self.points[base], self.points[base + 1]]
    }

    pub fn offset(&self, dx: f64, dy: f64) -> GroundTruth {
        GroundTruth {
            points: self.points.map(|p| PointF::new(p.x + dx, p.y + dy)),
            inter_ocular: self.inter_ocular,
        }
    }
}

fn region_base(region: Region) -> usize {
    match region {
        Region::EyebrowRight => 0,
        Region::EyebrowLeft => 2,
        Region::EyeRight => 4,
        Region::EyeLeft => 6,
        Region::Mouth => 8,
        Region::Nose => 10,
    }
}

#[derive(Deserialize)]
struct JsonPoints {
    #[serde(default)]
    n_points: Option<usize>,
    points: Vec<[f64; 2]>,
}

/// Parse the raw coordinate list of an FGnet-style `.pts` file or its JSON
/// equivalent `{"n_points": n, "points": [[x, y], ...]}`.
pub fn parse_points(bytes: &[u8]) -> Result<Vec<PointF>, PointsError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| PointsError::MalformedHeader("file is not UTF-8 text".into()))?;
    let trimmed = text.trim_start();
    let (declared, points) = if trimmed.starts_with('{') {
        let parsed: JsonPoints =
            serde_json::from_str(trimmed).map_err(|e| PointsError::Json(e.to_string()))?;
        let points: Vec<PointF> = parsed.points.iter().map(|&[x, y]| PointF::new(x, y)).collect();
        (parsed.n_points.unwrap_or(points.len()), points)
    } else {
        parse_pts_text(text)?
    };
    if declared == 0 {
        return Err(PointsError::Empty);
    }
    if declared != points.len() {
        return Err(PointsError::CountMismatch { declared, found: points.len() });
    }
    Ok(points)
}

fn parse_pts_text(text: &str) -> Result<(usize, Vec<PointF>), PointsError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = |line: Option<&str>, key: &str| -> Result<String, PointsError> {
        let line = line.ok_or_else(|| PointsError::MalformedHeader(format!("missing {key}")))?;
        line.strip_prefix(key)
            .map(|v| v.trim().to_string())
            .ok_or_else(|| PointsError::MalformedHeader(format!("expected {key:?}, got {line:?}")))
    };
    header(lines.next(), "version:")?;
    let count = header(lines.next(), "n_points:")?;
    let declared: usize = count
        .parse()
        .map_err(|_| PointsError::MalformedHeader(format!("bad n_points {count:?}")))?;
    if lines.next() != Some("{") {
        return Err(PointsError::MalformedHeader("expected '{' after header".into()));
    }
    let mut points = Vec::with_capacity(declared);
    let mut closed = false;
    for line in lines.by_ref() {
        if line == "}" {
            closed = true;
            break;
        }
        let mut it = line.split_whitespace();
        let (Some(xs), Some(ys), None) = (it.next(), it.next(), it.next()) else {
            return Err(PointsError::NonNumeric(line.to_string()));
        };
        let num = |s: &str| {
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| PointsError::NonNumeric(s.to_string()))
        };
        points.push(PointF::new(num(xs)?, num(ys)?));
    }
    if !closed {
        return Err(PointsError::MalformedHeader("missing closing '}'".into()));
    }
    Ok((declared, points))
}

/// Load an annotation and map it onto the twelve points. When `bounds` is
/// given, every point of the file must lie inside `[0, w) x [0, h)`.
pub fn load_points_file(
    bytes: &[u8],
    map: &IndexMap,
    bounds: Option<(usize, usize)>,
) -> Result<GroundTruth, PointsError> {
    let raw = parse_points(bytes)?;
    if let Some((width, height)) = bounds {
        for (index, p) in raw.iter().enumerate() {
            if p.x < 0.0 || p.y < 0.0 || p.x >= width as f64 || p.y >= height as f64 {
                return Err(PointsError::OutOfBounds { index, x: p.x, y: p.y, width, height });
            }
        }
    }
    let idx = map.as_array();
    let mut points = [PointF::default(); 12];
    for (slot, &i) in points.iter_mut().zip(&idx) {
        *slot = *raw.get(i).ok_or(PointsError::MissingIndex { index: i, count: raw.len() })?;
    }
    GroundTruth::new(points)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Both,
    Single,
    None,
}

impl Status {
    pub fn from_hits(hits: usize) -> Status {
        match hits {
            0 => Status::None,
            1 => Status::Single,
            _ => Status::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionOutcome {
    pub region: Region,
    pub status: Status,
}

fn is_hit(detected: Option<Point>, truth: PointF, radius: f64) -> bool {
    detected.is_some_and(|p| PointF::from(p).distance(truth) <= radius)
}

pub fn match_region(detected: &FeaturePoints, truth: &GroundTruth, region: Region, radius_frac: f64) -> Status {
    let radius = radius_frac * truth.inter_ocular;
    let found = detected.region_points(region);
    let refs = truth.region_points(region);
    let hits = found.iter().zip(&refs).filter(|(d, t)| is_hit(**d, **t, radius)).count();
    Status::from_hits(hits)
}

/// Per-region outcome of one image. The nose tip takes no part.
pub fn match_points(detected: &FeaturePoints, truth: &GroundTruth, radius_frac: f64) -> Vec<RegionOutcome> {
    Region::ALL
        .iter()
        .map(|&region| RegionOutcome { region, status: match_region(detected, truth, region, radius_frac) })
        .collect()
}

/// Outcome tallies of one region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Tally {
    pub both: usize,
    pub single: usize,
    pub none: usize,
}

impl Tally {
    pub fn add(&mut self, status: Status) {
        match status {
            Status::Both => self.both += 1,
            Status::Single => self.single += 1,
            Status::None => self.none += 1,
        }
    }

    pub fn images(&self) -> usize {
        self.both + self.single + self.none
    }

    pub fn merge(self, o: Tally) -> Tally {
        Tally { both: self.both + o.both, single: self.single + o.single, none: self.none + o.none }
    }

    /// Rates over `images()`; all zero for an empty tally.
    pub fn rates(&self) -> Rates {
        let n = self.images();
        if n == 0 {
            return Rates::default();
        }
        let pct = |k: usize| 100.0 * k as f64 / n as f64;
        Rates::new(pct(self.both), pct(self.single))
    }
}

/// Percentages of one row; `overall` is always `both + single`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Rates {
    pub both: f64,
    pub single: f64,
    pub overall: f64,
}

impl Rates {
    pub fn new(both: f64, single: f64) -> Self {
        Rates { both, single, overall: both + single }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionRate {
    pub region: Region,
    pub tally: Tally,
    pub rates: Rates,
    pub threshold: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateReport {
    pub images: usize,
    pub radius_frac: f64,
    pub rows: Vec<RegionRate>,
    /// Arithmetic mean of the six region rows.
    pub average: Rates,
}

impl RateReport {
    pub fn row(&self, region: Region) -> &RegionRate {
        &self.rows[region.index()]
    }

    pub fn criterion(&self) -> String {
        format!("hit if distance <= {} x inter-ocular distance", self.radius_frac)
    }

    /// CSV in the column order both, single, overall, threshold.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# images={} criterion: {}", self.images, self.criterion());
        s.push_str("feature,both,single,overall,threshold\n");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{},{:.2},{:.2},{:.2},{}",
                r.region.label(),
                r.rates.both,
                r.rates.single,
                r.rates.overall,
                r.threshold
            );
        }
        let a = self.average;
        let _ = writeln!(s, "Average,{:.2},{:.2},{:.2},-", a.both, a.single, a.overall);
        s
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "Detection rates over {} images ({})", self.images, self.criterion());
        let _ = writeln!(s, "{:<14} {:>9} {:>9} {:>9} {:>9}", "Feature", "Both %", "Single %", "Overall %", "Threshold");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:<14} {:>9.2} {:>9.2} {:>9.2} {:>9}",
                r.region.label(),
                r.rates.both,
                r.rates.single,
                r.rates.overall,
                r.threshold
            );
        }
        let a = self.average;
        let _ = writeln!(s, "{:<14} {:>9.2} {:>9.2} {:>9.2} {:>9}", "Average", a.both, a.single, a.overall, "-");
        s
    }
}

/// Fold per-region tallies into a rate report.
pub fn report_from_tallies(
    tallies: [Tally; 6],
    thresholds: &ThresholdConfig,
    radius_frac: f64,
) -> Result<RateReport> {
    let images = tallies[0].images();
    if images == 0 {
        return Err(Error::EmptyEvaluation);
    }
    let rows: Vec<RegionRate> = Region::ALL
        .iter()
        .map(|&region| {
            let tally = tallies[region.index()];
            RegionRate { region, tally, rates: tally.rates(), threshold: thresholds.get(region) }
        })
        .collect();
    let mean = |f: fn(&Rates) -> f64| rows.iter().map(|r| f(&r.rates)).sum::<f64>() / rows.len() as f64;
    let average = Rates::new(mean(|r| r.both), mean(|r| r.single));
    Ok(RateReport { images, radius_frac, rows, average })
}

pub fn tally_outcomes(outcomes: &[Vec<RegionOutcome>]) -> [Tally; 6] {
    let mut tallies = [Tally::default(); 6];
    for image in outcomes {
        for o in image {
            tallies[o.region.index()].add(o.status);
        }
    }
    tallies
}

/// Both, single and overall rates per region from the outcomes of every
/// evaluated image.
pub fn detection_rates(
    outcomes: &[Vec<RegionOutcome>],
    thresholds: &ThresholdConfig,
    radius_frac: f64,
) -> Result<RateReport> {
    if outcomes.is_empty() {
        return Err(Error::EmptyEvaluation);
    }
    report_from_tallies(tally_outcomes(outcomes), thresholds, radius_frac)
}

/// One evaluation image with its face box and annotation.
#[derive(Debug, Clone)]
pub struct EvalSample {
    pub name: String,
    pub image: GrayImage,
    pub face: Rect,
    /// Reference points in image coordinates.
    pub truth: GroundTruth,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvalConfig {
    pub thresholds: ThresholdConfig,
    pub layout: LayoutConfig,
    pub detect: DetectOptions,
    pub radius_frac: f64,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            thresholds: ThresholdConfig::default(),
            layout: LayoutConfig::default(),
            detect: DetectOptions::default(),
            radius_frac: DEFAULT_RADIUS_FRAC,
            threads: None,
        }
    }
}

fn run_parallel<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Detect on the face box of `image` and return points in image coordinates.
pub fn detect_in_image(
    image: &GrayImage,
    face: Rect,
    thresholds: &ThresholdConfig,
    layout: &LayoutConfig,
    opts: &DetectOptions,
) -> Result<FeaturePoints> {
    let face_img = crop(image, face)?;
    let rois = roi_layout(face.w, face.h, layout)?;
    Ok(detect_features_with(&face_img, &rois, thresholds, opts)?.offset(face.x, face.y))
}

pub fn evaluate_sample(sample: &EvalSample, cfg: &EvalConfig) -> Result<Vec<RegionOutcome>> {
    let pts = detect_in_image(&sample.image, sample.face, &cfg.thresholds, &cfg.layout, &cfg.detect)?;
    Ok(match_points(&pts, &sample.truth, cfg.radius_frac))
}

/// Detection rates of `samples` at the configured thresholds.
pub fn evaluate(samples: &[EvalSample], cfg: &EvalConfig) -> Result<RateReport> {
    if samples.is_empty() {
        return Err(Error::EmptyEvaluation);
    }
    let outcomes = run_parallel(cfg.threads, || {
        samples.par_iter().map(|s| evaluate_sample(s, cfg)).collect::<Result<Vec<_>>>()
    })??;
    detection_rates(&outcomes, &cfg.thresholds, cfg.radius_frac)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub th: f64,
    pub rates: Rates,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub region: Region,
    pub radius_frac: f64,
    pub rows: Vec<SweepRow>,
    /// Index of the row with the highest overall rate; ties go to the
    /// smallest threshold.
    pub best: usize,
}

impl SweepTable {
    pub fn best_row(&self) -> &SweepRow {
        &self.rows[self.best]
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("th,single,both,overall\n");
        for r in &self.rows {
            let _ = writeln!(s, "{},{:.4},{:.4},{:.4}", r.th, r.rates.single, r.rates.both, r.rates.overall);
        }
        s
    }
}

/// Closed threshold grid `th_min, th_min + step, ..., th_max`, with every
/// value snapped to the nearest multiple of `step` at ten decimals.
pub fn threshold_grid(th_min: f64, th_max: f64, step: f64) -> Result<Vec<f64>> {
    if step <= 0.0 || !step.is_finite() {
        return Err(Error::SweepRange(format!("step must be positive, got {step}")));
    }
    if th_min >= th_max || !th_min.is_finite() || !th_max.is_finite() {
        return Err(Error::SweepRange(format!("need th_min < th_max, got {th_min} and {th_max}")));
    }
    let snap = |v: f64| format!("{v:.10}").parse::<f64>().expect("formatted float parses");
    let first = (th_min / step).round();
    let n = ((th_max - th_min) / step + 1e-9).floor() as u64;
    Ok((0..=n).map(|i| snap((first + i as f64) * step)).collect())
}

/// Rates of one region over a grid of thresholds; other regions are not run.
pub fn threshold_sweep(
    samples: &[EvalSample],
    region: Region,
    th_min: f64,
    th_max: f64,
    step: f64,
    cfg: &EvalConfig,
) -> Result<SweepTable> {
    if samples.is_empty() {
        return Err(Error::EmptyEvaluation);
    }
    let grid = threshold_grid(th_min, th_max, step)?;
    let status_at = |s: &EvalSample, th: f64| -> Result<Status> {
        let face_img = crop(&s.image, s.face)?;
        let rois = roi_layout(s.face.w, s.face.h, &cfg.layout)?;
        let mut pts = FeaturePoints::default();
        match detect_region(&face_img, &rois, region, th, &cfg.detect)? {
            RegionDetection::Corners(c) => match region {
                Region::EyebrowRight => pts.eyebrow_right = c,
                Region::EyebrowLeft => pts.eyebrow_left = c,
                Region::EyeRight => pts.eye_right = c,
                Region::EyeLeft => pts.eye_left = c,
                _ => pts.mouth = c,
            },
            RegionDetection::Nostrils(n) => pts.nostrils = n,
        }
        let pts = pts.offset(s.face.x, s.face.y);
        Ok(match_region(&pts, &s.truth, region, cfg.radius_frac))
    };
    let rows = run_parallel(cfg.threads, || {
        grid.par_iter()
            .map(|&th| {
                let statuses = samples.par_iter().map(|s| status_at(s, th)).collect::<Result<Vec<_>>>()?;
                let mut tally = Tally::default();
                statuses.into_iter().for_each(|st| tally.add(st));
                Ok(SweepRow { th, rates: tally.rates() })
            })
            .collect::<Result<Vec<_>>>()
    })??;
    let mut best = 0;
    for (i, r) in rows.iter().enumerate() {
        if r.rates.overall > rows[best].rates.overall {
            best = i;
        }
    }
    Ok(SweepTable { region, radius_frac: cfg.radius_frac, rows, best })
}

/// Samples that could be loaded plus the names and reasons of those skipped.
#[derive(Debug, Default)]
pub struct Dataset {
    pub samples: Vec<EvalSample>,
    pub skipped: Vec<(String, String)>,
}

/// Parse a `.face` sidecar: `x y w h`, whitespace or comma separated.
pub fn parse_face_rect(text: &str) -> Result<Rect> {
    text.trim().parse::<Rect>().map_err(Error::Config)
}

fn files_by_stem(dir: &Path, ext: &str) -> Result<HashMap<String, PathBuf>> {
    let mut map = HashMap::new();
    let entries = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    for entry in entries {
        let path = entry.map_err(|e| Error::io(dir, e))?.path();
        let matches = path.extension().and_then(|e| e.to_str()).is_some_and(|e| e.eq_ignore_ascii_case(ext));
        if let (true, Some(stem)) = (matches, path.file_stem().and_then(|s| s.to_str())) {
            map.insert(stem.to_ascii_lowercase(), path);
        }
    }
    Ok(map)
}

/// Pair `<name>.pgm` images in `images_dir` with `<name>.face` (looked up in
/// the image directory, then the annotation directory) and `<name>.pts` or
/// `<name>.json` in `annotations_dir`. Names match case-insensitively.
/// Images sort by file name so results do not depend on directory order.
pub fn load_dataset(images_dir: &Path, annotations_dir: &Path, map: &IndexMap) -> Result<Dataset> {
    let images = files_by_stem(images_dir, "pgm")?;
    let faces_a = files_by_stem(images_dir, "face")?;
    let faces_b = files_by_stem(annotations_dir, "face")?;
    let pts = files_by_stem(annotations_dir, "pts")?;
    let json = files_by_stem(annotations_dir, "json")?;

    let mut names: Vec<(&String, &PathBuf)> = images.iter().collect();
    names.sort_by(|a, b| a.1.file_name().cmp(&b.1.file_name()));

    let mut ds = Dataset::default();
    for (stem, img_path) in names {
        let display = img_path.file_stem().and_then(|s| s.to_str()).unwrap_or(stem).to_string();
        let load = || -> std::result::Result<EvalSample, String> {
            let face_path = faces_a.get(stem).or_else(|| faces_b.get(stem)).ok_or("no .face sidecar")?;
            let truth_path = pts.get(stem).or_else(|| json.get(stem)).ok_or("no annotation")?;
            let bytes = fs::read(img_path).map_err(|e| format!("unreadable image: {e}"))?;
            let image = load_pgm(&bytes).map_err(|e| format!("bad image: {e}"))?;
            let face_text = fs::read_to_string(face_path).map_err(|e| format!("unreadable .face: {e}"))?;
            let face = parse_face_rect(&face_text).map_err(|e| format!("bad .face: {e}"))?;
            if !face.fits_within(image.width(), image.height()) {
                return Err(format!("face rect {face} exceeds the image"));
            }
            let truth_bytes = fs::read(truth_path).map_err(|e| format!("unreadable annotation: {e}"))?;
            let truth = load_points_file(&truth_bytes, map, Some((image.width(), image.height())))
                .map_err(|e| format!("bad annotation: {e}"))?;
            Ok(EvalSample { name: display.clone(), image, face, truth })
        };
        match load() {
            Ok(sample) => ds.samples.push(sample),
            Err(reason) => ds.skipped.push((display, reason)),
        }
    }
    Ok(ds)
}

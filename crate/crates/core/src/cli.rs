//! The `chfeatures` command line: `detect`, `evaluate` and `sweep`.
//!
//! Settings come from an optional TOML file (`--config`); command line flags
//! override file values.
//!
//! ```toml
//! radius_frac = 0.15
//! threads = 4
//!
//! [thresholds]
//! eyebrow_right = 0.22
//! nose = 0.004
//!
//! [layout.nose]
//! x = 0.25
//! y = 0.45
//!
//! [detect]
//! scan_order = "column-major"
//! nose_tip_y_offset = 8
//! min_area = 0
//! ```

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::chfilter::ThresholdConfig;
use crate::detect::{DetectOptions, FeaturePoints, ScanOrder};
use crate::error::{Error, Result};
use crate::eval::{
    detect_in_image, evaluate, load_dataset, parse_face_rect, threshold_sweep, EvalConfig, IndexMap,
    DEFAULT_RADIUS_FRAC,
};
use crate::geometry::{LayoutConfig, Rect, Region};
use crate::raster::{draw_markers, load_pgm, save_pgm, GrayImage};

/// Exit code when detection found nothing in any region.
pub const EXIT_NOTHING_DETECTED: u8 = 2;

/// Everything a run can be configured with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub thresholds: ThresholdConfig,
    pub layout: LayoutConfig,
    pub detect: DetectOptions,
    pub radius_frac: f64,
    pub threads: Option<usize>,
    pub index_map: IndexMap,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            thresholds: ThresholdConfig::default(),
            layout: LayoutConfig::default(),
            detect: DetectOptions::default(),
            radius_frac: DEFAULT_RADIUS_FRAC,
            threads: None,
            index_map: IndexMap::default(),
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(format!("invalid config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml(&text)
    }

    pub fn eval_config(&self) -> EvalConfig {
        EvalConfig {
            thresholds: self.thresholds,
            layout: self.layout.clone(),
            detect: self.detect,
            radius_frac: self.radius_frac,
            threads: self.threads,
        }
    }

    /// Hard errors for unusable values, plus advisory warnings.
    pub fn check(&self) -> Result<Vec<String>> {
        self.thresholds.validate()?;
        self.layout.validate()?;
        if self.radius_frac <= 0.0 || !self.radius_frac.is_finite() {
            return Err(Error::Config(format!("radius_frac must be positive, got {}", self.radius_frac)));
        }
        Ok(self.thresholds.warnings())
    }
}

#[derive(Debug, Parser)]
#[command(name = "chfeatures", version, about = "Facial feature corners by cumulative-histogram thresholding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Detect feature points in one image
    Detect(DetectArgs),
    /// Detection rates over an annotated dataset
    Evaluate(EvaluateArgs),
    /// Detection rates of one region over a threshold grid
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// TOML configuration file
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Threshold for the right eyebrow [default 0.22]
    #[arg(long, value_name = "TH")]
    th_eyebrow_right: Option<f64>,
    /// Threshold for the left eyebrow [default 0.24]
    #[arg(long, value_name = "TH")]
    th_eyebrow_left: Option<f64>,
    /// Threshold for the right eye [default 0.07]
    #[arg(long, value_name = "TH")]
    th_eye_right: Option<f64>,
    /// Threshold for the left eye [default 0.06]
    #[arg(long, value_name = "TH")]
    th_eye_left: Option<f64>,
    /// Threshold for the nostrils [default 0.004]
    #[arg(long, value_name = "TH")]
    th_nose: Option<f64>,
    /// Threshold for the mouth [default 0.06]
    #[arg(long, value_name = "TH")]
    th_mouth: Option<f64>,
    /// Hit radius as a fraction of the inter-ocular distance
    #[arg(long, value_name = "FRAC")]
    radius_frac: Option<f64>,
    /// Rows between the higher nostril and the nose tip
    #[arg(long, value_name = "PX")]
    nose_tip_y_offset: Option<usize>,
    /// Corner search traversal
    #[arg(long, value_enum)]
    scan_order: Option<ScanOrderArg>,
    /// Ignore nose components with fewer pixels
    #[arg(long, value_name = "PX")]
    min_area: Option<usize>,
    /// Worker threads for dataset commands
    #[arg(short = 'j', long, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScanOrderArg {
    ColumnMajor,
    RowMajor,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum PointsFormat {
    #[default]
    Json,
    Pts,
}

#[derive(Debug, Args)]
struct DetectArgs {
    /// Input PGM image
    image: PathBuf,
    /// Face box as x,y,w,h
    #[arg(long, value_name = "X,Y,W,H", conflicts_with = "whole_image")]
    face_rect: Option<String>,
    /// Treat the whole image as the face
    #[arg(long)]
    whole_image: bool,
    /// Points file to write (stdout when omitted)
    #[arg(short, long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Write a copy of the image with the points marked
    #[arg(long, value_name = "FILE")]
    overlay: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: PointsFormat,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct DatasetArgs {
    /// Directory of PGM images with .face sidecars
    dataset: PathBuf,
    /// Directory of .pts annotations (defaults to the dataset directory)
    #[arg(long, value_name = "DIR")]
    annotations: Option<PathBuf>,
    /// CSV file to write (stdout when omitted)
    #[arg(short, long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    #[command(flatten)]
    data: DatasetArgs,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    data: DatasetArgs,
    /// Region to sweep, e.g. eyebrow-right or nose
    #[arg(long)]
    region: Region,
    /// First grid value (default per region)
    #[arg(long, value_name = "TH")]
    th_min: Option<f64>,
    /// Last grid value, inclusive
    #[arg(long, value_name = "TH")]
    th_max: Option<f64>,
    /// Grid spacing
    #[arg(long, value_name = "TH")]
    step: Option<f64>,
    #[command(flatten)]
    common: CommonArgs,
}

impl CommonArgs {
    fn resolve(&self) -> Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        let overrides = [
            (Region::EyebrowRight, self.th_eyebrow_right),
            (Region::EyebrowLeft, self.th_eyebrow_left),
            (Region::EyeRight, self.th_eye_right),
            (Region::EyeLeft, self.th_eye_left),
            (Region::Nose, self.th_nose),
            (Region::Mouth, self.th_mouth),
        ];
        for (region, th) in overrides {
            if let Some(th) = th {
                cfg.thresholds.set(region, th);
            }
        }
        if let Some(r) = self.radius_frac {
            cfg.radius_frac = r;
        }
        if let Some(o) = self.nose_tip_y_offset {
            cfg.detect.nose_tip_y_offset = o;
        }
        if let Some(s) = self.scan_order {
            cfg.detect.scan_order = match s {
                ScanOrderArg::ColumnMajor => ScanOrder::ColumnMajor,
                ScanOrderArg::RowMajor => ScanOrder::RowMajor,
            };
        }
        if let Some(a) = self.min_area {
            cfg.detect.min_area = a;
        }
        if let Some(j) = self.jobs {
            cfg.threads = Some(j);
        }
        Ok(cfg)
    }
}

/// Parse arguments and run a command. Returns the process exit code:
/// 0 on success, 1 on errors, 2 when `detect` found nothing.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Detect(a) => cmd_detect(&a, stdout, stderr),
        Command::Evaluate(a) => cmd_evaluate(&a, stdout, stderr),
        Command::Sweep(a) => cmd_sweep(&a, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn prepare(common: &CommonArgs, stderr: &mut dyn Write) -> Result<RunConfig> {
    let cfg = common.resolve()?;
    for w in cfg.check()? {
        let _ = writeln!(stderr, "warning: {w}");
    }
    Ok(cfg)
}

fn write_output(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::io(p, e)),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e)),
    }
}

fn face_sidecar(image: &Path) -> PathBuf {
    image.with_extension("face")
}

fn resolve_face(args: &DetectArgs, img: &GrayImage) -> Result<Rect> {
    let rect = if let Some(spec) = &args.face_rect {
        spec.parse::<Rect>().map_err(|e| Error::Config(format!("--face-rect: {e}")))?
    } else if args.whole_image {
        img.bounds()
    } else {
        let side = face_sidecar(&args.image);
        let text = fs::read_to_string(&side).map_err(|_| {
            Error::Config(format!(
                "no face box: pass --face-rect or --whole-image, or provide {}",
                side.display()
            ))
        })?;
        parse_face_rect(&text)?
    };
    if !rect.fits_within(img.width(), img.height()) {
        return Err(rect.bounds_error(img.width(), img.height()));
    }
    Ok(rect)
}

/// JSON points document; absent points are omitted.
pub fn points_json(image_name: &str, face: Rect, pts: &FeaturePoints) -> String {
    let mut points = Map::new();
    for (name, p) in pts.named_points() {
        points.insert(name.to_string(), json!([p.x, p.y]));
    }
    let mut doc = Map::new();
    doc.insert("image".into(), Value::from(image_name));
    doc.insert("face_rect".into(), json!([face.x, face.y, face.w, face.h]));
    doc.insert("points".into(), Value::Object(points));
    if let Some(t) = pts.nose_tip {
        doc.insert("nose_tip".into(), json!([t.x, t.y]));
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable");
    s.push('\n');
    s
}

/// FGnet-style text: the twelve points in `POINT_NAMES` order and then the
/// nose tip, with `-1 -1` for absent points.
pub fn points_pts(pts: &FeaturePoints) -> String {
    let mut s = String::from("version: 1\nn_points: 13\n{\n");
    let tip = ("nose_tip", pts.nose_tip);
    for (_, p) in pts.slots().into_iter().chain(std::iter::once(tip)) {
        match p {
            Some(p) => {
                let _ = writeln!(s, "{} {}", p.x, p.y);
            }
            None => s.push_str("-1 -1\n"),
        }
    }
    s.push_str("}\n");
    s
}

fn cmd_detect(args: &DetectArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<u8> {
    let cfg = prepare(&args.common, stderr)?;
    let bytes = fs::read(&args.image).map_err(|e| Error::io(&args.image, e))?;
    let img = load_pgm(&bytes)?;
    let face = resolve_face(args, &img)?;
    let pts = detect_in_image(&img, face, &cfg.thresholds, &cfg.layout, &cfg.detect)?;

    let name = args.image.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let text = match args.format {
        PointsFormat::Json => points_json(&name, face, &pts),
        PointsFormat::Pts => points_pts(&pts),
    };
    write_output(args.out.as_deref(), &text, stdout)?;
    if let Some(path) = &args.overlay {
        let marked = draw_markers(&img, &pts)?;
        fs::write(path, save_pgm(&marked)).map_err(|e| Error::io(path, e))?;
    }
    Ok(if pts.any_region_detected() { 0 } else { EXIT_NOTHING_DETECTED })
}

fn load_samples(data: &DatasetArgs, cfg: &RunConfig, stderr: &mut dyn Write) -> Result<crate::eval::Dataset> {
    let ann = data.annotations.as_deref().unwrap_or(&data.dataset);
    let ds = load_dataset(&data.dataset, ann, &cfg.index_map)?;
    for (name, reason) in &ds.skipped {
        log::info!("skipped {name}: {reason}");
    }
    let _ = writeln!(stderr, "evaluated {} images, skipped {}", ds.samples.len(), ds.skipped.len());
    if ds.samples.is_empty() {
        return Err(Error::Config(format!(
            "no usable (image, .face, .pts) triples in {}",
            data.dataset.display()
        )));
    }
    Ok(ds)
}

fn cmd_evaluate(args: &EvaluateArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<u8> {
    let cfg = prepare(&args.common, stderr)?;
    let ds = load_samples(&args.data, &cfg, stderr)?;
    let report = evaluate(&ds.samples, &cfg.eval_config())?;
    match &args.data.out {
        Some(path) => {
            fs::write(path, report.to_csv()).map_err(|e| Error::io(path, e))?;
            stdout.write_all(report.to_table().as_bytes()).map_err(|e| Error::io("<stdout>", e))?;
        }
        None => {
            let _ = stderr.write_all(report.to_table().as_bytes());
            write_output(None, &report.to_csv(), stdout)?;
        }
    }
    Ok(0)
}

/// Default sweep range and step of a region.
pub fn default_sweep(region: Region) -> (f64, f64, f64) {
    let (lo, hi) = ThresholdConfig::window(region);
    let step = if region == Region::Nose { 0.001 } else { 0.01 };
    (lo, hi, step)
}

fn cmd_sweep(args: &SweepArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<u8> {
    let cfg = prepare(&args.common, stderr)?;
    let (lo, hi, step) = default_sweep(args.region);
    let (lo, hi, step) = (args.th_min.unwrap_or(lo), args.th_max.unwrap_or(hi), args.step.unwrap_or(step));
    // Validate the grid before touching the dataset.
    crate::eval::threshold_grid(lo, hi, step)?;
    let ds = load_samples(&args.data, &cfg, stderr)?;
    let table = threshold_sweep(&ds.samples, args.region, lo, hi, step, &cfg.eval_config())?;
    write_output(args.data.out.as_deref(), &table.to_csv(), stdout)?;
    let best = table.best_row();
    let _ = writeln!(
        stderr,
        "best {} threshold: {} (overall {:.4}%, radius_frac {})",
        args.region, best.th, best.rates.overall, cfg.radius_frac
    );
    Ok(0)
}

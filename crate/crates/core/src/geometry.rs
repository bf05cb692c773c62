//! Placement of the six feature ROIs inside a detected face box.
//!
//! ROI sizes are fixed fractions of the face width `W` and height `H`:
//!
//! | region  | size            |
//! |---------|-----------------|
//! | eyebrow | 0.375W x 0.12H  |
//! | eye     | 0.375W x 0.25H  |
//! | nose    | 0.50W  x 0.19H  |
//! | mouth   | 0.50W  x 0.16H  |
//!
//! Sizes are floored. The top-left anchor of every ROI is a configurable
//! fraction of the face box, rounded half-up. Right-side regions belong to
//! the subject's right and so sit in the left half of the image.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest face side for which every ROI keeps a usable size.
pub const MIN_FACE_SIDE: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Rect {
    pub x: usize,
    pub y: usize,
    pub w: usize,
    pub h: usize,
}

impl Rect {
    /// Panics on a zero-sized rectangle.
    pub fn new(x: usize, y: usize, w: usize, h: usize) -> Self {
        assert!(w >= 1 && h >= 1, "rect must be at least 1x1");
        Rect { x, y, w, h }
    }

    pub fn right(&self) -> usize {
        self.x + self.w
    }

    pub fn bottom(&self) -> usize {
        self.y + self.h
    }

    pub fn is_degenerate(&self) -> bool {
        self.w == 0 || self.h == 0
    }

    pub fn fits_within(&self, width: usize, height: usize) -> bool {
        !self.is_degenerate()
            && self.x.checked_add(self.w).is_some_and(|r| r <= width)
            && self.y.checked_add(self.h).is_some_and(|b| b <= height)
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x >= self.x && x < self.right() && y >= self.y && y < self.bottom()
    }

    pub fn translate(self, dx: usize, dy: usize) -> Self {
        Rect { x: self.x + dx, y: self.y + dy, ..self }
    }

    pub fn bounds_error(&self, width: usize, height: usize) -> Error {
        Error::Bounds { x: self.x, y: self.y, w: self.w, h: self.h, width, height }
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.x, self.y, self.w, self.h)
    }
}

impl FromStr for Rect {
    type Err = String;

    /// Parses `x,y,w,h`; whitespace separators are also accepted.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let parts: Vec<&str> =
            s.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).collect();
        if parts.len() != 4 {
            return Err(format!("expected x,y,w,h but got {s:?}"));
        }
        let mut v = [0usize; 4];
        for (slot, part) in v.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| format!("non-integer rect component {part:?}"))?;
        }
        if v[2] == 0 || v[3] == 0 {
            return Err(format!("rect {s:?} has zero width or height"));
        }
        Ok(Rect { x: v[0], y: v[1], w: v[2], h: v[3] })
    }
}

/// The six facial feature regions, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    EyebrowRight,
    EyebrowLeft,
    EyeRight,
    EyeLeft,
    Nose,
    Mouth,
}

impl Region {
    pub const ALL: [Region; 6] = [
        Region::EyebrowRight,
        Region::EyebrowLeft,
        Region::EyeRight,
        Region::EyeLeft,
        Region::Nose,
        Region::Mouth,
    ];

    pub const fn index(self) -> usize {
        self as usize
    }

    /// Short identifier used on the command line and in config files.
    pub const fn key(self) -> &'static str {
        match self {
            Region::EyebrowRight => "eyebrow-right",
            Region::EyebrowLeft => "eyebrow-left",
            Region::EyeRight => "eye-right",
            Region::EyeLeft => "eye-left",
            Region::Nose => "nose",
            Region::Mouth => "mouth",
        }
    }

    /// Row label used in rate reports.
    pub const fn label(self) -> &'static str {
        match self {
            Region::EyebrowRight => "Right Eyebrow",
            Region::EyebrowLeft => "Left Eyebrow",
            Region::EyeRight => "Right Eye",
            Region::EyeLeft => "Left Eye",
            Region::Nose => "Nostrils",
            Region::Mouth => "Mouth Corners",
        }
    }

    /// Numerator/denominator of the width and height fractions of the ROI.
    const fn size_fractions(self) -> ((usize, usize), (usize, usize)) {
        match self {
            Region::EyebrowRight | Region::EyebrowLeft => ((375, 1000), (12, 100)),
            Region::EyeRight | Region::EyeLeft => ((375, 1000), (25, 100)),
            Region::Nose => ((50, 100), (19, 100)),
            Region::Mouth => ((50, 100), (16, 100)),
        }
    }

    /// ROI size for a face of `face_w` x `face_h`, floored exactly.
    pub fn roi_size(self, face_w: usize, face_h: usize) -> (usize, usize) {
        let ((wn, wd), (hn, hd)) = self.size_fractions();
        (face_w * wn / wd, face_h * hn / hd)
    }

    fn size_fraction_f64(self) -> (f64, f64) {
        let ((wn, wd), (hn, hd)) = self.size_fractions();
        (wn as f64 / wd as f64, hn as f64 / hd as f64)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Region {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Region::ALL
            .into_iter()
            .find(|r| r.key() == norm || (norm == "nostrils" && *r == Region::Nose))
            .ok_or_else(|| format!("unknown region {s:?}"))
    }
}

/// Top-left corner of an ROI as fractions of the face width and height.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Anchor {
    pub x: f64,
    pub y: f64,
}

impl Anchor {
    pub const fn new(x: f64, y: f64) -> Self {
        Anchor { x, y }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LayoutConfig {
    pub eyebrow_right: Anchor,
    pub eyebrow_left: Anchor,
    pub eye_right: Anchor,
    pub eye_left: Anchor,
    pub nose: Anchor,
    pub mouth: Anchor,
}

impl Default for LayoutConfig {
    fn default() -> Self {
        LayoutConfig {
            eyebrow_right: Anchor::new(0.0875, 0.18),
            eyebrow_left: Anchor::new(0.5375, 0.18),
            eye_right: Anchor::new(0.0875, 0.26),
            eye_left: Anchor::new(0.5375, 0.26),
            nose: Anchor::new(0.25, 0.45),
            mouth: Anchor::new(0.25, 0.70),
        }
    }
}

impl LayoutConfig {
    pub fn anchor(&self, region: Region) -> Anchor {
        match region {
            Region::EyebrowRight => self.eyebrow_right,
            Region::EyebrowLeft => self.eyebrow_left,
            Region::EyeRight => self.eye_right,
            Region::EyeLeft => self.eye_left,
            Region::Nose => self.nose,
            Region::Mouth => self.mouth,
        }
    }

    pub fn validate(&self) -> Result<()> {
        // Small slack so decimal anchors such as 0.5375 + 0.375 + 0.0875 do
        // not trip on binary rounding.
        const SLACK: f64 = 1e-9;
        for region in Region::ALL {
            let a = self.anchor(region);
            let (sw, sh) = region.size_fraction_f64();
            let fail = |reason: String| Err(Error::LayoutConfig { region, reason });
            if !(0.0..=1.0).contains(&a.x) || !(0.0..=1.0).contains(&a.y) {
                return fail(format!("anchor ({}, {}) outside [0, 1]", a.x, a.y));
            }
            if a.x + sw > 1.0 + SLACK || a.y + sh > 1.0 + SLACK {
                return fail(format!("anchor ({}, {}) plus size overflows the face box", a.x, a.y));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoiLayout {
    pub eyebrow_right: Rect,
    pub eyebrow_left: Rect,
    pub eye_right: Rect,
    pub eye_left: Rect,
    pub nose: Rect,
    pub mouth: Rect,
}

impl RoiLayout {
    pub fn rect(&self, region: Region) -> Rect {
        match region {
            Region::EyebrowRight => self.eyebrow_right,
            Region::EyebrowLeft => self.eyebrow_left,
            Region::EyeRight => self.eye_right,
            Region::EyeLeft => self.eye_left,
            Region::Nose => self.nose,
            Region::Mouth => self.mouth,
        }
    }

    fn rect_mut(&mut self, region: Region) -> &mut Rect {
        match region {
            Region::EyebrowRight => &mut self.eyebrow_right,
            Region::EyebrowLeft => &mut self.eyebrow_left,
            Region::EyeRight => &mut self.eye_right,
            Region::EyeLeft => &mut self.eye_left,
            Region::Nose => &mut self.nose,
            Region::Mouth => &mut self.mouth,
        }
    }

    pub fn translate(mut self, dx: usize, dy: usize) -> Self {
        for region in Region::ALL {
            let r = self.rect_mut(region);
            *r = r.translate(dx, dy);
        }
        self
    }

    pub fn fits_within(&self, width: usize, height: usize) -> bool {
        Region::ALL.iter().all(|&r| self.rect(r).fits_within(width, height))
    }
}

fn round_fraction(fraction: f64, dim: usize) -> usize {
    (fraction * dim as f64 + 0.5 + 1e-9).floor() as usize
}

/// Lay out the six ROIs for a face box of `face_w` x `face_h` pixels.
pub fn roi_layout(face_w: usize, face_h: usize, cfg: &LayoutConfig) -> Result<RoiLayout> {
    if face_w < MIN_FACE_SIDE || face_h < MIN_FACE_SIDE {
        return Err(Error::DegenerateLayout { width: face_w, height: face_h });
    }
    cfg.validate()?;
    let place = |region: Region| -> Result<Rect> {
        let (w, h) = region.roi_size(face_w, face_h);
        let a = cfg.anchor(region);
        let rect = Rect { x: round_fraction(a.x, face_w), y: round_fraction(a.y, face_h), w, h };
        if rect.fits_within(face_w, face_h) {
            Ok(rect)
        } else {
            Err(rect.bounds_error(face_w, face_h))
        }
    };
    Ok(RoiLayout {
        eyebrow_right: place(Region::EyebrowRight)?,
        eyebrow_left: place(Region::EyebrowLeft)?,
        eye_right: place(Region::EyeRight)?,
        eye_left: place(Region::EyeLeft)?,
        nose: place(Region::Nose)?,
        mouth: place(Region::Mouth)?,
    })
}

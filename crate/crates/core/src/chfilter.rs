//! Cumulative-histogram thresholding of an ROI into a binary filtering image.
//!
//! A pixel of value `v` becomes white when the fraction of ROI pixels with
//! value `<= v` does not exceed the threshold. The comparison is carried
//! out on integer prefix counts against the exact value of `th * N`, so two
//! pixels with the same intensity can never end up on different sides.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Region;
use crate::raster::{BinaryImage, GrayImage};

pub const LEVELS: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    counts: [u64; LEVELS],
    total: u64,
}

impl Histogram {
    pub fn counts(&self) -> &[u64; LEVELS] {
        &self.counts
    }

    pub fn count(&self, v: u8) -> u64 {
        self.counts[v as usize]
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Probability of gray level `v`; zero for an empty histogram.
    pub fn probability(&self, v: u8) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.counts[v as usize] as f64 / self.total as f64
        }
    }
}

pub fn histogram(img: &GrayImage) -> Histogram {
    let mut counts = [0u64; LEVELS];
    for &v in img.pixels() {
        counts[v as usize] += 1;
    }
    Histogram { counts, total: img.len() as u64 }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CumulativeHistogram {
    prefix: [u64; LEVELS],
    total: u64,
    cdf: [f64; LEVELS],
}

impl CumulativeHistogram {
    /// Fraction of pixels with value `<= v`.
    pub fn cdf(&self, v: u8) -> f64 {
        self.cdf[v as usize]
    }

    pub fn values(&self) -> &[f64; LEVELS] {
        &self.cdf
    }

    /// Number of pixels with value `<= v`.
    pub fn prefix_count(&self, v: u8) -> u64 {
        self.prefix[v as usize]
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Whether gray level `v` passes `cdf(v) <= th`, evaluated exactly.
    pub fn passes(&self, v: u8, th: f64) -> bool {
        self.prefix[v as usize] <= white_limit(th, self.total)
    }

    fn lookup_table(&self, th: f64) -> [u8; LEVELS] {
        let limit = white_limit(th, self.total);
        let mut lut = [BinaryImage::BLACK; LEVELS];
        for (slot, &p) in lut.iter_mut().zip(&self.prefix) {
            if p <= limit {
                *slot = BinaryImage::WHITE;
            }
        }
        lut
    }
}

pub fn cumulative(h: &Histogram) -> Result<CumulativeHistogram> {
    if h.total == 0 {
        return Err(Error::EmptyImage);
    }
    let mut prefix = [0u64; LEVELS];
    let mut cdf = [0f64; LEVELS];
    let mut running = 0u64;
    for v in 0..LEVELS {
        running += h.counts[v];
        prefix[v] = running;
        cdf[v] = running as f64 / h.total as f64;
    }
    Ok(CumulativeHistogram { prefix, total: h.total, cdf })
}

/// `floor(th * total)` computed without rounding, for finite `th >= 0`.
fn white_limit(th: f64, total: u64) -> u64 {
    debug_assert!(th.is_finite() && th >= 0.0);
    let bits = th.to_bits();
    let exp_bits = ((bits >> 52) & 0x7ff) as i32;
    let frac = bits & ((1u64 << 52) - 1);
    let (mantissa, exp) = if exp_bits == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), exp_bits - 1075)
    };
    let product = mantissa as u128 * total as u128;
    let scaled = if exp >= 0 {
        product.checked_shl(exp as u32).unwrap_or(u128::MAX)
    } else if -exp >= 128 {
        0
    } else {
        product >> (-exp) as u32
    };
    scaled.min(u64::MAX as u128) as u64
}

fn check_threshold(th: f64) -> Result<()> {
    if th > 0.0 && th <= 1.0 {
        Ok(())
    } else {
        Err(Error::ThresholdRange(th))
    }
}

/// White where `ch.cdf(img(x, y)) <= th`, black elsewhere.
pub fn filter_image(img: &GrayImage, ch: &CumulativeHistogram, th: f64) -> Result<BinaryImage> {
    check_threshold(th)?;
    if ch.total != img.len() as u64 {
        return Err(Error::HistogramMismatch { histogram: ch.total, image: img.len() as u64 });
    }
    let lut = ch.lookup_table(th);
    let pixels = img.pixels().iter().map(|&v| lut[v as usize]).collect();
    Ok(BinaryImage::from_raw_unchecked(img.width(), img.height(), pixels))
}

/// Histogram, cumulate and threshold an ROI in one step.
pub fn binarize_roi(img: &GrayImage, th: f64) -> Result<BinaryImage> {
    check_threshold(th)?;
    filter_image(img, &cumulative(&histogram(img))?, th)
}

/// Per-region thresholds applied to the cumulative histograms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ThresholdConfig {
    #[serde(alias = "th_eyebrow_right")]
    pub eyebrow_right: f64,
    #[serde(alias = "th_eyebrow_left")]
    pub eyebrow_left: f64,
    #[serde(alias = "th_eye_right")]
    pub eye_right: f64,
    #[serde(alias = "th_eye_left")]
    pub eye_left: f64,
    #[serde(alias = "th_nose")]
    pub nose: f64,
    #[serde(alias = "th_mouth")]
    pub mouth: f64,
}

impl Default for ThresholdConfig {
    fn default() -> Self {
        ThresholdConfig {
            eyebrow_right: 0.220,
            eyebrow_left: 0.240,
            eye_right: 0.070,
            eye_left: 0.060,
            nose: 0.004,
            mouth: 0.060,
        }
    }
}

impl ThresholdConfig {
    pub fn get(&self, region: Region) -> f64 {
        match region {
            Region::EyebrowRight => self.eyebrow_right,
            Region::EyebrowLeft => self.eyebrow_left,
            Region::EyeRight => self.eye_right,
            Region::EyeLeft => self.eye_left,
            Region::Nose => self.nose,
            Region::Mouth => self.mouth,
        }
    }

    pub fn set(&mut self, region: Region, th: f64) {
        let slot = match region {
            Region::EyebrowRight => &mut self.eyebrow_right,
            Region::EyebrowLeft => &mut self.eyebrow_left,
            Region::EyeRight => &mut self.eye_right,
            Region::EyeLeft => &mut self.eye_left,
            Region::Nose => &mut self.nose,
            Region::Mouth => &mut self.mouth,
        };
        *slot = th;
    }

    pub fn with(mut self, region: Region, th: f64) -> Self {
        self.set(region, th);
        self
    }

    /// Recommended threshold window of a region (its sweep range).
    pub fn window(region: Region) -> (f64, f64) {
        match region {
            Region::EyebrowRight | Region::EyebrowLeft => (0.01, 0.25),
            Region::EyeRight | Region::EyeLeft | Region::Mouth => (0.01, 0.10),
            Region::Nose => (0.001, 0.010),
        }
    }

    /// Human-readable notes for thresholds outside their window. These are
    /// advisory; out-of-window values are still used as given.
    pub fn warnings(&self) -> Vec<String> {
        Region::ALL
            .iter()
            .filter_map(|&r| {
                let th = self.get(r);
                let (lo, hi) = Self::window(r);
                (th < lo || th > hi)
                    .then(|| format!("{r} threshold {th} is outside the usual [{lo}, {hi}] window"))
            })
            .collect()
    }

    /// Hard validity check: every threshold in (0, 1].
    pub fn validate(&self) -> Result<()> {
        Region::ALL.iter().try_for_each(|&r| check_threshold(self.get(r)))
    }
}

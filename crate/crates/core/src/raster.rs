//! Grayscale and binary rasters, PGM input/output, cropping and marker overlays.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::detect::FeaturePoints;
use crate::error::{Error, PgmError, Result};
use crate::geometry::Rect;

/// Ink value used for overlay markers.
pub const MARKER_INK: u8 = 0;
/// Half-length of each arm of the plus marker drawn at detected points.
pub const PLUS_ARM: usize = 4;
/// Radius of the filled disc drawn at the computed nose tip.
pub const DISC_RADIUS: usize = 3;

/// A pixel position. `x` grows rightward, `y` downward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: usize,
    pub y: usize,
}

impl Point {
    pub const fn new(x: usize, y: usize) -> Self {
        Point { x, y }
    }

    pub const fn offset(self, dx: usize, dy: usize) -> Self {
        Point { x: self.x + dx, y: self.y + dy }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// 8-bit single channel image, row-major, top row first.
#[derive(Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl fmt::Debug for GrayImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GrayImage")
            .field("width", &self.width)
            .field("height", &self.height)
            .finish_non_exhaustive()
    }
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        check_dims(width, height, pixels.len())?;
        Ok(GrayImage { width, height, pixels })
    }

    /// Panics if either dimension is zero.
    pub fn filled(width: usize, height: usize, value: u8) -> Self {
        assert!(width > 0 && height > 0, "image dimensions must be positive");
        GrayImage { width, height, pixels: vec![value; width * height] }
    }

    /// Panics if either dimension is zero.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        assert!(width > 0 && height > 0, "image dimensions must be positive");
        let mut pixels = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        GrayImage { width, height, pixels }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pixels.is_empty()
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn into_pixels(self) -> Vec<u8> {
        self.pixels
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, value: u8) {
        self.pixels[y * self.width + x] = value;
    }

    pub fn row(&self, y: usize) -> &[u8] {
        &self.pixels[y * self.width..(y + 1) * self.width]
    }

    pub fn bounds(&self) -> Rect {
        Rect { x: 0, y: 0, w: self.width, h: self.height }
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x < self.width && p.y < self.height
    }
}

/// Thresholded image whose pixels are exactly 0 (background) or 255 (white).
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl fmt::Debug for BinaryImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryImage {}x{}", self.width, self.height)?;
        for y in 0..self.height {
            for x in 0..self.width {
                f.write_str(if self.is_white(x, y) { "#" } else { "." })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl BinaryImage {
    pub const WHITE: u8 = 255;
    pub const BLACK: u8 = 0;

    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        check_dims(width, height, pixels.len())?;
        if let Some((index, &value)) =
            pixels.iter().enumerate().find(|(_, &v)| v != Self::WHITE && v != Self::BLACK)
        {
            return Err(Error::NotBinary { index, value });
        }
        Ok(BinaryImage { width, height, pixels })
    }

    /// Panics if either dimension is zero.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        assert!(width > 0 && height > 0, "image dimensions must be positive");
        let mut pixels = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                pixels.push(if f(x, y) { Self::WHITE } else { Self::BLACK });
            }
        }
        BinaryImage { width, height, pixels }
    }

    pub(crate) fn from_raw_unchecked(width: usize, height: usize, pixels: Vec<u8>) -> Self {
        debug_assert_eq!(pixels.len(), width * height);
        BinaryImage { width, height, pixels }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    #[inline]
    pub fn is_white(&self, x: usize, y: usize) -> bool {
        self.pixels[y * self.width + x] == Self::WHITE
    }

    pub fn white_count(&self) -> usize {
        self.pixels.iter().filter(|&&v| v == Self::WHITE).count()
    }

    /// View as a grayscale image, e.g. for writing to a PGM file.
    pub fn to_gray(&self) -> GrayImage {
        GrayImage { width: self.width, height: self.height, pixels: self.pixels.clone() }
    }
}

fn check_dims(width: usize, height: usize, found: usize) -> Result<()> {
    let expected = width.saturating_mul(height);
    if width == 0 || height == 0 || expected != found {
        return Err(Error::PixelCount { width, height, expected, found });
    }
    Ok(())
}

struct HeaderCursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> HeaderCursor<'a> {
    fn skip_whitespace_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn number(&mut self, what: &'static str) -> std::result::Result<u64, PgmError> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(PgmError::MalformedHeader(what));
        }
        // Digits only, so the sole failure mode is overflow.
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(PgmError::MalformedHeader(what))
    }
}

/// Decode a binary (P5) or plain (P2) PGM with maxval at most 255.
///
/// Samples of images with maxval below 255 are rescaled to the full 8-bit range.
pub fn load_pgm(bytes: &[u8]) -> Result<GrayImage> {
    Ok(decode_pgm(bytes)?)
}

fn decode_pgm(bytes: &[u8]) -> std::result::Result<GrayImage, PgmError> {
    let magic = bytes.get(..2).ok_or_else(|| PgmError::BadMagic(lossy(bytes)))?;
    let plain = match magic {
        b"P5" => false,
        b"P2" => true,
        _ => return Err(PgmError::BadMagic(lossy(magic))),
    };
    let mut cur = HeaderCursor { bytes, pos: 2 };
    if !cur.bytes.get(2).is_some_and(|b| b.is_ascii_whitespace() || *b == b'#') {
        return Err(PgmError::BadMagic(lossy(&bytes[..bytes.len().min(3)])));
    }
    let width = cur.number("width")?;
    let height = cur.number("height")?;
    if width == 0 || height == 0 {
        return Err(PgmError::InvalidDimensions { width, height });
    }
    let maxval = cur.number("maxval")?;
    if maxval == 0 {
        return Err(PgmError::MalformedHeader("maxval must be positive"));
    }
    if maxval > 255 {
        return Err(PgmError::UnsupportedMaxval(maxval.min(u32::MAX as u64) as u32));
    }
    let maxval = maxval as u32;
    let expected = usize::try_from(width)
        .ok()
        .zip(usize::try_from(height).ok())
        .and_then(|(w, h)| w.checked_mul(h))
        .ok_or(PgmError::InvalidDimensions { width, height })?;

    let mut pixels = Vec::with_capacity(expected.min(1 << 26));
    if plain {
        for index in 0..expected {
            let value = match cur.number("sample") {
                Ok(v) => v,
                Err(_) => return Err(PgmError::Truncated { expected, found: index }),
            };
            if value > maxval as u64 {
                return Err(PgmError::SampleOutOfRange {
                    index,
                    value: value.min(u32::MAX as u64) as u32,
                    maxval,
                });
            }
            pixels.push(value as u8);
        }
    } else {
        // Exactly one whitespace byte separates maxval from the raster.
        match bytes.get(cur.pos) {
            Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
            _ => return Err(PgmError::MalformedHeader("missing separator after maxval")),
        }
        let payload = &bytes[cur.pos..];
        if payload.len() < expected {
            return Err(PgmError::Truncated { expected, found: payload.len() });
        }
        let payload = &payload[..expected];
        if let Some((index, &value)) =
            payload.iter().enumerate().find(|(_, &v)| v as u32 > maxval)
        {
            return Err(PgmError::SampleOutOfRange { index, value: value as u32, maxval });
        }
        pixels.extend_from_slice(payload);
    }
    if maxval != 255 {
        for v in &mut pixels {
            *v = ((*v as u32 * 255 + maxval / 2) / maxval) as u8;
        }
    }
    Ok(GrayImage { width: width as usize, height: height as usize, pixels })
}

fn lossy(bytes: &[u8]) -> String {
    String::from_utf8_lossy(&bytes[..bytes.len().min(8)]).into_owned()
}

/// Encode as binary PGM with the canonical `P5\n<w> <h>\n255\n` header.
pub fn save_pgm(img: &GrayImage) -> Vec<u8> {
    let header = format!("P5\n{} {}\n255\n", img.width, img.height);
    let mut out = Vec::with_capacity(header.len() + img.pixels.len());
    out.extend_from_slice(header.as_bytes());
    out.extend_from_slice(&img.pixels);
    out
}

/// Copy the pixels under `rect` into a new image.
pub fn crop(img: &GrayImage, rect: Rect) -> Result<GrayImage> {
    if !rect.fits_within(img.width, img.height) {
        return Err(rect.bounds_error(img.width, img.height));
    }
    let mut pixels = Vec::with_capacity(rect.w * rect.h);
    for y in rect.y..rect.y + rect.h {
        let start = y * img.width + rect.x;
        pixels.extend_from_slice(&img.pixels[start..start + rect.w]);
    }
    Ok(GrayImage { width: rect.w, height: rect.h, pixels })
}

/// Render plus markers at every detected corner and nostril, and a filled
/// disc at the nose tip. Markers are clipped at the image border.
pub fn draw_markers(img: &GrayImage, pts: &FeaturePoints) -> Result<GrayImage> {
    let mut out = img.clone();
    let named = pts.named_points();
    for &(name, p) in &named {
        if !img.contains(p) {
            return Err(point_error(name, p, img));
        }
    }
    if let Some(tip) = pts.nose_tip {
        if !img.contains(tip) {
            return Err(point_error("nose_tip", tip, img));
        }
    }
    for (_, p) in named {
        plus_footprint(p, img.width, img.height, |x, y| out.set(x, y, MARKER_INK));
    }
    if let Some(tip) = pts.nose_tip {
        disc_footprint(tip, img.width, img.height, |x, y| out.set(x, y, MARKER_INK));
    }
    Ok(out)
}

fn point_error(region: &'static str, p: Point, img: &GrayImage) -> Error {
    Error::PointOutOfBounds { region, x: p.x, y: p.y, width: img.width, height: img.height }
}

fn plus_footprint(c: Point, width: usize, height: usize, mut put: impl FnMut(usize, usize)) {
    let x0 = c.x.saturating_sub(PLUS_ARM);
    let x1 = (c.x + PLUS_ARM).min(width - 1);
    for x in x0..=x1 {
        put(x, c.y);
    }
    let y0 = c.y.saturating_sub(PLUS_ARM);
    let y1 = (c.y + PLUS_ARM).min(height - 1);
    for y in y0..=y1 {
        if y != c.y {
            put(c.x, y);
        }
    }
}

fn disc_footprint(c: Point, width: usize, height: usize, mut put: impl FnMut(usize, usize)) {
    let r = DISC_RADIUS as isize;
    for dy in -r..=r {
        for dx in -r..=r {
            if dx * dx + dy * dy > r * r {
                continue;
            }
            let x = c.x as isize + dx;
            let y = c.y as isize + dy;
            if x >= 0 && y >= 0 && (x as usize) < width && (y as usize) < height {
                put(x as usize, y as usize);
            }
        }
    }
}

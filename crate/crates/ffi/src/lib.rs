//! C ABI over `chfeatures`.
//!
//! Images and detectors are opaque heap handles owned by the caller and
//! released with their `*_free` function. Every fallible call returns a
//! [`ChfStatus`]; the message of the last failure on the calling thread is
//! available from [`chf_last_error`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chfeatures::detect::{DetectOptions, POINT_NAMES};
use chfeatures::eval::detect_in_image;
use chfeatures::{
    CornerPair, Error, FeaturePoints, GrayImage, LayoutConfig, NostrilPair, Point, Rect, Region, ThresholdConfig,
};

/// Number of slots in [`ChfFeaturePoints`]: twelve corners and nostrils, then
/// the nose tip.
pub const CHF_POINT_COUNT: usize = 13;

/// Slot of the nose tip in [`ChfFeaturePoints::points`].
pub const CHF_NOSE_TIP: usize = 12;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChfStatus {
    Ok = 0,
    NullPointer,
    InvalidArgument,
    /// PGM bytes could not be decoded.
    Parse,
    /// A rectangle or point lies outside the image.
    Bounds,
    /// A threshold outside (0, 1].
    Threshold,
    /// The face is too small for the region layout.
    Layout,
    /// A caller buffer is too small; the required size was written back.
    BufferTooSmall,
    /// A bug: the library panicked.
    Internal,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChfRegion {
    EyebrowRight = 0,
    EyebrowLeft,
    EyeRight,
    EyeLeft,
    Nose,
    Mouth,
}

impl From<ChfRegion> for Region {
    fn from(r: ChfRegion) -> Region {
        match r {
            ChfRegion::EyebrowRight => Region::EyebrowRight,
            ChfRegion::EyebrowLeft => Region::EyebrowLeft,
            ChfRegion::EyeRight => Region::EyeRight,
            ChfRegion::EyeLeft => Region::EyeLeft,
            ChfRegion::Nose => Region::Nose,
            ChfRegion::Mouth => Region::Mouth,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChfRect {
    pub x: u32,
    pub y: u32,
    pub width: u32,
    pub height: u32,
}

/// A pixel position; both coordinates are -1 when the point is absent.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChfPoint {
    pub x: i32,
    pub y: i32,
}

impl ChfPoint {
    const ABSENT: ChfPoint = ChfPoint { x: -1, y: -1 };

    fn from_point(p: Option<Point>) -> ChfPoint {
        match p {
            Some(p) => ChfPoint { x: p.x as i32, y: p.y as i32 },
            None => ChfPoint::ABSENT,
        }
    }

    fn to_point(self) -> Option<Point> {
        (self.x >= 0 && self.y >= 0).then(|| Point::new(self.x as usize, self.y as usize))
    }
}

/// Detected points in image coordinates. Slot order follows
/// [`chf_point_name`]; `count` is the number of present slots.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChfFeaturePoints {
    pub points: [ChfPoint; CHF_POINT_COUNT],
    pub count: u32,
}

impl From<&FeaturePoints> for ChfFeaturePoints {
    fn from(fp: &FeaturePoints) -> Self {
        let mut points = [ChfPoint::ABSENT; CHF_POINT_COUNT];
        for (slot, (_, p)) in points.iter_mut().zip(fp.slots()) {
            *slot = ChfPoint::from_point(p);
        }
        points[CHF_NOSE_TIP] = ChfPoint::from_point(fp.nose_tip);
        ChfFeaturePoints { points, count: fp.count() as u32 }
    }
}

impl ChfFeaturePoints {
    fn to_features(self) -> FeaturePoints {
        let p = |i: usize| self.points[i].to_point();
        let pair = |i: usize| CornerPair { image_left: p(i), image_right: p(i + 1) };
        FeaturePoints {
            eyebrow_right: pair(0),
            eyebrow_left: pair(2),
            eye_right: pair(4),
            eye_left: pair(6),
            mouth: pair(8),
            nostrils: match (p(10), p(11)) {
                (Some(right), Some(left)) => Some(NostrilPair { right, left }),
                _ => None,
            },
            nose_tip: p(CHF_NOSE_TIP),
        }
    }
}

/// Opaque 8-bit grayscale image.
pub struct ChfImage {
    inner: GrayImage,
}

/// Opaque detector configuration: per-region thresholds plus the default
/// layout and options.
pub struct ChfDetector {
    thresholds: ThresholdConfig,
    layout: LayoutConfig,
    options: DetectOptions,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: ChfStatus, msg: impl Into<String>) -> ChfStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> ChfStatus {
    match e {
        Error::Pgm(_) | Error::PixelCount { .. } => ChfStatus::Parse,
        Error::Bounds { .. } | Error::PointOutOfBounds { .. } => ChfStatus::Bounds,
        Error::ThresholdRange(_) => ChfStatus::Threshold,
        Error::DegenerateLayout { .. } | Error::LayoutConfig { .. } => ChfStatus::Layout,
        _ => ChfStatus::InvalidArgument,
    }
}

fn from_error(e: Error) -> ChfStatus {
    fail(status_of(&e), e.to_string())
}

/// Run `f`, turning a panic into `Internal`.
fn guard(f: impl FnOnce() -> ChfStatus) -> ChfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(ChfStatus::Internal, "internal error (panic)"),
    }
}

fn boxed<T>(value: T, out: *mut *mut T) -> ChfStatus {
    // SAFETY: callers check `out` for null before getting here.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    ChfStatus::Ok
}

/// Decode a binary (P5) or plain (P2) PGM from `len` bytes at `data`.
///
/// # Safety
/// `data` must point to `len` readable bytes and `out` to writable storage
/// for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chf_image_from_pgm(data: *const u8, len: usize, out: *mut *mut ChfImage) -> ChfStatus {
    guard(|| {
        if data.is_null() || out.is_null() {
            return fail(ChfStatus::NullPointer, "null pointer argument");
        }
        let bytes = unsafe { std::slice::from_raw_parts(data, len) };
        match chfeatures::load_pgm(bytes) {
            Ok(inner) => boxed(ChfImage { inner }, out),
            Err(e) => from_error(e),
        }
    })
}

/// Create a `width` x `height` image from row-major pixels, or a black
/// image when `pixels` is null.
///
/// # Safety
/// A non-null `pixels` must point to `width * height` readable bytes;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chf_image_new(
    width: u32,
    height: u32,
    pixels: *const u8,
    out: *mut *mut ChfImage,
) -> ChfStatus {
    guard(|| {
        if out.is_null() {
            return fail(ChfStatus::NullPointer, "null output pointer");
        }
        let (w, h) = (width as usize, height as usize);
        if w == 0 || h == 0 {
            return fail(ChfStatus::InvalidArgument, format!("invalid dimensions {width}x{height}"));
        }
        let data = if pixels.is_null() {
            vec![0; w * h]
        } else {
            unsafe { std::slice::from_raw_parts(pixels, w * h) }.to_vec()
        };
        match GrayImage::new(w, h, data) {
            Ok(inner) => boxed(ChfImage { inner }, out),
            Err(e) => from_error(e),
        }
    })
}

/// Width in pixels; 0 for a null handle.
///
/// # Safety
/// `img` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn chf_image_width(img: *const ChfImage) -> u32 {
    unsafe { img.as_ref() }.map_or(0, |i| i.inner.width() as u32)
}

/// Height in pixels; 0 for a null handle.
///
/// # Safety
/// `img` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn chf_image_height(img: *const ChfImage) -> u32 {
    unsafe { img.as_ref() }.map_or(0, |i| i.inner.height() as u32)
}

/// Row-major pixels, valid until the handle is freed; null for a null handle.
///
/// # Safety
/// `img` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn chf_image_pixels(img: *const ChfImage) -> *const u8 {
    unsafe { img.as_ref() }.map_or(ptr::null(), |i| i.inner.pixels().as_ptr())
}

/// Encode as binary PGM into `buf`. The encoded size is always written to
/// `written`; when it exceeds `cap` nothing else is written and
/// `BufferTooSmall` is returned, so a call with `cap == 0` queries the size.
///
/// # Safety
/// `buf` must point to `cap` writable bytes (it may be null when `cap` is
/// 0); `img` and `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chf_image_to_pgm(
    img: *const ChfImage,
    buf: *mut u8,
    cap: usize,
    written: *mut usize,
) -> ChfStatus {
    guard(|| {
        let (Some(img), false) = (unsafe { img.as_ref() }, written.is_null()) else {
            return fail(ChfStatus::NullPointer, "null pointer argument");
        };
        let bytes = chfeatures::save_pgm(&img.inner);
        unsafe { *written = bytes.len() };
        if bytes.len() > cap {
            return fail(ChfStatus::BufferTooSmall, format!("need {} bytes, have {cap}", bytes.len()));
        }
        if buf.is_null() {
            return fail(ChfStatus::NullPointer, "null buffer");
        }
        unsafe { ptr::copy_nonoverlapping(bytes.as_ptr(), buf, bytes.len()) };
        ChfStatus::Ok
    })
}

/// # Safety
/// `img` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chf_image_free(img: *mut ChfImage) {
    if !img.is_null() {
        drop(unsafe { Box::from_raw(img) });
    }
}

/// Detector with the default thresholds and layout.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chf_detector_new(out: *mut *mut ChfDetector) -> ChfStatus {
    guard(|| {
        if out.is_null() {
            return fail(ChfStatus::NullPointer, "null output pointer");
        }
        let det = ChfDetector {
            thresholds: ThresholdConfig::default(),
            layout: LayoutConfig::default(),
            options: DetectOptions::default(),
        };
        boxed(det, out)
    })
}

/// Set the threshold of one region; it must lie in (0, 1].
///
/// # Safety
/// `det` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn chf_detector_set_threshold(det: *mut ChfDetector, region: ChfRegion, th: f64) -> ChfStatus {
    guard(|| {
        let Some(det) = (unsafe { det.as_mut() }) else {
            return fail(ChfStatus::NullPointer, "null detector");
        };
        if !(th > 0.0 && th <= 1.0) {
            return fail(ChfStatus::Threshold, format!("threshold {th} outside (0, 1]"));
        }
        det.thresholds.set(region.into(), th);
        ChfStatus::Ok
    })
}

/// Threshold of one region; NaN for a null handle.
///
/// # Safety
/// `det` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn chf_detector_threshold(det: *const ChfDetector, region: ChfRegion) -> f64 {
    unsafe { det.as_ref() }.map_or(f64::NAN, |d| d.thresholds.get(region.into()))
}

/// Pixels the nose tip sits above the higher nostril (default 8).
///
/// # Safety
/// `det` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn chf_detector_set_nose_tip_offset(det: *mut ChfDetector, offset: u32) -> ChfStatus {
    let Some(det) = (unsafe { det.as_mut() }) else {
        return fail(ChfStatus::NullPointer, "null detector");
    };
    det.options.nose_tip_y_offset = offset as usize;
    ChfStatus::Ok
}

/// # Safety
/// `det` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chf_detector_free(det: *mut ChfDetector) {
    if !det.is_null() {
        drop(unsafe { Box::from_raw(det) });
    }
}

/// Detect feature points inside `face` (the whole image when null). Points
/// are written to `out` in image coordinates. A face in which nothing was
/// found is still `Ok`, with `count == 0`.
///
/// # Safety
/// `det`, `img` and `out` must be valid; `face` may be null.
#[no_mangle]
pub unsafe extern "C" fn chf_detect(
    det: *const ChfDetector,
    img: *const ChfImage,
    face: *const ChfRect,
    out: *mut ChfFeaturePoints,
) -> ChfStatus {
    guard(|| {
        let (Some(det), Some(img), false) = (unsafe { det.as_ref() }, unsafe { img.as_ref() }, out.is_null()) else {
            return fail(ChfStatus::NullPointer, "null pointer argument");
        };
        let rect = match unsafe { face.as_ref() } {
            None => img.inner.bounds(),
            Some(r) if r.width == 0 || r.height == 0 => {
                return fail(ChfStatus::InvalidArgument, "face rectangle has zero size");
            }
            Some(r) => Rect::new(r.x as usize, r.y as usize, r.width as usize, r.height as usize),
        };
        if !rect.fits_within(img.inner.width(), img.inner.height()) {
            return from_error(rect.bounds_error(img.inner.width(), img.inner.height()));
        }
        match detect_in_image(&img.inner, rect, &det.thresholds, &det.layout, &det.options) {
            Ok(fp) => {
                unsafe { *out = ChfFeaturePoints::from(&fp) };
                ChfStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Copy of `img` with a plus at every present point and a disc at the nose
/// tip, returned as a new handle.
///
/// # Safety
/// `img`, `points` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chf_draw_markers(
    img: *const ChfImage,
    points: *const ChfFeaturePoints,
    out: *mut *mut ChfImage,
) -> ChfStatus {
    guard(|| {
        let (Some(img), Some(points), false) = (unsafe { img.as_ref() }, unsafe { points.as_ref() }, out.is_null())
        else {
            return fail(ChfStatus::NullPointer, "null pointer argument");
        };
        match chfeatures::draw_markers(&img.inner, &points.to_features()) {
            Ok(inner) => boxed(ChfImage { inner }, out),
            Err(e) => from_error(e),
        }
    })
}

/// Name of a point slot, e.g. "eye_left_outer" or "nose_tip"; null when
/// `index` is out of range. The string is static.
#[no_mangle]
pub extern "C" fn chf_point_name(index: usize) -> *const c_char {
    const NAMES: [&CStr; CHF_POINT_COUNT] = [
        c"eyebrow_right_outer",
        c"eyebrow_right_inner",
        c"eyebrow_left_inner",
        c"eyebrow_left_outer",
        c"eye_right_outer",
        c"eye_right_inner",
        c"eye_left_inner",
        c"eye_left_outer",
        c"mouth_right",
        c"mouth_left",
        c"nostril_right",
        c"nostril_left",
        c"nose_tip",
    ];
    debug_assert!(NAMES[..12].iter().zip(POINT_NAMES).all(|(c, n)| c.to_bytes() == n.as_bytes()));
    NAMES.get(index).map_or(ptr::null(), |s| s.as_ptr())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn chf_status_str(status: ChfStatus) -> *const c_char {
    let s: &CStr = match status {
        ChfStatus::Ok => c"ok",
        ChfStatus::NullPointer => c"null pointer",
        ChfStatus::InvalidArgument => c"invalid argument",
        ChfStatus::Parse => c"malformed image data",
        ChfStatus::Bounds => c"out of bounds",
        ChfStatus::Threshold => c"threshold out of range",
        ChfStatus::Layout => c"face too small for layout",
        ChfStatus::BufferTooSmall => c"buffer too small",
        ChfStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Message of the last failure on this thread, or null when no call has
/// failed yet. Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn chf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

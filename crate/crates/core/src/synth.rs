//! Synthetic frontal faces for tests and demos.
//!
//! A uniform gray face with a dark blob in each ROI: a bar per eyebrow, an
//! ellipse per eye, two small nostril dots and a mouth bar. Blob sizes are
//! chosen so that each blob passes its region's default threshold while the
//! background does not.

use crate::geometry::{roi_layout, LayoutConfig, Rect, Region, RoiLayout};
use crate::raster::GrayImage;

pub const BACKGROUND: u8 = 180;
pub const INK: u8 = 40;

/// Faces smaller than this leave the nostril dots above the nose threshold.
pub const MIN_SIDE: usize = 160;

#[derive(Debug, Clone)]
pub struct SyntheticFace {
    pub image: GrayImage,
    pub layout: RoiLayout,
    pub eyebrow_right: Rect,
    pub eyebrow_left: Rect,
    /// Bounding boxes of the eye ellipses.
    pub eye_right: Rect,
    pub eye_left: Rect,
    /// The image-left and image-right nostril dots.
    pub nostril_image_left: Rect,
    pub nostril_image_right: Rect,
    pub mouth: Rect,
}

impl SyntheticFace {
    /// Panics when either side is below [`MIN_SIDE`].
    pub fn new(width: usize, height: usize) -> Self {
        assert!(width >= MIN_SIDE && height >= MIN_SIDE, "synthetic faces need at least {MIN_SIDE}x{MIN_SIDE}");
        let layout = roi_layout(width, height, &LayoutConfig::default()).expect("default layout");
        let mut image = GrayImage::filled(width, height, BACKGROUND);

        let brow = |r: Rect| Rect::new(r.x + r.w / 2 - 3, r.y + r.h / 4, 6, 3);
        let eyebrow_right = brow(layout.eyebrow_right);
        let eyebrow_left = brow(layout.eyebrow_left);
        for r in [eyebrow_right, eyebrow_left] {
            fill(&mut image, r);
        }

        let eye = |img: &mut GrayImage, r: Rect| -> Rect {
            let (cx, cy) = ((r.x + r.w / 2) as f64, (r.y + r.h / 2) as f64);
            let (a, b) = ((r.w / 8) as f64, (r.h / 10) as f64);
            fill_ellipse(img, cx, cy, a, b)
        };
        let eye_right = eye(&mut image, layout.eye_right);
        let eye_left = eye(&mut image, layout.eye_left);

        let n = layout.nose;
        let dot_y = n.y + n.h / 2;
        let nostril_image_left = Rect::new(n.x + n.w * 35 / 100, dot_y, 2, 2);
        let nostril_image_right = Rect::new(n.x + n.w * 65 / 100 - 2, dot_y, 2, 2);
        fill(&mut image, nostril_image_left);
        fill(&mut image, nostril_image_right);

        let m = layout.mouth;
        let mw = m.w * 2 / 5;
        let mouth = Rect::new(m.x + (m.w - mw) / 2, m.y + m.h / 2 - 1, mw, 3);
        fill(&mut image, mouth);

        SyntheticFace {
            image,
            layout,
            eyebrow_right,
            eyebrow_left,
            eye_right,
            eye_left,
            nostril_image_left,
            nostril_image_right,
            mouth,
        }
    }

    /// Blob responsible for a named point (see `detect::POINT_NAMES`).
    pub fn blob_for(&self, name: &str) -> Option<Rect> {
        Some(match name {
            "eyebrow_right_outer" | "eyebrow_right_inner" => self.eyebrow_right,
            "eyebrow_left_inner" | "eyebrow_left_outer" => self.eyebrow_left,
            "eye_right_outer" | "eye_right_inner" => self.eye_right,
            "eye_left_inner" | "eye_left_outer" => self.eye_left,
            "mouth_right" | "mouth_left" => self.mouth,
            "nostril_right" => self.nostril_image_right,
            "nostril_left" => self.nostril_image_left,
            _ => return None,
        })
    }

    pub fn blob_region(&self, region: Region) -> Vec<Rect> {
        match region {
            Region::EyebrowRight => vec![self.eyebrow_right],
            Region::EyebrowLeft => vec![self.eyebrow_left],
            Region::EyeRight => vec![self.eye_right],
            Region::EyeLeft => vec![self.eye_left],
            Region::Nose => vec![self.nostril_image_left, self.nostril_image_right],
            Region::Mouth => vec![self.mouth],
        }
    }
}

fn fill(img: &mut GrayImage, r: Rect) {
    for y in r.y..r.bottom() {
        for x in r.x..r.right() {
            img.set(x, y, INK);
        }
    }
}

fn fill_ellipse(img: &mut GrayImage, cx: f64, cy: f64, a: f64, b: f64) -> Rect {
    let (mut x0, mut y0, mut x1, mut y1) = (usize::MAX, usize::MAX, 0, 0);
    let (xs, ys) = ((cx - a).floor() as usize, (cy - b).floor() as usize);
    for y in ys..=(cy + b).ceil() as usize {
        for x in xs..=(cx + a).ceil() as usize {
            let (dx, dy) = ((x as f64 - cx) / a, (y as f64 - cy) / b);
            if dx * dx + dy * dy <= 1.0 {
                img.set(x, y, INK);
                x0 = x0.min(x);
                y0 = y0.min(y);
                x1 = x1.max(x);
                y1 = y1.max(y);
            }
        }
    }
    Rect::new(x0, y0, x1 - x0 + 1, y1 - y0 + 1)
}

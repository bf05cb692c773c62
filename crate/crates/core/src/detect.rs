//! Corner, nostril and nose-tip localisation on the filtering images.
//!
//! Eyebrow, eye and mouth corners come from a linear search for the first
//! white pixel. Nostrils come from the last two connected components of the
//! nose filtering image; the nose tip is computed from them.

use serde::{Deserialize, Serialize};

use crate::chfilter::{binarize_roi, ThresholdConfig};
use crate::error::Result;
use crate::geometry::{Region, RoiLayout};
use crate::raster::{crop, BinaryImage, GrayImage, Point};

/// Pixels between the higher nostril and the computed nose tip.
pub const DEFAULT_NOSE_TIP_Y_OFFSET: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vertical {
    TopDown,
    BottomUp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Horizontal {
    FromLeft,
    FromRight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchMode {
    pub vertical: Vertical,
    pub horizontal: Horizontal,
}

impl SearchMode {
    pub const ALL: [SearchMode; 4] = [
        SearchMode::new(Vertical::TopDown, Horizontal::FromLeft),
        SearchMode::new(Vertical::TopDown, Horizontal::FromRight),
        SearchMode::new(Vertical::BottomUp, Horizontal::FromLeft),
        SearchMode::new(Vertical::BottomUp, Horizontal::FromRight),
    ];

    pub const fn new(vertical: Vertical, horizontal: Horizontal) -> Self {
        SearchMode { vertical, horizontal }
    }

    /// Eyebrows are searched top-down, eyes and the mouth bottom-up.
    pub fn vertical_for(region: Region) -> Vertical {
        match region {
            Region::EyebrowRight | Region::EyebrowLeft => Vertical::TopDown,
            _ => Vertical::BottomUp,
        }
    }
}

/// Traversal used by [`corner_search_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanOrder {
    /// Whole columns first, starting from the search side. Finds the
    /// horizontally extreme white pixel.
    #[default]
    ColumnMajor,
    /// Whole rows first, in the vertical direction of the mode.
    RowMajor,
}

/// First white pixel in column-major order: columns advance from the
/// `horizontal` side and, within a column, rows advance in the `vertical`
/// direction.
pub fn corner_search(bin: &BinaryImage, mode: SearchMode) -> Option<Point> {
    corner_search_with(bin, mode, ScanOrder::ColumnMajor)
}

pub fn corner_search_with(bin: &BinaryImage, mode: SearchMode, order: ScanOrder) -> Option<Point> {
    let (w, h) = (bin.width(), bin.height());
    let col = |i: usize| match mode.horizontal {
        Horizontal::FromLeft => i,
        Horizontal::FromRight => w - 1 - i,
    };
    let row = |j: usize| match mode.vertical {
        Vertical::TopDown => j,
        Vertical::BottomUp => h - 1 - j,
    };
    match order {
        ScanOrder::ColumnMajor => (0..w).find_map(|i| {
            let x = col(i);
            (0..h).map(row).find(|&y| bin.is_white(x, y)).map(|y| Point::new(x, y))
        }),
        ScanOrder::RowMajor => (0..h).find_map(|j| {
            let y = row(j);
            (0..w).map(col).find(|&x| bin.is_white(x, y)).map(|x| Point::new(x, y))
        }),
    }
}

/// Boundary pixels of one 8-connected white component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contour {
    /// Boundary pixels sorted by `x`, then `y`.
    pub points: Vec<Point>,
    /// Position of the component in first-encounter raster order.
    pub component_id: usize,
    /// Number of pixels in the whole component.
    pub area: usize,
}

const UNLABELED: u32 = u32::MAX;

fn find_root(parent: &mut [u32], mut a: u32) -> u32 {
    while parent[a as usize] != a {
        let grand = parent[parent[a as usize] as usize];
        parent[a as usize] = grand;
        a = grand;
    }
    a
}

fn union(parent: &mut [u32], a: u32, b: u32) -> u32 {
    let (ra, rb) = (find_root(parent, a), find_root(parent, b));
    let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
    parent[hi as usize] = lo;
    lo
}

/// Label 8-connected white components. Returns a per-pixel label image
/// (`u32::MAX` for background) with labels numbered in first-encounter
/// raster order, and the component count.
pub fn label_components(bin: &BinaryImage) -> (Vec<u32>, usize) {
    let (w, h) = (bin.width(), bin.height());
    let px = bin.pixels();
    let mut labels = vec![UNLABELED; w * h];
    let mut parent: Vec<u32> = Vec::new();

    // First pass: provisional labels from the already visited W, NW, N, NE
    // neighbours, with equivalences merged in a union-find forest.
    for y in 0..h {
        for x in 0..w {
            let i = y * w + x;
            if px[i] != BinaryImage::WHITE {
                continue;
            }
            let mut current = UNLABELED;
            let mut merge = |n: u32, parent: &mut Vec<u32>| {
                if n == UNLABELED {
                    return;
                }
                current = if current == UNLABELED { find_root(parent, n) } else { union(parent, current, n) };
            };
            if x > 0 {
                merge(labels[i - 1], &mut parent);
            }
            if y > 0 {
                let up = i - w;
                if x > 0 {
                    merge(labels[up - 1], &mut parent);
                }
                merge(labels[up], &mut parent);
                if x + 1 < w {
                    merge(labels[up + 1], &mut parent);
                }
            }
            if current == UNLABELED {
                current = parent.len() as u32;
                parent.push(current);
            }
            labels[i] = current;
        }
    }

    // Second pass: resolve roots and renumber by first raster encounter.
    let mut dense = vec![UNLABELED; parent.len()];
    let mut count = 0u32;
    for l in labels.iter_mut() {
        if *l == UNLABELED {
            continue;
        }
        let root = find_root(&mut parent, *l) as usize;
        if dense[root] == UNLABELED {
            dense[root] = count;
            count += 1;
        }
        *l = dense[root];
    }
    (labels, count as usize)
}

/// One contour per 8-connected white component, in first-encounter raster
/// order. A component pixel is on the contour when a 4-neighbour is
/// background or lies outside the image.
pub fn find_components(bin: &BinaryImage) -> Vec<Contour> {
    let (w, h) = (bin.width(), bin.height());
    let (labels, count) = label_components(bin);
    let mut contours: Vec<Contour> = (0..count)
        .map(|component_id| Contour { points: Vec::new(), component_id, area: 0 })
        .collect();
    let white = |x: usize, y: usize| labels[y * w + x] != UNLABELED;
    for y in 0..h {
        for x in 0..w {
            let l = labels[y * w + x];
            if l == UNLABELED {
                continue;
            }
            let c = &mut contours[l as usize];
            c.area += 1;
            let interior = x > 0
                && y > 0
                && x + 1 < w
                && y + 1 < h
                && white(x - 1, y)
                && white(x + 1, y)
                && white(x, y - 1)
                && white(x, y + 1);
            if !interior {
                c.points.push(Point::new(x, y));
            }
        }
    }
    // Raster order pushes in (y, x); `Point` orders by (x, y).
    for c in &mut contours {
        c.points.sort_unstable();
    }
    contours
}

/// Nostril points as named by the contour rule: `right` is the max-x
/// element of the last contour, `left` the min-x element of the one before.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NostrilPair {
    pub right: Point,
    pub left: Point,
}

impl NostrilPair {
    pub fn offset(self, dx: usize, dy: usize) -> Self {
        NostrilPair { right: self.right.offset(dx, dy), left: self.left.offset(dx, dy) }
    }
}

/// Pick nostrils from the last (`P`) and previous-last (`Q`) contours.
/// `None` when fewer than two contours exist.
pub fn select_nostrils(contours: &[Contour]) -> Option<NostrilPair> {
    let [.., q, p] = contours else {
        return None;
    };
    let key = |pt: &&Point| (pt.x, pt.y);
    let right = *p.points.iter().max_by_key(key)?;
    let left = *q.points.iter().min_by_key(key)?;
    Some(NostrilPair { right, left })
}

/// Nose tip with the default vertical offset.
pub fn nose_tip(pair: NostrilPair) -> Point {
    nose_tip_with_offset(pair, DEFAULT_NOSE_TIP_Y_OFFSET)
}

/// Midpoint of the nostril x values (truncated), `y_offset` pixels above the
/// higher nostril, clamped at row 0.
pub fn nose_tip_with_offset(pair: NostrilPair, y_offset: usize) -> Point {
    Point {
        x: (pair.right.x + pair.left.x) / 2,
        y: pair.right.y.min(pair.left.y).saturating_sub(y_offset),
    }
}

/// Corner candidates of a two-corner region, keyed by the image side the
/// search started from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CornerPair {
    /// Found by the search that starts at the left image edge.
    pub image_left: Option<Point>,
    /// Found by the search that starts at the right image edge.
    pub image_right: Option<Point>,
}

impl CornerPair {
    pub fn offset(self, dx: usize, dy: usize) -> Self {
        CornerPair {
            image_left: self.image_left.map(|p| p.offset(dx, dy)),
            image_right: self.image_right.map(|p| p.offset(dx, dy)),
        }
    }

    pub fn found(&self) -> usize {
        self.image_left.is_some() as usize + self.image_right.is_some() as usize
    }
}

/// Detected feature points in the coordinates of the image detection ran on.
///
/// Right/left follow the subject, so `eyebrow_right` lies in the left half
/// of the image and its `image_left` corner is the outer one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FeaturePoints {
    pub eyebrow_right: CornerPair,
    pub eyebrow_left: CornerPair,
    pub eye_right: CornerPair,
    pub eye_left: CornerPair,
    pub mouth: CornerPair,
    pub nostrils: Option<NostrilPair>,
    pub nose_tip: Option<Point>,
}

/// Names of the twelve corner and nostril points, in output order.
pub const POINT_NAMES: [&str; 12] = [
    "eyebrow_right_outer",
    "eyebrow_right_inner",
    "eyebrow_left_inner",
    "eyebrow_left_outer",
    "eye_right_outer",
    "eye_right_inner",
    "eye_left_inner",
    "eye_left_outer",
    "mouth_right",
    "mouth_left",
    "nostril_right",
    "nostril_left",
];

impl FeaturePoints {
    pub fn corners(&self, region: Region) -> Option<&CornerPair> {
        match region {
            Region::EyebrowRight => Some(&self.eyebrow_right),
            Region::EyebrowLeft => Some(&self.eyebrow_left),
            Region::EyeRight => Some(&self.eye_right),
            Region::EyeLeft => Some(&self.eye_left),
            Region::Mouth => Some(&self.mouth),
            Region::Nose => None,
        }
    }

    fn corners_mut(&mut self, region: Region) -> Option<&mut CornerPair> {
        match region {
            Region::EyebrowRight => Some(&mut self.eyebrow_right),
            Region::EyebrowLeft => Some(&mut self.eyebrow_left),
            Region::EyeRight => Some(&mut self.eye_right),
            Region::EyeLeft => Some(&mut self.eye_left),
            Region::Mouth => Some(&mut self.mouth),
            Region::Nose => None,
        }
    }

    /// The two points of a region in `POINT_NAMES` order.
    pub fn region_points(&self, region: Region) -> [Option<Point>; 2] {
        match region {
            Region::Nose => match self.nostrils {
                Some(n) => [Some(n.right), Some(n.left)],
                None => [None, None],
            },
            _ => {
                let c = self.corners(region).expect("corner region");
                [c.image_left, c.image_right]
            }
        }
    }

    /// The twelve points by name, in `POINT_NAMES` order.
    pub fn slots(&self) -> [(&'static str, Option<Point>); 12] {
        let mut out = [("", None); 12];
        for (i, region) in Region::ALL.iter().enumerate() {
            let pts = self.region_points(*region);
            // Nose comes fifth in Region::ALL but last in POINT_NAMES.
            let base = match region {
                Region::Nose => 10,
                Region::Mouth => 8,
                _ => 2 * i,
            };
            out[base] = (POINT_NAMES[base], pts[0]);
            out[base + 1] = (POINT_NAMES[base + 1], pts[1]);
        }
        out
    }

    /// Present corner and nostril points with their names (nose tip excluded).
    pub fn named_points(&self) -> Vec<(&'static str, Point)> {
        self.slots().into_iter().filter_map(|(n, p)| p.map(|p| (n, p))).collect()
    }

    /// Number of present points including the nose tip.
    pub fn count(&self) -> usize {
        self.named_points().len() + self.nose_tip.is_some() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.count() == 0
    }

    /// Whether any of the six regions produced at least one point.
    pub fn any_region_detected(&self) -> bool {
        Region::ALL.iter().any(|&r| self.region_points(r).iter().any(Option::is_some))
    }

    pub fn offset(self, dx: usize, dy: usize) -> Self {
        FeaturePoints {
            eyebrow_right: self.eyebrow_right.offset(dx, dy),
            eyebrow_left: self.eyebrow_left.offset(dx, dy),
            eye_right: self.eye_right.offset(dx, dy),
            eye_left: self.eye_left.offset(dx, dy),
            mouth: self.mouth.offset(dx, dy),
            nostrils: self.nostrils.map(|n| n.offset(dx, dy)),
            nose_tip: self.nose_tip.map(|p| p.offset(dx, dy)),
        }
    }
}

/// Knobs of the detection stage that are not thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DetectOptions {
    pub scan_order: ScanOrder,
    pub nose_tip_y_offset: usize,
    /// Components with fewer pixels are ignored when picking nostrils.
    pub min_area: usize,
}

impl Default for DetectOptions {
    fn default() -> Self {
        DetectOptions {
            scan_order: ScanOrder::ColumnMajor,
            nose_tip_y_offset: DEFAULT_NOSE_TIP_Y_OFFSET,
            min_area: 0,
        }
    }
}

/// Result of running one region's sub-pipeline, in face coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionDetection {
    Corners(CornerPair),
    Nostrils(Option<NostrilPair>),
}

/// Crop, binarize and search a single ROI of `face`.
pub fn detect_region(
    face: &GrayImage,
    layout: &RoiLayout,
    region: Region,
    th: f64,
    opts: &DetectOptions,
) -> Result<RegionDetection> {
    let rect = layout.rect(region);
    let roi = crop(face, rect)?;
    let bin = binarize_roi(&roi, th)?;
    Ok(match region {
        Region::Nose => {
            let mut contours = find_components(&bin);
            if opts.min_area > 0 {
                contours.retain(|c| c.area >= opts.min_area);
            }
            RegionDetection::Nostrils(select_nostrils(&contours).map(|n| n.offset(rect.x, rect.y)))
        }
        _ => {
            let vertical = SearchMode::vertical_for(region);
            let search = |horizontal| {
                corner_search_with(&bin, SearchMode::new(vertical, horizontal), opts.scan_order)
            };
            let pair = CornerPair {
                image_left: search(Horizontal::FromLeft),
                image_right: search(Horizontal::FromRight),
            };
            RegionDetection::Corners(pair.offset(rect.x, rect.y))
        }
    })
}

/// Run all six ROI sub-pipelines with default options.
pub fn detect_features(
    face: &GrayImage,
    layout: &RoiLayout,
    th: &ThresholdConfig,
) -> Result<FeaturePoints> {
    detect_features_with(face, layout, th, &DetectOptions::default())
}

pub fn detect_features_with(
    face: &GrayImage,
    layout: &RoiLayout,
    th: &ThresholdConfig,
    opts: &DetectOptions,
) -> Result<FeaturePoints> {
    if let Some(r) = Region::ALL.iter().map(|&r| layout.rect(r)).find(|r| !r.fits_within(face.width(), face.height())) {
        return Err(r.bounds_error(face.width(), face.height()));
    }
    let mut out = FeaturePoints::default();
    for region in Region::ALL {
        match detect_region(face, layout, region, th.get(region), opts)? {
            RegionDetection::Corners(pair) => {
                *out.corners_mut(region).expect("corner region") = pair;
            }
            RegionDetection::Nostrils(pair) => {
                out.nostrils = pair;
                out.nose_tip = pair.map(|p| nose_tip_with_offset(p, opts.nose_tip_y_offset));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::geometry::{roi_layout, LayoutConfig};

    fn mask(w: usize, h: usize, white: &[(usize, usize)]) -> BinaryImage {
        BinaryImage::from_fn(w, h, |x, y| white.contains(&(x, y)))
    }

    #[test]
    fn single_pixel_found_by_every_mode() {
        let bin = mask(7, 5, &[(3, 2)]);
        for mode in SearchMode::ALL {
            assert_eq!(corner_search(&bin, mode), Some(Point::new(3, 2)));
            assert_eq!(corner_search_with(&bin, mode, ScanOrder::RowMajor), Some(Point::new(3, 2)));
        }
    }

    #[test]
    fn blank_mask_has_no_corner() {
        let bin = mask(4, 4, &[]);
        assert!(SearchMode::ALL.iter().all(|&m| corner_search(&bin, m).is_none()));
    }

    #[test]
    fn column_major_finds_extreme_columns() {
        // An arch: highest in the middle, lowest at the ends.
        let bin = mask(7, 4, &[(0, 3), (1, 2), (2, 1), (3, 0), (4, 1), (5, 2), (6, 3), (3, 3)]);
        let td_left = SearchMode::new(Vertical::TopDown, Horizontal::FromLeft);
        let bu_right = SearchMode::new(Vertical::BottomUp, Horizontal::FromRight);
        assert_eq!(corner_search(&bin, td_left), Some(Point::new(0, 3)));
        assert_eq!(corner_search(&bin, bu_right), Some(Point::new(6, 3)));
        assert_eq!(corner_search_with(&bin, td_left, ScanOrder::RowMajor), Some(Point::new(3, 0)));
        assert_eq!(corner_search_with(&bin, bu_right, ScanOrder::RowMajor), Some(Point::new(6, 3)));
    }

    #[test]
    fn column_scan_respects_vertical_direction() {
        let bin = mask(3, 5, &[(1, 1), (1, 3)]);
        let td = SearchMode::new(Vertical::TopDown, Horizontal::FromLeft);
        let bu = SearchMode::new(Vertical::BottomUp, Horizontal::FromLeft);
        assert_eq!(corner_search(&bin, td), Some(Point::new(1, 1)));
        assert_eq!(corner_search(&bin, bu), Some(Point::new(1, 3)));
    }

    #[test]
    fn no_components_in_blank_image() {
        assert!(find_components(&mask(5, 5, &[])).is_empty());
    }

    #[test]
    fn small_block_is_all_boundary() {
        let bin = mask(10, 10, &[(4, 4), (5, 4), (4, 5), (5, 5)]);
        let cs = find_components(&bin);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].area, 4);
        assert_eq!(
            cs[0].points,
            vec![Point::new(4, 4), Point::new(4, 5), Point::new(5, 4), Point::new(5, 5)]
        );
    }

    #[test]
    fn interior_pixels_are_not_boundary() {
        let bin = BinaryImage::from_fn(5, 5, |x, y| (1..4).contains(&x) && (1..4).contains(&y));
        let cs = find_components(&bin);
        assert_eq!(cs[0].area, 9);
        assert_eq!(cs[0].points.len(), 8);
        assert!(!cs[0].points.contains(&Point::new(2, 2)));
        // Image border counts as background.
        let full = BinaryImage::from_fn(3, 3, |_, _| true);
        assert_eq!(find_components(&full)[0].points.len(), 8);
    }

    #[test]
    fn diagonal_pixels_connect_and_order_by_encounter() {
        // A 'V' merges late: its right arm starts a new provisional label.
        let bin = mask(6, 4, &[(0, 0), (4, 0), (1, 1), (3, 1), (2, 2), (5, 3)]);
        let cs = find_components(&bin);
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].area, 5);
        assert_eq!(cs[1].points, vec![Point::new(5, 3)]);
        let (labels, n) = label_components(&bin);
        assert_eq!(n, 2);
        assert_eq!(labels[4], 0);
    }

    #[test]
    fn nostrils_need_two_contours() {
        let cs = find_components(&mask(8, 8, &[(2, 2)]));
        assert_eq!(select_nostrils(&cs), None);
        assert_eq!(select_nostrils(&[]), None);
    }

    #[test]
    fn nostril_rule_on_singletons() {
        let cs = vec![
            Contour { points: vec![Point::new(20, 42)], component_id: 0, area: 1 },
            Contour { points: vec![Point::new(30, 40)], component_id: 1, area: 1 },
        ];
        let pair = select_nostrils(&cs).unwrap();
        assert_eq!(pair, NostrilPair { right: Point::new(30, 40), left: Point::new(20, 42) });
    }

    #[test]
    fn nostril_ties_break_on_y() {
        let bin = mask(12, 6, &[(1, 1), (1, 2), (2, 1), (8, 2), (9, 2), (9, 3)]);
        let pair = select_nostrils(&find_components(&bin)).unwrap();
        assert_eq!(pair.right, Point::new(9, 3));
        assert_eq!(pair.left, Point::new(1, 1));
    }

    #[test]
    fn nose_tip_formula() {
        let tip = |r: (usize, usize), l: (usize, usize)| {
            nose_tip(NostrilPair { right: Point::new(r.0, r.1), left: Point::new(l.0, l.1) })
        };
        assert_eq!(tip((30, 40), (20, 42)), Point::new(25, 32));
        assert_eq!(tip((10, 20), (20, 20)), Point::new(15, 12));
        assert_eq!(tip((4, 5), (6, 5)), Point::new(5, 0));
        assert_eq!(tip((3, 9), (6, 9)), Point::new(4, 1));
    }

    #[test]
    fn blank_face_detects_nothing() {
        let face = GrayImage::filled(120, 100, 128);
        let layout = roi_layout(120, 100, &LayoutConfig::default()).unwrap();
        let pts = detect_features(&face, &layout, &ThresholdConfig::default()).unwrap();
        assert!(pts.is_empty());
        assert!(!pts.any_region_detected());
    }

    #[test]
    fn layout_must_fit_face() {
        let face = GrayImage::filled(100, 100, 128);
        let layout = roi_layout(200, 200, &LayoutConfig::default()).unwrap();
        assert!(matches!(
            detect_features(&face, &layout, &ThresholdConfig::default()),
            Err(Error::Bounds { .. })
        ));
    }

    #[test]
    fn min_area_filters_specks() {
        let mut face = GrayImage::filled(100, 100, 200);
        let layout = roi_layout(100, 100, &LayoutConfig::default()).unwrap();
        let n = layout.nose;
        // Two 2x2 dots and one 1-pixel speck to their right.
        for (x, y) in [(10, 8), (11, 8), (10, 9), (11, 9), (30, 8), (31, 8), (30, 9), (31, 9), (40, 8)] {
            face.set(n.x + x, n.y + y, 20);
        }
        let th = ThresholdConfig::default().with(Region::Nose, 0.01);
        let plain = detect_features(&face, &layout, &th).unwrap();
        assert_eq!(plain.nostrils.unwrap().right, Point::new(n.x + 40, n.y + 8));
        let opts = DetectOptions { min_area: 2, ..Default::default() };
        let filtered = detect_features_with(&face, &layout, &th, &opts).unwrap();
        assert_eq!(filtered.nostrils.unwrap().right, Point::new(n.x + 31, n.y + 9));
        assert_eq!(filtered.nostrils.unwrap().left, Point::new(n.x + 10, n.y + 8));
    }

    #[test]
    fn slots_follow_point_names() {
        let pts = FeaturePoints {
            eye_left: CornerPair { image_left: Some(Point::new(1, 1)), image_right: None },
            mouth: CornerPair { image_left: None, image_right: Some(Point::new(2, 2)) },
            nostrils: Some(NostrilPair { right: Point::new(3, 3), left: Point::new(4, 4) }),
            ..Default::default()
        };
        let named = pts.named_points();
        assert_eq!(
            named,
            vec![
                ("eye_left_inner", Point::new(1, 1)),
                ("mouth_left", Point::new(2, 2)),
                ("nostril_right", Point::new(3, 3)),
                ("nostril_left", Point::new(4, 4)),
            ]
        );
    }
}

//! Brute-force oracles and fixtures shared by the integration tests.
//!
//! Nothing here calls into the code paths it is used to check: labeling is
//! an explicit-stack flood fill, thresholds are compared as exact rationals,
//! and corner ranking sorts every white pixel.

#![allow(dead_code)]

use std::path::Path;

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use chfeatures::synth::{SyntheticFace, INK};
use chfeatures::{BinaryImage, GrayImage, Point, Rect};
use chfeatures::detect::{Horizontal, SearchMode, Vertical};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_gray(rng: &mut StdRng, w: usize, h: usize) -> GrayImage {
    // Narrow value ranges make repeated values (and bin boundaries) common.
    let hi: u8 = *[3u8, 16, 255].get(rng.gen_range(0..3)).unwrap();
    let lo: u8 = rng.gen_range(0..=hi);
    GrayImage::from_fn(w, h, |_, _| rng.gen_range(lo..=hi))
}

pub fn random_mask(rng: &mut StdRng, w: usize, h: usize, density: f64) -> BinaryImage {
    BinaryImage::from_fn(w, h, |_, _| rng.gen_bool(density))
}

/// Random blobs grown by random walks, plus optional salt noise.
pub fn random_blobs(rng: &mut StdRng, w: usize, h: usize, blobs: usize, steps: usize, noise: f64) -> BinaryImage {
    let mut on = vec![false; w * h];
    for _ in 0..blobs {
        let (mut x, mut y) = (rng.gen_range(0..w) as isize, rng.gen_range(0..h) as isize);
        for _ in 0..steps {
            on[y as usize * w + x as usize] = true;
            x = (x + rng.gen_range(-1..=1)).clamp(0, w as isize - 1);
            y = (y + rng.gen_range(-1..=1)).clamp(0, h as isize - 1);
        }
    }
    for v in on.iter_mut() {
        if rng.gen_bool(noise) {
            *v = true;
        }
    }
    BinaryImage::from_fn(w, h, |x, y| on[y * w + x])
}

/// Pixel counts per gray level by scanning once per level.
pub fn oracle_histogram(img: &GrayImage) -> Vec<u64> {
    (0..=255u8).map(|v| img.pixels().iter().filter(|&&p| p == v).count() as u64).collect()
}

/// Sequential sum of per-level probabilities.
pub fn oracle_cdf(img: &GrayImage) -> Vec<f64> {
    let counts = oracle_histogram(img);
    let n = img.len() as f64;
    let mut acc = 0.0;
    counts
        .iter()
        .map(|&c| {
            acc += c as f64 / n;
            acc
        })
        .collect()
}

/// Pixelwise `cdf(I(x, y)) <= th` with the cdf and `th` as exact rationals.
pub fn oracle_filter(img: &GrayImage, th: f64) -> Vec<u8> {
    let n = img.len();
    let th = BigRational::from_float(th).expect("finite threshold");
    let mut out = Vec::with_capacity(n);
    for y in 0..img.height() {
        for x in 0..img.width() {
            let v = img.get(x, y);
            let below = img.pixels().iter().filter(|&&p| p <= v).count();
            let cdf = BigRational::new((below as i64).into(), (n as i64).into());
            out.push(if cdf <= th { 255 } else { 0 });
        }
    }
    out
}

/// Minimum over all white pixels of (distance of column from the start
/// side, row in the vertical direction).
pub fn oracle_corner(bin: &BinaryImage, mode: SearchMode) -> Option<Point> {
    let (w, h) = (bin.width(), bin.height());
    let mut all = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if bin.is_white(x, y) {
                let col = match mode.horizontal {
                    Horizontal::FromLeft => x,
                    Horizontal::FromRight => w - 1 - x,
                };
                let row = match mode.vertical {
                    Vertical::TopDown => y,
                    Vertical::BottomUp => h - 1 - y,
                };
                all.push(((col, row), Point::new(x, y)));
            }
        }
    }
    all.sort();
    all.first().map(|(_, p)| *p)
}

/// Component pixel sets in first raster encounter order, by explicit-stack
/// flood fill over the 8-neighbourhood.
pub fn oracle_components(bin: &BinaryImage) -> Vec<Vec<Point>> {
    let (w, h) = (bin.width(), bin.height());
    let mut seen = vec![false; w * h];
    let mut comps = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if !bin.is_white(x, y) || seen[y * w + x] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![(x, y)];
            seen[y * w + x] = true;
            while let Some((cx, cy)) = stack.pop() {
                comp.push(Point::new(cx, cy));
                for dy in -1isize..=1 {
                    for dx in -1isize..=1 {
                        let (nx, ny) = (cx as isize + dx, cy as isize + dy);
                        if nx < 0 || ny < 0 || nx >= w as isize || ny >= h as isize {
                            continue;
                        }
                        let (nx, ny) = (nx as usize, ny as usize);
                        if bin.is_white(nx, ny) && !seen[ny * w + nx] {
                            seen[ny * w + nx] = true;
                            stack.push((nx, ny));
                        }
                    }
                }
            }
            comp.sort();
            comps.push(comp);
        }
    }
    comps
}

/// Pixels of `comp` with a background or out-of-image 4-neighbour.
pub fn oracle_boundary(bin: &BinaryImage, comp: &[Point]) -> Vec<Point> {
    let (w, h) = (bin.width() as isize, bin.height() as isize);
    let white = |x: isize, y: isize| x >= 0 && y >= 0 && x < w && y < h && bin.is_white(x as usize, y as usize);
    let mut out: Vec<Point> = comp
        .iter()
        .copied()
        .filter(|p| {
            let (x, y) = (p.x as isize, p.y as isize);
            !(white(x - 1, y) && white(x + 1, y) && white(x, y - 1) && white(x, y + 1))
        })
        .collect();
    out.sort_by_key(|p| (p.x, p.y));
    out
}

/// The nostril rule applied to flood-fill components.
pub fn oracle_nostrils(bin: &BinaryImage) -> Option<(Point, Point)> {
    let comps = oracle_components(bin);
    if comps.len() < 2 {
        return None;
    }
    let p = oracle_boundary(bin, &comps[comps.len() - 1]);
    let q = oracle_boundary(bin, &comps[comps.len() - 2]);
    Some((*p.last().unwrap(), q[0]))
}

/// Two random nostril-like blobs side by side, sometimes touching an edge
/// or each other, with occasional specks.
pub fn two_blob_mask(rng: &mut StdRng) -> BinaryImage {
    let (w, h) = (rng.gen_range(20..48), rng.gen_range(8..24));
    let mut on = vec![false; w * h];
    let mut blob = |cx: usize, cy: usize, rx: usize, ry: usize, rng: &mut StdRng| {
        for y in cy.saturating_sub(ry)..(cy + ry + 1).min(h) {
            for x in cx.saturating_sub(rx)..(cx + rx + 1).min(w) {
                if rng.gen_bool(0.85) {
                    on[y * w + x] = true;
                }
            }
        }
    };
    let y1 = rng.gen_range(0..h);
    let y2 = rng.gen_range(0..h);
    blob(rng.gen_range(0..w / 2), y1, rng.gen_range(0..4), rng.gen_range(0..3), rng);
    blob(rng.gen_range(w / 2..w), y2, rng.gen_range(0..4), rng.gen_range(0..3), rng);
    if rng.gen_bool(0.2) {
        let i = rng.gen_range(0..w * h);
        on[i] = true;
    }
    BinaryImage::from_fn(w, h, |x, y| on[y * w + x])
}

/// Expected points of a synthetic face, derived from the drawn blobs.
pub struct Expected {
    pub named: Vec<(&'static str, Point)>,
    pub nose_tip: Point,
}

fn ink_corner(img: &GrayImage, r: Rect, mode: SearchMode) -> Point {
    let bin = BinaryImage::from_fn(r.w, r.h, |x, y| img.get(r.x + x, r.y + y) == INK);
    let p = oracle_corner(&bin, mode).expect("blob has ink");
    Point::new(p.x + r.x, p.y + r.y)
}

pub fn expected_points(face: &SyntheticFace) -> Expected {
    use Horizontal::*;
    use Vertical::*;
    let c = |r: Rect, v, hz| ink_corner(&face.image, r, SearchMode::new(v, hz));
    let right = {
        let r = face.nostril_image_right;
        Point::new(r.right() - 1, r.bottom() - 1)
    };
    let left = Point::new(face.nostril_image_left.x, face.nostril_image_left.y);
    let named = vec![
        ("eyebrow_right_outer", c(face.eyebrow_right, TopDown, FromLeft)),
        ("eyebrow_right_inner", c(face.eyebrow_right, TopDown, FromRight)),
        ("eyebrow_left_inner", c(face.eyebrow_left, TopDown, FromLeft)),
        ("eyebrow_left_outer", c(face.eyebrow_left, TopDown, FromRight)),
        ("eye_right_outer", c(face.eye_right, BottomUp, FromLeft)),
        ("eye_right_inner", c(face.eye_right, BottomUp, FromRight)),
        ("eye_left_inner", c(face.eye_left, BottomUp, FromLeft)),
        ("eye_left_outer", c(face.eye_left, BottomUp, FromRight)),
        ("mouth_right", c(face.mouth, BottomUp, FromLeft)),
        ("mouth_left", c(face.mouth, BottomUp, FromRight)),
        ("nostril_right", right),
        ("nostril_left", left),
    ];
    let nose_tip = Point::new((right.x + left.x) / 2, right.y.min(left.y).saturating_sub(8));
    Expected { named, nose_tip }
}

/// 20 BioID-ordered annotation points whose mapped slots equal `named`.
/// Unused slots get the face centre.
pub fn bioid_points(named: &[(&'static str, Point)], fill: (f64, f64)) -> Vec<(f64, f64)> {
    let index = |name: &str| match name {
        "eyebrow_right_outer" => 4,
        "eyebrow_right_inner" => 5,
        "eyebrow_left_inner" => 6,
        "eyebrow_left_outer" => 7,
        "eye_right_outer" => 9,
        "eye_right_inner" => 10,
        "eye_left_inner" => 11,
        "eye_left_outer" => 12,
        "mouth_right" => 2,
        "mouth_left" => 3,
        "nostril_right" => 16,
        "nostril_left" => 15,
        other => panic!("unknown point {other}"),
    };
    let mut pts = vec![fill; 20];
    for (name, p) in named {
        pts[index(name)] = (p.x as f64, p.y as f64);
    }
    pts
}

pub fn pts_text(points: &[(f64, f64)]) -> String {
    let mut s = format!("version: 1\nn_points:  {}\n{{\n", points.len());
    for (x, y) in points {
        s.push_str(&format!("{x:.3} {y:.3}\n"));
    }
    s.push_str("}\n");
    s
}

/// Write `<name>.pgm`, `<name>.face` and `<name>.pts` into `dir`.
pub fn write_sample(dir: &Path, name: &str, img: &GrayImage, face: Rect, points: &[(f64, f64)]) {
    std::fs::write(dir.join(format!("{name}.pgm")), chfeatures::save_pgm(img)).unwrap();
    std::fs::write(dir.join(format!("{name}.face")), format!("{} {} {} {}\n", face.x, face.y, face.w, face.h))
        .unwrap();
    std::fs::write(dir.join(format!("{name}.pts")), pts_text(points)).unwrap();
}

/// A synthetic face of `w`x`h` pasted at `(ox, oy)` into a larger canvas,
/// with its BioID-style truth in canvas coordinates.
pub fn placed_face(w: usize, h: usize, ox: usize, oy: usize) -> (GrayImage, Rect, Vec<(f64, f64)>) {
    let face = SyntheticFace::new(w, h);
    let mut canvas = GrayImage::filled(w + ox + 17, h + oy + 11, 200);
    for y in 0..h {
        for x in 0..w {
            canvas.set(x + ox, y + oy, face.image.get(x, y));
        }
    }
    let named: Vec<_> = expected_points(&face).named.iter().map(|&(n, p)| (n, p.offset(ox, oy))).collect();
    let fill = ((ox + w / 2) as f64, (oy + h / 2) as f64);
    (canvas, Rect::new(ox, oy, w, h), bioid_points(&named, fill))
}

/// `n` varied samples: random sizes, placements, background noise and
/// annotation jitter, so that rates are neither all 0 nor all 100.
pub fn write_noisy_dataset(dir: &Path, n: usize, seed: u64) {
    let mut rng = rng(seed);
    for i in 0..n {
        let (w, h) = (rng.gen_range(160..260), rng.gen_range(160..260));
        let (ox, oy) = (rng.gen_range(0..40), rng.gen_range(0..40));
        let (mut img, face, mut pts) = placed_face(w, h, ox, oy);
        let noise = rng.gen_range(0..60u8);
        for y in 0..img.height() {
            for x in 0..img.width() {
                if rng.gen_bool(0.05) {
                    let v = img.get(x, y).saturating_sub(rng.gen_range(0..=noise));
                    img.set(x, y, v);
                }
            }
        }
        let jitter = rng.gen_range(0.0..12.0);
        for p in pts.iter_mut() {
            p.0 += rng.gen_range(-jitter..=jitter);
            p.1 += rng.gen_range(-jitter..=jitter);
        }
        write_sample(dir, &format!("face_{i:04}"), &img, face, &pts);
    }
}

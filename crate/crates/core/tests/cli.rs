mod common;

use std::fs;
use std::path::Path;
use std::process::Command;

use chfeatures::cli::run;
use chfeatures::synth::SyntheticFace;
use chfeatures::GrayImage;

fn cli(args: &[&str]) -> (u8, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("chfeatures").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write_face(dir: &Path) -> std::path::PathBuf {
    let p = dir.join("face.pgm");
    fs::write(&p, chfeatures::save_pgm(&SyntheticFace::new(200, 200).image)).unwrap();
    p
}

#[test]
fn detect_whole_image_reports_thirteen_points() {
    let dir = tempfile::tempdir().unwrap();
    let img = write_face(dir.path());
    let (code, out, _) = cli(&["detect", path(&img), "--whole-image"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["points"].as_object().unwrap().len(), 12);
    assert!(doc["nose_tip"].is_array());
    assert_eq!(doc["face_rect"], serde_json::json!([0, 0, 200, 200]));

    let want = common::expected_points(&SyntheticFace::new(200, 200));
    for (name, p) in &want.named {
        assert_eq!(doc["points"][name], serde_json::json!([p.x, p.y]), "{name}");
    }
    assert_eq!(doc["nose_tip"], serde_json::json!([want.nose_tip.x, want.nose_tip.y]));
}

#[test]
fn detect_uses_face_sidecar_and_writes_overlay() {
    let dir = tempfile::tempdir().unwrap();
    let (canvas, face, _) = common::placed_face(200, 200, 30, 20);
    let img = dir.path().join("pic.pgm");
    fs::write(&img, chfeatures::save_pgm(&canvas)).unwrap();
    fs::write(dir.path().join("pic.face"), format!("{} {} {} {}\n", face.x, face.y, face.w, face.h)).unwrap();
    let out = dir.path().join("pic.pts");
    let overlay = dir.path().join("marked.pgm");
    let (code, stdout, _) =
        cli(&["detect", path(&img), "--format", "pts", "-o", path(&out), "--overlay", path(&overlay)]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("version: 1\nn_points: 13\n{\n"));
    assert!(!text.contains("-1 -1"));
    let marked = chfeatures::load_pgm(&fs::read(&overlay).unwrap()).unwrap();
    assert_eq!((marked.width(), marked.height()), (canvas.width(), canvas.height()));
    assert_ne!(marked, canvas);
}

#[test]
fn detect_failure_codes() {
    let dir = tempfile::tempdir().unwrap();
    let blank = dir.path().join("blank.pgm");
    fs::write(&blank, chfeatures::save_pgm(&GrayImage::filled(120, 120, 90))).unwrap();
    let (code, out, _) = cli(&["detect", path(&blank), "--whole-image"]);
    assert_eq!(code, 2);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(doc["points"].as_object().unwrap().is_empty());

    let img = write_face(dir.path());
    let (code, _, err) = cli(&["detect", path(&img), "--face-rect", "10,10,200,200"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"), "{err}");
    // No sidecar and no rect.
    assert_eq!(cli(&["detect", path(&img)]).0, 1);
    // Faces below the minimum size.
    assert_eq!(cli(&["detect", path(&img), "--face-rect", "0,0,39,100"]).0, 1);
    assert_eq!(cli(&["detect", path(&dir.path().join("missing.pgm")), "--whole-image"]).0, 1);
    assert_eq!(cli(&["detect", path(&img), "--whole-image", "--th-nose", "1.5"]).0, 1);
    assert_eq!(cli(&["detect", path(&img), "--whole-image", "--face-rect", "0,0,50,50"]).0, 1);
    assert_eq!(cli(&["bogus"]).0, 1);
    assert_eq!(cli(&["--help"]).0, 0);
}

fn write_dataset(dir: &Path) {
    for (i, (w, h)) in [(200, 200), (180, 220), (240, 190)].into_iter().enumerate() {
        let (img, face, mut pts) = common::placed_face(w, h, 5 + i, 9);
        if i == 2 {
            // Move this image's mouth annotation well away from the mouth.
            pts[2].1 -= 60.0;
            pts[3].1 -= 60.0;
        }
        common::write_sample(dir, &format!("s{i}"), &img, face, &pts);
    }
}

#[test]
fn evaluate_writes_exact_csv() {
    let dir = tempfile::tempdir().unwrap();
    write_dataset(dir.path());
    let (code, out, err) = cli(&["evaluate", path(dir.path())]);
    assert_eq!(code, 0, "{err}");
    let want = "\
# images=3 criterion: hit if distance <= 0.15 x inter-ocular distance
feature,both,single,overall,threshold
Right Eyebrow,100.00,0.00,100.00,0.22
Left Eyebrow,100.00,0.00,100.00,0.24
Right Eye,100.00,0.00,100.00,0.07
Left Eye,100.00,0.00,100.00,0.06
Nostrils,100.00,0.00,100.00,0.004
Mouth Corners,66.67,0.00,66.67,0.06
Average,94.44,0.00,94.44,-
";
    assert_eq!(out, want);
    assert!(err.contains("evaluated 3 images, skipped 0"));
    assert!(err.contains("Mouth Corners"));

    let csv = dir.path().join("rates.csv");
    let (code, table, _) = cli(&["evaluate", path(dir.path()), "-o", path(&csv)]);
    assert_eq!(code, 0);
    assert_eq!(fs::read_to_string(&csv).unwrap(), want);
    assert!(table.starts_with("Detection rates over 3 images"));
}

#[test]
fn evaluate_skips_broken_samples() {
    let dir = tempfile::tempdir().unwrap();
    write_dataset(dir.path());
    fs::write(dir.path().join("s1.pgm"), b"P5\n10 10\n255\nshort").unwrap();
    fs::write(dir.path().join("lonely.pgm"), chfeatures::save_pgm(&GrayImage::filled(50, 50, 7))).unwrap();
    let (code, out, err) = cli(&["evaluate", path(dir.path())]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# images=2 "));
    assert!(err.contains("evaluated 2 images, skipped 2"), "{err}");

    let empty = tempfile::tempdir().unwrap();
    fs::write(empty.path().join("x.pgm"), chfeatures::save_pgm(&GrayImage::filled(50, 50, 7))).unwrap();
    let (code, _, err) = cli(&["evaluate", path(empty.path())]);
    assert_eq!(code, 1);
    assert!(err.contains("no usable"), "{err}");
}

#[test]
fn annotations_may_live_elsewhere() {
    let (imgs, anns) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    write_dataset(imgs.path());
    for i in 0..3 {
        let n = format!("s{i}.pts");
        fs::rename(imgs.path().join(&n), anns.path().join(n.to_uppercase())).unwrap();
    }
    let (code, out, _) = cli(&["evaluate", path(imgs.path()), "--annotations", path(anns.path())]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# images=3 "));
}

#[test]
fn sweep_grid_and_range_errors() {
    let dir = tempfile::tempdir().unwrap();
    write_dataset(dir.path());
    let (code, out, err) = cli(&["sweep", path(dir.path()), "--region", "nose"]);
    assert_eq!(code, 0, "{err}");
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "th,single,both,overall");
    assert_eq!(lines.len(), 11);
    assert!(lines[1].starts_with("0.001,"));
    assert!(lines[10].starts_with("0.01,"));
    assert!(err.contains("best nostrils threshold") || err.contains("best nose threshold"), "{err}");

    let (code, out, _) = cli(&["sweep", path(dir.path()), "--region", "mouth", "--th-min", "0.02", "--th-max", "0.05"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);

    let (code, _, err) = cli(&["sweep", path(dir.path()), "--region", "nose", "--th-min", "0.01", "--th-max", "0.001"]);
    assert_eq!(code, 1);
    assert!(!err.contains("evaluated"), "grid is checked before loading: {err}");
    assert_eq!(cli(&["sweep", path(dir.path()), "--region", "chin"]).0, 1);
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    write_dataset(dir.path());
    let cfg = dir.path().join("run.toml");
    fs::write(&cfg, "radius_frac = 0.3\n[thresholds]\nmouth = 0.002\n").unwrap();
    let (_, out, _) = cli(&["evaluate", path(dir.path()), "--config", path(&cfg)]);
    assert!(out.contains("criterion: hit if distance <= 0.3 x"));
    assert!(out.contains("Mouth Corners,0.00,0.00,0.00,0.002"), "{out}");

    let (_, out, _) = cli(&["evaluate", path(dir.path()), "--config", path(&cfg), "--th-mouth", "0.06", "--radius-frac", "0.15"]);
    assert!(out.contains("criterion: hit if distance <= 0.15 x"));
    assert!(out.contains("Mouth Corners,66.67,0.00,66.67,0.06"), "{out}");

    fs::write(&cfg, "unknown_key = 1\n").unwrap();
    assert_eq!(cli(&["evaluate", path(dir.path()), "--config", path(&cfg)]).0, 1);
}

#[test]
fn binary_runs_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let img = write_face(dir.path());
    let out = Command::new(env!("CARGO_BIN_EXE_chfeatures"))
        .args(["detect", path(&img), "--whole-image", "--format", "pts"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 17);

    let out = Command::new(env!("CARGO_BIN_EXE_chfeatures")).args(["detect", "/nonexistent.pgm", "--whole-image"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

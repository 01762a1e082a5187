use std::fs;

use slicescope::classifier::{classify_jordan, enumerate_and_classify, identity_line, scan_exceptional, Status};
use slicescope::datasets::{builtin_g2, load_table, DatasetError};
use slicescope::liealg::AlgebraFamily;
use slicescope::partitions::Partition;
use slicescope::realizations::{realize_case, RealizationError};
use slicescope::report::{to_json_lines, to_tsv, VerdictRecord, TSV_COLUMNS};
use slicescope::superdual::{s_dual, ExtendedCase};
use slicescope::verifier::coisotropy_check;

fn p(xs: &[usize]) -> Partition {
    Partition::new(xs.to_vec()).unwrap()
}

#[test]
fn gl4_table() {
    let verdicts = enumerate_and_classify(AlgebraFamily::Gl(4)).unwrap();
    let got: Vec<(String, &str)> = verdicts
        .iter()
        .map(|v| (v.orbit.jordan_type().unwrap().to_text(), v.status.name()))
        .collect();
    let names: Vec<(&str, &str)> = got.iter().map(|(a, b)| (a.as_str(), *b)).collect();
    assert_eq!(
        names,
        [
            ("4", "RegularOrbit"),
            ("3,1", "HypersphericalHook"),
            ("2,2", "HypersphericalViaIsomorphism"),
            ("2,1,1", "HypersphericalHook"),
            ("1,1,1,1", "ZeroOrbit"),
        ]
    );
}

#[test]
fn sp6_table_has_one_special_orbit() {
    let verdicts = enumerate_and_classify(AlgebraFamily::Sp(6)).unwrap();
    let special: Vec<_> = verdicts
        .iter()
        .filter(|v| matches!(v.status, Status::HypersphericalSpecial(_)))
        .map(|v| v.orbit.jordan_type().unwrap().to_text())
        .collect();
    assert_eq!(special, ["3,3"]);
    let v = classify_jordan(AlgebraFamily::Sp(6), &p(&[3, 3])).unwrap();
    assert_eq!(identity_line(&v), "28 − 24 = 4 = 3 + 1");
}

#[test]
fn report_formats_agree() {
    let verdicts = enumerate_and_classify(AlgebraFamily::So(8)).unwrap();
    let tsv = to_tsv(&verdicts);
    let lines: Vec<&str> = tsv.lines().collect();
    assert_eq!(lines.len(), verdicts.len() + 1);
    assert!(lines.iter().all(|l| l.split('\t').count() == TSV_COLUMNS.len()));
    let json = to_json_lines(&verdicts);
    let records: Vec<VerdictRecord> = json.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), verdicts.len());
    assert_eq!(records[0], VerdictRecord::new(&verdicts[0]));
    assert!(records.iter().any(|r| r.note.contains("very even")));
}

#[test]
fn dataset_round_trips_through_a_file() {
    let dir = std::env::temp_dir().join(format!("slicescope-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g2.tsv");
    fs::write(&path, include_str!("../data/g2.tsv")).unwrap();
    assert_eq!(load_table(&path).unwrap(), builtin_g2());

    let broken = dir.join("broken.tsv");
    fs::write(&broken, "label\tdim_orbit\tcentralizer\n0\t0\tG2\nA1\tseven\tA1\n").unwrap();
    assert!(matches!(
        load_table(&broken),
        Err(DatasetError::Malformed { line: 3, .. })
    ));
    assert!(matches!(
        load_table(dir.join("missing.tsv")),
        Err(DatasetError::Io { .. })
    ));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn g2_short_root_orbit_is_verified() {
    let verdicts = scan_exceptional(&builtin_g2()).unwrap();
    let short = verdicts.iter().find(|v| v.orbit.label.to_string() == "Ã1").unwrap();
    assert_eq!(s_dual(short).unwrap().to_string(), "g(3)");
    let r = realize_case("g2").unwrap();
    let report = coisotropy_check(&r, 0).unwrap();
    assert!(report.supports_hyperspherical(), "{report:?}");
    assert_eq!(report.dim_w_perp, 3);
}

#[test]
fn realization_json_reports_dimensions() {
    let r = realize_case("so:5,1,1").unwrap();
    let json = r.to_json();
    assert_eq!(json["family"], "SO(7)");
    assert_eq!(json["jordan_type"], "5,1,1");
    assert_eq!(json["dim_zf"], 5);
    assert_eq!(json["zf_basis"].as_array().unwrap().len(), 5);
    assert!(matches!(
        realize_case("so:3,2,2"),
        Err(RealizationError::Unsupported(_))
    ));
    assert!(realize_case("e8").is_err());
}

#[test]
fn extended_cases_have_matching_even_parts() {
    for n in 2..=6 {
        for name in ["mirabolic", "gelfand-tsetlin"] {
            let case = ExtendedCase::parse(name, n).unwrap();
            assert!(case.check_even_part().holds(), "{}", case.description());
        }
    }
    assert_eq!(
        ExtendedCase::parse("sp-extension", 2).unwrap().dual().to_string(),
        "osp(5|4)"
    );
}

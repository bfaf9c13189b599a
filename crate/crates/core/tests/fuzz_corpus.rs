//! Replays the fuzz corpus seeds through the same checks the fuzz targets
//! make, so they run on stable with `cargo test`.

use std::path::PathBuf;

use isodisc::{disc, isomorphic_discrepancy, parse_matrix, Format};

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .map(|p| (p.display().to_string(), std::fs::read(&p).unwrap()))
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn parser_seeds() {
    for (target, format) in [
        ("parse_dense", Format::Dense),
        ("parse_csv", Format::Csv),
        ("parse_edgelist", Format::Edgelist),
    ] {
        let mut parsed = 0;
        for (_, bytes) in seeds(target) {
            if let Ok(m) = parse_matrix(&bytes, format) {
                assert_eq!(m.row_sums().iter().sum::<usize>() as u64, m.ones());
                parsed += 1;
            }
        }
        assert!(parsed > 0, "{target}: every seed is rejected");
    }
}

#[test]
fn solve_seeds() {
    for (name, bytes) in seeds("parse_and_solve") {
        let (&selector, body) = bytes.split_first().unwrap();
        let format = [Format::Dense, Format::Csv, Format::Edgelist][selector as usize % 3];
        let m = parse_matrix(body, format).unwrap_or_else(|e| panic!("{name}: {e}"));
        let r = isomorphic_discrepancy(&m);
        assert!(r.lower_bound <= r.id && r.id <= r.disc);
        assert_eq!(disc(&r.witness()).unwrap(), r.id);
    }
}

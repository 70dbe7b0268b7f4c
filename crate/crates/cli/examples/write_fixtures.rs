//! Regenerates `fixtures/*.json` from the catalog:
//! `cargo run -p complex-moments-cli --example write_fixtures`.

use std::fs;
use std::path::Path;

use complex_moments::catalog;
use complex_moments_cli::spec_file::SpecFile;

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    fs::create_dir_all(&dir).expect("fixture directory");
    let fixtures = [
        ("cauchy01", catalog::cauchy_with_terms(0.0, 1.0, 2.0, 122).unwrap()),
        ("cauchy34", catalog::cauchy(3.0, 4.0, 10.0).unwrap()),
        ("example1", catalog::quartic()),
        ("example2", catalog::quartic_ratio()),
        ("example3_a1", catalog::shifted_quartic_ratio(1.0)),
    ];
    for (name, m) in fixtures {
        let path = dir.join(format!("{name}.json"));
        fs::write(&path, SpecFile::from_measure(&m).to_json() + "\n").expect("write fixture");
        println!("{}", path.display());
    }
}

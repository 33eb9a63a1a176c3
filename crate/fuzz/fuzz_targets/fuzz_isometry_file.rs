//! Fuzzes the isometry file parser.  Rejections must be clean errors, and
//! every accepted matrix must be square with the declared rank.

#![no_main]

use catalog_cli::formats::parse_isometry_file;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((name, matrix)) = parse_isometry_file(text) {
        assert!(!name.is_empty(), "accepted names are nonempty");
        assert_eq!(matrix.rows(), matrix.cols(), "isometry matrices are square");
        assert!(matrix.rows() >= 1, "rank zero is rejected at parse time");
    }
});

//! Fuzzes the constructor expression parser.  Accepted expressions must
//! produce well-formed lattices: symmetric nondegenerate Gram matrix,
//! rank within the cap, and the whitespace-stripped source as label.

#![no_main]

use catalog_cli::expr::{parse_expr, MAX_EXPR_RANK};
use libfuzzer_sys::fuzz_target;
use num_traits::Zero;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(lattice) = parse_expr(text) {
        let n = lattice.rank();
        assert!(n >= 1 && n <= MAX_EXPR_RANK, "rank cap holds");
        let g = lattice.gram();
        assert_eq!(g, &g.transpose(), "Gram matrices are symmetric");
        assert!(!lattice.determinant().is_zero(), "nondegenerate by construction");
        let stripped: String = text.split_whitespace().collect();
        assert_eq!(lattice.label(), Some(stripped.as_str()), "label is the stripped source");
    }
});

//! Fuzzes the lattice file parser.  Any input may be rejected, but never
//! with a panic, and every accepted file must survive a render/reparse
//! round trip bit for bit.

#![no_main]

use catalog_cli::formats::{parse_lattice_file, render_lattice_file};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((name, lattice)) = parse_lattice_file(text) {
        let canonical = render_lattice_file(&name, &lattice);
        let (name2, again) =
            parse_lattice_file(&canonical).expect("canonical rendering reparses");
        assert_eq!(name, name2, "name survives the round trip");
        assert_eq!(
            lattice.gram(),
            again.gram(),
            "Gram matrix survives the round trip"
        );
        assert_eq!(
            render_lattice_file(&name2, &again),
            canonical,
            "rendering is idempotent"
        );
    }
});

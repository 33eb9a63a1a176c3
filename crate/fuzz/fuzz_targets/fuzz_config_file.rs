//! Fuzzes the config file parser.  Accepted configurations must respect
//! every documented range so that downstream searches get sane knobs.

#![no_main]

use catalog_cli::config::parse_config;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(config) = parse_config(text) {
        assert!((1..=1000).contains(&config.search_box));
        assert!(config.equiv_bound >= 1);
        assert!((1..=26).contains(&config.definite_rank_cap));
        assert!(config.order_cutoff >= 2);
    }
});

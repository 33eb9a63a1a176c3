//! Runtime limits, with an optional config-file override.
//!
//! All limits ship compiled-in defaults.  Setting the environment
//! variable [`CONFIG_ENV`] to a file path replaces any subset of them:
//!
//! ```text
//! # widen the vector search
//! search_box = 8
//! equiv_bound = 20000
//! ```
//!
//! Each line is `key = integer`; `#` starts a comment.  Unknown keys,
//! duplicate keys, and out-of-range values are errors, so a typo cannot
//! silently run with defaults.  A set-but-unreadable path is an error
//! for the same reason.

use std::path::Path;

use enumeration_embedding::DEFAULT_DEFINITE_RANK_CAP;
use isometry_actions::DEFAULT_ORDER_CUTOFF;
use normal_forms::DEFAULT_EQUIV_BOUND;

use crate::{Error, LineError};

/// Environment variable naming the config file.
pub const CONFIG_ENV: &str = "LATTICE_CATALOG_CONFIG";

/// Default sup-norm bound of the degree-search box, matching
/// `SearchBox::default()`.
pub const DEFAULT_SEARCH_BOX: u32 = 6;

/// Tunable limits for the searches behind the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Sup-norm bound for degree searches (`dvalue`, realized degrees).
    pub search_box: u32,
    /// Largest discriminant-group order the form-equivalence search
    /// will enumerate before giving up with an explicit error.
    pub equiv_bound: u64,
    /// Rank cap for definite isometry searches.
    pub definite_rank_cap: usize,
    /// Cutoff for isometry order computation.
    pub order_cutoff: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            search_box: DEFAULT_SEARCH_BOX,
            equiv_bound: DEFAULT_EQUIV_BOUND,
            definite_rank_cap: DEFAULT_DEFINITE_RANK_CAP,
            order_cutoff: DEFAULT_ORDER_CUTOFF,
        }
    }
}

/// Parse config text over the compiled-in defaults.
pub fn parse_config(text: &str) -> Result<Config, LineError> {
    let mut cfg = Config::default();
    let mut seen: Vec<&str> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (key, value) = body
            .split_once('=')
            .ok_or_else(|| LineError::new(line, "expected `key = integer`"))?;
        let key = key.trim();
        let value = value.trim();
        if seen.contains(&key) {
            return Err(LineError::new(line, format!("duplicate key `{key}`")));
        }
        let parsed: u64 = value
            .parse()
            .map_err(|_| LineError::new(line, format!("invalid integer `{value}`")))?;
        match key {
            "search_box" => {
                if parsed == 0 || parsed > 1_000 {
                    return Err(LineError::new(line, "search_box must be in 1..=1000"));
                }
                cfg.search_box = parsed as u32;
            }
            "equiv_bound" => {
                if parsed == 0 {
                    return Err(LineError::new(line, "equiv_bound must be positive"));
                }
                cfg.equiv_bound = parsed;
            }
            "definite_rank_cap" => {
                if parsed == 0 || parsed > 26 {
                    return Err(LineError::new(line, "definite_rank_cap must be in 1..=26"));
                }
                cfg.definite_rank_cap = parsed as usize;
            }
            "order_cutoff" => {
                if parsed < 2 {
                    return Err(LineError::new(line, "order_cutoff must be at least 2"));
                }
                cfg.order_cutoff = parsed;
            }
            other => {
                return Err(LineError::new(
                    line,
                    format!(
                        "unknown key `{other}`; valid keys: search_box, equiv_bound, \
                         definite_rank_cap, order_cutoff"
                    ),
                ));
            }
        }
        seen.push(key);
    }
    Ok(cfg)
}

/// Load a config file from disk.
pub fn load_config_file(path: &Path) -> Result<Config, Error> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: shown.clone(),
        source,
    })?;
    parse_config(&text).map_err(|e| e.in_file(&shown))
}

/// Resolve the active config: the file named by [`CONFIG_ENV`] if the
/// variable is set, compiled-in defaults otherwise.
pub fn load_config() -> Result<Config, Error> {
    match std::env::var_os(CONFIG_ENV) {
        Some(path) => load_config_file(Path::new(&path)),
        None => Ok(Config::default()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_text_gives_defaults() {
        assert_eq!(parse_config("").unwrap(), Config::default());
        assert_eq!(
            parse_config("# only comments\n\n").unwrap(),
            Config::default()
        );
    }

    #[test]
    fn overrides_apply_and_defaults_survive() {
        let cfg = parse_config("search_box = 9\nequiv_bound=123\n").unwrap();
        assert_eq!(cfg.search_box, 9);
        assert_eq!(cfg.equiv_bound, 123);
        assert_eq!(cfg.definite_rank_cap, Config::default().definite_rank_cap);
        assert_eq!(cfg.order_cutoff, Config::default().order_cutoff);
    }

    #[test]
    fn bad_lines_are_rejected_with_positions() {
        for (text, line, needle) in [
            ("search_box 9\n", 1, "key = integer"),
            ("search_box = x\n", 1, "invalid integer"),
            ("search_box = 0\n", 1, "1..=1000"),
            ("# ok\nboxsize = 3\n", 2, "unknown key"),
            ("search_box = 2\nsearch_box = 3\n", 2, "duplicate"),
            ("order_cutoff = 1\n", 1, "at least 2"),
        ] {
            let err = parse_config(text).unwrap_err();
            assert_eq!(err.line, line, "{text:?}");
            assert!(err.msg.contains(needle), "{text:?}: {}", err.msg);
        }
    }
}

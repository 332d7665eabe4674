//! Parsing of value lists such as `2..4,8`.

use std::fmt::Display;
use std::str::FromStr;

use crate::{CliError, CliResult};

/// Largest number of values one list may expand to.
pub const MAX_VALUES: usize = 1 << 16;

/// Parses comma-separated items, each a single value or an inclusive range
/// `lo..hi`. Values come back sorted and deduplicated. An empty string or a
/// range with `lo > hi` contributes nothing.
pub fn parse_values<T>(text: &str) -> CliResult<Vec<T>>
where
    T: FromStr + Ord + Copy + Display + TryFrom<u64> + Into<u64>,
    <T as FromStr>::Err: Display,
{
    let mut out: Vec<T> = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item.split_once("..") {
            Some((lo, hi)) => {
                let lo: T = parse_one(lo.trim(), item)?;
                let hi: T = parse_one(hi.trim().trim_start_matches('='), item)?;
                let (lo, hi): (u64, u64) = (lo.into(), hi.into());
                if hi >= lo && (hi - lo) as usize >= MAX_VALUES {
                    return Err(CliError::Usage(format!("range {item} is too long")));
                }
                for v in lo..=hi {
                    let v = T::try_from(v)
                        .map_err(|_| CliError::Usage(format!("{v} is out of range")))?;
                    out.push(v);
                }
            }
            None => out.push(parse_one(item, item)?),
        }
        if out.len() > MAX_VALUES {
            return Err(CliError::Usage(format!(
                "{text} expands to too many values"
            )));
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn parse_one<T>(text: &str, item: &str) -> CliResult<T>
where
    T: FromStr,
    <T as FromStr>::Err: Display,
{
    text.parse()
        .map_err(|e| CliError::Usage(format!("cannot parse {item:?}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_and_ranges() {
        assert_eq!(parse_values::<u32>("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_values::<u64>("8, 2,4,2").unwrap(), vec![2, 4, 8]);
        assert_eq!(parse_values::<u32>("1..=3,7").unwrap(), vec![1, 2, 3, 7]);
        assert!(parse_values::<u32>("4..2").unwrap().is_empty());
        assert!(parse_values::<u32>("").unwrap().is_empty());
    }

    #[test]
    fn bad_input() {
        assert!(parse_values::<u32>("x").is_err());
        assert!(parse_values::<u32>("1..y").is_err());
        assert!(parse_values::<u32>("-1").is_err());
        assert!(parse_values::<u64>("0..999999999").is_err());
    }
}

//! Built-in example arrangements, addressable by name from the command line.

use crate::arrangement::{AffineForm, Arrangement};
use crate::error::{Error, Result};
use crate::exactla::rat;

/// One point in the line: `ω = t`.
pub fn point() -> Arrangement {
    Arrangement::from_integer_rows(1, &[&[1, 0]]).expect("valid")
}

/// Two points on a line: `ω_1 = t`, `ω_2 = t - 1`.
pub fn two_points() -> Arrangement {
    Arrangement::from_integer_rows(1, &[&[1, 0], &[1, -1]]).expect("valid")
}

/// `y = 0`, `x = 0`, `x + y = 1`: a generic arrangement with a bounded
/// triangle `(+,+,-)`.
pub fn generic_three_lines() -> Arrangement {
    Arrangement::from_integer_rows(2, &[&[0, 1, 0], &[1, 0, 0], &[1, 1, -1]]).expect("valid")
}

/// `ω = y, x, x + y`: three lines through the origin.
pub fn concurrent_three_lines() -> Arrangement {
    Arrangement::from_integer_rows(2, &[&[0, 1, 0], &[1, 0, 0], &[1, 1, 0]]).expect("valid")
}

/// `ω = y, x`: two lines through the origin.
pub fn two_central_lines() -> Arrangement {
    Arrangement::from_integer_rows(2, &[&[0, 1, 0], &[1, 0, 0]]).expect("valid")
}

/// The coordinate hyperplanes of `R^k`.
pub fn boolean(k: usize) -> Arrangement {
    let forms = (0..k)
        .map(|i| {
            let normal = (0..k).map(|j| rat(i64::from(i == j))).collect();
            AffineForm::new(normal, rat(0))
        })
        .collect();
    Arrangement::new(k, forms).expect("valid")
}

/// `d + 1` generic central hyperplanes in `R^d`: the coordinate hyperplanes
/// and `x_1 + … + x_d = 0`.
pub fn generic_central(d: usize) -> Arrangement {
    let mut forms: Vec<AffineForm> = boolean(d).forms().to_vec();
    forms.push(AffineForm::new(vec![rat(1); d], rat(0)));
    Arrangement::new(d, forms).expect("valid")
}

/// Looks up a built-in example. Accepted names are `point`, `two-points`,
/// `generic-3-lines`, `concurrent-3-lines`, `two-central-lines`, `empty-<d>`,
/// `boolean-<k>` and `generic-<d>-plus-1-central`.
pub fn by_name(name: &str) -> Result<Arrangement> {
    let unknown = || Error::Unknown {
        kind: "example",
        name: name.to_string(),
    };
    let parse = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    match name {
        "point" => Ok(point()),
        "two-points" => Ok(two_points()),
        "generic-3-lines" => Ok(generic_three_lines()),
        "concurrent-3-lines" => Ok(concurrent_three_lines()),
        "two-central-lines" => Ok(two_central_lines()),
        _ => {
            if let Some(k) = name.strip_prefix("boolean-") {
                Ok(boolean(parse(k)?))
            } else if let Some(d) = name.strip_prefix("empty-") {
                Ok(Arrangement::empty(parse(d)?))
            } else if let Some(d) = name
                .strip_prefix("generic-")
                .and_then(|rest| rest.strip_suffix("-plus-1-central"))
            {
                let d = parse(d)?;
                if d == 0 {
                    return Err(unknown());
                }
                Ok(generic_central(d))
            } else {
                Err(unknown())
            }
        }
    }
}

pub const EXAMPLE_NAMES: &[&str] = &[
    "point",
    "two-points",
    "generic-3-lines",
    "concurrent-3-lines",
    "two-central-lines",
    "empty-2",
    "boolean-2",
    "boolean-3",
    "generic-2-plus-1-central",
    "generic-3-plus-1-central",
];

/// Every named example in [`EXAMPLE_NAMES`].
pub fn builtin_corpus() -> Vec<(String, Arrangement)> {
    EXAMPLE_NAMES
        .iter()
        .map(|name| (name.to_string(), by_name(name).expect("listed example")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(by_name("boolean-4").unwrap().len(), 4);
        assert_eq!(by_name("generic-3-plus-1-central").unwrap().len(), 4);
        assert!(by_name("generic-0-plus-1-central").is_err());
        assert!(by_name("nope").is_err());
        assert_eq!(builtin_corpus().len(), EXAMPLE_NAMES.len());
    }
}

//! Angle literals: decimals or `pi`-expressions such as `pi`, `-pi/4`,
//! `2pi/3`, `2*pi/3` and `0.5pi`.

use std::f64::consts::PI;

use crate::error::CliError;

fn number(s: &str, whole: &str) -> Result<f64, CliError> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| CliError::Parse(format!("invalid angle `{whole}`")))
}

pub fn parse_angle(text: &str) -> Result<f64, CliError> {
    let s = text.trim().to_ascii_lowercase();
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, s.strip_prefix('+').unwrap_or(&s)),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), Some(number(d, text)?)),
        None => (body.trim(), None),
    };
    let value = match num.strip_suffix("pi").or_else(|| num.strip_suffix('π')) {
        Some(coef) => {
            let coef = coef.trim().trim_end_matches('*').trim();
            let k = if coef.is_empty() { 1.0 } else { number(coef, text)? };
            k * PI
        }
        None => number(num, text)?,
    };
    let value = match den {
        Some(0.0) => return Err(CliError::Parse(format!("division by zero in `{text}`"))),
        Some(d) => value / d,
        None => value,
    };
    Ok(sign * value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_expressions_match_closed_forms() {
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("2pi/3").unwrap(), 2.0 * PI / 3.0);
        assert_eq!(parse_angle("2*pi/3").unwrap(), 2.0 * PI / 3.0);
        assert_eq!(parse_angle("pi/5").unwrap(), PI / 5.0);
        assert_eq!(parse_angle("-pi/4").unwrap(), -PI / 4.0);
        assert_eq!(parse_angle("0.5pi").unwrap(), 0.5 * PI);
        assert_eq!(parse_angle("PI/2").unwrap(), PI / 2.0);
        assert_eq!(parse_angle("0.25").unwrap(), 0.25);
        assert_eq!(parse_angle("1e-3").unwrap(), 1e-3);
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "pie", "pi/0", "2pi/x", "nan", "1/2/3", "inf"] {
            assert!(parse_angle(bad).is_err(), "{bad}");
        }
    }
}

//! Exact rational numbers.
//!
//! Every quantity that takes part in a comparison (distances, thresholds,
//! ledger rows) is a [`Rational`]. `BigRational` already keeps values in
//! lowest terms with a positive denominator, so the alias is all we need;
//! this module adds the text form used by the instance files and a decimal
//! rendering for human-facing output.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Builds `num/den` from machine integers. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `p` or `p/q` where `p` is an integer and `q` a positive integer.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num: BigInt = parse_int(num).ok_or_else(|| format!("invalid rational `{text}`"))?;
    let den = match den {
        None => BigInt::one(),
        Some(d) => {
            let d = parse_int(d).ok_or_else(|| format!("invalid rational `{text}`"))?;
            if !d.is_positive() {
                return Err(format!("denominator must be a positive integer in `{text}`"));
            }
            d
        }
    };
    Ok(Rational::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Nearest `f64`, or `None` when the value is outside the normal range.
pub fn to_f64(value: &Rational) -> Option<f64> {
    let f = value.to_f64()?;
    (f.is_finite() && (f == 0.0 || f.is_normal())).then_some(f)
}

/// Renders `value` rounded (half away from zero) to `digits` significant
/// digits. Plain notation for moderate magnitudes, `d.ddde±x` otherwise.
pub fn to_decimal(value: &Rational, digits: usize) -> String {
    assert!(digits > 0);
    if value.is_zero() {
        return "0".to_string();
    }
    let negative = value.is_negative();
    let abs = value.abs();

    // Estimate floor(log10(abs)) from digit counts, then correct.
    let num_len = abs.numer().to_str_radix(10).len() as i64;
    let den_len = abs.denom().to_str_radix(10).len() as i64;
    let mut exp = num_len - den_len;
    while pow10(exp) > abs {
        exp -= 1;
    }
    while pow10(exp + 1) <= abs {
        exp += 1;
    }

    let shift = digits as i64 - 1 - exp;
    let scaled = &abs * pow10(shift);
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let mut mantissa = if r * 2u32 >= *scaled.denom() { q + 1u32 } else { q };
    if mantissa.to_str_radix(10).len() > digits {
        mantissa /= 10u32;
        exp += 1;
    }
    let raw = mantissa.to_str_radix(10);

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if (-5..digits as i64).contains(&exp) {
        if exp >= 0 {
            let int_len = exp as usize + 1;
            out.push_str(&raw[..int_len]);
            let frac = raw[int_len..].trim_end_matches('0');
            if !frac.is_empty() {
                out.push('.');
                out.push_str(frac);
            }
        } else {
            out.push_str("0.");
            out.push_str(&"0".repeat((-exp - 1) as usize));
            out.push_str(raw.trim_end_matches('0'));
        }
    } else {
        out.push_str(&raw[..1]);
        let frac = raw[1..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
        out.push_str(&format!("e{exp}"));
    }
    out
}

fn pow10(exp: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10), exp.unsigned_abs() as usize);
    if exp >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

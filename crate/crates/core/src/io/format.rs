/// `%.6g`-style formatting: 6 significant digits, trailing zeros stripped,
/// scientific notation outside `1e-4 <= |v| < 1e6`. Never locale dependent.
pub fn fmt_g6(v: f64) -> String {
    fmt_g(v, 6)
}

pub fn fmt_g(v: f64, sig: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sig = sig.max(1);
    // Round to `sig` digits first so the exponent reflects carries (9.999995 -> 10).
    let sci = format!("{:.*e}", sig - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= sig as i32 {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{m}e{sign}{:02}", exp.abs());
    }
    let decimals = (sig as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, v)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        let cases = [
            (0.0, "0"),
            (-0.0, "0"),
            (1.0, "1"),
            (314.16, "314.16"),
            (314.32725, "314.327"),
            (0.16725, "0.16725"),
            (-0.075, "-0.075"),
            (1730.0000000003, "1730"),
            (43200.0, "43200"),
            (123456.7, "123457"),
            (1234567.0, "1.23457e+06"),
            (0.0001, "0.0001"),
            (0.00001234, "1.234e-05"),
            (9.9999996, "10"),
            (-200.0, "-200"),
            (58.333333333, "58.3333"),
        ];
        for (v, want) in cases {
            assert_eq!(fmt_g6(v), want, "{v}");
        }
    }
}

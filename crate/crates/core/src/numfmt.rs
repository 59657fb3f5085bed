/// `%.17g`: 17 significant digits, shortest of fixed and scientific notation as C does.
pub fn sig17(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.16e}", v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("exponent");
    if !(-5..17).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{m}e{sign}{:02}", exp.abs());
    }
    let fixed = format!("{:.*}", (16 - exp) as usize, v);
    trim_zeros(&fixed).to_string()
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
    use super::sig17;

    #[test]
    fn matches_printf() {
        assert_eq!(sig17(1.0), "1");
        assert_eq!(sig17(0.5), "0.5");
        assert_eq!(sig17(1.0 / 3.0), "0.33333333333333331");
        assert_eq!(sig17(2.0 / std::f64::consts::PI), "0.63661977236758138");
        assert_eq!(sig17(1e-7), "9.9999999999999995e-08");
        assert_eq!(sig17(1.5e20), "1.5e+20");
        assert_eq!(sig17(-0.25), "-0.25");
        assert_eq!(sig17(123456.0), "123456");
    }

    #[test]
    fn round_trips() {
        for v in [0.1, 1.0 / 7.0, 5.0 / 16.0, 3.0e-300, 6.02e23] {
            assert_eq!(sig17(v).parse::<f64>().unwrap(), v);
        }
    }
}

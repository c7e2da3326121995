//! Unit conversions at the I/O boundary.
//!
//! Everything inside the library is SI (meters, Newtons, radians, seconds).
//! Gram-force and millimeters appear only when reading configs and writing
//! reports, converted with the fixed standard gravity below.

/// Standard gravity, m/s^2. Fixed so gram-force conversions are reproducible.
pub const STANDARD_GRAVITY: f64 = 9.80665;

/// Convert Newtons to gram-force.
pub fn newtons_to_gram_force(newtons: f64) -> f64 {
    newtons / STANDARD_GRAVITY * 1000.0
}

/// Convert gram-force to Newtons.
pub fn gram_force_to_newtons(gram_force: f64) -> f64 {
    gram_force * STANDARD_GRAVITY / 1000.0
}

/// Format a value with the given number of significant digits.
///
/// Used for the gram-force column of sweep CSVs, where the schema pins six
/// significant digits.
pub fn format_significant(value: f64, digits: u32) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{:.*}", digits.saturating_sub(1) as usize, value);
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).clamp(0, 17) as usize;
    format!("{value:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gram_force_round_trip() {
        let f = 1.86325;
        assert_relative_eq!(
            gram_force_to_newtons(newtons_to_gram_force(f)),
            f,
            max_relative = 1e-12
        );
    }

    #[test]
    fn nominal_force_is_about_190_gram_force() {
        // 14.906 N through the 1:8 transmission of the reference mechanism.
        let gf = newtons_to_gram_force(1.86325);
        assert!((gf - 190.0).abs() < 0.01, "got {gf} gf");
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_significant(189.99935, 6), "189.999");
        assert_eq!(format_significant(1.86325, 6), "1.86325");
        assert_eq!(format_significant(0.0123456789, 6), "0.0123457");
        assert_eq!(format_significant(1234567.0, 6), "1234567");
        assert_eq!(format_significant(0.0, 6), "0.00000");
    }
}

//! Reduced primitive binary quadratic forms, an independent class-number count.

use alloc::vec::Vec;

use num_integer::Integer;

use super::QuadError;

/// Primitive reduced forms `(a, b, c)` with `b² − 4ac = disc`:
/// `|b| ≤ a ≤ c`, and `b ≥ 0` whenever `|b| = a` or `a = c`.
pub fn reduced_forms(disc: i64) -> Result<Vec<(i64, i64, i64)>, QuadError> {
    if disc >= 0 || !matches!(disc.rem_euclid(4), 0 | 1) {
        return Err(QuadError::BadDiscriminant(disc));
    }
    let mut out = Vec::new();
    let mut a = 1i64;
    // a ≤ c and |b| ≤ a give 3a² ≤ |disc|
    while 3 * a * a <= -disc {
        for b in -a + 1..=a {
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (b < 0 && a == c) {
                continue;
            }
            if a.gcd(&b).gcd(&c) == 1 {
                out.push((a, b, c));
            }
        }
        a += 1;
    }
    Ok(out)
}

pub fn reduced_form_count(disc: i64) -> Result<usize, QuadError> {
    reduced_forms(disc).map(|f| f.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn small_class_numbers() {
        assert_eq!(reduced_forms(-3).unwrap(), vec![(1, 1, 1)]);
        assert_eq!(reduced_forms(-4).unwrap(), vec![(1, 0, 1)]);
        assert_eq!(reduced_forms(-15).unwrap(), vec![(1, 1, 4), (2, 1, 2)]);
        // classical values
        assert_eq!(reduced_form_count(-23), Ok(3));
        assert_eq!(reduced_form_count(-12), Ok(1));
        assert_eq!(reduced_form_count(-75), Ok(2));
        assert_eq!(reduced_form_count(-56), Ok(4));
    }

    #[test]
    fn bad_discriminants() {
        assert_eq!(reduced_form_count(-5), Err(QuadError::BadDiscriminant(-5)));
        assert_eq!(reduced_form_count(8), Err(QuadError::BadDiscriminant(8)));
    }
}

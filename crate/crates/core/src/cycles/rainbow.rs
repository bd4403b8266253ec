use num_integer::Integer;

use crate::error::{Error, Result};
use crate::model::RainbowSpec;

/// Closed-form cycle count of a rainbow system of type `(2, 1)` or `(3, 1)`
/// (or the mirrored `(1, 2)`, `(1, 3)`).
pub fn rainbow_cycle_count(spec: &RainbowSpec) -> Result<u64> {
    let blocks = match spec.kind() {
        (2 | 3, 1) => spec.alpha(),
        (1, 2 | 3) => spec.beta(),
        (s, t) => return Err(Error::UnsupportedType { s, t }),
    };
    Ok(match *blocks {
        [a, b] => a.gcd(&b),
        [a, b, c] => (a + b).gcd(&(b + c)),
        _ => unreachable!("matched block counts above"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn over(alpha: &[u64]) -> RainbowSpec {
        RainbowSpec::over_single_rainbow(alpha.to_vec()).unwrap()
    }

    #[test]
    fn gcd_formulas() {
        assert_eq!(rainbow_cycle_count(&over(&[4, 6])).unwrap(), 2);
        assert_eq!(rainbow_cycle_count(&over(&[15, 5, 11])).unwrap(), 4);
        assert_eq!(rainbow_cycle_count(&over(&[1, 1])).unwrap(), 1);
        let mirrored = RainbowSpec::new(vec![10], vec![4, 6]).unwrap();
        assert_eq!(rainbow_cycle_count(&mirrored).unwrap(), 2);
    }

    #[test]
    fn other_types_are_unsupported() {
        let spec = RainbowSpec::new(vec![2, 2], vec![1, 3]).unwrap();
        assert!(matches!(
            rainbow_cycle_count(&spec),
            Err(Error::UnsupportedType { s: 2, t: 2 })
        ));
    }
}

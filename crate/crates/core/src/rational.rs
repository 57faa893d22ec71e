//! Exact rationals. `BigRational` keeps itself in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `a/b` or `a` in lowest terms.
pub fn to_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (d != BigInt::from(0)).then(|| Rational::new(n, d))
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let r = frac(6, -4);
        assert_eq!(to_text(&r), "-3/2");
        assert_eq!(parse("-3/2"), Some(r));
        assert_eq!(parse("1/0"), None);
    }
}

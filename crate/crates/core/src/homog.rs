//! Homogenization with respect to a third variable `z`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::PolyError;
use crate::poly::BivariatePoly;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    X,
    Y,
    Z,
}

/// Homogeneous polynomial in `x, y, z`; every exponent triple sums to `degree`.
#[derive(Clone, PartialEq, Eq)]
pub struct HomogeneousPoly {
    terms: BTreeMap<(u32, u32, u32), Rational>,
    degree: u32,
}

impl HomogeneousPoly {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32, u32), Rational> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32, k: u32) -> Rational {
        self.terms.get(&(i, j, k)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Sets the chosen variable to 1. The chart `Y` yields a polynomial in `(x, z)`, the chart `X`
    /// one in `(y, z)`, the chart `Z` one in `(x, y)`.
    pub fn dehomogenize_at(&self, chart: Chart) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(i, j, k), c) in &self.terms {
            let (a, b) = match chart {
                Chart::X => (j, k),
                Chart::Y => (i, k),
                Chart::Z => (i, j),
            };
            out.add_term((a, b), c.clone());
        }
        out
    }

    /// Restriction to the line `z = 0`, as a binary form in `(x, y)`.
    pub fn at_infinity(&self) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(i, j, k), c) in &self.terms {
            if k == 0 {
                out.add_term((i, j), c.clone());
            }
        }
        out
    }
}

pub fn homogenize(f: &BivariatePoly, d: u32) -> Result<HomogeneousPoly, PolyError> {
    let deg = f.degree().unwrap_or(0);
    if d < deg {
        return Err(PolyError::DegreeTooSmall { degree: deg, requested: d });
    }
    let terms = f.terms().map(|(&(i, j), c)| ((i, j, d - i - j), c.clone())).collect();
    Ok(HomogeneousPoly { terms, degree: d })
}

impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // graded order on (x, y) with z last
        let mut entries: Vec<_> = self.terms.iter().collect();
        entries.sort_by(|a, b| b.0.cmp(a.0));
        let mut out = String::new();
        for (&(i, j, k), c) in entries {
            let mut mono = Vec::new();
            for (name, e) in [("x", i), ("y", j), ("z", k)] {
                match e {
                    0 => {}
                    1 => mono.push(name.to_string()),
                    _ => mono.push(format!("{name}^{e}")),
                }
            }
            crate::poly::push_term(&mut out, c, &mono.join("*"));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomogeneousPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(s: &str) -> BivariatePoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn charts_of_degree_four_example() {
        let h = homogenize(&p("x*(x^2*y+1)"), 4).unwrap();
        assert_eq!(h.to_string(), "x^3*y + x*z^3");
        // (y, z) and (x, z) slots
        assert_eq!(h.dehomogenize_at(Chart::X), p("x + y^3"));
        assert_eq!(h.dehomogenize_at(Chart::Y), p("x^3 + x*y^3"));
        assert_eq!(h.at_infinity(), p("x^3*y"));
    }

    #[test]
    fn degree_too_small() {
        assert_eq!(
            homogenize(&p("x^3"), 2),
            Err(PolyError::DegreeTooSmall { degree: 3, requested: 2 })
        );
    }

    #[test]
    fn round_trip_and_padding() {
        for s in ["x^2 - y^3 + 1", "x*y*(x*y+1)", "3/2*y + x"] {
            let f = p(s);
            let d = f.degree().unwrap();
            assert_eq!(homogenize(&f, d).unwrap().dehomogenize_at(Chart::Z), f);
            assert_eq!(homogenize(&f, d + 2).unwrap().dehomogenize_at(Chart::Z), f);
        }
    }
}

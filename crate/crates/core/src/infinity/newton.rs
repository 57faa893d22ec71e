use std::collections::BTreeMap;

use num_traits::Zero;

use super::CurveGerm;
use crate::error::LocalError;
use crate::rational::Rational;
use crate::upoly::UnivariatePoly;

/// An edge of the lower-left Newton boundary in exponent coordinates `(i, j)` of `u^i v^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonEdge {
    /// `v ~ c·u^slope` along the edge.
    pub slope: Rational,
    pub start: (u32, u32),
    pub end: (u32, u32),
    /// `Σ h_ij c^(j - end.1)` over the support points on the edge.
    pub edge_poly: UnivariatePoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub edges: Vec<NewtonEdge>,
}

/// Lower-left hull from `start` down to the lowest row: `(start, end, a, b)` with slope `a/b`
/// in lowest terms. Slopes strictly increase.
pub(crate) fn hull_edges(points: &[(u32, u32)], start: (u32, u32)) -> Vec<((u32, u32), (u32, u32), u32, u32)> {
    let jmin = points.iter().map(|p| p.1).min().unwrap();
    let mut cur = start;
    let mut out = Vec::new();
    while cur.1 > jmin {
        let mut best: Option<((u32, u32), u64, u64)> = None;
        for &pt in points.iter().filter(|pt| pt.1 < cur.1 && pt.0 >= cur.0) {
            let (num, den) = ((pt.0 - cur.0) as u64, (cur.1 - pt.1) as u64);
            best = match best {
                None => Some((pt, num, den)),
                Some((bp, bn, bd)) => {
                    // compare num/den with bn/bd; on ties keep the farther point
                    let lhs = num * bd;
                    let rhs = bn * den;
                    if lhs < rhs || (lhs == rhs && pt.1 < bp.1) {
                        Some((pt, num, den))
                    } else {
                        Some((bp, bn, bd))
                    }
                }
            };
        }
        let (next, num, den) = best.expect("a lower point exists");
        let g = num_integer::gcd(num, den).max(1);
        out.push((cur, next, (num / g) as u32, (den / g) as u32));
        cur = next;
    }
    out
}

pub fn newton_polygon(g: &CurveGerm) -> Result<NewtonPolygon, LocalError> {
    let f = g.poly();
    if !f.constant_term().is_zero() {
        return Err(LocalError::UnitGerm);
    }
    let terms: BTreeMap<(u32, u32), Rational> = f.terms().map(|(e, c)| (*e, c.clone())).collect();
    let points: Vec<(u32, u32)> = terms.keys().copied().collect();
    let imin = points.iter().map(|p| p.0).min().unwrap();
    let start = points.iter().filter(|p| p.0 == imin).min_by_key(|p| p.1).copied().unwrap();
    let mut edges = Vec::new();
    for (s, e, a, b) in hull_edges(&points, start) {
        let level = s.0 * b + s.1 * a;
        let mut coeffs = vec![Rational::zero(); (s.1 - e.1 + 1) as usize];
        for (&(i, j), c) in &terms {
            if i * b + j * a == level && j >= e.1 && j <= s.1 {
                coeffs[(j - e.1) as usize] = c.clone();
            }
        }
        edges.push(NewtonEdge {
            slope: Rational::new((a as i64).into(), (b as i64).into()),
            start: s,
            end: e,
            edge_poly: UnivariatePoly::from_coeffs(coeffs),
        });
    }
    Ok(NewtonPolygon { edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::{frac, int};

    fn germ(s: &str) -> CurveGerm {
        CurveGerm::new(parse_poly(s).unwrap()).unwrap()
    }

    #[test]
    fn single_edges() {
        // x slot is u, y slot is v
        let cusp = newton_polygon(&germ("y^2 - x^3")).unwrap();
        assert_eq!(cusp.edges.len(), 1);
        assert_eq!(cusp.edges[0].slope, frac(3, 2));
        assert_eq!(newton_polygon(&germ("y + x^3")).unwrap().edges[0].slope, int(3));
    }

    #[test]
    fn edge_roots() {
        let np = newton_polygon(&germ("(y - x^2)*(y - 2*x^2)")).unwrap();
        assert_eq!(np.edges.len(), 1);
        assert_eq!(np.edges[0].slope, int(2));
        assert_eq!(np.edges[0].edge_poly.rational_roots(), vec![int(1), int(2)]);
    }

    #[test]
    fn slopes_increase() {
        let np = newton_polygon(&germ("y^3 + x*y + x^4")).unwrap();
        let slopes: Vec<_> = np.edges.iter().map(|e| e.slope.clone()).collect();
        assert_eq!(slopes, vec![frac(1, 2), int(3)]);
    }

    #[test]
    fn unit_rejected() {
        assert_eq!(CurveGerm::new(parse_poly("1 + x").unwrap()), Err(LocalError::UnitGerm));
    }
}

//! Resolution of the pencil `F − t·z^d` at its base points on the line at infinity.
//!
//! At each (infinitely near) point the chart has coordinates `(u, v)` centred there. Divisor
//! curves through the point are coordinate axes; the map is
//! `φ = u^{n_U} v^{n_V} · Π c_i · unit`, where `n_D = ord_D F − ord_D z^d` and `c_i` are the
//! strict transforms of the zero curves through the point. The point is a base point exactly
//! when both a positive and a negative factor vanish there. Points that are not base points are
//! still blown up until the divisor has normal crossings there; at finite distance this is done
//! only at rational points where zero curves meet or are singular.

use num_traits::{One, Zero};

use super::{Color, ColoredGraph};
use crate::bifurcation::{common_point_count, rational_common_points};
use crate::error::ResolveError;
use crate::homog::{homogenize, Chart};
use crate::infinity::{points_at_infinity, InfinityPoint};
use crate::poly::BivariatePoly;
use crate::rational::{to_text, Rational};
use crate::upoly::UnivariatePoly;

/// A resolved pencil: vertex `0` is the line at infinity, then the zero curves in input order,
/// then exceptional curves in creation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    pub graph: ColoredGraph,
    /// One description per vertex id.
    pub labels: Vec<String>,
    pub components: Vec<BivariatePoly>,
    pub blowups: usize,
}

struct Curve {
    label: String,
    /// Orders of `F` and of `z^d` along the curve.
    ord_f: u64,
    ord_z: u64,
    weight: i64,
}

impl Curve {
    fn net(&self) -> i64 {
        self.ord_f as i64 - self.ord_z as i64
    }
}

#[derive(Clone)]
struct Point {
    u_axis: Option<usize>,
    v_axis: Option<usize>,
    /// Zero curves through the point, with their local strict transforms.
    comps: Vec<(usize, BivariatePoly)>,
    /// Value at the point of the unit factor of `φ`.
    unit: Rational,
    label: String,
}

struct Engine {
    curves: Vec<Curve>,
    edges: Vec<(usize, usize)>,
    blowups: usize,
    budget: usize,
}

fn int_pow(r: &Rational, e: i64) -> Rational {
    let p = num_traits::pow(r.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// `c(1, t)` for a form `c` of degree `m` in `(u, v)`.
fn dehomogenized(form: &BivariatePoly, m: u32) -> UnivariatePoly {
    UnivariatePoly::from_coeffs((0..=m).map(|j| form.coeff(m - j, j)).collect())
}

fn divide_u(p: &BivariatePoly, m: u32) -> BivariatePoly {
    p.div_exact(&BivariatePoly::monomial(Rational::one(), m, 0)).expect("exceptional factor divides")
}

/// Chart `v = u(v' + c)`.
fn chart_slope(p: &BivariatePoly, m: u32, c: &Rational) -> BivariatePoly {
    let v = BivariatePoly::x().mul(&BivariatePoly::y().add(&BivariatePoly::constant(c.clone())));
    divide_u(&p.substitute(&BivariatePoly::x(), &v), m)
}

/// Chart `u = v'·u'`, `v = u'`: the new first coordinate cuts out the exceptional curve.
fn chart_vertical(p: &BivariatePoly, m: u32) -> BivariatePoly {
    divide_u(&p.substitute(&BivariatePoly::y().mul(&BivariatePoly::x()), &BivariatePoly::x()), m)
}

/// The closure of `g = 0` near `p`, in the coordinates used by `localize`.
fn local_equation(g: &BivariatePoly, p: &InfinityPoint) -> BivariatePoly {
    let big = homogenize(g, g.degree().expect("nonconstant")).expect("degree matches");
    match p {
        InfinityPoint::Rational { x, y } if !x.is_zero() => {
            let c = y / x;
            big.dehomogenize_at(Chart::X)
                .swap()
                .substitute(&BivariatePoly::x(), &BivariatePoly::y().add(&BivariatePoly::constant(c)))
        }
        _ => big.dehomogenize_at(Chart::Y).swap(),
    }
}

/// Splits off rational linear factors depending on one variable only; a remaining
/// one-variable factor of higher degree is a union of conjugate lines and is rejected.
fn split_component(f: &BivariatePoly) -> Result<Vec<BivariatePoly>, ResolveError> {
    let cx = f.content_y();
    let rest = f.div_exact(&BivariatePoly::from_univariate_x(&cx)).expect("content divides");
    let cy = rest.swap().content_y();
    let core = rest.div_exact(&BivariatePoly::from_univariate_y(&cy)).expect("content divides");
    let mut out = Vec::new();
    for (content, lift) in [(cx, BivariatePoly::from_univariate_x as fn(&UnivariatePoly) -> BivariatePoly), (cy, BivariatePoly::from_univariate_y)] {
        if content.deg() == 0 {
            continue;
        }
        let mut left = content.clone();
        for r in content.rational_roots() {
            let line = UnivariatePoly::from_roots(&[r]);
            left = left.div_exact(&line).expect("root divides");
            out.push(lift(&line));
        }
        if left.deg() > 0 {
            return Err(ResolveError::ReducibleComponent(lift(&left).to_string()));
        }
    }
    if !core.is_constant() {
        out.push(core.normalized());
    }
    Ok(out)
}

/// Rational affine points where two components meet or one is singular.
fn special_points(comps: &[BivariatePoly]) -> Vec<(Rational, Rational)> {
    let mut out = Vec::new();
    for (i, a) in comps.iter().enumerate() {
        for b in &comps[i + 1..] {
            out.extend(rational_common_points(a, b));
        }
        let (ax, ay) = (a.partial_x(), a.partial_y());
        let (g, h) = if ax.is_zero() { (ay, ax) } else { (ax, ay) };
        out.extend(rational_common_points(a, &g).into_iter().filter(|(x, y)| h.eval(x, y).is_zero()));
    }
    out.sort();
    out.dedup();
    out
}

/// Components of a reduced product, after splitting off rational linear factors in one
/// variable; the remaining factors are kept as given, normalized.
pub fn split_components(factors: &[BivariatePoly]) -> Result<Vec<BivariatePoly>, ResolveError> {
    if factors.is_empty() || factors.iter().any(|g| g.is_constant()) {
        return Err(ResolveError::ConstantPolynomial);
    }
    let product = factors.iter().fold(BivariatePoly::one(), |acc, g| acc.mul(g));
    if !product.is_reduced() {
        return Err(ResolveError::NotReduced);
    }
    let mut comps = Vec::new();
    for g in factors {
        comps.extend(split_component(g)?);
    }
    Ok(comps)
}

/// Resolves the pencil of `f`, taking its components from rational linear factors in one
/// variable; any other factor is treated as one irreducible curve.
pub fn resolve_pencil(f: &BivariatePoly) -> Result<Resolution, ResolveError> {
    resolve_factors(std::slice::from_ref(f))
}

/// Resolves the pencil of the product of `factors`, each taken to be irreducible over `C` after
/// splitting off linear factors in one variable.
pub fn resolve_factors(factors: &[BivariatePoly]) -> Result<Resolution, ResolveError> {
    let comps = split_components(factors)?;
    let product = comps.iter().fold(BivariatePoly::one(), |acc, g| acc.mul(g));
    let d = product.degree().expect("nonconstant");
    let mut engine = Engine { curves: Vec::new(), edges: Vec::new(), blowups: 0, budget: 10 * (d as usize).pow(2) };
    engine.curves.push(Curve { label: "line at infinity".into(), ord_f: 0, ord_z: d as u64, weight: 1 });
    for (i, g) in comps.iter().enumerate() {
        let e = g.degree().expect("nonconstant") as i64;
        engine.curves.push(Curve { label: format!("C{}: {g}", i + 1), ord_f: 1, ord_z: 0, weight: e * e });
    }
    let special = special_points(&comps);
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            let local = special.iter().filter(|(x, y)| comps[i].eval(x, y).is_zero() && comps[j].eval(x, y).is_zero()).count();
            for _ in local..common_point_count(&comps[i], &comps[j]) {
                engine.edges.push((i + 1, j + 1));
            }
        }
    }
    for (x0, y0) in &special {
        let mut point = Point { u_axis: None, v_axis: None, comps: Vec::new(), unit: Rational::one(), label: format!("({}, {})", to_text(x0), to_text(y0)) };
        let (sx, sy) = (BivariatePoly::x().add(&BivariatePoly::constant(x0.clone())), BivariatePoly::y().add(&BivariatePoly::constant(y0.clone())));
        for (i, g) in comps.iter().enumerate() {
            let local = g.substitute(&sx, &sy);
            let value = local.constant_term();
            if value.is_zero() {
                point.comps.push((i + 1, local));
            } else {
                point.unit *= value;
            }
        }
        engine.process(point)?;
    }
    for p in points_at_infinity(&product).map_err(|e| ResolveError::NonRationalBasePoint(e.to_string()))? {
        if !p.is_rational() {
            return Err(ResolveError::NonRationalBasePoint(p.to_string()));
        }
        let mut point = Point { u_axis: Some(0), v_axis: None, comps: Vec::new(), unit: Rational::one(), label: p.to_string() };
        for (i, g) in comps.iter().enumerate() {
            let local = local_equation(g, &p);
            let value = local.constant_term();
            if value.is_zero() {
                point.comps.push((i + 1, local));
            } else {
                point.unit *= value;
            }
        }
        engine.process(point)?;
    }
    let mut graph = ColoredGraph::new();
    for c in &engine.curves {
        let color = match c.net() {
            n if n > 0 => Color::Zero,
            n if n < 0 => Color::Infty,
            _ => Color::Dicritical,
        };
        graph.add_vertex(c.weight, color);
    }
    for &(a, b) in &engine.edges {
        graph.add_edge(a, b);
    }
    Ok(Resolution { graph, labels: engine.curves.into_iter().map(|c| c.label).collect(), components: comps, blowups: engine.blowups })
}

impl Engine {
    fn net(&self, axis: Option<usize>) -> i64 {
        axis.map_or(0, |c| self.curves[c].net())
    }

    fn process(&mut self, p: Point) -> Result<(), ResolveError> {
        let (nu, nv) = (self.net(p.u_axis), self.net(p.v_axis));
        let zero_side = !p.comps.is_empty() || nu > 0 || nv > 0;
        let pole_side = nu < 0 || nv < 0;
        if !(zero_side && pole_side) && self.normal_crossing(&p) {
            let through: Vec<usize> = p.u_axis.into_iter().chain(p.v_axis).chain(p.comps.iter().map(|(c, _)| *c)).collect();
            for (k, &a) in through.iter().enumerate() {
                for &b in &through[k + 1..] {
                    self.edges.push((a, b));
                }
            }
            return Ok(());
        }
        self.blow_up(p)
    }

    /// At most two smooth branches through the point, meeting transversally.
    fn normal_crossing(&self, p: &Point) -> bool {
        let mut tangents: Vec<(Rational, Rational)> = Vec::new();
        if p.u_axis.is_some() {
            tangents.push((Rational::one(), Rational::zero()));
        }
        if p.v_axis.is_some() {
            tangents.push((Rational::zero(), Rational::one()));
        }
        for (_, c) in &p.comps {
            if c.order() != Some(1) {
                return false;
            }
            tangents.push((c.coeff(1, 0), c.coeff(0, 1)));
        }
        match tangents.as_slice() {
            [] | [_] => true,
            [(a, b), (c, d)] => a * d != b * c,
            _ => false,
        }
    }

    fn blow_up(&mut self, p: Point) -> Result<(), ResolveError> {
        self.blowups += 1;
        if self.blowups > self.budget {
            return Err(ResolveError::ResolutionBudgetExceeded(self.budget));
        }
        let mults: Vec<u32> = p.comps.iter().map(|(_, c)| c.order().expect("vanishes at the point")).collect();
        let (mut ord_f, mut ord_z) = (mults.iter().map(|&m| m as u64).sum::<u64>(), 0);
        for axis in p.u_axis.into_iter().chain(p.v_axis) {
            ord_f += self.curves[axis].ord_f;
            ord_z += self.curves[axis].ord_z;
            self.curves[axis].weight -= 1;
        }
        for ((c, _), m) in p.comps.iter().zip(&mults) {
            self.curves[*c].weight -= (*m as i64).pow(2);
        }
        let e = self.curves.len();
        self.curves.push(Curve { label: format!("E{}", self.blowups), ord_f, ord_z, weight: -1 });
        let n_e = ord_f as i64 - ord_z as i64;
        let nv = self.net(p.v_axis);

        // tangent directions: c_i's initial form at (1, t)
        let slopes: Vec<UnivariatePoly> =
            p.comps.iter().zip(&mults).map(|((_, c), &m)| dehomogenized(&c.homogeneous_part(m), m)).collect();
        if n_e == 0 {
            // φ on E is unit · t^{n_V} · Π slopes(t); constant means a fiber other than 0, ∞
            let prod = slopes.iter().fold(UnivariatePoly::one(), |a, s| a.mul(s));
            let j = prod.order().expect("nonzero") as i64;
            if prod.deg() as i64 == j && j == -nv {
                let value = &p.unit * prod.leading();
                return Err(ResolveError::UnexpectedFiberValue(to_text(&value)));
            }
        }

        // conjugate points on E carry zero curves and E only
        let irrational: Vec<UnivariatePoly> = slopes
            .iter()
            .map(|s| {
                let mut rest = s.squarefree_part();
                for r in s.rational_roots() {
                    rest = rest.div_exact(&UnivariatePoly::from_roots(&[r])).expect("root divides");
                }
                rest
            })
            .collect();
        if irrational.iter().any(|r| r.deg() > 0) {
            if n_e < 0 {
                let r = irrational.iter().find(|r| r.deg() > 0).expect("exists");
                return Err(ResolveError::NonRationalBasePoint(format!("{} on E{} at slope t with {} = 0", p.label, self.blowups, r.fmt_var("t"))));
            }
            for (k, (ci, _)) in p.comps.iter().enumerate() {
                for _ in 0..irrational[k].deg() {
                    self.edges.push((*ci, e));
                }
                for (l, (cj, _)) in p.comps.iter().enumerate().skip(k + 1) {
                    for _ in 0..irrational[k].gcd(&irrational[l]).deg() {
                        self.edges.push((*ci, *cj));
                    }
                }
            }
        }

        let mut slopes_here: Vec<Rational> = slopes.iter().flat_map(|s| s.rational_roots()).collect();
        if p.v_axis.is_some() {
            slopes_here.push(Rational::zero());
        }
        slopes_here.sort();
        slopes_here.dedup();
        for c in slopes_here {
            let mut q = Point { u_axis: Some(e), v_axis: None, comps: Vec::new(), unit: p.unit.clone(), label: p.label.clone() };
            match p.v_axis {
                Some(v) if c.is_zero() => q.v_axis = Some(v),
                Some(_) => q.unit *= int_pow(&c, nv),
                None => {}
            }
            for ((ci, poly), &m) in p.comps.iter().zip(&mults) {
                let t = chart_slope(poly, m, &c);
                let value = t.constant_term();
                if value.is_zero() {
                    q.comps.push((*ci, t));
                } else {
                    q.unit *= value;
                }
            }
            self.process(q)?;
        }

        let vertical = p.u_axis.is_some() || slopes.iter().zip(&mults).any(|(s, &m)| s.deg() < m as usize);
        if vertical {
            let mut q = Point { u_axis: Some(e), v_axis: p.u_axis, comps: Vec::new(), unit: p.unit.clone(), label: p.label.clone() };
            for ((ci, poly), &m) in p.comps.iter().zip(&mults) {
                let t = chart_vertical(poly, m);
                let value = t.constant_term();
                if value.is_zero() {
                    q.comps.push((*ci, t));
                } else {
                    q.unit *= value;
                }
            }
            self.process(q)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graph_iso, graphs_equivalent};
    use crate::parse::{parse_factors, parse_poly};
    use Color::*;

    fn resolve(s: &str) -> Resolution {
        resolve_factors(&parse_factors(s).unwrap()).unwrap()
    }

    #[test]
    fn a_line() {
        let r = resolve("x");
        assert_eq!(r.blowups, 1);
        let g = &r.graph;
        assert_eq!(g.label_multiset(), vec![(-1, Dicritical), (0, Zero), (0, Infty)]);
        // line at infinity and the line x = 0 both meet the dicritical curve
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn figure_polynomials() {
        let expected = {
            let mut v = vec![(-1, Infty), (-4, Infty), (-1, Dicritical), (-1, Dicritical), (-2, Zero), (-2, Zero), (-1, Zero), (-1, Zero)];
            v.extend([(-2, Infty); 3]);
            v.sort();
            v
        };
        let a = resolve("x*(x^2*y+1)");
        let b = resolve("x*(x^2*y+x+1)");
        assert_eq!(a.graph.label_multiset(), expected);
        assert_eq!(b.graph.label_multiset(), expected);
        assert!(graph_iso(&a.graph, &b.graph).unwrap().is_some());
        assert!(graphs_equivalent(&a.graph, &b.graph).unwrap());
        assert!(!graphs_equivalent(&a.graph, &resolve("x").graph).unwrap());
        for g in [&a.graph, &b.graph] {
            assert!(g.color_subgraph(Infty).is_forest() && g.color_subgraph(Infty).components() == 1);
            assert!(g.color_subgraph(Zero).is_forest());
            // the two dicritical curves close one cycle through both fibers
            assert_eq!((g.components(), g.edges().len()), (1, g.num_vertices()));
        }
    }

    #[test]
    fn expanded_input_is_split() {
        let a = resolve_pencil(&parse_poly("x^3*y + x").unwrap()).unwrap();
        assert_eq!(a.components.len(), 2);
        assert_eq!(a.graph.num_vertices(), 11);
    }

    #[test]
    fn errors() {
        let p = |s: &str| parse_poly(s).unwrap();
        assert!(matches!(resolve_pencil(&p("x^2 - 2*y^2")), Err(ResolveError::NonRationalBasePoint(_))));
        assert_eq!(resolve_pencil(&p("3")), Err(ResolveError::ConstantPolynomial));
        assert_eq!(resolve_pencil(&p("x^2*y")), Err(ResolveError::NotReduced));
        assert!(matches!(resolve_pencil(&p("x^2 - 2")), Err(ResolveError::ReducibleComponent(_))));
        assert!(resolve_pencil(&p("x*y - 1")).is_ok());
    }

    #[test]
    fn figure_adjacency() {
        // chain at (1:0:0) and chain at (0:1:0), both hanging off the line at infinity
        let g = resolve("x*(x^2*y+1)").graph;
        let edges = [(0, 3), (0, 7), (1, 8), (2, 6), (2, 9), (3, 4), (4, 5), (5, 6), (7, 10), (8, 9), (9, 10)];
        assert_eq!(g.edges(), &edges);
    }

    #[test]
    fn affine_triple_point_is_separated() {
        // three lines through the origin hang off one zero-colored curve
        let r = resolve("x*y*(x-y)");
        let e = r.labels.iter().position(|l| l.starts_with("(0, 0)") || l == "E1").unwrap();
        assert_eq!(r.graph.vertex(e).unwrap().color, Zero);
        assert_eq!(r.graph.neighbors(e), vec![1, 2, 3]);
        assert!(r.graph.color_subgraph(Zero).is_forest());
    }

    #[test]
    fn ledger_conservation() {
        // each blow-up adds one (−1) curve; weights of the others only go down
        for s in ["x", "x*y", "x*(x*y - 1)", "y - x^2", "x*(x^2*y+1)", "(x*y-1)*(x*y-2)*x"] {
            let r = resolve(s);
            assert_eq!(r.graph.num_vertices(), 1 + r.components.len() + r.blowups, "{s}");
            assert!(r.graph.color_subgraph(Infty).is_forest(), "{s}");
        }
    }
}

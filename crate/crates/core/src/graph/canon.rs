//! Reduction by blow-downs and isomorphism of colored weighted multigraphs.

use std::collections::{BTreeMap, HashMap};

use super::{ColoredGraph, Vertex};
use crate::error::GraphError;

/// Largest vertex count accepted by [`graph_iso`].
pub const ISO_LIMIT: usize = 64;

/// A reduced graph, and the `(−1)` vertices left in place because contracting them would
/// create a loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub graph: ColoredGraph,
    pub blocked: Vec<usize>,
}

/// Blows down the lowest eligible id until no vertex is eligible.
pub fn reduce(g: &ColoredGraph) -> Reduction {
    let mut g = g.clone();
    'outer: loop {
        let ids: Vec<usize> = g.vertices().map(|(id, _)| id).collect();
        for id in ids {
            if let Ok(h) = g.blow_down(id) {
                g = h;
                continue 'outer;
            }
        }
        break;
    }
    let blocked = g
        .vertices()
        .filter(|&(id, _)| matches!(g.blow_down(id), Err(GraphError::WouldCreateLoop(_))))
        .map(|(id, _)| id)
        .collect();
    Reduction { graph: g, blocked }
}

pub fn canonical_form(g: &ColoredGraph) -> ColoredGraph {
    reduce(g).graph
}

struct Indexed {
    labels: Vec<Vertex>,
    /// `adj[i][j]` is the number of edges between `i` and `j`.
    adj: Vec<Vec<u32>>,
    ids: Vec<usize>,
}

fn index(g: &ColoredGraph) -> Indexed {
    let ids: Vec<usize> = g.vertices().map(|(id, _)| id).collect();
    let pos: HashMap<usize, usize> = ids.iter().enumerate().map(|(i, id)| (*id, i)).collect();
    let mut adj = vec![vec![0u32; ids.len()]; ids.len()];
    for &(a, b) in g.edges() {
        adj[pos[&a]][pos[&b]] += 1;
        adj[pos[&b]][pos[&a]] += 1;
    }
    Indexed { labels: g.vertices().map(|(_, v)| v).collect(), adj, ids }
}

/// Joint colour refinement of both graphs so class numbers are comparable; returns the
/// classes of each.
fn refine(a: &Indexed, b: &Indexed) -> (Vec<usize>, Vec<usize>) {
    let n = a.ids.len();
    let initial = |g: &Indexed| -> Vec<(Vertex, u32)> {
        (0..n).map(|i| (g.labels[i], g.adj[i].iter().sum())).collect()
    };
    let mut keys: BTreeMap<(Vertex, u32), usize> = BTreeMap::new();
    let (ia, ib) = (initial(a), initial(b));
    for k in ia.iter().chain(&ib) {
        let len = keys.len();
        keys.entry(*k).or_insert(len);
    }
    let mut ca: Vec<usize> = ia.iter().map(|k| keys[k]).collect();
    let mut cb: Vec<usize> = ib.iter().map(|k| keys[k]).collect();
    loop {
        let sig = |g: &Indexed, c: &[usize], i: usize| -> (usize, Vec<(usize, u32)>) {
            let mut nb: Vec<(usize, u32)> = (0..n).filter(|&j| g.adj[i][j] > 0).map(|j| (c[j], g.adj[i][j])).collect();
            nb.sort();
            (c[i], nb)
        };
        let sa: Vec<_> = (0..n).map(|i| sig(a, &ca, i)).collect();
        let sb: Vec<_> = (0..n).map(|i| sig(b, &cb, i)).collect();
        let mut table: BTreeMap<&(usize, Vec<(usize, u32)>), usize> = BTreeMap::new();
        for s in sa.iter().chain(&sb) {
            let len = table.len();
            table.entry(s).or_insert(len);
        }
        let na: Vec<usize> = sa.iter().map(|s| table[s]).collect();
        let nb: Vec<usize> = sb.iter().map(|s| table[s]).collect();
        let before = ca.iter().chain(&cb).collect::<std::collections::BTreeSet<_>>().len();
        let stable = table.len() == before;
        ca = na;
        cb = nb;
        if stable {
            return (ca, cb);
        }
    }
}

/// A label- and multiplicity-preserving bijection from `a`'s ids to `b`'s, if one exists.
pub fn graph_iso(a: &ColoredGraph, b: &ColoredGraph) -> Result<Option<BTreeMap<usize, usize>>, GraphError> {
    for g in [a, b] {
        if g.num_vertices() > ISO_LIMIT {
            return Err(GraphError::SizeLimitExceeded(g.num_vertices()));
        }
    }
    if a.num_vertices() != b.num_vertices() || a.edges().len() != b.edges().len() || a.label_multiset() != b.label_multiset() {
        return Ok(None);
    }
    let (ia, ib) = (index(a), index(b));
    let (ca, cb) = refine(&ia, &ib);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }
    // smallest classes first, so forced choices come early
    let mut order: Vec<usize> = (0..ia.ids.len()).collect();
    let size = |c: usize| ca.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&i| (size(ca[i]), ca[i], i));
    let mut map = vec![usize::MAX; order.len()];
    let mut used = vec![false; order.len()];
    fn search(k: usize, order: &[usize], ia: &Indexed, ib: &Indexed, ca: &[usize], cb: &[usize], map: &mut [usize], used: &mut [bool]) -> bool {
        let Some(&i) = order.get(k) else { return true };
        for j in 0..used.len() {
            if used[j] || cb[j] != ca[i] {
                continue;
            }
            if order[..k].iter().any(|&p| ia.adj[i][p] != ib.adj[j][map[p]]) {
                continue;
            }
            map[i] = j;
            used[j] = true;
            if search(k + 1, order, ia, ib, ca, cb, map, used) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    if !search(0, &order, &ia, &ib, &ca, &cb, &mut map, &mut used) {
        return Ok(None);
    }
    Ok(Some((0..map.len()).map(|i| (ia.ids[i], ib.ids[map[i]])).collect()))
}

/// Isomorphism of canonical forms.
pub fn graphs_equivalent(a: &ColoredGraph, b: &ColoredGraph) -> Result<bool, GraphError> {
    Ok(graph_iso(&canonical_form(a), &canonical_form(b))?.is_some())
}

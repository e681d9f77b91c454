//! Orientations of maps.
//!
//! An orientation selects one *ingoing* half-edge per edge; drawing each
//! edge as an arrow pointing at the vertex of its ingoing half-edge turns
//! the map into a directed graph.  The *backward* walk steps from a
//! half-edge to the next candidate on a leftward path towards the root; an
//! orientation is *left-connected* when every half-edge reaches the root
//! this way.
//!
//! A covered map carries a canonical orientation ([`delta`]): order the
//! half-edges by first appearance along the motion walk from the root, and
//! orient every subset edge against its appearance order and every
//! complement edge with it.  This map from covered maps to left-connected
//! orientations is a bijection, inverted by [`gamma`], which replays the
//! walk and decides membership of each edge from its orientation.
//!
//! Bipartite maps additionally have a *geodesic* orientation (every edge
//! points away from the root vertex in breadth-first distance), whose
//! covered-map preimage is the rightmost breadth-first-search spanning tree
//! ([`rightmost_bfs_tree`]).

use crate::cmap::{encode_key, CoveredMap, RootedMap, SpannedMap};
use crate::{MapError, Result};
use std::fmt;

/// A rooted map together with an orientation: a choice of one ingoing
/// half-edge per edge.
#[derive(Clone, PartialEq, Eq)]
pub struct OrientedMap {
    map: RootedMap,
    in_i: Vec<bool>,
}

impl OrientedMap {
    /// Builds an oriented map from the list of ingoing half-edges, which
    /// must contain exactly one half-edge of every edge.
    pub fn new(map: RootedMap, ingoing: &[usize]) -> Result<OrientedMap> {
        let mut in_i = vec![false; map.n_half()];
        for &h in ingoing {
            if h >= map.n_half() {
                return Err(MapError::HalfEdgeOutOfRange(h));
            }
            if in_i[h] {
                return Err(MapError::DuplicateCycleEntry(h));
            }
            in_i[h] = true;
        }
        OrientedMap::from_mask(map, in_i)
    }

    /// Builds an oriented map from an ingoing-membership mask.
    pub fn from_mask(map: RootedMap, in_i: Vec<bool>) -> Result<OrientedMap> {
        assert_eq!(in_i.len(), map.n_half());
        for h in 0..map.n_half() {
            if in_i[h] == in_i[map.alpha().apply(h)] {
                return Err(MapError::BadOrientation(h));
            }
        }
        Ok(OrientedMap { map, in_i })
    }

    /// The underlying rooted map.
    pub fn map(&self) -> &RootedMap {
        &self.map
    }

    /// Ingoing-membership mask.
    pub fn mask(&self) -> &[bool] {
        &self.in_i
    }

    /// True when half-edge `h` is ingoing.
    pub fn is_ingoing(&self, h: usize) -> bool {
        self.in_i[h]
    }

    /// The ingoing half-edges in increasing order.
    pub fn ingoing_halves(&self) -> Vec<usize> {
        (0..self.map.n_half()).filter(|&h| self.in_i[h]).collect()
    }

    /// Comparison key: canonical key of the map plus the transported
    /// ingoing mask.
    pub fn canonical_key(&self) -> Vec<u8> {
        let (canon, lam) = self.map.canonical_form();
        let mut mask = vec![false; self.map.n_half()];
        for h in 0..self.map.n_half() {
            mask[lam[h]] = self.in_i[h];
        }
        encode_key(&canon, &mask)
    }
}

impl fmt::Debug for OrientedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedMap[{:?} I={:?}]", self.map, self.ingoing_halves())
    }
}

/// The order of first appearance of the half-edges along the motion walk of
/// a covered map, starting at the root.
pub struct AppearanceOrder {
    seq: Vec<usize>,
    rank: Vec<usize>,
}

impl AppearanceOrder {
    /// Walks the motion permutation from the root.
    pub fn of_covered(cm: &CoveredMap) -> AppearanceOrder {
        let n_half = cm.map().n_half();
        let mut seq = Vec::with_capacity(n_half);
        let mut rank = vec![usize::MAX; n_half];
        if let Some(r) = cm.map().root() {
            let theta = cm.motion();
            let mut h = r;
            for k in 0..n_half {
                rank[h] = k;
                seq.push(h);
                h = theta.apply(h);
            }
            debug_assert_eq!(h, r, "motion permutation of a covered map is cyclic");
        }
        AppearanceOrder { seq, rank }
    }

    /// Half-edges in appearance order.
    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    /// Position of each half-edge in the walk (the root has rank 0).
    pub fn rank(&self, h: usize) -> usize {
        self.rank[h]
    }
}

/// The canonical orientation of a covered map: a subset half-edge is
/// ingoing when its twin appears before it on the motion walk, and a
/// complement half-edge is ingoing when it appears before its twin.
pub fn delta(cm: &CoveredMap) -> OrientedMap {
    let order = AppearanceOrder::of_covered(cm);
    let map = cm.map().clone();
    let in_i: Vec<bool> = (0..map.n_half())
        .map(|h| {
            let twin = map.alpha().apply(h);
            if cm.spanned().contains(h) {
                order.rank(twin) < order.rank(h)
            } else {
                order.rank(h) < order.rank(twin)
            }
        })
        .collect();
    OrientedMap::from_mask(map, in_i).expect("ranks of twins always differ")
}

/// One step of the backward walk: from an outgoing half-edge turn to the
/// next half-edge around its vertex; from an ingoing one follow the face
/// contour.  Twin half-edges step to the same place, so the walk only
/// depends on the edge.
pub fn backward(om: &OrientedMap, h: usize) -> usize {
    if om.is_ingoing(h) {
        om.map().face_perm().apply(h)
    } else {
        om.map().sigma().apply(h)
    }
}

/// True when from every half-edge some positive number of backward steps
/// reaches the root.  The empty map counts as left-connected.
pub fn is_left_connected(om: &OrientedMap) -> bool {
    left_connected_witness(om).is_none()
}

/// `None` when left-connected, otherwise some half-edge that never walks
/// back to the root.
pub(crate) fn left_connected_witness(om: &OrientedMap) -> Option<usize> {
    let n_half = om.map().n_half();
    let Some(r) = om.map().root() else {
        return None;
    };
    // reverse reachability: h is good when backward(h) = r or leads to a good one
    let mut preimages = vec![Vec::new(); n_half];
    for h in 0..n_half {
        preimages[backward(om, h)].push(h);
    }
    let mut good = vec![false; n_half];
    let mut stack: Vec<usize> = preimages[r].clone();
    for &h in &stack {
        good[h] = true;
    }
    while let Some(h) = stack.pop() {
        for &p in &preimages[h] {
            if !good[p] {
                good[p] = true;
                stack.push(p);
            }
        }
    }
    good.iter().position(|&g| !g)
}

/// Rebuilds the covered map inducing a left-connected orientation: replay
/// the walk from the root, sending each newly met outgoing edge into the
/// subset and each newly met ingoing edge into the complement, stepping by
/// the membership just decided.
///
/// This inverts [`delta`]; non-left-connected orientations are rejected.
pub fn gamma(om: &OrientedMap) -> Result<CoveredMap> {
    if let Some(witness) = left_connected_witness(om) {
        return Err(MapError::NotLeftConnected(witness));
    }
    let map = om.map().clone();
    let n_half = map.n_half();
    let Some(r) = map.root() else {
        let spanned = SpannedMap::from_mask(map, Vec::new()).expect("empty mask");
        return CoveredMap::new(spanned);
    };
    let phi = map.face_perm();
    let mut in_s = vec![false; n_half];
    let mut decided = vec![false; n_half];
    let mut h = r;
    for _ in 0..n_half {
        if !decided[h] {
            let twin = map.alpha().apply(h);
            decided[h] = true;
            decided[twin] = true;
            if !om.is_ingoing(h) {
                in_s[h] = true;
                in_s[twin] = true;
            }
        }
        h = if in_s[h] {
            phi.apply(h)
        } else {
            map.sigma().apply(h)
        };
    }
    debug_assert_eq!(h, r, "walk of a left-connected orientation is cyclic");
    debug_assert!(decided.iter().all(|&d| d));
    let spanned = SpannedMap::from_mask(map, in_s).expect("membership is decided per edge");
    CoveredMap::new(spanned)
}

/// The geodesic orientation of a bipartite map: every edge points away from
/// the root vertex, i.e. a half-edge is ingoing exactly when its vertex is
/// one step farther from the root vertex than its twin's.
pub fn geodesic_orientation(map: &RootedMap) -> Result<OrientedMap> {
    map.bipartition()?;
    let dist = map.vertex_distances();
    let ids = map.vertex_ids();
    let in_i: Vec<bool> = (0..map.n_half())
        .map(|h| dist[ids[h]] == dist[ids[map.alpha().apply(h)]] + 1)
        .collect();
    Ok(OrientedMap::from_mask(map.clone(), in_i)
        .expect("bipartite breadth-first distances differ across every edge"))
}

/// The rightmost breadth-first-search spanning tree.
///
/// Vertices are processed first-in-first-out.  The root vertex inspects its
/// half-edges counterclockwise starting at the root half-edge; any other
/// vertex starts at the successor of the half-edge along which it was
/// discovered.  An inspected edge joins the tree when it leads to an
/// undiscovered vertex.
pub fn rightmost_bfs_tree(map: &RootedMap) -> SpannedMap {
    let n_half = map.n_half();
    let mut in_tree = vec![false; n_half];
    let ids = map.vertex_ids();
    let vertices = map.vertices();
    let mut discovered = vec![false; vertices.len()];
    // start half-edge at each vertex once discovered
    let mut start = vec![usize::MAX; vertices.len()];
    let mut queue = std::collections::VecDeque::new();
    if let Some(r) = map.root() {
        discovered[ids[r]] = true;
        start[ids[r]] = r;
        queue.push_back(ids[r]);
        while let Some(v) = queue.pop_front() {
            let mut h = start[v];
            for _ in 0..vertices[v].len() {
                let twin = map.alpha().apply(h);
                let w = ids[twin];
                if !discovered[w] {
                    discovered[w] = true;
                    in_tree[h] = true;
                    in_tree[twin] = true;
                    start[w] = map.sigma().apply(twin);
                    queue.push_back(w);
                }
                h = map.sigma().apply(h);
            }
            debug_assert_eq!(h, start[v], "full turn around the vertex");
        }
    }
    SpannedMap::from_mask(map.clone(), in_tree).expect("tree edges are twin-closed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmap::{CoveredMap, SpannedMap};
    use crate::codes::CodeShuffle;
    use crate::perm::Perm;

    fn link() -> RootedMap {
        RootedMap::new(Perm::identity(2), Perm::transposition(2, 0, 1), Some(0)).unwrap()
    }

    fn loop_map() -> RootedMap {
        let t = Perm::transposition(2, 0, 1);
        RootedMap::new(t.clone(), t, Some(0)).unwrap()
    }

    fn covered(map: RootedMap, s: &[usize]) -> CoveredMap {
        CoveredMap::new(SpannedMap::new(map, s).unwrap()).unwrap()
    }

    #[test]
    fn one_edge_canonical_orientations() {
        // tree-rooted link: the root half-edge is outgoing, its twin ingoing
        let om = delta(&covered(link(), &[0, 1]));
        assert_eq!(om.ingoing_halves(), vec![1]);
        // loop with empty subset: the root half-edge itself is ingoing
        let om = delta(&covered(loop_map(), &[]));
        assert_eq!(om.ingoing_halves(), vec![0]);
    }

    #[test]
    fn backward_walk_is_twin_invariant() {
        let cm = covered(link(), &[0, 1]);
        let om = delta(&cm);
        for h in 0..2 {
            assert_eq!(backward(&om, h), backward(&om, om.map().alpha().apply(h)));
        }
    }

    #[test]
    fn delta_then_gamma_is_identity_on_one_edge_maps() {
        for cm in [covered(link(), &[0, 1]), covered(loop_map(), &[])] {
            let om = delta(&cm);
            assert!(is_left_connected(&om));
            let back = gamma(&om).unwrap();
            assert_eq!(back.map(), cm.map());
            assert_eq!(back.spanned().mask(), cm.spanned().mask());
        }
    }

    #[test]
    fn reversed_orientations_are_not_left_connected() {
        // link with the root half-edge ingoing: its backward walk fixes 1
        let om = OrientedMap::new(link(), &[0]).unwrap();
        assert!(!is_left_connected(&om));
        assert!(matches!(gamma(&om), Err(MapError::NotLeftConnected(_))));
        // loop with the twin ingoing: backward walk of 0 loops at 0
        let om = OrientedMap::new(loop_map(), &[1]).unwrap();
        assert!(!is_left_connected(&om));
        // so exactly 2 of the 4 one-edge orientations are left-connected,
        // matching the 2 covered maps with one edge
    }

    #[test]
    fn orientation_validation() {
        assert!(matches!(
            OrientedMap::new(link(), &[]),
            Err(MapError::BadOrientation(_))
        ));
        assert!(matches!(
            OrientedMap::new(link(), &[0, 1]),
            Err(MapError::BadOrientation(_))
        ));
        assert!(matches!(
            OrientedMap::new(link(), &[9]),
            Err(MapError::HalfEdgeOutOfRange(9))
        ));
    }

    #[test]
    fn nine_edge_worked_example_round_trips() {
        let shuffle =
            CodeShuffle::parse("a1 b1 a2 b2 A2 b3 A1 B1 a3 b4 a4 a5 B3 A5 B2 A4 B4 A3").unwrap();
        let cm = shuffle.to_covered();
        let om = delta(&cm);
        assert!(is_left_connected(&om));
        let back = gamma(&om).unwrap();
        assert_eq!(back.map(), cm.map());
        assert_eq!(back.spanned().mask(), cm.spanned().mask());
    }

    #[test]
    fn appearance_order_starts_at_the_root() {
        let cm = covered(link(), &[0, 1]);
        let order = AppearanceOrder::of_covered(&cm);
        assert_eq!(order.seq(), &[0, 1]);
        assert_eq!(order.rank(0), 0);
        assert_eq!(order.rank(1), 1);
    }

    #[test]
    fn geodesic_orientation_of_the_link() {
        let om = geodesic_orientation(&link()).unwrap();
        assert_eq!(om.ingoing_halves(), vec![1]);
        assert!(matches!(
            geodesic_orientation(&loop_map()),
            Err(MapError::NotBipartite(_))
        ));
    }

    #[test]
    fn rightmost_bfs_tree_spans_the_map() {
        // path with two edges from the earlier fixture
        let sigma = Perm::from_cycles(4, &[vec![1, 2]]).unwrap();
        let alpha = Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let path = RootedMap::new(sigma, alpha, Some(0)).unwrap();
        let tree = rightmost_bfs_tree(&path);
        assert_eq!(tree.s_halves(), vec![0, 1, 2, 3]);
        assert!(tree.is_covered());
        // on the loop the tree is empty
        let tree = rightmost_bfs_tree(&loop_map());
        assert!(tree.s_halves().is_empty());
        assert!(tree.is_covered());
    }

    #[test]
    fn empty_map_orientation_round_trip() {
        let om = OrientedMap::new(RootedMap::empty(), &[]).unwrap();
        assert!(is_left_connected(&om));
        let cm = gamma(&om).unwrap();
        assert_eq!(cm.map().n_edges(), 0);
        assert_eq!(delta(&cm).ingoing_halves(), Vec::<usize>::new());
    }
}

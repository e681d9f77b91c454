//! Unfolding a left-connected orientation into a plane tree plus a mobile,
//! and folding the pair back.
//!
//! Given an oriented map on half-edges `H = {0, …, 2n-1}`, the *unfolding*
//! [`lambda`] adds a marked edge made of an ingoing half `i = 2n` and an
//! outgoing half `o = 2n+1`, inserts `i` into the vertex rotation just
//! before the root and `o` into the face contour just before the root, and
//! splits the extended rotation into two factors:
//!
//! * `pi_in`, the rotation restricted to ingoing half-edges, whose cycles
//!   are the *white* vertices of the mobile;
//! * `pi_out`, the extended contour restricted to outgoing half-edges,
//!   whose cycles are the *black* vertices;
//! * their combination `pi = pi_in ∘ pi_out⁻¹` is the vertex rotation of
//!   the **mobile**: a one-faced bipartite map on `H ∪ {i, o}` rooted at
//!   `i`, with one white vertex per map vertex and one black vertex per
//!   face;
//! * dividing the rotation by `pi_in` leaves `tau = sigma' ∘ pi_in⁻¹`,
//!   the rotation of a **plane tree** on `H` rooted at `tau(i)`.
//!
//! The pair determines the orientation: [`omega`] re-inserts `i` before the
//! tree root, multiplies back `sigma = tau' ∘ pi_in`, and reads the root off
//! the image of `i`.  Both maps are mutually inverse bijections between
//! left-connected orientations with `n` edges and *coherent* pairs (plane
//! tree with `n` edges, mobile with `n+1` edges sharing its half-edge names
//! — see [`TreeMobilePair`]).  Composed with the covered-map orientation
//! they give the bijection [`psi`] from covered maps to pairs, which sends
//! vertices to white vertices, faces to black vertices, subset edges to
//! tree edges, and genus to mobile genus.

use crate::cmap::{CoveredMap, RootedMap};
use crate::orient::{delta, gamma, left_connected_witness, OrientedMap};
use crate::perm::Perm;
use crate::{MapError, Result};
use std::fmt;

/// A plane tree and a mobile sharing half-edge names coherently.
///
/// Writing `2n` for the number of tree half-edges, the invariants are:
///
/// 1. the tree is a plane tree on `{0, …, 2n-1}`;
/// 2. the mobile lives on `{0, …, 2n+1}`, is rooted at `i = 2n`, and its
///    edge involution extends the tree's by the pair `{i, o = 2n+1}`;
/// 3. the mobile is one-faced and bipartite, with the ingoing half-edges of
///    the tree's root-to-leaves orientation (plus `i`) on white vertices
///    and the outgoing ones (plus `o`) on black vertices;
/// 4. walking the inverse of the mobile's face permutation from `i` meets
///    the white half-edges in the order `i, alpha(o_1), …, alpha(o_n)`,
///    where `o_1, …, o_n` are the outgoing tree half-edges in face-contour
///    order from the tree root.
#[derive(Clone, PartialEq, Eq)]
pub struct TreeMobilePair {
    tree: RootedMap,
    mobile: RootedMap,
}

impl TreeMobilePair {
    /// Validates the coherence invariants and wraps the pair.
    pub fn new(tree: RootedMap, mobile: RootedMap) -> Result<TreeMobilePair> {
        if !tree.is_plane_tree() {
            return Err(MapError::NotAPlaneTree {
                v: tree.vertex_count(),
                e: tree.n_edges(),
                f: tree.face_count(),
            });
        }
        let n_half = tree.n_half();
        let (i, o) = (n_half, n_half + 1);
        if mobile.n_half() != n_half + 2 {
            return Err(MapError::IncoherentPair(
                "mobile must have exactly one more edge than the tree",
            ));
        }
        if mobile.root() != Some(i) {
            return Err(MapError::IncoherentPair(
                "mobile must be rooted at the first added half-edge",
            ));
        }
        if mobile.alpha().apply(i) != o {
            return Err(MapError::IncoherentPair(
                "the two added half-edges must form an edge",
            ));
        }
        for h in 0..n_half {
            if mobile.alpha().apply(h) != tree.alpha().apply(h) {
                return Err(MapError::IncoherentPair(
                    "tree and mobile must pair the shared half-edges identically",
                ));
            }
        }
        let faces = mobile.face_count();
        if faces != 1 {
            return Err(MapError::NotUnicellular(faces));
        }
        // bipartition with ingoing halves white, outgoing halves black
        let colours = mobile.bipartition()?;
        let ids = mobile.vertex_ids();
        let tree_orientation = tree_root_to_leaves(&tree);
        let ingoing = |h: usize| h == i || (h < n_half && tree_orientation.is_ingoing(h));
        for h in 0..mobile.n_half() {
            if colours[ids[h]] != !ingoing(h) {
                return Err(MapError::IncoherentPair(
                    "ingoing half-edges must sit on white vertices and outgoing ones on black vertices",
                ));
            }
        }
        // white corners in contour-inverse order must follow the tree's
        // outgoing order
        let pair = TreeMobilePair { tree, mobile };
        let corners = pair.white_corner_cycle();
        let outgoing = outgoing_contour_order(&pair.tree, &tree_orientation);
        if corners.len() != outgoing.len() + 1 {
            return Err(MapError::IncoherentPair(
                "mobile must have one white corner per tree edge plus the root corner",
            ));
        }
        for (j, &o_j) in outgoing.iter().enumerate() {
            if corners[j + 1] != pair.tree.alpha().apply(o_j) {
                return Err(MapError::IncoherentPair(
                    "white corners must follow the tree's outgoing contour order",
                ));
            }
        }
        Ok(pair)
    }

    /// The plane tree.
    pub fn tree(&self) -> &RootedMap {
        &self.tree
    }

    /// The mobile: a one-faced bipartite map with one more edge than the
    /// tree, rooted at the added ingoing half-edge.
    pub fn mobile(&self) -> &RootedMap {
        &self.mobile
    }

    /// Number of tree edges.
    pub fn n_edges(&self) -> usize {
        self.tree.n_edges()
    }

    /// Colour of each mobile vertex (indexed as in `mobile().vertices()`):
    /// `false` for white, `true` for black.
    pub fn mobile_colours(&self) -> Vec<bool> {
        self.mobile.bipartition().expect("validated bipartite")
    }

    /// The white half-edges in the order met by walking the inverse face
    /// permutation of the mobile from its root: `i, i_1, …, i_n`.
    pub fn white_corner_cycle(&self) -> Vec<usize> {
        white_corner_cycle(&self.mobile).expect("validated bipartite with white root")
    }

    /// Comparison key: canonical key of the tree followed by canonical key
    /// of the mobile.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut key = self.tree.canonical_key();
        key.extend(self.mobile.canonical_key());
        key
    }
}

impl fmt::Debug for TreeMobilePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TreeMobilePair[tree={:?} mobile={:?}]",
            self.tree, self.mobile
        )
    }
}

/// The root-to-leaves orientation of a plane tree: each edge points from
/// parent to child, i.e. the ingoing half-edge of an edge is the one at the
/// child vertex.
///
/// Panics if the map is not a plane tree (callers validate first).
pub fn tree_root_to_leaves(tree: &RootedMap) -> OrientedMap {
    assert!(tree.is_plane_tree(), "root-to-leaves needs a plane tree");
    let ids = tree.vertex_ids();
    let vertices = tree.vertices();
    let mut in_i = vec![false; tree.n_half()];
    let mut seen = vec![false; vertices.len()];
    let mut queue = std::collections::VecDeque::new();
    if let Some(r) = tree.root() {
        seen[ids[r]] = true;
        queue.push_back(ids[r]);
        while let Some(v) = queue.pop_front() {
            for &h in &vertices[v] {
                let twin = tree.alpha().apply(h);
                let w = ids[twin];
                if !seen[w] {
                    seen[w] = true;
                    in_i[twin] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    OrientedMap::from_mask(tree.clone(), in_i).expect("a tree edge has one child side")
}

/// The outgoing half-edges of a plane tree in face-contour order from the
/// root: `o_1, …, o_n` with `o_1` the root half-edge itself.
fn outgoing_contour_order(tree: &RootedMap, orientation: &OrientedMap) -> Vec<usize> {
    let mut out = Vec::with_capacity(tree.n_edges());
    if let Some(r) = tree.root() {
        let phi = tree.face_perm();
        let mut h = r;
        loop {
            if !orientation.is_ingoing(h) {
                out.push(h);
            }
            h = phi.apply(h);
            if h == r {
                break;
            }
        }
    }
    out
}

/// The white half-edges of a mobile in the order met by walking the inverse
/// of its face permutation from the root.  White means "at a vertex in the
/// root vertex's colour class"; fails when the mobile is not bipartite.
pub fn white_corner_cycle(mobile: &RootedMap) -> Result<Vec<usize>> {
    let colours = mobile.bipartition()?;
    let ids = mobile.vertex_ids();
    let Some(root) = mobile.root() else {
        return Ok(Vec::new());
    };
    let contour_inv = mobile.face_perm().inverse();
    let mut corners = Vec::new();
    let mut h = root;
    loop {
        if !colours[ids[h]] {
            corners.push(h);
        }
        h = contour_inv.apply(h);
        if h == root {
            break;
        }
    }
    Ok(corners)
}

/// Inserts a currently fixed element `x` into the cycle of `p` just before
/// `y`: afterwards `p(x) = y` and the former preimage of `y` maps to `x`.
fn insert_before(p: &Perm, x: usize, y: usize) -> Perm {
    debug_assert_eq!(p.apply(x), x, "inserted element must be fixed");
    let mut images: Vec<usize> = (0..p.size()).map(|z| p.apply(z)).collect();
    let pre = p.inverse().apply(y);
    images[pre] = x;
    images[x] = y;
    Perm::from_images(images).expect("cycle insertion preserves bijectivity")
}

/// Extends a permutation of `{0, …, m-1}` to `{0, …, m+extra-1}` by fixed
/// points.
fn extend(p: &Perm, extra: usize) -> Perm {
    let mut images: Vec<usize> = p.images().to_vec();
    images.extend(p.size()..p.size() + extra);
    Perm::from_images(images).expect("extension by fixed points")
}

/// Restricts a permutation to `{0, …, keep-1}` (erasing the rest from its
/// cycles) and truncates the image array to that prefix.
pub(crate) fn restrict_and_truncate(p: &Perm, keep: usize) -> Perm {
    let mask: Vec<bool> = (0..p.size()).map(|h| h < keep).collect();
    let restricted = p.restricted_to(&mask);
    let images: Vec<usize> = (0..keep).map(|h| restricted.apply(h)).collect();
    Perm::from_images(images).expect("restriction stabilises the prefix")
}

/// Unfolds a left-connected orientation into its coherent tree/mobile pair.
pub fn lambda(om: &OrientedMap) -> Result<TreeMobilePair> {
    if let Some(witness) = left_connected_witness(om) {
        return Err(MapError::NotLeftConnected(witness));
    }
    let map = om.map();
    let n_half = map.n_half();
    let (i, o) = (n_half, n_half + 1);
    if n_half == 0 {
        return Ok(empty_pair());
    }
    let r = map.root().expect("non-empty maps are rooted");

    // extended rotation and contour
    let sigma_ext = insert_before(&extend(map.sigma(), 2), i, r);
    let phi_ext = insert_before(&extend(&map.face_perm(), 2), o, r);
    let mut alpha_images: Vec<usize> = map.alpha().images().to_vec();
    alpha_images.extend([o, i]);
    let alpha_ext = Perm::from_images(alpha_images).expect("twin pairing extended");
    debug_assert_eq!(
        phi_ext,
        Perm::transposition(n_half + 2, i, o)
            .compose(&sigma_ext)
            .compose(&alpha_ext),
        "extended contour = (i o) ∘ extended rotation ∘ extended involution"
    );

    let in_mask: Vec<bool> = (0..n_half + 2)
        .map(|h| h == i || (h < n_half && om.is_ingoing(h)))
        .collect();
    let out_mask: Vec<bool> = in_mask.iter().map(|&b| !b).collect();

    let pi_in = sigma_ext.restricted_to(&in_mask);
    let pi_out = phi_ext.restricted_to(&out_mask);
    let pi = pi_in.compose(&pi_out.inverse());
    let tau_ext = sigma_ext.compose(&pi_in.inverse());

    let t = tau_ext.apply(i);
    debug_assert!(t < n_half, "the tree root is an original half-edge");

    let tau = restrict_and_truncate(&tau_ext, n_half);
    let tree = RootedMap::new(tau, map.alpha().clone(), Some(t))
        .expect("unfolding a left-connected orientation yields a map");
    let mobile = RootedMap::new(pi, alpha_ext, Some(i))
        .expect("unfolding a left-connected orientation yields a mobile");
    TreeMobilePair::new(tree, mobile)
}

/// The pair for the empty map: an empty tree and the one-edge mobile whose
/// white root vertex carries `i` and whose black vertex carries `o`.
fn empty_pair() -> TreeMobilePair {
    let tree = RootedMap::empty();
    let mobile = RootedMap::new(
        Perm::identity(2),
        Perm::transposition(2, 0, 1),
        Some(0),
    )
    .expect("one-edge mobile");
    TreeMobilePair::new(tree, mobile).expect("the empty pair is coherent")
}

/// Folds a coherent pair back into the left-connected orientation.
pub fn omega(pair: &TreeMobilePair) -> OrientedMap {
    let n_half = pair.tree.n_half();
    let (i, _o) = (n_half, n_half + 1);
    if n_half == 0 {
        return OrientedMap::new(RootedMap::empty(), &[]).expect("empty orientation");
    }
    let t = pair.tree.root().expect("non-empty tree is rooted");

    let tau_ext = insert_before(&extend(pair.tree.sigma(), 2), i, t);
    let orientation = tree_root_to_leaves(&pair.tree);
    let in_mask: Vec<bool> = (0..n_half + 2)
        .map(|h| h == i || (h < n_half && orientation.is_ingoing(h)))
        .collect();
    let pi_in = pair.mobile.sigma().restricted_to(&in_mask);
    let sigma_ext = tau_ext.compose(&pi_in);

    let r = sigma_ext.apply(i);
    debug_assert!(r < n_half, "the map root is an original half-edge");
    let sigma = restrict_and_truncate(&sigma_ext, n_half);
    let map = RootedMap::new(sigma, pair.tree.alpha().clone(), Some(r))
        .expect("folding a coherent pair yields a map");
    let in_i: Vec<bool> = (0..n_half).map(|h| in_mask[h]).collect();
    OrientedMap::from_mask(map, in_i).expect("tree orientation is one half per edge")
}

/// Relabels a mobile coherently with a given plane tree.
///
/// The tree keeps its labels.  The mobile may use any labels: it must be
/// one-faced, bipartite with a white root vertex, and have exactly one more
/// edge than the tree.  Its half-edges are renamed so that the pair becomes
/// coherent — the white corners met along the inverse contour from the
/// mobile root are matched with the tree's outgoing contour order.  Every
/// such (tree, mobile) shape admits exactly one coherent relabelling.
pub fn coherent_relabel(tree: &RootedMap, mobile: &RootedMap) -> Result<TreeMobilePair> {
    if !tree.is_plane_tree() {
        return Err(MapError::NotAPlaneTree {
            v: tree.vertex_count(),
            e: tree.n_edges(),
            f: tree.face_count(),
        });
    }
    let n_half = tree.n_half();
    let (i, o) = (n_half, n_half + 1);
    if mobile.n_half() != n_half + 2 {
        return Err(MapError::IncoherentPair(
            "mobile must have exactly one more edge than the tree",
        ));
    }
    let faces = mobile.face_count();
    if faces != 1 {
        return Err(MapError::NotUnicellular(faces));
    }
    let corners = white_corner_cycle(mobile)?;
    if corners.len() != tree.n_edges() + 1 {
        return Err(MapError::IncoherentPair(
            "mobile must have one white corner per tree edge plus the root corner",
        ));
    }
    let orientation = tree_root_to_leaves(tree);
    let outgoing = outgoing_contour_order(tree, &orientation);

    let mut lam = vec![usize::MAX; mobile.n_half()];
    lam[corners[0]] = i;
    lam[mobile.alpha().apply(corners[0])] = o;
    for (j, &o_j) in outgoing.iter().enumerate() {
        let i_j = corners[j + 1];
        lam[i_j] = tree.alpha().apply(o_j);
        lam[mobile.alpha().apply(i_j)] = o_j;
    }
    debug_assert!(
        lam.iter().all(|&x| x != usize::MAX),
        "white corners and their twins exhaust the mobile"
    );
    TreeMobilePair::new(tree.clone(), mobile.relabelled(&lam))
}

/// The bijection from covered maps to coherent tree/mobile pairs: unfold
/// the canonical orientation.  Subset edges become tree edges, vertices
/// white vertices, faces black vertices; the genus moves to the mobile.
pub fn psi(cm: &CoveredMap) -> TreeMobilePair {
    lambda(&delta(cm)).expect("the canonical orientation is left-connected")
}

/// The inverse bijection: fold the pair and replay the orientation walk.
pub fn psi_inv(pair: &TreeMobilePair) -> CoveredMap {
    gamma(&omega(pair)).expect("folded orientations are left-connected")
}

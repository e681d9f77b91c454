//! Rooted maps, pseudo-maps, spanned maps and covered maps.
//!
//! A rooted map is a pair of permutations `(sigma, alpha)` of the half-edge
//! set `{0, …, 2n-1}` acting transitively, where `alpha` is the
//! fixed-point-free involution pairing each half-edge with its twin and
//! `sigma` is the counterclockwise rotation around vertices.  The face
//! permutation is `phi = sigma ∘ alpha`.  The empty map (`n = 0`) counts as
//! having one vertex and one face, which makes every formula in the crate
//! uniform.
//!
//! A *spanned* map distinguishes an `alpha`-stable subset `S` of half-edges;
//! its *motion* permutation follows `phi` on `S` and `sigma` off `S`, and
//! walks alternately through the submap induced by `S` and the complement
//! submap of the dual.  The spanned map is *covered* when that walk is a
//! single cycle through all half-edges — equivalently, when the submap
//! touches every vertex, is connected, and has exactly one face.

use crate::perm::Perm;
use crate::{MapError, Result};
use std::fmt;

/// A rooted combinatorial map on an orientable surface.
///
/// Invariants, enforced on construction: `sigma` and `alpha` act on the same
/// even-sized ground set, `alpha` is a fixed-point-free involution, the two
/// permutations act transitively, and the root is present exactly when the
/// ground set is non-empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootedMap {
    sigma: Perm,
    alpha: Perm,
    root: Option<usize>,
}

impl RootedMap {
    /// Builds a rooted map, validating every invariant.
    pub fn new(sigma: Perm, alpha: Perm, root: Option<usize>) -> Result<RootedMap> {
        let n_half = sigma.size();
        if alpha.size() != n_half {
            return Err(MapError::MismatchedSizes {
                sigma: n_half,
                alpha: alpha.size(),
            });
        }
        if n_half % 2 != 0 {
            return Err(MapError::OddHalfEdgeCount(n_half));
        }
        for h in 0..n_half {
            if alpha.apply(h) == h {
                return Err(MapError::AlphaHasFixedPoint(h));
            }
            if alpha.apply(alpha.apply(h)) != h {
                return Err(MapError::AlphaNotInvolution(h));
            }
        }
        match root {
            None if n_half > 0 => return Err(MapError::RootMissing),
            Some(_) if n_half == 0 => return Err(MapError::RootOnEmptyMap),
            Some(r) if r >= n_half => {
                return Err(MapError::RootOutOfRange { root: r, n_half })
            }
            _ => {}
        }
        let map = RootedMap { sigma, alpha, root };
        if let Some(r) = map.root {
            let reached = map.reachable_from(r);
            if let Some(h) = reached.iter().position(|&b| !b) {
                return Err(MapError::NotConnected(h));
            }
        }
        Ok(map)
    }

    /// The empty map: no half-edges, one vertex, one face, genus zero.
    pub fn empty() -> RootedMap {
        RootedMap {
            sigma: Perm::identity(0),
            alpha: Perm::identity(0),
            root: None,
        }
    }

    fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n_half()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(h) = stack.pop() {
            for t in [self.sigma.apply(h), self.alpha.apply(h)] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// Number of half-edges (`2n`).
    pub fn n_half(&self) -> usize {
        self.sigma.size()
    }

    /// Number of edges (`n`).
    pub fn n_edges(&self) -> usize {
        self.n_half() / 2
    }

    /// The vertex rotation.
    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    /// The edge involution.
    pub fn alpha(&self) -> &Perm {
        &self.alpha
    }

    /// The root half-edge (`None` exactly for the empty map).
    pub fn root(&self) -> Option<usize> {
        self.root
    }

    /// The face permutation `phi = sigma ∘ alpha` (apply `alpha` first).
    pub fn face_perm(&self) -> Perm {
        self.sigma.compose(&self.alpha)
    }

    /// Vertices as the cycles of `sigma`, each starting at its minimum
    /// half-edge, sorted by those minima.  The empty map yields no cycles
    /// even though it counts as having one vertex.
    pub fn vertices(&self) -> Vec<Vec<usize>> {
        self.sigma.cycles()
    }

    /// For each half-edge, the index of its vertex in [`Self::vertices`].
    pub fn vertex_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.n_half()];
        for (v, cycle) in self.vertices().iter().enumerate() {
            for &h in cycle {
                ids[h] = v;
            }
        }
        ids
    }

    /// Number of vertices (the empty map has one by convention).
    pub fn vertex_count(&self) -> usize {
        if self.n_half() == 0 {
            1
        } else {
            self.sigma.cycle_count()
        }
    }

    /// Number of faces (the empty map has one by convention).
    pub fn face_count(&self) -> usize {
        if self.n_half() == 0 {
            1
        } else {
            self.face_perm().cycle_count()
        }
    }

    /// Genus from the Euler relation `v - e + f = 2 - 2g`.
    pub fn genus(&self) -> usize {
        let v = self.vertex_count();
        let e = self.n_edges();
        let f = self.face_count();
        let lhs = 2 + e;
        let rhs = v + f;
        debug_assert!(lhs >= rhs && (lhs - rhs) % 2 == 0, "Euler relation broke");
        (lhs - rhs) / 2
    }

    /// True when the map has exactly one face.
    pub fn is_unicellular(&self) -> bool {
        self.face_count() == 1
    }

    /// True when the map is a plane tree (one face, genus zero).  The empty
    /// map is a plane tree.
    pub fn is_plane_tree(&self) -> bool {
        self.vertex_count() == self.n_edges() + 1 && self.face_count() == 1
    }

    /// The dual map `(phi, alpha)` with the same root.  Vertices of the dual
    /// are faces of the original and vice versa; the genus is unchanged.
    pub fn dual(&self) -> RootedMap {
        RootedMap {
            sigma: self.face_perm(),
            alpha: self.alpha.clone(),
            root: self.root,
        }
    }

    /// Applies a relabelling `lam` (old half-edge to new half-edge) to the
    /// whole map.  `lam` must be a bijection of the ground set.
    pub fn relabelled(&self, lam: &[usize]) -> RootedMap {
        assert_eq!(lam.len(), self.n_half());
        let n = self.n_half();
        let mut sigma = vec![0; n];
        let mut alpha = vec![0; n];
        for h in 0..n {
            sigma[lam[h]] = lam[self.sigma.apply(h)];
            alpha[lam[h]] = lam[self.alpha.apply(h)];
        }
        RootedMap {
            sigma: Perm::from_images(sigma).expect("relabelling must be a bijection"),
            alpha: Perm::from_images(alpha).expect("relabelling must be a bijection"),
            root: self.root.map(|r| lam[r]),
        }
    }

    /// Canonical relabelling: breadth-first from the root, each popped
    /// half-edge discovering first its `sigma`-image and then its
    /// `alpha`-image, with fresh labels handed out in discovery order.
    ///
    /// Returns the relabelled map (root 0) together with the relabelling
    /// array (old label to new label).  Because rooted maps have no
    /// non-trivial automorphisms, two rooted maps are isomorphic if and only
    /// if their canonical forms are equal.
    pub fn canonical_form(&self) -> (RootedMap, Vec<usize>) {
        let n = self.n_half();
        let mut new_of_old = vec![usize::MAX; n];
        let mut old_of_new: Vec<usize> = Vec::with_capacity(n);
        if let Some(r) = self.root {
            new_of_old[r] = 0;
            old_of_new.push(r);
            let mut next = 0;
            while next < old_of_new.len() {
                let h = old_of_new[next];
                next += 1;
                for t in [self.sigma.apply(h), self.alpha.apply(h)] {
                    if new_of_old[t] == usize::MAX {
                        new_of_old[t] = old_of_new.len();
                        old_of_new.push(t);
                    }
                }
            }
            debug_assert_eq!(old_of_new.len(), n, "map was validated transitive");
        }
        (self.relabelled(&new_of_old), new_of_old)
    }

    /// Byte key of the canonical form: the image arrays of the canonical
    /// `sigma` and `alpha`.  Equal keys characterise isomorphic rooted maps.
    ///
    /// Panics for maps with 128 or more edges, far beyond what exhaustive
    /// enumeration can visit.
    pub fn canonical_key(&self) -> Vec<u8> {
        let (canon, _) = self.canonical_form();
        encode_key(&canon, &[])
    }

    /// True when the two rooted maps are isomorphic (as rooted maps).
    pub fn is_isomorphic(&self, other: &RootedMap) -> bool {
        self.canonical_key() == other.canonical_key()
    }

    /// Vertex bipartition by parity, root vertex coloured `false` (white).
    ///
    /// Returns one colour per vertex (indexed as in [`Self::vertices`]), or
    /// an error naming a half-edge on an odd cycle.  The empty map is
    /// bipartite with no recorded colours.
    pub fn bipartition(&self) -> Result<Vec<bool>> {
        let vertices = self.vertices();
        let ids = self.vertex_ids();
        let mut colour: Vec<Option<bool>> = vec![None; vertices.len()];
        let Some(r) = self.root else {
            return Ok(Vec::new());
        };
        let mut queue = std::collections::VecDeque::new();
        colour[ids[r]] = Some(false);
        queue.push_back(ids[r]);
        while let Some(v) = queue.pop_front() {
            let c = colour[v].unwrap();
            for &h in &vertices[v] {
                let w = ids[self.alpha.apply(h)];
                match colour[w] {
                    None => {
                        colour[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return Err(MapError::NotBipartite(h)),
                    Some(_) => {}
                }
            }
        }
        Ok(colour.into_iter().map(|c| c.expect("map is connected")).collect())
    }

    /// Breadth-first distance from the root vertex to every vertex
    /// (indexed as in [`Self::vertices`]).
    pub fn vertex_distances(&self) -> Vec<usize> {
        let vertices = self.vertices();
        let ids = self.vertex_ids();
        let mut dist = vec![usize::MAX; vertices.len()];
        let Some(r) = self.root else {
            return Vec::new();
        };
        let mut queue = std::collections::VecDeque::new();
        dist[ids[r]] = 0;
        queue.push_back(ids[r]);
        while let Some(v) = queue.pop_front() {
            for &h in &vertices[v] {
                let w = ids[self.alpha.apply(h)];
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        debug_assert!(dist.iter().all(|&d| d != usize::MAX));
        dist
    }
}

impl fmt::Debug for RootedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RootedMap[sigma={} alpha={} root={:?}]",
            self.sigma, self.alpha, self.root
        )
    }
}

/// Rebuilds the rooted map (and mask, when one was encoded) from a
/// comparison key produced by [`encode_key`] on a canonical form.
pub(crate) fn decode_key(key: &[u8]) -> (RootedMap, Vec<bool>) {
    let n = key[0] as usize;
    let sigma = Perm::from_images(key[1..1 + n].iter().map(|&b| b as usize).collect())
        .expect("keys encode valid rotations");
    let alpha =
        Perm::from_images(key[1 + n..1 + 2 * n].iter().map(|&b| b as usize).collect())
            .expect("keys encode valid involutions");
    let root = if n > 0 { Some(0) } else { None };
    let mask = key[1 + 2 * n..].iter().map(|&b| b != 0).collect();
    let map = RootedMap::new(sigma, alpha, root).expect("keys encode valid maps");
    (map, mask)
}

/// Serialises a map plus an optional half-edge mask into a comparison key.
pub(crate) fn encode_key(map: &RootedMap, mask: &[bool]) -> Vec<u8> {
    let n = map.n_half();
    assert!(n < 256, "comparison keys support maps below 128 edges");
    let mut key = Vec::with_capacity(2 * n + mask.len() + 1);
    key.push(n as u8);
    key.extend(map.sigma.images().iter().map(|&x| x as u8));
    key.extend(map.alpha.images().iter().map(|&x| x as u8));
    key.extend(mask.iter().map(|&b| b as u8));
    key
}

/// A pair of permutations with the map axioms except transitivity: a
/// disjoint union of maps on the half-edges of its *carrier* subset.
///
/// Both permutations are materialised on the full ground set and fix every
/// half-edge outside the carrier, so pseudo-maps obtained by restriction
/// compose freely with permutations of the ambient map.
#[derive(Clone, PartialEq, Eq)]
pub struct PseudoMap {
    carrier: Vec<bool>,
    sigma: Perm,
    alpha: Perm,
    root: Option<usize>,
}

impl PseudoMap {
    /// Builds a pseudo-map, validating that the permutations stabilise the
    /// carrier, fix its complement, and that `alpha` restricted to the
    /// carrier is a fixed-point-free involution.  The root, if present, must
    /// lie in the carrier.
    pub fn new(
        sigma: Perm,
        alpha: Perm,
        root: Option<usize>,
        carrier: Vec<bool>,
    ) -> Result<PseudoMap> {
        let n = carrier.len();
        if sigma.size() != n || alpha.size() != n {
            return Err(MapError::MismatchedSizes {
                sigma: sigma.size(),
                alpha: alpha.size(),
            });
        }
        for h in 0..n {
            if carrier[h] {
                if !carrier[sigma.apply(h)] || !carrier[alpha.apply(h)] {
                    return Err(MapError::NotAlphaStable(h));
                }
                if alpha.apply(h) == h {
                    return Err(MapError::AlphaHasFixedPoint(h));
                }
                if alpha.apply(alpha.apply(h)) != h {
                    return Err(MapError::AlphaNotInvolution(h));
                }
            } else if sigma.apply(h) != h || alpha.apply(h) != h {
                return Err(MapError::NotAlphaStable(h));
            }
        }
        if let Some(r) = root {
            if r >= n || !carrier[r] {
                return Err(MapError::RootOutOfRange { root: r, n_half: n });
            }
        }
        Ok(PseudoMap {
            carrier,
            sigma,
            alpha,
            root,
        })
    }

    /// The carrier mask.
    pub fn carrier(&self) -> &[bool] {
        &self.carrier
    }

    /// Number of half-edges in the carrier.
    pub fn carrier_size(&self) -> usize {
        self.carrier.iter().filter(|&&b| b).count()
    }

    /// The vertex rotation (identity off the carrier).
    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    /// The edge involution (identity off the carrier).
    pub fn alpha(&self) -> &Perm {
        &self.alpha
    }

    /// The root half-edge, if any.
    pub fn root(&self) -> Option<usize> {
        self.root
    }

    /// Connected components of the carrier under `sigma` and `alpha`,
    /// each sorted ascending, ordered by their minima.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.carrier.len();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if !self.carrier[start] || seen[start] {
                continue;
            }
            let mut component = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(h) = stack.pop() {
                component.push(h);
                for t in [self.sigma.apply(h), self.alpha.apply(h)] {
                    if !seen[t] {
                        seen[t] = true;
                        stack.push(t);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// True when the carrier is empty or forms a single component.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Number of edges in the carrier.
    pub fn edge_count(&self) -> usize {
        self.carrier_size() / 2
    }

    /// Number of vertices; an empty carrier counts as one vertex.
    pub fn vertex_count(&self) -> usize {
        if self.carrier_size() == 0 {
            1
        } else {
            self.sigma.cycles_within(&self.carrier).len()
        }
    }

    /// Number of faces; an empty carrier counts as one face.
    pub fn face_count(&self) -> usize {
        if self.carrier_size() == 0 {
            1
        } else {
            self.sigma
                .compose(&self.alpha)
                .cycles_within(&self.carrier)
                .len()
        }
    }

    /// True when there is exactly one face.
    pub fn is_unicellular(&self) -> bool {
        self.face_count() == 1
    }

    /// Genus from the Euler relation.  Errors when the pseudo-map is
    /// disconnected (the relation only applies to maps).
    pub fn genus(&self) -> Result<usize> {
        let components = self.components();
        if components.len() > 1 {
            return Err(MapError::NotConnected(components[1][0]));
        }
        let v = self.vertex_count();
        let e = self.edge_count();
        let f = self.face_count();
        let lhs = 2 + e;
        let rhs = v + f;
        debug_assert!(lhs >= rhs && (lhs - rhs) % 2 == 0, "Euler relation broke");
        Ok((lhs - rhs) / 2)
    }

    /// Compacts a connected pseudo-map to a rooted map by relabelling the
    /// carrier, in increasing order, onto `{0, …, k-1}`.
    ///
    /// Errors when disconnected, or when the carrier is non-empty but no
    /// root is present.
    pub fn compact(&self) -> Result<RootedMap> {
        let components = self.components();
        if components.len() > 1 {
            return Err(MapError::NotConnected(components[1][0]));
        }
        let carrier_elems: Vec<usize> = (0..self.carrier.len())
            .filter(|&h| self.carrier[h])
            .collect();
        if carrier_elems.is_empty() {
            return Ok(RootedMap::empty());
        }
        let root = self.root.ok_or(MapError::RootMissing)?;
        let mut new_of_old = vec![usize::MAX; self.carrier.len()];
        for (new, &old) in carrier_elems.iter().enumerate() {
            new_of_old[old] = new;
        }
        let k = carrier_elems.len();
        let mut sigma = vec![0; k];
        let mut alpha = vec![0; k];
        for &old in &carrier_elems {
            sigma[new_of_old[old]] = new_of_old[self.sigma.apply(old)];
            alpha[new_of_old[old]] = new_of_old[self.alpha.apply(old)];
        }
        RootedMap::new(
            Perm::from_images(sigma).expect("carrier-stable restriction"),
            Perm::from_images(alpha).expect("carrier-stable restriction"),
            Some(new_of_old[root]),
        )
    }
}

impl fmt::Debug for PseudoMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let carrier: Vec<usize> = (0..self.carrier.len())
            .filter(|&h| self.carrier[h])
            .collect();
        write!(
            f,
            "PseudoMap[carrier={:?} sigma={} alpha={} root={:?}]",
            carrier, self.sigma, self.alpha, self.root
        )
    }
}

/// A rooted map together with an `alpha`-stable subset `S` of half-edges.
#[derive(Clone, PartialEq, Eq)]
pub struct SpannedMap {
    map: RootedMap,
    in_s: Vec<bool>,
}

impl SpannedMap {
    /// Builds a spanned map from an explicit list of half-edges, which must
    /// be in range, duplicate-free and closed under `alpha`.
    pub fn new(map: RootedMap, s: &[usize]) -> Result<SpannedMap> {
        let mut in_s = vec![false; map.n_half()];
        for &h in s {
            if h >= map.n_half() {
                return Err(MapError::HalfEdgeOutOfRange(h));
            }
            if in_s[h] {
                return Err(MapError::DuplicateCycleEntry(h));
            }
            in_s[h] = true;
        }
        SpannedMap::from_mask(map, in_s)
    }

    /// Builds a spanned map from a membership mask.
    pub fn from_mask(map: RootedMap, in_s: Vec<bool>) -> Result<SpannedMap> {
        assert_eq!(in_s.len(), map.n_half());
        for h in 0..map.n_half() {
            if in_s[h] && !in_s[map.alpha().apply(h)] {
                return Err(MapError::NotAlphaStable(h));
            }
        }
        Ok(SpannedMap { map, in_s })
    }

    /// The underlying rooted map.
    pub fn map(&self) -> &RootedMap {
        &self.map
    }

    /// Membership mask of `S`.
    pub fn mask(&self) -> &[bool] {
        &self.in_s
    }

    /// True when half-edge `h` belongs to `S`.
    pub fn contains(&self, h: usize) -> bool {
        self.in_s[h]
    }

    /// The half-edges of `S` in increasing order.
    pub fn s_halves(&self) -> Vec<usize> {
        (0..self.map.n_half()).filter(|&h| self.in_s[h]).collect()
    }

    /// Number of edges in `S`.
    pub fn s_edges(&self) -> usize {
        self.s_halves().len() / 2
    }

    /// The motion permutation: the face permutation of the map on `S`, the
    /// vertex rotation off `S`.
    ///
    /// It is always a permutation because `S` is `alpha`-stable, and it walks
    /// the face contour of the submap and the face contour of the
    /// complement's dual submap alternately.
    pub fn motion(&self) -> Perm {
        let phi = self.map.face_perm();
        let images = (0..self.map.n_half())
            .map(|h| {
                if self.in_s[h] {
                    phi.apply(h)
                } else {
                    self.map.sigma().apply(h)
                }
            })
            .collect();
        Perm::from_images(images).expect("hybrid of sigma and phi on an alpha-stable set")
    }

    /// The root of the submap: the first half-edge of `S` on the motion walk
    /// from the map root (the root itself if it lies in `S`).  `None` when
    /// `S` is empty or the map is empty.
    pub fn submap_root(&self) -> Option<usize> {
        let r = self.map.root()?;
        let theta = self.motion();
        let mut h = r;
        for _ in 0..=self.map.n_half() {
            if self.in_s[h] {
                return Some(h);
            }
            h = theta.apply(h);
        }
        None
    }

    /// The submap induced by `S`: restrictions of `sigma` and `alpha`,
    /// carried by `S`, rooted at [`Self::submap_root`].
    pub fn submap(&self) -> PseudoMap {
        PseudoMap::new(
            self.map.sigma().restricted_to(&self.in_s),
            self.map.alpha().restricted_to(&self.in_s),
            self.submap_root(),
            self.in_s.clone(),
        )
        .expect("restriction to an alpha-stable set is a pseudo-map")
    }

    /// The dual spanned map: the dual map together with the complement
    /// subset.  Its motion permutation coincides with the motion
    /// permutation of `self`.
    pub fn dual_spanned(&self) -> SpannedMap {
        let complement: Vec<bool> = self.in_s.iter().map(|&b| !b).collect();
        SpannedMap {
            map: self.map.dual(),
            in_s: complement,
        }
    }

    /// True when the submap is *connecting*: it touches every vertex and is
    /// connected.  An empty `S` is connecting exactly when the map has a
    /// single vertex.
    pub fn is_connecting(&self) -> bool {
        let s = self.s_halves();
        if s.is_empty() {
            return self.map.vertex_count() == 1;
        }
        // every vertex carries an S-half-edge
        let ids = self.map.vertex_ids();
        let mut touched = vec![false; self.map.vertex_count()];
        for &h in &s {
            touched[ids[h]] = true;
        }
        if touched.iter().any(|&t| !t) {
            return false;
        }
        self.submap().is_connected()
    }

    /// True when the spanned map is covered: the submap is connecting and
    /// has a single face.  Equivalently (and verified in the test suite),
    /// the motion permutation is a single cycle through all half-edges.
    pub fn is_covered(&self) -> bool {
        self.is_connecting() && self.submap().is_unicellular()
    }

    /// Comparison key: canonical key of the map plus the transported mask.
    pub fn canonical_key(&self) -> Vec<u8> {
        let (canon, lam) = self.map.canonical_form();
        let mut mask = vec![false; self.map.n_half()];
        for h in 0..self.map.n_half() {
            mask[lam[h]] = self.in_s[h];
        }
        encode_key(&canon, &mask)
    }
}

impl fmt::Debug for SpannedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpannedMap[{:?} S={:?}]", self.map, self.s_halves())
    }
}

/// A spanned map whose motion walk is a single cycle: the submap spans and
/// connects all vertices and has exactly one face.
#[derive(Clone, PartialEq, Eq)]
pub struct CoveredMap {
    inner: SpannedMap,
}

impl CoveredMap {
    /// Validates that the spanned map is covered.
    pub fn new(inner: SpannedMap) -> Result<CoveredMap> {
        if !inner.is_covered() {
            // Witness: a half-edge the motion walk from the root misses, or
            // half-edge 0 if the walk is somehow cyclic anyway.
            let witness = match inner.map().root() {
                Some(r) => {
                    let orbit = inner.motion().orbit(r);
                    let mut seen = vec![false; inner.map().n_half()];
                    for &h in &orbit {
                        seen[h] = true;
                    }
                    seen.iter().position(|&b| !b).unwrap_or(0)
                }
                None => 0,
            };
            return Err(MapError::NotCovered(witness));
        }
        Ok(CoveredMap { inner })
    }

    /// The underlying spanned map.
    pub fn spanned(&self) -> &SpannedMap {
        &self.inner
    }

    /// The underlying rooted map.
    pub fn map(&self) -> &RootedMap {
        self.inner.map()
    }

    /// The motion permutation (a single cycle).
    pub fn motion(&self) -> Perm {
        self.inner.motion()
    }

    /// Comparison key, delegated to the spanned map.
    pub fn canonical_key(&self) -> Vec<u8> {
        self.inner.canonical_key()
    }
}

impl fmt::Debug for CoveredMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoveredMap[{:?}]", self.inner)
    }
}

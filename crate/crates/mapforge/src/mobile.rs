//! Code encodings of plane trees and mobile-based encodings of tree/mobile
//! pairs.
//!
//! A plane tree with `n` edges is determined by either of two integer
//! sequences of length `n + 1`, both reading the vertices in counterclockwise
//! order of first appearance around the tree:
//!
//! * its **height code** `c_0 … c_n`, the distances of the vertices from the
//!   root vertex, and
//! * its **degree code** `d_0 … d_n`, the numbers of children of the
//!   vertices (a Łukasiewicz word).
//!
//! Writing either code into the white corners of the mobile of a
//! [`TreeMobilePair`] yields two self-contained encodings of the pair — a
//! corner-labelled mobile and a blossoming mobile — and both can be folded
//! directly back into the oriented map, without rebuilding the tree first.
//! Specialising the labelled encoding to geodesic orientations of bipartite
//! maps gives the classical bijection with well-labelled mobiles: labels are
//! constant around each white vertex and equal the graph distance from the
//! root vertex.

use crate::cmap::RootedMap;
use crate::error::MapError;
use crate::fold::{
    lambda, restrict_and_truncate, white_corner_cycle, TreeMobilePair,
};
use crate::orient::{geodesic_orientation, OrientedMap};
use crate::perm::Perm;
use crate::Result;
use std::fmt;

/// The height code of a plane tree: vertex heights in counterclockwise
/// appearance order.  Starts at 0 and afterwards stays positive, rising by
/// at most one per step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightCode {
    c: Vec<usize>,
}

impl HeightCode {
    /// Validates a height sequence.
    ///
    /// Errors name the position of the first violated condition.
    pub fn new(c: Vec<usize>) -> Result<HeightCode> {
        if c.is_empty() {
            return Err(MapError::BadCode(
                "a height code has at least one entry".into(),
            ));
        }
        if c[0] != 0 {
            return Err(MapError::BadCode(format!(
                "height code must start at 0, found {} at position 0",
                c[0]
            )));
        }
        for j in 1..c.len() {
            if c[j] == 0 || c[j] > c[j - 1] + 1 {
                return Err(MapError::BadCode(format!(
                    "height {} at position {} must lie in 1..={}",
                    c[j],
                    j,
                    c[j - 1] + 1
                )));
            }
        }
        Ok(HeightCode { c })
    }

    /// The height entries `c_0 … c_n`.
    pub fn values(&self) -> &[usize] {
        &self.c
    }

    /// Number of edges of the encoded tree (entries minus one).
    pub fn n_edges(&self) -> usize {
        self.c.len() - 1
    }

    /// Parses digits (`"0123212"`) or whitespace/comma separated numbers.
    pub fn parse(text: &str) -> Result<HeightCode> {
        HeightCode::new(parse_code_text(text)?)
    }
}

impl fmt::Display for HeightCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_code(&self.c, f)
    }
}

/// The degree code of a plane tree: child counts in counterclockwise
/// appearance order.  The partial sums of `d_j - 1` stay non-negative until
/// the final total of -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCode {
    d: Vec<usize>,
}

impl DegreeCode {
    /// Validates a child-count sequence.
    ///
    /// Errors name the position of the first violated condition.
    pub fn new(d: Vec<usize>) -> Result<DegreeCode> {
        if d.is_empty() {
            return Err(MapError::BadCode(
                "a degree code has at least one entry".into(),
            ));
        }
        let mut sum: isize = 0;
        for (j, &dj) in d.iter().enumerate() {
            sum += dj as isize - 1;
            if j + 1 < d.len() && sum < 0 {
                return Err(MapError::BadCode(format!(
                    "degree code partial sum drops below zero at position {j}"
                )));
            }
        }
        if sum != -1 {
            return Err(MapError::BadCode(format!(
                "degree code entries must total one less than their count, \
                 found total {}",
                sum + d.len() as isize
            )));
        }
        Ok(DegreeCode { d })
    }

    /// The child counts `d_0 … d_n`.
    pub fn values(&self) -> &[usize] {
        &self.d
    }

    /// Number of edges of the encoded tree (entries minus one).
    pub fn n_edges(&self) -> usize {
        self.d.len() - 1
    }

    /// Parses digits (`"2210010"`) or whitespace/comma separated numbers.
    pub fn parse(text: &str) -> Result<DegreeCode> {
        DegreeCode::new(parse_code_text(text)?)
    }
}

impl fmt::Display for DegreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_code(&self.d, f)
    }
}

/// Shared display for the two code types: a digit string when every entry
/// is a single digit, space-separated numbers otherwise.
fn fmt_code(values: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if values.iter().all(|&v| v < 10) {
        for v in values {
            write!(f, "{v}")?;
        }
        Ok(())
    } else {
        let words: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", words.join(" "))
    }
}

/// Parses either a digit string or whitespace/comma separated numbers.
fn parse_code_text(text: &str) -> Result<Vec<usize>> {
    let trimmed = text.trim();
    let has_separators =
        trimmed.contains(|ch: char| ch.is_whitespace() || ch == ',');
    if has_separators {
        trimmed
            .split(|ch: char| ch.is_whitespace() || ch == ',')
            .filter(|w| !w.is_empty())
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| MapError::BadCode(format!("bad number {w:?}")))
            })
            .collect()
    } else {
        trimmed
            .chars()
            .map(|ch| {
                ch.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| MapError::BadCode(format!("bad digit {ch:?}")))
            })
            .collect()
    }
}

/// The vertices of a plane tree in counterclockwise order of first
/// appearance around the tree, as vertex ids of [`RootedMap::vertices`].
fn appearance_order(tree: &RootedMap) -> Vec<usize> {
    let ids = tree.vertex_ids();
    let mut order = Vec::with_capacity(tree.n_edges() + 1);
    let mut seen = vec![false; tree.vertex_count()];
    let Some(root) = tree.root() else {
        return vec![];
    };
    let phi = tree.face_perm();
    let mut h = root;
    loop {
        let v = ids[h];
        if !seen[v] {
            seen[v] = true;
            order.push(v);
        }
        h = phi.apply(h);
        if h == root {
            break;
        }
    }
    debug_assert_eq!(order.len(), tree.vertex_count());
    order
}

/// Reads the height code of a plane tree.
pub fn height_code(tree: &RootedMap) -> Result<HeightCode> {
    ensure_plane_tree(tree)?;
    if tree.n_half() == 0 {
        return HeightCode::new(vec![0]);
    }
    let dist = tree.vertex_distances();
    let heights: Vec<usize> =
        appearance_order(tree).into_iter().map(|v| dist[v]).collect();
    HeightCode::new(heights)
}

/// Reads the degree code of a plane tree.
pub fn degree_code(tree: &RootedMap) -> Result<DegreeCode> {
    ensure_plane_tree(tree)?;
    if tree.n_half() == 0 {
        return DegreeCode::new(vec![0]);
    }
    let vertices = tree.vertices();
    let root_vertex = tree.vertex_ids()[tree.root().expect("non-empty")];
    // every vertex except the root has exactly one half-edge towards its
    // parent, so the child count is the degree minus one
    let degrees: Vec<usize> = appearance_order(tree)
        .into_iter()
        .map(|v| vertices[v].len() - usize::from(v != root_vertex))
        .collect();
    DegreeCode::new(degrees)
}

fn ensure_plane_tree(tree: &RootedMap) -> Result<()> {
    if tree.is_plane_tree() {
        Ok(())
    } else {
        Err(MapError::NotAPlaneTree {
            v: tree.vertex_count(),
            e: tree.n_edges(),
            f: tree.face_count(),
        })
    }
}

/// Parent of each non-root vertex under the height-code rule: vertex `j`
/// hangs from the last earlier vertex one level up.
fn parents_from_heights(c: &[usize]) -> Vec<usize> {
    let mut last_at_height = vec![usize::MAX; c.len()];
    last_at_height[0] = 0;
    let mut parents = vec![0; c.len()];
    for (j, &cj) in c.iter().enumerate().skip(1) {
        parents[j] = last_at_height[cj - 1];
        debug_assert_ne!(parents[j], usize::MAX, "validated height code");
        last_at_height[cj] = j;
    }
    parents
}

/// Parent of each non-root vertex under the degree-code rule: vertex 0 is
/// pushed `d_0` times, then each new vertex pops its parent and pushes
/// itself once per child.
fn parents_from_degrees(d: &[usize]) -> Vec<usize> {
    let mut stack: Vec<usize> = Vec::new();
    let mut parents = vec![0; d.len()];
    for (j, &dj) in d.iter().enumerate() {
        if j > 0 {
            parents[j] = stack.pop().expect("validated degree code");
        }
        stack.extend(std::iter::repeat(j).take(dj));
    }
    debug_assert!(stack.is_empty(), "validated degree code");
    parents
}

/// Children lists, ascending, from a parent array (entry 0 ignored).
fn children_lists(parents: &[usize]) -> Vec<Vec<usize>> {
    let mut children = vec![Vec::new(); parents.len()];
    for (j, &p) in parents.iter().enumerate().skip(1) {
        children[p].push(j);
    }
    children
}

/// Builds the plane tree with the given children lists on the canonical
/// half-edge names: edge `j` gets half-edge `2(j-1)` at the parent and
/// `2(j-1) + 1` at the child, and each rotation lists the parent side first
/// and then the children in appearance order.
fn assemble_tree(children: &[Vec<usize>]) -> RootedMap {
    let n = children.len() - 1;
    if n == 0 {
        return RootedMap::empty();
    }
    let out_half = |j: usize| 2 * (j - 1);
    let in_half = |j: usize| 2 * (j - 1) + 1;
    let mut cycles: Vec<Vec<usize>> = Vec::with_capacity(n + 1);
    for (k, kids) in children.iter().enumerate() {
        let mut cycle = Vec::with_capacity(kids.len() + 1);
        if k > 0 {
            cycle.push(in_half(k));
        }
        cycle.extend(kids.iter().map(|&j| out_half(j)));
        cycles.push(cycle);
    }
    let sigma = Perm::from_cycles(2 * n, &cycles).expect("disjoint rotations");
    let alpha = crate::codes::twin_involution(2 * n);
    RootedMap::new(sigma, alpha, Some(0)).expect("code decodes to a tree")
}

/// Rebuilds the plane tree from its height code.
pub fn tree_from_height(code: &HeightCode) -> RootedMap {
    assemble_tree(&children_lists(&parents_from_heights(code.values())))
}

/// Rebuilds the plane tree from its degree code.
pub fn tree_from_degree(code: &DegreeCode) -> RootedMap {
    assemble_tree(&children_lists(&parents_from_degrees(code.values())))
}

/// A mobile with one non-negative label per white corner, the corners
/// listed in clockwise face order from the root corner.
///
/// The mobile must be a structurally valid mobile — unicellular, bipartite,
/// rooted at a white vertex — but the labels are only checked for length
/// here; whether they form a height code is the *well-corner-labelled*
/// property checked by the folding operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerLabelledMobile {
    mobile: RootedMap,
    labels: Vec<usize>,
}

impl CornerLabelledMobile {
    /// Validates the mobile shape and the label count.
    pub fn new(mobile: RootedMap, labels: Vec<usize>) -> Result<CornerLabelledMobile> {
        let corners = mobile_corners(&mobile)?;
        if labels.len() != corners.len() {
            return Err(MapError::BadLabels(format!(
                "expected one label per white corner ({}), found {}",
                corners.len(),
                labels.len()
            )));
        }
        Ok(CornerLabelledMobile { mobile, labels })
    }

    /// The underlying mobile.
    pub fn mobile(&self) -> &RootedMap {
        &self.mobile
    }

    /// The corner labels, clockwise from the root corner.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Whether the clockwise label sequence is a height code.
    pub fn is_well_corner_labelled(&self) -> bool {
        HeightCode::new(self.labels.clone()).is_ok()
    }
}

/// A mobile with a count of outgoing buds per white corner, the corners
/// listed in clockwise face order from the root corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlossomingMobile {
    mobile: RootedMap,
    buds: Vec<usize>,
}

impl BlossomingMobile {
    /// Validates the mobile shape and the bud count.
    pub fn new(mobile: RootedMap, buds: Vec<usize>) -> Result<BlossomingMobile> {
        let corners = mobile_corners(&mobile)?;
        if buds.len() != corners.len() {
            return Err(MapError::BadBuds(format!(
                "expected one bud count per white corner ({}), found {}",
                corners.len(),
                buds.len()
            )));
        }
        Ok(BlossomingMobile { mobile, buds })
    }

    /// The underlying mobile.
    pub fn mobile(&self) -> &RootedMap {
        &self.mobile
    }

    /// The bud counts, clockwise from the root corner.
    pub fn buds(&self) -> &[usize] {
        &self.buds
    }

    /// Whether the clockwise bud sequence is a degree code.
    pub fn is_balanced(&self) -> bool {
        DegreeCode::new(self.buds.clone()).is_ok()
    }
}

/// Checks a map is a structurally valid mobile — nonempty, unicellular,
/// bipartite, rooted white — and returns its white corner cycle.
fn mobile_corners(mobile: &RootedMap) -> Result<Vec<usize>> {
    if mobile.root().is_none() {
        return Err(MapError::RootMissing);
    }
    if !mobile.is_unicellular() {
        let root = mobile.root().expect("checked above");
        let witness = (0..mobile.n_half())
            .find(|&h| !mobile.face_perm().orbit(root).contains(&h))
            .unwrap_or(root);
        return Err(MapError::NotUnicellular(witness));
    }
    white_corner_cycle(mobile)
}

/// Relabels a mobile so the root becomes the second-highest half-edge and
/// its twin the highest, all other half-edges keeping their relative order.
/// Mobiles inside a [`TreeMobilePair`] are already in this position.
pub(crate) fn normalize_mobile(mobile: &RootedMap) -> RootedMap {
    let n_half = mobile.n_half();
    let root = mobile.root().expect("mobiles are rooted");
    let anti = mobile.alpha().apply(root);
    let mut lam = vec![usize::MAX; n_half];
    lam[root] = n_half - 2;
    lam[anti] = n_half - 1;
    let mut next = 0;
    for h in 0..n_half {
        if h != root && h != anti {
            lam[h] = next;
            next += 1;
        }
    }
    mobile.relabelled(&lam)
}

/// Writes the tree's height code into the mobile's white corners.
pub fn pair_to_labelled(pair: &TreeMobilePair) -> CornerLabelledMobile {
    let labels = height_code(pair.tree())
        .expect("pair trees are plane trees")
        .values()
        .to_vec();
    CornerLabelledMobile::new(pair.mobile().clone(), labels)
        .expect("pair mobiles have one white corner per tree vertex")
}

/// Writes the tree's degree code into the mobile's white corners.
pub fn pair_to_blossoming(pair: &TreeMobilePair) -> BlossomingMobile {
    let buds = degree_code(pair.tree())
        .expect("pair trees are plane trees")
        .values()
        .to_vec();
    BlossomingMobile::new(pair.mobile().clone(), buds)
        .expect("pair mobiles have one white corner per tree vertex")
}

/// Rebuilds the tree of a corner-labelled mobile from its labels (which
/// must form a height code) and pairs it with the mobile.
pub fn pair_from_labelled(clm: &CornerLabelledMobile) -> Result<TreeMobilePair> {
    let code = HeightCode::new(clm.labels.to_vec())
        .map_err(|e| MapError::BadLabels(e.to_string()))?;
    rebuild_pair(&clm.mobile, parents_from_heights(code.values()))
}

/// Rebuilds the tree of a blossoming mobile from its bud counts (which must
/// form a degree code) and pairs it with the mobile.
pub fn pair_from_blossoming(bm: &BlossomingMobile) -> Result<TreeMobilePair> {
    let code = DegreeCode::new(bm.buds.to_vec())
        .map_err(|e| MapError::BadBuds(e.to_string()))?;
    rebuild_pair(&bm.mobile, parents_from_degrees(code.values()))
}

/// Shared decoder: given the mobile and the tree's parent array in corner
/// order, rebuild the tree on the mobile's own half-edge names.
///
/// Corner `j` of the mobile is the child-side half-edge of tree edge `j`,
/// whose parent side is its twin; the rotation of each tree vertex lists
/// the parent side first and then the children in corner order.
fn rebuild_pair(mobile: &RootedMap, parents: Vec<usize>) -> Result<TreeMobilePair> {
    let mobile = normalize_mobile(mobile);
    let corners = mobile_corners(&mobile)?;
    if parents.len() != corners.len() {
        return Err(MapError::IncoherentPair(
            "code length must match the white corner count",
        ));
    }
    let n = corners.len() - 1;
    if n == 0 {
        return TreeMobilePair::new(RootedMap::empty(), mobile);
    }
    let children = children_lists(&parents);
    let alpha = mobile.alpha();
    let mut cycles: Vec<Vec<usize>> = Vec::with_capacity(n + 1);
    for (k, kids) in children.iter().enumerate() {
        let mut cycle = Vec::with_capacity(kids.len() + 1);
        if k > 0 {
            cycle.push(corners[k]);
        }
        cycle.extend(kids.iter().map(|&j| alpha.apply(corners[j])));
        cycles.push(cycle);
    }
    let tau = Perm::from_cycles(2 * n, &cycles)
        .map_err(|_| MapError::IncoherentPair("corners do not form a tree"))?;
    let tree_alpha = restrict_and_truncate(alpha, 2 * n);
    let tree = RootedMap::new(tau, tree_alpha, Some(alpha.apply(corners[1])))
        .map_err(|_| MapError::IncoherentPair("corners do not form a tree"))?;
    TreeMobilePair::new(tree, mobile)
}

/// Folds a well-corner-labelled mobile directly into its oriented map,
/// without materialising the tree: each corner with label `c > 0` attaches
/// to the last earlier corner with label `c - 1`, and the new edges are
/// spliced into the rotation around each white vertex just before the
/// corner half-edge.
pub fn fold_labelled(clm: &CornerLabelledMobile) -> Result<OrientedMap> {
    let code = HeightCode::new(clm.labels.to_vec())
        .map_err(|e| MapError::BadLabels(e.to_string()))?;
    fold_with_parents(&clm.mobile, parents_from_heights(code.values()))
}

/// Folds a balanced blossoming mobile directly into its oriented map: the
/// buds, read clockwise with one ingoing bud after each corner, match up as
/// a balanced parenthesis system, and each matched pair becomes an edge.
pub fn fold_blossoming(bm: &BlossomingMobile) -> Result<OrientedMap> {
    let code = DegreeCode::new(bm.buds.to_vec())
        .map_err(|e| MapError::BadBuds(e.to_string()))?;
    fold_with_parents(&bm.mobile, parents_from_degrees(code.values()))
}

/// Shared folding splice.  With `i` the mobile root, `o` its twin, corner
/// `j` written `y_j` and its twin `z_j`, the folded rotation is
///
/// * around white vertices: replace each mobile step `x -> w` by the block
///   `x -> z_{j_1} -> … -> z_{j_d} -> w`, where `j_1 < … < j_d` are the
///   children of `w`'s corner;
/// * `o` stays fixed and disappears with `i` when the two extra half-edges
///   are cut off; the root of the folded map is the successor of `i`.
///
/// The ingoing half-edges of the result are the corners `y_1, …, y_n`.
fn fold_with_parents(mobile: &RootedMap, parents: Vec<usize>) -> Result<OrientedMap> {
    let mobile = normalize_mobile(mobile);
    let corners = mobile_corners(&mobile)?;
    if parents.len() != corners.len() {
        return Err(MapError::BadLabels(
            "code length must match the white corner count".into(),
        ));
    }
    let n = corners.len() - 1;
    if n == 0 {
        let map = RootedMap::empty();
        return OrientedMap::new(map, &[]);
    }
    let children = children_lists(&parents);
    let n_half = mobile.n_half();
    let (i, o) = (n_half - 2, n_half - 1);
    let alpha = mobile.alpha();
    let pi_inv = mobile.sigma().inverse();

    let mut images = vec![usize::MAX; n_half];
    for (j, &w) in corners.iter().enumerate() {
        let kids = &children[j];
        let entry = kids
            .first()
            .map_or(w, |&first| alpha.apply(corners[first]));
        images[pi_inv.apply(w)] = entry;
        for (m, &kid) in kids.iter().enumerate() {
            let z = alpha.apply(corners[kid]);
            images[z] = match kids.get(m + 1) {
                Some(&next) => alpha.apply(corners[next]),
                None => w,
            };
        }
    }
    images[o] = o;
    debug_assert!(images.iter().all(|&x| x != usize::MAX));
    let sigma_ext =
        Perm::from_images(images).expect("folding splice is a bijection");

    let root = sigma_ext.apply(i);
    debug_assert!(root < 2 * n, "the folded root is an original half-edge");
    let sigma = restrict_and_truncate(&sigma_ext, 2 * n);
    let map_alpha = restrict_and_truncate(alpha, 2 * n);
    let map = RootedMap::new(sigma, map_alpha, Some(root))
        .map_err(|_| MapError::BadLabels("folded map is not connected".into()))?;
    OrientedMap::new(map, &corners[1..])
}

/// Unfolds a bipartite map along its geodesic orientation and labels every
/// white corner with the distance of its map vertex from the root vertex.
pub fn bdfg_forward(map: &RootedMap) -> Result<CornerLabelledMobile> {
    let om = geodesic_orientation(map)?;
    let pair = lambda(&om)?;
    let dist = map.vertex_distances();
    let ids = map.vertex_ids();
    let labels: Vec<usize> = pair
        .white_corner_cycle()
        .into_iter()
        .enumerate()
        .map(|(j, corner)| if j == 0 { 0 } else { dist[ids[corner]] })
        .collect();
    Ok(CornerLabelledMobile::new(pair.mobile().clone(), labels)
        .expect("unfolding produces one label slot per white corner"))
}

/// Folds a well-labelled mobile back into its bipartite map.
///
/// Well-labelled means: the labels are constant around each white vertex,
/// the root vertex has label 0 and carries only the root half-edge.  The
/// witness of a failure is a half-edge at an offending vertex.
pub fn bdfg_inverse(clm: &CornerLabelledMobile) -> Result<RootedMap> {
    let corners = mobile_corners(&clm.mobile)?;
    let ids = clm.mobile.vertex_ids();
    let mut vertex_label = vec![usize::MAX; clm.mobile.vertex_count()];
    for (&corner, &label) in corners.iter().zip(clm.labels.iter()) {
        let v = ids[corner];
        if vertex_label[v] == usize::MAX {
            vertex_label[v] = label;
        } else if vertex_label[v] != label {
            return Err(MapError::NotWellLabelled(corner));
        }
    }
    let root = clm.mobile.root().expect("mobiles are rooted");
    if clm.mobile.sigma().apply(root) != root {
        return Err(MapError::NotWellLabelled(root));
    }
    let om = fold_labelled(clm)?;
    Ok(om.map().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmap::{CoveredMap, SpannedMap};
    use crate::fold::{omega, psi};
    use crate::orient::{delta, rightmost_bfs_tree};

    fn covered(map: RootedMap, s: &[usize]) -> CoveredMap {
        CoveredMap::new(SpannedMap::new(map, s).unwrap()).unwrap()
    }

    fn link() -> RootedMap {
        RootedMap::new(
            Perm::identity(2),
            Perm::transposition(2, 0, 1),
            Some(0),
        )
        .unwrap()
    }

    fn loop_map() -> RootedMap {
        RootedMap::new(
            Perm::from_cycles(2, &[vec![0, 1]]).unwrap(),
            Perm::transposition(2, 0, 1),
            Some(0),
        )
        .unwrap()
    }

    /// The seven-vertex tree with height code 0123212 and degree code
    /// 2210010.
    #[test]
    fn worked_tree_codes() {
        let height = HeightCode::parse("0123212").unwrap();
        let tree = tree_from_height(&height);
        assert!(tree.is_plane_tree());
        assert_eq!(tree.n_edges(), 6);
        assert_eq!(height_code(&tree).unwrap(), height);
        let degree = degree_code(&tree).unwrap();
        assert_eq!(degree, DegreeCode::parse("2210010").unwrap());
        assert_eq!(tree_from_degree(&degree), tree);
        assert_eq!(height.to_string(), "0123212");
        assert_eq!(degree.to_string(), "2210010");
    }

    #[test]
    fn single_vertex_codes() {
        assert_eq!(height_code(&RootedMap::empty()).unwrap().values(), &[0]);
        assert_eq!(degree_code(&RootedMap::empty()).unwrap().values(), &[0]);
        assert_eq!(
            tree_from_height(&HeightCode::parse("0").unwrap()),
            RootedMap::empty()
        );
        assert_eq!(
            tree_from_degree(&DegreeCode::parse("0").unwrap()),
            RootedMap::empty()
        );
    }

    #[test]
    fn code_validation_rejects_bad_sequences() {
        assert!(matches!(
            HeightCode::new(vec![]),
            Err(MapError::BadCode(_))
        ));
        assert!(matches!(
            HeightCode::new(vec![1]),
            Err(MapError::BadCode(_))
        ));
        assert!(matches!(
            HeightCode::new(vec![0, 2]),
            Err(MapError::BadCode(_))
        ));
        assert!(matches!(
            HeightCode::new(vec![0, 1, 0]),
            Err(MapError::BadCode(_))
        ));
        assert!(HeightCode::new(vec![0, 1, 2, 1, 1]).is_ok());

        assert!(matches!(
            DegreeCode::new(vec![]),
            Err(MapError::BadCode(_))
        ));
        assert!(matches!(
            DegreeCode::new(vec![1]),
            Err(MapError::BadCode(_))
        ));
        assert!(matches!(
            DegreeCode::new(vec![0, 1]),
            Err(MapError::BadCode(_))
        ));
        assert!(matches!(
            DegreeCode::new(vec![2, 0]),
            Err(MapError::BadCode(_))
        ));
        assert!(matches!(
            DegreeCode::new(vec![2, 1, 0, 0, 0]),
            Err(MapError::BadCode(_))
        ));
        assert!(DegreeCode::new(vec![2, 1, 0, 0]).is_ok());
    }

    /// All height codes of a given length, by backtracking.
    fn all_height_codes(n: usize) -> Vec<HeightCode> {
        fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<HeightCode>) {
            if prefix.len() == n + 1 {
                out.push(HeightCode::new(prefix.clone()).unwrap());
                return;
            }
            let top = prefix.last().copied().unwrap();
            for c in 1..=top + 1 {
                prefix.push(c);
                extend(prefix, n, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(&mut vec![0], n, &mut out);
        out
    }

    #[test]
    fn codes_are_inverse_bijections_with_plane_trees() {
        let catalan = [1usize, 1, 2, 5, 14];
        for n in 0..=4 {
            let codes = all_height_codes(n);
            assert_eq!(codes.len(), catalan[n]);
            let mut keys = std::collections::HashSet::new();
            for code in &codes {
                let tree = tree_from_height(code);
                assert!(tree.is_plane_tree());
                assert_eq!(tree.n_edges(), n);
                assert_eq!(&height_code(&tree).unwrap(), code);
                let degree = degree_code(&tree).unwrap();
                assert_eq!(tree_from_degree(&degree), tree);
                assert!(keys.insert(tree.canonical_key()));
            }
        }
    }

    #[test]
    fn one_edge_pair_carries_labels_zero_one() {
        let pair = psi(&covered(link(), &[0, 1]));
        let labelled = pair_to_labelled(&pair);
        assert_eq!(labelled.labels(), &[0, 1]);
        assert!(labelled.is_well_corner_labelled());
        let back = pair_from_labelled(&labelled).unwrap();
        assert_eq!(back.tree(), pair.tree());
        assert_eq!(back.mobile(), pair.mobile());
    }

    #[test]
    fn triple_encoding_round_trips_on_fixtures() {
        let nine_edge = crate::codes::CodeShuffle::parse(
            "a1 b1 a2 b2 A2 b3 A1 B1 a3 b4 a4 a5 B3 A5 B2 A4 B4 A3",
        )
        .unwrap()
        .to_covered();
        let pairs = vec![
            psi(&covered(link(), &[0, 1])),
            psi(&covered(loop_map(), &[])),
            psi(&nine_edge),
            psi(&covered(RootedMap::empty(), &[])),
        ];
        for pair in pairs {
            let labelled = pair_to_labelled(&pair);
            let from_labels = pair_from_labelled(&labelled).unwrap();
            assert_eq!(from_labels.tree(), pair.tree());
            assert_eq!(from_labels.mobile(), pair.mobile());

            let blossoming = pair_to_blossoming(&pair);
            assert!(blossoming.is_balanced());
            let from_buds = pair_from_blossoming(&blossoming).unwrap();
            assert_eq!(from_buds.tree(), pair.tree());
            assert_eq!(from_buds.mobile(), pair.mobile());

            // the two codes describe the same tree
            assert_eq!(
                tree_from_height(&HeightCode::new(labelled.labels().to_vec()).unwrap()),
                tree_from_degree(&DegreeCode::new(blossoming.buds().to_vec()).unwrap()),
            );
        }
    }

    #[test]
    fn direct_folds_agree_with_pair_folding() {
        let nine_edge = crate::codes::CodeShuffle::parse(
            "a1 b1 a2 b2 A2 b3 A1 B1 a3 b4 a4 a5 B3 A5 B2 A4 B4 A3",
        )
        .unwrap()
        .to_covered();
        let pairs = vec![
            psi(&covered(link(), &[0, 1])),
            psi(&covered(loop_map(), &[])),
            psi(&nine_edge),
            psi(&covered(RootedMap::empty(), &[])),
        ];
        for pair in pairs {
            let expected = omega(&pair);
            let via_labels = fold_labelled(&pair_to_labelled(&pair)).unwrap();
            assert_eq!(via_labels.map(), expected.map());
            assert_eq!(via_labels.mask(), expected.mask());
            let via_buds = fold_blossoming(&pair_to_blossoming(&pair)).unwrap();
            assert_eq!(via_buds.map(), expected.map());
            assert_eq!(via_buds.mask(), expected.mask());
        }
    }

    #[test]
    fn one_edge_labelled_mobile_folds_to_the_one_edge_map() {
        let cm = covered(link(), &[0, 1]);
        let om = delta(&cm);
        let labelled = pair_to_labelled(&psi(&cm));
        let folded = fold_labelled(&labelled).unwrap();
        assert_eq!(folded.map(), om.map());
        assert_eq!(folded.mask(), om.mask());
    }

    #[test]
    fn geodesic_unfolding_is_well_labelled_and_invertible() {
        // path on three vertices rooted at an end
        let path = RootedMap::new(
            Perm::from_cycles(4, &[vec![1, 2]]).unwrap(),
            Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
            Some(0),
        )
        .unwrap();
        // double edge between two vertices
        let banana = RootedMap::new(
            Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
            Some(0),
        )
        .unwrap();
        for map in [link(), path.clone(), banana] {
            let labelled = bdfg_forward(&map).unwrap();
            // labels constant per white vertex
            let ids = labelled.mobile().vertex_ids();
            let corners = white_corner_cycle(labelled.mobile()).unwrap();
            let mut per_vertex = std::collections::HashMap::new();
            for (&corner, &label) in corners.iter().zip(labelled.labels()) {
                assert_eq!(
                    *per_vertex.entry(ids[corner]).or_insert(label),
                    label
                );
            }
            // and they coincide with the heights in the rebuilt tree
            let pair = pair_from_labelled(&labelled).unwrap();
            assert_eq!(
                height_code(pair.tree()).unwrap().values(),
                labelled.labels()
            );
            let back = bdfg_inverse(&labelled).unwrap();
            assert_eq!(&back, &map);
        }
        assert_eq!(
            bdfg_forward(&path).unwrap().labels(),
            &[0, 1, 2],
            "path distances are 0, 1, 2"
        );
    }

    #[test]
    fn bdfg_rejects_inconsistent_labels() {
        let banana = RootedMap::new(
            Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
            Some(0),
        )
        .unwrap();
        let labelled = bdfg_forward(&banana).unwrap();
        assert_eq!(labelled.labels(), &[0, 1, 1]);
        let tampered =
            CornerLabelledMobile::new(labelled.mobile().clone(), vec![0, 1, 2])
                .unwrap();
        assert!(matches!(
            bdfg_inverse(&tampered),
            Err(MapError::NotWellLabelled(_))
        ));
        // non-bipartite maps are rejected up front
        assert!(matches!(
            bdfg_forward(&loop_map()),
            Err(MapError::NotBipartite(_))
        ));
    }

    #[test]
    fn bdfg_rejects_a_root_vertex_of_degree_two() {
        // the mobile of the empty-subset loop has labels 0,1 but its root
        // vertex carries a second half-edge
        let pair = psi(&covered(loop_map(), &[]));
        let labelled = pair_to_labelled(&pair);
        assert!(labelled.is_well_corner_labelled());
        assert!(matches!(
            bdfg_inverse(&labelled),
            Err(MapError::NotWellLabelled(_))
        ));
        // but the generic folding accepts it
        assert!(fold_labelled(&labelled).is_ok());
    }

    #[test]
    fn mobile_constructors_reject_bad_shapes() {
        // label count mismatch
        let pair = psi(&covered(link(), &[0, 1]));
        assert!(matches!(
            CornerLabelledMobile::new(pair.mobile().clone(), vec![0]),
            Err(MapError::BadLabels(_))
        ));
        assert!(matches!(
            BlossomingMobile::new(pair.mobile().clone(), vec![1, 0, 0]),
            Err(MapError::BadBuds(_))
        ));
        // a rootless map is not a mobile
        assert!(matches!(
            CornerLabelledMobile::new(RootedMap::empty(), vec![]),
            Err(MapError::RootMissing)
        ));
        // a two-faced map is not a mobile
        let banana = RootedMap::new(
            Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
            Some(0),
        )
        .unwrap();
        assert!(matches!(
            CornerLabelledMobile::new(banana, vec![0, 1]),
            Err(MapError::NotUnicellular(_))
        ));
    }

    #[test]
    fn labelled_mobiles_accept_arbitrary_half_edge_names() {
        let pair = psi(&covered(link(), &[0, 1]));
        // scramble the mobile's half-edge names: the rebuilt pair lives on
        // renamed half-edges but is the same abstract pair
        let scrambled = pair.mobile().relabelled(&[3, 1, 0, 2]);
        let labelled =
            CornerLabelledMobile::new(scrambled, vec![0, 1]).unwrap();
        let rebuilt = pair_from_labelled(&labelled).unwrap();
        assert_eq!(rebuilt.canonical_key(), pair.canonical_key());
        let folded = fold_labelled(&labelled).unwrap();
        let expected = omega(&pair);
        assert_eq!(folded.canonical_key(), expected.canonical_key());
    }

    #[test]
    fn rightmost_bfs_spanning_tree_realises_the_geodesic_orientation() {
        let path = RootedMap::new(
            Perm::from_cycles(4, &[vec![1, 2]]).unwrap(),
            Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
            Some(0),
        )
        .unwrap();
        let square = RootedMap::new(
            Perm::from_cycles(8, &[vec![0, 7], vec![1, 2], vec![3, 4], vec![5, 6]])
                .unwrap(),
            Perm::from_cycles(8, &[vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]])
                .unwrap(),
            Some(0),
        )
        .unwrap();
        for map in [link(), path, square] {
            let spanning = rightmost_bfs_tree(&map);
            let cm = CoveredMap::new(spanning).unwrap();
            let om = delta(&cm);
            let geo = geodesic_orientation(&map).unwrap();
            assert_eq!(om.map(), geo.map());
            assert_eq!(om.mask(), geo.mask());
        }
    }
}

//! Duality acting on every object class.
//!
//! The dual of a map exchanges vertices and faces; the dual of a spanned map
//! also complements the distinguished edge subset, and this exchange
//! descends through every encoding in the library:
//!
//! * on orientations, duality keeps each edge's marked half-edge set but
//!   swaps the roles of ingoing and outgoing ([`dual_oriented`]);
//! * on mobiles, it inverts the rotation and re-roots at the root's twin
//!   ([`dual_mobile`]), which swaps the two colour classes;
//! * on plane trees, it acts through the codes: the height code of a tree
//!   determines the degree code of the dual tree ([`dual_tree_code`]).
//!
//! Each action is an involution, and together they make the unfolding of a
//! dual covered map computable component-wise from the unfolding of the
//! original.

use crate::cmap::RootedMap;
use crate::mobile::{DegreeCode, HeightCode};
use crate::orient::OrientedMap;

/// The dual of an oriented map: the dual map carries the complementary
/// half-edge set as its ingoing halves.
///
/// This is exactly how the canonical orientation transforms under duality:
/// the canonical orientation of the dual spanned map is the dual map with
/// ingoing and outgoing swapped.
pub fn dual_oriented(om: &OrientedMap) -> OrientedMap {
    let outgoing: Vec<bool> = om.mask().iter().map(|&b| !b).collect();
    OrientedMap::from_mask(om.map().dual(), outgoing)
        .expect("complementing an orientation keeps one ingoing half per edge")
}

/// The dual of a mobile: the same half-edges and twin pairing, the inverse
/// rotation, and the root moved to its twin.
///
/// Every white vertex of the input is a black vertex of the output and vice
/// versa (colour classes are recomputed from the new root, which now sits on
/// the other side of its edge).  Applying the operation twice gives back the
/// input.  The output is the paper-faithful dual; renormalising its root
/// pair to the standard position (root second-highest, twin highest) makes
/// it literally equal to the mobile unfolded from the dual covered map.
pub fn dual_mobile(mobile: &RootedMap) -> RootedMap {
    RootedMap::new(
        mobile.sigma().inverse(),
        mobile.alpha().clone(),
        mobile.root().map(|r| mobile.alpha().apply(r)),
    )
    .expect("inverting the rotation of a mobile yields a mobile")
}

/// The degree code of the dual tree, from the height code of the tree.
///
/// With heights `c_0 … c_n`, the dual tree's child counts are
/// `d_0 = c_n` and `d_{n-j} = c_j + 1 - c_{j+1}` for `j = 0, …, n-1`.
/// The induced map on plane trees is an involution.
pub fn dual_tree_code(code: &HeightCode) -> DegreeCode {
    let c = code.values();
    let n = code.n_edges();
    let mut d = vec![0; n + 1];
    d[0] = c[n];
    for j in 0..n {
        d[n - j] = c[j] + 1 - c[j + 1];
    }
    DegreeCode::new(d).expect("the dual of a height code is a degree code")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmap::{CoveredMap, SpannedMap};
    use crate::codes::CodeShuffle;
    use crate::fold::psi;
    use crate::mobile::{
        degree_code, height_code, normalize_mobile, tree_from_degree,
        tree_from_height,
    };
    use crate::orient::delta;
    use crate::perm::Perm;

    fn covered(map: RootedMap, s: &[usize]) -> CoveredMap {
        CoveredMap::new(SpannedMap::new(map, s).unwrap()).unwrap()
    }

    fn link_full() -> CoveredMap {
        covered(
            RootedMap::new(
                Perm::identity(2),
                Perm::transposition(2, 0, 1),
                Some(0),
            )
            .unwrap(),
            &[0, 1],
        )
    }

    fn nine_edge() -> CoveredMap {
        CodeShuffle::parse("a1 b1 a2 b2 A2 b3 A1 B1 a3 b4 a4 a5 B3 A5 B2 A4 B4 A3")
            .unwrap()
            .to_covered()
    }

    fn dual_covered(cm: &CoveredMap) -> CoveredMap {
        CoveredMap::new(cm.spanned().dual_spanned()).unwrap()
    }

    #[test]
    fn oriented_duality_swaps_the_roles_on_the_one_edge_maps() {
        let cm = link_full();
        let om = delta(&cm);
        assert_eq!(om.ingoing_halves(), vec![1]);
        let dual = dual_oriented(&om);
        assert_eq!(dual.ingoing_halves(), vec![0]);
        // and it equals the canonical orientation of the dual spanned map
        let om_dual = delta(&dual_covered(&cm));
        assert_eq!(dual.map(), om_dual.map());
        assert_eq!(dual.mask(), om_dual.mask());
    }

    #[test]
    fn oriented_duality_matches_the_canonical_orientation_of_the_dual() {
        for cm in [link_full(), nine_edge()] {
            let lhs = delta(&dual_covered(&cm));
            let rhs = dual_oriented(&delta(&cm));
            assert_eq!(lhs.map(), rhs.map());
            assert_eq!(lhs.mask(), rhs.mask());
        }
    }

    #[test]
    fn oriented_duality_is_an_involution() {
        for cm in [link_full(), nine_edge()] {
            let om = delta(&cm);
            let twice = dual_oriented(&dual_oriented(&om));
            assert_eq!(twice.map(), om.map());
            assert_eq!(twice.mask(), om.mask());
        }
    }

    /// The one-edge worked example: the mobile of the tree-rooted link is
    /// the path (0 3) rooted at 2; its dual is the same path re-rooted at
    /// the twin 3, which renormalises to the mobile of the dual (the
    /// edgeless-subset loop).
    #[test]
    fn mobile_duality_on_the_one_edge_pair() {
        let pair = psi(&link_full());
        let dual = dual_mobile(pair.mobile());
        assert_eq!(dual.sigma(), &Perm::from_cycles(4, &[vec![0, 3]]).unwrap());
        assert_eq!(dual.root(), Some(3));
        let dual_pair = psi(&dual_covered(&link_full()));
        assert_eq!(&normalize_mobile(&dual), dual_pair.mobile());
        // double application gives back the original mobile
        assert_eq!(&dual_mobile(&dual), pair.mobile());
    }

    #[test]
    fn mobile_duality_matches_the_unfolding_of_the_dual() {
        for cm in [link_full(), nine_edge()] {
            let lhs = psi(&dual_covered(&cm)).mobile().clone();
            let rhs = normalize_mobile(&dual_mobile(psi(&cm).mobile()));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn tree_code_duality_worked_examples() {
        let one_edge = dual_tree_code(&HeightCode::parse("01").unwrap());
        assert_eq!(one_edge, DegreeCode::parse("10").unwrap());
        let six_edge = dual_tree_code(&HeightCode::parse("0123212").unwrap());
        assert_eq!(six_edge, DegreeCode::parse("2022000").unwrap());
    }

    #[test]
    fn tree_code_duality_matches_the_unfolding_of_the_dual() {
        for cm in [link_full(), nine_edge()] {
            let code = height_code(psi(&cm).tree()).unwrap();
            let dual_code = degree_code(psi(&dual_covered(&cm)).tree()).unwrap();
            assert_eq!(dual_tree_code(&code), dual_code);
        }
    }

    #[test]
    fn tree_duality_is_an_involution_on_small_trees() {
        fn all_height_codes(n: usize) -> Vec<HeightCode> {
            fn extend(
                prefix: &mut Vec<usize>,
                n: usize,
                out: &mut Vec<HeightCode>,
            ) {
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
        for n in 0..=5 {
            for code in all_height_codes(n) {
                let tree = tree_from_height(&code);
                let dual_tree = tree_from_degree(&dual_tree_code(&code));
                let back = tree_from_degree(&dual_tree_code(
                    &height_code(&dual_tree).unwrap(),
                ));
                assert_eq!(back, tree);
            }
        }
    }
}

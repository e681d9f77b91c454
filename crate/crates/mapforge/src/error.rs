//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong when building or transforming maps.
///
/// Constructors validate eagerly, so a value of a map type always satisfies
/// the invariants of that type; the variants below identify which invariant
/// a rejected input broke.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[non_exhaustive]
pub enum MapError {
    /// An image array did not describe a bijection.
    #[error("image array of length {len} is not a permutation (first problem at position {at})")]
    NotBijective {
        /// Length of the offending image array.
        len: usize,
        /// First position at which the array fails to be a bijection.
        at: usize,
    },

    /// A cycle contained an entry outside the ground set.
    #[error("cycle entry {entry} is out of range for a ground set of size {n}")]
    CycleEntryOutOfRange {
        /// The offending entry.
        entry: usize,
        /// Size of the ground set.
        n: usize,
    },

    /// A cycle listed the same element twice.
    #[error("cycle entry {0} appears more than once")]
    DuplicateCycleEntry(usize),

    /// Cycle-notation text could not be parsed.
    #[error("cannot parse cycle notation: {0}")]
    CycleParse(String),

    /// Half-edges come in pairs, so the ground set must have even size.
    #[error("ground set has odd size {0}; half-edges come in pairs")]
    OddHalfEdgeCount(usize),

    /// `sigma` and `alpha` act on ground sets of different sizes.
    #[error("sigma acts on {sigma} half-edges but alpha acts on {alpha}")]
    MismatchedSizes {
        /// Ground-set size of the vertex rotation.
        sigma: usize,
        /// Ground-set size of the edge involution.
        alpha: usize,
    },

    /// The edge involution fixed a half-edge.
    #[error("alpha fixes half-edge {0}; the edge involution must be fixed-point-free")]
    AlphaHasFixedPoint(usize),

    /// The edge pairing was not an involution.
    #[error("alpha is not an involution: alpha(alpha({0})) != {0}")]
    AlphaNotInvolution(usize),

    /// The empty map carries no half-edges, hence no root.
    #[error("the empty map cannot carry a root half-edge")]
    RootOnEmptyMap,

    /// A non-empty map must be rooted.
    #[error("a non-empty map needs a root half-edge")]
    RootMissing,

    /// The root must be a half-edge of the map.
    #[error("root half-edge {root} is out of range ({n_half} half-edges)")]
    RootOutOfRange {
        /// The offending root.
        root: usize,
        /// Number of half-edges.
        n_half: usize,
    },

    /// `sigma` and `alpha` do not act transitively.
    #[error("map is not connected: half-edge {0} is unreachable from the root")]
    NotConnected(usize),

    /// A half-edge index exceeded the ground set.
    #[error("half-edge {0} is out of range")]
    HalfEdgeOutOfRange(usize),

    /// A half-edge subset was not closed under the edge involution.
    #[error("half-edge subset is not closed under alpha (half-edge {0} is in, its partner is not)")]
    NotAlphaStable(usize),

    /// The submap/complement walk from the root failed to visit everything.
    #[error("the selected submap is not covering: the motion walk from the root misses half-edge {0}")]
    NotCovered(usize),

    /// An orientation must select exactly one half-edge per edge.
    #[error("orientation must pick exactly one half-edge per edge (edge containing half-edge {0})")]
    BadOrientation(usize),

    /// Backward walks from some half-edge never reach the root.
    #[error("orientation is not left-connected: no backward walk from half-edge {0} reaches the root")]
    NotLeftConnected(usize),

    /// A one-faced map was required.
    #[error("map is not one-faced: it has {0} faces")]
    NotUnicellular(usize),

    /// A plane tree was required.
    #[error("map is not a plane tree (v={v}, e={e}, f={f})")]
    NotAPlaneTree {
        /// Vertex count.
        v: usize,
        /// Edge count.
        e: usize,
        /// Face count.
        f: usize,
    },

    /// A bipartite map was required.
    #[error("map is not bipartite: it has a cycle of odd length through half-edge {0}")]
    NotBipartite(usize),

    /// A tree/mobile pair failed the coherence conditions.
    #[error("tree/mobile pair is not coherently labelled: {0}")]
    IncoherentPair(&'static str),

    /// A letter code failed validation.
    #[error("invalid code: {0}")]
    BadCode(String),

    /// Corner labels failed validation.
    #[error("invalid corner labels: {0}")]
    BadLabels(String),

    /// Bud counts failed validation.
    #[error("invalid bud counts: {0}")]
    BadBuds(String),

    /// Corner labels must be constant on each labelled vertex.
    #[error("mobile is not well-labelled: corner labels differ around the vertex of half-edge {0}")]
    NotWellLabelled(usize),

    /// An enumeration request exceeded the configured edge bound.
    #[error("requested {requested} edges but the enumeration bound is {bound} (set MAPFORGE_MAX_EDGES to raise it)")]
    BoundExceeded {
        /// Requested number of edges.
        requested: usize,
        /// Largest allowed number of edges.
        bound: usize,
    },

    /// JSON input did not match the documented shapes.
    #[error("invalid JSON input: {0}")]
    BadJson(String),
}

//! JSON import and export.
//!
//! Every object travels as a single JSON object (one line, suitable for
//! JSON-lines streams):
//!
//! * a map is `{"n": e, "root": h|null, "sigma": [...], "alpha": [...]}`
//!   with image arrays indexed by half-edge `0 … 2e−1`;
//! * a map with a distinguished edge subset adds `"S": [sorted half-edges]`;
//! * a map with an orientation adds `"I": [sorted ingoing half-edges]`;
//! * a tree/mobile pair is `{"tree": map, "mobile": map, "coloring":
//!   [0|1 per mobile vertex]}` (0 white, 1 black; the coloring is written
//!   on export and checked against the mobile's bipartition on import);
//! * a corner-labelled mobile is a map plus `"labels"`, a blossoming
//!   mobile a map plus `"buds"` (both listed clockwise from the root
//!   corner).
//!
//! Import accepts any half-edge names for pairs (they are relabelled
//! coherently), rejects objects that carry both `"S"` and `"I"` as
//! ambiguous, and surfaces structural problems as the same errors the
//! constructors raise.

use crate::cmap::{CoveredMap, RootedMap, SpannedMap};
use crate::error::MapError;
use crate::fold::{coherent_relabel, TreeMobilePair};
use crate::mobile::{BlossomingMobile, CornerLabelledMobile};
use crate::orient::OrientedMap;
use crate::perm::Perm;
use crate::Result;
use serde::{Deserialize, Serialize};

/// Wire form of a map, optionally carrying a subset, an orientation,
/// corner labels, or bud counts.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct MapDto {
    n: usize,
    root: Option<usize>,
    sigma: Vec<usize>,
    alpha: Vec<usize>,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none")]
    subset: Option<Vec<usize>>,
    #[serde(rename = "I", skip_serializing_if = "Option::is_none")]
    ingoing: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    buds: Option<Vec<usize>>,
}

/// Wire form of a tree/mobile pair.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDto {
    tree: MapDto,
    mobile: MapDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<Vec<u8>>,
}

fn bad(msg: impl Into<String>) -> MapError {
    MapError::BadJson(msg.into())
}

fn core_dto(map: &RootedMap) -> MapDto {
    MapDto {
        n: map.n_edges(),
        root: map.root(),
        sigma: map.sigma().images().to_vec(),
        alpha: map.alpha().images().to_vec(),
        subset: None,
        ingoing: None,
        labels: None,
        buds: None,
    }
}

fn core_map(dto: &MapDto) -> Result<RootedMap> {
    if dto.sigma.len() != 2 * dto.n || dto.alpha.len() != 2 * dto.n {
        return Err(bad(format!(
            "a map with {} edges needs image arrays of length {}, found {} and {}",
            dto.n,
            2 * dto.n,
            dto.sigma.len(),
            dto.alpha.len()
        )));
    }
    let sigma = Perm::from_images(dto.sigma.clone())?;
    let alpha = Perm::from_images(dto.alpha.clone())?;
    RootedMap::new(sigma, alpha, dto.root)
}

fn reject_extras(dto: &MapDto, allowed: &str) -> Result<()> {
    if dto.subset.is_some() && dto.ingoing.is_some() {
        return Err(bad("object carries both \"S\" and \"I\", which is ambiguous"));
    }
    let mut present = Vec::new();
    if dto.subset.is_some() {
        present.push("S");
    }
    if dto.ingoing.is_some() {
        present.push("I");
    }
    if dto.labels.is_some() {
        present.push("labels");
    }
    if dto.buds.is_some() {
        present.push("buds");
    }
    match present.as_slice() {
        [] => Ok(()),
        [only] if *only == allowed => Ok(()),
        _ => Err(bad(format!(
            "unexpected fields {:?} (only \"{}\" is allowed here)",
            present, allowed
        ))),
    }
}

fn parse_dto(text: &str) -> Result<MapDto> {
    serde_json::from_str(text).map_err(|e| bad(e.to_string()))
}

/// Serializes a plain map.
pub fn map_json(map: &RootedMap) -> String {
    serde_json::to_string(&core_dto(map)).expect("maps serialize")
}

/// Parses a plain map (no subset, orientation, labels, or buds allowed).
pub fn parse_map(text: &str) -> Result<RootedMap> {
    let dto = parse_dto(text)?;
    reject_extras(&dto, "")?;
    core_map(&dto)
}

/// Serializes a map with its distinguished edge subset.
pub fn spanned_json(sm: &SpannedMap) -> String {
    let mut dto = core_dto(sm.map());
    dto.subset = Some(sm.s_halves());
    serde_json::to_string(&dto).expect("maps serialize")
}

/// Parses a map with a distinguished edge subset (field `"S"`).
pub fn parse_spanned(text: &str) -> Result<SpannedMap> {
    let dto = parse_dto(text)?;
    reject_extras(&dto, "S")?;
    let subset = dto
        .subset
        .clone()
        .ok_or_else(|| bad("expected a subset field \"S\""))?;
    SpannedMap::new(core_map(&dto)?, &subset)
}

/// Serializes a covered map (a map with its subset).
pub fn covered_json(cm: &CoveredMap) -> String {
    spanned_json(cm.spanned())
}

/// Parses a covered map: a map with a subset that must be connecting with
/// a one-faced submap.
pub fn parse_covered(text: &str) -> Result<CoveredMap> {
    CoveredMap::new(parse_spanned(text)?)
}

/// Serializes a map with its orientation.
pub fn oriented_json(om: &OrientedMap) -> String {
    let mut dto = core_dto(om.map());
    dto.ingoing = Some(om.ingoing_halves());
    serde_json::to_string(&dto).expect("maps serialize")
}

/// Parses a map with an orientation (field `"I"`, one ingoing half-edge
/// per edge).
pub fn parse_oriented(text: &str) -> Result<OrientedMap> {
    let dto = parse_dto(text)?;
    reject_extras(&dto, "I")?;
    let ingoing = dto
        .ingoing
        .clone()
        .ok_or_else(|| bad("expected an orientation field \"I\""))?;
    OrientedMap::new(core_map(&dto)?, &ingoing)
}

/// Serializes a tree/mobile pair, including the mobile's vertex coloring.
pub fn pair_json(pair: &TreeMobilePair) -> String {
    let dto = PairDto {
        tree: core_dto(pair.tree()),
        mobile: core_dto(pair.mobile()),
        coloring: Some(
            pair.mobile_colours()
                .iter()
                .map(|&black| u8::from(black))
                .collect(),
        ),
    };
    serde_json::to_string(&dto).expect("pairs serialize")
}

/// Parses a tree/mobile pair.
///
/// The two maps may use arbitrary half-edge names; the mobile is relabelled
/// to the unique coherent naming.  When a `"coloring"` is present it is
/// checked against the mobile's bipartition (0 white, 1 black, indexed as
/// in the mobile's vertex list).
pub fn parse_pair(text: &str) -> Result<TreeMobilePair> {
    let dto: PairDto = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    reject_extras(&dto.tree, "")?;
    reject_extras(&dto.mobile, "")?;
    let tree = core_map(&dto.tree)?;
    let mobile = core_map(&dto.mobile)?;
    if let Some(coloring) = &dto.coloring {
        let colours = mobile.bipartition()?;
        let claimed: Vec<bool> = coloring.iter().map(|&c| c != 0).collect();
        if claimed != colours {
            return Err(bad(
                "coloring disagrees with the mobile's bipartition (0 white at the root vertex, 1 black)",
            ));
        }
    }
    coherent_relabel(&tree, &mobile)
}

/// Serializes a corner-labelled mobile (a map plus `"labels"`).
pub fn labelled_json(lm: &CornerLabelledMobile) -> String {
    let mut dto = core_dto(lm.mobile());
    dto.labels = Some(lm.labels().to_vec());
    serde_json::to_string(&dto).expect("maps serialize")
}

/// Parses a corner-labelled mobile.
pub fn parse_labelled(text: &str) -> Result<CornerLabelledMobile> {
    let dto = parse_dto(text)?;
    reject_extras(&dto, "labels")?;
    let labels = dto
        .labels
        .clone()
        .ok_or_else(|| bad("expected a corner-label field \"labels\""))?;
    CornerLabelledMobile::new(core_map(&dto)?, labels)
}

/// Serializes a blossoming mobile (a map plus `"buds"`).
pub fn blossoming_json(bm: &BlossomingMobile) -> String {
    let mut dto = core_dto(bm.mobile());
    dto.buds = Some(bm.buds().to_vec());
    serde_json::to_string(&dto).expect("maps serialize")
}

/// Parses a blossoming mobile.
pub fn parse_blossoming(text: &str) -> Result<BlossomingMobile> {
    let dto = parse_dto(text)?;
    reject_extras(&dto, "buds")?;
    let buds = dto
        .buds
        .clone()
        .ok_or_else(|| bad("expected a bud-count field \"buds\""))?;
    BlossomingMobile::new(core_map(&dto)?, buds)
}

/// Any object the tool can read, as detected from the fields present.
#[derive(Clone, Debug)]
pub enum Document {
    /// A plain map.
    Map(RootedMap),
    /// A map with a distinguished edge subset (`"S"`).
    Spanned(SpannedMap),
    /// A map with an orientation (`"I"`).
    Oriented(OrientedMap),
    /// A tree/mobile pair (`"tree"`/`"mobile"`).
    Pair(TreeMobilePair),
    /// A mobile with corner labels (`"labels"`).
    Labelled(CornerLabelledMobile),
    /// A mobile with bud counts (`"buds"`).
    Blossoming(BlossomingMobile),
}

/// Parses any supported object, detecting its kind from the fields present.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let object = value
        .as_object()
        .ok_or_else(|| bad("expected a JSON object"))?;
    if object.contains_key("tree") || object.contains_key("mobile") {
        return Ok(Document::Pair(parse_pair(text)?));
    }
    if object.contains_key("labels") {
        return Ok(Document::Labelled(parse_labelled(text)?));
    }
    if object.contains_key("buds") {
        return Ok(Document::Blossoming(parse_blossoming(text)?));
    }
    match (object.contains_key("S"), object.contains_key("I")) {
        (true, true) => Err(bad(
            "object carries both \"S\" and \"I\", which is ambiguous",
        )),
        (true, false) => Ok(Document::Spanned(parse_spanned(text)?)),
        (false, true) => Ok(Document::Oriented(parse_oriented(text)?)),
        (false, false) => Ok(Document::Map(parse_map(text)?)),
    }
}

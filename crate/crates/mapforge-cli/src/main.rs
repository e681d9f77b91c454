//! `mapforge` — generate, count, transform, verify, sample, and export
//! rooted combinatorial maps and their tree/mobile encodings.
//!
//! Data goes to stdout (or `--out`); diagnostics go to stderr.  Exit codes:
//! 0 success, 1 a verification found a mismatch, 2 usage or input error.
//! The environment variable `MAPFORGE_MAX_EDGES` overrides the enumeration
//! bounds.  All output is deterministic for a fixed invocation.

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use mapforge::cmap::{CoveredMap, RootedMap, SpannedMap};
use mapforge::codes::{CodeShuffle, UnicellularCode};
use mapforge::dot::document_dot;
use mapforge::dual::dual_oriented;
use mapforge::enumerate::{
    gen_bipartite_unicellular, gen_covered, gen_plane_trees, gen_rooted_maps, gen_unicellular,
    sample_covered, seeded_rng, EnumLimits,
};
use mapforge::fold::{coherent_relabel, psi, psi_inv, TreeMobilePair};
use mapforge::formulas::{
    bipartite_unicellular_total, catalan, covered_total, unicellular_total, verify_all,
    verify_covered_product, verify_harer_zagier, verify_jackson, verify_lehman_walsh,
    verify_mullin, verify_shuffle, verify_zagier, VerifyRow, CSV_HEADER,
};
use mapforge::json::{self, Document};
use mapforge::mobile::{bdfg_forward, bdfg_inverse, pair_to_blossoming, pair_to_labelled};
use num::BigUint;
use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "mapforge",
    version,
    about = "Rooted combinatorial maps: generation, counting, bijections, duality, verification, sampling, DOT export"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// All rooted maps
    Maps,
    /// One-faced maps
    Unicellular,
    /// Bipartite one-faced maps
    Bipartite,
    /// Plane trees
    Trees,
    /// Maps with a distinguished one-faced connecting subset
    Covered,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    /// One JSON object per line
    Json,
    /// Root and rotation/pairing in cycle notation
    Cycles,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum By {
    /// Group by genus
    Genus,
    /// Group by (vertices, faces)
    Vf,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Via {
    /// Count by exhaustive generation
    Enum,
    /// Evaluate the closed-form total (no enumeration, any size)
    Formula,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormulaName {
    /// Vertex profile of one-faced maps
    HarerZagier,
    /// Colour profile of bipartite one-faced maps, plus the parity convolution
    Jackson,
    /// Planar spanning-tree-marked maps
    Mullin,
    /// Toroidal spanning-tree-marked maps
    LehmanWalsh,
    /// Covered-map totals and Catalan-product refinements
    CoveredProduct,
    /// Subset-size, genus-pair, and (v,f) convolutions
    Shuffle,
    /// One-black-vertex recursion
    Zagier,
    /// Everything above
    All,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CodeKind {
    /// Single-family contour code of a one-faced map
    Unicellular,
    /// Two-family shuffle code of a covered map
    Shuffle,
}

#[derive(Subcommand)]
enum Command {
    /// Generate every object of a kind, one per line
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Number of edges
        #[arg(long)]
        edges: usize,
        /// Keep only objects whose underlying map has this genus
        #[arg(long)]
        genus: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: GenFormat,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count objects of a kind, as CSV
    Count {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Number of edges
        #[arg(long)]
        edges: usize,
        /// Refine the count
        #[arg(long, value_enum)]
        by: Option<By>,
        #[arg(long, value_enum, default_value = "enum")]
        via: Via,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check enumerated counts against closed forms; exit 1 on any mismatch
    Verify {
        #[arg(long, value_enum)]
        formula: FormulaName,
        /// Largest size to check
        #[arg(long)]
        max_edges: usize,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Unfold a covered map into its tree/mobile pair (or fold back)
    Psi {
        /// Fold a pair back into a covered map
        #[arg(long)]
        inverse: bool,
        /// Canonicalize the half-edge names of the result
        #[arg(long)]
        canonical: bool,
        /// Input file ("-" for stdin)
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dualize a map, a subset-marked map, an orientation, or a pair
    Dual {
        /// Input file ("-" for stdin)
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert between maps and contour-code text
    Code {
        #[command(subcommand)]
        direction: CodeCmd,
    },
    /// Mobile encodings: corner labels, buds, and the geodesic bijection
    Mobile {
        #[command(subcommand)]
        operation: MobileCmd,
    },
    /// Draw uniform covered maps, one JSON object per line
    Sample {
        /// Number of edges
        #[arg(long)]
        edges: usize,
        /// Number of draws
        #[arg(long)]
        count: usize,
        /// Generator seed; equal seeds give byte-identical output
        #[arg(long)]
        seed: u64,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render any object as a Graphviz graph
    Export {
        /// Emit DOT (the only supported format)
        #[arg(long, required = true)]
        dot: bool,
        /// Input file ("-" for stdin)
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CodeCmd {
    /// One-faced map or covered map JSON → code text
    Encode {
        /// Input file ("-" for stdin)
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Code text → map JSON (kind detected from the letter families)
    Decode {
        /// Input file ("-" for stdin)
        #[arg(long = "in")]
        input: PathBuf,
        /// Force the code kind instead of detecting it
        #[arg(long = "as", value_enum)]
        force: Option<CodeKind>,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MobileCmd {
    /// Pair JSON → mobile with one height label per white corner
    Labelled {
        /// Input file ("-" for stdin)
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pair JSON → mobile with one bud count per white corner
    Blossoming {
        /// Input file ("-" for stdin)
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bipartite map JSON → mobile labelled by vertex distances
    Bdfg {
        /// Input file ("-" for stdin)
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distance-labelled mobile JSON → bipartite map
    BdfgInverse {
        /// Input file ("-" for stdin)
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Gen {
            kind,
            edges,
            genus,
            format,
            out,
        } => {
            emit(&out, &run_gen(kind, edges, genus, format)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Count {
            kind,
            edges,
            by,
            via,
            out,
        } => {
            emit(&out, &run_count(kind, edges, by, via)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            formula,
            max_edges,
            out,
        } => {
            let rows = run_verify(formula, max_edges)?;
            let mut text = String::from(CSV_HEADER);
            text.push('\n');
            for row in &rows {
                text.push_str(&row.csv_line());
                text.push('\n');
            }
            emit(&out, &text)?;
            if rows.iter().all(VerifyRow::pass) {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!(
                    "{} of {} checks failed",
                    rows.iter().filter(|r| !r.pass()).count(),
                    rows.len()
                );
                Ok(ExitCode::from(1))
            }
        }
        Command::Psi {
            inverse,
            canonical,
            input,
            out,
        } => {
            let text = read_input(&input)?;
            let output = if inverse {
                let pair = json::parse_pair(&text)?;
                let mut cm = psi_inv(&pair);
                if canonical {
                    cm = canonical_covered(&cm);
                }
                json::covered_json(&cm)
            } else {
                let cm = json::parse_covered(&text)?;
                let mut pair = psi(&cm);
                if canonical {
                    pair = canonical_pair(&pair)?;
                }
                json::pair_json(&pair)
            };
            emit(&out, &(output + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual { input, out } => {
            let text = read_input(&input)?;
            let output = match json::parse_document(&text)? {
                Document::Map(map) => json::map_json(&map.dual()),
                Document::Spanned(sm) => json::spanned_json(&sm.dual_spanned()),
                Document::Oriented(om) => json::oriented_json(&dual_oriented(&om)),
                Document::Pair(pair) => {
                    let cm = psi_inv(&pair);
                    let dual_cm = CoveredMap::new(cm.spanned().dual_spanned())?;
                    json::pair_json(&psi(&dual_cm))
                }
                Document::Labelled(_) | Document::Blossoming(_) => {
                    bail!("duality is not defined for labelled or blossoming mobiles")
                }
            };
            emit(&out, &(output + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Code { direction } => {
            match direction {
                CodeCmd::Encode { input, out } => {
                    let text = read_input(&input)?;
                    let output = match json::parse_document(&text)? {
                        Document::Map(map) => UnicellularCode::from_map(&map)?.to_string(),
                        Document::Spanned(sm) => {
                            CodeShuffle::from_covered(&CoveredMap::new(sm)?).to_string()
                        }
                        _ => bail!(
                            "codes exist for one-faced maps (no extra fields) and covered maps (\"S\")"
                        ),
                    };
                    emit(&out, &(output + "\n"))?;
                }
                CodeCmd::Decode { input, force, out } => {
                    let text = read_input(&input)?;
                    let trimmed = text.trim();
                    let kind = force.unwrap_or_else(|| {
                        if trimmed
                            .split_whitespace()
                            .any(|token| token.starts_with(['b', 'B']))
                        {
                            CodeKind::Shuffle
                        } else {
                            CodeKind::Unicellular
                        }
                    });
                    let output = match kind {
                        CodeKind::Unicellular => {
                            json::map_json(&UnicellularCode::parse(trimmed)?.to_map())
                        }
                        CodeKind::Shuffle => {
                            json::covered_json(&CodeShuffle::parse(trimmed)?.to_covered())
                        }
                    };
                    emit(&out, &(output + "\n"))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mobile { operation } => {
            let output = match operation {
                MobileCmd::Labelled { input, out } => {
                    let pair = json::parse_pair(&read_input(&input)?)?;
                    (json::labelled_json(&pair_to_labelled(&pair)), out)
                }
                MobileCmd::Blossoming { input, out } => {
                    let pair = json::parse_pair(&read_input(&input)?)?;
                    (json::blossoming_json(&pair_to_blossoming(&pair)), out)
                }
                MobileCmd::Bdfg { input, out } => {
                    let map = json::parse_map(&read_input(&input)?)?;
                    (json::labelled_json(&bdfg_forward(&map)?), out)
                }
                MobileCmd::BdfgInverse { input, out } => {
                    let lm = json::parse_labelled(&read_input(&input)?)?;
                    (json::map_json(&bdfg_inverse(&lm)?), out)
                }
            };
            emit(&output.1, &(output.0 + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sample {
            edges,
            count,
            seed,
            out,
        } => {
            let mut rng = seeded_rng(seed);
            let mut text = String::new();
            for _ in 0..count {
                text.push_str(&json::covered_json(&sample_covered(edges, &mut rng)));
                text.push('\n');
            }
            emit(&out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Export { dot: _, input, out } => {
            let doc = json::parse_document(&read_input(&input)?)?;
            emit(&out, &document_dot(&doc))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn genus_keeps(genus_filter: Option<usize>, genus: usize) -> bool {
    genus_filter.map(|g| g == genus).unwrap_or(true)
}

fn cycles_line(map: &RootedMap) -> String {
    let root = map
        .root()
        .map(|r| r.to_string())
        .unwrap_or_else(|| "-".into());
    format!("root={root} sigma={} alpha={}", map.sigma(), map.alpha())
}

fn covered_cycles_line(cm: &CoveredMap) -> String {
    let halves: Vec<String> = cm
        .spanned()
        .s_halves()
        .iter()
        .map(|h| h.to_string())
        .collect();
    format!("{} S=[{}]", cycles_line(cm.map()), halves.join(" "))
}

fn run_gen(
    kind: Kind,
    edges: usize,
    genus_filter: Option<usize>,
    format: GenFormat,
) -> anyhow::Result<String> {
    let limits = EnumLimits::from_env();
    let mut lines = Vec::new();
    if kind == Kind::Covered {
        for cm in gen_covered(edges, &limits)? {
            if genus_keeps(genus_filter, cm.map().genus()) {
                lines.push(match format {
                    GenFormat::Json => json::covered_json(&cm),
                    GenFormat::Cycles => covered_cycles_line(&cm),
                });
            }
        }
    } else {
        let maps = match kind {
            Kind::Maps => gen_rooted_maps(edges, &limits)?,
            Kind::Unicellular => gen_unicellular(edges, &limits)?,
            Kind::Bipartite => gen_bipartite_unicellular(edges, &limits)?,
            Kind::Trees => gen_plane_trees(edges, &limits)?,
            Kind::Covered => unreachable!("handled above"),
        };
        for map in maps {
            if genus_keeps(genus_filter, map.genus()) {
                lines.push(match format {
                    GenFormat::Json => json::map_json(&map),
                    GenFormat::Cycles => cycles_line(&map),
                });
            }
        }
    }
    let mut text = lines.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    Ok(text)
}

const COUNT_HEADER: &str = "kind,n,param1,param2,count";

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Maps => "maps",
        Kind::Unicellular => "unicellular",
        Kind::Bipartite => "bipartite",
        Kind::Trees => "trees",
        Kind::Covered => "covered",
    }
}

fn count_csv(
    kind: Kind,
    edges: usize,
    rows: Vec<(Option<usize>, Option<usize>, BigUint)>,
) -> String {
    let mut text = String::from(COUNT_HEADER);
    text.push('\n');
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    for (p1, p2, count) in rows {
        text.push_str(&format!(
            "{},{},{},{},{}\n",
            kind_name(kind),
            edges,
            opt(p1),
            opt(p2),
            count
        ));
    }
    text
}

fn run_count(kind: Kind, edges: usize, by: Option<By>, via: Via) -> anyhow::Result<String> {
    if via == Via::Formula {
        if by.is_some() {
            bail!("--via formula only computes totals; drop --by or use --via enum");
        }
        let total = match kind {
            Kind::Unicellular => unicellular_total(edges),
            Kind::Bipartite => bipartite_unicellular_total(edges),
            Kind::Trees => catalan(edges),
            Kind::Covered => covered_total(edges),
            Kind::Maps => bail!("no closed-form total is implemented for all rooted maps"),
        };
        return Ok(count_csv(kind, edges, vec![(None, None, total)]));
    }

    let limits = EnumLimits::from_env();
    let maps: Vec<RootedMap>;
    let covered: Vec<CoveredMap>;
    // (genus, vertices, faces) per object, uniform across kinds
    let stats: Vec<(usize, usize, usize)> = if kind == Kind::Covered {
        covered = gen_covered(edges, &limits)?;
        covered
            .iter()
            .map(|cm| {
                let m = cm.map();
                (m.genus(), m.vertex_count(), m.face_count())
            })
            .collect()
    } else {
        maps = match kind {
            Kind::Maps => gen_rooted_maps(edges, &limits)?,
            Kind::Unicellular => gen_unicellular(edges, &limits)?,
            Kind::Bipartite => gen_bipartite_unicellular(edges, &limits)?,
            Kind::Trees => gen_plane_trees(edges, &limits)?,
            Kind::Covered => unreachable!("handled above"),
        };
        maps.iter()
            .map(|m| (m.genus(), m.vertex_count(), m.face_count()))
            .collect()
    };

    let rows = match by {
        None => vec![(None, None, BigUint::from(stats.len()))],
        Some(By::Genus) => {
            let mut table: BTreeMap<usize, BigUint> = BTreeMap::new();
            for &(g, _, _) in &stats {
                *table.entry(g).or_default() += 1u32;
            }
            table
                .into_iter()
                .map(|(g, count)| (Some(g), None, count))
                .collect()
        }
        Some(By::Vf) => {
            let mut table: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
            for &(_, v, f) in &stats {
                *table.entry((v, f)).or_default() += 1u32;
            }
            table
                .into_iter()
                .map(|((v, f), count)| (Some(v), Some(f), count))
                .collect()
        }
    };
    Ok(count_csv(kind, edges, rows))
}

fn run_verify(formula: FormulaName, max_edges: usize) -> anyhow::Result<Vec<VerifyRow>> {
    let limits = EnumLimits::from_env();
    Ok(match formula {
        FormulaName::HarerZagier => verify_harer_zagier(max_edges, &limits)?,
        FormulaName::Jackson => verify_jackson(max_edges, &limits)?,
        FormulaName::Mullin => verify_mullin(max_edges, &limits)?,
        FormulaName::LehmanWalsh => verify_lehman_walsh(max_edges, &limits)?,
        FormulaName::CoveredProduct => verify_covered_product(max_edges, &limits)?,
        FormulaName::Shuffle => verify_shuffle(max_edges, &limits)?,
        FormulaName::Zagier => verify_zagier(max_edges, &limits)?,
        FormulaName::All => verify_all(max_edges, &limits)?,
    })
}

/// Renames the half-edges of a covered map to the canonical names of its
/// underlying map, carrying the subset along.
fn canonical_covered(cm: &CoveredMap) -> CoveredMap {
    let (map, lam) = cm.map().canonical_form();
    let mut mask = vec![false; map.n_half()];
    for (h, &in_s) in cm.spanned().mask().iter().enumerate() {
        if in_s {
            mask[lam[h]] = true;
        }
    }
    let spanned = SpannedMap::from_mask(map, mask).expect("renaming keeps the subset twin-closed");
    CoveredMap::new(spanned).expect("the covering property is name-independent")
}

/// Renames a pair canonically: canonical names for the tree, then the
/// unique coherent naming for the mobile.
fn canonical_pair(pair: &TreeMobilePair) -> anyhow::Result<TreeMobilePair> {
    let (tree, _) = pair.tree().canonical_form();
    Ok(coherent_relabel(&tree, pair.mobile())?)
}

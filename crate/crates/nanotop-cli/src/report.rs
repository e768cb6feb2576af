//! Report structures shared by both output formats, their renderers, and
//! the mapping from failures to exit codes.
//!
//! Determinism contract: every report is an ordinary struct with a fixed
//! field order, families are emitted in canonical subset order, assignments
//! sorted by domain label, and no timing or environment data ever appears —
//! identical inputs render byte-identically in both formats.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use nanotop::verify::{TheoremReport, Witness};
use nanotop::{
    HContinuityConditions, InclusionCondition, MapClassification, NanoSpace, PointMap,
    StrictInclusion, Subset,
};

use crate::files::SpaceFile;

/// A failure with its process exit code.
#[derive(Debug)]
pub enum CliError {
    /// unreadable input, malformed file, or malformed implication — exit 2
    Usage(String),
    /// well-formed input describing an invalid structure — exit 3
    Validation(String),
    /// the operation needs a powerset enumeration the cap forbids — exit 4
    Cap(String),
}

impl CliError {
    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Validation(m) | CliError::Cap(m) => m,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Cap(_) => 4,
        }
    }
}

impl From<nanotop::Error> for CliError {
    fn from(e: nanotop::Error) -> Self {
        match e {
            nanotop::Error::CapExceeded { .. } | nanotop::Error::UniverseTooLarge { .. } => {
                CliError::Cap(e.to_string())
            }
            nanotop::Error::UnknownMapClass(_) => CliError::Usage(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

fn labels(s: &Subset) -> Vec<String> {
    s.to_labels()
}

fn family(sets: &[Subset]) -> Vec<Vec<String>> {
    sets.iter().map(labels).collect()
}

/// `{a, d}` — the braced text form of a label list.
fn braced(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(", "))
}

fn braced_family(sets: &[Vec<String>]) -> String {
    sets.iter().map(|s| braced(s)).collect::<Vec<_>>().join(", ")
}

fn space_line(f: &SpaceFile) -> String {
    format!(
        "universe {}; partition {{{}}}; x {}",
        braced(&f.universe),
        f.partition.iter().map(|b| braced(b)).collect::<Vec<_>>().join(", "),
        braced(&f.x),
    )
}

// ---------------------------------------------------------------- space --

#[derive(Serialize)]
pub struct SpaceReport {
    pub universe: Vec<String>,
    pub partition: Vec<Vec<String>>,
    pub x: Vec<String>,
    pub lower: Vec<String>,
    pub upper: Vec<String>,
    pub boundary: Vec<String>,
    pub rough: bool,
    pub opens: Vec<Vec<String>>,
    pub closeds: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_opens: Option<Vec<Vec<String>>>,
}

impl SpaceReport {
    pub fn collect(space: &NanoSpace, show_h_family: bool) -> Result<Self, CliError> {
        let ap = space.approximation();
        let h_opens = if show_h_family {
            Some(family(space.h_family().map_err(CliError::from)?.members()))
        } else {
            None
        };
        Ok(SpaceReport {
            universe: space.universe().labels().to_vec(),
            partition: space.partition().block_label_lists(),
            x: space.target().to_labels(),
            lower: labels(&ap.lower),
            upper: labels(&ap.upper),
            boundary: labels(&ap.boundary),
            rough: nanotop::rough::is_rough(space.partition(), space.target()),
            opens: family(space.open_family()),
            closeds: family(space.closed_family()),
            h_opens,
        })
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "universe: {}", braced(&self.universe));
        let _ = writeln!(
            out,
            "partition: {{{}}}",
            self.partition.iter().map(|b| braced(b)).collect::<Vec<_>>().join(", ")
        );
        let _ = writeln!(out, "x: {}", braced(&self.x));
        let _ = writeln!(out, "lower: {}", braced(&self.lower));
        let _ = writeln!(out, "upper: {}", braced(&self.upper));
        let _ = writeln!(out, "boundary: {}", braced(&self.boundary));
        let _ = writeln!(out, "rough: {}", self.rough);
        let _ = writeln!(out, "opens: {}", braced_family(&self.opens));
        let _ = writeln!(out, "closeds: {}", braced_family(&self.closeds));
        if let Some(h) = &self.h_opens {
            let _ = writeln!(out, "h-opens: {}", braced_family(h));
        }
        out
    }
}

// ------------------------------------------------------------------ set --

#[derive(Serialize)]
pub struct SetReport {
    pub b: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nint: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ncl: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ninth: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nclh: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_hopen: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_hclosed: Option<bool>,
}

impl SetReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "b: {}", braced(&self.b));
        if let Some(v) = &self.nint {
            let _ = writeln!(out, "nint: {}", braced(v));
        }
        if let Some(v) = &self.ncl {
            let _ = writeln!(out, "ncl: {}", braced(v));
        }
        if let Some(v) = &self.ninth {
            let _ = writeln!(out, "ninth: {}", braced(v));
        }
        if let Some(v) = &self.nclh {
            let _ = writeln!(out, "nclh: {}", braced(v));
        }
        if let Some(v) = self.is_hopen {
            let _ = writeln!(out, "is-hopen: {v}");
        }
        if let Some(v) = self.is_hclosed {
            let _ = writeln!(out, "is-hclosed: {v}");
        }
        out
    }
}

// ------------------------------------------------------------------ map --

#[derive(Serialize)]
pub struct ClassificationReport {
    pub bijective: bool,
    pub nano_continuous: bool,
    pub nano_open_map: bool,
    pub nano_homeomorphism: bool,
    pub nano_totally_continuous: bool,
    pub nano_contra_continuous: bool,
    pub h_continuous: bool,
    pub h_open_map: bool,
    pub h_irresolute: bool,
    pub h_homeomorphism: bool,
    pub h_totally_continuous: bool,
    pub h_contra_continuous: bool,
}

impl From<MapClassification> for ClassificationReport {
    fn from(c: MapClassification) -> Self {
        ClassificationReport {
            bijective: c.bijective,
            nano_continuous: c.nano_continuous,
            nano_open_map: c.nano_open_map,
            nano_homeomorphism: c.nano_homeomorphism,
            nano_totally_continuous: c.nano_totally_continuous,
            nano_contra_continuous: c.nano_contra_continuous,
            h_continuous: c.h_continuous,
            h_open_map: c.h_open_map,
            h_irresolute: c.h_irresolute,
            h_homeomorphism: c.h_homeomorphism,
            h_totally_continuous: c.h_totally_continuous,
            h_contra_continuous: c.h_contra_continuous,
        }
    }
}

#[derive(Serialize)]
pub struct ConditionsReport {
    pub open_preimages_h_open: bool,
    pub closed_preimages_h_closed: bool,
    pub image_of_h_closure_in_closure_of_image: bool,
    pub h_closure_of_preimage_in_preimage_of_closure: bool,
    pub preimage_of_interior_in_h_interior_of_preimage: bool,
    pub agree: bool,
}

impl From<HContinuityConditions> for ConditionsReport {
    fn from(c: HContinuityConditions) -> Self {
        ConditionsReport {
            agree: c.agree(),
            open_preimages_h_open: c.open_preimages_h_open,
            closed_preimages_h_closed: c.closed_preimages_h_closed,
            image_of_h_closure_in_closure_of_image: c.image_of_h_closure_in_closure_of_image,
            h_closure_of_preimage_in_preimage_of_closure: c.h_closure_of_preimage_in_preimage_of_closure,
            preimage_of_interior_in_h_interior_of_preimage: c.preimage_of_interior_in_h_interior_of_preimage,
        }
    }
}

fn condition_name(c: InclusionCondition) -> &'static str {
    match c {
        InclusionCondition::ImageOfHClosure => "image_of_h_closure_in_closure_of_image",
        InclusionCondition::HClosureOfPreimage => "h_closure_of_preimage_in_preimage_of_closure",
        InclusionCondition::PreimageOfInterior => "preimage_of_interior_in_h_interior_of_preimage",
    }
}

#[derive(Serialize)]
pub struct InclusionReport {
    pub condition: &'static str,
    pub subject: Vec<String>,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

impl From<&StrictInclusion> for InclusionReport {
    fn from(i: &StrictInclusion) -> Self {
        InclusionReport {
            condition: condition_name(i.condition),
            subject: labels(&i.subject),
            left: labels(&i.left),
            right: labels(&i.right),
        }
    }
}

#[derive(Serialize)]
pub struct MapReport {
    pub domain: SpaceFile,
    pub codomain: SpaceFile,
    pub map: BTreeMap<String, String>,
    pub classification: ClassificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conditions: Option<ConditionsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_inclusions: Option<Vec<InclusionReport>>,
}

impl MapReport {
    pub fn collect(map: &PointMap, with_conditions: bool) -> Result<Self, CliError> {
        let classification = map.classify().map_err(CliError::from)?.into();
        let (conditions, strict_inclusions) = if with_conditions {
            let conds = map.h_continuity_conditions().map_err(CliError::from)?;
            let strict = map.strict_inclusion_witnesses().map_err(CliError::from)?;
            (
                Some(conds.into()),
                Some(strict.iter().map(InclusionReport::from).collect()),
            )
        } else {
            (None, None)
        };
        Ok(MapReport {
            domain: crate::files::space_file_of(map.domain()),
            codomain: crate::files::space_file_of(map.codomain()),
            map: map.assignment_pairs().into_iter().collect(),
            classification,
            conditions,
            strict_inclusions,
        })
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "domain: {}", space_line(&self.domain));
        let _ = writeln!(out, "codomain: {}", space_line(&self.codomain));
        let assigns: Vec<String> =
            self.map.iter().map(|(k, v)| format!("{k} -> {v}")).collect();
        let _ = writeln!(out, "map: {}", assigns.join(", "));
        let c = &self.classification;
        let _ = writeln!(out, "bijective: {}", c.bijective);
        let _ = writeln!(out, "nano-continuous: {}", c.nano_continuous);
        let _ = writeln!(out, "nano-open: {}", c.nano_open_map);
        let _ = writeln!(out, "nano-homeomorphism: {}", c.nano_homeomorphism);
        let _ = writeln!(out, "nano-totally-continuous: {}", c.nano_totally_continuous);
        let _ = writeln!(out, "nano-contra-continuous: {}", c.nano_contra_continuous);
        let _ = writeln!(out, "h-continuous: {}", c.h_continuous);
        let _ = writeln!(out, "h-open: {}", c.h_open_map);
        let _ = writeln!(out, "h-irresolute: {}", c.h_irresolute);
        let _ = writeln!(out, "h-homeomorphism: {}", c.h_homeomorphism);
        let _ = writeln!(out, "h-totally-continuous: {}", c.h_totally_continuous);
        let _ = writeln!(out, "h-contra-continuous: {}", c.h_contra_continuous);
        if let Some(k) = &self.conditions {
            let _ = writeln!(
                out,
                "characterizations: open-preimages {}; closed-preimages {}; image-of-h-closure {}; h-closure-of-preimage {}; preimage-of-interior {}; agree {}",
                k.open_preimages_h_open,
                k.closed_preimages_h_closed,
                k.image_of_h_closure_in_closure_of_image,
                k.h_closure_of_preimage_in_preimage_of_closure,
                k.preimage_of_interior_in_h_interior_of_preimage,
                k.agree,
            );
        }
        if let Some(ws) = &self.strict_inclusions {
            if ws.is_empty() {
                let _ = writeln!(out, "strict-inclusions: none");
            } else {
                let _ = writeln!(out, "strict-inclusions:");
                for w in ws {
                    let _ = writeln!(
                        out,
                        "  {}: subject {}, left {}, right {}",
                        w.condition,
                        braced(&w.subject),
                        braced(&w.left),
                        braced(&w.right),
                    );
                }
            }
        }
        out
    }
}

// --------------------------------------------------------------- verify --

#[derive(Serialize)]
pub struct WitnessReport {
    pub domain: SpaceFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codomain: Option<SpaceFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment: Option<BTreeMap<String, String>>,
    pub satisfied: String,
    pub violated: String,
}

impl From<&Witness> for WitnessReport {
    fn from(w: &Witness) -> Self {
        let to_space_file = |s: &nanotop::verify::SpaceDescriptor| SpaceFile {
            universe: s.universe.clone(),
            partition: s.partition.clone(),
            x: s.x.clone(),
        };
        WitnessReport {
            domain: to_space_file(&w.domain),
            codomain: w.codomain.as_ref().map(to_space_file),
            assignment: w
                .assignment
                .as_ref()
                .map(|pairs| pairs.iter().cloned().collect()),
            satisfied: w.satisfied.clone(),
            violated: w.violated.clone(),
        }
    }
}

impl WitnessReport {
    fn text_block(&self, indent: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{indent}domain: {}", space_line(&self.domain));
        if let Some(c) = &self.codomain {
            let _ = writeln!(out, "{indent}codomain: {}", space_line(c));
        }
        if let Some(a) = &self.assignment {
            let assigns: Vec<String> = a.iter().map(|(k, v)| format!("{k} -> {v}")).collect();
            let _ = writeln!(out, "{indent}map: {}", assigns.join(", "));
        }
        let _ = writeln!(out, "{indent}satisfied: {}", self.satisfied);
        let _ = writeln!(out, "{indent}violated: {}", self.violated);
        out
    }
}

#[derive(Serialize)]
pub struct SweepReport {
    pub id: String,
    pub instances: u64,
    pub failures: Vec<WitnessReport>,
}

impl From<&TheoremReport> for SweepReport {
    fn from(r: &TheoremReport) -> Self {
        SweepReport {
            id: r.id.clone(),
            instances: r.instances,
            failures: r.failures.iter().map(WitnessReport::from).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub reports: Vec<SweepReport>,
    pub all_passed: bool,
}

impl VerifyReport {
    pub fn collect(reports: &[TheoremReport]) -> Self {
        VerifyReport {
            reports: reports.iter().map(SweepReport::from).collect(),
            all_passed: reports.iter().all(TheoremReport::passed),
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            if r.failures.is_empty() {
                let _ = writeln!(out, "{}: pass ({} instances)", r.id, r.instances);
            } else {
                let _ = writeln!(
                    out,
                    "{}: FAIL ({} instances, {} failures)",
                    r.id,
                    r.instances,
                    r.failures.len()
                );
                for w in &r.failures {
                    out.push_str(&w.text_block("  "));
                }
            }
        }
        let _ = writeln!(out, "{}", if self.all_passed { "all passed" } else { "FAILURES FOUND" });
        out
    }
}

// ----------------------------------------------------------------- mine --

#[derive(Serialize)]
pub struct MineReport {
    pub antecedent: String,
    pub consequent: String,
    pub witness: Option<WitnessReport>,
}

impl MineReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "implication: {} => {}", self.antecedent, self.consequent);
        match &self.witness {
            None => {
                let _ = writeln!(out, "witness: none");
            }
            Some(w) => {
                let _ = writeln!(out, "witness:");
                out.push_str(&w.text_block("  "));
            }
        }
        out
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

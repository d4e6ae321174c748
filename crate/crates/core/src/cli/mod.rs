//! Spec ingestion, reports and the regression table behind the `swf` binary.
//!
//! Exit codes: 0 ok, 1 regression mismatch, 2 parse, 3 range,
//! 4 unsupported, 5 gap violation.

mod regression;
mod spec;

use serde::Serialize;

use crate::conley::{descriptor_homology, ConleyDescriptor, Group};
use crate::rat::{to_text, Rat};
use crate::seifert::{
    orb_degree, orb_euler, picard_quotient_order, reducibility_check, GroupOrder, SeifertData, TorsionSpinC,
};
use crate::spectral::SpectralError;
use crate::systems::{assemble_swf, AssemblyOptions, Direction, Flavor, SystemsError};

pub use regression::{regression_table, run_regression, RegressionCase, RegressionOutcome};
pub use spec::{parse_spec, BundleSpec, ManifoldSpec};

/// Text of `n` when the rational shift is not determined.
pub const UNSPECIFIED: &str = "unspecified-by-paper";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("gap violation: {0}")]
    Gap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Range(_) => 3,
            CliError::Unsupported(_) => 4,
            CliError::Gap(_) => 5,
        }
    }
}

impl From<SystemsError> for CliError {
    fn from(e: SystemsError) -> Self {
        let msg = e.to_string();
        match e {
            SystemsError::Spectral(SpectralError::GapViolation { .. }) => CliError::Gap(msg),
            SystemsError::Range(_)
            | SystemsError::Grading(_)
            | SystemsError::Seifert(_)
            | SystemsError::Spectral(SpectralError::Domain(_)) => CliError::Range(msg),
            SystemsError::Unsupported(m) => CliError::Unsupported(m),
            _ => CliError::Unsupported(msg),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub gap: Rat,
    pub homology_prefix: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { gap: AssemblyOptions::default().gap, homology_prefix: None }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SystemSummary {
    pub direction: String,
    pub descriptor: String,
    pub connecting_maps: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PrefixRow {
    pub index: usize,
    pub descriptor: String,
    pub n: String,
    /// reduced homology by degree as `[betti, [torsion…]]`
    pub homology: Vec<(usize, Vec<i64>)>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReducibilityReport {
    pub degree_n: String,
    pub euler_characteristic: String,
    pub quotient_order: String,
    pub class: Vec<i64>,
    pub all_reducible: bool,
    pub kernel_free: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub input: ManifoldSpec,
    pub group: String,
    pub flavor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub system: Option<SystemSummary>,
    pub m: i64,
    pub n: String,
    pub provenance: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology_prefix: Option<Vec<PrefixRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reducibility: Option<ReducibilityReport>,
}

fn direction_text(d: Direction) -> &'static str {
    match d {
        Direction::Ind => "ind",
        Direction::Pro => "pro",
    }
}

/// Family label of a system, e.g. `⋁^∞ C⁺ (ind)`; constant spheres print bare.
pub fn family_label(d: &ConleyDescriptor, direction: Direction) -> String {
    match d {
        ConleyDescriptor::Sphere(_) => d.label(None),
        _ => format!("{} ({})", d.label(None), direction_text(direction)),
    }
}

fn homology_rows(d: &ConleyDescriptor) -> Vec<(usize, Vec<i64>)> {
    match descriptor_homology(d) {
        Ok(h) => h.groups().iter().map(|g| (g.betti, g.torsion.clone())).collect(),
        Err(_) => Vec::new(),
    }
}

fn seifert_query(spec: &ManifoldSpec, group: Group, flavor: Flavor) -> Result<Report, CliError> {
    let ManifoldSpec::SeifertGeneral { genus, markings, n, e0, .. } = spec else {
        unreachable!("called for general Seifert specs only");
    };
    let range = |e: crate::seifert::SeifertError| CliError::Range(e.to_string());
    let base = SeifertData::new(*genus, markings.clone()).map_err(range)?;
    let nb = n.to_bundle();
    let order = picard_quotient_order(&base, &nb).map_err(range)?;
    let class = TorsionSpinC::from_bundle(&base, &nb, &e0.to_bundle()).map_err(|e| CliError::Unsupported(e.to_string()))?;
    let r = reducibility_check(&base, &nb, &class).map_err(range)?;
    let reducibility = ReducibilityReport {
        degree_n: to_text(&orb_degree(&base, &nb).map_err(range)?),
        euler_characteristic: to_text(&orb_euler(&base)),
        quotient_order: match order {
            GroupOrder::Finite(k) => k.to_string(),
            GroupOrder::Infinite => "infinite".into(),
        },
        class: class.coordinates(),
        all_reducible: r.all_reducible,
        kernel_free: r.kernel_free,
    };
    Ok(Report {
        input: spec.clone(),
        group: group.to_string(),
        flavor: format!("{flavor:?}"),
        system: None,
        m: 0,
        n: UNSPECIFIED.into(),
        provenance: vec![
            "seifert.picard_quotient_order".into(),
            "seifert.reducibility_check".into(),
            "general Seifert data: reducibility query only, no spectrum assembled".into(),
        ],
        homology_prefix: None,
        reducibility: Some(reducibility),
    })
}

pub fn run(spec: &ManifoldSpec, group: Group, flavor: Flavor, options: &RunOptions) -> Result<Report, CliError> {
    spec.validate()?;
    if matches!(spec, ManifoldSpec::SeifertGeneral { .. }) {
        return seifert_query(spec, group, flavor);
    }
    let opts = AssemblyOptions { gap: options.gap.clone(), ..AssemblyOptions::default() };
    let swf = assemble_swf(spec, group, flavor, &opts)?;
    let first = swf.system.object(1);
    let direction = swf.system.direction();
    let connecting_maps = match (&first.descriptor, direction) {
        (ConleyDescriptor::Sphere(_), _) => "identity",
        (_, Direction::Ind) => "summand inclusions",
        (_, Direction::Pro) => "complement inclusions",
    };
    let system = SystemSummary {
        direction: direction_text(direction).into(),
        descriptor: family_label(&first.descriptor, direction),
        connecting_maps: connecting_maps.into(),
    };
    let homology_prefix = options.homology_prefix.map(|k| {
        swf.system
            .materialize(k)
            .into_iter()
            .enumerate()
            .map(|(i, o)| PrefixRow {
                index: i + 1,
                descriptor: o.descriptor.to_string(),
                n: if swf.index.is_some() { to_text(&o.n) } else { UNSPECIFIED.into() },
                homology: homology_rows(&o.descriptor),
            })
            .collect()
    });
    Ok(Report {
        input: spec.clone(),
        group: group.to_string(),
        flavor: format!("{flavor:?}"),
        system: Some(system),
        m: first.m(),
        n: swf.index.as_ref().map_or_else(|| UNSPECIFIED.to_string(), to_text),
        provenance: swf.trail,
        homology_prefix,
        reducibility: None,
    })
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize") + "\n",
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("manifold: {}", self.input.to_json()));
        line(format!("group: {}  flavor: {}", self.group, self.flavor));
        if let Some(s) = &self.system {
            line(format!("spectrum: ({}, {}, {})", s.descriptor, self.m, self.n));
            line(format!("system: {} with {}", s.direction, s.connecting_maps));
        } else {
            line(format!("n: {}", self.n));
        }
        if let Some(r) = &self.reducibility {
            line(format!("deg N: {}  euler characteristic: {}", r.degree_n, r.euler_characteristic));
            line(format!("torsion spin-c classes: {}  class: {:?}", r.quotient_order, r.class));
            line(format!("all reducible: {}  kernel free: {}", r.all_reducible, r.kernel_free));
        }
        line("provenance:".into());
        for p in &self.provenance {
            line(format!("  - {p}"));
        }
        if let Some(rows) = &self.homology_prefix {
            line("homology prefix:".into());
            for r in rows {
                let groups: Vec<String> = r
                    .homology
                    .iter()
                    .enumerate()
                    .filter(|(_, (b, t))| *b > 0 || !t.is_empty())
                    .map(|(deg, (b, t))| {
                        let tors: String = t.iter().map(|x| format!("⊕ℤ/{x}")).collect();
                        format!("H̃{deg}=ℤ^{b}{tors}")
                    })
                    .collect();
                line(format!("  [{}] {} (n = {}): {}", r.index, r.descriptor, r.n, groups.join(", ")));
            }
        }
        out
    }
}

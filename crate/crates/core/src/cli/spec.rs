//! Manifold specifications as JSON documents tagged by `"family"`.

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::seifert::{OrbLineBundle, SeifertData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleSpec {
    pub b: i64,
    #[serde(default)]
    pub beta: Vec<i64>,
}

impl BundleSpec {
    pub fn to_bundle(&self) -> OrbLineBundle {
        OrbLineBundle::new(self.b, self.beta.clone())
    }
}

fn yes() -> bool {
    true
}

fn is_true(x: &bool) -> bool {
    *x
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum ManifoldSpec {
    #[serde(rename = "s2xs1")]
    S2xS1,
    CircleBundle {
        g: i64,
        d: i64,
        q: i64,
    },
    Nil {
        d: i64,
        q: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        spin_lift: Option<u8>,
    },
    FlatT2Bundle {
        order: u8,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        spin_lift: Option<u8>,
    },
    HantzscheWendt,
    SeifertGeneral {
        genus: i64,
        markings: Vec<(i64, i64)>,
        n: BundleSpec,
        e0: BundleSpec,
        #[serde(default = "yes", skip_serializing_if = "is_true")]
        orientable: bool,
    },
}

impl ManifoldSpec {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("specs always serialize")
    }

    /// Range checks owned by the computing modules, surfaced early.
    pub fn validate(&self) -> Result<(), CliError> {
        let range = |msg: String| Err(CliError::Range(msg));
        match self {
            ManifoldSpec::S2xS1 | ManifoldSpec::HantzscheWendt => Ok(()),
            ManifoldSpec::CircleBundle { g, d, q } => {
                if *d <= 0 {
                    return range(format!("circle_bundle: d > 0 required, got d={d}"));
                }
                if *g <= 0 {
                    return range(format!("circle_bundle: g > 0 required, got g={g}"));
                }
                if *q < 0 || *q >= *d {
                    return range(format!("circle_bundle: 0 <= q < d required, got q={q}, d={d}"));
                }
                Ok(())
            }
            ManifoldSpec::Nil { d, q, spin_lift } => {
                if *d <= 0 {
                    return range(format!("nil: d > 0 required, got d={d}"));
                }
                if *q < 0 || *q >= *d {
                    return range(format!("nil: 0 <= q < d required, got q={q}, d={d}"));
                }
                if spin_lift.is_some_and(|l| l > 3) {
                    return range(format!("nil: spin_lift must be 0..=3, got {}", spin_lift.unwrap_or(0)));
                }
                Ok(())
            }
            ManifoldSpec::FlatT2Bundle { order, spin_lift } => {
                if ![2, 3, 4, 6].contains(order) {
                    return range(format!("flat_t2_bundle: order must be 2, 3, 4 or 6, got {order}"));
                }
                if spin_lift.is_some_and(|l| l > 1) {
                    return range(format!("flat_t2_bundle: spin_lift must be 0 or 1, got {}", spin_lift.unwrap_or(0)));
                }
                Ok(())
            }
            ManifoldSpec::SeifertGeneral { genus, markings, n, e0, orientable } => {
                if !orientable {
                    return Err(CliError::Unsupported(
                        "non-orientable base: supply the orientable double cover instead".into(),
                    ));
                }
                let base = SeifertData::new(*genus, markings.clone()).map_err(|e| CliError::Range(e.to_string()))?;
                base.check(&n.to_bundle()).map_err(|e| CliError::Range(format!("n: {e}")))?;
                base.check(&e0.to_bundle()).map_err(|e| CliError::Range(format!("e0: {e}")))?;
                Ok(())
            }
        }
    }
}

// Per-family mirrors of the document. Deserializing these straight from the
// text keeps serde_json's line/column positions, which a tagged enum loses.
macro_rules! family_doc {
    ($name:ident { $($field:ident : $ty:ty $(= $default:literal)?),* }) => {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct $name {
            #[allow(dead_code)]
            family: String,
            $( $( #[serde(default = $default)] )? $field: $ty, )*
        }
    };
}

family_doc!(EmptyDoc {});
family_doc!(CircleDoc { g: i64, d: i64, q: i64 });
family_doc!(NilDoc { d: i64, q: i64, spin_lift: Option<u8> = "none" });
family_doc!(FlatDoc { order: u8, spin_lift: Option<u8> = "none" });
family_doc!(SeifertDoc {
    genus: i64,
    markings: Vec<(i64, i64)>,
    n: BundleSpec,
    e0: BundleSpec,
    orientable: bool = "yes"
});

fn none() -> Option<u8> {
    None
}

fn parse_error(e: serde_json::Error) -> CliError {
    CliError::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
}

fn position_of(document: &str, needle: &str) -> (usize, usize) {
    let at = document.find(needle).unwrap_or(0);
    let before = &document[..at];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn parse_unchecked(document: &str) -> Result<ManifoldSpec, CliError> {
    let value: serde_json::Value = serde_json::from_str(document).map_err(parse_error)?;
    let Some(family) = value.get("family").and_then(|f| f.as_str()) else {
        let (line, column) = position_of(document, "{");
        return Err(CliError::Parse(format!("line {line}, column {column}: missing string field `family`")));
    };
    let spec = match family {
        "s2xs1" => serde_json::from_str::<EmptyDoc>(document).map(|_| ManifoldSpec::S2xS1),
        "hantzsche_wendt" => serde_json::from_str::<EmptyDoc>(document).map(|_| ManifoldSpec::HantzscheWendt),
        "circle_bundle" => serde_json::from_str::<CircleDoc>(document)
            .map(|c| ManifoldSpec::CircleBundle { g: c.g, d: c.d, q: c.q }),
        "nil" => serde_json::from_str::<NilDoc>(document)
            .map(|c| ManifoldSpec::Nil { d: c.d, q: c.q, spin_lift: c.spin_lift }),
        "flat_t2_bundle" => serde_json::from_str::<FlatDoc>(document)
            .map(|c| ManifoldSpec::FlatT2Bundle { order: c.order, spin_lift: c.spin_lift }),
        "seifert_general" => serde_json::from_str::<SeifertDoc>(document).map(|c| ManifoldSpec::SeifertGeneral {
            genus: c.genus,
            markings: c.markings,
            n: c.n,
            e0: c.e0,
            orientable: c.orientable,
        }),
        other => {
            let (line, column) = position_of(document, "\"family\"");
            return Err(CliError::Parse(format!(
                "line {line}, column {column}: unknown family `{other}`, expected one of \
                 s2xs1, circle_bundle, nil, flat_t2_bundle, hantzsche_wendt, seifert_general"
            )));
        }
    };
    spec.map_err(parse_error)
}

/// Parse and validate a JSON document.
pub fn parse_spec(document: &str) -> Result<ManifoldSpec, CliError> {
    let spec = parse_unchecked(document)?;
    spec.validate()?;
    Ok(spec)
}

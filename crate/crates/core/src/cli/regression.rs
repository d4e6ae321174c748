//! Published values checked by `swf --regression`.

use super::{run, ManifoldSpec, RunOptions};
use crate::conley::Group;
use crate::systems::Flavor;

#[derive(Clone, Debug)]
pub struct RegressionCase {
    pub label: String,
    pub spec: ManifoldSpec,
    pub group: Group,
    pub flavor: Flavor,
    pub descriptor: &'static str,
    pub n: String,
}

#[derive(Clone, Debug)]
pub struct RegressionOutcome {
    pub label: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

const TORUS_WEDGE: &str = "Σ(S(ℍ)∨_{Pin(2)}⋁^∞_{Pin(2)}(Z̃₂×S(ℍ))) (ind)";

fn frac(num: i64, den: i64) -> String {
    crate::rat::to_text(&crate::rat::rat(num, den))
}

fn case(spec: ManifoldSpec, group: Group, flavor: Flavor, descriptor: &'static str, n: String) -> RegressionCase {
    RegressionCase { label: format!("{} {group} {flavor:?}", spec.to_json()), spec, group, flavor, descriptor, n }
}

pub fn regression_table() -> Vec<RegressionCase> {
    use Flavor::{A, R};
    use Group::{Pin2, S1};
    let mut t = Vec::new();
    for f in [A, R] {
        t.push(case(ManifoldSpec::S2xS1, S1, f, "S⁰", "0".into()));
        t.push(case(ManifoldSpec::S2xS1, Pin2, f, "S⁰", "0".into()));
        t.push(case(ManifoldSpec::CircleBundle { g: 1, d: 5, q: 1 }, S1, f, "S⁰", frac(1, 10)));
        t.push(case(ManifoldSpec::CircleBundle { g: 2, d: 7, q: 3 }, S1, f, "S⁰", frac(1, 28)));
    }
    for d in 1..=8 {
        let nil = |spin_lift| ManifoldSpec::Nil { d, q: 0, spin_lift };
        t.push(case(nil(None), S1, A, "⋁^∞ C⁺ (ind)", frac(d - 17, 8)));
        t.push(case(nil(None), S1, R, "(ℂ²)⁺∖⊔^∞S¹ (pro)", frac(d - 1, 8)));
        t.push(case(nil(Some(0)), Pin2, A, TORUS_WEDGE, frac(d - 9, 16)));
        t.push(case(nil(Some(0)), Pin2, R, "(ℍ²)⁺∖D_∞ (pro)", frac(d + 7, 16)));
        t.push(case(nil(Some(1)), Pin2, A, "Σ(∐^∞Pin(2)) (ind)", frac(d - 17, 16)));
        t.push(case(nil(Some(1)), Pin2, R, "ℍ⁺∖∐^∞Pin(2) (pro)", frac(d - 1, 16)));
    }
    let flat = |spin_lift| ManifoldSpec::FlatT2Bundle { order: 2, spin_lift };
    t.push(case(flat(None), S1, A, "⋁^∞ C⁺ (ind)", frac(1, 2)));
    t.push(case(flat(None), S1, R, "(ℂ²)⁺∖⊔^∞S¹ (pro)", frac(3, 2)));
    t.push(case(flat(Some(0)), Pin2, A, TORUS_WEDGE, frac(3, 4)));
    t.push(case(flat(Some(0)), Pin2, R, "(ℍ²)⁺∖D_∞ (pro)", frac(5, 4)));
    t.push(case(flat(Some(1)), Pin2, A, "Σ(∐^∞Pin(2)) (ind)", frac(1, 4)));
    t.push(case(flat(Some(1)), Pin2, R, "ℍ⁺∖∐^∞Pin(2) (pro)", frac(3, 4)));
    t
}

pub fn run_regression() -> Vec<RegressionOutcome> {
    let opts = RunOptions::default();
    regression_table()
        .into_iter()
        .map(|c| {
            let expected = format!("({}, 0, {})", c.descriptor, c.n);
            let got = match run(&c.spec, c.group, c.flavor, &opts) {
                Ok(r) => format!("({}, {}, {})", r.system.map(|s| s.descriptor).unwrap_or_default(), r.m, r.n),
                Err(e) => format!("error: {e}"),
            };
            RegressionOutcome { pass: expected == got, label: c.label, expected, got }
        })
        .collect()
}

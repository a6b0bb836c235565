use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::CuspSpec;
use crate::error::Result;
use crate::isometry::{classify, eval_word, translation_part, IsometryClass, IsometryKind, Mat3, ProjIsometry, Word};
use crate::json::matrix_to_json;
use crate::report::Report;
use crate::scalars::expr::format_cyclo;
use crate::scalars::Cyclo;

/// Generators of a holonomy representation with everything checked about it.
#[derive(Clone, Debug)]
pub struct HolonomyRep {
    pub name: String,
    /// The published generators, used for all further words.
    pub generators: BTreeMap<String, ProjIsometry<Cyclo>>,
    /// The same generators rebuilt from the realized scheme.
    pub derived: BTreeMap<String, ProjIsometry<Cyclo>>,
    pub cusps: Vec<CuspData>,
    pub report: Report,
}

#[derive(Clone, Debug)]
pub struct CuspWordResult {
    pub name: String,
    pub word: String,
    pub matrix: ProjIsometry<Cyclo>,
    /// λ with matrix = λ·golden, when a golden matrix is known and matches.
    pub golden_scale: Option<Cyclo>,
    pub golden_mismatch: bool,
    /// Trace of the golden representative when one matched, else of `matrix`.
    pub trace: Cyclo,
    pub class: IsometryClass,
    /// Heisenberg translation (z₀, t₀) of a parabolic fixing ∞, or of its
    /// conjugate by I when it fixes 0.
    pub translation: Option<(Cyclo, Cyclo)>,
}

#[derive(Clone, Debug)]
pub struct CuspData {
    pub name: String,
    pub words: Vec<CuspWordResult>,
    /// Whether the first two words commute exactly.
    pub commute: Option<bool>,
    /// First (a, b) ≠ (0, 0) in the window with H₁ᵃH₂ᵇ trivial, if any.
    pub faithful_counterexample: Option<(i64, i64)>,
    pub faithful_window: Option<i64>,
}

fn fixes_infinity(m: &Mat3<Cyclo>) -> bool {
    m.get(1, 0).is_zero() && m.get(2, 0).is_zero()
}

fn fixes_origin(m: &Mat3<Cyclo>) -> bool {
    m.get(0, 2).is_zero() && m.get(1, 2).is_zero()
}

fn translation_of(g: &ProjIsometry<Cyclo>) -> Result<Option<(Cyclo, Cyclo)>> {
    if fixes_infinity(&g.m) {
        return Ok(translation_part(g).ok());
    }
    if fixes_origin(&g.m) {
        let i = ProjIsometry::picard_i();
        return Ok(translation_part(&i.compose(g).compose(&i)).ok());
    }
    Ok(None)
}

/// Evaluates the cusp words over `generators`, compares with `goldens`,
/// classifies, reads translation parts and, for a window w, searches
/// H₁ᵃH₂ᵇ over 0 < max(|a|, |b|) ≤ w for a trivial element.
pub fn cusp_analysis(
    generators: &BTreeMap<String, ProjIsometry<Cyclo>>,
    cusp: &CuspSpec,
    goldens: &BTreeMap<String, Mat3<Cyclo>>,
    faithful_window: Option<i64>,
    report: &mut Report,
    prefix: &str,
) -> Result<CuspData> {
    let mut env = generators.clone();
    let mut words = Vec::new();
    for nw in &cusp.words {
        let key = format!("{prefix}/{}/{}", cusp.name, nw.name);
        let g = eval_word(&Word::parse(&nw.word)?, &env)?;
        let mut golden_scale = None;
        let mut golden_mismatch = false;
        let mut trace = g.m.trace();
        if let Some(gold) = goldens.get(&nw.name) {
            match g.m.ratio_to(gold) {
                Some(lambda) => {
                    let unit = (lambda.abs2() - Cyclo::one()).is_zero();
                    report.check(
                        format!("{key}/golden"),
                        unit,
                        json!({"word": nw.word, "scale": format_cyclo(&lambda), "unit_scale": unit}),
                    );
                    trace = gold.trace();
                    golden_scale = Some(lambda);
                }
                None => {
                    golden_mismatch = true;
                    let at = g.m.first_disagreement(gold);
                    report.check(
                        format!("{key}/golden"),
                        false,
                        json!({"word": nw.word, "computed": matrix_to_json(&g.m), "first_disagreement": at}),
                    );
                }
            }
        }
        let class = classify(&g)?;
        let translation = if class.kind == IsometryKind::Parabolic { translation_of(&g)? } else { None };
        let mut w = json!({
            "word": nw.word,
            "kind": class.kind,
            "trace": format_cyclo(&trace),
            "discriminant": format_cyclo(&class.discriminant),
        });
        if let Some(n) = class.elliptic_order {
            w["order"] = json!(n);
        }
        if let Some((z0, t0)) = &translation {
            w["translation"] = json!({
                "z": format_cyclo(z0),
                "t": format_cyclo(t0),
                "abs2_z": format_cyclo(&z0.abs2()),
            });
        }
        report.info(format!("{key}/class"), w);
        env.insert(nw.name.clone(), g.clone());
        words.push(CuspWordResult {
            name: nw.name.clone(),
            word: nw.word.clone(),
            matrix: g,
            golden_scale,
            golden_mismatch,
            trace,
            class,
            translation,
        });
    }

    let key = format!("{prefix}/{}", cusp.name);
    let mut commute = None;
    let mut faithful_counterexample = None;
    if let [a, b, ..] = words.as_slice() {
        let ab = a.matrix.compose(&b.matrix);
        let ba = b.matrix.compose(&a.matrix);
        let c = ab.m.ratio_to(&ba.m).is_some();
        report.check(format!("{key}/commute"), c, json!({"pair": [a.name, b.name]}));
        commute = Some(c);
        if let Some(win) = faithful_window {
            let powers = |g: &ProjIsometry<Cyclo>| -> Result<BTreeMap<i64, ProjIsometry<Cyclo>>> {
                (-win..=win).map(|k| Ok((k, g.pow(k)?))).collect()
            };
            let pa = powers(&a.matrix)?;
            let pb = powers(&b.matrix)?;
            'search: for x in -win..=win {
                for y in -win..=win {
                    if (x, y) != (0, 0) && pa[&x].compose(&pb[&y]).is_identity() {
                        faithful_counterexample = Some((x, y));
                        break 'search;
                    }
                }
            }
            report.check(
                format!("{key}/faithful"),
                faithful_counterexample.is_none(),
                match faithful_counterexample {
                    None => json!({"window": win, "trivial_words": 0}),
                    Some((x, y)) => json!({"window": win, "trivial": [x, y]}),
                },
            );
        }
    }
    Ok(CuspData { name: cusp.name.clone(), words, commute, faithful_counterexample, faithful_window })
}

pub(crate) fn scalar_json(x: &Cyclo) -> Value {
    Value::String(format_cyclo(x))
}

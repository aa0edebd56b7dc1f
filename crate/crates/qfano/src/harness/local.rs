//! Affine slices of the key variety's s_ijk-charts with a family's sections imposed.

use std::collections::HashMap;

use super::HarnessError;
use crate::data::{chart_relations, unprojection_i, Chart, FamilyRecord, S_BLOCK, S_POINT_VARS};
use crate::poly::{Field, Poly, Ring, Scalar};

/// Chart coordinates with some of them pinned to constants.
#[derive(Clone, Debug)]
pub struct ChartSlice {
    pub chart: Chart,
    /// Family coordinates (without s1 s2 s3), w2 and the s_ijk.
    pub full: Ring,
    /// Free coordinates of the slice.
    pub local: Ring,
    /// Values of the coordinates solved for on the chart (its relations and I), in `local`.
    pub images: Vec<(String, Poly)>,
    /// Section relations `target - template`, pulled back to `local`.
    pub equations: Vec<(String, Poly)>,
}

pub(crate) fn full_ring(fam: &FamilyRecord, field: Field) -> Result<Ring, HarnessError> {
    let mut names: Vec<&str> = fam.coordinates().into_iter().filter(|n| !S_POINT_VARS.contains(n)).collect();
    names.push("w2");
    names.extend(S_BLOCK);
    Ok(Ring::new(&names, vec![], field)?)
}

/// Builds the slice of `chart` with `pinned` coordinates set to constants (the chart variable
/// itself must be among them), and imposes the sections drawn from `coeffs`.
pub fn chart_slice(
    fam: &FamilyRecord,
    chart: Chart,
    pinned: &[(&str, Scalar)],
    coeffs: &crate::data::SectionInstance,
    field: Field,
) -> Result<ChartSlice, HarnessError> {
    let full = full_ring(fam, field)?;
    let rels = chart_relations(chart, &full)?;
    let solved_t = chart.eliminated_t();
    let mut drop: Vec<&str> = rels.iter().map(|r| r.var.as_str()).collect();
    drop.extend(solved_t);
    drop.extend(pinned.iter().map(|p| p.0));
    let keep: Vec<&str> = full.names().iter().map(|s| s.as_str()).filter(|n| !drop.contains(n)).collect();
    let local = full.restrict(&keep)?;

    let mut assign: HashMap<String, Poly> = HashMap::new();
    for n in &keep {
        assign.insert(n.to_string(), local.var(n)?);
    }
    for (n, v) in pinned {
        assign.insert(n.to_string(), local.scalar(v.clone()));
    }
    let chart_value = pinned
        .iter()
        .find(|p| p.0 == chart.var())
        .ok_or_else(|| HarnessError::Config(format!("the chart variable {} must be pinned", chart.var())))?
        .1
        .clone();
    // Relations may use other solved coordinates (w2 = D/s does); resolve in dependency order.
    let mut images = Vec::new();
    let mut pending: Vec<&crate::data::ChartRelation> = rels.iter().collect();
    while !pending.is_empty() {
        let before = pending.len();
        let mut rest = Vec::new();
        for r in pending {
            let ready = r.numerator.vars_used().iter().all(|&i| assign.contains_key(full.name(i)));
            if !ready {
                rest.push(r);
                continue;
            }
            let inv = chart_value.pow(r.power).inv().ok_or_else(|| HarnessError::Config("chart variable pinned to 0".into()))?;
            let img = r.numerator.substitute(&local, &assign)?.scale(&inv);
            assign.insert(r.var.clone(), img.clone());
            images.push((r.var.clone(), img));
        }
        if rest.len() == before {
            return Err(HarnessError::Check("chart relations are circular".into()));
        }
        pending = rest;
    }
    if let Some(t) = solved_t {
        let ext = local.extend(&[t], &[])?;
        let mut a2: HashMap<String, Poly> = HashMap::new();
        for (n, p) in &assign {
            a2.insert(n.clone(), p.map_to(&ext)?);
        }
        a2.insert(t.to_string(), ext.var(t)?);
        let i = unprojection_i(&full)?.substitute(&ext, &a2)?;
        let ti = ext.idx(t)?;
        let c = i.coeff_in(ti, 1);
        if i.degree_in(ti) != Some(1) || !c.is_constant() {
            return Err(HarnessError::Check(format!("I is not linear in {} with constant coefficient on this slice", t)));
        }
        let c = c.constant_term();
        let rest = i.coeff_in(ti, 0).scale(&-&c.inv().expect("nonzero"));
        let img = rest.map_to(&local)?;
        assign.insert(t.to_string(), img.clone());
        images.push((t.to_string(), img));
    }

    let mut equations = Vec::new();
    for (target, tmpl) in coeffs.substitution(fam, &full)? {
        let e = &full.var(&target)? - &tmpl;
        equations.push((target, e.substitute(&local, &assign)?));
    }
    Ok(ChartSlice {
        chart,
        full,
        local,
        images,
        equations,
    })
}

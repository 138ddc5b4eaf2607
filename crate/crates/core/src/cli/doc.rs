//! JSON document builders. Every number here comes from a library call;
//! this module only arranges results.

use num_bigint::BigUint;
use serde_json::{json, Map, Number, Value};

use crate::arf::{self, ResidueCheck};
use crate::error::Result;
use crate::exactmath::{format_rational, verify_eulerian_gf, BigRat, SeriesCheck};
use crate::identities::{self, Check, IdentityReport};
use crate::psemigroup::PSemigroup;
use crate::symmetry::{self, CoFinite, Pattern};

use super::render::intervals;

/// Set rendering: run-length string, or a raw array with `expand`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Style {
    pub expand: bool,
}

impl Style {
    pub fn set(&self, values: &[u64]) -> Value {
        if self.expand {
            json!(values)
        } else {
            Value::String(intervals(values))
        }
    }

    pub fn cofinite(&self, set: &CoFinite) -> Value {
        json!({"below": self.set(&set.below), "all_from": set.all_from})
    }
}

pub fn big(n: &BigUint) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("decimal integer"))
}

pub fn rational(r: &BigRat) -> Value {
    Value::String(format_rational(r))
}

fn power_sums(sp: &PSemigroup, max_mu: u32) -> Result<Value> {
    let mut map = Map::new();
    for mu in 0..=max_mu {
        map.insert(mu.to_string(), big(&sp.power_sum(mu)?));
    }
    Ok(Value::Object(map))
}

fn flags(report: &symmetry::SymmetryReport) -> Value {
    json!({
        "symmetric": report.p_symmetric,
        "pseudo_symmetric": report.p_pseudo_symmetric,
        "almost_symmetric": report.p_almost_symmetric,
        "completely_symmetric": report.p_completely_symmetric,
        "one_sided_mirror": report.one_sided_mirror,
    })
}

/// Strongest class that applies.
pub fn class_name(report: &symmetry::SymmetryReport) -> &'static str {
    if report.p_completely_symmetric {
        "completely-symmetric"
    } else if report.p_symmetric {
        "symmetric"
    } else if report.p_pseudo_symmetric {
        "pseudo-symmetric"
    } else if report.p_almost_symmetric {
        "almost-symmetric"
    } else {
        "none"
    }
}

fn witness(w: Option<(u64, u64, u64)>) -> Value {
    match w {
        Some((x, y, z)) => json!([x, y, z]),
        None => Value::Null,
    }
}

fn residue_check(check: Option<ResidueCheck>) -> Value {
    match check {
        Some(c) => json!({
            "first": {"actual": c.first.0, "expected": c.first.1},
            "last": {"actual": c.last.0, "expected": c.last.1},
            "passed": c.passed(),
        }),
        None => Value::Null,
    }
}

/// Weighted power sum request for `analyze`.
pub struct Weighted {
    pub lambda: BigRat,
    pub mu: u32,
}

pub fn analyze(
    sp: &PSemigroup,
    max_mu: u32,
    weighted: Option<&Weighted>,
    style: Style,
) -> Result<Value> {
    let report = symmetry::classify(sp);
    let arf_report = arf::is_arf(sp);
    let mut doc = json!({
        "generators": sp.generators().as_input(),
        "a": sp.modulus(),
        "p": sp.p(),
        "apery_by_residue": sp.apery_by_residue(),
        "apery_sorted": sp.apery_sorted(),
        "least_element": sp.multiplicity(),
        "frobenius": sp.frobenius(),
        "conductor": sp.conductor(),
        "genus": sp.genus()?,
        "sylvester_sum": sp.sylvester_sum()?,
        "power_sums": power_sums(sp, max_mu)?,
        "kunz": sp.kunz_coordinates(),
        "gaps": style.set(sp.gaps()),
        "small_elements": style.set(sp.small_elements()),
        "pf": style.set(&report.pf),
        "type": report.type_p,
        "h": style.set(&report.hlk.h),
        "l": style.set(&report.hlk.l),
        "k": style.cofinite(&report.hlk.k),
        "flags": flags(&report),
        "class": class_name(&report),
        "pattern": symmetry::detect_pattern(sp).as_str(),
        "arf": {
            "is_arf": arf_report.is_arf,
            "witness": witness(arf_report.witness),
        },
    });
    if let Some(w) = weighted {
        doc["weighted_power_sum"] = json!({
            "lambda": rational(&w.lambda),
            "mu": w.mu,
            "value": rational(&sp.weighted_power_sum(&w.lambda, w.mu)?),
        });
    }
    Ok(doc)
}

/// Columns available to `table`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Field {
    Frobenius,
    Conductor,
    LeastElement,
    Genus,
    SylvesterSum,
    Type,
    Apery,
    Kunz,
    Class,
}

impl Field {
    fn key(self) -> &'static str {
        match self {
            Field::Frobenius => "frobenius",
            Field::Conductor => "conductor",
            Field::LeastElement => "least_element",
            Field::Genus => "genus",
            Field::SylvesterSum => "sylvester_sum",
            Field::Type => "type",
            Field::Apery => "apery_sorted",
            Field::Kunz => "kunz",
            Field::Class => "class",
        }
    }
}

pub fn table_row(sp: &PSemigroup, fields: &[Field]) -> Result<Value> {
    let mut row = Map::new();
    row.insert("p".into(), json!(sp.p()));
    for &field in fields {
        let value = match field {
            Field::Frobenius => json!(sp.frobenius()),
            Field::Conductor => json!(sp.conductor()),
            Field::LeastElement => json!(sp.multiplicity()),
            Field::Genus => json!(sp.genus()?),
            Field::SylvesterSum => json!(sp.sylvester_sum()?),
            Field::Type => json!(symmetry::type_p(sp)),
            Field::Apery => Value::String(join(sp.apery_sorted())),
            Field::Kunz => Value::String(join(sp.kunz_coordinates())),
            Field::Class => json!(class_name(&symmetry::classify(sp))),
        };
        row.insert(field.key().into(), value);
    }
    Ok(Value::Object(row))
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn classify_row(sp: &PSemigroup) -> Value {
    let report = symmetry::classify(sp);
    let mut row = flags(&report);
    row["p"] = json!(sp.p());
    row["class"] = json!(class_name(&report));
    row
}

fn side(value: &identities::Value, style: Style) -> Value {
    match value {
        identities::Value::Int(n) => {
            Value::Number(n.to_string().parse::<Number>().expect("integer"))
        }
        identities::Value::Bool(b) => json!(b),
        identities::Value::Set(s) => style.set(s),
    }
}

fn checks(list: &[Check], style: Style) -> Value {
    list.iter()
        .map(|c| {
            json!({
                "label": c.label,
                "lhs": side(&c.lhs, style),
                "rhs": side(&c.rhs, style),
                "passed": c.passed(),
            })
        })
        .collect()
}

pub fn identity(report: &IdentityReport, style: Style) -> Value {
    json!({
        "p": report.p,
        "params": report.params,
        "passed": report.passed(),
        "checks": checks(&report.checks, style),
        "informational": checks(&report.informational, style),
        "notes": report.notes,
    })
}

fn verdict(sp: &PSemigroup, passed: bool, detail: Value) -> Value {
    let mut doc = detail;
    doc["p"] = json!(sp.p());
    doc["passed"] = json!(passed);
    doc
}

pub fn symmetry_equivalences(sp: &PSemigroup) -> Value {
    let eq = symmetry::verify_symmetry_equivalences(sp);
    verdict(
        sp,
        eq.consistent(),
        json!({
            "definition": eq.definition,
            "window_counts": eq.window_counts,
            "complementary_pairs": eq.complementary_pairs,
            "apery_pairing": eq.apery_pairing,
            "genus_identity": eq.genus_identity,
        }),
    )
}

pub fn pairings(sp: &PSemigroup) -> Value {
    let r = symmetry::verify_extended_m_pairings(sp);
    verdict(
        sp,
        r.consistent(),
        json!({
            "odd_centre_pairing": r.odd_centre_pairing,
            "even_centre_pairing": r.even_centre_pairing,
            "symmetric": r.p_symmetric,
            "pseudo_symmetric": r.p_pseudo_symmetric,
            "note": r.note,
        }),
    )
}

pub fn pf_consequences(sp: &PSemigroup, style: Style) -> Value {
    let r = symmetry::verify_pf_consequences(sp);
    verdict(
        sp,
        r.holds(),
        json!({
            "pf": style.set(&r.pf),
            "type": r.type_p,
            "symmetric_case": r.symmetric_case,
            "pseudo_symmetric_case": r.pseudo_symmetric_case,
            "pseudo_symmetric_genus": r.pseudo_symmetric_genus,
        }),
    )
}

pub fn almost(sp: &PSemigroup) -> Value {
    let r = symmetry::verify_almost_sym_equivalences(sp);
    verdict(
        sp,
        r.consistent(),
        json!({
            "l_in_pf": r.l_in_pf,
            "pf_is_l_plus_g": r.pf_is_l_plus_g,
            "mirror_or_pf": r.mirror_or_pf,
        }),
    )
}

pub fn pattern(sp: &PSemigroup) -> Value {
    let shape: Pattern = symmetry::detect_pattern(sp);
    let almost = symmetry::verify_pattern_almost_symmetric(sp);
    verdict(
        sp,
        almost != Some(false),
        json!({"pattern": shape.as_str(), "almost_symmetric": almost}),
    )
}

pub fn arf(sp: &PSemigroup) -> Value {
    let r = arf::is_arf(sp);
    let passed =
        r.lemma11.is_none_or(|c| c.passed()) && r.kunz_corollary.is_none_or(|c| c.passed());
    verdict(
        sp,
        passed,
        json!({
            "is_arf": r.is_arf,
            "witness": witness(r.witness),
            "conductor": sp.conductor(),
            "apery_residues": residue_check(r.lemma11),
            "kunz_residues": residue_check(r.kunz_corollary),
        }),
    )
}

pub fn nari(sp: &PSemigroup) -> Option<Value> {
    symmetry::verify_nari(sp).map(|r| {
        verdict(
            sp,
            r.holds(),
            json!({
                "genus": r.genus,
                "frobenius": r.frobenius,
                "type": r.type_p,
                "hypothesis": r.hypothesis,
                "almost_symmetric": r.almost_symmetric,
            }),
        )
    })
}

pub fn formulas(sp: &PSemigroup, max_mu: u32) -> Result<Value> {
    let stats = sp.gap_stats(max_mu)?;
    let sums: Map<String, Value> = stats
        .power_sums
        .iter()
        .map(|(mu, v)| (mu.to_string(), big(v)))
        .collect();
    Ok(verdict(
        sp,
        true,
        json!({
            "genus": stats.genus,
            "sylvester_sum": stats.sylvester_sum,
            "power_sums": sums,
        }),
    ))
}

pub fn prop4(report: &arf::Prop4Report) -> Value {
    json!({
        "a": report.a,
        "b": report.b,
        "applicable": report.applicable,
        "passed": report.passed(),
        "per_p": report.per_p.iter().map(|&(p, ok)| json!({"p": p, "is_arf": ok})).collect::<Vec<_>>(),
    })
}

pub fn eulerian_gf(n: usize, k_max: usize) -> Result<Value> {
    let result = verify_eulerian_gf(n, k_max)?;
    let mismatch = match result {
        SeriesCheck::Pass => Value::Null,
        SeriesCheck::Mismatch(d) => json!(d),
    };
    Ok(json!({
        "n": n,
        "k_max": k_max,
        "passed": result == SeriesCheck::Pass,
        "first_mismatch_degree": mismatch,
    }))
}

//! Arf property of S_p (closure under x + y - z for members x >= y >= z)
//! and the Apéry / Kunz-coordinate constraints it imposes.

use crate::error::Result;
use crate::generators::GeneratorSet;
use crate::psemigroup::PSemigroup;

/// `(actual, expected)` at residues 1 and `a - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueCheck {
    pub first: (u64, u64),
    pub last: (u64, u64),
}

impl ResidueCheck {
    pub fn passed(&self) -> bool {
        self.first.0 == self.first.1 && self.last.0 == self.last.1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArfReport {
    pub is_arf: bool,
    /// `(x, y, z)` with `x >= y >= z` in S_p and `x + y - z` outside.
    pub witness: Option<(u64, u64, u64)>,
    /// Apéry elements at residues 1 and `a - 1`; `None` unless Arf.
    pub lemma11: Option<ResidueCheck>,
    /// Kunz coordinates at residues 1 and `a - 1`; `None` unless Arf.
    pub kunz_corollary: Option<ResidueCheck>,
}

/// First failing triple with `x` below `cutoff`, scanning `x`, `y`, `z`
/// in ascending order.
pub fn arf_witness_below(sp: &PSemigroup, cutoff: u64) -> Option<(u64, u64, u64)> {
    let members: Vec<u64> = (0..cutoff).filter(|&n| sp.contains_u64(n)).collect();
    for (i, &x) in members.iter().enumerate() {
        for (j, &y) in members[..=i].iter().enumerate() {
            for &z in &members[..=j] {
                if !sp.contains_u64(x + y - z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Triples with `x >= c_p` always close up, so scanning below the
/// conductor is exhaustive.
pub fn arf_witness(sp: &PSemigroup) -> Option<(u64, u64, u64)> {
    arf_witness_below(sp, sp.conductor())
}

pub fn is_arf(sp: &PSemigroup) -> ArfReport {
    let witness = arf_witness(sp);
    let mut report = ArfReport {
        is_arf: witness.is_none(),
        witness,
        lemma11: None,
        kunz_corollary: None,
    };
    if report.is_arf {
        let (lemma11, kunz) = residue_checks(sp);
        report.lemma11 = Some(lemma11);
        report.kunz_corollary = Some(kunz);
    }
    report
}

/// Apéry and Kunz constraints at residues 1 and `a - 1`; `None` when S_p is
/// not Arf.
pub fn verify_lemma11_and_kunz(sp: &PSemigroup) -> Option<(ResidueCheck, ResidueCheck)> {
    arf_witness(sp).is_none().then(|| residue_checks(sp))
}

fn residue_checks(sp: &PSemigroup) -> (ResidueCheck, ResidueCheck) {
    let a = sp.modulus();
    let c = sp.conductor();
    let rem = c % a;
    let m = sp.apery_by_residue();
    let k = sp.kunz_coordinates();
    let last = (a - 1) as usize;

    let m1 = if rem == 0 { c + 1 } else { c - rem + a + 1 };
    let lemma11 = ResidueCheck {
        first: (m[1], m1),
        last: (m[last], c - rem + a - 1),
    };
    let kunz = ResidueCheck {
        first: (k[1], c.div_ceil(a)),
        last: (k[last], c / a),
    };
    (lemma11, kunz)
}

/// Whether every S_p(a, b) with `p <= p_max` is Arf, given that `<a, b>`
/// is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop4Report {
    pub a: u64,
    pub b: u64,
    /// `false` when `<a, b>` itself is not Arf.
    pub applicable: bool,
    /// `(p, is_arf)` for `p = 0..=p_max`; empty when not applicable.
    pub per_p: Vec<(u64, bool)>,
}

impl Prop4Report {
    pub fn passed(&self) -> bool {
        self.applicable && self.per_p.iter().all(|&(_, ok)| ok)
    }
}

pub fn verify_prop4(a: u64, b: u64, p_max: u64) -> Result<Prop4Report> {
    let generators = GeneratorSet::new(&[a, b])?;
    let base = PSemigroup::build(&generators, 0)?;
    let applicable = arf_witness(&base).is_none();
    let per_p = if applicable {
        (0..=p_max)
            .map(|p| {
                Ok((
                    p,
                    arf_witness(&PSemigroup::build(&generators, p)?).is_none(),
                ))
            })
            .collect::<Result<_>>()?
    } else {
        Vec::new()
    };
    Ok(Prop4Report {
        a,
        b,
        applicable,
        per_p,
    })
}

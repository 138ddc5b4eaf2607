//! Pseudo-Frobenius numbers, type, the H/L/K decomposition and the symmetry
//! classification of a p-semigroup, with verifiers for the equivalent
//! characterizations.
//!
//! Throughout, `c' = g_p + l_0` is the mirror centre: `x` and `c' - x` are
//! mirror partners.

use crate::psemigroup::PSemigroup;

/// A set containing every integer from `all_from` on, plus the finite
/// exceptional part `below` (all elements `< all_from`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoFinite {
    pub below: Vec<u64>,
    pub all_from: u64,
}

impl CoFinite {
    /// Builds the co-finite set from its members up to `upper`, assuming
    /// everything above `upper` is a member; the threshold is minimal.
    fn from_members(mut members: Vec<u64>, upper: u64) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut all_from = upper + 1;
        while all_from > 0 && members.last() == Some(&(all_from - 1)) {
            members.pop();
            all_from -= 1;
        }
        Self {
            below: members,
            all_from,
        }
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.all_from || self.below.binary_search(&n).is_ok()
    }
}

/// `H_p ∩ N_0`, `L_p` and `K_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HlkSets {
    /// Mirror images of members; always inside `[0, g_p]`.
    pub h: Vec<u64>,
    /// Positions whose mirror pair lies entirely outside `S_p`.
    pub l: Vec<u64>,
    /// Mirror images of non-members (the canonical ideal).
    pub k: CoFinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub pf: Vec<u64>,
    pub type_p: usize,
    pub hlk: HlkSets,
    /// Every non-member has its mirror in `S_p`.
    pub one_sided_mirror: bool,
    pub p_symmetric: bool,
    pub p_pseudo_symmetric: bool,
    pub p_almost_symmetric: bool,
    pub p_completely_symmetric: bool,
}

/// Shape of `S_p` near its least element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pattern {
    /// `[l_0, g_p - 1] ∪ [c_p, ∞)`.
    FullInterval,
    /// `{l_0} ∪ [c_p, ∞)` with at least one gap in between.
    SingletonPlusTail,
    Other,
}

impl Pattern {
    pub fn as_str(self) -> &'static str {
        match self {
            Pattern::FullInterval => "FULL_INTERVAL",
            Pattern::SingletonPlusTail => "SINGLETON_PLUS_TAIL",
            Pattern::Other => "OTHER",
        }
    }
}

fn centre(sp: &PSemigroup) -> i64 {
    (sp.frobenius() + sp.multiplicity()) as i64
}

/// `x` is in exactly one of `S_p` and its mirror.
fn exactly_one(sp: &PSemigroup, x: i64) -> bool {
    sp.contains(x) != sp.contains(centre(sp) - x)
}

pub fn is_pseudo_frobenius(sp: &PSemigroup, x: u64) -> bool {
    if sp.contains_u64(x) {
        return false;
    }
    let l0 = sp.multiplicity();
    // Only s with x + s - l0 <= g can fail.
    let top = sp.frobenius() + l0 - x;
    (l0 + 1..=top)
        .filter(|&s| sp.contains_u64(s))
        .all(|s| sp.contains_u64(x + s - l0))
}

/// `PF_p`, sorted ascending; its maximum is `g_p`.
pub fn pseudo_frobenius(sp: &PSemigroup) -> Vec<u64> {
    sp.gaps()
        .iter()
        .copied()
        .filter(|&x| is_pseudo_frobenius(sp, x))
        .collect()
}

pub fn type_p(sp: &PSemigroup) -> usize {
    pseudo_frobenius(sp).len()
}

pub fn hlk_sets(sp: &PSemigroup) -> HlkSets {
    let c = centre(sp);
    let l0 = sp.multiplicity() as i64;
    let g = sp.frobenius() as i64;

    let mut h: Vec<u64> = (0..=c)
        .filter(|&s| sp.contains(s))
        .map(|s| (c - s) as u64)
        .collect();
    h.sort_unstable();

    let l = (l0 + 1..g)
        .filter(|&x| !sp.contains(x) && !sp.contains(c - x))
        .map(|x| x as u64)
        .collect();

    // Negative non-members map above c, which is the tail.
    let k_members = sp.gaps().iter().map(|&x| (c - x as i64) as u64).collect();
    let k = CoFinite::from_members(k_members, c as u64);

    HlkSets { h, l, k }
}

/// Two-sided mirror condition on every integer except possibly the centre
/// point.
fn mirror_holds(sp: &PSemigroup, skip_midpoint: bool) -> bool {
    let c = centre(sp);
    (0..=c).all(|x| (skip_midpoint && 2 * x == c) || exactly_one(sp, x))
}

pub fn is_p_symmetric(sp: &PSemigroup) -> bool {
    centre(sp) % 2 == 1 && mirror_holds(sp, false)
}

pub fn is_p_pseudo_symmetric(sp: &PSemigroup) -> bool {
    centre(sp) % 2 == 0 && mirror_holds(sp, true)
}

pub fn one_sided_mirror(sp: &PSemigroup) -> bool {
    let c = centre(sp);
    sp.gaps().iter().all(|&x| sp.contains(c - x as i64))
}

pub fn classify(sp: &PSemigroup) -> SymmetryReport {
    let pf = pseudo_frobenius(sp);
    let hlk = hlk_sets(sp);
    let p_symmetric = is_p_symmetric(sp);
    let p_almost_symmetric = hlk.l.iter().all(|x| pf.binary_search(x).is_ok());
    SymmetryReport {
        type_p: pf.len(),
        one_sided_mirror: one_sided_mirror(sp),
        p_symmetric,
        p_pseudo_symmetric: is_p_pseudo_symmetric(sp),
        p_almost_symmetric,
        p_completely_symmetric: p_symmetric && sp.multiplicity() == sp.conductor(),
        pf,
        hlk,
    }
}

/// `(H_p ∩ N_0) ∪ L_p ∪ S_p = N_0`, checked up to the centre (everything
/// beyond it is in `S_p`).
pub fn covers_nonnegative_integers(sp: &PSemigroup, hlk: &HlkSets) -> bool {
    (0..=centre(sp) as u64).all(|n| {
        sp.contains_u64(n) || hlk.h.binary_search(&n).is_ok() || hlk.l.binary_search(&n).is_ok()
    })
}

/// Five characterizations of p-symmetry, each evaluated on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryEquivalences {
    pub definition: bool,
    pub window_counts: bool,
    pub complementary_pairs: bool,
    pub apery_pairing: bool,
    pub genus_identity: bool,
}

impl SymmetryEquivalences {
    pub fn verdicts(&self) -> [bool; 5] {
        [
            self.definition,
            self.window_counts,
            self.complementary_pairs,
            self.apery_pairing,
            self.genus_identity,
        ]
    }

    pub fn consistent(&self) -> bool {
        let v = self.verdicts();
        v.iter().all(|&b| b == v[0])
    }
}

pub fn verify_symmetry_equivalences(sp: &PSemigroup) -> SymmetryEquivalences {
    let l0 = sp.multiplicity() as i64;
    let g = sp.frobenius() as i64;
    let c = l0 + g;

    let width = g - l0 + 1;
    let in_window = (l0..=g).filter(|&x| sp.contains(x)).count() as i64;
    let window_counts = width % 2 == 0 && in_window * 2 == width;

    let complementary_pairs = (0..=c / 2).all(|x| sp.contains(x) != sp.contains(c - x));

    let a = sp.modulus() as usize;
    let l = sp.apery_sorted();
    let target = (c + a as i64) as u64;
    let apery_pairing = (1..=a / 2).all(|i| l[i] + l[a - i - 1] == target);

    let n = sp.genus_enumerated() as i64;
    let genus_identity = 2 * n == c + 1;

    SymmetryEquivalences {
        definition: is_p_symmetric(sp),
        window_counts,
        complementary_pairs,
        apery_pairing,
        genus_identity,
    }
}

/// Residue-indexed Apéry pairings for the symmetric (odd centre) and
/// pseudo-symmetric (even centre) cases. `None` means the parity does not
/// apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingReport {
    pub odd_centre_pairing: Option<bool>,
    pub p_symmetric: bool,
    pub even_centre_pairing: Option<bool>,
    pub p_pseudo_symmetric: bool,
    pub note: &'static str,
}

impl PairingReport {
    pub fn consistent(&self) -> bool {
        self.odd_centre_pairing
            .is_none_or(|v| v == self.p_symmetric)
            && self
                .even_centre_pairing
                .is_none_or(|v| v == self.p_pseudo_symmetric)
    }
}

pub const PAIRING_NOTE: &str = "indices read modulo a with opposite shifts: \
m[(c'+1)/2+j] + m[(c'-1)/2-j] and m[c'/2+j] + m[c'/2-j], j = 0..a-1, c' = g+l0";

pub fn verify_extended_m_pairings(sp: &PSemigroup) -> PairingReport {
    let a = sp.modulus() as i64;
    let m = sp.apery_by_residue();
    let at = |t: i64| m[t.rem_euclid(a) as usize] as i64;
    let c = centre(sp);

    let (odd_centre_pairing, even_centre_pairing) = if c % 2 == 1 {
        let hi = (c + 1) / 2;
        let lo = (c - 1) / 2;
        (Some((0..a).all(|j| at(hi + j) + at(lo - j) == c + a)), None)
    } else {
        let mid = c / 2;
        let ok = (0..a).all(|j| {
            let extra = if j > 0 {
                a
            } else if sp.contains(mid) {
                0
            } else {
                2 * a
            };
            at(mid + j) + at(mid - j) == c + extra
        });
        (None, Some(ok))
    };

    PairingReport {
        odd_centre_pairing,
        p_symmetric: is_p_symmetric(sp),
        even_centre_pairing,
        p_pseudo_symmetric: is_p_pseudo_symmetric(sp),
        note: PAIRING_NOTE,
    }
}

/// Consequences for `PF_p` and `t_p`; `None` when the hypothesis is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfConsequences {
    pub pf: Vec<u64>,
    pub type_p: usize,
    pub symmetric_case: Option<bool>,
    pub pseudo_symmetric_case: Option<bool>,
    /// Pseudo-symmetric genus formula `n = c'/2 + [c'/2 is a gap]`.
    pub pseudo_symmetric_genus: Option<bool>,
}

impl PfConsequences {
    pub fn holds(&self) -> bool {
        self.symmetric_case != Some(false)
            && self.pseudo_symmetric_case != Some(false)
            && self.pseudo_symmetric_genus != Some(false)
    }
}

pub fn verify_pf_consequences(sp: &PSemigroup) -> PfConsequences {
    let pf = pseudo_frobenius(sp);
    let g = sp.frobenius();
    let l0 = sp.multiplicity();

    let symmetric_case = is_p_symmetric(sp).then(|| pf == [g] && (g + l0) % 2 == 1);

    let (pseudo_symmetric_case, pseudo_symmetric_genus) = if is_p_pseudo_symmetric(sp) {
        let mid = (g + l0) / 2;
        let mid_gap = !sp.contains_u64(mid);
        let expected: Vec<u64> = if mid_gap { vec![mid, g] } else { vec![g] };
        let genus = sp.genus_enumerated() == mid + u64::from(mid_gap);
        (Some(pf == expected), Some(genus))
    } else {
        (None, None)
    };

    PfConsequences {
        type_p: pf.len(),
        pf,
        symmetric_case,
        pseudo_symmetric_case,
        pseudo_symmetric_genus,
    }
}

/// Three characterizations of p-almost symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostSymmetricEquivalences {
    pub l_in_pf: bool,
    pub pf_is_l_plus_g: bool,
    pub mirror_or_pf: bool,
}

impl AlmostSymmetricEquivalences {
    pub fn consistent(&self) -> bool {
        self.l_in_pf == self.pf_is_l_plus_g && self.pf_is_l_plus_g == self.mirror_or_pf
    }
}

pub fn verify_almost_sym_equivalences(sp: &PSemigroup) -> AlmostSymmetricEquivalences {
    let pf = pseudo_frobenius(sp);
    let hlk = hlk_sets(sp);
    let c = centre(sp);
    let g = sp.frobenius();

    let l_in_pf = hlk.l.iter().all(|x| pf.binary_search(x).is_ok());

    let mut l_plus_g = hlk.l.clone();
    l_plus_g.push(g);
    l_plus_g.sort_unstable();
    l_plus_g.dedup();
    let pf_is_l_plus_g = pf == l_plus_g;

    let mirror_or_pf = sp
        .gaps()
        .iter()
        .all(|&x| sp.contains(c - x as i64) || pf.binary_search(&x).is_ok());

    AlmostSymmetricEquivalences {
        l_in_pf,
        pf_is_l_plus_g,
        mirror_or_pf,
    }
}

pub fn detect_pattern(sp: &PSemigroup) -> Pattern {
    let l0 = sp.multiplicity();
    let g = sp.frobenius();
    if l0 < g && (l0..g).all(|x| sp.contains_u64(x)) {
        Pattern::FullInterval
    } else if l0 + 1 < g && (l0 + 1..=g).all(|x| !sp.contains_u64(x)) {
        Pattern::SingletonPlusTail
    } else {
        Pattern::Other
    }
}

/// For the two named shapes, whether `S_p` is p-almost symmetric; `None`
/// for any other shape.
pub fn verify_pattern_almost_symmetric(sp: &PSemigroup) -> Option<bool> {
    match detect_pattern(sp) {
        Pattern::Other => None,
        _ => Some(classify(sp).p_almost_symmetric),
    }
}

/// `2 n_0 = g_0 + t_0` implies almost symmetric (p = 0 only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NariReport {
    pub genus: u64,
    pub frobenius: u64,
    pub type_p: usize,
    pub hypothesis: bool,
    pub almost_symmetric: bool,
}

impl NariReport {
    pub fn holds(&self) -> bool {
        !self.hypothesis || self.almost_symmetric
    }
}

pub fn verify_nari(sp: &PSemigroup) -> Option<NariReport> {
    if sp.p() != 0 {
        return None;
    }
    let report = classify(sp);
    let genus = sp.genus_enumerated();
    let frobenius = sp.frobenius();
    Some(NariReport {
        genus,
        frobenius,
        type_p: report.type_p,
        hypothesis: 2 * genus == frobenius + report.type_p as u64,
        almost_symmetric: report.p_almost_symmetric,
    })
}

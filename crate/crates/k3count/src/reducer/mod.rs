//! Symbolic reduction of Gromov-Witten brackets on E(2).
//!
//! A [`Correlator`] is a family bracket GW^H_{S+dF,g}(..) with d formal, or
//! an ordinary trivial-class bracket GW_{0,g}(..). [`reduce`] rewrites it,
//! by the selection rules below, into a linear combination of two atoms
//! with coefficients polynomial in d:
//!
//! - GW1(pt): the family genus-1 bracket with a single point insertion
//! - GW0:     the family genus-0 bracket with no insertions
//!
//! plus a pure scalar part (ordinary brackets evaluate to numbers).
//! Anything the rules do not determine is returned in `irreducible` --
//! irreducibility is data, not an error.
//!
//! Rules, in order:
//! 1. ordinary genus 0: zero unless there are exactly three insertions of
//!    total degree 4; then the triple intersection number
//! 2. ordinary genus 1: zero unless a single insertion; then -1/24 times
//!    the first-Chern pairing, which is identically zero here (c1 = 0)
//! 3. ordinary genus 2 with a descendant insertion: zero
//! 4. family bracket with a unit insertion: zero
//! 5. family divisor rule: a degree-2 insertion b is removed at the cost
//!    of the factor b.(S + dF), a polynomial of degree <= 1 in d
//! 6. family genus 0 with a point constraint: zero (dimension)
//! 7. atoms GW1(pt) and GW0

mod basis;
mod poly;
mod trr;

pub use basis::{k3_deg2_gram, odd_deg2_gram, CohBasis, CohClass, BASIS_SIZE, DEG2_RANK};
pub use poly::PolyInD;
pub use trr::{
    eval_summand, eval_summands, eval_trr_rhs, pf_trr2_check, prop22_gw0, prop22_gw1pt,
    surviving_summands, trr_summands, PfTrr2Report, SurvivingSummand, TrrSummand,
    GENUS1_COMPLETENESS_SUMMAND, GENUS1_EULER_SUMMAND,
};

use std::fmt;

use num_traits::Zero;

use crate::series::{frac, rat, Rat};

/// Family (class S + dF) or ordinary (trivial class) bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Family,
    Ordinary,
}

/// One insertion: a cohomology class with a descendant level
/// (tau = 0 means a primary insertion).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Insertion {
    pub class: CohClass,
    pub tau: u8,
}

impl Insertion {
    pub fn primary(class: CohClass) -> Self {
        Insertion { class, tau: 0 }
    }

    pub fn descendant(class: CohClass, tau: u8) -> Self {
        Insertion { class, tau }
    }
}

/// A symbolic GW bracket. Insertion order never affects reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correlator {
    pub kind: Kind,
    pub genus: u8,
    pub insertions: Vec<Insertion>,
}

impl Correlator {
    pub fn family(genus: u8, insertions: Vec<Insertion>) -> Self {
        Correlator {
            kind: Kind::Family,
            genus,
            insertions,
        }
    }

    pub fn ordinary(genus: u8, insertions: Vec<Insertion>) -> Self {
        Correlator {
            kind: Kind::Ordinary,
            genus,
            insertions,
        }
    }
}

impl fmt::Display for Correlator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Family => write!(f, "GW^H_{}(", self.genus)?,
            Kind::Ordinary => write!(f, "GW_{{0,{}}}(", self.genus)?,
        }
        for (i, ins) in self.insertions.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let name = match ins.class.degree() {
                0 => "1".to_string(),
                4 => "pt".to_string(),
                _ => "deg2".to_string(),
            };
            if ins.tau > 0 {
                write!(f, "tau_{}({})", ins.tau, name)?;
            } else {
                write!(f, "{}", name)?;
            }
        }
        write!(f, ")")
    }
}

/// Which presentation of the square -8 family class to use; the reduction
/// result is identical for both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SfChoice {
    /// (S, F) = (2s, f)
    TwoSF,
    /// (S, F) = (s - 3f, 2f)
    SMinus3F2F,
}

impl SfChoice {
    pub fn as_str(&self) -> &'static str {
        match self {
            SfChoice::TwoSF => "2s,f",
            SfChoice::SMinus3F2F => "s-3f,2f",
        }
    }
}

/// The family curve class S + dF as a pair of degree-2 cohomology classes.
#[derive(Clone, Debug)]
pub struct FamilyClass {
    pub s_part: CohClass,
    pub f_part: CohClass,
}

impl FamilyClass {
    pub fn new(basis: &CohBasis, choice: SfChoice) -> Self {
        let s = basis.section();
        let f = basis.fiber();
        match choice {
            SfChoice::TwoSF => FamilyClass {
                s_part: s.scaled(2),
                f_part: f.clone(),
            },
            SfChoice::SMinus3F2F => FamilyClass {
                s_part: s.minus(&f.scaled(3)),
                f_part: f.scaled(2),
            },
        }
    }

    /// b.(S + dF) as a polynomial in d.
    pub fn divisor_factor(&self, basis: &CohBasis, b: &CohClass) -> PolyInD {
        PolyInD::linear(basis.pair(b, &self.s_part), basis.pair(b, &self.f_part))
    }

    /// (S + dF)^2 = S.S + 2d S.F + d^2 F.F; 4d - 8 for both presentations.
    pub fn square_poly(&self, basis: &CohBasis) -> PolyInD {
        PolyInD::from_coeffs(vec![
            basis.pair(&self.s_part, &self.s_part),
            basis.pair(&self.s_part, &self.f_part) * rat(2),
            basis.pair(&self.f_part, &self.f_part),
        ])
    }
}

/// A bracket reduced to `scalar + gw1pt * GW1(pt) + gw0 * GW0`, with any
/// undetermined remainder listed in `irreducible`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedValue {
    pub gw1pt: PolyInD,
    pub gw0: PolyInD,
    pub scalar: PolyInD,
    pub irreducible: Vec<Correlator>,
}

impl ReducedValue {
    pub fn zero() -> Self {
        ReducedValue {
            gw1pt: PolyInD::zero(),
            gw0: PolyInD::zero(),
            scalar: PolyInD::zero(),
            irreducible: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gw1pt.is_zero()
            && self.gw0.is_zero()
            && self.scalar.is_zero()
            && self.irreducible.is_empty()
    }

    pub fn is_fully_reduced(&self) -> bool {
        self.irreducible.is_empty()
    }

    pub fn add_assign(&mut self, other: &ReducedValue) {
        self.gw1pt = &self.gw1pt + &other.gw1pt;
        self.gw0 = &self.gw0 + &other.gw0;
        self.scalar = &self.scalar + &other.scalar;
        self.irreducible.extend(other.irreducible.iter().cloned());
    }

    pub fn scale(&self, c: &PolyInD) -> ReducedValue {
        if c.is_zero() {
            return ReducedValue::zero();
        }
        ReducedValue {
            gw1pt: &self.gw1pt * c,
            gw0: &self.gw0 * c,
            scalar: &self.scalar * c,
            irreducible: self.irreducible.clone(),
        }
    }
}

/// Lemma value of an ordinary (trivial-class) bracket: Some(value) when the
/// selection rules determine it, None when they do not.
pub(crate) fn eval_ordinary(c: &Correlator, basis: &CohBasis) -> Option<Rat> {
    debug_assert_eq!(c.kind, Kind::Ordinary);
    let k = c.insertions.len();
    let tau_count = c.insertions.iter().filter(|i| i.tau > 0).count();
    match c.genus {
        0 => {
            if tau_count > 0 {
                return None;
            }
            if k != 3 {
                return Some(Rat::zero());
            }
            let total: usize = c.insertions.iter().map(|i| i.class.degree()).sum();
            if total != 4 {
                return Some(Rat::zero());
            }
            Some(triple_intersection(
                basis,
                &c.insertions[0].class,
                &c.insertions[1].class,
                &c.insertions[2].class,
            ))
        }
        1 => {
            if k != 1 {
                return Some(Rat::zero());
            }
            if c.insertions[0].tau > 0 {
                return None;
            }
            // -1/24 c1(alpha); the first Chern class vanishes on a K3
            Some(frac(-1, 24) * c1_pairing(&c.insertions[0].class))
        }
        2 => {
            // descendant vanishing: one tau insertion alongside at most one
            // primary insertion
            if (k == 2 && tau_count == 1) || (k == 1 && tau_count == 1) {
                return Some(Rat::zero());
            }
            None
        }
        _ => None,
    }
}

/// Pairing with the first Chern class of the tangent bundle; identically
/// zero on a K3 surface. Kept as a named hook so the genus-1 rule retains
/// its general shape.
fn c1_pairing(_class: &CohClass) -> Rat {
    Rat::zero()
}

/// Integral over the surface of a cup product of three classes of total
/// degree 4. At least one factor has degree 0, so the value is the
/// pairing of the other two.
fn triple_intersection(basis: &CohBasis, a: &CohClass, b: &CohClass, c: &CohClass) -> Rat {
    let unit_coeff = |x: &CohClass| x.coords()[basis::UNIT_INDEX].clone();
    if a.degree() == 0 {
        return unit_coeff(a) * basis.pair(b, c);
    }
    if b.degree() == 0 {
        return unit_coeff(b) * basis.pair(a, c);
    }
    if c.degree() == 0 {
        return unit_coeff(c) * basis.pair(a, b);
    }
    // total degree of three positive-degree classes exceeds 4
    Rat::zero()
}

/// Family-bracket reduction to the atoms: Some((gw1pt, gw0)) on success,
/// None when the bracket is outside the rule set.
pub(crate) fn reduce_family(
    c: &Correlator,
    family: &FamilyClass,
    basis: &CohBasis,
) -> Option<(PolyInD, PolyInD)> {
    debug_assert_eq!(c.kind, Kind::Family);
    if c.insertions.iter().any(|i| i.tau == 0 && i.class.degree() == 0) {
        return Some((PolyInD::zero(), PolyInD::zero()));
    }
    if c.insertions.iter().any(|i| i.tau > 0) {
        return None;
    }
    let mut factor = PolyInD::constant(rat(1));
    let mut points = 0usize;
    for ins in &c.insertions {
        match ins.class.degree() {
            2 => factor = &factor * &family.divisor_factor(basis, &ins.class),
            4 => points += 1,
            _ => unreachable!("unit insertions already handled"),
        }
    }
    match (c.genus, points) {
        (0, 0) => Some((PolyInD::zero(), factor)),
        (0, _) => Some((PolyInD::zero(), PolyInD::zero())),
        (1, 1) => Some((factor, PolyInD::zero())),
        _ => None,
    }
}

/// Reduce a single bracket against the given family class.
pub fn reduce(c: &Correlator, family: &FamilyClass, basis: &CohBasis) -> ReducedValue {
    match c.kind {
        Kind::Ordinary => match eval_ordinary(c, basis) {
            Some(v) => ReducedValue {
                gw1pt: PolyInD::zero(),
                gw0: PolyInD::zero(),
                scalar: PolyInD::constant(v),
                irreducible: Vec::new(),
            },
            None => ReducedValue {
                gw1pt: PolyInD::zero(),
                gw0: PolyInD::zero(),
                scalar: PolyInD::zero(),
                irreducible: vec![c.clone()],
            },
        },
        Kind::Family => match reduce_family(c, family, basis) {
            Some((gw1pt, gw0)) => ReducedValue {
                gw1pt,
                gw0,
                scalar: PolyInD::zero(),
                irreducible: Vec::new(),
            },
            None => ReducedValue {
                gw1pt: PolyInD::zero(),
                gw0: PolyInD::zero(),
                scalar: PolyInD::zero(),
                irreducible: vec![c.clone()],
            },
        },
    }
}

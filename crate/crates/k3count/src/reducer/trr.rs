//! The genus-2 topological recursion for the family bracket
//! GW^H_{S+dF,2}(tau_1(F), tau_2(F)), transcribed as 24 summand lines and
//! evaluated by expanding every dual-basis sum concretely over the
//! 24-element basis.
//!
//! Each summand line carries a rational coefficient and one or two
//! products of bracket factors; exactly one factor per product is a family
//! bracket. Insertions are symbols: F, H_a / H^a, H_b / H^b (basis / dual,
//! indexed by the summation variables), each with a descendant level.

use std::fmt;

use num_traits::Zero;

use crate::series::{frac, rat, rat_string, Rat};

use super::basis::BASIS_SIZE;
use super::poly::PolyInD;
use super::{
    eval_ordinary, reduce_family, CohBasis, CohClass, Correlator, FamilyClass, Insertion, Kind,
    ReducedValue, SfChoice,
};

/// Summation variable of a dual-basis sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum IndexVar {
    A,
    B,
}

/// Symbolic insertion slot before index resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sym {
    /// The fiber-type divisor F of the family class.
    FiberF,
    /// H_a or H_b.
    Basis(IndexVar),
    /// H^a or H^b.
    Dual(IndexVar),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymInsertion {
    pub sym: Sym,
    pub tau: u8,
}

/// One bracket factor of a product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSpec {
    pub kind: Kind,
    pub genus: u8,
    pub insertions: Vec<SymInsertion>,
}

/// A product of factors; exactly one factor is a family bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSpec {
    pub factors: Vec<FactorSpec>,
}

/// One displayed summand line of the recursion.
#[derive(Clone, Debug)]
pub struct TrrSummand {
    pub coeff: Rat,
    pub sums_over_b: bool,
    pub products: Vec<ProductSpec>,
}

fn ins(sym: Sym, tau: u8) -> SymInsertion {
    SymInsertion { sym, tau }
}

fn fam(genus: u8, insertions: Vec<SymInsertion>) -> FactorSpec {
    FactorSpec {
        kind: Kind::Family,
        genus,
        insertions,
    }
}

fn ord(genus: u8, insertions: Vec<SymInsertion>) -> FactorSpec {
    FactorSpec {
        kind: Kind::Ordinary,
        genus,
        insertions,
    }
}

fn product(factors: Vec<FactorSpec>) -> ProductSpec {
    ProductSpec { factors }
}

/// The 24 summand lines. Symbol shorthand inside this table:
/// F = fiber divisor, a/b = H_a/H_b, A/B = H^a/H^b.
pub fn trr_summands() -> Vec<TrrSummand> {
    use IndexVar::{A, B};
    use Sym::{Basis, Dual, FiberF};
    let f = |tau| ins(FiberF, tau);
    let ha = || ins(Basis(A), 0);
    let hb = || ins(Basis(B), 0);
    let da = |tau| ins(Dual(A), tau);
    let db = || ins(Dual(B), 0);

    vec![
        TrrSummand {
            coeff: rat(2),
            sums_over_b: false,
            products: vec![
                product(vec![fam(2, vec![f(1), ha()]), ord(0, vec![da(0), f(0)])]),
                product(vec![ord(2, vec![f(1), ha()]), fam(0, vec![da(0), f(0)])]),
            ],
        },
        TrrSummand {
            coeff: rat(-1),
            sums_over_b: true,
            products: vec![product(vec![
                fam(0, vec![f(0), ha()]),
                ord(0, vec![f(0), hb()]),
                ord(2, vec![da(0), db()]),
            ])],
        },
        TrrSummand {
            coeff: rat(-1),
            sums_over_b: true,
            products: vec![product(vec![
                ord(0, vec![f(0), ha()]),
                fam(0, vec![f(0), hb()]),
                ord(2, vec![da(0), db()]),
            ])],
        },
        TrrSummand {
            coeff: rat(-1),
            sums_over_b: true,
            products: vec![product(vec![
                ord(0, vec![f(0), ha()]),
                ord(0, vec![f(0), hb()]),
                fam(2, vec![da(0), db()]),
            ])],
        },
        TrrSummand {
            coeff: rat(3),
            sums_over_b: false,
            products: vec![
                product(vec![fam(0, vec![f(0), f(0), ha()]), ord(2, vec![da(1)])]),
                product(vec![ord(0, vec![f(0), f(0), ha()]), fam(2, vec![da(1)])]),
            ],
        },
        TrrSummand {
            coeff: rat(-3),
            sums_over_b: true,
            products: vec![product(vec![
                fam(0, vec![f(0), f(0), ha()]),
                ord(0, vec![da(0), hb()]),
                ord(2, vec![db()]),
            ])],
        },
        TrrSummand {
            coeff: rat(-3),
            sums_over_b: true,
            products: vec![product(vec![
                ord(0, vec![f(0), f(0), ha()]),
                fam(0, vec![da(0), hb()]),
                ord(2, vec![db()]),
            ])],
        },
        TrrSummand {
            coeff: rat(-3),
            sums_over_b: true,
            products: vec![product(vec![
                ord(0, vec![f(0), f(0), ha()]),
                ord(0, vec![da(0), hb()]),
                fam(2, vec![db()]),
            ])],
        },
        TrrSummand {
            coeff: frac(13, 10),
            sums_over_b: true,
            products: vec![product(vec![
                fam(0, vec![f(0), f(0), ha(), hb()]),
                ord(1, vec![da(0)]),
                ord(1, vec![db()]),
            ])],
        },
        TrrSummand {
            coeff: frac(13, 10),
            sums_over_b: true,
            products: vec![product(vec![
                ord(0, vec![f(0), f(0), ha(), hb()]),
                fam(1, vec![da(0)]),
                ord(1, vec![db()]),
            ])],
        },
        TrrSummand {
            coeff: frac(13, 10),
            sums_over_b: true,
            products: vec![product(vec![
                ord(0, vec![f(0), f(0), ha(), hb()]),
                ord(1, vec![da(0)]),
                fam(1, vec![db()]),
            ])],
        },
        TrrSummand {
            coeff: frac(8, 5),
            sums_over_b: true,
            products: vec![product(vec![
                fam(1, vec![f(0), ha()]),
                ord(0, vec![da(0), f(0), hb()]),
                ord(1, vec![db()]),
            ])],
        },
        TrrSummand {
            coeff: frac(8, 5),
            sums_over_b: true,
            products: vec![product(vec![
                ord(1, vec![f(0), ha()]),
                fam(0, vec![da(0), f(0), hb()]),
                ord(1, vec![db()]),
            ])],
        },
        TrrSummand {
            coeff: frac(8, 5),
            sums_over_b: true,
            products: vec![product(vec![
                ord(1, vec![f(0), ha()]),
                ord(0, vec![da(0), f(0), hb()]),
                fam(1, vec![db()]),
            ])],
        },
        TrrSummand {
            coeff: frac(-4, 5),
            sums_over_b: true,
            products: vec![product(vec![
                fam(0, vec![f(0), f(0), ha()]),
                ord(1, vec![da(0), hb()]),
                ord(1, vec![db()]),
            ])],
        },
        TrrSummand {
            coeff: frac(-4, 5),
            sums_over_b: true,
            products: vec![product(vec![
                ord(0, vec![f(0), f(0), ha()]),
                fam(1, vec![da(0), hb()]),
                ord(1, vec![db()]),
            ])],
        },
        TrrSummand {
            coeff: frac(-4, 5),
            sums_over_b: true,
            products: vec![product(vec![
                ord(0, vec![f(0), f(0), ha()]),
                ord(1, vec![da(0), hb()]),
                fam(1, vec![db()]),
            ])],
        },
        TrrSummand {
            coeff: frac(23, 240),
            sums_over_b: true,
            products: vec![
                product(vec![
                    fam(0, vec![f(0), f(0), ha(), da(0), hb()]),
                    ord(1, vec![hb()]),
                ]),
                product(vec![
                    ord(0, vec![f(0), f(0), ha(), da(0), hb()]),
                    fam(1, vec![hb()]),
                ]),
            ],
        },
        TrrSummand {
            coeff: frac(2, 48),
            sums_over_b: true,
            products: vec![
                product(vec![
                    fam(0, vec![f(0), ha(), da(0), hb()]),
                    ord(1, vec![hb(), f(0)]),
                ]),
                product(vec![
                    ord(0, vec![f(0), ha(), da(0), hb()]),
                    fam(1, vec![hb(), f(0)]),
                ]),
            ],
        },
        TrrSummand {
            coeff: frac(-1, 80),
            sums_over_b: true,
            products: vec![
                product(vec![
                    fam(1, vec![f(0), f(0), ha()]),
                    ord(0, vec![da(0), hb(), db()]),
                ]),
                product(vec![
                    ord(1, vec![f(0), f(0), ha()]),
                    fam(0, vec![da(0), hb(), db()]),
                ]),
            ],
        },
        TrrSummand {
            coeff: frac(7, 30),
            sums_over_b: true,
            products: vec![
                product(vec![
                    fam(0, vec![f(0), f(0), ha(), hb()]),
                    ord(1, vec![da(0), db()]),
                ]),
                product(vec![
                    ord(0, vec![f(0), f(0), ha(), hb()]),
                    fam(1, vec![da(0), db()]),
                ]),
            ],
        },
        TrrSummand {
            coeff: frac(2, 30),
            sums_over_b: true,
            products: vec![
                product(vec![
                    fam(0, vec![f(0), ha(), hb()]),
                    ord(1, vec![da(0), db(), f(0)]),
                ]),
                product(vec![
                    ord(0, vec![f(0), ha(), hb()]),
                    fam(1, vec![da(0), db(), f(0)]),
                ]),
            ],
        },
        TrrSummand {
            coeff: frac(-1, 30),
            sums_over_b: true,
            products: vec![
                product(vec![
                    fam(0, vec![f(0), f(0), ha()]),
                    ord(1, vec![da(0), hb(), db()]),
                ]),
                product(vec![
                    ord(0, vec![f(0), f(0), ha()]),
                    fam(1, vec![da(0), hb(), db()]),
                ]),
            ],
        },
        TrrSummand {
            coeff: frac(1, 576),
            sums_over_b: true,
            products: vec![product(vec![fam(
                0,
                vec![f(0), f(0), ha(), da(0), hb(), db()],
            )])],
        },
    ]
}

fn resolve(si: &SymInsertion, family: &FamilyClass, basis: &CohBasis, a: usize, b: usize) -> Insertion {
    let class = match si.sym {
        Sym::FiberF => family.f_part.clone(),
        Sym::Basis(IndexVar::A) => CohClass::basis_element(a),
        Sym::Dual(IndexVar::A) => basis.dual_class(a).clone(),
        Sym::Basis(IndexVar::B) => CohClass::basis_element(b),
        Sym::Dual(IndexVar::B) => basis.dual_class(b).clone(),
    };
    Insertion {
        class,
        tau: si.tau,
    }
}

/// Evaluate one summand line: expand its dual-basis sums over the basis,
/// reduce every bracket, and total the contributions. Products where some
/// ordinary factor vanishes contribute nothing; an undetermined factor in
/// a cell that no zero factor kills is reported as irreducible.
pub fn eval_summand(
    summand: &TrrSummand,
    family: &FamilyClass,
    basis: &CohBasis,
) -> ReducedValue {
    let mut total = ReducedValue::zero();
    let b_range = if summand.sums_over_b {
        0..BASIS_SIZE
    } else {
        0..1
    };
    for prod in &summand.products {
        for a in 0..BASIS_SIZE {
            'cells: for b in b_range.clone() {
                let mut scalar = summand.coeff.clone();
                let mut family_factor: Option<Correlator> = None;
                let mut undetermined: Vec<Correlator> = Vec::new();
                for spec in &prod.factors {
                    let correlator = Correlator {
                        kind: spec.kind,
                        genus: spec.genus,
                        insertions: spec
                            .insertions
                            .iter()
                            .map(|si| resolve(si, family, basis, a, b))
                            .collect(),
                    };
                    match spec.kind {
                        Kind::Ordinary => match eval_ordinary(&correlator, basis) {
                            Some(v) if v.is_zero() => continue 'cells,
                            Some(v) => scalar *= v,
                            None => undetermined.push(correlator),
                        },
                        Kind::Family => family_factor = Some(correlator),
                    }
                }
                if !undetermined.is_empty() {
                    // no ordinary factor vanished, so these cannot be dropped
                    total.irreducible.extend(undetermined);
                    continue;
                }
                let correlator = family_factor.expect("each product has a family factor");
                match reduce_family(&correlator, family, basis) {
                    Some((gw1pt, gw0)) => {
                        let weight = PolyInD::constant(scalar);
                        total.gw1pt = &total.gw1pt + &(&gw1pt * &weight);
                        total.gw0 = &total.gw0 + &(&gw0 * &weight);
                    }
                    None => total.irreducible.push(correlator),
                }
            }
        }
    }
    total
}

/// Evaluate a whole summand table.
pub fn eval_summands(
    summands: &[TrrSummand],
    basis: &CohBasis,
    choice: SfChoice,
) -> ReducedValue {
    let family = FamilyClass::new(basis, choice);
    let mut total = ReducedValue::zero();
    for summand in summands {
        total.add_assign(&eval_summand(summand, &family, basis));
    }
    total
}

/// Evaluate the full recursion right-hand side.
pub fn eval_trr_rhs(basis: &CohBasis, choice: SfChoice) -> ReducedValue {
    eval_summands(&trr_summands(), basis, choice)
}

/// Expected closed form: coefficient of GW1(pt) is -2/3.
pub fn prop22_gw1pt() -> PolyInD {
    PolyInD::constant(frac(-2, 3))
}

/// Expected closed form: coefficient of GW0 is (d - 2)^2 / 9.
pub fn prop22_gw0() -> PolyInD {
    PolyInD::from_coeffs(vec![frac(4, 9), frac(-4, 9), frac(1, 9)])
}

/// A surviving summand after the selection rules: its reduced coefficient
/// and a canonical text form of the product shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurvivingSummand {
    pub coeff: Rat,
    pub shape: String,
}

impl fmt::Display for SurvivingSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {}", rat_string(&self.coeff), self.shape)
    }
}

/// Apply only the ordinary-bracket selection rules: a product survives
/// when some index assignment leaves every ordinary factor nonzero. The
/// survivors are canonicalized (family factor first, basis/dual flipped so
/// the family factor uses plain basis symbols, insertions sorted) and
/// their coefficients reduced.
pub fn surviving_summands(
    summands: &[TrrSummand],
    basis: &CohBasis,
    choice: SfChoice,
) -> Vec<SurvivingSummand> {
    let family = FamilyClass::new(basis, choice);
    let mut out = Vec::new();
    for summand in summands {
        for prod in &summand.products {
            if product_survives(prod, summand.sums_over_b, &family, basis) {
                out.push(SurvivingSummand {
                    coeff: summand.coeff.clone(),
                    shape: canonical_shape(prod),
                });
            }
        }
    }
    out
}

fn product_survives(
    prod: &ProductSpec,
    sums_over_b: bool,
    family: &FamilyClass,
    basis: &CohBasis,
) -> bool {
    let b_range = if sums_over_b { 0..BASIS_SIZE } else { 0..1 };
    for a in 0..BASIS_SIZE {
        'cells: for b in b_range.clone() {
            for spec in prod.factors.iter().filter(|s| s.kind == Kind::Ordinary) {
                let correlator = Correlator {
                    kind: Kind::Ordinary,
                    genus: spec.genus,
                    insertions: spec
                        .insertions
                        .iter()
                        .map(|si| resolve(si, family, basis, a, b))
                        .collect(),
                };
                match eval_ordinary(&correlator, basis) {
                    Some(v) if v.is_zero() => continue 'cells,
                    _ => {}
                }
            }
            return true;
        }
    }
    false
}

/// Canonical text for a product: flip basis and dual for every index the
/// family factor reads through duals (legitimate by relabeling the
/// dual-basis sum), put the family factor first, and sort insertions.
fn canonical_shape(prod: &ProductSpec) -> String {
    let family_spec = prod
        .factors
        .iter()
        .find(|s| s.kind == Kind::Family)
        .expect("each product has a family factor");
    let flip_var = |v: IndexVar| {
        family_spec
            .insertions
            .iter()
            .any(|si| si.sym == Sym::Dual(v))
            && !family_spec
                .insertions
                .iter()
                .any(|si| si.sym == Sym::Basis(v))
    };
    let flip_a = flip_var(IndexVar::A);
    let flip_b = flip_var(IndexVar::B);
    let flip = |sym: Sym| match sym {
        Sym::Basis(v) if (v == IndexVar::A && flip_a) || (v == IndexVar::B && flip_b) => {
            Sym::Dual(v)
        }
        Sym::Dual(v) if (v == IndexVar::A && flip_a) || (v == IndexVar::B && flip_b) => {
            Sym::Basis(v)
        }
        other => other,
    };

    let mut factors: Vec<&FactorSpec> = prod.factors.iter().collect();
    factors.sort_by_key(|s| match s.kind {
        Kind::Family => 0,
        Kind::Ordinary => 1,
    });
    let mut parts = Vec::new();
    for spec in factors {
        let mut syms: Vec<SymInsertion> = spec
            .insertions
            .iter()
            .map(|si| SymInsertion {
                sym: flip(si.sym),
                tau: si.tau,
            })
            .collect();
        syms.sort_by_key(|si| sym_rank(si.sym));
        let body: Vec<String> = syms.iter().map(sym_text).collect();
        let head = match spec.kind {
            Kind::Family => format!("GW^H_{}", spec.genus),
            Kind::Ordinary => format!("GW_{{0,{}}}", spec.genus),
        };
        parts.push(format!("{}({})", head, body.join(",")));
    }
    parts.join(" ")
}

fn sym_rank(sym: Sym) -> u8 {
    match sym {
        Sym::FiberF => 0,
        Sym::Basis(IndexVar::A) => 1,
        Sym::Dual(IndexVar::A) => 2,
        Sym::Basis(IndexVar::B) => 3,
        Sym::Dual(IndexVar::B) => 4,
    }
}

fn sym_text(si: &SymInsertion) -> String {
    let name = match si.sym {
        Sym::FiberF => "F",
        Sym::Basis(IndexVar::A) => "H_a",
        Sym::Dual(IndexVar::A) => "H^a",
        Sym::Basis(IndexVar::B) => "H_b",
        Sym::Dual(IndexVar::B) => "H^b",
    };
    if si.tau > 0 {
        format!("tau_{}({})", si.tau, name)
    } else {
        name.to_string()
    }
}

/// The two genus-1 sums that survive the selection rules, collapsed by
/// completeness: the -1/80 sum contributes -6/5 (Euler trace 24 times
/// (F.A)^2 = 4), the 1/15 sum contributes 8/15, totalling -2/3.
#[derive(Clone, Debug)]
pub struct PfTrr2Report {
    pub sub_sum_via_euler: Rat,
    pub sub_sum_via_completeness: Rat,
    pub total: Rat,
    pub ok: bool,
}

/// Summand-table positions of the two genus-1 survivors.
pub const GENUS1_EULER_SUMMAND: usize = 19; // the -1/80 line
pub const GENUS1_COMPLETENESS_SUMMAND: usize = 21; // the 2/30 line

pub fn pf_trr2_check(summands: &[TrrSummand], basis: &CohBasis, choice: SfChoice) -> PfTrr2Report {
    let family = FamilyClass::new(basis, choice);
    let first = eval_summand(&summands[GENUS1_EULER_SUMMAND], &family, basis);
    let second = eval_summand(&summands[GENUS1_COMPLETENESS_SUMMAND], &family, basis);
    let sub1 = first.gw1pt.coeff(0);
    let sub2 = second.gw1pt.coeff(0);
    let total = &sub1 + &sub2;
    let ok = first.gw1pt.degree().is_none_or(|d| d == 0)
        && second.gw1pt.degree().is_none_or(|d| d == 0)
        && first.gw0.is_zero()
        && second.gw0.is_zero()
        && first.is_fully_reduced()
        && second.is_fully_reduced()
        && sub1 == frac(-6, 5)
        && sub2 == frac(8, 15)
        && total == frac(-2, 3);
    PfTrr2Report {
        sub_sum_via_euler: sub1,
        sub_sum_via_completeness: sub2,
        total,
        ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reducer::odd_deg2_gram;
    use crate::reducer::DEG2_RANK;

    #[test]
    fn table_has_24_summands_each_with_one_family_factor_per_product() {
        let summands = trr_summands();
        assert_eq!(summands.len(), 24);
        let mut product_count = 0;
        for t in &summands {
            for p in &t.products {
                product_count += 1;
                let family_factors = p
                    .factors
                    .iter()
                    .filter(|f| f.kind == Kind::Family)
                    .count();
                assert_eq!(family_factors, 1);
            }
        }
        assert_eq!(product_count, 32);
    }

    #[test]
    fn full_reduction_matches_the_closed_form() {
        let basis = CohBasis::build();
        for choice in [SfChoice::TwoSF, SfChoice::SMinus3F2F] {
            let value = eval_trr_rhs(&basis, choice);
            assert!(value.is_fully_reduced(), "{choice:?}");
            assert_eq!(value.gw1pt, prop22_gw1pt(), "{choice:?}");
            assert_eq!(value.gw0, prop22_gw0(), "{choice:?}");
            assert!(value.scalar.is_zero());
        }
    }

    #[test]
    fn selection_rules_leave_the_three_expected_sums() {
        let basis = CohBasis::build();
        let survivors = surviving_summands(&trr_summands(), &basis, SfChoice::TwoSF);
        assert_eq!(survivors.len(), 3);
        assert_eq!(survivors[0].coeff, frac(-1, 80));
        assert_eq!(survivors[0].shape, "GW^H_1(F,F,H_a) GW_{0,0}(H^a,H_b,H^b)");
        assert_eq!(survivors[1].coeff, frac(1, 15)); // printed as 2/30
        assert_eq!(survivors[1].shape, "GW^H_1(F,H_a,H_b) GW_{0,0}(F,H^a,H^b)");
        assert_eq!(survivors[2].coeff, frac(1, 576));
        assert_eq!(
            survivors[2].shape,
            "GW^H_0(F,F,H_a,H^a,H_b,H^b)"
        );
    }

    #[test]
    fn genus1_sums_collapse_to_minus_two_thirds() {
        let basis = CohBasis::build();
        let summands = trr_summands();
        assert_eq!(summands[GENUS1_EULER_SUMMAND].coeff, frac(-1, 80));
        assert_eq!(summands[GENUS1_COMPLETENESS_SUMMAND].coeff, frac(2, 30));
        let report = pf_trr2_check(&summands, &basis, SfChoice::TwoSF);
        assert!(report.ok);
        assert_eq!(report.sub_sum_via_euler, frac(-6, 5));
        assert_eq!(report.sub_sum_via_completeness, frac(8, 15));
        assert_eq!(report.total, frac(-2, 3));
    }

    #[test]
    fn the_1_576_summand_gives_the_squared_class() {
        let basis = CohBasis::build();
        let family = FamilyClass::new(&basis, SfChoice::TwoSF);
        let summands = trr_summands();
        let last = summands.last().unwrap();
        assert_eq!(last.coeff, frac(1, 576));
        let value = eval_summand(last, &family, &basis);
        // (4/576) (4d-8)^2
        let square = family.square_poly(&basis);
        let expected = (&square * &square).scale(&frac(4, 576));
        assert_eq!(value.gw0, expected);
        assert_eq!(value.gw0, prop22_gw0());
        assert!(value.gw1pt.is_zero() && value.is_fully_reduced());
    }

    #[test]
    fn reduction_is_basis_independent() {
        let basis = CohBasis::build();
        let mut s22 = [0i64; DEG2_RANK];
        s22[3] = -1;
        s22[4] = 1;
        let mut f22 = [0i64; DEG2_RANK];
        f22[0] = 1;
        f22[3] = 1;
        let alt = CohBasis::build_with_deg2_gram(&odd_deg2_gram(), &s22, &f22);
        for choice in [SfChoice::TwoSF, SfChoice::SMinus3F2F] {
            let a = eval_trr_rhs(&basis, choice);
            let b = eval_trr_rhs(&alt, choice);
            assert_eq!(a.gw1pt, b.gw1pt);
            assert_eq!(a.gw0, b.gw0);
            assert!(a.is_fully_reduced() && b.is_fully_reduced());
        }
    }
}

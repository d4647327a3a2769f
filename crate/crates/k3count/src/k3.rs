//! Generating functions for elliptic-curve counts in the elliptic K3
//! surface E(2), and the Goettsche-Yau-Zaslow count table.
//!
//! Conventions. The curve lattice is spanned by the section class s
//! (s^2 = -2) and the fiber class f (f^2 = 0, s.f = 1). The genus-g series
//! are indexed by the fiber degree d:
//!
//! - N_g(t): classes s + d f        (primitive, square 2d - 2)
//! - P_g(t): classes (s - 3f) + d(2f)  (primitive, square 4d - 8)
//! - M_g(t): classes 2s + d f       (index 2 for even d, square 4d - 8)
//!
//! N0 is the inverse eta-power product normalized to N0[0] = 1 (the rigid
//! section). P_g is a reindexing of N_g: (s - 3f) + 2df and s + (2d - 3)f
//! are primitive of equal square, and the invariants depend only on square
//! and index.

use num_integer::Integer;
use num_traits::Zero;

use crate::qseries::{cover_count, eta24_inverse, g2};
use crate::series::{frac, mul, rat, PowerSeries, Rat};

/// An element a*s + b*f of the E(2) curve lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveClass {
    pub a: i64,
    pub b: i64,
}

impl CurveClass {
    pub fn new(a: i64, b: i64) -> Self {
        CurveClass { a, b }
    }

    /// Self-intersection -2a^2 + 2ab; always even.
    pub fn square(&self) -> i64 {
        -2 * self.a * self.a + 2 * self.a * self.b
    }

    /// Largest r such that the class divided by r stays integral
    /// (gcd convention: index of 0*s + b*f is |b|).
    pub fn index(&self) -> i64 {
        self.a.abs().gcd(&self.b.abs())
    }

    pub fn is_primitive(&self) -> bool {
        self.index() == 1
    }
}

/// Which generating function a [`FamilySeries`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyId {
    N0,
    N1,
    P0,
    P1,
    D0,
    M0,
    M1Theorem,
    M1Ode,
    Gyz1,
}

impl FamilyId {
    pub const ALL: [FamilyId; 9] = [
        FamilyId::N0,
        FamilyId::N1,
        FamilyId::P0,
        FamilyId::P1,
        FamilyId::D0,
        FamilyId::M0,
        FamilyId::M1Theorem,
        FamilyId::M1Ode,
        FamilyId::Gyz1,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyId::N0 => "n0",
            FamilyId::N1 => "n1",
            FamilyId::P0 => "p0",
            FamilyId::P1 => "p1",
            FamilyId::D0 => "d0",
            FamilyId::M0 => "m0",
            FamilyId::M1Theorem => "m1-theorem",
            FamilyId::M1Ode => "m1-ode",
            FamilyId::Gyz1 => "gyz1",
        }
    }

    pub fn parse(name: &str) -> Option<FamilyId> {
        Self::ALL.iter().copied().find(|id| id.as_str() == name)
    }
}

/// A named generating function together with the recipe that built it.
#[derive(Clone, Debug)]
pub struct FamilySeries {
    pub id: FamilyId,
    pub series: PowerSeries,
    pub provenance: &'static str,
}

/// One row of the count table: d = 4e - 3 is the only range where an
/// index-2 class A with A^2 = 2d - 2 exists (the square of an index-2
/// class is divisible by 8).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub e: usize,
    pub d: usize,
    pub n1_index1: Rat,
    pub n1_index2: Rat,
    pub agree: bool,
}

/// N0: the inverse eta-power product, with N0[0] = 1 for the rigid section.
pub fn n0(order: usize) -> PowerSeries {
    eta24_inverse(order)
}

/// N1 = theta(G2) * N0.
pub fn n1(order: usize) -> PowerSeries {
    mul(&g2(order).theta(), &n0(order))
}

/// P_g at `order` needs N_g out to 2*order - 3.
fn p_from_n(n_series: &PowerSeries, order: usize) -> PowerSeries {
    n_series.reindex(2, -3).truncate(order)
}

fn n_base_order(order: usize) -> usize {
    (2 * order).saturating_sub(3).max(order)
}

pub fn p0(order: usize) -> PowerSeries {
    p_from_n(&n0(n_base_order(order)), order)
}

pub fn p1(order: usize) -> PowerSeries {
    p_from_n(&n1(n_base_order(order)), order)
}

/// D0 = (1/8) N0(t^2), the double-cover part of M0.
pub fn d0(order: usize) -> PowerSeries {
    n0(order).compose_power(2).scale(&frac(1, 8))
}

/// M0 = P0 + (1/8) N0(t^2).
pub fn m0(order: usize) -> PowerSeries {
    &p0(order) + &d0(order)
}

/// M1 = P1 + 2 N1(t^2), the index-two structure theorem route.
pub fn m1_theorem(order: usize) -> PowerSeries {
    &p1(order) + &n1(order).compose_power(2).scale(&rat(2))
}

/// The Goettsche-Yau-Zaslow right-hand side t G2'(t) prod (1 - t^l)^{-24};
/// same factors as [`n1`], wired independently.
pub fn gyz(order: usize) -> PowerSeries {
    mul(&g2(order).theta(), &eta24_inverse(order))
}

/// Solve the second-order recursion for the genus-1 series H1 in terms of
/// the genus-0 series H0 of the same family:
///
///   (1/9) t^2 H0'' - (1/3) t H0' + (4/9) H0 - (8/3) H1
///     = (20/3) G2 t H0' - (64 G2^2 + (40/3) G2 - 8 t G2') H0
///
/// Everything is expressed through theta = t d/dt (t^2 H0'' is
/// theta^2 H0 - theta H0), so no truncation order is lost.
pub fn h1_from_ode(h0: &PowerSeries) -> PowerSeries {
    let order = h0.order();
    assert!(order >= 2, "h1_from_ode needs at least order 2");
    let g = g2(order);
    let th = h0.theta();
    let t2_h0pp = &th.theta() - &th;
    let lhs = &(&t2_h0pp.scale(&frac(1, 9)) - &th.scale(&frac(1, 3))) + &h0.scale(&frac(4, 9));
    let bracket = &(&mul(&g, &g).scale(&rat(64)) + &g.scale(&frac(40, 3))) - &g.theta().scale(&rat(8));
    let rhs = &mul(&g, &th).scale(&frac(20, 3)) - &mul(&bracket, h0);
    (&lhs - &rhs).scale(&frac(3, 8))
}

/// All nine generating functions built at one truncation order.
pub struct K3System {
    pub order: usize,
    pub n0: FamilySeries,
    pub n1: FamilySeries,
    pub p0: FamilySeries,
    pub p1: FamilySeries,
    pub d0: FamilySeries,
    pub m0: FamilySeries,
    pub m1_theorem: FamilySeries,
    pub m1_ode: FamilySeries,
    pub gyz1: FamilySeries,
}

impl K3System {
    pub fn build(order: usize) -> K3System {
        assert!(order >= 2, "the family system needs order >= 2");
        let base = n_base_order(order);
        let g2_base = g2(base);
        let n0_base = eta24_inverse(base);
        let n1_base = mul(&g2_base.theta(), &n0_base);

        let n0s = n0_base.truncate(order);
        let n1s = n1_base.truncate(order);
        let p0s = p_from_n(&n0_base, order);
        let p1s = p_from_n(&n1_base, order);
        let d0s = n0s.compose_power(2).scale(&frac(1, 8));
        let m0s = &p0s + &d0s;
        let m1t = &p1s + &n1s.compose_power(2).scale(&rat(2));
        let m1o = h1_from_ode(&m0s);
        let gyzs = mul(&g2_base.truncate(order).theta(), &n0s);

        // parity: the doubled parts live in even exponents only
        for k in (1..=order).step_by(2) {
            assert!(d0s[k].is_zero(), "d0 must vanish at odd exponent {k}");
            assert!(
                m1t[k] == p1s[k],
                "m1 and p1 must agree at odd exponent {k}"
            );
        }

        K3System {
            order,
            n0: FamilySeries {
                id: FamilyId::N0,
                series: n0s,
                provenance: "eta24-inverse",
            },
            n1: FamilySeries {
                id: FamilyId::N1,
                series: n1s,
                provenance: "theta(g2) * n0",
            },
            p0: FamilySeries {
                id: FamilyId::P0,
                series: p0s,
                provenance: "reindex(n0, 2, -3)",
            },
            p1: FamilySeries {
                id: FamilyId::P1,
                series: p1s,
                provenance: "reindex(n1, 2, -3)",
            },
            d0: FamilySeries {
                id: FamilyId::D0,
                series: d0s,
                provenance: "(1/8) n0(t^2)",
            },
            m0: FamilySeries {
                id: FamilyId::M0,
                series: m0s,
                provenance: "p0 + (1/8) n0(t^2)",
            },
            m1_theorem: FamilySeries {
                id: FamilyId::M1Theorem,
                series: m1t,
                provenance: "p1 + 2 n1(t^2)",
            },
            m1_ode: FamilySeries {
                id: FamilyId::M1Ode,
                series: m1o,
                provenance: "genus-1 recursion applied to m0",
            },
            gyz1: FamilySeries {
                id: FamilyId::Gyz1,
                series: gyzs,
                provenance: "theta(g2) * eta24-inverse",
            },
        }
    }

    pub fn series(&self, id: FamilyId) -> &FamilySeries {
        match id {
            FamilyId::N0 => &self.n0,
            FamilyId::N1 => &self.n1,
            FamilyId::P0 => &self.p0,
            FamilyId::P1 => &self.p1,
            FamilyId::D0 => &self.d0,
            FamilyId::M0 => &self.m0,
            FamilyId::M1Theorem => &self.m1_theorem,
            FamilyId::M1Ode => &self.m1_ode,
            FamilyId::Gyz1 => &self.gyz1,
        }
    }

    /// The elliptic-curve count N1(d, 2) at d = 4e - 3, from the map count:
    /// the class A = 2(s + ef) has A^2 = 2d - 2, and each curve in the
    /// primitive half class contributes cover_count(2) maps but only one
    /// curve, so N1(d, 2) = M1[2e] - (cover_count(2) - 1) * N1(e, 1).
    pub fn n1_index2(&self, e: usize) -> Rat {
        assert!(e >= 1, "n1_index2 is defined for e >= 1");
        assert!(
            2 * e <= self.m1_theorem.series.order() && e <= self.n1.series.order(),
            "n1_index2({e}) needs m1 to order {} and n1 to order {e}",
            2 * e
        );
        let correction = rat(cover_count(2) as i64 - 1) * &self.n1.series[e];
        &self.m1_theorem.series[2 * e] - correction
    }

    /// Count rows for e = 1..=max_e, comparing the index-2 count with the
    /// index-1 count at the same square.
    pub fn table(&self, max_e: usize) -> Vec<CountRow> {
        if max_e == 0 {
            return Vec::new();
        }
        let needed = (2 * max_e).max(4 * max_e - 3);
        assert!(
            self.order >= needed,
            "table(max_e = {max_e}) needs order >= {needed}, have {}",
            self.order
        );
        (1..=max_e)
            .map(|e| {
                let d = 4 * e - 3;
                let index1 = self.n1.series[d].clone();
                let index2 = self.n1_index2(e);
                let agree = index1 == index2;
                CountRow {
                    e,
                    d,
                    n1_index1: index1,
                    n1_index2: index2,
                    agree,
                }
            })
            .collect()
    }
}

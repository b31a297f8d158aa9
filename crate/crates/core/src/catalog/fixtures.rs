//! Printed tables used as expected data by the reproduction targets.

use crate::abelian::AbelianGroup;
use crate::rr::{Basket, FixturePoint};

fn g(s: &str) -> AbelianGroup {
    s.parse().expect("static group literal")
}

/// Short names for the four groups that survive the orbit lemmas.
pub const H_842: &str = "2,4,8";
pub const H_633: &str = "3,3,6";
pub const H_4222: &str = "2,2,2,4";
pub const H_22222: &str = "2,2,2,2,2";

/// Product-type rows (1)–(7) of the conjectural list, as builders over their parameters.
pub fn table1_product_row(row: usize, k: u64, l: u64, m: u64) -> Option<AbelianGroup> {
    let c = AbelianGroup::cyclic;
    Some(match row {
        1 => c(k).direct_product(&c(l)).direct_product(&c(m)),
        2 => c(2 * k).direct_product(&g("4,4,2")),
        3 => c(3 * k).direct_product(&g("3,3,3")),
        4 => c(2 * k).direct_product(&c(2 * l)).direct_product(&g("2,2")),
        5 => c(2 * k).direct_product(&g("2,2,2,2")),
        6 => g("4,4,2,2,2"),
        7 => g("2,2,2,2,2,2"),
        _ => return None,
    })
}

/// Number of free parameters of the product-type rows.
pub fn table1_params(row: usize) -> usize {
    match row {
        1 => 3,
        4 => 2,
        2 | 3 | 5 => 1,
        _ => 0,
    }
}

/// Rows (8)–(11): the group and the (m, H) pair of its Fermat threefold.
pub fn table1_exceptional_rows() -> Vec<(usize, AbelianGroup, (u64, AbelianGroup))> {
    vec![
        (8, g("4,4,4,4"), (4, g("4,4,4"))),
        (9, g("6,6,6,2"), (6, g("6,6,2"))),
        (10, g("6,6,3,3"), (6, g("6,3,3"))),
        (11, g("8,8,4,2"), (8, g("8,4,2"))),
    ]
}

pub fn exceptional_four_printed() -> Vec<AbelianGroup> {
    table1_exceptional_rows().into_iter().map(|r| r.1).collect()
}

/// The maximal K3 groups printed as lying outside Cr₂.
pub fn prop_1_4_groups() -> Vec<AbelianGroup> {
    ["4,4,4", "2,4,8", "2,2,2,4", "3,3,6", "2,6,6", "2,2,2,2,2"].map(g).to_vec()
}

#[derive(Clone, Debug)]
pub struct FermatCase {
    pub label: &'static str,
    pub variety: &'static str,
    pub weights: Vec<(u64, usize)>,
    pub degree: u64,
    pub group: AbelianGroup,
}

/// Fermat threefolds and K3 surfaces with their printed automorphism groups.
pub fn fermat_cases() -> Vec<FermatCase> {
    let case = |label, variety, weights: &[(u64, usize)], degree, group: &str| FermatCase {
        label,
        variety,
        weights: weights.to_vec(),
        degree,
        group: g(group),
    };
    vec![
        case("threefold-1", "X4 in P4", &[(1, 5)], 4, "4,4,4,4"),
        case("threefold-2", "X6 in P(1,1,1,1,3)", &[(1, 4), (3, 1)], 6, "6,6,6,2"),
        case("threefold-3", "X'6 in P(1,1,1,2,2)", &[(1, 3), (2, 2)], 6, "6,6,3,3"),
        case("threefold-4", "X8 in P(1,1,1,2,4)", &[(1, 3), (2, 1), (4, 1)], 8, "8,8,4,2"),
        case("threefold-5", "X2,2,2 in P6", &[(1, 7)], 2, "2,2,2,2,2,2"),
        case("threefold-6", "X4,4 in P(1,1,1,2,2,2)", &[(1, 3), (2, 3)], 4, "4,4,2,2,2"),
        case("k3-1", "X6 in P(1,1,1,3)", &[(1, 3), (3, 1)], 6, "6,6,2"),
        case("k3-2", "X4 in P3", &[(1, 4)], 4, "4,4,4"),
        case("k3-3", "X2,2,2 in P5", &[(1, 6)], 2, "2,2,2,2,2"),
        case("k3-4", "X4,4 in P(1,1,2,2,2)", &[(1, 2), (2, 3)], 4, "4,2,2,2"),
        case("k3-5", "X8 in P(1,1,2,4)", &[(1, 2), (2, 1), (4, 1)], 8, "8,4,2"),
        case("k3-6", "X6 in P(1,1,2,2)", &[(1, 2), (2, 2)], 6, "6,3,3"),
        case("k3-7", "X12 in P(1,3,4,4)", &[(1, 1), (3, 1), (4, 2)], 12, "4,3,3"),
        case("k3-8", "X12 in P(1,2,3,6)", &[(1, 1), (2, 1), (3, 1), (6, 1)], 12, "6,4,2"),
        case("k3-9", "X12 in P(2,3,3,4)", &[(2, 1), (3, 2), (4, 1)], 12, "4,4,3"),
        case("k3-10", "X6,6 in P(1,2,3,3,3)", &[(1, 1), (2, 1), (3, 3)], 6, "3,2,2,2"),
        case("k3-11", "X6,6 in P(2,2,2,3,3)", &[(2, 3), (3, 2)], 6, "3,3,2"),
    ]
}

/// Printed non-split, rank > 3 extensions of Z/m by H (before the product-type filter).
pub fn lemma_6_2_printed() -> Vec<(AbelianGroup, u64, Vec<AbelianGroup>)> {
    let row = |h: &str, m: u64, gs: &[&str]| (g(h), m, gs.iter().map(|s| g(s)).collect::<Vec<_>>());
    let mut rows = Vec::new();
    for m in [1, 2, 3, 4, 6, 8] {
        rows.push(match m {
            4 => row("4,4,4", 4, &["8,4,4,2"]),
            8 => row("4,4,4", 8, &["16,4,4,2"]),
            _ => row("4,4,4", m, &[]),
        });
    }
    for m in [1, 2, 3, 4, 6, 8] {
        rows.push(match m {
            4 => row("8,4,2", 4, &["16,4,2,2", "8,8,2,2"]),
            8 => row("8,4,2", 8, &["32,4,2,2", "16,8,2,2", "16,4,4,2"]),
            _ => row("8,4,2", m, &[]),
        });
    }
    for m in [1, 2, 3, 4, 6, 8] {
        rows.push(match m {
            2 => row("4,2,2,2", 2, &["8,2,2,2", "4,4,2,2"]),
            4 => row("4,2,2,2", 4, &["16,2,2,2", "8,2,2,2,2", "8,4,2,2"]),
            6 => row("4,2,2,2", 6, &["24,2,2,2"]),
            8 => row("4,2,2,2", 8, &["32,2,2,2", "16,4,2,2", "16,2,2,2,2"]),
            _ => row("4,2,2,2", m, &[]),
        });
    }
    for m in [1, 2, 3, 4, 6, 8] {
        rows.push(row("6,3,3", m, &[]));
    }
    for m in [1, 2, 3, 4, 6, 8] {
        rows.push(row("6,6,2", m, &[]));
    }
    for m in [1, 2, 3, 4, 6, 8] {
        rows.push(match m {
            2 => row("2,2,2,2,2", 2, &["4,2,2,2,2"]),
            4 => row("2,2,2,2,2", 4, &["8,2,2,2,2"]),
            6 => row("2,2,2,2,2", 6, &["12,2,2,2,2"]),
            8 => row("2,2,2,2,2", 8, &["16,2,2,2,2"]),
            _ => row("2,2,2,2,2", m, &[]),
        });
    }
    rows
}

#[derive(Clone, Debug)]
pub struct Theorem63Printed {
    pub h: AbelianGroup,
    /// (order of C′, printed m-set)
    pub columns: Vec<(u64, Vec<u64>)>,
    pub maximal_g: AbelianGroup,
    pub product_type: bool,
}

pub fn theorem_6_3_printed() -> Vec<Theorem63Printed> {
    let t = |h: &str, cols: &[(u64, &[u64])], max: &str, pt: bool| Theorem63Printed {
        h: g(h),
        columns: cols.iter().map(|(c, ms)| (*c, ms.to_vec())).collect(),
        maximal_g: g(max),
        product_type: pt,
    };
    vec![
        t("4,4,4", &[(1, &[1]), (2, &[1, 2]), (4, &[1, 2, 4])], "4,4,4,4", false),
        t("8,4,2", &[(1, &[1]), (2, &[1, 2]), (4, &[1, 2, 4]), (8, &[1, 2, 4, 8])], "8,8,4,2", false),
        t("4,2,2,2", &[(1, &[1]), (2, &[1, 2]), (4, &[1, 2, 4])], "4,4,2,2,2", true),
        // Printed bound reads (Z/6)^2 × (Z/3)^3.
        t("6,3,3", &[(1, &[1]), (2, &[1, 2]), (3, &[1, 3]), (6, &[1, 2, 3, 6])], "6,6,3,3,3", false),
        t("6,6,2", &[(1, &[1]), (2, &[1, 2]), (3, &[1, 3]), (6, &[1, 2, 3, 6])], "6,6,6,2", false),
        t("2,2,2,2,2", &[(1, &[1]), (2, &[1, 2])], "2,2,2,2,2,2", true),
    ]
}

/// A basket row with the printed "Possibilities for H" column.
#[derive(Clone, Debug)]
pub struct BasketRow {
    pub basket: Basket,
    pub groups: Vec<AbelianGroup>,
}

fn basket_row(triples: &[(u32, u32, u32)], groups: &[&str]) -> BasketRow {
    BasketRow {
        basket: Basket::from_printed(triples).expect("static basket"),
        groups: groups.iter().map(|s| g(s)).collect(),
    }
}

/// Index-1 baskets surviving the orbit lemmas; triples (n, r, a) for n × 1/r(a, −a, 1).
pub fn table6() -> Vec<BasketRow> {
    vec![
        basket_row(&[(2, 10, 3)], &[H_842]),
        basket_row(&[(2, 11, 4)], &[H_842]),
        basket_row(&[(6, 4, 1)], &[H_842, H_633]),
        basket_row(&[(2, 9, 2)], &[H_842]),
        basket_row(&[(6, 2, 1), (2, 4, 1)], &[H_842]),
        basket_row(&[(4, 2, 1), (4, 3, 1)], &[H_4222]),
        basket_row(&[(4, 5, 2)], &[H_842, H_4222]),
        basket_row(&[(4, 2, 1), (4, 4, 1)], &[H_842, H_4222]),
        basket_row(&[(2, 11, 3)], &[H_842]),
        basket_row(&[(8, 3, 1)], &[H_22222, H_4222, H_842]),
        basket_row(&[(3, 7, 2)], &[H_633]),
        basket_row(&[(3, 7, 3)], &[H_633]),
        basket_row(&[(6, 2, 1), (3, 4, 1)], &[H_633]),
        basket_row(&[(2, 11, 2)], &[H_842]),
        basket_row(&[(8, 2, 1), (2, 4, 1)], &[H_842]),
        basket_row(&[(10, 2, 1), (2, 4, 1)], &[H_842]),
        basket_row(&[(8, 2, 1), (4, 3, 1)], &[H_4222]),
    ]
}

/// The same filter when every non-Gorenstein point is a cyclic quotient.
pub fn table10() -> Vec<BasketRow> {
    vec![
        basket_row(&[(2, 10, 3)], &[H_842]),
        basket_row(&[(3, 7, 3)], &[H_633]),
        basket_row(&[(2, 11, 4)], &[H_842]),
        basket_row(&[(6, 4, 1)], &[H_633]),
        basket_row(&[(2, 9, 2)], &[H_842]),
        basket_row(&[(4, 2, 1), (4, 3, 1)], &[H_4222]),
        basket_row(&[(4, 5, 2)], &[H_842, H_4222]),
        basket_row(&[(4, 2, 1), (4, 4, 1)], &[H_4222]),
        basket_row(&[(2, 11, 3)], &[H_842]),
        basket_row(&[(8, 3, 1)], &[H_22222, H_842, H_4222]),
        basket_row(&[(3, 7, 2)], &[H_633]),
        basket_row(&[(2, 11, 2)], &[H_842]),
        basket_row(&[(8, 2, 1), (4, 3, 1)], &[H_4222]),
    ]
}

#[derive(Clone, Debug)]
pub struct Table11Row {
    pub singularities: &'static str,
    pub basket: Basket,
    pub groups: Vec<AbelianGroup>,
}

/// Baskets with at least one non-cyclic point; the singularity column is metadata.
pub fn table11() -> Vec<Table11Row> {
    let row = |s, triples: &[(u32, u32, u32)], groups: &[&str]| Table11Row {
        singularities: s,
        basket: Basket::from_printed(triples).expect("static basket"),
        groups: groups.iter().map(|x| g(x)).collect(),
    };
    vec![
        row("2 x cA/4 or 3 x cA/4", &[(6, 4, 1)], &[H_842, H_633]),
        row("2 x cA/4", &[(4, 5, 2)], &[H_842]),
        row("4 x cA/3 or 4 x cD/3", &[(8, 3, 1)], &[H_842, H_4222]),
        row("2 x cAx/4", &[(8, 2, 1), (2, 4, 1)], &[H_842]),
        row("2 x cAx/4", &[(10, 2, 1), (2, 4, 1)], &[H_842]),
        row("4 x cA/2, 4 x 1/3(1,2,1)", &[(8, 2, 1), (4, 3, 1)], &[H_4222]),
        row("2 x cAx/4", &[(6, 2, 1), (2, 4, 1)], &[H_842]),
        row("4 x cAx/4", &[(4, 2, 1), (4, 4, 1)], &[H_842]),
        row("3 x cAx/4", &[(6, 2, 1), (3, 4, 1)], &[H_633]),
    ]
}

/// Higher Fano index baskets with their printed groups; points are n × 1/r(a, c, w).
pub fn higher_index_tables() -> Vec<(u32, Vec<FixturePoint>, Vec<AbelianGroup>)> {
    let p = |n, r, a, c, w| FixturePoint { n, r, a, c, w };
    let gs = |v: &[&str]| v.iter().map(|s| g(s)).collect::<Vec<_>>();
    vec![
        (2, vec![p(2, 3, 1, 2, 2), p(2, 7, 3, 4, 2)], gs(&[H_842])),
        (2, vec![p(4, 3, 1, 2, 2), p(2, 5, 1, 4, 2)], gs(&[H_842])),
        (2, vec![p(2, 5, 2, 3, 2), p(2, 7, 1, 6, 2)], gs(&[H_842])),
        (2, vec![p(2, 11, 4, 7, 2)], gs(&[H_842])),
        (2, vec![p(2, 5, 1, 4, 2), p(2, 7, 3, 4, 2)], gs(&[H_842])),
        (2, vec![p(3, 3, 1, 2, 2), p(3, 5, 1, 4, 2)], gs(&[H_633])),
        (2, vec![p(3, 7, 3, 4, 2)], gs(&[H_633])),
        (2, vec![p(2, 3, 1, 2, 2), p(2, 9, 4, 5, 2)], gs(&[H_842])),
        (3, vec![p(4, 5, 1, 4, 3)], gs(&[H_842, H_4222])),
        (3, vec![p(2, 2, 1, 1, 1), p(2, 8, 1, 7, 3)], gs(&[H_842])),
        (3, vec![p(4, 2, 1, 1, 1), p(2, 7, 1, 6, 3)], gs(&[H_842])),
        (4, vec![p(2, 9, 2, 7, 4)], gs(&[H_842])),
        (4, vec![p(3, 7, 1, 6, 4)], gs(&[H_633])),
        (4, vec![p(4, 3, 1, 2, 1), p(2, 5, 1, 4, 4)], gs(&[H_842])),
        (4, vec![p(2, 5, 2, 3, 4), p(2, 7, 1, 6, 4)], gs(&[H_842])),
    ]
}

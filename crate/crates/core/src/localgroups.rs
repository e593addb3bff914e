//! Degree-`2m` / degree-`2n` local permutation groups read off a square
//! structure.
//!
//! Points are labelled `x_j -> j`, `x_j^-1 -> rank + j` (1-based in cycle
//! notation). Horizontally, the positive B-generator `b` moves the A-letter
//! `a` to `a~`, where `a b = b~ a~`. Vertically, the positive A-generator `a`
//! moves the B-letter `b` to `b'`, where `b a = a' b'`.

use serde::Serialize;

use crate::permgrp::{parse_cycles, PermError, PermGroup, Permutation};
use crate::presentations::{printed_local_generators, CatalogName};
use crate::squares::SquareStructure;
use crate::words::{Family, Letter, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Horizontal,
    Vertical,
}

impl Side {
    /// Family of the letters the group permutes.
    pub fn point_family(self) -> Family {
        match self {
            Side::Horizontal => Family::A,
            Side::Vertical => Family::B,
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            Side::Horizontal => "h",
            Side::Vertical => "v",
        }
    }
}

/// Which corner reading defines the generating permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Horizontal: `a b = b~ a~` gives `a -> a~`. Vertical: `b a = a' b'` gives `b -> b'`.
    Standard,
    /// The opposite readings: horizontal uses `b a = a' b'` (`a -> a'`),
    /// vertical uses `a b = b~ a~` (`b -> b~`).
    Reversed,
}

#[derive(Debug, Clone)]
pub struct LocalAction {
    pub side: Side,
    /// `point_labels[p]` is the letter at 0-based point `p`.
    pub point_labels: Vec<Letter>,
    pub group: PermGroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalClassification {
    pub order: u128,
    pub transitive: bool,
    pub two_transitive: bool,
    pub is_alternating: bool,
    pub is_symmetric: bool,
    /// Orbits of a point stabilizer; 0 when the action is not transitive.
    pub suborbits: usize,
}

pub fn local_group(s: &SquareStructure, side: Side, convention: Convention) -> LocalAction {
    let (m, n) = s.ranks();
    let family = side.point_family();
    let rank = if family == Family::A { m } else { n };
    let acting = if family == Family::A { n } else { m };
    let point_labels = s.alphabet().signed_letters(family);
    let generators = (0..acting)
        .map(|g| {
            let images = point_labels
                .iter()
                .map(|&x| {
                    let image = match (side, convention) {
                        (Side::Horizontal, Convention::Standard) => {
                            s.table_ab(x, Letter::b(g, Sign::Pos)).0
                        }
                        (Side::Horizontal, Convention::Reversed) => {
                            s.table_ba(Letter::b(g, Sign::Pos), x).0
                        }
                        (Side::Vertical, Convention::Standard) => {
                            s.table_ba(x, Letter::a(g, Sign::Pos)).1
                        }
                        (Side::Vertical, Convention::Reversed) => {
                            s.table_ab(Letter::a(g, Sign::Pos), x).1
                        }
                    };
                    image.point(rank)
                })
                .collect();
            Permutation::from_images(images).expect("square tables induce bijections")
        })
        .collect();
    LocalAction {
        side,
        point_labels,
        group: PermGroup::new(2 * rank, generators).expect("degrees agree"),
    }
}

pub fn horizontal_local_group(s: &SquareStructure) -> LocalAction {
    local_group(s, Side::Horizontal, Convention::Standard)
}

pub fn vertical_local_group(s: &SquareStructure) -> LocalAction {
    local_group(s, Side::Vertical, Convention::Standard)
}

pub fn classify_local_group(l: &LocalAction) -> LocalClassification {
    let g = &l.group;
    let transitive = g.is_transitive();
    LocalClassification {
        order: g.order(),
        transitive,
        two_transitive: g.is_k_transitive(2),
        is_alternating: g.is_alternating_group(),
        is_symmetric: g.is_symmetric_group(),
        suborbits: if transitive {
            g.suborbit_count().unwrap_or(0)
        } else {
            0
        },
    }
}

/// The group generated by the printed cycle-notation generators, if the
/// catalog has them for this entry.
pub fn printed_group(name: CatalogName, side: Side) -> Option<Result<PermGroup, PermError>> {
    printed_local_generators(name, side.point_family()).map(|gens| {
        let perms = gens
            .iter()
            .map(|c| parse_cycles(c, 10))
            .collect::<Result<Vec<_>, _>>()?;
        PermGroup::new(10, perms)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrictComparison {
    pub printed_order: u128,
    pub computed_order: u128,
    /// The two groups are equal as sets of permutations under the fixed labelling.
    pub permutation_equal: bool,
    /// Every computed generator appears verbatim among the printed ones.
    pub generators_verbatim: bool,
}

/// Best-effort literal comparison against the printed generators.
pub fn strict_comparison(name: CatalogName, action: &LocalAction) -> Option<StrictComparison> {
    let printed = printed_group(name, action.side)?.ok()?;
    let computed = &action.group;
    Some(StrictComparison {
        printed_order: printed.order(),
        computed_order: computed.order(),
        permutation_equal: printed.equals(computed),
        generators_verbatim: computed
            .generators()
            .iter()
            .all(|g| printed.generators().contains(g)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::catalog;
    use crate::squares::build_square_structure;

    fn structure(name: CatalogName) -> SquareStructure {
        build_square_structure(&catalog(name)).unwrap()
    }

    #[test]
    fn gamma3_horizontal_is_order_3840() {
        let h = horizontal_local_group(&structure(CatalogName::Gamma3));
        let c = classify_local_group(&h);
        assert_eq!(c.order, 3840);
        assert!(c.transitive && !c.two_transitive);
        assert_eq!(c.suborbits, 3);
    }

    #[test]
    fn gamma3_vertical_is_symmetric() {
        let v = vertical_local_group(&structure(CatalogName::Gamma3));
        let c = classify_local_group(&v);
        assert_eq!(c.order, 3628800);
        assert!(c.is_symmetric && !c.is_alternating);
        assert_eq!(c.suborbits, 2);
    }

    #[test]
    fn gamma1_and_gamma2_are_alternating() {
        for name in [CatalogName::Gamma1, CatalogName::Gamma2] {
            let s = structure(name);
            for action in [horizontal_local_group(&s), vertical_local_group(&s)] {
                let c = classify_local_group(&action);
                assert_eq!(c.order, 1814400, "{name} {:?}", action.side);
                assert!(c.is_alternating && c.two_transitive);
                assert_eq!(c.suborbits, 2);
            }
        }
    }

    #[test]
    fn generator_counts() {
        let s = structure(CatalogName::WiseW);
        assert_eq!(horizontal_local_group(&s).group.generators().len(), 3);
        assert_eq!(horizontal_local_group(&s).group.degree(), 8);
        assert_eq!(vertical_local_group(&s).group.generators().len(), 4);
        assert_eq!(vertical_local_group(&s).group.degree(), 6);
    }

    #[test]
    fn labels_follow_fixed_scheme() {
        let h = horizontal_local_group(&structure(CatalogName::Gamma1));
        assert_eq!(h.point_labels[0], Letter::a(0, Sign::Pos));
        assert_eq!(h.point_labels[5], Letter::a(0, Sign::Neg));
    }

    #[test]
    fn printed_groups_have_claimed_orders() {
        let expected = [
            (CatalogName::Gamma1, Side::Horizontal, 1814400),
            (CatalogName::Gamma2, Side::Horizontal, 1814400),
            (CatalogName::Gamma3, Side::Horizontal, 3840),
            (CatalogName::Gamma1, Side::Vertical, 1814400),
            (CatalogName::Gamma2, Side::Vertical, 1814400),
            (CatalogName::Gamma3, Side::Vertical, 3628800),
        ];
        for (name, side, order) in expected {
            let g = printed_group(name, side).unwrap().unwrap();
            assert_eq!(g.order(), order, "{name} {side:?}");
        }
    }
}

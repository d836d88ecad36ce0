//! Identification of the small subgroups that occur as stabilizer
//! intersections, by order, element-order statistics and commutativity.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Invariants of a finite group that separate the groups met here.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// element order ↦ number of elements of that order
    pub element_orders: BTreeMap<usize, usize>,
    pub abelian: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SmallGroup {
    Trivial,
    Z2,
    Z3,
    Z2xZ2,
    D8,
    D10,
    D12,
    A4,
    A5,
    S5,
    A4x3Semi2,
    Psl27,
    A6,
    A7,
}

impl fmt::Display for SmallGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SmallGroup::Trivial => "1",
            SmallGroup::Z2 => "Z2",
            SmallGroup::Z3 => "Z3",
            SmallGroup::Z2xZ2 => "Z2^2",
            SmallGroup::D8 => "D8",
            SmallGroup::D10 => "D10",
            SmallGroup::D12 => "D12",
            SmallGroup::A4 => "A4",
            SmallGroup::A5 => "A5",
            SmallGroup::S5 => "S5",
            SmallGroup::A4x3Semi2 => "(A4x3):2",
            SmallGroup::Psl27 => "PSL2(7)",
            SmallGroup::A6 => "A6",
            SmallGroup::A7 => "A7",
        })
    }
}

fn histogram(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    pairs.iter().copied().collect()
}

impl SmallGroup {
    pub const ALL: [SmallGroup; 14] = [
        SmallGroup::Trivial,
        SmallGroup::Z2,
        SmallGroup::Z3,
        SmallGroup::Z2xZ2,
        SmallGroup::D8,
        SmallGroup::D10,
        SmallGroup::D12,
        SmallGroup::A4,
        SmallGroup::A5,
        SmallGroup::S5,
        SmallGroup::A4x3Semi2,
        SmallGroup::Psl27,
        SmallGroup::A6,
        SmallGroup::A7,
    ];

    /// The fingerprint of the group, from its conjugacy class data.
    pub fn fingerprint(self) -> Fingerprint {
        let (order, orders, abelian): (usize, &[(usize, usize)], bool) = match self {
            SmallGroup::Trivial => (1, &[(1, 1)], true),
            SmallGroup::Z2 => (2, &[(1, 1), (2, 1)], true),
            SmallGroup::Z3 => (3, &[(1, 1), (3, 2)], true),
            SmallGroup::Z2xZ2 => (4, &[(1, 1), (2, 3)], true),
            SmallGroup::D8 => (8, &[(1, 1), (2, 5), (4, 2)], false),
            SmallGroup::D10 => (10, &[(1, 1), (2, 5), (5, 4)], false),
            SmallGroup::D12 => (12, &[(1, 1), (2, 7), (3, 2), (6, 2)], false),
            SmallGroup::A4 => (12, &[(1, 1), (2, 3), (3, 8)], false),
            SmallGroup::A5 => (60, &[(1, 1), (2, 15), (3, 20), (5, 24)], false),
            SmallGroup::S5 => (120, &[(1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20)], false),
            // (A4 × 3):2 is the setwise stabilizer of a 3-set in A7
            SmallGroup::A4x3Semi2 => (72, &[(1, 1), (2, 21), (3, 26), (4, 18), (6, 6)], false),
            SmallGroup::Psl27 => (168, &[(1, 1), (2, 21), (3, 56), (4, 42), (7, 48)], false),
            SmallGroup::A6 => (360, &[(1, 1), (2, 45), (3, 80), (4, 90), (5, 144)], false),
            SmallGroup::A7 => (2520, &[(1, 1), (2, 105), (3, 350), (4, 630), (5, 504), (6, 210), (7, 720)], false),
        };
        Fingerprint { order, element_orders: histogram(orders), abelian }
    }

    pub fn identify(fp: &Fingerprint) -> Option<SmallGroup> {
        SmallGroup::ALL.into_iter().find(|g| &g.fingerprint() == fp)
    }
}

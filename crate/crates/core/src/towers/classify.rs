use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::hermitian::CurveData;
use crate::projplane::{parametrize, pattern_along, Conic};

use super::PairMatrices;

/// (a, s, n) relative to a base conic: shared curve points, shared secants,
/// and the intersection pattern [ν₁, ν₂, ν₃, ν₄].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntersectionClass {
    pub shared_points: u8,
    pub shared_secants: u8,
    pub pattern: [usize; 4],
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassRow {
    pub class: IntersectionClass,
    pub count: usize,
    /// Least conic of the class.
    pub example: Conic,
    pub members: Vec<usize>,
}

/// The class of every conic relative to `base`; `None` at `base` itself.
pub fn intersection_classes(
    curve: &CurveData,
    m: &PairMatrices,
    base: usize,
) -> Result<Vec<Option<IntersectionClass>>> {
    let f = curve.field();
    let param = parametrize(f, &curve.conics()[base].conic)?;
    curve
        .conics()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i == base {
                return Ok(None);
            }
            Ok(Some(IntersectionClass {
                shared_points: m.m0(base, i),
                shared_secants: m.m1(base, i),
                pattern: pattern_along(f, &param, &c.conic)?,
            }))
        })
        .collect()
}

/// Groups the conics other than `base` by intersection class, rows ordered
/// by count and then by class.
pub fn classification_table(curve: &CurveData, m: &PairMatrices, base: usize) -> Result<Vec<ClassRow>> {
    let mut groups: BTreeMap<IntersectionClass, Vec<usize>> = BTreeMap::new();
    for (i, class) in intersection_classes(curve, m, base)?.into_iter().enumerate() {
        if let Some(c) = class {
            groups.entry(c).or_default().push(i);
        }
    }
    let mut rows: Vec<ClassRow> = groups
        .into_iter()
        .map(|(class, members)| ClassRow {
            class,
            count: members.len(),
            example: curve.conics()[members[0]].conic,
            members,
        })
        .collect();
    rows.sort_by_key(|r| (r.count, r.class));
    Ok(rows)
}

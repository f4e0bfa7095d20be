//! Reference values shipped with the tool, keyed by descriptive names.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use a3z_algebra::{parse_constant, parse_shifted, AlgebraError, ConstantExpression, ShiftedCombination};
use a3z_lattice::{LatticeLabel, TwistLabel};
use a3z_relations::{RelationParams, TheoremId};
use serde::Deserialize;

pub const GOLDEN_JSON: &str = include_str!("../data/golden.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GoldenKind {
    Constant,
    Shifted,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenEntry {
    #[serde(skip)]
    pub key: String,
    pub series: String,
    pub kind: GoldenKind,
    pub expr: String,
    pub k: Option<u32>,
    pub theorem: Option<TheoremId>,
    pub tuple: Option<[u32; 6]>,
    pub twist: Option<TwistLabel>,
    pub lattice: Option<LatticeLabel>,
    pub params: Option<[u32; 5]>,
    /// "real" when only the real part of the series is recorded.
    pub part: Option<String>,
    pub ambiguous: Option<String>,
}

impl GoldenEntry {
    pub fn real_part_only(&self) -> bool {
        self.part.as_deref() == Some("real")
    }

    pub fn constant(&self) -> Result<ConstantExpression, AlgebraError> {
        parse_constant(&self.expr)
    }

    pub fn shifted(&self) -> Result<ShiftedCombination, AlgebraError> {
        parse_shifted(&self.expr)
    }
}

pub fn golden() -> &'static BTreeMap<String, GoldenEntry> {
    static DATA: OnceLock<BTreeMap<String, GoldenEntry>> = OnceLock::new();
    DATA.get_or_init(|| {
        let mut map: BTreeMap<String, GoldenEntry> = serde_json::from_str(GOLDEN_JSON).expect("golden data is valid JSON");
        for (k, v) in map.iter_mut() {
            v.key = k.clone();
        }
        map
    })
}

pub fn entry(key: &str) -> Option<&'static GoldenEntry> {
    golden().get(key)
}

/// The constant recorded for a series, if any.
pub fn for_series(tuple: &[f64; 6], twist: TwistLabel, lattice: LatticeLabel) -> Option<&'static GoldenEntry> {
    golden().values().find(|e| {
        e.kind == GoldenKind::Constant
            && e.twist == Some(twist)
            && e.lattice == Some(lattice)
            && e.tuple.is_some_and(|t| t.iter().zip(tuple).all(|(a, b)| *a as f64 == *b))
    })
}

/// The right-hand side recorded for a relation, if any.
pub fn for_relation(theorem: TheoremId, params: &RelationParams) -> Option<&'static GoldenEntry> {
    let p = [params.p, params.q, params.a, params.b, params.c];
    golden()
        .values()
        .find(|e| e.kind == GoldenKind::Shifted && e.theorem == Some(theorem) && e.params == Some(p))
}

/// The closed form recorded for a derived evaluation, if any.
pub fn for_derivation(theorem: TheoremId, k: u32) -> Option<&'static GoldenEntry> {
    golden()
        .values()
        .find(|e| e.kind == GoldenKind::Constant && e.theorem == Some(theorem) && e.k == Some(k))
}

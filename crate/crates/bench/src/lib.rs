//! Shared fixtures for the benchmarks.

use std::sync::Arc;

use ffhyper::{build_field, AddChar, CycNum, Evaluator, FieldCtx, MulChar, SumTables};

pub fn field(q: u32) -> Arc<FieldCtx> {
    let (p, r) = ffhyper::prime_power(q as u64).expect("prime power");
    Arc::new(build_field(p, r).expect("field"))
}

pub fn tables(q: u32) -> Arc<SumTables<CycNum>> {
    Arc::new(SumTables::new(field(q), AddChar::standard()).expect("tables"))
}

/// A fresh evaluator over shared tables, so nothing is memoized yet.
pub fn cold(tables: &Arc<SumTables<CycNum>>) -> Evaluator<CycNum> {
    Evaluator::from_tables(tables.clone())
}

/// Characters `χ_j` for the given indices mod `q - 1`.
pub fn chars(q: u32, js: &[i64]) -> Vec<MulChar> {
    js.iter().map(|&j| MulChar::new(j, q - 1)).collect()
}

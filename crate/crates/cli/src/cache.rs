//! Process-wide, read-only Kostka tables, built at most once per `n`.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use pieri_core::{KostkaTable, RepRing, Result};

type Slot = Arc<OnceLock<Arc<KostkaTable>>>;

fn slots() -> &'static Mutex<BTreeMap<usize, Slot>> {
    static SLOTS: OnceLock<Mutex<BTreeMap<usize, Slot>>> = OnceLock::new();
    SLOTS.get_or_init(Default::default)
}

/// The Kostka table for `n`, checked against `bound` on every call.
pub fn kostka_table(n: usize, bound: usize) -> Result<Arc<KostkaTable>> {
    if n > bound {
        // let the core report the error with its usual wording
        KostkaTable::build_bounded(n, bound)?;
    }
    let slot = {
        let mut map = slots().lock().unwrap_or_else(|poison| poison.into_inner());
        map.entry(n).or_default().clone()
    };
    if let Some(table) = slot.get() {
        return Ok(table.clone());
    }
    // built outside the map lock; racing builders produce equal tables and
    // only the first one is kept
    let built = Arc::new(KostkaTable::build_bounded(n, bound)?);
    Ok(slot.get_or_init(|| built).clone())
}

pub fn rep_ring(n: usize, bound: usize) -> Result<RepRing> {
    Ok(RepRing::from_table(kostka_table(n, bound)?.as_ref().clone()))
}

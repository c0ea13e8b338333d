//! Bounded, thread-safe memo tables.
//!
//! Results never depend on whether a value came from the table: a full
//! table is simply cleared. Capacity comes from `JACQUET_MEMO_CAPACITY`
//! (entries per table, `0` disables caching).

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Mutex, OnceLock};

pub const CAPACITY_ENV: &str = "JACQUET_MEMO_CAPACITY";
const DEFAULT_CAPACITY: usize = 1 << 14;

pub fn configured_capacity() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(CAPACITY_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_CAPACITY)
    })
}

pub struct Memo<K, V> {
    capacity: usize,
    table: Mutex<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new(capacity: usize) -> Self {
        Memo {
            capacity,
            table: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_configured_capacity() -> Self {
        Self::new(configured_capacity())
    }

    /// Look up `key`, computing (outside the lock) on a miss.
    pub fn get_or_compute(&self, key: &K, compute: impl FnOnce() -> V) -> V {
        if self.capacity == 0 {
            return compute();
        }
        if let Some(v) = self.table.lock().unwrap().get(key) {
            return v.clone();
        }
        let v = compute();
        let mut t = self.table.lock().unwrap();
        if t.len() >= self.capacity {
            t.clear();
        }
        t.insert(key.clone(), v.clone());
        v
    }

    pub fn len(&self) -> usize {
        self.table.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capacity_bounds_and_zero_disables() {
        let m: Memo<u32, u32> = Memo::new(2);
        for k in 0..5 {
            assert_eq!(m.get_or_compute(&k, || k * 10), k * 10);
            assert!(m.len() <= 2);
        }
        let off: Memo<u32, u32> = Memo::new(0);
        assert_eq!(off.get_or_compute(&1, || 7), 7);
        assert!(off.is_empty());
    }
}

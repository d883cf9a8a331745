use std::collections::HashMap;
use std::hash::Hash;

use parking_lot::RwLock;

/// Shared memo table. Values are pure functions of their keys, so a racing
/// second insert writes the same value and is harmless.
pub struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub fn get_or_insert_with(&self, key: &K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self.map.read().get(key) {
            return v.clone();
        }
        let v = compute();
        self.map
            .write()
            .entry(key.clone())
            .or_insert_with(|| v.clone());
        v
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Self::new()
    }
}

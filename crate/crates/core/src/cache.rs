use std::collections::HashMap;
use std::sync::RwLock;

use crate::ring::RingMode;
use crate::words::Word;

/// Memo table for per-word results such as antipode values.
#[derive(Debug)]
pub(crate) struct WordCache<V> {
    map: RwLock<HashMap<(RingMode, Word), V>>,
}

impl<V> Default for WordCache<V> {
    fn default() -> Self {
        WordCache {
            map: RwLock::new(HashMap::new()),
        }
    }
}

impl<V: Clone> WordCache<V> {
    pub(crate) fn get(&self, ring: RingMode, w: &Word) -> Option<V> {
        self.map
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .get(&(ring, w.clone()))
            .cloned()
    }

    pub(crate) fn insert(&self, ring: RingMode, w: Word, v: V) {
        self.map
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .insert((ring, w), v);
    }
}

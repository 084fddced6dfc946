//! A family memo shareable across threads.
//!
//! Readers take the read lock; a miss computes outside any lock and then
//! inserts under the write lock. Two threads racing on the same key both
//! compute it and insert identical values, so last-write-wins is harmless.

use std::sync::RwLock;

use betapoly_core::families::{compute_key, FamilyCache, FamilyKey};
use betapoly_core::{Poly, Result};

#[derive(Debug, Default)]
pub struct SharedCache {
    inner: RwLock<FamilyCache>,
}

impl SharedCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get_or_compute(&self, key: FamilyKey) -> Result<Poly> {
        if let Some(p) = self.inner.read().expect("cache lock poisoned").get(&key) {
            return Ok(p.clone());
        }
        let value = compute_key(&key)?;
        self.inner.write().expect("cache lock poisoned").insert(key, value.clone());
        Ok(value)
    }

    pub fn len(&self) -> usize {
        self.inner.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

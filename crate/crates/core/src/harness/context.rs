use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::kl::KlEngine;
use crate::patterns::{EmbeddingCache, EmbeddingTables};
use crate::roots::build_root_system;
use crate::weyl::WeylGroup;

type TablesKey = (String, String);

/// Shared caches for a run: one enumerated group and one KL engine per type,
/// embedding tables per ordered type pair.
pub struct Context {
    cap: usize,
    groups: Mutex<HashMap<String, Arc<WeylGroup>>>,
    kl: Mutex<HashMap<String, Arc<KlEngine>>>,
    embeddings: EmbeddingCache,
    tables: Mutex<HashMap<TablesKey, Arc<Vec<EmbeddingTables>>>>,
}

impl Context {
    pub fn new(cap: usize) -> Self {
        Context {
            cap,
            groups: Mutex::default(),
            kl: Mutex::default(),
            embeddings: EmbeddingCache::new(cap),
            tables: Mutex::default(),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn group(&self, cartan_type: &str) -> Result<Arc<WeylGroup>> {
        let key = cartan_type.parse::<crate::roots::CartanType>()?.to_string();
        if let Some(g) = self.groups.lock().unwrap().get(&key) {
            return Ok(Arc::clone(g));
        }
        let g = Arc::new(WeylGroup::new(
            Arc::new(build_root_system(&key)?),
            self.cap,
        )?);
        let mut groups = self.groups.lock().unwrap();
        Ok(Arc::clone(groups.entry(key).or_insert(g)))
    }

    pub fn kl(&self, cartan_type: &str) -> Result<Arc<KlEngine>> {
        let group = self.group(cartan_type)?;
        let key = group.root_system().cartan_type().to_string();
        let mut engines = self.kl.lock().unwrap();
        Ok(Arc::clone(
            engines
                .entry(key)
                .or_insert_with(|| Arc::new(KlEngine::new(group))),
        ))
    }

    pub fn embeddings(
        &self,
        source: &str,
        target: &str,
    ) -> Result<Arc<Vec<crate::patterns::SubsystemEmbedding>>> {
        let (s, t) = (self.group(source)?, self.group(target)?);
        self.embeddings.get(s.root_system(), t.root_system())
    }

    pub fn tables(&self, source: &str, target: &str) -> Result<Arc<Vec<EmbeddingTables>>> {
        let (s, t) = (self.group(source)?, self.group(target)?);
        let key = (
            s.root_system().cartan_type().to_string(),
            t.root_system().cartan_type().to_string(),
        );
        if let Some(hit) = self.tables.lock().unwrap().get(&key) {
            return Ok(Arc::clone(hit));
        }
        let built = self
            .embeddings
            .get(s.root_system(), t.root_system())?
            .iter()
            .map(|i| EmbeddingTables::new(i.clone(), Arc::clone(&s), Arc::clone(&t)))
            .collect::<Result<Vec<_>>>()?;
        let mut tables = self.tables.lock().unwrap();
        Ok(Arc::clone(tables.entry(key).or_insert(Arc::new(built))))
    }
}

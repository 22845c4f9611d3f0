//! On-disk store of enumerated Weyl groups.
//!
//! One file per type, `weyl-<type>.bin`:
//!
//! ```text
//! magic "ISOWEYL\0" | format version (u32 LE) | root-order hash (32 bytes)
//! | root count (u32 LE) | order (u64 LE) | permutation table | sha256 of all of the above
//! ```
//!
//! A file that fails any check is discarded and the group is enumerated
//! again. Nothing is ever partially reused.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use isoformal::error::{Error, Result};
use isoformal::{generate_weyl, RootSystem, SimpleType, WeylGroup, WeylSource};
use sha2::{Digest, Sha256};

const MAGIC: &[u8; 8] = b"ISOWEYL\0";
pub const FORMAT_VERSION: u32 = 1;
const HEADER_LEN: usize = 8 + 4 + 32 + 4 + 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheEvent {
    Hit,
    Miss,
    Regenerated,
}

pub struct DiskCache {
    dir: PathBuf,
    budget: u64,
    memo: Mutex<HashMap<SimpleType, Arc<WeylGroup>>>,
    events: Mutex<Vec<(SimpleType, CacheEvent)>>,
}

/// Hash of the root ordering the table's indices refer to.
pub fn root_order_hash(rs: &RootSystem) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(rs.simple_type().to_string().as_bytes());
    for r in rs.roots() {
        for x in r {
            h.update(format!("{x},").as_bytes());
        }
        h.update(b";");
    }
    h.finalize().into()
}

pub fn encode(w: &WeylGroup) -> Vec<u8> {
    let rs = w.root_system();
    let mut buf = Vec::with_capacity(HEADER_LEN + w.table().len() + 32);
    buf.extend_from_slice(MAGIC);
    buf.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    buf.extend_from_slice(&root_order_hash(rs));
    buf.extend_from_slice(&(rs.len() as u32).to_le_bytes());
    buf.extend_from_slice(&(w.order() as u64).to_le_bytes());
    buf.extend_from_slice(w.table());
    let sum = Sha256::digest(&buf);
    buf.extend_from_slice(&sum);
    buf
}

/// Checks every header field and the checksum, then rebuilds the group
/// (which re-validates the table itself).
pub fn decode(bytes: &[u8], rs: Arc<RootSystem>, budget: u64) -> Result<WeylGroup> {
    let bad = |what: &str| Error::Internal(format!("cache file rejected: {what}"));
    if bytes.len() < HEADER_LEN + 32 {
        return Err(bad("truncated"));
    }
    let (body, sum) = bytes.split_at(bytes.len() - 32);
    if Sha256::digest(body).as_slice() != sum {
        return Err(bad("checksum mismatch"));
    }
    if &body[..8] != MAGIC {
        return Err(bad("bad magic"));
    }
    let version = u32::from_le_bytes(body[8..12].try_into().unwrap());
    if version != FORMAT_VERSION {
        return Err(bad("format version"));
    }
    if body[12..44] != root_order_hash(&rs) {
        return Err(bad("root ordering changed"));
    }
    let n = u32::from_le_bytes(body[44..48].try_into().unwrap()) as usize;
    let order = u64::from_le_bytes(body[48..56].try_into().unwrap()) as usize;
    let table = &body[HEADER_LEN..];
    if n != rs.len() || table.len() != n * order {
        return Err(bad("table size"));
    }
    WeylGroup::from_table(rs, table.to_vec(), budget)
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>, budget: u64) -> Self {
        Self {
            dir: dir.into(),
            budget,
            memo: Mutex::new(HashMap::new()),
            events: Mutex::new(Vec::new()),
        }
    }

    pub fn path_for(&self, t: SimpleType) -> PathBuf {
        self.dir.join(format!("weyl-{t}.bin"))
    }

    pub fn events(&self) -> Vec<(SimpleType, CacheEvent)> {
        self.events.lock().unwrap().clone()
    }

    fn load_or_build(&self, t: SimpleType) -> Result<WeylGroup> {
        let rs = Arc::new(RootSystem::new(t));
        let path = self.path_for(t);
        let event = match fs::read(&path) {
            Ok(bytes) => match decode(&bytes, Arc::clone(&rs), self.budget) {
                Ok(w) => {
                    self.events.lock().unwrap().push((t, CacheEvent::Hit));
                    return Ok(w);
                }
                // The budget is a policy, not a property of the file.
                Err(e @ Error::Capacity { .. }) => return Err(e),
                Err(_) => CacheEvent::Regenerated,
            },
            Err(_) => CacheEvent::Miss,
        };
        let w = generate_weyl(rs, self.budget)?;
        self.events.lock().unwrap().push((t, event));
        if let Err(e) = write_atomic(&path, &encode(&w)) {
            eprintln!("warning: could not write {}: {e}", path.display());
        }
        Ok(w)
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(bytes)?;
    f.sync_all()?;
    fs::rename(tmp, path)
}

impl WeylSource for DiskCache {
    fn weyl(&self, t: SimpleType) -> Result<Arc<WeylGroup>> {
        if let Some(w) = self.memo.lock().unwrap().get(&t) {
            return Ok(Arc::clone(w));
        }
        let w = Arc::new(self.load_or_build(t)?);
        self.memo.lock().unwrap().insert(t, Arc::clone(&w));
        Ok(w)
    }
}

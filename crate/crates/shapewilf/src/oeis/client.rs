use std::collections::HashMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};
use std::time::Duration;

use super::{OeisError, OeisId, Provenance, Sequence};

pub const DEFAULT_ENDPOINT: &str = "https://oeis.org";
pub const ENDPOINT_ENV: &str = "SHAPEWILF_OEIS_ENDPOINT";
pub const CACHE_DIR_ENV: &str = "SHAPEWILF_CACHE_DIR";

/// Bundled b-file of A224295, generated locally.
pub const BUNDLED_A224295: &str = include_str!("../../data/A224295.txt");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransportError {
    #[error("not found")]
    NotFound,
    #[error("network unavailable: {0}")]
    Unavailable(String),
}

/// Fetches a URL as text.
pub trait Transport: Send + Sync {
    fn get(&self, url: &str) -> Result<String, TransportError>;
}

pub struct HttpTransport {
    agent: ureq::Agent,
}

impl HttpTransport {
    pub fn new(timeout: Duration) -> Self {
        let config = ureq::Agent::config_builder().timeout_global(Some(timeout)).build();
        HttpTransport { agent: config.into() }
    }
}

impl Default for HttpTransport {
    fn default() -> Self {
        HttpTransport::new(Duration::from_secs(20))
    }
}

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> Result<String, TransportError> {
        match self.agent.get(url).call() {
            Ok(mut resp) => resp.body_mut().read_to_string().map_err(|e| TransportError::Unavailable(e.to_string())),
            Err(ureq::Error::StatusCode(404)) => Err(TransportError::NotFound),
            Err(e) => Err(TransportError::Unavailable(e.to_string())),
        }
    }
}

/// Cache-first OEIS b-file client.
pub struct OeisClient<T = HttpTransport> {
    transport: T,
    endpoint: String,
    cache_dir: Option<PathBuf>,
    offline: bool,
    locks: Mutex<HashMap<OeisId, Arc<Mutex<()>>>>,
}

impl OeisClient<HttpTransport> {
    /// Endpoint and cache directory from the environment, real HTTP.
    pub fn from_env() -> Self {
        let mut c = OeisClient::new(HttpTransport::default());
        if let Ok(e) = std::env::var(ENDPOINT_ENV) {
            c.endpoint = e;
        }
        c.cache_dir = default_cache_dir();
        c
    }
}

impl<T: Transport> OeisClient<T> {
    pub fn new(transport: T) -> Self {
        OeisClient {
            transport,
            endpoint: DEFAULT_ENDPOINT.to_string(),
            cache_dir: None,
            offline: false,
            locks: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_endpoint(mut self, endpoint: impl Into<String>) -> Self {
        self.endpoint = endpoint.into();
        self
    }

    pub fn with_cache_dir(mut self, dir: Option<PathBuf>) -> Self {
        self.cache_dir = dir;
        self
    }

    pub fn offline(mut self, offline: bool) -> Self {
        self.offline = offline;
        self
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    fn url(&self, id: &OeisId) -> String {
        format!("{}/{}/{}", self.endpoint.trim_end_matches('/'), id, id.bfile_name())
    }

    fn cache_path(&self, id: &OeisId) -> Option<PathBuf> {
        self.cache_dir.as_ref().map(|d| d.join(id.bfile_name()))
    }

    fn lock_for(&self, id: &OeisId) -> Arc<Mutex<()>> {
        let mut locks = self.locks.lock().unwrap();
        locks.entry(id.clone()).or_default().clone()
    }

    /// Cache, then network (unless offline), then the bundled snapshot.
    pub fn fetch_sequence(&self, id: &OeisId) -> Result<Sequence, OeisError> {
        let lock = self.lock_for(id);
        let _guard = lock.lock().unwrap();

        if let Some(path) = self.cache_path(id) {
            if path.exists() {
                let text = fs::read_to_string(&path)?;
                return Sequence::from_text(id.clone(), text, Provenance::Cache);
            }
        }
        let mut network_error = None;
        if !self.offline {
            match self.transport.get(&self.url(id)) {
                Ok(text) => {
                    let seq = Sequence::from_text(id.clone(), text, Provenance::Network)?;
                    if let Some(path) = self.cache_path(id) {
                        write_atomic(&path, seq.text())?;
                    }
                    return Ok(seq);
                }
                Err(e) => network_error = Some(e),
            }
        }
        if let Some(text) = bundled(id) {
            return Sequence::from_text(id.clone(), text.to_string(), Provenance::Bundled);
        }
        Err(match network_error {
            Some(TransportError::Unavailable(msg)) => OeisError::Unavailable { id: id.clone(), message: msg },
            _ => OeisError::NotFound(id.clone()),
        })
    }
}

fn bundled(id: &OeisId) -> Option<&'static str> {
    (id.as_str() == "A224295").then_some(BUNDLED_A224295)
}

/// `$SHAPEWILF_CACHE_DIR`, else `$XDG_CACHE_HOME/shapewilf`, else `~/.cache/shapewilf`.
pub fn default_cache_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(CACHE_DIR_ENV) {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(d).join("shapewilf"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("shapewilf"))
}

fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        path.file_name().unwrap().to_string_lossy(),
        std::process::id()
    ));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(text.as_bytes())?;
    f.sync_all()?;
    fs::rename(&tmp, path)
}

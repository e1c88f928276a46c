//! Remote archive fetching with an on-disk cache.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use crate::corpus::{RawDocument, Source};
use crate::error::{Error, Result};

/// Overrides the default cache location when set.
pub const CACHE_ENV_VAR: &str = "ZIPFRACT_CACHE_DIR";

/// Plain-text URL template; `{id}` is replaced by the archive id.
pub const DEFAULT_URL_TEMPLATE: &str = "https://www.gutenberg.org/cache/epub/{id}/pg{id}.txt";

const FETCH_TIMEOUT: Duration = Duration::from_secs(60);

/// HTTP client for a plain-text archive, with one cache file per id.
#[derive(Debug, Clone)]
pub struct ArchiveClient {
    url_template: String,
    cache_dir: PathBuf,
}

impl ArchiveClient {
    pub fn new(url_template: impl Into<String>, cache_dir: impl Into<PathBuf>) -> ArchiveClient {
        ArchiveClient { url_template: url_template.into(), cache_dir: cache_dir.into() }
    }

    pub fn url_for(&self, archive_id: &str) -> String {
        self.url_template.replace("{id}", archive_id)
    }

    pub fn cache_path(&self, archive_id: &str) -> PathBuf {
        self.cache_dir.join(format!("{archive_id}.txt"))
    }

    /// Returns the archive document, preferring the cache. A fresh fetch is
    /// written to the cache via a temp file + atomic rename, so concurrent
    /// fetchers of one id never observe a partial file. Subsequent calls are
    /// cache hits with identical bytes.
    pub fn fetch(&self, archive_id: &str) -> Result<RawDocument> {
        if !valid_archive_id(archive_id) {
            return Err(Error::NotFound { archive_id: archive_id.to_string() });
        }

        let path = self.cache_path(archive_id);
        if path.exists() {
            let body = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
            return Ok(document(archive_id, body));
        }

        let body = self.download(archive_id)?;
        self.store(&path, &body)?;
        Ok(document(archive_id, body))
    }

    fn download(&self, archive_id: &str) -> Result<String> {
        let url = self.url_for(archive_id);
        let net_err = |reason: String| Error::NetworkUnavailable {
            archive_id: archive_id.to_string(),
            reason,
        };

        let client = reqwest::blocking::Client::builder()
            .timeout(FETCH_TIMEOUT)
            .build()
            .map_err(|e| net_err(e.to_string()))?;

        let response = client.get(&url).send().map_err(|e| net_err(e.to_string()))?;
        let status = response.status();
        if status.is_client_error() {
            return Err(Error::NotFound { archive_id: archive_id.to_string() });
        }
        if !status.is_success() {
            return Err(net_err(format!("{url} answered {status}")));
        }
        let body = response.text().map_err(|e| net_err(e.to_string()))?;
        if body.is_empty() {
            return Err(Error::NotFound { archive_id: archive_id.to_string() });
        }
        Ok(body)
    }

    fn store(&self, path: &Path, body: &str) -> Result<()> {
        fs::create_dir_all(&self.cache_dir).map_err(|e| Error::io(&self.cache_dir, e))?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.cache_dir)
            .map_err(|e| Error::io(&self.cache_dir, e))?;
        tmp.write_all(body.as_bytes()).map_err(|e| Error::io(path, e))?;
        tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
        Ok(())
    }
}

fn document(archive_id: &str, body: String) -> RawDocument {
    RawDocument {
        id: archive_id.to_string(),
        title: archive_id.to_string(),
        body,
        source: Source::RemoteArchive,
    }
}

fn valid_archive_id(id: &str) -> bool {
    !id.is_empty() && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_')
}

/// Fetches one document from the default archive into `cache_dir`.
pub fn fetch_remote(archive_id: &str, cache_dir: &Path) -> Result<RawDocument> {
    ArchiveClient::new(DEFAULT_URL_TEMPLATE, cache_dir).fetch(archive_id)
}

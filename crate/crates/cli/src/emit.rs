//! Output sinks. Files are written through a temporary in the target
//! directory and renamed into place.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::Value;

pub enum Sink {
    Stdout,
    File(PathBuf),
}

impl From<Option<PathBuf>> for Sink {
    fn from(p: Option<PathBuf>) -> Self {
        p.map_or(Sink::Stdout, Sink::File)
    }
}

impl Sink {
    pub fn json(&self, v: &Value) -> Result<(), crate::Failure> {
        let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
        s.push('\n');
        self.bytes(s.as_bytes())
    }

    pub fn bytes(&self, data: &[u8]) -> Result<(), crate::Failure> {
        match self {
            Sink::Stdout => {
                let mut out = std::io::stdout().lock();
                out.write_all(data)?;
                out.flush()?;
            }
            Sink::File(path) => write_atomic(path, data)?,
        }
        Ok(())
    }
}

pub fn write_atomic(path: &Path, data: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(data)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

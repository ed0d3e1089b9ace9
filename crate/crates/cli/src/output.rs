//! Output plumbing: stdout-or-file sinks with the accompanying manifest
//! side file, and the fixed 9-significant-digit float format.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::manifest::RunManifest;

/// Plain decimal with 9 significant digits, '\n'-free, no locale formatting.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (8 - mag).max(0) as usize;
    format!("{:.*}", decimals, x)
}

pub struct OutputSink {
    writer: Box<dyn Write>,
    path: Option<PathBuf>,
}

impl OutputSink {
    /// Opens the requested file (resolving relative paths against
    /// $GRAPHWALK_OUT_DIR when set) or falls back to stdout.
    pub fn open(path: &Option<PathBuf>) -> std::io::Result<Self> {
        match path {
            None => Ok(OutputSink { writer: Box::new(std::io::stdout().lock()), path: None }),
            Some(p) => {
                let resolved = resolve(p);
                if let Some(dir) = resolved.parent() {
                    if !dir.as_os_str().is_empty() {
                        std::fs::create_dir_all(dir)?;
                    }
                }
                let file = File::create(&resolved)?;
                Ok(OutputSink {
                    writer: Box::new(BufWriter::new(file)),
                    path: Some(resolved),
                })
            }
        }
    }

    pub fn line(&mut self, s: &str) -> std::io::Result<()> {
        self.writer.write_all(s.as_bytes())?;
        self.writer.write_all(b"\n")
    }

    /// Flushes and, for file outputs, writes `<path>.manifest.json`.
    pub fn finish(mut self, manifest: &RunManifest) -> Result<(), crate::CliError> {
        self.writer.flush()?;
        if let Some(path) = &self.path {
            let mut side = path.as_os_str().to_owned();
            side.push(".manifest.json");
            std::fs::write(side, manifest.to_json() + "\n")?;
        }
        Ok(())
    }
}

fn resolve(p: &Path) -> PathBuf {
    if p.is_relative() {
        if let Ok(dir) = std::env::var("GRAPHWALK_OUT_DIR") {
            if !dir.is_empty() {
                return Path::new(&dir).join(p);
            }
        }
    }
    p.to_path_buf()
}

#[cfg(test)]
mod tests {
    use super::fmt_sig;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(0.5), "0.500000000");
        assert_eq!(fmt_sig(10.0), "10.0000000");
        assert_eq!(fmt_sig(0.05), "0.0500000000");
        assert_eq!(fmt_sig(-1.0), "-1.00000000");
        assert_eq!(fmt_sig(123456789.0), "123456789");
    }
}

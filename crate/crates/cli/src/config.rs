//! Run configuration: seeding, threads, output directory, tolerance
//! overrides, and the provenance header shared by all output files.

use rmt_core::{Error, Result};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Fixed default seed so default runs are reproducible; override with
/// --seed or the RMT_SEED environment variable (flag wins over env).
pub const DEFAULT_SEED: u64 = 12345;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub threads: Option<usize>,
    pub out_dir: PathBuf,
    pub tolerances: BTreeMap<String, f64>,
}

impl RunConfig {
    pub fn resolve(
        seed_flag: Option<u64>,
        threads: &str,
        out_dir: &Path,
        config_path: Option<&Path>,
    ) -> Result<Self> {
        let mut tolerances = BTreeMap::new();
        let mut config_seed = None;
        if let Some(path) = config_path {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                    path: path.display().to_string(),
                    line: lineno + 1,
                    message: "expected key=value".into(),
                })?;
                let (key, value) = (key.trim(), value.trim());
                if key == "seed" {
                    config_seed = Some(value.parse::<u64>().map_err(|_| Error::Parse {
                        path: path.display().to_string(),
                        line: lineno + 1,
                        message: format!("bad seed {value:?}"),
                    })?);
                } else {
                    let v: f64 = value.parse().map_err(|_| Error::Parse {
                        path: path.display().to_string(),
                        line: lineno + 1,
                        message: format!("bad value {value:?} for key {key:?}"),
                    })?;
                    tolerances.insert(key.to_string(), v);
                }
            }
        }
        let env_seed = std::env::var("RMT_SEED")
            .ok()
            .and_then(|s| s.parse::<u64>().ok());
        let seed = seed_flag
            .or(env_seed)
            .or(config_seed)
            .unwrap_or(DEFAULT_SEED);
        let threads = match threads {
            "auto" => None,
            n => Some(n.parse::<usize>().map_err(|_| {
                Error::Domain(format!("--threads must be 'auto' or a positive integer, got {n:?}"))
            })?),
        };
        if threads == Some(0) {
            return Err(Error::Domain("--threads must be positive".into()));
        }
        Ok(RunConfig {
            seed,
            threads,
            out_dir: out_dir.to_path_buf(),
            tolerances,
        })
    }

    pub fn tolerance(&self, key: &str, default: f64) -> f64 {
        self.tolerances.get(key).copied().unwrap_or(default)
    }

    /// Run a closure inside the configured rayon pool (or the default pool).
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.threads {
            None => Ok(f()),
            Some(k) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build()
                    .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }

    /// Open an output file with the provenance header already written.
    ///
    /// The header records the logical command and seed but never the thread
    /// count, so outputs are byte-identical across --threads settings.
    pub fn create_output(&self, name: &str, descriptor: &str) -> Result<std::fs::File> {
        std::fs::create_dir_all(&self.out_dir).map_err(|e| Error::Io {
            path: self.out_dir.display().to_string(),
            message: e.to_string(),
        })?;
        let path = self.out_dir.join(name);
        let mut file = std::fs::File::create(&path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        writeln!(
            file,
            "# rmtlab v{} | {} | seed={}",
            env!("CARGO_PKG_VERSION"),
            descriptor,
            self.seed
        )
        .map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Ok(file)
    }
}

/// Map library errors onto the documented process exit codes.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) | Error::Capability(_) | Error::Range(_) => 2,
        Error::Instability { .. }
        | Error::Solver(_)
        | Error::Numerical(_)
        | Error::Accuracy { .. } => 3,
        Error::InsufficientData(_) => 4,
        Error::Io { .. } => 5,
        Error::Parse { .. } => 6,
        Error::Unfolding(_) => 7,
    }
}

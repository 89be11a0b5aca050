use std::fmt;

/// Why a command stopped. Usage errors exit with 2, domain errors with 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Domain(msg) => write!(f, "error: {msg}"),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn usage(msg: impl fmt::Display) -> CliError {
    CliError::Usage(msg.to_string())
}

pub fn domain(msg: impl fmt::Display) -> CliError {
    CliError::Domain(msg.to_string())
}

/// Hard limits on user-supplied sizes.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub enabled: bool,
}

pub const MAX_BOX_SIDE: u64 = 5;
pub const MAX_N: u64 = 12;
pub const MAX_WORD: u64 = 10;

impl Caps {
    fn check(&self, what: &str, value: u64, max: u64) -> CliResult<()> {
        if self.enabled && value > max {
            return Err(usage(format!(
                "{what} = {value} exceeds the cap {max} (pass --unsafe-no-caps to lift it)"
            )));
        }
        Ok(())
    }

    pub fn side(&self, what: &str, value: u64) -> CliResult<()> {
        self.check(what, value, MAX_BOX_SIDE)
    }

    pub fn degree(&self, what: &str, value: u64) -> CliResult<()> {
        self.check(what, value, MAX_N)
    }

    pub fn word(&self, what: &str, value: u64) -> CliResult<()> {
        self.check(what, value, MAX_WORD)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps() {
        let on = Caps { enabled: true };
        assert!(on.side("k", 5).is_ok());
        let err = on.side("k", 6).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("cap 5"));
        assert!(on.degree("N", 13).is_err());
        assert!(on.word("word length", 10).is_ok());
        assert!(Caps { enabled: false }.side("k", 60).is_ok());
    }
}

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite word over the alphabet `[m] = {1, ..., m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WordJson", into = "WordJson")]
pub struct Word {
    m: u32,
    letters: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    m: u32,
    letters: Vec<u32>,
}

impl Word {
    pub fn new(m: u32, letters: Vec<u32>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidWord("alphabet size must be positive".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&a| a == 0 || a > m) {
            return Err(Error::InvalidWord(format!("letter {bad} outside [1,{m}]")));
        }
        Ok(Word { m, letters })
    }

    /// Parses `132434` (one digit per letter) or `1,3,2,4` (comma separated).
    pub fn parse(s: &str, m: u32) -> Result<Self> {
        let s = s.trim();
        let letters = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|e| Error::InvalidWord(format!("`{t}`: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::InvalidWord(format!("`{c}` is not a digit"))))
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(m, letters)
    }

    pub fn alphabet_size(&self) -> u32 {
        self.m
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl TryFrom<WordJson> for Word {
    type Error = Error;

    fn try_from(w: WordJson) -> Result<Self> {
        Word::new(w.m, w.letters)
    }
}

impl From<Word> for WordJson {
    fn from(w: Word) -> Self {
        WordJson { m: w.m, letters: w.letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.m > 9 { "," } else { "" };
        let parts: Vec<String> = self.letters.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(sep))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let w = Word::parse("132434", 4).unwrap();
        assert_eq!(w.letters(), &[1, 3, 2, 4, 3, 4]);
        assert_eq!(Word::parse("1,3,2", 3).unwrap().letters(), &[1, 3, 2]);
        assert_eq!(w.to_string(), "132434");
        assert!(Word::parse("15", 4).is_err());
        assert!(Word::parse("10", 4).is_err());
        assert!(Word::new(0, vec![]).is_err());
    }

    #[test]
    fn json_form() {
        let w = Word::parse("21", 2).unwrap();
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"m":2,"letters":[2,1]}"#);
        assert_eq!(serde_json::from_str::<Word>(&s).unwrap(), w);
        assert!(serde_json::from_str::<Word>(r#"{"m":2,"letters":[3]}"#).is_err());
    }
}

//! Candidate files: one or more cusp literals per line with an optional
//! `degree N` line, or a JSON document `{"degree": N, "cusps": ["[6]", …]}`.

use serde::Deserialize;

use crate::cusp::{parse_literals, CuspType};
use crate::error::{Error, Result};
use crate::invariants::CuspCollection;

#[derive(Clone, Debug)]
pub struct CandidateFile {
    pub degree: Option<u64>,
    pub cusps: Vec<CuspType>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonCandidate {
    degree: Option<u64>,
    cusps: Vec<String>,
}

impl CandidateFile {
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            return Self::parse_json(text);
        }
        let mut degree = None;
        let mut cusps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim_start();
            if trimmed.is_empty() {
                continue;
            }
            let col = content.chars().count() - trimmed.chars().count() + 1;
            if let Some(rest) = trimmed.strip_prefix("degree") {
                let value = rest.trim().trim_start_matches([':', '=']).trim();
                let d = value.parse::<u64>().map_err(|_| Error::Parse {
                    line,
                    col: col + "degree".len(),
                    msg: format!("expected a degree, found '{value}'"),
                })?;
                if degree.replace(d).is_some() {
                    return Err(Error::Parse {
                        line,
                        col,
                        msg: "degree given twice".into(),
                    });
                }
                continue;
            }
            cusps.extend(parse_literals(trimmed, line, col)?);
        }
        if cusps.is_empty() {
            return Err(Error::InvalidInput("candidate file lists no cusps".into()));
        }
        Ok(CandidateFile { degree, cusps })
    }

    fn parse_json(text: &str) -> Result<Self> {
        let doc: JsonCandidate = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            col: e.column(),
            msg: e.to_string(),
        })?;
        let cusps = doc
            .cusps
            .iter()
            .enumerate()
            .map(|(i, s)| {
                CuspType::parse(s).map_err(|e| match e {
                    Error::Parse { col, msg, .. } => {
                        Error::InvalidInput(format!("cusps[{i}] \"{s}\": column {col}: {msg}"))
                    }
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if cusps.is_empty() {
            return Err(Error::InvalidInput("candidate file lists no cusps".into()));
        }
        Ok(CandidateFile {
            degree: doc.degree,
            cusps,
        })
    }

    pub fn collection(&self) -> Result<CuspCollection> {
        CuspCollection::new(self.cusps.clone())
    }
}

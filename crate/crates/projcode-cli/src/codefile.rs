//! JSON code files: one canonical RREF literal per codeword, in code order.

use std::path::Path;

use projcode::construct::{CodeKind, ConstructError, SubspaceCode};
use projcode::ff::field_of_order;
use projcode::matgf::MatGF;
use projcode::subspace::Subspace;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CodeFileError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub format_version: u32,
    pub q: u32,
    pub n: usize,
    pub kind: Kind,
    pub codewords: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    ConstantDimension,
    Projective,
}

impl From<CodeKind> for Kind {
    fn from(k: CodeKind) -> Self {
        match k {
            CodeKind::ConstantDimension => Kind::ConstantDimension,
            CodeKind::Projective => Kind::Projective,
        }
    }
}

impl From<Kind> for CodeKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::ConstantDimension => CodeKind::ConstantDimension,
            Kind::Projective => CodeKind::Projective,
        }
    }
}

pub fn to_code_file(code: &SubspaceCode) -> Result<CodeFile, CodeFileError> {
    if code.q() > 36 {
        return Err(CodeFileError::InvariantViolation(format!("q = {} has no single-digit literal form", code.q())));
    }
    Ok(CodeFile {
        format_version: FORMAT_VERSION,
        q: code.q(),
        n: code.n,
        kind: code.kind.into(),
        codewords: code.words.iter().map(Subspace::to_literal).collect(),
    })
}

/// Pretty JSON, two-space indent, LF line endings, trailing newline.
pub fn to_text(code: &SubspaceCode) -> Result<String, CodeFileError> {
    let mut s = serde_json::to_string_pretty(&to_code_file(code)?).expect("serializable");
    s.push('\n');
    Ok(s)
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// Byte offset of the opening quote of the i-th string in the codewords array.
fn codeword_offset(text: &str, i: usize) -> Option<usize> {
    let key = text.find("\"codewords\"")?;
    let mut pos = key + text[key..].find('[')?;
    for j in 0..=i {
        let open = pos + text[pos..].find('"')?;
        if j == i {
            return Some(open);
        }
        pos = open + 1 + text[open + 1..].find('"')? + 1;
    }
    None
}

pub fn from_text(text: &str) -> Result<SubspaceCode, CodeFileError> {
    let file: CodeFile = serde_json::from_str(text)
        .map_err(|e| CodeFileError::Parse { line: e.line(), column: e.column(), msg: e.to_string() })?;
    if file.format_version != FORMAT_VERSION {
        return Err(CodeFileError::InvariantViolation(format!("unsupported format_version {}", file.format_version)));
    }
    let field = field_of_order(file.q)
        .map_err(|e| CodeFileError::InvariantViolation(format!("q = {}: {e}", file.q)))?;
    let mut words = Vec::with_capacity(file.codewords.len());
    for (i, lit) in file.codewords.iter().enumerate() {
        let locate = |col_in_lit: usize, msg: String| {
            let (line, column) = codeword_offset(text, i).map_or((0, 0), |o| line_col(text, o + 1 + col_in_lit));
            CodeFileError::Parse { line, column, msg }
        };
        if let Some((pos, c)) = lit.char_indices().find(|&(_, c)| c != ';' && c.to_digit(36).is_none_or(|d| d >= file.q)) {
            return Err(locate(pos, format!("codeword {i}: {c:?} is not an element of GF({})", file.q)));
        }
        let m = MatGF::parse(field.clone(), file.n, lit).map_err(|e| locate(0, format!("codeword {i}: {e}")))?;
        let s = Subspace::from_matrix(&m);
        if s.to_literal() != *lit {
            return Err(CodeFileError::InvariantViolation(format!(
                "codeword {i} ({lit}) is not a reduced row echelon basis; expected {}",
                s.to_literal()
            )));
        }
        words.push(s);
    }
    SubspaceCode::new(field, file.n, file.kind.into(), words).map_err(|e| match e {
        ConstructError::Duplicate(w) => CodeFileError::InvariantViolation(format!("duplicate codeword {w}")),
        other => CodeFileError::InvariantViolation(other.to_string()),
    })
}

pub fn save_code(code: &SubspaceCode, path: &Path) -> Result<(), CodeFileError> {
    let text = to_text(code)?;
    std::fs::write(path, text).map_err(|source| CodeFileError::Io { path: path.display().to_string(), source })
}

pub fn load_code(path: &Path) -> Result<SubspaceCode, CodeFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| CodeFileError::Io { path: path.display().to_string(), source })?;
    from_text(&text)
}

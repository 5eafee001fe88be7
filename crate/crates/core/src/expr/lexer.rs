use num_bigint::BigUint;

use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Int(BigUint),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eps,
    Gen,
    St,
    /// Unlexable input; carries the message reported if the parser reaches it.
    Invalid(String),
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Int(n) => format!("integer {n}"),
            TokenKind::Plus => "'+'".into(),
            TokenKind::Minus => "'-'".into(),
            TokenKind::Star => "'*'".into(),
            TokenKind::Slash => "'/'".into(),
            TokenKind::Caret => "'^'".into(),
            TokenKind::LParen => "'('".into(),
            TokenKind::RParen => "')'".into(),
            TokenKind::Eps => "'eps'".into(),
            TokenKind::Gen => "'H'".into(),
            TokenKind::St => "'st'".into(),
            TokenKind::Invalid(m) => m.clone(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

/// Token with its character offset and length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub offset: usize,
    pub len: usize,
}

/// Tokens up to the end of input or the first unlexable character, which
/// becomes a final [`TokenKind::Invalid`] token.
pub fn tokenize(input: &str) -> Vec<Token> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let kind = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            TokenKind::Int(digits.parse().expect("ascii digits"))
        } else if c.is_alphabetic() {
            while i < chars.len() && chars[i].is_alphanumeric() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            match word.as_str() {
                "eps" => TokenKind::Eps,
                "H" => TokenKind::Gen,
                "st" => TokenKind::St,
                _ => {
                    tokens.push(invalid(format!("unknown identifier '{word}'"), start));
                    return tokens;
                }
            }
        } else {
            i += 1;
            match c {
                '+' => TokenKind::Plus,
                '-' => TokenKind::Minus,
                '*' => TokenKind::Star,
                '/' => TokenKind::Slash,
                '^' => TokenKind::Caret,
                '(' => TokenKind::LParen,
                ')' => TokenKind::RParen,
                _ => {
                    tokens.push(invalid(format!("unexpected character '{c}'"), start));
                    return tokens;
                }
            }
        };
        tokens.push(Token { kind, offset: start, len: i - start });
    }
    tokens.push(Token { kind: TokenKind::Eof, offset: chars.len(), len: 0 });
    tokens
}

fn invalid(message: String, offset: usize) -> Token {
    Token { kind: TokenKind::Invalid(message), offset, len: 0 }
}

impl Token {
    /// Error at this token; an invalid token reports its own message.
    pub fn error(&self, message: impl Into<String>) -> ParseError {
        match &self.kind {
            TokenKind::Invalid(m) => ParseError::new(m.clone(), self.offset),
            _ => ParseError::new(message, self.offset),
        }
    }
}

//! Input documents: a ring declaration followed by named ideals and matrices.
//!
//! ```text
//! ring x y z;
//! weights 1 1 2;        # optional, default all 1
//! order grevlex;        # optional: grevlex, grlex or lex
//! ideal I : x^2 - 1/2*y, y*z;
//! matrix M 2 2 : [x, y; -y, x];
//! ```

use std::fmt;
use std::sync::Arc;

use codim4_core::poly::parse::{TokenKind, TokenStream};
use codim4_core::poly::ParseError;
use codim4_core::{MonomialOrder, PolyRing, QMatrix, QPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Ideal(Vec<QPoly>),
    Matrix(QMatrix),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub ring: Arc<PolyRing>,
    /// Whether `weights` and `order` were written out.
    pub explicit_weights: bool,
    pub explicit_order: bool,
    pub objects: Vec<(String, Object)>,
}

impl Document {
    pub fn new(ring: &Arc<PolyRing>) -> Self {
        let explicit_weights = ring.weights().iter().any(|&w| w != 1);
        let explicit_order = ring.order() != MonomialOrder::Grevlex;
        Document { ring: ring.clone(), explicit_weights, explicit_order, objects: Vec::new() }
    }

    pub fn with_ideal(mut self, name: &str, gens: Vec<QPoly>) -> Self {
        self.objects.push((name.to_string(), Object::Ideal(gens)));
        self
    }

    pub fn with_matrix(mut self, name: &str, m: QMatrix) -> Self {
        self.objects.push((name.to_string(), Object::Matrix(m.without_degrees())));
        self
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    pub fn ideal(&self, name: &str) -> Option<&[QPoly]> {
        match self.get(name)? {
            Object::Ideal(g) => Some(g),
            Object::Matrix(_) => None,
        }
    }

    pub fn matrix(&self, name: &str) -> Option<&QMatrix> {
        match self.get(name)? {
            Object::Matrix(m) => Some(m),
            Object::Ideal(_) => None,
        }
    }

    /// The first ideal in the document, with its name.
    pub fn first_ideal(&self) -> Option<(&str, &[QPoly])> {
        self.objects.iter().find_map(|(n, o)| match o {
            Object::Ideal(g) => Some((n.as_str(), g.as_slice())),
            Object::Matrix(_) => None,
        })
    }
}

fn keyword(ts: &TokenStream) -> Option<String> {
    match &ts.peek().kind {
        TokenKind::Ident(s) => Some(s.clone()),
        _ => None,
    }
}

pub fn parse(text: &str) -> Result<Document, ParseError> {
    let mut ts = TokenStream::new(text)?;
    if keyword(&ts).as_deref() != Some("ring") {
        return Err(ts.error(&["`ring`"]));
    }
    ts.next_token();
    let mut names = Vec::new();
    while !ts.at(&TokenKind::Semi) {
        let here = ts.peek().clone();
        let name = ts.expect_ident()?;
        if names.contains(&name) {
            return Err(at(&here, format!("variable `{name}` declared twice")));
        }
        names.push(name);
    }
    if names.is_empty() {
        return Err(ts.error(&["identifier"]));
    }
    ts.expect(&TokenKind::Semi, "`;`")?;

    let mut weights = None;
    let mut order = None;
    loop {
        match keyword(&ts).as_deref() {
            Some("weights") if weights.is_none() && order.is_none() => {
                ts.next_token();
                let mut w = Vec::new();
                while !ts.at(&TokenKind::Semi) {
                    let v = ts.expect_usize()?;
                    w.push(u32::try_from(v).map_err(|_| ts.error_msg("weight too large"))?);
                }
                if w.len() != names.len() {
                    return Err(ts.error_msg(format!("{} weights for {} variables", w.len(), names.len())));
                }
                if w.contains(&0) {
                    return Err(ts.error_msg("weights must be positive"));
                }
                ts.expect(&TokenKind::Semi, "`;`")?;
                weights = Some(w);
            }
            Some("order") if order.is_none() => {
                ts.next_token();
                let here = ts.peek().clone();
                let name = ts.expect_ident()?;
                let o = MonomialOrder::from_name(&name)
                    .ok_or_else(|| at(&here, format!("unknown order `{name}`, expected grevlex, grlex or lex")))?;
                ts.expect(&TokenKind::Semi, "`;`")?;
                order = Some(o);
            }
            _ => break,
        }
    }
    let ring = PolyRing::new(names, weights.clone(), order.unwrap_or(MonomialOrder::Grevlex))
        .map_err(|e| ts.error_msg(e.to_string()))?;
    let mut doc = Document { ring: ring.clone(), explicit_weights: weights.is_some(), explicit_order: order.is_some(), objects: Vec::new() };

    while !ts.at(&TokenKind::Eof) {
        let here = ts.peek().clone();
        let kw = keyword(&ts).ok_or_else(|| ts.error(&["`ideal`", "`matrix`", "end of input"]))?;
        ts.next_token();
        let obj_name_tok = ts.peek().clone();
        let name = match kw.as_str() {
            "ideal" | "matrix" => ts.expect_ident()?,
            _ => return Err(at(&here, format!("unknown statement `{kw}`, expected `ideal` or `matrix`"))),
        };
        if doc.get(&name).is_some() {
            return Err(at(&obj_name_tok, format!("`{name}` is already defined")));
        }
        let obj = if kw == "ideal" {
            ts.expect(&TokenKind::Colon, "`:`")?;
            let mut gens = vec![ts.parse_expr(&ring)?];
            while ts.eat(&TokenKind::Comma) {
                gens.push(ts.parse_expr(&ring)?);
            }
            Object::Ideal(gens)
        } else {
            let rows = ts.expect_usize()?;
            let cols = ts.expect_usize()?;
            ts.expect(&TokenKind::Colon, "`:`")?;
            let start = ts.peek().clone();
            let entries = ts.parse_matrix(&ring)?;
            let shape_ok = entries.len() == rows && entries.iter().all(|r| r.len() == cols);
            if !shape_ok || (rows == 0) != entries.is_empty() {
                let found: Vec<String> = entries.iter().map(|r| r.len().to_string()).collect();
                return Err(at(
                    &start,
                    format!("matrix `{name}` declared {rows}x{cols}, rows have lengths [{}]", found.join(", ")),
                ));
            }
            let m = if rows == 0 { QMatrix::zero(&ring, 0, cols) } else { QMatrix::from_rows(&ring, entries).expect("shape checked") };
            Object::Matrix(m)
        };
        ts.expect(&TokenKind::Semi, "`;`")?;
        doc.objects.push((name, obj));
    }
    Ok(doc)
}

fn at(tok: &codim4_core::poly::parse::Token, message: String) -> ParseError {
    ParseError { line: tok.line, col: tok.col, found: tok.kind.describe(), expected: Vec::new(), message: Some(message) }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {};", self.ring.names().join(" "))?;
        if self.explicit_weights {
            let w: Vec<String> = self.ring.weights().iter().map(u32::to_string).collect();
            writeln!(f, "weights {};", w.join(" "))?;
        }
        if self.explicit_order {
            writeln!(f, "order {};", self.ring.order().name())?;
        }
        for (name, obj) in &self.objects {
            match obj {
                Object::Ideal(gens) => {
                    let g: Vec<String> = gens.iter().map(|p| p.to_string()).collect();
                    writeln!(f, "ideal {name} : {};", g.join(", "))?;
                }
                Object::Matrix(m) => {
                    let rows: Vec<String> = (0..m.rows())
                        .map(|i| m.row(i).iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
                        .collect();
                    if m.rows() > 1 {
                        writeln!(f, "matrix {name} {} {} : [", m.rows(), m.cols())?;
                        writeln!(f, "  {}", rows.join(";\n  "))?;
                        writeln!(f, "];")?;
                    } else {
                        writeln!(f, "matrix {name} {} {} : [{}];", m.rows(), m.cols(), rows.join("; "))?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_statement() {
        let doc = parse("ring x y; ideal I : x^2 - 1/2*y;").unwrap();
        assert_eq!(doc.objects.len(), 1);
        let gens = doc.ideal("I").unwrap();
        assert_eq!(gens[0].to_string(), "x^2 - 1/2*y");
        assert!(!doc.explicit_weights && !doc.explicit_order);
    }

    #[test]
    fn matrix_statement() {
        let doc = parse("ring x y;\nmatrix M 2 2 : [x, y; -y, x];").unwrap();
        let m = doc.matrix("M").unwrap();
        assert_eq!(m.shape(), (2, 2));
        assert_eq!(m.get(1, 0).to_string(), "-y");
    }

    #[test]
    fn double_star_is_rejected_at_the_second_star() {
        let err = parse("ring x;\nideal I : x**2;").unwrap_err();
        assert_eq!((err.line, err.col), (2, 13));
        assert_eq!(err.found, "`*`");
        assert!(err.expected.contains(&"identifier".to_string()));
    }

    #[test]
    fn weights_order_and_comments() {
        let text = "# header\nring a b lam;\nweights 1 1 2;\norder lex; # trailing\nideal J : a*b - lam;\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.ring.weights(), [1, 1, 2]);
        assert_eq!(doc.ring.order(), MonomialOrder::Lex);
        assert_eq!(parse(&doc.to_string()).unwrap(), doc);
    }

    #[test]
    fn semantic_errors() {
        for (text, needle) in [
            ("ideal I : x;", "`ring`"),
            ("ring x x;", "declared twice"),
            ("ring x; weights 1 2;", "2 weights"),
            ("ring x; order foo;", "unknown order"),
            ("ring x; ideal I : y;", "undeclared variable"),
            ("ring x; matrix M 2 1 : [x];", "declared 2x1"),
            ("ring x; ideal I : x; ideal I : x;", "already defined"),
            ("ring x; vector v : x;", "unknown statement"),
            ("ring x; ideal I : x y;", "`;`"),
            ("ring x; ideal I : 1/0;", "zero denominator"),
        ] {
            let err = parse(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text}: {err}");
        }
    }

    #[test]
    fn printing_reparses() {
        let text = "ring x y z;\nideal I : 3/4*x^2*y - z, 7;\nmatrix N 1 3 : [x, 0, -2*y*z];\nmatrix M 2 2 : [\n  x, y;\n  z, x + y\n];\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.to_string(), text);
        assert_eq!(parse(&doc.to_string()).unwrap(), doc);
    }
}

//! Plain-text format for simplicial sets and maps.
//!
//! ```text
//! # comment
//! sset <name>
//! dim <k> <count>
//! <id>: <face_0> … <face_k>        one line per cell, only for k ≥ 1
//! end
//! map <name> <source-name> <target-name>
//! dim <k>: <image_0> <image_1> …
//! end
//! ```
//!
//! A face or image is `[w_1,…,w_r; id]`: the degeneracy `s_{w_1}…s_{w_r}`
//! (strictly decreasing indices, possibly empty) applied to nondegenerate
//! cell `id` of the appropriate dimension.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::set::{SimplicialMap, SimplicialSet};
use super::simplex::{Degeneracy, Simplex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
pub struct Document {
    pub sets: BTreeMap<String, SimplicialSet>,
    pub maps: BTreeMap<String, SimplicialMap>,
    /// Names in order of appearance.
    pub order: Vec<String>,
}

impl Document {
    pub fn first_set(&self) -> Option<&SimplicialSet> {
        self.order.iter().find_map(|n| self.sets.get(n))
    }

    pub fn first_map(&self) -> Option<&SimplicialMap> {
        self.order.iter().find_map(|n| self.maps.get(n))
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn format_simplex(s: &Simplex) -> String {
    let word: Vec<String> = s.word().0.iter().map(|j| j.to_string()).collect();
    format!("[{};{}]", word.join(","), s.id)
}

pub fn write_sset(name: &str, x: &SimplicialSet) -> String {
    let mut out = format!("sset {name}\n");
    for (k, &c) in x.counts().iter().enumerate() {
        let _ = writeln!(out, "dim {k} {c}");
        if k > 0 {
            for i in 0..c {
                let faces: Vec<String> = x.cell_faces(k, i).iter().map(format_simplex).collect();
                let _ = writeln!(out, "{i}: {}", faces.join(" "));
            }
        }
    }
    out.push_str("end\n");
    out
}

pub fn write_map(name: &str, source: &str, target: &str, f: &SimplicialMap) -> String {
    let mut out = format!("map {name} {source} {target}\n");
    for (k, level) in f.images.iter().enumerate() {
        let images: Vec<String> = level.iter().map(format_simplex).collect();
        let _ = writeln!(out, "dim {k}: {}", images.join(" "));
    }
    out.push_str("end\n");
    out
}

struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn column(&self) -> usize {
        self.pos + 1
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with([' ', '\t']) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn word(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest.find([' ', '\t', ':', '[', ']', ';', ',']).unwrap_or(rest.len());
        if len == 0 {
            return Err(parse_err(self.line, self.column(), "expected a word"));
        }
        self.pos += len;
        Ok(&self.text[start..start + len])
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let col = self.column();
        let w = self.word()?;
        w.parse().map_err(|_| parse_err(self.line, col, format!("expected a number, found `{w}`")))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(parse_err(self.line, self.column(), format!("expected `{c}`")))
        }
    }

    fn peek(&mut self, c: char) -> bool {
        self.skip_ws();
        self.text[self.pos..].starts_with(c)
    }

    /// `[w,…; id]` for a simplex of dimension `dim`.
    fn simplex(&mut self, dim: usize) -> Result<Simplex> {
        let col = {
            self.skip_ws();
            self.column()
        };
        self.expect('[')?;
        let mut word = Vec::new();
        while !self.peek(';') {
            word.push(self.number()?);
            if !self.peek(';') {
                self.expect(',')?;
            }
        }
        self.expect(';')?;
        let id = self.number()?;
        self.expect(']')?;
        let word = Degeneracy::new(word).map_err(|e| parse_err(self.line, col, e.to_string()))?;
        if word.len() > dim {
            return Err(parse_err(self.line, col, "degeneracy word longer than the dimension"));
        }
        Simplex::from_word(&word, dim - word.len(), id).map_err(|e| parse_err(self.line, col, e.to_string()))
    }
}

enum Block {
    Set { name: String, counts: Vec<usize>, cells: Vec<Vec<Vec<Simplex>>>, start: usize },
    Map { name: String, source: String, target: String, images: Vec<Vec<Simplex>>, start: usize },
}

pub fn parse_document(text: &str) -> Result<Document> {
    let mut doc = Document::default();
    let mut block: Option<Block> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor { line, text: content, pos: 0 };
        if cur.at_end() {
            continue;
        }
        let head_col = cur.column();
        let head = cur.word()?;
        match (head, &mut block) {
            ("sset", None) => {
                let name = cur.word()?.to_string();
                block = Some(Block::Set { name, counts: Vec::new(), cells: Vec::new(), start: line });
            }
            ("map", None) => {
                let name = cur.word()?.to_string();
                let source = cur.word()?.to_string();
                let target = cur.word()?.to_string();
                block = Some(Block::Map { name, source, target, images: Vec::new(), start: line });
            }
            ("dim", Some(Block::Set { counts, cells, .. })) => {
                let k = cur.number()?;
                if k != counts.len() {
                    return Err(parse_err(line, head_col, format!("expected dim {}", counts.len())));
                }
                counts.push(cur.number()?);
                cells.push(if k == 0 { vec![Vec::new(); counts[0]] } else { Vec::new() });
            }
            ("dim", Some(Block::Map { images, .. })) => {
                let k = cur.number()?;
                if k != images.len() {
                    return Err(parse_err(line, head_col, format!("expected dim {}", images.len())));
                }
                cur.expect(':')?;
                let mut level = Vec::new();
                while !cur.at_end() {
                    level.push(cur.simplex(k)?);
                }
                images.push(level);
            }
            ("end", Some(_)) => {
                if !cur.at_end() {
                    return Err(parse_err(line, cur.column(), "trailing text after `end`"));
                }
                match block.take().unwrap() {
                    Block::Set { name, counts, cells, start } => {
                        for (k, c) in counts.iter().enumerate() {
                            if cells[k].len() != *c {
                                return Err(parse_err(start, 1, format!("dim {k}: {} cells listed, {c} declared", cells[k].len())));
                            }
                        }
                        let x = SimplicialSet::new(cells).map_err(|e| parse_err(start, 1, e.to_string()))?;
                        doc.order.push(name.clone());
                        doc.sets.insert(name, x);
                    }
                    Block::Map { name, source, target, images, start } => {
                        let lookup = |n: &str| {
                            doc.sets.get(n).cloned().ok_or_else(|| parse_err(start, 1, format!("unknown simplicial set `{n}`")))
                        };
                        let f = SimplicialMap::new(lookup(&source)?, lookup(&target)?, images)
                            .map_err(|e| parse_err(start, 1, e.to_string()))?;
                        doc.order.push(name.clone());
                        doc.maps.insert(name, f);
                    }
                }
            }
            (id, Some(Block::Set { counts, cells, .. })) => {
                let k = counts.len().checked_sub(1).ok_or_else(|| parse_err(line, head_col, "cell before any `dim`"))?;
                if k == 0 {
                    return Err(parse_err(line, head_col, "vertices have no face lines"));
                }
                let expected = cells[k].len();
                if id.parse::<usize>().ok() != Some(expected) {
                    return Err(parse_err(line, head_col, format!("expected cell id {expected}")));
                }
                cur.expect(':')?;
                let faces = (0..=k).map(|_| cur.simplex(k - 1)).collect::<Result<Vec<_>>>()?;
                if !cur.at_end() {
                    return Err(parse_err(line, cur.column(), format!("a {k}-cell has exactly {} faces", k + 1)));
                }
                cells[k].push(faces);
            }
            (other, _) => return Err(parse_err(line, head_col, format!("unexpected `{other}`"))),
        }
    }
    if let Some(Block::Set { start, .. } | Block::Map { start, .. }) = block {
        return Err(parse_err(start, 1, "block is not closed by `end`"));
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::cells::{cell_inclusion, CellKind};

    #[test]
    fn round_trip() {
        let f = cell_inclusion(CellKind::Horn, 2, Some(1)).unwrap();
        let text = format!("{}{}{}", write_sset("A", &f.dom), write_sset("B", &f.cod), write_map("f", "A", "B", &f));
        let doc = parse_document(&text).unwrap();
        assert_eq!(doc.sets["A"], f.dom);
        assert_eq!(doc.maps["f"], f);
        assert_eq!(doc.first_set(), Some(&f.dom));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_document("sset X\ndim 0 2\ndim 1 1\n0: [;0] [;7]\nend\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = parse_document("sset X\ndim 0 1\n  bogus\nend\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 3, .. }), "{err}");
        let err = parse_document("sset X\ndim 0 2\ndim 1 1\n0: [;0] [2,2;0]\nend\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
    }
}

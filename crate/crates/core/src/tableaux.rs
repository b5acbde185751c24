//! Reverse standard Young tableaux: enumeration, content vectors, inversion
//! numbers and the exchange moves that connect them.
//!
//! Entries N,...,1 decrease along each row and each column, so the entry N
//! always sits at the top-left cell and the content of entry N is 0. A
//! tableau is identified by its content vector; the canonical order on the
//! tableaux of a shape is lexicographic on content vectors, descending,
//! which places the column-filled root first.

use crate::combinat::Shape;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    shape: Shape,
    /// position[k] = (row, col) of entry k+1, 1-based coordinates.
    position: Vec<(usize, usize)>,
    content: Vec<i32>,
    inv: usize,
}

impl Tableau {
    fn from_positions(shape: Shape, position: Vec<(usize, usize)>) -> Tableau {
        let content: Vec<i32> = position
            .iter()
            .map(|&(r, c)| c as i32 - r as i32)
            .collect();
        let inv = inversions_of(&content);
        Tableau {
            shape,
            position,
            content,
            inv,
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.position.len()
    }

    /// (row, col) of an entry, 1-based on both sides.
    pub fn position_of(&self, entry: usize) -> (usize, usize) {
        self.position[entry - 1]
    }

    /// Content c(i,S) = col - row of the cell holding entry i.
    pub fn content_of(&self, entry: usize) -> i32 {
        self.content[entry - 1]
    }

    pub fn content_vector(&self) -> &[i32] {
        &self.content
    }

    /// #{(i,j) : i < j, c(i,S) >= c(j,S) + 2}.
    pub fn inversions(&self) -> usize {
        self.inv
    }

    /// Row contents, top row first.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> =
            self.shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
        for (k, &(r, c)) in self.position.iter().enumerate() {
            rows[r - 1][c - 1] = k + 1;
        }
        rows
    }

    /// Serialized form: rows separated by `|`, entries by commas.
    pub fn serialize(&self) -> String {
        self.rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("|")
    }

    /// Parse rows separated by `|`. Accepts rows listed top-down or
    /// bottom-up; the orientation is fixed by requiring a valid filling.
    pub fn parse(s: &str) -> Result<Tableau> {
        let rows: std::result::Result<Vec<Vec<usize>>, _> = s
            .split('|')
            .map(|row| {
                row.split(',')
                    .map(|e| e.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<usize>, _>>()
            })
            .collect();
        let rows = rows.map_err(|_| Error::Parse(format!("bad tableau `{}`", s)))?;
        if let Ok(t) = Self::from_rows(&rows) {
            return Ok(t);
        }
        let flipped: Vec<Vec<usize>> = rows.iter().rev().cloned().collect();
        Self::from_rows(&flipped)
    }

    fn from_rows(rows: &[Vec<usize>]) -> Result<Tableau> {
        let lens: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        let shape = Shape::new(lens)?;
        let n = shape.size();
        let mut position = vec![(0usize, 0usize); n];
        let mut seen = vec![false; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == 0 || e > n || seen[e - 1] {
                    return Err(Error::Parse("tableau entries must be 1..N, distinct".into()));
                }
                seen[e - 1] = true;
                position[e - 1] = (r + 1, c + 1);
            }
        }
        // decreasing along rows and columns
        for (r, row) in rows.iter().enumerate() {
            for c in 1..row.len() {
                if row[c - 1] <= row[c] {
                    return Err(Error::Parse("row entries must decrease".into()));
                }
            }
            if r > 0 {
                for c in 0..row.len() {
                    if rows[r - 1][c] <= row[c] {
                        return Err(Error::Parse("column entries must decrease".into()));
                    }
                }
            }
        }
        Ok(Tableau::from_positions(shape, position))
    }
}

fn inversions_of(content: &[i32]) -> usize {
    let mut inv = 0;
    for i in 0..content.len() {
        for j in i + 1..content.len() {
            if content[i] >= content[j] + 2 {
                inv += 1;
            }
        }
    }
    inv
}

/// All RSYT of the given shape in canonical order (content vectors
/// lexicographically descending).
pub fn enumerate_rsyt(shape: &Shape) -> Vec<Tableau> {
    let n = shape.size();
    let mut out = Vec::new();
    // place entries N, N-1, ..., 1; a cell is admissible when its upper and
    // left neighbours are already filled
    let mut filled: Vec<Vec<bool>> = shape
        .parts()
        .iter()
        .map(|&l| vec![false; l as usize])
        .collect();
    let mut position = vec![(0usize, 0usize); n];
    fn rec(
        shape: &Shape,
        entry: usize,
        filled: &mut Vec<Vec<bool>>,
        position: &mut Vec<(usize, usize)>,
        out: &mut Vec<Tableau>,
    ) {
        if entry == 0 {
            out.push(Tableau::from_positions(shape.clone(), position.clone()));
            return;
        }
        for (r, row) in filled.clone().iter().enumerate() {
            for (c, &used) in row.iter().enumerate() {
                if used {
                    continue;
                }
                let up_ok = r == 0 || filled[r - 1][c];
                let left_ok = c == 0 || filled[r][c - 1];
                if up_ok && left_ok {
                    filled[r][c] = true;
                    position[entry - 1] = (r + 1, c + 1);
                    rec(shape, entry - 1, filled, position, out);
                    filled[r][c] = false;
                }
            }
        }
    }
    rec(shape, n, &mut filled, &mut position, &mut out);
    out.sort_by(|a, b| b.content_vector().cmp(a.content_vector()));
    out
}

/// Why an exchange move i <-> i+1 is not available.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Blocked {
    SameRow,
    SameColumn,
    /// The entries sit the other way around; the move in this direction
    /// requires content gap >= 2, which holds only for the reverse pair.
    Reversed,
}

pub enum ExchangeOutcome {
    Moved(Tableau),
    Blocked(Blocked),
}

/// Exchange entries i and i+1 when c(i,S) - c(i+1,S) >= 2; the move lowers
/// the inversion number by one.
pub fn exchange(s: &Tableau, i: usize) -> ExchangeOutcome {
    assert!(i >= 1 && i < s.size(), "exchange index out of range");
    let delta = s.content_of(i) - s.content_of(i + 1);
    match delta {
        1 => ExchangeOutcome::Blocked(Blocked::SameRow),
        -1 => ExchangeOutcome::Blocked(Blocked::SameColumn),
        d if d <= -2 => ExchangeOutcome::Blocked(Blocked::Reversed),
        _ => {
            let mut position = s.position.clone();
            position.swap(i - 1, i);
            ExchangeOutcome::Moved(Tableau::from_positions(s.shape.clone(), position))
        }
    }
}

/// The inv-maximal tableau (entries N..1 column by column) and the
/// inv-minimal tableau (entries N..1 row by row).
pub fn extremal_tableaux(shape: &Shape) -> (Tableau, Tableau) {
    let n = shape.size();
    let transpose = shape.transpose();
    // column-by-column
    let mut position = vec![(0usize, 0usize); n];
    let mut entry = n;
    for (c, &height) in transpose.iter().enumerate() {
        for r in 1..=height as usize {
            position[entry - 1] = (r, c + 1);
            entry -= 1;
        }
    }
    let s0 = Tableau::from_positions(shape.clone(), position);
    // row-by-row
    let mut position = vec![(0usize, 0usize); n];
    let mut entry = n;
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 1..=len as usize {
            position[entry - 1] = (r + 1, c);
            entry -= 1;
        }
    }
    let s1 = Tableau::from_positions(shape.clone(), position);
    (s0, s1)
}

//! The tessellation exchange format.
//!
//! Text, line oriented, whitespace separated, `#` starts a comment:
//!
//! ```text
//! tess v1 closed center=- radius=-
//! 0: 1 2 3
//! 1: 2 0 3
//! ...
//! ```
//!
//! For patches the header carries `center=<id> radius=<n>` and two optional
//! section kinds follow the vertex lines:
//!
//! - `boundary: <id> ...` lists vertices whose rotation is incomplete; the
//!   listed arc is the known counterclockwise order and the missing sector
//!   sits between the last and the first listed neighbor.
//! - `gap: <v> <a> <b>` marks the corner between the consecutively listed
//!   neighbors `a`, `b` of `v` as having no complete face (used when a face
//!   was truncated away although all of `v`'s neighbors are present).
//!
//! Canonical form sorts vertex lines by id; rotations of vertices not listed
//! in `boundary:` are rotated to start at their smallest neighbor.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use super::closed::ClosedTessellation;
use super::patch::Patch;
use super::rotation::RotationSystem;
use crate::error::{Result, TessError};

#[derive(Debug, Clone)]
pub enum Loaded {
    Closed(ClosedTessellation),
    Patch(Patch),
}

impl Loaded {
    pub fn kind(&self) -> &'static str {
        match self {
            Loaded::Closed(_) => "closed",
            Loaded::Patch(_) => "patch",
        }
    }
}

pub fn save_to_string(t: &Loaded) -> String {
    match t {
        Loaded::Closed(c) => {
            let n = c.vertex_count();
            let mut out = String::new();
            out.push_str("tess v1 closed center=- radius=-\n");
            for v in 0..n as u32 {
                write_vertex_line(&mut out, v, &canonical_cycle(c.rotation().neighbors(v)));
            }
            out
        }
        Loaded::Patch(p) => {
            let (rs, partial, gaps) = p.parts();
            let n = rs.vertex_count();
            let mut out = String::new();
            writeln!(
                out,
                "tess v1 patch center={} radius={}",
                p.center(),
                p.radius()
            )
            .unwrap();
            let mut boundary: Vec<u32> = Vec::new();
            let mut gap_lines: Vec<(u32, u32, u32)> = Vec::new();
            for v in 0..n as u32 {
                let nb = rs.neighbors(v);
                let deg = nb.len();
                if partial[v as usize] {
                    // Arc order is semantic: the gap sits at the wrap.
                    write_vertex_line(&mut out, v, nb);
                    boundary.push(v);
                    for &i in &gaps[v as usize] {
                        if i as usize != deg.saturating_sub(1) {
                            gap_lines.push((v, nb[i as usize], nb[(i as usize + 1) % deg]));
                        }
                    }
                } else {
                    let (cycle, shift) = canonical_cycle_with_shift(nb);
                    write_vertex_line(&mut out, v, &cycle);
                    for &i in &gaps[v as usize] {
                        let i = (i as usize + deg - shift) % deg;
                        gap_lines.push((v, cycle[i], cycle[(i + 1) % deg]));
                    }
                }
            }
            if !boundary.is_empty() {
                out.push_str("boundary:");
                for v in boundary {
                    write!(out, " {v}").unwrap();
                }
                out.push('\n');
            }
            gap_lines.sort_unstable();
            for (v, a, b) in gap_lines {
                writeln!(out, "gap: {v} {a} {b}").unwrap();
            }
            out
        }
    }
}

pub fn save(t: &Loaded, path: &Path) -> Result<()> {
    std::fs::write(path, save_to_string(t))?;
    Ok(())
}

fn write_vertex_line(out: &mut String, v: u32, nb: &[u32]) {
    write!(out, "{v}:").unwrap();
    for u in nb {
        write!(out, " {u}").unwrap();
    }
    out.push('\n');
}

fn canonical_cycle(nb: &[u32]) -> Vec<u32> {
    canonical_cycle_with_shift(nb).0
}

fn canonical_cycle_with_shift(nb: &[u32]) -> (Vec<u32>, usize) {
    if nb.is_empty() {
        return (Vec::new(), 0);
    }
    let shift = nb
        .iter()
        .enumerate()
        .min_by_key(|&(_, u)| u)
        .map(|(i, _)| i)
        .unwrap();
    let mut cycle = Vec::with_capacity(nb.len());
    cycle.extend_from_slice(&nb[shift..]);
    cycle.extend_from_slice(&nb[..shift]);
    (cycle, shift)
}

pub fn load(path: &Path) -> Result<Loaded> {
    let text = std::fs::read_to_string(path)?;
    load_from_str(&text)
}

pub fn load_from_str(text: &str) -> Result<Loaded> {
    let mut header: Option<(bool, Option<u32>, Option<u32>, usize)> = None;
    let mut rows: Vec<(u32, Vec<u32>, usize)> = Vec::new();
    let mut boundary: BTreeSet<u32> = BTreeSet::new();
    let mut gap_specs: Vec<(u32, u32, u32, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if header.is_none() {
            header = Some(parse_header(line, line_no)?);
            continue;
        }
        if let Some(rest) = line.strip_prefix("boundary:") {
            for tok in rest.split_whitespace() {
                boundary.insert(parse_id(tok, line_no)?);
            }
        } else if let Some(rest) = line.strip_prefix("gap:") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(TessError::Parse {
                    line: line_no,
                    msg: "gap line needs exactly `gap: <v> <a> <b>`".into(),
                });
            }
            gap_specs.push((
                parse_id(toks[0], line_no)?,
                parse_id(toks[1], line_no)?,
                parse_id(toks[2], line_no)?,
                line_no,
            ));
        } else {
            let (id_part, rest) = line.split_once(':').ok_or_else(|| TessError::Parse {
                line: line_no,
                msg: "expected `<id>: <n1> <n2> ...`".into(),
            })?;
            let id = parse_id(id_part.trim(), line_no)?;
            let mut nb = Vec::new();
            for tok in rest.split_whitespace() {
                nb.push(parse_id(tok, line_no)?);
            }
            rows.push((id, nb, line_no));
        }
    }

    let (closed, center, radius, header_line) = header.ok_or_else(|| TessError::Parse {
        line: 1,
        msg: "missing header line".into(),
    })?;

    let n = rows.len();
    let mut rot: Vec<Option<(Vec<u32>, usize)>> = vec![None; n];
    for (id, nb, line_no) in rows {
        if id as usize >= n {
            return Err(TessError::Parse {
                line: line_no,
                msg: format!("vertex id {id} leaves a hole: ids must be dense 0..{n}"),
            });
        }
        if rot[id as usize].is_some() {
            return Err(TessError::Parse {
                line: line_no,
                msg: format!("duplicate vertex {id}"),
            });
        }
        rot[id as usize] = Some((nb, line_no));
    }
    let rot: Vec<(Vec<u32>, usize)> = rot.into_iter().map(|r| r.unwrap()).collect();

    // Referential and symmetry checks with line numbers.
    for (v, (nb, line_no)) in rot.iter().enumerate() {
        for &u in nb {
            if u as usize >= n {
                return Err(TessError::Parse {
                    line: *line_no,
                    msg: format!("dangling neighbor id {u} at vertex {v}"),
                });
            }
            if !rot[u as usize].0.contains(&(v as u32)) {
                return Err(TessError::Parse {
                    line: *line_no,
                    msg: format!("asymmetric adjacency: {v} lists {u} but {u} does not list {v}"),
                });
            }
        }
    }

    let plain: Vec<Vec<u32>> = rot.iter().map(|(nb, _)| nb.clone()).collect();
    let rs = RotationSystem::new(plain)?;

    if closed {
        if !boundary.is_empty() || !gap_specs.is_empty() {
            return Err(TessError::Parse {
                line: header_line,
                msg: "closed tessellations carry no boundary or gap sections".into(),
            });
        }
        return Ok(Loaded::Closed(ClosedTessellation::from_rotation(rs)?));
    }

    let center = center.ok_or_else(|| TessError::Parse {
        line: header_line,
        msg: "patch header needs center=<id>".into(),
    })?;
    let radius = radius.ok_or_else(|| TessError::Parse {
        line: header_line,
        msg: "patch header needs radius=<n>".into(),
    })?;

    let mut partial = vec![false; n];
    let mut gaps: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &v in &boundary {
        if v as usize >= n {
            return Err(TessError::Parse {
                line: header_line,
                msg: format!("boundary lists unknown vertex {v}"),
            });
        }
        partial[v as usize] = true;
        let deg = rs.degree(v);
        if deg > 0 {
            gaps[v as usize].push(deg as u32 - 1);
        }
    }
    for (v, a, b, line_no) in gap_specs {
        let deg = rs.degree(v);
        let i = (0..deg)
            .find(|&i| rs.neighbors(v)[i] == a && rs.neighbors(v)[(i + 1) % deg] == b)
            .ok_or_else(|| TessError::Parse {
                line: line_no,
                msg: format!("({a},{b}) are not consecutive neighbors of {v}"),
            })?;
        gaps[v as usize].push(i as u32);
    }

    Ok(Loaded::Patch(Patch::from_parts(
        rs, center, radius, partial, gaps,
    )?))
}

fn parse_header(line: &str, line_no: usize) -> Result<(bool, Option<u32>, Option<u32>, usize)> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != 5 || toks[0] != "tess" || toks[1] != "v1" {
        return Err(TessError::Parse {
            line: line_no,
            msg: "header must be `tess v1 <closed|patch> center=<id|-> radius=<n|->`".into(),
        });
    }
    let closed = match toks[2] {
        "closed" => true,
        "patch" => false,
        other => {
            return Err(TessError::Parse {
                line: line_no,
                msg: format!("unknown kind `{other}`"),
            })
        }
    };
    let center = parse_kv(toks[3], "center", line_no)?;
    let radius = parse_kv(toks[4], "radius", line_no)?;
    Ok((closed, center, radius, line_no))
}

fn parse_kv(tok: &str, key: &str, line_no: usize) -> Result<Option<u32>> {
    let val = tok
        .strip_prefix(key)
        .and_then(|s| s.strip_prefix('='))
        .ok_or_else(|| TessError::Parse {
            line: line_no,
            msg: format!("expected `{key}=<value>`, got `{tok}`"),
        })?;
    if val == "-" {
        return Ok(None);
    }
    Ok(Some(val.parse().map_err(|_| TessError::Parse {
        line: line_no,
        msg: format!("bad {key} value `{val}`"),
    })?))
}

fn parse_id(tok: &str, line_no: usize) -> Result<u32> {
    tok.parse().map_err(|_| TessError::Parse {
        line: line_no,
        msg: format!("expected a vertex id, got `{tok}`"),
    })
}

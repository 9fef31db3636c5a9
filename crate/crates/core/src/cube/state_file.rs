//! Line-oriented text format for full-size states.
//!
//! ```text
//! edges_flip: <24 values in {0,1}>
//! edges_perm: <24 images>
//! corners_twist: <8 values in {0,1,2}>
//! corners_perm: <8 images>
//! centers_perm: <24 images>
//! ```
//!
//! Values are 0-based and separated by single spaces. Blank lines are not
//! allowed between records; a single trailing newline is.

use std::fmt::Write as _;

use crate::error::{Error, ParseError};
use crate::perm::Perm;
use crate::wreath::WreathElem;

use super::{CubeElem, Shape};

const LABELS: [&str; 5] = ["edges_flip:", "edges_perm:", "corners_twist:", "corners_perm:", "centers_perm:"];

fn err(line: usize, token: Option<usize>, message: impl Into<String>) -> ParseError {
    ParseError { line, token, message: message.into() }
}

/// Parses one record line; token positions are 1-based with the label as token 1.
fn parse_line(line_no: usize, line: Option<&str>, label: &str, len: usize, max: usize) -> Result<Vec<usize>, ParseError> {
    let line = line.ok_or_else(|| err(line_no, None, format!("missing `{label}` line")))?;
    let mut tokens = line.split_whitespace();
    match tokens.next() {
        Some(t) if t == label => {}
        Some(t) => return Err(err(line_no, Some(1), format!("expected `{label}`, found `{t}`"))),
        None => return Err(err(line_no, None, format!("empty line, expected `{label}`"))),
    }
    let mut values = Vec::with_capacity(len);
    for (i, tok) in tokens.enumerate() {
        let pos = i + 2;
        if values.len() == len {
            return Err(err(line_no, Some(pos), format!("expected {len} values, found more")));
        }
        let v: usize = tok
            .parse()
            .map_err(|_| err(line_no, Some(pos), format!("`{tok}` is not a non-negative integer")))?;
        if v >= max {
            return Err(err(line_no, Some(pos), format!("value {v} out of range 0..{max}")));
        }
        values.push(v);
    }
    if values.len() != len {
        return Err(err(line_no, None, format!("expected {len} values, found {}", values.len())));
    }
    Ok(values)
}

fn to_perm(line_no: usize, images: Vec<usize>) -> Result<Perm, ParseError> {
    let mut seen = vec![None; images.len()];
    for (i, &x) in images.iter().enumerate() {
        if let Some(first) = seen[x] {
            return Err(err(
                line_no,
                Some(i + 2),
                format!("image {x} repeats token {}; not a permutation", first + 2),
            ));
        }
        seen[x] = Some(i);
    }
    Ok(Perm::from_images(images).expect("checked bijection"))
}

pub fn parse(text: &str) -> Result<CubeElem, Error> {
    let shape = Shape::REVENGE;
    let mut lines = text.lines();
    let flips = parse_line(1, lines.next(), LABELS[0], shape.edges(), 2)?;
    let edge_perm = to_perm(2, parse_line(2, lines.next(), LABELS[1], shape.edges(), shape.edges())?)?;
    let twists = parse_line(3, lines.next(), LABELS[2], shape.corners, 3)?;
    let corner_perm = to_perm(4, parse_line(4, lines.next(), LABELS[3], shape.corners, shape.corners)?)?;
    let center_perm = to_perm(5, parse_line(5, lines.next(), LABELS[4], shape.centers(), shape.centers())?)?;
    if let Some((i, _)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
        return Err(err(6 + i, None, "unexpected content after the last record").into());
    }
    let edge = WreathElem::new(2, flips.into_iter().map(|b| b as u8).collect(), edge_perm)?;
    let corner = WreathElem::new(3, twists.into_iter().map(|t| t as u8).collect(), corner_perm)?;
    CubeElem::from_parts(edge, corner, center_perm)
}

fn push_line<T: ToString>(out: &mut String, label: &str, values: impl IntoIterator<Item = T>) {
    out.push_str(label);
    for v in values {
        let _ = write!(out, " {}", v.to_string());
    }
    out.push('\n');
}

/// Writes the five record lines, each newline-terminated.
pub fn format(t: &CubeElem) -> String {
    let mut out = String::new();
    push_line(&mut out, LABELS[0], t.edge().twists().iter());
    push_line(&mut out, LABELS[1], t.edge().perm().images().iter());
    push_line(&mut out, LABELS[2], t.corner().twists().iter());
    push_line(&mut out, LABELS[3], t.corner().perm().images().iter());
    push_line(&mut out, LABELS[4], t.center().images().iter());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn identity_text() -> String {
        format(&CubeElem::identity())
    }

    fn parse_err(text: &str) -> ParseError {
        match parse(text).unwrap_err() {
            Error::Parse(e) => e,
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn identity_file_is_exact() {
        let text = identity_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], format!("edges_flip:{}", " 0".repeat(24)));
        assert_eq!(lines[3], "corners_perm: 0 1 2 3 4 5 6 7");
        assert!(text.ends_with('\n'));
        assert!(parse(&text).unwrap().is_identity());
    }

    #[test]
    fn reports_bad_label() {
        let text = identity_text().replace("corners_twist:", "corner_twist:");
        let e = parse_err(&text);
        assert_eq!((e.line, e.token), (3, Some(1)));
    }

    #[test]
    fn reports_bad_token() {
        let text = identity_text().replacen("edges_flip: 0 0 0", "edges_flip: 0 0 2", 1);
        let e = parse_err(&text);
        assert_eq!((e.line, e.token), (1, Some(4)));
        let text = identity_text().replacen("corners_perm: 0 1", "corners_perm: 0 x", 1);
        let e = parse_err(&text);
        assert_eq!((e.line, e.token), (4, Some(3)));
    }

    #[test]
    fn rejects_non_permutation() {
        let text = identity_text().replacen("corners_perm: 0 1 2", "corners_perm: 0 1 1", 1);
        let e = parse_err(&text);
        assert_eq!((e.line, e.token), (4, Some(4)));
        assert!(e.to_string().contains("not a permutation"));
    }

    #[test]
    fn rejects_wrong_counts_and_missing_lines() {
        let text = identity_text().replacen("corners_perm: 0 1 2 3 4 5 6 7", "corners_perm: 0 1 2 3 4 5 6", 1);
        assert_eq!(parse_err(&text).line, 4);
        let text = identity_text().replacen("corners_perm: 0 1 2 3 4 5 6 7", "corners_perm: 0 1 2 3 4 5 6 7 0", 1);
        assert_eq!(parse_err(&text).token, Some(10));
        let truncated: String = identity_text().lines().take(3).map(|l| format!("{l}\n")).collect();
        assert_eq!(parse_err(&truncated).line, 4);
        let extra = identity_text() + "junk\n";
        assert_eq!(parse_err(&extra).line, 6);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn format_parse_round_trip(seed in any::<u64>()) {
            let t = CubeElem::random(&mut ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(parse(&format(&t)).unwrap(), t);
        }
    }
}

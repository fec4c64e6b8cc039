//! Point files: one point `x0 x1 x2` per line, integers or rationals, `#`
//! comments, labels `1..` by line order.

use crate::error::{Error, Result};
use crate::projective::ProjectivePoint;

/// Parses a point file of six or seven points.
pub fn parse_point_file(text: &str) -> Result<Vec<ProjectivePoint>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let s = raw.split('#').next().unwrap_or("").trim();
        if s.is_empty() {
            continue;
        }
        let p: ProjectivePoint = s.parse().map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { line: i + 1, msg },
            other => Error::Parse { line: i + 1, msg: other.to_string() },
        })?;
        out.push(p);
        if out.len() > 7 {
            return Err(Error::Parse { line: i + 1, msg: "more than seven points".into() });
        }
    }
    if out.len() != 6 && out.len() != 7 {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("expected 6 or 7 points, got {}", out.len()),
        });
    }
    Ok(out)
}

/// Writes points in point-file form.
pub fn format_point_file(points: &[ProjectivePoint]) -> String {
    points
        .iter()
        .map(|p| {
            let c = p.coords();
            format!("{} {} {}\n", c[0], c[1], c[2])
        })
        .collect()
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn round_trip(pts in proptest::collection::vec(proptest::array::uniform3(-500i64..500), 6..=7)) {
            prop_assume!(pts.iter().all(|p| *p != [0, 0, 0]));
            let p: Vec<ProjectivePoint> = pts.iter().map(|v| ProjectivePoint::from_ints(v[0], v[1], v[2]).unwrap()).collect();
            prop_assert_eq!(parse_point_file(&format_point_file(&p)).unwrap(), p);
        }

        #[test]
        fn never_panics(s in "[0-9 /#\\-\\n]{0,80}") {
            let _ = parse_point_file(&s);
        }
    }
}

//! Scene files.
//!
//! ```toml
//! unit = ["O", "U"]
//!
//! [points]
//! A = [0, 0]
//! B = ["4", "0"]
//! C = ["1/2", "(sqrt 2)"]
//!
//! [figures]
//! T = ["A", "B", "C"]
//! ```
//!
//! Coordinates are exact literals, written as strings or TOML integers.
//! Floats are rejected.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use thiserror::Error;
use toml::{Table, Value};

use crate::exact::ExactNumber;
use crate::figures::{Figure, Quadrilateral, Triangle};
use crate::plane::{Point, Segment};

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("cannot read scene: {0}")]
    Io(#[from] std::io::Error),
    #[error("scene is not valid TOML: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("{0}")]
    Invalid(String),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, SceneError> {
    Err(SceneError::Invalid(msg.into()))
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Scene {
    pub points: BTreeMap<String, Point>,
    /// Triangles and quadrilaterals as point-name lists.
    pub figures: BTreeMap<String, Vec<String>>,
    pub unit: Option<(String, String)>,
}

impl Scene {
    pub fn load(path: &Path) -> Result<Scene, SceneError> {
        Scene::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Scene, SceneError> {
        let mut table: Table = text.parse()?;
        let mut scene = Scene::default();

        let points = match table.remove("points") {
            Some(Value::Table(t)) => t,
            Some(_) => return invalid("`points` must be a table"),
            None => return invalid("scene has no `points` table"),
        };
        for (name, v) in points {
            let pair = match v {
                Value::Array(a) if a.len() == 2 => a,
                _ => return invalid(format!("point {name} must be a pair [x, y]")),
            };
            let x = coordinate(&name, &pair[0])?;
            let y = coordinate(&name, &pair[1])?;
            scene.points.insert(name, Point::new(x, y));
        }

        match table.remove("figures") {
            None => {}
            Some(Value::Table(t)) => {
                for (name, v) in t {
                    let names = name_list(&v)
                        .filter(|n| n.len() == 3 || n.len() == 4)
                        .ok_or_else(|| SceneError::Invalid(format!("figure {name} must list 3 or 4 point names")))?;
                    if scene.points.contains_key(&name) {
                        return invalid(format!("name {name} is used for both a point and a figure"));
                    }
                    scene.figures.insert(name, names);
                }
            }
            Some(_) => return invalid("`figures` must be a table"),
        }

        match table.remove("unit") {
            None => {}
            Some(v) => match name_list(&v).as_deref() {
                Some([p, q]) => scene.unit = Some((p.clone(), q.clone())),
                _ => return invalid("`unit` must be a pair of point names"),
            },
        }

        if let Some(key) = table.keys().next() {
            return invalid(format!("unknown top-level key `{key}`"));
        }
        scene.validate()?;
        Ok(scene)
    }

    fn validate(&self) -> Result<(), SceneError> {
        for (fig, names) in &self.figures {
            for n in names {
                if !self.points.contains_key(n) {
                    return invalid(format!("figure {fig} refers to unknown point {n}"));
                }
            }
        }
        if let Some((p, q)) = &self.unit {
            for n in [p, q] {
                if !self.points.contains_key(n) {
                    return invalid(format!("unit refers to unknown point {n}"));
                }
            }
        }
        Ok(())
    }

    /// Canonical TOML text; parsing it gives back an equal scene.
    pub fn to_toml(&self) -> String {
        self.to_string()
    }

    pub fn point(&self, name: &str) -> Result<&Point, SceneError> {
        self.points
            .get(name)
            .ok_or_else(|| SceneError::Invalid(format!("unknown point {name}")))
    }

    /// Points named by a figure name, or the single point of a point name.
    pub fn resolve(&self, name: &str) -> Result<Vec<Point>, SceneError> {
        if let Some(names) = self.figures.get(name) {
            return names.iter().map(|n| self.point(n).cloned()).collect();
        }
        match self.points.get(name) {
            Some(p) => Ok(vec![p.clone()]),
            None => invalid(format!("unknown point or figure {name}")),
        }
    }

    pub fn figure(&self, name: &str) -> Result<Figure, SceneError> {
        if !self.figures.contains_key(name) {
            return invalid(format!("unknown figure {name}"));
        }
        match self.resolve(name)?.as_slice() {
            [a, b, c] => Ok(Figure::Triangle(Triangle::new(a.clone(), b.clone(), c.clone()))),
            [a, b, c, d] => Ok(Figure::Quad(Quadrilateral::new(a.clone(), b.clone(), c.clone(), d.clone()))),
            _ => unreachable!("figures are validated to have 3 or 4 points"),
        }
    }

    pub fn unit_segment(&self) -> Result<Option<Segment>, SceneError> {
        match &self.unit {
            None => Ok(None),
            Some((p, q)) => Ok(Some(Segment::new(self.point(p)?.clone(), self.point(q)?.clone()))),
        }
    }
}

fn coordinate(point: &str, v: &Value) -> Result<ExactNumber, SceneError> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Integer(i) => i.to_string(),
        Value::Float(_) => return invalid(format!("point {point}: floating-point coordinates are not accepted")),
        _ => return invalid(format!("point {point}: coordinates must be exact literals")),
    };
    text.parse()
        .map_err(|e| SceneError::Invalid(format!("point {point}: bad literal `{text}`: {e}")))
}

fn name_list(v: &Value) -> Option<Vec<String>> {
    v.as_array()?
        .iter()
        .map(|n| n.as_str().map(str::to_string))
        .collect()
}

fn quoted_list<'a>(names: impl IntoIterator<Item = &'a String>) -> String {
    let parts: Vec<String> = names.into_iter().map(|n| Value::String(n.clone()).to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn key(name: &str) -> String {
    let bare = !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-');
    if bare {
        name.to_string()
    } else {
        Value::String(name.to_string()).to_string()
    }
}

impl fmt::Display for Scene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((p, q)) = &self.unit {
            writeln!(f, "unit = {}\n", quoted_list([p, q]))?;
        }
        writeln!(f, "[points]")?;
        for (name, p) in &self.points {
            writeln!(f, "{} = {}", key(name), quoted_list([&p.x.to_string(), &p.y.to_string()]))?;
        }
        if !self.figures.is_empty() {
            writeln!(f, "\n[figures]")?;
            for (name, names) in &self.figures {
                writeln!(f, "{} = {}", key(name), quoted_list(names))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SCENE: &str = r#"
unit = ["O", "U"]

[points]
O = [0, 0]
U = ["1", 0]
A = ["-3/4", "(sqrt 2)"]
"B C" = ["(add 1 (sqrt 3))", "2"]

[figures]
T = ["O", "A", "B C"]
"#;

    #[test]
    fn round_trip() {
        let s = Scene::parse(SCENE).unwrap();
        let again = Scene::parse(&s.to_toml()).unwrap();
        assert_eq!(s, again);
        assert_eq!(s.to_toml(), again.to_toml());
        assert_eq!(s.points["A"].y.to_string(), "(sqrt 2)");
    }

    #[test]
    fn rejects_bad_scenes() {
        let bad = [
            "[points]\nA = [0.5, 1]",
            "[points]\nA = [0]",
            "[points]\nA = [0, 0]\n[figures]\nT = [\"A\", \"A\", \"Z\"]",
            "[points]\nA = [0, 0]\n[figures]\nA = [\"A\", \"A\", \"A\"]",
            "[points]\nA = [0, 0]\nunit = 3",
            "unit = [\"A\", \"Q\"]\n[points]\nA = [0, 0]",
            "[points]\nA = [\"1/0\", 0]",
            "colour = 1\n[points]\nA = [0, 0]",
        ];
        for text in bad {
            assert!(Scene::parse(text).is_err(), "{text}");
        }
    }
}

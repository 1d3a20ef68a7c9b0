use serde_json::{Map, Value};

use crate::exact::ExactNumber;
use crate::figures::{Figure, Quadrilateral, RectWH, Triangle};
use crate::plane::{GeomError, GeomResult, Point, Segment};

/// Named points of one generated configuration, in insertion order.
///
/// Non-point data (rectangle sides, lengths) is stored as points too, so a
/// witness is always a plain map from names to coordinate pairs.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Assignment {
    entries: Vec<(String, Point)>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, name: &str, p: Point) {
        match self.entries.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = p,
            None => self.entries.push((name.to_string(), p)),
        }
    }

    pub fn with(mut self, name: &str, p: Point) -> Self {
        self.set(name, p);
        self
    }

    pub fn with_all(mut self, names: &[&str], ps: &[Point]) -> Self {
        for (n, p) in names.iter().zip(ps) {
            self.set(n, p.clone());
        }
        self
    }

    pub fn get(&self, name: &str) -> GeomResult<&Point> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
            .ok_or(GeomError::Precondition("assignment is missing a named point"))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Point)> {
        self.entries.iter().map(|(n, p)| (n.as_str(), p))
    }

    pub(crate) fn p(&self, name: &str) -> GeomResult<Point> {
        self.get(name).cloned()
    }

    pub(crate) fn tri(&self, a: &str, b: &str, c: &str) -> GeomResult<Triangle> {
        Ok(Triangle::new(self.p(a)?, self.p(b)?, self.p(c)?))
    }

    pub(crate) fn quad(&self, a: &str, b: &str, c: &str, d: &str) -> GeomResult<Quadrilateral> {
        Ok(Quadrilateral::new(self.p(a)?, self.p(b)?, self.p(c)?, self.p(d)?))
    }

    pub(crate) fn quad_fig(&self, a: &str, b: &str, c: &str, d: &str) -> GeomResult<Figure> {
        Ok(Figure::Quad(self.quad(a, b, c, d)?))
    }

    pub(crate) fn tri_fig(&self, a: &str, b: &str, c: &str) -> GeomResult<Figure> {
        Ok(Figure::Triangle(self.tri(a, b, c)?))
    }

    pub(crate) fn seg(&self, a: &str, b: &str) -> GeomResult<Segment> {
        Ok(Segment::new(self.p(a)?, self.p(b)?))
    }

    /// A rectangle stored as the point `(width, height)`.
    pub(crate) fn rect(&self, name: &str) -> GeomResult<RectWH> {
        let p = self.get(name)?;
        RectWH::new(p.x.clone(), p.y.clone())
    }

    /// `{"A": ["x", "y"], ...}` with exact literals.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (n, p) in &self.entries {
            m.insert(
                n.clone(),
                Value::Array(vec![Value::String(p.x.to_string()), Value::String(p.y.to_string())]),
            );
        }
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self, String> {
        let obj = v.as_object().ok_or("witness must be an object")?;
        let mut out = Assignment::new();
        for (name, coords) in obj {
            let pair = coords
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| format!("point {name} must be a pair"))?;
            let parse = |c: &Value| -> Result<ExactNumber, String> {
                c.as_str()
                    .ok_or_else(|| format!("coordinate of {name} must be a string"))?
                    .parse::<ExactNumber>()
                    .map_err(|e| format!("coordinate of {name}: {e}"))
            };
            out.set(name, Point::new(parse(&pair[0])?, parse(&pair[1])?));
        }
        Ok(out)
    }
}

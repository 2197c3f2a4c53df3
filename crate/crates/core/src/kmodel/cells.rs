use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One cell of a CW pair `(X, A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub name: String,
    pub dim: usize,
    /// Whether the cell lies in the subcomplex `A`.
    #[serde(rename = "in_A", default)]
    pub in_a: bool,
    /// Membership in the second piece `B` of an excision cover.
    #[serde(rename = "in_B", default, skip_serializing_if = "std::ops::Not::not")]
    pub in_b: bool,
}

impl Cell {
    pub fn new(name: &str, dim: usize, in_a: bool) -> Self {
        Cell { name: name.to_string(), dim, in_a, in_b: false }
    }

    /// A cell of `X` not in `A`: one generator of the free model.
    pub fn is_relative(&self) -> bool {
        !self.in_a
    }
}

/// A finite CW pair built from even-dimensional cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellComplex {
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub cells: Vec<Cell>,
}

impl CellComplex {
    pub fn new(name: &str, cells: Vec<Cell>) -> Result<Self> {
        let cx = CellComplex { name: name.to_string(), cells };
        cx.validate()?;
        Ok(cx)
    }

    /// Reads the TOML form: a `name` and a list of `[[cells]]` tables with
    /// `name`, `dim` and optional `in_A` / `in_B` flags.
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cx: CellComplex = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        cx.validate()?;
        Ok(cx)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("cell complexes serialize")
    }

    /// Every cell must be even-dimensional; K¹ vanishing rests on it.
    pub fn validate(&self) -> Result<()> {
        for c in &self.cells {
            if c.dim % 2 == 1 {
                return Err(Error::OddCell { name: c.name.clone(), dim: c.dim });
            }
        }
        Ok(())
    }

    pub fn relative_cells(&self) -> Vec<&Cell> {
        self.cells.iter().filter(|c| c.is_relative()).collect()
    }

    pub fn subcomplex_cells(&self) -> Vec<&Cell> {
        self.cells.iter().filter(|c| c.in_a).collect()
    }

    /// The point, as an absolute complex.
    pub fn point() -> Self {
        CellComplex { name: "pt".into(), cells: vec![Cell::new("e0", 0, false)] }
    }

    /// `CPⁿ` with cells in dimensions `0, 2, …, 2n`; the first `in_a` cells
    /// are marked as the subcomplex.
    pub fn projective(n: usize, in_a: usize) -> Self {
        CellComplex {
            name: format!("CP{n}"),
            cells: (0..=n)
                .map(|i| Cell::new(&format!("e{}", 2 * i), 2 * i, i < in_a))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toml_round_trip_and_validation() {
        let text = r#"
name = "CP1"
[[cells]]
name = "e0"
dim = 0
in_A = true
[[cells]]
name = "e2"
dim = 2
"#;
        let cx = CellComplex::from_toml_str(text).unwrap();
        assert_eq!(cx, CellComplex::projective(1, 1));
        assert_eq!(CellComplex::from_toml_str(&cx.to_toml_string()).unwrap(), cx);
        let odd = "[[cells]]\nname = \"e1\"\ndim = 1\n";
        assert!(matches!(CellComplex::from_toml_str(odd), Err(Error::OddCell { .. })));
    }
}

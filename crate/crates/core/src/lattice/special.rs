use serde::{Deserialize, Serialize};

use super::polygon::LatticePolygon;

/// The exceptional shapes `kΣ`, `Υ` and `2Υ` up to unimodular equivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "k")]
pub enum SpecialShape {
    SigmaMultiple(i64),
    Upsilon,
    TwoUpsilon,
    None,
}

impl SpecialShape {
    pub fn label(&self) -> String {
        match self {
            SpecialShape::SigmaMultiple(k) => format!("{k}Σ"),
            SpecialShape::Upsilon => "Υ".to_string(),
            SpecialShape::TwoUpsilon => "2Υ".to_string(),
            SpecialShape::None => "none".to_string(),
        }
    }
}

impl LatticePolygon {
    pub fn detect_special(&self) -> SpecialShape {
        if self.len() != 3 {
            return SpecialShape::None;
        }
        let area = self.twice_area();
        match area {
            3 if self.equivalent(&LatticePolygon::upsilon(1)) => return SpecialShape::Upsilon,
            12 if self.equivalent(&LatticePolygon::upsilon(2)) => return SpecialShape::TwoUpsilon,
            _ => {}
        }
        let k = (area as f64).sqrt().round() as i64;
        if k >= 1 && k * k == area && self.equivalent(&LatticePolygon::sigma(k)) {
            return SpecialShape::SigmaMultiple(k);
        }
        SpecialShape::None
    }
}

//! JSON storage of YD modules: `action` holds `[h, i, j, c]` for
//! `e_h · e_i ∋ c e_j`, `coaction` holds `[i, h, j, c]` for `δ(e_i) ∋ c e_h ⊗ e_j`.

use serde::{Deserialize, Serialize};

use super::{HModule, YDModule, YdCategory};
use crate::error::{Error, Result};
use crate::hopf::{text, Coef};
use crate::sparse::SpMat;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct YdFile {
    name: String,
    dim: usize,
    action: Vec<(usize, usize, usize, Coef)>,
    coaction: Vec<(usize, usize, usize, Coef)>,
}

pub fn yd_to_json(m: &YDModule) -> String {
    let mut action = Vec::new();
    for h in 0..m.module.acts().len() {
        for i in 0..m.dim() {
            for (j, c) in m.act(h).column(i) {
                action.push((h, i, *j, text(c)));
            }
        }
    }
    let mut coaction = Vec::new();
    for i in 0..m.dim() {
        for (h, c) in m.coacts().iter().enumerate() {
            for (j, x) in c.column(i) {
                coaction.push((i, h, *j, text(x)));
            }
        }
    }
    let file = YdFile { name: m.name().to_string(), dim: m.dim(), action, coaction };
    serde_json::to_string_pretty(&file).expect("serializable") + "\n"
}

impl YdCategory {
    /// Parses and verifies a YD module over this category's Hopf algebra.
    pub fn parse_yd_json(&self, text: &str) -> Result<YDModule> {
        let file: YdFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let (n, d, f) = (self.hopf().dim(), file.dim, self.field());
        let bad = |what: &str, idx: &[usize]| Error::ShapeMismatch(format!("{what} entry {idx:?} out of range"));
        let mut acts = vec![vec![Vec::new(); d]; n];
        for (h, i, j, c) in &file.action {
            if *h >= n || *i >= d || *j >= d {
                return Err(bad("action", &[*h, *i, *j]));
            }
            acts[*h][*i].push((*j, c.value(f)?));
        }
        let mut coacts = vec![vec![Vec::new(); d]; n];
        for (i, h, j, c) in &file.coaction {
            if *h >= n || *i >= d || *j >= d {
                return Err(bad("coaction", &[*i, *h, *j]));
            }
            coacts[*h][*i].push((*j, c.value(f)?));
        }
        let acts = acts.into_iter().map(|cols| SpMat::from_columns(f, d, cols)).collect();
        let coacts = coacts.into_iter().map(|cols| SpMat::from_columns(f, d, cols)).collect();
        self.yd(HModule::new(file.name, f, d, acts), coacts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::sweedler;
    use crate::scalar::Field;

    #[test]
    fn round_trip() {
        let c = YdCategory::new(&sweedler(Field::Rationals).unwrap()).unwrap();
        let m = c.functor_r(&c.unit_hmod()).unwrap();
        let back = c.parse_yd_json(&yd_to_json(&m)).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn invalid_module_is_rejected() {
        let c = YdCategory::new(&sweedler(Field::Rationals).unwrap()).unwrap();
        let text = r#"{"name": "bad", "dim": 1, "action": [[0, 0, 0, 2]], "coaction": [[0, 0, 0, 1]]}"#;
        assert!(matches!(c.parse_yd_json(text), Err(Error::AxiomFailure(_))));
        let text = r#"{"name": "bad", "dim": 1, "action": [[9, 0, 0, 1]], "coaction": []}"#;
        assert!(matches!(c.parse_yd_json(text), Err(Error::ShapeMismatch(_))));
    }
}

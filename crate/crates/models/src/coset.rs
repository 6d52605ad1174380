use std::sync::Arc;

use group_engine::{generate_group, GeneratedGroup, GroupError, ObjectModel, Perm, PermGroup};

use crate::ModelError;

/// Left cosets `gH` of a subgroup H of Sym(n), each stored as the
/// lexicographically least image vector among its elements.
pub struct CosetSpace {
    name: String,
    h: Arc<GeneratedGroup>,
    elements: Vec<Perm>,
}

impl CosetSpace {
    pub fn new(name: &str, degree: usize, generators: Vec<Perm>, budget: u64) -> Result<Self, ModelError> {
        let h = generate_group(degree, generators, budget)?;
        let elements = h.elements().cloned().collect();
        Ok(CosetSpace { name: name.to_string(), h: Arc::new(h), elements })
    }

    pub fn subgroup(&self) -> &GeneratedGroup {
        &self.h
    }

    fn canonical(&self, g: &Perm) -> Vec<u8> {
        let gi = g.images();
        let mut best: Vec<u8> = vec![u8::MAX; gi.len()];
        let mut cand = vec![0u8; gi.len()];
        for h in &self.elements {
            for (j, &hj) in h.images().iter().enumerate() {
                cand[j] = gi[hj as usize];
            }
            if cand < best {
                best.copy_from_slice(&cand);
            }
        }
        best
    }
}

/// Parses a generator file: an optional `name ...` line, a `degree N` line,
/// then one generator per line in 1-based cycle notation; `#` starts a comment.
pub fn parse_group_file(text: &str) -> Result<(Option<String>, usize, Vec<Perm>), ModelError> {
    let mut name = None;
    let mut degree = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("name") {
            name = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("degree") {
            let d = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| ModelError::Parameter(format!("line {}: bad degree {rest:?}", lineno + 1)))?;
            degree = Some(d);
        } else {
            let d = degree.ok_or_else(|| ModelError::Parameter("the degree header must precede the generators".into()))?;
            gens.push(Perm::parse(d, line).map_err(|e| ModelError::Parameter(format!("line {}: {e}", lineno + 1)))?);
        }
    }
    let degree = degree.ok_or_else(|| ModelError::Parameter("missing degree header".into()))?;
    Ok((name, degree, gens))
}

impl ObjectModel for CosetSpace {
    type Point = Vec<u8>;

    fn name(&self) -> String {
        format!("cosets of {}", self.name)
    }

    fn degree(&self) -> usize {
        self.h.degree()
    }

    fn base_point(&self) -> Vec<u8> {
        self.canonical(&Perm::identity(self.h.degree()))
    }

    fn act(&self, g: &Perm, x: &Vec<u8>) -> Vec<u8> {
        let rep = Perm::from_images(x.clone()).expect("stored cosets are permutations");
        self.canonical(&g.compose(&rep))
    }

    fn stabilizer(&self) -> Result<Arc<dyn PermGroup>, GroupError> {
        Ok(self.h.clone())
    }

    fn describe(&self, x: &Vec<u8>) -> String {
        format!("{}H", Perm::from_images(x.clone()).expect("stored cosets are permutations"))
    }
}

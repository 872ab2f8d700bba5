//! Algebra and module presentations.

use crate::alphabet::{Alphabet, Role, Signature};
use crate::error::{Error, Result};
use crate::lie::LieExpr;
use crate::poly::{LinComb, ModElement, Monomial, Poly};
use crate::rewrite::RuleSet;
use crate::word::ModMonomial;

fn monic_dedup<M: Monomial>(rels: Vec<LinComb<M>>) -> Result<Vec<LinComb<M>>> {
    let mut out: Vec<LinComb<M>> = Vec::with_capacity(rels.len());
    for r in rels {
        let r = r.make_monic().map_err(|_| Error::ZeroRelation)?;
        if !out.contains(&r) {
            out.push(r);
        }
    }
    Ok(out)
}

/// `k⟨X | S⟩`: relations are stored monic, duplicates dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    alphabet: Alphabet,
    relations: Vec<Poly>,
}

impl AlgebraPresentation {
    pub fn new(alphabet: Alphabet, relations: Vec<Poly>) -> Result<Self> {
        for r in &relations {
            r.check_alphabet(&alphabet)?;
        }
        Ok(AlgebraPresentation {
            alphabet,
            relations: monic_dedup(relations)?,
        })
    }

    /// Relations given as Lie expressions, expanded into commutators.
    pub fn from_lie(alphabet: Alphabet, relations: &[LieExpr]) -> Result<Self> {
        Self::new(alphabet, relations.iter().map(LieExpr::expand).collect())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn signature(&self) -> Signature {
        Signature::algebra_only(self.alphabet.clone())
    }

    pub fn rule_set(&self) -> RuleSet<crate::word::Word> {
        RuleSet::algebra(self.relations.clone()).expect("relations are normalized")
    }
}

/// `mod⟨Y | S·X*·Y ∪ T⟩` over `k⟨X⟩`, with `S` kept as a schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulePresentation {
    algebra: AlgebraPresentation,
    module_alphabet: Alphabet,
    module_relations: Vec<ModElement>,
}

impl ModulePresentation {
    pub fn new(
        algebra: AlgebraPresentation,
        module_alphabet: Alphabet,
        module_relations: Vec<ModElement>,
    ) -> Result<Self> {
        if module_alphabet.is_empty() {
            return Err(Error::EmptyModuleAlphabet);
        }
        let module_alphabet = Alphabet::new(module_alphabet.symbols().to_vec(), Role::Module)?;
        let sig = Signature::new(algebra.alphabet.clone(), module_alphabet.clone());
        for r in &module_relations {
            r.check(&sig)?;
        }
        Ok(ModulePresentation {
            algebra,
            module_alphabet,
            module_relations: monic_dedup(module_relations)?,
        })
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.algebra.alphabet
    }

    pub fn module_alphabet(&self) -> &Alphabet {
        &self.module_alphabet
    }

    pub fn relations(&self) -> &[Poly] {
        &self.algebra.relations
    }

    pub fn module_relations(&self) -> &[ModElement] {
        &self.module_relations
    }

    pub fn generators(&self) -> Vec<u32> {
        (0..self.module_alphabet.len() as u32).collect()
    }

    pub fn signature(&self) -> Signature {
        Signature::new(self.algebra.alphabet.clone(), self.module_alphabet.clone())
    }

    /// The rule set `T` together with the schema `S`.
    pub fn rule_set(&self) -> RuleSet<ModMonomial> {
        RuleSet::module(
            self.module_relations.clone(),
            self.algebra.relations.clone(),
        )
        .expect("relations are normalized")
    }

    /// The same presentation with `T` replaced.
    pub fn with_module_relations(&self, module_relations: Vec<ModElement>) -> Result<Self> {
        Self::new(
            self.algebra.clone(),
            self.module_alphabet.clone(),
            module_relations,
        )
    }

    /// The same presentation with `S` replaced.
    pub fn with_relations(&self, relations: Vec<Poly>) -> Result<Self> {
        let algebra = AlgebraPresentation::new(self.algebra.alphabet.clone(), relations)?;
        Self::new(
            algebra,
            self.module_alphabet.clone(),
            self.module_relations.clone(),
        )
    }
}

/// Lifts `A = k⟨X|S⟩` and an `A`-module presentation `⟨Y|T⟩` to the
/// double-free presentation `mod⟨Y | S·X*·Y ∪ T₁⟩`. The representatives
/// in `t` are used verbatim.
pub fn embed_presentation(
    s: Vec<Poly>,
    t: Vec<ModElement>,
    alphabet: Alphabet,
    module_alphabet: Alphabet,
) -> Result<ModulePresentation> {
    ModulePresentation::new(AlgebraPresentation::new(alphabet, s)?, module_alphabet, t)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Presentation {
    Algebra(AlgebraPresentation),
    Module(ModulePresentation),
}

impl Presentation {
    pub fn signature(&self) -> Signature {
        match self {
            Presentation::Algebra(p) => p.signature(),
            Presentation::Module(p) => p.signature(),
        }
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        match self {
            Presentation::Algebra(p) => p,
            Presentation::Module(p) => p.algebra(),
        }
    }

    pub fn as_module(&self) -> Option<&ModulePresentation> {
        match self {
            Presentation::Module(p) => Some(p),
            Presentation::Algebra(_) => None,
        }
    }

    pub fn shape(&self) -> &'static str {
        match self {
            Presentation::Algebra(_) => "algebra",
            Presentation::Module(_) => "module",
        }
    }
}

impl From<AlgebraPresentation> for Presentation {
    fn from(p: AlgebraPresentation) -> Self {
        Presentation::Algebra(p)
    }
}

impl From<ModulePresentation> for Presentation {
    fn from(p: ModulePresentation) -> Self {
        Presentation::Module(p)
    }
}

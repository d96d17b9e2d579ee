//! Circuits over local layers and one fixed entangling gate.
//!
//! Element 0 is applied first to the state, so it appears rightmost in the
//! matrix product. Entangler applications are opaque tags; the entangler's
//! matrix is supplied at evaluation time.

use crate::error::{Error, Result};
use crate::matcore::{Complex64, LocalPair, Unitary2, Unitary4, ONE};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CircuitElement {
    Local(LocalPair),
    Entangler,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    elements: Vec<CircuitElement>,
    phase: Complex64,
}

impl Default for Circuit {
    fn default() -> Self {
        Self::new()
    }
}

impl Circuit {
    pub fn new() -> Self {
        Self {
            elements: Vec::new(),
            phase: ONE,
        }
    }

    pub fn from_parts(elements: Vec<CircuitElement>, phase: Complex64) -> Result<Self> {
        let modulus = phase.norm();
        if !modulus.is_finite() || (modulus - 1.0).abs() > 1e-10 {
            return Err(Error::NonUnitPhase { modulus });
        }
        Ok(Self { elements, phase })
    }

    /// A single local layer.
    pub fn local(pair: LocalPair) -> Self {
        let mut c = Self::new();
        c.push_local(pair);
        c
    }

    pub fn elements(&self) -> &[CircuitElement] {
        &self.elements
    }

    pub fn phase(&self) -> Complex64 {
        self.phase
    }

    pub fn push_local(&mut self, pair: LocalPair) -> &mut Self {
        self.elements.push(CircuitElement::Local(pair));
        self
    }

    pub fn push_second(&mut self, b: Unitary2) -> &mut Self {
        self.push_local(LocalPair::on_second(b))
    }

    pub fn push_entangler(&mut self) -> &mut Self {
        self.elements.push(CircuitElement::Entangler);
        self
    }

    /// Multiplies the global phase by a unit scalar.
    pub fn rephase(&mut self, factor: Complex64) -> &mut Self {
        self.phase *= factor;
        self
    }

    /// Appends `next`, which is applied after everything already here.
    pub fn append(&mut self, next: &Circuit) -> &mut Self {
        self.elements.extend_from_slice(&next.elements);
        self.phase *= next.phase;
        self
    }

    pub fn then(mut self, next: &Circuit) -> Self {
        self.append(next);
        self
    }

    /// `n` back-to-back copies.
    pub fn repeated(&self, n: usize) -> Self {
        let mut out = Self::new();
        for _ in 0..n {
            out.append(self);
        }
        out
    }

    /// Wraps the circuit: `before` is applied first, `after` last.
    pub fn conjugated(&self, before: LocalPair, after: LocalPair) -> Self {
        let mut out = Self::local(before);
        out.append(self).push_local(after);
        out
    }

    pub fn entangler_count(&self) -> usize {
        self.elements
            .iter()
            .filter(|e| matches!(e, CircuitElement::Entangler))
            .count()
    }

    pub fn local_count(&self) -> usize {
        self.elements.len() - self.entangler_count()
    }

    pub fn evaluate(&self, entangler: &Unitary4) -> Unitary4 {
        evaluate(self, entangler)
    }
}

/// Matrix of the circuit: element 0 rightmost, times the stored phase.
pub fn evaluate(circuit: &Circuit, entangler: &Unitary4) -> Unitary4 {
    let mut acc = Unitary4::identity();
    for el in &circuit.elements {
        let m = match el {
            CircuitElement::Local(p) => p.to_unitary(),
            CircuitElement::Entangler => *entangler,
        };
        acc = m * acc;
    }
    acc.scaled(circuit.phase)
}

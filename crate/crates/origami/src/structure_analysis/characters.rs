//! Character tables of the quaternion group and of Z/q, and isotypic
//! multiplicities of representations given by traces.

use super::cyclotomic::Cyclo;
use crate::affine_action::AffineLift;
use crate::error::{Error, Result};
use crate::homology::{Homology, Subspace};
use crate::linalg::{q, Q};
use crate::origami_core::Quat;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct Character {
    pub name: String,
    /// Values on the group elements, in table order.
    pub values: Vec<Cyclo>,
}

/// Characters listed on every group element (not only on classes). Values live
/// in Q[x]/(x^m − 1); for the quaternion group m = 1.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: String,
    pub elements: Vec<String>,
    /// Conjugacy classes as element indices.
    pub classes: Vec<Vec<usize>>,
    pub characters: Vec<Character>,
    pub m: usize,
}

impl CharacterTable {
    /// Elements in the order of `Quat::all()`: 1, i, j, k, −1, −i, −j, −k.
    pub fn quaternion() -> Self {
        let elements: Vec<String> = Quat::all().map(|g| g.name()).collect();
        let classes = vec![vec![0], vec![4], vec![1, 5], vec![2, 6], vec![3, 7]];
        let linear = |keep: usize| -> Vec<Cyclo> {
            Quat::all()
                .map(|g| {
                    let u = g.unit();
                    let v = if keep == 0 || u == 0 || u == keep { 1 } else { -1 };
                    Cyclo::constant(1, q(v))
                })
                .collect()
        };
        let two = Quat::all()
            .map(|g| match g.0 {
                0 => Cyclo::constant(1, q(2)),
                4 => Cyclo::constant(1, q(-2)),
                _ => Cyclo::zero(1),
            })
            .collect();
        let characters = vec![
            Character { name: "chi_1".into(), values: linear(0) },
            Character { name: "chi_i".into(), values: linear(1) },
            Character { name: "chi_j".into(), values: linear(2) },
            Character { name: "chi_k".into(), values: linear(3) },
            Character { name: "chi_2".into(), values: two },
        ];
        CharacterTable { group: "Q".into(), elements, classes, characters, m: 1 }
    }

    /// ρ^a(g) = x^{ag} for a, g ∈ Z/q.
    pub fn cyclic(qn: usize) -> Self {
        let characters = (0..qn)
            .map(|a| Character {
                name: format!("rho^{a}"),
                values: (0..qn).map(|g| Cyclo::monomial(qn, (a * g) as i64)).collect(),
            })
            .collect();
        CharacterTable {
            group: format!("Z/{qn}"),
            elements: (0..qn).map(|g| g.to_string()).collect(),
            classes: (0..qn).map(|g| vec![g]).collect(),
            characters,
            m: qn,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// (1/|G|) Σ_g a(g)·conj(b(g)), evaluated at a primitive m-th root of unity.
    pub fn inner(&self, a: &[Cyclo], b: &[Cyclo]) -> Vec<Q> {
        let s = a.iter().zip(b).fold(Cyclo::zero(self.m), |acc, (x, y)| &acc + &(x * &y.conj()));
        s.scale(Q::one() / Q::from_integer(self.order() as i128)).reduce_mod_cyclotomic(self.m)
    }

    pub fn is_orthonormal(&self) -> bool {
        self.characters.iter().enumerate().all(|(i, a)| {
            self.characters.iter().enumerate().all(|(j, b)| {
                let v = self.inner(&a.values, &b.values);
                let want = if i == j { Q::one() } else { Q::zero() };
                v[0] == want && v.iter().skip(1).all(|c| c.is_zero())
            })
        })
    }

    /// Multiplicities of each character in the representation with the given
    /// rational traces (listed in element order).
    pub fn multiplicities(&self, traces: &[Q]) -> Result<Vec<(String, Q)>> {
        let t: Vec<Cyclo> = traces.iter().map(|x| Cyclo::constant(self.m, *x)).collect();
        self.characters
            .iter()
            .map(|c| {
                let v = self.inner(&t, &c.values);
                if v.iter().skip(1).any(|x| !x.is_zero()) {
                    return Err(Error::NotInvariant);
                }
                Ok((c.name.clone(), v[0]))
            })
            .collect()
    }
}

/// Multiplicities of the characters of `table` in the action of `lifts`
/// (one per group element, in table order) on `v`.
pub fn isotypic_multiplicities(
    h: &Homology,
    lifts: &[AffineLift],
    table: &CharacterTable,
    v: &Subspace,
) -> Result<Vec<(String, Q)>> {
    let traces = lifts.iter().map(|a| Ok(a.matrix_on(h, v)?.trace())).collect::<Result<Vec<Q>>>()?;
    table.multiplicities(&traces)
}

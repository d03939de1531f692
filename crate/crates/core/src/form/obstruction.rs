use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::QuadraticForm;

/// Moduli tried when attaching a certificate to an unsolvable form.
pub const DEFAULT_OBSTRUCTION_MODULI: &[u64] = &[3, 4, 5, 7, 8, 9, 11, 13, 16, 25];

/// Every value of the form is congruent modulo `modulus` to one of
/// `residues` (sorted, least non-negative), and the requested right-hand
/// side is not among them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularObstruction {
    pub modulus: BigInt,
    pub residues: Vec<BigInt>,
}

/// First modulus whose residue set of `f` misses `rhs`. `None` proves
/// nothing about solvability.
pub fn modular_obstruction(f: &QuadraticForm, rhs: &BigInt, moduli: &[u64]) -> Option<ModularObstruction> {
    moduli.iter().filter(|&&m| m >= 2).find_map(|&m| {
        let residues = residues_mod(f, m);
        let target = rhs.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits");
        (!residues.contains(&target)).then(|| ModularObstruction {
            modulus: BigInt::from(m),
            residues: residues.into_iter().map(BigInt::from).collect(),
        })
    })
}

fn residues_mod(f: &QuadraticForm, m: u64) -> BTreeSet<u64> {
    let modulus = BigInt::from(m);
    let reduce = |v: &BigInt| v.mod_floor(&modulus).to_u128().expect("residue fits");
    let (a, b, c) = (reduce(&f.a), reduce(&f.b), reduce(&f.c));
    let m = m as u128;
    let mut out = BTreeSet::new();
    for x in 0..m {
        for y in 0..m {
            out.insert(((a * x * x + b * x * y + c * y * y) % m) as u64);
        }
    }
    out
}

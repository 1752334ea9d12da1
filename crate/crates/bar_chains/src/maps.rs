use fox_words::{GroupRingElt, Word};

use crate::{BarChain, BarError};

/// `c_1(A x_i) = (A, A x_i)`.
pub fn chain_map_c1(a: &Word, gen: usize) -> BarChain<Word> {
    let mut out = BarChain::zero(1);
    out.add_term(vec![a.clone(), a.mul(&Word::gen(gen))], 1).expect("two entries");
    out
}

/// `c_1` applied to a vector over the group ring, entry `i` being the
/// coefficient of the 1-cell `x_{i+1}`.
pub fn chain_map_c1_vec(v: &[GroupRingElt]) -> BarChain<Word> {
    let mut out = BarChain::zero(1);
    for (i, e) in v.iter().enumerate() {
        for (w, c) in e.terms() {
            out.add_term(vec![w.clone(), w.mul(&Word::gen(i + 1))], c).expect("two entries");
        }
    }
    out
}

/// `c_2(A r) = Σ_m ε_m (A, A p_m x_{i_m}^{(ε_m-1)/2}, A p_m x_{i_m}^{(ε_m+1)/2})`
/// where `r = x_{i_1}^{ε_1} ⋯ x_{i_n}^{ε_n}` and `p_m` is the prefix before letter `m`.
pub fn chain_map_c2(a: &Word, r: &Word) -> BarChain<Word> {
    let mut out = BarChain::zero(2);
    let mut prefix = a.clone();
    for &l in r.letters() {
        let mut next = prefix.clone();
        next.push(l);
        let (low, high) = if l.exp > 0 { (prefix.clone(), next.clone()) } else { (next.clone(), prefix.clone()) };
        out.add_term(vec![a.clone(), low, high], l.exp as i64).expect("three entries");
        prefix = next;
    }
    out
}

/// `c_2(Σ_j e_j r_j)` for a group-ring combination of relators.
pub fn chain_map_c2_sum(expansion: &[(GroupRingElt, usize)], relators: &[Word]) -> Result<BarChain<Word>, BarError> {
    let mut out = BarChain::zero(2);
    for (e, j) in expansion {
        let r = relators.get(*j).ok_or(BarError::UnknownRelator(*j))?;
        for (w, c) in e.terms() {
            out.add_scaled(&chain_map_c2(w, r), &c.into())?;
        }
    }
    Ok(out)
}

use rayon::prelude::*;

use super::arcs::{arcs_of_valid, ArcStructure};
use super::coloring::InvariantError;
use super::group::FiniteGroup;
use crate::model::{GaussCode, Sign};

/// Value forced on the out arc: `over in over^-1` at a positive crossing, `over^-1 in over` at a
/// negative one.
fn out_value(g: &FiniteGroup, sign: Sign, over: usize, input: usize) -> usize {
    match sign {
        Sign::Plus => g.conj(over, input),
        Sign::Minus => g.conj(g.inv(over), input),
    }
}

struct Plan {
    arc_count: usize,
    /// For arc `j > 0`: the crossing entering it, used to force its value when the over arc is
    /// already assigned.
    entering: Vec<Option<(usize, Sign)>>,
    /// Crossings to verify once arc `j` is assigned (all three arcs are `<= j`).
    checks: Vec<Vec<(usize, usize, usize, Sign)>>,
}

fn plan(structure: &ArcStructure) -> Plan {
    let n = structure.arc_count;
    let mut entering = vec![None; n];
    let mut checks = vec![Vec::new(); n];
    for c in &structure.crossings {
        let j = c.out_arc;
        if j > 0 && c.over_arc < j {
            entering[j] = Some((c.over_arc, c.sign));
        }
        let last = c.over_arc.max(c.in_arc).max(c.out_arc);
        checks[last].push((c.over_arc, c.in_arc, c.out_arc, c.sign));
    }
    Plan { arc_count: n, entering, checks }
}

fn count_from(g: &FiniteGroup, plan: &Plan, values: &mut Vec<usize>) -> u64 {
    let j = values.len();
    if j == plan.arc_count {
        return 1;
    }
    let candidates: Vec<usize> = match plan.entering[j] {
        Some((over, sign)) => vec![out_value(g, sign, values[over], values[j - 1])],
        None => (0..g.order()).collect(),
    };
    let mut total = 0;
    for x in candidates {
        values.push(x);
        let ok = plan.checks[j]
            .iter()
            .all(|&(over, input, out, sign)| values[out] == out_value(g, sign, values[over], values[input]));
        if ok {
            total += count_from(g, plan, values);
        }
        values.pop();
    }
    total
}

pub(crate) fn hom_count_of(structure: &ArcStructure, g: &FiniteGroup) -> u64 {
    let plan = plan(structure);
    (0..g.order())
        .into_par_iter()
        .map(|x0| {
            let mut values = vec![x0];
            let ok = plan.checks[0]
                .iter()
                .all(|&(over, input, out, sign)| values[out] == out_value(g, sign, values[over], values[input]));
            if ok {
                count_from(g, &plan, &mut values)
            } else {
                0
            }
        })
        .sum()
}

/// Number of assignments of group elements to arcs satisfying the Wirtinger relation at every
/// crossing.
pub fn hom_count(code: &GaussCode, g: &FiniteGroup) -> Result<u64, InvariantError> {
    code.validate()?;
    Ok(hom_count_of(&arcs_of_valid(code), g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(code: &GaussCode, g: &FiniteGroup) -> u64 {
        let a = arcs_of_valid(code);
        let k = g.order();
        let n = a.arc_count as u32;
        (0..k.pow(n))
            .filter(|&m| {
                let x: Vec<usize> = (0..n).map(|i| m / k.pow(i) % k).collect();
                a.crossings.iter().all(|c| x[c.out_arc] == out_value(g, c.sign, x[c.over_arc], x[c.in_arc]))
            })
            .count() as u64
    }

    #[test]
    fn empty_and_kink_give_group_order() {
        for name in FiniteGroup::builtin_names() {
            let g = FiniteGroup::builtin(&name).unwrap();
            assert_eq!(hom_count(&GaussCode::empty(), &g), Ok(g.order() as u64));
            for kink in ["O1+ U1+", "U1- O1-"] {
                assert_eq!(hom_count(&kink.parse().unwrap(), &g), Ok(g.order() as u64));
            }
        }
    }

    #[test]
    fn trefoil_s3_matches_brute_force() {
        let trefoil: GaussCode = "O1+ U2+ O3+ U1+ O2+ U3+".parse().unwrap();
        let s3 = FiniteGroup::symmetric3();
        let expected = brute(&trefoil, &s3);
        assert_eq!(expected, 12);
        assert_eq!(hom_count(&trefoil, &s3), Ok(expected));
    }

    #[test]
    fn agrees_with_brute_force_on_mixed_signs() {
        let g = FiniteGroup::builtin("D8").unwrap();
        for text in ["O1+ U2- O3+ O2- U1+ U3+", "O1- U2- O3+ U4+ O2- U1- O4+ U3+", "U1+ O2- O1+ U2-"] {
            let code: GaussCode = text.parse().unwrap();
            assert_eq!(hom_count(&code, &g).unwrap(), brute(&code, &g), "{text}");
        }
    }
}

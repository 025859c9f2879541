//! Truth-table evaluation of lattice terms, brute-force antichain counting
//! and a naive congruence fixpoint on boolean matrices.

use fpnf_core::distlat::LatticeTerm;

pub fn eval(t: &LatticeTerm, assignment: usize) -> bool {
    match t {
        LatticeTerm::Bot => false,
        LatticeTerm::Top => true,
        LatticeTerm::Gen(i) => assignment >> i & 1 == 1,
        LatticeTerm::Meet(a, b) => eval(a, assignment) && eval(b, assignment),
        LatticeTerm::Join(a, b) => eval(a, assignment) || eval(b, assignment),
    }
}

pub fn truth(t: &LatticeTerm, n: usize) -> Vec<bool> {
    (0..1 << n).map(|k| eval(t, k)).collect()
}

/// Families of subsets of an `n`-set with no member contained in another.
pub fn count_antichains(n: usize) -> usize {
    let subsets = 1usize << n;
    (0u64..1 << subsets)
        .filter(|family| {
            let members: Vec<usize> = (0..subsets).filter(|s| family >> s & 1 == 1).collect();
            members.iter().all(|&a| members.iter().all(|&b| a == b || a & b != a))
        })
        .count()
}

pub fn monotone_functions(n: usize) -> Vec<Vec<bool>> {
    let points = 1usize << n;
    (0u64..1 << points)
        .map(|bits| (0..points).map(|k| bits >> k & 1 == 1).collect::<Vec<bool>>())
        .filter(|f| (0..points).all(|a| (0..points).all(|b| a & b != a || !f[a] || f[b])))
        .collect()
}

/// Least congruence containing the laws, as a relation matrix over
/// `monotone_functions(n)`.
pub fn naive_congruence(n: usize, laws: &[(LatticeTerm, LatticeTerm)]) -> (Vec<Vec<bool>>, Vec<Vec<bool>>) {
    let elems = monotone_functions(n);
    let size = elems.len();
    let index = |f: &Vec<bool>| elems.iter().position(|g| g == f).unwrap();
    let mut rel = vec![vec![false; size]; size];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for (a, b) in laws {
        let (i, j) = (index(&truth(a, n)), index(&truth(b, n)));
        rel[i][j] = true;
        rel[j][i] = true;
    }
    let meet = |a: &Vec<bool>, b: &Vec<bool>| a.iter().zip(b).map(|(x, y)| *x && *y).collect::<Vec<bool>>();
    let join = |a: &Vec<bool>, b: &Vec<bool>| a.iter().zip(b).map(|(x, y)| *x || *y).collect::<Vec<bool>>();
    loop {
        let mut changed = false;
        for x in 0..size {
            for y in 0..size {
                if !rel[x][y] {
                    continue;
                }
                for z in &elems {
                    for (p, q) in [(meet(&elems[x], z), meet(&elems[y], z)), (join(&elems[x], z), join(&elems[y], z))] {
                        let (i, j) = (index(&p), index(&q));
                        if !rel[i][j] {
                            rel[i][j] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        for k in 0..size {
            for i in 0..size {
                for j in 0..size {
                    if rel[i][k] && rel[k][j] && !rel[i][j] {
                        rel[i][j] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return (elems, rel);
        }
    }
}

//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! with a failure status if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use growth_core::growth::{build_growth, enumerate_growths, extract_pq, rsk, rsk_inverse, Borders, IntMatrix};
use growth_core::insertion::{check_traceable, insert, InsertionOrder};
use growth_core::interlacing::{down_set, up_set, PositionMultiset};
use growth_core::partition::{enumerate_partitions, partitions_of, Family, Partition};
use growth_core::projection::{asym_indices, proj_sets, AsymSign, ProjVariant};
use growth_core::rules::{apply_rule, unapply_rule, RuleId};
use growth_core::schur::{count_syt, verify_identity, IdentityKind, IdentityParams};
use growth_core::tableau::{StepKind, TableauChain};
use growth_core::triangular::{
    build_triangular, entry_allowed, extract_p, littlewood_inverse, littlewood_map, LittlewoodVariant, TriangularArray,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn mat(rows: &[&[usize]]) -> IntMatrix {
    IntMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn chain(levels: &[&[usize]], steps: StepKind) -> TableauChain {
    TableauChain::new(levels.iter().map(|l| p(l)).collect(), steps).unwrap()
}

// ---- independent oracles -------------------------------------------------

/// `ν/μ` is a horizontal strip iff every column grows by at most one cell;
/// a vertical strip iff every row does.
fn strip_by_cells(mu: &Partition, nu: &Partition, vertical: bool) -> bool {
    if !nu.contains(mu) {
        return false;
    }
    let (a, b) = if vertical { (mu.clone(), nu.clone()) } else { (mu.conjugate(), nu.conjugate()) };
    (0..b.len()).all(|i| b.part(i) - a.part(i) <= 1)
}

/// Family membership from arm and leg lengths read off the diagram.
fn member_by_cells(lambda: &Partition, family: Family) -> bool {
    let conj = lambda.conjugate();
    let d = (0..lambda.len()).take_while(|&i| lambda.part(i) > i).count();
    let arms: Vec<i64> = (0..d).map(|i| lambda.part(i) as i64 - i as i64 - 1).collect();
    let legs: Vec<i64> = (0..d).map(|i| conj.part(i) as i64 - i as i64 - 1).collect();
    match family {
        Family::All => true,
        Family::EvenRows => lambda.parts().iter().all(|x| x % 2 == 0),
        Family::EvenColumns => conj.parts().iter().all(|x| x % 2 == 0),
        Family::AsymPlus => arms.iter().zip(&legs).all(|(a, b)| *b == a + 1),
        Family::AsymMinus => arms.iter().zip(&legs).all(|(a, b)| *a == b + 1),
    }
}

// ---- criteria -------------------------------------------------------------

fn criterion_1() -> Check {
    let a = mat(&[&[0, 2, 1], &[1, 1, 0], &[2, 0, 0]]);
    let (pt, qt) = rsk(RuleId::Row, &a, None).map_err(|e| e.to_string())?;
    ensure(pt.rows() == vec![vec![1, 1, 1], vec![2, 2, 3], vec![3]], || format!("P = {:?}", pt.rows()))?;
    ensure(qt.rows() == vec![vec![1, 1, 1], vec![2, 2, 2], vec![3]], || format!("Q = {:?}", qt.rows()))?;
    let (back, borders) = rsk_inverse(RuleId::Row, &pt, &qt).map_err(|e| e.to_string())?;
    ensure(back == a && borders.is_trivial(), || "inverse did not recover the matrix".into())?;
    Ok("P, Q as displayed; inverse recovers A".into())
}

/// All growths by trying every partition of the prescribed size at every
/// inner vertex.
fn brute_growths(a: &IntMatrix, dual: bool) -> BTreeSet<Vec<Vec<Partition>>> {
    let (n, m) = (a.rows(), a.cols());
    let mut sizes = vec![vec![0usize; m + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=m {
            sizes[i][j] = sizes[i - 1][j] + sizes[i][j - 1] - sizes[i - 1][j - 1] + a.get(i, j);
        }
    }
    let cells: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=m).map(move |j| (i, j))).collect();
    let options: Vec<Vec<Partition>> = cells.iter().map(|&(i, j)| partitions_of(sizes[i][j], usize::MAX, usize::MAX)).collect();
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; cells.len()];
    loop {
        let mut v = vec![vec![Partition::empty(); m + 1]; n + 1];
        for (c, &(i, j)) in cells.iter().enumerate() {
            v[i][j] = options[c][idx[c]].clone();
        }
        let ok = cells
            .iter()
            .all(|&(i, j)| strip_by_cells(&v[i - 1][j], &v[i][j], false) && strip_by_cells(&v[i][j - 1], &v[i][j], dual));
        if ok {
            out.insert(v);
        }
        let mut c = 0;
        loop {
            if c == cells.len() {
                return out;
            }
            idx[c] += 1;
            if idx[c] < options[c].len() {
                break;
            }
            idx[c] = 0;
            c += 1;
        }
    }
}

fn criterion_2() -> Check {
    let a = mat(&[&[0, 1], &[1, 0], &[1, 1]]);
    let mut counts = Vec::new();
    for dual in [false, true] {
        let brute = brute_growths(&a, dual);
        let found: BTreeSet<_> = enumerate_growths(&a, dual).into_iter().map(|g| g.vertices).collect();
        ensure(found == brute, || format!("enumeration disagrees with brute force (dual = {dual})"))?;
        counts.push(brute.len());
        for rule in RuleId::ALL.into_iter().filter(|r| r.is_dual() == dual) {
            let g = build_growth(rule, &a, None).map_err(|e| e.to_string())?;
            ensure(brute.contains(&g.vertices), || format!("{rule} grid is not a growth"))?;
        }
    }
    ensure(counts == [4, 2], || format!("counts {counts:?}"))?;
    Ok("4 growths, 2 dual growths; all four rule grids are members".into())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut q = rest.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn criterion_3() -> Check {
    for n in 0..=8usize {
        let sum: num_bigint::BigUint = partitions_of(n, usize::MAX, usize::MAX).iter().map(|l| count_syt(l).pow(2)).sum();
        let fact: u64 = (1..=n as u64).product();
        ensure(sum == num_bigint::BigUint::from(fact), || format!("n = {n}: {sum} != {fact}"))?;
    }
    for n in 1..=6usize {
        let perms = permutations(n);
        for rule in RuleId::ALL {
            let mut images = BTreeSet::new();
            for perm in &perms {
                let mut rows = vec![vec![0; n]; n];
                for (i, &j) in perm.iter().enumerate() {
                    rows[i][j] = 1;
                }
                let a = IntMatrix::new(rows).unwrap();
                let (pt, qt) = rsk(rule, &a, None).map_err(|e| e.to_string())?;
                let standard = pt.weight().iter().all(|&w| w == 1) && qt.weight().iter().all(|&w| w == 1);
                ensure(standard, || format!("{rule}: non-standard output for {perm:?}"))?;
                let (back, _) = rsk_inverse(rule, &pt, &qt).map_err(|e| e.to_string())?;
                ensure(back == a, || format!("{rule}: inverse failed for {perm:?}"))?;
                images.insert((pt, qt));
            }
            ensure(images.len() == perms.len(), || format!("{rule}: collisions at n = {n}"))?;
        }
        ensure(perms.len() == (1..=n).product::<usize>(), || "permutation count".into())?;
    }
    Ok("Σ f_λ² = n! for n ≤ 8 (40320 at n = 8); 720 distinct standard pairs at n = 6 for every rule".into())
}

fn criterion_4() -> Check {
    let shapes = enumerate_partitions(25, Some((5, 5)));
    // spot-check the exhaustive up/down sets against the cell oracle on a 3×3 box
    let small = enumerate_partitions(9, Some((3, 3)));
    let universe = enumerate_partitions(16, Some((5, 7)));
    for lambda in &small {
        for rho in &small {
            for k in 0..=3 {
                for dual in [false, true] {
                    let base = lambda.join(rho).size();
                    let mut up: Vec<Partition> = universe
                        .iter()
                        .filter(|nu| nu.size() == base + k && strip_by_cells(lambda, nu, dual) && strip_by_cells(rho, nu, false))
                        .cloned()
                        .collect();
                    up.sort();
                    ensure(up == up_set(lambda, rho, k, dual), || format!("up set {lambda} {rho} {k} {dual}"))?;
                    let top = lambda.meet(rho).size();
                    let mut down: Vec<Partition> = universe
                        .iter()
                        .filter(|mu| mu.size() + k == top && strip_by_cells(mu, lambda, false) && strip_by_cells(mu, rho, dual))
                        .cloned()
                        .collect();
                    down.sort();
                    ensure(down == down_set(lambda, rho, k, dual), || format!("down set {lambda} {rho} {k} {dual}"))?;
                }
            }
        }
    }
    let mut checked = 0usize;
    for lambda in &shapes {
        for rho in &shapes {
            for dual in [false, true] {
                let downs: Vec<Vec<Partition>> = (0..=6).map(|i| down_set(lambda, rho, i, dual)).collect();
                for k in 0..=6 {
                    let up = up_set(lambda, rho, k, dual);
                    let domain: Vec<&Partition> = if dual {
                        downs[k].iter().chain(if k > 0 { downs[k - 1].iter() } else { [].iter() }).collect()
                    } else {
                        downs[..=k].iter().flatten().collect()
                    };
                    ensure(domain.len() == up.len(), || {
                        format!("cardinality {lambda} {rho} k={k} dual={dual}: {} vs {}", domain.len(), up.len())
                    })?;
                    for rule in RuleId::ALL.into_iter().filter(|r| r.is_dual() == dual) {
                        let mut images = Vec::with_capacity(up.len());
                        for mu in &domain {
                            let nu = apply_rule(rule, lambda, rho, k, mu).map_err(|e| format!("{rule} {lambda} {rho} {k} {mu}: {e}"))?;
                            let (back, entry) = unapply_rule(rule, lambda, rho, &nu).map_err(|e| e.to_string())?;
                            ensure(&&back == mu && lambda.meet(rho).size() - mu.size() + entry == k, || {
                                format!("{rule} inverse {lambda} {rho} {k} {mu}")
                            })?;
                            images.push(nu);
                            checked += 1;
                        }
                        images.sort();
                        ensure(images == up, || format!("{rule} not onto {lambda} {rho} {k}"))?;
                    }
                }
            }
        }
    }
    Ok(format!("{} shapes in the 5×5 box, k ≤ 6; {checked} rule applications inverted", shapes.len()))
}

fn criterion_5() -> Check {
    let universe = enumerate_partitions(16, None);
    let by_size = |s: usize| universe.iter().filter(move |x| x.size() == s);
    for lambda in enumerate_partitions(10, None) {
        for k in 0..=6usize {
            let count_up = |family: Family| {
                by_size(lambda.size() + k)
                    .filter(|nu| member_by_cells(nu, family) && strip_by_cells(&lambda, nu, false))
                    .count()
            };
            let count_down = |family: Family, i: usize| {
                if i > lambda.size() {
                    return 0;
                }
                by_size(lambda.size() - i)
                    .filter(|mu| member_by_cells(mu, family) && strip_by_cells(mu, &lambda, family.is_asym()))
                    .count()
            };
            let sum = |family: Family, sizes: Vec<usize>| -> usize { sizes.into_iter().map(|i| count_down(family, i)).sum() };
            let expected = [
                (Family::All, sum(Family::All, (0..=k).collect())),
                (Family::EvenRows, sum(Family::EvenRows, (0..=k).filter(|i| (k - i) % 2 == 0).collect())),
                (Family::EvenColumns, count_down(Family::EvenColumns, k)),
                (Family::AsymPlus, count_down(Family::AsymPlus, k)),
                (Family::AsymMinus, sum(Family::AsymMinus, if k >= 2 { vec![k, k - 2] } else { vec![k] })),
            ];
            for (family, down) in expected {
                let up = count_up(family);
                ensure(up == down, || format!("{family} {lambda} k={k}: {up} vs {down}"))?;
                let (d, u) = proj_sets(family, &lambda, k);
                ensure((d.len(), u.len()) == (down, up), || format!("proj_sets {family} {lambda} k={k}"))?;
            }
        }
        let plus = asym_indices(&lambda, AsymSign::Plus);
        ensure(!plus.exists || plus.s_indices.len() == plus.r_indices.len(), || format!("zigzag +1 {lambda}"))?;
        let minus = asym_indices(&lambda, AsymSign::Minus);
        ensure(!minus.exists || minus.s_indices.len() == minus.r_indices.len() + 1, || format!("zigzag -1 {lambda}"))?;
    }
    Ok("five projection laws for |λ| ≤ 10, k ≤ 6; zigzag counts hold".into())
}

fn criterion_6() -> Check {
    let mut cases: Vec<(IdentityKind, IdentityParams)> = vec![
        (IdentityKind::Cauchy, IdentityParams::new(3, 3, 6)),
        (IdentityKind::DualCauchy, IdentityParams::new(3, 3, 6)),
    ];
    for (l, r) in [(p(&[2, 1]), p(&[1, 1])), (p(&[3, 1]), p(&[2]))] {
        for kind in [IdentityKind::SkewCauchy, IdentityKind::SkewDualCauchy] {
            cases.push((kind, IdentityParams::new(2, 2, 6).with_lambda(l.clone()).with_rho(r.clone())));
        }
    }
    for family in Family::ALL {
        cases.push((IdentityKind::Littlewood(family), IdentityParams::new(3, 0, 8)));
        cases.push((IdentityKind::SkewLittlewood(family), IdentityParams::new(2, 0, 6).with_lambda(p(&[2, 1]))));
    }
    for k in 0..=3 {
        for kind in [IdentityKind::Pieri, IdentityKind::DualPieri] {
            cases.push((kind, IdentityParams::new(3, 0, 0).with_lambda(p(&[2, 1])).with_k(k)));
        }
    }
    let mut terms = 0;
    for (kind, params) in &cases {
        let r = verify_identity(*kind, params).map_err(|e| e.to_string())?;
        ensure(r.equal, || format!("{kind} {params:?}: first mismatch {:?}", r.mismatches.first()))?;
        ensure(r.checked_terms > 0, || format!("{kind}: nothing compared"))?;
        terms += r.checked_terms;
    }
    Ok(format!("{} identity instances equal, {terms} coefficients compared", cases.len()))
}

fn pairings(family: Family) -> Vec<LittlewoodVariant> {
    let candidates: Vec<(RuleId, ProjVariant)> = match family {
        Family::AsymPlus | Family::AsymMinus => [RuleId::DualRow, RuleId::DualCol]
            .into_iter()
            .flat_map(|r| [(r, ProjVariant::RowStar), (r, ProjVariant::ColStar)])
            .collect(),
        _ => [RuleId::Row, RuleId::Col]
            .into_iter()
            .flat_map(|r| [(r, ProjVariant::Inherit(RuleId::Row)), (r, ProjVariant::Inherit(RuleId::Col))])
            .filter(|(r, v)| family == Family::EvenColumns || *v == ProjVariant::Inherit(*r))
            .collect(),
    };
    candidates
        .into_iter()
        .filter_map(|(r, v)| LittlewoodVariant::with_rules(family, r, v).ok())
        .collect()
}

fn all_arrays(family: Family, n: usize, max: usize) -> Vec<TriangularArray> {
    let slots: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = (0..n).map(|i| vec![0; n - i]).collect();
    fn go(
        s: usize,
        slots: &[(usize, usize)],
        family: Family,
        max: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<TriangularArray>,
    ) {
        if s == slots.len() {
            out.push(TriangularArray::new(rows.clone(), family).unwrap());
            return;
        }
        let (i, j) = slots[s];
        for x in (0..=max).filter(|&x| entry_allowed(family, i == j, x)) {
            rows[i - 1][j - i] = x;
            go(s + 1, slots, family, max, rows, out);
        }
    }
    go(0, &slots, family, max, &mut rows, &mut out);
    out
}

fn criterion_7() -> Check {
    let mut total = 0;
    for family in Family::ALL {
        let arrays = all_arrays(family, 3, 2);
        for v in pairings(family) {
            let mut images = BTreeSet::new();
            for c in &arrays {
                let pt = littlewood_map(&v, c, None).map_err(|e| format!("{family} {v:?}: {e}"))?;
                ensure(member_by_cells(pt.shape(), family), || format!("{family}: shape {} outside family", pt.shape()))?;
                let sym = c.symmetric();
                let weights: Vec<usize> = (1..=3).map(|i| (1..=3).map(|j| sym.get(i, j)).sum()).collect();
                ensure(pt.weight() == weights, || format!("{family}: weight {:?} vs {weights:?}", pt.weight()))?;
                let back = littlewood_inverse(&v, &pt).map_err(|e| e.to_string())?;
                ensure(back == (c.clone(), None), || format!("{family} {v:?}: roundtrip failed on {:?}", c.rows()))?;
                images.insert(pt);
                total += 1;
            }
            ensure(images.len() == arrays.len(), || format!("{family}: not injective"))?;
        }
    }
    Ok(format!("{total} roundtrips over all pairings of the five variants"))
}

fn criterion_8() -> Check {
    let mut count = 0;
    for c in all_arrays(Family::All, 3, 2) {
        for rule in [RuleId::Row, RuleId::Col] {
            let v = LittlewoodVariant::with_rules(Family::All, rule, ProjVariant::Inherit(rule)).map_err(|e| e.to_string())?;
            let tri = build_triangular(&v, &c, None).map_err(|e| e.to_string())?;
            let full = build_growth(rule, &c.symmetric(), None).map_err(|e| e.to_string())?;
            for j in 0..=3 {
                for i in 0..=j {
                    ensure(tri.get(i, j) == full.get(i, j), || format!("{rule} {:?} at ({i},{j})", c.rows()))?;
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} triangular grids equal the upper half of the symmetric growth"))
}

fn criterion_9() -> Check {
    let a = mat(&[&[1, 0, 0], &[0, 0, 2], &[0, 1, 0]]);
    let borders = Borders {
        left: chain(&[&[2], &[2], &[3, 1], &[3, 2]], StepKind::Horizontal),
        top: chain(&[&[2], &[3], &[3, 1], &[4, 1]], StepKind::Horizontal),
    };
    let g = build_growth(RuleId::Row, &a, Some(&borders)).map_err(|e| e.to_string())?;
    ensure(g.get(3, 3) == &p(&[6, 3, 2, 1]), || format!("corner {}", g.get(3, 3)))?;
    let (pt, qt) = extract_pq(&g);
    let want_p = vec![vec![0, 0, 0, 0, 2, 2], vec![0, 1, 3], vec![2, 2], vec![3]];
    let want_q = vec![vec![0, 0, 0, 1, 2, 3], vec![0, 0, 3], vec![1, 3], vec![2]];
    ensure(pt.rows() == want_p, || format!("P = {:?}", pt.rows()))?;
    ensure(qt.rows() == want_q, || format!("Q = {:?}", qt.rows()))?;

    // The printed array has c_{2,4} = 1, but the displayed vertex sizes
    // force c_{2,4} = 0; the printed value would give a corner of 22 cells.
    let v = LittlewoodVariant::with_rules(Family::AsymMinus, RuleId::DualRow, ProjVariant::RowStar).map_err(|e| e.to_string())?;
    let c = TriangularArray::new(vec![vec![0, 1, 0, 0], vec![0, 0, 0], vec![2, 0], vec![0]], Family::AsymMinus).map_err(|e| e.to_string())?;
    let border = chain(&[&[3, 1], &[3, 2], &[3, 3, 1], &[4, 4, 1], &[5, 4, 1]], StepKind::Vertical);
    let tri = build_triangular(&v, &c, Some(&border)).map_err(|e| e.to_string())?;
    ensure(tri.get(4, 4) == &p(&[6, 5, 5, 3, 1]), || format!("triangular corner {}", tri.get(4, 4)))?;
    let pt = extract_p(&tri);
    let want = vec![vec![0, 0, 0, 0, 0, 3], vec![0, 0, 0, 0, 2], vec![0, 1, 2, 3, 3], vec![1, 2, 4], vec![3]];
    ensure(pt.rows() == want, || format!("triangular P = {:?}", pt.rows()))?;
    Ok("skew growth corner (6,3,2,1) with P, Q; skew dual triangular corner (6,5,5,3,1) with P (c_{2,4} = 0)".into())
}

fn column(a: &IntMatrix, j: usize) -> PositionMultiset {
    let mut m = PositionMultiset::new();
    for i in 1..=a.rows() {
        m.add(i, a.get(i, j));
    }
    m
}

fn criterion_10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut corpus = vec![mat(&[&[0, 1], &[1, 0], &[1, 1]])];
    for _ in 0..100 {
        corpus.push(IntMatrix::new((0..4).map(|_| (0..4).map(|_| rng.gen_range(0..=2)).collect()).collect()).unwrap());
    }
    let mut steps = 0;
    for a in &corpus {
        // dual rules run on the 0/1 reduction of the matrix
        let binary = IntMatrix::new(a.entries().iter().map(|r| r.iter().map(|x| x % 2).collect()).collect()).unwrap();
        for rule in RuleId::ALL {
            let a = if rule.is_dual() { &binary } else { a };
            let g = build_growth(rule, a, None).map_err(|e| e.to_string())?;
            let mut t = TableauChain::constant(Partition::empty(), a.rows(), StepKind::Horizontal);
            for j in 1..=a.cols() {
                let values = column(a, j);
                let order = match rule {
                    RuleId::Row => Some(InsertionOrder::Ascending),
                    RuleId::Col => Some(InsertionOrder::Descending),
                    _ => None,
                };
                if let Some(order) = order {
                    let ok = check_traceable(rule, &t, &values, order).map_err(|e| e.to_string())?;
                    ensure(ok, || format!("{rule} not traceable on {:?} column {j}", a.entries()))?;
                }
                t = insert(rule, &t, &values).map_err(|e| e.to_string())?;
                let col: Vec<Partition> = (0..=a.rows()).map(|i| g.get(i, j).clone()).collect();
                ensure(t.chain() == &col[..], || format!("{rule} insertion differs on {:?} column {j}", a.entries()))?;
                steps += 1;
            }
        }
    }
    Ok(format!("{} matrices, {steps} column insertions agree with the grids", corpus.len()))
}

fn main() {
    #[allow(clippy::type_complexity)]
    let criteria: [(&str, Duration, fn() -> Check); 10] = [
        ("RSK example", Duration::from_secs(1), criterion_1),
        ("growth enumeration", Duration::from_secs(5), criterion_2),
        ("squarefree Cauchy", Duration::from_secs(60), criterion_3),
        ("commutation laws", Duration::from_secs(120), criterion_4),
        ("projection laws", Duration::from_secs(120), criterion_5),
        ("truncated identities", Duration::from_secs(300), criterion_6),
        ("Littlewood roundtrips", Duration::from_secs(120), criterion_7),
        ("symmetric matrices", Duration::from_secs(60), criterion_8),
        ("skew examples", Duration::from_secs(1), criterion_9),
        ("insertion equivalence", Duration::from_secs(60), criterion_10),
    ];
    let mut failed = 0;
    for (idx, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(_) if elapsed > limit => ("FAIL", format!("took {elapsed:.2?}, limit {limit:?}")),
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {status} {name} [{elapsed:.2?}]: {detail}", idx + 1);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

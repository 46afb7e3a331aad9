//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero on any failure outside `KNOWN_UNATTAINABLE`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fricke::double::{
    f2_compose, f2_compose_projective, f2_p2_compose, f2_phi, f2_psi, negative_tree, nielsen, square_lift, F2Point,
    NielsenMove,
};
use fricke::fricke::{compose, compose_projective, p2_compose, phi, psi, star, FrickePoint, FrickeSurface};
use fricke::geometry::{frac, int, line_third_intersection, ProjectivePoint3, Rational, Slope, SurfaceId};
use fricke::sampling;
use fricke::sections::{
    cf_convergent, chebyshev_b_signed, chebyshev_matrix_power, DihedralMove, F2SectionFrame, QuadricSection,
    SectionFrame, SectionPoint, Translation,
};
use fricke::tree::{frobenius_scan, generate, Limit, TreeSurface};
use fricke::ComposeResult;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_2024;
const INSTANT: Duration = Duration::from_secs(2);

/// Criteria that cannot hold as literally stated; see the README.
const KNOWN_UNATTAINABLE: &[&str] = &["2a"];

struct Criterion {
    id: &'static str,
    name: &'static str,
    limit: Duration,
    check: fn() -> Result<String, String>,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: "1", name: "fricke composition example", limit: INSTANT, check: c1 },
        Criterion { id: "2a", name: "double composition printed value", limit: INSTANT, check: c2a },
        Criterion { id: "2b", name: "double composition value and squaring mismatch", limit: INSTANT, check: c2b },
        Criterion { id: "3", name: "negative tree chain", limit: INSTANT, check: c3 },
        Criterion {
            id: "4",
            name: "closed forms match the line/cubic oracle",
            limit: Duration::from_secs(10),
            check: c4,
        },
        Criterion { id: "5", name: "section group axioms", limit: Duration::from_secs(30), check: c5 },
        Criterion { id: "6", name: "section identities", limit: Duration::from_secs(5), check: c6 },
        Criterion { id: "7", name: "translation powers and matrix identity", limit: INSTANT, check: c7 },
        Criterion { id: "8", name: "orbit homomorphism", limit: Duration::from_secs(5), check: c8 },
        Criterion { id: "9", name: "squared-triple theorem to depth 8", limit: Duration::from_secs(5), check: c9 },
        Criterion { id: "10", name: "frobenius scan to 10^8", limit: Duration::from_secs(60), check: c10 },
        Criterion { id: "11", name: "convergents", limit: INSTANT, check: c11 },
        Criterion { id: "12", name: "star non-associativity witness", limit: Duration::from_secs(5), check: c12 },
        Criterion { id: "13", name: "transfer compatibility", limit: Duration::from_secs(10), check: c13 },
    ];
    let mut unexpected = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.check)();
        let elapsed = start.elapsed();
        let (pass, detail) = match outcome {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; took {elapsed:.2?}, limit {:?}", c.limit)),
            Err(d) => (false, d),
        };
        let status = if pass { "PASS" } else { "FAIL" };
        let known = !pass && KNOWN_UNATTAINABLE.contains(&c.id);
        let note = if known { " [known, documented]" } else { "" };
        println!("{status} {:>3} {} ({elapsed:.2?} / {:?}){note}: {detail}", c.id, c.name, c.limit);
        if !pass && !known {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fp(v: [i64; 3]) -> FrickePoint {
    FrickePoint::from_integers(v).expect("on surface")
}

fn f2p(v: [i64; 3]) -> F2Point {
    F2Point::from_integers(v).expect("on surface")
}

fn rats(v: [(i64, i64); 3]) -> [Rational; 3] {
    v.map(|(n, d)| frac(n, d))
}

fn c1() -> Result<String, String> {
    let r = compose(&fp([2, 1, 1]), &fp([1, 2, 5]));
    let expected = rats([(15, 4), (-3, 4), (-6, 1)]);
    ensure(r.clone().finite().map(|p| p.coords() == &expected).unwrap_or(false), || format!("got {r:?}"))?;
    Ok("(2,1,1)∘(1,2,5) = (15/4,-3/4,-6)".into())
}

fn c2a() -> Result<String, String> {
    let printed = rats([(361, 72), (-7, 24), (-28, 3)]);
    let r = f2_compose(&f2p([4, 1, 1]), &f2p([1, 4, 25])).finite().ok_or("not finite")?;
    let residual = SurfaceId::DoubleFricke.residual(&printed);
    ensure(r.coords() == &printed, || {
        format!("computed {r}; the printed (361/72,-7/24,-28/3) has surface residual {residual}")
    })?;
    Ok(format!("{r}"))
}

fn c2b() -> Result<String, String> {
    let (p, q) = (f2p([4, 1, 1]), f2p([1, 4, 25]));
    let r = f2_compose(&p, &q).finite().ok_or("not finite")?;
    let t = line_third_intersection(p.coords(), q.coords(), &SurfaceId::DoubleFricke).map_err(|e| e.to_string())?;
    ensure(&t.point(p.coords(), q.coords()) == r.coords(), || "closed form disagrees with oracle".into())?;
    ensure(r.coords() == &rats([(361, 72), (-1, 72), (-64, 9)]), || format!("got {r}"))?;
    let base = compose(&fp([2, 1, 1]), &fp([1, 2, 5])).finite().ok_or("not finite")?;
    let squared = square_lift(&base).map_err(|e| e.to_string())?;
    ensure(squared != r, || "squares commute with composition".into())?;
    Ok(format!("(4,1,1)∘̄(1,4,25) = {r} ≠ {squared}"))
}

fn c3() -> Result<String, String> {
    let tree = negative_tree(1, 4);
    for v in [[0, 1, -1], [-1, -9, 1], [1, -64, -9], [-9, 100, -1], [100, -8281, -9]] {
        let mut t = v.map(BigInt::from);
        t.sort();
        ensure(tree.contains(&t), || format!("missing {v:?}"))?;
    }
    Ok(format!("all five listed points among {} nodes", tree.len()))
}

fn c4() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut finite = 0;
    for _ in 0..500 {
        let (a, b) = sampling::distinct_pair(&mut rng, |r| sampling::fricke_point(r, 50));
        match compose(&a, &b) {
            ComposeResult::Finite(c) => {
                finite += 1;
                let t =
                    line_third_intersection(a.coords(), b.coords(), &SurfaceId::markov()).map_err(|e| e.to_string())?;
                ensure(&t.point(a.coords(), b.coords()) == c.coords(), || format!("oracle mismatch {a} {b}"))?;
                ensure(compose(&a, &c) == ComposeResult::Finite(b.clone()), || format!("triple identity {a} {b}"))?;
                ensure(compose(&b, &c) == ComposeResult::Finite(a.clone()), || format!("triple identity {a} {b}"))?;
            }
            other => {
                let p = compose_projective(&FrickeSurface::markov(), &a.to_projective(), &b.to_projective())
                    .map_err(|e| e.to_string())?;
                ensure(p == other, || format!("projective mismatch {a} {b}"))?;
            }
        }
    }
    for _ in 0..500 {
        let (a, b) = sampling::distinct_pair(&mut rng, |r| sampling::f2_point(r, 50));
        match f2_compose(&a, &b) {
            ComposeResult::Finite(c) => {
                finite += 1;
                let t = line_third_intersection(a.coords(), b.coords(), &SurfaceId::DoubleFricke)
                    .map_err(|e| e.to_string())?;
                ensure(&t.point(a.coords(), b.coords()) == c.coords(), || format!("oracle mismatch {a} {b}"))?;
                ensure(f2_compose(&a, &c) == ComposeResult::Finite(b.clone()), || format!("triple identity {a} {b}"))?;
                ensure(f2_compose(&b, &c) == ComposeResult::Finite(a.clone()), || format!("triple identity {a} {b}"))?;
            }
            other => {
                let p = f2_compose_projective(&a.to_projective(), &b.to_projective()).map_err(|e| e.to_string())?;
                ensure(p == other, || format!("projective mismatch {a} {b}"))?;
            }
        }
    }
    Ok(format!("1000 pairs, {finite} finite"))
}

fn fricke_frames() -> Vec<SectionFrame> {
    [(1, 1, 1), (1, 2, 5), (2, 5, 29)].iter().map(|&(m, n, k)| SectionFrame::from_integers(m, n, k).unwrap()).collect()
}

fn group_axioms<S: QuadricSection>(frame: &S, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let pts: Vec<SectionPoint> = (0..100).map(|_| sampling::section_point(frame, rng, 6)).collect();
    let add = |p: &SectionPoint, q: &SectionPoint| frame.add(p, q).map_err(|e| format!("{p} ⊕ {q}: {e}"));
    let o = frame.base();
    for i in 0..pts.len() {
        let (p, q, r) = (&pts[i], &pts[(i + 1) % pts.len()], &pts[(i + 2) % pts.len()]);
        ensure(&add(o, p)? == p, || format!("identity fails at {p}"))?;
        ensure(add(p, q)? == add(q, p)?, || format!("commutativity fails at {p}, {q}"))?;
        ensure(add(&add(p, q)?, r)? == add(p, &add(q, r)?)?, || format!("associativity fails at {p}, {q}, {r}"))?;
        let inv = frame.inverse(p).map_err(|e| e.to_string())?;
        ensure(&add(p, &inv)? == o, || format!("inverse fails at {p}"))?;
    }
    Ok(())
}

fn c5() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    for f in fricke_frames() {
        group_axioms(&f, &mut rng)?;
    }
    for (m, n, k) in [(1, 1, 1), (1, 4, 25)] {
        group_axioms(&F2SectionFrame::from_integers(m, n, k).unwrap(), &mut rng)?;
    }
    Ok("5 frames × 100 points".into())
}

fn c6() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    for f in fricke_frames() {
        let o = f.base().clone();
        let (m0, k0) = (o.x.clone(), o.z.clone());
        let add = |p: &SectionPoint, q: &SectionPoint| f.add(p, q).map_err(|e| e.to_string());
        let neg = SectionPoint::new(-&m0, -&k0);
        ensure(add(&neg, &neg)? == o, || "(-m0,-k0) is not of order 2".into())?;
        let co = f.dihedral(&o, DihedralMove::C);
        let ao = f.dihedral(&o, DihedralMove::A);
        ensure(f.point_from_slope(&Slope::Vertical).map_err(|e| e.to_string())? == ao, || "vertical chord".into())?;
        for _ in 0..50 {
            let p = sampling::section_point(&f, &mut rng, 6);
            let swapped = SectionPoint::new(p.z.clone(), p.x.clone());
            ensure(add(&p, &swapped)? == SectionPoint::new(k0.clone(), m0.clone()), || format!("swap fails at {p}"))?;
            ensure(add(&p, &f.dihedral(&p, DihedralMove::C))? == co, || format!("P ⊕ CP ≠ CO at {p}"))?;
            ensure(add(&p, &f.dihedral(&p, DihedralMove::A))? == ao, || format!("P ⊕ AP ≠ AO at {p}"))?;
        }
    }
    Ok("3 frames × 50 points".into())
}

/// Frames with `n₀ ∈ {1, 2, 5}`.
fn lemma_frames() -> Vec<SectionFrame> {
    [(1, 1, 1), (1, 2, 1), (1, 5, 2)].iter().map(|&(m, n, k)| SectionFrame::from_integers(m, n, k).unwrap()).collect()
}

fn c7() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    for f in lemma_frames() {
        let n0 = f.n0().clone();
        for start in [f.base().clone(), sampling::section_point(&f, &mut rng, 5)] {
            for family in [Translation::TA, Translation::TC] {
                let mut iterated = start.clone();
                for r in 1..=50u32 {
                    iterated = f.dihedral(&iterated, family.as_move());
                    ensure(f.ta_power(&start, r, family) == iterated, || {
                        format!("{family:?} power {r} at {start}, n0 = {n0}")
                    })?;
                }
            }
        }
        for r in 0..=50u32 {
            let b = |i: i64| chebyshev_b_signed(i, &n0).unwrap();
            let ri = i64::from(r);
            let expected = [[b(ri), -b(ri - 1)], [b(ri - 1), -b(ri - 2)]];
            ensure(chebyshev_matrix_power(&n0, r) == expected, || format!("matrix power {r}, n0 = {n0}"))?;
        }
    }
    Ok("r ≤ 50, n0 ∈ {1,2,5}".into())
}

fn c8() -> Result<String, String> {
    for f in lemma_frames() {
        for family in [Translation::TA, Translation::TC] {
            let orbit: Vec<SectionPoint> = (0..=20).map(|r| f.ta_power(f.base(), r, family)).collect();
            for a in 0..=10 {
                for b in 0..=10 {
                    let sum = f.add(&orbit[a], &orbit[b]).map_err(|e| e.to_string())?;
                    ensure(sum == orbit[a + b], || format!("P_{a} ⊕ P_{b} ≠ P_{} ({family:?})", a + b))?;
                    if a + b == 0 || a == 0 || b == 0 {
                        continue;
                    }
                    let chord = if a == b { f.tangent_slope(&orbit[a]) } else { slope(&orbit[a], &orbit[b]) };
                    ensure(chord == slope(f.base(), &orbit[a + b]), || format!("slope form fails at {a}, {b}"))?;
                }
            }
        }
    }
    Ok("0 ≤ a, b ≤ 10 on both orbits, 3 frames".into())
}

fn slope(p: &SectionPoint, q: &SectionPoint) -> Slope {
    Slope::through(&p.x, &p.z, &q.x, &q.z)
}

fn c9() -> Result<String, String> {
    let ones = [1, 1, 1].map(BigInt::from);
    let f = generate(TreeSurface::Fricke, ones.clone(), Limit::Depth(8)).map_err(|e| e.to_string())?;
    let f2 = generate(TreeSurface::DoubleFricke, ones, Limit::Depth(8)).map_err(|e| e.to_string())?;
    let mut squares: Vec<_> = f.iter().map(|n| n.triple.clone().map(|v| &v * &v)).collect();
    let mut double: Vec<_> = f2.iter().map(|n| n.triple.clone()).collect();
    squares.sort();
    double.sort();
    ensure(squares == double, || "sets differ".into())?;
    // the same set is reached through the Nielsen generators
    let root = f2p([1, 1, 1]);
    let mut frontier = vec![root.clone()];
    let mut seen = std::collections::BTreeSet::from([sorted(&root)]);
    for _ in 0..8 {
        let mut next = Vec::new();
        for p in &frontier {
            let [x, y, z] = p.coords().clone();
            for q in [
                F2Point::new([x.clone(), y.clone(), z.clone()]),
                F2Point::new([y.clone(), z.clone(), x.clone()]),
                F2Point::new([z, x, y]),
            ] {
                let q = q.map_err(|e| e.to_string())?;
                for g in [NielsenMove::First, NielsenMove::Second] {
                    let child = nielsen(&q, g);
                    if seen.insert(sorted(&child)) {
                        next.push(child);
                    }
                }
            }
        }
        frontier = next;
    }
    let nielsen_set: Vec<_> = seen.into_iter().collect();
    let double_rat: Vec<_> = double.iter().map(|t| t.clone().map(Rational::from_integer)).collect();
    ensure(nielsen_set.iter().all(|t| double_rat.contains(t)), || "Nielsen tree leaves the squared set".into())?;
    Ok(format!("{} triples", squares.len()))
}

fn sorted(p: &F2Point) -> [Rational; 3] {
    let mut c = p.coords().clone();
    c.sort();
    c
}

fn c10() -> Result<String, String> {
    let report = frobenius_scan(100_000_000);
    let dups = report.duplicates();
    ensure(dups.is_empty(), || format!("duplicate largest components: {dups:?}"))?;
    Ok(format!("{} triples, all largest components distinct", report.triple_count()))
}

fn c11() -> Result<String, String> {
    for n0 in [1, 2, 5] {
        let n0 = int(n0);
        let three_n0 = int(3) * &n0;
        let quality = |t: &Rational| (t * t - &three_n0 * t + Rational::one()).abs();
        let mut prev: Option<Rational> = None;
        for r in 1..=20u32 {
            let c = cf_convergent(&n0, r).map_err(|e| e.to_string())?;
            let next = cf_convergent(&n0, r + 1).map_err(|e| e.to_string())?;
            ensure(next == &three_n0 - c.recip(), || format!("ratio identity fails at r = {r}"))?;
            let q = quality(&c);
            ensure(!q.is_zero(), || format!("convergent {r} is a root"))?;
            if let Some(p) = &prev {
                ensure(q < *p, || format!("quality does not decrease at r = {r}"))?;
            }
            prev = Some(q);
        }
    }
    Ok("r ≤ 20, n0 ∈ {1,2,5}".into())
}

fn c12() -> Result<String, String> {
    let (a, b, c) = (fp([1, 1, 2]), fp([1, 2, 1]), fp([2, 1, 1]));
    let s = |p: &FrickePoint, q: &FrickePoint| {
        star(p, q).map_err(|e| e.to_string())?.finite().ok_or("star not finite".to_string())
    };
    let left = s(&s(&a, &b)?, &c)?;
    let right = s(&a, &s(&b, &c)?)?;
    ensure(left == fp([2, 1, 1]) && right == fp([1, 1, 2]), || format!("pinned witness changed: {left} vs {right}"))?;
    Ok(format!("({a} ⋆ {b}) ⋆ {c} = {left}, {a} ⋆ ({b} ⋆ {c}) = {right}"))
}

fn singular(p: &ProjectivePoint3) -> bool {
    p.coords()[..3].iter().all(Zero::is_zero)
}

fn c13() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 13);
    let surface = FrickeSurface::markov();
    let mut checked = 0;
    while checked < 100 {
        let (a, b) = sampling::distinct_pair(&mut rng, |r| sampling::p2_point(r, 12));
        let ComposeResult::Finite(r) = compose_projective(&surface, &phi(&a), &phi(&b))
            .map_err(|e| e.to_string())?
            .map(|p| p.to_projective())
            .or_infinite()
        else {
            continue;
        };
        let expected = psi(&r).map_err(|e| e.to_string())?;
        let got = p2_compose(&a, &b).map_err(|e| format!("{a} {b}: {e}"))?;
        ensure(got == expected, || format!("fricke transfer fails at {a}, {b}"))?;
        checked += 1;
    }
    let mut checked2 = 0;
    while checked2 < 100 {
        let (a, b) = sampling::distinct_pair(&mut rng, |r| sampling::p2_point(r, 12));
        let (Ok(pa), Ok(pb)) = (f2_phi(&a), f2_phi(&b)) else { continue };
        if singular(&pa) || singular(&pb) {
            continue;
        }
        let ComposeResult::Finite(r) =
            f2_compose_projective(&pa, &pb).map_err(|e| e.to_string())?.map(|p| p.to_projective()).or_infinite()
        else {
            continue;
        };
        let Ok(expected) = f2_psi(&r) else { continue };
        let got = f2_p2_compose(&a, &b).map_err(|e| format!("{a} {b}: {e}"))?;
        ensure(got == expected, || format!("double transfer fails at {a}, {b}"))?;
        checked2 += 1;
    }
    Ok("100 pairs per surface".into())
}

/// Folds points at infinity into the finite branch as projective points.
trait OrInfinite {
    fn or_infinite(self) -> ComposeResult<ProjectivePoint3>;
}

impl OrInfinite for ComposeResult<ProjectivePoint3> {
    fn or_infinite(self) -> ComposeResult<ProjectivePoint3> {
        match self {
            ComposeResult::Infinite(p) => ComposeResult::Finite(p),
            other => other,
        }
    }
}

//! Seeded randomized property checks.

use fricke::double::{f2_compose, f2_compose_projective, f2_p2_compose, f2_phi, f2_psi};
use fricke::fricke::{compose, compose_projective, p2_compose, phi, psi, FrickeSurface};
use fricke::geometry::{line_third_intersection, ProjectivePoint3, SurfaceId};
use fricke::sampling;
use fricke::sections::{F2SectionFrame, QuadricSection, SectionFrame, Translation};
use fricke::ComposeResult;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::render::Output;

struct Tally {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

pub fn run(seed: u64, cases: usize) -> Output {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tallies = [
        compose_oracle(&mut rng, cases),
        double_compose_oracle(&mut rng, cases),
        section_axioms(&mut rng, cases),
        translation_powers(&mut rng, cases),
        transfers(&mut rng, cases),
    ];
    let failed = tallies.iter().any(|t| !t.failures.is_empty());
    let checks: Vec<_> =
        tallies.iter().map(|t| json!({ "name": t.name, "cases": t.cases, "failures": t.failures })).collect();
    let plain = tallies
        .iter()
        .map(|t| {
            let status = if t.failures.is_empty() { "ok" } else { "FAILED" };
            format!("{status} {} ({} cases, {} failures)", t.name, t.cases, t.failures.len())
        })
        .collect::<Vec<_>>()
        .join("\n");
    Output::json_and_plain(json!({ "result": { "seed": seed, "passed": !failed, "checks": checks } }), plain)
        .failed(failed)
}

fn compose_oracle(rng: &mut ChaCha8Rng, cases: usize) -> Tally {
    let mut t = Tally::new("fricke-compose-oracle");
    for _ in 0..cases {
        let (a, b) = sampling::distinct_pair(rng, |r| sampling::fricke_point(r, 50));
        match compose(&a, &b) {
            ComposeResult::Finite(c) => {
                let line = line_third_intersection(a.coords(), b.coords(), &SurfaceId::markov());
                let ok = line.map(|l| &l.point(a.coords(), b.coords()) == c.coords()).unwrap_or(false)
                    && compose(&a, &c) == ComposeResult::Finite(b.clone());
                t.record(ok, || format!("{a} {b}"));
            }
            other => {
                let p = compose_projective(&FrickeSurface::markov(), &a.to_projective(), &b.to_projective());
                t.record(p.map(|p| p == other).unwrap_or(false), || format!("{a} {b}"));
            }
        }
    }
    t
}

fn double_compose_oracle(rng: &mut ChaCha8Rng, cases: usize) -> Tally {
    let mut t = Tally::new("double-fricke-compose-oracle");
    for _ in 0..cases {
        let (a, b) = sampling::distinct_pair(rng, |r| sampling::f2_point(r, 50));
        match f2_compose(&a, &b) {
            ComposeResult::Finite(c) => {
                let line = line_third_intersection(a.coords(), b.coords(), &SurfaceId::DoubleFricke);
                let ok = line.map(|l| &l.point(a.coords(), b.coords()) == c.coords()).unwrap_or(false)
                    && f2_compose(&a, &c) == ComposeResult::Finite(b.clone());
                t.record(ok, || format!("{a} {b}"));
            }
            other => {
                let p = f2_compose_projective(&a.to_projective(), &b.to_projective());
                t.record(p.map(|p| p == other).unwrap_or(false), || format!("{a} {b}"));
            }
        }
    }
    t
}

fn axioms_on(frame: &dyn QuadricSection, rng: &mut ChaCha8Rng, cases: usize, t: &mut Tally) {
    for _ in 0..cases {
        let p = sampling::section_point(frame, rng, 6);
        let q = sampling::section_point(frame, rng, 6);
        let r = sampling::section_point(frame, rng, 6);
        let ok = (|| -> fricke::Result<bool> {
            let o = frame.base();
            let assoc = frame.add(&frame.add(&p, &q)?, &r)? == frame.add(&p, &frame.add(&q, &r)?)?;
            let comm = frame.add(&p, &q)? == frame.add(&q, &p)?;
            let ident = frame.add(o, &p)? == p;
            let inv = &frame.add(&p, &frame.inverse(&p)?)? == o;
            Ok(assoc && comm && ident && inv)
        })()
        .unwrap_or(false);
        t.record(ok, || format!("n0 = {}: {p} {q} {r}", frame.n0()));
    }
}

fn section_axioms(rng: &mut ChaCha8Rng, cases: usize) -> Tally {
    let mut t = Tally::new("section-group-axioms");
    for (m, n, k) in [(1, 1, 1), (1, 2, 5), (2, 5, 29)] {
        axioms_on(&SectionFrame::from_integers(m, n, k).expect("Markov triple"), rng, cases, &mut t);
    }
    for (m, n, k) in [(1, 1, 1), (1, 4, 25)] {
        axioms_on(&F2SectionFrame::from_integers(m, n, k).expect("squared triple"), rng, cases, &mut t);
    }
    t
}

fn translation_powers(rng: &mut ChaCha8Rng, cases: usize) -> Tally {
    let mut t = Tally::new("translation-powers");
    for (m, n, k) in [(1, 1, 1), (1, 2, 1), (1, 5, 2)] {
        let frame = SectionFrame::from_integers(m, n, k).expect("Markov triple");
        for _ in 0..cases {
            let p = sampling::section_point(&frame, rng, 5);
            for family in [Translation::TA, Translation::TC] {
                let mut iterated = p.clone();
                let mut ok = true;
                for r in 1..=20 {
                    iterated = frame.dihedral(&iterated, family.as_move());
                    ok &= frame.ta_power(&p, r, family) == iterated;
                }
                t.record(ok, || format!("{family:?} at {p}"));
            }
        }
    }
    t
}

fn singular(p: &ProjectivePoint3) -> bool {
    p.coords()[..3].iter().all(|c| c == &0.into())
}

fn transfers(rng: &mut ChaCha8Rng, cases: usize) -> Tally {
    let mut t = Tally::new("p2-transfer");
    let surface = FrickeSurface::markov();
    let mut done = 0;
    while done < cases {
        let (a, b) = sampling::distinct_pair(rng, |r| sampling::p2_point(r, 12));
        let third = match compose_projective(&surface, &phi(&a), &phi(&b)) {
            Ok(ComposeResult::Finite(p)) => p.to_projective(),
            Ok(ComposeResult::Infinite(p)) => p,
            _ => continue,
        };
        done += 1;
        let ok = matches!((psi(&third), p2_compose(&a, &b)), (Ok(x), Ok(y)) if x == y);
        t.record(ok, || format!("fricke {a} {b}"));
    }
    let mut done = 0;
    while done < cases {
        let (a, b) = sampling::distinct_pair(rng, |r| sampling::p2_point(r, 12));
        let (Ok(pa), Ok(pb)) = (f2_phi(&a), f2_phi(&b)) else { continue };
        if singular(&pa) || singular(&pb) {
            continue;
        }
        let third = match f2_compose_projective(&pa, &pb) {
            Ok(ComposeResult::Finite(p)) => p.to_projective(),
            Ok(ComposeResult::Infinite(p)) => p,
            _ => continue,
        };
        let Ok(expected) = f2_psi(&third) else { continue };
        done += 1;
        t.record(f2_p2_compose(&a, &b).map(|x| x == expected).unwrap_or(false), || format!("double {a} {b}"));
    }
    t
}

//! Batch verification suites. Every suite walks its cases in a fixed order,
//! so a report depends only on the suite, the bounds and the seed.

use std::fmt::Debug;
use std::time::Instant;

use serde::Serialize;
use taquin::family::{
    all_words, count_vectors, for_each_skew_tableau, p_tableaux, partitions_up_to,
    random_skew_tableaux, reverse_lattice_words, FamilyBounds,
};
use taquin::semiring::{
    local_step_generic, random_lax_instance, verify_exchange_tropical,
    verify_factorization_tropical, verify_lax_rational, MinPlus,
};
use taquin::tableau::corners;
use taquin::wmatrix::{compute_f_window, q_from_f, verify_udkp_tableaux};
use taquin::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Golden,
    Roundtrip,
    SlideEquivalence,
    Udkp,
    Commute,
    Uniqueness,
    Semiring,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Golden => "golden",
            Suite::Roundtrip => "roundtrip",
            Suite::SlideEquivalence => "slide-equivalence",
            Suite::Udkp => "udkp",
            Suite::Commute => "commute",
            Suite::Uniqueness => "uniqueness",
            Suite::Semiring => "semiring",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
    pub location: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub seed: u64,
    /// Seconds.
    pub wall_time: f64,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Collects case counts and failures for one suite.
#[derive(Debug, Default)]
pub struct Run {
    pub cases: u64,
    pub failures: Vec<Failure>,
}

impl Run {
    /// Records one case. Strings are only built on failure.
    pub fn check(
        &mut self,
        ok: bool,
        case: impl FnOnce() -> String,
        location: &str,
        detail: impl FnOnce() -> (String, String),
    ) {
        self.cases += 1;
        if !ok {
            let (expected, actual) = detail();
            self.failures.push(Failure {
                case: case(),
                expected,
                actual,
                location: location.to_string(),
            });
        }
    }

    pub fn eq<T: PartialEq + Debug>(&mut self, case: &str, location: &str, actual: T, expected: T) {
        let ok = actual == expected;
        self.check(
            ok,
            || case.to_string(),
            location,
            || (format!("{expected:?}"), format!("{actual:?}")),
        );
    }

    pub fn error(&mut self, case: impl Into<String>, location: &str, err: impl std::fmt::Display) {
        self.cases += 1;
        self.failures.push(Failure {
            case: case.into(),
            expected: "success".into(),
            actual: err.to_string(),
            location: location.to_string(),
        });
    }

    fn absorb(&mut self, prefix: &str, other: Run) {
        self.cases += other.cases;
        self.failures
            .extend(other.failures.into_iter().map(|mut f| {
                f.case = format!("{prefix}/{}", f.case);
                f
            }));
    }
}

/// Bounds shared by the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub max_boxes: usize,
    pub seed: u64,
}

impl Params {
    /// Skew tableaux with at most `max_boxes` boxes, entries at most 4 and an
    /// inner shape of size at most 5.
    pub fn family(&self) -> FamilyBounds {
        FamilyBounds {
            max_boxes: self.max_boxes,
            max_entry: self.max_boxes.clamp(1, 4) as Entry,
            max_inner: self.max_boxes.min(5),
        }
    }

    /// Seeded tableaux with larger entries and inner shapes.
    pub fn random(&self) -> Vec<SkewTableau> {
        let bounds = FamilyBounds {
            max_boxes: self.max_boxes,
            max_entry: 5,
            max_inner: 6,
        };
        random_skew_tableaux(self.seed, RANDOM_CASES, bounds)
    }
}

pub const RANDOM_CASES: usize = 200;

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).unwrap_or_else(|e| format!("<{e}>"))
}

pub fn run_suite(suite: Suite, params: Params) -> RunReport {
    let start = Instant::now();
    let run = match suite {
        Suite::All => {
            let mut all = Run::default();
            for s in [
                Suite::Golden,
                Suite::Roundtrip,
                Suite::SlideEquivalence,
                Suite::Udkp,
                Suite::Commute,
                Suite::Uniqueness,
                Suite::Semiring,
            ] {
                all.absorb(s.name(), run_one(s, params));
            }
            all
        }
        s => run_one(s, params),
    };
    RunReport {
        suite: suite.name().to_string(),
        cases: run.cases,
        failures: run.failures,
        seed: params.seed,
        wall_time: start.elapsed().as_secs_f64(),
    }
}

fn run_one(suite: Suite, params: Params) -> Run {
    let mut run = Run::default();
    match suite {
        Suite::Golden => crate::golden::replay(&mut run),
        Suite::Roundtrip => each_tableau(params, |t| roundtrip(&mut run, t)),
        Suite::SlideEquivalence => each_tableau(params, |t| slide_equivalence(&mut run, t)),
        Suite::Udkp => each_tableau(params, |t| udkp(&mut run, t)),
        Suite::Commute => for_each_skew_tableau(params.family(), |t| commute(&mut run, t)),
        Suite::Uniqueness => uniqueness(&mut run, params),
        Suite::Semiring => semiring(&mut run, params),
        Suite::All => unreachable!("expanded by run_suite"),
    }
    run
}

fn each_tableau(params: Params, mut f: impl FnMut(&SkewTableau)) {
    for_each_skew_tableau(params.family(), &mut f);
    for t in params.random() {
        f(&t);
    }
}

pub fn roundtrip(run: &mut Run, t: &SkewTableau) {
    let w = encode_w(t);
    match decode_w(&w) {
        Ok(back) => run.check(
            back == *t,
            || json(t),
            "decode_w",
            || (json(t), json(&back)),
        ),
        Err(e) => run.error(json(t), "decode_w", e),
    }
}

pub fn slide_equivalence(run: &mut Run, t: &SkewTableau) {
    let w = encode_w(t);
    for corner in corners(t.shape()).0 {
        let case = || format!("{} row {}", json(t), corner.row);
        let classical = match jdt_slide(t, corner) {
            Ok(r) => r,
            Err(e) => {
                run.error(case(), "jdt_slide", e);
                continue;
            }
        };
        let (plus, q) = match phi_k(&w, corner.row) {
            Ok(r) => r,
            Err(e) => {
                run.error(case(), "phi_k", e);
                continue;
            }
        };
        match decode_w(&plus) {
            Ok(slid) => run.check(slid == classical.tableau, case, "phi_k", || {
                (json(&classical.tableau), json(&slid))
            }),
            Err(e) => run.error(case(), "decode_w", e),
        }
        run.check(
            q.exit_row() == classical.exit_row,
            case,
            "QPath::exit_row",
            || (classical.exit_row.to_string(), q.exit_row().to_string()),
        );
        let (r, c) = (t.num_rows(), t.max_entry() as usize + 2);
        let from_f = q_from_f(
            &compute_f_window(t, r, c),
            &compute_f_window(&classical.tableau, r, c),
        );
        let path: Vec<Vec<i64>> = q
            .window(r, c)
            .iter()
            .map(|row| row.iter().map(|&v| v as i64).collect())
            .collect();
        run.check(path == from_f, case, "q_from_f", || {
            (format!("{from_f:?}"), format!("{path:?}"))
        });
    }
}

pub fn udkp(run: &mut Run, t: &SkewTableau) {
    for corner in corners(t.shape()).0 {
        let case = || format!("{} row {}", json(t), corner.row);
        match jdt_slide(t, corner) {
            Ok(r) => {
                let report = verify_udkp_tableaux(t, &r.tableau);
                run.check(report.passed(), case, "verify_udkp", || {
                    ("no violations".into(), format!("{:?}", report.violations))
                });
            }
            Err(e) => run.error(case(), "jdt_slide", e),
        }
    }
}

pub fn commute(run: &mut Run, t: &SkewTableau) {
    let orders = match enumerate_standard_tableaux(t.inner(), usize::MAX) {
        Ok(o) => o,
        Err(e) => return run.error(json(t), "enumerate_standard_tableaux", e),
    };
    for order in &orders {
        let case = || format!("{} order {}", json(t), json(order));
        match verify_commute(t, order) {
            Ok(r) => run.check(r.passed(), case, "verify_commute", || {
                ("commuting square".into(), r.mismatches.join("; "))
            }),
            Err(e) => run.error(case(), "verify_commute", e),
        }
    }
}

pub fn uniqueness(run: &mut Run, params: Params) {
    for mu in partitions_up_to(params.max_boxes) {
        match check_uniqueness_shape(&mu, usize::MAX) {
            Ok(r) => run.check(
                r.passed(),
                || format!("shape {mu}"),
                "check_uniqueness_shape",
                || (json(&uniform_tableau(&mu)), json(&r.failures)),
            ),
            Err(e) => run.error(format!("shape {mu}"), "check_uniqueness_shape", e),
        }
    }
    for w in reverse_lattice_words(params.max_boxes, 4) {
        let mut lambda = vec![0usize; 4];
        for &a in w.letters() {
            lambda[a as usize - 1] += 1;
        }
        let expected =
            uniform_tableau(&Partition::new(lambda).expect("lattice words have partition content"));
        let got = insert_word(&w);
        run.check(
            got == expected,
            || format!("word {w}"),
            "insert_word",
            || (json(&expected), json(&got)),
        );
    }
}

pub fn semiring(run: &mut Run, params: Params) {
    const N: usize = 6;
    for seed in params.seed..params.seed + 100 {
        let (i, v) = random_lax_instance(seed, N);
        match verify_lax_rational(&i, &v, N) {
            Ok(r) => run.check(
                r.passed(),
                || format!("lax seed {seed}"),
                "verify_lax",
                || ("no violations".into(), format!("{:?}", r.violations)),
            ),
            Err(e) => run.error(format!("lax seed {seed}"), "verify_lax", e),
        }
    }
    let len = params.max_boxes.min(5);
    for w in all_words(len, 3).into_iter().filter(|w| !w.is_empty()) {
        match verify_factorization_tropical(w.letters(), 8) {
            Ok(r) => run.check(
                r.passed(),
                || format!("word {w}"),
                "verify_factorization",
                || {
                    (
                        "no violations".into(),
                        format!("{:?}", r.identity.violations),
                    )
                },
            ),
            Err(e) => run.error(format!("word {w}"), "verify_factorization", e),
        }
    }
    let ws = count_vectors(4, params.max_boxes.min(5) as u64);
    for p in p_tableaux(params.max_boxes.min(5), 4) {
        for w in &ws {
            let case = || format!("P {p} W {w}");
            match verify_exchange_tropical(&p, w, 8) {
                Ok(r) => run.check(r.passed(), case, "verify_exchange", || {
                    (
                        "no violations".into(),
                        format!("{:?}", r.identity.violations),
                    )
                }),
                Err(e) => run.error(case(), "verify_exchange", e),
            }
        }
    }
    // The kicker-and-ball step against the generic min-plus step.
    let vs = count_vectors(4, params.max_boxes.min(4) as u64);
    for p in &vs {
        for w in &vs {
            let case = || format!("P {p} W {w}");
            let direct = match kicker_ball_step(p, w) {
                Ok(r) => r,
                Err(e) => {
                    run.error(case(), "kicker_ball_step", e);
                    continue;
                }
            };
            run.check(
                direct.0.total() == p.total(),
                case,
                "kicker_ball_step",
                || (p.total().to_string(), direct.0.total().to_string()),
            );
            let pad = |v: &CountVector| {
                v.padded(6)
                    .iter()
                    .map(|&x| MinPlus::Finite(x as i64))
                    .collect::<Vec<_>>()
            };
            match local_step_generic(&pad(p), &pad(w)) {
                Ok((gp, gw)) => {
                    let back = |v: &[MinPlus]| {
                        CountVector::from(
                            v.iter()
                                .map(|x| x.finite().unwrap_or(-1) as u64)
                                .collect::<Vec<_>>(),
                        )
                    };
                    let generic = (back(&gp), back(&gw));
                    run.check(generic == direct, case, "local_step_generic", || {
                        (format!("{direct:?}"), format!("{generic:?}"))
                    });
                }
                Err(e) => run.error(case(), "local_step_generic", e),
            }
        }
    }
}

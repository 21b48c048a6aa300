//! Replays the worked examples: slides, height grids, path grids, arrow
//! diagrams, rectification orders, the column chain and kicker-and-ball
//! frames.

use taquin::jdt::slide_filling;
use taquin::rectify::render_frame;
use taquin::semiring::{local_step_generic, MinPlus};
use taquin::tableau::corners;
use taquin::wmatrix::{compute_f_window, q_from_f, verify_udkp_tableaux};
use taquin::*;

use crate::suites::Run;

fn skew(outer: &[usize], inner: &[usize], rows: &[&[Entry]]) -> SkewTableau {
    let shape = SkewShape::new(
        Partition::new(outer.to_vec()).expect("literal partition"),
        Partition::new(inner.to_vec()).expect("literal partition"),
    )
    .expect("literal shape");
    SkewTableau::new(shape, rows.iter().map(|r| r.to_vec()).collect()).expect("literal tableau")
}

fn straight(rows: &[&[Entry]]) -> SkewTableau {
    SkewTableau::straight(rows.iter().map(|r| r.to_vec()).collect()).expect("literal tableau")
}

fn standard(rows: &[&[Entry]]) -> StandardTableau {
    StandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect())
        .expect("literal standard tableau")
}

fn ptab(rows: &[&[Entry]]) -> PTableauCounts {
    PTableauCounts::from_tableau(&straight(rows)).expect("straight literal")
}

fn cv(v: &[u64]) -> CountVector {
    CountVector::from(v)
}

fn grid(rows: &[&[u64]]) -> Vec<Vec<u64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn bits(rows: &[&[u8]]) -> Vec<Vec<u8>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

pub fn replay(run: &mut Run) {
    kp_sequence(run);
    path_window(run);
    worked_slide(run);
    filling_and_bumping(run);
    running_example(run);
    kicker_ball(run);
}

/// Three slides of a small skew tableau and their height grids.
fn kp_sequence(run: &mut Run) {
    let s = [
        skew(&[3, 3, 2], &[2, 1], &[&[1], &[2, 2], &[3, 3]]),
        skew(&[3, 2, 2], &[1, 1], &[&[1, 2], &[2], &[3, 3]]),
        skew(&[3, 2, 1], &[1], &[&[1, 2], &[2, 3], &[3]]),
        straight(&[&[1, 2], &[2, 3], &[3]]),
    ];
    run.eq(
        "S0 inside corners",
        "corners",
        corners(s[0].shape()).0,
        vec![Cell::new(1, 2), Cell::new(2, 1)],
    );
    let slide_corners = [Cell::new(1, 2), Cell::new(2, 1), Cell::new(1, 1)];
    for t in 0..3 {
        let got = jdt_slide(&s[t], slide_corners[t])
            .map(|r| r.tableau)
            .map_err(|e| e.to_string());
        run.eq(
            &format!("S{t} slide"),
            "jdt_slide",
            got,
            Ok(s[t + 1].clone()),
        );
    }
    let f = [
        grid(&[&[2, 3, 3, 3], &[3, 4, 6, 6], &[3, 4, 6, 8]]),
        grid(&[&[1, 2, 3, 3], &[2, 3, 5, 5], &[2, 3, 5, 7]]),
        grid(&[&[1, 2, 3, 3], &[1, 2, 4, 5], &[1, 2, 4, 6]]),
        grid(&[&[0, 1, 2, 2], &[0, 1, 3, 4], &[0, 1, 3, 5]]),
    ];
    for t in 0..4 {
        run.eq(
            &format!("F{t}"),
            "compute_f",
            compute_f(&s[t]).window(3, 4),
            f[t].clone(),
        );
    }
    let w = [
        grid(&[&[1, 0, 0, 0], &[1, 1, 1, 1], &[0, 0, 0, 2]]),
        grid(&[&[0, 0, 1, 1], &[1, 1, 0, 0], &[0, 0, 0, 2]]),
        grid(&[&[1, 1, 1, 1], &[0, 0, 0, 1], &[0, 0, 0, 1]]),
    ];
    let q = [
        bits(&[&[1, 1, 0, 0], &[0, 0, 1, 1], &[0, 0, 0, 0]]),
        bits(&[&[0, 0, 0, 0], &[1, 1, 1, 0], &[0, 0, 0, 1]]),
        bits(&[&[1, 1, 1, 1], &[0, 0, 0, 0], &[0, 0, 0, 0]]),
    ];
    for t in 0..3 {
        run.eq(
            &format!("W{t}"),
            "encode_w",
            encode_w(&s[t]).window(3, 4),
            w[t].clone(),
        );
        let from_f = q_from_f(
            &compute_f_window(&s[t], 3, 4),
            &compute_f_window(&s[t + 1], 3, 4),
        );
        let from_f: Vec<Vec<u8>> = from_f
            .iter()
            .map(|r| r.iter().map(|&v| v as u8).collect())
            .collect();
        run.eq(&format!("Q{t} from F"), "q_from_f", from_f, q[t].clone());
        let report = verify_udkp_tableaux(&s[t], &s[t + 1]);
        run.check(
            report.passed(),
            || format!("F{t} to F{}", t + 1),
            "verify_udkp",
            || ("no violations".into(), format!("{:?}", report.violations)),
        );
    }
    match run_slides(&encode_w(&s[0]), &[1, 2, 1]) {
        Ok(trace) => {
            for (t, step) in trace.steps().iter().enumerate() {
                run.eq(
                    &format!("Q{t} path"),
                    "phi_k",
                    step.q.window(3, 4),
                    q[t].clone(),
                );
                let decoded = decode_w(&step.w).map_err(|e| e.to_string());
                run.eq(
                    &format!("S{} decoded", t + 1),
                    "decode_w",
                    decoded,
                    Ok(s[t + 1].clone()),
                );
            }
        }
        Err(e) => run.error("slides on W0", "run_slides", e),
    }
    let rect = rectify_classical(&s[0], &StandardTableau::row_reading(s[0].inner())).map(|r| r.0);
    run.eq(
        "S0 row-reading rectification",
        "rectify_classical",
        rect.map_err(|e| e.to_string()),
        Ok(s[3].clone()),
    );
}

/// Three slides from a matrix given on a 4 x 6 window.
fn path_window(run: &mut Run) {
    let w0 = WMatrix::from_rows(grid(&[
        &[1, 1, 0, 0, 0, 0],
        &[1, 1, 2, 2, 1, 1],
        &[0, 0, 0, 0, 1, 2],
        &[0; 6],
    ]))
    .expect("literal matrix");
    let w = [
        grid(&[
            &[0, 0, 0, 1, 1, 1],
            &[1, 1, 2, 1, 0, 0],
            &[0, 0, 0, 0, 1, 2],
            &[0; 6],
        ]),
        grid(&[
            &[1, 1, 1, 2, 1, 1],
            &[0, 0, 1, 0, 0, 1],
            &[0, 0, 0, 0, 1, 1],
            &[0; 6],
        ]),
    ];
    let q = [
        bits(&[&[1, 1, 1, 0, 0, 0], &[0, 0, 0, 1, 1, 1], &[0; 6], &[0; 6]]),
        bits(&[&[0; 6], &[1, 1, 1, 1, 1, 0], &[0, 0, 0, 0, 0, 1], &[0; 6]]),
        bits(&[&[1; 6], &[0; 6], &[0; 6], &[0; 6]]),
    ];
    let arrows = [
        "1→ 1→ 0↘ 0  0  0\n1  1  2  2→ 1→ 1\n0  0  0  0  1  2\n0  0  0  0  0  0\n",
        "0  0  0  1  1  1\n1→ 1→ 2→ 1→ 0↘ 0\n0  0  0  0  1  2\n0  0  0  0  0  0\n",
        "1→ 1→ 1→ 2→ 1→ 1\n0  0  1  0  0  1\n0  0  0  0  1  1\n0  0  0  0  0  0\n",
    ];
    let trace = match run_slides(&w0, &[1, 2, 1]) {
        Ok(t) => t,
        Err(e) => return run.error("window", "run_slides", e),
    };
    for (t, (before, step)) in trace.transitions().enumerate() {
        run.eq(
            &format!("window Q{t}"),
            "phi_k",
            step.q.window(4, 6),
            q[t].clone(),
        );
        if t < 2 {
            run.eq(
                &format!("window W{}", t + 1),
                "phi_k",
                step.w.window(4, 6),
                w[t].clone(),
            );
        }
        run.eq(
            &format!("window arrows {t}"),
            "render_path",
            render_path(before, &step.q, 4, 6),
            arrows[t].to_string(),
        );
    }
}

/// A single slide from row 1 with its arrow diagram.
fn worked_slide(run: &mut Run) {
    let t = skew(&[4, 4, 3], &[2], &[&[1, 2], &[1, 1, 3, 5], &[3, 4, 4]]);
    let w = encode_w(&t);
    run.eq(
        "worked W",
        "encode_w",
        w.window(3, 6),
        grid(&[
            &[0, 1, 1, 1, 0, 0],
            &[0, 2, 1, 0, 0, 1],
            &[0, 0, 0, 1, 3, 3],
        ]),
    );
    let (plus, q) = match phi_k(&w, 1) {
        Ok(r) => r,
        Err(e) => return run.error("worked slide", "phi_k", e),
    };
    run.eq(
        "worked Q",
        "phi_k",
        q.window(3, 6),
        bits(&[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 0, 1, 1],
        ]),
    );
    run.eq(
        "worked W+",
        "phi_k",
        plus.window(3, 6),
        grid(&[
            &[0, 2, 2, 1, 0, 0],
            &[0, 1, 0, 0, 1, 2],
            &[0, 0, 0, 1, 2, 2],
        ]),
    );
    run.eq(
        "worked arrows",
        "render_path",
        render_path(&w, &q, 3, 6),
        "0↘ 1  1  1  0  0\n0  2→ 1→ 0↘ 0  1\n0  0  0  1  3→ 3\n".to_string(),
    );
    let expected = skew(&[4, 4, 2], &[1], &[&[1, 1, 2], &[1, 3, 4, 5], &[3, 4]]);
    run.eq(
        "worked decode",
        "decode_w",
        decode_w(&plus).map_err(|e| e.to_string()),
        Ok(expected.clone()),
    );
    let classical = jdt_slide(&t, Cell::new(1, 2))
        .map(|r| r.tableau)
        .map_err(|e| e.to_string());
    run.eq("worked classical", "jdt_slide", classical, Ok(expected));
}

/// A slide on a filling whose columns are not strict, and one bumping path.
fn filling_and_bumping(run: &mut Run) {
    let shape = SkewShape::new(
        Partition::new(vec![4, 4, 4, 3]).expect("literal partition"),
        Partition::new(vec![2, 2]).expect("literal partition"),
    )
    .expect("literal shape");
    let rows = vec![vec![1, 3], vec![2, 3], vec![1, 2, 3, 4], vec![2, 4, 5]];
    match slide_filling(&shape, &rows, Cell::new(2, 2)) {
        Ok(r) => {
            run.eq(
                "filling rows",
                "slide_filling",
                r.rows,
                vec![vec![1, 3], vec![2, 2, 3], vec![1, 3, 4], vec![2, 4, 5]],
            );
            run.eq("filling exit row", "slide_filling", r.exit_row, 3);
            run.eq(
                "filling hole path",
                "slide_filling",
                r.hole_trajectory,
                vec![
                    Cell::new(2, 2),
                    Cell::new(3, 2),
                    Cell::new(3, 3),
                    Cell::new(3, 4),
                ],
            );
        }
        Err(e) => run.error("filling slide", "slide_filling", e),
    }
    let t = straight(&[&[1, 3, 4, 5], &[2, 4, 6, 6], &[4, 5], &[6]]);
    match row_insert(&t, 3) {
        Ok((r, path)) => {
            run.eq(
                "bumping result",
                "row_insert",
                r,
                straight(&[&[1, 3, 3, 5], &[2, 4, 4, 6], &[4, 5, 6], &[6]]),
            );
            run.eq(
                "bumping path",
                "row_insert",
                path,
                vec![Cell::new(1, 3), Cell::new(2, 3), Cell::new(3, 3)],
            );
        }
        Err(e) => run.error("bumping", "row_insert", e),
    }
}

/// Rectification of one skew tableau along each of its three orders.
fn running_example(run: &mut Run) {
    let t = skew(&[5, 4, 2], &[3, 1], &[&[1, 2], &[1, 2, 3], &[1, 2]]);
    let rectified = straight(&[&[1, 1, 1, 2], &[2, 2, 3]]);
    let w = encode_w(&t);
    run.eq(
        "running W",
        "encode_w",
        w.window(3, 4),
        grid(&[&[1, 1, 1, 1], &[0, 0, 1, 2], &[0, 1, 2, 2]]),
    );
    let orders = [
        (standard(&[&[1, 2, 3], &[4]]), vec![2, 1, 1, 1]),
        (standard(&[&[1, 2, 4], &[3]]), vec![1, 2, 1, 1]),
        (standard(&[&[1, 3, 4], &[2]]), vec![1, 1, 2, 1]),
    ];
    let expected_p = ptab(&[&[1, 1, 1], &[2]]);
    let expected_bottom = (ptab(&[&[1, 2, 3], &[3]]), encode_w(&rectified));
    for (order, word) in &orders {
        let case = format!("order {order}");
        run.eq(
            &case,
            "standard_to_row_word",
            standard_to_row_word(order).letters().to_vec(),
            word.clone(),
        );
        match verify_commute(&t, order) {
            Ok(r) => {
                run.check(
                    r.passed(),
                    || case.clone(),
                    "verify_commute",
                    || ("commuting square".into(), r.mismatches.join("; ")),
                );
                run.eq(&case, "insert_word", r.p.clone(), expected_p.clone());
                run.eq(
                    &case,
                    "rectify_classical",
                    r.classical.clone(),
                    rectified.clone(),
                );
                run.eq(
                    &case,
                    "rectify_tropical",
                    (r.bottom_p, r.bottom_w),
                    expected_bottom.clone(),
                );
            }
            Err(e) => run.error(case, "verify_commute", e),
        }
    }
    run.eq(
        "P display",
        "PTableauCounts",
        expected_p.to_string(),
        "{1,1,1 / 2}".to_string(),
    );
    match run_slides(&w, &[2, 1, 1, 1]) {
        Ok(trace) => run.eq(
            "exit rows",
            "run_slides",
            trace.exit_rows(),
            vec![3, 1, 2, 3],
        ),
        Err(e) => run.error("exit rows", "run_slides", e),
    }
    let exit_word = Word::new(vec![3, 1, 2, 3]).expect("literal word");
    run.eq(
        "P' from exit rows",
        "insert_word",
        insert_word(&exit_word),
        straight(&[&[1, 2, 3], &[3]]),
    );
    run.eq(
        "uniform (3,1)",
        "uniform_tableau",
        uniform_tableau(&Partition::new(vec![3, 1]).expect("literal partition")),
        straight(&[&[1, 1, 1], &[2]]),
    );

    let sequences = [
        (
            standard(&[&[1, 2, 3], &[4]]),
            vec![
                skew(&[5, 4, 1], &[3], &[&[1, 2], &[1, 1, 2, 3], &[2]]),
                skew(&[4, 4, 1], &[2], &[&[1, 2], &[1, 1, 2, 3], &[2]]),
                skew(&[4, 3, 1], &[1], &[&[1, 1, 2], &[1, 2, 3], &[2]]),
                rectified.clone(),
            ],
        ),
        (
            standard(&[&[1, 3, 4], &[2]]),
            vec![
                skew(&[4, 4, 2], &[2, 1], &[&[1, 2], &[1, 2, 3], &[1, 2]]),
                skew(&[4, 4, 1], &[1, 1], &[&[1, 1, 2], &[2, 2, 3], &[1]]),
                skew(&[4, 4], &[1], &[&[1, 1, 2], &[1, 2, 2, 3]]),
                rectified.clone(),
            ],
        ),
    ];
    for (order, expected) in sequences {
        let mut current = t.clone();
        for (step, &row) in standard_to_row_word(&order).letters().iter().enumerate() {
            let row = row as usize;
            match jdt_slide(&current, Cell::new(row, current.inner().part(row))) {
                Ok(r) => {
                    run.eq(
                        &format!("order {order} step {step}"),
                        "jdt_slide",
                        r.tableau.clone(),
                        expected[step].clone(),
                    );
                    current = r.tableau;
                }
                Err(e) => {
                    run.error(format!("order {order} step {step}"), "jdt_slide", e);
                    break;
                }
            }
        }
    }

    let columns = [[1, 0, 0], [1, 0, 1], [1, 1, 2], [1, 2, 2]];
    let outputs = [[0, 0, 0], [1, 0, 0], [1, 2, 0], [1, 3, 0]];
    let chain = [
        ptab(&[&[1, 2, 2], &[3]]),
        ptab(&[&[1, 2, 3], &[3]]),
        ptab(&[&[1, 2, 3], &[3]]),
        ptab(&[&[1, 2, 3], &[3]]),
    ];
    let mut p = expected_p;
    for j in 0..4 {
        run.eq(
            &format!("column {j}"),
            "WMatrix::column",
            w.column(j),
            columns[j].to_vec(),
        );
        match compose_column(&p, &cv(&columns[j])) {
            Ok((next, out)) => {
                run.eq(
                    &format!("chain P after column {j}"),
                    "compose_column",
                    next.clone(),
                    chain[j].clone(),
                );
                run.eq(
                    &format!("chain W' column {j}"),
                    "compose_column",
                    out,
                    cv(&outputs[j]),
                );
                p = next;
            }
            Err(e) => run.error(format!("chain column {j}"), "compose_column", e),
        }
    }
}

fn kicker_ball(run: &mut Run) {
    let (p, w) = (cv(&[0, 2, 0, 2, 1]), cv(&[0, 3, 1, 1, 0]));
    match kicker_ball_step(&p, &w) {
        Ok((p2, w2)) => {
            run.eq(
                "kicker P'",
                "kicker_ball_step",
                p2.clone(),
                cv(&[0, 2, 0, 1, 1, 1]),
            );
            run.eq("kicker W'", "kicker_ball_step", w2.clone(), cv(&[2, 1, 2]));
            let rows = |v: &CountVector| {
                PTableauCounts::new(vec![v.clone()])
                    .map(|t| t.to_string())
                    .map_err(|e| e.to_string())
            };
            run.eq(
                "kicker rows",
                "PTableauCounts",
                (rows(&p), rows(&p2)),
                (Ok("{2,2,4,4,5}".into()), Ok("{2,2,4,5,6}".into())),
            );
            run.eq(
                "kicker frame",
                "render_frame",
                render_frame(&p, &w, 7),
                "|     |kk∘∘∘|  ∘  | kk∘ |  k  |     |     |...".to_string(),
            );
        }
        Err(e) => run.error("kicker step", "kicker_ball_step", e),
    }
    let mp = |v: &[i64]| v.iter().map(|&x| MinPlus::Finite(x)).collect::<Vec<_>>();
    let generic = local_step_generic(&mp(&[0, 2, 0, 2, 1, 0, 0]), &mp(&[0, 3, 1, 1, 0, 0, 0]))
        .map_err(|e| e.to_string());
    run.eq(
        "min-plus step",
        "local_step_generic",
        generic,
        Ok((mp(&[0, 2, 0, 1, 1, 1, 0]), mp(&[2, 1, 2, 0, 0, 0]))),
    );
    let single = kicker_ball_step(&cv(&[0, 1]), &cv(&[1])).map_err(|e| e.to_string());
    run.eq(
        "{2} with one ball",
        "kicker_ball_step",
        single,
        Ok((cv(&[0, 0, 1]), cv(&[1]))),
    );
    let triple = kicker_ball_step(&cv(&[3]), &cv(&[1])).map_err(|e| e.to_string());
    run.eq(
        "{1,1,1} with one ball",
        "kicker_ball_step",
        triple,
        Ok((cv(&[1, 2]), cv(&[]))),
    );
}

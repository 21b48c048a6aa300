//! Classical jeu de taquin and rectification.
//!
//! This is the combinatorial reference against which the min-plus dynamics in
//! [`crate::dynamics`] and [`crate::rectify`] are checked.

use serde::Serialize;
use thiserror::Error;

use crate::tableau::{
    standard_to_row_word, Cell, Entry, SkewShape, SkewTableau, StandardTableau, TableauError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JdtError {
    #[error("{0} is not an inside corner")]
    NotAnInsideCorner(Cell),
    #[error("order has shape {order}, but the inner shape is {inner}")]
    ShapeMismatch { order: String, inner: String },
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// Outcome of a single slide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlideResult {
    pub tableau: SkewTableau,
    /// Row of the outside corner vacated by the slide.
    pub exit_row: usize,
    /// Successive hole positions, from the inside corner to the vacated
    /// outside corner.
    pub hole_trajectory: Vec<Cell>,
}

/// A slide on a bare filling: rows of filled entries over a skew shape, with
/// no row or column rule enforced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FillingSlide {
    pub shape: SkewShape,
    pub rows: Vec<Vec<Entry>>,
    pub exit_row: usize,
    pub hole_trajectory: Vec<Cell>,
}

/// Slides the hole at inside corner `corner` of `shape` to an outside corner.
/// When the two candidates are equal the box below moves.
pub fn slide_filling(
    shape: &SkewShape,
    rows: &[Vec<Entry>],
    corner: Cell,
) -> Result<FillingSlide, JdtError> {
    let inner = shape.inner();
    if !inner.corners().contains(&corner) {
        return Err(JdtError::NotAnInsideCorner(corner));
    }
    let mut grid: Vec<Vec<Option<Entry>>> = (1..=shape.outer().len())
        .map(|i| {
            let filled = rows.get(i - 1).map_or(&[][..], Vec::as_slice);
            let mut row = vec![None; inner.part(i)];
            row.extend(filled.iter().map(|&v| Some(v)));
            row.resize(shape.outer().part(i), None);
            row
        })
        .collect();
    let mut hole = corner;
    let mut trajectory = vec![hole];
    loop {
        let below = grid
            .get(hole.row)
            .and_then(|r| r.get(hole.col - 1))
            .copied()
            .flatten();
        let right = grid[hole.row - 1].get(hole.col).copied().flatten();
        let next = match (below, right) {
            (None, None) => break,
            (Some(_), None) => Cell::new(hole.row + 1, hole.col),
            (None, Some(_)) => Cell::new(hole.row, hole.col + 1),
            (Some(b), Some(r)) if b <= r => Cell::new(hole.row + 1, hole.col),
            (Some(_), Some(_)) => Cell::new(hole.row, hole.col + 1),
        };
        grid[hole.row - 1][hole.col - 1] = grid[next.row - 1][next.col - 1].take();
        hole = next;
        trajectory.push(hole);
    }
    let new_shape = SkewShape::new(
        shape.outer().without_box_in_row(hole.row),
        inner.without_box_in_row(corner.row),
    )?;
    let mut filled: Vec<Vec<Entry>> = grid
        .into_iter()
        .map(|r| r.into_iter().flatten().collect())
        .collect();
    filled.truncate(new_shape.outer().len());
    Ok(FillingSlide {
        shape: new_shape,
        rows: filled,
        exit_row: hole.row,
        hole_trajectory: trajectory,
    })
}

/// Slides the hole at inside corner `corner` to an outside corner. When the
/// two candidates are equal the box below moves.
pub fn jdt_slide(t: &SkewTableau, corner: Cell) -> Result<SlideResult, JdtError> {
    let slid = slide_filling(t.shape(), t.rows(), corner)?;
    Ok(SlideResult {
        tableau: SkewTableau::new(slid.shape, slid.rows)?,
        exit_row: slid.exit_row,
        hole_trajectory: slid.hole_trajectory,
    })
}

/// Slides at the inner box labelled `N`, then `N - 1`, and so on down to `1`.
/// Returns the straight tableau and the rows of the vacated outside corners.
pub fn rectify_classical(
    t: &SkewTableau,
    order: &StandardTableau,
) -> Result<(SkewTableau, Vec<usize>), JdtError> {
    if order.shape() != t.inner() {
        return Err(JdtError::ShapeMismatch {
            order: order.shape().to_string(),
            inner: t.inner().to_string(),
        });
    }
    let mut current = t.clone();
    let mut exit_rows = Vec::with_capacity(order.size());
    let word = standard_to_row_word(order);
    for (step, &row) in word.letters().iter().enumerate() {
        let label = (order.size() - step) as Entry;
        let corner = order
            .position(label)
            .expect("standard tableau holds every label");
        debug_assert_eq!(corner.row, row as usize);
        let slid = jdt_slide(&current, corner)?;
        exit_rows.push(slid.exit_row);
        current = slid.tableau;
    }
    Ok((current, exit_rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::Partition;

    fn skew(outer: &[usize], inner: &[usize], rows: &[&[Entry]]) -> SkewTableau {
        let shape = SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap();
        SkewTableau::new(shape, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn standard(rows: &[&[Entry]]) -> StandardTableau {
        StandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn worked_slide() {
        // The worked example repeats 3 in column 4, so it is replayed as a
        // bare filling.
        let shape = SkewShape::new(
            Partition::new(vec![4, 4, 4, 3]).unwrap(),
            Partition::new(vec![2, 2]).unwrap(),
        )
        .unwrap();
        let rows = vec![vec![1, 3], vec![2, 3], vec![1, 2, 3, 4], vec![2, 4, 5]];
        let out = slide_filling(&shape, &rows, Cell::new(2, 2)).unwrap();
        assert_eq!(
            out.rows,
            vec![vec![1, 3], vec![2, 2, 3], vec![1, 3, 4], vec![2, 4, 5]]
        );
        assert_eq!(out.shape.outer().parts(), &[4, 4, 3, 3]);
        assert_eq!(out.shape.inner().parts(), &[2, 1]);
        assert_eq!(out.exit_row, 3);
        assert_eq!(
            out.hole_trajectory,
            vec![
                Cell::new(2, 2),
                Cell::new(3, 2),
                Cell::new(3, 3),
                Cell::new(3, 4)
            ]
        );
        assert!(SkewTableau::new(shape, rows).is_err());
    }

    #[test]
    fn slides_of_the_three_step_sequence() {
        let s0 = skew(&[3, 3, 2], &[2, 1], &[&[1], &[2, 2], &[3, 3]]);
        let s1 = jdt_slide(&s0, Cell::new(1, 2)).unwrap().tableau;
        assert_eq!(s1, skew(&[3, 2, 2], &[1, 1], &[&[1, 2], &[2], &[3, 3]]));
        let s2 = jdt_slide(&s1, Cell::new(2, 1)).unwrap().tableau;
        assert_eq!(s2, skew(&[3, 2, 1], &[1], &[&[1, 2], &[2, 3], &[3]]));
        let s3 = jdt_slide(&s2, Cell::new(1, 1)).unwrap().tableau;
        assert_eq!(s3, skew(&[2, 2, 1], &[], &[&[1, 2], &[2, 3], &[3]]));
    }

    #[test]
    fn single_horizontal_slide() {
        let out = jdt_slide(&skew(&[2], &[1], &[&[1]]), Cell::new(1, 1)).unwrap();
        assert_eq!(out.tableau, skew(&[1], &[], &[&[1]]));
        assert_eq!(out.exit_row, 1);
    }

    #[test]
    fn degenerate_corner_collapses() {
        // (2,1) is an inside corner with nothing below or to its right.
        let t = skew(&[3, 1], &[2, 1], &[&[4]]);
        let out = jdt_slide(&t, Cell::new(2, 1)).unwrap();
        assert_eq!(out.hole_trajectory, vec![Cell::new(2, 1)]);
        assert_eq!(out.exit_row, 2);
        assert_eq!(out.tableau, skew(&[3], &[2], &[&[4]]));
    }

    #[test]
    fn rejects_non_corners() {
        let t = skew(&[5, 4, 2], &[3, 1], &[&[1, 2], &[1, 2, 3], &[1, 2]]);
        assert_eq!(
            jdt_slide(&t, Cell::new(1, 2)),
            Err(JdtError::NotAnInsideCorner(Cell::new(1, 2)))
        );
    }

    #[test]
    fn rectification_is_order_independent_on_running_example() {
        let t = skew(&[5, 4, 2], &[3, 1], &[&[1, 2], &[1, 2, 3], &[1, 2]]);
        let expected = SkewTableau::straight(vec![vec![1, 1, 1, 2], vec![2, 2, 3]]).unwrap();
        let (r, exits) = rectify_classical(&t, &standard(&[&[1, 2, 3], &[4]])).unwrap();
        assert_eq!(r, expected);
        assert_eq!(exits, vec![3, 1, 2, 3]);
        let (r, _) = rectify_classical(&t, &standard(&[&[1, 3, 4], &[2]])).unwrap();
        assert_eq!(r, expected);

        assert!(matches!(
            rectify_classical(&t, &standard(&[&[1, 2]])),
            Err(JdtError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn straight_input_is_unchanged() {
        let t = SkewTableau::straight(vec![vec![1, 2], vec![3]]).unwrap();
        let order = StandardTableau::row_reading(&Partition::empty());
        assert_eq!(rectify_classical(&t, &order).unwrap(), (t, vec![]));
    }
}

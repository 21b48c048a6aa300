//! Jeu de taquin, its min-plus encoding, and the kicker-and-ball
//! rectification map, with exact cross-checks between them.

pub mod dynamics;
pub mod family;
pub mod jdt;
pub mod rectify;
pub mod semiring;
pub mod tableau;
pub mod wmatrix;

pub use dynamics::{phi_k, render_path, run_slides, DynamicsError, QPath, SlideStep, SlideTrace};
pub use jdt::{jdt_slide, rectify_classical, JdtError, SlideResult};
pub use rectify::{
    check_uniqueness_shape, compose_column, kicker_ball_step, rectify_tropical, verify_commute,
    CommuteReport, CountVector, PTableauCounts, RectifyError, UniquenessReport,
};
pub use tableau::{
    enumerate_standard_tableaux, insert_word, is_reverse_lattice_word, row_insert,
    standard_to_row_word, uniform_tableau, Cell, Entry, Partition, SkewShape, SkewTableau,
    StandardTableau, TableauError, Word,
};
pub use wmatrix::{
    compute_f, decode_w, encode_w, verify_udkp, FGrid, UdkpReport, WMatrix, WMatrixError,
};

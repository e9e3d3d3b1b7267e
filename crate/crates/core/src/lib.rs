#![no_std]
#![doc = include_str!("../README.md")]

extern crate alloc;

pub mod crossprod;
pub mod exactnum;
pub mod groups;
pub mod homogeneous;
pub mod ktheory;
pub mod reps;

/// Any error raised by this crate.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Num(#[from] exactnum::NumError),
    #[error(transparent)]
    Group(#[from] groups::GroupError),
    #[error(transparent)]
    Rep(#[from] reps::RepError),
    #[error(transparent)]
    Cross(#[from] crossprod::CrossError),
    #[error(transparent)]
    K(#[from] ktheory::KError),
    #[error(transparent)]
    Homogeneous(#[from] homogeneous::HomError),
}

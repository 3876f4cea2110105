pub mod euler;
pub mod figure;
pub mod gaps;
pub mod run;
pub mod verify;
pub mod wedge;

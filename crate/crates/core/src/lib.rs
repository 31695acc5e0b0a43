pub mod buindex;
pub mod cohomology;
pub mod covers;
pub mod fpgroup;
pub mod gf2;
pub mod pipeline;
pub mod simplicial;

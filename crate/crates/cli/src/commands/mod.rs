pub mod gap;
pub mod mc;
pub mod spectra_cmd;
pub mod tw;

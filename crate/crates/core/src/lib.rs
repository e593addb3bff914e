pub mod analysis;
pub mod cli;
pub mod cosetenum;
pub mod localgroups;
pub mod permgrp;
pub mod presentations;
pub mod squares;
pub mod words;

//! Word algebras reduced to PBW normal form.

mod element;
mod straighten;
mod yangian;

pub use element::{Element, Symbol, Word};
pub use straighten::{Straightener, SuperRule};
pub use yangian::{
    loop_degree, max_loop_degree, scalar, word_of, Elem, Generator, MonomialOrder, Signature,
    Yangian, YangianRule,
};

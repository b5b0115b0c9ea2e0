//! Standard diagrams of rational links.
//!
//! Three columns read bottom to top. A cup joins columns 1 and 2 at the
//! bottom and an outer arc leaves column 3. Twist boxes alternate between
//! columns 2-3 (odd boxes) and 1-2 (even boxes); a box labelled `a` holds
//! `|a|` braid-style crossings, positive letters when `a > 0`. At the top a
//! cap joins columns 1-2 and the outer arc returns to column 3 when the code
//! has odd length; otherwise the cap joins columns 2-3 and the outer arc
//! returns to column 1. Signs alternate along the code exactly when the
//! diagram is alternating.
//!
//! A zero box is simply empty, so interior zeros give the same diagram as
//! the merged code and `[0]` is the crossingless two-component unlink.

use super::{Builder, DiagramError, LinkDiagram};

impl LinkDiagram {
    pub fn from_rational_code(code: &[i64]) -> Result<Self, DiagramError> {
        if code.is_empty() {
            return Err(DiagramError::EmptyCode);
        }
        let mut b = Builder::default();
        let cup = b.node();
        let outer = b.node();
        let mut cur = vec![cup, cup, outer];
        for (idx, &a) in code.iter().enumerate() {
            let x = if idx % 2 == 0 { 1 } else { 0 };
            for _ in 0..a.unsigned_abs() {
                b.braid_letter(&mut cur, x, a > 0);
            }
        }
        if code.len() % 2 == 1 {
            b.wire(cur[0], cur[1]);
            b.wire(cur[2], outer);
        } else {
            b.wire(cur[1], cur[2]);
            b.wire(cur[0], outer);
        }
        Ok(b.finish())
    }
}

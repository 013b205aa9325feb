//! Blades, multivectors and the distinguished constant elements.

mod blade;
mod multivector;

pub use blade::{Blade, BLADE_COUNT, GEN_COUNT, GEN_NAMES, MINUS_MASK, SIGN_TABLE};
pub use multivector::Multivector;

use crate::report::CheckEntry;
use crate::scalar::{rint, Rat, Ring};

/// Generator bit indices, named.
pub mod gen_idx {
    pub const T1: usize = 0;
    pub const T2: usize = 1;
    pub const T3: usize = 2;
    pub const S1: usize = 3;
    pub const S2: usize = 4;
    pub const S3: usize = 5;
}

/// The plus-signature generators t1, t2, t3.
pub const T1: Blade = Blade::generator(gen_idx::T1);
pub const T2: Blade = Blade::generator(gen_idx::T2);
pub const T3: Blade = Blade::generator(gen_idx::T3);
/// The minus-signature generators s1, s2, s3.
pub const S1: Blade = Blade::generator(gen_idx::S1);
pub const S2: Blade = Blade::generator(gen_idx::S2);
pub const S3: Blade = Blade::generator(gen_idx::S3);

/// Unit bivector of the transverse time plane, t1t2. Squares to −1 and
/// plays the role of the imaginary unit throughout the field pipeline.
pub const I_TRANSVERSE: Blade = Blade::new(0b000_011);

/// Pseudoscalar of the embedded one-time spacetime, t3s1s2s3.
/// Squares to −1.
pub const I_SPACETIME: Blade = Blade::new(0b111_100);

/// Full six-generator pseudoscalar, t1t2t3s1s2s3. Squares to +1 and
/// equals the product of [`I_TRANSVERSE`] and [`I_SPACETIME`].
pub const PSEUDOSCALAR: Blade = Blade::new(0b111_111);

/// Spatial volume trivector s1s2s3. Squares to +1.
pub const VOLUME_SPATIAL: Blade = Blade::new(0b111_000);

/// Temporal volume trivector t1t2t3. Squares to −1. Sandwiching by it
/// flips the sign of every spatial generator (see
/// [`crate::symbolic::spatial_reflect`]).
pub const VOLUME_TEMPORAL: Blade = Blade::new(0b000_111);

/// Spatial generator blade for index 0–2.
pub fn s_gen(n: usize) -> Blade {
    Blade::generator(gen_idx::S1 + n)
}

/// Temporal generator blade for index 0–2.
pub fn t_gen(n: usize) -> Blade {
    Blade::generator(gen_idx::T1 + n)
}

/// Convenience: the multivector form of a named blade.
pub fn basis<R: Ring>(blade: Blade) -> Multivector<R> {
    Multivector::basis(blade)
}

/// Square sign of each generator in bit order: the metric signature.
pub const METRIC_SIGNS: [i8; GEN_COUNT] = [1, 1, 1, -1, -1, -1];

/// The generator-level invariant suite in exact arithmetic: all 15
/// anticommutators vanish, every generator squares to its metric sign,
/// and the named constant elements behave as documented.
///
/// `metric` is the expected square per generator; pass [`METRIC_SIGNS`]
/// for the real signature. Anything else exists to prove the suite can
/// fail.
pub fn axiom_entries(metric: &[i8; GEN_COUNT]) -> Vec<CheckEntry> {
    let mv = |b: Blade| Multivector::<Rat>::basis(b);
    let mut entries = Vec::new();
    for i in 0..GEN_COUNT {
        for j in (i + 1)..GEN_COUNT {
            let anti = &mv(Blade::generator(i)).geometric(&mv(Blade::generator(j)))
                + &mv(Blade::generator(j)).geometric(&mv(Blade::generator(i)));
            entries.push(CheckEntry::exact(
                format!("anticommute-{}-{}", GEN_NAMES[i], GEN_NAMES[j]),
                anti.is_zero(),
            ));
        }
    }
    for (i, sign) in metric.iter().enumerate() {
        let square = mv(Blade::generator(i)).geometric(&mv(Blade::generator(i)));
        entries.push(CheckEntry::exact(
            format!("square-{}", GEN_NAMES[i]),
            square == Multivector::scalar(rint(i64::from(*sign))),
        ));
    }
    for (name, blade, sign) in [
        ("transverse-unit-square", I_TRANSVERSE, -1),
        ("spacetime-unit-square", I_SPACETIME, -1),
        ("pseudoscalar-square", PSEUDOSCALAR, 1),
        ("spatial-volume-square", VOLUME_SPATIAL, 1),
        ("temporal-volume-square", VOLUME_TEMPORAL, -1),
    ] {
        let square = mv(blade).geometric(&mv(blade));
        entries.push(CheckEntry::exact(
            name,
            square == Multivector::scalar(rint(sign)),
        ));
    }
    entries.push(CheckEntry::exact(
        "pseudoscalar-split",
        mv(I_TRANSVERSE).geometric(&mv(I_SPACETIME)) == mv(PSEUDOSCALAR),
    ));
    entries.push(CheckEntry::exact(
        "imaginary-units-commute",
        mv(I_TRANSVERSE).commutes_with(&mv(I_SPACETIME)),
    ));
    entries
}

/// A named, reproducible set of invocations; each run is an argument list after `invar`.
pub struct Entry {
    pub name: &'static str,
    pub about: &'static str,
    pub runs: &'static [&'static [&'static str]],
}

pub const GALLERY: &[Entry] = &[
    Entry {
        name: "cyclicone-2",
        about: "Z/2 on one X and one W variable by sign",
        runs: &[
            &["toric", "--factors", "2", "--xw", "1", "--ww", "1", "hilbert-basis"],
            &["toric", "--factors", "2", "--xw", "1", "--ww", "1", "vertex-fiber"],
        ],
    },
    Entry {
        name: "cyclicone-3",
        about: "Z/3 with W weights 1 and 2",
        runs: &[
            &["builtin", "cyclicone", "--k", "3", "--l", "1", "hilbert-basis"],
            &["builtin", "cyclicone", "--k", "3", "--l", "2", "hilbert-basis"],
            &["builtin", "cyclicone", "--k", "3", "--l", "1", "vertex-fiber"],
        ],
    },
    Entry {
        name: "cyclicone5",
        about: "Z/5 with W weights 2 and 3",
        runs: &[
            &["builtin", "cyclicone", "--k", "5", "--l", "2", "hilbert-basis"],
            &["builtin", "cyclicone", "--k", "5", "--l", "3", "hilbert-basis"],
        ],
    },
    Entry {
        name: "cyclicone5-fiber",
        about: "vertex fibers of the two Z/5 algebras, dimensions 8 and 9 modulo m^3",
        runs: &[
            &["builtin", "cyclicone", "--k", "5", "--l", "2", "vertex-fiber", "--cap", "3"],
            &["builtin", "cyclicone", "--k", "5", "--l", "3", "vertex-fiber", "--cap", "3"],
        ],
    },
    Entry {
        name: "cyclicone-pi1",
        about: "fundamental groups of the regular loci for Z/6",
        runs: &[
            &["builtin", "cyclicone", "--k", "6", "--l", "1", "pi1"],
            &["builtin", "cyclicone", "--k", "6", "--l", "2", "pi1"],
            &["builtin", "cyclicone", "--k", "6", "--l", "3", "pi1"],
        ],
    },
    Entry {
        name: "cyclicone-normalization",
        about: "tensor product of the sign algebra with itself and pullbacks along S over R",
        runs: &[
            &["toric", "--factors", "2", "--xw", "1", "--ww", "1", "check-normalization", "--with-ww", "1"],
            &["builtin", "cyclicone", "--k", "3", "--l", "2", "check-pullback"],
            &["builtin", "cyclicone", "--k", "4", "--l", "3", "check-pullback"],
        ],
    },
    Entry {
        name: "compare-sym",
        about: "Sym of the covariant module against the invariant algebra for Z/5",
        runs: &[&["builtin", "cyclicone", "--k", "5", "--l", "2", "compare-sym", "--cap", "5"]],
    },
    Entry {
        name: "toric11",
        about: "Z/2 negating X, Y and W",
        runs: &[
            &["builtin", "toric11", "hilbert-basis"],
            &["builtin", "toric11", "vertex-fiber"],
            &["builtin", "toric11", "singularities", "--point", "0,0", "--fiber-point", "1"],
        ],
    },
    Entry {
        name: "asingularity",
        about: "A_{k-1} surface singularity with a W weight",
        runs: &[
            &["builtin", "asing", "--k", "2", "--l", "1", "hilbert-basis"],
            &["builtin", "asing", "--k", "3", "--l", "1", "hilbert-basis"],
        ],
    },
    Entry {
        name: "klein-1",
        about: "Klein four group, W negated by the first factor",
        runs: &[&["builtin", "klein", "--variant", "1", "hilbert-basis"], &["builtin", "klein", "--variant", "1", "pi1"]],
    },
    Entry {
        name: "klein-2",
        about: "Klein four group, W negated by the sum of both factors",
        runs: &[&["builtin", "klein", "--variant", "2", "hilbert-basis"], &["builtin", "klein", "--variant", "2", "pi1"]],
    },
    Entry {
        name: "cyclic4",
        about: "Z/4 acting by diag(-1, i) with W weight i",
        runs: &[
            &["builtin", "cyclic", "--k", "4", "--weights", "2,1", "--rho", "1", "pi1"],
            &["builtin", "cyclic4", "hilbert-basis"],
            &["builtin", "cyclic4", "reflections"],
            &["builtin", "cyclic4", "singularities", "--point", "1,0", "--fiber-point", "0"],
            &["builtin", "cyclic4", "singularities", "--point", "1,0", "--fiber-point", "1"],
        ],
    },
    Entry {
        name: "sym3",
        about: "S_3 permuting three coordinates",
        runs: &[&["builtin", "sym3", "min-generators"], &["builtin", "sym3", "reflections"]],
    },
    Entry {
        name: "sym3-sign",
        about: "S_3 with the sign representation on W",
        runs: &[
            &["builtin", "sym3", "--rho", "sign", "algebra"],
            &["builtin", "sym3", "--rho", "sign", "compare-sym", "--cap", "4"],
            &["builtin", "sym3", "--rho", "sign", "singularities", "--point", "1,2,3"],
            &["builtin", "sym3", "--rho", "sign", "singularities", "--point", "0,0,1"],
            &["builtin", "sym3", "--rho", "sign", "singularities", "--point", "1,1,1"],
            &["builtin", "sym3", "--rho", "sign", "fiber", "--point", "0,0,1"],
        ],
    },
    Entry {
        name: "sym3-plane",
        about: "S_3 as the reflection group of the plane by its six matrices",
        runs: &[
            &["builtin", "sym3-plane", "group"],
            &["builtin", "sym3-plane", "--det", "reflections"],
            &["builtin", "sym3-plane", "--det", "molien", "--cap", "4"],
        ],
    },
    Entry {
        name: "regular-cyclic",
        about: "regular representations of Z/k on W",
        runs: &[
            &["builtin", "regular", "--k", "2", "character"],
            &["builtin", "regular", "--k", "3", "character"],
        ],
    },
    Entry {
        name: "fiberflat",
        about: "the fiberflatness criterion on sample ranks",
        runs: &[
            &["diagnose-fiberflat", "--rank", "1", "--mu", "2", "--dim", "3", "--isolated", "--sym-irreducible"],
            &["diagnose-fiberflat", "--rank", "2", "--mu", "3", "--dim", "3", "--isolated", "--sym-irreducible"],
            &["diagnose-fiberflat", "--rank", "2", "--mu", "2", "--dim", "3", "--isolated", "--sym-irreducible"],
        ],
    },
];

pub fn find(name: &str) -> Option<&'static Entry> {
    GALLERY.iter().find(|e| e.name == name)
}

//! Holds the `acceptance` test target, which runs each acceptance criterion
//! through the suite registry and prints one verdict line per criterion.

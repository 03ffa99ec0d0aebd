use crate::Catalog;

/// Centers on the circumcircle, as listed in the literature up to X1000.
pub const CIRCUMCIRCLE_SET: &[u32] = &[
    74, 98, 99, 100, 101, 102, 103, 104, 105, 106, 107, 108, 109, 110, 111, 112, 476, 477, 675, 681,
    689, 691, 697, 699, 701, 703, 705, 707, 709, 711, 713, 715, 717, 719, 721, 723, 725, 727, 729, 731,
    733, 735, 737, 739, 741, 743, 745, 747, 753, 755, 759, 761, 767, 769, 773, 777, 779, 781, 783, 785,
    787, 789, 791, 793, 795, 797, 803, 805, 807, 809, 813, 815, 817, 819, 825, 827, 831, 833, 835, 839,
    840, 841, 842, 843, 898, 901, 907, 915, 917, 919, 925, 927, 929, 930, 931, 932, 933, 934, 935, 953,
    972,
];

/// Euler-line centers with constant Shinagawa coefficients.
pub const SHINAGAWA_SET: &[u32] = &[2, 3, 4, 5, 20, 140, 376, 381, 382, 546, 547, 548, 549, 550, 631, 632];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterSet {
    pub name: String,
    pub members: Vec<u32>,
}

impl CenterSet {
    pub fn circumcircle() -> Self {
        CenterSet { name: "C".into(), members: CIRCUMCIRCLE_SET.to_vec() }
    }

    pub fn shinagawa() -> Self {
        CenterSet { name: "S".into(), members: SHINAGAWA_SET.to_vec() }
    }

    /// Members with a catalog entry, and those without.
    pub fn split(&self, cat: &Catalog) -> (Vec<u32>, Vec<u32>) {
        self.members.iter().partition(|n| cat.contains(**n))
    }
}

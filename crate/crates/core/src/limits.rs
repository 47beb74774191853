/// Resource guards shared by the engines. Every capped operation rejects
/// inputs above its cap with [`crate::Error::SizeCap`] instead of running.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Limits {
    /// Maximum `n^k` tuples per graph for k-WL.
    pub tuple_cap: u128,
    /// Maximum pattern order for brute-force homomorphism counting.
    pub pattern_cap: usize,
    /// Maximum order for the brute-force isomorphism oracle.
    pub iso_cap: usize,
    /// Maximum forest order for T+ pattern enumeration.
    pub tplus_cap: usize,
    /// Maximum size of the generator family for given `(k, d)`.
    pub generator_cap: usize,
    /// Maximum rows (or columns) of one side of a pseudo-stochastic
    /// certificate `X`.
    pub certificate_cap: u128,
    /// Maximum `n^(k+d)` tuples when building augmented matrices.
    pub augmented_cap: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            tuple_cap: 1_000_000,
            pattern_cap: 10,
            iso_cap: 10,
            tplus_cap: 8,
            generator_cap: 20_000,
            certificate_cap: 200,
            augmented_cap: 1_000_000,
        }
    }
}

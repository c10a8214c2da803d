#pragma once

#include "dunkl/transform.hpp"

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dunkl {

/// Shape of the plateau function h (h = 1 on [0,1], h = 0 on [2, inf), smooth between).
enum class PlateauKind {
    mollifier,  ///< 1 - normalized integral of exp(-1/(1-u^2)) across [1, 2]
    logistic,   ///< 1 - e^{-1/u} / (e^{-1/u} + e^{-1/(1-u)}), u = s - 1
};

const char* to_string(PlateauKind kind);

double plateau(PlateauKind kind, double s);

struct BesovParams {
    double beta = 1.0;
    double p = 2.0;
    double q = 2.0;  ///< may be infinity (max over j; computed, not certified)

    void validate() const;
};

/// Frequency-side dyadic partition psi_0 = h(|xi|), psi_j = h(2^-j |xi|) - h(2^{1-j} |xi|),
/// with the space-side L^1 norms of phi_j = F_k^{-1}(psi_j).
class AdmissibleSequence {
public:
    static AdmissibleSequence build(const MultiplicitySetup& setup, int j_max,
                                    PlateauKind kind = PlateauKind::mollifier);

    [[nodiscard]] const MultiplicitySetup& setup() const { return setup_; }
    [[nodiscard]] int j_max() const { return j_max_; }
    [[nodiscard]] PlateauKind kind() const { return kind_; }

    [[nodiscard]] double psi(int j, double radius) const;
    /// Closed radial interval outside which psi_j vanishes: [0,2] for j = 0, A_j otherwise.
    [[nodiscard]] std::pair<double, double> support(int j) const;
    [[nodiscard]] std::vector<double> psi_values(int j, const WeightedGrid& frequency) const;

    /// Radial profile of phi_j at r (Hankel transform of psi_j).
    [[nodiscard]] double phi_profile(int j, double r) const;

    /// ||phi_j||_{1,k} for j = 0..j_max. j = 0 and j = 1 by quadrature split at the zeros of phi_j;
    /// phi_j for j >= 2 is an L^1-preserving dilation of phi_1.
    [[nodiscard]] const std::vector<double>& phi_l1_norms() const { return l1_norms_; }
    [[nodiscard]] double max_phi_l1() const;

    /// Same sequence truncated or extended to another j_max (norms for j >= 2 equal the j = 1 norm).
    [[nodiscard]] AdmissibleSequence with_j_max(int j_max) const;

private:
    AdmissibleSequence(MultiplicitySetup setup, int j_max, PlateauKind kind);
    [[nodiscard]] double compute_l1_norm(int j) const;

    MultiplicitySetup setup_;
    int j_max_;
    PlateauKind kind_;
    std::vector<double> l1_norms_;
};

/// Constant m with integral of F(|x|) w_k(x) dx = m * integral F(r) r^(2 gamma + d - 1) dr:
/// d_k for d >= 2 and 1 / (2^alpha Gamma(alpha+1)) in dimension one.
double radial_mass(const MultiplicitySetup& setup);

/// phi_j *_k f via psi_j F_k f.
SampledFunction dyadic_block(const Spectrum& spectrum, const AdmissibleSequence& seq, int j, const DunklTransform& plan);
Spectrum dyadic_block_spectrum(const Spectrum& spectrum, const AdmissibleSequence& seq, int j);

struct SeminormResult {
    double value = 0.0;
    std::vector<double> block_norms;     ///< ||phi_j * f||_p
    std::vector<double> weighted_terms;  ///< 2^{j beta} ||phi_j * f||_p
    double truncation_residual = 0.0;    ///< last weighted term
    bool certified = true;               ///< false for q = infinity
};

SeminormResult besov_seminorm(const Spectrum& spectrum, const AdmissibleSequence& seq, const BesovParams& params,
                              const DunklTransform& plan);

struct Reconstruction {
    SampledFunction partial;
    double error;
};

/// Partial sum of blocks j = 0..J and ||f - partial||_p.
Reconstruction reconstruct(const SampledFunction& f, const Spectrum& spectrum, const AdmissibleSequence& seq, int J,
                           double p, const DunklTransform& plan);

/// Blocks g_j given by their spectra (index = j).
struct BlockSequence {
    std::vector<Spectrum> blocks;
};

/// Share of |spectrum|^2 w mass lying outside the radial interval [a, b] (0 for a zero spectrum).
double outside_mass_fraction(const Spectrum& spectrum, double a, double b);

/// Relative spectral mass allowed outside B(0,2) / A_j for membership in the block class.
inline constexpr double kBlockSupportTolerance = 1e-10;

struct DecompositionResult {
    Spectrum assembled;                 ///< spectrum of f = sum g_j
    double seminorm = 0.0;
    double block_star = 0.0;            ///< (sum (2^{j beta} ||g_j||_p)^q)^{1/q}
    double empirical_constant = 0.0;    ///< seminorm / block_star
    double assembly_constant = 0.0;     ///< max ||phi_j||_1 (2^beta + 1 + 2^-beta)
    std::vector<std::vector<int>> coupling;  ///< per j: block indices with nonzero psi_j overlap
    bool holds = false;
};

/// Assembles f = sum g_j and checks seminorm(f) <= assembly_constant * block_star.
/// Throws std::invalid_argument if a block violates its spectral support.
DecompositionResult decompose_verify(const BlockSequence& g, const AdmissibleSequence& seq, const BesovParams& params,
                                     const DunklTransform& plan);

struct EquivalenceResult {
    double seminorm = 0.0;
    double lp_norm = 0.0;
    double ratio_high = 0.0;  ///< seminorm / ||f||_p
    double ratio_low = 0.0;   ///< ||f||_p / seminorm
    double bound_high = 0.0;  ///< (sum_{j in I} (2^{j beta} ||phi_j||_1)^q)^{1/q}
    double bound_low = 0.0;   ///< (sum_{j in I} 2^{-j beta q'})^{1/q'}
    std::vector<int> index_set;
};

/// Two-sided comparison of the seminorm with ||f||_p for spectra inside the annulus
/// a <= |xi| <= b (a > 0). I is the set of j whose psi_j meets the annulus.
EquivalenceResult compact_spectrum_equivalence(const Spectrum& spectrum, double a, double b,
                                               const AdmissibleSequence& seq, const BesovParams& params,
                                               const DunklTransform& plan);

enum class ProfileClass {
    annular,    ///< spectrum supported in 1 <= |xi| <= 2
    zero_mean,  ///< even, 1D, integral of phi d mu_alpha = 0
};

struct SpaceProfile {
    std::string name;
    ProfileClass cls = ProfileClass::annular;
    std::function<double(double)> spectrum;  ///< radial profile of F_k(phi)
    std::function<double(double)> space;     ///< radial profile of phi, when known in closed form
};

/// Member of the annular class: a normalized exp(-1/(1-u^2)) bump in |xi| on [1, 2].
SpaceProfile annular_profile();

/// phi = -x g' - 2(alpha+1) g for the Gaussian g: (x^2 - 2(alpha+1)) e^{-x^2/2}, spectrum -xi^2 e^{-xi^2/2}.
SpaceProfile gaussian_derivative_profile(double alpha);

/// Integral over (0, inf) of phi d mu_alpha (should vanish for the zero-mean class).
double zero_mean_integral(const SpaceProfile& profile, double alpha);

struct LogIntegral {
    double value = 0.0;
    std::vector<double> t_values;
    std::vector<double> integrand;  ///< quantity / t^beta at each t
    double head = 0.0;              ///< integrand at the smallest t
    double tail = 0.0;              ///< integrand at the largest t
};

/// (integral of (||f *_k phi_t||_p / t^beta)^q dt/t)^{1/q}, phi_t = t^{-(2 gamma + d)} phi(./t),
/// using F_k(phi_t)(xi) = F_k(phi)(t xi). Trapezoid in log t over [2^-octaves, 2^octaves].
LogIntegral continuous_seminorm(const Spectrum& spectrum, const SpaceProfile& profile, const BesovParams& params,
                                const DunklTransform& plan, int octaves = 10, int per_octave = 16);

/// ||f *_k phi_t||_p at every t of log_uniform_t, for each p (one inverse transform per t).
/// Checks the profile class like continuous_seminorm.
std::vector<std::vector<double>> profile_block_norms(const Spectrum& spectrum, const SpaceProfile& profile,
                                                     std::span<const double> p_values, const DunklTransform& plan,
                                                     int octaves = 10, int per_octave = 16);

/// Trapezoid in log t of (values / t^beta)^q over log-uniform t (max when q = infinity).
LogIntegral integrate_log_uniform(std::vector<double> t, const std::vector<double>& values, double beta, double q,
                                  int per_octave);

/// (integral of (omega_p(f)(t) / t^beta)^q dt/t)^{1/q} with the 1D second-order modulus.
LogIntegral modulus_seminorm(const Spectrum& spectrum, const BesovParams& params, const DunklTransform& plan,
                             int octaves = 10, int per_octave = 16);

/// Log-uniform nodes 2^{m / per_octave}, |m| <= octaves * per_octave.
std::vector<double> log_uniform_t(int octaves, int per_octave);

}  // namespace dunkl

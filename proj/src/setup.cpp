#include "dunkl/setup.hpp"

#include "dunkl/special.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dunkl {

MultiplicitySetup::MultiplicitySetup(std::vector<double> k) : k_(std::move(k))
{
    if (k_.empty()) throw std::invalid_argument("MultiplicitySetup: dimension must be positive");
    for (double kj : k_)
        if (!(kj >= 0.0) || !std::isfinite(kj))
            throw std::invalid_argument("MultiplicitySetup: multiplicities must be finite and nonnegative");
    gamma_ = std::accumulate(k_.begin(), k_.end(), 0.0);
    axis_scale_.assign(k_.size(), 1.0);
    if (k_.size() == 1) {
        if (!(k_[0] > 0.0)) throw std::invalid_argument("MultiplicitySetup: rank one requires alpha > -1/2");
        double const alpha = k_[0] - 0.5;
        axis_scale_[0] = 1.0 / (std::pow(2.0, alpha + 1.0) * gamma_fn(alpha + 1.0));
    }
}

MultiplicitySetup MultiplicitySetup::rank_one(double alpha) { return MultiplicitySetup({alpha + 0.5}); }

MultiplicitySetup MultiplicitySetup::product(std::vector<double> k) { return MultiplicitySetup(std::move(k)); }

double MultiplicitySetup::alpha() const
{
    if (dim() != 1) throw std::logic_error("MultiplicitySetup::alpha: only defined in dimension one");
    return gamma_ - 0.5;
}

std::string MultiplicitySetup::describe() const
{
    std::ostringstream out;
    out << "d=" << dim() << " k=(";
    for (std::size_t j = 0; j < k_.size(); ++j) out << (j ? "," : "") << k_[j];
    out << ") gamma=" << gamma_;
    if (dim() == 1) out << " alpha=" << alpha();
    return out.str();
}

}  // namespace dunkl

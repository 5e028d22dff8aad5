#include "btinv/types.hpp"

namespace btinv {

NotPositiveDefinite::NotPositiveDefinite(std::size_t k, std::size_t l, const std::string& what)
    : Error(what), k_(k), l_(l) {}

double Tolerance::for_matrix(double max_abs, std::size_t n) const {
    if (absolute_override) {
        return *absolute_override;
    }
    return 1e-12 + 1e-10 * max_abs * static_cast<double>(n);
}

}  // namespace btinv

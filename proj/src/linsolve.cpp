#include "linsolve.hpp"

namespace lgcy {

bool SparseLinearSystem::add_equation(Row row, Rational rhs) {
    if (!consistent_) return false;
    while (!row.empty()) {
        auto lead = row.begin();
        auto pit = pivots_.find(lead->first);
        if (pit == pivots_.end()) break;
        const Rational factor = lead->second;
        row.erase(lead);
        const auto& [prow, prhs] = pit->second;
        for (const auto& [v, c] : prow) {
            auto [it, inserted] = row.emplace(v, -factor * c);
            if (!inserted) {
                it->second -= factor * c;
                if (it->second == 0) row.erase(it);
            }
        }
        rhs -= factor * prhs;
    }
    if (row.empty()) {
        if (rhs != 0) consistent_ = false;
        return consistent_;
    }
    auto lead = row.begin();
    const Rational inv = Rational(1) / lead->second;
    Row norm;
    for (auto it = std::next(row.begin()); it != row.end(); ++it) norm.emplace(it->first, it->second * inv);
    pivots_.emplace(lead->first, std::make_pair(std::move(norm), rhs * inv));
    return true;
}

std::vector<Rational> SparseLinearSystem::solve(long n_vars) const {
    std::vector<Rational> x(static_cast<size_t>(n_vars), Rational(0));
    // Back-substitute in descending pivot order; free variables stay zero.
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        const auto& [var, data] = *it;
        const auto& [row, rhs] = data;
        Rational v = rhs;
        for (const auto& [w, c] : row) v -= c * x[static_cast<size_t>(w)];
        x[static_cast<size_t>(var)] = v;
    }
    return x;
}

} // namespace lgcy

#include "cleansched/core.hpp"

#include <stdexcept>

namespace cleansched {

const std::array<std::string, FoulingVector::kComponents>& FoulingVector::component_names() {
    static const std::array<std::string, kComponents> names = {
        "dsddm", "dsiws", "hu", "has0", "has6", "has9", "has12"};
    return names;
}

double FoulingVector::operator[](std::size_t i) const {
    switch (i) {
    case 0: return dsddm;
    case 1: return dsiws;
    case 2: return hu;
    case 3: return has0;
    case 4: return has6;
    case 5: return has9;
    case 6: return has12;
    default: throw std::out_of_range("FoulingVector index");
    }
}

double& FoulingVector::operator[](std::size_t i) {
    switch (i) {
    case 0: return dsddm;
    case 1: return dsiws;
    case 2: return hu;
    case 3: return has0;
    case 4: return has6;
    case 5: return has9;
    case 6: return has12;
    default: throw std::out_of_range("FoulingVector index");
    }
}

FoulingVector accumulate(const FoulingVector& state, const FoulingVector& increment) {
    FoulingVector out;
    for (std::size_t i = 0; i < FoulingVector::kComponents; ++i)
        out[i] = state[i] + increment[i];
    return out;
}

FoulingVector reset() { return FoulingVector{}; }

bool componentwise_leq(const FoulingVector& a, const FoulingVector& b) {
    for (std::size_t i = 0; i < FoulingVector::kComponents; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool all_non_negative(const FoulingVector& v) {
    for (std::size_t i = 0; i < FoulingVector::kComponents; ++i)
        if (v[i] < 0.0) return false;
    return true;
}

void ProblemInstance::validate() const {
    if (voyages.empty()) throw std::invalid_argument("instance has no voyages");
    if (cleaning_costs.size() != voyages.size())
        throw std::invalid_argument("cleaning_costs length != number of voyages");
    for (double c : cleaning_costs)
        if (c < 0.0) throw std::invalid_argument("negative cleaning cost");
    for (std::size_t j = 0; j < voyages.size(); ++j) {
        const auto& v = voyages[j];
        if (v.rows.rows == 0) throw std::invalid_argument("voyage with no rows");
        if (!feature_names.empty() && v.rows.cols != feature_names.size())
            throw std::invalid_argument("voyage row width != schema width");
        if (!all_non_negative(v.fouling_increment))
            throw std::invalid_argument("negative fouling increment component");
        if (j > 0 && voyages[j - 1].start_time > v.start_time)
            throw std::invalid_argument("voyages not chronologically ordered");
    }
    if (!all_non_negative(initial_fouling))
        throw std::invalid_argument("negative initial fouling component");
}

std::vector<FoulingVector> realize_trajectory(const ProblemInstance& instance,
                                              const std::vector<int>& decisions) {
    const std::size_t n = instance.n();
    if (decisions.size() != n)
        throw std::invalid_argument("decision vector length != number of voyages");
    std::vector<FoulingVector> trajectory(n);
    FoulingVector carried = instance.initial_fouling;
    for (std::size_t j = 0; j < n; ++j) {
        if (decisions[j] == 1) carried = reset();
        trajectory[j] = carried;
        carried = accumulate(carried, instance.voyages[j].fouling_increment);
    }
    return trajectory;
}

} // namespace cleansched

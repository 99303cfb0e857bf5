#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cleansched/iso_time.hpp"
#include "cleansched/matrix.hpp"

namespace cleansched {

// Cumulative hull-fouling state since the last cleaning: days since
// dry-dock maintenance, days since in-water survey, unaccounted hours,
// and hours spent in four speed-through-water bands.
struct FoulingVector {
    double dsddm = 0.0; // days
    double dsiws = 0.0; // days
    double hu = 0.0;    // hours
    double has0 = 0.0;  // hours at [0, 1] kn
    double has6 = 0.0;  // hours at (1, 6] kn
    double has9 = 0.0;  // hours at (6, 9] kn
    double has12 = 0.0; // hours at (9, inf) kn

    static constexpr std::size_t kComponents = 7;
    static const std::array<std::string, kComponents>& component_names();

    double operator[](std::size_t i) const;
    double& operator[](std::size_t i);

    // Scalar test instances place the scalar in the dsddm slot.
    static FoulingVector scalar(double value) {
        FoulingVector v;
        v.dsddm = value;
        return v;
    }

    bool operator==(const FoulingVector&) const = default;
};

FoulingVector accumulate(const FoulingVector& state, const FoulingVector& increment);

// The state immediately after a cleaning.
FoulingVector reset();

bool componentwise_leq(const FoulingVector& a, const FoulingVector& b);
bool all_non_negative(const FoulingVector& v);

// One voyage: m_j hourly feature rows over a shared schema, plus the
// fouling increment accrued over the voyage window.
struct VoyageProfile {
    std::int64_t voyage_id = 0;
    Matrix rows;
    FoulingVector fouling_increment;
    UnixTime start_time = 0;
    UnixTime end_time = 0;
};

struct ProblemInstance {
    std::vector<double> cleaning_costs;      // USD, one per voyage
    std::vector<VoyageProfile> voyages;      // chronological
    std::vector<std::string> feature_names;  // shared row schema
    FoulingVector initial_fouling;           // state before voyage 0
    double fuel_price = 0.0;                 // USD per kg

    std::size_t n() const { return voyages.size(); }
    void validate() const; // throws std::invalid_argument
};

struct Schedule {
    std::vector<int> decisions;                  // z, 0/1 per voyage
    double objective = 0.0;                      // USD
    std::vector<double> fuel_cost_per_voyage;    // USD
    double cleaning_cost_total = 0.0;            // USD
    std::vector<FoulingVector> fouling_trajectory;
};

// The unique fouling trajectory implied by a decision vector:
//   b[0] = b0 if z[0] = 0 else 0
//   b[j] = b[j-1] + B[j-1] if z[j] = 0 else 0
// Throws std::invalid_argument on length mismatch.
std::vector<FoulingVector> realize_trajectory(const ProblemInstance& instance,
                                              const std::vector<int>& decisions);

} // namespace cleansched

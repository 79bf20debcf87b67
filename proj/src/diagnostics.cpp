#include "mbgk/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mbgk {

namespace {
constexpr double kEntropyFloor = 1e-300;
}

double entropy(const DiscreteDistribution& f) {
    double s = 0.0;
    for (double v : f.values)
        if (v > kEntropyFloor) s += v * std::log(v);
    return f.grid->weight() * s;
}

double marginal_entropy(const ReducedPair& rp) {
    double s = 0.0;
    for (double v : rp.g)
        if (v > kEntropyFloor) s += v * std::log(v);
    return rp.grid->weight() * s;
}

double reduced_entropy(const ReducedPair& rp) {
    double s = 0.0;
    for (std::size_t i = 0; i < rp.g.size(); ++i) {
        const double g = rp.g[i];
        const double h = rp.h[i];
        if (g > kEntropyFloor && h > kEntropyFloor)
            s += g * (std::log(g * g / (M_PI * h)) - 1.0);
    }
    return rp.grid->weight() * s;
}

double relative_entropy(const DiscreteDistribution& f, const DiscreteDistribution& g) {
    if (!f.grid->same_layout(*g.grid))
        throw std::invalid_argument("relative_entropy: grid mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double fv = f.values[i];
        if (fv <= kEntropyFloor) continue;
        const double gv = g.values[i];
        if (gv <= 0.0)
            throw std::domain_error("relative_entropy: support of f not contained in g");
        s += fv * std::log(fv / gv);
    }
    return f.grid->weight() * s;
}

double l1_distance(const DiscreteDistribution& f, const DiscreteDistribution& g) {
    if (!f.grid->same_layout(*g.grid))
        throw std::invalid_argument("l1_distance: grid mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        s += std::fabs(f.values[i] - g.values[i]);
    return f.grid->weight() * s;
}

void ConservationLedger::append(const Sample& s) { samples_.push_back(s); }

ConservationLedger::DriftSummary ConservationLedger::summary() const {
    DriftSummary d;
    if (samples_.empty()) return d;
    const Sample& ref = samples_.front();
    // Momentum may legitimately be zero; measure its drift against the natural
    // momentum scale of the system (total mass times thermal speed ~ sqrt(2E/M)).
    const double mass_total = ref.mass1 + ref.mass2;
    const double p_scale = std::max(norm(ref.momentum),
                                    std::sqrt(2.0 * std::fabs(ref.energy) * mass_total));
    for (const Sample& s : samples_) {
        d.mass1 = std::max(d.mass1, std::fabs(s.mass1 - ref.mass1) / std::fabs(ref.mass1));
        d.mass2 = std::max(d.mass2, std::fabs(s.mass2 - ref.mass2) / std::fabs(ref.mass2));
        d.momentum = std::max(d.momentum, norm(s.momentum - ref.momentum) /
                                              (p_scale > 0.0 ? p_scale : 1.0));
        d.energy = std::max(d.energy, std::fabs(s.energy - ref.energy) / std::fabs(ref.energy));
    }
    d.max_drift = std::max({d.mass1, d.mass2, d.momentum, d.energy});
    return d;
}

std::string ConservationLedger::report(double tol_rel) const {
    const DriftSummary d = summary();
    std::ostringstream os;
    os.precision(3);
    auto line = [&](const char* name, double v) {
        os << name << " drift " << v << " : " << (v <= tol_rel ? "PASS" : "FAIL") << "\n";
    };
    line("mass1", d.mass1);
    line("mass2", d.mass2);
    line("momentum", d.momentum);
    line("energy", d.energy);
    os << "ledger tolerance " << tol_rel << " : " << (d.max_drift <= tol_rel ? "PASS" : "FAIL")
       << "\n";
    return os.str();
}

} // namespace mbgk

#include "squarewell/well_domain.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace squarewell {

double WellSpec::strength() const {
    if (!finite_) {
        throw std::logic_error("WellSpec: infinite well has no finite strength bL");
    }
    return strength_;
}

WellSpec well_spec_finite(double strength) {
    if (!std::isfinite(strength) || strength <= 0.0) {
        std::ostringstream msg;
        msg << "well strength bL must be a positive finite real, got " << strength;
        throw std::invalid_argument(msg.str());
    }
    return WellSpec(true, strength);
}

WellSpec well_spec_infinite() noexcept {
    return WellSpec(false, 0.0);
}

namespace {

void check_ascending(const std::vector<EigenResult>& list, const char* which) {
    for (std::size_t i = 1; i < list.size(); ++i) {
        if (!(list[i - 1].z < list[i].z)) {
            std::ostringstream msg;
            msg << "merge_spectra: " << which << " input is not strictly ascending at index "
                << i + 1;
            throw std::invalid_argument(msg.str());
        }
    }
}

}  // namespace

std::vector<EigenResult> merge_spectra(const std::vector<EigenResult>& a,
                                       const std::vector<EigenResult>& b) {
    check_ascending(a, "first");
    check_ascending(b, "second");
    if (!a.empty() && !b.empty() && a.front().model != b.front().model) {
        throw std::invalid_argument("merge_spectra: inputs mix models");
    }

    std::vector<EigenResult> merged;
    merged.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        bool take_a;
        if (i == a.size()) {
            take_a = false;
        } else if (j == b.size()) {
            take_a = true;
        } else if (a[i].z == b[j].z) {
            std::ostringstream msg;
            msg << "merge_spectra: degenerate spectrum, two levels share z = " << a[i].z;
            throw std::runtime_error(msg.str());
        } else {
            take_a = a[i].z < b[j].z;
        }
        merged.push_back(take_a ? a[i++] : b[j++]);
        merged.back().index = static_cast<int>(merged.size());
    }
    return merged;
}

}  // namespace squarewell

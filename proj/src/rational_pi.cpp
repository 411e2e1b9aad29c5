#include "whframe/rational_pi.hpp"

#include <cmath>

namespace whframe {

double RationalPi::value() const {
    return (static_cast<double>(num_) / static_cast<double>(den_)) * M_PI;
}

std::string RationalPi::str() const {
    if (num_ == 0) return "0";
    std::string s;
    if (num_ == -1)
        s = "-";
    else if (num_ != 1)
        s = std::to_string(num_);
    if (den_ != 1) {
        if (s.empty() || s == "-") s += "1";
        s += "/" + std::to_string(den_);
    }
    return s + "pi";
}

}  // namespace whframe

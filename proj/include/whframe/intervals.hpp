#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "whframe/rational_pi.hpp"

namespace whframe {

/// An interval with rational-pi endpoints. Set-level algebra treats every
/// interval as half-open [lo, hi); the closedness flags are kept only for
/// echo display and pointwise evaluation of piecewise functions.
struct Interval {
    RationalPi lo;
    RationalPi hi;
    bool lo_closed = true;
    bool hi_closed = false;

    Interval() = default;
    Interval(RationalPi lo_, RationalPi hi_, bool lo_closed_ = true, bool hi_closed_ = false);

    RationalPi length() const { return hi - lo; }
    Interval translated(std::int64_t two_pi_steps) const;

    /// Pointwise membership honoring the open/closed flags.
    bool contains_point(double t) const;

    std::string str() const;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// A finite disjoint union of intervals, canonicalized: parts sorted,
/// pairwise disjoint as half-open sets, abutting parts merged.
class BasicSupportSet {
  public:
    /// Canonicalizes an arbitrary nonempty list (merges overlaps/abutments).
    static BasicSupportSet normalize(std::vector<Interval> raw);

    const std::vector<Interval>& parts() const { return parts_; }
    RationalPi measure() const;
    RationalPi lo() const { return parts_.front().lo; }
    RationalPi hi() const { return parts_.back().hi; }

    /// Exact half-open containment of [a, b).
    bool contains(const RationalPi& a, const RationalPi& b) const;

    BasicSupportSet translated(std::int64_t two_pi_steps) const;

    std::string str() const;

    friend bool operator==(const BasicSupportSet& a, const BasicSupportSet& b) {
        return a.parts_ == b.parts_;
    }

  private:
    BasicSupportSet() = default;
    std::vector<Interval> parts_;
};

/// One 2pi-translation generator: a base interval inside [0, 2pi) together
/// with the strictly increasing step-widths n such that base + 2pi*n lies
/// in the decomposed set.
struct Generator {
    Interval base;
    std::vector<std::int64_t> widths;

    Generator(Interval base_, std::vector<std::int64_t> widths_);
};

struct Decomposition {
    std::vector<Generator> generators;
};

/// Splits a canonical set into 2pi-translation generators with step-widths.
/// Breakpoints are the residues of all endpoints mod 2pi; adjacent cells
/// with identical width-sets are merged.
Decomposition decompose(const BasicSupportSet& set);

/// Exact inverse of decompose: union of all base + 2pi*n translates.
/// Throws InputError if generator bases overlap (translates would too).
BasicSupportSet reconstruct(const Decomposition& d);

/// True iff the generator bases tile all of [0, 2pi), i.e. the periodized
/// set Omega is the whole line.
bool covers_line(const Decomposition& d);

/// Parses the set literal grammar:
///   set      := interval (("U" | "∪") interval)*
///   interval := ("[" | "(") endpoint "," endpoint (")" | "]")
///   endpoint := rational "pi"? | "0"
/// Nonzero endpoints must be rational multiples of pi.
std::vector<Interval> parse_set_literal(const std::string& text);

}  // namespace whframe

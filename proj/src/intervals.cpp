#include "whframe/intervals.hpp"

#include <algorithm>
#include <cctype>

namespace whframe {

Interval::Interval(RationalPi lo_, RationalPi hi_, bool lo_closed_, bool hi_closed_)
    : lo(lo_), hi(hi_), lo_closed(lo_closed_), hi_closed(hi_closed_) {
    if (!(lo < hi)) throw InputError("interval " + str() + ": endpoints must satisfy lo < hi");
}

Interval Interval::translated(std::int64_t k) const {
    return Interval(lo + RationalPi(2 * k, 1), hi + RationalPi(2 * k, 1), lo_closed, hi_closed);
}

bool Interval::contains_point(double t) const {
    double a = lo.value(), b = hi.value();
    bool above = lo_closed ? (t >= a) : (t > a);
    bool below = hi_closed ? (t <= b) : (t < b);
    return above && below;
}

std::string Interval::str() const {
    std::string s;
    s += lo_closed ? '[' : '(';
    s += lo.str() + "," + hi.str();
    s += hi_closed ? ']' : ')';
    return s;
}

BasicSupportSet BasicSupportSet::normalize(std::vector<Interval> raw) {
    if (raw.empty()) throw InputError("empty set: at least one interval required");
    std::sort(raw.begin(), raw.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    BasicSupportSet out;
    for (const Interval& iv : raw) {
        if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi) {
            // Overlapping or abutting under half-open semantics: merge.
            Interval& last = out.parts_.back();
            if (last.hi < iv.hi) last.hi = iv.hi;
        } else {
            out.parts_.push_back(Interval(iv.lo, iv.hi));
        }
    }
    if (out.measure().is_zero()) throw InputError("empty set: union has measure zero");
    return out;
}

RationalPi BasicSupportSet::measure() const {
    RationalPi total;
    for (const Interval& iv : parts_) total = total + iv.length();
    return total;
}

bool BasicSupportSet::contains(const RationalPi& a, const RationalPi& b) const {
    for (const Interval& iv : parts_)
        if (iv.lo <= a && b <= iv.hi) return true;
    return false;
}

BasicSupportSet BasicSupportSet::translated(std::int64_t k) const {
    BasicSupportSet out;
    for (const Interval& iv : parts_) out.parts_.push_back(iv.translated(k));
    return out;
}

std::string BasicSupportSet::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += " U ";
        s += parts_[i].str();
    }
    return s;
}

Generator::Generator(Interval base_, std::vector<std::int64_t> widths_)
    : base(std::move(base_)), widths(std::move(widths_)) {
    if (base.lo < RationalPi::zero() || RationalPi(2, 1) < base.hi)
        throw InputError("generator base must lie inside [0, 2pi)");
    if (widths.empty()) throw InputError("generator needs at least one step-width");
    for (std::size_t j = 1; j < widths.size(); ++j)
        if (widths[j] <= widths[j - 1])
            throw InputError("step-widths must be strictly increasing");
}

Decomposition decompose(const BasicSupportSet& set) {
    const RationalPi two_pi(2, 1);
    // Breakpoints: residues of all endpoints, plus 0 and 2pi.
    std::vector<RationalPi> cuts{RationalPi::zero(), two_pi};
    for (const Interval& iv : set.parts()) {
        cuts.push_back(iv.lo.tau_2pi().first);
        cuts.push_back(iv.hi.tau_2pi().first);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Every cell translate is either inside the set or disjoint from it,
    // so a per-part exact width range suffices.
    Decomposition out;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const RationalPi& t0 = cuts[c];
        const RationalPi& t1 = cuts[c + 1];
        std::vector<std::int64_t> widths;
        for (const Interval& part : set.parts()) {
            // part.lo <= t0 + 2pi n  and  t1 + 2pi n <= part.hi
            // n >= (part.lo - t0)/2pi   -> ceil
            // n <= (part.hi - t1)/2pi   -> floor
            RationalPi lo_diff = part.lo - t0;  // = (p/q) pi; bound n >= p/(2q)
            RationalPi hi_diff = part.hi - t1;
            auto ceil_half = [](const RationalPi& r) {
                std::int64_t p = r.num(), q = 2 * r.den();
                std::int64_t d = p / q;
                if (p % q != 0 && (p > 0) == (q > 0)) ++d;
                return d;
            };
            auto floor_half = [](const RationalPi& r) {
                std::int64_t p = r.num(), q = 2 * r.den();
                std::int64_t d = p / q;
                if (p % q != 0 && (p > 0) != (q > 0)) --d;
                return d;
            };
            for (std::int64_t n = ceil_half(lo_diff); n <= floor_half(hi_diff); ++n)
                widths.push_back(n);
        }
        if (widths.empty()) continue;
        std::sort(widths.begin(), widths.end());
        if (!out.generators.empty() && out.generators.back().base.hi == t0 &&
            out.generators.back().widths == widths) {
            out.generators.back().base.hi = t1;  // merge adjacent equal-width cells
        } else {
            out.generators.push_back(Generator(Interval(t0, t1), widths));
        }
    }
    return out;
}

BasicSupportSet reconstruct(const Decomposition& d) {
    if (d.generators.empty()) throw InputError("invalid decomposition: no generators");
    // Disjoint bases inside [0,2pi) guarantee disjoint translates.
    std::vector<const Generator*> by_lo;
    for (const Generator& g : d.generators) by_lo.push_back(&g);
    std::sort(by_lo.begin(), by_lo.end(),
              [](const Generator* a, const Generator* b) { return a->base.lo < b->base.lo; });
    for (std::size_t i = 0; i + 1 < by_lo.size(); ++i)
        if (by_lo[i + 1]->base.lo < by_lo[i]->base.hi)
            throw InputError("invalid decomposition: generator bases overlap");

    std::vector<Interval> pieces;
    for (const Generator& g : d.generators)
        for (std::int64_t n : g.widths) pieces.push_back(g.base.translated(n));
    return BasicSupportSet::normalize(std::move(pieces));
}

bool covers_line(const Decomposition& d) {
    std::vector<Interval> bases;
    for (const Generator& g : d.generators) bases.push_back(g.base);
    std::sort(bases.begin(), bases.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    if (bases.empty() || !bases.front().lo.is_zero()) return false;
    RationalPi reach = bases.front().hi;
    for (std::size_t i = 1; i < bases.size(); ++i) {
        if (bases[i].lo != reach) return false;
        reach = bases[i].hi;
    }
    return reach == RationalPi(2, 1);
}

namespace {

struct SetScanner {
    const std::string& text;
    std::size_t pos = 0;

    explicit SetScanner(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("set literal: " + what + " at offset " + std::to_string(pos) + " in \"" +
                         text + "\"");
    }

    std::int64_t integer() {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            fail("expected integer");
        return std::stoll(text.substr(start, pos - start));
    }

    RationalPi endpoint() {
        skip_ws();
        std::int64_t num = integer();
        std::int64_t den = 1;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            den = integer();
            if (den <= 0) fail("denominator must be positive");
        }
        skip_ws();
        if (text.compare(pos, 2, "pi") == 0) {
            pos += 2;
            return RationalPi(num, den);
        }
        if (num == 0) return RationalPi::zero();
        fail("nonzero endpoints must be rational multiples of pi (write e.g. 3pi or 5/2pi)");
    }

    Interval interval() {
        skip_ws();
        if (pos >= text.size() || (text[pos] != '[' && text[pos] != '('))
            fail("expected '[' or '('");
        bool lo_closed = text[pos] == '[';
        ++pos;
        RationalPi lo = endpoint();
        skip_ws();
        if (pos >= text.size() || text[pos] != ',') fail("expected ','");
        ++pos;
        RationalPi hi = endpoint();
        skip_ws();
        if (pos >= text.size() || (text[pos] != ')' && text[pos] != ']'))
            fail("expected ')' or ']'");
        bool hi_closed = text[pos] == ']';
        ++pos;
        return Interval(lo, hi, lo_closed, hi_closed);
    }

    bool union_sep() {
        skip_ws();
        if (pos < text.size() && (text[pos] == 'U' || text[pos] == 'u')) {
            ++pos;
            return true;
        }
        if (text.compare(pos, 3, "\xE2\x88\xAA") == 0) {  // UTF-8 for the union sign
            pos += 3;
            return true;
        }
        return false;
    }
};

}  // namespace

std::vector<Interval> parse_set_literal(const std::string& text) {
    SetScanner sc(text);
    std::vector<Interval> parts;
    parts.push_back(sc.interval());
    while (sc.union_sep()) parts.push_back(sc.interval());
    sc.skip_ws();
    if (sc.pos != text.size()) sc.fail("unexpected trailing input");
    return parts;
}

}  // namespace whframe

#include "indec/lattice.hpp"

#include <optional>

namespace indec {

std::uint64_t for_each_lattice_point(const std::array<RationalInterval, 3>& targets,
                                     const RootEnclosures& enc, const LatticeVisitor& visit)
{
    const CoefficientBox box = coefficient_box(targets, enc);
    if (box.empty()) return 0;

    const auto& r = enc.intervals;
    std::array<RationalInterval, 3> squares;
    for (std::size_t i = 0; i < 3; ++i) squares[i] = r[i].square();

    struct PairCut {
        RationalInterval quotient; // (T_i - T_k) / (r_i - r_k)
        RationalInterval root_sum; // r_i + r_k
    };
    std::array<PairCut, 3> cuts;
    {
        std::size_t n = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t k = i + 1; k < 3; ++k) {
                cuts[n++] = {(targets[i] - targets[k]) / (r[i] - r[k]), r[i] + r[k]};
            }
        }
    }

    std::uint64_t visited = 0;
    Coords c;
    for (Integer x3 = box.ranges[2].lo; x3 <= box.ranges[2].hi; ++x3) {
        Rational lo2(box.ranges[1].lo);
        Rational hi2(box.ranges[1].hi);
        for (const auto& cut : cuts) {
            const RationalInterval allowed = cut.quotient - x3 * cut.root_sum;
            if (allowed.lo() > lo2) lo2 = allowed.lo();
            if (allowed.hi() < hi2) hi2 = allowed.hi();
        }
        if (hi2 < lo2) continue;
        const Integer x2_lo = ceil_of(lo2);
        const Integer x2_hi = floor_of(hi2);
        for (Integer x2 = x2_lo; x2 <= x2_hi; ++x2) {
            Rational lo1(box.ranges[0].lo);
            Rational hi1(box.ranges[0].hi);
            bool empty = false;
            for (std::size_t i = 0; i < 3 && !empty; ++i) {
                const RationalInterval shift = x2 * r[i] + x3 * squares[i];
                const Rational lo = targets[i].lo() - shift.hi();
                const Rational hi = targets[i].hi() - shift.lo();
                if (lo > lo1) lo1 = lo;
                if (hi < hi1) hi1 = hi;
                empty = hi1 < lo1;
            }
            if (empty) continue;
            const Integer x1_hi = floor_of(hi1);
            for (Integer x1 = ceil_of(lo1); x1 <= x1_hi; ++x1) {
                c[0] = x1;
                c[1] = x2;
                c[2] = x3;
                ++visited;
                if (!visit(c)) return visited;
            }
        }
    }
    return visited;
}

std::vector<Coords> lattice_points(const std::array<RationalInterval, 3>& targets, const RootEnclosures& enc)
{
    std::vector<Coords> out;
    for_each_lattice_point(targets, enc, [&](const Coords& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

} // namespace indec

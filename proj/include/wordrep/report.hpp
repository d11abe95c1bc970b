#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordrep/closed_sums.hpp"
#include "wordrep/egf.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/grid.hpp"
#include "wordrep/numbers.hpp"
#include "wordrep/oracle.hpp"

namespace wordrep {

// The seven reportable quantities: the total count, the three fixed counts,
// the fully symmetric count, the orbit count, and the free count (arrays
// fixed by nothing).
enum class Quantity { P, H, V, R, S, W, C };

inline char quantity_letter(Quantity q) { return "PHVRSWC"[static_cast<int>(q)]; }

inline std::optional<Quantity> parse_quantity(char c) {
    const std::string letters = "PHVRSWC";
    auto pos = letters.find(c);
    if (pos == std::string::npos) return std::nullopt;
    return Quantity(int(pos));
}

constexpr std::initializer_list<Quantity> all_quantities = {
    Quantity::P, Quantity::H, Quantity::V, Quantity::R,
    Quantity::S, Quantity::W, Quantity::C};

// How to compute: one fixed path, or the generating-function path plus
// every cross-check that fits the shape.
enum class MethodPolicy { automatic, egf, closed_sum, oracle };

struct CountReport {
    GridShape shape;
    std::map<Quantity, Natural> values;
    std::map<Quantity, std::string> method;  // "egf", "closed-sum" or "oracle"
    std::vector<std::string> checks;         // cross-checks that ran (automatic policy)

    const Natural& at(Quantity q) const { return values.at(q); }
    bool has(Quantity q) const { return values.count(q) > 0; }
};

namespace detail {

// In-scope limits for the automatic policy's opportunistic cross-checks.
inline constexpr int auto_sum_cell_limit = 16;

inline Natural closed_sum_h(GridShape s) {
    return s.rows % 2 == 0 ? sum_h_even(s) : sum_h_odd(s);
}

inline Natural closed_sum_r(GridShape s) {
    if (s.rows % 2 == 0) return closed_sum_h(s);
    if (s.cols % 2 == 0) return closed_sum_h(s.transposed());
    return sum_r_odd_odd(s);
}

inline Natural closed_sum_s(GridShape s) {
    if (s.rows % 2 != 0 || s.cols % 2 != 0)
        throw UnsupportedMethodError(
            "no closed summation is implemented for S on " + s.str() +
            "; it needs both sides even (use the egf or oracle method)");
    return sum_s_even_even(s);
}

}  // namespace detail

// Computes the requested quantities (plus whatever they depend on) by the
// requested policy.  The automatic policy computes by generating functions
// and re-derives every value by brute force and by closed summation where
// those fit, failing loudly on any disagreement.  A fixed policy never
// substitutes another method: shapes outside its reach are errors.
inline CountReport count_report(GridShape shape, MethodPolicy policy,
                                std::set<Quantity> quantities = {},
                                OracleLimit limit = {}) {
    CountReport report;
    report.shape = shape;

    if (quantities.empty()) {  // default: everything the shape supports
        quantities = all_quantities;
        if (shape.square()) {
            quantities.erase(Quantity::W);
            quantities.erase(Quantity::C);
        }
    }
    for (Quantity q : {Quantity::W, Quantity::C})
        if (quantities.count(q) && shape.square())
            throw SquareShapeError(std::string(1, quantity_letter(q)) +
                                   " is not defined for square shapes; got " + shape.str());

    // closure over dependencies: W and C are combinations of the five counts
    std::set<Quantity> needed = quantities;
    if (needed.count(Quantity::W) || needed.count(Quantity::C))
        needed.insert({Quantity::P, Quantity::H, Quantity::V, Quantity::R});
    if (needed.count(Quantity::C)) needed.insert(Quantity::S);

    const char* method_name = policy == MethodPolicy::oracle ? "oracle"
                              : policy == MethodPolicy::closed_sum ? "closed-sum"
                                                                   : "egf";
    auto primary = [&](Quantity q) -> Natural {
        using enum SymmetryKind;
        switch (policy) {
            case MethodPolicy::oracle:
                switch (q) {
                    case Quantity::P: return count_all(shape, limit);
                    case Quantity::H: return count_fixed(shape, {horizontal_reflect}, limit);
                    case Quantity::V: return count_fixed(shape, {vertical_reflect}, limit);
                    case Quantity::R: return count_fixed(shape, {rotate180}, limit);
                    case Quantity::S:
                        return count_fixed(shape, {horizontal_reflect, vertical_reflect}, limit);
                    case Quantity::W: return count_orbits(shape, limit);
                    default: break;  // C is derived below
                }
                break;
            case MethodPolicy::closed_sum:
                switch (q) {
                    case Quantity::P: return sum_p(shape);
                    case Quantity::H: return detail::closed_sum_h(shape);
                    case Quantity::V: return detail::closed_sum_h(shape.transposed());
                    case Quantity::R: return detail::closed_sum_r(shape);
                    case Quantity::S: return detail::closed_sum_s(shape);
                    default: break;  // W and C are derived below
                }
                break;
            default:
                switch (q) {
                    case Quantity::P: return count_p(shape);
                    case Quantity::H: return count_h(shape);
                    case Quantity::V: return count_v(shape);
                    case Quantity::R: return count_r(shape);
                    case Quantity::S: return count_s(shape);
                    case Quantity::W: return count_w(shape);
                    case Quantity::C: return count_c(shape);
                }
        }
        // W and C under non-egf policies: combine the five counts, which are
        // guaranteed present by the dependency closure.
        if (q == Quantity::W) {
            Natural sum = report.at(Quantity::P) + report.at(Quantity::H) +
                          report.at(Quantity::V) + report.at(Quantity::R);
            if (sum % 4 != 0)
                throw InconsistencyError("W" + shape.str() + ": fixed-count total " +
                                         sum.str() + " is not divisible by 4");
            return sum / 4;
        }
        Integer c = Integer(report.at(Quantity::P)) + 2 * Integer(report.at(Quantity::S)) -
                    Integer(report.at(Quantity::H)) - Integer(report.at(Quantity::V)) -
                    Integer(report.at(Quantity::R));
        if (c < 0 || c % 4 != 0)
            throw InconsistencyError("C" + shape.str() + ": inclusion-exclusion gave " +
                                     c.str());
        return Natural(c);
    };

    for (Quantity q : all_quantities) {  // definition order keeps W/C last
        if (!needed.count(q)) continue;
        if ((q == Quantity::W || q == Quantity::C) && shape.square()) continue;
        report.values[q] = primary(q);
        report.method[q] = method_name;
    }

    if (policy == MethodPolicy::automatic) {
        using enum SymmetryKind;
        auto confirm = [&](Quantity q, const std::string& how, auto&& recompute) {
            if (!report.has(q)) return;
            Natural again = recompute();
            if (report.at(q) != again)
                throw InconsistencyError(std::string(1, quantity_letter(q)) + shape.str() +
                                         ": egf gave " + report.at(q).str() + " but " + how +
                                         " gave " + again.str());
            report.checks.push_back(std::string(1, quantity_letter(q)) + " confirmed by " +
                                    how);
        };
        if (shape.cells() <= limit.max_cells) {
            confirm(Quantity::P, "oracle", [&] { return count_all(shape, limit); });
            confirm(Quantity::H, "oracle",
                    [&] { return count_fixed(shape, {horizontal_reflect}, limit); });
            confirm(Quantity::V, "oracle",
                    [&] { return count_fixed(shape, {vertical_reflect}, limit); });
            confirm(Quantity::R, "oracle",
                    [&] { return count_fixed(shape, {rotate180}, limit); });
            confirm(Quantity::S, "oracle", [&] {
                return count_fixed(shape, {horizontal_reflect, vertical_reflect}, limit);
            });
            confirm(Quantity::W, "oracle", [&] { return count_orbits(shape, limit); });
        }
        if (shape.cells() <= detail::auto_sum_cell_limit) {
            confirm(Quantity::P, "closed summation", [&] { return sum_p(shape); });
            confirm(Quantity::H, "closed summation", [&] { return detail::closed_sum_h(shape); });
            confirm(Quantity::V, "closed summation",
                    [&] { return detail::closed_sum_h(shape.transposed()); });
            confirm(Quantity::R, "closed summation", [&] { return detail::closed_sum_r(shape); });
            if (shape.rows % 2 == 0 && shape.cols % 2 == 0)
                confirm(Quantity::S, "closed summation", [&] { return sum_s_even_even(shape); });
        }
    }

    // structural invariants, on whatever subset is present
    auto have = [&](std::initializer_list<Quantity> qs) {
        for (Quantity q : qs)
            if (!report.has(q)) return false;
        return true;
    };
    if (have({Quantity::P, Quantity::H, Quantity::V, Quantity::R})) {
        Natural sum = report.at(Quantity::P) + report.at(Quantity::H) +
                      report.at(Quantity::V) + report.at(Quantity::R);
        if (!shape.square() && sum % 4 != 0)
            throw InconsistencyError("fixed-count total " + sum.str() +
                                     " is not divisible by 4 at " + shape.str());
        if (report.has(Quantity::W) && report.at(Quantity::W) * 4 != sum)
            throw InconsistencyError("W" + shape.str() + " is not the four-count average");
        if (have({Quantity::S})) {
            const Natural& s = report.at(Quantity::S);
            for (Quantity q : {Quantity::H, Quantity::V, Quantity::R})
                if (s > report.at(q) || report.at(q) > report.at(Quantity::P))
                    throw InconsistencyError("count ordering violated at " + shape.str());
            if (report.has(Quantity::C) && report.has(Quantity::W)) {
                // W = C/4 + ((H-S)+(V-S)+(R-S))/2 + S, the orbit-size split
                Natural lhs = report.at(Quantity::W) * 4;
                Natural rhs = report.at(Quantity::C) +
                              (report.at(Quantity::H) + report.at(Quantity::V) +
                               report.at(Quantity::R) - 3 * s) *
                                  2 +
                              s * 4;
                if (lhs != rhs)
                    throw InconsistencyError("orbit-size split violated at " + shape.str());
            }
        }
    }
    return report;
}

}  // namespace wordrep

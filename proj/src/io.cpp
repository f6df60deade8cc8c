#include "polybetti/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace polybetti {

nlohmann::json cells_to_json(const CellCollection& c) {
    nlohmann::json j;
    j["cells"] = nlohmann::json::array();
    for (const auto& cell : c.cells()) j["cells"].push_back({cell.x, cell.y});
    return j;
}

nlohmann::json minor_to_json(const InnerMinor& f) {
    nlohmann::json j;
    j["interval"] = {{f.lo.x, f.lo.y}, {f.hi.x, f.hi.y}};
    j["plus"] = {{f.plus[0].x, f.plus[0].y}, {f.plus[1].x, f.plus[1].y}};
    j["minus"] = {{f.minus[0].x, f.minus[0].y}, {f.minus[1].x, f.minus[1].y}};
    return j;
}

nlohmann::json hvector_to_json(const HVector& h) {
    nlohmann::json j;
    j["h"] = h.h;
    j["krull_dim"] = h.krullDim;
    return j;
}

std::string hvector_to_text(const HVector& h) {
    std::string s = "(";
    for (std::size_t i = 0; i < h.h.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(h.h[i]);
    }
    return s + ")";
}

nlohmann::json betti_to_json(const BettiTable& t) {
    nlohmann::json j;
    j["field"] = t.fieldName;
    j["degree_cap"] = t.degreeCap;
    j["multigraded"] = nlohmann::json::array();
    for (const auto& e : t.multigraded) {
        nlohmann::json row;
        row["i"] = e.i;
        row["h"] = e.h.v;
        row["total_degree"] = e.h.total;
        row["beta"] = e.beta;
        j["multigraded"].push_back(std::move(row));
    }
    j["totals_algebra"] = nlohmann::json::array();
    for (const auto& [key, val] : t.totals)
        j["totals_algebra"].push_back({{"i", key.first}, {"j", key.second}, {"beta", val}});
    j["totals_ideal"] = nlohmann::json::array();
    for (const auto& [key, val] : t.totals)
        if (key.first >= 1)
            j["totals_ideal"].push_back({{"i", key.first - 1}, {"j", key.second}, {"beta", val}});
    return j;
}

std::string betti_to_text(const BettiTable& t) {
    std::ostringstream out;
    out << "Betti numbers of the inner-minor ideal over " << t.fieldName
        << " (computed up to total degree " << t.degreeCap << ")\n";
    int maxI = 0, maxJ = t.degreeCap;
    for (const auto& [key, val] : t.totals)
        if (key.first >= 1) maxI = std::max(maxI, key.first - 1);
    out << std::setw(6) << "i\\j";
    for (int j = 2; j <= maxJ; ++j) out << std::setw(8) << j;
    out << "\n";
    for (int i = maxI; i >= 0; --i) {
        out << std::setw(6) << i;
        for (int j = 2; j <= maxJ; ++j) {
            long long b = t.ideal_total(i, j);
            if (b == 0)
                out << std::setw(8) << ".";
            else
                out << std::setw(8) << b;
        }
        out << "\n";
    }
    return out.str();
}

nlohmann::json report_to_json(const CrossReport& r) {
    nlohmann::json j;
    j["all_agree"] = r.all_agree();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json row;
        row["name"] = c.name;
        row["applicable"] = c.applicable;
        if (c.applicable) {
            row["predicate"] = c.predicate;
            row["oracle"] = c.oracle;
            row["agree"] = c.agree;
            row["details"] = c.details;
        }
        j["checks"].push_back(std::move(row));
    }
    return j;
}

std::string report_to_text(const CrossReport& r) {
    std::ostringstream out;
    out << std::left << std::setw(20) << "check" << std::setw(12) << "predicate" << std::setw(12)
        << "oracle" << std::setw(18) << "verdict" << "details\n";
    for (const auto& c : r.checks) {
        out << std::left << std::setw(20) << c.name;
        if (!c.applicable) {
            out << "n/a\n";
            continue;
        }
        out << std::setw(12) << c.predicate << std::setw(12) << c.oracle << std::setw(18)
            << (c.agree ? "agree" : "MISMATCH") << c.details << "\n";
    }
    return out.str();
}

nlohmann::json sweep_to_json(const SweepReport& r) {
    nlohmann::json j;
    j["theorem"] = r.theorem;
    j["bound"] = r.bound;
    j["universe_size"] = r.universeSize;
    j["seconds"] = r.seconds;
    j["counters"] = r.counters;
    j["mismatches"] = nlohmann::json::array();
    for (const auto& m : r.mismatches)
        j["mismatches"].push_back({{"item", m.item}, {"detail", m.detail}});
    return j;
}

std::string sweep_to_text(const SweepReport& r) {
    std::ostringstream out;
    out << "theorem " << r.theorem << ", bound " << r.bound << ": " << r.universeSize
        << " items, " << r.mismatches.size() << " mismatches ("
        << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
    for (const auto& [k, v] : r.counters) out << "  " << k << " = " << v << "\n";
    for (const auto& m : r.mismatches)
        out << "  MISMATCH " << m.item << ": " << m.detail << "\n";
    return out.str();
}

} // namespace polybetti

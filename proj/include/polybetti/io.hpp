#pragma once

#include <string>

#include <json.hpp>

#include "polybetti/cells.hpp"
#include "polybetti/classify.hpp"
#include "polybetti/homology.hpp"
#include "polybetti/lattice.hpp"
#include "polybetti/toric.hpp"
#include "polybetti/verify.hpp"

namespace polybetti {

nlohmann::json cells_to_json(const CellCollection& c);
nlohmann::json minor_to_json(const InnerMinor& f);
nlohmann::json betti_to_json(const BettiTable& t);
nlohmann::json report_to_json(const CrossReport& r);
nlohmann::json sweep_to_json(const SweepReport& r);
nlohmann::json hvector_to_json(const HVector& h);

// Ideal-indexed Betti table, one row per homological index, columns by total
// degree, rows printed top index first so beta_0 sits bottom-left.
std::string betti_to_text(const BettiTable& t);
// Fixed-width agreement matrix, one row per check.
std::string report_to_text(const CrossReport& r);
std::string sweep_to_text(const SweepReport& r);
std::string hvector_to_text(const HVector& h);

} // namespace polybetti

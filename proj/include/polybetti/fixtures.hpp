#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polybetti/cells.hpp"
#include "polybetti/lattice.hpp"

namespace polybetti {

// One corpus entry: a named cell collection or poset together with its
// expected verdicts.  Each expectation is {"value": ..., "source":
// "literature"|"definition"|"computed"}.
struct Fixture {
    std::string name;
    std::optional<CellCollection> cells;
    std::optional<Poset> poset;
    nlohmann::json expect;

    bool is_poset() const { return poset.has_value(); }
};

class FixtureCorpus {
public:
    explicit FixtureCorpus(const std::string& dir);

    const std::vector<Fixture>& all() const { return fixtures_; }
    const Fixture& by_name(const std::string& name) const;
    std::vector<const Fixture*> cell_fixtures() const;
    std::vector<const Fixture*> poset_fixtures() const;

private:
    std::vector<Fixture> fixtures_;
};

// Default corpus location: $POLYBETTI_FIXTURES, else ./fixtures/v1.
std::string default_fixture_dir();

} // namespace polybetti

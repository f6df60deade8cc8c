#include "polybetti/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polybetti {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

FixtureCorpus::FixtureCorpus(const std::string& dir) {
    nlohmann::json manifest = nlohmann::json::parse(slurp(dir + "/corpus.json"));
    for (const auto& entry : manifest["fixtures"]) {
        const std::string kind = entry["kind"].get<std::string>();
        const std::string name = entry["name"].get<std::string>();
        if (kind == "cells") {
            Fixture f;
            f.name = name;
            f.cells = parse_and_normalize(slurp(dir + "/" + entry["file"].get<std::string>()));
            f.expect = entry["expect"];
            fixtures_.push_back(std::move(f));
        } else if (kind == "poset") {
            Fixture f;
            f.name = name;
            f.poset = parse_poset_json(slurp(dir + "/" + entry["file"].get<std::string>()));
            f.expect = entry["expect"];
            fixtures_.push_back(std::move(f));
        } else if (kind == "cells_family") {
            // base cells plus every subset of the optional cells
            std::vector<GridPoint> base, optional;
            for (const auto& e : entry["base_cells"])
                base.push_back({e[0].get<int>(), e[1].get<int>()});
            for (const auto& e : entry["optional_cells"])
                optional.push_back({e[0].get<int>(), e[1].get<int>()});
            const std::size_t variants = 1ull << optional.size();
            for (std::size_t mask = 0; mask < variants; ++mask) {
                std::vector<GridPoint> cells = base;
                for (std::size_t b = 0; b < optional.size(); ++b)
                    if ((mask >> b) & 1u) cells.push_back(optional[b]);
                Fixture f;
                char suffix[24];
                std::snprintf(suffix, sizeof suffix, "_v%02u", static_cast<unsigned>(mask));
                f.name = name + suffix;
                f.cells = CellCollection(std::move(cells));
                f.expect = entry["expect"];
                fixtures_.push_back(std::move(f));
            }
        } else {
            throw std::invalid_argument("unknown fixture kind: " + kind);
        }
    }
}

const Fixture& FixtureCorpus::by_name(const std::string& name) const {
    for (const auto& f : fixtures_)
        if (f.name == name) return f;
    throw std::invalid_argument("no fixture named " + name);
}

std::vector<const Fixture*> FixtureCorpus::cell_fixtures() const {
    std::vector<const Fixture*> out;
    for (const auto& f : fixtures_)
        if (f.cells) out.push_back(&f);
    return out;
}

std::vector<const Fixture*> FixtureCorpus::poset_fixtures() const {
    std::vector<const Fixture*> out;
    for (const auto& f : fixtures_)
        if (f.poset) out.push_back(&f);
    return out;
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("POLYBETTI_FIXTURES")) return env;
    return "fixtures/v1";
}

} // namespace polybetti

// Writes the fixture corpus: complexes, diagrams, labeled graphs and presentations.
#include "tits/artin.hpp"
#include "tits/diagram_fixtures.hpp"
#include "tits/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace tits;

namespace {

void put(const fs::path& p, const nlohmann::json& j) {
    fs::create_directories(p.parent_path());
    std::ofstream(p) << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_fixtures DIR\n";
        return 2;
    }
    fs::path dir = argv[1];
    for (const auto& [name, c] : fixtures::all()) put(dir / (name + ".cx"), complex_to_json(c));
    for (const auto& [name, d] : diagrams::all()) put(dir / "diagrams" / (name + ".json"), diagram_to_json(d));
    put(dir / "diagrams" / "mirror-pair-m4.json", diagram_to_json(diagrams::mirror_pair_m4()));
    put(dir / "diagrams" / "example-a2.json", diagram_to_json(example_A2_diagram()));
    for (int m : {2, 3, 4, 5}) put(dir / "graphs" / ("edge-m" + std::to_string(m) + ".json"), graph_to_json(single_edge(m)));
    put(dir / "graphs" / "triangle-233.json", graph_to_json(triangle(2, 3, 3)));
    put(dir / "graphs" / "triangle-444.json", graph_to_json(triangle(4, 4, 4)));
    put(dir / "graphs" / "path-22.json", graph_to_json(path3(2, 2)));
    put(dir / "graphs" / "path-33.json", graph_to_json(path3(3, 3)));
    for (int m : {4, 5}) put(dir / "presentations" / ("dihedral-m" + std::to_string(m) + ".json"), presentation_to_json(dihedral_artin_presentation(m)));
    put(dir / "presentations" / "commutator.json", presentation_to_json(diagrams::commutator_presentation()));
    put(dir / "presentations" / "b6-violator.json", presentation_to_json({{'a', 'b'}, {"abab", "baba"}}));
    put(dir / "presentations" / "triangle-233.json", presentation_to_json(standard_presentation(triangle(2, 3, 3), Target::artin)));
    return 0;
}

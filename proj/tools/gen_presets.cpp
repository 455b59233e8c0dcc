// Regenerates the preset files from the cylinder models in code.
//   flatkern-gen-presets <preset dir> [<fixture dir>]

#include "flatkern/presets.hpp"

#include <fstream>
#include <iostream>

using namespace flatkern;

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: " << argv[0] << " <preset dir> [<fixture dir>]\n";
    return 2;
  }
  std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& id : preset_ids()) {
    std::ofstream(dir / (id + ".json")) << dump_canonical(to_json(build_preset(id)));
    std::cout << "wrote " << (dir / (id + ".json")).string() << "\n";
  }
  if (argc > 2) {
    std::filesystem::path fx = argv[2];
    std::filesystem::create_directories(fx);
    auto b = hyperelliptic_fixture();
    auto s = Surface::with_defaults(b.diagram, b.cylinders);
    std::ofstream(fx / "hyp-staircase4.json") << dump_canonical(to_json(s));
    std::cout << "wrote " << (fx / "hyp-staircase4.json").string() << "\n";
  }
  return 0;
}

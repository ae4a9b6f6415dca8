#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "support.hpp"

namespace ura::test {

std::uint64_t seed() {
  if (const char* env = std::getenv("URA_SEED")) return std::stoull(env);
  return 20240611ULL;
}

std::string fixture_path(const std::string& name) { return std::string(URA_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RegisterAutomaton load_fixture(const std::string& name) { return parse_automaton(read_file(fixture_path(name))); }

}  // namespace ura::test

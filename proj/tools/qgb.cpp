#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qgb/errors.hpp"
#include "qgb/script.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases over quotient coefficient rings"};
  std::string path;
  std::size_t max_basis = 0, max_pairs = 0;
  bool show_lift = false;
  app.add_option("script", path, "session script (.qgb)")->required();
  app.add_option("--max-basis", max_basis, "cap on the number of basis elements during completion");
  app.add_option("--max-pairs", max_pairs, "cap on the number of processed critical pairs");
  app.add_flag("--show-lift", show_lift, "print the lifted basis next to each result");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "qgb: cannot read " << path << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  qgb::RunOptions opts;
  opts.completion.max_basis = max_basis;
  opts.completion.max_pairs = max_pairs;
  opts.show_lift = show_lift;
  try {
    qgb::run(qgb::parse_script(buf.str()), opts, std::cout);
  } catch (const qgb::ParseError& e) {
    std::cout.flush();
    std::cerr << path << ":" << e.what() << "\n";
    return 1;
  } catch (const qgb::SemanticError& e) {
    std::cout.flush();
    std::cerr << path << ": " << e.what() << "\n";
    return 2;
  } catch (const qgb::ResourceLimitExceeded& e) {
    std::cout.flush();
    std::cerr << path << ": resource limit exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << path << ": internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

#include <iostream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "ncrank/instance.hpp"

using namespace ncrank;

int main(int argc, char** argv) {
  CLI::App app{"deterministic instance generation"};
  std::string out, family = "random";
  int n = 3, m = 3;
  std::int64_t p = 2, bound = 5;
  std::uint64_t seed = 0;
  bool int_field = false;
  app.add_option("--n", n, "matrix size");
  app.add_option("--m", m, "number of summands (ignored by skew)");
  app.add_option("--p", p, "prime modulus for gfp instances");
  app.add_option("--seed", seed, "generator seed");
  app.add_option("--family", family, "random | skew | zerocolumn")
      ->check(CLI::IsMember({"random", "skew", "zerocolumn"}));
  app.add_flag("--int", int_field, "integer entries instead of GF(p)");
  app.add_option("--bound", bound, "entry range [-bound, bound] for --int");
  app.add_option("-o,--output", out, "instance JSON path (default: stdout)");
  CLI11_PARSE(app, argc, argv);
  try {
    InstanceFile inst =
        gen_instance(parse_family(family), n, m, p, seed, int_field, Int(bound));
    if (out.empty())
      std::cout << instance_to_json(inst).dump(2) << "\n";
    else
      save_instance(inst, out);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include <iostream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "ncrank/instance.hpp"

using namespace ncrank;

int main(int argc, char** argv) {
  CLI::App app{"ground-truth oracles: exhaustive MVSP and blow-up rank bounds"};
  std::string file, out, mode = "bruteforce";
  int d = 1, trials = 24, threads = 1;
  std::uint64_t seed = 0;
  app.add_option("file", file, "instance JSON file (gfp field)")->required();
  app.add_option("--mode", mode, "bruteforce | blowup")
      ->check(CLI::IsMember({"bruteforce", "blowup"}));
  app.add_option("--d", d, "blow-up size (blowup mode)");
  app.add_option("--trials", trials, "random substitutions (blowup mode)");
  app.add_option("--seed", seed, "seed for substitutions");
  app.add_option("--threads", threads, "worker cap for trials");
  app.add_option("-o,--output", out, "result JSON path (default: stdout)");
  CLI11_PARSE(app, argc, argv);
  try {
    InstanceFile inst = load_instance(file);
    SymbolicGfp a = instance_to_gfp(inst);
    nlohmann::json j;
    if (mode == "bruteforce")
      j = oracle_bruteforce_result_json(inst, brute_force_mvsp(a));
    else
      j = oracle_blowup_result_json(inst, blowup_rank_bound(a, d, trials, seed, threads));
    if (out.empty())
      std::cout << j.dump(2) << "\n";
    else
      write_json(j, out);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

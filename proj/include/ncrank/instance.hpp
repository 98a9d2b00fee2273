#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "ncrank/valdet.hpp"

namespace ncrank {

/// Raised for any malformed input file; the message distinguishes JSON errors,
/// shape mismatches, and bad field descriptors.
struct InstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceFile {
  int n = 0;
  int m = 0;
  bool int_field = false;
  std::int64_t p = 2;  // gfp instances only
  std::vector<std::vector<std::vector<Int>>> entries;  // m × n × n
  std::string name;
  std::optional<std::uint64_t> seed;
};

InstanceFile instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const InstanceFile& inst);
InstanceFile load_instance(const std::string& path);
void save_instance(const InstanceFile& inst, const std::string& path);

/// Entries reduced mod p (the file may carry any integers).
SymbolicGfp instance_to_gfp(const InstanceFile& inst);
SymbolicInt instance_to_int(const InstanceFile& inst);

enum class GenFamily { Random, Skew, ZeroColumn };
GenFamily parse_family(const std::string& name);

/// Deterministic instance generation; `bound` is the entry range [-bound,
/// bound] for integer instances. The skew family ignores m and emits the
/// n(n-1)/2 matrices E_ij − E_ji; zerocolumn instances are nc-singular by
/// construction.
InstanceFile gen_instance(GenFamily family, int n, int m, std::int64_t p,
                          std::uint64_t seed, bool int_field, const Int& bound);

nlohmann::json ncrank_result_json(const InstanceFile& inst, const SolverState& st,
                                  const FrCertificate& cert, const SolverConfig& cfg);
nlohmann::json ncsingular_result_json(const InstanceFile& inst, const ValDetResult& res,
                                      std::int64_t p);
nlohmann::json oracle_bruteforce_result_json(const InstanceFile& inst,
                                             const BruteForceResult& res);
nlohmann::json oracle_blowup_result_json(const InstanceFile& inst,
                                         const RankWitness& w);

/// Re-verifies an ncrank result against its instance: S and T invertible, the
/// r×s block of every S·A_i·T exactly zero, and 2n−r−s equal to the reported
/// rank. Throws InstanceError on any violation.
void verify_ncrank_result(const nlohmann::json& result, const InstanceFile& inst);

void write_json(const nlohmann::json& j, const std::string& path);
nlohmann::json read_json(const std::string& path);

}  // namespace ncrank

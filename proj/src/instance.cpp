#include "ncrank/instance.hpp"

#include <nlohmann/json.hpp>
#include <fstream>
#include <random>

namespace ncrank {

using nlohmann::json;

namespace {

constexpr std::int64_t kJsonIntMax = (std::int64_t{1} << 53) - 1;

json encode_int(const Int& v) {
  if (abs(v) <= kJsonIntMax) return static_cast<std::int64_t>(v);
  return v.str();
}

Int decode_int(const json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw InstanceError(std::string("invalid integer string in ") + what);
    }
  }
  throw InstanceError(std::string("expected integer (number or string) in ") + what);
}

json encode_matrix_int(const Matrix<IntRing>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(encode_int(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode_matrix_gfp(const GfpMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

InstanceFile instance_from_json(const json& j) {
  InstanceFile inst;
  if (!j.is_object()) throw InstanceError("instance is not a JSON object");
  if (j.value("schema", "") != "v1") throw InstanceError("unknown schema version");
  if (!j.contains("n") || !j.contains("m") || !j.contains("field") ||
      !j.contains("matrices"))
    throw InstanceError("missing required instance key (n, m, field, matrices)");
  inst.n = j.at("n").get<int>();
  inst.m = j.at("m").get<int>();
  if (inst.n < 1 || inst.m < 1) throw InstanceError("n and m must be >= 1");
  const json& field = j.at("field");
  if (field.contains("gfp")) {
    inst.int_field = false;
    inst.p = field.at("gfp").get<std::int64_t>();
    if (!is_prime(inst.p)) throw InstanceError("field gfp modulus is not prime");
  } else if (field.contains("int") && field.at("int").get<bool>()) {
    inst.int_field = true;
  } else {
    throw InstanceError("field descriptor must be {\"gfp\": p} or {\"int\": true}");
  }
  const json& mats = j.at("matrices");
  if (!mats.is_array() || static_cast<int>(mats.size()) != inst.m)
    throw InstanceError("matrices count does not match m");
  for (const auto& mat : mats) {
    if (!mat.is_array() || static_cast<int>(mat.size()) != inst.n)
      throw InstanceError("matrix row count does not match n");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : mat) {
      if (!row.is_array() || static_cast<int>(row.size()) != inst.n)
        throw InstanceError("matrix column count does not match n");
      std::vector<Int> r;
      for (const auto& e : row) r.push_back(decode_int(e, "matrices"));
      rows.push_back(std::move(r));
    }
    inst.entries.push_back(std::move(rows));
  }
  if (!inst.int_field) {
    // gfp entries canonicalize into [0, p) on load
    for (auto& mat : inst.entries)
      for (auto& row : mat)
        for (auto& e : row) {
          e %= inst.p;
          if (e < 0) e += inst.p;
        }
  }
  if (j.contains("meta")) {
    const json& meta = j.at("meta");
    inst.name = meta.value("name", "");
    if (meta.contains("seed")) inst.seed = meta.at("seed").get<std::uint64_t>();
  }
  return inst;
}

json instance_to_json(const InstanceFile& inst) {
  json j;
  j["schema"] = "v1";
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["field"] = inst.int_field ? json{{"int", true}} : json{{"gfp", inst.p}};
  json mats = json::array();
  for (const auto& mat : inst.entries) {
    json rows = json::array();
    for (const auto& row : mat) {
      json r = json::array();
      for (const auto& e : row) r.push_back(encode_int(e));
      rows.push_back(std::move(r));
    }
    mats.push_back(std::move(rows));
  }
  j["matrices"] = std::move(mats);
  if (!inst.name.empty() || inst.seed) {
    json meta;
    if (!inst.name.empty()) meta["name"] = inst.name;
    if (inst.seed) meta["seed"] = *inst.seed;
    j["meta"] = std::move(meta);
  }
  return j;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InstanceError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InstanceError("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

InstanceFile load_instance(const std::string& path) {
  return instance_from_json(read_json(path));
}

void save_instance(const InstanceFile& inst, const std::string& path) {
  write_json(instance_to_json(inst), path);
}

SymbolicGfp instance_to_gfp(const InstanceFile& inst) {
  if (inst.int_field) throw InstanceError("expected a gfp instance");
  GfpField f(inst.p);
  std::vector<GfpMatrix> mats;
  for (const auto& mat : inst.entries) {
    GfpMatrix m(f, inst.n, inst.n);
    for (int i = 0; i < inst.n; ++i)
      for (int j = 0; j < inst.n; ++j) m.at(i, j) = f.from_bigint(mat[i][j]);
    mats.push_back(std::move(m));
  }
  return SymbolicGfp(inst.n, std::move(mats));
}

SymbolicInt instance_to_int(const InstanceFile& inst) {
  if (!inst.int_field) throw InstanceError("expected an int instance");
  IntRing zr;
  std::vector<Matrix<IntRing>> mats;
  for (const auto& mat : inst.entries) {
    Matrix<IntRing> m(zr, inst.n, inst.n);
    for (int i = 0; i < inst.n; ++i)
      for (int j = 0; j < inst.n; ++j) m.at(i, j) = mat[i][j];
    mats.push_back(std::move(m));
  }
  return SymbolicInt(inst.n, std::move(mats));
}

GenFamily parse_family(const std::string& name) {
  if (name == "random") return GenFamily::Random;
  if (name == "skew") return GenFamily::Skew;
  if (name == "zerocolumn") return GenFamily::ZeroColumn;
  throw InstanceError("unknown family: " + name);
}

InstanceFile gen_instance(GenFamily family, int n, int m, std::int64_t p,
                          std::uint64_t seed, bool int_field, const Int& bound) {
  if (n < 1) throw InstanceError("gen: n must be >= 1");
  if (!int_field && !is_prime(p)) throw InstanceError("gen: p is not prime");
  std::mt19937_64 rng(seed);
  std::int64_t b = static_cast<std::int64_t>(bound);
  auto draw = [&]() -> Int {
    if (int_field) return Int(static_cast<std::int64_t>(rng() % (2 * b + 1)) - b);
    return Int(static_cast<std::int64_t>(rng() % p));
  };
  InstanceFile inst;
  inst.n = n;
  inst.int_field = int_field;
  inst.p = p;
  inst.seed = seed;
  auto zeros = [&]() {
    return std::vector<std::vector<Int>>(n, std::vector<Int>(n, Int(0)));
  };
  switch (family) {
    case GenFamily::Random: {
      if (m < 1) throw InstanceError("gen: m must be >= 1");
      inst.m = m;
      inst.name = "random";
      for (int i = 0; i < m; ++i) {
        auto mat = zeros();
        for (auto& row : mat)
          for (auto& e : row) e = draw();
        inst.entries.push_back(std::move(mat));
      }
      break;
    }
    case GenFamily::Skew: {
      inst.m = n * (n - 1) / 2;
      if (inst.m < 1) throw InstanceError("gen: skew family needs n >= 2");
      inst.name = "skew";
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          auto mat = zeros();
          mat[i][j] = 1;
          mat[j][i] = -1;
          inst.entries.push_back(std::move(mat));
        }
      if (!int_field)
        for (auto& mat : inst.entries)
          for (auto& row : mat)
            for (auto& e : row)
              if (e < 0) e += p;
      break;
    }
    case GenFamily::ZeroColumn: {
      if (m < 1) throw InstanceError("gen: m must be >= 1");
      inst.m = m;
      inst.name = "zerocolumn";
      for (int i = 0; i < m; ++i) {
        auto mat = zeros();
        for (auto& row : mat)
          for (int c = 1; c < n; ++c) row[c] = draw();
        inst.entries.push_back(std::move(mat));
      }
      break;
    }
  }
  return inst;
}

json ncrank_result_json(const InstanceFile& inst, const SolverState& st,
                        const FrCertificate& cert, const SolverConfig& cfg) {
  json j;
  j["schema"] = "v1";
  j["command"] = "ncrank";
  j["instance"] = instance_to_json(inst);
  j["nc_rank"] = st.best->value;
  j["certified"] = st.certified;
  j["certificate"] = {{"r", cert.r},
                      {"s", cert.s},
                      {"S", encode_matrix_gfp(cert.s_mat)},
                      {"T", encode_matrix_gfp(cert.t_mat)},
                      {"X_basis", encode_matrix_gfp(st.best->x.basis())},
                      {"Y_basis", encode_matrix_gfp(st.best->y.primal().basis())}};
  json sub = json::array();
  for (const auto& v : st.lb_witness.substitution) sub.push_back(v);
  j["lower_bound"] = {{"d", st.lb_witness.d},
                      {"e", st.lb_witness.e},
                      {"rank", st.lb_witness.achieved_rank},
                      {"bound", st.lb_witness.bound},
                      {"trials", st.lb_witness.trials},
                      {"seed", st.lb_witness.seed},
                      {"substitution", std::move(sub)}};
  json gt = json::array(), bv = json::array(), bits = json::array();
  for (const auto& c : st.trace) {
    gt.push_back(Rat(c.g_tilde).str());
    bv.push_back(c.best_value);
    bits.push_back(c.max_denom_bits);
  }
  j["trace"] = {{"cycles", st.cycles},
                {"g_tilde", std::move(gt)},
                {"best_value", std::move(bv)},
                {"max_denom_bits", std::move(bits)}};
  j["config"] = {{"epsilon_sc", cfg.epsilon_sc.str()},
                 {"perturbation", cfg.perturbation.str()},
                 {"penalty", encode_int(cfg.penalty)},
                 {"max_cycles", cfg.max_cycles},
                 {"certify_dmax", cfg.certify_dmax},
                 {"trials", cfg.trials},
                 {"threads", cfg.threads},
                 {"seed", cfg.seed}};
  return j;
}

json ncsingular_result_json(const InstanceFile& inst, const ValDetResult& res,
                            std::int64_t p) {
  json j;
  j["schema"] = "v1";
  j["command"] = "ncsingular";
  j["instance"] = instance_to_json(inst);
  j["p"] = p;
  j["verdict"] = res.verdict == NcVerdict::Regular     ? "regular"
                 : res.verdict == NcVerdict::Singular ? "singular"
                                                      : "inconclusive";
  if (res.verdict == NcVerdict::Regular) j["vp_det"] = encode_int(res.vp_det);
  j["bound"] = encode_int(res.bound);
  json steps = json::array();
  for (const auto& s : res.transcript)
    steps.push_back(
        {{"r", s.r}, {"s", s.s}, {"objective", encode_int(s.objective_after)}});
  j["transcript"] = std::move(steps);
  json final_mats = json::array();
  for (const auto& ai : res.final_a.mats) final_mats.push_back(encode_matrix_int(ai));
  j["final_matrices"] = std::move(final_mats);
  if (res.verdict == NcVerdict::Regular) {
    json leading = json::array();
    for (const auto& ai : leading_matrix(res.final_a, p).mats)
      leading.push_back(encode_matrix_gfp(ai));
    json cert = {{"leading_matrices", std::move(leading)}};
    if (res.regularity_witness) {
      const RankWitness& w = *res.regularity_witness;
      json sub = json::array();
      for (const auto& v : w.substitution) sub.push_back(v);
      cert["witness"] = {{"d", w.d},           {"e", w.e},
                         {"rank", w.achieved_rank}, {"bound", w.bound},
                         {"trials", w.trials}, {"seed", w.seed},
                         {"substitution", std::move(sub)}};
    }
    j["certificate"] = std::move(cert);
  }
  return j;
}

json oracle_bruteforce_result_json(const InstanceFile& inst,
                                   const BruteForceResult& res) {
  json j;
  j["schema"] = "v1";
  j["command"] = "oracle";
  j["mode"] = "bruteforce";
  j["instance"] = instance_to_json(inst);
  j["nc_rank"] = res.nc_rank;
  j["X_basis"] = encode_matrix_gfp(res.best.x.basis());
  j["Y_basis"] = encode_matrix_gfp(res.best.y.primal().basis());
  return j;
}

json oracle_blowup_result_json(const InstanceFile& inst, const RankWitness& w) {
  json j;
  j["schema"] = "v1";
  j["command"] = "oracle";
  j["mode"] = "blowup";
  j["instance"] = instance_to_json(inst);
  json sub = json::array();
  for (const auto& v : w.substitution) sub.push_back(v);
  j["witness"] = {{"d", w.d},           {"e", w.e},
                  {"rank", w.achieved_rank}, {"bound", w.bound},
                  {"trials", w.trials}, {"seed", w.seed},
                  {"substitution", std::move(sub)}};
  return j;
}

void verify_ncrank_result(const json& result, const InstanceFile& inst) {
  if (!result.contains("certificate")) throw InstanceError("result has no certificate");
  SymbolicGfp a = instance_to_gfp(inst);
  GfpField f(inst.p);
  const json& cert = result.at("certificate");
  int r = cert.at("r").get<int>(), s = cert.at("s").get<int>();
  auto decode = [&](const json& rows) {
    GfpMatrix m(f, static_cast<int>(rows.size()),
                static_cast<int>(rows.empty() ? 0 : rows.front().size()));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = f.from_int(rows.at(i).at(j).get<std::int64_t>());
    return m;
  };
  GfpMatrix s_mat = decode(cert.at("S")), t_mat = decode(cert.at("T"));
  if (s_mat.rows() != inst.n || s_mat.cols() != inst.n || t_mat.rows() != inst.n ||
      t_mat.cols() != inst.n)
    throw InstanceError("certificate matrices have wrong shape");
  if (rank(s_mat) != inst.n || rank(t_mat) != inst.n)
    throw InstanceError("certificate transformations are singular");
  for (const auto& ai : a.mats) {
    GfpMatrix prod = s_mat * ai * t_mat;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < s; ++j)
        if (prod.at(i, j) != 0) throw InstanceError("certificate zero block violated");
  }
  if (result.at("nc_rank").get<int>() != 2 * inst.n - r - s)
    throw InstanceError("certificate value does not match reported nc_rank");
}

}  // namespace ncrank

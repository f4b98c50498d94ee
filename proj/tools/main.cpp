#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dualcanon/pipeline.hpp"
#include "dualcanon/serialization.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace dualcanon;

constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitNotSimilar = 4;

DualMatrix load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_document(buf.str());
}

json rational_rows(const KMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_json(const DualMatrix& a) {
  return json{{"n", a.order()},
              {"part0", rational_rows(a.part0())},
              {"part1", rational_rows(a.part1())}};
}

std::uint64_t effective_seed(std::uint64_t cli_seed, bool cli_set) {
  if (cli_set) return cli_seed;
  if (const char* env = std::getenv("DUALCANON_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 1;
}

int cmd_canon(const std::string& file) {
  CanonicalForm cf = canonical_small(load(file));
  json out{{"family", family_name(cf.family)},
           {"matrix", matrix_json(cf.matrix)},
           {"witness", matrix_json(cf.witness.D)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_similar(const std::string& fa, const std::string& fb, int trials,
                std::uint64_t seed) {
  SimilarResult r = similar(load(fa), load(fb), trials, seed);
  json out;
  switch (r.verdict) {
    case Verdict::SIMILAR: out["verdict"] = "SIMILAR"; break;
    case Verdict::NOT_SIMILAR: out["verdict"] = "NOT_SIMILAR"; break;
    case Verdict::PROBABLY_NOT_SIMILAR:
      out["verdict"] = "PROBABLY_NOT_SIMILAR";
      break;
  }
  out["trials"] = r.trials;
  if (r.witness) out["witness"] = matrix_json(r.witness->D);
  std::cout << out.dump(2) << "\n";
  return r.verdict == Verdict::NOT_SIMILAR ? kExitNotSimilar : 0;
}

int cmd_split(const std::string& file) {
  auto [blocks, w] = spectral_split(load(file));
  json jblocks = json::array();
  for (const auto& b : blocks)
    jblocks.push_back(json{{"eigenvalue", b.eigenvalue.str()},
                           {"size", b.size},
                           {"block", matrix_json(b.block)}});
  json out{{"blocks", std::move(jblocks)}, {"witness", matrix_json(w.D)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_mucanon(const std::string& file) {
  DualMatrix a = load(file);
  if (!a.part1().is_zero())
    throw ParseError("mucanon expects a classical matrix (part1 = 0)");
  MuCanonResult r = mu_canonical(a.part0());
  json out{{"canonical", rational_rows(r.Rm)},
           {"C", rational_rows(r.witness.pair.C)},
           {"Ctilde", rational_rows(r.witness.pair.Ctilde)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_oracle(const std::string& fa, const std::string& fb) {
  DualMatrix a = load(fa), b = load(fb);
  if (!a.part1().is_zero() || !b.part1().is_zero())
    throw ParseError("oracle expects classical matrices (part1 = 0)");
  bool sim = mu_similar_oracle(a.part0(), b.part0());
  std::cout << json{{"mu_similar", sim}}.dump(2) << "\n";
  return 0;
}

int cmd_fuzz(const std::string& file, std::uint64_t seed) {
  std::cerr << "seed: " << seed << "\n";
  std::cout << write_matrix_document(fuzz_conjugate(load(file), seed))
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact canonical forms and similarity over the dual numbers Q[z]/(z^2)"};
  app.require_subcommand(1);

  std::string file_a, file_b;
  int trials = 64;
  std::uint64_t seed = 1;
  bool seed_set = false;

  auto* canon = app.add_subcommand("canon", "canonical form, order <= 3");
  canon->add_option("file", file_a)->required();

  auto* sim = app.add_subcommand("similar", "decide similarity");
  sim->add_option("fileA", file_a)->required();
  sim->add_option("fileB", file_b)->required();
  sim->add_option("--trials", trials, "samples for the randomized oracle");
  sim->add_option("--seed", seed)->each([&](const std::string&) {
    seed_set = true;
  });

  auto* split = app.add_subcommand("split", "spectral block splitting");
  split->add_option("file", file_a)->required();

  auto* mucanon =
      app.add_subcommand("mucanon", "mu-similarity canonical form over Q");
  mucanon->add_option("file", file_a)->required();

  auto* oracle =
      app.add_subcommand("oracle", "mu-similarity linear oracle over Q");
  oracle->add_option("fileA", file_a)->required();
  oracle->add_option("fileB", file_b)->required();

  auto* fuzz = app.add_subcommand("fuzz", "seeded random conjugate");
  fuzz->add_option("file", file_a)->required();
  fuzz->add_option("--seed", seed)->each([&](const std::string&) {
    seed_set = true;
  });

  CLI11_PARSE(app, argc, argv);

  try {
    std::uint64_t s = effective_seed(seed, seed_set);
    if (canon->parsed()) return cmd_canon(file_a);
    if (sim->parsed()) return cmd_similar(file_a, file_b, trials, s);
    if (split->parsed()) return cmd_split(file_a);
    if (mucanon->parsed()) return cmd_mucanon(file_a);
    if (oracle->parsed()) return cmd_oracle(file_a, file_b);
    if (fuzz->parsed()) return cmd_fuzz(file_a, s);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IrrationalSpectrum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const UnsupportedOrder& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

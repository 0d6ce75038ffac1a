// Copyright 2026 The Octopus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "octopus/crypto/hash.hpp"
#include "octopus/harness/config.hpp"
#include "octopus/harness/scenario.hpp"

namespace {

using octopus::harness::ScenarioConfig;

struct ScenarioFlags {
  std::string config_file;
  std::map<std::string, std::string> values;
  bool lie_sum = false, bad_query = false, impostor = false, replay_proof = false, corrupt_response = false;
};

void add_scenario_flags(CLI::App* app, ScenarioFlags& f) {
  app->add_option("--config", f.config_file, "key=value config file");
  const std::pair<const char*, const char*> keys[] = {
      {"lenders", "number of lenders"},
      {"shape", "query shape, e.g. 3x4"},
      {"s", "replace iteration"},
      {"sparsity", "fraction of slots each lender fills"},
      {"epsilon", "privacy budget epsilon"},
      {"delta", "privacy budget delta"},
      {"k", "queries per borrower"},
      {"query", "sum | count | variance | cmp_public | cmp_private"},
      {"threshold", "public threshold for cmp_public"},
      {"range_bits", "range proof width"},
      {"max_amount", "largest loan amount"},
      {"key_bits", "Paillier modulus bits"},
      {"pedersen_p_bits", "Pedersen group modulus bits"},
      {"pedersen_q_bits", "Pedersen subgroup order bits"},
      {"seed", "rng seed (OCTO_SEED overrides)"},
      {"transport", "inproc | tcp"},
      {"date", "session date"},
      {"noise_cache", "pregenerated noise file"},
      {"noise_index", "batch index within the noise file"},
  };
  for (const auto& [key, help] : keys) {
    std::string flag = "--" + std::string(key);
    for (auto& ch : flag) ch = ch == '_' ? '-' : ch;
    if (key == std::string("s")) flag += ",--replace-iteration";
    if (key == std::string("k")) flag += ",--k-repeats";
    std::string k = key;
    app->add_option_function<std::string>(flag, [&f, k](const std::string& v) { f.values[k] = v; }, help);
  }
  app->add_flag("--lie-sum", f.lie_sum, "borrower inflates its claimed total");
  app->add_flag("--bad-query", f.bad_query, "originator sends a query with two 1s");
  app->add_flag("--impostor", f.impostor, "borrower uses a wrong exchanger secret");
  app->add_flag("--replay-proof", f.replay_proof, "borrower replays a proof from another session");
  app->add_flag("--corrupt-response", f.corrupt_response, "one lender truncates its response");
}

ScenarioConfig resolve(const ScenarioFlags& f) {
  ScenarioConfig cfg;
  if (!f.config_file.empty()) cfg.apply(octopus::harness::load_key_values(f.config_file));
  cfg.apply(f.values);
  cfg.adversary.lie_sum |= f.lie_sum;
  cfg.adversary.bad_query |= f.bad_query;
  cfg.adversary.impostor |= f.impostor;
  cfg.adversary.replay_proof |= f.replay_proof;
  cfg.adversary.corrupt_response |= f.corrupt_response;
  if (auto seed = octopus::harness::seed_from_env()) cfg.seed = *seed;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Private loan-stacking queries over committed lender databases"};
  app.require_subcommand(1);

  ScenarioFlags run_flags;
  std::string csv_path;
  auto* run = app.add_subcommand("run", "run one scenario and print its report");
  add_scenario_flags(run, run_flags);
  run->add_option("--csv", csv_path, "write the CSV report here");

  std::vector<std::string> bench_shapes{"10x10x10x10", "100x100"};
  size_t bench_bits = 1024;
  uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench-sizes", "measured vs predicted query and response sizes");
  bench->add_option("--shape", bench_shapes, "shapes to measure, e.g. 100x100")->expected(1, -1);
  bench->add_option("--key-bits", bench_bits, "Paillier modulus bits");
  bench->add_option("--seed", bench_seed, "rng seed");

  ScenarioFlags pregen_flags;
  size_t pregen_count = 1;
  std::string pregen_out;
  auto* pregen = app.add_subcommand("pregen-noise", "sample noise batches offline for a scenario key");
  add_scenario_flags(pregen, pregen_flags);
  pregen->add_option("--count", pregen_count, "number of batches");
  pregen->add_option("--out", pregen_out, "output file")->required();

  ScenarioFlags key_flags;
  std::string key_out;
  auto* keygen = app.add_subcommand("keygen", "derive the scenario keys and print their fingerprints");
  add_scenario_flags(keygen, key_flags);
  keygen->add_option("--out", key_out, "write the Paillier public key here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      auto report = octopus::harness::run_scenario(resolve(run_flags));
      std::cout << report.summary();
      if (!csv_path.empty()) {
        std::string csv = report.csv();
        octopus::harness::write_file(csv_path, octopus::ByteSpan(reinterpret_cast<const uint8_t*>(csv.data()), csv.size()));
      } else {
        std::cout << "\n" << report.csv();
      }
    } else if (*bench) {
      std::vector<std::vector<uint32_t>> shapes;
      for (const auto& s : bench_shapes) {
        ScenarioConfig tmp;
        tmp.apply({{"shape", s}});
        shapes.push_back(tmp.shape);
      }
      std::cout << octopus::harness::sizes_csv(octopus::harness::bench_sizes(shapes, bench_bits, bench_seed));
    } else if (*pregen) {
      ScenarioConfig cfg = resolve(pregen_flags);
      auto store = octopus::harness::pregenerate_noise(cfg, pregen_count);
      auto keys = octopus::harness::derive_keys(cfg);
      octopus::harness::write_file(pregen_out, store.serialize(keys.paillier.pk));
      uint64_t total = 0;
      for (const auto& b : store.batches) total += b.batch.responses.size();
      std::cout << "wrote " << store.batches.size() << " batches (" << total << " responses) to " << pregen_out << "\n";
    } else if (*keygen) {
      ScenarioConfig cfg = resolve(key_flags);
      auto keys = octopus::harness::derive_keys(cfg);
      std::cout << "paillier " << keys.paillier.pk.bits << " bits, fingerprint "
                << octopus::to_hex(keys.paillier.pk.fingerprint()) << "\n";
      std::cout << "pedersen p " << octopus::bit_length(keys.pedersen.p) << " bits, q "
                << octopus::bit_length(keys.pedersen.q) << " bits\n";
      if (!key_out.empty()) {
        octopus::ByteWriter w;
        keys.paillier.pk.serialize(w);
        octopus::harness::write_file(key_out, w.view());
      }
    }
  } catch (const octopus::harness::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

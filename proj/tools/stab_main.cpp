// stab: command-line front end over libstab.
//
// Exit codes: 0 success, 1 a check came out negative, 2 usage or input error.
// Results go to stdout as JSON; errors go to stderr as {"error": {...}}.

#include "stab/stab.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kDefaultOracleCap = 12;

int report_error(const std::string& kind, const std::string& message) {
  nlohmann::json j{{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << j.dump(2) << "\n";
  return kExitUsage;
}

struct Failure {
  stab_status status;
};

void check(stab_status s) {
  if (s != STAB_OK) throw Failure{s};
}

struct ConfigDeleter {
  void operator()(stab_config* c) const { stab_config_free(c); }
};
using ConfigPtr = std::unique_ptr<stab_config, ConfigDeleter>;

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ConfigPtr load_config(const std::string& path) {
  const std::string text = read_input(path);
  stab_config* raw = nullptr;
  check(stab_config_parse(text.c_str(), &raw));
  return ConfigPtr(raw);
}

// Takes ownership of a library string and writes it to stdout.
void emit(char* json) {
  std::cout << json << "\n";
  stab_string_free(json);
}

std::size_t oracle_cap_from_env() {
  const char* env = std::getenv("STAB_MAX_SUBSET_SIZE");
  if (!env || !*env) return kDefaultOracleCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw std::runtime_error("STAB_MAX_SUBSET_SIZE must be a positive integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stability computations for point configurations and coherent systems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", stab_version());

  std::string input, g_text, alpha_text, lambdas, which;
  std::int64_t r = 0, d = 0, k = 0, genus = 0, g_int = 0;
  std::uint64_t seed = 7, samples = 200;
  bool oracle = false;
  std::optional<std::uint64_t> gale_seed;

  auto* git = app.add_subcommand("git-classify", "GIT stability class of a weighted configuration");
  git->add_option("--g", g_text, "Weight g as \"p\" or \"p/q\"")->required();
  git->add_option("--input", input, "Configuration JSON file, or - for stdin")->required();
  git->add_flag("--oracle", oracle, "Use exhaustive subset enumeration");

  auto* crit = app.add_subcommand("critical-values", "Virtual critical values of a system type (r, d, k)");
  crit->add_option("-r", r)->required();
  crit->add_option("-d", d)->required();
  crit->add_option("-k", k)->required();

  auto* alpha = app.add_subcommand("alpha-check", "Alpha-stability of the system attached to a configuration");
  alpha->add_option("--g", g_text)->required();
  alpha->add_option("--alpha", alpha_text)->required();
  alpha->add_option("--input", input)->required();

  auto* equiv = app.add_subcommand("equivalence", "Compare GIT and large-alpha verdicts");
  equiv->add_option("--g", g_int)->required();
  equiv->add_option("--input", input)->required();

  auto* destable = app.add_subcommand("destable-example", "Stable configuration whose system is destabilized for small alpha");
  destable->add_option("--genus", genus)->required();
  destable->add_option("--lambdas", lambdas, "Comma separated, g+1 distinct nonzero rationals");

  auto* gale = app.add_subcommand("gale", "Gale transform of a configuration");
  gale->add_option("--input", input)->required();
  gale->add_option("--seed", gale_seed);

  auto* hyper = app.add_subcommand("hypersurface", "Checks on the Segre cubic and Igusa quartic");
  hyper->require_subcommand(1);
  auto* hverify = hyper->add_subcommand("verify", "Run one verification report");
  hverify->add_option("which", which)->required()->check(CLI::IsMember({"segre", "igusa", "duality"}));
  hverify->add_option("--samples", samples);
  hverify->add_option("--seed", seed);

  auto* incidence = app.add_subcommand("incidence", "The 15_3 configuration of singular points and lines");

  auto* verify = app.add_subcommand("verify-all", "Run every acceptance check");
  verify->add_option("--samples", samples);
  verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("Usage", e.what());
  }

  try {
    char* out = nullptr;
    if (git->parsed()) {
      auto cfg = load_config(input);
      const std::size_t cap = oracle ? oracle_cap_from_env() : 0;
      check(stab_git_classify(cfg.get(), g_text.c_str(), oracle ? 1 : 0, cap, &out));
      emit(out);
      return kExitOk;
    }
    if (crit->parsed()) {
      check(stab_critical_values(r, d, k, &out));
      emit(out);
      return kExitOk;
    }
    if (alpha->parsed()) {
      auto cfg = load_config(input);
      check(stab_alpha_check(cfg.get(), g_text.c_str(), alpha_text.c_str(), &out));
      emit(out);
      return kExitOk;
    }
    if (equiv->parsed()) {
      auto cfg = load_config(input);
      int agree = 0;
      check(stab_equivalence(cfg.get(), g_int, &out, &agree));
      emit(out);
      return agree ? kExitOk : kExitNegative;
    }
    if (destable->parsed()) {
      stab_config* raw = nullptr;
      check(stab_destable_example(genus, lambdas.empty() ? nullptr : lambdas.c_str(), &raw));
      ConfigPtr cfg(raw);
      check(stab_config_to_json(cfg.get(), &out));
      emit(out);
      return kExitOk;
    }
    if (gale->parsed()) {
      auto cfg = load_config(input);
      check(stab_gale(cfg.get(), gale_seed ? 1 : 0, gale_seed.value_or(0), &out));
      emit(out);
      return kExitOk;
    }
    if (hverify->parsed()) {
      int passed = 0;
      check(stab_hypersurface_verify(which.c_str(), samples, seed, &out, &passed));
      emit(out);
      return passed ? kExitOk : kExitNegative;
    }
    if (incidence->parsed()) {
      check(stab_incidence(&out));
      emit(out);
      return kExitOk;
    }
    if (verify->parsed()) {
      int passed = 0;
      check(stab_verify_all(samples, seed, &out, &passed));
      emit(out);
      return passed ? kExitOk : kExitNegative;
    }
  } catch (const Failure& f) {
    return report_error(stab_status_name(f.status), stab_last_error());
  } catch (const std::exception& e) {
    return report_error("Input", e.what());
  }
  return report_error("Usage", "no command given");
}

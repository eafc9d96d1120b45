#include "stab/stab.h"

#include "stab/acceptance.hpp"
#include "stab/cohsys.hpp"
#include "stab/gale.hpp"
#include "stab/gitstab.hpp"
#include "stab/json_io.hpp"
#include "stab/modhyp.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

struct stab_config {
  stab::PointConfiguration config;
};

namespace {

thread_local std::string last_error;

stab_status status_of(stab::ErrorCode code) {
  using stab::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return STAB_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return STAB_ERR_PARSE;
    case ErrorCode::Schema: return STAB_ERR_SCHEMA;
    case ErrorCode::IndexOutOfRange: return STAB_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::SizeMismatch: return STAB_ERR_SIZE_MISMATCH;
    case ErrorCode::TooLarge: return STAB_ERR_TOO_LARGE;
    case ErrorCode::Degenerate: return STAB_ERR_DEGENERATE;
    case ErrorCode::FrameDegenerate: return STAB_ERR_FRAME_DEGENERATE;
    case ErrorCode::RowElimination: return STAB_ERR_ROW_ELIMINATION;
    case ErrorCode::SingularPoint: return STAB_ERR_SINGULAR_POINT;
    case ErrorCode::NotOnHypersurface: return STAB_ERR_NOT_ON_HYPERSURFACE;
    case ErrorCode::PencilSearchFailed: return STAB_ERR_PENCIL_SEARCH_FAILED;
  }
  return STAB_ERR_INTERNAL;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
stab_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return STAB_OK;
  } catch (const stab::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return STAB_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return STAB_ERR_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw stab::Error(stab::ErrorCode::InvalidArgument, what);
}

stab::Scalar scalar_arg(const char* text, const char* name) {
  require(text != nullptr, name);
  return stab::parse_scalar(text);
}

}  // namespace

extern "C" {

const char* stab_version(void) { return "0.1.0"; }

const char* stab_status_name(stab_status status) {
  switch (status) {
    case STAB_OK: return "Ok";
    case STAB_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case STAB_ERR_PARSE: return "Parse";
    case STAB_ERR_SCHEMA: return "Schema";
    case STAB_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case STAB_ERR_SIZE_MISMATCH: return "SizeMismatch";
    case STAB_ERR_TOO_LARGE: return "TooLarge";
    case STAB_ERR_DEGENERATE: return "Degenerate";
    case STAB_ERR_FRAME_DEGENERATE: return "FrameDegenerate";
    case STAB_ERR_ROW_ELIMINATION: return "RowElimination";
    case STAB_ERR_SINGULAR_POINT: return "SingularPoint";
    case STAB_ERR_NOT_ON_HYPERSURFACE: return "NotOnHypersurface";
    case STAB_ERR_PENCIL_SEARCH_FAILED: return "PencilSearchFailed";
    case STAB_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* stab_last_error(void) { return last_error.c_str(); }

void stab_string_free(char* s) { std::free(s); }

stab_status stab_config_parse(const char* json, stab_config** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = new stab_config{stab::json::parse_config(json)};
  });
}

stab_status stab_config_to_json(const stab_config* config, char** out_json) {
  return guarded([&] {
    require(config != nullptr && out_json != nullptr, "null argument");
    *out_json = copy_string(stab::json::dump(stab::json::to_json(config->config)));
  });
}

size_t stab_config_size(const stab_config* config) { return config ? config->config.size() : 0; }

size_t stab_config_ambient_rank(const stab_config* config) { return config ? config->config.ambient_rank() : 0; }

void stab_config_free(stab_config* config) { delete config; }

stab_status stab_git_classify(const stab_config* config, const char* g, int use_oracle, size_t oracle_cap,
                              char** out_json) {
  return guarded([&] {
    require(config != nullptr && out_json != nullptr, "null argument");
    const stab::Scalar weight = scalar_arg(g, "missing g");
    const auto verdict = use_oracle ? stab::oracle_classify(config->config, weight, oracle_cap)
                                    : stab::classify(config->config, weight);
    // Rank 1 has no proper flats, so there is no margin to report.
    if (config->config.ambient_rank() < 2) {
      auto j = stab::json::to_json(verdict, stab::Scalar(0));
      j["margin"] = nullptr;
      *out_json = copy_string(stab::json::dump(j));
      return;
    }
    const auto worst = stab::worst_subspace(config->config, weight);
    *out_json = copy_string(stab::json::dump(stab::json::to_json(verdict, worst.margin)));
  });
}

stab_status stab_critical_values(int64_t r, int64_t d, int64_t k, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    const auto cv = stab::critical_values(stab::SystemType{r, d, k});
    *out_json = copy_string(stab::json::dump(stab::json::to_json(cv)));
  });
}

stab_status stab_alpha_check(const stab_config* config, const char* g, const char* alpha, char** out_json) {
  return guarded([&] {
    require(config != nullptr && out_json != nullptr, "null argument");
    const stab::Scalar gq = scalar_arg(g, "missing g");
    const stab::Scalar aq = scalar_arg(alpha, "missing alpha");
    const auto v = stab::alpha_check(config->config, gq, aq);
    *out_json = copy_string(stab::json::dump(stab::json::to_json(v, gq, aq)));
  });
}

stab_status stab_equivalence(const stab_config* config, int64_t g, char** out_json, int* agree) {
  return guarded([&] {
    require(config != nullptr && out_json != nullptr, "null argument");
    const auto rep = stab::equivalence_check(config->config, g);
    if (agree) *agree = rep.agree ? 1 : 0;
    *out_json = copy_string(stab::json::dump(stab::json::to_json(rep)));
  });
}

stab_status stab_destable_example(int64_t genus, const char* lambdas, stab_config** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    std::vector<stab::Scalar> ls;
    if (lambdas && *lambdas) {
      std::string text(lambdas);
      std::size_t start = 0;
      for (;;) {
        const auto comma = text.find(',', start);
        ls.push_back(stab::parse_scalar(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    *out = new stab_config{stab::destable_example(genus, ls)};
  });
}

stab_status stab_gale(const stab_config* config, int has_seed, uint64_t seed, char** out_json) {
  return guarded([&] {
    require(config != nullptr && out_json != nullptr, "null argument");
    stab::GaleOptions opts;
    if (has_seed) opts.seed = seed;
    const auto gale = stab::gale_transform(config->config, opts);
    std::optional<bool> self_associated;
    if (gale.target.ambient_rank() == config->config.ambient_rank()) {
      try {
        self_associated = stab::projectively_equivalent(config->config, gale.target).has_value();
      } catch (const stab::Error&) {
        // Frame not in general position: leave undecided.
      }
    } else {
      self_associated = false;
    }
    *out_json = copy_string(stab::json::dump(stab::json::to_json(gale, self_associated)));
  });
}

stab_status stab_hypersurface_verify(const char* which, uint64_t samples, uint64_t seed, char** out_json,
                                     int* passed) {
  return guarded([&] {
    require(which != nullptr && out_json != nullptr, "null argument");
    const std::string w(which);
    stab::json::json report;
    bool ok = false;
    if (w == "segre") {
      const auto rep = stab::verify_segre(10000, seed);
      ok = rep.passed();
      report = stab::json::to_json(rep);
    } else if (w == "igusa") {
      const auto rep = stab::verify_igusa();
      ok = rep.passed();
      report = stab::json::to_json(rep);
    } else if (w == "duality") {
      const auto rep = stab::duality_check(samples, seed);
      ok = rep.passed();
      report = stab::json::to_json(rep);
    } else {
      throw stab::Error(stab::ErrorCode::InvalidArgument, "unknown hypersurface check '" + w + "'");
    }
    if (passed) *passed = ok ? 1 : 0;
    *out_json = copy_string(stab::json::dump(report));
  });
}

stab_status stab_incidence(char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    *out_json = copy_string(stab::json::dump(stab::json::incidence_report()));
  });
}

stab_status stab_verify_all(uint64_t samples, uint64_t seed, char** out_json, int* passed) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    const auto rep = stab::acceptance::verify_all({samples, seed});
    if (passed) *passed = rep.passed() ? 1 : 0;
    *out_json = copy_string(stab::json::dump(stab::json::to_json(rep)));
  });
}

}  // extern "C"

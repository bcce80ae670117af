#include "ckforms/ckforms.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <string>

#include "catalog.hpp"
#include "errors.hpp"
#include "report.hpp"
#include "version.hpp"

struct ckforms_pair {
  ckforms::PairSpec spec;
  std::string description;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, mapping exceptions onto the status codes. InvalidInput marks bad
// user data; anything else is a bug in this library.
template <typename Fn>
ckforms_status guarded(Fn&& fn) {
  try {
    fn();
    return CKFORMS_OK;
  } catch (const ckforms::InvalidInput& e) {
    g_last_error = e.what();
    return CKFORMS_ERR_INVALID_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CKFORMS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown internal error";
    return CKFORMS_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw ckforms::InvalidInput(what);
}

ckforms::CheckOptions convert_options(const ckforms_check_options* opts) {
  ckforms::CheckOptions o;
  if (opts) {
    if (opts->max_degree > 0) {
      require(opts->max_degree <= 64, "max_degree out of range (limit 64)");
      o.max_degree = opts->max_degree;
    }
    o.force_search = opts->force_search != 0;
  }
  return o;
}

}  // namespace

extern "C" {

const char* ckforms_version(void) { return ckforms::kVersion; }

const char* ckforms_last_error(void) { return g_last_error.c_str(); }

ckforms_status ckforms_pair_from_catalog(const char* id_or_alias, ckforms_pair** out) {
  return guarded([&] {
    require(id_or_alias && out, "null argument");
    const ckforms::CatalogEntry* e = ckforms::find_entry(id_or_alias);
    if (!e) {
      throw ckforms::InvalidInput("unknown catalog pair: \"" + std::string(id_or_alias) +
                                  "\" (try the list command)");
    }
    *out = new ckforms_pair{e->pair, e->description};
  });
}

ckforms_status ckforms_pair_from_json(const char* json_text, ckforms_pair** out) {
  return guarded([&] {
    require(json_text && out, "null argument");
    *out = new ckforms_pair{ckforms::load_pair(json_text), ""};
  });
}

ckforms_status ckforms_pair_from_family(const char* family, const int* params,
                                        size_t num_params, ckforms_pair** out) {
  return guarded([&] {
    require(family && out, "null argument");
    require(params != nullptr || num_params == 0, "null argument");
    std::vector<int> p(params, params + num_params);
    ckforms::CatalogEntry e = ckforms::make_family_entry(family, p);
    *out = new ckforms_pair{std::move(e.pair), std::move(e.description)};
  });
}

void ckforms_pair_free(ckforms_pair* pair) { delete pair; }

ckforms_status ckforms_pair_id(const ckforms_pair* pair, char** out) {
  return guarded([&] {
    require(pair && out, "null argument");
    *out = dup_string(pair->spec.id);
    if (!*out) throw std::bad_alloc();
  });
}

ckforms_status ckforms_pair_to_json(const ckforms_pair* pair, char** out) {
  return guarded([&] {
    require(pair && out, "null argument");
    *out = dup_string(ckforms::serialize_pair(pair->spec));
    if (!*out) throw std::bad_alloc();
  });
}

ckforms_status ckforms_check(const ckforms_pair* pair, const ckforms_check_options* opts,
                             const char* format, char** out_report) {
  return guarded([&] {
    require(pair && out_report, "null argument");
    std::string fmt = format ? format : "text";
    require(fmt == "text" || fmt == "json", "unknown report format (expected text or json)");
    ckforms::CheckOptions o = convert_options(opts);

    auto start = std::chrono::steady_clock::now();
    ckforms::ObstructionResult result = ckforms::check_obstruction(pair->spec, o);
    auto stop = std::chrono::steady_clock::now();

    std::optional<double> timing;
    if (opts && opts->with_timing) {
      timing = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    std::string text;
    if (fmt == "json") {
      text = ckforms::build_report(pair->spec, pair->description, result, o, timing).dump(2);
      text += "\n";
    } else {
      text = ckforms::render_text(pair->spec, pair->description, result, o, timing);
    }
    *out_report = dup_string(text);
    if (!*out_report) throw std::bad_alloc();
  });
}

ckforms_status ckforms_verify_witness(const ckforms_pair* pair, const char* expression,
                                      int* out_valid) {
  return guarded([&] {
    require(pair && expression && out_valid, "null argument");
    ckforms::KernelElement w =
        ckforms::witness_from_expression(pair->spec.h_u, expression);
    *out_valid = ckforms::verify_witness(pair->spec, w) ? 1 : 0;
  });
}

ckforms_status ckforms_catalog_json(char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : ckforms::builtin_entries()) {
      nlohmann::ordered_json j;
      j["id"] = e.pair.id;
      j["description"] = e.description;
      j["source"] = e.source;
      j["g_u"] = e.pair.g_u.name();
      j["h_u"] = e.pair.h_u.name();
      j["expected"] = {{"verdict", ckforms::verdict_name(e.expected.verdict)},
                       {"witness", e.expected.witness},
                       {"degree", e.expected.degree}};
      j["aliases"] = e.aliases;
      if (!e.family.empty()) {
        j["family"] = e.family;
        j["params"] = e.params;
      }
      if (!e.pair.notes.empty()) j["notes"] = e.pair.notes;
      arr.push_back(std::move(j));
    }
    *out = dup_string(arr.dump(2) + "\n");
    if (!*out) throw std::bad_alloc();
  });
}

ckforms_status ckforms_families_json(char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : ckforms::known_families()) {
      arr.push_back({{"name", f.name}, {"params", f.params}, {"description", f.description}});
    }
    *out = dup_string(arr.dump(2) + "\n");
    if (!*out) throw std::bad_alloc();
  });
}

void ckforms_string_free(char* s) { std::free(s); }

}  // extern "C"

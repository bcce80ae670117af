// ckforms: obstruction checker for compact Clifford-Klein forms.
// The CLI is a thin shell over the C API; everything it prints comes either
// straight from a library report or from the catalog/family JSON.
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ckforms/ckforms.h"

namespace {

using ordered_json = nlohmann::ordered_json;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { ckforms_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct PairGuard {
  ckforms_pair* p = nullptr;
  ~PairGuard() { ckforms_pair_free(p); }
};

// Library status -> process exit code. User input problems exit 2, broken
// internals exit 1, matching the what-did-I-do-wrong convention of grep.
int exit_code_for(ckforms_status st) {
  return st == CKFORMS_ERR_INVALID_INPUT ? 2 : 1;
}

int fail(ckforms_status st) {
  std::cerr << "error: " << ckforms_last_error() << "\n";
  return exit_code_for(st);
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file \"" << out_path << "\"\n";
    return 2;
  }
  out << text;
  return out.good() ? 0 : 1;
}

// The flag wins over CKFORMS_MAX_DEGREE; 0 means "library default".
int resolve_max_degree(bool flag_given, int flag_value, std::string* err) {
  if (flag_given) return flag_value;
  const char* env = std::getenv("CKFORMS_MAX_DEGREE");
  if (!env || !*env) return 0;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0 || v > 64) {
    *err = "CKFORMS_MAX_DEGREE must be an integer in 1..64, got \"" + std::string(env) + "\"";
    return -1;
  }
  return static_cast<int>(v);
}

int cmd_check(const std::string& pair_id, const std::string& spec_path, int max_degree,
              bool force_search, bool timings, const std::string& format,
              const std::string& out_path) {
  PairGuard pair;
  ckforms_status st;
  if (!pair_id.empty()) {
    st = ckforms_pair_from_catalog(pair_id.c_str(), &pair.p);
  } else {
    std::ifstream in(spec_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read spec file \"" << spec_path << "\"\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    st = ckforms_pair_from_json(buf.str().c_str(), &pair.p);
  }
  if (st != CKFORMS_OK) return fail(st);

  ckforms_check_options opts{max_degree, force_search ? 1 : 0, timings ? 1 : 0};
  OwnedString report;
  st = ckforms_check(pair.p, &opts, format.c_str(), &report.ptr);
  if (st != CKFORMS_OK) return fail(st);
  return emit(report.str(), out_path);
}

bool entry_matches(const ordered_json& e, const std::string& filter) {
  if (filter.empty()) return true;
  auto has = [&filter](const std::string& s) { return s.find(filter) != std::string::npos; };
  if (has(e.value("id", "")) || has(e.value("description", "")) ||
      has(e.value("source", "")) || has(e.value("family", ""))) {
    return true;
  }
  if (e.contains("aliases")) {
    for (const auto& a : e["aliases"]) {
      if (has(a.get<std::string>())) return true;
    }
  }
  return false;
}

int cmd_list(const std::string& filter, bool families, const std::string& format,
             const std::string& out_path) {
  OwnedString raw;
  ckforms_status st = families ? ckforms_families_json(&raw.ptr) : ckforms_catalog_json(&raw.ptr);
  if (st != CKFORMS_OK) return fail(st);

  ordered_json all = ordered_json::parse(raw.str());
  ordered_json kept = ordered_json::array();
  for (const auto& e : all) {
    if (families) {
      if (filter.empty() || e.value("name", "").find(filter) != std::string::npos) {
        kept.push_back(e);
      }
    } else if (entry_matches(e, filter)) {
      kept.push_back(e);
    }
  }
  if (format == "json") return emit(kept.dump(2) + "\n", out_path);

  std::ostringstream out;
  if (families) {
    for (const auto& f : kept) {
      out << f.value("name", "") << "(";
      const auto& ps = f["params"];
      for (size_t i = 0; i < ps.size(); ++i) out << (i ? "," : "") << ps[i].get<std::string>();
      out << ") | " << f.value("description", "") << "\n";
    }
  } else {
    for (const auto& e : kept) {
      out << e.value("id", "") << " | " << e.value("source", "") << " | "
          << e.value("description", "") << " | " << e["expected"].value("verdict", "");
      std::string w = e["expected"].value("witness", "");
      if (!w.empty()) {
        out << ": " << w << " (degree " << e["expected"]["degree"].get<int>() << ")";
      }
      if (e.contains("aliases") && !e["aliases"].empty()) {
        out << " | aka ";
        for (size_t i = 0; i < e["aliases"].size(); ++i) {
          out << (i ? "," : "") << e["aliases"][i].get<std::string>();
        }
      }
      out << "\n";
    }
  }
  return emit(out.str(), out_path);
}

struct SweepItem {
  std::string label;
  bool builtin = false;
  std::string id_or_family;
  std::vector<int> params;
};

struct ItemResult {
  ckforms_status status = CKFORMS_OK;
  std::string report_json;  // valid when status == CKFORMS_OK
  std::string error;
};

ItemResult run_sweep_item(const SweepItem& item, int max_degree, bool timings) {
  ItemResult r;
  PairGuard pair;
  if (item.builtin) {
    r.status = ckforms_pair_from_catalog(item.id_or_family.c_str(), &pair.p);
  } else {
    r.status = ckforms_pair_from_family(item.id_or_family.c_str(), item.params.data(),
                                        item.params.size(), &pair.p);
  }
  if (r.status != CKFORMS_OK) {
    r.error = ckforms_last_error();
    return r;
  }
  ckforms_check_options opts{max_degree, 0, timings ? 1 : 0};
  OwnedString rep;
  r.status = ckforms_check(pair.p, &opts, "json", &rep.ptr);
  if (r.status != CKFORMS_OK) {
    r.error = ckforms_last_error();
    return r;
  }
  r.report_json = rep.str();
  return r;
}

// "p=1:5" or "p=1:5:2" or "p=3"; an empty interval (a > b) is legal and
// produces no tuples.
bool parse_range(const std::string& text, std::string* name, std::vector<int>* values,
                 std::string* err) {
  size_t eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    *err = "range \"" + text + "\" must look like name=a:b[:step] or name=value";
    return false;
  }
  *name = text.substr(0, eq);
  std::vector<long> nums;
  size_t pos = eq + 1;
  while (pos <= text.size()) {
    size_t colon = text.find(':', pos);
    std::string part = text.substr(pos, colon == std::string::npos ? std::string::npos
                                                                   : colon - pos);
    char* end = nullptr;
    long v = std::strtol(part.c_str(), &end, 10);
    if (part.empty() || *end != '\0') {
      *err = "range \"" + text + "\": \"" + part + "\" is not an integer";
      return false;
    }
    nums.push_back(v);
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  if (nums.empty() || nums.size() > 3) {
    *err = "range \"" + text + "\" must have 1 to 3 integer parts";
    return false;
  }
  long lo = nums[0];
  long hi = nums.size() >= 2 ? nums[1] : nums[0];
  long step = nums.size() == 3 ? nums[2] : 1;
  if (step < 1) {
    *err = "range \"" + text + "\": step must be >= 1";
    return false;
  }
  if (hi - lo > 1000) {
    *err = "range \"" + text + "\" is out of bounds (more than 1000 steps)";
    return false;
  }
  for (long v = lo; v <= hi; v += step) values->push_back(static_cast<int>(v));
  return true;
}

int cmd_sweep(const std::string& family, const std::vector<std::string>& ranges, bool builtins,
              int max_degree, int jobs, bool timings, const std::string& format,
              const std::string& out_path) {
  std::vector<SweepItem> items;
  ordered_json sweep_desc;

  if (builtins) {
    OwnedString raw;
    ckforms_status st = ckforms_catalog_json(&raw.ptr);
    if (st != CKFORMS_OK) return fail(st);
    for (const auto& e : ordered_json::parse(raw.str())) {
      std::string id = e.value("id", "");
      items.push_back({id, true, id, {}});
    }
    sweep_desc["builtins"] = true;
  } else {
    OwnedString raw;
    ckforms_status st = ckforms_families_json(&raw.ptr);
    if (st != CKFORMS_OK) return fail(st);
    ordered_json fams = ordered_json::parse(raw.str());
    const ordered_json* fam = nullptr;
    for (const auto& f : fams) {
      if (f.value("name", "") == family) fam = &f;
    }
    if (!fam) {
      std::cerr << "error: unknown family \"" << family
                << "\" (see ckforms list --families)\n";
      return 2;
    }
    std::vector<std::string> param_names;
    for (const auto& p : (*fam)["params"]) param_names.push_back(p.get<std::string>());

    std::vector<std::vector<int>> axes(param_names.size());
    std::vector<bool> seen(param_names.size(), false);
    ordered_json jranges;
    for (const auto& r : ranges) {
      std::string name, err;
      std::vector<int> values;
      if (!parse_range(r, &name, &values, &err)) {
        std::cerr << "error: " << err << "\n";
        return 2;
      }
      auto it = std::find(param_names.begin(), param_names.end(), name);
      if (it == param_names.end()) {
        std::cerr << "error: family " << family << " has no parameter \"" << name << "\"\n";
        return 2;
      }
      size_t idx = static_cast<size_t>(it - param_names.begin());
      if (seen[idx]) {
        std::cerr << "error: duplicate range for parameter \"" << name << "\"\n";
        return 2;
      }
      seen[idx] = true;
      axes[idx] = std::move(values);
      jranges[name] = r.substr(r.find('=') + 1);
    }
    for (size_t i = 0; i < param_names.size(); ++i) {
      if (!seen[i]) {
        std::cerr << "error: missing --range for parameter \"" << param_names[i]
                  << "\" of family " << family << "\n";
        return 2;
      }
    }
    // Odometer over the parameter tuples, first parameter slowest; this is
    // the report order whatever --jobs says.
    bool empty = false;
    for (const auto& a : axes) empty = empty || a.empty();
    if (!empty) {
      std::vector<size_t> idx(axes.size(), 0);
      while (true) {
        SweepItem item;
        item.builtin = false;
        item.id_or_family = family;
        std::string label = family + "(";
        for (size_t i = 0; i < axes.size(); ++i) {
          item.params.push_back(axes[i][idx[i]]);
          label += (i ? "," : "") + std::to_string(item.params.back());
        }
        item.label = label + ")";
        items.push_back(std::move(item));
        size_t k = axes.size();
        while (k > 0 && ++idx[k - 1] == axes[k - 1].size()) {
          idx[k - 1] = 0;
          --k;
        }
        if (k == 0) break;
      }
    }
    sweep_desc["family"] = family;
    sweep_desc["ranges"] = std::move(jranges);
  }

  // Parallel execution with the output slot fixed per item, so scheduling
  // cannot reorder (or otherwise change) the report.
  std::vector<ItemResult> results(items.size());
  if (jobs <= 1 || items.size() <= 1) {
    for (size_t i = 0; i < items.size(); ++i) {
      results[i] = run_sweep_item(items[i], max_degree, timings);
    }
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= items.size()) return;
        results[i] = run_sweep_item(items[i], max_degree, timings);
      }
    };
    std::vector<std::thread> pool;
    size_t n = std::min<size_t>(static_cast<size_t>(jobs), items.size());
    for (size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  size_t found = 0, inconclusive = 0, inapplicable = 0, errors = 0;
  ordered_json reports = ordered_json::array();
  std::ostringstream text;
  bool internal_failure = false;
  for (size_t i = 0; i < items.size(); ++i) {
    const ItemResult& r = results[i];
    if (r.status != CKFORMS_OK) {
      ++errors;
      internal_failure = internal_failure || r.status == CKFORMS_ERR_INTERNAL;
      reports.push_back({{"id", items[i].label}, {"error", r.error}});
      text << items[i].label << ": error: " << r.error << "\n";
      continue;
    }
    ordered_json rep = ordered_json::parse(r.report_json);
    std::string verdict = rep.value("verdict", "");
    if (verdict == "obstruction_found") ++found;
    else if (verdict == "inconclusive") ++inconclusive;
    else if (verdict == "inapplicable") ++inapplicable;
    text << rep["pair"].value("id", "") << ": " << verdict;
    if (verdict == "inapplicable") text << " (" << rep.value("precheck", "") << ")";
    if (!rep["witness"].is_null()) {
      text << "  witness " << rep["witness"].value("name", "") << " (degree "
           << rep["witness"]["poly_degree"].get<int>() << ")";
    }
    if (rep.contains("timing_ms")) text << "  [" << rep["timing_ms"].get<long long>() << " ms]";
    text << "\n";
    reports.push_back(std::move(rep));
  }
  std::ostringstream summary;
  summary << "total " << items.size() << ", obstruction_found " << found << ", inconclusive "
          << inconclusive << ", inapplicable " << inapplicable << ", errors " << errors;

  int rc = 0;
  if (format == "json") {
    ordered_json j;
    j["tool"] = "ckforms";
    j["version"] = ckforms_version();
    j["sweep"] = std::move(sweep_desc);
    j["reports"] = std::move(reports);
    j["summary"] = {{"total", items.size()},
                    {"obstruction_found", found},
                    {"inconclusive", inconclusive},
                    {"inapplicable", inapplicable},
                    {"errors", errors}};
    rc = emit(j.dump(2) + "\n", out_path);
  } else {
    text << "summary: " << summary.str() << "\n";
    rc = emit(text.str(), out_path);
  }
  if (rc != 0) return rc;
  if (errors > 0) return internal_failure ? 1 : 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological obstruction checker for compact Clifford-Klein forms"};
  app.set_version_flag("--version", std::string("ckforms ") + ckforms_version());
  app.require_subcommand(1);

  std::string pair_id, spec_path, format = "text", out_path, filter, family;
  std::vector<std::string> ranges;
  int max_degree = 0, jobs = 1;
  bool timings = false, force_search = false, families = false, builtins = false;

  CLI::App* check = app.add_subcommand("check", "Run the obstruction check on one pair");
  CLI::Option* check_pair = check->add_option("--pair", pair_id, "Builtin pair id or alias");
  CLI::Option* check_spec =
      check->add_option("--spec", spec_path, "Path to a pair-spec JSON file");
  check_pair->excludes(check_spec);
  CLI::Option* check_deg =
      check->add_option("--max-degree", max_degree, "Polynomial degree search bound (default 12)")
          ->check(CLI::Range(1, 64));
  check->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--out", out_path, "Write the report to a file instead of stdout");
  check->add_flag("--timings", timings, "Include wall-clock timing in the report");
  check->add_flag("--force-search", force_search,
                  "Run the graded search even when the precheck says inapplicable");

  CLI::App* list = app.add_subcommand("list", "List the builtin pair catalog");
  list->add_option("filter", filter, "Keep only entries whose id/alias/description matches");
  list->add_flag("--families", families, "List the parameterized families instead");
  list->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  list->add_option("--out", out_path, "Write to a file instead of stdout");

  CLI::App* sweep = app.add_subcommand("sweep", "Run checks over a parameter family");
  CLI::Option* sweep_family = sweep->add_option("--family", family, "Family to sweep");
  CLI::Option* sweep_builtins =
      sweep->add_flag("--builtins", builtins, "Sweep the whole builtin catalog instead");
  sweep_family->excludes(sweep_builtins);
  sweep->add_option("--range", ranges,
                    "Parameter range name=a:b[:step] or name=value; one per family parameter");
  CLI::Option* sweep_deg =
      sweep->add_option("--max-degree", max_degree, "Polynomial degree search bound (default 12)")
          ->check(CLI::Range(1, 64));
  sweep->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  sweep->add_option("--out", out_path, "Write the batch report to a file");
  sweep->add_option("--jobs", jobs, "Worker threads (report order is unaffected)")
      ->check(CLI::Range(1, 64));
  sweep->add_flag("--timings", timings, "Include per-pair wall-clock timing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, any parse problem is a user error
  }

  std::string env_err;
  if (app.got_subcommand(check)) {
    if (check_pair->count() + check_spec->count() != 1) {
      std::cerr << "error: check needs exactly one of --pair or --spec\n";
      return 2;
    }
    int deg = resolve_max_degree(check_deg->count() > 0, max_degree, &env_err);
    if (deg < 0) {
      std::cerr << "error: " << env_err << "\n";
      return 2;
    }
    return cmd_check(pair_id, spec_path, deg, force_search, timings, format, out_path);
  }
  if (app.got_subcommand(list)) {
    return cmd_list(filter, families, format, out_path);
  }
  if (app.got_subcommand(sweep)) {
    if (sweep_family->count() + (builtins ? 1 : 0) != 1) {
      std::cerr << "error: sweep needs exactly one of --family or --builtins\n";
      return 2;
    }
    if (builtins && !ranges.empty()) {
      std::cerr << "error: --range only applies to --family sweeps\n";
      return 2;
    }
    int deg = resolve_max_degree(sweep_deg->count() > 0, max_degree, &env_err);
    if (deg < 0) {
      std::cerr << "error: " << env_err << "\n";
      return 2;
    }
    return cmd_sweep(family, ranges, builtins, deg, jobs, timings, format, out_path);
  }
  return 2;
}

#pragma once

// Command-line runner: reads descriptor files, expands sweeps, evaluates
// descriptors (concurrently for sweeps) and writes text or json reports in
// input order.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "brauer/abgroup.hpp"
#include "brauer/descriptor_json.hpp"
#include "brauer/errors.hpp"
#include "brauer/surfaces.hpp"

namespace brauer::cli {

using nlohmann::json;

enum class OutputFormat { Text, Json };

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kValidation = 3,
  kResource = 4,
};

/// One swept integer field, inclusive range. `field` may be a dotted path
/// into the descriptor ("coefficients.0").
struct SweepSpec {
  std::string field;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::uint64_t size() const { return static_cast<std::uint64_t>(hi - lo) + 1; }
};

inline constexpr std::uint64_t kMaxSweepCases = 1'000'000;

struct RunConfig {
  std::string inputPath;
  OutputFormat outputFormat = OutputFormat::Text;
  std::vector<SweepSpec> sweeps;
  bool showProvenance = false;
  bool allowNonSL3 = false;
};

/// Parses "<field>=<lo>..<hi>".
inline SweepSpec parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  const auto dots = text.find("..", eq == std::string::npos ? 0 : eq);
  if (eq == std::string::npos || eq == 0 || dots == std::string::npos)
    throw ParseError("sweep must look like <field>=<lo>..<hi>: " + text);
  SweepSpec s;
  s.field = text.substr(0, eq);
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(eq + 1, dots - eq - 1), hi = text.substr(dots + 2);
    s.lo = std::stoll(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    s.hi = std::stoll(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
  } catch (const std::exception&) {
    throw ParseError("sweep bounds must be integers: " + text);
  }
  if (s.lo > s.hi) throw ParseError("sweep range is empty: " + text);
  if (s.size() > kMaxSweepCases) throw ParseError("sweep range exceeds 10^6 cases: " + text);
  return s;
}

namespace detail {

inline void set_path(json& obj, const std::string& path, std::int64_t value) {
  json* cur = &obj;
  std::size_t start = 0;
  for (;;) {
    const auto dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    json* next = nullptr;
    if (cur->is_array()) {
      std::size_t idx = 0;
      try {
        idx = std::stoul(key);
      } catch (const std::exception&) {
        throw ParseError("sweep path '" + path + "' indexes an array with '" + key + "'");
      }
      if (idx >= cur->size()) throw ParseError("sweep path '" + path + "' index out of range");
      next = &(*cur)[idx];
    } else if (cur->is_object()) {
      next = &(*cur)[key];
    } else {
      throw ParseError("sweep path '" + path + "' does not name a field");
    }
    if (dot == std::string::npos) {
      *next = value;
      return;
    }
    cur = next;
    start = dot + 1;
  }
}

struct Case {
  std::string id;
  json descriptor;
};

struct Outcome {
  int code = kOk;
  std::string id;
  std::string diagnostic;
  std::string line;                 // text output line
  std::vector<std::string> details; // --provenance detail lines
  std::vector<std::string> warnings;
  json descriptor;
  json result;
};

inline std::string constraint_string(const groupcohom::ConstraintReport& r) {
  return "undetermined: 0 -> " + abgroup::to_string(r.h3_cokernel) + " -> Br -> " +
         abgroup::to_string(r.h2_kernel) + " -> 0, |Br|=" + r.order.str();
}

inline const char* certification_name(surfaces::Certification c) {
  switch (c) {
    case surfaces::Certification::BrEqualsBrPrime: return "Br=Br'";
    case surfaces::Certification::Conditional: return "conditional";
    case surfaces::Certification::FullH2: return "H2";
  }
  return "";
}

inline json report_json(const surfaces::InoueValidationReport& r) {
  return json{{"charPoly", json::array({io::detail::from_bigint(r.charPoly[0]), io::detail::from_bigint(r.charPoly[1]),
                                        io::detail::from_bigint(r.charPoly[2])})},
              {"discriminant", io::detail::from_bigint(r.discriminant)},
              {"pAtOne", io::detail::from_bigint(r.pAtOne)},
              {"detM", io::detail::from_bigint(r.detM)},
              {"eigenvalueConditionHolds", r.eigenvalueConditionHolds},
              {"inSL3", r.inSL3}};
}

inline std::string report_line(const surfaces::InoueValidationReport& r) {
  return "inoue: charPoly=(" + r.charPoly[0].str() + "," + r.charPoly[1].str() + "," + r.charPoly[2].str() +
         ") disc=" + r.discriminant.str() + " p(1)=" + r.pAtOne.str() + " det=" + r.detM.str() +
         " eigenvalueCondition=" + (r.eigenvalueConditionHolds ? "yes" : "no") +
         " inSL3=" + (r.inSL3 ? "yes" : "no");
}

inline Outcome evaluate(const Case& c, const std::filesystem::path& base, const RunConfig& cfg) {
  Outcome o;
  o.id = c.id;
  try {
    const auto d = io::parse_descriptor(c.descriptor, base);
    o.descriptor = io::to_json(d, c.id);
    const auto r = surfaces::compute_brauer(d, {cfg.allowNonSL3});
    std::string group;
    json res{{"id", c.id}, {"class", surfaces::class_name(d)}};
    if (r.exact()) {
      group = abgroup::to_string(r.group());
      res["group"] = group;
      res["divisibleRank"] = r.group().divisible_rank();
      res["torsion"] = io::detail::from_finite_group(r.group().torsion());
    } else {
      const auto& rep = std::get<groupcohom::ConstraintReport>(r.value);
      group = constraint_string(rep);
      res["group"] = group;
      res["constraint"] = {{"h3Cokernel", abgroup::to_string(rep.h3_cokernel)},
                           {"h2Kernel", abgroup::to_string(rep.h2_kernel)},
                           {"order", io::detail::from_bigint(rep.order)}};
      o.details.push_back("constraint: Br is an extension of " + abgroup::to_string(rep.h2_kernel) + " by " +
                          abgroup::to_string(rep.h3_cokernel));
    }
    res["provenance"] = r.provenance;
    res["certification"] = certification_name(r.certification);
    if (r.inoue) {
      res["inoueReport"] = report_json(*r.inoue);
      o.details.push_back(report_line(*r.inoue));
    }
    res["warnings"] = r.warnings;
    o.warnings = r.warnings;
    o.line = c.id + "\t" + group + "\t" + r.provenance;
    o.result = std::move(res);
  } catch (const surfaces::InoueRejected& e) {
    o.code = kValidation;
    o.diagnostic = std::string(e.what()) + " [" + report_line(e.report()) + "]";
  } catch (const ParseError& e) {
    o.code = kParse;
    o.diagnostic = e.what();
  } catch (const ResourceError& e) {
    o.code = kResource;
    o.diagnostic = e.what();
  } catch (const ValidationError& e) {
    o.code = kValidation;
    o.diagnostic = e.what();
  } catch (const DomainError& e) {
    o.code = kValidation;
    o.diagnostic = e.what();
  } catch (const DimensionError& e) {
    o.code = kValidation;
    o.diagnostic = e.what();
  } catch (const std::exception& e) {
    o.code = kInternal;
    o.diagnostic = std::string("internal error: ") + e.what();
  }
  return o;
}

// Cartesian product of the sweeps, first sweep outermost, each ascending.
inline std::vector<Case> expand(const std::vector<json>& objects, const std::vector<SweepSpec>& sweeps) {
  std::uint64_t per = 1;
  for (const auto& s : sweeps) {
    per *= s.size();
    if (per > kMaxSweepCases) throw ParseError("sweep exceeds 10^6 cases");
  }
  if (per * objects.size() > kMaxSweepCases) throw ParseError("sweep exceeds 10^6 cases");
  std::vector<Case> cases;
  for (std::size_t k = 0; k < objects.size(); ++k) {
    const json& obj = objects[k];
    std::string id = "d" + std::to_string(k);
    if (obj.is_object()) {
      if (auto it = obj.find("id"); it != obj.end() && it->is_string()) id = it->get<std::string>();
    }
    if (sweeps.empty()) {
      cases.push_back({id, obj});
      continue;
    }
    if (!obj.is_object()) throw ParseError("descriptor " + id + " must be a JSON object");
    std::vector<std::int64_t> value(sweeps.size());
    for (std::size_t i = 0; i < sweeps.size(); ++i) value[i] = sweeps[i].lo;
    for (;;) {
      json d = obj;
      std::string suffix;
      for (std::size_t i = 0; i < sweeps.size(); ++i) {
        set_path(d, sweeps[i].field, value[i]);
        suffix += (i ? "," : "") + sweeps[i].field + "=" + std::to_string(value[i]);
      }
      const std::string case_id = id + "[" + suffix + "]";
      d["id"] = case_id;
      cases.push_back({case_id, std::move(d)});
      std::size_t i = sweeps.size();
      while (i > 0 && value[i - 1] == sweeps[i - 1].hi) {
        value[i - 1] = sweeps[i - 1].lo;
        --i;
      }
      if (i == 0) break;
      ++value[i - 1];
    }
  }
  return cases;
}

inline std::vector<Outcome> evaluate_all(const std::vector<Case>& cases, const std::filesystem::path& base,
                                         const RunConfig& cfg) {
  std::vector<Outcome> out(cases.size());
  const std::size_t workers =
      std::min<std::size_t>(cases.size(), std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) out[i] = evaluate(cases[i], base, cfg);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < cases.size(); i += workers) out[i] = evaluate(cases[i], base, cfg);
    });
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace detail

/// Runs one configuration. Reports go to `out`, diagnostics and warnings to
/// `err`. Returns the exit status: 0 on success, otherwise the status of the
/// first failing descriptor (2 parse, 3 validation, 4 resource cap).
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<detail::Case> cases;
  std::filesystem::path base;
  try {
    std::ifstream in(cfg.inputPath);
    if (!in) throw ParseError("cannot open " + cfg.inputPath);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    base = std::filesystem::path(cfg.inputPath).parent_path();
    cases = detail::expand(io::read_descriptor_objects(text), cfg.sweeps);
  } catch (const ParseError& e) {
    err << "error: " << cfg.inputPath << ": " << e.what() << "\n";
    return kParse;
  }

  const auto outcomes = detail::evaluate_all(cases, base, cfg);
  int status = kOk;
  json descriptors = json::array(), results = json::array();
  for (const auto& o : outcomes) {
    for (const auto& w : o.warnings) err << "warning: " << o.id << ": " << w << "\n";
    if (o.code != kOk) {
      err << "error: descriptor " << o.id << ": " << o.diagnostic << "\n";
      if (status == kOk) status = o.code;
      continue;
    }
    if (cfg.outputFormat == OutputFormat::Text) {
      out << o.line << "\n";
      if (cfg.showProvenance)
        for (const auto& d : o.details) out << "# " << d << "\n";
    } else {
      descriptors.push_back(o.descriptor);
      results.push_back(o.result);
    }
  }
  if (cfg.outputFormat == OutputFormat::Json)
    out << json{{"descriptors", descriptors}, {"results", results}}.dump(2) << "\n";
  return status;
}

}  // namespace brauer::cli

#include "qpsi/cli/output.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "qpsi/errors.hpp"

namespace qpsi::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string wall_time_str(double secs) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << secs;
  return os.str();
}

std::string parameters_str(const ResidualReport& r) {
  std::string s;
  for (const auto& [k, v] : r.parameters) {
    if (!s.empty()) s += "; ";
    s += k + "=" + v;
  }
  return s;
}

Json to_json(const ResidualReport& r, bool timing) {
  Json j;
  j["identity"] = r.identity;
  j["instance"] = r.instance;
  j["backend"] = identities::backend_name(r.backend);
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["pass"] = r.pass;
  j["residual"] = r.residual;
  j["certified_error"] = r.certified_error;
  j["tolerance"] = r.tolerance;
  j["order"] = std::to_string(r.order);
  j["first_difference"] = r.first_difference ? Json(std::to_string(*r.first_difference)) : Json(nullptr);
  j["offending_coefficient"] = r.offending_coefficient;
  j["note"] = r.note;
  if (timing) j["wall_time"] = wall_time_str(r.wall_time);
  return j;
}

std::string get_string(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j[key].is_string()) throw InvalidArgument(std::string("report field '") + key + "' must be a string");
  return j[key].get<std::string>();
}

long to_long(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("report field '") + what + "' is not an integer: " + s);
  }
}

}  // namespace

std::string reports_to_json(const std::vector<ResidualReport>& reports, bool timing) {
  Json doc;
  doc["schema"] = 1;
  doc["reports"] = Json::array();
  for (const auto& r : reports) doc["reports"].push_back(to_json(r, timing));
  return doc.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string reports_to_csv(const std::vector<ResidualReport>& reports, bool timing) {
  std::string out =
      "identity,instance,backend,pass,residual,certified_error,tolerance,order,first_difference,"
      "offending_coefficient,parameters,note";
  if (timing) out += ",wall_time";
  out += "\r\n";
  for (const auto& r : reports) {
    const std::vector<std::string> fields{
        r.identity,      r.instance,
        identities::backend_name(r.backend),
        r.pass ? "true" : "false",
        r.residual,      r.certified_error,
        r.tolerance,     std::to_string(r.order),
        r.first_difference ? std::to_string(*r.first_difference) : "",
        r.offending_coefficient,
        parameters_str(r), r.note};
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
    if (timing) out += "," + wall_time_str(r.wall_time);
    out += "\r\n";
  }
  return out;
}

std::string reports_to_text(const std::vector<ResidualReport>& reports, bool timing) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.pass) ++passed;
    os << (r.pass ? "PASS " : "FAIL ") << r.identity << " [" << identities::backend_name(r.backend) << "] "
       << r.instance;
    if (r.backend == identities::Backend::Formal) {
      os << "  order " << r.order << "  residual " << r.residual;
      if (r.first_difference) os << "  first difference at q^" << *r.first_difference;
    } else {
      os << "  residual " << r.residual << "  error bound " << r.certified_error << "  tolerance " << r.tolerance;
    }
    if (timing) os << "  " << wall_time_str(r.wall_time) << "s";
    os << "\n";
    if (!r.note.empty()) os << "     " << r.note << "\n";
  }
  os << passed << " of " << reports.size() << " passed\n";
  return os.str();
}

std::vector<ResidualReport> reports_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& e) {
    throw InvalidArgument(std::string("malformed report file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != 1) {
    throw InvalidArgument("report file is not schema 1");
  }
  if (!doc.contains("reports") || !doc["reports"].is_array()) throw InvalidArgument("report file has no report list");
  std::vector<ResidualReport> out;
  for (const auto& j : doc["reports"]) {
    if (!j.is_object()) throw InvalidArgument("report entries must be objects");
    ResidualReport r;
    r.identity = get_string(j, "identity");
    r.instance = get_string(j, "instance");
    const std::string backend = get_string(j, "backend");
    if (backend == "formal") {
      r.backend = identities::Backend::Formal;
    } else if (backend == "numeric") {
      r.backend = identities::Backend::Numeric;
    } else {
      throw InvalidArgument("unknown backend in report file: " + backend);
    }
    if (j.contains("parameters")) {
      if (!j["parameters"].is_object()) throw InvalidArgument("report parameters must be an object");
      for (const auto& [k, v] : j["parameters"].items()) {
        if (!v.is_string()) throw InvalidArgument("report parameter values must be strings");
        r.parameters.emplace_back(k, v.get<std::string>());
      }
    }
    if (!j.contains("pass") || !j["pass"].is_boolean()) throw InvalidArgument("report entry lacks a boolean 'pass'");
    r.pass = j["pass"].get<bool>();
    r.residual = get_string(j, "residual");
    r.certified_error = get_string(j, "certified_error");
    r.tolerance = get_string(j, "tolerance");
    const std::string order = get_string(j, "order");
    if (!order.empty()) r.order = static_cast<int>(to_long(order, "order"));
    if (j.contains("first_difference") && !j["first_difference"].is_null()) {
      r.first_difference = static_cast<int>(to_long(get_string(j, "first_difference"), "first_difference"));
    }
    r.offending_coefficient = get_string(j, "offending_coefficient");
    r.note = get_string(j, "note");
    const std::string wt = get_string(j, "wall_time");
    if (!wt.empty()) r.wall_time = std::stod(wt);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SquaresRow> squares_table(int s, long max_n) {
  if (s != 1 && s != 2 && s != 3 && s != 4 && s != 6) {
    throw InvalidArgument("unsupported s = " + std::to_string(s) + " (expected 1, 2, 3, 4 or 6)");
  }
  if (max_n < 0) throw InvalidArgument("max_n must be >= 0");
  const auto theta = number_theory::rs_from_theta(s, max_n);
  std::vector<SquaresRow> rows;
  for (long n = 0; n <= max_n; ++n) {
    SquaresRow row;
    row.n = n;
    row.enumeration = number_theory::rs_bruteforce(n, s);
    if (s == 2 || s == 4) row.formula = number_theory::rs_formula(n, s);
    row.generating_function = theta.counts[static_cast<std::size_t>(n)];
    row.match = row.enumeration == row.generating_function && (!row.formula || *row.formula == row.enumeration);
    rows.push_back(row);
  }
  return rows;
}

std::string squares_to_csv(const std::vector<SquaresRow>& rows) {
  std::string out = "n,enumeration,formula,generating_function,match\r\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.enumeration) + "," +
           (r.formula ? std::to_string(*r.formula) : "") + "," + std::to_string(r.generating_function) + "," +
           (r.match ? "true" : "false") + "\r\n";
  }
  return out;
}

std::string squares_to_json(int s, const std::vector<SquaresRow>& rows) {
  Json doc;
  doc["schema"] = 1;
  doc["s"] = std::to_string(s);
  doc["rows"] = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["n"] = std::to_string(r.n);
    j["enumeration"] = std::to_string(r.enumeration);
    j["formula"] = r.formula ? Json(std::to_string(*r.formula)) : Json(nullptr);
    j["generating_function"] = std::to_string(r.generating_function);
    j["match"] = r.match;
    doc["rows"].push_back(j);
  }
  return doc.dump(2) + "\n";
}

std::string squares_to_text(int s, const std::vector<SquaresRow>& rows) {
  std::ostringstream os;
  os << "r_" << s << "(n)\n";
  os << std::setw(8) << "n" << std::setw(14) << "enumeration" << std::setw(14) << "formula" << std::setw(14)
     << "theta" << "  match\n";
  std::size_t ok = 0;
  for (const auto& r : rows) {
    if (r.match) ++ok;
    os << std::setw(8) << r.n << std::setw(14) << r.enumeration << std::setw(14)
       << (r.formula ? std::to_string(*r.formula) : "-") << std::setw(14) << r.generating_function << "  "
       << (r.match ? "yes" : "NO") << "\n";
  }
  os << ok << " of " << rows.size() << " rows match\n";
  return os.str();
}

}  // namespace qpsi::cli

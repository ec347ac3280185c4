#include "qpsi/cli/app.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "qpsi/cli/output.hpp"
#include "qpsi/corpus/registry.hpp"
#include "qpsi/errors.hpp"

namespace qpsi::cli {

namespace {

struct RunOptions {
  corpus::RunConfig config;
  std::vector<std::string> identities;
  bool all = false;
  std::string backend = "both";
  std::string format = "text";
  std::string out_path;
  std::string input_path;
  bool timing = false;
};

void add_run_options(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--identity", o.identities, "identity to check (repeatable)");
  cmd->add_flag("--all", o.all, "check every registered identity");
  cmd->add_option("--backend", o.backend, "formal, numeric or both")
      ->check(CLI::IsMember({"formal", "numeric", "both"}))
      ->capture_default_str();
  cmd->add_option("--order", o.config.order, "truncation order N for formal checks")->capture_default_str();
  cmd->add_option("--precision", o.config.precision, "working precision in bits")->capture_default_str();
  cmd->add_option("--tolerance", o.config.tolerance, "numeric residual tolerance")->capture_default_str();
  cmd->add_option("--seed", o.config.seed, "seed for sampled parameter sets")->capture_default_str();
  cmd->add_option("--format", o.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "write the report here instead of stdout");
  cmd->add_flag("--timing", o.timing, "include wall-clock times (output is then not reproducible)");
}

corpus::BackendSelection backend_of(const std::string& s) {
  if (s == "formal") return corpus::BackendSelection::Formal;
  if (s == "numeric") return corpus::BackendSelection::Numeric;
  return corpus::BackendSelection::Both;
}

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Opens the output early so a bad path fails before any work is done.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw IoError("cannot open output file: " + path);
    out_ = &file_;
  }
  void write(const std::string& s) {
    *out_ << s;
    out_->flush();
    if (!*out_) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

std::string render(const std::vector<ResidualReport>& reports, const RunOptions& o) {
  if (o.format == "json") return reports_to_json(reports, o.timing);
  if (o.format == "csv") return reports_to_csv(reports, o.timing);
  return reports_to_text(reports, o.timing);
}

std::vector<std::string> selection(const RunOptions& o) {
  return o.all ? corpus::identity_names() : o.identities;
}

int exit_for(const std::vector<ResidualReport>& reports) {
  return corpus::all_pass(reports) ? kExitPass : kExitFail;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification harness for q-series identities", "qpsi"};
  app.require_subcommand(1);

  RunOptions verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "check identities and print residual reports");
  add_run_options(verify, verify_opts);

  RunOptions report_opts;
  report_opts.format = "json";
  CLI::App* report = app.add_subcommand("report", "machine-readable summary of a fresh run or a saved JSON report");
  add_run_options(report, report_opts);
  report->add_option("--input", report_opts.input_path, "previously written JSON report");

  int s = 0;
  long max_n = 10;
  std::string squares_format = "csv", squares_out;
  CLI::App* squares = app.add_subcommand("squares", "r_s(n) by enumeration, divisor formula and theta power");
  squares->add_option("--s,-s", s, "number of squares (1, 2, 3, 4 or 6)")->required();
  squares->add_option("--max-n", max_n, "largest n in the table")->capture_default_str();
  squares->add_option("--format", squares_format, "csv, json or text")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  squares->add_option("--out", squares_out, "write the table here instead of stdout");

  CLI::App* list = app.add_subcommand("list", "print the registered identity names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (*list) {
      for (const auto& e : corpus::registry()) out << e.name << "  " << e.summary << "\n";
      return kExitPass;
    }
    if (*squares) {
      Sink sink(squares_out, out);
      const auto rows = squares_table(s, max_n);
      if (squares_format == "json") {
        sink.write(squares_to_json(s, rows));
      } else if (squares_format == "text") {
        sink.write(squares_to_text(s, rows));
      } else {
        sink.write(squares_to_csv(rows));
      }
      for (const auto& r : rows) {
        if (!r.match) return kExitFail;
      }
      return kExitPass;
    }
    RunOptions& o = *verify ? verify_opts : report_opts;
    o.config.backend = backend_of(o.backend);
    corpus::validate(o.config);
    if (*report && !o.input_path.empty()) {
      const auto reports = reports_from_json(read_file(o.input_path));
      Sink sink(o.out_path, out);
      sink.write(render(reports, o));
      return exit_for(reports);
    }
    const auto names = selection(o);
    for (const auto& n : names) corpus::find_identity(n);
    Sink sink(o.out_path, out);
    const auto reports = corpus::corpus_run(names, o.config);
    sink.write(render(reports, o));
    return exit_for(reports);
  } catch (const UnknownIdentity& e) {
    err << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace qpsi::cli

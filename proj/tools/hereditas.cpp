// hereditas: run job specs, verify reports, run built-in demos.

#include "hereditas/jobs.hpp"
#include "hereditas/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using hereditas::io::json;
namespace jobs = hereditas::jobs;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hereditas::input_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw hereditas::input_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

// Write to a sibling temporary, then rename over the target.
void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw hereditas::input_error("cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) throw hereditas::input_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw hereditas::input_error("cannot move report into '" + path + "': " + ec.message());
  }
}

void emit(const json& report, const std::string& output) {
  const std::string text = report.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    write_atomically(output, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homological checks for finitely presented modules"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string bound, output;
  std::size_t threads = 1;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "override the spec seed");
    cmd->add_option("--bound", bound, "override the search bound, RxC[:entry[:samples]]");
    cmd->add_option("--jobs", threads, "worker threads")->check(CLI::Range(1, 256));
    cmd->add_option("--output", output, "write the report here instead of standard output");
  };

  std::string spec_path;
  auto* run = app.add_subcommand("run", "execute a job spec (or rerun a report)");
  run->add_option("spec", spec_path, "spec JSON file")->required();
  add_common(run);

  std::string report_path;
  auto* verify = app.add_subcommand("verify", "re-check report certificates by multiplication only");
  verify->add_option("report", report_path, "report JSON file")->required();

  std::string demo;
  bool print_spec = false;
  auto* demo_cmd = app.add_subcommand("demo", "run a built-in spec");
  demo_cmd->add_option("name", demo, "Z, Z4, Z6, F2 or A2")->required();
  demo_cmd->add_flag("--print-spec", print_spec, "print the spec instead of running it");
  add_common(demo_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : jobs::bad_input;
  }

  try {
    if (*verify) {
      const auto out = hereditas::verify::verify_report(read_json(report_path));
      for (const auto& f : out.failures) std::cout << "FAIL " << f << "\n";
      for (const auto& n : out.notes) std::cout << "note " << n << "\n";
      std::cout << out.checked << " certificates: " << out.passed << " verified, " << out.failures.size()
                << " failed, " << out.skipped << " not re-checkable by multiplication\n";
      return out.ok() ? 0 : 1;
    }
    jobs::Options opt;
    opt.jobs = threads;
    const auto* cmd = *run ? run : demo_cmd;
    if (cmd->count("--seed")) opt.seed = seed;
    if (cmd->count("--bound")) {
      hereditas::Bound::parse(bound);
      opt.bound = bound;
    }
    json spec;
    if (*run) {
      spec = read_json(spec_path);
    } else {
      spec = jobs::demo_spec(demo);
      if (print_spec) {
        emit(spec, output);
        return 0;
      }
    }
    const auto outcome = jobs::run_spec(spec, opt);
    emit(outcome.report, output);
    return outcome.exit_code;
  } catch (const hereditas::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return jobs::bad_input;
  } catch (const hereditas::unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return jobs::bad_input;
  } catch (const hereditas::growth_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return jobs::bad_input;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed spec: " << e.what() << "\n";
    return jobs::bad_input;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return jobs::inconsistent;
  }
}

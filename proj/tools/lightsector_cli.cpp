// lightsector: analyze, verify and generate finite-node light-sector scenarios.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 input error, 3 internal error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lightsector/errors.hpp"
#include "lightsector/report.hpp"
#include "lightsector/scenario.hpp"
#include "lightsector/selftest.hpp"

namespace fs = std::filesystem;
using namespace lightsector;

namespace {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInputError = 2, kInternalError = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

ScenarioFile load(const std::string& path, bool lax) {
  try {
    return parse_scenario(read_file(path), ParseOptions{lax});
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string analyze_one(const std::string& path, ReportFormat format, bool lax) {
  return render_report(build_report(load(path, lax)), format);
}

std::string analyze_batch(const std::string& dir, ReportFormat format, bool lax) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".scenario")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());

  std::vector<std::future<std::string>> jobs;
  for (const auto& f : files)
    jobs.push_back(std::async(std::launch::async, analyze_one, f, format, lax));
  std::string out;
  for (std::size_t k = 0; k < files.size(); ++k) {
    out += "### " + fs::path(files[k]).filename().string() + "\n";
    out += jobs[k].get();
    out += "\n";
  }
  return out;
}

std::vector<std::size_t> parse_orbits(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(tok, &pos);
    } catch (const std::exception&) {
      throw InvalidParams("bad orbit size '" + tok + "'");
    }
    if (pos != tok.size() || v <= 0) throw InvalidParams("bad orbit size '" + tok + "'");
    sizes.push_back(static_cast<std::size_t>(v));
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-node light-sector package analysis"};
  app.require_subcommand(1);

  std::string format = "text", out_path, input, batch_dir;
  bool lax = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze a scenario file and print its report");
  analyze->add_option("file", input, "Scenario file");
  analyze->add_option("--batch", batch_dir, "Analyze every *.scenario file in a directory");
  analyze->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  analyze->add_option("--out", out_path, "Write the report to a file");
  analyze->add_flag("--lax", lax, "Ignore unknown fields");

  std::string name, lambda_text = "1", orbits_text = "25,25,25,25,25", emit_path;
  auto* scenario = app.add_subcommand("scenario", "Emit a built-in model scenario");
  scenario->add_option("name", name, "a1xa1 | a2 | three_node | quintic_orbits")->required();
  scenario->add_option("--lambda", lambda_text, "lambda12 for a2 and three_node");
  scenario->add_option("--orbits", orbits_text, "Comma-separated orbit sizes for quintic_orbits");
  scenario->add_option("--emit", emit_path, "Write the scenario to a file");

  std::string verify_input;
  auto* verify = app.add_subcommand("verify", "Machine-check the block-reduced structure theorem");
  verify->add_option("file", verify_input, "Scenario file")->required();
  verify->add_flag("--lax", lax, "Ignore unknown fields");

  std::uint64_t seed = 20261016;
  auto* selftest = app.add_subcommand("selftest", "Run the invariant suite");
  selftest->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) {
      if (input.empty() == batch_dir.empty()) {
        std::cerr << "analyze: give exactly one of <file> or --batch <dir>\n" << analyze->help();
        return kInputError;
      }
      const auto fmt = format == "machine" ? ReportFormat::Machine : ReportFormat::Text;
      write_output(out_path, batch_dir.empty() ? analyze_one(input, fmt, lax)
                                               : analyze_batch(batch_dir, fmt, lax));
      return kOk;
    }
    if (*scenario) {
      ScenarioFile s;
      if (name == "a1xa1")
        s = builtin_a1xa1();
      else if (name == "a2")
        s = builtin_a2(Rational::parse(lambda_text));
      else if (name == "three_node")
        s = builtin_three_node(Rational::parse(lambda_text));
      else if (name == "quintic_orbits")
        s = builtin_quintic_orbits(parse_orbits(orbits_text));
      else
        throw InvalidParams("unknown scenario '" + name + "'");
      write_output(emit_path, serialize_scenario(s));
      return kOk;
    }
    if (*verify) {
      const auto pkg = assemble_scenario(load(verify_input, lax));
      (void)classify(pkg);
      try {
        const auto report = verify_block_reduced_structure(pkg);
        std::cout << render_verification(report);
        return report.overall() ? kOk : kVerificationFailed;
      } catch (const BlockSeparationRequired& e) {
        std::cout << "not verifiable: " << e.what() << "\n";
        return kVerificationFailed;
      }
    }
    if (*selftest) return run_selftest(std::cout, seed) ? kOk : kVerificationFailed;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

#include "chanda/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chanda/errors.hpp"
#include "chanda/pipeline.hpp"

namespace chanda {

namespace {

struct CliConfig {
  std::string mode = "verse";
  std::string scheme = "auto";
  std::size_t k = kDefaultTopK;
  std::string format = "compact";
  std::string db_path;
  std::string output;
  bool stats = false;
  std::vector<std::string> inputs;
};

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void report_warnings(const Report& report, std::ostream& err) {
  std::size_t n = 0;
  for (const VerseResult& verse : report.verses) {
    for (const LineResult& line : verse.lines) {
      ++n;
      for (const UnknownCharacter& w : line.scan.warnings) {
        err << "warning: line " << n << ": unknown character '" << w.character << "' at "
            << w.position << "\n";
      }
      if (!line.chosen) err << "warning: line " << n << ": no meter identified\n";
    }
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Identify Sanskrit meters in text", "chanda"};
  app.add_option("--mode", cfg.mode, "line or verse")
      ->check(CLI::IsMember({"line", "verse"}))
      ->capture_default_str();
  app.add_option("--scheme", cfg.scheme, "auto, devanagari, iast, hk or slp1")
      ->check(CLI::IsMember({"auto", "devanagari", "iast", "hk", "harvardkyoto", "slp1"}))
      ->capture_default_str();
  app.add_option("--k", cfg.k, "fuzzy matches kept per line")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", cfg.format, "compact or detailed")
      ->check(CLI::IsMember({"compact", "detailed"}))
      ->capture_default_str();
  app.add_option("--db", cfg.db_path, "meter definition file");
  app.add_option("--output,-o", cfg.output, "write results to this file");
  app.add_flag("--stats", cfg.stats, "append statistics (compact format)");
  app.add_option("inputs", cfg.inputs, "files, inline text, or - for standard input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const std::filesystem::path db_path =
      cfg.db_path.empty() ? default_database_path() : std::filesystem::path(cfg.db_path);
  MetricalDatabase db;
  try {
    db = MetricalDatabase::load_file(db_path);
  } catch (const Error& e) {
    err << "error: cannot load meter database '" << db_path.string() << "': " << e.what()
        << "\n";
    return kExitDatabase;
  }

  std::string text;
  if (cfg.inputs.empty()) cfg.inputs.push_back("-");
  for (const std::string& input : cfg.inputs) {
    std::string chunk;
    std::error_code ec;
    if (input == "-") {
      chunk = slurp(in);
    } else if (std::filesystem::is_regular_file(input, ec)) {
      std::ifstream file(input, std::ios::binary);
      if (!file) {
        err << "error: cannot read '" << input << "'\n";
        return kExitUsage;
      }
      chunk = slurp(file);
    } else {
      chunk = input;
    }
    if (!text.empty()) text += "\n\n";
    text += chunk;
  }

  AnalyzeOptions options;
  options.mode = *parse_mode(cfg.mode);
  options.k = cfg.k;
  if (cfg.scheme != "auto") options.scheme = parse_scheme(cfg.scheme);

  Report report;
  try {
    report = pipeline::analyze(text, db, options);
  } catch (const EmptyInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  report_warnings(report, err);
  const Format format = cfg.format == "detailed" ? Format::Detailed : Format::Compact;
  const std::string rendered = pipeline::export_report(report, db, format, cfg.stats);

  if (cfg.output.empty()) {
    out << rendered;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return kExitUsage;
    }
    file << rendered;
  }
  return kExitOk;
}

}  // namespace chanda

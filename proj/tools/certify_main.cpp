#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "covercert/certify.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Amenable-cover vanishing certifier"};
  std::string input_file;
  std::string format = "text";
  std::string corpus_name;
  std::string output_dir;
  int max_subdiv = 8;
  bool self_test = false;
  bool no_nerve_map = false;

  app.add_option("file", input_file, "JSON input file");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--self-test", self_test, "Run the built-in corpus assertions");
  app.add_option("--corpus", corpus_name, "Run a built-in corpus instance");
  app.add_option("--max-subdiv", max_subdiv, "Subdivision rounds allowed for the nerve map");
  app.add_flag("--no-nerve-map", no_nerve_map, "Skip the nerve map computation");
  app.add_option("--output-dir", output_dir, "Write the report to <dir>/report.<format>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (self_test) return covercert::self_test(std::cout) ? 0 : 2;

  covercert::CertifyOptions options;
  options.max_subdiv = max_subdiv;
  options.compute_nerve_map = !no_nerve_map;

  covercert::CertificateReport report;
  if (!corpus_name.empty()) {
    report = covercert::certify_corpus(corpus_name, options);
  } else if (!input_file.empty()) {
    covercert::CertifyInput input = covercert::load_input(input_file);
    input.options.max_subdiv = max_subdiv;
    if (no_nerve_map) input.options.compute_nerve_map = false;
    report = covercert::certify(input);
  } else {
    std::cerr << "error: provide an input file, --corpus, or --self-test\n";
    return 1;
  }

  const std::string rendered = format == "json"
                                   ? covercert::report_to_json(report).dump(2) + "\n"
                                   : covercert::report_to_text(report);
  if (output_dir.empty()) {
    std::cout << rendered;
  } else {
    const std::string path = output_dir + "/report." + format;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      return 2;
    }
    out << rendered;
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const covercert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case covercert::ErrorCode::InternalCheckFailure:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

// braco: homology and intersection pairings of double branched covers.
//
//   braco <command> <file> [--format text|json] [--out path]
//
// Commands: validate, homology, pairing, signature, det, cover.
// Exit codes: 0 success, 1 invalid input, 2 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "braco/errors.hpp"
#include "braco/io.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw braco::validation_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw braco::validation_error("cannot open output file '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homology and pairings of double branched covers"};
  app.require_subcommand(1);

  static const struct {
    const char* name;
    const char* help;
  } kCommands[] = {
      {"validate", "check a document and report errors and warnings"},
      {"homology", "disoriented homology and the branched double cover"},
      {"pairing", "generator basis and intersection pairing of a band diagram"},
      {"signature", "boundary link signature or cobordism signature jump"},
      {"det", "determinant (torsion order of the degree-0 homology)"},
      {"cover", "chain complex of the branched double cover"},
  };

  std::string file;
  std::string format = "text";
  std::string out_path;
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", file, "input JSON document")->required();
    sub->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "write output to a file instead of stdout");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    braco::io::Document doc = braco::io::parse_input(read_file(file));
    braco::io::CommandResult result = braco::io::run_command(command, doc, format);
    write_output(out_path, result.output);
    return result.exit_code;
  } catch (const braco::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const braco::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "foldloop/band.hpp"
#include "foldloop/braid.hpp"
#include "foldloop/folds.hpp"
#include "foldloop/render.hpp"
#include "foldloop/textio.hpp"

namespace {

constexpr int kExitUsage = 2;   // parse / bounds errors
constexpr int kExitDomain = 3;  // domain errors (EvenLoopCount etc.)

struct WordSource {
  std::string text;
  std::string file;
};

void add_word_source(CLI::App* cmd, WordSource& source,
                     const std::string& name) {
  cmd->add_option(name, source.text, "braid word, e.g. \"m=3 1 -2\"");
  cmd->add_option("--file", source.file, "read the word from a file");
}

foldloop::BraidWord load_word(const WordSource& source) {
  if (!source.file.empty()) {
    std::ifstream in(source.file);
    if (!in) {
      throw foldloop::SyntaxError("cannot read file " + source.file);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return foldloop::parse_word(buffer.str());
  }
  return foldloop::parse_word(source.text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-braid folds of a flat band"};
  app.require_subcommand(1);

  WordSource analyze_word, double_word, render_word;
  WordSource nest_outer, nest_inner;
  int twists = 0;
  int m_max = 6, n_max = 6;
  int fold_loops = 3;
  std::string render_format = "ascii";

  CLI::App* analyze = app.add_subcommand("analyze", "report on a braid word");
  add_word_source(analyze, analyze_word, "word");

  CLI::App* doubled =
      app.add_subcommand("double", "2-cable a word into its boundary circles");
  add_word_source(doubled, double_word, "word");
  doubled->add_option("--twists", twists, "full framing twists (default 0)");

  CLI::App* search =
      app.add_subcommand("search", "exhaustive scan for valid folds");
  search->add_option("--m-max", m_max, "largest loop count to scan");
  search->add_option("--n-max", n_max, "largest crossing count to scan");

  CLI::App* make =
      app.add_subcommand("make-fold", "the alternating fold on m loops");
  make->add_option("m", fold_loops, "odd loop count")->required();

  CLI::App* nest_cmd =
      app.add_subcommand("nest", "thread one fold through another");
  add_word_source(nest_cmd, nest_outer, "outer");
  nest_cmd->add_option("inner", nest_inner.text, "inner fold word");
  nest_cmd->add_option("--inner-file", nest_inner.file,
                       "read the inner word from a file");

  CLI::App* render = app.add_subcommand("render", "draw the closed braid");
  add_word_source(render, render_word, "word");
  render->add_option("--format", render_format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      std::cout << foldloop::report_json(load_word(analyze_word)).dump(2)
                << '\n';
    } else if (doubled->parsed()) {
      foldloop::FlatBand band(load_word(double_word), twists);
      std::cout << foldloop::doubled_json(band).dump(2) << '\n';
    } else if (search->parsed()) {
      std::cout << foldloop::search_json(foldloop::search_folds(m_max, n_max))
                       .dump(2)
                << '\n';
    } else if (make->parsed()) {
      std::cout << foldloop::word_json(foldloop::make_fold(fold_loops)).dump(2)
                << '\n';
    } else if (nest_cmd->parsed()) {
      foldloop::BraidWord result =
          foldloop::nest(load_word(nest_outer), load_word(nest_inner));
      std::cout << foldloop::word_json(result).dump(2) << '\n';
    } else if (render->parsed()) {
      std::cout << foldloop::render_diagram(
          load_word(render_word), render_format == "svg"
                                      ? foldloop::DiagramFormat::svg
                                      : foldloop::DiagramFormat::ascii);
    }
  } catch (const foldloop::SyntaxError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const foldloop::BoundsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const foldloop::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}

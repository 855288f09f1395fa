#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "redinv/bijection.hpp"
#include "redinv/graphs.hpp"
#include "redinv/tableaux.hpp"
#include "redinv/text.hpp"
#include "redinv/verify.hpp"
#include "redinv/words.hpp"

namespace redinv::cli {

namespace {

using json = nlohmann::ordered_json;

// Tableau files hold the filling text, cells separated by ';' or newlines.
// Blank lines and '#' comments are ignored.
std::string read_tableau_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read tableau file '" + path + "'");
  std::string line, joined;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto body = std::string(trim(line));
    while (!body.empty() && body.back() == ';') body.pop_back();
    if (body.empty()) continue;
    if (!joined.empty()) joined += ';';
    joined += body;
  }
  return joined;
}

BalancedTableau load_tableau(const std::string& path) { return BalancedTableau::parse(read_tableau_text(path)); }

// "@file" names a tableau file; anything else is the element text itself.
std::string canonical_element(Model model, const std::string& text) {
  if (model == Model::Words) return ReducedWord::parse(text).to_string();
  const auto body = !text.empty() && text.front() == '@' ? read_tableau_text(text.substr(1)) : text;
  return BalancedTableau::parse(body).to_string();
}

void require_enumerable(const Permutation& w) {
  if (count_reduced_words(w) > kDefaultVertexBudget)
    throw std::length_error(std::to_string(count_reduced_words(w)) + " elements exceed the budget of " +
                            std::to_string(kDefaultVertexBudget));
}

void print_fields(const json& j, std::ostream& out) {
  for (const auto& [key, value] : j.items())
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

struct Options {
  bool json_output = false;
  std::string perm, word, tableau_file, model = "words", from, to, format = "dot", output;
  int n = 0;
  bool exact = false, formula = false, shortcut = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inversion metric on reduced words and standard balanced tableaux", "redinv"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_output, "Machine-readable output");

  const auto model_check = CLI::IsMember({"words", "tableaux"});
  std::function<int()> action;

  auto* enumerate = app.add_subcommand("enumerate", "List R(w) or SBT(w)");
  enumerate->add_option("-w", o.perm, "Permutation, e.g. 4,2,1,5,3")->required();
  enumerate->add_option("--model", o.model)->check(model_check);
  enumerate->callback([&] {
    action = [&] {
      const auto w = Permutation::parse(o.perm);
      require_enumerable(w);
      json j{{"model", o.model}, {"w", w.to_string()}, {"elements", json::array()}};
      if (parse_model(o.model) == Model::Words)
        for (const auto& rho : enumerate_reduced_words(w)) j["elements"].push_back(rho.to_string());
      else
        for (const auto& t : enumerate_sbt(w)) j["elements"].push_back(t.to_string());
      if (o.json_output)
        out << j.dump() << '\n';
      else
        for (const auto& e : j["elements"]) out << e.get<std::string>() << '\n';
      return kOk;
    };
  });

  auto* super = app.add_subcommand("super", "Super-Yamanouchi word or tableau");
  super->add_option("-w", o.perm)->required();
  super->add_option("--model", o.model)->check(model_check);
  super->callback([&] {
    action = [&] {
      const auto w = Permutation::parse(o.perm);
      const auto element =
          parse_model(o.model) == Model::Words ? super_word(w).to_string() : super_tableau(w).to_string();
      if (o.json_output)
        out << json{{"model", o.model}, {"w", w.to_string()}, {"element", element}}.dump() << '\n';
      else
        out << element << '\n';
      return kOk;
    };
  });

  auto* inv = app.add_subcommand("inv", "Inversion number, permutation and Yang-Baxter count");
  auto* inv_word = inv->add_option("--word", o.word);
  inv->add_option("--tableau", o.tableau_file, "Tableau file")->excludes(inv_word);
  inv->require_option(1);
  inv->callback([&] {
    action = [&] {
      json j;
      if (!o.word.empty()) {
        const auto rho = ReducedWord::parse(o.word);
        if (!is_reduced(rho)) throw std::invalid_argument("not a reduced word: " + rho.to_string());
        const auto w = word_to_permutation(rho);
        const auto sup = super_word(w);
        j = {{"w", w.to_string()},
             {"inv", word_inversions(rho, sup)},
             {"perm", pairing_permutation(rho, sup).to_string()},
             {"yang_baxter", rho.empty() ? 0 : yang_baxter_count(rho, sup)}};
      } else {
        const auto t = load_tableau(o.tableau_file);
        j = {{"w", t.permutation().to_string()},
             {"inv", tab_inversions(t)},
             {"perm", tab_permutation(t).to_string()},
             {"yang_baxter", column_inversions(t)}};
      }
      if (o.json_output)
        out << j.dump() << '\n';
      else
        print_fields(j, out);
      return kOk;
    };
  });

  auto* dist = app.add_subcommand("dist", "BFS distance and fewest braid moves between two elements");
  dist->add_option("-w", o.perm)->required();
  dist->add_option("--from", o.from, "Element text, or @file for a tableau")->required();
  dist->add_option("--to", o.to)->required();
  dist->add_option("--model", o.model)->check(model_check);
  dist->callback([&] {
    action = [&] {
      const auto w = Permutation::parse(o.perm);
      const auto model = parse_model(o.model);
      const auto g = build_graph(w, model);
      const auto a = canonical_element(model, o.from), b = canonical_element(model, o.to);
      for (const auto& e : {a, b})
        if (!g.contains(e)) throw std::invalid_argument(e + " is not an element for w=" + w.to_string());
      const json j{{"distance", bfs_distance(g, a, b)}, {"braids", min_braid_count(g, a, b)}};
      if (o.json_output)
        out << j.dump() << '\n';
      else
        print_fields(j, out);
      return kOk;
    };
  });

  auto* diam = app.add_subcommand("diameter", "Diameter of the move graph of the longest permutation");
  diam->add_option("-n", o.n)->required()->check(CLI::Range(1, 12));
  auto* exact = diam->add_flag("--exact", o.exact, "BFS from every vertex (default)");
  auto* formula = diam->add_flag("--formula", o.formula, "Closed form, no graph");
  auto* shortcut = diam->add_flag("--shortcut", o.shortcut, "Two BFS runs from the extreme tableaux");
  exact->excludes(formula)->excludes(shortcut);
  formula->excludes(shortcut);
  diam->callback([&] {
    action = [&] {
      std::string method = o.formula ? "formula" : o.shortcut ? "shortcut" : "exact";
      long long d = 0;
      if (o.formula)
        d = min_inv_w0(o.n);
      else if (o.shortcut)
        d = diameter_via_antipodes(build_graph(longest_permutation(o.n), Model::Tableaux));
      else
        d = diameter(build_graph(longest_permutation(o.n), Model::Words));
      if (o.json_output)
        out << json{{"n", o.n}, {"method", method}, {"diameter", d}}.dump() << '\n';
      else
        out << d << '\n';
      return kOk;
    };
  });

  auto* biject = app.add_subcommand("biject", "Map a word to its tableau or back");
  auto* bij_word = biject->add_option("--word", o.word);
  biject->add_option("--tableau", o.tableau_file)->excludes(bij_word);
  biject->require_option(1);
  biject->callback([&] {
    action = [&] {
      json j;
      if (!o.word.empty()) {
        const auto rho = ReducedWord::parse(o.word);
        if (!is_reduced(rho)) throw std::invalid_argument("not a reduced word: " + rho.to_string());
        const auto t = word_to_tableau(rho);
        j = {{"w", t.permutation().to_string()}, {"word", rho.to_string()}, {"tableau", t.to_string()}};
      } else {
        const auto t = load_tableau(o.tableau_file);
        j = {{"w", t.permutation().to_string()}, {"word", tableau_to_word(t).to_string()}, {"tableau", t.to_string()}};
      }
      j["perm"] = tab_permutation(BalancedTableau::parse(j["tableau"].get<std::string>())).to_string();
      if (o.json_output)
        out << j.dump() << '\n';
      else
        print_fields(j, out);
      return kOk;
    };
  });

  auto add_tableau_map = [&](const char* name, const char* help, BalancedTableau (*f)(const BalancedTableau&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--tableau", o.tableau_file)->required();
    sub->callback([&, f] {
      action = [&, f] {
        const auto t = f(load_tableau(o.tableau_file));
        const json j{{"w", t.permutation().to_string()}, {"tableau", t.to_string()}};
        if (o.json_output)
          out << j.dump() << '\n';
        else
          print_fields(j, out);
        return kOk;
      };
    });
  };
  add_tableau_map("flip", "Transpose and complement a tableau", flip);
  add_tableau_map("psi", "Complement a tableau of the longest permutation", psi);

  auto* graph = app.add_subcommand("graph", "Export the move graph");
  graph->add_option("-w", o.perm)->required();
  graph->add_option("--model", o.model)->check(model_check);
  graph->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("-o", o.output, "Output file (default: standard output)");
  graph->callback([&] {
    action = [&] {
      const auto g = build_graph(Permutation::parse(o.perm), parse_model(o.model));
      const auto text = export_graph(g, parse_export_format(o.format));
      if (o.output.empty()) {
        out << text;
        return kOk;
      }
      std::ofstream file(o.output);
      if (!(file << text)) throw std::invalid_argument("cannot write '" + o.output + "'");
      const json j{{"file", o.output}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
      if (o.json_output)
        out << j.dump() << '\n';
      else
        print_fields(j, out);
      return kOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "Check every invariant exhaustively over S_n");
  verify->add_option("-n", o.n)->required()->check(CLI::Range(1, 5));
  verify->callback([&] {
    action = [&] {
      const auto report = verify_all(o.n);
      if (o.json_output) {
        json checks = json::array();
        for (const auto& c : report.checks())
          checks.push_back({{"name", c.name},
                            {"pass", c.pass},
                            {"informational", c.informational},
                            {"counterexamples", c.counterexamples}});
        out << json{{"n", o.n}, {"passed", report.passed()}, {"checks", checks}}.dump() << '\n';
      } else {
        out << report.to_text();
      }
      return report.passed() ? kOk : kVerificationFailed;
    };
  });

  std::vector<const char*> argv{"redinv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace redinv::cli

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "thetawpo/collapse_map.hpp"
#include "thetawpo/errors.hpp"
#include "thetawpo/gap_trees.hpp"
#include "thetawpo/ordinal_ops.hpp"
#include "thetawpo/ordinal_text.hpp"
#include "thetawpo/tree_terms.hpp"
#include "thetawpo/verify.hpp"
#include "thetawpo/wpo.hpp"

using namespace thetawpo;
using json = nlohmann::ordered_json;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

struct Options {
  bool json = false;
  bool dot = false;
  bool unstructured = false;
  bool countable = false;
  std::uint64_t seed = 1;
  std::optional<std::size_t> size;
  std::optional<std::size_t> samples;
  std::optional<std::string> system;
  std::string w = "B(_)";
  std::optional<std::string> poset;
};

/// Bad input tied to one argument, reported with a caret under the position.
struct InputError {
  std::string message;
  std::string text;
  std::optional<std::size_t> position;
};

struct Result {
  std::string text;
  json value;
  int code = kTrue;
  std::vector<std::string> dots;
};

template <typename F>
auto parse_input(const std::string& text, F&& f) -> decltype(f(text)) {
  try {
    return f(text);
  } catch (const ParseError& e) {
    throw InputError{e.what(), text, e.position()};
  }
}

Result decision(bool b) { return Result{b ? "true" : "false", b, b ? kTrue : kFalse, {}}; }

class Cli {
 public:
  explicit Cli(Options& o) : o_(o) {}

  System system() const {
    if (!o_.system) return System::Full;
    auto s = parse_system(*o_.system);
    if (!s) throw InputError{"unknown system '" + *o_.system + "' (use full or restricted)", *o_.system, std::nullopt};
    return *s;
  }

  Ordinal ord(const std::string& text) const {
    System sys = system();
    return parse_input(text, [sys](const std::string& s) { return parse_ordinal(s, sys); });
  }

  WExpr wexpr() const {
    return parse_input(o_.w, [](const std::string& s) { return parse_wexpr(s); });
  }

  TreeTerm term(const std::string& text, const WExpr& w) const {
    return parse_input(text, [&w](const std::string& s) { return parse_tree_term(s, w); });
  }

  LabeledTree labeled(const std::string& text) const {
    return parse_input(text, [](const std::string& s) { return parse_labeled_tree(s); });
  }

  Result tree_result(TreeTerm t, const WExpr& w) const {
    std::string s = to_string(t, w);
    return Result{s, s, kTrue, {to_dot(t, w)}};
  }

  Result labeled_result(const LabeledTree& t) const {
    std::string s = to_string(t);
    return Result{s, s, kTrue, {to_dot(t)}};
  }

  /// Runs `h` once on `args`, or once per tab-separated stdin line when no
  /// arguments were given and the command takes some.
  int run(const std::string& command, const std::vector<std::string>& args, std::size_t arity,
          const std::function<Result(const std::vector<std::string>&)>& h) {
    if (arity > 0 && args.empty()) {
      int code = kTrue;
      std::string line;
      while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1)
          fields.push_back(line.substr(start, tab - start));
        fields.push_back(line.substr(start));
        code = std::max(code, once(command, fields, arity, h));
      }
      return code;
    }
    return once(command, args, arity, h);
  }

 private:
  int once(const std::string& command, const std::vector<std::string>& args, std::size_t arity,
           const std::function<Result(const std::vector<std::string>&)>& h) {
    try {
      if (args.size() != arity)
        throw InputError{command + " takes " + std::to_string(arity) + " argument(s), got " + std::to_string(args.size()), "",
                         std::nullopt};
      Result r = h(args);
      emit(command, args, r);
      return r.code;
    } catch (const InputError& e) {
      report(command, args, e);
    } catch (const std::runtime_error& e) {
      report(command, args, InputError{e.what(), "", std::nullopt});
    }
    return kError;
  }

  void emit(const std::string& command, const std::vector<std::string>& args, const Result& r) const {
    if (o_.json) {
      std::cout << json{{"command", command}, {"inputs", args}, {"result", r.value}}.dump() << "\n";
    } else if (o_.dot && !r.dots.empty()) {
      for (const std::string& d : r.dots) std::cout << d;
    } else if (!r.text.empty()) {
      std::cout << r.text << (r.text.back() == '\n' ? "" : "\n");
    }
  }

  void report(const std::string& command, const std::vector<std::string>& args, const InputError& e) const {
    if (o_.json) {
      json err{{"message", e.message}};
      if (e.position) err["position"] = *e.position;
      std::cout << json{{"command", command}, {"inputs", args}, {"error", err}}.dump() << "\n";
      return;
    }
    std::cerr << "error: " << e.message << "\n";
    if (e.position && !e.text.empty()) std::cerr << "  " << e.text << "\n  " << std::string(*e.position, ' ') << "^\n";
  }

  Options& o_;
};

std::vector<std::size_t> parse_sequence(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '[' || text[i] == ']')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw InputError{"expected a natural number", text, i};
    std::size_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
    out.push_back(v);
    skip();
  }
  return out;
}

std::string join_ordinals(const std::vector<Ordinal>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s + "}";
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  Cli cli(o);
  CLI::App app{"Ordinal notations, well-partial-order combinators, tree terms and gap embeddings."};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "One JSON record per line");
  app.add_flag("--dot", o.dot, "Graphviz output for tree results");
  app.add_option("--seed", o.seed, "Seed for randomized suites");
  app.add_option("--size", o.size, "Size or complexity bound");
  app.add_option("--samples", o.samples, "Random sample count");
  app.add_option("--system", o.system, "full or restricted");
  app.add_option("--w", o.w, "Constructor expression for tree commands (default B(_))");
  app.add_option("--poset", o.poset, "Finite poset for higman, e.g. P{3;0<1}; default the usual order on naturals");
  app.add_flag("--unstructured", o.unstructured, "Gap embedding without the left-to-right condition");
  app.add_flag("--countable", o.countable, "ord enum: countable terms only");

  int code = kTrue;
  std::vector<std::string> args;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::size_t arity,
                  std::function<Result(const std::vector<std::string>&)> h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("args", args, "Arguments; omitted means tab-separated lines on stdin");
    std::string command = (parent == &app ? "" : parent->get_name() + " ") + name;
    sub->callback([&, command, arity, h] { code = cli.run(command, args, arity, h); });
  };

  // ord
  CLI::App* ord = app.add_subcommand("ord", "Ordinal terms");
  ord->require_subcommand(1);
  leaf(ord, "cmp", "Compare two terms: LT, EQ or GT", 2, [&](const auto& a) {
    std::string s = to_string(compare(cli.ord(a[0]), cli.ord(a[1])));
    return Result{s, s, kTrue, {}};
  });
  leaf(ord, "k", "Largest coefficient k(a)", 1, [&](const auto& a) {
    std::string s = to_string(max_coefficient(cli.ord(a[0])));
    return Result{s, s, kTrue, {}};
  });
  leaf(ord, "kset", "Coefficient set K(a)", 1, [&](const auto& a) {
    std::vector<Ordinal> ks = coefficient_set(cli.ord(a[0]));
    json v = json::array();
    for (Ordinal k : ks) v.push_back(to_string(k));
    return Result{join_ordinals(ks), v, kTrue, {}};
  });
  leaf(ord, "sum", "Natural sum", 2, [&](const auto& a) {
    std::string s = to_string(natural_sum(cli.ord(a[0]), cli.ord(a[1]), cli.system()));
    return Result{s, s, kTrue, {}};
  });
  leaf(ord, "prod", "Natural product", 2, [&](const auto& a) {
    std::string s = to_string(natural_product(cli.ord(a[0]), cli.ord(a[1]), cli.system()));
    return Result{s, s, kTrue, {}};
  });
  leaf(ord, "g", "The tree term g(a) over B(_) of a countable term", 1, [&](const auto& a) {
    return cli.tree_result(ord_to_tree(cli.ord(a[0])), WExpr::btree(WExpr::hole()));
  });
  leaf(ord, "complexity", "G (full) or G' (restricted)", 1, [&](const auto& a) {
    unsigned g = complexity(cli.ord(a[0]), cli.system());
    return Result{std::to_string(g), g, kTrue, {}};
  });
  leaf(ord, "validate", "Check a term against the selected system", 1, [&](const auto& a) {
    try {
      parse_ordinal(a[0], cli.system());
      return Result{"valid", json{{"valid", true}}, kTrue, {}};
    } catch (const InvalidTermError& e) {
      return Result{"invalid (" + e.clause() + "): " + e.what(), json{{"valid", false}, {"clause", e.clause()}, {"detail", e.what()}},
                    kFalse, {}};
    } catch (const ParseError& e) {
      throw InputError{e.what(), a[0], e.position()};
    }
  });
  leaf(ord, "enum", "Every term up to complexity --size (default 2)", 0, [&](const auto&) {
    EnumBounds b{static_cast<unsigned>(o.size.value_or(2)), o.countable, 2, 2, 2};
    std::string text;
    json v = json::array();
    for (Ordinal t : enumerate_terms(cli.system(), b)) {
      text += to_string(t) + "\n";
      v.push_back(to_string(t));
    }
    return Result{text, v, kTrue, {}};
  });

  // tree
  CLI::App* tree = app.add_subcommand("tree", "Tree terms over --w");
  tree->require_subcommand(1);
  leaf(tree, "leq", "Decide s <= t", 2, [&](const auto& a) {
    WExpr w = cli.wexpr();
    return decision(t_leq(cli.term(a[0], w), cli.term(a[1], w), w));
  });
  auto term_list = [&](const std::vector<TreeTerm>& ts, const WExpr& w) {
    Result r;
    r.value = json::array();
    for (TreeTerm t : ts) {
      r.text += to_string(t, w) + "\n";
      r.value.push_back(to_string(t, w));
      r.dots.push_back(to_dot(t, w));
    }
    return r;
  };
  leaf(tree, "enum", "Every term with at most --size nodes (default 5)", 0, [&](const auto&) {
    WExpr w = cli.wexpr();
    return term_list(enumerate_trees(w, o.size.value_or(5)), w);
  });
  leaf(tree, "leftset", "Terms s with at most --size nodes (default 5) and t not below s", 1, [&](const auto& a) {
    WExpr w = cli.wexpr();
    return term_list(left_set_bounded(cli.term(a[0], w), w, o.size.value_or(5)), w);
  });

  // gap
  CLI::App* gap = app.add_subcommand("gap", "Labelled trees and gap embedding");
  gap->require_subcommand(1);
  leaf(gap, "leq", "Decide s <=gap t", 2, [&](const auto& a) {
    return decision(gap_leq(cli.labeled(a[0]), cli.labeled(a[1]), !o.unstructured));
  });
  leaf(gap, "iso-to", "Labelled tree of a tree term over B(_)", 1, [&](const auto& a) {
    return cli.labeled_result(to_gap(cli.term(a[0], WExpr::btree(WExpr::hole()))));
  });
  leaf(gap, "iso-from", "Tree term over B(_) of a labelled tree", 1, [&](const auto& a) {
    return cli.tree_result(from_gap(cli.labeled(a[0])), WExpr::btree(WExpr::hole()));
  });
  leaf(gap, "check-t2bar", "Membership in the 0/1 class", 1, [&](const auto& a) { return decision(in_t2bar(cli.labeled(a[0]))); });

  // higman
  leaf(&app, "higman", "Higman order on two sequences of naturals", 2, [&](const auto& a) {
    std::vector<std::size_t> xs = parse_sequence(a[0]), ys = parse_sequence(a[1]);
    if (!o.poset) return decision(higman_leq<std::size_t>(xs, ys, [](std::size_t x, std::size_t y) { return x <= y; }));
    WExpr pw = parse_input(*o.poset, [](const std::string& s) { return parse_wexpr(s); });
    if (pw.kind() != WKind::Const) throw InputError{"--poset must be a poset literal P{n;...}", *o.poset, std::nullopt};
    const FinitePoset& po = pw.poset();
    for (const auto* v : {&xs, &ys})
      for (std::size_t x : *v)
        if (x >= po.size()) throw InputError{"element " + std::to_string(x) + " is outside the poset", *o.poset, std::nullopt};
    return decision(higman_leq<std::size_t>(xs, ys, [&po](std::size_t x, std::size_t y) { return po.leq(x, y); }));
  });

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite, or all of them");
  std::string suite;
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->callback([&] {
    SuiteParams p;
    p.size = o.size;
    p.samples = o.samples;
    p.seed = o.seed;
    if (o.system) {
      p.system = parse_system(*o.system);
      if (!p.system) {
        std::cerr << "error: unknown system '" << *o.system << "'\n";
        code = kError;
        return;
      }
    }
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    for (const std::string& n : names) {
      try {
        SuiteReport r = run_suite(n, p);
        std::cout << (o.json ? to_json(r).dump() + "\n" : to_text(r));
        if (!r.passed()) code = std::max(code, kFalse);
      } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = kError;
      }
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }
  return code;
}

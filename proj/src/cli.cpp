#include "twistbt/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>

#include "twistbt/config.hpp"
#include "twistbt/dsl.hpp"
#include "twistbt/kuznetsov.hpp"
#include "twistbt/subgroups.hpp"

namespace twistbt {

namespace {

using nlohmann::json;

struct Options {
  std::string config;
  bool json = false;
  std::string expr;
  std::string other;
  std::string point;
  std::string brick;
  std::string label;
  bool verify = false;
  std::size_t n = 2;
  std::size_t bits_per_color = WitnessBudget{}.bits_per_color;
  std::size_t max_candidates = WitnessBudget{}.max_candidates;
  std::string presentation;
  std::string word;
  std::size_t max_length = KuznetsovBudget{}.max_length;
  std::size_t max_states = KuznetsovBudget{}.max_states;
};

class Runner {
 public:
  Runner(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

  int run(const std::string& command) {
    if (command == "eval") return eval();
    if (command == "eq") return eq();
    if (command == "act") return act();
    if (command == "twist") return twist();
    if (command == "in-kernel") return in_kernel();
    if (command == "retract") return retract();
    if (command == "decompose") return decompose();
    if (command == "witness") return witness();
    if (command == "gens") return gens();
    if (command == "analyze") return analyze();
    if (command == "kuznetsov") return kuznetsov();
    if (command == "selftest") return selftest();
    throw Error("unknown command '" + command + "'");
  }

 private:
  const Groupoid& sv() {
    if (!sv_) {
      if (o_.config.empty()) throw Error("this command needs --config");
      sv_.emplace(load_label_group_from(o_.config));
    }
    return *sv_;
  }
  const LabelGroup& group() { return sv().labels(); }

  std::string expression_text(const std::string& given) {
    if (!given.empty()) return given;
    return std::string(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
  }
  Quadruple element() { return parse_element(sv(), expression_text(o_.expr)); }
  std::string show(const Quadruple& q) { return format_element(sv(), q); }

  void emit(const std::string& command, json j, const std::string& text) {
    if (o_.json) {
      j["command"] = command;
      out_ << j.dump(2) << '\n';
    } else {
      out_ << text << '\n';
    }
  }

  int eval() {
    const Quadruple q = element();
    emit("eval", {{"element", show(q)}, {"leaves", q.size()}}, show(q));
    return exit_ok;
  }

  int eq() {
    const Quadruple a = parse_element(sv(), o_.expr);
    const Quadruple b = parse_element(sv(), o_.other);
    const bool same = sv().equal(a, b);
    json j{{"equal", same}, {"witness", nullptr}};
    std::string text = same ? "true" : "false";
    if (!same) {
      if (auto p = sv().distinguishing_point(a, b)) {
        j["witness"] = format_point(group(), *p);
        text += "\nwitness: " + format_point(group(), *p);
      }
    }
    emit("eq", j, text);
    return same ? exit_ok : exit_false;
  }

  CantorPoint point_or_basepoint() { return o_.point.empty() ? CantorPoint{} : parse_point(group(), o_.point); }

  int act() {
    const Quadruple h = element();
    const std::string p = format_point(group(), sv().act(h, point_or_basepoint()));
    emit("act", {{"point", p}}, p);
    return exit_ok;
  }

  int twist() {
    const Quadruple h = element();
    const std::string w = group().format_word(group().normalize(sv().germinal_twist(h, point_or_basepoint())));
    emit("twist", {{"label", w}}, w);
    return exit_ok;
  }

  int in_kernel() {
    const bool inside = in_canonical_kernel(sv(), element());
    emit("in-kernel", {{"in_kernel", inside}}, inside ? "true" : "false");
    return inside ? exit_ok : exit_false;
  }

  int retract() {
    const WreathElement w = quasi_retract(sv(), element(), point_or_basepoint());
    json vec = json::object();
    for (const auto& [c, v] : w.vector) {
      if (v != 0) vec[group().color_name(c)] = v;
    }
    emit("retract", {{"vector", vec}, {"label", group().format_word(group().normalize(w.label))}},
         format_wreath(group(), w));
    return exit_ok;
  }

  int decompose() {
    const Quadruple h = element();
    const KernelDecomposition d = sk_commutator_decomposition(sv(), h);
    json j{{"first", {{"c", show(d.first.c)}, {"d", show(d.first.d)}}},
           {"second", {{"c", show(d.second.c)}, {"d", show(d.second.d)}}},
           {"verified", nullptr}};
    std::string text = "c1 = " + show(d.first.c) + "\nd1 = " + show(d.first.d) + "\nc2 = " + show(d.second.c) +
                       "\nd2 = " + show(d.second.d);
    int status = exit_ok;
    if (o_.verify) {
      const Quadruple back =
          sv().multiply(sv().commutator(d.first.c, d.first.d), sv().commutator(d.second.c, d.second.d));
      const bool ok = sv().equal(back, h);
      j["verified"] = ok;
      text += std::string("\nverified: ") + (ok ? "true" : "false");
      if (!ok) status = exit_false;
    }
    emit("decompose", j, text);
    return status;
  }

  int witness() {
    const Quadruple h = element();
    const Brick psi = parse_brick(group(), o_.brick);
    const Word k = group().parse_word(o_.label);
    const ConjugacyWord w =
        normal_generation_witness(sv(), h, psi, k, WitnessBudget{o_.bits_per_color, o_.max_candidates});
    json terms = json::array();
    for (const ConjugacyTerm& t : w.terms) terms.push_back({{"inverse", t.inverse}, {"conjugator", show(t.conjugator)}});
    json j{{"terms", terms}, {"target", show(deferment(sv(), psi, k))}, {"verified", nullptr}};
    std::string text = format_conjugacy_word(sv(), w);
    int status = exit_ok;
    if (o_.verify) {
      const bool ok = sv().equal(w.evaluate(sv(), h), deferment(sv(), psi, k));
      j["verified"] = ok;
      text += std::string("\nverified: ") + (ok ? "true" : "false");
      if (!ok) status = exit_false;
    }
    emit("witness", j, text);
    return status;
  }

  int gens() {
    json list = json::array();
    std::string text;
    for (const NamedElement& e : generating_set(sv())) {
      list.push_back({{"name", e.name}, {"element", show(e.element)}});
      if (!text.empty()) text += '\n';
      text += e.name + ": " + show(e.element);
    }
    emit("gens", {{"generators", list}}, text);
    return exit_ok;
  }

  int analyze() {
    const ActionReport r = analyze_finite_action(group(), o_.n);
    json kernel = json::array();
    for (const Word& w : r.kernel_generators) kernel.push_back(group().format_word(w));
    json stabilizers = json::array();
    std::string text = "group order: " + std::to_string(r.group_order) +
                       "\ncolors: " + std::to_string(r.color_count) +
                       "\nkernel order: " + std::to_string(r.kernel_order) + "\norbit counts:";
    for (std::size_t c : r.orbit_counts) text += " " + std::to_string(c);
    for (const SubsetStabilizer& s : r.stabilizers) {
      json subset = json::array();
      std::string names;
      for (Color c : s.subset) {
        subset.push_back(group().color_name(c));
        names += (names.empty() ? "" : ", ") + group().color_name(c);
      }
      stabilizers.push_back({{"subset", subset}, {"orbit_size", s.orbit_size}, {"stabilizer_order", s.stabilizer_order}});
      text += "\nstabilizer {" + names + "}: orbit " + std::to_string(s.orbit_size) + ", order " +
              std::to_string(s.stabilizer_order);
    }
    text += std::string("\nfiniteness clauses: ") + (r.finiteness_clauses_hold ? "hold" : "not certified");
    if (!r.note.empty()) text += "\nnote: " + r.note;
    emit("analyze",
         {{"group_order", r.group_order},
          {"color_count", r.color_count},
          {"kernel_order", r.kernel_order},
          {"kernel_generators", kernel},
          {"orbit_counts", r.orbit_counts},
          {"stabilizers", stabilizers},
          {"finiteness_clauses_hold", r.finiteness_clauses_hold},
          {"note", r.note}},
         text);
    return exit_ok;
  }

  int kuznetsov() {
    if (o_.presentation.empty()) throw Error("kuznetsov needs --presentation");
    const FinitePresentation p = load_presentation_from(o_.presentation);
    const Word w = p.parse_word(expression_text(o_.word));
    const Verdict v = decide_word(p, w, KuznetsovBudget{o_.max_length, o_.max_states});
    auto trace_json = [&](const RewriteTrace& t) {
      json steps = json::array();
      for (const RewriteStep& s : t) {
        steps.push_back({{"inserted", p.format_word(s.inserted)}, {"position", s.position}, {"result", p.format_word(s.result)}});
      }
      return steps;
    };
    auto trace_text = [&](const RewriteTrace& t, const std::string& indent) {
      std::string s;
      for (const RewriteStep& step : t) {
        s += "\n" + indent + "insert " + p.format_word(step.inserted) + " at " + std::to_string(step.position) +
             " -> " + p.format_word(step.result);
      }
      return s;
    };
    json night = json::array();
    std::string text = to_string(v.kind) + "\nrounds: " + std::to_string(v.rounds) +
                       "\nstates: " + std::to_string(v.states_explored);
    if (v.kind == Verdict::Kind::trivial) text += "\nday trace:" + trace_text(v.day_trace, "  ");
    for (std::size_t x = 0; x < v.night_traces.size(); ++x) {
      night.push_back(trace_json(v.night_traces[x]));
      text += "\nnight trace for " + p.generators()[x] + ":" + trace_text(v.night_traces[x], "  ");
    }
    emit("kuznetsov",
         {{"verdict", to_string(v.kind)},
          {"rounds", v.rounds},
          {"states_explored", v.states_explored},
          {"day_trace", trace_json(v.day_trace)},
          {"night_traces", night},
          {"verified", verify_verdict(p, w, v)}},
         text);
    return v.kind == Verdict::Kind::budget_exhausted ? exit_budget : exit_ok;
  }

  int selftest() {
    std::vector<std::pair<std::string, bool>> checks;
    auto x = [](Color c) { return Tree::simple_split(c); };
    auto single = [](Tree t) { return Forest::single(std::move(t)); };
    {
      auto s3 = make_symmetric(3);
      Groupoid g(s3);
      bool cross = true, twist = true;
      for (Color s : s3->colors()) {
        for (Color t : s3->colors()) {
          if (s == t) continue;
          const Quadruple q = g.make(single(Tree::split(s, x(t), x(t))), Permutation::from_one_based(std::vector<std::size_t>{1, 3, 2, 4}),
                                     std::vector<Word>(4), single(Tree::split(t, x(s), x(s))));
          cross = cross && g.equal(q, g.identity());
        }
        for (const char* w : {"s", "c", "s c", "c c s"}) {
          const Word a = s3->parse_word(w);
          const Quadruple rhs = g.make(single(x(s3->act(a, s))), Permutation::identity(2), {a, a}, single(x(s)));
          twist = twist && g.equal(g.iota(a), rhs);
        }
      }
      checks.emplace_back("cross relation", cross);
      checks.emplace_back("twist relation", twist);
    }
    {
      auto three = make_trivial(3);
      std::const_pointer_cast<LabelGroup>(three)->set_color_names({"r", "b", "g"});
      const Tree mf = resolve_tree(*three, parse_tree_syntax("(r (b (g . .) .) (b (r . .) .))"));
      const auto leaves = tree_leaves(mf);
      checks.emplace_back("leaf address", leaves.size() == 6 && leaves[3] == parse_brick(*three, "{r: 10, b: 0}"));
    }
    {
      auto group = make_product_kernel(make_trivial(3), KernelFactor{KernelFactor::Kind::free, 4, {}, {}},
                                       {"g1", "g2", "g3", "g4"});
      std::const_pointer_cast<LabelGroup>(group)->set_color_names({"r", "b", "g"});
      Groupoid g(group);
      const Quadruple h =
          parse_element(g, "quad((r (b . .) (g . .)), [3,1,4,2], [g1, g2, g3, g4], (r (b (r . .) .) .))");
      const Word twist = g.germinal_twist(h, parse_point(*group, "{r: 01(0), b: 0(0)}"));
      checks.emplace_back("germinal twist", group->format_word(twist) == "g2");
    }
    {
      const FinitePresentation p = FinitePresentation::parse({"a"}, {"a a a"});
      const Verdict v = decide_word(p, p.parse_word("a"));
      checks.emplace_back("day and night search", v.kind == Verdict::Kind::nontrivial && verify_verdict(p, p.parse_word("a"), v));
    }
    bool all = true;
    json list = json::array();
    std::string text;
    for (const auto& [name, ok] : checks) {
      all = all && ok;
      list.push_back({{"name", name}, {"passed", ok}});
      text += std::string(ok ? "ok   " : "FAIL ") + name + "\n";
    }
    text += all ? "all checks passed" : "some checks failed";
    emit("selftest", {{"checks", list}, {"passed", all}}, text);
    return all ? exit_ok : exit_false;
  }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  std::optional<Groupoid> sv_;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Arithmetic in twisted Brin-Thompson groups", "twistbt"};
  app.require_subcommand(1);
  app.add_option("--config", o.config, "label group JSON file, or inline JSON");
  app.add_flag("--json", o.json, "machine readable output");

  auto expr_option = [&](CLI::App* sub, const char* what) {
    sub->add_option("-e,--expr", o.expr, what);
  };
  auto* eval = app.add_subcommand("eval", "print the reduced quadruple of an expression");
  expr_option(eval, "element expression (default: stdin)");
  auto* eq = app.add_subcommand("eq", "decide equality of two expressions");
  eq->add_option("a", o.expr)->required();
  eq->add_option("b", o.other)->required();
  auto* act = app.add_subcommand("act", "image of a point");
  expr_option(act, "element expression");
  act->add_option("-p,--point", o.point, "point, default the basepoint");
  auto* twist = app.add_subcommand("twist", "germinal twist at a point");
  expr_option(twist, "element expression");
  twist->add_option("-p,--point", o.point, "point, default the basepoint");
  auto* kernel = app.add_subcommand("in-kernel", "membership in the canonical kernel");
  expr_option(kernel, "element expression");
  auto* retract = app.add_subcommand("retract", "quasi-retraction to the wreath product");
  expr_option(retract, "element expression");
  retract->add_option("-p,--point", o.point, "point, default the basepoint");
  auto* decompose = app.add_subcommand("decompose", "kernel element as a product of two commutators");
  expr_option(decompose, "element expression");
  decompose->add_flag("--verify", o.verify, "multiply back and compare");
  auto* witness = app.add_subcommand("witness", "deferment as a product of conjugates of h");
  expr_option(witness, "element h");
  witness->add_option("--brick", o.brick, "brick")->required();
  witness->add_option("--label", o.label, "kernel label")->required();
  witness->add_flag("--verify", o.verify, "evaluate and compare");
  witness->add_option("--bits", o.bits_per_color, "search depth per color");
  witness->add_option("--candidates", o.max_candidates, "search budget");
  auto* gens = app.add_subcommand("gens", "generating set (finite color sets)");
  auto* analyze = app.add_subcommand("analyze", "orbit and stabilizer data of a finite action");
  analyze->add_option("-n", o.n, "tuple size, 1..3")->check(CLI::Range(1, 3));
  auto* kuz = app.add_subcommand("kuznetsov", "day and night word problem search");
  kuz->add_option("--presentation", o.presentation, "presentation JSON file, or inline JSON")->required();
  kuz->add_option("--word", o.word, "word (default: stdin)");
  kuz->add_option("--budget", o.max_length, "maximum word length");
  kuz->add_option("--states", o.max_states, "maximum states per search");
  auto* selftest = app.add_subcommand("selftest", "relation and worked example smoke checks");
  (void)gens;
  (void)selftest;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Runner runner(o, in, out);
    return runner.run(command);
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    if (o.json) out << json{{"command", command}, {"error", e.what()}, {"budget_exhausted", true}}.dump(2) << '\n';
    return exit_budget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    if (o.json) {
      out << json{{"command", command},
                  {"error", e.what()},
                  {"line", e.line()},
                  {"column", e.column()},
                  {"expected", e.expected()}}
                 .dump(2)
          << '\n';
    }
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (o.json) out << json{{"command", command}, {"error", e.what()}}.dump(2) << '\n';
    return exit_usage;
  }
}

}  // namespace twistbt
